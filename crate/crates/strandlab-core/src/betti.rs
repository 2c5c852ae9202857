//! Graded Betti tables via Koszul homology.
//!
//! beta_{i,j} is computed as the dimension of the degree-j slice of the i-th
//! homology of the Koszul complex on x1..xn tensored with the module. No
//! minimal free resolution is ever built: each entry needs only two sparse
//! ranks,
//!
//! ```text
//! beta_{i,j} = dim(Λ^i ⊗ M_{j-i}) - rank(d_i)_j - rank(d_{i+1})_j.
//! ```
//!
//! Tables carry the degree bound they were computed under and a completeness
//! flag; invariants refuse to work on incomplete tables.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::field::SparseMatrix;
use crate::modpres::{truncation_bound, DegreeSlice, HilbertData, Presentation};

/// A finitely supported Betti table: (homological degree, internal degree)
/// -> count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    pub n: usize,
    pub p: u64,
    pub bound: i64,
    pub complete: bool,
    entries: BTreeMap<(u32, i64), u64>,
}

impl BettiTable {
    pub fn new(n: usize, p: u64, bound: i64, complete: bool) -> Self {
        BettiTable {
            n,
            p,
            bound,
            complete,
            entries: BTreeMap::new(),
        }
    }

    pub fn set(&mut self, i: u32, j: i64, beta: u64) {
        if beta > 0 {
            self.entries.insert((i, j), beta);
        }
    }

    pub fn get(&self, i: u32, j: i64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> &BTreeMap<(u32, i64), u64> {
        &self.entries
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_homological(&self) -> Option<u32> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn max_internal(&self) -> Option<i64> {
        self.entries.keys().map(|&(_, j)| j).max()
    }

    /// Canonical JSON rendering (the documented schema).
    pub fn to_json(&self) -> String {
        let doc = BettiTableJson::from(self);
        serde_json::to_string(&doc).expect("serialization cannot fail")
    }

    /// Hex SHA-256 of the canonical JSON form.
    pub fn digest(&self) -> String {
        let value: serde_json::Value =
            serde_json::to_value(BettiTableJson::from(self)).expect("serialization cannot fail");
        let canonical = serde_json::to_string(&value).expect("serialization cannot fail");
        let mut h = Sha256::new();
        h.update(canonical.as_bytes());
        hex_string(&h.finalize())
    }
}

pub(crate) fn hex_string(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        let hi = b >> 4;
        let lo = b & 0xf;
        for d in [hi, lo] {
            s.push(char::from_digit(d as u32, 16).unwrap());
        }
    }
    s
}

#[derive(Serialize, Deserialize)]
struct BettiEntryJson {
    i: u32,
    j: i64,
    beta: u64,
}

#[derive(Serialize, Deserialize)]
pub(crate) struct BettiTableJson {
    n: usize,
    p: u64,
    complete: bool,
    entries: Vec<BettiEntryJson>,
}

impl From<&BettiTable> for BettiTableJson {
    fn from(t: &BettiTable) -> Self {
        BettiTableJson {
            n: t.n,
            p: t.p,
            complete: t.complete,
            entries: t
                .entries
                .iter()
                .map(|(&(i, j), &beta)| BettiEntryJson { i, j, beta })
                .collect(),
        }
    }
}

/// Parses the canonical JSON form back into a table (the bound is not part
/// of the schema; the caller supplies it, e.g. from cache metadata).
pub fn table_from_json(s: &str, bound: i64) -> Result<BettiTable> {
    let doc: BettiTableJson =
        serde_json::from_str(s).map_err(|e| Error::Invalid(alloc::format!("bad table JSON: {e}")))?;
    let mut t = BettiTable::new(doc.n, doc.p, bound, doc.complete);
    for e in doc.entries {
        t.set(e.i, e.j, e.beta);
    }
    Ok(t)
}

/// Derived numerical invariants of a complete table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSet {
    /// Castelnuovo-Mumford regularity: max j - i over the support.
    pub reg: Option<i64>,
    /// Projective dimension: max i over the support.
    pub pdim: Option<u32>,
    /// n - pdim (Auslander-Buchsbaum).
    pub depth: Option<i64>,
    /// Generation degree: max j with beta_{0,j} != 0.
    pub t0: Option<i64>,
    /// Top nonzero degree of the module itself, when it is bounded.
    pub maxdeg: Option<i64>,
}

/// Koszul-homology Betti table of `m`, exact in internal degrees <= `bound`.
pub fn koszul_betti(m: &Presentation, bound: i64) -> Result<BettiTable> {
    let n = m.nvars();
    let field = m.field();
    let complete = match truncation_bound(m) {
        Ok(b) => bound >= b,
        Err(_) => false,
    };
    let mut table = BettiTable::new(n, field.p(), bound, complete);
    if m.rank() == 0 {
        return Ok(table);
    }

    // degreewise slices with early stop once the module provably vanishes
    let lo = m.min_twist();
    let max_twist = m.max_twist();
    let mut slices: BTreeMap<i64, DegreeSlice> = BTreeMap::new();
    let mut d = lo;
    while d <= bound {
        let slice = m.degree_basis(d)?;
        let empty = slice.is_empty();
        slices.insert(d, slice);
        if empty && d >= max_twist {
            break; // all higher slices vanish
        }
        d += 1;
    }
    let dim = |d: i64| slices.get(&d).map_or(0, |s| s.len());

    // multiplication matrices between consecutive nonzero slices
    let mut mult: BTreeMap<(usize, i64), SparseMatrix> = BTreeMap::new();
    for (&d, slice) in &slices {
        if dim(d) == 0 || dim(d + 1) == 0 {
            continue;
        }
        let Some(next) = slices.get(&(d + 1)) else { continue };
        for v in 0..n {
            mult.insert((v, d), m.multiplication_map_between(v, slice, next)?);
        }
    }

    let subsets: Vec<Vec<Vec<usize>>> = (0..=n).map(|i| index_subsets(n, i)).collect();
    let subset_pos: Vec<BTreeMap<Vec<usize>, usize>> = subsets
        .iter()
        .map(|list| {
            list.iter()
                .cloned()
                .enumerate()
                .map(|(k, s)| (s, k))
                .collect()
        })
        .collect();

    // rank of the Koszul differential d_i in internal degree j
    let mut rank_memo: BTreeMap<(u32, i64), usize> = BTreeMap::new();
    let mut rank_of = |i: u32, j: i64| -> usize {
        if let Some(&r) = rank_memo.get(&(i, j)) {
            return r;
        }
        let r = if i == 0 || i as usize > n {
            0
        } else {
            let i_us = i as usize;
            let dom_deg = j - i as i64;
            let cod_deg = dom_deg + 1;
            let (dd, cd) = (dim(dom_deg), dim(cod_deg));
            if dd == 0 || cd == 0 {
                0
            } else {
                let dom_blocks = &subsets[i_us];
                let cod_pos = &subset_pos[i_us - 1];
                let mut mat =
                    SparseMatrix::zero(cod_pos.len() * cd, dom_blocks.len() * dd, field);
                for (bt, t_set) in dom_blocks.iter().enumerate() {
                    for (k, &var) in t_set.iter().enumerate() {
                        let mut rest = t_set.clone();
                        rest.remove(k);
                        let br = cod_pos[&rest];
                        let sign_neg = k % 2 == 1;
                        let block = &mult[&(var, dom_deg)];
                        for r in 0..block.rows {
                            for &(c, val) in block.row(r) {
                                let v = if sign_neg { field.neg(val) } else { val };
                                mat.add_entry(br * cd + r, bt * dd + c, v);
                            }
                        }
                    }
                }
                mat.rank()
            }
        };
        rank_memo.insert((i, j), r);
        r
    };

    for j in lo..=bound {
        for i in 0..=(n as u32) {
            let dom_deg = j - i as i64;
            let dom = binomial(n, i as usize) * dim(dom_deg);
            if dom == 0 {
                continue;
            }
            let beta = dom - rank_of(i, j) - rank_of(i + 1, j);
            table.set(i, j, beta as u64);
        }
    }
    Ok(table)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for t in 0..k.min(n - k) {
        r = r * (n - t) / (t + 1);
    }
    r
}

/// All k-element subsets of 0..n in lexicographic order.
fn index_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            cur.push(v);
            rec(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Invariants of a complete table. `hilbert` supplies module dimensions for
/// the maxdeg field.
pub fn invariants(table: &BettiTable, hilbert: Option<&HilbertData>) -> Result<InvariantSet> {
    if !table.complete {
        return Err(Error::IncompleteTable(alloc::format!(
            "invariants of a truncated table would only be lower bounds"
        )));
    }
    let reg = table.entries.keys().map(|&(i, j)| j - i as i64).max();
    let pdim = table.max_homological();
    let depth = pdim.map(|p| table.n as i64 - p as i64);
    let t0 = table
        .entries
        .keys()
        .filter(|&&(i, _)| i == 0)
        .map(|&(_, j)| j)
        .max();
    let maxdeg = hilbert.and_then(|h| h.maxdeg());
    Ok(InvariantSet {
        reg,
        pdim,
        depth,
        t0,
        maxdeg,
    })
}

/// Integer Laurent polynomial in t, used for Hilbert numerators.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly::default()
    }

    pub fn add_term(&mut self, deg: i64, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.coeffs.entry(deg).or_insert(0);
        *e += c;
        if *e == 0 {
            self.coeffs.remove(&deg);
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, i64> {
        &self.coeffs
    }
}

impl core::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (&d, &c)) in self.coeffs.iter().enumerate() {
            let mag = c.unsigned_abs();
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if d == 0 {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                if d == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{d}")?;
                }
            } else if d == 1 {
                write!(f, "{mag}*t")?;
            } else {
                write!(f, "{mag}*t^{d}")?;
            }
        }
        Ok(())
    }
}

/// Hilbert numerator of a module with monomial relations, by inclusion-
/// exclusion over lcms of minimal relation generators, shifted per
/// component: H_M(t) * (1-t)^n.
pub fn hilbert_numerator(m: &Presentation) -> Result<IntPoly> {
    if !m.has_monomial_relations() {
        return Err(Error::Invalid(alloc::format!(
            "hilbert numerator needs monomial relations"
        )));
    }
    let lts = m.relation_basis().leading_terms();
    let mut out = IntPoly::zero();
    for (c, &t) in m.twists().iter().enumerate() {
        let gens: Vec<&crate::ring::Monomial> = lts
            .iter()
            .filter(|(p, _)| *p == c)
            .map(|(_, mo)| mo)
            .collect();
        subset_sum(&gens, 0, None, 1, t, &mut out);
    }
    Ok(out)
}

fn subset_sum(
    gens: &[&crate::ring::Monomial],
    idx: usize,
    lcm: Option<crate::ring::Monomial>,
    sign: i64,
    twist: i64,
    out: &mut IntPoly,
) {
    if idx == gens.len() {
        let deg = lcm.as_ref().map_or(0, |m| m.degree() as i64);
        out.add_term(deg + twist, sign);
        return;
    }
    subset_sum(gens, idx + 1, lcm.clone(), sign, twist, out);
    let next = match &lcm {
        None => gens[idx].clone(),
        Some(m) => m.lcm(gens[idx]),
    };
    subset_sum(gens, idx + 1, Some(next), -sign, twist, out);
}

/// The alternating sum of a Betti table: sum (-1)^i beta_{i,j} t^j. Equals
/// the Hilbert numerator for complete tables.
pub fn euler_polynomial(table: &BettiTable) -> IntPoly {
    let mut out = IntPoly::zero();
    for (&(i, j), &beta) in table.entries() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        out.add_term(j, sign * beta as i64);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Grid,
    Csv,
    Json,
}

/// Renders a table. The grid layout follows the usual Betti-diagram
/// convention: columns are homological degrees, row r collects the entries
/// with j - i = r, zeros print as dots.
pub fn render_table(table: &BettiTable, format: TableFormat) -> String {
    match format {
        TableFormat::Json => {
            let mut s = table.to_json();
            s.push('\n');
            s
        }
        TableFormat::Csv => {
            let mut s = String::from("i,j,beta\n");
            for (&(i, j), &beta) in table.entries() {
                s.push_str(&alloc::format!("{i},{j},{beta}\n"));
            }
            s
        }
        TableFormat::Grid => render_grid(table),
    }
}

fn render_grid(table: &BettiTable) -> String {
    if table.is_empty() {
        return String::from("\n");
    }
    let max_i = table.max_homological().unwrap();
    let rows: Vec<i64> = {
        let lo = table.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap();
        let hi = table.entries.keys().map(|&(i, j)| j - i as i64).max().unwrap();
        (lo..=hi).collect()
    };
    let cell_w = {
        let mut w = 1;
        for (_, &beta) in table.entries() {
            w = w.max(decimal_width(beta as i64));
        }
        w.max(decimal_width(max_i as i64))
    };
    let label_w = rows
        .iter()
        .map(|r| decimal_width(*r) + 1)
        .max()
        .unwrap_or(2);
    let mut out = String::new();
    // header
    out.push_str(&" ".repeat(label_w));
    for i in 0..=max_i {
        out.push(' ');
        out.push_str(&pad_left(&alloc::format!("{i}"), cell_w));
    }
    out.push('\n');
    for r in rows {
        out.push_str(&pad_left(&alloc::format!("{r}:"), label_w));
        for i in 0..=max_i {
            let j = r + i as i64;
            let beta = table.get(i, j);
            out.push(' ');
            if beta == 0 {
                out.push_str(&pad_left(".", cell_w));
            } else {
                out.push_str(&pad_left(&alloc::format!("{beta}"), cell_w));
            }
        }
        out.push('\n');
    }
    out
}

fn decimal_width(v: i64) -> usize {
    alloc::format!("{v}").len()
}

fn pad_left(s: &str, w: usize) -> String {
    if s.len() >= w {
        String::from(s)
    } else {
        let mut out = " ".repeat(w - s.len());
        out.push_str(s);
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::ring::{parse_polynomial, FreeElement};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f3() -> FieldSpec {
        FieldSpec::new(3).unwrap()
    }

    fn cyclic(gens: &[&str], n: usize) -> Presentation {
        let rels: Vec<FreeElement> = gens
            .iter()
            .map(|s| FreeElement::from_polynomial(parse_polynomial(s, n, f3()).unwrap()))
            .collect();
        Presentation::new(f3(), n, alloc::vec![0], rels, None).unwrap()
    }

    #[test]
    fn koszul_table_of_a_regular_sequence() {
        let m = cyclic(&["x1^3", "x2^3"], 2);
        let t = koszul_betti(&m, 6).unwrap();
        assert!(t.complete);
        let expected: BTreeMap<(u32, i64), u64> =
            [((0, 0), 1), ((1, 3), 2), ((2, 6), 1)].into_iter().collect();
        assert_eq!(t.entries(), &expected);
    }

    #[test]
    fn invariants_of_the_koszul_table() {
        let m = cyclic(&["x1^3", "x2^3"], 2);
        let t = koszul_betti(&m, 6).unwrap();
        let h = m.hilbert_data(6).unwrap();
        let inv = invariants(&t, Some(&h)).unwrap();
        assert_eq!(inv.reg, Some(4));
        assert_eq!(inv.pdim, Some(2));
        assert_eq!(inv.depth, Some(0));
        assert_eq!(inv.t0, Some(0));
        assert_eq!(inv.maxdeg, Some(4));
    }

    #[test]
    fn invariants_of_a_shifted_free_module() {
        let m = Presentation::free(f3(), 3, alloc::vec![2]);
        let t = koszul_betti(&m, 4).unwrap();
        let inv = invariants(&t, None).unwrap();
        assert_eq!(inv.reg, Some(2));
        assert_eq!(inv.pdim, Some(0));
        assert_eq!(inv.depth, Some(3));
    }

    #[test]
    fn incomplete_tables_refuse_invariants() {
        let m = cyclic(&["x1^3", "x2^3"], 2);
        let t = koszul_betti(&m, 3).unwrap();
        assert!(!t.complete);
        assert!(matches!(
            invariants(&t, None),
            Err(Error::IncompleteTable(_))
        ));
    }

    #[test]
    fn hilbert_numerator_complete_intersection() {
        let m = cyclic(&["x1^3", "x2^3"], 2);
        let h = hilbert_numerator(&m).unwrap();
        assert_eq!(alloc::format!("{h}"), "1 - 2*t^3 + t^6");
        let free = Presentation::free(f3(), 2, alloc::vec![0]);
        assert_eq!(alloc::format!("{}", hilbert_numerator(&free).unwrap()), "1");
    }

    #[test]
    fn euler_identity_on_random_monomial_quotients() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..12 {
            let n = rng.gen_range(1..4usize);
            let gens: Vec<FreeElement> = (0..rng.gen_range(1..4))
                .map(|_| {
                    let mut exps = alloc::vec![0u32; n];
                    for _ in 0..rng.gen_range(1..5) {
                        exps[rng.gen_range(0..n)] += 1;
                    }
                    FreeElement::from_polynomial(crate::ring::Polynomial::monomial(
                        crate::ring::Monomial::new(exps),
                        1,
                        f3(),
                    ))
                })
                .collect();
            let m = Presentation::new(f3(), n, alloc::vec![0], gens, None).unwrap();
            let bound = truncation_bound(&m).unwrap();
            let t = koszul_betti(&m, bound).unwrap();
            assert!(t.complete);
            assert_eq!(euler_polynomial(&t), hilbert_numerator(&m).unwrap());
            assert!(t.max_homological().unwrap_or(0) as usize <= n);
        }
    }

    #[test]
    fn quotient_and_ideal_tables_are_shifted() {
        // beta_{i,j}(I) = beta_{i+1,j}(S/I) for the ideal of two cubes
        let quot = cyclic(&["x1^3", "x2^3"], 2);
        let tq = koszul_betti(&quot, 6).unwrap();
        // present I by generators and their single Koszul syzygy
        let gens = [
            FreeElement::from_polynomial(parse_polynomial("x1^3", 2, f3()).unwrap()),
            FreeElement::from_polynomial(parse_polynomial("x2^3", 2, f3()).unwrap()),
        ];
        let env = crate::groebner::ModuleEnv::ideal(f3(), 2);
        let rels = crate::groebner::kernel_generators(&env, &gens, &[], None).unwrap();
        let ideal = Presentation::new(f3(), 2, alloc::vec![3, 3], rels, Some(6)).unwrap();
        let ti = koszul_betti(&ideal, 6).unwrap();
        for (&(i, j), &b) in ti.entries() {
            assert_eq!(b, tq.get(i + 1, j), "entry ({i},{j})");
        }
        for (&(i, j), &b) in tq.entries() {
            if i >= 1 {
                assert_eq!(b, ti.get(i - 1, j));
            }
        }
    }

    #[test]
    fn grid_rendering() {
        let m = cyclic(&["x1^3", "x2^3"], 2);
        let t = koszul_betti(&m, 6).unwrap();
        let grid = render_table(&t, TableFormat::Grid);
        let expected = "   0 1 2\n0: 1 . .\n1: . . .\n2: . 2 .\n3: . . .\n4: . . 1\n";
        assert_eq!(grid, expected);
        let empty = BettiTable::new(2, 3, 0, true);
        assert_eq!(render_table(&empty, TableFormat::Grid), "\n");
    }

    #[test]
    fn csv_and_json_rendering() {
        let m = cyclic(&["x1^3", "x2^3"], 2);
        let t = koszul_betti(&m, 6).unwrap();
        assert_eq!(
            render_table(&t, TableFormat::Csv),
            "i,j,beta\n0,0,1\n1,3,2\n2,6,1\n"
        );
        let json = render_table(&t, TableFormat::Json);
        assert_eq!(
            json,
            "{\"n\":2,\"p\":3,\"complete\":true,\"entries\":[{\"i\":0,\"j\":0,\"beta\":1},{\"i\":1,\"j\":3,\"beta\":2},{\"i\":2,\"j\":6,\"beta\":1}]}\n"
        );
        let parsed = table_from_json(json.trim(), t.bound).unwrap();
        assert_eq!(parsed, t);
    }

    #[test]
    fn digest_is_stable() {
        let m = cyclic(&["x1^3", "x2^3"], 2);
        let t = koszul_betti(&m, 6).unwrap();
        assert_eq!(t.digest(), t.digest());
        let t2 = koszul_betti(&m, 6).unwrap();
        assert_eq!(t.digest(), t2.digest());
    }
}

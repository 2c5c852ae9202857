//! Reduced Groebner bases for homogeneous ideals and submodules of graded
//! free modules, with the machinery built on top of them: normal forms,
//! colon ideals, saturation, Schreyer syzygies and kernels of maps.
//!
//! The module order is position-over-term over grevlex (lower basis index
//! first). S-pairs are processed in ascending internal degree, which makes
//! degree-truncated runs sound for homogeneous input: a basis computed with
//! `cap = d` has complete leading-term data in all internal degrees <= d.
//!
//! Basis elements can carry cofactors (their expression in terms of the
//! input generators). Cofactors are what turn S-pair reductions into
//! syzygies of arbitrary generator lists, which is how kernels are found.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::ring::{pot_term_compare, FreeElement, Monomial, Polynomial};

/// Ambient data for a graded free module over F_p[x1..xn].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleEnv {
    pub field: FieldSpec,
    pub n: usize,
    /// Generator degrees of the free module; rank = twists.len().
    pub twists: Vec<i64>,
}

impl ModuleEnv {
    pub fn ideal(field: FieldSpec, n: usize) -> Self {
        ModuleEnv {
            field,
            n,
            twists: alloc::vec![0],
        }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn degree_of(&self, e: &FreeElement) -> Result<Option<i64>> {
        if let Some((i, _)) = e.components().iter().find(|(i, _)| *i >= self.rank()) {
            return Err(Error::Dimension(alloc::format!(
                "component index {i} outside rank {}",
                self.rank()
            )));
        }
        if e.is_zero() {
            return Ok(None);
        }
        match e.homogeneous_degree(&self.twists) {
            Some(d) => Ok(Some(d)),
            None => Err(Error::Inhomogeneous(alloc::format!(
                "element mixes internal degrees"
            ))),
        }
    }
}

/// A reduced Groebner basis: leading terms pairwise non-divisible, tails
/// reduced, leading coefficients 1, elements sorted by descending leading
/// term. Two submodules are equal iff their reduced bases are equal
/// (at a common degree cap).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    env: ModuleEnv,
    elems: Vec<FreeElement>,
    reduced: bool,
    cap: Option<i64>,
}

impl GroebnerBasis {
    pub fn env(&self) -> &ModuleEnv {
        &self.env
    }

    pub fn elements(&self) -> &[FreeElement] {
        &self.elems
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn cap(&self) -> Option<i64> {
        self.cap
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// All basis elements are single terms.
    pub fn is_monomial(&self) -> bool {
        self.elems.iter().all(|e| {
            e.components().len() == 1 && e.components()[0].1.is_monomial()
        })
    }

    /// Leading terms, as (component, monomial) pairs.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.elems
            .iter()
            .map(|e| {
                let (i, m, _) = e.leading().expect("basis elements are nonzero");
                (i, m.clone())
            })
            .collect()
    }

    /// Computes the reduced Groebner basis of `gens`.
    ///
    /// With `cap = Some(d)` the run is truncated: S-pairs of internal degree
    /// above `d` are discarded, so only leading-term data and normal forms in
    /// degrees <= d are trustworthy.
    pub fn compute(env: ModuleEnv, gens: &[FreeElement], cap: Option<i64>) -> Result<Self> {
        let (gb, _) = run_buchberger(env, gens, cap, false)?;
        Ok(gb)
    }

    /// Like [`GroebnerBasis::compute`], additionally returning one cofactor
    /// per basis element expressing it in terms of `gens`.
    pub fn compute_tracked(
        env: ModuleEnv,
        gens: &[FreeElement],
        cap: Option<i64>,
    ) -> Result<(Self, Vec<FreeElement>)> {
        let (gb, cofs) = run_buchberger(env, gens, cap, true)?;
        Ok((gb, cofs.expect("tracking requested")))
    }

    /// Fully reduces `f`: no term of the result is divisible by any leading
    /// term of the basis. Idempotent.
    pub fn normal_form(&self, f: &FreeElement) -> FreeElement {
        self.divide(f).0
    }

    /// Division with quotients: returns (nf, q) with
    /// `f = sum q[k] * basis[k] + nf`.
    pub fn divide(&self, f: &FreeElement) -> (FreeElement, Vec<Polynomial>) {
        let field = self.env.field;
        let n = self.env.n;
        let mut quotients = alloc::vec![Polynomial::zero(n, field); self.elems.len()];
        let mut work = f.clone();
        let mut done = FreeElement::zero();
        'outer: while let Some((pos, m, c)) = work.leading().map(|(p, m, c)| (p, m.clone(), c)) {
            for (k, g) in self.elems.iter().enumerate() {
                let (gp, gm, _) = g.leading().expect("nonzero");
                if gp == pos && gm.divides(&m) {
                    let q = gm.div(&m);
                    // basis is monic, so the multiplier coefficient is c
                    work = work.sub(&g.mul_term(&q, c).expect("same ambient"));
                    quotients[k] = quotients[k]
                        .add(&Polynomial::monomial(q, c, field))
                        .expect("same ambient");
                    continue 'outer;
                }
            }
            // leading term irreducible: move it to the result
            let lead = FreeElement::single(pos, Polynomial::monomial(m, c, field));
            done = done.add(&lead);
            work = work.sub(&lead);
        }
        (done, quotients)
    }

    /// Membership test (normal form is zero).
    pub fn contains(&self, f: &FreeElement) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Checks the Buchberger criterion on the stored basis, honouring the cap.
    pub fn all_spairs_reduce_to_zero(&self) -> bool {
        for i in 0..self.elems.len() {
            for j in (i + 1)..self.elems.len() {
                let Some((s, _, d)) = s_pair(&self.env, &self.elems[i], &self.elems[j]) else {
                    continue;
                };
                if let Some(cap) = self.cap {
                    if d > cap {
                        continue;
                    }
                }
                if !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// S-pair of two monic elements with the same leading position, together
/// with the two multipliers; `None` when the positions differ.
/// Returns (spair, (a_mono, b_mono), internal degree of the pair).
fn s_pair(
    env: &ModuleEnv,
    g1: &FreeElement,
    g2: &FreeElement,
) -> Option<(FreeElement, (Monomial, Monomial), i64)> {
    let (p1, m1, _) = g1.leading()?;
    let (p2, m2, _) = g2.leading()?;
    if p1 != p2 {
        return None;
    }
    let l = m1.lcm(m2);
    let a = m1.div(&l);
    let b = m2.div(&l);
    let s = g1
        .mul_term(&a, 1)
        .expect("same ambient")
        .sub(&g2.mul_term(&b, 1).expect("same ambient"));
    let deg = l.degree() as i64 + env.twists[p1];
    Some((s, (a, b), deg))
}

struct Tracked {
    elem: FreeElement,
    cof: Option<FreeElement>,
}

impl Tracked {
    fn monic(mut self, field: FieldSpec) -> Self {
        if let Some((_, _, c)) = self.elem.leading() {
            if c != 1 {
                let inv = field.inv(c).expect("nonzero lead");
                self.elem = self.elem.scale(inv, field);
                if let Some(cof) = &mut self.cof {
                    *cof = cof.scale(inv, field);
                }
            }
        }
        self
    }
}

/// Reduce `t` against `basis`, updating the cofactor alongside.
fn reduce_tracked(env: &ModuleEnv, mut t: Tracked, basis: &[Tracked]) -> Tracked {
    let field = env.field;
    let mut done = FreeElement::zero();
    'outer: while let Some((pos, m, c)) = t.elem.leading().map(|(p, m, c)| (p, m.clone(), c)) {
        for b in basis {
            let (bp, bm, _) = b.elem.leading().expect("nonzero");
            if bp == pos && bm.divides(&m) {
                let q = bm.div(&m);
                t.elem = t.elem.sub(&b.elem.mul_term(&q, c).expect("same ambient"));
                if let Some(cof) = &mut t.cof {
                    let bc = b.cof.as_ref().expect("tracked basis");
                    *cof = cof.sub(&bc.mul_term(&q, c).expect("same ambient"));
                }
                continue 'outer;
            }
        }
        let lead = FreeElement::single(pos, Polynomial::monomial(m, c, field));
        done = done.add(&lead);
        t.elem = t.elem.sub(&lead);
    }
    t.elem = done;
    t
}

fn run_buchberger(
    env: ModuleEnv,
    gens: &[FreeElement],
    cap: Option<i64>,
    track: bool,
) -> Result<(GroebnerBasis, Option<Vec<FreeElement>>)> {
    // validate homogeneity and collect nonzero inputs
    let mut inputs: Vec<(usize, FreeElement)> = Vec::new();
    for (idx, g) in gens.iter().enumerate() {
        let deg = env.degree_of(g)?;
        if deg.is_none() {
            continue;
        }
        if let (Some(c), Some(d)) = (cap, deg) {
            if d > c {
                continue; // cannot contribute below the cap
            }
        }
        inputs.push((idx, g.clone()));
    }

    let mk_cof = |idx: usize, n: usize, field: FieldSpec| {
        FreeElement::single(idx, Polynomial::constant(n, field, 1))
    };

    // monomial fast path: minimal monomial generators are already reduced
    let monomial_input = inputs
        .iter()
        .all(|(_, g)| g.components().len() == 1 && g.components()[0].1.is_monomial());
    if monomial_input {
        let mut kept: Vec<(usize, FreeElement)> = Vec::new();
        // sort by leading term ascending so dominating generators come late
        let mut sorted = inputs.clone();
        sorted.sort_by(|a, b| {
            let (pa, ma, _) = a.1.leading().unwrap();
            let (pb, mb, _) = b.1.leading().unwrap();
            pot_term_compare((pa, ma), (pb, mb)).then(a.0.cmp(&b.0))
        });
        'cand: for (idx, g) in sorted {
            let (p, m, _) = g.leading().unwrap();
            let (p, m) = (p, m.clone());
            for (_, k) in &kept {
                let (kp, km, _) = k.leading().unwrap();
                if kp == p && km.divides(&m) {
                    continue 'cand;
                }
            }
            kept.push((idx, g));
        }
        kept.sort_by(|a, b| {
            let (pa, ma, _) = a.1.leading().unwrap();
            let (pb, mb, _) = b.1.leading().unwrap();
            pot_term_compare((pb, mb), (pa, ma))
        });
        let mut elems = Vec::with_capacity(kept.len());
        let mut cofs = Vec::with_capacity(kept.len());
        for (idx, g) in kept {
            let (_, _, c) = g.leading().unwrap();
            let inv = env.field.inv(c)?;
            elems.push(g.scale(inv, env.field));
            if track {
                cofs.push(mk_cof(idx, env.n, env.field).scale(inv, env.field));
            }
        }
        let gb = GroebnerBasis {
            env,
            elems,
            reduced: true,
            cap,
        };
        return Ok((gb, track.then_some(cofs)));
    }

    let field = env.field;
    let mut basis: Vec<Tracked> = Vec::new();
    // queue of (degree, i, j); BTreeSet pops in ascending degree
    let mut queue: BTreeSet<(i64, usize, usize)> = BTreeSet::new();

    let push_elem = |basis: &mut Vec<Tracked>,
                         queue: &mut BTreeSet<(i64, usize, usize)>,
                         t: Tracked| {
        let t = t.monic(field);
        let k = basis.len();
        for (i, b) in basis.iter().enumerate() {
            if let Some((_, _, d)) = s_pair(&env, &b.elem, &t.elem) {
                if cap.map_or(true, |c| d <= c) {
                    queue.insert((d, i, k));
                }
            }
        }
        basis.push(t);
    };

    for (idx, g) in &inputs {
        let t = Tracked {
            elem: g.clone(),
            cof: track.then(|| mk_cof(*idx, env.n, field)),
        };
        let t = reduce_tracked(&env, t, &basis);
        if !t.elem.is_zero() {
            push_elem(&mut basis, &mut queue, t);
        }
    }

    while let Some(&(deg, i, j)) = queue.iter().next() {
        queue.remove(&(deg, i, j));
        if let Some(c) = cap {
            if deg > c {
                break; // queue is degree-sorted
            }
        }
        let (gi, gj) = (&basis[i].elem, &basis[j].elem);
        let (pi, mi, _) = gi.leading().unwrap();
        let (pj, mj, _) = gj.leading().unwrap();
        // product criterion, valid in the rank-1 (ideal) case only
        if env.rank() == 1 && pi == pj && mi.is_coprime(mj) {
            continue;
        }
        let Some((s, (a, b), _)) = s_pair(&env, gi, gj) else {
            continue;
        };
        let cof = track.then(|| {
            let ci = basis[i].cof.as_ref().unwrap();
            let cj = basis[j].cof.as_ref().unwrap();
            ci.mul_term(&a, 1)
                .expect("same ambient")
                .sub(&cj.mul_term(&b, 1).expect("same ambient"))
        });
        let t = reduce_tracked(&env, Tracked { elem: s, cof }, &basis);
        if !t.elem.is_zero() {
            push_elem(&mut basis, &mut queue, t);
        }
    }

    // minimalize: drop elements whose leading term another leading term divides
    let mut order: Vec<usize> = (0..basis.len()).collect();
    order.sort_by(|&a, &b| {
        let (pa, ma, _) = basis[a].elem.leading().unwrap();
        let (pb, mb, _) = basis[b].elem.leading().unwrap();
        pot_term_compare((pa, ma), (pb, mb))
    });
    let mut kept_idx: Vec<usize> = Vec::new();
    'elem: for &k in &order {
        let (p, m, _) = basis[k].elem.leading().unwrap();
        let (p, m) = (p, m.clone());
        for &e in &kept_idx {
            let (ep, em, _) = basis[e].elem.leading().unwrap();
            if ep == p && em.divides(&m) {
                continue 'elem;
            }
        }
        kept_idx.push(k);
    }

    // tail-reduce every kept element against the others
    let mut reduced: Vec<Tracked> = Vec::new();
    for &k in &kept_idx {
        let others: Vec<Tracked> = kept_idx
            .iter()
            .filter(|&&e| e != k)
            .map(|&e| Tracked {
                elem: basis[e].elem.clone(),
                cof: basis[e].cof.clone(),
            })
            .collect();
        let t = Tracked {
            elem: basis[k].elem.clone(),
            cof: basis[k].cof.clone(),
        };
        let t = reduce_tracked(&env, t, &others).monic(field);
        debug_assert!(!t.elem.is_zero());
        reduced.push(t);
    }
    reduced.sort_by(|a, b| {
        let (pa, ma, _) = a.elem.leading().unwrap();
        let (pb, mb, _) = b.elem.leading().unwrap();
        pot_term_compare((pb, mb), (pa, ma))
    });

    let cofs = track.then(|| reduced.iter().map(|t| t.cof.clone().unwrap()).collect());
    let elems = reduced.into_iter().map(|t| t.elem).collect();
    Ok((
        GroebnerBasis {
            env,
            elems,
            reduced: true,
            cap,
        },
        cofs,
    ))
}

/// `buchberger` from the module contract: reduced basis of homogeneous
/// generators in the rank-1 module (an ideal).
pub fn buchberger(field: FieldSpec, n: usize, gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let env = ModuleEnv::ideal(field, n);
    let elems: Vec<FreeElement> = gens
        .iter()
        .map(|p| FreeElement::from_polynomial(p.clone()))
        .collect();
    GroebnerBasis::compute(env, &elems, None)
}

/// The colon ideal (I : g) = { f : f*g in I }. Rank-1 ambient only.
pub fn ideal_quotient(basis: &GroebnerBasis, g: &Polynomial) -> Result<GroebnerBasis> {
    let env = basis.env();
    if env.rank() != 1 {
        return Err(Error::Invalid(alloc::format!(
            "colon ideal requires a rank-1 ambient, got rank {}",
            env.rank()
        )));
    }
    if g.is_zero() {
        return Err(Error::Invalid(alloc::format!("colon by zero divisor")));
    }
    // monomial fast path: per-generator exponent subtraction
    if basis.is_monomial() && g.is_monomial() {
        let gm = &g.terms()[0].0;
        let gens: Vec<FreeElement> = basis
            .elems
            .iter()
            .map(|e| {
                let (_, m, _) = e.leading().unwrap();
                let q = m.gcd(gm).div(m);
                FreeElement::from_polynomial(Polynomial::monomial(q, 1, env.field))
            })
            .collect();
        return GroebnerBasis::compute(env.clone(), &gens, None);
    }
    let kernel = kernel_generators(
        env,
        &[FreeElement::from_polynomial(g.clone())],
        basis.elements(),
        None,
    )?;
    GroebnerBasis::compute(env.clone(), &kernel, None)
}

/// The colon ideal (I : J) for an ideal J given by generators.
pub fn ideal_colon_ideal(basis: &GroebnerBasis, j_gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let env = basis.env();
    if env.rank() != 1 {
        return Err(Error::Invalid(alloc::format!(
            "colon ideal requires a rank-1 ambient"
        )));
    }
    let j_gens: Vec<&Polynomial> = j_gens.iter().filter(|p| !p.is_zero()).collect();
    if j_gens.is_empty() {
        return Err(Error::Invalid(alloc::format!(
            "colon by the zero ideal is undefined"
        )));
    }
    // (I : J) = intersection of the (I : f); in the monomial world both the
    // single colons and the intersection stay monomial.
    if basis.is_monomial() && j_gens.iter().all(|p| p.is_monomial()) {
        let mut acc: Option<GroebnerBasis> = None;
        for f in &j_gens {
            let q = ideal_quotient(basis, f)?;
            acc = Some(match acc {
                None => q,
                Some(prev) => monomial_intersection(&prev, &q)?,
            });
        }
        return Ok(acc.unwrap());
    }
    // general case: kernel of S -> (S/I)^s, 1 |-> (f_1, ..., f_s)
    let s = j_gens.len();
    let mut twists = Vec::with_capacity(s);
    for f in &j_gens {
        if !f.is_homogeneous() {
            return Err(Error::Inhomogeneous(alloc::format!("colon generator")));
        }
        twists.push(-(f.degree().unwrap() as i64));
    }
    let target_env = ModuleEnv {
        field: env.field,
        n: env.n,
        twists: alloc::vec![0; s],
    };
    let image = FreeElement::from_components(
        j_gens
            .iter()
            .enumerate()
            .map(|(i, f)| (i, (*f).clone())),
    );
    let mut rels: Vec<FreeElement> = Vec::new();
    for r in basis.elements() {
        let rp = r.into_polynomial(env.n, env.field);
        for i in 0..s {
            rels.push(FreeElement::single(i, rp.clone()));
        }
    }
    let kernel = kernel_generators(&target_env, &[image], &rels, None)?;
    // kernel lives in a rank-1 source whose twist is deg(1) = 0
    GroebnerBasis::compute(env.clone(), &kernel, None)
}

/// Intersection of two monomial ideals: pairwise lcms.
fn monomial_intersection(a: &GroebnerBasis, b: &GroebnerBasis) -> Result<GroebnerBasis> {
    let env = a.env();
    let mut gens = Vec::new();
    for x in a.elements() {
        let (_, mx, _) = x.leading().unwrap();
        for y in b.elements() {
            let (_, my, _) = y.leading().unwrap();
            gens.push(FreeElement::from_polynomial(Polynomial::monomial(
                mx.lcm(my),
                1,
                env.field,
            )));
        }
    }
    GroebnerBasis::compute(env.clone(), &gens, None)
}

/// Saturation (I : J^infinity): iterate I <- (I : J) until the reduced basis
/// stops changing.
pub fn saturate(basis: &GroebnerBasis, j_gens: &[Polynomial]) -> Result<GroebnerBasis> {
    let mut current = basis.clone();
    loop {
        let next = ideal_colon_ideal(&current, j_gens)?;
        if next.elements() == current.elements() {
            return Ok(next);
        }
        current = next;
    }
}

/// Schreyer syzygies of a Groebner basis: one generator per S-pair, each an
/// element of the free module indexed by the basis elements. Every returned
/// `z` satisfies `sum z[k] * basis[k] = 0` exactly.
pub fn syzygies(basis: &GroebnerBasis) -> Result<Vec<FreeElement>> {
    let env = basis.env();
    let field = env.field;
    let mut out = Vec::new();
    for i in 0..basis.elems.len() {
        for j in (i + 1)..basis.elems.len() {
            let Some((s, (a, b), d)) = s_pair(env, &basis.elems[i], &basis.elems[j]) else {
                continue;
            };
            if let Some(cap) = basis.cap {
                if d > cap {
                    continue;
                }
            }
            let (nf, q) = basis.divide(&s);
            if !nf.is_zero() {
                return Err(Error::Invalid(alloc::format!(
                    "input is not a Groebner basis: an S-pair does not reduce to zero"
                )));
            }
            let mut comps: Vec<(usize, Polynomial)> = Vec::new();
            comps.push((i, Polynomial::monomial(a, 1, field)));
            comps.push((j, Polynomial::monomial(b, field.neg(1), field)));
            for (k, qk) in q.iter().enumerate() {
                if !qk.is_zero() {
                    comps.push((k, qk.neg()));
                }
            }
            let z = FreeElement::from_components(comps);
            if !z.is_zero() {
                out.push(z);
            }
        }
    }
    Ok(out)
}

/// Generators of the kernel of the map G -> F/R, where G is the free module
/// with one basis vector per element of `images`, the map sends the k-th
/// basis vector to `images[k]`, and `R` is the submodule of F generated by
/// `target_rels`.
///
/// Returned elements live in G (coordinates over `images`) and generate all
/// kernel elements of internal degree <= `cap` when a cap is given, or the
/// whole kernel otherwise.
pub fn kernel_generators(
    target_env: &ModuleEnv,
    images: &[FreeElement],
    target_rels: &[FreeElement],
    cap: Option<i64>,
) -> Result<Vec<FreeElement>> {
    let field = target_env.field;
    let n = target_env.n;
    let mut out: Vec<FreeElement> = Vec::new();

    // zero images contribute their own basis vector to the kernel
    for (k, im) in images.iter().enumerate() {
        if im.is_zero() {
            out.push(FreeElement::single(k, Polynomial::constant(n, field, 1)));
        }
    }

    let combined: Vec<FreeElement> = images.iter().chain(target_rels.iter()).cloned().collect();
    let (gb, cofs) = GroebnerBasis::compute_tracked(target_env.clone(), &combined, cap)?;

    let mut raw: Vec<FreeElement> = Vec::new();
    // syzygies of the basis, rewritten over the combined input list
    for z in syzygies(&gb)? {
        let mut acc = FreeElement::zero();
        for (k, poly) in z.components() {
            acc = acc.add(&cofs[*k].mul_poly(poly)?);
        }
        raw.push(acc);
    }
    // inputs re-expressed through the basis: e_k - sum q * cof
    for (k, g) in combined.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        if let Some(c) = cap {
            match target_env.degree_of(g)? {
                Some(d) if d > c => continue,
                _ => {}
            }
        }
        let (nf, q) = gb.divide(g);
        debug_assert!(nf.is_zero(), "combined input must lie in the submodule");
        let mut acc = FreeElement::single(k, Polynomial::constant(n, field, 1));
        for (idx, qk) in q.iter().enumerate() {
            if !qk.is_zero() {
                acc = acc.sub(&cofs[idx].mul_poly(qk)?);
            }
        }
        if !acc.is_zero() {
            raw.push(acc);
        }
    }

    // project to the image coordinates
    let s = images.len();
    for z in raw {
        let proj = FreeElement::from_components(
            z.components()
                .iter()
                .filter(|(i, _)| *i < s)
                .map(|(i, p)| (*i, p.clone())),
        );
        if !proj.is_zero() {
            out.push(proj);
        }
    }

    out.sort_by(|a, b| {
        let (pa, ma, _) = a.leading().unwrap();
        let (pb, mb, _) = b.leading().unwrap();
        pot_term_compare((pb, mb), (pa, ma)).then_with(|| a.components().len().cmp(&b.components().len()))
    });
    out.dedup();
    Ok(out)
}

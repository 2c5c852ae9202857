//! Monomials, the graded reverse-lexicographic order, sparse multivariate
//! polynomials over F_p, and elements of graded free modules.
//!
//! The term order is fixed across the whole crate: grevlex with
//! x1 > x2 > ... > xn, extended position-over-term to free modules with
//! lower basis index taking priority. Betti numbers do not depend on the
//! order, but Groebner bases and all golden outputs do, so there is exactly
//! one order.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::FieldSpec;

/// A monomial in `n` variables: exponent vector plus cached total degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn one(n: usize) -> Self {
        Monomial {
            exps: alloc::vec![0; n],
            deg: 0,
        }
    }

    /// The single variable x_{v+1} (zero-based index `v`).
    pub fn var(n: usize, v: usize) -> Self {
        let mut exps = alloc::vec![0; n];
        exps[v] = 1;
        Monomial { exps, deg: 1 }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    #[inline]
    pub fn exp(&self, v: usize) -> u32 {
        self.exps[v]
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        check_same_n(self.nvars(), other.nvars())?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Monomial {
            exps,
            deg: self.deg + other.deg,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.nvars() == other.nvars()
            && self.deg <= other.deg
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(b, a)| b - a)
            .collect();
        Monomial {
            exps,
            deg: other.deg - self.deg,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.min(b))
            .collect();
        Monomial::new(exps)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let exps = self.exps.iter().map(|a| a * e).collect();
        Monomial {
            exps,
            deg: self.deg * e,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Zero-pads the exponent vector to `n_new` variables.
    pub fn embed_wider(&self, n_new: usize) -> Result<Monomial> {
        if n_new < self.nvars() {
            return Err(Error::Dimension(alloc::format!(
                "cannot narrow monomial from {} to {} variables",
                self.nvars(),
                n_new
            )));
        }
        let mut exps = self.exps.clone();
        exps.resize(n_new, 0);
        Ok(Monomial {
            exps,
            deg: self.deg,
        })
    }
}

/// Grevlex: compare by total degree, ties broken so that the larger exponent
/// on the *last* differing variable loses.
pub fn monomial_compare(a: &Monomial, b: &Monomial) -> Result<Ordering> {
    check_same_n(a.nvars(), b.nvars())?;
    Ok(grevlex(a, b))
}

#[inline]
pub(crate) fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.deg.cmp(&b.deg) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for v in (0..a.exps.len()).rev() {
        match a.exps[v].cmp(&b.exps[v]) {
            Ordering::Equal => {}
            // smaller exponent on the last differing variable wins
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex(self, other)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", v + 1)?;
            } else {
                write!(f, "x{}^{}", v + 1, e)?;
            }
        }
        Ok(())
    }
}

fn check_same_n(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::Dimension(alloc::format!(
            "ambient variable counts differ: {a} vs {b}"
        )));
    }
    Ok(())
}

/// A sparse polynomial: terms strictly descending in grevlex, no zero
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    n: usize,
    field: FieldSpec,
    terms: Vec<(Monomial, u64)>,
}

impl Polynomial {
    pub fn zero(n: usize, field: FieldSpec) -> Self {
        Polynomial {
            n,
            field,
            terms: Vec::new(),
        }
    }

    pub fn constant(n: usize, field: FieldSpec, c: u64) -> Self {
        let c = field.reduce(c);
        let mut p = Polynomial::zero(n, field);
        if c != 0 {
            p.terms.push((Monomial::one(n), c));
        }
        p
    }

    pub fn monomial(m: Monomial, c: u64, field: FieldSpec) -> Self {
        let n = m.nvars();
        let c = field.reduce(c);
        let mut p = Polynomial::zero(n, field);
        if c != 0 {
            p.terms.push((m, c));
        }
        p
    }

    /// Normalizes an arbitrary term list: sorts, merges, drops zeros.
    pub fn from_terms(
        n: usize,
        field: FieldSpec,
        terms: impl IntoIterator<Item = (Monomial, u64)>,
    ) -> Result<Self> {
        let mut list: Vec<(Monomial, u64)> = Vec::new();
        for (m, c) in terms {
            check_same_n(m.nvars(), n)?;
            let c = field.reduce(c);
            if c != 0 {
                list.push((m, c));
            }
        }
        list.sort_by(|a, b| grevlex(&b.0, &a.0));
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(list.len());
        for (m, c) in list {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => {
                    *lc = field.add(*lc, c);
                    if *lc == 0 {
                        out.pop();
                    }
                }
                _ => out.push((m, c)),
            }
        }
        Ok(Polynomial {
            n,
            field,
            terms: out,
        })
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn terms(&self) -> &[(Monomial, u64)] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, u64)> {
        self.terms.first()
    }

    /// Total degree of the leading term; zero polynomial has none.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => {
                let d = m.degree();
                self.terms.iter().all(|(t, _)| t.degree() == d)
            }
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_n(self.n, other.n)?;
        let f = self.field;
        let mut out: Vec<(Monomial, u64)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_a = if i >= self.terms.len() {
                false
            } else if j >= other.terms.len() {
                true
            } else {
                match grevlex(&self.terms[i].0, &other.terms[j].0) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => {
                        let c = f.add(self.terms[i].1, other.terms[j].1);
                        if c != 0 {
                            out.push((self.terms[i].0.clone(), c));
                        }
                        i += 1;
                        j += 1;
                        continue;
                    }
                }
            };
            if take_a {
                out.push(self.terms[i].clone());
                i += 1;
            } else {
                out.push(other.terms[j].clone());
                j += 1;
            }
        }
        Ok(Polynomial {
            n: self.n,
            field: f,
            terms: out,
        })
    }

    pub fn neg(&self) -> Polynomial {
        let f = self.field;
        Polynomial {
            n: self.n,
            field: f,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), f.neg(*c))).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: u64) -> Polynomial {
        let f = self.field;
        let c = f.reduce(c);
        if c == 0 {
            return Polynomial::zero(self.n, f);
        }
        Polynomial {
            n: self.n,
            field: f,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), f.mul(*v, c))).collect(),
        }
    }

    /// Multiply by a single term `c * m`.
    pub fn mul_term(&self, m: &Monomial, c: u64) -> Result<Polynomial> {
        check_same_n(self.n, m.nvars())?;
        let f = self.field;
        let c = f.reduce(c);
        if c == 0 {
            return Ok(Polynomial::zero(self.n, f));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, v) in &self.terms {
            terms.push((t.mul(m)?, f.mul(*v, c)));
        }
        // multiplying by a fixed monomial preserves grevlex order
        Ok(Polynomial {
            n: self.n,
            field: f,
            terms,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same_n(self.n, other.n)?;
        let f = self.field;
        let mut acc = Polynomial::zero(self.n, f);
        for (m, c) in &other.terms {
            acc = acc.add(&self.mul_term(m, *c)?)?;
        }
        Ok(acc)
    }

    /// Zero-pads every exponent vector to `n_new` variables.
    pub fn embed_wider(&self, n_new: usize) -> Result<Polynomial> {
        if n_new < self.n {
            return Err(Error::Dimension(alloc::format!(
                "cannot narrow polynomial from {} to {} variables",
                self.n,
                n_new
            )));
        }
        let terms: Result<Vec<_>> = self
            .terms
            .iter()
            .map(|(m, c)| Ok((m.embed_wider(n_new)?, *c)))
            .collect();
        // padding preserves grevlex order between monomials of the same
        // original width
        Ok(Polynomial {
            n: n_new,
            field: self.field,
            terms: terms?,
        })
    }
}

/// CLI text form: `2*x1^3*x2 + x2^4`, terms descending. Coefficient 1 is
/// omitted except on the constant term; `^1` is omitted.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if m.degree() == 0 {
                write!(f, "{c}")?;
            } else if *c == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Parses the `Display` text form back into a polynomial.
pub fn parse_polynomial(s: &str, n: usize, field: FieldSpec) -> Result<Polynomial> {
    let s = s.trim();
    if s == "0" {
        return Ok(Polynomial::zero(n, field));
    }
    let mut terms = Vec::new();
    for part in s.split('+') {
        let part = part.trim();
        if part.is_empty() {
            return Err(Error::Invalid(String::from("empty term")));
        }
        let mut coeff: u64 = 1;
        let mut exps = alloc::vec![0u32; n];
        let mut saw_factor = false;
        for factor in part.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(Error::Invalid(String::from("empty factor")));
            }
            if let Some(rest) = factor.strip_prefix('x') {
                let (var_s, exp) = match rest.split_once('^') {
                    Some((v, e)) => {
                        let e: u32 = e
                            .parse()
                            .map_err(|_| Error::Invalid(alloc::format!("bad exponent in {factor}")))?;
                        (v, e)
                    }
                    None => (rest, 1),
                };
                let v: usize = var_s
                    .parse()
                    .map_err(|_| Error::Invalid(alloc::format!("bad variable in {factor}")))?;
                if v == 0 || v > n {
                    return Err(Error::Dimension(alloc::format!(
                        "variable x{v} outside ambient width {n}"
                    )));
                }
                exps[v - 1] += exp;
            } else {
                let c: u64 = factor
                    .parse()
                    .map_err(|_| Error::Invalid(alloc::format!("bad coefficient {factor}")))?;
                coeff = field.mul(field.reduce(coeff), field.reduce(c));
            }
            saw_factor = true;
        }
        if !saw_factor {
            return Err(Error::Invalid(String::from("empty term")));
        }
        terms.push((Monomial::new(exps), coeff));
    }
    Polynomial::from_terms(n, field, terms)
}

/// Arithmetic dispatcher matching the operation contract.
pub enum PolyOp {
    Add,
    Multiply,
}

pub fn poly_arith(op: PolyOp, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    match op {
        PolyOp::Add => f.add(g),
        PolyOp::Multiply => f.mul(g),
    }
}

/// An element of a graded free module: sparse list of (basis index,
/// polynomial) components, sorted by index, polynomials nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeElement {
    components: Vec<(usize, Polynomial)>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement {
            components: Vec::new(),
        }
    }

    pub fn from_components(comps: impl IntoIterator<Item = (usize, Polynomial)>) -> Self {
        let mut components: Vec<(usize, Polynomial)> =
            comps.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        components.sort_by_key(|(i, _)| *i);
        let mut out: Vec<(usize, Polynomial)> = Vec::with_capacity(components.len());
        for (i, p) in components {
            match out.last_mut() {
                Some((li, lp)) if *li == i => {
                    let s = lp.add(&p).expect("same ambient");
                    if s.is_zero() {
                        out.pop();
                    } else {
                        *lp = s;
                    }
                }
                _ => out.push((i, p)),
            }
        }
        FreeElement { components: out }
    }

    /// Wraps a polynomial as a rank-1 module element.
    pub fn from_polynomial(p: Polynomial) -> Self {
        if p.is_zero() {
            FreeElement::zero()
        } else {
            FreeElement {
                components: alloc::vec![(0, p)],
            }
        }
    }

    pub fn single(index: usize, p: Polynomial) -> Self {
        if p.is_zero() {
            FreeElement::zero()
        } else {
            FreeElement {
                components: alloc::vec![(index, p)],
            }
        }
    }

    #[inline]
    pub fn components(&self) -> &[(usize, Polynomial)] {
        &self.components
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, index: usize) -> Option<&Polynomial> {
        self.components
            .iter()
            .find(|(i, _)| *i == index)
            .map(|(_, p)| p)
    }

    pub fn max_index(&self) -> Option<usize> {
        self.components.last().map(|(i, _)| *i)
    }

    /// As a polynomial, requiring rank-1 content.
    pub fn into_polynomial(&self, n: usize, field: FieldSpec) -> Polynomial {
        match self.components.first() {
            None => Polynomial::zero(n, field),
            Some((i, p)) => {
                debug_assert_eq!(*i, 0, "rank-1 element expected");
                p.clone()
            }
        }
    }

    /// Leading term under position-over-term: lowest basis index first, then
    /// grevlex within the component.
    pub fn leading(&self) -> Option<(usize, &Monomial, u64)> {
        self.components
            .first()
            .and_then(|(i, p)| p.leading().map(|(m, c)| (*i, m, *c)))
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        let mut out: Vec<(usize, Polynomial)> = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.components.len() || j < other.components.len() {
            if j >= other.components.len()
                || (i < self.components.len() && self.components[i].0 < other.components[j].0)
            {
                out.push(self.components[i].clone());
                i += 1;
            } else if i >= self.components.len() || other.components[j].0 < self.components[i].0 {
                out.push(other.components[j].clone());
                j += 1;
            } else {
                let s = self.components[i]
                    .1
                    .add(&other.components[j].1)
                    .expect("same ambient");
                if !s.is_zero() {
                    out.push((self.components[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        FreeElement { components: out }
    }

    pub fn neg(&self) -> FreeElement {
        FreeElement {
            components: self
                .components
                .iter()
                .map(|(i, p)| (*i, p.neg()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &FreeElement) -> FreeElement {
        self.add(&other.neg())
    }

    pub fn mul_term(&self, m: &Monomial, c: u64) -> Result<FreeElement> {
        let mut comps = Vec::with_capacity(self.components.len());
        for (i, p) in &self.components {
            let q = p.mul_term(m, c)?;
            if !q.is_zero() {
                comps.push((*i, q));
            }
        }
        Ok(FreeElement { components: comps })
    }

    pub fn mul_poly(&self, g: &Polynomial) -> Result<FreeElement> {
        let mut acc = FreeElement::zero();
        for (m, c) in g.terms() {
            acc = acc.add(&self.mul_term(m, *c)?);
        }
        Ok(acc)
    }

    pub fn scale(&self, c: u64, field: FieldSpec) -> FreeElement {
        let c = field.reduce(c);
        if c == 0 {
            return FreeElement::zero();
        }
        FreeElement {
            components: self
                .components
                .iter()
                .map(|(i, p)| (*i, p.scale(c)))
                .collect(),
        }
    }

    pub fn embed_wider(&self, n_new: usize) -> Result<FreeElement> {
        let comps: Result<Vec<_>> = self
            .components
            .iter()
            .map(|(i, p)| Ok((*i, p.embed_wider(n_new)?)))
            .collect();
        Ok(FreeElement { components: comps? })
    }

    /// Internal degree with respect to `twists`, provided the element is
    /// homogeneous; `None` for zero or inhomogeneous elements.
    pub fn homogeneous_degree(&self, twists: &[i64]) -> Option<i64> {
        let mut deg: Option<i64> = None;
        for (i, p) in &self.components {
            let t = twists[*i];
            for (m, _) in p.terms() {
                let d = m.degree() as i64 + t;
                match deg {
                    None => deg = Some(d),
                    Some(e) if e == d => {}
                    Some(_) => return None,
                }
            }
        }
        deg
    }
}

/// Position-over-term comparison of leading terms, used by the Groebner
/// machinery. `None` components (zero elements) sort below everything.
pub fn pot_term_compare(a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    match a.0.cmp(&b.0) {
        // lower basis index is the *larger* position
        Ordering::Less => Ordering::Greater,
        Ordering::Greater => Ordering::Less,
        Ordering::Equal => grevlex(a.1, b.1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f3() -> FieldSpec {
        FieldSpec::new(3).unwrap()
    }

    fn mono(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        // x1^2 > x1*x2 in two variables
        assert_eq!(
            monomial_compare(&mono(&[2, 0]), &mono(&[1, 1])).unwrap(),
            Ordering::Greater
        );
        // x2^2 > x1*x3 in three variables
        assert_eq!(
            monomial_compare(&mono(&[0, 2, 0]), &mono(&[1, 0, 1])).unwrap(),
            Ordering::Greater
        );
        let a = mono(&[1, 2, 3]);
        assert_eq!(monomial_compare(&a, &a).unwrap(), Ordering::Equal);
        assert!(monomial_compare(&mono(&[1]), &mono(&[1, 0])).is_err());
    }

    fn random_monomial(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> Monomial {
        Monomial::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect())
    }

    #[test]
    fn grevlex_is_a_monomial_order() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let n = rng.gen_range(1..5);
            let a = random_monomial(&mut rng, n, 4);
            let b = random_monomial(&mut rng, n, 4);
            let c = random_monomial(&mut rng, n, 4);
            // antisymmetry
            assert_eq!(grevlex(&a, &b), grevlex(&b, &a).reverse());
            // transitivity on a sorted triple
            let mut v = [a.clone(), b.clone(), c.clone()];
            v.sort();
            assert!(grevlex(&v[0], &v[2]) != Ordering::Greater);
            // multiplicative: a < b implies a*c < b*c
            if grevlex(&a, &b) == Ordering::Less {
                assert_eq!(
                    grevlex(&a.mul(&c).unwrap(), &b.mul(&c).unwrap()),
                    Ordering::Less
                );
            }
        }
    }

    fn poly(s: &str, n: usize) -> Polynomial {
        parse_polynomial(s, n, f3()).unwrap()
    }

    #[test]
    fn difference_of_squares_mod_3() {
        let a = poly("x1 + x2", 2);
        let b = poly("x1 + 2*x2", 2); // x1 - x2 mod 3
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod, poly("x1^2 + 2*x2^2", 2));
    }

    #[test]
    fn additive_identity() {
        let a = poly("x1^2 + 2*x2^2", 2);
        assert_eq!(a.add(&Polynomial::zero(2, f3())).unwrap(), a);
    }

    #[test]
    fn frobenius_cube_mod_3() {
        let a = poly("x1 + x2", 2);
        let cube = a.mul(&a).unwrap().mul(&a).unwrap();
        assert_eq!(cube, poly("x1^3 + x2^3", 2));
    }

    #[test]
    fn ring_axioms_on_random_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let field = f3();
        for _ in 0..50 {
            let n = rng.gen_range(1..4);
            let rand_poly = |rng: &mut ChaCha8Rng| {
                let terms: Vec<_> = (0..rng.gen_range(0..4))
                    .map(|_| (random_monomial(rng, n, 3), rng.gen_range(1..3u64)))
                    .collect();
                Polynomial::from_terms(n, field, terms).unwrap()
            };
            let (a, b, c) = (rand_poly(&mut rng), rand_poly(&mut rng), rand_poly(&mut rng));
            assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
            assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn homogeneous_products() {
        let a = poly("x1 + x2", 2);
        let b = poly("x1^2 + x1*x2", 2);
        assert!(a.is_homogeneous() && b.is_homogeneous());
        let prod = a.mul(&b).unwrap();
        assert!(prod.is_homogeneous());
        assert_eq!(prod.degree(), Some(3));
    }

    #[test]
    fn embed_wider_pads() {
        let m = mono(&[2, 1]);
        assert_eq!(m.embed_wider(4).unwrap().exps(), &[2, 1, 0, 0]);
        let one = Polynomial::constant(1, f3(), 1);
        assert_eq!(one.embed_wider(5).unwrap(), Polynomial::constant(5, f3(), 1));
        assert!(mono(&[1, 1]).embed_wider(1).is_err());
    }

    #[test]
    fn embed_wider_preserves_degree() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..50 {
            let n = rng.gen_range(1..4);
            let terms: Vec<_> = (0..rng.gen_range(1..4))
                .map(|_| (random_monomial(&mut rng, n, 3), rng.gen_range(1..3u64)))
                .collect();
            let p = Polynomial::from_terms(n, f3(), terms).unwrap();
            let wide = p.embed_wider(n + rng.gen_range(0..3)).unwrap();
            assert_eq!(p.degree(), wide.degree());
            assert_eq!(p.terms().len(), wide.terms().len());
        }
    }

    #[test]
    fn display_parse_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let field = FieldSpec::new(5).unwrap();
        for _ in 0..50 {
            let n = rng.gen_range(1..4);
            let terms: Vec<_> = (0..rng.gen_range(0..5))
                .map(|_| (random_monomial(&mut rng, n, 4), rng.gen_range(1..5u64)))
                .collect();
            let p = Polynomial::from_terms(n, field, terms).unwrap();
            let text = alloc::format!("{p}");
            let back = parse_polynomial(&text, n, field).unwrap();
            assert_eq!(p, back, "round trip through {text:?}");
        }
        assert_eq!(alloc::format!("{}", poly("2*x1^3*x2", 2)), "2*x1^3*x2");
    }

    #[test]
    fn free_element_leading_is_position_over_term() {
        let e = FreeElement::from_components([
            (2, poly("x1^3", 2)),
            (0, poly("x2", 2)),
        ]);
        let (idx, m, c) = e.leading().unwrap();
        assert_eq!((idx, c), (0, 1));
        assert_eq!(m, &mono(&[0, 1]));
    }

    #[test]
    fn free_element_degrees() {
        let e = FreeElement::from_components([(0, poly("x1^2", 2)), (1, poly("x2", 2))]);
        assert_eq!(e.homogeneous_degree(&[0, 1]), Some(2));
        assert_eq!(e.homogeneous_degree(&[0, 0]), None);
    }
}

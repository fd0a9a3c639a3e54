//! Symmetric Laurent polynomials over `ℚ(q,t)` in the orbit-monomial basis,
//! and the general sparse Laurent polynomials they expand into.

mod mpoly;

use std::collections::BTreeMap;
use std::fmt;

pub use mpoly::{MPoly, NPoly};

use crate::combinat::{distinct_permutations, Signature};
use crate::qfield::{Coeff, CoeffRat, UnitMono};
use crate::Error;

/// `Σ_λ c_λ m_λ` with `m_λ` the sum of the distinct permutations of `x^λ`.
#[derive(Clone, PartialEq)]
pub struct SymLaurent {
    n: usize,
    terms: BTreeMap<Signature, CoeffRat>,
}

/// A point with unit-monomial coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvalPoint {
    pub coords: Vec<UnitMono>,
}

impl EvalPoint {
    pub fn new(coords: Vec<UnitMono>) -> Self {
        EvalPoint { coords }
    }

    /// `x_i = q^{e_i}`.
    pub fn q_powers(e: &[i64]) -> Self {
        EvalPoint { coords: e.iter().map(|&a| UnitMono::q(a)).collect() }
    }
}

/// Sorts a vector into a dominant signature.
fn sorted_sig(e: &[i64]) -> Signature {
    let mut v = e.to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Signature(v)
}

impl SymLaurent {
    pub fn zero(n: usize) -> Self {
        SymLaurent { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, CoeffRat::one())
    }

    pub fn constant(n: usize, c: CoeffRat) -> Self {
        let mut r = Self::zero(n);
        r.add_term(Signature::zero(n), &c);
        r
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Signature, CoeffRat> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `m_λ`.
    pub fn coeff(&self, lam: &Signature) -> CoeffRat {
        self.terms.get(lam).cloned().unwrap_or_else(CoeffRat::zero)
    }

    /// Adds `c·m_λ`; `λ` must be dominant of length `n`.
    pub fn add_term(&mut self, lam: Signature, c: &CoeffRat) {
        debug_assert!(lam.is_dominant() && lam.len() == self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&lam) {
            Some(x) => {
                let s = x.add_ref(c);
                if s.is_zero() {
                    self.terms.remove(&lam);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(lam, c.clone());
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "variable count mismatch");
        let mut r = self.clone();
        for (l, c) in &o.terms {
            r.add_term(l.clone(), c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scalar_mul(&CoeffRat::from_int(-1)))
    }

    pub fn scalar_mul(&self, s: &CoeffRat) -> Self {
        let mut r = Self::zero(self.n);
        if s.is_zero() {
            return r;
        }
        for (l, c) in &self.terms {
            r.terms.insert(l.clone(), c.mul_ref(s));
        }
        r
    }

    /// Product, expanding the operand with fewer monomials and keeping only
    /// dominant exponents of the result.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "variable count mismatch");
        let (small, big) = if self.monomial_count() <= o.monomial_count() { (self, o) } else { (o, self) };
        let expanded = small.to_npoly();
        let mut r = Self::zero(self.n);
        for (mu, d) in &big.terms {
            for beta in distinct_permutations(&mu.0) {
                for (alpha, c) in expanded.terms() {
                    let e: Vec<i64> = alpha.iter().zip(&beta).map(|(a, b)| a + b).collect();
                    if e.windows(2).all(|w| w[0] >= w[1]) {
                        r.add_term(Signature(e), &c.mul_ref(d));
                    }
                }
            }
        }
        r
    }

    fn monomial_count(&self) -> usize {
        self.terms.keys().map(|l| orbit_size(&l.0)).sum()
    }

    /// Multiplication by `(x_1⋯x_n)^c`.
    pub fn mono_shift(&self, c: i64) -> Self {
        SymLaurent {
            n: self.n,
            terms: self.terms.iter().map(|(l, x)| (l.shifted_by(c), x.clone())).collect(),
        }
    }

    /// Exact evaluation at a unit-monomial point.
    pub fn eval(&self, p: &EvalPoint) -> Result<CoeffRat, Error> {
        if p.coords.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: p.coords.len() });
        }
        let mut acc = CoeffRat::zero();
        for (lam, c) in &self.terms {
            let mut orbit = crate::qfield::LaurentQT::zero();
            for beta in distinct_permutations(&lam.0) {
                let mut m = UnitMono::one();
                for (u, &k) in p.coords.iter().zip(&beta) {
                    m = m.mul(&u.pow(k));
                }
                orbit = orbit.add_ref(&<crate::qfield::LaurentQT as Coeff>::from_unit(&m));
            }
            acc = acc.add_ref(&c.mul_ref(&CoeffRat::from_laurent(orbit)));
        }
        Ok(acc)
    }

    /// Expansion into explicit monomials.
    pub fn to_npoly(&self) -> NPoly {
        let mut r = NPoly::zero(self.n);
        for (lam, c) in &self.terms {
            for beta in distinct_permutations(&lam.0) {
                r.add_term(beta, c);
            }
        }
        r
    }

    /// Collects a symmetric polynomial into the orbit basis, checking that
    /// every monomial carries the coefficient of its dominant rearrangement.
    pub fn from_npoly(p: &NPoly) -> Result<Self, Error> {
        let mut r = Self::zero(p.nvars());
        let mut count = 0usize;
        for (e, c) in p.terms() {
            let s = sorted_sig(e);
            if s.0 == *e {
                count += orbit_size(e);
                r.terms.insert(s, c.clone());
            }
        }
        if count != p.len() {
            return Err(Error::NotSymmetric);
        }
        for (e, c) in p.terms() {
            if r.terms.get(&sorted_sig(e)) != Some(c) {
                return Err(Error::NotSymmetric);
            }
        }
        Ok(r)
    }

    /// Applies a coefficient map, e.g. a substitution in q and t.
    pub fn try_map_coeffs<F: Fn(&CoeffRat) -> Result<CoeffRat, Error>>(&self, f: F) -> Result<Self, Error> {
        let mut r = Self::zero(self.n);
        for (l, c) in &self.terms {
            r.add_term(l.clone(), &f(c)?);
        }
        Ok(r)
    }

    /// Substitutes `q ↦ qi`, `t ↦ ti` in every coefficient.
    pub fn subst(&self, qi: &UnitMono, ti: &UnitMono) -> Result<Self, Error> {
        self.try_map_coeffs(|c| c.subst(qi, ti))
    }

    /// JSON form with terms in the signature order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(l, c)| serde_json::json!({"sig": l.0, "coeff": c.to_string()}))
            .collect();
        serde_json::json!({"n": self.n, "basis": "monomial-symmetric", "terms": terms})
    }
}

/// Number of distinct permutations of `v`.
pub fn orbit_size(v: &[i64]) -> usize {
    let mut counts: BTreeMap<i64, usize> = BTreeMap::new();
    for &x in v {
        *counts.entry(x).or_default() += 1;
    }
    let mut r: u128 = 1;
    let mut k: u128 = 0;
    for (_, c) in counts {
        for j in 1..=c as u128 {
            k += 1;
            r = r * k / j;
        }
    }
    r as usize
}

/// The orbit monomial `m_λ`.
pub fn m_sym(lam: &Signature, n: usize) -> Result<SymLaurent, Error> {
    if lam.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: lam.len() });
    }
    let mut r = SymLaurent::zero(n);
    r.add_term(sorted_sig(&lam.0), &CoeffRat::one());
    Ok(r)
}

/// The elementary symmetric polynomial `e_r` in `n` variables.
pub fn e_sym(r: usize, n: usize) -> Result<SymLaurent, Error> {
    if r > n {
        return Err(Error::Domain(format!("e_{r} in {n} variables")));
    }
    let parts: Vec<i64> = (0..n).map(|i| i64::from(i < r)).collect();
    m_sym(&Signature(parts), n)
}

/// Elementary symmetric function `e_r` of the given coefficients.
pub fn elementary(r: usize, xs: &[CoeffRat]) -> CoeffRat {
    let mut e = vec![CoeffRat::zero(); r + 1];
    e[0] = CoeffRat::one();
    for x in xs {
        for j in (1..=r).rev() {
            e[j] = e[j].add_ref(&e[j - 1].mul_ref(x));
        }
    }
    e[r].clone()
}

impl fmt::Display for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("({c})*m{l}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SymLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(v: &[i64]) -> Signature {
        Signature(v.to_vec())
    }

    fn q(a: i64) -> CoeffRat {
        CoeffRat::q_pow(a)
    }

    #[test]
    fn basis_constructors() {
        let m = m_sym(&sig(&[1, -1]), 2).unwrap().to_npoly();
        assert_eq!(m.len(), 2);
        assert_eq!(m.coeff(&[1, -1]), CoeffRat::one());
        assert_eq!(m.coeff(&[-1, 1]), CoeffRat::one());
        assert_eq!(e_sym(0, 3).unwrap(), SymLaurent::one(3));
        assert_eq!(e_sym(2, 2).unwrap(), m_sym(&sig(&[1, 1]), 2).unwrap());
        assert!(m_sym(&sig(&[1]), 2).is_err());
    }

    #[test]
    fn products() {
        let e1 = e_sym(1, 2).unwrap();
        let sq = e1.mul(&e1);
        assert_eq!(sq.coeff(&sig(&[2, 0])), CoeffRat::one());
        assert_eq!(sq.coeff(&sig(&[1, 1])), CoeffRat::from_int(2));
        assert_eq!(sq.len(), 2);
        let p = e_sym(1, 3).unwrap().mul(&e_sym(2, 3).unwrap());
        assert_eq!(p.coeff(&sig(&[2, 1, 0])), CoeffRat::one());
        assert_eq!(p.coeff(&sig(&[1, 1, 1])), CoeffRat::from_int(3));
        assert_eq!(p.len(), 2);
        assert_eq!(e1.mul(&SymLaurent::one(2)), e1);
    }

    #[test]
    fn evaluation() {
        let e1 = e_sym(1, 2).unwrap();
        assert_eq!(e1.eval(&EvalPoint::q_powers(&[1, -1])).unwrap(), q(1) + q(-1));
        assert!(SymLaurent::one(2).eval(&EvalPoint::q_powers(&[5, 3])).unwrap().is_one());
        assert!(e_sym(2, 2).unwrap().eval(&EvalPoint::q_powers(&[2, -2])).unwrap().is_one());
    }

    #[test]
    fn shifts() {
        let e1 = e_sym(1, 2).unwrap();
        assert_eq!(e1.mono_shift(1), m_sym(&sig(&[2, 1]), 2).unwrap());
        assert_eq!(e1.mono_shift(0), e1);
        assert_eq!(SymLaurent::one(2).mono_shift(-1), m_sym(&sig(&[-1, -1]), 2).unwrap());
    }

    #[test]
    fn npoly_roundtrip_rejects_asymmetric() {
        let f = e_sym(1, 3).unwrap().mul(&e_sym(1, 3).unwrap());
        assert_eq!(SymLaurent::from_npoly(&f.to_npoly()).unwrap(), f);
        assert!(SymLaurent::from_npoly(&NPoly::var(2, 0)).is_err());
    }

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&[1, 1, 0]), 3);
        assert_eq!(orbit_size(&[2, 1, 0]), 6);
        assert_eq!(orbit_size(&[0, 0, 0, 0]), 1);
    }
}

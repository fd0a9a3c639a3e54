use std::collections::BTreeMap;
use std::fmt;

use crate::qfield::{Coeff, CoeffRat, LaurentQT, UnitMono};
use crate::Error;

/// Sparse Laurent polynomial in `n` variables with coefficients in `C`.
#[derive(Clone, PartialEq)]
pub struct MPoly<C: Coeff> {
    n: usize,
    terms: BTreeMap<Vec<i64>, C>,
}

/// Non-symmetric Laurent polynomial over the rational functions in q, t.
pub type NPoly = MPoly<CoeffRat>;

impl<C: Coeff> MPoly<C> {
    pub fn zero(n: usize) -> Self {
        MPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], C::one())
    }

    pub fn constant(n: usize, c: C) -> Self {
        Self::monomial(vec![0; n], c)
    }

    pub fn monomial(exp: Vec<i64>, c: C) -> Self {
        let n = exp.len();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        MPoly { n, terms }
    }

    /// The variable `x_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, C)>>(n: usize, it: I) -> Self {
        let mut p = Self::zero(n);
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, C> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Vec<i64>, C> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[i64]) -> C {
        self.terms.get(e).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: &C) {
        debug_assert_eq!(e.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(x) => {
                let s = x.cadd(c);
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *x = s;
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn add_assign_ref(&mut self, o: &Self) {
        assert_eq!(self.n, o.n, "variable count mismatch");
        for (e, c) in &o.terms {
            self.add_term(e.clone(), c);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        r.add_assign_ref(o);
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), &c.cneg());
        }
        r
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.cneg())
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.n);
        }
        self.map_coeffs(|c| c.cmul(s))
    }

    pub fn scale_unit(&self, u: &UnitMono) -> Self {
        self.map_coeffs(|c| c.mul_unit(u))
    }

    pub fn map_coeffs<F: Fn(&C) -> C>(&self, f: F) -> Self {
        let mut r = Self::zero(self.n);
        for (e, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                r.terms.insert(e.clone(), v);
            }
        }
        r
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "variable count mismatch");
        let mut r = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, &c1.cmul(c2));
            }
        }
        r
    }

    /// Multiplies by the monomial `x^e`.
    pub fn mul_monomial(&self, e: &[i64]) -> Self {
        MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(f, c)| (f.iter().zip(e).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Substitutes `x_i ↦ u_i x_i` for every variable.
    pub fn scale_vars(&self, u: &[UnitMono]) -> Self {
        let mut r = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut m = UnitMono::one();
            for (ui, &k) in u.iter().zip(e) {
                if k != 0 {
                    m = m.mul(&ui.pow(k));
                }
            }
            r.terms.insert(e.clone(), c.mul_unit(&m));
        }
        r
    }

    /// Substitutes `x_i ↦ u x_i` for `i ∈ idx`.
    pub fn scale_some_vars(&self, idx: &[usize], u: &UnitMono) -> Self {
        let mut v = vec![UnitMono::one(); self.n];
        for &i in idx {
            v[i] = *u;
        }
        self.scale_vars(&v)
    }

    /// Swaps the variables `x_i` and `x_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f.swap(i, j);
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Renames variables: variable `i` of `self` becomes variable `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        MPoly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = vec![0; self.n];
                    for (i, &k) in e.iter().enumerate() {
                        f[perm[i]] = k;
                    }
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Appends a variable carrying exponent `k` in every term.
    pub fn extend_var(&self, k: i64) -> Self {
        MPoly {
            n: self.n + 1,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut f = e.clone();
                    f.push(k);
                    (f, c.clone())
                })
                .collect(),
        }
    }

    /// Exact quotient by `x_a - x_b`.
    ///
    /// Terms are grouped into lines with fixed exponents outside `{a, b}` and
    /// fixed `e_a + e_b`; on each line the division is a one-variable
    /// synthetic division. Returns an error when the division is not exact.
    pub fn div_linear(&self, a: usize, b: usize) -> Result<Self, Error> {
        let mut lines: BTreeMap<Vec<i64>, BTreeMap<i64, C>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut key = e.clone();
            let ea = e[a];
            key[a] = 0;
            key[b] = e[a] + e[b];
            lines.entry(key).or_default().insert(ea, c.clone());
        }
        let mut r = Self::zero(self.n);
        for (key, line) in lines {
            let s = key[b];
            let jmin = *line.keys().next().unwrap();
            let jmax = *line.keys().next_back().unwrap();
            let mut carry = C::zero();
            let mut j = jmax;
            while j > jmin {
                if let Some(c) = line.get(&j) {
                    carry = carry.cadd(c);
                }
                if !carry.is_zero() {
                    let mut e = key.clone();
                    e[a] = j - 1;
                    e[b] = s - j;
                    r.terms.insert(e, carry.clone());
                }
                j -= 1;
            }
            if !carry.cadd(&line[&jmin]).is_zero() {
                return Err(Error::Domain(format!("polynomial not divisible by x{} - x{}", a + 1, b + 1)));
            }
        }
        Ok(r)
    }

    /// Exact quotient by the Vandermonde product `∏_{i<j} (x_i - x_j)`.
    pub fn div_vandermonde(&self) -> Result<Self, Error> {
        let mut r = self.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                r = r.div_linear(i, j)?;
            }
        }
        Ok(r)
    }

    /// The product `∏_{i<j} (x_i - x_j)`.
    pub fn vandermonde(n: usize) -> Self {
        let mut r = Self::one(n);
        for i in 0..n {
            for j in i + 1..n {
                r = r.mul(&Self::var(n, i).sub(&Self::var(n, j)));
            }
        }
        r
    }

    /// True when the polynomial is invariant under every permutation of the
    /// variables.
    pub fn is_symmetric(&self) -> bool {
        (0..self.n.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// True when invariant under `x_i ↔ x_{i+1}`.
    pub fn is_symmetric_in(&self, i: usize) -> bool {
        self.swap_vars(i, i + 1) == *self
    }

    /// Total exponent bounds per variable, or `None` for the zero polynomial.
    pub fn degree_bounds(&self) -> Option<Vec<(i64, i64)>> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut b: Vec<(i64, i64)> = first.iter().map(|&x| (x, x)).collect();
        for e in it {
            for (bb, &x) in b.iter_mut().zip(e) {
                bb.0 = bb.0.min(x);
                bb.1 = bb.1.max(x);
            }
        }
        Some(b)
    }
}

impl MPoly<CoeffRat> {
    /// Writes `self = F / d` with Laurent polynomial coefficients `F` and a
    /// common denominator `d`.
    pub fn clear_denominators(&self) -> (MPoly<LaurentQT>, LaurentQT) {
        let mut d = LaurentQT::one();
        for c in self.terms.values() {
            if !c.den().is_one() {
                let g = d.gcd(c.den());
                d = d.mul_ref(&c.den().div_exact(&g).expect("gcd divides"));
            }
        }
        let mut f = MPoly::zero(self.n);
        for (e, c) in &self.terms {
            let m = d.div_exact(c.den()).expect("common denominator");
            f.terms.insert(e.clone(), c.num().mul_ref(&m));
        }
        (f, d)
    }

    /// Inverse of [`MPoly::clear_denominators`].
    pub fn from_cleared(f: &MPoly<LaurentQT>, d: &LaurentQT) -> Result<Self, Error> {
        let mut r = MPoly::zero(f.n);
        for (e, c) in &f.terms {
            let v = CoeffRat::new(c.clone(), d.clone())?;
            if !v.is_zero() {
                r.terms.insert(e.clone(), v);
            }
        }
        Ok(r)
    }

    /// Lifts a Laurent-coefficient polynomial.
    pub fn from_laurent_poly(f: &MPoly<LaurentQT>) -> Self {
        MPoly {
            n: f.n,
            terms: f.terms.iter().map(|(e, c)| (e.clone(), CoeffRat::from_laurent(c.clone()))).collect(),
        }
    }

    /// Substitutes units for the variables and sums exactly.
    pub fn eval(&self, pt: &[UnitMono]) -> CoeffRat {
        let mut acc = CoeffRat::zero();
        for (e, c) in &self.terms {
            let mut m = UnitMono::one();
            for (u, &k) in pt.iter().zip(e) {
                m = m.mul(&u.pow(k));
            }
            acc = acc.add_ref(&c.mul_unit(&m));
        }
        acc
    }

    /// JSON form `{"n": …, "basis": "monomial", "terms": [{"exp": …, "coeff": …}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| serde_json::json!({"exp": e, "coeff": c.to_string()}))
            .collect();
        serde_json::json!({"n": self.n, "basis": "monomial", "terms": terms})
    }
}

impl<C: Coeff + fmt::Display> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, k) })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<C: Coeff + fmt::Display> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

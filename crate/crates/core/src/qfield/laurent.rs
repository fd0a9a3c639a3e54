use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::dense::{b_div_exact, b_gcd, BiPoly};
use super::UnitMono;

/// Exponent pair `(a, b)` standing for `q^a t^b`.
pub type Exp2 = (i64, i64);

/// Sparse Laurent polynomial in q and t with big-integer coefficients.
///
/// Terms are stored sorted by exponent pair with no zero coefficients, so two
/// values are equal exactly when their term vectors are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentQT {
    terms: Vec<(Exp2, BigInt)>,
}

/// Graded-lex comparison with q before t: total degree first, then the
/// q exponent.
pub(crate) fn grlex(x: &Exp2, y: &Exp2) -> Ordering {
    (x.0 + x.1, x.0).cmp(&(y.0 + y.1, y.0))
}

impl LaurentQT {
    pub fn zero() -> Self {
        LaurentQT { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::monomial((0, 0), BigInt::from(c))
    }

    pub fn monomial(e: Exp2, c: BigInt) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentQT { terms: vec![(e, c)] }
        }
    }

    /// `q^a`.
    pub fn q_pow(a: i64) -> Self {
        Self::monomial((a, 0), BigInt::one())
    }

    /// `t^b`.
    pub fn t_pow(b: i64) -> Self {
        Self::monomial((0, b), BigInt::one())
    }

    /// Builds a value from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Exp2, BigInt)>>(it: I) -> Self {
        let mut acc: BTreeMap<Exp2, BigInt> = BTreeMap::new();
        for (e, c) in it {
            *acc.entry(e).or_insert_with(BigInt::zero) += c;
        }
        LaurentQT {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Exp2, BigInt)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The single term if this is a monomial.
    pub fn as_monomial(&self) -> Option<(Exp2, &BigInt)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((*e, c)),
            _ => None,
        }
    }

    /// Coefficient-wise minimum of the exponents (the monomial content).
    pub fn min_exponents(&self) -> Exp2 {
        let a = self.terms.iter().map(|(e, _)| e.0).min().unwrap_or(0);
        let b = self.terms.iter().map(|(e, _)| e.1).min().unwrap_or(0);
        (a, b)
    }

    /// Term that is largest in graded-lex order.
    pub fn leading_term(&self) -> Option<&(Exp2, BigInt)> {
        self.terms.iter().max_by(|x, y| grlex(&x.0, &y.0))
    }

    /// Multiplies by `±q^a t^b`.
    pub fn mul_unit(&self, u: &UnitMono) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|((a, b), c)| {
                let c = if u.sign < 0 { -c } else { c.clone() };
                ((a + u.a, b + u.b), c)
            })
            .collect();
        LaurentQT { terms }
    }

    pub fn shift(&self, da: i64, db: i64) -> Self {
        self.mul_unit(&UnitMono::new(1, da, db))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentQT {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (x, y) = (&self.terms, &other.terms);
        while i < x.len() || j < y.len() {
            let ord = if i == x.len() {
                Ordering::Greater
            } else if j == y.len() {
                Ordering::Less
            } else {
                x[i].0.cmp(&y[j].0)
            };
            match ord {
                Ordering::Less => {
                    out.push(x[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&y[j].1 } else { y[j].1.clone() };
                    out.push((y[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &x[i].1 - &y[j].1 } else { &x[i].1 + &y[j].1 };
                    if !c.is_zero() {
                        out.push((x[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        LaurentQT { terms: out }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some((e, c)) = other.as_monomial() {
            return LaurentQT {
                terms: self.terms.iter().map(|(f, x)| ((f.0 + e.0, f.1 + e.1), x * c)).collect(),
            };
        }
        if let Some((e, c)) = self.as_monomial() {
            return LaurentQT {
                terms: other.terms.iter().map(|(f, x)| ((f.0 + e.0, f.1 + e.1), x * c)).collect(),
            };
        }
        let mut acc: BTreeMap<Exp2, BigInt> = BTreeMap::new();
        for (e, x) in &self.terms {
            for (f, y) in &other.terms {
                *acc.entry((e.0 + f.0, e.1 + f.1)).or_insert_with(BigInt::zero) += x * y;
            }
        }
        LaurentQT {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn neg_ref(&self) -> Self {
        LaurentQT {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::one();
        for _ in 0..k {
            r = r.mul_ref(self);
        }
        r
    }

    /// Applies the substitution `q ↦ qi`, `t ↦ ti`.
    pub fn subst(&self, qi: &UnitMono, ti: &UnitMono) -> Self {
        Self::from_terms(self.terms.iter().map(|((a, b), c)| {
            let u = qi.pow(*a).mul(&ti.pow(*b));
            let c = if u.sign < 0 { -c } else { c.clone() };
            ((u.a, u.b), c)
        }))
    }

    /// Dense form of `self / q^{m.0} t^{m.1}`; every exponent must be at
    /// least `m`.
    pub(crate) fn to_dense(&self, m: Exp2) -> BiPoly {
        let tdeg = self.terms.iter().map(|(e, _)| e.1 - m.1).max().unwrap_or(-1);
        let mut out: BiPoly = vec![Vec::new(); (tdeg + 1) as usize];
        for ((a, b), c) in &self.terms {
            let row = &mut out[(b - m.1) as usize];
            let idx = (a - m.0) as usize;
            if row.len() <= idx {
                row.resize(idx + 1, BigInt::zero());
            }
            row[idx] = c.clone();
        }
        out
    }

    pub(crate) fn from_dense(p: &BiPoly, m: Exp2) -> Self {
        let mut terms = Vec::new();
        for (b, row) in p.iter().enumerate() {
            for (a, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    terms.push(((a as i64 + m.0, b as i64 + m.1), c.clone()));
                }
            }
        }
        terms.sort_by_key(|x| x.0);
        LaurentQT { terms }
    }

    /// Polynomial gcd of the monomial-free parts, normalized to have no
    /// monomial content and a positive graded-lex leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic_part();
        }
        if other.is_zero() {
            return self.monic_part();
        }
        if self.len() == 1 || other.len() == 1 {
            let ca = self.int_content();
            let cb = other.int_content();
            return LaurentQT::monomial((0, 0), num_integer::Integer::gcd(&ca, &cb));
        }
        let a = self.to_dense(self.min_exponents());
        let b = other.to_dense(other.min_exponents());
        let g = LaurentQT::from_dense(&b_gcd(&a, &b), (0, 0));
        g.monic_part()
    }

    fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = num_integer::Integer::gcd(&g, c);
        }
        g
    }

    /// Removes the monomial content and makes the graded-lex leading
    /// coefficient positive.
    pub(crate) fn monic_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let m = self.min_exponents();
        let r = self.shift(-m.0, -m.1);
        if r.leading_term().unwrap().1.is_negative() {
            r.neg_ref()
        } else {
            r
        }
    }

    /// Exact quotient; `None` when `other` does not divide `self` in the
    /// Laurent polynomial ring.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        assert!(!other.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((e, c)) = other.as_monomial() {
            let mut terms = Vec::with_capacity(self.terms.len());
            for (f, x) in &self.terms {
                let (qt, r) = num_integer::Integer::div_rem(x, c);
                if !r.is_zero() {
                    return None;
                }
                terms.push(((f.0 - e.0, f.1 - e.1), qt));
            }
            return Some(LaurentQT { terms });
        }
        let ms = self.min_exponents();
        let mo = other.min_exponents();
        let a = self.to_dense(ms);
        let b = other.to_dense(mo);
        let quot = b_div_exact(&a, &b)?;
        Some(LaurentQT::from_dense(&quot, (ms.0 - mo.0, ms.1 - mo.1)))
    }

    /// Terms sorted for display: descending graded-lex.
    pub fn display_terms(&self) -> Vec<&(Exp2, BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|x, y| grlex(&y.0, &x.0));
        v
    }
}

fn fmt_monomial(a: i64, b: i64) -> String {
    let mut parts = Vec::new();
    match a {
        0 => {}
        1 => parts.push("q".to_string()),
        _ => parts.push(format!("q^{a}")),
    }
    match b {
        0 => {}
        1 => parts.push("t".to_string()),
        _ => parts.push(format!("t^{b}")),
    }
    parts.join("*")
}

impl fmt::Display for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((a, b), c)) in self.display_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = fmt_monomial(*a, *b);
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $r:ident) => {
        impl $tr<&LaurentQT> for &LaurentQT {
            type Output = LaurentQT;
            fn $m(self, rhs: &LaurentQT) -> LaurentQT {
                self.$r(rhs)
            }
        }
        impl $tr for LaurentQT {
            type Output = LaurentQT;
            fn $m(self, rhs: LaurentQT) -> LaurentQT {
                (&self).$r(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Neg for LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        self.neg_ref()
    }
}

impl Neg for &LaurentQT {
    type Output = LaurentQT;
    fn neg(self) -> LaurentQT {
        self.neg_ref()
    }
}

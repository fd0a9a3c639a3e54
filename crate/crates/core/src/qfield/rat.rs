use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::{LaurentQT, UnitMono};
use crate::Error;

/// Exact rational function in q and t.
///
/// Canonical form: the denominator is a polynomial without monomial content,
/// with positive graded-lex leading coefficient, coprime to the numerator.
/// Laurent content lives in the numerator. Equal values therefore have equal
/// representations, and `==` is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoeffRat {
    num: LaurentQT,
    den: LaurentQT,
}

impl Default for CoeffRat {
    fn default() -> Self {
        CoeffRat::zero()
    }
}

impl CoeffRat {
    pub fn zero() -> Self {
        CoeffRat { num: LaurentQT::zero(), den: LaurentQT::one() }
    }

    pub fn one() -> Self {
        CoeffRat { num: LaurentQT::one(), den: LaurentQT::one() }
    }

    pub fn from_int(c: i64) -> Self {
        CoeffRat::from_laurent(LaurentQT::from_int(c))
    }

    pub fn from_laurent(num: LaurentQT) -> Self {
        CoeffRat { num, den: LaurentQT::one() }
    }

    pub fn from_unit(u: &UnitMono) -> Self {
        CoeffRat::from_laurent(LaurentQT::monomial((u.a, u.b), BigInt::from(u.sign)))
    }

    /// `q^a`.
    pub fn q_pow(a: i64) -> Self {
        CoeffRat::from_laurent(LaurentQT::q_pow(a))
    }

    /// `t^b`.
    pub fn t_pow(b: i64) -> Self {
        CoeffRat::from_laurent(LaurentQT::t_pow(b))
    }

    /// Reduces `num / den` to canonical form.
    pub fn new(num: LaurentQT, den: LaurentQT) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentQT, den: LaurentQT) -> Self {
        if num.is_zero() {
            return CoeffRat::zero();
        }
        let m = den.min_exponents();
        let (mut num, mut den) = (num.shift(-m.0, -m.1), den.shift(-m.0, -m.1));
        if let Some((_, c)) = den.as_monomial() {
            let g = num_integer::Integer::gcd(&Self::content(&num), c);
            let s = if c.is_negative() { -g } else { g };
            let den = LaurentQT::monomial((0, 0), c / &s);
            let num = num.div_exact(&LaurentQT::monomial((0, 0), s)).unwrap();
            return CoeffRat { num, den };
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        if den.leading_term().unwrap().1.is_negative() {
            num = -num;
            den = -den;
        }
        CoeffRat { num, den }
    }

    fn content(x: &LaurentQT) -> BigInt {
        x.terms().iter().fold(BigInt::from(0), |g, (_, c)| num_integer::Integer::gcd(&g, c))
    }

    pub fn num(&self) -> &LaurentQT {
        &self.num
    }

    pub fn den(&self) -> &LaurentQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Laurent polynomial, if the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&LaurentQT> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add_ref(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return CoeffRat::from_laurent(&self.num + &o.num);
            }
            return Self::reduce(&self.num + &o.num, self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        if g.is_one() {
            let num = &(&self.num * &o.den) + &(&o.num * &self.den);
            let den = &self.den * &o.den;
            return Self::finish(num, den);
        }
        let da = self.den.div_exact(&g).unwrap();
        let db = o.den.div_exact(&g).unwrap();
        let num = &(&self.num * &db) + &(&o.num * &da);
        if num.is_zero() {
            return CoeffRat::zero();
        }
        let den = &self.den * &db;
        let h = num.gcd(&g);
        if h.is_one() {
            Self::finish(num, den)
        } else {
            Self::finish(num.div_exact(&h).unwrap(), den.div_exact(&h).unwrap())
        }
    }

    /// Fixes the sign of an already coprime pair.
    fn finish(num: LaurentQT, den: LaurentQT) -> Self {
        if num.is_zero() {
            return CoeffRat::zero();
        }
        if den.leading_term().unwrap().1.is_negative() {
            CoeffRat { num: -num, den: -den }
        } else {
            CoeffRat { num, den }
        }
    }

    pub fn sub_ref(&self, o: &Self) -> Self {
        self.add_ref(&o.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        CoeffRat { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul_ref(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return CoeffRat::zero();
        }
        if self.den.is_one() && o.den.is_one() {
            return CoeffRat::from_laurent(&self.num * &o.num);
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), o.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), o.den.div_exact(&g1).unwrap())
        };
        let (n2, d1) = if g2.is_one() {
            (o.num.clone(), self.den.clone())
        } else {
            (o.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        Self::normalize_den(&n1 * &n2, &d1 * &d2)
    }

    /// Moves a monomial denominator content and sign into the numerator for a
    /// coprime pair.
    fn normalize_den(num: LaurentQT, den: LaurentQT) -> Self {
        let m = den.min_exponents();
        let (num, den) = if m != (0, 0) { (num.shift(-m.0, -m.1), den.shift(-m.0, -m.1)) } else { (num, den) };
        Self::finish(num, den)
    }

    pub fn mul_unit(&self, u: &UnitMono) -> Self {
        CoeffRat { num: self.num.mul_unit(u), den: self.den.clone() }
    }

    pub fn inv(&self) -> Result<Self, Error> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalize_den(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, Error> {
        Ok(self.mul_ref(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<Self, Error> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut r = CoeffRat::one();
        for _ in 0..k.unsigned_abs() {
            r = r.mul_ref(&base);
        }
        Ok(r)
    }

    /// The ring homomorphism `q ↦ qi`, `t ↦ ti`, re-reduced.
    pub fn subst(&self, qi: &UnitMono, ti: &UnitMono) -> Result<Self, Error> {
        let num = self.num.subst(qi, ti);
        let den = self.den.subst(qi, ti);
        CoeffRat::new(num, den)
    }
}

fn fmt_part(f: &mut fmt::Formatter<'_>, x: &LaurentQT) -> fmt::Result {
    if x.len() > 1 {
        write!(f, "({x})")
    } else {
        write!(f, "{x}")
    }
}

impl fmt::Display for CoeffRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        fmt_part(f, &self.num)?;
        write!(f, "/")?;
        fmt_part(f, &self.den)
    }
}

impl fmt::Debug for CoeffRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<LaurentQT> for CoeffRat {
    fn from(x: LaurentQT) -> Self {
        CoeffRat::from_laurent(x)
    }
}

impl From<i64> for CoeffRat {
    fn from(x: i64) -> Self {
        CoeffRat::from_int(x)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $r:ident) => {
        impl $tr<&CoeffRat> for &CoeffRat {
            type Output = CoeffRat;
            fn $m(self, rhs: &CoeffRat) -> CoeffRat {
                self.$r(rhs)
            }
        }
        impl $tr for CoeffRat {
            type Output = CoeffRat;
            fn $m(self, rhs: CoeffRat) -> CoeffRat {
                (&self).$r(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

/// Panics on division by zero; use [`CoeffRat::checked_div`] for a fallible
/// variant.
impl Div<&CoeffRat> for &CoeffRat {
    type Output = CoeffRat;
    fn div(self, rhs: &CoeffRat) -> CoeffRat {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Div for CoeffRat {
    type Output = CoeffRat;
    fn div(self, rhs: CoeffRat) -> CoeffRat {
        &self / &rhs
    }
}

impl Neg for CoeffRat {
    type Output = CoeffRat;
    fn neg(self) -> CoeffRat {
        self.neg_ref()
    }
}

impl Neg for &CoeffRat {
    type Output = CoeffRat;
    fn neg(self) -> CoeffRat {
        self.neg_ref()
    }
}

impl std::iter::Sum for CoeffRat {
    fn sum<I: Iterator<Item = CoeffRat>>(iter: I) -> CoeffRat {
        iter.fold(CoeffRat::zero(), |a, b| a.add_ref(&b))
    }
}

impl std::iter::Product for CoeffRat {
    fn product<I: Iterator<Item = CoeffRat>>(iter: I) -> CoeffRat {
        iter.fold(CoeffRat::one(), |a, b| a.mul_ref(&b))
    }
}

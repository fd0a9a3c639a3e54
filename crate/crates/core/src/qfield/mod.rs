//! Exact coefficient arithmetic in q and t: Laurent polynomials, rational
//! functions, q-numbers, q-factorials and finite Pochhammer products.

mod dense;
mod laurent;
mod rat;
mod unit;

use std::fmt::Debug;

use num_bigint::BigInt;

pub use laurent::{Exp2, LaurentQT};
pub use rat::CoeffRat;
pub use unit::UnitMono;

use crate::Error;

/// Coefficient ring for sparse polynomials.
///
/// Implemented by [`LaurentQT`] (used when denominators have been cleared)
/// and [`CoeffRat`].
pub trait Coeff: Clone + PartialEq + Debug + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn cadd(&self, o: &Self) -> Self;
    fn csub(&self, o: &Self) -> Self;
    fn cmul(&self, o: &Self) -> Self;
    fn cneg(&self) -> Self;
    fn from_unit(u: &UnitMono) -> Self;
    fn mul_unit(&self, u: &UnitMono) -> Self;
}

impl Coeff for LaurentQT {
    fn zero() -> Self {
        LaurentQT::zero()
    }
    fn one() -> Self {
        LaurentQT::one()
    }
    fn is_zero(&self) -> bool {
        LaurentQT::is_zero(self)
    }
    fn cadd(&self, o: &Self) -> Self {
        self.add_ref(o)
    }
    fn csub(&self, o: &Self) -> Self {
        self.sub_ref(o)
    }
    fn cmul(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn cneg(&self) -> Self {
        self.neg_ref()
    }
    fn from_unit(u: &UnitMono) -> Self {
        LaurentQT::monomial((u.a, u.b), BigInt::from(u.sign))
    }
    fn mul_unit(&self, u: &UnitMono) -> Self {
        LaurentQT::mul_unit(self, u)
    }
}

impl Coeff for CoeffRat {
    fn zero() -> Self {
        CoeffRat::zero()
    }
    fn one() -> Self {
        CoeffRat::one()
    }
    fn is_zero(&self) -> bool {
        CoeffRat::is_zero(self)
    }
    fn cadd(&self, o: &Self) -> Self {
        self.add_ref(o)
    }
    fn csub(&self, o: &Self) -> Self {
        self.sub_ref(o)
    }
    fn cmul(&self, o: &Self) -> Self {
        self.mul_ref(o)
    }
    fn cneg(&self) -> Self {
        self.neg_ref()
    }
    fn from_unit(u: &UnitMono) -> Self {
        CoeffRat::from_unit(u)
    }
    fn mul_unit(&self, u: &UnitMono) -> Self {
        CoeffRat::mul_unit(self, u)
    }
}

/// The q-number `[a]` as a Laurent polynomial.
pub fn qnum_laurent(a: i64) -> LaurentQT {
    let (sign, m) = if a < 0 { (-1, -a) } else { (1, a) };
    LaurentQT::from_terms((0..m).map(|j| ((m - 1 - 2 * j, 0), BigInt::from(sign))))
}

/// The q-number `[a] = (q^a - q^{-a}) / (q - q^{-1})`.
pub fn qnum(a: i64) -> CoeffRat {
    CoeffRat::from_laurent(qnum_laurent(a))
}

/// The falling q-factorial `[a]_m = [a][a-1]...[a-m+1]` as a Laurent
/// polynomial.
pub fn qfall_laurent(a: i64, m: u32) -> LaurentQT {
    let mut r = LaurentQT::one();
    for j in 0..m as i64 {
        r = r.mul_ref(&qnum_laurent(a - j));
        if r.is_zero() {
            break;
        }
    }
    r
}

/// The falling q-factorial `[a]_m`.
pub fn qfall(a: i64, m: u32) -> CoeffRat {
    CoeffRat::from_laurent(qfall_laurent(a, m))
}

/// The q-factorial `[a]!`.
pub fn qfact(a: i64) -> Result<CoeffRat, Error> {
    if a < 0 {
        return Err(Error::Domain(format!("q-factorial of negative integer {a}")));
    }
    Ok(qfall(a, a as u32))
}

/// `prod_{m=a}^{a+d-1} (1 - q^m t^tpow)`, the finite ratio
/// `(q^a t^tpow; q)_inf / (q^{a+d} t^tpow; q)_inf`.
pub fn poch_ratio(a: i64, d: u32, tpow: u32) -> CoeffRat {
    let mut r = LaurentQT::one();
    for m in a..a + d as i64 {
        let f = LaurentQT::from_terms([((0, 0), BigInt::from(1)), ((m, tpow as i64), BigInt::from(-1))]);
        r = r.mul_ref(&f);
    }
    CoeffRat::from_laurent(r)
}

/// The substitution homomorphism `q ↦ q_image`, `t ↦ t_image`.
pub fn subst(x: &CoeffRat, q_image: &UnitMono, t_image: &UnitMono) -> Result<CoeffRat, Error> {
    x.subst(q_image, t_image)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> CoeffRat {
        CoeffRat::q_pow(a)
    }

    fn t(b: i64) -> CoeffRat {
        CoeffRat::t_pow(b)
    }

    fn one() -> CoeffRat {
        CoeffRat::one()
    }

    #[test]
    fn qnum_examples() {
        assert!(qnum(0).is_zero());
        assert!(qnum(1).is_one());
        assert_eq!(qnum(2), q(1) + q(-1));
        assert_eq!(qnum(-2), -(q(1) + q(-1)));
    }

    #[test]
    fn qfall_and_qfact_examples() {
        assert!(qfall(5, 0).is_one());
        assert_eq!(qfall(2, 2), q(1) + q(-1));
        assert!(qfall(1, 3).is_zero());
        assert!(qfact(0).unwrap().is_one());
        assert!(qfact(1).unwrap().is_one());
        assert_eq!(qfact(3).unwrap(), (q(2) + one() + q(-2)) * (q(1) + q(-1)));
        assert!(qfact(-1).is_err());
    }

    #[test]
    fn poch_ratio_examples() {
        assert!(poch_ratio(3, 0, 2).is_one());
        assert_eq!(poch_ratio(0, 1, 1), one() - t(1));
        assert_eq!(poch_ratio(2, 1, 0), one() - q(2));
    }

    #[test]
    fn subst_examples() {
        let x = one() - t(1);
        assert_eq!(subst(&x, &UnitMono::q(1), &UnitMono::q(2)).unwrap(), one() - q(2));
        let y = (one() - t(1)) / (one() - q(1));
        assert!(subst(&y, &UnitMono::q(1), &UnitMono::q(1)).unwrap().is_one());
        assert_eq!(subst(&qnum(2), &UnitMono::q(-1), &UnitMono::t(1)).unwrap(), q(1) + q(-1));
        assert!(subst(&(one() / (one() - t(1))), &UnitMono::q(1), &UnitMono::one()).is_err());
    }

    #[test]
    fn canonical_rendering() {
        // (1 + q^2)(1 - t^2) / (1 - q^2 t^2)
        let x = (one() + q(2)) * (one() - t(2)) / (one() - q(2) * t(2));
        assert_eq!(x.to_string(), "(q^2*t^2 - q^2 + t^2 - 1)/(q^2*t^2 - 1)");
        assert_eq!((q(-3) / (one() + q(1))).to_string(), "q^-3/(q + 1)");
        assert_eq!((one() / CoeffRat::from_int(-2)).to_string(), "-1/2");
        assert_eq!((q(-1) + q(1)).to_string(), "q + q^-1");
    }

    #[test]
    fn division_cancels_common_factors() {
        let a = (one() - q(1) * t(1)) * (q(3) + t(1));
        let b = (one() - q(1) * t(1)) * (CoeffRat::from_int(2) + q(2));
        let r = &a / &b;
        assert_eq!(r, (q(3) + t(1)) / (CoeffRat::from_int(2) + q(2)));
        assert!((&r / &r).is_one());
        assert_eq!(&(&r * &b) - &a, CoeffRat::zero());
    }
}

use std::fmt;

use serde::{Deserialize, Serialize};

/// A unit monomial `±q^a t^b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnitMono {
    pub sign: i8,
    pub a: i64,
    pub b: i64,
}

impl UnitMono {
    pub fn new(sign: i8, a: i64, b: i64) -> Self {
        assert!(sign == 1 || sign == -1, "unit sign must be ±1");
        UnitMono { sign, a, b }
    }

    pub fn one() -> Self {
        UnitMono::new(1, 0, 0)
    }

    pub fn q(a: i64) -> Self {
        UnitMono::new(1, a, 0)
    }

    pub fn t(b: i64) -> Self {
        UnitMono::new(1, 0, b)
    }

    pub fn is_one(&self) -> bool {
        *self == UnitMono::one()
    }

    pub fn mul(&self, o: &UnitMono) -> UnitMono {
        UnitMono::new(self.sign * o.sign, self.a + o.a, self.b + o.b)
    }

    pub fn inv(&self) -> UnitMono {
        UnitMono::new(self.sign, -self.a, -self.b)
    }

    pub fn pow(&self, k: i64) -> UnitMono {
        let sign = if self.sign < 0 && k.rem_euclid(2) == 1 { -1 } else { 1 };
        UnitMono::new(sign, self.a * k, self.b * k)
    }
}

impl fmt::Display for UnitMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = super::LaurentQT::monomial((self.a, self.b), num_bigint::BigInt::from(self.sign));
        write!(f, "{l}")
    }
}

impl fmt::Debug for UnitMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

//! Dense integer polynomials in one and two variables, used only as the
//! working representation for gcd computations and exact division.
//!
//! A `UPoly` is a coefficient vector indexed by the exponent of q; a `BiPoly`
//! is a coefficient vector over `UPoly` indexed by the exponent of t. Both are
//! kept trimmed: no trailing zero coefficients, and the zero polynomial is the
//! empty vector.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub(crate) type UPoly = Vec<BigInt>;
pub(crate) type BiPoly = Vec<UPoly>;

fn trim_u(p: &mut UPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn trim_b(p: &mut BiPoly) {
    while p.last().is_some_and(|c| c.is_empty()) {
        p.pop();
    }
}

pub(crate) fn u_is_one(p: &UPoly) -> bool {
    p.len() == 1 && p[0].is_one()
}

fn u_sub(a: &UPoly, b: &UPoly) -> UPoly {
    let mut r = a.clone();
    if r.len() < b.len() {
        r.resize(b.len(), BigInt::zero());
    }
    for (i, c) in b.iter().enumerate() {
        r[i] -= c;
    }
    trim_u(&mut r);
    r
}

fn u_mul(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim_u(&mut r);
    r
}

fn u_scale(a: &UPoly, c: &BigInt) -> UPoly {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|x| x * c).collect()
}

fn u_shift(a: &UPoly, k: usize) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut r = vec![BigInt::zero(); k];
    r.extend(a.iter().cloned());
    r
}

fn u_content(a: &UPoly) -> BigInt {
    let mut g = BigInt::zero();
    for c in a {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn u_div_scalar(a: &UPoly, c: &BigInt) -> UPoly {
    a.iter().map(|x| x / c).collect()
}

/// Primitive part with positive leading coefficient.
fn u_pp(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut c = u_content(a);
    if a.last().unwrap().is_negative() {
        c = -c;
    }
    u_div_scalar(a, &c)
}

fn u_prem(a: &UPoly, b: &UPoly) -> UPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let mut next = u_scale(&r, lb);
        let sub = u_shift(&u_scale(b, &lr), dr - db);
        next = u_sub(&next, &sub);
        r = next;
    }
    r
}

/// Exact division over Z; `None` when `b` does not divide `a`.
pub(crate) fn u_div_exact(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let (c, rem) = r[dr].div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        let k = dr - db;
        for (i, y) in b.iter().enumerate() {
            r[i + k] -= &c * y;
        }
        quot[k] = c;
        trim_u(&mut r);
    }
    if r.is_empty() {
        trim_u(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// Greatest common divisor over Z[q], normalized to a positive leading
/// coefficient.
pub(crate) fn u_gcd(a: &UPoly, b: &UPoly) -> UPoly {
    if a.is_empty() {
        return u_pp_signed(b);
    }
    if b.is_empty() {
        return u_pp_signed(a);
    }
    let c = u_content(a).gcd(&u_content(b));
    let (mut x, mut y) = if a.len() >= b.len() {
        (u_pp(a), u_pp(b))
    } else {
        (u_pp(b), u_pp(a))
    };
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![c];
        }
        let r = u_prem(&x, &y);
        x = y;
        y = u_pp(&r);
    }
    u_scale(&x, &c)
}

fn u_pp_signed(a: &UPoly) -> UPoly {
    if a.is_empty() {
        return Vec::new();
    }
    if a.last().unwrap().is_negative() {
        a.iter().map(|x| -x).collect()
    } else {
        a.clone()
    }
}

fn b_content(a: &BiPoly) -> UPoly {
    let mut g: UPoly = Vec::new();
    for c in a {
        if c.is_empty() {
            continue;
        }
        g = u_gcd(&g, c);
        if u_is_one(&g) {
            break;
        }
    }
    g
}

fn b_div_u(a: &BiPoly, c: &UPoly) -> BiPoly {
    a.iter()
        .map(|x| u_div_exact(x, c).expect("content divides every coefficient"))
        .collect()
}

fn b_scale(a: &BiPoly, c: &UPoly) -> BiPoly {
    let mut r: BiPoly = a.iter().map(|x| u_mul(x, c)).collect();
    trim_b(&mut r);
    r
}

fn b_pp(a: &BiPoly) -> BiPoly {
    let c = b_content(a);
    if u_is_one(&c) {
        a.clone()
    } else {
        b_div_u(a, &c)
    }
}

fn b_prem(a: &BiPoly, b: &BiPoly) -> BiPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let mut next = b_scale(&r, lb);
        for (i, y) in b.iter().enumerate() {
            let sub = u_mul(y, &lr);
            next[i + dr - db] = u_sub(&next[i + dr - db], &sub);
        }
        trim_b(&mut next);
        r = next;
    }
    r
}

/// Exact division in Z[q][t]; `None` when `b` does not divide `a`.
pub(crate) fn b_div_exact(a: &BiPoly, b: &BiPoly) -> Option<BiPoly> {
    assert!(!b.is_empty(), "division by the zero polynomial");
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut quot: BiPoly = vec![Vec::new(); a.len() - db];
    while !r.is_empty() && r.len() > db {
        let dr = r.len() - 1;
        let c = u_div_exact(&r[dr], lb)?;
        let k = dr - db;
        for (i, y) in b.iter().enumerate() {
            r[i + k] = u_sub(&r[i + k], &u_mul(y, &c));
        }
        quot[k] = c;
        trim_b(&mut r);
    }
    if r.is_empty() {
        trim_b(&mut quot);
        Some(quot)
    } else {
        None
    }
}

/// Greatest common divisor in Z[q][t] by content / primitive-part recursion
/// over t with Z[q] coefficients. The sign is left unnormalized.
pub(crate) fn b_gcd(a: &BiPoly, b: &BiPoly) -> BiPoly {
    if a.is_empty() {
        return b.clone();
    }
    if b.is_empty() {
        return a.clone();
    }
    let ca = b_content(a);
    let cb = b_content(b);
    let c = u_gcd(&ca, &cb);
    if a.len() == 1 || b.len() == 1 {
        return vec![c];
    }
    let pa = if u_is_one(&ca) { a.clone() } else { b_div_u(a, &ca) };
    let pb = if u_is_one(&cb) { b.clone() } else { b_div_u(b, &cb) };
    let (mut x, mut y) = if pa.len() >= pb.len() { (pa, pb) } else { (pb, pa) };
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![c];
        }
        let r = b_prem(&x, &y);
        x = y;
        y = if r.is_empty() { r } else { b_pp(&r) };
    }
    b_scale(&x, &c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(v: &[i64]) -> UPoly {
        let mut p: UPoly = v.iter().map(|&x| BigInt::from(x)).collect();
        trim_u(&mut p);
        p
    }

    #[test]
    fn univariate_gcd_recovers_common_factor() {
        // (1 + q)(2 - q) and (1 + q)(3 + q^2)
        let a = u_mul(&u(&[1, 1]), &u(&[2, -1]));
        let b = u_mul(&u(&[1, 1]), &u(&[3, 0, 1]));
        assert_eq!(u_gcd(&a, &b), u(&[1, 1]));
        assert_eq!(u_gcd(&u(&[4, 6]), &u(&[2])), u(&[2]));
    }

    #[test]
    fn univariate_exact_division() {
        let a = u_mul(&u(&[1, -1]), &u(&[1, 1, 1]));
        assert_eq!(u_div_exact(&a, &u(&[1, -1])), Some(u(&[1, 1, 1])));
        assert_eq!(u_div_exact(&a, &u(&[1, 2])), None);
    }

    #[test]
    fn bivariate_gcd_and_division() {
        // a = (1 - q t)(1 + t), b = (1 - q t)(q - t)
        let f: BiPoly = vec![u(&[1]), u(&[0, -1])];
        let a = vec![u(&[1]), u(&[1, -1]), u(&[0, -1])];
        let g = b_gcd(&a, &vec![u(&[0, 1]), u(&[-1, 0, -1]), u(&[0, 1])]);
        let ratio = b_div_exact(&g, &f).unwrap();
        assert_eq!(ratio.len(), 1);
        assert_eq!(ratio[0].len(), 1);
        assert_eq!(b_div_exact(&a, &f), Some(vec![u(&[1]), u(&[1])]));
    }
}

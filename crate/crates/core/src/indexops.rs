//! Difference operators acting on integer indices `μ` (through
//! `x_i = q^{2μ̄_i}`), the Jackson-type lattice inner product, adaptedness and
//! summation by parts.

use std::fmt;
use std::sync::Arc;

use crate::combinat::subsets;
use crate::qfield::{qnum_laurent, CoeffRat, LaurentQT};
use crate::Error;

type EvalFn = dyn Fn(&[i64]) -> Result<CoeffRat, Error> + Send + Sync;

/// A closed-form function from `ℤ^arity` to `ℚ(q,t)`.
#[derive(Clone)]
pub struct IndexFn {
    arity: usize,
    eval: Arc<EvalFn>,
}

impl IndexFn {
    pub fn new<F>(arity: usize, f: F) -> Self
    where
        F: Fn(&[i64]) -> Result<CoeffRat, Error> + Send + Sync + 'static,
    {
        IndexFn { arity, eval: Arc::new(f) }
    }

    /// Wraps an infallible evaluator.
    pub fn total<F>(arity: usize, f: F) -> Self
    where
        F: Fn(&[i64]) -> CoeffRat + Send + Sync + 'static,
    {
        IndexFn::new(arity, move |mu| Ok(f(mu)))
    }

    pub fn constant(arity: usize, c: CoeffRat) -> Self {
        IndexFn::total(arity, move |_| c.clone())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn eval(&self, mu: &[i64]) -> Result<CoeffRat, Error> {
        if mu.len() != self.arity {
            return Err(Error::LengthMismatch { expected: self.arity, found: mu.len() });
        }
        (self.eval)(mu)
    }

    /// Pointwise product.
    pub fn times(&self, o: &IndexFn) -> IndexFn {
        let (a, b) = (self.clone(), o.clone());
        IndexFn::new(self.arity, move |mu| Ok(a.eval(mu)?.mul_ref(&b.eval(mu)?)))
    }

    /// Pointwise sum.
    pub fn plus(&self, o: &IndexFn) -> IndexFn {
        let (a, b) = (self.clone(), o.clone());
        IndexFn::new(self.arity, move |mu| Ok(a.eval(mu)?.add_ref(&b.eval(mu)?)))
    }
}

impl fmt::Debug for IndexFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IndexFn(arity = {})", self.arity)
    }
}

/// Summation limits `ζ⁻ ≤ μ ≤ ζ⁺`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Box {
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
}

impl Box {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Result<Self, Error> {
        if lower.len() != upper.len() {
            return Err(Error::LengthMismatch { expected: lower.len(), found: upper.len() });
        }
        if lower.iter().zip(&upper).any(|(a, b)| a > b) {
            return Err(Error::Domain("box with upper < lower".into()));
        }
        Ok(Box { lower, upper })
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    /// `(ζ⁻ - a·1, ζ⁺ + b·1)`.
    pub fn widened(&self, a: i64, b: i64) -> Box {
        Box {
            lower: self.lower.iter().map(|x| x - a).collect(),
            upper: self.upper.iter().map(|x| x + b).collect(),
        }
    }

    /// All lattice points, lexicographically.
    pub fn points(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for (lo, hi) in self.lower.iter().zip(&self.upper) {
            let mut next = Vec::new();
            for p in &out {
                for v in *lo..=*hi {
                    let mut p = p.clone();
                    p.push(v);
                    next.push(p);
                }
            }
            out = next;
        }
        out
    }

    pub fn contains(&self, mu: &[i64]) -> bool {
        mu.iter().zip(self.lower.iter().zip(&self.upper)).all(|(m, (lo, hi))| lo <= m && m <= hi)
    }
}

/// Which index-side operator to apply.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IndexVariant {
    /// `D^r_{n-1,q^{2μ̄}}(q^{2·step}, q^{2·tau_exp})`: coefficients
    /// `∏_{i∈I, j∉I} [d + tau_exp]/[d]`, shift `μ ↦ μ + step·1_I`.
    Plain { step: i64, tau_exp: i64 },
    /// The conjugated operator `D̃^r(q², q^{2k})`.
    Tilde,
    /// Its adjoint `D̃^{r†}`.
    Dagger,
}

/// Operator parameters; `k` fixes the shift `μ̄_i = μ_i - k(i-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct IndexOpParams {
    pub k: i64,
    pub variant: IndexVariant,
    pub r: usize,
}

/// Ratio of q-number products with equal arguments cancelled first, so that
/// removable `[0]/[0]` factors disappear. `None` means a genuine zero
/// denominator.
fn qnum_ratio(mut num: Vec<i64>, mut den: Vec<i64>) -> Option<CoeffRat> {
    num.sort_unstable();
    den.sort_unstable();
    let (mut i, mut j) = (0, 0);
    let (mut n2, mut d2) = (Vec::new(), Vec::new());
    while i < num.len() || j < den.len() {
        if j == den.len() || (i < num.len() && num[i] < den[j]) {
            n2.push(num[i]);
            i += 1;
        } else if i == num.len() || den[j] < num[i] {
            d2.push(den[j]);
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    if d2.contains(&0) {
        return None;
    }
    if n2.contains(&0) {
        return Some(CoeffRat::zero());
    }
    let n = n2.iter().fold(LaurentQT::one(), |acc, &a| acc.mul_ref(&qnum_laurent(a)));
    let d = d2.iter().fold(LaurentQT::one(), |acc, &a| acc.mul_ref(&qnum_laurent(a)));
    Some(CoeffRat::new(n, d).expect("nonzero q-number product"))
}

/// Coefficient and shift of the `I`-term at `μ`.
fn term(p: &IndexOpParams, mu: &[i64], idx: &[usize]) -> Result<(CoeffRat, Vec<i64>), Error> {
    let m = mu.len();
    let k = p.k;
    let inside: Vec<bool> = (0..m).map(|i| idx.contains(&i)).collect();
    let bar: Vec<i64> = mu.iter().enumerate().map(|(i, x)| x - k * i as i64).collect();
    let (mut num, mut den) = (Vec::new(), Vec::new());
    let step = match p.variant {
        IndexVariant::Plain { step, tau_exp } => {
            for &i in idx {
                for j in (0..m).filter(|&j| !inside[j]) {
                    let d = bar[i] - bar[j];
                    num.push(d + tau_exp);
                    den.push(d);
                }
            }
            step
        }
        IndexVariant::Tilde | IndexVariant::Dagger => {
            for &i in idx {
                for j in (0..i).filter(|&j| !inside[j]) {
                    let d = bar[i] - bar[j];
                    if p.variant == IndexVariant::Tilde {
                        num.extend([d + k, d - k + 1]);
                        den.extend([d, d + 1]);
                    } else {
                        num.extend([d + k - 1, d - k]);
                        den.extend([d - 1, d]);
                    }
                }
            }
            if p.variant == IndexVariant::Tilde {
                1
            } else {
                -1
            }
        }
    };
    let c = qnum_ratio(num, den)
        .ok_or_else(|| Error::Domain(format!("vanishing q-number denominator at {mu:?}, I = {idx:?}")))?;
    let target = mu.iter().enumerate().map(|(i, x)| if inside[i] { x + step } else { *x }).collect();
    Ok((c, target))
}

/// The value of the operator applied to `f` at the point `μ`.
pub fn index_apply(f: &IndexFn, p: &IndexOpParams, mu: &[i64]) -> Result<CoeffRat, Error> {
    if mu.len() != f.arity() {
        return Err(Error::LengthMismatch { expected: f.arity(), found: mu.len() });
    }
    if p.r > mu.len() {
        return Err(Error::Domain(format!("r = {} exceeds {}", p.r, mu.len())));
    }
    let mut acc = CoeffRat::zero();
    for idx in subsets(mu.len(), p.r) {
        let (c, target) = term(p, mu, &idx)?;
        if !c.is_zero() {
            acc = acc.add_ref(&c.mul_ref(&f.eval(&target)?));
        }
    }
    Ok(acc)
}

/// The operator applied to `f`, as a new (lazily evaluated) function.
pub fn index_op(f: &IndexFn, p: IndexOpParams) -> IndexFn {
    let f = f.clone();
    IndexFn::new(f.arity(), move |mu| index_apply(&f, &p, mu))
}

/// `D(u) = Σ_r (-1)^{m-r} u^{m-r} D^r` for an index-side variant.
pub fn index_generator(f: &IndexFn, u: &CoeffRat, k: i64, variant: IndexVariant) -> IndexFn {
    let f = f.clone();
    let u = u.clone();
    IndexFn::new(f.arity(), move |mu| {
        let m = mu.len();
        let mut acc = CoeffRat::zero();
        for r in 0..=m {
            let e = (m - r) as i64;
            let mut c = u.pow(e)?;
            if e % 2 == 1 {
                c = c.neg_ref();
            }
            if c.is_zero() {
                continue;
            }
            let v = index_apply(&f, &IndexOpParams { k, variant, r }, mu)?;
            acc = acc.add_ref(&c.mul_ref(&v));
        }
        Ok(acc)
    })
}

/// `⟨f, g⟩_ζ = Σ_{μ=ζ⁻}^{ζ⁺} f(μ) g(μ)`.
pub fn jackson_inner(f: &IndexFn, g: &IndexFn, b: &Box) -> Result<CoeffRat, Error> {
    if f.arity() != b.dim() || g.arity() != b.dim() {
        return Err(Error::LengthMismatch { expected: b.dim(), found: f.arity() });
    }
    let mut acc = CoeffRat::zero();
    for mu in b.points() {
        let x = f.eval(&mu)?;
        if !x.is_zero() {
            acc = acc.add_ref(&x.mul_ref(&g.eval(&mu)?));
        }
    }
    Ok(acc)
}

/// Whether `f` vanishes on the width-`l` border shell of the box.
///
/// The shell is the set of points of the enlarged box `(ζ⁻ - l, ζ⁺ + l)`
/// with at least one coordinate outside `[ζ⁻_i, ζ⁺_i]`; coordinates are not
/// examined beyond the enlarged box.
pub fn is_adapted(f: &IndexFn, b: &Box, l: i64) -> Result<bool, Error> {
    if l <= 0 {
        return Ok(true);
    }
    for mu in b.widened(l, l).points() {
        if !b.contains(&mu) && !f.eval(&mu)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Summation by parts:
/// `⟨D̃^{r_l†}⋯D̃^{r_1†} f, g⟩_{(ζ⁻, ζ⁺+l)} = ⟨f, D̃^{r_1}⋯D̃^{r_l} g⟩_ζ`
/// for `(ζ, l)`-adapted `f`, `l = rseq.len()`.
///
/// Returns `Err(Error::Precondition)` when `f` is not adapted and `Ok(false)`
/// when the identity fails.
pub fn verify_adjoint(f: &IndexFn, g: &IndexFn, b: &Box, rseq: &[usize], k: i64) -> Result<bool, Error> {
    let l = rseq.len() as i64;
    if !is_adapted(f, b, l)? {
        return Err(Error::Precondition(format!("function is not ({:?}, {:?}, {l})-adapted", b.lower, b.upper)));
    }
    let mut lhs_f = f.clone();
    for &r in rseq {
        lhs_f = index_op(&lhs_f, IndexOpParams { k, variant: IndexVariant::Dagger, r });
    }
    let mut rhs_g = g.clone();
    for &r in rseq.iter().rev() {
        rhs_g = index_op(&rhs_g, IndexOpParams { k, variant: IndexVariant::Tilde, r });
    }
    let lhs = jackson_inner(&lhs_f, g, &b.widened(0, l))?;
    let rhs = jackson_inner(f, &rhs_g, b)?;
    Ok(lhs == rhs)
}

/// The conjugator `∏_{i<j} [μ̄_i - μ̄_j + k - 1]_m`; `m = k` conjugates the
/// plain `(q², q^{2k})` operator into the tilde operator, `m = k - 1` the
/// plain `(q^{-2}, q^{2(k-1)})` operator into the dagger operator.
pub fn conjugator(arity: usize, k: i64, m: u32) -> IndexFn {
    IndexFn::total(arity, move |mu| {
        let bar: Vec<i64> = mu.iter().enumerate().map(|(i, x)| x - k * i as i64).collect();
        let mut acc = CoeffRat::one();
        for i in 0..bar.len() {
            for j in i + 1..bar.len() {
                acc = acc.mul_ref(&crate::qfield::qfall(bar[i] - bar[j] + k - 1, m));
            }
        }
        acc
    })
}

/// `(C ∘ D ∘ C^{-1}) f` at `μ` for the plain operator `D` described by
/// `inner` and the conjugator `C`; `inverse` swaps the roles of `C` and
/// `C^{-1}`.
pub fn conjugated_apply(
    f: &IndexFn,
    inner: &IndexOpParams,
    c: &IndexFn,
    inverse: bool,
    mu: &[i64],
) -> Result<CoeffRat, Error> {
    let (cf, cc) = (f.clone(), c.clone());
    let g = IndexFn::new(f.arity(), move |nu| {
        let v = cf.eval(nu)?;
        let w = cc.eval(nu)?;
        if inverse {
            Ok(v.mul_ref(&w))
        } else {
            v.checked_div(&w)
        }
    });
    let inner_v = index_apply(&g, inner, mu)?;
    let w = c.eval(mu)?;
    if inverse {
        inner_v.checked_div(&w)
    } else {
        Ok(inner_v.mul_ref(&w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64) -> CoeffRat {
        CoeffRat::q_pow(a)
    }

    #[test]
    fn inner_product_examples() {
        let one = IndexFn::constant(1, CoeffRat::one());
        let b = Box::new(vec![0], vec![2]).unwrap();
        assert_eq!(jackson_inner(&one, &one, &b).unwrap(), CoeffRat::from_int(3));
        let f = IndexFn::total(1, |mu| q(mu[0]));
        let b = Box::new(vec![0], vec![1]).unwrap();
        assert_eq!(jackson_inner(&f, &one, &b).unwrap(), CoeffRat::one() + q(1));
    }

    #[test]
    fn adaptedness_examples() {
        let b = Box::new(vec![0, 0], vec![1, 2]).unwrap();
        let one = IndexFn::constant(2, CoeffRat::one());
        assert!(is_adapted(&one, &b, 0).unwrap());
        assert!(!is_adapted(&one, &b, 1).unwrap());
        let inside = IndexFn::total(2, |mu| CoeffRat::from_int(i64::from((0..=1).contains(&mu[0]) && (0..=2).contains(&mu[1]))));
        assert!(is_adapted(&inside, &b, 2).unwrap());
    }

    #[test]
    fn one_dimensional_operators_are_shifts() {
        let f = IndexFn::total(1, |mu| q(mu[0] * mu[0]));
        for variant in [IndexVariant::Tilde, IndexVariant::Dagger] {
            let step = if variant == IndexVariant::Tilde { 1 } else { -1 };
            let p = IndexOpParams { k: 2, variant, r: 1 };
            assert_eq!(index_apply(&f, &p, &[3]).unwrap(), q((3 + step) * (3 + step)));
            let p0 = IndexOpParams { k: 2, variant, r: 0 };
            assert_eq!(index_apply(&f, &p0, &[3]).unwrap(), q(9));
        }
    }

    #[test]
    fn k_one_tilde_coefficients_are_trivial() {
        let f = IndexFn::total(2, |mu| q(mu[0] + 3 * mu[1]));
        let p = IndexOpParams { k: 1, variant: IndexVariant::Tilde, r: 1 };
        let expect = q(1) + q(3);
        assert_eq!(index_apply(&f, &p, &[0, 0]).unwrap(), expect);
    }

    #[test]
    fn vanishing_denominator_is_reported() {
        let f = IndexFn::constant(2, CoeffRat::one());
        let p = IndexOpParams { k: 1, variant: IndexVariant::Plain { step: 1, tau_exp: 1 }, r: 1 };
        assert!(matches!(index_apply(&f, &p, &[2, 3]), Err(Error::Domain(_))));
    }

    #[test]
    fn conjugation_consistency() {
        let f = IndexFn::total(2, |mu| q(mu[0] * mu[0] - 2 * mu[1]) + CoeffRat::from_int(mu[1]));
        for k in 1..=3 {
            let tilde_c = conjugator(2, k, k as u32);
            let dagger_c = conjugator(2, k, (k - 1) as u32);
            for mu in [[3, -2], [5, 0], [1, -4]] {
                for r in 0..=2 {
                    let t = IndexOpParams { k, variant: IndexVariant::Tilde, r };
                    let plain = IndexOpParams { k, variant: IndexVariant::Plain { step: 1, tau_exp: k }, r };
                    assert_eq!(index_apply(&f, &t, &mu).unwrap(), conjugated_apply(&f, &plain, &tilde_c, false, &mu).unwrap());
                    let d = IndexOpParams { k, variant: IndexVariant::Dagger, r };
                    let plain = IndexOpParams { k, variant: IndexVariant::Plain { step: -1, tau_exp: k - 1 }, r };
                    assert_eq!(index_apply(&f, &d, &mu).unwrap(), conjugated_apply(&f, &plain, &dagger_c, true, &mu).unwrap());
                }
            }
        }
    }

    #[test]
    fn adjoint_one_dimensional() {
        let b = Box::new(vec![0], vec![3]).unwrap();
        let f = IndexFn::total(1, |mu| if (0..=3).contains(&mu[0]) { q(mu[0]) } else { CoeffRat::zero() });
        let g = IndexFn::total(1, |mu| q(5 * mu[0]) + CoeffRat::one());
        assert!(verify_adjoint(&f, &g, &b, &[1], 2).unwrap());
        assert!(verify_adjoint(&f, &g, &b, &[], 2).unwrap());
        let one = IndexFn::constant(1, CoeffRat::one());
        assert!(matches!(verify_adjoint(&one, &g, &b, &[1], 2), Err(Error::Precondition(_))));
    }
}

//! Macdonald difference operators, the generating operator `D(u)`, three
//! constructions of Macdonald polynomials, branching coefficients and the
//! evaluation symmetry.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use crate::combinat::{gt_enumerate, interlacing, partitions, require_interlacing, rho_doubled, subsets, Signature};
use crate::qfield::{poch_ratio, qfall, CoeffRat, LaurentQT, UnitMono};
use crate::sympoly::{elementary, EvalPoint, MPoly, NPoly, SymLaurent};
use crate::Error;

/// Parameters of `D^r`: the shift multiplier and `τ` with `T = τ²`.
///
/// The operators `D^r(q², t²)` correspond to `shift = q²`, `thalf = t`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MacParams {
    pub shift: UnitMono,
    pub thalf: UnitMono,
}

impl MacParams {
    pub fn new(shift: UnitMono, thalf: UnitMono) -> Self {
        MacParams { shift, thalf }
    }

    /// `shift = q²`, `τ = t`.
    pub fn generic() -> Self {
        MacParams { shift: UnitMono::q(2), thalf: UnitMono::t(1) }
    }

    /// `shift = q²`, `τ = q^k`, i.e. `D^r(q², q^{2k})`.
    pub fn at_k(k: i64) -> Self {
        MacParams { shift: UnitMono::q(2), thalf: UnitMono::q(k) }
    }
}

/// `∏_{i<j, not separated by I} (x_i - x_j) · ∏_{i∈I, j∉I} (τ²x_i - x_j)`
/// with the sign that turns the separated pairs into `x_i - x_j` for `i ∈ I`.
fn subset_factor(n: usize, idx: &[usize], tau2: &UnitMono) -> MPoly<LaurentQT> {
    let inside: Vec<bool> = (0..n).map(|i| idx.contains(&i)).collect();
    let var = |i: usize| MPoly::<LaurentQT>::var(n, i);
    let mut f = MPoly::<LaurentQT>::one(n);
    let mut flips = 0;
    for i in 0..n {
        for j in i + 1..n {
            if inside[i] == inside[j] {
                f = f.mul(&var(i).sub(&var(j)));
            }
        }
    }
    for &i in idx {
        for j in (0..n).filter(|&j| !inside[j]) {
            f = f.mul(&var(i).scale_unit(tau2).sub(&var(j)));
            if i > j {
                flips += 1;
            }
        }
    }
    if flips % 2 == 1 {
        f.neg()
    } else {
        f
    }
}

/// `D^r` on a polynomial with Laurent coefficients.
pub fn mac_apply_laurent(f: &MPoly<LaurentQT>, r: usize, p: &MacParams) -> Result<MPoly<LaurentQT>, Error> {
    let n = f.nvars();
    if r > n {
        return Err(Error::Domain(format!("D^{r} in {n} variables")));
    }
    let tau2 = p.thalf.pow(2);
    let mut acc = MPoly::<LaurentQT>::zero(n);
    for idx in subsets(n, r) {
        let g = f.scale_some_vars(&idx, &p.shift);
        acc.add_assign_ref(&g.mul(&subset_factor(n, &idx, &tau2)));
    }
    let q = acc.div_vandermonde().map_err(|e| Error::Domain(format!("Vandermonde division failed: {e}")))?;
    let rr = r as i64;
    Ok(q.scale_unit(&p.thalf.pow(rr * (rr - n as i64))))
}

/// `D^r` on a (not necessarily symmetric) polynomial.
pub fn mac_apply_npoly(f: &NPoly, r: usize, p: &MacParams) -> Result<NPoly, Error> {
    let (g, d) = f.clear_denominators();
    NPoly::from_cleared(&mac_apply_laurent(&g, r, p)?, &d)
}

/// `D^r f = τ^{r(r-n)} Σ_{|I|=r} ∏_{i∈I, j∉I} (τ²x_i - x_j)/(x_i - x_j) · T_{shift,I} f`.
pub fn mac_apply(f: &SymLaurent, r: usize, p: &MacParams) -> Result<SymLaurent, Error> {
    SymLaurent::from_npoly(&mac_apply_npoly(&f.to_npoly(), r, p)?)
}

/// `D(u) = Σ_r (-1)^{n-r} u^{n-r} D^r` on a polynomial.
pub fn mac_generator_npoly(f: &NPoly, u: &CoeffRat, p: &MacParams) -> Result<NPoly, Error> {
    let n = f.nvars();
    let (g, d) = f.clear_denominators();
    let mut acc = NPoly::zero(n);
    for r in 0..=n {
        let k = (n - r) as i64;
        let mut c = u.pow(k)?;
        if k % 2 == 1 {
            c = -c;
        }
        if c.is_zero() {
            continue;
        }
        let term = NPoly::from_laurent_poly(&mac_apply_laurent(&g, r, p)?);
        acc.add_assign_ref(&term.scale(&c));
    }
    let dinv = CoeffRat::new(LaurentQT::one(), d)?;
    Ok(acc.scale(&dinv))
}

/// `D(u) f` for symmetric `f`.
pub fn mac_generator_apply(f: &SymLaurent, u: &CoeffRat, p: &MacParams) -> Result<SymLaurent, Error> {
    SymLaurent::from_npoly(&mac_generator_npoly(&f.to_npoly(), u, p)?)
}

/// `e_r(shift^{λ_i} τ^{n+1-2i})`, the eigenvalue of `D^r` on `P_λ`.
pub fn eigenvalue(lam: &Signature, r: usize, p: &MacParams) -> CoeffRat {
    let n = lam.len();
    let pts: Vec<CoeffRat> = lam
        .0
        .iter()
        .zip(rho_doubled(n))
        .map(|(&l, d)| CoeffRat::from_unit(&p.shift.pow(l).mul(&p.thalf.pow(d))))
        .collect();
    elementary(r, &pts)
}

fn require_dominant(lam: &Signature) -> Result<(), Error> {
    if lam.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(lam.to_string()))
    }
}

fn eigen_cache() -> &'static Mutex<HashMap<Signature, SymLaurent>> {
    static CACHE: OnceLock<Mutex<HashMap<Signature, SymLaurent>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `P_λ(x; q², t²)` as the eigenfunction of `D^1` with leading term `m_λ`,
/// solved by back-substitution over the dominance order.
pub fn macdonald_eigen(lam: &Signature, n: usize) -> Result<SymLaurent, Error> {
    if lam.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: lam.len() });
    }
    require_dominant(lam)?;
    if n == 0 {
        return Ok(SymLaurent::one(0));
    }
    let c = lam.0[n - 1];
    let base = lam.shifted_by(-c);
    if let Some(p) = eigen_cache().lock().unwrap().get(&base) {
        return Ok(p.mono_shift(c));
    }
    let p = eigen_solve(&base)?;
    eigen_cache().lock().unwrap().insert(base, p.clone());
    Ok(p.mono_shift(c))
}

fn eigen_solve(lam: &Signature) -> Result<SymLaurent, Error> {
    let n = lam.len();
    let params = MacParams::generic();
    // Decreasing lexicographic order refines the dominance order.
    let mut basis: Vec<Signature> = partitions(lam.size(), n).into_iter().filter(|m| m.dominated_by(lam)).collect();
    basis.sort_by(|a, b| b.cmp(a));
    let images: Vec<SymLaurent> = basis
        .iter()
        .map(|mu| mac_apply(&crate::sympoly::m_sym(mu, n)?, 1, &params))
        .collect::<Result<_, _>>()?;
    let e_lam = eigenvalue(lam, 1, &params);
    let mut coeffs: Vec<CoeffRat> = vec![CoeffRat::zero(); basis.len()];
    coeffs[0] = CoeffRat::one();
    for v in 1..basis.len() {
        let mut rhs = CoeffRat::zero();
        for u in 0..v {
            if !coeffs[u].is_zero() {
                rhs = rhs.add_ref(&coeffs[u].mul_ref(&images[u].coeff(&basis[v])));
            }
        }
        let diag = images[v].coeff(&basis[v]).sub_ref(&e_lam);
        if diag.is_zero() {
            return Err(Error::Domain(format!("eigenvalue collision at {}", basis[v])));
        }
        coeffs[v] = rhs.neg_ref().checked_div(&diag)?;
    }
    let mut p = SymLaurent::zero(n);
    for (mu, c) in basis.into_iter().zip(coeffs) {
        p.add_term(mu, &c);
    }
    Ok(p)
}

/// The branching coefficient `ψ_{λ/μ}(q, t)` as a finite product of
/// Pochhammer ratios.
pub fn psi_branch(lam: &Signature, mu: &Signature) -> Result<CoeffRat, Error> {
    require_interlacing(mu, lam)?;
    let n = lam.len();
    let (l, m) = (&lam.0, &mu.0);
    let mut num = CoeffRat::one();
    let mut den = CoeffRat::one();
    for i in 0..n - 1 {
        let g = (l[i] - m[i]) as u32;
        if g == 0 {
            continue;
        }
        for j in i..n - 1 {
            let t = (j - i) as u32;
            num = num * poch_ratio(m[i] - m[j], g, t + 1) * poch_ratio(m[i] - l[j + 1] + 1, g, t);
            den = den * poch_ratio(m[i] - l[j + 1], g, t + 1) * poch_ratio(m[i] - m[j] + 1, g, t);
        }
    }
    num.checked_div(&den)
}

/// `ψ_{λ/μ}(q², t²)`, the coefficient for `P(x; q², t²)`.
fn psi_squared(lam: &Signature, mu: &Signature) -> Result<CoeffRat, Error> {
    psi_branch(lam, mu)?.subst(&UnitMono::q(2), &UnitMono::t(2))
}

/// `P_λ(x; q², t²)` by the branching recursion
/// `P_λ = Σ_{μ≺λ} ψ_{λ/μ} P_μ(x_1…x_{n-1}) x_n^{|λ|-|μ|}`.
pub fn macdonald_branch(lam: &Signature, n: usize) -> Result<SymLaurent, Error> {
    if lam.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: lam.len() });
    }
    require_dominant(lam)?;
    let mut memo = HashMap::new();
    SymLaurent::from_npoly(&branch_rec(lam, &mut memo)?)
}

fn branch_rec(lam: &Signature, memo: &mut HashMap<Signature, NPoly>) -> Result<NPoly, Error> {
    if let Some(p) = memo.get(lam) {
        return Ok(p.clone());
    }
    let n = lam.len();
    let p = if n <= 1 {
        NPoly::monomial(lam.0.clone(), CoeffRat::one())
    } else {
        let mut acc = NPoly::zero(n);
        for mu in interlacing(lam) {
            let psi = psi_squared(lam, &mu)?;
            let sub = branch_rec(&mu, memo)?;
            acc.add_assign_ref(&sub.extend_var(lam.size() - mu.size()).scale(&psi));
        }
        acc
    };
    memo.insert(lam.clone(), p.clone());
    Ok(p)
}

/// `P_λ(x; q², t²)` by the Gelfand-Tsetlin summation
/// `Σ_patterns ∏_i ψ_{μ^i/μ^{i-1}} x_i^{|μ^i|-|μ^{i-1}|}`.
pub fn macdonald_gt(lam: &Signature, n: usize) -> Result<SymLaurent, Error> {
    if lam.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: lam.len() });
    }
    require_dominant(lam)?;
    let mut psi: HashMap<(Signature, Signature), CoeffRat> = HashMap::new();
    let mut acc = NPoly::zero(n);
    for pat in gt_enumerate(lam)? {
        let mut w = CoeffRat::one();
        for pair in pat.rows.windows(2) {
            let key = (pair[1].clone(), pair[0].clone());
            if !psi.contains_key(&key) {
                psi.insert(key.clone(), psi_squared(&pair[1], &pair[0])?);
            }
            w = w.mul_ref(&psi[&key]);
        }
        let mut prev = 0;
        let exp: Vec<i64> = pat
            .rows
            .iter()
            .map(|r| {
                let s = r.size();
                let d = s - prev;
                prev = s;
                d
            })
            .collect();
        acc.add_term(exp, &w);
    }
    SymLaurent::from_npoly(&acc)
}

/// `P_λ(x; q², q^{2k})`, i.e. [`macdonald_eigen`] at `t = q^k`.
pub fn macdonald_at_k(lam: &Signature, k: i64) -> Result<SymLaurent, Error> {
    macdonald_eigen(lam, lam.len())?.subst(&UnitMono::q(1), &UnitMono::q(k))
}

/// Both sides of the evaluation symmetry
/// `P_λ(q^{2μ+2kρ}) = ∏_{i<j} [λ_i-λ_j+k(j-i)+k-1]_k / [μ_i-μ_j+k(j-i)+k-1]_k · P_μ(q^{2λ+2kρ})`
/// for `P = P(x; q², q^{2k})`.
pub fn symmetry_check(lam: &Signature, mu: &Signature, k: i64) -> Result<(CoeffRat, CoeffRat), Error> {
    require_dominant(lam)?;
    require_dominant(mu)?;
    if lam.len() != mu.len() {
        return Err(Error::LengthMismatch { expected: lam.len(), found: mu.len() });
    }
    if k < 1 {
        return Err(Error::Domain(format!("k must be positive, got {k}")));
    }
    let n = lam.len();
    let r2 = rho_doubled(n);
    let point = |s: &Signature| EvalPoint::q_powers(&s.0.iter().zip(&r2).map(|(x, r)| 2 * x + k * r).collect::<Vec<_>>());
    let lhs = macdonald_at_k(lam, k)?.eval(&point(mu))?;
    let mut ratio = CoeffRat::one();
    let ku = k as u32;
    for i in 0..n {
        for j in i + 1..n {
            let d = k * (j - i) as i64 + k - 1;
            ratio = ratio * qfall(lam.0[i] - lam.0[j] + d, ku);
            ratio = ratio.checked_div(&qfall(mu.0[i] - mu.0[j] + d, ku))?;
        }
    }
    let rhs = ratio * macdonald_at_k(mu, k)?.eval(&point(lam))?;
    Ok((lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sympoly::{e_sym, m_sym};

    fn sig(v: &[i64]) -> Signature {
        Signature(v.to_vec())
    }

    fn q(a: i64) -> CoeffRat {
        CoeffRat::q_pow(a)
    }

    fn t(b: i64) -> CoeffRat {
        CoeffRat::t_pow(b)
    }

    #[test]
    fn single_variable_shift() {
        let f = m_sym(&sig(&[2]), 1).unwrap();
        let g = mac_apply(&f, 1, &MacParams::generic()).unwrap();
        assert_eq!(g, f.scalar_mul(&q(4)));
    }

    #[test]
    fn constant_eigenfunction() {
        let one = SymLaurent::one(2);
        let g = mac_apply(&one, 1, &MacParams::generic()).unwrap();
        assert_eq!(g, one.scalar_mul(&(t(1) + t(-1))));
        let g = mac_apply(&m_sym(&sig(&[1, 1]), 2).unwrap(), 2, &MacParams::generic()).unwrap();
        assert_eq!(g, m_sym(&sig(&[1, 1]), 2).unwrap().scalar_mul(&q(4)));
    }

    #[test]
    fn generator_single_variable() {
        let f = m_sym(&sig(&[3]), 1).unwrap();
        let u = q(5);
        let g = mac_generator_apply(&f, &u, &MacParams::generic()).unwrap();
        assert_eq!(g, f.scalar_mul(&(q(6) - u)));
        let g0 = mac_generator_apply(&f, &CoeffRat::zero(), &MacParams::generic()).unwrap();
        assert_eq!(g0, mac_apply(&f, 1, &MacParams::generic()).unwrap());
    }

    #[test]
    fn eigen_two_zero() {
        let p = macdonald_eigen(&sig(&[2, 0]), 2).unwrap();
        let one = CoeffRat::one();
        let c = (&one + &q(2)) * (&one - &t(2)) / (&one - &(q(2) * t(2)));
        assert_eq!(p.coeff(&sig(&[2, 0])), one);
        assert_eq!(p.coeff(&sig(&[1, 1])), c);
        assert_eq!(macdonald_eigen(&sig(&[1, 0, 0]), 3).unwrap(), e_sym(1, 3).unwrap());
        assert_eq!(macdonald_eigen(&sig(&[4]), 1).unwrap(), m_sym(&sig(&[4]), 1).unwrap());
    }

    #[test]
    fn psi_examples() {
        assert!(psi_branch(&sig(&[1, 0]), &sig(&[1])).unwrap().is_one());
        let one = CoeffRat::one();
        let expect = (&one + &q(1)) * (&one - &t(1)) / (&one - &(q(1) * t(1)));
        assert_eq!(psi_branch(&sig(&[2, 0]), &sig(&[1])).unwrap(), expect);
        assert!(psi_branch(&sig(&[2, 0]), &sig(&[3])).is_err());
    }

    #[test]
    fn constructors_agree_small() {
        for lam in [sig(&[2, 1, 0]), sig(&[1, -1]), sig(&[3, 1])] {
            let n = lam.len();
            let e = macdonald_eigen(&lam, n).unwrap();
            assert_eq!(macdonald_branch(&lam, n).unwrap(), e);
            assert_eq!(macdonald_gt(&lam, n).unwrap(), e);
        }
    }

    #[test]
    fn symmetry_examples() {
        let (l, r) = symmetry_check(&sig(&[1, 0]), &sig(&[0, 0]), 1).unwrap();
        assert_eq!(l, q(1) + q(-1));
        assert_eq!(r, l);
        let (l, r) = symmetry_check(&sig(&[2, 0]), &sig(&[1, 0]), 2).unwrap();
        assert_eq!(l, r);
    }
}

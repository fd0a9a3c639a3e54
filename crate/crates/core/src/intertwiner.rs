//! Diagonal matrix elements `c(μ, λ)` of intertwiners at `t = q^k`, by three
//! routes (difference operators on a kernel, an explicit finite sum, and a
//! chain of reduced Clebsch-Gordan squares), the branching coefficients at
//! `t = q^k`, the Etingof-Kirillov denominator and the trace reconstruction.
//!
//! Shifted signatures: `μ̄_i = μ_i - k(i-1)` and `μ̃_i = μ_i - (k-1)(i-1)`.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use crate::combinat::{bar, dominant_shifted_chains, interlacing, require_interlacing, tilde, Signature};
use crate::indexops::{index_generator, IndexFn, IndexVariant};
use crate::macops::macdonald_at_k;
use crate::qfield::{qfact, qfall, qnum, CoeffRat, UnitMono};
use crate::sympoly::{NPoly, SymLaurent};
use crate::Error;

fn require_k(k: i64) -> Result<u32, Error> {
    if k < 1 {
        return Err(Error::Domain(format!("k must be positive, got {k}")));
    }
    Ok((k - 1) as u32)
}

fn require_dominant(lam: &Signature) -> Result<(), Error> {
    if lam.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(lam.to_string()))
    }
}

fn require_lengths(mu: &Signature, lam: &Signature) -> Result<(), Error> {
    if lam.is_empty() || mu.len() + 1 != lam.len() {
        return Err(Error::LengthMismatch { expected: lam.len().saturating_sub(1), found: mu.len() });
    }
    Ok(())
}

/// The products `Δ₁^{k-1}`, `Δ₂^{k-1}` and `Δ^{k-1}` of falling q-factorials.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DeltaFactors {
    pub k: i64,
}

impl DeltaFactors {
    pub fn new(k: i64) -> Result<Self, Error> {
        require_k(k)?;
        Ok(DeltaFactors { k })
    }

    fn km1(&self) -> u32 {
        (self.k - 1) as u32
    }

    /// `Δ₁^{k-1}(μ) = ∏_{i<j} [μ̄_i - μ̄_j + k - 1]_{k-1}`.
    pub fn delta1(&self, mu: &[i64]) -> CoeffRat {
        let b = bar(&Signature(mu.to_vec()), self.k);
        pairs_lt(b.len(), b.len()).map(|(i, j)| qfall(b[i] - b[j] + self.k - 1, self.km1())).product()
    }

    /// `∏_{i≤j} [μ̄_i - μ̄_j + k - 1]_{k-1} = [k-1]!^{len(μ)} Δ₁^{k-1}(μ)`.
    pub fn delta1_diag(&self, mu: &[i64]) -> CoeffRat {
        let b = bar(&Signature(mu.to_vec()), self.k);
        pairs_le(b.len(), b.len()).map(|(i, j)| qfall(b[i] - b[j] + self.k - 1, self.km1())).product()
    }

    /// `Δ₂^{k-1}(λ) = ∏_{i<j} [λ̄_i - λ̄_j - 1]_{k-1}`.
    pub fn delta2(&self, lam: &[i64]) -> CoeffRat {
        let b = bar(&Signature(lam.to_vec()), self.k);
        pairs_lt(b.len(), b.len()).map(|(i, j)| qfall(b[i] - b[j] - 1, self.km1())).product()
    }

    /// `Δ^{k-1}(μ, λ) = ∏_{i≤j} [λ_i - μ_j + k(j-i) + k-1]_{k-1} ·
    /// ∏_{i<j} [μ_i - λ_j + k(j-i) - 1]_{k-1}`.
    pub fn delta_cross(&self, mu: &[i64], lam: &[i64]) -> CoeffRat {
        let k = self.k;
        let a: CoeffRat = pairs_le(lam.len(), mu.len())
            .map(|(i, j)| qfall(lam[i] - mu[j] + k * (j as i64 - i as i64) + k - 1, self.km1()))
            .product();
        let b: CoeffRat = pairs_lt(mu.len(), lam.len())
            .map(|(i, j)| qfall(mu[i] - lam[j] + k * (j as i64 - i as i64) - 1, self.km1()))
            .product();
        a * b
    }
}

/// Index pairs `i < j` with `i < a`, `j < b`.
fn pairs_lt(a: usize, b: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..a).flat_map(move |i| (i + 1..b).map(move |j| (i, j)))
}

/// Index pairs `i ≤ j` with `i < a`, `j < b`.
fn pairs_le(a: usize, b: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..a).flat_map(move |i| (i..b).map(move |j| (i, j)))
}

/// `ψ_{λ/μ}(q², q^{2k}) = Δ^{k-1}(μ, λ) / (∏_{i≤j} [μ̄_i - μ̄_j + k-1]_{k-1} ·
/// Δ₂^{k-1}(λ))`.
pub fn psi_qnum(lam: &Signature, mu: &Signature, k: i64) -> Result<CoeffRat, Error> {
    require_interlacing(mu, lam)?;
    let d = DeltaFactors::new(k)?;
    d.delta_cross(&mu.0, &lam.0).checked_div(&d.delta1_diag(&mu.0).mul_ref(&d.delta2(&lam.0)))
}

/// Whether `λ_i ≥ μ_i ≥ λ_{i+1} - (k-1)` and `μ` is dominant, i.e. whether
/// the Gelfand-Tsetlin vector indexed by `μ` is present.
pub fn in_window(mu: &Signature, lam: &Signature, k: i64) -> bool {
    mu.len() + 1 == lam.len()
        && mu.is_dominant()
        && (0..mu.len()).all(|i| lam.0[i] >= mu.0[i] && mu.0[i] >= lam.0[i + 1] - (k - 1))
}

/// `K_λ(ν) = ∏_{i≤j} [λ̄_i - ν̄'_j + k-1]_{k-1} ∏_{i<j} [ν̄'_i - λ̄_j - 1]_{k-1}`
/// with `ν' = ν + (k-1)·1`.
pub fn mat_elt_kernel(lam: &Signature, k: i64) -> Result<IndexFn, Error> {
    let km1 = require_k(k)?;
    let n = lam.len();
    let lb = bar(lam, k);
    Ok(IndexFn::total(n.saturating_sub(1), move |nu| {
        let nb = bar(&Signature(nu.to_vec()).shifted_by(k - 1), k);
        let a: CoeffRat = pairs_le(n, nb.len()).map(|(i, j)| qfall(lb[i] - nb[j] + k - 1, km1)).product();
        let b: CoeffRat = pairs_lt(nb.len(), n).map(|(i, j)| qfall(nb[i] - lb[j] - 1, km1)).product();
        a * b
    }))
}

/// The operator formula for `c(μ, λ)`: `∏_{a=1}^{k-1} D_{n-1}(q^{2a}; q^{-2},
/// q^{2(k-1)})` applied to the kernel, evaluated at `μ` and divided by
/// `∏_{i≤j} [μ̄'_i - μ̄'_j + k-1]_{k-1} ∏_{i<j} [λ̄_i - λ̄_j - 1]_{k-1}`.
///
/// Defined for any `μ` at which no operator coefficient is singular.
pub fn mat_elt_formula(mu: &Signature, lam: &Signature, k: i64) -> Result<CoeffRat, Error> {
    require_lengths(mu, lam)?;
    let km1 = require_k(k)?;
    let mut f = mat_elt_kernel(lam, k)?;
    let variant = IndexVariant::Plain { step: -1, tau_exp: k - 1 };
    for a in 1..k {
        f = index_generator(&f, &CoeffRat::q_pow(2 * a), k, variant);
    }
    let mb = bar(&mu.shifted_by(k - 1), k);
    let lb = bar(lam, k);
    let den: CoeffRat = pairs_le(mb.len(), mb.len())
        .map(|(i, j)| qfall(mb[i] - mb[j] + k - 1, km1))
        .chain(pairs_lt(lb.len(), lb.len()).map(|(i, j)| qfall(lb[i] - lb[j] - 1, km1)))
        .product();
    f.eval(&mu.0)?.checked_div(&den)
}

/// The matrix element `c(μ, λ)` by the operator formula; zero when `μ` is
/// outside the window or not dominant.
pub fn mat_elt(mu: &Signature, lam: &Signature, k: i64) -> Result<CoeffRat, Error> {
    require_lengths(mu, lam)?;
    require_dominant(lam)?;
    require_k(k)?;
    if !in_window(mu, lam, k) {
        return Ok(CoeffRat::zero());
    }
    mat_elt_formula(mu, lam, k)
}

/// The explicit finite sum for `c(μ, λ)` over `ν' ∈ [μ' - (k-1)·1, μ']`.
pub fn diag_coeff_formula(mu: &Signature, lam: &Signature, k: i64) -> Result<CoeffRat, Error> {
    require_lengths(mu, lam)?;
    let km1 = require_k(k)?;
    let n = lam.len();
    let m = n - 1;
    let d = DeltaFactors::new(k)?;
    let mup = mu.shifted_by(k - 1);
    let mb = bar(&mup, k);
    let lb = bar(lam, k);
    let mut pref = CoeffRat::q_pow((m as i64) * k * (k - 1))
        .checked_div(&d.delta2(&lam.0).mul_ref(&d.delta1(&mup.0)))?;
    if (m as i64 * (k - 1)) % 2 == 1 {
        pref = -pref;
    }
    let mut total = CoeffRat::zero();
    let mut off = vec![0i64; m];
    loop {
        let nb: Vec<i64> = (0..m).map(|i| mb[i] - off[i]).collect();
        let s: i64 = -off.iter().sum::<i64>();
        let mut num = CoeffRat::q_pow(k * s);
        if s % 2 != 0 {
            num = -num;
        }
        let mut den = CoeffRat::one();
        for i in 0..m {
            den = den * qfact(nb[i] - mb[i] + k - 1)? * qfact(mb[i] - nb[i])?;
        }
        for (i, j) in pairs_lt(m, m) {
            num = num * qfall(mb[i] - mb[j] + k - 1, 2 * km1 + 1) * qnum(nb[i] - nb[j]);
            den = den * qfall(nb[i] - mb[j] + k - 1, km1 + 1) * qfall(mb[i] - nb[j], km1 + 1);
        }
        for (i, j) in pairs_le(n, m) {
            num = num * qfall(lb[i] - nb[j] + k - 1, km1);
        }
        for (i, j) in pairs_lt(m, n) {
            num = num * qfall(nb[i] - lb[j] - 1, km1);
        }
        if !num.is_zero() {
            total = total + num.checked_div(&den)?;
        }
        // Next offset in [0, k-1]^m.
        let mut pos = 0;
        while pos < m && off[pos] == k - 1 {
            off[pos] = 0;
            pos += 1;
        }
        if pos == m {
            break;
        }
        off[pos] += 1;
    }
    Ok(pref * total)
}

/// `c(μ, λ)` by the explicit sum; zero when `μ` is outside the window or not
/// dominant.
pub fn diag_coeff_sum(mu: &Signature, lam: &Signature, k: i64) -> Result<CoeffRat, Error> {
    require_lengths(mu, lam)?;
    require_dominant(lam)?;
    require_k(k)?;
    if !in_window(mu, lam, k) {
        return Ok(CoeffRat::zero());
    }
    diag_coeff_formula(mu, lam, k)
}

/// `S(a, b)² = ∏_{i≤j} [a_i - b_j + j - i]! / ∏_{i<j} [b_i - a_j + j - i - 1]!`.
pub fn s_factor_sq(a: &[i64], b: &[i64]) -> Result<CoeffRat, Error> {
    let fact = |x: i64| qfact(x).map_err(|_| Error::Domain(format!("inadmissible pattern: S({a:?}, {b:?})")));
    let mut num = CoeffRat::one();
    for (i, j) in pairs_le(a.len(), b.len()) {
        num = num * fact(a[i] - b[j] + j as i64 - i as i64)?;
    }
    let mut den = CoeffRat::one();
    for (i, j) in pairs_lt(b.len(), a.len()) {
        den = den * fact(b[i] - a[j] + j as i64 - i as i64 - 1)?;
    }
    num.checked_div(&den)
}

/// The square of the reduced Clebsch-Gordan coefficient
/// `C[τ, p; τ', η, r; η']²` for `τ, τ'` of length `n` and `η, η'` of length
/// `n-1`.
pub fn cg_reduced_squared(
    tau: &[i64],
    p: i64,
    taup: &[i64],
    eta: &[i64],
    r: i64,
    etap: &[i64],
) -> Result<CoeffRat, Error> {
    let n = tau.len();
    if taup.len() != n || eta.len() + 1 != n || etap.len() != eta.len() {
        return Err(Error::LengthMismatch { expected: n, found: taup.len() });
    }
    let m = n - 1;
    let ix = |i: usize| i as i64;
    let dt: Vec<i64> = (0..n).map(|i| taup[i] - tau[i]).collect();
    let de: Vec<i64> = (0..m).map(|i| etap[i] - eta[i]).collect();
    let mut b: i64 = pairs_lt(n, n).map(|(i, j)| dt[i] * dt[j]).sum();
    b -= pairs_lt(m, m).map(|(i, j)| de[i] * de[j]).sum::<i64>();
    b += (0..m).map(|i| de[i] * (eta[i] - ix(i))).sum::<i64>();
    b -= (0..n).map(|i| dt[i] * (tau[i] - ix(i))).sum::<i64>();
    b += (p - r) * (tau.iter().sum::<i64>() - eta.iter().sum::<i64>());
    let pre = s_factor_sq(etap, eta)?
        * s_factor_sq(tau, eta)?
        * s_factor_sq(taup, taup)?
        * s_factor_sq(eta, eta)?;
    let pre = pre.checked_div(&(s_factor_sq(taup, tau)? * s_factor_sq(taup, etap)?))?;
    let lo: Vec<i64> = (0..m).map(|i| eta[i].max(taup[i + 1])).collect();
    let hi: Vec<i64> = (0..m).map(|i| etap[i].min(tau[i])).collect();
    if lo.iter().zip(&hi).any(|(a, b)| a > b) {
        return Ok(CoeffRat::zero());
    }
    let eta_size: i64 = eta.iter().sum();
    let mut total = CoeffRat::zero();
    let mut sig = lo.clone();
    loop {
        let d = sig.iter().sum::<i64>() - eta_size;
        let mut term = CoeffRat::q_pow((p - r + 1) * d) * s_factor_sq(&sig, &sig)? * s_factor_sq(taup, &sig)?;
        term = term.checked_div(&(s_factor_sq(&sig, eta)? * s_factor_sq(etap, &sig)? * s_factor_sq(tau, &sig)?))?;
        if d % 2 != 0 {
            term = -term;
        }
        total = total + term;
        let mut pos = 0;
        while pos < m && sig[pos] == hi[pos] {
            sig[pos] = lo[pos];
            pos += 1;
        }
        if pos == m {
            break;
        }
        sig[pos] += 1;
    }
    Ok(CoeffRat::q_pow(-b) * qfact(p - r)? * pre * total.mul_ref(&total))
}

/// The reduced coefficient on the slice `τ' = λ̃`, `τ = λ̃ - (k-1)`,
/// `η' = μ̃`, `η = μ̃ - (k-1)`, `p = n(k-1)`, `r = (n-1)(k-1)`.
pub fn cg_slice_squared(mu: &Signature, lam: &Signature, k: i64) -> Result<CoeffRat, Error> {
    require_lengths(mu, lam)?;
    require_k(k)?;
    let n = lam.len() as i64;
    let lt = tilde(lam, k);
    let mt = tilde(mu, k);
    let down = |v: &[i64]| v.iter().map(|x| x - (k - 1)).collect::<Vec<_>>();
    cg_reduced_squared(&down(&lt), n * (k - 1), &lt, &down(&mt), (n - 1) * (k - 1), &mt)
}

/// [`cg_slice_squared`] with the constant `q^{-2k(n-1)(k-1)}` produced by
/// translating the summation variable `σ` to `ν`.
pub fn cg_slice_translated_squared(mu: &Signature, lam: &Signature, k: i64) -> Result<CoeffRat, Error> {
    let n = lam.len() as i64;
    Ok(cg_slice_squared(mu, lam, k)? * CoeffRat::q_pow(-2 * k * (n - 1) * (k - 1)))
}

/// The closed form of the squared diagonal coefficient at the highest
/// weight `μ = (λ_1, …, λ_{n-1})`:
/// `q^{-3(n-1)k(k-1)} ∏_{i<n} [λ̄_i - λ̄_n - 1]_{k-1} / [λ̄_i - λ̄_n + k-1]_{k-1}`.
pub fn hw_diag_cg_closed_squared(lam: &Signature, k: i64) -> Result<CoeffRat, Error> {
    let km1 = require_k(k)?;
    let n = lam.len();
    if n == 0 {
        return Err(Error::LengthMismatch { expected: 1, found: 0 });
    }
    let lb = bar(lam, k);
    let last = lb[n - 1];
    let mut r = CoeffRat::q_pow(-3 * (n as i64 - 1) * k * (k - 1));
    for &x in &lb[..n - 1] {
        r = r * qfall(x - last - 1, km1).checked_div(&qfall(x - last + k - 1, km1))?;
    }
    Ok(r)
}

/// `∏` of slice coefficients along the highest-weight chain
/// `λ ⊃ (λ_1..λ_{n-1}) ⊃ …`.
fn hw_chain_squared(lam: &Signature, k: i64, memo: &mut HashMap<Signature, CoeffRat>) -> Result<CoeffRat, Error> {
    if lam.len() <= 1 {
        return Ok(CoeffRat::one());
    }
    if let Some(v) = memo.get(lam) {
        return Ok(v.clone());
    }
    let up = lam.truncated();
    let v = cg_slice_squared(&up, lam, k)? * hw_chain_squared(&up, k, memo)?;
    memo.insert(lam.clone(), v.clone());
    Ok(v)
}

/// `c(μ, λ)²` assembled from reduced Clebsch-Gordan squares:
/// `C(μ, λ)² · H(μ) / H(λ)` with `H` the product along the highest-weight
/// chain.
pub fn c_squared_chain(mu: &Signature, lam: &Signature, k: i64) -> Result<CoeffRat, Error> {
    require_lengths(mu, lam)?;
    let mut memo = HashMap::new();
    let top = hw_chain_squared(lam, k, &mut memo)?;
    let bottom = hw_chain_squared(mu, k, &mut memo)?;
    (cg_slice_squared(mu, lam, k)? * bottom).checked_div(&top)
}

/// `(x_1⋯x_n)^{-(k-1)(n-1)} ∏_{s=1}^{k-1} ∏_{i<j} (x_i - q^{2s} x_j)`.
pub fn ek_denominator(n: usize, k: i64) -> Result<NPoly, Error> {
    require_k(k)?;
    if n == 0 {
        return Ok(NPoly::one(0));
    }
    let mut f = NPoly::monomial(vec![-(k - 1) * (n as i64 - 1); n], CoeffRat::one());
    for s in 1..k {
        for (i, j) in pairs_lt(n, n) {
            f = f.mul(&NPoly::var(n, i).sub(&NPoly::var(n, j).scale_unit(&UnitMono::q(2 * s))));
        }
    }
    Ok(f)
}

/// The trace `Σ_chains ∏_i c(μ^i, μ^{i+1}) ∏_i x_i^{|μ̃^i| - |μ̃^{i-1}|}` over
/// the chains with dominant rows, `c` computed by [`diag_coeff_sum`].
///
/// It equals `P_λ(x; q², q^{2k}) · ek_denominator(n, k)`.
pub fn trace_reconstruct(lam: &Signature, n: usize, k: i64) -> Result<NPoly, Error> {
    if lam.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: lam.len() });
    }
    require_dominant(lam)?;
    require_k(k)?;
    if n == 0 {
        return Ok(NPoly::one(0));
    }
    let chains = dominant_shifted_chains(lam, k)?;
    let pairs: BTreeSet<(Signature, Signature)> = chains
        .iter()
        .flat_map(|ch| ch.windows(2).map(|w| (w[0].clone(), w[1].clone())))
        .collect();
    let values: HashMap<(Signature, Signature), CoeffRat> = pairs
        .into_par_iter()
        .map(|(mu, la)| {
            let c = diag_coeff_sum(&mu, &la, k)?;
            Ok(((mu, la), c))
        })
        .collect::<Result<_, Error>>()?;
    let mut acc = NPoly::zero(n);
    for ch in &chains {
        let mut w = CoeffRat::one();
        for pair in ch.windows(2) {
            w = w.mul_ref(&values[&(pair[0].clone(), pair[1].clone())]);
            if w.is_zero() {
                break;
            }
        }
        if w.is_zero() {
            continue;
        }
        let mut prev = 0;
        let exp: Vec<i64> = ch
            .iter()
            .map(|row| {
                let s: i64 = tilde(row, k).iter().sum();
                let d = s - prev;
                prev = s;
                d
            })
            .collect();
        acc.add_term(exp, &w);
    }
    Ok(acc)
}

/// `P_λ(x; q², q^{2k})` recovered from the trace by exact division.
pub fn trace_quotient(lam: &Signature, k: i64) -> Result<SymLaurent, Error> {
    let n = lam.len();
    let tr = trace_reconstruct(lam, n, k)?;
    let den = ek_denominator(n, k)?;
    // Dividing out (x_1⋯x_n)^{-(k-1)(n-1)} and the linear factors one by one.
    let mut f = tr.mul_monomial(&vec![(k - 1) * (n as i64 - 1); n]);
    for s in 1..k {
        let u = UnitMono::q(2 * s);
        for (i, j) in pairs_lt(n, n) {
            // In y_j = q^{2s}x_j the factor becomes y_i - y_j.
            let mut sc = vec![UnitMono::one(); n];
            sc[j] = u.inv();
            let quotient = f.scale_vars(&sc).div_linear(i, j)?;
            sc[j] = u;
            f = quotient.scale_vars(&sc);
        }
    }
    if f.mul(&den) != tr {
        return Err(Error::Domain("trace is not divisible by the denominator".into()));
    }
    SymLaurent::from_npoly(&f)
}

/// `Σ_{μ≺λ} x_n^{|λ|-|μ|} P_μ(x_1…x_{n-1}) ψ_qnum(λ, μ, k) = P_λ` with
/// `P = P(·; q², q^{2k})`.
pub fn branching_check(lam: &Signature, k: i64) -> Result<bool, Error> {
    require_dominant(lam)?;
    let n = lam.len();
    if n <= 1 {
        return Ok(true);
    }
    let mut acc = NPoly::zero(n);
    for mu in interlacing(lam) {
        let pm = macdonald_at_k(&mu, k)?.to_npoly();
        let psi = psi_qnum(lam, &mu, k)?;
        acc.add_assign_ref(&pm.extend_var(lam.size() - mu.size()).scale(&psi));
    }
    Ok(acc == macdonald_at_k(lam, k)?.to_npoly())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macops::psi_branch;

    fn sig(v: &[i64]) -> Signature {
        Signature(v.to_vec())
    }

    #[test]
    fn psi_examples() {
        let two = qnum(2);
        assert_eq!(psi_qnum(&sig(&[2, 0]), &sig(&[1]), 2).unwrap(), two.mul_ref(&two).checked_div(&qnum(3)).unwrap());
        for mu in interlacing(&sig(&[3, 1, 0])) {
            assert_eq!(psi_qnum(&sig(&[3, 1, 0]), &mu, 1).unwrap(), CoeffRat::one());
        }
        let a = psi_qnum(&sig(&[3, 1, 0]), &sig(&[2, 1]), 3).unwrap();
        let b = psi_qnum(&sig(&[5, 3, 2]), &sig(&[4, 3]), 3).unwrap();
        assert_eq!(a, b);
        assert!(psi_qnum(&sig(&[2, 0]), &sig(&[3]), 2).is_err());
    }

    #[test]
    fn psi_forms_agree() {
        for lam in [sig(&[2, 0]), sig(&[2, 1, 0]), sig(&[3, 1, 0])] {
            for mu in interlacing(&lam) {
                for k in 1..=3 {
                    let direct = psi_qnum(&lam, &mu, k).unwrap();
                    let via = psi_branch(&lam, &mu).unwrap().subst(&UnitMono::q(2), &UnitMono::q(2 * k)).unwrap();
                    assert_eq!(direct, via, "{lam} {mu} {k}");
                }
            }
        }
    }

    #[test]
    fn k_one_is_trivial() {
        let lam = sig(&[2, 1, 0]);
        for mu in interlacing(&lam) {
            assert_eq!(mat_elt(&mu, &lam, 1).unwrap(), CoeffRat::one());
            assert_eq!(diag_coeff_sum(&mu, &lam, 1).unwrap(), CoeffRat::one());
        }
        assert_eq!(ek_denominator(3, 1).unwrap(), NPoly::one(3));
        assert_eq!(ek_denominator(1, 4).unwrap(), NPoly::one(1));
    }

    #[test]
    fn routes_agree_small() {
        for (lam, k) in [(sig(&[1, 0]), 2), (sig(&[2, 0]), 2), (sig(&[2, 1, 0]), 2), (sig(&[2, 0]), 3)] {
            for mu in crate::combinat::window(&lam, k - 1) {
                let a = mat_elt(&mu, &lam, k).unwrap();
                let b = diag_coeff_sum(&mu, &lam, k).unwrap();
                assert_eq!(a, b, "{mu} {lam} {k}");
                if in_window(&mu, &lam, k) {
                    assert_eq!(a.mul_ref(&a), c_squared_chain(&mu, &lam, k).unwrap(), "{mu} {lam} {k}");
                }
            }
        }
    }

    #[test]
    fn outside_window_routes_agree() {
        let lam = sig(&[2, 0]);
        let mu = sig(&[3]);
        assert_eq!(mat_elt(&mu, &lam, 2).unwrap(), CoeffRat::zero());
        let a = mat_elt_formula(&mu, &lam, 2).unwrap();
        assert_eq!(a, diag_coeff_formula(&mu, &lam, 2).unwrap());
    }

    #[test]
    fn highest_weight_closed_form() {
        for k in 2..=3 {
            for lam in [sig(&[2, 0]), sig(&[3, 1]), sig(&[2, 1, 0])] {
                let raw = cg_slice_translated_squared(&lam.truncated(), &lam, k).unwrap();
                assert_eq!(raw, hw_diag_cg_closed_squared(&lam, k).unwrap());
            }
        }
    }

    #[test]
    fn ek_denominator_two_variables() {
        let d = ek_denominator(2, 2).unwrap();
        let expect = NPoly::from_terms(2, [(vec![0, -1], CoeffRat::one()), (vec![-1, 0], -CoeffRat::q_pow(2))]);
        assert_eq!(d, expect);
    }

    #[test]
    fn trace_small() {
        for n in 1..=3usize {
            assert_eq!(trace_reconstruct(&Signature::zero(n), n, 2).unwrap(), ek_denominator(n, 2).unwrap());
        }
        let lam = sig(&[1, 0]);
        assert_eq!(trace_quotient(&lam, 2).unwrap(), macdonald_at_k(&lam, 2).unwrap());
    }

    #[test]
    fn branching_small() {
        assert!(branching_check(&sig(&[2, 0]), 2).unwrap());
        assert!(branching_check(&sig(&[2, 1, 0]), 2).unwrap());
    }
}

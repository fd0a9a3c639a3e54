//! The polynomial representation of the double affine Hecke algebra of
//! `GL_n`, the symmetrizer, Macdonald operators as spherical elements, and the
//! restriction map `Res_l` collapsing `nl` variables to `n` ladders.
//!
//! Operator indices `i` are 1-based, as in the usual presentation.

use std::collections::{HashSet, VecDeque};

use rayon::prelude::*;

use crate::combinat::subsets;
use crate::macops::{mac_apply_npoly, mac_generator_npoly, MacParams};
use crate::qfield::{qnum, CoeffRat, UnitMono};
use crate::report::Report;
use crate::sampling::{random_npoly, random_sym, sample_rng};
use crate::Error;

pub use crate::sympoly::{NPoly, SymLaurent};

/// Square roots of the DAHA parameters: the represented algebra has
/// `q = qhalf²`, `t = thalf²`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DahaParams {
    pub qhalf: UnitMono,
    pub thalf: UnitMono,
}

impl DahaParams {
    pub fn new(qhalf: UnitMono, thalf: UnitMono) -> Self {
        DahaParams { qhalf, thalf }
    }

    /// Formal parameters `(q², t²)`.
    pub fn generic() -> Self {
        DahaParams { qhalf: UnitMono::q(1), thalf: UnitMono::t(1) }
    }

    /// The source parameters `(q^{-2l}, q²)` of `Res_l`.
    pub fn specialized(l: i64) -> Self {
        DahaParams { qhalf: UnitMono::q(-l), thalf: UnitMono::q(1) }
    }

    /// The target parameters `(q^{-2}, q^{2l})` of `Res_l`.
    pub fn target(l: i64) -> Self {
        DahaParams { qhalf: UnitMono::q(-1), thalf: UnitMono::q(l) }
    }

    /// The DAHA `q`.
    pub fn q(&self) -> UnitMono {
        self.qhalf.pow(2)
    }

    /// The DAHA `t`.
    pub fn t(&self) -> UnitMono {
        self.thalf.pow(2)
    }

    /// The Macdonald operator parameters matching `e_r(Y)`.
    pub fn mac_params(&self) -> MacParams {
        MacParams::new(self.q(), self.thalf)
    }
}

fn check_index(i: usize, hi: usize) -> Result<usize, Error> {
    if i == 0 || i > hi {
        return Err(Error::Domain(format!("operator index {i} outside 1..={hi}")));
    }
    Ok(i - 1)
}

fn unit(u: &UnitMono) -> CoeffRat {
    CoeffRat::from_unit(u)
}

/// `ρ(T_i) = t^{1/2}s_i + (t^{1/2} - t^{-1/2})/(X_i/X_{i+1} - 1)·(s_i - 1)`.
pub fn act_t(i: usize, f: &NPoly, p: &DahaParams) -> Result<NPoly, Error> {
    let n = f.nvars();
    let a = check_index(i, n.saturating_sub(1))?;
    let sf = f.swap_vars(a, a + 1);
    let quo = sf.sub(f).div_linear(a, a + 1)?;
    let mut e = vec![0; n];
    e[a + 1] = 1;
    let c = unit(&p.thalf).sub_ref(&unit(&p.thalf.inv()));
    Ok(sf.scale_unit(&p.thalf).add(&quo.mul_monomial(&e).scale(&c)))
}

/// `ρ(T_i^{-1}) = ρ(T_i) - t^{1/2} + t^{-1/2}`.
pub fn act_t_inv(i: usize, f: &NPoly, p: &DahaParams) -> Result<NPoly, Error> {
    let tf = act_t(i, f, p)?;
    Ok(tf.sub(&f.scale_unit(&p.thalf)).add(&f.scale_unit(&p.thalf.inv())))
}

/// Multiplication by `X_i^e`.
pub fn act_x(i: usize, f: &NPoly, e: i64) -> Result<NPoly, Error> {
    let a = check_index(i, f.nvars())?;
    let mut v = vec![0; f.nvars()];
    v[a] = e;
    Ok(f.mul_monomial(&v))
}

/// `ρ(Y_i) = ρ(T_i)⋯ρ(T_{n-1}) s_{n-1}⋯s_1 T_{q,X_1} ρ(T_1^{-1})⋯ρ(T_{i-1}^{-1})`.
pub fn act_y(i: usize, f: &NPoly, p: &DahaParams) -> Result<NPoly, Error> {
    let n = f.nvars();
    check_index(i, n)?;
    let mut g = f.clone();
    for j in (1..i).rev() {
        g = act_t_inv(j, &g, p)?;
    }
    g = g.scale_some_vars(&[0], &p.q());
    for j in 0..n - 1 {
        g = g.swap_vars(j, j + 1);
    }
    for j in (i..n).rev() {
        g = act_t(j, &g, p)?;
    }
    Ok(g)
}

/// `ρ(Y_i^{-1}) = ρ(T_{i-1})⋯ρ(T_1) T_{q,X_1}^{-1} s_1⋯s_{n-1} ρ(T_{n-1}^{-1})⋯ρ(T_i^{-1})`.
pub fn act_y_inv(i: usize, f: &NPoly, p: &DahaParams) -> Result<NPoly, Error> {
    let n = f.nvars();
    check_index(i, n)?;
    let mut g = f.clone();
    for j in i..n {
        g = act_t_inv(j, &g, p)?;
    }
    for j in (0..n - 1).rev() {
        g = g.swap_vars(j, j + 1);
    }
    g = g.scale_some_vars(&[0], &p.q().inv());
    for j in 1..i {
        g = act_t(j, &g, p)?;
    }
    Ok(g)
}

fn inversions(perm: &[usize]) -> usize {
    (0..perm.len()).flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count()
}

/// The idempotent `e = (1-t)^n/(t;t)_n Σ_σ t^{ℓ(σ)/2} T_σ` applied to `f`.
pub fn symmetrize(f: &NPoly, p: &DahaParams) -> Result<NPoly, Error> {
    let n = f.nvars();
    let id: Vec<usize> = (0..n).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([(id, f.clone())]);
    let mut acc = NPoly::zero(n);
    while let Some((perm, tf)) = queue.pop_front() {
        let len = inversions(&perm) as i64;
        acc.add_assign_ref(&tf.scale_unit(&p.thalf.pow(len)));
        for i in 1..n {
            // Left multiplication by s_i swaps the values i-1 and i.
            let next: Vec<usize> = perm
                .iter()
                .map(|&v| if v == i - 1 { i } else if v == i { i - 1 } else { v })
                .collect();
            if inversions(&next) as i64 == len + 1 && !seen.contains(&next) {
                seen.insert(next.clone());
                queue.push_back((next, act_t(i, &tf, p)?));
            }
        }
    }
    let t = unit(&p.t());
    let one = CoeffRat::one();
    let mut norm = one.sub_ref(&t).pow(n as i64)?;
    for m in 1..=n as i64 {
        norm = norm.checked_div(&one.sub_ref(&t.pow(m)?))?;
    }
    Ok(acc.scale(&norm))
}

/// `e_r(Y_1, …, Y_n)` on a symmetric polynomial; the result is symmetric.
pub fn e_r_y_apply(f: &SymLaurent, r: usize, p: &DahaParams) -> Result<SymLaurent, Error> {
    let n = f.nvars();
    if r > n {
        return Err(Error::Domain(format!("e_{r} of {n} operators")));
    }
    let g = f.to_npoly();
    let terms: Vec<NPoly> = subsets(n, r)
        .into_par_iter()
        .map(|idx| idx.iter().try_fold(g.clone(), |h, &i| act_y(i + 1, &h, p)))
        .collect::<Result<_, _>>()?;
    let mut acc = NPoly::zero(n);
    for t in &terms {
        acc.add_assign_ref(t);
    }
    SymLaurent::from_npoly(&acc)
}

/// `t^{-(n-1)/2} Σ_i ∏_{j≠i} (t x_j - x_i)/(x_j - x_i) · f(…, q^{-1}x_i, …)`
/// on an arbitrary polynomial.
pub fn p1_yinv_npoly(f: &NPoly, p: &DahaParams) -> Result<NPoly, Error> {
    let n = f.nvars();
    let (g, d) = f.clear_denominators();
    let t = p.t();
    let qinv = p.q().inv();
    let var = |i: usize| crate::sympoly::MPoly::var(n, i);
    let mut acc = crate::sympoly::MPoly::zero(n);
    for i in 0..n {
        // Vandermonde / ∏_{j≠i}(x_j - x_i) = (-1)^{n-1-i} ∏_{a<b; a,b≠i}(x_a - x_b).
        let mut term = g.scale_some_vars(&[i], &qinv);
        for a in (0..n).filter(|&a| a != i) {
            for b in (a + 1..n).filter(|&b| b != i) {
                term = term.mul(&var(a).sub(&var(b)));
            }
            term = term.mul(&var(a).scale_unit(&t).sub(&var(i)));
        }
        if (n - 1 - i) % 2 == 1 {
            term = term.neg();
        }
        acc.add_assign_ref(&term);
    }
    let acc = acc.div_vandermonde()?.scale_unit(&p.thalf.pow(-(n as i64 - 1)));
    NPoly::from_cleared(&acc, &d)
}

/// `e·p_1(Y^{-1})·e` on a symmetric polynomial, as a difference operator.
pub fn p1_yinv_apply(f: &SymLaurent, p: &DahaParams) -> Result<SymLaurent, Error> {
    SymLaurent::from_npoly(&p1_yinv_npoly(&f.to_npoly(), p)?)
}

/// `p_1(Y^{-1}) = Σ_i Y_i^{-1}` on a symmetric polynomial, composed from the
/// `T`, `s` and shift operators.
pub fn p1_yinv_apply_via_y(f: &SymLaurent, p: &DahaParams) -> Result<SymLaurent, Error> {
    let n = f.nvars();
    let g = f.to_npoly();
    let mut acc = NPoly::zero(n);
    for i in 1..=n {
        acc.add_assign_ref(&act_y_inv(i, &g, p)?);
    }
    SymLaurent::from_npoly(&acc)
}

/// `Res_l` on a polynomial in `nl` variables ordered `X_1^0, …, X_1^{l-1},
/// X_2^0, …`: `X_i^a ↦ q^{1-l+2a} X_i`.
pub fn res_npoly(f: &NPoly, n: usize, l: usize) -> Result<NPoly, Error> {
    if f.nvars() != n * l {
        return Err(Error::LengthMismatch { expected: n * l, found: f.nvars() });
    }
    let mut out = NPoly::zero(n);
    for (e, c) in f.terms() {
        let mut v = vec![0; n];
        let mut qexp = 0;
        for i in 0..n {
            for a in 0..l {
                let m = e[i * l + a];
                v[i] += m;
                qexp += (1 - l as i64 + 2 * a as i64) * m;
            }
        }
        out.add_term(v, &c.mul_unit(&UnitMono::q(qexp)));
    }
    Ok(out)
}

/// `Res_l` on a symmetric polynomial in `nl` variables.
pub fn res_map(f: &SymLaurent, n: usize, l: usize) -> Result<SymLaurent, Error> {
    if l == 0 {
        return Err(Error::Domain("Res_0 is undefined".into()));
    }
    SymLaurent::from_npoly(&res_npoly(&f.to_npoly(), n, l)?)
}

/// Whether the point splits into `n` ladders `z, zt, …, zt^{l-1}`.
pub fn is_multiwheel(point: &[UnitMono], n: usize, l: usize, t: &UnitMono) -> bool {
    fn rec(point: &[UnitMono], used: &mut Vec<bool>, l: usize, t: &UnitMono) -> bool {
        let Some(first) = used.iter().position(|u| !u) else {
            return true;
        };
        // The first unused coordinate sits at some height a of its ladder.
        for a in 0..l {
            let base = point[first].mul(&t.pow(-(a as i64)));
            let mut taken = vec![first];
            used[first] = true;
            let mut ok = true;
            for b in (0..l).filter(|&b| b != a) {
                let want = base.mul(&t.pow(b as i64));
                match (0..point.len()).find(|&j| !used[j] && point[j] == want) {
                    Some(j) => {
                        used[j] = true;
                        taken.push(j);
                    }
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && rec(point, used, l, t) {
                return true;
            }
            for j in taken {
                used[j] = false;
            }
        }
        false
    }
    if l == 0 || point.len() != n * l {
        return false;
    }
    rec(point, &mut vec![false; point.len()], l, t)
}

/// `(X_1⋯X_N)^{1/2}·body` when `half` is set, else `body`.
#[derive(Clone, PartialEq, Debug)]
pub struct HalfPoly {
    pub half: bool,
    pub body: NPoly,
}

impl HalfPoly {
    /// The polynomial in square-root variables `Z_i = X_i^{1/2}`.
    pub fn to_sqrt_vars(&self) -> NPoly {
        let off = i64::from(self.half);
        NPoly::from_terms(
            self.body.nvars(),
            self.body.terms().iter().map(|(e, c)| (e.iter().map(|x| 2 * x + off).collect(), c.clone())),
        )
    }
}

/// `D^r(e^{1/2} g) = shift^{r/2} e^{1/2} D^r g`; `shift_half² = shift`.
pub fn mac_apply_half(f: &HalfPoly, r: usize, p: &MacParams, shift_half: &UnitMono) -> Result<HalfPoly, Error> {
    let mut body = mac_apply_npoly(&f.body, r, p)?;
    if f.half {
        body = body.scale_unit(&shift_half.pow(r as i64));
    }
    Ok(HalfPoly { half: f.half, body })
}

/// `D(u) = Σ_r (-1)^{N-r} u^{N-r} D^r` on a half-power input.
pub fn mac_generator_half(f: &HalfPoly, u: &CoeffRat, p: &MacParams, shift_half: &UnitMono) -> Result<HalfPoly, Error> {
    if !f.half {
        return Ok(HalfPoly { half: false, body: mac_generator_npoly(&f.body, u, p)? });
    }
    let n = f.body.nvars();
    let mut acc = NPoly::zero(n);
    for r in 0..=n {
        let k = (n - r) as i64;
        let mut c = u.pow(k)?;
        if k % 2 == 1 {
            c = c.neg_ref();
        }
        acc.add_assign_ref(&mac_apply_half(f, r, p, shift_half)?.body.scale(&c));
    }
    Ok(HalfPoly { half: true, body: acc })
}

/// `D^r` computed directly in the square-root variables `Z_i`, where
/// `x_i = Z_i²` and the shift acts by `Z_i ↦ shift_half·Z_i`.
pub fn mac_apply_sqrt_vars(fz: &NPoly, r: usize, p: &MacParams, shift_half: &UnitMono) -> Result<NPoly, Error> {
    let n = fz.nvars();
    let sq = |i: usize| {
        let mut e = vec![0; n];
        e[i] = 2;
        NPoly::monomial(e, CoeffRat::one())
    };
    let tau2 = p.thalf.pow(2);
    let mut acc = NPoly::zero(n);
    for idx in subsets(n, r) {
        let inside: Vec<bool> = (0..n).map(|i| idx.contains(&i)).collect();
        let mut term = fz.scale_some_vars(&idx, shift_half);
        let mut flips = 0;
        for i in 0..n {
            for j in i + 1..n {
                if inside[i] == inside[j] {
                    term = term.mul(&sq(i).sub(&sq(j)));
                }
            }
        }
        for &i in &idx {
            for j in (0..n).filter(|&j| !inside[j]) {
                term = term.mul(&sq(i).scale_unit(&tau2).sub(&sq(j)));
                flips += usize::from(i > j);
            }
        }
        if flips % 2 == 1 {
            term = term.neg();
        }
        acc.add_assign_ref(&term);
    }
    let minus = UnitMono::new(-1, 0, 0);
    for i in 0..n {
        for j in i + 1..n {
            acc = acc.div_linear(i, j)?;
            acc = acc.scale_some_vars(&[j], &minus).div_linear(i, j)?.scale_some_vars(&[j], &minus);
        }
    }
    let rr = r as i64;
    Ok(acc.scale_unit(&p.thalf.pow(rr * (rr - n as i64))))
}

/// `Res_l` of `e_{nl}^{1/2}·g`, which is `e_n^{l/2}·Res_l g`.
pub fn res_half(f: &HalfPoly, n: usize, l: usize) -> Result<HalfPoly, Error> {
    let body = res_npoly(&f.body, n, l)?;
    if !f.half {
        return Ok(HalfPoly { half: false, body });
    }
    let whole = (l / 2) as i64;
    Ok(HalfPoly { half: l % 2 == 1, body: body.mul_monomial(&vec![whole; n]) })
}

fn sample_count(samples: usize) -> Vec<u64> {
    (0..samples as u64).collect()
}

/// Checks the defining relations of the DAHA on seeded random samples.
pub fn verify_relations(n: usize, p: &DahaParams, seed: u64, samples: usize) -> Report {
    let mut rep = Report::new("daha-relations").param("n", n).param("seed", seed).param("samples", samples);
    let fs: Vec<NPoly> = sample_count(samples)
        .into_iter()
        .map(|i| random_npoly(&mut sample_rng(seed, i), n, 1, 3, true))
        .collect();
    let run = |name: &str, rep: &mut Report, check: &(dyn Fn(&NPoly) -> Result<bool, Error> + Sync)| {
        let outcomes: Vec<Result<bool, Error>> = fs.par_iter().map(check).collect();
        rep.push_samples(name, outcomes);
    };
    let t = |i: usize, f: &NPoly| act_t(i, f, p);
    let ti = |i: usize, f: &NPoly| act_t_inv(i, f, p);
    let y = |i: usize, f: &NPoly| act_y(i, f, p);
    let pairs = |cond: &dyn Fn(usize, usize) -> bool, a: usize, b: usize| -> Vec<(usize, usize)> {
        (1..=a).flat_map(|i| (1..=b).map(move |j| (i, j))).filter(|&(i, j)| cond(i, j)).collect()
    };
    let m = n.saturating_sub(1);

    run("hecke-quadratic", &mut rep, &|f| {
        for i in 1..=m {
            let g = t(i, f)?.add(&f.scale_unit(&p.thalf.inv()));
            if !t(i, &g)?.sub(&g.scale_unit(&p.thalf)).is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    });
    run("braid", &mut rep, &|f| {
        for i in 1..m {
            let l = t(i, &t(i + 1, &t(i, f)?)?)?;
            let r = t(i + 1, &t(i, &t(i + 1, f)?)?)?;
            if l != r {
                return Ok(false);
            }
        }
        Ok(true)
    });
    let far = pairs(&|i, j| i.abs_diff(j) > 1, m, m);
    run("t-commute", &mut rep, &|f| {
        for &(i, j) in &far {
            if t(i, &t(j, f)?)? != t(j, &t(i, f)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    run("t-x-t", &mut rep, &|f| {
        for i in 1..=m {
            if t(i, &act_x(i, &t(i, f)?, 1)?)? != act_x(i + 1, f, 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    run("tinv-y-tinv", &mut rep, &|f| {
        for i in 1..=m {
            if ti(i, &y(i, &ti(i, f)?)?)? != y(i + 1, f)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    let far_x = pairs(&|i, j| i.abs_diff(j) > 1, m, n);
    run("t-x-commute", &mut rep, &|f| {
        for &(i, j) in &far_x {
            if t(i, &act_x(j, f, 1)?)? != act_x(j, &t(i, f)?, 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    run("t-y-commute", &mut rep, &|f| {
        for &(i, j) in &far_x {
            if t(i, &y(j, f)?)? != y(j, &t(i, f)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    let all = pairs(&|i, j| i < j, n, n);
    run("x-commute", &mut rep, &|f| {
        for &(i, j) in &all {
            if act_x(i, &act_x(j, f, 1)?, 1)? != act_x(j, &act_x(i, f, 1)?, 1)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    run("y-commute", &mut rep, &|f| {
        for &(i, j) in &all {
            if y(i, &y(j, f)?)? != y(j, &y(i, f)?)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    run("y-inverse", &mut rep, &|f| {
        for i in 1..=n {
            if act_y_inv(i, &y(i, f)?, p)? != *f {
                return Ok(false);
            }
        }
        Ok(true)
    });
    let ones = vec![1; n];
    run("y1-x-product", &mut rep, &|f| {
        if n == 0 {
            return Ok(true);
        }
        let l = y(1, &f.mul_monomial(&ones))?;
        let r = y(1, f)?.mul_monomial(&ones).scale_unit(&p.q());
        Ok(l == r)
    });
    run("x1inv-y2", &mut rep, &|f| {
        if n < 2 {
            return Ok(true);
        }
        let l = act_x(1, &y(2, f)?, -1)?;
        let r = y(2, &act_x(1, &ti(1, &ti(1, f)?)?, -1)?)?;
        Ok(l == r)
    });
    run("symmetrizer-idempotent", &mut rep, &|f| {
        let e = symmetrize(f, p)?;
        Ok(symmetrize(&e, p)? == e && e.is_symmetric())
    });
    rep
}

/// Checks `e_r(Y) = D^r` and the two routes for `p_1(Y^{-1})` on seeded
/// random symmetric polynomials.
pub fn verify_spherical(n: usize, p: &DahaParams, seed: u64, samples: usize, maxdeg: i64) -> Report {
    let mut rep = Report::new("spherical-macdonald").param("n", n).param("seed", seed).param("samples", samples);
    let fs: Vec<SymLaurent> =
        sample_count(samples).into_iter().map(|i| random_sym(&mut sample_rng(seed, i), n, maxdeg, 3)).collect();
    let mp = p.mac_params();
    for r in 0..=n {
        let outcomes = fs
            .par_iter()
            .map(|f| Ok::<_, Error>(e_r_y_apply(f, r, p)? == crate::macops::mac_apply(f, r, &mp)?))
            .collect();
        rep.push_samples(&format!("e{r}-y-equals-d{r}"), outcomes);
    }
    let outcomes =
        fs.par_iter().map(|f| Ok::<_, Error>(p1_yinv_apply(f, p)? == p1_yinv_apply_via_y(f, p)?)).collect();
    rep.push_samples("p1-yinv-routes", outcomes);
    rep
}

fn random_sym_nl(seed: u64, i: u64, nl: usize, maxdeg: i64) -> SymLaurent {
    random_sym(&mut sample_rng(seed, i), nl, maxdeg, 3)
}

/// Intertwining of `Res_l` with the first-order generators and with
/// multiplication by `e_1`.
pub fn verify_res_intertwine(n: usize, l: usize, seed: u64, samples: usize, maxdeg: i64) -> Report {
    let mut rep = Report::new("res-intertwine").param("n", n).param("l", l).param("seed", seed);
    let li = l as i64;
    let src = DahaParams::specialized(li);
    let tgt = DahaParams::target(li);
    let ql = qnum(li);
    let fs: Vec<NPoly> =
        sample_count(samples).into_iter().map(|i| random_sym_nl(seed, i, n * l, maxdeg).to_npoly()).collect();
    let outcomes = fs
        .par_iter()
        .map(|f| {
            let lhs = res_npoly(&mac_apply_npoly(f, 1, &src.mac_params())?, n, l)?;
            let rhs = mac_apply_npoly(&res_npoly(f, n, l)?, 1, &tgt.mac_params())?.scale(&ql);
            Ok::<_, Error>(lhs == rhs)
        })
        .collect();
    rep.push_samples("d1", outcomes);
    let outcomes = fs
        .par_iter()
        .map(|f| {
            let lhs = res_npoly(&p1_yinv_npoly(f, &src)?, n, l)?;
            let rhs = p1_yinv_npoly(&res_npoly(f, n, l)?, &tgt)?.scale(&ql);
            Ok::<_, Error>(lhs == rhs)
        })
        .collect();
    rep.push_samples("p1-yinv", outcomes);
    let e1 = |m: usize| {
        let mut s = NPoly::zero(m);
        for i in 0..m {
            s.add_assign_ref(&NPoly::var(m, i));
        }
        s
    };
    let outcomes = fs
        .par_iter()
        .map(|f| {
            let lhs = res_npoly(&e1(n * l).mul(f), n, l)?;
            let rhs = e1(n).mul(&res_npoly(f, n, l)?).scale(&ql);
            Ok::<_, Error>(lhs == rhs)
        })
        .collect();
    rep.push_samples("e1-multiplication", outcomes);
    rep
}

/// `Res_l ∘ D_{nl}(q^{l+1}) = ∏_{a=1}^{l} D_n(q^{2a}) ∘ Res_l`, on symmetric
/// inputs and on `e^{1/2}`-twisted symmetric inputs, together with the
/// half-power rule itself.
pub fn verify_res_diff(n: usize, l: usize, seed: u64, samples: usize, maxdeg: i64) -> Report {
    let mut rep = Report::new("res-diff").param("n", n).param("l", l).param("seed", seed);
    let li = l as i64;
    let src = DahaParams::specialized(li).mac_params();
    let tgt = DahaParams::target(li).mac_params();
    let (src_half, tgt_half) = (UnitMono::q(-li), UnitMono::q(-1));
    let u_src = CoeffRat::q_pow(li + 1);
    let fs: Vec<NPoly> =
        sample_count(samples).into_iter().map(|i| random_sym_nl(seed, i, n * l, maxdeg).to_npoly()).collect();
    let side = |f: &HalfPoly| -> Result<bool, Error> {
        let lhs = res_half(&mac_generator_half(f, &u_src, &src, &src_half)?, n, l)?;
        let mut rhs = res_half(f, n, l)?;
        for a in (1..=li).rev() {
            rhs = mac_generator_half(&rhs, &CoeffRat::q_pow(2 * a), &tgt, &tgt_half)?;
        }
        Ok(lhs == rhs)
    };
    let outcomes = fs.par_iter().map(|f| side(&HalfPoly { half: false, body: f.clone() })).collect();
    rep.push_samples("generator", outcomes);
    let outcomes = fs.par_iter().map(|f| side(&HalfPoly { half: true, body: f.clone() })).collect();
    rep.push_samples("generator-half-power", outcomes);
    let rule = |f: &NPoly, p: &MacParams, sh: &UnitMono| -> Result<bool, Error> {
        let h = HalfPoly { half: true, body: f.clone() };
        for r in 0..=f.nvars() {
            let direct = mac_apply_sqrt_vars(&h.to_sqrt_vars(), r, p, sh)?;
            if mac_apply_half(&h, r, p, sh)?.to_sqrt_vars() != direct {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let outcomes = fs
        .par_iter()
        .map(|f| Ok::<_, Error>(rule(f, &src, &src_half)? && rule(&res_npoly(f, n, l)?, &tgt, &tgt_half)?))
        .collect();
    rep.push_samples("half-power-rule", outcomes);
    rep
}

/// `∏_{u≠v} (X_u - q²X_v)` over all `nl` variables: vanishes on every
/// multiwheel ladder with `t = q²`, hence lies in the kernel of `Res_l`.
pub fn wheel_product(nl: usize) -> NPoly {
    let mut f = NPoly::one(nl);
    for u in 0..nl {
        for v in (0..nl).filter(|&v| v != u) {
            f = f.mul(&NPoly::var(nl, u).sub(&NPoly::var(nl, v).scale_unit(&UnitMono::q(2))));
        }
    }
    f
}

/// The Res substitution point `q^{1-l+2a}·z_i` for base points `z`.
pub fn res_point(base: &[UnitMono], l: usize) -> Vec<UnitMono> {
    base.iter()
        .flat_map(|z| (0..l).map(move |a| z.mul(&UnitMono::q(1 - l as i64 + 2 * a as i64))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::Signature;
    use crate::macops::mac_apply;
    use crate::sympoly::{e_sym, m_sym};

    fn x(n: usize, i: usize) -> NPoly {
        NPoly::var(n, i)
    }

    #[test]
    fn t_on_symmetric_is_scalar() {
        let p = DahaParams::generic();
        let f = x(2, 0).mul(&x(2, 1));
        assert_eq!(act_t(1, &f, &p).unwrap(), f.scale_unit(&p.thalf));
        let g = x(3, 0).add(&x(3, 1)).mul(&x(3, 2));
        assert_eq!(act_t(1, &g, &p).unwrap(), g.scale_unit(&p.thalf));
    }

    #[test]
    fn t_on_x1_satisfies_quadratic() {
        let p = DahaParams::generic();
        let f = x(2, 0);
        let tf = act_t(1, &f, &p).unwrap();
        // T X_1 = t^{1/2} X_2 + (t^{1/2} - t^{-1/2}) X_2 (X_2 - X_1)/(X_1 - X_2) = t^{-1/2} X_2.
        assert_eq!(tf, x(2, 1).scale_unit(&p.thalf.inv()));
        let g = tf.add(&f.scale_unit(&p.thalf.inv()));
        assert!(act_t(1, &g, &p).unwrap().sub(&g.scale_unit(&p.thalf)).is_zero());
        assert!(act_t(2, &f, &p).is_err());
    }

    #[test]
    fn y_one_variable_is_q_shift() {
        let p = DahaParams::generic();
        let f = x(1, 0).mul(&x(1, 0)).add(&NPoly::one(1));
        assert_eq!(act_y(1, &f, &p).unwrap(), f.scale_vars(&[p.q()]));
    }

    #[test]
    fn y_on_constant() {
        let p = DahaParams::generic();
        for n in 1..=3usize {
            for i in 1..=n {
                let expect = NPoly::one(n).scale_unit(&p.thalf.pow(n as i64 + 1 - 2 * i as i64));
                assert_eq!(act_y(i, &NPoly::one(n), &p).unwrap(), expect);
            }
        }
    }

    #[test]
    fn y_operators_commute_on_sample() {
        let p = DahaParams::generic();
        let f = x(2, 0).mul(&x(2, 0)).add(&x(2, 1).scale_unit(&UnitMono::q(1)));
        let a = act_y(1, &act_y(2, &f, &p).unwrap(), &p).unwrap();
        let b = act_y(2, &act_y(1, &f, &p).unwrap(), &p).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn relations_small() {
        assert!(verify_relations(1, &DahaParams::generic(), 0, 3).passed());
        let rep = verify_relations(2, &DahaParams::generic(), 0, 4);
        assert!(rep.passed(), "{rep:?}");
        let rep = verify_relations(2, &DahaParams::specialized(2), 5, 3);
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn spherical_examples() {
        let p = DahaParams::generic();
        let m11 = m_sym(&Signature(vec![1, 1]), 2).unwrap();
        let r = e_r_y_apply(&m11, 2, &p).unwrap();
        // D^2 multiplies by the DAHA q per variable: q_daha² = q⁴ here.
        assert_eq!(r, m11.scalar_mul(&CoeffRat::from_unit(&p.q().pow(2))));
        let one = SymLaurent::one(2);
        let e1 = e_r_y_apply(&one, 1, &p).unwrap();
        assert_eq!(e1, one.scalar_mul(&(CoeffRat::t_pow(1) + CoeffRat::t_pow(-1))));
        let e = e_sym(1, 2).unwrap();
        assert_eq!(e_r_y_apply(&e, 1, &p).unwrap(), mac_apply(&e, 1, &p.mac_params()).unwrap());
        assert_eq!(p1_yinv_apply(&e, &p).unwrap(), p1_yinv_apply_via_y(&e, &p).unwrap());
        let f1 = m_sym(&Signature(vec![2]), 1).unwrap();
        assert_eq!(p1_yinv_apply(&f1, &p).unwrap(), f1.scalar_mul(&CoeffRat::q_pow(-4)));
        assert_eq!(p1_yinv_apply(&one, &p).unwrap(), one.scalar_mul(&(CoeffRat::t_pow(1) + CoeffRat::t_pow(-1))));
    }

    #[test]
    fn res_examples() {
        let f = m_sym(&Signature(vec![1, 0]), 2).unwrap();
        let r = res_map(&f, 1, 2).unwrap();
        assert_eq!(r, m_sym(&Signature(vec![1]), 1).unwrap().scalar_mul(&qnum(2)));
        let g = e_sym(2, 3).unwrap();
        assert_eq!(res_map(&g, 3, 1).unwrap(), g);
        let w = SymLaurent::from_npoly(&wheel_product(2)).unwrap();
        assert!(res_map(&w, 1, 2).unwrap().is_zero());
    }

    #[test]
    fn multiwheel_examples() {
        let t = UnitMono::q(2);
        let z = UnitMono::new(1, 3, 1);
        assert!(is_multiwheel(&res_point(&[z, UnitMono::t(2)], 2), 2, 2, &t));
        assert!(is_multiwheel(&[z, z.mul(&t)], 1, 2, &t));
        assert!(is_multiwheel(&[z.mul(&t), z], 1, 2, &t));
        assert!(!is_multiwheel(&[z, z.mul(&t.pow(2))], 1, 2, &t));
        assert!(is_multiwheel(&res_point(&[z], 3), 1, 3, &t));
    }

    #[test]
    fn res_checks_small() {
        let rep = verify_res_intertwine(1, 2, 0, 3, 2);
        assert!(rep.passed(), "{rep:?}");
        let rep = verify_res_diff(1, 2, 0, 3, 2);
        assert!(rep.passed(), "{rep:?}");
        assert!(verify_res_diff(1, 1, 0, 2, 2).passed());
    }
}

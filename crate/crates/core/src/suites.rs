//! Named verification suites: each one checks a family of exact identities
//! on an enumerated or seeded-random set of cases and returns a [`Report`].

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::combinat::{partitions_up_to, window, Signature};
use crate::daha::{self, DahaParams};
use crate::indexops::{
    conjugated_apply, conjugator, index_apply, verify_adjoint, Box, IndexFn, IndexOpParams, IndexVariant,
};
use crate::intertwiner::{
    branching_check, c_squared_chain, diag_coeff_formula, diag_coeff_sum, ek_denominator, in_window,
    mat_elt, mat_elt_formula, mat_elt_kernel, psi_qnum, trace_quotient, trace_reconstruct,
};
use crate::macops::{
    eigenvalue, mac_apply, macdonald_at_k, macdonald_branch, macdonald_eigen, macdonald_gt, psi_branch,
    symmetry_check, MacParams,
};
use crate::qfield::{CoeffRat, UnitMono};
use crate::report::Report;
use crate::sampling::{random_coeff, sample_rng};
use crate::sympoly::{elementary, EvalPoint};
use crate::Error;

/// Parameters shared by all suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SuiteParams {
    pub n: usize,
    pub l: usize,
    pub k: i64,
    pub maxdeg: i64,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams { n: 2, l: 2, k: 2, maxdeg: 4, samples: 10, seed: 0 }
    }
}

/// A catalog entry.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SuiteInfo {
    pub name: &'static str,
    pub description: &'static str,
}

/// All suites, in execution order for `all`.
pub const SUITES: &[SuiteInfo] = &[
    SuiteInfo {
        name: "qfield-axioms",
        description: "field axioms, canonical form and substitution homomorphism for rational functions in q, t",
    },
    SuiteInfo {
        name: "macops-eigen",
        description: "Macdonald polynomials are joint eigenfunctions of D^r with eigenvalues e_r(q^{2λ} t^{2ρ})",
    },
    SuiteInfo {
        name: "constructor-agreement",
        description: "triangular eigen-solve, branching recursion and Gelfand-Tsetlin summation give the same P_λ",
    },
    SuiteInfo {
        name: "symmetry",
        description: "Macdonald evaluation symmetry P_λ(q^{2μ+2kρ}) ∝ P_μ(q^{2λ+2kρ}) at t = q^k",
    },
    SuiteInfo {
        name: "adjoint",
        description: "summation by parts for the index-side conjugated Macdonald operators on adapted functions, \
                      their conjugation formulas and the index-side eigenvalue identity",
    },
    SuiteInfo {
        name: "daha-relations",
        description: "defining relations of the double affine Hecke algebra in the polynomial representation",
    },
    SuiteInfo {
        name: "spherical-macdonald",
        description: "e_r(Y) acts on symmetric polynomials as D^r; p_1(Y^{-1}) equals its difference operator",
    },
    SuiteInfo {
        name: "res-intertwine",
        description: "the rank-restriction map Res_l intertwines first-order spherical generators",
    },
    SuiteInfo {
        name: "res-diff",
        description: "Res_l carries the generating operator D(q^{l+1}) to a product of l generating operators",
    },
    SuiteInfo {
        name: "matelt-routes",
        description: "intertwiner matrix elements: difference-operator formula = explicit sum, and its square = \
                      Clebsch-Gordan chain",
    },
    SuiteInfo {
        name: "branch",
        description: "branching rule at t = q^k with q-number coefficients, and agreement with the general rule",
    },
    SuiteInfo { name: "trace", description: "Etingof-Kirillov trace over Gelfand-Tsetlin chains equals P_λ times the denominator" },
];

pub fn list_suites() -> &'static [SuiteInfo] {
    SUITES
}

/// Runs a suite by name, or every suite for `"all"` (checks are then
/// prefixed by the suite name).
pub fn run_suite(name: &str, p: &SuiteParams) -> Result<Report, Error> {
    let rep = match name {
        "all" => {
            let mut all = base("all", p);
            for s in SUITES {
                let r = run_suite(s.name, p)?;
                all.absorb(&format!("{}/", s.name), r);
            }
            all
        }
        "qfield-axioms" => qfield_axioms(p),
        "macops-eigen" => macops_eigen(p),
        "constructor-agreement" => constructor_agreement(p),
        "symmetry" => symmetry(p),
        "adjoint" => adjoint(p),
        "daha-relations" => daha_relations(p),
        "spherical-macdonald" => spherical(p),
        "res-intertwine" => {
            let mut r = base(name, p);
            r.absorb("", daha::verify_res_intertwine(p.n, p.l, p.seed, p.samples, p.maxdeg.min(3)));
            r
        }
        "res-diff" => {
            let mut r = base(name, p);
            r.absorb("", daha::verify_res_diff(p.n, p.l, p.seed, p.samples, p.maxdeg.min(3)));
            r
        }
        "matelt-routes" => matelt_routes(p),
        "branch" => branch(p),
        "trace" => trace(p),
        other => return Err(Error::Domain(format!("unknown suite {other:?}"))),
    };
    Ok(rep)
}

type Outcomes = Vec<Result<bool, Error>>;

fn base(name: &str, p: &SuiteParams) -> Report {
    Report::new(name)
        .param("n", p.n)
        .param("l", p.l)
        .param("k", p.k)
        .param("maxdeg", p.maxdeg)
        .param("samples", p.samples)
        .param("seed", p.seed)
}

/// Dominant signatures with nonnegative parts, `n` parts, `|λ| ≤ maxdeg`.
fn cases(n: usize, maxdeg: i64) -> Vec<Signature> {
    partitions_up_to(maxdeg, n)
}

fn outcome<T: PartialEq>(a: Result<T, Error>, b: Result<T, Error>) -> Result<bool, Error> {
    Ok(a? == b?)
}

fn qfield_axioms(p: &SuiteParams) -> Report {
    let mut rep = base("qfield-axioms", p);
    let sample = |i: u64| -> [CoeffRat; 3] {
        let mut rng = sample_rng(p.seed, i);
        let mut mk = || {
            let num = random_coeff(&mut rng) + random_coeff(&mut rng);
            let den = random_coeff(&mut rng) + random_coeff(&mut rng) + CoeffRat::q_pow(rng.gen_range(1..3));
            if den.is_zero() {
                num
            } else {
                num / den
            }
        };
        [mk(), mk(), mk()]
    };
    let xs: Vec<[CoeffRat; 3]> = (0..p.samples as u64).map(sample).collect();
    let all = |f: &dyn Fn(&[CoeffRat; 3]) -> bool| xs.iter().map(|x| Ok::<_, Error>(f(x))).collect::<Vec<_>>();
    rep.push_samples("add-commutative", all(&|[a, b, _]| a.add_ref(b) == b.add_ref(a)));
    rep.push_samples("mul-commutative", all(&|[a, b, _]| a.mul_ref(b) == b.mul_ref(a)));
    rep.push_samples("add-associative", all(&|[a, b, c]| a.add_ref(b).add_ref(c) == a.add_ref(&b.add_ref(c))));
    rep.push_samples("mul-associative", all(&|[a, b, c]| a.mul_ref(b).mul_ref(c) == a.mul_ref(&b.mul_ref(c))));
    rep.push_samples(
        "distributive",
        all(&|[a, b, c]| a.mul_ref(&b.add_ref(c)) == a.mul_ref(b).add_ref(&a.mul_ref(c))),
    );
    rep.push_samples("additive-inverse", all(&|[a, _, _]| a.add_ref(&a.neg_ref()).is_zero()));
    rep.push_samples(
        "multiplicative-inverse",
        all(&|[a, _, _]| a.is_zero() || a.mul_ref(&a.inv().expect("nonzero")).is_one()),
    );
    let (qi, ti) = (UnitMono::q(2), UnitMono::new(-1, 1, 1));
    rep.push_samples(
        "subst-homomorphism",
        xs.iter()
            .map(|[a, b, _]| {
                let lhs = a.mul_ref(b).add_ref(a).subst(&qi, &ti)?;
                let (sa, sb) = (a.subst(&qi, &ti)?, b.subst(&qi, &ti)?);
                Ok::<_, Error>(lhs == sa.mul_ref(&sb).add_ref(&sa))
            })
            .collect(),
    );
    rep.push_samples(
        "canonical-form",
        all(&|[a, b, _]| {
            let x = a.mul_ref(b).checked_div(b).map(|x| x == *a).unwrap_or(b.is_zero());
            x && a.to_string() == a.add_ref(b).sub_ref(b).to_string()
        }),
    );
    rep
}

fn macops_eigen(p: &SuiteParams) -> Report {
    let mut rep = base("macops-eigen", p);
    let mp = MacParams::generic();
    let outcomes: Outcomes = cases(p.n, p.maxdeg)
        .par_iter()
        .map(|lam| {
            let pl = macdonald_eigen(lam, p.n)?;
            for r in 0..=p.n {
                if mac_apply(&pl, r, &mp)? != pl.scalar_mul(&eigenvalue(lam, r, &mp)) {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect();
    rep.push_samples("eigen-identities", outcomes);
    rep
}

fn constructor_agreement(p: &SuiteParams) -> Report {
    let mut rep = base("constructor-agreement", p);
    let lams = cases(p.n, p.maxdeg);
    let outcomes: Outcomes = lams
        .par_iter()
        .map(|lam| {
            let e = macdonald_eigen(lam, p.n)?;
            Ok(e == macdonald_branch(lam, p.n)? && e == macdonald_gt(lam, p.n)?)
        })
        .collect();
    rep.push_samples("eigen=branch=gt", outcomes);
    rep
}

fn symmetry(p: &SuiteParams) -> Report {
    let mut rep = base("symmetry", p);
    let lams = cases(p.n, p.maxdeg);
    let pairs: Vec<(&Signature, &Signature)> = lams.iter().flat_map(|a| lams.iter().map(move |b| (a, b))).collect();
    let outcomes: Outcomes = pairs
        .par_iter()
        .map(|(a, b)| {
            let (l, r) = symmetry_check(a, b, p.k)?;
            Ok(l == r)
        })
        .collect();
    rep.push_samples("symmetry-identity", outcomes);
    rep
}

/// A seeded adapted sample for summation by parts: the box, `f` vanishing on
/// the width-`l` shell and a generic `g`, all polynomial in `q^{2μ}`.
pub fn adjoint_sample(m: usize, l: usize, seed: u64, index: u64) -> (Box, IndexFn, IndexFn) {
    let mut rng = sample_rng(seed, index);
    let l = l as i64;
    let widths: Vec<i64> = (0..m).map(|_| rng.gen_range(0..=2)).collect();
    // Coordinates are spaced so that μ̄_i - μ̄_j stays away from {-1, 0, 1}
    // on the enlarged box and all shifts of it.
    let gap = 2 + 2 * l + 5;
    let lower: Vec<i64> = (0..m).map(|i| rng.gen_range(-1..=1) - gap * i as i64).collect();
    let upper: Vec<i64> = lower.iter().zip(&widths).map(|(a, w)| a + w).collect();
    let bx = Box::new(lower.clone(), upper.clone()).expect("widths are nonnegative");
    let poly = |rng: &mut rand_chacha::ChaCha8Rng| -> Vec<(Vec<i64>, CoeffRat)> {
        (0..3).map(|_| ((0..m).map(|_| rng.gen_range(-1..=2)).collect(), random_coeff(rng))).collect()
    };
    let eval_poly = |terms: &[(Vec<i64>, CoeffRat)], mu: &[i64]| -> CoeffRat {
        terms
            .iter()
            .map(|(a, c)| c.mul_ref(&CoeffRat::q_pow(2 * a.iter().zip(mu).map(|(x, y)| x * y).sum::<i64>())))
            .sum()
    };
    let fp = poly(&mut rng);
    let gp = poly(&mut rng);
    let f = IndexFn::total(m, move |mu| {
        let mut v = eval_poly(&fp, mu);
        for i in 0..m {
            let x = CoeffRat::q_pow(2 * mu[i]);
            for s in 1..=l {
                v = v * (x.sub_ref(&CoeffRat::q_pow(2 * (upper[i] + s))))
                    * (x.sub_ref(&CoeffRat::q_pow(2 * (lower[i] - s))));
            }
        }
        v
    });
    let g = IndexFn::total(m, move |mu| eval_poly(&gp, mu));
    (bx, f, g)
}

fn adjoint(p: &SuiteParams) -> Report {
    let mut rep = base("adjoint", p);
    let m = p.n.saturating_sub(1).max(1);
    let outcomes: Outcomes = (0..p.samples as u64)
        .into_par_iter()
        .map(|i| {
            let (bx, f, g) = adjoint_sample(m, p.l, p.seed, i);
            let mut rng = sample_rng(p.seed ^ 0x5eed, i);
            let rseq: Vec<usize> = (0..p.l).map(|_| rng.gen_range(0..=m)).collect();
            verify_adjoint(&f, &g, &bx, &rseq, p.k)
        })
        .collect();
    rep.push_samples("summation-by-parts", outcomes);
    let (bx, _, g) = adjoint_sample(m, p.l.max(1), p.seed, 0);
    let one = IndexFn::constant(m, CoeffRat::one());
    let detected = matches!(verify_adjoint(&one, &g, &bx, &vec![1; p.l.max(1)], p.k), Err(Error::Precondition(_)));
    rep.push("non-adapted-rejected", detected, None);

    let f = IndexFn::total(m, |mu| {
        mu.iter().enumerate().map(|(i, x)| CoeffRat::q_pow((i as i64 + 1) * x * x) + CoeffRat::from_int(*x)).sum()
    });
    let k = p.k;
    let tilde_c = conjugator(m, k, k as u32);
    let dagger_c = conjugator(m, k, (k - 1) as u32);
    let points: Vec<Vec<i64>> = (0..p.samples as u64)
        .map(|i| {
            let mut rng = sample_rng(p.seed, i);
            (0..m).map(|j| rng.gen_range(-2..=2) - (2 * k + 6) * j as i64).collect()
        })
        .collect();
    let outcomes: Outcomes = points
        .iter()
        .map(|mu| {
            for r in 0..=m {
                let t = IndexOpParams { k, variant: IndexVariant::Tilde, r };
                let plain = IndexOpParams { k, variant: IndexVariant::Plain { step: 1, tau_exp: k }, r };
                if index_apply(&f, &t, mu)? != conjugated_apply(&f, &plain, &tilde_c, false, mu)? {
                    return Ok(false);
                }
                let d = IndexOpParams { k, variant: IndexVariant::Dagger, r };
                let plain = IndexOpParams { k, variant: IndexVariant::Plain { step: -1, tau_exp: k - 1 }, r };
                if index_apply(&f, &d, mu)? != conjugated_apply(&f, &plain, &dagger_c, true, mu)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect();
    rep.push_samples("conjugation-consistency", outcomes);
    rep.push_samples("index-eigen-identity", index_eigen_outcomes(m, p.maxdeg.min(3), k));
    rep
}

/// `D̃^r P_μ(x) = e_r(x) P_μ(x)` with `μ ↦ P_μ(x; q², q^{2k})` as the index
/// function, at a generic point `x`.
pub fn index_eigen_outcomes(m: usize, maxdeg: i64, k: i64) -> Vec<Result<bool, Error>> {
    let x: Vec<UnitMono> = (0..m).map(|i| UnitMono::new(1, i as i64, 2 * i as i64 + 1)).collect();
    let xs: Vec<CoeffRat> = x.iter().map(CoeffRat::from_unit).collect();
    let pt = EvalPoint::new(x);
    let pf = IndexFn::new(m, move |mu| {
        let s = Signature(mu.to_vec());
        if !s.is_dominant() {
            return Ok(CoeffRat::zero());
        }
        macdonald_at_k(&s, k)?.eval(&pt)
    });
    cases(m, maxdeg)
        .par_iter()
        .map(|mu| {
            let v = pf.eval(&mu.0)?;
            for r in 0..=m {
                let op = IndexOpParams { k, variant: IndexVariant::Tilde, r };
                if index_apply(&pf, &op, &mu.0)? != elementary(r, &xs).mul_ref(&v) {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect()
}

fn daha_relations(p: &SuiteParams) -> Report {
    let mut rep = base("daha-relations", p);
    rep.absorb("generic/", daha::verify_relations(p.n, &DahaParams::generic(), p.seed, p.samples));
    rep.absorb(
        "specialized/",
        daha::verify_relations(p.n, &DahaParams::specialized(p.l as i64), p.seed, p.samples),
    );
    rep
}

fn spherical(p: &SuiteParams) -> Report {
    let mut rep = base("spherical-macdonald", p);
    rep.absorb("", daha::verify_spherical(p.n, &DahaParams::generic(), p.seed, p.samples, p.maxdeg.min(3)));
    rep
}

fn matelt_routes(p: &SuiteParams) -> Report {
    let mut rep = base("matelt-routes", p);
    let k = p.k;
    let pairs: Vec<(Signature, Signature)> = cases(p.n, p.maxdeg)
        .into_iter()
        .flat_map(|lam| window(&lam, k - 1).into_iter().map(move |mu| (mu, lam.clone())))
        .collect();
    let inside: Vec<&(Signature, Signature)> = pairs.iter().filter(|(mu, lam)| in_window(mu, lam, k)).collect();
    let outcomes =
        inside.par_iter().map(|(mu, lam)| outcome(mat_elt(mu, lam, k), diag_coeff_sum(mu, lam, k))).collect();
    rep.push_samples("mat_elt=diag_sum", outcomes);
    let outcomes: Outcomes = inside
        .par_iter()
        .map(|(mu, lam)| {
            let c = mat_elt(mu, lam, k)?;
            Ok(c.mul_ref(&c) == c_squared_chain(mu, lam, k)?)
        })
        .collect();
    rep.push_samples("mat_elt^2=cg_chain", outcomes);
    // Off the window the raw formulas still agree with each other.
    let lams = cases(p.n, p.maxdeg);
    let off: Vec<(Signature, Signature)> = lams
        .iter()
        .flat_map(|lam| {
            let n = lam.len();
            (0..n.saturating_sub(1)).flat_map(move |i| {
                let mut hi = lam.truncated();
                hi.0[i] = lam.0[i] + 1;
                let mut lo = lam.truncated();
                lo.0[i] = lam.0[i + 1] - k;
                [hi, lo].into_iter().map(move |mu| (mu, lam.clone()))
            })
        })
        .filter(|(mu, _)| mu.is_dominant())
        .collect();
    let outcomes: Outcomes = off
        .par_iter()
        .map(|(mu, lam)| {
            let a = mat_elt_formula(mu, lam, k)?;
            let b = diag_coeff_formula(mu, lam, k)?;
            Ok(a == b && mat_elt(mu, lam, k)?.is_zero())
        })
        .collect();
    rep.push_samples("off-window", outcomes);
    let outcomes: Outcomes = lams
        .par_iter()
        .filter(|lam| lam.len() >= 2)
        .map(|lam| {
            let n = lam.len();
            // The kernel is supported on the interlacing box moved down by k-1.
            let shift = |v: &[i64]| v.iter().map(|x| x - (k - 1)).collect::<Vec<_>>();
            let bx = Box::new(shift(&lam.0[1..]), shift(&lam.0[..n - 1]))?;
            crate::indexops::is_adapted(&mat_elt_kernel(lam, k)?, &bx, k - 1)
        })
        .collect();
    rep.push_samples("kernel-adapted", outcomes);
    rep
}

fn branch(p: &SuiteParams) -> Report {
    let mut rep = base("branch", p);
    let k = p.k;
    let lams = cases(p.n, p.maxdeg);
    let outcomes: Outcomes = lams.par_iter().map(|lam| branching_check(lam, k)).collect();
    rep.push_samples("branching-rule", outcomes);
    let outcomes: Outcomes = lams
        .par_iter()
        .map(|lam| {
            for mu in crate::combinat::interlacing(lam) {
                let via = psi_branch(lam, &mu)?.subst(&UnitMono::q(2), &UnitMono::q(2 * k))?;
                if psi_qnum(lam, &mu, k)? != via {
                    return Ok(false);
                }
            }
            Ok(true)
        })
        .collect();
    rep.push_samples("psi-forms", outcomes);
    rep
}

fn trace(p: &SuiteParams) -> Report {
    let mut rep = base("trace", p);
    let k = p.k;
    let zero = Signature::zero(p.n);
    rep.push_samples("trivial-trace", vec![outcome(trace_reconstruct(&zero, p.n, k), ek_denominator(p.n, k))]);
    let outcomes: Outcomes = cases(p.n, p.maxdeg)
        .par_iter()
        .map(|lam| outcome(trace_quotient(lam, k), macdonald_at_k(lam, k)))
        .collect();
    rep.push_samples("trace/denominator=P", outcomes);
    rep
}

//! Property tests for the algebraic invariants.

use macbranch::combinat::{gt_enumerate, interlacing, window, Signature};
use macbranch::daha::{self, DahaParams};
use macbranch::indexops::verify_adjoint;
use macbranch::intertwiner::{branching_check, diag_coeff_sum, in_window, mat_elt, psi_qnum};
use macbranch::macops::{eigenvalue, mac_apply, macdonald_eigen, MacParams};
use macbranch::qfield::{qfall, qnum, CoeffRat, LaurentQT, UnitMono};
use macbranch::report::Report;
use macbranch::sampling::{random_npoly, random_sym, sample_rng};
use macbranch::suites::adjoint_sample;
use proptest::prelude::*;
use rand::Rng;

/// A rational function with small numerator and denominator.
fn coeff() -> impl Strategy<Value = CoeffRat> {
    let term = (-3i64..=3, -2i64..=2, -2i64..=2);
    (prop::collection::vec(term.clone(), 1..4), prop::collection::vec(term, 1..3)).prop_map(|(num, den)| {
        let build = |ts: &[(i64, i64, i64)]| {
            ts.iter().fold(CoeffRat::zero(), |acc, &(c, a, b)| {
                acc + CoeffRat::from_int(c) * CoeffRat::q_pow(a) * CoeffRat::t_pow(b)
            })
        };
        let (n, d) = (build(&num), build(&den));
        if d.is_zero() {
            n
        } else {
            n / d
        }
    })
}

fn laurent() -> impl Strategy<Value = LaurentQT> {
    prop::collection::vec((-3i64..=3, -2i64..=2, -1i64..=2), 1..4).prop_map(|ts| {
        ts.iter().fold(LaurentQT::zero(), |acc, &(c, a, b)| {
            acc.add_ref(&LaurentQT::from_int(c).mul_ref(&LaurentQT::q_pow(a)).mul_ref(&LaurentQT::t_pow(b)))
        })
    })
}

fn dominant(n: usize, lo: i64, hi: i64) -> impl Strategy<Value = Signature> {
    prop::collection::vec(lo..=hi, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Signature(v)
    })
}

fn partition(maxn: usize, maxpart: i64) -> impl Strategy<Value = Signature> {
    (1..=maxn).prop_flat_map(move |n| dominant(n, 0, maxpart))
}

fn all_pass(r: &Report) -> bool {
    r.checks.iter().all(|c| c.pass)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in coeff(), b in coeff(), c in coeff()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
            prop_assert!((&b * &b.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn canonical_form_is_unique(a in coeff(), b in coeff()) {
        prop_assume!(!b.is_zero());
        // The same value reached two ways prints and hashes identically.
        let round = &(&a * &b) / &b;
        prop_assert_eq!(round.to_string(), a.to_string());
        prop_assert_eq!(round, a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in coeff(), b in coeff(), qa in 1i64..=3, tb in -2i64..=2) {
        let (qi, ti) = (UnitMono::q(qa), UnitMono::new(1, 1, tb));
        let s = |x: &CoeffRat| x.subst(&qi, &ti);
        if let (Ok(sa), Ok(sb), Ok(sum), Ok(prod)) = (s(&a), s(&b), s(&(&a + &b)), s(&(&a * &b))) {
            prop_assert_eq!(sum, &sa + &sb);
            prop_assert_eq!(prod, &sa * &sb);
        }
    }

    #[test]
    fn q_numbers(a in -8i64..=8, m in 0u32..=4) {
        prop_assert_eq!(qnum(-a), -qnum(a));
        let bar = qnum(a).subst(&UnitMono::q(-1), &UnitMono::t(1)).unwrap();
        prop_assert_eq!(bar, qnum(a));
        let prod: CoeffRat = (0..m as i64).map(|i| qnum(a - i)).product();
        prop_assert_eq!(qfall(a, m), prod);
    }

    #[test]
    fn laurent_gcd_contains_common_factor(a in laurent(), b in laurent(), h in laurent()) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !h.is_zero());
        let (ah, bh) = (a.mul_ref(&h), b.mul_ref(&h));
        let d = ah.gcd(&bh);
        prop_assert!(ah.div_exact(&d).is_some());
        prop_assert!(bh.div_exact(&d).is_some());
        prop_assert!(d.div_exact(&h).is_some());
    }

    #[test]
    fn symmetric_products_commute(seed in any::<u64>()) {
        let mut rng = sample_rng(seed, 0);
        let n = rng.gen_range(1..=3);
        let f = random_sym(&mut rng, n, 2, 2);
        let g = random_sym(&mut rng, n, 2, 2);
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).to_npoly(), f.to_npoly().mul(&g.to_npoly()));
        prop_assert!(f.to_npoly().is_symmetric());
    }

    #[test]
    fn gt_count_is_shift_invariant(lam in (1usize..=3).prop_flat_map(|n| dominant(n, -2, 3)), c in -3i64..=3) {
        let a = gt_enumerate(&lam).unwrap().len();
        let b = gt_enumerate(&lam.shifted_by(c)).unwrap().len();
        prop_assert_eq!(a, b);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn eigen_identities(lam in partition(3, 3)) {
        let mp = MacParams::generic();
        let p = macdonald_eigen(&lam, lam.len()).unwrap();
        for r in 0..=lam.len() {
            prop_assert_eq!(mac_apply(&p, r, &mp).unwrap(), p.scalar_mul(&eigenvalue(&lam, r, &mp)));
        }
    }

    #[test]
    fn negative_signatures_reduce_to_partitions(lam in partition(3, 3), c in 1i64..=2) {
        let shifted = macdonald_eigen(&lam.shifted_by(-c), lam.len()).unwrap();
        prop_assert_eq!(shifted, macdonald_eigen(&lam, lam.len()).unwrap().mono_shift(-c));
    }

    #[test]
    fn daha_relations_hold(seed in any::<u64>(), spec in 0i64..=2) {
        let p = if spec == 0 { DahaParams::generic() } else { DahaParams::specialized(spec) };
        prop_assert!(all_pass(&daha::verify_relations(2, &p, seed, 2)));
    }

    #[test]
    fn spherical_operators(seed in any::<u64>()) {
        prop_assert!(all_pass(&daha::verify_spherical(2, &DahaParams::generic(), seed, 2, 2)));
    }

    #[test]
    fn res_intertwines(seed in any::<u64>()) {
        prop_assert!(all_pass(&daha::verify_res_intertwine(1, 2, seed, 2, 2)));
    }

    #[test]
    fn matelt_routes_agree(lam in (2usize..=3).prop_flat_map(|n| dominant(n, -1, 3)), k in 1i64..=3) {
        for mu in window(&lam, k - 1).into_iter().filter(|mu| in_window(mu, &lam, k)) {
            prop_assert_eq!(mat_elt(&mu, &lam, k).unwrap(), diag_coeff_sum(&mu, &lam, k).unwrap());
        }
    }

    #[test]
    fn psi_is_shift_invariant(lam in partition(3, 3), k in 1i64..=3, c in -2i64..=2) {
        for mu in interlacing(&lam) {
            prop_assert_eq!(
                psi_qnum(&lam, &mu, k).unwrap(),
                psi_qnum(&lam.shifted_by(c), &mu.shifted_by(c), k).unwrap()
            );
        }
    }

    #[test]
    fn branching_rule(lam in partition(3, 3), k in 1i64..=3) {
        prop_assert!(branching_check(&lam, k).unwrap());
    }

    #[test]
    fn summation_by_parts(seed in any::<u64>(), m in 1usize..=2, l in 1usize..=2, k in 1i64..=3) {
        let (bx, f, g) = adjoint_sample(m, l, seed, 0);
        let mut rng = sample_rng(seed, 1);
        let rseq: Vec<usize> = (0..l).map(|_| rng.gen_range(0..=m)).collect();
        prop_assert!(verify_adjoint(&f, &g, &bx, &rseq, k).unwrap());
    }

    #[test]
    fn symmetrization_is_idempotent(seed in any::<u64>()) {
        let p = DahaParams::generic();
        let mut rng = sample_rng(seed, 0);
        let f = random_npoly(&mut rng, 2, 2, 3, true);
        let once = daha::symmetrize(&f, &p).unwrap();
        prop_assert!(once.is_symmetric());
        prop_assert_eq!(daha::symmetrize(&once, &p).unwrap(), once);
    }
}

use std::collections::BTreeMap;

use proptest::prelude::*;
use proptest::sample::select;

use theta_ktypes::cohomology::{aq_numerology, bwb_gamma_v0, verify_filtration, verify_layer_dims};
use theta_ktypes::orth::branch_one_step;
use theta_ktypes::report::Verdict;
use theta_ktypes::tensor::{
    gl_dim, lr_coeff, lr_product, newell_littlewood, restrict_gl, skew_cauchy, stable_o_branch_ext,
    sym_cauchy,
};
use theta_ktypes::theta::{infchar_theta_lift, omega_nonzero, theta_one_ktypes, OmegaParams, ThetaParams};
use theta_ktypes::zuckerman::{labels_up_to, verify_thm11, AssemblyMode};
use theta_ktypes::{OLabel, Partition};

fn label(max_rank: usize, max_size: u32) -> impl Strategy<Value = OLabel> {
    (1..=max_rank).prop_flat_map(move |n| select(labels_up_to(n, max_size)))
}

fn partition(max_size: u32, max_depth: usize) -> impl Strategy<Value = Partition> {
    select(Partition::all_up_to(max_size, max_depth))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn twist_keeps_dim_and_infchar(x in label(10, 6)) {
        let y = x.det_twist();
        prop_assert_eq!(x.dim(), y.dim());
        prop_assert_eq!(x.infchar(), y.infchar());
        prop_assert_eq!(y.det_twist(), x);
    }

    #[test]
    fn label_syntax_round_trips(x in label(10, 6)) {
        prop_assert_eq!(OLabel::parse(&x.syntax(), x.rank()).unwrap(), x.clone());
        prop_assert_eq!(OLabel::parse(&x.to_string(), x.rank()).unwrap(), x.clone());
        prop_assert_eq!(OLabel::from_full_array(&x.to_full_array()), Some(x));
    }

    #[test]
    fn one_step_conserves_dim_and_commutes_with_twist(x in label(10, 6)) {
        prop_assume!(x.rank() >= 2);
        let down = branch_one_step(&x);
        prop_assert_eq!(down.iter().map(OLabel::dim).sum::<u128>(), x.dim());
        let mut a: Vec<OLabel> = branch_one_step(&x.det_twist());
        let mut b: Vec<OLabel> = down.iter().map(OLabel::det_twist).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn lr_symmetric_and_graded(lam in partition(7, 4), mu in partition(4, 3), nu in partition(4, 3)) {
        let c = lr_coeff(&lam, &mu, &nu);
        prop_assert_eq!(c, lr_coeff(&lam, &nu, &mu));
        if c > 0 {
            prop_assert_eq!(lam.size(), mu.size() + nu.size());
            prop_assert!(mu.is_contained_in(&lam) && nu.is_contained_in(&lam));
        }
    }

    #[test]
    fn gl_products_conserve_dim(mu in partition(4, 3), nu in partition(4, 3), g in 3usize..6) {
        let total: u128 = lr_product(&mu, &nu, g).iter().map(|(l, c)| *c as u128 * gl_dim(l, g)).sum();
        prop_assert_eq!(total, gl_dim(&mu, g) * gl_dim(&nu, g));
    }

    #[test]
    fn restriction_conserves_dim(lam in partition(6, 4), n in 1usize..10) {
        prop_assume!(lam.depth() <= n);
        prop_assert_eq!(restrict_gl(&lam, n).unwrap().total_dim(), gl_dim(&lam, n));
    }

    #[test]
    fn stable_tensor_conserves_dim_and_has_unit(x in label(10, 3), size in 0u32..3) {
        let ys = labels_up_to(x.rank(), size);
        for y in ys {
            if let Ok(s) = newell_littlewood(&x, &y) {
                prop_assert_eq!(s.total_dim(), x.dim() * y.dim());
            }
        }
        let unit = newell_littlewood(&x, &OLabel::trivial(x.rank())).unwrap();
        prop_assert_eq!(unit.len(), 1);
        prop_assert_eq!(unit.get(&[x.clone()]), 1);
    }

    #[test]
    fn cauchy_degrees(deg in 0u32..6, p in 1usize..4, q in 1usize..4) {
        prop_assert!(sym_cauchy(deg, p, q).iter().all(|nu| nu.size() == deg));
        if deg as usize > p * q {
            prop_assert!(skew_cauchy(deg, p, q).is_err());
            return Ok(());
        }
        for (a, b) in skew_cauchy(deg, p, q).unwrap() {
            prop_assert_eq!(a.size(), deg);
            prop_assert_eq!(b, a.conjugate());
        }
    }

    // Iterating O(k) ↓ O(k−1) from O(a+b) to O(a) counts each O(a)-type κ
    // with multiplicity Σ_ν mult(κ⊠ν)·dim ν.
    #[test]
    fn branch_agrees_with_interlacing(x in label(8, 4), cut in 1usize..7) {
        let total = x.rank();
        prop_assume!(cut < total);
        let (a, b) = (cut, total - cut);
        let mut chain: BTreeMap<OLabel, u128> = BTreeMap::from([(x.clone(), 1)]);
        for _ in 0..b {
            let mut next = BTreeMap::new();
            for (y, c) in chain {
                for z in branch_one_step(&y) {
                    *next.entry(z).or_insert(0) += c;
                }
            }
            chain = next;
        }
        let mut marginal: BTreeMap<OLabel, u128> = BTreeMap::new();
        for (k, m) in stable_o_branch_ext(&x, a, b).unwrap().iter() {
            *marginal.entry(k[0].clone()).or_insert(0) += m as u128 * k[1].dim();
        }
        prop_assert_eq!(chain, marginal);
    }

    #[test]
    fn trivial_lift_is_multiplicity_free(p in 1usize..3, n in 1usize..8, m in 1usize..8) {
        let t = ThetaParams::new(p, n, m);
        prop_assume!(t.check().is_ok());
        if let Ok(k) = theta_one_ktypes(t, 4) {
            prop_assert!(k.iter().all(|(_, c)| c == 1));
            let mut partners: BTreeMap<OLabel, usize> = BTreeMap::new();
            for (kt, _) in k.iter() {
                *partners.entry(kt[0].clone()).or_insert(0) += 1;
            }
            prop_assert!(partners.values().all(|&c| c == 1));
        }
    }

    #[test]
    fn deep_enough_mu_gives_regular_lift(p in 1usize..3, n in 1usize..5, r in 0usize..4, mu in partition(5, 2)) {
        let rprime = 2 * p + 2;
        let op = OmegaParams::new(p, n, r, rprime);
        let mu = OLabel::new(rprime, mu, false).unwrap();
        prop_assume!(omega_nonzero(op, &mu).unwrap_or(false));
        let (_, regular) = infchar_theta_lift(op, &mu).unwrap();
        if mu.highest_weight().part(p - 1) as i64 >= op.delta() {
            prop_assert!(regular);
        }
    }

    #[test]
    fn aq_degree_bookkeeping(p in 1usize..5, extra in 0usize..8, i in 0usize..30) {
        let n = 2 * p + extra;
        let d = aq_numerology(p, n, 0, n + 2).unwrap();
        prop_assert_eq!(d.s0 + d.s1, d.s0prime);
        let got = bwb_gamma_v0(&Partition::empty(), p, n, n + 2, i).unwrap();
        prop_assert_eq!(got.is_some(), i == d.s0);
    }
}

#[test]
fn raising_cutoff_keeps_matches() {
    for (p, n, m) in [(1, 2, 6), (1, 3, 5), (2, 4, 8), (1, 4, 6)] {
        for r in 1..m {
            let t = ThetaParams::new(p, n, m);
            let low = verify_thm11(t, r, 2, AssemblyMode::Formula).verdict;
            let high = verify_thm11(t, r, 4, AssemblyMode::Formula).verdict;
            if low == Verdict::Match {
                assert_eq!(high, Verdict::Match, "(p,n,m,r) = ({p},{n},{m},{r})");
            }
        }
    }
}

#[test]
fn filtration_and_layer_sizes() {
    for (p, n, r, m) in [(1, 2, 1, 4), (1, 2, 2, 6), (1, 3, 2, 5), (2, 4, 2, 6), (2, 4, 3, 8)] {
        let rep = verify_filtration(p, n, r, m, 3);
        assert_eq!(rep.verdict, Verdict::Match, "({p},{n},{r},{m}): {:?}", rep.reason);
    }
    for (p, q) in [(1, 1), (1, 4), (2, 3), (3, 3)] {
        assert_eq!(verify_layer_dims(p, q, 6).verdict, Verdict::Match);
    }
}

use proptest::prelude::*;

use lefschetz::algebra::{algebra_from_dual, AlgebraView, BasisOrder};
use lefschetz::family::{dual_generator, hilbert_vector, FamilyParams};
use lefschetz::poly::LinearForm;
use lefschetz::wlp::{linear_form_rank, wlp_check, Method, Verdict, WlpOptions};

fn params() -> impl Strategy<Value = FamilyParams> {
    (2u32..=9, 2u32..=9, 2u32..=9)
        .prop_flat_map(|(a, b, c)| (Just((a, b, c)), 1..b, 1..b))
        .prop_filter_map("invalid tuple", |((a, b, c), alpha, beta)| {
            FamilyParams::new(a, b, c, alpha, beta, b.checked_sub(alpha)?).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hilbert_function_is_independent_of_basis_order(p in params()) {
        let f = dual_generator(&p);
        let fwd = AlgebraView::new(f.clone(), BasisOrder::Grlex).unwrap();
        let rev = AlgebraView::new(f, BasisOrder::ReverseGrlex).unwrap();
        prop_assert_eq!(fwd.hilbert_vector(), hilbert_vector(&p));
        prop_assert_eq!(rev.hilbert_vector(), hilbert_vector(&p));
    }

    #[test]
    fn swapping_x_and_z_preserves_everything(p in params(), seed in any::<u64>()) {
        let q = p.swap_xz();
        prop_assert_eq!(hilbert_vector(&p), hilbert_vector(&q));
        let opts = WlpOptions { method: Method::Both, linear_form: None, seed };
        let vp = algebra_from_dual(&dual_generator(&p)).unwrap();
        let vq = algebra_from_dual(&dual_generator(&q)).unwrap();
        let rp = wlp_check(&vp, Some(p), &opts).unwrap();
        let rq = wlp_check(&vq, Some(q), &opts).unwrap();
        prop_assert_eq!(rp.verdict, rq.verdict);
        prop_assert_eq!(rp.oracles_agree, Some(true));
    }

    #[test]
    fn a_lefschetz_form_certifies_the_verdict(p in params(), c in prop::array::uniform3(-4i64..=4)) {
        let view = algebra_from_dual(&dual_generator(&p)).unwrap();
        let l = LinearForm::from_ints(&c);
        let (rank, full) = linear_form_rank(&view, &l).unwrap();
        prop_assert!(rank <= full);
        if rank == full {
            let r = wlp_check(&view, Some(p), &WlpOptions { method: Method::Both, linear_form: Some(l), seed: 0 }).unwrap();
            prop_assert_eq!(r.verdict, Verdict::HasWlp);
            prop_assert!(r.given_form.unwrap().lefschetz);
        }
    }

    #[test]
    fn methods_agree_on_the_verdict(p in params(), seed in any::<u64>()) {
        let view = algebra_from_dual(&dual_generator(&p)).unwrap();
        let run = |method| wlp_check(&view, Some(p), &WlpOptions { method, linear_form: None, seed }).unwrap().verdict;
        prop_assert_eq!(run(Method::Hessian), run(Method::Multmap));
    }
}

use std::collections::BTreeSet;

use klm_core::matroid::kl_defining_residual;
use klm_core::tableaux::{count_skyt_backtracking, in_skyt_rho};
use klm_core::{
    build_rho_uniform, count_overline_skyt, count_skyt, count_skyt_rho_direct, enumerate_skyt,
    involution_rotate, iota_action, kl_poly, kl_poly_rho, Filling, RhoUniformParams,
};
use proptest::prelude::*;

fn valid_params(max_n: usize) -> impl Strategy<Value = RhoUniformParams> {
    let all = RhoUniformParams::all_up_to(max_n);
    (0..all.len()).prop_map(move |k| all[k])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn closed_form_polynomial_matches_oracle(p in valid_params(8)) {
        let m = build_rho_uniform(p).unwrap();
        prop_assert_eq!(kl_poly_rho(p).unwrap(), kl_poly(&m));
        prop_assert!(kl_defining_residual(&m.simplify_loops()).unwrap().is_zero());
    }

    #[test]
    fn skew_count_is_symmetric(a in 0i64..20, i in 0i64..8, b in 0i64..20) {
        prop_assert_eq!(count_skyt(a, i, b), count_skyt(b, i, a));
    }

    #[test]
    fn rotation_round_trips_through_json(a in 2usize..5, i in 1usize..4, b in 2usize..5, pick in any::<prop::sample::Index>()) {
        let all = enumerate_skyt(a, i, b).unwrap();
        let f = &all[pick.index(all.len())];
        let g = involution_rotate(f);
        let json = serde_json::to_string(&g).unwrap();
        let back: Filling = serde_json::from_str(&json).unwrap();
        prop_assert!(Filling::new(back.shape(), back.columns().to_vec()).is_ok());
        prop_assert_eq!(&involution_rotate(&back), f);
    }
}

#[test]
fn rho_family_count_matches_subtraction() {
    for p in RhoUniformParams::all_up_to(10) {
        for i in p.coefficient_range() {
            let b = (p.d - 2 * i + 1) as i64;
            let want = count_skyt((p.m + 1) as i64, i as i64, b)
                - count_overline_skyt(i as i64, b) * p.removed();
            assert_eq!(count_skyt_rho_direct(p.m, p.d, i, p.rho).unwrap(), want, "{p} i={i}");
        }
    }
}

/// The fillings left out of the restricted family are exactly the images of
/// `{0..rho-1} x overline-SkYT(2, i, b)` under the iota action.
#[test]
fn excluded_fillings_are_iota_images() {
    for p in RhoUniformParams::all_up_to(8).into_iter().filter(|p| p.removed() > 0) {
        for i in (1..p.coefficient_range().end).filter(|&i| 2 * i < p.d) {
            let b = p.d - 2 * i + 1;
            let overline: Vec<Filling> = enumerate_skyt(2, i, b)
                .unwrap()
                .into_iter()
                .filter(|f| f.columns()[0][0] == 1)
                .collect();
            let images: BTreeSet<Filling> = (0..p.removed())
                .flat_map(|j| overline.iter().map(move |f| iota_action(j, f, p.m).unwrap()))
                .collect();
            assert_eq!(images.len(), p.removed() * overline.len(), "{p} i={i}");

            let excluded: BTreeSet<Filling> = enumerate_skyt(p.m + 1, i, b)
                .unwrap()
                .into_iter()
                .filter(|f| !in_skyt_rho(f, p.d, p.removed()))
                .collect();
            assert_eq!(excluded, images, "{p} i={i}");
        }
    }
}

#[test]
fn catalan_shapes_enumerate() {
    let cat = [2, 5, 14, 42, 132, 429];
    for (k, &c) in cat.iter().enumerate() {
        let i = k + 1;
        assert_eq!(count_skyt_backtracking(2, i, 2).unwrap(), c.into());
        assert_eq!(count_skyt(2, i as i64, 2), c.into());
    }
}

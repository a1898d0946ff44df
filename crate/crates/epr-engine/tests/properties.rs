//! Randomized invariants of the detection-statistics engine.

use proptest::prelude::*;

use epr_engine::{
    epr_average, probability_p, CutoffProfile, DetectionWeights, DetectorRegion, RepChoice,
};
use photon_rep::{EPRKernel, LightconeGrid, Packet};

fn grid() -> LightconeGrid {
    LightconeGrid::cubic([0.0, 0.0, 1.2], 0.9, 3).unwrap()
}

prop_compose! {
    fn any_kernel()(fx in -0.4f64..0.4, fz in 0.9f64..1.6, fs in 0.3f64..0.7,
                    gx in -0.4f64..0.4, gz in 0.7f64..1.5, gs in 0.3f64..0.7)
        -> EPRKernel
    {
        EPRKernel::product_antisym(
            grid(),
            Packet { center: [fx, 0.1, fz], sigma: fs },
            Packet { center: [gx, -0.1, gz], sigma: gs },
        )
    }
}

prop_compose! {
    fn any_mask(n: usize)(bits in proptest::collection::vec(any::<bool>(), n)) -> Vec<bool> {
        bits
    }
}

prop_compose! {
    fn any_rep()(flat in any::<bool>(), sigma in 0.3f64..1.2) -> RepChoice {
        let g = grid();
        if flat {
            RepChoice::Irreducible
        } else {
            RepChoice::Reducible {
                n: 2,
                o0: CutoffProfile::gaussian(g, [0.0, 0.0, 1.2], sigma).unwrap(),
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn probability_symmetric_and_bounded(ker in any_kernel(), rep in any_rep(),
                                         ma in any_mask(27), mb in any_mask(27)) {
        let g = grid();
        let a = DetectorRegion::from_mask(&g, ma).unwrap();
        let b = DetectorRegion::from_mask(&g, mb).unwrap();
        let pab = probability_p(&a, &b, &ker, &rep).unwrap();
        let pba = probability_p(&b, &a, &ker, &rep).unwrap();
        prop_assert!((pab - pba).abs() < 1e-13);
        prop_assert!((-1e-12..=2.0 + 1e-12).contains(&pab));
        if a.is_disjoint_from(&b) {
            prop_assert!(pab <= 1.0 + 1e-12);
        }
    }

    #[test]
    fn enlarging_a_region_never_decreases_p(ker in any_kernel(), rep in any_rep(),
                                            ma in any_mask(27), extra in any_mask(27),
                                            mb in any_mask(27)) {
        let g = grid();
        let a = DetectorRegion::from_mask(&g, ma.clone()).unwrap();
        let b = DetectorRegion::from_mask(&g, mb).unwrap();
        let bigger: Vec<bool> = ma.iter().zip(&extra)
            .zip(&b.mask)
            .map(|((x, y), inb)| *x || (*y && !*inb))
            .collect();
        let a2 = DetectorRegion::from_mask(&g, bigger).unwrap();
        let p1 = probability_p(&a, &b, &ker, &rep).unwrap();
        let p2 = probability_p(&a2, &b, &ker, &rep).unwrap();
        prop_assert!(p2 >= p1 - 1e-13);
    }

    #[test]
    fn average_bounded_by_p_and_angle_factor_universal(
        ker in any_kernel(), rep in any_rep(),
        ma in any_mask(27), mb in any_mask(27),
        alpha in -3.0f64..3.0, beta in -3.0f64..3.0,
    ) {
        let g = grid();
        let a = DetectorRegion::from_mask(&g, ma).unwrap();
        let b = DetectorRegion::from_mask(&g, mb).unwrap();
        let wts = DetectionWeights::build(&ker, &rep).unwrap();
        let p_eff = wts.effective_p(&a, &b).unwrap();
        let e = epr_average(alpha, beta, &a, &b, &ker, &rep).unwrap();
        prop_assert!(e.abs() <= p_eff.abs() + 1e-12);
        // E(α,β) = E(0,0)·cos 2(α−β) regardless of the representation
        let e00 = epr_average(0.0, 0.0, &a, &b, &ker, &rep).unwrap();
        prop_assert!((e - e00 * (2.0 * (alpha - beta)).cos()).abs() < 1e-12);
    }
}

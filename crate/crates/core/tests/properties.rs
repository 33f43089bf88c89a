use intertwine::arithmetic::{gamma_ratio, gamma_ratio_numeric, rat, rising_factorial, to_f64};
use intertwine::blocks::{d2rk_block, interface_entries, t1_value};
use intertwine::spectra::{m1_eigenvalue, m1_transition, m2_det, spectral_point, BundleParams, Direction, SpectralPoint};
use intertwine::{ExtendedScalar, Radical, RadicalValue, Rational};
use proptest::prelude::*;

fn half_integer() -> impl Strategy<Value = Rational> {
    (-40i64..40).prop_map(|n| rat(2 * n + 1, 4))
}

fn finite(v: &ExtendedScalar) -> Option<&Rational> {
    v.exact()
}

proptest! {
    #[test]
    fn gamma_ratio_inverse_in_r(x in half_integer(), r in 0i64..6) {
        let up = gamma_ratio(&x, r).unwrap();
        let down = gamma_ratio(&x, -r).unwrap();
        if let (Some(a), Some(b)) = (finite(&up), finite(&down)) {
            prop_assert_eq!(a * b, rat(1, 1));
        }
    }

    #[test]
    fn gamma_ratio_functional_equation(x in half_integer(), r in -4i64..5) {
        let here = gamma_ratio(&x, r).unwrap();
        let next = gamma_ratio(&(&x + rat(2, 1)), r).unwrap();
        let factor = ExtendedScalar::quotient(&x + rat(r, 1), &x - rat(r, 1)).unwrap();
        prop_assert_eq!(here.mul(&factor).unwrap(), next);
    }

    #[test]
    fn exact_and_float_gamma_agree(n in -60i64..60, d in 1i64..8, r in -3i64..4) {
        let x = rat(8 * n + 1, 2 * d + 1);
        let float = gamma_ratio_numeric(to_f64(&x), r as f64);
        match gamma_ratio(&x, r) {
            Ok(ExtendedScalar::Pole) => prop_assert_eq!(float.unwrap(), ExtendedScalar::Pole),
            Ok(exact) => {
                let e = to_f64(finite(&exact).unwrap());
                let f = float.unwrap().to_f64();
                prop_assert!(e == f || ((e - f) / e).abs() < 1e-10, "{} vs {}", e, f);
            }
            Err(_) => prop_assert!(float.is_err()),
        }
    }

    #[test]
    fn rising_factorial_splits(z in half_integer(), m in 0u32..5, n in 0u32..5) {
        let lhs = rising_factorial(&z, m + n);
        let rhs = rising_factorial(&z, m) * rising_factorial(&(&z + rat(m as i64, 1)), n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn radical_quotient_inverts_product(c in -9i64..10, x in 1i64..20, d in 1i64..10, y in -20i64..20) {
        prop_assume!(c != 0 && y != 0);
        let a = Radical::new(rat(c, 3), rat(x, 1));
        let b = Radical::new(rat(d, 5), rat(y, 7));
        prop_assert_eq!(a.mul(&b).div(&b).unwrap(), a);
    }

    #[test]
    fn m1_diamond_closes(jp in 0i64..12, j in 0i64..12, p in 2i64..8, q in 2i64..8, r in -4i64..5) {
        let pt = spectral_point(&BundleParams::new(p, q, 0, 0).unwrap(), jp, j).unwrap();
        let t = |pt: &SpectralPoint, d: Direction| m1_transition(pt, r, d).ok().and_then(|v| v.exact().cloned());
        let (u, v) = (Direction::UP_RIGHT, Direction::UP_LEFT);
        let left = t(&pt, u).zip(t(&pt.shifted(u), v)).map(|(a, b)| a * b);
        let right = t(&pt, v).zip(t(&pt.shifted(v), u)).map(|(a, b)| a * b);
        if let (Some(l), Some(rt)) = (left, right) {
            prop_assert_eq!(l, rt);
        }
    }

    #[test]
    fn m1_eigenvalue_steps_by_transition(jp in 0i64..10, j in 0i64..10, r in 0i64..5) {
        let pt = spectral_point(&BundleParams::new(5, 4, 0, 0).unwrap(), jp, j).unwrap();
        let d = Direction::UP_RIGHT;
        if let (Ok(a), Ok(b), Ok(t)) = (m1_eigenvalue(&pt, r), m1_eigenvalue(&pt.shifted(d), r), m1_transition(&pt, r, d)) {
            if let (Some(a), Some(b), Some(t)) = (a.exact(), b.exact(), t.exact()) {
                prop_assert_eq!(a * t, b.clone());
            }
        }
    }

    #[test]
    fn block_det_matches_gamma_formula(jp in 1i64..9, j in 1i64..9, r in 1i64..5, k in 1i64..4) {
        let params = BundleParams::new(6, 6, k, 1).unwrap();
        let pt = spectral_point(&params, jp, j).unwrap();
        if let Ok(RadicalValue::Finite(t1)) = t1_value(&params, &pt, r) {
            if let (Ok(block), Ok(g)) = (interface_entries(&params, &pt, r, &t1), m2_det(&pt, r)) {
                if let Some(g) = g.exact() {
                    prop_assert_eq!(&block.det(), g);
                    let d = d2rk_block(&params, &pt, r as u32).unwrap().det();
                    let s = params.s();
                    let c = num_traits::pow(rat(16, 1), r as usize) * (&s * &s - rat(r * r, 1));
                    prop_assert_eq!(d, c * g);
                }
            }
        }
    }
}

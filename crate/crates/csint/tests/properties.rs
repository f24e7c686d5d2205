//! Randomized property tests for the spec-level invariants.

use num_complex::Complex64;
use proptest::prelude::*;

use csint::coherent::{CoherentStateFamily, CsLabel, CsKind};
use csint::hypergeom::{pfq, structural_constant, ParameterSet};
use csint::special::{gamma, ln_gamma, pochhammer};
use csint::value::EvalOptions;
use csint::weight::WeightEvaluator;

fn opts() -> EvalOptions {
    EvalOptions {
        tol: 1e-14,
        max_terms: 10_000,
    }
}

proptest! {
    #[test]
    fn pochhammer_recurrence(x in -20.0..20.0f64, n in 0u32..40) {
        // (x)_{n+1} = (x)_n (x + n), exactly
        let lhs = pochhammer(x, n + 1);
        let rhs = pochhammer(x, n) * (x + n as f64);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gamma_functional_equation(x in 0.1..50.0f64) {
        let lhs = ln_gamma(x + 1.0).unwrap().exp();
        let rhs = x * ln_gamma(x).unwrap().exp();
        prop_assert!(((lhs - rhs) / rhs).abs() < 1e-12);
    }

    #[test]
    fn gamma_reflection(x in 0.01..0.99f64) {
        // Γ(x)Γ(1-x) = π / sin(πx)
        let lhs = gamma(x).unwrap() * gamma(1.0 - x).unwrap();
        let rhs = std::f64::consts::PI / (std::f64::consts::PI * x).sin();
        prop_assert!(((lhs - rhs) / rhs).abs() < 1e-11);
    }

    #[test]
    fn terminating_series_is_the_explicit_sum(
        m in 0u32..12,
        upper in -3.0..3.0f64,
        lower in 0.3..4.0f64,
        z in -2.0..2.0f64,
    ) {
        // a terminating pFq equals the freshly-computed m+1-term sum
        let params = ParameterSet::new([-(m as f64), upper], [lower]);
        let got = pfq(&params, Complex64::new(z, 0.0), opts()).unwrap();
        prop_assert!(got.terminated);

        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 0..=m {
            if k > 0 {
                let kf = (k - 1) as f64;
                term *= (-(m as f64) + kf) * (upper + kf) * z / ((lower + kf) * (kf + 1.0));
            }
            sum += term;
        }
        prop_assert_eq!(got.value.re, sum);
    }

    #[test]
    fn structural_duality(
        a in 0.5..4.0f64,
        b in 0.5..4.0f64,
        n in 0u32..15,
    ) {
        // ρ_{p,q}(b/a|n) ρ_{q,p}(a/b|n) = (n!)^2
        let params = ParameterSet::new([a], [b]);
        let mut fact = 1.0;
        for k in 1..=n {
            fact *= k as f64;
        }
        let lhs = structural_constant(&params, n).unwrap()
            * structural_constant(&params.swap(), n).unwrap();
        prop_assert!(((lhs - fact * fact) / (fact * fact)).abs() < 1e-11);
    }

    #[test]
    fn overlap_kernel_properties(
        re1 in -0.9..0.9f64, im1 in -0.9..0.9f64,
        re2 in -0.9..0.9f64, im2 in -0.9..0.9f64,
    ) {
        let fam = CoherentStateFamily::new(CsKind::Bg, ParameterSet::new([], [2.0])).unwrap();
        let z1 = CsLabel::z(re1, im1);
        let z2 = CsLabel::z(re2, im2);
        let o11 = fam.overlap(&z1, &z1).unwrap();
        prop_assert!((o11.re - 1.0).abs() < 1e-12 && o11.im.abs() < 1e-13);
        let o12 = fam.overlap(&z1, &z2).unwrap();
        let o21 = fam.overlap(&z2, &z1).unwrap();
        prop_assert!((o12 - o21.conj()).norm() < 1e-12);
        prop_assert!(o12.norm() <= 1.0 + 1e-10);
    }

    #[test]
    fn weight_nonnegative_on_support(
        which in 0usize..4,
        t in 0.001..0.999f64,
    ) {
        let presets = [
            ParameterSet::new([], []),
            ParameterSet::new([2.5], []),
            ParameterSet::new([], [1.75]),
            ParameterSet::new([2.0], [1.0]),
        ];
        let ev = WeightEvaluator::new(&presets[which]).unwrap();
        let upper = ev.form.support_upper.min(50.0);
        let x = t * upper;
        if x > 0.0 && x < ev.form.support_upper {
            let w = ev.eval(x).unwrap();
            prop_assert!(w >= -1e-12, "W({x}) = {w:e} for {:?}", presets[which]);
        }
    }

    #[test]
    fn radius_rule_matches_ratio_limit(
        a in 0.5..3.0f64,
        b in 0.5..3.0f64,
        shape in 0usize..3,
    ) {
        let params = match shape {
            0 => ParameterSet::new([a], [b]),      // p <= q + ... entire
            1 => ParameterSet::new([a, b], [a]),   // p = q + 1
            _ => ParameterSet::new([a, b], []),    // p > q + 1
        };
        let r = params.radius_of_convergence();
        let ratio = params.rho_ratio(1000);
        match shape {
            0 => prop_assert!(r.is_infinite() && ratio > 100.0),
            1 => prop_assert!(r == 1.0 && (ratio - 1.0).abs() < 0.01),
            _ => prop_assert!(r == 0.0 && ratio < 0.01),
        }
    }
}

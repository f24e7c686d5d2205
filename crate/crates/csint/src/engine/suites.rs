//! Curated instance lists: the built-in verification suites.

use crate::engine::instance::{IdentityFamily, IdentityInstance, Scalars};
use crate::error::{Error, Result};
use crate::hypergeom::ParameterSet;

pub const SUITE_NAMES: &[&str] = &[
    "fundamental",
    "angular",
    "complex",
    "real",
    "gxf",
    "representations",
    "gr-crosschecks",
    "all",
];

fn inst(
    family: IdentityFamily,
    params: ParameterSet,
    label: String,
    fill: impl FnOnce(&mut IdentityInstance),
) -> IdentityInstance {
    let mut i = IdentityInstance::new(family, params).with_label(label);
    fill(&mut i);
    debug_assert!(i.validate().is_ok(), "suite instance invalid: {}", i.label);
    i
}

fn fundamental_grid() -> Vec<(String, ParameterSet)> {
    vec![
        ("p0q0".into(), ParameterSet::new([], [])),
        ("p1q0-a2".into(), ParameterSet::new([2.0], [])),
        ("p0q1-b2".into(), ParameterSet::new([], [2.0])),
        ("p1q1-a2-b1".into(), ParameterSet::new([2.0], [1.0])),
    ]
}

fn fundamental() -> Vec<IdentityInstance> {
    let mut out = Vec::new();
    for (name, params) in fundamental_grid() {
        for n in 0..=5u32 {
            out.push(inst(
                IdentityFamily::FundA,
                params.clone(),
                format!("fund_a/{name}/n{n}"),
                |i| i.moment_index = Some(n),
            ));
        }
    }
    // the dual instances: every Fund_A set implies its swapped Fund_B set
    for (name, params) in fundamental_grid() {
        for n in 0..=5u32 {
            out.push(inst(
                IdentityFamily::FundB,
                params.swap(),
                format!("fund_b/swap-{name}/n{n}"),
                |i| i.moment_index = Some(n),
            ));
        }
    }
    out
}

fn angular() -> Vec<IdentityInstance> {
    let mut out = Vec::new();
    for &ab in &[0.25f64, 1.0] {
        for &r in &[0.3, 0.7] {
            out.push(inst(
                IdentityFamily::AngularB,
                ParameterSet::new([], []),
                format!("angular_b/ab{ab}/r{r}"),
                |i| {
                    i.scalars = Scalars {
                        a: Some(ab.sqrt()),
                        b: Some(ab.sqrt()),
                        z_abs: Some(r),
                        ..Default::default()
                    };
                },
            ));
        }
    }
    // 0F0 factors reduce the general angular integral to the exponential one
    out.push(inst(
        IdentityFamily::AngularA,
        ParameterSet::new([], []),
        "angular_a/p0q0/exp-reduction".into(),
        |i| {
            i.scalars = Scalars {
                a: Some(1.0),
                b: Some(0.8),
                z_abs: Some(0.5),
                ..Default::default()
            };
        },
    ));
    for &r in &[0.3, 0.7] {
        out.push(inst(
            IdentityFamily::AngularA,
            ParameterSet::new([], [2.0]),
            format!("angular_a/p0q1-b2/r{r}"),
            |i| {
                i.scalars = Scalars {
                    a: Some(0.5),
                    b: Some(0.5),
                    z_abs: Some(r),
                    ..Default::default()
                };
            },
        ));
    }
    out.push(inst(
        IdentityFamily::AngularA,
        ParameterSet::new([2.0], []),
        "angular_a/p1q0-a2/compact".into(),
        |i| {
            i.scalars = Scalars {
                a: Some(0.4),
                b: Some(0.4),
                z_abs: Some(0.5),
                ..Default::default()
            };
        },
    ));
    out
}

fn complex() -> Vec<IdentityInstance> {
    let mut out = Vec::new();
    // the Gaussian identity: exp factors against the e^{-|z|^2} measure
    out.push(inst(
        IdentityFamily::ComplexB,
        ParameterSet::new([], []),
        "complex_b/gaussian/a1-bneg1".into(),
        |i| {
            i.scalars = Scalars {
                a: Some(1.0),
                b: Some(-1.0),
                ..Default::default()
            };
        },
    ));
    out.push(inst(
        IdentityFamily::ComplexA,
        ParameterSet::new([2.0], []),
        "complex_a/p1q0-a2/ab0.25".into(),
        |i| {
            i.scalars = Scalars {
                a: Some(0.5),
                b: Some(0.5),
                ..Default::default()
            };
        },
    ));
    out.push(inst(
        IdentityFamily::ComplexA,
        ParameterSet::new([], [2.0]),
        "complex_a/p0q1-b2/ab0.42".into(),
        |i| {
            i.scalars = Scalars {
                a: Some(0.7),
                b: Some(0.6),
                ..Default::default()
            };
        },
    ));
    out.push(inst(
        IdentityFamily::ComplexB,
        ParameterSet::new([], [2.0]),
        "complex_b/p0q1-b2/ab0.4".into(),
        |i| {
            i.scalars = Scalars {
                a: Some(0.8),
                b: Some(0.5),
                ..Default::default()
            };
        },
    ));
    out.push(inst(
        IdentityFamily::ComplexB,
        ParameterSet::new([2.0], [1.0]),
        "complex_b/p1q1-a2-b1/ab0.25".into(),
        |i| {
            i.scalars = Scalars {
                a: Some(0.5),
                b: Some(0.5),
                ..Default::default()
            };
        },
    ));
    // A = 0 degenerates the inner factor to 1: the zeroth moment
    out.push(inst(
        IdentityFamily::ComplexA,
        ParameterSet::new([], [2.0]),
        "complex_a/p0q1-b2/a0-edge".into(),
        |i| {
            i.scalars = Scalars {
                a: Some(0.0),
                b: Some(1.0),
                ..Default::default()
            };
        },
    ));
    out
}

fn real() -> Vec<IdentityInstance> {
    let mut out = Vec::new();
    let f = |v: f64| Scalars {
        f_value: Some(v),
        ..Default::default()
    };
    out.push(inst(
        IdentityFamily::RealA,
        ParameterSet::new([], []),
        "real_a/p0q0/f0.25".into(),
        |i| i.scalars = f(0.25),
    ));
    out.push(inst(
        IdentityFamily::RealA,
        ParameterSet::new([], [1.5]),
        "real_a/p0q1-b1.5/sin-flavor".into(),
        |i| i.scalars = f(-0.25),
    ));
    out.push(inst(
        IdentityFamily::RealA,
        ParameterSet::new([2.0], []),
        "real_a/p1q0-a2/f0.25".into(),
        |i| i.scalars = f(0.25),
    ));
    out.push(inst(
        IdentityFamily::RealB,
        ParameterSet::new([2.0], [1.0]),
        "real_b/p1q1-a2-b1/f0.25".into(),
        |i| i.scalars = f(0.25),
    ));
    out.push(inst(
        IdentityFamily::RealB,
        ParameterSet::new([2.0], []),
        "real_b/p1q0-a2/k-bessel".into(),
        |i| i.scalars = f(0.25),
    ));
    out.push(inst(
        IdentityFamily::RealB,
        ParameterSet::new([], [2.0]),
        "real_b/p0q1-b2/f0.3".into(),
        |i| i.scalars = f(0.3),
    ));
    out
}

fn gxf() -> Vec<IdentityInstance> {
    let mut out = Vec::new();
    // terminating inner factor: the Laguerre orthogonality zero
    out.push(inst(
        IdentityFamily::GxfA,
        ParameterSet::new([], []),
        "gxf_a/exp-weight/laguerre2-zero".into(),
        |i| {
            i.inner_params = Some(ParameterSet::new([-2.0], [1.0]));
            i.scalars.a = Some(1.0);
        },
    ));
    out.push(inst(
        IdentityFamily::GxfA,
        ParameterSet::new([], [2.0]),
        "gxf_a/p0q1-b2/bessel-inner".into(),
        |i| {
            i.inner_params = Some(ParameterSet::new([], [1.5]));
            i.scalars.a = Some(-0.3);
        },
    ));
    out.push(inst(
        IdentityFamily::GxfB,
        ParameterSet::new([], [2.0]),
        "gxf_b/p0q1-b2/inner-1f1".into(),
        |i| {
            i.inner_params = Some(ParameterSet::new([1.0], [3.0]));
            i.scalars.a = Some(0.4);
        },
    ));
    for &c in &[0.5, 2.0] {
        out.push(inst(
            IdentityFamily::GxfC,
            ParameterSet::new([], []),
            format!("gxf_c/p0q0/c{c}"),
            |i| {
                i.scalars.a = Some(0.4);
                i.scalars.scale = Some(c);
            },
        ));
        out.push(inst(
            IdentityFamily::GxfC,
            ParameterSet::new([], [2.0]),
            format!("gxf_c/p0q1-b2/c{c}"),
            |i| {
                i.scalars.a = Some(0.4);
                i.scalars.scale = Some(c);
            },
        ));
    }
    out.push(inst(
        IdentityFamily::PowerSeriesWeight,
        ParameterSet::new([], [2.0]),
        "power_series/p0q1-b2/x0.6".into(),
        |i| {
            i.inner_params = Some(ParameterSet::new([], [1.5]));
            i.scalars.x = Some(0.6);
        },
    ));
    // the binomial-weight errata family
    for &m in &[2u32, 3] {
        out.push(inst(
            IdentityFamily::BinomialWeight,
            ParameterSet::new([], [2.0]),
            format!("binomial/p0q1-b2/m{m}"),
            |i| {
                i.scalars.m = Some(m);
                i.scalars.x = Some(0.4);
            },
        ));
    }
    out.push(inst(
        IdentityFamily::BinomialWeight,
        ParameterSet::new([1.0], [2.0]),
        "binomial/exp-weight-b2/m2".into(),
        |i| {
            i.scalars.m = Some(2);
            i.scalars.x = Some(0.4);
        },
    ));
    for &m in &[2u32, 3] {
        out.push(inst(
            IdentityFamily::BinomialWeight,
            ParameterSet::new([1.0], [1.0]),
            format!("binomial/exp-weight-b1/m{m}"),
            |i| {
                i.scalars.m = Some(m);
                i.scalars.x = Some(0.4);
            },
        ));
    }
    out
}

fn representations() -> Vec<IdentityInstance> {
    let mut out = Vec::new();
    let f = |v: f64| Scalars {
        f_value: Some(v),
        ..Default::default()
    };
    // trigonometric pair at x = 1
    out.push(inst(
        IdentityFamily::RealA,
        ParameterSet::new([], [1.5]),
        "rep/sin/x1".into(),
        |i| i.scalars = f(-0.25),
    ));
    out.push(inst(
        IdentityFamily::RealA,
        ParameterSet::new([], [0.5]),
        "rep/cos/x1".into(),
        |i| i.scalars = f(-0.25),
    ));
    // Laguerre forms
    for &(n, lambda) in &[(2u32, 0.0), (4, 1.5)] {
        out.push(inst(
            IdentityFamily::RealB,
            ParameterSet::new([-(n as f64)], [lambda + 1.0]),
            format!("rep/laguerre/n{n}-lam{lambda}"),
            |i| i.scalars = f(0.8),
        ));
    }
    out.push(inst(
        IdentityFamily::RealB,
        ParameterSet::new([4.0], [1.0]),
        "rep/laguerre-neg-arg/n3".into(),
        |i| i.scalars = f(0.8),
    ));
    out.push(inst(
        IdentityFamily::RealB,
        ParameterSet::new([-3.0, 2.5], []),
        "rep/laguerre-neg-param/n3".into(),
        |i| i.scalars = f(-1.0 / 1.3),
    ));
    // Hermite
    for &n in &[3u32, 4] {
        out.push(inst(
            IdentityFamily::RealB,
            ParameterSet::new([-(n as f64) / 2.0, (1.0 - n as f64) / 2.0], []),
            format!("rep/hermite/n{n}"),
            |i| i.scalars = f(-1.0 / (1.4 * 1.4)),
        ));
    }
    // Bessel K half-integer
    out.push(inst(
        IdentityFamily::RealB,
        ParameterSet::new([-2.0, 3.0], []),
        "rep/bessel-k/n2".into(),
        |i| i.scalars = f(-0.5),
    ));
    // Legendre forms at x = 0.3
    let n = 3f64;
    out.push(inst(
        IdentityFamily::RealB,
        ParameterSet::new([-n, -n], [-2.0 * n]),
        "rep/legendre-half-int/n3".into(),
        |i| i.scalars = f(2.0 / 0.7),
    ));
    out.push(inst(
        IdentityFamily::RealB,
        ParameterSet::new([-n, n + 1.0], [1.0]),
        "rep/legendre/n3".into(),
        |i| i.scalars = f(0.35),
    ));
    out.push(inst(
        IdentityFamily::RealB,
        ParameterSet::new([-n, -n], [1.0]),
        "rep/legendre-ratio/n3".into(),
        |i| i.scalars = f(-0.7 / 1.3),
    ));
    // Chebyshev
    out.push(inst(
        IdentityFamily::RealB,
        ParameterSet::new([-n, n], [0.5]),
        "rep/chebyshev-t/n3".into(),
        |i| i.scalars = f(0.65),
    ));
    out.push(inst(
        IdentityFamily::RealB,
        ParameterSet::new([-n, n + 2.0], [1.5]),
        "rep/chebyshev-u/n3".into(),
        |i| i.scalars = f(0.65),
    ));
    // Bessel J/I confluent form, the real (modified) branch
    for &nu in &[0.0, 1.0] {
        out.push(inst(
            IdentityFamily::RealB,
            ParameterSet::new([nu + 0.5], [2.0 * nu + 1.0]),
            format!("rep/bessel-i/nu{nu}"),
            |i| i.scalars = f(2.0),
        ));
    }
    out
}

fn gr_crosschecks() -> Vec<IdentityInstance> {
    let mut out = Vec::new();
    let f = |v: f64| Scalars {
        f_value: Some(v),
        ..Default::default()
    };
    // the K-Bessel x I_0 pattern in its convergent regime (the printed
    // half-integer instance diverges for every n; see the module notes)
    for &a in &[2.0, 3.0] {
        out.push(inst(
            IdentityFamily::RealB,
            ParameterSet::new([a], []),
            format!("gr/6.576.5/a{a}"),
            |i| i.scalars = f(0.25),
        ));
    }
    // the regularized Legendre anchor behind the printed K-integral
    for &n in &[1f64, 2.0] {
        out.push(inst(
            IdentityFamily::RealB,
            ParameterSet::new([-n, n + 1.0], [1.0]),
            format!("gr/6.576.5-regularized/n{n}"),
            |i| i.scalars = f(0.35),
        ));
    }
    // Laplace-transform family: three parameter sets
    out.push(inst(
        IdentityFamily::GxfA,
        ParameterSet::new([1.0], [1.0]),
        "gr/laplace/s1-laguerre2".into(),
        |i| {
            i.inner_params = Some(ParameterSet::new([-2.0], [1.0]));
            i.scalars.a = Some(1.0);
        },
    ));
    out.push(inst(
        IdentityFamily::GxfA,
        ParameterSet::new([1.0], [2.0]),
        "gr/laplace/s2-1f1".into(),
        |i| {
            i.inner_params = Some(ParameterSet::new([1.0], [3.0]));
            i.scalars.a = Some(0.4);
        },
    ));
    out.push(inst(
        IdentityFamily::GxfA,
        ParameterSet::new([1.0], [2.5]),
        "gr/laplace/s2.5-0f1".into(),
        |i| {
            i.inner_params = Some(ParameterSet::new([], [1.5]));
            i.scalars.a = Some(-0.3);
        },
    ));
    // generalized-Laguerre weighted integrals, b in {0,1}, lambda in {0,1}
    for &b in &[0u32, 1] {
        for &lam in &[0u32, 1] {
            for n in 0..=3u32 {
                out.push(inst(
                    IdentityFamily::GxfA,
                    ParameterSet::new([1.0], [b as f64 + 1.0]),
                    format!("gr/7.414.7/b{b}-lam{lam}-n{n}"),
                    |i| {
                        i.inner_params =
                            Some(ParameterSet::new([-(n as f64)], [lam as f64 + 1.0]));
                        i.scalars.a = Some(1.0);
                    },
                ));
            }
        }
    }
    // the confluent Bessel form (modified branch, quadrature-verifiable)
    for &nu in &[0.0, 0.5, 1.0] {
        for &x in &[0.5, 1.0] {
            out.push(inst(
                IdentityFamily::RealB,
                ParameterSet::new([nu + 0.5], [2.0 * nu + 1.0]),
                format!("gr/8.335.1/nu{nu}-x{x}"),
                |i| i.scalars = f(2.0 * x),
            ));
        }
    }
    out
}

/// The curated suites by name.
pub fn builtin_suite(name: &str) -> Result<Vec<IdentityInstance>> {
    match name {
        "fundamental" => Ok(fundamental()),
        "angular" => Ok(angular()),
        "complex" => Ok(complex()),
        "real" => Ok(real()),
        "gxf" => Ok(gxf()),
        "representations" => Ok(representations()),
        "gr-crosschecks" => Ok(gr_crosschecks()),
        "all" => {
            let mut out = fundamental();
            out.extend(angular());
            out.extend(complex());
            out.extend(real());
            out.extend(gxf());
            out.extend(representations());
            out.extend(gr_crosschecks());
            Ok(out)
        }
        other => Err(Error::UnknownSuite { name: other.into() }),
    }
}

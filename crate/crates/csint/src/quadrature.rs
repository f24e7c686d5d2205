//! Adaptive Gauss-Kronrod quadrature and the small helpers the identity
//! engine builds on: chunked semi-infinite integration and the uniform
//! trapezoid mean for periodic integrands.

use num_complex::Complex64;

use crate::error::{Error, Result};

// 15-point Kronrod extension of 7-point Gauss, positive abscissae.
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
    pub converged: bool,
}

fn kronrod15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let mut fv = [0.0f64; 15];
    let fc = f(center);
    fv[14] = fc;
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    let mut resabs = WGK[7] * fc.abs();

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    // resasc measures the variation of f around its mean; it is what the
    // QUADPACK error sharpening is calibrated against
    let mean = kronrod * 0.5;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        resasc += WGK[j] * ((fv[2 * j] - mean).abs() + (fv[2 * j + 1] - mean).abs());
    }

    let value = kronrod * half;
    let raw = ((kronrod - gauss) * half).abs();
    let resasc = resasc * half.abs();
    let resabs = resabs * half.abs();
    let mut err = raw;
    if resasc != 0.0 && raw != 0.0 {
        err = resasc * ((200.0 * raw / resasc).powf(1.5)).min(1.0);
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    (value, err)
}

/// Adaptive integration of `f` over the finite interval [a, b].
///
/// Subdivides the interval with the largest local error estimate until the
/// total estimate drops below `tol * max(1, |value|)` or the interval budget
/// runs out (the result is then flagged not converged rather than erroring).
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> QuadResult {
    const MAX_INTERVALS: usize = 4096;

    if a == b {
        return QuadResult {
            value: 0.0,
            abs_error: 0.0,
            evaluations: 0,
            converged: true,
        };
    }

    struct Seg {
        a: f64,
        b: f64,
        value: f64,
        err: f64,
    }

    let (v, e) = kronrod15(&f, a, b);
    let mut segs = vec![Seg {
        a,
        b,
        value: v,
        err: e,
    }];
    let mut evals = 15usize;

    loop {
        let total: f64 = segs.iter().map(|s| s.value).sum();
        let err: f64 = segs.iter().map(|s| s.err).sum();
        let target = tol * total.abs().max(1.0);
        if err <= target {
            return QuadResult {
                value: total,
                abs_error: err,
                evaluations: evals,
                converged: true,
            };
        }
        if segs.len() >= MAX_INTERVALS {
            return QuadResult {
                value: total,
                abs_error: err,
                evaluations: evals,
                converged: false,
            };
        }
        // split the worst segment
        let (idx, _) = segs
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.err.partial_cmp(&y.1.err).unwrap())
            .unwrap();
        let Seg { a: sa, b: sb, .. } = segs.swap_remove(idx);
        let mid = 0.5 * (sa + sb);
        if mid <= sa || mid >= sb {
            // interval at rounding resolution; give up splitting it further
            let (v, _) = kronrod15(&f, sa, sb);
            segs.push(Seg {
                a: sa,
                b: sb,
                value: v,
                err: 0.0,
            });
            continue;
        }
        let (v1, e1) = kronrod15(&f, sa, mid);
        let (v2, e2) = kronrod15(&f, mid, sb);
        evals += 30;
        segs.push(Seg {
            a: sa,
            b: mid,
            value: v1,
            err: e1,
        });
        segs.push(Seg {
            a: mid,
            b: sb,
            value: v2,
            err: e2,
        });
    }
}

/// Integration of a decaying integrand over [0, inf).
///
/// The caller is expected to have substituted away any slower-than-exponential
/// decay, so doubling the truncation point must eventually change nothing.
/// Chunks [T, 2T] are appended until two consecutive chunks are negligible
/// against the running total; failing that within the doubling budget is a
/// `NotConverged` error.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, tol: f64, first_span: f64) -> Result<QuadResult> {
    const MAX_DOUBLINGS: usize = 48;

    let mut t = first_span.max(1.0);
    let head = integrate(&f, 0.0, t, tol * 0.5);
    let mut value = head.value;
    let mut abs_error = head.abs_error;
    let mut evals = head.evaluations;
    let mut converged = head.converged;
    let mut quiet_chunks = 0;

    for _ in 0..MAX_DOUBLINGS {
        let chunk = integrate(&f, t, 2.0 * t, tol * 0.5);
        value += chunk.value;
        abs_error += chunk.abs_error;
        evals += chunk.evaluations;
        converged &= chunk.converged;
        t *= 2.0;
        if chunk.value.abs() <= 0.25 * tol * value.abs().max(1e-300) {
            quiet_chunks += 1;
            if quiet_chunks >= 2 {
                return Ok(QuadResult {
                    value,
                    abs_error,
                    evaluations: evals,
                    converged,
                });
            }
        } else {
            quiet_chunks = 0;
        }
    }
    Err(Error::NotConverged {
        terms_used: evals,
        error_estimate: abs_error,
    })
}

/// Mean of a 2π-periodic function over one period: uniform trapezoid rule,
/// spectrally accurate for smooth periodic integrands.
pub fn periodic_mean<F: FnMut(f64) -> Complex64>(mut f: F, nodes: usize) -> Complex64 {
    let n = nodes.max(4);
    let step = 2.0 * std::f64::consts::PI / n as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for k in 0..n {
        acc += f(k as f64 * step);
    }
    acc / n as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        // degree-13 polynomial is inside the Kronrod exactness degree
        let r = integrate(|x| x.powi(13) - 3.0 * x.powi(5) + 1.0, -1.0, 2.0, 1e-12);
        // ∫ x^13 = (2^14 - 1)/14, ∫ 3x^5 = 3(2^6-1)/6, ∫ 1 = 3
        let exact = (16384.0 - 1.0) / 14.0 - 3.0 * 63.0 / 6.0 + 3.0;
        assert!((r.value - exact).abs() < 1e-10);
        assert!(r.converged);
    }

    #[test]
    fn oscillatory_integrand() {
        let r = integrate(|x| (10.0 * x).sin(), 0.0, 1.0, 1e-12);
        let exact = (1.0 - (10.0f64).cos()) / 10.0;
        assert!((r.value - exact).abs() < 1e-11);
    }

    #[test]
    fn integrable_singularity() {
        let r = integrate(|x| x.abs().sqrt().recip().min(1e8), 0.0, 1.0, 1e-10);
        assert!((r.value - 2.0).abs() < 1e-7, "got {}", r.value);
    }

    #[test]
    fn semi_infinite_exponential() {
        // ∫_0^∞ x^3 e^{-x} dx = 6
        let r = integrate_semi_infinite(|x| x.powi(3) * (-x).exp(), 1e-12, 16.0).unwrap();
        assert!((r.value - 6.0).abs() < 1e-10);
    }

    #[test]
    fn semi_infinite_gaussian() {
        let r = integrate_semi_infinite(|x| (-x * x).exp(), 1e-12, 8.0).unwrap();
        let exact = 0.5 * std::f64::consts::PI.sqrt();
        assert!((r.value - exact).abs() < 1e-12);
    }

    #[test]
    fn periodic_mean_of_cos_squared() {
        let v = periodic_mean(|phi| Complex64::new(phi.cos() * phi.cos(), 0.0), 64);
        assert!((v.re - 0.5).abs() < 1e-14);
        assert!(v.im.abs() < 1e-15);
    }
}

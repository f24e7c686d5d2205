//! Classical orthogonal polynomials by three-term recurrence.
//!
//! These are the independent oracles for the integral representations, so
//! they deliberately share no code with the hypergeometric series path.

use crate::error::{Error, Result};

/// The polynomial families used by the integral representations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PolyFamily {
    /// Generalized Laguerre L_n^lambda. For orthogonality-based tests the
    /// order parameter must satisfy lambda > -1; evaluation itself is fine
    /// for any finite lambda.
    Laguerre { lambda: f64 },
    Hermite,
    Legendre,
    ChebyshevT,
    ChebyshevU,
}

impl std::str::FromStr for PolyFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "laguerre" => Ok(PolyFamily::Laguerre { lambda: 0.0 }),
            "hermite" => Ok(PolyFamily::Hermite),
            "legendre" => Ok(PolyFamily::Legendre),
            "chebyshev-t" | "chebyshevt" => Ok(PolyFamily::ChebyshevT),
            "chebyshev-u" | "chebyshevu" => Ok(PolyFamily::ChebyshevU),
            other => Err(Error::InvalidArgument {
                detail: format!("unknown polynomial family `{other}`"),
            }),
        }
    }
}

/// Evaluate the degree-n polynomial of the given family at x.
pub fn classical_poly(family: PolyFamily, n: u32, x: f64) -> f64 {
    match family {
        PolyFamily::Laguerre { lambda } => laguerre(lambda, n, x),
        PolyFamily::Hermite => hermite(n, x),
        PolyFamily::Legendre => legendre(n, x),
        PolyFamily::ChebyshevT => chebyshev(n, x, 1.0),
        PolyFamily::ChebyshevU => chebyshev(n, x, 2.0),
    }
}

fn laguerre(lambda: f64, n: u32, x: f64) -> f64 {
    // (k+1) L_{k+1} = (2k+1+lambda-x) L_k - (k+lambda) L_{k-1}
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + lambda - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + lambda - x) * cur - (kf + lambda) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn hermite(n: u32, x: f64) -> f64 {
    // H_{k+1} = 2x H_k - 2k H_{k-1}
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * k as f64 * prev;
        prev = cur;
        cur = next;
    }
    cur
}

fn legendre(n: u32, x: f64) -> f64 {
    // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

fn chebyshev(n: u32, x: f64, first_slope: f64) -> f64 {
    // T and U share T_{k+1} = 2x T_k - T_{k-1}; only the degree-1 seed differs
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = first_slope * x;
    for _ in 1..n {
        let next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(classical_poly(PolyFamily::Legendre, 2, 0.5), -0.125);
        assert_eq!(classical_poly(PolyFamily::Hermite, 3, 1.0), -4.0);
        assert_eq!(classical_poly(PolyFamily::Laguerre { lambda: 0.0 }, 0, 3.7), 1.0);
        // T_3(x) = 4x^3 - 3x
        assert_eq!(classical_poly(PolyFamily::ChebyshevT, 3, 0.5), -1.0);
        // U_2(x) = 4x^2 - 1
        assert_eq!(classical_poly(PolyFamily::ChebyshevU, 2, 0.5), 0.0);
        // L_2(x) = 1 - 2x + x^2/2
        let l2 = classical_poly(PolyFamily::Laguerre { lambda: 0.0 }, 2, 1.0);
        assert!((l2 + 0.5).abs() < 1e-15);
    }

    #[test]
    fn recurrence_residuals() {
        // each family's own recurrence must close to ~1e-12 at random-ish points
        let xs = [-0.83, -0.31, 0.07, 0.44, 0.96];
        for n in 2..50u32 {
            let nf = n as f64;
            for &x in &xs {
                let p = |k: u32| classical_poly(PolyFamily::Legendre, k, x);
                let r = (nf + 1.0) * p(n + 1) - (2.0 * nf + 1.0) * x * p(n) + nf * p(n - 1);
                assert!(r.abs() < 1e-12, "legendre residual n={n} x={x}: {r:e}");

                let t = |k: u32| classical_poly(PolyFamily::ChebyshevT, k, x);
                let r = t(n + 1) - 2.0 * x * t(n) + t(n - 1);
                assert!(r.abs() < 1e-11, "chebyshev residual n={n} x={x}: {r:e}");
            }
            for &x in &[0.4, 1.3, 2.9, 6.5] {
                let h = |k: u32| classical_poly(PolyFamily::Hermite, k, x);
                let r = h(n + 1) - 2.0 * x * h(n) + 2.0 * nf * h(n - 1);
                assert!(
                    r.abs() < 1e-12 * h(n + 1).abs().max(1.0),
                    "hermite residual n={n} x={x}: {r:e}"
                );

                let lam = 1.5;
                let l = |k: u32| classical_poly(PolyFamily::Laguerre { lambda: lam }, k, x);
                let r = (nf + 1.0) * l(n + 1) - (2.0 * nf + 1.0 + lam - x) * l(n)
                    + (nf + lam) * l(n - 1);
                assert!(
                    r.abs() < 1e-12 * l(n).abs().max(1.0),
                    "laguerre residual n={n} x={x}: {r:e}"
                );
            }
        }
    }

    #[test]
    fn chebyshev_trig_identity() {
        // T_n(cos θ) = cos(nθ), U_n(cos θ) = sin((n+1)θ)/sin θ
        for n in 0..20u32 {
            for &theta in &[0.2f64, 0.9, 1.7, 2.8] {
                let x: f64 = theta.cos();
                let t = classical_poly(PolyFamily::ChebyshevT, n, x);
                assert!((t - (n as f64 * theta).cos()).abs() < 1e-12);
                let u = classical_poly(PolyFamily::ChebyshevU, n, x);
                let expect = ((n as f64 + 1.0) * theta).sin() / theta.sin();
                assert!((u - expect).abs() < 1e-11);
            }
        }
    }

    #[test]
    fn laguerre_orthogonality_by_quadrature() {
        // ∫_0^∞ e^{-x} L_m(x) L_n(x) dx = δ_{mn}, m, n <= 5
        for m in 0..=5u32 {
            for n in 0..=5u32 {
                let r = crate::quadrature::integrate_semi_infinite(
                    |x| {
                        (-x).exp()
                            * classical_poly(PolyFamily::Laguerre { lambda: 0.0 }, m, x)
                            * classical_poly(PolyFamily::Laguerre { lambda: 0.0 }, n, x)
                    },
                    1e-12,
                    32.0,
                )
                .unwrap();
                let expect = if m == n { 1.0 } else { 0.0 };
                assert!(
                    (r.value - expect).abs() < 1e-8,
                    "orthogonality m={m} n={n}: {}",
                    r.value
                );
            }
        }
    }
}

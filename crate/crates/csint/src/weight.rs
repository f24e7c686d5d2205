//! The Meijer-G weight functions G^{q+1,0}_{p,q+1}(x | {a_i - 1}; 0, {b_j - 1})
//! behind every integration measure in the crate, together with their exact
//! Mellin moments.
//!
//! Pointwise evaluation goes through a small dictionary of closed forms for
//! the (p, q) classes that have one, and a residue (Slater) expansion
//! elsewhere. The Slater series loses precision at large argument (its
//! pieces oscillate with exponentially larger envelopes than the weight), so
//! infinite-support weights switch to an exact Mellin convolution against an
//! exponential kernel once the series cancellation estimate crosses the
//! accuracy target.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::ParameterSet;
use crate::quadrature::{self, QuadResult};
use crate::special::bessel::bessel_k;
use crate::special::gamma::{as_integer, as_nonpositive_integer, ln_abs_gamma, ln_gamma};
use crate::special::tricomi::tricomi_u;
use crate::value::{EvalOptions, SeriesValue};

/// Evaluation strategy for a weight, classified purely by (p, q).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum WeightTag {
    /// (0,0): e^{-x}
    Exponential,
    /// (1,0): (1-x)^{a-2} / Γ(a-1) on (0, 1)
    PowerLawCompact,
    /// (0,1): 2 x^{(b-1)/2} K_{b-1}(2√x)
    BesselK,
    /// (1,1): e^{-x} U(a-b, 2-b; x)
    TricomiU,
    /// everything else: residue series / Mellin convolution
    SlaterSeries,
}

/// A classified weight: strategy tag, parameters and support.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightForm {
    pub tag: WeightTag,
    pub params: ParameterSet,
    pub support_upper: f64,
}

/// Classify the weight of a parameter set. Pure function of (p, q) except for
/// the integrability guard on the compact class.
pub fn classify_weight(params: &ParameterSet) -> Result<WeightForm> {
    let (p, q) = (params.p(), params.q());
    let tag = match (p, q) {
        (0, 0) => WeightTag::Exponential,
        (1, 0) => {
            if params.a[0] <= 1.0 {
                return Err(Error::UnsupportedParameters {
                    detail: format!(
                        "compact power-law weight needs a > 1 for integrability (a = {})",
                        params.a[0]
                    ),
                });
            }
            WeightTag::PowerLawCompact
        }
        (0, 1) => WeightTag::BesselK,
        (1, 1) => WeightTag::TricomiU,
        _ => WeightTag::SlaterSeries,
    };
    Ok(WeightForm {
        tag,
        params: params.clone(),
        support_upper: params.radius_of_convergence(),
    })
}

/// (ln |M(n)|, sign) of the exact Mellin moment
/// M(n) = ∫ x^n W(x) dx = n! ∏ Γ(b_j + n) / ∏ Γ(a_i + n).
pub fn ln_mellin_moment(params: &ParameterSet, n: u32) -> Result<(f64, f64)> {
    let nf = n as f64;
    let mut ln = 0.0;
    let mut sign = 1.0;
    for k in 1..=n {
        ln += (k as f64).ln();
    }
    for &bj in &params.b {
        if as_nonpositive_integer(bj + nf).is_some() {
            return Err(Error::PoleAtNonpositiveInteger { argument: bj });
        }
        let (l, s) = ln_abs_gamma(bj + nf)?;
        ln += l;
        sign *= s;
    }
    for &ai in &params.a {
        if as_nonpositive_integer(ai + nf).is_some() {
            return Err(Error::PoleAtNonpositiveInteger { argument: ai });
        }
        let (l, s) = ln_abs_gamma(ai + nf)?;
        ln -= l;
        sign *= s;
    }
    Ok((ln, sign))
}

/// Closed-form Mellin moment ∫_0^R x^n W(x) dx.
pub fn mellin_moment(params: &ParameterSet, n: u32) -> Result<f64> {
    let (ln, sign) = ln_mellin_moment(params, n)?;
    Ok(sign * ln.exp())
}

/// One residue term of a Slater expansion: sign · e^{ln_pref} x^{exponent} ·
/// pFq(series; sigma x).
#[derive(Debug, Clone)]
struct SlaterTerm {
    exponent: f64,
    ln_pref: f64,
    sign: f64,
    series: ParameterSet,
}

/// Residue-series representation of a weight as a finite combination of
/// power-prefactored hypergeometric series.
#[derive(Debug, Clone)]
pub struct SlaterExpansion {
    terms: Vec<SlaterTerm>,
    sigma: f64,
    support_upper: f64,
}

impl SlaterExpansion {
    fn build(params: &ParameterSet) -> Result<Self> {
        let (p, q) = (params.p(), params.q());
        if p > q + 1 {
            return Err(Error::UnsupportedParameters {
                detail: format!("weight with p = {p} > q + 1 = {} has empty support", q + 1),
            });
        }
        let mut beta: Vec<f64> = Vec::with_capacity(q + 1);
        beta.push(0.0);
        beta.extend(params.b.iter().map(|&bj| bj - 1.0));
        let alpha: Vec<f64> = params.a.iter().map(|&ai| ai - 1.0).collect();

        for i in 0..beta.len() {
            for j in (i + 1)..beta.len() {
                if as_integer(beta[i] - beta[j]).is_some() {
                    return Err(Error::ConfluentParameters {
                        detail: format!(
                            "bottom exponents {} and {} are congruent mod 1",
                            beta[i], beta[j]
                        ),
                    });
                }
            }
        }

        // sign of the inner series argument: (-1)^(p - q - 1)
        let sigma = if (p + q) % 2 == 0 { -1.0 } else { 1.0 };

        let mut terms = Vec::with_capacity(beta.len());
        for h in 0..beta.len() {
            let mut ln_pref = 0.0;
            let mut sign = 1.0;
            for (j, &bj) in beta.iter().enumerate() {
                if j == h {
                    continue;
                }
                let (l, s) = ln_abs_gamma(bj - beta[h])?;
                ln_pref += l;
                sign *= s;
            }
            let mut vanished = false;
            for &ai in &alpha {
                if as_nonpositive_integer(ai - beta[h]).is_some() {
                    // 1/Γ at a pole: this residue term vanishes
                    vanished = true;
                    break;
                }
                let (l, s) = ln_abs_gamma(ai - beta[h])?;
                ln_pref -= l;
                sign *= s;
            }
            if vanished {
                continue;
            }
            let series = ParameterSet::new(
                alpha.iter().map(|&ai| 1.0 + beta[h] - ai).collect::<Vec<_>>(),
                beta.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != h)
                    .map(|(_, &bj)| 1.0 + beta[h] - bj)
                    .collect::<Vec<_>>(),
            );
            terms.push(SlaterTerm {
                exponent: beta[h],
                ln_pref,
                sign,
                series,
            });
        }
        Ok(SlaterExpansion {
            terms,
            sigma,
            support_upper: params.radius_of_convergence(),
        })
    }

    /// Pointwise value of the expansion at x.
    pub fn eval(&self, x: f64, opts: EvalOptions) -> Result<SeriesValue> {
        if !(x > 0.0) || x >= self.support_upper {
            return Err(Error::OutOfSupport {
                x,
                support_upper: self.support_upper,
            });
        }
        let mut total = 0.0;
        let mut scale = 0.0f64;
        let mut terms_used = 0;
        for t in &self.terms {
            let series = crate::hypergeom::pfq(
                &t.series,
                num_complex::Complex64::new(self.sigma * x, 0.0),
                opts,
            )?;
            let piece = t.sign * (t.ln_pref + t.exponent * x.ln()).exp() * series.value.re;
            total += piece;
            scale = scale.max(piece.abs());
            terms_used += series.terms_used;
        }
        // cancellation-aware error estimate
        let err = f64::EPSILON * scale * 8.0;
        Ok(SeriesValue {
            value: num_complex::Complex64::new(total, 0.0),
            abs_error_estimate: err,
            terms_used,
            converged: true,
            terminated: false,
        })
    }
}

/// Build the Slater expansion of a weight and self-validate its first six
/// Mellin moments against the closed form to relative 1e-6.
pub fn slater_expand(params: &ParameterSet) -> Result<SlaterExpansion> {
    let expansion = SlaterExpansion::build(params)?;
    let evaluator = WeightEvaluator::new(params)?;
    for n in 0..6u32 {
        let exact = mellin_moment(params, n)?;
        let quad = evaluator.integrate(|x| x.powi(n as i32), 1e-8)?;
        let rel = ((quad.value - exact) / exact).abs();
        if rel > 1e-6 {
            return Err(Error::NotConverged {
                terms_used: quad.evaluations,
                error_estimate: rel,
            });
        }
    }
    Ok(expansion)
}

/// Evaluate a classified weight at a point of its support.
pub fn weight_eval(form: &WeightForm, x: f64) -> Result<SeriesValue> {
    WeightEvaluator::from_form(form.clone())?.eval_series_value(x)
}

/// A weight prepared for repeated evaluation and for integration against
/// arbitrary smooth factors. This is what the identity engine holds per
/// instance.
#[derive(Debug)]
pub struct WeightEvaluator {
    pub form: WeightForm,
    kernel: Kernel,
}

#[derive(Debug)]
enum Kernel {
    Exponential,
    PowerLaw {
        a: f64,
        ln_norm: f64,
    },
    BesselK {
        b: f64,
    },
    TricomiU {
        a: f64,
        b: f64,
    },
    Slater {
        expansion: SlaterExpansion,
        /// series -> convolution switch point for infinite support
        x_switch: f64,
        /// e^{-y} y^c kernel exponent (the peeled last bottom exponent)
        conv_exponent: f64,
        /// evaluator for the remaining parameters
        conv_inner: Option<Box<WeightEvaluator>>,
    },
}

impl WeightEvaluator {
    pub fn new(params: &ParameterSet) -> Result<Self> {
        Self::from_form(classify_weight(params)?)
    }

    pub fn from_form(form: WeightForm) -> Result<Self> {
        let params = &form.params;
        let kernel = match form.tag {
            WeightTag::Exponential => Kernel::Exponential,
            WeightTag::PowerLawCompact => {
                let a = params.a[0];
                Kernel::PowerLaw {
                    a,
                    ln_norm: ln_gamma(a - 1.0)?,
                }
            }
            WeightTag::BesselK => Kernel::BesselK { b: params.b[0] },
            WeightTag::TricomiU => Kernel::TricomiU {
                a: params.a[0],
                b: params.b[0],
            },
            WeightTag::SlaterSeries => {
                let expansion = SlaterExpansion::build(params)?;
                let infinite = form.support_upper.is_infinite();
                let (x_switch, conv_exponent, conv_inner) = if infinite {
                    // decay exponent m = q + 1 - p; series cancellation grows
                    // like e^{2 m x^(1/m)}, keep it under ~e^20
                    let m = (params.q() + 1 - params.p()) as f64;
                    let x_switch = (10.0 / m).powf(m).max(8.0);
                    let mut inner = params.clone();
                    let last_b = inner.b.pop().expect("infinite support implies q >= 1");
                    let inner_eval = WeightEvaluator::new(&inner)?;
                    (x_switch, last_b - 1.0, Some(Box::new(inner_eval)))
                } else {
                    (f64::INFINITY, 0.0, None)
                };
                Kernel::Slater {
                    expansion,
                    x_switch,
                    conv_exponent,
                    conv_inner,
                }
            }
        };
        Ok(WeightEvaluator { form, kernel })
    }

    /// W(x) at a point of the open support interval.
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) || x >= self.form.support_upper {
            return Err(Error::OutOfSupport {
                x,
                support_upper: self.form.support_upper,
            });
        }
        match &self.kernel {
            Kernel::Exponential => Ok((-x).exp()),
            Kernel::PowerLaw { a, ln_norm } => Ok(((a - 2.0) * (1.0 - x).ln() - ln_norm).exp()),
            Kernel::BesselK { b } => {
                let t = 2.0 * x.sqrt();
                Ok(2.0 * x.powf((b - 1.0) / 2.0) * bessel_k(b - 1.0, t)?.real())
            }
            Kernel::TricomiU { a, b } => {
                if (a - 1.0).abs() <= crate::special::gamma::POLE_TOL {
                    // G collapses to e^{-x} x^{b-1}
                    return Ok(((b - 1.0) * x.ln() - x).exp());
                }
                if (a - b).abs() <= crate::special::gamma::POLE_TOL {
                    return Ok((-x).exp());
                }
                Ok((-x).exp() * tricomi_u(a - b, 2.0 - b, x)?.real())
            }
            Kernel::Slater {
                expansion,
                x_switch,
                conv_exponent,
                conv_inner,
            } => {
                if x <= *x_switch || conv_inner.is_none() {
                    Ok(expansion.eval(x, EvalOptions::default())?.real())
                } else {
                    self.conv_eval(x, *conv_exponent, conv_inner.as_ref().unwrap())
                }
            }
        }
    }

    /// Mellin convolution against the exponential kernel:
    /// W(x) = ∫ e^{-x/t} (x/t)^c W_inner(t) dt/t, on a log grid in t.
    ///
    /// The integrand is a narrow bump whose height decays with x, so the
    /// peak is located first and scaled out; the quadrature then sees an
    /// O(1) integrand and its relative tolerance means what it says.
    fn conv_eval(&self, x: f64, c: f64, inner: &WeightEvaluator) -> Result<f64> {
        let m = (inner.form.params.q() + 1 - inner.form.params.p()) as f64;
        let v_star = (m / (m + 1.0)) * x.ln();
        let lo = v_star - 30.0;
        let hi = if inner.form.support_upper.is_finite() {
            (v_star + 30.0).min(inner.form.support_upper.ln() - 1e-12)
        } else {
            v_star + 30.0
        };

        let ln_g = |v: f64| -> Option<f64> {
            let t = v.exp();
            let y = x / t;
            let w = inner.eval(t).ok()?;
            if w <= 0.0 {
                return None;
            }
            Some(-y + c * y.ln() + w.ln())
        };

        // coarse scan for the peak and an effective window
        const SCAN: usize = 120;
        let step = (hi - lo) / SCAN as f64;
        let mut ln_s = f64::NEG_INFINITY;
        let mut v_peak = v_star;
        for i in 0..=SCAN {
            let v = lo + step * i as f64;
            if let Some(g) = ln_g(v) {
                if g > ln_s {
                    ln_s = g;
                    v_peak = v;
                }
            }
        }
        if !ln_s.is_finite() {
            return Ok(0.0);
        }
        let cutoff = ln_s - 45.0;
        let mut wlo = v_peak;
        while wlo > lo && ln_g(wlo).map_or(false, |g| g > cutoff) {
            wlo -= step.max(0.05);
        }
        let mut whi = v_peak;
        while whi < hi && ln_g(whi).map_or(false, |g| g > cutoff) {
            whi += step.max(0.05);
        }

        let r = quadrature::integrate(
            |v| ln_g(v).map_or(0.0, |g| (g - ln_s).exp()),
            wlo,
            whi,
            1e-11,
        );
        if !r.converged {
            return Err(Error::NotConverged {
                terms_used: r.evaluations,
                error_estimate: r.abs_error,
            });
        }
        Ok(r.value * ln_s.exp())
    }

    fn eval_series_value(&self, x: f64) -> Result<SeriesValue> {
        match &self.kernel {
            Kernel::Slater {
                expansion,
                x_switch,
                ..
            } if x <= *x_switch => expansion.eval(x, EvalOptions::default()),
            _ => {
                let v = self.eval(x)?;
                Ok(SeriesValue {
                    value: num_complex::Complex64::new(v, 0.0),
                    abs_error_estimate: v.abs() * 1e-10,
                    terms_used: 1,
                    converged: true,
                    terminated: false,
                })
            }
        }
    }

    /// ∫ f(x) W(x) dx over the support, with the substitution that makes the
    /// weight's decay (or endpoint singularity) smooth for the quadrature.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, tol: f64) -> Result<QuadResult> {
        for &bj in &self.form.params.b {
            if bj <= 0.0 {
                return Err(Error::UnsupportedWeight {
                    detail: format!(
                        "bottom exponent {} <= -1: the integral diverges at the origin",
                        bj - 1.0
                    ),
                });
            }
        }
        match &self.kernel {
            Kernel::Exponential => {
                quadrature::integrate_semi_infinite(|x| f(x) * (-x).exp(), tol, 32.0)
            }
            Kernel::PowerLaw { a, ln_norm } => {
                if *a >= 2.0 {
                    // weight is continuous on [0, 1]; integrate directly
                    let norm = (-ln_norm).exp();
                    let r = quadrature::integrate(
                        |x| f(x) * ((a - 2.0) * (1.0 - x).ln()).exp(),
                        0.0,
                        1.0,
                        tol,
                    );
                    return Ok(QuadResult {
                        value: r.value * norm,
                        abs_error: r.abs_error * norm,
                        evaluations: r.evaluations,
                        converged: r.converged,
                    });
                }
                // 1 < a < 2: s = (1-x)^{a-1} removes the endpoint singularity
                // (1/(a-1) > 1, so the map stays smooth):
                // ∫_0^1 f(x)(1-x)^{a-2} dx / Γ(a-1) = ∫_0^1 f(1-s^{1/(a-1)}) ds / Γ(a)
                let inv = 1.0 / (a - 1.0);
                let norm = (-(ln_norm + (a - 1.0).ln())).exp();
                let r = quadrature::integrate(|s| f(1.0 - s.powf(inv)), 0.0, 1.0, tol);
                Ok(QuadResult {
                    value: r.value * norm,
                    abs_error: r.abs_error * norm,
                    evaluations: r.evaluations,
                    converged: r.converged,
                })
            }
            Kernel::BesselK { b } => {
                // x = t^2: ∫ f(t^2) 4 t^b K_{b-1}(2t) dt, decay e^{-2t}
                let b = *b;
                quadrature::integrate_semi_infinite(
                    move |t| {
                        if t == 0.0 {
                            return 0.0;
                        }
                        let k = bessel_k(b - 1.0, 2.0 * t).map(|v| v.real()).unwrap_or(0.0);
                        f(t * t) * 4.0 * (b * t.ln()).exp() * k
                    },
                    tol,
                    24.0,
                )
            }
            Kernel::TricomiU { .. } => {
                // x = t^2 tames both the x^{b-1} origin behaviour and e^{-x}
                quadrature::integrate_semi_infinite(
                    |t| {
                        let x = t * t;
                        match self.eval(x) {
                            Ok(w) => f(x) * w * 2.0 * t,
                            Err(_) => 0.0,
                        }
                    },
                    tol,
                    8.0,
                )
            }
            Kernel::Slater { .. } => {
                if self.form.support_upper.is_finite() {
                    let r = quadrature::integrate(
                        |x| match self.eval(x) {
                            Ok(w) => f(x) * w,
                            Err(_) => 0.0,
                        },
                        0.0,
                        self.form.support_upper,
                        tol,
                    );
                    Ok(r)
                } else {
                    // x = t^m with m = q + 1 - p turns the decay into e^{-m t}
                    let m = (self.form.params.q() + 1 - self.form.params.p()) as f64;
                    quadrature::integrate_semi_infinite(
                        move |t| {
                            if t == 0.0 {
                                return 0.0;
                            }
                            let x = t.powf(m);
                            match self.eval(x) {
                                Ok(w) => f(x) * w * m * x / t,
                                Err(_) => 0.0,
                            }
                        },
                        tol,
                        (40.0 / m).max(8.0),
                    )
                }
            }
        }
    }
}

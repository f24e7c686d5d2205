//! The three generalized coherent-state families (Barut-Girardello,
//! Klauder-Perelomov, Gazeau-Klauder): expansion coefficients, overlap
//! kernels, and the resolution-of-unity residuals that tie the state
//! families to the fundamental moment integrals.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hypergeom::{energy, pfq, structural_constant, ParameterSet};
use crate::special::gamma::ln_abs_gamma;
use crate::value::EvalOptions;
use crate::weight::WeightEvaluator;

/// Which construction the family follows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsKind {
    Bg,
    Kp,
    Gk,
}

/// A state label: complex z for BG/KP, the (J, γ) action-angle pair for GK.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CsLabel {
    Z(Complex64),
    JGamma { j: f64, gamma: f64 },
}

impl CsLabel {
    pub fn z(re: f64, im: f64) -> Self {
        CsLabel::Z(Complex64::new(re, im))
    }

    /// |z|^2, or J for GK labels (the radial variable of the family).
    fn radial(&self) -> f64 {
        match self {
            CsLabel::Z(z) => z.norm_sqr(),
            CsLabel::JGamma { j, .. } => *j,
        }
    }
}

/// A coherent-state family: construction kind, parameter set, convergence
/// radius (in the radial variable |z|^2 resp. J) and the Fock-space cutoff
/// used by truncated-sum evaluations.
#[derive(Debug, Clone)]
pub struct CoherentStateFamily {
    pub kind: CsKind,
    pub params: ParameterSet,
    pub radius: f64,
    pub truncation: u32,
}

/// Default Fock truncation; series tails are additionally bounded by the
/// next-term ratio before a truncated sum is trusted.
pub const DEFAULT_TRUNCATION: u32 = 60;

impl CoherentStateFamily {
    pub fn new(kind: CsKind, params: ParameterSet) -> Result<Self> {
        params.validate()?;
        // KP normalizes with the swapped set, so its disc is the swapped radius
        let radius = match kind {
            CsKind::Bg | CsKind::Gk => params.radius_of_convergence(),
            CsKind::Kp => params.swap().radius_of_convergence(),
        };
        if radius <= 0.0 {
            return Err(Error::UnsupportedParameters {
                detail: "family has zero convergence radius; the states do not exist".into(),
            });
        }
        Ok(CoherentStateFamily {
            kind,
            params,
            radius,
            truncation: DEFAULT_TRUNCATION,
        })
    }

    /// Named presets shipped with the crate.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "ho1d" => Self::new(CsKind::Bg, ParameterSet::new([], [])),
            "pseudoharmonic-like" => Self::new(CsKind::Bg, ParameterSet::new([], [2.0])),
            "compact-kp" => Self::new(CsKind::Kp, ParameterSet::new([2.0], [])),
            other => Err(Error::UnknownCase { name: other.into() }),
        }
    }

    pub const PRESET_NAMES: &'static [&'static str] =
        &["ho1d", "pseudoharmonic-like", "compact-kp"];

    /// Parameter set of the family's pFq normalizer.
    fn normalizer_params(&self) -> ParameterSet {
        match self.kind {
            CsKind::Bg | CsKind::Gk => self.params.clone(),
            CsKind::Kp => self.params.swap(),
        }
    }

    fn check_disc(&self, radial: f64) -> Result<()> {
        if radial >= self.radius {
            return Err(Error::OutsideConvergenceDisc {
                z_abs: radial.sqrt(),
                radius: self.radius,
            });
        }
        Ok(())
    }

    fn normalizer(&self, radial: f64) -> Result<f64> {
        pfq(
            &self.normalizer_params(),
            Complex64::new(radial, 0.0),
            EvalOptions::default(),
        )
        .map(|v| v.value.re)
    }

    /// GK phase angle γ e(n); the paper leaves e(0) unspecified and every
    /// observable here depends only on |⟨n|z⟩|, so the n = 0 phase is fixed
    /// to zero.
    fn gk_phase(&self, n: u32, gamma: f64) -> Result<f64> {
        if n == 0 {
            Ok(0.0)
        } else {
            Ok(gamma * energy(&self.params, n)?)
        }
    }

    /// The normalized expansion coefficient ⟨n|z⟩ of the family.
    pub fn cs_coefficient(&self, n: u32, label: &CsLabel) -> Result<Complex64> {
        if n > self.truncation {
            return Err(Error::InvalidArgument {
                detail: format!("n = {n} exceeds the truncation {}", self.truncation),
            });
        }
        let radial = label.radial();
        self.check_disc(radial)?;
        let norm = self.normalizer(radial)?.sqrt();
        let rho = structural_constant(&self.params, n)?;
        match (self.kind, label) {
            (CsKind::Bg, CsLabel::Z(z)) => Ok(z.powu(n) / rho.sqrt() / norm),
            (CsKind::Kp, CsLabel::Z(z)) => {
                let mut fact = 1.0;
                for k in 1..=n {
                    fact *= k as f64;
                }
                Ok(z.powu(n) * rho.sqrt() / fact / norm)
            }
            (CsKind::Gk, CsLabel::JGamma { j, gamma }) => {
                let phase = self.gk_phase(n, *gamma)?;
                let magnitude = j.sqrt().powi(n as i32) / rho.sqrt() / norm;
                Ok(Complex64::from_polar(magnitude, -phase))
            }
            (CsKind::Gk, CsLabel::Z(_)) => Err(Error::InvalidArgument {
                detail: "GK labels are (J, gamma) pairs".into(),
            }),
            (_, CsLabel::JGamma { .. }) => Err(Error::InvalidArgument {
                detail: "BG/KP labels are complex z".into(),
            }),
        }
    }

    /// Overlap kernel ⟨z|z'⟩.
    pub fn overlap(&self, z: &CsLabel, zp: &CsLabel) -> Result<Complex64> {
        let (r1, r2) = (z.radial(), zp.radial());
        self.check_disc(r1)?;
        self.check_disc(r2)?;
        let denom = (self.normalizer(r1)? * self.normalizer(r2)?).sqrt();
        match (self.kind, z, zp) {
            (CsKind::Bg | CsKind::Kp, CsLabel::Z(z), CsLabel::Z(zp)) => {
                let kernel = pfq(
                    &self.normalizer_params(),
                    z.conj() * zp,
                    EvalOptions::default(),
                )?
                .value;
                Ok(kernel / denom)
            }
            (
                CsKind::Gk,
                CsLabel::JGamma { j: j1, gamma: g1 },
                CsLabel::JGamma { j: j2, gamma: g2 },
            ) => {
                // phases survive inside the Fock sum; no pFq closed form
                let mut sum = Complex64::new(0.0, 0.0);
                let step = (j1 * j2).sqrt();
                let mut radial_term = 1.0;
                for n in 0..=self.truncation {
                    let rho = structural_constant(&self.params, n)?;
                    let phase = self.gk_phase(n, g2 - g1)?;
                    sum += Complex64::from_polar(radial_term / rho, -phase);
                    radial_term *= step;
                }
                Ok(sum / denom)
            }
            _ => Err(Error::InvalidArgument {
                detail: "mismatched label kinds for this family".into(),
            }),
        }
    }

    /// |∫ dμ(z) |⟨n|z⟩|^2 - 1|: the resolution of unity at the matrix-element
    /// level. The angular integral is exact (only the diagonal term
    /// survives), leaving the radial moment integral of the family's weight.
    pub fn unity_residual(&self, n: u32) -> Result<f64> {
        let (weight_params, ln_prefactor, coeff) = match self.kind {
            CsKind::Bg | CsKind::Gk => {
                // dμ carries ∏Γ(a)/∏Γ(b); |⟨n|z⟩|^2 contributes 1/ρ(n)
                let mut ln = 0.0;
                let mut sign = 1.0;
                for &ai in &self.params.a {
                    let (l, s) = ln_abs_gamma(ai)?;
                    ln += l;
                    sign *= s;
                }
                for &bj in &self.params.b {
                    let (l, s) = ln_abs_gamma(bj)?;
                    ln -= l;
                    sign *= s;
                }
                let rho = structural_constant(&self.params, n)?;
                (self.params.clone(), (ln, sign), 1.0 / rho)
            }
            CsKind::Kp => {
                // dμ carries ∏Γ(b)/∏Γ(a) and the swapped weight;
                // |⟨n|z⟩|^2 contributes ρ(n)/(n!)^2
                let mut ln = 0.0;
                let mut sign = 1.0;
                for &bj in &self.params.b {
                    let (l, s) = ln_abs_gamma(bj)?;
                    ln += l;
                    sign *= s;
                }
                for &ai in &self.params.a {
                    let (l, s) = ln_abs_gamma(ai)?;
                    ln -= l;
                    sign *= s;
                }
                let rho = structural_constant(&self.params, n)?;
                let mut fact = 1.0;
                for k in 1..=n {
                    fact *= k as f64;
                }
                (self.params.swap(), (ln, sign), rho / (fact * fact))
            }
        };
        let evaluator = WeightEvaluator::new(&weight_params)?;
        let quad = evaluator.integrate(|u| u.powi(n as i32), 1e-9)?;
        let (ln, sign) = ln_prefactor;
        let integral = sign * ln.exp() * coeff * quad.value;
        Ok((integral - 1.0).abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(re: f64) -> CsLabel {
        CsLabel::z(re, 0.0)
    }

    #[test]
    fn canonical_coefficient_and_overlap() {
        let fam = CoherentStateFamily::preset("ho1d").unwrap();
        // ⟨0|z=1⟩ = e^{-1/2}
        let c = fam.cs_coefficient(0, &z(1.0)).unwrap();
        assert!((c.re - (-0.5f64).exp()).abs() < 1e-14);
        assert!(c.im == 0.0);
        // ⟨z=1|z'=0⟩ = e^{-1/2}
        let o = fam.overlap(&z(1.0), &z(0.0)).unwrap();
        assert!((o.re - (-0.5f64).exp()).abs() < 1e-14);
    }

    #[test]
    fn vacuum_label() {
        for name in CoherentStateFamily::PRESET_NAMES {
            let fam = CoherentStateFamily::preset(name).unwrap();
            let label = match fam.kind {
                CsKind::Gk => CsLabel::JGamma { j: 0.0, gamma: 0.3 },
                _ => z(0.0),
            };
            assert_eq!(fam.cs_coefficient(0, &label).unwrap().re, 1.0);
            for n in 1..4 {
                assert_eq!(fam.cs_coefficient(n, &label).unwrap().norm(), 0.0);
            }
        }
    }

    #[test]
    fn overlap_normalization_and_symmetry() {
        let fams = [
            CoherentStateFamily::preset("ho1d").unwrap(),
            CoherentStateFamily::preset("pseudoharmonic-like").unwrap(),
            CoherentStateFamily::preset("compact-kp").unwrap(),
        ];
        for fam in &fams {
            for &(re, im) in &[(0.3, 0.1), (0.6, -0.4), (0.0, 0.7)] {
                let a = CsLabel::z(re, im);
                let b = CsLabel::z(-0.2, 0.35);
                let oaa = fam.overlap(&a, &a).unwrap();
                assert!((oaa.re - 1.0).abs() < 1e-12 && oaa.im.abs() < 1e-13);
                let oab = fam.overlap(&a, &b).unwrap();
                let oba = fam.overlap(&b, &a).unwrap();
                assert!((oab - oba.conj()).norm() < 1e-12);
                assert!(oab.norm() <= 1.0 + 1e-10);
            }
        }
    }

    #[test]
    fn overlap_matches_truncated_fock_sum() {
        let fams = [
            CoherentStateFamily::preset("ho1d").unwrap(),
            CoherentStateFamily::preset("pseudoharmonic-like").unwrap(),
            CoherentStateFamily::preset("compact-kp").unwrap(),
        ];
        for fam in &fams {
            let za = CsLabel::z(0.8, 0.2);
            let zb = CsLabel::z(0.5, -0.6);
            // Σ_n conj(⟨n|z⟩) ⟨n|z'⟩ must agree with the closed form; the
            // M = 60 tail is negligible at these radii
            let mut sum = Complex64::new(0.0, 0.0);
            for n in 0..=fam.truncation {
                sum += fam.cs_coefficient(n, &za).unwrap().conj()
                    * fam.cs_coefficient(n, &zb).unwrap();
            }
            let closed = fam.overlap(&za, &zb).unwrap();
            assert!(
                (sum - closed).norm() < 1e-10,
                "fock-sum overlap mismatch: {sum} vs {closed}"
            );
        }
    }

    #[test]
    fn gk_reduces_to_bg_in_modulus() {
        let params = ParameterSet::new([], [2.0]);
        let gk = CoherentStateFamily::new(CsKind::Gk, params.clone()).unwrap();
        let bg = CoherentStateFamily::new(CsKind::Bg, params).unwrap();
        let j = 0.49;
        for n in 0..8 {
            for &gamma in &[0.0, 0.7, 3.1] {
                let cg = gk.cs_coefficient(n, &CsLabel::JGamma { j, gamma }).unwrap();
                let cb = bg.cs_coefficient(n, &z(j.sqrt())).unwrap();
                assert!((cg.norm() - cb.norm()).abs() < 1e-13);
                if gamma == 0.0 {
                    assert!((cg - cb).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn outside_disc_rejected() {
        // KP over (1,0) a=2 normalizes with the swapped (entire) series, so
        // its disc is unbounded; the compact disc belongs to the BG dual
        let kp = CoherentStateFamily::preset("compact-kp").unwrap();
        assert_eq!(kp.radius, f64::INFINITY);
        let bg = CoherentStateFamily::new(CsKind::Bg, ParameterSet::new([2.0], [])).unwrap();
        assert_eq!(bg.radius, 1.0);
        assert!(matches!(
            bg.overlap(&z(1.05), &z(0.0)),
            Err(Error::OutsideConvergenceDisc { .. })
        ));
    }

    #[test]
    fn unity_residuals_for_presets() {
        for name in CoherentStateFamily::PRESET_NAMES {
            let fam = CoherentStateFamily::preset(name).unwrap();
            for n in 0..=5 {
                let r = fam.unity_residual(n).unwrap();
                assert!(r <= 1e-6, "{name} residual at n={n}: {r:e}");
            }
        }
        // the BG states over the same (1,0) a=2 set carry the compact
        // uniform weight on (0,1); their residual closes the Beta-moment route
        let fam = CoherentStateFamily::new(CsKind::Bg, ParameterSet::new([2.0], [])).unwrap();
        for n in 0..=5 {
            let r = fam.unity_residual(n).unwrap();
            assert!(r <= 1e-6, "bg compact residual at n={n}: {r:e}");
        }
    }
}

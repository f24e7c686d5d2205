//! Identity instances: the serializable description of one fully
//! instantiated integral identity, plus the record-per-line instance file
//! format the CLI consumes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergeom::ParameterSet;

/// The identity families of the engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityFamily {
    FundA,
    FundB,
    ComplexA,
    ComplexB,
    AngularA,
    AngularB,
    RealA,
    RealB,
    GxfA,
    GxfB,
    GxfC,
    PowerSeriesWeight,
    BinomialWeight,
}

impl IdentityFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityFamily::FundA => "fund_a",
            IdentityFamily::FundB => "fund_b",
            IdentityFamily::ComplexA => "complex_a",
            IdentityFamily::ComplexB => "complex_b",
            IdentityFamily::AngularA => "angular_a",
            IdentityFamily::AngularB => "angular_b",
            IdentityFamily::RealA => "real_a",
            IdentityFamily::RealB => "real_b",
            IdentityFamily::GxfA => "gxf_a",
            IdentityFamily::GxfB => "gxf_b",
            IdentityFamily::GxfC => "gxf_c",
            IdentityFamily::PowerSeriesWeight => "power_series_weight",
            IdentityFamily::BinomialWeight => "binomial_weight",
        }
    }
}

/// Scalar slots an instance may carry; which ones are required depends on
/// the family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize, Default)]
pub struct Scalars {
    /// The c-number image A of the raising side.
    #[serde(rename = "A", skip_serializing_if = "Option::is_none", default)]
    pub a: Option<f64>,
    /// The c-number image B of the lowering side.
    #[serde(rename = "B", skip_serializing_if = "Option::is_none", default)]
    pub b: Option<f64>,
    /// Evaluation point of a representation or series argument.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub x: Option<f64>,
    /// A pre-substituted product A·B = f(x).
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub f_value: Option<f64>,
    /// Binomial exponent m.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<u32>,
    /// Degree n where a family needs one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<u32>,
    /// Fixed |z| of the angular integrals.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub z_abs: Option<f64>,
    /// The 1/C argument scaling of the scaled real-space integral.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub scale: Option<f64>,
}

/// One fully-instantiated integral identity, ready for verification.
///
/// `weight_params` always stores the pFq-side set (p, q, {a}, {b}); the
/// B-families integrate against the weight of the swapped set internally.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityInstance {
    pub family: IdentityFamily,
    pub weight_params: ParameterSet,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub inner_params: Option<ParameterSet>,
    #[serde(default)]
    pub scalars: Scalars,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub moment_index: Option<u32>,
    #[serde(default)]
    pub label: String,
}

impl IdentityInstance {
    pub fn new(family: IdentityFamily, weight_params: ParameterSet) -> Self {
        IdentityInstance {
            family,
            weight_params,
            inner_params: None,
            scalars: Scalars::default(),
            moment_index: None,
            label: String::new(),
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    fn require(&self, cond: bool, what: &str) -> Result<()> {
        if cond {
            Ok(())
        } else {
            Err(Error::InvalidInstance {
                detail: format!("{} requires {what}", self.family.as_str()),
            })
        }
    }

    /// Family-specific completeness and convergence-disc checks; construction
    /// of a suite and parsing of instance files both go through this.
    pub fn validate(&self) -> Result<()> {
        let s = &self.weight_params;
        if s.a.iter().chain(s.b.iter()).any(|v| !v.is_finite()) {
            return Err(Error::InvalidInstance {
                detail: "weight parameters must be finite".into(),
            });
        }
        if let Some(inner) = &self.inner_params {
            if inner.a.iter().chain(inner.b.iter()).any(|v| !v.is_finite()) {
                return Err(Error::InvalidInstance {
                    detail: "inner parameters must be finite".into(),
                });
            }
        }
        for v in [
            self.scalars.a,
            self.scalars.b,
            self.scalars.x,
            self.scalars.f_value,
            self.scalars.z_abs,
            self.scalars.scale,
        ]
        .into_iter()
        .flatten()
        {
            if !v.is_finite() {
                return Err(Error::InvalidInstance {
                    detail: "scalars must be finite".into(),
                });
            }
        }
        match self.family {
            IdentityFamily::FundA | IdentityFamily::FundB => {
                self.require(self.moment_index.is_some(), "a moment_index")?;
            }
            IdentityFamily::ComplexA | IdentityFamily::ComplexB => {
                self.require(
                    self.scalars.a.is_some() && self.scalars.b.is_some(),
                    "scalars A and B",
                )?;
                let (a, b) = (self.scalars.a.unwrap(), self.scalars.b.unwrap());
                // on a compact support every series argument must stay in the disc
                let compact_inner = match self.family {
                    IdentityFamily::ComplexA => s.p() == s.q() + 1,
                    _ => false,
                };
                let terminating = s.termination_order().is_some();
                if compact_inner && !terminating && (a.abs() >= 1.0 || b.abs() >= 1.0) {
                    return Err(Error::InvalidInstance {
                        detail: "compact-support complex instance needs |A|, |B| < 1".into(),
                    });
                }
                if s.p() == s.q() + 1 && !terminating && (a * b).abs() >= 1.0 {
                    return Err(Error::InvalidInstance {
                        detail: "closed form needs |A·B| < 1 at p = q + 1".into(),
                    });
                }
            }
            IdentityFamily::AngularA | IdentityFamily::AngularB => {
                self.require(
                    self.scalars.a.is_some()
                        && self.scalars.b.is_some()
                        && self.scalars.z_abs.is_some(),
                    "scalars A, B and z_abs",
                )?;
                let (a, b) = (self.scalars.a.unwrap(), self.scalars.b.unwrap());
                let r = self.scalars.z_abs.unwrap();
                self.require(r >= 0.0, "z_abs >= 0")?;
                if self.family == IdentityFamily::AngularA
                    && s.p() == s.q() + 1
                    && s.termination_order().is_none()
                    && (a.abs() * r >= 1.0 || b.abs() * r >= 1.0 || (a * b * r * r).abs() >= 1.0)
                {
                    return Err(Error::InvalidInstance {
                        detail: "angular instance leaves the convergence disc".into(),
                    });
                }
            }
            IdentityFamily::RealA | IdentityFamily::RealB => {
                self.require(self.scalars.f_value.is_some(), "scalar f_value")?;
                if s.p() == s.q() + 1
                    && s.termination_order().is_none()
                    && self.scalars.f_value.unwrap().abs() >= 1.0
                {
                    return Err(Error::InvalidInstance {
                        detail: "closed form needs |f| < 1 at p = q + 1".into(),
                    });
                }
            }
            IdentityFamily::GxfA | IdentityFamily::GxfB => {
                self.require(self.inner_params.is_some(), "inner_params")?;
                self.require(self.scalars.a.is_some(), "scalar A")?;
            }
            IdentityFamily::GxfC => {
                self.require(self.scalars.a.is_some(), "scalar A")?;
                self.require(
                    self.scalars.scale.map(|c| c > 0.0).unwrap_or(false),
                    "a positive scale C",
                )?;
            }
            IdentityFamily::PowerSeriesWeight => {
                self.require(self.inner_params.is_some(), "inner_params")?;
                self.require(self.scalars.x.is_some(), "scalar x")?;
            }
            IdentityFamily::BinomialWeight => {
                self.require(self.scalars.m.is_some(), "scalar m")?;
                self.require(self.scalars.x.is_some(), "scalar x")?;
            }
        }
        Ok(())
    }
}

/// Parse an instance file: one JSON record per line, `#` comments and blank
/// lines allowed. Every record is validated before it is returned.
pub fn parse_instances(text: &str) -> Result<Vec<IdentityInstance>> {
    let mut out = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let inst: IdentityInstance =
            serde_json::from_str(line).map_err(|e| Error::ParseError {
                record: idx + 1,
                detail: e.to_string(),
            })?;
        inst.validate().map_err(|e| Error::ParseError {
            record: idx + 1,
            detail: e.to_string(),
        })?;
        out.push(inst);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_through_json() {
        let mut inst = IdentityInstance::new(
            IdentityFamily::FundA,
            ParameterSet::new([2.0], [1.5]),
        )
        .with_label("fund_a/test");
        inst.moment_index = Some(3);
        let json = serde_json::to_string(&inst).unwrap();
        let back: IdentityInstance = serde_json::from_str(&json).unwrap();
        assert_eq!(inst, back);
    }

    #[test]
    fn parse_with_comments_and_validation() {
        let text = r#"
# a comment
{"family":"fund_a","weight_params":{"a":[],"b":[2.0]},"moment_index":1,"label":"ok"}

{"family":"real_b","weight_params":{"a":[2.0],"b":[1.0]},"scalars":{"f_value":0.25}}
"#;
        let v = parse_instances(text).unwrap();
        assert_eq!(v.len(), 2);
        assert_eq!(v[0].moment_index, Some(1));
    }

    #[test]
    fn incomplete_instance_rejected() {
        let text = r#"{"family":"fund_a","weight_params":{"a":[],"b":[]}}"#;
        let err = parse_instances(text).unwrap_err();
        assert!(matches!(err, Error::ParseError { record: 1, .. }));
    }

    #[test]
    fn malformed_json_rejected_with_record_number() {
        let text = "{\"family\":\"fund_a\"\nnot json";
        let err = parse_instances(text).unwrap_err();
        assert!(matches!(err, Error::ParseError { .. }));
    }

    #[test]
    fn divergent_angular_instance_rejected() {
        let mut inst = IdentityInstance::new(
            IdentityFamily::AngularA,
            ParameterSet::new([2.0], []),
        );
        inst.scalars.a = Some(2.0);
        inst.scalars.b = Some(2.0);
        inst.scalars.z_abs = Some(0.9);
        assert!(inst.validate().is_err());
    }
}

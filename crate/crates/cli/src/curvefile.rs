//! The on-disk curve format: a JSON document naming the coefficient ring
//! and the Weierstrass coefficients in the θ-basis (x + y·θ as `[x, y]`,
//! with θ = (1+√m)/2 for m ≡ 1 mod 4 and θ = √m otherwise). Rational
//! curves use bare integers, tower curves use triples of pairs over Z[ω].
//! Quadratic inputs may declare `"basis": "sqrt"` to supply coefficients as
//! x + y·√m; they are converted on parse.

use kummerlab_core::numring::NumberRing;
use kummerlab_core::weierstrass::{WeierstrassModel, WeierstrassError};
use kummerlab_core::RingElement;
use num_bigint::BigInt;
use serde::Deserialize;
use std::str::FromStr;

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error("malformed curve file: {0}")]
    Json(String),
    #[error("{0}")]
    Ring(String),
    #[error("coefficient {0} does not match the ring: {1}")]
    Coefficient(&'static str, String),
    #[error("the discriminant vanishes: the file violates the smooth-generic-fiber invariant")]
    ZeroDiscriminant,
}

#[derive(Debug, Clone, Deserialize)]
pub struct CurveFile {
    #[serde(default)]
    pub id: Option<String>,
    #[serde(default)]
    pub source: Option<String>,
    pub field: FieldSpec,
    #[serde(default)]
    pub basis: Basis,
    pub curve: CoeffSpec,
    #[serde(default)]
    pub expected: Option<Expected>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Quadratic { m: i64 },
    Tower { a: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    #[default]
    Theta,
    Sqrt,
}

#[derive(Debug, Clone, Default, Deserialize)]
pub struct CoeffSpec {
    pub a1: Option<ElemSpec>,
    pub a2: Option<ElemSpec>,
    pub a3: Option<ElemSpec>,
    pub a4: Option<ElemSpec>,
    pub a6: Option<ElemSpec>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum IntLike {
    Small(i64),
    Big(String),
}

impl IntLike {
    fn to_bigint(&self) -> Result<BigInt, InputError> {
        match self {
            IntLike::Small(n) => Ok(BigInt::from(*n)),
            IntLike::Big(s) => {
                BigInt::from_str(s).map_err(|e| InputError::Json(format!("bad integer {s:?}: {e}")))
            }
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ElemSpec {
    Int(IntLike),
    Pair([IntLike; 2]),
    Triple([[IntLike; 2]; 3]),
}

/// Expected facts carried by the corpus files (audited against their
/// sources and replayed by the verification command).
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default)]
pub struct Expected {
    pub admissible: Option<bool>,
    pub kodaira_at_two: Option<String>,
    pub val_delta_min_at_two: Option<u32>,
    pub fiber_type: Option<String>,
    pub d_invariant: Option<u32>,
    pub delta: Option<ElemSpec>,
    pub c4_zero: Option<bool>,
    pub j_zero: Option<bool>,
    pub two_torsion_constant: Option<bool>,
    pub fixed_points: Option<u32>,
    pub key_identity: Option<ElemSpec>,
    pub val_key_at_two: Option<i64>,
    pub val_d_at_two: Option<i64>,
    pub failing_clause: Option<String>,
    pub good_reduction_everywhere: Option<bool>,
    pub two_division_disc_square: Option<bool>,
    pub ordinary_at_two: Option<bool>,
    pub fundamental_unit: Option<[i64; 2]>,
    pub unit_norm: Option<i64>,
    pub j_check: Option<JCheck>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JCheck {
    /// j = t³ exactly: c₄³ = t³·Δ
    IntegerCube { t: i64 },
    /// j = (ε-16)³/ε with ε the fundamental unit (conjugated on demand)
    #[serde(rename = "eps_minus_16_cubed_over_eps")]
    EpsMinus16CubedOverEps { conjugate: bool },
}

pub struct ParsedCurve {
    pub file: CurveFile,
    pub ring: NumberRing,
    pub model: WeierstrassModel,
}

impl ParsedCurve {
    pub fn name(&self) -> &str {
        self.file.id.as_deref().unwrap_or("curve")
    }
}

fn build_ring(spec: &FieldSpec) -> Result<NumberRing, InputError> {
    match spec {
        FieldSpec::Rational => Ok(NumberRing::Rational),
        FieldSpec::Quadratic { m } => {
            NumberRing::quadratic(*m).map_err(|e| InputError::Ring(e.to_string()))
        }
        FieldSpec::Tower { a } => {
            NumberRing::tower(*a).map_err(|e| InputError::Ring(e.to_string()))
        }
    }
}

fn build_element(
    name: &'static str,
    ring: &NumberRing,
    basis: Basis,
    spec: Option<&ElemSpec>,
) -> Result<RingElement, InputError> {
    let Some(spec) = spec else {
        return Ok(ring.zero());
    };
    match (ring, spec) {
        (NumberRing::Rational, ElemSpec::Int(n)) => Ok(ring.from_bigint(n.to_bigint()?)),
        (NumberRing::Quadratic { .. }, ElemSpec::Pair([x, y])) => {
            let (x, y) = (x.to_bigint()?, y.to_bigint()?);
            Ok(match basis {
                Basis::Theta => ring.quad(x, y),
                Basis::Sqrt => ring.quad_sqrt_basis(x, y),
            })
        }
        (NumberRing::Quadratic { .. }, ElemSpec::Int(n)) => {
            Ok(ring.from_bigint(n.to_bigint()?))
        }
        (NumberRing::Tower { .. }, ElemSpec::Triple(t)) => {
            let mut coeffs: [(BigInt, BigInt); 3] = Default::default();
            for (i, [x, y]) in t.iter().enumerate() {
                coeffs[i] = (x.to_bigint()?, y.to_bigint()?);
            }
            Ok(ring.tower_elem(coeffs))
        }
        (NumberRing::Tower { .. }, ElemSpec::Int(n)) => Ok(ring.from_bigint(n.to_bigint()?)),
        _ => Err(InputError::Coefficient(
            name,
            "element shape does not fit the declared field".into(),
        )),
    }
}

/// Parse a curve file from its JSON text.
pub fn parse_curve_str(text: &str) -> Result<ParsedCurve, InputError> {
    let file: CurveFile =
        serde_json::from_str(text).map_err(|e| InputError::Json(e.to_string()))?;
    let ring = build_ring(&file.field)?;
    let a1 = build_element("a1", &ring, file.basis, file.curve.a1.as_ref())?;
    let a2 = build_element("a2", &ring, file.basis, file.curve.a2.as_ref())?;
    let a3 = build_element("a3", &ring, file.basis, file.curve.a3.as_ref())?;
    let a4 = build_element("a4", &ring, file.basis, file.curve.a4.as_ref())?;
    let a6 = build_element("a6", &ring, file.basis, file.curve.a6.as_ref())?;
    let model = WeierstrassModel::new(ring, [a1, a2, a3, a4, a6]).map_err(|e| match e {
        WeierstrassError::ZeroDiscriminant => InputError::ZeroDiscriminant,
        other => InputError::Ring(other.to_string()),
    })?;
    Ok(ParsedCurve { file, ring, model })
}

pub fn parse_curve_path(path: &std::path::Path) -> Result<ParsedCurve, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError::Json(format!("cannot read {}: {e}", path.display())))?;
    parse_curve_str(&text)
}

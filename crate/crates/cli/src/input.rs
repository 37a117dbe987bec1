//! Payload parsing: raw JSON shapes for each group, validated into typed
//! values at the tolerance given on the command line.
//!
//! Unknown fields are rejected so that handing a twin element to
//! `--group poincare` (or a charged momentum to the plain group) fails as a
//! payload mismatch rather than being silently truncated.

use dyngroups_core::extended::{ChargedMomentum, ExtendedElement};
use dyngroups_core::linalg::Mat4;
use dyngroups_core::minkowski::{FourVector, LorentzMatrix};
use dyngroups_core::poincare::{Momentum, PoincareElement};
use dyngroups_core::twinfold::TwinElement;
use dyngroups_core::{Error as CoreError, Sign};

use crate::CliError;

pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_LORENTZ: i32 = 3;
pub const EXIT_DEGENERATE: i32 = 4;

/// Maps library errors onto the CLI exit-code contract.
pub fn core_error(e: CoreError) -> CliError {
    let code = match e {
        CoreError::NotLorentz { .. } => EXIT_NOT_LORENTZ,
        CoreError::DegenerateMomentum { .. } => EXIT_DEGENERATE,
        CoreError::SingularSystem { .. } => EXIT_PROPERTY_FAILURE,
        _ => EXIT_PARSE,
    };
    CliError::new(code, e.to_string())
}

pub fn parse_error(context: &str, e: impl std::fmt::Display) -> CliError {
    CliError::new(EXIT_PARSE, format!("{context}: {e}"))
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawPoincare {
    #[serde(rename = "L")]
    pub l: [f64; 16],
    #[serde(rename = "C")]
    pub c: [f64; 4],
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawMomentum {
    #[serde(rename = "M")]
    pub m: [f64; 16],
    #[serde(rename = "P")]
    pub p: [f64; 4],
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawChargedMomentum {
    pub q: Vec<f64>,
    #[serde(rename = "M")]
    pub m: [f64; 16],
    #[serde(rename = "P")]
    pub p: [f64; 4],
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawExtended {
    pub nu: f64,
    pub phi: Vec<f64>,
    #[serde(rename = "L")]
    pub l: [f64; 16],
    #[serde(rename = "C")]
    pub c: [f64; 4],
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawTwin {
    pub mu: f64,
    pub nu: f64,
    pub phi: Vec<f64>,
    #[serde(rename = "L_o")]
    pub l_o: [f64; 16],
    #[serde(rename = "C")]
    pub c: [f64; 4],
}

pub fn lorentz_from(raw: &[f64; 16], tol: f64) -> Result<LorentzMatrix, CliError> {
    LorentzMatrix::new(Mat4::from_row_major(raw), tol).map_err(core_error)
}

pub fn four_vector_from(raw: &[f64; 4]) -> Result<FourVector, CliError> {
    FourVector::try_from(*raw).map_err(core_error)
}

pub fn sign_from(raw: f64, field: &str) -> Result<Sign, CliError> {
    Sign::try_from_f64(raw).map_err(|e| parse_error(field, e))
}

impl RawPoincare {
    pub fn into_typed(self, tol: f64) -> Result<PoincareElement, CliError> {
        Ok(PoincareElement::new(
            lorentz_from(&self.l, tol)?,
            four_vector_from(&self.c)?,
        ))
    }
}

impl RawMomentum {
    pub fn into_typed(self, tol: f64) -> Result<Momentum, CliError> {
        Momentum::with_tol(
            Mat4::from_row_major(&self.m),
            four_vector_from(&self.p)?,
            tol,
        )
        .map_err(core_error)
    }
}

impl RawChargedMomentum {
    pub fn into_typed(self, tol: f64) -> Result<ChargedMomentum, CliError> {
        let spacetime = Momentum::with_tol(
            Mat4::from_row_major(&self.m),
            four_vector_from(&self.p)?,
            tol,
        )
        .map_err(core_error)?;
        Ok(ChargedMomentum::new(self.q, spacetime))
    }
}

impl RawExtended {
    pub fn into_typed(self, tol: f64) -> Result<ExtendedElement, CliError> {
        ExtendedElement::new(
            sign_from(self.nu, "nu")?,
            self.phi,
            lorentz_from(&self.l, tol)?,
            four_vector_from(&self.c)?,
        )
        .map_err(core_error)
    }
}

impl RawTwin {
    pub fn into_typed(self, tol: f64) -> Result<TwinElement, CliError> {
        TwinElement::new(
            sign_from(self.mu, "mu")?,
            sign_from(self.nu, "nu")?,
            self.phi,
            lorentz_from(&self.l_o, tol)?,
            four_vector_from(&self.c)?,
        )
        .map_err(core_error)
    }
}

/// The `coadjoint` payload: one element and one momentum of the selected
/// group.
#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoadjointPayload {
    pub element: serde_json::Value,
    pub momentum: serde_json::Value,
}

pub fn from_value<T: serde::de::DeserializeOwned>(
    v: serde_json::Value,
    context: &str,
) -> Result<T, CliError> {
    serde_json::from_value(v).map_err(|e| parse_error(context, e))
}

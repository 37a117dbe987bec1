//! Canonical reduction of a timelike momentum to its sparse normal form,
//! and the spin scalar it exposes.
//!
//! The change of coordinates is realized as a chain of group elements, so
//! the reduction itself is exhibited as a coadjoint action and can be
//! audited or inverted step by step:
//!
//! 1. boost to the rest frame of `P`;
//! 2. cancel the passage vector with a space-time translation;
//! 3. rotate the remaining spin vector onto the z-axis;
//! 4. (optional) re-boost along z so a single momentum component survives.
//!
//! The default normal form is the rest-frame one (`p = 0`); the boosted form
//! keeps `P = (0, 0, p, E)` with the input energy.

use crate::error::{Error, Result};
use crate::linalg::norm3;
use crate::minkowski::{boost, rotation, FourVector, LorentzMatrix};
use crate::poincare::{coadjoint, mass_squared, Momentum, PoincareElement};

/// Reduction is defined for timelike momenta only: `mass² > MASS_SQUARED_TOL`.
pub const MASS_SQUARED_TOL: f64 = 1e-9;

/// The sparse normal form of a momentum: spin scalar `s`, surviving momentum
/// component `p` (zero in the rest-frame form), energy `E`, and the group
/// element that carries the input momentum onto this form.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CanonicalMomentum {
    pub s: f64,
    pub p: f64,
    #[serde(rename = "E")]
    pub e: f64,
    pub g_reducing: PoincareElement,
}

impl CanonicalMomentum {
    /// The momentum this normal form denotes: `l = (0, 0, s)`, zero passage,
    /// `P = (0, 0, p, E)`.
    pub fn to_momentum(&self) -> Momentum {
        Momentum::from_parts(
            [0.0, 0.0, self.s],
            [0.0; 3],
            FourVector::new(0.0, 0.0, self.p, self.e),
        )
    }

    /// Undoes the reduction: applies `g_reducing^-1` to the normal form,
    /// recovering the input momentum up to roundoff.
    pub fn reconstruct(&self) -> Momentum {
        coadjoint(&self.g_reducing.inverse(), &self.to_momentum())
    }
}

/// Neutral boost `B` with `B P = (0, 0, 0, sign(E) m)` for timelike `P`.
// a NaN mass-squared must be rejected, hence the negated comparison
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn rest_frame_boost(p: &FourVector) -> Result<LorentzMatrix> {
    let m2 = mass_squared(p);
    if !(m2 > MASS_SQUARED_TOL) {
        return Err(Error::DegenerateMomentum {
            mass_squared: m2,
            tol: MASS_SQUARED_TOL,
        });
    }
    let spatial = p.spatial();
    let pl = norm3(spatial);
    if pl == 0.0 {
        return Ok(LorentzMatrix::IDENTITY);
    }
    let axis = [spatial[0] / pl, spatial[1] / pl, spatial[2] / pl];
    // tanh(ρ) = -|p|/E zeroes the spatial part; |p| < |E| holds for
    // timelike momenta, so atanh is well defined.
    let rho = -(pl / p.t()).atanh();
    boost(axis, rho)
}

/// Rotation carrying a nonzero 3-vector onto the +z axis.
fn rotation_to_z(l: [f64; 3]) -> LorentzMatrix {
    let n = norm3(l);
    let perp = (l[0] * l[0] + l[1] * l[1]).sqrt();
    if perp <= 1e-14 * n {
        return if l[2] >= 0.0 {
            LorentzMatrix::IDENTITY
        } else {
            rotation([1.0, 0.0, 0.0], std::f64::consts::PI).expect("unit axis")
        };
    }
    let axis = [l[1] / perp, -l[0] / perp, 0.0];
    let angle = (l[2] / n).clamp(-1.0, 1.0).acos();
    rotation(axis, angle).expect("constructed axis is unit")
}

/// Rest-frame stage shared by the reduction entry points: returns the
/// momentum after boosting to the rest frame and cancelling the passage
/// vector, together with the element applied so far.
fn rest_frame_stage(j: &Momentum) -> Result<(Momentum, PoincareElement)> {
    let g1 = PoincareElement::lorentz_of(rest_frame_boost(j.p())?);
    let j1 = coadjoint(&g1, j);
    let e_rest = j1.p().t();
    let f = j1.passage();
    let g2 = PoincareElement::translation_of(FourVector::new(
        -f[0] / e_rest,
        -f[1] / e_rest,
        -f[2] / e_rest,
        0.0,
    ));
    let j2 = coadjoint(&g2, &j1);
    Ok((j2, g2.compose(&g1)))
}

fn reduce(j: &Momentum, reboost: bool) -> Result<CanonicalMomentum> {
    let (j2, g12) = rest_frame_stage(j)?;
    let l = j2.spin_vector();
    let s = norm3(l);
    let g3 = PoincareElement::lorentz_of(if s == 0.0 {
        LorentzMatrix::IDENTITY
    } else {
        rotation_to_z(l)
    });
    let j3 = coadjoint(&g3, &j2);
    let g123 = g3.compose(&g12);

    if !reboost {
        return Ok(CanonicalMomentum {
            s,
            p: 0.0,
            e: j3.p().t(),
            g_reducing: g123,
        });
    }

    let pl = norm3(j.p().spatial());
    if pl == 0.0 {
        return Ok(CanonicalMomentum {
            s,
            p: 0.0,
            e: j3.p().t(),
            g_reducing: g123,
        });
    }
    // restore the input momentum magnitude along z (and with it the input
    // energy): tanh(ρ) = |p|/E
    let rho = (pl / j.p().t()).atanh();
    let g4 = PoincareElement::lorentz_of(boost([0.0, 0.0, 1.0], rho)?);
    let j4 = coadjoint(&g4, &j3);
    Ok(CanonicalMomentum {
        s,
        p: j4.p().z(),
        e: j4.p().t(),
        g_reducing: g4.compose(&g123),
    })
}

/// Reduces a timelike momentum to the rest-frame normal form
/// (`p = 0`, `E = sign(E) m`, `M` holding only the `±s` pair).
pub fn canonical_reduce(j: &Momentum) -> Result<CanonicalMomentum> {
    reduce(j, false)
}

/// As [`canonical_reduce`] but with the optional step 4: the output keeps a
/// single momentum component `p` equal to the input `|p|` and the input
/// energy.
pub fn canonical_reduce_boosted(j: &Momentum) -> Result<CanonicalMomentum> {
    reduce(j, true)
}

/// The spin scalar: magnitude of the spin vector evaluated in the rest frame
/// after passage cancellation. Invariant under every coadjoint action of the
/// groups in this crate, antichron and fold-changing elements included.
pub fn spin_scalar(j: &Momentum) -> Result<f64> {
    let (j2, _) = rest_frame_stage(j)?;
    Ok(norm3(j2.spin_vector()))
}

//! Dynamical groups over Minkowski space and their coadjoint actions.
//!
//! The crate implements four matrix groups acting on momentum space:
//!
//! * the Poincaré group (Lorentz matrices plus space-time translations),
//! * its trivial one-charge extension (fifth dimension, `q' = q`),
//! * the eight-connected-component charged group (`q' = νq`),
//! * the twin-fold group acting on a two-sheet cover of space-time
//!   (`q' = μνq`, `P' = μ L_o P`, fold index flipped by `μ = -1`).
//!
//! For every group the adjoint action is computed by explicit matrix
//! conjugation of embedded block matrices, the coadjoint action by closed
//! formulas, and a brute-force duality oracle ([`oracle`]) reconstructs the
//! coadjoint action from invariance of the pairing scalar alone. The three
//! routes are cross-checked by the verification suites in [`verify`].
//!
//! Conventions: coordinates ordered `(x, y, z, t)`, metric
//! `G = diag(-1, -1, -1, +1)`, `c = 1`. Matrices serialize as row-major
//! 16-entry JSON arrays, four-vectors as `[x, y, z, t]`.
//!
//! All values are immutable after construction and all operations are pure
//! functions; everything here is safe to share across threads.

// Block-matrix code reads better with explicit row/column indices.
#![allow(clippy::needless_range_loop)]

pub mod error;
pub mod extended;
pub mod linalg;
pub mod minkowski;
pub mod oracle;
pub mod poincare;
pub mod reduction;
pub mod sample;
pub mod sign;
pub mod twinfold;
pub mod verify;

pub use error::{Error, Result};
pub use sign::Sign;

/// Default validation tolerance for constructed matrices.
///
/// Double-precision products of up to ~10 boost/rotation factors keep the
/// metric residual well below this.
pub const DEFAULT_TOL: f64 = 1e-9;

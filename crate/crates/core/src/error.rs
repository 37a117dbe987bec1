use crate::minkowski::ConnectedComponent;

/// Errors produced by constructors and group operations.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("not a Lorentz matrix: |tLGL - G| = {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotLorentz { residual: f64, tol: f64 },

    #[error("matrix is not antisymmetric: |M + tM| = {residual:.3e} exceeds tolerance {tol:.3e}")]
    NotAntisymmetric { residual: f64, tol: f64 },

    #[error("axis must be a unit 3-vector, got one of norm {norm}")]
    NonUnitAxis { norm: f64 },

    #[error("non-finite component in {context}")]
    NonFinite { context: &'static str },

    #[error("sign must be +1 or -1, got {0}")]
    InvalidSign(f64),

    #[error("charge-dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("degenerate momentum: mass squared {mass_squared:.3e} is not above {tol:.3e}; only timelike momenta reduce")]
    DegenerateMomentum { mass_squared: f64, tol: f64 },

    #[error("Lorentz part must be orthochron, found the {found} component")]
    NotOrthochron { found: ConnectedComponent },

    #[error("singular pairing system: pivot {pivot:.3e} below threshold (dimension or basis bug)")]
    SingularSystem { pivot: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

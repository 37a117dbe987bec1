//! Minkowski space: the Gram matrix, four-vectors, Lorentz matrices and
//! their four connected components.
//!
//! Conventions used everywhere in this crate:
//! * coordinate order is `(x, y, z, t)`;
//! * metric signature is `(-, -, -, +)`, i.e. `G = diag(-1, -1, -1, +1)`;
//! * `c = 1`.

use crate::error::{Error, Result};
use crate::linalg::{norm3, Mat4};
use crate::sign::Sign;
use crate::DEFAULT_TOL;

/// The Gram matrix `G = diag(-1, -1, -1, +1)`.
///
/// Satisfies `G G = 1` and `tG = G`; it is itself a Lorentz matrix (the
/// space-reversing one).
pub const GRAM: Mat4 = Mat4([
    [-1.0, 0.0, 0.0, 0.0],
    [0.0, -1.0, 0.0, 0.0],
    [0.0, 0.0, -1.0, 0.0],
    [0.0, 0.0, 0.0, 1.0],
]);

/// A space-time point or translation, stored as `(x, y, z, t)`.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(into = "[f64; 4]", try_from = "[f64; 4]")]
pub struct FourVector(pub [f64; 4]);

impl FourVector {
    pub const ZERO: FourVector = FourVector([0.0; 4]);

    pub fn new(x: f64, y: f64, z: f64, t: f64) -> Self {
        FourVector([x, y, z, t])
    }

    pub fn x(&self) -> f64 {
        self.0[0]
    }
    pub fn y(&self) -> f64 {
        self.0[1]
    }
    pub fn z(&self) -> f64 {
        self.0[2]
    }
    pub fn t(&self) -> f64 {
        self.0[3]
    }

    /// Spatial part `(x, y, z)`.
    pub fn spatial(&self) -> [f64; 3] {
        [self.0[0], self.0[1], self.0[2]]
    }

    pub fn add(&self, rhs: &FourVector) -> FourVector {
        FourVector([
            self.0[0] + rhs.0[0],
            self.0[1] + rhs.0[1],
            self.0[2] + rhs.0[2],
            self.0[3] + rhs.0[3],
        ])
    }

    pub fn neg(&self) -> FourVector {
        FourVector([-self.0[0], -self.0[1], -self.0[2], -self.0[3]])
    }

    pub fn scale(&self, s: f64) -> FourVector {
        FourVector([s * self.0[0], s * self.0[1], s * self.0[2], s * self.0[3]])
    }

    /// Exact discrete-sign application (negation, never a multiply).
    pub fn apply_sign(&self, s: Sign) -> FourVector {
        match s {
            Sign::Plus => *self,
            Sign::Minus => self.neg(),
        }
    }

    pub fn max_abs_diff(&self, rhs: &FourVector) -> f64 {
        self.0
            .iter()
            .zip(rhs.0.iter())
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()))
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().all(|c| c.is_finite())
    }
}

impl From<FourVector> for [f64; 4] {
    fn from(v: FourVector) -> [f64; 4] {
        v.0
    }
}

impl TryFrom<[f64; 4]> for FourVector {
    type Error = Error;
    fn try_from(v: [f64; 4]) -> Result<FourVector> {
        let out = FourVector(v);
        if !out.is_finite() {
            return Err(Error::NonFinite {
                context: "four-vector",
            });
        }
        Ok(out)
    }
}

/// Minkowski inner product `ta G b = a_t b_t - a_x b_x - a_y b_y - a_z b_z`.
pub fn minkowski_inner(a: &FourVector, b: &FourVector) -> f64 {
    a.t() * b.t() - a.x() * b.x() - a.y() * b.y() - a.z() * b.z()
}

/// The four connected components of the Lorentz group, keyed by
/// `(sign det L, sign L[t][t])`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub enum ConnectedComponent {
    /// `L_n`: contains the identity; a subgroup.
    Neutral,
    /// `L_s`: reverses space, not time.
    SpaceReversing,
    /// `L_t`: reverses time, not space.
    TimeReversing,
    /// `L_st = -L_n`: reverses both.
    SpaceTimeReversing,
}

impl ConnectedComponent {
    fn from_signs(det_sign: Sign, time_sign: Sign) -> Self {
        match (det_sign, time_sign) {
            (Sign::Plus, Sign::Plus) => ConnectedComponent::Neutral,
            (Sign::Minus, Sign::Plus) => ConnectedComponent::SpaceReversing,
            (Sign::Minus, Sign::Minus) => ConnectedComponent::TimeReversing,
            (Sign::Plus, Sign::Minus) => ConnectedComponent::SpaceTimeReversing,
        }
    }

    /// Orthochron components preserve time orientation; they form a subgroup.
    pub fn is_orthochron(self) -> bool {
        matches!(
            self,
            ConnectedComponent::Neutral | ConnectedComponent::SpaceReversing
        )
    }

    /// The antichron subset reverses time orientation; it is not a subgroup.
    pub fn is_antichron(self) -> bool {
        !self.is_orthochron()
    }

    /// μ: sign of the time-time entry; `+1` on the orthochron set.
    pub fn time_sign(self) -> Sign {
        if self.is_orthochron() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn det_sign(self) -> Sign {
        match self {
            ConnectedComponent::Neutral | ConnectedComponent::SpaceTimeReversing => Sign::Plus,
            _ => Sign::Minus,
        }
    }

    /// Component of the product of elements from two components.
    pub fn compose(self, rhs: ConnectedComponent) -> ConnectedComponent {
        ConnectedComponent::from_signs(
            self.det_sign() * rhs.det_sign(),
            self.time_sign() * rhs.time_sign(),
        )
    }
}

impl std::fmt::Display for ConnectedComponent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            ConnectedComponent::Neutral => "Neutral",
            ConnectedComponent::SpaceReversing => "SpaceReversing",
            ConnectedComponent::TimeReversing => "TimeReversing",
            ConnectedComponent::SpaceTimeReversing => "SpaceTimeReversing",
        };
        f.write_str(name)
    }
}

/// Residual of the defining relation, `max |tL G L - G|`.
pub fn lorentz_residual(m: &Mat4) -> f64 {
    m.transpose().mul(&GRAM).mul(m).max_abs_diff(&GRAM)
}

/// True iff `tm G m = G` within `tol`.
pub fn is_lorentz(m: &Mat4, tol: f64) -> bool {
    m.is_finite() && lorentz_residual(m) <= tol
}

/// A validated Lorentz matrix with its cached connected component.
///
/// Any exact Lorentz matrix has `|det L| = 1` and `|L[t][t]| >= 1`, so the
/// two classifying signs are bounded away from zero and classification
/// needs no tie-breaking.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LorentzMatrix {
    m: Mat4,
    component: ConnectedComponent,
}

impl LorentzMatrix {
    pub const IDENTITY: LorentzMatrix = LorentzMatrix {
        m: Mat4::IDENTITY,
        component: ConnectedComponent::Neutral,
    };

    /// Validates `tm G m = G` within `tol` and classifies the component.
    pub fn new(m: Mat4, tol: f64) -> Result<Self> {
        if !m.is_finite() {
            return Err(Error::NonFinite {
                context: "Lorentz matrix",
            });
        }
        let residual = lorentz_residual(&m);
        if residual > tol {
            return Err(Error::NotLorentz { residual, tol });
        }
        Ok(Self::from_validated(m))
    }

    /// As `new` with the crate default tolerance.
    pub fn try_from_mat(m: Mat4) -> Result<Self> {
        Self::new(m, DEFAULT_TOL)
    }

    /// Classifies without re-checking the metric relation. For matrices
    /// produced by operations that preserve it (products, negation,
    /// inversion of validated inputs).
    pub(crate) fn from_validated(m: Mat4) -> Self {
        let component =
            ConnectedComponent::from_signs(Sign::of(m.det()), Sign::of(m.0[3][3]));
        LorentzMatrix { m, component }
    }

    pub fn matrix(&self) -> &Mat4 {
        &self.m
    }

    pub fn component(&self) -> ConnectedComponent {
        self.component
    }

    /// μ = sign of the time-time entry.
    pub fn mu(&self) -> Sign {
        self.component.time_sign()
    }

    pub fn residual(&self) -> f64 {
        lorentz_residual(&self.m)
    }

    pub fn compose(&self, rhs: &LorentzMatrix) -> LorentzMatrix {
        Self::from_validated(self.m.mul(&rhs.m))
    }

    /// Exact inverse `L^-1 = G tL G`: a transposition plus sign flips, so no
    /// rounding is introduced. The component is unchanged.
    pub fn inverse(&self) -> LorentzMatrix {
        let m = &self.m.0;
        let inv = Mat4::from_fn(|i, j| {
            // (G tL G)[i][j] = G[i][i] * m[j][i] * G[j][j]
            let gi = if i == 3 { 1.0 } else { -1.0 };
            let gj = if j == 3 { 1.0 } else { -1.0 };
            gi * gj * m[j][i]
        });
        LorentzMatrix {
            m: inv,
            component: self.component,
        }
    }

    /// `-L`; swaps Neutral <-> SpaceTimeReversing and
    /// SpaceReversing <-> TimeReversing (exact entry negation).
    pub fn negate(&self) -> LorentzMatrix {
        Self::from_validated(self.m.neg())
    }

    /// Applies a discrete sign: `Plus` is the identity, `Minus` negates.
    pub fn apply_sign(&self, s: Sign) -> LorentzMatrix {
        match s {
            Sign::Plus => *self,
            Sign::Minus => self.negate(),
        }
    }

    pub fn apply(&self, v: &FourVector) -> FourVector {
        FourVector(self.m.mul_vec(v.0))
    }

    /// Global sign decomposition `L = μ L_o` with `L_o` orthochron.
    pub fn orthochron_decompose(&self) -> (Sign, LorentzMatrix) {
        let mu = self.mu();
        (mu, self.apply_sign(mu))
    }
}

/// `classify_component` as a free function over validated matrices.
pub fn classify_component(l: &LorentzMatrix) -> ConnectedComponent {
    l.component()
}

fn unit_axis(axis: [f64; 3], tol: f64) -> Result<[f64; 3]> {
    let n = norm3(axis);
    if !n.is_finite() || (n - 1.0).abs() > tol {
        return Err(Error::NonUnitAxis { norm: n });
    }
    Ok(axis)
}

/// Pure boost along a unit axis with the given rapidity; always lands in the
/// neutral component. `boost(axis, 0)` is the identity.
pub fn boost(axis: [f64; 3], rapidity: f64) -> Result<LorentzMatrix> {
    if !rapidity.is_finite() {
        return Err(Error::NonFinite { context: "rapidity" });
    }
    let n = unit_axis(axis, DEFAULT_TOL)?;
    let (ch, sh) = (rapidity.cosh(), rapidity.sinh());
    let mut m = Mat4::IDENTITY;
    for i in 0..3 {
        for j in 0..3 {
            m.0[i][j] = (if i == j { 1.0 } else { 0.0 }) + (ch - 1.0) * n[i] * n[j];
        }
        m.0[i][3] = sh * n[i];
        m.0[3][i] = sh * n[i];
    }
    m.0[3][3] = ch;
    Ok(LorentzMatrix {
        m,
        component: ConnectedComponent::Neutral,
    })
}

/// Spatial rotation about a unit axis (Rodrigues); time row and column are
/// untouched. Always neutral.
pub fn rotation(axis: [f64; 3], angle: f64) -> Result<LorentzMatrix> {
    if !angle.is_finite() {
        return Err(Error::NonFinite { context: "angle" });
    }
    let n = unit_axis(axis, DEFAULT_TOL)?;
    let (s, c) = angle.sin_cos();
    let mut m = Mat4::IDENTITY;
    for i in 0..3 {
        for j in 0..3 {
            let eps = |i: usize, j: usize, k: usize| -> f64 {
                match (i, j, k) {
                    (0, 1, 2) | (1, 2, 0) | (2, 0, 1) => 1.0,
                    (0, 2, 1) | (2, 1, 0) | (1, 0, 2) => -1.0,
                    _ => 0.0,
                }
            };
            let delta = if i == j { 1.0 } else { 0.0 };
            let skew: f64 = (0..3).map(|k| -eps(i, j, k) * n[k]).sum();
            m.0[i][j] = c * delta + (1.0 - c) * n[i] * n[j] + s * skew;
        }
    }
    Ok(LorentzMatrix {
        m,
        component: ConnectedComponent::Neutral,
    })
}

/// The diagonal factor `Ω(α, β) = diag(α, α, α, β)`.
///
/// Multiplying a neutral matrix by `Ω` reaches the other three components:
/// `Ω(-1, 1) L_n ⊂ L_s`, `Ω(1, -1) L_n ⊂ L_t`, `Ω(-1, -1) L_n = -L_n ⊂ L_st`.
pub fn omega_factor(alpha: Sign, beta: Sign) -> LorentzMatrix {
    let a = alpha.value();
    let b = beta.value();
    LorentzMatrix::from_validated(Mat4::diagonal([a, a, a, b]))
}

impl serde::Serialize for LorentzMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.m.to_row_major().serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for LorentzMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = <[f64; 16]>::deserialize(d)?;
        LorentzMatrix::try_from_mat(Mat4::from_row_major(&raw)).map_err(serde::de::Error::custom)
    }
}

//! The Poincaré group `x -> Lx + C` and its coadjoint action on the
//! ten-component momentum `J = {M, P}`.
//!
//! The adjoint action is computed by explicit conjugation of embedded 5x5
//! matrices, so it cannot drift from the group law; the closed formulas
//! serve as test assertions. The coadjoint action is implemented both as the
//! component formula and as the matrix form `J' = g J tg`; the duality
//! oracle provides a third, independent route. All three must agree.

use crate::error::{Error, Result};
use crate::linalg::{outer, DMat, Mat4};
use crate::minkowski::{minkowski_inner, FourVector, LorentzMatrix, GRAM};
use crate::DEFAULT_TOL;

/// A Poincaré group element `(L, C)` acting as `x -> Lx + C`.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct PoincareElement {
    #[serde(rename = "L")]
    pub lorentz: LorentzMatrix,
    #[serde(rename = "C")]
    pub translation: FourVector,
}

impl PoincareElement {
    pub const IDENTITY: PoincareElement = PoincareElement {
        lorentz: LorentzMatrix::IDENTITY,
        translation: FourVector::ZERO,
    };

    pub fn new(lorentz: LorentzMatrix, translation: FourVector) -> Self {
        PoincareElement {
            lorentz,
            translation,
        }
    }

    /// Pure translation `(1, C)`.
    pub fn translation_of(c: FourVector) -> Self {
        Self::new(LorentzMatrix::IDENTITY, c)
    }

    /// Pure Lorentz transformation `(L, 0)`.
    pub fn lorentz_of(l: LorentzMatrix) -> Self {
        Self::new(l, FourVector::ZERO)
    }

    /// Group law `(L_a, C_a)(L_b, C_b) = (L_a L_b, L_a C_b + C_a)`.
    pub fn compose(&self, rhs: &PoincareElement) -> PoincareElement {
        PoincareElement {
            lorentz: self.lorentz.compose(&rhs.lorentz),
            translation: self.lorentz.apply(&rhs.translation).add(&self.translation),
        }
    }

    /// `(L, C)^-1 = (L^-1, -L^-1 C)`.
    pub fn inverse(&self) -> PoincareElement {
        let l_inv = self.lorentz.inverse();
        let c_inv = l_inv.apply(&self.translation).neg();
        PoincareElement {
            lorentz: l_inv,
            translation: c_inv,
        }
    }

    pub fn act_on_point(&self, x: &FourVector) -> FourVector {
        self.lorentz.apply(x).add(&self.translation)
    }

    /// Block embedding `[[L, C], [0, 1]]`.
    pub fn embed(&self) -> DMat {
        let l = self.lorentz.matrix();
        DMat::from_fn(5, 5, |i, j| match (i, j) {
            (4, 4) => 1.0,
            (4, _) => 0.0,
            (_, 4) => self.translation.0[i],
            _ => l.0[i][j],
        })
    }
}

/// A tangent vector at the identity: antisymmetric `ω` and translation
/// part `γ`. The embedded form is `[[Gω, γ], [0, 0]]` (`δL = Gω`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LieElement {
    omega: Mat4,
    gamma: FourVector,
}

impl LieElement {
    pub const ZERO: LieElement = LieElement {
        omega: Mat4::ZERO,
        gamma: FourVector::ZERO,
    };

    pub fn new(omega: Mat4, gamma: FourVector) -> Result<Self> {
        Self::with_tol(omega, gamma, DEFAULT_TOL)
    }

    pub fn with_tol(omega: Mat4, gamma: FourVector, tol: f64) -> Result<Self> {
        let residual = omega.antisymmetry_residual();
        if residual > tol {
            return Err(Error::NotAntisymmetric { residual, tol });
        }
        Ok(LieElement { omega, gamma })
    }

    /// Builds `ω` from rotation parameters (spatial antisymmetric part, in
    /// the spin-vector pattern) and boost parameters (space-time entries).
    pub fn from_generators(rot: [f64; 3], boost: [f64; 3], gamma: FourVector) -> Self {
        let mut omega = hat3(rot);
        for i in 0..3 {
            omega.0[i][3] = boost[i];
            omega.0[3][i] = -boost[i];
        }
        LieElement { omega, gamma }
    }

    // Antisymmetry of adjoint outputs holds mathematically (up to roundoff)
    // and is covered by the verification suites; no check here so that the
    // fault-injected negative controls can flow through unimpeded.
    pub(crate) fn from_raw_unchecked(omega: Mat4, gamma: FourVector) -> Self {
        LieElement { omega, gamma }
    }

    pub fn omega(&self) -> &Mat4 {
        &self.omega
    }

    pub fn gamma(&self) -> &FourVector {
        &self.gamma
    }

    /// Block embedding `[[Gω, γ], [0, 0]]`.
    pub fn embed(&self) -> DMat {
        let dl = GRAM.mul(&self.omega);
        DMat::from_fn(5, 5, |i, j| match (i, j) {
            (4, _) => 0.0,
            (_, 4) => self.gamma.0[i],
            _ => dl.0[i][j],
        })
    }

    pub fn max_abs_diff(&self, rhs: &LieElement) -> f64 {
        self.omega
            .max_abs_diff(&rhs.omega)
            .max(self.gamma.max_abs_diff(&rhs.gamma))
    }
}

impl serde::Serialize for LieElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("LieElement", 2)?;
        st.serialize_field("omega", &self.omega.to_row_major())?;
        st.serialize_field("gamma", &self.gamma)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for LieElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            omega: [f64; 16],
            gamma: FourVector,
        }
        let raw = Raw::deserialize(d)?;
        LieElement::new(Mat4::from_row_major(&raw.omega), raw.gamma)
            .map_err(serde::de::Error::custom)
    }
}

/// The antisymmetric spatial pattern housing a 3-vector `v`:
/// entries `m[1][0] = v_z`, `m[0][2] = v_y`, `m[2][1] = v_x` and their
/// negatives across the diagonal.
pub(crate) fn hat3(v: [f64; 3]) -> Mat4 {
    let mut m = Mat4::ZERO;
    m.0[0][1] = -v[2];
    m.0[1][0] = v[2];
    m.0[0][2] = v[1];
    m.0[2][0] = -v[1];
    m.0[1][2] = -v[0];
    m.0[2][1] = v[0];
    m
}

/// Adjoint action `d -> g d g^-1`, computed by conjugating the embedded 5x5
/// matrices.
pub fn adjoint(g: &PoincareElement, d: &LieElement) -> LieElement {
    let conj = g.embed().mul(&d.embed()).mul(&g.inverse().embed());
    let delta_l = Mat4::from_fn(|i, j| conj[(i, j)]);
    let gamma = FourVector([conj[(0, 4)], conj[(1, 4)], conj[(2, 4)], conj[(3, 4)]]);
    // δL' = G ω'  =>  ω' = G δL'
    LieElement::from_raw_unchecked(GRAM.mul(&delta_l), gamma)
}

/// The momentum `J = {M, P}`: antisymmetric `M` (spin vector and passage
/// vector) plus the energy-momentum four-vector `P = (p_x, p_y, p_z, E)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Momentum {
    m: Mat4,
    p: FourVector,
}

impl Momentum {
    pub fn new(m: Mat4, p: FourVector) -> Result<Self> {
        Self::with_tol(m, p, DEFAULT_TOL)
    }

    pub fn with_tol(m: Mat4, p: FourVector, tol: f64) -> Result<Self> {
        let residual = m.antisymmetry_residual();
        if residual > tol {
            return Err(Error::NotAntisymmetric { residual, tol });
        }
        Ok(Momentum { m, p })
    }

    /// Builds `M` from spin vector `l` and passage vector `f`; exactly
    /// antisymmetric by construction.
    pub fn from_parts(l: [f64; 3], passage: [f64; 3], p: FourVector) -> Self {
        Momentum {
            m: recompose_m(l, passage),
            p,
        }
    }

    // See LieElement::from_raw_unchecked on why this does not re-validate.
    pub(crate) fn from_raw_unchecked(m: Mat4, p: FourVector) -> Self {
        Momentum { m, p }
    }

    pub fn m(&self) -> &Mat4 {
        &self.m
    }

    pub fn p(&self) -> &FourVector {
        &self.p
    }

    pub fn energy(&self) -> f64 {
        self.p.t()
    }

    /// Spin vector `l = (M[2][1], M[0][2], M[1][0])`.
    pub fn spin_vector(&self) -> [f64; 3] {
        [self.m.0[2][1], self.m.0[0][2], self.m.0[1][0]]
    }

    /// Passage vector `f = (M[0][3], M[1][3], M[2][3])`.
    pub fn passage(&self) -> [f64; 3] {
        [self.m.0[0][3], self.m.0[1][3], self.m.0[2][3]]
    }

    /// Serialized coordinate order `(E, p_x, p_y, p_z, f_x, f_y, f_z,
    /// l_x, l_y, l_z)`.
    pub fn coords(&self) -> [f64; 10] {
        let l = self.spin_vector();
        let f = self.passage();
        [
            self.p.t(),
            self.p.x(),
            self.p.y(),
            self.p.z(),
            f[0],
            f[1],
            f[2],
            l[0],
            l[1],
            l[2],
        ]
    }

    pub fn from_coords(c: &[f64; 10]) -> Self {
        Momentum::from_parts(
            [c[7], c[8], c[9]],
            [c[4], c[5], c[6]],
            FourVector::new(c[1], c[2], c[3], c[0]),
        )
    }

    pub fn max_abs_diff(&self, rhs: &Momentum) -> f64 {
        self.m
            .max_abs_diff(&rhs.m)
            .max(self.p.max_abs_diff(&rhs.p))
    }
}

impl serde::Serialize for Momentum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Momentum", 2)?;
        st.serialize_field("M", &self.m.to_row_major())?;
        st.serialize_field("P", &self.p)?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for Momentum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            #[serde(rename = "M")]
            m: [f64; 16],
            #[serde(rename = "P")]
            p: FourVector,
        }
        let raw = Raw::deserialize(d)?;
        Momentum::new(Mat4::from_row_major(&raw.m), raw.p).map_err(serde::de::Error::custom)
    }
}

/// Decomposes an antisymmetric matrix into `(spin vector, passage vector)`.
pub fn spin_passage_decompose(m: &Mat4, tol: f64) -> Result<([f64; 3], [f64; 3])> {
    let residual = m.antisymmetry_residual();
    if residual > tol {
        return Err(Error::NotAntisymmetric { residual, tol });
    }
    Ok((
        [m.0[2][1], m.0[0][2], m.0[1][0]],
        [m.0[0][3], m.0[1][3], m.0[2][3]],
    ))
}

/// Rebuilds `M` from `(spin vector, passage vector)`; inverse of
/// [`spin_passage_decompose`].
pub fn recompose_m(l: [f64; 3], passage: [f64; 3]) -> Mat4 {
    let mut m = hat3(l);
    for i in 0..3 {
        m.0[i][3] = passage[i];
        m.0[3][i] = -passage[i];
    }
    m
}

/// Sign factors applied to the transcribed coadjoint formula. The default
/// (all `+1`) is the formula itself; flipping any single factor models a
/// transcription error and must be caught by the verification suites.
#[derive(Clone, Copy, Debug)]
pub(crate) struct CoadjointSigns {
    /// `P' = p_sign * (L P)`
    pub p_sign: f64,
    /// `M' = mm * (L M tL) + ...`
    pub mm: f64,
    /// `... + cp * (C tP') ...`
    pub cp: f64,
    /// `... - pc * (P' tC)`
    pub pc: f64,
}

impl Default for CoadjointSigns {
    fn default() -> Self {
        CoadjointSigns {
            p_sign: 1.0,
            mm: 1.0,
            cp: 1.0,
            pc: 1.0,
        }
    }
}

pub(crate) fn coadjoint_signed(
    g: &PoincareElement,
    j: &Momentum,
    signs: &CoadjointSigns,
) -> Momentum {
    let l = g.lorentz.matrix();
    let c = g.translation;
    let p_new = FourVector(l.mul_vec(j.p.0)).scale(signs.p_sign);
    let lmlt = l.mul(&j.m).mul(&l.transpose());
    let m_new = lmlt
        .scale(signs.mm)
        .add(&outer(c.0, p_new.0).scale(signs.cp))
        .sub(&outer(p_new.0, c.0).scale(signs.pc));
    Momentum::from_raw_unchecked(m_new, p_new)
}

/// Coadjoint action in component form:
/// `P' = LP`, `M' = L M tL + C tP' - P' tC`.
pub fn coadjoint(g: &PoincareElement, j: &Momentum) -> Momentum {
    coadjoint_signed(g, j, &CoadjointSigns::default())
}

/// The momentum arranged as the antisymmetric 5x5 matrix
/// `[[M, -P], [tP, 0]]`, on which the coadjoint action is the congruence
/// `J' = g J tg`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MomentumMatrix {
    m: [[f64; 5]; 5],
}

impl MomentumMatrix {
    pub fn from_momentum(j: &Momentum) -> Self {
        let mut m = [[0.0; 5]; 5];
        for i in 0..4 {
            for k in 0..4 {
                m[i][k] = j.m.0[i][k];
            }
            m[i][4] = -j.p.0[i];
            m[4][i] = j.p.0[i];
        }
        MomentumMatrix { m }
    }

    /// Validates antisymmetry of the raw 5x5 block matrix (which is exactly
    /// the consistency of the off-blocks with a single `P`).
    pub fn new(m: [[f64; 5]; 5], tol: f64) -> Result<Self> {
        let mut residual = 0.0_f64;
        for (i, row) in m.iter().enumerate() {
            for (k, entry) in row.iter().enumerate() {
                residual = residual.max((entry + m[k][i]).abs());
            }
        }
        if residual > tol {
            return Err(Error::NotAntisymmetric { residual, tol });
        }
        Ok(MomentumMatrix { m })
    }

    pub fn entries(&self) -> &[[f64; 5]; 5] {
        &self.m
    }

    pub fn to_momentum(&self) -> Momentum {
        let mut m4 = Mat4::ZERO;
        for i in 0..4 {
            for k in 0..4 {
                m4.0[i][k] = self.m[i][k];
            }
        }
        Momentum::from_raw_unchecked(
            m4,
            FourVector([self.m[4][0], self.m[4][1], self.m[4][2], self.m[4][3]]),
        )
    }

    pub fn max_abs_diff(&self, rhs: &MomentumMatrix) -> f64 {
        let mut out = 0.0_f64;
        for i in 0..5 {
            for k in 0..5 {
                out = out.max((self.m[i][k] - rhs.m[i][k]).abs());
            }
        }
        out
    }
}

fn mul5(a: &[[f64; 5]; 5], b: &[[f64; 5]; 5]) -> [[f64; 5]; 5] {
    let mut out = [[0.0; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            out[i][j] = (0..5).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

/// Coadjoint action in matrix form, `J' = g J tg`, computed as an explicit
/// 5x5 triple product.
pub fn coadjoint_matrix(g: &PoincareElement, jm: &MomentumMatrix) -> MomentumMatrix {
    let l = g.lorentz.matrix();
    let mut g5 = [[0.0; 5]; 5];
    for i in 0..4 {
        for k in 0..4 {
            g5[i][k] = l.0[i][k];
        }
        g5[i][4] = g.translation.0[i];
    }
    g5[4][4] = 1.0;
    let mut g5t = [[0.0; 5]; 5];
    for i in 0..5 {
        for k in 0..5 {
            g5t[i][k] = g5[k][i];
        }
    }
    MomentumMatrix {
        m: mul5(&mul5(&g5, &jm.m), &g5t),
    }
}

/// The invariant pairing `S = 1/2 Tr(M ω) + tP G γ`, whose conservation
/// under simultaneous adjoint/coadjoint mappings defines the duality.
pub fn invariant_scalar(j: &Momentum, d: &LieElement) -> f64 {
    let mut trace = 0.0;
    for i in 0..4 {
        for k in 0..4 {
            trace += j.m.0[i][k] * d.omega.0[k][i];
        }
    }
    0.5 * trace + minkowski_inner(&j.p, &d.gamma)
}

/// `P^2 = tP G P = E^2 - |p|^2`, conserved by the coadjoint action.
pub fn mass_squared(p: &FourVector) -> f64 {
    minkowski_inner(p, p)
}

//! Charged extensions of the Poincaré group.
//!
//! One implementation covers the trivial one-charge extension (fifth
//! dimension ζ, ν fixed to +1), the eight-connected-component group
//! (ν = ±1, which reverses ζ and the charge), and the n-charge
//! generalization: the number of charge dimensions is a runtime parameter
//! and the single-charge groups are the `n = 1` specialization.
//!
//! Block form of an element, acting on `(ζ_1..ζ_n, x, 1)`:
//!
//! ```text
//! [ ν I_n   0   ν φ ]
//! [   0     L    C  ]
//! [   0     0    1  ]
//! ```

use crate::error::{Error, Result};
use crate::linalg::{DMat, Mat4};
use crate::minkowski::{FourVector, LorentzMatrix, GRAM};
use crate::poincare::{self, LieElement, Momentum, PoincareElement};
use crate::sign::Sign;

/// Element of the extended group: discrete sign ν, charge-dimension
/// translations φ, and a Poincaré part.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "RawExtendedElement")]
pub struct ExtendedElement {
    pub nu: Sign,
    pub phi: Vec<f64>,
    #[serde(rename = "L")]
    pub lorentz: LorentzMatrix,
    #[serde(rename = "C")]
    pub translation: FourVector,
}

impl ExtendedElement {
    pub fn new(
        nu: Sign,
        phi: Vec<f64>,
        lorentz: LorentzMatrix,
        translation: FourVector,
    ) -> Result<Self> {
        if phi.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        if !phi.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite { context: "phi" });
        }
        Ok(ExtendedElement {
            nu,
            phi,
            lorentz,
            translation,
        })
    }

    pub fn identity(n: usize) -> Self {
        ExtendedElement {
            nu: Sign::Plus,
            phi: vec![0.0; n],
            lorentz: LorentzMatrix::IDENTITY,
            translation: FourVector::ZERO,
        }
    }

    /// Number of charge dimensions.
    pub fn charges(&self) -> usize {
        self.phi.len()
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if self.charges() != got {
            return Err(Error::DimensionMismatch {
                expected: self.charges(),
                got,
            });
        }
        Ok(())
    }

    /// Block group law: ν multiplies, `φ' = φ_b + ν_b φ_a`, Poincaré parts
    /// compose as usual.
    pub fn compose(&self, rhs: &ExtendedElement) -> Result<ExtendedElement> {
        self.check_dim(rhs.charges())?;
        let phi = rhs
            .phi
            .iter()
            .zip(self.phi.iter())
            .map(|(b, a)| b + rhs.nu.apply(*a))
            .collect();
        Ok(ExtendedElement {
            nu: self.nu * rhs.nu,
            phi,
            lorentz: self.lorentz.compose(&rhs.lorentz),
            translation: self.lorentz.apply(&rhs.translation).add(&self.translation),
        })
    }

    /// `g^-1 = (ν, -νφ, L^-1, -L^-1 C)`: the charge-translation block of the
    /// embedded inverse is `-φ` for either ν.
    pub fn inverse(&self) -> ExtendedElement {
        let l_inv = self.lorentz.inverse();
        ExtendedElement {
            nu: self.nu,
            phi: self.phi.iter().map(|x| (-self.nu).apply(*x)).collect(),
            translation: l_inv.apply(&self.translation).neg(),
            lorentz: l_inv,
        }
    }

    /// `ζ_i' = ν ζ_i + ν φ_i`, `x' = Lx + C`.
    pub fn act_on_point(&self, p: &ExtendedPoint) -> Result<ExtendedPoint> {
        self.check_dim(p.zeta.len())?;
        Ok(ExtendedPoint {
            zeta: p
                .zeta
                .iter()
                .zip(self.phi.iter())
                .map(|(z, f)| self.nu.apply(z + f))
                .collect(),
            x: self.lorentz.apply(&p.x).add(&self.translation),
        })
    }

    /// Embedding as an `(n+5) x (n+5)` block matrix.
    pub fn embed(&self) -> DMat {
        let n = self.charges();
        let l = self.lorentz.matrix();
        let nu = self.nu.value();
        DMat::from_fn(n + 5, n + 5, |i, j| {
            let last = n + 4;
            if i < n {
                if i == j {
                    nu
                } else if j == last {
                    nu * self.phi[i]
                } else {
                    0.0
                }
            } else if i < n + 4 {
                if j >= n && j < n + 4 {
                    l.0[i - n][j - n]
                } else if j == last {
                    self.translation.0[i - n]
                } else {
                    0.0
                }
            } else {
                if j == last {
                    1.0
                } else {
                    0.0
                }
            }
        })
    }

    /// Adjoint action computed by conjugating the embedded matrices:
    /// `δφ' = ν δφ`, the (ω, γ) part transforms as the Poincaré adjoint.
    pub fn adjoint(&self, d: &ExtendedLieElement) -> Result<ExtendedLieElement> {
        self.check_dim(d.dphi.len())?;
        let n = self.charges();
        let conj = self.embed().mul(&d.embed()).mul(&self.inverse().embed());
        let dphi = (0..n).map(|i| conj[(i, n + 4)]).collect();
        let delta_l = Mat4::from_fn(|i, j| conj[(n + i, n + j)]);
        let gamma = FourVector([
            conj[(n, n + 4)],
            conj[(n + 1, n + 4)],
            conj[(n + 2, n + 4)],
            conj[(n + 3, n + 4)],
        ]);
        Ok(ExtendedLieElement {
            dphi,
            spacetime: LieElement::from_raw_unchecked(GRAM.mul(&delta_l), gamma),
        })
    }

    /// Coadjoint action: `q_i' = ν q_i` (exact sign arithmetic), the (M, P)
    /// part transforms exactly as the Poincaré coadjoint.
    pub fn coadjoint(&self, j: &ChargedMomentum) -> Result<ChargedMomentum> {
        self.coadjoint_signed(j, false)
    }

    pub(crate) fn coadjoint_signed(
        &self,
        j: &ChargedMomentum,
        flip_charge: bool,
    ) -> Result<ChargedMomentum> {
        self.check_dim(j.q.len())?;
        let q_sign = if flip_charge { -self.nu } else { self.nu };
        let poincare_part = PoincareElement::new(self.lorentz, self.translation);
        Ok(ChargedMomentum {
            q: j.q.iter().map(|&x| q_sign.apply(x)).collect(),
            spacetime: poincare::coadjoint(&poincare_part, &j.spacetime),
        })
    }
}

#[derive(serde::Deserialize)]
struct RawExtendedElement {
    nu: Sign,
    phi: Vec<f64>,
    #[serde(rename = "L")]
    lorentz: LorentzMatrix,
    #[serde(rename = "C")]
    translation: FourVector,
}

impl TryFrom<RawExtendedElement> for ExtendedElement {
    type Error = Error;
    fn try_from(raw: RawExtendedElement) -> Result<Self> {
        ExtendedElement::new(raw.nu, raw.phi, raw.lorentz, raw.translation)
    }
}

/// Lie algebra element of the extended group: `δφ` plus the Poincaré
/// tangent vector.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtendedLieElement {
    dphi: Vec<f64>,
    spacetime: LieElement,
}

impl ExtendedLieElement {
    pub fn new(dphi: Vec<f64>, spacetime: LieElement) -> Self {
        ExtendedLieElement { dphi, spacetime }
    }

    pub fn dphi(&self) -> &[f64] {
        &self.dphi
    }

    pub fn spacetime(&self) -> &LieElement {
        &self.spacetime
    }

    pub fn omega(&self) -> &Mat4 {
        self.spacetime.omega()
    }

    pub fn gamma(&self) -> &FourVector {
        self.spacetime.gamma()
    }

    /// Embedding `[[0_n, 0, δφ], [0, Gω, γ], [0, 0, 0]]`.
    pub fn embed(&self) -> DMat {
        let n = self.dphi.len();
        let dl = GRAM.mul(self.spacetime.omega());
        DMat::from_fn(n + 5, n + 5, |i, j| {
            let last = n + 4;
            if i < n {
                if j == last {
                    self.dphi[i]
                } else {
                    0.0
                }
            } else if i < n + 4 {
                if j >= n && j < n + 4 {
                    dl.0[i - n][j - n]
                } else if j == last {
                    self.spacetime.gamma().0[i - n]
                } else {
                    0.0
                }
            } else {
                0.0
            }
        })
    }

    pub fn max_abs_diff(&self, rhs: &ExtendedLieElement) -> f64 {
        let charge = self
            .dphi
            .iter()
            .zip(rhs.dphi.iter())
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()));
        charge.max(self.spacetime.max_abs_diff(&rhs.spacetime))
    }
}

/// Momentum of the extended group: charges `q_i` plus the Poincaré momentum.
#[derive(Clone, Debug, PartialEq)]
pub struct ChargedMomentum {
    q: Vec<f64>,
    spacetime: Momentum,
}

impl ChargedMomentum {
    pub fn new(q: Vec<f64>, spacetime: Momentum) -> Self {
        ChargedMomentum { q, spacetime }
    }

    pub fn q(&self) -> &[f64] {
        &self.q
    }

    pub fn spacetime(&self) -> &Momentum {
        &self.spacetime
    }

    pub fn m(&self) -> &Mat4 {
        self.spacetime.m()
    }

    pub fn p(&self) -> &FourVector {
        self.spacetime.p()
    }

    pub fn energy(&self) -> f64 {
        self.spacetime.energy()
    }

    /// Serialized coordinates: charges first, then the ten Poincaré
    /// components.
    pub fn coords(&self) -> Vec<f64> {
        let mut out = self.q.clone();
        out.extend_from_slice(&self.spacetime.coords());
        out
    }

    pub fn from_coords(c: &[f64]) -> Self {
        let n = c.len() - 10;
        let mut inner = [0.0; 10];
        inner.copy_from_slice(&c[n..]);
        ChargedMomentum {
            q: c[..n].to_vec(),
            spacetime: Momentum::from_coords(&inner),
        }
    }

    pub fn max_abs_diff(&self, rhs: &ChargedMomentum) -> f64 {
        let charge = self
            .q
            .iter()
            .zip(rhs.q.iter())
            .fold(0.0_f64, |acc, (a, b)| acc.max((a - b).abs()));
        charge.max(self.spacetime.max_abs_diff(&rhs.spacetime))
    }
}

impl serde::Serialize for ChargedMomentum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ChargedMomentum", 3)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("M", &self.spacetime.m().to_row_major())?;
        st.serialize_field("P", self.spacetime.p())?;
        st.end()
    }
}

impl<'de> serde::Deserialize<'de> for ChargedMomentum {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            q: Vec<f64>,
            #[serde(rename = "M")]
            m: [f64; 16],
            #[serde(rename = "P")]
            p: FourVector,
        }
        let raw = Raw::deserialize(d)?;
        let spacetime =
            Momentum::new(Mat4::from_row_major(&raw.m), raw.p).map_err(serde::de::Error::custom)?;
        Ok(ChargedMomentum {
            q: raw.q,
            spacetime,
        })
    }
}

/// A point of the extended motion space: closed fifth-dimension coordinates
/// `ζ_i` plus a space-time point.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ExtendedPoint {
    pub zeta: Vec<f64>,
    pub x: FourVector,
}

/// Charge conjugation: the coadjoint action of the `ν = -1, φ = 0, L = 1,
/// C = 0` element. Negates every charge; energy, momentum and spin are
/// untouched.
pub fn c_symmetry(j: &ChargedMomentum) -> ChargedMomentum {
    ChargedMomentum {
        q: j.q.iter().map(|&x| -x).collect(),
        spacetime: j.spacetime,
    }
}

/// Pairing scalar of the extended group,
/// `S = Σ q_i δφ_i + 1/2 Tr(M ω) + tP G γ`.
pub fn invariant_scalar(j: &ChargedMomentum, d: &ExtendedLieElement) -> f64 {
    let charge: f64 = j.q.iter().zip(d.dphi.iter()).map(|(q, f)| q * f).sum();
    charge + poincare::invariant_scalar(&j.spacetime, &d.spacetime)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_and_sign_algebra() {
        let id = ExtendedElement::identity(2);
        let composed = id.compose(&id).unwrap();
        assert_eq!(composed, id);

        let mut rng = ChaCha8Rng::seed_from_u64(20);
        let mut g = sample::extended_element(&mut rng, 1, true);
        g.nu = Sign::Minus;
        let squared = g.compose(&g).unwrap();
        assert_eq!(squared.nu, Sign::Plus);
    }

    #[test]
    fn compose_matches_embedded_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for n in [1_usize, 3] {
            for _ in 0..30 {
                let a = sample::extended_element(&mut rng, n, true);
                let b = sample::extended_element(&mut rng, n, true);
                let block = a.compose(&b).unwrap().embed();
                let direct = a.embed().mul(&b.embed());
                assert!(block.max_abs_diff(&direct) < 1e-12);
            }
        }
    }

    #[test]
    fn inverse_round_trips_and_matches_numeric_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..30 {
            let g = sample::extended_element(&mut rng, 2, true);
            let id = g.compose(&g.inverse()).unwrap().embed();
            assert!(id.max_abs_diff(&DMat::identity(7)) < 1e-12);
            let numeric = g.embed().inverse(1e-12).unwrap();
            assert!(g.inverse().embed().max_abs_diff(&numeric) < 1e-9);
        }
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let a = ExtendedElement::identity(1);
        let b = ExtendedElement::identity(2);
        assert!(matches!(
            a.compose(&b),
            Err(Error::DimensionMismatch { expected: 1, got: 2 })
        ));
        assert!(ExtendedElement::new(
            Sign::Plus,
            vec![],
            LorentzMatrix::IDENTITY,
            FourVector::ZERO
        )
        .is_err());
    }

    #[test]
    fn action_on_the_fifth_dimension() {
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let p = ExtendedPoint {
            zeta: vec![0.7],
            x: sample::four_vector(&mut rng),
        };
        let id = ExtendedElement::identity(1);
        assert_eq!(id.act_on_point(&p).unwrap(), p);

        // ν = -1, φ = 0 reverses the fifth dimension
        let reflect = ExtendedElement::new(
            Sign::Minus,
            vec![0.0],
            LorentzMatrix::IDENTITY,
            FourVector::ZERO,
        )
        .unwrap();
        assert_eq!(reflect.act_on_point(&p).unwrap().zeta[0], -0.7);

        // ν = +1 translates: ζ' = ζ + φ
        let shift = ExtendedElement::new(
            Sign::Plus,
            vec![1.5],
            LorentzMatrix::IDENTITY,
            FourVector::ZERO,
        )
        .unwrap();
        assert_eq!(shift.act_on_point(&p).unwrap().zeta[0], 0.7 + 1.5);
    }

    #[test]
    fn adjoint_charge_sign_and_conjugation() {
        let mut rng = ChaCha8Rng::seed_from_u64(24);
        let d = sample::extended_lie_element(&mut rng, 1);
        let id = ExtendedElement::identity(1);
        assert!(id.adjoint(&d).unwrap().max_abs_diff(&d) < 1e-15);

        let reflect = ExtendedElement::new(
            Sign::Minus,
            vec![0.0],
            LorentzMatrix::IDENTITY,
            FourVector::ZERO,
        )
        .unwrap();
        let d1 = ExtendedLieElement::new(vec![1.0], LieElement::ZERO);
        assert_eq!(reflect.adjoint(&d1).unwrap().dphi()[0], -1.0);
    }

    #[test]
    fn adjoint_closed_form_matches_conjugation() {
        // δφ' = ν δφ; (ω, γ) transform by the Poincaré adjoint
        let mut rng = ChaCha8Rng::seed_from_u64(25);
        for _ in 0..50 {
            let g = sample::extended_element(&mut rng, 2, true);
            let d = sample::extended_lie_element(&mut rng, 2);
            let conj = g.adjoint(&d).unwrap();
            for (out, input) in conj.dphi().iter().zip(d.dphi().iter()) {
                assert!((out - g.nu.apply(*input)).abs() < 1e-11);
            }
            let poincare_part = PoincareElement::new(g.lorentz, g.translation);
            let expected = poincare::adjoint(&poincare_part, d.spacetime());
            assert!(conj.spacetime().max_abs_diff(&expected) < 1e-11);
        }
    }

    #[test]
    fn coadjoint_charge_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(26);

        // trivial extension (ν fixed +1): q' = q, exactly
        for _ in 0..20 {
            let g = sample::extended_element(&mut rng, 1, false);
            let j = sample::charged_momentum(&mut rng, 1);
            let out = g.coadjoint(&j).unwrap();
            assert_eq!(out.q(), j.q());
        }

        // ν = -1 with trivial Poincaré part: charge reversed, (M, P) intact
        let c_el = ExtendedElement::new(
            Sign::Minus,
            vec![0.0],
            LorentzMatrix::IDENTITY,
            FourVector::ZERO,
        )
        .unwrap();
        let j = sample::charged_momentum(&mut rng, 1);
        let out = c_el.coadjoint(&j).unwrap();
        assert_eq!(out.q()[0], -j.q()[0]);
        assert_eq!(out.p(), j.p());
        assert_eq!(out.m(), j.m());
    }

    #[test]
    fn restriction_to_poincare_is_bit_for_bit() {
        let mut rng = ChaCha8Rng::seed_from_u64(27);
        for _ in 0..30 {
            let g = sample::extended_element(&mut rng, 1, true);
            let j = ChargedMomentum::new(vec![0.0], sample::momentum(&mut rng));
            let out = g.coadjoint(&j).unwrap();
            let poincare_part = PoincareElement::new(g.lorentz, g.translation);
            let expected = poincare::coadjoint(&poincare_part, j.spacetime());
            assert_eq!(out.spacetime(), &expected);
        }
    }

    #[test]
    fn c_symmetry_contract() {
        let mut rng = ChaCha8Rng::seed_from_u64(28);
        let j = sample::charged_momentum(&mut rng, 3);
        let flipped = c_symmetry(&j);
        for (a, b) in flipped.q().iter().zip(j.q().iter()) {
            assert_eq!(*a, -*b);
        }
        assert_eq!(flipped.p(), j.p());
        assert_eq!(flipped.m(), j.m());
        assert_eq!(c_symmetry(&flipped), j);

        let neutral = ChargedMomentum::new(vec![0.0, 0.0], sample::momentum(&mut rng));
        assert_eq!(c_symmetry(&neutral), neutral);
    }

    #[test]
    fn extended_duality_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(29);
        for _ in 0..100 {
            let g = sample::extended_element(&mut rng, 2, true);
            let j = sample::charged_momentum(&mut rng, 2);
            let d = sample::extended_lie_element(&mut rng, 2);
            let s = invariant_scalar(&j, &d);
            let s_after = invariant_scalar(&g.coadjoint(&j).unwrap(), &g.adjoint(&d).unwrap());
            assert!((s - s_after).abs() <= 1e-10 * (1.0 + s.abs()));
        }
    }

    #[test]
    fn charged_momentum_json_shape() {
        let j = ChargedMomentum::new(
            vec![1.0],
            Momentum::from_parts([0.0; 3], [0.0; 3], FourVector::new(0.0, 0.0, 0.0, 2.0)),
        );
        let v: serde_json::Value = serde_json::to_value(&j).unwrap();
        assert_eq!(v["q"], serde_json::json!([1.0]));
        assert_eq!(v["P"][3], serde_json::json!(2.0));
        let back: ChargedMomentum = serde_json::from_value(v).unwrap();
        assert_eq!(back, j);
    }
}

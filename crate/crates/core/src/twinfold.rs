//! The twin-fold dynamical group: motions on the two-sheet cover of
//! space-time, with optional charge dimensions.
//!
//! An element carries two discrete signs. μ is the antichron/fold sign: the
//! Lorentz slot of the block matrix is `μ L_o` with `L_o` orthochron, and a
//! `μ = -1` element carries a state to the opposite fold while reversing its
//! energy. ν is the charge sign; charges transform as `q' = μν q`, so a fold
//! change acts as charge conjugation on its own.
//!
//! Block form, acting on `(ε, ζ_1..ζ_n, x, 1)`:
//!
//! ```text
//! [ μ     0       0     0  ]
//! [ 0   μν I_n    0   μν φ ]
//! [ 0     0     μ L_o   C  ]
//! [ 0     0       0     1  ]
//! ```
//!
//! The fold index is written ε throughout; `f` is reserved for the passage
//! vector inside `M`.

use crate::error::{Error, Result};
use crate::extended::{ChargedMomentum, ExtendedLieElement};
use crate::linalg::{outer, DMat, Mat4};
use crate::minkowski::{ConnectedComponent, FourVector, LorentzMatrix, GRAM};
use crate::poincare::LieElement;
use crate::sign::Sign;

/// Momentum of the twin-fold group; structurally the charged momentum
/// `{q_i, M, P}` (the fold index lives on states, not on momenta).
pub type TwinMomentum = ChargedMomentum;

/// Element of the twin-fold group, stored in normalized form: the Lorentz
/// slot `μ L_o` is kept as the pair `(μ, L_o)` with `L_o` forced orthochron,
/// which makes the antichron character a queryable field.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
#[serde(try_from = "RawTwinElement")]
pub struct TwinElement {
    pub mu: Sign,
    pub nu: Sign,
    pub phi: Vec<f64>,
    #[serde(rename = "L_o")]
    pub orthochron: LorentzMatrix,
    #[serde(rename = "C")]
    pub translation: FourVector,
}

impl TwinElement {
    pub fn new(
        mu: Sign,
        nu: Sign,
        phi: Vec<f64>,
        orthochron: LorentzMatrix,
        translation: FourVector,
    ) -> Result<Self> {
        if !orthochron.component().is_orthochron() {
            return Err(Error::NotOrthochron {
                found: orthochron.component(),
            });
        }
        if !phi.iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite { context: "phi" });
        }
        Ok(TwinElement {
            mu,
            nu,
            phi,
            orthochron,
            translation,
        })
    }

    /// Normalizing constructor: accepts any Lorentz matrix in the slot and
    /// extracts `μ` as the sign of its time-time entry, so the stored part
    /// is orthochron.
    pub fn from_lorentz_slot(
        slot: LorentzMatrix,
        nu: Sign,
        phi: Vec<f64>,
        translation: FourVector,
    ) -> Result<Self> {
        let (mu, orthochron) = slot.orthochron_decompose();
        Self::new(mu, nu, phi, orthochron, translation)
    }

    pub fn identity(n: usize) -> Self {
        TwinElement {
            mu: Sign::Plus,
            nu: Sign::Plus,
            phi: vec![0.0; n],
            orthochron: LorentzMatrix::IDENTITY,
            translation: FourVector::ZERO,
        }
    }

    pub fn charges(&self) -> usize {
        self.phi.len()
    }

    /// The full Lorentz slot `μ L_o`.
    pub fn lorentz_slot(&self) -> LorentzMatrix {
        self.orthochron.apply_sign(self.mu)
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

    /// Block group law. μ and ν multiply; the stored Lorentz parts compose
    /// directly (the μ signs of the slots cancel pairwise), which keeps the
    /// stored part orthochron.
    pub fn compose(&self, rhs: &TwinElement) -> Result<TwinElement> {
        self.check_dim(rhs.charges())?;
        let phi = rhs
            .phi
            .iter()
            .zip(self.phi.iter())
            .map(|(b, a)| b + (rhs.mu * rhs.nu).apply(*a))
            .collect();
        let orthochron = self.orthochron.compose(&rhs.orthochron);
        assert!(
            orthochron.component().is_orthochron(),
            "orthochron set closed under products"
        );
        let translation = self
            .lorentz_slot()
            .apply(&rhs.translation)
            .add(&self.translation);
        Ok(TwinElement {
            mu: self.mu * rhs.mu,
            nu: self.nu * rhs.nu,
            phi,
            orthochron,
            translation,
        })
    }

    /// `g^-1 = (μ, ν, -μν φ, L_o^-1, -μ L_o^-1 C)`.
    pub fn inverse(&self) -> TwinElement {
        let lo_inv = self.orthochron.inverse();
        let translation = lo_inv.apply(&self.translation).apply_sign(-self.mu);
        TwinElement {
            mu: self.mu,
            nu: self.nu,
            phi: self
                .phi
                .iter()
                .map(|&x| (-(self.mu * self.nu)).apply(x))
                .collect(),
            orthochron: lo_inv,
            translation,
        }
    }

    /// `ε' = με`, `ζ_i' = μν ζ_i + μν φ_i`, `x' = μ L_o x + C`.
    pub fn act_on_point(&self, p: &TwinPoint) -> Result<TwinPoint> {
        self.check_dim(p.zeta.len())?;
        let mu_nu = self.mu * self.nu;
        Ok(TwinPoint {
            fold: self.mu * p.fold,
            zeta: p
                .zeta
                .iter()
                .zip(self.phi.iter())
                .map(|(z, f)| mu_nu.apply(z + f))
                .collect(),
            x: self
                .orthochron
                .apply(&p.x)
                .apply_sign(self.mu)
                .add(&self.translation),
        })
    }

    /// Action on a particle state: the fold index flips with μ, the momentum
    /// moves by the coadjoint action.
    pub fn act_on_state(&self, s: &ParticleState) -> Result<ParticleState> {
        Ok(ParticleState {
            fold: self.mu * s.fold,
            momentum: self.coadjoint(&s.momentum)?,
        })
    }

    /// Embedding as an `(n+6) x (n+6)` block matrix.
    pub fn embed(&self) -> DMat {
        let n = self.charges();
        let slot = self.lorentz_slot();
        let l = slot.matrix();
        let mu_nu = (self.mu * self.nu).value();
        DMat::from_fn(n + 6, n + 6, |i, j| {
            let last = n + 5;
            if i == 0 {
                if j == 0 {
                    self.mu.value()
                } else {
                    0.0
                }
            } else if i <= n {
                if i == j {
                    mu_nu
                } else if j == last {
                    mu_nu * self.phi[i - 1]
                } else {
                    0.0
                }
            } else if i < last {
                let r = i - n - 1;
                if j > n && j < last {
                    l.0[r][j - n - 1]
                } else if j == last {
                    self.translation.0[r]
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

    /// Adjoint action by conjugation of the embedded matrices. The closed
    /// forms are `δφ' = μν δφ`, `ω' = tL_o^-1 ω L_o^-1`,
    /// `γ' = -L_o G ω L_o^-1 C + μ L_o γ` (the C term carries μ² = 1).
    pub fn adjoint(&self, d: &ExtendedLieElement) -> Result<ExtendedLieElement> {
        self.check_dim(d.dphi().len())?;
        let n = self.charges();
        let d_embed = embed_twin_lie(d);
        let conj = self.embed().mul(&d_embed).mul(&self.inverse().embed());
        let last = n + 5;
        let dphi = (1..=n).map(|i| conj[(i, last)]).collect();
        let delta_l = Mat4::from_fn(|i, j| conj[(n + 1 + i, n + 1 + j)]);
        let gamma = FourVector([
            conj[(n + 1, last)],
            conj[(n + 2, last)],
            conj[(n + 3, last)],
            conj[(n + 4, last)],
        ]);
        Ok(ExtendedLieElement::new(
            dphi,
            LieElement::from_raw_unchecked(GRAM.mul(&delta_l), gamma),
        ))
    }

    /// Coadjoint action: `q_i' = μν q_i`, `P' = μ L_o P`,
    /// `M' = L_o M tL_o + μ (C tP tL_o - L_o P tC)`.
    pub fn coadjoint(&self, j: &TwinMomentum) -> Result<TwinMomentum> {
        self.coadjoint_signed(j, &TwinCoadjointFaults::default())
    }

    pub(crate) fn coadjoint_signed(
        &self,
        j: &TwinMomentum,
        faults: &TwinCoadjointFaults,
    ) -> Result<TwinMomentum> {
        self.check_dim(j.q().len())?;
        let q_sign = flip_if(self.mu * self.nu, faults.charge);
        let q = j.q().iter().map(|&x| q_sign.apply(x)).collect();

        let lo = self.orthochron.matrix();
        let lo_p = FourVector(lo.mul_vec(j.p().0));
        let p_new = lo_p.apply_sign(flip_if(self.mu, faults.momentum));

        let spin_term = lo.mul(j.m()).mul(&lo.transpose());
        let spin_term = if faults.spin_term {
            spin_term.neg()
        } else {
            spin_term
        };
        let cross_a = outer(self.translation.0, lo_p.0);
        let cross_b = outer(lo_p.0, self.translation.0);
        let cross = if faults.cross_relative {
            cross_a.add(&cross_b)
        } else {
            cross_a.sub(&cross_b)
        };
        let cross_sign = flip_if(self.mu, faults.cross_mu);
        let m_new = spin_term.add(&cross.scale(cross_sign.value()));

        Ok(TwinMomentum::new(
            q,
            crate::poincare::Momentum::from_raw_unchecked(m_new, p_new),
        ))
    }

    /// Symmetry interpretation of the element's discrete class.
    pub fn classify_symmetry(&self) -> SymmetryTag {
        let class = match (self.mu, self.nu) {
            (Sign::Plus, Sign::Plus) => SymmetryClass::Identity,
            (Sign::Plus, Sign::Minus) => SymmetryClass::ChargeConjugation,
            (Sign::Minus, Sign::Plus) => SymmetryClass::TwinAntimatter,
            (Sign::Minus, Sign::Minus) => SymmetryClass::FoldChange,
        };
        SymmetryTag {
            class,
            p_character: self.orthochron.component(),
        }
    }
}

#[derive(serde::Deserialize)]
struct RawTwinElement {
    mu: Sign,
    nu: Sign,
    phi: Vec<f64>,
    #[serde(rename = "L_o")]
    orthochron: LorentzMatrix,
    #[serde(rename = "C")]
    translation: FourVector,
}

impl TryFrom<RawTwinElement> for TwinElement {
    type Error = Error;
    fn try_from(raw: RawTwinElement) -> Result<Self> {
        TwinElement::new(raw.mu, raw.nu, raw.phi, raw.orthochron, raw.translation)
    }
}

fn flip_if(s: Sign, flip: bool) -> Sign {
    if flip {
        -s
    } else {
        s
    }
}

/// Transcription-fault switches for the twin coadjoint formula; used only by
/// the verification suites as a negative control.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct TwinCoadjointFaults {
    pub charge: bool,
    pub momentum: bool,
    pub spin_term: bool,
    pub cross_mu: bool,
    pub cross_relative: bool,
}

/// Lie element embedding for the twin group: the fold slot has no tangent
/// direction, so the matrix is the extended one bordered by a zero row and
/// column.
fn embed_twin_lie(d: &ExtendedLieElement) -> DMat {
    let n = d.dphi().len();
    let inner = d.embed();
    DMat::from_fn(n + 6, n + 6, |i, j| {
        if i == 0 || j == 0 {
            0.0
        } else {
            inner[(i - 1, j - 1)]
        }
    })
}

/// A point of the two-fold cover: fold index ε = ±1, charge-dimension
/// coordinates ζ, space-time point x.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct TwinPoint {
    pub fold: Sign,
    pub zeta: Vec<f64>,
    pub x: FourVector,
}

/// A fold index plus a momentum: the object the twin-fold group transforms.
#[derive(Clone, Debug, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct ParticleState {
    pub fold: Sign,
    pub momentum: TwinMomentum,
}

/// Discrete symmetry classes of the twin group, keyed by (μ, ν).
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum SymmetryClass {
    /// μ = +1, ν = +1: connected to the identity.
    Identity,
    /// μ = +1, ν = -1: charge conjugation in our fold (antimatter).
    ChargeConjugation,
    /// μ = -1, ν = +1: fold change with charge flip, i.e. antimatter as seen
    /// from the twin fold.
    TwinAntimatter,
    /// μ = -1, ν = -1: fold change preserving charges.
    FoldChange,
}

impl std::fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            SymmetryClass::Identity => "identity",
            SymmetryClass::ChargeConjugation => "charge-conjugation",
            SymmetryClass::TwinAntimatter => "twin-antimatter",
            SymmetryClass::FoldChange => "fold-change",
        };
        f.write_str(name)
    }
}

/// Symmetry class plus the parity character of the orthochron part.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct SymmetryTag {
    pub class: SymmetryClass,
    pub p_character: ConnectedComponent,
}

/// One row of the symmetry effect table: the sign factor picked up by each
/// observable under a representative element of the class. `Plus` means
/// unchanged, `Minus` negated.
#[derive(Clone, Copy, Debug, PartialEq, serde::Serialize)]
pub struct SymmetryEffectRow {
    pub mu: Sign,
    pub nu: Sign,
    pub p_character: ConnectedComponent,
    pub class: SymmetryClass,
    pub energy: Sign,
    pub momentum: Sign,
    pub charge: Sign,
    pub spin: Sign,
    pub fold: Sign,
}

/// Computes the symmetry effect table by applying a representative element
/// of each (μ, ν, parity) class to a probe state; nothing is hard-coded.
pub fn symmetry_effect_table() -> Vec<SymmetryEffectRow> {
    let probe = ParticleState {
        fold: Sign::Plus,
        momentum: TwinMomentum::new(
            vec![1.5],
            crate::poincare::Momentum::from_parts(
                [0.3, 0.4, 0.5],
                [0.0; 3],
                FourVector::new(0.3, -0.2, 0.4, 2.0),
            ),
        ),
    };
    let spin_before = crate::reduction::spin_scalar(probe.momentum.spacetime())
        .expect("probe momentum is timelike");

    let parities = [
        LorentzMatrix::IDENTITY,
        LorentzMatrix::try_from_mat(GRAM).expect("A_s is a Lorentz matrix"),
    ];
    let signs = [Sign::Plus, Sign::Minus];

    let mut rows = Vec::new();
    for mu in signs {
        for nu in signs {
            for parity in &parities {
                let g = TwinElement::new(mu, nu, vec![0.0], *parity, FourVector::ZERO)
                    .expect("representatives are orthochron");
                let after = g.act_on_state(&probe).expect("dimensions match");
                let spin_after = crate::reduction::spin_scalar(after.momentum.spacetime())
                    .expect("action preserves timelike character");
                rows.push(SymmetryEffectRow {
                    mu,
                    nu,
                    p_character: parity.component(),
                    class: g.classify_symmetry().class,
                    energy: factor_of(
                        &[probe.momentum.energy()],
                        &[after.momentum.energy()],
                    ),
                    momentum: factor_of(
                        &probe.momentum.p().spatial(),
                        &after.momentum.p().spatial(),
                    ),
                    charge: factor_of(probe.momentum.q(), after.momentum.q()),
                    spin: factor_of(&[spin_before], &[spin_after]),
                    fold: probe.fold * after.fold,
                });
            }
        }
    }
    rows
}

/// Classifies `after` as `+before` or `-before` componentwise.
fn factor_of(before: &[f64], after: &[f64]) -> Sign {
    let tol = 1e-9;
    let unchanged = before
        .iter()
        .zip(after.iter())
        .all(|(b, a)| (a - b).abs() <= tol * (1.0 + b.abs()));
    if unchanged {
        return Sign::Plus;
    }
    let negated = before
        .iter()
        .zip(after.iter())
        .all(|(b, a)| (a + b).abs() <= tol * (1.0 + b.abs()));
    assert!(negated, "representative effect is not a pure sign");
    Sign::Minus
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extended::invariant_scalar;
    use crate::poincare::{self, Momentum, PoincareElement};
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_and_involution() {
        let id = TwinElement::identity(1);
        assert_eq!(id.compose(&id).unwrap(), id);

        let flip = TwinElement::new(
            Sign::Minus,
            Sign::Plus,
            vec![],
            LorentzMatrix::IDENTITY,
            FourVector::ZERO,
        )
        .unwrap();
        let squared = flip.compose(&flip).unwrap();
        assert_eq!(squared.mu, Sign::Plus);
        assert_eq!(squared, TwinElement::identity(0));
    }

    #[test]
    fn antichron_slot_is_rejected_without_normalization() {
        let a_t = LorentzMatrix::try_from_mat(Mat4::diagonal([1.0, 1.0, 1.0, -1.0])).unwrap();
        assert!(matches!(
            TwinElement::new(Sign::Plus, Sign::Plus, vec![], a_t, FourVector::ZERO),
            Err(Error::NotOrthochron { .. })
        ));

        // the normalizing constructor extracts μ instead
        let g = TwinElement::from_lorentz_slot(a_t, Sign::Plus, vec![], FourVector::ZERO).unwrap();
        assert_eq!(g.mu, Sign::Minus);
        assert!(g.orthochron.component().is_orthochron());
        assert_eq!(g.lorentz_slot().matrix(), a_t.matrix());
    }

    #[test]
    fn compose_matches_embedded_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(30);
        for n in [0_usize, 1, 2] {
            for _ in 0..30 {
                let a = sample::twin_element(&mut rng, n);
                let b = sample::twin_element(&mut rng, n);
                let block = a.compose(&b).unwrap().embed();
                let direct = a.embed().mul(&b.embed());
                assert!(block.max_abs_diff(&direct) < 1e-12);
            }
        }
    }

    #[test]
    fn inverse_round_trips_and_matches_numeric_inverse() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..30 {
            let g = sample::twin_element(&mut rng, 1);
            let id = g.compose(&g.inverse()).unwrap().embed();
            assert!(id.max_abs_diff(&DMat::identity(7)) < 1e-12);
            let numeric = g.embed().inverse(1e-12).unwrap();
            assert!(g.inverse().embed().max_abs_diff(&numeric) < 1e-9);
        }
    }

    #[test]
    fn action_on_twin_points() {
        let p = TwinPoint {
            fold: Sign::Plus,
            zeta: vec![0.3],
            x: FourVector::new(1.0, -2.0, 0.5, 3.0),
        };
        let id = TwinElement::identity(1);
        assert_eq!(id.act_on_point(&p).unwrap(), p);

        // μ = -1 with trivial parts: fold flips and x -> -x (a PT action)
        let swap = TwinElement::new(
            Sign::Minus,
            Sign::Plus,
            vec![0.0],
            LorentzMatrix::IDENTITY,
            FourVector::ZERO,
        )
        .unwrap();
        let moved = swap.act_on_point(&p).unwrap();
        assert_eq!(moved.fold, Sign::Minus);
        assert_eq!(moved.x, p.x.neg());
        assert_eq!(moved.zeta[0], -0.3);

        let wrong_dim = TwinPoint {
            fold: Sign::Plus,
            zeta: vec![],
            x: FourVector::ZERO,
        };
        assert!(swap.act_on_point(&wrong_dim).is_err());
    }

    #[test]
    fn adjoint_sign_law_and_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let id = TwinElement::identity(1);
        let d = sample::extended_lie_element(&mut rng, 1);
        assert!(id.adjoint(&d).unwrap().max_abs_diff(&d) < 1e-15);

        // δφ' = μν δφ: the fold change with ν = +1 negates δφ
        let swap = TwinElement::new(
            Sign::Minus,
            Sign::Plus,
            vec![0.0],
            LorentzMatrix::IDENTITY,
            FourVector::ZERO,
        )
        .unwrap();
        let unit = ExtendedLieElement::new(vec![1.0], LieElement::ZERO);
        assert_eq!(swap.adjoint(&unit).unwrap().dphi()[0], -1.0);

        // closed forms against conjugation; the C term of γ' carries μ² = 1
        for _ in 0..50 {
            let g = sample::twin_element(&mut rng, 2);
            let d = sample::extended_lie_element(&mut rng, 2);
            let conj = g.adjoint(&d).unwrap();

            let mu_nu = g.mu * g.nu;
            for (out, input) in conj.dphi().iter().zip(d.dphi().iter()) {
                assert!((out - mu_nu.apply(*input)).abs() < 1e-11);
            }
            let lo = g.orthochron.matrix();
            let lo_inv = g.orthochron.inverse();
            let omega_closed = lo_inv.matrix().transpose().mul(d.omega()).mul(lo_inv.matrix());
            let gamma_closed = FourVector(
                lo.mul(&GRAM)
                    .mul(d.omega())
                    .mul(lo_inv.matrix())
                    .mul_vec(g.translation.0),
            )
            .neg()
            .add(&FourVector(lo.mul_vec(d.gamma().0)).apply_sign(g.mu));
            assert!(conj.omega().max_abs_diff(&omega_closed) < 1e-11);
            assert!(conj.gamma().max_abs_diff(&gamma_closed) < 1e-11);
        }
    }

    #[test]
    fn coadjoint_sign_patterns() {
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        let j = sample::charged_momentum(&mut rng, 1);

        // μ = -1, ν = +1: charges and the whole of P reversed
        let twin = TwinElement::new(
            Sign::Minus,
            Sign::Plus,
            vec![0.0],
            LorentzMatrix::IDENTITY,
            FourVector::ZERO,
        )
        .unwrap();
        let out = twin.coadjoint(&j).unwrap();
        assert_eq!(out.q()[0], -j.q()[0]);
        assert_eq!(out.p(), &j.p().neg());
        assert_eq!(out.energy(), -j.energy());

        // μ = +1, ν = -1: C-symmetry; charges flip, P intact
        let c_sym = TwinElement::new(
            Sign::Plus,
            Sign::Minus,
            vec![0.0],
            LorentzMatrix::IDENTITY,
            FourVector::ZERO,
        )
        .unwrap();
        let out = c_sym.coadjoint(&j).unwrap();
        assert_eq!(out.q()[0], -j.q()[0]);
        assert_eq!(out.p(), j.p());
        assert_eq!(out.m(), j.m());
    }

    #[test]
    fn exact_sign_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        for _ in 0..100 {
            let g = sample::twin_element(&mut rng, 2);
            let j = sample::timelike_charged_momentum(&mut rng, 2);
            let out = g.coadjoint(&j).unwrap();
            let mu_nu = g.mu * g.nu;
            for (after, before) in out.q().iter().zip(j.q().iter()) {
                assert_eq!(*after, mu_nu.apply(*before));
            }
            assert_eq!(
                out.energy().signum(),
                g.mu.apply(j.energy()).signum(),
                "sign(E') = μ sign(E) for timelike momenta"
            );

            let state = ParticleState {
                fold: sample::sign(&mut rng),
                momentum: j.clone(),
            };
            let moved = g.act_on_state(&state).unwrap();
            assert_eq!(moved.fold, g.mu * state.fold);
        }
    }

    #[test]
    fn restriction_to_full_poincare_group() {
        // with ν = +1 and no charges, the coadjoint equals the complete
        // Poincaré coadjoint under L = μ L_o
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for _ in 0..50 {
            let mut g = sample::twin_element(&mut rng, 0);
            g.nu = Sign::Plus;
            let j_inner = sample::momentum(&mut rng);
            let j = TwinMomentum::new(vec![], j_inner);
            let out = g.coadjoint(&j).unwrap();

            let full = PoincareElement::new(g.lorentz_slot(), g.translation);
            let expected = poincare::coadjoint(&full, &j_inner);
            assert!(out.spacetime().max_abs_diff(&expected) < 1e-12);
        }
    }

    #[test]
    fn duality_invariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        for _ in 0..100 {
            let g = sample::twin_element(&mut rng, 1);
            let j = sample::charged_momentum(&mut rng, 1);
            let d = sample::extended_lie_element(&mut rng, 1);
            let s = invariant_scalar(&j, &d);
            let s_after = invariant_scalar(&g.coadjoint(&j).unwrap(), &g.adjoint(&d).unwrap());
            assert!((s - s_after).abs() <= 1e-10 * (1.0 + s.abs()));
        }
    }

    #[test]
    fn symmetry_classification() {
        let mk = |mu, nu| {
            TwinElement::new(mu, nu, vec![0.0], LorentzMatrix::IDENTITY, FourVector::ZERO).unwrap()
        };
        assert_eq!(
            mk(Sign::Plus, Sign::Plus).classify_symmetry().class,
            SymmetryClass::Identity
        );
        assert_eq!(
            mk(Sign::Plus, Sign::Minus).classify_symmetry().class,
            SymmetryClass::ChargeConjugation
        );
        assert_eq!(
            mk(Sign::Minus, Sign::Plus).classify_symmetry().class,
            SymmetryClass::TwinAntimatter
        );
        assert_eq!(
            mk(Sign::Minus, Sign::Minus).classify_symmetry().class,
            SymmetryClass::FoldChange
        );

        // squaring any element lands in a μ-positive class
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..20 {
            let g = sample::twin_element(&mut rng, 1);
            let squared = g.compose(&g).unwrap();
            assert_eq!(squared.mu, Sign::Plus);
        }
    }

    #[test]
    fn effect_table_rows() {
        let rows = symmetry_effect_table();
        assert_eq!(rows.len(), 8);

        let find = |mu, nu, pc| {
            rows.iter()
                .find(|r| r.mu == mu && r.nu == nu && r.p_character == pc)
                .unwrap()
        };

        // identity row: everything unchanged
        let id = find(Sign::Plus, Sign::Plus, ConnectedComponent::Neutral);
        assert_eq!(
            (id.energy, id.momentum, id.charge, id.spin, id.fold),
            (Sign::Plus, Sign::Plus, Sign::Plus, Sign::Plus, Sign::Plus)
        );

        // C row: only charges flip
        let c = find(Sign::Plus, Sign::Minus, ConnectedComponent::Neutral);
        assert_eq!(
            (c.energy, c.momentum, c.charge, c.spin, c.fold),
            (Sign::Plus, Sign::Plus, Sign::Minus, Sign::Plus, Sign::Plus)
        );

        // antichron rows: energy and fold flip, spin unchanged
        for nu in [Sign::Plus, Sign::Minus] {
            for pc in [
                ConnectedComponent::Neutral,
                ConnectedComponent::SpaceReversing,
            ] {
                let row = find(Sign::Minus, nu, pc);
                assert_eq!(row.energy, Sign::Minus);
                assert_eq!(row.fold, Sign::Minus);
                assert_eq!(row.spin, Sign::Plus);
            }
        }

        // twin-fold antimatter: charges flip together with the fold
        let twin = find(Sign::Minus, Sign::Plus, ConnectedComponent::Neutral);
        assert_eq!(twin.charge, Sign::Minus);
        assert_eq!(twin.class, SymmetryClass::TwinAntimatter);
    }

    #[test]
    fn momentum_alias_shares_wire_format() {
        let j: TwinMomentum = TwinMomentum::new(
            vec![2.0],
            Momentum::from_parts([0.1, 0.0, 0.0], [0.0; 3], FourVector::new(0.0, 0.0, 0.0, 1.0)),
        );
        let v = serde_json::to_value(&j).unwrap();
        assert!(v.get("q").is_some() && v.get("M").is_some() && v.get("P").is_some());
    }
}

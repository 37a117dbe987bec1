//! Brute-force duality oracle.
//!
//! For each group the coadjoint action is pinned down by invariance of the
//! pairing scalar: `S(J', Ad_g b_i) = S(J, b_i)` over a basis `{b_i}` of the
//! Lie algebra. Since `S` is linear in the momentum coordinates this is a
//! square linear system for `J'`, solved here with partial pivoting. The
//! adjoint side is computed by matrix conjugation, so this reconstruction
//! never touches the closed-form coadjoint formulas; it exists to catch
//! transcription errors in them.

use crate::error::Result;
use crate::extended::{ChargedMomentum, ExtendedElement, ExtendedLieElement};
use crate::linalg::{DMat, LuFactors};
use crate::minkowski::FourVector;
use crate::poincare::{self, LieElement, Momentum, PoincareElement};
use crate::twinfold::{TwinElement, TwinMomentum};

/// Pivot threshold below which the pairing system is reported singular,
/// indicating a dimension or basis bug rather than bad data.
pub const PIVOT_TOL: f64 = 1e-12;

/// A group with a momentum space paired to its Lie algebra.
///
/// `lie_basis` must return `lie_dim` linearly independent elements; the
/// canonical bases used here make the induced pairing matrix diagonal ±1 at
/// the identity. Linear independence is enforced operationally: a dependent
/// basis surfaces as [`crate::Error::SingularSystem`].
pub trait DualityGroup {
    type Element;
    type Lie;
    type Momentum;

    /// Dimension of the group (10 for Poincaré, 10 + n with charges).
    fn lie_dim(&self) -> usize;
    fn lie_basis(&self) -> Vec<Self::Lie>;
    fn identity_element(&self) -> Self::Element;
    /// Adjoint action, computed by conjugation of embedded matrices.
    fn adjoint(&self, g: &Self::Element, d: &Self::Lie) -> Result<Self::Lie>;
    /// The invariant pairing scalar.
    fn pairing(&self, j: &Self::Momentum, d: &Self::Lie) -> f64;
    fn momentum_coords(&self, j: &Self::Momentum) -> Vec<f64>;
    fn momentum_from_coords(&self, coords: &[f64]) -> Self::Momentum;
}

/// The plain Poincaré group (no charge dimensions).
#[derive(Clone, Copy, Debug, Default)]
pub struct PoincareGroup;

/// The charged extension with `charges` fifth dimensions. Covers both the
/// trivial extension (elements restricted to ν = +1) and the
/// eight-connected-component group.
#[derive(Clone, Copy, Debug)]
pub struct ExtendedGroup {
    pub charges: usize,
}

/// The twin-fold group with `charges` charge dimensions.
#[derive(Clone, Copy, Debug)]
pub struct TwinGroup {
    pub charges: usize,
}

fn poincare_basis() -> Vec<LieElement> {
    let mut basis = Vec::with_capacity(10);
    for k in 0..3 {
        let mut rot = [0.0; 3];
        rot[k] = 1.0;
        basis.push(LieElement::from_generators(rot, [0.0; 3], FourVector::ZERO));
    }
    for k in 0..3 {
        let mut bst = [0.0; 3];
        bst[k] = 1.0;
        basis.push(LieElement::from_generators([0.0; 3], bst, FourVector::ZERO));
    }
    for k in 0..4 {
        let mut gamma = [0.0; 4];
        gamma[k] = 1.0;
        basis.push(LieElement::from_generators(
            [0.0; 3],
            [0.0; 3],
            FourVector(gamma),
        ));
    }
    basis
}

fn charged_basis(n: usize) -> Vec<ExtendedLieElement> {
    let mut basis = Vec::with_capacity(n + 10);
    for k in 0..n {
        let mut dphi = vec![0.0; n];
        dphi[k] = 1.0;
        basis.push(ExtendedLieElement::new(dphi, LieElement::ZERO));
    }
    for inner in poincare_basis() {
        basis.push(ExtendedLieElement::new(vec![0.0; n], inner));
    }
    basis
}

impl DualityGroup for PoincareGroup {
    type Element = PoincareElement;
    type Lie = LieElement;
    type Momentum = Momentum;

    fn lie_dim(&self) -> usize {
        10
    }

    fn lie_basis(&self) -> Vec<LieElement> {
        poincare_basis()
    }

    fn identity_element(&self) -> PoincareElement {
        PoincareElement::IDENTITY
    }

    fn adjoint(&self, g: &PoincareElement, d: &LieElement) -> Result<LieElement> {
        Ok(poincare::adjoint(g, d))
    }

    fn pairing(&self, j: &Momentum, d: &LieElement) -> f64 {
        poincare::invariant_scalar(j, d)
    }

    fn momentum_coords(&self, j: &Momentum) -> Vec<f64> {
        j.coords().to_vec()
    }

    fn momentum_from_coords(&self, coords: &[f64]) -> Momentum {
        let mut c = [0.0; 10];
        c.copy_from_slice(coords);
        Momentum::from_coords(&c)
    }
}

impl DualityGroup for ExtendedGroup {
    type Element = ExtendedElement;
    type Lie = ExtendedLieElement;
    type Momentum = ChargedMomentum;

    fn lie_dim(&self) -> usize {
        self.charges + 10
    }

    fn lie_basis(&self) -> Vec<ExtendedLieElement> {
        charged_basis(self.charges)
    }

    fn identity_element(&self) -> ExtendedElement {
        ExtendedElement::identity(self.charges)
    }

    fn adjoint(&self, g: &ExtendedElement, d: &ExtendedLieElement) -> Result<ExtendedLieElement> {
        g.adjoint(d)
    }

    fn pairing(&self, j: &ChargedMomentum, d: &ExtendedLieElement) -> f64 {
        crate::extended::invariant_scalar(j, d)
    }

    fn momentum_coords(&self, j: &ChargedMomentum) -> Vec<f64> {
        j.coords()
    }

    fn momentum_from_coords(&self, coords: &[f64]) -> ChargedMomentum {
        ChargedMomentum::from_coords(coords)
    }
}

impl DualityGroup for TwinGroup {
    type Element = TwinElement;
    type Lie = ExtendedLieElement;
    type Momentum = TwinMomentum;

    fn lie_dim(&self) -> usize {
        self.charges + 10
    }

    fn lie_basis(&self) -> Vec<ExtendedLieElement> {
        charged_basis(self.charges)
    }

    fn identity_element(&self) -> TwinElement {
        TwinElement::identity(self.charges)
    }

    fn adjoint(&self, g: &TwinElement, d: &ExtendedLieElement) -> Result<ExtendedLieElement> {
        g.adjoint(d)
    }

    fn pairing(&self, j: &TwinMomentum, d: &ExtendedLieElement) -> f64 {
        crate::extended::invariant_scalar(j, d)
    }

    fn momentum_coords(&self, j: &TwinMomentum) -> Vec<f64> {
        j.coords()
    }

    fn momentum_from_coords(&self, coords: &[f64]) -> TwinMomentum {
        TwinMomentum::from_coords(coords)
    }
}

/// Reconstruction state for a fixed group element: the pairing system is
/// assembled and factored once, then reused for any number of momenta.
pub struct CoadjointReconstructor<'a, G: DualityGroup> {
    group: &'a G,
    basis: Vec<G::Lie>,
    system: DMat,
    factors: LuFactors,
}

impl<'a, G: DualityGroup> CoadjointReconstructor<'a, G> {
    pub fn new(group: &'a G, g: &G::Element) -> Result<Self> {
        let basis = group.lie_basis();
        let dim = group.lie_dim();
        debug_assert_eq!(basis.len(), dim, "basis size must equal the group dimension");
        let adjoints = basis
            .iter()
            .map(|b| group.adjoint(g, b))
            .collect::<Result<Vec<_>>>()?;
        let mut system = DMat::zeros(dim, dim);
        let mut unit = vec![0.0; dim];
        for k in 0..dim {
            unit[k] = 1.0;
            let e_k = group.momentum_from_coords(&unit);
            unit[k] = 0.0;
            for (i, ad) in adjoints.iter().enumerate() {
                system[(i, k)] = group.pairing(&e_k, ad);
            }
        }
        let factors = system.lu(PIVOT_TOL)?;
        Ok(CoadjointReconstructor {
            group,
            basis,
            system,
            factors,
        })
    }

    /// Solves `S(J', Ad_g b_i) = S(J, b_i)` for `J'`.
    pub fn apply(&self, j: &G::Momentum) -> G::Momentum {
        let rhs: Vec<f64> = self
            .basis
            .iter()
            .map(|b| self.group.pairing(j, b))
            .collect();
        let coords = self.factors.solve(&rhs);
        self.group.momentum_from_coords(&coords)
    }

    /// Infinity-norm condition number of the pairing system.
    pub fn condition_number(&self) -> f64 {
        match self.system.inverse(PIVOT_TOL) {
            Ok(inv) => self.system.norm_inf() * inv.norm_inf(),
            Err(_) => f64::INFINITY,
        }
    }
}

/// One-shot reconstruction of the coadjoint action of `g` on `j` from the
/// duality relation alone.
pub fn reconstruct_coadjoint<G: DualityGroup>(
    group: &G,
    g: &G::Element,
    j: &G::Momentum,
) -> Result<G::Momentum> {
    Ok(CoadjointReconstructor::new(group, g)?.apply(j))
}

/// Condition number of the pairing system for the canonical basis at the
/// identity element.
pub fn pairing_condition_number<G: DualityGroup>(group: &G) -> Result<f64> {
    let id = group.identity_element();
    Ok(CoadjointReconstructor::new(group, &id)?.condition_number())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use crate::sign::Sign;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_reconstruction_is_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(50);
        let group = PoincareGroup;
        let j = sample::momentum(&mut rng);
        let rec = reconstruct_coadjoint(&group, &PoincareElement::IDENTITY, &j).unwrap();
        assert!(rec.max_abs_diff(&j) < 1e-12);
    }

    #[test]
    fn poincare_reconstruction_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(51);
        let group = PoincareGroup;
        for _ in 0..100 {
            let g = sample::poincare_element(&mut rng);
            let j = sample::momentum(&mut rng);
            let rec = reconstruct_coadjoint(&group, &g, &j).unwrap();
            let closed = poincare::coadjoint(&g, &j);
            assert!(rec.max_abs_diff(&closed) < 1e-9);
        }
    }

    #[test]
    fn extended_reconstruction_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(52);
        for n in [1_usize, 3] {
            let group = ExtendedGroup { charges: n };
            for _ in 0..50 {
                let g = sample::extended_element(&mut rng, n, true);
                let j = sample::charged_momentum(&mut rng, n);
                let rec = reconstruct_coadjoint(&group, &g, &j).unwrap();
                let closed = g.coadjoint(&j).unwrap();
                assert!(rec.max_abs_diff(&closed) < 1e-9);
            }
        }
    }

    #[test]
    fn twin_reconstruction_matches_closed_form_and_sign_pattern() {
        let mut rng = ChaCha8Rng::seed_from_u64(53);
        let group = TwinGroup { charges: 1 };
        for _ in 0..50 {
            let g = sample::twin_element(&mut rng, 1);
            let j = sample::charged_momentum(&mut rng, 1);
            let rec = reconstruct_coadjoint(&group, &g, &j).unwrap();
            let closed = g.coadjoint(&j).unwrap();
            assert!(rec.max_abs_diff(&closed) < 1e-9);
        }

        // a μ = -1 element must reproduce q' = μν q and P' = μ L_o P
        let g = crate::twinfold::TwinElement::new(
            Sign::Minus,
            Sign::Minus,
            vec![0.7],
            crate::minkowski::boost([0.0, 1.0, 0.0], 0.9).unwrap(),
            crate::minkowski::FourVector::new(0.5, -0.3, 0.2, 1.0),
        )
        .unwrap();
        let j = sample::charged_momentum(&mut rng, 1);
        let rec = reconstruct_coadjoint(&group, &g, &j).unwrap();
        assert!((rec.q()[0] - j.q()[0]).abs() < 1e-9); // μν = +1
        let lo_p = g.orthochron.apply(j.p()).neg(); // μ = -1
        assert!(rec.p().max_abs_diff(&lo_p) < 1e-9);
    }

    #[test]
    fn reconstructor_is_reusable_and_linear() {
        let mut rng = ChaCha8Rng::seed_from_u64(54);
        let group = PoincareGroup;
        let g = sample::poincare_element(&mut rng);
        let rec = CoadjointReconstructor::new(&group, &g).unwrap();
        for _ in 0..10 {
            let j = sample::momentum(&mut rng);
            assert!(rec.apply(&j).max_abs_diff(&poincare::coadjoint(&g, &j)) < 1e-9);
        }
    }

    #[test]
    fn basis_size_equals_group_dimension() {
        assert_eq!(PoincareGroup.lie_basis().len(), PoincareGroup.lie_dim());
        assert_eq!(PoincareGroup.lie_dim(), 10);
        for n in [0_usize, 1, 3] {
            let ext = ExtendedGroup { charges: n };
            assert_eq!(ext.lie_basis().len(), ext.lie_dim());
            assert_eq!(ext.lie_dim(), 10 + n);
            let twin = TwinGroup { charges: n };
            assert_eq!(twin.lie_basis().len(), twin.lie_dim());
            assert_eq!(twin.lie_dim(), 10 + n);
        }
    }

    #[test]
    fn pairing_systems_are_well_conditioned() {
        assert!(pairing_condition_number(&PoincareGroup).unwrap() < 1e3);
        assert!(pairing_condition_number(&ExtendedGroup { charges: 1 }).unwrap() < 1e3);
        assert!(pairing_condition_number(&ExtendedGroup { charges: 4 }).unwrap() < 1e3);
        assert!(pairing_condition_number(&TwinGroup { charges: 1 }).unwrap() < 1e3);
        assert!(pairing_condition_number(&TwinGroup { charges: 0 }).unwrap() < 1e3);
    }
}

//! Property-based invariants over generated inputs.

use dyngroups_core::linalg::norm3;
use dyngroups_core::minkowski::{
    boost, is_lorentz, minkowski_inner, omega_factor, rotation, FourVector,
};
use dyngroups_core::poincare::{
    adjoint, coadjoint, invariant_scalar, mass_squared, recompose_m, spin_passage_decompose,
    LieElement, Momentum, PoincareElement,
};
use dyngroups_core::Sign;
use proptest::prelude::*;

fn axis() -> impl Strategy<Value = [f64; 3]> {
    (-1.0..1.0f64, 0.0..std::f64::consts::TAU).prop_map(|(z, phi)| {
        let r = (1.0 - z * z).max(0.0).sqrt();
        [r * phi.cos(), r * phi.sin(), z]
    })
}

fn sign() -> impl Strategy<Value = Sign> {
    prop::bool::ANY.prop_map(|b| if b { Sign::Plus } else { Sign::Minus })
}

fn lorentz() -> impl Strategy<Value = dyngroups_core::minkowski::LorentzMatrix> {
    (axis(), -2.0..2.0f64, axis(), 0.0..std::f64::consts::TAU, sign(), sign()).prop_map(
        |(boost_axis, chi, rot_axis, angle, alpha, beta)| {
            omega_factor(alpha, beta)
                .compose(&rotation(rot_axis, angle).unwrap())
                .compose(&boost(boost_axis, chi).unwrap())
        },
    )
}

fn four_vector() -> impl Strategy<Value = FourVector> {
    prop::array::uniform4(-2.0..2.0f64).prop_map(FourVector)
}

fn vec3() -> impl Strategy<Value = [f64; 3]> {
    prop::array::uniform3(-2.0..2.0f64)
}

fn poincare_element() -> impl Strategy<Value = PoincareElement> {
    (lorentz(), four_vector()).prop_map(|(l, c)| PoincareElement::new(l, c))
}

fn momentum() -> impl Strategy<Value = Momentum> {
    (vec3(), vec3(), four_vector()).prop_map(|(l, f, p)| Momentum::from_parts(l, f, p))
}

fn lie_element() -> impl Strategy<Value = LieElement> {
    (vec3(), vec3(), four_vector()).prop_map(|(r, b, g)| LieElement::from_generators(r, b, g))
}

proptest! {
    #[test]
    fn constructed_lorentz_matrices_preserve_the_metric(l in lorentz()) {
        prop_assert!(is_lorentz(l.matrix(), 1e-12));
    }

    #[test]
    fn inner_product_is_preserved_by_lorentz_matrices(
        l in lorentz(),
        a in four_vector(),
        b in four_vector(),
    ) {
        let before = minkowski_inner(&a, &b);
        let after = minkowski_inner(&l.apply(&a), &l.apply(&b));
        prop_assert!((before - after).abs() <= 1e-11 * (1.0 + before.abs()));
    }

    #[test]
    fn decompose_recompose_is_the_identity(l in vec3(), f in vec3()) {
        let m = recompose_m(l, f);
        let (l2, f2) = spin_passage_decompose(&m, 0.0).unwrap();
        prop_assert_eq!(l, l2);
        prop_assert_eq!(f, f2);
        prop_assert_eq!(m.antisymmetry_residual(), 0.0);
    }

    #[test]
    fn group_inverse_is_two_sided(g in poincare_element(), x in four_vector()) {
        let there_and_back = g.inverse().act_on_point(&g.act_on_point(&x));
        prop_assert!(there_and_back.max_abs_diff(&x) <= 1e-10 * (1.0 + norm3(x.spatial())));
    }

    #[test]
    fn duality_pairing_is_invariant(
        g in poincare_element(),
        j in momentum(),
        d in lie_element(),
    ) {
        let s = invariant_scalar(&j, &d);
        let s_after = invariant_scalar(&coadjoint(&g, &j), &adjoint(&g, &d));
        prop_assert!((s - s_after).abs() <= 1e-10 * (1.0 + s.abs()));
    }

    #[test]
    fn mass_squared_is_invariant(g in poincare_element(), j in momentum()) {
        let before = mass_squared(j.p());
        let after = mass_squared(coadjoint(&g, &j).p());
        prop_assert!((before - after).abs() <= 1e-10 * (1.0 + before.abs()));
    }
}

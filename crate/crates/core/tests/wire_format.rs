//! Wire-format contracts: matrices as row-major 16-entry arrays,
//! four-vectors as [x, y, z, t], and the documented field names for every
//! serialized type.

use dyngroups_core::extended::{ChargedMomentum, ExtendedElement};
use dyngroups_core::minkowski::{FourVector, LorentzMatrix};
use dyngroups_core::poincare::{Momentum, PoincareElement};
use dyngroups_core::reduction::canonical_reduce;
use dyngroups_core::twinfold::TwinElement;
use dyngroups_core::Sign;
use serde_json::json;

fn sample_element() -> PoincareElement {
    let l = dyngroups_core::minkowski::boost([0.0, 0.6, 0.8], 0.7).unwrap();
    PoincareElement::new(l, FourVector::new(1.0, 2.0, 3.0, 4.0))
}

#[test]
fn poincare_element_shape() {
    let v = serde_json::to_value(sample_element()).unwrap();
    assert_eq!(v["L"].as_array().unwrap().len(), 16);
    assert_eq!(v["C"], json!([1.0, 2.0, 3.0, 4.0]));
    let back: PoincareElement = serde_json::from_value(v).unwrap();
    assert_eq!(back, sample_element());
}

#[test]
fn four_vector_is_xyzt_ordered() {
    let v = serde_json::to_value(FourVector::new(1.0, 2.0, 3.0, 4.0)).unwrap();
    assert_eq!(v, json!([1.0, 2.0, 3.0, 4.0]));
}

#[test]
fn momentum_shape_and_component_order() {
    let j = Momentum::from_parts([7.0, 8.0, 9.0], [4.0, 5.0, 6.0], FourVector::new(1.0, 2.0, 3.0, 0.5));
    let v = serde_json::to_value(j).unwrap();
    assert_eq!(v["M"].as_array().unwrap().len(), 16);
    assert_eq!(v["P"], json!([1.0, 2.0, 3.0, 0.5]));
    // M row-major layout: row 0 is (0, -l_z, l_y, f_x)
    assert_eq!(v["M"][1], json!(-9.0));
    assert_eq!(v["M"][2], json!(8.0));
    assert_eq!(v["M"][3], json!(4.0));
    // serialized coordinate order (E, p, passage, spin)
    assert_eq!(
        j.coords(),
        [0.5, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0, 9.0]
    );
}

#[test]
fn momentum_rejects_non_antisymmetric_m() {
    let bad = json!({
        "M": [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        "P": [0.0, 0.0, 0.0, 1.0],
    });
    assert!(serde_json::from_value::<Momentum>(bad).is_err());
}

#[test]
fn lorentz_matrix_rejects_invalid_wire_data() {
    let not_lorentz: Vec<f64> = (0..16).map(|i| i as f64).collect();
    assert!(serde_json::from_value::<LorentzMatrix>(json!(not_lorentz)).is_err());
}

#[test]
fn extended_element_shape() {
    let g = ExtendedElement::new(
        Sign::Minus,
        vec![0.25, -1.5],
        LorentzMatrix::IDENTITY,
        FourVector::ZERO,
    )
    .unwrap();
    let v = serde_json::to_value(&g).unwrap();
    assert_eq!(v["nu"], json!(-1));
    assert_eq!(v["phi"], json!([0.25, -1.5]));
    assert_eq!(v["L"].as_array().unwrap().len(), 16);
    assert_eq!(v["C"], json!([0.0, 0.0, 0.0, 0.0]));
}

#[test]
fn charged_momentum_round_trip() {
    let j = ChargedMomentum::new(
        vec![0.5],
        Momentum::from_parts([0.0, 0.0, 1.0], [0.0; 3], FourVector::new(0.0, 0.0, 0.0, 2.0)),
    );
    let text = serde_json::to_string(&j).unwrap();
    let back: ChargedMomentum = serde_json::from_str(&text).unwrap();
    assert_eq!(back, j);
}

#[test]
fn twin_element_shape() {
    let g = TwinElement::new(
        Sign::Minus,
        Sign::Plus,
        vec![1.0],
        LorentzMatrix::IDENTITY,
        FourVector::new(0.0, 0.0, 0.0, 1.0),
    )
    .unwrap();
    let v = serde_json::to_value(&g).unwrap();
    assert_eq!(v["mu"], json!(-1));
    assert_eq!(v["nu"], json!(1));
    assert_eq!(v["phi"], json!([1.0]));
    assert_eq!(v["L_o"].as_array().unwrap().len(), 16);
    assert_eq!(v["C"], json!([0.0, 0.0, 0.0, 1.0]));
}

#[test]
fn lie_element_shape() {
    use dyngroups_core::poincare::LieElement;
    let d = LieElement::from_generators([1.0, 0.0, 0.0], [0.0, 2.0, 0.0], FourVector::new(0.0, 0.0, 0.0, 3.0));
    let v = serde_json::to_value(d).unwrap();
    assert_eq!(v["omega"].as_array().unwrap().len(), 16);
    assert_eq!(v["gamma"], json!([0.0, 0.0, 0.0, 3.0]));
    let back: LieElement = serde_json::from_value(v).unwrap();
    assert_eq!(back, d);

    // non-antisymmetric omega rejected on the way in
    let bad = json!({
        "omega": [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        "gamma": [0.0, 0.0, 0.0, 0.0],
    });
    assert!(serde_json::from_value::<LieElement>(bad).is_err());
}

#[test]
fn element_deserialization_validates() {
    // ν must be ±1
    let bad_nu = json!({
        "nu": 2, "phi": [0.0],
        "L": serde_json::to_value(LorentzMatrix::IDENTITY).unwrap(),
        "C": [0.0, 0.0, 0.0, 0.0],
    });
    assert!(serde_json::from_value::<ExtendedElement>(bad_nu).is_err());

    // the twin Lorentz slot must be orthochron as stored
    let a_t: Vec<f64> = vec![
        1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -1.0,
    ];
    let bad_slot = json!({
        "mu": 1, "nu": 1, "phi": [0.0], "L_o": a_t, "C": [0.0, 0.0, 0.0, 0.0],
    });
    assert!(serde_json::from_value::<TwinElement>(bad_slot).is_err());

    // a valid twin element round-trips
    let g = TwinElement::new(
        Sign::Minus,
        Sign::Plus,
        vec![0.25],
        LorentzMatrix::IDENTITY,
        FourVector::new(1.0, 0.0, 0.0, 0.0),
    )
    .unwrap();
    let back: TwinElement = serde_json::from_value(serde_json::to_value(&g).unwrap()).unwrap();
    assert_eq!(back, g);
}

#[test]
fn sign_deserializes_from_integers_and_floats_only() {
    assert_eq!(serde_json::from_value::<Sign>(json!(-1)).unwrap(), Sign::Minus);
    assert_eq!(serde_json::from_value::<Sign>(json!(1.0)).unwrap(), Sign::Plus);
    assert!(serde_json::from_value::<Sign>(json!(0)).is_err());
    assert!(serde_json::from_value::<Sign>(json!(0.5)).is_err());
}

#[test]
fn canonical_momentum_shape() {
    let j = Momentum::from_parts([0.0, 0.0, 1.25], [0.0; 3], FourVector::new(0.0, 0.0, 0.0, 2.0));
    let reduced = canonical_reduce(&j).unwrap();
    let v = serde_json::to_value(reduced).unwrap();
    assert_eq!(v["s"], json!(1.25));
    assert_eq!(v["p"], json!(0.0));
    assert_eq!(v["E"], json!(2.0));
    assert_eq!(v["g_reducing"]["L"].as_array().unwrap().len(), 16);
}

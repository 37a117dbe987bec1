//! Seeded random generation of group elements and momenta.
//!
//! Distributions: rapidity uniform in `[-3, 3]`, rotation angle uniform in
//! `[0, 2π)`, axes uniform on the sphere, discrete signs uniform, translation
//! and momentum components uniform in `[-2, 2]`. Everything is driven by a
//! caller-supplied generator so that suites are reproducible; the
//! verification code uses `ChaCha8Rng` seeded from the CLI seed.

use rand::Rng;

use crate::extended::{ChargedMomentum, ExtendedElement, ExtendedLieElement};
use crate::minkowski::{boost, rotation, omega_factor, FourVector, LorentzMatrix};
use crate::poincare::{LieElement, Momentum, PoincareElement};
use crate::sign::Sign;
use crate::twinfold::TwinElement;

pub const RAPIDITY_RANGE: f64 = 3.0;
pub const COMPONENT_RANGE: f64 = 2.0;

pub fn sign(rng: &mut impl Rng) -> Sign {
    if rng.random::<bool>() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Uniform point on the unit sphere.
pub fn unit_axis(rng: &mut impl Rng) -> [f64; 3] {
    let z: f64 = rng.random_range(-1.0..=1.0);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let r = (1.0 - z * z).max(0.0).sqrt();
    [r * phi.cos(), r * phi.sin(), z]
}

pub fn scalar(rng: &mut impl Rng) -> f64 {
    rng.random_range(-COMPONENT_RANGE..=COMPONENT_RANGE)
}

pub fn four_vector(rng: &mut impl Rng) -> FourVector {
    FourVector::new(scalar(rng), scalar(rng), scalar(rng), scalar(rng))
}

pub fn boost_matrix(rng: &mut impl Rng) -> LorentzMatrix {
    let chi = rng.random_range(-RAPIDITY_RANGE..=RAPIDITY_RANGE);
    boost(unit_axis(rng), chi).expect("sampled axis is unit")
}

pub fn rotation_matrix(rng: &mut impl Rng) -> LorentzMatrix {
    let angle = rng.random_range(0.0..std::f64::consts::TAU);
    rotation(unit_axis(rng), angle).expect("sampled axis is unit")
}

/// Random neutral-component element: one rotation composed with one boost
/// (every neutral element factors this way). Entry magnitudes stay below
/// `cosh 3 ≈ 10`, keeping downstream residuals far inside the pinned
/// tolerances.
pub fn neutral_lorentz(rng: &mut impl Rng) -> LorentzMatrix {
    rotation_matrix(rng).compose(&boost_matrix(rng))
}

/// Random element of the full Lorentz group: a neutral product followed by a
/// uniformly chosen discrete factor `Ω(α, β)`.
pub fn lorentz(rng: &mut impl Rng) -> LorentzMatrix {
    let discrete = omega_factor(sign(rng), sign(rng));
    discrete.compose(&neutral_lorentz(rng))
}

/// Product of up to `max_factors` factors, each a boost, a rotation or a
/// discrete `Ω(α, β)`; reaches all four components.
///
/// Boost rapidities here are drawn from `[-1, 1]` so that even fully aligned
/// draws keep entry magnitudes below ~75: past that, evaluating `tLGL - G`
/// in doubles cannot resolve 1e-10 regardless of how exact the product is.
pub fn lorentz_product(rng: &mut impl Rng, max_factors: usize) -> LorentzMatrix {
    let factors = rng.random_range(1..=max_factors.max(1));
    let mut out = LorentzMatrix::IDENTITY;
    for _ in 0..factors {
        let factor = match rng.random_range(0..3) {
            0 => boost(unit_axis(rng), rng.random_range(-1.0..=1.0)).expect("unit axis"),
            1 => rotation_matrix(rng),
            _ => omega_factor(sign(rng), sign(rng)),
        };
        out = out.compose(&factor);
    }
    out
}

/// Random orthochron Lorentz matrix (neutral or space-reversing).
pub fn orthochron_lorentz(rng: &mut impl Rng) -> LorentzMatrix {
    let discrete = omega_factor(sign(rng), Sign::Plus);
    discrete.compose(&neutral_lorentz(rng))
}

pub fn poincare_element(rng: &mut impl Rng) -> PoincareElement {
    PoincareElement::new(lorentz(rng), four_vector(rng))
}

/// Full-group Poincaré element with the boost rapidity capped at `max_chi`.
/// Used by round-trip suites whose absolute tolerances assume bounded
/// amplification through the rest-frame passage cancellation.
pub fn poincare_element_with_rapidity(rng: &mut impl Rng, max_chi: f64) -> PoincareElement {
    let chi = rng.random_range(-max_chi..=max_chi);
    let l = omega_factor(sign(rng), sign(rng))
        .compose(&rotation_matrix(rng))
        .compose(&boost(unit_axis(rng), chi).expect("unit axis"));
    PoincareElement::new(l, four_vector(rng))
}

pub fn neutral_poincare_element(rng: &mut impl Rng) -> PoincareElement {
    PoincareElement::new(neutral_lorentz(rng), four_vector(rng))
}

pub fn lie_element(rng: &mut impl Rng) -> LieElement {
    LieElement::from_generators(
        [scalar(rng), scalar(rng), scalar(rng)],
        [scalar(rng), scalar(rng), scalar(rng)],
        four_vector(rng),
    )
}

pub fn momentum(rng: &mut impl Rng) -> Momentum {
    Momentum::from_parts(
        [scalar(rng), scalar(rng), scalar(rng)],
        [scalar(rng), scalar(rng), scalar(rng)],
        four_vector(rng),
    )
}

/// Momentum with a timelike `P`: a rest-frame momentum of mass in
/// `[0.2, 5]` (energy sign uniform) pushed by a modest boost.
///
/// The boost rapidity is capped at 1.5 so that after a further rapidity-3
/// action the rest-frame evaluation of the spin scalar stays conditioned
/// well inside its 1e-9 relative tolerance (its error grows like `(E/m)²`).
pub fn timelike_momentum(rng: &mut impl Rng) -> Momentum {
    let mass: f64 = rng.random_range(0.2..=5.0);
    let energy = sign(rng).apply(mass);
    let rest = Momentum::from_parts(
        [scalar(rng), scalar(rng), scalar(rng)],
        [scalar(rng), scalar(rng), scalar(rng)],
        FourVector::new(0.0, 0.0, 0.0, energy),
    );
    let chi = rng.random_range(-1.5..=1.5);
    let push = rotation_matrix(rng).compose(&boost(unit_axis(rng), chi).expect("unit axis"));
    let g = PoincareElement::lorentz_of(push);
    crate::poincare::coadjoint(&g, &rest)
}

pub fn charges(rng: &mut impl Rng, n: usize) -> Vec<f64> {
    (0..n).map(|_| scalar(rng)).collect()
}

/// Random element of the charged extension. `nu_free` decides whether the
/// eight-component group (ν = ±1) or the trivial extension (ν = +1) is
/// sampled.
pub fn extended_element(rng: &mut impl Rng, n: usize, nu_free: bool) -> ExtendedElement {
    let nu = if nu_free { sign(rng) } else { Sign::Plus };
    ExtendedElement::new(nu, charges(rng, n), lorentz(rng), four_vector(rng))
        .expect("sampled dimensions are consistent")
}

pub fn extended_lie_element(rng: &mut impl Rng, n: usize) -> ExtendedLieElement {
    ExtendedLieElement::new(charges(rng, n), lie_element(rng))
}

pub fn charged_momentum(rng: &mut impl Rng, n: usize) -> ChargedMomentum {
    ChargedMomentum::new(charges(rng, n), momentum(rng))
}

/// Charged momentum with timelike `P` (for spin-scalar and sign-law checks).
pub fn timelike_charged_momentum(rng: &mut impl Rng, n: usize) -> ChargedMomentum {
    ChargedMomentum::new(charges(rng, n), timelike_momentum(rng))
}

pub fn twin_element(rng: &mut impl Rng, n: usize) -> TwinElement {
    TwinElement::new(
        sign(rng),
        sign(rng),
        charges(rng, n),
        orthochron_lorentz(rng),
        four_vector(rng),
    )
    .expect("sampled Lorentz part is orthochron")
}

//! Seeded verification suites covering every invariant of the crate.
//!
//! Each property runs a counted batch of randomized checks at a tolerance
//! pinned in this file and reports its maximum residual. The suites are what
//! the CLI `verify` command runs, and what the acceptance tests assert.
//!
//! A deliberate transcription fault can be injected into any single sign of
//! the closed-form coadjoint formulas ([`SignFault`]); the suites must then
//! fail. This is the negative control showing the duality oracle and
//! invariance checks actually bite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::extended::{self, ChargedMomentum, ExtendedElement};
use crate::linalg::{norm3, Mat4};
use crate::minkowski::{
    lorentz_residual, omega_factor, ConnectedComponent, FourVector, LorentzMatrix,
};
use crate::oracle::{
    reconstruct_coadjoint, CoadjointReconstructor, ExtendedGroup, PoincareGroup, TwinGroup,
};
use crate::poincare::{
    self, coadjoint_signed, mass_squared, CoadjointSigns, Momentum, MomentumMatrix,
    PoincareElement,
};
use crate::reduction;
use crate::sample;
use crate::sign::Sign;
use crate::twinfold::{self, TwinCoadjointFaults, TwinElement, TwinMomentum};

/// Sign sites in the transcribed coadjoint formulas. Flipping any one of
/// them must be caught by the verification suites.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignFault {
    /// Poincaré: `P' = -(L P)`.
    PoincareMomentum,
    /// Poincaré: `M' = -(L M tL) + ...`.
    PoincareSpinTerm,
    /// Poincaré: flip the `+ C tP'` term.
    PoincareOrbitalLeft,
    /// Poincaré: flip the `- P' tC` term.
    PoincareOrbitalRight,
    /// Extension: `q' = -(ν q)`.
    ExtendedCharge,
    /// Twin: `q' = -(μν q)`.
    TwinCharge,
    /// Twin: `P' = -(μ L_o P)`.
    TwinMomentum,
    /// Twin: `M' = -(L_o M tL_o) + ...`.
    TwinSpinTerm,
    /// Twin: flip the μ on the cross term.
    TwinCrossMu,
    /// Twin: `(C tP tL_o + L_o P tC)` instead of the difference.
    TwinCrossRelative,
}

impl SignFault {
    pub const ALL: [SignFault; 10] = [
        SignFault::PoincareMomentum,
        SignFault::PoincareSpinTerm,
        SignFault::PoincareOrbitalLeft,
        SignFault::PoincareOrbitalRight,
        SignFault::ExtendedCharge,
        SignFault::TwinCharge,
        SignFault::TwinMomentum,
        SignFault::TwinSpinTerm,
        SignFault::TwinCrossMu,
        SignFault::TwinCrossRelative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SignFault::PoincareMomentum => "poincare-momentum",
            SignFault::PoincareSpinTerm => "poincare-spin-term",
            SignFault::PoincareOrbitalLeft => "poincare-orbital-left",
            SignFault::PoincareOrbitalRight => "poincare-orbital-right",
            SignFault::ExtendedCharge => "extended-charge",
            SignFault::TwinCharge => "twin-charge",
            SignFault::TwinMomentum => "twin-momentum",
            SignFault::TwinSpinTerm => "twin-spin-term",
            SignFault::TwinCrossMu => "twin-cross-mu",
            SignFault::TwinCrossRelative => "twin-cross-relative",
        }
    }
}

impl std::str::FromStr for SignFault {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        SignFault::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = SignFault::ALL.iter().map(|f| f.name()).collect();
                format!("unknown sign site '{s}'; expected one of: {}", names.join(", "))
            })
    }
}

impl std::fmt::Display for SignFault {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl serde::Serialize for SignFault {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Configuration of a verification run.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Validation tolerance for constructed inputs (not the per-property
    /// acceptance tolerances, which are pinned below).
    pub tol: f64,
    /// Multiplier on the per-property case counts (1.0 = standard counts).
    pub scale: f64,
    /// Optional transcription fault to inject (negative control).
    pub perturb: Option<SignFault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 0,
            tol: crate::DEFAULT_TOL,
            scale: 1.0,
            perturb: None,
        }
    }
}

/// Outcome of one property batch.
#[derive(Clone, Debug, serde::Serialize)]
pub struct PropertyReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

/// Outcome of a whole verification run; properties sorted by name.
#[derive(Clone, Debug, serde::Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub tol: f64,
    pub scale: f64,
    pub perturb: Option<SignFault>,
    pub pass: bool,
    pub properties: Vec<PropertyReport>,
}

/// Collects residuals for one property and turns them into a report.
struct Batch {
    name: &'static str,
    tolerance: f64,
    cases: usize,
    failures: usize,
    max_residual: f64,
}

impl Batch {
    fn new(name: &'static str, tolerance: f64) -> Self {
        Batch {
            name,
            tolerance,
            cases: 0,
            failures: 0,
            max_residual: 0.0,
        }
    }

    // NaN residuals must count as failures, hence the negated comparison.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    fn check(&mut self, residual: f64) {
        self.cases += 1;
        if !(residual <= self.tolerance) {
            self.failures += 1;
        }
        if residual.is_nan() {
            self.max_residual = f64::NAN;
        } else {
            self.max_residual = self.max_residual.max(residual);
        }
    }

    /// For exact (no-tolerance) laws: pass/fail without a residual.
    fn check_exact(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            self.max_residual = 1.0;
        }
    }

    fn finish(self) -> PropertyReport {
        PropertyReport {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            max_residual: self.max_residual,
            tolerance: self.tolerance,
            pass: self.failures == 0,
        }
    }
}

/// The (possibly fault-injected) coadjoint implementations under test.
struct Implementations {
    poincare_signs: CoadjointSigns,
    extended_flip: bool,
    twin_faults: TwinCoadjointFaults,
}

impl Implementations {
    fn from_config(cfg: &VerifyConfig) -> Self {
        let mut poincare_signs = CoadjointSigns::default();
        let mut extended_flip = false;
        let mut twin_faults = TwinCoadjointFaults::default();
        match cfg.perturb {
            Some(SignFault::PoincareMomentum) => poincare_signs.p_sign = -1.0,
            Some(SignFault::PoincareSpinTerm) => poincare_signs.mm = -1.0,
            Some(SignFault::PoincareOrbitalLeft) => poincare_signs.cp = -1.0,
            Some(SignFault::PoincareOrbitalRight) => poincare_signs.pc = -1.0,
            Some(SignFault::ExtendedCharge) => extended_flip = true,
            Some(SignFault::TwinCharge) => twin_faults.charge = true,
            Some(SignFault::TwinMomentum) => twin_faults.momentum = true,
            Some(SignFault::TwinSpinTerm) => twin_faults.spin_term = true,
            Some(SignFault::TwinCrossMu) => twin_faults.cross_mu = true,
            Some(SignFault::TwinCrossRelative) => twin_faults.cross_relative = true,
            None => {}
        }
        Implementations {
            poincare_signs,
            extended_flip,
            twin_faults,
        }
    }

    fn poincare(&self, g: &PoincareElement, j: &Momentum) -> Momentum {
        coadjoint_signed(g, j, &self.poincare_signs)
    }

    fn extended(&self, g: &ExtendedElement, j: &ChargedMomentum) -> ChargedMomentum {
        g.coadjoint_signed(j, self.extended_flip)
            .expect("sampled dimensions match")
    }

    fn twin(&self, g: &TwinElement, j: &TwinMomentum) -> TwinMomentum {
        g.coadjoint_signed(j, &self.twin_faults)
            .expect("sampled dimensions match")
    }
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn scaled(cfg: &VerifyConfig, base: usize) -> usize {
    ((base as f64 * cfg.scale).round() as usize).max(4)
}

// Pinned acceptance tolerances.
const TOL_LORENTZ_VALIDITY: f64 = 1e-10;
const TOL_DUALITY: f64 = 1e-10;
const TOL_TRIPLE: f64 = 1e-9;
const TOL_ORACLE: f64 = 1e-9;
const TOL_ACTION_LAW: f64 = 1e-10;
const TOL_CASIMIR: f64 = 1e-9;
const TOL_C_SYMMETRY: f64 = 1e-12;
const TOL_REDUCTION: f64 = 1e-9;
const TOL_SPARSITY: f64 = 1e-10;
const TOL_ANTISYMMETRY: f64 = 1e-11;
const TOL_ADJOINT_FORM: f64 = 1e-11;
const TOL_RESTRICTION: f64 = 1e-11;

/// Runs every property suite and aggregates deterministically (sorted by
/// property name).
pub fn run_all(cfg: &VerifyConfig) -> VerifyReport {
    let impls = Implementations::from_config(cfg);
    let mut properties = vec![
        lorentz_validity(cfg),
        component_taxonomy(cfg),
        omega_factorization(cfg),
        adjoint_closed_form_poincare(cfg),
        adjoint_closed_form_extended(cfg),
        adjoint_closed_form_twin(cfg),
        duality_poincare(cfg, &impls),
        duality_extended(cfg, &impls),
        duality_eight(cfg, &impls),
        duality_twin(cfg, &impls),
        triple_equivalence_poincare(cfg, &impls),
        oracle_agreement_poincare(cfg, &impls),
        oracle_agreement_extended(cfg, &impls),
        oracle_agreement_eight(cfg, &impls),
        oracle_agreement_twin(cfg, &impls),
        coadjoint_action_law_poincare(cfg, &impls),
        coadjoint_action_law_extended(cfg, &impls),
        coadjoint_action_law_twin(cfg, &impls),
        casimir_invariance_poincare(cfg, &impls),
        casimir_invariance_eight(cfg, &impls),
        casimir_invariance_twin(cfg, &impls),
        sign_laws_eight(cfg, &impls),
        sign_laws_twin(cfg, &impls),
        energy_sign_law(cfg, &impls),
        c_symmetry_contract(cfg),
        antisymmetry_preservation(cfg, &impls),
        restriction_consistency(cfg, &impls),
        reduction_roundtrip(cfg),
        reduction_sparsity(cfg),
        symmetry_table(cfg),
    ];
    properties.sort_by(|a, b| a.name.cmp(b.name));
    let pass = properties.iter().all(|p| p.pass);
    VerifyReport {
        seed: cfg.seed,
        tol: cfg.tol,
        scale: cfg.scale,
        perturb: cfg.perturb,
        pass,
        properties,
    }
}

fn lorentz_validity(cfg: &VerifyConfig) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 1);
    let mut batch = Batch::new("lorentz_validity", TOL_LORENTZ_VALIDITY);
    for _ in 0..scaled(cfg, 1000) {
        let l = sample::lorentz_product(&mut rng, 5);
        batch.check(lorentz_residual(l.matrix()));
    }
    batch.finish()
}

fn component_taxonomy(cfg: &VerifyConfig) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 2);
    let mut batch = Batch::new("component_taxonomy", 0.0);

    // the four canonical matrices of the taxonomy
    let canonical = [
        (Mat4::IDENTITY, ConnectedComponent::Neutral),
        (
            Mat4::diagonal([-1.0, -1.0, -1.0, 1.0]),
            ConnectedComponent::SpaceReversing,
        ),
        (
            Mat4::diagonal([1.0, 1.0, 1.0, -1.0]),
            ConnectedComponent::TimeReversing,
        ),
        (
            Mat4::diagonal([-1.0, -1.0, -1.0, -1.0]),
            ConnectedComponent::SpaceTimeReversing,
        ),
    ];
    for (m, expected) in canonical {
        match LorentzMatrix::new(m, 0.0) {
            Ok(l) => batch.check_exact(l.component() == expected),
            Err(_) => batch.check_exact(false),
        }
    }

    // random products respect the component multiplication table
    for _ in 0..scaled(cfg, 2000) {
        let a = sample::lorentz(&mut rng);
        let b = sample::lorentz(&mut rng);
        let product = a.compose(&b);
        let expected = a.component().compose(b.component());
        let mut ok = product.component() == expected;
        // orthochron closure / antichron composition rules
        let (ao, bo) = (a.component().is_orthochron(), b.component().is_orthochron());
        let po = product.component().is_orthochron();
        ok &= po == (ao == bo);
        batch.check_exact(ok);
    }
    batch.finish()
}

fn omega_factorization(cfg: &VerifyConfig) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 3);
    let mut batch = Batch::new("omega_factorization", 0.0);
    batch.check_exact(
        omega_factor(Sign::Plus, Sign::Plus).matrix() == LorentzMatrix::IDENTITY.matrix(),
    );
    let table = [
        (Sign::Minus, Sign::Plus, ConnectedComponent::SpaceReversing),
        (Sign::Plus, Sign::Minus, ConnectedComponent::TimeReversing),
        (
            Sign::Minus,
            Sign::Minus,
            ConnectedComponent::SpaceTimeReversing,
        ),
    ];
    for _ in 0..scaled(cfg, 100) {
        let l_n = sample::neutral_lorentz(&mut rng);
        for (alpha, beta, expected) in table {
            let prod = omega_factor(alpha, beta).compose(&l_n);
            batch.check_exact(prod.component() == expected);
        }
        // Ω(-1,-1) L_n is exactly -L_n
        let st = omega_factor(Sign::Minus, Sign::Minus).compose(&l_n);
        batch.check_exact(st.matrix() == &l_n.matrix().neg());

        // global sign decomposition L = μ L_o with L_o orthochron, exactly
        let l = sample::lorentz(&mut rng);
        let (mu, l_o) = l.orthochron_decompose();
        batch.check_exact(
            l_o.component().is_orthochron() && l_o.apply_sign(mu).matrix() == l.matrix(),
        );
    }
    batch.finish()
}

fn adjoint_closed_form_poincare(cfg: &VerifyConfig) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 4);
    let mut batch = Batch::new("adjoint_closed_form_poincare", TOL_ADJOINT_FORM);
    for _ in 0..scaled(cfg, 100) {
        let g = sample::poincare_element(&mut rng);
        let d = sample::lie_element(&mut rng);
        let conj = poincare::adjoint(&g, &d);
        // ω' = tL^-1 ω L^-1 ; γ' = -G ω' C + L γ  (A-7 form)
        let l_inv = g.lorentz.inverse();
        let omega_closed = l_inv
            .matrix()
            .transpose()
            .mul(d.omega())
            .mul(l_inv.matrix());
        let gamma_closed = FourVector(
            crate::minkowski::GRAM
                .mul(&omega_closed)
                .mul_vec(g.translation.0),
        )
        .neg()
        .add(&g.lorentz.apply(d.gamma()));
        let residual = conj
            .omega()
            .max_abs_diff(&omega_closed)
            .max(conj.gamma().max_abs_diff(&gamma_closed));
        batch.check(residual);
    }
    batch.finish()
}

fn adjoint_closed_form_extended(cfg: &VerifyConfig) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 5);
    let mut batch = Batch::new("adjoint_closed_form_extended", TOL_ADJOINT_FORM);
    for _ in 0..scaled(cfg, 100) {
        let g = sample::extended_element(&mut rng, 1, true);
        let d = sample::extended_lie_element(&mut rng, 1);
        let conj = g.adjoint(&d).expect("dimensions match");
        // δφ' = ν δφ; space-time part is the Poincaré adjoint
        let mut residual = (conj.dphi()[0] - g.nu.apply(d.dphi()[0])).abs();
        let inner = poincare::adjoint(
            &PoincareElement::new(g.lorentz, g.translation),
            d.spacetime(),
        );
        residual = residual.max(conj.spacetime().max_abs_diff(&inner));
        batch.check(residual);
    }
    batch.finish()
}

fn adjoint_closed_form_twin(cfg: &VerifyConfig) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 6);
    let mut batch = Batch::new("adjoint_closed_form_twin", TOL_ADJOINT_FORM);
    for _ in 0..scaled(cfg, 100) {
        let g = sample::twin_element(&mut rng, 1);
        let d = sample::extended_lie_element(&mut rng, 1);
        let conj = g.adjoint(&d).expect("dimensions match");
        // δφ' = μν δφ; ω' = tL_o^-1 ω L_o^-1; γ' = -L_o G ω L_o^-1 C + μ L_o γ
        let mu_nu = g.mu * g.nu;
        let mut residual = (conj.dphi()[0] - mu_nu.apply(d.dphi()[0])).abs();
        let lo = g.orthochron.matrix();
        let lo_inv = g.orthochron.inverse();
        let omega_closed = lo_inv
            .matrix()
            .transpose()
            .mul(d.omega())
            .mul(lo_inv.matrix());
        let gamma_closed = FourVector(
            lo.mul(&crate::minkowski::GRAM)
                .mul(d.omega())
                .mul(lo_inv.matrix())
                .mul_vec(g.translation.0),
        )
        .neg()
        .add(&FourVector(lo.mul_vec(d.gamma().0)).scale(g.mu.value()));
        residual = residual.max(conj.omega().max_abs_diff(&omega_closed));
        residual = residual.max(conj.gamma().max_abs_diff(&gamma_closed));
        batch.check(residual);
    }
    batch.finish()
}

fn duality_residual(s_before: f64, s_after: f64) -> f64 {
    (s_before - s_after).abs() / (1.0 + s_before.abs())
}

fn duality_poincare(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 7);
    let mut batch = Batch::new("duality_poincare", TOL_DUALITY);
    for _ in 0..scaled(cfg, 200) {
        let g = sample::poincare_element(&mut rng);
        let j = sample::momentum(&mut rng);
        let d = sample::lie_element(&mut rng);
        let s = poincare::invariant_scalar(&j, &d);
        let s_after =
            poincare::invariant_scalar(&impls.poincare(&g, &j), &poincare::adjoint(&g, &d));
        batch.check(duality_residual(s, s_after));
    }
    batch.finish()
}

fn duality_extended(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 8);
    let mut batch = Batch::new("duality_extended", TOL_DUALITY);
    for _ in 0..scaled(cfg, 200) {
        let g = sample::extended_element(&mut rng, 1, false);
        let j = sample::charged_momentum(&mut rng, 1);
        let d = sample::extended_lie_element(&mut rng, 1);
        let s = extended::invariant_scalar(&j, &d);
        let s_after =
            extended::invariant_scalar(&impls.extended(&g, &j), &g.adjoint(&d).unwrap());
        batch.check(duality_residual(s, s_after));
    }
    batch.finish()
}

fn duality_eight(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 9);
    let mut batch = Batch::new("duality_eight", TOL_DUALITY);
    for case in 0..scaled(cfg, 200) {
        let n = if case % 3 == 0 { 2 } else { 1 };
        let g = sample::extended_element(&mut rng, n, true);
        let j = sample::charged_momentum(&mut rng, n);
        let d = sample::extended_lie_element(&mut rng, n);
        let s = extended::invariant_scalar(&j, &d);
        let s_after =
            extended::invariant_scalar(&impls.extended(&g, &j), &g.adjoint(&d).unwrap());
        batch.check(duality_residual(s, s_after));
    }
    batch.finish()
}

fn duality_twin(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 10);
    let mut batch = Batch::new("duality_twin", TOL_DUALITY);
    for case in 0..scaled(cfg, 200) {
        let n = if case % 3 == 0 { 2 } else { 1 };
        let g = sample::twin_element(&mut rng, n);
        let j = sample::charged_momentum(&mut rng, n);
        let d = sample::extended_lie_element(&mut rng, n);
        let s = extended::invariant_scalar(&j, &d);
        let s_after = extended::invariant_scalar(&impls.twin(&g, &j), &g.adjoint(&d).unwrap());
        batch.check(duality_residual(s, s_after));
    }
    batch.finish()
}

fn triple_equivalence_poincare(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 11);
    let mut batch = Batch::new("triple_equivalence_poincare", TOL_TRIPLE);
    let group = PoincareGroup;
    for _ in 0..scaled(cfg, 100) {
        let g = sample::poincare_element(&mut rng);
        let j = sample::momentum(&mut rng);
        let by_components = impls.poincare(&g, &j);
        let by_matrix = poincare::coadjoint_matrix(&g, &MomentumMatrix::from_momentum(&j))
            .to_momentum();
        let by_oracle = reconstruct_coadjoint(&group, &g, &j).expect("well-conditioned system");
        let residual = by_components
            .max_abs_diff(&by_matrix)
            .max(by_components.max_abs_diff(&by_oracle))
            .max(by_matrix.max_abs_diff(&by_oracle));
        batch.check(residual);
    }
    batch.finish()
}

fn oracle_agreement_poincare(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 12);
    let mut batch = Batch::new("oracle_agreement_poincare", TOL_ORACLE);
    let group = PoincareGroup;
    for _ in 0..scaled(cfg, 100) {
        let g = sample::poincare_element(&mut rng);
        let rec = CoadjointReconstructor::new(&group, &g).expect("well-conditioned system");
        let j = sample::momentum(&mut rng);
        batch.check(impls.poincare(&g, &j).max_abs_diff(&rec.apply(&j)));
    }
    batch.finish()
}

fn oracle_agreement_extended(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 13);
    let mut batch = Batch::new("oracle_agreement_extended", TOL_ORACLE);
    let group = ExtendedGroup { charges: 1 };
    for _ in 0..scaled(cfg, 100) {
        let g = sample::extended_element(&mut rng, 1, false);
        let j = sample::charged_momentum(&mut rng, 1);
        let rec = reconstruct_coadjoint(&group, &g, &j).expect("well-conditioned system");
        batch.check(impls.extended(&g, &j).max_abs_diff(&rec));
    }
    batch.finish()
}

fn oracle_agreement_eight(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 14);
    let mut batch = Batch::new("oracle_agreement_eight", TOL_ORACLE);
    let group = ExtendedGroup { charges: 2 };
    for _ in 0..scaled(cfg, 100) {
        let g = sample::extended_element(&mut rng, 2, true);
        let j = sample::charged_momentum(&mut rng, 2);
        let rec = reconstruct_coadjoint(&group, &g, &j).expect("well-conditioned system");
        batch.check(impls.extended(&g, &j).max_abs_diff(&rec));
    }
    batch.finish()
}

fn oracle_agreement_twin(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 15);
    let mut batch = Batch::new("oracle_agreement_twin", TOL_ORACLE);
    let group = TwinGroup { charges: 1 };
    for _ in 0..scaled(cfg, 100) {
        let g = sample::twin_element(&mut rng, 1);
        let j = sample::charged_momentum(&mut rng, 1);
        let rec = reconstruct_coadjoint(&group, &g, &j).expect("well-conditioned system");
        batch.check(impls.twin(&g, &j).max_abs_diff(&rec));
    }
    batch.finish()
}

fn coadjoint_action_law_poincare(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 16);
    let mut batch = Batch::new("coadjoint_action_law_poincare", TOL_ACTION_LAW);
    for _ in 0..scaled(cfg, 100) {
        let g1 = sample::poincare_element(&mut rng);
        let g2 = sample::poincare_element(&mut rng);
        let j = sample::momentum(&mut rng);
        let composed = impls.poincare(&g1.compose(&g2), &j);
        let sequential = impls.poincare(&g1, &impls.poincare(&g2, &j));
        batch.check(composed.max_abs_diff(&sequential));
    }
    batch.finish()
}

fn coadjoint_action_law_extended(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 17);
    let mut batch = Batch::new("coadjoint_action_law_extended", TOL_ACTION_LAW);
    for _ in 0..scaled(cfg, 100) {
        let g1 = sample::extended_element(&mut rng, 1, true);
        let g2 = sample::extended_element(&mut rng, 1, true);
        let j = sample::charged_momentum(&mut rng, 1);
        let composed = impls.extended(&g1.compose(&g2).unwrap(), &j);
        let sequential = impls.extended(&g1, &impls.extended(&g2, &j));
        batch.check(composed.max_abs_diff(&sequential));
    }
    batch.finish()
}

fn coadjoint_action_law_twin(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 18);
    let mut batch = Batch::new("coadjoint_action_law_twin", TOL_ACTION_LAW);
    for _ in 0..scaled(cfg, 100) {
        let g1 = sample::twin_element(&mut rng, 1);
        let g2 = sample::twin_element(&mut rng, 1);
        let j = sample::charged_momentum(&mut rng, 1);
        let composed = impls.twin(&g1.compose(&g2).unwrap(), &j);
        let sequential = impls.twin(&g1, &impls.twin(&g2, &j));
        batch.check(composed.max_abs_diff(&sequential));
    }
    batch.finish()
}

fn casimir_invariance_poincare(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 19);
    let mut batch = Batch::new("casimir_invariance_poincare", TOL_CASIMIR);
    for _ in 0..scaled(cfg, 500) {
        let g = sample::poincare_element(&mut rng);
        let j = sample::timelike_momentum(&mut rng);
        let moved = impls.poincare(&g, &j);
        let m2 = mass_squared(j.p());
        let m2_moved = mass_squared(moved.p());
        let mut residual = (m2 - m2_moved).abs() / (1.0 + m2.abs());
        let s = reduction::spin_scalar(&j).expect("timelike input");
        match reduction::spin_scalar(&moved) {
            Ok(s_moved) => residual = residual.max((s - s_moved).abs() / (1.0 + s)),
            Err(_) => residual = f64::INFINITY,
        }
        batch.check(residual);
    }
    batch.finish()
}

fn casimir_invariance_eight(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 20);
    let mut batch = Batch::new("casimir_invariance_eight", TOL_CASIMIR);
    for _ in 0..scaled(cfg, 500) {
        let g = sample::extended_element(&mut rng, 1, true);
        let j = sample::timelike_charged_momentum(&mut rng, 1);
        let moved = impls.extended(&g, &j);
        let m2 = mass_squared(j.p());
        let mut residual = (m2 - mass_squared(moved.p())).abs() / (1.0 + m2.abs());
        let s = reduction::spin_scalar(j.spacetime()).expect("timelike input");
        match reduction::spin_scalar(moved.spacetime()) {
            Ok(s_moved) => residual = residual.max((s - s_moved).abs() / (1.0 + s)),
            Err(_) => residual = f64::INFINITY,
        }
        batch.check(residual);
    }
    batch.finish()
}

fn casimir_invariance_twin(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 21);
    let mut batch = Batch::new("casimir_invariance_twin", TOL_CASIMIR);
    for _ in 0..scaled(cfg, 500) {
        let g = sample::twin_element(&mut rng, 1);
        let j = sample::timelike_charged_momentum(&mut rng, 1);
        let moved = impls.twin(&g, &j);
        let m2 = mass_squared(j.p());
        let mut residual = (m2 - mass_squared(moved.p())).abs() / (1.0 + m2.abs());
        let s = reduction::spin_scalar(j.spacetime()).expect("timelike input");
        match reduction::spin_scalar(moved.spacetime()) {
            Ok(s_moved) => residual = residual.max((s - s_moved).abs() / (1.0 + s)),
            Err(_) => residual = f64::INFINITY,
        }
        batch.check(residual);
    }
    batch.finish()
}

fn sign_laws_eight(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 22);
    let mut batch = Batch::new("sign_laws_eight", 0.0);
    for nu in [Sign::Plus, Sign::Minus] {
        for _ in 0..scaled(cfg, 100) {
            let mut g = sample::extended_element(&mut rng, 2, true);
            g.nu = nu;
            let j = sample::charged_momentum(&mut rng, 2);
            let moved = impls.extended(&g, &j);
            // q' = ν q, exactly
            let ok = moved
                .q()
                .iter()
                .zip(j.q().iter())
                .all(|(after, before)| *after == nu.apply(*before));
            batch.check_exact(ok);
        }
    }
    batch.finish()
}

fn sign_laws_twin(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 23);
    let mut batch = Batch::new("sign_laws_twin", 0.0);
    for mu in [Sign::Plus, Sign::Minus] {
        for nu in [Sign::Plus, Sign::Minus] {
            for _ in 0..scaled(cfg, 50) {
                let mut g = sample::twin_element(&mut rng, 2);
                g.mu = mu;
                g.nu = nu;
                let j = sample::charged_momentum(&mut rng, 2);
                let moved = impls.twin(&g, &j);
                let mu_nu = mu * nu;
                // q' = μν q, exactly
                let mut ok = moved
                    .q()
                    .iter()
                    .zip(j.q().iter())
                    .all(|(after, before)| *after == mu_nu.apply(*before));
                // fold' = μ fold, exactly
                let fold = sample::sign(&mut rng);
                let state = twinfold::ParticleState {
                    fold,
                    momentum: j.clone(),
                };
                let moved_state = g.act_on_state(&state).expect("dimensions match");
                ok &= moved_state.fold == mu * fold;
                batch.check_exact(ok);
            }
        }
    }
    batch.finish()
}

fn energy_sign_law(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 24);
    let mut batch = Batch::new("energy_sign_law", 0.0);
    // sign(E') = μ sign(E) for timelike momenta (E never vanishes there)
    for _ in 0..scaled(cfg, 200) {
        let g = sample::poincare_element(&mut rng);
        let j = sample::timelike_momentum(&mut rng);
        let moved = impls.poincare(&g, &j);
        let mu = g.lorentz.mu();
        batch.check_exact(moved.energy().signum() == mu.apply(j.energy()).signum());
    }
    for mu in [Sign::Plus, Sign::Minus] {
        for _ in 0..scaled(cfg, 50) {
            let mut g = sample::twin_element(&mut rng, 1);
            g.mu = mu;
            let j = sample::timelike_charged_momentum(&mut rng, 1);
            let moved = impls.twin(&g, &j);
            batch.check_exact(moved.energy().signum() == mu.apply(j.energy()).signum());
        }
    }
    batch.finish()
}

fn c_symmetry_contract(cfg: &VerifyConfig) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 25);
    let mut batch = Batch::new("c_symmetry_contract", TOL_C_SYMMETRY);
    for _ in 0..scaled(cfg, 100) {
        let j = sample::timelike_charged_momentum(&mut rng, 2);
        let flipped = extended::c_symmetry(&j);
        let mut ok = flipped
            .q()
            .iter()
            .zip(j.q().iter())
            .all(|(after, before)| *after == -*before);
        // energy, momentum, M bit-identical; mass² and spin follow
        ok &= flipped.p() == j.p() && flipped.m() == j.m();
        ok &= mass_squared(flipped.p()) == mass_squared(j.p());
        ok &= reduction::spin_scalar(flipped.spacetime()).expect("timelike")
            == reduction::spin_scalar(j.spacetime()).expect("timelike");
        // involution
        ok &= extended::c_symmetry(&flipped) == j;
        batch.check_exact(ok);
    }
    batch.finish()
}

fn antisymmetry_preservation(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 26);
    let mut batch = Batch::new("antisymmetry_preservation", TOL_ANTISYMMETRY);
    for _ in 0..scaled(cfg, 200) {
        let g = sample::poincare_element(&mut rng);
        let j = sample::momentum(&mut rng);
        batch.check(impls.poincare(&g, &j).m().antisymmetry_residual());

        let gt = sample::twin_element(&mut rng, 1);
        let jt = sample::charged_momentum(&mut rng, 1);
        batch.check(impls.twin(&gt, &jt).m().antisymmetry_residual());
    }
    batch.finish()
}

fn restriction_consistency(cfg: &VerifyConfig, impls: &Implementations) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 27);
    let mut batch = Batch::new("restriction_consistency", TOL_RESTRICTION);
    for _ in 0..scaled(cfg, 100) {
        // extension with zero charges restricts to the Poincaré coadjoint
        // bit for bit (it delegates)
        let g = sample::extended_element(&mut rng, 1, true);
        let j_inner = sample::momentum(&mut rng);
        let j = ChargedMomentum::new(vec![0.0], j_inner);
        let restricted = impls.extended(&g, &j);
        let expected = impls.poincare(&PoincareElement::new(g.lorentz, g.translation), &j_inner);
        batch.check(if restricted.spacetime() == &expected {
            0.0
        } else {
            f64::INFINITY
        });

        // twin group with ν = +1, n = 0 equals the complete Poincaré
        // coadjoint under L = μ L_o (independent transcriptions, so up to
        // rounding)
        let mut gt = sample::twin_element(&mut rng, 0);
        gt.nu = Sign::Plus;
        let jt = TwinMomentum::new(vec![], j_inner);
        let restricted = impls.twin(&gt, &jt);
        let full = PoincareElement::new(gt.lorentz_slot(), gt.translation);
        let expected = impls.poincare(&full, &j_inner);
        let scale = 1.0 + expected.m().max_abs();
        batch.check(restricted.spacetime().max_abs_diff(&expected) / scale);
    }
    batch.finish()
}

fn reduction_roundtrip(cfg: &VerifyConfig) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 28);
    let mut batch = Batch::new("reduction_roundtrip", TOL_REDUCTION);
    for _ in 0..scaled(cfg, 200) {
        let s: f64 = rng.random_range(0.0..=4.0);
        let m: f64 = rng.random_range(0.5..=5.0);
        let energy = sample::sign(&mut rng).apply(m);
        let canonical = Momentum::from_parts(
            [0.0, 0.0, s],
            [0.0; 3],
            FourVector::new(0.0, 0.0, 0.0, energy),
        );
        // all four components, rapidity capped so the 1e-9 absolute
        // round-trip bound keeps a wide margin (error grows ~ (E/m)^2)
        let g = sample::poincare_element_with_rapidity(&mut rng, 2.0);
        let moved = poincare::coadjoint(&g, &canonical);
        match reduction::canonical_reduce(&moved) {
            Ok(reduced) => {
                let residual = (reduced.s - s)
                    .abs()
                    .max(reduced.reconstruct().max_abs_diff(&moved));
                batch.check(residual);
            }
            Err(_) => batch.check(f64::INFINITY),
        }
    }
    batch.finish()
}

fn reduction_sparsity(cfg: &VerifyConfig) -> PropertyReport {
    let mut rng = rng_for(cfg.seed, 29);
    let mut batch = Batch::new("reduction_sparsity", TOL_SPARSITY);
    for _ in 0..scaled(cfg, 100) {
        let j = sample::timelike_momentum(&mut rng);
        match reduction::canonical_reduce(&j) {
            Ok(reduced) => {
                let canonical = poincare::coadjoint(&reduced.g_reducing, &j);
                let m = canonical.m();
                let scale = 1.0 + m.max_abs();
                let mut residual = norm3(canonical.passage()) / scale;
                for i in 0..4 {
                    for k in 0..4 {
                        if (i, k) != (0, 1) && (i, k) != (1, 0) {
                            residual = residual.max(m.0[i][k].abs() / scale);
                        }
                    }
                }
                batch.check(residual);
            }
            Err(_) => batch.check(f64::INFINITY),
        }
    }
    batch.finish()
}

fn symmetry_table(cfg: &VerifyConfig) -> PropertyReport {
    let mut batch = Batch::new("symmetry_table", 0.0);
    let _ = cfg;
    let rows = twinfold::symmetry_effect_table();
    batch.check_exact(rows.len() == 8);
    for row in &rows {
        let expected_charge = row.mu * row.nu;
        let mut ok = row.charge == expected_charge;
        ok &= row.energy == row.mu;
        ok &= row.fold == row.mu;
        ok &= row.spin == Sign::Plus;
        // C row leaves the 3-momentum alone; antichron-neutral rows flip it
        let expected_momentum = match row.p_character {
            ConnectedComponent::Neutral => row.mu,
            _ => -row.mu,
        };
        ok &= row.momentum == expected_momentum;
        batch.check_exact(ok);
    }
    batch.finish()
}

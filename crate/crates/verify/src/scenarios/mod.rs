//! Scenario runners, one per verified result.

mod complex_f;
mod explore;
mod lemma32;
mod prop2;
mod thresholds;
mod thm31;

use std::sync::Arc;

use koszul_core::graded::PresentedAlgebra;
use koszul_core::groebner::satisfies_buchberger_criterion;
use koszul_core::resolution::{koszul_test, GradedAlgebra, KoszulStatus, KoszulVerdict};
use koszul_core::rees::CompleteIntersectionInput;
use koszul_core::{parse_polynomial, Ideal, PolyRing, Polynomial, PrimeField, RingDescriptor, RingRef};
use serde_json::{json, Value};

use crate::params::{Params, Result, VerifyError};
use crate::report::{Check, CheckStatus, Report};

pub use complex_f::verify_complex_f;
pub use explore::explore_grid;
pub use lemma32::{verify_lemma32, Lemma32Forms};
pub use prop2::verify_prop2;
pub use thresholds::{verify_thresholds, ThresholdVariant};
pub use thm31::verify_thm31;

pub const SCENARIOS: &[&str] =
    &["lemma32", "lemma32-generic", "prop2", "thm31", "complexF", "en-exact", "thm42", "thm46", "explore"];

/// Forms supplied by a configuration file instead of the built-in families.
#[derive(Clone, Debug)]
pub struct CustomForms {
    pub ring: RingRef,
    pub base: Vec<Polynomial>,
    pub forms: Vec<Polynomial>,
}

impl CustomForms {
    fn input(&self) -> Result<CompleteIntersectionInput> {
        Ok(CompleteIntersectionInput::over_quotient(&self.ring, self.base.clone(), self.forms.clone())?)
    }
}

/// Runs a scenario by id.
pub fn run_scenario(id: &str, params: &Params, forms: Option<&CustomForms>) -> Result<Report> {
    if forms.is_some() && !matches!(id, "lemma32" | "thm31" | "en-exact" | "thm46") {
        return Err(VerifyError::Input(format!("scenario {id} does not take custom forms")));
    }
    match id {
        "lemma32" => verify_lemma32(params, forms.map_or(Lemma32Forms::Powers, |f| Lemma32Forms::Custom(f.clone()))),
        "lemma32-generic" => verify_lemma32(params, Lemma32Forms::Generic),
        "prop2" => verify_prop2(params),
        "thm31" => verify_thm31(params, forms),
        "complexF" => verify_complex_f(params),
        "en-exact" => verify_thresholds(params, ThresholdVariant::Exactness, forms),
        "thm46" => verify_thresholds(params, ThresholdVariant::PolynomialBase, forms),
        "thm42" => verify_thresholds(params, ThresholdVariant::KoszulBase, None),
        "explore" => explore_grid(params),
        other => Err(VerifyError::Input(format!("unknown scenario {other}; expected one of {}", SCENARIOS.join(", ")))),
    }
}

fn koszul_status_value(v: &KoszulVerdict) -> Value {
    match &v.status {
        KoszulStatus::PassUpTo(n) => json!(format!("linear up to N={n}")),
        KoszulStatus::Fail { index, degree } => json!(format!("nonlinear Betti number at ({index},{degree})")),
    }
}

fn koszul_disclosure(v: &KoszulVerdict) -> String {
    format!(
        "Koszul test is a truncated certificate: linear up to homological index {} in internal degrees <= {}, over F_{}",
        v.max_index,
        v.window.max(),
        v.characteristic
    )
}

/// Runs a truncated Koszul test and turns the outcome into a check.
fn koszul_check(
    report: &mut Report,
    status: CheckStatus,
    claim: &str,
    cite: &str,
    algebra: &GradedAlgebra,
    max_index: usize,
    window: Option<i32>,
) -> Result<KoszulVerdict> {
    let v = koszul_test(algebra, max_index, window)?;
    report.disclose(koszul_disclosure(&v));
    report.push(Check::new(
        status,
        claim,
        cite,
        koszul_status_value(&v),
        json!(format!("linear up to N={max_index}")),
        v.passed(),
    ));
    Ok(v)
}

/// `K[x]/(x^3)` must fail the Koszul test with witness `(2,3)`.
fn cube_control(field: PrimeField) -> Result<Check> {
    let ring = PolyRing::degrevlex(RingDescriptor::standard(field, &["x"])?);
    let cube = parse_polynomial("x^3", &ring)?;
    let algebra = GradedAlgebra::standard(Arc::new(PresentedAlgebra::new(&ring, vec![cube], "K[x]/(x^3)")?))?;
    let v = koszul_test(&algebra, 2, None)?;
    let witnessed = v.status == KoszulStatus::Fail { index: 2, degree: 3 };
    Ok(Check::new(
        CheckStatus::Control,
        "K[x]/(x^3) fails the Koszul test",
        "sensitivity control",
        koszul_status_value(&v),
        json!("nonlinear Betti number at (2,3)"),
        witnessed,
    ))
}

/// Exhaustive S-pair check on the reduced basis of `ideal`.
fn groebner_check(label: &str, ideal: &Ideal) -> Check {
    let gb = ideal.groebner();
    let ok = satisfies_buchberger_criterion(gb);
    Check::engine(format!("every S-pair of the Gröbner basis of {label} reduces to zero"), gb.len(), json!(null), ok)
}

fn to_i32(v: i64, name: &str) -> Result<i32> {
    i32::try_from(v).map_err(|_| VerifyError::Input(format!("{name} is too large")))
}

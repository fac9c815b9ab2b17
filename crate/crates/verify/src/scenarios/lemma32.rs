//! Colon identities for the signed minors `h_1, h_2, h_3` of three forms.

use koszul_core::groebner::{colon_ideal, ideals_equal, is_regular_sequence};
use koszul_core::rees::{rees_presentation_unchecked, CompleteIntersectionInput, ReesPresentation};
use koszul_core::Ideal;
use serde_json::json;

use super::{groebner_check, CustomForms};
use crate::params::{Params, Result, VerifyError};
use crate::report::{Check, CheckStatus, Report};

/// Which triple of forms the identities are checked on.
#[derive(Clone, Debug)]
pub enum Lemma32Forms {
    /// `x_1^d, x_2^d, x_3^d`.
    Powers,
    /// Three seeded random forms of degree `d`.
    Generic,
    Custom(CustomForms),
}

pub fn verify_lemma32(params: &Params, forms: Lemma32Forms) -> Result<Report> {
    let field = params.field()?;
    let seed = params.seed();
    let d = params.d_or(2)?;
    let n = params.n_or(3)?;
    let (id, ci) = match &forms {
        Lemma32Forms::Powers => ("lemma32", CompleteIntersectionInput::powers(field, n as usize, 3, d as u32)?),
        Lemma32Forms::Generic => ("lemma32-generic", CompleteIntersectionInput::generic(field, n as usize, 3, d as u32, seed)?),
        Lemma32Forms::Custom(c) => ("lemma32", c.input()?),
    };
    if ci.k() != 3 {
        return Err(VerifyError::Input("the colon identities need exactly three forms".into()));
    }
    if ci.degree() < 2 {
        return Err(VerifyError::Input("d must be at least 2".into()));
    }
    let mut report = Report::new(id, field.characteristic(), seed);
    report.param("d", ci.degree()).param("n", ci.n() as i64).param("k", 3);
    report.param("forms", ci.forms().iter().map(|f| f.to_string()).collect::<Vec<_>>());

    let rp = rees_presentation_unchecked(&ci)?;
    let identities = lemma_identities(&rp)?;
    for (check, ideal) in &identities {
        report.push(check.clone());
        if let Some((label, ideal)) = ideal {
            report.push(groebner_check(label, ideal));
        }
    }

    // f_2 replaced by f_1: the identities must stop holding
    let mut broken = ci.forms().to_vec();
    broken[1] = broken[0].clone();
    let sabotaged = rees_presentation_unchecked(&CompleteIntersectionInput::unchecked(ci.ring(), vec![], broken)?)?;
    let outcomes: Vec<bool> = lemma_identities(&sabotaged)?.iter().map(|(c, _)| c.pass).collect();
    report.push(Check::new(
        CheckStatus::Evidence,
        "with f2 replaced by f1, h1, h2 is not a regular sequence",
        "Lemma 3.2(i)",
        outcomes[0],
        false,
        !outcomes[0],
    ));
    // all three forms equal to f_1: h_1, h_2 share the factor f_1
    let flat = vec![ci.forms()[0].clone(); 3];
    let collapsed = rees_presentation_unchecked(&CompleteIntersectionInput::unchecked(ci.ring(), vec![], flat)?)?;
    let regular = is_regular_sequence(&collapsed.minors()[..2])?;
    report.push(Check::new(
        CheckStatus::Control,
        "with f2 and f3 replaced by f1, h1, h2 is not a regular sequence",
        "Lemma 3.2(i)",
        regular,
        false,
        !regular,
    ));
    Ok(report)
}

type Identity = (Check, Option<(String, Ideal)>);

/// Checks the four identities on a minors presentation.
pub fn lemma_identities(rp: &ReesPresentation) -> Result<Vec<Identity>> {
    let ring = rp.ring();
    let h = rp.minors();
    let t = |j| rp.t(j);
    let h12 = Ideal::new(ring, vec![h[0].clone(), h[1].clone()])?;
    let mut out = Vec::new();

    let regular = is_regular_sequence(&h[..2])?;
    out.push((
        Check::theorem("h1, h2 is a regular sequence in S'", "Lemma 3.2(i)", regular, true, regular),
        None,
    ));

    let colon_h3 = colon_ideal(&h12, &h[2])?;
    let target = Ideal::new(ring, vec![rp.forms()[2].clone(), t(2)])?;
    let eq = ideals_equal(&colon_h3, &target)?;
    out.push((
        Check::theorem("(h1,h2):h3 = (f3,t3)", "Lemma 3.2(ii)", eq, true, eq),
        Some(("(h1,h2):h3".to_string(), colon_h3)),
    ));

    let colon_t3 = colon_ideal(&h12, &t(2))?;
    let j = Ideal::new(ring, h.to_vec())?;
    let eq = ideals_equal(&colon_t3, &j)?;
    out.push((
        Check::theorem("(h1,h2):t3 = (h1,h2,h3)", "Lemma 3.2(iii)", eq, true, eq),
        Some(("(h1,h2):t3".to_string(), colon_t3)),
    ));

    let th = Ideal::new(ring, vec![t(2), h[0].clone(), h[1].clone()])?;
    let colon_f3 = colon_ideal(&th, &rp.forms()[2])?;
    let tt = Ideal::new(ring, vec![t(0), t(1), t(2)])?;
    let eq = ideals_equal(&colon_f3, &tt)?;
    out.push((
        Check::theorem("(t3,h1,h2):f3 = (t1,t2,t3)", "Lemma 3.2(iv)", eq, json!(true), eq),
        Some(("(t3,h1,h2):f3".to_string(), colon_f3)),
    ));
    Ok(out)
}

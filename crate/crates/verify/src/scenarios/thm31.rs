//! Quadraticity and Koszulness of `K[(I^e)_{ed+c}]` for three forms.

use koszul_core::graded::hilbert_function;
use koszul_core::rees::{
    ceil_div, diagonal_algebra, diagonal_component_basis, diagonal_ring, rees_presentation, CompleteIntersectionInput,
    DiagonalSpec,
};
use koszul_core::Multidegree;
use serde_json::json;

use super::{cube_control, groebner_check, koszul_check, to_i32, CustomForms};
use crate::params::{Params, Result, VerifyError};
use crate::report::{Check, CheckStatus, Report};

pub fn verify_thm31(params: &Params, forms: Option<&CustomForms>) -> Result<Report> {
    let field = params.field()?;
    let ci = match forms {
        Some(f) => f.input()?,
        None => {
            let d = params.d_or(2)?;
            CompleteIntersectionInput::powers(field, params.n_or(3)? as usize, 3, d as u32)?
        }
    };
    if ci.k() != 3 {
        return Err(VerifyError::Input("this scenario needs exactly three forms".into()));
    }
    let d = ci.degree();
    let c = params.c_or(ceil_div(d, 2) as i64)?;
    let e = params.e_or(1)?;
    let max_index = params.max_index_or(3)? as usize;
    let window = params.window.as_ref().map(|w| to_i32(w[0], "window")).transpose()?;
    let spec = DiagonalSpec::new(c, e)?;

    let mut report = Report::new("thm31", field.characteristic(), params.seed());
    report.param("d", d).param("c", c).param("e", e).param("k", 3).param("n", ci.n() as i64).param("N", max_index as i64);
    report.param("forms", ci.forms().iter().map(|f| f.to_string()).collect::<Vec<_>>());
    let in_hypothesis = 2 * c >= d as i64;
    let status = if in_hypothesis {
        CheckStatus::Theorem
    } else {
        report.disclose("out-of-hypothesis probe: c < d/2, results are evidence only");
        CheckStatus::Evidence
    };
    report.param("hypothesis", if in_hypothesis { "c >= d/2" } else { "out-of-hypothesis probe" });

    let rp = rees_presentation(&ci)?;
    let da = diagonal_algebra(&ci, spec)?;
    let degrees = da.relation_degrees()?;
    let quadratic = !degrees.is_empty() && degrees.iter().all(|&g| g == 2);
    report.push(Check::new(
        status,
        "the diagonal subalgebra is defined by quadrics",
        "Theorem 3.1",
        json!(degrees),
        json!("all relations of degree 2"),
        quadratic,
    ));

    let algebra = diagonal_ring(&rp, spec)?;
    let dims: Vec<(usize, usize, usize)> = (0..=3)
        .map(|s| -> Result<(usize, usize, usize)> {
            let comp = diagonal_component_basis(&ci, spec, s as u32)?.len();
            let pres = hilbert_function(&da.presentation, &Multidegree::single(s));
            let rees = algebra.hilbert(&Multidegree::single(s));
            Ok((comp, pres, rees))
        })
        .collect::<Result<_>>()?;
    let consistent = dims.iter().all(|(a, b, c)| a == b && b == c);
    report.push(Check::engine(
        "presentation, component bases and Rees diagonal agree in degrees 0..3",
        json!(dims.iter().map(|(a, b, c)| vec![*a, *b, *c]).collect::<Vec<_>>()),
        json!("equal triples"),
        consistent,
    ));
    report.push(groebner_check("the diagonal presentation", da.presentation.ideal()));

    koszul_check(&mut report, status, "the diagonal subalgebra is Koszul", "Theorem 3.1", &algebra, max_index, window)?;
    report.push(cube_control(field)?);
    Ok(report)
}

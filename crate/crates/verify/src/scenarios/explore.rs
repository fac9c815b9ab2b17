//! Evidence grid over `(c, e)` for Koszulness of `K[(I^e)_{ed+c}]`.

use koszul_core::rees::{diagonal_algebra, diagonal_ring, rees_presentation, CompleteIntersectionInput, DiagonalSpec};
use koszul_core::resolution::{koszul_test, KoszulVerdict};
use rayon::prelude::*;
use serde_json::json;

use super::{cube_control, koszul_disclosure, koszul_status_value};
use crate::params::{Params, Result, VerifyError};
use crate::report::{Check, CheckStatus, Report};

/// Which result, if any, covers the cell `(c, e)`.
pub fn cell_status(d: i64, k: i64, c: i64) -> (CheckStatus, &'static str) {
    if 2 * c < d {
        (CheckStatus::Evidence, "out-of-hypothesis probe")
    } else if k <= 2 {
        (CheckStatus::Theorem, "Theorem 4.6")
    } else if k == 3 {
        (CheckStatus::Theorem, "Theorem 3.1")
    } else if c * k >= d * (k - 1) {
        (CheckStatus::Theorem, "Theorem 4.6")
    } else {
        (CheckStatus::Evidence, "Question 4.8")
    }
}

pub fn explore_grid(params: &Params) -> Result<Report> {
    let field = params.field()?;
    let d = params.d_or(2)?;
    let k = params.k_or(3)?;
    let n = params.n_or(k)?;
    let cmax = params.c_or(2)?;
    let emax = params.e_or(2)?;
    let max_index = params.max_index_or(3)? as usize;
    if n < k {
        return Err(VerifyError::Input("need k <= n".into()));
    }
    let mut report = Report::new("explore", field.characteristic(), params.seed());
    report.param("d", d).param("k", k).param("n", n).param("N", max_index as i64);
    report.param("c_range", json!([1, cmax])).param("e_range", json!([1, emax]));

    let ci = CompleteIntersectionInput::powers(field, n as usize, k as usize, d as u32)?;
    let rp = rees_presentation(&ci)?;
    let cells: Vec<(i64, i64)> = (1..=cmax).flat_map(|c| (1..=emax).map(move |e| (c, e))).collect();
    let outcomes: Vec<Result<(Vec<i64>, KoszulVerdict)>> = cells
        .par_iter()
        .map(|&(c, e)| {
            let spec = DiagonalSpec::new(c, e)?;
            let degrees = diagonal_algebra(&ci, spec)?.relation_degrees()?;
            let verdict = koszul_test(&diagonal_ring(&rp, spec)?, max_index, None)?;
            Ok((degrees, verdict))
        })
        .collect();
    for (&(c, e), outcome) in cells.iter().zip(outcomes) {
        let (degrees, verdict) = outcome?;
        let (status, cite) = cell_status(d, k, c);
        let quadratic = !degrees.is_empty() && degrees.iter().all(|&g| g == 2);
        let quad_status = if 2 * c >= d { CheckStatus::Theorem } else { CheckStatus::Evidence };
        report.push(Check::new(
            quad_status,
            format!("cell c={c}, e={e}: defined by quadrics"),
            if 2 * c >= d { "quadratic for c >= d/2" } else { "out-of-hypothesis probe" },
            json!(degrees),
            json!("all relations of degree 2"),
            quadratic,
        ));
        report.disclose(koszul_disclosure(&verdict));
        report.push(Check::new(
            status,
            format!("cell c={c}, e={e}: Koszul up to N={max_index}"),
            cite,
            koszul_status_value(&verdict),
            json!(format!("linear up to N={max_index}")),
            verdict.passed(),
        ));
    }
    report.push(cube_control(field)?);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn statuses() {
        assert_eq!(cell_status(2, 3, 1).0, CheckStatus::Theorem);
        assert_eq!(cell_status(3, 4, 2), (CheckStatus::Evidence, "Question 4.8"));
        assert_eq!(cell_status(3, 4, 3).0, CheckStatus::Theorem);
        assert_eq!(cell_status(4, 3, 1), (CheckStatus::Evidence, "out-of-hypothesis probe"));
    }
}

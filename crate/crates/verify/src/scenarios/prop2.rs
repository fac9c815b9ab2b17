//! Koszulness of `R_Δ` and regularity of shifted diagonal modules for `R = S'/(bihomogeneous forms)`.

use std::sync::Arc;

use koszul_core::graded::{DegreeWindow, PresentedAlgebra};
use koszul_core::groebner::is_regular_sequence;
use koszul_core::rees::{seeded_forms, shifted_diagonal_normalize, DiagonalSpec};
use koszul_core::resolution::{truncated_minimal_resolution, truncated_regularity, DiagonalModule, GradedAlgebra};
use koszul_core::{AlgebraError, Multidegree, PolyRing, Polynomial, RingDescriptor, Variable};
use rayon::prelude::*;
use serde_json::json;

use super::{koszul_check, to_i32};
use crate::params::{Params, Result, VerifyError};
use crate::report::{Check, CheckStatus, Report};

/// Integers `c` with `d/2 ≤ c < 2d/3`.
pub fn prop2_band(d: i64) -> Vec<i64> {
    (1..=d).filter(|&c| 2 * c >= d && 3 * c < 2 * d).collect()
}

pub fn verify_prop2(params: &Params) -> Result<Report> {
    let field = params.field()?;
    let seed = params.seed();
    let d = params.d_or(2)?;
    let band = prop2_band(d);
    let c = params.c_or(band.first().copied().unwrap_or((d + 1) / 2))?;
    let e = params.e_or(1)?;
    let grid = params.grid_or(2)?;
    let max_index = params.max_index_or(3)? as usize;
    let m = params.n_or(3)? as usize;
    let count = params.k_or(1)? as usize;
    let tcount = count.max(2);
    let spec = DiagonalSpec::new(c, e)?;

    let mut report = Report::new("prop2", field.characteristic(), seed);
    report.param("d", d).param("c", c).param("e", e).param("grid", grid).param("N", max_index as i64);
    report.param("x_variables", m as i64).param("t_variables", tcount as i64).param("forms_count", count as i64);
    report.param("c_band", json!(band));
    let in_band = band.contains(&c);
    let status = if in_band {
        CheckStatus::Theorem
    } else {
        report.disclose(format!("out-of-hypothesis probe: c={c} is outside the integer band {band:?}"));
        CheckStatus::Evidence
    };

    let mut vars: Vec<Variable> =
        (0..m).map(|i| Variable { name: format!("x{}", i + 1), degree: Multidegree::bi(1, 0) }).collect();
    vars.extend((0..tcount).map(|j| Variable { name: format!("t{}", j + 1), degree: Multidegree::bi(0, 1) }));
    let ring = PolyRing::degrevlex(RingDescriptor::new(field, vars, 2)?);
    let forms = regular_forms(&ring, &Multidegree::bi(to_i32(d, "d")?, 1), count, seed)?;
    report.param("forms", forms.iter().map(|f| f.to_string()).collect::<Vec<_>>());
    let r = Arc::new(PresentedAlgebra::new(&ring, forms, "R")?);
    let diag = GradedAlgebra::diagonal(r.clone(), spec.c(), spec.e())?;

    koszul_check(&mut report, status, "R_diag is Koszul", "Proposition 2(a)", &diag, max_index, None)?;

    let cells: Vec<(i64, i64)> = (0..=grid).flat_map(|a| (0..=grid).map(move |b| (a, b))).collect();
    let results: Vec<Result<CellOutcome>> =
        cells.par_iter().map(|&(a, b)| regularity_cell(&diag, &r, spec, a as i32, b as i32, max_index)).collect();
    let mut outcomes = Vec::new();
    for res in results {
        let cell = res?;
        let claim = format!("reg R(-{},-{})_diag <= max(ceil(a/c), ceil(b/e))", cell.a, cell.b);
        let check = match &cell.regularity {
            CellRegularity::Value(reg) => {
                Check::new(status, claim, "Proposition 2(b)", *reg, cell.bound, *reg <= cell.bound as i64)
            }
            CellRegularity::Zero => {
                Check::new(CheckStatus::Evidence, claim, "Proposition 2(b)", "zero module", cell.bound, true)
            }
            CellRegularity::Exhausted(msg) => {
                Check::new(status, claim, "Proposition 2(b)", msg.as_str(), cell.bound, false)
            }
        };
        report.push(check);
        outcomes.push(cell);
    }
    report.disclose(format!(
        "diagonal module regularity is truncated, not certified: t_i for i <= {max_index} in diagonal degrees <= s0+{}",
        max_index + 1
    ));

    // a bound one below max(ceil(a/c), ceil(b/e)) must be violated
    if let Some(cell) = outcomes.iter().rev().find(|c| c.bound > 0) {
        if let CellRegularity::Value(reg) = cell.regularity {
            let tightened = cell.bound as i64 - 1;
            report.push(Check::new(
                CheckStatus::Control,
                format!("tightened bound reg R(-{},-{})_diag <= {tightened} fails", cell.a, cell.b),
                "Proposition 2(b)",
                reg,
                format!("> {tightened}"),
                reg > tightened,
            ));
        }
    }
    Ok(report)
}

fn regular_forms(ring: &Arc<PolyRing>, degree: &Multidegree, count: usize, seed: u64) -> Result<Vec<Polynomial>> {
    for attempt in 0..8 {
        let forms = seeded_forms(ring, degree, count, seed.wrapping_add(attempt));
        if is_regular_sequence(&forms)? {
            return Ok(forms);
        }
    }
    Err(VerifyError::Input("could not draw a regular sequence of bihomogeneous forms".into()))
}

enum CellRegularity {
    Value(i64),
    Zero,
    Exhausted(String),
}

struct CellOutcome {
    a: i32,
    b: i32,
    bound: i32,
    regularity: CellRegularity,
}

fn regularity_cell(
    diag: &GradedAlgebra,
    r: &Arc<PresentedAlgebra>,
    spec: DiagonalSpec,
    a: i32,
    b: i32,
    max_index: usize,
) -> Result<CellOutcome> {
    let bound = shifted_diagonal_normalize(a, b, spec).external;
    let module = DiagonalModule { quotient: r.clone(), a, b };
    let window = DegreeWindow::single(bound + max_index as i32 + 1);
    let regularity = match truncated_minimal_resolution(diag, &module, max_index, &window) {
        Ok(res) if res.betti().is_exhausted() => CellRegularity::Exhausted("window exhausted".into()),
        Ok(res) => match truncated_regularity(res.betti(), false)?.value {
            Some(v) => CellRegularity::Value(v),
            None => CellRegularity::Zero,
        },
        Err(AlgebraError::WindowExhausted(msg)) => CellRegularity::Exhausted(msg),
        Err(e) => return Err(e.into()),
    };
    Ok(CellOutcome { a, b, bound, regularity })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_bands() {
        assert_eq!(prop2_band(2), vec![1]);
        assert_eq!(prop2_band(3), Vec::<i64>::new());
        assert_eq!(prop2_band(5), vec![3]);
    }
}

//! Acceptance criteria, one PASS/FAIL line each.

use std::sync::Arc;
use std::time::{Duration, Instant};

use koszul_core::graded::{DegreeWindow, PresentedAlgebra};
use koszul_core::groebner::{colon_ideal, ideals_equal, is_regular_sequence};
use koszul_core::rees::{
    binomial, diagonal_algebra, diagonal_ring, rees_presentation_unchecked, CompleteIntersectionInput, DiagonalSpec,
    ReesPresentation,
};
use koszul_core::resolution::{koszul_test, truncated_minimal_resolution, GradedAlgebra, KoszulStatus, ResidueField};
use koszul_core::{parse_polynomial, Ideal, PolyRing, PrimeField, RingDescriptor, DEFAULT_PRIME};
use koszul_verify::scenarios::{verify_complex_f, verify_prop2, verify_thresholds, ThresholdVariant};
use koszul_verify::{CheckStatus, Params, Report};

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    run: fn() -> Outcome,
}

fn field() -> PrimeField {
    PrimeField::new(DEFAULT_PRIME).unwrap()
}

fn within(label: &str, limit: Duration, f: impl FnOnce() -> Result<bool, String>) -> Result<Duration, String> {
    let start = Instant::now();
    let ok = f()?;
    let took = start.elapsed();
    if !ok {
        return Err(format!("{label} failed"));
    }
    if took > limit {
        return Err(format!("{label} took {took:.2?}, limit {limit:?}"));
    }
    Ok(took)
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn powers(n: usize, k: usize, d: u32) -> Result<ReesPresentation, String> {
    let ci = CompleteIntersectionInput::powers(field(), n, k, d).map_err(err)?;
    rees_presentation_unchecked(&ci).map_err(err)
}

fn four_identities(rp: &ReesPresentation) -> Result<[bool; 4], String> {
    let ring = rp.ring();
    let h = rp.minors();
    let h12 = Ideal::new(ring, h[..2].to_vec()).map_err(err)?;
    let i = is_regular_sequence(&h[..2]).map_err(err)?;
    let ii = ideals_equal(
        &colon_ideal(&h12, &h[2]).map_err(err)?,
        &Ideal::new(ring, vec![rp.forms()[2].clone(), rp.t(2)]).map_err(err)?,
    )
    .map_err(err)?;
    let iii = ideals_equal(&colon_ideal(&h12, &rp.t(2)).map_err(err)?, &Ideal::new(ring, h.to_vec()).map_err(err)?)
        .map_err(err)?;
    let th = Ideal::new(ring, vec![rp.t(2), h[0].clone(), h[1].clone()]).map_err(err)?;
    let iv = ideals_equal(
        &colon_ideal(&th, &rp.forms()[2]).map_err(err)?,
        &Ideal::new(ring, (0..3).map(|j| rp.t(j)).collect()).map_err(err)?,
    )
    .map_err(err)?;
    Ok([i, ii, iii, iv])
}

fn lemma_suite() -> Outcome {
    let mut notes = Vec::new();
    for d in [2, 3] {
        let took = within(&format!("identities for d={d}"), Duration::from_secs(10), || {
            let rp = powers(3, 3, d)?;
            Ok(four_identities(&rp)?.iter().all(|&b| b))
        })?;
        notes.push(format!("d={d} in {took:.2?}"));
    }
    let ci = CompleteIntersectionInput::powers(field(), 3, 3, 2).map_err(err)?;
    let mut forms = ci.forms().to_vec();
    forms[1] = forms[0].clone();
    let broken = CompleteIntersectionInput::unchecked(ci.ring(), vec![], forms).map_err(err)?;
    let outcomes = four_identities(&rees_presentation_unchecked(&broken).map_err(err)?)?;
    if outcomes[0] {
        return Err(format!(
            "{}; control: with f2 replaced by f1 check (i) still holds (h1, h2 coprime), identities {outcomes:?}",
            notes.join(", ")
        ));
    }
    Ok(format!("{}; control fails (i)", notes.join(", ")))
}

fn rees_kernel() -> Outcome {
    let mut notes = Vec::new();
    for k in [2, 3] {
        for d in [1, 2] {
            let took = within(&format!("kernel k={k} d={d}"), Duration::from_secs(30), || {
                powers(3, k, d)?.matches_kernel().map_err(err)
            })?;
            notes.push(format!("k={k},d={d} {took:.2?}"));
        }
    }
    let ci = CompleteIntersectionInput::powers(field(), 3, 3, 2).map_err(err)?;
    let mut forms = ci.forms().to_vec();
    forms[1] = forms[0].clone();
    let broken = CompleteIntersectionInput::unchecked(ci.ring(), vec![], forms).map_err(err)?;
    if rees_presentation_unchecked(&broken).map_err(err)?.matches_kernel().map_err(err)? {
        return Err("control: minors of a repeated form still match the kernel".into());
    }
    Ok(notes.join(", "))
}

fn quadratic_band() -> Outcome {
    let mut notes = Vec::new();
    for (d, c, e) in [(2, 1, 1), (3, 2, 1), (4, 2, 1)] {
        let took = within(&format!("(d,c,e)=({d},{c},{e})"), Duration::from_secs(120), || {
            let ci = CompleteIntersectionInput::powers(field(), 3, 3, d).map_err(err)?;
            let alg = diagonal_algebra(&ci, DiagonalSpec::new(c, e).map_err(err)?).map_err(err)?;
            let degrees = alg.relation_degrees().map_err(err)?;
            Ok(!degrees.is_empty() && degrees.iter().all(|&g| g == 2))
        })?;
        notes.push(format!("({d},{c},{e}) {took:.2?}"));
    }
    let ci = CompleteIntersectionInput::powers(field(), 3, 3, 4).map_err(err)?;
    let below = diagonal_algebra(&ci, DiagonalSpec::new(1, 1).map_err(err)?).map_err(err)?;
    let mut degrees = below.relation_degrees().map_err(err)?;
    degrees.sort();
    degrees.dedup();
    notes.push(format!("evidence (4,1): relation degrees {degrees:?}"));
    Ok(notes.join(", "))
}

fn flagship() -> Outcome {
    let mut notes = Vec::new();
    for (d, c, e, n, window, limit) in [(2, 1, 1, 4, Some(5), 300), (3, 2, 1, 3, None, 600)] {
        let took = within(&format!("Koszul ({d},{c},{e}) N={n}"), Duration::from_secs(limit), || {
            let rp = powers(3, 3, d)?;
            let alg = diagonal_ring(&rp, DiagonalSpec::new(c, e).map_err(err)?).map_err(err)?;
            Ok(koszul_test(&alg, n, window).map_err(err)?.passed())
        })?;
        notes.push(format!("({d},{c},{e}) N={n} {took:.2?}"));
    }
    let ring = PolyRing::degrevlex(RingDescriptor::standard(field(), &["x"]).map_err(err)?);
    let cube = parse_polynomial("x^3", &ring).map_err(err)?;
    let alg = GradedAlgebra::standard(Arc::new(PresentedAlgebra::new(&ring, vec![cube], "K[x]/(x^3)").map_err(err)?))
        .map_err(err)?;
    let status = koszul_test(&alg, 2, None).map_err(err)?.status;
    if status != (KoszulStatus::Fail { index: 2, degree: 3 }) {
        return Err(format!("control: K[x]/(x^3) gave {status:?}"));
    }
    notes.push("control witness (2,3)".into());
    Ok(notes.join(", "))
}

fn binding_failures(report: &Report) -> Vec<String> {
    report.failed_checks().map(|c| format!("{} [{}]", c.claim, c.cite)).collect()
}

fn scenario(label: &str, limit: Duration, f: impl FnOnce() -> Result<Report, String>) -> Result<(Report, Duration), String> {
    let start = Instant::now();
    let report = f()?;
    let took = start.elapsed();
    let failures = binding_failures(&report);
    if !failures.is_empty() {
        return Err(format!("{label}: {}", failures.join("; ")));
    }
    if took > limit {
        return Err(format!("{label} took {took:.2?}, limit {limit:?}"));
    }
    Ok((report, took))
}

fn prop2() -> Outcome {
    let params = Params { d: Some(2), c: Some(1), e: Some(1), k: Some(1), max_index: Some(3), grid: Some(2), ..Params::default() };
    let (report, took) = scenario("prop2", Duration::from_secs(300), || verify_prop2(&params).map_err(err))?;
    let cells = report.checks.iter().filter(|c| c.cite == "Proposition 2(b)" && c.status != CheckStatus::Control).count();
    let koszul = report.checks.iter().any(|c| c.cite == "Proposition 2(a)" && c.pass);
    if cells != 9 || !koszul {
        return Err(format!("expected 9 grid cells and a Koszul pass, got {cells} cells"));
    }
    Ok(format!("Koszul at N=3 and 9 cells in {took:.2?}"))
}

fn complex_f() -> Outcome {
    let mut notes = Vec::new();
    for e in [1, 2] {
        let params = Params { d: Some(2), e: Some(e), window: Some(vec![8, 4]), ..Params::default() };
        let (report, took) = scenario(&format!("complex F e={e}"), Duration::from_secs(300), || {
            verify_complex_f(&params).map_err(err)
        })?;
        let wanted = if e == 1 { "top nonzero diagonal degree of H_1" } else { "H_odd(F)_diag vanishes" };
        if !report.checks.iter().any(|c| c.claim.starts_with(wanted) && c.pass) {
            return Err(format!("e={e}: no passing check {wanted:?}"));
        }
        notes.push(format!("e={e} {took:.2?}"));
    }
    Ok(notes.join(", "))
}

fn eagon_northcott() -> Outcome {
    let params = Params { k: Some(3), d: Some(2), n: Some(3), window: Some(vec![6, 3]), ..Params::default() };
    let (report, took) =
        scenario("Eagon-Northcott", Duration::from_secs(120), || verify_thresholds(&params, ThresholdVariant::Exactness, None).map_err(err))?;
    let value = |cite: &str| report.checks.iter().find(|c| c.cite == cite).map(|c| (c.computed.clone(), c.pass));
    let c0 = value("Theorem 4.6");
    let e0 = value("Corollary 4.4");
    if c0 != Some((serde_json::json!("4/3"), true)) || e0 != Some((serde_json::json!("2/3"), true)) {
        return Err(format!("thresholds c0 {c0:?}, e0 {e0:?}"));
    }
    Ok(format!("shapes, alternating sums, c0=4/3, e0=2/3 in {took:.2?}"))
}

fn koszul_base() -> Outcome {
    let params = Params { max_index: Some(3), ..Params::default() };
    let (report, took) =
        scenario("Koszul base", Duration::from_secs(600), || verify_thresholds(&params, ThresholdVariant::KoszulBase, None).map_err(err))?;
    if !report.checks.iter().any(|c| c.cite == "Theorem 4.2" && c.pass) {
        return Err("no passing Koszul check".into());
    }
    Ok(format!("diagonal Koszul at N=3 in {took:.2?}"))
}

fn self_checks() -> Outcome {
    for n in 1..=4usize {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let ring = PolyRing::degrevlex(RingDescriptor::standard(field(), &refs).map_err(err)?);
        let alg = GradedAlgebra::standard(Arc::new(PresentedAlgebra::polynomial_ring(&ring, "S"))).map_err(err)?;
        let res = truncated_minimal_resolution(&alg, &ResidueField, n + 1, &DegreeWindow::single(n as i32 + 2)).map_err(err)?;
        for i in 0..=n + 1 {
            let expected = binomial(n as u64, i as u64) as usize;
            if res.betti().total(i) != expected || res.betti().row(i).iter().any(|(d, _)| d.total() != i as i64) {
                return Err(format!("Koszul complex n={n}: beta_{i} = {}, expected {expected}", res.betti().total(i)));
            }
        }
    }

    let runs: Vec<Report> = [
        Params { d: Some(2), ..Params::default() },
        Params { d: Some(3), ..Params::default() },
    ]
    .iter()
    .map(|p| koszul_verify::run_scenario("thm31", p, None).map_err(err))
    .chain(["complexF", "en-exact", "lemma32"].iter().map(|s| koszul_verify::run_scenario(s, &Params::default(), None).map_err(err)))
    .collect::<Result<_, _>>()?;
    let engine: Vec<_> = runs.iter().flat_map(|r| r.checks.iter()).filter(|c| c.status == CheckStatus::Engine).collect();
    let mut kinds = [false; 3];
    for c in &engine {
        if !c.pass {
            return Err(format!("engine check failed: {}", c.claim));
        }
        kinds[0] |= c.claim.contains("S-pair");
        kinds[1] |= c.claim.contains("d^2 = 0");
        kinds[2] |= c.claim.contains("alternating sums");
    }
    if kinds.contains(&false) {
        return Err(format!("missing engine check kinds {kinds:?}"));
    }

    for id in ["thm31", "prop2", "complexF", "en-exact"] {
        let a = koszul_verify::run_scenario(id, &Params::default(), None).map_err(err)?.to_json();
        let b = koszul_verify::run_scenario(id, &Params::default(), None).map_err(err)?.to_json();
        if a != b {
            return Err(format!("{id}: JSON differs between runs"));
        }
    }
    Ok(format!("Koszul complexes n<=4, {} engine checks, deterministic JSON", engine.len()))
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "colon identities for x_i^d, d in {2,3}", run: lemma_suite },
        Criterion { id: 2, name: "Rees presentation equals the kernel", run: rees_kernel },
        Criterion { id: 3, name: "quadratic diagonal presentations", run: quadratic_band },
        Criterion { id: 4, name: "Koszul flagship", run: flagship },
        Criterion { id: 5, name: "diagonal of a bihomogeneous complete intersection", run: prop2 },
        Criterion { id: 6, name: "homology of the complex F", run: complex_f },
        Criterion { id: 7, name: "Eagon-Northcott resolution and thresholds", run: eagon_northcott },
        Criterion { id: 8, name: "Koszul base ring", run: koszul_base },
        Criterion { id: 9, name: "engine self-checks", run: self_checks },
    ];
    let mut failed = 0;
    for c in &criteria {
        match (c.run)() {
            Ok(detail) => println!("PASS {}: {} ({detail})", c.id, c.name),
            Err(detail) => {
                failed += 1;
                println!("FAIL {}: {} ({detail})", c.id, c.name);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}

//! TOML job files.
//!
//! ```toml
//! p = 32003
//! seed = 20240601
//! out = "report.json"
//!
//! [ring]
//! variables = ["x1", "x2", "x3"]
//! degrees = [[1], [1], [1]]
//!
//! [ideal]
//! generators = ["x1^2", "x2^2"]
//! forms = ["x1^2", "x2^2", "x3^2"]
//! base = []
//!
//! [scenario]
//! id = "thm31"
//! c = 1
//! e = 1
//! N = 3
//!
//! [resolve]
//! module = "quotient"
//! max_index = 3
//! window = [6]
//! ```

use std::ops::Range;
use std::path::{Path, PathBuf};

use koszul_core::{parse_polynomial, Multidegree, PolyRing, Polynomial, PrimeField, RingDescriptor, RingRef, Variable};
use serde::Deserialize;
use toml::Spanned;

use crate::params::{Params, Result, VerifyError, DEFAULT_SEED};
use crate::scenarios::CustomForms;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    command: Option<Spanned<String>>,
    p: Option<Spanned<u32>>,
    seed: Option<u64>,
    out: Option<String>,
    ring: Option<RawRing>,
    ideal: Option<RawIdeal>,
    scenario: Option<RawScenario>,
    resolve: Option<RawResolve>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    variables: Spanned<Vec<String>>,
    degrees: Option<Spanned<Vec<Vec<i32>>>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdeal {
    #[serde(default)]
    generators: Vec<Spanned<String>>,
    forms: Option<Vec<Spanned<String>>>,
    #[serde(default)]
    base: Vec<Spanned<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    id: Option<String>,
    d: Option<i64>,
    c: Option<i64>,
    e: Option<i64>,
    k: Option<i64>,
    n: Option<i64>,
    #[serde(rename = "N")]
    max_index: Option<i64>,
    window: Option<Vec<i64>>,
    grid: Option<i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawResolve {
    module: Option<Spanned<String>>,
    max_index: Option<usize>,
    window: Option<Spanned<Vec<i32>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JobCommand {
    Verify,
    Resolve,
    Gb,
}

/// What a `resolve` job resolves.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolveTarget {
    /// `S/I` over `S`.
    Quotient,
    /// `K` over `S/I`.
    ResidueField,
}

#[derive(Clone, Debug)]
pub struct ResolveOptions {
    pub target: ResolveTarget,
    pub max_index: usize,
    pub window: Multidegree,
}

/// A validated job file.
#[derive(Clone, Debug)]
pub struct JobConfig {
    pub path: PathBuf,
    pub command: Option<JobCommand>,
    pub ring: RingRef,
    pub generators: Vec<Polynomial>,
    pub forms: Option<CustomForms>,
    pub scenario: Option<String>,
    pub params: Params,
    pub resolve: ResolveOptions,
    pub out: Option<PathBuf>,
}

pub fn load_config(path: &Path) -> Result<JobConfig> {
    let text = std::fs::read_to_string(path)?;
    parse_config(&text, path)
}

struct Located<'a> {
    path: &'a Path,
    text: &'a str,
}

impl Located<'_> {
    fn line(&self, span: Option<Range<usize>>) -> usize {
        span.map_or(1, |s| self.text[..s.start.min(self.text.len())].matches('\n').count() + 1)
    }

    fn err(&self, span: Option<Range<usize>>, msg: impl Into<String>) -> VerifyError {
        VerifyError::Config { path: self.path.display().to_string(), line: self.line(span), msg: msg.into() }
    }
}

pub fn parse_config(text: &str, path: &Path) -> Result<JobConfig> {
    let at = Located { path, text };
    let raw: RawConfig = toml::from_str(text).map_err(|e| at.err(e.span(), e.message().trim().to_string()))?;

    let command = match &raw.command {
        None => None,
        Some(c) => Some(match c.get_ref().as_str() {
            "verify" => JobCommand::Verify,
            "resolve" => JobCommand::Resolve,
            "gb" => JobCommand::Gb,
            other => return Err(at.err(Some(c.span()), format!("unknown command {other:?}"))),
        }),
    };
    let p = raw.p.as_ref().map(|p| *p.get_ref());
    let field = PrimeField::new(p.unwrap_or(koszul_core::DEFAULT_PRIME))
        .map_err(|e| at.err(raw.p.as_ref().map(|p| p.span()), e.to_string()))?;

    let ring_section = raw.ring.ok_or_else(|| at.err(None, "missing [ring] section"))?;
    let names = ring_section.variables.get_ref();
    let degrees: Vec<Vec<i32>> = match &ring_section.degrees {
        Some(d) => {
            if d.get_ref().len() != names.len() {
                return Err(at.err(Some(d.span()), "need one degree per variable"));
            }
            d.get_ref().clone()
        }
        None => vec![vec![1]; names.len()],
    };
    let rank = degrees.first().map_or(1, |d| d.len());
    let vars = names
        .iter()
        .zip(&degrees)
        .map(|(n, d)| Variable { name: n.clone(), degree: Multidegree::new(d.clone()) })
        .collect();
    let span = ring_section.degrees.as_ref().map_or(ring_section.variables.span(), |d| d.span());
    let desc = RingDescriptor::new(field, vars, rank).map_err(|e| at.err(Some(span), e.to_string()))?;
    let ring = PolyRing::degrevlex(desc);

    let parse = |items: &[Spanned<String>]| -> Result<Vec<Polynomial>> {
        items
            .iter()
            .map(|s| parse_polynomial(s.get_ref(), &ring).map_err(|e| at.err(Some(s.span()), e.to_string())))
            .collect()
    };
    let (generators, forms) = match &raw.ideal {
        None => (Vec::new(), None),
        Some(ideal) => {
            let generators = parse(&ideal.generators)?;
            let forms = match &ideal.forms {
                None => None,
                Some(items) => {
                    let polys = parse(items)?;
                    check_common_degree(&polys, items, &at)?;
                    Some(CustomForms { ring: ring.clone(), base: parse(&ideal.base)?, forms: polys })
                }
            };
            (generators, forms)
        }
    };

    let scenario = raw.scenario.as_ref();
    let params = Params {
        d: scenario.and_then(|s| s.d),
        c: scenario.and_then(|s| s.c),
        e: scenario.and_then(|s| s.e),
        k: scenario.and_then(|s| s.k),
        n: scenario.and_then(|s| s.n),
        max_index: scenario.and_then(|s| s.max_index),
        p,
        seed: Some(raw.seed.unwrap_or(DEFAULT_SEED)),
        window: scenario.and_then(|s| s.window.clone()),
        grid: scenario.and_then(|s| s.grid),
    };
    if let (Some(f), Some(d)) = (&forms, params.d) {
        if f.forms.first().and_then(|g| g.multidegree()).map(|m| m.total()) != Some(d) {
            return Err(at.err(None, "forms must share degree d"));
        }
    }

    let resolve = match &raw.resolve {
        None => ResolveOptions { target: ResolveTarget::Quotient, max_index: 3, window: Multidegree::new(vec![6; rank]) },
        Some(r) => {
            let target = match r.module.as_ref().map(|m| (m.get_ref().as_str(), m.span())) {
                None | Some(("quotient", _)) => ResolveTarget::Quotient,
                Some(("residue", _)) => ResolveTarget::ResidueField,
                Some((other, span)) => {
                    return Err(at.err(Some(span), format!("module must be \"quotient\" or \"residue\", got {other:?}")))
                }
            };
            let window = match &r.window {
                None => Multidegree::new(vec![6; rank]),
                Some(w) if w.get_ref().len() == rank => Multidegree::new(w.get_ref().clone()),
                Some(w) => return Err(at.err(Some(w.span()), format!("window needs {rank} components"))),
            };
            ResolveOptions { target, max_index: r.max_index.unwrap_or(3), window }
        }
    };

    Ok(JobConfig {
        path: path.to_path_buf(),
        command,
        ring,
        generators,
        forms,
        scenario: scenario.and_then(|s| s.id.clone()),
        params,
        resolve,
        out: raw.out.map(PathBuf::from),
    })
}

fn check_common_degree(polys: &[Polynomial], items: &[Spanned<String>], at: &Located<'_>) -> Result<()> {
    let first = polys.first().and_then(|p| p.multidegree());
    for (p, s) in polys.iter().zip(items) {
        let deg = p.multidegree();
        if deg.is_none() || deg != first {
            return Err(at.err(Some(s.span()), "forms must share degree d"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn load(text: &str) -> Result<JobConfig> {
        parse_config(text, Path::new("job.toml"))
    }

    #[test]
    fn thm31_job() {
        let cfg = load(
            "[ring]\nvariables = [\"x1\",\"x2\",\"x3\"]\n[ideal]\nforms = [\"x1^2\",\"x2^2\",\"x3^2\"]\n[scenario]\nid = \"thm31\"\nN = 3\n",
        )
        .unwrap();
        assert_eq!(cfg.scenario.as_deref(), Some("thm31"));
        assert_eq!(cfg.forms.unwrap().forms.len(), 3);
        assert_eq!(cfg.params.max_index, Some(3));
    }

    #[test]
    fn mixed_degrees_rejected_with_line() {
        let err = load("[ring]\nvariables = [\"x\",\"y\"]\n[ideal]\nforms = [\n  \"x^2\",\n  \"y^3\",\n]\n").unwrap_err();
        assert_eq!(err.to_string(), "job.toml:6: forms must share degree d");
        assert!(err.is_input());
    }

    #[test]
    fn missing_ring_and_unknown_keys() {
        let err = load("[ideal]\ngenerators = [\"x\"]\n").unwrap_err();
        assert!(err.to_string().contains("missing [ring] section"));
        let err = load("[ring]\nvariables = [\"x\"]\ncolour = 3\n").unwrap_err();
        assert!(err.to_string().starts_with("job.toml:3:"), "{err}");
    }

    #[test]
    fn parse_errors_point_at_the_string() {
        let err = load("[ring]\nvariables = [\"x\"]\n[ideal]\ngenerators = [\"x + z\"]\n").unwrap_err();
        assert!(err.to_string().starts_with("job.toml:4:"));
        assert!(err.to_string().contains("unknown variable z"));
    }
}

//! Verification reports and their deterministic JSON form.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use num_rational::Ratio;
use serde::Serialize;
use serde_json::Value;

/// How a check bears on the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    /// A claim proved in the source theorem, checked on this instance.
    Theorem,
    /// Data for an open question or an out-of-hypothesis probe; never affects the verdict.
    Evidence,
    /// A sabotaged input whose expected failure was observed.
    Control,
    /// An internal consistency check of the computation.
    Engine,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub claim: String,
    pub cite: String,
    pub computed: Value,
    pub expected: Value,
    pub pass: bool,
    pub status: CheckStatus,
}

impl Check {
    pub fn new(
        status: CheckStatus,
        claim: impl Into<String>,
        cite: impl Into<String>,
        computed: impl Into<Value>,
        expected: impl Into<Value>,
        pass: bool,
    ) -> Self {
        Self { claim: claim.into(), cite: cite.into(), computed: computed.into(), expected: expected.into(), pass, status }
    }

    pub fn theorem(
        claim: impl Into<String>,
        cite: impl Into<String>,
        computed: impl Into<Value>,
        expected: impl Into<Value>,
        pass: bool,
    ) -> Self {
        Self::new(CheckStatus::Theorem, claim, cite, computed, expected, pass)
    }

    pub fn engine(claim: impl Into<String>, computed: impl Into<Value>, expected: impl Into<Value>, pass: bool) -> Self {
        Self::new(CheckStatus::Engine, claim, "engine self-check", computed, expected, pass)
    }

    /// Counts toward the verdict.
    pub fn is_binding(&self) -> bool {
        self.status != CheckStatus::Evidence
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub scenario: String,
    pub params: BTreeMap<String, Value>,
    pub field_p: u32,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub verdict: Verdict,
    pub truncation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<u64>,
}

impl Report {
    pub fn new(scenario: impl Into<String>, field_p: u32, seed: u64) -> Self {
        Self {
            scenario: scenario.into(),
            params: BTreeMap::new(),
            field_p,
            seed,
            checks: Vec::new(),
            verdict: Verdict::Pass,
            truncation: None,
            runtime_ms: None,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
        self.finalize();
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
        self.finalize();
    }

    /// Adds a truncation disclosure line.
    pub fn disclose(&mut self, text: impl AsRef<str>) {
        let text = text.as_ref();
        self.truncation = Some(match self.truncation.take() {
            Some(t) if !t.split("; ").any(|x| x == text) => format!("{t}; {text}"),
            Some(t) => t,
            None => text.to_string(),
        });
    }

    fn finalize(&mut self) {
        let ok = self.checks.iter().filter(|c| c.is_binding()).all(|c| c.pass);
        self.verdict = if ok { Verdict::Pass } else { Verdict::Fail };
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Pretty JSON with keys in sorted order and a trailing newline.
    /// Going through `Value` sorts the keys, since its maps are ordered.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn failed_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.is_binding() && !c.pass)
    }
}

/// `"num/den"`, or `"num"` for integers.
pub fn rational(r: Ratio<i64>) -> Value {
    if *r.denom() == 1 {
        Value::String(r.numer().to_string())
    } else {
        Value::String(format!("{}/{}", r.numer(), r.denom()))
    }
}

pub fn emit_report(report: &Report, path: &Path) -> std::io::Result<()> {
    std::fs::write(path, report.to_json())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verdict_ignores_evidence() {
        let mut r = Report::new("x", 7, 1);
        r.push(Check::theorem("a", "Lemma 3.2(i)", true, true, true));
        r.push(Check::new(CheckStatus::Evidence, "b", "Question 4.8", false, true, false));
        assert!(r.passed());
        r.push(Check::engine("c", 1, 2, false));
        assert_eq!(r.verdict, Verdict::Fail);
    }

    #[test]
    fn json_is_sorted_and_omits_runtime() {
        let mut r = Report::new("demo", 32003, 5);
        r.param("d", 2).param("c", 1);
        r.push(Check::theorem("claim", "Lemma 3.2(ii)", rational(Ratio::new(4, 3)), "4/3", true));
        let json = r.to_json();
        assert!(json.contains("\"cite\": \"Lemma 3.2(ii)\""));
        assert!(json.contains("\"computed\": \"4/3\""));
        assert!(!json.contains("runtime_ms"));
        let pos = |k: &str| json.find(k).unwrap();
        assert!(pos("\"checks\"") < pos("\"field_p\"") && pos("\"field_p\"") < pos("\"verdict\""));
        assert!(pos("\"c\": 1") < pos("\"d\": 2"));
    }

    #[test]
    fn rationals_print_exactly() {
        assert_eq!(rational(Ratio::new(2, 3)), Value::String("2/3".into()));
        assert_eq!(rational(Ratio::new(4, 2)), Value::String("2".into()));
    }
}

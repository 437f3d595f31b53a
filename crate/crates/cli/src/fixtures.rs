//! Named fixtures: a command, its inputs, and expected report values.

use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::commands::{run_command, Options, RunError};
use crate::render;

pub const CORPUS: &str = include_str!("../fixtures/corpus.json");

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Basis {
    ReferenceClaim,
    IndependentOracle,
    ByDefinition,
}

impl Basis {
    pub fn as_str(&self) -> &'static str {
        match self {
            Basis::ReferenceClaim => "reference-claim",
            Basis::IndependentOracle => "independent-oracle",
            Basis::ByDefinition => "by-definition",
        }
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Fixture {
    pub name: String,
    pub command: String,
    pub inputs: Value,
    /// Dotted report paths (`verdict`, `result.f5_trivial`, `error.field`)
    /// mapped to expected values.
    pub expect: Map<String, Value>,
    pub basis: Basis,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Expectations met and the report's verdict is unknown.
    Unknown,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub fixture: Fixture,
    pub status: Status,
    pub mismatches: Vec<String>,
    pub report: Value,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub unknown: usize,
}

pub fn parse_corpus(text: &str) -> Result<Vec<Fixture>, String> {
    let mut v: Vec<Fixture> =
        serde_json::from_str(text).map_err(|e| format!("corrupted fixture file: {e}"))?;
    v.sort_by(|a, b| a.name.cmp(&b.name));
    if let Some(w) = v.windows(2).find(|w| w[0].name == w[1].name) {
        return Err(format!("duplicate fixture name {:?}", w[0].name));
    }
    Ok(v)
}

fn lookup<'a>(v: &'a Value, path: &str) -> Option<&'a Value> {
    path.split('.').try_fold(v, |cur, key| match cur {
        Value::Object(m) => m.get(key),
        Value::Array(a) => key.parse::<usize>().ok().and_then(|i| a.get(i)),
        _ => None,
    })
}

pub fn run_fixture(f: &Fixture, opts: Options) -> Outcome {
    let (report, unknown) = match run_command(&f.command, &f.inputs, opts) {
        Ok(r) => (r.to_json(), r.is_unknown()),
        Err(e) => {
            let err = match &e {
                RunError::Input(ie) => {
                    json!({"kind": "input", "field": ie.field, "message": ie.message})
                }
                RunError::Compute(m) => json!({"kind": "compute", "message": m}),
            };
            (
                json!({"command": f.command, "inputs": f.inputs, "error": err}),
                false,
            )
        }
    };
    let mismatches: Vec<String> = f
        .expect
        .iter()
        .filter_map(|(path, want)| {
            let got = lookup(&report, path);
            (got != Some(want)).then(|| {
                format!(
                    "{path}: expected {want}, got {}",
                    got.map_or("nothing".to_string(), Value::to_string)
                )
            })
        })
        .collect();
    let status = if !mismatches.is_empty() {
        Status::Fail
    } else if unknown {
        Status::Unknown
    } else {
        Status::Pass
    };
    Outcome {
        fixture: f.clone(),
        status,
        mismatches,
        report,
    }
}

pub fn run_all(fixtures: &[Fixture], opts: Options) -> (Vec<Outcome>, Summary) {
    let outcomes: Vec<Outcome> = fixtures.iter().map(|f| run_fixture(f, opts)).collect();
    let mut s = Summary::default();
    for o in &outcomes {
        match o.status {
            Status::Pass => s.pass += 1,
            Status::Fail => s.fail += 1,
            Status::Unknown => s.unknown += 1,
        }
    }
    (outcomes, s)
}

fn outcome_json(o: &Outcome) -> Value {
    json!({
        "name": o.fixture.name,
        "basis": o.fixture.basis.as_str(),
        "expect": o.fixture.expect,
        "note": o.fixture.note,
        "status": o.status.as_str(),
        "mismatches": o.mismatches,
        "report": o.report,
    })
}

/// `fixtures run`: exit 1 on any failure or an unreadable corpus.
pub fn run_cli(name: Option<&str>, file: Option<&str>, opts: Options) -> (i32, String, String) {
    let options = json!({"height_bound": opts.height_bound, "seed": opts.seed});
    let fail = |field: &str, msg: String| {
        let v = json!({
            "command": "fixtures run",
            "options": options,
            "error": {"kind": "input", "field": field, "message": msg},
        });
        (
            1,
            render(&v),
            format!("invalid input: field `{field}`: {msg}\n"),
        )
    };
    let text = match file {
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => t,
            Err(e) => return fail("file", format!("cannot read {p}: {e}")),
        },
        None => CORPUS.to_string(),
    };
    let mut fixtures = match parse_corpus(&text) {
        Ok(f) => f,
        Err(m) => return fail("file", m),
    };
    if let Some(n) = name {
        fixtures.retain(|f| f.name == n);
        if fixtures.is_empty() {
            return fail("name", format!("no fixture named {n:?}"));
        }
    }
    let (outcomes, s) = run_all(&fixtures, opts);
    let v = json!({
        "command": "fixtures run",
        "options": options,
        "fixtures": outcomes.iter().map(outcome_json).collect::<Vec<_>>(),
        "summary": {"pass": s.pass, "fail": s.fail, "unknown": s.unknown},
    });
    let code = if s.fail > 0 { 1 } else { 0 };
    (code, render(&v), String::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_corpus_parses() {
        let f = parse_corpus(CORPUS).unwrap();
        assert!(f.len() >= 20);
    }

    #[test]
    fn corrupted_corpus_rejected() {
        assert!(parse_corpus("[{\"name\": 1}]").is_err());
        assert!(parse_corpus("not json").is_err());
    }

    #[test]
    fn lookup_paths() {
        let v = json!({"a": {"b": [1, {"c": true}]}});
        assert_eq!(lookup(&v, "a.b.1.c"), Some(&json!(true)));
        assert_eq!(lookup(&v, "a.x"), None);
    }
}

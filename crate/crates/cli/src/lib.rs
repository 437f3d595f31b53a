//! Command-line front end: argument parsing, dispatch, fixture corpus.

pub mod commands;
pub mod fixtures;
pub mod inputs;

use clap::{Arg, ArgAction, ArgMatches, Command};
use serde_json::{json, Map, Value};

use commands::{run_command, Options, RunError};
use inputs::InputError;

pub const HEIGHT_ENV: &str = "TORUSLAB_HEIGHT_BOUND";

/// Input fields accepted by each subcommand; `?` marks a boolean switch.
const FIELDS: &[(&str, &str, &[&str])] = &[
    ("qform", "isotropy", &["form"]),
    ("qform", "hyperbolic", &["form"]),
    ("qform", "represents", &["form", "value"]),
    ("qform", "divides", &["slots", "d"]),
    ("oct", "division", &["C"]),
    ("oct", "embeds", &["C", "alpha"]),
    ("torus", "info", &["L", "K"]),
    ("torus", "distinguished", &["L", "K"]),
    ("torus", "classify", &["L", "K"]),
    ("torus", "shape-check", &["L", "K", "samples"]),
    ("h1", "describe", &["L", "K"]),
    ("h1", "trivial", &["L", "K", "s", "z"]),
    ("h1", "decompose", &["L", "K", "s", "z"]),
    ("tits", "norm", &["L", "K", "u", "mu", "a", "x"]),
    (
        "tits",
        "isotope",
        &["L", "K", "u", "mu", "w", "?normalize", "samples"],
    ),
    ("tits", "zerodiv", &["L", "K", "u", "mu"]),
    ("tits", "lisom", &["L", "K", "u", "mu", "v", "nu"]),
    ("tits", "harness", &["L", "K", "samples"]),
    ("albert", "product-check", &["C", "Gamma", "samples"]),
    ("albert", "invariants", &["C", "Gamma", "X"]),
    ("albert", "f3", &["C", "Gamma"]),
    ("albert", "f5", &["C", "Gamma"]),
    ("group", "oct", GROUP_FIELDS),
    ("group", "f3", GROUP_FIELDS),
    ("group", "f5", GROUP_FIELDS),
    (
        "group",
        "embed-check",
        &["kind", "C", "Gamma", "alpha", "a", "?division", "L", "K"],
    ),
    ("group", "distinguished-torus", GROUP_FIELDS),
    ("group", "f3a", &["L", "?first_construction"]),
];

const GROUP_FIELDS: &[&str] = &["kind", "C", "Gamma", "alpha", "a", "?division"];

const GROUPS: &[(&str, &str)] = &[
    ("qform", "Quadratic forms over Q"),
    ("oct", "Octonion algebras"),
    ("torus", "Unitary tori T(L, K)"),
    ("h1", "First cohomology of T(L, K)"),
    ("tits", "Etale Tits process algebras"),
    ("albert", "Reduced Albert algebras"),
    ("group", "Groups of type G2, A2, F4"),
];

fn flag_name(field: &str) -> String {
    field.replace('_', "-")
}

fn cli() -> Command {
    let mut root = Command::new("toruslab")
        .about("Exact computations with unitary tori, octonions and Albert algebras over Q")
        .subcommand_required(true)
        .arg(
            Arg::new("seed")
                .long("seed")
                .global(true)
                .value_parser(clap::value_parser!(u64))
                .help("Seed for all randomized sampling [default: 0]"),
        )
        .arg(
            Arg::new("height-bound")
                .long("height-bound")
                .global(true)
                .value_parser(clap::value_parser!(i64).range(1..))
                .help("Witness-search height bound [default: $TORUSLAB_HEIGHT_BOUND or 500]"),
        );
    for (group, about) in GROUPS {
        let mut g = Command::new(*group).about(*about).subcommand_required(true);
        for (_, sub, fields) in FIELDS.iter().filter(|(g2, _, _)| g2 == group) {
            let mut c = Command::new(*sub);
            for f in fields.iter() {
                c = match f.strip_prefix('?') {
                    Some(name) => c.arg(
                        Arg::new(name.to_string())
                            .long(flag_name(name))
                            .action(ArgAction::SetTrue),
                    ),
                    None => c.arg(
                        Arg::new(f.to_string())
                            .long(flag_name(f))
                            .allow_hyphen_values(true)
                            .value_name("VALUE"),
                    ),
                };
            }
            g = g.subcommand(c);
        }
        root = root.subcommand(g);
    }
    root.subcommand(
        Command::new("fixtures")
            .about("Run the fixture corpus")
            .subcommand_required(true)
            .subcommand(
                Command::new("run")
                    .arg(Arg::new("name").long("name").help("Run a single fixture"))
                    .arg(
                        Arg::new("file")
                            .long("file")
                            .help("Fixture file to use instead of the built-in corpus"),
                    ),
            ),
    )
}

fn collect_inputs(m: &ArgMatches, fields: &[&str]) -> Value {
    let mut map = Map::new();
    for f in fields {
        match f.strip_prefix('?') {
            Some(name) => {
                if m.get_flag(name) {
                    map.insert(name.to_string(), json!(true));
                }
            }
            None => {
                if let Some(v) = m.get_one::<String>(f) {
                    map.insert(f.to_string(), json!(v));
                }
            }
        }
    }
    Value::Object(map)
}

/// Resolve options: flag, then environment, then defaults.
pub fn resolve_options(
    seed: Option<u64>,
    height: Option<i64>,
    env_height: Option<&str>,
) -> Result<Options, InputError> {
    let mut o = Options::default();
    if let Some(s) = seed {
        o.seed = s;
    }
    match (height, env_height) {
        (Some(h), _) => o.height_bound = h,
        (None, Some(e)) => {
            o.height_bound = e
                .trim()
                .parse::<i64>()
                .ok()
                .filter(|h| *h > 0)
                .ok_or_else(|| InputError::new(HEIGHT_ENV, "expected a positive integer"))?;
        }
        (None, None) => {}
    }
    Ok(o)
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn error_report(command: &str, e: &RunError) -> Value {
    let err = match e {
        RunError::Input(ie) => json!({"kind": "input", "field": ie.field, "message": ie.message}),
        RunError::Compute(m) => json!({"kind": "compute", "message": m}),
    };
    json!({"command": command, "error": err})
}

/// Run with an explicit environment height bound; returns (exit code, stdout, stderr).
pub fn run_with_env(argv: &[String], env_height: Option<&str>) -> (i32, String, String) {
    let m = match cli().try_get_matches_from(argv) {
        Ok(m) => m,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            return (code, e.render().to_string(), String::new());
        }
    };
    let (group, gm) = m.subcommand().expect("subcommand required");
    let (sub, sm) = gm.subcommand().expect("subcommand required");
    let command = format!("{group} {sub}");
    let opts = match resolve_options(
        sm.get_one::<u64>("seed").copied(),
        sm.get_one::<i64>("height-bound").copied(),
        env_height,
    ) {
        Ok(o) => o,
        Err(e) => {
            let msg = format!("invalid input: {e}\n");
            return (1, render(&error_report(&command, &RunError::Input(e))), msg);
        }
    };

    if group == "fixtures" {
        let name = sm.get_one::<String>("name").map(String::as_str);
        let file = sm.get_one::<String>("file").map(String::as_str);
        return fixtures::run_cli(name, file, opts);
    }

    let fields = FIELDS
        .iter()
        .find(|(g, s, _)| *g == group && *s == sub)
        .map(|(_, _, f)| *f)
        .expect("subcommand is in the field table");
    let inputs = collect_inputs(sm, fields);
    match run_command(&command, &inputs, opts) {
        Ok(r) => {
            let code = if r.is_unknown() { 2 } else { 0 };
            (code, render(&r.to_json()), String::new())
        }
        Err(e) => {
            let msg = format!("{e}\n");
            (1, render(&error_report(&command, &e)), msg)
        }
    }
}

/// Run with the process environment.
pub fn run(argv: &[String]) -> (i32, String, String) {
    let env = std::env::var(HEIGHT_ENV).ok();
    run_with_env(argv, env.as_deref())
}

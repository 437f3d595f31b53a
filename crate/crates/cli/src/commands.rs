//! Command dispatch: input document in, report document out.

use serde_json::{json, Value};

use toruslab::cohomology::{self, make_class, psi, t_q_identity_holds, SearchBounds, Verdict};
use toruslab::composition::{embeds_quadratic, CompositionAlgebra};
use toruslab::etale::QuadraticEtale;
use toruslab::exact_numbers::fmt_rational;
use toruslab::invariants::{
    check_embedding_necessary, distinguished_torus_exists, f3a_check, f5_albert,
    DiagonalUnitaryInvolution, GroupData,
};
use toruslab::jordan::{
    find_zero_divisor, isotope_map, l_isomorphic, normalizing_element, sample_pairs,
    titsisom_harness, AdmissiblePair, ReducedAlbert, TitsProcessAlgebra,
};
use toruslab::quadratic_forms::{
    arason_trivial, is_hyperbolic, is_isotropic, pfister, pfister_divides_1fold, represents,
    QuadraticForm,
};
use toruslab::sample::{rng, small_vec};
use toruslab::tori::{shape_isomorphism_check, TorusShape, UnitaryTorus};
use toruslab::{Error, Rational};

use crate::inputs::{InputError, Inputs};

pub const DEFAULT_SAMPLES: u64 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Options {
    pub height_bound: i64,
    pub seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            height_bound: cohomology::DEFAULT_HEIGHT_BOUND,
            seed: 0,
        }
    }
}

/// A computed report; `verdict` is `true`, `false`, `"unknown"` or null.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub options: Options,
    pub verdict: Value,
    pub result: Value,
}

impl Report {
    pub fn is_unknown(&self) -> bool {
        self.verdict == json!("unknown")
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "options": {"height_bound": self.options.height_bound, "seed": self.options.seed},
            "verdict": self.verdict,
            "result": self.result,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RunError {
    Input(InputError),
    Compute(String),
}

impl std::fmt::Display for RunError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunError::Input(e) => write!(f, "invalid input: {e}"),
            RunError::Compute(m) => write!(f, "error: {m}"),
        }
    }
}

impl From<InputError> for RunError {
    fn from(e: InputError) -> Self {
        RunError::Input(e)
    }
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Compute(e.to_string())
    }
}

type RunResult<T> = std::result::Result<T, RunError>;

fn field_err(field: &str, e: Error) -> RunError {
    RunError::Input(InputError::new(field, e.to_string()))
}

pub fn q(r: &Rational) -> Value {
    Value::String(fmt_rational(r))
}

pub fn el(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(q).collect())
}

fn verdict(v: Verdict) -> Value {
    match v {
        Verdict::True => json!(true),
        Verdict::False => json!(false),
        Verdict::Unknown => json!("unknown"),
    }
}

fn torus_json(t: &UnitaryTorus) -> Value {
    json!({
        "alpha": t.alpha().to_string(),
        "delta": t.delta().to_string(),
        "q_t": t.q_t().to_string(),
        "shape": t.classify().to_string(),
    })
}

pub const COMMANDS: &[&str] = &[
    "qform isotropy",
    "qform hyperbolic",
    "qform represents",
    "qform divides",
    "oct division",
    "oct embeds",
    "torus info",
    "torus distinguished",
    "torus classify",
    "torus shape-check",
    "h1 describe",
    "h1 trivial",
    "h1 decompose",
    "tits norm",
    "tits isotope",
    "tits zerodiv",
    "tits lisom",
    "tits harness",
    "albert product-check",
    "albert invariants",
    "albert f3",
    "albert f5",
    "group oct",
    "group f3",
    "group f5",
    "group embed-check",
    "group distinguished-torus",
    "group f3a",
];

pub fn run_command(command: &str, inputs: &Value, opts: Options) -> RunResult<Report> {
    let mut inp = Inputs::new(inputs)?;
    let bounds = SearchBounds::with_height(opts.height_bound);
    let (v, result) = match command {
        "qform isotropy" => {
            let f = form(&mut inp, "form")?;
            inp.finish()?;
            let iso = is_isotropic(&f)?;
            let place = f.anisotropic_place()?.map(|p| p.to_string());
            (
                json!(iso),
                json!({"form": f.to_string(), "anisotropic_place": place}),
            )
        }
        "qform hyperbolic" => {
            let f = form(&mut inp, "form")?;
            inp.finish()?;
            (json!(is_hyperbolic(&f)?), json!({"form": f.to_string()}))
        }
        "qform represents" => {
            let f = form(&mut inp, "form")?;
            let value = inp.rational("value")?;
            inp.finish()?;
            (
                json!(represents(&f, &value)?),
                json!({"form": f.to_string()}),
            )
        }
        "qform divides" => {
            let slots = inp.list("slots")?;
            let d = inp.rational("d")?;
            inp.finish()?;
            let p = pfister(&slots).map_err(|e| field_err("slots", e))?;
            let ok = pfister_divides_1fold(&d, &p).map_err(|e| field_err("d", e))?;
            (
                json!(ok),
                json!({"pfister": p.to_string(), "hyperbolic": arason_trivial(&p)?}),
            )
        }
        "oct division" => {
            let c = inp.composition("C")?;
            inp.finish()?;
            (
                json!(c.is_division()?),
                json!({"norm_form": c.norm_form().to_string(), "dim": c.dim()}),
            )
        }
        "oct embeds" => {
            let c = inp.composition("C")?;
            let alpha = inp.rational("alpha")?;
            inp.finish()?;
            let k = QuadraticEtale::new(&alpha).map_err(|e| field_err("alpha", e))?;
            (
                json!(embeds_quadratic(&k, &c)?),
                json!({"k_split": k.is_split()}),
            )
        }
        "torus info" => {
            let t = inp.torus()?;
            inp.finish()?;
            let e = t.ealg();
            let fixed = e.fixed_basis().len();
            let switch = e.switch_idempotents().is_some();
            let mut r = torus_json(&t);
            r["distinguished"] = json!(t.is_distinguished());
            r["fixed_algebra_dim"] = json!(fixed);
            r["k_split_switch_idempotents"] = json!(switch);
            r["h1"] = json!(cohomology::h1_description(&t).summary());
            (Value::Null, r)
        }
        "torus distinguished" => {
            let t = inp.torus()?;
            inp.finish()?;
            (json!(t.is_distinguished()), torus_json(&t))
        }
        "torus classify" => {
            let t = inp.torus()?;
            inp.finish()?;
            (Value::Null, torus_json(&t))
        }
        "torus shape-check" => {
            let t = inp.torus()?;
            let samples = inp.opt_u64("samples")?.unwrap_or(DEFAULT_SAMPLES) as usize;
            inp.finish()?;
            if t.classify() == TorusShape::General {
                return Err(RunError::Input(InputError::new(
                    "L",
                    "no explicit shape isomorphism for a general torus",
                )));
            }
            let mut r = rng(opts.seed);
            let rep = shape_isomorphism_check(&t, &mut r, samples)?;
            (
                json!(rep.passed()),
                json!({
                    "shape": rep.shape.to_string(),
                    "samples": rep.samples,
                    "lands_in_points": rep.lands_in_points,
                    "homomorphism": rep.homomorphism,
                    "left_inverse": rep.left_inverse,
                    "right_inverse": rep.right_inverse,
                }),
            )
        }
        "h1 describe" => {
            let t = inp.torus()?;
            inp.finish()?;
            let d = cohomology::h1_description(&t);
            (
                Value::Null,
                json!({"description": d.summary(), "trivial_group": d.is_trivial_group(), "shape": t.classify().to_string()}),
            )
        }
        "h1 trivial" => {
            let t = inp.torus()?;
            let s = inp.list_of_len("s", 3)?;
            let z = inp.list_of_len("z", 2)?;
            inp.finish()?;
            let c = make_class(&t, &s, &z).map_err(|e| field_err("s", e))?;
            let d = c.is_trivial(&bounds)?;
            (
                verdict(d.verdict),
                json!({
                    "witness": d.witness.as_deref().map(el),
                    "obstruction": d.obstruction,
                    "method": d.method,
                }),
            )
        }
        "h1 decompose" => {
            let t = inp.torus()?;
            let s = inp.list_of_len("s", 3)?;
            let z = inp.list_of_len("z", 2)?;
            inp.finish()?;
            let c = make_class(&t, &s, &z).map_err(|e| field_err("s", e))?;
            let d = c.decompose();
            let back = psi(&t, &d.s_part, c.z())?.multiply(&d.k_part)?;
            let tq = t_q_identity_holds(&t, d.k_part.z())?;
            (
                Value::Null,
                json!({
                    "k_part": el(d.k_part.z()),
                    "s_part": el(&d.s_part),
                    "recomposes": back.pair() == c.pair(),
                    "t_q_identity": tq,
                }),
            )
        }
        "tits norm" => {
            let j = tits(&mut inp)?;
            let a = inp.list_of_len("a", 3)?;
            let x = inp.list_of_len("x", 6)?;
            inp.finish()?;
            let n = j.cubic_norm(&j.element(&a, &x)?);
            (Value::Null, json!({"norm": q(&n)}))
        }
        "tits isotope" => {
            let j = tits(&mut inp)?;
            let w = inp.opt_list("w")?;
            let normalize = inp.opt_bool("normalize")?.unwrap_or(false);
            let samples = inp.opt_u64("samples")?.unwrap_or(DEFAULT_SAMPLES) as usize;
            inp.finish()?;
            let w = match (w, normalize) {
                (Some(w), false) => w,
                (None, true) => normalizing_element(&j),
                _ => {
                    return Err(RunError::Input(InputError::new(
                        "w",
                        "give exactly one of `w` and `normalize`",
                    )))
                }
            };
            let m = isotope_map(&j, &w).map_err(|e| field_err("w", e))?;
            let mut r = rng(opts.seed);
            let mut isometry = true;
            for _ in 0..samples {
                let x = m
                    .image
                    .element(&small_vec(&mut r, 3, 4), &small_vec(&mut r, 6, 4))?;
                isometry &= m.image.cubic_norm(&x) == j.cubic_norm(&m.apply(&x));
            }
            let t = j.torus();
            let p = m.image.pair();
            (
                json!(isometry),
                json!({
                    "u": el(&p.u),
                    "mu": el(&p.mu),
                    "w": el(&w),
                    "norm_u": q(&t.l().norm(&p.u)),
                    "norm_mu": q(&t.k().norm(&p.mu)),
                    "admissible": t.l().norm(&p.u) == t.k().norm(&p.mu),
                    "isometry_samples": samples,
                }),
            )
        }
        "tits zerodiv" => {
            let j = tits(&mut inp)?;
            inp.finish()?;
            let z = find_zero_divisor(&j, &bounds);
            let elem = z
                .element
                .as_ref()
                .map(|e| json!({"a": el(&e.a), "x": el(&e.x)}));
            let norm = z.element.as_ref().map(|e| q(&j.cubic_norm(e)));
            (verdict(z.verdict), json!({"element": elem, "norm": norm}))
        }
        "tits lisom" => {
            let j1 = tits(&mut inp)?;
            let v = inp.list_of_len("v", 3)?;
            let nu = inp.list_of_len("nu", 2)?;
            inp.finish()?;
            let j2 = TitsProcessAlgebra::new(j1.torus(), &v, &nu).map_err(|e| field_err("v", e))?;
            let rep = l_isomorphic(&j1, &j2, &bounds)?;
            let w = rep.witness.as_ref().map(|w| {
                json!({
                    "automorphism": w.automorphism,
                    "conjugate": w.conjugate,
                    "w": w.w.as_deref().map(el),
                })
            });
            (
                verdict(rep.verdict),
                json!({"witness": w, "branches": rep.branches.len()}),
            )
        }
        "tits harness" => {
            let t = inp.torus()?;
            let samples = inp.opt_u64("samples")?.unwrap_or(5) as usize;
            let extra = inp.opt_array("pairs")?.unwrap_or_default();
            inp.finish()?;
            let mut r = rng(opts.seed);
            let mut pairs = sample_pairs(&t, &mut r, samples, 3);
            for (i, p) in extra.iter().enumerate() {
                let mut pi = Inputs::new(p)
                    .map_err(|_| InputError::new(format!("pairs[{i}]"), "expected an object"))?;
                let u = pi.list_of_len("u", 3)?;
                let mu = pi.list_of_len("mu", 2)?;
                pi.finish()?;
                pairs.push(AdmissiblePair { u, mu });
            }
            let rep = titsisom_harness(&t, &pairs, &bounds).map_err(|e| field_err("pairs", e))?;
            (
                json!(rep.passed),
                json!({
                    "h1_trivial": rep.h1_trivial,
                    "pairs": rep.pairs.len(),
                    "verdicts": rep.verdicts.iter().map(|v| verdict(*v)).collect::<Vec<_>>(),
                    "certified_nontrivial": rep.certified_nontrivial,
                }),
            )
        }
        "albert product-check" => {
            let a = albert(&mut inp)?;
            let samples = inp.opt_u64("samples")?.unwrap_or(DEFAULT_SAMPLES) as usize;
            inp.finish()?;
            let mut r = rng(opts.seed);
            let (mut comm, mut unit, mut deg3) = (true, true, true);
            let i = a.identity();
            for _ in 0..samples {
                let x = a.from_coords(&small_vec(&mut r, 27, 3));
                let y = a.from_coords(&small_vec(&mut r, 27, 3));
                comm &= a.product(&x, &y) == a.product(&y, &x);
                unit &= a.product(&x, &i) == x;
                deg3 &= a.satisfies_degree_three(&x);
            }
            (
                json!(comm && unit && deg3),
                json!({"samples": samples, "commutative": comm, "identity": unit, "degree_three_identity": deg3}),
            )
        }
        "albert invariants" => {
            let a = albert(&mut inp)?;
            let x = inp.list_of_len("X", 27)?;
            inp.finish()?;
            let x = a.from_coords(&x);
            let (t, s, n) = a.trace_and_norm(&x);
            (
                Value::Null,
                json!({"T": q(&t), "S": q(&s), "N": q(&n), "degree_three_identity": a.satisfies_degree_three(&x)}),
            )
        }
        "albert f3" => {
            let a = albert(&mut inp)?;
            inp.finish()?;
            let f3 = a.composition().norm_form();
            let triv = arason_trivial(&f3)?;
            (
                Value::Null,
                json!({"f3": f3.to_string(), "f3_trivial": triv}),
            )
        }
        "albert f5" => {
            let a = albert(&mut inp)?;
            inp.finish()?;
            let f5 = f5_albert(a.composition(), a.gamma())?;
            (
                Value::Null,
                json!({"f5": f5.to_string(), "f5_trivial": arason_trivial(&f5)?}),
            )
        }
        "group oct" => {
            let g = group(&mut inp)?;
            inp.finish()?;
            let c = g.oct();
            (
                Value::Null,
                json!({"kind": g.kind(), "params": el(c.params()), "is_division": c.is_division()?}),
            )
        }
        "group f3" => {
            let g = group(&mut inp)?;
            inp.finish()?;
            let f3 = g.f3();
            (
                Value::Null,
                json!({"kind": g.kind(), "f3": f3.to_string(), "f3_trivial": arason_trivial(&f3)?}),
            )
        }
        "group f5" => {
            let g = group(&mut inp)?;
            inp.finish()?;
            let Some(f5) = g.f5() else {
                return Err(RunError::Input(InputError::new(
                    "kind",
                    "f5 is defined for F4 data only",
                )));
            };
            (
                Value::Null,
                json!({"kind": g.kind(), "f5": f5.to_string(), "f5_trivial": arason_trivial(&f5)?}),
            )
        }
        "group embed-check" => {
            let g = group(&mut inp)?;
            let t = inp.torus()?;
            inp.finish()?;
            let rep = check_embedding_necessary(&g, &t)?;
            let records: Vec<Value> = rep
                .records
                .iter()
                .map(|r| {
                    json!({
                        "condition_id": r.id,
                        "condition": r.condition,
                        "status": r.status.as_str(),
                        "detail": r.detail,
                    })
                })
                .collect();
            (
                json!(!rep.embedding_impossible),
                json!({"kind": g.kind(), "records": records, "embedding_impossible": rep.embedding_impossible, "torus": torus_json(&t)}),
            )
        }
        "group distinguished-torus" => {
            let g = group(&mut inp)?;
            inp.finish()?;
            let rep = distinguished_torus_exists(&g)?;
            let w = rep.witness.as_ref().map(|t| {
                let mut v = torus_json(t);
                v["L"] = json!(cubic_label(t));
                v
            });
            (
                json!(rep.verdict),
                json!({"kind": g.kind(), "invariant": rep.invariant.to_string(), "witness": w}),
            )
        }
        "group f3a" => {
            let l = inp.str("L")?;
            let l = crate::inputs::parse_cubic("L", &l)?;
            let fc = inp.opt_bool("first_construction")?.unwrap_or(false);
            inp.finish()?;
            let rep = f3a_check(fc, &l).map_err(|e| field_err("L", e))?;
            (
                Value::Null,
                json!({
                    "l_shape": rep.l_shape,
                    "f3_trivial": rep.f3_trivial,
                    "l1_embedding": verdict(rep.l1_embedding),
                    "sl1_embedding": verdict(rep.sl1_embedding),
                    "note": rep.note,
                }),
            )
        }
        other => {
            return Err(RunError::Input(InputError::new(
                "command",
                format!("unknown command {other:?}"),
            )))
        }
    };
    Ok(Report {
        command: command.to_string(),
        inputs: inputs.clone(),
        options: opts,
        verdict: v,
        result,
    })
}

fn form(inp: &mut Inputs, key: &str) -> RunResult<QuadraticForm> {
    let c = inp.list(key)?;
    QuadraticForm::new(c).map_err(|e| field_err(key, e))
}

fn tits(inp: &mut Inputs) -> RunResult<TitsProcessAlgebra> {
    let t = inp.torus()?;
    let u = inp.list_of_len("u", 3)?;
    let mu = inp.list_of_len("mu", 2)?;
    TitsProcessAlgebra::new(&t, &u, &mu).map_err(|e| field_err("u", e))
}

fn albert(inp: &mut Inputs) -> RunResult<ReducedAlbert> {
    let c = inp.composition("C")?;
    let g = inp.list_of_len("Gamma", 3)?;
    ReducedAlbert::new(&c, [g[0].clone(), g[1].clone(), g[2].clone()])
        .map_err(|e| field_err("Gamma", e))
}

/// Kind from `kind`, or inferred: `Gamma` gives F4, `a` gives A2, else G2.
fn group(inp: &mut Inputs) -> RunResult<GroupData> {
    let kind = inp.opt_str("kind")?;
    let c = inp.opt_list("C")?;
    let gamma = inp.opt_list("Gamma")?;
    let alpha = inp.opt_rational("alpha")?;
    let a = inp.opt_list("a")?;
    let division = inp.opt_bool("division")?.unwrap_or(false);
    let kind = match kind.as_deref() {
        Some(k) => k.to_string(),
        None if gamma.is_some() => "F4".into(),
        None if a.is_some() => "A2".into(),
        None => "G2".into(),
    };
    let comp = |c: Option<Vec<Rational>>| -> RunResult<CompositionAlgebra> {
        let c = c.ok_or_else(|| InputError::new("C", "missing required field"))?;
        if c.len() != 3 {
            return Err(RunError::Input(InputError::new(
                "C",
                "expected three octonion parameters",
            )));
        }
        CompositionAlgebra::new(c).map_err(|e| field_err("C", e))
    };
    match kind.as_str() {
        "G2" => {
            if division {
                return Err(RunError::Input(InputError::new(
                    "division",
                    "not meaningful for G2",
                )));
            }
            Ok(GroupData::G2 { c: comp(c)? })
        }
        "A2" => {
            let alpha = alpha.ok_or_else(|| InputError::new("alpha", "missing required field"))?;
            let a = a.ok_or_else(|| InputError::new("a", "missing required field"))?;
            if a.len() != 3 {
                return Err(RunError::Input(InputError::new(
                    "a",
                    "expected three entries",
                )));
            }
            let inv =
                DiagonalUnitaryInvolution::new(&alpha, [a[0].clone(), a[1].clone(), a[2].clone()])
                    .map_err(|e| field_err("a", e))?;
            Ok(GroupData::A2 {
                involution: inv,
                division,
            })
        }
        "F4" => {
            let g = gamma.ok_or_else(|| InputError::new("Gamma", "missing required field"))?;
            if g.len() != 3 {
                return Err(RunError::Input(InputError::new(
                    "Gamma",
                    "expected three entries",
                )));
            }
            let albert = ReducedAlbert::new(&comp(c)?, [g[0].clone(), g[1].clone(), g[2].clone()])
                .map_err(|e| field_err("Gamma", e))?;
            Ok(GroupData::F4 { albert, division })
        }
        other => Err(RunError::Input(InputError::new(
            "kind",
            format!("expected G2, A2 or F4, got {other:?}"),
        ))),
    }
}

fn cubic_label(t: &UnitaryTorus) -> String {
    use toruslab::etale::CubicKind;
    match t.l().kind() {
        CubicKind::Split => "split".into(),
        CubicKind::Mixed { alpha0 } => format!("mixed:{alpha0}"),
        CubicKind::Field { c } => format!("field:{},{},{}", c[0], c[1], c[2]),
    }
}

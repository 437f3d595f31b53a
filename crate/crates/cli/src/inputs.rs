//! Input documents: string-valued fields parsed into exact objects, with
//! unknown fields rejected.

use serde_json::{Map, Value};

use toruslab::composition::CompositionAlgebra;
use toruslab::etale::{CubicEtale, QuadraticEtale};
use toruslab::exact_numbers::parse_rational;
use toruslab::tori::UnitaryTorus;
use toruslab::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub field: String,
    pub message: String,
}

impl InputError {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        InputError {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "field `{}`: {}", self.field, self.message)
    }
}

pub type InputResult<T> = std::result::Result<T, InputError>;

/// Field access over an input object; `finish` rejects unread fields.
pub struct Inputs {
    map: Map<String, Value>,
    seen: Vec<String>,
}

impl Inputs {
    pub fn new(v: &Value) -> InputResult<Self> {
        match v {
            Value::Object(m) => Ok(Inputs {
                map: m.clone(),
                seen: Vec::new(),
            }),
            _ => Err(InputError::new("inputs", "expected an object")),
        }
    }

    fn get(&mut self, key: &str) -> Option<Value> {
        self.seen.push(key.to_string());
        self.map.get(key).cloned()
    }

    pub fn opt_str(&mut self, key: &str) -> InputResult<Option<String>> {
        match self.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(Value::String(s)) => Ok(Some(s)),
            Some(Value::Number(n)) => Ok(Some(n.to_string())),
            Some(_) => Err(InputError::new(key, "expected a string")),
        }
    }

    pub fn str(&mut self, key: &str) -> InputResult<String> {
        self.opt_str(key)?
            .ok_or_else(|| InputError::new(key, "missing required field"))
    }

    pub fn opt_u64(&mut self, key: &str) -> InputResult<Option<u64>> {
        match self.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(Value::Number(n)) => n
                .as_u64()
                .map(Some)
                .ok_or_else(|| InputError::new(key, "expected a non-negative integer")),
            Some(Value::String(s)) => s
                .trim()
                .parse()
                .map(Some)
                .map_err(|_| InputError::new(key, "expected a non-negative integer")),
            Some(_) => Err(InputError::new(key, "expected a non-negative integer")),
        }
    }

    pub fn opt_bool(&mut self, key: &str) -> InputResult<Option<bool>> {
        match self.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(Value::Bool(b)) => Ok(Some(b)),
            Some(_) => Err(InputError::new(key, "expected a boolean")),
        }
    }

    pub fn opt_array(&mut self, key: &str) -> InputResult<Option<Vec<Value>>> {
        match self.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(Value::Array(a)) => Ok(Some(a)),
            Some(_) => Err(InputError::new(key, "expected an array")),
        }
    }

    pub fn rational(&mut self, key: &str) -> InputResult<Rational> {
        let s = self.str(key)?;
        parse_one(key, &s)
    }

    pub fn opt_rational(&mut self, key: &str) -> InputResult<Option<Rational>> {
        self.opt_str(key)?.map(|s| parse_one(key, &s)).transpose()
    }

    pub fn list(&mut self, key: &str) -> InputResult<Vec<Rational>> {
        let s = self.str(key)?;
        parse_list(key, &s)
    }

    pub fn opt_list(&mut self, key: &str) -> InputResult<Option<Vec<Rational>>> {
        self.opt_str(key)?.map(|s| parse_list(key, &s)).transpose()
    }

    pub fn list_of_len(&mut self, key: &str, n: usize) -> InputResult<Vec<Rational>> {
        let v = self.list(key)?;
        if v.len() != n {
            return Err(InputError::new(
                key,
                format!("expected {n} entries, got {}", v.len()),
            ));
        }
        Ok(v)
    }

    pub fn torus(&mut self) -> InputResult<UnitaryTorus> {
        let l = self.str("L")?;
        let l = parse_cubic("L", &l)?;
        let k = self.rational("K")?;
        let k = QuadraticEtale::new(&k).map_err(|e| InputError::new("K", e.to_string()))?;
        Ok(UnitaryTorus::new(&l, &k))
    }

    pub fn composition(&mut self, key: &str) -> InputResult<CompositionAlgebra> {
        let p = self.list(key)?;
        CompositionAlgebra::new(p).map_err(|e| InputError::new(key, e.to_string()))
    }

    pub fn finish(self) -> InputResult<()> {
        for k in self.map.keys() {
            if !self.seen.contains(k) {
                return Err(InputError::new(k.as_str(), "unknown field"));
            }
        }
        Ok(())
    }
}

pub fn parse_one(field: &str, s: &str) -> InputResult<Rational> {
    parse_rational(s).map_err(|e| InputError::new(field, e.to_string()))
}

pub fn parse_list(field: &str, s: &str) -> InputResult<Vec<Rational>> {
    if s.trim().is_empty() {
        return Err(InputError::new(field, "empty list"));
    }
    s.split(',').map(|t| parse_one(field, t)).collect()
}

/// `split`, `mixed:<a0>`, or `field:<c0>,<c1>,<c2>` for θ³ + c₂θ² + c₁θ + c₀.
pub fn parse_cubic(field: &str, s: &str) -> InputResult<CubicEtale> {
    let s = s.trim();
    let err = |m: String| InputError::new(field, m);
    if s == "split" {
        return Ok(CubicEtale::split());
    }
    if let Some(a) = s.strip_prefix("mixed:") {
        let a = parse_one(field, a)?;
        return CubicEtale::mixed(&a).map_err(|e| err(e.to_string()));
    }
    if let Some(c) = s.strip_prefix("field:") {
        let c: Vec<i64> = c
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|_| err("expected integer coefficients c0,c1,c2".into()))?;
        if c.len() != 3 {
            return Err(err("expected three coefficients c0,c1,c2".into()));
        }
        return CubicEtale::field(c[0], c[1], c[2]).map_err(|e| err(e.to_string()));
    }
    Err(err(format!(
        "expected `split`, `mixed:<a0>` or `field:<c0>,<c1>,<c2>`, got {s:?}"
    )))
}

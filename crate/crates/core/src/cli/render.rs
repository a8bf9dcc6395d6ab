use serde_json::{Map, Value};

use crate::cochains::Cochain;
use crate::extensions::ExtensionDatum;
use crate::gvs::{format_scalar, Matrix, Scalar, SuperVectorSpace};

use super::files::{cochain_file, datum_file};

pub const SIGN_NOTE: &str = "cochains are listed on canonical tuples only (weakly increasing, even indices never repeated); \
any other argument order follows from Φ(X_σ(0), …) = s(σ, x) Φ(X_0, …) with the multigraded sign s";

/// Text lines and a JSON object built side by side.
#[derive(Debug, Default)]
pub struct Report {
    pub code: i32,
    lines: Vec<String>,
    json: Map<String, Value>,
    note: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.json.insert("command".into(), Value::String(command.into()));
        r
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn lines_from(&mut self, lines: impl IntoIterator<Item = String>) {
        self.lines.extend(lines);
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) {
        self.json.insert(key.into(), value.into());
    }

    pub fn field_of<T: serde::Serialize>(&mut self, key: &str, value: &T) {
        self.json
            .insert(key.into(), serde_json::to_value(value).expect("serializable"));
    }

    /// Attaches the sign convention note once.
    pub fn with_note(&mut self) {
        self.note = true;
    }

    pub fn finish(mut self, json: bool) -> String {
        if json {
            self.json.insert("exit_code".into(), Value::from(self.code));
            if self.note {
                self.json.insert("convention".into(), Value::String(SIGN_NOTE.into()));
            }
            super::files::to_json(&Value::Object(self.json))
        } else {
            if self.note {
                self.lines.push(format!("note: {SIGN_NOTE}"));
            }
            let mut s = self.lines.join("\n");
            s.push('\n');
            s
        }
    }
}

pub fn ok(flag: bool) -> &'static str {
    if flag {
        "ok"
    } else {
        "FAILED"
    }
}

pub fn strings(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(|c| Value::String(format_scalar(c))).collect())
}

pub fn rows(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|i| strings(m.row(i))).collect())
}

/// `2 H - Q + 1/2 Z`, or `0`.
pub fn combo(space: &SuperVectorSpace, v: &[Scalar]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let negative = crate::gvs::is_negative(c);
        let abs = if negative { -c.clone() } else { c.clone() };
        let coeff = if num_traits::One::is_one(&abs) {
            String::new()
        } else {
            format!("{} ", format_scalar(&abs))
        };
        let sign = match (out.is_empty(), negative) {
            (true, true) => "-",
            (true, false) => "",
            (false, true) => " - ",
            (false, false) => " + ",
        };
        out.push_str(&format!("{sign}{coeff}{}", space.name(k)));
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// `H -> 2 Z, Q -> P` over the nonzero columns, or `0`.
pub fn operator(space: &SuperVectorSpace, m: &Matrix) -> String {
    let parts: Vec<String> = (0..m.cols())
        .filter_map(|j| {
            let col = m.column(j);
            (!crate::gvs::is_zero_vector(&col)).then(|| format!("{} -> {}", space.name(j), combo(space, &col)))
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(", ")
    }
}

pub fn tuple_names(source: &SuperVectorSpace, t: &[usize]) -> String {
    t.iter().map(|&i| source.name(i)).collect::<Vec<_>>().join(", ")
}

/// `name(X, Y) = v` per canonical tuple, or a single `name = 0`.
pub fn cochain_lines(name: &str, c: &Cochain) -> Vec<String> {
    let lines: Vec<String> = c
        .entries()
        .map(|(t, v)| format!("{name}({}) = {}", tuple_names(c.source(), t), combo(c.target(), v)))
        .collect();
    if lines.is_empty() {
        vec![format!("{name} = 0")]
    } else {
        lines
    }
}

pub fn cochain_json(source: &str, target: &str, c: &Cochain) -> Value {
    serde_json::to_value(cochain_file(source, target, c)).expect("serializable")
}

pub fn datum_lines(d: &ExtensionDatum, indent: &str) -> Vec<String> {
    let mut out = Vec::new();
    if d.alpha().is_zero() {
        out.push(format!("{indent}α = 0"));
    }
    for i in 0..d.g().dim() {
        let op = d.alpha().operator(i);
        if !op.is_zero() {
            out.push(format!("{indent}α({}): {}", d.g().space().name(i), operator(d.h().space(), op)));
        }
    }
    out.extend(cochain_lines("ρ", d.rho()).into_iter().map(|l| format!("{indent}{l}")));
    out
}

pub fn datum_json(d: &ExtensionDatum) -> Value {
    serde_json::to_value(datum_file(d)).expect("serializable")
}

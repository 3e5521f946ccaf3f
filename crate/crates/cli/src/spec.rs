//! Algebra spec files (TOML).
//!
//! ```toml
//! scheme = "all-ones"        # optional: "all-ones" | "deg-f"
//! lambda = "1"               # rationals as "p/q" strings or integers
//! omega = 1
//! gamma = "2"
//! f = ["0", "-1"]            # constant term first
//! ```
//!
//! or, instead of the four parameters, a preset table:
//!
//! ```toml
//! [preset]
//! name = "woronowicz"
//! zeta = "2"
//! ```

use std::fmt;
use std::ops::Range;

use gdu_core::gdu::{GduParams, Preset, WeightScheme};
use gdu_core::Scalar;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;
use toml::{Spanned, Value};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Explicit(GduParams),
    Preset(Preset),
    /// Random parameters with `deg f = degree`; without a seed in the
    /// file, the command-line seed is used.
    Random { degree: usize, seed: Option<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub source: Source,
    pub scheme: Option<WeightScheme>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for SpecError {}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    scheme: Option<Spanned<String>>,
    lambda: Option<Spanned<Value>>,
    omega: Option<Spanned<Value>>,
    gamma: Option<Spanned<Value>>,
    f: Option<Spanned<Vec<Spanned<Value>>>>,
    preset: Option<Spanned<toml::Table>>,
}

struct Ctx<'a> {
    text: &'a str,
}

impl Ctx<'_> {
    fn err(&self, span: Range<usize>, message: impl Into<String>) -> SpecError {
        let (line, column) = line_col(self.text, span.start);
        SpecError { line, column, message: message.into() }
    }

    fn scalar(&self, v: &Spanned<Value>, what: &str) -> Result<Scalar, SpecError> {
        let s = match v.get_ref() {
            Value::Integer(i) => i.to_string(),
            Value::String(s) => s.clone(),
            Value::Float(_) => return Err(self.err(v.span(), format!("{what}: floats are not accepted, use \"p/q\""))),
            other => return Err(self.err(v.span(), format!("{what}: expected a rational, found {}", other.type_str()))),
        };
        s.trim().parse::<Scalar>().map_err(|e| self.err(v.span(), format!("{what}: {e}")))
    }
}

fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    (line, column)
}

/// Parses a spec file; every error carries a line and column.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec, SpecError> {
    let raw: RawSpec = toml::from_str(text).map_err(|e| {
        let (line, column) = e.span().map_or((1, 1), |s| line_col(text, s.start));
        SpecError { line, column, message: e.message().to_string() }
    })?;
    let ctx = Ctx { text };
    let scheme = match &raw.scheme {
        None => None,
        Some(s) => Some(WeightScheme::parse(s.get_ref()).map_err(|e| ctx.err(s.span(), e.to_string()))?),
    };
    let explicit = [&raw.lambda, &raw.omega, &raw.gamma].iter().any(|v| v.is_some()) || raw.f.is_some();
    let source = match (&raw.preset, explicit) {
        (Some(p), true) => return Err(ctx.err(p.span(), "give either explicit parameters or [preset], not both")),
        (Some(p), false) => preset_source(&ctx, p)?,
        (None, false) => return Err(SpecError { line: 1, column: 1, message: "missing lambda/omega/gamma/f or [preset]".into() }),
        (None, true) => {
            let need = |v: &Option<Spanned<Value>>, name: &str| -> Result<Scalar, SpecError> {
                match v {
                    Some(v) => ctx.scalar(v, name),
                    None => Err(SpecError { line: 1, column: 1, message: format!("missing key '{name}'") }),
                }
            };
            let lambda = need(&raw.lambda, "lambda")?;
            let omega = need(&raw.omega, "omega")?;
            let gamma = need(&raw.gamma, "gamma")?;
            let f = raw.f.as_ref().ok_or(SpecError { line: 1, column: 1, message: "missing key 'f'".into() })?;
            let coeffs = f.get_ref().iter().map(|c| ctx.scalar(c, "f")).collect::<Result<Vec<_>, _>>()?;
            let params = GduParams::new(lambda, omega, gamma, coeffs).map_err(|e| ctx.err(f.span(), e.to_string()))?;
            Source::Explicit(params)
        }
    };
    Ok(AlgebraSpec { source, scheme })
}

fn preset_source(ctx: &Ctx<'_>, table: &Spanned<toml::Table>) -> Result<Source, SpecError> {
    let span = table.span();
    let t = table.get_ref();
    let name = match t.get("name") {
        Some(Value::String(s)) => s.as_str(),
        _ => return Err(ctx.err(span, "[preset] needs a string 'name'")),
    };
    let allowed: &[&str] = match name {
        "sl2" => &[],
        "smith" => &["f"],
        "woronowicz" => &["zeta"],
        "conformal" => &["b", "lambda", "omega", "gamma"],
        "down_up" => &["alpha", "beta", "gamma"],
        "random" => &["degree", "seed"],
        other => return Err(ctx.err(span.clone(), format!("unknown preset '{other}'"))),
    };
    if let Some(k) = t.keys().find(|k| *k != "name" && !allowed.contains(&k.as_str())) {
        return Err(ctx.err(span, format!("preset '{name}' does not take '{k}'")));
    }
    // Values inside a plain table carry no spans; report the table position.
    let scalar = |key: &str, default: Option<Scalar>| -> Result<Scalar, SpecError> {
        match t.get(key) {
            Some(v) => ctx.scalar(&Spanned::new(span.clone(), v.clone()), key),
            None => default.ok_or_else(|| ctx.err(span.clone(), format!("preset '{name}' needs '{key}'"))),
        }
    };
    let integer = |key: &str, default: i64| -> Result<i64, SpecError> {
        match t.get(key) {
            None => Ok(default),
            Some(Value::Integer(i)) if *i >= 0 => Ok(*i),
            Some(_) => Err(ctx.err(span.clone(), format!("'{key}' must be a non-negative integer"))),
        }
    };
    Ok(match name {
        "sl2" => Source::Preset(Preset::Sl2),
        "smith" => {
            let list = match t.get("f") {
                Some(Value::Array(a)) => a,
                _ => return Err(ctx.err(span, "preset 'smith' needs an array 'f'")),
            };
            let f = list
                .iter()
                .map(|v| ctx.scalar(&Spanned::new(span.clone(), v.clone()), "f"))
                .collect::<Result<Vec<_>, _>>()?;
            Source::Preset(Preset::Smith { f })
        }
        "woronowicz" => Source::Preset(Preset::Woronowicz { zeta: scalar("zeta", None)? }),
        "conformal" => Source::Preset(Preset::Conformal {
            b: scalar("b", None)?,
            lambda: scalar("lambda", Some(Scalar::one()))?,
            omega: scalar("omega", Some(Scalar::one()))?,
            gamma: scalar("gamma", Some(Scalar::one()))?,
        }),
        "down_up" => Source::Preset(Preset::DownUp {
            alpha: scalar("alpha", None)?,
            beta: scalar("beta", None)?,
            gamma: scalar("gamma", None)?,
        }),
        _ => {
            let degree = integer("degree", 1)?;
            if degree == 0 {
                return Err(ctx.err(span, "'degree' must be at least 1"));
            }
            let seed = if t.contains_key("seed") { Some(integer("seed", 0)? as u64) } else { None };
            Source::Random { degree: degree as usize, seed }
        }
    })
}

fn lit(s: &Scalar) -> Value {
    Value::String(s.to_string())
}

impl AlgebraSpec {
    /// Canonical TOML form; parsing it gives back an equal spec.
    pub fn to_toml(&self) -> String {
        let mut root = toml::Table::new();
        if let Some(s) = self.scheme {
            root.insert("scheme".into(), Value::String(s.name().into()));
        }
        match &self.source {
            Source::Explicit(p) => {
                root.insert("lambda".into(), lit(&p.lambda));
                root.insert("omega".into(), lit(&p.omega));
                root.insert("gamma".into(), lit(&p.gamma));
                root.insert("f".into(), Value::Array(p.f_coeffs().iter().map(lit).collect()));
            }
            Source::Preset(p) => {
                let mut t = toml::Table::new();
                t.insert("name".into(), Value::String(p.name().into()));
                match p {
                    Preset::Sl2 => {}
                    Preset::Smith { f } => {
                        t.insert("f".into(), Value::Array(f.iter().map(lit).collect()));
                    }
                    Preset::Woronowicz { zeta } => {
                        t.insert("zeta".into(), lit(zeta));
                    }
                    Preset::Conformal { b, lambda, omega, gamma } => {
                        for (k, v) in [("b", b), ("lambda", lambda), ("omega", omega), ("gamma", gamma)] {
                            t.insert(k.into(), lit(v));
                        }
                    }
                    Preset::DownUp { alpha, beta, gamma } => {
                        for (k, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
                            t.insert(k.into(), lit(v));
                        }
                    }
                }
                root.insert("preset".into(), Value::Table(t));
            }
            Source::Random { degree, seed } => {
                let mut t = toml::Table::new();
                t.insert("name".into(), Value::String("random".into()));
                t.insert("degree".into(), Value::Integer(*degree as i64));
                if let Some(seed) = seed {
                    t.insert("seed".into(), Value::Integer(*seed as i64));
                }
                root.insert("preset".into(), Value::Table(t));
            }
        }
        toml::to_string(&root).expect("tables serialize")
    }

    /// Concrete parameters plus translation notes.
    pub fn resolve(&self, default_seed: u64) -> gdu_core::Result<(GduParams, Vec<String>)> {
        match &self.source {
            Source::Explicit(p) => Ok((p.clone(), Vec::new())),
            Source::Preset(p) => p.params(),
            Source::Random { degree, seed } => {
                let seed = seed.unwrap_or(default_seed);
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let p = GduParams::random(&mut rng, *degree);
                Ok((p, vec![format!("random parameters, seed {seed}, deg f = {degree}")]))
            }
        }
    }

    /// The requested scheme, or all-ones when `deg f ≤ 2` and deg-f otherwise.
    pub fn scheme_for(&self, params: &GduParams) -> WeightScheme {
        self.scheme.unwrap_or(if params.degree_f() <= 2 { WeightScheme::AllOnes } else { WeightScheme::DegF })
    }

    pub fn label(&self) -> String {
        match &self.source {
            Source::Explicit(_) => "explicit".to_string(),
            Source::Preset(p) => p.to_string(),
            Source::Random { degree, seed: Some(seed) } => format!("random(degree={degree}, seed={seed})"),
            Source::Random { degree, seed: None } => format!("random(degree={degree})"),
        }
    }
}

//! Problem files: JSON documents declaring an n-field, named component-wise
//! objects and one command.

use indexmap::IndexMap;
use nlalg_core::fields::{parse_element, parse_field_capped, Field, FieldElement, NField, DEFAULT_MAX_FIELD_SIZE};
use nlalg_core::linalg::{Matrix, Subspace, Vector};
use nlalg_core::poly::Poly;
use nlalg_core::Error;
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

pub const PROBLEM_SCHEMA: &str = "nlalg-problem/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Matrix,
    Form,
    Vector,
    Vectors,
    Subspace,
    Poly,
    Points,
    Scalar,
    Valuemap,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Matrix => "matrix",
            Kind::Form => "form",
            Kind::Vector => "vector",
            Kind::Vectors => "vectors",
            Kind::Subspace => "subspace",
            Kind::Poly => "poly",
            Kind::Points => "points",
            Kind::Scalar => "scalar",
            Kind::Valuemap => "valuemap",
        }
    }
}

/// One resolved component literal.
#[derive(Clone, Debug)]
pub enum Literal {
    Matrix(Matrix),
    Vector(Vector),
    Vectors(Vec<Vector>),
    Subspace(Subspace),
    Poly(Poly),
    Pairs(Vec<(FieldElement, FieldElement)>),
    Scalar(FieldElement),
}

#[derive(Clone, Debug)]
pub struct Object {
    pub kind: Kind,
    /// Index i holds component i + 1.
    pub components: Vec<Literal>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Arg {
    Name(String),
    Names(Vec<String>),
    Flag(bool),
    Choice(String),
}

#[derive(Clone, Debug)]
pub struct Command {
    pub name: String,
    pub args: IndexMap<String, Arg>,
}

impl Command {
    pub fn name_arg(&self, key: &str) -> Option<&str> {
        match self.args.get(key) {
            Some(Arg::Name(n)) => Some(n),
            _ => None,
        }
    }

    pub fn names_arg(&self, key: &str) -> &[String] {
        match self.args.get(key) {
            Some(Arg::Names(v)) => v,
            _ => &[],
        }
    }

    pub fn flag(&self, key: &str) -> bool {
        matches!(self.args.get(key), Some(Arg::Flag(true)))
    }

    pub fn choice(&self, key: &str) -> Option<&str> {
        match self.args.get(key) {
            Some(Arg::Choice(c)) => Some(c),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct ProblemFile {
    pub fields: Vec<Field>,
    /// `None` only for nfield-classify on a tuple that is not a valid
    /// n-field.
    pub nfield: Option<NField>,
    pub objects: IndexMap<String, Object>,
    pub command: Command,
    /// The command object exactly as written, for the report.
    pub echo: Value,
}

impl ProblemFile {
    pub fn arity(&self) -> usize {
        self.fields.len()
    }

    pub fn object(&self, name: &str) -> &Object {
        &self.objects[name]
    }

    /// Component `i` (0-based) of a named object.
    pub fn literal(&self, name: &str, i: usize) -> &Literal {
        &self.objects[name].components[i]
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawProblem {
    schema: String,
    nfield: Vec<String>,
    #[serde(default)]
    objects: IndexMap<String, RawObject>,
    command: Value,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawObject {
    kind: Kind,
    components: IndexMap<String, Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCommand {
    name: String,
    #[serde(default)]
    args: IndexMap<String, Value>,
}

#[derive(Clone, Copy)]
enum ArgSpec {
    Ref(&'static [Kind]),
    OptRef(&'static [Kind]),
    RefList(&'static [Kind]),
    OptChoice(&'static [&'static str]),
    Flag,
}

const OPS: &[Kind] = &[Kind::Matrix];
const FORMS: &[Kind] = &[Kind::Matrix, Kind::Form];

fn command_spec(name: &str) -> Option<&'static [(&'static str, ArgSpec)]> {
    use ArgSpec::*;
    let spec: &'static [(&'static str, ArgSpec)] = match name {
        "charpoly" | "minpoly" | "diagonalize" | "eigen" => &[("operator", Ref(OPS))],
        "canon" => &[
            ("operator", Ref(OPS)),
            ("form", OptChoice(&["rational", "jordan", "primary", "dn", "all"])),
            ("basis", Flag),
        ],
        "similar" => &[("a", Ref(OPS)), ("b", Ref(OPS))],
        "annihilator" => &[("operator", Ref(OPS)), ("vector", Ref(&[Kind::Vector]))],
        "conductor" => &[
            ("operator", Ref(OPS)),
            ("vector", Ref(&[Kind::Vector])),
            ("subspace", Ref(&[Kind::Subspace])),
        ],
        "gram-schmidt" => &[("vectors", Ref(&[Kind::Vectors])), ("gram", OptRef(FORMS))],
        "project" => &[
            ("vector", Ref(&[Kind::Vector])),
            ("subspace", Ref(&[Kind::Subspace])),
            ("gram", OptRef(FORMS)),
        ],
        "adjoint" => &[("operator", Ref(OPS)), ("gram", OptRef(FORMS))],
        "spectral" => &[
            ("operator", Ref(OPS)),
            ("gram", OptRef(FORMS)),
            ("values", OptRef(&[Kind::Valuemap])),
        ],
        "bilinear-diag" => &[("form", Ref(FORMS))],
        "interpolate" => &[("points", Ref(&[Kind::Points]))],
        "factor" => &[("poly", Ref(&[Kind::Poly]))],
        "gcd" => &[("a", Ref(&[Kind::Poly])), ("b", Ref(&[Kind::Poly]))],
        "taylor" => &[("poly", Ref(&[Kind::Poly])), ("at", Ref(&[Kind::Scalar]))],
        "nfield-classify" => &[],
        "simultaneous" => &[("operators", RefList(OPS))],
        _ => return None,
    };
    Some(spec)
}

/// Names of every command `run` understands.
pub const COMMANDS: &[&str] = &[
    "charpoly",
    "minpoly",
    "canon",
    "diagonalize",
    "eigen",
    "similar",
    "annihilator",
    "conductor",
    "gram-schmidt",
    "project",
    "adjoint",
    "spectral",
    "bilinear-diag",
    "interpolate",
    "factor",
    "gcd",
    "taylor",
    "nfield-classify",
    "simultaneous",
];

/// Finite-field cap, honoring `NLALG_MAX_FIELD_SIZE`.
pub fn field_cap() -> u64 {
    std::env::var("NLALG_MAX_FIELD_SIZE")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_FIELD_SIZE)
}

pub fn parse_problem_file(path: &std::path::Path) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_problem(&text)
}

pub fn parse_problem(text: &str) -> Result<ProblemFile, CliError> {
    parse_problem_with_cap(text, field_cap())
}

pub fn parse_problem_with_cap(text: &str, cap: u64) -> Result<ProblemFile, CliError> {
    let raw: RawProblem = serde_json::from_str(text).map_err(|e| CliError::Syntax {
        line: Some(e.line()),
        message: e.to_string(),
    })?;
    if raw.schema != PROBLEM_SCHEMA {
        return Err(CliError::Syntax {
            line: line_of(text, "schema"),
            message: format!("unsupported schema {:?}, expected {PROBLEM_SCHEMA:?}", raw.schema),
        });
    }
    let echo = raw.command.clone();
    let cmd: RawCommand = serde_json::from_value(raw.command).map_err(|e| CliError::Syntax {
        line: line_of(text, "command"),
        message: format!("command: {e}"),
    })?;

    let fields = raw
        .nfield
        .iter()
        .map(|s| match parse_field_capped(s, cap) {
            Ok(d) => Ok(Field::new(d)),
            Err(e @ Error::FieldTooLarge { .. }) => Err(CliError::Engine(e)),
            Err(e) => Err(CliError::UnknownField(format!("{s:?}: {e}"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let nfield = match NField::new(fields.iter().cloned()) {
        Ok(nf) => Some(nf),
        Err(e) if cmd.name == "nfield-classify" && matches!(e, Error::ContainmentViolation(..)) => None,
        Err(e @ Error::ArityTooSmall(_)) => {
            return Err(CliError::Syntax {
                line: line_of(text, "nfield"),
                message: e.to_string(),
            })
        }
        Err(e) => return Err(CliError::Engine(e)),
    };

    let mut objects = IndexMap::new();
    for (name, obj) in &raw.objects {
        let line = line_of(text, name);
        let resolved = resolve_object(name, obj, &fields).map_err(|message| CliError::Syntax { line, message })?;
        objects.insert(name.clone(), resolved);
    }
    let command = resolve_command(text, cmd, &objects)?;
    Ok(ProblemFile {
        fields,
        nfield,
        objects,
        command,
        echo,
    })
}

fn resolve_command(text: &str, cmd: RawCommand, objects: &IndexMap<String, Object>) -> Result<Command, CliError> {
    let line = line_of(text, "command");
    let syntax = |message: String| CliError::Syntax { line, message };
    let Some(spec) = command_spec(&cmd.name) else {
        return Err(syntax(format!("unknown command {:?}", cmd.name)));
    };
    if let Some(extra) = cmd.args.keys().find(|k| !spec.iter().any(|(s, _)| s == k)) {
        return Err(syntax(format!("command {} takes no argument {extra:?}", cmd.name)));
    }
    let check_ref = |key: &str, v: &Value, kinds: &[Kind]| -> Result<String, CliError> {
        let name = v
            .as_str()
            .ok_or_else(|| syntax(format!("argument {key:?} must be an object name")))?;
        let obj = objects
            .get(name)
            .ok_or_else(|| CliError::UndefinedName(name.to_string()))?;
        if !kinds.contains(&obj.kind) {
            return Err(syntax(format!(
                "argument {key:?}: {name} is a {}, expected {}",
                obj.kind.name(),
                kinds.iter().map(|k| k.name()).collect::<Vec<_>>().join(" or ")
            )));
        }
        Ok(name.to_string())
    };
    let mut args = IndexMap::new();
    for &(key, arg) in spec {
        let v = cmd.args.get(key);
        let resolved = match (arg, v) {
            (ArgSpec::Ref(_), None) => return Err(syntax(format!("command {} needs argument {key:?}", cmd.name))),
            (ArgSpec::Ref(kinds) | ArgSpec::OptRef(kinds), Some(v)) => Arg::Name(check_ref(key, v, kinds)?),
            (ArgSpec::OptRef(_), None) => continue,
            (ArgSpec::RefList(kinds), Some(Value::Array(items))) if !items.is_empty() => {
                Arg::Names(items.iter().map(|v| check_ref(key, v, kinds)).collect::<Result<_, _>>()?)
            }
            (ArgSpec::RefList(_), _) => {
                return Err(syntax(format!("argument {key:?} must be a non-empty list of names")))
            }
            (ArgSpec::OptChoice(choices), None) => Arg::Choice(choices[choices.len() - 1].to_string()),
            (ArgSpec::OptChoice(choices), Some(v)) => match v.as_str() {
                Some(c) if choices.contains(&c) => Arg::Choice(c.to_string()),
                _ => return Err(syntax(format!("argument {key:?} must be one of {}", choices.join(", ")))),
            },
            (ArgSpec::Flag, None) => Arg::Flag(false),
            (ArgSpec::Flag, Some(Value::Bool(b))) => Arg::Flag(*b),
            (ArgSpec::Flag, Some(_)) => return Err(syntax(format!("argument {key:?} must be true or false"))),
        };
        args.insert(key.to_string(), resolved);
    }
    Ok(Command { name: cmd.name, args })
}

fn resolve_object(name: &str, obj: &RawObject, fields: &[Field]) -> Result<Object, String> {
    let n = fields.len();
    for key in obj.components.keys() {
        match key.parse::<usize>() {
            Ok(i) if (1..=n).contains(&i) && key == &i.to_string() => {}
            _ => return Err(format!("object {name}: bad component index {key:?} for a {n}-field")),
        }
    }
    let components = fields
        .iter()
        .enumerate()
        .map(|(i, field)| {
            let key = (i + 1).to_string();
            let v = obj
                .components
                .get(&key)
                .ok_or_else(|| format!("object {name} has no component {key}"))?;
            literal(obj.kind, v, field).map_err(|e| format!("object {name}, component {key}: {e}"))
        })
        .collect::<Result<_, String>>()?;
    Ok(Object {
        kind: obj.kind,
        components,
    })
}

fn element(v: &Value, field: &Field) -> Result<FieldElement, String> {
    let text = match v {
        Value::String(s) => s.clone(),
        Value::Number(n) => n.to_string(),
        _ => return Err(format!("expected an element literal, got {v}")),
    };
    parse_element(&text, field).map_err(|e| e.to_string())
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, String> {
    v.as_array().ok_or_else(|| format!("expected {what}"))
}

fn vector(v: &Value, field: &Field) -> Result<Vector, String> {
    array(v, "a vector (list of elements)")?
        .iter()
        .map(|x| element(x, field))
        .collect()
}

fn vectors(v: &Value, field: &Field) -> Result<Vec<Vector>, String> {
    let vs: Vec<Vector> = array(v, "a list of vectors")?
        .iter()
        .map(|x| vector(x, field))
        .collect::<Result<_, _>>()?;
    if vs.windows(2).any(|w| w[0].len() != w[1].len()) {
        return Err("vectors have different lengths".into());
    }
    Ok(vs)
}

fn pairs(v: &Value, field: &Field) -> Result<Vec<(FieldElement, FieldElement)>, String> {
    vectors(v, field)?
        .into_iter()
        .map(|p| match <[FieldElement; 2]>::try_from(p) {
            Ok([a, b]) => Ok((a, b)),
            Err(_) => Err("expected pairs [x, y]".to_string()),
        })
        .collect()
}

fn literal(kind: Kind, v: &Value, field: &Field) -> Result<Literal, String> {
    Ok(match kind {
        Kind::Matrix | Kind::Form => {
            let rows = vectors(v, field)?;
            Literal::Matrix(Matrix::from_rows(field, rows).map_err(|e| e.to_string())?)
        }
        Kind::Vector => Literal::Vector(vector(v, field)?),
        Kind::Vectors => Literal::Vectors(vectors(v, field)?),
        Kind::Subspace => {
            let ambient = v
                .get("ambient")
                .and_then(Value::as_u64)
                .ok_or("subspace needs an integer \"ambient\"")? as usize;
            let span = vectors(v.get("span").ok_or("subspace needs a \"span\" list")?, field)?;
            if let Some(bad) = span.iter().find(|s| s.len() != ambient) {
                return Err(format!("span vector of length {} in ambient dimension {ambient}", bad.len()));
            }
            Literal::Subspace(Subspace::span(field, ambient, &span).map_err(|e| e.to_string())?)
        }
        Kind::Poly => {
            let text = v.as_str().ok_or("expected a polynomial literal string")?;
            Literal::Poly(Poly::parse(text, field).map_err(|e| e.to_string())?)
        }
        Kind::Points | Kind::Valuemap => Literal::Pairs(pairs(v, field)?),
        Kind::Scalar => Literal::Scalar(element(v, field)?),
    })
}

/// Line of the first `"key":` occurrence, for error positions.
fn line_of(text: &str, key: &str) -> Option<usize> {
    let quoted = format!("\"{key}\"");
    text.lines().position(|l| {
        l.find(&quoted)
            .is_some_and(|at| l[at + quoted.len()..].trim_start().starts_with(':'))
    })
    .map(|i| i + 1)
}

//! Command dispatch. Each command runs independently per component; the
//! components are evaluated in parallel and joined in order.

use nlalg_core::fields::{classify_characteristic, classify_primeness, Field, NField};
use nlalg_core::forms::{signature, spectral_function, spectral_resolution, BilinearForm, InnerProductSpace};
use nlalg_core::linalg::{Matrix, Subspace, Vector};
use nlalg_core::operators::{
    annihilator_poly, charpoly, conductor, cyclic_basis, diagonalize, dn_decomposition, eigen, invariant_factors,
    jordan_form, minpoly, primary_decomposition, rational_form, similar, simultaneous_diagonalize,
};
use nlalg_core::poly::{lagrange_basis, lagrange_interpolate, Poly};
use nlalg_core::{Error, Result};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::problem::{Literal, ProblemFile};
use crate::report::{self, Report, REPORT_SCHEMA};

/// Errors that leave partial results and do not fail the run.
pub fn is_warning(e: &Error) -> bool {
    matches!(
        e,
        Error::SplitFailure { .. } | Error::FactorizationIncomplete(_) | Error::NeedsFactorization
    )
}

struct Outcome {
    result: Result<Value>,
    warnings: Vec<Error>,
}

/// Per-component context handed to the command bodies.
struct Ctx<'a> {
    p: &'a ProblemFile,
    i: usize,
    warnings: Vec<Error>,
}

impl<'a> Ctx<'a> {
    fn field(&self) -> &Field {
        &self.p.fields[self.i]
    }

    fn lit(&self, key: &str) -> &'a Literal {
        let name = self.p.command.name_arg(key).expect("validated argument");
        self.p.literal(name, self.i)
    }

    fn opt_lit(&self, key: &str) -> Option<&'a Literal> {
        self.p.command.name_arg(key).map(|n| self.p.literal(n, self.i))
    }

    fn matrix(&self, key: &str) -> &'a Matrix {
        match self.lit(key) {
            Literal::Matrix(m) => m,
            other => unreachable!("argument {key} resolved to {other:?}"),
        }
    }

    fn vector(&self, key: &str) -> &'a Vector {
        match self.lit(key) {
            Literal::Vector(v) => v,
            other => unreachable!("argument {key} resolved to {other:?}"),
        }
    }

    fn subspace(&self, key: &str) -> &'a Subspace {
        match self.lit(key) {
            Literal::Subspace(s) => s,
            other => unreachable!("argument {key} resolved to {other:?}"),
        }
    }

    fn poly(&self, key: &str) -> &'a Poly {
        match self.lit(key) {
            Literal::Poly(p) => p,
            other => unreachable!("argument {key} resolved to {other:?}"),
        }
    }

    /// The inner-product space from the optional "gram" argument, else the
    /// standard one of dimension n.
    fn space(&self, n: usize) -> Result<InnerProductSpace> {
        match self.opt_lit("gram") {
            Some(Literal::Matrix(g)) => {
                if g.nrows() != n {
                    return Err(Error::ShapeMismatch(format!("Gram matrix of size {} for dimension {n}", g.nrows())));
                }
                InnerProductSpace::new(g.clone())
            }
            _ => InnerProductSpace::standard(self.field(), n),
        }
    }

    /// Turns a warning-class error into a null section plus a warning.
    fn soft<T>(&mut self, r: Result<T>, f: impl FnOnce(T) -> Value) -> Result<Value> {
        match r {
            Ok(t) => Ok(f(t)),
            Err(e) if is_warning(&e) => {
                self.warnings.push(e);
                Ok(Value::Null)
            }
            Err(e) => Err(e),
        }
    }
}

fn square(a: &Matrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!("operator must be square, got {}x{}", a.nrows(), a.ncols())))
    }
}

pub fn run_command(p: &ProblemFile) -> Report {
    if p.command.name == "nfield-classify" {
        return classify(p);
    }
    let outcomes: Vec<Outcome> = (0..p.arity())
        .into_par_iter()
        .map(|i| {
            let mut ctx = Ctx { p, i, warnings: Vec::new() };
            let result = dispatch(&mut ctx);
            Outcome {
                result,
                warnings: ctx.warnings,
            }
        })
        .collect();

    let mut components = Vec::with_capacity(outcomes.len());
    let mut warnings = Vec::new();
    let mut failed = 0;
    for (i, o) in outcomes.iter().enumerate() {
        let mut entry = Map::new();
        entry.insert("component".into(), json!(i + 1));
        entry.insert("field".into(), json!(p.fields[i].to_string()));
        match &o.result {
            Ok(v) => {
                entry.insert("result".into(), v.clone());
            }
            Err(e) => {
                failed += 1;
                entry.insert("error".into(), report::engine_error(e));
            }
        }
        components.push(Value::Object(entry));
        for w in &o.warnings {
            let mut w_json = report::engine_error(w);
            if let Value::Object(m) = &mut w_json {
                m.shift_insert(0, "component".into(), json!(i + 1));
            }
            warnings.push(w_json);
        }
    }

    let mut summary = Map::new();
    summary.insert("components".into(), json!(p.arity()));
    summary.insert("succeeded".into(), json!(p.arity() - failed));
    summary.insert("failed".into(), json!(failed));
    summary.insert("warnings".into(), json!(warnings.len()));
    let results: Vec<&Value> = outcomes.iter().filter_map(|o| o.result.as_ref().ok()).collect();
    let all_true = |key: &str| failed == 0 && results.iter().all(|r| r[key] == Value::Bool(true));
    match p.command.name.as_str() {
        "similar" => {
            summary.insert("similar".into(), json!(all_true("similar")));
        }
        "diagonalize" => {
            summary.insert("diagonalizable".into(), json!(all_true("diagonalizable")));
        }
        "adjoint" => {
            summary.insert("self_adjoint".into(), json!(all_true("self_adjoint")));
        }
        _ => {}
    }

    let exit_code = if failed > 0 { 1 } else { 0 };
    Report {
        value: json!({
            "schema": REPORT_SCHEMA,
            "command": p.echo,
            "nfield": p.fields.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "status": if failed > 0 { "error" } else { "ok" },
            "exit_code": exit_code,
            "components": components,
            "summary": summary,
            "warnings": warnings,
        }),
        exit_code,
    }
}

fn dispatch(ctx: &mut Ctx) -> Result<Value> {
    let field = ctx.field().clone();
    match ctx.p.command.name.as_str() {
        "charpoly" => {
            let a = ctx.matrix("operator");
            square(a)?;
            Ok(json!({ "charpoly": report::poly(&charpoly(a)?) }))
        }
        "minpoly" => {
            let a = ctx.matrix("operator");
            square(a)?;
            Ok(json!({
                "minpoly": report::poly(&minpoly(a)?),
                "charpoly": report::poly(&charpoly(a)?),
            }))
        }
        "canon" => canon(ctx),
        "diagonalize" => {
            let a = ctx.matrix("operator");
            square(a)?;
            let d = diagonalize(a)?;
            Ok(json!({
                "diagonalizable": d.diagonalizable,
                "p": d.p.as_ref().map(report::matrix),
                "d": d.d.as_ref().map(report::matrix),
            }))
        }
        "eigen" => {
            let a = ctx.matrix("operator");
            square(a)?;
            let e = eigen(a)?;
            let values: Vec<Value> = e
                .values
                .iter()
                .zip(&e.spaces)
                .map(|((c, alg), s)| {
                    json!({
                        "value": report::element(c),
                        "algebraic_multiplicity": alg,
                        "geometric_multiplicity": s.dim(),
                        "basis": report::columns(s.basis()),
                    })
                })
                .collect();
            Ok(json!({ "values": values }))
        }
        "similar" => {
            let (a, b) = (ctx.matrix("a"), ctx.matrix("b"));
            square(a)?;
            square(b)?;
            Ok(json!({
                "similar": similar(a, b)?,
                "invariant_factors_a": report::polys(&invariant_factors(a)?),
                "invariant_factors_b": report::polys(&invariant_factors(b)?),
            }))
        }
        "annihilator" => {
            let (a, v) = (ctx.matrix("operator"), ctx.vector("vector"));
            square(a)?;
            let ann = annihilator_poly(a, v)?;
            Ok(json!({
                "annihilator": report::poly(&ann),
                "cyclic_dim": ann.degree(),
                "cyclic_basis": report::columns(&cyclic_basis(a, v)?),
            }))
        }
        "conductor" => {
            let (a, v, w) = (ctx.matrix("operator"), ctx.vector("vector"), ctx.subspace("subspace"));
            square(a)?;
            Ok(json!({ "conductor": report::poly(&conductor(a, v, w)?) }))
        }
        "gram-schmidt" => {
            let Literal::Vectors(vs) = ctx.lit("vectors") else { unreachable!() };
            let n = vs.first().map_or(0, Vec::len);
            let s = ctx.space(n)?;
            let out = s.gram_schmidt(vs)?;
            let norms = out.iter().map(|v| s.norm_sq(v)).collect::<Result<Vec<_>>>()?;
            Ok(json!({
                "orthogonal": out.iter().map(|v| report::vector(v)).collect::<Vec<_>>(),
                "norms_sq": report::vector(&norms),
            }))
        }
        "project" => {
            let (beta, w) = (ctx.vector("vector"), ctx.subspace("subspace"));
            if beta.len() != w.ambient_dim() {
                return Err(Error::AmbientMismatch);
            }
            let s = ctx.space(beta.len())?;
            let best = s.best_approx(beta, w)?;
            let residual: Vector = beta.iter().zip(&best).map(|(x, y)| x - y).collect();
            Ok(json!({
                "best_approx": report::vector(&best),
                "residual": report::vector(&residual),
                "projection": report::matrix(&s.projection(w)?),
                "complement": report::subspace(&s.orth_complement(w)?),
            }))
        }
        "adjoint" => {
            let t = ctx.matrix("operator");
            square(t)?;
            let s = ctx.space(t.nrows())?;
            Ok(json!({
                "adjoint": report::matrix(&s.adjoint(t)?),
                "self_adjoint": s.is_self_adjoint(t)?,
                "normal": s.is_normal(t)?,
                "unitary": s.is_unitary(t)?,
            }))
        }
        "spectral" => {
            let t = ctx.matrix("operator");
            square(t)?;
            let s = ctx.space(t.nrows())?;
            let res = spectral_resolution(&s, t)?;
            let mut out = json!({
                "values": report::vector(&res.values),
                "projections": res.projections.iter().map(report::matrix).collect::<Vec<_>>(),
                "polys": report::polys(&res.polys),
            });
            if let Some(Literal::Pairs(map)) = ctx.opt_lit("values") {
                out["function"] = report::matrix(&spectral_function(&res, map)?);
            }
            Ok(out)
        }
        "bilinear-diag" => {
            let f = BilinearForm::new(ctx.matrix("form").clone())?;
            let d = f.symmetric_diagonalize()?;
            let sig = if field.is_ordered() {
                let s = signature(&d.d)?;
                json!({ "positive": s.positive, "negative": s.negative, "zero": s.zero })
            } else {
                Value::Null
            };
            Ok(json!({
                "rank": f.rank(),
                "nondegenerate": f.is_nondegenerate(),
                "p": report::matrix(&d.p),
                "d": report::matrix(&d.d),
                "signature": sig,
            }))
        }
        "interpolate" => {
            let Literal::Pairs(pts) = ctx.lit("points") else { unreachable!() };
            let (xs, ys): (Vec<_>, Vec<_>) = pts.iter().cloned().unzip();
            Ok(json!({
                "interpolant": report::poly(&lagrange_interpolate(&field, &xs, &ys)?),
                "lagrange_basis": report::polys(&lagrange_basis(&field, &xs)?),
            }))
        }
        "factor" => {
            let f = ctx.poly("poly");
            match f.factor() {
                Ok(fac) => Ok(report::factorization(&fac)),
                Err(Error::FactorizationIncomplete(partial)) => {
                    let v = report::factorization(&partial);
                    ctx.warnings.push(Error::FactorizationIncomplete(partial));
                    Ok(v)
                }
                Err(e) => Err(e),
            }
        }
        "gcd" => {
            let (a, b) = (ctx.poly("a"), ctx.poly("b"));
            let (g, u, v) = a.gcd_bezout(b)?;
            Ok(json!({
                "gcd": report::poly(&g),
                "u": report::poly(&u),
                "v": report::poly(&v),
            }))
        }
        "taylor" => {
            let f = ctx.poly("poly");
            let Literal::Scalar(c) = ctx.lit("at") else { unreachable!() };
            Ok(json!({
                "at": report::element(c),
                "coefficients": report::vector(&f.taylor_expand(c)?),
            }))
        }
        "simultaneous" => {
            let ops: Vec<Matrix> = ctx
                .p
                .command
                .names_arg("operators")
                .iter()
                .map(|n| match ctx.p.literal(n, ctx.i) {
                    Literal::Matrix(m) => m.clone(),
                    other => unreachable!("operator resolved to {other:?}"),
                })
                .collect();
            let n = ops[0].nrows();
            for a in &ops {
                square(a)?;
                if a.nrows() != n {
                    return Err(Error::ShapeMismatch("operators of different sizes".into()));
                }
            }
            let pm = simultaneous_diagonalize(&field, n, &ops)?;
            let inv = pm.inverse()?;
            let diagonals = ops
                .iter()
                .map(|a| Ok(report::matrix(&inv.try_mul(a)?.try_mul(&pm)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(json!({ "p": report::matrix(&pm), "diagonal_forms": diagonals }))
        }
        other => unreachable!("unvalidated command {other}"),
    }
}

fn canon(ctx: &mut Ctx) -> Result<Value> {
    let a = ctx.matrix("operator");
    square(a)?;
    let basis = ctx.p.command.flag("basis");
    let form = ctx.p.command.choice("form").unwrap_or("all").to_string();
    let want = |f: &str| form == f || form == "all";
    let mut out = Map::new();
    out.insert("form".into(), json!(form));
    if form == "all" {
        out.insert("charpoly".into(), report::poly(&charpoly(a)?));
        out.insert("minpoly".into(), report::poly(&minpoly(a)?));
    }
    if want("rational") {
        let r = rational_form(a, basis)?;
        let mut v = json!({
            "invariant_factors": report::polys(&r.invariant_factors),
            "form": report::matrix(&r.form),
        });
        if basis {
            v["transition"] = r.transition.as_ref().map_or(Value::Null, report::matrix);
        }
        out.insert("rational".into(), v);
    }
    if want("jordan") {
        let v = ctx.soft(jordan_form(a, basis), |j| {
            let mut v = json!({
                "blocks": j.blocks.iter().map(|b| json!({
                    "eigenvalue": report::element(&b.eigenvalue),
                    "size": b.size,
                })).collect::<Vec<_>>(),
                "form": report::matrix(&j.form),
            });
            if basis {
                v["transition"] = j.transition.as_ref().map_or(Value::Null, report::matrix);
            }
            v
        })?;
        out.insert("jordan".into(), v);
    }
    if want("primary") {
        let v = ctx.soft(primary_decomposition(a), |parts| {
            parts
                .iter()
                .map(|c| {
                    json!({
                        "prime": report::poly(&c.prime),
                        "exponent": c.exponent,
                        "subspace": report::subspace(&c.subspace),
                        "projection": report::matrix(&c.projection),
                        "poly": report::poly(&c.poly),
                    })
                })
                .collect()
        })?;
        out.insert("primary".into(), v);
    }
    if want("dn") {
        let v = ctx.soft(dn_decomposition(a), |dn| {
            json!({
                "d": report::matrix(&dn.d),
                "n": report::matrix(&dn.n),
                "d_poly": report::poly(&dn.d_poly),
                "n_poly": report::poly(&dn.n_poly),
                "nilpotency": dn.nilpotency,
            })
        })?;
        out.insert("dn".into(), v);
    }
    Ok(Value::Object(out))
}

fn descriptor_list<T: ToString>(items: &[T]) -> Value {
    items.iter().map(|d| json!(d.to_string())).collect()
}

fn classify(p: &ProblemFile) -> Report {
    let fields = &p.fields;
    let violation = match &p.nfield {
        Some(_) => Value::Null,
        None => match NField::new(fields.iter().cloned()) {
            Err(e) => report::engine_error(&e),
            Ok(_) => Value::Null,
        },
    };
    let ch = classify_characteristic(fields);
    let pr = classify_primeness(fields);
    let components: Vec<Value> = fields
        .iter()
        .enumerate()
        .map(|(i, f)| {
            json!({
                "component": i + 1,
                "field": f.to_string(),
                "result": {
                    "characteristic": f.characteristic(),
                    "order": f.order(),
                    "prime": f.is_prime_field(),
                    "prime_subfield": pr.prime_subfields[i].as_ref().map(|d| d.to_string()),
                    "proper_subfields": descriptor_list(&pr.proper_subfields[i]),
                },
            })
        })
        .collect();
    let quasi: Vec<String> = pr.prime_subfields.iter().flatten().map(|d| d.to_string()).collect();
    let summary = json!({
        "valid": p.nfield.is_some(),
        "violation": violation,
        "characteristic": format!("{:?}", ch.class),
        "primeness": format!("{:?}", pr.class),
        "quasi_m": pr.quasi_m,
        "quasi_subfield": pr.quasi_m.map(|_| quasi),
    });
    Report {
        value: json!({
            "schema": REPORT_SCHEMA,
            "command": p.echo,
            "nfield": fields.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "status": "ok",
            "exit_code": 0,
            "components": components,
            "summary": summary,
            "warnings": [],
        }),
        exit_code: 0,
    }
}

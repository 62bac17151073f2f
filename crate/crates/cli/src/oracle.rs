//! Brute-force reference computations. Elements are copied out of the
//! engine into a separate arithmetic (`O`), and every algorithm here works
//! only on that representation: permutation expansion for determinants,
//! exhaustive evaluation for roots, monic trial division for factors and
//! divisor search for minimal polynomials.

use nlalg_core::fields::{Field, FieldDescriptor, FieldElement};
use nlalg_core::linalg::Matrix;
use nlalg_core::operators;
use nlalg_core::poly::Poly;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::problem::{Literal, ProblemFile};
use crate::report::{self, Report, REPORT_SCHEMA};

/// Largest matrix handled by permutation expansion.
pub const MAX_DET_SIZE: usize = 5;
/// Cap on trial divisors tried by the factor oracle.
pub const MAX_TRIAL_DIVISORS: u64 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleKind {
    Det,
    Roots,
    Factor,
    Minpoly,
}

impl OracleKind {
    pub fn name(self) -> &'static str {
        match self {
            OracleKind::Det => "det",
            OracleKind::Roots => "roots",
            OracleKind::Factor => "factor",
            OracleKind::Minpoly => "minpoly",
        }
    }
}

#[derive(Clone, Debug, Error, PartialEq)]
pub enum OracleError {
    #[error("too large for the oracle: {0}")]
    TooLarge(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("undefined for the zero polynomial")]
    ZeroPolynomial,
}

impl OracleError {
    pub fn kind(&self) -> &'static str {
        match self {
            OracleError::TooLarge(_) => "TooLargeForOracle",
            OracleError::Shape(_) => "ShapeMismatch",
            OracleError::ZeroPolynomial => "ZeroPolynomial",
        }
    }
}

type OResult<T> = Result<T, OracleError>;

#[derive(Clone, Debug, PartialEq, Eq)]
enum O {
    R(BigRational),
    Q(BigRational, BigRational),
    Z(u64),
    E(Vec<u64>),
}

#[derive(Clone, Debug)]
enum OField {
    Rat,
    Quad(BigRational),
    Prime(u64),
    Ext { p: u64, modulus: Vec<u64> },
}

impl OField {
    fn of(field: &Field) -> OField {
        match field.descriptor() {
            FieldDescriptor::Rational => OField::Rat,
            FieldDescriptor::QuadExt { d } => OField::Quad(BigRational::from_integer((*d).into())),
            FieldDescriptor::PrimeField { p } => OField::Prime(*p),
            FieldDescriptor::ExtField { p, modulus } => OField::Ext {
                p: *p,
                modulus: modulus.clone(),
            },
        }
    }

    fn k(&self) -> usize {
        match self {
            OField::Ext { modulus, .. } => modulus.len() - 1,
            _ => 1,
        }
    }

    fn order(&self) -> Option<u64> {
        match self {
            OField::Prime(p) => Some(*p),
            OField::Ext { p, .. } => Some(p.pow(self.k() as u32)),
            _ => None,
        }
    }

    fn zero(&self) -> O {
        match self {
            OField::Rat => O::R(BigRational::zero()),
            OField::Quad(_) => O::Q(BigRational::zero(), BigRational::zero()),
            OField::Prime(_) => O::Z(0),
            OField::Ext { .. } => O::E(vec![0; self.k()]),
        }
    }

    fn one(&self) -> O {
        match self {
            OField::Rat => O::R(BigRational::one()),
            OField::Quad(_) => O::Q(BigRational::one(), BigRational::zero()),
            OField::Prime(_) => O::Z(1),
            OField::Ext { .. } => {
                let mut c = vec![0; self.k()];
                c[0] = 1;
                O::E(c)
            }
        }
    }

    fn add(&self, a: &O, b: &O) -> O {
        match (self, a, b) {
            (_, O::R(x), O::R(y)) => O::R(x + y),
            (_, O::Q(a1, b1), O::Q(a2, b2)) => O::Q(a1 + a2, b1 + b2),
            (OField::Prime(p), O::Z(x), O::Z(y)) => O::Z((x + y) % p),
            (OField::Ext { p, .. }, O::E(x), O::E(y)) => O::E(x.iter().zip(y).map(|(s, t)| (s + t) % p).collect()),
            _ => unreachable!("operand outside its field"),
        }
    }

    fn neg(&self, a: &O) -> O {
        match (self, a) {
            (_, O::R(x)) => O::R(-x),
            (_, O::Q(x, y)) => O::Q(-x, -y),
            (OField::Prime(p), O::Z(x)) => O::Z((p - x) % p),
            (OField::Ext { p, .. }, O::E(x)) => O::E(x.iter().map(|s| (p - s) % p).collect()),
            _ => unreachable!("operand outside its field"),
        }
    }

    fn sub(&self, a: &O, b: &O) -> O {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &O, b: &O) -> O {
        match (self, a, b) {
            (_, O::R(x), O::R(y)) => O::R(x * y),
            (OField::Quad(d), O::Q(a1, b1), O::Q(a2, b2)) => O::Q(a1 * a2 + b1 * b2 * d, a1 * b2 + a2 * b1),
            (OField::Prime(p), O::Z(x), O::Z(y)) => O::Z(((*x as u128 * *y as u128) % *p as u128) as u64),
            (OField::Ext { p, modulus }, O::E(x), O::E(y)) => {
                let k = modulus.len() - 1;
                let mut prod = vec![0u64; 2 * k - 1];
                for (i, s) in x.iter().enumerate() {
                    for (j, t) in y.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + s * t) % p;
                    }
                }
                for top in (k..prod.len()).rev() {
                    let c = prod[top];
                    if c != 0 {
                        for (j, m) in modulus.iter().enumerate() {
                            let slot = &mut prod[top - k + j];
                            *slot = (*slot + (p - c) * m % p) % p;
                        }
                    }
                }
                prod.truncate(k);
                O::E(prod)
            }
            _ => unreachable!("operand outside its field"),
        }
    }

    fn is_zero(&self, a: &O) -> bool {
        *a == self.zero()
    }

    /// The index-th element in base-p digit order.
    fn element_at(&self, index: u64) -> O {
        match self {
            OField::Prime(_) => O::Z(index),
            OField::Ext { p, .. } => {
                let mut rest = index;
                O::E((0..self.k())
                    .map(|_| {
                        let d = rest % p;
                        rest /= p;
                        d
                    })
                    .collect())
            }
            _ => unreachable!("only finite fields are enumerated"),
        }
    }

    fn elements(&self) -> OResult<Vec<O>> {
        let q = self.finite()?;
        Ok((0..q).map(|i| self.element_at(i)).collect())
    }

    fn finite(&self) -> OResult<u64> {
        self.order()
            .ok_or_else(|| OracleError::TooLarge("exhaustive search needs a finite field".into()))
    }

    /// Inverse by search.
    fn inv(&self, a: &O) -> O {
        let one = self.one();
        self.elements()
            .expect("finite field")
            .into_iter()
            .find(|y| self.mul(a, y) == one)
            .expect("nonzero elements are invertible")
    }

    fn lift(&self, e: &FieldElement) -> O {
        if let Some(q) = e.as_rational() {
            O::R(q.clone())
        } else if let Some((a, b)) = e.quad_parts() {
            O::Q(a.clone(), b.clone())
        } else if let Some(r) = e.residue() {
            O::Z(r)
        } else {
            let mut c = e.ext_coeffs().expect("every element has a payload").to_vec();
            c.resize(self.k(), 0);
            O::E(c)
        }
    }

    fn to_engine(&self, field: &Field, a: &O) -> FieldElement {
        match a {
            O::R(q) => field.from_rational(q).expect("rational field"),
            O::Q(x, y) => field.quad(x.clone(), y.clone()).expect("quadratic field"),
            O::Z(r) => field.from_u64(*r),
            O::E(c) => field
                .ext_element(&c.iter().map(|&x| x as i64).collect::<Vec<_>>())
                .expect("extension field"),
        }
    }

    // Polynomials: coefficient vectors, lowest degree first, no trailing
    // zeros.

    fn trim(&self, mut f: Vec<O>) -> Vec<O> {
        while f.last().is_some_and(|c| self.is_zero(c)) {
            f.pop();
        }
        f
    }

    fn padd(&self, f: &[O], g: &[O]) -> Vec<O> {
        let zero = self.zero();
        let n = f.len().max(g.len());
        let sum = (0..n)
            .map(|i| self.add(f.get(i).unwrap_or(&zero), g.get(i).unwrap_or(&zero)))
            .collect();
        self.trim(sum)
    }

    fn pneg(&self, f: &[O]) -> Vec<O> {
        f.iter().map(|c| self.neg(c)).collect()
    }

    fn pmul(&self, f: &[O], g: &[O]) -> Vec<O> {
        if f.is_empty() || g.is_empty() {
            return Vec::new();
        }
        let mut out = vec![self.zero(); f.len() + g.len() - 1];
        for (i, a) in f.iter().enumerate() {
            for (j, b) in g.iter().enumerate() {
                out[i + j] = self.add(&out[i + j], &self.mul(a, b));
            }
        }
        self.trim(out)
    }

    /// Division by a monic g.
    fn divmod_monic(&self, f: &[O], g: &[O]) -> (Vec<O>, Vec<O>) {
        let dg = g.len() - 1;
        let mut r = f.to_vec();
        if r.len() <= dg {
            return (Vec::new(), r);
        }
        let mut q = vec![self.zero(); r.len() - dg];
        while r.len() > dg {
            let shift = r.len() - 1 - dg;
            let c = r.last().unwrap().clone();
            for (j, gj) in g.iter().enumerate() {
                r[shift + j] = self.sub(&r[shift + j], &self.mul(&c, gj));
            }
            q[shift] = c;
            r.pop();
            r = self.trim(r);
        }
        (q, r)
    }

    fn eval(&self, f: &[O], x: &O) -> O {
        f.iter().rev().fold(self.zero(), |acc, c| self.add(&self.mul(&acc, x), c))
    }

    fn monic_of_degree(&self, d: usize, index: u64) -> Vec<O> {
        let q = self.order().expect("finite field");
        let mut rest = index;
        let mut f: Vec<O> = (0..d)
            .map(|_| {
                let e = self.element_at(rest % q);
                rest /= q;
                e
            })
            .collect();
        f.push(self.one());
        f
    }

    fn poly_to_engine(&self, field: &Field, f: &[O]) -> Poly {
        Poly::new(field, f.iter().map(|c| self.to_engine(field, c)).collect())
    }

    fn poly_from_engine(&self, f: &Poly) -> Vec<O> {
        self.trim(f.coeffs().iter().map(|c| self.lift(c)).collect())
    }

    fn matrix_from_engine(&self, m: &Matrix) -> Vec<Vec<O>> {
        m.rows().iter().map(|r| r.iter().map(|c| self.lift(c)).collect()).collect()
    }
}

/// All permutations of 0..n with their signs.
fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<(Vec<usize>, bool)>) {
        let n = used.len();
        if prefix.len() == n {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| prefix[i] > prefix[j])
                .count();
            out.push((prefix.clone(), inversions % 2 == 1));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Σ_σ sgn(σ) Π a_{i,σ(i)} over any commutative ring given by closures.
fn permutation_expansion<T: Clone>(
    m: &[Vec<T>],
    zero: T,
    one: T,
    add: impl Fn(&T, &T) -> T,
    mul: impl Fn(&T, &T) -> T,
    neg: impl Fn(&T) -> T,
) -> T {
    let mut acc = zero;
    for (perm, odd) in permutations(m.len()) {
        let term = perm.iter().enumerate().fold(one.clone(), |t, (i, &j)| mul(&t, &m[i][j]));
        acc = add(&acc, &if odd { neg(&term) } else { term });
    }
    acc
}

fn check_square(m: &Matrix) -> OResult<()> {
    if !m.is_square() {
        return Err(OracleError::Shape(format!("{}x{} is not square", m.nrows(), m.ncols())));
    }
    if m.nrows() > MAX_DET_SIZE {
        return Err(OracleError::TooLarge(format!(
            "{0}x{0} exceeds the {MAX_DET_SIZE}x{MAX_DET_SIZE} permutation-expansion limit",
            m.nrows()
        )));
    }
    Ok(())
}

/// Determinant by full permutation expansion.
pub fn det(m: &Matrix) -> OResult<FieldElement> {
    check_square(m)?;
    let f = OField::of(m.field());
    let a = f.matrix_from_engine(m);
    let d = permutation_expansion(&a, f.zero(), f.one(), |x, y| f.add(x, y), |x, y| f.mul(x, y), |x| f.neg(x));
    Ok(f.to_engine(m.field(), &d))
}

/// det(xI − A) by permutation expansion over polynomial entries.
pub fn charpoly(m: &Matrix) -> OResult<Poly> {
    check_square(m)?;
    let f = OField::of(m.field());
    let a = f.matrix_from_engine(m);
    let n = a.len();
    let entries: Vec<Vec<Vec<O>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = f.neg(&a[i][j]);
                    if i == j {
                        f.trim(vec![c, f.one()])
                    } else {
                        f.trim(vec![c])
                    }
                })
                .collect()
        })
        .collect();
    let p = permutation_expansion(
        &entries,
        Vec::new(),
        vec![f.one()],
        |x, y| f.padd(x, y),
        |x, y| f.pmul(x, y),
        |x| f.pneg(x),
    );
    Ok(f.poly_to_engine(m.field(), &p))
}

/// Roots with multiplicities by evaluating at every field element, in
/// enumeration order.
pub fn roots(p: &Poly) -> OResult<Vec<(FieldElement, usize)>> {
    let f = OField::of(p.field());
    f.finite()?;
    let g = f.poly_from_engine(p);
    if g.is_empty() {
        return Err(OracleError::ZeroPolynomial);
    }
    let mut out = Vec::new();
    for x in f.elements()? {
        if !f.is_zero(&f.eval(&g, &x)) {
            continue;
        }
        let lin = vec![f.neg(&x), f.one()];
        let mut rest = g.clone();
        let mut mult = 0;
        loop {
            let (q, r) = f.divmod_monic(&rest, &lin);
            if !r.is_empty() {
                break;
            }
            rest = q;
            mult += 1;
        }
        out.push((f.to_engine(p.field(), &x), mult));
    }
    Ok(out)
}

/// Unit and monic irreducible factors with multiplicities, by trial
/// division with every monic polynomial of degree 1, 2, … in turn.
pub fn factor(p: &Poly) -> OResult<(FieldElement, Vec<(Poly, usize)>)> {
    let f = OField::of(p.field());
    let q = f.finite()?;
    let g = f.poly_from_engine(p);
    let Some(lead) = g.last().cloned() else {
        return Err(OracleError::ZeroPolynomial);
    };
    let deg = g.len() - 1;
    let budget: u64 = (1..=deg / 2).map(|d| q.saturating_pow(d as u32)).fold(0, u64::saturating_add);
    if budget > MAX_TRIAL_DIVISORS {
        return Err(OracleError::TooLarge(format!(
            "{budget} trial divisors exceed the limit {MAX_TRIAL_DIVISORS}"
        )));
    }
    let lead_inv = f.inv(&lead);
    let mut rest: Vec<O> = g.iter().map(|c| f.mul(c, &lead_inv)).collect();
    let mut factors = Vec::new();
    let mut d = 1;
    while 2 * d <= rest.len().saturating_sub(1) {
        for idx in 0..q.pow(d as u32) {
            let cand = f.monic_of_degree(d, idx);
            let mut mult = 0;
            loop {
                let (quot, r) = f.divmod_monic(&rest, &cand);
                if !r.is_empty() {
                    break;
                }
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                factors.push((f.poly_to_engine(p.field(), &cand), mult));
            }
        }
        d += 1;
    }
    if rest.len() > 1 {
        factors.push((f.poly_to_engine(p.field(), &rest), 1));
    }
    Ok((f.to_engine(p.field(), &lead), factors))
}

/// Monic divisor of the oracle characteristic polynomial of least degree
/// that annihilates the matrix.
pub fn minpoly(m: &Matrix) -> OResult<Poly> {
    let f = OField::of(m.field());
    f.finite()?;
    let chi = charpoly(m)?;
    let (_, factors) = factor(&chi)?;
    let a = f.matrix_from_engine(m);
    let n = a.len();
    let factors: Vec<(Vec<O>, usize)> = factors.iter().map(|(g, e)| (f.poly_from_engine(g), *e)).collect();

    let mut divisors: Vec<Vec<O>> = vec![vec![f.one()]];
    for (g, e) in &factors {
        let mut next = Vec::new();
        for d in &divisors {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..*e {
                cur = f.pmul(&cur, g);
                next.push(cur.clone());
            }
        }
        divisors = next;
    }
    divisors.sort_by_key(Vec::len);

    let matmul = |x: &[Vec<O>], y: &[Vec<O>]| -> Vec<Vec<O>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(f.zero(), |acc, k| f.add(&acc, &f.mul(&x[i][k], &y[k][j]))))
                    .collect()
            })
            .collect()
    };
    let annihilates = |p: &[O]| {
        let mut acc = vec![vec![f.zero(); n]; n];
        for c in p.iter().rev() {
            acc = matmul(&acc, &a);
            for (i, row) in acc.iter_mut().enumerate() {
                row[i] = f.add(&row[i], c);
            }
        }
        acc.iter().flatten().all(|x| f.is_zero(x))
    };
    let found = divisors
        .iter()
        .find(|d| annihilates(d))
        .expect("the characteristic polynomial annihilates");
    Ok(f.poly_to_engine(m.field(), found))
}

fn sorted_roots(mut r: Vec<(FieldElement, usize)>) -> Vec<(FieldElement, usize)> {
    r.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    r
}

fn poly_key(p: &Poly) -> (usize, Vec<String>) {
    (p.degree().unwrap_or(0), p.coeffs().iter().rev().map(|c| c.to_string()).collect())
}

fn sorted_factors(mut f: Vec<(Poly, usize)>) -> Vec<(Poly, usize)> {
    f.sort_by(|a, b| poly_key(&a.0).cmp(&poly_key(&b.0)).then(a.1.cmp(&b.1)));
    f
}

fn roots_json(r: &[(FieldElement, usize)]) -> Value {
    r.iter()
        .map(|(c, m)| json!({ "root": report::element(c), "multiplicity": m }))
        .collect()
}

fn factors_json(unit: &FieldElement, f: &[(Poly, usize)]) -> Value {
    json!({
        "unit": report::element(unit),
        "factors": f.iter().map(|(p, m)| json!({ "poly": report::poly(p), "multiplicity": m })).collect::<Vec<_>>(),
    })
}

enum Check {
    Compared { oracle: Value, engine: Value, agree: bool },
    Skipped(OracleError),
    EngineFailed { oracle: Value, error: nlalg_core::Error },
}

/// Oracle value and engine value for one component literal. `None` when
/// the literal is not of the kind the oracle consumes.
fn check(kind: OracleKind, lit: &Literal) -> Option<Check> {
    let out = match (kind, lit) {
        (OracleKind::Det, Literal::Matrix(m)) => match det(m) {
            Err(e) => Check::Skipped(e),
            Ok(o) => match m.det() {
                Ok(e) => Check::Compared {
                    agree: o == e,
                    oracle: report::element(&o),
                    engine: report::element(&e),
                },
                Err(error) => Check::EngineFailed { oracle: report::element(&o), error },
            },
        },
        (OracleKind::Minpoly, Literal::Matrix(m)) => match minpoly(m) {
            Err(e) => Check::Skipped(e),
            Ok(o) => match operators::minpoly(m) {
                Ok(e) => Check::Compared {
                    agree: o == e,
                    oracle: report::poly(&o),
                    engine: report::poly(&e),
                },
                Err(error) => Check::EngineFailed { oracle: report::poly(&o), error },
            },
        },
        (OracleKind::Roots, Literal::Poly(p)) => match roots(p) {
            Err(e) => Check::Skipped(e),
            Ok(o) => {
                let o = sorted_roots(o);
                match p.roots_in_field() {
                    Ok(e) => {
                        let e = sorted_roots(e);
                        Check::Compared {
                            agree: o == e,
                            oracle: roots_json(&o),
                            engine: roots_json(&e),
                        }
                    }
                    Err(error) => Check::EngineFailed { oracle: roots_json(&o), error },
                }
            }
        },
        (OracleKind::Factor, Literal::Poly(p)) => match factor(p) {
            Err(e) => Check::Skipped(e),
            Ok((ou, of)) => {
                let of = sorted_factors(of);
                match p.factor() {
                    Ok(fac) => {
                        let ef = sorted_factors(fac.factors.iter().map(|x| (x.poly.clone(), x.multiplicity)).collect());
                        Check::Compared {
                            agree: ou == fac.unit && of == ef,
                            oracle: factors_json(&ou, &of),
                            engine: factors_json(&fac.unit, &ef),
                        }
                    }
                    Err(error) => Check::EngineFailed {
                        oracle: factors_json(&ou, &of),
                        error,
                    },
                }
            }
        },
        _ => return None,
    };
    Some(out)
}

/// Runs one oracle over every eligible object of a problem file.
pub fn run_oracle(kind: OracleKind, p: &ProblemFile) -> Report {
    let mut checks = Vec::new();
    let (mut agreed, mut disagreed, mut skipped) = (0, 0, 0);
    for (name, obj) in &p.objects {
        for (i, lit) in obj.components.iter().enumerate() {
            let Some(c) = check(kind, lit) else { continue };
            let mut entry = Map::new();
            entry.insert("object".into(), json!(name));
            entry.insert("component".into(), json!(i + 1));
            entry.insert("field".into(), json!(p.fields[i].to_string()));
            match c {
                Check::Compared { oracle, engine, agree } => {
                    if agree {
                        agreed += 1;
                    } else {
                        disagreed += 1;
                    }
                    entry.insert("oracle".into(), oracle);
                    entry.insert("engine".into(), engine);
                    entry.insert("agree".into(), json!(agree));
                }
                Check::Skipped(e) => {
                    skipped += 1;
                    entry.insert("skipped".into(), json!({ "kind": e.kind(), "message": e.to_string() }));
                }
                Check::EngineFailed { oracle, error } => {
                    disagreed += 1;
                    entry.insert("oracle".into(), oracle);
                    entry.insert("engine_error".into(), report::engine_error(&error));
                    entry.insert("agree".into(), json!(false));
                }
            }
            checks.push(Value::Object(entry));
        }
    }
    let exit_code = if disagreed > 0 { 1 } else { 0 };
    Report {
        value: json!({
            "schema": REPORT_SCHEMA,
            "oracle": kind.name(),
            "nfield": p.fields.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "status": if disagreed > 0 { "error" } else { "ok" },
            "exit_code": exit_code,
            "checks": checks,
            "summary": {
                "checked": agreed + disagreed,
                "agreed": agreed,
                "disagreed": disagreed,
                "skipped": skipped,
            },
        }),
        exit_code,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn permutation_signs() {
        let perms = permutations(3);
        assert_eq!(perms.len(), 6);
        assert_eq!(perms.iter().filter(|(_, odd)| *odd).count(), 3);
        assert!(!perms[0].1);
    }

    #[test]
    fn det_agrees_with_bareiss_on_random_z7() {
        let z7 = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let mut m = Matrix::zero(&z7, 4, 4);
            for i in 0..4 {
                for j in 0..4 {
                    m.set(i, j, z7.random(&mut rng, 3));
                }
            }
            assert_eq!(det(&m).unwrap(), m.det().unwrap());
        }
    }

    #[test]
    fn det_small_cases_over_each_kind() {
        let q = Field::rational();
        assert_eq!(det(&Matrix::from_i64_rows(&q, &[[1, 2], [3, 4]])).unwrap(), q.from_i64(-2));
        let r2 = Field::quad_ext(2).unwrap();
        let s = r2.generator().unwrap();
        let m = Matrix::from_rows(&r2, vec![vec![s.clone(), r2.one()], vec![r2.one(), s]]).unwrap();
        assert_eq!(det(&m).unwrap(), r2.one());
        let gf4 = Field::ext(2, vec![1, 1, 1]).unwrap();
        let t = gf4.generator().unwrap();
        let m = Matrix::from_rows(&gf4, vec![vec![t.clone(), gf4.one()], vec![gf4.one(), t.clone()]]).unwrap();
        // t² + 1 = t in GF(4).
        assert_eq!(det(&m).unwrap(), t);
        assert!(matches!(det(&Matrix::identity(&q, 6)), Err(OracleError::TooLarge(_))));
    }

    #[test]
    fn roots_of_x2_plus_1_over_z5() {
        let z5 = Field::prime(5).unwrap();
        let f = Poly::parse("x^2+1", &z5).unwrap();
        assert_eq!(roots(&f).unwrap(), [(z5.from_i64(2), 1), (z5.from_i64(3), 1)]);
        let g = Poly::parse("x^3", &z5).unwrap();
        assert_eq!(roots(&g).unwrap(), [(z5.zero(), 3)]);
        assert!(matches!(roots(&Poly::parse("x", &Field::rational()).unwrap()), Err(OracleError::TooLarge(_))));
    }

    #[test]
    fn factor_x3_plus_1_over_z2() {
        let z2 = Field::prime(2).unwrap();
        let (unit, f) = factor(&Poly::parse("x^3+1", &z2).unwrap()).unwrap();
        assert!(unit.is_one());
        assert_eq!(
            f,
            [
                (Poly::parse("x+1", &z2).unwrap(), 1),
                (Poly::parse("x^2+x+1", &z2).unwrap(), 1)
            ]
        );
        let z3 = Field::prime(3).unwrap();
        let (unit, f) = factor(&Poly::parse("2*x^4+2", &z3).unwrap()).unwrap();
        assert_eq!(unit, z3.from_i64(2));
        assert_eq!(f, [(Poly::parse("x^2+x+2", &z3).unwrap(), 1), (Poly::parse("x^2+2*x+2", &z3).unwrap(), 1)]);
    }

    #[test]
    fn charpoly_and_minpoly() {
        let z3 = Field::prime(3).unwrap();
        let a = Matrix::from_i64_rows(&z3, &[[1, 0, 0], [0, 1, 0], [0, 0, 2]]);
        assert_eq!(
            charpoly(&a).unwrap(),
            &Poly::parse("x^2-2*x+1", &z3).unwrap() * &Poly::parse("x-2", &z3).unwrap()
        );
        assert_eq!(
            minpoly(&a).unwrap(),
            &Poly::parse("x-1", &z3).unwrap() * &Poly::parse("x-2", &z3).unwrap()
        );
        assert!(matches!(minpoly(&Matrix::identity(&Field::rational(), 2)), Err(OracleError::TooLarge(_))));
    }
}

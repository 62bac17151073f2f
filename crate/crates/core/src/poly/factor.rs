//! Factorization into monic irreducibles.
//!
//! Finite fields: squarefree decomposition, distinct-degree splitting, then
//! equal-degree splitting by trial of monic candidates (deterministic gcd
//! splitting once the candidate count gets large). ℚ: rational roots, then
//! Kronecker search up to degree 6. ℚ(√d): roots read off the norm
//! polynomial, remaining factors certified only up to degree 3.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::Poly;
use crate::error::{Error, Result};
use crate::fields::{Field, FieldDescriptor, FieldElement};

/// Above this many monic candidates, equal-degree splitting switches from
/// trial division to deterministic gcd splitting.
const TRIAL_SPLIT_LIMIT: u64 = 1 << 16;

/// Largest degree handed to the Kronecker search over ℚ.
const KRONECKER_MAX_DEGREE: usize = 6;

/// Trial-division bound when enumerating integer divisors.
const DIVISOR_TRIAL_BOUND: u64 = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub poly: Poly,
    pub multiplicity: usize,
    /// False when the factor may still be reducible (characteristic zero
    /// only).
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    pub factors: Vec<Factor>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.factors.iter().all(|f| f.certified)
    }

    /// unit · Π factor^multiplicity
    pub fn expand(&self) -> Poly {
        self.factors.iter().fold(Poly::constant(self.unit.clone()), |acc, f| {
            &acc * &f.poly.pow(f.multiplicity)
        })
    }

    /// Roots read off the linear factors.
    pub fn linear_roots(&self) -> Vec<(FieldElement, usize)> {
        self.factors
            .iter()
            .filter(|f| f.poly.degree() == Some(1))
            .map(|f| (f.poly.coeff(0).neg(), f.multiplicity))
            .collect()
    }
}

fn poly_cmp(a: &Poly, b: &Poly) -> Ordering {
    a.degree().cmp(&b.degree()).then_with(|| {
        for (x, y) in a.coeffs().iter().rev().zip(b.coeffs().iter().rev()) {
            let o = x.canonical_cmp(y);
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

impl Poly {
    /// Full factorization; fails with `FactorizationIncomplete` carrying the
    /// partial result when some characteristic-zero factor is uncertified.
    pub fn factor(&self) -> Result<Factorization> {
        let fact = self.factor_partial()?;
        if fact.is_complete() {
            Ok(fact)
        } else {
            Err(Error::FactorizationIncomplete(Box::new(fact)))
        }
    }

    /// Factorization that flags uncertified factors instead of failing.
    pub fn factor_partial(&self) -> Result<Factorization> {
        let Some(lc) = self.leading().cloned() else {
            return Err(Error::ZeroPolynomial);
        };
        let f = self.monic();
        let mut factors = Vec::new();
        if !f.is_constant() {
            for (g, m) in squarefree_decompose(&f) {
                for (h, certified) in factor_squarefree(&g) {
                    factors.push(Factor {
                        poly: h,
                        multiplicity: m,
                        certified,
                    });
                }
            }
        }
        factors.sort_by(|a, b| poly_cmp(&a.poly, &b.poly).then(a.multiplicity.cmp(&b.multiplicity)));
        Ok(Factorization { unit: lc, factors })
    }

    /// Squarefree decomposition of the monic associate: pairs (g_i, i) with
    /// the g_i pairwise coprime, squarefree, and f = lc · Π g_i^i.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let f = self.monic();
        Ok(if f.is_constant() {
            vec![]
        } else {
            squarefree_decompose(&f)
        })
    }

    /// f / gcd(f, f′), made monic. In characteristic zero this is the
    /// product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Poly {
        if self.is_constant() {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides f").monic()
    }

    /// Product of the distinct monic irreducible factors, in any
    /// characteristic.
    pub fn radical(&self) -> Poly {
        match self.squarefree_decomposition() {
            Ok(parts) => parts.iter().fold(Poly::one(self.field()), |acc, (g, _)| &acc * g),
            Err(_) => Poly::zero(self.field()),
        }
    }

    pub fn is_irreducible(&self) -> Result<bool> {
        let fact = self.factor()?;
        Ok(fact.factors.len() == 1 && fact.factors[0].multiplicity == 1)
    }

    /// Distinct roots in the field with multiplicities, canonically sorted.
    pub fn roots_in_field(&self) -> Result<Vec<(FieldElement, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut roots: Vec<FieldElement> = if self.is_constant() {
            vec![]
        } else {
            let sf = self.radical();
            let found = match &**self.field() {
                FieldDescriptor::Rational => rational_roots(&sf),
                FieldDescriptor::QuadExt { d } => quad_roots(&sf, *d),
                _ => Some(
                    factor_squarefree(&sf)
                        .into_iter()
                        .filter(|(h, _)| h.degree() == Some(1))
                        .map(|(h, _)| h.coeff(0).neg())
                        .collect(),
                ),
            };
            match found {
                Some(r) => r,
                None => return Err(Error::FactorizationIncomplete(Box::new(self.factor_partial()?))),
            }
        };
        roots.sort_by(|a, b| a.canonical_cmp(b));
        roots
            .into_iter()
            .map(|r| {
                let m = self.root_multiplicity(&r)?;
                Ok((r, m))
            })
            .collect()
    }

    /// True when f is a product of linear factors over its field.
    pub fn splits(&self) -> Result<bool> {
        let deg = self.degree().ok_or(Error::ZeroPolynomial)?;
        let total: usize = self.roots_in_field()?.iter().map(|(_, m)| m).sum();
        Ok(total == deg)
    }
}

fn pth_root_poly(f: &Poly) -> Poly {
    let p = f.field().characteristic() as usize;
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|c| c.pth_root().expect("finite field"))
        .collect();
    Poly::new(f.field(), coeffs)
}

/// f monic and nonconstant.
fn squarefree_decompose(f: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut c = f.gcd(&f.derivative());
    let mut w = f.div_exact(&c).unwrap();
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y).unwrap();
        if !z.is_constant() {
            out.push((z, i));
        }
        c = c.div_exact(&y).unwrap();
        w = y;
        i += 1;
    }
    if !c.is_constant() {
        // only reachable in characteristic p: c is a p-th power
        let p = f.field().characteristic() as usize;
        for (g, j) in squarefree_decompose(&pth_root_poly(&c)) {
            out.push((g, j * p));
        }
    }
    out
}

/// Monic squarefree nonconstant input; returns monic factors with a
/// certification flag.
fn factor_squarefree(f: &Poly) -> Vec<(Poly, bool)> {
    match &**f.field() {
        FieldDescriptor::Rational => factor_squarefree_rational(f),
        FieldDescriptor::QuadExt { d } => factor_squarefree_quad(f, *d),
        _ => distinct_degree(f)
            .into_iter()
            .flat_map(|(g, d)| equal_degree(&g, d))
            .map(|g| (g, true))
            .collect(),
    }
}

// ---------------------------------------------------------------- finite

fn distinct_degree(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field();
    let q = field.order().unwrap();
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut h = x.clone();
    let mut d = 1;
    while g.degree().unwrap_or(0) >= 2 * d {
        h = h.pow_mod(q, &g).unwrap();
        let gd = g.gcd(&(&h - &x));
        if !gd.is_one() {
            g = g.div_exact(&gd).unwrap();
            h = h.rem(&g).unwrap();
            out.push((gd, d));
        }
        d += 1;
    }
    if let Some(n) = g.degree().filter(|&n| n > 0) {
        out.push((g, n));
    }
    out
}

/// Splits a product of distinct irreducibles of degree `d`.
pub(crate) fn equal_degree(f: &Poly, d: usize) -> Vec<Poly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let q = f.field().order().unwrap();
    let candidates = q.checked_pow(d as u32).unwrap_or(u64::MAX);
    if candidates <= TRIAL_SPLIT_LIMIT {
        equal_degree_trial(f, d)
    } else {
        equal_degree_gcd(f, d)
    }
}

pub(crate) fn equal_degree_trial(f: &Poly, d: usize) -> Vec<Poly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    for g in Poly::monic_of_degree(f.field(), d) {
        if rest.degree() == Some(d) {
            break;
        }
        if g.divides(&rest) {
            rest = rest.div_exact(&g).unwrap();
            out.push(g);
        }
    }
    out.push(rest);
    out
}

fn poly_from_index(field: &Field, mut idx: u64, len: usize) -> Poly {
    let q = field.order().unwrap();
    let coeffs = (0..len)
        .map(|_| {
            let c = field.element_at(idx % q).unwrap();
            idx /= q;
            c
        })
        .collect();
    Poly::new(field, coeffs)
}

/// Deterministic Cantor–Zassenhaus: the trial polynomials are enumerated
/// in a fixed order instead of drawn at random.
pub(crate) fn equal_degree_gcd(f: &Poly, d: usize) -> Vec<Poly> {
    let n = f.degree().unwrap();
    if n == d {
        return vec![f.clone()];
    }
    let field = f.field();
    let q = field.order().unwrap();
    let p = field.characteristic();
    for idx in 1u64.. {
        let a = poly_from_index(field, idx, n);
        if a.is_constant() {
            continue;
        }
        let b = if p == 2 {
            // absolute trace a + a^2 + ... + a^{2^{kd-1}}
            let k = field.degree();
            let mut t = a.rem(f).unwrap();
            let mut acc = t.clone();
            for _ in 1..k * d {
                t = (&t * &t).rem(f).unwrap();
                acc = &acc + &t;
            }
            acc
        } else {
            // a^{(q^d-1)/2} = Π_{i<d} (a^{(q-1)/2})^{q^i}
            let mut t = a.pow_mod((q - 1) / 2, f).unwrap();
            let mut acc = t.clone();
            for _ in 1..d {
                t = t.pow_mod(q, f).unwrap();
                acc = (&acc * &t).rem(f).unwrap();
            }
            &acc - &Poly::one(field)
        };
        let g = f.gcd(&b);
        if let Some(dg) = g.degree() {
            if dg > 0 && dg < n {
                let mut out = equal_degree_gcd(&g, d);
                out.extend(equal_degree_gcd(&f.div_exact(&g).unwrap(), d));
                out.sort_by(poly_cmp);
                return out;
            }
        }
    }
    unreachable!("a splitting polynomial always exists")
}

// ------------------------------------------------------------ rationals

fn rat(n: &BigInt) -> BigRational {
    BigRational::from_integer(n.clone())
}

/// Primitive integer polynomial proportional to a ℚ-polynomial, lowest
/// degree first, positive leading coefficient.
fn primitive_integer(f: &Poly) -> Vec<BigInt> {
    let qs: Vec<BigRational> = f.coeffs().iter().map(|c| c.to_rational().unwrap()).collect();
    let lcm = qs.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = qs.iter().map(|q| (q * rat(&lcm)).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

fn eval_int(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Positive divisors of |n| (n ≠ 0), or `None` if |n| has a cofactor that
/// trial division up to the bound cannot resolve.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut m = n.abs();
    let mut primes: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    let bound = BigInt::from(DIVISOR_TRIAL_BOUND);
    while &p * &p <= m {
        if p > bound {
            return None;
        }
        if (&m % &p).is_zero() {
            let mut e = 0;
            while (&m % &p).is_zero() {
                m /= &p;
                e += 1;
            }
            primes.push((p.clone(), e));
        }
        p += 1;
    }
    if !m.is_one() {
        primes.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in primes {
        let mut next = Vec::with_capacity(divs.len() * (e as usize + 1));
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    Some(divs)
}

/// Rational roots of a ℚ-polynomial (as field elements of `f`'s field),
/// by numerator/denominator divisor enumeration.
fn rational_roots_q(f: &Poly) -> Option<Vec<BigRational>> {
    let mut ints = primitive_integer(f);
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(BigRational::zero());
        while ints[0].is_zero() {
            ints.remove(0);
        }
    }
    if ints.len() == 1 {
        return Some(roots);
    }
    let num = divisors(&ints[0])?;
    let den = divisors(ints.last().unwrap())?;
    let q = Field::rational();
    let fq = Poly::new(&q, ints.iter().map(|c| q.from_bigint(c)).collect());
    let mut seen = Vec::new();
    for a in &num {
        for b in &den {
            for s in [a.clone(), -a.clone()] {
                let cand = BigRational::new(s, b.clone());
                if seen.contains(&cand) {
                    continue;
                }
                seen.push(cand.clone());
                if fq.eval(&q.from_rational(&cand).unwrap()).is_zero() {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

fn rational_roots(f: &Poly) -> Option<Vec<FieldElement>> {
    let field = f.field();
    Some(
        rational_roots_q(f)?
            .iter()
            .map(|r| field.from_rational(r).unwrap())
            .collect(),
    )
}

/// Kronecker search for a factor of exact degree `e` of a monic ℚ-polynomial
/// without rational roots. `None` when divisor enumeration gave up.
fn kronecker_factor(f: &Poly, e: usize) -> Option<Option<Poly>> {
    let ints = primitive_integer(f);
    let q = Field::rational();
    let fz = Poly::new(&q, ints.iter().map(|c| q.from_bigint(c)).collect());
    // candidate abscissae 0, 1, -1, 2, -2, ...; keep those with fewest divisors
    let mut pool: Vec<(BigInt, Vec<BigInt>)> = Vec::new();
    for i in 0..(2 * e + 5) as i64 {
        let x = BigInt::from(if i % 2 == 0 { -(i / 2) } else { i / 2 + 1 });
        let v = eval_int(&ints, &x);
        if v.is_zero() {
            continue;
        }
        pool.push((x, divisors(&v)?));
    }
    pool.sort_by_key(|(_, d)| d.len());
    pool.truncate(e + 1);
    let xs: Vec<FieldElement> = pool.iter().map(|(x, _)| q.from_bigint(x)).collect();
    let options: Vec<Vec<BigInt>> = pool
        .iter()
        .enumerate()
        .map(|(i, (_, divs))| {
            if i == 0 {
                divs.clone()
            } else {
                divs.iter().flat_map(|d| [d.clone(), -d.clone()]).collect()
            }
        })
        .collect();
    let mut idx = vec![0usize; options.len()];
    loop {
        let ys: Vec<FieldElement> = idx
            .iter()
            .zip(&options)
            .map(|(&i, opts)| q.from_bigint(&opts[i]))
            .collect();
        let g = super::lagrange_interpolate(&q, &xs, &ys).ok()?;
        if g.degree() == Some(e)
            && g.coeffs().iter().all(|c| c.as_rational().unwrap().is_integer())
            && g.divides(&fz)
        {
            return Some(Some(Poly::new(
                f.field(),
                g.monic()
                    .coeffs()
                    .iter()
                    .map(|c| f.field().from_rational(c.as_rational().unwrap()).unwrap())
                    .collect(),
            )));
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == idx.len() {
                return Some(None);
            }
            idx[k] += 1;
            if idx[k] < options[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// Splits a monic root-free ℚ-polynomial with Kronecker's method. Factors of
/// degree ≤ 3 are certified (no roots), larger ones only below the degree
/// cap.
fn split_rootless_rational(f: Poly, out: &mut Vec<(Poly, bool)>) {
    let mut stack = vec![f];
    while let Some(g) = stack.pop() {
        let n = g.degree().unwrap();
        if n == 0 {
            continue;
        }
        if n <= 3 {
            out.push((g, true));
            continue;
        }
        if n > KRONECKER_MAX_DEGREE {
            out.push((g, false));
            continue;
        }
        let mut verdict = Some(None);
        for e in 2..=n / 2 {
            verdict = kronecker_factor(&g, e);
            if !matches!(verdict, Some(None)) {
                break;
            }
        }
        match verdict {
            Some(Some(h)) => {
                let rest = g.div_exact(&h).unwrap();
                stack.push(h);
                stack.push(rest);
            }
            Some(None) => out.push((g, true)),
            None => out.push((g, false)),
        }
    }
}

fn factor_squarefree_rational(f: &Poly) -> Vec<(Poly, bool)> {
    let Some(roots) = rational_roots(f) else {
        return vec![(f.clone(), false)];
    };
    let mut out = Vec::new();
    let mut rest = f.clone();
    for r in roots {
        let lin = Poly::linear(&r);
        rest = rest.div_exact(&lin).unwrap();
        out.push((lin, true));
    }
    split_rootless_rational(rest, &mut out);
    out
}

// ------------------------------------------------------ quadratic fields

fn to_q_poly(f: &Poly) -> Option<Poly> {
    let q = Field::rational();
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| c.to_rational().map(|r| q.from_rational(&r).unwrap()))
        .collect::<Option<Vec<_>>>()?;
    Some(Poly::new(&q, coeffs))
}

fn from_q_poly(f: &Poly, field: &Field) -> Poly {
    Poly::new(
        field,
        f.coeffs()
            .iter()
            .map(|c| field.from_rational(c.as_rational().unwrap()).unwrap())
            .collect(),
    )
}

/// N(f) = f · f̄ ∈ ℚ[x], where the bar maps √d to −√d.
pub(crate) fn norm_polynomial(f: &Poly) -> Poly {
    let field = f.field();
    let conj = Poly::new(
        field,
        f.coeffs()
            .iter()
            .map(|c| {
                let (a, b) = c.quad_parts().unwrap();
                field.quad(a.clone(), -b.clone()).unwrap()
            })
            .collect(),
    );
    to_q_poly(&(f * &conj)).expect("norm has rational coefficients")
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

/// Roots of a monic squarefree polynomial over ℚ(√d), found as roots of
/// linear and quadratic ℚ-factors of its norm.
fn quad_roots(f: &Poly, d: i64) -> Option<Vec<FieldElement>> {
    let field = f.field();
    let norm = norm_polynomial(f).squarefree_part();
    let mut candidates: Vec<FieldElement> = Vec::new();
    let rroots = rational_roots_q(&norm)?;
    let q = Field::rational();
    let mut rest = norm.clone();
    for r in &rroots {
        candidates.push(field.from_rational(r).unwrap());
        rest = rest.div_exact(&Poly::linear(&q.from_rational(r).unwrap())).unwrap();
    }
    let dq = BigRational::from_integer(BigInt::from(d));
    loop {
        let h = match rest.degree().unwrap_or(0) {
            2 => rest.clone(),
            n if n >= 4 => match kronecker_factor(&rest, 2)? {
                Some(h) => h,
                None => break,
            },
            _ => break,
        };
        rest = rest.div_exact(&h).unwrap();
        let beta = h.coeff(1).to_rational().unwrap();
        let gamma = h.coeff(0).to_rational().unwrap();
        let a = -beta / BigRational::from_integer(BigInt::from(2));
        let bsq = (&a * &a - gamma) / &dq;
        if let Some(b) = rational_sqrt(&bsq) {
            candidates.push(field.quad(a.clone(), b.clone()).unwrap());
            candidates.push(field.quad(a, -b).unwrap());
        }
    }
    let mut roots: Vec<FieldElement> = Vec::new();
    for c in candidates {
        if f.eval(&c).is_zero() && !roots.contains(&c) {
            roots.push(c);
        }
    }
    Some(roots)
}

fn factor_squarefree_quad(f: &Poly, d: i64) -> Vec<(Poly, bool)> {
    let field = f.field();
    let Some(roots) = quad_roots(f, d) else {
        return vec![(f.clone(), false)];
    };
    let mut out = Vec::new();
    let mut rest = f.clone();
    for r in roots {
        let lin = Poly::linear(&r);
        rest = rest.div_exact(&lin).unwrap();
        out.push((lin, true));
    }
    match rest.degree() {
        Some(0) | None => {}
        Some(n) if n <= 3 => out.push((rest, true)),
        Some(_) => match to_q_poly(&rest) {
            Some(rq) => {
                let mut parts = Vec::new();
                split_rootless_rational(rq, &mut parts);
                for (g, _) in parts {
                    let n = g.degree().unwrap();
                    out.push((from_q_poly(&g, field), n <= 3));
                }
            }
            None => out.push((rest, false)),
        },
    }
    out
}

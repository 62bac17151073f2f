//! Dense univariate polynomials over a supported field, and tuples of them.

mod factor;
mod interp;
mod npoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::fields::{parse_element, split_monomial, split_signed_terms, Field, FieldElement};

pub use factor::{Factor, Factorization};
pub use interp::{lagrange_basis, lagrange_interpolate, vandermonde};
pub use npoly::NPoly;

/// Polynomial with coefficients lowest degree first. The coefficient
/// vector never has a trailing zero, so the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|c| c.field() == field));
        Poly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn from_i64s(field: &Field, coeffs: &[i64]) -> Self {
        Poly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Self {
        Poly::new(field, vec![])
    }

    pub fn one(field: &Field) -> Self {
        Poly::constant(field.one())
    }

    pub fn constant(c: FieldElement) -> Self {
        let field = c.field().clone();
        Poly::new(&field, vec![c])
    }

    /// The polynomial x.
    pub fn x(field: &Field) -> Self {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// x − c
    pub fn linear(c: &FieldElement) -> Self {
        let field = c.field().clone();
        Poly::new(&field, vec![c.neg(), field.one()])
    }

    pub fn monomial(c: FieldElement, k: usize) -> Self {
        let field = c.field().clone();
        let mut coeffs = vec![field.zero(); k];
        coeffs.push(c);
        Poly::new(&field, coeffs)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// `None` for the zero polynomial, which orders below every degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn leading(&self) -> Option<&FieldElement> {
        self.coeffs.last()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect();
        Ok(Poly::new(&self.field, coeffs))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let mut coeffs = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Ok(Poly::new(&self.field, coeffs))
    }

    pub fn neg(&self) -> Self {
        Poly::new(&self.field, self.coeffs.iter().map(|c| c.neg()).collect())
    }

    pub fn scale(&self, c: &FieldElement) -> Self {
        Poly::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// The monic associate; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lc) if !lc.is_one() => self.scale(&lc.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Poly::one(&self.field);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Long division: `self = d·q + r` with `r = 0` or `deg r < deg d`.
    pub fn divmod(&self, d: &Poly) -> Result<(Poly, Poly)> {
        self.check(d)?;
        let Some(dd) = d.degree() else {
            return Err(Error::DivisionByZeroPoly);
        };
        let lc_inv = d.coeffs[dd].inv()?;
        let mut r = self.coeffs.clone();
        let Some(df) = self.degree().filter(|&df| df >= dd) else {
            return Ok((Poly::zero(&self.field), self.clone()));
        };
        let mut q = vec![self.field.zero(); df - dd + 1];
        for i in (dd..=df).rev() {
            let c = &r[i] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                r[idx] = &r[idx] - &(&c * dc);
            }
            q[i - dd] = c;
        }
        r.truncate(dd);
        Ok((Poly::new(&self.field, q), Poly::new(&self.field, r)))
    }

    pub fn rem(&self, d: &Poly) -> Result<Poly> {
        Ok(self.divmod(d)?.1)
    }

    /// Quotient of a division that must be exact.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.divmod(d)?;
        if !r.is_zero() {
            return Err(Error::Internal(format!("{d} does not divide {self}")));
        }
        Ok(q)
    }

    pub fn divides(&self, f: &Poly) -> bool {
        f.rem(self).is_ok_and(|r| r.is_zero())
    }

    /// Monic gcd d with Bezout cofactors: u·self + v·other = d.
    pub fn gcd_bezout(&self, other: &Poly) -> Result<(Poly, Poly, Poly)> {
        self.check(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let field = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(field), Poly::zero(field));
        let (mut t0, mut t1) = (Poly::zero(field), Poly::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1)?;
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let lc_inv = r0.leading().unwrap().inv()?;
        Ok((r0.scale(&lc_inv), s0.scale(&lc_inv), t0.scale(&lc_inv)))
    }

    /// Monic gcd; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Poly) -> Poly {
        match self.gcd_bezout(other) {
            Ok((d, _, _)) => d,
            Err(_) => Poly::zero(&self.field),
        }
    }

    /// Formal derivative; integer multipliers reduce in the characteristic.
    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &self.field.from_u64(i as u64))
            .collect();
        Poly::new(&self.field, coeffs)
    }

    /// D^k f.
    pub fn nth_derivative(&self, k: usize) -> Poly {
        (0..k).fold(self.clone(), |f, _| f.derivative())
    }

    /// Horner evaluation.
    pub fn eval(&self, c: &FieldElement) -> FieldElement {
        self.coeffs
            .iter()
            .rev()
            .fold(self.field.zero(), |acc, a| &(&acc * c) + a)
    }

    /// f(g(x)).
    pub fn compose(&self, g: &Poly) -> Poly {
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(&self.field), |acc, a| &(&acc * g) + &Poly::constant(a.clone()))
    }

    /// self^e mod m.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Result<Poly> {
        let mut acc = Poly::one(&self.field).rem(m)?;
        let mut base = self.rem(m)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(m)?;
            }
            base = (&base * &base).rem(m)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Every monic polynomial of degree `d` over a finite field, in
    /// enumeration order of the lower coefficients.
    pub fn monic_of_degree(field: &Field, d: usize) -> impl Iterator<Item = Poly> + '_ {
        let q = field.order().expect("enumeration needs a finite field");
        let total = q.checked_pow(d as u32).unwrap_or(u64::MAX);
        (0..total).map(move |mut idx| {
            let mut coeffs = Vec::with_capacity(d + 1);
            for _ in 0..d {
                coeffs.push(field.element_at(idx % q).unwrap());
                idx /= q;
            }
            coeffs.push(field.one());
            Poly::new(field, coeffs)
        })
    }

    /// Irreducibility over a finite field by trial division with every
    /// monic polynomial of degree 1..=deg/2.
    pub fn is_irreducible_exhaustive(&self) -> bool {
        let Some(n) = self.degree() else {
            return false;
        };
        if n == 0 {
            return false;
        }
        (1..=n / 2).all(|d| Poly::monic_of_degree(&self.field, d).all(|g| !g.divides(self)))
    }

    /// Parses the polynomial literal grammar: terms `c*x^k` joined by
    /// `+`/`-`, coefficients in the element grammar (parenthesized when
    /// they contain a sign).
    pub fn parse(text: &str, field: &Field) -> Result<Poly> {
        let mut acc = Poly::zero(field);
        for (neg, term) in split_signed_terms(text)? {
            let (coef, deg) = split_monomial(&term, 'x')?;
            let coef = match coef.as_str() {
                "" => field.one(),
                c => {
                    let inner = c
                        .strip_prefix('(')
                        .and_then(|s| s.strip_suffix(')'))
                        .unwrap_or(c);
                    parse_element(inner, field)?
                }
            };
            let coef = if neg { coef.neg() } else { coef };
            acc = &acc + &Poly::monomial(coef, deg);
        }
        Ok(acc)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (negative, mag) = if c.is_negative_literal() {
                (true, c.neg())
            } else {
                (false, c.clone())
            };
            if negative {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let coef_text = if mag.is_compound() {
                format!("({mag})")
            } else {
                mag.to_string()
            };
            match k {
                0 => write!(f, "{coef_text}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coef_text}*")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

macro_rules! forward_poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomials over different fields")
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add, try_add);
forward_poly_binop!(Sub, sub, try_sub);
forward_poly_binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

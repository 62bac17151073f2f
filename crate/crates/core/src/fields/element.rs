use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::arith;
use super::descriptor::{rat_sign, Field, FieldDescriptor};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Value {
    Rat(BigRational),
    /// a + b√d
    Quad(BigRational, BigRational),
    Residue(u64),
    /// coefficients of t^0..t^{k-1}
    Ext(Vec<u64>),
}

/// An exact element of one of the supported fields.
#[derive(Clone, Debug)]
pub struct FieldElement {
    field: Field,
    value: Value,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field == other.field
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

impl FieldElement {
    pub(crate) fn from_parts(field: Field, value: Value) -> Self {
        FieldElement { field, value }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_zero(),
            Value::Quad(a, b) => a.is_zero() && b.is_zero(),
            Value::Residue(r) => *r == 0,
            Value::Ext(c) => c.iter().all(|&x| x == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_one(),
            Value::Quad(a, b) => a.is_one() && b.is_zero(),
            Value::Residue(r) => *r == 1,
            Value::Ext(c) => c[0] == 1 && c[1..].iter().all(|&x| x == 0),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rat(q) => Some(q),
            _ => None,
        }
    }

    /// (a, b) for a + b√d.
    pub fn quad_parts(&self) -> Option<(&BigRational, &BigRational)> {
        match &self.value {
            Value::Quad(a, b) => Some((a, b)),
            _ => None,
        }
    }

    /// The rational value of an element of ℚ or of ℚ(√d) with zero
    /// irrational part.
    pub fn to_rational(&self) -> Option<BigRational> {
        match &self.value {
            Value::Rat(q) => Some(q.clone()),
            Value::Quad(a, b) if b.is_zero() => Some(a.clone()),
            _ => None,
        }
    }

    pub fn residue(&self) -> Option<u64> {
        match &self.value {
            Value::Residue(r) => Some(*r),
            _ => None,
        }
    }

    pub fn ext_coeffs(&self) -> Option<&[u64]> {
        match &self.value {
            Value::Ext(c) => Some(c),
            _ => None,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::DescriptorMismatch)
        }
    }

    fn wrap(&self, value: Value) -> Self {
        FieldElement {
            field: self.field.clone(),
            value,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let value = match (&self.value, &other.value, &*self.field) {
            (Value::Rat(a), Value::Rat(b), _) => Value::Rat(a + b),
            (Value::Quad(a, b), Value::Quad(c, d), _) => Value::Quad(a + c, b + d),
            (Value::Residue(a), Value::Residue(b), FieldDescriptor::PrimeField { p }) => {
                Value::Residue((a + b) % p)
            }
            (Value::Ext(a), Value::Ext(b), FieldDescriptor::ExtField { p, .. }) => {
                Value::Ext(a.iter().zip(b).map(|(x, y)| (x + y) % p).collect())
            }
            _ => return Err(Error::DescriptorMismatch),
        };
        Ok(self.wrap(value))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let value = match (&self.value, &other.value, &*self.field) {
            (Value::Rat(a), Value::Rat(b), _) => Value::Rat(a * b),
            (Value::Quad(a, b), Value::Quad(c, e), FieldDescriptor::QuadExt { d }) => {
                let d = BigRational::from_integer(BigInt::from(*d));
                Value::Quad(a * c + b * e * d, a * e + b * c)
            }
            (Value::Residue(a), Value::Residue(b), FieldDescriptor::PrimeField { p }) => {
                Value::Residue(a * b % p)
            }
            (Value::Ext(a), Value::Ext(b), FieldDescriptor::ExtField { p, modulus }) => {
                Value::Ext(arith::ext_mul(a, b, modulus, *p))
            }
            _ => return Err(Error::DescriptorMismatch),
        };
        Ok(self.wrap(value))
    }

    pub fn neg(&self) -> Self {
        let value = match (&self.value, &*self.field) {
            (Value::Rat(a), _) => Value::Rat(-a),
            (Value::Quad(a, b), _) => Value::Quad(-a, -b),
            (Value::Residue(a), FieldDescriptor::PrimeField { p }) => Value::Residue((p - a) % p),
            (Value::Ext(c), FieldDescriptor::ExtField { p, .. }) => {
                Value::Ext(c.iter().map(|x| (p - x) % p).collect())
            }
            _ => unreachable!("payload always matches descriptor"),
        };
        self.wrap(value)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let value = match (&self.value, &*self.field) {
            (Value::Rat(a), _) => Value::Rat(a.recip()),
            (Value::Quad(a, b), FieldDescriptor::QuadExt { d }) => {
                let d = BigRational::from_integer(BigInt::from(*d));
                let norm = a * a - b * b * d;
                Value::Quad(a / &norm, -b / &norm)
            }
            (Value::Residue(a), FieldDescriptor::PrimeField { p }) => {
                Value::Residue(arith::mod_inv(*a, *p))
            }
            (Value::Ext(c), FieldDescriptor::ExtField { p, modulus }) => {
                let q = p.pow(modulus.len() as u32 - 1);
                Value::Ext(arith::ext_pow(c, q - 2, modulus, *p))
            }
            _ => unreachable!("payload always matches descriptor"),
        };
        Ok(self.wrap(value))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// The unique p-th root in a finite field of characteristic p.
    pub fn pth_root(&self) -> Option<Self> {
        match &*self.field {
            FieldDescriptor::PrimeField { .. } => Some(self.clone()),
            FieldDescriptor::ExtField { p, modulus } => {
                let k = modulus.len() as u32 - 1;
                Some(self.pow(p.pow(k - 1)))
            }
            _ => None,
        }
    }

    /// Sign under the field's real ordering. ℚ(√d) with d > 0 uses the
    /// embedding with √d > 0.
    pub fn sign(&self) -> Result<Ordering> {
        match (&self.value, &*self.field) {
            (Value::Rat(a), _) => Ok(rat_sign(a)),
            (Value::Quad(a, b), FieldDescriptor::QuadExt { d }) if *d > 0 => {
                let (sa, sb) = (rat_sign(a), rat_sign(b));
                Ok(match (sa, sb) {
                    (Ordering::Equal, s) | (s, Ordering::Equal) => s,
                    (x, y) if x == y => x,
                    _ => {
                        // opposite signs: compare a^2 with b^2 d
                        let lhs = a * a;
                        let rhs = b * b * BigRational::from_integer(BigInt::from(*d));
                        match lhs.cmp(&rhs) {
                            Ordering::Equal => Ordering::Equal,
                            Ordering::Greater => sa,
                            Ordering::Less => sb,
                        }
                    }
                })
            }
            _ => Err(Error::UnorderedField),
        }
    }

    /// Comparison under the real ordering.
    pub fn ordered_cmp(&self, other: &Self) -> Result<Ordering> {
        self.try_sub(other)?.sign()
    }

    /// Deterministic total order used to sort printable output: rationals by
    /// (numerator, denominator), quadratic elements by (a, b), residues by
    /// representative, extension elements by their enumeration index.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        fn rat_key(q: &BigRational) -> (&BigInt, &BigInt) {
            (q.numer(), q.denom())
        }
        match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => rat_key(a).cmp(&rat_key(b)),
            (Value::Quad(a, b), Value::Quad(c, d)) => {
                (rat_key(a), rat_key(b)).cmp(&(rat_key(c), rat_key(d)))
            }
            (Value::Residue(a), Value::Residue(b)) => a.cmp(b),
            (Value::Ext(a), Value::Ext(b)) => a.iter().rev().cmp(b.iter().rev()),
            _ => Ordering::Equal,
        }
    }

    /// True when the printed form needs parentheses as a polynomial
    /// coefficient.
    pub(crate) fn is_compound(&self) -> bool {
        match &self.value {
            Value::Quad(_, b) => !b.is_zero(),
            Value::Ext(c) => c[1..].iter().any(|&x| x != 0),
            _ => false,
        }
    }

    /// True when the element prints with a leading minus sign.
    pub(crate) fn is_negative_literal(&self) -> bool {
        match &self.value {
            Value::Rat(q) => q.is_negative(),
            Value::Quad(a, b) => a.is_negative() || (a.is_zero() && b.is_negative()),
            _ => false,
        }
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.value, &*self.field) {
            (Value::Rat(q), _) => write!(f, "{}", fmt_rational(q)),
            (Value::Quad(a, b), FieldDescriptor::QuadExt { d }) => {
                if b.is_zero() {
                    write!(f, "{}", fmt_rational(a))
                } else {
                    let sign = if b.is_negative() { '-' } else { '+' };
                    write!(f, "{}{}{}*sqrt({})", fmt_rational(a), sign, fmt_rational(&b.abs()), d)
                }
            }
            (Value::Residue(r), _) => write!(f, "{r}"),
            (Value::Ext(c), _) => write!(f, "{}", arith::format_zp_poly(c, 't')),
            _ => unreachable!("payload always matches descriptor"),
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("field operation on mismatched or invalid operands")
            }
        }
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, checked_div);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(self)
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement::neg(&self)
    }
}

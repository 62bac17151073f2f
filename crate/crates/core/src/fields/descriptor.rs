use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::arith;
use super::element::{FieldElement, Value};
use crate::error::{Error, Result};

/// Largest finite field (by element count) accepted unless a caller raises
/// the cap explicitly.
pub const DEFAULT_MAX_FIELD_SIZE: u64 = 4096;

/// A concrete computable field.
///
/// `ExtField` stores its modulus lowest degree first and always monic; two
/// descriptors are equal iff they are structurally identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldDescriptor {
    Rational,
    QuadExt { d: i64 },
    PrimeField { p: u64 },
    ExtField { p: u64, modulus: Vec<u64> },
}

impl FieldDescriptor {
    pub fn quad_ext(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !arith::is_squarefree(d) {
            return Err(Error::UnsupportedField(format!(
                "Q(sqrt {d}) needs a squarefree d other than 0 and 1"
            )));
        }
        Ok(FieldDescriptor::QuadExt { d })
    }

    pub fn prime_field(p: u64) -> Result<Self> {
        Self::prime_field_capped(p, DEFAULT_MAX_FIELD_SIZE)
    }

    pub fn prime_field_capped(p: u64, cap: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::UnsupportedField(format!("{p} is not prime")));
        }
        if p > cap {
            return Err(Error::FieldTooLarge { size: p, cap });
        }
        Ok(FieldDescriptor::PrimeField { p })
    }

    pub fn ext_field(p: u64, modulus: Vec<u64>) -> Result<Self> {
        Self::ext_field_capped(p, modulus, DEFAULT_MAX_FIELD_SIZE)
    }

    /// Builds GF(p^k) from a modulus given lowest degree first. The modulus
    /// is reduced mod p, made monic, and must pass the exhaustive
    /// irreducibility test.
    pub fn ext_field_capped(p: u64, modulus: Vec<u64>, cap: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::UnsupportedField(format!("{p} is not prime")));
        }
        let mut m: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        while m.last() == Some(&0) {
            m.pop();
        }
        if m.len() < 3 {
            return Err(Error::UnsupportedField(
                "extension modulus must have degree at least 2".into(),
            ));
        }
        let k = (m.len() - 1) as u32;
        let size = p.checked_pow(k).filter(|s| *s <= cap);
        let Some(_) = size else {
            return Err(Error::FieldTooLarge {
                size: p.saturating_pow(k),
                cap,
            });
        };
        let lc_inv = arith::mod_inv(*m.last().unwrap(), p);
        for c in m.iter_mut() {
            *c = *c * lc_inv % p;
        }
        let prime = Field::new(FieldDescriptor::PrimeField { p });
        let coeffs = m.iter().map(|&c| prime.from_u64(c)).collect();
        if !crate::poly::Poly::new(&prime, coeffs).is_irreducible_exhaustive() {
            return Err(Error::UnsupportedField(format!(
                "modulus {} is reducible over GF({p})",
                arith::format_zp_poly(&m, 'x')
            )));
        }
        Ok(FieldDescriptor::ExtField { p, modulus: m })
    }

    /// 0 for characteristic-zero fields, otherwise the prime p.
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rational | FieldDescriptor::QuadExt { .. } => 0,
            FieldDescriptor::PrimeField { p } | FieldDescriptor::ExtField { p, .. } => *p,
        }
    }

    /// Number of elements for finite fields.
    pub fn order(&self) -> Option<u64> {
        match self {
            FieldDescriptor::Rational | FieldDescriptor::QuadExt { .. } => None,
            FieldDescriptor::PrimeField { p } => Some(*p),
            FieldDescriptor::ExtField { p, modulus } => Some(p.pow(modulus.len() as u32 - 1)),
        }
    }

    /// Degree over the prime subfield.
    pub fn degree(&self) -> usize {
        match self {
            FieldDescriptor::Rational | FieldDescriptor::PrimeField { .. } => 1,
            FieldDescriptor::QuadExt { .. } => 2,
            FieldDescriptor::ExtField { modulus, .. } => modulus.len() - 1,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.characteristic() != 0
    }

    /// A prime field has no proper subfield.
    pub fn is_prime_field(&self) -> bool {
        matches!(
            self,
            FieldDescriptor::Rational | FieldDescriptor::PrimeField { .. }
        )
    }

    /// Fields carrying an ordering usable for inner products: ℚ and real
    /// quadratic extensions.
    pub fn is_ordered(&self) -> bool {
        match self {
            FieldDescriptor::Rational => true,
            FieldDescriptor::QuadExt { d } => *d > 0,
            _ => false,
        }
    }
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rational => write!(f, "Q"),
            FieldDescriptor::QuadExt { d } => write!(f, "Q(sqrt {d})"),
            FieldDescriptor::PrimeField { p } => write!(f, "GF({p})"),
            FieldDescriptor::ExtField { p, modulus } => write!(
                f,
                "GF({p}^{}; {})",
                modulus.len() - 1,
                arith::format_zp_poly(modulus, 'x')
            ),
        }
    }
}

/// Shared handle to a field descriptor. Every element, polynomial and
/// matrix carries one.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Field(Arc<FieldDescriptor>);

impl Deref for Field {
    type Target = FieldDescriptor;

    fn deref(&self) -> &FieldDescriptor {
        &self.0
    }
}

impl From<FieldDescriptor> for Field {
    fn from(d: FieldDescriptor) -> Self {
        Field::new(d)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Field {
    pub fn new(d: FieldDescriptor) -> Self {
        Field(Arc::new(d))
    }

    pub fn rational() -> Self {
        Field::new(FieldDescriptor::Rational)
    }

    pub fn quad_ext(d: i64) -> Result<Self> {
        FieldDescriptor::quad_ext(d).map(Field::new)
    }

    pub fn prime(p: u64) -> Result<Self> {
        FieldDescriptor::prime_field(p).map(Field::new)
    }

    pub fn ext(p: u64, modulus: Vec<u64>) -> Result<Self> {
        FieldDescriptor::ext_field(p, modulus).map(Field::new)
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.0
    }

    pub(crate) fn wrap(&self, value: Value) -> FieldElement {
        FieldElement::from_parts(self.clone(), value)
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_u64(&self, n: u64) -> FieldElement {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        let value = match &*self.0 {
            FieldDescriptor::Rational => Value::Rat(BigRational::from_integer(n.clone())),
            FieldDescriptor::QuadExt { .. } => {
                Value::Quad(BigRational::from_integer(n.clone()), BigRational::zero())
            }
            FieldDescriptor::PrimeField { p } => Value::Residue(arith::reduce_bigint(n, *p)),
            FieldDescriptor::ExtField { p, modulus } => {
                let mut c = vec![0; modulus.len() - 1];
                c[0] = arith::reduce_bigint(n, *p);
                Value::Ext(c)
            }
        };
        self.wrap(value)
    }

    /// Maps a rational number into the field. Fails in positive
    /// characteristic when the denominator vanishes.
    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement> {
        match &*self.0 {
            FieldDescriptor::Rational => Ok(self.wrap(Value::Rat(q.clone()))),
            FieldDescriptor::QuadExt { .. } => {
                Ok(self.wrap(Value::Quad(q.clone(), BigRational::zero())))
            }
            _ => {
                let num = self.from_bigint(q.numer());
                let den = self.from_bigint(q.denom());
                num.checked_div(&den)
            }
        }
    }

    /// a + b√d in a quadratic extension.
    pub fn quad(&self, a: BigRational, b: BigRational) -> Result<FieldElement> {
        match &*self.0 {
            FieldDescriptor::QuadExt { .. } => Ok(self.wrap(Value::Quad(a, b))),
            _ => Err(Error::DescriptorMismatch),
        }
    }

    /// Element of GF(p^k) from its coefficients in the generator t, lowest
    /// degree first.
    pub fn ext_element(&self, coeffs: &[i64]) -> Result<FieldElement> {
        match &*self.0 {
            FieldDescriptor::ExtField { p, modulus } => {
                let k = modulus.len() - 1;
                let mut full = vec![0u64; coeffs.len().max(k)];
                for (slot, &c) in full.iter_mut().zip(coeffs) {
                    *slot = c.rem_euclid(*p as i64) as u64;
                }
                Ok(self.wrap(Value::Ext(arith::ext_reduce(full, modulus, *p))))
            }
            _ => Err(Error::DescriptorMismatch),
        }
    }

    /// The generator t of GF(p^k), or √d in ℚ(√d).
    pub fn generator(&self) -> Option<FieldElement> {
        match &*self.0 {
            FieldDescriptor::QuadExt { .. } => {
                Some(self.wrap(Value::Quad(BigRational::zero(), BigRational::one())))
            }
            FieldDescriptor::ExtField { .. } => self.ext_element(&[0, 1]).ok(),
            _ => None,
        }
    }

    /// The i-th element of a finite field in enumeration order (base-p
    /// digits of i are the coefficients). Used by exhaustive searches.
    pub fn element_at(&self, index: u64) -> Option<FieldElement> {
        match &*self.0 {
            FieldDescriptor::PrimeField { p } if index < *p => {
                Some(self.wrap(Value::Residue(index)))
            }
            FieldDescriptor::ExtField { p, modulus } => {
                let k = modulus.len() - 1;
                if index >= p.pow(k as u32) {
                    return None;
                }
                let mut rest = index;
                let digits = (0..k)
                    .map(|_| {
                        let d = rest % p;
                        rest /= p;
                        d
                    })
                    .collect();
                Some(self.wrap(Value::Ext(digits)))
            }
            _ => None,
        }
    }

    /// All elements of a finite field, in enumeration order.
    pub fn elements(&self) -> Option<Vec<FieldElement>> {
        let q = self.order()?;
        Some((0..q).filter_map(|i| self.element_at(i)).collect())
    }

    /// A pseudo-random element. Characteristic-zero fields draw small
    /// numerators in [-spread, spread] and denominators in [1, 3].
    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R, spread: i64) -> FieldElement {
        let small_rat = |rng: &mut R| {
            let n = rng.gen_range(-spread..=spread);
            let d = rng.gen_range(1..=3);
            BigRational::new(BigInt::from(n), BigInt::from(d))
        };
        match &*self.0 {
            FieldDescriptor::Rational => self.wrap(Value::Rat(small_rat(rng))),
            FieldDescriptor::QuadExt { .. } => {
                let a = small_rat(rng);
                let b = if rng.gen_bool(0.5) {
                    small_rat(rng)
                } else {
                    BigRational::zero()
                };
                self.wrap(Value::Quad(a, b))
            }
            _ => {
                let q = self.order().unwrap();
                self.element_at(rng.gen_range(0..q)).unwrap()
            }
        }
    }

    /// Nonzero pseudo-random element.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R, spread: i64) -> FieldElement {
        loop {
            let e = self.random(rng, spread);
            if !e.is_zero() {
                return e;
            }
        }
    }
}

pub(crate) fn rat_sign(q: &BigRational) -> std::cmp::Ordering {
    if q.is_positive() {
        std::cmp::Ordering::Greater
    } else if q.is_negative() {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Equal
    }
}

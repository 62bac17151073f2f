//! Componentwise tuples of polynomials.

use std::fmt;

use super::Poly;
use crate::error::{Error, Result};
use crate::fields::{NField, NScalar};

#[derive(Clone, Debug, PartialEq)]
pub struct NPoly {
    nfield: NField,
    components: Vec<Poly>,
}

impl NPoly {
    pub fn new(nfield: &NField, components: Vec<Poly>) -> Result<Self> {
        if components.len() != nfield.arity() {
            return Err(Error::ShapeMismatch(format!(
                "{} polynomials for a {}-field",
                components.len(),
                nfield.arity()
            )));
        }
        if components
            .iter()
            .zip(nfield.components())
            .any(|(p, f)| p.field() != f)
        {
            return Err(Error::DescriptorMismatch);
        }
        Ok(NPoly {
            nfield: nfield.clone(),
            components: components.to_vec(),
        })
    }

    pub fn nfield(&self) -> &NField {
        &self.nfield
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.components[i]
    }

    /// The n-degree; `None` marks a zero component.
    pub fn degrees(&self) -> Vec<Option<usize>> {
        self.components.iter().map(Poly::degree).collect()
    }

    pub fn is_monic(&self) -> bool {
        self.components.iter().all(Poly::is_monic)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&Poly, &Poly) -> Result<Poly>) -> Result<Self> {
        if self.nfield != other.nfield {
            return Err(Error::DescriptorMismatch);
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(NPoly {
            nfield: self.nfield.clone(),
            components,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Poly::try_add)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Poly::try_sub)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, Poly::try_mul)
    }

    pub fn scale(&self, c: &NScalar) -> Result<Self> {
        if c.nfield() != &self.nfield {
            return Err(Error::DescriptorMismatch);
        }
        Ok(NPoly {
            nfield: self.nfield.clone(),
            components: self
                .components
                .iter()
                .zip(c.entries())
                .map(|(p, c)| p.scale(c))
                .collect(),
        })
    }

    pub fn divmod(&self, d: &Self) -> Result<(Self, Self)> {
        let q = self.zip_with(d, |a, b| Ok(a.divmod(b)?.0))?;
        let r = self.zip_with(d, |a, b| Ok(a.divmod(b)?.1))?;
        Ok((q, r))
    }

    /// Componentwise monic gcd with Bezout cofactors.
    pub fn gcd_bezout(&self, other: &Self) -> Result<(Self, Self, Self)> {
        let triples = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.gcd_bezout(b))
            .collect::<Result<Vec<_>>>()?;
        let build = |pick: fn(&(Poly, Poly, Poly)) -> Poly| NPoly {
            nfield: self.nfield.clone(),
            components: triples.iter().map(pick).collect(),
        };
        Ok((
            build(|t| t.0.clone()),
            build(|t| t.1.clone()),
            build(|t| t.2.clone()),
        ))
    }

    pub fn eval(&self, c: &NScalar) -> Result<NScalar> {
        if c.nfield() != &self.nfield {
            return Err(Error::DescriptorMismatch);
        }
        NScalar::new(
            &self.nfield,
            self.components
                .iter()
                .zip(c.entries())
                .map(|(p, c)| p.eval(c))
                .collect(),
        )
    }
}

impl fmt::Display for NPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

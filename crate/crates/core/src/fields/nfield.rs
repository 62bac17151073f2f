use std::fmt;

use super::descriptor::{Field, FieldDescriptor};
use super::element::FieldElement;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// True iff `sub` embeds in `sup` under the structural rules: ℚ ⊂ ℚ(√d),
/// GF(p) ⊂ GF(p^k), GF(p^a) ⊂ GF(p^b) when a | b, ℚ(√d₁) ⊂ ℚ(√d₂) only
/// for d₁ = d₂, every field in itself, and nothing across characteristics.
pub fn embeds(sub: &FieldDescriptor, sup: &FieldDescriptor) -> bool {
    use FieldDescriptor::*;
    if sub == sup {
        return true;
    }
    match (sub, sup) {
        (Rational, QuadExt { .. }) => true,
        (QuadExt { d: a }, QuadExt { d: b }) => a == b,
        (PrimeField { p }, PrimeField { p: q }) => p == q,
        (PrimeField { p }, ExtField { p: q, .. }) => p == q,
        (ExtField { p, modulus: m1 }, ExtField { p: q, modulus: m2 }) => {
            p == q && (m2.len() - 1) % (m1.len() - 1) == 0
        }
        _ => false,
    }
}

/// A validated tuple of n ≥ 2 pairwise non-embeddable fields. The only
/// constructor is [`NField::new`], so holding one is the validity witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NField {
    components: Vec<Field>,
}

impl NField {
    /// Accepts the tuple iff for every pair i ≠ j neither field embeds in
    /// the other. Component indices in errors are 1-based.
    pub fn new<I, F>(components: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: Into<Field>,
    {
        let components: Vec<Field> = components.into_iter().map(Into::into).collect();
        if components.len() < 2 {
            return Err(Error::ArityTooSmall(components.len()));
        }
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                if embeds(&components[i], &components[j]) || embeds(&components[j], &components[i]) {
                    return Err(Error::ContainmentViolation(i + 1, j + 1));
                }
            }
        }
        Ok(NField { components })
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Field] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Field {
        &self.components[i]
    }

    pub fn characteristic(&self) -> CharacteristicReport {
        classify_characteristic(&self.components)
    }

    pub fn primeness(&self) -> PrimenessReport {
        classify_primeness(&self.components)
    }
}

impl fmt::Display for NField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " ∪ ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Free function form of [`NField::new`].
pub fn validate_nfield(components: &[FieldDescriptor]) -> Result<NField> {
    NField::new(components.iter().cloned())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CharacteristicClass {
    Zero,
    Finite,
    Mixed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacteristicReport {
    pub class: CharacteristicClass,
    pub per_component: Vec<u64>,
}

pub fn classify_characteristic(components: &[Field]) -> CharacteristicReport {
    let per_component: Vec<u64> = components.iter().map(|f| f.characteristic()).collect();
    let zeros = per_component.iter().filter(|&&c| c == 0).count();
    let class = if zeros == per_component.len() {
        CharacteristicClass::Zero
    } else if zeros == 0 {
        CharacteristicClass::Finite
    } else {
        CharacteristicClass::Mixed
    };
    CharacteristicReport {
        class,
        per_component,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrimenessClass {
    Prime,
    Semiprime,
    NonPrime,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimenessReport {
    pub class: PrimenessClass,
    /// Proper subfields of each component, smallest first.
    pub proper_subfields: Vec<Vec<FieldDescriptor>>,
    /// Prime subfield of each non-prime component; `None` where the
    /// component is itself prime.
    pub prime_subfields: Vec<Option<FieldDescriptor>>,
    /// m for the quasi m-subfield of a semiprime n-field.
    pub quasi_m: Option<usize>,
}

/// Classifies a tuple of fields as prime, semiprime or non-prime and
/// extracts the tuple of prime subfields of its non-prime components.
///
/// Takes a plain slice so tuples that fail [`NField::new`] can still be
/// classified.
pub fn classify_primeness(components: &[Field]) -> PrimenessReport {
    let proper_subfields: Vec<Vec<FieldDescriptor>> =
        components.iter().map(|f| proper_subfields(f)).collect();
    let prime_subfields: Vec<Option<FieldDescriptor>> = components
        .iter()
        .map(|f| match &**f {
            FieldDescriptor::QuadExt { .. } => Some(FieldDescriptor::Rational),
            FieldDescriptor::ExtField { p, .. } => Some(FieldDescriptor::PrimeField { p: *p }),
            _ => None,
        })
        .collect();
    let primes = components.iter().filter(|f| f.is_prime_field()).count();
    let class = if primes == components.len() {
        PrimenessClass::Prime
    } else if primes == 0 {
        PrimenessClass::NonPrime
    } else {
        PrimenessClass::Semiprime
    };
    let quasi_m = (class == PrimenessClass::Semiprime).then(|| components.len() - primes);
    PrimenessReport {
        class,
        proper_subfields,
        prime_subfields,
        quasi_m,
    }
}

/// Proper subfields of a supported field. For GF(p^k) the intermediate
/// fields GF(p^e), e | k, are represented by the smallest monic irreducible
/// modulus of degree e in enumeration order.
pub fn proper_subfields(f: &FieldDescriptor) -> Vec<FieldDescriptor> {
    match f {
        FieldDescriptor::Rational | FieldDescriptor::PrimeField { .. } => vec![],
        FieldDescriptor::QuadExt { .. } => vec![FieldDescriptor::Rational],
        FieldDescriptor::ExtField { p, modulus } => {
            let k = modulus.len() - 1;
            let mut out = vec![FieldDescriptor::PrimeField { p: *p }];
            let prime = Field::new(FieldDescriptor::PrimeField { p: *p });
            for e in (2..k).filter(|e| k % e == 0) {
                if let Some(m) = Poly::monic_of_degree(&prime, e).find(|g| g.is_irreducible_exhaustive()) {
                    let coeffs = m.coeffs().iter().map(|c| c.residue().unwrap()).collect();
                    out.push(FieldDescriptor::ExtField { p: *p, modulus: coeffs });
                }
            }
            out
        }
    }
}

/// One element per component of an n-field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NScalar {
    nfield: NField,
    entries: Vec<FieldElement>,
}

impl NScalar {
    pub fn new(nfield: &NField, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.len() != nfield.arity() {
            return Err(Error::ShapeMismatch(format!(
                "expected {} components, got {}",
                nfield.arity(),
                entries.len()
            )));
        }
        if entries.iter().zip(nfield.components()).any(|(e, f)| e.field() != f) {
            return Err(Error::DescriptorMismatch);
        }
        Ok(NScalar {
            nfield: nfield.clone(),
            entries,
        })
    }

    pub fn nfield(&self) -> &NField {
        &self.nfield
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.entries
    }

    pub fn component(&self, i: usize) -> &FieldElement {
        &self.entries[i]
    }
}

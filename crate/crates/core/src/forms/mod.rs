//! Inner products over ordered fields, spectral resolution and bilinear
//! forms.

mod bilinear;
mod inner;
mod spectral;

pub use bilinear::{signature, BilinearForm, Signature, SymmetricDiagonalization};
pub use inner::{is_orthogonal_matrix, InnerProductSpace};
pub use spectral::{spectral_function, spectral_resolution, SpectralResolution};

use crate::error::{Error, Result};
use crate::fields::{NField, NScalar};
use crate::linalg::{NSubspace, NVector, Vector};

/// One inner-product space per component.
#[derive(Clone, Debug, PartialEq)]
pub struct NInnerProductSpace {
    nfield: NField,
    components: Vec<InnerProductSpace>,
}

impl NInnerProductSpace {
    pub fn new(nfield: &NField, components: Vec<InnerProductSpace>) -> Result<Self> {
        if components.len() != nfield.arity() {
            return Err(Error::ShapeMismatch(format!(
                "{} spaces for a {}-field",
                components.len(),
                nfield.arity()
            )));
        }
        if components.iter().zip(nfield.components()).any(|(s, f)| s.field() != f) {
            return Err(Error::DescriptorMismatch);
        }
        Ok(NInnerProductSpace {
            nfield: nfield.clone(),
            components: components.to_vec(),
        })
    }

    pub fn standard(nfield: &NField, dims: &[usize]) -> Result<Self> {
        let comps = nfield
            .components()
            .iter()
            .zip(dims)
            .map(|(f, &n)| InnerProductSpace::standard(f, n))
            .collect::<Result<_>>()?;
        NInnerProductSpace::new(nfield, comps)
    }

    pub fn components(&self) -> &[InnerProductSpace] {
        &self.components
    }

    pub fn inner(&self, alpha: &NVector, beta: &NVector) -> Result<NScalar> {
        let entries = self
            .components
            .iter()
            .zip(alpha.components().iter().zip(beta.components()))
            .map(|(s, (a, b))| s.inner(a, b))
            .collect::<Result<_>>()?;
        NScalar::new(&self.nfield, entries)
    }

    /// Gram–Schmidt per component; `vectors[i]` holds component i's input.
    pub fn gram_schmidt(&self, vectors: &[Vec<Vector>]) -> Result<Vec<Vec<Vector>>> {
        self.components
            .iter()
            .zip(vectors)
            .map(|(s, vs)| s.gram_schmidt(vs))
            .collect()
    }

    pub fn best_approx(&self, beta: &NVector, w: &NSubspace) -> Result<NVector> {
        let comps = self
            .components
            .iter()
            .zip(beta.components().iter().zip(w.components()))
            .map(|(s, (b, sub))| s.best_approx(b, sub))
            .collect::<Result<_>>()?;
        NVector::new(&self.nfield, comps)
    }

    pub fn orth_complement(&self, w: &NSubspace) -> Result<NSubspace> {
        let comps = self
            .components
            .iter()
            .zip(w.components())
            .map(|(s, sub)| s.orth_complement(sub))
            .collect::<Result<_>>()?;
        NSubspace::new(&self.nfield, comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Field;

    #[test]
    fn componentwise_inner_products() {
        let nf = NField::new([Field::quad_ext(3).unwrap(), Field::quad_ext(2).unwrap()]).unwrap();
        let s = NInnerProductSpace::standard(&nf, &[2, 1]).unwrap();
        let a = NVector::new(
            &nf,
            vec![
                vec![nf.component(0).from_i64(1), nf.component(0).from_i64(2)],
                vec![nf.component(1).from_i64(3)],
            ],
        )
        .unwrap();
        let ip = s.inner(&a, &a).unwrap();
        assert_eq!(ip.component(0), &nf.component(0).from_i64(5));
        assert_eq!(ip.component(1), &nf.component(1).from_i64(9));
        let mixed = NField::new([Field::rational(), Field::prime(5).unwrap()]).unwrap();
        assert!(matches!(NInnerProductSpace::standard(&mixed, &[1, 1]), Err(Error::UnorderedField)));
    }
}

//! Componentwise tuples: n-matrices, n-vectors, n-subspaces, n-functionals
//! and n-linear transformations.

use std::fmt;

use crate::error::{Error, Result};
use crate::fields::{FieldElement, NField, NScalar};

use super::space::{self, Subspace, Transform, Vector};
use super::Matrix;

fn check_arity<T>(nfield: &NField, items: &[T]) -> Result<()> {
    if items.len() == nfield.arity() {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!(
            "{} components for a {}-field",
            items.len(),
            nfield.arity()
        )))
    }
}

fn join<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            write!(f, " ∪ ")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct NMatrix {
    nfield: NField,
    components: Vec<Matrix>,
}

impl NMatrix {
    pub fn new(nfield: &NField, components: Vec<Matrix>) -> Result<Self> {
        check_arity(nfield, &components)?;
        if components.iter().zip(nfield.components()).any(|(m, f)| m.field() != f) {
            return Err(Error::DescriptorMismatch);
        }
        Ok(NMatrix {
            nfield: nfield.clone(),
            components,
        })
    }

    pub fn identity(nfield: &NField, dims: &[usize]) -> Self {
        NMatrix {
            nfield: nfield.clone(),
            components: nfield
                .components()
                .iter()
                .zip(dims)
                .map(|(f, &n)| Matrix::identity(f, n))
                .collect(),
        }
    }

    pub fn nfield(&self) -> &NField {
        &self.nfield
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Matrix {
        &self.components[i]
    }

    pub fn shapes(&self) -> Vec<(usize, usize)> {
        self.components.iter().map(|m| (m.nrows(), m.ncols())).collect()
    }

    pub fn map(&self, f: impl Fn(&Matrix) -> Matrix) -> NMatrix {
        NMatrix {
            nfield: self.nfield.clone(),
            components: self.components.iter().map(f).collect(),
        }
    }

    pub fn try_map(&self, f: impl Fn(&Matrix) -> Result<Matrix>) -> Result<NMatrix> {
        Ok(NMatrix {
            nfield: self.nfield.clone(),
            components: self.components.iter().map(f).collect::<Result<_>>()?,
        })
    }

    fn zip(&self, other: &Self, f: impl Fn(&Matrix, &Matrix) -> Result<Matrix>) -> Result<NMatrix> {
        if self.nfield != other.nfield {
            return Err(Error::FieldMismatch);
        }
        Ok(NMatrix {
            nfield: self.nfield.clone(),
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| f(a, b))
                .collect::<Result<_>>()?,
        })
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.zip(other, Matrix::try_add)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, Matrix::try_sub)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, Matrix::try_mul)
    }

    pub fn transpose(&self) -> Self {
        self.map(Matrix::transpose)
    }

    pub fn inverse(&self) -> Result<Self> {
        self.try_map(Matrix::inverse)
    }

    pub fn det(&self) -> Result<NScalar> {
        let entries = self.components.iter().map(Matrix::det).collect::<Result<_>>()?;
        NScalar::new(&self.nfield, entries)
    }

    pub fn ranks(&self) -> Vec<usize> {
        self.components.iter().map(Matrix::rank).collect()
    }

    pub fn nullspace(&self) -> NSubspace {
        NSubspace {
            nfield: self.nfield.clone(),
            components: self
                .components
                .iter()
                .map(|m| Subspace::column_span(&m.nullspace()))
                .collect(),
        }
    }

    pub fn rref(&self) -> (NMatrix, Vec<Vec<usize>>) {
        let (ms, ps) = self.components.iter().map(Matrix::rref).unzip();
        (
            NMatrix {
                nfield: self.nfield.clone(),
                components: ms,
            },
            ps,
        )
    }
}

impl fmt::Display for NMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        join(f, &self.components)
    }
}

/// Coordinate columns, one per component.
#[derive(Clone, Debug, PartialEq)]
pub struct NVector {
    nfield: NField,
    components: Vec<Vector>,
}

impl NVector {
    pub fn new(nfield: &NField, components: Vec<Vector>) -> Result<Self> {
        check_arity(nfield, &components)?;
        if components
            .iter()
            .zip(nfield.components())
            .any(|(v, f)| v.iter().any(|x| x.field() != f))
        {
            return Err(Error::DescriptorMismatch);
        }
        Ok(NVector {
            nfield: nfield.clone(),
            components,
        })
    }

    pub fn zero(nfield: &NField, dims: &[usize]) -> Self {
        NVector {
            nfield: nfield.clone(),
            components: nfield
                .components()
                .iter()
                .zip(dims)
                .map(|(f, &n)| vec![f.zero(); n])
                .collect(),
        }
    }

    pub fn nfield(&self) -> &NField {
        &self.nfield
    }

    pub fn components(&self) -> &[Vector] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Vector {
        &self.components[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Vec::len).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().flatten().all(FieldElement::is_zero)
    }

    pub fn apply(&self, a: &NMatrix) -> Result<NVector> {
        if a.nfield() != &self.nfield {
            return Err(Error::FieldMismatch);
        }
        Ok(NVector {
            nfield: self.nfield.clone(),
            components: a
                .components()
                .iter()
                .zip(&self.components)
                .map(|(m, v)| m.mul_vec(v))
                .collect::<Result<_>>()?,
        })
    }
}

impl fmt::Display for NVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|v| {
                let items: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("({})", items.join(", "))
            })
            .collect();
        join(f, &parts)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NSubspace {
    nfield: NField,
    components: Vec<Subspace>,
}

impl NSubspace {
    pub fn new(nfield: &NField, components: Vec<Subspace>) -> Result<Self> {
        check_arity(nfield, &components)?;
        if components.iter().zip(nfield.components()).any(|(s, f)| s.field() != f) {
            return Err(Error::DescriptorMismatch);
        }
        Ok(NSubspace {
            nfield: nfield.clone(),
            components,
        })
    }

    /// Span of an n-set of n-vectors in an ambient space of the given
    /// dimensions.
    pub fn span(nfield: &NField, dims: &[usize], vectors: &[NVector]) -> Result<Self> {
        let components = (0..nfield.arity())
            .map(|i| {
                let vs: Vec<Vector> = vectors.iter().map(|v| v.component(i).clone()).collect();
                Subspace::span(nfield.component(i), dims[i], &vs)
            })
            .collect::<Result<_>>()?;
        Ok(NSubspace {
            nfield: nfield.clone(),
            components,
        })
    }

    pub fn zero(nfield: &NField, dims: &[usize]) -> Self {
        NSubspace {
            nfield: nfield.clone(),
            components: nfield
                .components()
                .iter()
                .zip(dims)
                .map(|(f, &n)| Subspace::zero(f, n))
                .collect(),
        }
    }

    pub fn nfield(&self) -> &NField {
        &self.nfield
    }

    pub fn components(&self) -> &[Subspace] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Subspace {
        &self.components[i]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.components.iter().map(Subspace::dim).collect()
    }

    fn zip<T>(&self, other: &Self, f: impl Fn(&Subspace, &Subspace) -> Result<T>) -> Result<Vec<T>> {
        if self.nfield != other.nfield {
            return Err(Error::AmbientMismatch);
        }
        self.components.iter().zip(&other.components).map(|(a, b)| f(a, b)).collect()
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        Ok(NSubspace {
            nfield: self.nfield.clone(),
            components: self.zip(other, Subspace::sum)?,
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        Ok(NSubspace {
            nfield: self.nfield.clone(),
            components: self.zip(other, Subspace::intersection)?,
        })
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        Ok(self.zip(other, Subspace::contains)?.into_iter().all(|b| b))
    }

    pub fn contains_vector(&self, v: &NVector) -> bool {
        self.components
            .iter()
            .zip(v.components())
            .all(|(s, x)| s.contains_vector(x))
    }

    /// S° componentwise.
    pub fn annihilator(&self) -> NSubspace {
        NSubspace {
            nfield: self.nfield.clone(),
            components: self.components.iter().map(space::annihilator).collect(),
        }
    }
}

/// Coordinate rows relative to the standard dual basis.
#[derive(Clone, Debug, PartialEq)]
pub struct NFunctional {
    nfield: NField,
    components: Vec<Vector>,
}

impl NFunctional {
    pub fn new(nfield: &NField, components: Vec<Vector>) -> Result<Self> {
        let v = NVector::new(nfield, components)?;
        Ok(NFunctional {
            nfield: v.nfield,
            components: v.components,
        })
    }

    pub fn components(&self) -> &[Vector] {
        &self.components
    }

    pub fn evaluate(&self, alpha: &NVector) -> Result<NScalar> {
        let entries = self
            .components
            .iter()
            .zip(alpha.components())
            .map(|(g, a)| space::evaluate_functional(g, a))
            .collect::<Result<_>>()?;
        NScalar::new(&self.nfield, entries)
    }

    /// Per component, coefficients c with g = Σ c_i f_i, or `None` where g
    /// is outside the span.
    pub fn dependence(&self, fs: &[NFunctional]) -> Result<Vec<Option<Vector>>> {
        (0..self.nfield.arity())
            .map(|i| {
                let rows: Vec<Vector> = fs.iter().map(|f| f.components[i].clone()).collect();
                space::functional_dependence(&self.components[i], &rows)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Independence {
    Independent,
    /// Every component dependent; one combining tuple per component.
    Dependent(Vec<Vector>),
    /// Verdicts differ across components; `None` marks an independent one.
    SemiDependent(Vec<Option<Vector>>),
}

pub fn linear_independence(nfield: &NField, dims: &[usize], vectors: &[NVector]) -> Result<Independence> {
    let witnesses = (0..nfield.arity())
        .map(|i| {
            let vs: Vec<Vector> = vectors.iter().map(|v| v.component(i).clone()).collect();
            space::dependency(nfield.component(i), dims[i], &vs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(if witnesses.iter().all(Option::is_none) {
        Independence::Independent
    } else if witnesses.iter().all(Option::is_some) {
        Independence::Dependent(witnesses.into_iter().flatten().collect())
    } else {
        Independence::SemiDependent(witnesses)
    })
}

/// T = T₁ ∪ … ∪ T_n with every T_i over the i-th field.
#[derive(Clone, Debug, PartialEq)]
pub struct NTransform {
    nfield: NField,
    components: Vec<Transform>,
}

impl NTransform {
    pub fn new(nfield: &NField, components: Vec<Transform>) -> Result<Self> {
        check_arity(nfield, &components)?;
        if components.iter().zip(nfield.components()).any(|(t, f)| t.field() != f) {
            return Err(Error::FieldMismatch);
        }
        Ok(NTransform {
            nfield: nfield.clone(),
            components,
        })
    }

    pub fn standard(a: &NMatrix) -> Self {
        NTransform {
            nfield: a.nfield().clone(),
            components: a.components().iter().cloned().map(Transform::standard).collect(),
        }
    }

    pub fn components(&self) -> &[Transform] {
        &self.components
    }

    pub fn apply(&self, alpha: &NVector) -> Result<NVector> {
        if alpha.nfield() != &self.nfield {
            return Err(Error::FieldMismatch);
        }
        let comps = self
            .components
            .iter()
            .zip(alpha.components())
            .map(|(t, a)| t.apply(a))
            .collect::<Result<_>>()?;
        NVector::new(&self.nfield, comps)
    }

    pub fn compose(&self, inner: &NTransform) -> Result<NTransform> {
        if self.nfield != inner.nfield {
            return Err(Error::FieldMismatch);
        }
        Ok(NTransform {
            nfield: self.nfield.clone(),
            components: self
                .components
                .iter()
                .zip(&inner.components)
                .map(|(a, b)| a.compose(b))
                .collect::<Result<_>>()?,
        })
    }

    /// (rank, nullity) per component.
    pub fn rank_nullity(&self) -> Vec<(usize, usize)> {
        self.components.iter().map(|t| (t.rank(), t.nullity())).collect()
    }

    pub fn is_invertible(&self) -> bool {
        self.components.iter().all(Transform::is_invertible)
    }

    pub fn inverse(&self) -> Result<NTransform> {
        Ok(NTransform {
            nfield: self.nfield.clone(),
            components: self.components.iter().map(Transform::inverse).collect::<Result<_>>()?,
        })
    }

    pub fn transpose_map(&self) -> NTransform {
        NTransform {
            nfield: self.nfield.clone(),
            components: self.components.iter().map(Transform::transpose_map).collect(),
        }
    }
}

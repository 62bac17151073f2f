//! Subspaces, coordinates, linear maps and duals over one field. The n-fold
//! wrappers in `nspace` apply these componentwise.

use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement};

use super::Matrix;

pub type Vector = Vec<FieldElement>;

/// A subspace of F^n stored by a basis in reduced column-echelon form, so
/// equal subspaces have equal bases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
}

impl Subspace {
    /// Span of the columns of `m`.
    pub fn column_span(m: &Matrix) -> Self {
        let (r, pivots) = m.transpose().rref();
        let basis = r.submatrix(0..pivots.len(), 0..r.ncols()).transpose();
        Subspace { basis }
    }

    pub fn span(field: &Field, ambient: usize, vectors: &[Vector]) -> Result<Self> {
        Ok(Subspace::column_span(&Matrix::from_columns(field, ambient, vectors)?))
    }

    pub fn zero(field: &Field, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::zero(field, ambient, 0),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, ambient),
        }
    }

    pub fn field(&self) -> &Field {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    /// Canonical basis as matrix columns.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vector> {
        self.basis.columns()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field() != other.field() || self.ambient_dim() != other.ambient_dim() {
            Err(Error::AmbientMismatch)
        } else {
            Ok(())
        }
    }

    pub fn contains_vector(&self, v: &[FieldElement]) -> bool {
        v.len() == self.ambient_dim() && matches!(self.basis.solve(v), Ok(Some(_)))
    }

    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.check(other)?;
        Ok(other.basis_vectors().iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Subspace::column_span(&self.basis.hstack(&other.basis)?))
    }

    /// W₁ ∩ W₂ from the null space of [B₁ | −B₂].
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let k = self.dim();
        let ns = self.basis.hstack(&other.basis.neg())?.nullspace();
        let coeffs = ns.submatrix(0..k, 0..ns.ncols());
        Ok(Subspace::column_span(&(&self.basis * &coeffs)))
    }

    /// The image of this subspace under a square matrix.
    pub fn image(&self, a: &Matrix) -> Result<Self> {
        Ok(Subspace::column_span(&a.try_mul(&self.basis)?))
    }

    /// True when A maps the subspace into itself.
    pub fn is_invariant(&self, a: &Matrix) -> Result<bool> {
        self.contains(&self.image(a)?)
    }
}

/// A dependency witness: coefficients c, not all zero, with Σ c_i v_i = 0.
/// `None` means the vectors are independent.
pub fn dependency(field: &Field, ambient: usize, vectors: &[Vector]) -> Result<Option<Vector>> {
    let m = Matrix::from_columns(field, ambient, vectors)?;
    let ns = m.nullspace();
    Ok((ns.ncols() > 0).then(|| ns.column(0)))
}

/// Columns of `basis` must form a basis of F^n.
fn require_basis(basis: &Matrix) -> Result<()> {
    if basis.is_square() && basis.is_invertible() {
        Ok(())
    } else {
        Err(Error::NotABasis)
    }
}

/// [α]_B: the unique c with B·c = α.
pub fn coordinates(alpha: &[FieldElement], basis: &Matrix) -> Result<Vector> {
    require_basis(basis)?;
    basis.solve(alpha)?.ok_or(Error::NotABasis)
}

/// Σ c_i β_i.
pub fn from_coordinates(coords: &[FieldElement], basis: &Matrix) -> Result<Vector> {
    basis.mul_vec(coords)
}

/// P with [α]_B = P[α]_C; column j of P is [γ_j]_B.
pub fn change_of_basis(b: &Matrix, c: &Matrix) -> Result<Matrix> {
    require_basis(b)?;
    require_basis(c)?;
    if b.nrows() != c.nrows() || b.field() != c.field() {
        return Err(Error::AmbientMismatch);
    }
    b.inverse()?.try_mul(c)
}

/// A linear map V → W over one field given by its matrix relative to an
/// input basis (columns of `basis_in`) and an output basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transform {
    matrix: Matrix,
    basis_in: Matrix,
    basis_out: Matrix,
}

impl Transform {
    pub fn new(matrix: Matrix, basis_in: Matrix, basis_out: Matrix) -> Result<Self> {
        require_basis(&basis_in)?;
        require_basis(&basis_out)?;
        if matrix.field() != basis_in.field() || matrix.field() != basis_out.field() {
            return Err(Error::FieldMismatch);
        }
        if matrix.ncols() != basis_in.nrows() || matrix.nrows() != basis_out.nrows() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} matrix for bases of sizes {} and {}",
                matrix.nrows(),
                matrix.ncols(),
                basis_in.nrows(),
                basis_out.nrows()
            )));
        }
        Ok(Transform {
            matrix,
            basis_in,
            basis_out,
        })
    }

    /// The map whose matrix is taken in the standard bases.
    pub fn standard(matrix: Matrix) -> Self {
        let f = matrix.field().clone();
        let (m, n) = (matrix.nrows(), matrix.ncols());
        Transform {
            matrix,
            basis_in: Matrix::identity(&f, n),
            basis_out: Matrix::identity(&f, m),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }

    pub fn domain_dim(&self) -> usize {
        self.matrix.ncols()
    }

    pub fn codomain_dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// Matrix of the map in standard coordinates: B_out · A · B_in⁻¹.
    pub fn standard_matrix(&self) -> Matrix {
        let inv = self.basis_in.inverse().expect("basis");
        &(&self.basis_out * &self.matrix) * &inv
    }

    /// Tα in standard coordinates: [Tα]_C = A[α]_B.
    pub fn apply(&self, alpha: &[FieldElement]) -> Result<Vector> {
        let coords = coordinates(alpha, &self.basis_in)?;
        from_coordinates(&self.matrix.mul_vec(&coords)?, &self.basis_out)
    }

    /// self ∘ inner. The matrix is relative to inner's input basis and
    /// self's output basis.
    pub fn compose(&self, inner: &Transform) -> Result<Transform> {
        if self.field() != inner.field() {
            return Err(Error::FieldMismatch);
        }
        if self.domain_dim() != inner.codomain_dim() {
            return Err(Error::ShapeMismatch("codomain of inner map differs from domain".into()));
        }
        let bridge = change_of_basis(&self.basis_in, &inner.basis_out)?;
        let matrix = &(&self.matrix * &bridge) * &inner.matrix;
        Transform::new(matrix, inner.basis_in.clone(), self.basis_out.clone())
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn nullity(&self) -> usize {
        self.domain_dim() - self.rank()
    }

    /// Range in standard coordinates.
    pub fn range(&self) -> Subspace {
        Subspace::column_span(&self.standard_matrix())
    }

    /// Null space in standard coordinates.
    pub fn kernel(&self) -> Subspace {
        Subspace::column_span(&self.standard_matrix().nullspace())
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }

    pub fn inverse(&self) -> Result<Transform> {
        Transform::new(self.matrix.inverse()?, self.basis_out.clone(), self.basis_in.clone())
    }

    /// T^t on functionals (as coordinate columns). Its matrix in the dual
    /// bases is Aᵀ; the dual basis of B is given by the columns of B⁻ᵀ.
    pub fn transpose_map(&self) -> Transform {
        let dual = |b: &Matrix| b.inverse().expect("basis").transpose();
        Transform {
            matrix: self.matrix.transpose(),
            basis_in: dual(&self.basis_out),
            basis_out: dual(&self.basis_in),
        }
    }
}

/// g(α) for a functional given by its coordinate row.
pub fn evaluate_functional(g: &[FieldElement], alpha: &[FieldElement]) -> Result<FieldElement> {
    if g.len() != alpha.len() {
        return Err(Error::ShapeMismatch("functional and vector lengths differ".into()));
    }
    let field = g.first().map(|x| x.field().clone());
    Ok(match field {
        None => return Err(Error::ShapeMismatch("zero-dimensional space".into())),
        Some(f) => g.iter().zip(alpha).fold(f.zero(), |acc, (a, b)| &acc + &(a * b)),
    })
}

/// S°: functionals vanishing on S, as a subspace of F^n (coordinate rows
/// written as columns).
pub fn annihilator(s: &Subspace) -> Subspace {
    Subspace::column_span(&s.basis().transpose().nullspace())
}

/// (S°)° brought back into V by the row/column identification.
pub fn double_annihilator(s: &Subspace) -> Subspace {
    annihilator(&annihilator(s))
}

/// Coefficients c with g = Σ c_i f_i, or `None` when g is outside the span.
pub fn functional_dependence(g: &[FieldElement], fs: &[Vector]) -> Result<Option<Vector>> {
    let n = g.len();
    let field = g.first().ok_or(Error::ShapeMismatch("zero-dimensional space".into()))?.field();
    let m = Matrix::from_columns(field, n, fs)?;
    m.solve(g)
}

/// Null-space criterion: g lies in span(fs) iff ∩ ker f_i ⊆ ker g.
pub fn kernel_criterion(g: &[FieldElement], fs: &[Vector]) -> Result<bool> {
    let n = g.len();
    let field = g.first().ok_or(Error::ShapeMismatch("zero-dimensional space".into()))?.field();
    let common = if fs.is_empty() {
        Subspace::full(field, n)
    } else {
        Subspace::column_span(&Matrix::from_columns(field, n, fs)?.transpose().nullspace())
    };
    Ok(common
        .basis_vectors()
        .iter()
        .all(|v| evaluate_functional(g, v).is_ok_and(|x| x.is_zero())))
}

//! Operator theory: characteristic and minimal polynomials, invariant
//! factors, rational and Jordan forms, primary and D+N decompositions.
//!
//! Free functions act on a single component [`Matrix`]; [`NOperator`]
//! lifts them componentwise.

mod canonical;
mod charmin;
mod decompose;
mod snf;

pub use canonical::{
    invariant_factors, jordan_block, jordan_form, rational_form, similar, split_linear, JordanBlock,
    JordanForm, RationalForm,
};
pub use charmin::{charpoly, minpoly, minpoly_by_powers, poly_apply, restrict};
pub use decompose::{
    annihilator_poly, commutes_with, conductor, cyclic_basis, diagonalize, direct_sum_projections,
    dn_decomposition, eigen, eigenspace, primary_decomposition, simultaneous_diagonalize,
    Diagonalization, DnDecomposition, Eigen, PrimaryComponent,
};
pub use snf::{characteristic_matrix, poly_matmul, smith_form, PolyMatrix, SmithForm};

use crate::error::{Error, Result};
use crate::fields::NField;
use crate::linalg::{Matrix, NMatrix, NSubspace, NVector};
use crate::poly::{NPoly, Poly};

/// A square n-matrix viewed as an n-linear operator.
#[derive(Clone, Debug, PartialEq)]
pub struct NOperator {
    matrix: NMatrix,
}

impl NOperator {
    pub fn new(matrix: NMatrix) -> Result<Self> {
        if let Some((i, (r, c))) = matrix.shapes().into_iter().enumerate().find(|(_, (r, c))| r != c) {
            return Err(Error::ShapeMismatch(format!(
                "component {} is {r}x{c}, operators need square matrices",
                i + 1
            )));
        }
        Ok(NOperator { matrix })
    }

    pub fn matrix(&self) -> &NMatrix {
        &self.matrix
    }

    pub fn nfield(&self) -> &NField {
        self.matrix.nfield()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.matrix.shapes().into_iter().map(|(r, _)| r).collect()
    }

    pub fn component(&self, i: usize) -> &Matrix {
        self.matrix.component(i)
    }

    fn each<T>(&self, f: impl Fn(&Matrix) -> Result<T>) -> Result<Vec<T>> {
        self.matrix.components().iter().map(f).collect()
    }

    fn npoly(&self, f: impl Fn(&Matrix) -> Result<Poly>) -> Result<NPoly> {
        NPoly::new(self.nfield(), self.each(f)?)
    }

    pub fn charpoly(&self) -> Result<NPoly> {
        self.npoly(charpoly)
    }

    pub fn minpoly(&self) -> Result<NPoly> {
        self.npoly(minpoly)
    }

    pub fn invariant_factors(&self) -> Result<Vec<Vec<Poly>>> {
        self.each(invariant_factors)
    }

    pub fn eigen(&self) -> Result<Vec<Eigen>> {
        self.each(eigen)
    }

    pub fn diagonalize(&self) -> Result<Vec<Diagonalization>> {
        self.each(diagonalize)
    }

    pub fn rational_form(&self, with_basis: bool) -> Result<Vec<RationalForm>> {
        self.each(|a| rational_form(a, with_basis))
    }

    /// Per component; a split failure in one component leaves the others
    /// intact.
    pub fn jordan_form(&self, with_basis: bool) -> Vec<Result<JordanForm>> {
        self.matrix.components().iter().map(|a| jordan_form(a, with_basis)).collect()
    }

    pub fn primary_decomposition(&self) -> Vec<Result<Vec<PrimaryComponent>>> {
        self.matrix.components().iter().map(primary_decomposition).collect()
    }

    pub fn dn_decomposition(&self) -> Vec<Result<DnDecomposition>> {
        self.matrix.components().iter().map(dn_decomposition).collect()
    }

    pub fn similar(&self, other: &NOperator) -> Result<bool> {
        if self.nfield() != other.nfield() {
            return Err(Error::FieldMismatch);
        }
        let mut all = true;
        for (a, b) in self.matrix.components().iter().zip(other.matrix.components()) {
            all &= similar(a, b)?;
        }
        Ok(all)
    }

    pub fn annihilator(&self, alpha: &NVector) -> Result<NPoly> {
        self.check_vector(alpha)?;
        let ps = self
            .matrix
            .components()
            .iter()
            .zip(alpha.components())
            .map(|(a, v)| annihilator_poly(a, v))
            .collect::<Result<_>>()?;
        NPoly::new(self.nfield(), ps)
    }

    pub fn conductor(&self, alpha: &NVector, w: &NSubspace) -> Result<NPoly> {
        self.check_vector(alpha)?;
        if w.components().iter().zip(self.dims()).any(|(s, n)| s.ambient_dim() != n) {
            return Err(Error::AmbientMismatch);
        }
        let ps = self
            .matrix
            .components()
            .iter()
            .zip(alpha.components())
            .zip(w.components())
            .map(|((a, v), s)| conductor(a, v, s))
            .collect::<Result<_>>()?;
        NPoly::new(self.nfield(), ps)
    }

    fn check_vector(&self, alpha: &NVector) -> Result<()> {
        if alpha.nfield() != self.nfield() {
            return Err(Error::FieldMismatch);
        }
        if alpha.dims() != self.dims() {
            return Err(Error::ShapeMismatch(format!(
                "vector dimensions {:?} vs operator dimensions {:?}",
                alpha.dims(),
                self.dims()
            )));
        }
        Ok(())
    }

    /// One common diagonalizing n-matrix for a commuting family.
    pub fn simultaneous_diagonalize(ops: &[NOperator]) -> Result<NMatrix> {
        let Some(first) = ops.first() else {
            return Err(Error::ShapeMismatch("empty operator family".into()));
        };
        if ops.iter().any(|t| t.nfield() != first.nfield() || t.dims() != first.dims()) {
            return Err(Error::ShapeMismatch("operators act on different spaces".into()));
        }
        let nfield = first.nfield();
        let comps = (0..nfield.arity())
            .map(|i| {
                let family: Vec<Matrix> = ops.iter().map(|t| t.component(i).clone()).collect();
                simultaneous_diagonalize(nfield.component(i), first.dims()[i], &family)
            })
            .collect::<Result<_>>()?;
        NMatrix::new(nfield, comps)
    }

    pub fn canonical_report(&self, with_basis: bool) -> Result<CanonicalReport> {
        let components = self
            .matrix
            .components()
            .iter()
            .map(|a| ComponentReport::build(a, with_basis))
            .collect::<Result<_>>()?;
        Ok(CanonicalReport { components })
    }
}

/// Everything computable about one component operator. Parts that need a
/// split or fully factored minimal polynomial are kept as results so a
/// failure there does not hide the rest.
#[derive(Clone, Debug)]
pub struct ComponentReport {
    pub charpoly: Poly,
    pub minpoly: Poly,
    pub invariant_factors: Vec<Poly>,
    pub eigen: Result<Eigen>,
    pub diagonalization: Result<Diagonalization>,
    pub rational: RationalForm,
    pub jordan: Result<JordanForm>,
    pub primary: Result<Vec<PrimaryComponent>>,
    pub dn: Result<DnDecomposition>,
}

impl ComponentReport {
    pub fn build(a: &Matrix, with_basis: bool) -> Result<Self> {
        let charpoly = charpoly(a)?;
        let minpoly = minpoly(a)?;
        let rational = rational_form(a, with_basis)?;
        let product = rational
            .invariant_factors
            .iter()
            .fold(Poly::one(a.field()), |acc, p| &acc * p);
        if product != charpoly {
            return Err(Error::Internal(format!(
                "invariant factors multiply to {product}, characteristic polynomial is {charpoly}"
            )));
        }
        Ok(ComponentReport {
            invariant_factors: rational.invariant_factors.clone(),
            eigen: eigen(a),
            diagonalization: diagonalize(a),
            jordan: jordan_form(a, with_basis),
            primary: primary_decomposition(a),
            dn: dn_decomposition(a),
            charpoly,
            minpoly,
            rational,
        })
    }
}

#[derive(Clone, Debug)]
pub struct CanonicalReport {
    pub components: Vec<ComponentReport>,
}

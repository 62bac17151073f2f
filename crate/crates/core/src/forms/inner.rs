//! Inner products given by a positive definite Gram matrix over an ordered
//! field. Norms are always squared norms, so nothing leaves the field.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement};
use crate::linalg::{Matrix, Subspace, Vector};

#[derive(Clone, Debug, PartialEq)]
pub struct InnerProductSpace {
    field: Field,
    gram: Matrix,
}

pub(crate) fn require_ordered(field: &Field) -> Result<()> {
    if field.is_ordered() {
        Ok(())
    } else {
        Err(Error::UnorderedField)
    }
}

fn dot(u: &[FieldElement], v: &[FieldElement], zero: FieldElement) -> FieldElement {
    u.iter().zip(v).fold(zero, |acc, (a, b)| acc + a * b)
}

fn axpy(a: &FieldElement, x: &[FieldElement], y: &[FieldElement]) -> Vector {
    x.iter().zip(y).map(|(xi, yi)| a * xi + yi).collect()
}

impl InnerProductSpace {
    /// `gram` must be symmetric with every leading principal minor > 0.
    pub fn new(gram: Matrix) -> Result<Self> {
        let field = gram.field().clone();
        require_ordered(&field)?;
        if !gram.is_square() {
            return Err(Error::ShapeMismatch("Gram matrix must be square".into()));
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        for k in 1..=gram.nrows() {
            if gram.submatrix(0..k, 0..k).det()?.sign()? != Ordering::Greater {
                return Err(Error::NotPositiveDefinite);
            }
        }
        Ok(InnerProductSpace { field, gram })
    }

    pub fn standard(field: &Field, n: usize) -> Result<Self> {
        InnerProductSpace::new(Matrix::identity(field, n))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.gram.nrows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    fn check(&self, v: &[FieldElement]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::ShapeMismatch(format!("vector of length {} in a {}-dimensional space", v.len(), self.dim())));
        }
        if v.iter().any(|x| x.field() != &self.field) {
            return Err(Error::DescriptorMismatch);
        }
        Ok(())
    }

    /// (α|β) = αᵀGβ.
    pub fn inner(&self, alpha: &[FieldElement], beta: &[FieldElement]) -> Result<FieldElement> {
        self.check(alpha)?;
        self.check(beta)?;
        Ok(dot(alpha, &self.gram.mul_vec(beta)?, self.field.zero()))
    }

    pub fn norm_sq(&self, alpha: &[FieldElement]) -> Result<FieldElement> {
        self.inner(alpha, alpha)
    }

    /// Unnormalized Gram–Schmidt:
    /// α_{k+1} = β_{k+1} − Σ (β_{k+1}|α_j)/‖α_j‖² α_j.
    pub fn gram_schmidt(&self, vectors: &[Vector]) -> Result<Vec<Vector>> {
        let mut out: Vec<Vector> = Vec::with_capacity(vectors.len());
        let mut norms: Vec<FieldElement> = Vec::with_capacity(vectors.len());
        for beta in vectors {
            self.check(beta)?;
            let mut alpha = beta.clone();
            for (a, n) in out.iter().zip(&norms) {
                let c = self.inner(beta, a)? / n;
                alpha = axpy(&c.neg(), a, &alpha);
            }
            let n = self.norm_sq(&alpha)?;
            if n.is_zero() {
                return Err(Error::DependentInput);
            }
            out.push(alpha);
            norms.push(n);
        }
        Ok(out)
    }

    /// Orthogonal basis of W.
    pub fn orthogonal_basis(&self, w: &Subspace) -> Result<Vec<Vector>> {
        self.check_subspace(w)?;
        self.gram_schmidt(&w.basis_vectors())
    }

    fn check_subspace(&self, w: &Subspace) -> Result<()> {
        if w.ambient_dim() != self.dim() || w.field() != &self.field {
            return Err(Error::AmbientMismatch);
        }
        Ok(())
    }

    /// The unique α ∈ W with β − α ⊥ W.
    pub fn best_approx(&self, beta: &[FieldElement], w: &Subspace) -> Result<Vector> {
        self.check(beta)?;
        let basis = self.orthogonal_basis(w)?;
        let mut alpha = vec![self.field.zero(); self.dim()];
        for a in &basis {
            let c = self.inner(beta, a)? / self.norm_sq(a)?;
            alpha = axpy(&c, a, &alpha);
        }
        Ok(alpha)
    }

    /// Matrix of the orthogonal projection onto W.
    pub fn projection(&self, w: &Subspace) -> Result<Matrix> {
        let cols = (0..self.dim())
            .map(|j| {
                let mut e = vec![self.field.zero(); self.dim()];
                e[j] = self.field.one();
                self.best_approx(&e, w)
            })
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&self.field, self.dim(), &cols)
    }

    /// S⊥ = {α : (α|s) = 0 for all s ∈ S}.
    pub fn orth_complement(&self, s: &Subspace) -> Result<Subspace> {
        self.check_subspace(s)?;
        let constraints = s.basis().transpose().try_mul(&self.gram)?;
        Ok(Subspace::column_span(&constraints.nullspace()))
    }

    /// [T*] = G⁻¹[T]ᵀG.
    pub fn adjoint(&self, t: &Matrix) -> Result<Matrix> {
        if t.nrows() != self.dim() || t.ncols() != self.dim() {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} operator on a {}-dimensional space",
                t.nrows(),
                t.ncols(),
                self.dim()
            )));
        }
        self.gram.inverse()?.try_mul(&t.transpose())?.try_mul(&self.gram)
    }

    pub fn is_self_adjoint(&self, t: &Matrix) -> Result<bool> {
        Ok(&self.adjoint(t)? == t)
    }

    /// TT* = T*T.
    pub fn is_normal(&self, t: &Matrix) -> Result<bool> {
        let s = self.adjoint(t)?;
        Ok(t.try_mul(&s)? == s.try_mul(t)?)
    }

    /// T*T = TT* = I.
    pub fn is_unitary(&self, t: &Matrix) -> Result<bool> {
        let s = self.adjoint(t)?;
        Ok(t.try_mul(&s)?.is_identity() && s.try_mul(t)?.is_identity())
    }

    /// The sum of two inner products on the same space.
    pub fn sum(&self, other: &InnerProductSpace) -> Result<InnerProductSpace> {
        InnerProductSpace::new(self.gram.try_add(&other.gram)?)
    }

    /// c·( | ) for c > 0.
    pub fn scaled(&self, c: &FieldElement) -> Result<InnerProductSpace> {
        InnerProductSpace::new(self.gram.scale(c))
    }
}

/// AᵀA = I.
pub fn is_orthogonal_matrix(a: &Matrix) -> bool {
    a.is_square() && a.transpose().try_mul(a).is_ok_and(|m| m.is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn vec_i(field: &Field, xs: &[i64]) -> Vector {
        xs.iter().map(|&x| field.from_i64(x)).collect()
    }

    fn ordered_fields() -> [Field; 2] {
        [Field::rational(), Field::quad_ext(2).unwrap()]
    }

    fn random_vec(field: &Field, rng: &mut ChaCha8Rng, n: usize) -> Vector {
        (0..n).map(|_| field.random(rng, 4)).collect()
    }

    fn random_space(field: &Field, rng: &mut ChaCha8Rng, n: usize) -> InnerProductSpace {
        // BᵀB + I is positive definite
        let b = Matrix::new(field, n, n, (0..n * n).map(|_| field.random(rng, 2)).collect()).unwrap();
        let g = &(&b.transpose() * &b) + &Matrix::identity(field, n);
        InnerProductSpace::new(g).unwrap()
    }

    #[test]
    fn inner_examples() {
        let q = Field::rational();
        let s = InnerProductSpace::standard(&q, 2).unwrap();
        assert_eq!(s.inner(&vec_i(&q, &[1, 2]), &vec_i(&q, &[3, 4])).unwrap(), q.from_i64(11));
        let k = Field::quad_ext(2).unwrap();
        let s = InnerProductSpace::standard(&k, 2).unwrap();
        let r2 = crate::fields::parse_element("0+1*sqrt(2)", &k).unwrap();
        assert_eq!(s.norm_sq(&[k.one(), r2]).unwrap(), k.from_i64(3));
        let z5 = Field::prime(5).unwrap();
        assert!(matches!(InnerProductSpace::standard(&z5, 2), Err(Error::UnorderedField)));
        let neg = Matrix::diagonal(&q, &[q.one(), q.from_i64(-1)]);
        assert!(matches!(InnerProductSpace::new(neg), Err(Error::NotPositiveDefinite)));
    }

    #[test]
    fn gram_schmidt_examples() {
        let q = Field::rational();
        let s = InnerProductSpace::standard(&q, 3).unwrap();
        let out = s.gram_schmidt(&[vec_i(&q, &[1, 1, 0]), vec_i(&q, &[1, 0, 1])]).unwrap();
        let half = q.from_i64(1) / q.from_i64(2);
        assert_eq!(out[0], vec_i(&q, &[1, 1, 0]));
        assert_eq!(out[1], vec![half.clone(), half.neg(), q.one()]);
        let e = vec![vec_i(&q, &[1, 0, 0]), vec_i(&q, &[0, 2, 0])];
        assert_eq!(s.gram_schmidt(&e).unwrap(), e);
        assert!(matches!(
            s.gram_schmidt(&[vec_i(&q, &[1, 1, 0]), vec_i(&q, &[2, 2, 0])]),
            Err(Error::DependentInput)
        ));
    }

    #[test]
    fn gram_schmidt_orthogonal_and_prefix_spans() {
        let mut rng = ChaCha8Rng::seed_from_u64(151);
        for field in ordered_fields() {
            for _ in 0..40 {
                let n = rng.gen_range(1..=4);
                let s = random_space(&field, &mut rng, n);
                let k = rng.gen_range(1..=n);
                let vs: Vec<Vector> = (0..k).map(|_| random_vec(&field, &mut rng, n)).collect();
                let Ok(out) = s.gram_schmidt(&vs) else {
                    assert!(Matrix::from_columns(&field, n, &vs).unwrap().rank() < k);
                    continue;
                };
                for i in 0..k {
                    for j in 0..i {
                        assert!(s.inner(&out[i], &out[j]).unwrap().is_zero());
                    }
                    let a = Subspace::span(&field, n, &vs[..=i]).unwrap();
                    let b = Subspace::span(&field, n, &out[..=i]).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }

    #[test]
    fn best_approx_examples() {
        let q = Field::rational();
        let s = InnerProductSpace::standard(&q, 2).unwrap();
        let w = Subspace::span(&q, 2, &[vec_i(&q, &[1, 1])]).unwrap();
        let half = q.from_i64(1) / q.from_i64(2);
        assert_eq!(s.best_approx(&vec_i(&q, &[1, 0]), &w).unwrap(), vec![half.clone(), half]);
        assert_eq!(s.best_approx(&vec_i(&q, &[3, 3]), &w).unwrap(), vec_i(&q, &[3, 3]));
        let x = Subspace::span(&q, 2, &[vec_i(&q, &[1, 0])]).unwrap();
        assert_eq!(
            s.orth_complement(&x).unwrap(),
            Subspace::span(&q, 2, &[vec_i(&q, &[0, 1])]).unwrap()
        );
    }

    #[test]
    fn projection_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(157);
        for field in ordered_fields() {
            for _ in 0..30 {
                let n = rng.gen_range(1..=4);
                let s = random_space(&field, &mut rng, n);
                let k = rng.gen_range(0..=n);
                let vs: Vec<Vector> = (0..k).map(|_| random_vec(&field, &mut rng, n)).collect();
                let w = Subspace::span(&field, n, &vs).unwrap();
                let e = s.projection(&w).unwrap();
                assert_eq!(&e * &e, e);
                let perp = s.orth_complement(&w).unwrap();
                assert_eq!(w.dim() + perp.dim(), n);
                assert_eq!(Subspace::column_span(&e), w);
                assert_eq!(Subspace::column_span(&e.nullspace()), perp);
                let beta = random_vec(&field, &mut rng, n);
                let alpha = s.best_approx(&beta, &w).unwrap();
                let r: Vector = beta.iter().zip(&alpha).map(|(b, a)| b - a).collect();
                for wb in w.basis_vectors() {
                    assert!(s.inner(&r, &wb).unwrap().is_zero());
                }
                assert!(perp.contains_vector(&r));
            }
        }
    }

    #[test]
    fn adjoint_examples() {
        let q = Field::rational();
        let s = InnerProductSpace::standard(&q, 2).unwrap();
        let t = Matrix::from_i64_rows(&q, &[[1, 2], [3, 4]]);
        assert_eq!(s.adjoint(&t).unwrap(), t.transpose());
        assert!(s.is_self_adjoint(&Matrix::from_i64_rows(&q, &[[1, 2], [2, 5]])).unwrap());
        let g = InnerProductSpace::new(Matrix::diagonal(&q, &[q.one(), q.from_i64(2)])).unwrap();
        let t = Matrix::from_i64_rows(&q, &[[0, 1], [0, 0]]);
        let ts = g.adjoint(&t).unwrap();
        // (T e₂ | e₁) = 1 = (e₂ | T* e₁) = 2·(T*)₂₁
        let half = q.one() / q.from_i64(2);
        assert_eq!(ts, Matrix::from_rows(&q, vec![vec![q.zero(), q.zero()], vec![half, q.zero()]]).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(163);
        for _ in 0..20 {
            let a = random_vec(&q, &mut rng, 2);
            let b = random_vec(&q, &mut rng, 2);
            let lhs = g.inner(&t.mul_vec(&a).unwrap(), &b).unwrap();
            let rhs = g.inner(&a, &ts.mul_vec(&b).unwrap()).unwrap();
            assert_eq!(lhs, rhs);
        }
        let rot = Matrix::from_i64_rows(&q, &[[0, -1], [1, 0]]);
        assert!(is_orthogonal_matrix(&rot));
        assert!(s.is_unitary(&rot).unwrap() && s.is_normal(&rot).unwrap());
        assert!(!is_orthogonal_matrix(&t));
    }
}

//! Bilinear forms f(α, β) = αᵀMβ, congruence diagonalization of symmetric
//! forms, and Sylvester signatures.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement};
use crate::linalg::{Matrix, Vector};

#[derive(Clone, Debug, PartialEq)]
pub struct BilinearForm {
    matrix: Matrix,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricDiagonalization {
    /// PᵀMP = D.
    pub p: Matrix,
    pub d: Matrix,
}

/// Counts of positive, negative and zero diagonal entries.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::ShapeMismatch(format!(
                "form matrix must be square, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        Ok(BilinearForm { matrix })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn field(&self) -> &Field {
        self.matrix.field()
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix.is_symmetric()
    }

    pub fn evaluate(&self, alpha: &[FieldElement], beta: &[FieldElement]) -> Result<FieldElement> {
        if alpha.len() != self.dim() {
            return Err(Error::ShapeMismatch(format!("vector of length {} for a form of size {}", alpha.len(), self.dim())));
        }
        let mb = self.matrix.mul_vec(beta)?;
        let mut acc = self.field().zero();
        for (a, b) in alpha.iter().zip(&mb) {
            acc = acc + a.try_mul(b)?;
        }
        Ok(acc)
    }

    /// q(α) = f(α, α).
    pub fn quadratic_form(&self, alpha: &[FieldElement]) -> Result<FieldElement> {
        self.evaluate(alpha, alpha)
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_invertible()
    }

    /// Matrix in the basis given by the columns of P: PᵀMP.
    pub fn matrix_in_basis(&self, p: &Matrix) -> Result<Matrix> {
        if p.nrows() != self.dim() || !p.is_square() {
            return Err(Error::ShapeMismatch("basis matrix must match the form".into()));
        }
        if !p.is_invertible() {
            return Err(Error::NotABasis);
        }
        p.transpose().try_mul(&self.matrix)?.try_mul(p)
    }

    /// Congruence diagonalization. At each step a vector α with q(α) ≠ 0 is
    /// taken from the current basis (by polarization, b₁ ± b_j works when
    /// q(b₁) = 0 but f(b₁, b_j) ≠ 0), and the remaining vectors are replaced
    /// by their components f-orthogonal to α. A first vector orthogonal to
    /// everything left is kept with a zero diagonal entry.
    pub fn symmetric_diagonalize(&self) -> Result<SymmetricDiagonalization> {
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        let field = self.field().clone();
        if field.characteristic() == 2 {
            return Err(Error::CharacteristicTwo);
        }
        let n = self.dim();
        let mut rest: Vec<Vector> = (0..n)
            .map(|j| {
                let mut e = vec![field.zero(); n];
                e[j] = field.one();
                e
            })
            .collect();
        let mut cols: Vec<Vector> = Vec::with_capacity(n);
        let mut diag = Vec::with_capacity(n);
        while !rest.is_empty() {
            let b1 = rest[0].clone();
            let q1 = self.quadratic_form(&b1)?;
            let alpha = if !q1.is_zero() {
                rest.remove(0);
                b1
            } else {
                let partner = rest[1..]
                    .iter()
                    .map(|b| self.evaluate(&b1, b))
                    .collect::<Result<Vec<_>>>()?
                    .iter()
                    .position(|x| !x.is_zero());
                match partner {
                    None => {
                        rest.remove(0);
                        cols.push(b1);
                        diag.push(field.zero());
                        continue;
                    }
                    Some(j) => {
                        let bj = &rest[j + 1];
                        let plus: Vector = b1.iter().zip(bj).map(|(x, y)| x + y).collect();
                        let alpha = if self.quadratic_form(&plus)?.is_zero() {
                            b1.iter().zip(bj).map(|(x, y)| x - y).collect()
                        } else {
                            plus
                        };
                        rest.remove(0);
                        alpha
                    }
                }
            };
            let qa = self.quadratic_form(&alpha)?;
            for b in rest.iter_mut() {
                let c = self.evaluate(&alpha, b)?.checked_div(&qa)?;
                *b = b.iter().zip(&alpha).map(|(x, a)| x - &(&c * a)).collect();
            }
            cols.push(alpha);
            diag.push(qa);
        }
        Ok(SymmetricDiagonalization {
            p: Matrix::from_columns(&field, n, &cols)?,
            d: Matrix::diagonal(&field, &diag),
        })
    }
}

/// Sign counts of a diagonal matrix over an ordered field.
pub fn signature(d: &Matrix) -> Result<Signature> {
    if !d.is_diagonal() {
        return Err(Error::ShapeMismatch("signature needs a diagonal matrix".into()));
    }
    let mut s = Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for i in 0..d.nrows() {
        match d.get(i, i).sign()? {
            Ordering::Greater => s.positive += 1,
            Ordering::Less => s.negative += 1,
            Ordering::Equal => s.zero += 1,
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bilinear_examples() {
        let q = Field::rational();
        let id = BilinearForm::new(Matrix::identity(&q, 2)).unwrap();
        let a = vec![q.from_i64(1), q.from_i64(2)];
        let b = vec![q.from_i64(3), q.from_i64(4)];
        assert_eq!(id.evaluate(&a, &b).unwrap(), q.from_i64(11));
        let h = BilinearForm::new(Matrix::from_i64_rows(&q, &[[0, 1], [1, 0]])).unwrap();
        assert_eq!(h.rank(), 2);
        assert!(h.is_nondegenerate());
        let z = BilinearForm::new(Matrix::zero(&q, 3, 3)).unwrap();
        assert_eq!(z.rank(), 0);
        assert!(!z.is_nondegenerate());
    }

    #[test]
    fn symmetric_diagonalize_examples() {
        let q = Field::rational();
        let h = BilinearForm::new(Matrix::from_i64_rows(&q, &[[0, 1], [1, 0]])).unwrap();
        let r = h.symmetric_diagonalize().unwrap();
        let minus_half = q.from_i64(-1) / q.from_i64(2);
        assert_eq!(r.d, Matrix::diagonal(&q, &[q.from_i64(2), minus_half]));
        assert_eq!(h.matrix_in_basis(&r.p).unwrap(), r.d);
        assert_eq!(
            signature(&r.d).unwrap(),
            Signature {
                positive: 1,
                negative: 1,
                zero: 0
            }
        );
        let d = BilinearForm::new(Matrix::diagonal(&q, &[q.zero(), q.from_i64(3), q.from_i64(-1)])).unwrap();
        assert!(d.symmetric_diagonalize().unwrap().p.is_identity());
        let z = BilinearForm::new(Matrix::zero(&q, 3, 3)).unwrap();
        let r = z.symmetric_diagonalize().unwrap();
        assert!(r.d.is_zero());
        assert_eq!(signature(&r.d).unwrap().zero, 3);
    }

    #[test]
    fn symmetric_diagonalize_errors() {
        let q = Field::rational();
        let ns = BilinearForm::new(Matrix::from_i64_rows(&q, &[[0, 1], [0, 0]])).unwrap();
        assert!(matches!(ns.symmetric_diagonalize(), Err(Error::NotSymmetric)));
        let gf4 = Field::ext(2, vec![1, 1, 1]).unwrap();
        let f = BilinearForm::new(Matrix::identity(&gf4, 2)).unwrap();
        assert!(matches!(f.symmetric_diagonalize(), Err(Error::CharacteristicTwo)));
        let z5 = Field::prime(5).unwrap();
        let f = BilinearForm::new(Matrix::identity(&z5, 2)).unwrap();
        let d = f.symmetric_diagonalize().unwrap().d;
        assert!(matches!(signature(&d), Err(Error::UnorderedField)));
    }

    #[test]
    fn congruence_diagonal_over_odd_characteristic_and_quadratic_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(173);
        for field in [
            Field::rational(),
            Field::quad_ext(2).unwrap(),
            Field::prime(5).unwrap(),
            Field::ext(3, vec![1, 0, 1]).unwrap(),
        ] {
            for _ in 0..40 {
                let n = rng.gen_range(1..=5);
                let mut m = Matrix::zero(&field, n, n);
                for i in 0..n {
                    for j in i..n {
                        let x = if rng.gen_bool(0.3) { field.zero() } else { field.random(&mut rng, 2) };
                        m.set(i, j, x.clone());
                        m.set(j, i, x);
                    }
                }
                let f = BilinearForm::new(m.clone()).unwrap();
                let r = f.symmetric_diagonalize().unwrap();
                assert!(r.p.is_invertible());
                assert!(r.d.is_diagonal());
                assert_eq!(f.matrix_in_basis(&r.p).unwrap(), r.d);
                assert_eq!(r.d.rank(), m.rank());
            }
        }
    }
}

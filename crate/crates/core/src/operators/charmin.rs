//! Characteristic and minimal polynomials, and polynomial actions on
//! vectors.

use crate::domain::bareiss_det;
use crate::error::{Error, Result};
use crate::fields::FieldElement;
use crate::linalg::{Matrix, Vector};
use crate::poly::Poly;

use super::snf::{characteristic_matrix, smith_form};

fn require_square(a: &Matrix) -> Result<()> {
    if a.is_square() {
        Ok(())
    } else {
        Err(Error::ShapeMismatch(format!(
            "operator matrix must be square, got {}x{}",
            a.nrows(),
            a.ncols()
        )))
    }
}

/// det(xI − A).
pub fn charpoly(a: &Matrix) -> Result<Poly> {
    require_square(a)?;
    Ok(bareiss_det(characteristic_matrix(a), Poly::one(a.field())))
}

/// Monic p of least degree with p(A) = 0, from the first linear dependency
/// among I, A, A², …
pub fn minpoly_by_powers(a: &Matrix) -> Result<Poly> {
    require_square(a)?;
    let field = a.field();
    let n = a.nrows();
    let flatten = |m: &Matrix| -> Vector { m.rows().concat() };
    let mut powers: Vec<Vector> = vec![flatten(&Matrix::identity(field, n))];
    let mut current = Matrix::identity(field, n);
    for _ in 0..n {
        current = &current * a;
        let target = flatten(&current);
        let basis = Matrix::from_columns(field, n * n, &powers)?;
        if let Some(c) = basis.solve(&target)? {
            let mut coeffs: Vec<FieldElement> = c.iter().map(FieldElement::neg).collect();
            coeffs.push(field.one());
            return Ok(Poly::new(field, coeffs));
        }
        powers.push(target);
    }
    // n = 0: the empty operator is annihilated by 1
    Ok(Poly::one(field))
}

/// Minimal polynomial, cross-checked against the head invariant factor of
/// xI − A. A disagreement means an elimination bug and is reported as an
/// internal error.
pub fn minpoly(a: &Matrix) -> Result<Poly> {
    let by_powers = minpoly_by_powers(a)?;
    let head = smith_form(a)
        .invariant_factors()
        .into_iter()
        .next()
        .unwrap_or_else(|| Poly::one(a.field()));
    if head != by_powers {
        return Err(Error::Internal(format!(
            "minimal polynomial {by_powers} disagrees with head invariant factor {head}"
        )));
    }
    Ok(by_powers)
}

/// p(A)·v by Horner's rule on vectors.
pub fn poly_apply(p: &Poly, a: &Matrix, v: &[FieldElement]) -> Result<Vector> {
    let field = a.field();
    let mut acc = vec![field.zero(); v.len()];
    for c in p.coeffs().iter().rev() {
        acc = a.mul_vec(&acc)?;
        for (x, vi) in acc.iter_mut().zip(v) {
            *x = &*x + &(c * vi);
        }
    }
    Ok(acc)
}

/// Matrix of A restricted to the A-invariant span of the columns of
/// `basis` (which must be independent), in that basis.
pub fn restrict(a: &Matrix, basis: &Matrix) -> Result<Matrix> {
    let k = basis.ncols();
    let image = a.try_mul(basis)?;
    let cols = (0..k)
        .map(|j| basis.solve(&image.column(j))?.ok_or(Error::NotInvariant))
        .collect::<Result<Vec<_>>>()?;
    Matrix::from_columns(a.field(), k, &cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{sample_fields, Field};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn charpoly_examples() {
        let z2 = Field::prime(2).unwrap();
        let a1 = Matrix::from_i64_rows(&z2, &[[1, 0, 1], [0, 1, 0], [1, 0, 0]]);
        assert_eq!(charpoly(&a1).unwrap().to_string(), "x^3+1");
        let z5 = Field::prime(5).unwrap();
        let a3 = Matrix::from_i64_rows(&z5, &[[0, 4], [1, 0]]);
        assert_eq!(charpoly(&a3).unwrap().to_string(), "x^2+1");
        let q = Field::rational();
        assert_eq!(charpoly(&Matrix::identity(&q, 2)).unwrap().to_string(), "x^2-2*x+1");
    }

    #[test]
    fn minpoly_examples() {
        let q = Field::rational();
        assert_eq!(minpoly(&Matrix::zero(&q, 3, 3)).unwrap().to_string(), "x");
        let p = Poly::parse("x^4-3*x^2+x-7", &q).unwrap();
        assert_eq!(minpoly(&Matrix::companion(&p)).unwrap(), p);
    }

    #[test]
    fn cayley_hamilton_and_divisibility() {
        let mut rng = ChaCha8Rng::seed_from_u64(107);
        for field in sample_fields() {
            for _ in 0..40 {
                let n = rng.gen_range(1..=5);
                let a = Matrix::new(&field, n, n, (0..n * n).map(|_| field.random(&mut rng, 3)).collect()).unwrap();
                let f = charpoly(&a).unwrap();
                assert!(f.is_monic() && f.degree() == Some(n));
                assert!(a.eval_poly(&f).unwrap().is_zero());
                let p = minpoly(&a).unwrap();
                assert!(p.divides(&f));
                assert!(a.eval_poly(&p).unwrap().is_zero());
            }
        }
    }
}

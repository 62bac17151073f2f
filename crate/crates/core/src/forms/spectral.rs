//! Spectral resolution of self-adjoint operators: T = Σ c_j E_j with
//! E_j = e_j(T) for the Lagrange polynomials e_j on the spectrum.

use crate::error::{Error, Result};
use crate::fields::FieldElement;
use crate::linalg::Matrix;
use crate::operators::{charpoly, split_linear};
use crate::poly::{lagrange_basis, Poly};

use super::inner::InnerProductSpace;

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralResolution {
    /// Distinct characteristic values, in canonical order.
    pub values: Vec<FieldElement>,
    pub projections: Vec<Matrix>,
    pub polys: Vec<Poly>,
}

impl SpectralResolution {
    /// Σ c_j E_j.
    pub fn reconstruct(&self) -> Option<Matrix> {
        let first = self.projections.first()?;
        let zero = Matrix::zero(first.field(), first.nrows(), first.ncols());
        Some(
            self.values
                .iter()
                .zip(&self.projections)
                .fold(zero, |acc, (c, e)| &acc + &e.scale(c)),
        )
    }
}

pub fn spectral_resolution(space: &InnerProductSpace, t: &Matrix) -> Result<SpectralResolution> {
    if !space.is_self_adjoint(t)? {
        return Err(Error::NotSelfAdjoint);
    }
    let values: Vec<FieldElement> = split_linear(&charpoly(t)?)?.into_iter().map(|(c, _)| c).collect();
    let polys = lagrange_basis(space.field(), &values)?;
    let projections = polys.iter().map(|e| t.eval_poly(e)).collect::<Result<_>>()?;
    Ok(SpectralResolution {
        values,
        projections,
        polys,
    })
}

/// f(T) = Σ f(c_j) E_j for f given by its values on the spectrum.
pub fn spectral_function(
    resolution: &SpectralResolution,
    values: &[(FieldElement, FieldElement)],
) -> Result<Matrix> {
    let Some(first) = resolution.projections.first() else {
        return Err(Error::ShapeMismatch("empty spectrum".into()));
    };
    let mut acc = Matrix::zero(first.field(), first.nrows(), first.ncols());
    for (c, e) in resolution.values.iter().zip(&resolution.projections) {
        let fc = values
            .iter()
            .find(|(x, _)| x == c)
            .map(|(_, y)| y)
            .ok_or_else(|| Error::NotInField(format!("no function value given at {c}")))?;
        acc = &acc + &e.scale(fc);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Field;
    use crate::operators::eigen;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn spectral_examples() {
        let q = Field::rational();
        let s = InnerProductSpace::standard(&q, 2).unwrap();
        let d = Matrix::diagonal(&q, &[q.from_i64(2), q.from_i64(3)]);
        let r = spectral_resolution(&s, &d).unwrap();
        assert_eq!(r.values, [q.from_i64(2), q.from_i64(3)]);
        assert_eq!(r.projections[0], Matrix::diagonal(&q, &[q.one(), q.zero()]));
        assert_eq!(r.projections[1], Matrix::diagonal(&q, &[q.zero(), q.one()]));

        let a = Matrix::from_i64_rows(&q, &[[0, 1], [1, 0]]);
        let r = spectral_resolution(&s, &a).unwrap();
        assert_eq!(r.values, [q.from_i64(-1), q.one()]);
        let half = q.from_i64(1) / q.from_i64(2);
        let id = Matrix::identity(&q, 2);
        assert_eq!(r.projections[0], (&id - &a).scale(&half));
        assert_eq!(r.projections[1], (&id + &a).scale(&half));
        assert_eq!(r.reconstruct().unwrap(), a);
        let sq: Vec<_> = r.values.iter().map(|c| (c.clone(), c * c)).collect();
        assert_eq!(spectral_function(&r, &sq).unwrap(), &a * &a);
        assert!(spectral_function(&r, &sq).unwrap().is_identity());
    }

    #[test]
    fn spectral_errors() {
        let q = Field::rational();
        let s = InnerProductSpace::standard(&q, 2).unwrap();
        let n = Matrix::from_i64_rows(&q, &[[0, 1], [0, 0]]);
        assert!(matches!(spectral_resolution(&s, &n), Err(Error::NotSelfAdjoint)));
        let sym = Matrix::from_i64_rows(&q, &[[1, 1], [1, 0]]);
        assert!(matches!(spectral_resolution(&s, &sym), Err(Error::SplitFailure { .. })));
    }

    #[test]
    fn resolution_invariants_on_symmetric_conjugates() {
        // Q D Qᵀ with Q a rational orthogonal-up-to-scale matrix keeps the
        // spectrum rational.
        let q = Field::rational();
        let s = InnerProductSpace::standard(&q, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(167);
        for _ in 0..30 {
            let (a, b): (i64, i64) = (rng.gen_range(-4..=4), rng.gen_range(-4..=4));
            if a == 0 && b == 0 {
                continue;
            }
            let rot = Matrix::from_i64_rows(&q, &[[a, -b], [b, a]]);
            let d = Matrix::diagonal(&q, &[q.from_i64(rng.gen_range(-3..=3)), q.from_i64(rng.gen_range(-3..=3))]);
            let t = &(&rot * &d) * &rot.transpose();
            let r = spectral_resolution(&s, &t).unwrap();
            assert_eq!(r.reconstruct().unwrap(), t);
            let sum = r.projections.iter().fold(Matrix::zero(&q, 2, 2), |acc, e| &acc + e);
            assert!(sum.is_identity());
            for (i, e) in r.projections.iter().enumerate() {
                assert!(s.is_self_adjoint(e).unwrap());
                for f in &r.projections[i + 1..] {
                    assert!((e * f).is_zero());
                }
            }
            let spaces = eigen(&t).unwrap().spaces;
            for (i, u) in spaces.iter().enumerate() {
                for v in &spaces[i + 1..] {
                    for x in u.basis_vectors() {
                        for y in v.basis_vectors() {
                            assert!(s.inner(&x, &y).unwrap().is_zero());
                        }
                    }
                }
            }
        }
    }
}

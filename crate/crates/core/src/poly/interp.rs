//! Interpolation, Taylor expansion and root multiplicity.

use super::Poly;
use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement};
use crate::linalg::Matrix;

fn check_distinct(points: &[FieldElement]) -> Result<()> {
    for (i, a) in points.iter().enumerate() {
        if points[i + 1..].contains(a) {
            return Err(Error::DuplicateAbscissa);
        }
    }
    Ok(())
}

/// The Lagrange basis P_0..P_m with P_i(t_j) = δ_ij.
pub fn lagrange_basis(field: &Field, points: &[FieldElement]) -> Result<Vec<Poly>> {
    check_distinct(points)?;
    points
        .iter()
        .enumerate()
        .map(|(i, ti)| {
            let mut num = Poly::one(field);
            let mut den = field.one();
            for (j, tj) in points.iter().enumerate() {
                if i != j {
                    num = &num * &Poly::linear(tj);
                    den = &den * &(ti - tj);
                }
            }
            Ok(num.scale(&den.inv()?))
        })
        .collect()
}

/// The unique polynomial of degree ≤ m through (t_i, v_i).
pub fn lagrange_interpolate(
    field: &Field,
    points: &[FieldElement],
    values: &[FieldElement],
) -> Result<Poly> {
    if points.len() != values.len() {
        return Err(Error::ShapeMismatch(format!(
            "{} abscissae but {} values",
            points.len(),
            values.len()
        )));
    }
    let basis = lagrange_basis(field, points)?;
    Ok(basis
        .iter()
        .zip(values)
        .fold(Poly::zero(field), |acc, (p, v)| &acc + &p.scale(v)))
}

/// Rows (1, t_i, t_i², …, t_i^m).
pub fn vandermonde(field: &Field, points: &[FieldElement]) -> Matrix {
    let m = points.len();
    let rows = points
        .iter()
        .map(|t| {
            let mut row = Vec::with_capacity(m);
            let mut acc = field.one();
            for _ in 0..m {
                row.push(acc.clone());
                acc = &acc * t;
            }
            row
        })
        .collect();
    Matrix::from_rows(field, rows).expect("square by construction")
}

impl Poly {
    /// Coefficients of f in powers of (x − c): (D^k f)(c)/k!.
    pub fn taylor_expand(&self, c: &FieldElement) -> Result<Vec<FieldElement>> {
        if self.field().characteristic() != 0 {
            return Err(Error::PositiveCharacteristic);
        }
        let n = self.degree().unwrap_or(0);
        let mut out = Vec::with_capacity(n + 1);
        let mut deriv = self.clone();
        let mut factorial = self.field().one();
        for k in 0..=n {
            if k > 0 {
                deriv = deriv.derivative();
                factorial = &factorial * &self.field().from_u64(k as u64);
            }
            out.push(deriv.eval(c).checked_div(&factorial)?);
        }
        Ok(out)
    }

    /// Σ a_k (x − c)^k.
    pub fn from_taylor(field: &Field, coeffs: &[FieldElement], c: &FieldElement) -> Poly {
        let shift = Poly::linear(c);
        coeffs
            .iter()
            .rev()
            .fold(Poly::zero(field), |acc, a| &(&acc * &shift) + &Poly::constant(a.clone()))
    }

    /// Largest r with (x − c)^r dividing f.
    pub fn root_multiplicity(&self, c: &FieldElement) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lin = Poly::linear(c);
        let mut f = self.clone();
        let mut r = 0;
        loop {
            let (q, rem) = f.divmod(&lin)?;
            if !rem.is_zero() {
                return Ok(r);
            }
            f = q;
            r += 1;
        }
    }
}

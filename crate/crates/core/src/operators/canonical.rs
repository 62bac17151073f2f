//! Rational (Frobenius) and Jordan forms read off the Smith form of xI − A.

use crate::error::{Error, Result};
use crate::fields::FieldElement;
use crate::linalg::{Matrix, Vector};
use crate::poly::Poly;

use super::charmin::poly_apply;
use super::snf::{smith_form, SmithForm};

#[derive(Clone, Debug, PartialEq)]
pub struct RationalForm {
    /// p₁ = minpoly first, each dividing its predecessor.
    pub invariant_factors: Vec<Poly>,
    pub form: Matrix,
    /// P with P⁻¹AP = form, when requested.
    pub transition: Option<Matrix>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JordanBlock {
    pub eigenvalue: FieldElement,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct JordanForm {
    pub blocks: Vec<JordanBlock>,
    pub form: Matrix,
    pub transition: Option<Matrix>,
}

/// Generators w_k = Σ_i (U⁻¹)_{ik}(A) e_i of the cyclic summands, paired
/// with their annihilators, largest invariant factor first.
fn cyclic_generators(a: &Matrix, smith: &SmithForm) -> Result<Vec<(Poly, Vector)>> {
    let field = a.field();
    let n = a.nrows();
    (0..n)
        .rev()
        .filter(|&k| !smith.diagonal[k].is_constant())
        .map(|k| {
            let mut w = vec![field.zero(); n];
            for i in 0..n {
                let mut e = vec![field.zero(); n];
                e[i] = field.one();
                let term = poly_apply(&smith.u_inv[i][k], a, &e)?;
                for (x, t) in w.iter_mut().zip(term) {
                    *x = &*x + &t;
                }
            }
            Ok((smith.diagonal[k].clone(), w))
        })
        .collect()
}

pub fn invariant_factors(a: &Matrix) -> Result<Vec<Poly>> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch("operator matrix must be square".into()));
    }
    Ok(smith_form(a).invariant_factors())
}

pub fn rational_form(a: &Matrix, with_basis: bool) -> Result<RationalForm> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch("operator matrix must be square".into()));
    }
    let field = a.field();
    let smith = smith_form(a);
    let factors = smith.invariant_factors();
    let blocks: Vec<Matrix> = factors.iter().map(Matrix::companion).collect();
    let form = Matrix::block_diagonal(field, &blocks);
    let transition = if with_basis {
        let mut cols = Vec::new();
        for (p, w) in cyclic_generators(a, &smith)? {
            let mut v = w;
            for _ in 0..p.degree().unwrap() {
                let next = a.mul_vec(&v)?;
                cols.push(std::mem::replace(&mut v, next));
            }
        }
        Some(Matrix::from_columns(field, a.nrows(), &cols)?)
    } else {
        None
    };
    Ok(RationalForm {
        invariant_factors: factors,
        form,
        transition,
    })
}

/// Roots with multiplicities of a polynomial that must split. Otherwise
/// names a non-splitting factor: an irreducible one when the
/// factorization is certified, the whole non-split part if not.
pub fn split_linear(p: &Poly) -> Result<Vec<(FieldElement, usize)>> {
    let roots = p.roots_in_field().map_err(|e| match e {
        Error::FactorizationIncomplete(_) => Error::NeedsFactorization,
        e => e,
    })?;
    let total: usize = roots.iter().map(|(_, m)| m).sum();
    if Some(total) == p.degree() {
        return Ok(roots);
    }
    let split = roots
        .iter()
        .fold(Poly::one(p.field()), |acc, (c, m)| &acc * &Poly::linear(c).pow(*m));
    let rest = p.div_exact(&split)?;
    let factor = match rest.factor() {
        Ok(f) => f
            .factors
            .into_iter()
            .find(|f| f.poly.degree() > Some(1))
            .map(|f| f.poly)
            .unwrap_or(rest),
        Err(_) => rest,
    };
    Err(Error::SplitFailure { factor })
}

/// J with c on the diagonal and ones on the subdiagonal.
pub fn jordan_block(c: &FieldElement, size: usize) -> Matrix {
    let mut m = Matrix::scalar(c, size);
    for i in 1..size {
        m.set(i, i - 1, c.field().one());
    }
    m
}

pub fn jordan_form(a: &Matrix, with_basis: bool) -> Result<JordanForm> {
    if !a.is_square() {
        return Err(Error::ShapeMismatch("operator matrix must be square".into()));
    }
    let field = a.field();
    let n = a.nrows();
    let smith = smith_form(a);
    let gens = cyclic_generators(a, &smith)?;
    let mut pieces: Vec<(FieldElement, usize, Vec<Vector>)> = Vec::new();
    for (p, w) in &gens {
        for (c, e) in split_linear(p)? {
            let mut chain = Vec::new();
            if with_basis {
                let cofactor = p.div_exact(&Poly::linear(&c).pow(e))?;
                let shift = &Poly::x(field) - &Poly::constant(c.clone());
                let mut v = poly_apply(&cofactor, a, w)?;
                for _ in 0..e {
                    let next = poly_apply(&shift, a, &v)?;
                    chain.push(std::mem::replace(&mut v, next));
                }
            }
            pieces.push((c, e, chain));
        }
    }
    pieces.sort_by(|x, y| x.0.canonical_cmp(&y.0).then(y.1.cmp(&x.1)));
    let blocks: Vec<JordanBlock> = pieces
        .iter()
        .map(|(c, e, _)| JordanBlock {
            eigenvalue: c.clone(),
            size: *e,
        })
        .collect();
    let mats: Vec<Matrix> = blocks.iter().map(|b| jordan_block(&b.eigenvalue, b.size)).collect();
    let transition = if with_basis {
        let cols: Vec<Vector> = pieces.into_iter().flat_map(|(_, _, ch)| ch).collect();
        Some(Matrix::from_columns(field, n, &cols)?)
    } else {
        None
    };
    Ok(JordanForm {
        blocks,
        form: Matrix::block_diagonal(field, &mats),
        transition,
    })
}

/// Similarity by equality of invariant-factor chains.
pub fn similar(a: &Matrix, b: &Matrix) -> Result<bool> {
    if (a.nrows(), a.ncols()) != (b.nrows(), b.ncols()) || !a.is_square() {
        return Err(Error::ShapeMismatch(format!(
            "{}x{} vs {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    if a.field() != b.field() {
        return Err(Error::FieldMismatch);
    }
    Ok(invariant_factors(a)? == invariant_factors(b)?)
}

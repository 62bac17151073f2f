//! Eigenspaces, diagonalization, primary and D+N decompositions,
//! conductors, direct-sum projections and simultaneous diagonalization.

use crate::error::{Error, Result};
use crate::fields::{Field, FieldElement};
use crate::linalg::{Matrix, Subspace, Vector};
use crate::poly::Poly;

use super::canonical::split_linear;
use super::charmin::{charpoly, minpoly, restrict};

#[derive(Clone, Debug, PartialEq)]
pub struct Eigen {
    /// Characteristic values in the field with algebraic multiplicities.
    pub values: Vec<(FieldElement, usize)>,
    /// null(A − cI) for each value, in the same order.
    pub spaces: Vec<Subspace>,
}

pub fn eigen(a: &Matrix) -> Result<Eigen> {
    let f = charpoly(a)?;
    let values = f.roots_in_field().map_err(|_| Error::NeedsFactorization)?;
    let spaces = values
        .iter()
        .map(|(c, _)| eigenspace(a, c))
        .collect::<Result<_>>()?;
    Ok(Eigen { values, spaces })
}

pub fn eigenspace(a: &Matrix, c: &FieldElement) -> Result<Subspace> {
    let shifted = a.try_sub(&Matrix::scalar(c, a.nrows()))?;
    Ok(Subspace::column_span(&shifted.nullspace()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Diagonalization {
    pub diagonalizable: bool,
    /// P with P⁻¹AP = D, when diagonalizable.
    pub p: Option<Matrix>,
    pub d: Option<Matrix>,
}

/// Diagonalizable iff the minimal polynomial is a product of distinct
/// linear factors.
pub fn diagonalize(a: &Matrix) -> Result<Diagonalization> {
    let m = minpoly(a)?;
    let roots = match split_linear(&m) {
        Ok(r) => r,
        Err(Error::SplitFailure { .. }) => {
            return Ok(Diagonalization {
                diagonalizable: false,
                p: None,
                d: None,
            })
        }
        Err(e) => return Err(e),
    };
    if roots.iter().any(|(_, mult)| *mult > 1) {
        return Ok(Diagonalization {
            diagonalizable: false,
            p: None,
            d: None,
        });
    }
    let field = a.field();
    let mut cols: Vec<Vector> = Vec::new();
    let mut diag = Vec::new();
    for (c, _) in &roots {
        for v in eigenspace(a, c)?.basis_vectors() {
            cols.push(v);
            diag.push(c.clone());
        }
    }
    Ok(Diagonalization {
        diagonalizable: true,
        p: Some(Matrix::from_columns(field, a.nrows(), &cols)?),
        d: Some(Matrix::diagonal(field, &diag)),
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct PrimaryComponent {
    pub prime: Poly,
    pub exponent: usize,
    /// W_i = null(p_i(A)^{r_i}).
    pub subspace: Subspace,
    /// E_i = h_i(A).
    pub projection: Matrix,
    pub poly: Poly,
}

fn certified_factors(p: &Poly) -> Result<Vec<(Poly, usize)>> {
    let fact = p.factor().map_err(|e| match e {
        Error::FactorizationIncomplete(_) => Error::NeedsFactorization,
        e => e,
    })?;
    Ok(fact.factors.into_iter().map(|f| (f.poly, f.multiplicity)).collect())
}

/// Primary decomposition from the factored minimal polynomial
/// p = Π p_i^{r_i}. With f_i = p / p_i^{r_i} and Bezout u_i f_i + v_i p_i^{r_i} = 1,
/// h_i = u_i f_i mod p is 1 modulo p_i^{r_i} and 0 modulo the other prime
/// powers, so the h_i(A) are the projections.
pub fn primary_decomposition(a: &Matrix) -> Result<Vec<PrimaryComponent>> {
    let m = minpoly(a)?;
    let factors = certified_factors(&m)?;
    factors
        .iter()
        .map(|(prime, r)| {
            let power = prime.pow(*r);
            let f = m.div_exact(&power)?;
            let (_, u, _) = f.gcd_bezout(&power)?;
            let h = (&u * &f).rem(&m)?;
            let subspace = Subspace::column_span(&a.eval_poly(&power)?.nullspace());
            Ok(PrimaryComponent {
                prime: prime.clone(),
                exponent: *r,
                subspace,
                projection: a.eval_poly(&h)?,
                poly: h,
            })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct DnDecomposition {
    pub d: Matrix,
    pub n: Matrix,
    /// D = d_poly(A), N = n_poly(A).
    pub d_poly: Poly,
    pub n_poly: Poly,
    /// Least k with N^k = 0.
    pub nilpotency: usize,
}

/// T = D + N with D = Σ c_i E_i; requires a split minimal polynomial.
pub fn dn_decomposition(a: &Matrix) -> Result<DnDecomposition> {
    let m = minpoly(a)?;
    split_linear(&m)?;
    let field = a.field();
    let comps = primary_decomposition(a)?;
    let mut d_poly = Poly::zero(field);
    for c in &comps {
        let root = c.prime.coeff(0).neg();
        d_poly = &d_poly + &c.poly.scale(&root);
    }
    let d_poly = d_poly.rem(&m)?;
    let n_poly = &Poly::x(field) - &d_poly;
    let d = a.eval_poly(&d_poly)?;
    let n = a.eval_poly(&n_poly)?;
    let mut nilpotency = 0;
    let mut power = Matrix::identity(field, a.nrows());
    while !power.is_zero() {
        power = &power * &n;
        nilpotency += 1;
    }
    Ok(DnDecomposition {
        d,
        n,
        d_poly,
        n_poly,
        nilpotency,
    })
}

/// Least-degree monic g with g(A)α ∈ W. W must be A-invariant.
pub fn conductor(a: &Matrix, alpha: &[FieldElement], w: &Subspace) -> Result<Poly> {
    if !w.is_invariant(a)? {
        return Err(Error::NotInvariant);
    }
    let field = a.field();
    let mut krylov: Vec<Vector> = Vec::new();
    let mut v = alpha.to_vec();
    loop {
        // A^k α ∈ span(α, …, A^{k−1}α) + W ?
        let mut cols = krylov.clone();
        cols.extend(w.basis_vectors());
        let m = Matrix::from_columns(field, a.nrows(), &cols)?;
        if let Some(y) = m.solve(&v)? {
            let mut coeffs: Vec<FieldElement> = y[..krylov.len()].iter().map(FieldElement::neg).collect();
            coeffs.push(field.one());
            return Ok(Poly::new(field, coeffs));
        }
        let next = a.mul_vec(&v)?;
        krylov.push(std::mem::replace(&mut v, next));
    }
}

/// The A-annihilator p_α; p_0 = 1.
pub fn annihilator_poly(a: &Matrix, alpha: &[FieldElement]) -> Result<Poly> {
    conductor(a, alpha, &Subspace::zero(a.field(), a.nrows()))
}

/// α, Aα, …, A^{k−1}α with k = deg p_α: a basis of Z(α; A).
pub fn cyclic_basis(a: &Matrix, alpha: &[FieldElement]) -> Result<Matrix> {
    let k = annihilator_poly(a, alpha)?.degree().unwrap_or(0);
    let mut cols = Vec::with_capacity(k);
    let mut v = alpha.to_vec();
    for _ in 0..k {
        let next = a.mul_vec(&v)?;
        cols.push(std::mem::replace(&mut v, next));
    }
    Matrix::from_columns(a.field(), a.nrows(), &cols)
}

/// Projections E_i onto W_i along the other summands of V = W₁ ⊕ … ⊕ W_k.
pub fn direct_sum_projections(field: &Field, n: usize, ws: &[Subspace]) -> Result<Vec<Matrix>> {
    if ws.iter().any(|w| w.ambient_dim() != n || w.field() != field) {
        return Err(Error::AmbientMismatch);
    }
    let total: usize = ws.iter().map(Subspace::dim).sum();
    let cols: Vec<Vector> = ws.iter().flat_map(Subspace::basis_vectors).collect();
    let b = Matrix::from_columns(field, n, &cols)?;
    if b.rank() < total {
        return Err(Error::NotADirectSum("the subspaces are not independent".into()));
    }
    if total != n {
        return Err(Error::NotADirectSum(format!(
            "dimensions sum to {total}, not to the space dimension {n}"
        )));
    }
    let binv = b.inverse()?;
    let mut out = Vec::with_capacity(ws.len());
    let mut off = 0;
    for w in ws {
        let mut mask = vec![field.zero(); n];
        for m in mask.iter_mut().skip(off).take(w.dim()) {
            *m = field.one();
        }
        off += w.dim();
        out.push(&(&b * &Matrix::diagonal(field, &mask)) * &binv);
    }
    Ok(out)
}

/// Per projection, whether it commutes with A (equivalently, whether A
/// leaves its range and kernel invariant).
pub fn commutes_with(a: &Matrix, es: &[Matrix]) -> Vec<bool> {
    es.iter().map(|e| (a * e) == (e * a)).collect()
}

/// A single P with every P⁻¹A_kP diagonal, by successive refinement of
/// common eigenspaces.
pub fn simultaneous_diagonalize(field: &Field, n: usize, ops: &[Matrix]) -> Result<Matrix> {
    for (i, a) in ops.iter().enumerate() {
        for (j, b) in ops.iter().enumerate().skip(i + 1) {
            if a * b != b * a {
                return Err(Error::NotCommuting(i + 1, j + 1));
            }
        }
    }
    for (k, a) in ops.iter().enumerate() {
        if !diagonalize(a)?.diagonalizable {
            return Err(Error::NotDiagonalizable(k + 1));
        }
    }
    let mut pieces = vec![Matrix::identity(field, n)];
    for a in ops {
        let mut next = Vec::new();
        for s in &pieces {
            let r = restrict(a, s)?;
            let roots = split_linear(&minpoly(&r)?)?;
            for (c, _) in roots {
                let local = eigenspace(&r, &c)?;
                next.push(s * local.basis());
            }
        }
        pieces = next;
    }
    let cols: Vec<Vector> = pieces.iter().flat_map(Matrix::columns).collect();
    Matrix::from_columns(field, n, &cols)
}

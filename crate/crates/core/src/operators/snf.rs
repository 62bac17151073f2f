//! Smith normal form of xI − A over F[x].

use crate::fields::Field;
use crate::linalg::Matrix;
use crate::poly::Poly;

pub type PolyMatrix = Vec<Vec<Poly>>;

/// U·(xI − A)·V = diag(d₁, …, d_n) with d₁ | d₂ | … | d_n monic, units
/// first. `u_inv` is U⁻¹, kept alongside so cyclic generators can be read
/// off without inverting a polynomial matrix.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<Poly>,
    pub u: PolyMatrix,
    pub u_inv: PolyMatrix,
    pub v: PolyMatrix,
}

impl SmithForm {
    /// The nontrivial diagonal entries, largest first: p₁ = minpoly, and
    /// p_{k+1} | p_k.
    pub fn invariant_factors(&self) -> Vec<Poly> {
        self.diagonal
            .iter()
            .rev()
            .filter(|d| !d.is_constant())
            .cloned()
            .collect()
    }
}

pub fn characteristic_matrix(a: &Matrix) -> PolyMatrix {
    let field = a.field();
    let n = a.nrows();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = Poly::constant(a.get(i, j).neg());
                    if i == j {
                        &Poly::x(field) + &c
                    } else {
                        c
                    }
                })
                .collect()
        })
        .collect()
}

fn identity(field: &Field, n: usize) -> PolyMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Poly::one(field) } else { Poly::zero(field) })
                .collect()
        })
        .collect()
}

pub fn poly_matmul(a: &PolyMatrix, b: &PolyMatrix, field: &Field) -> PolyMatrix {
    let n = a.len();
    let m = b.first().map_or(0, Vec::len);
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(Poly::zero(field), |acc, t| &acc + &(&a[i][t] * &b[t][j])))
                .collect()
        })
        .collect()
}

struct State {
    m: PolyMatrix,
    u: PolyMatrix,
    u_inv: PolyMatrix,
    v: PolyMatrix,
}

impl State {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.m.swap(a, b);
        self.u.swap(a, b);
        for row in &mut self.u_inv {
            row.swap(a, b);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for row in self.m.iter_mut().chain(self.v.iter_mut()) {
            row.swap(a, b);
        }
    }

    /// row_i ← row_i − q·row_t
    fn row_sub(&mut self, i: usize, t: usize, q: &Poly) {
        for j in 0..self.m.len() {
            self.m[i][j] = &self.m[i][j] - &(q * &self.m[t][j]);
            self.u[i][j] = &self.u[i][j] - &(q * &self.u[t][j]);
        }
        // U⁻¹ ← U⁻¹·(I + q E_it): column t += q · column i
        for row in &mut self.u_inv {
            row[t] = &row[t] + &(q * &row[i]);
        }
    }

    /// col_j ← col_j − q·col_t
    fn col_sub(&mut self, j: usize, t: usize, q: &Poly) {
        for row in self.m.iter_mut().chain(self.v.iter_mut()) {
            row[j] = &row[j] - &(q * &row[t]);
        }
    }

    fn scale_row(&mut self, t: usize, c: &crate::fields::FieldElement) {
        let inv = c.inv().expect("nonzero unit");
        for j in 0..self.m.len() {
            self.m[t][j] = self.m[t][j].scale(c);
            self.u[t][j] = self.u[t][j].scale(c);
        }
        for row in &mut self.u_inv {
            row[t] = row[t].scale(&inv);
        }
    }
}

pub fn smith_form(a: &Matrix) -> SmithForm {
    let field = a.field();
    let n = a.nrows();
    let mut s = State {
        m: characteristic_matrix(a),
        u: identity(field, n),
        u_inv: identity(field, n),
        v: identity(field, n),
    };
    for t in 0..n {
        loop {
            // smallest-degree nonzero entry of the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    if let Some(d) = s.m[i][j].degree() {
                        if best.is_none_or(|(bd, _, _)| d < bd) {
                            best = Some((d, i, j));
                        }
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                break;
            };
            s.swap_rows(t, pi);
            s.swap_cols(t, pj);
            let mut clean = true;
            for i in t + 1..n {
                if s.m[i][t].is_zero() {
                    continue;
                }
                let (q, r) = s.m[i][t].divmod(&s.m[t][t]).unwrap();
                s.row_sub(i, t, &q);
                clean &= r.is_zero();
            }
            for j in t + 1..n {
                if s.m[t][j].is_zero() {
                    continue;
                }
                let (q, r) = s.m[t][j].divmod(&s.m[t][t]).unwrap();
                s.col_sub(j, t, &q);
                clean &= r.is_zero();
            }
            if !clean {
                continue;
            }
            // the pivot must divide the whole trailing block
            let bad = (t + 1..n)
                .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !s.m[t][t].divides(&s.m[i][j]));
            match bad {
                Some((i, _)) => {
                    // row_t += row_i, then retry
                    let minus_one = Poly::constant(field.one().neg());
                    s.row_sub(t, i, &minus_one);
                }
                None => break,
            }
        }
        if let Some(lc) = s.m[t][t].leading().cloned() {
            if !lc.is_one() {
                s.scale_row(t, &lc.inv().unwrap());
            }
        }
    }
    SmithForm {
        diagonal: (0..n).map(|i| s.m[i][i].clone()).collect(),
        u: s.u,
        u_inv: s.u_inv,
        v: s.v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domain::bareiss_det;
    use crate::fields::sample_fields;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn is_unimodular(m: &PolyMatrix, field: &Field) -> bool {
        let d = bareiss_det(m.clone(), Poly::one(field));
        d.degree() == Some(0)
    }

    #[test]
    fn transforms_reproduce_diagonal() {
        let mut rng = ChaCha8Rng::seed_from_u64(103);
        for field in sample_fields() {
            for _ in 0..30 {
                let n = rng.gen_range(1..=4);
                let a = Matrix::new(&field, n, n, (0..n * n).map(|_| field.random(&mut rng, 2)).collect()).unwrap();
                let s = smith_form(&a);
                let xa = characteristic_matrix(&a);
                let prod = poly_matmul(&poly_matmul(&s.u, &xa, &field), &s.v, &field);
                for i in 0..n {
                    for j in 0..n {
                        if i == j {
                            assert_eq!(prod[i][j], s.diagonal[i]);
                        } else {
                            assert!(prod[i][j].is_zero());
                        }
                    }
                }
                let uu = poly_matmul(&s.u, &s.u_inv, &field);
                assert_eq!(uu, identity(&field, n));
                assert!(is_unimodular(&s.u, &field) && is_unimodular(&s.v, &field));
                for w in s.diagonal.windows(2) {
                    assert!(w[0].divides(&w[1]));
                }
                assert!(s.diagonal.iter().all(Poly::is_monic));
            }
        }
    }

    #[test]
    fn identity_and_companion_chains() {
        let q = Field::rational();
        let s = smith_form(&Matrix::identity(&q, 2));
        let shown: Vec<String> = s.diagonal.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["x-1", "x-1"]);
        let p = Poly::parse("x^3-2*x+5", &q).unwrap();
        let s = smith_form(&Matrix::companion(&p));
        assert!(s.diagonal[0].is_one() && s.diagonal[1].is_one());
        assert_eq!(s.diagonal[2], p);
    }
}

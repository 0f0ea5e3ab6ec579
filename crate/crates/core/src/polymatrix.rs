//! Matrices with polynomial entries: products, determinants and adjugates.

use std::ops::{Index, IndexMut};

use crate::error::{violation, Error, Result};
use crate::field::Field;
use crate::poly::Poly;

/// Cofactor expansion is used up to this size, fraction-free elimination above.
const LAPLACE_MAX: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix<F: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<Poly<F>>,
}

impl<F: Field> Index<(usize, usize)> for PolyMatrix<F> {
    type Output = Poly<F>;
    fn index(&self, (i, j): (usize, usize)) -> &Poly<F> {
        &self.entries[i * self.cols + j]
    }
}

impl<F: Field> IndexMut<(usize, usize)> for PolyMatrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Poly<F> {
        &mut self.entries[i * self.cols + j]
    }
}

impl<F: Field> PolyMatrix<F> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Poly<F>) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    pub fn zero(field: &F, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Poly::zero(field))
    }

    pub fn identity(field: &F, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Poly::one(field) } else { Poly::zero(field) })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Poly<F>] {
        &self.entries
    }

    pub fn map(&self, f: impl Fn(&Poly<F>) -> Poly<F>) -> Self {
        Self { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Config(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let field = self.entries[0].field().clone();
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Poly::zero(&field);
            for k in 0..self.cols {
                if self[(i, k)].is_zero() || other[(k, j)].is_zero() {
                    continue;
                }
                acc = &acc + &(&self[(i, k)] * &other[(k, j)]);
            }
            acc
        }))
    }

    pub fn mul_vec(&self, v: &[Poly<F>]) -> Result<Vec<Poly<F>>> {
        if v.len() != self.cols {
            return Err(Error::Config("vector length mismatch".into()));
        }
        let col = Self::from_fn(self.cols, 1, |i, _| v[i].clone());
        Ok(self.mul(&col)?.entries)
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let n = self.rows;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != skip_row) {
            for j in (0..n).filter(|&j| j != skip_col) {
                entries.push(self[(i, j)].clone());
            }
        }
        Self { rows: n - 1, cols: n - 1, entries }
    }

    fn require_square(&self) -> Result<()> {
        if self.rows != self.cols || self.rows == 0 {
            return Err(Error::Config(format!("{}x{} matrix is not square", self.rows, self.cols)));
        }
        Ok(())
    }

    pub fn determinant(&self) -> Result<Poly<F>> {
        self.require_square()?;
        Ok(if self.rows <= LAPLACE_MAX { self.laplace() } else { self.bareiss() })
    }

    fn laplace(&self) -> Poly<F> {
        let n = self.rows;
        let field = self.entries[0].field().clone();
        match n {
            1 => return self[(0, 0)].clone(),
            2 => return &(&self[(0, 0)] * &self[(1, 1)]) - &(&self[(0, 1)] * &self[(1, 0)]),
            _ => {}
        }
        // expand along the sparsest row
        let row = (0..n)
            .min_by_key(|&i| (0..n).filter(|&j| !self[(i, j)].is_zero()).count())
            .unwrap();
        let mut acc = Poly::zero(&field);
        for j in 0..n {
            if self[(row, j)].is_zero() {
                continue;
            }
            let term = &self[(row, j)] * &self.minor(row, j).laplace();
            if (row + j) % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        acc
    }

    /// Fraction-free Gaussian elimination; every division is exact.
    fn bareiss(&self) -> Poly<F> {
        let n = self.rows;
        let field = self.entries[0].field().clone();
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = Poly::one(&field);
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Poly::zero(&field);
                };
                for j in 0..n {
                    a.entries.swap(k * n + j, swap * n + j);
                }
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[(k, k)] * &a[(i, j)]) - &(&a[(i, k)] * &a[(k, j)]);
                    a[(i, j)] = num.divide_exact(&prev).expect("Bareiss division is exact");
                }
                a[(i, k)] = Poly::zero(&field);
            }
            prev = a[(k, k)].clone();
        }
        let det = a[(n - 1, n - 1)].clone();
        if negate {
            -&det
        } else {
            det
        }
    }

    /// Returns `(det A, adj A)` and checks `adj(A)·A = A·adj(A) = det(A)·I`.
    pub fn det_and_adjugate(&self) -> Result<(Poly<F>, Self)> {
        self.require_square()?;
        let n = self.rows;
        let field = self.entries[0].field().clone();
        let det = self.determinant()?;
        let adj = if n == 1 {
            Self::identity(&field, 1)
        } else {
            Self::from_fn(n, n, |i, j| {
                let c = self.minor(j, i).determinant().expect("square minor");
                if (i + j) % 2 == 0 {
                    c
                } else {
                    -&c
                }
            })
        };
        let scalar = Self::from_fn(n, n, |i, j| if i == j { det.clone() } else { Poly::zero(&field) });
        if adj.mul(self)? != scalar || self.mul(&adj)? != scalar {
            violation!("adjugate identity failed");
        }
        Ok((det, adj))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::{MultiPoly, Variable};
    use proptest::prelude::*;

    fn v(k: &PrimeField, i: u8) -> MultiPoly {
        MultiPoly::var(k, Variable::T(i))
    }

    #[test]
    fn two_by_two_adjugate() {
        let k = PrimeField::new(7).unwrap();
        let (a, b, c, d) = (v(&k, 1), v(&k, 2), v(&k, 3), v(&k, 4));
        let m = PolyMatrix::from_fn(2, 2, |i, j| [[&a, &b], [&c, &d]][i][j].clone());
        let (det, adj) = m.det_and_adjugate().unwrap();
        assert_eq!(det, &(&a * &d) - &(&b * &c));
        assert_eq!(adj[(0, 0)], d);
        assert_eq!(adj[(0, 1)], -&b);
        assert_eq!(adj[(1, 0)], -&c);
        assert_eq!(adj[(1, 1)], a);
    }

    #[test]
    fn identity_determinant() {
        let k = PrimeField::new(3).unwrap();
        for n in 1..=6 {
            let id = PolyMatrix::identity(&k, n);
            let (det, adj) = id.det_and_adjugate().unwrap();
            assert_eq!(det, MultiPoly::one(&k));
            assert_eq!(adj, id);
        }
    }

    #[test]
    fn bareiss_agrees_with_laplace_on_generic_matrices() {
        let k = PrimeField::new(5).unwrap();
        let generic = PolyMatrix::from_fn(5, 5, |i, j| {
            MultiPoly::var(&k, Variable::X(i as u8 + 1, j as u8 + 1))
        });
        let det = generic.determinant().unwrap();
        assert_eq!(det.num_terms(), 120);
        assert_eq!(det, generic.laplace());
    }

    fn entry_strategy() -> impl Strategy<Value = Vec<(u32, u8, u8)>> {
        prop::collection::vec((0u32..5, 0u8..3, 0u8..3), 0..=3)
    }

    fn build(k: &PrimeField, n: usize, data: &[Vec<(u32, u8, u8)>]) -> PolyMatrix<PrimeField> {
        PolyMatrix::from_fn(n, n, |i, j| {
            let terms = &data[i * n + j];
            let mut p = MultiPoly::zero(k);
            for &(c, a, b) in terms {
                let mono = &v(k, 1).pow(a as u32) * &v(k, 2).pow(b as u32);
                p = &p + &mono.scale(c);
            }
            p
        })
    }

    proptest! {
        #[test]
        fn adjugate_identity_random(n in 2usize..=3, data in prop::collection::vec(entry_strategy(), 9)) {
            let k = PrimeField::new(5).unwrap();
            let m = build(&k, n, &data);
            prop_assert!(m.det_and_adjugate().is_ok());
        }
    }
}

//! Dense exact linear algebra over any [`Field`]: row reduction, rank,
//! kernels and particular solutions.

use crate::error::{Error, Result};
use crate::field::Field;

/// Reduced row-echelon form of a row set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon<E> {
    /// Nonzero reduced rows; row `k` has leading one in column `pivots[k]`.
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<E: Copy> Echelon<E> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rref<F: Field>(field: &F, mut rows: Vec<Vec<F::Elem>>, ncols: usize) -> Echelon<F::Elem> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..rows.len()).find(|&i| !field.is_zero(rows[i][c])) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = field.inv(rows[r][c]).expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = field.mul(*x, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(row[c]) {
                continue;
            }
            let factor = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row).skip(c) {
                *x = field.sub(*x, field.mul(factor, y));
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    Echelon { rows, pivots, ncols }
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> usize {
    rref(field, rows.to_vec(), ncols).rank()
}

/// Basis of `{v : A v = 0}`, one vector per free column.
pub fn kernel_basis<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    kernel_from_echelon(field, &rref(field, rows.to_vec(), ncols))
}

fn kernel_from_echelon<F: Field>(field: &F, ech: &Echelon<F::Elem>) -> Vec<Vec<F::Elem>> {
    let mut is_pivot = vec![false; ech.ncols];
    for &c in &ech.pivots {
        is_pivot[c] = true;
    }
    (0..ech.ncols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![field.zero(); ech.ncols];
            v[free] = field.one();
            for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
                v[pc] = field.neg(row[free]);
            }
            v
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet<E> {
    pub particular: Option<Vec<E>>,
    pub kernel: Vec<Vec<E>>,
    pub rank: usize,
}

/// Solves `A x = b` (or just describes the kernel when `b` is absent).
pub fn solve_or_kernel<F: Field>(
    field: &F,
    a: &[Vec<F::Elem>],
    ncols: usize,
    b: Option<&[F::Elem]>,
) -> Result<SolutionSet<F::Elem>> {
    if a.iter().any(|r| r.len() != ncols) {
        return Err(Error::Config("ragged matrix".into()));
    }
    let Some(b) = b else {
        let ech = rref(field, a.to_vec(), ncols);
        return Ok(SolutionSet {
            particular: None,
            kernel: kernel_from_echelon(field, &ech),
            rank: ech.rank(),
        });
    };
    if b.len() != a.len() {
        return Err(Error::Config("right-hand side length mismatch".into()));
    }
    let augmented: Vec<Vec<F::Elem>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let ech = rref(field, augmented, ncols + 1);
    if ech.pivots.last() == Some(&ncols) {
        return Err(Error::NoSolution);
    }
    let mut x = vec![field.zero(); ncols];
    for (row, &pc) in ech.rows.iter().zip(&ech.pivots) {
        x[pc] = row[ncols];
    }
    let coeff = Echelon {
        rows: ech.rows.iter().map(|r| r[..ncols].to_vec()).collect(),
        pivots: ech.pivots.clone(),
        ncols,
    };
    Ok(SolutionSet {
        particular: Some(x),
        kernel: kernel_from_echelon(field, &coeff),
        rank: ech.rank(),
    })
}

/// Incrementally maintained row space, for independence tests.
#[derive(Clone, Debug)]
pub struct RowSpace<F: Field> {
    field: F,
    ncols: usize,
    rows: Vec<(usize, Vec<F::Elem>)>,
}

impl<F: Field> RowSpace<F> {
    pub fn new(field: &F, ncols: usize) -> Self {
        Self { field: field.clone(), ncols, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<F::Elem>) -> Vec<F::Elem> {
        let f = &self.field;
        for (pc, row) in &self.rows {
            let c = v[*pc];
            if f.is_zero(c) {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        v
    }

    pub fn contains(&self, v: &[F::Elem]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| self.field.is_zero(x))
    }

    /// Adds `v`; returns `false` when it was already in the span.
    pub fn insert(&mut self, v: Vec<F::Elem>) -> bool {
        assert_eq!(v.len(), self.ncols);
        let f = self.field.clone();
        let mut v = self.reduce(v);
        let Some(pc) = v.iter().position(|&x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(v[pc]).expect("nonzero");
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[pc];
            if f.is_zero(c) {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&v) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        self.rows.push((pc, v));
        true
    }

    /// Reduced basis sorted by pivot column.
    pub fn basis(&self) -> Vec<Vec<F::Elem>> {
        let mut rows = self.rows.clone();
        rows.sort_by_key(|(pc, _)| *pc);
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// Echelonized basis of the span of `vectors`.
pub fn echelon_basis<F: Field>(field: &F, vectors: Vec<Vec<F::Elem>>, ncols: usize) -> Vec<Vec<F::Elem>> {
    rref(field, vectors, ncols).rows
}

pub fn mat_vec<F: Field>(field: &F, a: &[Vec<F::Elem>], x: &[F::Elem]) -> Vec<F::Elem> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(field.zero(), |acc, (&r, &v)| field.add(acc, field.mul(r, v)))
        })
        .collect()
}

/// Small dense square matrices, used for group elements and `ad` operators.
pub type Mat<E> = Vec<Vec<E>>;

pub fn mat_identity<F: Field>(field: &F, n: usize) -> Mat<F::Elem> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
        .collect()
}

pub fn mat_mul<F: Field>(field: &F, a: &Mat<F::Elem>, b: &Mat<F::Elem>) -> Mat<F::Elem> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(field.zero(), |acc, k| field.add(acc, field.mul(row[k], b[k][j])))
                })
                .collect()
        })
        .collect()
}

pub fn mat_pow<F: Field>(field: &F, a: &Mat<F::Elem>, mut e: u64) -> Mat<F::Elem> {
    let mut base = a.clone();
    let mut acc = mat_identity(field, a.len());
    while e > 0 {
        if e & 1 == 1 {
            acc = mat_mul(field, &acc, &base);
        }
        base = mat_mul(field, &base, &base);
        e >>= 1;
    }
    acc
}

/// Inverse of a square matrix, or `None` when singular.
pub fn mat_inverse<F: Field>(field: &F, a: &Mat<F::Elem>) -> Option<Mat<F::Elem>> {
    let n = a.len();
    let aug: Vec<Vec<F::Elem>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { field.one() } else { field.zero() }));
            r
        })
        .collect();
    let ech = rref(field, aug, 2 * n);
    if ech.rank() < n || ech.pivots[n - 1] != n - 1 {
        return None;
    }
    Some(ech.rows.iter().map(|r| r[n..].to_vec()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use rand::{Rng, SeedableRng};

    #[test]
    fn identity_system() {
        let k = PrimeField::new(5).unwrap();
        let a = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let sol = solve_or_kernel(&k, &a, 3, Some(&[1, 2, 3])).unwrap();
        assert_eq!(sol.particular, Some(vec![1, 2, 3]));
        assert!(sol.kernel.is_empty());
        assert_eq!(sol.rank, 3);
    }

    #[test]
    fn zero_matrix_has_full_kernel() {
        let k = PrimeField::new(3).unwrap();
        let sol = solve_or_kernel(&k, &[vec![0, 0], vec![0, 0]], 2, None).unwrap();
        assert_eq!(sol.kernel.len(), 2);
        assert_eq!(sol.rank, 0);
    }

    #[test]
    fn inconsistent_system() {
        let k = PrimeField::new(7).unwrap();
        let a = vec![vec![1, 1], vec![2, 2]];
        assert_eq!(solve_or_kernel(&k, &a, 2, Some(&[1, 3])), Err(Error::NoSolution));
    }

    #[test]
    fn rank_nullity_and_kernel_vectors_on_random_matrices() {
        let k = PrimeField::new(3).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let (r, c) = (rng.gen_range(1..6), rng.gen_range(1..7));
            let a: Vec<Vec<u32>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(0..3)).collect()).collect();
            let sol = solve_or_kernel(&k, &a, c, None).unwrap();
            assert_eq!(sol.rank + sol.kernel.len(), c);
            for v in &sol.kernel {
                assert!(mat_vec(&k, &a, v).iter().all(|&x| x == 0));
            }
            let b: Vec<u32> = (0..r).map(|_| rng.gen_range(0..3)).collect();
            if let Ok(s) = solve_or_kernel(&k, &a, c, Some(&b)) {
                assert_eq!(mat_vec(&k, &a, s.particular.as_ref().unwrap()), b);
            }
        }
    }

    #[test]
    fn row_space_tracks_rank() {
        let k = PrimeField::new(2).unwrap();
        let mut rs = RowSpace::new(&k, 3);
        assert!(rs.insert(vec![1, 1, 0]));
        assert!(rs.insert(vec![0, 1, 1]));
        assert!(!rs.insert(vec![1, 0, 1]));
        assert!(rs.contains(&[1, 0, 1]));
        assert_eq!(rs.dim(), 2);
    }
}

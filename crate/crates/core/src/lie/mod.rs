//! The restricted Lie algebras `gl_n` and `sl_n` over `F_p`.
//!
//! Every algebra carries a fixed ordered basis: strictly lower matrix units
//! ordered by (column, row), then the torus part (`e_ii` for `gl_n`,
//! `h_i = e_ii - e_{i+1,i+1}` for `sl_n`), then strictly upper matrix units
//! ordered by (row, column). The same order is used for PBW monomials.
//!
//! Coordinates on the algebra are the dual basis: `x[i,j]` for `e_ij` and
//! `y[i]` for `h_i`.

mod action;
mod weights;

pub use action::{Acted, GroupElement};
pub use weights::{RootData, Weight};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::linalg::{mat_identity, mat_inverse, mat_mul, mat_pow, Mat};
use crate::poly::{MultiPoly, Variable};
use crate::polymatrix::PolyMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Gl,
    Sl,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Gl => "gl",
            Variant::Sl => "sl",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Variant::Gl),
            "sl" => Ok(Variant::Sl),
            _ => Err(Error::Config(format!("unknown variant `{s}`"))),
        }
    }
}

/// A basis element; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisElt {
    E(u8, u8),
    H(u8),
}

impl fmt::Display for BasisElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisElt::E(i, j) => write!(f, "e[{i},{j}]"),
            BasisElt::H(i) => write!(f, "h[{i}]"),
        }
    }
}

impl BasisElt {
    fn matrix(&self, field: &PrimeField, n: usize) -> Mat<u32> {
        let mut m = vec![vec![0; n]; n];
        match *self {
            BasisElt::E(i, j) => m[i as usize - 1][j as usize - 1] = 1,
            BasisElt::H(i) => {
                let i = i as usize - 1;
                m[i][i] = 1;
                m[i + 1][i + 1] = field.neg(1);
            }
        }
        m
    }

    pub fn coordinate(&self) -> Variable {
        match *self {
            BasisElt::E(i, j) => Variable::X(i, j),
            BasisElt::H(i) => Variable::Y(i),
        }
    }

    pub fn lie_variable(&self) -> Variable {
        match *self {
            BasisElt::E(i, j) => Variable::E(i, j),
            BasisElt::H(i) => Variable::H(i),
        }
    }

    pub fn centre_variable(&self) -> Variable {
        match *self {
            BasisElt::E(i, j) => Variable::Z(i, j),
            BasisElt::H(i) => Variable::Zh(i),
        }
    }
}

/// Position of a basis element in the triangular decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Lower,
    Torus,
    Upper,
}

/// An element of the Lie algebra, as coordinates in the fixed basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElem(pub Vec<u32>);

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    n: usize,
    variant: Variant,
    field: PrimeField,
    basis: Vec<BasisElt>,
    index: HashMap<BasisElt, usize>,
    mats: Vec<Mat<u32>>,
    brackets: Vec<Vec<LieElem>>,
    p_powers: Vec<LieElem>,
    gram: Mat<u32>,
    gram_inverse: Option<Mat<u32>>,
}

impl LieAlgebra {
    /// Builds `gl_n` (n ≥ 1) or `sl_n` (n ≥ 2) over `F_p`. For `sl_n` with
    /// `p | n` the algebra is built; operations needing `p ∤ n` refuse later.
    pub fn new(n: usize, variant: Variant, p: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        if n == 0 || (variant == Variant::Sl && n < 2) {
            return Err(Error::DegenerateInput(format!("{variant}_{n} is not supported")));
        }
        if n > 9 {
            return Err(Error::BudgetExceeded(format!("n = {n} exceeds index range")));
        }
        let nn = n as u8;
        let mut basis = Vec::new();
        for j in 1..=nn {
            for i in (j + 1)..=nn {
                basis.push(BasisElt::E(i, j));
            }
        }
        match variant {
            Variant::Gl => basis.extend((1..=nn).map(|i| BasisElt::E(i, i))),
            Variant::Sl => basis.extend((1..nn).map(BasisElt::H)),
        }
        for i in 1..=nn {
            for j in (i + 1)..=nn {
                basis.push(BasisElt::E(i, j));
            }
        }
        let index = basis.iter().enumerate().map(|(k, &b)| (b, k)).collect();
        let mats: Vec<Mat<u32>> = basis.iter().map(|b| b.matrix(&field, n)).collect();
        let mut alg = Self {
            n,
            variant,
            field,
            basis,
            index,
            mats,
            brackets: Vec::new(),
            p_powers: Vec::new(),
            gram: Vec::new(),
            gram_inverse: None,
        };
        let dim = alg.dim();
        let mut brackets = Vec::with_capacity(dim);
        for a in 0..dim {
            let row = (0..dim)
                .map(|b| {
                    let ab = mat_mul(&field, &alg.mats[a], &alg.mats[b]);
                    let ba = mat_mul(&field, &alg.mats[b], &alg.mats[a]);
                    let comm = ab
                        .iter()
                        .zip(&ba)
                        .map(|(r, s)| r.iter().zip(s).map(|(&x, &y)| field.sub(x, y)).collect())
                        .collect();
                    alg.from_matrix(&comm).expect("commutators are traceless")
                })
                .collect();
            brackets.push(row);
        }
        alg.brackets = brackets;
        alg.p_powers = (0..dim)
            .map(|k| {
                let m = mat_pow(&field, &alg.mats[k], p as u64);
                alg.from_matrix(&m).expect("p-th powers stay in the algebra")
            })
            .collect();
        alg.gram = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        let prod = mat_mul(&field, &alg.mats[a], &alg.mats[b]);
                        (0..n).fold(0, |acc, i| field.add(acc, prod[i][i]))
                    })
                    .collect()
            })
            .collect();
        alg.gram_inverse = mat_inverse(&field, &alg.gram);
        Ok(alg)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn p(&self) -> u32 {
        self.field.p()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElt] {
        &self.basis
    }

    pub fn index_of(&self, b: BasisElt) -> Option<usize> {
        self.index.get(&b).copied()
    }

    pub fn basis_matrix(&self, k: usize) -> &Mat<u32> {
        &self.mats[k]
    }

    /// Rank `m = dim t`.
    pub fn rank(&self) -> usize {
        match self.variant {
            Variant::Gl => self.n,
            Variant::Sl => self.n - 1,
        }
    }

    pub fn p_divides_n(&self) -> bool {
        self.n as u32 % self.p() == 0
    }

    /// Errors unless `p ∤ n` for `sl_n`; always fine for `gl_n`.
    pub fn require_p_coprime(&self, what: &str) -> Result<()> {
        if self.variant == Variant::Sl && self.p_divides_n() {
            return Err(Error::UnsupportedCharacteristic(format!(
                "{what} needs p ∤ n for sl_{} (p = {})",
                self.n,
                self.p()
            )));
        }
        Ok(())
    }

    pub fn name(&self) -> String {
        format!("{}_{} over F_{}", self.variant, self.n, self.p())
    }

    pub fn part(&self, k: usize) -> Part {
        match self.basis[k] {
            BasisElt::H(_) => Part::Torus,
            BasisElt::E(i, j) if i == j => Part::Torus,
            BasisElt::E(i, j) if i > j => Part::Lower,
            BasisElt::E(..) => Part::Upper,
        }
    }

    pub fn torus_indices(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&k| self.part(k) == Part::Torus).collect()
    }

    pub fn coordinate(&self, k: usize) -> Variable {
        self.basis[k].coordinate()
    }

    pub fn lie_variable(&self, k: usize) -> Variable {
        self.basis[k].lie_variable()
    }

    pub fn coordinates(&self) -> Vec<Variable> {
        self.basis.iter().map(BasisElt::coordinate).collect()
    }

    pub fn index_of_coordinate(&self, v: Variable) -> Option<usize> {
        let b = match v {
            Variable::X(i, j) => BasisElt::E(i, j),
            Variable::Y(i) => BasisElt::H(i),
            _ => return None,
        };
        self.index_of(b)
    }

    pub fn index_of_lie_variable(&self, v: Variable) -> Option<usize> {
        let b = match v {
            Variable::E(i, j) => BasisElt::E(i, j),
            Variable::H(i) => BasisElt::H(i),
            _ => return None,
        };
        self.index_of(b)
    }

    pub fn zero_elem(&self) -> LieElem {
        LieElem(vec![0; self.dim()])
    }

    pub fn basis_elem(&self, k: usize) -> LieElem {
        let mut v = vec![0; self.dim()];
        v[k] = 1;
        LieElem(v)
    }

    pub fn matrix_of(&self, x: &LieElem) -> Mat<u32> {
        let f = &self.field;
        let mut m = vec![vec![0; self.n]; self.n];
        for (k, &c) in x.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (row, brow) in m.iter_mut().zip(&self.mats[k]) {
                for (e, &b) in row.iter_mut().zip(brow) {
                    *e = f.add(*e, f.mul(c, b));
                }
            }
        }
        m
    }

    /// Coordinates of an `n × n` matrix; for `sl_n` the trace must vanish.
    pub fn from_matrix(&self, m: &Mat<u32>) -> Result<LieElem> {
        let f = &self.field;
        if self.variant == Variant::Sl {
            let tr = (0..self.n).fold(0, |acc, i| f.add(acc, m[i][i]));
            if tr != 0 {
                return Err(Error::DegenerateInput("matrix is not traceless".into()));
            }
        }
        let coords = self
            .basis
            .iter()
            .map(|b| match *b {
                BasisElt::E(i, j) => m[i as usize - 1][j as usize - 1],
                BasisElt::H(i) => (0..i as usize).fold(0, |acc, r| f.add(acc, m[r][r])),
            })
            .collect();
        Ok(LieElem(coords))
    }

    /// Values of the coordinate functions at a matrix over any field of
    /// characteristic `p`. For `sl_n` the trace must vanish.
    pub fn point_of<F: Field>(&self, field: &F, m: &Mat<F::Elem>) -> Result<HashMap<Variable, F::Elem>> {
        if m.len() != self.n || m.iter().any(|r| r.len() != self.n) {
            return Err(Error::Config(format!("expected a {0}x{0} matrix", self.n)));
        }
        if self.variant == Variant::Sl {
            let tr = (0..self.n).fold(field.zero(), |acc, i| field.add(acc, m[i][i]));
            if !field.is_zero(tr) {
                return Err(Error::DegenerateInput("matrix is not traceless".into()));
            }
        }
        Ok(self
            .basis
            .iter()
            .map(|b| {
                let v = match *b {
                    BasisElt::E(i, j) => m[i as usize - 1][j as usize - 1],
                    BasisElt::H(i) => (0..i as usize).fold(field.zero(), |acc, r| field.add(acc, m[r][r])),
                };
                (b.coordinate(), v)
            })
            .collect())
    }

    /// Coordinates of a matrix with polynomial entries, as substitution images.
    pub fn symbolic_point(&self, m: &PolyMatrix<PrimeField>) -> HashMap<Variable, MultiPoly> {
        self.basis
            .iter()
            .map(|b| {
                let v = match *b {
                    BasisElt::E(i, j) => m[(i as usize - 1, j as usize - 1)].clone(),
                    BasisElt::H(i) => {
                        (0..i as usize).fold(MultiPoly::zero(&self.field), |acc, r| &acc + &m[(r, r)])
                    }
                };
                (b.coordinate(), v)
            })
            .collect()
    }

    pub fn add(&self, x: &LieElem, y: &LieElem) -> LieElem {
        LieElem(x.0.iter().zip(&y.0).map(|(&a, &b)| self.field.add(a, b)).collect())
    }

    pub fn scale(&self, x: &LieElem, c: u32) -> LieElem {
        LieElem(x.0.iter().map(|&a| self.field.mul(a, c)).collect())
    }

    pub fn bracket(&self, x: &LieElem, y: &LieElem) -> LieElem {
        let f = &self.field;
        let mut out = vec![0; self.dim()];
        for (a, &xa) in x.0.iter().enumerate() {
            if xa == 0 {
                continue;
            }
            for (b, &yb) in y.0.iter().enumerate() {
                if yb == 0 {
                    continue;
                }
                let c = f.mul(xa, yb);
                for (o, &s) in out.iter_mut().zip(&self.brackets[a][b].0) {
                    *o = f.add(*o, f.mul(c, s));
                }
            }
        }
        LieElem(out)
    }

    /// `[b_a, b_b]` for basis indices.
    pub fn basis_bracket(&self, a: usize, b: usize) -> &LieElem {
        &self.brackets[a][b]
    }

    /// The restricted `p`-th power, i.e. the matrix `p`-th power.
    pub fn p_power(&self, x: &LieElem) -> LieElem {
        let m = mat_pow(&self.field, &self.matrix_of(x), self.p() as u64);
        self.from_matrix(&m).expect("p-th power of an element stays in the algebra")
    }

    pub fn basis_p_power(&self, k: usize) -> &LieElem {
        &self.p_powers[k]
    }

    /// Matrix of `ad x` in the fixed basis: column `l` holds `[x, b_l]`.
    pub fn ad_matrix(&self, x: &LieElem) -> Mat<u32> {
        let dim = self.dim();
        let cols: Vec<LieElem> = (0..dim).map(|l| self.bracket(x, &self.basis_elem(l))).collect();
        (0..dim).map(|k| (0..dim).map(|l| cols[l].0[k]).collect()).collect()
    }

    /// Writes an element as a linear polynomial in the Lie variables.
    pub fn to_poly(&self, x: &LieElem) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.field);
        for (k, &c) in x.0.iter().enumerate() {
            out.add_term(crate::poly::Monomial::var(self.lie_variable(k)), c);
        }
        out
    }

    /// The generic matrix `Σ_k coord_k · b_k`; for `sl_n` its entries are the
    /// restrictions `ξ'_ij` of the matrix coordinates.
    pub fn generic_matrix(&self) -> PolyMatrix<PrimeField> {
        let f = &self.field;
        PolyMatrix::from_fn(self.n, self.n, |a, b| {
            let mut e = MultiPoly::zero(f);
            for k in 0..self.dim() {
                let c = self.mats[k][a][b];
                if c != 0 {
                    e.add_term(crate::poly::Monomial::var(self.coordinate(k)), c);
                }
            }
            e
        })
    }

    /// Restriction `f ↦ f'` from `K[gl_n]` to this algebra's coordinate ring.
    pub fn restrict_from_gl(&self, f: &MultiPoly) -> MultiPoly {
        if self.variant == Variant::Gl {
            return f.clone();
        }
        let generic = self.generic_matrix();
        let images = (0..self.n)
            .map(|i| (Variable::xi(i, i), generic[(i, i)].clone()))
            .collect();
        f.substitute(&images)
    }

    /// Trace form on basis elements, `tr(b_a b_b)`.
    pub fn gram(&self) -> &Mat<u32> {
        &self.gram
    }

    pub fn gram_inverse(&self) -> Result<&Mat<u32>> {
        self.require_p_coprime("the trace form")?;
        self.gram_inverse.as_ref().ok_or_else(|| {
            Error::UnsupportedCharacteristic("trace form is degenerate".into())
        })
    }

    pub fn identity_matrix(&self) -> Mat<u32> {
        mat_identity(&self.field, self.n)
    }

    pub fn to_json(&self) -> LieAlgebraJson {
        let dim = self.dim();
        let mut structure_constants = Vec::new();
        for a in 0..dim {
            for b in 0..dim {
                for (k, &c) in self.brackets[a][b].0.iter().enumerate() {
                    if c != 0 {
                        structure_constants.push([a as u32, b as u32, k as u32, c]);
                    }
                }
            }
        }
        LieAlgebraJson {
            n: self.n,
            variant: self.variant,
            p: self.p(),
            basis: self.basis.iter().map(ToString::to_string).collect(),
            structure_constants,
            p_power: self
                .p_powers
                .iter()
                .map(|x| {
                    x.0.iter()
                        .enumerate()
                        .filter(|(_, &c)| c != 0)
                        .map(|(k, &c)| [k as u32, c])
                        .collect()
                })
                .collect(),
        }
    }
}

/// Reproducibility stamp for an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieAlgebraJson {
    pub n: usize,
    pub variant: Variant,
    pub p: u32,
    pub basis: Vec<String>,
    /// `[a, b, k, c]`: `[b_a, b_b]` has coefficient `c` on `b_k`.
    pub structure_constants: Vec<[u32; 4]>,
    /// Sparse `[k, c]` coordinates of each `b^{[p]}`.
    pub p_power: Vec<Vec<[u32; 2]>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::ExtField;
    use rand::SeedableRng;

    fn gl(n: usize, p: u32) -> LieAlgebra {
        LieAlgebra::new(n, Variant::Gl, p).unwrap()
    }

    fn e(alg: &LieAlgebra, i: u8, j: u8) -> LieElem {
        alg.basis_elem(alg.index_of(BasisElt::E(i, j)).unwrap())
    }

    #[test]
    fn basis_order_gl2() {
        let alg = gl(2, 5);
        let names: Vec<String> = alg.basis().iter().map(ToString::to_string).collect();
        assert_eq!(names, ["e[2,1]", "e[1,1]", "e[2,2]", "e[1,2]"]);
        let sl3 = LieAlgebra::new(3, Variant::Sl, 5).unwrap();
        let names: Vec<String> = sl3.basis().iter().map(ToString::to_string).collect();
        assert_eq!(
            names,
            ["e[2,1]", "e[3,1]", "e[3,2]", "h[1]", "h[2]", "e[1,2]", "e[1,3]", "e[2,3]"]
        );
    }

    #[test]
    fn bracket_examples() {
        let alg = gl(2, 5);
        let h = alg.add(&e(&alg, 1, 1), &alg.scale(&e(&alg, 2, 2), 4));
        assert_eq!(alg.bracket(&e(&alg, 1, 2), &e(&alg, 2, 1)), h);
        assert_eq!(alg.bracket(&e(&alg, 1, 1), &e(&alg, 1, 2)), e(&alg, 1, 2));
        let g3 = gl(3, 3);
        assert_eq!(g3.bracket(&e(&g3, 1, 2), &e(&g3, 2, 3)), e(&g3, 1, 3));
    }

    #[test]
    fn p_power_examples() {
        for p in [2, 3, 5] {
            let alg = gl(2, p);
            assert_eq!(alg.p_power(&e(&alg, 1, 2)), alg.zero_elem());
            assert_eq!(alg.p_power(&e(&alg, 1, 1)), e(&alg, 1, 1));
            let id = alg.add(&e(&alg, 1, 1), &e(&alg, 2, 2));
            assert_eq!(alg.p_power(&id), id);
            assert_eq!(alg.p_power(&e(&alg, 2, 1)), alg.zero_elem());
        }
        let alg = gl(2, 2);
        let swap = alg.add(&e(&alg, 1, 2), &e(&alg, 2, 1));
        assert_eq!(alg.p_power(&swap), alg.add(&e(&alg, 1, 1), &e(&alg, 2, 2)));
    }

    #[test]
    fn sl_p_power_table_is_the_matrix_power() {
        for p in [2, 3, 5] {
            let alg = LieAlgebra::new(3, Variant::Sl, p).unwrap();
            for k in 0..alg.dim() {
                let m = mat_pow(alg.field(), alg.basis_matrix(k), p as u64);
                assert_eq!(alg.matrix_of(alg.basis_p_power(k)), m);
            }
        }
    }

    fn all_algebras() -> Vec<LieAlgebra> {
        let mut out = Vec::new();
        for n in 1..=3 {
            for p in [2, 3, 5] {
                out.push(gl(n, p));
                if n >= 2 {
                    out.push(LieAlgebra::new(n, Variant::Sl, p).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn antisymmetry_and_jacobi() {
        for alg in all_algebras() {
            let dim = alg.dim();
            let f = *alg.field();
            for a in 0..dim {
                let x = alg.basis_elem(a);
                assert_eq!(alg.bracket(&x, &x), alg.zero_elem());
                for b in 0..dim {
                    let y = alg.basis_elem(b);
                    let xy = alg.bracket(&x, &y);
                    let yx = alg.bracket(&y, &x);
                    assert_eq!(alg.add(&xy, &yx), alg.zero_elem());
                    for c in 0..dim {
                        let z = alg.basis_elem(c);
                        let s = alg.add(
                            &alg.add(
                                &alg.bracket(&x, &alg.bracket(&y, &z)),
                                &alg.bracket(&y, &alg.bracket(&z, &x)),
                            ),
                            &alg.bracket(&z, &alg.bracket(&x, &y)),
                        );
                        assert_eq!(s, alg.zero_elem(), "{} {a} {b} {c}", alg.name());
                    }
                }
            }
            let _ = f;
        }
    }

    #[test]
    fn restrictedness_ad_of_p_power() {
        for alg in all_algebras() {
            let f = *alg.field();
            for k in 0..alg.dim() {
                let x = alg.basis_elem(k);
                let lhs = alg.ad_matrix(&alg.p_power(&x));
                let rhs = mat_pow(&f, &alg.ad_matrix(&x), alg.p() as u64);
                assert_eq!(lhs, rhs, "{} basis {k}", alg.name());
            }
        }
    }

    #[test]
    fn p_power_is_ad_equivariant_over_f_p2() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 2..=3 {
            for p in [2u32, 3, 5] {
                let k = ExtField::new(p, 2).unwrap();
                let mut tested = 0;
                while tested < 50 {
                    let g: Mat<_> = (0..n).map(|_| (0..n).map(|_| k.random(&mut rng)).collect()).collect();
                    let Some(gi) = mat_inverse(&k, &g) else { continue };
                    let x: Mat<_> = (0..n).map(|_| (0..n).map(|_| k.random(&mut rng)).collect()).collect();
                    let conj = mat_mul(&k, &mat_mul(&k, &g, &x), &gi);
                    let lhs = mat_pow(&k, &conj, p as u64);
                    let rhs = mat_mul(&k, &mat_mul(&k, &g, &mat_pow(&k, &x, p as u64)), &gi);
                    assert_eq!(lhs, rhs);
                    tested += 1;
                }
            }
        }
    }

    #[test]
    fn sl1_is_rejected_and_gl1_accepted() {
        assert!(LieAlgebra::new(1, Variant::Sl, 3).is_err());
        assert_eq!(gl(1, 3).dim(), 1);
    }

    #[test]
    fn json_stamp_lists_structure_constants() {
        let alg = gl(2, 3);
        let j = alg.to_json();
        assert_eq!(j.basis.len(), 4);
        // [e12, e21] = e11 - e22: indices 3, 0 -> 1 (coeff 1) and 2 (coeff 2)
        assert!(j.structure_constants.contains(&[3, 0, 1, 1]));
        assert!(j.structure_constants.contains(&[3, 0, 2, 2]));
        let text = serde_json::to_string(&j).unwrap();
        let back: LieAlgebraJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
    }
}

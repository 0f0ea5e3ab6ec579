//! Regularity of matrices: minimal polynomial degree, rank of the
//! differentials of the invariants, and centralizer dimension.

use rand::Rng;
use serde_json::{json, Value};

use super::{char_invariants, companion_matrix};
use crate::error::{violation, Error, Result};
use crate::field::{ExtField, Field};
use crate::lie::{LieAlgebra, Variant};
use crate::linalg::{mat_inverse, mat_mul, rank, Mat, RowSpace};
use crate::poly::{Poly, Variable};

/// Degree of the minimal polynomial: the dimension of `span{I, x, x², …}`.
pub fn min_poly_degree<F: Field>(field: &F, x: &Mat<F::Elem>) -> usize {
    let n = x.len();
    let mut space = RowSpace::new(field, n * n);
    let mut power = crate::linalg::mat_identity(field, n);
    while space.insert(power.concat()) {
        power = mat_mul(field, &power, x);
    }
    space.dim()
}

/// Dimension of the centralizer of `x` in `gl_n`.
pub fn centralizer_dim<F: Field>(field: &F, x: &Mat<F::Elem>) -> usize {
    let n = x.len();
    let mut cols = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let mut e = vec![vec![field.zero(); n]; n];
            e[a][b] = field.one();
            let xe = mat_mul(field, x, &e);
            let ex = mat_mul(field, &e, x);
            let comm: Vec<F::Elem> = xe
                .concat()
                .into_iter()
                .zip(ex.concat())
                .map(|(u, v)| field.sub(u, v))
                .collect();
            cols.push(comm);
        }
    }
    n * n - rank(field, &cols, n * n)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Regularity {
    pub regular: bool,
    pub min_poly_degree: usize,
    pub jacobian_rank: usize,
    pub centralizer_dim: usize,
}

/// Evaluates the differentials of the invariant family at points over `F`.
pub struct RegularityTester<F: Field> {
    alg: LieAlgebra,
    field: F,
    coords: Vec<Variable>,
    /// `jacobian[k][c] = ∂ t_k / ∂ coord_c`.
    jacobian: Vec<Vec<Poly<F>>>,
}

impl<F: Field> RegularityTester<F> {
    pub fn new(alg: &LieAlgebra, field: &F, embed: impl Fn(u32) -> F::Elem) -> Result<Self> {
        alg.require_p_coprime("the sl regularity criteria")?;
        if field.characteristic() != alg.p() {
            return Err(Error::Config("field characteristic differs from p".into()));
        }
        let family = char_invariants(alg)?;
        let coords = alg.coordinates();
        let jacobian = family
            .members
            .iter()
            .map(|t| coords.iter().map(|&v| t.derivative(v).map_coeffs(field, &embed)).collect())
            .collect();
        Ok(Self { alg: alg.clone(), field: field.clone(), coords, jacobian })
    }

    /// Computes every criterion and fails if they disagree.
    pub fn test(&self, x: &Mat<F::Elem>) -> Result<Regularity> {
        let f = &self.field;
        let n = self.alg.n();
        let point = self.alg.point_of(f, x)?;
        let rows = self
            .jacobian
            .iter()
            .map(|row| row.iter().map(|d| d.evaluate(&point)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        let jacobian_rank = rank(f, &rows, self.coords.len());
        let min_deg = min_poly_degree(f, x);
        let cdim = centralizer_dim(f, x);
        let by_jacobian = jacobian_rank == self.alg.rank();
        let by_min_poly = min_deg == n;
        let by_centralizer = cdim == n;
        if by_jacobian != by_min_poly || by_min_poly != by_centralizer {
            violation!(
                "regularity criteria disagree at {x:?}: min poly degree {min_deg}, jacobian rank {jacobian_rank}, centralizer {cdim}"
            );
        }
        Ok(Regularity {
            regular: by_min_poly,
            min_poly_degree: min_deg,
            jacobian_rank,
            centralizer_dim: cdim,
        })
    }
}

fn all_matrices(p: u32, n: usize) -> impl Iterator<Item = Mat<u32>> {
    let total = (p as u64).pow((n * n) as u32);
    (0..total).map(move |mut code| {
        let mut m = vec![vec![0u32; n]; n];
        for e in m.iter_mut().flatten() {
            *e = (code % p as u64) as u32;
            code /= p as u64;
        }
        m
    })
}

/// Enumerates `gl_2(F_p)`: the minimal centralizer dimension is 2, the
/// irregular elements are exactly the scalars, and every companion matrix
/// is regular.
pub fn irregular_census(p: u32) -> Result<Value> {
    if p > 7 {
        return Err(Error::BudgetExceeded(format!("census of gl_2(F_{p}) is capped at p = 7")));
    }
    let alg = LieAlgebra::new(2, Variant::Gl, p)?;
    let k = *alg.field();
    let tester = RegularityTester::new(&alg, &k, |c| c)?;
    let (mut regular, mut irregular, mut min_dim) = (0usize, 0usize, usize::MAX);
    for x in all_matrices(p, 2) {
        let r = tester.test(&x)?;
        min_dim = min_dim.min(r.centralizer_dim);
        if r.regular {
            regular += 1;
        } else {
            irregular += 1;
            let scalar = x[0][1] == 0 && x[1][0] == 0 && x[0][0] == x[1][1];
            if !scalar {
                violation!("non-scalar irregular element {x:?}");
            }
        }
    }
    if min_dim != 2 {
        violation!("minimal centralizer dimension is {min_dim}, expected 2");
    }
    if irregular != p as usize {
        violation!("{irregular} irregular elements, expected the {p} scalars");
    }
    for a1 in 0..p {
        for a2 in 0..p {
            if !tester.test(&companion_matrix(&k, &[a1, a2]))?.regular {
                violation!("companion matrix of ({a1},{a2}) is irregular");
            }
        }
    }
    Ok(json!({
        "regular": regular,
        "irregular": irregular,
        "min_centralizer_dim": min_dim,
        "max_codimension": 4 - min_dim,
    }))
}

fn random_matrix<F: Field, R: Rng + ?Sized>(field: &F, n: usize, rng: &mut R) -> Mat<F::Elem> {
    (0..n).map(|_| (0..n).map(|_| field.random(rng)).collect()).collect()
}

fn random_invertible<F: Field, R: Rng + ?Sized>(field: &F, n: usize, rng: &mut R) -> (Mat<F::Elem>, Mat<F::Elem>) {
    loop {
        let g = random_matrix(field, n, rng);
        if let Some(gi) = mat_inverse(field, &g) {
            return (g, gi);
        }
    }
}

/// A sample biased towards repeated eigenvalues: `g (D + N) g⁻¹` with `D`
/// diagonal over two values and `N` strictly upper triangular (possibly 0).
fn structured_sample<F: Field, R: Rng + ?Sized>(field: &F, n: usize, rng: &mut R) -> Mat<F::Elem> {
    let vals = [field.random(rng), field.random(rng)];
    let mut m = vec![vec![field.zero(); n]; n];
    for i in 0..n {
        m[i][i] = vals[rng.gen_range(0..2)];
        for j in i + 1..n {
            if rng.gen_bool(0.3) {
                m[i][j] = field.random(rng);
            }
        }
    }
    let (g, gi) = random_invertible(field, n, rng);
    mat_mul(field, &mat_mul(field, &g, &m), &gi)
}

fn make_traceless<F: Field>(field: &F, x: &mut Mat<F::Elem>) {
    let n = x.len();
    let tr = (0..n).fold(field.zero(), |acc, i| field.add(acc, x[i][i]));
    let shift = field.div(tr, field.from_i64(n as i64)).expect("p does not divide n");
    for (i, row) in x.iter_mut().enumerate() {
        row[i] = field.sub(row[i], shift);
    }
}

fn sample_run<F: Field, R: Rng + ?Sized>(
    alg: &LieAlgebra,
    field: &F,
    embed: impl Fn(u32) -> F::Elem,
    samples: usize,
    rng: &mut R,
) -> Result<(usize, usize)> {
    let tester = RegularityTester::new(alg, field, embed)?;
    let (mut regular, mut irregular) = (0, 0);
    for s in 0..samples {
        let mut x = if s % 2 == 0 {
            random_matrix(field, alg.n(), rng)
        } else {
            structured_sample(field, alg.n(), rng)
        };
        if alg.variant() == Variant::Sl {
            make_traceless(field, &mut x);
        }
        if tester.test(&x)?.regular {
            regular += 1;
        } else {
            irregular += 1;
        }
    }
    Ok((regular, irregular))
}

/// Agreement of the regularity criteria: exhaustively over `F_p` when the
/// algebra has at most 4096 points, plus `samples` random points over `F_p`
/// and over `F_{p^2}`.
pub fn regularity_equivalence<R: Rng + ?Sized>(alg: &LieAlgebra, samples: usize, rng: &mut R) -> Result<Value> {
    alg.require_p_coprime("the sl regularity criteria")?;
    let k = *alg.field();
    let n = alg.n();
    let mut out = serde_json::Map::new();
    let points = (alg.p() as u64).checked_pow(alg.dim() as u32);
    if points.is_some_and(|c| c <= 4096) {
        let tester = RegularityTester::new(alg, &k, |c| c)?;
        let (mut regular, mut irregular) = (0usize, 0usize);
        for x in all_matrices(alg.p(), n) {
            let tr = (0..n).fold(0, |acc, i| k.add(acc, x[i][i]));
            if alg.variant() == Variant::Sl && tr != 0 {
                continue;
            }
            if tester.test(&x)?.regular {
                regular += 1;
            } else {
                irregular += 1;
            }
        }
        out.insert("exhaustive".into(), json!({"regular": regular, "irregular": irregular}));
    }
    for e in 1..=2usize {
        let ext = ExtField::new(alg.p(), e)?;
        let (regular, irregular) = sample_run(alg, &ext, |c| ext.embed(c), samples, rng)?;
        out.insert(
            format!("sampled_F_p^{e}"),
            json!({"samples": samples, "regular": regular, "irregular": irregular}),
        );
    }
    out.insert("disagreements".into(), json!(0));
    Ok(Value::Object(out))
}

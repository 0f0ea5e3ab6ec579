//! Polynomial invariants of the adjoint action: the coefficients `s_i` of
//! the characteristic polynomial, regularity criteria, the linear system in
//! the first-row coordinates and its determinant `d`, invariant subspaces
//! and irreducibility by exhaustive search.

mod irreducible;
mod regular;
mod space;
mod veldkamp;

pub use irreducible::{irreducibility_bruteforce, Irreducibility};
pub use regular::{
    centralizer_dim, irregular_census, min_poly_degree, regularity_equivalence, Regularity,
    RegularityTester,
};
pub use space::{
    freeness_census, invariant_subspace, invariant_subspace_for, lemma2_check, monomials_of_degree,
    sl_restriction_quotient, Mode,
};
pub use veldkamp::{
    d_non_invariance_witness, eq1_identity_check, lemma3_check, permutation_expansion, rationality_witness,
    semiinvariance_check, VeldkampSystem,
};
pub(crate) use veldkamp::show as veldkamp_show;

use serde_json::{json, Value};

use crate::error::{violation, Result};
use crate::field::{Field, PrimeField};
use crate::lie::{LieAlgebra, Variant};
use crate::linalg::Mat;
use crate::poly::{Monomial, MultiPoly, Variable};
use crate::polymatrix::PolyMatrix;

/// The generators `(t_1, …, t_m)`: `(s_1, …, s_n)` for `gl_n` and
/// `(s'_2, …, s'_n)` for `sl_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantFamily {
    pub variant: Variant,
    pub members: Vec<MultiPoly>,
}

impl InvariantFamily {
    /// Degree of member `i` (0-based).
    pub fn degree(&self, i: usize) -> u32 {
        match self.variant {
            Variant::Gl => i as u32 + 1,
            Variant::Sl => i as u32 + 2,
        }
    }
}

/// Sums of principal `k`-minors of `m`, for `k = 1..=n`.
pub fn principal_minor_sums(m: &PolyMatrix<PrimeField>) -> Result<Vec<MultiPoly>> {
    let n = m.rows();
    let field = *m[(0, 0)].field();
    let mut sums = vec![MultiPoly::zero(&field); n];
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub = PolyMatrix::from_fn(idx.len(), idx.len(), |a, b| m[(idx[a], idx[b])].clone());
        let det = sub.determinant()?;
        sums[idx.len() - 1] = &sums[idx.len() - 1] + &det;
    }
    Ok(sums)
}

/// `s_1, …, s_n` on `gl_n`, as polynomials in the `x[i,j]`.
pub fn gl_invariants(n: usize, p: u32) -> Result<Vec<MultiPoly>> {
    let alg = LieAlgebra::new(n, Variant::Gl, p)?;
    principal_minor_sums(&alg.generic_matrix())
}

pub fn char_invariants(alg: &LieAlgebra) -> Result<InvariantFamily> {
    let sums = principal_minor_sums(&alg.generic_matrix())?;
    let members = match alg.variant() {
        Variant::Gl => sums,
        Variant::Sl => {
            if !sums[0].is_zero() {
                violation!("the trace does not vanish on sl_{}", alg.n());
            }
            sums[1..].to_vec()
        }
    };
    Ok(InvariantFamily { variant: alg.variant(), members })
}

/// Sets every off-diagonal coordinate to 0.
pub fn restrict_to_diagonal(f: &MultiPoly) -> MultiPoly {
    let terms = f.terms().iter().filter(|(m, _)| {
        m.pairs().iter().all(|&(v, _)| !matches!(v, Variable::X(i, j) if i != j))
    });
    MultiPoly::from_terms(f.field(), terms.map(|(m, &c)| (m.clone(), c)))
}

/// `s_k` restricted to the diagonal equals `σ_k` for every `k`.
pub fn diagonal_restriction_check(n: usize, p: u32) -> Result<Value> {
    let s = gl_invariants(n, p)?;
    for (k, sk) in s.iter().enumerate() {
        if restrict_to_diagonal(sk) != elementary_symmetric(n, k + 1, p)? {
            violation!("s_{} does not restrict to the elementary symmetric polynomial", k + 1);
        }
    }
    Ok(json!({"checked": n, "last": veldkamp::show(&restrict_to_diagonal(&s[n - 1]))}))
}

/// Absolute irreducibility of the determinant `d` of the first-row system.
pub fn d_irreducibility_check(alg: &LieAlgebra) -> Result<Value> {
    let sys = VeldkampSystem::for_algebra(alg)?;
    match irreducibility_bruteforce(&sys.d)? {
        Irreducibility::Factor { extension_degree, linear_form } => {
            violation!("d has the linear factor {linear_form} over F_{}^{extension_degree}", alg.p())
        }
        ok => Ok(json!({"d": veldkamp::show(&sys.d), "search": ok})),
    }
}

/// Elementary symmetric polynomial `σ_k` in `x[1,1], …, x[n,n]`.
pub fn elementary_symmetric(n: usize, k: usize, p: u32) -> Result<MultiPoly> {
    let field = PrimeField::new(p)?;
    let mut out = MultiPoly::zero(&field);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize == k {
            let m = Monomial::from_pairs((0..n).filter(|&i| mask & (1 << i) != 0).map(|i| (Variable::xi(i, i), 1)));
            out.add_term(m, 1);
        }
    }
    Ok(out)
}

/// First row `a`, ones on the subdiagonal; its characteristic polynomial is
/// `X^n - a_1 X^{n-1} - … - a_n`.
pub fn companion_matrix<F: Field>(field: &F, a: &[F::Elem]) -> Mat<F::Elem> {
    let n = a.len();
    let mut m = vec![vec![field.zero(); n]; n];
    m[0].copy_from_slice(a);
    for i in 1..n {
        m[i][i - 1] = field.one();
    }
    m
}

/// The companion matrix with symbolic first row `t[1], …, t[n]`.
pub fn symbolic_companion(field: &PrimeField, n: usize) -> PolyMatrix<PrimeField> {
    PolyMatrix::from_fn(n, n, |i, j| {
        if i == 0 {
            MultiPoly::var(field, Variable::T(j as u8 + 1))
        } else if i == j + 1 {
            MultiPoly::one(field)
        } else {
            MultiPoly::zero(field)
        }
    })
}

/// `(-1)^k` in `F_p`.
pub(crate) fn sign(field: &PrimeField, k: usize) -> u32 {
    if k % 2 == 0 {
        1
    } else {
        field.neg(1)
    }
}

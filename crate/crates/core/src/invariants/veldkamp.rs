//! The linear system `M·c = s + r` in the first-row coordinates, its
//! determinant `d`, and the checks built on them.

use rand::Rng;
use serde_json::{json, Value};

use super::{gl_invariants, sign, symbolic_companion};
use crate::error::{violation, Result};
use crate::field::{ExtField, Field, PrimeField};
use crate::invariants::companion_matrix;
use crate::lie::{LieAlgebra, Variant, Weight};
use crate::linalg::{mat_inverse, Mat};
use crate::poly::{MultiPoly, Variable};
use crate::polymatrix::PolyMatrix;

/// Polynomials longer than this are reported by size only.
const SHOW_TERMS: usize = 40;

pub(crate) fn show(f: &MultiPoly) -> Value {
    if f.num_terms() <= SHOW_TERMS {
        json!(f.to_string())
    } else {
        json!({"terms": f.num_terms(), "degree": f.degree()})
    }
}

fn is_first_row(v: Variable) -> bool {
    matches!(v, Variable::X(1, j) if j >= 2)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VeldkampSystem {
    pub variant: Variant,
    pub m: PolyMatrix<PrimeField>,
    pub c: Vec<MultiPoly>,
    pub s: Vec<MultiPoly>,
    pub r: Vec<MultiPoly>,
    pub d: MultiPoly,
}

impl VeldkampSystem {
    /// `M_ij = ∂s_i/∂x[1,j]`, `r = M·c - s`, `d = det M` on `gl_n`.
    pub fn gl(n: usize, p: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let s = gl_invariants(n, p)?;
        let c: Vec<MultiPoly> = (0..n).map(|j| MultiPoly::var(&field, Variable::xi(0, j))).collect();
        let m = PolyMatrix::from_fn(n, n, |i, j| s[i].derivative(Variable::xi(0, j)));
        let mc = m.mul_vec(&c)?;
        let r: Vec<MultiPoly> = mc.iter().zip(&s).map(|(a, b)| a - b).collect();
        let d = m.determinant()?;
        let sys = Self { variant: Variant::Gl, m, c, s, r, d };
        sys.verify(n, |v| matches!(v, Variable::X(1, _)))?;
        Ok(sys)
    }

    /// The restriction of the `gl_n` system to `sl_n` (`p ∤ n`).
    pub fn sl(alg: &LieAlgebra) -> Result<Self> {
        alg.require_p_coprime("the restricted system")?;
        let n = alg.n();
        let gl = Self::gl(n, alg.p())?;
        let restrict = |f: &MultiPoly| alg.restrict_from_gl(f);
        let m = gl.m.map(restrict);
        let d = m.determinant()?;
        if d != restrict(&gl.d) {
            violation!("determinant does not commute with restriction");
        }
        let sys = Self {
            variant: Variant::Sl,
            m,
            c: gl.c.iter().map(restrict).collect(),
            s: gl.s.iter().map(restrict).collect(),
            r: gl.r.iter().map(restrict).collect(),
            d,
        };
        sys.verify(n, is_first_row)?;
        Ok(sys)
    }

    pub fn for_algebra(alg: &LieAlgebra) -> Result<Self> {
        match alg.variant() {
            Variant::Gl => Self::gl(alg.n(), alg.p()),
            Variant::Sl => Self::sl(alg),
        }
    }

    fn verify(&self, n: usize, first_row: impl Fn(Variable) -> bool + Copy) -> Result<()> {
        let mc = self.m.mul_vec(&self.c)?;
        for i in 0..n {
            if mc[i] != &self.s[i] + &self.r[i] {
                violation!("row {} of M·c = s + r fails", i + 1);
            }
            if self.r[i].mentions(first_row) {
                violation!("r_{} involves a first-row coordinate", i + 1);
            }
        }
        if self.m.entries().iter().any(|e| e.mentions(first_row)) {
            violation!("M involves a first-row coordinate");
        }
        let expected = (n * (n - 1) / 2) as u32;
        if !self.d.is_homogeneous() || self.d.degree() != Some(expected) {
            violation!("d is not homogeneous of degree {expected}");
        }
        Ok(())
    }
}

/// `Σ_π sgn(π) Π_i M_{i,π(i)}`.
pub fn permutation_expansion(m: &PolyMatrix<PrimeField>) -> MultiPoly {
    let n = m.rows();
    let field = *m[(0, 0)].field();
    let mut total = MultiPoly::zero(&field);
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm; each step is one transposition, so the sign alternates
    let mut counters = vec![0usize; n];
    let mut odd = false;
    let mut add = |perm: &[usize], odd: bool| {
        let mut prod = MultiPoly::one(&field);
        for (i, &j) in perm.iter().enumerate() {
            if m[(i, j)].is_zero() {
                return;
            }
            prod = &prod * &m[(i, j)];
        }
        total = if odd { &total - &prod } else { &total + &prod };
    };
    add(&perm, odd);
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(counters[i], i);
            }
            odd = !odd;
            add(&perm, odd);
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    total
}

/// The identity `M·c = s + r` with `M`, `r` free of first-row coordinates.
pub fn eq1_identity_check(alg: &LieAlgebra) -> Result<Value> {
    let sys = VeldkampSystem::for_algebra(alg)?;
    Ok(json!({
        "d": show(&sys.d),
        "r": sys.r.iter().map(show).collect::<Vec<_>>(),
        "m_terms": sys.m.entries().iter().map(MultiPoly::num_terms).sum::<usize>(),
    }))
}

/// `d(x_a) = (-1)^{⌊n/2⌋}` at companion matrices, and `M(x_a)` equals
/// `diag(1, -1, …)` with symbolic first row. On `sl_n` the first entry of
/// `a` is 0.
pub fn lemma3_check<R: Rng + ?Sized>(alg: &LieAlgebra, samples: usize, rng: &mut R) -> Result<Value> {
    let sys = VeldkampSystem::for_algebra(alg)?;
    let k = *alg.field();
    let n = alg.n();
    let expected = sign(&k, n / 2);
    for _ in 0..samples {
        let mut a: Vec<u32> = (0..n).map(|_| k.random(rng)).collect();
        if alg.variant() == Variant::Sl {
            a[0] = 0;
        }
        let point = alg.point_of(&k, &companion_matrix(&k, &a))?;
        let value = sys.d.evaluate(&point)?;
        if value != expected {
            violation!("d(x_a) = {value} at a = {a:?}, expected {expected}");
        }
    }
    let mut companion = symbolic_companion(&k, n);
    if alg.variant() == Variant::Sl {
        companion[(0, 0)] = MultiPoly::zero(&k);
    }
    let images = alg.symbolic_point(&companion);
    for i in 0..n {
        for j in 0..n {
            let got = sys.m[(i, j)].substitute(&images);
            let want = if i == j { MultiPoly::constant(&k, sign(&k, i)) } else { MultiPoly::zero(&k) };
            if got != want {
                violation!("M(x_a)[{},{}] = {got}, expected {want}", i + 1, j + 1);
            }
        }
    }
    Ok(json!({"samples": samples, "value": k.signed(expected), "d_terms": sys.d.num_terms()}))
}

/// `adj(M^F)·(s^F + r^F) = d^p·c^F` componentwise.
pub fn rationality_witness(alg: &LieAlgebra) -> Result<Value> {
    let sys = VeldkampSystem::for_algebra(alg)?;
    let mf = sys.m.map(MultiPoly::frobenius);
    let (det, adj) = mf.det_and_adjugate()?;
    let dp = sys.d.frobenius();
    if det != dp {
        violation!("det(M^F) differs from d^p");
    }
    let rhs: Vec<MultiPoly> = sys.s.iter().zip(&sys.r).map(|(s, r)| &s.frobenius() + &r.frobenius()).collect();
    let lhs = adj.mul_vec(&rhs)?;
    let mut sizes = Vec::new();
    for (j, (l, c)) in lhs.iter().zip(&sys.c).enumerate() {
        let want = &dp * &c.frobenius();
        if *l != want {
            violation!("component {} of adj(M^F)(s^F + r^F) differs from d^p c^F", j + 1);
        }
        sizes.push(l.num_terms());
    }
    Ok(json!({"component_terms": sizes, "d_p": show(&dp)}))
}

/// The torus weight `nε_1 - Σε_i` of `d`, invariance under every upper
/// unipotent `u_ij(t)`, the permutation expansion, and proportionality
/// `g·d ∈ K·d` for sampled Levi elements `diag(a, A)`.
pub fn semiinvariance_check<R: Rng + ?Sized>(alg: &LieAlgebra, samples: usize, rng: &mut R) -> Result<Value> {
    let sys = VeldkampSystem::for_algebra(alg)?;
    let n = alg.n();
    let weights = alg.weight_decompose(&sys.d);
    let mut expected = Weight::epsilon(n, 1).scale(n as i64);
    for i in 1..=n {
        expected = expected.sub(&Weight::epsilon(n, i));
    }
    if alg.variant() == Variant::Sl {
        expected = expected.normalized();
    }
    if weights.len() != 1 || !weights.contains_key(&expected) {
        let found: Vec<String> = weights.keys().map(ToString::to_string).collect();
        violation!("d has weights {found:?}, expected {expected}");
    }
    for i in 1..=n as u8 {
        for j in i + 1..=n as u8 {
            if alg.act_unipotent(i, j, &sys.d)? != sys.d {
                violation!("u_{i}{j}(t) moves d");
            }
        }
    }
    if permutation_expansion(&sys.m) != sys.d {
        violation!("permutation expansion differs from det M");
    }
    let ext = ExtField::new(alg.p(), 2)?;
    let d_ext = sys.d.map_coeffs(&ext, |c| ext.embed(c));
    let mut levi = 0;
    while levi < samples && n >= 2 {
        let mut g: Mat<_> = vec![vec![ext.zero(); n]; n];
        g[0][0] = ext.random_nonzero(rng);
        for row in g.iter_mut().skip(1) {
            for e in row.iter_mut().skip(1) {
                *e = ext.random(rng);
            }
        }
        if alg.variant() == Variant::Sl {
            // rescale the first entry so that det g = 1
            let det_a = {
                let block: Mat<_> = g[1..].iter().map(|r| r[1..].to_vec()).collect();
                determinant(&ext, &block)
            };
            let Some(inv) = ext.inv(det_a) else { continue };
            g[0][0] = inv;
        }
        if mat_inverse(&ext, &g).is_none() {
            continue;
        }
        let moved = alg.act_matrix(&ext, &g, &sys.d)?;
        let (m, c) = d_ext.leading_term().expect("d is nonzero");
        let scalar = ext.div(moved.coefficient(m), c).expect("nonzero coefficient");
        if moved != d_ext.scale(scalar) {
            violation!("sampled Levi element does not scale d");
        }
        levi += 1;
    }
    Ok(json!({
        "weight": expected.to_string(),
        "unipotent_checks": n * (n - 1) / 2,
        "levi_samples": levi,
        "d": show(&sys.d),
    }))
}

fn determinant<F: Field>(field: &F, m: &Mat<F::Elem>) -> F::Elem {
    let n = m.len();
    let mut a = m.clone();
    let mut det = field.one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !field.is_zero(a[r][c])) else {
            return field.zero();
        };
        if piv != c {
            a.swap(piv, c);
            det = field.neg(det);
        }
        det = field.mul(det, a[c][c]);
        let inv = field.inv(a[c][c]).expect("nonzero pivot");
        for r in c + 1..n {
            let f = field.mul(a[r][c], inv);
            for k in c..n {
                a[r][k] = field.sub(a[r][k], field.mul(f, a[c][k]));
            }
        }
    }
    det
}

/// A torus element of the algebra that does not annihilate `d`, while
/// every basis element annihilates `d^p`.
pub fn d_non_invariance_witness(alg: &LieAlgebra) -> Result<Value> {
    let sys = VeldkampSystem::for_algebra(alg)?;
    let dp = sys.d.frobenius();
    for k in 0..alg.dim() {
        if !alg.adjoint_derivation(&alg.basis_elem(k), &dp).is_zero() {
            violation!("{} does not annihilate d^p", alg.basis()[k]);
        }
    }
    for k in alg.torus_indices() {
        let image = alg.adjoint_derivation(&alg.basis_elem(k), &sys.d);
        if !image.is_zero() {
            return Ok(json!({"h": alg.basis()[k].to_string(), "h_d": show(&image), "d": show(&sys.d)}));
        }
    }
    violation!("every torus element annihilates d")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;
    use rand::SeedableRng;

    #[test]
    fn gl2_system() {
        let sys = VeldkampSystem::gl(2, 5).unwrap();
        assert_eq!(sys.m[(0, 0)], MultiPoly::one(&PrimeField::new(5).unwrap()));
        assert!(sys.m[(0, 1)].is_zero());
        assert_eq!(sys.m[(1, 0)], parse_poly("1*x[2,2]", 5).unwrap());
        assert_eq!(sys.m[(1, 1)], parse_poly("4*x[2,1]", 5).unwrap());
        assert_eq!(sys.r[0], parse_poly("4*x[2,2]", 5).unwrap());
        assert!(sys.r[1].is_zero());
        assert_eq!(sys.d, parse_poly("4*x[2,1]", 5).unwrap());
    }

    #[test]
    fn gl1_smoke_case() {
        let sys = VeldkampSystem::gl(1, 3).unwrap();
        assert_eq!(sys.d, MultiPoly::one(&PrimeField::new(3).unwrap()));
        assert!(sys.r[0].is_zero());
    }

    #[test]
    fn sl2_restricted_determinant() {
        let alg = LieAlgebra::new(2, Variant::Sl, 3).unwrap();
        let sys = VeldkampSystem::sl(&alg).unwrap();
        assert_eq!(sys.d, parse_poly("2*x[2,1]", 3).unwrap());
    }

    #[test]
    fn lemma3_small() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        for n in 2..=4 {
            for p in [2, 3, 5] {
                let alg = LieAlgebra::new(n, Variant::Gl, p).unwrap();
                lemma3_check(&alg, 20, &mut rng).unwrap();
            }
        }
        let sl3 = LieAlgebra::new(3, Variant::Sl, 5).unwrap();
        lemma3_check(&sl3, 20, &mut rng).unwrap();
    }

    #[test]
    fn permutation_expansion_matches_determinant() {
        let sys = VeldkampSystem::gl(3, 2).unwrap();
        assert_eq!(permutation_expansion(&sys.m), sys.d);
        let sys4 = VeldkampSystem::gl(4, 3).unwrap();
        assert_eq!(permutation_expansion(&sys4.m), sys4.d);
    }

    #[test]
    fn rationality_small_cases() {
        for p in [2, 3] {
            let alg = LieAlgebra::new(2, Variant::Gl, p).unwrap();
            rationality_witness(&alg).unwrap();
        }
        let sl = LieAlgebra::new(2, Variant::Sl, 3).unwrap();
        rationality_witness(&sl).unwrap();
    }

    #[test]
    fn semiinvariance_and_non_invariance() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for (n, v, p) in [(2, Variant::Gl, 5), (3, Variant::Gl, 2), (3, Variant::Sl, 5), (2, Variant::Sl, 3)] {
            let alg = LieAlgebra::new(n, v, p).unwrap();
            semiinvariance_check(&alg, 5, &mut rng).unwrap();
            d_non_invariance_witness(&alg).unwrap();
        }
    }
}

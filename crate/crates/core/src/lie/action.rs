//! The trace-form isomorphism `θ: K[g] → S(g)` and the adjoint actions of
//! `g` and `G` on the coordinate ring.
//!
//! Convention: `(g·f)(x) = f(Ad(g)⁻¹ x)`, and `g` acts by the differential,
//! so `x·c_k = -Σ_l coeff_k([x, b_l]) c_l` on coordinate functions.

use std::collections::HashMap;

use super::{BasisElt, LieAlgebra, LieElem};
use crate::error::{Error, Result};
use crate::field::{ExtElem, ExtField, Field, PrimeField};
use crate::linalg::{mat_inverse, Mat};
use crate::poly::{Monomial, MultiPoly, Poly, Variable};
use crate::polymatrix::PolyMatrix;

/// A group element acting on polynomials by adjoint substitution.
#[derive(Clone, Debug)]
pub enum GroupElement {
    /// `diag(λ_1, …, λ_n)` over an extension field.
    Torus { field: ExtField, diag: Vec<ExtElem> },
    /// `I + t·e_ij` (1-based, `i ≠ j`) with `t` the formal variable `t`.
    Unipotent { i: u8, j: u8 },
    /// An arbitrary invertible matrix over an extension field.
    Matrix { field: ExtField, matrix: Mat<ExtElem> },
}

/// Result of [`LieAlgebra::adjoint_substitution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Acted {
    /// Polynomial over `F_p` in the coordinates and the formal `t`.
    Formal(MultiPoly),
    /// Polynomial with coefficients in the sampling field.
    Sampled(Poly<ExtField>),
}

impl LieAlgebra {
    /// Images `θ(c_k) = Σ_m G⁻¹_{km} b_m` of the coordinates, `G` the trace form.
    /// For `gl_n` this is `θ(ξ_ij) = e_ji`.
    pub fn theta_images(&self) -> Result<HashMap<Variable, MultiPoly>> {
        let ginv = self.gram_inverse()?;
        let f = self.field();
        Ok((0..self.dim())
            .map(|k| {
                let mut img = MultiPoly::zero(f);
                for (m, &c) in ginv[k].iter().enumerate() {
                    img.add_term(Monomial::var(self.lie_variable(m)), c);
                }
                (self.coordinate(k), img)
            })
            .collect())
    }

    pub fn theta(&self, f: &MultiPoly) -> Result<MultiPoly> {
        Ok(f.substitute(&self.theta_images()?))
    }

    /// Images `θ⁻¹(b_m) = Σ_k G_{mk} c_k`.
    pub fn theta_inverse_images(&self) -> Result<HashMap<Variable, MultiPoly>> {
        self.gram_inverse()?;
        let f = self.field();
        Ok((0..self.dim())
            .map(|m| {
                let mut img = MultiPoly::zero(f);
                for (k, &c) in self.gram()[m].iter().enumerate() {
                    img.add_term(Monomial::var(self.coordinate(k)), c);
                }
                (self.lie_variable(m), img)
            })
            .collect())
    }

    pub fn theta_inverse(&self, f: &MultiPoly) -> Result<MultiPoly> {
        Ok(f.substitute(&self.theta_inverse_images()?))
    }

    /// Values of the derivation `x·` on the coordinate functions.
    pub fn derivation_images(&self, x: &LieElem) -> HashMap<Variable, MultiPoly> {
        let f = self.field();
        let dim = self.dim();
        let cols: Vec<LieElem> = (0..dim).map(|l| self.bracket(x, &self.basis_elem(l))).collect();
        (0..dim)
            .map(|k| {
                let mut img = MultiPoly::zero(f);
                for (l, col) in cols.iter().enumerate() {
                    img.add_term(Monomial::var(self.coordinate(l)), f.neg(col.0[k]));
                }
                (self.coordinate(k), img)
            })
            .collect()
    }

    pub fn adjoint_derivation(&self, x: &LieElem, f: &MultiPoly) -> MultiPoly {
        f.apply_derivation(&self.derivation_images(x))
    }

    /// Values of the derivation `x·` on `S(g)`, i.e. `b_l ↦ [x, b_l]`.
    pub fn symmetric_derivation_images(&self, x: &LieElem) -> HashMap<Variable, MultiPoly> {
        (0..self.dim())
            .map(|l| (self.lie_variable(l), self.to_poly(&self.bracket(x, &self.basis_elem(l)))))
            .collect()
    }

    /// Coordinates of `g⁻¹ X g` for the generic matrix `X`, as substitution images.
    fn conjugated_coordinates<F: Field>(
        &self,
        field: &F,
        embed: impl Fn(u32) -> F::Elem,
        g: &PolyMatrix<F>,
        g_inv: &PolyMatrix<F>,
    ) -> HashMap<Variable, Poly<F>> {
        let generic = self.generic_matrix().map_field(field, &embed);
        let y = g_inv
            .mul(&generic)
            .and_then(|m| m.mul(g))
            .expect("square matrices of equal size");
        self.basis()
            .iter()
            .map(|b| {
                let img = match *b {
                    BasisElt::E(i, j) => y[(i as usize - 1, j as usize - 1)].clone(),
                    BasisElt::H(i) => {
                        let mut acc = Poly::zero(field);
                        for r in 0..i as usize {
                            acc = &acc + &y[(r, r)];
                        }
                        acc
                    }
                };
                (b.coordinate(), img)
            })
            .collect()
    }

    /// Substitution images realizing `u_ij(t) = I + t·e_ij`, with `t` formal.
    pub fn unipotent_images(&self, i: u8, j: u8) -> Result<HashMap<Variable, MultiPoly>> {
        let n = self.n();
        if i == j || i == 0 || j == 0 || i as usize > n || j as usize > n {
            return Err(Error::DegenerateInput(format!("no root subgroup for ({i},{j})")));
        }
        let k = self.field();
        let t = MultiPoly::var(k, Variable::t());
        let elementary = |sign: u32| {
            PolyMatrix::from_fn(n, n, |a, b| {
                if a == b {
                    MultiPoly::one(k)
                } else if (a + 1, b + 1) == (i as usize, j as usize) {
                    t.scale(sign)
                } else {
                    MultiPoly::zero(k)
                }
            })
        };
        let g = elementary(1);
        let g_inv = elementary(k.neg(1));
        Ok(self.conjugated_coordinates(k, |c| c, &g, &g_inv))
    }

    /// `u_ij(t)·f`, a polynomial in the formal `t`.
    pub fn act_unipotent(&self, i: u8, j: u8, f: &MultiPoly) -> Result<MultiPoly> {
        Ok(f.substitute(&self.unipotent_images(i, j)?))
    }

    /// `g·f` for a matrix over an extension field.
    pub fn act_matrix(&self, ext: &ExtField, g: &Mat<ExtElem>, f: &MultiPoly) -> Result<Poly<ExtField>> {
        let n = self.n();
        if g.len() != n || g.iter().any(|r| r.len() != n) {
            return Err(Error::Config(format!("group element must be {n}x{n}")));
        }
        if ext.characteristic() != self.p() {
            return Err(Error::Config("sampling field has the wrong characteristic".into()));
        }
        let g_inv = mat_inverse(ext, g)
            .ok_or_else(|| Error::DegenerateInput("singular group element".into()))?;
        let lift = |m: &Mat<ExtElem>| PolyMatrix::from_fn(n, n, |a, b| Poly::constant(ext, m[a][b]));
        let images = self.conjugated_coordinates(ext, |c| ext.embed(c), &lift(g), &lift(&g_inv));
        Ok(f.map_coeffs(ext, |c| ext.embed(c)).substitute(&images))
    }

    /// `diag(λ)·f`.
    pub fn act_torus(&self, ext: &ExtField, diag: &[ExtElem], f: &MultiPoly) -> Result<Poly<ExtField>> {
        if diag.len() != self.n() {
            return Err(Error::Config(format!("torus element needs {} entries", self.n())));
        }
        if diag.iter().any(|&l| ext.is_zero(l)) {
            return Err(Error::DegenerateInput("singular torus element".into()));
        }
        let g: Mat<ExtElem> = (0..diag.len())
            .map(|a| (0..diag.len()).map(|b| if a == b { diag[a] } else { ext.zero() }).collect())
            .collect();
        self.act_matrix(ext, &g, f)
    }

    pub fn adjoint_substitution(&self, g: &GroupElement, f: &MultiPoly) -> Result<Acted> {
        match g {
            GroupElement::Torus { field, diag } => self.act_torus(field, diag, f).map(Acted::Sampled),
            GroupElement::Unipotent { i, j } => self.act_unipotent(*i, *j, f).map(Acted::Formal),
            GroupElement::Matrix { field, matrix } => self.act_matrix(field, matrix, f).map(Acted::Sampled),
        }
    }

    /// Records the action convention for report headers.
    pub fn action_convention(&self) -> &'static str {
        "(g.f)(x) = f(Ad(g)^-1 x); x[i,j] has torus weight eps_j - eps_i"
    }
}

impl PolyMatrix<PrimeField> {
    /// Pushes the entries into another field of the same characteristic.
    pub fn map_field<G: Field>(&self, target: &G, embed: impl Fn(u32) -> G::Elem) -> PolyMatrix<G> {
        PolyMatrix::from_fn(self.rows(), self.cols(), |i, j| self[(i, j)].map_coeffs(target, &embed))
    }
}

#[cfg(test)]
mod tests {
    use super::super::Variant;
    use super::*;
    use crate::poly::parse_poly;
    use rand::{Rng, SeedableRng};

    fn alg(n: usize, v: Variant, p: u32) -> LieAlgebra {
        LieAlgebra::new(n, v, p).unwrap()
    }

    fn random_poly(a: &LieAlgebra, rng: &mut impl Rng, terms: usize, deg: u32) -> MultiPoly {
        let k = a.field();
        let mut f = MultiPoly::zero(k);
        for _ in 0..terms {
            let d = rng.gen_range(0..=deg);
            let m = Monomial::from_pairs(
                (0..d).map(|_| (a.coordinate(rng.gen_range(0..a.dim())), 1)),
            );
            f.add_term(m, rng.gen_range(0..k.p()));
        }
        f
    }

    #[test]
    fn theta_on_gl_is_transpose_relabeling() {
        let a = alg(2, Variant::Gl, 5);
        let f = parse_poly("1*x[1,2]", 5).unwrap();
        assert_eq!(a.theta(&f).unwrap(), parse_poly("1*e[2,1]", 5).unwrap());
        let g = parse_poly("1*x[1,1]*x[2,2]", 5).unwrap();
        assert_eq!(a.theta(&g).unwrap(), parse_poly("1*e[1,1]*e[2,2]", 5).unwrap());
    }

    #[test]
    fn theta_on_sl2_diagonal_coordinate() {
        // ξ'_11 = y[1]; θ(ξ'_11) = (1/2)·h_1 and 1/2 = 3 in F_5
        let a = alg(2, Variant::Sl, 5);
        let f = parse_poly("1*y[1]", 5).unwrap();
        assert_eq!(a.theta(&f).unwrap(), parse_poly("3*h[1]", 5).unwrap());
        let restricted = a.restrict_from_gl(&parse_poly("1*x[1,1]", 5).unwrap());
        assert_eq!(restricted, f);
    }

    #[test]
    fn theta_on_sl_with_p_dividing_n_is_unsupported() {
        let a = alg(3, Variant::Sl, 3);
        let err = a.theta(&parse_poly("1*y[1]", 3).unwrap()).unwrap_err();
        assert_eq!(err.code(), "UnsupportedCharacteristic");
    }

    #[test]
    fn theta_is_a_ring_isomorphism() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for (n, v, p) in [(2, Variant::Gl, 3), (3, Variant::Gl, 2), (3, Variant::Sl, 5), (2, Variant::Sl, 3)] {
            let a = alg(n, v, p);
            for _ in 0..20 {
                let f = random_poly(&a, &mut rng, 4, 3);
                let g = random_poly(&a, &mut rng, 4, 3);
                let tf = a.theta(&f).unwrap();
                assert_eq!(a.theta(&(&f * &g)).unwrap(), &tf * &a.theta(&g).unwrap());
                assert_eq!(a.theta_inverse(&tf).unwrap(), f);
            }
        }
    }

    #[test]
    fn derivation_signs_match_torus_weights() {
        let a = alg(2, Variant::Gl, 5);
        let e11 = a.basis_elem(a.index_of(BasisElt::E(1, 1)).unwrap());
        let xi21 = parse_poly("1*x[2,1]", 5).unwrap();
        assert_eq!(a.adjoint_derivation(&e11, &xi21), xi21);
        let xi12 = parse_poly("1*x[1,2]", 5).unwrap();
        assert_eq!(a.adjoint_derivation(&e11, &xi12), xi12.scale(4));
    }

    #[test]
    fn derivation_kills_p_th_powers_and_respects_brackets() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for (n, v, p) in [(2, Variant::Gl, 3), (3, Variant::Gl, 2), (3, Variant::Sl, 5)] {
            let a = alg(n, v, p);
            for _ in 0..10 {
                let f = random_poly(&a, &mut rng, 3, 2);
                let g = random_poly(&a, &mut rng, 3, 2);
                let x = a.basis_elem(rng.gen_range(0..a.dim()));
                let y = a.basis_elem(rng.gen_range(0..a.dim()));
                assert!(a.adjoint_derivation(&x, &f.frobenius()).is_zero());
                let leibniz = &(&a.adjoint_derivation(&x, &f) * &g) + &(&f * &a.adjoint_derivation(&x, &g));
                assert_eq!(a.adjoint_derivation(&x, &(&f * &g)), leibniz);
                let xy = a.adjoint_derivation(&a.bracket(&x, &y), &f);
                let comm = &a.adjoint_derivation(&x, &a.adjoint_derivation(&y, &f))
                    - &a.adjoint_derivation(&y, &a.adjoint_derivation(&x, &f));
                assert_eq!(xy, comm);
            }
        }
    }

    #[test]
    fn torus_scales_xi12_by_ratio() {
        let a = alg(2, Variant::Gl, 3);
        let ext = ExtField::new(3, 2).unwrap();
        let (l1, l2) = (ext.element(4), ext.element(7));
        let f = parse_poly("1*x[1,2]", 3).unwrap();
        let got = a.act_torus(&ext, &[l1, l2], &f).unwrap();
        let ratio = ext.div(l2, l1).unwrap();
        assert_eq!(got, f.map_coeffs(&ext, |c| ext.embed(c)).scale(ratio));
        assert_eq!(
            a.act_torus(&ext, &[ext.zero(), l2], &f).unwrap_err().code(),
            "DegenerateInput"
        );
    }

    #[test]
    fn unipotent_fixes_determinant() {
        let a = alg(2, Variant::Gl, 5);
        let s2 = parse_poly("1*x[1,1]*x[2,2] + 4*x[1,2]*x[2,1]", 5).unwrap();
        assert_eq!(a.act_unipotent(1, 2, &s2).unwrap(), s2);
        let d = parse_poly("4*x[2,1]", 5).unwrap();
        assert_eq!(a.act_unipotent(1, 2, &d).unwrap(), d);
        let moved = a.act_unipotent(2, 1, &d).unwrap();
        assert!(moved.mentions(|v| v == Variable::t()));
    }

    #[test]
    fn derivation_is_differential_of_unipotent_action() {
        // d/dt (u_ij(t)·f) at t = 0 equals e_ij·f
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for (n, v, p) in [(3, Variant::Gl, 5), (3, Variant::Sl, 7)] {
            let a = alg(n, v, p);
            for _ in 0..10 {
                let f = random_poly(&a, &mut rng, 3, 3);
                for (i, j) in [(1u8, 2u8), (3, 1), (2, 3)] {
                    let acted = a.act_unipotent(i, j, &f).unwrap();
                    let linear = acted.coefficients_in(Variable::t()).remove(&1).unwrap_or_else(|| MultiPoly::zero(a.field()));
                    let x = a.basis_elem(a.index_of(BasisElt::E(i, j)).unwrap());
                    assert_eq!(linear, a.adjoint_derivation(&x, &f));
                }
            }
        }
    }
}

//! Invariant subspaces of `K[g]` computed degree by degree, and the
//! dimension censuses built on them.

use std::collections::HashMap;

use serde_json::{json, Value};

use super::char_invariants;
use crate::error::{violation, Error, Result};
use crate::field::{Field, PrimeField};
use crate::lie::{BasisElt, LieAlgebra, LieElem, Variant};
use crate::linalg::{echelon_basis, kernel_basis, RowSpace};
use crate::poly::{Monomial, MultiPoly, Variable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Annihilated by the adjoint derivations.
    Lie,
    /// Fixed by the adjoint group: root subgroups and torus.
    Group,
}

/// All monomials of total degree `k` in `vars`, in ascending order.
pub fn monomials_of_degree(vars: &[Variable], k: u32) -> Vec<Monomial> {
    fn rec(vars: &[Variable], k: u32, prefix: &mut Vec<(Variable, u32)>, out: &mut Vec<Monomial>) {
        let Some((&v, rest)) = vars.split_first() else {
            if k == 0 {
                out.push(Monomial::from_pairs(prefix.iter().copied()));
            }
            return;
        };
        for e in (0..=k).rev() {
            if e > 0 {
                prefix.push((v, e));
            }
            rec(rest, k - e, prefix, out);
            if e > 0 {
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(vars, k, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Number of monomials of degree `k` in `nvars` variables.
fn monomial_count(nvars: usize, k: u32) -> u128 {
    let mut c: u128 = 1;
    for i in 1..=k as u128 {
        c = c * (nvars as u128 + i - 1) / i;
    }
    c
}

/// Coefficient vectors of homogeneous polynomials in a fixed monomial basis.
pub(crate) struct MonomialBasis {
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(vars: &[Variable], k: u32, cap: usize) -> Result<Self> {
        let count = monomial_count(vars.len(), k);
        if count > cap as u128 {
            return Err(Error::BudgetExceeded(format!(
                "{count} monomials of degree {k} exceed the cap {cap}"
            )));
        }
        let monomials = monomials_of_degree(vars, k);
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(Self { monomials, index })
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    /// Coefficients of `f` on the basis, ignoring terms outside it.
    pub fn vector(&self, f: &MultiPoly) -> Vec<u32> {
        let mut v = vec![0; self.len()];
        for (m, &c) in f.terms() {
            if let Some(&i) = self.index.get(m) {
                v[i] = c;
            }
        }
        v
    }

    /// Like `vector` but fails when `f` has terms outside the basis.
    pub fn exact_vector(&self, f: &MultiPoly) -> Result<Vec<u32>> {
        if f.terms().keys().any(|m| !self.index.contains_key(m)) {
            violation!("polynomial leaves the expected homogeneous component");
        }
        Ok(self.vector(f))
    }

    pub fn poly(&self, field: &PrimeField, v: &[u32]) -> MultiPoly {
        MultiPoly::from_terms(field, self.monomials.iter().cloned().zip(v.iter().copied()))
    }
}

/// Rows `c ↦ coefficient of m' in op(m_c)` for a linear operator on the span.
fn operator_rows(basis: &MonomialBasis, images: &[MultiPoly], rows: &mut Vec<Vec<u32>>) {
    let mut by_target: HashMap<Monomial, Vec<u32>> = HashMap::new();
    for (c, img) in images.iter().enumerate() {
        for (m, &coeff) in img.terms() {
            by_target.entry(m.clone()).or_insert_with(|| vec![0; basis.len()])[c] = coeff;
        }
    }
    let mut keyed: Vec<_> = by_target.into_iter().collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    rows.extend(keyed.into_iter().map(|(_, r)| r));
}

/// Degree-`k` polynomials annihilated by the derivations of `elements`.
pub fn invariant_subspace_for(
    alg: &LieAlgebra,
    elements: &[LieElem],
    k: u32,
    cap: usize,
) -> Result<Vec<MultiPoly>> {
    let basis = MonomialBasis::new(&alg.coordinates(), k, cap)?;
    let mut rows = Vec::new();
    for x in elements {
        let images_of_vars = alg.derivation_images(x);
        let images: Vec<MultiPoly> = basis
            .monomials
            .iter()
            .map(|m| MultiPoly::monomial(alg.field(), m.clone(), 1).apply_derivation(&images_of_vars))
            .collect();
        operator_rows(&basis, &images, &mut rows);
    }
    finish(alg, &basis, rows)
}

fn finish(alg: &LieAlgebra, basis: &MonomialBasis, rows: Vec<Vec<u32>>) -> Result<Vec<MultiPoly>> {
    let k = *alg.field();
    let kernel = kernel_basis(&k, &rows, basis.len());
    let ech = echelon_basis(&k, kernel, basis.len());
    Ok(ech.iter().map(|v| basis.poly(&k, v)).collect())
}

/// Echelonized basis of the degree-`k` invariants.
pub fn invariant_subspace(alg: &LieAlgebra, k: u32, mode: Mode, cap: usize) -> Result<Vec<MultiPoly>> {
    let all: Vec<LieElem> = (0..alg.dim()).map(|i| alg.basis_elem(i)).collect();
    if mode == Mode::Lie {
        return invariant_subspace_for(alg, &all, k, cap);
    }
    let basis = MonomialBasis::new(&alg.coordinates(), k, cap)?;
    let field = *alg.field();
    let mut rows = Vec::new();
    for x in &all {
        let images_of_vars = alg.derivation_images(x);
        let images: Vec<MultiPoly> = basis
            .monomials
            .iter()
            .map(|m| MultiPoly::monomial(&field, m.clone(), 1).apply_derivation(&images_of_vars))
            .collect();
        operator_rows(&basis, &images, &mut rows);
    }
    let n = alg.n() as u8;
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let subs = alg.unipotent_images(i, j)?;
            let mut by_power: HashMap<u32, Vec<MultiPoly>> = HashMap::new();
            for (c, m) in basis.monomials.iter().enumerate() {
                let acted = MultiPoly::monomial(&field, m.clone(), 1).substitute(&subs);
                for (e, coeff) in acted.coefficients_in(Variable::t()) {
                    if e == 0 {
                        continue;
                    }
                    by_power
                        .entry(e)
                        .or_insert_with(|| vec![MultiPoly::zero(&field); basis.len()])[c] = coeff;
                }
            }
            let mut powers: Vec<_> = by_power.into_iter().collect();
            powers.sort_by_key(|(e, _)| *e);
            for (_, images) in powers {
                operator_rows(&basis, &images, &mut rows);
            }
        }
    }
    for (c, m) in basis.monomials.iter().enumerate() {
        if !alg.monomial_weight(m).is_zero() {
            let mut r = vec![0; basis.len()];
            r[c] = 1;
            rows.push(r);
        }
    }
    finish(alg, &basis, rows)
}

/// Exponent vectors `κ` with `0 ≤ κ_i < bound` for `len` generators.
fn exponent_vectors(len: usize, bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..bound).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out
}

/// Free-basis census: in every degree `k ≤ max_degree` the products
/// `t^κ·m^p` (`0 ≤ κ_i < p`, `m` a monomial) of degree `k` are linearly
/// independent invariants and their number equals the dimension of the
/// degree-`k` invariants.
pub fn freeness_census(alg: &LieAlgebra, max_degree: u32, cap: usize) -> Result<Value> {
    alg.require_p_coprime("the free-basis statement")?;
    let family = char_invariants(alg)?;
    let field = *alg.field();
    let p = alg.p();
    let coords = alg.coordinates();
    let mut t_powers: Vec<Vec<MultiPoly>> = Vec::new();
    for t in &family.members {
        let mut pw = vec![MultiPoly::one(&field)];
        for e in 1..p {
            pw.push(&pw[e as usize - 1] * t);
        }
        t_powers.push(pw);
    }
    let kappas = exponent_vectors(family.members.len(), p);
    let mut per_degree = Vec::new();
    for k in 0..=max_degree {
        let invariants = invariant_subspace(alg, k, Mode::Lie, cap)?;
        let basis = MonomialBasis::new(&coords, k, cap)?;
        let mut inv_space = RowSpace::new(&field, basis.len());
        for f in &invariants {
            inv_space.insert(basis.exact_vector(f)?);
        }
        let mut span = RowSpace::new(&field, basis.len());
        let mut count = 0usize;
        for kappa in &kappas {
            let tdeg: u32 = kappa.iter().enumerate().map(|(i, &e)| e * family.degree(i)).sum();
            if tdeg > k || (k - tdeg) % p != 0 {
                continue;
            }
            let mut tk = MultiPoly::one(&field);
            for (i, &e) in kappa.iter().enumerate() {
                tk = &tk * &t_powers[i][e as usize];
            }
            for m in monomials_of_degree(&coords, (k - tdeg) / p) {
                let element = tk.mul_monomial(&m.pow(p), 1);
                let v = basis.exact_vector(&element)?;
                if !inv_space.contains(&v) {
                    violation!("t^{kappa:?}·({m})^p is not invariant");
                }
                if !span.insert(v) {
                    violation!("products in degree {k} are linearly dependent");
                }
                count += 1;
            }
        }
        if count != invariants.len() {
            violation!("degree {k}: {} invariants but {count} basis products", invariants.len());
        }
        per_degree.push(json!([k, invariants.len()]));
    }
    Ok(json!({"exponent_range": format!("0..{p}"), "dims": per_degree}))
}

/// Degree by degree, the invariants of `gl_n` and of `sl_n` acting on
/// `K[gl_n]` coincide.
pub fn lemma2_check(n: usize, p: u32, max_degree: u32, cap: usize) -> Result<Value> {
    let gl = LieAlgebra::new(n, Variant::Gl, p)?;
    let field = *gl.field();
    let all: Vec<LieElem> = (0..gl.dim()).map(|i| gl.basis_elem(i)).collect();
    let mut sl_elems: Vec<LieElem> = Vec::new();
    for (k, b) in gl.basis().iter().enumerate() {
        match *b {
            BasisElt::E(i, j) if i != j => sl_elems.push(gl.basis_elem(k)),
            BasisElt::E(i, _) if (i as usize) < n => {
                let next = gl.index_of(BasisElt::E(i + 1, i + 1)).expect("diagonal unit");
                sl_elems.push(gl.add(&gl.basis_elem(k), &gl.scale(&gl.basis_elem(next), field.neg(1))));
            }
            _ => {}
        }
    }
    let mut dims = Vec::new();
    for k in 0..=max_degree {
        let a = invariant_subspace_for(&gl, &all, k, cap)?;
        let b = invariant_subspace_for(&gl, &sl_elems, k, cap)?;
        let basis = MonomialBasis::new(&gl.coordinates(), k, cap)?;
        let mut space_b = RowSpace::new(&field, basis.len());
        for f in &b {
            space_b.insert(basis.vector(f));
        }
        if a.iter().any(|f| !space_b.contains(&basis.vector(f))) || a.len() != b.len() {
            violation!("degree {k}: gl-invariants {} vs sl-invariants {}", a.len(), b.len());
        }
        dims.push(json!([k, a.len()]));
    }
    Ok(json!({"dims": dims}))
}

/// On the diagonal part `h'` of `sl_n`: the trace restricts to 0, and the
/// restrictions of `s'_2, …, s'_n` are algebraically independent and span
/// the symmetric-group invariants in every degree `≤ max_degree`.
pub fn sl_restriction_quotient(alg: &LieAlgebra, max_degree: u32, cap: usize) -> Result<Value> {
    if alg.variant() != Variant::Sl {
        return Err(Error::Config("needs the sl variant".into()));
    }
    alg.require_p_coprime("the restriction to h'")?;
    let field = *alg.field();
    let n = alg.n();
    let ys: Vec<Variable> = (1..n as u8).map(Variable::Y).collect();
    let on_h = |f: &MultiPoly| {
        MultiPoly::from_terms(
            &field,
            f.terms()
                .iter()
                .filter(|(m, _)| m.pairs().iter().all(|(v, _)| matches!(v, Variable::Y(_))))
                .map(|(m, &c)| (m.clone(), c)),
        )
    };
    let sigma1 = on_h(&alg.restrict_from_gl(&super::elementary_symmetric(n, 1, alg.p())?));
    if !sigma1.is_zero() {
        violation!("the trace does not vanish on h'");
    }
    let sigmas: Vec<MultiPoly> = char_invariants(alg)?.members.iter().map(on_h).collect();
    // adjacent transpositions of diagonal entries, in the y coordinates
    let y = |i: usize| {
        if i == 0 || i == n {
            MultiPoly::zero(&field)
        } else {
            MultiPoly::var(&field, Variable::Y(i as u8))
        }
    };
    let swaps: Vec<HashMap<Variable, MultiPoly>> = (1..n)
        .map(|k| {
            let img = &(&y(k - 1) + &y(k + 1)) - &y(k);
            [(Variable::Y(k as u8), img)].into_iter().collect()
        })
        .collect();
    let mut dims = Vec::new();
    for k in 0..=max_degree {
        let basis = MonomialBasis::new(&ys, k, cap)?;
        let mut rows = Vec::new();
        for swap in &swaps {
            let images: Vec<MultiPoly> = basis
                .monomials
                .iter()
                .map(|m| {
                    let f = MultiPoly::monomial(&field, m.clone(), 1);
                    &f.substitute(swap) - &f
                })
                .collect();
            operator_rows(&basis, &images, &mut rows);
        }
        let invariants = kernel_basis(&field, &rows, basis.len());
        let mut inv_space = RowSpace::new(&field, basis.len());
        for v in &invariants {
            inv_space.insert(v.clone());
        }
        let mut span = RowSpace::new(&field, basis.len());
        let mut count = 0;
        for kappa in exponent_vectors(sigmas.len(), k + 1) {
            let deg: u32 = kappa.iter().enumerate().map(|(i, &e)| e * (i as u32 + 2)).sum();
            if deg != k {
                continue;
            }
            let mut prod = MultiPoly::one(&field);
            for (s, &e) in sigmas.iter().zip(&kappa) {
                prod = &prod * &s.pow(e);
            }
            let v = basis.exact_vector(&prod)?;
            if !inv_space.contains(&v) {
                violation!("a product of restricted invariants is not symmetric");
            }
            if !span.insert(v) {
                violation!("restricted invariants are dependent in degree {k}");
            }
            count += 1;
        }
        if count != invariants.len() {
            violation!("degree {k}: {} symmetric polynomials, {count} products", invariants.len());
        }
        dims.push(json!([k, count]));
    }
    Ok(json!({"dims": dims}))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::gl_invariants;

    const CAP: usize = 100_000;

    #[test]
    fn monomial_enumeration_counts() {
        let vars: Vec<Variable> = (1..=4).map(|i| Variable::X(1, i)).collect();
        assert_eq!(monomials_of_degree(&vars, 3).len(), 20);
        assert_eq!(monomial_count(4, 3), 20);
        assert_eq!(monomials_of_degree(&vars, 0), vec![Monomial::one()]);
    }

    #[test]
    fn linear_group_invariants_of_gl2_are_the_trace() {
        let alg = LieAlgebra::new(2, Variant::Gl, 3).unwrap();
        let inv = invariant_subspace(&alg, 1, Mode::Group, CAP).unwrap();
        assert_eq!(inv, vec![gl_invariants(2, 3).unwrap()[0].clone()]);
    }

    #[test]
    fn frobenius_square_is_lie_but_not_group_invariant() {
        let alg = LieAlgebra::new(2, Variant::Gl, 2).unwrap();
        let lie = invariant_subspace(&alg, 2, Mode::Lie, CAP).unwrap();
        let group = invariant_subspace(&alg, 2, Mode::Group, CAP).unwrap();
        let basis = MonomialBasis::new(&alg.coordinates(), 2, CAP).unwrap();
        let field = *alg.field();
        let sq = MultiPoly::var(&field, Variable::X(1, 2)).pow(2);
        let contains = |space: &[MultiPoly]| {
            let mut rs = RowSpace::new(&field, basis.len());
            for f in space {
                rs.insert(basis.vector(f));
            }
            rs.contains(&basis.vector(&sq))
        };
        assert!(contains(&lie));
        assert!(!contains(&group));
    }

    #[test]
    fn degree_two_lie_invariants_gl2_p3() {
        let alg = LieAlgebra::new(2, Variant::Gl, 3).unwrap();
        // s_1², s_2 and no p-th powers below degree 3
        assert_eq!(invariant_subspace(&alg, 2, Mode::Lie, CAP).unwrap().len(), 2);
    }

    #[test]
    fn budget_is_enforced() {
        let alg = LieAlgebra::new(3, Variant::Gl, 3).unwrap();
        let err = invariant_subspace(&alg, 6, Mode::Lie, 100).unwrap_err();
        assert_eq!(err.code(), "BudgetExceeded");
    }

    #[test]
    fn small_censuses() {
        let gl2 = LieAlgebra::new(2, Variant::Gl, 2).unwrap();
        freeness_census(&gl2, 4, CAP).unwrap();
        lemma2_check(2, 2, 3, CAP).unwrap();
        let sl3 = LieAlgebra::new(3, Variant::Sl, 5).unwrap();
        sl_restriction_quotient(&sl3, 4, CAP).unwrap();
    }
}

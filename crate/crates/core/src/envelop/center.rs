//! Central and `G`-invariant elements of `U_k`, the Harish-Chandra maps
//! and the central generators `u_i`.

use std::collections::{BTreeMap, HashMap};

use serde_json::{json, Value};

use super::{mono_degree, Mono, Pbw, PbwElem};
use crate::error::{violation, Error, Result};
use crate::field::Field;
use crate::invariants::char_invariants;
use crate::invariants::veldkamp_show as show;
use crate::lie::{BasisElt, LieAlgebra, Part, Variant};
use crate::linalg::{echelon_basis, kernel_basis, solve_or_kernel, RowSpace};
use crate::poly::{Monomial, MultiPoly, Variable};

/// Coordinates of elements of `U_k` in the PBW monomial basis.
struct Space {
    monos: Vec<Mono>,
    index: HashMap<Mono, usize>,
}

impl Space {
    fn new(pbw: &Pbw, k: u32, cap: usize) -> Result<Self> {
        let monos = pbw.monomials_up_to(k, cap)?;
        let index = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        Ok(Self { monos, index })
    }

    fn len(&self) -> usize {
        self.monos.len()
    }

    fn vector(&self, u: &PbwElem) -> Result<Vec<u32>> {
        let mut v = vec![0; self.len()];
        for (m, &c) in u.terms() {
            match self.index.get(m) {
                Some(&i) => v[i] = c,
                None => violation!("element leaves the filtered piece (degree {})", mono_degree(m)),
            }
        }
        Ok(v)
    }

    fn element(&self, pbw: &Pbw, v: &[u32]) -> PbwElem {
        v.iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .fold(pbw.zero(), |acc, (i, &c)| pbw.add(&acc, &pbw.monomial(self.monos[i].clone(), c)))
    }
}

fn transpose(cols: &[Vec<u32>], nrows: usize) -> Vec<Vec<u32>> {
    (0..nrows)
        .map(|r| cols.iter().map(|c| c[r]).collect::<Vec<u32>>())
        .filter(|row| row.iter().any(|&x| x != 0))
        .collect()
}

/// Echelonized basis of `Z ∩ U_k`, found as the common kernel of `ad b`
/// over all basis elements `b`.
pub fn center_basis(pbw: &Pbw, k: u32, cap: usize) -> Result<Vec<PbwElem>> {
    let space = Space::new(pbw, k, cap)?;
    let mut rows = Vec::new();
    for g in 0..pbw.dim() {
        let x = pbw.generator(g);
        let cols = space
            .monos
            .iter()
            .map(|m| space.vector(&pbw.commutator(&x, &pbw.monomial(m.clone(), 1))))
            .collect::<Result<Vec<_>>>()?;
        rows.extend(transpose(&cols, space.len()));
    }
    let field = pbw.field();
    let kernel = kernel_basis(field, &rows, space.len());
    Ok(echelon_basis(field, kernel, space.len()).iter().map(|v| space.element(pbw, v)).collect())
}

/// `Ad(I + t e_ij)` on each basis element, as coefficients of `1, t, t²`.
fn unipotent_images(pbw: &Pbw, i: u8, j: u8) -> Result<Vec<[PbwElem; 3]>> {
    let alg = pbw.algebra();
    let e = alg.basis_elem(
        alg.index_of(BasisElt::E(i, j))
            .ok_or_else(|| Error::DegenerateInput(format!("no e[{i},{j}] in {}", alg.name())))?,
    );
    let (ri, rj) = (i as usize - 1, j as usize - 1);
    (0..alg.dim())
        .map(|l| {
            let b = alg.basis_elem(l);
            let m = alg.matrix_of(&b);
            // E b E = b_ji E
            let mut ebe = vec![vec![0; alg.n()]; alg.n()];
            ebe[ri][rj] = alg.field().neg(m[rj][ri]);
            Ok([pbw.from_lie(&b), pbw.from_lie(&alg.bracket(&e, &b)), pbw.from_lie(&alg.from_matrix(&ebe)?)])
        })
        .collect()
}

fn tpoly_mul(pbw: &Pbw, a: &[PbwElem], b: &[PbwElem]) -> Vec<PbwElem> {
    let mut out = vec![pbw.zero(); a.len() + b.len() - 1];
    for (r, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (s, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[r + s] = pbw.add(&out[r + s], &pbw.mul(x, y));
            }
        }
    }
    out
}

/// The PBW monomials of `U_k` and a constraint matrix over them whose
/// kernel is `U^G ∩ U_k`: torus weight zero, and every positive power of
/// `t` vanishes in `Ad(I + t e_ij)(u)` for all `i ≠ j`.
pub fn group_invariance_constraints(pbw: &Pbw, k: u32, cap: usize) -> Result<(Vec<Mono>, Vec<Vec<u32>>)> {
    let alg = pbw.algebra();
    let space = Space::new(pbw, k, cap)?;
    let mut rows = Vec::new();
    for (c, m) in space.monos.iter().enumerate() {
        if !alg.monomial_weight(&pbw.symbol_monomial(m)).is_zero() {
            let mut row = vec![0; space.len()];
            row[c] = 1;
            rows.push(row);
        }
    }
    let n = alg.n() as u8;
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let images = unipotent_images(pbw, i, j)?;
            let mut cols = Vec::with_capacity(space.len());
            let mut max_t = 0;
            let mut col_polys = Vec::with_capacity(space.len());
            for m in &space.monos {
                let mut acc = vec![pbw.one()];
                for (g, &e) in m.iter().enumerate() {
                    for _ in 0..e {
                        acc = tpoly_mul(pbw, &acc, &images[g]);
                    }
                }
                max_t = max_t.max(acc.len());
                col_polys.push(acc);
            }
            for acc in &col_polys {
                let mut v = Vec::new();
                for r in 1..max_t {
                    match acc.get(r) {
                        Some(u) => v.extend(space.vector(u)?),
                        None => v.extend(std::iter::repeat(0).take(space.len())),
                    }
                }
                cols.push(v);
            }
            rows.extend(transpose(&cols, (max_t.max(1) - 1) * space.len()));
        }
    }
    Ok((space.monos, rows))
}

/// Echelonized basis of `U^G ∩ U_k`.
pub fn group_invariants(pbw: &Pbw, k: u32, cap: usize) -> Result<Vec<PbwElem>> {
    let (monos, rows) = group_invariance_constraints(pbw, k, cap)?;
    let field = pbw.field();
    let kernel = kernel_basis(field, &rows, monos.len());
    let space = Space { index: HashMap::new(), monos };
    Ok(echelon_basis(field, kernel, space.len()).iter().map(|v| space.element(pbw, v)).collect())
}

fn is_torus_variable(alg: &LieAlgebra, v: Variable) -> bool {
    alg.index_of_lie_variable(v).is_some_and(|k| alg.part(k) == Part::Torus)
}

/// `Ψ`: the part of the PBW expansion with no `n⁻` or `n⁺` factors, as a
/// polynomial in the torus generators.
pub fn psi(pbw: &Pbw, u: &PbwElem) -> MultiPoly {
    let alg = pbw.algebra();
    MultiPoly::from_terms(
        pbw.field(),
        u.terms()
            .iter()
            .filter(|(m, _)| m.iter().enumerate().all(|(k, &e)| e == 0 || alg.part(k) == Part::Torus))
            .map(|(m, &c)| (pbw.symbol_monomial(m), c)),
    )
}

/// `Φ`: the same projection on `S(g)`.
pub fn phi(alg: &LieAlgebra, f: &MultiPoly) -> MultiPoly {
    MultiPoly::from_terms(
        f.field(),
        f.terms()
            .iter()
            .filter(|(m, _)| m.pairs().iter().all(|&(v, _)| is_torus_variable(alg, v)))
            .map(|(m, &c)| (m.clone(), c)),
    )
}

/// `γ`: `h ↦ h - ρ(h)` on the torus generators.
pub fn gamma(alg: &LieAlgebra, f: &MultiPoly) -> Result<MultiPoly> {
    let rho = alg.root_data()?.rho;
    let field = alg.field();
    let images: HashMap<Variable, MultiPoly> = alg
        .torus_indices()
        .into_iter()
        .zip(rho)
        .map(|(k, r)| {
            let v = alg.lie_variable(k);
            let mut img = MultiPoly::var(field, v);
            img.add_term(Monomial::one(), field.neg(r));
            (v, img)
        })
        .collect();
    Ok(f.substitute(&images))
}

/// Whether a polynomial in the torus generators is invariant under the
/// permutations of the diagonal entries.
fn is_weyl_symmetric(alg: &LieAlgebra, f: &MultiPoly) -> bool {
    let field = alg.field();
    let n = alg.n();
    let diag = |i: usize| MultiPoly::var(field, Variable::E(i as u8, i as u8));
    let to_diag: HashMap<Variable, MultiPoly> = match alg.variant() {
        Variant::Gl => HashMap::new(),
        Variant::Sl => (1..n).map(|i| (Variable::H(i as u8), &diag(i) - &diag(i + 1))).collect(),
    };
    let g = f.substitute(&to_diag);
    (1..n).all(|i| {
        let swap: HashMap<Variable, MultiPoly> = [
            (Variable::E(i as u8, i as u8), diag(i + 1)),
            (Variable::E(i as u8 + 1, i as u8 + 1), diag(i)),
        ]
        .into_iter()
        .collect();
        g.substitute(&swap) == g
    })
}

/// A central element `u_i` with `gr(u_i) = θ(t_i)`.
#[derive(Clone, Debug)]
pub struct CentralElement {
    /// 1-based index into the invariant family.
    pub index: usize,
    pub degree: u32,
    pub element: PbwElem,
    /// `θ(t_i)`.
    pub symbol: MultiPoly,
    /// `Φ(θ(t_i))`, or `None` for lifts that bypass the shift.
    pub target: Option<MultiPoly>,
    /// `dim U^G ∩ U_degree`.
    pub invariant_dim: usize,
}

impl CentralElement {
    pub fn to_json(&self, pbw: &Pbw) -> Value {
        json!({
            "index": self.index,
            "degree": self.degree,
            "element": pbw.format(&self.element),
            "pbw": pbw.to_json(&self.element),
            "symbol": show(&self.symbol),
            "target": self.target.as_ref().map(show),
            "invariant_dim": self.invariant_dim,
        })
    }
}

fn family_member(alg: &LieAlgebra, i: usize) -> Result<(u32, MultiPoly)> {
    let fam = char_invariants(alg)?;
    if i == 0 || i > fam.members.len() {
        return Err(Error::Config(format!(
            "index {i} out of range 1..={} for {}",
            fam.members.len(),
            alg.name()
        )));
    }
    Ok((fam.degree(i - 1), alg.theta(&fam.members[i - 1])?))
}

/// Solves `γΨ(u) = Φ(θ(t_i))` inside `U^G ∩ U_{deg t_i}`, then checks
/// uniqueness, centrality and `gr(u) = θ(t_i)`.
pub fn compute_u(pbw: &Pbw, i: usize, cap: usize) -> Result<CentralElement> {
    let alg = pbw.algebra();
    let (degree, symbol) = family_member(alg, i)?;
    alg.root_data()?;
    let target = phi(alg, &symbol);
    if !is_weyl_symmetric(alg, &target) {
        violation!("Φ(θ(t_{i})) is not symmetric");
    }
    let invariants = group_invariants(pbw, degree, cap)?;
    let images = invariants
        .iter()
        .map(|u| gamma(alg, &psi(pbw, u)))
        .collect::<Result<Vec<_>>>()?;
    let mut monos: Vec<Monomial> = images.iter().chain([&target]).flat_map(|f| f.terms().keys().cloned()).collect();
    monos.sort();
    monos.dedup();
    let a: Vec<Vec<u32>> = monos.iter().map(|m| images.iter().map(|f| f.coefficient(m)).collect()).collect();
    let b: Vec<u32> = monos.iter().map(|m| target.coefficient(m)).collect();
    let sol = match solve_or_kernel(pbw.field(), &a, images.len(), Some(&b)) {
        Ok(sol) => sol,
        Err(Error::NoSolution) => violation!("γΨ(u) = Φ(θ(t_{i})) has no solution in U^G ∩ U_{degree}"),
        Err(e) => return Err(e),
    };
    if !sol.kernel.is_empty() {
        violation!("γΨ is not injective on U^G ∩ U_{degree} (kernel dimension {})", sol.kernel.len());
    }
    let coeffs = sol.particular.expect("solution present");
    let element = invariants
        .iter()
        .zip(&coeffs)
        .fold(pbw.zero(), |acc, (u, &c)| pbw.add(&acc, &pbw.scale(u, c)));
    if !pbw.is_central(&element) {
        violation!("u_{i} is not central");
    }
    if pbw.gr(&element) != symbol {
        violation!("gr(u_{i}) differs from θ(t_{i})");
    }
    if gamma(alg, &psi(pbw, &element))? != target {
        violation!("γΨ(u_{i}) differs from Φ(θ(t_{i}))");
    }
    Ok(CentralElement { index: i, degree, element, symbol, target: Some(target), invariant_dim: invariants.len() })
}

/// A `G`-invariant central element with `gr = θ(t_i)` chosen by the
/// echelon form, for algebras where the shift `γ` is undefined.
pub fn lift_u(pbw: &Pbw, i: usize, cap: usize) -> Result<CentralElement> {
    let alg = pbw.algebra();
    let (degree, symbol) = family_member(alg, i)?;
    let invariants = group_invariants(pbw, degree, cap)?;
    let tops: Vec<MultiPoly> = invariants
        .iter()
        .map(|u| {
            let g = pbw.gr(u);
            if g.degree() == Some(degree) {
                g
            } else {
                MultiPoly::zero(pbw.field())
            }
        })
        .collect();
    let mut monos: Vec<Monomial> = tops.iter().chain([&symbol]).flat_map(|f| f.terms().keys().cloned()).collect();
    monos.sort();
    monos.dedup();
    let a: Vec<Vec<u32>> = monos.iter().map(|m| tops.iter().map(|f| f.coefficient(m)).collect()).collect();
    let b: Vec<u32> = monos.iter().map(|m| symbol.coefficient(m)).collect();
    let sol = match solve_or_kernel(pbw.field(), &a, tops.len(), Some(&b)) {
        Ok(sol) => sol,
        Err(Error::NoSolution) => violation!("no G-invariant lift of θ(t_{i}) in U_{degree}"),
        Err(e) => return Err(e),
    };
    let coeffs = sol.particular.expect("solution present");
    let element = invariants
        .iter()
        .zip(&coeffs)
        .fold(pbw.zero(), |acc, (u, &c)| pbw.add(&acc, &pbw.scale(u, c)));
    if !pbw.is_central(&element) {
        violation!("the lift of θ(t_{i}) is not central");
    }
    if pbw.gr(&element) != symbol {
        violation!("gr of the lift differs from θ(t_{i})");
    }
    Ok(CentralElement { index: i, degree, element, symbol, target: None, invariant_dim: invariants.len() })
}

fn central_generators(pbw: &Pbw, cap: usize) -> Result<(Vec<CentralElement>, &'static str)> {
    let m = char_invariants(pbw.algebra())?.members.len();
    match pbw.algebra().root_data() {
        Ok(_) => Ok(((1..=m).map(|i| compute_u(pbw, i, cap)).collect::<Result<_>>()?, "harish-chandra")),
        Err(Error::UnsupportedCharacteristic(_)) => {
            Ok(((1..=m).map(|i| lift_u(pbw, i, cap)).collect::<Result<_>>()?, "invariant-lift"))
        }
        Err(e) => Err(e),
    }
}

/// For the computed `u_i` and their pairwise products: the top component
/// of `γΨ(u)` and of `Ψ(u)` both equal `Φ(gr(u))`, and `γΨ` is
/// multiplicative on the products.
pub fn gr_compatibility_check(pbw: &Pbw, cap: usize) -> Result<Value> {
    let alg = pbw.algebra();
    let us = (1..=char_invariants(alg)?.members.len())
        .map(|i| compute_u(pbw, i, cap))
        .collect::<Result<Vec<_>>>()?;
    let mut samples: Vec<(String, PbwElem)> = us.iter().map(|u| (format!("u{}", u.index), u.element.clone())).collect();
    for a in 0..us.len() {
        for b in a..us.len() {
            let prod = pbw.mul(&us[a].element, &us[b].element);
            let (ga, gb) = (gamma(alg, &psi(pbw, &us[a].element))?, gamma(alg, &psi(pbw, &us[b].element))?);
            if gamma(alg, &psi(pbw, &prod))? != &ga * &gb {
                violation!("γΨ(u{}·u{}) is not the product of the images", a + 1, b + 1);
            }
            samples.push((format!("u{}*u{}", a + 1, b + 1), prod));
        }
    }
    let mut checked = Vec::new();
    for (name, u) in &samples {
        let top = phi(alg, &pbw.gr(u));
        if top.is_zero() {
            violation!("Φ(gr({name})) vanishes");
        }
        let ps = psi(pbw, u);
        let gps = gamma(alg, &ps)?;
        if gps.leading_form() != top || ps.leading_form() != top {
            violation!("gr-compatibility fails for {name}");
        }
        checked.push(json!({"sample": name, "phi_gr": show(&top)}));
    }
    Ok(json!({"samples": checked}))
}

/// `U^G ∩ U_j ⊆ Z ∩ U_j` for `j ≤ k`.
pub fn group_invariants_in_center_check(pbw: &Pbw, k: u32, cap: usize) -> Result<Value> {
    let mut dims = Vec::new();
    for j in 0..=k {
        let inv = group_invariants(pbw, j, cap)?;
        for u in &inv {
            if !pbw.is_central(u) {
                violation!("G-invariant element {} is not central", pbw.format(u));
            }
        }
        let centre = center_basis(pbw, j, cap)?;
        dims.push(json!([j, inv.len(), centre.len()]));
    }
    Ok(json!({"dims": dims, "columns": ["degree", "dim U^G", "dim Z"]}))
}

/// Exponent vectors `β ∈ ℕ^len` with `|β| ≤ max`.
fn exponent_vectors(len: usize, max: u32) -> Vec<Vec<u32>> {
    fn rec(len: usize, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=max {
            prefix.push(e);
            rec(len, max - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(len, max, &mut Vec::new(), &mut out);
    out
}

/// For each filtration degree `k ≤ D`: the products `u^κ · η(b)^β`
/// (`0 ≤ κ_i < p`) of filtration degree `≤ k` are linearly independent,
/// central, and as many as `dim Z ∩ U_k`.
pub fn veldkamp_center_census(pbw: &Pbw, max_degree: u32, cap: usize) -> Result<Value> {
    let alg = pbw.algebra();
    let p = alg.p();
    let (us, method) = central_generators(pbw, cap)?;
    let etas: Vec<PbwElem> = (0..alg.dim()).map(|k| pbw.eta_of(&alg.basis_elem(k))).collect();

    let mut powers: HashMap<(usize, u32), PbwElem> = HashMap::new();
    let mut power = |elems: &[PbwElem], offset: usize, g: usize, e: u32| -> PbwElem {
        powers.entry((offset + g, e)).or_insert_with(|| pbw.pow(&elems[g], e)).clone()
    };
    let u_elems: Vec<PbwElem> = us.iter().map(|u| u.element.clone()).collect();

    // (filtration degree, element), all of degree ≤ D
    let mut products: Vec<(u32, PbwElem)> = Vec::new();
    let kappas = exponent_vectors(us.len(), (p - 1) * us.len() as u32)
        .into_iter()
        .filter(|k| k.iter().all(|&e| e < p));
    let betas = exponent_vectors(alg.dim(), max_degree / p);
    for kappa in kappas {
        let du: u32 = kappa.iter().zip(&us).map(|(&e, u)| e * u.degree).sum();
        if du > max_degree {
            continue;
        }
        let mut base = pbw.one();
        for (g, &e) in kappa.iter().enumerate() {
            if e > 0 {
                base = pbw.mul(&base, &power(&u_elems, 0, g, e));
            }
        }
        for beta in &betas {
            let deg = du + p * beta.iter().sum::<u32>();
            if deg > max_degree {
                continue;
            }
            let mut prod = base.clone();
            for (g, &e) in beta.iter().enumerate() {
                if e > 0 {
                    prod = pbw.mul(&prod, &power(&etas, u_elems.len(), g, e));
                }
            }
            if prod.degree() != Some(deg) {
                violation!("a product has filtration degree {:?}, expected {deg}", prod.degree());
            }
            products.push((deg, prod));
        }
    }

    let space = Space::new(pbw, max_degree, cap)?;
    let field = pbw.field();
    let mut rows = Vec::new();
    for k in 0..=max_degree {
        let centre = center_basis(pbw, k, cap)?;
        let mut span = RowSpace::new(field, space.len());
        for z in &centre {
            span.insert(space.vector(z)?);
        }
        let mut independent = RowSpace::new(field, space.len());
        let mut count = 0;
        for (_, prod) in products.iter().filter(|(d, _)| *d <= k) {
            count += 1;
            let v = space.vector(prod)?;
            if !span.contains(&v) {
                violation!("a product of degree ≤ {k} is not central");
            }
            if !independent.insert(v) {
                violation!("products of degree ≤ {k} are linearly dependent");
            }
        }
        if count != centre.len() {
            violation!("degree {k}: {count} products but dim Z ∩ U_{k} = {}", centre.len());
        }
        rows.push(json!([k, centre.len(), count]));
    }
    let gens: BTreeMap<String, Value> = us.iter().map(|u| (format!("u{}", u.index), json!(pbw.format(&u.element)))).collect();
    Ok(json!({
        "exponent_range": format!("0..{p}"),
        "generators": gens,
        "generator_method": method,
        "dims": rows,
        "columns": ["degree", "dim Z", "products"],
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pbw(n: usize, v: Variant, p: u32) -> Pbw {
        Pbw::new(&LieAlgebra::new(n, v, p).unwrap())
    }

    #[test]
    fn linear_central_elements_of_gl2() {
        for p in [2, 3, 5] {
            let pbw = pbw(2, Variant::Gl, p);
            let z = center_basis(&pbw, 1, 1000).unwrap();
            assert_eq!(z.len(), 2);
            let g = group_invariants(&pbw, 1, 1000).unwrap();
            assert_eq!(g.len(), 2);
            let trace = pbw.add(&pbw.generator(1), &pbw.generator(2));
            assert!(z.iter().any(|u| *u == trace));
        }
    }

    #[test]
    fn p_centre_lies_in_centre() {
        let pbw = pbw(2, Variant::Gl, 3);
        let z = center_basis(&pbw, 3, 10_000).unwrap();
        let e12 = pbw.pow(&pbw.generator(3), 3);
        let space = Space::new(&pbw, 3, 10_000).unwrap();
        let mut span = RowSpace::new(pbw.field(), space.len());
        for u in &z {
            span.insert(space.vector(u).unwrap());
        }
        assert!(span.contains(&space.vector(&e12).unwrap()));
    }

    #[test]
    fn harish_chandra_projection_examples() {
        let pbw = pbw(2, Variant::Gl, 5);
        let alg = pbw.algebra();
        let (e21, e12) = (pbw.generator(0), pbw.generator(3));
        assert!(psi(&pbw, &pbw.mul(&e21, &e12)).is_zero());
        let expected = crate::poly::parse_poly("1*e[1,1] + 4*e[2,2]", 5).unwrap();
        assert_eq!(psi(&pbw, &pbw.mul(&e12, &e21)), expected);
        let shifted = gamma(alg, &MultiPoly::var(alg.field(), Variable::E(1, 1))).unwrap();
        assert_eq!(shifted, crate::poly::parse_poly("1*e[1,1] + 2", 5).unwrap());
        let sl = LieAlgebra::new(2, Variant::Sl, 5).unwrap();
        let h = gamma(&sl, &MultiPoly::var(sl.field(), Variable::H(1))).unwrap();
        assert_eq!(h, crate::poly::parse_poly("1*h[1] + 4", 5).unwrap());
        let gl2p2 = LieAlgebra::new(2, Variant::Gl, 2).unwrap();
        assert_eq!(gamma(&gl2p2, &expected).unwrap_err().code(), "UnsupportedCharacteristic");
    }

    #[test]
    fn first_generator_of_gl2_is_the_trace() {
        let pbw = pbw(2, Variant::Gl, 5);
        let u1 = compute_u(&pbw, 1, 1000).unwrap();
        assert_eq!(u1.element, pbw.add(&pbw.generator(1), &pbw.generator(2)));
        let u2 = compute_u(&pbw, 2, 1000).unwrap();
        assert_eq!(u2.degree, 2);
        assert!(pbw.is_central(&u2.element));
    }

    #[test]
    fn sl2_casimir() {
        for p in [3, 5] {
            let pbw = pbw(2, Variant::Sl, p);
            let u = compute_u(&pbw, 1, 1000).unwrap();
            assert_eq!(u.element.degree(), Some(2));
            assert_eq!(pbw.gr(&u.element), u.symbol);
        }
    }

    #[test]
    fn gl2_char2_invariants() {
        let pbw = pbw(2, Variant::Gl, 2);
        assert_eq!(compute_u(&pbw, 1, 1000).unwrap_err().code(), "UnsupportedCharacteristic");
        let g = group_invariants(&pbw, 2, 1000).unwrap();
        let z = center_basis(&pbw, 2, 1000).unwrap();
        assert_eq!(g.len(), 4);
        assert!(z.len() > g.len());
        let lift = lift_u(&pbw, 2, 1000).unwrap();
        assert_eq!(pbw.gr(&lift.element), lift.symbol);
    }
}

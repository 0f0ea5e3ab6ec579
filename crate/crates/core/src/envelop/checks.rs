//! Verifications in `U(g)`: Jacobson additivity, the p-centre, PBW
//! confluence and the enveloping-algebra form of the first-row system.

use rand::Rng;
use serde_json::{json, Value};

use super::{Pbw, PbwElem};
use crate::error::{violation, Error, Result};
use crate::field::Field;
use crate::invariants::veldkamp_show as show;
use crate::invariants::VeldkampSystem;
use crate::lie::{BasisElt, LieAlgebra, Variant};
use crate::poly::{Monomial, MultiPoly, Variable};

/// `η(x + y) = η(x) + η(y)` for all pairs of distinct basis elements.
pub fn jacobson_additivity_check(pbw: &Pbw) -> Result<Value> {
    let alg = pbw.algebra();
    let etas: Vec<PbwElem> = (0..alg.dim()).map(|k| pbw.eta_of(&alg.basis_elem(k))).collect();
    let mut pairs = 0;
    for a in 0..alg.dim() {
        for b in (a + 1)..alg.dim() {
            let sum = alg.add(&alg.basis_elem(a), &alg.basis_elem(b));
            if pbw.eta_of(&sum) != pbw.add(&etas[a], &etas[b]) {
                violation!("η({} + {}) is not additive", alg.basis()[a], alg.basis()[b]);
            }
            pairs += 1;
        }
    }
    Ok(json!({"pairs": pairs}))
}

/// Every `η(b_k)` commutes with every basis element.
pub fn p_centre_centrality_check(pbw: &Pbw) -> Result<Value> {
    let alg = pbw.algebra();
    for k in 0..alg.dim() {
        let eta = pbw.eta_of(&alg.basis_elem(k));
        if !pbw.is_central(&eta) {
            violation!("η({}) is not central", alg.basis()[k]);
        }
    }
    Ok(json!({"generators": alg.dim(), "eta_e_first": pbw.format(&pbw.eta_of(&alg.basis_elem(0)))}))
}

fn random_elem<R: Rng + ?Sized>(pbw: &Pbw, rng: &mut R, max_deg: u32) -> PbwElem {
    let mut out = pbw.zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut m = vec![0u16; pbw.dim()];
        for _ in 0..rng.gen_range(0..=max_deg) {
            m[rng.gen_range(0..pbw.dim())] += 1;
        }
        out = pbw.add(&out, &pbw.monomial(m, rng.gen_range(1..pbw.field().p())));
    }
    out
}

/// Random triples: both association orders agree; on nonzero pairs the
/// filtration degree adds and the symbols multiply.
pub fn pbw_confluence_check<R: Rng + ?Sized>(pbw: &Pbw, samples: usize, rng: &mut R) -> Result<Value> {
    for s in 0..samples {
        let (a, b, c) = (random_elem(pbw, rng, 2), random_elem(pbw, rng, 2), random_elem(pbw, rng, 2));
        let ab = pbw.mul(&a, &b);
        if pbw.mul(&ab, &c) != pbw.mul(&a, &pbw.mul(&b, &c)) {
            violation!("sample {s}: (ab)c differs from a(bc)");
        }
        if !a.is_zero() && !b.is_zero() {
            if ab.degree() != Some(a.degree().unwrap_or(0) + b.degree().unwrap_or(0)) {
                violation!("sample {s}: deg(ab) is not deg a + deg b");
            }
            if pbw.gr(&ab) != &pbw.gr(&a) * &pbw.gr(&b) {
                violation!("sample {s}: gr(ab) is not gr(a)·gr(b)");
            }
        }
    }
    Ok(json!({"samples": samples, "memo_entries": pbw.cache_len()}))
}

/// The map `f^p ↦ η(θ(f))`, with `η(b)` written as the abstract
/// p-centre variable of `b`.
fn transport(alg: &LieAlgebra, twisted: &MultiPoly) -> Result<MultiPoly> {
    let p = alg.p();
    let mut root = MultiPoly::zero(alg.field());
    for (m, &c) in twisted.terms() {
        if m.pairs().iter().any(|&(_, e)| e % p != 0) {
            violation!("{m} is not a p-th power");
        }
        root.add_term(Monomial::from_pairs(m.pairs().iter().map(|&(v, e)| (v, e / p))), c);
    }
    Ok(alg.theta(&root)?.relabel(|v| match v {
        Variable::E(i, j) => Variable::Z(i, j),
        Variable::H(i) => Variable::Zh(i),
        other => other,
    }))
}

/// `η(θ(x[1,j]))`: the p-centre variable of `e[j,1]`.
fn first_row_centre_variable(variant: Variant, v: Variable) -> bool {
    match variant {
        Variant::Gl => matches!(v, Variable::Z(_, 1)),
        Variant::Sl => matches!(v, Variable::Z(j, 1) if j >= 2),
    }
}

/// Applies `η∘θ` to the Frobenius-twisted system and checks
/// `𝓜·e = η(θ(s)) + r̃` with `𝓜`, `r̃` free of the first-column p-centre
/// variables.
fn transported_identity(alg: &LieAlgebra, sys: &VeldkampSystem) -> Result<Value> {
    let n = alg.n();
    let tw = |f: &MultiPoly| transport(alg, &f.frobenius());
    let m: Vec<Vec<MultiPoly>> = (0..n)
        .map(|i| (0..n).map(|j| tw(&sys.m[(i, j)])).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    let e = sys.c.iter().map(tw).collect::<Result<Vec<_>>>()?;
    let s = sys.s.iter().map(tw).collect::<Result<Vec<_>>>()?;
    let r = sys.r.iter().map(tw).collect::<Result<Vec<_>>>()?;
    let first = |v| first_row_centre_variable(alg.variant(), v);
    for i in 0..n {
        let lhs = (0..n).fold(MultiPoly::zero(alg.field()), |acc, j| &acc + &(&m[i][j] * &e[j]));
        if lhs != &s[i] + &r[i] {
            violation!("row {} of the transported identity fails", i + 1);
        }
        if r[i].mentions(first) || m[i].iter().any(|x| x.mentions(first)) {
            violation!("row {} leaves the subalgebra without first-column generators", i + 1);
        }
    }
    if alg.variant() == Variant::Gl {
        for (i, ei) in e.iter().enumerate() {
            if *ei != MultiPoly::var(alg.field(), Variable::Z(i as u8 + 1, 1)) {
                violation!("component {} of e is not η(e[{},1])", i + 1, i + 1);
            }
        }
    }
    Ok(json!({"e": e.iter().map(show).collect::<Vec<_>>(), "r_tilde": r.iter().map(show).collect::<Vec<_>>()}))
}

/// Expands both sides of `𝓜·e = η(θ(s)) + η(θ(r))` in PBW normal form.
fn direct_identity(pbw: &Pbw, sys: &VeldkampSystem) -> Result<Value> {
    let alg = pbw.algebra();
    let n = alg.n();
    let et = |f: &MultiPoly| pbw.eta_theta(f);
    let e = sys.c.iter().map(et).collect::<Result<Vec<_>>>()?;
    if alg.variant() == Variant::Gl {
        for (i, ei) in e.iter().enumerate() {
            let k = alg.index_of(BasisElt::E(i as u8 + 1, 1)).expect("basis element");
            let expected = pbw.sub(&pbw.pow(&pbw.generator(k), alg.p()), &pbw.from_lie(alg.basis_p_power(k)));
            if *ei != expected {
                violation!("component {} of e is not e[{},1]^p - e[{},1]^[p]", i + 1, i + 1, i + 1);
            }
        }
    }
    let mut max_terms = 0;
    for i in 0..n {
        let mut lhs = pbw.zero();
        for (j, ej) in e.iter().enumerate() {
            lhs = pbw.add(&lhs, &pbw.mul(&et(&sys.m[(i, j)])?, ej));
        }
        let rhs = pbw.add(&et(&sys.s[i])?, &et(&sys.r[i])?);
        if lhs != rhs {
            violation!("row {} of the identity fails in U", i + 1);
        }
        max_terms = max_terms.max(lhs.num_terms());
    }
    Ok(json!({"rows": n, "max_terms": max_terms}))
}

/// `d₀ = η(θ(d))` is central with `gr(d₀) = θ(d^p)`.
fn d0_check(pbw: &Pbw, sys: &VeldkampSystem) -> Result<Value> {
    let alg = pbw.algebra();
    let d0 = pbw.eta_theta(&sys.d)?;
    if !pbw.is_central(&d0) {
        violation!("η(θ(d)) is not central");
    }
    let symbol = alg.theta(&sys.d.frobenius())?;
    if pbw.gr(&d0) != symbol {
        violation!("gr(η(θ(d))) differs from θ(d^p)");
    }
    Ok(json!({"d0": pbw.format(&d0), "gr": show(&symbol)}))
}

/// Transport of the twisted first-row system to the p-centre for every
/// `n`, and for `n = 2` the direct expansion in `U` plus the element `d₀`.
pub fn central_system_check(pbw: &Pbw) -> Result<Value> {
    let alg = pbw.algebra();
    let sys = VeldkampSystem::for_algebra(alg)?;
    let transported = transported_identity(alg, &sys)?;
    let (direct, d0) = if alg.n() == 2 {
        (direct_identity(pbw, &sys)?, d0_check(pbw, &sys)?)
    } else {
        (Value::Null, Value::Null)
    };
    Ok(json!({"transport": transported, "direct": direct, "d0": d0}))
}

/// The `sl_n` form of the central system: the transported identity,
/// `θ(y[1]) = e[1,1] - (1/n)I`, additivity of `η` on it, and for `n = 2`
/// the direct expansion and centrality of `d'₀`.
pub fn sl_central_generators_check(pbw: &Pbw) -> Result<Value> {
    let alg = pbw.algebra();
    if alg.variant() != Variant::Sl {
        return Err(Error::Config("expects sl_n".into()));
    }
    alg.require_p_coprime("the sl central generators")?;
    let f = alg.field();
    let n = alg.n();
    let sys = VeldkampSystem::sl(alg)?;
    let transported = transported_identity(alg, &sys)?;

    let theta_y1 = alg.theta(&MultiPoly::var(f, Variable::Y(1)))?;
    let mut mat = vec![vec![0; n]; n];
    let inv_n = f.neg(f.inv(f.from_i64(n as i64)).expect("p does not divide n"));
    for (i, row) in mat.iter_mut().enumerate() {
        row[i] = inv_n;
    }
    mat[0][0] = f.add(mat[0][0], 1);
    let x = alg.from_matrix(&mat)?;
    if theta_y1 != alg.to_poly(&x) {
        violation!("θ(y[1]) is not e[1,1] - (1/n)I");
    }
    let eta_x = pbw.eta_of(&x);
    if pbw.eta_map(&theta_y1)? != eta_x {
        violation!("η is not linear on θ(y[1])");
    }
    let generators = json!({"eta_theta_y1": pbw.format(&eta_x)});
    let (direct, d0) = if n == 2 {
        (direct_identity(pbw, &sys)?, d0_check(pbw, &sys)?)
    } else {
        (Value::Null, Value::Null)
    };
    Ok(json!({"transport": transported, "generators": generators, "direct": direct, "d0": d0}))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn additivity_small() {
        for (n, p) in [(2, 2), (2, 3), (2, 5)] {
            let pbw = Pbw::new(&LieAlgebra::new(n, Variant::Gl, p).unwrap());
            jacobson_additivity_check(&pbw).unwrap();
            p_centre_centrality_check(&pbw).unwrap();
        }
    }

    #[test]
    fn confluence_gl2() {
        let pbw = Pbw::new(&LieAlgebra::new(2, Variant::Gl, 3).unwrap());
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        pbw_confluence_check(&pbw, 50, &mut rng).unwrap();
    }

    #[test]
    fn central_system_gl2() {
        for p in [2, 3] {
            let pbw = Pbw::new(&LieAlgebra::new(2, Variant::Gl, p).unwrap());
            let w = central_system_check(&pbw).unwrap();
            assert!(!w["direct"].is_null());
        }
    }

    #[test]
    fn transport_gl3() {
        let pbw = Pbw::new(&LieAlgebra::new(3, Variant::Gl, 2).unwrap());
        central_system_check(&pbw).unwrap();
    }

    #[test]
    fn sl2_generators() {
        for p in [3, 5] {
            let pbw = Pbw::new(&LieAlgebra::new(2, Variant::Sl, p).unwrap());
            sl_central_generators_check(&pbw).unwrap();
        }
        let pbw = Pbw::new(&LieAlgebra::new(2, Variant::Sl, 2).unwrap());
        assert_eq!(sl_central_generators_check(&pbw).unwrap_err().code(), "UnsupportedCharacteristic");
    }
}

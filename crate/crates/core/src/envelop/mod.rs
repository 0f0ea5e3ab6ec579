//! The universal enveloping algebra `U(g)` in PBW normal form, the
//! p-centre, Harish-Chandra projections and central elements.
//!
//! A PBW monomial is an exponent vector over the algebra's fixed basis
//! order (lower, torus, upper). Products are straightened by
//! right-multiplying one generator at a time; the results of
//! `monomial · generator` are memoized in a shared cache.

mod center;
mod checks;

pub use center::{
    center_basis, compute_u, gamma, gr_compatibility_check, group_invariance_constraints, group_invariants,
    group_invariants_in_center_check, lift_u, phi, psi, veldkamp_center_census, CentralElement,
};
pub use checks::{
    central_system_check, jacobson_additivity_check, p_centre_centrality_check, pbw_confluence_check,
    sl_central_generators_check,
};

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::lie::{LieAlgebra, LieElem};
use crate::poly::{Monomial, MultiPoly, Variable};

/// Exponents of the basis generators, in basis order.
pub type Mono = Vec<u16>;

/// An element of `U(g)` in normal form. Stored coefficients are nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PbwElem {
    terms: BTreeMap<Mono, u32>,
}

impl PbwElem {
    pub fn terms(&self) -> &BTreeMap<Mono, u32> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Filtration degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(mono_degree).max()
    }

    pub fn coefficient(&self, m: &Mono) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }
}

pub fn mono_degree(m: &Mono) -> u32 {
    m.iter().map(|&e| e as u32).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbwTermJson {
    pub coeff: u32,
    /// `[generator index, exponent]` pairs.
    pub monomial: Vec<[u32; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PbwJson {
    pub terms: Vec<PbwTermJson>,
}

type Cache = RwLock<HashMap<(Mono, usize), Arc<Vec<(Mono, u32)>>>>;

/// Straightening context for one Lie algebra.
#[derive(Debug)]
pub struct Pbw {
    alg: LieAlgebra,
    field: PrimeField,
    /// `[b_k, b_g]` as sparse `(index, coefficient)` lists.
    brackets: Vec<Vec<Vec<(usize, u32)>>>,
    cache: Cache,
}

impl Pbw {
    pub fn new(alg: &LieAlgebra) -> Self {
        let dim = alg.dim();
        let brackets = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        alg.basis_bracket(a, b)
                            .0
                            .iter()
                            .enumerate()
                            .filter(|(_, &c)| c != 0)
                            .map(|(k, &c)| (k, c))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Self { alg: alg.clone(), field: *alg.field(), brackets, cache: RwLock::new(HashMap::new()) }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.alg
    }

    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn cache_len(&self) -> usize {
        self.cache.read().expect("cache lock").len()
    }

    pub fn zero(&self) -> PbwElem {
        PbwElem::default()
    }

    pub fn one(&self) -> PbwElem {
        self.constant(1)
    }

    pub fn constant(&self, c: u32) -> PbwElem {
        self.monomial(vec![0; self.dim()], c)
    }

    pub fn monomial(&self, m: Mono, c: u32) -> PbwElem {
        let mut out = PbwElem::default();
        if c % self.field.p() != 0 {
            out.terms.insert(m, c % self.field.p());
        }
        out
    }

    pub fn generator(&self, k: usize) -> PbwElem {
        let mut m = vec![0; self.dim()];
        m[k] = 1;
        self.monomial(m, 1)
    }

    pub fn from_lie(&self, x: &LieElem) -> PbwElem {
        let mut out = PbwElem::default();
        for (k, &c) in x.0.iter().enumerate() {
            if c != 0 {
                let mut m = vec![0; self.dim()];
                m[k] = 1;
                out.terms.insert(m, c);
            }
        }
        out
    }

    fn add_term(&self, out: &mut PbwElem, m: &Mono, c: u32) {
        if c == 0 {
            return;
        }
        let f = &self.field;
        match out.terms.get_mut(m) {
            Some(v) => {
                *v = f.add(*v, c);
                if *v == 0 {
                    out.terms.remove(m);
                }
            }
            None => {
                out.terms.insert(m.clone(), c);
            }
        }
    }

    pub fn add(&self, a: &PbwElem, b: &PbwElem) -> PbwElem {
        let mut out = a.clone();
        for (m, &c) in &b.terms {
            self.add_term(&mut out, m, c);
        }
        out
    }

    pub fn sub(&self, a: &PbwElem, b: &PbwElem) -> PbwElem {
        self.add(a, &self.scale(b, self.field.neg(1)))
    }

    pub fn scale(&self, a: &PbwElem, c: u32) -> PbwElem {
        if c % self.field.p() == 0 {
            return PbwElem::default();
        }
        PbwElem { terms: a.terms.iter().map(|(m, &v)| (m.clone(), self.field.mul(v, c))).collect() }
    }

    /// `m · b_g` in normal form.
    fn mono_times_gen(&self, m: &Mono, g: usize) -> Arc<Vec<(Mono, u32)>> {
        let key = (m.clone(), g);
        if let Some(hit) = self.cache.read().expect("cache lock").get(&key) {
            return hit.clone();
        }
        let last = m.iter().rposition(|&e| e > 0);
        let result: Vec<(Mono, u32)> = match last {
            Some(k) if k > g => {
                let mut rest = m.clone();
                rest[k] -= 1;
                let mut acc: HashMap<Mono, u32> = HashMap::new();
                let f = &self.field;
                let push = |mono: &Mono, c: u32, acc: &mut HashMap<Mono, u32>| {
                    let e = acc.entry(mono.clone()).or_insert(0);
                    *e = f.add(*e, c);
                };
                // m·b_g = (rest·b_g)·b_k + rest·[b_k, b_g]
                for (mono, c) in self.mono_times_gen(&rest, g).iter() {
                    for (mono2, c2) in self.mono_times_gen(mono, k).iter() {
                        push(mono2, f.mul(*c, *c2), &mut acc);
                    }
                }
                for &(l, c) in &self.brackets[k][g] {
                    for (mono, c2) in self.mono_times_gen(&rest, l).iter() {
                        push(mono, f.mul(c, *c2), &mut acc);
                    }
                }
                let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
                v.sort();
                v
            }
            _ => {
                let mut next = m.clone();
                next[g] = next[g]
                    .checked_add(1)
                    .expect("PBW exponent overflow");
                vec![(next, 1)]
            }
        };
        let result = Arc::new(result);
        self.cache.write().expect("cache lock").insert(key, result.clone());
        result
    }

    fn times_gen(&self, a: &PbwElem, g: usize) -> PbwElem {
        let mut out = PbwElem::default();
        for (m, &c) in &a.terms {
            for (m2, c2) in self.mono_times_gen(m, g).iter() {
                self.add_term(&mut out, m2, self.field.mul(c, *c2));
            }
        }
        out
    }

    pub fn mul(&self, a: &PbwElem, b: &PbwElem) -> PbwElem {
        let mut out = PbwElem::default();
        for (m, &c) in &b.terms {
            let mut cur = a.clone();
            for (g, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    cur = self.times_gen(&cur, g);
                }
            }
            for (m2, &c2) in &cur.terms {
                self.add_term(&mut out, m2, self.field.mul(c, c2));
            }
        }
        out
    }

    pub fn pow(&self, a: &PbwElem, e: u32) -> PbwElem {
        let mut out = self.one();
        for _ in 0..e {
            out = self.mul(&out, a);
        }
        out
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, a: &PbwElem, b: &PbwElem) -> PbwElem {
        self.sub(&self.mul(a, b), &self.mul(b, a))
    }

    /// Commutes with every basis generator.
    pub fn is_central(&self, u: &PbwElem) -> bool {
        (0..self.dim()).all(|k| self.commutator(&self.generator(k), u).is_zero())
    }

    /// `η(x) = x^p - x^{[p]}`.
    pub fn eta_of(&self, x: &LieElem) -> PbwElem {
        let xp = self.pow(&self.from_lie(x), self.field.p());
        self.sub(&xp, &self.from_lie(&self.alg.p_power(x)))
    }

    /// The algebra map `S(g) → Z_p` extending `η`. Accepts polynomials in
    /// the Lie variables or in the abstract p-centre variables.
    pub fn eta_map(&self, f: &MultiPoly) -> Result<PbwElem> {
        let gens: Vec<PbwElem> = (0..self.dim()).map(|k| self.eta_of(&self.alg.basis_elem(k))).collect();
        let mut powers: HashMap<(usize, u32), PbwElem> = HashMap::new();
        let mut out = PbwElem::default();
        for (m, &c) in f.terms() {
            let mut prod = self.one();
            for &(v, e) in m.pairs() {
                let k = self.generator_index(v)?;
                let pw = powers.entry((k, e)).or_insert_with(|| self.pow(&gens[k], e)).clone();
                prod = self.mul(&prod, &pw);
            }
            out = self.add(&out, &self.scale(&prod, c));
        }
        Ok(out)
    }

    /// `η ∘ θ` on polynomials in the coordinates.
    pub fn eta_theta(&self, f: &MultiPoly) -> Result<PbwElem> {
        self.eta_map(&self.alg.theta(f)?)
    }

    fn generator_index(&self, v: Variable) -> Result<usize> {
        let lie = match v {
            Variable::Z(i, j) => Variable::E(i, j),
            Variable::Zh(i) => Variable::H(i),
            other => other,
        };
        self.alg
            .index_of_lie_variable(lie)
            .ok_or_else(|| Error::DegenerateInput(format!("{v} is not a generator of {}", self.alg.name())))
    }

    /// Commutative image of a PBW monomial in `S(g)`.
    pub fn symbol_monomial(&self, m: &Mono) -> Monomial {
        Monomial::from_pairs(
            m.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(k, &e)| (self.alg.lie_variable(k), e as u32)),
        )
    }

    /// `gr(u)`: the top filtration component, as an element of `S(g)`.
    pub fn gr(&self, u: &PbwElem) -> MultiPoly {
        let Some(top) = u.degree() else {
            return MultiPoly::zero(&self.field);
        };
        MultiPoly::from_terms(
            &self.field,
            u.terms
                .iter()
                .filter(|(m, _)| mono_degree(m) == top)
                .map(|(m, &c)| (self.symbol_monomial(m), c)),
        )
    }

    /// PBW element with the same monomials as a polynomial in the Lie
    /// variables (the variables read in basis order).
    pub fn from_symbol(&self, f: &MultiPoly) -> Result<PbwElem> {
        let mut out = PbwElem::default();
        for (m, &c) in f.terms() {
            let mut mono = vec![0u16; self.dim()];
            for &(v, e) in m.pairs() {
                mono[self.generator_index(v)?] = e as u16;
            }
            self.add_term(&mut out, &mono, c);
        }
        Ok(out)
    }

    /// All PBW monomials of filtration degree `≤ k`, ascending by degree.
    pub fn monomials_up_to(&self, k: u32, cap: usize) -> Result<Vec<Mono>> {
        let dim = self.dim();
        let mut count: u128 = 1;
        for i in 1..=k as u128 {
            count = count * (dim as u128 + i) / i;
        }
        if count > cap as u128 {
            return Err(Error::BudgetExceeded(format!(
                "dim U_{k} = {count} exceeds the cap {cap}"
            )));
        }
        let vars: Vec<Variable> = (0..dim).map(|i| self.alg.lie_variable(i)).collect();
        let mut out = Vec::new();
        for d in 0..=k {
            for m in crate::invariants::monomials_of_degree(&vars, d) {
                let mut mono = vec![0u16; dim];
                for &(v, e) in m.pairs() {
                    mono[self.generator_index(v)?] = e as u16;
                }
                out.push(mono);
            }
        }
        Ok(out)
    }

    pub fn to_json(&self, u: &PbwElem) -> PbwJson {
        PbwJson {
            terms: u
                .terms
                .iter()
                .map(|(m, &c)| PbwTermJson {
                    coeff: c,
                    monomial: m
                        .iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(k, &e)| [k as u32, e as u32])
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn from_json(&self, j: &PbwJson) -> Result<PbwElem> {
        let mut out = PbwElem::default();
        for t in &j.terms {
            let mut mono = vec![0u16; self.dim()];
            for &[k, e] in &t.monomial {
                let slot = mono
                    .get_mut(k as usize)
                    .ok_or_else(|| Error::Parse(format!("generator {k} out of range")))?;
                *slot = u16::try_from(e).map_err(|_| Error::Parse("exponent too large".into()))?;
            }
            self.add_term(&mut out, &mono, t.coeff % self.field.p());
        }
        Ok(out)
    }

    /// Human-readable form, e.g. `1*e[2,1]*e[1,2] + 2*e[1,1]`, with the
    /// factors written in PBW order.
    pub fn format(&self, u: &PbwElem) -> String {
        if u.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<(&Mono, u32)> = u.terms.iter().map(|(m, &c)| (m, c)).collect();
        terms.sort_by(|a, b| mono_degree(b.0).cmp(&mono_degree(a.0)).then(b.0.cmp(a.0)));
        terms
            .iter()
            .map(|(m, c)| {
                let mut s = c.to_string();
                for (k, &e) in m.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    s.push('*');
                    s.push_str(&self.alg.basis()[k].to_string());
                    if e > 1 {
                        s.push_str(&format!("^{e}"));
                    }
                }
                s
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

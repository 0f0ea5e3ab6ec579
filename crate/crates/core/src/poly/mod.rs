//! Sparse multivariate polynomials over a [`Field`].
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`] under graded
//! lexicographic order, so two polynomials are equal iff their term maps are.
//! Stored coefficients are never zero.

mod format;

pub use format::{parse_poly, poly_from_json, poly_to_json, PolyJson, TermJson};

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};

/// A polynomial variable. Matrix indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Variable {
    /// Coordinate function `ξ_ij` on matrices (entry `(i, j)`).
    X(u8, u8),
    /// Coordinate on `sl_n` dual to `h_i = e_ii - e_{i+1,i+1}`.
    Y(u8),
    /// Matrix unit `e_ij` as an element of `S(g)`.
    E(u8, u8),
    /// `h_i` as an element of `S(g)`.
    H(u8),
    /// Abstract p-centre generator standing for `η(e_ij)`.
    Z(u8, u8),
    /// Abstract p-centre generator standing for `η(h_i)`.
    Zh(u8),
    /// Formal parameter.
    T(u8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarKind {
    Coordinate,
    LieBasis,
    Centre,
    Formal,
}

impl Variable {
    pub fn kind(self) -> VarKind {
        match self {
            Variable::X(..) | Variable::Y(_) => VarKind::Coordinate,
            Variable::E(..) | Variable::H(_) => VarKind::LieBasis,
            Variable::Z(..) | Variable::Zh(_) => VarKind::Centre,
            Variable::T(_) => VarKind::Formal,
        }
    }

    /// Coordinate `ξ_ij` with 0-based indices.
    pub fn xi(i: usize, j: usize) -> Self {
        Variable::X(i as u8 + 1, j as u8 + 1)
    }

    /// Formal parameter `t`.
    pub fn t() -> Self {
        Variable::T(0)
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Variable::X(i, j) => write!(f, "x[{i},{j}]"),
            Variable::Y(i) => write!(f, "y[{i}]"),
            Variable::E(i, j) => write!(f, "e[{i},{j}]"),
            Variable::H(i) => write!(f, "h[{i}]"),
            Variable::Z(i, j) => write!(f, "z[{i},{j}]"),
            Variable::Zh(i) => write!(f, "zh[{i}]"),
            Variable::T(0) => write!(f, "t"),
            Variable::T(i) => write!(f, "t[{i}]"),
        }
    }
}

/// A power product, stored sparsely as `(variable, exponent)` pairs sorted by
/// variable with strictly positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn pairs(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Variable) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(&v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    pub fn pow(&self, k: u32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    /// Drops one factor of `v`, returning the exponent it had.
    pub fn lower(&self, v: Variable) -> Option<(u32, Monomial)> {
        let idx = self.0.binary_search_by(|(w, _)| w.cmp(&v)).ok()?;
        let e = self.0[idx].1;
        let mut out = self.0.clone();
        if e == 1 {
            out.remove(idx);
        } else {
            out[idx].1 -= 1;
        }
        Some((e, Monomial(out)))
    }

    /// Splits off the power of `v`.
    pub fn split(&self, v: Variable) -> (u32, Monomial) {
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(idx) => {
                let mut rest = self.0.clone();
                let (_, e) = rest.remove(idx);
                (e, Monomial(rest))
            }
            Err(_) => (0, self.clone()),
        }
    }
}

impl Ord for Monomial {
    /// Graded lexicographic; earlier variables are more significant.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for (a, b) in self.0.iter().zip(other.0.iter()) {
            match a.0.cmp(&b.0) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match a.1.cmp(&b.1) {
                    Ordering::Equal => {}
                    ord => return ord,
                },
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone)]
pub struct Poly<F: Field> {
    field: F,
    terms: BTreeMap<Monomial, F::Elem>,
}

/// Polynomials over the prime field: the workhorse type.
pub type MultiPoly = Poly<PrimeField>;

impl<F: Field> PartialEq for Poly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Eq for Poly<F> {}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, &c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            let cs = self.field.fmt_elem(c);
            if m.is_one() {
                write!(f, "{cs}")?;
            } else {
                write!(f, "{cs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<F: Field> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{self}]")
    }
}

impl<F: Field> Poly<F> {
    pub fn zero(field: &F) -> Self {
        Self { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(field: &F, c: F::Elem) -> Self {
        Self::monomial(field, Monomial::one(), c)
    }

    pub fn one(field: &F) -> Self {
        Self::constant(field, field.one())
    }

    pub fn var(field: &F, v: Variable) -> Self {
        Self::monomial(field, Monomial::var(v), field.one())
    }

    pub fn monomial(field: &F, m: Monomial, c: F::Elem) -> Self {
        let mut terms = BTreeMap::new();
        if !field.is_zero(c) {
            terms.insert(m, c);
        }
        Self { field: field.clone(), terms }
    }

    pub fn from_terms(field: &F, terms: impl IntoIterator<Item = (Monomial, F::Elem)>) -> Self {
        let mut acc: HashMap<Monomial, F::Elem> = HashMap::new();
        for (m, c) in terms {
            let slot = acc.entry(m).or_insert_with(|| field.zero());
            *slot = field.add(*slot, c);
        }
        Self::from_map(field, acc)
    }

    fn from_map(field: &F, acc: HashMap<Monomial, F::Elem>) -> Self {
        let terms = acc.into_iter().filter(|(_, c)| !field.is_zero(*c)).collect();
        Self { field: field.clone(), terms }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, F::Elem> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> F::Elem {
        self.terms.get(m).copied().unwrap_or_else(|| self.field.zero())
    }

    /// Constant term.
    pub fn constant_term(&self) -> F::Elem {
        self.coefficient(&Monomial::one())
    }

    /// Total degree; `None` stands for the degree −∞ of the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, k: u32) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == k)
            .map(|(m, c)| (m.clone(), *c))
            .collect();
        Self { field: self.field.clone(), terms }
    }

    /// Top-degree homogeneous part (the symbol `gr(f)` for the degree filtration).
    pub fn leading_form(&self) -> Self {
        match self.degree() {
            None => self.clone(),
            Some(d) => self.homogeneous_component(d),
        }
    }

    pub fn leading_term(&self) -> Option<(&Monomial, F::Elem)> {
        self.terms.iter().next_back().map(|(m, c)| (m, *c))
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms
            .keys()
            .flat_map(|m| m.pairs().iter().map(|&(v, _)| v))
            .collect()
    }

    pub fn mentions(&self, pred: impl Fn(Variable) -> bool) -> bool {
        self.variables().into_iter().any(pred)
    }

    pub fn scale(&self, c: F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, &a)| (m.clone(), self.field.mul(a, c)))
            .collect();
        Self { field: self.field.clone(), terms }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: F::Elem) -> Self {
        if self.field.is_zero(c) {
            return Self::zero(&self.field);
        }
        let terms = self
            .terms
            .iter()
            .map(|(n, &a)| (n.mul(m), self.field.mul(a, c)))
            .collect();
        Self { field: self.field.clone(), terms }
    }

    pub fn add_assign_scaled(&mut self, other: &Self, c: F::Elem) {
        let f = &self.field;
        if f.is_zero(c) {
            return;
        }
        for (m, &b) in &other.terms {
            let val = f.mul(b, c);
            match self.terms.get_mut(m) {
                Some(a) => {
                    let s = f.add(*a, val);
                    if f.is_zero(s) {
                        self.terms.remove(m);
                    } else {
                        *a = s;
                    }
                }
                None => {
                    self.terms.insert(m.clone(), val);
                }
            }
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: F::Elem) {
        let f = &self.field;
        if f.is_zero(c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(a) => {
                let s = f.add(*a, c);
                if f.is_zero(s) {
                    self.terms.remove(&m);
                } else {
                    *a = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.field);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative; exponents divisible by `p` annihilate.
    pub fn derivative(&self, v: Variable) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f);
        for (m, &c) in &self.terms {
            if let Some((e, rest)) = m.lower(v) {
                out.add_term(rest, f.mul(c, f.from_i64(e as i64)));
            }
        }
        out
    }

    /// Applies the derivation determined by its values on variables
    /// (variables absent from `images` are sent to zero).
    pub fn apply_derivation(&self, images: &HashMap<Variable, Self>) -> Self {
        let f = &self.field;
        let mut out = Self::zero(f);
        for (m, &c) in &self.terms {
            for &(v, e) in m.pairs() {
                let Some(img) = images.get(&v) else { continue };
                let coeff = f.mul(c, f.from_i64(e as i64));
                if f.is_zero(coeff) {
                    continue;
                }
                let (_, rest) = m.lower(v).expect("variable present");
                out.add_assign_scaled(&img.mul_monomial(&rest, f.one()), coeff);
            }
        }
        out
    }

    /// Evaluates at a point; every occurring variable must be assigned.
    pub fn evaluate(&self, point: &HashMap<Variable, F::Elem>) -> Result<F::Elem> {
        let f = &self.field;
        let mut acc = f.zero();
        for (m, &c) in &self.terms {
            let mut t = c;
            for &(v, e) in m.pairs() {
                let val = point
                    .get(&v)
                    .ok_or_else(|| Error::DegenerateInput(format!("no value for {v}")))?;
                t = f.mul(t, f.pow(*val, e as u64));
            }
            acc = f.add(acc, t);
        }
        Ok(acc)
    }

    /// Ring-homomorphic substitution. Variables without an image are kept.
    pub fn substitute(&self, images: &HashMap<Variable, Self>) -> Self {
        let f = &self.field;
        let mut powers: HashMap<(Variable, u32), Self> = HashMap::new();
        let mut out = Self::zero(f);
        for (m, &c) in &self.terms {
            let mut kept = Vec::new();
            let mut prod = Self::one(f);
            for &(v, e) in m.pairs() {
                match images.get(&v) {
                    Some(img) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                        prod = &prod * pw;
                    }
                    None => kept.push((v, e)),
                }
            }
            let kept = Monomial(kept);
            out.add_assign_scaled(&prod.mul_monomial(&kept, f.one()), c);
        }
        out
    }

    /// The Frobenius `f ↦ f^p`, computed by raising exponents and coefficients.
    pub fn frobenius(&self) -> Self {
        let p = self.field.characteristic();
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| (m.pow(p), self.field.pow(c, p as u64)))
            .collect();
        Self { field: self.field.clone(), terms }
    }

    /// Groups terms by the exponent of `v`: `f = Σ_k coeff_k · v^k`.
    pub fn coefficients_in(&self, v: Variable) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, &c) in &self.terms {
            let (e, rest) = m.split(v);
            out.entry(e)
                .or_insert_with(|| Self::zero(&self.field))
                .add_term(rest, c);
        }
        out
    }

    pub fn map_coeffs<G: Field>(&self, target: &G, map: impl Fn(F::Elem) -> G::Elem) -> Poly<G> {
        Poly::from_terms(target, self.terms.iter().map(|(m, &c)| (m.clone(), map(c))))
    }

    /// Renames variables (must be injective on the variables of `self`).
    pub fn relabel(&self, map: impl Fn(Variable) -> Variable) -> Self {
        Self::from_terms(
            &self.field,
            self.terms.iter().map(|(m, &c)| {
                (Monomial::from_pairs(m.pairs().iter().map(|&(v, e)| (map(v), e))), c)
            }),
        )
    }

    /// Exact division: returns `q` with `self = q · divisor`, or `None`.
    pub fn divide_exact(&self, divisor: &Self) -> Option<Self> {
        let f = &self.field;
        let (lm, lc) = divisor.leading_term()?;
        let (lm, lc_inv) = (lm.clone(), f.inv(lc)?);
        let mut rem = self.clone();
        let mut quot = Self::zero(f);
        while let Some((m, c)) = rem.leading_term() {
            let qm = m.div(&lm)?;
            let qc = f.mul(c, lc_inv);
            rem.add_assign_scaled(&divisor.mul_monomial(&qm, f.one()), f.neg(qc));
            quot.add_term(qm, qc);
        }
        Some(quot)
    }
}

impl<'a, F: Field> Add<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &'a Poly<F>) -> Poly<F> {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, self.field.one());
        out
    }
}

impl<'a, F: Field> Sub<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &'a Poly<F>) -> Poly<F> {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, self.field.neg(self.field.one()));
        out
    }
}

impl<F: Field> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.scale(self.field.neg(self.field.one()))
    }
}

impl<'a, F: Field> Mul<&'a Poly<F>> for &'a Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &'a Poly<F>) -> Poly<F> {
        let f = &self.field;
        let mut acc: HashMap<Monomial, F::Elem> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                let slot = acc.entry(a.mul(b)).or_insert_with(|| f.zero());
                *slot = f.add(*slot, f.mul(ca, cb));
            }
        }
        Poly::from_map(f, acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<F: Field> $tr<Poly<F>> for Poly<F> {
            type Output = Poly<F>;
            fn $m(self, rhs: Poly<F>) -> Poly<F> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

/// Binary arithmetic with a modulus check.
pub fn poly_arith(f: &MultiPoly, g: &MultiPoly, op: PolyOp) -> Result<MultiPoly> {
    if f.field() != g.field() {
        return Err(Error::Config(format!(
            "modulus mismatch: {} vs {}",
            f.field().p(),
            g.field().p()
        )));
    }
    Ok(match op {
        PolyOp::Add => f + g,
        PolyOp::Sub => f - g,
        PolyOp::Mul => f * g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn x(i: u8, j: u8, k: &PrimeField) -> MultiPoly {
        MultiPoly::var(k, Variable::X(i, j))
    }

    #[test]
    fn difference_of_squares() {
        let k = fp(7);
        let (a, b) = (x(1, 1, &k), x(2, 2, &k));
        let lhs = &(&a + &b) * &(&a - &b);
        let rhs = &a.pow(2) - &b.pow(2);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs.num_terms(), 2);
    }

    #[test]
    fn freshmans_dream_in_char_two() {
        let k = fp(2);
        let f = &x(1, 1, &k) + &x(1, 2, &k);
        assert_eq!(f.pow(2), &x(1, 1, &k).pow(2) + &x(1, 2, &k).pow(2));
        assert_eq!(f.pow(2), f.frobenius());
    }

    #[test]
    fn scaling_by_zero_empties_the_term_map() {
        let k = fp(5);
        let f = &x(1, 1, &k) + &MultiPoly::one(&k);
        let z = f.scale(0);
        assert!(z.is_zero());
        assert!(z.terms().is_empty());
        assert_eq!(z.degree(), None);
    }

    #[test]
    fn derivative_kills_pth_powers() {
        let k = fp(3);
        let f = x(1, 2, &k).pow(3);
        assert!(f.derivative(Variable::X(1, 2)).is_zero());
        let g = x(1, 2, &k).pow(4);
        assert_eq!(g.derivative(Variable::X(1, 2)), x(1, 2, &k).pow(3));
    }

    #[test]
    fn grlex_orders_by_degree_then_earlier_variable() {
        let a = Monomial::from_pairs([(Variable::X(1, 1), 1)]);
        let b = Monomial::from_pairs([(Variable::X(2, 2), 1)]);
        let c = Monomial::from_pairs([(Variable::X(2, 2), 2)]);
        assert!(a > b);
        assert!(c > a);
        assert!(Monomial::one() < b);
    }

    #[test]
    fn substitution_with_formal_parameter() {
        let k = fp(5);
        let f = &x(1, 1, &k) * &x(2, 2, &k);
        let t = MultiPoly::var(&k, Variable::t());
        let img = &x(1, 1, &k) + &(&t * &x(2, 1, &k));
        let g = f.substitute(&HashMap::from([(Variable::X(1, 1), img)]));
        let expected = &f + &(&(&t * &x(2, 1, &k)) * &x(2, 2, &k));
        assert_eq!(g, expected);
        assert_eq!(f.substitute(&HashMap::new()), f);
    }

    #[test]
    fn evaluation_and_missing_values() {
        let k = fp(5);
        let f = &(&x(1, 1, &k) * &x(2, 2, &k)) - &(&x(1, 2, &k) * &x(2, 1, &k));
        let id = HashMap::from([
            (Variable::X(1, 1), 1),
            (Variable::X(2, 2), 1),
            (Variable::X(1, 2), 0),
            (Variable::X(2, 1), 0),
        ]);
        assert_eq!(f.evaluate(&id).unwrap(), 1);
        assert_eq!(MultiPoly::zero(&k).evaluate(&HashMap::new()).unwrap(), 0);
        assert!(matches!(
            f.evaluate(&HashMap::new()),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn exact_division() {
        let k = fp(3);
        let a = &x(1, 1, &k) + &x(2, 1, &k);
        let b = &(&x(1, 2, &k) * &x(2, 2, &k)) - &MultiPoly::one(&k);
        let prod = &a * &b;
        assert_eq!(prod.divide_exact(&a), Some(b.clone()));
        assert_eq!(prod.divide_exact(&b), Some(a.clone()));
        assert_eq!((&prod + &MultiPoly::one(&k)).divide_exact(&a), None);
    }

    #[test]
    fn modulus_mismatch_is_a_config_error() {
        let f = x(1, 1, &fp(3));
        let g = x(1, 1, &fp(5));
        assert!(matches!(poly_arith(&f, &g, PolyOp::Add), Err(Error::Config(_))));
    }
}

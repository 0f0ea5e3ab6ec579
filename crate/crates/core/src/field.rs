//! Prime fields and their small extensions.
//!
//! Polynomial and linear-algebra code is generic over [`Field`]; the field
//! value carries the modulus so that elements themselves stay `Copy` and tiny.

use std::fmt::{self, Debug};
use std::hash::Hash;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest extension degree supported for point sampling.
pub const MAX_EXTENSION_DEGREE: usize = 3;

pub trait Field: Clone + Debug + PartialEq + Send + Sync {
    type Elem: Copy + Eq + Ord + Hash + Debug + Send + Sync;

    fn characteristic(&self) -> u32;
    /// Number of elements.
    fn order(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;
    /// The `idx`-th element in a fixed enumeration, `idx < order()`.
    /// Index 0 is zero and index 1 is one.
    fn element(&self, idx: u64) -> Self::Elem;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn pow(&self, a: Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.element(rng.gen_range(0..self.order()))
    }

    fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.element(rng.gen_range(1..self.order()))
    }

    fn fmt_elem(&self, a: Self::Elem) -> String {
        format!("{a:?}")
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `F_p`, elements stored as residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=(1u32 << 31)).contains(&p) || !is_prime(p as u64) {
            return Err(Error::Config(format!("{p} is not a supported prime")));
        }
        Ok(Self { p })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Symmetric representative in `(-p/2, p/2]`, handy for display.
    pub fn signed(&self, a: u32) -> i64 {
        if a as u64 * 2 > self.p as u64 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u32 {
        self.p
    }
    fn order(&self) -> u64 {
        self.p as u64
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        // extended Euclid
        let (mut r0, mut r1) = (self.p as i64, a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i64) as u32)
    }
    fn element(&self, idx: u64) -> u32 {
        idx as u32
    }
    fn fmt_elem(&self, a: u32) -> String {
        a.to_string()
    }
}

/// Element of `F_{p^e}`, `e <= 3`: coefficients of `1, α, α²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtElem(pub [u32; MAX_EXTENSION_DEGREE]);

/// `F_{p^e}` presented as `F_p[α]/(m(α))` for an explicit monic irreducible `m`.
#[derive(Clone, PartialEq, Eq)]
pub struct ExtField {
    base: PrimeField,
    degree: usize,
    /// Low coefficients of the monic modulus: `α^e = -Σ modulus[i] α^i`.
    modulus: [u32; MAX_EXTENSION_DEGREE],
}

impl Debug for ExtField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{}", self.base.p, self.degree)
    }
}

impl ExtField {
    /// Builds `F_{p^degree}` with the lexicographically first monic irreducible
    /// modulus. For `degree <= 3` irreducible means "no root in `F_p`".
    pub fn new(p: u32, degree: usize) -> Result<Self> {
        let base = PrimeField::new(p)?;
        if degree == 0 || degree > MAX_EXTENSION_DEGREE {
            return Err(Error::Config(format!(
                "extension degree {degree} outside 1..={MAX_EXTENSION_DEGREE}"
            )));
        }
        if degree == 1 {
            return Ok(Self { base, degree, modulus: [0; 3] });
        }
        let count = (p as u64).pow(degree as u32);
        for code in 0..count {
            let mut low = [0u32; 3];
            let mut c = code;
            for slot in low.iter_mut().take(degree) {
                *slot = (c % p as u64) as u32;
                c /= p as u64;
            }
            let has_root = (0..p).any(|x| {
                // evaluate x^degree + Σ low[i] x^i
                let mut acc = base.pow(x, degree as u64);
                for (i, &li) in low.iter().enumerate().take(degree) {
                    acc = base.add(acc, base.mul(li, base.pow(x, i as u64)));
                }
                acc == 0
            });
            if !has_root {
                return Ok(Self { base, degree, modulus: low });
            }
        }
        unreachable!("irreducible polynomials of every degree exist")
    }

    pub fn base(&self) -> PrimeField {
        self.base
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn embed(&self, a: u32) -> ExtElem {
        ExtElem([a % self.base.p, 0, 0])
    }

    /// Returns the prime-field value when `a` lies in `F_p`.
    pub fn to_base(&self, a: ExtElem) -> Option<u32> {
        if a.0[1] == 0 && a.0[2] == 0 {
            Some(a.0[0])
        } else {
            None
        }
    }
}

impl Field for ExtField {
    type Elem = ExtElem;

    fn characteristic(&self) -> u32 {
        self.base.p
    }
    fn order(&self) -> u64 {
        (self.base.p as u64).pow(self.degree as u32)
    }
    fn zero(&self) -> ExtElem {
        ExtElem([0; 3])
    }
    fn one(&self) -> ExtElem {
        ExtElem([1, 0, 0])
    }
    fn from_i64(&self, v: i64) -> ExtElem {
        self.embed(self.base.from_i64(v))
    }
    fn add(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let f = &self.base;
        ExtElem([f.add(a.0[0], b.0[0]), f.add(a.0[1], b.0[1]), f.add(a.0[2], b.0[2])])
    }
    fn sub(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let f = &self.base;
        ExtElem([f.sub(a.0[0], b.0[0]), f.sub(a.0[1], b.0[1]), f.sub(a.0[2], b.0[2])])
    }
    fn neg(&self, a: ExtElem) -> ExtElem {
        let f = &self.base;
        ExtElem([f.neg(a.0[0]), f.neg(a.0[1]), f.neg(a.0[2])])
    }
    fn mul(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        let f = &self.base;
        let e = self.degree;
        let mut prod = [0u32; 2 * MAX_EXTENSION_DEGREE - 1];
        for i in 0..e {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..e {
                prod[i + j] = f.add(prod[i + j], f.mul(a.0[i], b.0[j]));
            }
        }
        // reduce from the top: α^k = -Σ modulus[i] α^{k-e+i}
        for k in (e..(2 * e - 1)).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..e {
                prod[k - e + i] = f.sub(prod[k - e + i], f.mul(c, self.modulus[i]));
            }
        }
        let mut out = [0u32; 3];
        out[..e].copy_from_slice(&prod[..e]);
        ExtElem(out)
    }
    fn inv(&self, a: ExtElem) -> Option<ExtElem> {
        if a == self.zero() {
            None
        } else {
            Some(self.pow(a, self.order() - 2))
        }
    }
    fn element(&self, idx: u64) -> ExtElem {
        let p = self.base.p as u64;
        let mut out = [0u32; 3];
        let mut c = idx;
        for slot in out.iter_mut().take(self.degree) {
            *slot = (c % p) as u32;
            c /= p;
        }
        ExtElem(out)
    }
    fn fmt_elem(&self, a: ExtElem) -> String {
        match self.to_base(a) {
            Some(v) => v.to_string(),
            None => format!("{:?}", &a.0[..self.degree]),
        }
    }
}

/// A standalone residue tagged with its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldElement {
    pub value: u32,
    pub p: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    /// Exponent taken from the second operand's value.
    Pow,
}

impl FieldElement {
    pub fn new(value: i64, p: u32) -> Result<Self> {
        let field = PrimeField::new(p)?;
        Ok(Self { value: field.from_i64(value), p })
    }

    fn field(&self) -> PrimeField {
        PrimeField { p: self.p }
    }

    pub fn inv(self) -> Result<Self> {
        self.field()
            .inv(self.value)
            .map(|value| Self { value, p: self.p })
            .ok_or_else(|| Error::DegenerateInput("inverse of zero".into()))
    }

    pub fn pow(self, e: u64) -> Self {
        Self { value: self.field().pow(self.value, e), p: self.p }
    }
}

pub fn field_arith(a: FieldElement, b: FieldElement, op: FieldOp) -> Result<FieldElement> {
    if op != FieldOp::Pow && op != FieldOp::Inv && a.p != b.p {
        return Err(Error::Config(format!("modulus mismatch: {} vs {}", a.p, b.p)));
    }
    let f = a.field();
    let value = match op {
        FieldOp::Add => f.add(a.value, b.value),
        FieldOp::Sub => f.sub(a.value, b.value),
        FieldOp::Mul => f.mul(a.value, b.value),
        FieldOp::Div => f
            .div(a.value, b.value)
            .ok_or_else(|| Error::DegenerateInput("division by zero".into()))?,
        FieldOp::Inv => return a.inv(),
        FieldOp::Pow => return Ok(a.pow(b.value as u64)),
    };
    Ok(FieldElement { value, p: a.p })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(v: i64, p: u32) -> FieldElement {
        FieldElement::new(v, p).unwrap()
    }

    #[test]
    fn residue_examples() {
        assert_eq!(fe(2, 5).inv().unwrap().value, 3);
        assert_eq!(fe(4, 5).pow(5).value, 4);
        assert_eq!(field_arith(fe(4, 5), fe(1, 5), FieldOp::Add).unwrap().value, 0);
        assert_eq!(field_arith(fe(3, 7), fe(2, 7), FieldOp::Pow).unwrap().value, 2);
    }

    #[test]
    fn residue_errors() {
        assert!(matches!(fe(0, 5).inv(), Err(Error::DegenerateInput(_))));
        assert!(matches!(
            field_arith(fe(1, 5), fe(0, 5), FieldOp::Div),
            Err(Error::DegenerateInput(_))
        ));
        assert!(matches!(
            field_arith(fe(1, 5), fe(1, 7), FieldOp::Mul),
            Err(Error::Config(_))
        ));
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn extension_fields_are_fields() {
        for p in [2u32, 3, 5] {
            for e in 1..=3 {
                let k = ExtField::new(p, e).unwrap();
                let q = k.order();
                let mut units = 0;
                for i in 0..q {
                    let a = k.element(i);
                    if let Some(ai) = k.inv(a) {
                        assert_eq!(k.mul(a, ai), k.one());
                        units += 1;
                    }
                    // Frobenius^e is the identity
                    assert_eq!(k.pow(a, q), a);
                }
                assert_eq!(units, q - 1);
            }
        }
    }

    #[test]
    fn multiplicative_group_of_f8_is_cyclic_of_order_7() {
        let k = ExtField::new(2, 3).unwrap();
        let alpha = k.element(2);
        let orders: Vec<u64> = (1..=7).filter(|&e| k.pow(alpha, e) == k.one()).collect();
        assert_eq!(orders, vec![7]);
    }
}

//! Torus weights, positive roots and the shift `ρ`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{LieAlgebra, Variant};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Monomial, MultiPoly, Variable};

/// Integer weight in the basis `ε_1, …, ε_n`. For `sl_n` weights are stored
/// modulo the all-ones vector with last coordinate 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    /// `ε_i`, 1-based.
    pub fn epsilon(n: usize, i: usize) -> Self {
        let mut w = vec![0; n];
        w[i - 1] = 1;
        Weight(w)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    /// Representative with last coordinate 0.
    pub fn normalized(&self) -> Weight {
        let last = self.0.last().copied().unwrap_or(0);
        Weight(self.0.iter().map(|a| a - last).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootData {
    /// `ε_i - ε_j` for `i < j`.
    pub positive_roots: Vec<Weight>,
    /// `ρ` on the torus basis elements, in basis order.
    pub rho: Vec<u32>,
    pub fundamental_weight1: Weight,
}

impl LieAlgebra {
    fn class(&self, w: Weight) -> Weight {
        match self.variant() {
            Variant::Gl => w,
            Variant::Sl => w.normalized(),
        }
    }

    /// Torus weight of a variable: `x[i,j]` has weight `ε_j - ε_i`, `e[i,j]`
    /// has `ε_i - ε_j`, `z[i,j]` has `p(ε_i - ε_j)`; diagonal and formal
    /// variables have weight 0.
    pub fn variable_weight(&self, v: Variable) -> Weight {
        let n = self.n();
        let root = |i: u8, j: u8| Weight::epsilon(n, i as usize).sub(&Weight::epsilon(n, j as usize));
        let w = match v {
            Variable::X(i, j) => root(j, i),
            Variable::E(i, j) => root(i, j),
            Variable::Z(i, j) => root(i, j).scale(self.p() as i64),
            Variable::Y(_) | Variable::H(_) | Variable::Zh(_) | Variable::T(_) => Weight::zero(n),
        };
        self.class(w)
    }

    pub fn monomial_weight(&self, m: &Monomial) -> Weight {
        let w = m
            .pairs()
            .iter()
            .fold(Weight::zero(self.n()), |acc, &(v, e)| acc.add(&self.variable_weight(v).scale(e as i64)));
        self.class(w)
    }

    /// Splits `f` into torus-weight components.
    pub fn weight_decompose(&self, f: &MultiPoly) -> BTreeMap<Weight, MultiPoly> {
        let mut out: BTreeMap<Weight, MultiPoly> = BTreeMap::new();
        for (m, &c) in f.terms() {
            out.entry(self.monomial_weight(m))
                .or_insert_with(|| MultiPoly::zero(self.field()))
                .add_term(m.clone(), c);
        }
        out
    }

    /// Positive roots, `ρ` and `ϖ_1`. Fails for `gl_n`, `p = 2`, `n` even,
    /// where `ρ(e_ii) = (n + 1 - 2i)/2` has no value in `F_2`.
    pub fn root_data(&self) -> Result<RootData> {
        let n = self.n();
        let f = self.field();
        let positive_roots = (1..=n)
            .flat_map(|i| ((i + 1)..=n).map(move |j| (i, j)))
            .map(|(i, j)| self.class(Weight::epsilon(n, i).sub(&Weight::epsilon(n, j))))
            .collect();
        let rho = match self.variant() {
            Variant::Sl => vec![1; n - 1],
            Variant::Gl => {
                let half = f.inv(2 % self.p()).filter(|_| n % 2 == 0);
                if n % 2 == 0 && half.is_none() {
                    return Err(Error::UnsupportedCharacteristic(format!(
                        "rho for gl_{n} needs division by 2 in F_{}",
                        self.p()
                    )));
                }
                (1..=n as i64)
                    .map(|i| {
                        let num = n as i64 + 1 - 2 * i;
                        match half {
                            Some(h) => f.mul(f.from_i64(num), h),
                            None => f.from_i64(num / 2),
                        }
                    })
                    .collect()
            }
        };
        let data = RootData {
            positive_roots,
            rho,
            fundamental_weight1: self.class(Weight::epsilon(n, 1)),
        };
        // ⟨ρ, α_i∨⟩ = 1 on every simple coroot h_i = e_ii - e_{i+1,i+1}
        for i in 0..n - 1 {
            let pairing = match self.variant() {
                Variant::Sl => data.rho[i],
                Variant::Gl => f.sub(data.rho[i], data.rho[i + 1]),
            };
            if pairing != 1 {
                return Err(Error::TheoremViolation(format!("rho pairs to {pairing} with coroot {}", i + 1)));
            }
        }
        Ok(data)
    }
}

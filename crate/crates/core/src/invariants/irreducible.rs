//! Absolute irreducibility of homogeneous polynomials of degree at most 3.
//!
//! Such a polynomial is reducible over the algebraic closure iff it has a
//! linear factor there, and every linear factor of a polynomial over `F_p`
//! of degree `≤ 3` is defined over `F_{p^e}` with `e ≤ deg`. The search
//! runs over linear forms normalized to leading coefficient 1 and prunes a
//! partial form as soon as it fails to divide the restriction of `f` to the
//! variables decided so far.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{ExtElem, ExtField, Field};
use crate::poly::{MultiPoly, Poly, Variable};

const MAX_VARS: usize = 9;
const MAX_NODES: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum Irreducibility {
    Irreducible {
        /// Partial linear forms examined, summed over all extension degrees.
        nodes: u64,
    },
    Factor {
        extension_degree: usize,
        linear_form: String,
    },
}

/// Orders variables so that restrictions to short prefixes keep many terms,
/// which is what makes the pruning effective.
fn greedy_order(f: &MultiPoly) -> Vec<Variable> {
    let mut remaining: Vec<Variable> = f.variables().into_iter().collect();
    let mut chosen: Vec<Variable> = Vec::new();
    while !remaining.is_empty() {
        let supported = |set: &[Variable]| {
            f.terms()
                .keys()
                .filter(|m| m.pairs().iter().all(|(v, _)| set.contains(v)))
                .count()
        };
        let (best, _) = remaining
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                let mut set = chosen.clone();
                set.push(v);
                (i, supported(&set))
            })
            .max_by_key(|&(i, s)| (s, std::cmp::Reverse(i)))
            .expect("nonempty");
        chosen.push(remaining.remove(best));
    }
    chosen
}

struct Search<'a> {
    ext: &'a ExtField,
    vars: &'a [Variable],
    /// `restricted[j]`: `f` with the variables after position `j` set to 0.
    restricted: Vec<Poly<ExtField>>,
    nodes: u64,
}

impl Search<'_> {
    fn divides(&self, pivot: usize, coeffs: &[(usize, ExtElem)], upto: usize) -> bool {
        let f = &self.restricted[upto];
        if f.is_zero() {
            return true;
        }
        let mut img = Poly::zero(self.ext);
        for &(j, c) in coeffs {
            img.add_term(crate::poly::Monomial::var(self.vars[j]), self.ext.neg(c));
        }
        let subs: HashMap<Variable, Poly<ExtField>> = [(self.vars[pivot], img)].into_iter().collect();
        f.substitute(&subs).is_zero()
    }

    /// Depth-first over the coefficients of positions `next..`.
    fn extend(&mut self, pivot: usize, coeffs: &mut Vec<(usize, ExtElem)>, next: usize) -> Result<Option<Vec<(usize, ExtElem)>>> {
        if next == self.vars.len() {
            return Ok(Some(coeffs.clone()));
        }
        for idx in 0..self.ext.order() {
            self.nodes += 1;
            if self.nodes > MAX_NODES {
                return Err(Error::BudgetExceeded("irreducibility search node cap".into()));
            }
            let c = self.ext.element(idx);
            let pushed = !self.ext.is_zero(c);
            if pushed {
                coeffs.push((next, c));
            }
            if self.divides(pivot, coeffs, next) {
                if let Some(found) = self.extend(pivot, coeffs, next + 1)? {
                    return Ok(Some(found));
                }
            }
            if pushed {
                coeffs.pop();
            }
        }
        Ok(None)
    }
}

pub fn irreducibility_bruteforce(f: &MultiPoly) -> Result<Irreducibility> {
    let Some(deg) = f.degree() else {
        return Err(Error::DegenerateInput("the zero polynomial".into()));
    };
    if !f.is_homogeneous() {
        return Err(Error::DegenerateInput("polynomial is not homogeneous".into()));
    }
    if deg == 0 {
        return Err(Error::DegenerateInput("constants are units".into()));
    }
    if deg > 3 {
        return Err(Error::BudgetExceeded(format!("degree {deg} exceeds 3")));
    }
    let vars = greedy_order(f);
    if vars.len() > MAX_VARS {
        return Err(Error::BudgetExceeded(format!("{} variables exceed {MAX_VARS}", vars.len())));
    }
    if deg == 1 {
        return Ok(Irreducibility::Irreducible { nodes: 0 });
    }
    let p = f.field().p();
    let mut nodes = 0;
    for e in 1..=deg as usize {
        let ext = ExtField::new(p, e)?;
        let lifted = f.map_coeffs(&ext, |c| ext.embed(c));
        let restricted = (0..vars.len())
            .map(|j| {
                let kept = &vars[..=j];
                Poly::from_terms(
                    &ext,
                    lifted
                        .terms()
                        .iter()
                        .filter(|(m, _)| m.pairs().iter().all(|(v, _)| kept.contains(v)))
                        .map(|(m, &c)| (m.clone(), c)),
                )
            })
            .collect();
        let mut search = Search { ext: &ext, vars: &vars, restricted, nodes: 0 };
        for pivot in 0..vars.len() {
            let found = if search.divides(pivot, &[], pivot) {
                search.extend(pivot, &mut Vec::new(), pivot + 1)?
            } else {
                None
            };
            if let Some(coeffs) = found {
                let mut form = Poly::var(&ext, vars[pivot]);
                for (j, c) in coeffs {
                    form.add_term(crate::poly::Monomial::var(vars[j]), c);
                }
                if lifted.divide_exact(&form).is_none() {
                    return Err(Error::TheoremViolation("candidate factor does not divide".into()));
                }
                return Ok(Irreducibility::Factor { extension_degree: e, linear_form: form.to_string() });
            }
        }
        nodes += search.nodes;
    }
    Ok(Irreducibility::Irreducible { nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn linear_forms_are_irreducible() {
        let f = parse_poly("4*x[2,1]", 5).unwrap();
        assert!(matches!(irreducibility_bruteforce(&f).unwrap(), Irreducibility::Irreducible { .. }));
    }

    #[test]
    fn visible_product_is_found() {
        let f = parse_poly("1*x[1,1]*x[2,2]", 3).unwrap();
        let Irreducibility::Factor { extension_degree, .. } = irreducibility_bruteforce(&f).unwrap() else {
            panic!("expected a factor");
        };
        assert_eq!(extension_degree, 1);
    }

    #[test]
    fn sum_of_squares_splits_over_quadratic_extension() {
        // x² + y² over F_3 has no factor over F_3 but splits over F_9
        let f = parse_poly("1*x[1,1]^2 + 1*x[1,2]^2", 3).unwrap();
        let Irreducibility::Factor { extension_degree, .. } = irreducibility_bruteforce(&f).unwrap() else {
            panic!("expected a factor");
        };
        assert_eq!(extension_degree, 2);
    }

    #[test]
    fn norm_form_splits_over_cubic_extension() {
        // x³ - 2y³ over F_7: 2 is a cube neither in F_7 nor in F_49
        let f = parse_poly("1*x[1,1]^3 + 5*x[1,2]^3", 7).unwrap();
        let Irreducibility::Factor { extension_degree, .. } = irreducibility_bruteforce(&f).unwrap() else {
            panic!("expected a factor");
        };
        assert_eq!(extension_degree, 3);
    }

    #[test]
    fn hidden_linear_factors_are_found() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        let vars = ["x[1,1]", "x[1,2]", "x[2,1]", "x[2,2]", "x[3,1]"];
        for p in [2u32, 3, 5] {
            for _ in 0..10 {
                let lin: Vec<String> = vars.iter().map(|v| format!("{}*{v}", rng.gen_range(1..p))).collect();
                let quad: Vec<String> = (0..4)
                    .map(|_| {
                        let (a, b) = (vars[rng.gen_range(0..5)], vars[rng.gen_range(0..5)]);
                        format!("{}*{a}*{b}", rng.gen_range(1..p))
                    })
                    .collect();
                let l = parse_poly(&lin.join(" + "), p).unwrap();
                let q = parse_poly(&quad.join(" + "), p).unwrap();
                if q.is_zero() {
                    continue;
                }
                let f = &l * &q;
                assert!(matches!(irreducibility_bruteforce(&f).unwrap(), Irreducibility::Factor { .. }));
            }
        }
    }

    #[test]
    fn smooth_conic_is_irreducible() {
        let f = parse_poly("1*x[1,1]*x[2,2] + 4*x[1,2]*x[2,1]", 5).unwrap();
        assert!(matches!(irreducibility_bruteforce(&f).unwrap(), Irreducibility::Irreducible { .. }));
    }

    #[test]
    fn rejects_bad_inputs() {
        let k = crate::field::PrimeField::new(3).unwrap();
        assert!(irreducibility_bruteforce(&MultiPoly::zero(&k)).is_err());
        let f = parse_poly("1*x[1,1]^4", 3).unwrap();
        assert_eq!(irreducibility_bruteforce(&f).unwrap_err().code(), "BudgetExceeded");
    }
}

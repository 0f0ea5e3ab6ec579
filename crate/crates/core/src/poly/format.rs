//! Text and JSON encodings of polynomials over `F_p`.
//!
//! Text: terms in descending graded-lex order joined by `" + "`, each term
//! `c*v^e*…` with `c` a residue in `[0, p)` and `^e` omitted for `e = 1`.
//! The zero polynomial prints as `0`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Monomial, MultiPoly, Variable};
use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};

fn parse_index_list(body: &str) -> Result<Vec<u8>> {
    body.split(',')
        .map(|s| {
            s.trim()
                .parse::<u8>()
                .map_err(|_| Error::Parse(format!("bad index `{s}`")))
        })
        .collect()
}

impl std::str::FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "t" {
            return Ok(Variable::T(0));
        }
        let open = s
            .find('[')
            .ok_or_else(|| Error::Parse(format!("bad variable `{s}`")))?;
        if !s.ends_with(']') {
            return Err(Error::Parse(format!("bad variable `{s}`")));
        }
        let idx = parse_index_list(&s[open + 1..s.len() - 1])?;
        let v = match (&s[..open], idx.as_slice()) {
            ("x", &[i, j]) => Variable::X(i, j),
            ("y", &[i]) => Variable::Y(i),
            ("e", &[i, j]) => Variable::E(i, j),
            ("h", &[i]) => Variable::H(i),
            ("z", &[i, j]) => Variable::Z(i, j),
            ("zh", &[i]) => Variable::Zh(i),
            ("t", &[i]) => Variable::T(i),
            _ => return Err(Error::Parse(format!("bad variable `{s}`"))),
        };
        Ok(v)
    }
}

fn parse_term(s: &str, field: &PrimeField) -> Result<(Monomial, u32)> {
    let mut coeff = 1u32;
    let mut pairs = Vec::new();
    for (k, factor) in s.split('*').enumerate() {
        let factor = factor.trim();
        if k == 0 && factor.chars().all(|c| c.is_ascii_digit()) && !factor.is_empty() {
            let c: u64 = factor
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{factor}`")))?;
            coeff = (c % field.p() as u64) as u32;
            continue;
        }
        let (name, exp) = match factor.rsplit_once('^') {
            Some((name, e)) => (
                name,
                e.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?,
            ),
            None => (factor, 1),
        };
        pairs.push((name.parse::<Variable>()?, exp));
    }
    Ok((Monomial::from_pairs(pairs), coeff))
}

/// Parses the text format over `F_p`.
pub fn parse_poly(s: &str, p: u32) -> Result<MultiPoly> {
    let field = PrimeField::new(p)?;
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let terms = s
        .split(" + ")
        .map(|t| parse_term(t, &field))
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiPoly::from_terms(&field, terms))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: u32,
    pub exps: BTreeMap<String, u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub p: u32,
    pub terms: Vec<TermJson>,
}

pub fn poly_to_json(f: &MultiPoly) -> PolyJson {
    PolyJson {
        p: f.field().p(),
        terms: f
            .terms()
            .iter()
            .rev()
            .map(|(m, &c)| TermJson {
                coeff: c,
                exps: m.pairs().iter().map(|(v, e)| (v.to_string(), *e)).collect(),
            })
            .collect(),
    }
}

pub fn poly_from_json(j: &PolyJson) -> Result<MultiPoly> {
    let field = PrimeField::new(j.p)?;
    let terms = j
        .terms
        .iter()
        .map(|t| {
            let pairs = t
                .exps
                .iter()
                .map(|(name, &e)| Ok((name.parse::<Variable>()?, e)))
                .collect::<Result<Vec<_>>>()?;
            Ok((Monomial::from_pairs(pairs), field.from_i64(t.coeff as i64)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(MultiPoly::from_terms(&field, terms))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn text_format_shape() {
        let f = parse_poly("1*x[1,1]*x[2,2] + 4*x[1,2]*x[2,1]", 5).unwrap();
        assert_eq!(f.to_string(), "1*x[1,1]*x[2,2] + 4*x[1,2]*x[2,1]");
        let g = parse_poly("3 + 2*e[2,1]^3*h[1] + t", 7).unwrap();
        assert_eq!(g.to_string(), "2*e[2,1]^3*h[1] + 1*t + 3");
        assert_eq!(parse_poly("0", 3).unwrap().to_string(), "0");
        assert!(parse_poly("2*w[1]", 3).is_err());
        assert!(parse_poly("2*x[1", 3).is_err());
    }

    fn var_strategy() -> impl Strategy<Value = Variable> {
        prop_oneof![
            (1u8..4, 1u8..4).prop_map(|(i, j)| Variable::X(i, j)),
            (1u8..3).prop_map(Variable::Y),
            (1u8..4, 1u8..4).prop_map(|(i, j)| Variable::E(i, j)),
            (0u8..2).prop_map(Variable::T),
            (1u8..3, 1u8..3).prop_map(|(i, j)| Variable::Z(i, j)),
        ]
    }

    fn poly_strategy(p: u32) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(
            (0..p, prop::collection::vec((var_strategy(), 1u32..4), 0..4)),
            0..6,
        )
        .prop_map(move |terms| {
            let k = PrimeField::new(p).unwrap();
            MultiPoly::from_terms(
                &k,
                terms.into_iter().map(|(c, m)| (Monomial::from_pairs(m), c)),
            )
        })
    }

    proptest! {
        #[test]
        fn text_round_trip(f in poly_strategy(7)) {
            let s = f.to_string();
            let g = parse_poly(&s, 7).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(g.to_string(), s);
        }

        #[test]
        fn json_round_trip(f in poly_strategy(5)) {
            let j = poly_to_json(&f);
            let text = serde_json::to_string(&j).unwrap();
            let back: PolyJson = serde_json::from_str(&text).unwrap();
            let g = poly_from_json(&back).unwrap();
            prop_assert_eq!(&g, &f);
            prop_assert_eq!(serde_json::to_string(&poly_to_json(&g)).unwrap(), text);
        }
    }
}

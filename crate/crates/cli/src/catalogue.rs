//! Every verification the runner knows about, with the statement it
//! certifies, its default parameter grid and the size limits it accepts.

use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use zlab::envelop::{self, Pbw};
use zlab::invariants;
use zlab::{Error, LieAlgebra, Result, Variant};

const GL: Variant = Variant::Gl;
const SL: Variant = Variant::Sl;

/// One `(n, p, variant, degree)` combination.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GridPoint {
    pub n: usize,
    pub p: u32,
    pub variant: Variant,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degree: Option<u32>,
}

/// Per-run resources handed to a check.
pub struct RunCtx {
    pub samples: usize,
    pub cap: usize,
    pub rng: ChaCha8Rng,
}

type Runner = fn(&GridPoint, &mut RunCtx) -> Result<Value>;

pub struct CheckInfo {
    pub id: &'static str,
    /// Library module the check exercises.
    pub module: &'static str,
    /// The mathematical statement certified by a PASS.
    pub statement: &'static str,
    pub variants: &'static [Variant],
    pub min_n: usize,
    pub max_n: usize,
    /// Whether grid points carry a degree bound.
    pub uses_degree: bool,
    pub default_samples: usize,
    pub default_grid: &'static [(usize, u32, Variant, Option<u32>)],
    run: Runner,
}

#[derive(Serialize)]
pub struct CheckEntry {
    pub id: &'static str,
    pub module: &'static str,
    pub statement: &'static str,
    pub default_grid: Vec<GridPoint>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub default_samples: Option<usize>,
}

impl CheckInfo {
    pub fn default_points(&self) -> Vec<GridPoint> {
        self.default_grid
            .iter()
            .map(|&(n, p, variant, degree)| GridPoint { n, p, variant, degree })
            .collect()
    }

    pub fn entry(&self) -> CheckEntry {
        CheckEntry {
            id: self.id,
            module: self.module,
            statement: self.statement,
            default_grid: self.default_points(),
            default_samples: (self.default_samples > 0).then_some(self.default_samples),
        }
    }

    /// Size gate applied before running; oversize points are skipped.
    pub fn precondition(&self, pt: &GridPoint) -> Result<()> {
        if pt.n > self.max_n {
            return Err(Error::BudgetExceeded(format!("{} supports n ≤ {}", self.id, self.max_n)));
        }
        if pt.n < self.min_n {
            return Err(Error::Config(format!("{} needs n ≥ {}", self.id, self.min_n)));
        }
        Ok(())
    }

    pub fn run(&self, pt: &GridPoint, ctx: &mut RunCtx) -> Result<Value> {
        self.precondition(pt)?;
        (self.run)(pt, ctx)
    }
}

fn alg(pt: &GridPoint) -> Result<LieAlgebra> {
    LieAlgebra::new(pt.n, pt.variant, pt.p)
}

fn pbw(pt: &GridPoint) -> Result<Pbw> {
    Ok(Pbw::new(&alg(pt)?))
}

fn degree(pt: &GridPoint) -> u32 {
    pt.degree.unwrap_or(0)
}

fn compute_all_u(pt: &GridPoint, ctx: &mut RunCtx) -> Result<Value> {
    let pbw = pbw(pt)?;
    let m = invariants::char_invariants(pbw.algebra())?.members.len();
    let us = (1..=m)
        .map(|i| envelop::compute_u(&pbw, i, ctx.cap).map(|u| u.to_json(&pbw)))
        .collect::<Result<Vec<_>>>()?;
    Ok(json!({"u": us}))
}

static CATALOGUE: &[CheckInfo] = &[
    CheckInfo {
        id: "central-system",
        module: "envelop",
        statement: "Applying η∘θ to the Frobenius-twisted first-row system gives 𝓜·e = η(θ(s)) + r̃ in the p-centre, with 𝓜 and r̃ free of the generators η(e_{i,1}) and e_i = e_{i,1}^p − e_{i,1}^{[p]}; for n = 2 both sides agree in PBW normal form and d₀ = η(θ(d)) is central with gr(d₀) = θ(d^p).",
        variants: &[GL],
        min_n: 1,
        max_n: 3,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[(2, 2, GL, None), (2, 3, GL, None), (3, 2, GL, None), (3, 3, GL, None)],
        run: |pt, _| envelop::central_system_check(&pbw(pt)?),
    },
    CheckInfo {
        id: "compute-u",
        module: "envelop",
        statement: "For each invariant t_i there is a unique u_i in U^G ∩ U_{deg t_i} with γΨ(u_i) = Φ(θ(t_i)); it is central and gr(u_i) = θ(t_i).",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 3,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[(2, 2, GL, None), (2, 3, GL, None), (2, 5, GL, None), (2, 3, SL, None), (2, 5, SL, None)],
        run: compute_all_u,
    },
    CheckInfo {
        id: "d-non-invariance",
        module: "invariants",
        statement: "d is not annihilated by the adjoint action of g (a torus element moves it), while d^p is annihilated by every element of g.",
        variants: &[GL, SL],
        min_n: 2,
        max_n: 4,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[
            (2, 2, GL, None), (2, 3, GL, None), (2, 5, GL, None),
            (3, 2, GL, None), (3, 3, GL, None), (3, 5, GL, None),
            (2, 3, SL, None), (2, 5, SL, None), (3, 2, SL, None), (3, 5, SL, None),
        ],
        run: |pt, _| invariants::d_non_invariance_witness(&alg(pt)?),
    },
    CheckInfo {
        id: "eq1-identity",
        module: "invariants",
        statement: "With M = (∂s_i/∂x[1,j]), c the first-row coordinates and r = M·c − s, the identity M·c = s + r holds and neither M nor r involves a first-row coordinate.",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 5,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[
            (2, 2, GL, None), (2, 3, GL, None), (2, 5, GL, None),
            (3, 2, GL, None), (3, 3, GL, None), (3, 5, GL, None),
            (4, 2, GL, None), (4, 3, GL, None), (4, 5, GL, None),
        ],
        run: |pt, _| invariants::eq1_identity_check(&alg(pt)?),
    },
    CheckInfo {
        id: "freeness-census",
        module: "invariants",
        statement: "In every degree up to D the invariant ring equals the span of the products t^κ·f^p (0 ≤ κ_i < p, f a p-th power of a polynomial), and those products are linearly independent.",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 3,
        uses_degree: true,
        default_samples: 0,
        default_grid: &[(2, 2, GL, Some(4)), (2, 3, GL, Some(6)), (2, 3, SL, Some(6)), (2, 5, SL, Some(6))],
        run: |pt, ctx| invariants::freeness_census(&alg(pt)?, degree(pt), ctx.cap),
    },
    CheckInfo {
        id: "gr-compatibility",
        module: "envelop",
        statement: "For the central generators and their pairwise products u, the top components of γΨ(u) and Ψ(u) both equal Φ(gr(u)), and γΨ is multiplicative on the products.",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 3,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[(2, 3, GL, None), (2, 5, GL, None), (2, 3, SL, None), (2, 5, SL, None)],
        run: |pt, ctx| envelop::gr_compatibility_check(&pbw(pt)?, ctx.cap),
    },
    CheckInfo {
        id: "group-invariants-in-center",
        module: "envelop",
        statement: "Every G-invariant element of U_k commutes with g, so U^G ∩ U_k ⊆ Z ∩ U_k.",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 3,
        uses_degree: true,
        default_samples: 0,
        default_grid: &[(2, 2, GL, Some(3)), (2, 3, GL, Some(3)), (2, 3, SL, Some(3)), (2, 2, SL, Some(3))],
        run: |pt, ctx| envelop::group_invariants_in_center_check(&pbw(pt)?, degree(pt), ctx.cap),
    },
    CheckInfo {
        id: "irreducibility",
        module: "invariants",
        statement: "The determinant d of the first-row system (its restriction d' on sl_n) has no linear factor over any F_{p^e}, e ≤ deg d, hence is absolutely irreducible in degree ≤ 3.",
        variants: &[GL, SL],
        min_n: 2,
        max_n: 3,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[
            (2, 2, GL, None), (2, 3, GL, None), (2, 5, GL, None),
            (3, 2, GL, None), (3, 3, GL, None), (3, 5, GL, None),
            (2, 3, SL, None), (2, 5, SL, None), (3, 2, SL, None), (3, 5, SL, None),
        ],
        run: |pt, _| invariants::d_irreducibility_check(&alg(pt)?),
    },
    CheckInfo {
        id: "irregular-census",
        module: "invariants",
        statement: "On gl_2(F_p) the irregular elements are exactly the scalars, and every companion-type matrix x_a is regular.",
        variants: &[GL],
        min_n: 2,
        max_n: 2,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[(2, 2, GL, None), (2, 3, GL, None), (2, 5, GL, None)],
        run: |pt, _| invariants::irregular_census(pt.p),
    },
    CheckInfo {
        id: "jacobson-additivity",
        module: "envelop",
        statement: "η(x) = x^p − x^{[p]} is additive: η(x + y) = η(x) + η(y) for every pair of basis elements.",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 3,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[
            (2, 2, GL, None), (2, 3, GL, None), (2, 5, GL, None), (3, 2, GL, None), (3, 3, GL, None),
            (2, 2, SL, None), (2, 3, SL, None), (3, 2, SL, None), (3, 3, SL, None),
        ],
        run: |pt, _| envelop::jacobson_additivity_check(&pbw(pt)?),
    },
    CheckInfo {
        id: "lemma2",
        module: "invariants",
        statement: "In each degree up to D, restricting gl_n-invariants to sl_n gives exactly the sl_n-invariants, and Lie-algebra invariants coincide with group invariants.",
        variants: &[GL],
        min_n: 2,
        max_n: 3,
        uses_degree: true,
        default_samples: 0,
        default_grid: &[(2, 2, GL, Some(4)), (2, 3, GL, Some(4)), (3, 3, GL, Some(3))],
        run: |pt, ctx| invariants::lemma2_check(pt.n, pt.p, degree(pt), ctx.cap),
    },
    CheckInfo {
        id: "lemma3",
        module: "invariants",
        statement: "At every companion-type matrix x_a the determinant d takes the value (−1)^⌊n/2⌋, and M(x_a) is diagonal with entries ±1.",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 5,
        uses_degree: false,
        default_samples: 100,
        default_grid: &[
            (2, 2, GL, None), (2, 3, GL, None), (2, 5, GL, None), (2, 7, GL, None),
            (3, 2, GL, None), (3, 3, GL, None), (3, 5, GL, None), (3, 7, GL, None),
            (4, 2, GL, None), (4, 3, GL, None), (4, 5, GL, None), (4, 7, GL, None),
            (5, 2, GL, None), (5, 3, GL, None), (5, 5, GL, None), (5, 7, GL, None),
        ],
        run: |pt, ctx| invariants::lemma3_check(&alg(pt)?, ctx.samples, &mut ctx.rng),
    },
    CheckInfo {
        id: "p-centre-centrality",
        module: "envelop",
        statement: "Each η(b) for a basis element b commutes with every basis element in U.",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 3,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[
            (2, 2, GL, None), (2, 3, GL, None), (3, 2, GL, None), (3, 3, GL, None),
            (2, 2, SL, None), (2, 3, SL, None), (3, 2, SL, None), (3, 3, SL, None),
        ],
        run: |pt, _| envelop::p_centre_centrality_check(&pbw(pt)?),
    },
    CheckInfo {
        id: "pbw-confluence",
        module: "envelop",
        statement: "PBW straightening is associative on random triples, and on nonzero pairs deg(uv) = deg u + deg v and gr(uv) = gr(u)·gr(v).",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 3,
        uses_degree: false,
        default_samples: 500,
        default_grid: &[
            (2, 2, GL, None), (2, 3, GL, None), (3, 2, GL, None), (3, 3, GL, None),
            (2, 2, SL, None), (2, 3, SL, None), (3, 2, SL, None), (3, 3, SL, None),
        ],
        run: |pt, ctx| envelop::pbw_confluence_check(&pbw(pt)?, ctx.samples, &mut ctx.rng),
    },
    CheckInfo {
        id: "rationality-witness",
        module: "invariants",
        statement: "adj(M^F)·(s^F + r^F) = d^p·c^F, so the first-row coordinates lie in the field generated by the p-th powers of the system's other entries and the s_i^p.",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 3,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[(2, 2, GL, None), (2, 3, GL, None), (2, 5, GL, None), (3, 2, GL, None)],
        run: |pt, _| invariants::rationality_witness(&alg(pt)?),
    },
    CheckInfo {
        id: "regularity-equivalence",
        module: "invariants",
        statement: "An element is regular iff its minimal polynomial has degree n iff the differentials of the invariants are linearly independent at it (on sl_n: the restricted differentials, together with regularity in gl_n).",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 4,
        uses_degree: false,
        default_samples: 500,
        default_grid: &[
            (2, 2, GL, None), (2, 3, GL, None), (2, 5, GL, None),
            (3, 2, GL, None), (3, 3, GL, None), (3, 5, GL, None),
            (2, 3, SL, None), (2, 5, SL, None), (3, 5, SL, None), (3, 7, SL, None),
        ],
        run: |pt, ctx| invariants::regularity_equivalence(&alg(pt)?, ctx.samples, &mut ctx.rng),
    },
    CheckInfo {
        id: "restriction-symmetric",
        module: "invariants",
        statement: "The restriction of s_i to the diagonal matrices is the elementary symmetric polynomial σ_i.",
        variants: &[GL],
        min_n: 1,
        max_n: 6,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[
            (1, 2, GL, None), (2, 2, GL, None), (3, 3, GL, None), (4, 2, GL, None), (4, 3, GL, None), (4, 5, GL, None),
        ],
        run: |pt, _| invariants::diagonal_restriction_check(pt.n, pt.p),
    },
    CheckInfo {
        id: "semiinvariance",
        module: "invariants",
        statement: "d is homogeneous of degree n(n−1)/2 with the single torus weight nε₁ − Σε_i, is fixed by every upper unipotent substitution, equals the permutation expansion of det M, and scales by a character under sampled Levi elements.",
        variants: &[GL, SL],
        min_n: 2,
        max_n: 4,
        uses_degree: false,
        default_samples: 20,
        default_grid: &[
            (2, 2, GL, None), (2, 3, GL, None), (2, 5, GL, None),
            (3, 2, GL, None), (3, 3, GL, None), (3, 5, GL, None),
            (2, 3, SL, None), (2, 5, SL, None), (3, 2, SL, None), (3, 5, SL, None),
        ],
        run: |pt, ctx| invariants::semiinvariance_check(&alg(pt)?, ctx.samples, &mut ctx.rng),
    },
    CheckInfo {
        id: "sl-central-generators",
        module: "envelop",
        statement: "On sl_n (p ∤ n) the transported first-row identity holds in the p-centre, θ(y_1) = e_{1,1} − (1/n)I with η linear on it, and for n = 2 the identity holds in U and d'₀ = η(θ(d')) is central.",
        variants: &[SL],
        min_n: 2,
        max_n: 3,
        uses_degree: false,
        default_samples: 0,
        default_grid: &[(2, 3, SL, None), (2, 5, SL, None)],
        run: |pt, _| envelop::sl_central_generators_check(&pbw(pt)?),
    },
    CheckInfo {
        id: "sl-restriction-quotient",
        module: "invariants",
        statement: "On the sl_n torus, σ₁ restricts to 0 and the restrictions of s'_2, …, s'_n generate the symmetric invariants degree by degree.",
        variants: &[SL],
        min_n: 2,
        max_n: 3,
        uses_degree: true,
        default_samples: 0,
        default_grid: &[(2, 5, SL, Some(4)), (3, 5, SL, Some(4))],
        run: |pt, ctx| invariants::sl_restriction_quotient(&alg(pt)?, degree(pt), ctx.cap),
    },
    CheckInfo {
        id: "veldkamp-center-census",
        module: "envelop",
        statement: "In each filtration degree up to D, the products u^κ·η(b)^β with 0 ≤ κ_i < p are linearly independent, central, and as many as dim Z ∩ U_k: Z is free over the p-centre on the u^κ.",
        variants: &[GL, SL],
        min_n: 1,
        max_n: 3,
        uses_degree: true,
        default_samples: 0,
        default_grid: &[(2, 2, GL, Some(4)), (2, 3, GL, Some(6)), (2, 3, SL, Some(6))],
        run: |pt, ctx| envelop::veldkamp_center_census(&pbw(pt)?, degree(pt), ctx.cap),
    },
];

/// All checks, sorted by id.
pub fn catalogue() -> &'static [CheckInfo] {
    CATALOGUE
}

pub fn find(id: &str) -> Option<&'static CheckInfo> {
    CATALOGUE.iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_is_sorted_and_large() {
        let ids: Vec<&str> = catalogue().iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
        assert!(ids.len() >= 15);
        assert!(find("eq1-identity").is_some());
        assert!(find("veldkamp-center-census").is_some());
    }

    #[test]
    fn default_grids_respect_gates() {
        for c in catalogue() {
            for pt in c.default_points() {
                assert!(c.variants.contains(&pt.variant), "{} {:?}", c.id, pt);
                assert_eq!(pt.degree.is_some(), c.uses_degree, "{}", c.id);
                assert!(c.precondition(&pt).is_ok(), "{} {:?}", c.id, pt);
            }
        }
    }
}

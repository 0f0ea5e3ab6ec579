//! Acceptance suite: one line per criterion, exit status 1 if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;
use zlab::{Report, Status, Variant};
use zlab_cli::{run_collect, SuiteConfig, DEFAULT_CAP};

const GL: Variant = Variant::Gl;
const SL: Variant = Variant::Sl;

type Outcome = Result<String, String>;

struct Run<'a> {
    check: &'a str,
    ns: &'a [usize],
    ps: &'a [u32],
    variants: &'a [Variant],
    degree: Option<u32>,
    samples: Option<usize>,
}

impl<'a> Run<'a> {
    fn new(check: &'a str, ns: &'a [usize], ps: &'a [u32], variants: &'a [Variant]) -> Self {
        Self { check, ns, ps, variants, degree: None, samples: None }
    }

    fn degree(mut self, d: u32) -> Self {
        self.degree = Some(d);
        self
    }

    fn samples(mut self, s: usize) -> Self {
        self.samples = Some(s);
        self
    }

    fn go(&self) -> Result<Vec<Report>, String> {
        let config = SuiteConfig {
            checks: vec![self.check.to_string()],
            ns: Some(self.ns.to_vec()),
            ps: Some(self.ps.to_vec()),
            variants: Some(self.variants.to_vec()),
            max_degree: self.degree,
            samples: self.samples,
            seed: 2024,
            cap: DEFAULT_CAP,
            jobs: None,
        };
        let (reports, _) = run_collect(&config).map_err(|e| format!("{}: {e}", self.check))?;
        Ok(reports)
    }

    /// Every report must pass.
    fn all_pass(&self) -> Result<Vec<Report>, String> {
        let reports = self.go()?;
        for r in &reports {
            if r.status != Status::Pass {
                return Err(format!("{} {} is {}: {}", r.check, r.params, r.status, r.witness));
            }
        }
        Ok(reports)
    }
}

fn timed(budget: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let out = f();
    let elapsed = start.elapsed();
    match out {
        Ok(detail) if elapsed <= budget => Ok(format!("{detail} [{:.2?} of {:?}]", elapsed, budget)),
        Ok(_) => Err(format!("took {elapsed:.2?}, budget {budget:?}")),
        Err(e) => Err(e),
    }
}

fn count(reports: &[Report]) -> String {
    format!("{} reports", reports.len())
}

fn criterion_1() -> Outcome {
    let r = Run::new("lemma3", &[2, 3, 4, 5], &[2, 3, 5, 7], &[GL]).samples(100).all_pass()?;
    if r.len() != 16 {
        return Err(format!("expected 16 grid points, got {}", r.len()));
    }
    Ok(count(&r))
}

fn criterion_2() -> Outcome {
    let r = Run::new("eq1-identity", &[2, 3, 4], &[2, 3, 5], &[GL]).all_pass()?;
    Ok(count(&r))
}

fn criterion_3() -> Outcome {
    let mut r = Run::new("rationality-witness", &[2], &[2, 3, 5], &[GL]).all_pass()?;
    r.extend(Run::new("rationality-witness", &[3], &[2], &[GL]).all_pass()?);
    Ok(count(&r))
}

fn criterion_4() -> Outcome {
    let gl2 = Run::new("regularity-equivalence", &[2], &[2, 3, 5], &[GL]).samples(500).all_pass()?;
    for r in &gl2 {
        let p = r.params.p as u64;
        let ex = &r.witness["exhaustive"];
        // the irregular elements of gl_2 are the p scalars
        if ex["irregular"].as_u64() != Some(p) || ex["regular"].as_u64() != Some(p.pow(4) - p) {
            return Err(format!("gl_2 p={p}: exhaustive census {ex}"));
        }
    }
    let gl3 = Run::new("regularity-equivalence", &[3], &[2, 3, 5], &[GL]).samples(500).all_pass()?;
    let sl2 = Run::new("regularity-equivalence", &[2], &[3, 5], &[SL]).samples(500).all_pass()?;
    let sl3 = Run::new("regularity-equivalence", &[3], &[5, 7], &[SL]).samples(500).all_pass()?;
    for r in gl3.iter().chain(&sl2).chain(&sl3) {
        if r.witness["disagreements"].as_u64() != Some(0) {
            return Err(format!("{} reports disagreements", r.params));
        }
    }
    Ok(format!("{} grid points, 0 disagreements", gl2.len() + gl3.len() + sl2.len() + sl3.len()))
}

fn criterion_5() -> Outcome {
    let mut r = Run::new("freeness-census", &[2], &[2], &[GL]).degree(4).all_pass()?;
    r.extend(Run::new("freeness-census", &[2], &[3], &[GL]).degree(6).all_pass()?);
    r.extend(Run::new("freeness-census", &[2], &[3, 5], &[SL]).degree(6).all_pass()?);
    Ok(count(&r))
}

fn criterion_6() -> Outcome {
    let mut r = Run::new("veldkamp-center-census", &[2], &[2], &[GL]).degree(4).all_pass()?;
    r.extend(Run::new("veldkamp-center-census", &[2], &[3], &[GL]).degree(6).all_pass()?);
    r.extend(Run::new("veldkamp-center-census", &[2], &[3], &[SL]).degree(6).all_pass()?);
    for rep in &r {
        for row in rep.witness["dims"].as_array().ok_or("missing dims")? {
            if row[1] != row[2] {
                return Err(format!("{}: row {row}", rep.params));
            }
        }
    }
    Ok(count(&r))
}

fn criterion_7() -> Outcome {
    let r = Run::new("compute-u", &[2], &[3, 5], &[GL, SL]).all_pass()?;
    let gl5 = r
        .iter()
        .find(|x| x.params.variant == GL && x.params.p == 5)
        .ok_or("missing gl_2 p=5")?;
    // the trace e11 + e22 is central with symbol θ(s_1) and a γ-shift of ρ(e11) + ρ(e22) = 0
    if gl5.witness["u"][0]["element"] != Value::from("1*e[1,1] + 1*e[2,2]") {
        return Err(format!("u_1 for gl_2 p=5 is {}", gl5.witness["u"][0]["element"]));
    }
    Ok(count(&r))
}

fn criterion_8() -> Outcome {
    let mut n_reports = 0;
    for check in ["semiinvariance", "irreducibility"] {
        let reports = Run::new(check, &[2, 3], &[2, 3, 5], &[GL, SL]).go()?;
        for r in &reports {
            let coprime = r.params.variant == GL || r.params.n as u32 % r.params.p != 0;
            let expected = if coprime { Status::Pass } else { Status::Skipped };
            if r.status != expected {
                return Err(format!("{check} {} is {}: {}", r.params, r.status, r.witness));
            }
            if !coprime && r.reason.as_deref() != Some("UnsupportedCharacteristic") {
                return Err(format!("{check} {} skipped for {:?}", r.params, r.reason));
            }
        }
        n_reports += reports.len();
    }
    Ok(format!("{n_reports} reports"))
}

fn criterion_9() -> Outcome {
    let mut r = Run::new("d-non-invariance", &[2, 3], &[2, 3, 5], &[GL]).all_pass()?;
    let central = Run::new("central-system", &[2], &[2, 3], &[GL]).all_pass()?;
    for c in &central {
        if c.witness["direct"].is_null() || c.witness["d0"].is_null() {
            return Err(format!("{}: direct expansion missing", c.params));
        }
    }
    r.extend(central);
    r.extend(Run::new("sl-central-generators", &[2], &[3, 5], &[SL]).all_pass()?);
    Ok(count(&r))
}

fn criterion_10() -> Outcome {
    let mut r = Run::new("lemma2", &[2], &[2, 3], &[GL]).degree(4).all_pass()?;
    r.extend(Run::new("lemma2", &[3], &[3], &[GL]).degree(3).all_pass()?);
    Ok(count(&r))
}

fn criterion_11() -> Outcome {
    let mut r = Run::new("jacobson-additivity", &[2, 3], &[2, 3], &[GL, SL]).all_pass()?;
    r.extend(Run::new("jacobson-additivity", &[2], &[5], &[GL]).all_pass()?);
    r.extend(Run::new("restriction-symmetric", &[1, 2, 3, 4], &[2, 3, 5], &[GL]).all_pass()?);
    r.extend(Run::new("sl-restriction-quotient", &[2, 3], &[5], &[SL]).degree(4).all_pass()?);
    Ok(count(&r))
}

fn criterion_12() -> Outcome {
    let run = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_zlab"))
            .args(["verify-all", "--seed", "17", "--format", "json", "--no-timings"])
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("verify-all exited with {}", out.status));
        }
        Ok(out.stdout)
    };
    let (a, b) = (run()?, run()?);
    if a != b {
        return Err("two runs with the same seed differ".into());
    }
    let doc: Value = serde_json::from_slice(&a).map_err(|e| e.to_string())?;
    Ok(format!("{} identical bytes, {} reports", a.len(), doc["reports"].as_array().map_or(0, Vec::len)))
}

fn main() {
    let secs = Duration::from_secs;
    let criteria: [(&str, Duration, fn() -> Outcome); 12] = [
        ("d(x_a) = (-1)^floor(n/2) and M(x_a) diagonal", secs(10), criterion_1),
        ("M·c = s + r with r free of first-row coordinates", secs(30), criterion_2),
        ("adj(M^F)(s^F + r^F) = d^p c^F", secs(300), criterion_3),
        ("regularity criteria agree", secs(30), criterion_4),
        ("invariant ring freeness census", secs(120), criterion_5),
        ("centre census over the p-centre", secs(300), criterion_6),
        ("central generators u_i", secs(60), criterion_7),
        ("semiinvariance and irreducibility of d", secs(120), criterion_8),
        ("d0 = η(θ(d)) and the central system", secs(300), criterion_9),
        ("gl and sl invariants agree degree by degree", secs(120), criterion_10),
        ("η additivity and torus restrictions", secs(120), criterion_11),
        ("verify-all is deterministic", secs(1200), criterion_12),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        match timed(budget, f) {
            Ok(detail) => println!("criterion {:>2}: PASS  {name}: {detail}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}

//! Expanding a configuration into work items and running them.

use std::collections::BTreeSet;
use std::sync::mpsc;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::catalogue::{catalogue, find, CheckInfo, GridPoint, RunCtx};
use zlab::{Error, Params, PrimeField, Report, Result, Status, Variant};

pub const DEFAULT_CAP: usize = 200_000;

#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    pub checks: Vec<String>,
    /// Overrides for the grid; `None` keeps the check's defaults.
    pub ns: Option<Vec<usize>>,
    pub ps: Option<Vec<u32>>,
    pub variants: Option<Vec<Variant>>,
    pub max_degree: Option<u32>,
    pub samples: Option<usize>,
    pub seed: u64,
    pub cap: usize,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
}

impl SuiteConfig {
    pub fn all_checks() -> Vec<String> {
        catalogue().iter().map(|c| c.id.to_string()).collect()
    }
}

pub struct WorkItem {
    pub check: &'static CheckInfo,
    pub point: GridPoint,
    /// Position of the point in the check's grid, mixed into the seed.
    pub index: usize,
}

pub struct Plan {
    pub items: Vec<WorkItem>,
    /// Checks with no point left after intersecting with their variants.
    pub not_applicable: Vec<String>,
}

fn distinct<T: Ord + Copy>(it: impl Iterator<Item = T>) -> Vec<T> {
    it.collect::<BTreeSet<_>>().into_iter().collect()
}

fn grid_for(check: &CheckInfo, config: &SuiteConfig) -> Vec<GridPoint> {
    let defaults = check.default_points();
    let overridden = config.ns.is_some() || config.ps.is_some() || config.variants.is_some();
    let mut points = if overridden {
        let ns = config.ns.clone().unwrap_or_else(|| distinct(defaults.iter().map(|g| g.n)));
        let ps = config.ps.clone().unwrap_or_else(|| distinct(defaults.iter().map(|g| g.p)));
        let vs = config.variants.clone().unwrap_or_else(|| distinct(defaults.iter().map(|g| g.variant)));
        let default_degree = defaults.iter().filter_map(|g| g.degree).max();
        let mut out = Vec::new();
        for &variant in vs.iter().filter(|v| check.variants.contains(v)) {
            for &n in &ns {
                for &p in &ps {
                    out.push(GridPoint { n, p, variant, degree: default_degree });
                }
            }
        }
        out
    } else {
        defaults
    };
    if check.uses_degree {
        if let Some(d) = config.max_degree {
            for pt in &mut points {
                pt.degree = Some(d);
            }
        }
    }
    points
}

/// Validates the configuration and expands it. Unknown ids, non-prime
/// characteristics and invalid algebras are configuration errors.
pub fn plan(config: &SuiteConfig) -> Result<Plan> {
    let mut ids: Vec<&str> = config.checks.iter().map(String::as_str).collect();
    ids.sort();
    ids.dedup();
    let mut checks = Vec::new();
    for id in &ids {
        checks.push(find(id).ok_or_else(|| Error::Config(format!("unknown check id '{id}'")))?);
    }
    if let Some(ps) = &config.ps {
        for &p in ps {
            PrimeField::new(p).map_err(|_| Error::Config(format!("{p} is not a supported prime")))?;
        }
    }
    let mut items = Vec::new();
    let mut not_applicable = Vec::new();
    for check in checks {
        let points = grid_for(check, config);
        if points.is_empty() {
            not_applicable.push(check.id.to_string());
            continue;
        }
        for (index, point) in points.into_iter().enumerate() {
            if point.n == 0 || (point.variant == Variant::Sl && point.n < 2) {
                return Err(Error::Config(format!("{}_{} is not a valid algebra", point.variant, point.n)));
            }
            if let Err(e @ Error::Config(_)) = check.precondition(&point) {
                return Err(e);
            }
            items.push(WorkItem { check, point, index });
        }
    }
    if ids.len() == 1 && items.is_empty() {
        return Err(Error::Config(format!("{} does not apply to the requested variants", ids[0])));
    }
    Ok(Plan { items, not_applicable })
}

/// FNV-1a, used to derive a per-item random stream from the seed.
fn stream_id(check: &str, index: usize) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in check.bytes().chain(index.to_le_bytes()) {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

pub fn run_item(item: &WorkItem, config: &SuiteConfig) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(stream_id(item.check.id, item.index));
    let mut ctx = RunCtx {
        samples: config.samples.unwrap_or(item.check.default_samples),
        cap: config.cap,
        rng,
    };
    let pt = item.point;
    let params = Params { n: pt.n, p: pt.p, variant: pt.variant, degree: pt.degree };
    let start = Instant::now();
    let result = item.check.run(&pt, &mut ctx);
    Report::from_result(item.check.id, params, result, start.elapsed().as_millis() as u64)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub not_applicable: Vec<String>,
    pub millis: u64,
}

impl Summary {
    pub fn exit_code(&self) -> i32 {
        if self.fail > 0 {
            1
        } else {
            0
        }
    }
}

/// Runs every item, calling `sink` on each report in plan order (check id,
/// then grid order) as soon as all earlier reports are available.
pub fn run_suite(config: &SuiteConfig, mut sink: impl FnMut(&Report)) -> Result<Summary> {
    let plan = plan(config)?;
    let start = Instant::now();
    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = config.jobs {
            b = b.num_threads(j.max(1));
        }
        b.build().map_err(|e| Error::Config(format!("thread pool: {e}")))?
    };
    let mut summary = Summary { not_applicable: plan.not_applicable.clone(), ..Summary::default() };
    let (tx, rx) = mpsc::channel::<(usize, Report)>();
    let items = &plan.items;
    std::thread::scope(|scope| {
        scope.spawn(move || {
            pool.install(|| {
                items.par_iter().enumerate().for_each_with(tx, |tx, (i, item)| {
                    // the receiver lives until every item is reported
                    let _ = tx.send((i, run_item(item, config)));
                });
            });
        });
        let mut pending: Vec<Option<Report>> = (0..items.len()).map(|_| None).collect();
        let mut next = 0;
        for (i, report) in rx {
            pending[i] = Some(report);
            while next < pending.len() {
                let Some(r) = pending[next].take() else { break };
                match r.status {
                    Status::Pass => summary.pass += 1,
                    Status::Fail => summary.fail += 1,
                    Status::Skipped => summary.skipped += 1,
                }
                sink(&r);
                next += 1;
            }
        }
    });
    summary.millis = start.elapsed().as_millis() as u64;
    Ok(summary)
}

/// Collects all reports of a run.
pub fn run_collect(config: &SuiteConfig) -> Result<(Vec<Report>, Summary)> {
    let mut reports = Vec::new();
    let summary = run_suite(config, |r| reports.push(r.clone()))?;
    Ok((reports, summary))
}

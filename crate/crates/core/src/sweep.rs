//! Exhaustive and seeded-random verification sweeps over families of
//! permutations and diagrams.
//!
//! Instances are generated in a fixed order and checked in parallel chunks;
//! results are handed back in generation order, so output is independent of
//! the thread count.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::convex::{
    check_layered_domination, check_m_convex, check_main_support, check_psp_formula, check_psp_inclusion,
    check_schub_support,
};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::perm::{max_weight_formula, Permutation};
use crate::pipedream::pipe_dreams;
use crate::poly::{grothendieck_rec, poly_from_pipe_dreams, schubert_rec};
use crate::raise::{raise_weight_with, RaiseError, RaiseOptions};

/// Largest `n` a sweep will accept.
pub const MAX_SWEEP_N: usize = 8;

/// Random diagrams checked by the `psp-formula` sweep.
pub const RANDOM_DIAGRAMS: usize = 200;

const CHUNK: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    MainSupport,
    MConvex,
    Layered,
    SchubSupport,
    PspFormula,
    OracleEquiv,
    RaiseSweep,
}

impl Claim {
    pub const ALL: [Claim; 7] = [
        Claim::MainSupport,
        Claim::MConvex,
        Claim::Layered,
        Claim::SchubSupport,
        Claim::PspFormula,
        Claim::OracleEquiv,
        Claim::RaiseSweep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Claim::MainSupport => "main-support",
            Claim::MConvex => "m-convex",
            Claim::Layered => "layered",
            Claim::SchubSupport => "schub-support",
            Claim::PspFormula => "psp-formula",
            Claim::OracleEquiv => "oracle-equiv",
            Claim::RaiseSweep => "raise-sweep",
        }
    }

    /// Claims stated only for fireworks permutations; other permutations are skipped.
    pub fn needs_fireworks(self) -> bool {
        matches!(self, Claim::MainSupport | Claim::MConvex | Claim::Layered | Claim::RaiseSweep)
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Claim {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Claim::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| {
            let names: Vec<_> = Claim::ALL.iter().map(|c| c.name()).collect();
            format!("unknown claim {s:?}; expected one of {}", names.join(", "))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Filter {
    #[default]
    All,
    Fireworks,
    Layered,
}

impl Filter {
    pub fn admits(self, w: &Permutation) -> bool {
        match self {
            Filter::All => true,
            Filter::Fireworks => w.is_fireworks(),
            Filter::Layered => w.is_layered(),
        }
    }
}

impl FromStr for Filter {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(Filter::All),
            "fireworks" => Ok(Filter::Fireworks),
            "layered" => Ok(Filter::Layered),
            _ => Err(format!("unknown filter {s:?}; expected all, fireworks or layered")),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationJob {
    pub claim: Claim,
    pub n: usize,
    pub filter: Filter,
    pub seed: u64,
    #[serde(skip)]
    pub threads: Option<usize>,
    #[serde(skip)]
    pub fail_fast: bool,
}

impl VerificationJob {
    pub fn new(claim: Claim, n: usize) -> Self {
        VerificationJob { claim, n, filter: Filter::All, seed: 0, threads: None, fail_fast: false }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceResult {
    pub instance: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

impl InstanceResult {
    fn pass(instance: String) -> Self {
        InstanceResult { instance, ok: true, detail: Value::Null }
    }

    fn fail(instance: String, detail: Value) -> Self {
        InstanceResult { instance, ok: false, detail }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    #[serde(flatten)]
    pub job: VerificationJob,
    pub checked: usize,
    pub failures: Vec<InstanceResult>,
    /// Set when `fail_fast` stopped the sweep before every instance ran.
    pub stopped_early: bool,
    /// Set when an instance hit an internal invariant violation rather than a claim failure.
    pub invariant_violation: bool,
}

impl Summary {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn line(&self) -> String {
        format!("checked {} instances, {} failures", self.checked, self.failures.len())
    }
}

enum Instance {
    Perm(Permutation),
    Diagram(Diagram),
    Pair(BTreeSet<usize>, BTreeSet<usize>, usize),
}

fn instances(job: &VerificationJob) -> Vec<Instance> {
    match job.claim {
        Claim::PspFormula => {
            let mut out: Vec<Instance> = random_diagrams(job.n, job.seed).into_iter().map(Instance::Diagram).collect();
            out.extend(psp_pairs(job.n).into_iter().map(|(a, b)| Instance::Pair(a, b, job.n)));
            out
        }
        claim => Permutation::all(job.n)
            .filter(|w| job.filter.admits(w))
            .filter(|w| !claim.needs_fireworks() || w.is_fireworks())
            .map(Instance::Perm)
            .collect(),
    }
}

/// `count` diagrams with 1 to `max` rows and columns, each cell present with probability 1/2.
pub fn random_diagrams_n(max: usize, seed: u64, count: usize) -> Vec<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let rows = rng.random_range(1..=max);
            let cols = rng.random_range(1..=max);
            let cells: Vec<(usize, usize)> = (1..=rows)
                .flat_map(|i| (1..=cols).map(move |j| (i, j)))
                .filter(|_| rng.random_range(0..2u8) == 1)
                .collect();
            Diagram::new(rows, cols, cells).expect("cells lie in the grid")
        })
        .collect()
}

pub fn random_diagrams(max: usize, seed: u64) -> Vec<Diagram> {
    random_diagrams_n(max, seed, RANDOM_DIAGRAMS)
}

/// All `(A, B)` with `∅ ≠ A ⊆ B ⊆ [n]` and `max A = max B`.
pub fn psp_pairs(n: usize) -> Vec<(BTreeSet<usize>, BTreeSet<usize>)> {
    let subset = |mask: u32| (1..=n).filter(|k| mask >> (k - 1) & 1 == 1).collect::<BTreeSet<_>>();
    let mut out = Vec::new();
    for b in 1u32..(1 << n) {
        for a in 1u32..(1 << n) {
            if a & !b == 0 && (32 - a.leading_zeros()) == (32 - b.leading_zeros()) {
                out.push((subset(a), subset(b)));
            }
        }
    }
    out
}

fn report_value<T: Serialize>(r: &T) -> Value {
    serde_json::to_value(r).expect("reports serialize")
}

/// Every raise of every dream of `w` at every deficient row.
fn raise_all(w: &Permutation, opts: RaiseOptions) -> std::result::Result<usize, RaiseError> {
    let top = max_weight_formula(w).map_err(|e| RaiseError::Precondition(e.to_string()))?;
    let mut count = 0;
    for p in pipe_dreams(w) {
        let wt = p.weight();
        for a in (1..=w.n()).filter(|&a| wt[a - 1] < top[a - 1]) {
            raise_weight_with(&p, w, a, opts)?;
            count += 1;
        }
    }
    Ok(count)
}

fn run_one(claim: Claim, inst: &Instance) -> (InstanceResult, bool) {
    let res = |ok: bool, name: String, detail: Value| {
        if ok {
            InstanceResult::pass(name)
        } else {
            InstanceResult::fail(name, detail)
        }
    };
    let err = |name: String, e: Error| InstanceResult::fail(name, json!({ "error": e.to_string() }));
    match inst {
        Instance::Perm(w) => {
            let name = w.to_string();
            let out = match claim {
                Claim::MainSupport => match check_main_support(w) {
                    Ok(c) => res(c.ok(), name, report_value(&c)),
                    Err(e) => err(name, e),
                },
                Claim::MConvex => match check_m_convex(w) {
                    Ok((r, witness)) => res(r.ok, name, json!({ "witness": witness })),
                    Err(e) => err(name, e),
                },
                Claim::Layered => match check_layered_domination(w) {
                    Ok(r) => res(r.ok, name, report_value(&r)),
                    Err(e) => err(name, e),
                },
                Claim::SchubSupport => {
                    let r = check_schub_support(w);
                    res(r.ok, name, report_value(&r))
                }
                Claim::OracleEquiv => {
                    let s = poly_from_pipe_dreams(w, true) == schubert_rec(w);
                    let g = poly_from_pipe_dreams(w, false) == grothendieck_rec(w);
                    res(s && g, name, json!({ "schubert_equal": s, "grothendieck_equal": g }))
                }
                Claim::RaiseSweep => match raise_all(w, RaiseOptions::default()) {
                    Ok(_) => InstanceResult::pass(name),
                    Err(RaiseError::Precondition(m)) => InstanceResult::fail(name, json!({ "error": m })),
                    Err(RaiseError::InvariantViolation { message, trace }) => {
                        let detail = json!({ "error": message, "trace": *trace });
                        return (InstanceResult::fail(name, detail), true);
                    }
                },
                Claim::PspFormula => unreachable!("psp-formula sweeps diagrams"),
            };
            (out, false)
        }
        Instance::Diagram(d) => {
            let r = check_psp_formula(d);
            (res(r.ok, r.instance.clone(), report_value(&r)), false)
        }
        Instance::Pair(a, b, n) => {
            let name = format!("A={a:?} B={b:?}");
            let out = match check_psp_inclusion(a, b, *n) {
                Ok(ok) => res(ok, name, Value::Null),
                Err(e) => err(name, e),
            };
            (out, false)
        }
    }
}

/// Runs the sweep, calling `on_result` for every instance in generation order.
pub fn run_job(job: &VerificationJob, mut on_result: impl FnMut(&InstanceResult)) -> Result<Summary> {
    if job.n == 0 {
        return Err(Error::Precondition("n must be at least 1".into()));
    }
    if job.n > MAX_SWEEP_N {
        return Err(Error::TooLarge { n: job.n, max: MAX_SWEEP_N });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(job.threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    let all = instances(job);
    let mut summary = Summary {
        job: job.clone(),
        checked: 0,
        failures: Vec::new(),
        stopped_early: false,
        invariant_violation: false,
    };
    for chunk in all.chunks(CHUNK) {
        let results: Vec<(InstanceResult, bool)> =
            pool.install(|| chunk.par_iter().map(|inst| run_one(job.claim, inst)).collect());
        for (r, invariant) in results {
            summary.checked += 1;
            on_result(&r);
            summary.invariant_violation |= invariant;
            if !r.ok {
                summary.failures.push(r);
                if job.fail_fast {
                    summary.stopped_early = summary.checked < all.len();
                    return Ok(summary);
                }
            }
        }
    }
    Ok(summary)
}

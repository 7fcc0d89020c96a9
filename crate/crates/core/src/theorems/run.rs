use std::sync::atomic::{AtomicBool, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::enumerate::{enumerate_spaces, SpaceMode};
use super::registry::{check_instance, TheoremId, Verdict};
use crate::adframe::Variant;
use crate::error::{Error, Result};
use crate::finord::FinPreTopSpace;
use crate::json::space_value;
use crate::subset::Subset;

/// One line of the report stream.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub id: TheoremId,
    pub instance: Value,
    pub verdict: Verdict,
    /// `{"message": ..., "minimized"?: space}`; absent on a plain pass.
    pub witness: Option<Value>,
    pub ms: f64,
}

impl CheckReport {
    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("plain data")
    }

    /// The record without its timing, for comparing runs.
    pub fn canonical(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("plain data");
        v.as_object_mut().expect("object").remove("ms");
        v
    }
}

pub fn instance_value(x: &FinPreTopSpace, variant: Variant) -> Value {
    json!({ "space": space_value(x), "variant": variant })
}

/// Runs one check on one instance. Failures carry a greedily minimized
/// subspace that still fails.
pub fn run_check(id: TheoremId, x: &FinPreTopSpace, variant: Variant) -> CheckReport {
    let start = Instant::now();
    let outcome = check_instance(id, x, variant);
    let witness = match (&outcome.verdict, outcome.witness) {
        (Verdict::Fail, w) => {
            let small = minimize(id, x, variant);
            let mut obj = json!({ "message": w.unwrap_or_default() });
            if small.n() < x.n() {
                obj["minimized"] = space_value(&small);
            }
            Some(obj)
        }
        (_, Some(w)) => Some(json!({ "message": w })),
        (_, None) => None,
    };
    CheckReport {
        id,
        instance: instance_value(x, variant),
        verdict: outcome.verdict,
        witness,
        ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Drops points one at a time while the check keeps failing.
pub fn minimize(id: TheoremId, x: &FinPreTopSpace, variant: Variant) -> FinPreTopSpace {
    let mut cur = x.clone();
    'outer: loop {
        for p in 0..cur.n() {
            let keep = Subset::full(cur.n()) & !Subset::singleton(p);
            let smaller = cur.subspace(keep);
            if check_instance(id, &smaller, variant).verdict == Verdict::Fail {
                cur = smaller;
                continue 'outer;
            }
        }
        return cur;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepSpec {
    pub n: usize,
    pub variants: Vec<Variant>,
    pub mode: SpaceMode,
    pub fail_fast: bool,
    pub budget: Option<Duration>,
}

impl SweepSpec {
    pub fn all(n: usize) -> SweepSpec {
        SweepSpec { n, variants: Variant::ALL.to_vec(), mode: SpaceMode::All, fail_fast: false, budget: None }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub expected_fail: usize,
    pub skip: usize,
}

impl Tally {
    pub fn of(reports: &[CheckReport]) -> Tally {
        let mut t = Tally::default();
        for r in reports {
            match r.verdict {
                Verdict::Pass => t.pass += 1,
                Verdict::Fail => t.fail += 1,
                Verdict::ExpectedFail => t.expected_fail += 1,
                Verdict::Skip => t.skip += 1,
            }
        }
        t
    }
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    /// In canonical instance order: spaces as enumerated, variants within each space.
    pub reports: Vec<CheckReport>,
    pub tally: Tally,
    /// A failure stopped the sweep early.
    pub stopped_early: bool,
}

/// Runs a check over every space on `n` points, in parallel, keeping
/// canonical order. Exceeding the time budget is an error.
pub fn run_sweep(id: TheoremId, spec: &SweepSpec) -> Result<SweepResult> {
    let spaces = enumerate_spaces(spec.n, &spec.mode)?;
    run_batch(id, &spaces, spec)
}

/// Runs a check over the given spaces with the variants, budget and
/// fail-fast setting of `spec`; `spec.n` and `spec.mode` are ignored.
pub fn run_batch(id: TheoremId, spaces: &[FinPreTopSpace], spec: &SweepSpec) -> Result<SweepResult> {
    let jobs: Vec<(usize, Variant)> =
        (0..spaces.len()).flat_map(|i| spec.variants.iter().map(move |&v| (i, v))).collect();
    let start = Instant::now();
    let stop = AtomicBool::new(false);
    let over_budget = AtomicBool::new(false);
    let reports: Vec<Option<CheckReport>> = jobs
        .par_iter()
        .map(|&(i, v)| {
            if stop.load(Ordering::Relaxed) {
                return None;
            }
            if spec.budget.is_some_and(|b| start.elapsed() > b) {
                over_budget.store(true, Ordering::Relaxed);
                stop.store(true, Ordering::Relaxed);
                return None;
            }
            let r = run_check(id, &spaces[i], v);
            if spec.fail_fast && r.verdict == Verdict::Fail {
                stop.store(true, Ordering::Relaxed);
            }
            Some(r)
        })
        .collect();
    if over_budget.load(Ordering::Relaxed) {
        return Err(Error::BudgetExceeded(format!(
            "sweep of {id} over {} spaces stopped after {} ms",
            spaces.len(),
            start.elapsed().as_millis()
        )));
    }
    let stopped_early = reports.iter().any(Option::is_none);
    let reports: Vec<CheckReport> = reports.into_iter().flatten().collect();
    let tally = Tally::of(&reports);
    Ok(SweepResult { reports, tally, stopped_early })
}

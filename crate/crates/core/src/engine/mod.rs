//! Trial engine: tolerance-aware assertion checks, deterministic sampling,
//! script evaluation, and report aggregation.
//!
//! All residuals are dimensionless — normalized by operand magnitudes or by
//! the base triangle's circumradius — so a single ε is meaningful across the
//! sampler's whole scale range. Aggregation is associative and
//! order-normalized (worst-trial ties break towards the lowest trial index),
//! which is what makes chunked parallel execution observationally identical
//! to a sequential run.

mod eval;
mod sampler;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use crate::centers::{circumcircle, Triangle};
use crate::dsl::{Expectation, Script};
use crate::geom::{dot, Circle, Point, Vector, DEGENERACY_FLOOR};
use crate::num;

pub use eval::{evaluate, AssertionOutcome, EvalError, Value};
pub use sampler::{sample_triangle, SamplerConfig, SamplerExhausted, Similarity};

/// Tolerance state for one trial: the relative ε and the base triangle's
/// circumradius as the length scale.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ToleranceContext {
    /// Relative tolerance, in (0, 1e-2].
    pub epsilon: f64,
    /// Positive length scale (circumradius of the current base triangle).
    pub scale: f64,
}

impl ToleranceContext {
    pub fn new(epsilon: f64, scale: f64) -> Self {
        debug_assert!(epsilon > 0.0 && epsilon <= 1e-2);
        debug_assert!(scale > 0.0);
        ToleranceContext { epsilon, scale }
    }
}

/// Result of a single tolerance check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CheckOutcome {
    Pass {
        residual: f64,
    },
    Fail {
        residual: f64,
    },
    /// An operand was below the degeneracy floor; no verdict.
    Degenerate,
}

fn graded(residual: f64, tol: &ToleranceContext) -> CheckOutcome {
    if !residual.is_finite() {
        return CheckOutcome::Degenerate;
    }
    if residual <= tol.epsilon {
        CheckOutcome::Pass { residual }
    } else {
        CheckOutcome::Fail { residual }
    }
}

/// Residual `|u·v| / (|u||v|)`; degenerate when either vector is shorter
/// than the floor at the trial's scale.
pub fn check_perpendicular(u: Vector, v: Vector, tol: &ToleranceContext) -> CheckOutcome {
    let nu = u.norm();
    let nv = v.norm();
    let floor = DEGENERACY_FLOOR * tol.scale;
    if nu <= floor || nv <= floor {
        return CheckOutcome::Degenerate;
    }
    graded(num::abs(dot(u, v)) / (nu * nv), tol)
}

/// Residual `|p − q| / scale`.
pub fn check_coincides(p: Point, q: Point, tol: &ToleranceContext) -> CheckOutcome {
    graded((p - q).norm() / tol.scale, tol)
}

/// Residual `|a − b| / max(1, |a|, |b|)`.
pub fn check_equal(a: f64, b: f64, tol: &ToleranceContext) -> CheckOutcome {
    let mut denom = 1.0;
    if num::abs(a) > denom {
        denom = num::abs(a);
    }
    if num::abs(b) > denom {
        denom = num::abs(b);
    }
    graded(num::abs(a - b) / denom, tol)
}

/// Residual `||p − center| − radius| / radius`.
pub fn check_on_circle(p: Point, c: Circle, tol: &ToleranceContext) -> CheckOutcome {
    graded(num::abs((p - c.center).norm() - c.radius) / c.radius, tol)
}

/// The worst (largest-residual) effective trial seen for one assertion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WorstCase {
    pub residual: f64,
    pub trial_index: u64,
    pub triangle: Triangle,
}

/// Aggregated outcomes for one assertion across a run.
#[derive(Clone, Debug, PartialEq)]
pub struct AssertionRecord {
    pub index: usize,
    pub label: Option<String>,
    pub passes: u64,
    pub failures: u64,
    pub degenerate_skips: u64,
    /// Present iff the assertion had at least one effective (non-skipped)
    /// trial. `worst.residual` is the maximum residual over passing AND
    /// failing trials.
    pub worst: Option<WorstCase>,
}

impl AssertionRecord {
    pub fn effective_trials(&self) -> u64 {
        self.passes + self.failures
    }

    pub fn max_residual(&self) -> Option<f64> {
        self.worst.map(|w| w.residual)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

/// Aggregated result of running one script over a set of trials.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialReport {
    pub expectation: Expectation,
    pub trials: u64,
    /// Trials in which at least one assertion was degenerate-skipped.
    pub degenerate_rejections: u64,
    pub assertions: Vec<AssertionRecord>,
    /// Measured against the script's expectation: a pass-expected script
    /// passes with zero failures, a fail-expected script passes once it has
    /// recorded a failure. Any assertion with zero effective trials forces a
    /// failing verdict ("no effective trials").
    pub verdict: Verdict,
}

impl TrialReport {
    pub fn total_failures(&self) -> u64 {
        self.assertions.iter().map(|a| a.failures).sum()
    }

    pub fn has_assertion_without_effective_trials(&self) -> bool {
        self.assertions.iter().any(|a| a.effective_trials() == 0)
    }

    /// Fraction of trials with at least one degenerate skip.
    pub fn degenerate_fraction(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.degenerate_rejections as f64 / self.trials as f64
        }
    }
}

#[derive(Clone, Debug)]
struct AccumRecord {
    passes: u64,
    failures: u64,
    skips: u64,
    worst: Option<WorstCase>,
}

impl AccumRecord {
    fn new() -> Self {
        AccumRecord {
            passes: 0,
            failures: 0,
            skips: 0,
            worst: None,
        }
    }

    fn consider(&mut self, residual: f64, trial_index: u64, triangle: &Triangle) {
        let better = match &self.worst {
            // Strictly greater keeps the earliest trial on ties.
            Some(w) => residual > w.residual,
            None => true,
        };
        if better {
            self.worst = Some(WorstCase {
                residual,
                trial_index,
                triangle: *triangle,
            });
        }
    }
}

/// Mergeable partial aggregation over a contiguous trial range.
#[derive(Clone, Debug)]
pub struct RunAccumulator {
    records: Vec<AccumRecord>,
    trials: u64,
    degenerate_rejections: u64,
}

impl RunAccumulator {
    pub fn new(assertion_count: usize) -> Self {
        RunAccumulator {
            records: vec![AccumRecord::new(); assertion_count],
            trials: 0,
            degenerate_rejections: 0,
        }
    }

    /// Folds one trial's outcomes in. Trials must be recorded in ascending
    /// index order within an accumulator.
    pub fn record_trial(
        &mut self,
        trial_index: u64,
        base: &Triangle,
        outcomes: &[AssertionOutcome],
    ) {
        debug_assert_eq!(outcomes.len(), self.records.len());
        self.trials += 1;
        let mut any_skip = false;
        for (record, outcome) in self.records.iter_mut().zip(outcomes) {
            match outcome {
                AssertionOutcome::Pass { residual } => {
                    record.passes += 1;
                    record.consider(*residual, trial_index, base);
                }
                AssertionOutcome::Fail { residual } => {
                    record.failures += 1;
                    record.consider(*residual, trial_index, base);
                }
                AssertionOutcome::Skipped => {
                    record.skips += 1;
                    any_skip = true;
                }
            }
        }
        if any_skip {
            self.degenerate_rejections += 1;
        }
    }

    /// Records a trial whose base triangle itself was degenerate: every
    /// assertion is skipped.
    pub fn record_degenerate_base(&mut self) {
        self.trials += 1;
        self.degenerate_rejections += 1;
        for record in &mut self.records {
            record.skips += 1;
        }
    }

    /// Merges a later chunk into this one. `self` must cover the lower trial
    /// indices; `>=` on residuals then keeps the earliest worst trial, so
    /// any in-order chunking reproduces the sequential result exactly.
    pub fn merge(mut self, later: RunAccumulator) -> RunAccumulator {
        debug_assert_eq!(self.records.len(), later.records.len());
        self.trials += later.trials;
        self.degenerate_rejections += later.degenerate_rejections;
        for (earlier, later) in self.records.iter_mut().zip(later.records) {
            earlier.passes += later.passes;
            earlier.failures += later.failures;
            earlier.skips += later.skips;
            if let Some(w) = later.worst {
                let keep_earlier = matches!(&earlier.worst, Some(e) if e.residual >= w.residual);
                if !keep_earlier {
                    earlier.worst = Some(w);
                }
            }
        }
        self
    }

    pub fn finalize(self, script: &Script) -> TrialReport {
        let assertions: Vec<AssertionRecord> = script
            .assertions()
            .zip(self.records)
            .map(|((index, assertion), record)| AssertionRecord {
                index,
                label: assertion.label.clone(),
                passes: record.passes,
                failures: record.failures,
                degenerate_skips: record.skips,
                worst: record.worst,
            })
            .collect();

        let no_effective = assertions.iter().any(|a| a.effective_trials() == 0);
        let failures: u64 = assertions.iter().map(|a| a.failures).sum();
        let verdict = if no_effective {
            Verdict::Fail
        } else {
            match script.expectation {
                Expectation::Pass if failures == 0 => Verdict::Pass,
                Expectation::Fail if failures > 0 => Verdict::Pass,
                _ => Verdict::Fail,
            }
        };

        TrialReport {
            expectation: script.expectation,
            trials: self.trials,
            degenerate_rejections: self.degenerate_rejections,
            assertions,
            verdict,
        }
    }
}

/// A run-level failure (as opposed to a failing verdict).
#[derive(Clone, Debug, PartialEq)]
pub enum EngineError {
    Exhausted(SamplerExhausted),
    Eval(EvalError),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::Exhausted(e) => e.fmt(f),
            EngineError::Eval(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for EngineError {}

impl From<SamplerExhausted> for EngineError {
    fn from(e: SamplerExhausted) -> Self {
        EngineError::Exhausted(e)
    }
}

impl From<EvalError> for EngineError {
    fn from(e: EvalError) -> Self {
        EngineError::Eval(e)
    }
}

fn run_one(
    script: &Script,
    base: &Triangle,
    epsilon: f64,
    trial_index: u64,
    acc: &mut RunAccumulator,
) -> Result<(), EngineError> {
    match circumcircle(base) {
        Ok(circle) => {
            let tol = ToleranceContext::new(epsilon, circle.radius);
            let outcomes = evaluate(script, base, &tol)?;
            acc.record_trial(trial_index, base, &outcomes);
        }
        Err(_) => acc.record_degenerate_base(),
    }
    Ok(())
}

/// Runs the sampled trials in `range` into a mergeable accumulator. Chunking
/// a run into contiguous ranges and merging in order yields exactly the
/// report of a sequential `0..trials` run.
pub fn accumulate_sampled(
    script: &Script,
    cfg: &SamplerConfig,
    epsilon: f64,
    range: Range<u64>,
) -> Result<RunAccumulator, EngineError> {
    let mut acc = RunAccumulator::new(script.assertion_count());
    for trial_index in range {
        let base = sample_triangle(cfg, trial_index)?;
        run_one(script, &base, epsilon, trial_index, &mut acc)?;
    }
    Ok(acc)
}

/// Sequential run over all configured trials.
pub fn run_trials(
    script: &Script,
    cfg: &SamplerConfig,
    epsilon: f64,
) -> Result<TrialReport, EngineError> {
    Ok(accumulate_sampled(script, cfg, epsilon, 0..cfg.trials)?.finalize(script))
}

/// Single-trial run on an explicitly given base triangle. A degenerate base
/// skips every assertion (and the verdict fails for lack of effective
/// trials).
pub fn run_fixed(
    script: &Script,
    base: &Triangle,
    epsilon: f64,
) -> Result<TrialReport, EngineError> {
    let mut acc = RunAccumulator::new(script.assertion_count());
    run_one(script, base, epsilon, 0, &mut acc)?;
    Ok(acc.finalize(script))
}

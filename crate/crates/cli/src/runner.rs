//! Runs one script under a run configuration, optionally splitting the trial
//! range across worker threads. Chunks are merged in trial order, so the
//! report is byte-identical to a sequential run for any worker count.

use geocheck_core::centers::Triangle;
use geocheck_core::dsl::Script;
use geocheck_core::engine::{
    accumulate_sampled, run_fixed, run_trials, EngineError, RunAccumulator, SamplerConfig,
    TrialReport,
};

#[derive(Clone, Debug)]
pub struct RunOptions {
    pub trials: u64,
    pub seed: u64,
    pub epsilon: f64,
    pub min_arc: f64,
    pub allow_obtuse: bool,
    pub jobs: usize,
    pub fixed: Option<Triangle>,
}

impl RunOptions {
    fn sampler_config(&self) -> SamplerConfig {
        SamplerConfig {
            seed: self.seed,
            trials: self.trials,
            min_arc: self.min_arc,
            transform: true,
            allow_obtuse: self.allow_obtuse,
        }
    }
}

pub fn run_script(script: &Script, opts: &RunOptions) -> Result<TrialReport, EngineError> {
    if let Some(base) = &opts.fixed {
        return run_fixed(script, base, opts.epsilon);
    }
    let cfg = opts.sampler_config();
    let jobs = opts.jobs.max(1).min(cfg.trials.max(1) as usize);
    if jobs == 1 {
        return run_trials(script, &cfg, opts.epsilon);
    }

    // Contiguous chunks in trial order; per-trial seeding makes each chunk
    // independent of the others.
    let trials = cfg.trials;
    let chunk = trials.div_ceil(jobs as u64);
    let ranges: Vec<_> = (0..jobs as u64)
        .map(|i| (i * chunk).min(trials)..((i + 1) * chunk).min(trials))
        .filter(|r| !r.is_empty())
        .collect();

    let partials: Vec<Result<RunAccumulator, EngineError>> = std::thread::scope(|scope| {
        let handles: Vec<_> = ranges
            .into_iter()
            .map(|range| scope.spawn(move || accumulate_sampled(script, &cfg, opts.epsilon, range)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });

    let mut merged: Option<RunAccumulator> = None;
    for partial in partials {
        let partial = partial?;
        merged = Some(match merged {
            Some(acc) => acc.merge(partial),
            None => partial,
        });
    }
    Ok(merged.expect("at least one chunk").finalize(script))
}

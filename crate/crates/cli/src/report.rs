//! Text and JSON rendering of trial reports.
//!
//! The JSON writer is hand-rolled against the fixed schema so that float
//! formatting (17 significant digits) and field order are byte-stable: two
//! runs with the same flags must produce identical output regardless of the
//! worker count.

use std::fmt::Write as _;

use geocheck_core::dsl::Expectation;
use geocheck_core::engine::{AssertionRecord, TrialReport, Verdict};

/// Per-script run parameters echoed into reports.
pub struct ReportContext<'a> {
    pub script_name: &'a str,
    pub seed: u64,
    pub epsilon: f64,
}

fn float17(v: f64) -> String {
    format!("{:.16e}", v)
}

fn json_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => {
                let _ = write!(out, "\\u{:04x}", c as u32);
            }
            c => out.push(c),
        }
    }
    out
}

fn expectation_str(e: Expectation) -> &'static str {
    match e {
        Expectation::Pass => "pass",
        Expectation::Fail => "fail",
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Fail => "fail",
    }
}

fn write_assertion_json(out: &mut String, a: &AssertionRecord) {
    let _ = write!(out, "{{\"index\":{}", a.index);
    match &a.label {
        Some(label) => {
            let _ = write!(out, ",\"label\":\"{}\"", json_escape(label));
        }
        None => out.push_str(",\"label\":null"),
    }
    let _ = write!(
        out,
        ",\"passes\":{},\"failures\":{},\"degenerate_skips\":{}",
        a.passes, a.failures, a.degenerate_skips
    );
    match &a.worst {
        Some(w) => {
            let _ = write!(
                out,
                ",\"max_residual\":{},\"worst_trial_index\":{},\"worst_triangle\":[[{},{}],[{},{}],[{},{}]]",
                float17(w.residual),
                w.trial_index,
                float17(w.triangle.a.x),
                float17(w.triangle.a.y),
                float17(w.triangle.b.x),
                float17(w.triangle.b.y),
                float17(w.triangle.c.x),
                float17(w.triangle.c.y),
            );
        }
        None => {
            out.push_str(
                ",\"max_residual\":null,\"worst_trial_index\":null,\"worst_triangle\":null",
            );
        }
    }
    out.push('}');
}

/// One JSON object on a single line per script run.
pub fn render_json(ctx: &ReportContext<'_>, report: &TrialReport) -> String {
    let mut out = String::new();
    let _ = write!(
        out,
        "{{\"script\":\"{}\",\"seed\":{},\"trials\":{},\"epsilon\":{},\"expect\":\"{}\",\"verdict\":\"{}\",\"degenerate_rejections\":{},\"assertions\":[",
        json_escape(ctx.script_name),
        ctx.seed,
        report.trials,
        float17(ctx.epsilon),
        expectation_str(report.expectation),
        verdict_str(report.verdict),
        report.degenerate_rejections,
    );
    for (i, a) in report.assertions.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        write_assertion_json(&mut out, a);
    }
    out.push_str("]}");
    out
}

/// Human-readable block per script run.
pub fn render_text(ctx: &ReportContext<'_>, report: &TrialReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "script: {}", ctx.script_name);
    let _ = writeln!(
        out,
        "expect: {}  seed: {}  trials: {}  epsilon: {:e}",
        expectation_str(report.expectation),
        ctx.seed,
        report.trials,
        ctx.epsilon
    );
    let _ = writeln!(
        out,
        "degenerate trials: {} ({:.2}%)",
        report.degenerate_rejections,
        report.degenerate_fraction() * 100.0
    );
    for a in &report.assertions {
        let label = a.label.as_deref().unwrap_or("(unlabeled)");
        match &a.worst {
            Some(w) => {
                let _ = writeln!(
                    out,
                    "  [{}] {}: passes {}, failures {}, skips {}, max residual {:.3e} (worst trial {})",
                    a.index, label, a.passes, a.failures, a.degenerate_skips, w.residual, w.trial_index
                );
            }
            None => {
                let _ = writeln!(
                    out,
                    "  [{}] {}: passes {}, failures {}, skips {}, max residual n/a",
                    a.index, label, a.passes, a.failures, a.degenerate_skips
                );
            }
        }
    }
    if report.has_assertion_without_effective_trials() {
        let _ = writeln!(out, "note: no effective trials for at least one assertion");
    }
    let _ = writeln!(
        out,
        "verdict: {}",
        match report.verdict {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
        }
    );
    out
}

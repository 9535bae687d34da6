//! Human-readable rendering of trace files.

use std::fmt::Write;

use anyhow::bail;
use serde_json::Value;

use regmax_core::influence::PmOutcome;
use regmax_core::RunTrace;

pub fn render_trace(t: &RunTrace) -> String {
    let mut out = String::new();
    let _ = write!(out, "{}", t.algorithm);
    let p = &t.params;
    for (k, v) in [
        ("gamma", p.gamma),
        ("epsilon", p.epsilon),
        ("decay", p.decay),
    ] {
        if let Some(v) = v {
            let _ = write!(out, " {k}={v}");
        }
    }
    if let Some(r) = &p.runner {
        let _ = write!(out, " runner={r}");
    }
    if let Some(s) = t.seed {
        let _ = write!(out, " seed={s}");
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "{:>5} {:>8} {:>12} {:>14}",
        "step", "element", "key", "h(S_i)"
    );
    let _ = writeln!(
        out,
        "{:>5} {:>8} {:>12} {:>14.6}",
        0, "-", "-", t.prefix_objectives[0]
    );
    for (i, &e) in t.added.iter().enumerate() {
        let key = t
            .accept_keys
            .get(i)
            .map_or("-".to_owned(), |k| format!("{k:.6}"));
        let mark = if i + 1 == t.best.len() {
            "  <- best"
        } else {
            ""
        };
        let _ = writeln!(
            out,
            "{:>5} {:>8} {:>12} {:>14.6}{mark}",
            i + 1,
            e,
            key,
            t.prefix_objectives[i + 1]
        );
    }
    let _ = writeln!(
        out,
        "best {:?} value {:.6}, {} oracle calls",
        t.best, t.best_value, t.oracle_calls
    );
    out
}

pub fn render_pm(pm: &PmOutcome) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>4} {:>9} {:>10} {:>10} {:>10} {:>12}  status",
        "iter", "theta", "t", "eps1", "eps2", "f_R2 - c"
    );
    let opt = |v: Option<f64>| v.map_or("-".to_owned(), |v| format!("{v:.4}"));
    for it in &pm.iterations {
        let _ = writeln!(
            out,
            "{:>4} {:>9} {:>10} {:>10} {:>10} {:>12.4}  {:?}",
            it.iteration,
            it.theta,
            opt(it.t),
            opt(it.eps1),
            opt(it.eps2),
            it.estimate_r2 - it.cost,
            it.status
        );
    }
    let _ = writeln!(
        out,
        "stop {:?}, {} nodes selected, {} oracle calls",
        pm.stop,
        pm.solution.len(),
        pm.oracle_calls
    );
    out
}

/// Accepts a single trace, a PM outcome, or the record list written by
/// `run` with `save_traces`.
pub fn render_json(text: &str) -> anyhow::Result<String> {
    let value: Value = serde_json::from_str(text)?;
    render_value(&value)
}

fn render_value(value: &Value) -> anyhow::Result<String> {
    if let Value::Array(records) = value {
        let mut out = String::new();
        for r in records {
            let _ = writeln!(
                out,
                "== point {} {} repetition {}",
                r["point"],
                r["algorithm"].as_str().unwrap_or("?"),
                r["repetition"]
            );
            let inner = if r.get("trace").is_some() {
                &r["trace"]
            } else {
                &r["pm"]
            };
            out.push_str(&render_value(inner)?);
        }
        return Ok(out);
    }
    if value.get("prefix_objectives").is_some() {
        return Ok(render_trace(&serde_json::from_value(value.clone())?));
    }
    if value.get("iterations").is_some() {
        return Ok(render_pm(&serde_json::from_value(value.clone())?));
    }
    bail!("not a trace file")
}

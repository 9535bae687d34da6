//! Synthetic instance files for the `gen` command.

use serde::Serialize;

use regmax_core::synth::{random_coverage, random_design, random_digraph, CoverageSpec};

use crate::io::EdgeList;

/// Edge list with `m` uniform random edges; `probability` is written on
/// every edge when given.
pub fn graph_text(nodes: usize, edges: usize, probability: Option<f64>, seed: u64) -> String {
    EdgeList {
        nodes,
        edges: random_digraph(nodes, edges, seed)
            .into_iter()
            .map(|(u, v)| (u, v, probability))
            .collect(),
    }
    .to_text()
}

#[derive(Debug, Serialize)]
struct CoverageFile<'a> {
    item_weights: &'a [f64],
    covers: &'a [Vec<usize>],
    costs: &'a [f64],
}

/// Weighted-coverage instance as JSON.
pub fn coverage_json(spec: &CoverageSpec, seed: u64) -> anyhow::Result<String> {
    let (f, c) = random_coverage(spec, seed)?;
    let file = CoverageFile {
        item_weights: f.item_weights(),
        covers: f.covers(),
        costs: c.as_slice(),
    };
    Ok(serde_json::to_string_pretty(&file)? + "\n")
}

/// Standardized Gaussian features as CSV with a `x0,x1,..` header.
pub fn design_csv(n: usize, dim: usize, seed: u64) -> anyhow::Result<String> {
    let inst = random_design(n, dim, 1.0, seed)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record((0..dim).map(|j| format!("x{j}")))?;
    for e in 0..n {
        w.write_record(inst.feature(e).iter().map(|v| v.to_string()))?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

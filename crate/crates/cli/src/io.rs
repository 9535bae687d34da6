//! Dataset readers: edge lists, node weights and feature tables.
//!
//! Edge list: one edge `u v [p]` per line, whitespace separated. `#` starts a
//! comment. Two optional headers fix the node count: a line `n <count>` and
//! the comment form `# Nodes: N Edges: M` used by SNAP dumps; the latter also
//! fixes the edge count. Without either, the node count is one past the
//! largest id.

use std::fs;
use std::path::{Path, PathBuf};

use regmax_core::{CoverInstance, DiffusionGraph};

#[derive(Debug, thiserror::Error)]
pub enum LoadError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{}:{line}: {msg}", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },
    #[error("{}: {msg}", path.display())]
    Mismatch { path: PathBuf, msg: String },
    #[error("{}: empty instance", path.display())]
    Empty { path: PathBuf },
    #[error("{}: {source}", path.display())]
    Csv { path: PathBuf, source: csv::Error },
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_owned(),
        source,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct EdgeList {
    pub nodes: usize,
    pub edges: Vec<(usize, usize, Option<f64>)>,
}

impl EdgeList {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn diffusion_graph(&self) -> regmax_core::Result<DiffusionGraph> {
        DiffusionGraph::new(self.nodes, &self.edges)
    }

    pub fn cover_instance(
        &self,
        weights: Option<Vec<f64>>,
        q: u32,
    ) -> regmax_core::Result<CoverInstance> {
        let pairs: Vec<_> = self.edges.iter().map(|&(u, v, _)| (u, v)).collect();
        CoverInstance::new(self.nodes, &pairs, weights, q)
    }

    /// Text form readable by [`parse_edge_list`].
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.nodes);
        for &(u, v, p) in &self.edges {
            match p {
                Some(p) => out.push_str(&format!("{u} {v} {p}\n")),
                None => out.push_str(&format!("{u} {v}\n")),
            }
        }
        out
    }
}

/// Parses `# Nodes: N Edges: M`.
fn snap_header(comment: &str) -> Option<(usize, usize)> {
    let mut words = comment.split_whitespace();
    let mut nodes = None;
    let mut edges = None;
    while let Some(w) = words.next() {
        match w {
            "Nodes:" => nodes = words.next()?.parse().ok(),
            "Edges:" => edges = words.next()?.parse().ok(),
            _ => {}
        }
    }
    Some((nodes?, edges?))
}

pub fn parse_edge_list(text: &str, path: &Path) -> Result<EdgeList, LoadError> {
    let err = |line: usize, msg: String| LoadError::Parse {
        path: path.to_owned(),
        line,
        msg,
    };
    let mut declared_nodes = None;
    let mut declared_edges = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let (body, comment) = match raw.find('#') {
            Some(k) => (&raw[..k], Some(&raw[k + 1..])),
            None => (raw, None),
        };
        if let Some((n, m)) = comment.and_then(snap_header) {
            declared_nodes = Some(n);
            declared_edges = Some(m);
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        match fields.as_slice() {
            [] => {}
            ["n", count] => {
                let n = count
                    .parse()
                    .map_err(|_| err(line_no, format!("bad node count {count:?}")))?;
                declared_nodes = Some(n);
            }
            [u, v, rest @ ..] if rest.len() <= 1 => {
                let id = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| err(line_no, format!("bad node id {s:?}")))
                };
                let p = match rest.first() {
                    None => None,
                    Some(s) => {
                        let p: f64 = s
                            .parse()
                            .map_err(|_| err(line_no, format!("bad probability {s:?}")))?;
                        if !(0.0..=1.0).contains(&p) {
                            return Err(err(line_no, format!("probability {p} outside [0, 1]")));
                        }
                        Some(p)
                    }
                };
                edges.push((id(u)?, id(v)?, p, line_no));
            }
            _ => {
                return Err(err(
                    line_no,
                    format!("expected `u v [p]`, got {:?}", body.trim()),
                ))
            }
        }
    }
    let max_id = edges
        .iter()
        .map(|&(u, v, _, _)| u.max(v) + 1)
        .max()
        .unwrap_or(0);
    let nodes = match declared_nodes {
        Some(n) => {
            if let Some(&(u, v, _, line)) = edges.iter().find(|e| e.0 >= n || e.1 >= n) {
                return Err(err(
                    line,
                    format!("edge {u} {v} exceeds declared node count {n}"),
                ));
            }
            n
        }
        None => max_id,
    };
    if let Some(m) = declared_edges {
        if m != edges.len() {
            return Err(LoadError::Mismatch {
                path: path.to_owned(),
                msg: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
    }
    if nodes == 0 {
        return Err(LoadError::Empty {
            path: path.to_owned(),
        });
    }
    Ok(EdgeList {
        nodes,
        edges: edges.into_iter().map(|(u, v, p, _)| (u, v, p)).collect(),
    })
}

pub fn load_edge_list(path: &Path) -> Result<EdgeList, LoadError> {
    parse_edge_list(&read(path)?, path)
}

/// `v w` lines; nodes that are not listed keep weight 1.
pub fn parse_weights(text: &str, path: &Path, nodes: usize) -> Result<Vec<f64>, LoadError> {
    let mut weights = vec![1.0; nodes];
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        let err = |msg: String| LoadError::Parse {
            path: path.to_owned(),
            line: i + 1,
            msg,
        };
        let [v, w] = fields.as_slice() else {
            return Err(err(format!("expected `v w`, got {:?}", body.trim())));
        };
        let v: usize = v.parse().map_err(|_| err(format!("bad node id {v:?}")))?;
        let w: f64 = w.parse().map_err(|_| err(format!("bad weight {w:?}")))?;
        if v >= nodes {
            return Err(err(format!("node {v} out of range for {nodes} nodes")));
        }
        if !(w.is_finite() && w >= 0.0) {
            return Err(err(format!("weight {w} must be finite and non-negative")));
        }
        weights[v] = w;
    }
    Ok(weights)
}

pub fn load_weights(path: &Path, nodes: usize) -> Result<Vec<f64>, LoadError> {
    parse_weights(&read(path)?, path, nodes)
}

/// Numeric table, one measurement per row.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureTable {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl FeatureTable {
    pub fn width(&self) -> usize {
        self.columns.len()
    }

    pub fn column_index(&self, key: &str) -> Option<usize> {
        if key == "last" {
            return self.width().checked_sub(1);
        }
        self.columns
            .iter()
            .position(|c| c == key)
            .or_else(|| key.parse().ok().filter(|&i| i < self.width()))
    }

    /// Removes a column by header name, index, or `last`.
    pub fn drop_column(&mut self, key: &str) -> Option<String> {
        let j = self.column_index(key)?;
        for r in &mut self.rows {
            r.remove(j);
        }
        Some(self.columns.remove(j))
    }

    /// Standardizes every column; constant columns are removed and their
    /// names returned.
    pub fn standardize(&mut self) -> Vec<String> {
        let dropped = regmax_core::aoptimal::standardize(&mut self.rows);
        let mut names: Vec<String> = dropped
            .iter()
            .rev()
            .map(|&j| self.columns.remove(j))
            .collect();
        names.reverse();
        names
    }
}

/// CSV with an optional header row, detected by any non-numeric field in
/// the first record. Columns are named by header or by index.
pub fn parse_features(text: &str, path: &Path) -> Result<FeatureTable, LoadError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .flexible(false)
        .from_reader(text.as_bytes());
    let mut records = Vec::new();
    for rec in reader.records() {
        records.push(rec.map_err(|source| LoadError::Csv {
            path: path.to_owned(),
            source,
        })?);
    }
    let Some(first) = records.first() else {
        return Err(LoadError::Empty {
            path: path.to_owned(),
        });
    };
    let has_header = first.iter().any(|f| f.parse::<f64>().is_err());
    let columns: Vec<String> = if has_header {
        first.iter().map(str::to_owned).collect()
    } else {
        (0..first.len()).map(|j| j.to_string()).collect()
    };
    let skip = usize::from(has_header);
    let mut rows = Vec::with_capacity(records.len() - skip);
    for (i, rec) in records.iter().enumerate().skip(skip) {
        let row = rec
            .iter()
            .map(|f| {
                f.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| LoadError::Parse {
                        path: path.to_owned(),
                        line: i + 1,
                        msg: format!("non-numeric value {f:?}"),
                    })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() || columns.is_empty() {
        return Err(LoadError::Empty {
            path: path.to_owned(),
        });
    }
    Ok(FeatureTable { columns, rows })
}

pub fn load_features(path: &Path) -> Result<FeatureTable, LoadError> {
    parse_features(&read(path)?, path)
}

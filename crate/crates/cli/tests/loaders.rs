use std::fmt::Write as _;
use std::fs;

use regmax_cli::io::{load_edge_list, load_features, load_weights, LoadError};
use regmax_core::synth::random_digraph;
use regmax_core::ValueOracle;

/// SNAP-style file with the same header layout and size as the Gnutella
/// peer-to-peer snapshot.
fn snap_file(nodes: usize, edges: usize) -> String {
    let mut s = String::from("# Directed graph (each unordered pair of nodes is saved once)\n");
    writeln!(s, "# Nodes: {nodes} Edges: {edges}").unwrap();
    s.push_str("# FromNodeId\tToNodeId\n");
    for (u, v) in random_digraph(nodes, edges, 42) {
        writeln!(s, "{u}\t{v}").unwrap();
    }
    s
}

#[test]
fn snap_edge_list_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p2p.txt");
    fs::write(&path, snap_file(6301, 20777)).unwrap();
    let g = load_edge_list(&path).unwrap();
    assert_eq!(g.nodes, 6301);
    assert_eq!(g.edge_count(), 20777);
    assert!(g.edges.iter().all(|e| e.2.is_none()));
    let d = g.diffusion_graph().unwrap();
    assert_eq!(d.node_count(), 6301);
    assert_eq!(d.edge_count(), 20777);
    let vc = g.cover_instance(None, 3).unwrap();
    assert_eq!(vc.ground_size(), 6301);
}

#[test]
fn declared_edge_count_is_enforced() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("short.txt");
    let mut text = snap_file(50, 100);
    text.truncate(text.trim_end().rfind('\n').unwrap() + 1);
    fs::write(&path, text).unwrap();
    assert!(matches!(
        load_edge_list(&path),
        Err(LoadError::Mismatch { .. })
    ));
}

#[test]
fn parse_errors_carry_path_and_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    fs::write(&path, "n 3\n0 1\n1 x\n").unwrap();
    let err = load_edge_list(&path).unwrap_err();
    assert!(matches!(err, LoadError::Parse { line: 3, .. }), "{err}");
    assert!(err.to_string().contains("bad.txt:3"));

    fs::write(&path, "n 3\n0 1 1.5\n").unwrap();
    assert!(load_edge_list(&path).is_err());
    fs::write(&path, "n 2\n0 5\n").unwrap();
    assert!(load_edge_list(&path).is_err());
}

#[test]
fn empty_files_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.txt");
    fs::write(&path, "").unwrap();
    assert!(matches!(
        load_edge_list(&path),
        Err(LoadError::Empty { .. })
    ));
    let csv = dir.path().join("empty.csv");
    fs::write(&csv, "").unwrap();
    assert!(load_features(&csv).is_err());
    assert!(matches!(
        load_edge_list(&dir.path().join("missing.txt")),
        Err(LoadError::Io { .. })
    ));
}

#[test]
fn weights_default_to_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.txt");
    fs::write(&path, "0 2.5\n3 0\n").unwrap();
    assert_eq!(load_weights(&path, 4).unwrap(), vec![2.5, 1.0, 1.0, 0.0]);
}

/// Housing-style table: 13 attributes plus the target in the last column.
fn housing_csv(rows: usize) -> String {
    let names = [
        "CRIM", "ZN", "INDUS", "CHAS", "NOX", "RM", "AGE", "DIS", "RAD", "TAX", "PTRATIO", "B",
        "LSTAT", "MEDV",
    ];
    let mut s = names.join(",") + "\n";
    for r in 0..rows {
        let row: Vec<String> = (0..names.len())
            .map(|c| format!("{}", ((r * 31 + c * 17) % 97) as f64 / 7.0 + c as f64))
            .collect();
        s += &(row.join(",") + "\n");
    }
    s
}

#[test]
fn feature_table_drops_target_and_standardizes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("housing.csv");
    fs::write(&path, housing_csv(506)).unwrap();
    let mut t = load_features(&path).unwrap();
    assert_eq!(t.rows.len(), 506);
    assert_eq!(t.width(), 14);
    assert_eq!(t.drop_column("MEDV").as_deref(), Some("MEDV"));
    assert_eq!(t.width(), 13);
    assert!(t.standardize().is_empty());
    for j in 0..13 {
        let col: Vec<f64> = t.rows.iter().map(|r| r[j]).collect();
        let mean = col.iter().sum::<f64>() / 506.0;
        let var = col.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / 506.0;
        assert!(mean.abs() < 1e-12 && (var - 1.0).abs() < 1e-12);
    }
}

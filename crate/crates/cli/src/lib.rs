//! Experiment harness around `regmax-core`: dataset loaders, TOML
//! manifests, parameter sweeps, brute-force bound verification, synthetic
//! instance generation and trace inspection.

pub mod config;
pub mod experiment;
pub mod gen;
pub mod inspect;
pub mod io;
pub mod verify;

pub use config::ExperimentConfig;
pub use experiment::{run_experiment, write_results, ExperimentResult, ResultRow, SummaryRow};
pub use verify::{verify_bounds, Report, VerifyConfig};

/// Independent seed streams derived from the global seed.
pub mod streams {
    pub const GRAPH: u64 = 1;
    pub const COVERAGE: u64 = 2;
    pub const DESIGN: u64 = 3;
    pub const NOISE: u64 = 4;
    /// Algorithm `i` of a manifest uses stream `ALGORITHM + i`.
    pub const ALGORITHM: u64 = 1000;
}

/// Mixes a global seed, a stream id and an index into a 64-bit seed.
pub fn derive_seed(global: u64, stream: u64, index: u64) -> u64 {
    let mut x = global
        .wrapping_add(stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
        .wrapping_add(index.wrapping_mul(0xd1b5_4a32_d192_ed03));
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Median, averaging the two middle values for even lengths. `NaN` for an
/// empty input.
pub fn median(mut v: Vec<f64>) -> f64 {
    if v.is_empty() {
        return f64::NAN;
    }
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len() % 2 == 1 {
        v[m]
    } else {
        (v[m - 1] + v[m]) / 2.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn median_of_odd_and_even() {
        assert_eq!(median(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(vec![4.0, 1.0, 2.0, 3.0]), 2.5);
        assert!(median(vec![]).is_nan());
    }

    #[test]
    fn derived_seeds_differ_by_stream_and_index() {
        let a = derive_seed(0, streams::GRAPH, 0);
        assert_ne!(a, derive_seed(0, streams::COVERAGE, 0));
        assert_ne!(a, derive_seed(0, streams::GRAPH, 1));
        assert_ne!(a, derive_seed(1, streams::GRAPH, 0));
        assert_eq!(a, derive_seed(0, streams::GRAPH, 0));
    }
}

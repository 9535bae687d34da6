use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::DiffusionGraph;
use crate::error::{Error, Result};
use crate::oracle::ValueOracle;
use crate::set::{ElementId, ElementSet};

/// A frozen collection of RR sets over `n` nodes, with an inverted index
/// from node to the sets containing it.
///
/// As an oracle it is the estimator `f_R(S) = n · Cov_R(S) / |R|`, a
/// weighted coverage function.
#[derive(Debug, Clone, PartialEq)]
pub struct RRSetCollection {
    n: usize,
    offsets: Vec<usize>,
    members: Vec<usize>,
    index_offsets: Vec<usize>,
    index: Vec<usize>,
    seed: Option<u64>,
}

impl RRSetCollection {
    /// Every set must be non-empty with node ids below `n`. Repeated ids
    /// inside a set are collapsed.
    pub fn from_sets(n: usize, sets: Vec<Vec<usize>>, seed: Option<u64>) -> Result<Self> {
        if sets.is_empty() {
            return Err(Error::Empty("RR-set collection"));
        }
        let mut offsets = Vec::with_capacity(sets.len() + 1);
        offsets.push(0);
        let mut members = Vec::new();
        for mut set in sets {
            set.sort_unstable();
            set.dedup();
            match set.last() {
                None => return Err(Error::Empty("RR set")),
                Some(&v) if v >= n => return Err(Error::ElementOutOfRange { element: v, n }),
                _ => {}
            }
            members.extend_from_slice(&set);
            offsets.push(members.len());
        }
        Ok(Self::with_index(n, offsets, members, seed))
    }

    fn with_index(n: usize, offsets: Vec<usize>, members: Vec<usize>, seed: Option<u64>) -> Self {
        let mut index_offsets = vec![0usize; n + 1];
        for &v in &members {
            index_offsets[v + 1] += 1;
        }
        for v in 0..n {
            index_offsets[v + 1] += index_offsets[v];
        }
        let mut fill = index_offsets.clone();
        let mut index = vec![0usize; members.len()];
        for set in 0..offsets.len() - 1 {
            for &v in &members[offsets[set]..offsets[set + 1]] {
                index[fill[v]] = set;
                fill[v] += 1;
            }
        }
        Self {
            n,
            offsets,
            members,
            index_offsets,
            index,
            seed,
        }
    }

    /// `θ = |R|`.
    pub fn theta(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn set(&self, i: usize) -> &[usize] {
        &self.members[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn iter(&self) -> impl Iterator<Item = &[usize]> + '_ {
        (0..self.theta()).map(move |i| self.set(i))
    }

    /// Ids of the RR sets that contain `v`.
    pub fn sets_containing(&self, v: usize) -> &[usize] {
        &self.index[self.index_offsets[v]..self.index_offsets[v + 1]]
    }

    /// `Cov_R(S)`: the number of RR sets intersecting `S`.
    pub fn covered(&self, set: &ElementSet) -> usize {
        let mut hit = vec![false; self.theta()];
        let mut count = 0;
        for v in set.iter() {
            for &r in self.sets_containing(v) {
                if !hit[r] {
                    hit[r] = true;
                    count += 1;
                }
            }
        }
        count
    }

    /// `f_R(S) = n · Cov_R(S) / θ`.
    pub fn coverage_value(&self, set: &ElementSet) -> f64 {
        self.scaled(self.covered(set))
    }

    fn scaled(&self, count: usize) -> f64 {
        self.n as f64 * count as f64 / self.theta() as f64
    }
}

impl ValueOracle for RRSetCollection {
    /// Covered-set mask.
    type State = Vec<bool>;

    fn ground_size(&self) -> usize {
        self.n
    }

    fn value(&self, set: &ElementSet) -> f64 {
        self.coverage_value(set)
    }

    fn empty_state(&self) -> Vec<bool> {
        vec![false; self.theta()]
    }

    fn gain(&self, hit: &Vec<bool>, _: &ElementSet, e: ElementId) -> f64 {
        let fresh = self.sets_containing(e).iter().filter(|&&r| !hit[r]).count();
        self.scaled(fresh)
    }

    fn insert(&self, hit: &mut Vec<bool>, _: &ElementSet, e: ElementId) {
        for &r in self.sets_containing(e) {
            hit[r] = true;
        }
    }
}

/// Draws `theta` independent RR sets. Each picks a uniform root and walks
/// in-edges backwards, keeping edge `(u, v)` with probability `p(u, v)`.
pub fn sample_rr_sets(g: &DiffusionGraph, theta: usize, seed: u64) -> Result<RRSetCollection> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::Empty("diffusion graph"));
    }
    if theta == 0 {
        return Err(Error::InvalidParameter {
            what: "theta",
            range: "[1, inf)",
            value: 0.0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // stamp[v] == round + 1 marks v as visited in the current set
    let mut stamp = vec![0usize; n];
    let mut offsets = Vec::with_capacity(theta + 1);
    offsets.push(0);
    let mut members = Vec::new();
    for round in 1..=theta {
        let root = rng.random_range(0..n);
        let start = members.len();
        stamp[root] = round;
        members.push(root);
        let mut head = start;
        while head < members.len() {
            let v = members[head];
            head += 1;
            for (u, p) in g.in_edges(v) {
                if stamp[u] != round && rng.random::<f64>() < p {
                    stamp[u] = round;
                    members.push(u);
                }
            }
        }
        members[start..].sort_unstable();
        offsets.push(members.len());
    }
    Ok(RRSetCollection::with_index(n, offsets, members, Some(seed)))
}

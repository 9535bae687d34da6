//! Ground sets and insertion-ordered element sets.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Elements of a ground set are the dense indices `0..n`.
pub type ElementId = usize;

/// A ground set `{0, 1, ..., n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundSet {
    n: usize,
}

impl GroundSet {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn elements(&self) -> core::ops::Range<ElementId> {
        0..self.n
    }

    pub fn contains(&self, e: ElementId) -> bool {
        e < self.n
    }
}

/// A subset of a ground set that remembers the order in which members were
/// inserted. Membership tests are O(1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementSet {
    members: Vec<ElementId>,
    mask: Vec<bool>,
}

impl ElementSet {
    /// The empty subset of a ground set with `n` elements.
    pub fn empty(n: usize) -> Self {
        Self {
            members: Vec::new(),
            mask: vec![false; n],
        }
    }

    /// Builds a set from a member list, rejecting duplicates and ids `>= n`.
    pub fn from_members(n: usize, members: &[ElementId]) -> Result<Self> {
        let mut set = Self::empty(n);
        for &e in members {
            set.insert(e)?;
        }
        Ok(set)
    }

    /// The whole ground set, in id order.
    pub fn full(n: usize) -> Self {
        Self {
            members: (0..n).collect(),
            mask: vec![true; n],
        }
    }

    pub fn insert(&mut self, e: ElementId) -> Result<()> {
        match self.mask.get(e) {
            None => Err(Error::ElementOutOfRange {
                element: e,
                n: self.mask.len(),
            }),
            Some(true) => Err(Error::AlreadyMember(e)),
            Some(false) => {
                self.mask[e] = true;
                self.members.push(e);
                Ok(())
            }
        }
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.mask.get(e).copied().unwrap_or(false)
    }

    /// Members in insertion order.
    pub fn members(&self) -> &[ElementId] {
        &self.members
    }

    /// Members in ascending id order.
    pub fn sorted(&self) -> Vec<ElementId> {
        let mut v = self.members.clone();
        v.sort_unstable();
        v
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Size of the ground set this is a subset of.
    pub fn ground_size(&self) -> usize {
        self.mask.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.members.iter().copied()
    }

    /// Copy of this set with `e` appended.
    pub fn with(&self, e: ElementId) -> Result<Self> {
        let mut next = self.clone();
        next.insert(e)?;
        Ok(next)
    }
}

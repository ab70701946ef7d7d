use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A descent set: strictly increasing positions in 1..r-1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DescentSet {
    positions: Vec<u32>,
}

impl DescentSet {
    pub fn positions(&self) -> &[u32] {
        &self.positions
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.positions.clone()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, j: u32) -> bool {
        self.positions.binary_search(&j).is_ok()
    }
}

impl FromIterator<u32> for DescentSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        let mut positions: Vec<u32> = iter.into_iter().collect();
        positions.sort_unstable();
        positions.dedup();
        DescentSet { positions }
    }
}

impl fmt::Debug for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Des{:?}", self.positions)
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.positions.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

/// A multiset of descent sets. This is the combinatorial stand-in for a sum
/// of fundamental quasisymmetric functions: each F_D is represented by D.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct DescentMultiset {
    counts: BTreeMap<DescentSet, u64>,
}

impl DescentMultiset {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, d: DescentSet) {
        *self.counts.entry(d).or_insert(0) += 1;
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn count(&self, d: &DescentSet) -> u64 {
        self.counts.get(d).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DescentSet, u64)> {
        self.counts.iter().map(|(d, &c)| (d, c))
    }
}

impl FromIterator<DescentSet> for DescentMultiset {
    fn from_iter<I: IntoIterator<Item = DescentSet>>(iter: I) -> Self {
        let mut m = DescentMultiset::new();
        for d in iter {
            m.insert(d);
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiset_counts() {
        let d1: DescentSet = [2u32, 4].into_iter().collect();
        let d2: DescentSet = [1u32].into_iter().collect();
        let m: DescentMultiset = vec![d1.clone(), d2.clone(), d1.clone()].into_iter().collect();
        assert_eq!(m.count(&d1), 2);
        assert_eq!(m.count(&d2), 1);
        assert_eq!(m.total(), 3);
    }
}

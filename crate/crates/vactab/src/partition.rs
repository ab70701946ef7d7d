use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::ValidationError;

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is a first-class value.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates `parts` as a partition. Trailing zeros are stripped; any
    /// other zero or an increase is rejected.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, ValidationError> {
        let mut parts = parts.into();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return Err(ValidationError::RejectNonPositive);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ValidationError::RejectNotDecreasing);
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Single-part partition `(p)`, or the empty partition when `p == 0`.
    pub fn single(p: u32) -> Self {
        if p == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![p] }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells, |λ|.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Conjugate partition λ'.
    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// All partitions of `n` with at most `max_len` parts, in lexicographic
    /// order of the part sequences.
    pub fn all_of_size(n: u32, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut acc = Vec::new();
        fn go(rem: u32, max_part: u32, left: usize, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            if left == 0 {
                return;
            }
            let hi = rem.min(max_part);
            for p in 1..=hi {
                // need the remaining cells to fit in (left-1) parts of size <= p
                if rem - p <= p * (left as u32 - 1) {
                    acc.push(p);
                    go(rem - p, p, left - 1, acc, out);
                    acc.pop();
                }
            }
        }
        go(n, n.max(1), max_len, &mut acc, &mut out);
        out.sort();
        out
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(D::Error::custom)
    }
}

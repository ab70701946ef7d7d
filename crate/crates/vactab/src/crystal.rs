//! The one-column crystal, its tensor products via the signature rule, and
//! the crystals of pairs (two-column skew tableau, single column) from which
//! the orthogonal Littlewood-Richardson tableaux are extracted.
//!
//! The tensor product convention here is the left-to-right opposite of
//! the more common one: for b = b_1 ⊗ … ⊗ b_n the sign sequence is built left to right as
//! φ(b_1) pluses, ε(b_1) minuses, φ(b_2) pluses, … and adjacent "-,+" pairs
//! cancel; f_i acts on the factor owning the rightmost surviving "+", e_i on
//! the one owning the leftmost surviving "-". An element is the triple
//! (left column, right column, single column), in that tensor order.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::ValidationError;
use crate::partition::Partition;

/// A column-strict single column: strictly increasing positive entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
pub struct OneColumn {
    entries: Vec<u32>,
}

impl OneColumn {
    pub fn new(entries: Vec<u32>) -> Result<Self, ValidationError> {
        if entries.contains(&0) {
            return Err(ValidationError::RejectNonPositive);
        }
        if entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ValidationError::RejectColumnStrict);
        }
        Ok(OneColumn { entries })
    }

    pub fn empty() -> Self {
        OneColumn::default()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, e: u32) -> bool {
        self.entries.binary_search(&e).is_ok()
    }

    /// f_i: for i >= 1 replace i by i+1 when possible; f_0 adds the domino
    /// {1,2} on top when neither 1 nor 2 is present.
    pub fn f(&self, i: u32) -> Option<OneColumn> {
        let mut entries = self.entries.clone();
        if i == 0 {
            if self.contains(1) || self.contains(2) {
                return None;
            }
            entries.insert(0, 2);
            entries.insert(0, 1);
        } else {
            if !self.contains(i) || self.contains(i + 1) {
                return None;
            }
            let pos = entries.binary_search(&i).unwrap();
            entries[pos] = i + 1;
        }
        Some(OneColumn { entries })
    }

    /// e_i: the exact inverse of f_i.
    pub fn e(&self, i: u32) -> Option<OneColumn> {
        let mut entries = self.entries.clone();
        if i == 0 {
            if !(self.contains(1) && self.contains(2)) {
                return None;
            }
            entries.drain(0..2);
        } else {
            if !self.contains(i + 1) || self.contains(i) {
                return None;
            }
            let pos = entries.binary_search(&(i + 1)).unwrap();
            entries[pos] = i;
        }
        Some(OneColumn { entries })
    }

    pub fn phi(&self, i: u32) -> u32 {
        self.f(i).is_some() as u32
    }

    pub fn eps(&self, i: u32) -> u32 {
        self.e(i).is_some() as u32
    }
}

/// Signature-rule bookkeeping for a tensor of one-column crystals. After
/// cancelling adjacent "-,+" pairs the sequence has the form (+..+, -..-);
/// the survivors are returned tagged with their factor index.
fn signature(factors: &[OneColumn], i: u32) -> (Vec<usize>, Vec<usize>) {
    let mut pluses: Vec<usize> = Vec::new();
    let mut minuses: Vec<usize> = Vec::new();
    for (k, c) in factors.iter().enumerate() {
        for _ in 0..c.phi(i) {
            // a new "+" cancels the "-" immediately to its left, if any
            if minuses.pop().is_none() {
                pluses.push(k);
            }
        }
        for _ in 0..c.eps(i) {
            minuses.push(k);
        }
    }
    (pluses, minuses)
}

/// f_i on a tensor of one-column factors: returns the index acted on and the
/// updated factors.
pub fn tensor_f(factors: &[OneColumn], i: u32) -> Option<(usize, Vec<OneColumn>)> {
    let (pluses, _) = signature(factors, i);
    let &k = pluses.last()?;
    let mut out = factors.to_vec();
    out[k] = out[k].f(i).expect("factor with a surviving plus admits f_i");
    Some((k, out))
}

/// e_i on a tensor of one-column factors.
pub fn tensor_e(factors: &[OneColumn], i: u32) -> Option<(usize, Vec<OneColumn>)> {
    let (_, minuses) = signature(factors, i);
    let &k = minuses.first()?;
    let mut out = factors.to_vec();
    out[k] = out[k].e(i).expect("factor with a surviving minus admits e_i");
    Some((k, out))
}

pub fn tensor_phi(factors: &[OneColumn], i: u32) -> u32 {
    signature(factors, i).0.len() as u32
}

pub fn tensor_eps(factors: &[OneColumn], i: u32) -> u32 {
    signature(factors, i).1.len() as u32
}

/// A two-column skew semistandard tableau. `offset` is the number of rows
/// the right column's top sits above the left column's top; the left column
/// always reaches at least as far down as the right one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct TwoColumnSkew {
    pub left: OneColumn,
    pub right: OneColumn,
    pub offset: u32,
}

impl TwoColumnSkew {
    pub fn new(left: OneColumn, right: OneColumn, offset: u32) -> Result<Self, ValidationError> {
        let t = TwoColumnSkew {
            left,
            right,
            offset,
        };
        if !t.shape_ok() || !t.rows_ok() {
            return Err(ValidationError::RejectNotStandard);
        }
        Ok(t)
    }

    fn shape_ok(&self) -> bool {
        // the right column may not extend below the left column's bottom
        self.right.len() <= self.left.len() + self.offset as usize
    }

    fn rows_ok(&self) -> bool {
        // row r of the left column (1-based) shares its row with right
        // entry r + offset, when that exists
        let o = self.offset as usize;
        for (r0, &l) in self.left.entries().iter().enumerate() {
            let j = r0 + o; // 0-based index into the right column
            if j < self.right.len() && l > self.right.entries()[j] {
                return false;
            }
        }
        true
    }

    /// Number of left-column cells below the bottom of the right column.
    pub fn tail(&self) -> u32 {
        let covered = self.right.len().saturating_sub(self.offset as usize);
        (self.left.len() - covered.min(self.left.len())) as u32
    }

    /// Greatest downward shift of the right column that keeps the tableau a
    /// skew semistandard tableau. Zero when there is no right column.
    pub fn residuum(&self) -> u32 {
        if self.right.is_empty() {
            return 0;
        }
        let mut d = 0u32;
        while d < self.offset {
            let shifted = TwoColumnSkew {
                left: self.left.clone(),
                right: self.right.clone(),
                offset: self.offset - d - 1,
            };
            if !shifted.shape_ok() || !shifted.rows_ok() {
                break;
            }
            d += 1;
        }
        d
    }
}

/// An element of the bounded crystal: a two-column skew tableau with a fixed
/// tail length together with a single column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct CrystalElement {
    pub skew: TwoColumnSkew,
    pub column: OneColumn,
}

impl CrystalElement {
    pub fn factors(&self) -> [OneColumn; 3] {
        [
            self.skew.left.clone(),
            self.skew.right.clone(),
            self.column.clone(),
        ]
    }

    pub fn max_entry(&self) -> u32 {
        self.factors()
            .iter()
            .flat_map(|c| c.entries().iter().copied())
            .max()
            .unwrap_or(0)
    }

    /// How often each entry occurs, as the conjugate-shape content vector:
    /// content()[i-1] counts the entry i.
    pub fn content(&self) -> Vec<u32> {
        let m = self.max_entry() as usize;
        let mut counts = vec![0u32; m];
        for c in self.factors() {
            for &e in c.entries() {
                counts[e as usize - 1] += 1;
            }
        }
        counts
    }

    /// Rebuilds the element from updated factors, recomputing the offset so
    /// the tail length stays `mu1`. Fails when the result leaves the crystal
    /// (invalid shape, broken rows, or residuum above one).
    fn rebuild(factors: &[OneColumn], mu1: u32) -> Option<CrystalElement> {
        let left = factors[0].clone();
        let right = factors[1].clone();
        let offset = (right.len() as i64) - (left.len() as i64) + mu1 as i64;
        if offset < 0 {
            return None;
        }
        let skew = TwoColumnSkew::new(left, right, offset as u32).ok()?;
        if skew.tail() != mu1 || skew.residuum() > 1 {
            return None;
        }
        Some(CrystalElement {
            skew,
            column: factors[2].clone(),
        })
    }

    /// f_i within the crystal of tail length `mu1`: the tensor action,
    /// restricted to targets that remain valid elements.
    pub fn f(&self, i: u32, mu1: u32) -> Option<CrystalElement> {
        let (_, factors) = tensor_f(&self.factors(), i)?;
        CrystalElement::rebuild(&factors, mu1)
    }

    pub fn e(&self, i: u32, mu1: u32) -> Option<CrystalElement> {
        let (_, factors) = tensor_e(&self.factors(), i)?;
        CrystalElement::rebuild(&factors, mu1)
    }

    pub fn phi(&self, i: u32) -> u32 {
        tensor_phi(&self.factors(), i)
    }

    pub fn eps(&self, i: u32) -> u32 {
        tensor_eps(&self.factors(), i)
    }
}

fn column(entries: &[u32]) -> OneColumn {
    OneColumn::new(entries.to_vec()).expect("fixed test column")
}

/// The highest weight elements the bounded crystal grows from.
pub fn highest_weight_elements(mu1: u32) -> Vec<CrystalElement> {
    let tail: Vec<u32> = (1..=mu1).collect();
    if mu1 == 0 {
        vec![
            // all empty
            CrystalElement {
                skew: TwoColumnSkew::new(OneColumn::empty(), OneColumn::empty(), 0).unwrap(),
                column: OneColumn::empty(),
            },
            // two cells in a row, both 1, plus a single cell 1
            CrystalElement {
                skew: TwoColumnSkew::new(column(&[1]), column(&[1]), 0).unwrap(),
                column: column(&[1]),
            },
        ]
    } else {
        vec![
            CrystalElement {
                skew: TwoColumnSkew::new(column(&tail), OneColumn::empty(), 0).unwrap(),
                column: OneColumn::empty(),
            },
            CrystalElement {
                skew: TwoColumnSkew::new(column(&tail), OneColumn::empty(), 0).unwrap(),
                column: column(&[1]),
            },
        ]
    }
}

/// Breadth-first closure of the highest weight elements under f_i for
/// i in 0..entry_cap, keeping only elements whose entries stay within
/// `entry_cap`. This is the finite truncation of the crystal the
/// Littlewood-Richardson tableaux live in.
pub fn generate_bounded(mu: &Partition, entry_cap: u32) -> Result<BTreeSet<CrystalElement>, ValidationError> {
    if mu.len() > 1 {
        return Err(ValidationError::RejectShapeTooLong);
    }
    let mu1 = mu.part(0);
    let mut seen: HashSet<CrystalElement> = HashSet::new();
    let mut queue: VecDeque<CrystalElement> = VecDeque::new();
    for seed in highest_weight_elements(mu1) {
        if seed.max_entry() <= entry_cap && seen.insert(seed.clone()) {
            queue.push_back(seed);
        }
    }
    while let Some(elem) = queue.pop_front() {
        for i in 0..entry_cap {
            if let Some(next) = elem.f(i, mu1) {
                if next.max_entry() <= entry_cap && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// The crystal-theoretic orthogonal Littlewood-Richardson tableaux: the
/// elements of the bounded crystal with content λ' and ε_i = 0 for i >= 1.
pub fn lr_crystal(
    lambda: &Partition,
    mu: &Partition,
) -> Result<BTreeSet<CrystalElement>, ValidationError> {
    if lambda.len() > 3 || mu.len() > 1 {
        return Err(ValidationError::RejectShapeTooLong);
    }
    let cap = lambda.part(0);
    let conj = lambda.conjugate();
    let want: Vec<u32> = (0..cap as usize).map(|i| conj.part(i)).collect();
    let set = generate_bounded(mu, cap)?;
    Ok(set
        .into_iter()
        .filter(|elem| {
            let mut content = elem.content();
            content.resize(cap as usize, 0);
            content == want && (1..=cap).all(|i| elem.eps(i) == 0)
        })
        .collect())
}

fn column_label(c: &OneColumn) -> String {
    let parts: Vec<String> = c.entries().iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

/// Renders the bounded crystal as a DOT graph. Vertices show the three
/// columns; edges carry the operator index. Elements of `highlight` are
/// drawn filled.
pub fn crystal_dot(
    mu: &Partition,
    entry_cap: u32,
    highlight: &BTreeSet<CrystalElement>,
) -> Result<String, ValidationError> {
    let elements = generate_bounded(mu, entry_cap)?;
    let mu1 = mu.part(0);
    let index: Vec<&CrystalElement> = elements.iter().collect();
    let mut out = String::new();
    out.push_str("digraph crystal {\n  rankdir=TB;\n  node [shape=box];\n");
    for (n, elem) in index.iter().enumerate() {
        let label = format!(
            "{} {} {}",
            column_label(&elem.skew.left),
            column_label(&elem.skew.right),
            column_label(&elem.column)
        );
        let style = if highlight.contains(*elem) {
            ", style=filled, fillcolor=lightblue"
        } else {
            ""
        };
        let _ = writeln!(out, "  n{n} [label=\"{label}\"{style}];");
    }
    for (n, elem) in index.iter().enumerate() {
        for i in 0..entry_cap {
            if let Some(target) = elem.f(i, mu1) {
                if target.max_entry() <= entry_cap {
                    if let Some(m) = index.iter().position(|e| **e == target) {
                        let _ = writeln!(out, "  n{n} -> n{m} [label=\"{i}\"];");
                    }
                }
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// DOT rendering of the one-column crystal restricted to entries <= cap.
pub fn one_column_dot(entry_cap: u32) -> String {
    let mut columns: BTreeSet<OneColumn> = BTreeSet::new();
    // every strictly increasing subset of 1..=cap is a vertex
    let cap = entry_cap as usize;
    for mask in 0u64..(1 << cap) {
        let entries: Vec<u32> = (0..cap)
            .filter(|&b| mask & (1 << b) != 0)
            .map(|b| b as u32 + 1)
            .collect();
        columns.insert(OneColumn::new(entries).unwrap());
    }
    let index: Vec<&OneColumn> = columns.iter().collect();
    let mut out = String::new();
    out.push_str("digraph one_column {\n  rankdir=TB;\n  node [shape=box];\n");
    for (n, c) in index.iter().enumerate() {
        let _ = writeln!(out, "  n{n} [label=\"{}\"];", column_label(c));
    }
    for (n, c) in index.iter().enumerate() {
        for i in 0..entry_cap {
            if let Some(target) = c.f(i) {
                if target.entries().last().copied().unwrap_or(0) <= entry_cap {
                    if let Some(m) = index.iter().position(|x| **x == target) {
                        let _ = writeln!(out, "  n{n} -> n{m} [label=\"{i}\"];");
                    }
                }
            }
        }
    }
    out.push_str("}\n");
    out
}

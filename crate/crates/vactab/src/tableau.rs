use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::descent::DescentSet;
use crate::error::ValidationError;
use crate::partition::Partition;

/// A standard Young tableau: the cells of a partition shape filled by
/// 1..n, strictly increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StandardYoungTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardYoungTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self, ValidationError> {
        let mut rows = rows;
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        if rows.iter().any(Vec::is_empty) {
            return Err(ValidationError::RejectShape);
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(ValidationError::RejectShape);
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for &e in row {
                if e == 0 || e as usize > n || seen[e as usize] {
                    return Err(ValidationError::RejectEntries);
                }
                seen[e as usize] = true;
            }
        }
        let t = StandardYoungTableau { rows };
        if !t.is_standard() {
            return Err(ValidationError::RejectNotStandard);
        }
        Ok(t)
    }

    fn is_standard(&self) -> bool {
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &e) in row.iter().enumerate() {
                if j + 1 < row.len() && row[j + 1] <= e {
                    return false;
                }
                if i + 1 < self.rows.len() {
                    if let Some(&below) = self.rows[i + 1].get(j) {
                        if below <= e {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn empty() -> Self {
        StandardYoungTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[u32] {
        self.rows.get(i).map_or(&[], Vec::as_slice)
    }

    pub fn size(&self) -> u32 {
        self.rows.iter().map(|r| r.len() as u32).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>())
            .expect("row lengths of a tableau form a partition")
    }

    /// Row index (0-based) of an entry, or None if absent.
    pub fn row_of(&self, entry: u32) -> Option<usize> {
        self.rows.iter().position(|r| r.contains(&entry))
    }

    /// Descent set: entries j with j+1 strictly below j.
    pub fn descents(&self) -> DescentSet {
        let n = self.size();
        let mut row_of = vec![0usize; n as usize + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &e in row {
                row_of[e as usize] = i;
            }
        }
        DescentSet::from_iter((1..n).filter(|&j| row_of[j as usize + 1] > row_of[j as usize]))
    }

    /// All SYT of the given shape, sorted by their row-reading words.
    pub fn all_of_shape(shape: &Partition) -> Vec<StandardYoungTableau> {
        let n = shape.size();
        let rows: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
        let mut filling: Vec<Vec<u32>> = rows.iter().map(|&len| vec![0; len]).collect();
        let mut fill: Vec<usize> = vec![0; rows.len()];
        let mut out = Vec::new();
        fn go(
            k: u32,
            n: u32,
            rows: &[usize],
            filling: &mut Vec<Vec<u32>>,
            fill: &mut Vec<usize>,
            out: &mut Vec<StandardYoungTableau>,
        ) {
            if k > n {
                out.push(StandardYoungTableau {
                    rows: filling.clone(),
                });
                return;
            }
            for i in 0..rows.len() {
                let j = fill[i];
                if j >= rows[i] {
                    continue;
                }
                // cell (i, j) is addable iff the row above is already longer
                if i > 0 && fill[i - 1] <= j {
                    continue;
                }
                filling[i][j] = k;
                fill[i] += 1;
                go(k + 1, n, rows, filling, fill, out);
                fill[i] -= 1;
            }
        }
        go(1, n, &rows, &mut filling, &mut fill, &mut out);
        out.sort();
        out
    }

    /// Concatenation: shift every entry of `other` by |self| and append its
    /// rows to the rows of `self`.
    pub fn concat(&self, other: &StandardYoungTableau) -> Result<Self, ValidationError> {
        let shift = self.size();
        let rows = (0..self.rows.len().max(other.rows.len()))
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend(other.row(i).iter().map(|&e| e + shift));
                row
            })
            .collect();
        StandardYoungTableau::new(rows)
    }

    /// All ways of writing `self` as a concatenation of two nonempty
    /// standard Young tableaux, returned as the pairs themselves.
    pub fn split_concatenations(&self) -> Vec<(StandardYoungTableau, StandardYoungTableau)> {
        let n = self.size();
        let mut out = Vec::new();
        for k in 1..n {
            // the first factor must hold exactly the entries 1..=k as a prefix
            // of each row
            let mut first = Vec::new();
            let mut second = Vec::new();
            let mut ok = true;
            for row in &self.rows {
                let cut = row.iter().take_while(|&&e| e <= k).count();
                if row[cut..].iter().any(|&e| e <= k) {
                    ok = false;
                    break;
                }
                first.push(row[..cut].to_vec());
                second.push(row[cut..].iter().map(|&e| e - k).collect::<Vec<_>>());
            }
            if !ok {
                continue;
            }
            let (Ok(a), Ok(b)) = (
                StandardYoungTableau::new(first),
                StandardYoungTableau::new(second),
            ) else {
                continue;
            };
            if a.concat(&b).as_ref() == Ok(self) {
                out.push((a, b));
            }
        }
        out
    }

    /// Schützenberger evacuation, computed by iterated jeu-de-taquin slides:
    /// repeatedly delete the smallest entry, slide the hole outward and
    /// record the vacated cell.
    pub fn evacuation(&self) -> StandardYoungTableau {
        let n = self.size();
        let mut work = self.rows.clone();
        let mut out: Vec<Vec<u32>> = self.rows.iter().map(|r| vec![0; r.len()]).collect();
        for m in (1..=n).rev() {
            // the minimum of `work` sits at the top-left corner
            let (mut r, mut c) = (0usize, 0usize);
            loop {
                let right = work[r].get(c + 1).copied();
                let below = work.get(r + 1).and_then(|row| row.get(c)).copied();
                match (right, below) {
                    (None, None) => break,
                    (Some(x), None) => {
                        work[r][c] = x;
                        c += 1;
                    }
                    (None, Some(x)) => {
                        work[r][c] = x;
                        r += 1;
                    }
                    (Some(x), Some(y)) => {
                        if x < y {
                            work[r][c] = x;
                            c += 1;
                        } else {
                            work[r][c] = y;
                            r += 1;
                        }
                    }
                }
            }
            out[r][c] = m;
            work[r].pop();
            if work[r].is_empty() {
                work.pop();
            }
        }
        StandardYoungTableau { rows: out }
    }
}

impl fmt::Debug for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SYT{:?}", self.rows)
    }
}

impl fmt::Display for StandardYoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "[]");
        }
        let strs: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        let width = strs.iter().flatten().map(String::len).max().unwrap_or(1);
        for (i, row) in strs.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            for (j, s) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{s:>width$}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for StandardYoungTableau {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for StandardYoungTableau {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<u32>>::deserialize(d)?;
        StandardYoungTableau::new(rows).map_err(D::Error::custom)
    }
}

/// n! / (product of hook lengths); the number of SYT of a shape. Used as an
/// independent counting oracle for `all_of_shape`.
pub fn hook_length_count(shape: &Partition) -> u128 {
    let conj = shape.conjugate();
    let mut numer: u128 = 1;
    for k in 1..=shape.size() as u128 {
        numer *= k;
    }
    let mut denom: u128 = 1;
    for (i, &p) in shape.parts().iter().enumerate() {
        for j in 0..p as usize {
            let arm = p as u128 - 1 - j as u128;
            let leg = conj.part(j) as u128 - 1 - i as u128;
            denom *= arm + leg + 1;
        }
    }
    numer / denom
}

#[cfg(test)]
mod tests {
    use super::*;

    fn syt(rows: &[&[u32]]) -> StandardYoungTableau {
        StandardYoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn validates_the_running_example() {
        let q = syt(&[&[1, 2, 6, 9], &[3, 5, 8], &[4, 7]]);
        assert_eq!(q.size(), 9);
        assert_eq!(q.shape().parts(), &[4, 3, 2]);
    }

    #[test]
    fn validates_single_column() {
        syt(&[&[1], &[2], &[3]]);
    }

    #[test]
    fn rejects_duplicates() {
        assert_eq!(
            StandardYoungTableau::new(vec![vec![1, 3], vec![2, 2]]),
            Err(ValidationError::RejectEntries)
        );
    }

    #[test]
    fn rejects_nonstandard() {
        assert_eq!(
            StandardYoungTableau::new(vec![vec![1, 4], vec![3, 2]]),
            Err(ValidationError::RejectNotStandard)
        );
        assert_eq!(
            StandardYoungTableau::new(vec![vec![2, 1]]),
            Err(ValidationError::RejectNotStandard)
        );
    }

    #[test]
    fn descent_examples() {
        let q = syt(&[&[1, 2, 6, 9], &[3, 5, 8], &[4, 7]]);
        assert_eq!(q.descents().to_vec(), vec![2, 3, 6]);
        assert!(syt(&[&[1, 2, 3, 4]]).descents().is_empty());
        assert_eq!(syt(&[&[1], &[2], &[3]]).descents().to_vec(), vec![1, 2]);
    }

    #[test]
    fn enumeration_matches_examples() {
        let shape = Partition::new(vec![2, 1]).unwrap();
        let all = StandardYoungTableau::all_of_shape(&shape);
        assert_eq!(
            all,
            vec![syt(&[&[1, 2], &[3]]), syt(&[&[1, 3], &[2]])]
        );
        let one = Partition::new(vec![1]).unwrap();
        assert_eq!(
            StandardYoungTableau::all_of_shape(&one),
            vec![syt(&[&[1]])]
        );
        // hook length formula gives 5 for (3,3); enumeration must agree
        let shape33 = Partition::new(vec![3, 3]).unwrap();
        assert_eq!(hook_length_count(&shape33), 5);
        assert_eq!(StandardYoungTableau::all_of_shape(&shape33).len(), 5);
    }

    #[test]
    fn enumeration_counts_match_hook_lengths() {
        for n in 0..=9u32 {
            for shape in Partition::all_of_size(n, n as usize) {
                let count = StandardYoungTableau::all_of_shape(&shape).len() as u128;
                assert_eq!(count, hook_length_count(&shape), "shape {shape}");
            }
        }
    }

    #[test]
    fn concat_worked_example() {
        let a = syt(&[&[1], &[2], &[3]]);
        let b = syt(&[&[1, 2], &[3, 4]]);
        assert_eq!(
            a.concat(&b).unwrap(),
            syt(&[&[1, 4, 5], &[2, 6, 7], &[3]])
        );
        // identity and plain row concatenation
        let q = syt(&[&[1, 2], &[3]]);
        assert_eq!(q.concat(&StandardYoungTableau::empty()).unwrap(), q);
        assert_eq!(
            syt(&[&[1, 2]]).concat(&syt(&[&[1, 2]])).unwrap(),
            syt(&[&[1, 2, 3, 4]])
        );
    }

    #[test]
    fn concat_associative_small() {
        let parts = [
            syt(&[&[1, 2]]),
            syt(&[&[1], &[2], &[3]]),
            syt(&[&[1, 3], &[2, 4]]),
        ];
        for a in &parts {
            for b in &parts {
                for c in &parts {
                    let left = a.concat(b).unwrap().concat(c).unwrap();
                    let right = a.concat(&b.concat(c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn split_concatenations_inverts_concat() {
        let a = syt(&[&[1], &[2], &[3]]);
        let b = syt(&[&[1, 2], &[3, 4]]);
        let c = a.concat(&b).unwrap();
        assert!(c.split_concatenations().contains(&(a, b)));
        // two stacked columns split exactly once
        assert_eq!(
            syt(&[&[1, 3], &[2, 4]]).split_concatenations(),
            vec![(syt(&[&[1], &[2]]), syt(&[&[1], &[2]]))]
        );
        // an indecomposable tableau splits in no way
        assert!(syt(&[&[1, 2], &[3, 4]]).split_concatenations().is_empty());
    }

    #[test]
    fn evacuation_of_the_padded_running_example() {
        let q = syt(&[
            &[1, 2, 6, 9, 11, 12],
            &[3, 5, 8, 13],
            &[4, 7, 10, 14],
        ]);
        let expected = syt(&[
            &[1, 4, 5, 7, 8, 11],
            &[2, 6, 10, 12],
            &[3, 9, 13, 14],
        ]);
        assert_eq!(q.evacuation(), expected);
    }

    #[test]
    fn evacuation_small_cases() {
        assert_eq!(syt(&[&[1]]).evacuation(), syt(&[&[1]]));
        // computed by sliding through by hand
        assert_eq!(
            syt(&[&[1, 2], &[3, 4]]).evacuation(),
            syt(&[&[1, 2], &[3, 4]])
        );
    }

    #[test]
    fn evacuation_is_an_involution() {
        for n in 0..=8u32 {
            for shape in Partition::all_of_size(n, n as usize) {
                for q in StandardYoungTableau::all_of_shape(&shape) {
                    let e = q.evacuation();
                    assert_eq!(e.shape(), q.shape());
                    assert_eq!(e.evacuation(), q);
                }
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let q = syt(&[&[1, 2], &[3]]);
        assert_eq!(serde_json::to_string(&q).unwrap(), "[[1,2],[3]]");
        assert!(serde_json::from_str::<StandardYoungTableau>("[[1,3],[2,2]]").is_err());
    }
}

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::descent::DescentSet;
use crate::error::ValidationError;
use crate::partition::Partition;

/// One step of a vacillating word / Riordan path.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    Down,
    Flat,
    Up,
}

impl Letter {
    pub fn value(self) -> i8 {
        match self {
            Letter::Up => 1,
            Letter::Flat => 0,
            Letter::Down => -1,
        }
    }

    pub fn from_value(v: i8) -> Option<Letter> {
        match v {
            1 => Some(Letter::Up),
            0 => Some(Letter::Flat),
            -1 => Some(Letter::Down),
            _ => None,
        }
    }

    /// The step read backwards: up becomes down and vice versa.
    pub fn flipped(self) -> Letter {
        match self {
            Letter::Up => Letter::Down,
            Letter::Flat => Letter::Flat,
            Letter::Down => Letter::Up,
        }
    }
}

/// A vacillating word: letters in {1, 0, -1} whose prefix sums stay
/// nonnegative and whose 0 letters occur only at positive prefix sum.
/// Equivalently a Riordan path (a Motzkin path with no flat step on the
/// x-axis), except that the endpoint may sit at any height.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VacillatingWord {
    letters: Vec<Letter>,
}

impl VacillatingWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self, ValidationError> {
        let mut height: i64 = 0;
        for &l in &letters {
            match l {
                Letter::Up => height += 1,
                Letter::Flat => {
                    if height == 0 {
                        return Err(ValidationError::RejectFlatOnAxis);
                    }
                }
                Letter::Down => {
                    height -= 1;
                    if height < 0 {
                        return Err(ValidationError::RejectBelowAxis);
                    }
                }
            }
        }
        Ok(VacillatingWord { letters })
    }

    pub fn from_values(values: &[i8]) -> Result<Self, ValidationError> {
        let letters = values
            .iter()
            .map(|&v| Letter::from_value(v).ok_or(ValidationError::RejectEntries))
            .collect::<Result<Vec<_>, _>>()?;
        VacillatingWord::new(letters)
    }

    pub fn empty() -> Self {
        VacillatingWord { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn values(&self) -> Vec<i8> {
        self.letters.iter().map(|l| l.value()).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Final height, as a one-part partition (empty when the path returns
    /// to the axis).
    pub fn weight(&self) -> Partition {
        let h: i64 = self.letters.iter().map(|l| l.value() as i64).sum();
        Partition::single(h as u32)
    }

    /// Heights after each step; `heights()[i]` is the prefix sum of the
    /// first i+1 letters.
    pub fn heights(&self) -> Vec<u32> {
        let mut h = 0i64;
        self.letters
            .iter()
            .map(|l| {
                h += l.value() as i64;
                h as u32
            })
            .collect()
    }

    /// Descent set: position j is a descent if (w_j, w_{j+1}) is (1,0) or
    /// (0,-1), or is (1,-1) with the prefix before position j unbalanced.
    pub fn descents(&self) -> DescentSet {
        let mut balance: i64 = 0; // #1 - #(-1) of the strict prefix
        let mut out = Vec::new();
        for j in 0..self.letters.len().saturating_sub(1) {
            let here = self.letters[j];
            let next = self.letters[j + 1];
            let descent = match (here, next) {
                (Letter::Up, Letter::Flat) | (Letter::Flat, Letter::Down) => true,
                (Letter::Up, Letter::Down) => balance != 0,
                _ => false,
            };
            if descent {
                out.push(j as u32 + 1);
            }
            balance += here.value() as i64;
        }
        out.into_iter().collect()
    }

    /// All valid words of length `r` and the given (at most one-part)
    /// weight, in lexicographic order with -1 < 0 < 1.
    pub fn all_of_length(r: usize, shape: &Partition) -> Result<Vec<VacillatingWord>, ValidationError> {
        if shape.len() > 1 {
            return Err(ValidationError::RejectShapeTooLong);
        }
        let target = shape.part(0) as i64;
        let mut out = Vec::new();
        let mut acc: Vec<Letter> = Vec::with_capacity(r);
        fn go(
            acc: &mut Vec<Letter>,
            h: i64,
            left: usize,
            target: i64,
            out: &mut Vec<VacillatingWord>,
        ) {
            if (target - h).abs() > left as i64 {
                return;
            }
            if left == 0 {
                out.push(VacillatingWord {
                    letters: acc.clone(),
                });
                return;
            }
            for l in [Letter::Down, Letter::Flat, Letter::Up] {
                let valid = match l {
                    Letter::Down => h >= 1,
                    Letter::Flat => h >= 1,
                    Letter::Up => true,
                };
                if valid {
                    acc.push(l);
                    go(acc, h + l.value() as i64, left - 1, target, out);
                    acc.pop();
                }
            }
        }
        go(&mut acc, 0, r, target, &mut out);
        Ok(out)
    }

    /// Concatenation; the left word must have empty weight so the result
    /// never dips below the axis.
    pub fn concat(&self, other: &VacillatingWord) -> Result<VacillatingWord, ValidationError> {
        if !self.weight().is_empty() {
            return Err(ValidationError::RejectInvalidResult);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        VacillatingWord::new(letters).map_err(|_| ValidationError::RejectInvalidResult)
    }

    /// The path read from its right end. Only well-defined as a vacillating
    /// word when the weight is empty.
    pub fn reversed(&self) -> Result<VacillatingWord, ValidationError> {
        let letters = self.letters.iter().rev().map(|l| l.flipped()).collect();
        VacillatingWord::new(letters)
    }
}

impl fmt::Debug for VacillatingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word{:?}", self.values())
    }
}

impl fmt::Display for VacillatingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l.value())?;
        }
        write!(f, ")")
    }
}

impl Serialize for VacillatingWord {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.values().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VacillatingWord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let values = Vec::<i8>::deserialize(d)?;
        VacillatingWord::from_values(&values).map_err(D::Error::custom)
    }
}

/// Number of vacillating words of length `r` and weight `(mu1)`, by dynamic
/// programming over (steps taken, height). Independent of the enumerator;
/// the counting identities are checked against this.
pub fn path_count(r: usize, mu1: u32) -> u64 {
    let mut heights = vec![0u64; r + 2];
    heights[0] = 1;
    for _ in 0..r {
        let mut next = vec![0u64; r + 2];
        for (h, &c) in heights.iter().enumerate() {
            if c == 0 {
                continue;
            }
            next[h + 1] += c;
            if h >= 1 {
                next[h] += c;
                next[h - 1] += c;
            }
        }
        heights = next;
    }
    heights.get(mu1 as usize).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn word(values: &[i8]) -> VacillatingWord {
        VacillatingWord::from_values(values).unwrap()
    }

    #[test]
    fn accepts_a_long_word() {
        word(&[1, 1, 0, -1, 0, 1, -1, 0, 1, -1, -1, 1, 0, -1, 1, -1]);
    }

    #[test]
    fn rejects_flat_on_axis() {
        assert_eq!(
            VacillatingWord::from_values(&[0]),
            Err(ValidationError::RejectFlatOnAxis)
        );
    }

    #[test]
    fn rejects_below_axis() {
        assert_eq!(
            VacillatingWord::from_values(&[1, -1, -1]),
            Err(ValidationError::RejectBelowAxis)
        );
    }

    #[test]
    fn weight_examples() {
        assert_eq!(
            word(&[1, 1, 0, -1, 0, 1, -1, 0, 1]).weight(),
            Partition::single(2)
        );
        assert!(VacillatingWord::empty().weight().is_empty());
        assert_eq!(word(&[1, 1, 1]).weight(), Partition::single(3));
    }

    #[test]
    fn descent_examples() {
        let w = word(&[1, 1, 0, -1, 0, 1, -1, 0, 1, -1, -1, 1, 0, -1, 1, -1]);
        assert_eq!(w.descents().to_vec(), vec![2, 3, 6, 9, 12, 13]);
        // (1,-1) over a balanced prefix is not a descent
        assert!(word(&[1, -1]).descents().is_empty());
        // but is one over an unbalanced prefix
        assert_eq!(word(&[1, 1, -1]).descents().to_vec(), vec![2]);
    }

    #[test]
    fn enumeration_examples() {
        let empty = Partition::empty();
        assert_eq!(
            VacillatingWord::all_of_length(3, &empty).unwrap(),
            vec![word(&[1, 0, -1])]
        );
        assert!(VacillatingWord::all_of_length(1, &empty).unwrap().is_empty());
        assert_eq!(VacillatingWord::all_of_length(6, &empty).unwrap().len(), 15);
        assert_eq!(
            VacillatingWord::all_of_length(2, &Partition::single(2)).unwrap(),
            vec![word(&[1, 1])]
        );
        assert!(matches!(
            VacillatingWord::all_of_length(2, &Partition::new(vec![1, 1]).unwrap()),
            Err(ValidationError::RejectShapeTooLong)
        ));
    }

    #[test]
    fn riordan_numbers_by_recurrence() {
        // R_r = (r-1)(2 R_{r-1} + 3 R_{r-2}) / (r+1)
        let mut r_prev: u64 = 1; // R_0
        let mut r_cur: u64 = 0; // R_1
        assert_eq!(path_count(0, 0), 1);
        assert_eq!(path_count(1, 0), 0);
        for r in 2..=14u64 {
            let next = (r - 1) * (2 * r_cur + 3 * r_prev) / (r + 1);
            assert_eq!(path_count(r as usize, 0), next, "R_{r}");
            r_prev = r_cur;
            r_cur = next;
        }
        // enumeration agrees with the independent count
        for r in 0..=12usize {
            assert_eq!(
                VacillatingWord::all_of_length(r, &Partition::empty())
                    .unwrap()
                    .len() as u64,
                path_count(r, 0)
            );
        }
    }

    #[test]
    fn concat_examples() {
        let a = word(&[1, 0, -1]);
        let b = word(&[1, 1, -1, -1]);
        assert_eq!(a.concat(&b).unwrap(), word(&[1, 0, -1, 1, 1, -1, -1]));
        assert_eq!(a.concat(&VacillatingWord::empty()).unwrap(), a);
        assert_eq!(
            word(&[1, 1]).concat(&word(&[1])),
            Err(ValidationError::RejectInvalidResult)
        );
    }

    #[test]
    fn reversal_of_the_padded_running_word() {
        let w = word(&[1, 1, 0, -1, 0, 1, -1, 0, 1, -1, -1, 1, 0, -1]);
        let rev = word(&[1, 0, -1, 1, 1, -1, 0, 1, -1, 0, 1, 0, -1, -1]);
        assert_eq!(w.reversed().unwrap(), rev);
        assert_eq!(rev.reversed().unwrap(), w);
    }

    #[test]
    fn json_round_trip() {
        let w = word(&[1, 0, -1]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[1,0,-1]");
        assert!(serde_json::from_str::<VacillatingWord>("[0]").is_err());
        assert!(serde_json::from_str::<VacillatingWord>("[2]").is_err());
    }
}

//! Row insertion and extraction between three-row standard Young tableaux
//! with even rows and vacillating words of empty weight: the second half of
//! the bijection pipeline, working on labeled words.

use serde::Serialize;

use crate::error::PipelineError;
use crate::tableau::StandardYoungTableau;
use crate::word::VacillatingWord;

/// A word over {1, 0, -1} whose positions carry strictly increasing labels.
/// The working state of the insertion and extraction algorithms.
#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize)]
pub struct LabeledWord {
    labels: Vec<u32>,
    entries: Vec<i8>,
}

impl LabeledWord {
    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn word(&self) -> Result<VacillatingWord, PipelineError> {
        VacillatingWord::from_values(&self.entries).map_err(PipelineError::from)
    }

    fn from_word(word: &VacillatingWord) -> LabeledWord {
        LabeledWord {
            labels: (1..=word.len() as u32).collect(),
            entries: word.values(),
        }
    }

    fn index_of(&self, label: u32) -> usize {
        self.labels
            .binary_search(&label)
            .expect("label present in the word")
    }

    /// Where `label` would be inserted.
    fn insertion_point(&self, label: u32) -> usize {
        self.labels.partition_point(|&l| l < label)
    }

    fn insert(&mut self, label: u32, entry: i8) -> usize {
        let at = self.insertion_point(label);
        self.labels.insert(at, label);
        self.entries.insert(at, entry);
        at
    }

    fn remove(&mut self, idx: usize) {
        self.labels.remove(idx);
        self.entries.remove(idx);
    }

    /// Level of the position at `idx`: the minimum of the prefix sums
    /// excluding and including this entry.
    fn level(&self, idx: usize) -> i64 {
        let before: i64 = self.entries[..idx].iter().map(|&e| e as i64).sum();
        before.min(before + self.entries[idx] as i64)
    }

    /// Is the 0 at `idx` in 3-row-position: on level two or higher, or the
    /// rightmost 0 of an odd run of 0's on level one.
    fn is_three_row_position(&self, idx: usize) -> Result<bool, PipelineError> {
        if self.entries[idx] != 0 {
            return Err(PipelineError::RejectNotZero);
        }
        let level = self.level(idx);
        if level >= 2 {
            return Ok(true);
        }
        if level != 1 {
            return Ok(false);
        }
        // rightmost of its run of consecutive 0 entries?
        if self.entries.get(idx + 1) == Some(&0) {
            return Ok(false);
        }
        let mut run = 0usize;
        let mut j = idx as i64;
        while j >= 0 && self.entries[j as usize] == 0 {
            run += 1;
            j -= 1;
        }
        Ok(run % 2 == 1)
    }
}

/// Public form of the 3-row-position predicate, indexed by position
/// (1-based) in a plain word.
pub fn is_three_row_position(word: &VacillatingWord, position: usize) -> Result<bool, PipelineError> {
    let lw = LabeledWord::from_word(word);
    if position == 0 || position > lw.len() {
        return Err(PipelineError::RejectInvalidWord("position out of range".into()));
    }
    lw.is_three_row_position(position - 1)
}

/// One intermediate state of the insertion or extraction, for tracing.
#[derive(Clone, Debug, Serialize)]
pub struct InsertionStep {
    pub action: String,
    pub labels: Vec<u32>,
    pub entries: Vec<i8>,
}

pub type Trace = Vec<InsertionStep>;

fn record(trace: Option<&mut Trace>, action: &str, w: &LabeledWord) {
    if let Some(t) = trace {
        t.push(InsertionStep {
            action: action.to_string(),
            labels: w.labels.clone(),
            entries: w.entries.clone(),
        });
    }
}

/// Maps a standard Young tableau with at most three rows, all of even
/// length, to a vacillating word of empty weight and the same length. The
/// word's descent set equals the tableau's.
pub fn insert_rows(q: &StandardYoungTableau) -> Result<VacillatingWord, PipelineError> {
    insert_rows_traced(q, None)
}

pub fn insert_rows_traced(
    q: &StandardYoungTableau,
    mut trace: Option<&mut Trace>,
) -> Result<VacillatingWord, PipelineError> {
    if q.rows().len() > 3 || q.rows().iter().any(|r| r.len() % 2 != 0) {
        return Err(PipelineError::RejectRowParity);
    }
    let mut w = LabeledWord::default();
    // first row: an alternating word labeled by the row entries
    for (i, &label) in q.row(0).iter().enumerate() {
        w.labels.push(label);
        w.entries.push(if i % 2 == 0 { 1 } else { -1 });
    }
    record(trace.as_deref_mut(), "first row", &w);

    // second row: insert pairs right to left
    for pair in q.row(1).chunks_exact(2).rev() {
        let (a, b) = (pair[0], pair[1]);
        insert_second_row_pair(&mut w, a, b);
        record(trace.as_deref_mut(), &format!("second row pair ({a},{b})"), &w);
        debug_assert!(zeros_in_pairs_on_level_one(&w));
        debug_assert!(w.word().is_ok());
    }

    // third row: insert pairs right to left
    for pair in q.row(2).chunks_exact(2).rev() {
        let (a, b) = (pair[0], pair[1]);
        insert_third_row_pair(&mut w, a, b)?;
        record(trace.as_deref_mut(), &format!("third row pair ({a},{b})"), &w);
        debug_assert!(w.word().is_ok());
    }
    w.word()
}

fn insert_second_row_pair(w: &mut LabeledWord, a: u32, b: u32) {
    // insert b
    w.insert(b, -1);
    // insert a: the position to the right of a always exists, because b was
    // just inserted to the right of it
    let at = w.insertion_point(a);
    let right_is_free_minus = w.entries[at] == -1 && w.labels[at] != b;
    if right_is_free_minus {
        // case 1: a becomes a 0 and turns the -1 to its right into a 0
        let at = w.insert(a, 0);
        w.entries[at + 1] = 0;
    } else {
        // case 2: a becomes a -1 and the next -1 to its left becomes a 1
        let at = w.insert(a, -1);
        let j = (0..at)
            .rev()
            .find(|&j| w.entries[j] == -1)
            .expect("a -1 exists left of a");
        w.entries[j] = 1;
    }
    // flatten pairs of 1,-1 strictly between a and b into 0,0
    let from = w.index_of(a) + 1;
    let to = w.index_of(b);
    let mut j = from;
    while j + 1 < to {
        if w.entries[j] == 1 && w.entries[j + 1] == -1 {
            w.entries[j] = 0;
            w.entries[j + 1] = 0;
            j += 2;
        } else {
            j += 1;
        }
    }
}

fn insert_third_row_pair(w: &mut LabeledWord, a: u32, b: u32) -> Result<(), PipelineError> {
    // insert b, then turn the next -1 to its left into a 0
    let at = w.insert(b, -1);
    let bt = (0..at)
        .rev()
        .find(|&j| w.entries[j] == -1)
        .ok_or(PipelineError::RejectSuffixShape)?;
    w.entries[bt] = 0;
    let b_tilde = w.labels[bt];

    let mut connected: Vec<u32> = Vec::new();
    let mut a_inserted = false;
    let mut c = w.index_of(b) as i64;
    loop {
        let ci = c as usize;
        // connect: a 1 on level 0 flattens together with the -1 to its left
        if w.entries[ci] == 1 && w.level(ci) == 0 {
            debug_assert_eq!(w.entries[ci - 1], -1);
            w.entries[ci] = 0;
            w.entries[ci - 1] = 0;
            connected.push(w.labels[ci]);
            connected.push(w.labels[ci - 1]);
        } else if !a_inserted
            && ci % 2 == 0
            && ci > 0
            && w.entries[ci] == 0
            && w.entries[ci - 1] == 0
            && w.level(ci) == 1
            && w.level(ci - 1) == 1
        {
            // separate: a 0,0 on level one at an even split point becomes -1,1
            w.entries[ci] = 1;
            w.entries[ci - 1] = -1;
        }

        if !a_inserted && ci > 0 && w.insertion_point(a) == ci {
            // a goes directly to the left of c
            w.insert(a, -1);
            a_inserted = true;
            c += 1; // same physical position, shifted by the insertion
        } else if a_inserted {
            let ci = c as usize;
            if w.entries[ci] == -1 && w.labels[ci] != a {
                // case 1: this -1 becomes a 0 and finishes the insertion
                w.entries[ci] = 0;
                return Ok(());
            }
            if w.entries[ci] == 0
                && !connected.contains(&w.labels[ci])
                && w.labels[ci] < b_tilde
            {
                // case 2: this 0 becomes a 1 and finishes the insertion
                w.entries[ci] = 1;
                return Ok(());
            }
        }
        c -= 1;
        if c < 0 {
            return Err(PipelineError::RejectInvalidWord(
                "third-row insertion ran off the left end".into(),
            ));
        }
    }
}

/// Holds after every second-row pair insertion: each 0 sits next to another
/// 0 at level one.
fn zeros_in_pairs_on_level_one(w: &LabeledWord) -> bool {
    let mut i = 0;
    while i < w.len() {
        if w.entries[i] == 0 {
            if i + 1 >= w.len() || w.entries[i + 1] != 0 {
                return false;
            }
            if w.level(i) != 1 || w.level(i + 1) != 1 {
                return false;
            }
            i += 2;
        } else {
            i += 1;
        }
    }
    true
}

/// Maps a vacillating word of empty weight and even length back to the
/// standard Young tableau. The exact inverse of [`insert_rows`].
pub fn extract_rows(word: &VacillatingWord) -> Result<StandardYoungTableau, PipelineError> {
    extract_rows_traced(word, None)
}

pub fn extract_rows_traced(
    word: &VacillatingWord,
    mut trace: Option<&mut Trace>,
) -> Result<StandardYoungTableau, PipelineError> {
    if !word.weight().is_empty() || word.len() % 2 != 0 {
        return Err(PipelineError::RejectInvalidWord(
            "expected an even-length word of empty weight".into(),
        ));
    }
    let mut w = LabeledWord::from_word(word);
    let mut row3: Vec<u32> = Vec::new();
    let mut row2: Vec<u32> = Vec::new();

    // third row: while some 0 is in 3-row-position
    while let Some(p) =
        (0..w.len()).find(|&i| w.entries[i] == 0 && w.is_three_row_position(i).unwrap_or(false))
    {
        let (a, b) = extract_third_row_pair(&mut w, p)?;
        record(trace.as_deref_mut(), &format!("third row pair ({a},{b})"), &w);
        debug_assert!(w.word().is_ok());
        row3.push(a);
        row3.push(b);
    }

    // second row: while the word is not plain alternating 1,-1
    loop {
        let alternating = w
            .entries
            .iter()
            .enumerate()
            .all(|(i, &e)| e == if i % 2 == 0 { 1 } else { -1 });
        if alternating {
            break;
        }
        let (a, b) = extract_second_row_pair(&mut w)?;
        record(trace.as_deref_mut(), &format!("second row pair ({a},{b})"), &w);
        debug_assert!(w.word().is_ok());
        row2.push(a);
        row2.push(b);
    }

    row2.sort_unstable();
    row3.sort_unstable();
    let mut rows = vec![w.labels.clone()];
    if !row2.is_empty() {
        rows.push(row2);
    }
    if !row3.is_empty() {
        rows.push(row3);
    }
    StandardYoungTableau::new(rows)
        .map_err(|_| PipelineError::RejectInvalidWord("extracted rows are not standard".into()))
}

fn extract_third_row_pair(w: &mut LabeledWord, p: usize) -> Result<(u32, u32), PipelineError> {
    // extract a
    let a_tilde_idx = if w.level(p) == 1 && w.entries.get(p + 1) == Some(&1) {
        // case 2: the 1 to the right becomes a 0
        w.entries[p + 1] = 0;
        p + 1
    } else {
        // case 1: p itself becomes a -1
        w.entries[p] = -1;
        p
    };
    let a_idx = (a_tilde_idx + 1..w.len())
        .find(|&i| w.entries[i] == -1)
        .ok_or_else(|| PipelineError::RejectInvalidWord("no -1 right of the changed position".into()))?;
    let a = w.labels[a_idx];
    w.remove(a_idx);

    // walk right from the changed position, undoing connects and separates,
    // until b is found
    let mut c = a_tilde_idx;
    loop {
        if c >= w.len() {
            return Err(PipelineError::RejectInvalidWord(
                "third-row extraction ran off the right end".into(),
            ));
        }
        if w.entries[c] == -1 && w.level(c) == 0 {
            // undo separate
            if w.entries.get(c + 1) != Some(&1) {
                return Err(PipelineError::RejectInvalidWord(
                    "separated pair lost its second half".into(),
                ));
            }
            w.entries[c] = 0;
            w.entries[c + 1] = 0;
        } else if c % 2 == 1
            && w.entries[c] == 0
            && w.entries.get(c + 1) == Some(&0)
            && w.level(c) == 1
            && w.level(c + 1) == 1
        {
            // undo connect
            w.entries[c] = -1;
            w.entries[c + 1] = 1;
        }
        if w.entries[c] == 0 && w.is_three_row_position(c)? {
            // extract b
            w.entries[c] = -1;
            let b_idx = (c + 1..w.len())
                .find(|&i| w.entries[i] == -1)
                .ok_or_else(|| {
                    PipelineError::RejectInvalidWord("no -1 right of the second changed position".into())
                })?;
            let b = w.labels[b_idx];
            w.remove(b_idx);
            return Ok((a, b));
        }
        c += 1;
    }
}

fn extract_second_row_pair(w: &mut LabeledWord) -> Result<(u32, u32), PipelineError> {
    // a is the leftmost position that is neither a 1 nor on level 0
    let a_idx = (0..w.len())
        .find(|&i| w.entries[i] != 1 && w.level(i) != 0)
        .ok_or_else(|| PipelineError::RejectInvalidWord("no second-row position left".into()))?;
    let new_minus = if w.entries[a_idx] == -1 {
        // case 2: the leftmost 1 on level one becomes a -1
        let j = (0..w.len())
            .find(|&i| w.entries[i] == 1 && w.level(i) == 1)
            .ok_or_else(|| PipelineError::RejectInvalidWord("no 1 on level one".into()))?;
        w.entries[j] = -1;
        j
    } else {
        // case 1: the 0 to the right of a becomes a -1
        let j = a_idx + 1;
        if w.entries.get(j) != Some(&0) {
            return Err(PipelineError::RejectInvalidWord(
                "expected the partner 0 right of a".into(),
            ));
        }
        w.entries[j] = -1;
        j
    };
    let a = w.labels[a_idx];
    let new_minus = if a_idx < new_minus { new_minus - 1 } else { new_minus };
    w.remove(a_idx);

    let b_idx = (new_minus + 1..w.len())
        .find(|&i| w.entries[i] == -1)
        .ok_or_else(|| PipelineError::RejectInvalidWord("no -1 right of the new -1".into()))?;
    let b = w.labels[b_idx];
    w.remove(b_idx);

    // restore flattened pairs: 0,0 on level 0 becomes 1,-1
    let mut i = 0;
    while i + 1 < w.len() {
        if w.entries[i] == 0 && w.entries[i + 1] == 0 && w.level(i) == 0 {
            w.entries[i] = 1;
            w.entries[i + 1] = -1;
            i += 2;
        } else {
            i += 1;
        }
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;

    fn syt(rows: &[&[u32]]) -> StandardYoungTableau {
        StandardYoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn word(values: &[i8]) -> VacillatingWord {
        VacillatingWord::from_values(values).unwrap()
    }

    #[test]
    fn running_example_insertion() {
        let q = syt(&[
            &[1, 2, 6, 9, 11, 12],
            &[3, 5, 8, 13],
            &[4, 7, 10, 14],
        ]);
        assert_eq!(
            insert_rows(&q).unwrap(),
            word(&[1, 1, 0, -1, 0, 1, -1, 0, 1, -1, -1, 1, 0, -1])
        );
    }

    #[test]
    fn base_cases() {
        assert_eq!(insert_rows(&syt(&[&[1, 2]])).unwrap(), word(&[1, -1]));
        assert_eq!(
            insert_rows(&syt(&[&[1, 3], &[2, 4]])).unwrap(),
            word(&[1, 0, 0, -1])
        );
        assert_eq!(
            insert_rows(&StandardYoungTableau::empty()).unwrap(),
            VacillatingWord::empty()
        );
    }

    #[test]
    fn rejects_odd_rows() {
        assert!(matches!(
            insert_rows(&syt(&[&[1, 2, 3], &[4, 5], &[6]])),
            Err(PipelineError::RejectRowParity)
        ));
    }

    #[test]
    fn running_example_extraction() {
        let w = word(&[1, 1, 0, -1, 0, 1, -1, 0, 1, -1, -1, 1, 0, -1]);
        assert_eq!(
            extract_rows(&w).unwrap(),
            syt(&[&[1, 2, 6, 9, 11, 12], &[3, 5, 8, 13], &[4, 7, 10, 14]])
        );
    }

    #[test]
    fn extraction_base_cases() {
        assert_eq!(extract_rows(&word(&[1, -1])).unwrap(), syt(&[&[1, 2]]));
        assert_eq!(
            extract_rows(&word(&[1, 0, 0, -1])).unwrap(),
            syt(&[&[1, 3], &[2, 4]])
        );
    }

    #[test]
    fn three_row_position_examples() {
        let w = word(&[1, 1, 0, -1]);
        assert!(is_three_row_position(&w, 3).unwrap());
        let w = word(&[1, 0, 0, -1]);
        assert!(!is_three_row_position(&w, 2).unwrap());
        assert!(!is_three_row_position(&w, 3).unwrap());
        let w = word(&[1, 0, -1]);
        assert!(is_three_row_position(&w, 2).unwrap());
        assert!(matches!(
            is_three_row_position(&w, 1),
            Err(PipelineError::RejectNotZero)
        ));
    }

    #[test]
    fn reference_assignment_for_small_words() {
        // the descent-sorted table of tableau/word pairs up to r = 6
        let fixtures: &[(&[&[u32]], &[i8])] = &[
            (&[&[1, 2]], &[1, -1]),
            (&[&[1, 2, 3, 4]], &[1, -1, 1, -1]),
            (&[&[1, 2], &[3, 4]], &[1, 1, -1, -1]),
            (&[&[1, 3], &[2, 4]], &[1, 0, 0, -1]),
            (&[&[1, 2, 3, 4, 5, 6]], &[1, -1, 1, -1, 1, -1]),
            (&[&[1, 2, 3, 4], &[5, 6]], &[1, -1, 1, 1, -1, -1]),
            (&[&[1, 2, 3, 5], &[4, 6]], &[1, -1, 1, 0, 0, -1]),
            (&[&[1, 2, 4, 5], &[3, 6]], &[1, 1, -1, 0, 0, -1]),
            (&[&[1, 3, 4, 5], &[2, 6]], &[1, 0, 0, 0, 0, -1]),
            (&[&[1, 2, 3, 6], &[4, 5]], &[1, 1, 1, -1, -1, -1]),
            (&[&[1, 3, 4, 6], &[2, 5]], &[1, 0, 0, 1, -1, -1]),
            (&[&[1, 2, 5, 6], &[3, 4]], &[1, 1, -1, -1, 1, -1]),
            (&[&[1, 3, 5, 6], &[2, 4]], &[1, 0, 0, -1, 1, -1]),
            (&[&[1, 3], &[2, 4], &[5, 6]], &[1, 0, 1, 0, -1, -1]),
            (&[&[1, 2], &[3, 5], &[4, 6]], &[1, 1, 0, -1, 0, -1]),
            (&[&[1, 3], &[2, 5], &[4, 6]], &[1, 0, 1, -1, 0, -1]),
            (&[&[1, 4], &[2, 5], &[3, 6]], &[1, 0, -1, 1, 0, -1]),
            // the two descent-set {2,4} objects at r = 6
            (&[&[1, 2, 4, 6], &[3, 5]], &[1, 1, -1, 1, -1, -1]),
            (&[&[1, 2], &[3, 4], &[5, 6]], &[1, 1, 0, 0, -1, -1]),
        ];
        for (rows, values) in fixtures {
            let q = syt(rows);
            let w = word(values);
            assert_eq!(insert_rows(&q).unwrap(), w, "insert {q:?}");
            assert_eq!(extract_rows(&w).unwrap(), q, "extract {w:?}");
            assert_eq!(q.descents(), w.descents(), "descents {q:?}");
        }
    }

    #[test]
    fn third_row_insertions_create_three_row_zeros() {
        // after each third-row pair the count of 0's in 3-row-position
        // grows, and every traced intermediate is a valid word
        for r in (2..=10usize).step_by(2) {
            for w in VacillatingWord::all_of_length(r, &Partition::empty()).unwrap() {
                let q = extract_rows(&w).unwrap();
                let mut trace = Trace::new();
                insert_rows_traced(&q, Some(&mut trace)).unwrap();
                let mut last_third_row_zeros = 0;
                for step in &trace {
                    let word = VacillatingWord::from_values(&step.entries)
                        .expect("intermediate stages stay valid");
                    let count = (1..=word.len())
                        .filter(|&i| {
                            word.values()[i - 1] == 0
                                && is_three_row_position(&word, i).unwrap()
                        })
                        .count();
                    if step.action.starts_with("third row") {
                        assert!(
                            count > last_third_row_zeros,
                            "{} added no 3-row-position zero in {w:?}",
                            step.action
                        );
                    }
                    last_third_row_zeros = count;
                }
            }
        }
    }

    #[test]
    fn round_trip_and_descents_exhaustive() {
        for r in (0..=10usize).step_by(2) {
            for w in VacillatingWord::all_of_length(r, &Partition::empty()).unwrap() {
                let q = extract_rows(&w).unwrap();
                assert!(q.rows().len() <= 3);
                assert!(q.rows().iter().all(|row| row.len() % 2 == 0));
                assert_eq!(insert_rows(&q).unwrap(), w, "word {w:?}");
                assert_eq!(q.descents(), w.descents(), "descents of {w:?}");
            }
        }
    }
}

//! The descent-preserving bijection between pairs (standard Young tableau,
//! orthogonal Littlewood-Richardson tableau) and vacillating words.
//!
//! Forward: expand Q by the cells L dictates, pad to even row lengths if
//! needed, insert the rows into a word, then strip the guaranteed suffix.
//! Inverse: pad the word back to empty weight and even length, extract the
//! rows, strip the padding triple and contract.

mod expand;
mod insert;

pub use expand::{contract, expand, pad_parity, strip_triple, ExpandedTableau};
pub use insert::{
    extract_rows, extract_rows_traced, insert_rows, insert_rows_traced, is_three_row_position,
    InsertionStep, LabeledWord, Trace,
};

use crate::error::PipelineError;
use crate::lr::OrthLRTableau;
use crate::partition::Partition;
use crate::tableau::StandardYoungTableau;
use crate::word::{Letter, VacillatingWord};

/// Removes the bijection's guaranteed suffix: first the parity triple
/// (1, 0, -1) when `added` is set, then μ1 trailing -1 steps.
pub fn strip_suffix(
    word: &VacillatingWord,
    added: bool,
    mu: &Partition,
) -> Result<VacillatingWord, PipelineError> {
    let mut letters = word.letters().to_vec();
    if added {
        if letters.len() < 3
            || letters[letters.len() - 3..] != [Letter::Up, Letter::Flat, Letter::Down]
        {
            return Err(PipelineError::RejectSuffixShape);
        }
        letters.truncate(letters.len() - 3);
    }
    let mu1 = mu.part(0) as usize;
    if letters.len() < mu1 || letters[letters.len() - mu1..].iter().any(|&l| l != Letter::Down) {
        return Err(PipelineError::RejectSuffixShape);
    }
    letters.truncate(letters.len() - mu1);
    let out = VacillatingWord::new(letters)?;
    if out.weight() != *mu {
        return Err(PipelineError::RejectSuffixShape);
    }
    Ok(out)
}

/// Appends μ1 down steps to reach empty weight, then (1, 0, -1) if the
/// length is odd. Returns the padded word, the triple flag and μ.
pub fn pad_word(word: &VacillatingWord) -> (VacillatingWord, bool, Partition) {
    let mu = word.weight();
    let mut letters = word.letters().to_vec();
    letters.extend(std::iter::repeat_n(Letter::Down, mu.part(0) as usize));
    let added = letters.len() % 2 == 1;
    if added {
        letters.extend([Letter::Up, Letter::Flat, Letter::Down]);
    }
    let padded = VacillatingWord::new(letters).expect("padding preserves validity");
    (padded, added, mu)
}

/// The forward bijection: (Q, L) to the vacillating word of length |λ| and
/// weight μ, with the same descent set as Q.
pub fn forward(
    q: &StandardYoungTableau,
    l: &OrthLRTableau,
) -> Result<VacillatingWord, PipelineError> {
    let expanded = pad_parity(&expand(l, q)?);
    let word = insert_rows(&expanded.tableau)?;
    strip_suffix(&word, expanded.added_parity_triple, &expanded.mu)
}

/// The inverse bijection: a vacillating word to the unique (Q, L) with
/// `forward(Q, L)` equal to it.
pub fn inverse(
    word: &VacillatingWord,
) -> Result<(StandardYoungTableau, OrthLRTableau), PipelineError> {
    let (padded, added, mu) = pad_word(word);
    let q_tilde = extract_rows(&padded)?;
    let stripped = strip_triple(&q_tilde, added)?;
    let (l, q) = contract(&stripped, &mu)?;
    Ok((q, l))
}

/// The word a weight-∅ tableau corresponds to under the bijection: the plain
/// insertion for even rows, or insertion of the padded tableau followed by
/// stripping the triple for all-odd rows.
pub fn tableau_word(q: &StandardYoungTableau) -> Result<VacillatingWord, PipelineError> {
    let lens: Vec<usize> = q.rows().iter().map(Vec::len).collect();
    if lens.iter().all(|l| l % 2 == 0) {
        insert_rows(q)
    } else if lens.len() == 3 && lens.iter().all(|l| l % 2 == 1) {
        let padded = pad_parity(&ExpandedTableau {
            tableau: q.clone(),
            mu: Partition::empty(),
            added_parity_triple: false,
        });
        strip_suffix(&insert_rows(&padded.tableau)?, true, &Partition::empty())
    } else {
        Err(PipelineError::RejectRowParity)
    }
}

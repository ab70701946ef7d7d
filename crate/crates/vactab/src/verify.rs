//! Batch verification suites over exhaustively enumerated small cases, the
//! descent-multiset identity, and the reference table of small bijection
//! instances.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Instant;

use serde::Serialize;

use crate::arcs::{
    arc_diagram, arc_diagram_with, automaton, automaton_prefixes, check_concatenation,
    check_evacuation_conjecture, is_dyck_preimage, SeededRandom,
};
use crate::bijection::{extract_rows, forward, inverse};
use crate::crystal::{generate_bounded, CrystalElement};
use crate::descent::DescentMultiset;
use crate::error::ValidationError;
use crate::lr::{LrColumn, OrthLRTableau};
use crate::partition::Partition;
use crate::tableau::StandardYoungTableau;
use crate::word::{path_count, Letter, VacillatingWord};

/// One failing case, with a JSON reproducer small enough to paste into a
/// unit test.
#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub case: String,
    pub detail: String,
}

/// Outcome of one suite run.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: String,
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub millis: u128,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} cases, {} failures, {} ms)",
            self.suite,
            if self.passed() { "pass" } else { "FAIL" },
            self.cases,
            self.failures.len(),
            self.millis
        )
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Roundtrip,
    Descents,
    Cardinality,
    Equivalence,
    Concatenation,
    Dyck,
    Prefix,
    Suffix,
    Crystal,
    Evacuation,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Roundtrip,
        Suite::Descents,
        Suite::Cardinality,
        Suite::Equivalence,
        Suite::Concatenation,
        Suite::Dyck,
        Suite::Prefix,
        Suite::Suffix,
        Suite::Crystal,
        Suite::Evacuation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Roundtrip => "roundtrip",
            Suite::Descents => "descents",
            Suite::Cardinality => "cardinality",
            Suite::Equivalence => "equivalence",
            Suite::Concatenation => "concatenation",
            Suite::Dyck => "dyck",
            Suite::Prefix => "prefix",
            Suite::Suffix => "suffix",
            Suite::Crystal => "crystal-vs-explicit",
            Suite::Evacuation => "evacuation-report",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name() == name)
    }
}

/// Fans `inputs` out over a bounded pool of workers and merges the results
/// in input order. Workers share nothing mutable.
fn fan_out<T, R, F>(inputs: Vec<T>, f: F) -> Vec<R>
where
    T: Send + Sync,
    R: Send,
    F: Fn(&T) -> R + Sync,
{
    let workers = std::thread::available_parallelism()
        .map(|n| n.get().min(8))
        .unwrap_or(1);
    if workers <= 1 || inputs.len() < 2 {
        return inputs.iter().map(&f).collect();
    }
    let chunk = inputs.len().div_ceil(workers);
    let chunks: Vec<&[T]> = inputs.chunks(chunk).collect();
    std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|slice| scope.spawn(|| slice.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("verify worker"))
            .collect()
    })
}

fn all_words_up_to(max_r: usize) -> Vec<VacillatingWord> {
    let mut out = Vec::new();
    for r in 0..=max_r {
        for mu1 in 0..=r as u32 {
            out.extend(VacillatingWord::all_of_length(r, &Partition::single(mu1)).unwrap());
        }
    }
    out
}

fn empty_weight_words(max_r: usize) -> Vec<VacillatingWord> {
    (0..=max_r)
        .flat_map(|r| VacillatingWord::all_of_length(r, &Partition::empty()).unwrap())
        .collect()
}

/// All pairs (L, Q) of a given size and weight.
fn all_pairs(r: u32, mu: &Partition) -> Vec<(OrthLRTableau, StandardYoungTableau)> {
    let mut out = Vec::new();
    for lambda in Partition::all_of_size(r, 3) {
        for l in OrthLRTableau::enumerate(&lambda, mu).unwrap() {
            for q in StandardYoungTableau::all_of_shape(&lambda) {
                out.push((l.clone(), q.clone()));
            }
        }
    }
    out
}

fn report(suite: Suite, params: String, cases: u64, failures: Vec<Failure>, start: Instant) -> VerificationReport {
    VerificationReport {
        suite: suite.name().to_string(),
        params,
        cases,
        failures,
        millis: start.elapsed().as_millis(),
    }
}

fn word_json(w: &VacillatingWord) -> String {
    serde_json::to_string(w).expect("words serialize")
}

/// forward ∘ inverse and inverse ∘ forward are both the identity.
pub fn run_roundtrip(max_r: usize) -> VerificationReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0u64;

    let words = all_words_up_to(max_r);
    cases += words.len() as u64;
    let word_failures = fan_out(words, |w| -> Option<Failure> {
        let (q, l) = match inverse(w) {
            Ok(pair) => pair,
            Err(e) => {
                return Some(Failure {
                    case: word_json(w),
                    detail: format!("inverse failed: {e}"),
                })
            }
        };
        match forward(&q, &l) {
            Ok(back) if back == *w => None,
            Ok(back) => Some(Failure {
                case: word_json(w),
                detail: format!("forward(inverse(w)) = {back:?}"),
            }),
            Err(e) => Some(Failure {
                case: word_json(w),
                detail: format!("forward failed: {e}"),
            }),
        }
    });
    failures.extend(word_failures.into_iter().flatten());

    for r in 0..=max_r as u32 {
        for mu1 in 0..=r {
            let mu = Partition::single(mu1);
            let pairs = all_pairs(r, &mu);
            cases += pairs.len() as u64;
            let pair_failures = fan_out(pairs, |(l, q)| -> Option<Failure> {
                let case = || {
                    format!(
                        "{{\"q\":{},\"lr\":{}}}",
                        serde_json::to_string(q).unwrap(),
                        serde_json::to_string(l).unwrap()
                    )
                };
                match forward(q, l) {
                    Ok(w) => match inverse(&w) {
                        Ok((q2, l2)) if q2 == *q && l2 == *l => None,
                        Ok(_) => Some(Failure {
                            case: case(),
                            detail: "inverse(forward(q, l)) differs".into(),
                        }),
                        Err(e) => Some(Failure {
                            case: case(),
                            detail: format!("inverse failed: {e}"),
                        }),
                    },
                    Err(e) => Some(Failure {
                        case: case(),
                        detail: format!("forward failed: {e}"),
                    }),
                }
            });
            failures.extend(pair_failures.into_iter().flatten());
        }
    }
    report(Suite::Roundtrip, format!("r <= {max_r}"), cases, failures, start)
}

/// Des(word) equals Des(Q) for every corresponding pair, and the
/// descent-multiset identity holds for every (r, mu).
pub fn run_descents(max_r: usize) -> VerificationReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0u64;
    let words = all_words_up_to(max_r);
    cases += words.len() as u64;
    let word_failures = fan_out(words, |w| -> Option<Failure> {
        match inverse(w) {
            Ok((q, _)) if q.descents() == w.descents() => None,
            Ok((q, _)) => Some(Failure {
                case: word_json(w),
                detail: format!("Des(word) = {} but Des(Q) = {}", w.descents(), q.descents()),
            }),
            Err(e) => Some(Failure {
                case: word_json(w),
                detail: format!("inverse failed: {e}"),
            }),
        }
    });
    failures.extend(word_failures.into_iter().flatten());

    for r in 0..=max_r {
        for mu1 in 0..=r as u32 {
            cases += 1;
            let f = frobenius_descent_multisets(r, &Partition::single(mu1)).unwrap();
            if !f.equal {
                failures.push(Failure {
                    case: format!("{{\"r\":{r},\"mu\":[{mu1}]}}"),
                    detail: "descent multisets differ".into(),
                });
            }
        }
    }
    report(Suite::Descents, format!("r <= {max_r}"), cases, failures, start)
}

/// Σ_λ |LR(λ,μ)|·|SYT(λ)| counts the words of every length and weight, with
/// the word count itself checked against the dynamic-programming oracle.
pub fn run_cardinality(max_r: usize) -> VerificationReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0u64;
    // the Riordan numbers, locked in as an oracle for the empty weight
    let riordan: [u64; 9] = [1, 0, 1, 1, 3, 6, 15, 36, 91];
    for (r, &expect) in riordan.iter().enumerate() {
        cases += 1;
        if path_count(r, 0) != expect {
            failures.push(Failure {
                case: format!("{{\"r\":{r}}}"),
                detail: format!("path_count(r, 0) = {} expected {expect}", path_count(r, 0)),
            });
        }
    }
    for r in 0..=max_r {
        for mu1 in 0..=r as u32 {
            cases += 1;
            let mu = Partition::single(mu1);
            let by_enumeration =
                VacillatingWord::all_of_length(r, &mu).unwrap().len() as u64;
            let by_dp = path_count(r, mu1);
            let by_pairs: u64 = Partition::all_of_size(r as u32, 3)
                .iter()
                .map(|lambda| {
                    OrthLRTableau::enumerate(lambda, &mu).unwrap().len() as u64
                        * StandardYoungTableau::all_of_shape(lambda).len() as u64
                })
                .sum();
            if by_enumeration != by_dp || by_pairs != by_enumeration {
                failures.push(Failure {
                    case: format!("{{\"r\":{r},\"mu\":[{mu1}]}}"),
                    detail: format!(
                        "words {by_enumeration}, dp {by_dp}, pairs {by_pairs}"
                    ),
                });
            }
        }
    }
    report(Suite::Cardinality, format!("r <= {max_r}"), cases, failures, start)
}

/// The three word-to-tableau formulations agree on every empty-weight word
/// of even length, and the arc connection order does not matter.
pub fn run_equivalence(max_r: usize) -> VerificationReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let words: Vec<VacillatingWord> = empty_weight_words(max_r)
        .into_iter()
        .filter(|w| w.len() % 2 == 0)
        .collect();
    let mut cases = words.len() as u64;
    let word_failures = fan_out(words, |w| -> Option<Failure> {
        let by_extraction = match extract_rows(w) {
            Ok(q) => q,
            Err(e) => {
                return Some(Failure {
                    case: word_json(w),
                    detail: format!("extraction failed: {e}"),
                })
            }
        };
        let by_automaton = automaton(w);
        let (by_arcs, _) = arc_diagram(w);
        if by_automaton != by_extraction || by_arcs != by_extraction {
            return Some(Failure {
                case: word_json(w),
                detail: "formulations disagree".into(),
            });
        }
        None
    });
    failures.extend(word_failures.into_iter().flatten());

    // randomized admissible connection order, seeded
    let mut rng = SeededRandom(0x0debea7e);
    for trial in 0..1000u64 {
        cases += 1;
        let len = 1 + rng.below(16);
        let mut letters = Vec::with_capacity(len);
        let mut h = 0i64;
        for _ in 0..len {
            let v: i8 = if h == 0 {
                1
            } else {
                [-1, 0, 1][rng.below(3)]
            };
            h += v as i64;
            letters.push(v);
        }
        let w = VacillatingWord::from_values(&letters).unwrap();
        let mut strategy = SeededRandom(trial.wrapping_mul(0x9e37));
        if arc_diagram(&w).0 != arc_diagram_with(&w, &mut strategy).0 {
            failures.push(Failure {
                case: word_json(&w),
                detail: "randomized connection order changed the tableau".into(),
            });
        }
    }
    report(Suite::Equivalence, format!("r <= {max_r}, 1000 random"), cases, failures, start)
}

/// Concatenating empty-weight words corresponds to concatenating tableaux.
pub fn run_concatenation(max_total: usize) -> VerificationReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0u64;
    let words = empty_weight_words(max_total);
    for w1 in &words {
        for w2 in &words {
            if w1.len() + w2.len() > max_total || w1.is_empty() && w2.is_empty() {
                continue;
            }
            cases += 1;
            if !check_concatenation(w1, w2).unwrap() {
                failures.push(Failure {
                    case: format!("[{},{}]", word_json(w1), word_json(w2)),
                    detail: "concatenation mismatch".into(),
                });
            }
        }
    }
    report(
        Suite::Concatenation,
        format!("|w1| + |w2| <= {max_total}"),
        cases,
        failures,
        start,
    )
}

/// A two-row all-even tableau maps to a Dyck path exactly when it is not a
/// concatenation of two tableaux with two odd rows.
pub fn run_dyck(max_cells: u32) -> VerificationReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for n in (2..=max_cells).step_by(2) {
        for shape in Partition::all_of_size(n, 2) {
            if shape.parts().iter().any(|&p| p % 2 != 0) {
                continue;
            }
            for q in StandardYoungTableau::all_of_shape(&shape) {
                cases += 1;
                let has_odd_split = q.split_concatenations().iter().any(|(a, b)| {
                    let odd = |t: &StandardYoungTableau| {
                        t.rows().len() == 2 && t.rows().iter().all(|r| r.len() % 2 == 1)
                    };
                    odd(a) && odd(b)
                });
                if is_dyck_preimage(&q).unwrap() == has_odd_split {
                    failures.push(Failure {
                        case: serde_json::to_string(&q).unwrap(),
                        detail: "Dyck criterion disagrees with the decomposition".into(),
                    });
                }
            }
        }
    }
    report(Suite::Dyck, format!("<= {max_cells} cells"), cases, failures, start)
}

/// Dropping the last letter drops the largest entry of the image.
pub fn run_prefix(max_r: usize) -> VerificationReport {
    let start = Instant::now();
    let words = all_words_up_to(max_r);
    let cases = words.len() as u64;
    let failures: Vec<Failure> = fan_out(words, |w| -> Option<Failure> {
        let prefixes = automaton_prefixes(w);
        for i in 1..prefixes.len() {
            let mut rows = prefixes[i].rows().to_vec();
            let target = prefixes[i].size();
            let Some(row) = rows.iter_mut().find(|r| r.last() == Some(&target)) else {
                return Some(Failure {
                    case: word_json(w),
                    detail: format!("largest entry of prefix {i} is not at a row end"),
                });
            };
            row.pop();
            rows.retain(|r| !r.is_empty());
            if StandardYoungTableau::new(rows).ok() != Some(prefixes[i - 1].clone()) {
                return Some(Failure {
                    case: word_json(w),
                    detail: format!("prefix {i} does not extend prefix {}", i - 1),
                });
            }
        }
        None
    })
    .into_iter()
    .flatten()
    .collect();
    report(Suite::Prefix, format!("r <= {max_r}"), cases, failures, start)
}

/// The guaranteed suffixes: the word ends in (1, 0, -1) exactly when the
/// three largest entries close the three rows, and ends in m down steps
/// exactly when the m largest entries form the horizontal strip.
pub fn run_suffix(max_r: usize) -> VerificationReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for r in (2..=max_r).step_by(2) {
        for w in VacillatingWord::all_of_length(r, &Partition::empty()).unwrap() {
            let q = extract_rows(&w).unwrap();
            let n = q.size();
            // the (1, 0, -1) suffix
            cases += 1;
            let word_says = w.values().ends_with(&[1, 0, -1]);
            let tableau_says = q.rows().len() == 3
                && (0..3).all(|i| q.row(i).last() == Some(&(n - 2 + i as u32)));
            if word_says != tableau_says {
                failures.push(Failure {
                    case: word_json(&w),
                    detail: "triple-suffix characterization failed".into(),
                });
            }
            // the trailing -1 characterization, for every strip size
            for m in 0..=r {
                cases += 1;
                let word_says = w
                    .letters()
                    .iter()
                    .rev()
                    .take(m)
                    .all(|&l| l == Letter::Down);
                let tableau_says = largest_form_strip(&q, m as u32);
                if word_says != tableau_says {
                    failures.push(Failure {
                        case: word_json(&w),
                        detail: format!("strip characterization failed at m = {m}"),
                    });
                }
            }
        }
    }
    report(Suite::Suffix, format!("r <= {max_r}"), cases, failures, start)
}

/// Do the cells of the m largest entries form a horizontal strip with at
/// most one cell in the first row, filled increasingly left to right?
fn largest_form_strip(q: &StandardYoungTableau, m: u32) -> bool {
    let n = q.size();
    let mut cells: Vec<(usize, usize, u32)> = Vec::new();
    for (i, row) in q.rows().iter().enumerate() {
        for (j, &e) in row.iter().enumerate() {
            if e > n - m {
                cells.push((j, i, e));
            }
        }
    }
    cells.sort();
    // distinct columns, at most one cell in row 0, entries increasing by column
    cells.windows(2).all(|w| w[0].0 < w[1].0 && w[0].2 < w[1].2)
        && cells.iter().filter(|&&(_, i, _)| i == 0).count() <= 1
}

/// The explicit four-case model and the crystal-theoretic definition agree
/// as sets under the canonical encoding.
pub fn run_crystal(max_size: u32, max_mu: u32) -> VerificationReport {
    use std::collections::HashMap;
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for mu1 in 0..=max_mu {
        let mu = Partition::single(mu1);
        // one bounded generation per weight serves every λ below the cap;
        // bucket its highest-weight elements (ε_i = 0 for i >= 1) by content
        let bounded = generate_bounded(&mu, max_size).unwrap();
        let mut by_content: HashMap<Vec<u32>, BTreeSet<CrystalElement>> = HashMap::new();
        for e in bounded {
            if (1..=max_size).all(|i| e.eps(i) == 0) {
                by_content.entry(e.content()).or_default().insert(e);
            }
        }
        for n in 0..=max_size {
            for lambda in Partition::all_of_size(n, 3) {
                cases += 1;
                let conj = lambda.conjugate();
                let from_crystal = by_content
                    .get(conj.parts())
                    .cloned()
                    .unwrap_or_default();
                let from_explicit: BTreeSet<CrystalElement> =
                    OrthLRTableau::enumerate(&lambda, &mu)
                        .unwrap()
                        .iter()
                        .map(OrthLRTableau::to_crystal)
                        .collect();
                if from_crystal != from_explicit {
                    failures.push(Failure {
                        case: format!(
                            "{{\"lambda\":{},\"mu\":{}}}",
                            serde_json::to_string(&lambda).unwrap(),
                            serde_json::to_string(&mu).unwrap()
                        ),
                        detail: format!(
                            "crystal gives {} elements, explicit gives {}",
                            from_crystal.len(),
                            from_explicit.len()
                        ),
                    });
                }
            }
        }
    }
    report(
        Suite::Crystal,
        format!("|lambda| <= {max_size}, mu1 <= {max_mu}"),
        cases,
        failures,
        start,
    )
}

/// Reported sweep of the evacuation conjecture; counterexamples are listed
/// as failures but callers treat this suite as informational.
pub fn run_evacuation(max_cells: usize) -> VerificationReport {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut cases = 0u64;
    for r in 2..=max_cells {
        for w in VacillatingWord::all_of_length(r, &Partition::empty()).unwrap() {
            cases += 1;
            let q = inverse(&w).unwrap().0;
            if !check_evacuation_conjecture(&q).unwrap() {
                failures.push(Failure {
                    case: word_json(&w),
                    detail: "evacuated word is not the reversal".into(),
                });
            }
        }
    }
    report(Suite::Evacuation, format!("<= {max_cells} cells"), cases, failures, start)
}

/// Runs the selected suites at their standard bounds, scaled by `max_r`.
pub fn verify_all(max_r: usize, suites: &[Suite]) -> Vec<VerificationReport> {
    suites
        .iter()
        .map(|&s| match s {
            Suite::Roundtrip => run_roundtrip(max_r),
            Suite::Descents => run_descents(max_r),
            Suite::Cardinality => run_cardinality(max_r),
            Suite::Equivalence => run_equivalence(max_r + 2),
            Suite::Concatenation => run_concatenation(max_r),
            Suite::Dyck => run_dyck(max_r as u32),
            Suite::Prefix => run_prefix(max_r + 2),
            Suite::Suffix => run_suffix(max_r),
            Suite::Crystal => run_crystal((max_r as u32).min(8), (max_r as u32).min(8)),
            Suite::Evacuation => run_evacuation(max_r),
        })
        .collect()
}

/// The two descent multisets of the character identity: over words on the
/// left, over (λ, L, Q) triples on the right.
#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusReport {
    pub lhs: DescentMultiset,
    pub rhs: DescentMultiset,
    pub equal: bool,
}

pub fn frobenius_descent_multisets(
    r: usize,
    mu: &Partition,
) -> Result<FrobeniusReport, ValidationError> {
    if mu.len() > 1 {
        return Err(ValidationError::RejectShapeTooLong);
    }
    let lhs: DescentMultiset = VacillatingWord::all_of_length(r, mu)?
        .iter()
        .map(VacillatingWord::descents)
        .collect();
    let mut rhs = DescentMultiset::new();
    for lambda in Partition::all_of_size(r as u32, 3) {
        let count = OrthLRTableau::enumerate(&lambda, mu).expect("small shapes").len();
        if count == 0 {
            continue;
        }
        for q in StandardYoungTableau::all_of_shape(&lambda) {
            for _ in 0..count {
                rhs.insert(q.descents());
            }
        }
    }
    let equal = lhs == rhs;
    Ok(FrobeniusReport { lhs, rhs, equal })
}

/// The reference table: every (λ, μ, L, Q) up to size `r_max` with the
/// expanded tableau and the word, one line per instance.
pub fn emit_table(r_max: usize) -> String {
    let mut out = String::new();
    for r in 1..=r_max {
        let _ = writeln!(out, "r={r}");
        for lambda in Partition::all_of_size(r as u32, 3) {
            for mu1 in 0..=r as u32 {
                let mu = Partition::single(mu1);
                for l in OrthLRTableau::enumerate(&lambda, &mu).unwrap() {
                    for q in StandardYoungTableau::all_of_shape(&lambda) {
                        let expanded = crate::bijection::expand(&l, &q).expect("valid pair");
                        let word = forward(&q, &l).expect("valid pair");
                        let _ = writeln!(
                            out,
                            "lambda={lambda} mu={mu} case={} L={};{};{} Q={} Qt={} V={}",
                            l.case().number(),
                            fmt_col(&l.column(LrColumn::Left)),
                            fmt_col(&l.column(LrColumn::Middle)),
                            fmt_col(&l.column(LrColumn::Right)),
                            fmt_rows(&q),
                            fmt_rows(&expanded.tableau),
                            word,
                        );
                    }
                }
            }
        }
    }
    out
}

fn fmt_col(entries: &[u32]) -> String {
    let inner: Vec<String> = entries.iter().map(u32::to_string).collect();
    format!("[{}]", inner.join(","))
}

fn fmt_rows(q: &StandardYoungTableau) -> String {
    let rows: Vec<String> = q.rows().iter().map(|r| fmt_col(r)).collect();
    format!("[{}]", rows.join(","))
}

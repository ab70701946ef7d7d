//! Two stand-alone formulations of the word-to-tableau direction: an arc
//! diagram whose edge kinds route entries into rows, and a single left-to-
//! right pass keeping four counters. Both agree with the row extraction of
//! the main pipeline on words of empty weight and even length, and they
//! work on words of any shape.

use serde::Serialize;

use crate::bijection::tableau_word;
use crate::error::PipelineError;
use crate::tableau::StandardYoungTableau;
use crate::word::{Letter, VacillatingWord};

/// One pass of the four-statistic automaton: active zeros, open double or
/// marked edges, height, and closed edges.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct AutomatonState {
    pub active_zeros: u32,
    pub open_dm: u32,
    pub height: u32,
    pub closed_edges: u32,
}

/// Streaming word-to-tableau map: one step per letter, O(1) state beyond
/// the output.
pub fn automaton(word: &VacillatingWord) -> StandardYoungTableau {
    let mut rows: [Vec<u32>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut st = AutomatonState::default();
    for (i0, &letter) in word.letters().iter().enumerate() {
        let row = automaton_step(&mut st, letter);
        rows[row].push(i0 as u32 + 1);
    }
    let rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    StandardYoungTableau::new(rows).expect("the automaton fills rows in increasing order")
}

/// Advances the state by one letter and returns the row (0-based) the
/// letter's position belongs to.
fn automaton_step(st: &mut AutomatonState, letter: Letter) -> usize {
    match letter {
        Letter::Up => {
            if st.active_zeros % 2 == 1 {
                st.open_dm += 1;
            }
            st.height += 1;
            st.active_zeros = 0;
            0
        }
        Letter::Flat => {
            if st.open_dm + 1 < st.height {
                st.open_dm += 1;
                st.closed_edges += 1;
                1
            } else if st.open_dm + 1 == st.height {
                st.active_zeros += 1;
                if st.height % 2 != st.closed_edges % 2 {
                    st.closed_edges += 1;
                    1
                } else {
                    0
                }
            } else {
                st.active_zeros += 1;
                0
            }
        }
        Letter::Down => {
            st.height -= 1;
            if st.active_zeros % 2 == 1 && st.height == 0 {
                st.open_dm += 1;
                st.active_zeros = 0;
            }
            if st.open_dm > 0 {
                st.open_dm -= 1;
                st.closed_edges += 1;
                2
            } else if st.height > 0 {
                st.closed_edges += 1;
                1
            } else if st.closed_edges % 2 == 1 {
                st.closed_edges += 1;
                1
            } else {
                0
            }
        }
    }
}

/// Tableaux of all prefixes: `result[i]` is the image of the first i+1
/// letters. Each one arises from the next by deleting its largest entry.
pub fn automaton_prefixes(word: &VacillatingWord) -> Vec<StandardYoungTableau> {
    let mut rows: [Vec<u32>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    let mut st = AutomatonState::default();
    let mut out = Vec::with_capacity(word.len());
    for (i0, &letter) in word.letters().iter().enumerate() {
        let row = automaton_step(&mut st, letter);
        rows[row].push(i0 as u32 + 1);
        let snapshot: Vec<Vec<u32>> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
        out.push(StandardYoungTableau::new(snapshot).expect("prefix rows are standard"));
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum EdgeKind {
    Ordinary,
    Double,
    Marked,
}

/// One arc of the diagram. Steps are 1-based; `to` is None while the edge
/// is still open when the word ends.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: Option<usize>,
    pub kind: EdgeKind,
}

/// The finished diagram: the edges, plus the row each step was assigned to.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ArcDiagram {
    pub edges: Vec<Edge>,
    pub rows: Vec<u8>,
}

/// Chooses which admissible open edge a new incoming half-edge closes.
/// `candidates` holds indices into the open-edge list; first-come-first-
/// served takes the first (leftmost).
pub trait ConnectionStrategy {
    fn choose(&mut self, candidates: &[usize]) -> usize;
}

/// The deterministic leftmost policy.
pub struct Fcfs;

impl ConnectionStrategy for Fcfs {
    fn choose(&mut self, candidates: &[usize]) -> usize {
        candidates[0]
    }
}

/// A small deterministic generator for the randomized-order check.
pub struct SeededRandom(pub u64);

impl SeededRandom {
    pub fn next_u64(&mut self) -> u64 {
        // splitmix64
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }
}

impl ConnectionStrategy for SeededRandom {
    fn choose(&mut self, candidates: &[usize]) -> usize {
        candidates[self.below(candidates.len())]
    }
}

struct OpenEdge {
    edge_index: usize,
    kind: EdgeKind,
    from_down_step: bool,
}

/// The arc-diagram formulation. Builds the diagram step by step; the row of
/// each step depends only on the running statistics, so any admissible
/// connection order yields the same tableau.
pub fn arc_diagram_with<S: ConnectionStrategy>(
    word: &VacillatingWord,
    strategy: &mut S,
) -> (StandardYoungTableau, ArcDiagram) {
    let mut edges: Vec<Edge> = Vec::new();
    let mut open: Vec<OpenEdge> = Vec::new();
    let mut rows_of: Vec<u8> = Vec::new();
    let mut rows: [Vec<u32>; 3] = [Vec::new(), Vec::new(), Vec::new()];

    let mut height: u32 = 0;
    let mut closed: u32 = 0;
    // the pending run of active zeros: count and the first one's edge slot
    let mut run_count: u32 = 0;
    let mut run_first: Option<(usize, bool)> = None; // (step, had incoming)

    let open_dm = |open: &[OpenEdge]| open.iter().filter(|e| e.kind != EdgeKind::Ordinary).count();

    // commits the pending run: an odd run owns one double or marked edge,
    // placed at its first member
    fn commit_run(
        edges: &mut Vec<Edge>,
        open: &mut Vec<OpenEdge>,
        run_count: &mut u32,
        run_first: &mut Option<(usize, bool)>,
    ) {
        if *run_count % 2 == 1 {
            let (step, had_incoming) = run_first.expect("an odd run has a first member");
            let kind = if had_incoming {
                EdgeKind::Double
            } else {
                EdgeKind::Marked
            };
            if had_incoming {
                // the first active zero gains an outgoing double half-edge
                edges.push(Edge {
                    from: step,
                    to: None,
                    kind,
                });
                open.push(OpenEdge {
                    edge_index: edges.len() - 1,
                    kind,
                    from_down_step: false,
                });
            } else {
                // its plain outgoing half-edge becomes marked
                let slot = open
                    .iter()
                    .position(|o| edges[o.edge_index].from == step)
                    .expect("the first active zero's edge is still open");
                open[slot].kind = EdgeKind::Marked;
                edges[open[slot].edge_index].kind = EdgeKind::Marked;
            }
        }
        *run_count = 0;
        *run_first = None;
    }

    let close = |edges: &mut Vec<Edge>,
                     open: &mut Vec<OpenEdge>,
                     strategy: &mut S,
                     step: usize,
                     want_dm: bool,
                     zero_incoming: bool|
     -> u32 {
        let any_dm = open.iter().any(|o| o.kind != EdgeKind::Ordinary);
        let candidates: Vec<usize> = open
            .iter()
            .enumerate()
            .filter(|(_, o)| {
                if want_dm {
                    o.kind != EdgeKind::Ordinary
                } else {
                    // incoming edges of 0's may not take double or marked
                    // edges, and a down-step's outgoing edge may not connect
                    // while double or marked edges are open
                    o.kind == EdgeKind::Ordinary
                        && !(zero_incoming && o.kind != EdgeKind::Ordinary)
                        && !(o.from_down_step && any_dm)
                }
            })
            .map(|(i, _)| i)
            .collect();
        assert!(!candidates.is_empty(), "an admissible open edge exists");
        let slot = strategy.choose(&candidates);
        let removed = open.remove(slot);
        edges[removed.edge_index].to = Some(step);
        1
    };

    for (i0, &letter) in word.letters().iter().enumerate() {
        let step = i0 + 1;
        let row: usize = match letter {
            Letter::Up => {
                commit_run(&mut edges, &mut open, &mut run_count, &mut run_first);
                edges.push(Edge {
                    from: step,
                    to: None,
                    kind: EdgeKind::Ordinary,
                });
                open.push(OpenEdge {
                    edge_index: edges.len() - 1,
                    kind: EdgeKind::Ordinary,
                    from_down_step: false,
                });
                height += 1;
                0
            }
            Letter::Flat => {
                let level = height;
                let dm = open_dm(&open) as u32;
                if dm + 1 < level {
                    // a double edge: incoming from an ordinary edge plus an
                    // outgoing half
                    closed += close(&mut edges, &mut open, strategy, step, false, true);
                    edges.push(Edge {
                        from: step,
                        to: None,
                        kind: EdgeKind::Double,
                    });
                    open.push(OpenEdge {
                        edge_index: edges.len() - 1,
                        kind: EdgeKind::Double,
                        from_down_step: false,
                    });
                    1
                } else if dm + 1 == level {
                    run_count += 1;
                    let incoming = level % 2 != closed % 2;
                    if run_first.is_none() {
                        run_first = Some((step, incoming));
                    }
                    if incoming {
                        closed += close(&mut edges, &mut open, strategy, step, false, true);
                        1
                    } else {
                        edges.push(Edge {
                            from: step,
                            to: None,
                            kind: EdgeKind::Ordinary,
                        });
                        open.push(OpenEdge {
                            edge_index: edges.len() - 1,
                            kind: EdgeKind::Ordinary,
                            from_down_step: false,
                        });
                        0
                    }
                } else {
                    run_count += 1;
                    if run_first.is_none() {
                        run_first = Some((step, false));
                    }
                    edges.push(Edge {
                        from: step,
                        to: None,
                        kind: EdgeKind::Ordinary,
                    });
                    open.push(OpenEdge {
                        edge_index: edges.len() - 1,
                        kind: EdgeKind::Ordinary,
                        from_down_step: false,
                    });
                    0
                }
            }
            Letter::Down => {
                height -= 1;
                if height == 0 {
                    commit_run(&mut edges, &mut open, &mut run_count, &mut run_first);
                }
                let dm = open_dm(&open) as u32;
                if dm > 0 {
                    closed += close(&mut edges, &mut open, strategy, step, true, false);
                    2
                } else if height > 0 {
                    closed += close(&mut edges, &mut open, strategy, step, false, false);
                    1
                } else if closed % 2 == 1 {
                    closed += close(&mut edges, &mut open, strategy, step, false, false);
                    1
                } else {
                    edges.push(Edge {
                        from: step,
                        to: None,
                        kind: EdgeKind::Ordinary,
                    });
                    open.push(OpenEdge {
                        edge_index: edges.len() - 1,
                        kind: EdgeKind::Ordinary,
                        from_down_step: true,
                    });
                    0
                }
            }
        };
        // no open double or marked edges at a bottom point
        debug_assert!(height > 0 || open_dm(&open) == 0);
        rows_of.push(row as u8);
        rows[row].push(step as u32);
    }

    let tableau_rows: Vec<Vec<u32>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let tableau =
        StandardYoungTableau::new(tableau_rows).expect("rows are filled in increasing order");
    (
        tableau,
        ArcDiagram {
            edges,
            rows: rows_of,
        },
    )
}

/// The arc diagram under the first-come-first-served policy.
pub fn arc_diagram(word: &VacillatingWord) -> (StandardYoungTableau, ArcDiagram) {
    arc_diagram_with(word, &mut Fcfs)
}

/// Does concatenating the words correspond to concatenating the tableaux?
/// Both words must have empty weight.
pub fn check_concatenation(
    w1: &VacillatingWord,
    w2: &VacillatingWord,
) -> Result<bool, PipelineError> {
    let joined = w1.concat(w2)?;
    let split = automaton(w1)
        .concat(&automaton(w2))
        .map_err(PipelineError::from)?;
    Ok(automaton(&joined) == split)
}

/// Is the image of this two-row all-even tableau a Dyck path (a word with
/// no 0 letters)?
pub fn is_dyck_preimage(q: &StandardYoungTableau) -> Result<bool, PipelineError> {
    if q.rows().len() > 2 || q.rows().iter().any(|r| r.len() % 2 != 0) {
        return Err(PipelineError::RejectRowParity);
    }
    let word = tableau_word(q)?;
    Ok(word.letters().iter().all(|&l| l != Letter::Flat))
}

/// Does the word of the evacuated tableau equal the reversed word? The
/// tableau must correspond to a word of empty weight. A reported check:
/// the equality is conjectural, not proven.
pub fn check_evacuation_conjecture(q: &StandardYoungTableau) -> Result<bool, PipelineError> {
    let word = tableau_word(q)?;
    if !word.weight().is_empty() {
        return Err(PipelineError::RejectInvalidWord(
            "reversal needs a word of empty weight".into(),
        ));
    }
    let evac_word = tableau_word(&q.evacuation())?;
    Ok(evac_word == word.reversed()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::extract_rows;
    use crate::partition::Partition;

    fn syt(rows: &[&[u32]]) -> StandardYoungTableau {
        StandardYoungTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn word(values: &[i8]) -> VacillatingWord {
        VacillatingWord::from_values(values).unwrap()
    }

    #[test]
    fn automaton_on_the_running_example() {
        assert_eq!(
            automaton(&word(&[1, 1, 0, -1, 0, 1, -1, 0, 1])),
            syt(&[&[1, 2, 6, 9], &[3, 5, 8], &[4, 7]])
        );
        assert_eq!(automaton(&word(&[1, -1])), syt(&[&[1, 2]]));
    }

    #[test]
    fn automaton_on_the_marked_edge_examples() {
        assert_eq!(
            automaton(&word(&[1, 1, -1, 0, 1, 0, 1, 0, -1, 0, -1, -1])),
            syt(&[&[1, 2, 4, 5, 7, 10], &[3, 6, 8, 12], &[9, 11]])
        );
        assert_eq!(
            automaton(&word(&[1, 1, -1, 0, 1, 1, 0, 1, -1])),
            syt(&[&[1, 2, 4, 5, 6, 8], &[3, 7], &[9]])
        );
        assert_eq!(
            automaton(&word(&[1, 1, -1, 1, 1, 1, -1, 1, -1])),
            syt(&[&[1, 2, 4, 5, 6, 8], &[3, 7, 9]])
        );
    }

    #[test]
    fn arc_diagram_matches_automaton_and_draws_the_running_example() {
        let w = word(&[1, 1, 0, -1, 0, 1, -1, 0, 1]);
        let (q, diagram) = arc_diagram(&w);
        assert_eq!(q, automaton(&w));
        // the drawn diagram: 1-3-4 and 2-5-7 and 6-8 chains plus an open 9
        let closed: Vec<(usize, Option<usize>, EdgeKind)> = diagram
            .edges
            .iter()
            .map(|e| (e.from, e.to, e.kind))
            .collect();
        assert!(closed.contains(&(1, Some(3), EdgeKind::Ordinary)));
        assert!(closed.contains(&(3, Some(4), EdgeKind::Double)));
        assert!(closed.contains(&(2, Some(5), EdgeKind::Ordinary)));
        assert!(closed.contains(&(5, Some(7), EdgeKind::Double)));
        assert!(closed.contains(&(6, Some(8), EdgeKind::Ordinary)));
        assert!(closed.contains(&(8, None, EdgeKind::Double)));
        assert!(closed.contains(&(9, None, EdgeKind::Ordinary)));
    }

    #[test]
    fn arc_diagram_marked_edge_example() {
        // the 12-step example: the marked edge runs from step 4 to step 9
        let w = word(&[1, 1, -1, 0, 1, 0, 1, 0, -1, 0, -1, -1]);
        let (_, diagram) = arc_diagram(&w);
        let edges: Vec<(usize, Option<usize>, EdgeKind)> = diagram
            .edges
            .iter()
            .map(|e| (e.from, e.to, e.kind))
            .collect();
        assert!(edges.contains(&(4, Some(9), EdgeKind::Marked)));
        assert!(edges.contains(&(2, Some(6), EdgeKind::Ordinary)));
        assert!(edges.contains(&(6, Some(11), EdgeKind::Double)));
        assert!(edges.contains(&(5, Some(8), EdgeKind::Ordinary)));
        assert!(edges.contains(&(7, Some(12), EdgeKind::Ordinary)));
        assert!(edges.contains(&(10, None, EdgeKind::Ordinary)));
        // step 8 takes an incoming edge only
        assert!(!edges.iter().any(|&(from, _, _)| from == 8));
    }

    #[test]
    fn three_formulations_agree_on_empty_weight_words() {
        for r in (0..=10usize).step_by(2) {
            for w in VacillatingWord::all_of_length(r, &Partition::empty()).unwrap() {
                let q = extract_rows(&w).unwrap();
                assert_eq!(automaton(&w), q, "automaton vs extraction {w:?}");
                assert_eq!(arc_diagram(&w).0, q, "arcs vs extraction {w:?}");
            }
        }
    }

    #[test]
    fn randomized_connection_order_matches_fcfs() {
        let mut rng = SeededRandom(0x5eed);
        let mut checked = 0;
        while checked < 200 {
            let len = 1 + rng.below(16);
            let mut letters = Vec::with_capacity(len);
            let mut h = 0i64;
            for _ in 0..len {
                let choices: Vec<i8> = if h == 0 { vec![1] } else { vec![-1, 0, 1] };
                let v = choices[rng.below(choices.len())];
                h += v as i64;
                letters.push(v);
            }
            let w = word(&letters);
            let (q_fcfs, _) = arc_diagram(&w);
            let mut strategy = SeededRandom(checked);
            let (q_rand, _) = arc_diagram_with(&w, &mut strategy);
            assert_eq!(q_fcfs, q_rand, "word {w:?}");
            checked += 1;
        }
    }

    #[test]
    fn prefix_property_small() {
        for r in 0..=9usize {
            for mu1 in 0..=r as u32 {
                for w in VacillatingWord::all_of_length(r, &Partition::single(mu1)).unwrap() {
                    let prefixes = automaton_prefixes(&w);
                    assert_eq!(prefixes.last().cloned().unwrap_or_default(), automaton(&w));
                    for i in 1..prefixes.len() {
                        let mut bigger = prefixes[i].rows().to_vec();
                        // remove the largest entry, which sits at some row end
                        let target = prefixes[i].size();
                        for row in &mut bigger {
                            if row.last() == Some(&target) {
                                row.pop();
                                break;
                            }
                        }
                        bigger.retain(|r| !r.is_empty());
                        assert_eq!(
                            StandardYoungTableau::new(bigger).unwrap(),
                            prefixes[i - 1],
                            "prefix {i} of {w:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn concatenation_example() {
        let w1 = word(&[1, 0, -1]);
        let w2 = word(&[1, 1, -1, -1]);
        assert!(check_concatenation(&w1, &w2).unwrap());
        assert_eq!(
            automaton(&w1.concat(&w2).unwrap()),
            syt(&[&[1, 4, 5], &[2, 6, 7], &[3]])
        );
        assert!(check_concatenation(&w1, &VacillatingWord::empty()).unwrap());
    }

    #[test]
    fn dyck_preimages_at_r_4() {
        assert!(is_dyck_preimage(&syt(&[&[1, 2], &[3, 4]])).unwrap());
        assert!(!is_dyck_preimage(&syt(&[&[1, 3], &[2, 4]])).unwrap());
    }

    #[test]
    fn dyck_criterion_matches_decomposition() {
        // a two-row all-even tableau maps to a Dyck path iff it is not a
        // concatenation of two tableaux with two odd rows
        for n in (2..=10u32).step_by(2) {
            for shape in Partition::all_of_size(n, 2) {
                if shape.parts().iter().any(|&p| p % 2 != 0) {
                    continue;
                }
                for q in StandardYoungTableau::all_of_shape(&shape) {
                    let has_odd_split = q.split_concatenations().iter().any(|(a, b)| {
                        let odd = |t: &StandardYoungTableau| {
                            t.rows().len() == 2 && t.rows().iter().all(|r| r.len() % 2 == 1)
                        };
                        odd(a) && odd(b)
                    });
                    assert_eq!(
                        is_dyck_preimage(&q).unwrap(),
                        !has_odd_split,
                        "tableau {q:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn evacuation_conjecture_on_the_running_example() {
        let q = syt(&[
            &[1, 2, 6, 9, 11, 12],
            &[3, 5, 8, 13],
            &[4, 7, 10, 14],
        ]);
        assert!(check_evacuation_conjecture(&q).unwrap());
    }
}

//! Expansion and contraction between (orthogonal Littlewood-Richardson
//! tableau, standard Young tableau) pairs and larger standard Young tableaux
//! whose row lengths share one parity: the first half of the bijection.

use crate::error::PipelineError;
use crate::lr::{LrColumn, OrthLRTableau};
use crate::partition::Partition;
use crate::tableau::StandardYoungTableau;

/// Output of the expansion: the enlarged tableau together with μ and a flag
/// recording whether the even-making triple has been attached.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExpandedTableau {
    pub tableau: StandardYoungTableau,
    pub mu: Partition,
    pub added_parity_triple: bool,
}

/// Positions of the cells the expansion adds to the shape of λ, one pair
/// (row, column) per added cell, both 0-based, plus whether the parity
/// adjustment moved a cell. Depends only on L, not on the filling of Q.
fn expansion_cells(l: &OrthLRTableau) -> Result<(Vec<(usize, usize)>, bool), PipelineError> {
    let (lambda, mu) = l.validate()?;
    let mu1 = mu.part(0) as usize;

    // one x in row i+1 for every cell of line i outside column i from the
    // right, then x's in row 3 until there are mu1 of them
    let designated = [LrColumn::Right, LrColumn::Middle, LrColumn::Left];
    let mut xs_per_row = [0usize; 3];
    for (i, line) in l.lines().iter().enumerate() {
        let strays = line.iter().filter(|pos| pos.col != designated[i]).count();
        if strays > 0 {
            debug_assert!(i + 1 < 3, "third-line cells stay in the left column");
            xs_per_row[i + 1] += strays;
        }
    }
    let so_far: usize = xs_per_row.iter().sum();
    debug_assert!(so_far <= mu1);
    xs_per_row[2] += mu1 - so_far;

    let mut lens = [
        lambda.part(0) as usize + xs_per_row[0],
        lambda.part(1) as usize + xs_per_row[1],
        lambda.part(2) as usize + xs_per_row[2],
    ];

    // adjust parity: move the last cell of one row to its parity partner
    let parities: Vec<usize> = lens.iter().map(|&l| l % 2).collect();
    let mut adjusted = false;
    if !(parities[0] == parities[1] && parities[1] == parities[2]) {
        let total: usize = lens.iter().sum();
        let wanted = if total % 2 == 1 { 0 } else { 1 }; // parity of the two matching rows
        let matching: Vec<usize> = (0..3).filter(|&i| parities[i] == wanted).collect();
        debug_assert_eq!(matching.len(), 2);
        let from = matching[1];
        let to = matching[0];
        // the moved cell must be one of the added ones
        if xs_per_row[from] == 0 {
            return Err(PipelineError::RejectStripShape);
        }
        xs_per_row[from] -= 1;
        lens[from] -= 1;
        xs_per_row[to] += 1;
        lens[to] += 1;
        adjusted = true;
    }

    // the x cells are the last xs_per_row[i] cells of each row
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for i in 0..3 {
        for j in (lens[i] - xs_per_row[i])..lens[i] {
            cells.push((i, j));
        }
    }
    // a horizontal strip: sorted by column, one cell per column
    cells.sort_by_key(|&(_, j)| j);
    debug_assert!(cells.windows(2).all(|w| w[0].1 < w[1].1));
    Ok((cells, adjusted))
}

/// Expands Q by μ1 cells placed as L dictates. The result has all row
/// lengths of one parity; deleting its μ1 largest entries recovers Q.
pub fn expand(l: &OrthLRTableau, q: &StandardYoungTableau) -> Result<ExpandedTableau, PipelineError> {
    expand_instrumented(l, q).map(|(e, _)| e)
}

/// Like [`expand`], also reporting whether the parity adjustment moved a
/// cell; the inverse's parity fix mirrors this on the way back.
pub(crate) fn expand_instrumented(
    l: &OrthLRTableau,
    q: &StandardYoungTableau,
) -> Result<(ExpandedTableau, bool), PipelineError> {
    let (lambda, mu) = l.validate()?;
    if q.shape() != lambda {
        return Err(PipelineError::RejectShapeMismatch);
    }
    let (cells, adjusted) = expansion_cells(l)?;
    let mut rows: Vec<Vec<u32>> = (0..3).map(|i| q.row(i).to_vec()).collect();
    let mut next = lambda.size();
    for &(i, j) in &cells {
        next += 1;
        debug_assert_eq!(rows[i].len(), j);
        rows[i].push(next);
    }
    let tableau = StandardYoungTableau::new(rows)
        .map_err(|_| PipelineError::RejectStripShape)?;
    debug_assert!({
        let lens: Vec<usize> = tableau.rows().iter().map(Vec::len).collect();
        lens.iter().all(|l| l % 2 == 0) || (lens.len() == 3 && lens.iter().all(|l| l % 2 == 1))
    });
    Ok((
        ExpandedTableau {
            tableau,
            mu,
            added_parity_triple: false,
        },
        adjusted,
    ))
}

/// When all rows are odd, attach e+1, e+2, e+3 to rows 1, 2, 3 and set the
/// flag; otherwise the identity.
pub fn pad_parity(e: &ExpandedTableau) -> ExpandedTableau {
    let lens: Vec<usize> = e.tableau.rows().iter().map(Vec::len).collect();
    if lens.iter().all(|l| l % 2 == 0) {
        return e.clone();
    }
    debug_assert_eq!(lens.len(), 3, "all-odd tableaux here have three rows");
    let n = e.tableau.size();
    let mut rows: Vec<Vec<u32>> = e.tableau.rows().to_vec();
    for (i, row) in rows.iter_mut().enumerate() {
        row.push(n + 1 + i as u32);
    }
    ExpandedTableau {
        tableau: StandardYoungTableau::new(rows).expect("padding keeps the tableau standard"),
        mu: e.mu.clone(),
        added_parity_triple: true,
    }
}

/// Deletes the three largest entries; they must close rows 1, 2, 3 in
/// increasing order. The inverse of [`pad_parity`] when the flag is set.
pub fn strip_triple(
    q: &StandardYoungTableau,
    added: bool,
) -> Result<StandardYoungTableau, PipelineError> {
    if !added {
        return Ok(q.clone());
    }
    let n = q.size();
    if q.rows().len() != 3 {
        return Err(PipelineError::RejectTripleShape);
    }
    let mut rows: Vec<Vec<u32>> = q.rows().to_vec();
    for (i, row) in rows.iter_mut().enumerate() {
        if row.last() != Some(&(n - 2 + i as u32)) {
            return Err(PipelineError::RejectTripleShape);
        }
        row.pop();
    }
    StandardYoungTableau::new(rows).map_err(|_| PipelineError::RejectTripleShape)
}

/// Contracts an expanded tableau back to (L, Q): the inverse of [`expand`].
pub fn contract(
    q_tilde: &StandardYoungTableau,
    mu: &Partition,
) -> Result<(OrthLRTableau, StandardYoungTableau), PipelineError> {
    contract_instrumented(q_tilde, mu).map(|(l, q, _)| (l, q))
}

pub(crate) fn contract_instrumented(
    q_tilde: &StandardYoungTableau,
    mu: &Partition,
) -> Result<(OrthLRTableau, StandardYoungTableau, bool), PipelineError> {
    if mu.len() > 1 {
        return Err(PipelineError::RejectStripShape);
    }
    let mu1 = mu.part(0);
    let n = q_tilde.size();
    if q_tilde.rows().len() > 3 || mu1 > n {
        return Err(PipelineError::RejectStripShape);
    }
    let lens: Vec<usize> = q_tilde.rows().iter().map(Vec::len).collect();
    let all_even = lens.iter().all(|l| l % 2 == 0);
    let all_odd = !lens.is_empty() && lens.iter().all(|l| l % 2 == 1);
    if !(all_even || all_odd) {
        return Err(PipelineError::RejectStripShape);
    }

    // Q is Q~ without the mu1 largest entries; those must form a horizontal
    // strip with at most one cell in the first row, increasing left to right
    let threshold = n - mu1;
    let mut q_rows: Vec<Vec<u32>> = Vec::new();
    let mut deleted: Vec<(u32, usize, usize)> = Vec::new(); // (entry, row, col)
    for (i, row) in q_tilde.rows().iter().enumerate() {
        let keep = row.iter().take_while(|&&e| e <= threshold).count();
        if row[keep..].iter().any(|&e| e <= threshold) {
            return Err(PipelineError::RejectStripShape);
        }
        for (j, &e) in row.iter().enumerate().skip(keep) {
            deleted.push((e, i, j));
        }
        q_rows.push(row[..keep].to_vec());
    }
    deleted.sort();
    let strip_ok = deleted.windows(2).all(|w| w[0].2 < w[1].2)
        && deleted.iter().filter(|&&(_, i, _)| i == 0).count() <= 1
        && deleted
            .windows(2)
            .all(|w| w[0].0 + 1 == w[1].0 || w.is_empty());
    if !strip_ok {
        return Err(PipelineError::RejectStripShape);
    }
    let q = StandardYoungTableau::new(q_rows).map_err(|_| PipelineError::RejectStripShape)?;

    // the row-strict tableau of the shape of Q~, rotated: three top-aligned
    // columns, rightmost from row 1, with x's where entries were deleted
    #[derive(Clone, Copy, PartialEq, Debug)]
    enum Cell {
        Num(u32),
        X,
    }
    // columns[0] is the leftmost (from row 3), columns[2] the rightmost
    let mut columns: [Vec<Cell>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for (i, row) in q_tilde.rows().iter().enumerate() {
        let col = &mut columns[2 - i];
        for j in 0..row.len() {
            let deleted_here = deleted.iter().any(|&(_, di, dj)| (di, dj) == (i, j));
            col.push(if deleted_here {
                Cell::X
            } else {
                Cell::Num(j as u32 + 1)
            });
        }
    }

    // mark cells for the tail, left to right
    let mut marked: [Vec<bool>; 3] = [
        vec![false; columns[0].len()],
        vec![false; columns[1].len()],
        vec![false; columns[2].len()],
    ];
    for k in 0..3usize {
        let x_count = columns[k].iter().filter(|&&c| c == Cell::X).count();
        if x_count % 2 == 1 {
            // mark the bottommost unmarked numbered cell here, or in the
            // column to the right
            let here = (0..columns[k].len())
                .rev()
                .find(|&d| matches!(columns[k][d], Cell::Num(_)) && !marked[k][d]);
            match here {
                Some(d) => marked[k][d] = true,
                None => {
                    let d = (0..columns[k + 1].len())
                        .rev()
                        .find(|&d| matches!(columns[k + 1][d], Cell::Num(_)) && !marked[k + 1][d])
                        .ok_or(PipelineError::RejectNoParityFix)?;
                    marked[k + 1][d] = true;
                }
            }
            // delete the bottommost x
            let d = (0..columns[k].len())
                .rev()
                .find(|&d| columns[k][d] == Cell::X)
                .expect("an x exists");
            columns[k].remove(d);
            marked[k].remove(d);
        }
        // remaining x's each mark one numbered cell in the column to the
        // right, bottom up
        let remaining = columns[k].iter().filter(|&&c| c == Cell::X).count();
        if remaining > 0 {
            debug_assert!(k + 1 < 3, "the rightmost column holds at most one x");
            let mut todo = remaining;
            for d in (0..columns[k + 1].len()).rev() {
                if todo == 0 {
                    break;
                }
                if matches!(columns[k + 1][d], Cell::Num(_)) && !marked[k + 1][d] {
                    marked[k + 1][d] = true;
                    todo -= 1;
                }
            }
            if todo > 0 {
                return Err(PipelineError::RejectNoParityFix);
            }
            let mut d = 0;
            while d < columns[k].len() {
                if columns[k][d] == Cell::X {
                    columns[k].remove(d);
                    marked[k].remove(d);
                } else {
                    d += 1;
                }
            }
        }
    }

    // shift all marked cells to the leftmost column
    let mut cols: [Vec<u32>; 3] = [Vec::new(), Vec::new(), Vec::new()];
    for k in 0..3usize {
        for (d, cell) in columns[k].iter().enumerate() {
            let Cell::Num(v) = *cell else {
                unreachable!("all x cells were deleted")
            };
            if marked[k][d] && k > 0 {
                cols[0].push(v);
            } else {
                cols[k].push(v);
            }
        }
    }
    cols[0].sort_unstable();

    let assemble = |left: &[u32], middle: &[u32]| -> Result<OrthLRTableau, PipelineError> {
        OrthLRTableau::from_columns(left, middle, &cols_right(&cols), mu1)
            .map_err(PipelineError::from)
    };
    fn cols_right(cols: &[Vec<u32>; 3]) -> Vec<u32> {
        cols[2].clone()
    }

    let fixed = cols[1].len() % 2 == 1 && mu1 != 0;
    let l = if fixed {
        // fix parity: the smallest entry of the two-column part that can
        // change columns and leave a Littlewood-Richardson tableau moves
        let mut candidates: Vec<(u32, bool)> = cols[0]
            .iter()
            .map(|&v| (v, true))
            .chain(cols[1].iter().map(|&v| (v, false)))
            .collect();
        candidates.sort_unstable();
        let mut found = None;
        for (v, in_left) in candidates {
            let (mut left, mut middle) = (cols[0].clone(), cols[1].clone());
            let (from, to) = if in_left {
                (&mut left, &mut middle)
            } else {
                (&mut middle, &mut left)
            };
            if to.contains(&v) {
                continue;
            }
            from.retain(|&x| x != v);
            to.push(v);
            to.sort_unstable();
            if let Ok(t) = assemble(&left, &middle) {
                found = Some(t);
                break;
            }
        }
        found.ok_or(PipelineError::RejectNoParityFix)?
    } else {
        assemble(&cols[0], &cols[1])?
    };

    if l.lambda() != q.shape() || l.mu() != *mu {
        return Err(PipelineError::RejectStripShape);
    }
    Ok((l, q, fixed))
}

//! The explicit model of orthogonal Littlewood-Richardson tableaux: three
//! columns (left, middle, right) holding three "lines" of entries, one line
//! per row of λ, with the filling, parity and gap rules of the four-case
//! classification. This model is independent of the crystal machinery; the
//! two are cross-validated through [`OrthLRTableau::to_crystal`].
//!
//! Geometry, in global rows counted from the top: the middle column occupies
//! rows 1..=b; the left column hangs `a` rows lower and occupies rows
//! a+1..=b+mu1, so exactly its bottom mu1 cells (the tail) stick out below
//! the middle column. The right column is bottom-aligned with the middle
//! column, except in Case 3 where it ends one row higher.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::{CrystalElement, OneColumn, TwoColumnSkew};
use crate::error::LrError;
use crate::partition::Partition;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum LrCase {
    Case1 = 1,
    Case2 = 2,
    Case3 = 3,
    Case4 = 4,
}

impl LrCase {
    pub const ALL: [LrCase; 4] = [LrCase::Case1, LrCase::Case2, LrCase::Case3, LrCase::Case4];

    pub fn number(self) -> u8 {
        self as u8
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum LrColumn {
    Left,
    Middle,
    Right,
}

/// Position of one entry: which column and how deep in it (1 = top cell).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct CellPos {
    pub col: LrColumn,
    pub depth: u32,
}

/// An orthogonal Littlewood-Richardson tableau in the explicit model.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OrthLRTableau {
    case: LrCase,
    a: u32,
    b: u32,
    c: u32,
    mu1: u32,
    /// lines[i][e-1] holds the position of entry e of line i+1.
    lines: [Vec<CellPos>; 3],
}

/// Greatest downward shift of `right` against `left` (left-relative offset
/// `offset`, counting rows of `right` above the top of `left`) that keeps
/// the two columns a skew semistandard tableau.
fn residuum_of(left: &[u32], right: &[u32], offset: u32) -> u32 {
    if right.is_empty() {
        return 0;
    }
    let fits = |o: u32| -> bool {
        if right.len() > left.len() + o as usize {
            return false;
        }
        left.iter().enumerate().all(|(r0, &l)| {
            let j = r0 + o as usize;
            j >= right.len() || l <= right[j]
        })
    };
    let mut d = 0;
    while d < offset && fits(offset - d - 1) {
        d += 1;
    }
    d
}

impl OrthLRTableau {
    pub fn case(&self) -> LrCase {
        self.case
    }

    /// Overhang of the middle column above the left column's top.
    pub fn a(&self) -> u32 {
        self.a
    }

    /// Height of the middle column.
    pub fn b(&self) -> u32 {
        self.b
    }

    /// Height of the right column.
    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn mu1(&self) -> u32 {
        self.mu1
    }

    pub fn mu(&self) -> Partition {
        Partition::single(self.mu1)
    }

    pub fn lambda(&self) -> Partition {
        Partition::new(
            self.lines
                .iter()
                .map(|l| l.len() as u32)
                .collect::<Vec<_>>(),
        )
        .expect("line lengths of a valid tableau decrease")
    }

    pub fn lines(&self) -> &[Vec<CellPos>; 3] {
        &self.lines
    }

    pub fn size(&self) -> u32 {
        self.lines.iter().map(|l| l.len() as u32).sum()
    }

    /// Entries of one column, top to bottom.
    pub fn column(&self, col: LrColumn) -> Vec<u32> {
        let mut cells: Vec<(u32, u32)> = Vec::new();
        for line in &self.lines {
            for (e0, pos) in line.iter().enumerate() {
                if pos.col == col {
                    cells.push((pos.depth, e0 as u32 + 1));
                }
            }
        }
        cells.sort();
        cells.into_iter().map(|(_, e)| e).collect()
    }

    /// Entries of the tail: the left-column cells below the middle column.
    pub fn tail_entries(&self) -> Vec<u32> {
        let left = self.column(LrColumn::Left);
        let skip = (self.b - self.a) as usize;
        left[skip.min(left.len())..].to_vec()
    }

    /// Global row of a cell, with the middle column occupying rows 1..=b.
    fn global_row(&self, pos: CellPos) -> i64 {
        let top: i64 = match pos.col {
            LrColumn::Left => self.a as i64,
            LrColumn::Middle => 0,
            // bottom-aligned with the middle column, one row higher in Case 3
            LrColumn::Right => {
                let bottom = if self.case == LrCase::Case3 {
                    self.b as i64 - 1
                } else {
                    self.b as i64
                };
                bottom - self.c as i64
            }
        };
        top + pos.depth as i64
    }

    /// Builds and fully validates a tableau from its three columns and the
    /// tail length. The case is read off the structure.
    pub fn from_columns(
        left: &[u32],
        middle: &[u32],
        right: &[u32],
        mu1: u32,
    ) -> Result<Self, LrError> {
        for col in [left, middle, right] {
            if col.contains(&0) || col.windows(2).any(|w| w[0] >= w[1]) {
                return Err(LrError::RejectSemistandard);
            }
        }
        let b = middle.len() as u32;
        let c = right.len() as u32;
        if (left.len() as u32) < mu1 {
            return Err(LrError::RejectNotLR("left column shorter than the tail".into()));
        }
        let overlap = left.len() as u32 - mu1;
        if b < overlap {
            return Err(LrError::RejectNotLR(
                "middle column shorter than its overlap with the left one".into(),
            ));
        }
        let a = b - overlap;

        let case = if c % 2 == 0 {
            LrCase::Case1
        } else if mu1 == 0 {
            LrCase::Case4
        } else if middle.last() == Some(&(c + 1)) {
            LrCase::Case3
        } else {
            LrCase::Case2
        };

        // derive λ from the content: entry e occurs once per line of length >= e
        let mut occ: Vec<u32> = Vec::new();
        for col in [left, middle, right] {
            for &e in col {
                if occ.len() < e as usize {
                    occ.resize(e as usize, 0);
                }
                occ[e as usize - 1] += 1;
            }
        }
        if occ.windows(2).any(|w| w[0] < w[1]) || occ.first().copied().unwrap_or(0) > 3 {
            return Err(LrError::RejectNotLR("content is not a partition column count".into()));
        }
        let lambda_parts: Vec<u32> = (1..=3)
            .map(|i| occ.iter().filter(|&&o| o >= i).count() as u32)
            .collect();
        let lambda = Partition::new(lambda_parts).map_err(|_| LrError::RejectSemistandard)?;

        let t = Self::assemble(case, a, b, c, mu1, &lambda)?;
        // the assembled columns must reproduce the input exactly
        if t.column(LrColumn::Left) != left
            || t.column(LrColumn::Middle) != middle
            || t.column(LrColumn::Right) != right
        {
            return Err(LrError::RejectNotLR("columns do not follow the line pattern".into()));
        }
        t.validate()?;
        Ok(t)
    }

    /// Lays out the lines for the given case and parameters. Purely
    /// structural; `validate` does the semantic checking.
    fn assemble(
        case: LrCase,
        a: u32,
        b: u32,
        c: u32,
        mu1: u32,
        lambda: &Partition,
    ) -> Result<Self, LrError> {
        let (l1, l2, l3) = (lambda.part(0), lambda.part(1), lambda.part(2));
        let mut lines: [Vec<CellPos>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        let fail = |msg: &str| Err(LrError::RejectNotLR(msg.into()));

        match case {
            LrCase::Case1 | LrCase::Case2 => {
                let ell1 = l2.checked_sub(b);
                let ell2 = l1.checked_sub(c);
                let (Some(ell1), Some(ell2)) = (ell1, ell2) else {
                    return fail("line shorter than its column");
                };
                let lam3 = (b - a.min(b)) + mu1.saturating_sub(ell1 + ell2);
                if a > b || l3 != lam3 || mu1 < ell1 + ell2 || mu1 - ell1 - ell2 > 1 {
                    return fail("left column heights do not balance");
                }
                for e in 1..=c {
                    lines[0].push(CellPos { col: LrColumn::Right, depth: e });
                }
                for e in 1..=ell2 {
                    lines[0].push(CellPos { col: LrColumn::Left, depth: l3 + ell1 + e });
                }
                for e in 1..=b {
                    lines[1].push(CellPos { col: LrColumn::Middle, depth: e });
                }
                for e in 1..=ell1 {
                    lines[1].push(CellPos { col: LrColumn::Left, depth: l3 + e });
                }
                for e in 1..=l3 {
                    lines[2].push(CellPos { col: LrColumn::Left, depth: e });
                }
            }
            LrCase::Case3 => {
                if b == 0 || l2 + 1 != b || l1 != c + mu1 || a > b || l3 != b - a + 1 || mu1 == 0 {
                    return fail("case 3 heights do not balance");
                }
                for e in 1..=c {
                    lines[0].push(CellPos { col: LrColumn::Right, depth: e });
                }
                lines[0].push(CellPos { col: LrColumn::Middle, depth: b });
                for e in 2..=mu1 {
                    lines[0].push(CellPos { col: LrColumn::Left, depth: b - a + e });
                }
                for e in 1..=l2 {
                    lines[1].push(CellPos { col: LrColumn::Middle, depth: e });
                }
                for e in 1..=l3 {
                    lines[2].push(CellPos { col: LrColumn::Left, depth: e });
                }
            }
            LrCase::Case4 => {
                if mu1 != 0 || l1 != c || l2 != b || a > b || l3 != b - a {
                    return fail("case 4 heights do not balance");
                }
                for e in 1..=c {
                    lines[0].push(CellPos { col: LrColumn::Right, depth: e });
                }
                for e in 1..=b {
                    lines[1].push(CellPos { col: LrColumn::Middle, depth: e });
                }
                for e in 1..=l3 {
                    lines[2].push(CellPos { col: LrColumn::Left, depth: e });
                }
            }
        }
        Ok(OrthLRTableau { case, a, b, c, mu1, lines })
    }

    /// Checks every invariant: the filling pattern, skew semistandardness,
    /// the case's parity and inequality constraints, the residuum bound and
    /// the gap rules. Returns (λ, μ).
    pub fn validate(&self) -> Result<(Partition, Partition), LrError> {
        self.validate_as(self.case)?;
        // the case tag must also be the unique one that fits
        let mut matches = LrCase::ALL
            .into_iter()
            .filter(|&k| self.validate_as(k).is_ok());
        let first = matches.next();
        if matches.next().is_some() {
            return Err(LrError::RejectAmbiguous);
        }
        debug_assert_eq!(first, Some(self.case));
        Ok((self.lambda(), self.mu()))
    }

    fn validate_as(&self, case: LrCase) -> Result<(), LrError> {
        let (a, b, c, mu1) = (self.a, self.b, self.c, self.mu1);
        let reject = |msg: &str| Err(LrError::RejectCaseConstraint(msg.to_string()));

        // line lengths must decrease and rebuild this exact tableau
        let lens: Vec<u32> = self.lines.iter().map(|l| l.len() as u32).collect();
        if lens.windows(2).any(|w| w[0] < w[1]) {
            return Err(LrError::RejectSemistandard);
        }
        let lambda = Partition::new(lens).map_err(|_| LrError::RejectSemistandard)?;
        let rebuilt = Self::assemble(case, a, b, c, mu1, &lambda)?;
        if rebuilt.lines != self.lines {
            return Err(LrError::RejectNotLR("lines do not follow the case pattern".into()));
        }

        // skew semistandardness of the assembled grid
        let grid = |col: LrColumn| -> Vec<(i64, u32)> {
            let mut cells = Vec::new();
            for line in &self.lines {
                for (e0, pos) in line.iter().enumerate() {
                    if pos.col == col {
                        cells.push((
                            OrthLRTableau { case, ..self.clone() }.global_row(*pos),
                            e0 as u32 + 1,
                        ));
                    }
                }
            }
            cells.sort();
            cells
        };
        let left = grid(LrColumn::Left);
        let middle = grid(LrColumn::Middle);
        let right = grid(LrColumn::Right);
        for col in [&left, &middle, &right] {
            if col.windows(2).any(|w| w[0].0 + 1 != w[1].0 || w[0].1 >= w[1].1) {
                return Err(LrError::RejectSemistandard);
            }
        }
        let row_value = |col: &[(i64, u32)], row: i64| -> Option<u32> {
            col.iter().find(|&&(r, _)| r == row).map(|&(_, v)| v)
        };
        for &(row, v) in &left {
            if let Some(m) = row_value(&middle, row) {
                if v > m {
                    return Err(LrError::RejectSemistandard);
                }
            }
        }
        for &(row, v) in &middle {
            if let Some(r) = row_value(&right, row) {
                if v > r {
                    return Err(LrError::RejectSemistandard);
                }
            }
        }

        // case constraints
        let even = |x: u32| x % 2 == 0;
        let left_col = self.column(LrColumn::Left);
        let middle_col = self.column(LrColumn::Middle);
        let res = residuum_of(&left_col, &middle_col, a);
        let tail = self.tail_entries();
        if tail.len() as u32 != mu1 {
            return reject("tail length differs from mu");
        }
        match case {
            LrCase::Case1 => {
                if !(even(a) && even(b) && even(c)) {
                    return reject("case 1 needs a, b, c even");
                }
                if b > c {
                    return reject("case 1 needs b <= c");
                }
                if res > 1 {
                    return reject("case 1 needs residuum at most 1");
                }
            }
            LrCase::Case2 => {
                if !(even(a) && even(b)) || even(c) {
                    return reject("case 2 needs a, b even and c odd");
                }
                if b >= c {
                    return reject("case 2 needs b < c");
                }
                if mu1 == 0 {
                    return reject("case 2 needs a nonempty mu");
                }
                if self.lambda().part(0) >= c + mu1 {
                    return reject("case 2 needs the first line shorter than c + mu");
                }
                if res > 1 {
                    return reject("case 2 needs residuum at most 1");
                }
                // smallest tail entry is at most c
                if tail.first().is_some_and(|&t| t > c) {
                    return reject("case 2 needs a tail entry at most c");
                }
            }
            LrCase::Case3 => {
                if !(even(a) && even(b)) || even(c) {
                    return reject("case 3 needs a, b even and c odd");
                }
                if a == 0 {
                    return reject("case 3 needs a > 0");
                }
                if mu1 == 0 {
                    return reject("case 3 needs a nonempty mu");
                }
                if self.lambda().part(1) + 1 != b || self.lambda().part(1) > c {
                    return reject("case 3 needs the second line of length b - 1, at most c");
                }
                if res != 1 {
                    return reject("case 3 needs residuum exactly 1");
                }
                // the tail is {b-a+1, c+2, ..., c+mu1}
                let mut expected: Vec<u32> = vec![b - a + 1];
                expected.extend(c + 2..=c + mu1);
                if tail != expected {
                    return reject("case 3 tail entries are wrong");
                }
            }
            LrCase::Case4 => {
                if !even(a) || even(b) || even(c) {
                    return reject("case 4 needs a even and b, c odd");
                }
                if mu1 != 0 {
                    return reject("case 4 needs mu empty");
                }
                if res != 0 {
                    return reject("case 4 needs residuum 0");
                }
            }
        }
        self.check_gap_rules(case)?;
        Ok(())
    }

    /// The structural gap facts: an entry j > 1 whose predecessor j-1 sits in
    /// a different column is a gap.
    fn check_gap_rules(&self, case: LrCase) -> Result<(), LrError> {
        let cols = [
            (LrColumn::Left, self.column(LrColumn::Left)),
            (LrColumn::Middle, self.column(LrColumn::Middle)),
            (LrColumn::Right, self.column(LrColumn::Right)),
        ];
        let tail = self.tail_entries();
        let overlap = (self.b - self.a) as usize;
        for (which, entries) in &cols {
            for (idx, &e) in entries.iter().enumerate() {
                if e == 1 || entries.contains(&(e - 1)) {
                    continue;
                }
                // entry e is a gap
                match which {
                    LrColumn::Right => {
                        return Err(LrError::RejectGapRule("gap in the rightmost column".into()))
                    }
                    LrColumn::Middle => {
                        if case != LrCase::Case3 || e != self.c + 1 || idx + 1 != entries.len() {
                            return Err(LrError::RejectGapRule(
                                "middle column gap outside case 3".into(),
                            ));
                        }
                    }
                    LrColumn::Left => {
                        if idx < overlap {
                            return Err(LrError::RejectGapRule("gap above the tail".into()));
                        }
                        // j-1 must close a column to the right
                        let ok = self.column(LrColumn::Middle).last() == Some(&(e - 1))
                            || self.column(LrColumn::Right).last() == Some(&(e - 1));
                        if !ok {
                            return Err(LrError::RejectGapRule(
                                "gap predecessor is not a column maximum".into(),
                            ));
                        }
                    }
                }
            }
        }
        let _ = tail;
        Ok(())
    }

    /// The unique matching case.
    pub fn classify(&self) -> Result<LrCase, LrError> {
        let matches: Vec<LrCase> = LrCase::ALL
            .into_iter()
            .filter(|&k| self.validate_as(k).is_ok())
            .collect();
        match matches.as_slice() {
            [one] => Ok(*one),
            [] => Err(LrError::RejectNotLR("no case matches".into())),
            _ => Err(LrError::RejectAmbiguous),
        }
    }

    /// All orthogonal Littlewood-Richardson tableaux for (λ, μ), ordered by
    /// case and then by the column heights.
    pub fn enumerate(lambda: &Partition, mu: &Partition) -> Result<Vec<Self>, LrError> {
        if lambda.len() > 3 || mu.len() > 1 {
            return Err(LrError::RejectShapeTooLong);
        }
        let (l1, l2, l3) = (lambda.part(0), lambda.part(1), lambda.part(2));
        let mu1 = mu.part(0);
        let mut out = Vec::new();

        // cases 1 and 2: split the tail into a line-3 overhang (0 or 1),
        // line-2 cells and line-1 cells
        for t3 in 0..=1u32.min(mu1) {
            for ell1 in 0..=(mu1 - t3) {
                let ell2 = mu1 - t3 - ell1;
                let (Some(b), Some(c)) = (l2.checked_sub(ell1), l1.checked_sub(ell2)) else {
                    continue;
                };
                let Some(a) = (b + t3).checked_sub(l3) else {
                    continue;
                };
                for case in [LrCase::Case1, LrCase::Case2] {
                    if let Ok(t) = Self::assemble(case, a, b, c, mu1, lambda) {
                        if t.validate().is_ok() {
                            out.push(t);
                        }
                    }
                }
            }
        }
        // case 3 is fully determined by λ and μ
        if mu1 > 0 && l1 >= mu1 && l2 + 2 >= l3 {
            let (b, c, a) = (l2 + 1, l1 - mu1, l2 + 2 - l3);
            if let Ok(t) = Self::assemble(LrCase::Case3, a, b, c, mu1, lambda) {
                if t.validate().is_ok() {
                    out.push(t);
                }
            }
        }
        // case 4 likewise
        if mu1 == 0 && l2 >= l3 {
            let (a, b, c) = (l2 - l3, l2, l1);
            if let Ok(t) = Self::assemble(LrCase::Case4, a, b, c, 0, lambda) {
                if t.validate().is_ok() {
                    out.push(t);
                }
            }
        }
        out.sort_by_key(|t| (t.case, t.a, t.b, t.c));
        out.dedup();
        Ok(out)
    }

    /// The crystal encoding: left and middle column as the two-column skew
    /// tableau (the middle overhang is the offset), right column as the
    /// single column.
    pub fn to_crystal(&self) -> CrystalElement {
        let left = OneColumn::new(self.column(LrColumn::Left)).expect("columns are strict");
        let right = OneColumn::new(self.column(LrColumn::Middle)).expect("columns are strict");
        let column = OneColumn::new(self.column(LrColumn::Right)).expect("columns are strict");
        CrystalElement {
            skew: TwoColumnSkew::new(left, right, self.a).expect("valid tableaux give skew shapes"),
            column,
        }
    }

    pub fn from_crystal(elem: &CrystalElement) -> Result<Self, LrError> {
        let mu1 = elem.skew.tail();
        Self::from_columns(
            elem.skew.left.entries(),
            elem.skew.right.entries(),
            elem.column.entries(),
            mu1,
        )
    }

    /// A plain-text picture: three columns at their proper vertical
    /// offsets.
    pub fn render(&self) -> String {
        if self.size() == 0 {
            return String::from("(empty)");
        }
        let mut cells: Vec<(i64, usize, u32)> = Vec::new();
        for line in &self.lines {
            for (e0, pos) in line.iter().enumerate() {
                let col = match pos.col {
                    LrColumn::Left => 0,
                    LrColumn::Middle => 1,
                    LrColumn::Right => 2,
                };
                cells.push((self.global_row(*pos), col, e0 as u32 + 1));
            }
        }
        let top = cells.iter().map(|&(r, _, _)| r).min().unwrap();
        let bottom = cells.iter().map(|&(r, _, _)| r).max().unwrap();
        let width = cells.iter().map(|&(_, _, e)| e.to_string().len()).max().unwrap();
        let mut out = String::new();
        for row in top..=bottom {
            let mut line = String::new();
            for col in 0..3usize {
                if col == 2 {
                    line.push_str("| ");
                }
                match cells.iter().find(|&&(r, c, _)| r == row && c == col) {
                    Some(&(_, _, e)) => line.push_str(&format!("{e:>width$} ")),
                    None => line.push_str(&" ".repeat(width + 1)),
                }
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for OrthLRTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

/// JSON form: the named heights, the case number and the three columns as
/// (entry, global row) cells.
#[derive(Serialize, Deserialize)]
struct LrJson {
    a: u32,
    b: u32,
    c: u32,
    mu1: u32,
    case: u8,
    columns: [Vec<LrCellJson>; 3],
}

#[derive(Serialize, Deserialize)]
struct LrCellJson {
    entry: u32,
    row: i64,
}

impl Serialize for OrthLRTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let column_cells = |col: LrColumn| -> Vec<LrCellJson> {
            let mut cells: Vec<LrCellJson> = Vec::new();
            for line in &self.lines {
                for (e0, pos) in line.iter().enumerate() {
                    if pos.col == col {
                        cells.push(LrCellJson {
                            entry: e0 as u32 + 1,
                            row: self.global_row(*pos),
                        });
                    }
                }
            }
            cells.sort_by_key(|c| c.row);
            cells
        };
        LrJson {
            a: self.a,
            b: self.b,
            c: self.c,
            mu1: self.mu1,
            case: self.case.number(),
            columns: [
                column_cells(LrColumn::Left),
                column_cells(LrColumn::Middle),
                column_cells(LrColumn::Right),
            ],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for OrthLRTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = LrJson::deserialize(d)?;
        let entries = |cells: &[LrCellJson]| -> Vec<u32> {
            let mut cells: Vec<(i64, u32)> = cells.iter().map(|c| (c.row, c.entry)).collect();
            cells.sort();
            cells.into_iter().map(|(_, e)| e).collect()
        };
        let t = OrthLRTableau::from_columns(
            &entries(&raw.columns[0]),
            &entries(&raw.columns[1]),
            &entries(&raw.columns[2]),
            raw.mu1,
        )
        .map_err(D::Error::custom)?;
        if t.case.number() != raw.case || t.a != raw.a || t.b != raw.b || t.c != raw.c {
            return Err(D::Error::custom("stated parameters do not match the cells"));
        }
        Ok(t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::lr_crystal;

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn lr(left: &[u32], middle: &[u32], right: &[u32], mu1: u32) -> OrthLRTableau {
        OrthLRTableau::from_columns(left, middle, right, mu1).unwrap()
    }

    #[test]
    fn running_example_is_case_2() {
        let t = lr(&[1, 2, 3, 4], &[1, 2], &[1, 2, 3], 2);
        assert_eq!(t.case(), LrCase::Case2);
        assert_eq!(t.validate().unwrap(), (part(&[4, 3, 2]), part(&[2])));
        assert_eq!(t.a(), 0);
        assert_eq!(t.tail_entries(), vec![3, 4]);
    }

    #[test]
    fn case_3_worked_example() {
        let t = lr(&[1, 5], &[1, 4], &[1, 2, 3], 2);
        assert_eq!(t.case(), LrCase::Case3);
        assert_eq!(t.validate().unwrap(), (part(&[5, 1, 1]), part(&[2])));
        assert_eq!(t.a(), 2);
        assert_eq!(t.tail_entries(), vec![1, 5]);
    }

    #[test]
    fn empty_tableau_is_case_1() {
        let t = lr(&[], &[], &[], 0);
        assert_eq!(t.case(), LrCase::Case1);
        assert_eq!(t.validate().unwrap(), (Partition::empty(), Partition::empty()));
    }

    #[test]
    fn appendix_tableaux_for_small_r() {
        // r = 1
        let t = lr(&[1], &[], &[], 1);
        assert_eq!(t.validate().unwrap(), (part(&[1]), part(&[1])));
        assert_eq!(t.case(), LrCase::Case1);
        // r = 2
        let t = lr(&[1], &[], &[1], 1);
        assert_eq!(t.validate().unwrap(), (part(&[1, 1]), part(&[1])));
        assert_eq!(t.case(), LrCase::Case2);
        let t = lr(&[], &[], &[1, 2], 0);
        assert_eq!(t.validate().unwrap(), (part(&[2]), Partition::empty()));
        let t = lr(&[1, 2], &[], &[], 2);
        assert_eq!(t.validate().unwrap(), (part(&[2]), part(&[2])));
        // r = 3
        let t = lr(&[1], &[1], &[1], 0);
        assert_eq!(t.validate().unwrap(), (part(&[1, 1, 1]), Partition::empty()));
        assert_eq!(t.case(), LrCase::Case4);
        let t = lr(&[3], &[], &[1, 2], 1);
        assert_eq!(t.validate().unwrap(), (part(&[3]), part(&[1])));
        assert_eq!(t.case(), LrCase::Case1);
        let t = lr(&[1, 2, 3], &[], &[], 3);
        assert_eq!(t.validate().unwrap(), (part(&[3]), part(&[3])));
    }

    #[test]
    fn enumerate_matches_the_big_example() {
        let lam = part(&[8, 5, 3]);
        let expect = [
            (1, LrCase::Case3),
            (2, LrCase::Case1),
            (4, LrCase::Case1),
            (5, LrCase::Case2),
        ];
        for (mu1, case) in expect {
            let out = OrthLRTableau::enumerate(&lam, &Partition::single(mu1)).unwrap();
            assert_eq!(out.len(), 1, "mu = ({mu1})");
            assert_eq!(out[0].case(), case, "mu = ({mu1})");
        }
        let out = OrthLRTableau::enumerate(&lam, &Partition::single(3)).unwrap();
        assert_eq!(out.len(), 2);
        let cases: Vec<LrCase> = out.iter().map(|t| t.case()).collect();
        assert_eq!(cases, vec![LrCase::Case2, LrCase::Case3]);
    }

    #[test]
    fn big_example_columns() {
        let lam = part(&[8, 5, 3]);
        // μ = (1): left [1,2,3], middle [1,2,3,4,5,8], right 1..7
        let t = &OrthLRTableau::enumerate(&lam, &Partition::single(1)).unwrap()[0];
        assert_eq!(t.column(LrColumn::Left), vec![1, 2, 3]);
        assert_eq!(t.column(LrColumn::Middle), vec![1, 2, 3, 4, 5, 8]);
        assert_eq!(t.column(LrColumn::Right), (1..=7).collect::<Vec<_>>());
        // μ = (2): left [1,2,3,5], middle [1,2,3,4], right 1..8
        let t = &OrthLRTableau::enumerate(&lam, &Partition::single(2)).unwrap()[0];
        assert_eq!(t.column(LrColumn::Left), vec![1, 2, 3, 5]);
        assert_eq!(t.column(LrColumn::Middle), vec![1, 2, 3, 4]);
        assert_eq!(t.column(LrColumn::Right), (1..=8).collect::<Vec<_>>());
        // μ = (3), case 2: left [1,2,3,5,8], middle [1,2,3,4], right 1..7
        let ts = OrthLRTableau::enumerate(&lam, &Partition::single(3)).unwrap();
        assert_eq!(ts[0].column(LrColumn::Left), vec![1, 2, 3, 5, 8]);
        assert_eq!(ts[0].column(LrColumn::Middle), vec![1, 2, 3, 4]);
        assert_eq!(ts[0].column(LrColumn::Right), (1..=7).collect::<Vec<_>>());
        // μ = (3), case 3: left [1,2,3,7,8], middle [1,2,3,4,5,6], right 1..5
        assert_eq!(ts[1].column(LrColumn::Left), vec![1, 2, 3, 7, 8]);
        assert_eq!(ts[1].column(LrColumn::Middle), vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(ts[1].column(LrColumn::Right), (1..=5).collect::<Vec<_>>());
        // μ = (4): left [1,2,3,5,7,8], middle [1,2,3,4], right 1..6
        let t = &OrthLRTableau::enumerate(&lam, &Partition::single(4)).unwrap()[0];
        assert_eq!(t.column(LrColumn::Left), vec![1, 2, 3, 5, 7, 8]);
        assert_eq!(t.column(LrColumn::Middle), vec![1, 2, 3, 4]);
        assert_eq!(t.column(LrColumn::Right), (1..=6).collect::<Vec<_>>());
        // μ = (5): left [1,2,3,5,6,7,8], middle [1,2,3,4], right 1..5
        let t = &OrthLRTableau::enumerate(&lam, &Partition::single(5)).unwrap()[0];
        assert_eq!(t.column(LrColumn::Left), vec![1, 2, 3, 5, 6, 7, 8]);
        assert_eq!(t.column(LrColumn::Middle), vec![1, 2, 3, 4]);
        assert_eq!(t.column(LrColumn::Right), (1..=5).collect::<Vec<_>>());
    }

    #[test]
    fn enumerate_small_counts() {
        assert_eq!(
            OrthLRTableau::enumerate(&part(&[2, 1]), &Partition::single(1))
                .unwrap()
                .len(),
            1
        );
        assert_eq!(
            OrthLRTableau::enumerate(&part(&[2, 1]), &Partition::single(2))
                .unwrap()
                .len(),
            1
        );
        assert!(OrthLRTableau::enumerate(&part(&[1]), &Partition::empty())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn classification_is_unique_on_enumerated_tableaux() {
        for r in 0..=8u32 {
            for lambda in Partition::all_of_size(r, 3) {
                for mu1 in 0..=r {
                    let mu = Partition::single(mu1);
                    for t in OrthLRTableau::enumerate(&lambda, &mu).unwrap() {
                        assert_eq!(t.classify().unwrap(), t.case());
                        assert_eq!(t.validate().unwrap(), (lambda.clone(), mu.clone()));
                    }
                }
            }
        }
    }

    #[test]
    fn crystal_round_trip_on_the_big_example() {
        let lam = part(&[8, 5, 3]);
        for mu1 in 1..=5u32 {
            let mu = Partition::single(mu1);
            for t in OrthLRTableau::enumerate(&lam, &mu).unwrap() {
                let e = t.to_crystal();
                assert_eq!(OrthLRTableau::from_crystal(&e).unwrap(), t);
            }
        }
    }

    #[test]
    fn agrees_with_the_crystal_model_at_small_sizes() {
        for r in 0..=6u32 {
            for lambda in Partition::all_of_size(r, 3) {
                for mu1 in 0..=r {
                    let mu = Partition::single(mu1);
                    let explicit = OrthLRTableau::enumerate(&lambda, &mu).unwrap();
                    let crystal = lr_crystal(&lambda, &mu).unwrap();
                    let mapped: std::collections::BTreeSet<_> =
                        explicit.iter().map(OrthLRTableau::to_crystal).collect();
                    assert_eq!(mapped, crystal, "lambda={lambda} mu={mu}");
                }
            }
        }
    }

    #[test]
    fn running_example_crystal_encoding() {
        let t = lr(&[1, 2, 3, 4], &[1, 2], &[1, 2, 3], 2);
        let e = t.to_crystal();
        assert_eq!(e.skew.left.entries(), &[1, 2, 3, 4]);
        assert_eq!(e.skew.right.entries(), &[1, 2]);
        assert_eq!(e.skew.offset, 0);
        assert_eq!(e.column.entries(), &[1, 2, 3]);
    }

    #[test]
    fn json_round_trip() {
        let t = lr(&[1, 2, 3, 4], &[1, 2], &[1, 2, 3], 2);
        let s = serde_json::to_string(&t).unwrap();
        let back: OrthLRTableau = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}

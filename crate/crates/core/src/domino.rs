//! Standard domino tableaux: insertion with bumping, cycles relative to a
//! fixed-square colouring, moving through cycles, and the τ-invariant.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::involution::SimpleRoot;

/// A cell of the grid, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Square {
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub const fn new(row: usize, col: usize) -> Self {
        Square { row, col }
    }

    /// Each domino covers exactly one fixed square.
    pub fn is_fixed(self) -> bool {
        (self.row + self.col) % 2 == FIXED_PARITY
    }

    fn up(self) -> Option<Square> {
        (self.row > 1).then(|| Square::new(self.row - 1, self.col))
    }
    fn left(self) -> Option<Square> {
        (self.col > 1).then(|| Square::new(self.row, self.col - 1))
    }
    fn down(self) -> Square {
        Square::new(self.row + 1, self.col)
    }
    fn right(self) -> Square {
        Square::new(self.row, self.col + 1)
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Squares with `row + col` odd are fixed. With this colouring the domino
/// covering `(1,1)` always has its fixed square off the corner.
const FIXED_PARITY: usize = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// Two adjacent squares, stored top/left first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Domino {
    pub label: usize,
    pub cells: [Square; 2],
}

impl Domino {
    pub fn orientation(&self) -> Orientation {
        if self.cells[0].row == self.cells[1].row {
            Orientation::Horizontal
        } else {
            Orientation::Vertical
        }
    }
}

fn sorted_cells(a: Square, b: Square) -> [Square; 2] {
    if a <= b {
        [a, b]
    } else {
        [b, a]
    }
}

fn adjacent(a: Square, b: Square) -> bool {
    (a.row == b.row && a.col.abs_diff(b.col) == 1) || (a.col == b.col && a.row.abs_diff(b.row) == 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("label {0} already present")]
    DuplicateLabel(usize),
    #[error("label {0} is not present")]
    UnknownLabel(usize),
    #[error("cells {0} and {1} are not adjacent")]
    NotADomino(Square, Square),
    #[error("square {0} is already covered")]
    Overlap(Square),
    #[error("tableau is not standard at label {0}")]
    NotStandard(usize),
    #[error("shape {0:?} is not a doubled partition")]
    ShapeViolation(Vec<usize>),
    #[error("cycle {0:?} does not belong to this tableau")]
    UnknownCycle(Vec<usize>),
    #[error("cycle through {0:?} does not change the shape by a single square")]
    MalformedCycle(Vec<usize>),
    #[error("invalid tableau json: {0}")]
    Json(String),
}

/// Row lengths, weakly decreasing.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Shape(pub Vec<usize>);

impl Shape {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Rows `2k-1` and `2k` agree for every `k`.
    pub fn is_doubled(&self) -> bool {
        self.0.len() % 2 == 0 && self.0.chunks(2).all(|c| c[0] == c[1])
    }

    /// Lengths of the double rows of a doubled shape.
    pub fn double_rows(&self) -> Vec<usize> {
        self.0.chunks(2).map(|c| c[0]).collect()
    }

    pub fn row(&self, r: usize) -> usize {
        self.0.get(r.wrapping_sub(1)).copied().unwrap_or(0)
    }
}

/// Where a freshly inserted domino enters the tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertPosition {
    /// Horizontally at the end of the first row.
    HorizontalRow1,
    /// Vertically at the bottom of the first column.
    VerticalCol1,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CycleKind {
    Open { hole: Square, corner: Square },
    Closed,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    pub labels: Vec<usize>,
    pub kind: CycleKind,
}

impl Cycle {
    pub fn is_open(&self) -> bool {
        matches!(self.kind, CycleKind::Open { .. })
    }
}

/// A domino tableau stored as a label map plus a cell index.
#[derive(Clone, Default)]
pub struct DominoTableau {
    dominoes: BTreeMap<usize, [Square; 2]>,
    grid: Vec<Vec<usize>>,
}

impl PartialEq for DominoTableau {
    fn eq(&self, other: &Self) -> bool {
        self.dominoes == other.dominoes
    }
}
impl Eq for DominoTableau {}

impl std::hash::Hash for DominoTableau {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.dominoes.hash(state);
    }
}

impl PartialOrd for DominoTableau {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for DominoTableau {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.dominoes.cmp(&other.dominoes)
    }
}

impl fmt::Debug for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("DominoTableau[")?;
        for (i, (l, c)) in self.dominoes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{l}:{}{}", c[0], c[1])?;
        }
        f.write_str("]")
    }
}

const EMPTY: usize = 0;
const INF: usize = usize::MAX;

impl DominoTableau {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a tableau from explicit dominoes and checks that it is standard.
    pub fn from_dominoes<I>(dominoes: I) -> Result<Self, TableauError>
    where
        I: IntoIterator<Item = (usize, [Square; 2])>,
    {
        let mut t = DominoTableau::new();
        for (label, [a, b]) in dominoes {
            t.put(label, a, b)?;
        }
        t.check_standard()?;
        Ok(t)
    }

    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }

    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.dominoes.keys().copied()
    }

    pub fn contains_label(&self, label: usize) -> bool {
        self.dominoes.contains_key(&label)
    }

    pub fn domino(&self, label: usize) -> Option<Domino> {
        self.dominoes.get(&label).map(|&cells| Domino { label, cells })
    }

    pub fn dominoes(&self) -> impl Iterator<Item = Domino> + '_ {
        self.dominoes.iter().map(|(&label, &cells)| Domino { label, cells })
    }

    /// Label covering a square, if any.
    pub fn at(&self, sq: Square) -> Option<usize> {
        self.grid
            .get(sq.row.wrapping_sub(1))
            .and_then(|r| r.get(sq.col.wrapping_sub(1)))
            .copied()
            .filter(|&l| l != EMPTY)
    }

    pub fn shape(&self) -> Shape {
        let rows = self
            .grid
            .iter()
            .map(|r| r.iter().take_while(|&&l| l != EMPTY).count())
            .take_while(|&len| len > 0)
            .collect();
        Shape(rows)
    }

    fn put(&mut self, label: usize, a: Square, b: Square) -> Result<(), TableauError> {
        if label == EMPTY || self.dominoes.contains_key(&label) {
            return Err(TableauError::DuplicateLabel(label));
        }
        if !adjacent(a, b) || a.row == 0 || a.col == 0 || b.row == 0 || b.col == 0 {
            return Err(TableauError::NotADomino(a, b));
        }
        for sq in [a, b] {
            if self.at(sq).is_some() {
                return Err(TableauError::Overlap(sq));
            }
        }
        for sq in [a, b] {
            if self.grid.len() < sq.row {
                self.grid.resize(sq.row, Vec::new());
            }
            let row = &mut self.grid[sq.row - 1];
            if row.len() < sq.col {
                row.resize(sq.col, EMPTY);
            }
            row[sq.col - 1] = label;
        }
        self.dominoes.insert(label, sorted_cells(a, b));
        Ok(())
    }

    fn take(&mut self, label: usize) -> Option<[Square; 2]> {
        let cells = self.dominoes.remove(&label)?;
        for sq in cells {
            self.grid[sq.row - 1][sq.col - 1] = EMPTY;
        }
        self.trim();
        Some(cells)
    }

    fn trim(&mut self) {
        for row in &mut self.grid {
            while row.last() == Some(&EMPTY) {
                row.pop();
            }
        }
        while self.grid.last().is_some_and(|r| r.is_empty()) {
            self.grid.pop();
        }
    }

    /// Every initial segment of labels covers a Young diagram.
    pub fn is_standard(&self) -> bool {
        self.check_standard().is_ok()
    }

    fn check_standard(&self) -> Result<(), TableauError> {
        let mut rows: Vec<usize> = Vec::new();
        let mut covered: BTreeSet<Square> = BTreeSet::new();
        for (&label, cells) in &self.dominoes {
            covered.extend(cells.iter().copied());
            for sq in cells {
                if rows.len() < sq.row {
                    rows.resize(sq.row, 0);
                }
                rows[sq.row - 1] = rows[sq.row - 1].max(sq.col);
            }
            // contiguous rows, weakly decreasing, no gaps
            let ok = rows.windows(2).all(|w| w[0] >= w[1])
                && rows.iter().all(|&r| r > 0)
                && rows.iter().sum::<usize>() == covered.len();
            if !ok {
                return Err(TableauError::NotStandard(label));
            }
        }
        Ok(())
    }

    /// Places a domino directly; the result must still be standard.
    pub fn place(&mut self, label: usize, cells: [Square; 2]) -> Result<(), TableauError> {
        self.put(label, cells[0], cells[1])?;
        if let Err(e) = self.check_standard() {
            self.take(label);
            return Err(e);
        }
        Ok(())
    }

    /// Shape occupied by labels strictly below `bound`.
    fn row_length_below(&self, row: usize, bound: usize) -> usize {
        self.grid
            .get(row - 1)
            .map(|r| r.iter().take_while(|&&l| l != EMPTY && l < bound).count())
            .unwrap_or(0)
    }

    fn col_length_below(&self, col: usize, bound: usize) -> usize {
        self.grid
            .iter()
            .take_while(|r| r.get(col - 1).is_some_and(|&l| l != EMPTY && l < bound))
            .count()
    }

    /// Domino insertion with bumping. Dominoes with smaller labels stay
    /// put; larger ones are displaced in increasing order. Returns the new
    /// tableau and the two squares by which its shape grew.
    pub fn insert(&self, label: usize, pos: InsertPosition) -> Result<(DominoTableau, [Square; 2]), TableauError> {
        if self.dominoes.contains_key(&label) || label == EMPTY {
            return Err(TableauError::DuplicateLabel(label));
        }
        let mut out = DominoTableau::new();
        for (&l, &[a, b]) in self.dominoes.range(..label) {
            out.put(l, a, b)?;
        }
        let mut bump: [Square; 2] = match pos {
            InsertPosition::HorizontalRow1 => {
                let c = out.row_length_below(1, label);
                [Square::new(1, c + 1), Square::new(1, c + 2)]
            }
            InsertPosition::VerticalCol1 => {
                let r = out.col_length_below(1, label);
                [Square::new(r + 1, 1), Square::new(r + 2, 1)]
            }
        };
        out.put(label, bump[0], bump[1])?;
        for (&l, &old) in self.dominoes.range(label + 1..) {
            let hits: Vec<Square> = old.iter().copied().filter(|sq| bump.contains(sq)).collect();
            let new = match hits.len() {
                0 => old,
                2 => {
                    if old[0].row == old[1].row {
                        let r = old[0].row + 1;
                        let c = out.row_length_below(r, l);
                        [Square::new(r, c + 1), Square::new(r, c + 2)]
                    } else {
                        let c = old[0].col + 1;
                        let r = out.col_length_below(c, l);
                        [Square::new(r + 1, c), Square::new(r + 2, c)]
                    }
                }
                _ => {
                    // the two dominoes fill three squares of a 2x2 box; the
                    // displaced domino takes the fourth
                    let all: BTreeSet<Square> = old.iter().chain(bump.iter()).copied().collect();
                    let r0 = all.iter().map(|s| s.row).min().unwrap();
                    let c0 = all.iter().map(|s| s.col).min().unwrap();
                    let fourth = [
                        Square::new(r0, c0),
                        Square::new(r0, c0 + 1),
                        Square::new(r0 + 1, c0),
                        Square::new(r0 + 1, c0 + 1),
                    ]
                    .into_iter()
                    .find(|s| !all.contains(s))
                    .expect("overlapping dominoes span a 2x2 box");
                    let keep = if bump.contains(&old[0]) { old[1] } else { old[0] };
                    let free = if old.contains(&bump[0]) { bump[1] } else { bump[0] };
                    let new = sorted_cells(keep, fourth);
                    bump = sorted_cells(free, fourth);
                    out.put(l, new[0], new[1])?;
                    continue;
                }
            };
            if hits.len() == 2 {
                bump = new;
            }
            out.put(l, new[0], new[1])?;
        }
        out.check_standard()?;
        Ok((out, bump))
    }

    fn value(&self, row: isize, col: isize) -> usize {
        if row <= 0 || col <= 0 {
            return 0;
        }
        self.at(Square::new(row as usize, col as usize)).unwrap_or(INF)
    }

    /// The domino with the same fixed square that `label` moves to when its
    /// cycle is moved through.
    fn moved_position(&self, label: usize) -> [Square; 2] {
        let cells = self.dominoes[&label];
        let (fixed, var) = if cells[0].is_fixed() { (cells[0], cells[1]) } else { (cells[1], cells[0]) };
        let (i, j) = (fixed.row as isize, fixed.col as isize);
        let up_right = self.value(i - 1, j + 1);
        let down_left = self.value(i + 1, j - 1);
        let other = if var.col + 1 == fixed.col {
            // variable square to the left
            if label < up_right { fixed.up() } else { Some(fixed.right()) }
        } else if var.row + 1 == fixed.row {
            if label < down_left { fixed.left() } else { Some(fixed.down()) }
        } else if var.col == fixed.col + 1 {
            if label > down_left { Some(fixed.down()) } else { fixed.left() }
        } else if label > up_right {
            Some(fixed.right())
        } else {
            fixed.up()
        };
        match other {
            Some(o) => sorted_cells(fixed, o),
            None => cells,
        }
    }

    fn moved_positions(&self) -> BTreeMap<usize, [Square; 2]> {
        self.dominoes.keys().map(|&l| (l, self.moved_position(l))).collect()
    }

    fn cycle_labels(&self, start: usize, moved: &BTreeMap<usize, [Square; 2]>) -> Vec<usize> {
        let mut covered_by_moved: BTreeMap<Square, Vec<usize>> = BTreeMap::new();
        for (&l, cells) in moved {
            for &sq in cells {
                covered_by_moved.entry(sq).or_default().push(l);
            }
        }
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(l) = stack.pop() {
            let mut next = Vec::new();
            for sq in moved[&l] {
                next.extend(self.at(sq));
            }
            for sq in self.dominoes[&l] {
                next.extend(covered_by_moved.get(&sq).into_iter().flatten().copied());
            }
            for m in next {
                if seen.insert(m) {
                    stack.push(m);
                }
            }
        }
        seen.into_iter().collect()
    }

    fn classify(&self, labels: Vec<usize>, moved: &BTreeMap<usize, [Square; 2]>) -> Result<Cycle, TableauError> {
        let before: BTreeSet<Square> = labels.iter().flat_map(|l| self.dominoes[l]).collect();
        let after: BTreeSet<Square> = labels.iter().flat_map(|l| moved[l]).collect();
        let holes: Vec<Square> = before.difference(&after).copied().collect();
        let corners: Vec<Square> = after.difference(&before).copied().collect();
        let kind = match (holes.as_slice(), corners.as_slice()) {
            ([], []) => CycleKind::Closed,
            (&[hole], &[corner]) => CycleKind::Open { hole, corner },
            _ => return Err(TableauError::MalformedCycle(labels)),
        };
        Ok(Cycle { labels, kind })
    }

    /// The cycle containing `label`.
    pub fn cycle_of(&self, label: usize) -> Result<Cycle, TableauError> {
        if !self.dominoes.contains_key(&label) {
            return Err(TableauError::UnknownLabel(label));
        }
        let moved = self.moved_positions();
        let labels = self.cycle_labels(label, &moved);
        self.classify(labels, &moved)
    }

    /// The cycle decomposition, without requiring a doubled shape.
    pub fn all_cycles(&self) -> Result<Vec<Cycle>, TableauError> {
        let moved = self.moved_positions();
        let mut done = BTreeSet::new();
        let mut out = Vec::new();
        for &l in self.dominoes.keys() {
            if done.contains(&l) {
                continue;
            }
            let labels = self.cycle_labels(l, &moved);
            done.extend(labels.iter().copied());
            out.push(self.classify(labels, &moved)?);
        }
        Ok(out)
    }

    /// Cycle partition of a tableau of doubled shape.
    pub fn cycles(&self) -> Result<Vec<Cycle>, TableauError> {
        let shape = self.shape();
        if !shape.is_doubled() {
            return Err(TableauError::ShapeViolation(shape.0));
        }
        self.all_cycles()
    }

    /// Moves every domino of `cycle` to its other position.
    pub fn move_through(&self, cycle: &Cycle) -> Result<DominoTableau, TableauError> {
        let moved = self.moved_positions();
        let first = *cycle.labels.first().ok_or_else(|| TableauError::UnknownCycle(vec![]))?;
        if !self.dominoes.contains_key(&first) || self.cycle_labels(first, &moved) != cycle.labels {
            return Err(TableauError::UnknownCycle(cycle.labels.clone()));
        }
        let mut out = self.clone();
        for &l in &cycle.labels {
            out.take(l);
        }
        for &l in &cycle.labels {
            let [a, b] = moved[&l];
            out.put(l, a, b)?;
        }
        out.check_standard()?;
        Ok(out)
    }

    /// `2e_1` lies in τ iff the 1-domino is vertical; `e_{i+1} - e_i` iff
    /// the `(i+1)`-domino lies strictly below the `i`-domino.
    pub fn tau(&self) -> BTreeSet<SimpleRoot> {
        let n = self.dominoes.keys().copied().max().unwrap_or(0);
        SimpleRoot::all(n).filter(|&r| self.tau_contains(r)).collect()
    }

    pub fn tau_contains(&self, root: SimpleRoot) -> bool {
        match root {
            SimpleRoot::Long => self
                .domino(1)
                .is_some_and(|d| d.orientation() == Orientation::Vertical),
            SimpleRoot::Short(i) => match (self.dominoes.get(&i), self.dominoes.get(&(i + 1))) {
                (Some(a), Some(b)) => below(b, a),
                _ => false,
            },
        }
    }

    pub fn transpose(&self) -> DominoTableau {
        let mut out = DominoTableau::new();
        for (&l, cells) in &self.dominoes {
            let t = |s: Square| Square::new(s.col, s.row);
            out.put(l, t(cells[0]), t(cells[1])).expect("transpose of a tableau is a tableau");
        }
        out
    }

    /// Exchanges the positions of two labels.
    pub fn swap_labels(&self, a: usize, b: usize) -> Result<DominoTableau, TableauError> {
        let mut out = self.clone();
        let ca = out.take(a).ok_or(TableauError::UnknownLabel(a))?;
        let cb = out.take(b).ok_or(TableauError::UnknownLabel(b))?;
        out.put(a, cb[0], cb[1])?;
        out.put(b, ca[0], ca[1])?;
        Ok(out)
    }

    /// Replaces the cells of the listed labels in one step.
    pub fn relocate(&self, moves: &[(usize, [Square; 2])]) -> Result<DominoTableau, TableauError> {
        let mut out = self.clone();
        for &(l, _) in moves {
            out.take(l).ok_or(TableauError::UnknownLabel(l))?;
        }
        for &(l, [a, b]) in moves {
            out.put(l, a, b)?;
        }
        Ok(out)
    }

    /// Bordered ASCII picture; each label is printed in its top/left cell.
    pub fn render_ascii(&self) -> String {
        let shape = self.shape();
        if shape.0.is_empty() {
            return String::from("(empty)\n");
        }
        let width = self.dominoes.keys().max().map_or(1, |l| l.to_string().len());
        let rows = shape.0.len();
        let get = |r: usize, c: usize| -> usize {
            if r == 0 || c == 0 {
                EMPTY
            } else {
                self.at(Square::new(r, c)).unwrap_or(EMPTY)
            }
        };
        let mut s = String::new();
        for r in 1..=rows + 1 {
            // border above row r
            let span = shape.row(r).max(if r > 1 { shape.row(r - 1) } else { 0 });
            for c in 1..=span {
                let (a, b) = (get(r - 1, c), get(r, c));
                s.push('+');
                let line = if a != b { '-' } else { ' ' };
                for _ in 0..width + 2 {
                    s.push(line);
                }
            }
            s.push_str("+\n");
            if r > rows {
                break;
            }
            for c in 1..=shape.row(r) + 1 {
                let (a, b) = (get(r, c - 1), get(r, c));
                s.push(if a != b || c == 1 { '|' } else { ' ' });
                if c > shape.row(r) {
                    break;
                }
                let label = get(r, c);
                let first = self.dominoes[&label][0] == Square::new(r, c);
                if first {
                    s.push_str(&format!(" {label:>width$} "));
                } else {
                    s.push_str(&" ".repeat(width + 2));
                }
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        let json = TableauJson {
            dominoes: self
                .dominoes
                .iter()
                .map(|(&label, c)| DominoJson {
                    label,
                    cells: [[c[0].row, c[0].col], [c[1].row, c[1].col]],
                })
                .collect(),
        };
        serde_json::to_value(json).expect("tableau serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, TableauError> {
        let json: TableauJson =
            serde_json::from_value(value.clone()).map_err(|e| TableauError::Json(e.to_string()))?;
        Self::from_dominoes(json.dominoes.into_iter().map(|d| {
            let [[r1, c1], [r2, c2]] = d.cells;
            (d.label, [Square::new(r1, c1), Square::new(r2, c2)])
        }))
    }
}

/// The topmost row of `lower` is strictly greater than the bottom row of `upper`.
fn below(lower: &[Square; 2], upper: &[Square; 2]) -> bool {
    lower[0].row > upper[1].row
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    dominoes: Vec<DominoJson>,
}

#[derive(Serialize, Deserialize)]
struct DominoJson {
    label: usize,
    cells: [[usize; 2]; 2],
}

/// Every standard domino tableau with labels `1..=n`, in a fixed order.
pub fn all_tableaux(n: usize) -> Vec<DominoTableau> {
    let mut level = vec![DominoTableau::new()];
    for label in 1..=n {
        let mut next = Vec::new();
        for t in &level {
            let shape = t.shape();
            let rows = shape.0.len();
            // horizontal at the end of row r
            for r in 1..=rows + 1 {
                let len = shape.row(r);
                if r == 1 || shape.row(r - 1) >= len + 2 {
                    let mut u = t.clone();
                    u.put(label, Square::new(r, len + 1), Square::new(r, len + 2)).unwrap();
                    next.push(u);
                }
            }
            // vertical at the end of rows r, r+1 (equal lengths)
            for r in 1..=rows + 1 {
                let len = shape.row(r);
                if shape.row(r + 1) == len && (r == 1 || shape.row(r - 1) > len) {
                    let mut u = t.clone();
                    u.put(label, Square::new(r, len + 1), Square::new(r + 1, len + 1)).unwrap();
                    next.push(u);
                }
            }
        }
        level = next;
    }
    level
}

impl fmt::Display for DominoTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(r: usize, c: usize) -> Square {
        Square::new(r, c)
    }

    fn tab(ds: &[(usize, (usize, usize), (usize, usize))]) -> DominoTableau {
        DominoTableau::from_dominoes(ds.iter().map(|&(l, a, b)| (l, [sq(a.0, a.1), sq(b.0, b.1)]))).unwrap()
    }

    fn horizontal_pair() -> DominoTableau {
        tab(&[(1, (1, 1), (1, 2)), (2, (2, 1), (2, 2))])
    }

    #[test]
    fn shapes() {
        assert_eq!(DominoTableau::new().shape(), Shape(vec![]));
        assert_eq!(horizontal_pair().shape(), Shape(vec![2, 2]));
        assert_eq!(tab(&[(1, (1, 1), (2, 1))]).shape(), Shape(vec![1, 1]));
        assert!(Shape(vec![3, 3, 1, 1]).is_doubled());
        assert!(!Shape(vec![3, 1]).is_doubled());
    }

    #[test]
    fn nonstandard_rejected() {
        let bad = DominoTableau::from_dominoes([(1, [sq(2, 1), sq(2, 2)]), (2, [sq(1, 1), sq(1, 2)])]);
        assert_eq!(bad, Err(TableauError::NotStandard(1)));
    }

    #[test]
    fn insert_into_empty() {
        let (t, added) = DominoTableau::new().insert(1, InsertPosition::HorizontalRow1).unwrap();
        assert_eq!(t, tab(&[(1, (1, 1), (1, 2))]));
        assert_eq!(added, [sq(1, 1), sq(1, 2)]);
    }

    #[test]
    fn insert_bumps_vertical_to_next_column() {
        let t = tab(&[(2, (1, 1), (2, 1))]);
        let (u, added) = t.insert(1, InsertPosition::VerticalCol1).unwrap();
        assert_eq!(u, tab(&[(1, (1, 1), (2, 1)), (2, (1, 2), (2, 2))]));
        assert_eq!(added, [sq(1, 2), sq(2, 2)]);
        assert!(t.insert(2, InsertPosition::VerticalCol1).is_err());
    }

    #[test]
    fn insert_rotates_on_single_overlap() {
        // horizontal 1 hits the top cell of vertical 2
        let t = tab(&[(2, (1, 1), (2, 1))]);
        let (u, added) = t.insert(1, InsertPosition::HorizontalRow1).unwrap();
        assert_eq!(u, tab(&[(1, (1, 1), (1, 2)), (2, (2, 1), (2, 2))]));
        assert_eq!(added, [sq(1, 2), sq(2, 2)]);
    }

    #[test]
    fn first_example_cycle_turns_into_empty_double_row() {
        let t = horizontal_pair();
        let c = t.cycle_of(2).unwrap();
        assert_eq!(c.labels, vec![2]);
        assert_eq!(c.kind, CycleKind::Open { hole: sq(2, 2), corner: sq(3, 1) });
        let moved = t.move_through(&c).unwrap();
        assert_eq!(moved, tab(&[(1, (1, 1), (1, 2)), (2, (2, 1), (3, 1))]));
    }

    #[test]
    fn transposed_cycle_stays_in_first_double_row() {
        let t = horizontal_pair().transpose();
        let c = t.cycle_of(2).unwrap();
        let CycleKind::Open { hole, corner } = c.kind else { panic!("expected open cycle") };
        assert!(hole.row <= 2 && corner.row <= 2);
    }

    #[test]
    fn single_domino_is_one_cycle() {
        let t = tab(&[(1, (1, 1), (2, 1))]);
        let cs = t.cycles().unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].labels, vec![1]);
    }

    #[test]
    fn cycles_require_doubled_shape() {
        let t = tab(&[(1, (1, 1), (1, 2))]);
        assert!(matches!(t.cycles(), Err(TableauError::ShapeViolation(_))));
    }

    #[test]
    fn move_through_twice_is_identity() {
        let t = horizontal_pair();
        let c = t.cycle_of(2).unwrap();
        let u = t.move_through(&c).unwrap();
        let back = u.move_through(&u.cycle_of(2).unwrap()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn tau_of_small_tableaux() {
        let roots = |t: &DominoTableau| t.tau().into_iter().collect::<Vec<_>>();
        assert_eq!(roots(&horizontal_pair()), vec![SimpleRoot::Short(1)]);
        assert_eq!(roots(&tab(&[(1, (1, 1), (2, 1))])), vec![SimpleRoot::Long]);
        assert_eq!(roots(&horizontal_pair().transpose()), vec![SimpleRoot::Long]);
    }

    #[test]
    fn tableau_counts_match_involution_counts() {
        for n in 0..=6 {
            assert_eq!(all_tableaux(n).len() as u64, crate::involution::involution_count(n));
        }
    }

    #[test]
    fn json_roundtrip() {
        let t = horizontal_pair();
        assert_eq!(DominoTableau::from_json(&t.to_json()).unwrap(), t);
        assert_eq!(
            t.to_json().to_string(),
            r#"{"dominoes":[{"label":1,"cells":[[1,1],[1,2]]},{"label":2,"cells":[[2,1],[2,2]]}]}"#
        );
    }

    fn signed_permutations(n: usize) -> Vec<Vec<isize>> {
        let mut out = vec![vec![]];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &out {
                for v in 1..=n as isize {
                    if !w.iter().any(|x: &isize| x.abs() == v) {
                        for s in [v, -v] {
                            let mut u = w.clone();
                            u.push(s);
                            next.push(u);
                        }
                    }
                }
            }
            out = next;
        }
        out
    }

    #[test]
    fn insertion_is_a_bijection_on_signed_permutations() {
        for n in 1..=4 {
            let mut seen = BTreeSet::new();
            let perms = signed_permutations(n);
            for w in &perms {
                let mut p = DominoTableau::new();
                let mut q = DominoTableau::new();
                for (k, &x) in w.iter().enumerate() {
                    let pos = if x > 0 { InsertPosition::HorizontalRow1 } else { InsertPosition::VerticalCol1 };
                    let (next, added) = p.insert(x.unsigned_abs(), pos).unwrap();
                    q.place(k + 1, added).unwrap();
                    p = next;
                    assert_eq!(p.shape(), q.shape());
                }
                seen.insert((p, q));
            }
            assert_eq!(seen.len(), perms.len());
        }
    }

    #[test]
    fn cycles_well_formed_on_doubled_shapes() {
        for n in 1..=6 {
            for t in all_tableaux(n).into_iter().filter(|t| t.shape().is_doubled()) {
                let cycles = t.cycles().unwrap_or_else(|e| panic!("{t:?}: {e}"));
                let covered: usize = cycles.iter().map(|c| c.labels.len()).sum();
                assert_eq!(covered, n);
                for c in &cycles {
                    let smallest = *t.dominoes.keys().next().unwrap();
                    if c.labels.contains(&smallest) {
                        // the cycle of the smallest domino always vacates the corner
                        assert!(matches!(c.kind, CycleKind::Open { hole, .. } if hole == sq(1, 1)));
                        assert!(t.move_through(c).is_err());
                        continue;
                    }
                    let u = t.move_through(c).unwrap_or_else(|e| panic!("{t:?} {c:?}: {e}"));
                    let back = u.cycle_of(c.labels[0]).unwrap();
                    assert_eq!(back.labels, c.labels);
                    assert_eq!(u.move_through(&back).unwrap(), t);
                    match c.kind {
                        CycleKind::Closed => assert_eq!(u.shape(), t.shape()),
                        CycleKind::Open { hole, corner } => {
                            assert_eq!(t.at(hole).is_some(), true);
                            assert_eq!(u.at(corner).is_some(), true);
                            assert_eq!(u.at(hole), None);
                        }
                    }
                }
            }
        }
    }
}

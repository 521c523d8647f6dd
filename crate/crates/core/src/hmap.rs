//! The map from signed involutions to pairs (domino tableau, class of
//! signed tableaux), and the wall-crossing operators on such pairs.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::domino::{CycleKind, DominoTableau, InsertPosition, Orientation, Square, TableauError};
use crate::involution::{Element, InvolutionError, Sign, SignedInvolution, SimpleRoot};
use crate::signed::{class_of, DoubleRow, OrbitDescriptor, SignedClass, SignedError, SignedTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HmapError {
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Signed(#[from] SignedError),
    #[error(transparent)]
    Involution(#[from] InvolutionError),
    #[error("no open cycle of label {label} is available at double row {row}")]
    NoOpenCycle { label: usize, row: usize },
    #[error("no open cycle restores a doubled shape after inserting {0}")]
    NoRestoringCycle(usize),
    #[error("pair is not in the domain of T_{{{alpha},{beta}}}")]
    OutOfDomain { alpha: SimpleRoot, beta: SimpleRoot },
    #[error("no tableau move realizes T_{{{alpha},{beta}}}")]
    NoTableauMove { alpha: SimpleRoot, beta: SimpleRoot },
    #[error("no parameter maps to this pair")]
    NotInImage,
}

/// `H(σ)`: a domino tableau and the class of signed tableaux attached to it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TableauPair {
    pub t1: DominoTableau,
    pub t2_class: SignedClass,
}

impl TableauPair {
    pub fn tau(&self) -> BTreeSet<SimpleRoot> {
        self.t1.tau()
    }

    pub fn descriptor(&self) -> OrbitDescriptor {
        self.t2_class.descriptor()
    }
}

impl TableauPair {
    /// `{"t1": …, "class": [signed tableau, …], "orbit": "…"}`
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "t1": self.t1.to_json(),
            "class": self.t2_class.members().map(SignedTableau::to_json).collect::<Vec<_>>(),
            "orbit": self.descriptor().to_string(),
        })
    }

    /// Reads the form written by [`TableauPair::to_json`]; the listed
    /// members must form one whole class.
    pub fn from_json(value: &serde_json::Value) -> Result<Self, HmapError> {
        let t1 = DominoTableau::from_json(&value["t1"])?;
        let listed = value["class"]
            .as_array()
            .ok_or_else(|| SignedError::Json("missing \"class\" array".into()))?
            .iter()
            .map(SignedTableau::from_json)
            .collect::<Result<BTreeSet<_>, _>>()?;
        let first = listed.iter().next().ok_or_else(|| SignedError::Json("empty class".into()))?;
        let t2_class = class_of(first, &t1)?;
        if !t2_class.members().eq(listed.iter()) {
            return Err(SignedError::Json("listed tableaux are not one class".into()).into());
        }
        Ok(TableauPair { t1, t2_class })
    }
}

impl fmt::Display for TableauPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.t1.render_ascii())?;
        for (i, m) in self.t2_class.members().enumerate() {
            if i > 0 {
                f.write_str(" ~ ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Choices left open by the construction. The defaults are the decreed
/// ones; the alternatives must give equivalent classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Choices {
    /// Start sign of a double row created by a horizontal pair domino.
    pub new_row_after_horizontal: Sign,
    /// Start sign of a double row created by a vertical pair domino.
    pub new_row_after_vertical: Sign,
}

impl Default for Choices {
    fn default() -> Self {
        Choices {
            new_row_after_horizontal: Sign::Minus,
            new_row_after_vertical: Sign::Plus,
        }
    }
}

/// Intermediate state: a domino tableau of doubled shape and a signed
/// tableau whose double rows are listed in the same order.
#[derive(Clone, Debug, Default)]
struct Builder {
    t1: DominoTableau,
    rows: Vec<DoubleRow>,
    choices: Choices,
}

fn sq(row: usize, col: usize) -> Square {
    Square::new(row, col)
}

impl Builder {
    /// Rows of double row `d` (0-based) are `2d+1` and `2d+2`.
    fn extend_vertical(&mut self, d: usize, sign: Sign, label: usize) -> Result<(), HmapError> {
        let len = self.rows.get(d).map_or(0, |r| r.length);
        self.t1.place(label, [sq(2 * d + 1, len + 1), sq(2 * d + 2, len + 1)])?;
        if d == self.rows.len() {
            self.rows.push(DoubleRow::new(1, sign));
        } else {
            debug_assert_eq!(self.rows[d].end(), Some(-sign));
            self.rows[d].length += 1;
        }
        Ok(())
    }

    fn block_end(&self, d: usize) -> usize {
        let len = self.rows[d].length;
        (d..self.rows.len()).take_while(|&k| self.rows[k].length == len).last().unwrap() + 1
    }

    fn smallest(&self) -> Option<usize> {
        self.t1.labels().next()
    }

    /// Adds a singleton `(label, sign)`, looking for room from double row
    /// `start` downwards.
    fn insert_singleton(&mut self, label: usize, sign: Sign, start: usize) -> Result<(), HmapError> {
        let mut cursor = start;
        loop {
            if cursor >= self.rows.len() {
                return self.extend_vertical(self.rows.len(), sign, label);
            }
            let end = self.block_end(cursor);
            let len = self.rows[cursor].length;
            if let Some(k) = (cursor..end).find(|&k| self.rows[k].end() == Some(-sign)) {
                self.rows.swap(cursor, k);
                return self.extend_vertical(cursor, sign, label);
            }
            if len % 2 == 1 {
                cursor = end;
                continue;
            }
            if end - cursor >= 2 {
                self.rows[cursor] = self.rows[cursor].flipped();
                self.rows[cursor + 1] = self.rows[cursor + 1].flipped();
                return self.extend_vertical(cursor, sign, label);
            }
            // the only double row of its even length, ending in `sign`
            let lower_end = sq(2 * cursor + 2, len);
            let occupant = self.t1.at(lower_end).expect("double row is filled");
            let cycle = self.t1.cycle_of(occupant)?;
            let CycleKind::Open { hole, corner } = cycle.kind else {
                return Err(HmapError::NoOpenCycle { label: occupant, row: cursor });
            };
            if hole != lower_end || self.smallest().is_some_and(|s| cycle.labels.contains(&s)) {
                return Err(HmapError::NoOpenCycle { label: occupant, row: cursor });
            }
            let target = (corner.row - 1) / 2;
            if target >= self.rows.len() {
                self.rows[cursor] = self.rows[cursor].flipped();
            } else if target != cursor {
                self.rows[cursor] = self.rows[cursor].flipped();
                self.rows[target] = self.rows[target].flipped();
            } else {
                self.t1 = self.t1.move_through(&cycle)?;
                self.t1.place(label, [sq(2 * cursor + 2, len), sq(2 * cursor + 2, len + 1)])?;
                self.rows[cursor] = DoubleRow::new(len + 1, sign);
                return Ok(());
            }
            return self.extend_vertical(cursor, sign, label);
        }
    }

    /// Adds a pair `(lo, hi)^sign`.
    fn insert_pair(&mut self, lo: usize, hi: usize, sign: Sign) -> Result<(), HmapError> {
        let pos = match sign {
            Sign::Plus => InsertPosition::HorizontalRow1,
            Sign::Minus => InsertPosition::VerticalCol1,
        };
        let (t, added) = self.t1.insert(lo, pos)?;
        self.t1 = t;
        let d = (added[0].row - 1) / 2;
        let old = self.rows.get(d).copied();
        let len = old.map_or(0, |r| r.length);
        let horizontal = added[0].row == added[1].row;
        if horizontal && len % 2 == 0 {
            debug_assert_eq!(added[0].row, 2 * d + 1);
            let r = added[0].row + 1;
            self.t1.place(hi, [sq(r, added[0].col), sq(r, added[1].col)])?;
            match old {
                None => self.rows.push(DoubleRow::new(2, self.choices.new_row_after_horizontal)),
                Some(row) => self.rows[d] = DoubleRow::new(len + 2, -row.start),
            }
            return Ok(());
        }
        let before = old.map_or(0, |r| r.plus_in_row());
        if horizontal {
            self.restore_doubled(lo, d, len)?;
            let row = old.expect("odd length row exists");
            self.rows[d] = DoubleRow::new(len + 1, row.start);
        } else {
            match old {
                None => self.rows.push(DoubleRow::new(1, self.choices.new_row_after_vertical)),
                Some(row) => self.rows[d] = DoubleRow::new(len + 1, -row.start),
            }
        }
        let gained = if self.rows[d].plus_in_row() > before { Sign::Plus } else { Sign::Minus };
        self.insert_singleton(hi, -gained, d + 1)
    }

    /// After a horizontal domino lands on an odd double row, move through
    /// the open cycle that brings the shape back to a doubled partition.
    fn restore_doubled(&mut self, label: usize, d: usize, len: usize) -> Result<(), HmapError> {
        let want_hole = sq(2 * d + 1, len + 2);
        let want_corner = sq(2 * d + 2, len + 1);
        let smallest = self.smallest();
        let cycle = self
            .t1
            .all_cycles()?
            .into_iter()
            .find(|c| {
                c.kind == CycleKind::Open { hole: want_hole, corner: want_corner }
                    && !smallest.is_some_and(|s| c.labels.contains(&s))
            })
            .ok_or(HmapError::NoRestoringCycle(label))?;
        self.t1 = self.t1.move_through(&cycle)?;
        Ok(())
    }

    fn signed(&self) -> SignedTableau {
        SignedTableau::new(self.rows.clone()).expect("double rows stay weakly decreasing")
    }
}

/// `H(σ)` with the decreed sign choices.
pub fn h_map(sigma: &SignedInvolution) -> Result<TableauPair, HmapError> {
    h_map_with(sigma, Choices::default())
}

pub fn h_map_with(sigma: &SignedInvolution, choices: Choices) -> Result<TableauPair, HmapError> {
    let (t1, t2) = build(sigma, choices)?;
    let t2_class = class_of(&t2, &t1)?;
    Ok(TableauPair { t1, t2_class })
}

/// The domino tableau and the representative signed tableau produced by
/// the construction, before closing the class.
pub fn build(sigma: &SignedInvolution, choices: Choices) -> Result<(DominoTableau, SignedTableau), HmapError> {
    let mut b = Builder { choices, ..Builder::default() };
    for e in sigma.elements() {
        match *e {
            Element::Single { index, sign } => b.insert_singleton(index, sign, 0)?,
            Element::Pair { lo, hi, sign } => b.insert_pair(lo, hi, sign)?,
        }
        debug_assert!(b.t1.shape().is_doubled());
    }
    let t2 = b.signed();
    Ok((b.t1, t2))
}

/// The domino tableau labelling the annihilator.
pub fn annihilator_of(sigma: &SignedInvolution) -> Result<DominoTableau, HmapError> {
    Ok(h_map(sigma)?.t1)
}

/// The normalized signed tableau labelling the associated variety.
pub fn associated_variety_of(sigma: &SignedInvolution) -> Result<OrbitDescriptor, HmapError> {
    Ok(h_map(sigma)?.descriptor())
}

/// `H⁻¹` by search over all parameters of the same rank and signature.
pub fn h_inverse(pair: &TableauPair, p: usize) -> Result<SignedInvolution, HmapError> {
    let n = pair.t1.len();
    for sigma in SignedInvolution::enumerate(n, p) {
        if h_map(&sigma)? == *pair {
            return Ok(sigma);
        }
    }
    Err(HmapError::NotInImage)
}

fn f_layout(which: FLayout) -> [(usize, [Square; 2]); 2] {
    match which {
        FLayout::F1 => [(1, [sq(1, 1), sq(2, 1)]), (2, [sq(1, 2), sq(2, 2)])],
        FLayout::F2 => [(1, [sq(1, 1), sq(1, 2)]), (2, [sq(2, 1), sq(2, 2)])],
        FLayout::F1Tilde => [(1, [sq(1, 1), sq(2, 1)]), (2, [sq(1, 2), sq(1, 3)])],
        FLayout::F2Tilde => [(1, [sq(1, 1), sq(1, 2)]), (2, [sq(2, 1), sq(3, 1)])],
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum FLayout {
    F1,
    F2,
    F1Tilde,
    F2Tilde,
}

fn contains_layout(t: &DominoTableau, which: FLayout) -> bool {
    f_layout(which)
        .iter()
        .all(|(l, cells)| t.domino(*l).is_some_and(|d| d.cells == *cells))
}

fn replace_layout(t: &DominoTableau, to: FLayout) -> Result<DominoTableau, TableauError> {
    t.relocate(&f_layout(to))
}

/// Classes of the members of `class` relative to a new tableau.
fn regroup(class: &SignedClass, t1: &DominoTableau) -> Result<Vec<SignedClass>, HmapError> {
    let mut out: Vec<SignedClass> = Vec::new();
    for m in class.members() {
        if out.iter().any(|c| c.contains(m)) {
            continue;
        }
        out.push(class_of(m, t1)?);
    }
    Ok(out)
}

fn pairs_for(t1: &DominoTableau, class: &SignedClass) -> Result<Vec<TableauPair>, HmapError> {
    Ok(regroup(class, t1)?
        .into_iter()
        .map(|c| TableauPair { t1: t1.clone(), t2_class: c })
        .collect())
}

impl TableauPair {
    /// Wall-crossing `T_{αβ}` acting on the pair.
    pub fn wall_cross(&self, alpha: SimpleRoot, beta: SimpleRoot) -> Result<Vec<TableauPair>, HmapError> {
        let n = self.t1.len();
        if !alpha.is_adjacent(beta) || !alpha.valid_for(n) || !beta.valid_for(n) {
            return Err(InvolutionError::NotAdjacent(alpha, beta).into());
        }
        if self.t1.tau_contains(alpha) || !self.t1.tau_contains(beta) {
            return Err(HmapError::OutOfDomain { alpha, beta });
        }
        let mut out = if alpha.is_long() || beta.is_long() {
            self.wall_cross_mixed(alpha.is_long())?
        } else {
            self.wall_cross_same_length(alpha, beta)?
        };
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn wall_cross_mixed(&self, forward: bool) -> Result<Vec<TableauPair>, HmapError> {
        // forward: (2e1, e2-e1) takes F2-type tableaux to F1-type ones;
        // backward swaps the roles of the two families.
        let (src, dst, src_tilde) = if forward {
            (FLayout::F2, FLayout::F1, FLayout::F2Tilde)
        } else {
            (FLayout::F1, FLayout::F2, FLayout::F1Tilde)
        };
        let t1 = &self.t1;
        if contains_layout(t1, src) {
            let replaced = replace_layout(t1, dst)?;
            let cycle = replaced.cycle_of(2)?;
            if cycle.kind == CycleKind::Closed {
                let moved = replaced.move_through(&cycle)?;
                let mut out = pairs_for(&moved, &self.t2_class)?;
                out.extend(pairs_for(&replaced, &self.t2_class)?);
                return Ok(out);
            }
            // the class may break up relative to the new tableau
            return pairs_for(&replaced, &self.t2_class);
        }
        if contains_layout(t1, src_tilde) {
            let cycle = t1.cycle_of(2)?;
            if cycle.kind != CycleKind::Closed {
                return Err(HmapError::NoTableauMove { alpha: SimpleRoot::Long, beta: SimpleRoot::Short(1) });
            }
            let moved = t1.move_through(&cycle)?;
            if !contains_layout(&moved, src) {
                return Err(HmapError::NoTableauMove { alpha: SimpleRoot::Long, beta: SimpleRoot::Short(1) });
            }
            let replaced = replace_layout(&moved, dst)?;
            return pairs_for(&replaced, &self.t2_class);
        }
        let (alpha, beta) = if forward {
            (SimpleRoot::Long, SimpleRoot::Short(1))
        } else {
            (SimpleRoot::Short(1), SimpleRoot::Long)
        };
        Err(HmapError::NoTableauMove { alpha, beta })
    }

    fn wall_cross_same_length(&self, alpha: SimpleRoot, beta: SimpleRoot) -> Result<Vec<TableauPair>, HmapError> {
        let (SimpleRoot::Short(a), SimpleRoot::Short(b)) = (alpha, beta) else {
            unreachable!("same-length roots are short")
        };
        let lo = a.min(b);
        let flips = |t: &DominoTableau| t.tau_contains(alpha) && !t.tau_contains(beta);
        // label interchange of adjacent dominoes
        let mut found: Vec<DominoTableau> = [(lo, lo + 1), (lo + 1, lo + 2)]
            .into_iter()
            .filter_map(|(x, y)| self.t1.swap_labels(x, y).ok())
            .filter(|t| t.is_standard() && flips(t))
            .collect();
        if found.is_empty() {
            // F-type interchange: two dominoes filling a 2x2 box change
            // orientation
            for (x, y) in [(lo, lo + 1), (lo + 1, lo + 2)] {
                if let Some(t) = retile_box(&self.t1, x, y) {
                    if t.is_standard() && flips(&t) {
                        found.push(t);
                    }
                }
            }
        }
        match found.as_slice() {
            [t] => Ok(vec![TableauPair { t1: t.clone(), t2_class: self.t2_class.clone() }]),
            _ => Err(HmapError::NoTableauMove { alpha, beta }),
        }
    }
}

/// If the dominoes `x < y` fill a 2x2 box, the tableau with the box tiled
/// the other way (`x` on top or on the left).
fn retile_box(t: &DominoTableau, x: usize, y: usize) -> Option<DominoTableau> {
    let dx = t.domino(x)?;
    let dy = t.domino(y)?;
    let cells: BTreeSet<Square> = dx.cells.iter().chain(dy.cells.iter()).copied().collect();
    let r0 = cells.iter().map(|s| s.row).min()?;
    let c0 = cells.iter().map(|s| s.col).min()?;
    let boxed: BTreeSet<Square> = [sq(r0, c0), sq(r0, c0 + 1), sq(r0 + 1, c0), sq(r0 + 1, c0 + 1)].into();
    if cells != boxed {
        return None;
    }
    let moves = match dx.orientation() {
        Orientation::Horizontal => [(x, [sq(r0, c0), sq(r0 + 1, c0)]), (y, [sq(r0, c0 + 1), sq(r0 + 1, c0 + 1)])],
        Orientation::Vertical => [(x, [sq(r0, c0), sq(r0, c0 + 1)]), (y, [sq(r0 + 1, c0), sq(r0 + 1, c0 + 1)])],
    };
    t.relocate(&moves).ok()
}

impl TableauPair {
    /// `p` of the real form, read off the signed tableaux.
    pub fn p(&self) -> usize {
        self.t2_class.representative().signature().0 / 2
    }
}

/// `T_{αβ}` on a pair: the tableau move when one applies, otherwise the
/// conjugate of the parameter operator. The flag reports the latter.
pub fn wall_cross_pair(
    alpha: SimpleRoot,
    beta: SimpleRoot,
    pair: &TableauPair,
) -> Result<(Vec<TableauPair>, bool), HmapError> {
    match pair.wall_cross(alpha, beta) {
        Err(HmapError::NoTableauMove { .. }) if !alpha.is_long() && !beta.is_long() => {
            Ok((wall_cross_conjugated(pair, pair.p(), alpha, beta)?, true))
        }
        other => Ok((other?, false)),
    }
}

/// `H ∘ T_{αβ} ∘ H⁻¹`.
pub fn wall_cross_conjugated(
    pair: &TableauPair,
    p: usize,
    alpha: SimpleRoot,
    beta: SimpleRoot,
) -> Result<Vec<TableauPair>, HmapError> {
    let sigma = h_inverse(pair, p)?;
    let mut out = sigma
        .wall_cross(alpha, beta)?
        .iter()
        .map(h_map)
        .collect::<Result<Vec<_>, _>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    fn parse(s: &str) -> SignedInvolution {
        crate::io::parse_sigma(s).unwrap()
    }

    fn tab(ds: &[(usize, (usize, usize), (usize, usize))]) -> DominoTableau {
        DominoTableau::from_dominoes(ds.iter().map(|&(l, a, b)| (l, [sq(a.0, a.1), sq(b.0, b.1)]))).unwrap()
    }

    fn st(rows: &[(usize, Sign)]) -> SignedTableau {
        SignedTableau::new(rows.iter().map(|&(l, s)| DoubleRow::new(l, s)).collect()).unwrap()
    }

    #[test]
    fn first_example() {
        let h = h_map(&parse("(1,2)+")).unwrap();
        assert_eq!(h.t1, tab(&[(1, (1, 1), (1, 2)), (2, (2, 1), (2, 2))]));
        let members: Vec<_> = h.t2_class.members().cloned().collect();
        assert_eq!(members, vec![st(&[(2, Plus)]), st(&[(2, Minus)])]);
    }

    #[test]
    fn second_example() {
        let h = h_map(&parse("1+ 2- (3,4)+ 5+")).unwrap();
        assert_eq!(
            h.t1,
            tab(&[
                (1, (1, 1), (2, 1)),
                (2, (1, 2), (1, 3)),
                (3, (1, 4), (1, 5)),
                (4, (2, 2), (2, 3)),
                (5, (2, 4), (2, 5)),
            ])
        );
        let members: Vec<_> = h.t2_class.members().cloned().collect();
        assert_eq!(members, vec![st(&[(5, Plus)])]);
        assert_eq!(h.descriptor().to_string(), "5+5+");
    }

    #[test]
    fn singleton_and_negative_pair() {
        let h = h_map(&parse("1+")).unwrap();
        assert_eq!(h.t1, tab(&[(1, (1, 1), (2, 1))]));
        assert_eq!(h.t2_class.representative(), &st(&[(1, Plus)]));
        let h = h_map(&parse("(1,2)-")).unwrap();
        assert_eq!(h.t1, tab(&[(1, (1, 1), (2, 1)), (2, (3, 1), (4, 1))]));
        assert_eq!(h.t2_class.representative(), &st(&[(1, Plus), (1, Minus)]));
        assert_eq!(h.descriptor().to_string(), "1+1+1-1-");
    }

    #[test]
    fn singleton_steps() {
        let h = h_map(&parse("1+ 2-")).unwrap();
        assert_eq!(h.t1, tab(&[(1, (1, 1), (2, 1)), (2, (1, 2), (2, 2))]));
        assert_eq!(h.t2_class.representative(), &st(&[(2, Plus)]));
    }

    #[test]
    fn mid_state_of_second_example() {
        let (t1, t2) = build(&parse("1+ 2- (3,4)+"), Choices::default()).unwrap();
        assert_eq!(
            t1,
            tab(&[(1, (1, 1), (2, 1)), (2, (1, 2), (2, 2)), (3, (1, 3), (1, 4)), (4, (2, 3), (2, 4))])
        );
        assert_eq!(t2, st(&[(4, Minus)]));
    }

    #[test]
    fn mixed_wall_cross_on_first_example() {
        let h = h_map(&parse("(1,2)+")).unwrap();
        let out = h.wall_cross(SimpleRoot::Long, SimpleRoot::Short(1)).unwrap();
        assert_eq!(out.len(), 2);
        for p in &out {
            assert_eq!(p.t1, h.t1.transpose());
            assert_eq!(p.t2_class.len(), 1);
        }
        let expected: BTreeSet<_> = parse("(1,2)+")
            .wall_cross(SimpleRoot::Long, SimpleRoot::Short(1))
            .unwrap()
            .iter()
            .map(|s| h_map(s).unwrap())
            .collect();
        assert_eq!(out.into_iter().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn same_length_wall_cross() {
        let h = h_map(&parse("1+ 2- 3-")).unwrap();
        let (out, _) = wall_cross_pair(SimpleRoot::Short(1), SimpleRoot::Short(2), &h).unwrap();
        assert_eq!(out, vec![h_map(&parse("(1,2)+ 3-")).unwrap()]);
        // a label interchange
        let h = h_map(&parse("1- 2- 3+")).unwrap();
        let (out, conj) = wall_cross_pair(SimpleRoot::Short(2), SimpleRoot::Short(1), &h).unwrap();
        assert!(!conj);
        assert_eq!(out, vec![h_map(&parse("1- (2,3)+")).unwrap()]);
        let both = h_map(&parse("(1,2)-")).unwrap();
        assert!(matches!(
            both.wall_cross(SimpleRoot::Long, SimpleRoot::Short(1)),
            Err(HmapError::OutOfDomain { .. })
        ));
    }

    #[test]
    fn sign_choices_give_the_same_class() {
        let alt = Choices { new_row_after_horizontal: Plus, new_row_after_vertical: Minus };
        for n in 1..=5 {
            for s in SignedInvolution::enumerate_all(n) {
                assert_eq!(h_map(&s).unwrap(), h_map_with(&s, alt).unwrap(), "{s}");
            }
        }
    }

    #[test]
    fn json_round_trip() {
        for s in SignedInvolution::enumerate_all(4) {
            let h = h_map(&s).unwrap();
            assert_eq!(TableauPair::from_json(&h.to_json()).unwrap(), h);
        }
        let h = h_map(&parse("(1,2)+")).unwrap();
        let mut v = h.to_json();
        v["class"].as_array_mut().unwrap().pop();
        assert!(TableauPair::from_json(&v).is_err());
    }

    #[test]
    fn annihilator_and_variety() {
        assert_eq!(annihilator_of(&parse("1+")).unwrap(), tab(&[(1, (1, 1), (2, 1))]));
        assert_eq!(associated_variety_of(&parse("(1,2)+")).unwrap().to_string(), "2+2+");
        assert_eq!(associated_variety_of(&parse("(1,2)-")).unwrap().to_string(), "1+1+1-1-");
        assert_eq!(associated_variety_of(&parse("1+ 2- (3,4)+ 5+")).unwrap().to_string(), "5+5+");
    }
}

//! Signed tableaux built from double rows, their equivalence classes
//! relative to a domino tableau, and the normalized orbit descriptor.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domino::{CycleKind, DominoTableau, TableauError};
use crate::involution::Sign;

/// Two identical rows whose signs alternate starting from `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DoubleRow {
    pub length: usize,
    pub start: Sign,
}

impl DoubleRow {
    pub fn new(length: usize, start: Sign) -> Self {
        DoubleRow { length, start }
    }

    /// Sign of the last square; `None` for an empty row.
    pub fn end(&self) -> Option<Sign> {
        match self.length {
            0 => None,
            l if l % 2 == 1 => Some(self.start),
            _ => Some(-self.start),
        }
    }

    /// `+` squares in one of the two rows.
    pub fn plus_in_row(&self) -> usize {
        match self.start {
            Sign::Plus => self.length.div_ceil(2),
            Sign::Minus => self.length / 2,
        }
    }

    pub fn flipped(self) -> Self {
        DoubleRow { length: self.length, start: -self.start }
    }

    fn row_string(&self) -> String {
        let mut s = String::with_capacity(self.length);
        let mut sign = self.start;
        for _ in 0..self.length {
            s.push(sign.as_char());
            sign = -sign;
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SignedError {
    #[error("signed tableau shape {0:?} does not match domino tableau shape {1:?}")]
    ShapeMismatch(Vec<usize>, Vec<usize>),
    #[error("double row lengths are not weakly decreasing")]
    NotDecreasing,
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("invalid signed tableau json: {0}")]
    Json(String),
}

/// A signed tableau of doubled shape.
///
/// Double rows of equal length are interchangeable, so the canonical form
/// orders the start signs of each block of equal lengths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedTableau {
    rows: Vec<DoubleRow>,
}

impl SignedTableau {
    pub fn new(rows: Vec<DoubleRow>) -> Result<Self, SignedError> {
        if rows.windows(2).any(|w| w[0].length < w[1].length) {
            return Err(SignedError::NotDecreasing);
        }
        let mut rows = rows;
        rows.retain(|r| r.length > 0);
        Ok(SignedTableau { rows }.canonical())
    }

    fn canonical(mut self) -> Self {
        self.rows.sort_by(|a, b| b.length.cmp(&a.length).then(a.start.cmp(&b.start)));
        self
    }

    pub fn double_rows(&self) -> &[DoubleRow] {
        &self.rows
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.length).collect()
    }

    /// Row lengths of the full (undoubled) shape.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().flat_map(|r| [r.length, r.length]).collect()
    }

    /// `(#+, #-)` over all squares.
    pub fn signature(&self) -> (usize, usize) {
        let plus: usize = self.rows.iter().map(|r| 2 * r.plus_in_row()).sum();
        let total: usize = self.rows.iter().map(|r| 2 * r.length).sum();
        (plus, total - plus)
    }

    pub fn normalize(&self) -> OrbitDescriptor {
        let mut rows: Vec<(usize, Sign)> = self
            .rows
            .iter()
            .flat_map(|r| {
                let start = if r.length % 2 == 0 { Sign::Plus } else { r.start };
                [(r.length, start), (r.length, start)]
            })
            .collect();
        rows.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        OrbitDescriptor { rows }
    }

    /// One-step neighbours under the equivalence generators.
    fn neighbours(&self, links: &[(usize, usize)]) -> Vec<SignedTableau> {
        let mut out = Vec::new();
        let n = self.rows.len();
        let len_of = |d: usize| self.rows.get(d).map_or(0, |r| r.length);
        // equal even lengths: flip two rows
        for a in 0..n {
            for b in a + 1..n {
                if self.rows[a].length == self.rows[b].length && self.rows[a].length % 2 == 0 {
                    let mut rows = self.rows.clone();
                    rows[a] = rows[a].flipped();
                    rows[b] = rows[b].flipped();
                    out.push(SignedTableau { rows }.canonical());
                }
            }
        }
        // different even lengths joined by an open cycle; a row past the end
        // is the empty double row
        for &(d1, d2) in links {
            let (l1, l2) = (len_of(d1), len_of(d2));
            if l1 == l2 || l1 % 2 == 1 || l2 % 2 == 1 {
                continue;
            }
            let block = |len: usize| -> Vec<usize> {
                if len == 0 {
                    vec![usize::MAX]
                } else {
                    (0..n).filter(|&d| self.rows[d].length == len).collect()
                }
            };
            for &a in &block(l1) {
                for &b in &block(l2) {
                    let mut rows = self.rows.clone();
                    for d in [a, b] {
                        if d != usize::MAX {
                            rows[d] = rows[d].flipped();
                        }
                    }
                    out.push(SignedTableau { rows }.canonical());
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({ "double_rows": self.rows })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, SignedError> {
        #[derive(Deserialize)]
        struct Raw {
            double_rows: Vec<DoubleRow>,
        }
        let raw: Raw = serde_json::from_value(value.clone()).map_err(|e| SignedError::Json(e.to_string()))?;
        SignedTableau::new(raw.double_rows)
    }

    /// Both rows of every double row, one line each.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let line = r.row_string();
            s.push_str(&line);
            s.push('\n');
            s.push_str(&line);
            s.push('\n');
        }
        s
    }
}

impl fmt::Display for SignedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rows.iter().map(|r| r.row_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Pairs of double rows (0-based) joined by an open cycle of `t1`, one
/// containing the hole and the other the corner. Cycles through the
/// smallest domino are not used.
pub fn cycle_links(t1: &DominoTableau) -> Result<Vec<(usize, usize)>, TableauError> {
    let smallest = t1.labels().next();
    let mut links = Vec::new();
    for c in t1.cycles()? {
        if smallest.is_some_and(|s| c.labels.contains(&s)) {
            continue;
        }
        if let CycleKind::Open { hole, corner } = c.kind {
            let (a, b) = ((hole.row - 1) / 2, (corner.row - 1) / 2);
            if a != b {
                links.push((a, b));
            }
        }
    }
    Ok(links)
}

/// An equivalence class of signed tableaux relative to a domino tableau,
/// materialized as its sorted member set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedClass {
    members: BTreeSet<SignedTableau>,
}

impl SignedClass {
    pub fn members(&self) -> impl Iterator<Item = &SignedTableau> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &SignedTableau) -> bool {
        self.members.contains(t)
    }

    /// Least member in the canonical order.
    pub fn representative(&self) -> &SignedTableau {
        self.members.iter().next().expect("classes are nonempty")
    }

    pub fn descriptor(&self) -> OrbitDescriptor {
        self.representative().normalize()
    }
}

fn check_shape(t: &SignedTableau, t1: &DominoTableau) -> Result<(), SignedError> {
    let shape = t1.shape();
    if t.shape() != shape.0 {
        return Err(SignedError::ShapeMismatch(t.shape(), shape.0));
    }
    Ok(())
}

fn closure(t: &SignedTableau, links: &[(usize, usize)]) -> SignedClass {
    let mut members = BTreeSet::from([t.clone()]);
    let mut queue = VecDeque::from([t.clone()]);
    while let Some(cur) = queue.pop_front() {
        for nb in cur.neighbours(links) {
            if members.insert(nb.clone()) {
                queue.push_back(nb);
            }
        }
    }
    SignedClass { members }
}

/// The class of `t` relative to `t1`.
pub fn class_of(t: &SignedTableau, t1: &DominoTableau) -> Result<SignedClass, SignedError> {
    check_shape(t, t1)?;
    let links = cycle_links(t1)?;
    Ok(closure(t, &links))
}

pub fn equivalent(a: &SignedTableau, b: &SignedTableau, t1: &DominoTableau) -> Result<bool, SignedError> {
    check_shape(b, t1)?;
    Ok(class_of(a, t1)?.contains(b))
}

/// Every signed tableau of the given double-row lengths with `2p` plus signs.
pub fn all_signed(lengths: &[usize], p: usize) -> Vec<SignedTableau> {
    let mut out = BTreeSet::new();
    let k = lengths.len();
    for mask in 0u32..(1 << k) {
        let rows: Vec<DoubleRow> = lengths
            .iter()
            .enumerate()
            .map(|(i, &l)| DoubleRow::new(l, if mask >> i & 1 == 0 { Sign::Plus } else { Sign::Minus }))
            .collect();
        let t = SignedTableau { rows }.canonical();
        if t.signature().0 == 2 * p {
            out.insert(t);
        }
    }
    out.into_iter().collect()
}

/// Partition of the signed tableaux of `t1`'s shape and signature `(2p, ·)`
/// into classes.
pub fn classes_for(t1: &DominoTableau, p: usize) -> Result<Vec<SignedClass>, SignedError> {
    let shape = t1.shape();
    let links = cycle_links(t1)?;
    let mut remaining: BTreeSet<SignedTableau> = all_signed(&shape.double_rows(), p).into_iter().collect();
    let mut out = Vec::new();
    while let Some(t) = remaining.iter().next().cloned() {
        let class = closure(&t, &links);
        for m in class.members() {
            remaining.remove(m);
        }
        out.push(class);
    }
    Ok(out)
}

/// Row multiset of a normalized signed tableau: every even row starts `+`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitDescriptor {
    rows: Vec<(usize, Sign)>,
}

impl OrbitDescriptor {
    pub fn rows(&self) -> &[(usize, Sign)] {
        &self.rows
    }
}

impl fmt::Display for OrbitDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (len, sign) in &self.rows {
            write!(f, "{len}{sign}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domino::Square;
    use Sign::{Minus, Plus};

    fn st(rows: &[(usize, Sign)]) -> SignedTableau {
        SignedTableau::new(rows.iter().map(|&(l, s)| DoubleRow::new(l, s)).collect()).unwrap()
    }

    fn horizontal_pair() -> DominoTableau {
        DominoTableau::from_dominoes([
            (1, [Square::new(1, 1), Square::new(1, 2)]),
            (2, [Square::new(2, 1), Square::new(2, 2)]),
        ])
        .unwrap()
    }

    #[test]
    fn horizontal_tableau_joins_both_signs() {
        let t1 = horizontal_pair();
        assert!(equivalent(&st(&[(2, Plus)]), &st(&[(2, Minus)]), &t1).unwrap());
        assert_eq!(class_of(&st(&[(2, Plus)]), &t1).unwrap().len(), 2);
    }

    #[test]
    fn transposed_tableau_separates_signs() {
        let t1 = horizontal_pair().transpose();
        assert!(!equivalent(&st(&[(2, Plus)]), &st(&[(2, Minus)]), &t1).unwrap());
        assert!(equivalent(&st(&[(2, Minus)]), &st(&[(2, Minus)]), &t1).unwrap());
    }

    #[test]
    fn shape_mismatch() {
        let t1 = horizontal_pair();
        assert!(matches!(class_of(&st(&[(1, Plus), (1, Minus)]), &t1), Err(SignedError::ShapeMismatch(..))));
    }

    #[test]
    fn odd_single_row_class() {
        let t1 = DominoTableau::from_dominoes([(1, [Square::new(1, 1), Square::new(2, 1)])]).unwrap();
        assert_eq!(class_of(&st(&[(1, Plus)]), &t1).unwrap().len(), 1);
    }

    #[test]
    fn normalization() {
        assert_eq!(st(&[(2, Minus)]).normalize().to_string(), "2+2+");
        assert_eq!(st(&[(5, Plus)]).normalize().to_string(), "5+5+");
        assert_eq!(st(&[(1, Plus), (1, Minus)]).normalize().to_string(), "1+1+1-1-");
        let d = st(&[(4, Minus), (3, Minus), (2, Plus)]).normalize();
        assert_eq!(d.to_string(), "4+4+3-3-2+2+");
    }

    #[test]
    fn signatures() {
        assert_eq!(st(&[(5, Plus)]).signature(), (6, 4));
        assert_eq!(st(&[(2, Minus)]).signature(), (2, 2));
        assert_eq!(st(&[(1, Plus), (1, Minus)]).signature(), (2, 2));
    }

    #[test]
    fn rendering_and_json() {
        let t = st(&[(5, Plus)]);
        assert_eq!(t.render(), "+-+-+\n+-+-+\n");
        assert_eq!(t.to_json().to_string(), r#"{"double_rows":[{"length":5,"start":"+"}]}"#);
        assert_eq!(SignedTableau::from_json(&t.to_json()).unwrap(), t);
    }

    #[test]
    fn equal_rows_are_identified() {
        assert_eq!(st(&[(1, Minus), (1, Plus)]), st(&[(1, Plus), (1, Minus)]));
    }
}

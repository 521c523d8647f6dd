//! Signed involutions: the parameters of simple Harish-Chandra modules for
//! `Sp(p,q)` at trivial infinitesimal character, together with the Cartan
//! involution they determine and the operators acting on them.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self.flip()
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// One element of a signed involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Element {
    /// `(i, ε)`
    Single { index: usize, sign: Sign },
    /// `(lo, hi)^ε` with `lo < hi`.
    Pair { lo: usize, hi: usize, sign: Sign },
}

impl Element {
    pub fn largest(&self) -> usize {
        match *self {
            Element::Single { index, .. } => index,
            Element::Pair { hi, .. } => hi,
        }
    }

    pub fn sign(&self) -> Sign {
        match *self {
            Element::Single { sign, .. } | Element::Pair { sign, .. } => sign,
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Element::Single { index, sign } => write!(f, "{index}{sign}"),
            Element::Pair { lo, hi, sign } => write!(f, "({lo},{hi}){sign}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("index {0} occurs more than once")]
    DuplicateIndex(usize),
    #[error("index {0} does not occur")]
    MissingIndex(usize),
    #[error("pair ({0},{1}) is not ordered lo < hi")]
    BadPairOrder(usize, usize),
    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("e_{} - e_{} is not noncompact imaginary", .0 + 1, .0)]
    NotNoncompactImaginary(usize),
    #[error("e_{} - e_{} is not real", .0 + 1, .0)]
    NotReal(usize),
    #[error("parameter is not in the domain of T_{{{alpha},{beta}}}")]
    OutOfDomain { alpha: SimpleRoot, beta: SimpleRoot },
    #[error("roots {0} and {1} are not a nonorthogonal simple pair")]
    NotAdjacent(SimpleRoot, SimpleRoot),
}

/// What occupies a single index: a signed fixed point or half of a pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Fixed(Sign),
    Paired(usize, Sign),
}

/// A signed involution on `{1..n}`.
///
/// Elements are kept sorted by their largest index, which is the order in
/// which they are fed to the tableau construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedInvolution {
    n: usize,
    elements: Vec<Element>,
}

impl PartialOrd for SignedInvolution {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SignedInvolution {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.to_string().cmp(&other.to_string()))
    }
}

impl SignedInvolution {
    /// Checks that `elements` cover `1..=n` exactly once with ordered pairs.
    pub fn new(elements: Vec<Element>, n: usize) -> Result<Self, InvolutionError> {
        let mut seen = vec![false; n + 1];
        let mut mark = |i: usize| -> Result<(), InvolutionError> {
            if i == 0 || i > n {
                return Err(InvolutionError::IndexOutOfRange { index: i, n });
            }
            if seen[i] {
                return Err(InvolutionError::DuplicateIndex(i));
            }
            seen[i] = true;
            Ok(())
        };
        for e in &elements {
            match *e {
                Element::Single { index, .. } => mark(index)?,
                Element::Pair { lo, hi, .. } => {
                    if lo >= hi {
                        return Err(InvolutionError::BadPairOrder(lo, hi));
                    }
                    mark(lo)?;
                    mark(hi)?;
                }
            }
        }
        if let Some(i) = (1..=n).find(|&i| !seen[i]) {
            return Err(InvolutionError::MissingIndex(i));
        }
        Ok(Self::from_sorted(elements, n))
    }

    fn from_sorted(mut elements: Vec<Element>, n: usize) -> Self {
        elements.sort_by_key(|e| e.largest());
        SignedInvolution { n, elements }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Elements ordered by increasing largest index.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// `(p, q)`: `p` counts `+` singletons plus all pairs.
    pub fn signature(&self) -> (usize, usize) {
        let p = self
            .elements
            .iter()
            .filter(|e| matches!(e, Element::Pair { .. } | Element::Single { sign: Sign::Plus, .. }))
            .count();
        (p, self.n - p)
    }

    pub fn pair_count(&self) -> usize {
        self.elements.iter().filter(|e| matches!(e, Element::Pair { .. })).count()
    }

    pub fn contains(&self, e: &Element) -> bool {
        self.elements.contains(e)
    }

    fn slots(&self) -> Vec<Slot> {
        let mut slots = vec![Slot::Fixed(Sign::Plus); self.n + 1];
        for e in &self.elements {
            match *e {
                Element::Single { index, sign } => slots[index] = Slot::Fixed(sign),
                Element::Pair { lo, hi, sign } => {
                    slots[lo] = Slot::Paired(hi, sign);
                    slots[hi] = Slot::Paired(lo, sign);
                }
            }
        }
        slots
    }

    fn from_slots(slots: &[Slot]) -> Self {
        let n = slots.len() - 1;
        let mut elements = Vec::with_capacity(n);
        for (i, slot) in slots.iter().enumerate().skip(1) {
            match *slot {
                Slot::Fixed(sign) => elements.push(Element::Single { index: i, sign }),
                Slot::Paired(j, sign) if j > i => elements.push(Element::Pair { lo: i, hi: j, sign }),
                Slot::Paired(..) => {}
            }
        }
        Self::from_sorted(elements, n)
    }

    fn check_index(&self, i: usize) -> Result<(), InvolutionError> {
        if i == 0 || i > self.n {
            Err(InvolutionError::IndexOutOfRange { index: i, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Image of `e_i` under the Cartan involution attached to this parameter.
    pub fn theta_image(&self, i: usize) -> Result<SignedCoord, InvolutionError> {
        self.check_index(i)?;
        Ok(self.theta(i))
    }

    fn theta(&self, i: usize) -> SignedCoord {
        match self.slots()[i] {
            Slot::Fixed(_) => SignedCoord { index: i, negative: false },
            Slot::Paired(j, Sign::Plus) => SignedCoord { index: j, negative: false },
            // (i,i+1)^- sends both vectors to their negatives.
            Slot::Paired(j, Sign::Minus) if i.abs_diff(j) == 1 => SignedCoord { index: i, negative: true },
            Slot::Paired(j, Sign::Minus) => SignedCoord { index: j, negative: true },
        }
    }

    pub fn root_status(&self, root: SimpleRoot) -> RootStatus {
        let slots = self.slots();
        let image = root
            .coords()
            .into_iter()
            .map(|(i, c)| {
                let t = self.theta(i);
                (t.index, if t.negative { -c } else { c })
            })
            .fold(Vec::<(usize, i32)>::new(), |mut acc, (i, c)| {
                match acc.iter_mut().find(|(j, _)| *j == i) {
                    Some(slot) => slot.1 += c,
                    None => acc.push((i, c)),
                }
                acc
            });
        let mut image: Vec<(usize, i32)> = image.into_iter().filter(|&(_, c)| c != 0).collect();
        image.sort_unstable();
        let mut own = root.coords();
        own.sort_unstable();
        let negated: Vec<(usize, i32)> = own.iter().map(|&(i, c)| (i, -c)).collect();
        if image == own {
            let compact = match root {
                SimpleRoot::Long => matches!(slots[1], Slot::Fixed(_)),
                SimpleRoot::Short(i) => matches!(
                    (slots[i], slots[i + 1]),
                    (Slot::Fixed(a), Slot::Fixed(b)) if a == b
                ),
            };
            if compact {
                RootStatus::CompactImaginary
            } else {
                RootStatus::NoncompactImaginary
            }
        } else if image == negated {
            RootStatus::Real
        } else {
            // positive iff the coefficient on the largest coordinate is positive
            let top = image.iter().max_by_key(|&&(i, _)| i).map(|&(_, c)| c).unwrap_or(0);
            if top < 0 {
                RootStatus::ComplexTau
            } else {
                RootStatus::ComplexNonTau
            }
        }
    }

    pub fn tau(&self) -> BTreeSet<SimpleRoot> {
        SimpleRoot::all(self.n)
            .filter(|&r| self.root_status(r).in_tau())
            .collect()
    }

    pub fn in_tau(&self, root: SimpleRoot) -> bool {
        self.root_status(root).in_tau()
    }

    /// `In(a, b, σ)`: swap the occurrences of `a` and `b`.
    pub fn interchange(&self, a: usize, b: usize) -> SignedInvolution {
        let mut slots = self.slots();
        if let Slot::Paired(j, _) = slots[a] {
            if j == b {
                return self.clone();
            }
        }
        let swap = |k: usize| if k == a { b } else if k == b { a } else { k };
        let old = slots.clone();
        for (i, slot) in old.iter().enumerate().skip(1) {
            slots[swap(i)] = match *slot {
                Slot::Fixed(s) => Slot::Fixed(s),
                Slot::Paired(j, s) => Slot::Paired(swap(j), s),
            };
        }
        Self::from_slots(&slots)
    }

    /// `SC(1, σ)`: flip the sign of the pair containing 1, if any.
    pub fn sign_change_first(&self) -> SignedInvolution {
        let mut slots = self.slots();
        if let Slot::Paired(j, s) = slots[1] {
            slots[1] = Slot::Paired(j, -s);
            slots[j] = Slot::Paired(1, -s);
        }
        Self::from_slots(&slots)
    }

    /// Cross action of a simple reflection.
    pub fn cross_action(&self, root: SimpleRoot) -> SignedInvolution {
        match root {
            SimpleRoot::Long => self.sign_change_first(),
            SimpleRoot::Short(i) => self.interchange(i, i + 1),
        }
    }

    /// The primed interchange `In(1,2,σ)'`.
    pub fn interchange_prime(&self) -> SignedInvolution {
        if self.n < 2 {
            return self.clone();
        }
        let mut slots = self.slots();
        match (slots[1], slots[2]) {
            (Slot::Paired(i, e1), Slot::Paired(j, e2)) if i != 2 => {
                // (1,i)^ε, (2,j)^ε' -> (1,j)^{-ε'}, (2,i)^{-ε}
                slots[1] = Slot::Paired(j, -e2);
                slots[j] = Slot::Paired(1, -e2);
                slots[2] = Slot::Paired(i, -e1);
                slots[i] = Slot::Paired(2, -e1);
                Self::from_slots(&slots)
            }
            _ => self.interchange(1, 2),
        }
    }

    /// `c^i`: Cayley transform through the noncompact imaginary `e_{i+1} - e_i`.
    pub fn cayley_up(&self, i: usize) -> Result<SignedInvolution, InvolutionError> {
        if i == 0 || i >= self.n {
            return Err(InvolutionError::IndexOutOfRange { index: i, n: self.n });
        }
        let mut slots = self.slots();
        match (slots[i], slots[i + 1]) {
            (Slot::Fixed(a), Slot::Fixed(b)) if a != b => {
                slots[i] = Slot::Paired(i + 1, a);
                slots[i + 1] = Slot::Paired(i, a);
                Ok(Self::from_slots(&slots))
            }
            _ => Err(InvolutionError::NotNoncompactImaginary(i)),
        }
    }

    /// `c_i`: Cayley transform through the real root `e_{i+1} - e_i`.
    pub fn cayley_down(&self, i: usize) -> Result<SignedInvolution, InvolutionError> {
        if i == 0 || i >= self.n {
            return Err(InvolutionError::IndexOutOfRange { index: i, n: self.n });
        }
        let mut slots = self.slots();
        match slots[i] {
            Slot::Paired(j, s) if j == i + 1 => {
                slots[i] = Slot::Fixed(s);
                slots[i + 1] = Slot::Fixed(-s);
                Ok(Self::from_slots(&slots))
            }
            _ => Err(InvolutionError::NotReal(i)),
        }
    }

    /// Wall-crossing operator `T_{αβ}`; one value for roots of equal
    /// length, one or two for the pair `{2e_1, e_2 - e_1}`.
    pub fn wall_cross(
        &self,
        alpha: SimpleRoot,
        beta: SimpleRoot,
    ) -> Result<Vec<SignedInvolution>, InvolutionError> {
        if !alpha.is_adjacent(beta) || !alpha.valid_for(self.n) || !beta.valid_for(self.n) {
            return Err(InvolutionError::NotAdjacent(alpha, beta));
        }
        if self.in_tau(alpha) || !self.in_tau(beta) {
            return Err(InvolutionError::OutOfDomain { alpha, beta });
        }
        let candidates = if alpha.is_long() || beta.is_long() {
            self.mixed_candidates()
        } else {
            self.same_length_candidates(alpha, beta)
        };
        let mut out: Vec<SignedInvolution> = candidates
            .into_iter()
            .filter(|c| c.in_tau(alpha) && !c.in_tau(beta))
            .collect();
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn mixed_candidates(&self) -> Vec<SignedInvolution> {
        let slots = self.slots();
        match (slots[1], slots[2]) {
            (Slot::Paired(2, Sign::Plus), _) => {
                let mut a = slots.clone();
                a[1] = Slot::Fixed(Sign::Plus);
                a[2] = Slot::Fixed(Sign::Minus);
                let mut b = slots;
                b[1] = Slot::Fixed(Sign::Minus);
                b[2] = Slot::Fixed(Sign::Plus);
                vec![Self::from_slots(&a), Self::from_slots(&b)]
            }
            (Slot::Fixed(x), Slot::Fixed(y)) if x != y => {
                let mut a = slots;
                a[1] = Slot::Paired(2, Sign::Plus);
                a[2] = Slot::Paired(1, Sign::Plus);
                vec![Self::from_slots(&a)]
            }
            _ => vec![self.interchange(1, 2), self.sign_change_first()],
        }
    }

    fn same_length_candidates(&self, alpha: SimpleRoot, beta: SimpleRoot) -> Vec<SignedInvolution> {
        let mut out = vec![self.cross_action(alpha), self.cross_action(beta)];
        let slots = self.slots();
        if let SimpleRoot::Short(a) = alpha {
            // through a noncompact root the new pair is always of + type,
            // whichever of its ends carried the + sign
            if let (Slot::Fixed(x), Slot::Fixed(y)) = (slots[a], slots[a + 1]) {
                if x != y {
                    let mut c = slots.clone();
                    c[a] = Slot::Paired(a + 1, Sign::Plus);
                    c[a + 1] = Slot::Paired(a, Sign::Plus);
                    out.push(Self::from_slots(&c));
                }
            }
        }
        if let SimpleRoot::Short(b) = beta {
            if slots[b] == Slot::Paired(b + 1, Sign::Plus) {
                for s in [Sign::Plus, Sign::Minus] {
                    let mut c = slots.clone();
                    c[b] = Slot::Fixed(s);
                    c[b + 1] = Slot::Fixed(-s);
                    out.push(Self::from_slots(&c));
                }
            }
        }
        out
    }

    /// All signed involutions of rank `n` and signature `(p, n-p)`, in a
    /// fixed order: recursion on the largest unused index.
    pub fn enumerate(n: usize, p: usize) -> impl Iterator<Item = SignedInvolution> {
        let mut out = Vec::new();
        if p <= n {
            let mut slots = vec![Slot::Fixed(Sign::Plus); n + 1];
            let mut used = vec![false; n + 1];
            enumerate_rec(n, p, n, &mut slots, &mut used, &mut out);
        }
        out.into_iter()
    }

    pub fn enumerate_all(n: usize) -> impl Iterator<Item = SignedInvolution> {
        (0..=n).flat_map(move |p| Self::enumerate(n, p))
    }
}

fn enumerate_rec(
    n: usize,
    p_left: usize,
    top: usize,
    slots: &mut [Slot],
    used: &mut [bool],
    out: &mut Vec<SignedInvolution>,
) {
    let Some(k) = (1..=top).rev().find(|&k| !used[k]) else {
        if p_left == 0 {
            out.push(SignedInvolution::from_slots(slots));
        }
        return;
    };
    let remaining = (1..=k).filter(|&k| !used[k]).count();
    // every remaining index contributes at most one to p; pairs contribute
    // one for two indices, so p_left is bounded by `remaining`.
    if p_left > remaining {
        return;
    }
    used[k] = true;
    for sign in [Sign::Plus, Sign::Minus] {
        let cost = usize::from(sign == Sign::Plus);
        if cost <= p_left {
            slots[k] = Slot::Fixed(sign);
            enumerate_rec(n, p_left - cost, k - 1, slots, used, out);
        }
    }
    if p_left >= 1 {
        for j in 1..k {
            if used[j] {
                continue;
            }
            used[j] = true;
            for sign in [Sign::Plus, Sign::Minus] {
                slots[k] = Slot::Paired(j, sign);
                slots[j] = Slot::Paired(k, sign);
                enumerate_rec(n, p_left - 1, k - 1, slots, used, out);
            }
            used[j] = false;
        }
    }
    used[k] = false;
}

impl fmt::Display for SignedInvolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.elements.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// `±e_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedCoord {
    pub index: usize,
    pub negative: bool,
}

impl fmt::Display for SignedCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}e{}", if self.negative { "-" } else { "" }, self.index)
    }
}

/// Simple roots of type `C_n`: `2e_1` and `e_{i+1} - e_i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SimpleRoot {
    Long,
    /// `e_{i+1} - e_i`, `1 <= i <= n-1`.
    Short(usize),
}

impl SimpleRoot {
    pub fn all(n: usize) -> impl Iterator<Item = SimpleRoot> {
        let long = (n >= 1).then_some(SimpleRoot::Long);
        long.into_iter().chain((1..n).map(SimpleRoot::Short))
    }

    pub fn valid_for(self, n: usize) -> bool {
        match self {
            SimpleRoot::Long => n >= 1,
            SimpleRoot::Short(i) => i >= 1 && i < n,
        }
    }

    pub fn is_long(self) -> bool {
        self == SimpleRoot::Long
    }

    pub fn coords(self) -> Vec<(usize, i32)> {
        match self {
            SimpleRoot::Long => vec![(1, 2)],
            SimpleRoot::Short(i) => vec![(i, -1), (i + 1, 1)],
        }
    }

    /// Distinct and joined by an edge of the Dynkin diagram.
    pub fn is_adjacent(self, other: SimpleRoot) -> bool {
        match (self, other) {
            (SimpleRoot::Long, SimpleRoot::Short(1)) | (SimpleRoot::Short(1), SimpleRoot::Long) => true,
            (SimpleRoot::Short(a), SimpleRoot::Short(b)) => a.abs_diff(b) == 1,
            _ => false,
        }
    }

    /// Every ordered nonorthogonal pair `(α, β)` for rank `n`.
    pub fn adjacent_pairs(n: usize) -> Vec<(SimpleRoot, SimpleRoot)> {
        let roots: Vec<SimpleRoot> = SimpleRoot::all(n).collect();
        let mut out = Vec::new();
        for &a in &roots {
            for &b in &roots {
                if a.is_adjacent(b) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

impl fmt::Display for SimpleRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SimpleRoot::Long => write!(f, "2e1"),
            SimpleRoot::Short(i) => write!(f, "e{}-e{}", i + 1, i),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RootStatus {
    CompactImaginary,
    NoncompactImaginary,
    Real,
    ComplexTau,
    ComplexNonTau,
}

impl RootStatus {
    pub fn in_tau(self) -> bool {
        matches!(self, RootStatus::CompactImaginary | RootStatus::Real | RootStatus::ComplexTau)
    }
}

/// Number of involutions in the hyperoctahedral group of rank `n`.
pub fn involution_count(n: usize) -> u64 {
    let (mut prev, mut cur) = (1u64, 2u64);
    if n == 0 {
        return 1;
    }
    for k in 2..=n as u64 {
        let next = 2 * cur + 2 * (k - 1) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    fn s(index: usize, sign: Sign) -> Element {
        Element::Single { index, sign }
    }
    fn pr(lo: usize, hi: usize, sign: Sign) -> Element {
        Element::Pair { lo, hi, sign }
    }
    fn inv(e: Vec<Element>) -> SignedInvolution {
        let n = e.iter().map(|e| e.largest()).max().unwrap_or(0);
        SignedInvolution::new(e, n).unwrap()
    }

    #[test]
    fn validation() {
        assert_eq!(inv(vec![s(1, Plus), s(2, Minus)]).signature(), (1, 1));
        assert_eq!(inv(vec![pr(1, 2, Plus)]).signature(), (1, 1));
        assert_eq!(
            SignedInvolution::new(vec![s(1, Plus), pr(1, 2, Minus)], 2),
            Err(InvolutionError::DuplicateIndex(1))
        );
        assert_eq!(
            SignedInvolution::new(vec![s(1, Plus)], 2),
            Err(InvolutionError::MissingIndex(2))
        );
        assert_eq!(
            SignedInvolution::new(vec![pr(2, 1, Plus)], 2),
            Err(InvolutionError::BadPairOrder(2, 1))
        );
    }

    #[test]
    fn enumeration_small() {
        let one: Vec<_> = SignedInvolution::enumerate(1, 1).collect();
        assert_eq!(one, vec![inv(vec![s(1, Plus)])]);
        let two: BTreeSet<_> = SignedInvolution::enumerate(2, 1).collect();
        let expect: BTreeSet<_> = [
            inv(vec![s(1, Plus), s(2, Minus)]),
            inv(vec![s(1, Minus), s(2, Plus)]),
            inv(vec![pr(1, 2, Plus)]),
            inv(vec![pr(1, 2, Minus)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(two, expect);
        assert_eq!(SignedInvolution::enumerate_all(2).count(), 6);
    }

    #[test]
    fn theta_rules() {
        let a = inv(vec![s(1, Plus), s(2, Minus)]);
        assert_eq!(a.theta_image(1).unwrap(), SignedCoord { index: 1, negative: false });
        let b = inv(vec![pr(1, 2, Minus)]);
        assert_eq!(b.theta_image(1).unwrap(), SignedCoord { index: 1, negative: true });
        let c = inv(vec![pr(1, 3, Minus), s(2, Plus)]);
        assert_eq!(c.theta_image(1).unwrap(), SignedCoord { index: 3, negative: true });
        assert!(c.theta_image(4).is_err());
    }

    #[test]
    fn root_statuses() {
        let r = SimpleRoot::Short(1);
        assert_eq!(inv(vec![s(1, Plus), s(2, Plus)]).root_status(r), RootStatus::CompactImaginary);
        assert_eq!(inv(vec![s(1, Plus), s(2, Minus)]).root_status(r), RootStatus::NoncompactImaginary);
        assert_eq!(inv(vec![pr(1, 2, Plus)]).root_status(SimpleRoot::Long), RootStatus::ComplexNonTau);
        assert_eq!(inv(vec![pr(1, 2, Minus)]).root_status(r), RootStatus::Real);
    }

    #[test]
    fn tau_examples() {
        let t = |e| inv(e).tau().into_iter().collect::<Vec<_>>();
        assert_eq!(t(vec![s(1, Plus)]), vec![SimpleRoot::Long]);
        assert_eq!(t(vec![pr(1, 2, Plus)]), vec![SimpleRoot::Short(1)]);
        assert_eq!(t(vec![pr(1, 2, Minus)]), vec![SimpleRoot::Long, SimpleRoot::Short(1)]);
    }

    #[test]
    fn cross_actions() {
        let e21 = SimpleRoot::Short(1);
        assert_eq!(
            inv(vec![s(1, Plus), s(2, Minus)]).cross_action(e21),
            inv(vec![s(1, Minus), s(2, Plus)])
        );
        assert_eq!(inv(vec![pr(1, 2, Plus)]).cross_action(SimpleRoot::Long), inv(vec![pr(1, 2, Minus)]));
        assert_eq!(inv(vec![pr(1, 2, Plus)]).cross_action(e21), inv(vec![pr(1, 2, Plus)]));
        assert_eq!(
            inv(vec![pr(1, 3, Plus), s(2, Minus)]).cross_action(e21),
            inv(vec![s(1, Minus), pr(2, 3, Plus)])
        );
    }

    #[test]
    fn primed_interchange() {
        assert_eq!(
            inv(vec![pr(1, 3, Plus), pr(2, 4, Minus)]).interchange_prime(),
            inv(vec![pr(1, 4, Plus), pr(2, 3, Minus)])
        );
        assert_eq!(inv(vec![pr(1, 2, Plus)]).interchange_prime(), inv(vec![pr(1, 2, Plus)]));
        assert_eq!(
            inv(vec![s(1, Plus), s(2, Minus)]).interchange_prime(),
            inv(vec![s(1, Minus), s(2, Plus)])
        );
    }

    #[test]
    fn cayley() {
        assert_eq!(inv(vec![s(1, Plus), s(2, Minus)]).cayley_up(1).unwrap(), inv(vec![pr(1, 2, Plus)]));
        assert_eq!(inv(vec![s(1, Minus), s(2, Plus)]).cayley_up(1).unwrap(), inv(vec![pr(1, 2, Minus)]));
        assert_eq!(
            inv(vec![s(1, Plus), s(2, Plus)]).cayley_up(1),
            Err(InvolutionError::NotNoncompactImaginary(1))
        );
        assert_eq!(inv(vec![pr(1, 2, Plus)]).cayley_down(1).unwrap(), inv(vec![s(1, Plus), s(2, Minus)]));
        assert_eq!(inv(vec![pr(1, 2, Minus)]).cayley_down(1).unwrap(), inv(vec![s(1, Minus), s(2, Plus)]));
        assert_eq!(inv(vec![s(1, Plus), s(2, Minus)]).cayley_down(1), Err(InvolutionError::NotReal(1)));
    }

    #[test]
    fn wall_cross_examples() {
        let out = inv(vec![pr(1, 2, Plus)]).wall_cross(SimpleRoot::Long, SimpleRoot::Short(1)).unwrap();
        assert_eq!(out, {
            let mut v = vec![inv(vec![s(1, Plus), s(2, Minus)]), inv(vec![s(1, Minus), s(2, Plus)])];
            v.sort();
            v
        });
        let out = inv(vec![s(1, Plus), s(2, Minus), s(3, Minus)])
            .wall_cross(SimpleRoot::Short(1), SimpleRoot::Short(2))
            .unwrap();
        assert_eq!(out, vec![inv(vec![pr(1, 2, Plus), s(3, Minus)])]);
        assert!(matches!(
            inv(vec![s(1, Plus), s(2, Plus)]).wall_cross(SimpleRoot::Long, SimpleRoot::Short(1)),
            Err(InvolutionError::OutOfDomain { .. })
        ));
    }

    #[test]
    fn recurrence() {
        let t: Vec<u64> = (0..=6).map(involution_count).collect();
        assert_eq!(t, vec![1, 2, 6, 20, 76, 312, 1384]);
        for n in 0..=6 {
            assert_eq!(SignedInvolution::enumerate_all(n).count() as u64, involution_count(n));
        }
    }
}

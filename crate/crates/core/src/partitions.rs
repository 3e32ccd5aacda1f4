//! Young diagrams: boxes, arms, legs, corners, holes and enumeration.
//!
//! Rows and columns are 1-based. Row `i` has length `λ_i`; the box in row `i`
//! and column `j` carries the character `t1^(j-1) t2^(i-1)`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::exact::{Ground, Mono};
use crate::Error;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

/// A box of a diagram, 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "boxes are 1-based");
        Cell { row, col }
    }

    /// Exponents of the box character `t1^(col-1) t2^(row-1)`.
    pub fn chi(self) -> Mono {
        Mono::new(self.col as i32 - 1, self.row as i32 - 1)
    }
}

/// The character of a box as a ground scalar.
pub fn chi<G: Ground>(g: &G, c: Cell) -> G::F {
    let m = c.chi();
    g.mono(m.a, m.b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Boxes strictly to the left in the same row.
    Left,
    /// Boxes strictly above in the same column.
    Above,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `i`; zero past the last row.
    pub fn row(&self, i: usize) -> usize {
        if i >= 1 && i <= self.0.len() {
            self.0[i - 1]
        } else {
            0
        }
    }

    /// Length of column `j`.
    pub fn col(&self, j: usize) -> usize {
        self.0.iter().take_while(|&&x| x >= j).count()
    }

    pub fn conjugate(&self) -> Self {
        let w = self.row(1);
        Partition((1..=w).map(|j| self.col(j)).collect())
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        c.row >= 1 && c.col >= 1 && c.col <= self.row(c.row)
    }

    /// Boxes in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &l)| (1..=l).map(move |j| Cell::new(i + 1, j)))
    }

    fn check(&self, c: Cell) -> Result<(), Error> {
        if self.contains_cell(c) {
            Ok(())
        } else {
            Err(Error::BoxOutside(c.row, c.col))
        }
    }

    /// `λ_i - j`: boxes to the right of `c` in its row.
    pub fn leg(&self, c: Cell) -> Result<usize, Error> {
        self.check(c)?;
        Ok(self.row(c.row) - c.col)
    }

    /// `λ'_j - i`: boxes below `c` in its column.
    pub fn arm(&self, c: Cell) -> Result<usize, Error> {
        self.check(c)?;
        Ok(self.col(c.col) - c.row)
    }

    /// Rows `k` such that adding a box at the end of row `k` gives a partition.
    pub fn addable_rows(&self) -> Vec<usize> {
        (1..=self.len() + 1)
            .filter(|&k| k == 1 || self.row(k) < self.row(k - 1))
            .collect()
    }

    /// Rows `k` whose last box can be removed.
    pub fn removable_rows(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&k| self.row(k) > self.row(k + 1))
            .collect()
    }

    pub fn is_addable(&self, k: usize) -> bool {
        k >= 1 && k <= self.len() + 1 && (k == 1 || self.row(k) < self.row(k - 1))
    }

    pub fn is_removable(&self, k: usize) -> bool {
        k >= 1 && k <= self.len() && self.row(k) > self.row(k + 1)
    }

    /// `λ + k`.
    pub fn add_box(&self, k: usize) -> Result<Self, Error> {
        if !self.is_addable(k) {
            return Err(Error::InvalidRow(k, "addable"));
        }
        let mut p = self.0.clone();
        if k == p.len() + 1 {
            p.push(1);
        } else {
            p[k - 1] += 1;
        }
        Ok(Partition(p))
    }

    /// `λ - k`.
    pub fn remove_box(&self, k: usize) -> Result<Self, Error> {
        if !self.is_removable(k) {
            return Err(Error::InvalidRow(k, "removable"));
        }
        let mut p = self.0.clone();
        p[k - 1] -= 1;
        if p[k - 1] == 0 {
            p.pop();
        }
        Ok(Partition(p))
    }

    /// Whether every row of `other` fits inside the matching row of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (1..=other.len()).all(|i| self.row(i) >= other.row(i))
    }

    /// Boxes of `self / inner` in row-major order; `None` unless `inner ⊆ self`.
    pub fn skew_cells(&self, inner: &Partition) -> Option<Vec<Cell>> {
        if !self.contains(inner) {
            return None;
        }
        Some(
            (1..=self.len())
                .flat_map(|i| (inner.row(i) + 1..=self.row(i)).map(move |j| Cell::new(i, j)))
                .collect(),
        )
    }

    /// The rows of `self / inner` if it is a vertical strip (at most one box per row).
    pub fn vertical_strip_rows(&self, inner: &Partition) -> Option<Vec<usize>> {
        if !self.contains(inner) {
            return None;
        }
        let mut rows = Vec::new();
        for i in 1..=self.len() {
            match self.row(i) - inner.row(i) {
                0 => {}
                1 => rows.push(i),
                _ => return None,
            }
        }
        Some(rows)
    }

    /// `Σ₁` (left) or `Σ₂` (above) for the box position `(k, col)`, which may
    /// be a hole of the diagram.
    pub fn sigma_boxes(&self, k: usize, col: usize, side: Side) -> Vec<Cell> {
        match side {
            Side::Left => (1..col)
                .map(|j| Cell::new(k, j))
                .filter(|&c| self.contains_cell(c))
                .collect(),
            Side::Above => (1..k)
                .map(|i| Cell::new(i, col))
                .filter(|&c| self.contains_cell(c))
                .collect(),
        }
    }

    /// Dominance: `self ⪰ other` (partial sums of `self` dominate).
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=n {
            a += self.row(i);
            b += other.row(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// `Σ_i λ_i (λ_i - 1) / 2`.
    pub fn n_conj(&self) -> usize {
        self.0.iter().map(|&x| x * (x.saturating_sub(1)) / 2).sum()
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            go(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions with at most `n` boxes, by size then reverse lex.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// How ties between dominance-incomparable partitions are broken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    ReverseLex,
    /// Compares conjugates lexicographically (reversed), an independent refinement.
    Conjugate,
}

/// Partitions of `n` in a total order refining dominance, largest first.
pub fn dominance_order(n: usize, tie: TieBreak) -> Vec<Partition> {
    let mut v = partitions_of(n);
    let key = |p: &Partition| -> Vec<usize> {
        match tie {
            TieBreak::ReverseLex => p.0.clone(),
            // λ ⪰ μ iff μ' ⪰ λ', so smaller conjugate means larger here
            TieBreak::Conjugate => p.conjugate().0,
        }
    };
    // a topological sort: repeatedly take the best maximal element
    let mut out = Vec::with_capacity(v.len());
    while !v.is_empty() {
        let maximal: Vec<usize> = (0..v.len())
            .filter(|&i| !(0..v.len()).any(|j| j != i && v[j].dominates(&v[i])))
            .collect();
        let pick = *maximal
            .iter()
            .max_by(|&&a, &&b| match tie {
                TieBreak::ReverseLex => key(&v[a]).cmp(&key(&v[b])),
                TieBreak::Conjugate => key(&v[b]).cmp(&key(&v[a])),
            })
            .unwrap();
        out.push(v.remove(pick));
    }
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected [a,b,...], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{x:?}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if parts.contains(&0) {
            return Err(Error::Parse("parts must be positive".into()));
        }
        Partition::new(parts)
    }
}

impl From<&[usize]> for Partition {
    fn from(p: &[usize]) -> Self {
        Partition::new(p.to_vec()).expect("weakly decreasing parts")
    }
}

impl<const N: usize> From<[usize; N]> for Partition {
    fn from(p: [usize; N]) -> Self {
        Partition::new(p.to_vec()).expect("weakly decreasing parts")
    }
}

/// Compares by size first, then reverse lexicographically (larger first).
pub fn graded_cmp(a: &Partition, b: &Partition) -> Ordering {
    a.size().cmp(&b.size()).then_with(|| b.cmp(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p<const N: usize>(x: [usize; N]) -> Partition {
        Partition::from(x)
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(4).len(), 5);
        assert_eq!(partitions_of(6).len(), 11);
        assert_eq!(partitions_of(3), vec![p([3]), p([2, 1]), p([1, 1, 1])]);
    }

    #[test]
    fn arms_and_legs() {
        let one = p([1]);
        assert_eq!(one.leg(Cell::new(1, 1)), Ok(0));
        assert_eq!(one.arm(Cell::new(1, 1)), Ok(0));
        let l = p([3, 1]);
        assert_eq!(l.leg(Cell::new(1, 1)), Ok(2));
        assert_eq!(l.arm(Cell::new(1, 1)), Ok(1));
        assert_eq!(l.leg(Cell::new(1, 3)), Ok(0));
        assert_eq!(l.arm(Cell::new(1, 3)), Ok(0));
        assert_eq!(l.arm(Cell::new(2, 2)), Err(Error::BoxOutside(2, 2)));
    }

    #[test]
    fn corners_and_holes() {
        assert_eq!(Partition::empty().addable_rows(), vec![1]);
        assert!(Partition::empty().removable_rows().is_empty());
        assert_eq!(p([2, 2]).addable_rows(), vec![1, 3]);
        assert_eq!(p([2, 2]).removable_rows(), vec![2]);
        assert_eq!(p([3, 1]).addable_rows(), vec![1, 2, 3]);
        assert_eq!(p([3, 1]).removable_rows(), vec![1, 2]);
        assert!(p([2, 2]).add_box(2).is_err());
        assert_eq!(p([2, 2]).remove_box(2).unwrap(), p([2, 1]));
    }

    #[test]
    fn characters() {
        assert_eq!(Cell::new(1, 1).chi(), Mono::new(0, 0));
        assert_eq!(Cell::new(1, 2).chi(), Mono::new(1, 0));
        assert_eq!(Cell::new(3, 1).chi(), Mono::new(0, 2));
    }

    #[test]
    fn sigma_sets() {
        assert_eq!(p([1]).sigma_boxes(1, 2, Side::Left), vec![Cell::new(1, 1)]);
        assert!(p([1]).sigma_boxes(1, 2, Side::Above).is_empty());
        assert!(p([2, 2]).sigma_boxes(3, 1, Side::Left).is_empty());
        assert_eq!(
            p([2, 2]).sigma_boxes(3, 1, Side::Above),
            vec![Cell::new(1, 1), Cell::new(2, 1)]
        );
        let e = Partition::empty();
        assert!(e.sigma_boxes(1, 1, Side::Left).is_empty());
        assert!(e.sigma_boxes(1, 1, Side::Above).is_empty());
    }

    #[test]
    fn corner_hole_balance_and_duality() {
        for n in 0..=8 {
            for l in partitions_of(n) {
                assert_eq!(l.addable_rows().len(), l.removable_rows().len() + 1);
                let c = l.conjugate();
                assert_eq!(c.conjugate(), l);
                for b in l.cells() {
                    let t = Cell::new(b.col, b.row);
                    assert_eq!(l.arm(b).unwrap(), c.leg(t).unwrap());
                }
                let mut chis: Vec<Mono> = l.cells().map(Cell::chi).collect();
                chis.sort();
                chis.dedup();
                assert_eq!(chis.len(), n);
            }
        }
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(p([3, 1, 1]).to_string(), "[3,1,1]");
        assert_eq!(Partition::empty().to_string(), "[]");
        assert_eq!("[3,1,1]".parse::<Partition>().unwrap(), p([3, 1, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("3,1".parse::<Partition>().is_err());
    }

    #[test]
    fn dominance_orders_refine() {
        for n in 0..=7 {
            for tie in [TieBreak::ReverseLex, TieBreak::Conjugate] {
                let v = dominance_order(n, tie);
                assert_eq!(v.len(), partitions_of(n).len());
                for i in 0..v.len() {
                    for j in i + 1..v.len() {
                        assert!(!v[j].dominates(&v[i]) || v[i] == v[j]);
                    }
                }
            }
        }
        // the two refinements differ once dominance stops being total
        assert_ne!(
            dominance_order(6, TieBreak::ReverseLex),
            dominance_order(6, TieBreak::Conjugate)
        );
    }
}

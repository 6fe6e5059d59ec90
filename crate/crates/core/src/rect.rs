//! Rectangle sequences and their derived statistics.
//!
//! A sequence R = (R_1, ..., R_t) of rectangles, R_i with η_i rows and μ_i
//! columns, carries the concatenated weight γ(R), the containment counts
//! r_{i,j}(R), the degree pivot n(R), and the height multisets τ^k(R) that
//! define the monotonicity order.

use crate::error::{add, choose2, Error, Result};
use crate::partition::{dominates, Partition, Weight};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A rectangular partition with `rows` rows and `cols` columns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Rect {
    pub rows: i64,
    pub cols: i64,
}

impl Rect {
    pub fn new(rows: i64, cols: i64) -> Self {
        assert!(rows >= 1 && cols >= 1, "degenerate rectangle {rows}x{cols}");
        Rect { rows, cols }
    }

    pub fn size(&self) -> i64 {
        self.rows * self.cols
    }

    pub fn transpose(&self) -> Rect {
        Rect { rows: self.cols, cols: self.rows }
    }

    /// The rectangle as a partition (cols repeated rows times).
    pub fn as_partition(&self) -> Partition {
        Partition::new(vec![self.cols; self.rows as usize])
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}", self.rows, self.cols)
    }
}

/// An ordered sequence of rectangles.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RectangleSequence {
    rects: Vec<Rect>,
}

impl RectangleSequence {
    pub fn new(rects: Vec<Rect>) -> Self {
        RectangleSequence { rects }
    }

    pub fn empty() -> Self {
        RectangleSequence { rects: Vec::new() }
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    /// Total number of cells Σ |R_i|.
    pub fn total_cells(&self) -> i64 {
        self.rects.iter().fold(0, |acc, r| add(acc, r.size()))
    }

    /// Total number of rows Σ η_i — the number of letters n.
    pub fn total_rows(&self) -> i64 {
        self.rects.iter().fold(0, |acc, r| add(acc, r.rows))
    }

    /// γ(R): for each rectangle in order, μ_i repeated η_i times.
    pub fn gamma_weight(&self) -> Weight {
        let mut entries = Vec::new();
        for r in &self.rects {
            entries.extend(std::iter::repeat(r.cols).take(r.rows as usize));
        }
        Weight::new(entries)
    }

    /// r_{i,j}(R): the number of rectangles with η_a ≥ i and μ_a ≥ j.
    ///
    /// The row index runs over the height extent, matching the matrix in the
    /// source material; n(R) is insensitive to the orientation since the sum
    /// ranges over all cells.
    pub fn r_count(&self, i: i64, j: i64) -> i64 {
        assert!(i >= 1 && j >= 1);
        self.rects.iter().filter(|r| r.rows >= i && r.cols >= j).count() as i64
    }

    /// n(R) = Σ_{(i,j)} C(r_{i,j}(R), 2).
    pub fn n_stat(&self) -> i64 {
        let max_rows = self.rects.iter().map(|r| r.rows).max().unwrap_or(0);
        let max_cols = self.rects.iter().map(|r| r.cols).max().unwrap_or(0);
        let mut total = 0;
        for i in 1..=max_rows {
            for j in 1..=max_cols {
                total = add(total, choose2(self.r_count(i, j)));
            }
        }
        total
    }

    /// τ^k(R): heights of the rectangles with exactly k columns, sorted.
    pub fn tau_partition(&self, k: i64) -> Partition {
        assert!(k >= 1);
        Partition::from_multiset(
            self.rects.iter().filter(|r| r.cols == k).map(|r| r.rows).collect(),
        )
    }

    /// Dominant iff γ(R) is weakly decreasing.
    pub fn is_dominant(&self) -> bool {
        self.gamma_weight().is_weakly_decreasing()
    }

    /// R ⊵ R' iff τ^k(R) ⊵ τ^k(R') for every k; size mismatches compare false.
    pub fn seq_dominates(&self, other: &RectangleSequence) -> bool {
        let max_k = self
            .rects
            .iter()
            .chain(other.rects.iter())
            .map(|r| r.cols)
            .max()
            .unwrap_or(0);
        for k in 1..=max_k {
            match dominates(&self.tau_partition(k), &other.tau_partition(k)) {
                Ok(true) => {}
                Ok(false) | Err(Error::SizeMismatch { .. }) => return false,
                Err(_) => return false,
            }
        }
        true
    }

    /// Every rectangle transposed, order kept.
    pub fn transpose(&self) -> RectangleSequence {
        RectangleSequence { rects: self.rects.iter().map(Rect::transpose).collect() }
    }

    /// Reverse order.
    pub fn reverse(&self) -> RectangleSequence {
        let mut rects = self.rects.clone();
        rects.reverse();
        RectangleSequence { rects }
    }

    /// rows(R): each rectangle sliced into single rows, in order.
    pub fn rows(&self) -> RectangleSequence {
        let mut rects = Vec::new();
        for r in &self.rects {
            rects.extend(std::iter::repeat(Rect::new(1, r.cols)).take(r.rows as usize));
        }
        RectangleSequence { rects }
    }

    /// The tail (R_2, R_3, ...).
    pub fn tail(&self) -> RectangleSequence {
        RectangleSequence { rects: self.rects[1.min(self.rects.len())..].to_vec() }
    }

    /// R̃ with respect to a k-column box: R̃_i = ((k-μ_i)^{η_i}).
    /// Requires k ≥ μ_i for all i; a rectangle with k = μ_i degenerates, so
    /// k must exceed every μ_i strictly for the result to stay a sequence of
    /// genuine rectangles of the same length.
    pub fn box_complement(&self, k: i64) -> Result<RectangleSequence> {
        let mut rects = Vec::with_capacity(self.rects.len());
        for r in &self.rects {
            if k <= r.cols {
                return Err(Error::Range(format!(
                    "box width {k} does not exceed rectangle {r}"
                )));
            }
            rects.push(Rect::new(r.rows, k - r.cols));
        }
        Ok(RectangleSequence { rects })
    }

    /// Apply a permutation of [t]: the result places R_i at position u(i).
    pub fn permuted(&self, u: &[usize]) -> RectangleSequence {
        assert_eq!(u.len(), self.rects.len());
        let mut rects = vec![Rect::new(1, 1); self.rects.len()];
        for (i, &ui) in u.iter().enumerate() {
            rects[ui - 1] = self.rects[i];
        }
        RectangleSequence { rects }
    }

    /// Swap rectangles p and p+1 (1-indexed).
    pub fn swap_adjacent(&self, p: usize) -> RectangleSequence {
        assert!(p >= 1 && p < self.rects.len());
        let mut rects = self.rects.clone();
        rects.swap(p - 1, p);
        RectangleSequence { rects }
    }
}

impl fmt::Display for RectangleSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rects.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn running_example() -> RectangleSequence {
        RectangleSequence::new(vec![Rect::new(2, 3), Rect::new(4, 2), Rect::new(3, 1)])
    }

    #[test]
    fn gamma_weight_examples() {
        assert_eq!(
            running_example().gamma_weight(),
            Weight::new(vec![3, 3, 2, 2, 2, 2, 1, 1, 1])
        );
        assert_eq!(RectangleSequence::empty().gamma_weight(), Weight::new(vec![]));
        assert_eq!(
            RectangleSequence::new(vec![Rect::new(2, 3)]).gamma_weight(),
            Weight::new(vec![3, 3])
        );
    }

    #[test]
    fn r_count_matches_worked_matrix() {
        let r = running_example();
        // (r_{i,j}) = [3 2 1 0 / 3 2 1 0 / 2 1 0 0 / 1 1 0 0]
        let expect = [[3, 2, 1, 0], [3, 2, 1, 0], [2, 1, 0, 0], [1, 1, 0, 0]];
        for (i, row) in expect.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(r.r_count(i as i64 + 1, j as i64 + 1), v, "({i},{j})");
            }
        }
        assert_eq!(r.r_count(5, 1), 0);
    }

    #[test]
    fn n_stat_examples() {
        assert_eq!(running_example().n_stat(), 9);
        assert_eq!(RectangleSequence::new(vec![Rect::new(2, 3)]).n_stat(), 0);
        assert_eq!(
            RectangleSequence::new(vec![Rect::new(1, 1), Rect::new(1, 3)]).n_stat(),
            1
        );
    }

    #[test]
    fn n_stat_invariances() {
        let r = running_example();
        let rearranged = RectangleSequence::new(vec![
            Rect::new(3, 1),
            Rect::new(2, 3),
            Rect::new(4, 2),
        ]);
        assert_eq!(r.n_stat(), rearranged.n_stat());
        assert_eq!(r.n_stat(), r.transpose().n_stat());
    }

    #[test]
    fn tau_examples() {
        let r = running_example();
        assert_eq!(r.tau_partition(1), Partition::new(vec![3]));
        assert_eq!(r.tau_partition(2), Partition::new(vec![4]));
        assert_eq!(r.tau_partition(3), Partition::new(vec![2]));
        assert_eq!(r.tau_partition(7), Partition::empty());
        let split = RectangleSequence::new(vec![
            Rect::new(3, 3),
            Rect::new(2, 2),
            Rect::new(2, 2),
        ]);
        assert_eq!(split.tau_partition(2), Partition::new(vec![2, 2]));
    }

    #[test]
    fn dominance_of_sequences() {
        let r = running_example();
        // R' = ((3),(3),(2,2,2,2),(1,1,1))
        let rp = RectangleSequence::new(vec![
            Rect::new(1, 3),
            Rect::new(1, 3),
            Rect::new(4, 2),
            Rect::new(3, 1),
        ]);
        assert!(r.seq_dominates(&rp));
        assert!(!rp.seq_dominates(&r));
        assert!(r.seq_dominates(&r));
        let shuffled = RectangleSequence::new(vec![
            Rect::new(4, 2),
            Rect::new(3, 1),
            Rect::new(2, 3),
        ]);
        assert!(r.seq_dominates(&shuffled) && shuffled.seq_dominates(&r));
    }

    #[test]
    fn dominance_flags() {
        assert!(running_example().is_dominant());
        assert!(!RectangleSequence::new(vec![Rect::new(1, 1), Rect::new(1, 3)]).is_dominant());
        assert!(!RectangleSequence::new(vec![
            Rect::new(3, 2),
            Rect::new(2, 4),
            Rect::new(1, 3)
        ])
        .is_dominant());
    }

    #[test]
    fn rows_and_complement() {
        let r = running_example();
        let rows = r.rows();
        assert_eq!(rows.len(), 9);
        assert_eq!(rows.gamma_weight(), r.gamma_weight());
        let dual = r.box_complement(5).unwrap();
        assert_eq!(
            dual,
            RectangleSequence::new(vec![Rect::new(2, 2), Rect::new(4, 3), Rect::new(3, 4)])
        );
        assert!(r.box_complement(3).is_err());
    }
}

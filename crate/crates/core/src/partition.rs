//! Partitions and integer weights.
//!
//! A [`Partition`] is a weakly decreasing sequence of positive integers;
//! trailing zeros are never stored, so equality is canonical.  A [`Weight`]
//! is an arbitrary integer vector of explicit length.

use crate::error::{add, Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A partition: weakly decreasing positive parts, no stored trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// Build from any nonnegative weakly decreasing prefix; trailing zeros
    /// are trimmed.  Panics on a malformed input — partitions are constructed
    /// from trusted enumeration everywhere, so a bad one is a logic error.
    pub fn new(mut parts: Vec<i64>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        for w in parts.windows(2) {
            assert!(w[0] >= w[1], "parts not weakly decreasing: {parts:?}");
        }
        if let Some(&last) = parts.last() {
            assert!(last > 0, "negative part in {parts:?}");
        }
        Partition { parts }
    }

    /// Checked construction for data coming from outside (JSON, CLI flags).
    pub fn try_new(mut parts: Vec<i64>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.last().is_some_and(|&p| p <= 0) {
            return Err(Error::Format(format!("not a partition: {parts:?}")));
        }
        Ok(Partition { parts })
    }

    /// Sort an arbitrary nonnegative multiset into a partition.
    pub fn from_multiset(mut parts: Vec<i64>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// The i-th part (1-indexed), padding with zeros beyond the length.
    pub fn part(&self, i: usize) -> i64 {
        if i >= 1 && i <= self.parts.len() {
            self.parts[i - 1]
        } else {
            0
        }
    }

    /// |λ| — the number of cells.
    pub fn size(&self) -> i64 {
        self.parts.iter().fold(0, |acc, &p| add(acc, p))
    }

    /// Transpose (conjugate) partition.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(1);
        let mut t = Vec::with_capacity(cols as usize);
        for j in 1..=cols {
            t.push(self.parts.iter().filter(|&&p| p >= j).count() as i64);
        }
        Partition { parts: t }
    }

    /// Cellwise containment μ ⊆ λ.
    pub fn contains(&self, other: &Partition) -> bool {
        (1..=other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// Multiplicity of the part size n.
    pub fn multiplicity(&self, n: i64) -> i64 {
        self.parts.iter().filter(|&&p| p == n).count() as i64
    }

    /// Q_n(λ): number of cells in the first n columns, Σ min(λ_i, n).
    pub fn cells_in_first_columns(&self, n: i64) -> i64 {
        self.parts.iter().fold(0, |acc, &p| add(acc, p.min(n)))
    }

    /// The entries padded with zeros to the given length.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        let mut v = self.parts.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// All partitions of `size` whose parts are at most `max_part`.
    pub fn enumerate(size: i64, max_part: i64) -> Vec<Partition> {
        fn rec(remaining: i64, max: i64, acc: &mut Vec<i64>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: acc.clone() });
                return;
            }
            let mut p = max.min(remaining);
            while p >= 1 {
                acc.push(p);
                rec(remaining - p, p, acc, out);
                acc.pop();
                p -= 1;
            }
        }
        let mut out = Vec::new();
        if size >= 0 {
            rec(size, max_part, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Dominance order: every prefix sum of α is at least that of β.
/// Comparing partitions of different sizes is a caller error.
pub fn dominates(alpha: &Partition, beta: &Partition) -> Result<bool> {
    let (sa, sb) = (alpha.size(), beta.size());
    if sa != sb {
        return Err(Error::SizeMismatch { left: sa, right: sb });
    }
    let k = alpha.len().max(beta.len());
    let (mut pa, mut pb) = (0, 0);
    for i in 1..=k {
        pa = add(pa, alpha.part(i));
        pb = add(pb, beta.part(i));
        if pa < pb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// An integral weight: arbitrary integers, explicit length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight {
    entries: Vec<i64>,
}

impl Weight {
    pub fn new(entries: Vec<i64>) -> Self {
        Weight { entries }
    }

    pub fn zero(len: usize) -> Self {
        Weight { entries: vec![0; len] }
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, i: usize) -> i64 {
        self.entries[i]
    }

    pub fn sum(&self) -> i64 {
        self.entries.iter().fold(0, |acc, &e| add(acc, e))
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn concat(&self, other: &Weight) -> Weight {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Weight { entries }
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Weight {
        Weight { entries: self.entries[range].to_vec() }
    }

    /// Reinterpret as a partition; fails when not weakly decreasing ≥ 0.
    pub fn to_partition(&self) -> Result<Partition> {
        Partition::try_new(self.entries.clone())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dominance_examples() {
        let p = |v: &[i64]| Partition::new(v.to_vec());
        assert_eq!(dominates(&p(&[3, 1]), &p(&[2, 2])), Ok(true));
        assert_eq!(dominates(&p(&[2, 2]), &p(&[2, 2])), Ok(true));
        assert_eq!(dominates(&p(&[2, 2]), &p(&[3, 1])), Ok(false));
        assert!(dominates(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn dominance_is_partial_order_small() {
        // Reflexive, antisymmetric, transitive over all partitions of 6.
        let all = Partition::enumerate(6, 6);
        for a in &all {
            assert!(dominates(a, a).unwrap());
            for b in &all {
                let ab = dominates(a, b).unwrap();
                let ba = dominates(b, a).unwrap();
                if ab && ba {
                    assert_eq!(a, b);
                }
                for c in &all {
                    if ab && dominates(b, c).unwrap() {
                        assert!(dominates(a, c).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn transpose_involution() {
        for size in 0..=8 {
            for p in Partition::enumerate(size, size) {
                assert_eq!(p.transpose().transpose(), p);
                assert_eq!(p.transpose().size(), p.size());
            }
        }
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]), Partition::new(vec![2, 1]));
        assert!(Partition::try_new(vec![1, 2]).is_err());
    }

    #[test]
    fn enumerate_counts() {
        // p(8) = 22
        assert_eq!(Partition::enumerate(8, 8).len(), 22);
        assert_eq!(Partition::enumerate(0, 3).len(), 1);
        // partitions of 5 with parts <= 2: (2,2,1), (2,1,1,1), (1^5)
        assert_eq!(Partition::enumerate(5, 2).len(), 3);
    }
}

//! Words, the lattice property, charge and cocharge, and the crystal
//! reflection (conjugation) operators.
//!
//! Charge follows the standard-subword ranking procedure: standard subwords
//! are extracted cyclically starting from the rightmost available 1 and
//! scanning leftward, and each subword is scored by indices that increase
//! exactly when the next letter sits to the right of the previous one.
//! Cocharge is the complement with respect to n(content).  Words whose
//! content is not a partition are first normalized by conjugation
//! automorphisms along the shortest sorting permutation.

use crate::error::{add, Error, Result};
use crate::partition::Partition;
use serde::{Deserialize, Serialize};
use std::fmt;

/// A word: a sequence of positive integer letters.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word {
    letters: Vec<i64>,
}

impl Word {
    pub fn new(letters: Vec<i64>) -> Self {
        assert!(letters.iter().all(|&x| x >= 1), "letters must be positive: {letters:?}");
        Word { letters }
    }

    pub fn empty() -> Self {
        Word { letters: Vec::new() }
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn reverse(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// Multiplicity vector of the letters 1..=n (n = largest letter when 0).
    pub fn content(&self, n: Option<i64>) -> Vec<i64> {
        let n = n.unwrap_or_else(|| self.letters.iter().copied().max().unwrap_or(0));
        let mut c = vec![0i64; n as usize];
        for &x in &self.letters {
            if x <= n {
                c[(x - 1) as usize] += 1;
            }
        }
        c
    }

    /// Keep only letters inside the closed interval.
    pub fn restrict(&self, lo: i64, hi: i64) -> Word {
        Word {
            letters: self.letters.iter().copied().filter(|&x| lo <= x && x <= hi).collect(),
        }
    }

    /// Replace each letter by n+1-x.
    pub fn complement(&self, n: i64) -> Word {
        Word { letters: self.letters.iter().map(|&x| n + 1 - x).collect() }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 && (*x >= 10 || self.letters[i - 1] >= 10) {
                write!(f, ".")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// True iff every suffix has weakly decreasing letter multiplicities
/// relative to the interval's order.  Letters outside the interval error.
pub fn is_lattice(w: &Word, lo: i64, hi: i64) -> Result<bool> {
    let width = (hi - lo + 1).max(0) as usize;
    let mut counts = vec![0i64; width];
    for &x in w.letters().iter().rev() {
        if x < lo || x > hi {
            return Err(Error::Alphabet { letter: x, lo, hi });
        }
        let idx = (x - lo) as usize;
        counts[idx] += 1;
        if idx > 0 && counts[idx] > counts[idx - 1] {
            return Ok(false);
        }
    }
    Ok(true)
}

/// n(μ) = Σ (i-1) μ_i, the charge/cocharge pivot for content μ.
pub fn n_of_content(mu: &Partition) -> i64 {
    mu.parts()
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &m)| add(acc, (i as i64) * m))
}

/// Positions of one standard subword extracted from `avail`, or None when
/// no letter 1 remains.  Scans right-to-left cyclically: the rightmost
/// available 1, then the next larger letter continuing leftward.
fn extract_standard_subword(letters: &[i64], used: &mut [bool]) -> Option<Vec<usize>> {
    let m = letters.len();
    let start = (0..m).rev().find(|&i| !used[i] && letters[i] == 1)?;
    used[start] = true;
    let mut positions = vec![start];
    let mut cursor = start;
    let mut next = 2i64;
    loop {
        if !(0..m).any(|i| !used[i] && letters[i] == next) {
            break;
        }
        // walk leftward from cursor, wrapping once
        let mut found = None;
        for step in 1..=m {
            let i = (cursor + m - step) % m;
            if !used[i] && letters[i] == next {
                found = Some(i);
                break;
            }
        }
        match found {
            Some(i) => {
                used[i] = true;
                positions.push(i);
                cursor = i;
                next += 1;
            }
            None => break,
        }
    }
    Some(positions)
}

/// The cyclic standard-subword decomposition of a word of partition content.
/// Each subword is returned as its positions in the host word, in letter
/// order (position of 1 first).
pub fn standard_subword_positions(w: &Word) -> Vec<Vec<usize>> {
    let mut used = vec![false; w.len()];
    let mut out = Vec::new();
    while let Some(sub) = extract_standard_subword(w.letters(), &mut used) {
        out.push(sub);
    }
    debug_assert!(used.iter().all(|&u| u));
    out
}

/// Charge of a standard subword given by letter-ordered positions:
/// index(1) = 0, index(r+1) = index(r) + 1 when r+1 lies to the right of r.
fn charge_of_standard_positions(positions: &[usize]) -> i64 {
    let mut index = 0i64;
    let mut total = 0i64;
    for pair in positions.windows(2) {
        if pair[1] > pair[0] {
            index += 1;
        }
        total = add(total, index);
    }
    total
}

fn charge_partition_content(w: &Word) -> i64 {
    standard_subword_positions(w)
        .iter()
        .fold(0, |acc, sub| add(acc, charge_of_standard_positions(sub)))
}

/// Shortest normalization to partition content by conjugation automorphisms.
pub fn normalize_content(w: &Word) -> Word {
    let mut w = w.clone();
    loop {
        let content = w.content(None);
        match content.windows(2).position(|pair| pair[0] < pair[1]) {
            Some(i) => w = conj_automorphism_word((i + 1) as i64, &w),
            None => return w,
        }
    }
}

/// Charge of any word; non-partition content is first normalized.
pub fn charge(w: &Word) -> i64 {
    let w = normalize_content(w);
    charge_partition_content(&w)
}

/// Cocharge: n(content) - charge, after the same normalization.
pub fn cocharge(w: &Word) -> i64 {
    let w = normalize_content(w);
    let mu = Partition::new(w.content(None));
    n_of_content(&mu) - charge_partition_content(&w)
}

/// The i-th crystal reflection operator on words.
///
/// Letters i+1 act as openers matched against the nearest following i; the
/// unmatched subword i^p (i+1)^q becomes i^q (i+1)^p.  Swaps content
/// coordinates i and i+1 and commutes with Knuth equivalence.
pub fn conj_automorphism_word(i: i64, w: &Word) -> Word {
    assert!(i >= 1);
    let mut letters = w.letters().to_vec();
    let mut open: Vec<usize> = Vec::new(); // unmatched positions of i+1 so far
    let mut unmatched_low: Vec<usize> = Vec::new(); // unmatched positions of i
    for (pos, &x) in letters.iter().enumerate() {
        if x == i + 1 {
            open.push(pos);
        } else if x == i {
            if open.pop().is_none() {
                unmatched_low.push(pos);
            }
        }
    }
    // unmatched i's all precede unmatched (i+1)'s; i^p (i+1)^q -> i^q (i+1)^p
    let q = open.len();
    let mut positions = unmatched_low;
    positions.extend(open);
    for (rank, &pos) in positions.iter().enumerate() {
        letters[pos] = if rank < q { i } else { i + 1 };
    }
    Word { letters }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[i64]) -> Word {
        Word::new(s.to_vec())
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(is_lattice(&w(&[2, 2, 2, 1, 1, 1]), 1, 2), Ok(true));
        assert_eq!(is_lattice(&w(&[6, 5, 6, 4, 5, 4, 3, 3]), 3, 6), Ok(true));
        assert_eq!(is_lattice(&w(&[2]), 1, 2), Ok(false));
        assert!(is_lattice(&w(&[7]), 1, 2).is_err());
        assert_eq!(is_lattice(&Word::empty(), 1, 3), Ok(true));
    }

    #[test]
    fn cocharge_worked_values() {
        // The four values from the charge_R computation.
        assert_eq!(cocharge(&w(&[2, 1, 3, 1, 1, 2, 4])), 3);
        assert_eq!(cocharge(&w(&[3, 2, 1, 2, 1, 1])), 4);
        assert_eq!(cocharge(&w(&[3, 2, 1, 2, 1, 1, 4])), 6);
        assert_eq!(cocharge(&w(&[2, 1, 3, 1, 1, 2])), 2);
        // The same values are reached from the unnormalized words.
        assert_eq!(cocharge(&w(&[2, 1, 3, 1, 2, 2, 4])), 3);
        assert_eq!(cocharge(&w(&[3, 2, 1, 2, 1, 2])), 4);
        assert_eq!(cocharge(&w(&[3, 2, 1, 2, 1, 2, 4])), 6);
        assert_eq!(cocharge(&w(&[2, 1, 3, 1, 2, 2])), 2);
    }

    #[test]
    fn cocharge_trivia() {
        assert_eq!(cocharge(&w(&[1, 1, 1, 1])), 0);
        assert_eq!(cocharge(&Word::empty()), 0);
        assert_eq!(charge(&Word::empty()), 0);
        // lattice word of content (3,2,1) has charge 0
        assert_eq!(charge(&w(&[3, 2, 2, 1, 1, 1])), 0);
    }

    #[test]
    fn charge_cocharge_reverse_standard() {
        // charge(w) = cocharge(reverse(w)) for standard words.
        fn permutations(n: i64) -> Vec<Vec<i64>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for slot in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(slot, n);
                    out.push(q);
                }
            }
            out
        }
        for n in 1..=6 {
            for p in permutations(n) {
                let word = w(&p);
                assert_eq!(charge(&word), cocharge(&word.reverse()), "{word}");
            }
        }
    }

    #[test]
    fn conj_automorphism_examples() {
        assert_eq!(conj_automorphism_word(1, &w(&[1])), w(&[2]));
        assert_eq!(conj_automorphism_word(1, &w(&[1, 2])), w(&[1, 2]));
        // worked normalizations
        assert_eq!(
            conj_automorphism_word(1, &w(&[2, 1, 3, 1, 2, 2, 4])),
            w(&[2, 1, 3, 1, 1, 2, 4])
        );
        assert_eq!(conj_automorphism_word(1, &w(&[3, 2, 1, 2, 1, 2])), w(&[3, 2, 1, 2, 1, 1]));
    }

    #[test]
    fn conj_automorphism_relations() {
        // involution, content swap, braid and commutation on small words
        fn words(len: usize, alphabet: i64) -> Vec<Word> {
            let mut out = vec![Vec::new()];
            for _ in 0..len {
                out = out
                    .into_iter()
                    .flat_map(|v: Vec<i64>| {
                        (1..=alphabet).map(move |x| {
                            let mut v = v.clone();
                            v.push(x);
                            v
                        })
                    })
                    .collect();
            }
            out.into_iter().map(Word::new).collect()
        }
        for word in words(4, 4) {
            for i in 1..=3i64 {
                let si = conj_automorphism_word(i, &word);
                assert_eq!(conj_automorphism_word(i, &si), word, "involution s_{i} {word}");
                let mut expect = word.content(Some(4));
                expect.swap((i - 1) as usize, i as usize);
                assert_eq!(si.content(Some(4)), expect, "content swap");
            }
            let s1 = |v: &Word| conj_automorphism_word(1, v);
            let s2 = |v: &Word| conj_automorphism_word(2, v);
            let s3 = |v: &Word| conj_automorphism_word(3, v);
            assert_eq!(s1(&s3(&word)), s3(&s1(&word)), "commutation {word}");
            assert_eq!(
                s1(&s2(&s1(&word))),
                s2(&s1(&s2(&word))),
                "braid s1 s2 on {word}"
            );
            assert_eq!(
                s2(&s3(&s2(&word))),
                s3(&s2(&s3(&word))),
                "braid s2 s3 on {word}"
            );
        }
    }

    #[test]
    fn normalization_is_shortest_sort() {
        let word = w(&[3, 3, 1, 2, 3]);
        let norm = normalize_content(&word);
        let content = norm.content(None);
        assert!(content.windows(2).all(|p| p[0] >= p[1]), "{content:?}");
    }
}

//! Column-strict (skew) tableaux and the Schensted machinery.
//!
//! Conventions fixed once and used everywhere:
//! - the row word reads rows bottom to top, each left to right;
//! - row insertion bumps the leftmost entry strictly greater;
//! - column insertion processes the word from right to left and bumps the
//!   topmost entry weakly greater, so the P symbol agrees with row insertion
//!   and the Q symbol records cells in insertion order.

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::word::{conj_automorphism_word, Word};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A skew shape: inner ⊆ outer cellwise.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub outer: Partition,
    pub inner: Partition,
}

impl Shape {
    pub fn straight(outer: Partition) -> Self {
        Shape { outer, inner: Partition::empty() }
    }

    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::Format(format!("inner {inner} not inside outer {outer}")));
        }
        Ok(Shape { outer, inner })
    }

    pub fn cells(&self) -> i64 {
        self.outer.size() - self.inner.size()
    }
}

/// A column-strict filling of a skew shape.
///
/// `inner[i]` is the number of skipped cells at the left of row i; `rows[i]`
/// holds the entries.  Trailing empty rows are trimmed, interior empty rows
/// are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Tableau {
    inner: Vec<i64>,
    rows: Vec<Vec<i64>>,
}

impl Tableau {
    pub fn new(inner: Vec<i64>, rows: Vec<Vec<i64>>) -> Self {
        let t = Self::build(inner, rows);
        t.validate().unwrap_or_else(|e| panic!("invalid tableau: {e}"));
        t
    }

    pub fn try_new(inner: Vec<i64>, rows: Vec<Vec<i64>>) -> Result<Self> {
        let t = Self::build(inner, rows);
        t.validate()?;
        Ok(t)
    }

    fn build(mut inner: Vec<i64>, mut rows: Vec<Vec<i64>>) -> Self {
        // Trailing empty rows are canonical noise; leading and interior empty
        // rows carry skew-shape information and are kept.
        inner.resize(rows.len(), 0);
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
            inner.pop();
        }
        Tableau { inner, rows }
    }

    pub fn straight(rows: Vec<Vec<i64>>) -> Self {
        Tableau::new(vec![0; rows.len()], rows)
    }

    pub fn empty() -> Self {
        Tableau { inner: Vec::new(), rows: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        let n_rows = self.rows.len();
        if self.inner.len() != n_rows {
            return Err(Error::Format("inner/rows length mismatch".into()));
        }
        let outer: Vec<i64> =
            (0..n_rows).map(|i| self.inner[i] + self.rows[i].len() as i64).collect();
        for i in 0..n_rows {
            if self.inner[i] < 0 {
                return Err(Error::Format("negative inner offset".into()));
            }
            if i + 1 < n_rows {
                if self.inner[i] < self.inner[i + 1] {
                    return Err(Error::Format("inner not weakly decreasing".into()));
                }
                if outer[i] < outer[i + 1] {
                    return Err(Error::Format("outer not weakly decreasing".into()));
                }
            }
            for w in self.rows[i].windows(2) {
                if w[0] > w[1] {
                    return Err(Error::NotColumnStrict(format!(
                        "row {i} decreases: {:?}",
                        self.rows[i]
                    )));
                }
            }
            if self.rows[i].iter().any(|&x| x < 1) {
                return Err(Error::Format("entries must be positive".into()));
            }
        }
        for i in 0..n_rows.saturating_sub(1) {
            // columns strictly increase
            for (j, &below) in self.rows[i + 1].iter().enumerate() {
                let col = self.inner[i + 1] + j as i64;
                if col >= self.inner[i] && col < outer[i] {
                    let above = self.rows[i][(col - self.inner[i]) as usize];
                    if above >= below {
                        return Err(Error::NotColumnStrict(format!(
                            "column {}: {} above {}",
                            col + 1,
                            above,
                            below
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> Shape {
        let outer: Vec<i64> =
            (0..self.rows.len()).map(|i| self.inner[i] + self.rows[i].len() as i64).collect();
        Shape {
            outer: Partition::new(outer),
            inner: Partition::new(self.inner.clone()),
        }
    }

    pub fn is_straight(&self) -> bool {
        self.inner.iter().all(|&o| o == 0)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn inner_offsets(&self) -> &[i64] {
        &self.inner
    }

    /// Entry at (row, col), both 1-indexed in the ambient grid.
    pub fn entry(&self, row: usize, col: i64) -> Option<i64> {
        let r = self.rows.get(row - 1)?;
        let off = self.inner[row - 1];
        if col > off && col <= off + r.len() as i64 {
            Some(r[(col - off - 1) as usize])
        } else {
            None
        }
    }

    /// Row word: rows bottom to top, each left to right.
    pub fn row_word(&self) -> Word {
        let mut letters = Vec::with_capacity(self.num_cells());
        for row in self.rows.iter().rev() {
            letters.extend_from_slice(row);
        }
        Word::new(letters)
    }

    /// Letter multiplicities 1..=n (largest letter when n is None).
    pub fn content(&self, n: Option<i64>) -> Vec<i64> {
        self.row_word().content(n)
    }

    /// The skew tableau of cells whose entries lie in [lo, hi].
    pub fn restrict(&self, lo: i64, hi: i64) -> Tableau {
        let mut inner = Vec::new();
        let mut rows = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            let start = row.iter().position(|&x| x >= lo).unwrap_or(row.len());
            let end = row.iter().position(|&x| x > hi).unwrap_or(row.len());
            inner.push(self.inner[i] + start as i64);
            rows.push(row[start..end].to_vec());
        }
        Tableau::build(inner, rows)
    }

    /// Largest letter appearing, 0 when empty.
    pub fn max_letter(&self) -> i64 {
        self.rows.iter().flat_map(|r| r.iter().copied()).max().unwrap_or(0)
    }

    /// The entries of grid column `col` (1-indexed), top to bottom.
    pub fn column(&self, col: i64) -> Vec<i64> {
        let mut out = Vec::new();
        for i in 1..=self.rows.len() {
            if let Some(x) = self.entry(i, col) {
                out.push(x);
            }
        }
        out
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let mut cells: Vec<String> =
                std::iter::repeat(".".to_string()).take(self.inner[i] as usize).collect();
            cells.extend(row.iter().map(|x| x.to_string()));
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Row insertion
// ---------------------------------------------------------------------------

/// Insert x by row bumping; returns the (row, col) of the new cell, 0-indexed.
fn row_insert(rows: &mut Vec<Vec<i64>>, mut x: i64) -> (usize, usize) {
    for r in 0..rows.len() {
        match rows[r].iter().position(|&y| y > x) {
            Some(j) => std::mem::swap(&mut x, &mut rows[r][j]),
            None => {
                rows[r].push(x);
                return (r, rows[r].len() - 1);
            }
        }
    }
    rows.push(vec![x]);
    (rows.len() - 1, 0)
}

/// Undo a row insertion that created the corner cell (r, c); returns the
/// letter that was inserted.
fn reverse_row_insert(rows: &mut Vec<Vec<i64>>, r: usize, c: usize) -> i64 {
    debug_assert_eq!(c, rows[r].len() - 1);
    let mut y = rows[r].pop().expect("corner exists");
    if rows[r].is_empty() {
        rows.remove(r);
    }
    for row in rows[..r].iter_mut().rev() {
        let j = row.iter().rposition(|&z| z < y).expect("reverse bump target");
        std::mem::swap(&mut y, &mut row[j]);
    }
    y
}

/// Schensted P symbol under row insertion.
pub fn p_symbol_row(w: &Word) -> Tableau {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    for &x in w.letters() {
        row_insert(&mut rows, x);
    }
    Tableau::straight(rows)
}

/// Row insertion P and standard recording Q (cells numbered in insertion order).
pub fn pq_symbol_row(w: &Word) -> (Tableau, Tableau) {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut q: Vec<Vec<i64>> = Vec::new();
    for (t, &x) in w.letters().iter().enumerate() {
        let (r, c) = row_insert(&mut rows, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        debug_assert_eq!(c, q[r].len());
        q[r].push(t as i64 + 1);
    }
    (Tableau::straight(rows), Tableau::straight(q))
}

/// Recover the word that row-inserts to (p, q); q must be standard of the
/// same shape as p.
pub fn reverse_row_word(p: &Tableau, q: &Tableau) -> Result<Word> {
    check_recording_pair(p, q)?;
    let mut rows: Vec<Vec<i64>> = p.rows().to_vec();
    let m = p.num_cells();
    let mut letters = vec![0i64; m];
    for t in (1..=m as i64).rev() {
        let (r, c) = find_label(q, t)?;
        letters[(t - 1) as usize] = reverse_row_insert(&mut rows, r, c);
    }
    Ok(Word::new(letters))
}

// ---------------------------------------------------------------------------
// Column insertion
// ---------------------------------------------------------------------------

/// Insert x by column bumping (topmost weakly greater entry); rows is the
/// row-major storage of a straight tableau.  Returns the new cell, 0-indexed.
fn column_insert(rows: &mut Vec<Vec<i64>>, mut x: i64) -> (usize, usize) {
    let mut c = 0usize;
    loop {
        let height = rows.iter().take_while(|r| r.len() > c).count();
        match (0..height).find(|&i| rows[i][c] >= x) {
            Some(i) => {
                std::mem::swap(&mut x, &mut rows[i][c]);
                c += 1;
            }
            None => {
                if height == rows.len() {
                    rows.push(Vec::new());
                }
                debug_assert_eq!(rows[height].len(), c);
                rows[height].push(x);
                return (height, c);
            }
        }
    }
}

/// Undo a column insertion that created the corner cell (r, c); returns the
/// letter that was inserted.
fn reverse_column_insert(rows: &mut Vec<Vec<i64>>, r: usize, c: usize) -> i64 {
    debug_assert_eq!(c, rows[r].len() - 1);
    let mut y = rows[r].pop().expect("corner exists");
    if rows[r].is_empty() {
        rows.remove(r);
    }
    for col in (0..c).rev() {
        let height = rows.iter().take_while(|row| row.len() > col).count();
        let i = (0..height).rev().find(|&i| rows[i][col] <= y).expect("reverse bump target");
        std::mem::swap(&mut y, &mut rows[i][col]);
    }
    y
}

/// Column-insertion pair (P, Q): the word is processed from its last letter
/// to its first, so P agrees with the row-insertion P symbol and Q is the
/// standard tableau numbering cells in insertion order.
pub fn pq_symbol_column(w: &Word) -> (Tableau, Tableau) {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut q: Vec<Vec<i64>> = Vec::new();
    for (t, &x) in w.letters().iter().rev().enumerate() {
        let (r, c) = column_insert(&mut rows, x);
        if r == q.len() {
            q.push(Vec::new());
        }
        debug_assert_eq!(c, q[r].len());
        q[r].push(t as i64 + 1);
    }
    (Tableau::straight(rows), Tableau::straight(q))
}

fn check_recording_pair(p: &Tableau, q: &Tableau) -> Result<()> {
    if p.shape() != q.shape() {
        return Err(Error::Precondition(format!(
            "P and Q shapes differ: {:?} vs {:?}",
            p.shape().outer,
            q.shape().outer
        )));
    }
    if !p.is_straight() {
        return Err(Error::Precondition("P symbol must be straight".into()));
    }
    let m = q.num_cells() as i64;
    let mut seen = vec![false; m as usize];
    for row in q.rows() {
        for &x in row {
            if x < 1 || x > m || seen[(x - 1) as usize] {
                return Err(Error::Precondition("Q is not standard".into()));
            }
            seen[(x - 1) as usize] = true;
        }
    }
    Ok(())
}

fn find_label(q: &Tableau, t: i64) -> Result<(usize, usize)> {
    for (r, row) in q.rows().iter().enumerate() {
        if let Some(c) = row.iter().position(|&x| x == t) {
            return Ok((r, c));
        }
    }
    Err(Error::Precondition(format!("label {t} missing from Q")))
}

/// The unique column-strict skew tableau of the given shape whose row word
/// column-inserts to (p, q): reverse column insertion in decreasing Q order
/// recovers the row word, which then refills the shape in reading order.
pub fn reverse_column_realize(p: &Tableau, q: &Tableau, shape: &Shape) -> Result<Tableau> {
    check_recording_pair(p, q)?;
    let m = p.num_cells();
    if shape.cells() != m as i64 {
        return Err(Error::Precondition(format!(
            "target shape has {} cells, pair has {m}",
            shape.cells()
        )));
    }
    let mut rows: Vec<Vec<i64>> = p.rows().to_vec();
    let mut letters = Vec::with_capacity(m);
    for t in (1..=m as i64).rev() {
        let (r, c) = find_label(q, t)?;
        letters.push(reverse_column_insert(&mut rows, r, c));
    }
    fill_shape_by_row_word(shape, &Word::new(letters))
}

/// The column word: columns left to right, each bottom to top.
pub fn column_word(t: &Tableau) -> Word {
    let width = t.shape().outer.part(1);
    let mut letters = Vec::with_capacity(t.num_cells());
    for col in 1..=width {
        for row in (1..=t.rows().len()).rev() {
            if let Some(x) = t.entry(row, col) {
                letters.push(x);
            }
        }
    }
    Word::new(letters)
}

/// Fill a skew shape with a word in column-word reading order and validate.
pub fn fill_shape_by_column_word(shape: &Shape, w: &Word) -> Result<Tableau> {
    if shape.cells() != w.len() as i64 {
        return Err(Error::Precondition("word length does not match shape".into()));
    }
    let n_rows = shape.outer.len();
    let mut grid: Vec<Vec<Option<i64>>> = (1..=n_rows)
        .map(|i| vec![None; (shape.outer.part(i) - shape.inner.part(i)) as usize])
        .collect();
    let mut cursor = 0usize;
    for col in 1..=shape.outer.part(1) {
        for row in (1..=n_rows).rev() {
            if col > shape.inner.part(row) && col <= shape.outer.part(row) {
                grid[row - 1][(col - shape.inner.part(row) - 1) as usize] =
                    Some(w.letters()[cursor]);
                cursor += 1;
            }
        }
    }
    let mut inner = Vec::with_capacity(n_rows);
    let mut rows = Vec::with_capacity(n_rows);
    for (i, grid_row) in grid.into_iter().enumerate() {
        inner.push(shape.inner.part(i + 1));
        rows.push(grid_row.into_iter().map(|c| c.expect("cell filled")).collect());
    }
    Tableau::try_new(inner, rows)
}

/// Fill a skew shape with a word in row-word reading order and validate.
pub fn fill_shape_by_row_word(shape: &Shape, w: &Word) -> Result<Tableau> {
    let n_rows = shape.outer.len();
    let mut inner = Vec::with_capacity(n_rows);
    let mut rows: Vec<Vec<i64>> = Vec::with_capacity(n_rows);
    let mut cursor = 0usize;
    if shape.cells() != w.len() as i64 {
        return Err(Error::Precondition("word length does not match shape".into()));
    }
    for i in (1..=n_rows).rev() {
        let off = shape.inner.part(i);
        let len = (shape.outer.part(i) - off) as usize;
        inner.push(off);
        rows.push(w.letters()[cursor..cursor + len].to_vec());
        cursor += len;
    }
    inner.reverse();
    rows.reverse();
    Tableau::try_new(inner, rows).map_err(|e| match e {
        Error::NotColumnStrict(s) => Error::NotColumnStrict(s),
        other => other,
    })
}

// ---------------------------------------------------------------------------
// Evacuation, duality, reflections
// ---------------------------------------------------------------------------

/// Evacuation with respect to the alphabet [n]: the plactic star involution,
/// computed as P(reverse(complement(word))).
pub fn evacuation(t: &Tableau, n: i64) -> Result<Tableau> {
    if !t.is_straight() {
        return Err(Error::Precondition("evacuation needs a straight tableau".into()));
    }
    if t.max_letter() > n {
        return Err(Error::Alphabet { letter: t.max_letter(), lo: 1, hi: n });
    }
    Ok(p_symbol_row(&t.row_word().complement(n).reverse()))
}

/// The crystal reflection operator on tableaux via the row word.
pub fn conj_automorphism_tableau(i: i64, t: &Tableau) -> Tableau {
    if t.is_straight() {
        p_symbol_row(&conj_automorphism_word(i, &t.row_word()))
    } else {
        // act on the word and refill the same skew shape
        let image = conj_automorphism_word(i, &t.row_word());
        fill_shape_by_row_word(&t.shape(), &image)
            .expect("reflection preserves skew column-strictness")
    }
}

/// Dual tableau in the n x k box: column j of the result is the set
/// complement in [n] of column (k+1-j) of the input.
pub fn dual_tableau(t: &Tableau, k: i64, n: i64) -> Result<Tableau> {
    if !t.is_straight() {
        return Err(Error::Precondition("dual_tableau needs a straight tableau".into()));
    }
    let lambda = t.shape().outer;
    if lambda.part(1) > k {
        return Err(Error::Range(format!("shape width {} exceeds box {k}", lambda.part(1))));
    }
    if t.max_letter() > n {
        return Err(Error::Alphabet { letter: t.max_letter(), lo: 1, hi: n });
    }
    let mut columns: Vec<Vec<i64>> = Vec::with_capacity(k as usize);
    for j in 1..=k {
        let source = t.column(k + 1 - j);
        let mut complement: Vec<i64> =
            (1..=n).filter(|x| !source.contains(x)).collect();
        complement.sort_unstable();
        columns.push(complement);
    }
    while columns.last().is_some_and(|c| c.is_empty()) {
        columns.pop();
    }
    let height = columns.first().map_or(0, |c| c.len());
    let mut rows = Vec::with_capacity(height);
    for i in 0..height {
        let row: Vec<i64> =
            columns.iter().take_while(|c| c.len() > i).map(|c| c[i]).collect();
        if row.is_empty() {
            break;
        }
        rows.push(row);
    }
    Tableau::try_new(vec![0; rows.len()], rows)
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

/// All column-strict tableaux of the given straight shape and content, in
/// lexicographic row-word order.
pub fn enumerate_cst(shape: &Partition, content: &[i64]) -> Vec<Tableau> {
    if shape.size() != content.iter().sum::<i64>() {
        return Vec::new();
    }
    let n_rows = shape.len();
    // grow letter by letter: shape chain with horizontal strips
    let mut results = Vec::new();
    let mut current: Vec<i64> = vec![0; n_rows];
    let mut fill: Vec<Vec<i64>> = vec![Vec::new(); n_rows];

    fn strips(
        current: &[i64],
        target: &Partition,
        need: i64,
        row: usize,
        chosen: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if row == current.len() {
            if need == 0 {
                out.push(chosen.clone());
            }
            return;
        }
        // cells added in this row: between 0 and the strip bound
        let above = if row == 0 { i64::MAX } else { current[row - 1] };
        let max_here = target.part(row + 1).min(above) - current[row];
        for add in 0..=max_here.max(0).min(need) {
            chosen.push(add);
            strips(current, target, need - add, row + 1, chosen, out);
            chosen.pop();
        }
    }

    fn rec(
        letter: usize,
        content: &[i64],
        shape: &Partition,
        current: &mut Vec<i64>,
        fill: &mut Vec<Vec<i64>>,
        results: &mut Vec<Tableau>,
    ) {
        if letter == content.len() {
            if (0..current.len()).all(|i| current[i] == shape.part(i + 1)) {
                results.push(Tableau::straight(
                    fill.iter().filter(|r| !r.is_empty()).cloned().collect(),
                ));
            }
            return;
        }
        let mut options = Vec::new();
        strips(current, shape, content[letter], 0, &mut Vec::new(), &mut options);
        for option in options {
            for (i, &add) in option.iter().enumerate() {
                current[i] += add;
                fill[i].extend(std::iter::repeat(letter as i64 + 1).take(add as usize));
            }
            rec(letter + 1, content, shape, current, fill, results);
            for (i, &add) in option.iter().enumerate() {
                current[i] -= add;
                let keep = fill[i].len() - add as usize;
                fill[i].truncate(keep);
            }
        }
    }

    rec(0, content, shape, &mut current, &mut fill, &mut results);
    results.sort_by(|a, b| a.row_word().cmp(&b.row_word()));
    results
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn t(rows: &[&[i64]]) -> Tableau {
        Tableau::straight(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn w(s: &[i64]) -> Word {
        Word::new(s.to_vec())
    }

    #[test]
    fn row_word_examples() {
        let t_deg = t(&[&[1, 1, 3, 3, 6], &[2, 2, 4, 6], &[4, 5], &[5], &[7]]);
        assert_eq!(
            t_deg.row_word(),
            w(&[7, 5, 4, 5, 2, 2, 4, 6, 1, 1, 3, 3, 6])
        );
        assert_eq!(t(&[&[1, 1, 2]]).row_word(), w(&[1, 1, 2]));

        let first_lrt = t(&[&[1, 1, 1, 3, 3], &[2, 2, 2, 4], &[4, 5, 7], &[5, 6], &[6, 8], &[9]]);
        let restricted = first_lrt.restrict(3, 9);
        assert_eq!(restricted.row_word(), w(&[9, 6, 8, 5, 6, 4, 5, 7, 4, 3, 3]));
    }

    #[test]
    fn restrict_examples() {
        let first_lrt = t(&[&[1, 1, 1, 3, 3], &[2, 2, 2, 4], &[4, 5, 7], &[5, 6], &[6, 8], &[9]]);
        assert_eq!(
            first_lrt.restrict(3, 6).row_word(),
            w(&[6, 5, 6, 4, 5, 4, 3, 3])
        );
        assert_eq!(first_lrt.restrict(1, 9), first_lrt);
        assert!(first_lrt.restrict(10, 12).is_empty());
    }

    #[test]
    fn p_symbol_reinserts_straight_tableaux() {
        let samples = [
            t(&[&[1, 1, 2], &[2, 3]]),
            t(&[&[1, 2, 2, 3], &[2, 3, 4], &[4]]),
            t(&[&[1]]),
        ];
        for s in samples {
            assert_eq!(p_symbol_row(&s.row_word()), s);
        }
        assert_eq!(p_symbol_row(&w(&[2, 1])), t(&[&[1], &[2]]));
    }

    #[test]
    fn p_symbol_catabolism_example() {
        let word = w(&[6, 5, 6, 9, 5, 8, 4, 4, 3, 3, 7]);
        assert_eq!(
            p_symbol_row(&word),
            t(&[&[3, 3, 7], &[4, 4, 8], &[5, 5, 9], &[6, 6]])
        );
    }

    #[test]
    fn column_insertion_worked_example() {
        let word = w(&[9, 6, 8, 5, 6, 4, 5, 7, 4, 3, 3]);
        let (p, q) = pq_symbol_column(&word);
        assert_eq!(
            p,
            t(&[&[3, 3, 7], &[4, 4], &[5, 5], &[6, 6], &[8], &[9]])
        );
        assert_eq!(
            q,
            t(&[&[1, 2, 6], &[3, 5], &[4, 8], &[7, 10], &[9], &[11]])
        );
        // P agrees with row insertion
        assert_eq!(p, p_symbol_row(&word));
    }

    #[test]
    fn column_insertion_single_letter() {
        let (p, q) = pq_symbol_column(&w(&[4]));
        assert_eq!(p, t(&[&[4]]));
        assert_eq!(q, t(&[&[1]]));
    }

    #[test]
    fn column_q_of_catabolism_chain() {
        // 11-letter insertion word of the transpose construction; the source
        // text displays a 12th duplicated entry, an erratum.
        let word = w(&[6, 5, 6, 9, 5, 8, 4, 4, 3, 3, 7]);
        let (p, q) = pq_symbol_column(&word);
        assert_eq!(p, t(&[&[3, 3, 7], &[4, 4, 8], &[5, 5, 9], &[6, 6]]));
        assert_eq!(q, t(&[&[1, 2, 3], &[4, 5, 10], &[6, 7, 11], &[8, 9]]));
    }

    #[test]
    fn realize_round_trip() {
        let first_lrt = t(&[&[1, 1, 1, 3, 3], &[2, 2, 2, 4], &[4, 5, 7], &[5, 6], &[6, 8], &[9]]);
        let skew = first_lrt.restrict(3, 9);
        let (p, q) = pq_symbol_column(&skew.row_word());
        let back = reverse_column_realize(&p, &q, &skew.shape()).unwrap();
        assert_eq!(back, skew);
    }

    #[test]
    fn realize_switched_example() {
        let skew = t(&[&[1, 1, 1, 3, 3], &[2, 2, 2, 4], &[4, 5, 7], &[5, 6], &[6, 8], &[9]])
            .restrict(3, 9);
        let (_, q) = pq_symbol_column(&skew.row_word());
        let p_new = t(&[&[3, 6, 6], &[4, 7], &[5, 8], &[7, 9], &[8], &[9]]);
        let image = reverse_column_realize(&p_new, &q, &skew.shape()).unwrap();
        let expected = Tableau::new(
            vec![3, 3, 0, 0, 0, 0],
            vec![
                vec![3, 6],
                vec![4],
                vec![5, 6, 7],
                vec![7, 8],
                vec![8, 9],
                vec![9],
            ],
        );
        assert_eq!(image, expected);
    }

    #[test]
    fn realize_shape_mismatch_errors() {
        let (p, q) = pq_symbol_column(&w(&[2, 1]));
        let bad = Shape::straight(Partition::new(vec![3]));
        assert!(reverse_column_realize(&p, &q, &bad).is_err());
        let q_wrong = t(&[&[1], &[2]]);
        let p_row = t(&[&[1, 2]]);
        assert!(reverse_column_realize(&p_row, &q_wrong, &bad).is_err());
    }

    #[test]
    fn evacuation_basics() {
        assert_eq!(evacuation(&t(&[&[1]]), 1).unwrap(), t(&[&[1]]));
        let sample = t(&[&[1, 1, 2], &[2, 3]]);
        let ev = evacuation(&sample, 3).unwrap();
        assert_eq!(ev.shape(), sample.shape());
        let mut rev_content = sample.content(Some(3));
        rev_content.reverse();
        assert_eq!(ev.content(Some(3)), rev_content);
        assert_eq!(evacuation(&ev, 3).unwrap(), sample);
        assert!(evacuation(&sample, 2).is_err());
    }

    #[test]
    fn dual_tableau_example() {
        let first_lrt = t(&[&[1, 1, 1, 3, 3], &[2, 2, 2, 4], &[4, 5, 7], &[5, 6], &[6, 8], &[9]]);
        let dual = dual_tableau(&first_lrt, 5, 9).unwrap();
        let expected = t(&[
            &[1, 1, 3, 3, 3],
            &[2, 2, 4, 4, 7],
            &[4, 5, 5, 7, 8],
            &[5, 6, 6, 9],
            &[6, 7, 8],
            &[7, 8, 9],
            &[8, 9],
            &[9],
        ]);
        assert_eq!(dual, expected);
        // involution (k*n - |shape| cells map back)
        assert_eq!(dual_tableau(&dual, 5, 9).unwrap(), first_lrt);
        // degenerate: single cell in a 1x1 box
        assert!(dual_tableau(&t(&[&[1]]), 1, 1).unwrap().is_empty());
        assert!(dual_tableau(&t(&[&[1, 1]]), 1, 2).is_err());
    }

    #[test]
    fn enumerate_cst_counts() {
        // CST((2,1), (1,1,1)) = 2 standard tableaux
        let shape = Partition::new(vec![2, 1]);
        assert_eq!(enumerate_cst(&shape, &[1, 1, 1]).len(), 2);
        // Kostka number K_{(2,1),(1,1,1)} = 2, K_{(2,1),(2,1)} = 1
        assert_eq!(enumerate_cst(&shape, &[2, 1]).len(), 1);
        assert_eq!(enumerate_cst(&shape, &[3]).len(), 0);
        // deterministic lexicographic order by row word
        let all = enumerate_cst(&Partition::new(vec![2, 2]), &[1, 1, 1, 1]);
        let words: Vec<Word> = all.iter().map(|t| t.row_word()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
    }

    #[test]
    fn reverse_row_word_round_trip() {
        let word = w(&[6, 5, 6, 9, 5, 8, 4, 4, 3, 3, 7]);
        let (p, q) = pq_symbol_row(&word);
        assert_eq!(reverse_row_word(&p, &q).unwrap(), word);
    }

    #[test]
    fn restrict_interval_shapes() {
        let first_lrt = t(&[&[1, 1, 1, 3, 3], &[2, 2, 2, 4], &[4, 5, 7], &[5, 6], &[6, 8], &[9]]);
        let mid = first_lrt.restrict(3, 6);
        assert_eq!(mid.shape().inner, Partition::new(vec![3, 3]));
        assert_eq!(mid.num_cells(), 8);
    }
}

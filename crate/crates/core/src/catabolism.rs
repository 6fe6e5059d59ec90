//! Row and column catabolism, the catabolizable sets CT(λ;R) and CCT(λ;R),
//! their charge generating functions, and the CT → CCT transpose algorithm.
//!
//! Catabolism cuts the canonical key out of a tableau, splits the remainder,
//! and reinserts the two pieces; a tableau is catabolizable when iterating
//! this down the sequence of rectangles empties it.  Alphabets are passed as
//! explicit intervals rather than relabelled between stages.

use crate::error::{Error, Result};
use crate::lrtab::canonical_key;
use crate::partition::Partition;
use crate::qpoly::QPolynomial;
use crate::rect::{Rect, RectangleSequence};
use crate::tableau::{
    enumerate_cst, fill_shape_by_row_word, p_symbol_row, pq_symbol_column, reverse_row_word,
    Shape, Tableau,
};
use crate::word::{charge, Word};

/// Check that the tableau's restriction to [lo, lo+rows-1] is exactly the
/// canonical key of the rectangle.
fn check_key(s: &Tableau, r1: Rect, lo: i64) -> Result<()> {
    if !s.restrict(1, lo - 1).is_empty() {
        return Err(Error::Precondition(format!("letters below the active interval [{lo},..]")));
    }
    let key = canonical_key(r1, lo);
    if s.restrict(lo, lo + r1.rows - 1) != key {
        return Err(Error::Precondition(format!(
            "restriction to [{lo},{}] is not the canonical key",
            lo + r1.rows - 1
        )));
    }
    Ok(())
}

/// The insertion word of the row catabolism: word(S_+) · word(S_-).
fn row_catabolism_word(s: &Tableau, r1: Rect, lo: i64) -> Result<Word> {
    if !s.is_straight() {
        return Err(Error::Precondition("catabolism needs a straight tableau".into()));
    }
    check_key(s, r1, lo)?;
    let rest = s.restrict(lo + r1.rows, i64::MAX >> 1);
    let eta1 = (r1.rows as usize).min(rest.rows().len());
    let mut letters = Vec::with_capacity(rest.num_cells());
    for row in rest.rows()[..eta1].iter().rev() {
        letters.extend_from_slice(row);
    }
    for row in rest.rows()[eta1..].iter().rev() {
        letters.extend_from_slice(row);
    }
    Ok(Word::new(letters))
}

/// Row catabolism Cat_{R_1}(S) = P(word(S_+) word(S_-)).
pub fn row_catabolism(s: &Tableau, r1: Rect, lo: i64) -> Result<Tableau> {
    Ok(p_symbol_row(&row_catabolism_word(s, r1, lo)?))
}

/// The insertion word of the column catabolism: word(S_r) · word(S_l).
fn column_catabolism_word(s: &Tableau, r1: Rect, lo: i64) -> Result<Word> {
    if !s.is_straight() {
        return Err(Error::Precondition("catabolism needs a straight tableau".into()));
    }
    check_key(s, r1, lo)?;
    let rest = s.restrict(lo + r1.rows, i64::MAX >> 1);
    let mu1 = r1.cols;
    // slice vertically just after column mu1
    let mut letters = Vec::with_capacity(rest.num_cells());
    for (i, row) in rest.rows().iter().enumerate().rev() {
        let offset = rest.inner_offsets()[i];
        let split = ((mu1 - offset).max(0) as usize).min(row.len());
        letters.extend_from_slice(&row[split..]);
    }
    for (i, row) in rest.rows().iter().enumerate().rev() {
        let offset = rest.inner_offsets()[i];
        let split = ((mu1 - offset).max(0) as usize).min(row.len());
        letters.extend_from_slice(&row[..split]);
    }
    Ok(Word::new(letters))
}

/// Column catabolism CCat_{R_1}(S) = P(word(S_r) word(S_l)).
pub fn column_catabolism(s: &Tableau, r1: Rect, lo: i64) -> Result<Tableau> {
    Ok(p_symbol_row(&column_catabolism_word(s, r1, lo)?))
}

/// R-catabolizability over the alphabet starting at lo.
pub fn is_ct_from(s: &Tableau, rects: &[Rect], lo: i64) -> bool {
    match rects.first() {
        None => s.is_empty(),
        Some(&r1) => match row_catabolism(s, r1, lo) {
            Ok(next) => is_ct_from(&next, &rects[1..], lo + r1.rows),
            Err(_) => false,
        },
    }
}

pub fn is_ct(s: &Tableau, rects: &RectangleSequence) -> bool {
    is_ct_from(s, rects.rects(), 1)
}

/// R-column-catabolizability over the alphabet starting at lo.
pub fn is_cct_from(s: &Tableau, rects: &[Rect], lo: i64) -> bool {
    match rects.first() {
        None => s.is_empty(),
        Some(&r1) => match column_catabolism(s, r1, lo) {
            Ok(next) => is_cct_from(&next, &rects[1..], lo + r1.rows),
            Err(_) => false,
        },
    }
}

pub fn is_cct(s: &Tableau, rects: &RectangleSequence) -> bool {
    is_cct_from(s, rects.rects(), 1)
}

/// CT(λ;R) in lexicographic row-word order.
pub fn enumerate_ct(lambda: &Partition, rects: &RectangleSequence) -> Vec<Tableau> {
    if lambda.size() != rects.total_cells() {
        return Vec::new();
    }
    enumerate_cst(lambda, rects.gamma_weight().entries())
        .into_iter()
        .filter(|t| is_ct(t, rects))
        .collect()
}

/// CCT(λ;R) in lexicographic row-word order.
pub fn enumerate_cct(lambda: &Partition, rects: &RectangleSequence) -> Vec<Tableau> {
    if lambda.size() != rects.total_cells() {
        return Vec::new();
    }
    enumerate_cst(lambda, rects.gamma_weight().entries())
        .into_iter()
        .filter(|t| is_cct(t, rects))
        .collect()
}

/// CT_{λ;R}(q) = Σ q^{charge(S)}; needs a dominant sequence so that the
/// content is a partition.
pub fn ct_polynomial(lambda: &Partition, rects: &RectangleSequence) -> Result<QPolynomial> {
    if !rects.is_dominant() {
        return Err(Error::Precondition("ct_polynomial needs a dominant sequence".into()));
    }
    let mut poly = QPolynomial::zero();
    for s in enumerate_ct(lambda, rects) {
        let c = charge(&s.row_word());
        if c < 0 {
            return Err(Error::InternalConsistency(format!("negative charge {c}")));
        }
        poly.add_term(c, 1);
    }
    Ok(poly)
}

/// One catabolism stage with its recording data.
#[derive(Clone, Debug)]
pub struct CatabolismStage {
    /// the tableau before this stage
    pub source: Tableau,
    /// the catabolized tableau P
    pub image: Tableau,
    /// standard recording tableau of the column insertion
    pub recording: Tableau,
}

/// The full catabolism chain of S with column-insertion recording tableaux.
pub fn catabolism_chain(s: &Tableau, rects: &RectangleSequence) -> Result<Vec<CatabolismStage>> {
    let mut stages = Vec::new();
    let mut current = s.clone();
    let mut lo = 1i64;
    for &r in rects.rects() {
        let word = row_catabolism_word(&current, r, lo)?;
        let (p, q) = pq_symbol_column(&word);
        debug_assert_eq!(p, p_symbol_row(&word));
        stages.push(CatabolismStage { source: current.clone(), image: p.clone(), recording: q });
        current = p;
        lo += r.rows;
    }
    if !current.is_empty() {
        return Err(Error::Precondition("chain did not reach the empty tableau".into()));
    }
    Ok(stages)
}

/// Transpose a standard tableau.
fn transpose_standard(t: &Tableau) -> Tableau {
    let shape = t.shape().outer;
    let shape_t = shape.transpose();
    let mut rows: Vec<Vec<i64>> =
        (1..=shape_t.len()).map(|i| vec![0; shape_t.part(i) as usize]).collect();
    for (r, row) in t.rows().iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            rows[c][r] = x;
        }
    }
    Tableau::new(vec![0; rows.len()], rows)
}

/// Rebuild U_{i-1} from (U_i, Q_i^t): reverse row insertion recovers the
/// sliced word, which refills the target shape around the transposed key.
fn reconstruct_stage(
    u_next: &Tableau,
    q_transposed: &Tableau,
    rect_t: Rect,
    target: &Partition,
    lo: i64,
) -> Result<Tableau> {
    let word = reverse_row_word(u_next, q_transposed)?;
    let (eta_t, mu_t) = (rect_t.cols, rect_t.rows); // rect_t = mu_i rows x eta_i cols
    // regions of target - key, sliced after column eta_t
    let n_rows = target.len();
    for r in 1..=mu_t {
        if target.part(r as usize) < eta_t {
            return Err(Error::Precondition(format!(
                "key {rect_t} does not fit inside {target}"
            )));
        }
    }
    let right_outer = target.clone();
    let right_inner =
        Partition::new((1..=n_rows).map(|r| target.part(r).min(eta_t)).collect::<Vec<_>>());
    let right_shape = Shape::new(right_outer, right_inner)?;
    let left_outer = Partition::new(
        (1..=n_rows)
            .map(|r| if (r as i64) <= mu_t { eta_t } else { target.part(r).min(eta_t) })
            .collect::<Vec<_>>(),
    );
    let left_inner = Partition::new(vec![eta_t; mu_t as usize]);
    let left_shape = Shape::new(left_outer, left_inner)?;
    let right_cells = right_shape.cells() as usize;
    if right_cells + left_shape.cells() as usize != word.len() {
        return Err(Error::InternalConsistency(format!(
            "recovered word length {} does not tile {target} minus {rect_t}",
            word.len()
        )));
    }
    let right_word = Word::new(word.letters()[..right_cells].to_vec());
    let left_word = Word::new(word.letters()[right_cells..].to_vec());
    let u_right = fill_shape_by_row_word(&right_shape, &right_word)?;
    let u_left = fill_shape_by_row_word(&left_shape, &left_word)?;
    // assemble: key + left + right, then check column-strictness globally
    let key = canonical_key(rect_t, lo);
    let mut grid: Vec<Vec<Option<i64>>> =
        (1..=n_rows).map(|r| vec![None; target.part(r) as usize]).collect();
    for part in [&key, &u_left, &u_right] {
        for (r, row) in part.rows().iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let c = part.inner_offsets()[r] as usize + j;
                if grid[r][c].is_some() {
                    return Err(Error::InternalConsistency(format!(
                        "reconstruction collision at ({},{})",
                        r + 1,
                        c + 1
                    )));
                }
                grid[r][c] = Some(x);
            }
        }
    }
    let mut rows = Vec::with_capacity(n_rows);
    for grid_row in grid {
        let row: Option<Vec<i64>> = grid_row.into_iter().collect();
        rows.push(row.ok_or_else(|| {
            Error::InternalConsistency("reconstruction left a hole".into())
        })?);
    }
    Tableau::try_new(vec![0; rows.len()], rows).map_err(|e| match e {
        Error::NotColumnStrict(s) => Error::InternalConsistency(format!(
            "reconstructed filling is not column strict: {s}"
        )),
        other => other,
    })
}

/// The CT → CCT transpose: record the catabolism chain of S under column
/// insertion, then rebuild upward with row-insertion recording symbols.
pub fn ct_transpose(s: &Tableau, rects: &RectangleSequence) -> Result<Tableau> {
    let stages = catabolism_chain(s, rects)?;
    let mut u = Tableau::empty();
    let mut lo_t = 1 + rects.rects().iter().map(|r| r.cols).sum::<i64>();
    for (stage, r) in stages.iter().zip(rects.rects()).rev() {
        lo_t -= r.cols;
        let target = stage.source.shape().outer.transpose();
        let rebuilt = reconstruct_stage(
            &u,
            &transpose_standard(&stage.recording),
            r.transpose(),
            &target,
            lo_t,
        )?;
        // the rebuilt tableau column-catabolizes back to the previous stage
        if column_catabolism(&rebuilt, r.transpose(), lo_t)? != u {
            return Err(Error::InternalConsistency(
                "rebuilt stage does not column-catabolize back".into(),
            ));
        }
        u = rebuilt;
    }
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rows: &[&[i64]]) -> Tableau {
        Tableau::straight(rows.iter().map(|r| r.to_vec()).collect())
    }

    fn running_rects() -> RectangleSequence {
        RectangleSequence::new(vec![Rect::new(2, 3), Rect::new(4, 2), Rect::new(3, 1)])
    }

    fn running_lambda() -> Partition {
        Partition::new(vec![5, 4, 3, 2, 2, 1])
    }

    fn paper_ct_four() -> Vec<Tableau> {
        vec![
            t(&[&[1, 1, 1, 5, 6], &[2, 2, 2, 6], &[3, 3, 7], &[4, 4], &[5, 8], &[9]]),
            t(&[&[1, 1, 1, 6, 6], &[2, 2, 2, 7], &[3, 3, 8], &[4, 4], &[5, 5], &[9]]),
            t(&[&[1, 1, 1, 5, 7], &[2, 2, 2, 6], &[3, 3, 8], &[4, 4], &[5, 9], &[6]]),
            t(&[&[1, 1, 1, 6, 7], &[2, 2, 2, 8], &[3, 3, 9], &[4, 4], &[5, 5], &[6]]),
        ]
    }

    #[test]
    fn row_catabolism_worked_example() {
        let s = paper_ct_four()[0].clone();
        let stage1 = row_catabolism(&s, Rect::new(2, 3), 1).unwrap();
        assert_eq!(stage1, t(&[&[3, 3, 7], &[4, 4, 8], &[5, 5, 9], &[6, 6]]));
        let stage2 = row_catabolism(&stage1, Rect::new(4, 2), 3).unwrap();
        assert_eq!(stage2, t(&[&[7], &[8], &[9]]));
        let stage3 = row_catabolism(&stage2, Rect::new(3, 1), 7).unwrap();
        assert!(stage3.is_empty());
        // S = K1 catabolizes to empty
        let k1 = canonical_key(Rect::new(2, 3), 1);
        assert!(row_catabolism(&k1, Rect::new(2, 3), 1).unwrap().is_empty());
        // failing key check
        assert!(row_catabolism(&stage1, Rect::new(2, 3), 1).is_err());
    }

    #[test]
    fn ct_enumeration_running_example() {
        let found = enumerate_ct(&running_lambda(), &running_rects());
        let mut expected = paper_ct_four();
        expected.sort_by_key(|t| t.row_word());
        assert_eq!(found, expected);
        assert!(is_ct(
            &canonical_key(Rect::new(2, 3), 1),
            &RectangleSequence::new(vec![Rect::new(2, 3)])
        ));
    }

    #[test]
    fn ct_polynomial_running_example() {
        let poly = ct_polynomial(&running_lambda(), &running_rects()).unwrap();
        assert_eq!(poly, QPolynomial::from_coeffs(&[(4, 1), (5, 2), (6, 1)]));
        let single = RectangleSequence::new(vec![Rect::new(2, 3)]);
        assert_eq!(
            ct_polynomial(&Partition::new(vec![3, 3]), &single).unwrap(),
            QPolynomial::one()
        );
        let non_dominant = RectangleSequence::new(vec![Rect::new(1, 1), Rect::new(1, 3)]);
        assert!(ct_polynomial(&Partition::new(vec![2, 2]), &non_dominant).is_err());
    }

    #[test]
    fn kostka_foulkes_single_rows() {
        // K_{(2,1),(1,1,1)} = q + q^2 as charge over CST
        let rows = RectangleSequence::new(vec![
            Rect::new(1, 1),
            Rect::new(1, 1),
            Rect::new(1, 1),
        ]);
        let poly = ct_polynomial(&Partition::new(vec![2, 1]), &rows).unwrap();
        assert_eq!(poly, QPolynomial::from_coeffs(&[(1, 1), (2, 1)]));
    }

    #[test]
    fn cct_examples() {
        // CCT((2,2); ((1,1,1),(1))) is empty
        let r = RectangleSequence::new(vec![Rect::new(3, 1), Rect::new(1, 1)]);
        assert!(enumerate_cct(&Partition::new(vec![2, 2]), &r).is_empty());
        // CCT((2,2); ((1),(1,1,1))) = CCT((2,2); ((1,1),(1,1))) as sets
        let r1 = RectangleSequence::new(vec![Rect::new(1, 1), Rect::new(3, 1)]);
        let r2 = RectangleSequence::new(vec![Rect::new(2, 1), Rect::new(2, 1)]);
        let s1 = enumerate_cct(&Partition::new(vec![2, 2]), &r1);
        let s2 = enumerate_cct(&Partition::new(vec![2, 2]), &r2);
        assert!(!s1.is_empty());
        assert_eq!(s1, s2);
        // single rectangle
        let single = RectangleSequence::new(vec![Rect::new(2, 2)]);
        assert_eq!(
            enumerate_cct(&Partition::new(vec![2, 2]), &single),
            vec![canonical_key(Rect::new(2, 2), 1)]
        );
        assert!(enumerate_cct(&Partition::new(vec![3, 1]), &single).is_empty());
    }

    #[test]
    fn column_catabolism_cases() {
        // S - K1 entirely within the first mu1 columns: only S_l inserted
        let s = t(&[&[1, 1], &[2, 2], &[3, 4]]);
        let out = column_catabolism(&s, Rect::new(2, 2), 1).unwrap();
        assert_eq!(out, t(&[&[3, 4]]));
        let k = canonical_key(Rect::new(2, 2), 1);
        assert!(column_catabolism(&k, Rect::new(2, 2), 1).unwrap().is_empty());
    }

    #[test]
    fn ct_transpose_worked_example() {
        let s = paper_ct_four()[0].clone();
        let u = ct_transpose(&s, &running_rects()).unwrap();
        assert_eq!(
            u,
            t(&[
                &[1, 1, 4, 4, 5, 6],
                &[2, 2, 5, 5, 6],
                &[3, 3, 6],
                &[4, 4],
                &[5]
            ])
        );
    }

    #[test]
    fn ct_transpose_single_rectangle() {
        let r = RectangleSequence::new(vec![Rect::new(2, 3)]);
        let k1 = canonical_key(Rect::new(2, 3), 1);
        let u = ct_transpose(&k1, &r).unwrap();
        assert_eq!(u, canonical_key(Rect::new(3, 2), 1));
    }

    #[test]
    fn ct_transpose_bijective_on_running_example() {
        let images: Vec<Tableau> = enumerate_ct(&running_lambda(), &running_rects())
            .iter()
            .map(|s| ct_transpose(s, &running_rects()).unwrap())
            .collect();
        let mut sorted = images.clone();
        sorted.sort_by_key(|t| t.row_word());
        sorted.dedup();
        assert_eq!(sorted.len(), images.len(), "images repeat");
        let target = enumerate_cct(&running_lambda().transpose(), &running_rects().transpose());
        assert_eq!(sorted, target);
    }
}

//! Row reduction on vectors of scalars.

use crate::scalar::Scalar;

/// Gauss-Jordan elimination in place.
///
/// On return `rows` holds exactly the nonzero rows of the reduced row echelon form, and the
/// result lists their pivot columns in increasing order. Among candidate pivots the entry with
/// the smallest numerator/denominator size wins; ties go to the earliest row, so the output
/// depends only on the input.
pub fn rref_rows(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..ncols {
        if top == rows.len() {
            break;
        }
        let mut best: Option<(usize, u64)> = None;
        for (r, row) in rows.iter().enumerate().skip(top) {
            let x = &row[col];
            if x.is_zero() {
                continue;
            }
            let w = x.weight();
            if best.is_none_or(|(_, bw)| w < bw) {
                best = Some((r, w));
            }
        }
        let Some((r, _)) = best else { continue };
        rows.swap(top, r);
        let inv = rows[top][col].inverse().expect("pivot is nonzero");
        for x in rows[top][col..].iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = rows[top].clone();
        let support: Vec<usize> = (col..ncols).filter(|&c| !pivot_row[c].is_zero()).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == top || row[col].is_zero() {
                continue;
            }
            let factor = -&row[col];
            for &c in &support {
                row[c].add_product(&factor, &pivot_row[c]);
            }
        }
        pivots.push(col);
        top += 1;
    }
    rows.truncate(top);
    pivots
}

/// Rank by forward elimination only; cheaper than [`rref_rows`] when no basis is needed.
pub fn rank_of_rows(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let mut best: Option<(usize, u64)> = None;
        for (r, row) in rows.iter().enumerate().skip(rank) {
            let x = &row[col];
            if !x.is_zero() {
                let w = x.weight();
                if best.is_none_or(|(_, bw)| w < bw) {
                    best = Some((r, w));
                }
            }
        }
        let Some((r, _)) = best else { continue };
        rows.swap(rank, r);
        let inv = rows[rank][col].inverse().expect("pivot is nonzero");
        let pivot_row = rows[rank].clone();
        let support: Vec<usize> = (col + 1..ncols).filter(|&c| !pivot_row[c].is_zero()).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let factor = -&(&row[col] * &inv);
            for &c in &support {
                row[c].add_product(&factor, &pivot_row[c]);
            }
            row[col] = factor.field().zero();
        }
        rank += 1;
    }
    rank
}

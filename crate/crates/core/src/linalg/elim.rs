//! Rank by fraction-free elimination over `ℤ`.
//!
//! Every vector is scaled to a primitive integer vector first. Columns are
//! processed left to right; the pivot in a column is the row whose entry
//! there has the smallest bit length (ties: fewest non-zeros). Rows are
//! kept primitive after each update. Once the active part is more than half
//! full the remaining rows are switched to dense storage.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{RationalMatrix, SparseVec};

type IntRow = Vec<(usize, BigInt)>;

pub fn rank(a: &RationalMatrix) -> usize {
    if a.rows() <= a.cols() {
        rank_of_vectors(a.cols(), a.row_vectors())
    } else {
        rank_of_vectors(a.rows(), &a.columns())
    }
}

/// Rank of a family of sparse vectors of length `len`.
pub fn rank_of_vectors(len: usize, vectors: &[SparseVec]) -> usize {
    let mut buckets: BTreeMap<usize, Vec<IntRow>> = BTreeMap::new();
    let mut nnz = 0usize;
    let mut active = 0usize;
    for v in vectors {
        let row = primitive_integer_row(v);
        if let Some(&(lead, _)) = row.first() {
            nnz += row.len();
            active += 1;
            buckets.entry(lead).or_default().push(row);
        }
    }
    let mut rank = 0;
    while let Some((col, mut rows)) = buckets.pop_first() {
        let remaining_cols = len - col;
        if active > 16 && 2 * nnz > active * remaining_cols {
            rows.extend(buckets.into_values().flatten());
            return rank + dense_rank(col, len, rows);
        }
        let pivot_idx = choose_pivot(rows.iter().map(|r| (&r[0].1, r.len())));
        let pivot = rows.swap_remove(pivot_idx);
        rank += 1;
        active -= 1;
        nnz -= pivot.len();
        for row in rows {
            nnz -= row.len();
            let reduced = eliminate(&row, &pivot);
            if let Some(&(lead, _)) = reduced.first() {
                nnz += reduced.len();
                buckets.entry(lead).or_default().push(reduced);
            } else {
                active -= 1;
            }
        }
    }
    rank
}

fn choose_pivot<'a>(candidates: impl Iterator<Item = (&'a BigInt, usize)>) -> usize {
    let mut best = 0;
    let mut best_key = (u64::MAX, usize::MAX);
    for (i, (lead, len)) in candidates.enumerate() {
        let key = (lead.bits(), len);
        if key < best_key {
            best_key = key;
            best = i;
        }
    }
    best
}

pub(crate) fn primitive_integer_row(v: &SparseVec) -> IntRow {
    let mut lcm = BigInt::one();
    for (_, x) in v.iter() {
        lcm = lcm.lcm(x.denom());
    }
    let mut row: IntRow = v.iter().map(|(i, x)| (*i, x.numer() * (&lcm / x.denom()))).collect();
    make_primitive(&mut row);
    row
}

fn make_primitive(row: &mut IntRow) {
    let mut g = BigInt::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// `(p/g)·row − (r/g)·pivot` where `p`, `r` are the leading entries and
/// both rows share their leading column.
fn eliminate(row: &IntRow, pivot: &IntRow) -> IntRow {
    let p = &pivot[0].1;
    let r = &row[0].1;
    let g = p.gcd(r);
    let a = p / &g;
    let b = r / &g;
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (1, 1);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map(|e| e.0);
        let cj = pivot.get(j).map(|e| e.0);
        match (ci, cj) {
            (Some(x), Some(y)) if x == y => {
                let v = &a * &row[i].1 - &b * &pivot[j].1;
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push((x, &a * &row[i].1));
                i += 1;
            }
            (Some(x), None) => {
                out.push((x, &a * &row[i].1));
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, -(&b * &pivot[j].1)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    make_primitive(&mut out);
    out
}

fn dense_rank(start: usize, len: usize, rows: Vec<IntRow>) -> usize {
    let width = len - start;
    let mut dense: Vec<Vec<BigInt>> = rows
        .into_iter()
        .map(|r| {
            let mut d = alloc::vec![BigInt::zero(); width];
            for (i, x) in r {
                d[i - start] = x;
            }
            d
        })
        .collect();
    let mut rank = 0;
    for col in 0..width {
        if dense.is_empty() {
            break;
        }
        let candidates: Vec<usize> = (0..dense.len()).filter(|&r| !dense[r][col].is_zero()).collect();
        if candidates.is_empty() {
            continue;
        }
        let pick = choose_pivot(candidates.iter().map(|&r| {
            let len = dense[r][col..].iter().filter(|x| !x.is_zero()).count();
            (&dense[r][col], len)
        }));
        let pivot = dense.swap_remove(candidates[pick]);
        rank += 1;
        for row in dense.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let g = pivot[col].gcd(&row[col]);
            let a = &pivot[col] / &g;
            let b = &row[col] / &g;
            for k in col..width {
                let v = &a * &row[k] - &b * &pivot[k];
                row[k] = v;
            }
            let mut content = BigInt::zero();
            for x in &row[col..] {
                content = content.gcd(x);
            }
            if content > BigInt::one() {
                for x in &mut row[col..] {
                    *x /= &content;
                }
            }
        }
        dense.retain(|r| r[col..].iter().any(|x| !x.is_zero()));
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rational;

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&RationalMatrix::identity(5)), 5);
        assert_eq!(rank(&RationalMatrix::from_integers(&[&[1, 1], &[1, 1]])), 1);
        assert_eq!(rank(&RationalMatrix::zeros(3, 4)), 0);
        let m = RationalMatrix::from_dense(&[
            alloc::vec![rational(1, 2), rational(1, 3)],
            alloc::vec![rational(3, 2), rational(1, 1)],
        ])
        .unwrap();
        assert_eq!(rank(&m), 1);
    }

    #[test]
    fn dense_fallback_agrees() {
        // Rows are combinations of (j+1) and j², so the rank is 2.
        let mut rows = Vec::new();
        for i in 0..20i64 {
            let r: Vec<_> = (0..10i64)
                .map(|j| rational(((i % 7) + 1) * (j + 1) + (i % 7) * (i % 7) * j * j, 1))
                .collect();
            rows.push(r);
        }
        let m = RationalMatrix::from_dense(&rows).unwrap();
        let expected = crate::linalg::RowEchelon::from_vectors(10, m.row_vectors().iter().cloned()).rank();
        assert_eq!(rank(&m), expected);
    }
}

//! Bit-packed Gaussian elimination over F₂.
//!
//! Used for the F₂-linear Artin–Schreier equations in both the binary
//! fields and the rational function tower.

use alloc::vec;
use alloc::vec::Vec;

use crate::poly2::Poly2;

const WORD: usize = 64;

#[inline]
fn get(row: &[u64], i: usize) -> bool {
    row[i / WORD] >> (i % WORD) & 1 == 1
}

#[inline]
fn flip(row: &mut [u64], i: usize) {
    row[i / WORD] ^= 1 << (i % WORD);
}

/// Solves `A·x = b` over F₂ where column `j` of `A` is `columns[j]`
/// (bit `r` of the polynomial is the entry in row `r`).
///
/// Pivots are taken in ascending column order and free unknowns are set to
/// zero, so the result is deterministic. Bit `j` of the returned vector is
/// unknown `x_j`.
pub fn solve_columns(columns: &[Poly2], rhs: &Poly2) -> Option<Poly2> {
    let ncols = columns.len();
    let nrows = columns
        .iter()
        .chain(core::iter::once(rhs))
        .map(|c| c.degree().map_or(0, |d| d + 1))
        .max()
        .unwrap_or(0);
    let words = (ncols + 1).div_ceil(WORD);
    let mut rows = vec![vec![0u64; words]; nrows];
    for (j, col) in columns.iter().enumerate() {
        for r in col.exponents() {
            flip(&mut rows[r], j);
        }
    }
    for r in rhs.exponents() {
        flip(&mut rows[r], ncols);
    }

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| get(&rows[r], col)) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && get(row, col) {
                for (w, pw) in row.iter_mut().zip(&pivot) {
                    *w ^= pw;
                }
            }
        }
        pivots.push((rank, col));
        rank += 1;
    }
    if rows[rank..].iter().any(|row| get(row, ncols)) {
        return None;
    }
    let mut x = Poly2::zero();
    for (r, col) in pivots {
        if get(&rows[r], ncols) {
            x.flip_bit(col);
        }
    }
    Some(x)
}

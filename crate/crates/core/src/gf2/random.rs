use rand::RngCore;

use super::{Gf2Matrix, WORD_BITS};

impl Gf2Matrix {
    /// Uniformly random `n_rows x n_cols` matrix.
    pub fn random<R: RngCore + ?Sized>(n_rows: usize, n_cols: usize, rng: &mut R) -> Self {
        let mut m = Self::zeros(n_rows, n_cols);
        for i in 0..n_rows {
            let row = m.row_mut(i);
            for w in row.iter_mut() {
                *w = rng.next_u64();
            }
            mask_from(row, n_cols);
        }
        m
    }

    /// Uniformly random symmetric `n x n` matrix.
    pub fn random_symmetric<R: RngCore + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut upper = Self::random(n, n, rng);
        for i in 0..n {
            mask_below(upper.row_mut(i), i);
        }
        let lower = upper.transpose();
        for i in 0..n {
            let diag = upper.get(i, i);
            for (u, l) in upper.row_mut(i).iter_mut().zip(lower.row(i)) {
                *u ^= *l;
            }
            upper.set(i, i, diag);
        }
        upper
    }

    /// Uniformly random unit lower triangular `n x n` matrix.
    pub fn random_unit_lower<R: RngCore + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut m = Self::random(n, n, rng);
        for i in 0..n {
            mask_from(m.row_mut(i), i + 1);
            m.set(i, i, true);
        }
        m
    }
}

/// Clears bits `k..` of a packed row.
fn mask_from(row: &mut [u64], k: usize) {
    for (wi, w) in row.iter_mut().enumerate() {
        let lo = wi * WORD_BITS;
        if lo >= k {
            *w = 0;
        } else if k - lo < WORD_BITS {
            *w &= (1u64 << (k - lo)) - 1;
        }
    }
}

/// Clears bits `..k` of a packed row.
fn mask_below(row: &mut [u64], k: usize) {
    for (wi, w) in row.iter_mut().enumerate() {
        let lo = wi * WORD_BITS;
        if lo + WORD_BITS <= k {
            *w = 0;
        } else if lo < k {
            *w &= !((1u64 << (k - lo)) - 1);
        }
    }
}

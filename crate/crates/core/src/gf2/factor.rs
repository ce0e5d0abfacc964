//! Pivot-free triangular factorizations and orthogonalization over GF(2).

use super::matrix::dot_words;
use super::{Gf2Matrix, WORD_BITS};
use crate::error::{Error, Result};

impl Gf2Matrix {
    /// `M = L U` by elimination without row exchanges.
    ///
    /// Column `k` is cleared below the diagonal using row `k`. A zero pivot
    /// with a nonzero entry beneath it would need a row swap, so the
    /// factorization fails (`Ok(None)`). A zero pivot over an all-zero column
    /// is skipped, which lets rank-deficient matrices factor. `L` is unit
    /// lower triangular.
    pub fn lu_no_pivot(&self) -> Result<Option<(Gf2Matrix, Gf2Matrix)>> {
        Ok(self.lu_with_row_ops()?.map(|(l, u, _)| (l, u)))
    }

    /// [`Gf2Matrix::lu_no_pivot`] plus the number of row additions performed.
    pub fn lu_with_row_ops(&self) -> Result<Option<(Gf2Matrix, Gf2Matrix, u64)>> {
        let n = self.require_square()?;
        Ok(self.lu_counting(n))
    }

    fn lu_counting(&self, n: usize) -> Option<(Gf2Matrix, Gf2Matrix, u64)> {
        let mut u = self.clone();
        let mut l = Gf2Matrix::identity(n);
        let mut ops = 0u64;
        for k in 0..n {
            let below: Vec<usize> = (k + 1..n).filter(|&i| u.get(i, k)).collect();
            if !u.get(k, k) {
                if below.is_empty() {
                    continue;
                }
                return None;
            }
            let from = k / WORD_BITS;
            for i in below {
                u.xor_row_from(k, i, from);
                l.set(i, k, true);
                ops += 1;
            }
        }
        Some((l, u, ops))
    }

    /// Symmetric factorization `M = L Lᵀ` with `L` lower triangular.
    ///
    /// Outer-product elimination: a unit pivot contributes its current column
    /// to `L` and updates the trailing block; a zero pivot is allowed only
    /// over an all-zero column, leaving a zero column in `L`. Succeeds exactly
    /// when [`Gf2Matrix::lu_no_pivot`] does.
    pub fn cholesky(&self) -> Result<Option<Gf2Matrix>> {
        Ok(self.cholesky_with_row_ops()?.map(|(l, _)| l))
    }

    pub fn cholesky_with_row_ops(&self) -> Result<Option<(Gf2Matrix, u64)>> {
        let n = self.require_square()?;
        if !self.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(self.cholesky_counting(n))
    }

    fn cholesky_counting(&self, n: usize) -> Option<(Gf2Matrix, u64)> {
        let mut a = self.clone();
        let mut l = Gf2Matrix::zeros(n, n);
        let mut ops = 0u64;
        for k in 0..n {
            let below: Vec<usize> = (k + 1..n).filter(|&i| a.get(i, k)).collect();
            if !a.get(k, k) {
                if below.is_empty() {
                    continue;
                }
                return None;
            }
            l.set(k, k, true);
            let from = k / WORD_BITS;
            for i in below {
                l.set(i, k, true);
                a.xor_row_from(k, i, from);
                ops += 1;
            }
        }
        Some((l, ops))
    }

    /// Unnormalized Gram–Schmidt on the columns:
    /// `b'_{k+1} = b_{k+1} + Σ_{j≤k} b'_j (b'_j · b_{k+1})`.
    #[must_use]
    pub fn psi(&self) -> Gf2Matrix {
        self.psi_with_row_ops().0
    }

    #[must_use]
    pub fn psi_with_row_ops(&self) -> (Gf2Matrix, u64) {
        // Work on rows of the transpose so each column is a packed vector.
        let cols = self.transpose();
        let mut out = Gf2Matrix::zeros(cols.n_rows(), cols.n_cols());
        let mut ops = 0u64;
        for k in 0..cols.n_rows() {
            let b = cols.row(k);
            let mut acc = b.to_vec();
            for j in 0..k {
                let prev = out.row(j);
                if dot_words(prev, b) {
                    for (a, p) in acc.iter_mut().zip(prev) {
                        *a ^= *p;
                    }
                    ops += 1;
                }
            }
            out.row_mut(k).copy_from_slice(&acc);
        }
        (out.transpose(), ops)
    }

    /// `QᵀQ = I`.
    pub fn is_orthogonal(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok(self.transpose().mul_self_transpose() == Gf2Matrix::identity(n))
    }

    /// `B = Q U` with `Q = ψ(B)` orthogonal and `U = Qᵀ B` upper triangular.
    /// Fails when `ψ(B)` is not orthogonal, i.e. some intermediate column is
    /// self-orthogonal.
    pub fn qu_factor(&self) -> Result<Option<(Gf2Matrix, Gf2Matrix)>> {
        self.require_square()?;
        let q = self.psi();
        if !q.is_orthogonal()? {
            return Ok(None);
        }
        let u = q.transpose().mul(self)?;
        debug_assert!(u.is_upper_triangular());
        Ok(Some((q, u)))
    }
}

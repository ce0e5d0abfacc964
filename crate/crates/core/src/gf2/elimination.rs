//! The pivot-row self-cancelling elimination operator, rank, determinants
//! and leading principal minors.
//!
//! One application of the operator picks the left-most nonzero column `t`
//! and the topmost row `s` holding a 1 in it, then adds row `s` to every row
//! with a 1 in column `t`, itself included. Row `s` and column `t` come out
//! zero, so pivot columns strictly increase along a trace and the number of
//! steps to the zero matrix equals the rank.

use super::{Gf2Matrix, PermutationMap, WORD_BITS};
use crate::error::{Error, Result};

/// Result of one elimination step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationStep {
    pub matrix: Gf2Matrix,
    /// Pivot row `s` (0-based).
    pub pivot_row: usize,
    /// Pivot column `t` (0-based).
    pub pivot_col: usize,
    /// Rows that had a 1 in the pivot column, ascending. Contains `pivot_row`.
    pub rows: Vec<usize>,
}

/// Pivot positions visited while eliminating a matrix down to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationTrace {
    pub s_list: Vec<usize>,
    pub t_list: Vec<usize>,
    /// Intermediate matrices, first the input and last the zero matrix.
    /// Only filled by [`Gf2Matrix::elimination_trace_with_steps`].
    pub steps: Option<Vec<Gf2Matrix>>,
}

impl EliminationTrace {
    /// Number of steps `p`.
    #[must_use]
    pub fn len(&self) -> usize {
        self.s_list.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.s_list.is_empty()
    }
}

impl Gf2Matrix {
    fn pivot_position(&self) -> Option<(usize, usize)> {
        let stride = self.stride();
        let mut any = vec![0u64; stride];
        for i in 0..self.n_rows() {
            for (a, w) in any.iter_mut().zip(self.row(i)) {
                *a |= *w;
            }
        }
        let (wi, w) = any.iter().enumerate().find(|(_, w)| **w != 0)?;
        let t = wi * WORD_BITS + w.trailing_zeros() as usize;
        let s = (0..self.n_rows()).find(|&i| self.get(i, t))?;
        Some((s, t))
    }

    fn apply_step(&mut self, s: usize, t: usize) -> Vec<usize> {
        let rows: Vec<usize> = (0..self.n_rows()).filter(|&i| self.get(i, t)).collect();
        let from = t / WORD_BITS;
        for &i in &rows {
            if i != s {
                self.xor_row_from(s, i, from);
            }
        }
        let stride = self.stride();
        self.row_mut(s)[from..stride].fill(0);
        rows
    }

    /// One application of the elimination operator.
    pub fn elimination_step(&self) -> Result<EliminationStep> {
        let (s, t) = self.pivot_position().ok_or(Error::NoPivot)?;
        let mut matrix = self.clone();
        let rows = matrix.apply_step(s, t);
        Ok(EliminationStep {
            matrix,
            pivot_row: s,
            pivot_col: t,
            rows,
        })
    }

    #[must_use]
    pub fn elimination_trace(&self) -> EliminationTrace {
        self.trace(false)
    }

    #[must_use]
    pub fn elimination_trace_with_steps(&self) -> EliminationTrace {
        self.trace(true)
    }

    fn trace(&self, keep: bool) -> EliminationTrace {
        let mut m = self.clone();
        let mut s_list = Vec::new();
        let mut t_list = Vec::new();
        let mut steps = keep.then(|| vec![m.clone()]);
        while let Some((s, t)) = m.pivot_position() {
            m.apply_step(s, t);
            s_list.push(s);
            t_list.push(t);
            if let Some(steps) = steps.as_mut() {
                steps.push(m.clone());
            }
        }
        EliminationTrace {
            s_list,
            t_list,
            steps,
        }
    }

    /// Leading principally nonsingular: the r-th pivot row is row r.
    pub fn is_lpn(&self) -> Result<bool> {
        self.require_square()?;
        let trace = self.elimination_trace();
        Ok(trace.s_list.iter().enumerate().all(|(r, &s)| r == s))
    }

    /// Rank over GF(2), by elimination with row swaps.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rank_with_row_ops().0
    }

    /// Rank together with the number of row additions performed.
    #[must_use]
    pub fn rank_with_row_ops(&self) -> (usize, u64) {
        let mut m = self.clone();
        let mut rank = 0;
        let mut ops = 0u64;
        for c in 0..m.n_cols() {
            if rank == m.n_rows() {
                break;
            }
            let Some(p) = (rank..m.n_rows()).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(rank, p);
            let from = c / WORD_BITS;
            for i in rank + 1..m.n_rows() {
                if m.get(i, c) {
                    m.xor_row_from(rank, i, from);
                    ops += 1;
                }
            }
            rank += 1;
        }
        (rank, ops)
    }

    /// Determinant over GF(2), i.e. whether the matrix is invertible.
    pub fn determinant(&self) -> Result<bool> {
        let n = self.require_square()?;
        Ok(self.rank() == n)
    }

    /// Entry `j` is the determinant of the leading `(j+1) x (j+1)` block.
    pub fn leading_principal_minors(&self) -> Result<Vec<bool>> {
        let n = self.require_square()?;
        Ok((1..=n).map(|k| self.leading(k).rank() == k).collect())
    }

    /// `M'(i,j) = M(σ(i), σ(j))`: row and column `σ(0)` move to position 0.
    pub fn conjugate(&self, sigma: &PermutationMap) -> Result<Gf2Matrix> {
        let n = self.require_square()?;
        if sigma.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                actual: sigma.len(),
            });
        }
        Ok(self.principal_submatrix(sigma.as_slice()))
    }
}

//! Dense word-packed matrices over GF(2).
//!
//! Rows are stored contiguously, `stride` words per row. Bit `j` of a row
//! lives in word `j / 64` at position `j % 64`. Padding bits past `n_cols`
//! are always zero, so whole-word comparisons and popcounts are exact.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub(crate) const WORD_BITS: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD_BITS)
}

/// A dense `n_rows x n_cols` matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    n_rows: usize,
    n_cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl Gf2Matrix {
    /// The all-zero matrix.
    #[must_use]
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        let stride = words_for(n_cols);
        Self {
            n_rows,
            n_cols,
            stride,
            words: vec![0; n_rows * stride],
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix entry by entry.
    pub fn from_fn(n_rows: usize, n_cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(n_rows, n_cols);
        for i in 0..n_rows {
            for j in 0..n_cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix from rows of 0/1 values.
    ///
    /// # Panics
    /// Panics if the rows are ragged or contain values other than 0 and 1.
    #[must_use]
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Self {
        let n_cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut m = Self::zeros(rows.len(), n_cols);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            assert_eq!(row.len(), n_cols, "ragged row {i}");
            for (j, &b) in row.iter().enumerate() {
                assert!(b <= 1, "entry ({i},{j}) is not a bit");
                if b == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    /// Builds a matrix whose columns are the given 0/1 vectors.
    #[must_use]
    pub fn from_columns<R: AsRef<[u8]>>(cols: &[R]) -> Self {
        Self::from_rows(cols).transpose()
    }

    #[inline]
    #[must_use]
    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    #[inline]
    #[must_use]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    #[must_use]
    pub fn is_square(&self) -> bool {
        self.n_rows == self.n_cols
    }

    pub(crate) fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.n_rows)
        } else {
            Err(Error::NotSquare {
                rows: self.n_rows,
                cols: self.n_cols,
            })
        }
    }

    #[inline]
    #[must_use]
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            i < self.n_rows && j < self.n_cols,
            "index ({i},{j}) out of range"
        );
        (self.words[i * self.stride + j / WORD_BITS] >> (j % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(
            i < self.n_rows && j < self.n_cols,
            "index ({i},{j}) out of range"
        );
        let w = &mut self.words[i * self.stride + j / WORD_BITS];
        let mask = 1u64 << (j % WORD_BITS);
        if value {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        assert!(
            i < self.n_rows && j < self.n_cols,
            "index ({i},{j}) out of range"
        );
        self.words[i * self.stride + j / WORD_BITS] ^= 1u64 << (j % WORD_BITS);
    }

    /// Packed words of row `i`.
    #[inline]
    #[must_use]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.words[i * self.stride..(i + 1) * self.stride]
    }

    #[inline]
    pub(crate) fn stride(&self) -> usize {
        self.stride
    }

    /// `row[dst] ^= row[src]`, touching only words from `from_word` on.
    #[inline]
    pub(crate) fn xor_row_from(&mut self, src: usize, dst: usize, from_word: usize) {
        debug_assert_ne!(src, dst);
        let s = self.stride;
        let (a, b) = if src < dst {
            let (lo, hi) = self.words.split_at_mut(dst * s);
            (&lo[src * s..(src + 1) * s], &mut hi[..s])
        } else {
            let (lo, hi) = self.words.split_at_mut(src * s);
            (&hi[..s], &mut lo[dst * s..(dst + 1) * s])
        };
        for (d, x) in b[from_word..].iter_mut().zip(&a[from_word..]) {
            *d ^= *x;
        }
    }

    #[inline]
    pub(crate) fn xor_row(&mut self, src: usize, dst: usize) {
        self.xor_row_from(src, dst, 0);
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let s = self.stride;
        let (lo, hi) = self.words.split_at_mut(a.max(b) * s);
        let lo_start = a.min(b) * s;
        lo[lo_start..lo_start + s].swap_with_slice(&mut hi[..s]);
    }

    #[cfg(test)]
    pub(crate) fn row_is_zero(&self, i: usize) -> bool {
        self.row(i).iter().all(|&w| w == 0)
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n_cols, self.n_rows);
        for i in 0..self.n_rows {
            for (wi, &word) in self.row(i).iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let j = wi * WORD_BITS + w.trailing_zeros() as usize;
                    t.set(j, i, true);
                    w &= w - 1;
                }
            }
        }
        t
    }

    #[must_use]
    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// `self * rhs` over GF(2).
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n_cols != rhs.n_rows {
            return Err(Error::DimensionMismatch {
                expected: self.n_cols,
                actual: rhs.n_rows,
            });
        }
        let mut out = Self::zeros(self.n_rows, rhs.n_cols);
        let s = out.stride;
        for i in 0..self.n_rows {
            let dst = &mut out.words[i * s..(i + 1) * s];
            for (wi, &word) in self.row(i).iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let k = wi * WORD_BITS + w.trailing_zeros() as usize;
                    for (d, x) in dst.iter_mut().zip(rhs.row(k)) {
                        *d ^= *x;
                    }
                    w &= w - 1;
                }
            }
        }
        Ok(out)
    }

    /// `self * self^T`, computed from row dot products.
    #[must_use]
    pub fn mul_self_transpose(&self) -> Self {
        let n = self.n_rows;
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                if dot_words(self.row(i), self.row(j)) {
                    out.set(i, j, true);
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    #[must_use]
    pub fn is_lower_triangular(&self) -> bool {
        (0..self.n_rows).all(|i| ((i + 1)..self.n_cols).all(|j| !self.get(i, j)))
    }

    #[must_use]
    pub fn is_upper_triangular(&self) -> bool {
        (0..self.n_rows).all(|i| (0..i.min(self.n_cols)).all(|j| !self.get(i, j)))
    }

    /// Principal submatrix on the given (ordered) index list.
    #[must_use]
    pub fn principal_submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), idx.len(), |a, b| self.get(idx[a], idx[b]))
    }

    /// Leading principal `k x k` submatrix.
    #[must_use]
    pub fn leading(&self, k: usize) -> Self {
        Self::from_fn(k, k, |a, b| self.get(a, b))
    }

    /// Renders the matrix text format: `"n m"` then one `0`/`1` line per row.
    #[must_use]
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.n_rows * (self.n_cols + 1) + 16);
        s.push_str(&format!("{} {}\n", self.n_rows, self.n_cols));
        for i in 0..self.n_rows {
            for j in 0..self.n_cols {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    /// Parses the matrix text format.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines.next().ok_or_else(|| Error::Parse {
            line: 1,
            message: "missing header line".into(),
        })?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        let parse_dim = |s: &str| {
            s.parse::<usize>()
                .ok()
                .filter(|&d| d > 0)
                .ok_or_else(|| Error::Parse {
                    line: 1,
                    message: format!("invalid dimension {s:?}"),
                })
        };
        if dims.len() != 2 {
            return Err(Error::Parse {
                line: 1,
                message: "header must be \"n m\"".into(),
            });
        }
        let (n, m) = (parse_dim(dims[0])?, parse_dim(dims[1])?);
        let mut out = Self::zeros(n, m);
        for i in 0..n {
            let (idx, line) = lines.next().ok_or_else(|| Error::Parse {
                line: i + 2,
                message: format!("expected {n} rows, found {i}"),
            })?;
            let bytes = line.as_bytes();
            if bytes.len() != m {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: format!("expected {m} columns, found {}", bytes.len()),
                });
            }
            for (j, &b) in bytes.iter().enumerate() {
                match b {
                    b'0' => {}
                    b'1' => out.set(i, j, true),
                    _ => {
                        return Err(Error::Parse {
                            line: idx + 1,
                            message: format!("invalid character {:?}", b as char),
                        })
                    }
                }
            }
        }
        if let Some((idx, line)) = lines.next() {
            if !line.is_empty() {
                return Err(Error::Parse {
                    line: idx + 1,
                    message: "trailing content after matrix".into(),
                });
            }
        }
        Ok(out)
    }
}

/// Parity of the AND of two packed vectors.
#[inline]
pub(crate) fn dot_words(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .fold(0u32, |acc, (x, y)| acc ^ (x & y).count_ones())
        & 1
        == 1
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.n_rows, self.n_cols)?;
        for i in 0..self.n_rows {
            write!(f, "  ")?;
            for j in 0..self.n_cols {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Gf2Matrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

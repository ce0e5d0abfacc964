use std::fmt;

use super::Gf2Matrix;
use crate::error::{Error, Result};

/// A bijection on `0..n`. `image[i]` is where position `i` maps to.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermutationMap {
    image: Vec<usize>,
}

impl PermutationMap {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::NotPermutation { n });
            }
        }
        Ok(Self { image })
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
        }
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.image.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    #[inline]
    #[must_use]
    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    #[must_use]
    pub fn as_slice(&self) -> &[usize] {
        &self.image
    }

    #[must_use]
    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.image.len()];
        for (i, &v) in self.image.iter().enumerate() {
            inv[v] = i;
        }
        Self { image: inv }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    #[must_use]
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different sizes"
        );
        Self {
            image: other.image.iter().map(|&i| self.image[i]).collect(),
        }
    }

    /// Permutation matrix `P` with `P(i, σ(i)) = 1`, so that
    /// `P M Pᵀ` is the conjugation `M'(i,j) = M(σ(i), σ(j))`.
    #[must_use]
    pub fn to_matrix(&self) -> Gf2Matrix {
        let n = self.len();
        let mut p = Gf2Matrix::zeros(n, n);
        for (i, &v) in self.image.iter().enumerate() {
            p.set(i, v, true);
        }
        p
    }
}

/// 1-indexed, comma separated.
impl fmt::Display for PermutationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.image.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(PermutationMap::new(vec![0, 0]).is_err());
        assert!(PermutationMap::new(vec![0, 2]).is_err());
        assert!(PermutationMap::new(vec![1, 0]).is_ok());
    }

    #[test]
    fn matrix_has_one_bit_per_row_and_column() {
        let p = PermutationMap::new(vec![2, 0, 3, 1]).unwrap();
        let m = p.to_matrix();
        for i in 0..4 {
            assert_eq!((0..4).filter(|&j| m.get(i, j)).count(), 1);
            assert_eq!((0..4).filter(|&j| m.get(j, i)).count(), 1);
        }
        assert_eq!(p.compose(&p.inverse()), PermutationMap::identity(4));
        assert_eq!(p.to_string(), "3,1,4,2");
    }
}

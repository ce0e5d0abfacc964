//! Graphs with loops at black vertices, and the parity of their perfect
//! matchings. A loop covers its vertex once, so a perfect matching pairs up
//! some vertices along edges and covers the rest with loops.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;

/// Largest vertex subset the brute-force matching counter accepts.
pub const MATCHING_BRUTE_FORCE_BUDGET: usize = 24;

/// A simple graph with optional loops; the matrix diagonal marks loops.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LoopyGraph {
    matrix: Gf2Matrix,
}

impl LoopyGraph {
    pub(crate) fn from_matrix(matrix: Gf2Matrix) -> Self {
        Self { matrix }
    }

    pub fn new(loops: &[bool], edges: &[(usize, usize)]) -> Result<Self> {
        let n = loops.len();
        let mut m = Gf2Matrix::zeros(n, n);
        for (v, &l) in loops.iter().enumerate() {
            m.set(v, v, l);
        }
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            m.set(u, v, true);
            m.set(v, u, true);
        }
        Ok(Self { matrix: m })
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.matrix.n_rows()
    }

    #[must_use]
    pub fn has_loop(&self, v: usize) -> bool {
        self.matrix.get(v, v)
    }

    #[must_use]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.matrix.get(u, v)
    }

    fn check_subset(&self, subset: &[usize]) -> Result<()> {
        let n = self.n();
        let mut seen = vec![false; n];
        for &v in subset {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::RepeatedVertex { vertex: v });
            }
        }
        Ok(())
    }

    /// Parity of the number of perfect matchings of the induced subgraph,
    /// by direct enumeration: the lowest uncovered vertex is covered either
    /// by its loop or by an edge to an uncovered neighbor.
    pub fn matching_parity_bruteforce(&self, subset: &[usize]) -> Result<bool> {
        self.check_subset(subset)?;
        if subset.len() > MATCHING_BRUTE_FORCE_BUDGET {
            return Err(Error::BudgetExceeded {
                what: "matching brute-force",
                limit: MATCHING_BRUTE_FORCE_BUDGET,
                actual: subset.len(),
            });
        }
        let k = subset.len();
        let loops: u32 = (0..k)
            .filter(|&a| self.has_loop(subset[a]))
            .fold(0, |acc, a| acc | 1 << a);
        let nbrs: Vec<u32> = (0..k)
            .map(|a| {
                (0..k)
                    .filter(|&b| self.adjacent(subset[a], subset[b]))
                    .fold(0, |acc, b| acc | 1 << b)
            })
            .collect();
        let full = if k == 32 { u32::MAX } else { (1u32 << k) - 1 };
        let mut memo = HashMap::new();
        Ok(count_parity(full, loops, &nbrs, &mut memo))
    }

    /// Same parity, as the determinant of the principal submatrix.
    pub fn matching_parity_det(&self, subset: &[usize]) -> Result<bool> {
        self.check_subset(subset)?;
        self.matrix.principal_submatrix(subset).determinant()
    }
}

fn count_parity(remaining: u32, loops: u32, nbrs: &[u32], memo: &mut HashMap<u32, bool>) -> bool {
    if remaining == 0 {
        return true;
    }
    if let Some(&p) = memo.get(&remaining) {
        return p;
    }
    let v = remaining.trailing_zeros() as usize;
    let rest = remaining & !(1 << v);
    let mut parity = false;
    if loops >> v & 1 == 1 {
        parity ^= count_parity(rest, loops, nbrs, memo);
    }
    let mut partners = nbrs[v] & rest;
    while partners != 0 {
        let u = partners.trailing_zeros();
        partners &= partners - 1;
        parity ^= count_parity(rest & !(1 << u), loops, nbrs, memo);
    }
    memo.insert(remaining, parity);
    parity
}

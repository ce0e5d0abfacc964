use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::PermutationMap;

/// An ordered list of distinct vertices of a graph on `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PressingSequence {
    vertices: Vec<usize>,
    n: usize,
}

impl PressingSequence {
    pub fn new(vertices: Vec<usize>, n: usize) -> Result<Self> {
        let mut seen = vec![false; n];
        for &v in &vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::RepeatedVertex { vertex: v });
            }
        }
        Ok(Self { vertices, n })
    }

    #[must_use]
    pub fn empty(n: usize) -> Self {
        Self {
            vertices: Vec::new(),
            n,
        }
    }

    /// Parses the 1-indexed comma-separated form, e.g. `"3,1,2"`.
    /// The empty string is the empty sequence.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Self::empty(n));
        }
        let vertices = text
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                match tok.parse::<usize>() {
                    Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                    Ok(v) => Err(Error::VertexOutOfRange { vertex: v, n }),
                    Err(_) => Err(Error::Parse {
                        line: 1,
                        message: format!("invalid vertex {tok:?} in sequence"),
                    }),
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(vertices, n)
    }

    #[must_use]
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Ambient vertex count.
    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Full ordering of all `n` vertices: this sequence, then the unused
    /// vertices in increasing order.
    #[must_use]
    pub fn extended_ordering(&self) -> PermutationMap {
        let mut used = vec![false; self.n];
        let mut order = self.vertices.clone();
        for &v in &self.vertices {
            used[v] = true;
        }
        order.extend((0..self.n).filter(|&v| !used[v]));
        PermutationMap::new(order).expect("distinct in-range vertices extend to a permutation")
    }

    /// The sequence as a permutation, when it covers every vertex.
    pub fn to_permutation(&self) -> Result<PermutationMap> {
        if self.len() != self.n {
            return Err(Error::SequenceLength {
                expected: self.n,
                actual: self.len(),
            });
        }
        PermutationMap::new(self.vertices.clone())
    }
}

/// 1-indexed, comma separated.
impl fmt::Display for PressingSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.vertices.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

/// Every ordered selection of `k` distinct elements of `0..n`, lexicographic.
#[must_use]
pub fn all_arrangements(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(
            n,
            k,
            &mut Vec::with_capacity(k),
            &mut vec![false; n],
            &mut out,
        );
    }
    out
}

use std::fmt;

use super::LoopyGraph;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, PermutationMap, WORD_BITS};
use crate::sequences::PressingSequence;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Black,
    White,
}

impl Color {
    #[must_use]
    pub fn flipped(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    #[must_use]
    pub fn as_char(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'B' => Some(Color::Black),
            'W' => Some(Color::White),
            _ => None,
        }
    }
}

/// Renders colors as a `B`/`W` string.
#[must_use]
pub fn color_string(colors: &[Color]) -> String {
    colors.iter().map(|c| c.as_char()).collect()
}

/// A simple graph on `0..n` with each vertex black or white.
///
/// Stored as its augmented adjacency matrix: off-diagonal entries are edges
/// and the diagonal marks black vertices. Pressing `v` is then the rank-one
/// update `A + a_v a_vᵀ`, i.e. adding row `v` to every row in `N*(v)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BicoloredGraph {
    matrix: Gf2Matrix,
}

/// Rank of the augmented adjacency matrix, flagged when no successful
/// pressing sequence exists.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PressingNumber {
    pub rank: usize,
    pub reachable: bool,
}

impl BicoloredGraph {
    /// Edgeless, all-white graph.
    #[must_use]
    pub fn empty(n: usize) -> Self {
        Self {
            matrix: Gf2Matrix::zeros(n, n),
        }
    }

    pub fn new(colors: &[Color], edges: &[(usize, usize)]) -> Result<Self> {
        let n = colors.len();
        let mut g = Self::empty(n);
        for (v, &c) in colors.iter().enumerate() {
            g.matrix.set(v, v, c == Color::Black);
        }
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Interprets a symmetric matrix as an augmented adjacency matrix.
    pub fn from_augmented(matrix: Gf2Matrix) -> Result<Self> {
        matrix.require_square()?;
        if !matrix.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        Ok(Self { matrix })
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        self.matrix.set(u, v, true);
        self.matrix.set(v, u, true);
        Ok(())
    }

    #[inline]
    #[must_use]
    pub fn n(&self) -> usize {
        self.matrix.n_rows()
    }

    #[inline]
    #[must_use]
    pub fn is_black(&self, v: usize) -> bool {
        self.matrix.get(v, v)
    }

    #[must_use]
    pub fn color(&self, v: usize) -> Color {
        if self.is_black(v) {
            Color::Black
        } else {
            Color::White
        }
    }

    #[must_use]
    pub fn colors(&self) -> Vec<Color> {
        (0..self.n()).map(|v| self.color(v)).collect()
    }

    /// Same edges, new colors.
    #[must_use]
    pub fn with_colors(&self, colors: &[Color]) -> Self {
        assert_eq!(colors.len(), self.n());
        let mut g = self.clone();
        for (v, &c) in colors.iter().enumerate() {
            g.matrix.set(v, v, c == Color::Black);
        }
        g
    }

    #[inline]
    #[must_use]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.matrix.get(u, v)
    }

    /// Open neighborhood `N(v)` in increasing order.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.matrix
            .row(v)
            .iter()
            .enumerate()
            .flat_map(|(wi, &w)| BitIter(w).map(move |b| wi * WORD_BITS + b))
            .filter(move |&u| u != v)
    }

    #[must_use]
    pub fn degree(&self, v: usize) -> usize {
        let own = usize::from(self.is_black(v));
        self.matrix
            .row(v)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            - own
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    #[must_use]
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| {
                self.neighbors(u)
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// All white and no edges.
    #[must_use]
    pub fn is_cleared(&self) -> bool {
        self.matrix.is_zero()
    }

    #[must_use]
    pub fn augmented_adjacency(&self) -> Gf2Matrix {
        self.matrix.clone()
    }

    #[must_use]
    pub fn matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    /// Complements the induced subgraph on `N*(v)` and flips its colors.
    pub fn press(&self, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.press_in_place(v)?;
        Ok(g)
    }

    pub(crate) fn press_in_place(&mut self, v: usize) -> Result<()> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            });
        }
        if !self.is_black(v) {
            return Err(Error::WhiteVertexPress { vertex: v });
        }
        let closed: Vec<usize> = (0..self.n()).filter(|&u| self.matrix.get(u, v)).collect();
        for &u in &closed {
            if u != v {
                self.matrix.xor_row(v, u);
            }
        }
        self.matrix.row_mut(v).fill(0);
        Ok(())
    }

    #[must_use]
    pub fn loopy_graph(&self) -> LoopyGraph {
        LoopyGraph::from_matrix(self.matrix.clone())
    }

    /// Relabels so that new vertex `i` is old vertex `σ(i)`.
    pub fn relabel(&self, sigma: &PermutationMap) -> Result<Self> {
        Ok(Self {
            matrix: self.matrix.conjugate(sigma)?,
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    #[must_use]
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut k = 0;
            while k < comp.len() {
                let u = comp[k];
                k += 1;
                for w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Every component with at least two vertices contains a black vertex.
    #[must_use]
    pub fn components_ok(&self) -> bool {
        self.components()
            .iter()
            .all(|c| c.len() < 2 || c.iter().any(|&v| self.is_black(v)))
    }

    #[must_use]
    pub fn pressing_number(&self) -> PressingNumber {
        PressingNumber {
            rank: self.matrix.rank(),
            reachable: self.components_ok(),
        }
    }

    /// Builds one successful pressing sequence greedily.
    ///
    /// In the first component that still has a black vertex, take the black
    /// vertices with the fewest black neighbors and press the one of largest
    /// degree among them (smallest index on ties). Each press leaves every
    /// component either an isolated white vertex or holding a black vertex.
    pub fn construct_successful_sequence(&self) -> Result<PressingSequence> {
        if !self.components_ok() {
            return Err(Error::NoSuccessfulSequence);
        }
        let mut g = self.clone();
        let mut seq = Vec::new();
        while let Some(comp) = g
            .components()
            .into_iter()
            .find(|c| c.iter().any(|&v| g.is_black(v)))
        {
            let black_neighbors = |v: usize| g.neighbors(v).filter(|&u| g.is_black(u)).count();
            let blacks: Vec<usize> = comp.iter().copied().filter(|&v| g.is_black(v)).collect();
            let fewest = blacks
                .iter()
                .map(|&v| black_neighbors(v))
                .min()
                .unwrap_or(0);
            let x = blacks
                .iter()
                .copied()
                .filter(|&v| black_neighbors(v) == fewest)
                .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
                .ok_or(Error::NoSuccessfulSequence)?;
            g.press_in_place(x)?;
            seq.push(x);
        }
        if !g.is_cleared() {
            return Err(Error::NoSuccessfulSequence);
        }
        PressingSequence::new(seq, self.n())
    }
}

impl fmt::Debug for BicoloredGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BicoloredGraph")
            .field("colors", &color_string(&self.colors()))
            .field("edges", &self.edges())
            .finish()
    }
}

pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let b = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(b)
    }
}

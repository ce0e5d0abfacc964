//! The graph of successful pressing sequences, adjacent when a few
//! insertions and deletions turn one into the other.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::edit::indel_distance;
use crate::error::{Error, Result};
use crate::graph::BicoloredGraph;
use crate::sequences::{count_sequences, enumerate_sequences, PressingSequence};

pub const DEFAULT_MAX_EDIT: usize = 4;

/// Largest number of sequences [`build_pi_graph`] accepts.
pub const PI_GRAPH_BUDGET: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiGraph {
    sequences: Vec<PressingSequence>,
    neighbors: Vec<Vec<usize>>,
    max_edit: usize,
}

impl PiGraph {
    /// Links every pair of sequences within `max_edit` of each other.
    #[must_use]
    pub fn from_sequences(sequences: Vec<PressingSequence>, max_edit: usize) -> Self {
        let neighbors: Vec<Vec<usize>> = (0..sequences.len())
            .into_par_iter()
            .map(|i| {
                let si = sequences[i].vertices();
                (0..sequences.len())
                    .filter(|&j| j != i && indel_distance(si, sequences[j].vertices()) <= max_edit)
                    .collect()
            })
            .collect();
        Self {
            sequences,
            neighbors,
            max_edit,
        }
    }

    /// A graph with explicit adjacency, for tests and fixtures.
    pub fn from_parts(
        sequences: Vec<PressingSequence>,
        edges: &[(usize, usize)],
        max_edit: usize,
    ) -> Result<Self> {
        let n = sequences.len();
        let mut neighbors = vec![Vec::new(); n];
        for &(a, b) in edges {
            if a >= n || b >= n || a == b {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    n,
                });
            }
            neighbors[a].push(b);
            neighbors[b].push(a);
        }
        for adj in &mut neighbors {
            adj.sort_unstable();
            adj.dedup();
        }
        Ok(Self {
            sequences,
            neighbors,
            max_edit,
        })
    }

    #[must_use]
    pub fn sequences(&self) -> &[PressingSequence] {
        &self.sequences
    }

    #[must_use]
    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    #[must_use]
    pub fn max_edit(&self) -> usize {
        self.max_edit
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.sequences.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    /// Edges `(i, j)` with `i < j`, lexicographic.
    #[must_use]
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(i, adj)| adj.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect()
    }

    #[must_use]
    pub fn index_of(&self, seq: &PressingSequence) -> Option<usize> {
        self.sequences.iter().position(|s| s == seq)
    }

    #[must_use]
    pub fn is_connected(&self) -> bool {
        if self.len() <= 1 {
            return true;
        }
        let mut seen = vec![false; self.len()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.neighbors[u] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.len()
    }

    /// Lazy simple random walk: each step stays put with probability 1/2,
    /// otherwise moves to a uniformly chosen neighbor.
    pub fn walk<R: Rng>(&self, start: usize, steps: usize, rng: &mut R) -> usize {
        let mut at = start;
        for _ in 0..steps {
            if rng.gen_bool(0.5) {
                continue;
            }
            let adj = &self.neighbors[at];
            if !adj.is_empty() {
                at = adj[rng.gen_range(0..adj.len())];
            }
        }
        at
    }

    /// Export: `id: v1,v2,...` per sequence, then `i j` per edge, 0-indexed ids.
    #[must_use]
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (i, seq) in self.sequences.iter().enumerate() {
            s.push_str(&format!("{i}: {seq}\n"));
        }
        for (i, j) in self.edges() {
            s.push_str(&format!("{i} {j}\n"));
        }
        s
    }
}

/// All successful sequences of `g` as a [`PiGraph`].
pub fn build_pi_graph(g: &BicoloredGraph, max_edit: usize) -> Result<PiGraph> {
    let count = count_sequences(g)?;
    if count > PI_GRAPH_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            what: "Π(G) sequence",
            limit: PI_GRAPH_BUDGET,
            actual: usize::try_from(count).unwrap_or(usize::MAX),
        });
    }
    Ok(PiGraph::from_sequences(
        enumerate_sequences(g, None)?,
        max_edit,
    ))
}

/// Walk generator for seed `seed`, stream `stream`. Distinct streams give
/// independent reproducible walks from one seed.
#[must_use]
pub fn walk_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Endpoint of a `steps`-step lazy walk on Π(G) (max edit 4), started at
/// the greedily constructed sequence.
pub fn random_walk(g: &BicoloredGraph, steps: usize, seed: u64) -> Result<PressingSequence> {
    let sampler = WalkSampler::new(g, DEFAULT_MAX_EDIT)?;
    Ok(sampler.sample(steps, &mut walk_rng(seed, 0)).clone())
}

/// Π(G) with a fixed starting vertex, for drawing many walks.
pub struct WalkSampler {
    pi: PiGraph,
    start: usize,
}

impl WalkSampler {
    pub fn new(g: &BicoloredGraph, max_edit: usize) -> Result<Self> {
        let start_seq = g.construct_successful_sequence()?;
        let pi = build_pi_graph(g, max_edit)?;
        let start = pi.index_of(&start_seq).ok_or(Error::NoSuccessfulSequence)?;
        Ok(Self { pi, start })
    }

    #[must_use]
    pub fn pi(&self) -> &PiGraph {
        &self.pi
    }

    #[must_use]
    pub fn start(&self) -> usize {
        self.start
    }

    pub fn sample<R: Rng>(&self, steps: usize, rng: &mut R) -> &PressingSequence {
        &self.pi.sequences[self.pi.walk(self.start, steps, rng)]
    }
}

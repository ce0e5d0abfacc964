#![allow(dead_code)]

use pressing_lab::graph::{BicoloredGraph, Color};
use pressing_lab::sequences::PressingSequence;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// Edge set of `mask` over [`pairs`].
pub fn edges_of(n: usize, mask: u64) -> Vec<(usize, usize)> {
    pairs(n)
        .into_iter()
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, e)| e)
        .collect()
}

pub fn colors_of(n: usize, blacks: u64) -> Vec<Color> {
    (0..n)
        .map(|v| {
            if blacks >> v & 1 == 1 {
                Color::Black
            } else {
                Color::White
            }
        })
        .collect()
}

/// All edge sets on `n` labeled vertices.
pub fn all_edge_sets(n: usize) -> Vec<Vec<(usize, usize)>> {
    (0..1u64 << pairs(n).len())
        .map(|m| edges_of(n, m))
        .collect()
}

/// All bicolored graphs on `n` labeled vertices.
pub fn all_graphs(n: usize) -> Vec<BicoloredGraph> {
    let mut out = Vec::new();
    for edges in all_edge_sets(n) {
        for blacks in 0..1u64 << n {
            out.push(BicoloredGraph::new(&colors_of(n, blacks), &edges).unwrap());
        }
    }
    out
}

pub fn random_edges<R: Rng>(n: usize, rng: &mut R) -> Vec<(usize, usize)> {
    let density: f64 = rng.gen_range(0.1..0.9);
    pairs(n)
        .into_iter()
        .filter(|_| rng.gen_bool(density))
        .collect()
}

pub fn random_graph<R: Rng>(n: usize, rng: &mut R) -> BicoloredGraph {
    let edges = random_edges(n, rng);
    let colors: Vec<Color> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Color::Black
            } else {
                Color::White
            }
        })
        .collect();
    BicoloredGraph::new(&colors, &edges).unwrap()
}

/// Every ordering of every subset of `0..n`.
pub fn all_sequences(n: usize) -> Vec<PressingSequence> {
    let mut out = vec![PressingSequence::empty(n)];
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for s in &frontier {
            for v in (0..n).filter(|v| !s.contains(v)) {
                let mut t = s.clone();
                t.push(v);
                out.push(PressingSequence::new(t.clone(), n).unwrap());
                next.push(t);
            }
        }
        frontier = next;
    }
    out
}

pub fn random_sequence<R: Rng>(n: usize, rng: &mut R) -> PressingSequence {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    let k = rng.gen_range(0..=n);
    v.truncate(k);
    PressingSequence::new(v, n).unwrap()
}

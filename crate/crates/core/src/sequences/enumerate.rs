//! Backtracking enumeration and counting of successful pressing sequences.
//!
//! Both work on a compact board: one `u64` per vertex holding its row of the
//! augmented adjacency matrix, so graphs are limited to 64 vertices here.

use std::collections::HashMap;

use super::PressingSequence;
use crate::error::{Error, Result};
use crate::graph::{BicoloredGraph, BitIter};

/// Largest graph the enumerator and counter accept.
pub const MAX_ENUMERATION_VERTICES: usize = 64;

pub(crate) fn board_of(g: &BicoloredGraph) -> Result<Vec<u64>> {
    if g.n() > MAX_ENUMERATION_VERTICES {
        return Err(Error::BudgetExceeded {
            what: "enumeration vertex",
            limit: MAX_ENUMERATION_VERTICES,
            actual: g.n(),
        });
    }
    Ok((0..g.n()).map(|v| g.matrix().row(v)[0]).collect())
}

#[inline]
pub(crate) fn black_mask(board: &[u64]) -> u64 {
    board
        .iter()
        .enumerate()
        .fold(0, |acc, (v, &row)| acc | (row & (1 << v)))
}

/// Writes the result of pressing black vertex `v` of `src` into `dst`.
#[inline]
pub(crate) fn press_board(src: &[u64], dst: &mut [u64], v: usize) {
    dst.copy_from_slice(src);
    let row = src[v];
    for u in BitIter(row) {
        dst[u] ^= row;
    }
}

#[inline]
pub(crate) fn is_cleared(board: &[u64]) -> bool {
    board.iter().all(|&r| r == 0)
}

/// No component of two or more vertices is entirely white.
pub(crate) fn board_components_ok(board: &[u64]) -> bool {
    let n = board.len();
    let blacks = black_mask(board);
    let mut unvisited: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    while unvisited != 0 {
        let start = unvisited.trailing_zeros() as usize;
        let mut comp = 1u64 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0u64;
            for v in BitIter(frontier) {
                next |= board[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        unvisited &= !comp;
        if comp.count_ones() >= 2 && comp & blacks == 0 {
            return false;
        }
    }
    true
}

/// Depth-first enumeration of successful pressing sequences in
/// lexicographic order. Branches whose graph has an all-white component of
/// two or more vertices are cut, since no later press can reach it.
pub struct SequenceEnumerator {
    n: usize,
    /// `boards[d*n..(d+1)*n]` is the state after `path[..d]`.
    boards: Vec<u64>,
    cursor: Vec<usize>,
    path: Vec<usize>,
    state: EnumState,
}

#[derive(PartialEq, Eq)]
enum EnumState {
    Fresh,
    Running,
    Done,
}

impl SequenceEnumerator {
    pub fn new(g: &BicoloredGraph) -> Result<Self> {
        let n = g.n();
        let root = board_of(g)?;
        let mut boards = vec![0u64; (n + 1) * n];
        boards[..n].copy_from_slice(&root);
        Ok(Self {
            n,
            boards,
            cursor: vec![0; n + 1],
            path: Vec::with_capacity(n),
            state: EnumState::Fresh,
        })
    }

    fn emit(&self, path: &[usize]) -> PressingSequence {
        PressingSequence::new(path.to_vec(), self.n).expect("pressed vertices are distinct")
    }
}

impl Iterator for SequenceEnumerator {
    type Item = PressingSequence;

    fn next(&mut self) -> Option<PressingSequence> {
        let n = self.n;
        match self.state {
            EnumState::Done => return None,
            EnumState::Fresh => {
                let root = &self.boards[..n];
                if is_cleared(root) {
                    self.state = EnumState::Done;
                    return Some(PressingSequence::empty(n));
                }
                if !board_components_ok(root) {
                    self.state = EnumState::Done;
                    return None;
                }
                self.state = EnumState::Running;
            }
            EnumState::Running => {}
        }
        loop {
            let d = self.path.len();
            let (head, tail) = self.boards.split_at_mut((d + 1) * n);
            let cur = &head[d * n..];
            let blacks = black_mask(cur) >> self.cursor[d].min(63);
            let candidate = if self.cursor[d] >= n || blacks == 0 {
                None
            } else {
                Some(self.cursor[d] + blacks.trailing_zeros() as usize)
            };
            let Some(v) = candidate else {
                if self.path.pop().is_none() {
                    self.state = EnumState::Done;
                    return None;
                }
                continue;
            };
            self.cursor[d] = v + 1;
            let next = &mut tail[..n];
            press_board(cur, next, v);
            if is_cleared(next) {
                self.path.push(v);
                let out = self.emit(&self.path);
                self.path.pop();
                return Some(out);
            }
            if !board_components_ok(next) {
                continue;
            }
            self.path.push(v);
            self.cursor[d + 1] = 0;
        }
    }
}

/// Every successful pressing sequence, lexicographically, truncated to
/// `limit` when given.
pub fn enumerate_sequences(
    g: &BicoloredGraph,
    limit: Option<usize>,
) -> Result<Vec<PressingSequence>> {
    let it = SequenceEnumerator::new(g)?;
    Ok(match limit {
        Some(k) => it.take(k).collect(),
        None => it.collect(),
    })
}

/// Number of successful pressing sequences, broken down by length:
/// entry `l` counts those with exactly `l` presses.
///
/// Memoized on the full graph state, so sequences that reach the same
/// intermediate graph share the work below it.
pub fn count_sequences_by_length(g: &BicoloredGraph) -> Result<Vec<u128>> {
    let root = board_of(g)?;
    let mut memo = HashMap::new();
    let mut counts = completions(&root, &mut memo);
    counts.resize(g.n() + 1, 0);
    Ok(counts)
}

pub fn count_sequences(g: &BicoloredGraph) -> Result<u128> {
    Ok(count_sequences_by_length(g)?.iter().sum())
}

fn completions(board: &[u64], memo: &mut HashMap<Vec<u64>, Vec<u128>>) -> Vec<u128> {
    if is_cleared(board) {
        return vec![1];
    }
    if let Some(c) = memo.get(board) {
        return c.clone();
    }
    let mut total: Vec<u128> = Vec::new();
    let mut next = vec![0u64; board.len()];
    for v in BitIter(black_mask(board)) {
        press_board(board, &mut next, v);
        let sub = completions(&next, memo);
        if total.len() < sub.len() + 1 {
            total.resize(sub.len() + 1, 0);
        }
        for (l, c) in sub.iter().enumerate() {
            total[l + 1] += c;
        }
    }
    while total.last() == Some(&0) {
        total.pop();
    }
    memo.insert(board.to_vec(), total.clone());
    total
}

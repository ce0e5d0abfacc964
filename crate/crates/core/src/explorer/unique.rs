//! Search for uniquely pressable graphs: exactly one successful sequence,
//! and that sequence is not empty.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{BicoloredGraph, Color};
use crate::sequences::{black_mask, board_components_ok, board_of, is_cleared, press_board};

pub const UNIQUELY_PRESSABLE_MAX_N: usize = 7;

/// Number of successful sequences from `board`, stopping once `cap` are found.
fn count_capped(board: &[u64], cap: usize) -> usize {
    if is_cleared(board) {
        return 1;
    }
    if !board_components_ok(board) {
        return 0;
    }
    let mut found = 0;
    let mut next = vec![0u64; board.len()];
    let mut blacks = black_mask(board);
    while blacks != 0 && found < cap {
        let v = blacks.trailing_zeros() as usize;
        blacks &= blacks - 1;
        press_board(board, &mut next, v);
        found += count_capped(&next, cap - found);
    }
    found
}

#[must_use]
pub fn is_uniquely_pressable(g: &BicoloredGraph) -> bool {
    match board_of(g) {
        Ok(board) => !is_cleared(&board) && count_capped(&board, 2) == 1,
        Err(_) => false,
    }
}

/// Bit code of `g` relabeled so new vertex `i` is old vertex `order[i]`:
/// colors in the high bits, then the upper triangle row by row.
fn encode(g: &BicoloredGraph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for &v in order {
        code = code << 1 | u64::from(!g.is_black(v));
    }
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | u64::from(!g.adjacent(order[i], order[j]));
        }
    }
    code
}

/// Canonical code and relabeling order of `g` under color-preserving
/// isomorphism. Vertices are first split into cells by an invariant (color,
/// degree, sorted neighbor degrees); the code is the minimum over all
/// relabelings that lay the cells out in sorted order.
fn canonical(g: &BicoloredGraph) -> (u64, Vec<usize>) {
    let n = g.n();
    let mut keys: Vec<(bool, usize, Vec<usize>, usize)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).map(|u| g.degree(u)).collect();
            nd.sort_unstable();
            (!g.is_black(v), g.degree(v), nd, v)
        })
        .collect();
    keys.sort();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (i, k) in keys.iter().enumerate() {
        if i > 0 && (&keys[i - 1].0, keys[i - 1].1, &keys[i - 1].2) == (&k.0, k.1, &k.2) {
            cells.last_mut().expect("nonempty").push(k.3);
        } else {
            cells.push(vec![k.3]);
        }
    }
    let mut best = (u64::MAX, Vec::new());
    let mut order = Vec::with_capacity(n);
    search(g, &mut cells, 0, &mut order, &mut best);
    best
}

fn search(
    g: &BicoloredGraph,
    cells: &mut [Vec<usize>],
    cell: usize,
    order: &mut Vec<usize>,
    best: &mut (u64, Vec<usize>),
) {
    if cell == cells.len() {
        let code = encode(g, order);
        if code < best.0 {
            *best = (code, order.clone());
        }
        return;
    }
    if cells[cell].is_empty() {
        return;
    }
    let members = cells[cell].clone();
    for (k, &v) in members.iter().enumerate() {
        cells[cell].remove(k);
        order.push(v);
        let next = if cells[cell].is_empty() {
            cell + 1
        } else {
            cell
        };
        search(g, cells, next, order, best);
        order.pop();
        cells[cell].insert(k, v);
    }
}

fn relabeled(g: &BicoloredGraph, order: &[usize]) -> BicoloredGraph {
    let n = g.n();
    let colors: Vec<Color> = order.iter().map(|&v| g.color(v)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if g.adjacent(order[i], order[j]) {
                edges.push((i, j));
            }
        }
    }
    BicoloredGraph::new(&colors, &edges).expect("relabeling keeps a simple graph")
}

/// Every uniquely pressable graph on `n` vertices, one per color-preserving
/// isomorphism class, in canonical form, ordered by canonical code.
///
/// Only graphs whose vertices are sorted by non-increasing degree, with
/// black before white among equal degrees, are generated. Every class has
/// such a member.
pub fn find_uniquely_pressable(n: usize) -> Result<Vec<BicoloredGraph>> {
    if n > UNIQUELY_PRESSABLE_MAX_N {
        return Err(Error::BudgetExceeded {
            what: "uniquely-pressable vertex",
            limit: UNIQUELY_PRESSABLE_MAX_N,
            actual: n,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let mut found: BTreeMap<u64, BicoloredGraph> = BTreeMap::new();
    let mut adj = vec![0u64; n];
    for mask in 0u64..1 << pairs.len() {
        adj.iter_mut().for_each(|r| *r = 0);
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
        let degree: Vec<u32> = adj.iter().map(|r| r.count_ones()).collect();
        if degree.windows(2).any(|w| w[0] < w[1]) {
            continue;
        }
        for blacks in 0u64..1 << n {
            // Within a run of equal degree, black vertices come first.
            if (1..n).any(|v| {
                degree[v] == degree[v - 1] && blacks >> v & 1 == 1 && blacks >> (v - 1) & 1 == 0
            }) {
                continue;
            }
            let board: Vec<u64> = (0..n).map(|v| adj[v] | (blacks & 1 << v)).collect();
            if is_cleared(&board) || count_capped(&board, 2) != 1 {
                continue;
            }
            let colors: Vec<Color> = (0..n)
                .map(|v| {
                    if blacks >> v & 1 == 1 {
                        Color::Black
                    } else {
                        Color::White
                    }
                })
                .collect();
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = BicoloredGraph::new(&colors, &edges)?;
            let (code, order) = canonical(&g);
            found.entry(code).or_insert_with(|| relabeled(&g, &order));
        }
    }
    Ok(found.into_values().collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::PermutationMap;
    use crate::graph::Color::{Black as B, White as W};
    use crate::sequences::{all_arrangements, count_sequences};

    /// Canonical code by minimum over every relabeling.
    fn brute_code(g: &BicoloredGraph) -> u64 {
        all_arrangements(g.n(), g.n())
            .iter()
            .map(|p| encode(g, p))
            .min()
            .unwrap()
    }

    fn all_graphs(n: usize) -> Vec<BicoloredGraph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        let mut out = Vec::new();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            for blacks in 0u32..1 << n {
                let colors: Vec<Color> = (0..n)
                    .map(|v| if blacks >> v & 1 == 1 { B } else { W })
                    .collect();
                out.push(BicoloredGraph::new(&colors, &edges).unwrap());
            }
        }
        out
    }

    #[test]
    fn examples() {
        let one = find_uniquely_pressable(1).unwrap();
        assert_eq!(one, vec![BicoloredGraph::new(&[B], &[]).unwrap()]);
        let two = find_uniquely_pressable(2).unwrap();
        let bw = BicoloredGraph::new(&[B, W], &[(0, 1)]).unwrap();
        assert!(two.iter().any(|g| canonical(g).0 == canonical(&bw).0));
        assert!(matches!(
            find_uniquely_pressable(8),
            Err(Error::BudgetExceeded { .. })
        ));
        for g in find_uniquely_pressable(4).unwrap() {
            assert!(g.colors().contains(&B));
        }
    }

    #[test]
    fn canonical_code_separates_classes_like_brute_force() {
        use std::collections::HashMap;
        let mut fwd: HashMap<u64, u64> = HashMap::new();
        let mut back: HashMap<u64, u64> = HashMap::new();
        for g in all_graphs(4) {
            let (c, b) = (canonical(&g).0, brute_code(&g));
            assert_eq!(*fwd.entry(c).or_insert(b), b);
            assert_eq!(*back.entry(b).or_insert(c), c);
        }
    }

    #[test]
    fn canonical_form_is_isomorphism_invariant() {
        let g = BicoloredGraph::new(
            &[B, W, W, B, W],
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 3)],
        )
        .unwrap();
        let code = canonical(&g).0;
        for p in all_arrangements(5, 5) {
            let h = g.relabel(&PermutationMap::new(p).unwrap()).unwrap();
            assert_eq!(canonical(&h).0, code);
        }
    }

    #[test]
    fn search_matches_exhaustive_scan() {
        for n in 1..=4 {
            let mut expect: Vec<u64> = all_graphs(n)
                .iter()
                .filter(|g| !g.is_cleared() && count_sequences(g).unwrap() == 1)
                .map(brute_code)
                .collect();
            expect.sort_unstable();
            expect.dedup();
            let mut got: Vec<u64> = find_uniquely_pressable(n)
                .unwrap()
                .iter()
                .map(|g| {
                    assert!(is_uniquely_pressable(g));
                    brute_code(g)
                })
                .collect();
            got.sort_unstable();
            assert_eq!(got, expect, "n = {n}");
        }
    }
}

mod common;

use common::*;
use pressing_lab::gf2::PermutationMap;
use pressing_lab::graph::{BicoloredGraph, Color};
use pressing_lab::sequences::{
    count_sequences, count_sequences_by_length, enumerate_sequences, unique_coloring, verify,
    verify_simulation, Method, PressingSequence,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn seeded_graph(n: usize) -> impl Strategy<Value = BicoloredGraph> {
    any::<u64>().prop_map(move |seed| random_graph(n, &mut ChaCha8Rng::seed_from_u64(seed)))
}

/// Every successful sequence, by trying every ordering of every subset.
fn brute_force_successes(g: &BicoloredGraph) -> Vec<PressingSequence> {
    let mut out: Vec<PressingSequence> = all_sequences(g.n())
        .into_iter()
        .filter(|s| verify_simulation(g, s).unwrap().verdict)
        .collect();
    out.sort_by(|a, b| a.vertices().cmp(b.vertices()));
    out
}

#[test]
fn enumeration_matches_brute_force() {
    for n in 1..=4 {
        for g in all_graphs(n) {
            let seqs = enumerate_sequences(&g, None).unwrap();
            assert_eq!(seqs, brute_force_successes(&g), "{g:?}");
            assert_eq!(count_sequences(&g).unwrap(), seqs.len() as u128);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn enumeration_is_sorted_successful_and_counted(g in (1usize..=8).prop_flat_map(seeded_graph)) {
        let seqs = enumerate_sequences(&g, None).unwrap();
        prop_assert!(seqs.windows(2).all(|w| w[0].vertices() < w[1].vertices()));
        let rank = g.matrix().rank();
        for s in &seqs {
            prop_assert_eq!(s.len(), rank);
            prop_assert!(verify_simulation(&g, s).unwrap().verdict);
        }
        let by_len = count_sequences_by_length(&g).unwrap();
        prop_assert_eq!(by_len.iter().sum::<u128>(), seqs.len() as u128);
        prop_assert_eq!(by_len[rank], seqs.len() as u128);
        prop_assert_eq!(seqs.is_empty(), !g.components_ok());
    }

    #[test]
    fn counts_are_relabeling_invariant(
        (g, p) in (1usize..=8).prop_flat_map(|n| (seeded_graph(n), Just((0..n).collect::<Vec<_>>()).prop_shuffle()))
    ) {
        let sigma = PermutationMap::new(p).unwrap();
        let h = g.relabel(&sigma).unwrap();
        prop_assert_eq!(count_sequences(&h).unwrap(), count_sequences(&g).unwrap());
        let inverse = sigma.inverse();
        for s in enumerate_sequences(&g, Some(20)).unwrap() {
            let moved = PressingSequence::new(s.vertices().iter().map(|&v| inverse.apply(v)).collect(), g.n()).unwrap();
            prop_assert!(verify_simulation(&h, &moved).unwrap().verdict);
        }
    }

    #[test]
    fn five_verifiers_agree_at_seven(g in seeded_graph(7), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut candidates = vec![random_sequence(7, &mut rng)];
        candidates.extend(enumerate_sequences(&g, Some(3)).unwrap());
        for s in candidates {
            let sim = verify(&g, &s, Method::Simulation).unwrap().verdict;
            for m in [Method::Minors, Method::Matchings, Method::Cholesky] {
                prop_assert_eq!(verify(&g, &s, m).unwrap().verdict, sim, "{:?} on {}", m, s);
            }
            if let Ok(r) = verify(&g, &s, Method::Psi) {
                prop_assert_eq!(r.verdict, sim, "psi on {}", s);
            }
        }
    }

    #[test]
    fn unique_coloring_succeeds(
        (edges, order) in (1usize..=9).prop_flat_map(|n| (
            any::<u64>().prop_map(move |seed| random_edges(n, &mut ChaCha8Rng::seed_from_u64(seed))),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        ))
    ) {
        let n = order.len();
        let plain = BicoloredGraph::new(&vec![Color::White; n], &edges).unwrap();
        let seq = PressingSequence::new(order, n).unwrap();
        let colors = unique_coloring(&plain, &seq).unwrap();
        prop_assert!(verify_simulation(&plain.with_colors(&colors), &seq).unwrap().verdict);
    }
}

use pressing_lab::gf2::{Gf2Matrix, PermutationMap};
use pressing_lab::sequences::all_arrangements;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Gf2Matrix> {
    proptest::collection::vec(any::<bool>(), rows * cols)
        .prop_map(move |bits| Gf2Matrix::from_fn(rows, cols, |i, j| bits[i * cols + j]))
}

fn square(max: usize) -> impl Strategy<Value = Gf2Matrix> {
    (1..=max).prop_flat_map(|n| matrix(n, n))
}

fn symmetric(max: usize) -> impl Strategy<Value = Gf2Matrix> {
    square(max).prop_map(|m| {
        let n = m.n_rows();
        Gf2Matrix::from_fn(n, n, |i, j| m.get(i.min(j), i.max(j)))
    })
}

fn permutation(n: usize) -> impl Strategy<Value = PermutationMap> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| PermutationMap::new(v).unwrap())
}

/// Parity of the permanent, by summing over all permutations.
fn permanent_parity(m: &Gf2Matrix) -> bool {
    let n = m.n_rows();
    all_arrangements(n, n)
        .iter()
        .filter(|p| p.iter().enumerate().all(|(i, &j)| m.get(i, j)))
        .count()
        % 2
        == 1
}

/// Rank by counting the distinct vectors in the row space.
fn span_rank(m: &Gf2Matrix) -> usize {
    let rows: Vec<u64> = (0..m.n_rows())
        .map(|i| (0..m.n_cols()).fold(0u64, |acc, j| acc | u64::from(m.get(i, j)) << j))
        .collect();
    let mut span = std::collections::HashSet::from([0u64]);
    for r in rows {
        let extended: Vec<u64> = span.iter().map(|&v| v ^ r).collect();
        span.extend(extended);
    }
    span.len().trailing_zeros() as usize
}

#[test]
fn lpn_iff_minor_pattern_on_small_symmetric() {
    for n in 1..=4 {
        let cells: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        for mask in 0u32..1 << cells.len() {
            let mut m = Gf2Matrix::zeros(n, n);
            for (k, &(i, j)) in cells.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    m.set(i, j, true);
                    m.set(j, i, true);
                }
            }
            let rank = m.rank();
            let minors = m.leading_principal_minors().unwrap();
            let pattern = minors.iter().enumerate().all(|(j, &b)| b == (j < rank));
            assert_eq!(m.is_lpn().unwrap(), pattern, "{m}");
        }
    }
}

#[test]
fn factorizations_round_trip_at_50() {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    for _ in 0..20 {
        let l = Gf2Matrix::random_unit_lower(50, &mut rng);
        let u = Gf2Matrix::random(50, 50, &mut rng);
        let u = Gf2Matrix::from_fn(50, 50, |i, j| i == j || (j > i && u.get(i, j)));
        let m = l.mul(&u).unwrap();
        let (l2, u2) = m
            .lu_no_pivot()
            .unwrap()
            .expect("invertible L U has a pivot-free LU");
        assert_eq!((l2.clone(), u2.clone()), (l.clone(), u));
        assert_eq!(l2.mul(&u2).unwrap(), m);

        let llt = l.mul_self_transpose();
        let c = llt.cholesky().unwrap().expect("L Lᵀ has a Cholesky factor");
        assert_eq!(c.mul_self_transpose(), llt);
        assert_eq!(c, l);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn trace_length_is_rank(m in (1usize..=9, 1usize..=9).prop_flat_map(|(r, c)| matrix(r, c))) {
        let trace = m.elimination_trace();
        prop_assert_eq!(trace.len(), m.rank());
        prop_assert_eq!(m.rank(), span_rank(&m));
        prop_assert!(trace.t_list.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(trace.s_list.len(), trace.t_list.len());
    }

    #[test]
    fn determinant_is_permanent_parity(m in square(6)) {
        prop_assert_eq!(m.determinant().unwrap(), permanent_parity(&m));
    }

    #[test]
    fn conjugation_round_trips(
        (m, p) in (1usize..=12).prop_flat_map(|n| (matrix(n, n), permutation(n)))
    ) {
        let c = m.conjugate(&p).unwrap();
        prop_assert_eq!(c.conjugate(&p.inverse()).unwrap(), m.clone());
        let pm = p.to_matrix();
        prop_assert_eq!(c, pm.mul(&m).unwrap().mul(&pm.transpose()).unwrap());
    }

    #[test]
    fn lu_and_cholesky_agree_on_symmetric(m in symmetric(10)) {
        let lu = m.lu_no_pivot().unwrap();
        let ch = m.cholesky().unwrap();
        prop_assert_eq!(lu.is_some(), ch.is_some());
        if let Some((l, u)) = lu {
            prop_assert!(l.is_lower_triangular() && u.is_upper_triangular());
            prop_assert_eq!(l.mul(&u).unwrap(), m.clone());
        }
        if let Some(l) = ch {
            prop_assert!(l.is_lower_triangular());
            prop_assert_eq!(l.mul_self_transpose(), m);
        }
    }

    #[test]
    fn qu_factor_reconstructs(m in square(10)) {
        let q = m.psi();
        match m.qu_factor().unwrap() {
            Some((q2, u)) => {
                prop_assert_eq!(&q2, &q);
                prop_assert!(u.is_upper_triangular());
                prop_assert_eq!(q.mul(&u).unwrap(), m);
                prop_assert_eq!(q.psi(), q);
            }
            None => prop_assert!(!q.is_orthogonal().unwrap()),
        }
    }

    #[test]
    fn text_format_round_trips(m in (1usize..=70, 1usize..=70).prop_flat_map(|(r, c)| matrix(r, c))) {
        let text = m.to_text();
        prop_assert_eq!(Gf2Matrix::parse_text(&text).unwrap(), m);
    }
}

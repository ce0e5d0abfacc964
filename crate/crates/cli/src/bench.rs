use std::fmt::Write as _;
use std::time::Instant;

use pressing_lab::gf2::Gf2Matrix;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::Failure;

pub const MAX_BENCH_N: usize = 1 << 14;

fn line(out: &mut String, op: &str, result: &str, ns: u128, row_ops: u64) {
    let per_sec = if ns == 0 {
        0.0
    } else {
        row_ops as f64 * 1e9 / ns as f64
    };
    writeln!(
        out,
        "{op} {result} ns={ns} row_ops={row_ops} row_ops_per_sec={per_sec:.0}"
    )
    .expect("write to string");
}

/// Times rank, pivot-free LU and ψ on a seeded random symmetric matrix, and
/// Cholesky on `L Lᵀ` for a seeded random unit lower triangular `L`.
pub fn run(n: usize, seed: u64) -> Result<String, Failure> {
    if n == 0 || n > MAX_BENCH_N {
        return Err(Failure(format!(
            "bench: n must be in 1..={MAX_BENCH_N}, got {n}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m = Gf2Matrix::random_symmetric(n, &mut rng);
    let l = Gf2Matrix::random_unit_lower(n, &mut rng);
    let llt = l.mul_self_transpose();

    let mut out = String::new();
    writeln!(out, "n={n} seed={seed}").expect("write to string");

    let t = Instant::now();
    let (rank, ops) = m.rank_with_row_ops();
    line(
        &mut out,
        "rank",
        &format!("rank={rank}"),
        t.elapsed().as_nanos(),
        ops,
    );

    let t = Instant::now();
    let lu = m.lu_with_row_ops()?;
    let ns = t.elapsed().as_nanos();
    match lu {
        Some((_, _, ops)) => line(&mut out, "lu", "ok", ns, ops),
        None => line(&mut out, "lu", "stalled", ns, 0),
    }

    let t = Instant::now();
    let ch = llt.cholesky_with_row_ops()?;
    let ns = t.elapsed().as_nanos();
    match ch {
        Some((_, ops)) => line(&mut out, "cholesky", "ok", ns, ops),
        None => line(&mut out, "cholesky", "stalled", ns, 0),
    }

    let t = Instant::now();
    let (_, ops) = m.psi_with_row_ops();
    line(&mut out, "psi", "ok", t.elapsed().as_nanos(), ops);
    Ok(out)
}

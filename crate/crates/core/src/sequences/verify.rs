//! Five independent tests of whether a sequence is a successful pressing
//! sequence: direct simulation, leading principal minors, perfect-matching
//! parities, pivot-free Cholesky, and ψ-orthogonality.

use std::fmt;
use std::str::FromStr;

use super::PressingSequence;
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, PermutationMap};
use crate::graph::{BicoloredGraph, MATCHING_BRUTE_FORCE_BUDGET};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Simulation,
    Minors,
    Matchings,
    Cholesky,
    Psi,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Simulation,
        Method::Minors,
        Method::Matchings,
        Method::Cholesky,
        Method::Psi,
    ];

    #[must_use]
    pub fn name(self) -> &'static str {
        match self {
            Method::Simulation => "sim",
            Method::Minors => "minors",
            Method::Matchings => "matchings",
            Method::Cholesky => "cholesky",
            Method::Psi => "psi",
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s || (s == "simulation" && *m == Method::Simulation))
            .ok_or_else(|| format!("unknown method {s:?}"))
    }
}

/// Why a sequence was rejected. Positions are 1-indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// The press at this position hit a white vertex.
    IllegalPress(usize),
    /// Every press was legal but the final graph is not all-white and empty.
    Residue,
    /// Sequence length differs from the rank of the augmented adjacency matrix.
    RankMismatch { rank: usize, len: usize },
    /// The leading principal minor of this order has the wrong value.
    Minor(usize),
    /// The induced subgraph on this many leading vertices has the wrong
    /// matching parity.
    Parity(usize),
    /// Adding these vertices to the pressed prefix gives an odd number of
    /// perfect matchings, so the prefix leaves a nonempty residue.
    Extension(Vec<usize>),
    /// The conjugated matrix has no pivot-free Cholesky factor.
    NoCholesky,
    /// The Cholesky factor has a zero diagonal entry at this position.
    CholeskyPivot(usize),
    /// Column of ψ(LᵀPᵀ) that fails orthonormality.
    NotOrthogonal(usize),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::IllegalPress(i) => write!(f, "{i}"),
            Witness::Residue => f.write_str("residue"),
            Witness::RankMismatch { rank, len } => write!(f, "rank:{rank}!={len}"),
            Witness::Minor(j) => write!(f, "minor:{j}"),
            Witness::Parity(j) => write!(f, "parity:{j}"),
            Witness::Extension(vs) => {
                let vs: Vec<String> = vs.iter().map(|v| (v + 1).to_string()).collect();
                write!(f, "extension:{}", vs.join(","))
            }
            Witness::NoCholesky => f.write_str("no-cholesky"),
            Witness::CholeskyPivot(j) => write!(f, "cholesky-pivot:{j}"),
            Witness::NotOrthogonal(j) => write!(f, "column:{j}"),
        }
    }
}

/// Verdict of one characterization. `witness` is set exactly when the
/// verdict is false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub method: Method,
    pub verdict: bool,
    pub witness: Option<Witness>,
}

impl VerificationReport {
    fn accept(method: Method) -> Self {
        Self {
            method,
            verdict: true,
            witness: None,
        }
    }

    fn reject(method: Method, witness: Witness) -> Self {
        Self {
            method,
            verdict: false,
            witness: Some(witness),
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => f.write_str("true"),
            Some(w) => write!(f, "false witness={w}"),
        }
    }
}

fn check_n(g: &BicoloredGraph, seq: &PressingSequence) -> Result<()> {
    if g.n() != seq.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            actual: seq.n(),
        });
    }
    Ok(())
}

/// Presses the sequence in order.
pub fn verify_simulation(g: &BicoloredGraph, seq: &PressingSequence) -> Result<VerificationReport> {
    check_n(g, seq)?;
    let mut cur = g.clone();
    for (k, &v) in seq.vertices().iter().enumerate() {
        if !cur.is_black(v) {
            return Ok(VerificationReport::reject(
                Method::Simulation,
                Witness::IllegalPress(k + 1),
            ));
        }
        cur.press_in_place(v)?;
    }
    Ok(if cur.is_cleared() {
        VerificationReport::accept(Method::Simulation)
    } else {
        VerificationReport::reject(Method::Simulation, Witness::Residue)
    })
}

/// Leading principal minors of `A(G)` conjugated by the extended ordering
/// must be nonzero exactly on the first `|seq|` orders, and `|seq|` must be
/// the rank.
pub fn verify_minors(g: &BicoloredGraph, seq: &PressingSequence) -> Result<VerificationReport> {
    check_n(g, seq)?;
    let a = g.matrix().conjugate(&seq.extended_ordering())?;
    let k = seq.len();
    let minors = a.leading_principal_minors()?;
    if let Some(j) = (0..a.n_rows()).find(|&j| minors[j] != (j < k)) {
        return Ok(VerificationReport::reject(
            Method::Minors,
            Witness::Minor(j + 1),
        ));
    }
    let rank = a.rank();
    if rank != k {
        return Ok(VerificationReport::reject(
            Method::Minors,
            Witness::RankMismatch { rank, len: k },
        ));
    }
    Ok(VerificationReport::accept(Method::Minors))
}

/// Perfect-matching parities of the loopy graph, counted by enumeration.
///
/// Along the extended ordering `v_1..v_n`, the first `j` vertices must carry
/// an odd number of perfect matchings for `j ≤ |seq|` and an even number
/// beyond. The prefix must also have even parity after adding any one or
/// any two further vertices: with the prefix parity odd, those parities are
/// the diagonal and off-diagonal entries of what remains after pressing the
/// prefix, so they vanish exactly when the prefix clears the graph.
pub fn verify_matchings(g: &BicoloredGraph, seq: &PressingSequence) -> Result<VerificationReport> {
    check_n(g, seq)?;
    if g.n() > MATCHING_BRUTE_FORCE_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "matching brute-force",
            limit: MATCHING_BRUTE_FORCE_BUDGET,
            actual: g.n(),
        });
    }
    let loopy = g.loopy_graph();
    let order = seq.extended_ordering();
    let order = order.as_slice();
    let k = seq.len();
    for j in 1..=g.n() {
        if loopy.matching_parity_bruteforce(&order[..j])? != (j <= k) {
            return Ok(VerificationReport::reject(
                Method::Matchings,
                Witness::Parity(j),
            ));
        }
    }
    let prefix = &order[..k];
    let rest = &order[k..];
    let mut subset = prefix.to_vec();
    for (ai, &a) in rest.iter().enumerate() {
        subset.push(a);
        if loopy.matching_parity_bruteforce(&subset)? {
            return Ok(VerificationReport::reject(
                Method::Matchings,
                Witness::Extension(vec![a]),
            ));
        }
        for &b in &rest[ai + 1..] {
            subset.push(b);
            let odd = loopy.matching_parity_bruteforce(&subset)?;
            subset.pop();
            if odd {
                return Ok(VerificationReport::reject(
                    Method::Matchings,
                    Witness::Extension(vec![a, b]),
                ));
            }
        }
        subset.pop();
    }
    Ok(VerificationReport::accept(Method::Matchings))
}

/// Pivot-free Cholesky of the conjugated matrix, with a nonzero diagonal on
/// the first `|seq|` positions and `rank(L Lᵀ) = |seq| = rank(A)`.
pub fn verify_cholesky(g: &BicoloredGraph, seq: &PressingSequence) -> Result<VerificationReport> {
    check_n(g, seq)?;
    Ok(cholesky_report(g, seq)?.0)
}

/// Like [`verify_cholesky`], also returning the factor when one exists.
pub fn cholesky_report(
    g: &BicoloredGraph,
    seq: &PressingSequence,
) -> Result<(VerificationReport, Option<Gf2Matrix>)> {
    let a = g.matrix().conjugate(&seq.extended_ordering())?;
    let Some(l) = a.cholesky()? else {
        return Ok((
            VerificationReport::reject(Method::Cholesky, Witness::NoCholesky),
            None,
        ));
    };
    let k = seq.len();
    if let Some(j) = (0..k).find(|&j| !l.get(j, j)) {
        return Ok((
            VerificationReport::reject(Method::Cholesky, Witness::CholeskyPivot(j + 1)),
            Some(l),
        ));
    }
    let rank_llt = l.mul_self_transpose().rank();
    let rank_a = a.rank();
    if rank_llt != k || rank_a != k {
        let w = Witness::RankMismatch {
            rank: rank_a,
            len: k,
        };
        return Ok((VerificationReport::reject(Method::Cholesky, w), Some(l)));
    }
    Ok((VerificationReport::accept(Method::Cholesky), Some(l)))
}

/// ψ-orthogonality relative to a known full-length successful sequence.
///
/// Relabel `G` by `base` so the identity order succeeds, factor
/// `A = L Lᵀ`, and let `P` encode `seq` in the relabeled coordinates. The
/// verdict is whether `ψ(Lᵀ Pᵀ)` is orthogonal.
pub fn verify_psi(
    g: &BicoloredGraph,
    base: &PressingSequence,
    seq: &PressingSequence,
) -> Result<VerificationReport> {
    check_n(g, base)?;
    check_n(g, seq)?;
    let n = g.n();
    if base.len() != n {
        return Err(Error::SequenceLength {
            expected: n,
            actual: base.len(),
        });
    }
    if seq.len() != n {
        return Err(Error::SequenceLength {
            expected: n,
            actual: seq.len(),
        });
    }
    if g.matrix().rank() < n {
        return Err(Error::PsiRequiresFullRank);
    }
    if !verify_simulation(g, base)?.verdict {
        return Err(Error::BaseNotSuccessful);
    }
    let base_perm = base.to_permutation()?;
    let relabeled = g.matrix().conjugate(&base_perm)?;
    let l = relabeled.cholesky()?.ok_or(Error::BaseNotSuccessful)?;
    let base_inv = base_perm.inverse();
    let sigma = PermutationMap::new(seq.vertices().iter().map(|&v| base_inv.apply(v)).collect())?;
    match qu_relation(&l, &sigma)? {
        Some(_) => Ok(VerificationReport::accept(Method::Psi)),
        None => {
            let b = l.transpose().mul(&sigma.to_matrix().transpose())?;
            let q = b.psi();
            let gram = q.transpose().mul(&q)?;
            let col = (0..n)
                .find(|&j| (0..n).any(|i| gram.get(i, j) != (i == j)))
                .unwrap_or(0);
            Ok(VerificationReport::reject(
                Method::Psi,
                Witness::NotOrthogonal(col + 1),
            ))
        }
    }
}

/// `Lᵀ Pᵀ = Q U` with `Q = ψ(Lᵀ Pᵀ)` orthogonal, where `P` encodes `σ`.
/// Exists exactly when `σ` is a pressing sequence of the graph with
/// augmented adjacency matrix `L Lᵀ`.
pub fn qu_relation(
    l: &Gf2Matrix,
    sigma: &PermutationMap,
) -> Result<Option<(Gf2Matrix, Gf2Matrix)>> {
    let n = l.require_square()?;
    if sigma.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: sigma.len(),
        });
    }
    let b = l.transpose().mul(&sigma.to_matrix().transpose())?;
    b.qu_factor()
}

/// Runs one characterization. [`Method::Psi`] uses the greedy constructed
/// sequence as its base.
pub fn verify(
    g: &BicoloredGraph,
    seq: &PressingSequence,
    method: Method,
) -> Result<VerificationReport> {
    match method {
        Method::Simulation => verify_simulation(g, seq),
        Method::Minors => verify_minors(g, seq),
        Method::Matchings => verify_matchings(g, seq),
        Method::Cholesky => verify_cholesky(g, seq),
        Method::Psi => {
            let base = g
                .construct_successful_sequence()
                .map_err(|_| Error::PsiRequiresFullRank)?;
            verify_psi(g, &base, seq)
        }
    }
}

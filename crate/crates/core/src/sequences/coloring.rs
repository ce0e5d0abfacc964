use num_rational::Ratio;

use super::enumerate::count_sequences_by_length;
use super::PressingSequence;
use crate::error::{Error, Result};
use crate::graph::{BicoloredGraph, Color};

/// Largest graph [`average_count`] will sweep (it visits all `2^n` colorings).
pub const AVERAGE_COUNT_BUDGET: usize = 12;

/// The only coloring of `g`'s edges under which the full-length `sigma`
/// succeeds. Colors already on `g` are ignored.
///
/// Vertices are colored in `sigma` order. With the first `k` fixed, the
/// parity `a` of perfect matchings on them is odd; adding `w = σ(k+1)`
/// gives parity `c` if `w` has no loop and `a + c` if it does, where `c`
/// counts the matchings that pair `w` along an edge. Exactly one choice is
/// odd.
pub fn unique_coloring(g: &BicoloredGraph, sigma: &PressingSequence) -> Result<Vec<Color>> {
    let n = g.n();
    if sigma.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            actual: sigma.n(),
        });
    }
    if sigma.len() != n {
        return Err(Error::SequenceLength {
            expected: n,
            actual: sigma.len(),
        });
    }
    let mut colored = g.with_colors(&vec![Color::White; n]);
    let order = sigma.vertices();
    for k in 0..n {
        let loopless = colored.loopy_graph().matching_parity_det(&order[..=k])?;
        if !loopless {
            let mut colors = colored.colors();
            colors[order[k]] = Color::Black;
            colored = colored.with_colors(&colors);
        }
    }
    Ok(colored.colors())
}

/// Average, over all `2^n` colorings of `g`'s edges, of the number of
/// successful pressing sequences of length `n`. Exact.
pub fn average_count(g: &BicoloredGraph) -> Result<Ratio<u128>> {
    let n = g.n();
    if n > AVERAGE_COUNT_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "average-count vertex",
            limit: AVERAGE_COUNT_BUDGET,
            actual: n,
        });
    }
    let mut total: u128 = 0;
    for mask in 0u32..1 << n {
        let colors: Vec<Color> = (0..n)
            .map(|v| {
                if mask >> v & 1 == 1 {
                    Color::Black
                } else {
                    Color::White
                }
            })
            .collect();
        total += count_sequences_by_length(&g.with_colors(&colors))?[n];
    }
    Ok(Ratio::new(total, 1u128 << n))
}

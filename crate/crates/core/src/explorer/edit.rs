use crate::sequences::PressingSequence;

/// Longest common subsequence length.
#[must_use]
pub fn lcs_len(a: &[usize], b: &[usize]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for &x in a {
        for (j, &y) in b.iter().enumerate() {
            cur[j + 1] = if x == y {
                prev[j] + 1
            } else {
                cur[j].max(prev[j + 1])
            };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

/// Fewest single-element insertions plus deletions turning `s` into `t`.
#[must_use]
pub fn edit_distance(s: &PressingSequence, t: &PressingSequence) -> usize {
    indel_distance(s.vertices(), t.vertices())
}

#[must_use]
pub fn indel_distance(a: &[usize], b: &[usize]) -> usize {
    a.len() + b.len() - 2 * lcs_len(a, b)
}

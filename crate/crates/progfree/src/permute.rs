//! Lexicographic permutation stepping, shared by the exhaustive counters
//! and claim checks.

/// Advances `xs` to its next permutation in lexicographic order; returns
/// false once `xs` is the final (descending) permutation.
pub(crate) fn next_permutation(xs: &mut [i64]) -> bool {
    let n = xs.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && xs[i - 1] >= xs[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while xs[j] <= xs[i - 1] {
        j -= 1;
    }
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn walks_all_permutations_once() {
        let mut xs = vec![1, 2, 3, 4];
        let mut seen = vec![xs.clone()];
        while next_permutation(&mut xs) {
            seen.push(xs.clone());
        }
        assert_eq!(seen.len(), 24);
        let mut dedup = seen.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 24);
        // Lexicographic order start and end.
        assert_eq!(seen[0], vec![1, 2, 3, 4]);
        assert_eq!(seen[23], vec![4, 3, 2, 1]);
    }

    #[test]
    fn trivial_lengths() {
        let mut empty: Vec<i64> = vec![];
        assert!(!next_permutation(&mut empty));
        let mut one = vec![7];
        assert!(!next_permutation(&mut one));
    }
}

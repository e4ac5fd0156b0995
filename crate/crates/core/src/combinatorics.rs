//! Enumeration helpers shared by decomposition and recomposition.

use std::ops::Range;

use itertools::Itertools;

/// All ways to cut `0..n` into non-empty contiguous runs, in order.
///
/// Pattern `mask` places a cut after element `i` when bit `i` is set, so there
/// are exactly `2^(n-1)` groupings for `n >= 1`. Patterns are yielded from the
/// finest (every element alone) to the coarsest (one run).
pub fn contiguous_groupings(n: usize) -> impl Iterator<Item = Vec<Range<usize>>> {
    let patterns: u64 = if n == 0 { 0 } else { 1u64 << (n - 1) };
    (0..patterns).rev().map(move |mask| {
        let mut runs = Vec::new();
        let mut start = 0;
        for i in 0..n {
            let cut = i + 1 == n || mask & (1 << i) != 0;
            if cut {
                runs.push(start..i + 1);
                start = i + 1;
            }
        }
        runs
    })
}

/// All `n!` orderings of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..n).permutations(n)
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grouping_counts() {
        assert_eq!(contiguous_groupings(0).count(), 0);
        for n in 1..=8 {
            assert_eq!(contiguous_groupings(n).count(), 1 << (n - 1));
        }
    }

    #[test]
    fn groupings_of_three() {
        let got: Vec<_> = contiguous_groupings(3).collect();
        assert_eq!(
            got,
            vec![
                vec![0..1, 1..2, 2..3],
                vec![0..2, 2..3],
                vec![0..1, 1..3],
                vec![0..3],
            ]
        );
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).count(), 1);
        for n in 1..=5 {
            assert_eq!(permutations(n).count(), factorial(n));
        }
    }
}

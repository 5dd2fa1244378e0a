//! Permutations of `[1, n]` in window notation.

use alloc::vec::Vec;

/// True iff `sigma` lists each of `1..=sigma.len()` exactly once.
pub fn is_permutation(sigma: &[u32]) -> bool {
    let n = sigma.len();
    let mut seen = alloc::vec![false; n + 1];
    sigma.iter().all(|&x| {
        let x = x as usize;
        (1..=n).contains(&x) && !core::mem::replace(&mut seen[x], true)
    })
}

/// All permutations of `[1, n]` in lexicographic order.
#[derive(Clone, Debug)]
pub struct Permutations {
    current: Option<Vec<u32>>,
}

impl Permutations {
    pub fn new(n: u32) -> Self {
        Permutations {
            current: Some((1..=n).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        if next_permutation(&mut next) {
            self.current = Some(next);
        }
        Some(out)
    }
}

/// Advances `v` to the next lexicographic permutation; false at the last one.
fn next_permutation(v: &mut [u32]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v
        .iter()
        .rposition(|&x| x > v[i])
        .expect("pivot has a larger successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Calls `visit` with every sequence that lists `[1, n]` as consecutive
/// blocks of the given sizes, each block increasing. Sequences come out in
/// lexicographic order.
pub(crate) fn for_each_block_arrangement(
    n: u32,
    block_sizes: &[u32],
    visit: &mut dyn FnMut(&[u32]),
) {
    debug_assert_eq!(block_sizes.iter().sum::<u32>(), n);
    let remaining: Vec<u32> = (1..=n).collect();
    let mut out = Vec::with_capacity(n as usize);
    arrange(&remaining, block_sizes, &mut out, visit);
}

fn arrange(remaining: &[u32], blocks: &[u32], out: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    let Some((&size, rest)) = blocks.split_first() else {
        visit(out);
        return;
    };
    let mut chosen = Vec::with_capacity(size as usize);
    choose(
        remaining,
        0,
        size as usize,
        &mut chosen,
        &mut |picked: &[u32]| {
            let left: Vec<u32> = remaining
                .iter()
                .copied()
                .filter(|x| !picked.contains(x))
                .collect();
            let mark = out.len();
            out.extend_from_slice(picked);
            arrange(&left, rest, out, visit);
            out.truncate(mark);
        },
    );
}

fn choose(
    pool: &[u32],
    start: usize,
    k: usize,
    chosen: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]),
) {
    if chosen.len() == k {
        visit(chosen);
        return;
    }
    let need = k - chosen.len();
    for i in start..pool.len() {
        if pool.len() - i < need {
            break;
        }
        chosen.push(pool[i]);
        choose(pool, i + 1, k, chosen, visit);
        chosen.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn lexicographic_permutations() {
        let all: Vec<Vec<u32>> = Permutations::new(3).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 2, 3],
                vec![1, 3, 2],
                vec![2, 1, 3],
                vec![2, 3, 1],
                vec![3, 1, 2],
                vec![3, 2, 1]
            ]
        );
        assert_eq!(Permutations::new(0).count(), 1);
        assert_eq!(Permutations::new(5).count(), 120);
        assert!(Permutations::new(5).all(|p| is_permutation(&p)));
    }

    #[test]
    fn permutation_check() {
        assert!(is_permutation(&[3, 4, 2, 1]));
        assert!(is_permutation(&[]));
        assert!(!is_permutation(&[1, 1]));
        assert!(!is_permutation(&[0, 1]));
        assert!(!is_permutation(&[1, 3]));
    }

    #[test]
    fn block_arrangements() {
        let mut seen = Vec::new();
        for_each_block_arrangement(4, &[2, 1, 1], &mut |s| seen.push(s.to_vec()));
        // 4! / 2! = 12 arrangements, first block increasing
        assert_eq!(seen.len(), 12);
        assert!(seen.iter().all(|s| s[0] < s[1] && is_permutation(s)));
        assert!(seen.windows(2).all(|w| w[0] < w[1]));
        let mut one = Vec::new();
        for_each_block_arrangement(3, &[3], &mut |s| one.push(s.to_vec()));
        assert_eq!(one, vec![vec![1, 2, 3]]);
    }
}

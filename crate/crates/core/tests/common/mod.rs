//! Shared helpers for the exhaustive sweeps.

use bgposet::Permutation;

/// Calls `f` on every permutation of order `n`, in lexicographic order.
pub fn for_each_permutation(n: usize, mut f: impl FnMut(&Permutation)) {
    let mut word: Vec<usize> = (1..=n).collect();
    loop {
        f(&Permutation::from_word(word.clone()).expect("valid word"));
        if !next_word(&mut word) {
            return;
        }
    }
}

/// All permutations of order `n`, in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    for_each_permutation(n, |p| out.push(p.clone()));
    out
}

fn next_word(word: &mut [usize]) -> bool {
    let n = word.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

//! Independent brute-force counterparts of the closed-form statistics.
//!
//! Everything in this module works from first definitions (reduction
//! closure, graph search, dynamic programming, bipartite matching) and
//! never calls the formula it is meant to check. The verify command
//! and the test suites run both sides and compare.

use std::collections::VecDeque;

use crate::bigrassmannian::{enumerate_bg, LengthVector};
use crate::bruhat::leq_ehresmann;
use crate::count::Count;
use crate::error::Result;
use crate::permutation::Permutation;
use crate::poset::HassePoset;

/// Counts bigrassmannian permutations weakly below `p`, by filtering
/// the enumeration through the tableau criterion.
pub fn bg_below_count(p: &Permutation) -> Result<Count> {
    let mut count = 0u64;
    for v in enumerate_bg(p.order())? {
        if leq_ehresmann(&v.permutation(), p)? {
            count += 1;
        }
    }
    Ok(Count::from(count))
}

/// Counts bigrassmannian permutations weakly above `p`.
pub fn bg_above_count(p: &Permutation) -> Result<Count> {
    let mut count = 0u64;
    for v in enumerate_bg(p.order())? {
        if leq_ehresmann(p, &v.permutation())? {
            count += 1;
        }
    }
    Ok(Count::from(count))
}

/// Reachability matrix of the cover digraph: `closure[i][j]` iff
/// vertex `j` is weakly above vertex `i`.
pub fn cover_closure(poset: &HassePoset) -> Vec<Vec<bool>> {
    let n = poset.vertex_count();
    let mut closure = vec![vec![false; n]; n];
    // Process top-down so every up-set is complete when consumed.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(poset.vertex(i).level()));
    for i in order {
        closure[i][i] = true;
        for &j in poset.up_covers(i) {
            let row = closure[j].clone();
            for (dst, src) in closure[i].iter_mut().zip(row) {
                *dst = *dst || src;
            }
        }
    }
    closure
}

/// Cover pairs recomputed from scratch as the transitive reduction of
/// a comparability relation: `u` is covered by `v` iff `u < v` with no
/// intermediate element.
pub fn transitive_reduction(
    verts: &[LengthVector],
    leq: impl Fn(&LengthVector, &LengthVector) -> bool,
) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (i, u) in verts.iter().enumerate() {
        for (j, v) in verts.iter().enumerate() {
            if i == j || !leq(u, v) {
                continue;
            }
            let intermediate = verts
                .iter()
                .enumerate()
                .any(|(k, w)| k != i && k != j && leq(u, w) && leq(w, v));
            if !intermediate {
                edges.push((i, j));
            }
        }
    }
    edges.sort_unstable();
    edges
}

/// Undirected breadth-first distance between two vertices of the
/// Hasse diagram; `None` if unreachable.
pub fn bfs_distance(poset: &HassePoset, from: usize, to: usize) -> Option<usize> {
    if from == to {
        return Some(0);
    }
    let mut dist = vec![usize::MAX; poset.vertex_count()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(i) = queue.pop_front() {
        for &j in poset.up_covers(i).iter().chain(poset.down_covers(i)) {
            if dist[j] == usize::MAX {
                dist[j] = dist[i] + 1;
                if j == to {
                    return Some(dist[j]);
                }
                queue.push_back(j);
            }
        }
    }
    None
}

/// All breadth-first distances from one vertex.
pub fn bfs_distances(poset: &HassePoset, from: usize) -> Vec<Option<usize>> {
    let mut dist = vec![usize::MAX; poset.vertex_count()];
    dist[from] = 0;
    let mut queue = VecDeque::from([from]);
    while let Some(i) = queue.pop_front() {
        for &j in poset.up_covers(i).iter().chain(poset.down_covers(i)) {
            if dist[j] == usize::MAX {
                dist[j] = dist[i] + 1;
                queue.push_back(j);
            }
        }
    }
    dist.into_iter()
        .map(|d| (d != usize::MAX).then_some(d))
        .collect()
}

/// Number of saturated chains from `from` up to `to`, counted by
/// dynamic programming over cover edges.
pub fn chain_count_dp(poset: &HassePoset, from: usize, to: usize) -> Count {
    chain_counts_from(poset, from)[to].clone()
}

/// Saturated-chain counts from `from` up to every vertex.
pub fn chain_counts_from(poset: &HassePoset, from: usize) -> Vec<Count> {
    let n = poset.vertex_count();
    let mut counts = vec![Count::ZERO; n];
    counts[from] = Count::from(1u32);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| poset.vertex(i).level());
    for i in order {
        if counts[i] == Count::ZERO {
            continue;
        }
        let c = counts[i].clone();
        for &j in poset.up_covers(i) {
            counts[j] += &c;
        }
    }
    counts
}

/// Total number of maximal chains, summed over all minimal-to-maximal
/// vertex pairs by dynamic programming.
pub fn maximal_chain_total(poset: &HassePoset) -> Count {
    let mut total = Count::ZERO;
    for i in 0..poset.vertex_count() {
        if !poset.down_covers(i).is_empty() {
            continue;
        }
        let counts = chain_counts_from(poset, i);
        for (j, c) in counts.iter().enumerate() {
            if poset.up_covers(j).is_empty() {
                total += c;
            }
        }
    }
    total
}

/// Size of the largest antichain, computed as a minimum chain cover:
/// vertices minus a maximum bipartite matching on the strict
/// comparability relation (Dilworth duality, Kuhn's augmenting paths).
pub fn max_antichain_dilworth(poset: &HassePoset) -> usize {
    let n = poset.vertex_count();
    let closure = cover_closure(poset);
    let adjacency: Vec<Vec<usize>> = (0..n)
        .map(|i| (0..n).filter(|&j| j != i && closure[i][j]).collect())
        .collect();
    let mut matched_right: Vec<Option<usize>> = vec![None; n];
    let mut matching = 0;
    for i in 0..n {
        let mut seen = vec![false; n];
        if augment(&adjacency, i, &mut seen, &mut matched_right) {
            matching += 1;
        }
    }
    n - matching
}

fn augment(
    adjacency: &[Vec<usize>],
    i: usize,
    seen: &mut [bool],
    matched_right: &mut [Option<usize>],
) -> bool {
    for &j in &adjacency[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if matched_right[j].is_none()
            || augment(adjacency, matched_right[j].unwrap(), seen, matched_right)
        {
            matched_right[j] = Some(i);
            return true;
        }
    }
    false
}

/// Maximal common lower bounds of a target set, found by filtering an
/// explicit comparability relation: keep the elements below every
/// target that no other such element strictly dominates.
pub fn maximal_below_brute(
    verts: &[LengthVector],
    targets: &[LengthVector],
    leq: impl Fn(&LengthVector, &LengthVector) -> bool,
) -> Vec<LengthVector> {
    let lower: Vec<&LengthVector> = verts
        .iter()
        .filter(|v| targets.iter().all(|t| leq(v, t)))
        .collect();
    let mut out: Vec<LengthVector> = lower
        .iter()
        .filter(|v| !lower.iter().any(|w| w != *v && leq(v, w)))
        .map(|v| **v)
        .collect();
    out.sort();
    out
}

/// Deterministic 64-bit generator (SplitMix64) for seeded sampling in
/// oracles, tests and benchmarks. Byte-stable across platforms.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform-enough draw from `0..bound` for sampling purposes.
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// A uniformly shuffled permutation of the given order.
    pub fn permutation(&mut self, n: usize) -> Permutation {
        let mut word: Vec<usize> = (1..=n).collect();
        for i in (1..n).rev() {
            word.swap(i, self.below(i + 1));
        }
        Permutation::from_word(word).expect("shuffle of the identity is a bijection")
    }
}

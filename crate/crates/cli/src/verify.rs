//! The `verify` command: formula-vs-oracle sweeps over every library
//! invariant, grouped into suites. Each check reports the number of
//! instances it examined and, on failure, a named counterexample.

use bgposet::oracle::{
    bfs_distances, bg_above_count, bg_below_count, chain_counts_from, cover_closure,
    max_antichain_dilworth, maximal_below_brute, maximal_chain_total, transitive_reduction,
    SplitMix64,
};
use bgposet::{
    beta_general, bg_count, butterfly_count, count_maximal_chains, count_saturated_chains, degree,
    edge_count, enumerate_bg, hasse_distance, leq_bb, leq_ehresmann, leq_reduction_oracle,
    level_size, max_antichain_size, maximal_below, maximal_elements, minimal_above,
    minimal_elements, sperner_decomposition, sperner_up_image, Count, HassePoset, LengthVector,
    Limits, Permutation,
};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Order,
    Counts,
    Sperner,
    Butterfly,
    Below,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

#[derive(Serialize)]
pub struct CheckReport {
    pub suite: &'static str,
    pub name: &'static str,
    pub max_n: usize,
    pub instances: u64,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

struct Runner {
    reports: Vec<CheckReport>,
}

/// A check body counts the instances it verified and returns the first
/// counterexample, if any.
type Outcome = (u64, Option<String>);

impl Runner {
    fn run(
        &mut self,
        suite: &'static str,
        name: &'static str,
        max_n: usize,
        body: impl FnOnce() -> Outcome,
    ) {
        let (instances, counterexample) = body();
        self.reports.push(CheckReport {
            suite,
            name,
            max_n,
            instances,
            status: if counterexample.is_none() {
                "pass"
            } else {
                "FAIL"
            },
            counterexample,
        });
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation::from_word(word.clone()).expect("valid word"));
        let len = word.len();
        let mut i = len - 1;
        while i > 0 && word[i - 1] >= word[i] {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        let mut j = len - 1;
        while word[j] <= word[i - 1] {
            j -= 1;
        }
        word.swap(i - 1, j);
        word[i..].reverse();
    }
}

/// Runs the selected suites up to order `max_n` (clipped per check by
/// the configured sweep caps) and returns one report per check.
pub fn run(suite: Suite, max_n: usize, limits: &Limits) -> Vec<CheckReport> {
    let sn = max_n.min(limits.sn_sweep_max);
    let bg = max_n.min(limits.bg_sweep_max);
    let mut r = Runner {
        reports: Vec::new(),
    };

    if suite.includes(Suite::Order) {
        order_checks(&mut r, max_n, sn, limits);
    }
    if suite.includes(Suite::Counts) {
        counts_checks(&mut r, sn, bg);
    }
    if suite.includes(Suite::Sperner) {
        sperner_checks(&mut r, max_n, bg);
    }
    if suite.includes(Suite::Butterfly) {
        butterfly_checks(&mut r, bg);
    }
    if suite.includes(Suite::Below) {
        below_checks(&mut r, max_n.min(6));
    }
    r.reports
}

fn order_checks(r: &mut Runner, max_n: usize, sn: usize, limits: &Limits) {
    r.run("order", "involutions-and-inverse-inversions", sn, || {
        let mut inst = 0;
        for n in 1..=sn {
            for p in all_permutations(n) {
                inst += 1;
                if p.inverse().inverse() != p || p.conjugate().conjugate() != p {
                    return (inst, Some(format!("involution broken at {p}")));
                }
                if p.inversions() != p.inverse().inversions() {
                    return (
                        inst,
                        Some(format!("inversion count differs from inverse at {p}")),
                    );
                }
            }
        }
        (inst, None)
    });

    r.run("order", "reduction-inversion-delta", sn, || {
        let mut inst = 0;
        for n in 1..=sn {
            for p in all_permutations(n) {
                let inv = p.inversions();
                for (q, step) in p.reductions() {
                    inst += 1;
                    if inv != q.inversions() + Count::from(2 * step.crossing_count + 1) {
                        return (
                            inst,
                            Some(format!(
                                "delta identity fails at {p} swap ({}, {})",
                                step.i, step.j
                            )),
                        );
                    }
                }
            }
        }
        (inst, None)
    });

    let po_cap = sn.min(5);
    r.run("order", "tableau-partial-order-axioms", po_cap, || {
        let mut inst = 0;
        for n in 2..=po_cap {
            let perms = all_permutations(n);
            let leq: Vec<Vec<bool>> = perms
                .iter()
                .map(|p| perms.iter().map(|q| leq_ehresmann(p, q).unwrap()).collect())
                .collect();
            for i in 0..perms.len() {
                if !leq[i][i] {
                    return (inst, Some(format!("reflexivity fails at {}", perms[i])));
                }
                for j in 0..perms.len() {
                    inst += 1;
                    if i != j && leq[i][j] && leq[j][i] {
                        return (
                            inst,
                            Some(format!("antisymmetry fails at {}, {}", perms[i], perms[j])),
                        );
                    }
                    for k in 0..perms.len() {
                        if leq[i][j] && leq[j][k] && !leq[i][k] {
                            return (
                                inst,
                                Some(format!(
                                    "transitivity fails at {}, {}, {}",
                                    perms[i], perms[j], perms[k]
                                )),
                            );
                        }
                    }
                }
            }
        }
        (inst, None)
    });

    let red_cap = sn.min(5);
    let red_top = if max_n >= 6 { 6 } else { red_cap };
    r.run("order", "reduction-closure-vs-tableau", red_top, || {
        let mut inst = 0;
        for n in 1..=red_cap {
            let perms = all_permutations(n);
            for p in &perms {
                for q in &perms {
                    inst += 1;
                    if leq_reduction_oracle(p, q, 8).unwrap() != leq_ehresmann(p, q).unwrap() {
                        return (
                            inst,
                            Some(format!("search and tableau disagree at {p}, {q}")),
                        );
                    }
                }
            }
        }
        if max_n >= 6 {
            let mut rng = SplitMix64::new(0x5eed_0001);
            for _ in 0..2000 {
                inst += 1;
                let p = rng.permutation(6);
                let q = rng.permutation(6);
                if leq_reduction_oracle(&p, &q, limits.reduction_oracle_max).unwrap()
                    != leq_ehresmann(&p, &q).unwrap()
                {
                    return (
                        inst,
                        Some(format!("search and tableau disagree at {p}, {q}")),
                    );
                }
            }
        }
        (inst, None)
    });

    r.run("order", "single-row-vs-tableau", sn, || {
        let mut inst = 0;
        for n in 2..=sn {
            let perms = all_permutations(n);
            for p in perms.iter().filter(|p| p.is_bigrassmannian()) {
                for q in &perms {
                    inst += 1;
                    if leq_bb(p, q).unwrap() != leq_ehresmann(p, q).unwrap() {
                        return (inst, Some(format!("single-row test disagrees at {p}, {q}")));
                    }
                }
            }
        }
        (inst, None)
    });

    let conj_cap = sn.min(5);
    r.run("order", "conjugation-invariance", conj_cap, || {
        let mut inst = 0;
        for n in 2..=conj_cap {
            let perms = all_permutations(n);
            for p in &perms {
                for q in &perms {
                    inst += 1;
                    if leq_ehresmann(p, q).unwrap()
                        != leq_ehresmann(&p.conjugate(), &q.conjugate()).unwrap()
                    {
                        return (inst, Some(format!("conjugation breaks order at {p}, {q}")));
                    }
                }
            }
        }
        (inst, None)
    });

    r.run("order", "order-respects-inversions", sn, || {
        let mut inst = 0;
        for n in 2..=sn {
            let perms = all_permutations(n);
            for p in &perms {
                for q in &perms {
                    inst += 1;
                    if leq_ehresmann(p, q).unwrap() && p.inversions() > q.inversions() {
                        return (inst, Some(format!("inversions grow downward at {p}, {q}")));
                    }
                }
            }
        }
        (inst, None)
    });
}

fn counts_checks(r: &mut Runner, sn: usize, bg: usize) {
    r.run("counts", "enumeration-size-binomial", 30, || {
        let mut inst = 0;
        for n in 1..=30 {
            inst += 1;
            if Count::from(enumerate_bg(n).unwrap().len()) != bg_count(n) {
                return (inst, Some(format!("enumeration size differs at order {n}")));
            }
        }
        (inst, None)
    });

    r.run("counts", "vector-word-bijection", 8, || {
        let mut inst = 0;
        for n in 2..=8 {
            for v in enumerate_bg(n).unwrap() {
                inst += 1;
                if LengthVector::of(&v.permutation()) != Ok(v) {
                    return (inst, Some(format!("round trip fails at {v}")));
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "vector-vs-tableau-comparability", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            let vecs = enumerate_bg(n).unwrap();
            let words: Vec<Permutation> = vecs.iter().map(LengthVector::permutation).collect();
            for (u, p) in vecs.iter().zip(&words) {
                for (v, q) in vecs.iter().zip(&words) {
                    inst += 1;
                    if u.leq(v).unwrap() != leq_ehresmann(p, q).unwrap() {
                        return (inst, Some(format!("coordinate test disagrees at {u}, {v}")));
                    }
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "reflection-reverses-order", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            let vecs = enumerate_bg(n).unwrap();
            for u in &vecs {
                for v in &vecs {
                    inst += 1;
                    if u.leq(v).unwrap() != v.f2143().leq(&u.f2143()).unwrap() {
                        return (inst, Some(format!("reflection duality fails at {u}, {v}")));
                    }
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "beta-alpha-reflection", 10, || {
        let mut inst = 0;
        for n in 2..=10 {
            for v in enumerate_bg(n).unwrap() {
                inst += 1;
                if v.beta() != v.f2143().alpha() {
                    return (inst, Some(format!("beta/alpha reflection fails at {v}")));
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "beta-displacement-on-vectors", 8, || {
        let mut inst = 0;
        for n in 2..=8 {
            for v in enumerate_bg(n).unwrap() {
                inst += 1;
                if v.beta() != beta_general(&v.permutation()) {
                    return (inst, Some(format!("beta formulas disagree at {v}")));
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "beta-vs-down-set-census", sn.min(6), || {
        let mut inst = 0;
        if sn >= 5 {
            for p in all_permutations(5) {
                inst += 1;
                if beta_general(&p) != bg_below_count(&p).unwrap() {
                    return (inst, Some(format!("down-set census disagrees at {p}")));
                }
            }
        }
        if sn >= 6 {
            let mut rng = SplitMix64::new(0x5eed_0002);
            for _ in 0..500 {
                inst += 1;
                let p = rng.permutation(6);
                if beta_general(&p) != bg_below_count(&p).unwrap() {
                    return (inst, Some(format!("down-set census disagrees at {p}")));
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "alpha-vs-up-set-census", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            for v in enumerate_bg(n).unwrap() {
                inst += 1;
                if v.alpha() != bg_above_count(&v.permutation()).unwrap() {
                    return (inst, Some(format!("up-set census disagrees at {v}")));
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "covers-are-transitive-reduction", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            let poset = HassePoset::build(n).unwrap();
            let mut built: Vec<(usize, usize)> = poset.edges().collect();
            built.sort_unstable();
            let reduction = transitive_reduction(poset.vertices(), |u, v| u.leq(v).unwrap());
            inst += built.len().max(reduction.len()) as u64;
            if built != reduction {
                return (inst, Some(format!("cover graph differs at order {n}")));
            }
            let closure = cover_closure(&poset);
            for (i, u) in poset.vertices().iter().enumerate() {
                for (j, v) in poset.vertices().iter().enumerate() {
                    if closure[i][j] != u.leq(v).unwrap() {
                        return (inst, Some(format!("closure differs at {u}, {v}")));
                    }
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "rank-grading", 8, || {
        let mut inst = 0;
        for n in 2..=8 {
            let poset = HassePoset::build(n).unwrap();
            for (i, j) in poset.edges() {
                inst += 1;
                if poset.vertex(i).level() + 1 != poset.vertex(j).level() {
                    return (
                        inst,
                        Some(format!(
                            "cover does not raise level by one: {} -> {}",
                            poset.vertex(i),
                            poset.vertex(j)
                        )),
                    );
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "degree-formula-vs-graph", bg, || {
        let mut inst = 0;
        for n in 3..=bg {
            let poset = HassePoset::build(n).unwrap();
            for (i, v) in poset.vertices().iter().enumerate() {
                inst += 1;
                let graph = poset.up_covers(i).len() + poset.down_covers(i).len();
                if degree(v).unwrap() != Count::from(graph) {
                    return (inst, Some(format!("degree differs at {v}")));
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "edge-count-formula-vs-graph", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            let total = HassePoset::build(n).unwrap().edge_total();
            inst += total as u64;
            if edge_count(n).unwrap() != Count::from(total) {
                return (inst, Some(format!("edge count differs at order {n}")));
            }
        }
        (inst, None)
    });

    r.run("counts", "extreme-elements-vs-graph", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            let poset = HassePoset::build(n).unwrap();
            let min: Vec<LengthVector> = (0..poset.vertex_count())
                .filter(|&i| poset.down_covers(i).is_empty())
                .map(|i| poset.vertex(i))
                .collect();
            let max: Vec<LengthVector> = (0..poset.vertex_count())
                .filter(|&i| poset.up_covers(i).is_empty())
                .map(|i| poset.vertex(i))
                .collect();
            inst += (min.len() + max.len()) as u64;
            if min != minimal_elements(n).unwrap() || min.len() != n - 1 {
                return (inst, Some(format!("minimal elements differ at order {n}")));
            }
            if max != maximal_elements(n).unwrap() || max.len() != n - 1 {
                return (inst, Some(format!("maximal elements differ at order {n}")));
            }
        }
        (inst, None)
    });

    r.run("counts", "level-sizes-vs-graph", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            let vecs = enumerate_bg(n).unwrap();
            for k in 0..=n - 2 {
                inst += 1;
                let counted = vecs.iter().filter(|v| v.level() == k).count();
                if level_size(n, k).unwrap() != Count::from(counted) {
                    return (
                        inst,
                        Some(format!("level size differs at order {n}, level {k}")),
                    );
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "chain-count-formula-vs-dp", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            let poset = HassePoset::build(n).unwrap();
            for i in 0..poset.vertex_count() {
                let u = poset.vertex(i);
                let counts = chain_counts_from(&poset, i);
                for (j, dp) in counts.iter().enumerate() {
                    let v = poset.vertex(j);
                    if u.leq(&v).unwrap() {
                        inst += 1;
                        if count_saturated_chains(&u, &v).unwrap() != *dp {
                            return (
                                inst,
                                Some(format!("chain counts differ between {u} and {v}")),
                            );
                        }
                    }
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "maximal-chains-formula-vs-dp", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            inst += 1;
            let poset = HassePoset::build(n).unwrap();
            if count_maximal_chains(n).unwrap() != maximal_chain_total(&poset) {
                return (
                    inst,
                    Some(format!("maximal chain totals differ at order {n}")),
                );
            }
        }
        (inst, None)
    });

    r.run("counts", "minimal-below-maximal-domination", 8, || {
        let mut inst = 0;
        for n in 2..=8 {
            for lo in minimal_elements(n).unwrap() {
                for hi in maximal_elements(n).unwrap() {
                    inst += 1;
                    if !lo.leq(&hi).unwrap() {
                        return (inst, Some(format!("domination fails at {lo}, {hi}")));
                    }
                }
            }
        }
        (inst, None)
    });

    r.run("counts", "distance-formula-vs-bfs", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            let poset = HassePoset::build(n).unwrap();
            for i in 0..poset.vertex_count() {
                let dists = bfs_distances(&poset, i);
                for (j, d) in dists.iter().enumerate() {
                    inst += 1;
                    let Some(steps) = d else {
                        return (
                            inst,
                            Some(format!("diagram disconnected at {}", poset.vertex(i))),
                        );
                    };
                    if hasse_distance(&poset.vertex(i), &poset.vertex(j)).unwrap()
                        != Count::from(*steps)
                    {
                        return (
                            inst,
                            Some(format!(
                                "distance differs between {} and {}",
                                poset.vertex(i),
                                poset.vertex(j)
                            )),
                        );
                    }
                }
            }
        }
        (inst, None)
    });
}

fn sperner_checks(r: &mut Runner, max_n: usize, bg: usize) {
    r.run("sperner", "level-map-regression-order-six", 6, || {
        let table = [
            ([4, 2, 1, 1], [3, 3, 1, 1]),
            ([3, 2, 1, 2], [2, 3, 1, 2]),
            ([2, 2, 1, 3], [1, 3, 1, 3]),
            ([1, 2, 1, 4], [1, 2, 2, 3]),
            ([4, 1, 2, 1], [3, 2, 2, 1]),
            ([3, 1, 2, 2], [2, 2, 2, 2]),
            ([2, 1, 2, 3], [2, 1, 3, 2]),
            ([1, 1, 2, 4], [1, 1, 3, 3]),
        ];
        let mut inst = 0;
        for (src, img) in table {
            inst += 1;
            let v = LengthVector::new(src[0], src[1], src[2], src[3], 6).unwrap();
            let expect = LengthVector::new(img[0], img[1], img[2], img[3], 6).unwrap();
            if sperner_up_image(&v) != Some(expect) {
                return (inst, Some(format!("level map image differs at {v}")));
            }
        }
        (inst, None)
    });

    let path_cap = max_n.min(8);
    r.run("sperner", "paths-partition-the-poset", path_cap, || {
        let mut inst = 0;
        for n in 2..=path_cap {
            let poset = HassePoset::build(n).unwrap();
            let paths = sperner_decomposition(n).unwrap();
            let top = n - 2;
            let middles: Vec<usize> = if top % 2 == 0 {
                vec![top / 2]
            } else {
                vec![top / 2, top / 2 + 1]
            };
            let mut seen = std::collections::HashSet::new();
            for path in &paths {
                inst += 1;
                for v in path {
                    if !seen.insert(*v) {
                        return (inst, Some(format!("paths overlap at {v}")));
                    }
                }
                for pair in path.windows(2) {
                    let i = poset.index_of(&pair[0]).unwrap();
                    let j = poset.index_of(&pair[1]).unwrap();
                    if !poset.up_covers(i).contains(&j) {
                        return (
                            inst,
                            Some(format!(
                                "path step {} -> {} is not a cover",
                                pair[0], pair[1]
                            )),
                        );
                    }
                }
                if !path.iter().any(|v| middles.contains(&v.level())) {
                    return (
                        inst,
                        Some(format!("path from {} misses the middle", path[0])),
                    );
                }
            }
            if seen.len() != poset.vertex_count() {
                return (inst, Some(format!("paths miss vertices at order {n}")));
            }
            if Count::from(paths.len()) != max_antichain_size(n).unwrap() {
                return (inst, Some(format!("path count differs at order {n}")));
            }
        }
        (inst, None)
    });

    r.run("sperner", "antichain-formula-vs-chain-cover", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            inst += 1;
            let poset = HassePoset::build(n).unwrap();
            if max_antichain_size(n).unwrap() != Count::from(max_antichain_dilworth(&poset)) {
                return (inst, Some(format!("antichain sizes differ at order {n}")));
            }
        }
        (inst, None)
    });
}

fn butterfly_checks(r: &mut Runner, bg: usize) {
    r.run("butterfly", "count-formula-vs-enumeration", bg, || {
        let mut inst = 0;
        for n in 2..=bg {
            inst += 1;
            let poset = HassePoset::build(n).unwrap();
            if butterfly_count(n).unwrap() != Count::from(poset.butterflies().len()) {
                return (inst, Some(format!("butterfly counts differ at order {n}")));
            }
        }
        (inst, None)
    });

    r.run("butterfly", "edge-participation-one-or-two", bg, || {
        use std::collections::HashMap;
        let mut inst = 0;
        for n in 3..=bg {
            let poset = HassePoset::build(n).unwrap();
            let mut participation: HashMap<(usize, usize), usize> = HashMap::new();
            for b in poset.butterflies() {
                for lo in b.lower {
                    for hi in b.upper {
                        let i = poset.index_of(&lo).unwrap();
                        let j = poset.index_of(&hi).unwrap();
                        *participation.entry((i, j)).or_default() += 1;
                    }
                }
            }
            for (i, j) in poset.edges() {
                inst += 1;
                let count = participation.get(&(i, j)).copied().unwrap_or(0);
                let (u, v) = (poset.vertex(i), poset.vertex(j));
                if count != 1 && count != 2 {
                    return (
                        inst,
                        Some(format!("edge {u} -> {v} lies in {count} butterflies")),
                    );
                }
                let pinned = (0..4).any(|c| u.coords()[c] == 1 && v.coords()[c] == 1);
                if (count == 1) != pinned {
                    return (
                        inst,
                        Some(format!("uniqueness criterion fails at edge {u} -> {v}")),
                    );
                }
            }
        }
        (inst, None)
    });
}

fn below_checks(r: &mut Runner, cap: usize) {
    r.run("below", "agreement-with-brute-force", cap, || {
        let mut inst = 0;
        for n in 2..=cap {
            let vecs = enumerate_bg(n).unwrap();
            let words: Vec<Permutation> = vecs.iter().map(LengthVector::permutation).collect();
            let by_words = |u: &LengthVector, v: &LengthVector| {
                let i = vecs.binary_search(u).unwrap();
                let j = vecs.binary_search(v).unwrap();
                leq_ehresmann(&words[i], &words[j]).unwrap()
            };
            for (i, a) in vecs.iter().enumerate() {
                for b in &vecs[i..] {
                    inst += 1;
                    let targets = [*a, *b];
                    let fast = maximal_below(&targets).unwrap();
                    let brute = maximal_below_brute(&vecs, &targets, by_words);
                    if fast != brute {
                        return (
                            inst,
                            Some(format!("maximal-below differs for targets {a}, {b}")),
                        );
                    }
                }
            }
        }
        (inst, None)
    });

    r.run("below", "count-law", cap, || {
        let mut inst = 0;
        for n in 2..=cap {
            let vecs = enumerate_bg(n).unwrap();
            for (i, a) in vecs.iter().enumerate() {
                for b in &vecs[i..] {
                    inst += 1;
                    let fast = maximal_below(&[*a, *b]).unwrap();
                    let f1 = a.l1().max(b.l1());
                    let f4 = a.l4().max(b.l4());
                    let m2 = a.l2().min(b.l2());
                    let m3 = a.l3().min(b.l3());
                    let sum = f1 + f4 + m2 + m3;
                    let ok = if f1 + f4 > n {
                        fast.is_empty()
                    } else if sum <= n + 2 {
                        fast.len() == n + 3 - sum && fast.iter().all(|v| v.level() + 2 == m2 + m3)
                    } else {
                        !fast.is_empty()
                            && fast.iter().all(|v| {
                                (v.l1(), v.l4()) == (f1, f4) && v.level() + 2 == n + 2 - f1 - f4
                            })
                    };
                    if !ok {
                        return (inst, Some(format!("count law fails for targets {a}, {b}")));
                    }
                }
            }
        }
        (inst, None)
    });

    r.run("below", "minimal-above-duality", cap, || {
        let mut inst = 0;
        for n in 2..=cap {
            let vecs = enumerate_bg(n).unwrap();
            for (i, a) in vecs.iter().enumerate() {
                for b in &vecs[i..] {
                    inst += 1;
                    let targets = [*a, *b];
                    let fast = minimal_above(&targets).unwrap();
                    let brute = maximal_below_brute(&vecs, &targets, |u, v| v.leq(u).unwrap());
                    if fast != brute {
                        return (
                            inst,
                            Some(format!("minimal-above differs for targets {a}, {b}")),
                        );
                    }
                }
            }
        }
        (inst, None)
    });
}

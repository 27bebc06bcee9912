//! The ranked poset of bigrassmannian permutations of a fixed order:
//! Hasse diagram over length vectors, plus closed-form statistics for
//! degrees, edges, rank levels, chains, distances, antichains,
//! butterflies and maximal lower bounds. Every formula here has a
//! graph-oracle counterpart in [`crate::oracle`].
//!
//! Covers move one unit from an outer coordinate (first or fourth) to
//! an inner one (second or third); everything else follows from that.

use std::collections::HashMap;

use crate::bigrassmannian::{enumerate_bg, LengthVector};
use crate::count::{binomial, pow4, Count};
use crate::error::{Error, Result};

/// Cover digraph of the bigrassmannian poset of order `n`, keyed by
/// length vectors. Vertices are lexicographically sorted and adjacency
/// lists are sorted, so traversal order is canonical.
#[derive(Debug, Clone)]
pub struct HassePoset {
    n: usize,
    verts: Vec<LengthVector>,
    index: HashMap<LengthVector, usize>,
    up: Vec<Vec<usize>>,
    down: Vec<Vec<usize>>,
}

/// A lattice obstruction: two distinct same-level elements covered by
/// the same two next-level elements. Both pairs are stored sorted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Butterfly {
    pub lower: [LengthVector; 2],
    pub upper: [LengthVector; 2],
}

impl HassePoset {
    /// Builds the cover digraph for order `n >= 2`.
    ///
    /// ```
    /// use bgposet::HassePoset;
    ///
    /// let poset = HassePoset::build(5)?;
    /// assert_eq!(poset.vertex_count(), 20);
    /// assert_eq!(poset.edge_total(), 40);
    /// # Ok::<(), bgposet::Error>(())
    /// ```
    pub fn build(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidOrder(n));
        }
        let verts = enumerate_bg(n)?;
        let index: HashMap<LengthVector, usize> =
            verts.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let mut up = vec![Vec::new(); verts.len()];
        let mut down = vec![Vec::new(); verts.len()];
        for (i, v) in verts.iter().enumerate() {
            for cover in up_cover_vectors(v) {
                let j = index[&cover];
                up[i].push(j);
                down[j].push(i);
            }
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
        }
        Ok(HassePoset {
            n,
            verts,
            index,
            up,
            down,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// All vertices, lexicographically sorted.
    pub fn vertices(&self) -> &[LengthVector] {
        &self.verts
    }

    pub fn vertex_count(&self) -> usize {
        self.verts.len()
    }

    pub fn vertex(&self, i: usize) -> LengthVector {
        self.verts[i]
    }

    /// Index of a vector in the canonical vertex order.
    pub fn index_of(&self, v: &LengthVector) -> Option<usize> {
        self.index.get(v).copied()
    }

    /// Indices of the elements covering vertex `i`, ascending.
    pub fn up_covers(&self, i: usize) -> &[usize] {
        &self.up[i]
    }

    /// Indices of the elements covered by vertex `i`, ascending.
    pub fn down_covers(&self, i: usize) -> &[usize] {
        &self.down[i]
    }

    /// Total number of cover edges in the diagram.
    pub fn edge_total(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// Cover edges `(lower, upper)` as index pairs in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(i, ups)| ups.iter().map(move |&j| (i, j)))
    }

    /// All butterflies of the diagram, enumerated from the graph:
    /// for every unordered same-level vertex pair, every unordered pair
    /// of common up-covers yields one.
    pub fn butterflies(&self) -> Vec<Butterfly> {
        let mut by_level: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, v) in self.verts.iter().enumerate() {
            by_level.entry(v.level()).or_default().push(i);
        }
        let mut levels: Vec<usize> = by_level.keys().copied().collect();
        levels.sort_unstable();
        let mut out = Vec::new();
        for level in levels {
            let members = &by_level[&level];
            for (s, &i) in members.iter().enumerate() {
                for &j in &members[s + 1..] {
                    let common = sorted_intersection(&self.up[i], &self.up[j]);
                    for (t, &u1) in common.iter().enumerate() {
                        for &u2 in &common[t + 1..] {
                            out.push(Butterfly {
                                lower: [self.verts[i], self.verts[j]],
                                upper: [self.verts[u1], self.verts[u2]],
                            });
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut x, mut y) = (0, 0);
    while x < a.len() && y < b.len() {
        match a[x].cmp(&b[y]) {
            std::cmp::Ordering::Less => x += 1,
            std::cmp::Ordering::Greater => y += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[x]);
                x += 1;
                y += 1;
            }
        }
    }
    out
}

/// The (at most four) vectors covering `v`: subtract 1 from an outer
/// coordinate, add 1 to an inner one.
pub fn up_cover_vectors(v: &LengthVector) -> Vec<LengthVector> {
    let n = v.order();
    let [l1, l2, l3, l4] = v.coords();
    let mut out = Vec::with_capacity(4);
    let mut push = |c: [usize; 4]| {
        if let Ok(w) = LengthVector::new(c[0], c[1], c[2], c[3], n) {
            out.push(w);
        }
    };
    if l1 > 1 {
        push([l1 - 1, l2 + 1, l3, l4]);
        push([l1 - 1, l2, l3 + 1, l4]);
    }
    if l4 > 1 {
        push([l1, l2 + 1, l3, l4 - 1]);
        push([l1, l2, l3 + 1, l4 - 1]);
    }
    out
}

/// Degree of a vertex in the undirected Hasse diagram, for `n > 2`:
/// downward edges number `4 - 2[l2=1] - 2[l3=1]` and upward edges
/// `4 - 2[l1=1] - 2[l4=1]`, so the total is one of 2, 4, 6, 8.
pub fn degree(v: &LengthVector) -> Result<Count> {
    if v.order() <= 2 {
        return Err(Error::OrderTooSmall(v.order()));
    }
    let down = 4 - 2 * usize::from(v.l2() == 1) - 2 * usize::from(v.l3() == 1);
    let up = 4 - 2 * usize::from(v.l1() == 1) - 2 * usize::from(v.l4() == 1);
    Ok(Count::from(down + up))
}

/// Number of Hasse edges: `4 C(n, 3)`.
pub fn edge_count(n: usize) -> Result<Count> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    Ok(Count::from(4u32) * binomial(n, 3))
}

/// The `n - 1` minimal elements: vectors with both inner coordinates 1.
pub fn minimal_elements(n: usize) -> Result<Vec<LengthVector>> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    (1..n)
        .map(|l1| LengthVector::new(l1, 1, 1, n - l1, n))
        .collect()
}

/// The `n - 1` maximal elements: vectors with both outer coordinates 1.
pub fn maximal_elements(n: usize) -> Result<Vec<LengthVector>> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    (1..n)
        .map(|l2| LengthVector::new(1, l2, n - l2, 1, n))
        .collect()
}

/// Number of elements at level `k`: `(k + 1)(n - k - 1)` for
/// `0 <= k <= n - 2`.
pub fn level_size(n: usize, k: usize) -> Result<Count> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    if k > n - 2 {
        return Err(Error::LevelOutOfRange { n, level: k });
    }
    Ok(Count::from((k + 1) * (n - k - 1)))
}

/// Number of saturated chains from `lo` up to `hi`, which all have the
/// same length `r = lo.l1 + lo.l4 - hi.l1 - hi.l4`: choose when to
/// drain each outer coordinate and when to fill each inner one,
/// `C(r, lo.l1 - hi.l1) * C(r, hi.l2 - lo.l2)`.
pub fn count_saturated_chains(lo: &LengthVector, hi: &LengthVector) -> Result<Count> {
    if lo.order() != hi.order() {
        return Err(Error::OrderMismatch(lo.order(), hi.order()));
    }
    if !lo.leq(hi)? {
        return Err(Error::NotComparable);
    }
    let r = lo.l1() + lo.l4() - hi.l1() - hi.l4();
    debug_assert_eq!(r, hi.level() - lo.level());
    Ok(binomial(r, lo.l1() - hi.l1()) * binomial(r, hi.l2() - lo.l2()))
}

/// Number of maximal chains: `4^(n-2)`. Every minimal element lies
/// below every maximal element, so the per-pair chain counts sum to a
/// squared binomial row.
pub fn count_maximal_chains(n: usize) -> Result<Count> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    Ok(pow4(n - 2))
}

/// Distance between two vertices in the undirected Hasse diagram:
/// `max(|l1-m1| + |l4-m4|, |l2-m2| + |l3-m3|)`. Finiteness of this
/// expression is the connectivity of the diagram.
pub fn hasse_distance(u: &LengthVector, v: &LengthVector) -> Result<Count> {
    if u.order() != v.order() {
        return Err(Error::OrderMismatch(u.order(), v.order()));
    }
    let outer = u.l1().abs_diff(v.l1()) + u.l4().abs_diff(v.l4());
    let inner = u.l2().abs_diff(v.l2()) + u.l3().abs_diff(v.l3());
    Ok(Count::from(outer.max(inner)))
}

/// Size of the largest antichain: `floor(n/2) * ceil(n/2)`, the size
/// of the middle rank level.
pub fn max_antichain_size(n: usize) -> Result<Count> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    Ok(Count::from(n / 2) * Count::from(n.div_ceil(2)))
}

/// The level-raising injection used to stitch the poset into
/// vertex-disjoint saturated paths: move one unit onto an inner
/// coordinate from whichever side keeps the map injective. Defined for
/// every vertex strictly below the upper middle level; `None` above.
pub fn sperner_up_image(v: &LengthVector) -> Option<LengthVector> {
    let top = v.order() - 2;
    if v.level() >= top.div_ceil(2) {
        return None;
    }
    let [l1, l2, l3, l4] = v.coords();
    let image = if l1 > l3 {
        // l1 > l3 forces l1 > 1.
        [l1 - 1, l2 + 1, l3, l4]
    } else {
        // l1 <= l3 forces l4 > 1 below the middle.
        [l1, l2, l3 + 1, l4 - 1]
    };
    Some(
        LengthVector::new(image[0], image[1], image[2], image[3], v.order())
            .expect("image of the level map is a valid vector"),
    )
}

/// Splits the poset into vertex-disjoint saturated paths, each passing
/// through the middle level(s): below the middle every vertex is
/// matched upward by [`sperner_up_image`]; above the middle the
/// symmetric map (transported through `f2143`) matches every vertex
/// downward. Paths are listed bottom-to-top, sorted by starting vertex
/// level then vector.
pub fn sperner_decomposition(n: usize) -> Result<Vec<Vec<LengthVector>>> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    let verts = enumerate_bg(n)?;
    let top = n - 2;
    let mid_hi = top.div_ceil(2);
    let mut successor: HashMap<LengthVector, LengthVector> = HashMap::new();
    let mut matched: std::collections::HashSet<LengthVector> = std::collections::HashSet::new();
    for v in &verts {
        if v.level() < mid_hi {
            let image = sperner_up_image(v).expect("below the upper middle level");
            successor.insert(*v, image);
            matched.insert(image);
        } else if v.level() > mid_hi {
            let pred = sperner_up_image(&v.f2143())
                .expect("reflection lies below the upper middle level")
                .f2143();
            debug_assert_eq!(pred.level() + 1, v.level());
            successor.insert(pred, *v);
            matched.insert(*v);
        }
    }
    let mut starts: Vec<LengthVector> = verts
        .iter()
        .filter(|v| !matched.contains(v))
        .copied()
        .collect();
    starts.sort_by_key(|v| (v.level(), *v));
    let paths = starts
        .into_iter()
        .map(|start| {
            let mut path = vec![start];
            let mut here = start;
            while let Some(&next) = successor.get(&here) {
                path.push(next);
                here = next;
            }
            path
        })
        .collect();
    Ok(paths)
}

/// All butterflies of order `n`. Empty for `n = 2`.
pub fn butterflies(n: usize) -> Result<Vec<Butterfly>> {
    Ok(HassePoset::build(n)?.butterflies())
}

/// Number of butterflies: `C(n, 3) + C(n-2, 3)`.
pub fn butterfly_count(n: usize) -> Result<Count> {
    if n < 2 {
        return Err(Error::InvalidOrder(n));
    }
    Ok(binomial(n, 3) + binomial(n.saturating_sub(2), 3))
}

/// The maximal elements weakly below every target.
///
/// A common lower bound needs outer coordinates dominating the
/// coordinate-wise maxima `F1`, `F4` of the targets and inner
/// coordinates dominated by the minima `M2`, `M3`; it is maximal iff
/// no cover move stays inside that box, i.e. iff the inner pair is
/// pinned at `(M2, M3)` or the outer pair at `(F1, F4)`. Three cases:
///
/// - `F1 + F4 > n`: no common lower bound exists at all;
/// - `F1 + F4 + M2 + M3 <= n + 2`: the inner coordinates are pinned
///   and the outers range, giving `n + 3 - (F1+F4+M2+M3)` results at
///   level `M2 + M3 - 2`;
/// - otherwise the outer coordinates are pinned and the inners range
///   below their minima, at level `n - F1 - F4`.
pub fn maximal_below(targets: &[LengthVector]) -> Result<Vec<LengthVector>> {
    let first = targets.first().ok_or(Error::EmptyTargetSet)?;
    let n = first.order();
    for t in targets {
        if t.order() != n {
            return Err(Error::OrderMismatch(n, t.order()));
        }
    }
    let m2 = targets.iter().map(|t| t.l2()).min().expect("non-empty");
    let m3 = targets.iter().map(|t| t.l3()).min().expect("non-empty");
    let f1 = targets.iter().map(|t| t.l1()).max().expect("non-empty");
    let f4 = targets.iter().map(|t| t.l4()).max().expect("non-empty");
    let mut out = Vec::new();
    if f1 + f4 > n {
        return Ok(out);
    }
    if f1 + f4 + m2 + m3 <= n + 2 {
        let outer_sum = n + 2 - m2 - m3;
        for l1 in f1..=outer_sum - f4 {
            out.push(
                LengthVector::new(l1, m2, m3, outer_sum - l1, n)
                    .expect("coordinates stay within bounds"),
            );
        }
    } else {
        let inner_sum = n + 2 - f1 - f4;
        for l2 in (inner_sum.saturating_sub(m3)).max(1)..=m2.min(inner_sum - 1) {
            out.push(
                LengthVector::new(f1, l2, inner_sum - l2, f4, n)
                    .expect("coordinates stay within bounds"),
            );
        }
    }
    Ok(out)
}

/// The minimal elements weakly above every target, by reflecting the
/// problem through the order-reversing involution.
pub fn minimal_above(targets: &[LengthVector]) -> Result<Vec<LengthVector>> {
    let reflected: Vec<LengthVector> = targets.iter().map(LengthVector::f2143).collect();
    let mut out: Vec<LengthVector> = maximal_below(&reflected)?
        .iter()
        .map(LengthVector::f2143)
        .collect();
    out.sort();
    Ok(out)
}

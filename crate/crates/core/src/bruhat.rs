//! Bruhat comparability on the symmetric group, decided three
//! independent ways: the Ehresmann tableau criterion, the
//! Björner-Brenti single-row criterion (for bigrassmannian lower
//! arguments), and a reduction-closure search used as an oracle.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// The staircase tableau of sorted prefixes of a permutation: row `j`
/// is the increasing rearrangement of `p(1), ..., p(j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonotoneTriangle {
    rows: Vec<Vec<usize>>,
}

impl MonotoneTriangle {
    /// Builds the triangle of a permutation.
    pub fn of(p: &Permutation) -> Self {
        let n = p.order();
        let mut rows = Vec::with_capacity(n);
        let mut prefix: Vec<usize> = Vec::with_capacity(n);
        for j in 1..=n {
            insert_sorted(&mut prefix, p.at(j));
            rows.push(prefix.clone());
        }
        MonotoneTriangle { rows }
    }

    /// Rows of the triangle; row `j` (0-based `j - 1`) has `j` entries.
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Checks the defining conditions: row `j` has `j` strictly
    /// increasing entries, the last row is `1..=n`, and consecutive rows
    /// interleave.
    pub fn is_valid(&self) -> bool {
        let n = self.rows.len();
        for (idx, row) in self.rows.iter().enumerate() {
            if row.len() != idx + 1 || !row.windows(2).all(|w| w[0] < w[1]) {
                return false;
            }
        }
        if self.rows[n - 1] != (1..=n).collect::<Vec<_>>() {
            return false;
        }
        for j in 0..n - 1 {
            let (row, next) = (&self.rows[j], &self.rows[j + 1]);
            for i in 0..row.len() {
                if next[i] > row[i] || row[i] > next[i + 1] {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for MonotoneTriangle {
    /// Left-justified staircase, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, row) in self.rows.iter().enumerate() {
            if idx > 0 {
                writeln!(f)?;
            }
            let mut first = true;
            for v in row {
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
                first = false;
            }
        }
        Ok(())
    }
}

fn insert_sorted(sorted: &mut Vec<usize>, value: usize) {
    let pos = sorted.partition_point(|&x| x < value);
    sorted.insert(pos, value);
}

/// Ehresmann tableau criterion: `p <= q` iff every entry of every
/// sorted prefix of `p` is at most the corresponding entry for `q`.
///
/// Works on running sorted prefixes with an early exit; the full
/// triangles are never materialized.
pub fn leq_ehresmann(p: &Permutation, q: &Permutation) -> Result<bool> {
    if p.order() != q.order() {
        return Err(Error::OrderMismatch(p.order(), q.order()));
    }
    let n = p.order();
    let mut pp: Vec<usize> = Vec::with_capacity(n);
    let mut qq: Vec<usize> = Vec::with_capacity(n);
    // The last row of both triangles is 1..=n; no need to compare it.
    for j in 1..n {
        insert_sorted(&mut pp, p.at(j));
        insert_sorted(&mut qq, q.at(j));
        for i in 0..j {
            if pp[i] > qq[i] {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Björner-Brenti single-row criterion, valid when `p` is
/// bigrassmannian: only the tableau row at the unique descent of `p`
/// needs to be compared.
pub fn leq_bb(p: &Permutation, q: &Permutation) -> Result<bool> {
    if p.order() != q.order() {
        return Err(Error::OrderMismatch(p.order(), q.order()));
    }
    if !p.is_bigrassmannian() {
        return Err(Error::NotBigrassmannian(p.to_string()));
    }
    let d = p.single_descent().expect("bigrassmannian has one descent");
    let mut pp: Vec<usize> = p.word()[..d].to_vec();
    let mut qq: Vec<usize> = q.word()[..d].to_vec();
    pp.sort_unstable();
    qq.sort_unstable();
    Ok(pp.iter().zip(&qq).all(|(a, b)| a <= b))
}

/// Reduction-closure oracle: `p <= q` iff `p` is reachable from `q` by
/// a (possibly empty) sequence of inversion-resolving swaps.
///
/// Downward search from `q`, memoized on visited permutations and
/// pruned once the inversion count cannot reach `p`'s. Intended for
/// small orders only; `cap` is the largest order accepted (the stock
/// configuration uses 8, see [`Limits`](crate::Limits)).
pub fn leq_reduction_oracle(p: &Permutation, q: &Permutation, cap: usize) -> Result<bool> {
    if p.order() != q.order() {
        return Err(Error::OrderMismatch(p.order(), q.order()));
    }
    if p.order() > cap {
        return Err(Error::SizeLimitExceeded { n: p.order(), cap });
    }
    let target_inv = p.inversion_count();
    let mut visited: HashSet<Permutation> = HashSet::new();
    let mut stack = vec![q.clone()];
    while let Some(current) = stack.pop() {
        if current == *p {
            return Ok(true);
        }
        // Reductions strictly decrease the inversion count, so nothing
        // at or below target_inv can still reach p.
        if current.inversion_count() <= target_inv {
            continue;
        }
        if !visited.insert(current.clone()) {
            continue;
        }
        for (next, _) in current.reductions() {
            if next.inversion_count() >= target_inv && !visited.contains(&next) {
                stack.push(next);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn triangle_rows_are_sorted_prefixes() {
        let t = MonotoneTriangle::of(&perm("34512"));
        assert_eq!(
            t.rows(),
            &[
                vec![3],
                vec![3, 4],
                vec![3, 4, 5],
                vec![1, 3, 4, 5],
                vec![1, 2, 3, 4, 5],
            ]
        );
        assert!(t.is_valid());

        let t = MonotoneTriangle::of(&perm("14235"));
        assert_eq!(
            t.rows(),
            &[
                vec![1],
                vec![1, 4],
                vec![1, 2, 4],
                vec![1, 2, 3, 4],
                vec![1, 2, 3, 4, 5],
            ]
        );

        let t = MonotoneTriangle::of(&Permutation::identity(3).unwrap());
        assert_eq!(t.rows(), &[vec![1], vec![1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn triangle_display_is_staircase_text() {
        let t = MonotoneTriangle::of(&perm("14235"));
        assert_eq!(t.to_string(), "1\n1 4\n1 2 4\n1 2 3 4\n1 2 3 4 5");
    }

    #[test]
    fn ehresmann_examples() {
        assert!(leq_ehresmann(&perm("14235"), &perm("34512")).unwrap());
        assert!(!leq_ehresmann(&perm("34512"), &perm("14235")).unwrap());
        let p = perm("31245");
        assert!(leq_ehresmann(&p, &p).unwrap());
        // Incomparable pair: false both ways.
        assert!(!leq_ehresmann(&perm("31245"), &perm("12453")).unwrap());
        assert!(!leq_ehresmann(&perm("12453"), &perm("31245")).unwrap());
        assert_eq!(
            leq_ehresmann(&perm("12"), &perm("123")),
            Err(Error::OrderMismatch(2, 3))
        );
    }

    #[test]
    fn bb_requires_bigrassmannian_lower_argument() {
        assert!(leq_bb(&perm("14235"), &perm("34512")).unwrap());
        let bg = perm("14235");
        assert!(leq_bb(&bg, &bg).unwrap());
        assert_eq!(
            leq_bb(&perm("24153"), &perm("34512")),
            Err(Error::NotBigrassmannian("2,4,1,5,3".into()))
        );
        assert_eq!(
            leq_bb(&Permutation::identity(5).unwrap(), &perm("34512")),
            Err(Error::NotBigrassmannian("1,2,3,4,5".into()))
        );
    }

    #[test]
    fn reduction_oracle_examples() {
        let id = Permutation::identity(5).unwrap();
        assert!(leq_reduction_oracle(&id, &perm("34512"), 8).unwrap());
        assert!(leq_reduction_oracle(&id, &perm("54321"), 8).unwrap());
        assert!(leq_reduction_oracle(&perm("14235"), &perm("34512"), 8).unwrap());
        assert!(!leq_reduction_oracle(&perm("34512"), &perm("14235"), 8).unwrap());
        assert_eq!(
            leq_reduction_oracle(&id, &id.clone(), 4),
            Err(Error::SizeLimitExceeded { n: 5, cap: 4 })
        );
    }
}

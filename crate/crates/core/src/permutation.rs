//! Permutations of `[n]` in one-line notation, with the primitive
//! statistics everything else is built from.
//!
//! Positions and values are 1-based in every public interface: `p.at(i)`
//! is the image of position `i` for `1 <= i <= n`. Permutations are
//! immutable values; every operation returns a fresh one.

use std::fmt;
use std::str::FromStr;

use crate::count::Count;
use crate::error::{Error, Result};

/// A permutation of `[n] = {1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<usize>,
}

/// One inversion-resolving swap: interchanging positions `i < j` whose
/// values are out of order, together with the number of intermediate
/// values they cross.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionStep {
    /// Left position of the swapped pair (1-based).
    pub i: usize,
    /// Right position of the swapped pair (1-based).
    pub j: usize,
    /// Number of positions `k` with `i < k < j` whose value lies strictly
    /// between the two swapped values.
    pub crossing_count: usize,
}

impl Permutation {
    /// Builds a permutation from its one-line word, validating that the
    /// word is a bijection of `[n]`.
    pub fn from_word(values: impl Into<Vec<usize>>) -> Result<Self> {
        let word = values.into();
        if word.is_empty() {
            return Err(Error::EmptyInput);
        }
        let n = word.len();
        let mut seen = vec![false; n];
        for &v in &word {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::NotABijection(v));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { word })
    }

    /// The identity permutation `1 2 ... n`.
    pub fn identity(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Permutation {
            word: (1..=n).collect(),
        })
    }

    /// The order `n`.
    pub fn order(&self) -> usize {
        self.word.len()
    }

    /// Image of position `i` (1-based).
    ///
    /// Panics if `i` is out of `1..=n`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// The one-line word as a slice; `word()[k]` is the image of `k + 1`.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// The inverse permutation: `inverse().at(self.at(i)) == i`.
    pub fn inverse(&self) -> Self {
        let mut word = vec![0; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    /// The conjugate permutation `i -> n + 1 - self(n + 1 - i)`, which
    /// reverses both the word and the value range.
    pub fn conjugate(&self) -> Self {
        let n = self.word.len();
        let word = (1..=n).map(|i| n + 1 - self.at(n + 1 - i)).collect();
        Permutation { word }
    }

    /// Number of inversions `|{(i, j) : i < j, p(i) > p(j)}|`.
    pub fn inversions(&self) -> Count {
        Count::from(self.inversion_count())
    }

    pub(crate) fn inversion_count(&self) -> usize {
        let n = self.word.len();
        let mut count = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.word[i] > self.word[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Descent positions `{i in [n-1] : p(i) > p(i+1)}`, ascending.
    pub fn descents(&self) -> Vec<usize> {
        self.word
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// The unique descent position, when there is exactly one.
    pub fn single_descent(&self) -> Option<usize> {
        let ds = self.descents();
        match ds.as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }

    /// All reductions of this permutation: one entry per inversion pair
    /// `(i, j)`, each the result of swapping the two values, with the
    /// crossing count of the pair.
    pub fn reductions(&self) -> Vec<(Permutation, ReductionStep)> {
        let n = self.word.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.word[i] <= self.word[j] {
                    continue;
                }
                let crossing_count = (i + 1..j)
                    .filter(|&k| self.word[i] > self.word[k] && self.word[k] > self.word[j])
                    .count();
                let mut word = self.word.clone();
                word.swap(i, j);
                out.push((
                    Permutation { word },
                    ReductionStep {
                        i: i + 1,
                        j: j + 1,
                        crossing_count,
                    },
                ));
            }
        }
        out
    }

    /// Compact digit-word form (`14235`), available only for `n <= 9`.
    pub fn digit_word(&self) -> Option<String> {
        if self.word.len() > 9 {
            return None;
        }
        Some(self.word.iter().map(|v| v.to_string()).collect())
    }
}

impl fmt::Display for Permutation {
    /// Canonical text encoding: comma-separated values, e.g. `1,4,2,3,5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Parses the comma-separated encoding, or the compact digit-word
    /// form for orders up to 9.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::EmptyInput);
        }
        if s.contains(',') {
            let values = s
                .split(',')
                .map(|part| {
                    part.trim()
                        .parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad value {part:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            return Permutation::from_word(values);
        }
        if !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("not a permutation encoding: {s:?}")));
        }
        if s.len() > 9 {
            return Err(Error::Parse(format!(
                "digit-word form is limited to order 9; use commas: {s:?}"
            )));
        }
        let values = s
            .chars()
            .map(|c| c.to_digit(10).unwrap() as usize)
            .collect::<Vec<_>>();
        Permutation::from_word(values)
    }
}

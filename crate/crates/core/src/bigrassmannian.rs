//! Bigrassmannian permutations: elements whose word and inverse each
//! have exactly one descent, or equivalently block interchanges of the
//! identity.
//!
//! Every such element of order `n` is `1..a (b+1)..c (a+1)..b (c+1)..n`
//! for a unique triple `0 <= a < b < c <= n`, and is identified
//! canonically by its length vector `(a+1, b-a, c-b, n+1-c)`: four
//! positive coordinates summing to `n + 2`, each at most `n - 1`. The
//! length vector is the key everywhere in the poset engine; the word
//! form is derived on demand.

use std::fmt;
use std::str::FromStr;

use crate::count::{binomial, Count};
use crate::error::{Error, Result};
use crate::permutation::Permutation;

/// The block-interchange form of a bigrassmannian permutation: the
/// word fixes `1..=a` and `c+1..=n` and swaps the blocks `a+1..=b` and
/// `b+1..=c`, keeping each increasing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AbcForm {
    a: usize,
    b: usize,
    c: usize,
    n: usize,
}

impl AbcForm {
    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Decomposes a bigrassmannian permutation into its unique triple.
    pub fn of(p: &Permutation) -> Result<Self> {
        if !p.is_bigrassmannian() {
            return Err(Error::NotBigrassmannian(p.to_string()));
        }
        let n = p.order();
        let a = (1..=n).take_while(|&i| p.at(i) == i).count();
        let d = p.single_descent().expect("checked: exactly one descent");
        let c = p.at(d);
        let b = c - (d - a);
        let form = AbcForm { a, b, c, n };
        debug_assert_eq!(&form.permutation(), p);
        Ok(form)
    }

    /// Rebuilds the one-line word from the triple.
    pub fn permutation(&self) -> Permutation {
        let (a, b, c, n) = (self.a, self.b, self.c, self.n);
        let word: Vec<usize> = (1..=a)
            .chain(b + 1..=c)
            .chain(a + 1..=b)
            .chain(c + 1..=n)
            .collect();
        Permutation::from_word(word).expect("block interchange of the identity is a bijection")
    }

    pub fn length_vector(&self) -> LengthVector {
        LengthVector {
            l1: self.a + 1,
            l2: self.b - self.a,
            l3: self.c - self.b,
            l4: self.n + 1 - self.c,
            n: self.n,
        }
    }
}

/// Canonical coordinates of a bigrassmannian permutation: four
/// positive lengths summing to `n + 2`, each in `1..=n-1`.
///
/// Sorts lexicographically on `(l1, l2, l3, l4)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LengthVector {
    l1: usize,
    l2: usize,
    l3: usize,
    l4: usize,
    n: usize,
}

impl LengthVector {
    /// Validates the two defining constraints: the coordinates sum to
    /// `n + 2` and each lies in `1..=n-1`.
    pub fn new(l1: usize, l2: usize, l3: usize, l4: usize, n: usize) -> Result<Self> {
        let in_range = |l: usize| (1..n).contains(&l);
        if l1 + l2 + l3 + l4 != n + 2
            || !in_range(l1)
            || !in_range(l2)
            || !in_range(l3)
            || !in_range(l4)
        {
            return Err(Error::InvalidLengthVector { l1, l2, l3, l4, n });
        }
        Ok(LengthVector { l1, l2, l3, l4, n })
    }

    /// The length vector of a bigrassmannian permutation.
    ///
    /// ```
    /// use bgposet::{LengthVector, Permutation};
    ///
    /// let p: Permutation = "126734589".parse()?;
    /// let v = LengthVector::of(&p)?;
    /// assert_eq!(v.to_string(), "(3,3,2,3)@9");
    /// assert_eq!(v.permutation(), p);
    /// # Ok::<(), bgposet::Error>(())
    /// ```
    pub fn of(p: &Permutation) -> Result<Self> {
        Ok(AbcForm::of(p)?.length_vector())
    }

    pub fn l1(&self) -> usize {
        self.l1
    }

    pub fn l2(&self) -> usize {
        self.l2
    }

    pub fn l3(&self) -> usize {
        self.l3
    }

    pub fn l4(&self) -> usize {
        self.l4
    }

    /// Coordinates as an array `[l1, l2, l3, l4]`.
    pub fn coords(&self) -> [usize; 4] {
        [self.l1, self.l2, self.l3, self.l4]
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn abc(&self) -> AbcForm {
        AbcForm {
            a: self.l1 - 1,
            b: self.l1 - 1 + self.l2,
            c: self.l1 - 1 + self.l2 + self.l3,
            n: self.n,
        }
    }

    /// The permutation word this vector identifies.
    pub fn permutation(&self) -> Permutation {
        self.abc().permutation()
    }

    /// Level in the ranked poset of bigrassmannian permutations:
    /// `l2 + l3 - 2`.
    pub fn level(&self) -> usize {
        self.l2 + self.l3 - 2
    }

    /// Bruhat comparability decided on coordinates alone: `self <= other`
    /// iff the outer coordinates weakly dominate and the inner
    /// coordinates are weakly dominated.
    pub fn leq(&self, other: &LengthVector) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        Ok(
            self.l1 >= other.l1
                && self.l4 >= other.l4
                && self.l2 <= other.l2
                && self.l3 <= other.l3,
        )
    }

    /// Number of bigrassmannian permutations weakly below this one:
    /// `l2 * l3 * (l2 + l3) / 2`.
    pub fn beta(&self) -> Count {
        Count::from(self.l2) * Count::from(self.l3) * Count::from(self.l2 + self.l3)
            / Count::from(2u32)
    }

    /// Number of bigrassmannian permutations weakly above this one:
    /// `l1 * l4 * (l1 + l4) / 2`.
    pub fn alpha(&self) -> Count {
        Count::from(self.l1) * Count::from(self.l4) * Count::from(self.l1 + self.l4)
            / Count::from(2u32)
    }

    /// The order-reversing involution `(l1,l2,l3,l4) -> (l2,l1,l4,l3)`.
    pub fn f2143(&self) -> LengthVector {
        LengthVector {
            l1: self.l2,
            l2: self.l1,
            l3: self.l4,
            l4: self.l3,
            n: self.n,
        }
    }

    /// Coordinate relabeling `(l1,l2,l3,l4) -> (l1,l3,l2,l4)`; acts on
    /// words as the inverse map.
    pub fn f1324(&self) -> LengthVector {
        LengthVector {
            l1: self.l1,
            l2: self.l3,
            l3: self.l2,
            l4: self.l4,
            n: self.n,
        }
    }

    /// Coordinate reversal `(l1,l2,l3,l4) -> (l4,l3,l2,l1)`; acts on
    /// words as the conjugate map.
    pub fn f4321(&self) -> LengthVector {
        LengthVector {
            l1: self.l4,
            l2: self.l3,
            l3: self.l2,
            l4: self.l1,
            n: self.n,
        }
    }
}

impl fmt::Display for LengthVector {
    /// Canonical serialization `(l1,l2,l3,l4)@n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{})@{}",
            self.l1, self.l2, self.l3, self.l4, self.n
        )
    }
}

impl FromStr for LengthVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("not a length vector encoding: {s:?}"));
        let (coords, n) = s.split_once('@').ok_or_else(bad)?;
        let coords = coords
            .trim()
            .strip_prefix('(')
            .and_then(|c| c.strip_suffix(')'))
            .ok_or_else(bad)?;
        let parts = coords
            .split(',')
            .map(|p| p.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let n = n.trim().parse::<usize>().map_err(|_| bad())?;
        match parts.as_slice() {
            [l1, l2, l3, l4] => LengthVector::new(*l1, *l2, *l3, *l4, n),
            _ => Err(bad()),
        }
    }
}

impl Permutation {
    /// True iff this permutation and its inverse each have exactly one
    /// descent.
    pub fn is_bigrassmannian(&self) -> bool {
        self.single_descent().is_some() && self.inverse().single_descent().is_some()
    }
}

/// All length vectors of order `n`, lexicographically sorted. The list
/// has `C(n+1, 3)` entries; it is empty for `n = 1`.
pub fn enumerate_bg(n: usize) -> Result<Vec<LengthVector>> {
    if n < 1 {
        return Err(Error::InvalidOrder(n));
    }
    let mut out = Vec::new();
    if n < 2 {
        return Ok(out);
    }
    for l1 in 1..n {
        for l2 in 1..n {
            for l3 in 1..n {
                let rest = l1 + l2 + l3;
                if rest + 1 > n + 2 {
                    continue;
                }
                let l4 = n + 2 - rest;
                if (1..n).contains(&l4) {
                    out.push(LengthVector { l1, l2, l3, l4, n });
                }
            }
        }
    }
    Ok(out)
}

/// The coordinate bijection indexed by a permutation `phi` of order 4:
/// coordinate `i` of the image is coordinate `phi(i)` of the argument.
/// `phi = 2143` recovers [`LengthVector::f2143`].
pub fn f_phi(phi: &Permutation, v: &LengthVector) -> Result<LengthVector> {
    if phi.order() != 4 {
        return Err(Error::InvalidOrder(phi.order()));
    }
    let c = v.coords();
    LengthVector::new(
        c[phi.at(1) - 1],
        c[phi.at(2) - 1],
        c[phi.at(3) - 1],
        c[phi.at(4) - 1],
        v.order(),
    )
}

/// Number of bigrassmannian permutations weakly below an arbitrary
/// permutation: half the summed squared displacement of the word.
pub fn beta_general(p: &Permutation) -> Count {
    let total: u128 = (1..=p.order())
        .map(|i| {
            let d = p.at(i).abs_diff(i) as u128;
            d * d
        })
        .sum();
    Count::from(total / 2)
}

/// `C(n+1, 3)`, the number of bigrassmannian permutations of order `n`.
pub fn bg_count(n: usize) -> Count {
    binomial(n + 1, 3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn lv(l1: usize, l2: usize, l3: usize, l4: usize, n: usize) -> LengthVector {
        LengthVector::new(l1, l2, l3, l4, n).unwrap()
    }

    #[test]
    fn recognizes_bigrassmannian_words() {
        assert!(perm("123784569").is_bigrassmannian());
        assert!(perm("34512").is_bigrassmannian());
        assert!(!Permutation::identity(4).unwrap().is_bigrassmannian());
        assert!(!perm("24153").is_bigrassmannian());
    }

    #[test]
    fn abc_decomposition_examples() {
        let f = AbcForm::of(&perm("123784569")).unwrap();
        assert_eq!((f.a(), f.b(), f.c(), f.order()), (3, 6, 8, 9));
        let f = AbcForm::of(&perm("1562347")).unwrap();
        assert_eq!((f.a(), f.b(), f.c(), f.order()), (1, 4, 6, 7));
        let f = AbcForm::of(&perm("126734589")).unwrap();
        assert_eq!((f.a(), f.b(), f.c(), f.order()), (2, 5, 7, 9));
        assert!(AbcForm::of(&Permutation::identity(3).unwrap()).is_err());
    }

    #[test]
    fn abc_reconstruction_is_exact() {
        let p = perm("123784569");
        assert_eq!(AbcForm::of(&p).unwrap().permutation(), p);
        // Identity of order 9 with blocks 4..6 and 7..8 interchanged.
        let direct = AbcForm {
            a: 3,
            b: 6,
            c: 8,
            n: 9,
        };
        assert_eq!(direct.permutation(), p);
    }

    #[test]
    fn length_vector_examples() {
        assert_eq!(
            LengthVector::of(&perm("126734589")).unwrap(),
            lv(3, 3, 2, 3, 9)
        );
        assert_eq!(lv(3, 3, 3, 2, 9).permutation(), perm("126783459"));
        assert_eq!(LengthVector::of(&perm("31245")).unwrap(), lv(1, 2, 1, 3, 5));
        assert_eq!(LengthVector::of(&perm("12453")).unwrap(), lv(3, 1, 2, 1, 5));
        assert_eq!(
            LengthVector::of(&perm("1562347")).unwrap(),
            lv(2, 3, 2, 2, 7)
        );
    }

    #[test]
    fn length_vector_validation() {
        assert!(LengthVector::new(1, 1, 1, 1, 2).is_ok());
        // Sum must be n + 2.
        assert!(LengthVector::new(1, 1, 1, 2, 2).is_err());
        // Coordinates range up to n - 1; the boundary is reachable.
        assert!(LengthVector::new(5, 1, 1, 4, 9).is_ok());
        assert!(LengthVector::new(9, 1, 1, 1, 10).is_ok());
        assert!(LengthVector::new(0, 1, 1, 5, 5).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert!(enumerate_bg(1).unwrap().is_empty());
        assert_eq!(enumerate_bg(2).unwrap(), vec![lv(1, 1, 1, 1, 2)]);
        assert_eq!(enumerate_bg(3).unwrap().len(), 4);
        assert_eq!(enumerate_bg(4).unwrap().len(), 10);
        assert_eq!(enumerate_bg(9).unwrap().len(), 120);
        assert!(enumerate_bg(0).is_err());
        for n in 2..=12 {
            let all = enumerate_bg(n).unwrap();
            assert_eq!(Count::from(all.len()), bg_count(n));
            assert!(
                all.windows(2).all(|w| w[0] < w[1]),
                "sorted, duplicate-free"
            );
        }
    }

    #[test]
    fn enumeration_matches_filtering_small_symmetric_groups() {
        // Independent route: test every word of S_n for the descent
        // condition and compare against the vector enumeration.
        for n in 2..=6 {
            let mut found = Vec::new();
            let mut word: Vec<usize> = (1..=n).collect();
            loop {
                let p = Permutation::from_word(word.clone()).unwrap();
                if p.is_bigrassmannian() {
                    found.push(LengthVector::of(&p).unwrap());
                }
                if !next_permutation(&mut word) {
                    break;
                }
            }
            found.sort();
            assert_eq!(found, enumerate_bg(n).unwrap());
        }
    }

    fn next_permutation(word: &mut [usize]) -> bool {
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

    #[test]
    fn f2143_examples() {
        assert_eq!(lv(3, 3, 2, 3, 9).f2143(), lv(3, 3, 3, 2, 9));
        assert_eq!(lv(3, 3, 2, 3, 9).f2143().permutation(), perm("126783459"));
        for v in enumerate_bg(8).unwrap() {
            assert_eq!(v.f2143().f2143(), v);
        }
    }

    #[test]
    fn f_phi_matches_named_maps() {
        let id4 = Permutation::identity(4).unwrap();
        for v in enumerate_bg(7).unwrap() {
            assert_eq!(f_phi(&id4, &v).unwrap(), v);
            assert_eq!(f_phi(&perm("2143"), &v).unwrap(), v.f2143());
            assert_eq!(f_phi(&perm("1324"), &v).unwrap(), v.f1324());
            assert_eq!(f_phi(&perm("4321"), &v).unwrap(), v.f4321());
            // The relabelings transport to inverse and conjugate words.
            assert_eq!(v.f1324().permutation(), v.permutation().inverse());
            assert_eq!(v.f4321().permutation(), v.permutation().conjugate());
        }
        assert!(f_phi(&perm("123"), &lv(1, 1, 1, 1, 2)).is_err());
    }

    #[test]
    fn every_coordinate_relabeling_stays_valid() {
        let mut word = vec![1usize, 2, 3, 4];
        let mut relabelings = vec![Permutation::from_word(word.clone()).unwrap()];
        while next_permutation(&mut word) {
            relabelings.push(Permutation::from_word(word.clone()).unwrap());
        }
        assert_eq!(relabelings.len(), 24);
        for v in enumerate_bg(6).unwrap() {
            for phi in &relabelings {
                let image = f_phi(phi, &v).expect("relabeling preserves the constraints");
                assert_eq!(image.order(), v.order());
            }
        }
    }

    #[test]
    fn vector_comparability_examples() {
        let p = lv(1, 2, 1, 3, 5);
        let q = lv(3, 1, 2, 1, 5);
        assert!(!p.leq(&q).unwrap());
        assert!(!q.leq(&p).unwrap());
        assert!(p.leq(&p).unwrap());
        // 14235 <= 34512 on coordinates.
        let lo = LengthVector::of(&perm("14235")).unwrap();
        let hi = LengthVector::of(&perm("34512")).unwrap();
        assert!(lo.leq(&hi).unwrap());
        assert!(!hi.leq(&lo).unwrap());
        assert!(lv(1, 1, 1, 1, 2).leq(&lv(1, 2, 1, 1, 3)).is_err());
    }

    #[test]
    fn beta_alpha_formula_examples() {
        assert_eq!(
            beta_general(&Permutation::identity(6).unwrap()),
            Count::ZERO
        );
        assert_eq!(beta_general(&perm("1562347")), Count::from(15u32));
        assert_eq!(
            LengthVector::of(&perm("1562347")).unwrap().beta(),
            Count::from(15u32)
        );
        assert_eq!(
            LengthVector::of(&perm("126734589")).unwrap().alpha(),
            Count::from(27u32)
        );
        assert_eq!(
            LengthVector::of(&perm("41235")).unwrap().beta(),
            Count::from(6u32)
        );
        assert_eq!(
            LengthVector::of(&perm("12453")).unwrap().alpha(),
            Count::from(6u32)
        );
        assert_eq!(
            LengthVector::of(&perm("41235")).unwrap().f2143(),
            LengthVector::of(&perm("12453")).unwrap()
        );
    }

    #[test]
    fn conjugate_reverses_length_vector() {
        for v in enumerate_bg(7).unwrap() {
            let conj = v.permutation().conjugate();
            assert_eq!(LengthVector::of(&conj).unwrap(), v.f4321());
        }
    }

    #[test]
    fn vector_serialization_round_trip() {
        let v = lv(3, 3, 2, 3, 9);
        assert_eq!(v.to_string(), "(3,3,2,3)@9");
        assert_eq!("(3,3,2,3)@9".parse::<LengthVector>().unwrap(), v);
        assert!("(3,3,2)@9".parse::<LengthVector>().is_err());
        assert!("(9,1,1,1)@9".parse::<LengthVector>().is_err());
        assert!("3,3,2,3@9".parse::<LengthVector>().is_err());
    }
}

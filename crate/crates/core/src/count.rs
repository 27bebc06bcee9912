//! Exact counting support.
//!
//! Every enumeration formula in this crate returns a [`Count`], an
//! arbitrary-precision non-negative integer: the maximal-chain total
//! `4^(n-2)` already overflows 64 bits at `n = 34`.

use num_bigint::BigUint;

/// Exact non-negative integer result of a counting formula or oracle.
pub type Count = BigUint;

/// Binomial coefficient `C(n, k)` as an exact integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Count {
    if k > n {
        return Count::ZERO;
    }
    let k = k.min(n - k);
    let mut result = Count::from(1u32);
    for i in 1..=k {
        result = result * Count::from(n - k + i) / Count::from(i);
    }
    result
}

/// `4^e` as an exact integer.
pub fn pow4(e: usize) -> Count {
    Count::from(4u32).pow(e as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(0, 0), Count::from(1u32));
        assert_eq!(binomial(5, 2), Count::from(10u32));
        assert_eq!(binomial(10, 3), Count::from(120u32));
        assert_eq!(binomial(2, 3), Count::ZERO);
        assert_eq!(binomial(62, 31).to_string(), "465428353255261088");
    }

    #[test]
    fn pow4_matches_repeated_product() {
        let mut acc = Count::from(1u32);
        for e in 0..40 {
            assert_eq!(pow4(e), acc);
            acc *= Count::from(4u32);
        }
    }
}

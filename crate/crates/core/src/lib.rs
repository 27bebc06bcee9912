//! Bruhat order on permutations of `[n]`, with a specialized engine
//! for the poset of bigrassmannian permutations: several independent
//! comparability tests, exact counting formulas, and the complete
//! Hasse-diagram structure (ranks, chains, distances, antichains,
//! butterflies, maximal lower bounds), each formula paired with a
//! brute-force oracle in [`oracle`].
//!
//! The building blocks:
//!
//! - [`Permutation`]: one-line words with 1-based positions and values.
//! - [`MonotoneTriangle`]: sorted-prefix staircase tableaux; entrywise
//!   comparison is the Ehresmann criterion.
//! - [`LengthVector`]: the four-coordinate canonical key of a
//!   bigrassmannian element; all poset statistics are computed on it.
//! - [`HassePoset`]: the cover digraph over length vectors.
//!
//! ```
//! use bgposet::{leq_ehresmann, LengthVector, Permutation};
//!
//! let p: Permutation = "14235".parse()?;
//! let q: Permutation = "34512".parse()?;
//! assert!(leq_ehresmann(&p, &q)?);
//!
//! let v = LengthVector::of(&p)?;
//! let w = LengthVector::of(&q)?;
//! assert!(v.leq(&w)?);
//! assert_eq!(v.beta(), 3u32.into());
//! # Ok::<(), bgposet::Error>(())
//! ```

pub mod bigrassmannian;
pub mod bruhat;
pub mod count;
pub mod error;
pub mod limits;
pub mod oracle;
pub mod permutation;
pub mod poset;

pub use bigrassmannian::{beta_general, bg_count, enumerate_bg, f_phi, AbcForm, LengthVector};
pub use bruhat::{leq_bb, leq_ehresmann, leq_reduction_oracle, MonotoneTriangle};
pub use count::{binomial, Count};
pub use error::{Error, Result};
pub use limits::Limits;
pub use permutation::{Permutation, ReductionStep};
pub use poset::{
    butterflies, butterfly_count, count_maximal_chains, count_saturated_chains, degree, edge_count,
    hasse_distance, level_size, max_antichain_size, maximal_below, maximal_elements, minimal_above,
    minimal_elements, sperner_decomposition, sperner_up_image, up_cover_vectors, Butterfly,
    HassePoset,
};

#[cfg(test)]
mod tests {
    // Everything is an immutable value; sharing across tasks is part
    // of the contract.
    #[test]
    fn core_types_are_send_and_sync() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<super::Permutation>();
        assert_send_sync::<super::MonotoneTriangle>();
        assert_send_sync::<super::AbcForm>();
        assert_send_sync::<super::LengthVector>();
        assert_send_sync::<super::HassePoset>();
        assert_send_sync::<super::Butterfly>();
        assert_send_sync::<super::Count>();
        assert_send_sync::<super::Error>();
    }
}

//! Argument parsing for permutations and length vectors.
//!
//! Permutations are comma-separated words (`1,4,2,3,5`) or compact
//! digit words for orders up to 9 (`14235`); length vectors use the
//! `(l1,l2,l3,l4)@n` form. Commands that operate on bigrassmannian
//! elements accept either encoding.

use bgposet::{LengthVector, Permutation};

use crate::CliError;

/// A parsed element argument.
#[derive(Debug, Clone)]
pub enum Element {
    Word(Permutation),
    Vector(LengthVector),
}

impl Element {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        let t = s.trim();
        if t.starts_with('(') || t.contains('@') {
            let v: LengthVector = t.parse().map_err(|e| CliError::new(2, format!("{e}")))?;
            return Ok(Element::Vector(v));
        }
        let p: Permutation = t.parse().map_err(|e| CliError::new(2, format!("{e}")))?;
        Ok(Element::Word(p))
    }

    pub fn order(&self) -> usize {
        match self {
            Element::Word(p) => p.order(),
            Element::Vector(v) => v.order(),
        }
    }

    pub fn permutation(&self) -> Permutation {
        match self {
            Element::Word(p) => p.clone(),
            Element::Vector(v) => v.permutation(),
        }
    }

    /// The canonical vector; fails with exit code 3 when a plain word
    /// is not bigrassmannian.
    pub fn vector(&self) -> Result<LengthVector, CliError> {
        match self {
            Element::Word(p) => LengthVector::of(p).map_err(|e| CliError::new(3, format!("{e}"))),
            Element::Vector(v) => Ok(*v),
        }
    }

    /// The original argument rendered canonically, for echoing.
    pub fn echo(&self) -> String {
        match self {
            Element::Word(p) => p.to_string(),
            Element::Vector(v) => v.to_string(),
        }
    }
}

/// Validates an order argument against the configured maximum.
pub fn check_order(n: usize, min: usize, max: usize) -> Result<(), CliError> {
    if n < min || n > max {
        return Err(CliError::new(
            2,
            format!("order {n} outside the accepted range {min}..={max}"),
        ));
    }
    Ok(())
}

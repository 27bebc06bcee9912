//! Runtime size caps.
//!
//! The brute-force oracles are exact but exponential-ish in the order;
//! these caps keep them from being mistaken for production paths.
//! Exceeding a cap is an explicit error, never a silent fallback.

use std::env;

/// Size caps for the library and its oracles. All caps are inclusive.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest permutation order the CLI accepts.
    pub max_order: usize,
    /// Largest order the reduction-closure search accepts.
    pub reduction_oracle_max: usize,
    /// Largest order for exhaustive sweeps over the whole symmetric group.
    pub sn_sweep_max: usize,
    /// Largest order for exhaustive sweeps over bigrassmannian elements.
    pub bg_sweep_max: usize,
    /// Largest order for graph (DOT) export.
    pub graph_export_max: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: 64,
            reduction_oracle_max: 8,
            sn_sweep_max: 6,
            bg_sweep_max: 7,
            graph_export_max: 12,
        }
    }
}

impl Limits {
    /// Defaults with any `BGPOSET_*` environment overrides applied.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        limits.apply_env();
        limits
    }

    /// Applies `BGPOSET_MAX_ORDER`, `BGPOSET_REDUCTION_ORACLE_MAX`,
    /// `BGPOSET_SN_SWEEP_MAX`, `BGPOSET_BG_SWEEP_MAX` and
    /// `BGPOSET_GRAPH_EXPORT_MAX` when set to valid integers.
    pub fn apply_env(&mut self) {
        let read = |name: &str| {
            env::var(name)
                .ok()
                .and_then(|value| value.trim().parse::<usize>().ok())
        };
        if let Some(v) = read("BGPOSET_MAX_ORDER") {
            self.max_order = v;
        }
        if let Some(v) = read("BGPOSET_REDUCTION_ORACLE_MAX") {
            self.reduction_oracle_max = v;
        }
        if let Some(v) = read("BGPOSET_SN_SWEEP_MAX") {
            self.sn_sweep_max = v;
        }
        if let Some(v) = read("BGPOSET_BG_SWEEP_MAX") {
            self.bg_sweep_max = v;
        }
        if let Some(v) = read("BGPOSET_GRAPH_EXPORT_MAX") {
            self.graph_export_max = v;
        }
    }
}

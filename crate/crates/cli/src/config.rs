//! Limit configuration: defaults, optional TOML file, environment
//! overrides, then command-line overrides, in that order.
//!
//! The config file is named by the `BGPOSET_CONFIG` environment
//! variable and may set any of:
//!
//! ```toml
//! max_order = 64
//! reduction_oracle_max = 8
//! sn_sweep_max = 6
//! bg_sweep_max = 7
//! graph_export_max = 12
//! ```

use std::fs;

use bgposet::Limits;
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Default, Deserialize)]
struct FileLimits {
    max_order: Option<usize>,
    reduction_oracle_max: Option<usize>,
    sn_sweep_max: Option<usize>,
    bg_sweep_max: Option<usize>,
    graph_export_max: Option<usize>,
}

/// Resolves the effective limits. `max_n_flag` is the global `--max-n`
/// override for the largest accepted order.
pub fn load_limits(max_n_flag: Option<usize>) -> Result<Limits, CliError> {
    let mut limits = Limits::default();
    if let Ok(path) = std::env::var("BGPOSET_CONFIG") {
        let text = fs::read_to_string(&path)
            .map_err(|e| CliError::new(2, format!("cannot read config file {path}: {e}")))?;
        let file: FileLimits = toml::from_str(&text)
            .map_err(|e| CliError::new(2, format!("bad config file {path}: {e}")))?;
        if let Some(v) = file.max_order {
            limits.max_order = v;
        }
        if let Some(v) = file.reduction_oracle_max {
            limits.reduction_oracle_max = v;
        }
        if let Some(v) = file.sn_sweep_max {
            limits.sn_sweep_max = v;
        }
        if let Some(v) = file.bg_sweep_max {
            limits.bg_sweep_max = v;
        }
        if let Some(v) = file.graph_export_max {
            limits.graph_export_max = v;
        }
    }
    limits.apply_env();
    if let Some(v) = max_n_flag {
        limits.max_order = v;
    }
    Ok(limits)
}

//! Process-wide limits.

use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const DEFAULT_BRUTE_BOUND: usize = 6;
pub const BRUTE_BOUND_VAR: &str = "ATOMKIT_BRUTE_BOUND";

/// Type-A scans over S_X refuse |X| above this.
pub const TYPE_A_BRUTE_SIZE: usize = 8;

/// Largest rank nested descent graphs are built for.
pub const DEFAULT_NESTED_LIMIT: usize = 9;

/// Whole-group class partitions refuse ranks above this.
pub const CLASS_RANK_LIMIT: usize = 5;

/// Reduced-word enumeration refuses elements longer than this.
pub const WORD_LENGTH_LIMIT: usize = 16;

/// Census enumeration columns are filled up to this rank.
pub const CENSUS_ENUM_LIMIT: usize = 9;

/// Largest poset the lattice probe will materialize.
pub const PROBE_LIMIT: usize = 5000;

/// Exhaustive scans over W_n refuse ranks above this. Read once from
/// `ATOMKIT_BRUTE_BOUND`, falling back to 6.
pub fn brute_bound() -> usize {
    static BOUND: OnceLock<usize> = OnceLock::new();
    *BOUND.get_or_init(|| {
        std::env::var(BRUTE_BOUND_VAR)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BRUTE_BOUND)
    })
}

pub(crate) fn check_bound(what: &'static str, value: usize, bound: usize) -> Result<()> {
    if value > bound {
        Err(Error::BoundExceeded { what, value, bound })
    } else {
        Ok(())
    }
}

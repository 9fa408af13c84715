//! Size caps. `DELTOID_MAX_N` raises (or lowers) every cap at once.

use crate::error::{Error, Result};

pub const GROUP: usize = 8;
pub const POLYTOPE: usize = 6;
pub const ENUMERATE_DM: usize = 3;
pub const LOCALIZATION: usize = 5;
pub const CENSUS: usize = 4;
pub const DECOMPOSE: usize = 4;
pub const MATROID_GROUND: usize = 20;

fn override_cap() -> Option<usize> {
    std::env::var("DELTOID_MAX_N").ok()?.trim().parse().ok()
}

pub fn cap(default: usize) -> usize {
    override_cap().unwrap_or(default)
}

pub fn check(what: &'static str, n: usize, default: usize) -> Result<()> {
    let limit = cap(default);
    if n > limit {
        return Err(Error::ResourceLimit { what, n, limit });
    }
    Ok(())
}

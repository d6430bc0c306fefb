//! The cobar resolution, cochain complexes of comodules, and the derived functors of
//! coinvariants, `Hom^H`, rational `HOM` and relative `Hom`.

mod cobar;
mod complex;
mod derived;
mod relative;

pub use cobar::{cobar_resolution, CobarResolution};
pub use complex::{CochainComplex, GradedComodule};
pub use derived::{derived_coinvariants, ext_h, ext_h_generic, ext_rational, RationalExt};
pub use relative::{a_ext, a_ext_h, a_ext_injective, a_free_resolution, b_ext, FreeResolution};

use crate::error::{Error, Result};

/// Largest ambient dimension a computation may build unless `HOPFCOH_CAP` says otherwise.
pub const DEFAULT_CAP: usize = 10_000;

/// `HOPFCOH_CAP` when set to a positive integer, else [`DEFAULT_CAP`].
pub fn cap_from_env() -> usize {
    std::env::var("HOPFCOH_CAP").ok().and_then(|v| v.trim().parse().ok()).filter(|&c| c > 0).unwrap_or(DEFAULT_CAP)
}

pub(crate) fn guard(what: &str, needed: usize, cap: usize) -> Result<()> {
    if needed > cap {
        return Err(Error::ResourceLimit { what: what.to_string(), needed, cap });
    }
    Ok(())
}

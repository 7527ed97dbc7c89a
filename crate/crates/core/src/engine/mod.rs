//! Whitney-number engines.

mod extended;
mod node;
mod simple;
mod symmetry;
mod whitney;

use serde::{Deserialize, Serialize};

use crate::arith::Count;
use crate::arrangement::Arrangement;
use crate::error::Result;
use crate::perm::PermGroup;

pub use extended::{whitney_extended, whitney_from_node};
pub use simple::whitney_simple;
pub use symmetry::{run_report, whitney_symmetry, OrbitId, RunReport, RunStats, SymmetryOptions};
pub use whitney::{CharPoly, WhitneyVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Simple,
    Extended,
    #[default]
    Symmetry,
}

/// Runs the chosen engine. `group` is only used by [`Engine::Symmetry`];
/// `None` means the trivial group.
pub fn whitney_numbers(
    arr: &Arrangement,
    group: Option<&PermGroup>,
    engine: Engine,
    opts: &SymmetryOptions,
) -> Result<WhitneyVector> {
    match engine {
        Engine::Simple => Ok(whitney_simple(arr)),
        Engine::Extended => Ok(whitney_extended(arr)),
        Engine::Symmetry => {
            let trivial;
            let group = match group {
                Some(g) => g,
                None => {
                    trivial = PermGroup::trivial(arr.len());
                    &trivial
                }
            };
            whitney_symmetry(arr, group, opts)
        }
    }
}

pub fn characteristic_polynomial(
    arr: &Arrangement,
    group: Option<&PermGroup>,
    engine: Engine,
    opts: &SymmetryOptions,
) -> Result<CharPoly> {
    whitney_numbers(arr, group, engine, opts).map(|w| w.char_poly())
}

/// Number of chambers of the real arrangement, `Σ b_i`. Both supported
/// fields embed in ℝ.
pub fn number_of_chambers(
    arr: &Arrangement,
    group: Option<&PermGroup>,
    engine: Engine,
    opts: &SymmetryOptions,
) -> Result<Count> {
    whitney_numbers(arr, group, engine, opts).map(|w| w.chambers())
}

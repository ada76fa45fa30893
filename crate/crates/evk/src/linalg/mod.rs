//! Exact integer linear algebra: Smith normal form with unimodular
//! transforms, modular linear-system solving, and composition lengths.

mod modular;
mod snf;

pub(crate) use modular::mulmod;
pub use modular::{
    brute_force_solve_mod, composition_length, solve_mod, solve_mod_with, ModSolutionSet,
    SolutionIter, SolveError, DEFAULT_BRUTE_FORCE_CAP,
};
pub use snf::{derive_modm_divisors, smith_normal_form, SmithDecomposition};

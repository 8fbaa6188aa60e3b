//! Kazhdan-Lusztig polynomials, μ-coefficients and the C′-basis.

mod cache;
mod cprime;
mod table;

pub use cache::{MuCache, MuLists, CACHE_VERSION};
pub use cprime::{
    cprime_products_with, cprime_times_generator, structure_constant_a_oracle,
    structure_constant_a_values, CPrimeCombination, HeckeElement, ORACLE_LIMIT,
};
pub use table::{DescentChoice, KlTable};

/// Source of μ-data: for each `w`, the pairs `(z, μ(z,w))` with `z < w` and
/// `μ(z,w) ≠ 0`, sorted by `z`.
pub trait MuProvider: Sync {
    fn mu_list(&self, w: usize) -> &[(u32, i64)];
}

impl MuProvider for KlTable {
    fn mu_list(&self, w: usize) -> &[(u32, i64)] {
        KlTable::mu_list(self, w)
    }
}

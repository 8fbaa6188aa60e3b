//! Finite Coxeter groups: presentations, exact root realizations, element
//! arithmetic, enumeration, conjugacy classes and parabolic cosets.

mod conjugacy;
mod graph;
mod group;
mod roots;

pub use conjugacy::{ConjClass, ConjugacyAnalysis};
pub use graph::{gram_is_positive_definite, CoxeterGraph, CoxeterType};
pub use group::{
    enumeration_bound, Group, Parabolic, DEFAULT_ENUMERATION_BOUND, ENUMERATION_BOUND_VAR,
};
pub use roots::{GroupElement, RootDatum};

/// Iterate over the set bits of a generator mask.
pub fn mask_iter(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&s| mask & (1 << s) != 0)
}

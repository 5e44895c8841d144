//! Towers of Coxeter groups and of their fully commutative elements.

pub mod group;
pub mod ij;

pub use group::{
    centralizer_check, check_homomorphism, check_injective, check_square, length_law_check, GroupMap, Report,
};
pub use ij::{check_form, check_injections, is_w1_or_finite, map_form, map_i, map_j, substituted_word, Injection};

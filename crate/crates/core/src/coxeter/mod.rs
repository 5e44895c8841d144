//! Coxeter systems, words, exact group elements and the basic predicates.

pub mod ball;
pub mod budget;
pub mod element;
pub mod heap;
pub mod quadint;
pub mod reduced;
pub mod system;

pub use ball::{enumerate_ball, BallEntry};
pub use budget::Budget;
pub use element::{count_occurrences, element_of, GroupElement, Side};
pub use heap::{is_reduced_fc_word, Heap};
pub use quadint::QuadInt;
pub use reduced::{
    all_reduced_words, commutation_class, has_braid_factor, is_fc_word, is_fully_commutative,
    is_reduced, is_reduced_phi, phi_multiset,
};
pub use system::{CoxeterSystem, Family, Generator, Letter, Word};

//! Laurent polynomials, linear combinations and exact rank.

pub mod lincomb;
pub mod poly;
pub mod rank;

pub use lincomb::LinComb;
pub use poly::LaurentPoly;
pub use rank::{eval_mod, rank, rank_bareiss, rank_mod_p, rank_sparse, rows_independent, PolyMatrix};

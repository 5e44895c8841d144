//! Normal forms of fully commutative elements.

pub mod bform;
pub mod dform;
pub mod dtilde;
pub mod form;
pub mod interval;
pub mod peel;

pub use bform::{parse_b, BForm};
pub use dform::DForm;
pub use dtilde::{parse_d, DAffForm};
pub use form::{affine_length, enumerate_fc, extremal, parse, parse_word, psi, Extremal, FcEntry, NormalForm, Psi};
pub use interval::{interval, interval_inv, interval_len};

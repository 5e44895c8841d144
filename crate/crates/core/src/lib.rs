//! Fully commutative elements of affine Coxeter groups of types B~ and D~,
//! their normal forms, tower maps, and Hecke and Temperley-Lieb algebras.

pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod laurent;
pub mod tl;
pub mod normal_forms;
pub mod towers;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/coxeter.md")]
    pub struct Coxeter;
    #[doc = include_str!("../../../book/src/normal-forms.md")]
    pub struct NormalForms;
    #[doc = include_str!("../../../book/src/towers.md")]
    pub struct Towers;
    #[doc = include_str!("../../../book/src/laurent.md")]
    pub struct Laurent;
    #[doc = include_str!("../../../book/src/hecke.md")]
    pub struct Hecke;
    #[doc = include_str!("../../../book/src/temperley-lieb.md")]
    pub struct TemperleyLieb;
    #[doc = include_str!("../../../book/src/verification.md")]
    pub struct Verification;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}

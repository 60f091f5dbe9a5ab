pub mod ampleness;
pub mod connectedness;
pub mod degeneracy;
pub mod error;
pub mod module;
pub mod ring;
pub mod scenario;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/modules.md")]
    mod modules {}
    #[doc = include_str!("../../../book/src/degeneracy.md")]
    mod degeneracy {}
    #[doc = include_str!("../../../book/src/ampleness.md")]
    mod ampleness {}
    #[doc = include_str!("../../../book/src/connectedness.md")]
    mod connectedness {}
    #[doc = include_str!("../../../book/src/scenarios.md")]
    mod scenarios {}
}

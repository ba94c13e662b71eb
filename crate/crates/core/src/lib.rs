pub mod algebra;
pub mod catabolism;
pub mod error;
pub mod hl;
pub mod quiver;
pub mod schur;
pub mod shuffle;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/polynomials.md")]
    mod polynomials {}
    #[doc = include_str!("../../../book/src/quivers.md")]
    mod quivers {}
    #[doc = include_str!("../../../book/src/hall-littlewood.md")]
    mod hall_littlewood {}
    #[doc = include_str!("../../../book/src/catabolism.md")]
    mod catabolism {}
    #[doc = include_str!("../../../book/src/shuffle.md")]
    mod shuffle {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

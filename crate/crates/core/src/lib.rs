pub mod bider;
pub mod cli;
pub mod constructors;
pub mod error;
pub mod lie;
pub mod linalg;
pub mod oracle;
pub mod rep;

pub use error::{Error, Result};
pub use lie::{LieAlgebra, Parity, Sl2Triple, Subspace};
pub use linalg::{Rational, RationalMatrix};
pub use rep::{DerivationSpace, Representation};

/// Guide chapters compiled as doc-tests so their snippets stay in sync.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    pub struct Readme;
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/exact-linear-algebra.md")]
    pub struct ExactLinearAlgebra;
    #[doc = include_str!("../../../book/src/structure-constants.md")]
    pub struct StructureConstants;
    #[doc = include_str!("../../../book/src/constructors.md")]
    pub struct Constructors;
    #[doc = include_str!("../../../book/src/representations.md")]
    pub struct Representations;
    #[doc = include_str!("../../../book/src/biderivations.md")]
    pub struct Biderivations;
    #[doc = include_str!("../../../book/src/superalgebras.md")]
    pub struct Superalgebras;
    #[doc = include_str!("../../../book/src/command-line.md")]
    pub struct CommandLine;
}

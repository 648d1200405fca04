//! Exact computations with finite metagroups: Cayley-Dickson generator
//! tables, metagroup algebras and their graded bimodules, twisted
//! Hochschild-style cohomology, derivations and extensions.

pub mod algebra;
pub mod cayley_dickson;
pub mod cohomology;
pub mod error;
pub mod extensions;
pub mod finite_group;
pub mod formats;
pub mod generators;
pub mod gmodule;
pub mod linalg;
pub mod metagroup;
pub mod paren;
pub mod ring;
pub mod tuple;

pub use error::{Error, Result};

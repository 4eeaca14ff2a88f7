//! Exact computer algebra for finite-dimensional monoidal Hom-Hopf algebras.
//!
//! Structures are given by structure constants over `Q` or `F_p`. The crate builds crossed
//! products `A#_σH`, cleft extensions and Hopf-Galois data from explicit formulas and checks
//! every axiom and equivalence exactly, basis tuple by basis tuple.
//!
//! Module map:
//! - [`linalg`]: exact scalars, labeled spaces, dense maps, kernels, quotients.
//! - [`homstruct`]: Hom-(co)algebras, Hom-Hopf algebras, axiom checkers, convolution.
//! - [`homgroup`]: Hom-groups, Hom-group algebras and coset data for quotient extensions.
//! - [`crossed`]: weak actions, cocycles, crossed products and their condition suite.
//! - [`cleft`]: comodule algebras, coinvariants, cleft extensions and the crossed ⇄ cleft passage.
//! - [`galois`]: relative tensor products, the Galois map and normal bases.
//! - [`io`]: JSON file formats shared with the command-line tool.
//! - [`corpus`]: named group extensions and altered crossed systems used as fixtures.

pub mod cleft;
pub mod corpus;
pub mod crossed;
pub mod error;
pub mod galois;
pub mod homgroup;
pub mod homstruct;
pub mod io;
pub mod linalg;
pub mod report;

pub use error::{Error, Result};

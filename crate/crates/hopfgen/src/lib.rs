//! Exact computations with finite-dimensional Hopf algebras over `Q`.
//!
//! The crate provides, over arbitrary-precision rationals:
//!
//! - Hopf algebras by structure constants, with full axiom validation and a
//!   small builtin catalog ([`hopf`], [`catalog`]);
//! - bilinear two-cocycles, convolution inverses, twisted comodule algebras,
//!   and cocycle deformations ([`form`], [`twist`]);
//! - the presented commutative Hopf ring carrying the generic cocycle of a
//!   Hopf algebra, with Gröbner-basis normal forms ([`poly`], [`groebner`],
//!   [`presented`], [`sigma`]);
//! - the base subalgebra generated by the generic cocycle values, subalgebra
//!   membership by elimination, and its quotient against the abelianization
//!   ([`subalgebra`]);
//! - the tensor-algebra generators and the maps relating them to the base
//!   subalgebra ([`freeword`], [`pq`]);
//! - the generic extension built over the base subalgebra with its
//!   specializations ([`galois`]).
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so values can be shared freely across threads.
//!
//! A command-line front end lives in the companion `hopfgen-cli` crate, and a
//! narrative guide with runnable examples is under `book/` in the repository
//! (its code blocks compile and run as this crate's doc-tests; see
//! [`guide`]).

pub mod cache;
pub mod bareiss;
pub mod catalog;
pub mod groebner;
pub mod poly;
pub mod pq;
pub mod error;
pub mod form;
pub mod freeword;
pub mod galois;
pub mod group;
pub mod hopf;
pub mod json;
pub mod linalg;
pub mod presented;
pub mod quotient;
pub mod sigma;
pub mod subalgebra;
pub mod scalar;
pub mod tensor;
pub mod twist;

pub use error::Error;

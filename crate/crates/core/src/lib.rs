//! Polar groups of real forms of complex curves, computed exactly over Q(i).
//!
//! A real form `A` of a complex domain `B = A[i]` is the fixed ring of a
//! conjugation `sigma`. Its polar group is `L*/B*K*`, where `L` and `K` are
//! the fraction fields of `B` and `A`. This crate provides
//!
//! * exact scalar arithmetic over Q(i) and Z\[i\] ([`exactnum`]),
//! * polynomials, Laurent polynomials and rational functions ([`polyalg`]),
//! * splitting into roots over Q(i) ([`splitter`]),
//! * a catalog of ring contexts with their conjugations and an independent
//!   triviality test ([`ringctx`]),
//! * canonical class normal forms, polar factorization and the natural
//!   homomorphisms between polar groups ([`polar`]),
//! * an expression parser, ring DSL and report generator backing the
//!   `polarctl` binary ([`cli`]).

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod polar;
pub mod polyalg;
pub mod ringctx;
pub mod splitter;

pub use error::{Error, Result};
pub use exactnum::{GaussianInteger, GaussianRational, Rational};
pub use polar::PolarClass;
pub use polyalg::{LaurentQi, PolyQi, RatFuncQi};
pub use ringctx::RingContext;

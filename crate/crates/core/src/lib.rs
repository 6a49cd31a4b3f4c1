//! Exact structure-constant computations for Lie and Jordan superalgebras over
//! the rationals: construction, root-space decompositions, second cohomology,
//! universal central extensions and the Tits–Kantor–Koecher construction.
#![no_std]

extern crate alloc;

pub mod cohomology;
pub mod constructors;
pub mod error;
pub mod exact;
pub mod jordan;
pub mod roots;
pub mod superalg;

pub use error::Error;

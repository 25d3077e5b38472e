//! Exact computation of the Hopf-algebra automorphism group of the
//! Drinfeld double D(G) of a finite group G, its structural invariants,
//! and its action on the irreducible D(G)-module labels.

pub mod autdouble;
pub mod autgrp;
pub mod chartab;
pub mod cyclotomic;
pub mod double;
pub mod error;
pub mod groups;
pub mod modaction;
pub mod modp;

pub use cyclotomic::CycScalar;
pub use error::{Error, Result};
pub use groups::FiniteGroup;

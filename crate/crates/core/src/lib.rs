//! Exact projective duality for plane curves, Plücker-type identities for
//! conormal varieties under the Mukai flop of `T*P^n`, and Euler
//! characteristics of standard varieties.
//!
//! Everything is computed over Q; there is no floating point anywhere.

pub mod charclass;
pub mod curvelab;
pub mod dualgeom;
pub mod error;
pub mod exact;
pub mod flopcalc;
pub mod pipeline;

pub use error::{Error, Result};

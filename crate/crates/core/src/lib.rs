//! Exact arithmetic for phi-Newton polygons and irreducibility certificates
//! of generalized Schur and phi-Hermite polynomials.

pub mod certifier;
pub mod decimal;
pub mod fppoly;
pub mod hermite;
pub mod input;
pub mod oracle;
pub mod polygon;
pub mod primes;
pub mod schur;
pub mod suite;
pub mod valuation;
pub mod zpoly;

pub use zpoly::{IntPoly, PhiExpansion};

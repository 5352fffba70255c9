//! Spectral graph-energy toolkit.
//!
//! Builds the standard graph families and the energy-preserving operations
//! (Kronecker product, join, splitting, shadow, duplicate), computes numeric
//! spectra with a cyclic Jacobi solver and exact characteristic polynomials
//! over big integers, classifies graphs by energy, certifies equienergetic
//! pairs, and mechanically checks a catalog of claims about these
//! constructions at desk scale.

#![forbid(unsafe_code)]

pub mod batch;
pub mod classify;
pub mod error;
pub mod graph;
pub mod harness;
pub mod io;
pub mod iso;
pub mod limits;
pub mod ops;
pub mod spectral;

pub use classify::{certify_pair, classify_energy, EnergyReport, PairCertificate, PairVerdict};
pub use error::{Error, Result};
pub use graph::{Graph, SuperpathSpec};
pub use spectral::{char_poly, energy_closed_form, spectrum, CharPoly, Spectrum};

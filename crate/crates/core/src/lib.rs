//! Ordered orthogonal arrays from LFSR sequences.
//!
//! This crate builds ordered orthogonal arrays OOA(t, q+1, t, q) by selecting
//! columns of the subinterval array of a maximum-period LFSR sequence over
//! F_q, verifies the OOA property both by brute-force tuple counting and by
//! a linear-algebraic rank criterion, implements the run-shift analysis of
//! m-sequences that underpins the construction, and reproduces the coverage
//! comparison against the classical Reed-Solomon (RTS) construction with the
//! same parameters. A small hypergraph layer expresses the construction as a
//! vertex-map pullback between independence hypergraphs.
//!
//! The crate is `no_std` (with `alloc`); file IO and the command-line front
//! end live in the companion `ooa-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod construct;
pub mod error;
pub mod field;
pub mod hyper;
pub mod lfsr;
pub mod ooa;
pub mod poly;
pub mod table;

pub use error::{Error, Result};
pub use field::{Elem, FieldSpec, SubfieldMap};
pub use lfsr::{LfsrSpec, Sequence};
pub use ooa::{CoverageReport, OoaArray};
pub use poly::Poly;

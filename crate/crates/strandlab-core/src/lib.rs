//! Exact computational algebra over prime fields, built for studying
//! chains of symmetric ideals and the stability of their resolutions.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`] — arithmetic in F_p and exact sparse linear algebra;
//! * [`ring`] — monomials, grevlex, sparse polynomials, free-module elements;
//! * [`groebner`] — reduced Groebner bases for ideals and submodules,
//!   normal forms, colon ideals, saturation, syzygies and kernels;
//! * [`modpres`] — finitely presented graded modules with degreewise bases;
//! * [`betti`] — graded Betti tables via Koszul homology, derived invariants,
//!   Hilbert numerators and table rendering;
//! * [`equivar`] — ideal chains across widths, Frobenius powers, the
//!   chain-torsion operator, stratification and strand signatures;
//! * [`lnnr`] — width sweeps and exact eventual-linearity fitting.
//!
//! Everything is deterministic: identical inputs produce identical outputs,
//! byte for byte, including all rendered tables and serialized records.
//! The crate is `no_std` (with `alloc`); IO, caching and the CLI live in the
//! companion `strandlab` crate.

#![cfg_attr(not(any(test, feature = "oracle")), no_std)]

extern crate alloc;

pub mod betti;
pub mod equivar;
pub mod error;
pub mod field;
pub mod groebner;
pub mod lnnr;
pub mod modpres;
pub mod ring;

#[cfg(feature = "oracle")]
pub mod oracle;

pub use error::{Error, Result};

/// Version string mixed into cache keys; bump when numeric output changes.
pub const ENGINE_VERSION: &str = "strandlab-engine-1";

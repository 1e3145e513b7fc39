//! Finite left quasigroups and set-theoretic Yang-Baxter maps held as
//! Cayley tables.
//!
//! The library checks the rack, Rump and twisted Ward identities, converts
//! between left quasigroups and derived / involutive / idempotent braidings,
//! builds and recognizes twisted Ward quasigroups `x*y = c psi(x^-1 y)`, and
//! enumerates twisted Ward (left) quasigroups of small order up to
//! isomorphism.
//!
//! Elements are always `0..n`.

pub mod braid;
pub mod construct;
pub mod enumerate;
mod error;
pub mod groupcat;
pub mod permgrp;
pub mod qcore;
mod search;

pub use error::{Error, Result};
pub use qcore::CayleyTable;

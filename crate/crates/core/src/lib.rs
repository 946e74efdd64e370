//! Exact and floating-point kernels for separation of variables in the
//! trigonometric A₂ Ruijsenaars model.
//!
//! The crate is `no_std` and only needs `alloc`. Symbolic objects live over
//! `Q(q, ℓ)` with optional auxiliary indeterminates; numeric routines work in
//! IEEE doubles through `libm`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classical;
pub mod error;
pub mod exactalg;
pub mod macdonald;
pub mod numeric;
pub mod qkit;
pub mod sov;

pub use error::{Error, Result};

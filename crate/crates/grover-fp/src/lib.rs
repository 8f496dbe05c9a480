//! Bit-exact fixed-point emulation of Grover's quantum search, paired with an
//! analytical truncation-error tracker and a brute-force state-vector oracle.
//!
//! A fixed-point Grover emulator stores probability amplitudes as integer
//! mantissas at `f` fractional bits. Every diffusion step scales the amplitude
//! sum by a right shift, which discards low-order bits and accumulates
//! truncation error. This crate provides:
//!
//! - [`fixedpoint`] — exact dyadic values with floor-semantics truncation,
//!   the arithmetic substrate for everything else;
//! - [`reference`] — ideal Grover evolution on the two-value amplitude
//!   representation (binary64 and exact dyadic modes), plus the angular
//!   closed form;
//! - [`emulator`] — the bit-exact fixed-point Grover run and the measured
//!   l2 probability error;
//! - [`tracker`] — co-evolution of fixed-point amplitudes with their
//!   accumulated truncation errors, yielding the theoretical l2 error;
//! - [`statevector`] — brute-force full 2^n-amplitude runs (real and
//!   fixed-point) used as an independent oracle for the two-value structure;
//! - [`analysis`] — parameter sweeps, scaling-ratio statistics, constant
//!   calibration, and the minimal-fractional-bits formula.
//!
//! The crate deliberately avoids floating point wherever exactness matters:
//! amplitudes, truncation remainders, and accumulated errors are dyadic
//! rationals with unbounded integer mantissas, so "bit-exact" claims are
//! checked as integer equality, not float closeness.

pub mod analysis;
pub mod emulator;
mod error;
pub mod fixedpoint;
pub mod reference;
pub mod statevector;
pub mod tracker;

pub use error::{Error, Result};
pub use fixedpoint::{FxValue, TruncationResult};
pub use reference::{GroverParams, TwoValueState};

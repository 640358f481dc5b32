//! Exact computation of worst-case price-of-anarchy values for weighted
//! two-player affine congestion games.
//!
//! Everything here runs on arbitrary-precision rational arithmetic; there are
//! no floating-point code paths. The crate is organized around three routes to
//! the same quantity, which are cross-checked against each other:
//!
//! * [`worstcase`] builds and solves a small linear program whose optimum is
//!   the exact price of anarchy for a game class at fixed weights, together
//!   with a witness instance and a dual optimality certificate,
//! * [`formulas`] evaluates the closed-form piecewise expressions for the same
//!   quantity, with regime boundaries at irrational thresholds decided by
//!   certified sign tests and interval enclosures,
//! * [`catalog`] constructs the known parametric worst-case instances whose
//!   brute-force price of anarchy ([`equilibria`]) attains the bound on each
//!   instance's regime.
//!
//! The crate is `no_std`-compatible (it requires `alloc`); IO, file formats
//! and the command-line front end live in the companion `poa-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod equilibria;
pub mod exactmath;
pub mod formulas;
pub mod game;
pub mod simplex;
pub mod worstcase;

pub use exactmath::Rational;

//! Simulation and pricing toolkit for multi-level (super-distribution)
//! markets of virtual goods.
//!
//! In a multi-level market every buyer acquires, along with the good, the
//! right to resell it on commission. This crate models the resulting
//! monetary flux: it computes the expected resale incentive generated by a
//! price schedule and, inversely, the price schedule realizing a target
//! incentive ([`flux`]); validates the continuous model against exact
//! integer-agent oracles and a Monte-Carlo resale simulator ([`discrete`]);
//! solves the coupled dynamics of two goods competing in one market
//! ([`competition`]); and packages the standard scenario families,
//! parameter sweeps and pricing-design checks ([`scenarios`]).
//!
//! All functions of the market saturation `s ∈ [0, 1]` are carried by
//! [`GridFunction`]s on a uniform grid ([`numerics`]).

pub mod competition;
pub mod csvio;
pub mod discrete;
pub mod error;
pub mod flux;
pub mod numerics;
pub mod scenarios;

pub use error::{Error, Result};
pub use numerics::{GridFunction, DEFAULT_GRID};

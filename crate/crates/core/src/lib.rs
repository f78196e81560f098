//! Cyclic and linear permutation statistics, shuffle sets, and exhaustive
//! verification of shuffle-compatibility results at desk scale.
//!
//! A [`Word`] is a finite sequence of distinct positive integers; a [`Cycle`]
//! is its equivalence class under rotation, stored canonically (minimum entry
//! first).  On top of these the crate provides descent/peak/birun statistics
//! and their cyclic analogues, shuffle-set generation, the constructive
//! bijections relating cyclic shuffles to linear ones, and search engines
//! that check compatibility statements exhaustively over bounded lengths.

pub mod bijections;
pub mod compatibility;
pub mod error;
pub mod patterns;
pub mod perm_core;
pub mod qpoly;
pub mod shuffles;
pub mod statistics;

pub use error::Error;
pub use perm_core::{shift_mod, Cycle, IndexSet, Word};
pub use qpoly::{binomial, q_binomial, QPoly};
pub use statistics::{Distribution, StatValue, StatisticId};

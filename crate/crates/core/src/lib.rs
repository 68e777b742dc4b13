//! Koczy–Hirota fuzzy rule interpolation over trapezoidal sets, with
//! normality diagnostics for the interpolated conclusion and a fixed
//! nine-case benchmark.
//!
//! ```
//! use fri_lab::fuzzy::TrapezoidSet;
//! use fri_lab::kh::{kh_characteristic_points, Observation, Rule};
//!
//! let set = |p| TrapezoidSet::from_points(p).unwrap();
//! let lower = Rule::single(set([1.0, 2.0, 3.0, 4.0]), set([1.5, 2.5, 2.5, 3.8]));
//! let upper = Rule::single(set([6.0, 7.0, 8.0, 9.0]), set([6.5, 7.5, 7.5, 9.0]));
//! let obs = Observation::single(set([4.2, 5.2, 5.2, 6.7]));
//! let y = kh_characteristic_points(&lower, &upper, &obs).unwrap();
//! assert!(!y.is_monotone()); // 5.7 > 4.7 in the core
//! ```

pub mod benchmark;
pub mod cli;
pub mod cnf;
pub mod document;
pub mod error;
pub mod fuzzy;
pub mod kh;
pub mod plot;
pub mod render;

pub use error::{FriError, Result};

/// Absolute tolerance for ordering and equality decisions.
pub const TOL: f64 = 1e-9;

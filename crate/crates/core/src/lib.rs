//! Exact intersection-theory engine for Brill-Noether strata in Quot schemes of
//! maps from a curve to the Grassmannian `G(2,4)`.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: coefficients
//! are arbitrary precision rationals, and every operation is a pure function on
//! immutable values.
//!
//! * [`ring`]: free graded-supercommutative algebra with the curve relations.
//! * [`chern`]: Chern character, Todd class, Newton's identities, twists.
//! * [`kunneth`]: Künneth decomposition and the GRR pushforward along the curve.
//! * [`porteous`]: the `Δ_{p,q}` determinant and fundamental-class records.
//! * [`scenario`]: the `(g, d, s)` pipeline and its closed-form arithmetic.
//! * [`lab`]: genus-0 splitting-type laboratory on kernel matrices.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod chern;
mod error;
pub mod kunneth;
pub mod lab;
pub mod ledger;
pub mod linalg;
pub mod porteous;
pub mod ring;
pub mod scenario;
pub mod series;

pub use error::{Error, Result};

/// Exact rational scalars used everywhere in the engine.
pub type Rational = num_rational::BigRational;

pub use chern::{FormalBundle, PowerSums};
pub use kunneth::{KunnethClass, PushforwardResult};
pub use porteous::ClassRecord;
pub use ring::{Generator, Monomial, Parity, Presentation, RingElement};
pub use scenario::{ExistenceStatus, Scenario, StratumReport};
pub use series::FormalSeries;

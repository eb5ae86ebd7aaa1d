//! Exact and numerical machinery for q-brackets of weighted hook statistics
//! on integer partitions, the Eichler integrals of Eisenstein series they
//! generate, and the transformation laws those satisfy.
//!
//! Layout:
//! - [`partition`]: partitions, hook multisets, hook statistics
//! - [`series`] / [`poly`]: the exact truncated-series engine and its
//!   polynomial coefficient ring
//! - [`qseries`]: named series (Euler, eta, Eichler) and the q-bracket
//! - [`verify`]: exact coefficientwise identity suites
//! - [`special`]: Bernoulli numbers, zeta values, Gamma, Hurwitz zeta
//! - [`modular`]: evaluation on the upper half plane and the transformation
//!   residual suites
//! - [`asymptotics`]: divergent-expansion evaluation and the reference table
//! - [`chowla`]: fundamental discriminants, class numbers, canonical periods

pub mod asymptotics;
pub mod chowla;
pub mod error;
pub mod modular;
pub mod partition;
pub mod poly;
pub mod qseries;
pub mod rat;
pub mod series;
pub mod special;
pub mod verify;

pub use error::{Error, Result};
pub use modular::{TransformCheck, TransformReport, UpperHalfPoint};
pub use num::complex::Complex64;
pub use partition::{
    hook_function, hook_function_complex, hook_multiset, hook_product_poly, power_sum,
    t_hook_multiset, HookMultiset, Partition,
};
pub use poly::RatPoly;
pub use rat::Rat;
pub use series::{PolySeries, QSeries, RatSeries};
pub use verify::VerificationReport;

//! Evaluation of the zeta-plus-one and zeta-minus-one functions
//!
//! ```text
//! zp1(s) = sum_{n>=1} 1/(n^s + 1)        zm1(s) = sum_{n>=2} 1/(n^s - 1)
//! ```
//!
//! at positive even integers s = 2m, three independent ways:
//!
//! * residue-theorem closed forms over the unit-circle roots of z^{2m} -+ 1
//!   ([`closed`]), with real-trigonometric specializations for s <= 6;
//! * rigorous truncated series with integral-test tail bounds ([`series`]),
//!   which also cover the classical identities of Euler-Goldbach,
//!   Shallit-Zikan, and the sum of (zeta(2k) - 1);
//! * numeric residue and contour verification of every formula the closed
//!   forms depend on ([`residue`]).
//!
//! [`bernoulli`] supplies exact rational Bernoulli numbers and even zeta
//! values, [`complexfn`] the stable complex cotangent kernels, and
//! [`selftest`] the acceptance grid tying it all together. The `zetaone`
//! binary ([`cli`]) exposes each piece as a subcommand.

pub mod bernoulli;
pub mod cli;
pub mod closed;
pub mod complexfn;
pub mod error;
mod quad;
pub mod report;
pub mod residue;
pub mod selftest;
pub mod series;

pub use error::{Error, Result};
pub use report::{
    ContourReport, EvalResult, IdentityId, IdentityReport, Kernel, Method, ResidueReport,
};

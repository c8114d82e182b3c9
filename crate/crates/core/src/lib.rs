//! Exact finite q-multiple harmonic sums at roots of unity.
//!
//! For `n >= 2` and an index string `s = (s_1, ..., s_m)` of nonzero integers,
//!
//! ```text
//! Z_n(s) = sum_{1 <= i_1 < ... < i_m <= n-1} prod_j (1 - zeta_n^{i_j})^{-s_j}
//! ```
//!
//! is an element of the cyclotomic field Q(zeta_n). This crate evaluates such
//! sums exactly, together with their permutation-symmetrized versions, and
//! checks a catalogue of closed-form identities for them by exact comparison.
//!
//! ```
//! use qmhs::sums::{y_dp, z_dp};
//!
//! let z = z_dp(5, &"1,1".parse().unwrap()).unwrap();
//! assert_eq!(z.as_rational().unwrap().to_string(), "2");
//! let y = y_dp(4, &"2:1,1:1".parse().unwrap()).unwrap();
//! assert_eq!(y.as_rational().unwrap().to_string(), "3/4");
//! ```
//!
//! ## Examples
//!
//! - **`cyclotomic_arithmetic`** - field elements, inverses, the unit factors `u_r`
//! - **`harmonic_sums`** - `Z_n` by dynamic program and by enumeration
//! - **`symmetrized_sums`** - `Y_n` over multiset indices
//! - **`closed_forms`** - rational right-hand sides against the sums
//! - **`verify_identity`** - single exact identity checks
//! - **`sweep_report`** - domain sweeps and JSON/CSV/table reports
//! - **`float_embedding`** - complex approximations at chosen precision
//!
//! ```bash
//! cargo run -p qmhs --example harmonic_sums
//! ```

pub mod arith;
pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod identities;
pub mod report;
pub mod sums;

pub use arith::{CyclotomicField, CyclotomicNumber, Rational};
pub use error::{Error, Result};
pub use identities::{CheckReport, IdentityId, Param, Params, Status};
pub use sums::{Composition, MultisetIndex, UnitTable};

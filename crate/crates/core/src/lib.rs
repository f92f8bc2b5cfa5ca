//! Hamilton quaternions and their representations.
//!
//! The crate covers the algebra itself ([`Quaternion`]), a small complex
//! number type used by the planar forms ([`Complex`]), conversions between
//! vector, symplectic pair, 2x2 complex matrix, trigonometric, exponential,
//! complex-angle (`Cjs`), logarithmic and spherical forms ([`forms`]),
//! integer powers by several closed formulas ([`powers`]), a sampling
//! auditor for algebraic identities ([`audit`]), numerical regularity checks
//! for quaternion functions ([`calculus`]) and an expression language
//! ([`expr`]). The [`cli`] module backs the `quatforms` binary.
//!
//! ```
//! use quatforms::{expr, Quaternion};
//!
//! let q = expr::eval_str("(1+i)*(1+j)").unwrap();
//! assert_eq!(q, Quaternion::new(1.0, 1.0, 1.0, 1.0));
//! assert_eq!(q.to_string(), "1 + 1i + 1j + 1k");
//! ```

pub mod audit;
pub mod calculus;
pub mod cli;
pub mod complex;
pub mod error;
pub mod expr;
pub mod format;
pub mod forms;
pub mod powers;
pub mod quaternion;

pub use complex::Complex;
pub use error::{Error, Result};
pub use expr::Expr;
pub use forms::{CjsForm, FormKind, MatrixForm, TrigForm};
pub use powers::PowMethod;
pub use quaternion::{ComplexPair, Quaternion};

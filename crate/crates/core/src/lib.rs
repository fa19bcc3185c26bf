//! Partial r-Bell polynomials in three Hopf algebras of bicolored objects:
//! bisymmetric functions (`Sym2`, power sums `p`), noncommutative bisymmetric
//! functions (`NCSF2`, `Psi`) and 2-colored word symmetric functions
//! (`WSym2`, `Phi` indexed by colored set partitions).
//!
//! All arithmetic is exact over `BigRational`.
//!
//! - [`partition`]: colored partitions, compositions and set partitions; the
//!   family indexing `B^r`, its shape counts and r-Stirling numbers.
//! - [`hopf`]: elements of the three algebras with product, coproduct,
//!   counit, antipode and the shape maps `Ξ`, `ξ`.
//! - [`operator`]: words in the shift `D` and right multiplication `B` by
//!   `b_1`, their action, and the operators `c(n,k)`.
//! - [`series`]: truncated series in `x`, `y`, `t` with element or operator
//!   coefficients.
//! - [`bell`]: `B^r` by the operator and enumeration routes, and the
//!   generating series built from them.
//! - [`zassenhaus`]: an independent order-by-order solution for the factors
//!   of `exp(x(tB + D))`.
//! - [`verify`]: exact identity checks returning [`verify::VerificationReport`].
//! - [`render`]: text and LaTeX output.
//!
//! ```
//! use bellhopf::bell::{bell, BellQuery};
//! use bellhopf::hopf::AlgebraId;
//!
//! let b = bell(BellQuery::new(AlgebraId::Sym2, 0, 3, 2));
//! assert_eq!(b.to_string(), "3*p{(1,2),(2,2)}");
//! ```

pub mod bell;
pub mod error;
pub mod hopf;
pub mod linear;
pub mod operator;
pub mod partition;
pub mod render;
pub mod scalar;
pub mod series;
pub mod verify;
pub mod zassenhaus;

pub use error::{Error, Result};

//! Twist enumeration and Hasse-principle screening for superelliptic curves.
//!
//! The library models curves `C : y^n = f(x)` with `f ∈ ℤ[x]` squarefree of
//! degree ≥ 3, and their degree-`n` twists `C_d : d·y^n = f(x)` for n-th-power-free
//! integers `d`. It decides local solvability of `C_d` at the real place and at
//! every prime (exactly, via valuation trees and Hensel lifting), searches for
//! rational points up to a height bound, and classifies whole twist families,
//! reporting everywhere-locally-solvable twists with no point found as candidate
//! Hasse-principle violations.
//!
//! Modules mirror the pipeline:
//!
//! * [`poly`] — exact integer polynomials: discriminants, rational roots, roots
//!   and factor-degree partitions mod ℓ, n-th-power-free parts.
//! * [`padic`] — ℓ-adic valuations, n-th-power tests in ℚ_ℓ*, Hensel lifting,
//!   and power-class congruence descriptions.
//! * [`curve`] — curve and twist models, genus, branch points, fixed-point
//!   verdicts.
//! * [`local`] — per-place solvability and the everywhere-locally-solvable check.
//! * [`sieve`] — power-free sieves, split-prime sets, product twist families,
//!   admissible congruences.
//! * [`search`] — bounded rational point search and height-exponent data.
//! * [`classify`] — twist family classification, density profiles, the
//!   unconditional quadratic-subtwist family.
//! * [`report`] — JSON/CSV report emission.

pub mod arith;
pub mod classify;
pub mod curve;
pub mod error;
pub mod fp;
pub mod local;
pub mod padic;
pub mod poly;
pub mod report;
pub mod search;
pub mod sieve;

pub use curve::{FixedPointVerdict, SuperellipticCurve, TwistClass};
pub use error::{Error, Result};
pub use poly::IntPoly;

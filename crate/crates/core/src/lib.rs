//! Exact computation with n-ary Nambu-Lie superalgebras.
//!
//! Everything here runs over the rationals with arbitrary-precision
//! arithmetic; no rounding ever occurs. The main pieces:
//!
//! - [`rational`] / [`linalg`]: the exact sparse linear-algebra kernel
//!   (nullspace, rank, span membership) that every solver reduces to.
//! - [`algebra`]: ℤ₂-graded n-ary brackets, Koszul sign bookkeeping,
//!   derivations, inner derivations, the supercommutator and twists.
//! - [`checks`]: sample-based verification of the defining identities
//!   (Nambu identity, skew-symmetry, morphism/derivation laws).
//! - [`wedge`]: the fundamental set Λ^{n-1}N with its induced Leibniz
//!   bracket, representations, and the induced module of wedge chains.
//! - [`cochain`] / [`coboundary`]: k-cochains and the three coboundary
//!   operators (the Nambu complex, the Leibniz complex, and the
//!   comparison map between them).
//! - [`window`]: finite index windows that truncate infinite-dimensional
//!   cocycle problems to exact finite linear algebra.
//! - [`extension`] / [`deform`]: central extensions from 2-cocycles and
//!   order-by-order formal deformation checking.
//! - [`w_infinity`]: the closed-form super w-infinity 3-algebra backend
//!   with its derivation solver and 2-cocycle trivializers.

pub mod algebra;
pub mod checks;
pub mod coboundary;
pub mod cochain;
pub mod deform;
pub mod element;
pub mod extension;
pub mod generator;
pub mod json;
pub mod linalg;
pub mod parity;
pub mod rational;
pub mod rep;
pub mod sample;
pub mod wedge;
pub mod window;
pub mod w_infinity;

pub use element::Element;
pub use generator::{GenId, VGen};
pub use parity::Parity;
pub use rational::Rational;

//! Character varieties and representation varieties in `SL(2,C)` of the
//! one-relator groups `G = <x, y | x^m = y^n>`.
//!
//! The character variety is described in the trace coordinates
//! `X = tr A`, `Y = tr B`, `Z = tr AB`. It splits into a family of straight
//! lines (images of irreducible representations) and a finite set of abelian
//! curves `C_{zeta^i}`. This crate builds every piece of that description
//! exactly:
//!
//! * [`unipoly`]: Chebyshev-like families `f_k, h_k, s_k, sigma_k` and their
//!   cyclotomic factorizations.
//! * [`tripoly`]: sparse integer polynomials in `X, Y, Z`, the trace
//!   polynomials `F_{a,b}` and the commutator polynomial `D`.
//! * [`traceword`]: reduction of the trace of any word in two matrices to a
//!   polynomial, with a floating-point matrix oracle.
//! * [`variety`]: ideal generators, line and component enumeration with
//!   exact roots of unity, intersection matrices, the mirror map and the
//!   polynomial identity suite.
//! * [`recover`]: reconstruction of `(m, n)` from an intersection matrix.
//! * [`repvar`]: component counts and labels of the representation variety.
//! * [`cli`]: the command-line front end used by the `charvar` binary.

pub mod cli;
pub mod error;
pub mod recover;
pub mod repvar;
pub mod traceword;
pub mod tripoly;
pub mod unipoly;
pub mod variety;

pub use error::{Error, Result};
pub use traceword::{Gen, Mat2, Word};
pub use tripoly::TriPoly;
pub use unipoly::UniPoly;
pub use variety::{ComponentId, Line, LineFamily, TraceCoord, UnitRational, VarietyReport};

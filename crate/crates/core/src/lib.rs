//! Exact q-Bernoulli and q-Euler polynomials of integer order.
//!
//! The crate computes the bivariate polynomials `B_n^(alpha)(x, y; q)` and
//! `E_n^(alpha)(x, y; q)` from their generating functions over exact
//! rationals, together with q-Stirling numbers, q-Bernstein basis
//! polynomials and the classical (`q -> 1`) families, and checks a catalogue
//! of identities between them by computing exact polynomial residuals.
//!
//! Layers, bottom up:
//!
//! - [`rational`]: the scalar type and its `"p/q"` text form
//! - [`qcore`]: q-integers, q-factorials, Gaussian binomials
//! - [`poly`]: sparse polynomials in `x`, `y`, Jackson derivative
//! - [`series`]: truncated power series with polynomial coefficients
//! - [`qspecial`]: the polynomial and number families
//! - [`identities`]: residual checkers over parameter grids
//! - [`limit`]: numeric `q -> 1` studies
//! - [`cli`]: the `qbe` front end and its JSON/CSV/LaTeX output

pub mod cli;
pub mod error;
pub mod identities;
pub mod limit;
pub mod poly;
pub mod qcore;
pub mod qspecial;
pub mod rational;
pub mod series;

pub use error::{Error, Result};
pub use poly::{Poly2, Substitution, Var};
pub use qcore::{Deformation, QParam};
pub use qspecial::{Family, FamilySpec, PolyTable};
pub use rational::Rational;
pub use series::Series;

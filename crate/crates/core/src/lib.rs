//! Laplace, two-sided Laplace and Mellin transforms over Cayley-Dickson
//! algebras, with numerical forward evaluation, inversion, a verified
//! catalog of transform pairs and operational rules, and an
//! operational-calculus solver for constant-coefficient ODEs.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod error;
pub mod inversion;
pub mod kernel;
pub mod ode;
pub mod quadrature;
pub mod poly;
pub mod special;
pub mod transforms;

pub use algebra::{parse_literal, CDNumber, PolarForm};
pub use error::{Error, Result};
pub use kernel::{KernelSpec, KernelVariant};
pub use quadrature::{IntegrandProfile, QuadratureResult};

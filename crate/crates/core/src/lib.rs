//! Embedded resolution of plane curve germs over the rationals and the
//! local topological zeta functions computed from it.

pub mod algebra;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod germ;
pub mod hodge;
pub mod resolution;
pub mod surface;
pub mod suites;
pub mod suspension;
pub mod zeta;

pub use error::{Error, Result};

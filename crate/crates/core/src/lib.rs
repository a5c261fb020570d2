pub mod dilworth;
pub mod error;
pub mod flow;
pub mod geometry;
pub mod grassmann;
pub mod io;
pub mod linalg;
pub mod polytope;
pub mod poset;
pub mod qpoly;
pub mod rep;
pub mod verify;

pub use error::{Error, Result};
pub use polytope::{DecompositionCert, IntPoint, Method, Params};
pub use poset::{Antichain, Chain, Poset};
pub use qpoly::QPolynomial;

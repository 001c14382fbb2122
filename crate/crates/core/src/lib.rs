//! Generalized quasi-cyclic codes over the chain ring R = F_q + uF_q.

pub mod analysis;
pub mod cli;
pub mod codes;
pub mod error;
pub mod gf;
pub mod onegen;
pub mod poly;
pub mod qc;
pub mod rring;

pub use error::{Error, Result};
pub use gf::{FElem, Field};
pub use poly::{FqPoly, RPoly};
pub use rring::{RElem, Ring};

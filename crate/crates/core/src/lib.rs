//! Exact computations on smooth toric varieties given by simplicial fans:
//! lattice algebra, cone geometry, fan combinatorics, Cox degrees, polynomial
//! models of based holomorphic maps and their stability ranges.

pub mod catalog;
pub mod cli;
pub mod cone;
pub mod cox;
pub mod document;
pub mod error;
pub mod fan;
pub mod holmap;
pub mod lattice;
pub mod par;
pub mod stability;

pub use error::{Error, Result};

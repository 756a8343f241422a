pub mod error;
pub mod field;
pub mod groebner;
pub mod io;
pub mod linalg;
pub mod poly;
pub mod realize;
pub mod ring;
pub mod support;
pub mod cli;
pub mod complexes;
pub mod operators;
pub mod vector;

pub use error::{Error, Result};

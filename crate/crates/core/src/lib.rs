//! Exact structure-constant engine for Hopf algebroids, their measurings,
//! and Hopf-cyclic (co)homology, with Lie-Rinehart and operadic layers.

pub mod exactlin;
pub mod hopfalgebroid;
pub mod measuring;
pub mod cyclichom;
pub mod lierinehart;
pub mod operadcyc;
pub mod scenario;
pub mod algcore;
pub mod error;

pub use error::{Error, Result};

//! Thick subcategories of finite triangulated categories of Dynkin type,
//! classified through noncrossing partitions and checked against a
//! translation-quiver model.

pub mod classifier;
pub mod cli;
pub mod derived;
pub mod error;
pub mod matrix;
pub mod ncp;
pub mod render;
pub mod report;
pub mod root_coxeter;
pub mod verify;

pub use error::{Error, Result};

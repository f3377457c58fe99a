//! Exact character tables of finite permutation groups.

pub mod chartable;
pub mod cyclotomic;
pub mod error;
pub mod families;
pub mod permgroup;
pub mod theorems;

pub use error::{Error, Result};

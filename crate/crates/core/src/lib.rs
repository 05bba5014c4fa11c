//! Exact Hochschild and cyclic cohomology of finite-dimensional dgas and
//! small dg-categories over the rationals.

pub mod catalog;
pub mod chain;
pub mod complex;
pub mod cyclic;
pub mod dga;
pub mod dgcat;
pub mod format;
pub mod hochschild;
pub mod linalg;
pub mod par;
pub mod presentation;
pub mod spectral;

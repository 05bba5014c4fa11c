//! Loading inputs (files or builtin names) and the cell-size guard.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use serde::Serialize;
use sha2::{Digest, Sha256};

use dgcyc::catalog;
use dgcyc::chain::{ChainAlgebra, Cochains};
use dgcyc::dga::{validate_dga, Dga, Diagnostic};
use dgcyc::dgcat::{cat_cochains, validate_category, DgCategory};
use dgcyc::format::{parse, ParseError};
use dgcyc::hochschild::{cochains_of, oversized_cell};
use dgcyc::presentation::Presentation;

/// An error that maps to exit code 2.
#[derive(Debug)]
pub enum InputError {
    NotFound(String),
    Io(String, std::io::Error),
    Parse(String, ParseError),
    Invalid(String, Vec<Diagnostic>),
    WrongKind(String),
    TooLarge { k: usize, r: usize, dim: u128, bound: u128 },
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::NotFound(s) => write!(
                f,
                "`{s}` is neither a readable file nor a builtin (see `dgcyc catalog`)"
            ),
            InputError::Io(s, e) => write!(f, "{s}: {e}"),
            InputError::Parse(s, e) => write!(f, "{s}: {e}"),
            InputError::Invalid(s, diags) => {
                write!(f, "{s} is not a valid presentation:")?;
                for d in diags {
                    write!(f, "\n  [{}] {d}", d.family())?;
                }
                Ok(())
            }
            InputError::WrongKind(msg) => f.write_str(msg),
            InputError::TooLarge { k, r, dim, bound } => write!(
                f,
                "refusing to build C^{k}_{r} with {dim} basis functionals (bound {bound}); \
                 lower the degree options or raise --max-cell"
            ),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputInfo {
    pub name: String,
    pub origin: &'static str,
    pub sha256: String,
}

pub struct Input {
    pub info: InputInfo,
    pub presentation: Presentation,
}

pub fn load(arg: &str) -> Result<Input, InputError> {
    let (source, origin) = if Path::new(arg).is_file() {
        let bytes = std::fs::read(arg).map_err(|e| InputError::Io(arg.to_string(), e))?;
        let text = String::from_utf8(bytes)
            .map_err(|e| InputError::Io(arg.to_string(), std::io::Error::new(std::io::ErrorKind::InvalidData, e)))?;
        (text, "file")
    } else if let Some(e) = catalog::entry(arg) {
        (e.source.to_string(), "builtin")
    } else {
        return Err(InputError::NotFound(arg.to_string()));
    };
    let presentation = parse(&source).map_err(|e| InputError::Parse(arg.to_string(), e))?;
    let sha256 = Sha256::digest(source.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect();
    Ok(Input {
        info: InputInfo {
            name: presentation.name().to_string(),
            origin,
            sha256,
        },
        presentation,
    })
}

impl Input {
    pub fn dga(&self) -> Result<Dga, InputError> {
        match &self.presentation {
            Presentation::Algebra(p) => validate_dga(p).map_err(|d| InputError::Invalid(self.info.name.clone(), d)),
            Presentation::Category(_) => Err(InputError::WrongKind(format!(
                "{} is a dg-category; use the cat-* commands",
                self.info.name
            ))),
        }
    }

    /// The input as a dg-category; a dga becomes a one-object category.
    pub fn category(&self) -> Result<DgCategory, InputError> {
        match &self.presentation {
            Presentation::Algebra(_) => Ok(DgCategory::from_dga(&self.dga()?)),
            Presentation::Category(p) => {
                validate_category(p).map_err(|d| InputError::Invalid(self.info.name.clone(), d))
            }
        }
    }
}

/// Refuses when some `C^k_r` with `k ≤ k_max`, `r ≤ r_max` and
/// `k + r ≤ total` exceeds `bound`.
pub fn guard(a: &dyn ChainAlgebra, k_max: usize, r_max: usize, total: usize, bound: u128) -> Result<(), InputError> {
    match oversized_cell(a, k_max, r_max, total, bound) {
        Some((k, r, dim)) => Err(InputError::TooLarge { k, r, dim, bound }),
        None => Ok(()),
    }
}

pub fn guarded_cochains(a: &Dga, total: usize, bound: u128) -> Result<Arc<Cochains>, InputError> {
    guard(a, total, total, total, bound)?;
    Ok(cochains_of(a))
}

pub fn guarded_cat_cochains(c: &DgCategory, total: usize, bound: u128) -> Result<Arc<Cochains>, InputError> {
    guard(c, total, total, total, bound)?;
    Ok(cat_cochains(c))
}

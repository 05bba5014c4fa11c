//! Raw, unvalidated presentations of dgas and dg-categories.
//!
//! These are what the text format parses into and what the validators
//! consume. Labels are plain strings; nothing is checked here.

use crate::linalg::Rat;

/// A linear combination of labelled basis elements.
pub type Terms = Vec<(Rat, String)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub terms: Terms,
    /// Source line, when parsed from text.
    pub line: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffEntry {
    pub source: String,
    pub terms: Terms,
    pub line: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgaPresentation {
    pub name: String,
    /// Basis labels with degrees, in declaration order.
    pub basis: Vec<(String, usize)>,
    pub unit: String,
    /// Products; unlisted ones are zero, except that products with the unit
    /// default to the unit law.
    pub mult: Vec<ProductEntry>,
    pub diff: Vec<DiffEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomDecl {
    pub source: String,
    pub target: String,
    pub basis: Vec<(String, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryPresentation {
    pub name: String,
    /// Objects with the label of their identity morphism.
    pub objects: Vec<(String, String)>,
    pub homs: Vec<HomDecl>,
    /// Diagrammatic composition: `f*g` is "f, then g".
    pub compose: Vec<ProductEntry>,
    pub diff: Vec<DiffEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Presentation {
    Algebra(DgaPresentation),
    Category(CategoryPresentation),
}

impl Presentation {
    pub fn name(&self) -> &str {
        match self {
            Presentation::Algebra(p) => &p.name,
            Presentation::Category(p) => &p.name,
        }
    }
}

impl DgaPresentation {
    /// Builds a presentation from string tables; a convenience for tests
    /// and the builtin catalog.
    pub fn new(name: &str, basis: &[(&str, usize)], unit: &str) -> Self {
        DgaPresentation {
            name: name.to_string(),
            basis: basis.iter().map(|(l, d)| (l.to_string(), *d)).collect(),
            unit: unit.to_string(),
            mult: Vec::new(),
            diff: Vec::new(),
        }
    }

    pub fn product(mut self, left: &str, right: &str, terms: &[(Rat, &str)]) -> Self {
        self.mult.push(ProductEntry {
            left: left.to_string(),
            right: right.to_string(),
            terms: terms.iter().map(|(c, l)| (c.clone(), l.to_string())).collect(),
            line: None,
        });
        self
    }

    pub fn differential(mut self, source: &str, terms: &[(Rat, &str)]) -> Self {
        self.diff.push(DiffEntry {
            source: source.to_string(),
            terms: terms.iter().map(|(c, l)| (c.clone(), l.to_string())).collect(),
            line: None,
        });
        self
    }
}

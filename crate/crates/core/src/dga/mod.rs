//! Finite-dimensional differential graded algebras.
//!
//! Degrees are non-negative and the differential `φ` lowers degree by one,
//! so `φ: A_q → A_{q-1}` and the Leibniz rule reads
//! `φ(ab) = φ(a)b + (-1)^{|a|} a φ(b)`.

pub mod bimodule;
pub mod delta;
pub mod random;
pub mod tensor;

use std::collections::HashMap;
use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::chain::ChainAlgebra;
use crate::linalg::matrix::{axpby, normalize_row};
use crate::linalg::{sign, Rat, RatMatrix, SparseRow};
use crate::presentation::{DgaPresentation, Terms};

/// Which axiom a diagnostic belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AxiomFamily {
    Presentation,
    Degree,
    Unit,
    Associativity,
    Leibniz,
    DiffSquare,
    Composability,
}

impl fmt::Display for AxiomFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            AxiomFamily::Presentation => "presentation",
            AxiomFamily::Degree => "degree",
            AxiomFamily::Unit => "unit",
            AxiomFamily::Associativity => "associativity",
            AxiomFamily::Leibniz => "leibniz",
            AxiomFamily::DiffSquare => "differential-square",
            AxiomFamily::Composability => "composability",
        };
        f.write_str(s)
    }
}

/// One violated axiom, naming the offending basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Diagnostic {
    UnknownLabel {
        label: String,
        line: Option<usize>,
    },
    DuplicateLabel {
        label: String,
    },
    DuplicateEntry {
        what: String,
        line: Option<usize>,
    },
    MissingUnit,
    UnitDegree {
        unit: String,
        degree: usize,
    },
    UnitLeft {
        element: String,
    },
    UnitRight {
        element: String,
    },
    UnitNotCocycle,
    MultDegree {
        left: String,
        right: String,
        term: String,
    },
    DiffDegree {
        source: String,
        term: String,
    },
    NonAssociative {
        a: String,
        b: String,
        c: String,
    },
    Leibniz {
        a: String,
        b: String,
    },
    DiffSquare {
        element: String,
    },
    /// A composite or differential leaves the hom space it must land in.
    WrongHom {
        what: String,
        term: String,
    },
}

impl Diagnostic {
    pub fn family(&self) -> AxiomFamily {
        use Diagnostic::*;
        match self {
            UnknownLabel { .. } | DuplicateLabel { .. } | DuplicateEntry { .. } | MissingUnit => {
                AxiomFamily::Presentation
            }
            UnitDegree { .. } | UnitLeft { .. } | UnitRight { .. } | UnitNotCocycle => AxiomFamily::Unit,
            MultDegree { .. } | DiffDegree { .. } => AxiomFamily::Degree,
            NonAssociative { .. } => AxiomFamily::Associativity,
            Leibniz { .. } => AxiomFamily::Leibniz,
            DiffSquare { .. } => AxiomFamily::DiffSquare,
            WrongHom { .. } => AxiomFamily::Composability,
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Diagnostic::*;
        let at = |line: &Option<usize>| line.map(|l| format!(" (line {l})")).unwrap_or_default();
        match self {
            UnknownLabel { label, line } => write!(f, "unknown label `{label}`{}", at(line)),
            DuplicateLabel { label } => write!(f, "label `{label}` declared twice"),
            DuplicateEntry { what, line } => write!(f, "duplicate entry for {what}{}", at(line)),
            MissingUnit => write!(f, "no unit declared"),
            UnitDegree { unit, degree } => write!(f, "unit `{unit}` has degree {degree}, not 0"),
            UnitLeft { element } => write!(f, "1*{element} != {element}"),
            UnitRight { element } => write!(f, "{element}*1 != {element}"),
            UnitNotCocycle => write!(f, "the unit is not a cocycle"),
            MultDegree { left, right, term } => {
                write!(f, "{left}*{right} has a term `{term}` of the wrong degree")
            }
            DiffDegree { source, term } => {
                write!(f, "d({source}) has a term `{term}` not of degree |{source}|-1")
            }
            NonAssociative { a, b, c } => write!(f, "({a}*{b})*{c} != {a}*({b}*{c})"),
            Leibniz { a, b } => write!(f, "Leibniz rule fails for d({a}*{b})"),
            DiffSquare { element } => write!(f, "d(d({element})) != 0"),
            WrongHom { what, term } => write!(f, "{what} has a term `{term}` in the wrong hom"),
        }
    }
}

/// A validated dga. The basis is ordered by degree, then declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dga {
    name: String,
    labels: Vec<String>,
    degrees: Vec<usize>,
    unit: usize,
    /// `mult[i * dim + j]` is `e_i e_j`.
    mult: Vec<SparseRow>,
    diff: Vec<SparseRow>,
}

impl Dga {
    /// Assembles a dga from structure constants without checking axioms.
    /// Unlisted products are zero; the unit law is *not* filled in.
    pub fn from_parts(
        name: &str,
        labels: Vec<String>,
        degrees: Vec<usize>,
        unit: usize,
        products: Vec<((usize, usize), SparseRow)>,
        diff: Vec<(usize, SparseRow)>,
    ) -> Dga {
        let n = labels.len();
        assert_eq!(degrees.len(), n);
        let mut mult = vec![Vec::new(); n * n];
        for ((i, j), v) in products {
            mult[i * n + j] = normalize_row(v);
        }
        let mut d = vec![Vec::new(); n];
        for (i, v) in diff {
            d[i] = normalize_row(v);
        }
        Dga {
            name: name.to_string(),
            labels,
            degrees,
            unit,
            mult,
            diff: d,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Dga {
        self.name = name.to_string();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn top_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }

    pub fn dim_by_degree(&self) -> Vec<usize> {
        let mut out = vec![0; self.top_degree() + 1];
        for &d in &self.degrees {
            out[d] += 1;
        }
        out
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn product_basis(&self, i: usize, j: usize) -> &SparseRow {
        &self.mult[i * self.dim() + j]
    }

    pub fn diff_basis(&self, i: usize) -> &SparseRow {
        &self.diff[i]
    }

    pub fn is_formal_zero_diff(&self) -> bool {
        self.diff.iter().all(Vec::is_empty)
    }

    /// Bilinear product of two elements.
    pub fn multiply(&self, u: &SparseRow, v: &SparseRow) -> SparseRow {
        let mut acc: SparseRow = Vec::new();
        for (i, a) in u {
            for (j, b) in v {
                let ab = a * b;
                acc = axpby(&Rat::one(), &acc, &ab, self.product_basis(*i, *j));
            }
        }
        acc
    }

    pub fn apply_diff(&self, u: &SparseRow) -> SparseRow {
        let mut acc: SparseRow = Vec::new();
        for (i, a) in u {
            acc = axpby(&Rat::one(), &acc, a, &self.diff[*i]);
        }
        acc
    }

    pub fn basis_vector(&self, i: usize) -> SparseRow {
        vec![(i, Rat::one())]
    }

    /// Matrix of `φ` on the whole algebra (columns are sources).
    pub fn diff_matrix(&self) -> RatMatrix {
        let cols: Vec<SparseRow> = self.diff.clone();
        RatMatrix::from_columns(self.dim(), &cols)
    }

    /// Checks every axiom and returns all violations.
    pub fn check(&self) -> Vec<Diagnostic> {
        let mut out = Vec::new();
        let n = self.dim();
        let l = |i: usize| self.labels[i].clone();
        if self.degrees[self.unit] != 0 {
            out.push(Diagnostic::UnitDegree {
                unit: l(self.unit),
                degree: self.degrees[self.unit],
            });
        }
        for i in 0..n {
            for j in 0..n {
                for (k, _) in self.product_basis(i, j) {
                    if self.degrees[*k] != self.degrees[i] + self.degrees[j] {
                        out.push(Diagnostic::MultDegree {
                            left: l(i),
                            right: l(j),
                            term: l(*k),
                        });
                    }
                }
            }
            for (k, _) in &self.diff[i] {
                if self.degrees[*k] + 1 != self.degrees[i] {
                    out.push(Diagnostic::DiffDegree {
                        source: l(i),
                        term: l(*k),
                    });
                }
            }
        }
        if !self.diff[self.unit].is_empty() {
            out.push(Diagnostic::UnitNotCocycle);
        }
        for i in 0..n {
            let e = self.basis_vector(i);
            if self.product_basis(self.unit, i) != &e {
                out.push(Diagnostic::UnitLeft { element: l(i) });
            }
            if self.product_basis(i, self.unit) != &e {
                out.push(Diagnostic::UnitRight { element: l(i) });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.product_basis(i, j);
                for k in 0..n {
                    let left = self.multiply(ij, &self.basis_vector(k));
                    let right = self.multiply(&self.basis_vector(i), self.product_basis(j, k));
                    if left != right {
                        out.push(Diagnostic::NonAssociative {
                            a: l(i),
                            b: l(j),
                            c: l(k),
                        });
                    }
                }
            }
        }
        for i in 0..n {
            let ei = self.basis_vector(i);
            for j in 0..n {
                let ej = self.basis_vector(j);
                let lhs = self.apply_diff(self.product_basis(i, j));
                let t1 = self.multiply(&self.diff[i], &ej);
                let t2 = self.multiply(&ei, &self.diff[j]);
                let rhs = axpby(&Rat::one(), &t1, &sign(self.degrees[i]), &t2);
                if lhs != rhs {
                    out.push(Diagnostic::Leibniz { a: l(i), b: l(j) });
                }
            }
        }
        for i in 0..n {
            if !self.apply_diff(&self.diff[i]).is_empty() {
                out.push(Diagnostic::DiffSquare { element: l(i) });
            }
        }
        out
    }

    /// The degree-zero subalgebra, with zero differential.
    pub fn degree_zero_part(&self) -> Dga {
        let keep: Vec<usize> = (0..self.dim()).filter(|&i| self.degrees[i] == 0).collect();
        let mut map = vec![usize::MAX; self.dim()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = new;
        }
        let mut products = Vec::new();
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                let v: SparseRow = self
                    .product_basis(i, j)
                    .iter()
                    .map(|(k, c)| (map[*k], c.clone()))
                    .collect();
                products.push(((a, b), v));
            }
        }
        Dga::from_parts(
            &format!("{}_deg0", self.name),
            keep.iter().map(|&i| self.labels[i].clone()).collect(),
            vec![0; keep.len()],
            map[self.unit],
            products,
            Vec::new(),
        )
    }

    /// Writes the dga back as a presentation, listing every nonzero product.
    pub fn to_presentation(&self) -> DgaPresentation {
        let terms = |v: &SparseRow| -> Terms { v.iter().map(|(k, c)| (c.clone(), self.labels[*k].clone())).collect() };
        let n = self.dim();
        let mut p = DgaPresentation {
            name: self.name.clone(),
            basis: (0..n).map(|i| (self.labels[i].clone(), self.degrees[i])).collect(),
            unit: self.labels[self.unit].clone(),
            mult: Vec::new(),
            diff: Vec::new(),
        };
        for i in 0..n {
            for j in 0..n {
                if i == self.unit || j == self.unit {
                    continue;
                }
                let v = self.product_basis(i, j);
                if !v.is_empty() {
                    p.mult.push(crate::presentation::ProductEntry {
                        left: self.labels[i].clone(),
                        right: self.labels[j].clone(),
                        terms: terms(v),
                        line: None,
                    });
                }
            }
            if !self.diff[i].is_empty() {
                p.diff.push(crate::presentation::DiffEntry {
                    source: self.labels[i].clone(),
                    terms: terms(&self.diff[i]),
                    line: None,
                });
            }
        }
        p
    }
}

impl ChainAlgebra for Dga {
    fn dim(&self) -> usize {
        self.labels.len()
    }
    fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }
    fn max_degree(&self) -> usize {
        self.top_degree()
    }
    fn objects(&self) -> usize {
        1
    }
    fn source(&self, _i: usize) -> usize {
        0
    }
    fn target(&self, _i: usize) -> usize {
        0
    }
    fn identity(&self, _object: usize) -> usize {
        self.unit
    }
    fn product(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        self.product_basis(i, j)
    }
    fn diff(&self, i: usize) -> &[(usize, Rat)] {
        &self.diff[i]
    }
    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }
}

/// Resolves labels and records presentation-level problems.
pub(crate) struct LabelTable {
    index: HashMap<String, usize>,
}

impl LabelTable {
    pub(crate) fn new(labels: &[String], diags: &mut Vec<Diagnostic>) -> Self {
        let mut index = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                diags.push(Diagnostic::DuplicateLabel { label: l.clone() });
            }
        }
        LabelTable { index }
    }

    pub(crate) fn get(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub(crate) fn resolve(&self, label: &str, line: Option<usize>, diags: &mut Vec<Diagnostic>) -> Option<usize> {
        let r = self.get(label);
        if r.is_none() {
            diags.push(Diagnostic::UnknownLabel {
                label: label.to_string(),
                line,
            });
        }
        r
    }

    pub(crate) fn terms(&self, terms: &Terms, line: Option<usize>, diags: &mut Vec<Diagnostic>) -> Option<SparseRow> {
        let mut out = Vec::new();
        let mut ok = true;
        for (c, l) in terms {
            match self.resolve(l, line, diags) {
                Some(i) => out.push((i, c.clone())),
                None => ok = false,
            }
        }
        ok.then(|| normalize_row(out))
    }
}

/// Validates a presentation into a [`Dga`], or returns every violated axiom.
pub fn validate_dga(p: &DgaPresentation) -> Result<Dga, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    // Degree-major, declaration order within a degree.
    let mut order: Vec<usize> = (0..p.basis.len()).collect();
    order.sort_by_key(|&i| (p.basis[i].1, i));
    let labels: Vec<String> = order.iter().map(|&i| p.basis[i].0.clone()).collect();
    let degrees: Vec<usize> = order.iter().map(|&i| p.basis[i].1).collect();
    let table = LabelTable::new(&labels, &mut diags);
    let unit = match table.get(&p.unit) {
        Some(u) => Some(u),
        None => {
            diags.push(Diagnostic::MissingUnit);
            None
        }
    };
    let n = labels.len();
    let mut products: HashMap<(usize, usize), SparseRow> = HashMap::new();
    for e in &p.mult {
        let l = table.resolve(&e.left, e.line, &mut diags);
        let r = table.resolve(&e.right, e.line, &mut diags);
        let t = table.terms(&e.terms, e.line, &mut diags);
        if let (Some(l), Some(r), Some(t)) = (l, r, t) {
            if products.insert((l, r), t).is_some() {
                diags.push(Diagnostic::DuplicateEntry {
                    what: format!("{}*{}", e.left, e.right),
                    line: e.line,
                });
            }
        }
    }
    let mut diff: HashMap<usize, SparseRow> = HashMap::new();
    for e in &p.diff {
        let s = table.resolve(&e.source, e.line, &mut diags);
        let t = table.terms(&e.terms, e.line, &mut diags);
        if let (Some(s), Some(t)) = (s, t) {
            if diff.insert(s, t).is_some() {
                diags.push(Diagnostic::DuplicateEntry {
                    what: format!("d({})", e.source),
                    line: e.line,
                });
            }
        }
    }
    let Some(unit) = unit else {
        return Err(diags);
    };
    if !diags.is_empty() {
        return Err(diags);
    }
    for i in 0..n {
        products.entry((unit, i)).or_insert_with(|| vec![(i, Rat::one())]);
        products.entry((i, unit)).or_insert_with(|| vec![(i, Rat::one())]);
    }
    let mut products: Vec<_> = products.into_iter().collect();
    products.sort_by_key(|(k, _)| *k);
    let mut diff: Vec<_> = diff.into_iter().collect();
    diff.sort_by_key(|(k, _)| *k);
    let dga = Dga::from_parts(&p.name, labels, degrees, unit, products, diff);
    let diags = dga.check();
    if diags.is_empty() {
        Ok(dga)
    } else {
        Err(diags)
    }
}

use std::collections::HashMap;

use num_traits::One;

use crate::chain::ChainAlgebra;
use crate::dga::{Dga, Diagnostic, LabelTable};
use crate::linalg::matrix::{axpby, normalize_row};
use crate::linalg::{sign, Rat, SparseRow};
use crate::presentation::CategoryPresentation;

/// A small dg-category with finitely many objects and finite-dimensional
/// hom complexes. Morphisms share one global basis, ordered by degree and
/// then declaration order; each basis element lies in a single hom space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgCategory {
    name: String,
    objects: Vec<String>,
    identities: Vec<usize>,
    labels: Vec<String>,
    degrees: Vec<usize>,
    source: Vec<usize>,
    target: Vec<usize>,
    /// `compose[i * dim + j]` is "e_i then e_j"; empty when not composable.
    compose: Vec<SparseRow>,
    diff: Vec<SparseRow>,
}

impl DgCategory {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn hom_basis(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.labels.len())
            .filter(|&i| self.source[i] == x && self.target[i] == y)
            .collect()
    }

    /// Dimension of `𝒜(X, Y)` in each degree.
    pub fn hom_dims(&self, x: usize, y: usize) -> Vec<usize> {
        let mut out = vec![0; ChainAlgebra::max_degree(self) + 1];
        for i in self.hom_basis(x, y) {
            out[self.degrees[i]] += 1;
        }
        out
    }

    /// Dimension of the dual bimodule `𝒟(X, Y) = 𝒜(Y, X)^*` in degree `-j`,
    /// listed by `j`.
    pub fn dual_dims(&self, x: usize, y: usize) -> Vec<usize> {
        self.hom_dims(y, x)
    }

    /// The one-object category of a dga.
    pub fn from_dga(a: &Dga) -> DgCategory {
        let n = a.dim();
        DgCategory {
            name: a.name().to_string(),
            objects: vec!["*".to_string()],
            identities: vec![a.unit()],
            labels: a.labels().to_vec(),
            degrees: a.degrees().to_vec(),
            source: vec![0; n],
            target: vec![0; n],
            compose: (0..n * n).map(|k| a.product_basis(k / n, k % n).clone()).collect(),
            diff: (0..n).map(|i| a.diff_basis(i).clone()).collect(),
        }
    }

    /// Disjoint union: objects side by side, no morphisms between them.
    /// Labels of the second category are suffixed with `'` on collision.
    pub fn disjoint_union(&self, other: &DgCategory) -> DgCategory {
        let (n1, n2) = (self.labels.len(), other.labels.len());
        let o1 = self.objects.len();
        // Keep degree-major order of the global basis.
        let mut order: Vec<(usize, bool, usize)> = (0..n1)
            .map(|i| (self.degrees[i], false, i))
            .chain((0..n2).map(|i| (other.degrees[i], true, i)))
            .collect();
        order.sort();
        let mut map1 = vec![0; n1];
        let mut map2 = vec![0; n2];
        for (new, (_, second, old)) in order.iter().enumerate() {
            if *second {
                map2[*old] = new;
            } else {
                map1[*old] = new;
            }
        }
        let n = n1 + n2;
        let mut labels = vec![String::new(); n];
        let mut degrees = vec![0; n];
        let mut source = vec![0; n];
        let mut target = vec![0; n];
        let mut diff = vec![Vec::new(); n];
        let mut compose = vec![Vec::new(); n * n];
        let remap = |v: &SparseRow, m: &[usize]| -> SparseRow {
            normalize_row(v.iter().map(|(k, c)| (m[*k], c.clone())).collect())
        };
        for i in 0..n1 {
            let k = map1[i];
            labels[k] = self.labels[i].clone();
            degrees[k] = self.degrees[i];
            source[k] = self.source[i];
            target[k] = self.target[i];
            diff[k] = remap(&self.diff[i], &map1);
            for j in 0..n1 {
                compose[k * n + map1[j]] = remap(&self.compose[i * n1 + j], &map1);
            }
        }
        for i in 0..n2 {
            let k = map2[i];
            let mut l = other.labels[i].clone();
            while self.labels.contains(&l) {
                l.push('\'');
            }
            labels[k] = l;
            degrees[k] = other.degrees[i];
            source[k] = other.source[i] + o1;
            target[k] = other.target[i] + o1;
            diff[k] = remap(&other.diff[i], &map2);
            for j in 0..n2 {
                compose[k * n + map2[j]] = remap(&other.compose[i * n2 + j], &map2);
            }
        }
        let mut objects = self.objects.clone();
        for o in &other.objects {
            let mut o = o.clone();
            while objects.contains(&o) {
                o.push('\'');
            }
            objects.push(o);
        }
        let identities = self
            .identities
            .iter()
            .map(|&i| map1[i])
            .chain(other.identities.iter().map(|&i| map2[i]))
            .collect();
        DgCategory {
            name: format!("{}+{}", self.name, other.name),
            objects,
            identities,
            labels,
            degrees,
            source,
            target,
            compose,
            diff,
        }
    }

    fn composable(&self, i: usize, j: usize) -> bool {
        self.target[i] == self.source[j]
    }

    fn comp(&self, u: &SparseRow, v: &SparseRow) -> SparseRow {
        let n = self.labels.len();
        let mut acc = Vec::new();
        for (i, a) in u {
            for (j, b) in v {
                if self.composable(*i, *j) {
                    acc = axpby(&Rat::one(), &acc, &(a * b), &self.compose[i * n + j]);
                }
            }
        }
        acc
    }

    fn d(&self, u: &SparseRow) -> SparseRow {
        let mut acc = Vec::new();
        for (i, a) in u {
            acc = axpby(&Rat::one(), &acc, a, &self.diff[*i]);
        }
        acc
    }

    /// Checks every axiom and returns all violations.
    pub fn check(&self) -> Vec<Diagnostic> {
        let n = self.labels.len();
        let l = |i: usize| self.labels[i].clone();
        let e = |i: usize| vec![(i, Rat::one())];
        let mut out = Vec::new();
        for (x, &id) in self.identities.iter().enumerate() {
            if self.degrees[id] != 0 {
                out.push(Diagnostic::UnitDegree {
                    unit: l(id),
                    degree: self.degrees[id],
                });
            }
            if self.source[id] != x || self.target[id] != x {
                out.push(Diagnostic::WrongHom {
                    what: format!("identity of {}", self.objects[x]),
                    term: l(id),
                });
            }
            if !self.diff[id].is_empty() {
                out.push(Diagnostic::UnitNotCocycle);
            }
        }
        for i in 0..n {
            for j in 0..n {
                let v = &self.compose[i * n + j];
                if !self.composable(i, j) {
                    if !v.is_empty() {
                        out.push(Diagnostic::WrongHom {
                            what: format!("{}*{}", l(i), l(j)),
                            term: l(v[0].0),
                        });
                    }
                    continue;
                }
                for (k, _) in v {
                    if self.source[*k] != self.source[i] || self.target[*k] != self.target[j] {
                        out.push(Diagnostic::WrongHom {
                            what: format!("{}*{}", l(i), l(j)),
                            term: l(*k),
                        });
                    }
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
                if self.source[*k] != self.source[i] || self.target[*k] != self.target[i] {
                    out.push(Diagnostic::WrongHom {
                        what: format!("d({})", l(i)),
                        term: l(*k),
                    });
                }
                if self.degrees[*k] + 1 != self.degrees[i] {
                    out.push(Diagnostic::DiffDegree {
                        source: l(i),
                        term: l(*k),
                    });
                }
            }
        }
        for i in 0..n {
            let ids = (self.identities[self.source[i]], self.identities[self.target[i]]);
            if self.compose[ids.0 * n + i] != e(i) {
                out.push(Diagnostic::UnitLeft { element: l(i) });
            }
            if self.compose[i * n + ids.1] != e(i) {
                out.push(Diagnostic::UnitRight { element: l(i) });
            }
        }
        for i in 0..n {
            for j in (0..n).filter(|&j| self.composable(i, j)) {
                let ij = &self.compose[i * n + j];
                for k in (0..n).filter(|&k| self.composable(j, k)) {
                    let left = self.comp(ij, &e(k));
                    let right = self.comp(&e(i), &self.compose[j * n + k]);
                    if left != right {
                        out.push(Diagnostic::NonAssociative {
                            a: l(i),
                            b: l(j),
                            c: l(k),
                        });
                    }
                }
                let lhs = self.d(ij);
                let rhs = axpby(
                    &Rat::one(),
                    &self.comp(&self.diff[i], &e(j)),
                    &sign(self.degrees[i]),
                    &self.comp(&e(i), &self.diff[j]),
                );
                if lhs != rhs {
                    out.push(Diagnostic::Leibniz { a: l(i), b: l(j) });
                }
            }
            if !self.d(&self.diff[i]).is_empty() {
                out.push(Diagnostic::DiffSquare { element: l(i) });
            }
        }
        out
    }
}

impl ChainAlgebra for DgCategory {
    fn dim(&self) -> usize {
        self.labels.len()
    }
    fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }
    fn max_degree(&self) -> usize {
        self.degrees.iter().copied().max().unwrap_or(0)
    }
    fn objects(&self) -> usize {
        self.objects.len()
    }
    fn source(&self, i: usize) -> usize {
        self.source[i]
    }
    fn target(&self, i: usize) -> usize {
        self.target[i]
    }
    fn identity(&self, object: usize) -> usize {
        self.identities[object]
    }
    fn product(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.compose[i * self.labels.len() + j]
    }
    fn diff(&self, i: usize) -> &[(usize, Rat)] {
        &self.diff[i]
    }
    fn label(&self, i: usize) -> String {
        self.labels[i].clone()
    }
}

/// Validates a category presentation, or returns every violated axiom.
pub fn validate_category(p: &CategoryPresentation) -> Result<DgCategory, Vec<Diagnostic>> {
    let mut diags = Vec::new();
    let objects: Vec<String> = p.objects.iter().map(|(o, _)| o.clone()).collect();
    let obj_index: HashMap<&str, usize> = objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
    // (label, degree, source, target) in declaration order.
    let mut decl = Vec::new();
    for h in &p.homs {
        let (Some(&s), Some(&t)) = (obj_index.get(h.source.as_str()), obj_index.get(h.target.as_str())) else {
            for o in [&h.source, &h.target] {
                if !obj_index.contains_key(o.as_str()) {
                    diags.push(Diagnostic::UnknownLabel {
                        label: o.clone(),
                        line: None,
                    });
                }
            }
            continue;
        };
        for (l, d) in &h.basis {
            decl.push((l.clone(), *d, s, t));
        }
    }
    let mut order: Vec<usize> = (0..decl.len()).collect();
    order.sort_by_key(|&i| (decl[i].1, i));
    let labels: Vec<String> = order.iter().map(|&i| decl[i].0.clone()).collect();
    let table = LabelTable::new(&labels, &mut diags);
    let mut identities = Vec::new();
    for (_, id) in &p.objects {
        if let Some(i) = table.resolve(id, None, &mut diags) {
            identities.push(i);
        }
    }
    let n = labels.len();
    let mut compose: HashMap<(usize, usize), SparseRow> = HashMap::new();
    for e in &p.compose {
        let l = table.resolve(&e.left, e.line, &mut diags);
        let r = table.resolve(&e.right, e.line, &mut diags);
        let t = table.terms(&e.terms, e.line, &mut diags);
        if let (Some(l), Some(r), Some(t)) = (l, r, t) {
            if compose.insert((l, r), t).is_some() {
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
    if !diags.is_empty() {
        return Err(diags);
    }
    let degrees: Vec<usize> = order.iter().map(|&i| decl[i].1).collect();
    let source: Vec<usize> = order.iter().map(|&i| decl[i].2).collect();
    let target: Vec<usize> = order.iter().map(|&i| decl[i].3).collect();
    for i in 0..n {
        let (ids, idt) = (identities[source[i]], identities[target[i]]);
        compose.entry((ids, i)).or_insert_with(|| vec![(i, Rat::one())]);
        compose.entry((i, idt)).or_insert_with(|| vec![(i, Rat::one())]);
    }
    let mut flat = vec![Vec::new(); n * n];
    for ((i, j), v) in compose {
        flat[i * n + j] = normalize_row(v);
    }
    let mut d = vec![Vec::new(); n];
    for (i, v) in diff {
        d[i] = normalize_row(v);
    }
    let cat = DgCategory {
        name: p.name.clone(),
        objects,
        identities,
        labels,
        degrees,
        source,
        target,
        compose: flat,
        diff: d,
    };
    let diags = cat.check();
    if diags.is_empty() {
        Ok(cat)
    } else {
        Err(diags)
    }
}

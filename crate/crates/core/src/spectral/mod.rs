//! Spectral sequences of the filtrations `F1`, `F2`, `F3` and `F13` on the
//! cyclic tricomplex, their first pages, low-degree consequences, the
//! long exact sequence of `C_Λ ⊂ T(EH)` and morphisms between sequences.

pub mod engine;
pub mod les;
pub mod morphisms;

use std::sync::Arc;

use serde::Serialize;

use crate::chain::Cochains;
use crate::complex::{self, assemble, Cell, Complex, Layout, SliceCache};
use crate::cyclic::{hc_dim, hcp_dim, EcComplex, Method};
use crate::hochschild::{hh_dim, hhp_dim};
use crate::linalg::{rank, sign, RatMatrix};

pub use engine::{induced_page_map, preserves_filtration, Filtered, FilteredSlice, LevelFn, PageBasis};
pub use les::{les_exactness_check, LesNode, LesReport};
pub use morphisms::{restriction_maps, partial_reductions, ss_morphism_check, RestrictionMap, MorphismReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Filtration {
    F1,
    F2,
    F3,
    F13,
}

impl Filtration {
    pub const ALL: [Filtration; 4] = [Filtration::F1, Filtration::F2, Filtration::F3, Filtration::F13];

    /// Level of the tricomplex cell `[p, q, r]`.
    pub fn level(self, cell: &[usize]) -> usize {
        let (p, q, r) = (cell[0], cell[1], cell[2]);
        match self {
            Filtration::F1 => p,
            Filtration::F2 => q,
            Filtration::F3 => r,
            Filtration::F13 => p + r,
        }
    }

    pub fn level_fn(self) -> LevelFn {
        Arc::new(move |k: &[usize]| self.level(k))
    }

    pub fn name(self) -> &'static str {
        match self {
            Filtration::F1 => "f1",
            Filtration::F2 => "f2",
            Filtration::F3 => "f3",
            Filtration::F13 => "f13",
        }
    }
}

impl std::str::FromStr for Filtration {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "f1" => Ok(Filtration::F1),
            "f2" => Ok(Filtration::F2),
            "f3" => Ok(Filtration::F3),
            "f13" => Ok(Filtration::F13),
            _ => Err(format!("unknown filtration `{s}` (f1, f2, f3, f13)")),
        }
    }
}

/// One term `E_r^{p,q}` of a page.
#[derive(Clone, Debug, Serialize)]
pub struct PageEntry {
    pub r: usize,
    pub p: usize,
    pub q: i64,
    pub dim: usize,
    #[serde(skip)]
    pub representatives: Option<RatMatrix>,
}

/// The tricomplex of a set of cochains with one of its filtrations.
pub struct TriSpectral {
    pub ec: EcComplex,
    pub filtration: Filtration,
}

impl TriSpectral {
    pub fn new(c: Arc<Cochains>, filtration: Filtration) -> Self {
        TriSpectral {
            ec: EcComplex::new(c),
            filtration,
        }
    }

    pub fn filtered(&self) -> Filtered<'_> {
        Filtered::new(&self.ec, self.filtration.level_fn())
    }

    /// `E_r^{p,q}`; zero when `p + q < 0`.
    pub fn entry(&self, r: usize, p: usize, q: i64, with_reps: bool) -> PageEntry {
        let n = p as i64 + q;
        let (dim, representatives) = if n < 0 {
            (0, None)
        } else if with_reps {
            let b = self.filtered().page_basis(r, p, n as usize);
            (b.dim(), Some(b.reps))
        } else {
            (self.filtered().page_dim(r, p, n as usize), None)
        };
        PageEntry {
            r,
            p,
            q,
            dim,
            representatives,
        }
    }

    pub fn page_dim(&self, r: usize, p: usize, q: i64) -> usize {
        self.entry(r, p, q, false).dim
    }

    pub fn infinity_dim(&self, p: usize, q: i64) -> usize {
        let n = p as i64 + q;
        if n < 0 {
            return 0;
        }
        self.filtered().infinity_dim(p, n as usize)
    }

    /// `dim E_r^{p,q}` for `p + q ≤ max_total`, indexed `[p][q]` with
    /// `q` from `0`. Entries with `q < 0` vanish for every filtration here
    /// except at levels above the total degree, which are empty.
    pub fn grid(&self, r: Option<usize>, max_total: usize) -> Vec<Vec<usize>> {
        let cells: Vec<(usize, usize)> = (0..=max_total)
            .flat_map(|p| (0..=max_total - p).map(move |q| (p, q)))
            .collect();
        let dims = crate::par::map_range(cells.len(), |i| {
            let (p, q) = cells[i];
            match r {
                Some(r) => self.page_dim(r, p, q as i64),
                None => self.infinity_dim(p, q as i64),
            }
        });
        let mut out: Vec<Vec<usize>> = (0..=max_total).map(|p| vec![0; max_total - p + 1]).collect();
        for ((p, q), d) in cells.into_iter().zip(dims) {
            out[p][q] = d;
        }
        out
    }
}

/// `Δ^k_− HH`: `HH^{k-n}` in degree `n ≤ k`, zero above.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruncatedHH {
    pub k: usize,
    pub values: Vec<usize>,
}

impl TruncatedHH {
    pub fn new(k: usize, hh: &[usize]) -> Self {
        TruncatedHH {
            k,
            values: (0..=k).map(|n| hh[k - n]).collect(),
        }
    }

    pub fn get(&self, n: usize) -> usize {
        self.values.get(n).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConvergenceReport {
    pub filtration: Filtration,
    pub n: usize,
    pub infinity_sum: usize,
    pub hc: usize,
    pub graded_sum: usize,
    pub holds: bool,
}

/// `Σ_{p+q=n} dim E_∞^{p,q}` against `HC^n`, with `E_∞` also cross-checked
/// against the associated graded of cohomology.
pub fn convergence_check(c: &Arc<Cochains>, filtration: Filtration, n: usize) -> ConvergenceReport {
    let ss = TriSpectral::new(c.clone(), filtration);
    let f = ss.filtered();
    let levels = f.level_set(n);
    let infinity_sum: usize = levels.iter().map(|&s| f.infinity_dim(s, n)).sum();
    let graded_sum: usize = levels.iter().map(|&s| f.graded_cohomology_dim(s, n)).sum();
    let hc = hc_dim(c, n, Method::Lambda);
    ConvergenceReport {
        filtration,
        n,
        infinity_sum,
        hc,
        graded_sum,
        holds: infinity_sum == hc && graded_sum == hc,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct E1Comparison {
    pub p: usize,
    pub q: usize,
    pub engine: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct E1Report {
    pub filtration: Filtration,
    pub entries: Vec<E1Comparison>,
}

impl E1Report {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.engine == e.expected)
    }

    pub fn mismatches(&self) -> Vec<&E1Comparison> {
        self.entries.iter().filter(|e| e.engine != e.expected).collect()
    }
}

/// The `s`-th column of the `F2` filtration on its own: cells `[p, r]`
/// with `p ≤ s` holding `C^{s-p}_r` in total degree `p + s + r`, with
/// differential `B` and `(-1)^{s-p} δ`.
pub struct F2Column {
    c: Arc<Cochains>,
    s: usize,
    cache: SliceCache,
}

impl F2Column {
    pub fn new(c: Arc<Cochains>, s: usize) -> Self {
        F2Column {
            c,
            s,
            cache: SliceCache::default(),
        }
    }
}

impl Complex for F2Column {
    fn layout(&self, n: usize) -> Arc<Layout> {
        self.cache.layout(n, || {
            let s = self.s;
            let cells = if n < s {
                Vec::new()
            } else {
                (0..=s.min(n - s))
                    .map(|p| Cell {
                        key: vec![p, n - s - p],
                        dim: self.c.dim(s - p, n - s - p),
                    })
                    .collect()
            };
            Layout::new(n, cells)
        })
    }

    fn differential(&self, n: usize) -> Arc<RatMatrix> {
        self.cache.differential(n, || {
            let s = self.s;
            assemble(&self.layout(n), &self.layout(n + 1), |key| {
                let (p, r) = (key[0], key[1]);
                let k = s - p;
                let mut out = vec![(vec![p, r + 1], self.c.delta(k, r).scale(&sign(k)))];
                if k >= 1 {
                    out.push((vec![p + 1, r], self.c.connes_b(k, r)));
                }
                out
            })
        })
    }
}

/// Compares the engine's `E_1^{p,q}` (`p, q ≤ max`) with the independent
/// description of the first page of each filtration.
pub fn e1_identification(c: &Arc<Cochains>, filtration: Filtration, max: usize) -> E1Report {
    let ss = TriSpectral::new(c.clone(), filtration);
    let cells: Vec<(usize, usize)> = (0..=max).flat_map(|p| (0..=max).map(move |q| (p, q))).collect();
    let entries = crate::par::map_range(cells.len(), |i| {
        let (p, q) = cells[i];
        let engine = ss.page_dim(1, p, q as i64);
        let expected = match filtration {
            Filtration::F1 => {
                if q < p {
                    0
                } else {
                    hh_dim(c, q - p)
                }
            }
            Filtration::F3 => hcp_dim(c, q, p),
            Filtration::F13 => (0..=p.min(q)).map(|i| hhp_dim(c, q - i, p - i)).sum(),
            Filtration::F2 => complex::cohomology_dim(&F2Column::new(c.clone(), p), p + q),
        };
        E1Comparison { p, q, engine, expected }
    });
    E1Report { filtration, entries }
}

#[derive(Clone, Debug, Serialize)]
pub struct LowDegreeReport {
    pub hh0: usize,
    pub hc0: usize,
    pub hc1: usize,
    pub hc2: usize,
    /// `H^0(Δ^1_− HH)`.
    pub row1_h0: usize,
    /// `H^0(Δ^2_− HH)`.
    pub row2_h0: usize,
    /// `H^1(Δ^1_− HH)`.
    pub row1_h1: usize,
    /// The rows of `E_1` have the dimensions of the truncations `Δ^q_− HH`.
    pub rows_are_truncations: bool,
    pub holds: bool,
}

/// Cohomology of row `q` of the `F1` first page at position `p`,
/// computed from explicit `d_1` matrices.
fn e1_row_cohomology(f: &Filtered, p: usize, q: usize) -> usize {
    let dim = f.page_dim(1, p, p + q);
    let out = rank(&f.page_differential(1, p, p + q));
    let inc = if p == 0 {
        0
    } else {
        rank(&f.page_differential(1, p - 1, p - 1 + q))
    };
    dim - out - inc
}

/// `HC^0 ≃ HH^0`, `HC^1 ≃ H^0(Δ^1_− HH)` and
/// `HC^2 ≃ H^0(Δ^2_− HH) ⊕ H^1(Δ^1_− HH)`, the right-hand sides taken from
/// the rows of the `F1` first page with their `d_1`.
pub fn low_degree_hc(c: &Arc<Cochains>) -> LowDegreeReport {
    let ss = TriSpectral::new(c.clone(), Filtration::F1);
    let f = ss.filtered();
    let hh: Vec<usize> = (0..=2).map(|n| hh_dim(c, n)).collect();
    let hc: Vec<usize> = crate::cyclic::hc_dims(c, 2, Method::Lambda);
    let rows_are_truncations = (1..=2).all(|k| {
        let t = TruncatedHH::new(k, &hh);
        (0..=k + 1).all(|p| f.page_dim(1, p, p + k) == t.get(p))
    });
    let row1_h0 = e1_row_cohomology(&f, 0, 1);
    let row1_h1 = e1_row_cohomology(&f, 1, 1);
    let row2_h0 = e1_row_cohomology(&f, 0, 2);
    LowDegreeReport {
        hh0: hh[0],
        hc0: hc[0],
        hc1: hc[1],
        hc2: hc[2],
        row1_h0,
        row2_h0,
        row1_h1,
        rows_are_truncations,
        holds: hc[0] == hh[0] && hc[1] == row1_h0 && hc[2] == row2_h0 + row1_h1 && rows_are_truncations,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DegeneracyReport {
    pub n: usize,
    pub degenerate: bool,
    /// First `(r, p)` where `E_{r+1}^{p, n-p} ≠ E_r^{p, n-p}` with `r ≥ 2`.
    pub first_change: Option<(usize, usize)>,
    pub e_inf_0n: usize,
    pub e2_0n: usize,
    /// `dim ker(HH^n → HH^{n-1})` for the map induced by `d_1`.
    pub kernel_dim: usize,
    /// `None` when not degenerate, since nothing is asserted then.
    pub edge_holds: Option<bool>,
}

/// Tests whether the `F1` sequence degenerates at `E_2` in total degree
/// `n ≥ 1` and, if so, checks the edge map `HC^n ↠ ker(HH^n → HH^{n-1})`.
pub fn degeneracy_edge_check(c: &Arc<Cochains>, n: usize) -> DegeneracyReport {
    assert!(n >= 1, "degeneracy edge check needs n ≥ 1");
    let ss = TriSpectral::new(c.clone(), Filtration::F1);
    let f = ss.filtered();
    let first_change = f.first_change(2, n);
    let e_inf_0n = f.infinity_dim(0, n);
    let e2_0n = f.page_dim(2, 0, n);
    let kernel_dim = f.page_dim(1, 0, n) - rank(&f.page_differential(1, 0, n));
    let degenerate = first_change.is_none();
    DegeneracyReport {
        n,
        degenerate,
        first_change,
        e_inf_0n,
        e2_0n,
        kernel_dim,
        edge_holds: degenerate.then_some(e_inf_0n == e2_0n && e2_0n == kernel_dim),
    }
}

/// Checks `E_2 = H(E_1, d_1)` on the engine's own pages for `p + q ≤ max`.
pub fn e2_consistency(c: &Arc<Cochains>, filtration: Filtration, max_total: usize) -> bool {
    let ss = TriSpectral::new(c.clone(), filtration);
    let f = ss.filtered();
    (0..=max_total).all(|n| {
        (0..=n).all(|p| {
            let out = rank(&f.page_differential(1, p, n));
            let inc = if p == 0 || n == 0 {
                0
            } else {
                rank(&f.page_differential(1, p - 1, n - 1))
            };
            f.page_dim(2, p, n) == f.page_dim(1, p, n) - out - inc
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::hochschild::cochains_of;

    fn cochains(name: &str) -> Arc<Cochains> {
        cochains_of(&catalog::algebra(name).unwrap())
    }

    #[test]
    fn levels() {
        assert_eq!(Filtration::F1.level(&[2, 1, 0]), 2);
        assert_eq!(Filtration::F13.level(&[2, 1, 0]), 2);
        assert_eq!(Filtration::F3.level(&[0, 0, 3]), 3);
        assert_eq!(Filtration::F2.level(&[0, 2, 1]), 2);
    }

    #[test]
    fn differential_respects_every_filtration() {
        let c = cochains("koszul");
        for f in Filtration::ALL {
            let ss = TriSpectral::new(c.clone(), f);
            assert!((0..4).all(|n| ss.filtered().is_compatible(n)), "{f:?}");
        }
    }

    #[test]
    fn ground_field_f1() {
        let ss = TriSpectral::new(cochains("ground_field"), Filtration::F1);
        assert_eq!(ss.page_dim(1, 0, 0), 1);
        assert_eq!(ss.page_dim(1, 1, 0), 0);
        assert_eq!(ss.infinity_dim(0, 0), 1);
        assert_eq!(ss.page_dim(1, 2, -1), 0);
    }

    #[test]
    fn f1_vanishes_below_diagonal() {
        let ss = TriSpectral::new(cochains("dual_numbers"), Filtration::F1);
        for p in 1..4 {
            for q in 0..p {
                assert_eq!(ss.infinity_dim(p, q as i64), 0);
            }
        }
    }

    #[test]
    fn pages_shrink() {
        let ss = TriSpectral::new(cochains("koszul"), Filtration::F13);
        for p in 0..3 {
            for q in 0..3 {
                let dims: Vec<usize> = (0..5).map(|r| ss.page_dim(r, p, q)).collect();
                assert!(dims.windows(2).all(|w| w[1] <= w[0]), "{dims:?}");
            }
        }
    }

    #[test]
    fn convergence_on_small_cases() {
        for (name, f) in [
            ("ground_field", Filtration::F1),
            ("koszul", Filtration::F3),
            ("dual_numbers", Filtration::F13),
            ("exterior", Filtration::F2),
        ] {
            for n in 0..=3 {
                let r = convergence_check(&cochains(name), f, n);
                assert!(r.holds, "{name} {r:?}");
            }
        }
    }

    #[test]
    fn first_pages_match() {
        for name in ["ground_field", "koszul", "exterior"] {
            for f in Filtration::ALL {
                let r = e1_identification(&cochains(name), f, 3);
                assert!(r.all_hold(), "{name} {f:?}: {:?}", r.mismatches());
            }
        }
    }

    #[test]
    fn low_degree() {
        for name in ["ground_field", "exterior", "koszul"] {
            let r = low_degree_hc(&cochains(name));
            assert!(r.holds, "{name} {r:?}");
        }
        let r = low_degree_hc(&cochains("ground_field"));
        assert_eq!((r.hc1, r.hc2), (0, 1));
    }

    #[test]
    fn ground_field_degenerates() {
        for n in 1..=3 {
            let r = degeneracy_edge_check(&cochains("ground_field"), n);
            assert!(r.degenerate);
            assert_eq!(r.edge_holds, Some(true));
        }
    }

    #[test]
    fn second_page_is_cohomology_of_first() {
        for f in Filtration::ALL {
            assert!(e2_consistency(&cochains("koszul"), f, 3), "{f:?}");
        }
    }

    #[test]
    fn truncation() {
        let t = TruncatedHH::new(2, &[5, 6, 7]);
        assert_eq!(t.values, vec![7, 6, 5]);
        assert_eq!(t.get(3), 0);
    }
}

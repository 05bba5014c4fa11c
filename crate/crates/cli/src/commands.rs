//! One function per subcommand, each producing a [`Report`].

use std::sync::Arc;

use dgcyc::catalog;
use dgcyc::chain::Cochains;
use dgcyc::cyclic::{hc_dims, hcp_dim, quasi_iso_suite, verify_cocyclic_identities, Method, Standard};
use dgcyc::dga::random::random_pool;
use dgcyc::dga::{AxiomFamily, Dga};
use dgcyc::dgcat::f1_ss_cat;
use dgcyc::hochschild::{hh_dim, hhp_dim};
use dgcyc::presentation::Presentation;
use dgcyc::spectral::{
    convergence_check, e1_identification, les_exactness_check, low_degree_hc, partial_reductions, Filtration,
    LesReport, TriSpectral,
};

use crate::input::{guard, guarded_cat_cochains, guarded_cochains, Input, InputError};
use crate::report::{Report, Table};

/// `E_r` for a finite `r`, or `E_∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Page {
    Finite(usize),
    Infinity,
}

impl std::str::FromStr for Page {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Page::Infinity),
            _ => s
                .parse()
                .map(Page::Finite)
                .map_err(|_| format!("page must be a number or `inf`, not `{s}`")),
        }
    }
}

impl Page {
    fn r(self) -> Option<usize> {
        match self {
            Page::Finite(r) => Some(r),
            Page::Infinity => None,
        }
    }

    fn label(self) -> String {
        match self {
            Page::Finite(r) => format!("E_{r}"),
            Page::Infinity => "E_inf".to_string(),
        }
    }
}

fn to_strings(v: &[usize]) -> Vec<String> {
    v.iter().map(usize::to_string).collect()
}

fn json<T: serde::Serialize>(v: &T) -> Option<serde_json::Value> {
    Some(serde_json::to_value(v).expect("reports serialize"))
}

pub fn validate(input: &Input) -> Report {
    let mut report = Report::new(Some(input.info.clone()));
    let (result, families): (Result<(), Vec<_>>, &[AxiomFamily]) = match &input.presentation {
        Presentation::Algebra(_) => (
            input.dga().map(|_| ()).map_err(diagnostics),
            &[
                AxiomFamily::Presentation,
                AxiomFamily::Degree,
                AxiomFamily::Unit,
                AxiomFamily::Associativity,
                AxiomFamily::Leibniz,
                AxiomFamily::DiffSquare,
            ],
        ),
        Presentation::Category(_) => (
            input.category().map(|_| ()).map_err(diagnostics),
            &[
                AxiomFamily::Presentation,
                AxiomFamily::Composability,
                AxiomFamily::Degree,
                AxiomFamily::Unit,
                AxiomFamily::Associativity,
                AxiomFamily::Leibniz,
                AxiomFamily::DiffSquare,
            ],
        ),
    };
    let diags = result.err().unwrap_or_default();
    for fam in families {
        let mine: Vec<String> = diags
            .iter()
            .filter(|d| d.family() == *fam)
            .map(|d| d.to_string())
            .collect();
        report.check(fam.to_string(), mine.is_empty(), mine.join("; "));
    }
    report
}

fn diagnostics(e: InputError) -> Vec<dgcyc::dga::Diagnostic> {
    match e {
        InputError::Invalid(_, d) => d,
        _ => Vec::new(),
    }
}

pub fn hh(input: &Input, max: usize, bound: u128) -> Result<Report, InputError> {
    let c = guarded_cochains(&input.dga()?, max + 1, bound)?;
    let mut r = Report::new(Some(input.info.clone()));
    let dims: Vec<usize> = (0..=max).map(|n| hh_dim(&c, n)).collect();
    r.tables
        .push(Table::series(format!("HH^n({})", input.info.name), &dims));
    Ok(r)
}

pub fn hc(input: &Input, max: usize, method: Method, bound: u128) -> Result<Report, InputError> {
    let c = guarded_cochains(&input.dga()?, max + 1, bound)?;
    let mut r = Report::new(Some(input.info.clone()));
    let name = format!("{method:?}").to_lowercase();
    r.tables.push(Table::series(
        format!("HC^n({}) via {name}", input.info.name),
        &hc_dims(&c, max, method),
    ));
    Ok(r)
}

/// `HCP^n_m` or `HHP^n_m` for `n ≤ max`, `m ≤ max_internal`.
pub fn partial(
    input: &Input,
    max: usize,
    max_internal: Option<usize>,
    cyclic: bool,
    bound: u128,
) -> Result<Report, InputError> {
    let a = input.dga()?;
    let top = max_internal.unwrap_or((max + 1) * a.top_degree());
    guard(&a, max + 1, top, max + 1 + top, bound)?;
    let c = dgcyc::hochschild::cochains_of(&a);
    type Dim = fn(&Arc<Cochains>, usize, usize) -> usize;
    let (sym, f): (&str, Dim) = if cyclic { ("HCP", hcp_dim) } else { ("HHP", hhp_dim) };
    let mut t = Table::new(
        format!("{sym}^n_m({}), rows n, columns m", input.info.name),
        "n \\ m",
        (0..=top).map(|m| m.to_string()).collect(),
    );
    for n in 0..=max {
        t.row(n.to_string(), (0..=top).map(|m| f(&c, n, m).to_string()).collect());
    }
    let mut r = Report::new(Some(input.info.clone()));
    r.tables.push(t);
    Ok(r)
}

fn grid_table(title: String, grid: &[Vec<usize>]) -> Table {
    let max = grid.len().saturating_sub(1);
    let mut t = Table::new(title, "p \\ q", (0..=max).map(|q| q.to_string()).collect());
    for (p, row) in grid.iter().enumerate() {
        let mut cells = to_strings(row);
        cells.resize(max + 1, String::new());
        t.row(p.to_string(), cells);
    }
    t
}

pub fn ss(
    input: &Input,
    filtration: Filtration,
    page: Page,
    max_total: usize,
    bound: u128,
) -> Result<Report, InputError> {
    let c = guarded_cochains(&input.dga()?, max_total + 1, bound)?;
    let ss = TriSpectral::new(c, filtration);
    let mut r = Report::new(Some(input.info.clone()));
    let title = format!(
        "{}^(p,q) of {} filtered by {}, p + q <= {max_total}",
        page.label(),
        input.info.name,
        filtration.name()
    );
    r.tables.push(grid_table(title, &ss.grid(page.r(), max_total)));
    Ok(r)
}

/// Every structural check on one cochain complex family, named by `who`.
fn suite(r: &mut Report, who: &str, c: &Arc<Cochains>, a: Option<&Dga>, max: usize, arity: usize) {
    let ids = verify_cocyclic_identities(&Standard(c.clone()), arity, 2 * c.max_degree());
    let failed: Vec<&str> = ids.failed_identities().into_iter().map(|i| i.formula()).collect();
    r.check(
        format!("{who}: cocyclic identities"),
        failed.is_empty(),
        failed.join(", "),
    );

    let q = quasi_iso_suite(c, max);
    let agree = q.degrees.iter().all(|d| d.ec == d.cc && d.cc == d.c_lambda);
    let hc: Vec<usize> = q.degrees.iter().map(|d| d.ec).collect();
    r.check(
        format!("{who}: three definitions of HC agree"),
        agree,
        format!("HC = {hc:?}"),
    );
    let acyclic = q.degrees.iter().all(|d| d.odd == 0 && d.homotopy_identity);
    r.check(format!("{who}: odd part acyclic"), acyclic, "");
    r.check(format!("{who}: comparison maps"), q.all_hold(), "");

    for f in Filtration::ALL {
        let bad: Vec<usize> = (0..=max).filter(|&n| !convergence_check(c, f, n).holds).collect();
        r.check(
            format!("{who}: {} converges", f.name()),
            bad.is_empty(),
            fmt_degrees(&bad),
        );
        let e1 = e1_identification(c, f, max);
        let detail = e1
            .mismatches()
            .iter()
            .map(|m| format!("E1^({},{}) = {} vs {}", m.p, m.q, m.engine, m.expected))
            .collect::<Vec<_>>()
            .join("; ");
        r.check(format!("{who}: {} first page", f.name()), e1.all_hold(), detail);
    }

    let low = low_degree_hc(c);
    r.check(
        format!("{who}: low-degree formulas"),
        low.holds,
        format!("HC^0..2 = {}, {}, {}", low.hc0, low.hc1, low.hc2),
    );
    let les = les_exactness_check(c, max);
    let bad: Vec<usize> = les.nodes.iter().filter(|n| !n.holds()).map(|n| n.n).collect();
    r.check(format!("{who}: long exact sequence"), les.all_hold(), fmt_degrees(&bad));

    if let Some(a) = a {
        let red = partial_reductions(a, max);
        let bad: Vec<usize> = red.iter().filter(|x| !x.reductions_hold()).map(|x| x.m).collect();
        r.check(
            format!("{who}: degree-zero reductions"),
            bad.is_empty(),
            fmt_degrees(&bad),
        );
    }
}

fn fmt_degrees(bad: &[usize]) -> String {
    if bad.is_empty() {
        String::new()
    } else {
        format!("fails in degrees {bad:?}")
    }
}

pub fn verify(
    input: &Input,
    trials: usize,
    seed: u64,
    max: usize,
    arity: usize,
    bound: u128,
) -> Result<Report, InputError> {
    let mut r = Report::new(Some(input.info.clone()));
    let arity_guard = |a: &dyn dgcyc::chain::ChainAlgebra| guard(a, arity + 2, 2 * a.max_degree(), usize::MAX, bound);
    match &input.presentation {
        Presentation::Algebra(_) => {
            let a = input.dga()?;
            arity_guard(&a)?;
            let c = guarded_cochains(&a, max + 1, bound)?;
            suite(&mut r, &input.info.name, &c, Some(&a), max, arity);
        }
        Presentation::Category(_) => {
            let cat = input.category()?;
            arity_guard(&cat)?;
            let c = guarded_cat_cochains(&cat, max + 1, bound)?;
            suite(&mut r, &input.info.name, &c, None, max, arity);
        }
    }
    for a in random_pool(seed, trials) {
        let c = guarded_cochains(&a, max + 1, bound)?;
        suite(&mut r, a.name(), &c, Some(&a), max, arity);
    }
    Ok(r)
}

pub fn les(input: &Input, max: usize, bound: u128) -> Result<Report, InputError> {
    let c = guarded_cochains(&input.dga()?, max + 2, bound)?;
    let report: LesReport = les_exactness_check(&c, max);
    let mut t = Table::new(
        format!("HC^n -> HH^n -> H^n(Q) -> HC^(n+1) for {}", input.info.name),
        "n",
        ["HC", "HH", "H(Q)", "rk i", "rk p", "rk conn", "exact"]
            .map(String::from)
            .to_vec(),
    );
    for n in &report.nodes {
        let mut cells = to_strings(&[
            n.hc,
            n.hh,
            n.quotient,
            n.inclusion_rank,
            n.projection_rank,
            n.connecting_rank,
        ]);
        cells.push(if n.holds() { "yes" } else { "no" }.to_string());
        t.row(n.n.to_string(), cells);
    }
    let mut r = Report::new(Some(input.info.clone()));
    r.tables.push(t);
    r.check("injective at HC^0", report.exact_at_start, "");
    for n in &report.nodes {
        r.check(format!("exact through degree {}", n.n), n.holds(), "");
    }
    r.data = json(&report);
    Ok(r)
}

pub fn cat_hh(input: &Input, max: usize, bound: u128) -> Result<Report, InputError> {
    let c = guarded_cat_cochains(&input.category()?, max + 1, bound)?;
    let mut r = Report::new(Some(input.info.clone()));
    let dims: Vec<usize> = (0..=max).map(|n| hh_dim(&c, n)).collect();
    r.tables
        .push(Table::series(format!("HH^n({})", input.info.name), &dims));
    Ok(r)
}

pub fn cat_hc(input: &Input, max: usize, method: Method, bound: u128) -> Result<Report, InputError> {
    let c = guarded_cat_cochains(&input.category()?, max + 1, bound)?;
    let mut r = Report::new(Some(input.info.clone()));
    let name = format!("{method:?}").to_lowercase();
    r.tables.push(Table::series(
        format!("HC^n({}) via {name}", input.info.name),
        &hc_dims(&c, max, method),
    ));
    Ok(r)
}

pub fn cat_ss(input: &Input, page: Page, max_total: usize, bound: u128) -> Result<Report, InputError> {
    let cat = input.category()?;
    let c = guarded_cat_cochains(&cat, max_total + 1, bound)?;
    let ss = TriSpectral::new(c, Filtration::F1);
    let mut r = Report::new(Some(input.info.clone()));
    r.tables.push(grid_table(
        format!(
            "{}^(p,q) of {} filtered by f1, p + q <= {max_total}",
            page.label(),
            input.info.name
        ),
        &ss.grid(page.r(), max_total),
    ));
    let f1 = f1_ss_cat(&cat, max_total);
    let bad: Vec<usize> = f1.convergence.iter().filter(|c| !c.holds).map(|c| c.n).collect();
    r.check("converges to HC", bad.is_empty(), fmt_degrees(&bad));
    r.check("E_inf vanishes above the diagonal band", f1.band_vanishes, "");
    r.check("E_1 is Hochschild cohomology", f1.e1.all_hold(), "");
    r.check("low-degree formulas", f1.low_degree.holds, "");
    let edge_bad: Vec<usize> = f1
        .degeneracy
        .iter()
        .filter(|d| d.edge_holds == Some(false))
        .map(|d| d.n)
        .collect();
    let degenerate: Vec<usize> = f1.degeneracy.iter().filter(|d| d.degenerate).map(|d| d.n).collect();
    r.check(
        "edge map where E_2 degenerates",
        edge_bad.is_empty(),
        format!("degenerate in degrees {degenerate:?}"),
    );
    r.data = json(&f1);
    Ok(r)
}

pub fn list_catalog(show: Option<&str>) -> Result<Report, InputError> {
    let mut r = Report::new(None);
    match show {
        Some(name) => {
            let e = catalog::entry(name).ok_or_else(|| InputError::NotFound(name.to_string()))?;
            let mut t = Table::new(format!("{name}: {}", e.summary), "line", vec!["text".into()]);
            for (i, l) in e.source.lines().enumerate() {
                t.row((i + 1).to_string(), vec![l.to_string()]);
            }
            r.tables.push(t);
            r.data = Some(serde_json::Value::String(e.source.to_string()));
        }
        None => {
            let mut t = Table::new("builtin inputs", "name", vec!["kind".into(), "summary".into()]);
            for e in catalog::ENTRIES {
                let kind = match catalog::presentation(e.name) {
                    Some(Presentation::Category(_)) => "category",
                    _ => "dga",
                };
                t.row(e.name, vec![kind.into(), e.summary.into()]);
            }
            r.tables.push(t);
        }
    }
    Ok(r)
}

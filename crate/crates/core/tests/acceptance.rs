//! One line per acceptance criterion. Criteria listed in `KNOWN_FAILURES`
//! are expected to fail for a recorded reason; the process exits nonzero
//! only when an outcome differs from what is expected.

mod common;

use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use dgcyc::catalog::{self, NEGATIVE_CONTROLS};
use dgcyc::chain::Cochains;
use dgcyc::cyclic::{hc_dims, quasi_iso_suite, verify_cocyclic_identities, Method, SignMutatedLambda, Standard};
use dgcyc::dga::random::random_pool;
use dgcyc::dga::Dga;
use dgcyc::dgcat::{cat_cochains, union_is_blockwise, DgCategory};
use dgcyc::hochschild::{cochains_of, hh_dim};
use dgcyc::spectral::{
    convergence_check, e1_identification, les_exactness_check, low_degree_hc, partial_reductions, Filtration,
};

const POOL_SEED: u64 = 20_240_601;
const POOL_SIZE: usize = 20;

const KNOWN_FAILURES: &[(usize, &str)] = &[(
    8,
    "the degree-zero reductions hold, but HHP^m_0 -> HH^m is not injective once the \
     differential is nonzero (koszul: HHP^0_0 = 2 > HH^0 = 1, the row inclusion is not a cochain map)",
)];

type Outcome = Result<String, String>;

fn catalog_dgas() -> Vec<Dga> {
    catalog::ALGEBRAS.iter().map(|n| catalog::algebra(n).unwrap()).collect()
}

fn pool() -> Vec<Dga> {
    random_pool(POOL_SEED, POOL_SIZE)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn identity_suite() -> Outcome {
    let start = Instant::now();
    let all: Vec<Dga> = catalog_dgas().into_iter().chain(pool()).collect();
    for a in &all {
        ensure(a.dim() <= 4 || catalog::ALGEBRAS.contains(&a.name()), || {
            format!("{} too large", a.name())
        })?;
        let r = verify_cocyclic_identities(&Standard(cochains_of(a)), 4, 2 * a.top_degree());
        ensure(r.all_hold(), || format!("{}: {:?}", a.name(), r.failed_identities()))?;
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1}s"))?;
    Ok(format!("{} dgas, p <= 4, q <= 2D, {secs:.1}s", all.len()))
}

fn three_definitions() -> Outcome {
    for a in catalog_dgas() {
        let r = quasi_iso_suite(&cochains_of(&a), 4);
        for d in &r.degrees {
            ensure(d.ec == d.cc && d.cc == d.c_lambda, || {
                format!("{} n={}: {d:?}", a.name(), d.n)
            })?;
        }
    }
    Ok("EC, CC_dg and C_Lambda agree for n <= 4".into())
}

fn acyclicity() -> Outcome {
    for a in catalog_dgas() {
        let r = quasi_iso_suite(&cochains_of(&a), 4);
        for d in &r.degrees {
            ensure(d.odd == 0, || format!("{} H^{}(CC^O) = {}", a.name(), d.n, d.odd))?;
            ensure(d.homotopy_identity, || format!("{} n={}: dh + hd != 1", a.name(), d.n))?;
            ensure(d.all_hold(), || format!("{} n={}: {d:?}", a.name(), d.n))?;
        }
    }
    Ok("odd part acyclic, contracting homotopy exact".into())
}

fn ground_field() -> Outcome {
    let o = common::ground_field();
    let oracle_hc: Vec<usize> = (0..=4).map(|n| common::hc(&o, n)).collect();
    let oracle_hh: Vec<usize> = (0..=4).map(|n| common::hh(&o, n)).collect();
    ensure(oracle_hc == [1, 0, 1, 0, 1] && oracle_hh == [1, 0, 0, 0, 0], || {
        format!("oracle gives HC {oracle_hc:?}, HH {oracle_hh:?}")
    })?;
    let c = cochains_of(&catalog::algebra("ground_field").unwrap());
    let hh: Vec<usize> = (0..=4).map(|n| hh_dim(&c, n)).collect();
    ensure(hh == oracle_hh, || format!("HH {hh:?}"))?;
    for m in [Method::Tricomplex, Method::Bicomplex, Method::Lambda] {
        let hc = hc_dims(&c, 4, m);
        ensure(hc == oracle_hc, || format!("HC {hc:?} via {m:?}"))?;
    }
    Ok("HC = 1,0,1,0,1 and HH = 1,0,0,0,0, pipeline = oracle".into())
}

fn convergence_of(c: &Arc<Cochains>, label: &str) -> Result<(), String> {
    for f in Filtration::ALL {
        for n in 0..=3 {
            let r = convergence_check(c, f, n);
            ensure(r.holds, || format!("{label}: {r:?}"))?;
        }
    }
    Ok(())
}

fn convergence() -> Outcome {
    for a in catalog_dgas() {
        convergence_of(&cochains_of(&a), a.name())?;
    }
    Ok("sum of E_inf = HC^n for F1, F2, F3, F13, n <= 3".into())
}

fn e1_identifications() -> Outcome {
    for a in catalog_dgas() {
        let c = cochains_of(&a);
        for f in [Filtration::F1, Filtration::F3, Filtration::F13] {
            let r = e1_identification(&c, f, 3);
            ensure(r.all_hold(), || format!("{} {f:?}: {:?}", a.name(), r.mismatches()))?;
        }
    }
    Ok("F1 band, F3 and F13 first pages match, p, q <= 3".into())
}

fn low_degree() -> Outcome {
    let all: Vec<Dga> = catalog_dgas().into_iter().chain(pool()).collect();
    for a in &all {
        let r = low_degree_hc(&cochains_of(a));
        ensure(r.holds, || format!("{}: {r:?}", a.name()))?;
    }
    Ok(format!("HC^0, HC^1, HC^2 formulas on {} dgas", all.len()))
}

fn partial() -> Outcome {
    let mut not_injective = Vec::new();
    for a in catalog_dgas() {
        for r in partial_reductions(&a, 3) {
            ensure(r.reductions_hold(), || format!("{}: {r:?}", a.name()))?;
            if !r.inclusions_injective() {
                not_injective.push(format!("{} m={}", a.name(), r.m));
            }
        }
    }
    ensure(not_injective.is_empty(), || {
        format!(
            "reductions hold; inclusions not injective at {}",
            not_injective.join(", ")
        )
    })?;
    Ok("reductions hold and inclusions are injective".into())
}

fn les() -> Outcome {
    for a in catalog_dgas() {
        let r = les_exactness_check(&cochains_of(&a), 3);
        ensure(r.all_hold(), || format!("{}: {:?}", a.name(), r.nodes))?;
    }
    Ok("exact at every node, n <= 3".into())
}

fn category_reduction() -> Outcome {
    for a in catalog_dgas() {
        let (ca, cc) = (cochains_of(&a), cat_cochains(&DgCategory::from_dga(&a)));
        let (qa, qc) = (quasi_iso_suite(&ca, 3), quasi_iso_suite(&cc, 3));
        ensure(qc.all_hold(), || format!("{} as category: {:?}", a.name(), qc.degrees))?;
        for (x, y) in qa.degrees.iter().zip(&qc.degrees) {
            ensure((x.ec, x.cc, x.c_lambda) == (y.ec, y.cc, y.c_lambda), || {
                format!("{} n={}: three definitions differ", a.name(), x.n)
            })?;
        }
        convergence_of(&cc, a.name())?;
        for f in Filtration::ALL {
            for n in 0..=3 {
                let (x, y) = (convergence_check(&ca, f, n), convergence_check(&cc, f, n));
                ensure(x.infinity_sum == y.infinity_sum, || format!("{} {f:?} n={n}", a.name()))?;
            }
        }
        let (x, y) = (low_degree_hc(&ca), low_degree_hc(&cc));
        ensure(y.holds, || format!("{} as category: {y:?}", a.name()))?;
        ensure(
            (x.hc0, x.hc1, x.hc2, x.row1_h0, x.row2_h0, x.row1_h1)
                == (y.hc0, y.hc1, y.hc2, y.row1_h0, y.row2_h0, y.row1_h1),
            || format!("{}: low-degree data differ", a.name()),
        )?;
    }
    let dual = DgCategory::from_dga(&catalog::algebra("dual_numbers").unwrap());
    let pairs = [
        (dual.clone(), DgCategory::from_dga(&catalog::algebra("koszul").unwrap())),
        (catalog::category("a2_path").unwrap(), dual),
    ];
    for (x, y) in &pairs {
        for n in 0..=3 {
            for q in 0..=3 {
                ensure(union_is_blockwise(x, y, n, q), || {
                    format!("union not blockwise at n={n} q={q}")
                })?;
            }
        }
    }
    Ok("one object = dga on three definitions, convergence, low degree; unions blockwise".into())
}

fn negative_controls() -> Outcome {
    for c in NEGATIVE_CONTROLS {
        let diags = catalog::negative_control_diagnostics(c);
        ensure(!diags.is_empty(), || format!("{} validates", c.name))?;
        ensure(diags.iter().all(|d| d.family() == c.broken), || {
            format!("{}: {:?}", c.name, diags.iter().map(|d| d.family()).collect::<Vec<_>>())
        })?;
    }
    for a in catalog_dgas() {
        let c = cochains_of(&a);
        let failed = verify_cocyclic_identities(&SignMutatedLambda(c), 4, 2 * a.top_degree()).failed_identities();
        ensure(!failed.is_empty(), || {
            format!("sign-mutated Lambda passes on {}", a.name())
        })?;
        ensure(failed.iter().all(|i| i.involves_lambda()), || {
            format!("{}: {failed:?}", a.name())
        })?;
    }
    Ok(format!(
        "{} presentations and a sign-mutated Lambda fail only their family",
        NEGATIVE_CONTROLS.len()
    ))
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 11] = [
        ("identity suite", identity_suite),
        ("three-definition agreement", three_definitions),
        ("acyclicity", acyclicity),
        ("ground-field sanity", ground_field),
        ("convergence", convergence),
        ("E1 identifications", e1_identifications),
        ("low-degree formulas", low_degree),
        ("partial-cohomology reductions", partial),
        ("LES exactness", les),
        ("dg-category reduction", category_reduction),
        ("negative controls", negative_controls),
    ];
    let mut unexpected = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let id = i + 1;
        let known = KNOWN_FAILURES.iter().find(|(k, _)| *k == id).map(|(_, r)| *r);
        let outcome = check();
        let line = match (&outcome, known) {
            (Ok(detail), None) => format!("PASS  {detail}"),
            (Err(detail), Some(reason)) => format!("FAIL (known: {reason})  {detail}"),
            (Err(detail), None) => {
                unexpected += 1;
                format!("FAIL  {detail}")
            }
            (Ok(detail), Some(_)) => {
                unexpected += 1;
                format!("PASS (listed as a known failure; update the table)  {detail}")
            }
        };
        println!("criterion {id:>2} {name:<30} {line}");
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Three operations for the browser: validate a presentation, compute
//! HH and HC, and draw a spectral sequence page. Each takes the text of a
//! presentation and returns JSON.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use dgcyc::catalog;
use dgcyc::chain::{ChainAlgebra, Cochains};
use dgcyc::cyclic::{hc_dims, Method};
use dgcyc::dga::validate_dga;
use dgcyc::dgcat::{cat_cochains, validate_category};
use dgcyc::format::parse;
use dgcyc::hochschild::{cochains_of, hh_dim, oversized_cell};
use dgcyc::presentation::Presentation;
use dgcyc::spectral::{Filtration, TriSpectral};

/// Cells above this size are refused; the browser has little patience.
const MAX_CELL: u128 = 20_000;

type Out = Result<Value, String>;

/// Parses, validates and guards the input, returning its cochains.
fn load(source: &str, total: usize) -> Result<(String, std::sync::Arc<Cochains>), String> {
    let p = parse(source).map_err(|e| e.to_string())?;
    let fmt = |d: Vec<dgcyc::dga::Diagnostic>| d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ");
    let (alg, c): (Box<dyn ChainAlgebra>, _) = match &p {
        Presentation::Algebra(a) => {
            let a = validate_dga(a).map_err(fmt)?;
            let c = cochains_of(&a);
            (Box::new(a), c)
        }
        Presentation::Category(x) => {
            let x = validate_category(x).map_err(fmt)?;
            let c = cat_cochains(&x);
            (Box::new(x), c)
        }
    };
    if let Some((k, r, dim)) = oversized_cell(alg.as_ref(), total, total, total, MAX_CELL) {
        return Err(format!(
            "C^{k}_{r} would have {dim} basis functionals; lower the degree"
        ));
    }
    Ok((p.name().to_string(), c))
}

pub fn validate_value(source: &str) -> Value {
    let p = match parse(source) {
        Ok(p) => p,
        Err(e) => return json!({ "ok": false, "errors": [e.to_string()] }),
    };
    let diags = match &p {
        Presentation::Algebra(a) => validate_dga(a).err(),
        Presentation::Category(c) => validate_category(c).err(),
    }
    .unwrap_or_default();
    let errors: Vec<String> = diags.iter().map(|d| format!("[{}] {d}", d.family())).collect();
    json!({ "ok": errors.is_empty(), "name": p.name(), "errors": errors })
}

pub fn cohomology_value(source: &str, max_degree: usize) -> Out {
    let (name, c) = load(source, max_degree + 1)?;
    let hh: Vec<usize> = (0..=max_degree).map(|n| hh_dim(&c, n)).collect();
    Ok(json!({ "name": name, "hh": hh, "hc": hc_dims(&c, max_degree, Method::Tricomplex) }))
}

/// `page < 0` asks for `E_∞`.
pub fn spectral_value(source: &str, filtration: &str, page: i32, max_total: usize) -> Out {
    let f: Filtration = filtration.parse()?;
    let (name, c) = load(source, max_total + 1)?;
    let r = usize::try_from(page).ok();
    let grid = TriSpectral::new(c, f).grid(r, max_total);
    Ok(json!({ "name": name, "filtration": f.name(), "page": r, "grid": grid }))
}

fn to_js(v: Out) -> Result<String, JsError> {
    v.map(|v| v.to_string()).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn validate(source: &str) -> String {
    validate_value(source).to_string()
}

#[wasm_bindgen]
pub fn cohomology(source: &str, max_degree: usize) -> Result<String, JsError> {
    to_js(cohomology_value(source, max_degree))
}

#[wasm_bindgen]
pub fn spectral_page(source: &str, filtration: &str, page: i32, max_total: usize) -> Result<String, JsError> {
    to_js(spectral_value(source, filtration, page, max_total))
}

/// Builtin examples as `[{name, summary, source}]`, to fill the editor.
#[wasm_bindgen]
pub fn examples() -> String {
    let v: Vec<Value> = catalog::ENTRIES
        .iter()
        .map(|e| json!({ "name": e.name, "summary": e.summary, "source": e.source }))
        .collect();
    Value::Array(v).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn source(name: &str) -> &'static str {
        catalog::entry(name).unwrap().source
    }

    #[test]
    fn validates() {
        assert_eq!(validate_value(source("koszul"))["ok"], true);
        let bad = catalog::NEGATIVE_CONTROLS[0].source;
        let v = validate_value(bad);
        assert_eq!(v["ok"], false);
        assert!(v["errors"][0].as_str().unwrap().starts_with("[associativity]"));
        assert_eq!(validate_value("[nonsense]")["ok"], false);
    }

    #[test]
    fn ground_field_cohomology() {
        let v = cohomology_value(source("ground_field"), 4).unwrap();
        assert_eq!(v["hh"], json!([1, 0, 0, 0, 0]));
        assert_eq!(v["hc"], json!([1, 0, 1, 0, 1]));
        let v = cohomology_value(source("a2_path"), 2).unwrap();
        assert_eq!(v["hc"], json!([2, 0, 2]));
    }

    #[test]
    fn pages() {
        let v = spectral_value(source("koszul"), "f1", 2, 3).unwrap();
        assert_eq!(v["grid"][0][0], 1);
        let inf = spectral_value(source("koszul"), "f13", -1, 2).unwrap();
        assert_eq!(inf["page"], Value::Null);
        assert!(spectral_value(source("koszul"), "f9", 1, 2).is_err());
        assert!(cohomology_value(source("dual_numbers"), 40)
            .unwrap_err()
            .contains("lower the degree"));
    }

    #[test]
    fn lists_examples() {
        let v: Value = serde_json::from_str(&examples()).unwrap();
        assert_eq!(v.as_array().unwrap().len(), catalog::ENTRIES.len());
    }
}

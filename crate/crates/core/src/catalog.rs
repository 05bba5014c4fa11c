//! Builtin example algebras and categories, stored in the text format.

use crate::dga::{validate_dga, AxiomFamily, Dga, Diagnostic};
use crate::dgcat::{validate_category, DgCategory};
use crate::format::parse;
use crate::presentation::Presentation;

pub struct Entry {
    pub name: &'static str,
    pub summary: &'static str,
    pub source: &'static str,
}

pub const ENTRIES: &[Entry] = &[
    Entry {
        name: "ground_field",
        summary: "the rationals, one basis element in degree 0",
        source: "[algebra]\nname = ground_field\nbasis = 1:0\nunit = 1\n",
    },
    Entry {
        name: "dual_numbers",
        summary: "k[x]/(x^2) with |x| = 0 and zero differential",
        source: "[algebra]\nname = dual_numbers\nbasis = 1:0, x:0\nunit = 1\n\n[mult]\nx*x = 0\n",
    },
    Entry {
        name: "exterior",
        summary: "exterior algebra on y with |y| = 1 and zero differential",
        source: "[algebra]\nname = exterior\nbasis = 1:0, y:1\nunit = 1\n\n[mult]\ny*y = 0\n",
    },
    Entry {
        name: "truncated",
        summary: "k[x]/(x^3) with |x| = 2 and zero differential",
        source: "[algebra]\nname = truncated\nbasis = 1:0, x:2, x2:4\nunit = 1\n\n[mult]\nx*x = x2\n",
    },
    Entry {
        name: "koszul",
        summary: "Koszul dga of the dual numbers: x in degree 0, y in degree 1, d(y) = x",
        source: "[algebra]\nname = koszul\nbasis = 1:0, x:0, y:1, xy:1\nunit = 1\n\n[mult]\nx*y = xy\ny*x = xy\n\n[diff]\ny = x\n",
    },
    Entry {
        name: "contractible",
        summary: "y in degree 1, x in degree 2, d(y) = 1, d(xy) = x; quasi-isomorphic to 0",
        source: "[algebra]\nname = contractible\nbasis = 1:0, y:1, x:2, xy:3\nunit = 1\n\n[mult]\ny*x = xy\nx*y = xy\n\n[diff]\ny = 1\nxy = x\n",
    },
    Entry {
        name: "a2_path",
        summary: "path category of the quiver 1 -> 2, one arrow in degree 0",
        source: "[category]\nname = a2_path\n\n[objects]\n1 = e1\n2 = e2\n\n[hom 1 1]\nbasis = e1:0\n\n[hom 2 2]\nbasis = e2:0\n\n[hom 1 2]\nbasis = f:0\n",
    },
];

pub const ALGEBRAS: &[&str] = &[
    "ground_field",
    "dual_numbers",
    "exterior",
    "truncated",
    "koszul",
    "contractible",
];

pub const CATEGORIES: &[&str] = &["a2_path"];

/// A presentation with exactly one axiom family broken.
pub struct NegativeControl {
    pub name: &'static str,
    pub broken: AxiomFamily,
    pub source: &'static str,
}

pub const NEGATIVE_CONTROLS: &[NegativeControl] = &[
    NegativeControl {
        name: "non_associative",
        broken: AxiomFamily::Associativity,
        source: "[algebra]\nname = non_associative\nbasis = 1:0, x:0, y:0\nunit = 1\n\n[mult]\nx*x = y\nx*y = y\n",
    },
    NegativeControl {
        name: "not_leibniz",
        broken: AxiomFamily::Leibniz,
        source: "[algebra]\nname = not_leibniz\nbasis = 1:0, x:0, y:1, xy:1\nunit = 1\n\n[mult]\nx*y = xy\ny*x = xy\n\n[diff]\nxy = x\n",
    },
    NegativeControl {
        name: "diff_not_square_zero",
        broken: AxiomFamily::DiffSquare,
        source: "[algebra]\nname = diff_not_square_zero\nbasis = 1:0, u:0, v:1, w:2\nunit = 1\n\n[diff]\nw = v\nv = u\n",
    },
    NegativeControl {
        name: "wrong_degree",
        broken: AxiomFamily::Degree,
        source: "[algebra]\nname = wrong_degree\nbasis = 1:0, y:1\nunit = 1\n\n[mult]\ny*y = 1\n",
    },
    NegativeControl {
        name: "bad_unit",
        broken: AxiomFamily::Unit,
        source: "[algebra]\nname = bad_unit\nbasis = 1:0, x:0\nunit = 1\n\n[mult]\nx*x = 0\n1*x = 0\n",
    },
];

/// Diagnostics of a negative control (empty if it unexpectedly validates).
pub fn negative_control_diagnostics(c: &NegativeControl) -> Vec<Diagnostic> {
    match parse(c.source).expect("negative controls parse") {
        Presentation::Algebra(p) => validate_dga(&p).err().unwrap_or_default(),
        Presentation::Category(p) => validate_category(&p).err().unwrap_or_default(),
    }
}

pub fn entry(name: &str) -> Option<&'static Entry> {
    ENTRIES.iter().find(|e| e.name == name)
}

pub fn presentation(name: &str) -> Option<Presentation> {
    entry(name).map(|e| parse(e.source).expect("builtin entries parse"))
}

pub fn algebra(name: &str) -> Option<Dga> {
    match presentation(name)? {
        Presentation::Algebra(p) => Some(validate_dga(&p).expect("builtin algebras validate")),
        Presentation::Category(_) => None,
    }
}

pub fn category(name: &str) -> Option<DgCategory> {
    match presentation(name)? {
        Presentation::Category(p) => Some(validate_category(&p).expect("builtin categories validate")),
        Presentation::Algebra(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_loads() {
        for name in ALGEBRAS {
            assert!(algebra(name).is_some(), "{name}");
        }
        for name in CATEGORIES {
            assert!(category(name).is_some(), "{name}");
        }
        assert_eq!(ENTRIES.len(), ALGEBRAS.len() + CATEGORIES.len());
    }

    #[test]
    fn each_control_breaks_only_its_family() {
        for c in NEGATIVE_CONTROLS {
            let d = negative_control_diagnostics(c);
            assert!(!d.is_empty(), "{}", c.name);
            assert!(d.iter().all(|x| x.family() == c.broken), "{}: {d:?}", c.name);
        }
    }

    #[test]
    fn ground_field_has_one_basis_element() {
        let Presentation::Algebra(p) = presentation("ground_field").unwrap() else {
            panic!()
        };
        assert_eq!(p.basis.len(), 1);
    }
}

//! Small dg-categories. The cochain machinery is shared with dgas through
//! [`crate::chain::ChainAlgebra`]; this module adds the category type, its
//! validation and per-object-tuple cell bookkeeping.

mod category;
mod pipeline;

pub use category::{validate_category, DgCategory};
pub use pipeline::{
    cat_cochains, eh_cat_cell, f1_ss_cat, hc_cat_dim, hh_cat_dim, union_is_blockwise, CatCell, CatF1Report,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::dga::AxiomFamily;
    use crate::format::parse;
    use crate::presentation::Presentation;

    fn category(src: &str) -> Result<DgCategory, Vec<crate::dga::Diagnostic>> {
        match parse(src).unwrap() {
            Presentation::Category(p) => validate_category(&p),
            Presentation::Algebra(_) => panic!("expected a category"),
        }
    }

    #[test]
    fn catalog_dgas_give_valid_categories() {
        for name in catalog::ALGEBRAS {
            let c = DgCategory::from_dga(&catalog::algebra(name).unwrap());
            assert!(c.check().is_empty(), "{name}");
        }
    }

    #[test]
    fn a2_path_is_valid() {
        let c = catalog::category("a2_path").unwrap();
        assert_eq!(c.objects().len(), 2);
        assert_eq!(c.hom_dims(0, 1), vec![1]);
        assert_eq!(c.hom_dims(1, 0), vec![0]);
        assert_eq!(c.dual_dims(1, 0), vec![1]);
    }

    #[test]
    fn product_of_two_dgas_is_valid() {
        let a = DgCategory::from_dga(&catalog::algebra("exterior").unwrap());
        let b = DgCategory::from_dga(&catalog::algebra("exterior").unwrap());
        let u = a.disjoint_union(&b);
        assert!(u.check().is_empty());
        assert_eq!(u.objects().len(), 2);
        assert!(u.labels().iter().any(|l| l.ends_with('\'')));
    }

    #[test]
    fn composite_in_the_wrong_hom_is_reported() {
        let src = "[category]\nname = bad\n\n[objects]\n1 = e1\n2 = e2\n\n[hom 1 1]\nbasis = e1:0\n\n\
                   [hom 2 2]\nbasis = e2:0\n\n[hom 1 2]\nbasis = f:0\n\n[compose]\ne1*f = e1\n";
        let diags = category(src).unwrap_err();
        assert!(
            diags.iter().any(|d| d.family() == AxiomFamily::Composability),
            "{diags:?}"
        );
    }
}

//! The simplex category normal form and the cosimplicial identities of the
//! Hochschild cochains, checked exhaustively in small degrees.

use std::collections::HashSet;

use dgcyc::catalog;
use dgcyc::dga::delta::{all_morphisms, DeltaMorphism};
use dgcyc::dga::random::random_pool;
use dgcyc::hochschild::cochains_of;
use dgcyc::linalg::RatMatrix;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn every_map_recomposes_from_its_normal_form() {
    for n in 0..=5 {
        for m in 0..=5 {
            let maps = all_morphisms(n, m);
            assert_eq!(maps.len(), binomial(n + m + 1, n + 1), "[{n}] -> [{m}]");
            let mut seen = HashSet::new();
            for f in &maps {
                let fac = f.factorize();
                assert!(fac.eps.windows(2).all(|w| w[0] > w[1]));
                assert!(fac.eta.windows(2).all(|w| w[0] < w[1]));
                assert_eq!(n + fac.eps.len(), m + fac.eta.len());
                assert_eq!(&fac.compose(n), f);
                assert!(
                    seen.insert((fac.eps.clone(), fac.eta.clone())),
                    "factorization not unique"
                );
            }
        }
    }
}

#[test]
fn simplicial_identities_on_maps() {
    for n in 1..=5 {
        for j in 0..=n + 1 {
            for i in 0..j {
                let lhs = DeltaMorphism::coface(n + 1, j).after(&DeltaMorphism::coface(n, i));
                let rhs = DeltaMorphism::coface(n + 1, i).after(&DeltaMorphism::coface(n, j - 1));
                assert_eq!(lhs, rhs);
            }
        }
    }
}

/// Cofaces `C^{n-1} → C^n` and codegeneracies `C^{n+1} → C^n` in one
/// internal degree satisfy the cosimplicial identities as matrices.
fn check_cosimplicial(c: &dgcyc::chain::Cochains, n_max: usize, m: usize) {
    let d = |i: usize, n: usize| c.coface(i, n, m).as_ref().clone();
    let s = |j: usize, n: usize| c.codegeneracy(j, n, m).as_ref().clone();
    for n in 1..n_max {
        for j in 0..=n + 1 {
            for i in 0..j {
                assert_eq!(
                    d(j, n + 1).mul(&d(i, n)),
                    d(i, n + 1).mul(&d(j - 1, n)),
                    "faces n={n} i={i} j={j}"
                );
            }
        }
    }
    for n in 0..n_max {
        for j in 0..=n {
            for i in 0..=j {
                assert_eq!(
                    s(j, n).mul(&s(i, n + 1)),
                    s(i, n).mul(&s(j + 1, n + 1)),
                    "degeneracies n={n}"
                );
            }
        }
    }
    for n in 1..n_max {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = s(j, n).mul(&d(i, n + 1));
                let rhs = if i < j {
                    d(i, n).mul(&s(j - 1, n - 1))
                } else if i == j || i == j + 1 {
                    RatMatrix::identity(c.dim(n, m))
                } else {
                    d(i - 1, n).mul(&s(j, n - 1))
                };
                assert_eq!(lhs, rhs, "mixed n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn cochains_are_cosimplicial_on_the_catalog() {
    for name in catalog::ALGEBRAS {
        let a = catalog::algebra(name).unwrap();
        let c = cochains_of(&a);
        for m in 0..=a.top_degree().min(2) {
            check_cosimplicial(&c, 4, m);
        }
    }
}

#[test]
fn cochains_are_cosimplicial_on_random_dgas() {
    for a in random_pool(99, 8) {
        let c = cochains_of(&a);
        for m in 0..=2 {
            check_cosimplicial(&c, 3, m);
        }
    }
}

//! Seeded random dgas, generated by rejection.
//!
//! A candidate has a unit in degree 0 and up to three further basis
//! elements in degrees `0..=3`. Each non-unit product lands on a single
//! basis element of the right degree with probability about one third, and
//! the differential sends some elements to a multiple of a basis element one
//! degree lower. Candidates failing any axiom are discarded. Survivors get a
//! random unitriangular, degree-preserving change of basis so that structure
//! constants are not all monomial.

use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::matrix::normalize_row;
use crate::linalg::{rat, solve, Rat, RatMatrix, SparseRow};

use super::Dga;

fn coefficient(rng: &mut ChaCha8Rng) -> Rat {
    let c: i64 = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        rat(c)
    } else {
        rat(-c)
    }
}

fn candidate(rng: &mut ChaCha8Rng, name: &str) -> Dga {
    let dim = rng.gen_range(2..=4);
    let mut degrees: Vec<usize> = (1..dim).map(|_| rng.gen_range(0..=3)).collect();
    degrees.sort_unstable();
    degrees.insert(0, 0);
    let labels: Vec<String> = (0..dim)
        .map(|i| if i == 0 { "1".to_string() } else { format!("e{i}") })
        .collect();
    let mut products = Vec::new();
    for i in 0..dim {
        products.push(((0, i), vec![(i, Rat::one())]));
        if i > 0 {
            products.push(((i, 0), vec![(i, Rat::one())]));
        }
    }
    for i in 1..dim {
        for j in 1..dim {
            let d = degrees[i] + degrees[j];
            let targets: Vec<usize> = (1..dim).filter(|&k| degrees[k] == d).collect();
            if !targets.is_empty() && rng.gen_bool(0.35) {
                let k = targets[rng.gen_range(0..targets.len())];
                products.push(((i, j), vec![(k, coefficient(rng))]));
            }
        }
    }
    let mut diff = Vec::new();
    for i in 1..dim {
        if degrees[i] == 0 {
            continue;
        }
        let targets: Vec<usize> = (0..dim).filter(|&k| degrees[k] + 1 == degrees[i]).collect();
        if !targets.is_empty() && rng.gen_bool(0.5) {
            let k = targets[rng.gen_range(0..targets.len())];
            diff.push((i, vec![(k, coefficient(rng))]));
        }
    }
    Dga::from_parts(name, labels, degrees, 0, products, diff)
}

/// Re-expresses `a` in the basis `e'_i = e_i + Σ_{j<i} c_ij e_j`, where `j`
/// ranges over non-unit elements of the same degree.
fn change_basis(a: &Dga, rng: &mut ChaCha8Rng) -> Dga {
    let n = a.dim();
    let mut cols: Vec<SparseRow> = Vec::with_capacity(n);
    for i in 0..n {
        let mut v = vec![(i, Rat::one())];
        if i != a.unit() {
            for j in 0..i {
                if j != a.unit() && a.degree(j) == a.degree(i) && rng.gen_bool(0.5) {
                    v.push((j, coefficient(rng)));
                }
            }
        }
        cols.push(normalize_row(v));
    }
    let t = RatMatrix::from_columns(n, &cols);
    let to_new = |v: &SparseRow| -> SparseRow {
        let rhs = RatMatrix::from_columns(n, std::slice::from_ref(v));
        let x = solve(&t, &rhs).expect("unitriangular change of basis");
        x.column(0)
    };
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let p = a.multiply(&cols[i], &cols[j]);
            products.push(((i, j), to_new(&p)));
        }
    }
    let diff = (0..n).map(|i| (i, to_new(&a.apply_diff(&cols[i])))).collect();
    Dga::from_parts(
        a.name(),
        a.labels().to_vec(),
        a.degrees().to_vec(),
        a.unit(),
        products,
        diff,
    )
}

/// A random valid dga, reproducible from `seed`.
pub fn random_dga(seed: u64) -> Dga {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = format!("random_{seed}");
    loop {
        let c = candidate(&mut rng, &name);
        if c.check().is_empty() {
            let d = change_basis(&c, &mut rng);
            debug_assert!(d.check().is_empty());
            return d;
        }
    }
}

/// `count` random dgas from consecutive seeds starting at `seed`.
pub fn random_pool(seed: u64, count: usize) -> Vec<Dga> {
    (0..count as u64).map(|i| random_dga(seed.wrapping_add(i))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pool_is_valid_and_reproducible() {
        let pool = random_pool(7, 20);
        for a in &pool {
            assert!(a.check().is_empty(), "{}", a.name());
            assert!(a.dim() <= 4 && a.top_degree() <= 3);
        }
        assert_eq!(pool, random_pool(7, 20));
    }

    #[test]
    fn pool_has_nontrivial_structure() {
        let pool = random_pool(1, 20);
        assert!(pool.iter().any(|a| !a.is_formal_zero_diff()));
        assert!(pool.iter().any(|a| a.dim() == 4));
    }
}

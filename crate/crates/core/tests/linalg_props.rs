use dgcyc::linalg::{kernel_basis, rank, rat, solve, subspace_intersection, subspace_sum, RatMatrix, Subspace};

use proptest::prelude::*;

fn matrix(r: usize, c: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(prop_oneof![4 => Just(0i64), 1 => -3i64..=3], r * c).prop_map(move |vals| {
        let mut trip = Vec::new();
        for (k, v) in vals.into_iter().enumerate() {
            if v != 0 {
                trip.push((k / c, k % c, rat(v)));
            }
        }
        RatMatrix::from_triplets(r, c, trip)
    })
}

fn small_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = RatMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| matrix(r, c))
}

fn same_rows(max_rows: usize, max_cols: usize) -> impl Strategy<Value = (RatMatrix, RatMatrix)> {
    (1..=max_rows, 1..=max_cols, 1..=max_cols).prop_flat_map(|(r, c1, c2)| (matrix(r, c1), matrix(r, c2)))
}

#[allow(clippy::needless_range_loop)]
fn dense_rank(m: &RatMatrix) -> usize {
    // Plain textbook elimination on a dense copy, used as an oracle.
    let mut a = m.to_dense();
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| a[i][c] != rat(0)) else {
            continue;
        };
        a.swap(r, p);
        for i in 0..rows {
            if i != r && a[i][c] != rat(0) {
                let f = &a[i][c] / &a[r][c];
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

proptest! {
    #[test]
    fn rank_nullity(m in small_matrix(7, 7)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.dim(), m.ncols());
        prop_assert!(m.mul(k.basis()).is_zero());
        prop_assert_eq!(rank(&m), dense_rank(&m));
    }

    #[test]
    fn rank_is_permutation_invariant(m in small_matrix(6, 6), seed in any::<u64>()) {
        let mut rp: Vec<usize> = (0..m.nrows()).collect();
        let mut cp: Vec<usize> = (0..m.ncols()).collect();
        let mut s = seed;
        for v in [&mut rp, &mut cp] {
            for i in (1..v.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                v.swap(i, (s >> 33) as usize % (i + 1));
            }
        }
        let p = m.permute_rows(&rp).permute_cols(&cp);
        prop_assert_eq!(rank(&p), rank(&m));
    }

    #[test]
    fn sum_intersection_dimension_formula((a, b) in same_rows(5, 4)) {
        let u = Subspace::span(&a);
        let v = Subspace::span(&b);
        let s = subspace_sum(&u, &v).unwrap();
        let i = subspace_intersection(&u, &v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(u.contains(&i) && v.contains(&i));
        prop_assert!(s.contains(&u) && s.contains(&v));
    }

    #[test]
    fn solve_reconstructs((mt, xt) in same_rows(6, 6)) {
        let (m, x) = (mt.transpose(), xt);
        let rhs = m.mul(&x);
        let y = solve(&m, &rhs).expect("consistent system");
        prop_assert_eq!(m.mul(&y), rhs);
    }
}

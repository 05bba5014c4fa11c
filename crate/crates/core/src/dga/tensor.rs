//! Tensor powers `A^{⊗p}` and their differentials.

use crate::chain::ChainBasis;
use crate::linalg::{sign, RatMatrix};

use super::Dga;

/// The `p`-tuples of basis indices with degree sum `q`, lexicographic.
pub fn tensor_power_basis(a: &Dga, p: usize, q: i64) -> ChainBasis {
    assert!(p >= 1, "tensor power needs p >= 1");
    let q = if q < 0 { usize::MAX } else { q as usize };
    ChainBasis::enumerate(a, p, q, false)
}

/// `φ^{⊗p}: (A^{⊗p})_q → (A^{⊗p})_{q-1}` with Koszul signs
/// `(-1)^{|a_1|+…+|a_{i-1}|}` on the `i`-th slot. Columns are sources.
pub fn tensor_diff_matrix(a: &Dga, p: usize, q: usize) -> RatMatrix {
    let src = tensor_power_basis(a, p, q as i64);
    let tgt = tensor_power_basis(a, p, q as i64 - 1);
    let mut trip = Vec::new();
    for (col, t) in src.iter().enumerate() {
        let mut prefix = 0;
        let mut v = t.to_vec();
        for i in 0..p {
            for (k, c) in a.diff_basis(t[i] as usize) {
                v[i] = *k as u32;
                let row = tgt.find(&v).expect("differential lands in the tensor basis");
                trip.push((row, col, sign(prefix) * c));
            }
            v[i] = t[i];
            prefix += a.degree(t[i] as usize);
        }
    }
    RatMatrix::from_triplets(tgt.len(), src.len(), trip)
}

//! Cyclic chains and the cochain operators on them.
//!
//! A dga is a dg-category with one object, so both are handled here through
//! [`ChainAlgebra`]. A cochain of arity `n` and internal degree `m` is a
//! functional on the span of cyclic chains `(a_0, …, a_n)` of total degree
//! `m`, where `a_0: X_n → X_0` and `a_i: X_{i-1} → X_i`. Products are
//! diagrammatic: `a_i a_{i+1}` composes `a_i` first.
//!
//! Operator matrices act on coefficient vectors of cochains. For an
//! operator `T`, row `t` of its matrix lists how `(Tf)(t)` expands over the
//! values of `f` on source chains.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::One;

use crate::linalg::{sign, Rat, RatMatrix};
use crate::par;

/// The structure the cochain operators need: a graded basis of morphisms
/// with sources, targets, identities, composition and differential.
pub trait ChainAlgebra: Send + Sync {
    fn dim(&self) -> usize;
    fn degree(&self, i: usize) -> usize;
    fn max_degree(&self) -> usize;
    fn objects(&self) -> usize;
    fn source(&self, i: usize) -> usize;
    fn target(&self, i: usize) -> usize;
    fn identity(&self, object: usize) -> usize;
    /// `e_i` then `e_j`; only called on composable pairs.
    fn product(&self, i: usize, j: usize) -> &[(usize, Rat)];
    fn diff(&self, i: usize) -> &[(usize, Rat)];
    fn label(&self, i: usize) -> String;
}

/// Lexicographically ordered composable chains of a fixed length and degree.
#[derive(Debug, Clone)]
pub struct ChainBasis {
    len: usize,
    flat: Vec<u32>,
    index: HashMap<Box<[u32]>, usize>,
}

impl ChainBasis {
    /// Chains of `len` basis elements with degree sum `degree`. When
    /// `cyclic`, the last element must also compose with the first.
    pub fn enumerate(alg: &dyn ChainAlgebra, len: usize, degree: usize, cyclic: bool) -> Self {
        let mut flat = Vec::new();
        if len > 0 && degree <= len * alg.max_degree() {
            let mut cur = Vec::with_capacity(len);
            extend(alg, len, degree, cyclic, &mut cur, &mut flat);
        }
        let index = flat
            .chunks(len.max(1))
            .enumerate()
            .map(|(i, c)| (c.to_vec().into_boxed_slice(), i))
            .collect();
        ChainBasis { len, flat, index }
    }

    pub fn len(&self) -> usize {
        self.flat.len().checked_div(self.len).unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.flat.is_empty()
    }

    pub fn chain_len(&self) -> usize {
        self.len
    }

    pub fn chain(&self, i: usize) -> &[u32] {
        &self.flat[i * self.len..(i + 1) * self.len]
    }

    pub fn find(&self, chain: &[u32]) -> Option<usize> {
        self.index.get(chain).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = &[u32]> {
        self.flat.chunks(self.len.max(1))
    }
}

fn extend(alg: &dyn ChainAlgebra, len: usize, remaining: usize, cyclic: bool, cur: &mut Vec<u32>, out: &mut Vec<u32>) {
    let pos = cur.len();
    if pos == len {
        if remaining == 0 {
            let closes = !cyclic || alg.target(cur[len - 1] as usize) == alg.source(cur[0] as usize);
            if closes {
                out.extend_from_slice(cur);
            }
        }
        return;
    }
    let slots_after = len - pos - 1;
    for i in 0..alg.dim() {
        let d = alg.degree(i);
        if d > remaining || remaining - d > slots_after * alg.max_degree() {
            continue;
        }
        if pos > 0 && alg.target(cur[pos - 1] as usize) != alg.source(i) {
            continue;
        }
        cur.push(i as u32);
        extend(alg, len, remaining - d, cyclic, cur, out);
        cur.pop();
    }
}

/// Number of cyclic chains of `len` elements and degree `degree`, counted
/// without enumerating them.
pub fn count_cyclic_chains(alg: &dyn ChainAlgebra, len: usize, degree: usize) -> u128 {
    if len == 0 {
        return 0;
    }
    let objs = alg.objects();
    let mut total = 0u128;
    for start in 0..objs {
        // ways[obj][deg]: partial chains that begin at `start`.
        let mut ways = vec![vec![0u128; degree + 1]; objs];
        ways[start][0] = 1;
        for _ in 0..len {
            let mut next = vec![vec![0u128; degree + 1]; objs];
            for i in 0..alg.dim() {
                let (s, t, d) = (alg.source(i), alg.target(i), alg.degree(i));
                for k in 0..=degree.saturating_sub(d) {
                    if d + k <= degree && ways[s][k] > 0 {
                        next[t][k + d] += ways[s][k];
                    }
                }
            }
            ways = next;
        }
        total += ways[start][degree];
    }
    total
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Op {
    Coface(usize),
    Codegeneracy(usize),
    B,
    BPrime,
    Lambda,
    Delta,
}

/// Cochain spaces of a chain algebra with cached operator matrices.
///
/// `n` always denotes the arity index: `C^n` lives on chains of `n + 1`
/// elements.
pub struct Cochains {
    alg: Arc<dyn ChainAlgebra>,
    bases: Mutex<HashMap<(usize, usize), Arc<ChainBasis>>>,
    ops: Mutex<HashMap<(Op, usize, usize), Arc<RatMatrix>>>,
}

impl Cochains {
    pub fn new(alg: Arc<dyn ChainAlgebra>) -> Self {
        Cochains {
            alg,
            bases: Mutex::new(HashMap::new()),
            ops: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &dyn ChainAlgebra {
        &*self.alg
    }

    pub fn max_degree(&self) -> usize {
        self.alg.max_degree()
    }

    pub fn basis(&self, n: usize, m: usize) -> Arc<ChainBasis> {
        if let Some(b) = self.bases.lock().unwrap().get(&(n, m)) {
            return b.clone();
        }
        let b = Arc::new(ChainBasis::enumerate(&*self.alg, n + 1, m, true));
        self.bases.lock().unwrap().entry((n, m)).or_insert(b).clone()
    }

    pub fn dim(&self, n: usize, m: usize) -> usize {
        self.basis(n, m).len()
    }

    fn cached(&self, key: (Op, usize, usize), build: impl FnOnce() -> RatMatrix) -> Arc<RatMatrix> {
        if let Some(m) = self.ops.lock().unwrap().get(&key) {
            return m.clone();
        }
        let m = Arc::new(build());
        self.ops.lock().unwrap().entry(key).or_insert(m).clone()
    }

    /// Builds a matrix row by row over the chains of the target space.
    fn rows<F>(&self, target: &ChainBasis, source: &ChainBasis, expand: F) -> RatMatrix
    where
        F: Fn(&[u32], &mut Vec<(usize, Rat)>) + Sync + Send,
    {
        let rows = par::map_range(target.len(), |t| {
            let mut out = Vec::new();
            expand(target.chain(t), &mut out);
            out
        });
        RatMatrix::from_rows(source.len(), rows)
    }

    fn deg(&self, i: u32) -> usize {
        self.alg.degree(i as usize)
    }

    /// `∂^i: C^{n-1} → C^n` for `0 ≤ i ≤ n`. The last coface rotates the
    /// final element to the front with the sign `(-1)^{|a_n|(|a_0|+…+|a_{n-1}|)}`.
    pub fn coface(&self, i: usize, n: usize, m: usize) -> Arc<RatMatrix> {
        assert!(n >= 1 && i <= n, "coface index out of range");
        self.cached((Op::Coface(i), n, m), || {
            let tb = self.basis(n, m);
            let sb = self.basis(n - 1, m);
            self.rows(&tb, &sb, |a, out| {
                let mut src: Vec<u32> = Vec::with_capacity(n);
                if i < n {
                    for (k, c) in self.alg.product(a[i] as usize, a[i + 1] as usize) {
                        src.clear();
                        src.extend_from_slice(&a[..i]);
                        src.push(*k as u32);
                        src.extend_from_slice(&a[i + 2..]);
                        let j = sb.find(&src).expect("coface source chain");
                        out.push((j, c.clone()));
                    }
                } else {
                    let head: usize = a[..n].iter().map(|&x| self.deg(x)).sum();
                    let s = sign(self.deg(a[n]) * head);
                    for (k, c) in self.alg.product(a[n] as usize, a[0] as usize) {
                        src.clear();
                        src.push(*k as u32);
                        src.extend_from_slice(&a[1..n]);
                        let j = sb.find(&src).expect("coface source chain");
                        out.push((j, &s * c));
                    }
                }
            })
        })
    }

    /// `σ^i: C^{n+1} → C^n`, inserting an identity after position `i`.
    pub fn codegeneracy(&self, i: usize, n: usize, m: usize) -> Arc<RatMatrix> {
        assert!(i <= n, "codegeneracy index out of range");
        self.cached((Op::Codegeneracy(i), n, m), || {
            let tb = self.basis(n, m);
            let sb = self.basis(n + 1, m);
            self.rows(&tb, &sb, |a, out| {
                let id = self.alg.identity(self.alg.target(a[i] as usize)) as u32;
                let mut src = Vec::with_capacity(n + 2);
                src.extend_from_slice(&a[..=i]);
                src.push(id);
                src.extend_from_slice(&a[i + 1..]);
                let j = sb.find(&src).expect("codegeneracy source chain");
                out.push((j, Rat::one()));
            })
        })
    }

    /// Hochschild coboundary `b: C^n → C^{n+1}`.
    pub fn b(&self, n: usize, m: usize) -> Arc<RatMatrix> {
        self.cached((Op::B, n, m), || self.alternating(n, m, n + 1))
    }

    /// `b′: C^n → C^{n+1}`, the coboundary without its last coface.
    pub fn b_prime(&self, n: usize, m: usize) -> Arc<RatMatrix> {
        self.cached((Op::BPrime, n, m), || self.alternating(n, m, n))
    }

    fn alternating(&self, n: usize, m: usize, last: usize) -> RatMatrix {
        let mut acc = RatMatrix::zeros(self.dim(n + 1, m), self.dim(n, m));
        for i in 0..=last {
            acc = acc.lin_comb(&Rat::one(), &self.coface(i, n + 1, m), &sign(i));
        }
        acc
    }

    /// Extra codegeneracy `s = (-1)^n σ^n: C^{n+1} → C^n`.
    pub fn s(&self, n: usize, m: usize) -> RatMatrix {
        self.codegeneracy(n, n, m).scale(&sign(n))
    }

    /// Cyclic operator `Λ` on `C^n`:
    /// `Λf(a_0,…,a_n) = (-1)^{|a_n|(|a_0|+…+|a_{n-1}|)+n} f(a_n, a_0, …, a_{n-1})`.
    pub fn lambda(&self, n: usize, m: usize) -> Arc<RatMatrix> {
        self.cached((Op::Lambda, n, m), || {
            let b = self.basis(n, m);
            self.rows(&b, &b, |a, out| {
                let head: usize = a[..n].iter().map(|&x| self.deg(x)).sum();
                let s = sign(self.deg(a[n]) * head + n);
                let mut src = Vec::with_capacity(n + 1);
                src.push(a[n]);
                src.extend_from_slice(&a[..n]);
                out.push((b.find(&src).expect("rotated chain"), s));
            })
        })
    }

    /// Internal differential `δ: C^n_m → C^n_{m+1}`,
    /// `δf(a) = (-1)^m Σ_i (-1)^{|a_0|+…+|a_{i-1}|} f(…, φ(a_i), …)`.
    pub fn delta(&self, n: usize, m: usize) -> Arc<RatMatrix> {
        self.cached((Op::Delta, n, m), || {
            let tb = self.basis(n, m + 1);
            let sb = self.basis(n, m);
            let outer = sign(m);
            self.rows(&tb, &sb, |a, out| {
                let mut prefix = 0usize;
                let mut src = a.to_vec();
                for i in 0..a.len() {
                    let s = &outer * sign(prefix);
                    for (k, c) in self.alg.diff(a[i] as usize) {
                        src[i] = *k as u32;
                        let j = sb.find(&src).expect("differential source chain");
                        out.push((j, &s * c));
                    }
                    src[i] = a[i];
                    prefix += self.deg(a[i]);
                }
            })
        })
    }

    /// `∇ = Σ_{i=0}^{n} Λ^i` from a given `Λ`.
    pub fn norm_of(lambda: &RatMatrix, n: usize) -> RatMatrix {
        let size = lambda.nrows();
        let mut acc = RatMatrix::zeros(size, size);
        let mut pow = RatMatrix::identity(size);
        for _ in 0..=n {
            acc = acc.add(&pow);
            pow = pow.mul(lambda);
        }
        acc
    }

    /// `H = (1/(n+1)) Σ_{i=0}^{n} (i+1) Λ^i` from a given `Λ`.
    pub fn homotopy_of(lambda: &RatMatrix, n: usize) -> RatMatrix {
        let size = lambda.nrows();
        let mut acc = RatMatrix::zeros(size, size);
        let mut pow = RatMatrix::identity(size);
        for i in 0..=n {
            acc = acc.lin_comb(&Rat::one(), &pow, &Rat::from_integer((i as i64 + 1).into()));
            pow = pow.mul(lambda);
        }
        acc.scale(&(Rat::one() / Rat::from_integer((n as i64 + 1).into())))
    }

    pub fn norm(&self, n: usize, m: usize) -> RatMatrix {
        Self::norm_of(&self.lambda(n, m), n)
    }

    pub fn homotopy(&self, n: usize, m: usize) -> RatMatrix {
        Self::homotopy_of(&self.lambda(n, m), n)
    }

    pub fn one_minus_lambda(&self, n: usize, m: usize) -> RatMatrix {
        let l = self.lambda(n, m);
        RatMatrix::identity(l.nrows()).sub(&l)
    }

    /// Connes' operator `B = ∇ s (1-Λ): C^n → C^{n-1}` for `n ≥ 1`.
    pub fn connes_b(&self, n: usize, m: usize) -> RatMatrix {
        assert!(n >= 1, "B is defined on positive arity");
        self.norm(n - 1, m)
            .mul(&self.s(n - 1, m))
            .mul(&self.one_minus_lambda(n, m))
    }

    /// `s(1-Λ): C^n → C^{n-1}`, the second component of the comparison map
    /// from the tricomplex to the cyclic bicomplex.
    pub fn s_one_minus_lambda(&self, n: usize, m: usize) -> RatMatrix {
        self.s(n - 1, m).mul(&self.one_minus_lambda(n, m))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn ground_field_operators() {
        let k = Cochains::new(Arc::new(catalog::algebra("ground_field").unwrap()));
        assert!(k.b(0, 0).is_zero());
        assert_eq!(*k.b(1, 0), RatMatrix::identity(1));
        assert_eq!(*k.lambda(0, 0), RatMatrix::identity(1));
        assert_eq!(*k.lambda(1, 0), RatMatrix::identity(1).neg());
        assert_eq!(*k.coface(0, 1, 0), RatMatrix::identity(1));
    }

    #[test]
    fn counts_match_enumeration() {
        for name in catalog::ALGEBRAS {
            let a = catalog::algebra(name).unwrap();
            for len in 1..5 {
                for d in 0..6 {
                    let b = ChainBasis::enumerate(&a, len, d, true);
                    assert_eq!(count_cyclic_chains(&a, len, d), b.len() as u128);
                }
            }
        }
        let c = catalog::category("a2_path").unwrap();
        for len in 1..5 {
            let b = ChainBasis::enumerate(&c, len, 0, true);
            assert_eq!(count_cyclic_chains(&c, len, 0), b.len() as u128);
        }
    }
}

//! Morphisms of the simplex category and their normal form.
//!
//! `[n] = {0, …, n}`. The coface `ε^i: [n-1] → [n]` skips `i`; the
//! codegeneracy `η^j: [n+1] → [n]` hits `j` twice. Every non-decreasing map
//! factors uniquely as `ε^{i_1}⋯ε^{i_k} η^{j_1}⋯η^{j_s}` with
//! `i_1 > … > i_k` and `j_1 < … < j_s`; the rightmost factor acts first.

use serde::Serialize;

/// A non-decreasing map `[n] → [m]` given by its values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct DeltaMorphism {
    pub m: usize,
    pub values: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Factorization {
    /// Coface indices, descending.
    pub eps: Vec<usize>,
    /// Codegeneracy indices, ascending.
    pub eta: Vec<usize>,
}

impl DeltaMorphism {
    /// `None` unless the values are non-decreasing and at most `m`.
    pub fn new(m: usize, values: Vec<usize>) -> Option<Self> {
        let ok = !values.is_empty() && values.windows(2).all(|w| w[0] <= w[1]) && values.iter().all(|&v| v <= m);
        ok.then_some(DeltaMorphism { m, values })
    }

    pub fn identity(n: usize) -> Self {
        DeltaMorphism {
            m: n,
            values: (0..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.values.len() - 1
    }

    pub fn coface(n: usize, i: usize) -> Self {
        assert!(n >= 1 && i <= n);
        DeltaMorphism {
            m: n,
            values: (0..n).map(|x| if x < i { x } else { x + 1 }).collect(),
        }
    }

    pub fn codegeneracy(n: usize, j: usize) -> Self {
        assert!(j <= n);
        DeltaMorphism {
            m: n,
            values: (0..n + 2).map(|x| if x <= j { x } else { x - 1 }).collect(),
        }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &DeltaMorphism) -> DeltaMorphism {
        assert_eq!(first.m, self.n(), "composition of incompatible maps");
        DeltaMorphism {
            m: self.m,
            values: first.values.iter().map(|&v| self.values[v]).collect(),
        }
    }

    pub fn factorize(&self) -> Factorization {
        let image: Vec<bool> = {
            let mut hit = vec![false; self.m + 1];
            for &v in &self.values {
                hit[v] = true;
            }
            hit
        };
        let eps = (0..=self.m).rev().filter(|&i| !image[i]).collect();
        let eta = (0..self.n())
            .filter(|&j| self.values[j] == self.values[j + 1])
            .collect();
        Factorization { eps, eta }
    }
}

impl Factorization {
    /// Rebuilds the map `[n] → [m]` from its factors.
    pub fn compose(&self, n: usize) -> DeltaMorphism {
        let mut f = DeltaMorphism::identity(n);
        let mut cur = n;
        for &j in self.eta.iter().rev() {
            let eta = DeltaMorphism::codegeneracy(cur - 1, j);
            f = eta.after(&f);
            cur -= 1;
        }
        for &i in self.eps.iter().rev() {
            let eps = DeltaMorphism::coface(cur + 1, i);
            f = eps.after(&f);
            cur += 1;
        }
        f
    }
}

/// All non-decreasing maps `[n] → [m]`.
pub fn all_morphisms(n: usize, m: usize) -> Vec<DeltaMorphism> {
    fn go(n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<DeltaMorphism>) {
        if cur.len() == n + 1 {
            out.push(DeltaMorphism { m, values: cur.clone() });
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=m {
            cur.push(v);
            go(n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, m, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_has_empty_factorization() {
        let f = DeltaMorphism::identity(3).factorize();
        assert!(f.eps.is_empty() && f.eta.is_empty());
    }

    #[test]
    fn worked_example() {
        let f = DeltaMorphism::new(5, vec![0, 2, 2, 4, 4]).unwrap();
        let fac = f.factorize();
        assert_eq!(fac.eps, vec![5, 3, 1]);
        assert_eq!(fac.eta, vec![1, 3]);
        assert_eq!(fac.compose(4), f);
    }

    #[test]
    fn constant_map() {
        let f = DeltaMorphism::new(0, vec![0, 0, 0]).unwrap();
        let fac = f.factorize();
        assert!(fac.eps.is_empty());
        assert_eq!(fac.eta, vec![0, 1]);
        let g = fac.compose(2);
        for x in 0..=2 {
            assert_eq!(g.values[x], 0);
        }
    }

    #[test]
    fn rejects_decreasing() {
        assert!(DeltaMorphism::new(3, vec![1, 0]).is_none());
        assert!(DeltaMorphism::new(1, vec![0, 2]).is_none());
    }
}

//! The cocyclic operators and the identities they satisfy.
//!
//! [`CyclicOps`] supplies `b`, `b′`, `δ`, `s` and `Λ`; the derived operators
//! `∇`, `B` and `H` are always built from the supplied `Λ`, so a faulty `Λ`
//! propagates exactly where it should.

use std::sync::Arc;

use num_traits::One;
use serde::Serialize;

use crate::chain::Cochains;
use crate::linalg::{sign, Rat, RatMatrix};

pub trait CyclicOps: Sync {
    fn cochains(&self) -> &Cochains;

    fn lambda(&self, n: usize, m: usize) -> RatMatrix {
        (*self.cochains().lambda(n, m)).clone()
    }

    fn b(&self, n: usize, m: usize) -> RatMatrix {
        (*self.cochains().b(n, m)).clone()
    }

    fn b_prime(&self, n: usize, m: usize) -> RatMatrix {
        (*self.cochains().b_prime(n, m)).clone()
    }

    fn delta(&self, n: usize, m: usize) -> RatMatrix {
        (*self.cochains().delta(n, m)).clone()
    }

    /// `s: C^{n+1} → C^n`.
    fn s(&self, n: usize, m: usize) -> RatMatrix {
        self.cochains().s(n, m)
    }

    fn norm(&self, n: usize, m: usize) -> RatMatrix {
        Cochains::norm_of(&self.lambda(n, m), n)
    }

    fn homotopy(&self, n: usize, m: usize) -> RatMatrix {
        Cochains::homotopy_of(&self.lambda(n, m), n)
    }

    fn one_minus_lambda(&self, n: usize, m: usize) -> RatMatrix {
        let l = self.lambda(n, m);
        RatMatrix::identity(l.nrows()).sub(&l)
    }

    /// `B = ∇ s (1-Λ): C^n → C^{n-1}`.
    fn connes_b(&self, n: usize, m: usize) -> RatMatrix {
        self.norm(n - 1, m)
            .mul(&self.s(n - 1, m))
            .mul(&self.one_minus_lambda(n, m))
    }
}

/// The operators as defined.
pub struct Standard(pub Arc<Cochains>);

impl CyclicOps for Standard {
    fn cochains(&self) -> &Cochains {
        &self.0
    }
}

/// `Λ` with the factor `(-1)^n` dropped; everything else untouched.
pub struct SignMutatedLambda(pub Arc<Cochains>);

impl CyclicOps for SignMutatedLambda {
    fn cochains(&self) -> &Cochains {
        &self.0
    }

    fn lambda(&self, n: usize, m: usize) -> RatMatrix {
        self.0.lambda(n, m).scale(&sign(n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Identity {
    BSquared,
    BPrimeSquared,
    DeltaSquared,
    TotalSquared,
    LambdaPower,
    LambdaIntertwinesB,
    NormIntertwinesB,
    NormKillsOneMinusLambda,
    ExtraDegeneracy,
    ConnesSquared,
    ConnesAnticommutesB,
    DeltaCommutesConnes,
    DeltaCommutesS,
    NormHomotopy,
}

impl Identity {
    pub const ALL: [Identity; 14] = [
        Identity::BSquared,
        Identity::BPrimeSquared,
        Identity::DeltaSquared,
        Identity::TotalSquared,
        Identity::LambdaPower,
        Identity::LambdaIntertwinesB,
        Identity::NormIntertwinesB,
        Identity::NormKillsOneMinusLambda,
        Identity::ExtraDegeneracy,
        Identity::ConnesSquared,
        Identity::ConnesAnticommutesB,
        Identity::DeltaCommutesConnes,
        Identity::DeltaCommutesS,
        Identity::NormHomotopy,
    ];

    pub fn formula(self) -> &'static str {
        match self {
            Identity::BSquared => "b b = 0",
            Identity::BPrimeSquared => "b' b' = 0",
            Identity::DeltaSquared => "δ δ = 0",
            Identity::TotalSquared => "d d = 0",
            Identity::LambdaPower => "Λ^(p+1) = 1",
            Identity::LambdaIntertwinesB => "(1-Λ) b = b' (1-Λ)",
            Identity::NormIntertwinesB => "∇ b' = b ∇",
            Identity::NormKillsOneMinusLambda => "∇ (1-Λ) = (1-Λ) ∇ = 0",
            Identity::ExtraDegeneracy => "b' s + s b' = 1",
            Identity::ConnesSquared => "B B = 0",
            Identity::ConnesAnticommutesB => "b B + B b = 0",
            Identity::DeltaCommutesConnes => "δ B = B δ",
            Identity::DeltaCommutesS => "δ s = s δ",
            Identity::NormHomotopy => "∇/(p+1) - (1-Λ) H = 1",
        }
    }

    /// Whether the identity involves `Λ` (directly or through `∇`, `B`, `H`).
    pub fn involves_lambda(self) -> bool {
        !matches!(
            self,
            Identity::BSquared
                | Identity::BPrimeSquared
                | Identity::DeltaSquared
                | Identity::TotalSquared
                | Identity::ExtraDegeneracy
                | Identity::DeltaCommutesS
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub identity: Identity,
    pub p: usize,
    pub q: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }

    /// Identities failing somewhere, without repetition.
    pub fn failed_identities(&self) -> Vec<Identity> {
        let mut v: Vec<Identity> = self.failures().map(|c| c.identity).collect();
        v.sort();
        v.dedup();
        v
    }
}

fn eq_identity(m: &RatMatrix) -> bool {
    *m == RatMatrix::identity(m.nrows())
}

/// Evaluates one identity on `C^p_q` (the source of its left-hand side).
pub fn check_identity(ops: &dyn CyclicOps, id: Identity, p: usize, q: usize) -> bool {
    let one = Rat::one();
    match id {
        Identity::BSquared => ops.b(p + 1, q).mul(&ops.b(p, q)).is_zero(),
        Identity::BPrimeSquared => ops.b_prime(p + 1, q).mul(&ops.b_prime(p, q)).is_zero(),
        Identity::DeltaSquared => ops.delta(p, q + 1).mul(&ops.delta(p, q)).is_zero(),
        Identity::TotalSquared => {
            // Components of d² = (b + (-1)^p δ)² leaving the cell (p, q).
            let bb = ops.b(p + 1, q).mul(&ops.b(p, q));
            let mixed = ops.delta(p + 1, q).mul(&ops.b(p, q)).lin_comb(
                &sign(p + 1),
                &ops.b(p, q + 1).mul(&ops.delta(p, q)),
                &sign(p),
            );
            let dd = ops.delta(p, q + 1).mul(&ops.delta(p, q));
            bb.is_zero() && mixed.is_zero() && dd.is_zero()
        }
        Identity::LambdaPower => eq_identity(&ops.lambda(p, q).pow(p + 1)),
        Identity::LambdaIntertwinesB => {
            let l = ops.one_minus_lambda(p + 1, q).mul(&ops.b(p, q));
            let r = ops.b_prime(p, q).mul(&ops.one_minus_lambda(p, q));
            l == r
        }
        Identity::NormIntertwinesB => {
            let l = ops.norm(p + 1, q).mul(&ops.b_prime(p, q));
            let r = ops.b(p, q).mul(&ops.norm(p, q));
            l == r
        }
        Identity::NormKillsOneMinusLambda => {
            let (n, t) = (ops.norm(p, q), ops.one_minus_lambda(p, q));
            n.mul(&t).is_zero() && t.mul(&n).is_zero()
        }
        Identity::ExtraDegeneracy => {
            let mut acc = ops.s(p, q).mul(&ops.b_prime(p, q));
            if p > 0 {
                acc = acc.add(&ops.b_prime(p - 1, q).mul(&ops.s(p - 1, q)));
            }
            eq_identity(&acc)
        }
        Identity::ConnesSquared => p < 2 || ops.connes_b(p - 1, q).mul(&ops.connes_b(p, q)).is_zero(),
        Identity::ConnesAnticommutesB => {
            let mut acc = ops.connes_b(p + 1, q).mul(&ops.b(p, q));
            if p > 0 {
                acc = acc.add(&ops.b(p - 1, q).mul(&ops.connes_b(p, q)));
            }
            acc.is_zero()
        }
        Identity::DeltaCommutesConnes => {
            p == 0 || {
                let l = ops.delta(p - 1, q).mul(&ops.connes_b(p, q));
                let r = ops.connes_b(p, q + 1).mul(&ops.delta(p, q));
                l == r
            }
        }
        Identity::DeltaCommutesS => {
            let l = ops.delta(p, q).mul(&ops.s(p, q));
            let r = ops.s(p, q + 1).mul(&ops.delta(p + 1, q));
            l == r
        }
        Identity::NormHomotopy => {
            let inv = one / Rat::from_integer((p as i64 + 1).into());
            let lhs = ops
                .norm(p, q)
                .lin_comb(&inv, &ops.one_minus_lambda(p, q).mul(&ops.homotopy(p, q)), &-Rat::one());
            eq_identity(&lhs)
        }
    }
}

/// Every identity on every `C^p_q` with `p ≤ p_max`, `q ≤ q_max`.
pub fn verify_cocyclic_identities(ops: &dyn CyclicOps, p_max: usize, q_max: usize) -> IdentityReport {
    let cells: Vec<(Identity, usize, usize)> = Identity::ALL
        .iter()
        .flat_map(|&id| (0..=p_max).flat_map(move |p| (0..=q_max).map(move |q| (id, p, q))))
        .collect();
    let checks = crate::par::map_range(cells.len(), |i| {
        let (identity, p, q) = cells[i];
        IdentityCheck {
            identity,
            p,
            q,
            holds: check_identity(ops, identity, p, q),
        }
    });
    IdentityReport { checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::hochschild::cochains_of;

    #[test]
    fn ground_field_passes() {
        let c = cochains_of(&catalog::algebra("ground_field").unwrap());
        let r = verify_cocyclic_identities(&Standard(c), 4, 4);
        assert!(r.all_hold(), "{:?}", r.failed_identities());
    }

    #[test]
    fn koszul_passes() {
        let c = cochains_of(&catalog::algebra("koszul").unwrap());
        let r = verify_cocyclic_identities(&Standard(c), 3, 3);
        assert!(r.all_hold(), "{:?}", r.failed_identities());
    }

    #[test]
    fn ground_field_connes_operator() {
        let c = cochains_of(&catalog::algebra("ground_field").unwrap());
        let ops = Standard(c);
        // Λ = -1 on C^1, so 1-Λ = 2, s = 1 and B = 2.
        assert_eq!(ops.connes_b(1, 0), RatMatrix::scalar(1, &Rat::from_integer(2.into())));
        let bb = ops
            .b(0, 0)
            .mul(&ops.connes_b(1, 0))
            .add(&ops.connes_b(2, 0).mul(&ops.b(1, 0)));
        assert!(bb.is_zero());
    }

    #[test]
    fn mutated_lambda_breaks_only_lambda_identities() {
        let c = cochains_of(&catalog::algebra("dual_numbers").unwrap());
        let r = verify_cocyclic_identities(&SignMutatedLambda(c), 3, 0);
        let failed = r.failed_identities();
        assert!(!failed.is_empty());
        assert!(failed.iter().all(|id| id.involves_lambda()), "{failed:?}");
    }
}

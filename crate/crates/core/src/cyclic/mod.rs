//! Cyclic cohomology: operators, the tricomplex `EC`, the cyclic bicomplex
//! `CC_dg`, the subcomplex `C_Λ`, partial cyclic cohomology, and the
//! comparison between all of them.

pub mod complexes;
pub mod lambda;
pub mod operators;

use std::sync::Arc;

use serde::Serialize;

use crate::chain::Cochains;
use crate::complex::{self, Complex};
use crate::linalg::rank;

pub use complexes::{odd_homotopy, phi, psi, CcComplex, EcComplex, HcpComplex};
pub use lambda::{CLambdaComplex, LambdaSequence, RestrictionFailure};
pub use operators::{verify_cocyclic_identities, CyclicOps, Identity, IdentityReport, SignMutatedLambda, Standard};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Cohomology of `T(EC)`.
    Tricomplex,
    /// Cohomology of `T(C_Λ)`.
    Lambda,
    /// Cohomology of `T(CC_dg)`.
    Bicomplex,
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "tricomplex" => Ok(Method::Tricomplex),
            "lambda" => Ok(Method::Lambda),
            "bicomplex" => Ok(Method::Bicomplex),
            _ => Err(format!("unknown method `{s}` (tricomplex, lambda, bicomplex)")),
        }
    }
}

pub fn hc_dim(c: &Arc<Cochains>, n: usize, method: Method) -> usize {
    match method {
        Method::Tricomplex => complex::cohomology_dim(&EcComplex::new(c.clone()), n),
        Method::Lambda => complex::cohomology_dim(&CLambdaComplex::new(c.clone()), n),
        Method::Bicomplex => complex::cohomology_dim(&CcComplex::new(c.clone()), n),
    }
}

/// `HC^0..=HC^max` by one method, sharing the complex between degrees.
pub fn hc_dims(c: &Arc<Cochains>, max: usize, method: Method) -> Vec<usize> {
    match method {
        Method::Tricomplex => complex::cohomology_dims(&EcComplex::new(c.clone()), max),
        Method::Lambda => complex::cohomology_dims(&CLambdaComplex::new(c.clone()), max),
        Method::Bicomplex => complex::cohomology_dims(&CcComplex::new(c.clone()), max),
    }
}

/// Partial cyclic cohomology `HCP^n_m`.
pub fn hcp_dim(c: &Arc<Cochains>, n: usize, internal: usize) -> usize {
    if internal > (n + 1) * c.max_degree() {
        return 0;
    }
    complex::cohomology_dim(&HcpComplex::new(c.clone(), internal), n)
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiIsoDegree {
    pub n: usize,
    pub ec: usize,
    pub cc: usize,
    pub c_lambda: usize,
    pub odd: usize,
    pub psi_chain_map: bool,
    pub phi_chain_map: bool,
    pub psi_injective: bool,
    pub phi_surjective: bool,
    pub exact_in_middle: bool,
    pub homotopy_identity: bool,
}

impl QuasiIsoDegree {
    pub fn all_hold(&self) -> bool {
        self.ec == self.cc
            && self.cc == self.c_lambda
            && self.odd == 0
            && self.psi_chain_map
            && self.phi_chain_map
            && self.psi_injective
            && self.phi_surjective
            && self.exact_in_middle
            && self.homotopy_identity
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct QuasiIsoReport {
    pub degrees: Vec<QuasiIsoDegree>,
}

impl QuasiIsoReport {
    pub fn all_hold(&self) -> bool {
        self.degrees.iter().all(QuasiIsoDegree::all_hold)
    }
}

/// Compares `T(EC)`, `T(CC_dg)` and `T(C_Λ)` in degrees `0..=n_max` and
/// checks the maps of `0 → T(EC) → T(CC_dg) → T(CC^O) → 0` together with
/// the contracting homotopy of `T(CC^O)`.
pub fn quasi_iso_suite(c: &Arc<Cochains>, n_max: usize) -> QuasiIsoReport {
    let ec = EcComplex::new(c.clone());
    let cc = CcComplex::new(c.clone());
    let odd = CcComplex::odd(c.clone());
    let cl = CLambdaComplex::new(c.clone());
    let mut degrees = Vec::new();
    for n in 0..=n_max {
        let (psi_n, psi_next) = (psi(&ec, &cc, n), psi(&ec, &cc, n + 1));
        let (phi_n, phi_next) = (phi(&cc, &odd, n), phi(&cc, &odd, n + 1));
        let psi_chain_map = complex::commutes(&psi_n, &psi_next, &ec.differential(n), &cc.differential(n));
        let phi_chain_map = complex::commutes(&phi_n, &phi_next, &cc.differential(n), &odd.differential(n));
        let psi_rank = rank(&psi_n);
        let phi_rank = rank(&phi_n);
        let psi_injective = psi_rank == psi_n.ncols();
        let phi_surjective = phi_rank == phi_n.nrows();
        // im Ψ ⊆ ker Φ and the dimensions match.
        let exact_in_middle = phi_n.mul(&psi_n).is_zero() && psi_rank == phi_n.ncols() - phi_rank;
        let h_n = odd_homotopy(&odd, n);
        let h_next = odd_homotopy(&odd, n + 1);
        let mut dh = odd.differential(n).as_ref().clone();
        dh = h_next.mul(&dh);
        if n > 0 {
            dh = dh.add(&odd.differential(n - 1).mul(&h_n));
        }
        let homotopy_identity = dh == crate::linalg::RatMatrix::identity(odd.layout(n).dim());
        degrees.push(QuasiIsoDegree {
            n,
            ec: complex::cohomology_dim(&ec, n),
            cc: complex::cohomology_dim(&cc, n),
            c_lambda: complex::cohomology_dim(&cl, n),
            odd: complex::cohomology_dim(&odd, n),
            psi_chain_map,
            phi_chain_map,
            psi_injective,
            phi_surjective,
            exact_in_middle,
            homotopy_identity,
        });
    }
    QuasiIsoReport { degrees }
}

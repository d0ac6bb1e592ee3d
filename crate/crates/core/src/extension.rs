//! Euler characteristics of the extension complex of triples.
//!
//! Extensions of `T″` by `T′` are governed by the two-term complex
//!
//! ```text
//! E1″* ⊗ E1′ ⊕ E2″* ⊗ E2′  ──►  E2″* ⊗ E1′
//! (ψ1, ψ2)                 ↦   φ′ψ2 − ψ1φ″
//! ```
//!
//! Only its Euler characteristic is computed, from Riemann–Roch on each
//! term. Individual hypercohomology dimensions need sheaf data that is not
//! modelled.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{Surface, TripleType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ChiReport {
    pub chi_total: i64,
    pub chi_term0: i64,
    pub chi_term1: i64,
}

/// Riemann–Roch: `χ(E) = d + n(1 − g)` for a rank `n`, degree `d` bundle.
pub fn chi_bundle(rank: u64, degree: i64, surface: Surface) -> Result<i64> {
    if rank == 0 {
        if degree != 0 {
            return Err(Error::ZeroRankDegree(degree));
        }
        return Ok(0);
    }
    Ok(degree + rank as i64 * (1 - i64::from(surface.genus())))
}

/// `χ(Hom(A, B))` for `A` of rank `ra`, degree `da` and `B` of rank `rb`,
/// degree `db`: rank `ra·rb`, degree `ra·db − rb·da`. Zero if either rank is
/// zero.
fn chi_hom(ra: u32, da: i64, rb: u32, db: i64, surface: Surface) -> i64 {
    if ra == 0 || rb == 0 {
        return 0;
    }
    let rank = u64::from(ra) * u64::from(rb);
    let degree = i64::from(ra) * db - i64::from(rb) * da;
    chi_bundle(rank, degree, surface).expect("positive rank")
}

/// Euler characteristic of the complex computing extensions of `quotient`
/// (`T″`) by `sub` (`T′`).
pub fn hom_complex_chi(quotient: &TripleType, sub: &TripleType, surface: Surface) -> ChiReport {
    let (q, s) = (quotient, sub);
    let chi_term0 = chi_hom(q.n1, q.d1, s.n1, s.d1, surface) + chi_hom(q.n2, q.d2, s.n2, s.d2, surface);
    let chi_term1 = chi_hom(q.n2, q.d2, s.n1, s.d1, surface);
    ChiReport {
        chi_total: chi_term0 - chi_term1,
        chi_term0,
        chi_term1,
    }
}

/// `1 − χ(T, T)`, the dimension of the moduli space at a smooth point.
/// Every α-stable triple is smooth once `α ≥ 2g − 2`.
pub fn expected_dim(t: &TripleType, surface: Surface) -> i64 {
    1 - hom_complex_chi(t, t, surface).chi_total
}

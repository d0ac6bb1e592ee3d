//! Critical points of the Higgs field norm on U(p,q)-Higgs bundles.
//!
//! At a critical point the bundle splits as a chain `F_1 ⊕ ⋯ ⊕ F_m` with
//! the Higgs field mapping `F_k → F_{k+1} ⊗ K` and the pieces alternating
//! between `V` and `W`. `End(E)` is graded by
//!
//! ```text
//! U_k = ⊕_{i − j = k} Hom(F_j, F_i)
//! ```
//!
//! and the `−2k` eigenspace of the Hessian is the first hypercohomology of
//! `U_{2k} → U_{2k+1} ⊗ K`. It vanishes iff that map is an isomorphism,
//! which needs at least equal ranks and `deg U_{2k} = deg U_{2k+1} + (2g−2)·rk U_{2k+1}`.
//! Failing that numerical test for some even `2k ≥ 2` exhibits a
//! descending direction.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::invariants::{HiggsType, Surface};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    V,
    W,
}

impl Side {
    fn name(self) -> &'static str {
        match self {
            Side::V => "V",
            Side::W => "W",
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::V => Side::W,
            Side::W => Side::V,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ChainPiece {
    pub rank: u32,
    pub degree: i64,
    pub side: Side,
}

/// A Hodge chain `F_1 ⊕ ⋯ ⊕ F_m` with alternating sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct HodgeChain {
    pieces: Vec<ChainPiece>,
}

impl HodgeChain {
    pub fn new(pieces: Vec<ChainPiece>) -> Result<Self> {
        if pieces.is_empty() {
            return Err(Error::EmptyChain);
        }
        if pieces.iter().any(|p| p.rank == 0) {
            return Err(Error::NonPositiveRank);
        }
        if let Some(i) = pieces.windows(2).position(|w| w[0].side == w[1].side) {
            return Err(Error::NonAlternatingChain(i + 1, i + 2));
        }
        Ok(HodgeChain { pieces })
    }

    /// Builds the alternating chain starting on `first` from parallel rank
    /// and degree lists.
    pub fn alternating(first: Side, ranks: &[u32], degrees: &[i64]) -> Result<Self> {
        assert_eq!(ranks.len(), degrees.len(), "rank and degree lists differ in length");
        let mut side = first;
        let pieces = ranks
            .iter()
            .zip(degrees)
            .map(|(&rank, &degree)| {
                let p = ChainPiece { rank, degree, side };
                side = side.other();
                p
            })
            .collect();
        HodgeChain::new(pieces)
    }

    pub fn pieces(&self) -> &[ChainPiece] {
        &self.pieces
    }

    pub fn len(&self) -> usize {
        self.pieces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Rank and degree of `U_k`; zero for `|k| ≥ m`.
    pub fn graded_piece(&self, k: i32) -> GradedPiece {
        let m = self.pieces.len() as i32;
        let mut rank = 0u64;
        let mut degree = 0i64;
        for j in 0.max(-k)..m.min(m - k) {
            let (fj, fi) = (&self.pieces[j as usize], &self.pieces[(j + k) as usize]);
            // Hom(F_j, F_i) = F_j* ⊗ F_i
            rank += u64::from(fi.rank) * u64::from(fj.rank);
            degree += i64::from(fj.rank) * fi.degree - i64::from(fi.rank) * fj.degree;
        }
        GradedPiece { k, rank, degree }
    }
}

/// Parses `rank:degree:side` pieces separated by commas, e.g.
/// `1:2:V,1:1:W,1:0:V`.
impl FromStr for HodgeChain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "Hodge chain",
            input: s.to_string(),
        };
        let pieces = s
            .split(',')
            .map(|item| {
                let mut parts = item.trim().split(':');
                let rank = parts.next().and_then(|x| x.trim().parse().ok()).ok_or_else(err)?;
                let degree = parts.next().and_then(|x| x.trim().parse().ok()).ok_or_else(err)?;
                let side = match parts.next().map(str::trim) {
                    Some("V" | "v") => Side::V,
                    Some("W" | "w") => Side::W,
                    _ => return Err(err()),
                };
                if parts.next().is_some() {
                    return Err(err());
                }
                Ok(ChainPiece { rank, degree, side })
            })
            .collect::<Result<Vec<_>>>()?;
        HodgeChain::new(pieces)
    }
}

impl fmt::Display for HodgeChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}:{}", p.rank, p.degree, p.side)?;
        }
        Ok(())
    }
}

/// Rank and degree of the weight-`k` part `U_k` of `End(E)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GradedPiece {
    pub k: i32,
    pub rank: u64,
    pub degree: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MinimaVerdict {
    Minimum,
    /// Smallest even `k ≥ 2` at which `U_k → U_{k+1} ⊗ K` cannot be an
    /// isomorphism on rank/degree grounds.
    NotMinimumNumerical(i32),
    /// Every even-`k` test passes numerically; the chain is still not a
    /// minimum since it has length at least 3.
    NotMinimumByLemma,
}

impl MinimaVerdict {
    pub fn is_minimum(&self) -> bool {
        matches!(self, MinimaVerdict::Minimum)
    }
}

impl fmt::Display for MinimaVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinimaVerdict::Minimum => f.write_str("Minimum"),
            MinimaVerdict::NotMinimumNumerical(k) => write!(f, "NotMinimumNumerical({k})"),
            MinimaVerdict::NotMinimumByLemma => f.write_str("NotMinimumByLemma"),
        }
    }
}

/// `U_k` for `k = −(m−1), …, m−1`.
pub fn adjoint_grading(chain: &HodgeChain) -> Vec<GradedPiece> {
    let top = chain.len() as i32 - 1;
    (-top..=top).map(|k| chain.graded_piece(k)).collect()
}

fn feasible(source: GradedPiece, target: GradedPiece, surface: Surface) -> bool {
    source.rank == target.rank
        && source.degree == target.degree + surface.canonical_degree() * target.rank as i64
}

/// Necessary numerical condition for `U_k → U_{k+1} ⊗ K` to be an
/// isomorphism. Vacuously true when both pieces vanish.
pub fn iso_feasible(chain: &HodgeChain, k: i32, surface: Surface) -> bool {
    feasible(chain.graded_piece(k), chain.graded_piece(k + 1), surface)
}

pub fn classify_chain(chain: &HodgeChain, surface: Surface) -> MinimaVerdict {
    let m = chain.len() as i32;
    if m <= 2 {
        return MinimaVerdict::Minimum;
    }
    // U_k = 0 for k ≥ m, so only k ≤ m − 1 can obstruct.
    (2..m)
        .step_by(2)
        .find(|&k| !iso_feasible(chain, k, surface))
        .map_or(MinimaVerdict::NotMinimumByLemma, MinimaVerdict::NotMinimumNumerical)
}

/// Total ranks and degrees of the `V` and `W` pieces.
pub fn chain_to_higgs(chain: &HodgeChain) -> Result<HiggsType> {
    let (mut p, mut q, mut d_v, mut d_w) = (0u32, 0u32, 0i64, 0i64);
    for piece in chain.pieces() {
        match piece.side {
            Side::V => {
                p += piece.rank;
                d_v += piece.degree;
            }
            Side::W => {
                q += piece.rank;
                d_w += piece.degree;
            }
        }
    }
    if p == 0 {
        return Err(Error::OneSidedChain("W"));
    }
    if q == 0 {
        return Err(Error::OneSidedChain("V"));
    }
    HiggsType::new(p, q, d_v, d_w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(genus: u32) -> Surface {
        Surface::new(genus).unwrap()
    }

    fn chain(ranks: &[u32], degrees: &[i64]) -> HodgeChain {
        HodgeChain::alternating(Side::V, ranks, degrees).unwrap()
    }

    fn piece(c: &HodgeChain, k: i32) -> (u64, i64) {
        let u = c.graded_piece(k);
        (u.rank, u.degree)
    }

    #[test]
    fn grading_examples() {
        let c = chain(&[1, 1, 1], &[2, 1, 0]);
        assert_eq!(piece(&c, 0), (3, 0));
        assert_eq!(piece(&c, 1), (2, -2));
        assert_eq!(piece(&c, 2), (1, -2));
        assert_eq!(piece(&c, 3), (0, 0));
        assert_eq!(adjoint_grading(&c).len(), 5);

        let c = chain(&[1], &[0]);
        let all = adjoint_grading(&c);
        assert_eq!(all, vec![GradedPiece { k: 0, rank: 1, degree: 0 }]);

        let c = HodgeChain::alternating(Side::W, &[2, 1], &[0, 0]).unwrap();
        assert_eq!(piece(&c, 1), (2, 0));
        assert_eq!(piece(&c, -1), (2, 0));
        assert_eq!(piece(&c, 0), (5, 0));
    }

    #[test]
    fn feasibility_examples() {
        for d in [[0, 0, 0], [3, -1, 2]] {
            assert!(!iso_feasible(&chain(&[1, 1, 1], &d), 2, g(2)));
        }
        assert!(iso_feasible(&chain(&[1], &[0]), 2, g(2)));

        // ranks (3,1,2,3): rk U_2 = 3·2 + 1·3 = 9 = 3·3 = rk U_3, so the
        // verdict hangs on deg U_2 − deg U_3 = 3d3 + d1 − 2d4 − 3d2 = 9(2g − 2).
        let c = chain(&[3, 1, 2, 3], &[3, 0, 3, -3]);
        assert_eq!(c.graded_piece(2).rank, c.graded_piece(3).rank);
        assert!(iso_feasible(&c, 2, g(2)));
        assert_eq!(classify_chain(&c, g(2)), MinimaVerdict::NotMinimumByLemma);
        let c = chain(&[3, 1, 2, 3], &[3, 0, 3, -2]);
        assert!(!iso_feasible(&c, 2, g(2)));
        assert_eq!(classify_chain(&c, g(2)), MinimaVerdict::NotMinimumNumerical(2));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_chain(&chain(&[1, 1], &[0, 0]), g(2)), MinimaVerdict::Minimum);
        assert_eq!(classify_chain(&chain(&[1, 1, 1], &[2, 1, 0]), g(2)), MinimaVerdict::NotMinimumNumerical(2));
        assert_eq!(classify_chain(&chain(&[1, 1, 1, 1], &[0, 0, 0, 0]), g(2)), MinimaVerdict::NotMinimumNumerical(2));
    }

    #[test]
    fn chain_totals() {
        assert_eq!(chain_to_higgs(&chain(&[1, 1, 1], &[2, 1, 0])).unwrap(), HiggsType::new(2, 1, 2, 1).unwrap());
        assert_eq!(chain_to_higgs(&chain(&[2, 3], &[0, 0])).unwrap(), HiggsType::new(2, 3, 0, 0).unwrap());
        assert_eq!(chain_to_higgs(&chain(&[1], &[0])), Err(Error::OneSidedChain("V")));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(HodgeChain::new(vec![]), Err(Error::EmptyChain));
        let same = ChainPiece { rank: 1, degree: 0, side: Side::V };
        assert_eq!(HodgeChain::new(vec![same, same]), Err(Error::NonAlternatingChain(1, 2)));
        let zero = ChainPiece { rank: 0, degree: 0, side: Side::W };
        assert_eq!(HodgeChain::new(vec![zero]), Err(Error::NonPositiveRank));
    }

    #[test]
    fn parse_and_print() {
        let c: HodgeChain = "1:2:V, 1:1:W,1:0:v".parse().unwrap();
        assert_eq!(c, chain(&[1, 1, 1], &[2, 1, 0]));
        assert_eq!(c.to_string(), "1:2:V,1:1:W,1:0:V");
        assert!("1:2:V,1:1:V".parse::<HodgeChain>().is_err());
        assert!("1:2".parse::<HodgeChain>().is_err());
        assert!("1:2:X".parse::<HodgeChain>().is_err());
        assert!("1:2:V:4".parse::<HodgeChain>().is_err());
    }

    fn any_chain(max_len: usize) -> impl Strategy<Value = HodgeChain> {
        (any::<bool>(), prop::collection::vec((1u32..4, -5i64..5), 1..=max_len)).prop_map(|(w, pieces)| {
            let first = if w { Side::W } else { Side::V };
            let (r, d): (Vec<_>, Vec<_>) = pieces.into_iter().unzip();
            HodgeChain::alternating(first, &r, &d).unwrap()
        })
    }

    proptest! {
        #[test]
        fn grading_is_hom_symmetric(c in any_chain(6)) {
            let m = c.len() as i32;
            for k in 0..=m {
                let (a, b) = (c.graded_piece(k), c.graded_piece(-k));
                prop_assert_eq!(a.rank, b.rank);
                prop_assert_eq!(a.degree, -b.degree);
            }
        }

        #[test]
        fn grading_sums(c in any_chain(6)) {
            let total: u64 = c.pieces().iter().map(|p| u64::from(p.rank)).sum();
            let all = adjoint_grading(&c);
            prop_assert_eq!(all.iter().map(|u| u.rank).sum::<u64>(), total * total);
            prop_assert_eq!(all.iter().map(|u| u.degree).sum::<i64>(), 0);
        }

        #[test]
        fn long_chains_never_minima(c in any_chain(7), genus in 2u32..5) {
            let verdict = classify_chain(&c, g(genus));
            prop_assert_eq!(verdict.is_minimum(), c.len() <= 2);
            let m = c.len() as i32;
            if m >= 3 && (m - 1) % 2 == 0 {
                prop_assert!(!iso_feasible(&c, m - 1, g(genus)));
                prop_assert!(matches!(verdict, MinimaVerdict::NotMinimumNumerical(_)));
            }
        }
    }
}

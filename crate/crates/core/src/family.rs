//! The graph family: `k` cliques of order `h` that share one common
//! `(h − p)`-clique, each clique owning `p` further vertices of its own.
//!
//! Vertices are laid out block by block: the private vertices of cliques
//! `1..k−1` come first in blocks of `p`, followed by the hub block of size
//! `h`, which holds the common clique and then the private vertices of the
//! last clique.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FamilyParams {
    h: usize,
    p: usize,
    k: usize,
}

impl FamilyParams {
    /// Validates `h ≥ 2`, `1 ≤ p ≤ h`, `k ≥ 1`.
    pub fn new(h: usize, p: usize, k: usize) -> Result<Self> {
        if h < 2 {
            return Err(Error::InvalidParams(format!(
                "h must satisfy h >= 2 (got h = {h})"
            )));
        }
        if p < 1 || p > h {
            return Err(Error::InvalidParams(format!(
                "p must satisfy 1 <= p <= h (got p = {p}, h = {h})"
            )));
        }
        if k < 1 {
            return Err(Error::InvalidParams(format!(
                "k must satisfy k >= 1 (got k = {k})"
            )));
        }
        Ok(Self { h, p, k })
    }

    pub fn h(&self) -> usize {
        self.h
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Total order `n = h + (k − 1)·p`.
    pub fn n(&self) -> usize {
        self.h + (self.k - 1) * self.p
    }

    /// Size of the common clique.
    pub fn common(&self) -> usize {
        self.h - self.p
    }

    /// Number of vertices outside the hub block, `(k − 1)·p = n − h`.
    pub fn private_block_len(&self) -> usize {
        (self.k - 1) * self.p
    }

    pub(crate) fn require_two_cliques(&self) -> Result<()> {
        if self.k < 2 {
            Err(Error::DegenerateFamily(format!(
                "k = {} leaves no private blocks; the closed forms need k >= 2",
                self.k
            )))
        } else {
            Ok(())
        }
    }

    pub fn vertex(&self, index: usize) -> Option<VertexLabel> {
        let outer = self.private_block_len();
        if index < outer {
            Some(VertexLabel::Private {
                clique: index / self.p + 1,
                slot: index % self.p + 1,
            })
        } else if index < self.n() {
            Some(VertexLabel::Hub {
                index: index - outer + 1,
            })
        } else {
            None
        }
    }

    pub fn index_of(&self, label: VertexLabel) -> Option<usize> {
        match label {
            VertexLabel::Private { clique, slot }
                if (1..self.k).contains(&clique) && (1..=self.p).contains(&slot) =>
            {
                Some((clique - 1) * self.p + slot - 1)
            }
            VertexLabel::Hub { index } if (1..=self.h).contains(&index) => {
                Some(self.private_block_len() + index - 1)
            }
            _ => None,
        }
    }

    /// Vertex indices of every clique, the last one being the hub block.
    pub fn cliques(&self) -> Vec<Vec<usize>> {
        let outer = self.private_block_len();
        let common: Vec<usize> = (outer..outer + self.common()).collect();
        let mut out: Vec<Vec<usize>> = (0..self.k - 1)
            .map(|j| {
                (j * self.p..(j + 1) * self.p)
                    .chain(common.iter().copied())
                    .collect()
            })
            .collect();
        out.push((outer..self.n()).collect());
        out
    }
}

/// Position of a vertex in the block layout. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexLabel {
    /// Slot `slot` of the private block of clique `clique < k`.
    Private { clique: usize, slot: usize },
    /// Hub block entry: `1..=h−p` is the common clique, the rest belong to
    /// clique `k`.
    Hub { index: usize },
}

/// 0/1 adjacency matrix of the negative-edge graph `G`.
pub fn adjacency_matrix(params: &FamilyParams) -> IntMatrix {
    let n = params.n();
    let mut adj = IntMatrix::zeros(n, n);
    for clique in params.cliques() {
        for &u in &clique {
            for &v in &clique {
                if u != v {
                    adj[(u, v)] = BigInt::one();
                }
            }
        }
    }
    adj
}

/// Seidel matrix `J − I − 2A`: `−1` on edges of `G`, `+1` on non-edges.
pub fn seidel_matrix(params: &FamilyParams) -> IntMatrix {
    let n = params.n();
    let adj = adjacency_matrix(params);
    IntMatrix::from_fn(n, n, |i, j| {
        if i == j {
            BigInt::zero()
        } else if adj[(i, j)].is_one() {
            -BigInt::one()
        } else {
            BigInt::one()
        }
    })
}

/// Coupling block `X' = [−J_{(k−1)p, h−p} | J_{(k−1)p, p}]` between the
/// private blocks and the hub block of the Seidel matrix.
pub fn x_prime_matrix(params: &FamilyParams) -> Result<IntMatrix> {
    params.require_two_cliques()?;
    let common = params.common();
    Ok(IntMatrix::from_fn(
        params.private_block_len(),
        params.h(),
        |_, j| {
            if j < common {
                -BigInt::one()
            } else {
                BigInt::one()
            }
        },
    ))
}

/// Row sum of `X'`: `p − (h − p) = 2p − h`.
pub fn x_prime_row_sum(params: &FamilyParams) -> i64 {
    2 * params.p() as i64 - params.h() as i64
}

/// Sign of an edge of the signed complete graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EdgeSign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

/// Every pair `(i, j)` with `i < j` of the signed complete graph, in
/// lexicographic order, negative exactly on the edges of `G`.
pub fn signed_edges(params: &FamilyParams) -> Vec<(usize, usize, EdgeSign)> {
    let adj = adjacency_matrix(params);
    let n = params.n();
    let mut out = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let sign = if adj[(i, j)].is_one() {
                EdgeSign::Negative
            } else {
                EdgeSign::Positive
            };
            out.push((i, j, sign));
        }
    }
    out
}

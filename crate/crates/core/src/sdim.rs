//! Closed-form multiplicities, the Weyl dimension of the block representation
//! and the superdimension of maximal atypical simples.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bigint_serde;
use crate::cup::{compact, CupDiagram};
use crate::error::{Error, Result};
use crate::schur::Partition;
use crate::weight::{BlockId, SuperWeight};

pub fn factorial(k: u64) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * i)
}

/// `(Σ parts)! / Π parts_i!`.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let total: u64 = parts.iter().sum();
    let den = parts.iter().fold(BigUint::one(), |acc, &k| acc * factorial(k));
    factorial(total) / den
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        BigUint::zero()
    } else {
        multinomial(&[k, n - k])
    }
}

/// Multinomial in the sector half-lengths times the multiplicities of the
/// sector interiors.
pub fn m_closed(c: &CupDiagram) -> BigUint {
    let halves: Vec<u64> = c
        .sectors
        .iter()
        .map(|&(a, b)| ((b - a + 1) / 2) as u64)
        .collect();
    c.sectors
        .iter()
        .fold(multinomial(&halves), |acc, &(a, b)| acc * m_closed(&c.inside(a, b)))
}

/// Partition of the block representation of `Gl(m-n)` and its determinant twist `M`.
pub fn rho_of_block(b: &BlockId) -> Result<(Partition, i64)> {
    if !b.is_maximal_atypical() {
        return Err(Error::NotMaximalAtypicalBlock);
    }
    let lambda: Vec<i64> = b
        .crosses
        .iter()
        .rev()
        .enumerate()
        .map(|(i, &q)| q + i as i64)
        .collect();
    let twist = lambda.last().copied().unwrap_or(0);
    let parts = lambda.iter().map(|&l| (l - twist) as u64).collect();
    Ok((Partition::new(parts)?, twist))
}

/// `Π_{i<j} (p_i - p_j + j - i) / (j - i)`.
pub fn weyl_dim(parts: &[i64]) -> Result<BigUint> {
    if let Some(i) = (1..parts.len()).find(|&i| parts[i - 1] < parts[i]) {
        return Err(Error::NonDominant(i));
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            num *= (parts[i] - parts[j] + (j - i) as i64) as u64;
            den *= (j - i) as u64;
        }
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero());
    Ok(q)
}

/// Superdimension data of a simple module `L(λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdimResult {
    pub maximal_atypical: bool,
    /// `Σ λ_{m+i}`.
    pub p: i64,
    /// Parity shift relative to the block: `p(λ_0)` plus the compacted Bruhat
    /// distance from the ground state `λ_0`, mod 2.
    pub parity_shift: u8,
    #[serde(rename = "m", with = "bigint_serde::unsigned")]
    pub multiplicity: BigUint,
    pub rho: Partition,
    pub det_twist: i64,
    #[serde(with = "bigint_serde::unsigned")]
    pub dim_rho: BigUint,
    #[serde(with = "bigint_serde::signed")]
    pub sdim: BigInt,
}

pub fn sdim(w: &SuperWeight) -> SdimResult {
    let (p, p_mod2) = w.parity();
    if !w.is_maximal_atypical() {
        return SdimResult {
            maximal_atypical: false,
            p,
            parity_shift: p_mod2,
            multiplicity: BigUint::zero(),
            rho: Partition::empty(),
            det_twist: 0,
            dim_rho: BigUint::zero(),
            sdim: BigInt::zero(),
        };
    }
    let block = w.block();
    let diagram = compact(w).expect("maximal atypical");
    let ground = block.ground_state(0).expect("maximal atypical block");
    let ground_diagram = compact(&ground).expect("ground states are maximal atypical");
    let shift = ground.parity().0 + diagram.vee_sum() - ground_diagram.vee_sum();
    let parity_shift = shift.rem_euclid(2) as u8;

    let multiplicity = m_closed(&diagram.build());
    let (rho, det_twist) = rho_of_block(&block).expect("maximal atypical block");
    let dim_rho = weyl_dim(&rho.padded(w.m() - w.n())).expect("partitions are dominant");
    let magnitude = BigInt::from(multiplicity.clone() * dim_rho.clone());
    let sdim = if parity_shift == 1 { -magnitude } else { magnitude };
    SdimResult {
        maximal_atypical: true,
        p,
        parity_shift,
        multiplicity,
        rho,
        det_twist,
        dim_rho,
        sdim,
    }
}

/// Which of the three recursion identities failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Identity {
    /// `2uv = (u+v) + v(u-1) + u(v-1)`
    Product,
    /// Adjacent first and second segment.
    AdjacentSegments,
    /// First and second segment at distance at least two.
    SeparatedSegments,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFailure {
    pub identity: Identity,
    pub args: (u64, u64),
    #[serde(with = "bigint_serde::unsigned")]
    pub lhs: BigUint,
    #[serde(with = "bigint_serde::unsigned")]
    pub rhs: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub bound: u64,
    pub checked: u64,
    pub failure: Option<IdentityFailure>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Identity sides for arguments `(x, y)`, both at least one.
pub fn identity_sides(identity: Identity, x: u64, y: u64) -> (BigUint, BigUint) {
    match identity {
        Identity::Product => {
            let (u, v) = (x, y);
            (BigUint::from(2 * u * v), BigUint::from((u + v) + v * (u - 1) + u * (v - 1)))
        }
        Identity::AdjacentSegments => {
            let (n1, n2) = (x, y);
            let s = n1 + n2;
            let lhs = multinomial(&[n1, 1, n2 - 1]) * 2u32;
            let rhs = binomial(s, n1)
                + binomial(s, n1 + 1)
                + binomial(s, n1 + 1) * n1
                + binomial(s, n1) * (n2 - 1);
            (lhs, rhs)
        }
        Identity::SeparatedSegments => {
            let (n1, n2) = (x, y);
            let s = n1 + n2;
            let tri = multinomial(&[n1, 1, n2 - 1]);
            let lhs = tri.clone() * 2u32;
            let rhs = binomial(s, n1) + binomial(s, n1) * (n2 - 1) + tri;
            (lhs, rhs)
        }
    }
}

/// Checks all three identities for arguments `1..=bound`.
pub fn verify_identities(bound: u64) -> IdentityReport {
    let mut checked = 0;
    for identity in [Identity::Product, Identity::AdjacentSegments, Identity::SeparatedSegments] {
        for x in 1..=bound {
            for y in 1..=bound {
                let (lhs, rhs) = identity_sides(identity, x, y);
                checked += 1;
                if lhs != rhs {
                    return IdentityReport {
                        bound,
                        checked,
                        failure: Some(IdentityFailure {
                            identity,
                            args: (x, y),
                            lhs,
                            rhs,
                        }),
                    };
                }
            }
        }
    }
    IdentityReport {
        bound,
        checked,
        failure: None,
    }
}

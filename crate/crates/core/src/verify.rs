//! Exhaustive and seeded verification suites.
//!
//! Inputs are enumerated in a canonical order, checked in parallel, and the
//! first failure in that order is reported, so results do not depend on
//! scheduling.

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cup::CompactedDiagram;
use crate::moves::{expand, move_sites};
use crate::reduction::MultiplicityOracle;
use crate::schur::{covariant_sdim_oracle, hook_condition, partitions_of, to_highest_weight};
use crate::sdim::{m_closed, sdim, verify_identities};
use crate::weight::BlockId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Relations,
    OracleVsClosed,
    Identities,
    Covariant,
    Hilbert,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Relations,
        Suite::OracleVsClosed,
        Suite::Identities,
        Suite::Covariant,
        Suite::Hilbert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::OracleVsClosed => "oracle-vs-closed",
            Suite::Identities => "identities",
            Suite::Covariant => "covariant",
            Suite::Hilbert => "hilbert",
        }
    }

    /// Default bound: `n` for diagram suites, argument bound for identities,
    /// degree `|λ|` for covariant, `n` for Hilbert.
    pub fn default_bound(self) -> u64 {
        match self {
            Suite::Relations | Suite::OracleVsClosed | Suite::Hilbert => 3,
            Suite::Identities => 20,
            Suite::Covariant => 6,
        }
    }

    /// Largest bound accepted from the command line.
    pub fn max_bound(self) -> u64 {
        match self {
            Suite::Relations | Suite::OracleVsClosed => 5,
            Suite::Identities => 200,
            Suite::Covariant => 10,
            Suite::Hilbert => 6,
        }
    }

    pub fn run(self, bound: u64) -> SuiteReport {
        match self {
            Suite::Relations => relations(bound as usize, 9),
            Suite::OracleVsClosed => oracle_vs_closed(bound as usize, 9),
            Suite::Identities => identities(bound),
            Suite::Covariant => covariant(bound, &[(2, 1), (3, 1), (3, 2), (2, 2)]),
            Suite::Hilbert => hilbert(bound as usize, 10),
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub bound: u64,
    pub checked: u64,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn gather<T: Sync>(
    suite: Suite,
    bound: u64,
    inputs: &[T],
    check: impl Fn(&T) -> (u64, Option<String>) + Sync + Send,
) -> SuiteReport {
    let results: Vec<(u64, Option<String>)> = inputs.par_iter().map(check).collect();
    let checked = results.iter().map(|r| r.0).sum();
    let counterexample = results.into_iter().find_map(|r| r.1);
    SuiteReport {
        suite,
        bound,
        checked,
        counterexample,
    }
}

/// Every vee set of size `1..=n_max` inside `[0, window]`, in lexicographic order.
pub fn vee_subsets(n_max: usize, window: i64) -> Vec<CompactedDiagram> {
    fn go(from: i64, window: i64, left: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for x in from..=window {
            cur.push(x);
            go(x + 1, window, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        go(0, window, n, &mut Vec::new(), &mut out);
    }
    out.into_iter().map(CompactedDiagram::from_vees).collect()
}

/// `2·m(center) = Σ m(middle)` at every site, and every middle vee sum has
/// the opposite parity of the center.
pub fn relations(n_max: usize, window: i64) -> SuiteReport {
    let inputs = vee_subsets(n_max, window);
    gather(Suite::Relations, n_max as u64, &inputs, |d| {
        let mut checked = 0;
        let lhs = m_closed(&d.build()) * 2u32;
        for site in move_sites(d) {
            checked += 1;
            let e = expand(&site);
            let rhs: BigUint = e.middle_diagrams().map(|x| m_closed(&x.build())).sum();
            if lhs != rhs {
                return (checked, Some(format!("{d} at {}: 2m = {lhs}, sum = {rhs}", site.i)));
            }
            let same = e.middle_diagrams().find(|x| (x.vee_sum() - d.vee_sum()) % 2 == 0);
            if let Some(x) = same {
                return (checked, Some(format!("{d} at {}: {x} keeps the vee-sum parity", site.i)));
            }
        }
        (checked, None)
    })
}

pub fn closed_matches_oracle(oracle: &MultiplicityOracle, d: &CompactedDiagram) -> Option<String> {
    let closed = m_closed(&d.build());
    match oracle.multiplicity(d) {
        Ok(m) if m == closed => None,
        Ok(m) => Some(format!("{d}: closed {closed}, oracle {m}")),
        Err(e) => Some(format!("{d}: oracle failed: {e}")),
    }
}

pub fn oracle_vs_closed(n_max: usize, window: i64) -> SuiteReport {
    let inputs = vee_subsets(n_max, window);
    let oracle = MultiplicityOracle::new();
    gather(Suite::OracleVsClosed, n_max as u64, &inputs, |d| {
        (1, closed_matches_oracle(&oracle, d))
    })
}

pub fn identities(bound: u64) -> SuiteReport {
    let r = verify_identities(bound);
    SuiteReport {
        suite: Suite::Identities,
        bound,
        checked: r.checked,
        counterexample: r
            .failure
            .map(|f| format!("{:?}{:?}: {} != {}", f.identity, f.args, f.lhs, f.rhs)),
    }
}

/// `sdim` of the highest weight of `{λ}` against the restriction oracle.
pub fn covariant(max_degree: u64, shapes: &[(usize, usize)]) -> SuiteReport {
    let mut inputs = Vec::new();
    for &(m, n) in shapes {
        for k in 0..=max_degree {
            for p in partitions_of(k) {
                if hook_condition(&p, m, n) {
                    inputs.push((m, n, p));
                }
            }
        }
    }
    gather(Suite::Covariant, max_degree, &inputs, |(m, n, p)| {
        let got = match to_highest_weight(p, *m, *n) {
            Ok(w) => sdim(&w).sdim,
            Err(e) => return (1, Some(format!("{p} in Gl({m}|{n}): {e}"))),
        };
        let want = covariant_sdim_oracle(p, *m, *n);
        let bad = (got != want).then(|| format!("{p} in Gl({m}|{n}): sdim {got}, oracle {want}"));
        (1, bad)
    })
}

/// Coefficients of `Π_{i=1}^{n} (1 - x^{2i})^{-1}` up to `x^{j_max}`.
pub fn hilbert_coefficients(n: usize, j_max: usize) -> Vec<u64> {
    let mut c = vec![0u64; j_max + 1];
    c[0] = 1;
    for i in 1..=n {
        let step = 2 * i;
        for j in step..=j_max {
            c[j] += c[j - step];
        }
    }
    c
}

/// `Ext` of the ground state in the trivial block of `Gl(n|n)` and in a
/// block with crosses, against the Hilbert series.
pub fn hilbert(n_max: usize, j_max: u64) -> SuiteReport {
    let mut inputs = Vec::new();
    for n in 1..=n_max {
        inputs.push(BlockId::trivial(n, n).expect("valid shape"));
        inputs.push(BlockId::trivial(n + 2, n).expect("valid shape"));
    }
    gather(Suite::Hilbert, n_max as u64, &inputs, |b| {
        let want = hilbert_coefficients(b.n, j_max as usize);
        let got = match b.ext_self_dims(j_max) {
            Ok(p) => p,
            Err(e) => return (1, Some(format!("Gl({}|{}): {e}", b.m, b.n))),
        };
        let bad = got
            .iter()
            .find(|p| p.dimension != want[p.degree as usize])
            .map(|p| {
                format!(
                    "Gl({}|{}) degree {}: {} != {}",
                    b.m, b.n, p.degree, p.dimension, want[p.degree as usize]
                )
            });
        (1, bad)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts() {
        assert_eq!(vee_subsets(1, 9).len(), 10);
        assert_eq!(vee_subsets(4, 9).len(), 10 + 45 + 120 + 210);
    }

    #[test]
    fn hilbert_series() {
        assert_eq!(hilbert_coefficients(1, 6), vec![1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(hilbert_coefficients(2, 8), vec![1, 0, 1, 0, 2, 0, 2, 0, 3]);
    }

    #[test]
    fn small_suites_pass() {
        for s in Suite::ALL {
            let r = s.run(2);
            assert!(r.passed(), "{r:?}");
            assert!(r.checked > 0);
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }
}

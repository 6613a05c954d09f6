//! Partitions, covariant representations `Schur_λ(k^{m|n})` and
//! Littlewood–Richardson products.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sdim::weyl_dim;
use crate::weight::SuperWeight;

/// Weakly decreasing non-negative parts, trailing zeros trimmed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition(Vec<u64>);

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    pub fn new(mut parts: Vec<u64>) -> Result<Self> {
        if let Some(i) = (1..parts.len()).find(|&i| parts[i - 1] < parts[i]) {
            return Err(Error::NonDominant(i));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.get(0);
        Partition(
            (0..width)
                .map(|c| self.0.iter().filter(|&&r| r > c).count() as u64)
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.get(i) <= self.get(i))
    }

    /// Parts padded with zeros to `len` entries, as signed integers.
    pub fn padded(&self, len: usize) -> Vec<i64> {
        (0..len.max(self.len())).map(|i| self.get(i) as i64).collect()
    }

    /// Every partition `μ ⊆ self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &Partition, row: usize, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if row == outer.len() {
                out.push(Partition::new(cur.clone()).expect("bounded by cap"));
                return;
            }
            for v in 0..=cap.min(outer.get(row)) {
                cur.push(v);
                go(outer, row + 1, v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 0, u64::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// `(3,1,1)`; parentheses optional.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let body = t
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(t);
        if body.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|x| {
                x.trim().parse::<u64>().map_err(|_| Error::Parse {
                    position: s.find(x).unwrap_or(0),
                    message: format!("expected non-negative integer, found {:?}", x.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `k`, in decreasing lexicographic order.
pub fn partitions_of(k: u64) -> Vec<Partition> {
    fn go(rest: u64, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for part in (1..=rest.min(cap)).rev() {
            cur.push(part);
            go(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, k, &mut Vec::new(), &mut out);
    out
}

/// `{λ} ≠ 0` iff `λ_{m+1} ≤ n`.
pub fn hook_condition(p: &Partition, m: usize, n: usize) -> bool {
    p.get(m) <= n as u64
}

fn require_hook(p: &Partition, m: usize, n: usize) -> Result<()> {
    if hook_condition(p, m, n) {
        Ok(())
    } else {
        Err(Error::HookViolation { m, n })
    }
}

/// Highest weight `(λ_1..λ_m ; max(0, λ*_i - m))` of `{λ}`.
pub fn to_highest_weight(p: &Partition, m: usize, n: usize) -> Result<SuperWeight> {
    require_hook(p, m, n)?;
    let conj = p.conjugate();
    let mut parts: Vec<i64> = (0..m).map(|i| p.get(i) as i64).collect();
    parts.extend((0..n).map(|i| conj.get(i).saturating_sub(m as u64) as i64));
    SuperWeight::new(m, n, parts)
}

/// `{λ}` is maximal atypical iff `λ_{m-n+1} = 0`.
pub fn is_covariant_max_atypical(p: &Partition, m: usize, n: usize) -> Result<bool> {
    require_hook(p, m, n)?;
    Ok(p.get(m - n) == 0)
}

/// Shapes obtained by adding a vertical strip of `k` boxes.
pub fn column_pieri(p: &Partition, k: u64) -> Vec<Partition> {
    fn go(base: &[u64], row: usize, left: u64, cur: &mut Vec<u64>, out: &mut Vec<Partition>) {
        let rows = base.len();
        if row == rows {
            // the remaining boxes form a column below the last row
            let mut parts = cur.clone();
            let prev = parts.last().copied().unwrap_or(u64::MAX);
            if left > 0 && prev == 0 {
                return;
            }
            parts.extend(std::iter::repeat_n(1, left as usize));
            out.push(Partition::new(parts).expect("vertical strip keeps shape"));
            return;
        }
        let b = base[row];
        let prev = if row == 0 { u64::MAX } else { cur[row - 1] };
        cur.push(b);
        go(base, row + 1, left, cur, out);
        cur.pop();
        if left > 0 && b < prev {
            cur.push(b + 1);
            go(base, row + 1, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(p.parts(), 0, k, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// Products `s_p · s_q = Σ c^ρ_{pq} s_ρ` by the Littlewood–Richardson rule.
pub fn lr_expand(p: &Partition, q: &Partition) -> BTreeMap<Partition, u64> {
    // rows of the skew filling: labels of the cells added to each row
    let start: Vec<(u64, Vec<u8>)> = p.parts().iter().map(|&r| (r, Vec::new())).collect();
    let mut states = vec![start];
    for (label, &size) in q.parts().iter().enumerate() {
        let mut next = Vec::new();
        for s in &states {
            add_horizontal_strip(s, size, label as u8, &mut next);
        }
        states = next;
    }
    let mut out = BTreeMap::new();
    for s in states {
        if is_lattice(&s, q.len()) {
            let shape = Partition::new(s.iter().map(|r| r.0).collect()).expect("strips keep shape");
            *out.entry(shape).or_insert(0) += 1;
        }
    }
    out
}

fn add_horizontal_strip(
    rows: &[(u64, Vec<u8>)],
    size: u64,
    label: u8,
    out: &mut Vec<Vec<(u64, Vec<u8>)>>,
) {
    fn go(
        rows: &[(u64, Vec<u8>)],
        r: usize,
        left: u64,
        label: u8,
        cur: &mut Vec<(u64, Vec<u8>)>,
        out: &mut Vec<Vec<(u64, Vec<u8>)>>,
    ) {
        let old_len = |i: usize| rows.get(i).map_or(0, |x| x.0);
        if r > rows.len() {
            if left == 0 {
                let mut done = cur.clone();
                while done.last().is_some_and(|x| x.0 == 0) {
                    done.pop();
                }
                out.push(done);
            }
            return;
        }
        // a horizontal strip in row r may extend up to the old length of row r-1
        let cap = if r == 0 { u64::MAX } else { old_len(r - 1) };
        let base = old_len(r);
        let max_add = cap.saturating_sub(base).min(left);
        for add in 0..=max_add {
            let mut labels = rows.get(r).map(|x| x.1.clone()).unwrap_or_default();
            labels.extend(std::iter::repeat_n(label, add as usize));
            cur.push((base + add, labels));
            go(rows, r + 1, left - add, label, cur, out);
            cur.pop();
        }
    }
    go(rows, 0, size, label, &mut Vec::new(), out);
}

/// Reading rows top to bottom, right to left, every prefix has at least as
/// many `k` as `k + 1`.
fn is_lattice(rows: &[(u64, Vec<u8>)], labels: usize) -> bool {
    let mut counts = vec![0u64; labels + 1];
    for (_, row) in rows {
        for &l in row.iter().rev() {
            let l = l as usize;
            counts[l] += 1;
            if l > 0 && counts[l] > counts[l - 1] {
                return false;
            }
        }
    }
    true
}

/// Dimension of `Schur_p(k^len)`; zero when `p` has more than `len` rows.
pub fn schur_dim(p: &Partition, len: usize) -> BigUint {
    if p.len() > len {
        return BigUint::zero();
    }
    weyl_dim(&p.padded(len)).expect("partitions are dominant")
}

/// Superdimension of `Schur_p(k^{m|n})` from its restriction to `Gl(m) × Gl(n)`.
pub fn covariant_sdim_oracle(p: &Partition, m: usize, n: usize) -> BigInt {
    if !hook_condition(p, m, n) {
        return BigInt::zero();
    }
    let mut total = BigInt::zero();
    for mu in p.subpartitions() {
        if mu.len() > m {
            continue;
        }
        let rest = p.degree() - mu.degree();
        let even_dim = schur_dim(&mu, m);
        for nu in partitions_of(rest) {
            if nu.get(0) > n as u64 {
                continue;
            }
            let Some(&c) = lr_expand(&mu, &nu).get(p) else {
                continue;
            };
            let term = BigInt::from(c) * BigInt::from(even_dim.clone()) * BigInt::from(schur_dim(&nu.conjugate(), n));
            if rest.is_multiple_of(2) {
                total += term;
            } else {
                total -= term;
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(xs: &[u64]) -> Partition {
        Partition::new(xs.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1, 1]).conjugate(), p(&[3, 1, 1]));
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
    }

    #[test]
    fn hooks() {
        assert!(hook_condition(&p(&[2]), 1, 1));
        assert!(hook_condition(&p(&[1, 1, 1]), 1, 1));
        assert!(!hook_condition(&p(&[2, 2]), 1, 1));
        assert!(hook_condition(&p(&[3, 1]), 2, 0));
        assert!(!hook_condition(&p(&[3, 1, 1]), 2, 0));
    }

    #[test]
    fn highest_weights() {
        let w = to_highest_weight(&p(&[3, 1, 1]), 2, 2).unwrap();
        assert_eq!(w.parts(), &[3, 1, 1, 0]);
        let w = to_highest_weight(&p(&[4, 2]), 4, 2).unwrap();
        assert_eq!(w.parts(), &[4, 2, 0, 0, 0, 0]);
        assert_eq!(to_highest_weight(&Partition::empty(), 3, 2).unwrap(), SuperWeight::trivial(3, 2).unwrap());
        assert_eq!(to_highest_weight(&p(&[2, 2]), 1, 1), Err(Error::HookViolation { m: 1, n: 1 }));
    }

    #[test]
    fn covariant_atypicality() {
        assert!(is_covariant_max_atypical(&p(&[2]), 2, 1).unwrap());
        assert!(!is_covariant_max_atypical(&p(&[1, 1]), 2, 1).unwrap());
        assert!(is_covariant_max_atypical(&p(&[5, 3]), 4, 2).unwrap());
        // consistent with the labeling of the highest weight
        for part in [p(&[2]), p(&[1, 1]), p(&[3, 1]), p(&[2, 2, 1])] {
            let flag = is_covariant_max_atypical(&part, 3, 1).unwrap();
            assert_eq!(flag, to_highest_weight(&part, 3, 1).unwrap().is_maximal_atypical());
        }
    }

    #[test]
    fn vertical_strips() {
        assert_eq!(column_pieri(&p(&[2]), 2), vec![p(&[2, 1, 1]), p(&[3, 1])]);
        assert_eq!(column_pieri(&Partition::empty(), 3), vec![p(&[1, 1, 1])]);
        assert_eq!(column_pieri(&p(&[3, 1]), 0), vec![p(&[3, 1])]);
        assert_eq!(
            column_pieri(&p(&[1, 1]), 1),
            vec![p(&[1, 1, 1]), p(&[2, 1])]
        );
    }

    #[test]
    fn lr_products() {
        let one = |xs: &[&[u64]]| -> BTreeMap<Partition, u64> { xs.iter().map(|x| (p(x), 1)).collect() };
        assert_eq!(lr_expand(&p(&[2, 1]), &Partition::empty()), one(&[&[2, 1]]));
        assert_eq!(lr_expand(&p(&[1]), &p(&[1])), one(&[&[2], &[1, 1]]));
        assert_eq!(lr_expand(&p(&[2, 1]), &p(&[1])), one(&[&[3, 1], &[2, 2], &[2, 1, 1]]));
        // the classic coefficient c^{(3,2,1)}_{(2,1),(2,1)} = 2
        assert_eq!(lr_expand(&p(&[2, 1]), &p(&[2, 1]))[&p(&[3, 2, 1])], 2);
    }

    #[test]
    fn covariant_sdims() {
        assert_eq!(covariant_sdim_oracle(&p(&[1]), 2, 1), BigInt::from(1));
        assert_eq!(covariant_sdim_oracle(&p(&[1, 1]), 2, 1), BigInt::from(0));
        assert_eq!(covariant_sdim_oracle(&p(&[2]), 2, 1), BigInt::from(1));
        assert_eq!(covariant_sdim_oracle(&p(&[2, 2]), 1, 1), BigInt::from(0));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..9).map(|k| partitions_of(k).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn text_forms() {
        let x: Partition = "(3,1,1)".parse().unwrap();
        assert_eq!(x, p(&[3, 1, 1]));
        assert_eq!(x.to_string(), "(3,1,1)");
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(1,2)".parse::<Partition>(), Err(Error::NonDominant(1)));
    }
}

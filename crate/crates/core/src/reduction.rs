//! Reduction of cup diagrams towards fully nested ones.
//!
//! Every diagram that is not fully nested is the upward move of a unique
//! pivot site chosen by one of three rules:
//!
//! * rule I, at least two segments: pull the start of the second segment one
//!   step left;
//! * rule II, one segment with several sectors: merge the first two sectors;
//! * rule III, a single sector: descend into its interior and pivot there.
//!
//! The relation `2·m(center) = Σ m(middle)` at the pivot then expresses the
//! multiplicity of the diagram through diagrams closer to a fully nested one.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::{OnceLock, RwLock};

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::bigint_serde;
use crate::cup::{compact, format_set, CompactedDiagram, CupDiagram};
use crate::error::{Error, Result};
use crate::moves::{expand, MoveExpansion, MoveSite, SiteKind};
use crate::weight::SuperWeight;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    I,
    II,
    III,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pivot {
    pub algorithm: Algorithm,
    /// Number of sector interiors entered before a rule applied.
    pub depth: usize,
    pub site: MoveSite,
    pub center: CompactedDiagram,
}

impl Pivot {
    pub fn expansion(&self) -> MoveExpansion {
        expand(&self.site)
    }
}

/// `(algorithm, depth, i, center vees)` on a bare vee set.
fn pivot_vees(vees: &[i64]) -> Option<(Algorithm, usize, i64, Vec<i64>)> {
    let cups = CupDiagram::build(vees);
    let replace = |from: i64, to: i64| -> Vec<i64> {
        let mut out: Vec<i64> = vees.iter().map(|&v| if v == from { to } else { v }).collect();
        out.sort_unstable();
        out
    };
    if cups.segments.len() >= 2 {
        let s2 = cups.segments[1].0;
        return Some((Algorithm::I, 0, s2 - 1, replace(s2, s2 - 1)));
    }
    if cups.sectors.len() >= 2 {
        let b1 = cups.sectors[0].1;
        let a2 = cups.sectors[1].0;
        return Some((Algorithm::II, 0, b1, replace(a2, b1)));
    }
    let &(a, b) = cups.sectors.first()?;
    let inner: Vec<i64> = vees.iter().copied().filter(|&v| a < v && v < b).collect();
    let (_, depth, i, inner_center) = pivot_vees(&inner)?;
    let mut center = vec![a];
    center.extend(inner_center);
    Some((Algorithm::III, depth + 1, i, center))
}

/// The deterministic pivot of a diagram that is not fully nested.
pub fn pivot(d: &CompactedDiagram) -> Result<Pivot> {
    let (algorithm, depth, i, center) = pivot_vees(d.vees()).ok_or(Error::FullyNested)?;
    let center = d.with_vees(center);
    let site = MoveSite::at(&center, i).expect("pivot sites carry a vee followed by an up label");
    Ok(Pivot {
        algorithm,
        depth,
        site,
        center,
    })
}

/// Memoized multiplicities keyed on translation-normalized vee sets.
#[derive(Debug, Default)]
pub struct MultiplicityOracle {
    memo: RwLock<HashMap<Vec<i64>, BigUint>>,
}

impl MultiplicityOracle {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide instance used by [`m_oracle`].
    pub fn global() -> &'static MultiplicityOracle {
        static GLOBAL: OnceLock<MultiplicityOracle> = OnceLock::new();
        GLOBAL.get_or_init(MultiplicityOracle::new)
    }

    pub fn cached(&self) -> usize {
        self.memo.read().expect("memo lock").len()
    }

    pub fn multiplicity(&self, d: &CompactedDiagram) -> Result<BigUint> {
        let mut stack = HashSet::new();
        self.eval(d.normalized(), &mut stack)
    }

    fn eval(&self, key: Vec<i64>, stack: &mut HashSet<Vec<i64>>) -> Result<BigUint> {
        let d = CompactedDiagram::from_vees(key.iter().copied());
        if d.is_interval() {
            return Ok(BigUint::one());
        }
        if let Some(v) = self.memo.read().expect("memo lock").get(&key) {
            return Ok(v.clone());
        }
        if !stack.insert(key.clone()) {
            return Err(Error::NonTermination(format_set(&key)));
        }
        let p = pivot(&d)?;
        let expansion = p.expansion();
        let mut value: BigInt = BigInt::from(self.eval(p.center.normalized(), stack)?) * 2;
        let mut skipped = false;
        for x in expansion.middle_diagrams() {
            if !skipped && *x == d {
                skipped = true;
                continue;
            }
            value -= BigInt::from(self.eval(x.normalized(), stack)?);
        }
        debug_assert!(skipped, "the upward move of a pivot reproduces the diagram");
        stack.remove(&key);
        let value = match value.to_biguint() {
            Some(v) if !v.is_zero() => v,
            _ => return Err(Error::NonPositive(format_set(&key))),
        };
        // concurrent writers compute the same value for the same key
        self.memo
            .write()
            .expect("memo lock")
            .entry(key)
            .or_insert_with(|| value.clone());
        Ok(value)
    }
}

/// Multiplicity from the relations alone, never from the closed formula.
pub fn m_oracle(d: &CompactedDiagram) -> Result<BigUint> {
    MultiplicityOracle::global().multiplicity(d)
}

/// One relation used while reducing `target`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub target: CompactedDiagram,
    pub algorithm: Algorithm,
    pub depth: usize,
    pub site: i64,
    pub kind: SiteKind,
    pub lhs: CompactedDiagram,
    pub rhs: Vec<CompactedDiagram>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Leaf {
    pub diagram: CompactedDiagram,
    #[serde(with = "bigint_serde::signed")]
    pub coefficient: BigInt,
}

/// `m(root) = Σ coefficient · m(leaf)` with fully nested leaves.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub root: CompactedDiagram,
    pub steps: Vec<TraceStep>,
    pub leaves: Vec<Leaf>,
    #[serde(with = "bigint_serde::unsigned")]
    pub multiplicity: BigUint,
}

pub fn reduce_trace(w: &SuperWeight) -> Result<ReductionTrace> {
    reduce_diagram(&compact(w)?)
}

/// Reduction on actual positions, so leaves are the translates that occur.
pub fn reduce_diagram(d: &CompactedDiagram) -> Result<ReductionTrace> {
    let mut tracer = Tracer {
        template: d.clone(),
        combos: HashMap::new(),
        stack: HashSet::new(),
        steps: Vec::new(),
    };
    let combo = tracer.visit(d.vees().to_vec())?;
    let mut leaves = Vec::new();
    let mut multiplicity = BigInt::zero();
    for (vees, coefficient) in combo {
        if coefficient.is_zero() {
            continue;
        }
        multiplicity += &coefficient;
        leaves.push(Leaf {
            diagram: d.with_vees(vees),
            coefficient,
        });
    }
    let multiplicity = match multiplicity.sign() {
        Sign::Plus => multiplicity.magnitude().clone(),
        _ => return Err(Error::NonPositive(d.to_string())),
    };
    Ok(ReductionTrace {
        root: d.clone(),
        steps: tracer.steps,
        leaves,
        multiplicity,
    })
}

type Combo = BTreeMap<Vec<i64>, BigInt>;

struct Tracer {
    template: CompactedDiagram,
    combos: HashMap<Vec<i64>, Combo>,
    stack: HashSet<Vec<i64>>,
    steps: Vec<TraceStep>,
}

impl Tracer {
    fn visit(&mut self, vees: Vec<i64>) -> Result<Combo> {
        let d = self.template.with_vees(vees.iter().copied());
        if d.is_interval() {
            return Ok(BTreeMap::from([(vees, BigInt::one())]));
        }
        if let Some(c) = self.combos.get(&vees) {
            return Ok(c.clone());
        }
        if !self.stack.insert(vees.clone()) {
            return Err(Error::NonTermination(d.to_string()));
        }
        let p = pivot(&d)?;
        let expansion = p.expansion();
        self.steps.push(TraceStep {
            target: d.clone(),
            algorithm: p.algorithm,
            depth: p.depth,
            site: p.site.i,
            kind: p.site.kind,
            lhs: p.center.clone(),
            rhs: expansion.middle_diagrams().cloned().collect(),
        });

        let mut combo = Combo::new();
        let center = self.visit(p.center.vees().to_vec())?;
        add_scaled(&mut combo, &center, &BigInt::from(2));
        let mut skipped = false;
        for x in expansion.middle_diagrams() {
            if !skipped && *x == d {
                skipped = true;
                continue;
            }
            let sub = self.visit(x.vees().to_vec())?;
            add_scaled(&mut combo, &sub, &BigInt::from(-1));
        }
        combo.retain(|_, c| !c.is_zero());
        self.stack.remove(&vees);
        self.combos.insert(vees, combo.clone());
        Ok(combo)
    }
}

fn add_scaled(into: &mut Combo, from: &Combo, factor: &BigInt) {
    for (k, v) in from {
        *into.entry(k.clone()).or_insert_with(BigInt::zero) += v * factor;
    }
}

/// One step of the Kostant push: the translated module centred at `S^{k-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IvStep {
    /// Index `k - 1` of the centre in the `S` sequence.
    pub center: usize,
    pub site: MoveSite,
    pub middle: Vec<CompactedDiagram>,
    pub expected: Vec<CompactedDiagram>,
}

impl IvStep {
    /// Middle layer equals the expected set, and only the last step is unencapsulated.
    pub fn matches(&self, last: bool) -> bool {
        let mut got = self.middle.clone();
        let mut want = self.expected.clone();
        got.sort();
        want.sort();
        got == want && self.site.kind.is_encapsulated() != last
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgorithmIv {
    /// `S^0 .. S^n`: the rightmost vee pushed `i` steps right.
    pub s: Vec<CompactedDiagram>,
    /// The starting interval shifted one step left.
    pub pi: CompactedDiagram,
    pub steps: Vec<IvStep>,
}

impl AlgorithmIv {
    pub fn all_match(&self) -> bool {
        let n = self.steps.len();
        self.steps.iter().enumerate().all(|(k, s)| s.matches(k + 1 == n))
    }

    pub fn s_weights(&self) -> Result<Vec<SuperWeight>> {
        self.s.iter().map(CompactedDiagram::to_weight).collect()
    }

    pub fn pi_weight(&self) -> Result<SuperWeight> {
        self.pi.to_weight()
    }
}

pub fn algorithm_iv(w: &SuperWeight) -> Result<AlgorithmIv> {
    algorithm_iv_diagram(&compact(w)?)
}

pub fn algorithm_iv_diagram(d: &CompactedDiagram) -> Result<AlgorithmIv> {
    if !d.is_interval() {
        return Err(Error::NotKostant);
    }
    let n = d.len();
    let Some(&a) = d.vees().first() else {
        return Ok(AlgorithmIv {
            s: vec![d.clone()],
            pi: d.clone(),
            steps: Vec::new(),
        });
    };
    let top = a + n as i64 - 1;
    let s: Vec<CompactedDiagram> = (0..=n as i64)
        .map(|i| d.with_vees((a..top).chain([top + i])))
        .collect();
    let pi = d.translate(-1);
    let steps = (1..=n)
        .map(|k| {
            let center = &s[k - 1];
            let site = MoveSite::at(center, top + k as i64 - 1)
                .expect("the rightmost vee of S^k is followed by an up label");
            let middle = expand(&site).middle.into_iter().map(|c| c.diagram).collect();
            let mut expected = vec![s[k].clone()];
            if k >= 2 {
                expected.push(s[k - 2].clone());
            }
            if k == n {
                expected.push(pi.clone());
            }
            IvStep {
                center: k - 1,
                site,
                middle,
                expected,
            }
        })
        .collect();
    Ok(AlgorithmIv { s, pi, steps })
}

/// Every leaf of the trace is fully nested.
pub fn leaves_fully_nested(trace: &ReductionTrace) -> bool {
    trace.leaves.iter().all(|l| l.diagram.is_interval())
}

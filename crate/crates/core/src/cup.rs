//! Cup diagrams of maximal atypical weights on the compacted numberline.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weight::{compress, decompress, Labeling, SuperWeight};

/// Vee positions after the crosses have been deleted, together with the
/// deleted crosses so that positions can be mapped back.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CompactedDiagram {
    vees: Vec<i64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    crosses: Vec<i64>,
}

impl CompactedDiagram {
    /// Diagram on a numberline without crosses.
    pub fn from_vees(vees: impl IntoIterator<Item = i64>) -> Self {
        let set: BTreeSet<i64> = vees.into_iter().collect();
        CompactedDiagram {
            vees: set.into_iter().collect(),
            crosses: Vec::new(),
        }
    }

    /// Same cross pattern, different vees.
    pub fn with_vees(&self, vees: impl IntoIterator<Item = i64>) -> Self {
        let set: BTreeSet<i64> = vees.into_iter().collect();
        CompactedDiagram {
            vees: set.into_iter().collect(),
            crosses: self.crosses.clone(),
        }
    }

    pub fn vees(&self) -> &[i64] {
        &self.vees
    }

    pub fn crosses(&self) -> &[i64] {
        &self.crosses
    }

    pub fn len(&self) -> usize {
        self.vees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vees.is_empty()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.vees.binary_search(&x).is_ok()
    }

    /// Replace the vee at `from` by one at `to`.
    pub fn moved(&self, from: i64, to: i64) -> Self {
        debug_assert!(self.contains(from) && !self.contains(to));
        self.with_vees(self.vees.iter().map(|&v| if v == from { to } else { v }))
    }

    pub fn translate(&self, shift: i64) -> Self {
        CompactedDiagram {
            vees: self.vees.iter().map(|v| v + shift).collect(),
            crosses: self.crosses.clone(),
        }
    }

    /// Translate so that the leftmost vee sits at 0; crosses are dropped.
    pub fn normalized(&self) -> Vec<i64> {
        let base = self.vees.first().copied().unwrap_or(0);
        self.vees.iter().map(|v| v - base).collect()
    }

    /// Vees form one consecutive interval.
    pub fn is_interval(&self) -> bool {
        match (self.vees.first(), self.vees.last()) {
            (Some(lo), Some(hi)) => (hi - lo) as usize + 1 == self.vees.len(),
            _ => true,
        }
    }

    pub fn vee_sum(&self) -> i64 {
        self.vees.iter().sum()
    }

    /// Map back to a weight of Gl(n + #crosses | n).
    pub fn to_weight(&self) -> Result<SuperWeight> {
        let crosses: BTreeSet<i64> = self.crosses.iter().copied().collect();
        let lab = Labeling {
            vees: self.vees.iter().map(|&y| decompress(y, &crosses)).collect(),
            crosses: crosses.clone(),
            circles: BTreeSet::new(),
        };
        let n = self.vees.len();
        SuperWeight::from_labeling(n + crosses.len(), n, &lab)
    }

    pub fn build(&self) -> CupDiagram {
        CupDiagram::build(&self.vees)
    }
}

impl fmt::Display for CompactedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_set(&self.vees))
    }
}

pub(crate) fn format_set(xs: &[i64]) -> String {
    let inner: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

impl FromStr for CompactedDiagram {
    type Err = Error;

    /// Parses `{0,1,3}`; braces are optional.
    fn from_str(s: &str) -> Result<Self> {
        parse_int_set(s).map(CompactedDiagram::from_vees)
    }
}

/// Parses `{a,b,...}` (braces optional, whitespace ignored).
pub fn parse_int_set(s: &str) -> Result<Vec<i64>> {
    let trimmed = s.trim();
    let (body, offset) = match trimmed.strip_prefix('{') {
        Some(rest) => match rest.strip_suffix('}') {
            Some(body) => (body, 1),
            None => {
                return Err(Error::Parse {
                    position: s.len(),
                    message: "missing '}'".into(),
                })
            }
        },
        None => (trimmed, 0),
    };
    let lead = s.len() - s.trim_start().len() + offset;
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for piece in body.split(',') {
        let value = piece.trim().parse().map_err(|_| Error::Parse {
            position: lead + pos,
            message: format!("expected integer, found {:?}", piece.trim()),
        })?;
        out.push(value);
        pos += piece.len() + 1;
    }
    Ok(out)
}

/// Deletes the crosses of a maximal atypical weight.
pub fn compact(w: &SuperWeight) -> Result<CompactedDiagram> {
    if !w.is_maximal_atypical() {
        return Err(Error::NotMaximalAtypical);
    }
    let lab = w.labeling();
    Ok(CompactedDiagram {
        vees: lab.vees.iter().map(|&v| compress(v, &lab.crosses)).collect(),
        crosses: lab.crosses.into_iter().collect(),
    })
}

/// A closed interval `[start, end]` of the numberline.
pub type Span = (i64, i64);

/// Non-crossing matching of every vee with an `∧` to its right.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CupDiagram {
    pub vees: Vec<i64>,
    /// Cups `(open, close)` in the order they close.
    pub cups: Vec<Span>,
    /// Outermost cups, left to right.
    pub sectors: Vec<Span>,
    /// Maximal runs of adjacent sectors.
    pub segments: Vec<Span>,
}

impl CupDiagram {
    pub fn build(vees: &[i64]) -> CupDiagram {
        let mut sorted = vees.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut cups = Vec::with_capacity(sorted.len());
        let mut sectors = Vec::new();
        let mut stack: Vec<i64> = Vec::new();
        let mut next = sorted.iter().peekable();
        let mut pos = sorted.first().copied().unwrap_or(0);
        while next.peek().is_some() || !stack.is_empty() {
            if next.peek() == Some(&&pos) {
                stack.push(pos);
                next.next();
            } else if let Some(open) = stack.pop() {
                cups.push((open, pos));
                if stack.is_empty() {
                    sectors.push((open, pos));
                }
            } else if let Some(&&v) = next.peek() {
                // nothing open: jump to the next vee
                pos = v;
                continue;
            }
            pos += 1;
        }
        let mut segments: Vec<Span> = Vec::new();
        for &(a, b) in &sectors {
            match segments.last_mut() {
                Some(last) if last.1 + 1 == a => last.1 = b,
                _ => segments.push((a, b)),
            }
        }
        CupDiagram {
            vees: sorted,
            cups,
            sectors,
            segments,
        }
    }

    pub fn n(&self) -> usize {
        self.vees.len()
    }

    /// Cup opened at `open`, if `open` is a vee.
    pub fn cup_from(&self, open: i64) -> Option<Span> {
        self.cups.iter().copied().find(|c| c.0 == open)
    }

    /// Innermost cup strictly enclosing the cup `inner`.
    pub fn enclosing_cup(&self, inner: Span) -> Option<Span> {
        self.cups
            .iter()
            .copied()
            .filter(|&(a, b)| a < inner.0 && inner.1 < b)
            .max_by_key(|&(a, _)| a)
    }

    pub fn segment_of(&self, x: i64) -> Option<Span> {
        self.segments.iter().copied().find(|&(s, t)| s <= x && x <= t)
    }

    /// The diagram formed by the cups strictly inside sector `index`.
    pub fn interior(&self, index: usize) -> Result<CupDiagram> {
        let &(a, b) = self.sectors.get(index).ok_or(Error::BadIndex(index))?;
        Ok(self.inside(a, b))
    }

    /// Sub-diagram of the vees strictly between `a` and `b`.
    pub fn inside(&self, a: i64, b: i64) -> CupDiagram {
        let inner: Vec<i64> = self.vees.iter().copied().filter(|&v| a < v && v < b).collect();
        CupDiagram::build(&inner)
    }

    pub fn is_fully_nested(&self) -> bool {
        match self.sectors.as_slice() {
            [] => true,
            [(a, b)] => self.inside(*a, *b).is_fully_nested(),
            _ => false,
        }
    }

    pub fn translate(&self, shift: i64) -> CupDiagram {
        let sh = |&(a, b): &Span| (a + shift, b + shift);
        CupDiagram {
            vees: self.vees.iter().map(|v| v + shift).collect(),
            cups: self.cups.iter().map(sh).collect(),
            sectors: self.sectors.iter().map(sh).collect(),
            segments: self.segments.iter().map(sh).collect(),
        }
    }

    /// Nesting depth of each cup (0 for sectors), in `cups` order.
    pub fn depths(&self) -> Vec<usize> {
        self.cups
            .iter()
            .map(|&(a, b)| {
                self.cups
                    .iter()
                    .filter(|&&(c, d)| c < a && b < d)
                    .count()
            })
            .collect()
    }
}

impl fmt::Display for CupDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_set(&self.vees))
    }
}

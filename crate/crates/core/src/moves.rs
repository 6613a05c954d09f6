//! Basic moves at a site `[i, i+1]` and the multiplicity relations they induce.

use serde::{Deserialize, Serialize};

use crate::cup::{CompactedDiagram, CupDiagram};

/// Whether the cup `(i, i+1)` is a sector of its segment or sits inside another cup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SiteKind {
    /// Bounds are one step outside the segment containing `[i, i+1]`.
    Unencapsulated { a: i64, b: i64 },
    /// Bounds are the innermost cup enclosing `(i, i+1)`.
    Encapsulated { a: i64, b: i64 },
}

impl SiteKind {
    pub fn bounds(self) -> (i64, i64) {
        match self {
            SiteKind::Unencapsulated { a, b } | SiteKind::Encapsulated { a, b } => (a, b),
        }
    }

    pub fn is_encapsulated(self) -> bool {
        matches!(self, SiteKind::Encapsulated { .. })
    }
}

/// A vee at `i` followed by `∧` at `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveSite {
    pub center: CompactedDiagram,
    pub i: i64,
    pub kind: SiteKind,
}

impl MoveSite {
    /// Classify position `i`; `None` unless `i` is a vee and `i + 1` is not.
    pub fn at(center: &CompactedDiagram, i: i64) -> Option<MoveSite> {
        if !center.contains(i) || center.contains(i + 1) {
            return None;
        }
        let cups = center.build();
        Some(MoveSite {
            center: center.clone(),
            i,
            kind: classify(&cups, i),
        })
    }
}

fn classify(cups: &CupDiagram, i: i64) -> SiteKind {
    match cups.enclosing_cup((i, i + 1)) {
        Some((a, b)) => SiteKind::Encapsulated { a, b },
        None => {
            let (s, t) = cups
                .segment_of(i)
                .expect("a top level cup lies in some segment");
            SiteKind::Unencapsulated { a: s - 1, b: t + 1 }
        }
    }
}

/// All sites of a diagram, left to right.
pub fn move_sites(d: &CompactedDiagram) -> Vec<MoveSite> {
    let cups = d.build();
    d.vees()
        .iter()
        .copied()
        .filter(|&i| !d.contains(i + 1))
        .map(|i| MoveSite {
            center: d.clone(),
            i,
            kind: classify(&cups, i),
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MoveKind {
    Up,
    Boundary,
    InternalLower,
    InternalUpper,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Constituent {
    pub diagram: CompactedDiagram,
    #[serde(rename = "move")]
    pub kind: MoveKind,
    pub multiplicity: u32,
}

/// Middle Loewy layer of the translated module at a site.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MoveExpansion {
    pub site: MoveSite,
    pub middle: Vec<Constituent>,
}

impl MoveExpansion {
    pub fn middle_diagrams(&self) -> impl Iterator<Item = &CompactedDiagram> {
        self.middle.iter().map(|c| &c.diagram)
    }
}

/// Up, then boundary, then lower internal moves, then upper internal moves.
pub fn expand(site: &MoveSite) -> MoveExpansion {
    let d = &site.center;
    let i = site.i;
    let (a, b) = site.kind.bounds();
    let interior = d.build().inside(a, b);
    let entry = |diagram, kind| Constituent {
        diagram,
        kind,
        multiplicity: 1,
    };

    let mut middle = vec![entry(d.moved(i, i + 1), MoveKind::Up)];
    if !site.kind.is_encapsulated() {
        middle.push(entry(d.moved(i, a), MoveKind::Boundary));
    }
    for &(_, bj) in interior.sectors.iter().filter(|s| s.1 < i) {
        middle.push(entry(d.moved(i, bj), MoveKind::InternalLower));
    }
    for &(aj, _) in interior.sectors.iter().filter(|s| s.0 > i + 1) {
        middle.push(entry(d.moved(aj, i + 1), MoveKind::InternalUpper));
    }
    MoveExpansion {
        site: site.clone(),
        middle,
    }
}

/// `2 · m(lhs) = Σ m(rhs)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Relation {
    pub lhs: CompactedDiagram,
    pub rhs: Vec<CompactedDiagram>,
}

pub fn relation(site: &MoveSite) -> Relation {
    Relation {
        lhs: site.center.clone(),
        rhs: expand(site).middle.into_iter().map(|c| c.diagram).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(xs: &[i64]) -> CompactedDiagram {
        CompactedDiagram::from_vees(xs.iter().copied())
    }

    fn summary(e: &MoveExpansion) -> Vec<(Vec<i64>, MoveKind)> {
        e.middle
            .iter()
            .map(|c| (c.diagram.vees().to_vec(), c.kind))
            .collect()
    }

    #[test]
    fn sites() {
        let s = move_sites(&d(&[0, 1]));
        assert_eq!(s.len(), 1);
        assert_eq!((s[0].i, s[0].kind), (1, SiteKind::Encapsulated { a: 0, b: 3 }));

        let s = move_sites(&d(&[0, 2]));
        let got: Vec<_> = s.iter().map(|s| (s.i, s.kind)).collect();
        assert_eq!(
            got,
            vec![
                (0, SiteKind::Unencapsulated { a: -1, b: 4 }),
                (2, SiteKind::Unencapsulated { a: -1, b: 4 })
            ]
        );

        let s = move_sites(&d(&[5]));
        assert_eq!((s[0].i, s[0].kind), (5, SiteKind::Unencapsulated { a: 4, b: 7 }));
        assert!(MoveSite::at(&d(&[0, 1]), 0).is_none());
        assert!(MoveSite::at(&d(&[0, 1]), 2).is_none());
    }

    #[test]
    fn expansions() {
        let e = expand(&MoveSite::at(&d(&[1]), 1).unwrap());
        assert_eq!(summary(&e), vec![(vec![2], MoveKind::Up), (vec![0], MoveKind::Boundary)]);

        let e = expand(&MoveSite::at(&d(&[0, 2]), 2).unwrap());
        assert_eq!(
            summary(&e),
            vec![
                (vec![0, 3], MoveKind::Up),
                (vec![-1, 0], MoveKind::Boundary),
                (vec![0, 1], MoveKind::InternalLower)
            ]
        );

        let e = expand(&MoveSite::at(&d(&[0, 1]), 1).unwrap());
        assert_eq!(summary(&e), vec![(vec![0, 2], MoveKind::Up)]);

        let e = expand(&MoveSite::at(&d(&[0, 2]), 0).unwrap());
        assert_eq!(
            summary(&e),
            vec![
                (vec![1, 2], MoveKind::Up),
                (vec![-1, 2], MoveKind::Boundary),
                (vec![0, 1], MoveKind::InternalUpper)
            ]
        );
        assert!(e.middle.iter().all(|c| c.multiplicity == 1));
    }

    #[test]
    fn encapsulated_has_no_boundary() {
        let e = expand(&MoveSite::at(&d(&[0, 1, 3]), 3).unwrap());
        assert!(e.site.kind.is_encapsulated());
        assert!(e.middle.iter().all(|c| c.kind != MoveKind::Boundary));
        assert_eq!(
            summary(&e),
            vec![(vec![0, 1, 4], MoveKind::Up), (vec![0, 1, 2], MoveKind::InternalLower)]
        );
    }

    #[test]
    fn relations() {
        let r = relation(&MoveSite::at(&d(&[0, 1]), 1).unwrap());
        assert_eq!(r.lhs, d(&[0, 1]));
        assert_eq!(r.rhs, vec![d(&[0, 2])]);
    }

    #[test]
    fn crosses_survive_moves() {
        let lab = crate::Labeling {
            vees: [-1, 3].into(),
            crosses: [1].into(),
            circles: Default::default(),
        };
        let w = crate::SuperWeight::from_labeling(3, 2, &lab).unwrap();
        let c = crate::cup::compact(&w).unwrap();
        for site in move_sites(&c) {
            for m in expand(&site).middle {
                assert_eq!(m.diagram.crosses(), c.crosses());
                let back = m.diagram.to_weight().unwrap();
                assert!(back.is_maximal_atypical());
                assert_eq!(back.block(), w.block());
            }
        }
    }
}

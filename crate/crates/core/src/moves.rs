//! The five down-moves on arc diagrams, their short exact sequences and the
//! region where a single move changes the hom vector.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::ArcDiagram;
use crate::error::{Error, Result};
use crate::objects::{Indecomposable, S2Object};

/// A down-move. Field order is the lexicographic tie-break, and the derived
/// `Ord` (kind first, then points ascending) is the canonical move order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Move {
    /// Crossing arcs `(m,r)`, `(n,s)` become nested arcs `(m,s)`, `(n,r)`.
    A { m: u32, n: u32, r: u32, s: u32 },
    /// Arc `(m,s)` around pole `r` becomes arc `(m,r)` and pole `s`.
    B { m: u32, r: u32, s: u32 },
    /// Crossing arcs `(m,r)`, `(n,s)` become disjoint arcs `(m,n)`, `(r,s)`.
    C { m: u32, n: u32, r: u32, s: u32 },
    /// Arc `(m,s)` around pole `r` becomes arc `(r,s)` and pole `m`.
    D { m: u32, r: u32, s: u32 },
    /// Poles `m > r` join into the arc `(m,r)`.
    E { m: u32, r: u32 },
}

impl Move {
    pub fn kind(&self) -> char {
        match self {
            Move::A { .. } => 'A',
            Move::B { .. } => 'B',
            Move::C { .. } => 'C',
            Move::D { .. } => 'D',
            Move::E { .. } => 'E',
        }
    }

    /// `A` with `n = r + 1`: the inner arc of the result is a composite.
    pub fn is_a_prime(&self) -> bool {
        matches!(*self, Move::A { n, r, .. } if n == r + 1)
    }

    /// `"A'"` for the degenerate `A`, otherwise the kind letter.
    pub fn label(&self) -> String {
        if self.is_a_prime() {
            "A'".to_string()
        } else {
            self.kind().to_string()
        }
    }

    pub fn points(&self) -> Vec<u32> {
        match *self {
            Move::A { m, n, r, s } | Move::C { m, n, r, s } => vec![m, n, r, s],
            Move::B { m, r, s } | Move::D { m, r, s } => vec![m, r, s],
            Move::E { m, r } => vec![m, r],
        }
    }

    pub fn from_parts(kind: char, points: &[u32]) -> Result<Self> {
        let bad = || Error::Parse(format!("bad move {kind}{points:?}"));
        let mv = match (kind.to_ascii_uppercase(), points) {
            ('A', &[m, n, r, s]) => Move::A { m, n, r, s },
            ('C', &[m, n, r, s]) => Move::C { m, n, r, s },
            ('B', &[m, r, s]) => Move::B { m, r, s },
            ('D', &[m, r, s]) => Move::D { m, r, s },
            ('E', &[m, r]) => Move::E { m, r },
            _ => return Err(bad()),
        };
        let p = mv.points();
        if p.windows(2).all(|w| w[0] > w[1]) && p.last().is_some_and(|&x| x >= 1) {
            Ok(mv)
        } else {
            Err(bad())
        }
    }

    /// Rewrites `diagram`, failing if the arcs and poles the move needs are absent.
    pub fn apply(&self, diagram: &ArcDiagram) -> Result<ArcDiagram> {
        let not_applicable = || Error::MoveNotApplicable(self.to_string());
        let mut d = diagram.clone();
        let take_arc = |d: &mut ArcDiagram, a: (u32, u32)| -> Result<()> {
            let arcs = d.arcs_mut();
            let i = arcs
                .iter()
                .position(|&x| x == a)
                .ok_or_else(not_applicable)?;
            arcs.remove(i);
            Ok(())
        };
        let take_pole = |d: &mut ArcDiagram, p: u32| -> Result<()> {
            let poles = d.poles_mut();
            let i = poles
                .iter()
                .position(|&x| x == p)
                .ok_or_else(not_applicable)?;
            poles.remove(i);
            Ok(())
        };
        let p = self.points();
        if p.windows(2).any(|w| w[0] <= w[1]) || p.last() == Some(&0) {
            return Err(not_applicable());
        }
        match *self {
            Move::A { m, n, r, s } => {
                take_arc(&mut d, (m, r))?;
                take_arc(&mut d, (n, s))?;
                d.arcs_mut().extend([(m, s), (n, r)]);
            }
            Move::C { m, n, r, s } => {
                take_arc(&mut d, (m, r))?;
                take_arc(&mut d, (n, s))?;
                d.arcs_mut().extend([(m, n), (r, s)]);
            }
            Move::B { m, r, s } => {
                take_arc(&mut d, (m, s))?;
                take_pole(&mut d, r)?;
                d.arcs_mut().push((m, r));
                d.poles_mut().push(s);
            }
            Move::D { m, r, s } => {
                take_arc(&mut d, (m, s))?;
                take_pole(&mut d, r)?;
                d.arcs_mut().push((r, s));
                d.poles_mut().push(m);
            }
            Move::E { m, r } => {
                take_pole(&mut d, m)?;
                take_pole(&mut d, r)?;
                d.arcs_mut().push((m, r));
            }
        }
        d.normalize();
        Ok(d)
    }

    /// The short exact sequence `(U, M, V)` realizing the move: `U` and `V`
    /// are the summands the move removes from the larger object, `M` the
    /// summands it puts in their place.
    pub fn ses_witness(&self) -> (S2Object, S2Object, S2Object) {
        let p1 = |x| S2Object::from(Indecomposable::P1(x));
        match *self {
            Move::A { m, n, r, s } => (
                arc_object(n, s),
                arc_object(m, s).sum(&arc_object(n, r)),
                arc_object(m, r),
            ),
            Move::B { m, r, s } => (arc_object(m, s), arc_object(m, r).sum(&p1(s)), p1(r)),
            Move::C { m, n, r, s } => (
                arc_object(m, r),
                arc_object(m, n).sum(&arc_object(r, s)),
                arc_object(n, s),
            ),
            Move::D { m, r, s } => (p1(r), p1(m).sum(&arc_object(r, s)), arc_object(m, s)),
            Move::E { m, r } => (p1(m), arc_object(m, r), p1(r)),
        }
    }

    /// The two ends of [`Move::ses_witness`] as indecomposables. They are
    /// never composites.
    pub fn ses_ends(&self) -> (Indecomposable, Indecomposable) {
        use Indecomposable::{B2, P1};
        match *self {
            Move::A { m, n, r, s } => (B2 { m: n, r: s }, B2 { m, r }),
            Move::B { m, r, s } => (B2 { m, r: s }, P1(r)),
            Move::C { m, n, r, s } => (B2 { m, r }, B2 { m: n, r: s }),
            Move::D { m, r, s } => (P1(r), B2 { m, r: s }),
            Move::E { m, r } => (P1(m), P1(r)),
        }
    }

    /// Whether `δH_X = 1` for a pair differing by this move alone; zero elsewhere.
    pub fn region(&self, x: &Indecomposable) -> bool {
        use Indecomposable::{B2, P1};
        let between = |lo: u32, v: u32, hi: u32| lo < v && v <= hi;
        match (*self, *x) {
            (Move::A { m, n, r, s }, B2 { m: l, r: t }) => between(n, l, m) && between(s, t, r),
            (Move::B { m, r, s }, B2 { m: l, r: t }) => l > m && between(s, t, r),
            (Move::B { r, s, .. }, P1(l)) => between(s, l, r),
            (Move::C { m, n, r, s }, B2 { m: l, r: t }) => {
                (l > m && between(r, t, n)) || (between(r, l, n) && t <= s)
            }
            (Move::C { n, r, .. }, P1(l)) => between(r, l, n),
            (Move::D { m, r, s }, B2 { m: l, r: t }) => between(r, l, m) && t <= s,
            (Move::E { m, r }, B2 { m: l, r: t }) => l > m && t <= r,
            (Move::E { r, .. }, P1(l)) => l <= r,
            _ => false,
        }
    }
}

/// `B2(m, r)`, or the composite `P2(m) + P0(m-1)` when `r = m - 1`.
pub(crate) fn arc_object(m: u32, r: u32) -> S2Object {
    if r + 1 == m {
        S2Object::from_valid(vec![Indecomposable::P2(m), Indecomposable::P0(r)])
    } else {
        S2Object::from_valid(vec![Indecomposable::B2 { m, r }])
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points().iter().map(u32::to_string).collect();
        write!(f, "{}({})", self.kind(), pts.join(","))
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = chars
            .next()
            .ok_or_else(|| Error::Parse("empty move".into()))?;
        let rest = chars.as_str().trim_start_matches('\'');
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("bad move {s:?}")))?;
        let points = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad move point {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Move::from_parts(kind, &points)
    }
}

#[derive(Serialize, Deserialize)]
struct RawMove {
    kind: String,
    points: Vec<u32>,
}

impl Serialize for Move {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        RawMove {
            kind: self.label(),
            points: self.points(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Move {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawMove::deserialize(de)?;
        let kind = raw
            .kind
            .chars()
            .next()
            .ok_or_else(|| serde::de::Error::custom("empty move kind"))?;
        Move::from_parts(kind, &raw.points).map_err(serde::de::Error::custom)
    }
}

/// Every applicable down-move with its result, in canonical move order.
pub fn down_moves(diagram: &ArcDiagram) -> Vec<(Move, ArcDiagram)> {
    let arcs: BTreeSet<(u32, u32)> = diagram.arcs().iter().copied().collect();
    let poles: BTreeSet<u32> = diagram.poles().iter().copied().collect();
    let mut moves = BTreeSet::new();
    for &(m, r) in &arcs {
        for &(n, s) in &arcs {
            if m > n && n > r && r > s {
                moves.insert(Move::A { m, n, r, s });
                moves.insert(Move::C { m, n, r, s });
            }
        }
        for &p in &poles {
            if m > p && p > r {
                moves.insert(Move::B { m, r: p, s: r });
                moves.insert(Move::D { m, r: p, s: r });
            }
        }
    }
    for &m in &poles {
        for &r in poles.range(..m) {
            moves.insert(Move::E { m, r });
        }
    }
    moves
        .into_iter()
        .map(|mv| {
            let d = mv.apply(diagram).expect("enumerated move applies");
            (mv, d)
        })
        .collect()
}

/// Every up-move with its result: the inverses of the down-moves that land on `diagram`.
pub fn up_moves(diagram: &ArcDiagram) -> Vec<(Move, ArcDiagram)> {
    let arcs: BTreeSet<(u32, u32)> = diagram.arcs().iter().copied().collect();
    let poles: BTreeSet<u32> = diagram.poles().iter().copied().collect();
    let mut out = Vec::new();
    let mut push = |mv: Move, before: ArcDiagram| {
        debug_assert_eq!(mv.apply(&before).ok().as_ref(), Some(diagram));
        out.push((mv, before));
    };
    let with = |remove_arcs: &[(u32, u32)],
                remove_poles: &[u32],
                add_arcs: &[(u32, u32)],
                add_poles: &[u32]| {
        let mut d = diagram.clone();
        for a in remove_arcs {
            let i = d.arcs().iter().position(|x| x == a).expect("arc present");
            d.arcs_mut().remove(i);
        }
        for p in remove_poles {
            let i = d.poles().iter().position(|x| x == p).expect("pole present");
            d.poles_mut().remove(i);
        }
        d.arcs_mut().extend_from_slice(add_arcs);
        d.poles_mut().extend_from_slice(add_poles);
        d.normalize();
        d
    };
    let mut found = BTreeSet::new();
    for &(m, s) in &arcs {
        for &(n, r) in &arcs {
            // nested (m,s) ⊃ (n,r) came from A; disjoint (m,s) above (n,r) from C
            if m > n && n > r && r > s && (m, s) != (n, r) {
                found.insert(Move::A { m, n, r, s });
            }
            if s > n {
                found.insert(Move::C {
                    m,
                    n: s,
                    r: n,
                    s: r,
                });
            }
        }
        for &p in &poles {
            // arc (m,s) + pole p below s came from B; pole p above m from D
            if p < s {
                found.insert(Move::B { m, r: s, s: p });
            }
            if p > m {
                found.insert(Move::D { m: p, r: m, s });
            }
        }
        found.insert(Move::E { m, r: s });
    }
    for mv in found {
        let before = match mv {
            Move::A { m, n, r, s } => with(&[(m, s), (n, r)], &[], &[(m, r), (n, s)], &[]),
            Move::C { m, n, r, s } => with(&[(m, n), (r, s)], &[], &[(m, r), (n, s)], &[]),
            Move::B { m, r, s } => with(&[(m, r)], &[s], &[(m, s)], &[r]),
            Move::D { m, r, s } => with(&[(r, s)], &[m], &[(m, s)], &[r]),
            Move::E { m, r } => with(&[(m, r)], &[], &[], &[m, r]),
        };
        push(mv, before);
    }
    out
}

//! Arc diagrams and the bijection with objects of a fixed type.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::objects::{Indecomposable, S2Object};
use crate::partition::Partition;

/// Arcs `(m, r)` with `m > r >= 1`, poles and loops on the points `1, 2, 3, ...`.
///
/// All three multisets are stored sorted in decreasing order, so two diagrams
/// are equal iff their fields are.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram", into = "RawDiagram")]
pub struct ArcDiagram {
    arcs: Vec<(u32, u32)>,
    poles: Vec<u32>,
    loops: Vec<u32>,
}

impl ArcDiagram {
    pub fn new(arcs: Vec<(u32, u32)>, poles: Vec<u32>, loops: Vec<u32>) -> Result<Self> {
        if let Some(&(m, r)) = arcs.iter().find(|&&(m, r)| r == 0 || m <= r) {
            return Err(Error::InconsistentDiagram(format!("bad arc {m}-{r}")));
        }
        if poles.contains(&0) || loops.contains(&0) {
            return Err(Error::InconsistentDiagram("point 0".into()));
        }
        Ok(Self::from_parts(arcs, poles, loops))
    }

    pub(crate) fn from_parts(
        mut arcs: Vec<(u32, u32)>,
        mut poles: Vec<u32>,
        mut loops: Vec<u32>,
    ) -> Self {
        arcs.sort_unstable_by(|a, b| b.cmp(a));
        poles.sort_unstable_by(|a, b| b.cmp(a));
        loops.sort_unstable_by(|a, b| b.cmp(a));
        ArcDiagram { arcs, poles, loops }
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn poles(&self) -> &[u32] {
        &self.poles
    }

    pub fn loops(&self) -> &[u32] {
        &self.loops
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty() && self.poles.is_empty() && self.loops.is_empty()
    }

    /// Number of strictly interleaving arc pairs plus arc/pole pairs with the
    /// pole strictly inside the arc.
    pub fn crossings(&self) -> u64 {
        let mut x = 0;
        for (i, &a) in self.arcs.iter().enumerate() {
            for &b in &self.arcs[i + 1..] {
                let ((m, r), (n, s)) = if a.0 >= b.0 { (a, b) } else { (b, a) };
                if m > n && n > r && r > s {
                    x += 1;
                }
            }
            for &p in &self.poles {
                if a.0 > p && p > a.1 {
                    x += 1;
                }
            }
        }
        x
    }

    /// A part 2 for each arc or loop and a part 1 for each pole.
    pub fn alpha(&self) -> Partition {
        std::iter::repeat_n(2, self.arcs.len() + self.loops.len())
            .chain(std::iter::repeat_n(1, self.poles.len()))
            .collect()
    }

    /// Diagram of an object: `P2(m)` is paired with `P0(m-1)` as often as
    /// possible and each pair becomes the arc `(m, m-1)`; bipickets are arcs,
    /// `P1` summands poles, unpaired `P2` summands loops; `P0` is invisible.
    pub fn of_object(object: &S2Object) -> ArcDiagram {
        let mut free_p0: BTreeMap<u32, usize> = BTreeMap::new();
        for s in object.summands() {
            if let Indecomposable::P0(m) = *s {
                *free_p0.entry(m).or_insert(0) += 1;
            }
        }
        let (mut arcs, mut poles, mut loops) = (Vec::new(), Vec::new(), Vec::new());
        for s in object.summands() {
            match *s {
                Indecomposable::B2 { m, r } => arcs.push((m, r)),
                Indecomposable::P1(m) => poles.push(m),
                Indecomposable::P2(m) => match free_p0.get_mut(&(m - 1)) {
                    Some(n) if *n > 0 => {
                        *n -= 1;
                        arcs.push((m, m - 1));
                    }
                    _ => loops.push(m),
                },
                Indecomposable::P0(_) => {}
            }
        }
        ArcDiagram::from_parts(arcs, poles, loops)
    }

    /// The unique object of type `(β, γ)` with this diagram.
    pub fn to_object(&self, beta: &Partition, gamma: &Partition) -> Result<S2Object> {
        let mut remaining: BTreeMap<u32, usize> = BTreeMap::new();
        for &p in beta.parts() {
            *remaining.entry(p).or_insert(0) += 1;
        }
        let mut consume = |point: u32| -> Result<()> {
            match remaining.get_mut(&point) {
                Some(n) if *n > 0 => {
                    *n -= 1;
                    Ok(())
                }
                _ => Err(Error::InconsistentDiagram(format!(
                    "no unused part {point} in {beta:?}"
                ))),
            }
        };
        let mut summands = Vec::new();
        for &(m, r) in &self.arcs {
            consume(m)?;
            consume(r)?;
            if r + 1 == m {
                summands.push(Indecomposable::P2(m));
                summands.push(Indecomposable::P0(r));
            } else {
                summands.push(Indecomposable::B2 { m, r });
            }
        }
        for &m in &self.loops {
            consume(m)?;
            if m < 2 {
                return Err(Error::InconsistentDiagram(format!("loop at {m}")));
            }
            summands.push(Indecomposable::P2(m));
        }
        for &m in &self.poles {
            consume(m)?;
            summands.push(Indecomposable::P1(m));
        }
        for (&w, &n) in &remaining {
            summands.extend(std::iter::repeat_n(Indecomposable::P0(w), n));
        }
        let object = S2Object::from_valid(summands);
        let (_, got) = object.object_type();
        if &got != gamma {
            return Err(Error::InconsistentDiagram(format!(
                "diagram {self} with β = {beta:?} has γ = {got:?}, expected {gamma:?}"
            )));
        }
        Ok(object)
    }

    pub(crate) fn arcs_mut(&mut self) -> &mut Vec<(u32, u32)> {
        &mut self.arcs
    }

    pub(crate) fn poles_mut(&mut self) -> &mut Vec<u32> {
        &mut self.poles
    }

    pub(crate) fn normalize(&mut self) {
        self.arcs.sort_unstable_by(|a, b| b.cmp(a));
        self.poles.sort_unstable_by(|a, b| b.cmp(a));
    }
}

impl fmt::Display for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(",");
        write!(
            f,
            "arcs:{}; poles:{}; loops:{}",
            join(&mut self.arcs.iter().map(|(m, r)| format!("{m}-{r}"))),
            join(&mut self.poles.iter().map(u32::to_string)),
            join(&mut self.loops.iter().map(u32::to_string)),
        )
    }
}

impl fmt::Debug for ArcDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ArcDiagram {
    type Err = Error;

    /// Parses `arcs:7-3,6-2; poles:1; loops:`; groups may be omitted or empty.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |what: &str| Error::Parse(format!("bad diagram {s:?}: {what}"));
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad(t));
        let (mut arcs, mut poles, mut loops) = (Vec::new(), Vec::new(), Vec::new());
        for group in s.split(';').map(str::trim).filter(|g| !g.is_empty()) {
            let (name, body) = group.split_once(':').ok_or_else(|| bad(group))?;
            let items = body.split(',').map(str::trim).filter(|t| !t.is_empty());
            match name.trim() {
                "arcs" => {
                    for item in items {
                        let (m, r) = item.split_once('-').ok_or_else(|| bad(item))?;
                        arcs.push((num(m)?, num(r)?));
                    }
                }
                "poles" => poles = items.map(num).collect::<Result<_>>()?,
                "loops" => loops = items.map(num).collect::<Result<_>>()?,
                other => return Err(bad(other)),
            }
        }
        ArcDiagram::new(arcs, poles, loops)
    }
}

#[derive(Serialize, Deserialize)]
struct RawDiagram {
    #[serde(default)]
    arcs: Vec<[u32; 2]>,
    #[serde(default)]
    poles: Vec<u32>,
    #[serde(default)]
    loops: Vec<u32>,
}

impl TryFrom<RawDiagram> for ArcDiagram {
    type Error = Error;

    fn try_from(raw: RawDiagram) -> Result<Self> {
        ArcDiagram::new(
            raw.arcs.into_iter().map(|[m, r]| (m, r)).collect(),
            raw.poles,
            raw.loops,
        )
    }
}

impl From<ArcDiagram> for RawDiagram {
    fn from(d: ArcDiagram) -> Self {
        RawDiagram {
            arcs: d.arcs.into_iter().map(|(m, r)| [m, r]).collect(),
            poles: d.poles,
            loops: d.loops,
        }
    }
}

/// Diagram of an object.
pub fn diagram_of_object(object: &S2Object) -> ArcDiagram {
    ArcDiagram::of_object(object)
}

/// Inverse of [`diagram_of_object`] on objects of type `(β, γ)`.
pub fn object_of_diagram(
    diagram: &ArcDiagram,
    beta: &Partition,
    gamma: &Partition,
) -> Result<S2Object> {
    diagram.to_object(beta, gamma)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::enumerate_objects;

    fn obj(s: &str) -> S2Object {
        s.parse().unwrap()
    }

    fn dia(s: &str) -> ArcDiagram {
        s.parse().unwrap()
    }

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn worked_object_diagram() {
        let x = obj("B(5,3)+B(4,2)+P2(5)+P0(2)+P2(3)+P1(3)+P0(1)+P1(1)");
        let d = diagram_of_object(&x);
        assert_eq!(d, dia("arcs:5-3,4-2,3-2; poles:3,1; loops:5"));
        assert_eq!(d.crossings(), 2);
    }

    #[test]
    fn descent_example_diagram() {
        let z = obj("P1(7)+P1(4)+P1(2)+B(6,3)+B(5,1)");
        assert_eq!(
            diagram_of_object(&z),
            dia("arcs:6-3,5-1; poles:7,4,2; loops:")
        );
        assert!(diagram_of_object(&obj("P0(4)+P0(2)")).is_empty());
    }

    #[test]
    fn diagram_to_object() {
        let (b, g) = (p(&[2, 1]), p(&[1]));
        assert_eq!(
            dia("arcs:2-1").to_object(&b, &g).unwrap(),
            obj("P2(2)+P0(1)")
        );
        assert_eq!(
            ArcDiagram::default()
                .to_object(&p(&[3, 1]), &p(&[3, 1]))
                .unwrap(),
            obj("P0(3)+P0(1)")
        );
        assert!(matches!(
            dia("poles:3").to_object(&b, &g),
            Err(Error::InconsistentDiagram(_))
        ));
        // right parts, wrong cokernel
        assert!(dia("poles:2").to_object(&b, &g).is_err());
    }

    #[test]
    fn crossing_examples() {
        assert_eq!(dia("arcs:4-3,2-1; loops:3").crossings(), 0);
        assert_eq!(dia("arcs:4-1,3-2; loops:3").crossings(), 0);
        assert_eq!(dia("arcs:4-1; poles:3,2; loops:3").crossings(), 2);
        // shared endpoints never cross
        assert_eq!(dia("arcs:4-2,2-1; poles:4,2").crossings(), 0);
        assert_eq!(dia("arcs:5-2,4-1,4-1").crossings(), 2);
    }

    #[test]
    fn text_and_json() {
        let d = dia("arcs:7-3,6-2; poles:1; loops:");
        assert_eq!(d.to_string(), "arcs:7-3,6-2; poles:1; loops:");
        let v = serde_json::to_value(&d).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"arcs":[[7,3],[6,2]],"poles":[1],"loops":[]})
        );
        assert_eq!(serde_json::from_value::<ArcDiagram>(v).unwrap(), d);
        assert!("arcs:2-3".parse::<ArcDiagram>().is_err());
        assert!("bogus:1".parse::<ArcDiagram>().is_err());
    }

    #[test]
    fn round_trip_and_injectivity_on_types() {
        let types: &[(&[u32], &[u32])] = &[
            (&[4, 3, 3, 2, 1], &[3, 2, 1, 1]),
            (&[3, 3, 2, 1], &[2, 2, 1]),
            (&[5, 4, 3, 2], &[4, 3, 1]),
            (&[4, 3, 2, 1, 1], &[3, 2, 1]),
        ];
        for (b, g) in types {
            let (beta, gamma) = (p(b), p(g));
            let objects = enumerate_objects(&beta, &gamma);
            let diagrams: std::collections::BTreeSet<_> =
                objects.iter().map(diagram_of_object).collect();
            assert_eq!(diagrams.len(), objects.len());
            for o in &objects {
                let d = diagram_of_object(o);
                assert_eq!(&d.to_object(&beta, &gamma).unwrap(), o);
                assert_eq!(beta.weight(), gamma.weight() + o.alpha().weight());
                assert_eq!(d.alpha(), o.alpha());
            }
        }
    }

    #[test]
    fn crossings_ignore_loops_and_invisible_summands() {
        let base = obj("B(6,2)+B(5,1)+P1(4)+P1(3)");
        let padded = base.sum(&obj("P2(7)+P0(3)+P0(1)"));
        assert_eq!(
            diagram_of_object(&base).crossings(),
            diagram_of_object(&padded).crossings()
        );
    }
}

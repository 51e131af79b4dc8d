//! The arc order on a fixed type: reachability under down-moves, the Hasse
//! diagram and the extremal elements.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::diagram::{diagram_of_object, ArcDiagram};
use crate::error::{Error, Result};
use crate::geometry::stratum_dim;
use crate::moves::{down_moves, Move};
use crate::objects::{enumerate_objects, S2Object};
use crate::partition::Partition;

/// `Y <=_arc Z`: `Δ(Y)` is reached from `Δ(Z)` by down-moves.
pub fn arc_leq(y: &S2Object, z: &S2Object) -> Result<bool> {
    let (ty, tz) = (y.object_type(), z.object_type());
    if ty != tz {
        return Err(Error::type_mismatch(&ty, &tz));
    }
    let target = diagram_of_object(y);
    let start = diagram_of_object(z);
    let mut seen = HashSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(d) = queue.pop_front() {
        if d == target {
            return Ok(true);
        }
        for (_, next) in down_moves(&d) {
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(false)
}

/// A cover relation `upper > lower` with a move realizing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverEdge {
    pub upper: usize,
    pub lower: usize,
    #[serde(rename = "move")]
    pub mv: Move,
}

/// All objects of one type with the down-move graph and its transitive closure.
#[derive(Clone, Debug)]
pub struct Poset {
    beta: Partition,
    gamma: Partition,
    objects: Vec<S2Object>,
    diagrams: Vec<ArcDiagram>,
    /// single down-moves `(move, target)` out of each element
    moves: Vec<Vec<(Move, usize)>>,
    /// `below[i][j]`: `j <=_arc i`
    below: Vec<Vec<bool>>,
}

impl Poset {
    pub fn new(beta: &Partition, gamma: &Partition) -> Self {
        let objects = enumerate_objects(beta, gamma);
        let diagrams: Vec<ArcDiagram> = objects.iter().map(diagram_of_object).collect();
        let index: BTreeMap<&ArcDiagram, usize> =
            diagrams.iter().enumerate().map(|(i, d)| (d, i)).collect();
        let moves: Vec<Vec<(Move, usize)>> = diagrams
            .iter()
            .map(|d| {
                down_moves(d)
                    .into_iter()
                    .map(|(mv, lower)| {
                        let j = *index.get(&lower).expect("down-moves stay inside the type");
                        (mv, j)
                    })
                    .collect()
            })
            .collect();

        // each down-move lowers (poles, crossings), so sort by that key and close downwards
        let n = objects.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| (diagrams[i].poles().len(), diagrams[i].crossings()));
        let mut below = vec![vec![false; n]; n];
        for &i in &order {
            below[i][i] = true;
            for &(_, j) in &moves[i] {
                let row = below[j].clone();
                for (k, b) in row.into_iter().enumerate() {
                    below[i][k] |= b;
                }
            }
        }
        Poset {
            beta: beta.clone(),
            gamma: gamma.clone(),
            objects,
            diagrams,
            moves,
            below,
        }
    }

    pub fn beta(&self) -> &Partition {
        &self.beta
    }

    pub fn gamma(&self) -> &Partition {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[S2Object] {
        &self.objects
    }

    pub fn diagrams(&self) -> &[ArcDiagram] {
        &self.diagrams
    }

    pub fn index_of(&self, object: &S2Object) -> Option<usize> {
        self.objects.binary_search(object).ok()
    }

    /// Single down-moves out of element `i`.
    pub fn moves_from(&self, i: usize) -> &[(Move, usize)] {
        &self.moves[i]
    }

    /// `objects[j] <=_arc objects[i]`.
    pub fn leq(&self, j: usize, i: usize) -> bool {
        self.below[i][j]
    }

    /// Transitive reduction. Every cover is a single move, so only move edges
    /// are candidates.
    pub fn hasse(&self) -> Vec<CoverEdge> {
        let mut out = Vec::new();
        for (i, moves) in self.moves.iter().enumerate() {
            let mut seen = HashSet::new();
            for &(mv, j) in moves {
                if !seen.insert(j) {
                    continue;
                }
                let shortcut = moves.iter().any(|&(_, k)| k != j && self.below[k][j]);
                if !shortcut {
                    out.push(CoverEdge {
                        upper: i,
                        lower: j,
                        mv,
                    });
                }
            }
        }
        out
    }

    /// Elements with no up-move.
    pub fn maximal(&self) -> Vec<usize> {
        let n = self.len();
        (0..n)
            .filter(|&i| (0..n).all(|k| k == i || !self.below[k][i]))
            .collect()
    }

    /// Elements with no down-move.
    pub fn minimal(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.moves[i].is_empty())
            .collect()
    }

    /// Graphviz export: nodes carry the diagram, α, crossings and stratum
    /// dimension; edges point from the larger element to the smaller.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph arc_order {{");
        let _ = writeln!(s, "  rankdir=TB;");
        let _ = writeln!(s, "  node [shape=box, fontname=\"monospace\"];");
        for (i, (o, d)) in self.objects.iter().zip(&self.diagrams).enumerate() {
            let _ = writeln!(
                s,
                "  n{i} [label=\"{d}\\nalpha=({}) x={} dim={}\", tooltip=\"{o}\"];",
                o.alpha(),
                d.crossings(),
                stratum_dim(o)
            );
        }
        for e in self.hasse() {
            let _ = writeln!(s, "  n{} -> n{} [label=\"{}\"];", e.upper, e.lower, e.mv);
        }
        s.push_str("}\n");
        s
    }
}

/// Cover edges of the arc order on `enumerate_objects(β, γ)`, as object pairs.
pub fn hasse(beta: &Partition, gamma: &Partition) -> Vec<(S2Object, S2Object, Move)> {
    let poset = Poset::new(beta, gamma);
    poset
        .hasse()
        .into_iter()
        .map(|e| {
            (
                poset.objects[e.upper].clone(),
                poset.objects[e.lower].clone(),
                e.mv,
            )
        })
        .collect()
}

/// `(maximal, minimal)` elements of the type.
pub fn extrema(beta: &Partition, gamma: &Partition) -> (Vec<S2Object>, Vec<S2Object>) {
    let poset = Poset::new(beta, gamma);
    let pick = |ix: Vec<usize>| ix.into_iter().map(|i| poset.objects[i].clone()).collect();
    (pick(poset.maximal()), pick(poset.minimal()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::hom_leq;

    fn obj(s: &str) -> S2Object {
        s.parse().unwrap()
    }

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn dia(s: &str) -> ArcDiagram {
        s.parse().unwrap()
    }

    const Y: &str = "B(7,3)+B(6,2)+P2(5)+P0(4)+P1(1)";
    const Z: &str = "B(6,3)+B(5,1)+P1(7)+P1(4)+P1(2)";

    #[test]
    fn arc_leq_examples() {
        assert!(arc_leq(&obj(Y), &obj(Z)).unwrap());
        assert!(!arc_leq(&obj(Z), &obj(Y)).unwrap());
        let lo = obj("B(5,3)+B(4,2)+P2(3)+P0(2)+P1(3)+P1(1)");
        let hi = obj("B(5,1)+B(4,2)+P2(3)+P0(2)+P1(3)+P1(3)");
        assert_eq!(
            diagram_of_object(&hi),
            dia("arcs:5-1,4-2,3-2; poles:3,3; loops:")
        );
        assert!(arc_leq(&lo, &hi).unwrap());
        assert!(arc_leq(&obj("P1(1)"), &obj("P2(2)+P0(1)")).is_err());
    }

    #[test]
    fn small_hasse() {
        let (beta, gamma) = (p(&[3, 3, 2, 1]), p(&[2, 2, 1]));
        let poset = Poset::new(&beta, &gamma);
        assert_eq!(poset.len(), 5);
        let mut edges: Vec<(String, String)> = poset
            .hasse()
            .iter()
            .map(|e| {
                (
                    poset.diagrams()[e.upper].to_string(),
                    poset.diagrams()[e.lower].to_string(),
                )
            })
            .collect();
        edges.sort();
        let mut expected: Vec<(String, String)> = [
            (
                "arcs:; poles:3,3,2,1; loops:",
                "arcs:3-1; poles:3,2; loops:",
            ),
            ("arcs:3-1; poles:3,2; loops:", "arcs:3-2; poles:3,1; loops:"),
            ("arcs:3-1; poles:3,2; loops:", "arcs:2-1; poles:3,3; loops:"),
            (
                "arcs:3-2; poles:3,1; loops:",
                "arcs:3-2,3-1; poles:; loops:",
            ),
        ]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
        expected.sort();
        assert_eq!(edges, expected);
        assert_eq!(poset.maximal().len(), 1);
        assert_eq!(poset.minimal().len(), 2);
        // E(3,2) from the top is a move but not a cover
        let top = poset.maximal()[0];
        assert!(poset
            .moves_from(top)
            .iter()
            .any(|(mv, _)| *mv == Move::E { m: 3, r: 2 }));
    }

    #[test]
    fn trivial_and_two_element_types() {
        assert!(hasse(&p(&[3, 1]), &p(&[3, 1])).is_empty());
        let (max, min) = extrema(&p(&[2, 1]), &p(&[1]));
        assert_eq!(max, vec![obj("P1(2)+P1(1)")]);
        assert_eq!(min, vec![obj("P2(2)+P0(1)")]);
    }

    #[test]
    fn figure_type() {
        let poset = Poset::new(&p(&[4, 3, 3, 2, 1]), &p(&[3, 2, 1, 1]));
        assert_eq!(poset.len(), 10);
        let max = poset.maximal();
        assert_eq!(max.len(), 1);
        assert_eq!(
            poset.diagrams()[max[0]],
            dia("arcs:; poles:4,3,2,1; loops:3")
        );
        assert_eq!(poset.minimal().len(), 2);
        let dot = poset.to_dot();
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches(" -> ").count(), poset.hasse().len());
    }

    #[test]
    fn arc_and_hom_orders_agree() {
        for beta in Partition::all_up_to_weight(6) {
            for gamma in beta.subpartitions() {
                let poset = Poset::new(&beta, &gamma);
                let objs = poset.objects();
                for (i, z) in objs.iter().enumerate() {
                    for (j, y) in objs.iter().enumerate() {
                        assert_eq!(poset.leq(j, i), hom_leq(y, z).unwrap(), "{y} vs {z}");
                    }
                }
                if !poset.is_empty() {
                    assert_eq!(poset.maximal().len(), 1);
                    assert!(poset.diagrams()[poset.maximal()[0]].arcs().is_empty());
                }
            }
        }
    }

    #[test]
    fn poset_matches_bfs() {
        for beta in Partition::all_up_to_weight(5) {
            for gamma in beta.subpartitions() {
                let poset = Poset::new(&beta, &gamma);
                let objs = poset.objects();
                for (i, z) in objs.iter().enumerate() {
                    for (j, y) in objs.iter().enumerate() {
                        assert_eq!(poset.leq(j, i), arc_leq(y, z).unwrap());
                    }
                }
            }
        }
    }
}

//! Hom dimensions between objects, the difference vectors `δH` and `δM`, the
//! hom order, and the mesh (defect) identity on the band of bipickets.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::objects::{Indecomposable, S2Object};
use crate::partition::Partition;

/// An argument of the Hom table: an indecomposable, or the composite
/// `P2(m) ⊕ P0(m-1)` which the table treats as the degenerate bipicket
/// `B2(m, m-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Vertex {
    Indec(Indecomposable),
    Composite(u32),
}

impl From<Indecomposable> for Vertex {
    fn from(x: Indecomposable) -> Self {
        Vertex::Indec(x)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Indec(x) => write!(f, "{x}"),
            Vertex::Composite(m) => write!(f, "P2({m})+P0({})", m - 1),
        }
    }
}

/// Shape of a table row or column. `Bi` admits `r = m - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Shape {
    P0(i64),
    P1(i64),
    P2(i64),
    Bi(i64, i64),
}

impl From<Indecomposable> for Shape {
    fn from(x: Indecomposable) -> Self {
        match x {
            Indecomposable::P0(m) => Shape::P0(m.into()),
            Indecomposable::P1(m) => Shape::P1(m.into()),
            Indecomposable::P2(m) => Shape::P2(m.into()),
            Indecomposable::B2 { m, r } => Shape::Bi(m.into(), r.into()),
        }
    }
}

/// The Hom table, `dim Hom(x, y)`.
pub(crate) fn table(x: Shape, y: Shape) -> u64 {
    use Shape::*;
    let min = |a: i64, b: i64| a.min(b).max(0);
    let v = match (x, y) {
        (P0(l), P0(m) | P2(m) | P1(m)) => min(l, m),
        (P0(l), Bi(m, r)) => min(l, m) + min(l, r),

        (P2(l), P0(m)) => min(l - 2, m),
        (P2(l), P2(m)) => min(l, m),
        (P2(l), Bi(m, r)) => min(l - 1, m) + min(l - 1, r),
        (P2(l), P1(m)) => min(l - 1, m),

        (Bi(l, t), P0(m)) => min(l - 1, m) + min(t - 1, m),
        (Bi(l, t), P2(m)) => min(l, m) + min(t, m),
        (Bi(l, t), Bi(m, r)) => {
            min(l - 1, m) + min(t, m) + min(l - 1, r) + min(t, r) - i64::from(l > m && t <= r)
        }
        (Bi(l, t), P1(m)) => min(l - 1, m) + min(t, m),

        (P1(l), P0(m)) => min(l - 1, m),
        (P1(l), P2(m)) => min(l, m),
        (P1(l), Bi(m, r)) => min(l, m) + min(l - 1, r),
        (P1(l), P1(m)) => min(l, m),
    };
    debug_assert!(v >= 0);
    v as u64
}

fn vertex_shapes(v: Vertex) -> Vec<Shape> {
    match v {
        Vertex::Indec(x) => vec![x.into()],
        Vertex::Composite(m) => vec![Shape::P2(m.into()), Shape::P0(i64::from(m) - 1)],
    }
}

/// `dim Hom(x, y)` from the table; composites count additively.
pub fn hom_indec(x: impl Into<Vertex>, y: impl Into<Vertex>) -> u64 {
    let (xs, ys) = (vertex_shapes(x.into()), vertex_shapes(y.into()));
    xs.iter()
        .flat_map(|&a| ys.iter().map(move |&b| table(a, b)))
        .sum()
}

/// `[a, b] = dim Hom(a, b)`, extended biadditively.
pub fn hom_obj(a: &S2Object, b: &S2Object) -> u64 {
    a.summands()
        .iter()
        .flat_map(|&x| b.summands().iter().map(move |&y| hom_indec(x, y)))
        .sum()
}

/// `[x, b]` for a single argument on the left.
pub fn hom_from(x: impl Into<Vertex>, b: &S2Object) -> u64 {
    let x = x.into();
    b.summands().iter().map(|&y| hom_indec(x, y)).sum()
}

fn same_type(y: &S2Object, z: &S2Object) -> Result<(Partition, Partition)> {
    let (ty, tz) = (y.object_type(), z.object_type());
    if ty != tz {
        return Err(Error::type_mismatch(&ty, &tz));
    }
    Ok(ty)
}

/// `δH_X = [X, Z] - [X, Y]`.
pub fn delta_hom(y: &S2Object, z: &S2Object, x: impl Into<Vertex>) -> Result<i64> {
    same_type(y, z)?;
    Ok(delta_hom_unchecked(y, z, x.into()))
}

pub(crate) fn delta_hom_unchecked(y: &S2Object, z: &S2Object, x: Vertex) -> i64 {
    hom_from(x, z) as i64 - hom_from(x, y) as i64
}

/// `δM_X = μ_X(Z) - μ_X(Y)`.
pub fn delta_mult(y: &S2Object, z: &S2Object, x: &Indecomposable) -> Result<i64> {
    same_type(y, z)?;
    Ok(z.multiplicity(x) as i64 - y.multiplicity(x) as i64)
}

/// Test objects for the hom order on type `(β, _)`: `P1(t)` for `t <= β₁`
/// and bipickets `B2(ℓ, t)` with `ℓ <= β₁ + 1`.
///
/// `δH` vanishes at every `P0` and `P2`, and past these bounds every entry
/// repeats one already listed.
pub fn test_set(beta: &Partition) -> Vec<Indecomposable> {
    test_set_with_bound(beta, beta.first() + 1)
}

/// [`test_set`] with the bipicket bound `ℓ <= bipicket_bound` instead of `β₁ + 1`.
pub fn test_set_with_bound(beta: &Partition, bipicket_bound: u32) -> Vec<Indecomposable> {
    let mut out: Vec<Indecomposable> = (1..=beta.first()).map(Indecomposable::P1).collect();
    if beta.first() > 0 {
        for l in 3..=bipicket_bound {
            out.extend((1..=l - 2).map(|t| Indecomposable::B2 { m: l, r: t }));
        }
    }
    out.sort();
    out
}

/// `δH(Y, Z)` over the test set of the common type.
pub fn delta_hom_vector(y: &S2Object, z: &S2Object) -> Result<BTreeMap<Indecomposable, i64>> {
    let (beta, _) = same_type(y, z)?;
    Ok(test_set(&beta)
        .into_iter()
        .map(|x| (x, delta_hom_unchecked(y, z, x.into())))
        .collect())
}

/// `Y <=_hom Z`: `[X, Y] <= [X, Z]` for every test object `X`.
pub fn hom_leq(y: &S2Object, z: &S2Object) -> Result<bool> {
    let (beta, _) = same_type(y, z)?;
    Ok(hom_leq_over(y, z, &test_set(&beta)))
}

pub(crate) fn hom_leq_over(y: &S2Object, z: &S2Object, tests: &[Indecomposable]) -> bool {
    tests
        .iter()
        .all(|&x| delta_hom_unchecked(y, z, x.into()) >= 0)
}

/// A position `(ℓ, t)`, `0 <= t <= ℓ - 1`, on the band carrying the nonzero
/// part of `δH`. Column `ℓ` holds `P1(ℓ)` at `t = 0`, bipickets `B2(ℓ, t)`
/// in between and the composite at `t = ℓ - 1`, except that `(1, 0)` is `P1(1)`.
/// The translate of `(ℓ, t)` is `(ℓ + 1, t + 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
pub struct BandCell {
    pub ell: u32,
    pub t: u32,
}

impl BandCell {
    pub fn new(ell: u32, t: u32) -> Option<Self> {
        (ell >= 1 && t < ell).then_some(BandCell { ell, t })
    }

    pub fn label(&self) -> Vertex {
        if self.t == 0 {
            Vertex::Indec(Indecomposable::P1(self.ell))
        } else if self.t + 1 == self.ell {
            Vertex::Composite(self.ell)
        } else {
            Vertex::Indec(Indecomposable::B2 {
                m: self.ell,
                r: self.t,
            })
        }
    }

    /// The indecomposable at this cell, `None` on the composite edge.
    pub fn indecomposable(&self) -> Option<Indecomposable> {
        match self.label() {
            Vertex::Indec(x) => Some(x),
            Vertex::Composite(_) => None,
        }
    }

    /// Cell of an indecomposable on the band; `P0` and `P2` have none.
    pub fn of(x: &Indecomposable) -> Option<BandCell> {
        match *x {
            Indecomposable::P1(m) => Some(BandCell { ell: m, t: 0 }),
            Indecomposable::B2 { m, r } => Some(BandCell { ell: m, t: r }),
            _ => None,
        }
    }
}

/// `δH` read at a band cell; composite cells read 0.
pub(crate) fn band_value(y: &S2Object, z: &S2Object, cell: BandCell) -> i64 {
    match cell.label() {
        Vertex::Composite(_) => 0,
        v => delta_hom_unchecked(y, z, v),
    }
}

/// A cell where the mesh identity fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MeshViolation {
    pub cell: BandCell,
    pub delta_mult: i64,
    pub mesh_sum: i64,
}

/// Checks `δM(ℓ,t) = δh(ℓ,t) + δh(ℓ+1,t+1) - δh(ℓ+1,t) - δh(ℓ,t+1)` at every
/// cell `2 <= ℓ <= n - 1`, `0 <= t <= ℓ - 2`, and returns the failures.
pub fn mesh_defect_report(y: &S2Object, z: &S2Object, n: u32) -> Result<Vec<MeshViolation>> {
    same_type(y, z)?;
    let mut values: BTreeMap<(u32, u32), i64> = BTreeMap::new();
    let mut h = |ell: u32, t: u32| -> i64 {
        *values
            .entry((ell, t))
            .or_insert_with(|| band_value(y, z, BandCell { ell, t }))
    };
    let mut out = Vec::new();
    for ell in 2..n {
        for t in 0..=ell - 2 {
            let cell = BandCell { ell, t };
            let x = cell
                .indecomposable()
                .expect("t <= ell - 2 is not composite");
            let dm = z.multiplicity(&x) as i64 - y.multiplicity(&x) as i64;
            let mesh = h(ell, t) + h(ell + 1, t + 1) - h(ell + 1, t) - h(ell, t + 1);
            if dm != mesh {
                out.push(MeshViolation {
                    cell,
                    delta_mult: dm,
                    mesh_sum: mesh,
                });
            }
        }
    }
    Ok(out)
}

//! Descent: given `Y <=_hom Z`, find a move from `Z` that stays above `Y`,
//! and iterate to an explicit chain of moves from `Z` down to `Y`.
//!
//! A move is admissible for `(Y, Z)` when `δH(Y, Z) >= 1` on its region and
//! both ends of its exact sequence occur more often in `Z` than in `Y`.
//! Subtracting the region then keeps `δH` nonnegative.
//!
//! Two strategies are available. [`Strategy::Canonical`] tries the down-moves
//! of `Δ(Z)` in canonical order. [`Strategy::Walk`] reads the move off the
//! hom vector: on the unrolled band every region is a rectangle whose lower
//! left and upper right corners carry the two ends of the sequence.

use std::str::FromStr;

use serde::Serialize;

use crate::diagram::diagram_of_object;
use crate::error::{Error, Result};
use crate::hom::{delta_hom_unchecked, hom_leq, test_set, BandCell, Vertex};
use crate::moves::{down_moves, Move};
use crate::objects::{Indecomposable, S2Object};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    #[default]
    Canonical,
    Walk,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(Strategy::Canonical),
            "walk" => Ok(Strategy::Walk),
            _ => Err(Error::Parse(format!(
                "unknown strategy {s:?}, expected canonical or walk"
            ))),
        }
    }
}

/// Whether `mv` may be taken from `Z` on the way down to `Y`.
pub fn is_admissible(y: &S2Object, z: &S2Object, mv: &Move) -> bool {
    let (beta, _) = z.object_type();
    let positive_region = test_set(&beta)
        .into_iter()
        .filter(|x| mv.region(x))
        .all(|x| delta_hom_unchecked(y, z, x.into()) >= 1);
    let (u, v) = mv.ses_ends();
    let excess = |x: &Indecomposable| z.multiplicity(x) as i64 - y.multiplicity(x) as i64;
    let ends_ok = if u == v {
        excess(&u) >= 2
    } else {
        excess(&u) > 0 && excess(&v) > 0
    };
    positive_region && ends_ok
}

fn check_pair(y: &S2Object, z: &S2Object) -> Result<()> {
    let (ty, tz) = (y.object_type(), z.object_type());
    if ty != tz {
        return Err(Error::type_mismatch(&ty, &tz));
    }
    Ok(())
}

/// A move from `Z` whose result `Z'` satisfies `Y <=_hom Z' < Z`.
pub fn find_descent_move(y: &S2Object, z: &S2Object) -> Result<Move> {
    find_descent_move_with(y, z, Strategy::Canonical)
}

pub fn find_descent_move_with(y: &S2Object, z: &S2Object, strategy: Strategy) -> Result<Move> {
    check_pair(y, z)?;
    if y == z {
        return Err(Error::NoDescentMove);
    }
    if !hom_leq(y, z)? {
        return Err(Error::NotComparable);
    }
    let mv = match strategy {
        Strategy::Canonical => canonical_move(y, z)?,
        Strategy::Walk => walk_move(y, z)?,
    };
    let (beta, gamma) = z.object_type();
    let lower = mv.apply(&diagram_of_object(z))?.to_object(&beta, &gamma)?;
    if !hom_leq(y, &lower)? {
        return Err(Error::InternalInvariantViolation(format!(
            "{mv} from {z} leaves the cone above {y}"
        )));
    }
    Ok(mv)
}

fn canonical_move(y: &S2Object, z: &S2Object) -> Result<Move> {
    down_moves(&diagram_of_object(z))
        .into_iter()
        .map(|(mv, _)| mv)
        .find(|mv| is_admissible(y, z, mv))
        .ok_or_else(|| {
            Error::InternalInvariantViolation(format!("no admissible move from {z} towards {y}"))
        })
}

/// The unrolled band for a type with largest ambient part `β₁`.
///
/// Position `(I, J)` is defined for `1 <= I - J <= n` with `n = β₁ + 1`. The
/// fundamental domain `J >= 0, I <= n` holds the band cells; the glide
/// `(I, J) -> (J, I - L)`, `L = n + 1`, identifies the rest of the plane with it.
struct Sheet<'a> {
    y: &'a S2Object,
    z: &'a S2Object,
    n: i64,
}

impl Sheet<'_> {
    fn fold(&self, mut i: i64, mut j: i64) -> Option<BandCell> {
        let l = self.n + 1;
        let d = i - j;
        if d < 1 || d > self.n {
            return None;
        }
        for _ in 0..64 {
            if j < 0 {
                (i, j) = (l + j, i);
            } else if i >= l {
                (i, j) = (j, i - l);
            } else {
                return BandCell::new(u32::try_from(i).ok()?, u32::try_from(j).ok()?);
            }
        }
        None
    }

    fn h(&self, i: i64, j: i64) -> i64 {
        match self.fold(i, j) {
            Some(cell) => match cell.label() {
                Vertex::Composite(_) => 0,
                v => delta_hom_unchecked(self.y, self.z, v),
            },
            None => 0,
        }
    }

    fn end(&self, i: i64, j: i64) -> Option<Indecomposable> {
        let x = self.fold(i, j)?.indecomposable()?;
        (self.z.multiplicity(&x) > self.y.multiplicity(&x)).then_some(x)
    }
}

/// The move whose ends sit at the lower left corner `u` and upper right corner `v`.
fn move_from_corners(u: Indecomposable, v: Indecomposable) -> Option<Move> {
    use Indecomposable::{B2, P1};
    let (kind, points) = match (u, v) {
        (B2 { m: a, r: b }, B2 { m: c, r: d }) if c > a && a > d && d > b => {
            ('A', vec![c, a, d, b])
        }
        (B2 { m: a, r: b }, B2 { m: c, r: d }) if a > c && c > b && b > d => {
            ('C', vec![a, c, b, d])
        }
        (B2 { m: a, r: b }, P1(c)) => ('B', vec![a, c, b]),
        (P1(a), B2 { m: c, r: d }) => ('D', vec![c, a, d]),
        (P1(a), P1(c)) => ('E', vec![a, c]),
        _ => return None,
    };
    Move::from_parts(kind, &points).ok()
}

fn walk_move(y: &S2Object, z: &S2Object) -> Result<Move> {
    let (beta, _) = z.object_type();
    let sheet = Sheet {
        y,
        z,
        n: i64::from(beta.first()) + 1,
    };
    let n = sheet.n;
    let applicable: Vec<Move> = down_moves(&diagram_of_object(z))
        .into_iter()
        .map(|(mv, _)| mv)
        .collect();
    let in_domain = |i: i64, j: i64| (1..=n).contains(&(i - j));

    // Step 1: scan the columns through the fundamental domain, lowest first.
    // A maximal positive run in a column (it may leave the domain through the
    // glide) fixes the bottom and top rows of a rectangle.
    for i0 in 1..=n {
        let mut j = i0 - n + 1;
        while j <= i0 - 2 {
            if sheet.h(i0, j) <= 0 {
                j += 1;
                continue;
            }
            let mut lo = j;
            while in_domain(i0, lo - 1) && sheet.h(i0, lo - 1) > 0 {
                lo -= 1;
            }
            while in_domain(i0, j + 1) && sheet.h(i0, j + 1) > 0 {
                j += 1;
            }
            let hi = j;
            j += 1;

            // Step 2: walk right along the top row; each end met is a
            // candidate upper right corner.
            let mut u = i0;
            while in_domain(u, hi) && sheet.h(u, hi) > 0 {
                let Some(v) = sheet.end(u, hi) else {
                    u += 1;
                    continue;
                };
                // Step 3: walk left below the bottom row while the rectangle
                // stays positive; each end met is a candidate lower left corner.
                let mut w = i0 - 1;
                while in_domain(w, lo - 1) && in_domain(w + 1, lo) && sheet.h(w + 1, lo) > 0 {
                    let rect_positive = (w + 1..=u)
                        .all(|a| (lo..=hi).all(|b| in_domain(a, b) && sheet.h(a, b) > 0));
                    if !rect_positive {
                        break;
                    }
                    if let Some(mv) = sheet.end(w, lo - 1).and_then(|x| move_from_corners(x, v)) {
                        if applicable.contains(&mv) && is_admissible(y, z, &mv) {
                            return Ok(mv);
                        }
                    }
                    w -= 1;
                }
                u += 1;
            }
        }
    }
    Err(Error::InternalInvariantViolation(format!(
        "the band walk found no move from {z} towards {y}"
    )))
}

/// One move of a chain, with the objects before and after it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub kind: String,
    pub points: Vec<u32>,
    pub before: String,
    pub after: String,
    #[serde(skip)]
    pub mv: Move,
}

/// Moves taking `Δ(Z)` to `Δ(Y)`, every intermediate object staying above `Y`.
pub fn reduction_chain(y: &S2Object, z: &S2Object) -> Result<Vec<Move>> {
    Ok(reduction_steps(y, z, Strategy::Canonical)?
        .into_iter()
        .map(|s| s.mv)
        .collect())
}

pub fn reduction_steps(y: &S2Object, z: &S2Object, strategy: Strategy) -> Result<Vec<ChainStep>> {
    check_pair(y, z)?;
    if !hom_leq(y, z)? {
        return Err(Error::NotComparable);
    }
    let (beta, gamma) = z.object_type();
    let mut current = z.clone();
    let mut steps = Vec::new();
    while &current != y {
        let mv = find_descent_move_with(y, &current, strategy)?;
        let next = mv
            .apply(&diagram_of_object(&current))?
            .to_object(&beta, &gamma)?;
        steps.push(ChainStep {
            kind: mv.label(),
            points: mv.points(),
            before: current.to_string(),
            after: next.to_string(),
            mv,
        });
        current = next;
    }
    Ok(steps)
}

/// Replays `moves` from `Z`, returning every object along the way (`Z` first).
pub fn replay(z: &S2Object, moves: &[Move]) -> Result<Vec<S2Object>> {
    let (beta, gamma) = z.object_type();
    let mut out = vec![z.clone()];
    let mut d = diagram_of_object(z);
    for mv in moves {
        d = mv.apply(&d)?;
        out.push(d.to_object(&beta, &gamma)?);
    }
    Ok(out)
}

//! Indecomposable objects of the category of invariant subspaces with
//! nilpotency index at most two, and finite direct sums of them.

use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// An indecomposable object.
///
/// * `P0(m)`: the zero subspace of a single Jordan block of size `m`.
/// * `P1(m)`: the one-dimensional invariant subspace of a block of size `m`.
/// * `P2(m)`: the two-dimensional invariant subspace of a block of size `m >= 2`.
/// * `B2 { m, r }`: the bipicket, a two-dimensional subspace of `N_(m) ⊕ N_(r)`
///   generated by `(T^{m-2}, T^{r-1})`, with `1 <= r <= m - 2`.
///
/// The pair `P2(m) ⊕ P0(m-1)` is *not* an indecomposable; it is the object
/// drawn as an arc `(m, m-1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSummand", into = "RawSummand")]
pub enum Indecomposable {
    B2 { m: u32, r: u32 },
    P2(u32),
    P1(u32),
    P0(u32),
}

use Indecomposable::*;

impl Indecomposable {
    pub fn bipicket(m: u32, r: u32) -> Result<Self> {
        B2 { m, r }.validated()
    }

    pub fn picket(ell: u8, m: u32) -> Result<Self> {
        match ell {
            0 => P0(m),
            1 => P1(m),
            2 => P2(m),
            _ => return Err(Error::InvalidIndecomposable(format!("P{ell}({m})"))),
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        let ok = match self {
            B2 { m, r } => r >= 1 && r + 2 <= m,
            P2(m) => m >= 2,
            P1(m) | P0(m) => m >= 1,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::InvalidIndecomposable(self.to_string()))
        }
    }

    /// Jordan block sizes of the ambient operator.
    pub fn ambient_parts(&self) -> Vec<u32> {
        match *self {
            B2 { m, r } => vec![m, r],
            P2(m) | P1(m) | P0(m) => vec![m],
        }
    }

    /// Jordan block sizes of the cokernel (zeros included).
    pub fn quotient_parts(&self) -> Vec<u32> {
        match *self {
            B2 { m, r } => vec![m - 1, r - 1],
            P2(m) => vec![m - 2],
            P1(m) => vec![m - 1],
            P0(m) => vec![m],
        }
    }

    /// Dimension of the subspace.
    pub fn subspace_dim(&self) -> u32 {
        match self {
            B2 { .. } | P2(_) => 2,
            P1(_) => 1,
            P0(_) => 0,
        }
    }

    fn kind_rank(&self) -> u8 {
        match self {
            B2 { .. } => 0,
            P2(_) => 1,
            P1(_) => 2,
            P0(_) => 3,
        }
    }

    fn params(&self) -> (u32, u32) {
        match *self {
            B2 { m, r } => (m, r),
            P2(m) | P1(m) | P0(m) => (m, 0),
        }
    }

    /// All indecomposables whose parameters are at most `max`.
    pub fn all_up_to(max: u32) -> Vec<Indecomposable> {
        let mut out = Vec::new();
        for m in 1..=max {
            out.push(P0(m));
            out.push(P1(m));
            if m >= 2 {
                out.push(P2(m));
            }
            for r in 1..m.saturating_sub(1) {
                out.push(B2 { m, r });
            }
        }
        out.sort();
        out
    }
}

/// Canonical order: `B2` before `P2` before `P1` before `P0`, and within a kind
/// descending on the parameters.
impl Ord for Indecomposable {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |x: &Self| {
            let (m, r) = x.params();
            (x.kind_rank(), Reverse(m), Reverse(r))
        };
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for Indecomposable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            B2 { m, r } => write!(f, "B({m},{r})"),
            P2(m) => write!(f, "P2({m})"),
            P1(m) => write!(f, "P1({m})"),
            P0(m) => write!(f, "P0({m})"),
        }
    }
}

impl fmt::Debug for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Indecomposable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad summand {s:?}"));
        let open = s.find('(').ok_or_else(bad)?;
        let name = s[..open].trim();
        let args = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<u32>>>()?;
        let x = match (name, nums.as_slice()) {
            ("B" | "B2", &[m, r]) => B2 { m, r },
            ("P2", &[m]) => P2(m),
            ("P1", &[m]) => P1(m),
            ("P0", &[m]) => P0(m),
            _ => return Err(bad()),
        };
        x.validated()
    }
}

#[derive(Serialize, Deserialize)]
struct RawSummand {
    kind: String,
    m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    r: Option<u32>,
}

impl TryFrom<RawSummand> for Indecomposable {
    type Error = Error;

    fn try_from(raw: RawSummand) -> Result<Self> {
        let x = match (raw.kind.as_str(), raw.r) {
            ("B2", Some(r)) => B2 { m: raw.m, r },
            ("P2", None) => P2(raw.m),
            ("P1", None) => P1(raw.m),
            ("P0", None) => P0(raw.m),
            (kind, _) => return Err(Error::Parse(format!("bad summand kind {kind:?}"))),
        };
        x.validated()
    }
}

impl From<Indecomposable> for RawSummand {
    fn from(x: Indecomposable) -> Self {
        let (kind, m, r) = match x {
            B2 { m, r } => ("B2", m, Some(r)),
            P2(m) => ("P2", m, None),
            P1(m) => ("P1", m, None),
            P0(m) => ("P0", m, None),
        };
        RawSummand {
            kind: kind.to_owned(),
            m,
            r,
        }
    }
}

/// An isomorphism class: a finite multiset of indecomposables, kept in
/// canonical order.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawObject", into = "RawObject")]
pub struct S2Object {
    summands: Vec<Indecomposable>,
}

impl S2Object {
    pub fn new(summands: impl IntoIterator<Item = Indecomposable>) -> Result<Self> {
        let summands = summands
            .into_iter()
            .map(Indecomposable::validated)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_valid(summands))
    }

    pub(crate) fn from_valid(mut summands: Vec<Indecomposable>) -> Self {
        summands.sort();
        S2Object { summands }
    }

    pub fn zero() -> Self {
        S2Object::default()
    }

    pub fn summands(&self) -> &[Indecomposable] {
        &self.summands
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Number of summands isomorphic to `x`.
    pub fn multiplicity(&self, x: &Indecomposable) -> usize {
        self.summands.iter().filter(|s| *s == x).count()
    }

    /// Summand multiplicities as a map.
    pub fn multiplicities(&self) -> BTreeMap<Indecomposable, usize> {
        let mut map = BTreeMap::new();
        for s in &self.summands {
            *map.entry(*s).or_insert(0) += 1;
        }
        map
    }

    /// The pair `(β, γ)`: Jordan types of the ambient space and of the cokernel.
    pub fn object_type(&self) -> (Partition, Partition) {
        let beta = self.summands.iter().flat_map(|s| s.ambient_parts());
        let gamma = self.summands.iter().flat_map(|s| s.quotient_parts());
        (beta.collect(), gamma.collect())
    }

    /// Jordan type of the subspace: a 2 for every `P2` and `B2`, a 1 for every `P1`.
    pub fn alpha(&self) -> Partition {
        self.summands
            .iter()
            .map(Indecomposable::subspace_dim)
            .collect()
    }

    /// Direct sum.
    pub fn sum(&self, other: &S2Object) -> S2Object {
        let mut all = self.summands.clone();
        all.extend_from_slice(&other.summands);
        S2Object::from_valid(all)
    }

    /// Removes one copy of each listed summand; `None` if some is missing.
    pub fn remove(&self, parts: &[Indecomposable]) -> Option<S2Object> {
        let mut rest = self.summands.clone();
        for p in parts {
            let pos = rest.iter().position(|s| s == p)?;
            rest.remove(pos);
        }
        Some(S2Object { summands: rest })
    }
}

impl From<Indecomposable> for S2Object {
    fn from(x: Indecomposable) -> Self {
        S2Object { summands: vec![x] }
    }
}

impl fmt::Display for S2Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return f.write_str("0");
        }
        for (i, s) in self.summands.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for S2Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for S2Object {
    type Err = Error;

    /// Parses `B(7,3)+B(6,2)+P2(5)+P0(4)+P1(1)`; `0` or the empty string is the zero object.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(S2Object::zero());
        }
        let summands = s
            .split('+')
            .map(str::parse)
            .collect::<Result<Vec<Indecomposable>>>()?;
        Ok(S2Object::from_valid(summands))
    }
}

#[derive(Serialize, Deserialize)]
struct RawObject {
    summands: Vec<Indecomposable>,
}

impl TryFrom<RawObject> for S2Object {
    type Error = Error;

    fn try_from(raw: RawObject) -> Result<Self> {
        S2Object::new(raw.summands)
    }
}

impl From<S2Object> for RawObject {
    fn from(o: S2Object) -> Self {
        RawObject {
            summands: o.summands,
        }
    }
}

/// All objects of type `(β, γ)`, without repetition, in canonical order.
///
/// The search repeatedly takes the largest unused part `m` of `β` and decides
/// which summand it is the top block of. Equal top blocks choose summands in
/// non-increasing canonical order, so each multiset is produced once.
pub fn enumerate_objects(beta: &Partition, gamma: &Partition) -> Vec<S2Object> {
    if beta.weight() < gamma.weight() || !beta.contains(gamma) {
        return Vec::new();
    }
    let mut ambient: BTreeMap<u32, usize> = BTreeMap::new();
    for &p in beta.parts() {
        *ambient.entry(p).or_insert(0) += 1;
    }
    let mut quotient: BTreeMap<u32, usize> = BTreeMap::new();
    for &p in gamma.parts() {
        *quotient.entry(p).or_insert(0) += 1;
    }
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    search(&mut ambient, &mut quotient, &mut chosen, &mut out);
    out.sort();
    out
}

fn take(map: &mut BTreeMap<u32, usize>, key: u32) -> bool {
    if key == 0 {
        return true;
    }
    match map.get_mut(&key) {
        Some(n) if *n > 0 => {
            *n -= 1;
            if *n == 0 {
                map.remove(&key);
            }
            true
        }
        _ => false,
    }
}

fn give(map: &mut BTreeMap<u32, usize>, key: u32) {
    if key > 0 {
        *map.entry(key).or_insert(0) += 1;
    }
}

fn search(
    ambient: &mut BTreeMap<u32, usize>,
    quotient: &mut BTreeMap<u32, usize>,
    chosen: &mut Vec<Indecomposable>,
    out: &mut Vec<S2Object>,
) {
    let Some((&m, _)) = ambient.iter().next_back() else {
        if quotient.is_empty() {
            out.push(S2Object::from_valid(chosen.clone()));
        }
        return;
    };
    // quotient parts larger than every remaining ambient block can never be used
    if quotient.keys().next_back().is_some_and(|&q| q > m) {
        return;
    }
    take(ambient, m);

    let mut candidates = vec![P0(m), P1(m)];
    if m >= 2 {
        candidates.push(P2(m));
    }
    if m >= 3 {
        for (&r, _) in ambient.range(1..m - 1) {
            candidates.push(B2 { m, r });
        }
    }
    // same top block as the previous summand: stay in canonical order
    let bound = chosen
        .last()
        .filter(|prev| prev.ambient_parts()[0] == m)
        .copied();

    for cand in candidates {
        if bound.is_some_and(|b| cand < b) {
            continue;
        }
        if let B2 { r, .. } = cand {
            if !take(ambient, r) {
                continue;
            }
        }
        let q = cand.quotient_parts();
        let mut taken = Vec::new();
        let mut ok = true;
        for &part in &q {
            if take(quotient, part) {
                taken.push(part);
            } else {
                ok = false;
                break;
            }
        }
        if ok {
            chosen.push(cand);
            search(ambient, quotient, chosen, out);
            chosen.pop();
        }
        for part in taken {
            give(quotient, part);
        }
        if let B2 { r, .. } = cand {
            give(ambient, r);
        }
    }
    give(ambient, m);
}

//! Integer partitions: weight, moment and skew-shape bookkeeping.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Every constructor normalizes: parts are sorted in decreasing order and
/// zero parts are dropped, so structural equality is multiset equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The largest part, 0 for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// Sum of the parts.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// `n(λ) = Σ λ_i (i - 1)` with 1-based `i`.
    pub fn moment(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * u64::from(p))
            .sum()
    }

    /// Young diagram containment: `other_i <= self_i` for every row.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| other.part(i) <= self.part(i))
    }

    /// Number of boxes of the skew shape `self / inner` in each column (1-based).
    pub fn skew_column_counts(&self, inner: &Partition) -> Result<BTreeMap<u32, u32>> {
        if !self.contains(inner) {
            return Err(Error::NotContained {
                beta: self.clone(),
                gamma: inner.clone(),
            });
        }
        let mut counts = BTreeMap::new();
        for (i, &outer) in self.parts.iter().enumerate() {
            for c in inner.part(i) + 1..=outer {
                *counts.entry(c).or_insert(0) += 1;
            }
        }
        Ok(counts)
    }

    /// True iff the skew shape `self / inner` has at most one box per column.
    pub fn is_column_strip(&self, inner: &Partition) -> Result<bool> {
        Ok(self.skew_column_counts(inner)?.values().all(|&n| n <= 1))
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_weight(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions of weight at most `n`, by weight.
    pub fn all_up_to_weight(n: u32) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_weight).collect()
    }

    /// Every partition contained in `self`, including `self` and the empty one.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &[u32], i: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if i == outer.len() {
                out.push(Partition::new(cur.clone()));
                return;
            }
            for p in (0..=outer[i].min(max)).rev() {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.parts, 0, u32::MAX, &mut Vec::new(), &mut out);
        out
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl<const N: usize> From<[u32; N]> for Partition {
    fn from(parts: [u32; N]) -> Self {
        Partition::new(parts.to_vec())
    }
}

impl FromIterator<u32> for Partition {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        Partition::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the text form `4,3,3,2,1`; the empty string is the empty partition.
    /// Parts must be listed in weakly decreasing order.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .unwrap_or(s);
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("bad partition part {t:?}: {e}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "partition {s:?} is not weakly decreasing"
            )));
        }
        Ok(Partition::new(parts))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn weight_examples() {
        assert_eq!(p(&[4, 3, 3, 2, 1]).weight(), 13);
        assert_eq!(p(&[]).weight(), 0);
        assert_eq!(p(&[5, 5, 4, 3, 3, 3, 2, 2, 1, 1]).weight(), 29);
    }

    #[test]
    fn moment_examples() {
        assert_eq!(p(&[4, 3, 3, 2, 1]).moment(), 19);
        assert_eq!(p(&[]).moment(), 0);
        assert_eq!(p(&[2, 1, 1, 1, 1]).moment(), 10);
    }

    #[test]
    fn containment() {
        assert!(p(&[4, 3, 3, 2, 1]).contains(&p(&[3, 2, 1, 1])));
        assert!(!p(&[2, 2]).contains(&p(&[3])));
        assert!(p(&[5]).contains(&p(&[5])));
        assert!(!p(&[3]).contains(&p(&[1, 1])));
    }

    #[test]
    fn skew_columns() {
        let counts = p(&[3, 3, 2, 1]).skew_column_counts(&p(&[2, 2, 1])).unwrap();
        assert_eq!(counts, BTreeMap::from([(3, 2), (2, 1), (1, 1)]));
        let counts = p(&[2, 1]).skew_column_counts(&p(&[1])).unwrap();
        assert_eq!(counts, BTreeMap::from([(2, 1), (1, 1)]));
        assert!(p(&[4]).skew_column_counts(&p(&[4])).unwrap().is_empty());
        assert!(matches!(
            p(&[2, 2]).skew_column_counts(&p(&[3])),
            Err(Error::NotContained { .. })
        ));
    }

    #[test]
    fn column_strips() {
        assert!(!p(&[3, 3, 2, 1]).is_column_strip(&p(&[2, 2, 1])).unwrap());
        assert!(p(&[2, 1]).is_column_strip(&p(&[1])).unwrap());
        assert!(p(&[3]).is_column_strip(&p(&[3])).unwrap());
        assert!(p(&[2, 2]).is_column_strip(&p(&[3])).is_err());
    }

    #[test]
    fn normalizes_and_parses() {
        assert_eq!(Partition::new(vec![1, 0, 3, 2]), p(&[3, 2, 1]));
        assert_eq!(
            "4,3,3,2,1".parse::<Partition>().unwrap(),
            p(&[4, 3, 3, 2, 1])
        );
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p(&[4, 3, 3, 2, 1]).to_string(), "4,3,3,2,1");
        assert_eq!(Partition::empty().to_string(), "");
    }

    #[test]
    fn generation() {
        let counts: Vec<usize> = (0..9).map(|n| Partition::all_of_weight(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(
            Partition::all_of_weight(3),
            vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]
        );
        let subs = p(&[2, 1]).subpartitions();
        assert_eq!(subs, vec![p(&[2, 1]), p(&[2]), p(&[1, 1]), p(&[1]), p(&[])]);
        assert!(subs.iter().all(|g| p(&[2, 1]).contains(g)));
    }

    #[test]
    fn merging_ones_lowers_moment() {
        let before = p(&[3, 2, 1, 1]);
        let after = p(&[3, 2, 2]);
        assert!(after.moment() < before.moment());
    }

    proptest::proptest! {
        #[test]
        fn skew_counts_add_up(outer in proptest::collection::vec(1u32..7, 0..6), cut in proptest::collection::vec(0u32..7, 0..6)) {
            let beta = Partition::new(outer);
            let inner: Vec<u32> = beta.parts().iter().zip(cut.iter().chain(std::iter::repeat(&0))).map(|(&b, &c)| b.saturating_sub(c)).collect();
            // make the inner shape a partition by taking a running minimum
            let mut running = u32::MAX;
            let inner: Vec<u32> = inner.into_iter().map(|x| { running = running.min(x); running }).collect();
            let gamma = Partition::new(inner);
            proptest::prop_assert!(beta.contains(&gamma));
            let boxes: u64 = beta.skew_column_counts(&gamma).unwrap().values().map(|&n| u64::from(n)).sum();
            proptest::prop_assert_eq!(beta.weight(), gamma.weight() + boxes);
        }
    }
}

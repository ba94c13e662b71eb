use std::fmt;

use serde::{Deserialize, Serialize};

/// An integer partition, stored without trailing zeros.
///
/// Equality and hashing ignore trailing zeros: `Partition::new(vec![2, 1, 0])`
/// equals `Partition::new(vec![2, 1])`. Use [`Partition::padded`] when a
/// fixed-length weight is needed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", try_from = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition from weakly decreasing parts, or `None` if the
    /// parts increase somewhere.
    pub fn new(mut parts: Vec<u32>) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds from a weakly decreasing sequence of non-negative integers.
    pub fn from_i64(parts: &[i64]) -> Option<Self> {
        if parts.iter().any(|&p| p < 0) {
            return None;
        }
        Self::new(parts.iter().map(|&p| p as u32).collect())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Fixed-length view with trailing zeros; `None` if longer than `n`.
    pub fn padded(&self, n: usize) -> Option<Vec<i64>> {
        if self.0.len() > n {
            return None;
        }
        let mut v: Vec<i64> = self.0.iter().map(|&p| p as i64).collect();
        v.resize(n, 0);
        Some(v)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0) as usize;
        let parts = (0..first)
            .map(|c| self.0.iter().filter(|&&p| p as usize > c).count() as u32)
            .collect();
        Partition(parts)
    }

    /// Young diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.0.len() <= self.0.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        Self::bounded(n, n as usize, n)
    }

    /// Partitions of `n` with at most `max_rows` rows and parts at most `max_part`.
    pub fn bounded(n: u32, max_rows: usize, max_part: u32) -> Vec<Partition> {
        fn rec(n: u32, rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if rows == 0 {
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, rows - 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_rows, max_part, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions contained in `self` of size `n`.
    pub fn subpartitions_of_size(&self, n: u32) -> Vec<Partition> {
        fn rec(outer: &[u32], i: usize, n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if i >= outer.len() {
                return;
            }
            let cap = max.min(outer[i]).min(n);
            let room: u32 = outer[i..].iter().map(|&p| p.min(cap)).sum();
            if room < n {
                return;
            }
            for p in (1..=cap).rev() {
                cur.push(p);
                rec(outer, i + 1, n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(&self.0, 0, n, u32::MAX, &mut Vec::new(), &mut out);
        out
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = String;

    fn try_from(v: Vec<u32>) -> Result<Self, Self::Error> {
        Partition::new(v).ok_or_else(|| "parts must be weakly decreasing".to_string())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_strips_zeros() {
        let p = Partition::new(vec![3, 1, 0, 0]).unwrap();
        assert_eq!(p, Partition::new(vec![3, 1]).unwrap());
        assert_eq!(p.size(), 4);
        assert_eq!(p.length(), 2);
        assert_eq!(p.padded(4), Some(vec![3, 1, 0, 0]));
        assert_eq!(p.padded(1), None);
        assert!(Partition::new(vec![1, 2]).is_none());
    }

    #[test]
    fn counts_and_conjugates() {
        let sizes: Vec<usize> = (0..8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        let p = Partition::new(vec![4, 2, 1]).unwrap();
        assert_eq!(p.conjugate(), Partition::new(vec![3, 2, 1, 1]).unwrap());
        assert_eq!(p.conjugate().conjugate(), p);
        assert_eq!(Partition::bounded(4, 2, 4).len(), 3);
    }

    #[test]
    fn subpartitions() {
        let p = Partition::new(vec![2, 1]).unwrap();
        let subs = p.subpartitions_of_size(2);
        assert_eq!(subs, vec![Partition::new(vec![2]).unwrap(), Partition::new(vec![1, 1]).unwrap()]);
        assert_eq!(p.subpartitions_of_size(0), vec![Partition::empty()]);
        assert!(p.subpartitions_of_size(4).is_empty());
    }
}

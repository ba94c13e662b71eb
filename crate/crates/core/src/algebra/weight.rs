use std::fmt;

use serde::{Deserialize, Serialize};

use super::Partition;

/// A dominant integral `GL_n` weight: weakly decreasing integers, possibly
/// negative, of fixed length (the rank).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DominantWeight(Vec<i64>);

impl DominantWeight {
    pub fn new(parts: Vec<i64>) -> Option<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            None
        } else {
            Some(DominantWeight(parts))
        }
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight(vec![0; rank])
    }

    /// `rho_n = (n-1, n-2, ..., 1, 0)`.
    pub fn rho(n: usize) -> Self {
        DominantWeight((0..n as i64).rev().collect())
    }

    pub fn from_partition(p: &Partition, rank: usize) -> Option<Self> {
        p.padded(rank).map(DominantWeight)
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.last().is_none_or(|&p| p >= 0)
    }

    pub fn to_partition(&self) -> Option<Partition> {
        Partition::from_i64(&self.0)
    }

    /// Adds `c` to every part.
    pub fn shifted(&self, c: i64) -> Self {
        DominantWeight(self.0.iter().map(|p| p + c).collect())
    }
}

impl fmt::Debug for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A plain integer vector with no monotonicity requirement.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct IntVector(pub Vec<i64>);

impl IntVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Vec<i64>> for IntVector {
    fn from(v: Vec<i64>) -> Self {
        IntVector(v)
    }
}

/// Result of [`straighten_weight`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Straightened {
    Zero,
    Term { sign: i8, weight: DominantWeight },
}

/// Sign of the permutation that sorts `v` into weakly decreasing order, or
/// `None` if `v` has a repeated entry. Counts inversions.
pub fn sort_sign(v: &[i64]) -> Option<i8> {
    let mut inversions = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            match v[i].cmp(&v[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    Some(if inversions.is_multiple_of(2) { 1 } else { -1 })
}

/// Straightens an integer sequence by the rule `S_{p-1} S_{q+1} = -S_q S_p`.
///
/// Adds `rho`, returns [`Straightened::Zero`] on a repeated entry, and
/// otherwise the sorting sign together with `sorted(seq + rho) - rho`.
pub fn straighten_weight(seq: &IntVector) -> Straightened {
    let n = seq.len();
    let shifted: Vec<i64> = seq.0.iter().enumerate().map(|(j, &s)| s + (n - 1 - j) as i64).collect();
    let Some(sign) = sort_sign(&shifted) else {
        return Straightened::Zero;
    };
    let mut sorted = shifted;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let weight = sorted.iter().enumerate().map(|(j, &s)| s - (n - 1 - j) as i64).collect();
    Straightened::Term { sign, weight: DominantWeight(weight) }
}

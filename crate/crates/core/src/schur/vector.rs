use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{straighten_weight, IntVector, LaurentPoly, Partition, Straightened};
use crate::error::{Error, Result};

use super::lr::{lr_coefficient, lr_expand};

/// A finite combination of Schur functions with Laurent polynomial
/// coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct SchurVector {
    terms: BTreeMap<Partition, LaurentPoly>,
}

impl SchurVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::basis(Partition::empty())
    }

    pub fn basis(lambda: Partition) -> Self {
        Self::term(lambda, LaurentPoly::one())
    }

    pub fn term(lambda: Partition, c: LaurentPoly) -> Self {
        let mut out = Self::zero();
        out.add_term(lambda, &c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &Partition) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&mut self, other: &SchurVector) {
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c);
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> SchurVector {
        let mut out = SchurVector::zero();
        for (l, x) in &self.terms {
            out.add_term(l.clone(), &(x * c));
        }
        out
    }

    /// Drops partitions with more than `n` rows.
    pub fn truncate_rows(&self, n: usize) -> SchurVector {
        SchurVector {
            terms: self.terms.iter().filter(|(l, _)| l.length() <= n).map(|(l, c)| (l.clone(), c.clone())).collect(),
        }
    }

    /// Littlewood-Richardson product.
    pub fn lr_product(&self, other: &SchurVector) -> SchurVector {
        let mut out = SchurVector::zero();
        for (l, a) in &self.terms {
            for (m, b) in &other.terms {
                let ab = a * b;
                for (nu, c) in lr_expand(l, m, usize::MAX) {
                    out.add_term(nu, &ab.scale(&BigInt::from(c)));
                }
            }
        }
        out
    }

    /// The adjoint of multiplication by `s_beta`.
    pub fn skew_by(&self, beta: &Partition) -> SchurVector {
        let mut out = SchurVector::zero();
        for (l, a) in &self.terms {
            if l.size() < beta.size() || !l.contains(beta) {
                continue;
            }
            for nu in l.subpartitions_of_size(l.size() - beta.size()) {
                let c = lr_coefficient(beta, &nu, l);
                if c > 0 {
                    out.add_term(nu, &a.scale(&BigInt::from(c)));
                }
            }
        }
        out
    }

    /// The multi-Bernstein creation operator: each `s_gamma` becomes the
    /// straightening of `(tau, gamma)`, kept when it is a partition.
    pub fn bernstein_create(&self, tau: &[i64]) -> SchurVector {
        let mut out = SchurVector::zero();
        for (g, a) in &self.terms {
            let mut seq = tau.to_vec();
            seq.extend(g.parts().iter().map(|&p| p as i64));
            if let Straightened::Term { sign, weight } = straighten_weight(&IntVector(seq)) {
                if let Some(p) = weight.to_partition() {
                    out.add_term(p, &if sign < 0 { -a } else { a.clone() });
                }
            }
        }
        out
    }

    /// Schur dot product.
    pub fn pairing(&self, other: &SchurVector) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (l, a) in &self.terms {
            if let Some(b) = other.terms.get(l) {
                out += &(a * b);
            }
        }
        out
    }
}

impl fmt::Debug for SchurVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*s{l}")?;
        }
        Ok(())
    }
}

/// `s_tau` multiplicities in the product of the factors, restricted to
/// partitions with at most `rank` rows.
pub fn tensor_decomposition(factors: &[Partition], rank: usize) -> Result<BTreeMap<Partition, u64>> {
    for (index, f) in factors.iter().enumerate() {
        if f.length() > rank {
            return Err(Error::RankViolation { index, rows: f.length(), rank });
        }
    }
    let mut acc: BTreeMap<Partition, u64> = [(Partition::empty(), 1)].into();
    for f in factors {
        if f.is_empty() {
            continue;
        }
        let mut next = BTreeMap::new();
        for (l, c) in &acc {
            for (nu, d) in lr_expand(l, f, rank) {
                *next.entry(nu).or_insert(0) += c * d;
            }
        }
        acc = next;
    }
    Ok(acc)
}

/// Multiplicity of `s_tau` in the row-truncated product of the factors.
pub fn tensor_multiplicity(factors: &[Partition], tau: &Partition, rank: usize) -> Result<u64> {
    let total: u32 = factors.iter().map(Partition::size).sum();
    if tau.length() > rank || tau.size() != total {
        for (index, f) in factors.iter().enumerate() {
            if f.length() > rank {
                return Err(Error::RankViolation { index, rows: f.length(), rank });
            }
        }
        return Ok(0);
    }
    Ok(tensor_decomposition(factors, rank)?.get(tau).copied().unwrap_or(0))
}

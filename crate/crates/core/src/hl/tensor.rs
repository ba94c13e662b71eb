use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{LaurentPoly, Partition};
use crate::schur::SchurVector;

/// A finite combination of tensor Schur functions `s_{lambda^(0)} (x) ...`,
/// one partition per vertex, with Laurent polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorSchur {
    vertices: usize,
    terms: BTreeMap<Vec<Partition>, LaurentPoly>,
}

impl TensorSchur {
    pub fn zero(vertices: usize) -> Self {
        TensorSchur { vertices, terms: BTreeMap::new() }
    }

    /// The unit `s_empty (x) ... (x) s_empty`.
    pub fn one(vertices: usize) -> Self {
        Self::basis(vec![Partition::empty(); vertices])
    }

    pub fn basis(lambda: Vec<Partition>) -> Self {
        let mut out = Self::zero(lambda.len());
        out.add_term(lambda, &LaurentPoly::one());
        out
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Partition>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: &[Partition]) -> LaurentPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Vec<Partition>, c: &LaurentPoly) {
        assert_eq!(lambda.len(), self.vertices, "one partition per vertex");
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(lambda.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn add(&mut self, other: &TensorSchur) {
        for (l, c) in &other.terms {
            self.add_term(l.clone(), c);
        }
    }

    pub fn add_scaled(&mut self, other: &TensorSchur, c: &LaurentPoly) {
        for (l, x) in &other.terms {
            self.add_term(l.clone(), &(x * c));
        }
    }

    pub fn scale(&self, c: &LaurentPoly) -> TensorSchur {
        let mut out = TensorSchur::zero(self.vertices);
        out.add_scaled(self, c);
        out
    }

    /// Largest size of the partition at `vertex` over all terms.
    pub fn max_degree_at(&self, vertex: usize) -> u32 {
        self.terms.keys().map(|l| l[vertex].size()).max().unwrap_or(0)
    }

    /// Applies a single-alphabet operator at one vertex, term by term.
    pub fn apply_at(&self, vertex: usize, op: impl Fn(&SchurVector) -> SchurVector) -> TensorSchur {
        let mut out = TensorSchur::zero(self.vertices);
        for (l, c) in &self.terms {
            let image = op(&SchurVector::basis(l[vertex].clone()));
            for (p, d) in image.terms() {
                let mut key = l.clone();
                key[vertex] = p.clone();
                out.add_term(key, &(c * d));
            }
        }
        out
    }

    pub fn skew_at(&self, vertex: usize, beta: &Partition) -> TensorSchur {
        self.apply_at(vertex, |f| f.skew_by(beta))
    }

    pub fn bernstein_at(&self, vertex: usize, tau: &[i64]) -> TensorSchur {
        self.apply_at(vertex, |f| f.bernstein_create(tau))
    }

    /// Applies `f` to every coefficient.
    pub fn map_coefficients(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> TensorSchur {
        let mut out = TensorSchur::zero(self.vertices);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &f(c));
        }
        out
    }
}

impl fmt::Debug for TensorSchur {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*s[")?;
            for (j, p) in l.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

/// All tuples of partitions with total size `n`, where the partition at
/// vertex `i` has at most `rows[i]` rows. Ordered by the per-vertex sizes
/// (earlier vertices larger first), then reverse lexicographically.
pub fn partition_tuples(n: u32, rows: &[usize]) -> Vec<Vec<Partition>> {
    fn rec(n: u32, rows: &[usize], cur: &mut Vec<Partition>, out: &mut Vec<Vec<Partition>>) {
        if rows.is_empty() {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for size in (0..=n).rev() {
            if rows.len() == 1 && size != n {
                continue;
            }
            for p in Partition::bounded(size, rows[0], size) {
                cur.push(p);
                rec(n - size, &rows[1..], cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, rows, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples_respect_row_bounds() {
        assert_eq!(partition_tuples(2, &[1, 1]).len(), 3);
        assert_eq!(partition_tuples(2, &[2]).len(), 2);
        assert_eq!(partition_tuples(0, &[0, 0]), vec![vec![Partition::empty(), Partition::empty()]]);
        assert!(partition_tuples(1, &[0, 0]).is_empty());
        assert!(partition_tuples(1, &[]).is_empty());
    }
}

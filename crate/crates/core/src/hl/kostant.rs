use std::cell::RefCell;
use std::collections::HashMap;

use crate::algebra::{signed_permutations, LaurentPoly, Monomial, VarId};
use crate::error::Result;
use crate::quiver::{CurrentSequence, Root, VertexWeights};

/// Alternating sums of Kostant partition functions over the root set of a
/// current sequence.
///
/// The memo of partial partition counts only depends on the roots, so one
/// oracle can serve many `lambda` for the same sequence.
pub struct KostantOracle<'a> {
    cs: &'a CurrentSequence,
    roots: Vec<Root>,
    vars: Vec<VarId>,
    /// For each root, whether it is the last one leaving its slot.
    last_from_slot: Vec<bool>,
    memo: RefCell<HashMap<(usize, Vec<i64>), LaurentPoly>>,
}

impl<'a> KostantOracle<'a> {
    pub fn new(cs: &'a CurrentSequence) -> Self {
        let mut roots = cs.roots();
        roots.sort_by_key(|r| (r.from, r.to, r.arrow));
        let vars = roots.iter().map(|r| cs.quiver().arrow_var(r.arrow)).collect();
        let last_from_slot = (0..roots.len()).map(|j| j + 1 == roots.len() || roots[j + 1].from != roots[j].from).collect();
        KostantOracle { cs, roots, vars, last_from_slot, memo: RefCell::new(HashMap::new()) }
    }

    /// `sum_w sign(w) P(w(lambda + rho) - (mu + rho))` where `P` counts
    /// non-negative root combinations weighted by arrow variables.
    pub fn coefficient(&self, lambda: &VertexWeights) -> Result<LaurentPoly> {
        self.cs.check_shape(lambda)?;
        let ix = self.cs.indexing();
        let mu = self.cs.concat_weights();
        let plus_rho = |w: &Vec<i64>| -> Vec<i64> {
            let n = w.len() as i64;
            w.iter().enumerate().map(|(j, x)| x + n - 1 - j as i64).collect()
        };
        let lam_rho: Vec<Vec<i64>> = lambda.0.iter().map(plus_rho).collect();
        let mu_rho: Vec<Vec<i64>> = mu.0.iter().map(plus_rho).collect();
        let perms: Vec<Vec<(Vec<usize>, i8)>> = lam_rho.iter().map(|v| signed_permutations(v.len())).collect();

        let total: i64 = lambda.0.iter().flatten().sum::<i64>() - mu.0.iter().flatten().sum::<i64>();
        let mut out = LaurentPoly::zero();
        if total != 0 {
            return Ok(out);
        }
        let mut choice = vec![0usize; perms.len()];
        let mut target = vec![0i64; ix.slot_count()];
        loop {
            let mut sign = 1i8;
            for (v, &c) in choice.iter().enumerate() {
                let (perm, s) = &perms[v][c];
                sign *= s;
                for (p, &slot) in ix.vertex_slots[v].iter().enumerate() {
                    target[slot] = lam_rho[v][perm[p]] - mu_rho[v][p];
                }
            }
            if prefix_sums_nonnegative(&target, 0) {
                let count = self.partitions(&target);
                if !count.is_zero() {
                    if sign > 0 {
                        out += &count;
                    } else {
                        out -= &count;
                    }
                }
            }
            // Advance the mixed-radix counter over per-vertex permutations.
            let mut v = 0;
            loop {
                if v == choice.len() {
                    return Ok(out);
                }
                choice[v] += 1;
                if choice[v] < perms[v].len() {
                    break;
                }
                choice[v] = 0;
                v += 1;
            }
        }
    }

    /// Weighted count of non-negative root combinations summing to `target`.
    pub fn partitions(&self, target: &[i64]) -> LaurentPoly {
        let first = self.roots.first().map_or(target.len(), |r| r.from);
        if target[..first].iter().any(|&x| x != 0) {
            return LaurentPoly::zero();
        }
        self.go(0, target.to_vec())
    }

    // `res[s]` is what slot `s` still has to send forward; slots before the
    // current root's source are already settled at zero.
    fn go(&self, j: usize, res: Vec<i64>) -> LaurentPoly {
        if j == self.roots.len() {
            return if res.iter().all(|&x| x == 0) { LaurentPoly::one() } else { LaurentPoly::zero() };
        }
        let root = self.roots[j];
        let avail = res[root.from];
        if avail < 0 || !prefix_sums_nonnegative(&res, root.from) {
            return LaurentPoly::zero();
        }
        let key = (j, res);
        if let Some(v) = self.memo.borrow().get(&key) {
            return v.clone();
        }
        let (_, res) = &key;
        let mut out = LaurentPoly::zero();
        let range = if self.last_from_slot[j] { avail..=avail } else { 0..=avail };
        for m in range {
            let mut next = res.clone();
            next[root.from] -= m;
            next[root.to] += m;
            if self.last_from_slot[j] {
                // Slots between this source and the next one have no roots left.
                let until = self.roots.get(j + 1).map_or(next.len(), |r| r.from);
                if next[root.from..until].iter().any(|&x| x != 0) {
                    continue;
                }
            }
            let rest = self.go(j + 1, next);
            if !rest.is_zero() {
                out += &rest.mul_monomial(&Monomial::var(self.vars[j].clone(), m as i32));
            }
        }
        self.memo.borrow_mut().insert(key.clone(), out.clone());
        out
    }
}

fn prefix_sums_nonnegative(v: &[i64], from: usize) -> bool {
    let mut acc = 0;
    for &x in &v[from..] {
        acc += x;
        if acc < 0 {
            return false;
        }
    }
    acc == 0
}

/// Convenience wrapper around [`KostantOracle::coefficient`].
pub fn kostant_coefficient(cs: &CurrentSequence, lambda: &VertexWeights) -> Result<LaurentPoly> {
    KostantOracle::new(cs).coefficient(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Quiver;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn series_coefficients_of_the_jordan_pair() {
        for p in 0..=4i64 {
            let cs = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[p]), ("0", &[p])]).unwrap();
            let k = kostant_coefficient(&cs, &VertexWeights(vec![vec![2 * p, 0]])).unwrap();
            assert_eq!(k, poly(&format!("t_00^{p}")));
            let cs = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[0]), ("0", &[0])]).unwrap();
            let k = kostant_coefficient(&cs, &VertexWeights(vec![vec![p, -p]])).unwrap();
            assert_eq!(k, poly(&format!("t_00^{p}")));
        }
    }

    #[test]
    fn vanishing_and_shape_errors() {
        let cs = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[2]), ("0", &[0])]).unwrap();
        assert!(kostant_coefficient(&cs, &VertexWeights(vec![vec![1, 1]])).unwrap().is_zero());
        assert!(kostant_coefficient(&cs, &VertexWeights(vec![vec![1]])).is_err());
    }

    #[test]
    fn matches_kostka_foulkes_column() {
        let cs = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[1]), ("0", &[1]), ("0", &[1])]).unwrap();
        let oracle = KostantOracle::new(&cs);
        assert_eq!(oracle.coefficient(&VertexWeights(vec![vec![2, 1, 0]])).unwrap(), poly("t_00^2 + t_00"));
        assert_eq!(oracle.coefficient(&VertexWeights(vec![vec![3, 0, 0]])).unwrap(), poly("t_00^3"));
        assert_eq!(oracle.coefficient(&VertexWeights(vec![vec![1, 1, 1]])).unwrap(), poly("1"));
    }

    #[test]
    fn a2_single_arrow() {
        let cs = CurrentSequence::from_parts(Quiver::path(2), &[("0", &[1]), ("1", &[1])]).unwrap();
        let oracle = KostantOracle::new(&cs);
        assert_eq!(oracle.coefficient(&VertexWeights(vec![vec![1], vec![1]])).unwrap(), poly("1"));
        assert_eq!(oracle.coefficient(&VertexWeights(vec![vec![2], vec![0]])).unwrap(), poly("t_01"));
    }
}

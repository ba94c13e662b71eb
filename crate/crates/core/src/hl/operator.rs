use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::{LaurentPoly, Partition, VarId};
use crate::error::{Error, Result};
use crate::quiver::{CurrentSequence, Quiver};
use crate::schur::tensor_decomposition;

use super::TensorSchur;

/// How a skewing factor enters the current.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Twist {
    /// `Omega[c U* X^(j)]^perp = sum_beta c^|beta| s_beta[U*] s_beta[X^(j)]^perp`.
    Plain,
    /// `Omega[-c U* X^(j)]^perp = sum_beta (-c)^|beta| s_beta'[U*] s_beta[X^(j)]^perp`.
    ConjugateSign,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewEntry {
    pub target: usize,
    /// A monomial scalar such as an arrow variable, `q` or `q*t`.
    pub scalar: LaurentPoly,
    pub twist: Twist,
}

/// The coefficient operator `H_mu^(i,a)` of a current, in its finite
/// expansion: skew at the targets, then create at the vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentOperator {
    pub vertex: usize,
    pub width: usize,
    pub weight: Partition,
    pub skews: Vec<SkewEntry>,
}

impl CurrentOperator {
    /// The quiver current: one plain entry `(head b, t_b)` per arrow `b`
    /// leaving `vertex`.
    pub fn standard(quiver: &Quiver, vertex: usize, weight: &[i64]) -> Result<Self> {
        let skews = quiver
            .out_arrows(vertex)
            .into_iter()
            .map(|b| SkewEntry {
                target: quiver.arrows()[b].head,
                scalar: LaurentPoly::var(quiver.arrow_var(b)),
                twist: Twist::Plain,
            })
            .collect();
        Self::with_skews(vertex, weight, skews)
    }

    /// The current with every arrow variable set to `t`.
    pub fn collapsed(quiver: &Quiver, vertex: usize, weight: &[i64]) -> Result<Self> {
        let skews = quiver
            .out_arrows(vertex)
            .into_iter()
            .map(|b| SkewEntry { target: quiver.arrows()[b].head, scalar: LaurentPoly::var(VarId::T), twist: Twist::Plain })
            .collect();
        Self::with_skews(vertex, weight, skews)
    }

    /// The (q,t)-current of the doubled quiver: `t` on arrows out of the
    /// vertex, `q` on reversed arrows out of the vertex, and a `q*t`
    /// correction at the vertex itself.
    pub fn doubled(quiver: &Quiver, vertex: usize, weight: &[i64]) -> Result<Self> {
        let t = LaurentPoly::var(VarId::T);
        let q = LaurentPoly::var(VarId::Q);
        let mut skews = vec![SkewEntry { target: vertex, scalar: &q * &t, twist: Twist::ConjugateSign }];
        for a in quiver.arrows() {
            if a.head == vertex {
                skews.push(SkewEntry { target: a.tail, scalar: q.clone(), twist: Twist::Plain });
            }
        }
        for b in quiver.out_arrows(vertex) {
            skews.push(SkewEntry { target: quiver.arrows()[b].head, scalar: t.clone(), twist: Twist::Plain });
        }
        Self::with_skews(vertex, weight, skews)
    }

    fn with_skews(vertex: usize, weight: &[i64], skews: Vec<SkewEntry>) -> Result<Self> {
        let width = weight.len();
        let weight = Partition::from_i64(weight).ok_or_else(|| Error::NonPartitionWeight(weight.to_vec()))?;
        Ok(CurrentOperator { vertex, width, weight, skews })
    }

    /// Applies the operator.
    pub fn apply(&self, f: &TensorSchur) -> Result<TensorSchur> {
        let a = self.width;
        // Partial states: GL_a factors so far -> accumulated element.
        let mut states: BTreeMap<Vec<Partition>, TensorSchur> = BTreeMap::new();
        states.insert(vec![self.weight.clone()], f.clone());
        for entry in &self.skews {
            let mut next: BTreeMap<Vec<Partition>, TensorSchur> = BTreeMap::new();
            for (factors, elem) in &states {
                let max = elem.max_degree_at(entry.target);
                for size in 0..=max {
                    let coeff = match entry.twist {
                        Twist::Plain => entry.scalar.pow(size),
                        Twist::ConjugateSign if size % 2 == 1 => -entry.scalar.pow(size),
                        Twist::ConjugateSign => entry.scalar.pow(size),
                    };
                    for beta in Partition::all_of_size(size) {
                        let factor = match entry.twist {
                            Twist::Plain => beta.clone(),
                            Twist::ConjugateSign => beta.conjugate(),
                        };
                        if factor.length() > a {
                            continue;
                        }
                        let skewed = if size == 0 { elem.clone() } else { elem.skew_at(entry.target, &beta) };
                        if skewed.is_zero() {
                            continue;
                        }
                        let mut key = factors.clone();
                        if !factor.is_empty() {
                            key.push(factor);
                            key.sort();
                        }
                        next.entry(key).or_insert_with(|| TensorSchur::zero(f.vertices())).add_scaled(&skewed, &coeff);
                    }
                }
            }
            states = next;
        }
        let mut out = TensorSchur::zero(f.vertices());
        for (factors, elem) in &states {
            if elem.is_zero() {
                continue;
            }
            for (tau, mult) in tensor_decomposition(factors, a)? {
                let padded = tau.padded(a).expect("row-bounded decomposition");
                let created = elem.bernstein_at(self.vertex, &padded);
                out.add_scaled(&created, &LaurentPoly::constant(BigInt::from(mult)));
            }
        }
        Ok(out)
    }
}

/// Applies the quiver current `H_mu^(vertex, len(mu))` to `f`.
pub fn current_apply(quiver: &Quiver, vertex: usize, weight: &[i64], f: &TensorSchur) -> Result<TensorSchur> {
    CurrentOperator::standard(quiver, vertex, weight)?.apply(f)
}

/// Applies the (q,t)-current of the doubled quiver to `f`.
pub fn qt_current_apply(quiver: &Quiver, vertex: usize, weight: &[i64], f: &TensorSchur) -> Result<TensorSchur> {
    CurrentOperator::doubled(quiver, vertex, weight)?.apply(f)
}

/// The quiver Hall-Littlewood function: the currents applied to `1`, last
/// step first.
pub fn hl_function(cs: &CurrentSequence) -> Result<TensorSchur> {
    let q = cs.quiver();
    let mut f = TensorSchur::one(q.vertex_count());
    for step in cs.steps().iter().rev() {
        f = current_apply(q, step.vertex, step.weight.parts(), &f)?;
    }
    Ok(f)
}

/// The coefficient of `s_lambda` in the quiver Hall-Littlewood function.
pub fn kostka_shoji_operator(cs: &CurrentSequence, lambda: &[Partition]) -> Result<LaurentPoly> {
    if lambda.len() != cs.quiver().vertex_count() {
        return Err(Error::DimensionMismatch(format!(
            "{} partitions for {} vertices",
            lambda.len(),
            cs.quiver().vertex_count()
        )));
    }
    let size: i64 = lambda.iter().map(|p| p.size() as i64).sum();
    if size != cs.total_size() {
        return Ok(LaurentPoly::zero());
    }
    Ok(hl_function(cs)?.coefficient(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn jordan_single_box() {
        let q = Quiver::jordan();
        let f = TensorSchur::basis(vec![p(&[1])]);
        let g = current_apply(&q, 0, &[1], &f).unwrap();
        let mut expected = TensorSchur::basis(vec![p(&[1, 1])]);
        expected.add_term(vec![p(&[2])], &poly("t_00"));
        assert_eq!(g, expected);
    }

    #[test]
    fn currents_on_the_unit_create() {
        let q = Quiver::cycle(2);
        let g = current_apply(&q, 1, &[3, 1, 0], &TensorSchur::one(2)).unwrap();
        assert_eq!(g, TensorSchur::basis(vec![p(&[]), p(&[3, 1])]));
        let g = qt_current_apply(&q, 0, &[2], &TensorSchur::one(2)).unwrap();
        assert_eq!(g, TensorSchur::basis(vec![p(&[2]), p(&[])]));
    }

    #[test]
    fn a2_arrow_skews_the_head() {
        let q = Quiver::path(2);
        let f = TensorSchur::basis(vec![p(&[]), p(&[1])]);
        let g = current_apply(&q, 0, &[1], &f).unwrap();
        let mut expected = TensorSchur::basis(vec![p(&[1]), p(&[1])]);
        expected.add_term(vec![p(&[2]), p(&[])], &poly("t_01"));
        assert_eq!(g, expected);
    }

    #[test]
    fn jordan_three_boxes() {
        let cs = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[1]), ("0", &[1]), ("0", &[1])]).unwrap();
        let h = hl_function(&cs).unwrap();
        assert_eq!(h.coefficient(&[p(&[1, 1, 1])]), poly("1"));
        assert_eq!(h.coefficient(&[p(&[2, 1])]), poly("t_00^2 + t_00"));
        assert_eq!(h.coefficient(&[p(&[3])]), poly("t_00^3"));
        assert_eq!(h.len(), 3);
    }

    #[test]
    fn unit_and_single_step() {
        let cs = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[0]), ("0", &[0])]).unwrap();
        assert_eq!(hl_function(&cs).unwrap(), TensorSchur::one(1));
        let cs = CurrentSequence::from_parts(Quiver::cycle(2), &[("1", &[2, 1])]).unwrap();
        assert_eq!(hl_function(&cs).unwrap(), TensorSchur::basis(vec![p(&[]), p(&[2, 1])]));
        assert!(kostka_shoji_operator(&cs, &[p(&[1]), p(&[])]).unwrap().is_zero());
    }

    #[test]
    fn rejects_negative_weights() {
        let err = current_apply(&Quiver::jordan(), 0, &[1, -1], &TensorSchur::one(1)).unwrap_err();
        assert_eq!(err, Error::NonPartitionWeight(vec![1, -1]));
    }

    #[test]
    fn doubled_jordan_current_on_one_box() {
        let f = TensorSchur::basis(vec![p(&[1])]);
        let g = qt_current_apply(&Quiver::jordan(), 0, &[1], &f).unwrap();
        assert_eq!(g.coefficient(&[p(&[2])]), poly("-q*t + q + t"));
        assert_eq!(g.coefficient(&[p(&[1, 1])]), poly("1"));
    }
}

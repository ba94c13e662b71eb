#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use quiver_hl::algebra::{DominantWeight, LaurentPoly, Partition, VarId};
use quiver_hl::hl::{
    collapse_all_arrows, current_apply, qt_current_apply, CurrentOperator, TensorSchur,
};
use quiver_hl::quiver::{CurrentSequence, Quiver};
use quiver_hl::shuffle::{
    chi_by_shuffles, chi_truncated_schur, hl_r_polynomial, psi_class, qt_shuffle_schur, schur_coefficient,
    schur_expansion, shuffle_hat, shuffle_hat_schur, shuffle_star, step_schur, GroupedPoly, SchurTable,
};

pub type Check = Result<(), String>;

pub fn quivers() -> Vec<(&'static str, Quiver)> {
    vec![
        ("jordan", Quiver::jordan()),
        ("a2", Quiver::path(2)),
        ("cycle2", Quiver::cycle(2)),
        ("cycle3", Quiver::cycle(3)),
    ]
}

pub fn poly(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

pub fn part(v: &[u32]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

pub fn random_partition<R: Rng>(rng: &mut R, max_size: u32, max_rows: usize) -> Partition {
    let n = rng.gen_range(0..=max_size);
    Partition::bounded(n, max_rows, n).choose(rng).cloned().unwrap_or_default()
}

fn arrow_like(v: &VarId) -> bool {
    v.is_arrow_like()
}

/// Terms of `p` of total arrow degree at most `cap`.
pub fn truncated(p: &LaurentPoly, cap: u32) -> LaurentPoly {
    p.truncate(arrow_like, cap as i64)
}

pub fn psi_matches_r_polynomial(mu: &[i64]) -> Check {
    let steps: Vec<(&str, Vec<i64>)> = mu.iter().map(|&e| ("0", vec![e])).collect();
    let refs: Vec<(&str, &[i64])> = steps.iter().map(|(v, w)| (*v, w.as_slice())).collect();
    let cs = CurrentSequence::from_parts(Quiver::jordan(), &refs).unwrap();
    let psi = psi_class(&cs).map_err(|e| e.to_string())?;
    let r = hl_r_polynomial(mu).map_err(|e| e.to_string())?;
    if psi != r {
        return Err(format!("mu={mu:?}: psi={} R={}", psi.poly(), r.poly()));
    }
    Ok(())
}

pub fn psi_concatenates(cs: &CurrentSequence, at: usize) -> Check {
    let (first, second) = cs.split_at(at);
    let whole = psi_class(cs).map_err(|e| e.to_string())?;
    let a = psi_class(&first).map_err(|e| e.to_string())?;
    let b = psi_class(&second).map_err(|e| e.to_string())?;
    let prod = shuffle_star(cs.quiver(), &a, &b).map_err(|e| e.to_string())?;
    if prod != whole {
        return Err(format!("{cs:?} split at {at}: psi={} product={}", whole.poly(), prod.poly()));
    }
    Ok(())
}

/// The series by symmetrizing the whole product, by left-nested products,
/// and by nesting the last steps first all agree up to `cap`.
pub fn series_factorizes(cs: &CurrentSequence, cap: u32) -> Check {
    let q = cs.quiver();
    let direct = chi_truncated_schur(cs, cap).map_err(|e| e.to_string())?;
    let left = schur_expansion(&chi_by_shuffles(cs, cap).map_err(|e| e.to_string())?);
    let mut right = step_schur(cs, cs.len() - 1).map_err(|e| e.to_string())?;
    for k in (0..cs.len() - 1).rev() {
        right = shuffle_hat(q, &step_schur(cs, k).unwrap(), &right, cap).map_err(|e| e.to_string())?;
    }
    let right = schur_expansion(&right);
    if direct != left || direct != right {
        return Err(format!("{cs:?}: direct {direct:?}, left {left:?}, right {right:?}"));
    }
    Ok(())
}

/// Random data for the current/shuffle bridge: vertex, weight, and a
/// tuple of partitions with the number of variables at each vertex.
pub struct BridgeInput {
    pub quiver: Quiver,
    pub vertex: usize,
    pub mu: Vec<i64>,
    pub xi: Vec<Partition>,
    pub beta: Vec<usize>,
}

impl std::fmt::Debug for BridgeInput {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "quiver {:?}, vertex {}, mu {:?}, xi {:?}, beta {:?}", self.quiver.vertices(), self.vertex, self.mu, self.xi, self.beta)
    }
}

pub fn random_bridge_input<R: Rng>(rng: &mut R) -> BridgeInput {
    let qs = quivers();
    let quiver = qs[rng.gen_range(0..qs.len())].1.clone();
    let vertex = rng.gen_range(0..quiver.vertex_count());
    let a = rng.gen_range(1..=2);
    let mu = random_partition(rng, 3, a).padded(a).unwrap();
    let mut xi = Vec::new();
    let mut beta = Vec::new();
    for _ in 0..quiver.vertex_count() {
        let p = random_partition(rng, 2, 2);
        beta.push(p.length() + rng.gen_range(0..=1));
        xi.push(p);
    }
    BridgeInput { quiver, vertex, mu, xi, beta }
}

fn bridge_operands(input: &BridgeInput) -> (GroupedPoly, GroupedPoly, usize) {
    let n = input.quiver.vertex_count();
    let names = input.quiver.vertices().to_vec();
    let a = input.mu.len();
    let weights: Vec<DominantWeight> = (0..n)
        .map(|j| if j == input.vertex { DominantWeight::new(input.mu.clone()).unwrap() } else { DominantWeight::zero(0) })
        .collect();
    let f = GroupedPoly::schur(names.clone(), &weights).unwrap();
    let xi: Vec<DominantWeight> =
        input.xi.iter().zip(&input.beta).map(|(p, &b)| DominantWeight::from_partition(p, b).unwrap()).collect();
    let g = GroupedPoly::schur(names, &xi).unwrap();
    (f, g, a)
}

fn compare_bridge(op: &TensorSchur, table: &SchurTable, dims: &[usize], cap: u32, label: &str) -> Check {
    let mut shapes: BTreeSet<Vec<Partition>> = op.terms().map(|(s, _)| s.clone()).collect();
    for key in table.keys() {
        if let Some(s) = key.iter().map(DominantWeight::to_partition).collect::<Option<Vec<_>>>() {
            shapes.insert(s);
        }
    }
    for shape in shapes {
        if shape.iter().zip(dims).any(|(p, &d)| p.length() > d) {
            if !op.coefficient(&shape).is_zero() {
                return Err(format!("{label}: operator term {shape:?} exceeds the row bounds {dims:?}"));
            }
            continue;
        }
        let lhs = truncated(&op.coefficient(&shape), cap);
        let rhs = schur_coefficient(table, &shape, dims);
        if lhs != rhs {
            return Err(format!("{label}: at {shape:?} operator gives {lhs}, shuffle gives {rhs}"));
        }
    }
    Ok(())
}

pub fn current_matches_shuffle(input: &BridgeInput) -> Check {
    let (f, g, _) = bridge_operands(input);
    let cap: u32 = input.xi.iter().map(Partition::size).sum();
    let op = current_apply(&input.quiver, input.vertex, &input.mu, &TensorSchur::basis(input.xi.clone()))
        .map_err(|e| e.to_string())?;
    let table = shuffle_hat_schur(&input.quiver, &f, &g, cap).map_err(|e| e.to_string())?;
    let dims: Vec<usize> = f.dims().iter().zip(g.dims()).map(|(a, b)| a + b).collect();
    if op.terms().any(|(_, c)| truncated(c, cap) != *c) {
        return Err(format!("{input:?}: operator degree exceeds {cap}"));
    }
    compare_bridge(&op, &table, &dims, cap, &format!("{input:?}"))
}

pub fn qt_current_matches_qt_shuffle(input: &BridgeInput, cap: u32) -> Check {
    let (f, g, _) = bridge_operands(input);
    let op = qt_current_apply(&input.quiver, input.vertex, &input.mu, &TensorSchur::basis(input.xi.clone()))
        .map_err(|e| e.to_string())?;
    let table = qt_shuffle_schur(&input.quiver, &f, &g, cap).map_err(|e| e.to_string())?;
    let dims: Vec<usize> = f.dims().iter().zip(g.dims()).map(|(a, b)| a + b).collect();
    compare_bridge(&op, &table, &dims, cap, &format!("{input:?}"))
}

/// The doubled current at `q = 0` against the current with every arrow
/// variable collapsed to `t`.
pub fn qt_current_reduces_at_q_zero(input: &BridgeInput) -> Check {
    let f = TensorSchur::basis(input.xi.clone());
    let doubled = qt_current_apply(&input.quiver, input.vertex, &input.mu, &f).map_err(|e| e.to_string())?;
    let mut zero = std::collections::HashMap::new();
    zero.insert(VarId::Q, LaurentPoly::zero());
    let at_zero = doubled.map_coefficients(|c| c.substitute(&zero).unwrap());
    let single = CurrentOperator::collapsed(&input.quiver, input.vertex, &input.mu)
        .and_then(|op| op.apply(&f))
        .map_err(|e| e.to_string())?;
    let standard = current_apply(&input.quiver, input.vertex, &input.mu, &f)
        .map_err(|e| e.to_string())?
        .map_coefficients(|c| c.substitute(&collapse_all_arrows(&input.quiver)).unwrap());
    if at_zero != single || single != standard {
        return Err(format!("{input:?}: q=0 gives {at_zero:?}, collapsed current gives {single:?}"));
    }
    Ok(())
}

/// Pushing a doubled-quiver product to `q = 0` gives the single-parameter
/// product with every arrow variable set to `t`.
pub fn qt_shuffle_reduces_at_q_zero(input: &BridgeInput, cap: u32) -> Check {
    let (f, g, _) = bridge_operands(input);
    let qt = qt_shuffle_schur(&input.quiver, &f, &g, cap).map_err(|e| e.to_string())?;
    let plain = shuffle_hat_schur(&input.quiver, &f, &g, cap).map_err(|e| e.to_string())?;
    let mut zero = collapse_all_arrows(&input.quiver);
    zero.insert(VarId::Q, LaurentPoly::zero());
    let push = |t: &SchurTable| -> SchurTable {
        let mut out: SchurTable =
            t.iter().map(|(k, v)| (k.clone(), v.substitute(&zero).unwrap())).collect();
        out.retain(|_, v| !v.is_zero());
        out
    };
    if push(&qt) != push(&plain) {
        return Err(format!("{input:?}: q=0 reduction differs"));
    }
    Ok(())
}

/// Every coefficient of the truncated series, and of the operator table,
/// matches the Kostant formula up to `cap`.
pub fn series_matches_kostant(cs: &CurrentSequence, cap: u32) -> Check {
    use quiver_hl::hl::{hl_function, KostantOracle};
    use quiver_hl::quiver::VertexWeights;
    let chi = chi_truncated_schur(cs, cap).map_err(|e| e.to_string())?;
    let oracle = KostantOracle::new(cs);
    let mut keys: Vec<Vec<DominantWeight>> = chi.keys().cloned().collect();
    if cs.has_partition_weights() {
        let dims = cs.dimension_vector();
        for (shape, _) in hl_function(cs).map_err(|e| e.to_string())?.terms() {
            keys.push(shape.iter().zip(&dims).map(|(p, &d)| DominantWeight::from_partition(p, d).unwrap()).collect());
        }
    }
    for key in keys {
        let w = VertexWeights(key.iter().map(|w| w.parts().to_vec()).collect());
        let k = truncated(&oracle.coefficient(&w).map_err(|e| e.to_string())?, cap);
        let c = chi.get(&key).cloned().unwrap_or_else(LaurentPoly::zero);
        if k != c {
            return Err(format!("{cs:?} at {key:?}: series {c}, Kostant {k}"));
        }
    }
    Ok(())
}

/// A random product of Schur polynomials over `dims`, times a random arrow
/// monomial coefficient.
pub fn random_symmetric<R: Rng>(rng: &mut R, quiver: &Quiver, dims: &[usize]) -> GroupedPoly {
    let weights: Vec<DominantWeight> = dims
        .iter()
        .map(|&d| {
            let mut parts: Vec<i64> = (0..d).map(|_| rng.gen_range(-1..=2)).collect();
            parts.sort_unstable_by(|a, b| b.cmp(a));
            DominantWeight::new(parts).unwrap()
        })
        .collect();
    GroupedPoly::schur(quiver.vertices().to_vec(), &weights).unwrap()
}

pub fn star_is_associative(quiver: &Quiver, f: &GroupedPoly, g: &GroupedPoly, h: &GroupedPoly) -> Check {
    let left = shuffle_star(quiver, &shuffle_star(quiver, f, g).unwrap(), h).map_err(|e| e.to_string())?;
    let right = shuffle_star(quiver, f, &shuffle_star(quiver, g, h).unwrap()).map_err(|e| e.to_string())?;
    if left != right {
        return Err(format!("dims {:?} {:?} {:?}", f.dims(), g.dims(), h.dims()));
    }
    Ok(())
}

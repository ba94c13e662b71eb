use std::collections::HashMap;

use crate::algebra::{LaurentPoly, Monomial, VarId};
use crate::error::{Error, Result};
use crate::quiver::Quiver;

fn violation(p: &LaurentPoly) -> Error {
    Error::FactorizationViolation { offending: p.terms().map(|(m, _)| m.clone()).collect() }
}

/// Splits a cyclic-quiver polynomial as
/// `prod_{i<r-1} t_{v_i v_{i+1}}^{a_i} * K(t)` with `t` the product of all
/// cycle arrows and `K` a polynomial in `t`. Vertices are visited along the
/// cycle starting at the first vertex.
pub fn reduced_polynomial(quiver: &Quiver, k: &LaurentPoly) -> Result<(Monomial, LaurentPoly)> {
    let order = quiver.cycle_order()?;
    let r = order.len();
    if k.is_zero() {
        return Ok((Monomial::one(), LaurentPoly::zero()));
    }
    let mut prefactor: Option<Vec<i64>> = None;
    let mut reduced = LaurentPoly::zero();
    for (m, c) in k.terms() {
        let exps = quiver.arrow_exponents(m).ok_or_else(|| violation(k))?;
        let along: Vec<i64> = order.iter().map(|&b| exps[b]).collect();
        let n = along[r - 1];
        let shift: Vec<i64> = along[..r - 1].iter().map(|e| e - n).collect();
        match &prefactor {
            None => prefactor = Some(shift),
            Some(p) if *p == shift => {}
            Some(_) => return Err(violation(k)),
        }
        if n < 0 {
            return Err(violation(k));
        }
        reduced.add_term(Monomial::var(VarId::T, n as i32), c.clone());
    }
    let shift = prefactor.unwrap_or_default();
    let pre = Monomial::from_pairs(order[..r - 1].iter().zip(&shift).map(|(&b, &e)| (quiver.arrow_var(b), e as i32)));
    Ok((pre, reduced))
}

/// Checks that `k` is a non-negative integer times one monomial.
pub fn check_single_monomial(k: &LaurentPoly) -> Result<()> {
    if k.len() <= 1 && k.is_nonnegative() {
        Ok(())
    } else {
        Err(violation(k))
    }
}

/// Checks that all exponent vectors in the support of `k` differ by
/// elements of the directed-cycle lattice.
pub fn check_cycle_coset(quiver: &Quiver, k: &LaurentPoly) -> Result<()> {
    let lattice = quiver.classify().lattice;
    let mut base: Option<Vec<i64>> = None;
    for (m, _) in k.terms() {
        let e = quiver.arrow_exponents(m).ok_or_else(|| violation(k))?;
        match &base {
            None => base = Some(e),
            Some(b) => {
                let d: Vec<i64> = e.iter().zip(b).map(|(x, y)| x - y).collect();
                if !lattice.contains(&d) {
                    return Err(violation(k));
                }
            }
        }
    }
    Ok(())
}

/// Substitution sending every arrow variable to `t`.
pub fn collapse_all_arrows(quiver: &Quiver) -> HashMap<VarId, LaurentPoly> {
    (0..quiver.arrows().len()).map(|b| (quiver.arrow_var(b), LaurentPoly::var(VarId::T))).collect()
}

/// Substitution for a cyclic quiver: the closing arrow of the cycle becomes
/// `t` and the others become `1`, so a reduced polynomial is read off
/// directly.
pub fn collapse_cycle(quiver: &Quiver) -> Result<HashMap<VarId, LaurentPoly>> {
    let order = quiver.cycle_order()?;
    let last = order.len() - 1;
    Ok(order
        .iter()
        .enumerate()
        .map(|(n, &b)| (quiver.arrow_var(b), if n == last { LaurentPoly::var(VarId::T) } else { LaurentPoly::one() }))
        .collect())
}

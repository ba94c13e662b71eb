use crate::algebra::{signed_permutations, DominantWeight, LaurentPoly, Monomial, VarId};
use crate::error::{Error, Result};

/// `prod_{i<j} (x_i - x_j)`.
pub fn vandermonde(vars: &[VarId]) -> LaurentPoly {
    let mut out = LaurentPoly::one();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            out = &out * &(LaurentPoly::var(vars[i].clone()) - LaurentPoly::var(vars[j].clone()));
        }
    }
    out
}

/// Divides by `prod_{i<j} (x_i - x_j)` one binomial at a time.
pub fn divide_by_vandermonde(f: &LaurentPoly, vars: &[VarId]) -> Result<LaurentPoly> {
    let mut out = f.clone();
    for i in 0..vars.len() {
        for j in i + 1..vars.len() {
            out = out.exact_div(&(LaurentPoly::var(vars[i].clone()) - LaurentPoly::var(vars[j].clone())))?;
        }
    }
    Ok(out)
}

/// `sum_w sign(w) x^{w(exps)}` over permutations of the variables.
pub fn alternant(exps: &[i64], vars: &[VarId]) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (perm, sign) in signed_permutations(vars.len()) {
        let m = Monomial::from_pairs(perm.iter().zip(exps).map(|(&w, &e)| (vars[w].clone(), e as i32)));
        out.add_term(m, sign.into());
    }
    out
}

/// The Schur polynomial `s_lambda(x_1..x_n)` as a ratio of alternants.
/// Negative parts give Laurent polynomials.
pub fn schur_poly(lambda: &DominantWeight, vars: &[VarId]) -> Result<LaurentPoly> {
    if lambda.rank() != vars.len() {
        return Err(Error::DimensionMismatch(format!("weight of rank {} with {} variables", lambda.rank(), vars.len())));
    }
    let n = vars.len() as i64;
    let shifted: Vec<i64> = lambda.parts().iter().enumerate().map(|(j, &p)| p + n - 1 - j as i64).collect();
    divide_by_vandermonde(&alternant(&shifted, vars), vars)
}

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::algebra::{signed_permutations, straighten_weight, DominantWeight, LaurentPoly, Monomial, Straightened, VarId};
use crate::error::{Error, Result};
use crate::schur::{divide_by_vandermonde, schur_poly};

/// Coefficients of products of Schur polynomials, one weight per vertex.
/// Values are polynomials in the remaining (arrow, `q`, `t`) variables.
pub type SchurTable = BTreeMap<Vec<DominantWeight>, LaurentPoly>;

/// A Laurent polynomial whose x-variables are grouped by vertex: vertex `i`
/// owns `x(i)_1, .., x(i)_{dims[i]}`. Any other variable is a coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupedPoly {
    vertices: Vec<String>,
    dims: Vec<usize>,
    poly: LaurentPoly,
}

impl GroupedPoly {
    pub fn new(vertices: Vec<String>, dims: Vec<usize>, poly: LaurentPoly) -> Result<Self> {
        if vertices.len() != dims.len() {
            return Err(Error::DimensionMismatch(format!("{} dimensions for {} vertices", dims.len(), vertices.len())));
        }
        let out = GroupedPoly { vertices, dims, poly };
        for v in out.poly.variables() {
            if let VarId::X { vertex, index } = &v {
                let ok = out.vertex_index(vertex).is_some_and(|i| *index >= 1 && *index as usize <= out.dims[i]);
                if !ok {
                    return Err(Error::GroupMismatch(format!("variable {v} outside the groups")));
                }
            }
        }
        Ok(out)
    }

    pub fn constant(vertices: Vec<String>, dims: Vec<usize>, c: LaurentPoly) -> Self {
        GroupedPoly { vertices, dims, poly: c }
    }

    /// `prod_i s_{weights[i]}(x(i))`.
    pub fn schur(vertices: Vec<String>, weights: &[DominantWeight]) -> Result<Self> {
        let dims: Vec<usize> = weights.iter().map(DominantWeight::rank).collect();
        let mut out = GroupedPoly::constant(vertices, dims, LaurentPoly::one());
        let mut poly = LaurentPoly::one();
        for (i, w) in weights.iter().enumerate() {
            poly = &poly * &schur_poly(w, &out.vars(i))?;
        }
        out.poly = poly;
        Ok(out)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.poly
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// The variables of vertex `i`, in order.
    pub fn vars(&self, i: usize) -> Vec<VarId> {
        (1..=self.dims[i] as u32).map(|k| VarId::x(&self.vertices[i], k)).collect()
    }

    pub fn with_poly(&self, poly: LaurentPoly) -> Self {
        GroupedPoly { vertices: self.vertices.clone(), dims: self.dims.clone(), poly }
    }

    /// Per-vertex exponent vectors of a monomial and its leftover part.
    fn exponents(&self, m: &Monomial) -> (Vec<Vec<i64>>, Monomial) {
        let mut exps: Vec<Vec<i64>> = self.dims.iter().map(|&n| vec![0; n]).collect();
        let mut rest = Vec::new();
        for (v, e) in m.pairs() {
            match v {
                VarId::X { vertex, index } => {
                    let i = self.vertex_index(vertex).expect("checked at construction");
                    exps[i][*index as usize - 1] = *e as i64;
                }
                _ => rest.push((v.clone(), *e)),
            }
        }
        (exps, Monomial::from_pairs(rest))
    }

    fn monomial_of(&self, exps: &[Vec<i64>]) -> Monomial {
        Monomial::from_pairs(exps.iter().enumerate().flat_map(|(i, e)| {
            e.iter().enumerate().map(move |(k, &x)| (VarId::x(&self.vertices[i], k as u32 + 1), x as i32))
        }))
    }

    /// `x^{rho}` over all groups.
    pub fn rho_monomial(&self) -> Monomial {
        let exps: Vec<Vec<i64>> = self.dims.iter().map(|&n| DominantWeight::rho(n).parts().to_vec()).collect();
        self.monomial_of(&exps)
    }
}

/// `sum_w sign(w) w(f)` over the product of the symmetric groups of the
/// vertex groups.
pub fn antisymmetrize(f: &GroupedPoly) -> GroupedPoly {
    let mut poly = f.poly.clone();
    for i in 0..f.dims.len() {
        if f.dims[i] < 2 {
            continue;
        }
        let vars = f.vars(i);
        let mut next = LaurentPoly::zero();
        for (perm, sign) in signed_permutations(vars.len()) {
            let moved = poly.map_monomials(|m| {
                m.rename(|v| match v {
                    VarId::X { vertex, index } if **vertex == *f.vertices[i] => vars[perm[*index as usize - 1]].clone(),
                    _ => v.clone(),
                })
            });
            next.add_scaled(&moved, &BigInt::from(sign), &Monomial::one());
        }
        poly = next;
    }
    f.with_poly(poly)
}

/// The Demazure symmetrizer `J(x^rho)^-1 J(x^rho f)`, by antisymmetrizing and
/// dividing by the Vandermonde product of each group.
pub fn demazure(f: &GroupedPoly) -> Result<GroupedPoly> {
    let shifted = f.with_poly(f.poly.mul_monomial(&f.rho_monomial()));
    let mut poly = antisymmetrize(&shifted).poly;
    for i in 0..f.dims.len() {
        poly = divide_by_vandermonde(&poly, &f.vars(i))?;
    }
    Ok(f.with_poly(poly))
}

/// The Demazure symmetrizer in the Schur basis: each monomial `x^e` goes to
/// `sign * s_{sort(e + rho) - rho}` or to zero when `e + rho` repeats an
/// entry in some group.
pub fn schur_expansion(f: &GroupedPoly) -> SchurTable {
    let mut out = SchurTable::new();
    for (m, c) in f.poly.terms() {
        let (exps, rest) = f.exponents(m);
        let mut sign = 1i8;
        let mut key = Vec::with_capacity(exps.len());
        for e in exps {
            match straighten_weight(&e.into()) {
                Straightened::Zero => break,
                Straightened::Term { sign: s, weight } => {
                    sign *= s;
                    key.push(weight);
                }
            }
        }
        if key.len() != f.dims.len() {
            continue;
        }
        let coeff = if sign > 0 { c.clone() } else { -c.clone() };
        out.entry(key).or_insert_with(LaurentPoly::zero).add_term(rest, coeff);
    }
    out.retain(|_, p| !p.is_zero());
    out
}

/// Sums `coefficient * prod_i s_{lambda(i)}(x(i))` over a table.
pub fn from_schur_table(vertices: Vec<String>, dims: Vec<usize>, table: &SchurTable) -> Result<GroupedPoly> {
    let shell = GroupedPoly::constant(vertices, dims, LaurentPoly::zero());
    let mut poly = LaurentPoly::zero();
    for (weights, coeff) in table {
        let mut term = coeff.clone();
        for (i, w) in weights.iter().enumerate() {
            term = &term * &schur_poly(w, &shell.vars(i))?;
        }
        poly += &term;
    }
    Ok(shell.with_poly(poly))
}

/// [`demazure`] computed through [`schur_expansion`].
pub fn demazure_by_straightening(f: &GroupedPoly) -> Result<GroupedPoly> {
    from_schur_table(f.vertices.clone(), f.dims.clone(), &schur_expansion(f))
}

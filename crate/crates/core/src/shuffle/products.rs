use num_bigint::BigInt;

use crate::algebra::{DominantWeight, LaurentPoly, Monomial, Partition, VarId};
use crate::error::{Error, Result};
use crate::quiver::{CurrentSequence, Quiver};

use super::grouped::{antisymmetrize, from_schur_table, schur_expansion, GroupedPoly, SchurTable};
use crate::schur::divide_by_vandermonde;

fn arrow_like(v: &VarId) -> bool {
    v.is_arrow_like()
}

fn check_groups(quiver: &Quiver, f: &GroupedPoly) -> Result<()> {
    if f.vertices() != quiver.vertices() {
        return Err(Error::GroupMismatch(format!(
            "operand over vertices {:?}, quiver has {:?}",
            f.vertices(),
            quiver.vertices()
        )));
    }
    Ok(())
}

/// `f(u) g(v)` over the summed dimensions, with `u` the first variables of
/// each group and `v` the ones after them.
struct Juxtaposed {
    shell: GroupedPoly,
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl Juxtaposed {
    fn new(quiver: &Quiver, f: &GroupedPoly, g: &GroupedPoly) -> Result<Self> {
        check_groups(quiver, f)?;
        check_groups(quiver, g)?;
        let alpha = f.dims().to_vec();
        let beta = g.dims().to_vec();
        let names = quiver.vertices();
        let shifted = g.poly().map_monomials(|m| {
            m.rename(|v| match v {
                VarId::X { vertex, index } => {
                    let i = names.iter().position(|n| **n == **vertex).expect("checked group");
                    VarId::x(vertex, index + alpha[i] as u32)
                }
                _ => v.clone(),
            })
        });
        let dims = alpha.iter().zip(&beta).map(|(a, b)| a + b).collect();
        let shell = GroupedPoly::new(names.to_vec(), dims, f.poly() * &shifted)?;
        Ok(Juxtaposed { shell, alpha, beta })
    }

    fn u(&self, i: usize, k: usize) -> VarId {
        VarId::x(&self.shell.vertices()[i], k as u32 + 1)
    }

    fn v(&self, i: usize, l: usize) -> VarId {
        VarId::x(&self.shell.vertices()[i], (self.alpha[i] + l) as u32 + 1)
    }
}

fn ratio(c: &LaurentPoly, num: &VarId, den: &VarId) -> LaurentPoly {
    c.mul_monomial(&Monomial::from_pairs([(num.clone(), 1), (den.clone(), -1)]))
}

/// `1 - c * num / den`.
fn linear_factor(c: &LaurentPoly, num: &VarId, den: &VarId) -> LaurentPoly {
    LaurentPoly::one() - ratio(c, num, den)
}

/// `sum_n (c * num / den)^n`, keeping arrow degree at most `cap`. `c` must
/// be a monomial of positive arrow degree.
fn geometric(c: &LaurentPoly, num: &VarId, den: &VarId, cap: u32) -> LaurentPoly {
    let step = ratio(c, num, den);
    let mut out = LaurentPoly::one();
    let mut power = LaurentPoly::one();
    loop {
        power = (&power * &step).truncate(arrow_like, cap as i64);
        if power.is_zero() {
            return out;
        }
        out += &power;
    }
}

fn times_truncated(acc: &LaurentPoly, factor: &LaurentPoly, cap: u32) -> LaurentPoly {
    (acc * factor).truncate(arrow_like, cap as i64)
}

/// The product `f * g = D(f(u) g(v) prod (1 - t_b v^(tail b) / u^(head b)))`.
pub fn shuffle_star(quiver: &Quiver, f: &GroupedPoly, g: &GroupedPoly) -> Result<GroupedPoly> {
    let j = Juxtaposed::new(quiver, f, g)?;
    let mut poly = j.shell.poly().clone();
    for (b, arrow) in quiver.arrows().iter().enumerate() {
        let t = LaurentPoly::var(quiver.arrow_var(b));
        for k in 0..j.beta[arrow.tail] {
            for l in 0..j.alpha[arrow.head] {
                poly = &poly * &linear_factor(&t, &j.v(arrow.tail, k), &j.u(arrow.head, l));
            }
        }
    }
    let shell = j.shell.with_poly(poly);
    from_schur_table(shell.vertices().to_vec(), shell.dims().to_vec(), &schur_expansion(&shell))
}

/// The Schur coefficients of `f ⋆ g = D(f(u) g(v) / prod (1 - t_b u^(tail b) / v^(head b)))`
/// up to total arrow degree `cap`.
pub fn shuffle_hat_schur(quiver: &Quiver, f: &GroupedPoly, g: &GroupedPoly, cap: u32) -> Result<SchurTable> {
    let j = Juxtaposed::new(quiver, f, g)?;
    let mut poly = j.shell.poly().truncate(arrow_like, cap as i64);
    for (b, arrow) in quiver.arrows().iter().enumerate() {
        let t = LaurentPoly::var(quiver.arrow_var(b));
        for k in 0..j.alpha[arrow.tail] {
            for l in 0..j.beta[arrow.head] {
                poly = times_truncated(&poly, &geometric(&t, &j.u(arrow.tail, k), &j.v(arrow.head, l), cap), cap);
            }
        }
    }
    Ok(schur_expansion(&j.shell.with_poly(poly)))
}

/// `f ⋆ g` up to total arrow degree `cap`.
pub fn shuffle_hat(quiver: &Quiver, f: &GroupedPoly, g: &GroupedPoly, cap: u32) -> Result<GroupedPoly> {
    let table = shuffle_hat_schur(quiver, f, g, cap)?;
    let dims = f.dims().iter().zip(g.dims()).map(|(a, b)| a + b).collect();
    from_schur_table(quiver.vertices().to_vec(), dims, &table)
}

/// The Schur coefficients of the doubled-quiver product, with `t` on every
/// arrow and `q` on every reversed arrow, up to total degree `cap` in `q`
/// and `t`.
pub fn qt_shuffle_schur(quiver: &Quiver, f: &GroupedPoly, g: &GroupedPoly, cap: u32) -> Result<SchurTable> {
    let j = Juxtaposed::new(quiver, f, g)?;
    let t = LaurentPoly::var(VarId::T);
    let q = LaurentPoly::var(VarId::Q);
    let qt = &q * &t;
    let mut poly = j.shell.poly().truncate(arrow_like, cap as i64);
    for i in 0..quiver.vertex_count() {
        for k in 0..j.alpha[i] {
            for l in 0..j.beta[i] {
                poly = times_truncated(&poly, &linear_factor(&qt, &j.u(i, k), &j.v(i, l)), cap);
            }
        }
    }
    for arrow in quiver.arrows() {
        // The reversed arrow runs from head to tail and carries q.
        for k in 0..j.alpha[arrow.head] {
            for l in 0..j.beta[arrow.tail] {
                poly = times_truncated(&poly, &geometric(&q, &j.u(arrow.head, k), &j.v(arrow.tail, l), cap), cap);
            }
        }
        for k in 0..j.alpha[arrow.tail] {
            for l in 0..j.beta[arrow.head] {
                poly = times_truncated(&poly, &geometric(&t, &j.u(arrow.tail, k), &j.v(arrow.head, l), cap), cap);
            }
        }
    }
    Ok(schur_expansion(&j.shell.with_poly(poly)))
}

/// The doubled-quiver product up to total degree `cap`.
pub fn qt_shuffle(quiver: &Quiver, f: &GroupedPoly, g: &GroupedPoly, cap: u32) -> Result<GroupedPoly> {
    let table = qt_shuffle_schur(quiver, f, g, cap)?;
    let dims = f.dims().iter().zip(g.dims()).map(|(a, b)| a + b).collect();
    from_schur_table(quiver.vertices().to_vec(), dims, &table)
}

/// The coefficient of `prod_i s_{lambda(i)}` in a table over `dims`, or
/// zero when some `lambda(i)` has more rows than variables.
pub fn schur_coefficient(table: &SchurTable, lambda: &[Partition], dims: &[usize]) -> LaurentPoly {
    let key: Option<Vec<DominantWeight>> =
        lambda.iter().zip(dims).map(|(p, &n)| DominantWeight::from_partition(p, n)).collect();
    key.and_then(|k| table.get(&k).cloned()).unwrap_or_else(LaurentPoly::zero)
}

fn slot_var(cs: &CurrentSequence, slot: usize) -> VarId {
    let ix = cs.indexing();
    VarId::x(&cs.quiver().vertices()[ix.slot_vertex[slot]], ix.slot_position[slot] as u32 + 1)
}

fn shell(cs: &CurrentSequence, poly: LaurentPoly) -> Result<GroupedPoly> {
    GroupedPoly::new(cs.quiver().vertices().to_vec(), cs.dimension_vector(), poly)
}

/// `x^{mu(.)}`: slot `s` contributes its weight as the exponent of its variable.
fn weight_monomial(cs: &CurrentSequence) -> Monomial {
    Monomial::from_pairs(cs.slot_weights().iter().enumerate().map(|(s, &w)| (slot_var(cs, s), w as i32)))
}

/// The Schur coefficients of the Hall-Littlewood series `D(x^mu B)` up to
/// total arrow degree `cap`, expanding each factor of `B` as a geometric
/// series.
pub fn chi_truncated_schur(cs: &CurrentSequence, cap: u32) -> Result<SchurTable> {
    let mut poly = LaurentPoly::monomial(weight_monomial(cs));
    for root in cs.roots() {
        let t = LaurentPoly::var(cs.quiver().arrow_var(root.arrow));
        poly = times_truncated(&poly, &geometric(&t, &slot_var(cs, root.from), &slot_var(cs, root.to), cap), cap);
    }
    Ok(schur_expansion(&shell(cs, poly)?))
}

/// The Hall-Littlewood series up to total arrow degree `cap`.
pub fn chi_truncated(cs: &CurrentSequence, cap: u32) -> Result<GroupedPoly> {
    from_schur_table(cs.quiver().vertices().to_vec(), cs.dimension_vector(), &chi_truncated_schur(cs, cap)?)
}

/// `s_{mu(k)}` in the variables of a single step.
pub fn step_schur(cs: &CurrentSequence, k: usize) -> Result<GroupedPoly> {
    let step = &cs.steps()[k];
    let weights: Vec<DominantWeight> = (0..cs.quiver().vertex_count())
        .map(|i| if i == step.vertex { step.weight.clone() } else { DominantWeight::zero(0) })
        .collect();
    GroupedPoly::schur(cs.quiver().vertices().to_vec(), &weights)
}

/// The Hall-Littlewood series as `s_{mu(1)} ⋆ .. ⋆ s_{mu(m)}`, multiplied
/// from the left, up to total arrow degree `cap`.
pub fn chi_by_shuffles(cs: &CurrentSequence, cap: u32) -> Result<GroupedPoly> {
    let q = cs.quiver();
    let n = q.vertex_count();
    let mut acc = GroupedPoly::constant(q.vertices().to_vec(), vec![0; n], LaurentPoly::one());
    for k in 0..cs.len() {
        acc = shuffle_hat(q, &acc, &step_schur(cs, k)?, cap)?;
    }
    Ok(acc)
}

/// The pushforward class: `D(x^mu prod (1 - t_b y / z))` over pairs where
/// `y` belongs to a later step at the tail of `b` and `z` to an earlier
/// step at its head.
pub fn psi_class(cs: &CurrentSequence) -> Result<GroupedPoly> {
    let q = cs.quiver();
    let ix = cs.indexing();
    let mut poly = LaurentPoly::monomial(weight_monomial(cs));
    for (later, sl) in cs.steps().iter().enumerate() {
        for (earlier, se) in cs.steps()[..later].iter().enumerate() {
            for (b, arrow) in q.arrows().iter().enumerate() {
                if arrow.tail != sl.vertex || arrow.head != se.vertex {
                    continue;
                }
                let t = LaurentPoly::var(q.arrow_var(b));
                for y in ix.step_slots[later].clone() {
                    for z in ix.step_slots[earlier].clone() {
                        poly = &poly * &linear_factor(&t, &slot_var(cs, y), &slot_var(cs, z));
                    }
                }
            }
        }
    }
    let s = shell(cs, poly)?;
    from_schur_table(s.vertices().to_vec(), s.dims().to_vec(), &schur_expansion(&s))
}

/// `R_mu = sum_w w(u^mu prod_{i<j} (u_i - t u_j) / (u_i - u_j))` on the
/// Jordan quiver, with `t` its loop variable and `u_i = x(0)_i`.
pub fn hl_r_polynomial(mu: &[i64]) -> Result<GroupedPoly> {
    let quiver = Quiver::jordan();
    let m = mu.len();
    let base = GroupedPoly::constant(quiver.vertices().to_vec(), vec![m], LaurentPoly::zero());
    let u = base.vars(0);
    let t = LaurentPoly::var(quiver.arrow_var(0));
    let mut numerator = LaurentPoly::term(Monomial::from_pairs(u.iter().cloned().zip(mu.iter().map(|&e| e as i32))), BigInt::from(1));
    for i in 0..m {
        for j in i + 1..m {
            let factor = LaurentPoly::var(u[i].clone()) - &t * &LaurentPoly::var(u[j].clone());
            numerator = &numerator * &factor;
        }
    }
    let alternating = antisymmetrize(&base.with_poly(numerator));
    Ok(base.with_poly(divide_by_vandermonde(alternating.poly(), &u)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn grouped(q: &Quiver, dims: &[usize], s: &str) -> GroupedPoly {
        GroupedPoly::new(q.vertices().to_vec(), dims.to_vec(), poly(s)).unwrap()
    }

    #[test]
    fn star_on_a_single_arrow() {
        let q = Quiver::path(2);
        let one_at = |d: &[usize]| grouped(&q, d, "1");
        assert_eq!(*shuffle_star(&q, &one_at(&[1, 0]), &one_at(&[0, 1])).unwrap().poly(), poly("1"));
        let p = shuffle_star(&q, &one_at(&[0, 1]), &one_at(&[1, 0])).unwrap();
        assert_eq!(*p.poly(), poly("1 - t_01*x(0)_1*x(1)_1^-1"));
        let f = grouped(&q, &[1, 1], "x(0)_1^2*x(1)_1");
        assert_eq!(shuffle_star(&q, &f, &one_at(&[0, 0])).unwrap(), f);
    }

    #[test]
    fn group_mismatch() {
        let f = grouped(&Quiver::path(2), &[1, 0], "1");
        assert!(matches!(shuffle_star(&Quiver::jordan(), &f, &f), Err(Error::GroupMismatch(_))));
    }

    #[test]
    fn psi_and_r_polynomials_on_two_steps() {
        let zero = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[0]), ("0", &[0])]).unwrap();
        assert_eq!(*psi_class(&zero).unwrap().poly(), poly("1 + t_00"));
        assert_eq!(*hl_r_polynomial(&[0, 0]).unwrap().poly(), poly("1 + t_00"));
        let one = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[1]), ("0", &[0])]).unwrap();
        assert_eq!(*psi_class(&one).unwrap().poly(), poly("x(0)_1 + x(0)_2"));
        assert_eq!(*hl_r_polynomial(&[1, 0]).unwrap().poly(), poly("x(0)_1 + x(0)_2"));
        assert_eq!(*hl_r_polynomial(&[3]).unwrap().poly(), poly("x(0)_1^3"));
    }

    #[test]
    fn single_step_psi_is_a_schur_polynomial() {
        let cs = CurrentSequence::from_parts(Quiver::cycle(2), &[("1", &[2, 1])]).unwrap();
        assert_eq!(*psi_class(&cs).unwrap().poly(), poly("x(1)_1^2*x(1)_2 + x(1)_1*x(1)_2^2"));
    }

    #[test]
    fn jordan_series_at_degree_two() {
        let cs = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[0]), ("0", &[0])]).unwrap();
        let chi = chi_truncated_schur(&cs, 2).unwrap();
        let w = |v: &[i64]| vec![DominantWeight::new(v.to_vec()).unwrap()];
        let mut expected = SchurTable::new();
        expected.insert(w(&[0, 0]), poly("1"));
        expected.insert(w(&[1, -1]), poly("t_00"));
        expected.insert(w(&[2, -2]), poly("t_00^2"));
        assert_eq!(chi, expected);
        let expanded = chi_truncated(&cs, 0).unwrap();
        assert_eq!(*expanded.poly(), poly("1"));
    }

    #[test]
    fn unit_for_the_qt_product() {
        let q = Quiver::jordan();
        let f = GroupedPoly::schur(q.vertices().to_vec(), &[DominantWeight::new(vec![2, 1]).unwrap()]).unwrap();
        let one = grouped(&q, &[0], "1");
        assert_eq!(qt_shuffle(&q, &f, &one, 3).unwrap(), f);
        assert_eq!(shuffle_hat(&q, &f, &one, 3).unwrap(), f);
    }
}

//! Sparse multivariate Laurent polynomials with big-integer coefficients.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::VarId;
use crate::error::{Error, Result};

/// A Laurent monomial: sorted `(variable, exponent)` pairs, no zero exponents.
///
/// Ordered graded-lexicographically: by total degree, then by the exponent of
/// the first variable (in [`VarId`] order) where the two differ.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(VarId, i32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: VarId, e: i32) -> Self {
        if e == 0 {
            Self::one()
        } else {
            Monomial(SmallVec::from_elem((v, e), 1))
        }
    }

    /// Builds from arbitrary pairs, merging repeats and dropping zeros.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (VarId, i32)>) -> Self {
        let mut map: BTreeMap<VarId, i32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e != 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(VarId, i32)] {
        &self.0
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().map(|(_, e)| *e as i64).sum()
    }

    /// Degree counting only variables accepted by `filter`.
    pub fn degree_in(&self, filter: impl Fn(&VarId) -> bool) -> i64 {
        self.0.iter().filter(|(v, _)| filter(v)).map(|(_, e)| *e as i64).sum()
    }

    pub fn exponent(&self, v: &VarId) -> i32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1 + b[j].1;
                    if e != 0 {
                        out.push((a[i].0.clone(), e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().cloned());
        Monomial(out)
    }

    pub fn inverse(&self) -> Monomial {
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), -e)).collect())
    }

    pub fn pow(&self, n: i32) -> Monomial {
        if n == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(v, e)| (v.clone(), e * n)).collect())
    }

    /// `self / other` when every exponent of the quotient is non-negative.
    fn divides_into(&self, other: &Monomial) -> Option<Monomial> {
        let q = other.mul(&self.inverse());
        q.0.iter().all(|(_, e)| *e > 0).then_some(q)
    }

    /// Splits into the part over variables accepted by `filter` and the rest.
    pub fn split(&self, filter: impl Fn(&VarId) -> bool) -> (Monomial, Monomial) {
        let (a, b): (SmallVec<_>, SmallVec<_>) = self.0.iter().cloned().partition(|(v, _)| filter(v));
        (Monomial(a), Monomial(b))
    }

    /// Renames variables; the map must be injective on this monomial's support.
    pub fn rename(&self, f: impl Fn(&VarId) -> VarId) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|(v, e)| (f(v), *e)))
    }

    fn cmp_lex(&self, other: &Monomial) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some((_, e)), None) => return e.cmp(&0),
                (None, Some((_, e))) => return 0.cmp(e),
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return ea.cmp(&0),
                    Ordering::Greater => return 0.cmp(eb),
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.cmp_lex(other))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept canonical: no zero coefficients, no zero exponents. The
/// [`Display`](fmt::Display) form is the canonical text grammar and round-trips
/// through [`str::parse`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn var(v: VarId) -> Self {
        Self::term(Monomial::var(v, 1), 1)
    }

    pub fn term(m: Monomial, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, BigInt)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The constant term as an integer.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one())
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * m * other`.
    pub fn add_scaled(&mut self, other: &LaurentPoly, c: &BigInt, m: &Monomial) {
        if c.is_zero() {
            return;
        }
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), oc * c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly { terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut result = LaurentPoly::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = &result * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// All variables that occur with a nonzero exponent.
    pub fn variables(&self) -> BTreeSet<VarId> {
        self.terms.keys().flat_map(|m| m.pairs().iter().map(|(v, _)| v.clone())).collect()
    }

    /// Keeps the terms whose degree in the filtered variables is at most `max`.
    pub fn truncate(&self, filter: impl Fn(&VarId) -> bool, max: i64) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree_in(&filter) <= max)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Groups terms by their monomial in the filtered variables; the values
    /// are the cofactors over the remaining variables.
    pub fn collect_by(&self, filter: impl Fn(&VarId) -> bool) -> BTreeMap<Monomial, LaurentPoly> {
        let mut out: BTreeMap<Monomial, LaurentPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, rest) = m.split(&filter);
            out.entry(inside).or_default().add_term(rest, c.clone());
        }
        out
    }

    /// Applies `f` to every monomial; `f` must be injective on the support.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(m), c.clone());
        }
        out
    }

    /// Substitutes polynomials for variables. Unassigned variables stay.
    ///
    /// A variable appearing with a negative exponent must be assigned a unit
    /// monomial (coefficient `1` or `-1`).
    pub fn substitute(&self, assignment: &HashMap<VarId, LaurentPoly>) -> Result<LaurentPoly> {
        let mut inverses: HashMap<&VarId, LaurentPoly> = HashMap::new();
        let mut powers: HashMap<(&VarId, i32), LaurentPoly> = HashMap::new();
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::one();
            let mut acc = LaurentPoly::constant(c.clone());
            for (v, e) in m.pairs() {
                let Some(value) = assignment.get(v) else {
                    kept = kept.mul(&Monomial::var(v.clone(), *e));
                    continue;
                };
                let factor = if *e > 0 {
                    powers.entry((v, *e)).or_insert_with(|| value.pow(*e as u32)).clone()
                } else {
                    if !inverses.contains_key(v) {
                        let inv = value
                            .unit_inverse()
                            .ok_or_else(|| Error::NonInvertibleSubstitution { var: v.to_string() })?;
                        inverses.insert(v, inv);
                    }
                    powers
                        .entry((v, *e))
                        .or_insert_with(|| inverses[v].pow((-*e) as u32))
                        .clone()
                };
                acc = &acc * &factor;
            }
            out += &acc.mul_monomial(&kept);
        }
        Ok(out)
    }

    /// Inverse of a unit monomial `±x^a`.
    pub fn unit_inverse(&self) -> Option<LaurentPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some(LaurentPoly::term(m.inverse(), c.clone()))
        } else {
            None
        }
    }

    /// The single term when the polynomial has exactly one.
    pub fn as_single_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    fn min_exponents(&self, into: &mut BTreeMap<VarId, i32>) {
        let vars = self.variables();
        for v in vars {
            let lo = self.terms.keys().map(|m| m.exponent(&v)).min().unwrap_or(0);
            into.insert(v, lo);
        }
    }

    /// Exact quotient `self / divisor`, failing with
    /// [`Error::InexactDivision`] when the divisor does not divide.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        if divisor.is_zero() {
            return Err(Error::InexactDivision("division by zero".into()));
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some((m, c)) = divisor.as_single_term() {
            let mut out = LaurentPoly::zero();
            let inv = m.inverse();
            for (k, x) in &self.terms {
                if (x % c).is_zero() {
                    out.add_term(k.mul(&inv), x / c);
                } else {
                    return Err(Error::InexactDivision(format!("{x} is not divisible by {c}")));
                }
            }
            return Ok(out);
        }
        // Shift both into the polynomial ring, divide there, shift back.
        let mut lo_f = BTreeMap::new();
        self.min_exponents(&mut lo_f);
        let mut lo_g = BTreeMap::new();
        divisor.min_exponents(&mut lo_g);
        let shift_f = Monomial::from_pairs(lo_f.iter().map(|(v, e)| (v.clone(), -e)));
        let shift_g = Monomial::from_pairs(lo_g.iter().map(|(v, e)| (v.clone(), -e)));
        let mut rem = self.mul_monomial(&shift_f);
        let g = divisor.mul_monomial(&shift_g);
        let (lead_m, lead_c) = g.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())).unwrap();
        let mut quot = LaurentPoly::zero();
        while let Some((m, c)) = rem.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let q_m = if lead_m.is_one() { Some(m.clone()) } else { lead_m.divides_into(&m) };
            let Some(q_m) = q_m else {
                return Err(Error::InexactDivision(format!("leading term {m} not divisible by {lead_m}")));
            };
            if !(&c % &lead_c).is_zero() {
                return Err(Error::InexactDivision(format!("coefficient {c} not divisible by {lead_c}")));
            }
            let q_c = &c / &lead_c;
            rem.add_scaled(&g, &(-&q_c), &q_m);
            quot.add_term(q_m, q_c);
        }
        // self = g0 * quot with g0 = divisor * shift_g, rem_f = self * shift_f.
        let back = shift_g.mul(&shift_f.inverse());
        Ok(quot.mul_monomial(&back))
    }

    /// Evaluates at integer values for every variable in the support.
    pub fn eval_all(&self, value: impl Fn(&VarId) -> i64) -> Option<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.pairs() {
                let x = BigInt::from(value(v));
                if *e < 0 {
                    if x.abs().is_one() {
                        t *= num_traits::pow(x, (-*e) as usize);
                    } else {
                        return None;
                    }
                } else {
                    t *= num_traits::pow(x, *e as usize);
                }
            }
            total += t;
        }
        Some(total)
    }

    /// Whether every coefficient is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<VarId> for LaurentPoly {
    fn from(v: VarId) -> Self {
        LaurentPoly::var(v)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (small, big) = if self.len() <= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = LaurentPoly::zero();
        for (m, c) in &small.terms {
            out.add_scaled(big, c, m);
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t(name: &str) -> LaurentPoly {
        LaurentPoly::var(VarId::arrow(name))
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let ta = t("t_a");
        let inv = ta.unit_inverse().unwrap();
        assert!((&ta * &inv).is_one());

        let tt = LaurentPoly::var(VarId::T);
        let one = LaurentPoly::one();
        assert_eq!((&one + &tt) * (&one - &tt), p("-t^2 + 1"));

        let lhs = p("t_01^3*t_10^3");
        let rhs = p("t^3 + 2*t^2");
        assert_eq!((&lhs * &rhs).to_string(), "t_01^3*t_10^3*t^3 + 2*t_01^3*t_10^3*t^2");
    }

    #[test]
    fn substitution_examples() {
        let k = p("2*t_01^6*t_10^6 + 5*t_01^5*t_10^5 + t_01^4*t_10^4");
        let assign = HashMap::from([
            (VarId::arrow("t_01"), LaurentPoly::var(VarId::T)),
            (VarId::arrow("t_10"), LaurentPoly::one()),
        ]);
        assert_eq!(k.substitute(&assign).unwrap().to_string(), "2*t^6 + 5*t^5 + t^4");

        let ta = p("t_a^-1");
        let id = HashMap::from([(VarId::arrow("t_a"), t("t_a"))]);
        assert_eq!(ta.substitute(&id).unwrap(), ta);

        let at_zero = HashMap::from([(VarId::arrow("t_00"), LaurentPoly::zero())]);
        assert_eq!(p("1 + t_00").substitute(&at_zero).unwrap(), LaurentPoly::one());
        assert_eq!(
            ta.substitute(&HashMap::from([(VarId::arrow("t_a"), p("1 + t"))])),
            Err(Error::NonInvertibleSubstitution { var: "t_a".into() })
        );
    }

    #[test]
    fn printing() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("t^-2 - 3*t_a*q").to_string(), "-3*t_a*q + t^-2");
        assert_eq!(p("x(0)_1 - x(0)_2").to_string(), "x(0)_1 - x(0)_2");
        assert_eq!(p("u(3)_2^2*t_a").to_string(), "t_a*u(3)_2^2");
    }

    #[test]
    fn exact_division() {
        let f = p("x(0)_1^2 - x(0)_2^2");
        let g = p("x(0)_1 - x(0)_2");
        assert_eq!(f.exact_div(&g).unwrap(), p("x(0)_1 + x(0)_2"));
        assert!(p("x(0)_1^2 + 1").exact_div(&g).is_err());
        let h = p("t^-3 + t^-1");
        assert_eq!(h.exact_div(&p("t^2 + 1")).unwrap(), p("t^-3"));
        assert_eq!(p("6*t").exact_div(&p("3")).unwrap(), p("2*t"));
        assert!(p("5*t").exact_div(&p("3")).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        let vars = prop::sample::select(vec![VarId::arrow("t_a"), VarId::arrow("t_b"), VarId::T, VarId::x("0", 1)]);
        let term = (prop::collection::vec((vars, -2i32..3), 0..3), -3i64..4);
        prop::collection::vec(term, 0..5).prop_map(|terms| {
            let mut out = LaurentPoly::zero();
            for (pairs, c) in terms {
                out.add_term(Monomial::from_pairs(pairs), BigInt::from(c));
            }
            out
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn canonical_text_round_trips(a in arb_poly()) {
            let text = a.to_string();
            let back: LaurentPoly = text.parse().unwrap();
            prop_assert_eq!(back.to_string(), text);
            prop_assert_eq!(back, a);
        }

        #[test]
        fn identity_substitution(a in arb_poly()) {
            let id: HashMap<VarId, LaurentPoly> =
                a.variables().into_iter().map(|v| (v.clone(), LaurentPoly::var(v))).collect();
            prop_assert_eq!(a.substitute(&id).unwrap(), a);
        }

        #[test]
        fn product_divides_back(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }
    }
}

//! Catabolizable multitableaux on nonbranching quivers.
//!
//! Letters are `(step, position)` pairs. Step `k` owns the letters
//! `(k, 0), .., (k, a_k - 1)` and the letter `(k, r)` occurs `mu(k)_r` times
//! across all vertices.

mod tableau;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::algebra::{LaurentPoly, Monomial, Partition};
use crate::error::{Error, Result};
use crate::quiver::CurrentSequence;

pub use tableau::{column_insert, yamanouchi, InsertionOrder, Letter, Tableau};

/// The insertion order that reproduces the operator engine; see the tests
/// at the bottom of this file.
pub const DEFAULT_ORDER: InsertionOrder = InsertionOrder::MovedFirst;

/// One tableau per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiTableau(pub Vec<Tableau>);

impl MultiTableau {
    pub fn empty(vertices: usize) -> Self {
        MultiTableau(vec![Tableau::empty(); vertices])
    }

    pub fn shape(&self) -> Vec<Partition> {
        self.0.iter().map(Tableau::shape).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.0.iter().all(Tableau::is_empty)
    }

    /// Debug dump: one row per line, a blank line between vertices, letters
    /// printed one-based as `step.position`. Empty tableaux print as `-`.
    pub fn dump(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for MultiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("\n\n")?;
            }
            if t.is_empty() {
                f.write_str("-")?;
            } else {
                write!(f, "{t}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Outcome of one catabolism step that did not reject.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatMove {
    pub result: MultiTableau,
    /// Number of entries carried along the outgoing arrow.
    pub moved: usize,
    /// The arrow they travelled along, if any moved.
    pub arrow: Option<usize>,
}

fn step_partition(cs: &CurrentSequence, k: usize) -> Result<Partition> {
    let w = &cs.steps()[k].weight;
    w.to_partition().ok_or_else(|| Error::NonPartitionWeight(w.parts().to_vec()))
}

fn single_out_arrow(cs: &CurrentSequence, vertex: usize) -> Result<Option<usize>> {
    let out = cs.quiver().out_arrows(vertex);
    match out.len() {
        0 => Ok(None),
        1 => Ok(Some(out[0])),
        count => Err(Error::BranchingVertex { vertex: cs.quiver().vertices()[vertex].clone(), count }),
    }
}

/// Splits `t` along the Yamanouchi tableau of `mu` in the letters of step
/// `k`. Returns the reading word of the first `a` rows minus `Y_mu` and the
/// rows from `a` on, or `None` if the step-`k` letters of `t` do not form
/// `Y_mu` or an earlier letter is still present.
fn peel(t: &Tableau, k: usize, a: usize, mu: &Partition) -> Option<(Vec<Letter>, Tableau)> {
    let k = k as u16;
    let rows = t.rows();
    if mu.length() > rows.len() {
        return None;
    }
    for (r, row) in rows.iter().enumerate() {
        let n = mu.part(r) as usize;
        if row.len() < n || row[..n].iter().any(|x| x.step != k || x.pos as usize != r) {
            return None;
        }
        if row[n..].iter().any(|x| x.step <= k) {
            return None;
        }
    }
    let mut word = Vec::new();
    for r in (0..a.min(rows.len())).rev() {
        word.extend_from_slice(&rows[r][mu.part(r) as usize..]);
    }
    let rest = Tableau::from_rows(rows.iter().skip(a).cloned().collect());
    Some((word, rest))
}

/// Applies the catabolism of step `k` to `t`, or returns `Ok(None)` when the
/// multitableau does not admit it.
pub fn cat_step(cs: &CurrentSequence, t: &MultiTableau, k: usize, order: InsertionOrder) -> Result<Option<CatMove>> {
    let step = &cs.steps()[k];
    let i = step.vertex;
    let arrow = single_out_arrow(cs, i)?;
    let mu = step_partition(cs, k)?;
    // No letter of this step may sit at another vertex.
    let k16 = k as u16;
    if t.0.iter().enumerate().any(|(j, tab)| j != i && tab.rows().iter().flatten().any(|x| x.step <= k16)) {
        return Ok(None);
    }
    let Some((word, rest)) = peel(&t.0[i], k, step.width(), &mu) else {
        return Ok(None);
    };
    let mut result = t.clone();
    result.0[i] = rest;
    if word.is_empty() {
        return Ok(Some(CatMove { result, moved: 0, arrow: None }));
    }
    let Some(b) = arrow else {
        return Ok(None);
    };
    let j = cs.quiver().arrows()[b].head;
    result.0[j] = column_insert(&result.0[j], &word, order);
    Ok(Some(CatMove { result, moved: word.len(), arrow: Some(b) }))
}

/// Runs every step in order. Returns the weight `prod t_b^(moved)` when the
/// chain ends in the empty multitableau, `None` if some step rejects.
pub fn catabolism_weight(cs: &CurrentSequence, t: &MultiTableau, order: InsertionOrder) -> Result<Option<Monomial>> {
    let mut cur = t.clone();
    let mut weight = Monomial::one();
    for k in 0..cs.len() {
        match cat_step(cs, &cur, k, order)? {
            None => return Ok(None),
            Some(mv) => {
                if let Some(b) = mv.arrow {
                    weight = weight.mul(&Monomial::var(cs.quiver().arrow_var(b), mv.moved as i32));
                }
                cur = mv.result;
            }
        }
    }
    Ok(cur.is_empty().then_some(weight))
}

/// How far each vertex's tableau may grow.
#[derive(Clone, Debug)]
pub enum ShapeBound {
    /// Contained in the given shapes.
    Within(Vec<Partition>),
    /// At most this many rows per vertex.
    Rows(Vec<usize>),
}

impl ShapeBound {
    fn row_limit(&self, vertex: usize) -> usize {
        match self {
            ShapeBound::Within(s) => s[vertex].length(),
            ShapeBound::Rows(r) => r[vertex],
        }
    }

    fn row_cap(&self, vertex: usize, row: usize) -> usize {
        match self {
            ShapeBound::Within(s) => s[vertex].part(row) as usize,
            ShapeBound::Rows(_) => usize::MAX,
        }
    }
}

/// All multitableaux with the letter content of `cs` whose shapes obey
/// `bound`.
pub fn semistandard_fillings(cs: &CurrentSequence, bound: &ShapeBound) -> Result<Vec<MultiTableau>> {
    let mut letters = Vec::new();
    for k in 0..cs.len() {
        let mu = step_partition(cs, k)?;
        for (r, &m) in mu.parts().iter().enumerate() {
            letters.push((Letter::new(k, r), m as usize));
        }
    }
    let n = cs.quiver().vertex_count();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<Vec<Letter>>> = vec![Vec::new(); n];
    fill(&letters, 0, bound, &mut rows, &mut out);
    Ok(out)
}

fn fill(
    letters: &[(Letter, usize)],
    at: usize,
    bound: &ShapeBound,
    rows: &mut Vec<Vec<Vec<Letter>>>,
    out: &mut Vec<MultiTableau>,
) {
    if at == letters.len() {
        if let ShapeBound::Within(shapes) = bound {
            if rows.iter().zip(shapes).any(|(r, s)| r.iter().map(Vec::len).sum::<usize>() != s.size() as usize) {
                return;
            }
        }
        out.push(MultiTableau(rows.iter().map(|r| Tableau::from_rows(r.clone())).collect()));
        return;
    }
    let (x, m) = letters[at];
    spread(letters, at, x, m, 0, bound, rows, out);
}

// Distributes `left` copies of `x` over vertices `v..` as horizontal strips.
#[allow(clippy::too_many_arguments)]
fn spread(
    letters: &[(Letter, usize)],
    at: usize,
    x: Letter,
    left: usize,
    v: usize,
    bound: &ShapeBound,
    rows: &mut Vec<Vec<Vec<Letter>>>,
    out: &mut Vec<MultiTableau>,
) {
    if v == rows.len() {
        if left == 0 {
            fill(letters, at + 1, bound, rows, out);
        }
        return;
    }
    let old: Vec<usize> = rows[v].iter().map(Vec::len).collect();
    strip(letters, at, x, left, v, 0, &old, bound, rows, out);
}

// Adds copies of `x` to row `r` and below at vertex `v`, keeping a horizontal
// strip over the lengths `old`.
#[allow(clippy::too_many_arguments)]
fn strip(
    letters: &[(Letter, usize)],
    at: usize,
    x: Letter,
    left: usize,
    v: usize,
    r: usize,
    old: &[usize],
    bound: &ShapeBound,
    rows: &mut Vec<Vec<Vec<Letter>>>,
    out: &mut Vec<MultiTableau>,
) {
    let limit = bound.row_limit(v);
    if left == 0 || r >= limit || r > old.len() {
        spread(letters, at, x, left, v + 1, bound, rows, out);
        return;
    }
    let len = old.get(r).copied().unwrap_or(0);
    let above = if r == 0 { usize::MAX } else { old[r - 1] };
    let max_add = left.min(above - len).min(bound.row_cap(v, r).saturating_sub(len));
    for add in (0..=max_add).rev() {
        if add > 0 {
            if r == rows[v].len() {
                rows[v].push(Vec::new());
            }
            rows[v][r].extend(std::iter::repeat_n(x, add));
        }
        strip(letters, at, x, left - add, v, r + 1, old, bound, rows, out);
        if add > 0 {
            let row = &mut rows[v][r];
            row.truncate(row.len() - add);
            if row.is_empty() {
                rows[v].pop();
            }
        }
    }
}

/// Weighted count of catabolizable multitableaux of shape `lambda`.
pub fn enumerate_catabolizable(cs: &CurrentSequence, lambda: &[Partition]) -> Result<LaurentPoly> {
    enumerate_catabolizable_with(cs, lambda, DEFAULT_ORDER)
}

pub fn enumerate_catabolizable_with(
    cs: &CurrentSequence,
    lambda: &[Partition],
    order: InsertionOrder,
) -> Result<LaurentPoly> {
    let n = cs.quiver().vertex_count();
    if lambda.len() != n {
        return Err(Error::DimensionMismatch(format!("{} partitions for {} vertices", lambda.len(), n)));
    }
    check_nonbranching(cs)?;
    let mut out = LaurentPoly::zero();
    for t in semistandard_fillings(cs, &ShapeBound::Within(lambda.to_vec()))? {
        if let Some(m) = catabolism_weight(cs, &t, order)? {
            out.add_term(m, BigInt::from(1));
        }
    }
    Ok(out)
}

/// The catabolizable multitableaux themselves, with their weights.
pub fn catabolizable_tableaux(
    cs: &CurrentSequence,
    lambda: &[Partition],
    order: InsertionOrder,
) -> Result<Vec<(MultiTableau, Monomial)>> {
    check_nonbranching(cs)?;
    let mut out = Vec::new();
    for t in semistandard_fillings(cs, &ShapeBound::Within(lambda.to_vec()))? {
        if let Some(m) = catabolism_weight(cs, &t, order)? {
            out.push((t, m));
        }
    }
    Ok(out)
}

/// The weighted counts for every shape with at most `nu^(j)` rows at
/// vertex `j`, in one pass. Shapes with no catabolizable filling are absent.
pub fn catabolism_table(cs: &CurrentSequence, order: InsertionOrder) -> Result<BTreeMap<Vec<Partition>, LaurentPoly>> {
    check_nonbranching(cs)?;
    let mut out: BTreeMap<Vec<Partition>, LaurentPoly> = BTreeMap::new();
    for t in semistandard_fillings(cs, &ShapeBound::Rows(cs.dimension_vector()))? {
        if let Some(m) = catabolism_weight(cs, &t, order)? {
            out.entry(t.shape()).or_insert_with(LaurentPoly::zero).add_term(m, BigInt::from(1));
        }
    }
    out.retain(|_, p| !p.is_zero());
    Ok(out)
}

fn check_nonbranching(cs: &CurrentSequence) -> Result<()> {
    for step in cs.steps() {
        single_out_arrow(cs, step.vertex)?;
    }
    Ok(())
}

use std::collections::HashSet;

use crate::algebra::{valid_arrow_name, Monomial, VarId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub tail: usize,
    pub head: usize,
}

/// A finite quiver. Loops and multiple arrows are allowed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(id, tail, head)` triples.
    pub fn new(vertices: Vec<String>, arrows: Vec<(String, String, String)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for (n, v) in vertices.iter().enumerate() {
            if !seen.insert(v.as_str()) {
                return Err(schema(format!("/vertices/{n}"), format!("duplicate vertex '{v}'")));
            }
        }
        let lookup = |name: &str, at: String| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| schema(at, format!("unknown vertex '{name}'")))
        };
        let mut ids = HashSet::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (n, (id, tail, head)) in arrows.into_iter().enumerate() {
            if !valid_arrow_name(&id) {
                return Err(schema(format!("/arrows/{n}/id"), format!("'{id}' is not a usable arrow name")));
            }
            if !ids.insert(id.clone()) {
                return Err(schema(format!("/arrows/{n}/id"), format!("duplicate arrow '{id}'")));
            }
            let tail = lookup(&tail, format!("/arrows/{n}/tail"))?;
            let head = lookup(&head, format!("/arrows/{n}/head"))?;
            out.push(Arrow { id, tail, head });
        }
        Ok(Quiver { vertices, arrows: out })
    }

    /// One vertex `0` with a loop `t_00`.
    pub fn jordan() -> Self {
        Self::cycle(1)
    }

    /// The cyclic quiver on `0..r` with arrows `t_{i,i+1}`, named `t_01`,
    /// `t_12`, ..., `t_{r-1}0` (indices joined without separator).
    pub fn cycle(r: usize) -> Self {
        let vertices = (0..r).map(|i| i.to_string()).collect();
        let arrows = (0..r)
            .map(|i| {
                let j = (i + 1) % r;
                (format!("t_{i}{j}"), i.to_string(), j.to_string())
            })
            .collect();
        Self::new(vertices, arrows).expect("well-formed cycle")
    }

    /// The directed path `0 -> 1 -> ... -> n-1`.
    pub fn path(n: usize) -> Self {
        let vertices = (0..n).map(|i| i.to_string()).collect();
        let arrows = (1..n).map(|i| (format!("t_{}{}", i - 1, i), (i - 1).to_string(), i.to_string())).collect();
        Self::new(vertices, arrows).expect("well-formed path")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_var(&self, b: usize) -> VarId {
        VarId::arrow(&self.arrows[b].id)
    }

    /// Indices of arrows with tail `v`.
    pub fn out_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&b| self.arrows[b].tail == v).collect()
    }

    pub fn in_arrows(&self, v: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&b| self.arrows[b].head == v).collect()
    }

    /// Every simple directed cycle, as the list of its arrows. Each cycle is
    /// reported once, starting from its smallest vertex.
    pub fn simple_cycles(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for start in 0..self.vertex_count() {
            let mut path = Vec::new();
            let mut on_path = vec![false; self.vertex_count()];
            self.cycles_from(start, start, &mut path, &mut on_path, &mut out);
        }
        out
    }

    fn cycles_from(&self, start: usize, v: usize, path: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Vec<usize>>) {
        on_path[v] = true;
        for b in self.out_arrows(v) {
            let h = self.arrows[b].head;
            if h == start {
                let mut cyc = path.clone();
                cyc.push(b);
                out.push(cyc);
            } else if h > start && !on_path[h] {
                path.push(b);
                self.cycles_from(start, h, path, on_path, out);
                path.pop();
            }
        }
        on_path[v] = false;
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for a in &self.arrows {
                for (x, y) in [(a.tail, a.head), (a.head, a.tail)] {
                    if x == v && !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn classify(&self) -> Classification {
        let cycles = self.simple_cycles();
        let nonbranching = (0..self.vertex_count())
            .all(|v| self.out_arrows(v).len() <= 1 && self.in_arrows(v).len() <= 1);
        let cyclic = (self.vertex_count() > 0
            && self.is_connected()
            && (0..self.vertex_count()).all(|v| self.out_arrows(v).len() == 1 && self.in_arrows(v).len() == 1))
        .then_some(self.vertex_count());
        let vectors = cycles
            .iter()
            .map(|c| {
                let mut v = vec![0i64; self.arrows.len()];
                for &b in c {
                    v[b] += 1;
                }
                v
            })
            .collect::<Vec<_>>();
        Classification {
            acyclic: cycles.is_empty(),
            nonbranching,
            cyclic,
            lattice: CycleLattice::new(self.arrows.len(), &vectors),
            cycles: vectors,
        }
    }

    /// For a cyclic quiver, the arrows in cycle order starting at vertex 0.
    pub fn cycle_order(&self) -> Result<Vec<usize>> {
        if self.classify().cyclic.is_none() {
            return Err(Error::NotCyclic);
        }
        let mut order = Vec::with_capacity(self.vertex_count());
        let mut v = 0;
        for _ in 0..self.vertex_count() {
            let b = self.out_arrows(v)[0];
            order.push(b);
            v = self.arrows[b].head;
        }
        Ok(order)
    }

    /// Monomial of arrow variables with the given exponent per arrow.
    pub fn arrow_monomial(&self, exps: &[i64]) -> Monomial {
        Monomial::from_pairs(exps.iter().enumerate().map(|(b, &e)| (self.arrow_var(b), e as i32)))
    }

    /// Exponents of arrow variables in `m`, or `None` if `m` has other variables.
    pub fn arrow_exponents(&self, m: &Monomial) -> Option<Vec<i64>> {
        let mut out = vec![0i64; self.arrows.len()];
        for (v, e) in m.pairs() {
            let VarId::Arrow(name) = v else { return None };
            let b = self.arrows.iter().position(|a| *a.id == **name)?;
            out[b] = *e as i64;
        }
        Some(out)
    }
}

fn schema(pointer: String, message: String) -> Error {
    Error::Schema { pointer, message }
}

/// Structural flags of a quiver.
#[derive(Clone, Debug)]
pub struct Classification {
    /// No directed cycles (loops count as cycles).
    pub acyclic: bool,
    /// Every vertex has at most one incoming and one outgoing arrow.
    pub nonbranching: bool,
    /// `Some(r)` when the quiver is a single directed cycle on `r` vertices.
    pub cyclic: Option<usize>,
    /// Arrow-count vectors of the simple directed cycles.
    pub cycles: Vec<Vec<i64>>,
    pub lattice: CycleLattice,
}

/// The integer span of the directed-cycle vectors in `Z^arrows`, kept in
/// row echelon form for membership tests.
#[derive(Clone, Debug)]
pub struct CycleLattice {
    dim: usize,
    rows: Vec<Vec<i128>>,
}

impl CycleLattice {
    pub fn new(dim: usize, generators: &[Vec<i64>]) -> Self {
        let mut rows: Vec<Vec<i128>> = Vec::new();
        for g in generators {
            let mut v: Vec<i128> = g.iter().map(|&x| x as i128).collect();
            Self::insert(&mut rows, &mut v);
        }
        CycleLattice { dim, rows }
    }

    // Rows have strictly increasing pivot columns; pivots are positive.
    fn insert(rows: &mut Vec<Vec<i128>>, v: &mut Vec<i128>) {
        let mut idx = 0;
        loop {
            let Some(col) = v.iter().position(|&x| x != 0) else { return };
            while idx < rows.len() && pivot(&rows[idx]) < col {
                idx += 1;
            }
            if idx == rows.len() || pivot(&rows[idx]) > col {
                if v[col] < 0 {
                    v.iter_mut().for_each(|x| *x = -*x);
                }
                rows.insert(idx, std::mem::take(v));
                return;
            }
            // Euclid on the pivot column between rows[idx] and v.
            let mut r = std::mem::take(&mut rows[idx]);
            while v[col] != 0 {
                let q = r[col].div_euclid(v[col]);
                for (a, b) in r.iter_mut().zip(v.iter()) {
                    *a -= q * b;
                }
                std::mem::swap(&mut r, v);
            }
            if r[col] < 0 {
                r.iter_mut().for_each(|x| *x = -*x);
            }
            rows[idx] = r;
            // v now has zero at col; continue reducing it further down.
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v: Vec<i128> = v.iter().map(|&x| x as i128).collect();
        for row in &self.rows {
            let col = pivot(row);
            if v[..col].iter().any(|&x| x != 0) {
                return false;
            }
            if v[col] % row[col] != 0 {
                return false;
            }
            let q = v[col] / row[col];
            for (a, b) in v.iter_mut().zip(row) {
                *a -= q * b;
            }
        }
        v.iter().all(|&x| x == 0)
    }
}

fn pivot(row: &[i128]) -> usize {
    row.iter().position(|&x| x != 0).unwrap_or(row.len())
}

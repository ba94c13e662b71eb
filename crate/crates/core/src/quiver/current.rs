use std::ops::Range;

use crate::algebra::{DominantWeight, IntVector, Partition};
use crate::error::{Error, Result};

use super::Quiver;

/// One triple `(vertex, width, weight)`; the width is the weight's rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub vertex: usize,
    pub weight: DominantWeight,
}

impl Step {
    pub fn new(vertex: usize, weight: DominantWeight) -> Self {
        Step { vertex, weight }
    }

    pub fn width(&self) -> usize {
        self.weight.rank()
    }
}

/// Slot bookkeeping for a current sequence.
///
/// Slots are numbered globally in step order, so step `k` owns a contiguous
/// block. Each vertex lists its slots in increasing order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagIndexing {
    pub step_slots: Vec<Range<usize>>,
    pub vertex_slots: Vec<Vec<usize>>,
    pub slot_vertex: Vec<usize>,
    pub slot_step: Vec<usize>,
    /// Offset of the slot inside its step block.
    pub slot_offset: Vec<usize>,
    /// Position of the slot inside its vertex list.
    pub slot_position: Vec<usize>,
}

impl FlagIndexing {
    fn new(vertex_count: usize, steps: &[Step]) -> Self {
        let mut ix = FlagIndexing {
            step_slots: Vec::new(),
            vertex_slots: vec![Vec::new(); vertex_count],
            slot_vertex: Vec::new(),
            slot_step: Vec::new(),
            slot_offset: Vec::new(),
            slot_position: Vec::new(),
        };
        for (k, step) in steps.iter().enumerate() {
            let start = ix.slot_vertex.len();
            for p in 0..step.width() {
                let s = start + p;
                ix.slot_vertex.push(step.vertex);
                ix.slot_step.push(k);
                ix.slot_offset.push(p);
                ix.slot_position.push(ix.vertex_slots[step.vertex].len());
                ix.vertex_slots[step.vertex].push(s);
            }
            ix.step_slots.push(start..start + step.width());
        }
        ix
    }

    pub fn slot_count(&self) -> usize {
        self.slot_vertex.len()
    }
}

/// One integer vector per vertex, of length equal to the vertex dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexWeights(pub Vec<Vec<i64>>);

impl VertexWeights {
    /// Pads partitions to the given dimensions; `None` if one is too long.
    pub fn from_partitions(parts: &[Partition], dims: &[usize]) -> Option<Self> {
        parts.iter().zip(dims).map(|(p, &n)| p.padded(n)).collect::<Option<Vec<_>>>().map(VertexWeights)
    }

    /// Reads the vector in the global slot basis.
    pub fn to_slots(&self, ix: &FlagIndexing) -> Vec<i64> {
        let mut out = vec![0; ix.slot_count()];
        for (v, slots) in ix.vertex_slots.iter().enumerate() {
            for (p, &s) in slots.iter().enumerate() {
                out[s] = self.0[v][p];
            }
        }
        out
    }

    pub fn from_slots(slots: &[i64], ix: &FlagIndexing) -> Self {
        VertexWeights(ix.vertex_slots.iter().map(|ss| ss.iter().map(|&s| slots[s]).collect()).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|w| w.windows(2).all(|p| p[0] >= p[1]))
    }
}

/// A root of the fiber: arrow `arrow` from slot `from` (earlier step) to slot
/// `to` (later step). Its lattice vector is `e_from - e_to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Root {
    pub arrow: usize,
    pub from_step: usize,
    pub from_offset: usize,
    pub to_step: usize,
    pub to_offset: usize,
    pub from: usize,
    pub to: usize,
}

impl Root {
    pub fn vector(&self, n: usize) -> IntVector {
        let mut v = vec![0; n];
        v[self.from] += 1;
        v[self.to] -= 1;
        IntVector(v)
    }
}

/// A quiver together with a sequence of steps `(i_k, a_k, mu(k))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentSequence {
    quiver: Quiver,
    steps: Vec<Step>,
    indexing: FlagIndexing,
}

impl CurrentSequence {
    pub fn new(quiver: Quiver, steps: Vec<Step>) -> Result<Self> {
        for (k, s) in steps.iter().enumerate() {
            if s.vertex >= quiver.vertex_count() {
                return Err(Error::Schema { pointer: format!("/steps/{k}/vertex"), message: "unknown vertex".into() });
            }
            if s.width() == 0 {
                return Err(Error::Schema { pointer: format!("/steps/{k}/a"), message: "width must be positive".into() });
            }
        }
        let indexing = FlagIndexing::new(quiver.vertex_count(), &steps);
        Ok(CurrentSequence { quiver, steps, indexing })
    }

    /// Convenience constructor from `(vertex name, weight parts)` pairs.
    pub fn from_parts(quiver: Quiver, steps: &[(&str, &[i64])]) -> Result<Self> {
        let mut out = Vec::new();
        for (k, (v, w)) in steps.iter().enumerate() {
            let vertex = quiver.vertex_index(v).ok_or_else(|| Error::Schema {
                pointer: format!("/steps/{k}/vertex"),
                message: format!("unknown vertex '{v}'"),
            })?;
            let weight = DominantWeight::new(w.to_vec()).ok_or_else(|| Error::Schema {
                pointer: format!("/steps/{k}/mu"),
                message: "mu must be weakly decreasing".into(),
            })?;
            out.push(Step::new(vertex, weight));
        }
        Self::new(quiver, out)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn indexing(&self) -> &FlagIndexing {
        &self.indexing
    }

    /// `nu^(i)`: total width of the steps at each vertex.
    pub fn dimension_vector(&self) -> Vec<usize> {
        self.indexing.vertex_slots.iter().map(Vec::len).collect()
    }

    /// The widths of the steps at `vertex`, in step order.
    pub fn widths_at(&self, vertex: usize) -> Vec<usize> {
        self.steps.iter().filter(|s| s.vertex == vertex).map(Step::width).collect()
    }

    /// Per-vertex concatenation of the step weights, in step order.
    pub fn concat_weights(&self) -> VertexWeights {
        let mut out = vec![Vec::new(); self.quiver.vertex_count()];
        for s in &self.steps {
            out[s.vertex].extend_from_slice(s.weight.parts());
        }
        VertexWeights(out)
    }

    /// Whether every concatenated weight is weakly decreasing.
    pub fn is_ia_dominant(&self) -> bool {
        self.concat_weights().is_dominant()
    }

    pub fn has_partition_weights(&self) -> bool {
        self.steps.iter().all(|s| s.weight.is_partition())
    }

    /// Sum of all step weights.
    pub fn total_size(&self) -> i64 {
        self.steps.iter().map(|s| s.weight.size()).sum()
    }

    /// Step weights in the global slot basis.
    pub fn slot_weights(&self) -> Vec<i64> {
        self.steps.iter().flat_map(|s| s.weight.parts().iter().copied()).collect()
    }

    /// The roots: for steps `k < l` and each arrow from `i_k` to `i_l`, every
    /// pair of slots of those steps.
    pub fn roots(&self) -> Vec<Root> {
        let mut out = Vec::new();
        for (k, sk) in self.steps.iter().enumerate() {
            for (l, sl) in self.steps.iter().enumerate().skip(k + 1) {
                for (b, arrow) in self.quiver.arrows().iter().enumerate() {
                    if arrow.tail != sk.vertex || arrow.head != sl.vertex {
                        continue;
                    }
                    for p in 0..sk.width() {
                        for q in 0..sl.width() {
                            out.push(Root {
                                arrow: b,
                                from_step: k,
                                from_offset: p,
                                to_step: l,
                                to_offset: q,
                                from: self.indexing.step_slots[k].start + p,
                                to: self.indexing.step_slots[l].start + q,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Splits into the first `at` steps and the rest.
    pub fn split_at(&self, at: usize) -> (CurrentSequence, CurrentSequence) {
        let first = Self::new(self.quiver.clone(), self.steps[..at].to_vec()).unwrap();
        let second = Self::new(self.quiver.clone(), self.steps[at..].to_vec()).unwrap();
        (first, second)
    }

    /// The same steps with different weights.
    pub fn with_weights(&self, weights: Vec<DominantWeight>) -> Result<Self> {
        if weights.len() != self.steps.len() || weights.iter().zip(&self.steps).any(|(w, s)| w.rank() != s.width()) {
            return Err(Error::DimensionMismatch("weights do not match step widths".into()));
        }
        let steps = self.steps.iter().zip(weights).map(|(s, w)| Step::new(s.vertex, w)).collect();
        Self::new(self.quiver.clone(), steps)
    }

    /// Checks that `w` has one vector of length `nu^(i)` per vertex.
    pub fn check_shape(&self, w: &VertexWeights) -> Result<()> {
        let dims = self.dimension_vector();
        if w.0.len() != dims.len() || w.0.iter().zip(&dims).any(|(v, &n)| v.len() != n) {
            return Err(Error::DimensionMismatch(format!(
                "expected lengths {dims:?}, got {:?}",
                w.0.iter().map(Vec::len).collect::<Vec<_>>()
            )));
        }
        Ok(())
    }

    /// Whether `lambda - mu` is a non-negative integer combination of root
    /// vectors and of `e_s - e_s'` for slots `s` before `s'` at one vertex.
    ///
    /// Every generator moves one unit forward along the slot order, so this is
    /// an uncapacitated flow feasibility question, decided by max-flow.
    pub fn dominates(&self, lambda: &VertexWeights, mu: &VertexWeights) -> Result<bool> {
        self.check_shape(lambda)?;
        self.check_shape(mu)?;
        let ix = &self.indexing;
        let n = ix.slot_count();
        let l = lambda.to_slots(ix);
        let m = mu.to_slots(ix);
        let d: Vec<i64> = l.iter().zip(&m).map(|(a, b)| a - b).collect();
        if d.iter().sum::<i64>() != 0 {
            return Ok(false);
        }
        let mut edges = vec![vec![false; n]; n];
        for r in self.roots() {
            edges[r.from][r.to] = true;
        }
        for slots in &ix.vertex_slots {
            for (a, &s) in slots.iter().enumerate() {
                for &t in &slots[a + 1..] {
                    edges[s][t] = true;
                }
            }
        }
        Ok(flow_feasible(&d, &edges))
    }
}

/// Whether supplies `d` (positive = excess) can be routed along `edges`
/// with unbounded capacity to cover the demands.
fn flow_feasible(d: &[i64], edges: &[Vec<bool>]) -> bool {
    let n = d.len();
    let (src, sink) = (n, n + 1);
    let inf = d.iter().map(|x| x.abs()).sum::<i64>() + 1;
    let mut cap = vec![vec![0i64; n + 2]; n + 2];
    for i in 0..n {
        for j in 0..n {
            if edges[i][j] {
                cap[i][j] = inf;
            }
        }
        if d[i] > 0 {
            cap[src][i] = d[i];
        } else if d[i] < 0 {
            cap[i][sink] = -d[i];
        }
    }
    let need: i64 = d.iter().filter(|&&x| x > 0).sum();
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; n + 2];
        prev[src] = src;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n + 2 {
                if prev[v] == usize::MAX && cap[u][v] > 0 {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        if prev[sink] == usize::MAX {
            break;
        }
        let mut push = i64::MAX;
        let mut v = sink;
        while v != src {
            push = push.min(cap[prev[v]][v]);
            v = prev[v];
        }
        let mut v = sink;
        while v != src {
            cap[prev[v]][v] -= push;
            cap[v][prev[v]] += push;
            v = prev[v];
        }
        flow += push;
    }
    flow == need
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_and_arrow_data() -> CurrentSequence {
        let q = Quiver::new(
            vec!["0".into(), "1".into()],
            vec![("t_00".into(), "0".into(), "0".into()), ("t_01".into(), "0".into(), "1".into())],
        )
        .unwrap();
        CurrentSequence::from_parts(q, &[("0", &[0]), ("0", &[0]), ("1", &[0]), ("0", &[0]), ("1", &[0, 0])]).unwrap()
    }

    #[test]
    fn dimensions_and_roots() {
        let cs = loop_and_arrow_data();
        assert_eq!(cs.dimension_vector(), vec![3, 3]);
        assert_eq!(cs.widths_at(1), vec![1, 2]);
        assert_eq!(cs.roots().len(), 11);

        let empty = CurrentSequence::new(Quiver::cycle(2), vec![]).unwrap();
        assert_eq!(empty.dimension_vector(), vec![0, 0]);

        let jordan = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[0]), ("0", &[0]), ("0", &[0])]).unwrap();
        assert_eq!(jordan.roots().len(), 3);
        let single = CurrentSequence::from_parts(Quiver::cycle(2), &[("0", &[0, 0, 0, 0])]).unwrap();
        assert_eq!(single.dimension_vector(), vec![4, 0]);
        assert!(single.roots().is_empty());
    }

    #[test]
    fn concatenation_and_dominance_flag() {
        let q = Quiver::new(
            vec!["0".into(), "1".into()],
            vec![("t_00".into(), "0".into(), "0".into()), ("t_01".into(), "0".into(), "1".into())],
        )
        .unwrap();
        let cs = CurrentSequence::from_parts(q, &[("0", &[3]), ("0", &[2]), ("1", &[4]), ("0", &[4]), ("1", &[2, 1])]).unwrap();
        assert_eq!(cs.concat_weights(), VertexWeights(vec![vec![3, 2, 4], vec![4, 2, 1]]));
        assert!(!cs.is_ia_dominant());

        let ex41 = CurrentSequence::from_parts(
            Quiver::cycle(2),
            &[("0", &[4, 2]), ("1", &[0, 0]), ("0", &[2, 2]), ("1", &[0, 0]), ("0", &[2, 1, 1])],
        )
        .unwrap();
        assert_eq!(ex41.concat_weights(), VertexWeights(vec![vec![4, 2, 2, 2, 2, 1, 1], vec![0, 0, 0, 0]]));
        assert!(ex41.is_ia_dominant());
    }

    #[test]
    fn slot_maps_are_inverse() {
        let cs = loop_and_arrow_data();
        let ix = cs.indexing();
        for (v, slots) in ix.vertex_slots.iter().enumerate() {
            for (p, &s) in slots.iter().enumerate() {
                assert_eq!((ix.slot_vertex[s], ix.slot_position[s]), (v, p));
                assert!(ix.step_slots[ix.slot_step[s]].contains(&s));
            }
        }
    }

    #[test]
    fn dominance_examples() {
        let cs = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[0]), ("0", &[0])]).unwrap();
        let w = |v: &[i64]| VertexWeights(vec![v.to_vec()]);
        assert!(cs.dominates(&w(&[1, 1]), &w(&[1, 1])).unwrap());
        assert!(cs.dominates(&w(&[2, 0]), &w(&[1, 1])).unwrap());
        assert!(!cs.dominates(&w(&[1, 1]), &w(&[2, 0])).unwrap());
        assert!(cs.dominates(&w(&[1, 0]), &w(&[1])).is_err());
    }

    #[test]
    fn roots_need_arrows_in_step_direction() {
        // Arrow 0 -> 1 only produces roots when a 0-step precedes a 1-step.
        let cs = CurrentSequence::from_parts(Quiver::path(2), &[("1", &[0]), ("0", &[0])]).unwrap();
        assert!(cs.roots().is_empty());
        let w = |a: i64, b: i64| VertexWeights(vec![vec![a], vec![b]]);
        assert!(!cs.dominates(&w(1, -1), &w(0, 0)).unwrap());
        let cs = CurrentSequence::from_parts(Quiver::path(2), &[("0", &[0]), ("1", &[0])]).unwrap();
        assert!(cs.dominates(&w(1, -1), &w(0, 0)).unwrap());
    }
}

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use crate::algebra::Partition;

thread_local! {
    static MEMO: RefCell<HashMap<(Partition, Partition, Partition), u64>> = RefCell::new(HashMap::new());
}

/// The Littlewood-Richardson coefficient `c^nu_{lambda,mu}`, counted as LR
/// fillings of `nu / lambda` with content `mu`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if lambda.size() + mu.size() != nu.size() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    // Fill the skew shape over the larger factor: fewer letters to place.
    let (outer_inner, content) = if lambda.size() >= mu.size() { (lambda, mu) } else { (mu, lambda) };
    if content.is_empty() {
        return 1;
    }
    let key = (outer_inner.clone(), content.clone(), nu.clone());
    if let Some(c) = MEMO.with(|m| m.borrow().get(&key).copied()) {
        return c;
    }
    let c = count_fillings(outer_inner.parts(), content.parts(), nu.parts());
    MEMO.with(|m| m.borrow_mut().insert(key, c));
    c
}

struct Filler<'a> {
    inner: &'a [u32],
    content: &'a [u32],
    outer: &'a [u32],
    used: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

fn count_fillings(inner: &[u32], content: &[u32], outer: &[u32]) -> u64 {
    let mut f = Filler { inner, content, outer, used: vec![0; content.len()], rows: vec![Vec::new(); outer.len()] };
    f.fill(0, 0)
}

impl Filler<'_> {
    fn inner(&self, r: usize) -> usize {
        self.inner.get(r).copied().unwrap_or(0) as usize
    }

    // Places the cell at column `lo(r) + c_off` of row `r`.
    fn fill(&mut self, r: usize, c_off: usize) -> u64 {
        if r == self.outer.len() {
            return 1;
        }
        let lo = self.inner(r);
        let hi = self.outer[r] as usize;
        if lo + c_off == hi {
            // Row complete: the letters of this row were checked against the
            // lattice condition as they were placed.
            return self.fill(r + 1, 0);
        }
        let col = lo + c_off;
        let mut min = self.rows[r].last().copied().unwrap_or(1);
        if r > 0 && col >= self.inner(r - 1) && col < self.outer[r - 1] as usize {
            let above = self.rows[r - 1][col - self.inner(r - 1)];
            min = min.max(above + 1);
        }
        // In an LR filling the entries of row r are at most r + 1.
        let max = (self.content.len() as u32).min(r as u32 + 1);
        let mut total = 0;
        for v in min..=max {
            let j = (v - 1) as usize;
            if self.used[j] == self.content[j] {
                continue;
            }
            // Reverse reading word: this row is read right to left, so
            // letter v must not overtake v-1 counted before this row.
            if j > 0 {
                let in_row_prev = self.rows[r].iter().filter(|&&x| x == v - 1).count() as u32;
                if self.used[j] + 1 > self.used[j - 1] - in_row_prev {
                    continue;
                }
            }
            self.used[j] += 1;
            self.rows[r].push(v);
            total += self.fill(r, c_off + 1);
            self.rows[r].pop();
            self.used[j] -= 1;
        }
        total
    }
}

/// Schur expansion of `s_lambda * s_mu`, dropping partitions with more than
/// `max_rows` rows.
pub fn lr_expand(lambda: &Partition, mu: &Partition, max_rows: usize) -> BTreeMap<Partition, u64> {
    let n = lambda.size() + mu.size();
    let rows = (lambda.length() + mu.length()).min(max_rows);
    let mut out = BTreeMap::new();
    if lambda.length() > rows || mu.length() > rows {
        return out;
    }
    let mut cur = Vec::new();
    candidates(lambda, mu.part(0), n, rows, 0, u32::MAX, &mut cur, &mut |nu| {
        let c = lr_coefficient(lambda, mu, nu);
        if c > 0 {
            out.insert(nu.clone(), c);
        }
    });
    out
}

// Partitions nu of size n containing lambda, with lambda_i <= nu_i <= lambda_i + width.
#[allow(clippy::too_many_arguments)]
fn candidates(
    lambda: &Partition,
    width: u32,
    n: u32,
    rows: usize,
    i: usize,
    max: u32,
    cur: &mut Vec<u32>,
    emit: &mut impl FnMut(&Partition),
) {
    let used: u32 = cur.iter().sum();
    if used == n {
        if i >= lambda.length() {
            emit(&Partition::new(cur.clone()).unwrap());
        }
        return;
    }
    if i >= rows {
        return;
    }
    let lo = lambda.part(i);
    let hi = (lo + width).min(max).min(n - used);
    if lo > hi {
        return;
    }
    for p in (lo.max(1)..=hi).rev() {
        cur.push(p);
        candidates(lambda, width, n, rows, i + 1, p, cur, emit);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[2]), &p(&[2, 2])), 1);
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1, 1]), &p(&[2, 2])), 0);
        assert_eq!(lr_coefficient(&p(&[]), &p(&[3, 1]), &p(&[3, 1])), 1);
        assert_eq!(lr_coefficient(&p(&[3, 2, 1]), &p(&[2, 1]), &p(&[4, 3, 2])), 2);
    }

    #[test]
    fn expansion_of_21_squared() {
        let e = lr_expand(&p(&[2, 1]), &p(&[2, 1]), usize::MAX);
        let expected: BTreeMap<Partition, u64> = [
            (p(&[4, 2]), 1),
            (p(&[4, 1, 1]), 1),
            (p(&[3, 3]), 1),
            (p(&[3, 2, 1]), 2),
            (p(&[3, 1, 1, 1]), 1),
            (p(&[2, 2, 2]), 1),
            (p(&[2, 2, 1, 1]), 1),
        ]
        .into();
        assert_eq!(e, expected);
        assert_eq!(lr_expand(&p(&[2, 1]), &p(&[2, 1]), 2).len(), 2);
    }
}

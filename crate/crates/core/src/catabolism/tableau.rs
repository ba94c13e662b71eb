use std::fmt;

use crate::algebra::Partition;

/// A letter `(step, position)`, both counted from zero; ordered by step,
/// then position.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub step: u16,
    pub pos: u16,
}

impl Letter {
    pub fn new(step: usize, pos: usize) -> Self {
        Letter { step: step as u16, pos: pos as u16 }
    }
}

/// Printed one-based as `step.position`.
impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.step + 1, self.pos + 1)
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A straight tableau stored as rows of letters.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Tableau {
    rows: Vec<Vec<Letter>>,
}

impl Tableau {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds from rows, dropping empty trailing rows.
    pub fn from_rows(mut rows: Vec<Vec<Letter>>) -> Self {
        while rows.last().is_some_and(Vec::is_empty) {
            rows.pop();
        }
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len() as u32).collect()).expect("rows of a straight tableau")
    }

    /// Rows weakly increase, columns strictly increase, row lengths weakly
    /// decrease.
    pub fn is_semistandard(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].len() >= w[1].len() && w[1].iter().zip(&w[0]).all(|(b, a)| a < b))
            && self.rows.iter().all(|r| r.windows(2).all(|p| p[0] <= p[1]))
    }

    /// Row reading word: rows from bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<Letter> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Schensted row insertion of one letter.
    pub fn row_insert(&mut self, mut x: Letter) {
        for row in self.rows.iter_mut() {
            match row.iter().position(|&y| y > x) {
                Some(p) => x = std::mem::replace(&mut row[p], x),
                None => {
                    row.push(x);
                    return;
                }
            }
        }
        self.rows.push(vec![x]);
    }

    /// The insertion tableau of a word.
    pub fn from_word(word: &[Letter]) -> Self {
        let mut t = Tableau::empty();
        for &x in word {
            t.row_insert(x);
        }
        t
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(Letter::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// The tableau of shape `mu` whose row `r` is filled with letter `(step, r)`.
pub fn yamanouchi(mu: &Partition, step: usize) -> Tableau {
    Tableau::from_rows(
        mu.parts().iter().enumerate().map(|(r, &n)| vec![Letter::new(step, r); n as usize]).collect(),
    )
}

/// Which side of the plactic product the moved letters land on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InsertionOrder {
    /// Result is Knuth equivalent to `word(target) word(moved)`: the moved
    /// letters are row inserted into the target one by one.
    TargetFirst,
    /// Result is Knuth equivalent to `word(moved) word(target)`.
    MovedFirst,
}

/// Combines the moved letters with the target tableau as a plactic product.
/// `moved_word` is the reading word of the moved (possibly skew) piece.
pub fn column_insert(target: &Tableau, moved_word: &[Letter], order: InsertionOrder) -> Tableau {
    match order {
        InsertionOrder::TargetFirst => {
            let mut t = target.clone();
            for &x in moved_word {
                t.row_insert(x);
            }
            t
        }
        InsertionOrder::MovedFirst => {
            let mut word = moved_word.to_vec();
            word.extend(target.reading_word());
            Tableau::from_word(&word)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(step: usize, pos: usize) -> Letter {
        Letter::new(step, pos)
    }

    #[test]
    fn yamanouchi_rows() {
        let y = yamanouchi(&Partition::new(vec![4, 2]).unwrap(), 0);
        assert_eq!(y.rows(), &[vec![l(0, 0); 4], vec![l(0, 1); 2]]);
        assert!(yamanouchi(&Partition::empty(), 3).is_empty());
        let y = yamanouchi(&Partition::new(vec![2, 1, 1]).unwrap(), 4);
        assert_eq!(y.to_string(), "5.1 5.1\n5.2\n5.3");
    }

    #[test]
    fn insertion_identities() {
        let t = Tableau::from_rows(vec![vec![l(1, 0), l(1, 0), l(2, 0)], vec![l(1, 1)]]);
        for order in [InsertionOrder::TargetFirst, InsertionOrder::MovedFirst] {
            assert_eq!(column_insert(&t, &[], order), t);
            let moved = [l(3, 0), l(1, 1), l(2, 0)];
            assert_eq!(column_insert(&Tableau::empty(), &moved, order), Tableau::from_word(&moved));
        }
        assert!(Tableau::from_word(&[l(2, 0), l(1, 0), l(1, 1), l(0, 0)]).is_semistandard());
    }

    #[test]
    fn reading_word_rebuilds_the_tableau() {
        let t = Tableau::from_rows(vec![vec![l(0, 0), l(0, 0), l(1, 0)], vec![l(0, 1), l(1, 1)], vec![l(2, 0)]]);
        assert!(t.is_semistandard());
        assert_eq!(Tableau::from_word(&t.reading_word()), t);
    }
}

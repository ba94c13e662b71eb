//! Cross-checking the engines on one instance, and shrinking failures.

use quiver_hl::algebra::{DominantWeight, LaurentPoly, Partition};
use quiver_hl::catabolism::{catabolism_table, DEFAULT_ORDER};
use quiver_hl::hl::{hl_function, partition_tuples, KostantOracle};
use quiver_hl::quiver::{CurrentSequence, Step, VertexWeights};
use quiver_hl::Error;

use crate::format::shape_key;

#[derive(Debug)]
pub enum Finding {
    /// Operator engine and Kostant oracle differ.
    Disagreement { lambda: Vec<Partition>, operator: LaurentPoly, kostant: LaurentPoly },
    /// Catabolism differs from the operator engine on a dominant instance.
    CatabolismMismatch { lambda: Vec<Partition>, operator: LaurentPoly, catabolism: LaurentPoly },
    /// A negative coefficient on a dominant instance.
    Negative { lambda: Vec<Partition>, operator: LaurentPoly },
}

impl Finding {
    pub fn is_disagreement(&self) -> bool {
        matches!(self, Finding::Disagreement { .. })
    }

    pub fn describe(&self) -> String {
        match self {
            Finding::Disagreement { lambda, operator, kostant } => format!(
                "engines disagree at {}\n  operator: {operator}\n  kostant:  {kostant}",
                shape_key(lambda)
            ),
            Finding::CatabolismMismatch { lambda, operator, catabolism } => format!(
                "catabolism differs from the operator engine at {}\n  operator:   {operator}\n  catabolism: {catabolism}",
                shape_key(lambda)
            ),
            Finding::Negative { lambda, operator } => {
                format!("negative coefficient on a dominant instance at {}\n  operator: {operator}", shape_key(lambda))
            }
        }
    }
}

pub struct Report {
    pub shapes: Vec<Vec<Partition>>,
    pub with_catabolism: bool,
    pub finding: Option<Finding>,
}

pub fn nonbranching(cs: &CurrentSequence) -> bool {
    let q = cs.quiver();
    (0..q.vertex_count()).all(|v| q.out_arrows(v).len() <= 1)
}

/// Every shape tuple of the right size within the row bounds, in descending
/// lexicographic order (vertex by vertex, part by part).
pub fn shapes(cs: &CurrentSequence) -> Vec<Vec<Partition>> {
    let n = cs.total_size();
    if n < 0 {
        return Vec::new();
    }
    let mut all = partition_tuples(n as u32, &cs.dimension_vector());
    all.sort_by(|a, b| b.cmp(a));
    all
}

/// Operator against Kostant on every shape, plus catabolism and positivity
/// when the instance is dominant (catabolism only without branching).
/// Stops at the first finding; disagreements are looked for first.
pub fn check(cs: &CurrentSequence) -> Result<Report, Error> {
    let dims = cs.dimension_vector();
    let hl = hl_function(cs)?;
    let oracle = KostantOracle::new(cs);
    let dominant = cs.is_ia_dominant();
    let with_catabolism = dominant && nonbranching(cs);
    let shapes = shapes(cs);
    let mut report = Report { shapes: shapes.clone(), with_catabolism, finding: None };

    for lambda in &shapes {
        let weights = VertexWeights::from_partitions(lambda, &dims).expect("row bounds");
        let operator = hl.coefficient(lambda);
        let kostant = oracle.coefficient(&weights)?;
        if operator != kostant {
            report.finding = Some(Finding::Disagreement { lambda: lambda.clone(), operator, kostant });
            return Ok(report);
        }
    }
    if !dominant {
        return Ok(report);
    }
    for lambda in &shapes {
        let operator = hl.coefficient(lambda);
        if !operator.is_nonnegative() {
            report.finding = Some(Finding::Negative { lambda: lambda.clone(), operator });
            return Ok(report);
        }
    }
    if with_catabolism {
        let table = catabolism_table(cs, DEFAULT_ORDER)?;
        for lambda in &shapes {
            let operator = hl.coefficient(lambda);
            let catabolism = table.get(lambda).cloned().unwrap_or_else(LaurentPoly::zero);
            if operator != catabolism {
                report.finding = Some(Finding::CatabolismMismatch { lambda: lambda.clone(), operator, catabolism });
                return Ok(report);
            }
        }
    }
    Ok(report)
}

fn candidates(cs: &CurrentSequence) -> Vec<CurrentSequence> {
    let mut out = Vec::new();
    let steps = cs.steps();
    for j in 0..steps.len() {
        let mut fewer = steps.to_vec();
        fewer.remove(j);
        out.extend(CurrentSequence::new(cs.quiver().clone(), fewer).ok());
    }
    for j in 0..steps.len() {
        let parts = steps[j].weight.parts();
        for p in 0..parts.len() {
            if parts[p] == 0 {
                continue;
            }
            let mut smaller = parts.to_vec();
            smaller[p] -= parts[p].signum();
            if let Some(w) = DominantWeight::new(smaller) {
                let mut next = steps.to_vec();
                next[j] = Step::new(steps[j].vertex, w);
                out.extend(CurrentSequence::new(cs.quiver().clone(), next).ok());
            }
        }
    }
    out
}

/// Greedily drops steps and moves weight entries toward zero while the
/// same kind of finding persists.
pub fn shrink(cs: &CurrentSequence, disagreement: bool) -> (CurrentSequence, Finding) {
    shrink_by(cs, |c| match check(c) {
        Ok(Report { finding: Some(f), .. }) if f.is_disagreement() == disagreement => Some(f),
        _ => None,
    })
}

fn shrink_by<T>(cs: &CurrentSequence, fails: impl Fn(&CurrentSequence) -> Option<T>) -> (CurrentSequence, T) {
    let mut current = cs.clone();
    let mut found = fails(&current).expect("the instance fails");
    'outer: loop {
        for next in candidates(&current) {
            if let Some(f) = fails(&next) {
                current = next;
                found = f;
                continue 'outer;
            }
        }
        return (current, found);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use quiver_hl::quiver::Quiver;

    #[test]
    fn shrinks_to_a_minimal_failing_instance() {
        let cs = CurrentSequence::from_parts(Quiver::cycle(2), &[("0", &[3, 1]), ("1", &[2]), ("0", &[4, 0, 0])]).unwrap();
        let (small, size) = shrink_by(&cs, |c| (c.total_size() >= 3).then(|| c.total_size()));
        assert_eq!(size, 3);
        assert_eq!(small.len(), 1);
    }

    #[test]
    fn agreeing_instance_has_no_finding() {
        let cs = CurrentSequence::from_parts(Quiver::jordan(), &[("0", &[2]), ("0", &[1]), ("0", &[1])]).unwrap();
        let report = check(&cs).unwrap();
        assert!(report.finding.is_none());
        assert!(report.with_catabolism);
        assert_eq!(report.shapes.len(), 4);
    }
}

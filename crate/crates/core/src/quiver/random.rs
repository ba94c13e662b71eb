use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{DominantWeight, Partition};

use super::{CurrentSequence, Quiver, Step};

/// Size limits for [`random_sequence`].
#[derive(Clone, Copy, Debug)]
pub struct RandomLimits {
    /// Bound on the sum of the step widths.
    pub total_width: usize,
    /// Bound on the width of one step.
    pub step_width: usize,
    /// Bound on `|mu(k)|` for each step.
    pub step_size: u32,
}

impl Default for RandomLimits {
    fn default() -> Self {
        RandomLimits { total_width: 6, step_width: 3, step_size: 3 }
    }
}

/// A random current sequence with partition weights: widths are drawn until
/// the total width budget is used up or a coin flip stops early.
pub fn random_sequence<R: Rng>(rng: &mut R, quiver: &Quiver, limits: RandomLimits) -> CurrentSequence {
    let mut steps = Vec::new();
    let mut left = limits.total_width;
    while left > 0 {
        let a = rng.gen_range(1..=left.min(limits.step_width));
        let n = rng.gen_range(0..=limits.step_size);
        let choices = Partition::bounded(n, a, n);
        let mu = choices.choose(rng).cloned().unwrap_or_default();
        let vertex = rng.gen_range(0..quiver.vertex_count());
        steps.push(Step::new(vertex, DominantWeight::from_partition(&mu, a).expect("bounded rows")));
        left -= a;
        if rng.gen_bool(0.3) {
            break;
        }
    }
    CurrentSequence::new(quiver.clone(), steps).expect("vertices in range")
}

/// Like [`random_sequence`], redrawn until the concatenated weight at every
/// vertex is dominant (at most `attempts` draws).
pub fn random_dominant_sequence<R: Rng>(
    rng: &mut R,
    quiver: &Quiver,
    limits: RandomLimits,
    attempts: usize,
) -> Option<CurrentSequence> {
    (0..attempts).map(|_| random_sequence(rng, quiver, limits)).find(CurrentSequence::is_ia_dominant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn respects_limits_and_is_reproducible() {
        let q = Quiver::cycle(3);
        let limits = RandomLimits::default();
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let cs = random_sequence(&mut a, &q, limits);
            assert_eq!(cs, random_sequence(&mut b, &q, limits));
            assert!(cs.steps().iter().map(Step::width).sum::<usize>() <= 6);
            assert!(cs.steps().iter().all(|s| s.weight.is_partition() && s.weight.size() <= 3));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(random_dominant_sequence(&mut rng, &q, limits, 100).unwrap().is_ia_dominant());
    }
}

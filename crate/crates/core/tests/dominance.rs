use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quiver_hl::quiver::{random_sequence, CurrentSequence, Quiver, RandomLimits, VertexWeights};

/// Moves one unit at a time along root and within-vertex edges until the
/// difference is used up. Exhaustive over reachable states.
fn dominates_by_search(cs: &CurrentSequence, lambda: &VertexWeights, mu: &VertexWeights) -> bool {
    let ix = cs.indexing();
    let d: Vec<i64> = lambda.to_slots(ix).iter().zip(mu.to_slots(ix)).map(|(a, b)| a - b).collect();
    let mut edges: Vec<(usize, usize)> = cs.roots().iter().map(|r| (r.from, r.to)).collect();
    for slots in &ix.vertex_slots {
        for (a, &s) in slots.iter().enumerate() {
            edges.extend(slots[a + 1..].iter().map(|&t| (s, t)));
        }
    }
    let mut seen = HashSet::new();
    let mut stack = vec![d];
    while let Some(r) = stack.pop() {
        if r.iter().all(|&x| x == 0) {
            return true;
        }
        for &(s, t) in &edges {
            if r[s] > 0 {
                let mut next = r.clone();
                next[s] -= 1;
                next[t] += 1;
                if seen.insert(next.clone()) {
                    stack.push(next);
                }
            }
        }
    }
    false
}

fn random_weights<R: Rng>(rng: &mut R, dims: &[usize], total: i64) -> VertexWeights {
    let mut w: Vec<Vec<i64>> = dims.iter().map(|&n| vec![0; n]).collect();
    let slots: usize = dims.iter().sum();
    if slots == 0 {
        return VertexWeights(w);
    }
    for _ in 0..total {
        let mut k = rng.gen_range(0..slots);
        for v in w.iter_mut() {
            if k < v.len() {
                v[k] += 1;
                break;
            }
            k -= v.len();
        }
    }
    VertexWeights(w)
}

fn quiver(n: usize) -> Quiver {
    [Quiver::jordan(), Quiver::path(2), Quiver::cycle(2), Quiver::cycle(3)][n].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn max_flow_matches_search(seed in any::<u64>(), which in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let limits = RandomLimits { total_width: 4, step_width: 2, step_size: 2 };
        let cs = random_sequence(&mut rng, &quiver(which), limits);
        let dims = cs.dimension_vector();
        let total = rng.gen_range(0..4);
        let lambda = random_weights(&mut rng, &dims, total);
        let mu = random_weights(&mut rng, &dims, total);
        prop_assert_eq!(cs.dominates(&lambda, &mu).unwrap(), dominates_by_search(&cs, &lambda, &mu));
    }

    #[test]
    fn dominance_is_a_preorder(seed in any::<u64>(), which in 0usize..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let limits = RandomLimits { total_width: 4, step_width: 2, step_size: 2 };
        let cs = random_sequence(&mut rng, &quiver(which), limits);
        let dims = cs.dimension_vector();
        let total = rng.gen_range(0..4);
        let [a, b, c] = [0; 3].map(|_| random_weights(&mut rng, &dims, total));
        prop_assert!(cs.dominates(&a, &a).unwrap());
        if cs.dominates(&a, &b).unwrap() && cs.dominates(&b, &c).unwrap() {
            prop_assert!(cs.dominates(&a, &c).unwrap());
        }
    }
}

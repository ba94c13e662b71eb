use quiver_hl::algebra::{LaurentPoly, Partition};
use quiver_hl::hl::{collapse_cycle, hl_function, KostantOracle};
use quiver_hl::quiver::{CurrentSequence, Quiver, VertexWeights};

fn two_cycle_data() -> CurrentSequence {
    CurrentSequence::from_parts(
        Quiver::cycle(2),
        &[("0", &[4, 2]), ("1", &[0, 0]), ("0", &[2, 2]), ("1", &[0, 0]), ("0", &[2, 1, 1])],
    )
    .unwrap()
}

#[test]
fn two_cycle_on_both_engines() {
    let cs = two_cycle_data();
    let lambda = vec![Partition::new(vec![6, 3, 3, 1, 1]).unwrap(), Partition::empty()];
    let expected: LaurentPoly = "2*t_01^6*t_10^6 + 5*t_01^5*t_10^5 + t_01^4*t_10^4".parse().unwrap();

    let start = std::time::Instant::now();
    let h = hl_function(&cs).unwrap();
    let op = h.coefficient(&lambda);
    eprintln!("operator: {:?}", start.elapsed());
    assert_eq!(op, expected);

    let start = std::time::Instant::now();
    let w = VertexWeights::from_partitions(&lambda, &cs.dimension_vector()).unwrap();
    let k = KostantOracle::new(&cs).coefficient(&w).unwrap();
    eprintln!("kostant: {:?}", start.elapsed());
    assert_eq!(k, expected);
    assert_eq!(k.substitute(&collapse_cycle(cs.quiver()).unwrap()).unwrap().to_string(), "2*t^6 + 5*t^5 + t^4");
}

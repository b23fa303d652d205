mod common;

use common::*;
use evoalg::catalog;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn exhaustive_small_supports() {
    for n in 1..=3 {
        for e in all_algebras(n, &[0, 1]) {
            agrees_with_oracle(&e).unwrap();
        }
    }
    for n in 1..=2 {
        for e in all_algebras(n, &[-1, 0, 1, 2]) {
            agrees_with_oracle(&e).unwrap();
        }
    }
}

#[test]
fn sampled_dimension_four() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..300 {
        let rows: Vec<Vec<i64>> = (0..4)
            .map(|_| (0..4).map(|_| if rng.gen_bool(0.6) { 0 } else { rng.gen_range(-2..=2) }).collect())
            .collect();
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        agrees_with_oracle(&alg(&refs)).unwrap();
    }
}

#[test]
fn catalog_entries_up_to_dimension_four() {
    for spec in catalog::families().iter().filter(|f| f.dim <= 4) {
        for p in catalog::default_samples(spec, 42) {
            agrees_with_oracle(&spec.build(&p).unwrap()).unwrap();
        }
    }
}

#[test]
fn oracle_recovers_known_dimensions() {
    let n22 = alg(&[&[0, 1], &[0, 0]]);
    assert_eq!(oracle_kernel(&oracle_equations(&structure_rows(&n22)), 4).len(), 2);
    let zero = alg(&[&[0, 0], &[0, 0]]);
    assert_eq!(oracle_kernel(&oracle_equations(&structure_rows(&zero)), 4).len(), 4);
    let idem = alg(&[&[1, 0], &[0, 1]]);
    assert_eq!(oracle_kernel(&oracle_equations(&structure_rows(&idem)), 4).len(), 0);
}

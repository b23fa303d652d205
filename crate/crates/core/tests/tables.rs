mod common;

use common::*;
use evoalg::catalog::{build, default_samples, family};
use evoalg::derivation::{bracket, derivation_space, expected_basis_ann1};
use evoalg::{Matrix, Scalar, Subspace};

fn check_shape(name: &str, shape: &Shape, pivots_too: bool) {
    for p in default_samples(family(name).unwrap(), 42) {
        let e = build(name, &p).unwrap();
        let space = derivation_space(&e);
        assert_eq!(space, shape.span(), "{name}{p:?}");
        if pivots_too {
            assert_eq!(space.pivots(), shape.param_positions().as_slice(), "{name}");
        }
    }
}

#[test]
fn n46_relations() {
    check_shape("N_{4,6}", &shape_n46(), true);
    // d(e3) = (2 d11 - d22) e2 + d22 e3 - d42 e4, read off a concrete member
    let e = build("N_{4,6}", &[]).unwrap();
    let space = derivation_space(&e);
    let (d11, d22, d41, d42) = (q(3), q(-5), q(7), q(2));
    let s = shape_n46();
    let d = [(d11.clone(), (1, 1)), (d22.clone(), (2, 2)), (d41, (4, 1)), (d42.clone(), (4, 2))]
        .iter()
        .fold(Matrix::zeros(4, 4), |acc, (c, p)| &acc + &s.generator(*p).scale(c));
    assert!(space.contains_matrix(&d));
    assert_eq!(d.column(2), vec![q(0), &q(2) * &d11 - &d22, d22, -d42]);
}

#[test]
fn n59_relations() {
    check_shape("N_{5,9}", &shape_n59(), true);
}

#[test]
fn n625_relations() {
    check_shape("N_{6,25}", &shape_n625(), true);
}

fn twisted_block(s: Shape, d11: (usize, usize), d22: Option<(usize, usize)>) -> Shape {
    // d(e2) = d22 e2 + (2 d11 - d22) e3, d(e3) = (2 d11 - d22) e2 + d22 e3
    let s = s.term(1, 1, d11, q(1)).term(3, 2, d11, q(2)).term(2, 3, d11, q(2));
    match d22 {
        Some(d22) => s
            .term(2, 2, d22, q(1))
            .term(3, 3, d22, q(1))
            .term(3, 2, d22, q(-1))
            .term(2, 3, d22, q(-1)),
        None => s
            .term(2, 2, d11, q(1))
            .term(3, 3, d11, q(1))
            .term(3, 2, d11, q(-1))
            .term(2, 3, d11, q(-1)),
    }
}

#[test]
fn n512_relations() {
    let (d11, d51, d52, d54) = ((1, 1), (5, 1), (5, 2), (5, 4));
    let s = twisted_block(Shape::new(5, &[d11, d51, d52, d54]), d11, None)
        .term(5, 1, d51, q(1))
        .term(5, 2, d52, q(1))
        .term(5, 3, d52, q(-1))
        .term(4, 4, d11, q(1))
        .term(5, 4, d54, q(1))
        .term(5, 5, d11, q(2));
    check_shape("N_{5,12}", &s, true);
}

#[test]
fn n618_relations() {
    let d11 = (1, 1);
    let mut params = vec![d11];
    for i in 1..=4 {
        params.push((5, i));
        params.push((6, i));
    }
    let mut s = Shape::new(6, &params);
    for i in 1..=4 {
        s = s.term(i, i, d11, q(1)).term(5, i, (5, i), q(1)).term(6, i, (6, i), q(1));
    }
    check_shape("N_{6,18}", &s.term(5, 5, d11, q(2)).term(6, 6, d11, q(2)), true);
}

#[test]
fn n623_relations() {
    let (d11, d61, d62, d64, d65) = ((1, 1), (6, 1), (6, 2), (6, 4), (6, 5));
    let s = twisted_block(Shape::new(6, &[d11, d61, d62, d64, d65]), d11, None)
        .term(6, 1, d61, q(1))
        .term(6, 2, d62, q(1))
        .term(6, 3, d62, q(-1))
        .term(4, 4, d11, q(1))
        .term(6, 4, d64, q(1))
        .term(5, 5, d11, q(1))
        .term(6, 5, d65, q(1))
        .term(6, 6, d11, q(2));
    check_shape("N_{6,23}", &s, true);
}

#[test]
fn n624_relations_with_corrected_e1_term() {
    // d(e5) carries -γ d51 along e1 (the entry d15), not along e5
    for p in default_samples(family("N_{6,24}").unwrap(), 42) {
        let gamma = p[2].clone();
        let (d11, d51, d61, d62, d64, d65) = ((1, 1), (5, 1), (6, 1), (6, 2), (6, 4), (6, 5));
        let s = twisted_block(Shape::new(6, &[d11, d51, d61, d62, d64, d65]), d11, None)
            .term(5, 1, d51, q(1))
            .term(6, 1, d61, q(1))
            .term(6, 2, d62, q(1))
            .term(6, 3, d62, q(-1))
            .term(4, 4, d11, q(1))
            .term(6, 4, d64, q(1))
            .term(1, 5, d51, -gamma)
            .term(5, 5, d11, q(1))
            .term(6, 5, d65, q(1))
            .term(6, 6, d11, q(2));
        let e = build("N_{6,24}", &p).unwrap();
        assert_eq!(derivation_space(&e), s.span());
    }
}

#[test]
fn ann1_matches_h_l_g() {
    for name in ["N_{3,3}", "N_{4,5}", "N_{5,8}", "N_{6,16}"] {
        for p in default_samples(family(name).unwrap(), 42) {
            let e = build(name, &p).unwrap();
            let mut alphas: Vec<Scalar> = vec![q(1)];
            alphas.extend(p.iter().cloned());
            let b = expected_basis_ann1(e.dim(), &alphas).unwrap();
            assert_eq!(derivation_space(&e), b.full_span(), "{name}");
        }
    }
}

/// Brackets of the oracle's own kernel, ranked by the oracle's elimination.
fn oracle_derived_dim(e: &evoalg::EvolutionAlgebra) -> usize {
    let n = e.dim();
    let kernel = oracle_kernel(&oracle_equations(&structure_rows(e)), n * n);
    let mats: Vec<Matrix> = kernel
        .iter()
        .map(|v| Matrix::from_flat(n, n, v.clone()).unwrap())
        .collect();
    let mut brackets = Vec::new();
    for a in &mats {
        for b in &mats {
            brackets.push(bracket(a, b).unwrap().into_flat());
        }
    }
    // rank = width - nullity of the transpose system
    let width = brackets.len();
    let transposed: Vec<Vec<Scalar>> = (0..n * n)
        .map(|k| brackets.iter().map(|v| v[k].clone()).collect())
        .collect();
    width - oracle_kernel(&transposed, width).len()
}

#[test]
fn n33_derived_algebra_is_l() {
    // H is one-dimensional when n = 3, so [H, H] = 0 and D' = L
    for p in default_samples(family("N_{3,3}").unwrap(), 42) {
        let e = build("N_{3,3}", &p).unwrap();
        assert_eq!(oracle_derived_dim(&e), 2);
        let b = expected_basis_ann1(3, &[q(1), p[0].clone()]).unwrap();
        let n = 3;
        let basis = derivation_space(&e).basis_matrices(n, n);
        let dprime = evoalg::derivation::derived_subalgebra(n, &basis).unwrap();
        assert_eq!(dprime, b.l);
        assert_ne!(dprime, b.h_plus_l());
    }
    for name in ["N_{4,5}", "N_{5,8}"] {
        let e = build(name, &default_samples(family(name).unwrap(), 42)[0]).unwrap();
        let n = e.dim();
        assert_eq!(oracle_derived_dim(&e), n * (n - 1) / 2);
    }
}

#[test]
fn subspace_of_shape_has_named_dimension() {
    let s: Subspace = shape_n625().span();
    assert_eq!(s.dim(), 8);
    assert_eq!(shape_n46().span().dim(), 4);
    assert_eq!(shape_n59().span().dim(), 7);
}

mod common;

use proptest::prelude::*;
use whittaker::klpoly::{decomposition_matrix_with, BlockParams, KlTable};
use whittaker::par::Exec;
use whittaker::rational::{q, qf};
use whittaker::rootdata::build_algebra;
use whittaker::uea::{
    pbw_reduce, whittaker_space_specialized, whittaker_vectors, ActionModel, Scope, SuperStructure, UeaElement,
    DEFAULT_DEGREE_BOUND,
};
use whittaker::weylgroup::dot_action;
use whittaker::whittaker::{composition_series, WhittakerCharacter, WhittakerParam};
use whittaker::{AlgebraKind, Weight, WeylSubgroup, Q};

#[test]
fn kl_tables_match_r_polynomial_oracle() {
    for g in [WeylSubgroup::type_a(3), WeylSubgroup::type_a(4), WeylSubgroup::type_c(2), WeylSubgroup::type_c(3)] {
        let oracle = common::ROracle::new(&g);
        oracle.agrees_with(&KlTable::new(&g)).unwrap();
        oracle.agrees_with(&KlTable::with_exec(&g, Exec::Sequential)).unwrap();
    }
}

#[test]
fn generic_solver_agrees_with_specialized_space() {
    let gl = AlgebraKind::gl(1, 2);
    let weights: Vec<Weight> = [[0, 0, 0], [1, 0, 0], [0, 3, 0], [2, -2, 1], [-1, 1, 4], [1, 2, 0], [3, 0, -2]]
        .iter()
        .map(|l| Weight::from_ints(l))
        .chain([Weight::new(vec![qf(1, 2), qf(-1, 2), qf(1, 3)]), Weight::new(vec![qf(3, 2), qf(-1, 2), qf(-1, 2)])])
        .collect();
    for l in &weights {
        let m = ActionModel::from_weight(&gl, l, q(2)).unwrap();
        let generic = whittaker_vectors(&m, Scope::Full, DEFAULT_DEGREE_BOUND);
        let fast = whittaker_space_specialized(&m).unwrap();
        assert!(generic.stable);
        assert_eq!(generic.dim(), fast.dim(), "λ = {l}");
        let odd = |p: &[bool]| p.iter().filter(|&&b| b).count();
        assert_eq!(odd(&generic.parities), odd(&fast.parities));
    }
    for l in [[0, 0], [1, 1], [3, -1], [-2, 5]] {
        let m = ActionModel::from_weight(&AlgebraKind::pe(2), &Weight::from_ints(&l), q(1)).unwrap();
        assert_eq!(whittaker_vectors(&m, Scope::Full, DEFAULT_DEGREE_BOUND).dim(), 1);
        assert_eq!(whittaker_space_specialized(&m).unwrap().dim(), 1);
    }
}

#[test]
fn decomposition_matrix_sequential_equals_parallel() {
    let rs = build_algebra(&AlgebraKind::gl(1, 3).even_part()).unwrap();
    let block = BlockParams::new(&rs, &Weight::from_ints(&[0, 0, 0, 0])).unwrap();
    let a = decomposition_matrix_with(&block, Exec::Sequential).unwrap();
    let b = decomposition_matrix_with(&block, Exec::Parallel).unwrap();
    assert_eq!(a.entries, b.entries);
    assert_eq!(a.weights, b.weights);
    assert_eq!(a.weights.len(), 6);
}

fn word(s: &SuperStructure) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..s.len(), 0..5)
}

fn half_integer() -> impl Strategy<Value = Q> {
    (-12i64..=12).prop_map(|k| qf(k, 2))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pbw_reduction_is_idempotent_and_keeps_parity(w in word(&SuperStructure::gl12()), pe in any::<bool>()) {
        let s = if pe { SuperStructure::pe2() } else { SuperStructure::gl12() };
        let w: Vec<usize> = w.into_iter().map(|i| i % s.len()).collect();
        let once = pbw_reduce(&s, &[(w.clone(), q(1))]);
        let terms: Vec<(Vec<usize>, Q)> = once.terms.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        prop_assert_eq!(&pbw_reduce(&s, &terms), &once);
        let odd = w.iter().filter(|&&i| s.is_odd(i)).count() % 2 == 1;
        prop_assert!(once.terms.keys().all(|k| (k.iter().filter(|&&i| s.is_odd(i)).count() % 2 == 1) == odd));
    }

    #[test]
    fn pbw_product_is_associative(a in word(&SuperStructure::gl12()), b in word(&SuperStructure::gl12()), c in word(&SuperStructure::gl12())) {
        let s = SuperStructure::gl12();
        let e = |w: &Vec<usize>| pbw_reduce(&s, &[(w.clone(), q(1))]);
        let (x, y, z): (UeaElement, UeaElement, UeaElement) = (e(&a), e(&b), e(&c));
        prop_assert_eq!(x.mul(&y, &s).mul(&z, &s), x.mul(&y.mul(&z, &s), &s));
    }

    #[test]
    fn series_constant_on_orbits(l in prop::collection::vec(half_integer(), 3), regular in any::<bool>()) {
        let rs = build_algebra(&AlgebraKind::gl(1, 2)).unwrap();
        let zeta = if regular { WhittakerCharacter::regular(&rs) } else { WhittakerCharacter::zero(&rs) };
        let lambda = Weight::new(l);
        let g = zeta.w_zeta(&rs);
        let base = composition_series(&rs, &WhittakerParam::new(&rs, lambda.clone(), zeta.clone()).unwrap()).unwrap();
        for w in g.elements() {
            let mu = dot_action(&rs, w, &lambda).unwrap();
            let s = composition_series(&rs, &WhittakerParam::new(&rs, mu, zeta.clone()).unwrap()).unwrap();
            prop_assert_eq!(&s, &base);
        }
    }
}

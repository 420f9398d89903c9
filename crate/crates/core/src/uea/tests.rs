use num_traits::{One, Zero};

use super::solve::{gl12_even_basis, relation_remainder, singular_relations};
use super::*;
use crate::rational::{q, qf};
use crate::rootdata::{build_algebra, AlgebraKind, Weight};
use crate::whittaker::{composition_series, WhittakerCharacter, WhittakerParam};
use crate::Q;

fn gl12_model(l: &[i64]) -> ActionModel<Q> {
    ActionModel::from_weight(&AlgebraKind::gl(1, 2), &Weight::from_ints(l), q(3)).unwrap()
}

fn pe2_model(l: &[i64]) -> ActionModel<Q> {
    ActionModel::from_weight(&AlgebraKind::pe(2), &Weight::from_ints(l), qf(1, 2)).unwrap()
}

fn in_span(vs: &[Elem<Q>], x: &Elem<Q>) -> bool {
    let width = vs.iter().chain([x]).map(Elem::max_degree).max().unwrap() + 1;
    let flat = |e: &Elem<Q>| -> Vec<Q> { e.comps.iter().flat_map(|p| (0..width).map(|k| p.coeff(k))).collect() };
    let cols: Vec<Vec<Q>> = vs.iter().map(flat).collect();
    linalg::solve_in_span(&cols, &flat(x)).is_some()
}

#[test]
fn ranks_and_relations() {
    assert_eq!(gl12_model(&[0, 0, 0]).rank(), 4);
    assert_eq!(pe2_model(&[0, 0]).rank(), 2);
    let sym = ActionModel::symbolic_gl12().unwrap();
    assert_eq!(sym.rank(), 4);
    assert!(ActionModel::<Q>::from_weight(&AlgebraKind::gl(1, 2), &Weight::from_ints(&[0, 0, 0]), q(0)).is_err());
}

#[test]
fn perturbed_model_fails_relations() {
    let s = SuperStructure::gl12();
    let bad = s.perturbed(s.idx("E12"), s.idx("F21"), s.idx("E11"), q(1));
    let p = model::params_of_weight(ModelKind::Gl12, &Weight::from_ints(&[0, 0, 0]), q(1));
    assert!(ActionModel::new(bad, ModelKind::Gl12, p).is_err());
}

#[test]
fn cyclic_powers_independent() {
    let m = gl12_model(&[1, 2, 0]);
    let rows: Vec<Vec<Q>> =
        (0..=50).map(|k| (0..=50).map(|j| m.cyclic(k).comps[0].coeff(j)).collect()).collect();
    assert_eq!(linalg::rank(&rows, 51), 51);
}

#[test]
fn bottom_layer_formulas() {
    let m = gl12_model(&[0, 3, 0]);
    let (e, f) = (m.gen("e"), m.gen("f"));
    let hv = m.cyclic(1);
    // e·h̄v = a(h̄−2)v
    assert_eq!(m.act(e, &hv), m.cyclic(1).scale(&q(3)).add(&m.cyclic(0).scale(&q(-6))));
    // Ω acts by b on v
    let omega = solve::casimir(&m.structure);
    assert_eq!(m.act_uea(&omega, &m.cyclic(0)), m.cyclic(0).scale(&m.params.b));
    assert_eq!(m.params.b, q(15));
    let _ = f;
}

#[test]
fn even_whittaker_space() {
    for l in [[0, 0, 0], [0, 3, 0], [1, 2, 0], [2, -1, 5]] {
        let m = gl12_model(&l);
        let wh = whittaker_vectors(&m, Scope::Even, DEFAULT_DEGREE_BOUND);
        assert!(wh.stable);
        assert_eq!(wh.dim(), 4);
        for v in gl12_even_basis(&m) {
            assert!(in_span(&wh.vectors, &v));
        }
    }
    let p = pe2_model(&[2, 0]);
    let wh = whittaker_vectors(&p, Scope::Even, DEFAULT_DEGREE_BOUND);
    assert_eq!(wh.dim(), 2);
    assert!(in_span(&wh.vectors, &p.act(p.gen("Y12"), &p.cyclic(0))));
}

#[test]
fn full_whittaker_space() {
    assert_eq!(whittaker_vectors(&gl12_model(&[0, 3, 0]), Scope::Full, 4).dim(), 1);
    let wh = whittaker_vectors(&gl12_model(&[0, 0, 0]), Scope::Full, 4);
    assert_eq!(wh.dim(), 2);
    assert_eq!(wh.parities.iter().filter(|&&p| p).count(), 1);
    for l in [[0, 0], [3, 1], [-2, 4], [1, 1]] {
        assert_eq!(whittaker_vectors(&pe2_model(&l), Scope::Full, 4).dim(), 1);
    }
}

#[test]
fn pe2_top_layer_excluded() {
    let p = pe2_model(&[1, 0]);
    let (x, y) = (p.gen("X12"), p.gen("Y12"));
    let lhs = p.act(x, &p.act(y, &p.cyclic(0)));
    // h̄ = H1 − H2 acts on v as multiplication by h̄
    assert_eq!(lhs, p.cyclic(1).scale(&q(-1)));
    assert!(!lhs.is_zero());
}

#[test]
fn casimir_identity() {
    let s = SuperStructure::gl12();
    assert!(casimir_identity_check(&s));
    let bad = s.perturbed(s.idx("E12"), s.idx("F21"), s.idx("E11"), q(1));
    assert!(!casimir_identity_check(&bad));
}

#[test]
fn singular_vectors() {
    for (l, b_coef, d_coef) in [([0, 0, 0], q(1), qf(1, 2)), ([1, 0, 0], q(0), q(1)), ([1, 2, 0], q(1), qf(-1, 2))] {
        let m = gl12_model(&l);
        let [_, v2, _, v4] = gl12_even_basis(&m);
        let w = singular_vector_gl12(&m).unwrap();
        assert_eq!(w, v2.scale(&b_coef).add(&v4.scale(&d_coef)), "λ = {l:?}");
        for x in ["E12", "E13"] {
            assert!(m.act(m.gen(x), &w).is_zero());
        }
        assert_eq!(m.act(m.gen("e"), &w), w.scale(&q(3)));
    }
    assert!(singular_vector_gl12(&gl12_model(&[0, 3, 0])).is_err());
}

#[test]
fn symbolic_relations() {
    let m = ActionModel::symbolic_gl12().unwrap();
    let [e12, e13] = singular_relations(&m);
    assert!(e13.iter().all(|f| relation_remainder(f).is_zero()));
    let atyp = (Laurent::c() * Laurent::c() - Laurent::c()) * Laurent::from_q(&q(4));
    let rems: Vec<Laurent> = e12.iter().map(relation_remainder).collect();
    assert!(rems.iter().any(|r| !r.is_zero()));
    assert!(rems.iter().all(|r| r.subst(1, &atyp).is_zero()));
    let det = |f: &[Laurent; 3], g: &[Laurent; 3]| f[0].clone() * g[1].clone() - f[1].clone() * g[0].clone();
    for sys in [&e12, &e13] {
        assert!(sys.iter().any(|f| sys.iter().any(|g| !det(f, g).is_zero())));
    }
    let _ = Laurent::one();
}

#[test]
fn pbw_matches_reduction_on_examples() {
    let rs = build_algebra(&AlgebraKind::gl(1, 2)).unwrap();
    let z = WhittakerCharacter::regular(&rs);
    for l in [[0, 0, 0], [0, 3, 0], [1, 0, 0], [1, 2, 0], [-2, 1, 1], [3, -1, 2]] {
        let m = gl12_model(&l);
        let pbw = composition_series_pbw(&m, &rs).unwrap();
        let p = WhittakerParam::new(&rs, Weight::from_ints(&l), z.clone()).unwrap();
        assert_eq!(pbw, composition_series(&rs, &p).unwrap().unwrap(), "λ = {l:?}");
    }
    let pe = build_algebra(&AlgebraKind::pe(2)).unwrap();
    let s = composition_series_pbw(&pe2_model(&[2, 0]), &pe).unwrap();
    assert_eq!(s.length(), 1);
}

#[test]
fn display_forms() {
    let m = gl12_model(&[0, 0, 0]);
    let [_, _, _, v4] = gl12_even_basis(&m);
    assert_eq!(m.format(&v4), "F21^1 F31^0 ⊗ (h) + F21^0 F31^1 ⊗ (6)");
    let sym = ActionModel::symbolic_gl12().unwrap();
    let x = sym.act(sym.gen("f"), &sym.cyclic(0));
    assert_eq!(sym.format(&x), "F21^0 F31^0 ⊗ (-1/4a^-1h^2 - 1/2a^-1h + 1/4a^-1b)");
}

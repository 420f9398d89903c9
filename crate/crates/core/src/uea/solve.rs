//! Whittaker vectors of the explicit models by exact linear algebra.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::coeff::{Coeff, Laurent};
use super::linalg::kernel;
use super::model::{ActionModel, Elem, HPoly, ModelKind};
use super::structure::{pbw_reduce, reduce_words, GenKind, SuperStructure, UeaElement};
use crate::rational::{fmt_q, half, q, qf, sqrt_exact};
use crate::rootdata::{RootSystem, Weight};
use crate::whittaker::{canonical_rep, CompositionSeries, WhittakerCharacter};
use crate::{Error, Result, Q};

pub const DEFAULT_DEGREE_BOUND: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scope {
    /// `x·m = ζ(x)m` for `x ∈ n_0̄`.
    Even,
    /// `x·m = ζ(x)m` for `x ∈ n`.
    Full,
}

#[derive(Debug, Clone, PartialEq)]
pub struct WhittakerSpace {
    pub vectors: Vec<Elem<Q>>,
    /// `true` for odd vectors.
    pub parities: Vec<bool>,
    pub bound: usize,
    /// Same dimension after raising the bound by two.
    pub stable: bool,
}

impl WhittakerSpace {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }
}

fn conditions<C: Coeff>(model: &ActionModel<C>, scope: Scope) -> Vec<(usize, C)> {
    let s = &model.structure;
    let mut out: Vec<(usize, C)> = s.of_kind(GenKind::RaiseEven).into_iter().map(|e| (e, model.params.a.clone())).collect();
    if scope == Scope::Full {
        out.extend(s.of_kind(GenKind::RaiseOdd).into_iter().map(|x| (x, C::zero())));
    }
    out
}

fn flatten(m: &Elem<Q>, width: usize) -> Vec<Q> {
    let mut v = Vec::with_capacity(m.comps.len() * width);
    for p in &m.comps {
        assert!(p.0.len() <= width, "degree overflow");
        v.extend((0..width).map(|k| p.coeff(k)));
    }
    v
}

fn solve_at(model: &ActionModel<Q>, scope: Scope, bound: usize) -> Vec<Elem<Q>> {
    let d = model.odd_rank();
    let conds = conditions(model, scope);
    let width = bound + 4;
    let unknowns: Vec<(usize, usize)> = (0..model.rank()).flat_map(|m| (0..=bound).map(move |k| (m, k))).collect();
    let cols: Vec<Vec<Q>> = unknowns
        .iter()
        .map(|&(mask, k)| {
            let u = Elem::basis(d, mask, HPoly::monomial(k));
            conds
                .iter()
                .flat_map(|(x, z)| flatten(&model.act(*x, &u).sub(&u.scale(z)), width))
                .collect()
        })
        .collect();
    let nrows = cols.first().map_or(0, Vec::len);
    let rows: Vec<Vec<Q>> = (0..nrows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    kernel(&rows, unknowns.len())
        .into_iter()
        .map(|v| {
            let mut e = Elem::zero(d);
            for ((mask, k), c) in unknowns.iter().zip(v) {
                if !c.is_zero() {
                    e = e.add(&Elem::basis(d, *mask, HPoly::monomial(*k).scale(&c)));
                }
            }
            e
        })
        .collect()
}

/// A basis of the Whittaker vectors of `h̄`-degree at most `bound`, with one
/// escalation of the bound to test stability.
pub fn whittaker_vectors(model: &ActionModel<Q>, scope: Scope, bound: usize) -> WhittakerSpace {
    let vectors = solve_at(model, scope, bound);
    let stable = solve_at(model, scope, bound + 2).len() == vectors.len();
    let parities = vectors.iter().map(is_odd_vector).collect();
    WhittakerSpace { vectors, parities, bound, stable }
}

/// A basis of the even Whittaker vectors valid for every parameter value:
/// `v, F21 v, F21 F31 v, 2a F31 v + F21 h̄ v` for `gl(1|2)`, `v, Y12 v` for `pe(2)`.
pub fn even_basis<C: Coeff>(model: &ActionModel<C>) -> Vec<Elem<C>> {
    match model.kind {
        ModelKind::Gl12 => gl12_even_basis(model).to_vec(),
        ModelKind::Pe2 => vec![model.cyclic(0), model.act(model.gen("Y12"), &model.cyclic(0))],
    }
}

/// The odd raising conditions on [`even_basis`] over the Laurent ring, one
/// row per coordinate, one column per basis vector.
#[derive(Debug, Clone)]
pub struct OddForms {
    pub rows: Vec<Vec<Laurent>>,
}

fn build_odd_forms(kind: ModelKind) -> Result<OddForms> {
    let model = ActionModel::symbolic(kind)?;
    let basis = even_basis(&model);
    for (x, z) in conditions(&model, Scope::Even) {
        for u in &basis {
            if !model.act(x, u).sub(&u.scale(&z)).is_zero() {
                return Err(Error::Precondition(format!("{kind}: even basis vector is not Whittaker")));
            }
        }
    }
    let mut rows = Vec::new();
    for (x, _) in conditions(&model, Scope::Full).into_iter().filter(|(x, _)| model.structure.is_odd(*x)) {
        let imgs: Vec<BTreeMap<(usize, usize), Laurent>> = basis.iter().map(|u| coefficients(&model.act(x, u))).collect();
        let mut keys: Vec<(usize, usize)> = imgs.iter().flat_map(|m| m.keys().copied()).collect();
        keys.sort();
        keys.dedup();
        rows.extend(keys.iter().map(|k| imgs.iter().map(|m| m.get(k).cloned().unwrap_or_else(Laurent::zero)).collect()));
    }
    Ok(OddForms { rows })
}

/// Cached per model kind; the even basis is checked symbolically on first use.
pub fn odd_forms(kind: ModelKind) -> Result<&'static OddForms> {
    static GL12: OnceLock<Result<OddForms>> = OnceLock::new();
    static PE2: OnceLock<Result<OddForms>> = OnceLock::new();
    let cell = match kind {
        ModelKind::Gl12 => &GL12,
        ModelKind::Pe2 => &PE2,
    };
    cell.get_or_init(|| build_odd_forms(kind)).as_ref().map_err(Clone::clone)
}

/// The full Whittaker space by specializing [`odd_forms`]: the kernel of the
/// odd conditions on the even basis.
pub fn whittaker_space_specialized(model: &ActionModel<Q>) -> Result<WhittakerSpace> {
    let forms = odd_forms(model.kind)?;
    let p = &model.params;
    let at = [p.a.clone(), p.b.clone(), p.c.clone(), p.t.clone()];
    let rows: Vec<Vec<Q>> = forms.rows.iter().map(|r| r.iter().map(|f| f.eval(&at)).collect()).collect();
    let ncols = forms.rows.first().map_or(even_basis_len(model.kind), Vec::len);
    let ker = kernel(&rows, ncols);
    let basis = even_basis(model);
    let vectors: Vec<Elem<Q>> = ker
        .iter()
        .map(|coef| {
            coef.iter().zip(&basis).fold(Elem::zero(model.odd_rank()), |acc, (c, u)| acc.add(&u.scale(c)))
        })
        .collect();
    let parities = vectors.iter().map(is_odd_vector).collect();
    Ok(WhittakerSpace { vectors, parities, bound: DEFAULT_DEGREE_BOUND, stable: true })
}

fn even_basis_len(kind: ModelKind) -> usize {
    match kind {
        ModelKind::Gl12 => 4,
        ModelKind::Pe2 => 2,
    }
}

fn is_odd_vector(v: &Elem<Q>) -> bool {
    v.comps.iter().enumerate().any(|(m, p)| !p.is_zero() && m.count_ones() % 2 == 1)
}

/// `v, F21 v, F21 F31 v, 2a F31 v + F21 h̄ v`.
pub fn gl12_even_basis<C: Coeff>(model: &ActionModel<C>) -> [Elem<C>; 4] {
    let f21 = model.gen("F21");
    let f31 = model.gen("F31");
    let v = model.cyclic(0);
    let v2 = model.act(f21, &v);
    let v3 = model.act(f21, &model.act(f31, &v));
    let two_a = model.params.a.clone() * C::from_q(&q(2));
    let v4 = model.act(f31, &v).scale(&two_a).add(&model.act(f21, &model.cyclic(1)));
    [v, v2, v3, v4]
}

fn coefficients<C: Coeff>(m: &Elem<C>) -> BTreeMap<(usize, usize), C> {
    let mut out = BTreeMap::new();
    for (mask, p) in m.comps.iter().enumerate() {
        for (k, c) in p.0.iter().enumerate() {
            if !c.is_zero() {
                out.insert((mask, k), c.clone());
            }
        }
    }
    out
}

/// The linear conditions on `(B, C, D)` expressing `x·(B v₂ + C v₃ + D v₄) = 0`,
/// one `[β, γ, δ]` per coordinate of the result, for `x = E12` and `x = E13`.
pub fn singular_relations<C: Coeff>(model: &ActionModel<C>) -> [Vec<[C; 3]>; 2] {
    let [_, v2, v3, v4] = gl12_even_basis(model);
    ["E12", "E13"].map(|name| {
        let x = model.gen(name);
        let imgs: Vec<BTreeMap<(usize, usize), C>> = [&v2, &v3, &v4].iter().map(|v| coefficients(&model.act(x, v))).collect();
        let mut keys: Vec<(usize, usize)> = imgs.iter().flat_map(|m| m.keys().copied()).collect();
        keys.sort();
        keys.dedup();
        keys.iter()
            .map(|k| [0, 1, 2].map(|i| imgs[i].get(k).cloned().unwrap_or_else(C::zero)))
            .collect()
    })
}

/// What is left of `β B + γ C + δ D` after eliminating `B` by
/// `B = 2(1−c)D` and `C` by `C = 0`: the coefficient of `D`.
pub fn relation_remainder(form: &[Laurent; 3]) -> Laurent {
    let two_one_minus_c = (Laurent::one() - Laurent::c()) * Laurent::from_q(&q(2));
    form[2].clone() + form[0].clone() * two_one_minus_c
}

/// `b = 4(c² − c)`.
pub fn is_atypical_params(model: &ActionModel<Q>) -> bool {
    let c = &model.params.c;
    model.params.b == q(4) * (c * c - c)
}

/// The Whittaker vector `w = B v₂ + C v₃ + D v₄` killed by `E12` and `E13`,
/// normalized to `B = 1` when possible and `D = 1` otherwise.
pub fn singular_vector_gl12(model: &ActionModel<Q>) -> Result<Elem<Q>> {
    if model.kind != ModelKind::Gl12 {
        return Err(Error::Precondition("singular vector needs a gl(1|2) model".into()));
    }
    if !is_atypical_params(model) {
        return Err(Error::Precondition(format!(
            "typical parameters b={}, c={}: no singular Whittaker vector",
            fmt_q(&model.params.b),
            fmt_q(&model.params.c)
        )));
    }
    let rows: Vec<Vec<Q>> = singular_relations(model).into_iter().flatten().map(|r| r.to_vec()).collect();
    let ker = kernel(&rows, 3);
    if ker.len() != 1 {
        return Err(Error::Precondition(format!("expected a one-dimensional solution, got {}", ker.len())));
    }
    let sol = &ker[0];
    let norm = if !sol[0].is_zero() { sol[0].clone() } else { sol[2].clone() };
    let [_, v2, v3, v4] = gl12_even_basis(model);
    Ok(v2.scale(&(&sol[0] / &norm)).add(&v3.scale(&(&sol[1] / &norm))).add(&v4.scale(&(&sol[2] / &norm))))
}

/// `z = E11 + ½(E22 + E33)`.
pub fn gl12_z(s: &SuperStructure) -> UeaElement {
    reduce_words(s, &[(q(1), "E11"), (half(), "E22"), (half(), "E33")]).expect("gl(1|2) names")
}

/// `Ω = 4fe + h̄² + 2h̄`, `h̄ = E22 − E33` (resp. `H1 − H2`).
pub fn casimir(s: &SuperStructure) -> UeaElement {
    let (h1, h2) = if s.index("E22").is_some() { ("E22", "E33") } else { ("H1", "H2") };
    let sq = |a: &str, b: &str| format!("{a} {b}");
    reduce_words(
        s,
        &[
            (q(4), "f e"),
            (q(1), &sq(h1, h1)),
            (q(-1), &sq(h1, h2)),
            (q(-1), &sq(h2, h1)),
            (q(1), &sq(h2, h2)),
            (q(2), h1),
            (q(-2), h2),
        ],
    )
    .expect("known names")
}

/// `E12 E13 F31 F21 = z² − z − ¼Ω` on the bottom layer of the symbolic
/// `gl(1|2)` model built from `s`, and `= (c² − c − ¼b)` on `v`.
pub fn casimir_identity_check(s: &SuperStructure) -> bool {
    let Ok(model) = ActionModel::new_unchecked(s.clone(), ModelKind::Gl12, ActionModel::<Laurent>::symbolic_params())
    else {
        return false;
    };
    let Ok(lhs) = reduce_words(s, &[(q(1), "E12 E13 F31 F21")]) else { return false };
    let z = gl12_z(s);
    let rhs = z.mul(&z, s).add(&z.scale(&q(-1))).add(&casimir(s).scale(&qf(-1, 4)));
    let scalar = {
        let c = Laurent::c();
        c.clone() * c.clone() - c - Laurent::b() * Laurent::from_q(&qf(1, 4))
    };
    let on_v = model.act_uea(&lhs, &model.cyclic(0)) == model.cyclic(0).scale(&scalar);
    on_v && (0..=3).all(|k| {
        let m = model.cyclic(k);
        model.act_uea(&lhs, &m) == model.act_uea(&rhs, &m)
    })
}

/// `κ` with `y = κ x`, if `y` is a multiple of the nonzero `x`.
pub fn eigenvalue(x: &Elem<Q>, y: &Elem<Q>) -> Option<Q> {
    let (mask, k) = x.comps.iter().enumerate().find_map(|(m, p)| p.0.iter().position(|c| !c.is_zero()).map(|k| (m, k)))?;
    let kappa = y.comps[mask].coeff(k) / x.comps[mask].coeff(k);
    (x.scale(&kappa) == *y).then_some(kappa)
}

/// Composition factors of `M̃(λ,ζ)` for regular `ζ`, read off from the
/// Whittaker vectors: one factor per basis vector of `Wh`, the parameter of
/// the submodule being recovered from the central characters on `w`.
pub fn composition_series_pbw(model: &ActionModel<Q>, rs: &RootSystem) -> Result<CompositionSeries> {
    let lambda = model
        .lambda
        .clone()
        .ok_or_else(|| Error::Precondition("model has no concrete weight".into()))?;
    let wh = whittaker_space_specialized(model)?;
    composition_series_from_space(model, rs, &lambda, &wh)
}

/// As [`composition_series_pbw`] with the full Whittaker space given.
pub fn composition_series_from_space(
    model: &ActionModel<Q>,
    rs: &RootSystem,
    lambda: &Weight,
    wh: &WhittakerSpace,
) -> Result<CompositionSeries> {
    let zeta = WhittakerCharacter::regular(rs);
    if !wh.stable {
        return Err(Error::Precondition("Whittaker space not stable under degree escalation".into()));
    }
    let mut factors = BTreeMap::new();
    factors.insert(canonical_rep(rs, &zeta, lambda), 1u64);
    match (wh.dim(), model.kind) {
        (1, _) => {}
        (2, ModelKind::Gl12) => {
            let mu = submodule_weight(model, wh)?;
            *factors.entry(canonical_rep(rs, &zeta, &mu)).or_insert(0) += 1;
        }
        (n, k) => return Err(Error::Precondition(format!("unexpected Whittaker dimension {n} for {k}"))),
    }
    Ok(CompositionSeries { factors })
}

/// The weight of the simple submodule generated by the second Whittaker
/// vector, from `E11`, `E22+E33` and `Ω` acting on it.
fn submodule_weight(model: &ActionModel<Q>, wh: &WhittakerSpace) -> Result<Weight> {
    let v = model.cyclic(0);
    let w = wh
        .vectors
        .iter()
        .map(|u| u.sub(&v.scale(&u.comps[0].coeff(0))))
        .find(|w| !w.is_zero())
        .ok_or_else(|| Error::Precondition("no Whittaker vector beyond v".into()))?;
    if !w.comps[0].is_zero() {
        return Err(Error::Precondition("second Whittaker vector meets the bottom layer".into()));
    }
    let s = &model.structure;
    let ev = |u: &UeaElement| eigenvalue(&w, &model.act_uea(u, &w));
    let missing = || Error::Precondition("w is not an eigenvector of the centre".into());
    let e11 = ev(&reduce_words(s, &[(q(1), "E11")])?).ok_or_else(missing)?;
    let t = ev(&reduce_words(s, &[(q(1), "E22"), (q(1), "E33")])?).ok_or_else(missing)?;
    let b = ev(&casimir(s)).ok_or_else(missing)?;
    let root = sqrt_exact(&(&b + q(1))).ok_or_else(|| Error::Precondition("irrational Casimir value".into()))?;
    let m = root - q(1);
    Ok(Weight::new(vec![e11, (&t + &m) * half(), (&t - &m) * half()]))
}

/// Normal form of a word list, exposed for the CLI.
pub fn normal_form(s: &SuperStructure, words: &[(Vec<usize>, Q)]) -> UeaElement {
    pbw_reduce(s, words)
}

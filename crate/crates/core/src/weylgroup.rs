//! Weyl groups of the even parts as signed permutation groups.
//!
//! Every group here is a reflection subgroup of the Weyl group of `g_0`,
//! described by its positive roots and canonical simple roots (the positive
//! roots `β` whose reflection makes no other positive root of the subsystem
//! negative). Parabolic subgroups, integral Weyl groups and stabilizers all
//! use the same representation, so Coxeter combinatorics (lengths, reduced
//! words, Bruhat order) work uniformly on them.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::rational::{is_int, is_pos_int, q, Q};
use crate::rootdata::{coroot_pairing, nonneg_integral, RootSystem, Weight};
use crate::{Error, Result};

/// A signed permutation: `w(e_i) = sign_i · e_{target_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    images: Vec<(u16, i8)>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { images: (0..rank).map(|i| (i as u16, 1)).collect() }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &(t, s))| t as usize == i && s == 1)
    }

    /// The reflection in `alpha`. Panics if the reflection is not a signed
    /// permutation, which cannot happen for roots of types A, C or P.
    pub fn reflection(alpha: &Weight) -> Self {
        let rank = alpha.rank();
        let images = (0..rank)
            .map(|k| {
                let e = Weight::unit(rank, k);
                let img = e.sub(&alpha.scale(&coroot_pairing(&e, alpha)));
                let nz: Vec<usize> = (0..rank).filter(|&i| !img.coords[i].is_zero()).collect();
                assert!(nz.len() == 1 && img.coords[nz[0]].abs() == q(1), "not a signed permutation");
                (nz[0] as u16, if img.coords[nz[0]].is_positive() { 1 } else { -1 })
            })
            .collect();
        WeylElement { images }
    }

    pub fn apply(&self, x: &Weight) -> Weight {
        let mut out = vec![Q::zero(); x.rank()];
        for (i, &(t, s)) in self.images.iter().enumerate() {
            out[t as usize] = if s > 0 { x.coords[i].clone() } else { -x.coords[i].clone() };
        }
        Weight::new(out)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let images = other
            .images
            .iter()
            .map(|&(t, s)| {
                let (t2, s2) = self.images[t as usize];
                (t2, s * s2)
            })
            .collect();
        WeylElement { images }
    }

    pub fn inverse(&self) -> WeylElement {
        let mut images = vec![(0u16, 1i8); self.rank()];
        for (i, &(t, s)) in self.images.iter().enumerate() {
            images[t as usize] = (i as u16, s);
        }
        WeylElement { images }
    }
}

/// Positivity functional: strictly positive on every positive even root of
/// every supported algebra.
fn positive_direction(rank: usize) -> Weight {
    Weight::from_ints(&(0..rank).map(|i| (rank - i) as i64).collect::<Vec<_>>())
}

#[derive(Debug, Clone)]
pub struct WeylSubgroup {
    rank: usize,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    generators: Vec<WeylElement>,
    elements: OnceLock<Vec<WeylElement>>,
    index: OnceLock<HashMap<WeylElement, usize>>,
}

impl PartialEq for WeylSubgroup {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.simple_roots == other.simple_roots
    }
}

impl Eq for WeylSubgroup {}

fn sort_key(w: &Weight) -> (usize, Vec<Q>) {
    let first = w.coords.iter().position(|c| !c.is_zero()).unwrap_or(usize::MAX);
    (first, w.coords.iter().map(|c| -c.clone()).collect())
}

impl WeylSubgroup {
    /// The reflection subgroup generated by the reflections in `roots`.
    pub fn from_roots(rank: usize, roots: &[Weight]) -> Self {
        let dir = positive_direction(rank);
        let normalize = |r: &Weight| if r.dot(&dir).is_negative() { r.scale(&q(-1)) } else { r.clone() };
        let mut positive: BTreeSet<Weight> = roots.iter().map(normalize).collect();
        let mut queue: VecDeque<Weight> = positive.iter().cloned().collect();
        while let Some(a) = queue.pop_front() {
            let sa = WeylElement::reflection(&a);
            let current: Vec<Weight> = positive.iter().cloned().collect();
            for b in current {
                let img = normalize(&sa.apply(&b));
                if positive.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let positive: Vec<Weight> = positive.into_iter().collect();
        let mut simple: Vec<Weight> = positive
            .iter()
            .filter(|b| {
                let s = WeylElement::reflection(b);
                positive.iter().filter(|c| s.apply(c).dot(&dir).is_negative()).count() == 1
            })
            .cloned()
            .collect();
        simple.sort_by_key(sort_key);
        let generators = simple.iter().map(WeylElement::reflection).collect();
        WeylSubgroup {
            rank,
            simple_roots: simple,
            positive_roots: positive,
            generators,
            elements: OnceLock::new(),
            index: OnceLock::new(),
        }
    }

    pub fn trivial(rank: usize) -> Self {
        Self::from_roots(rank, &[])
    }

    /// `S_{n+1}` on `n + 1` coordinates.
    pub fn type_a(n: usize) -> Self {
        let rank = n + 1;
        let roots: Vec<Weight> = (0..n).map(|i| Weight::unit(rank, i).sub(&Weight::unit(rank, i + 1))).collect();
        Self::from_roots(rank, &roots)
    }

    /// The hyperoctahedral group on `n` coordinates (types B/C share it).
    pub fn type_c(n: usize) -> Self {
        let mut roots: Vec<Weight> = (0..n - 1).map(|i| Weight::unit(n, i).sub(&Weight::unit(n, i + 1))).collect();
        roots.push(Weight::unit(n, n - 1).scale(&q(2)));
        Self::from_roots(n, &roots)
    }

    /// Parses `A3`, `B2`, `C2`.
    pub fn parse_type(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad group type {s:?}"));
        let (t, n) = s.split_at(1);
        let n: usize = n.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        match t {
            "A" | "a" => Ok(Self::type_a(n)),
            "B" | "b" | "C" | "c" => Ok(Self::type_c(n)),
            _ => Err(bad()),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.generators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    fn is_negative(x: &Weight) -> bool {
        x.dot(&positive_direction(x.rank())).is_negative()
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        self.positive_roots.iter().filter(|b| Self::is_negative(&w.apply(b))).count()
    }

    /// `ℓ(w s_i) < ℓ(w)`.
    pub fn is_right_descent(&self, w: &WeylElement, i: usize) -> bool {
        Self::is_negative(&w.apply(&self.simple_roots[i]))
    }

    /// `ℓ(s_i w) < ℓ(w)`.
    pub fn is_left_descent(&self, w: &WeylElement, i: usize) -> bool {
        self.is_right_descent(&w.inverse(), i)
    }

    /// Reduced word as 0-based generator indices, `w = s_{i_1} ⋯ s_{i_k}`.
    /// `None` when `w` is not in the subgroup.
    pub fn try_reduced_word(&self, w: &WeylElement) -> Option<Vec<usize>> {
        let mut cur = w.clone();
        let mut rev = Vec::new();
        'outer: while !cur.is_identity() {
            for i in 0..self.generators.len() {
                if self.is_right_descent(&cur, i) {
                    cur = cur.compose(&self.generators[i]);
                    rev.push(i);
                    continue 'outer;
                }
            }
            return None;
        }
        rev.reverse();
        Some(rev)
    }

    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        self.try_reduced_word(w).expect("element not in subgroup")
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        w.rank() == self.rank && self.try_reduced_word(w).is_some()
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        word.iter().fold(WeylElement::identity(self.rank), |acc, &i| acc.compose(&self.generators[i]))
    }

    pub fn longest_element(&self) -> WeylElement {
        let mut w = WeylElement::identity(self.rank);
        'outer: loop {
            for i in 0..self.generators.len() {
                if !self.is_right_descent(&w, i) {
                    w = w.compose(&self.generators[i]);
                    continue 'outer;
                }
            }
            return w;
        }
    }

    /// Bruhat order by the lifting property: for a right descent `s` of `w`,
    /// `x ≤ w ⟺ min(x, xs) ≤ ws`.
    pub fn bruhat_leq(&self, x: &WeylElement, w: &WeylElement) -> bool {
        let mut x = x.clone();
        let mut w = w.clone();
        loop {
            if w.is_identity() {
                return x.is_identity();
            }
            let Some(i) = (0..self.generators.len()).find(|&i| self.is_right_descent(&w, i)) else {
                return false;
            };
            if self.is_right_descent(&x, i) {
                x = x.compose(&self.generators[i]);
            }
            w = w.compose(&self.generators[i]);
        }
    }

    /// All elements, breadth-first from the identity (so sorted by length).
    pub fn elements(&self) -> &[WeylElement] {
        self.elements.get_or_init(|| {
            let id = WeylElement::identity(self.rank);
            let mut seen: HashMap<WeylElement, ()> = HashMap::from([(id.clone(), ())]);
            let mut out = vec![id.clone()];
            let mut queue = VecDeque::from([id]);
            while let Some(w) = queue.pop_front() {
                for g in &self.generators {
                    let n = w.compose(g);
                    if seen.insert(n.clone(), ()).is_none() {
                        out.push(n.clone());
                        queue.push_back(n);
                    }
                }
            }
            out
        })
    }

    pub fn order(&self) -> usize {
        self.elements().len()
    }

    pub fn index_of(&self, w: &WeylElement) -> Option<usize> {
        self.index
            .get_or_init(|| self.elements().iter().cloned().enumerate().map(|(i, w)| (w, i)).collect())
            .get(w)
            .copied()
    }

    /// `"s1 s3 s2"` (1-based generator indices).
    pub fn format_word(word: &[usize]) -> String {
        if word.is_empty() {
            return "e".into();
        }
        word.iter().map(|i| format!("s{}", i + 1)).collect::<Vec<_>>().join(" ")
    }

    /// Accepts `"s1 s3 s2"`, `"s1s3s2"` and `"e"`.
    pub fn parse_word(&self, s: &str) -> Result<Vec<usize>> {
        let s = s.trim();
        if s == "e" || s.is_empty() {
            return Ok(vec![]);
        }
        let bad = || Error::Parse(format!("bad Weyl word {s:?}"));
        s.split(|c: char| c == 's' || c.is_whitespace() || c == '*')
            .filter(|t| !t.is_empty())
            .map(|t| {
                let i: usize = t.parse().map_err(|_| bad())?;
                if i == 0 || i > self.generators.len() {
                    return Err(bad());
                }
                Ok(i - 1)
            })
            .collect()
    }

    pub fn element_from_str(&self, s: &str) -> Result<WeylElement> {
        Ok(self.from_word(&self.parse_word(s)?))
    }
}

impl fmt::Display for WeylSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let roots: Vec<String> = self.simple_roots.iter().map(|r| r.to_string()).collect();
        write!(f, "<{}>", roots.join(", "))
    }
}

/// `W` of `g_0` for `rs`.
pub fn full_weyl_group(rs: &RootSystem) -> WeylSubgroup {
    parabolic_subgroup(rs, &(0..rs.simple_roots_even.len()).collect::<Vec<_>>())
}

/// `W_S` generated by the even simple reflections indexed by `subset`.
pub fn parabolic_subgroup(rs: &RootSystem, subset: &[usize]) -> WeylSubgroup {
    let roots: Vec<Weight> = subset.iter().map(|&i| rs.simple_roots_even[i].weight.clone()).collect();
    WeylSubgroup::from_roots(rs.rank(), &roots)
}

/// `w·λ = w(λ+ρ_0) − ρ_0`.
pub fn dot_action(rs: &RootSystem, w: &WeylElement, lambda: &Weight) -> Result<Weight> {
    rs.check_weight(lambda)?;
    if w.rank() != rs.rank() {
        return Err(Error::RankMismatch { expected: rs.rank(), got: w.rank() });
    }
    Ok(w.apply(&lambda.add(&rs.rho_even)).sub(&rs.rho_even))
}

fn shifted_pairing(rs: &RootSystem, lambda: &Weight, alpha: &Weight) -> Q {
    coroot_pairing(&lambda.add(&rs.rho_even), alpha)
}

/// Dot-stabilizer of `λ` in `group`, as the reflection subgroup generated by
/// the reflections of `group` fixing `λ + ρ_0`.
pub fn stabilizer(rs: &RootSystem, lambda: &Weight, group: &WeylSubgroup) -> WeylSubgroup {
    let roots: Vec<Weight> = group
        .positive_roots()
        .iter()
        .filter(|a| shifted_pairing(rs, lambda, a).is_zero())
        .cloned()
        .collect();
    WeylSubgroup::from_roots(rs.rank(), &roots)
}

/// `⟨λ+ρ_0, α∨⟩ ∉ Z_{>0}` for every positive root `α` of the Levi spanned by
/// the simple roots indexed by `subset`.
pub fn is_antidominant(rs: &RootSystem, lambda: &Weight, subset: &[usize]) -> bool {
    rs.levi_positive_roots(subset).iter().all(|a| !is_pos_int(&shifted_pairing(rs, lambda, a)))
}

/// Integral Weyl group of `λ` inside the Levi of `subset`.
pub fn integral_subgroup_in(rs: &RootSystem, lambda: &Weight, subset: &[usize]) -> WeylSubgroup {
    let roots: Vec<Weight> =
        rs.levi_positive_roots(subset).into_iter().filter(|a| is_int(&shifted_pairing(rs, lambda, a))).collect();
    WeylSubgroup::from_roots(rs.rank(), &roots)
}

/// `W_[λ]`: generated by `s_α`, `α` even positive with `⟨λ+ρ_0, α∨⟩ ∈ Z`.
pub fn integral_weyl_group(rs: &RootSystem, lambda: &Weight) -> WeylSubgroup {
    integral_subgroup_in(rs, lambda, &(0..rs.simple_roots_even.len()).collect::<Vec<_>>())
}

/// The antidominant weight in `(W_S ∩ W_[λ])·λ` and an element `w` of that
/// group with `w·λ` equal to it.
pub fn antidominant_representative(rs: &RootSystem, lambda: &Weight, subset: &[usize]) -> (Weight, WeylElement) {
    let group = integral_subgroup_in(rs, lambda, subset);
    let mut cur = lambda.clone();
    let mut w = WeylElement::identity(rs.rank());
    'outer: loop {
        for (i, a) in group.simple_roots().iter().enumerate() {
            if is_pos_int(&shifted_pairing(rs, &cur, a)) {
                let s = &group.generators()[i];
                cur = s.apply(&cur.add(&rs.rho_even)).sub(&rs.rho_even);
                w = s.compose(&w);
                continue 'outer;
            }
        }
        return (cur, w);
    }
}

/// Dot-orbit of `λ` under `group`.
pub fn orbit(rs: &RootSystem, group: &WeylSubgroup, lambda: &Weight) -> BTreeSet<Weight> {
    let mut seen = BTreeSet::from([lambda.clone()]);
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(x) = queue.pop_front() {
        for g in group.generators() {
            let y = g.apply(&x.add(&rs.rho_even)).sub(&rs.rho_even);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// `μ ≤ λ`: `λ − μ` is a nonnegative integer combination of positive roots.
pub fn leq_weights(rs: &RootSystem, mu: &Weight, lambda: &Weight) -> bool {
    rs.cone_coefficients(&lambda.sub(mu)).is_some_and(|c| nonneg_integral(&c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;
    use crate::rootdata::{build_algebra, AlgebraKind};

    fn gl12_even() -> RootSystem {
        build_algebra(&AlgebraKind::gl(1, 2).even_part()).unwrap()
    }

    fn w(xs: &[i64]) -> Weight {
        Weight::from_ints(xs)
    }

    #[test]
    fn dot_action_examples() {
        let rs = gl12_even();
        let wg = full_weyl_group(&rs);
        let s = &wg.generators()[0];
        assert_eq!(dot_action(&rs, s, &w(&[0, 0, 0])).unwrap(), w(&[0, -1, 1]));
        let id = WeylElement::identity(3);
        let lam = Weight::new(vec![qf(1, 3), q(2), qf(-5, 7)]);
        assert_eq!(dot_action(&rs, &id, &lam).unwrap(), lam);
        assert!(dot_action(&rs, &WeylElement::identity(2), &lam).is_err());
    }

    #[test]
    fn group_orders() {
        assert_eq!(WeylSubgroup::type_a(2).order(), 6);
        assert_eq!(WeylSubgroup::type_a(3).order(), 24);
        assert_eq!(WeylSubgroup::type_c(2).order(), 8);
        assert_eq!(WeylSubgroup::type_c(3).order(), 48);
        let osp = build_algebra(&AlgebraKind::osp(2)).unwrap();
        assert_eq!(full_weyl_group(&osp).order(), 8);
        let gl = build_algebra(&AlgebraKind::gl(2, 3)).unwrap();
        assert_eq!(full_weyl_group(&gl).order(), 12);
    }

    #[test]
    fn lengths_and_words() {
        let g = WeylSubgroup::type_a(3);
        for x in g.elements() {
            let word = g.reduced_word(x);
            assert_eq!(word.len(), g.length(x));
            assert_eq!(&g.from_word(&word), x);
        }
        assert_eq!(g.length(&g.longest_element()), 6);
        let c = WeylSubgroup::type_c(2);
        assert_eq!(c.length(&c.longest_element()), 4);
    }

    #[test]
    fn bruhat_examples() {
        let g = WeylSubgroup::type_a(2);
        let el = |s: &str| g.element_from_str(s).unwrap();
        assert!(g.bruhat_leq(&el("e"), &el("s1 s2")));
        assert!(g.bruhat_leq(&el("s1"), &el("s1 s2")));
        assert!(g.bruhat_leq(&el("s1"), &el("s2 s1")));
        assert!(!g.bruhat_leq(&el("s1 s2"), &el("s2 s1")));
        assert!(!g.bruhat_leq(&el("s2"), &el("s1")));
        let w0 = g.longest_element();
        assert!(g.elements().iter().all(|x| g.bruhat_leq(x, &w0)));
    }

    /// Subword property as an independent oracle.
    fn subword_leq(g: &WeylSubgroup, x: &WeylElement, w: &WeylElement) -> bool {
        let word = g.reduced_word(w);
        (0u32..1 << word.len()).any(|mask| {
            let sub: Vec<usize> = word.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &s)| s).collect();
            &g.from_word(&sub) == x
        })
    }

    #[test]
    fn bruhat_matches_subword_property() {
        for g in [WeylSubgroup::type_a(3), WeylSubgroup::type_c(2)] {
            for x in g.elements() {
                for y in g.elements() {
                    assert_eq!(g.bruhat_leq(x, y), subword_leq(&g, x, y));
                }
            }
        }
    }

    #[test]
    fn stabilizer_examples() {
        let rs = gl12_even();
        let wg = full_weyl_group(&rs);
        let neg_rho = rs.rho_even.scale(&q(-1));
        assert_eq!(stabilizer(&rs, &neg_rho, &wg).order(), 2);
        let nonint = Weight::new(vec![q(0), qf(1, 3), q(0)]);
        assert_eq!(stabilizer(&rs, &nonint, &wg).order(), 1);
        assert_eq!(stabilizer(&rs, &w(&[0, 0, 0]), &wg).order(), 1);
    }

    #[test]
    fn stabilizer_matches_enumeration() {
        let rs = build_algebra(&AlgebraKind::gl(3, 1).even_part()).unwrap();
        let wg = full_weyl_group(&rs);
        for lam in [w(&[0, 0, 0, 0]), w(&[-1, 0, 1, 5]), w(&[1, 1, 0, 0]), w(&[-2, -1, 0, 3])] {
            let stab = stabilizer(&rs, &lam, &wg);
            let brute: BTreeSet<WeylElement> = wg
                .elements()
                .iter()
                .filter(|x| dot_action(&rs, x, &lam).unwrap() == lam)
                .cloned()
                .collect();
            let got: BTreeSet<WeylElement> = stab.elements().iter().cloned().collect();
            assert_eq!(got, brute);
            assert_eq!(orbit(&rs, &wg, &lam).len() * stab.order(), wg.order());
        }
    }

    #[test]
    fn antidominance_examples() {
        let rs = gl12_even();
        assert!(is_antidominant(&rs, &w(&[5, 3, 0]), &[]));
        assert!(!is_antidominant(&rs, &w(&[0, 0, 0]), &[0]));
        assert!(is_antidominant(&rs, &w(&[0, -1, 1]), &[0]));
        let (rep, x) = antidominant_representative(&rs, &w(&[0, 0, 0]), &[0]);
        assert_eq!(rep, w(&[0, -1, 1]));
        assert_eq!(x, full_weyl_group(&rs).generators()[0]);
        let (rep2, y) = antidominant_representative(&rs, &rep, &[0]);
        assert_eq!(rep2, rep);
        assert!(y.is_identity());
    }

    #[test]
    fn integral_groups() {
        let rs = gl12_even();
        assert_eq!(integral_weyl_group(&rs, &w(&[3, 1, 4])).order(), 2);
        let lam = Weight::new(vec![q(0), qf(1, 4), q(0)]);
        assert_eq!(integral_weyl_group(&rs, &lam).order(), 1);
        // half-integral C_2 weight: integral roots form a D_2-type subsystem
        let osp = build_algebra(&AlgebraKind::osp(2).even_part()).unwrap();
        let lam = Weight::new(vec![q(0), qf(1, 2), qf(1, 2)]);
        let g = integral_weyl_group(&osp, &lam);
        assert_eq!(g.order(), 4);
        assert_eq!(g.num_generators(), 2);
    }

    #[test]
    fn leq_examples() {
        let rs = build_algebra(&AlgebraKind::gl(1, 2)).unwrap();
        let z = w(&[0, 0, 0]);
        assert!(leq_weights(&rs, &z, &z));
        assert!(leq_weights(&rs, &w(&[0, -1, 1]), &z));
        assert!(!leq_weights(&rs, &w(&[1, 0, -1]), &z));
        assert!(leq_weights(&rs, &w(&[-1, 1, 0]), &z));
    }

    #[test]
    fn regular_orbit_is_bijection() {
        let rs = build_algebra(&AlgebraKind::osp(2).even_part()).unwrap();
        let wg = full_weyl_group(&rs);
        let lam = w(&[0, 3, 1]);
        let imgs: BTreeSet<Weight> = wg.elements().iter().map(|x| dot_action(&rs, x, &lam).unwrap()).collect();
        assert_eq!(imgs.len(), wg.order());
    }

    #[test]
    fn words_roundtrip() {
        let g = WeylSubgroup::type_a(3);
        assert_eq!(g.parse_word("s2s1s3s2").unwrap(), vec![1, 0, 2, 1]);
        assert_eq!(g.parse_word("s2 s1 s3 s2").unwrap(), vec![1, 0, 2, 1]);
        assert_eq!(WeylSubgroup::format_word(&[1, 0, 2, 1]), "s2 s1 s3 s2");
        assert!(g.parse_word("s4").is_err());
    }
}

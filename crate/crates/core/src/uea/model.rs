//! `M̃(λ,ζ) = Λ(g₋₁) ⊗ C[h̄]v` with an explicit action of every generator.
//!
//! The bottom layer `C[h̄]v` is the Whittaker module of the even part with
//! `e·v = a v` and Casimir `Ω = 4fe + h̄² + 2h̄` acting by `b`:
//!
//! ```text
//! e·p(h̄)v = a p(h̄−2)v,   f·p(h̄)v = p(h̄+2) (b − h̄² − 2h̄)/(4a) v.
//! ```
//!
//! The rest of the even part is central on the bottom layer, `g₁` kills it,
//! and a generator `x` acts on `F·R` (`F ∈ g₋₁`) by
//! `x·F·R = [x,F]·R + (−1)^{|x|} F·(x·R)`.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use super::coeff::{Coeff, Laurent};
use super::structure::{GenKind, SuperStructure, UeaElement};
use crate::rational::{fmt_q, half, q, qf};
use crate::rootdata::{AlgebraKind, Weight};
use crate::{Error, Result, Q};

/// Polynomial in `h̄`, lowest degree first.
#[derive(Debug, Clone, PartialEq)]
pub struct HPoly<C>(pub Vec<C>);

impl<C: Coeff> HPoly<C> {
    pub fn zero() -> Self {
        HPoly(Vec::new())
    }

    pub fn constant(c: C) -> Self {
        let mut p = HPoly(vec![c]);
        p.trim();
        p
    }

    /// `h̄^k`.
    pub fn monomial(k: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        v[k] = C::one();
        HPoly(v)
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, k: usize) -> C {
        self.0.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn add(&self, o: &HPoly<C>) -> HPoly<C> {
        let n = self.0.len().max(o.0.len());
        let mut p = HPoly((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect());
        p.trim();
        p
    }

    pub fn scale(&self, c: &C) -> HPoly<C> {
        let mut p = HPoly(self.0.iter().map(|x| x.clone() * c.clone()).collect());
        p.trim();
        p
    }

    pub fn mul(&self, o: &HPoly<C>) -> HPoly<C> {
        if self.is_zero() || o.is_zero() {
            return HPoly::zero();
        }
        let mut v = vec![C::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        let mut p = HPoly(v);
        p.trim();
        p
    }

    /// `p(h̄ + s)`.
    pub fn shift(&self, s: &Q) -> HPoly<C> {
        let lin = HPoly(vec![C::from_q(s), C::one()]);
        let mut out = HPoly::zero();
        for c in self.0.iter().rev() {
            out = out.mul(&lin).add(&HPoly::constant(c.clone()));
        }
        out
    }
}

impl<C: Coeff> fmt::Display for HPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let compound = cs[1..].contains([' ', '+']) || cs[1..].contains(" - ");
            let var = match k {
                0 => String::new(),
                1 => "h".into(),
                _ => format!("h^{k}"),
            };
            let term = if k == 0 {
                cs
            } else if c.is_one() {
                var
            } else if cs == "-1" {
                format!("-{var}")
            } else if compound {
                format!("({cs}){var}")
            } else {
                format!("{cs}{var}")
            };
            parts.push(term);
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

/// A module element: one polynomial per exterior monomial `F_S`, indexed by
/// the bitmask of `S`.
#[derive(Debug, Clone, PartialEq)]
pub struct Elem<C> {
    pub comps: Vec<HPoly<C>>,
}

impl<C: Coeff> Elem<C> {
    pub fn zero(d: usize) -> Self {
        Elem { comps: vec![HPoly::zero(); 1 << d] }
    }

    pub fn basis(d: usize, mask: usize, p: HPoly<C>) -> Self {
        let mut e = Self::zero(d);
        e.comps[mask] = p;
        e
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(HPoly::is_zero)
    }

    pub fn add(&self, o: &Elem<C>) -> Elem<C> {
        Elem { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a.add(b)).collect() }
    }

    pub fn sub(&self, o: &Elem<C>) -> Elem<C> {
        self.add(&o.scale(&-C::one()))
    }

    pub fn scale(&self, c: &C) -> Elem<C> {
        Elem { comps: self.comps.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn max_degree(&self) -> usize {
        self.comps.iter().map(|p| p.0.len().saturating_sub(1)).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModelKind {
    Gl12,
    Pe2,
}

/// Bottom-layer behaviour of one generator.
#[derive(Debug, Clone)]
enum Bottom<C> {
    /// Multiplication by `s + k h̄`.
    Lin(C, C),
    Raise,
    Lower,
    Kill,
    Wedge(usize),
}

/// Parameters `a = ζ(e)`, `b = χ(Ω)`, `c = χ(z)` and `t`, the value of the
/// central element `E22+E33` (resp. `H1+H2`).
#[derive(Debug, Clone, PartialEq)]
pub struct Params<C> {
    pub a: C,
    pub b: C,
    pub c: C,
    pub t: C,
}

#[derive(Debug, Clone)]
pub struct ActionModel<C> {
    pub structure: SuperStructure,
    pub kind: ModelKind,
    pub params: Params<C>,
    pub lambda: Option<Weight>,
    inv4a: C,
    lower: Vec<usize>,
    bottom: Vec<Bottom<C>>,
}

/// `(a, b, c, t)` for a weight: `b = m(m+2)` with `m` the `h̄`-weight,
/// `c = λ₁ + (λ₂+λ₃)/2` for `gl(1|2)`.
pub fn params_of_weight(kind: ModelKind, lambda: &Weight, a: Q) -> Params<Q> {
    let l = &lambda.coords;
    match kind {
        ModelKind::Gl12 => {
            let m = &l[1] - &l[2];
            let t = &l[1] + &l[2];
            Params { a, b: &m * (&m + q(2)), c: &l[0] + &t * half(), t }
        }
        ModelKind::Pe2 => {
            let m = &l[0] - &l[1];
            Params { a, b: &m * (&m + q(2)), c: Q::zero(), t: &l[0] + &l[1] }
        }
    }
}

impl ActionModel<Q> {
    /// `M̃(λ,ζ)` with `ζ(e) = a`.
    pub fn from_weight(kind: &AlgebraKind, lambda: &Weight, a: Q) -> Result<Self> {
        let mk = match kind {
            AlgebraKind::Gl { m: 1, n: 2 } => ModelKind::Gl12,
            AlgebraKind::Pe { n: 2 } => ModelKind::Pe2,
            other => return Err(Error::Precondition(format!("no explicit model for {other}"))),
        };
        if lambda.rank() != kind.rank() {
            return Err(Error::RankMismatch { expected: kind.rank(), got: lambda.rank() });
        }
        symbolic_model_verified(mk)?;
        let mut m = Self::new_unchecked(structure_of(mk), mk, params_of_weight(mk, lambda, a))?;
        m.lambda = Some(lambda.clone());
        Ok(m)
    }
}

fn structure_of(kind: ModelKind) -> SuperStructure {
    match kind {
        ModelKind::Gl12 => SuperStructure::gl12(),
        ModelKind::Pe2 => SuperStructure::pe2(),
    }
}

/// The relations checked once over the Laurent ring in `(a, b, c, t)`, which
/// covers every specialization with `a ≠ 0`.
pub fn symbolic_model_verified(kind: ModelKind) -> Result<()> {
    static GL12: OnceLock<Result<()>> = OnceLock::new();
    static PE2: OnceLock<Result<()>> = OnceLock::new();
    let cell = match kind {
        ModelKind::Gl12 => &GL12,
        ModelKind::Pe2 => &PE2,
    };
    cell.get_or_init(|| ActionModel::symbolic(kind).map(|_| ())).clone()
}

impl ActionModel<Laurent> {
    /// `gl(1|2)` over Laurent polynomials in `a, b, c, t`.
    pub fn symbolic_gl12() -> Result<Self> {
        Self::symbolic(ModelKind::Gl12)
    }

    pub fn symbolic(kind: ModelKind) -> Result<Self> {
        Self::new(structure_of(kind), kind, Self::symbolic_params())
    }

    pub fn symbolic_params() -> Params<Laurent> {
        Params { a: Laurent::a(), b: Laurent::b(), c: Laurent::c(), t: Laurent::t() }
    }
}

impl<C: Coeff> ActionModel<C> {
    /// Builds the model and checks every supercommutation relation.
    pub fn new(s: SuperStructure, kind: ModelKind, params: Params<C>) -> Result<Self> {
        let m = Self::new_unchecked(s, kind, params)?;
        m.check_relations(2)?;
        Ok(m)
    }

    pub fn new_unchecked(s: SuperStructure, kind: ModelKind, params: Params<C>) -> Result<Self> {
        if params.a.is_zero() {
            return Err(Error::Precondition("ζ(e) must be nonzero".into()));
        }
        let inv4a = params
            .a
            .inverse()
            .ok_or_else(|| Error::Precondition(format!("{} is not invertible", params.a)))?
            .scale(&qf(1, 4));
        let lower = s.of_kind(GenKind::LowerOdd);
        let hlf = C::from_q(&half());
        let t2 = params.t.clone() * hlf.clone();
        let mut bottom = Vec::new();
        for (i, g) in s.gens().iter().enumerate() {
            let b = match (g.kind, g.name.as_str()) {
                (GenKind::LowerOdd, _) => Bottom::Wedge(lower.iter().position(|&x| x == i).expect("listed")),
                (GenKind::RaiseOdd, _) => Bottom::Kill,
                (GenKind::RaiseEven, _) => Bottom::Raise,
                (GenKind::LowerEven, _) => Bottom::Lower,
                (GenKind::Cartan, "E11") => Bottom::Lin(params.c.clone() - t2.clone(), C::zero()),
                (GenKind::Cartan, "E22" | "H1") => Bottom::Lin(t2.clone(), hlf.clone()),
                (GenKind::Cartan, "E33" | "H2") => Bottom::Lin(t2.clone(), -hlf.clone()),
                (_, name) => return Err(Error::Precondition(format!("unexpected generator {name}"))),
            };
            bottom.push(b);
        }
        Ok(ActionModel { structure: s, kind, params, lambda: None, inv4a, lower, bottom })
    }

    /// `d = dim g₋₁`.
    pub fn odd_rank(&self) -> usize {
        self.lower.len()
    }

    pub fn rank(&self) -> usize {
        1 << self.lower.len()
    }

    pub fn gen(&self, name: &str) -> usize {
        self.structure.idx(name)
    }

    /// `h̄^k v`.
    pub fn cyclic(&self, k: usize) -> Elem<C> {
        Elem::basis(self.odd_rank(), 0, HPoly::monomial(k))
    }

    fn wedge(&self, j: usize, mask: usize, p: &HPoly<C>) -> Elem<C> {
        let d = self.odd_rank();
        if mask & (1 << j) != 0 {
            return Elem::zero(d);
        }
        let before = (mask & ((1 << j) - 1)).count_ones();
        let p = if before % 2 == 1 { p.scale(&-C::one()) } else { p.clone() };
        Elem::basis(d, mask | (1 << j), p)
    }

    fn wedge_elem(&self, j: usize, m: &Elem<C>) -> Elem<C> {
        let mut out = Elem::zero(self.odd_rank());
        for (mask, p) in m.comps.iter().enumerate() {
            if !p.is_zero() {
                out = out.add(&self.wedge(j, mask, p));
            }
        }
        out
    }

    fn act_bottom(&self, x: usize, p: &HPoly<C>) -> Elem<C> {
        let d = self.odd_rank();
        let poly = match &self.bottom[x] {
            Bottom::Lin(s, k) => p.mul(&HPoly(vec![s.clone(), k.clone()])),
            Bottom::Raise => p.shift(&q(-2)).scale(&self.params.a),
            Bottom::Lower => {
                let cas = HPoly(vec![self.params.b.clone(), C::from_q(&q(-2)), -C::one()]);
                p.shift(&q(2)).mul(&cas).scale(&self.inv4a)
            }
            Bottom::Kill => HPoly::zero(),
            Bottom::Wedge(j) => return self.wedge(*j, 0, p),
        };
        Elem::basis(d, 0, poly)
    }

    fn act_basis(&self, x: usize, mask: usize, p: &HPoly<C>) -> Elem<C> {
        if p.is_zero() {
            return Elem::zero(self.odd_rank());
        }
        if let Bottom::Wedge(j) = self.bottom[x] {
            return self.wedge(j, mask, p);
        }
        if mask == 0 {
            return self.act_bottom(x, p);
        }
        let j = mask.trailing_zeros() as usize;
        let rest = Elem::basis(self.odd_rank(), mask & !(1 << j), p.clone());
        let mut out = Elem::zero(self.odd_rank());
        for (g, k) in self.structure.bracket(x, self.lower[j]) {
            out = out.add(&self.act(*g, &rest).scale(&C::from_q(k)));
        }
        let inner = self.wedge_elem(j, &self.act(x, &rest));
        if self.structure.is_odd(x) {
            out.sub(&inner)
        } else {
            out.add(&inner)
        }
    }

    /// `x·m` for the generator with index `x`.
    pub fn act(&self, x: usize, m: &Elem<C>) -> Elem<C> {
        let mut out = Elem::zero(self.odd_rank());
        for (mask, p) in m.comps.iter().enumerate() {
            if !p.is_zero() {
                out = out.add(&self.act_basis(x, mask, p));
            }
        }
        out
    }

    /// Applies a word, rightmost letter first.
    pub fn act_word(&self, word: &[usize], m: &Elem<C>) -> Elem<C> {
        word.iter().rev().fold(m.clone(), |acc, &g| self.act(g, &acc))
    }

    pub fn act_uea(&self, u: &UeaElement, m: &Elem<C>) -> Elem<C> {
        let mut out = Elem::zero(self.odd_rank());
        for (w, c) in &u.terms {
            out = out.add(&self.act_word(w, m).scale(&C::from_q(c)));
        }
        out
    }

    /// Every relation `xy − (−1)^{|x||y|}yx = [x,y]` on the elements
    /// `F_S h̄^k v` with `k ≤ max_deg`.
    pub fn check_relations(&self, max_deg: usize) -> Result<()> {
        let n = self.structure.len();
        for mask in 0..self.rank() {
            for k in 0..=max_deg {
                let m = Elem::basis(self.odd_rank(), mask, HPoly::monomial(k));
                let single: Vec<Elem<C>> = (0..n).map(|x| self.act(x, &m)).collect();
                for x in 0..n {
                    for y in 0..n {
                        let xy = self.act(x, &single[y]);
                        let yx = self.act(y, &single[x]);
                        let lhs = xy.sub(&yx.scale(&C::from_q(&self.structure.swap_sign(x, y))));
                        let mut rhs = Elem::zero(self.odd_rank());
                        for (g, c) in self.structure.bracket(x, y) {
                            rhs = rhs.add(&single[*g].scale(&C::from_q(c)));
                        }
                        if lhs != rhs {
                            let names = self.structure.gens();
                            return Err(Error::Precondition(format!(
                                "relation [{},{}] fails on {}",
                                names[x].name,
                                names[y].name,
                                self.format(&m)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Text form such as `F21^1 F31^0 ⊗ (h^2 - 2h)`, one term per layer.
    pub fn format(&self, m: &Elem<C>) -> String {
        let names: Vec<&str> = self.lower.iter().map(|&g| self.structure.gens()[g].name.as_str()).collect();
        let mut parts = Vec::new();
        for (mask, p) in m.comps.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let mono: Vec<String> =
                names.iter().enumerate().map(|(j, n)| format!("{n}^{}", (mask >> j) & 1)).collect();
            parts.push(format!("{} ⊗ ({p})", mono.join(" ")));
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelKind::Gl12 => write!(f, "gl(1|2)"),
            ModelKind::Pe2 => write!(f, "pe(2)"),
        }
    }
}

/// Printable parameter summary.
pub fn describe_params(p: &Params<Q>) -> String {
    format!("a={} b={} c={} t={}", fmt_q(&p.a), fmt_q(&p.b), fmt_q(&p.c), fmt_q(&p.t))
}

//! Whittaker characters, standard Whittaker modules `M̃(λ,ζ)` and their
//! composition multiplicities.
//!
//! A character `ζ` is stored by its values on the even simple root vectors.
//! Its support `Φ_ζ` determines the Levi `l_ζ`, the group `W_ζ` and the
//! nilradical `n_ζ`. The simple quotients are `L̃(λ,ζ)`, with
//! `L̃(λ,ζ) ≅ L̃(μ,ζ)` iff `W_ζ·λ = W_ζ·μ`, and
//!
//! ```text
//! [M̃(λ,ζ) : L̃(μ,ζ)] = Σ_ν [M̃(λ) : L̃(ν)]
//! ```
//!
//! over `n_ζ`-antidominant `ν` with `μ ∈ W_ζ·ν`.

pub mod gl12;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::klpoly::verma_factors_even;
use crate::rational::{fmt_q, is_int, parse_q, q, to_i64};
use crate::rootdata::{AlgebraKind, RootSystem, Weight};
use crate::weylgroup::{full_weyl_group, is_antidominant, leq_weights, orbit, parabolic_subgroup};
use crate::{Error, Result, WeylSubgroup, Q};

/// A result that may lie outside the supported range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Known(T),
    Unsupported(String),
}

impl<T> Outcome<T> {
    pub fn known(self) -> Option<T> {
        match self {
            Outcome::Known(t) => Some(t),
            Outcome::Unsupported(_) => None,
        }
    }

    pub fn is_supported(&self) -> bool {
        matches!(self, Outcome::Known(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Known(t) => Outcome::Known(f(t)),
            Outcome::Unsupported(s) => Outcome::Unsupported(s),
        }
    }

    pub fn unwrap(self) -> T {
        match self {
            Outcome::Known(t) => t,
            Outcome::Unsupported(s) => panic!("unsupported: {s}"),
        }
    }
}

pub type Multiplicity = Outcome<u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhittakerCharacter {
    algebra: AlgebraKind,
    num_simple: usize,
    values: BTreeMap<usize, Q>,
}

impl WhittakerCharacter {
    /// `ζ` from its nonzero values, keyed by even simple root index (0-based).
    pub fn new(rs: &RootSystem, values: &[(usize, Q)]) -> Result<Self> {
        let num_simple = rs.simple_roots_even.len();
        let mut map = BTreeMap::new();
        for (i, v) in values {
            if *i >= num_simple {
                return Err(Error::NotSimpleRoot(*i));
            }
            if !v.is_zero() {
                map.insert(*i, v.clone());
            }
        }
        Ok(WhittakerCharacter { algebra: rs.algebra.clone(), num_simple, values: map })
    }

    pub fn zero(rs: &RootSystem) -> Self {
        Self::new(rs, &[]).expect("empty")
    }

    /// Nonzero on every even simple root.
    pub fn regular(rs: &RootSystem) -> Self {
        let v: Vec<(usize, Q)> = (0..rs.simple_roots_even.len()).map(|i| (i, q(1))).collect();
        Self::new(rs, &v).expect("in range")
    }

    /// Parses `"i:v,j:w"` with 1-based simple root indices; `""` or `"0"` is
    /// the zero character.
    pub fn parse(rs: &RootSystem, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::zero(rs));
        }
        let mut vals = Vec::new();
        for part in s.split(',') {
            let (i, v) = part
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected index:value, got {part:?}")))?;
            let i: usize = i.trim().parse().map_err(|_| Error::Parse(format!("bad root index {i:?}")))?;
            if i == 0 {
                return Err(Error::NotSimpleRoot(0));
            }
            vals.push((i - 1, parse_q(v.trim())?));
        }
        Self::new(rs, &vals)
    }

    pub fn algebra(&self) -> &AlgebraKind {
        &self.algebra
    }

    pub fn value(&self, i: usize) -> Q {
        self.values.get(&i).cloned().unwrap_or_default()
    }

    /// Indices of `Φ_ζ`.
    pub fn support(&self) -> Vec<usize> {
        self.values.keys().copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_regular(&self) -> bool {
        self.values.len() == self.num_simple
    }

    pub fn w_zeta(&self, rs: &RootSystem) -> WeylSubgroup {
        parabolic_subgroup(rs, &self.support())
    }

    pub fn to_json(&self) -> Value {
        let m: serde_json::Map<String, Value> =
            self.values.iter().map(|(i, v)| ((i + 1).to_string(), Value::String(fmt_q(v)))).collect();
        Value::Object(m)
    }
}

impl fmt::Display for WhittakerCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.values.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.values.iter().map(|(i, v)| format!("{}:{}", i + 1, fmt_q(v))).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WhittakerParam {
    pub lambda: Weight,
    pub zeta: WhittakerCharacter,
}

impl WhittakerParam {
    pub fn new(rs: &RootSystem, lambda: Weight, zeta: WhittakerCharacter) -> Result<Self> {
        rs.check_weight(&lambda)?;
        if zeta.algebra != rs.algebra {
            return Err(Error::AlgebraMismatch(zeta.algebra.to_string(), rs.algebra.to_string()));
        }
        Ok(WhittakerParam { lambda, zeta })
    }
}

/// Factors of `M̃(λ,ζ)` keyed by canonical orbit representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSeries {
    pub factors: BTreeMap<Weight, u64>,
}

impl CompositionSeries {
    pub fn length(&self) -> u64 {
        self.factors.values().sum()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.factors.iter().map(|(w, m)| json!({"rep": w.to_json(), "mult": m})).collect(),
        )
    }
}

/// The JSON record of a composition series query.
pub fn series_json(p: &WhittakerParam, series: &Outcome<CompositionSeries>) -> Value {
    match series {
        Outcome::Known(s) => json!({
            "lambda": p.lambda.to_json(),
            "zeta": p.zeta.to_json(),
            "factors": s.to_json(),
            "status": "ok",
        }),
        Outcome::Unsupported(why) => json!({
            "lambda": p.lambda.to_json(),
            "zeta": p.zeta.to_json(),
            "factors": [],
            "status": "unsupported",
            "reason": why,
        }),
    }
}

/// `n_ζ`-antidominant: antidominant for the Levi of `Φ_ζ`.
pub fn is_nzeta_antidominant(rs: &RootSystem, zeta: &WhittakerCharacter, nu: &Weight) -> bool {
    is_antidominant(rs, nu, &zeta.support())
}

/// The least (in coordinate order) `n_ζ`-antidominant weight of `W_ζ·λ`.
pub fn canonical_rep(rs: &RootSystem, zeta: &WhittakerCharacter, lambda: &Weight) -> Weight {
    let g = zeta.w_zeta(rs);
    orbit(rs, &g, lambda)
        .into_iter()
        .find(|w| is_nzeta_antidominant(rs, zeta, w))
        .expect("every dot-orbit of a finite Weyl group has an antidominant point")
}

pub fn same_simple(rs: &RootSystem, p: &WhittakerParam, q: &WhittakerParam) -> Result<bool> {
    if p.zeta != q.zeta {
        return Err(Error::Precondition("parameters have different characters".into()));
    }
    Ok(orbit(rs, &p.zeta.w_zeta(rs), &p.lambda).contains(&q.lambda))
}

fn is_gl12(rs: &RootSystem) -> bool {
    rs.algebra == AlgebraKind::gl(1, 2)
}

/// All composition factors `(ν, [M̃(λ):L̃(ν)])` of the Verma module `M̃(λ)`.
pub fn verma_factors_super(rs: &RootSystem, lambda: &Weight) -> Result<Outcome<Vec<(Weight, u64)>>> {
    rs.check_weight(lambda)?;
    if rs.algebra.is_even_part() || rs.is_typical(lambda)? {
        return Ok(Outcome::Known(verma_factors_even(rs, lambda)?));
    }
    if !is_gl12(rs) {
        return Ok(Outcome::Unsupported(format!("atypical weight {lambda} of {}", rs.algebra)));
    }
    if let Some((label, t)) = gl12::locate(lambda) {
        let factors = gl12::verma_factors(label).into_iter().map(|l| (gl12::place(l, &t), 1)).collect();
        return Ok(Outcome::Known(factors));
    }
    let alpha = rs.atypical_roots(lambda)?;
    debug_assert_eq!(alpha.len(), 1);
    Ok(Outcome::Known(vec![(lambda.clone(), 1), (lambda.sub(&alpha[0]), 1)]))
}

/// `[M̃(λ) : L̃(μ)]`.
pub fn verma_multiplicity_super(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<Multiplicity> {
    rs.check_weight(mu)?;
    Ok(verma_factors_super(rs, lambda)?
        .map(|f| f.into_iter().find(|(w, _)| w == mu).map_or(0, |(_, m)| m)))
}

/// All factors of `M̃(λ,ζ)`.
pub fn composition_series(rs: &RootSystem, p: &WhittakerParam) -> Result<Outcome<CompositionSeries>> {
    let verma = match verma_factors_super(rs, &p.lambda)? {
        Outcome::Known(v) => v,
        Outcome::Unsupported(s) => return Ok(Outcome::Unsupported(s)),
    };
    let mut factors = BTreeMap::new();
    for (nu, m) in verma {
        if is_nzeta_antidominant(rs, &p.zeta, &nu) {
            *factors.entry(canonical_rep(rs, &p.zeta, &nu)).or_insert(0) += m;
        }
    }
    Ok(Outcome::Known(CompositionSeries { factors }))
}

/// `[M̃(λ,ζ) : L̃(μ,ζ)]`.
pub fn whittaker_multiplicity(rs: &RootSystem, p: &WhittakerParam, mu: &Weight) -> Result<Multiplicity> {
    rs.check_weight(mu)?;
    let key = canonical_rep(rs, &p.zeta, mu);
    Ok(composition_series(rs, p)?.map(|s| s.factors.get(&key).copied().unwrap_or(0)))
}

/// Whether `M̃(λ,ζ)` is simple.
pub fn is_standard_simple(rs: &RootSystem, p: &WhittakerParam) -> Result<Outcome<bool>> {
    rs.check_weight(&p.lambda)?;
    if rs.algebra.is_even_part() {
        return Err(Error::EvenPartGiven(rs.algebra.to_string()));
    }
    let all: Vec<usize> = (0..rs.simple_roots_even.len()).collect();
    if let AlgebraKind::Pe { .. } = rs.algebra {
        if is_antidominant(rs, &p.lambda, &all) || (p.zeta.is_regular() && rs.is_typical(&p.lambda)?) {
            return Ok(Outcome::Known(true));
        }
        return Ok(Outcome::Unsupported("pe(n): only the sufficient conditions are known".into()));
    }
    if !rs.is_typical(&p.lambda)? {
        return Ok(Outcome::Known(false));
    }
    let lower = orbit(rs, &full_weyl_group(rs), &p.lambda)
        .into_iter()
        .filter(|nu| is_nzeta_antidominant(rs, &p.zeta, nu) && leq_weights(rs, nu, &p.lambda))
        .count();
    Ok(Outcome::Known(lower == 1))
}

/// For atypical `gl(1|2)` parameters: `λ ∈ W·(μ + kα)` for an integer `k`,
/// `α` the atypical odd root of `μ`.
pub fn block_link(rs: &RootSystem, p: &WhittakerParam, q: &WhittakerParam) -> Result<bool> {
    if !is_gl12(rs) {
        return Err(Error::Precondition(format!("block_link needs gl(1|2), got {}", rs.algebra)));
    }
    if p.zeta != q.zeta {
        return Err(Error::Precondition("parameters have different characters".into()));
    }
    if rs.is_typical(&p.lambda)? || rs.is_typical(&q.lambda)? {
        return Err(Error::Precondition("block_link needs atypical weights".into()));
    }
    let alpha = rs.atypical_roots(&q.lambda)?.remove(0);
    let i = alpha.coords.iter().position(|c| !c.is_zero()).expect("nonzero root");
    Ok(orbit(rs, &full_weyl_group(rs), &p.lambda).iter().any(|nu| {
        let d = nu.sub(&q.lambda);
        let k = &d.coords[i] / &alpha.coords[i];
        is_int(&k) && d == alpha.scale(&k) && to_i64(&k).is_some()
    }))
}

//! Root systems, weights and typicality for `gl(m|n)`, `osp(2|2n)`, `pe(n)`
//! and their even parts.
//!
//! Weights are coordinate vectors in the ε-basis of `h*`:
//!
//! * `gl(m|n)`: `(ε_1, …, ε_m | ε_{m+1}, …, ε_{m+n})`;
//! * `osp(2|2n)`: `(ε | δ_1, …, δ_n)`;
//! * `pe(n)`: `(ε_1, …, ε_n)`, dual to `H_i = E_{i,i} − E_{n+i,n+i}`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{fmt_q, half, parse_q, q, Q};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum AlgebraKind {
    Gl { m: usize, n: usize },
    /// `osp(2|2n)`.
    Osp { n: usize },
    Pe { n: usize },
    Even { of: Box<AlgebraKind> },
}

impl AlgebraKind {
    pub fn gl(m: usize, n: usize) -> Self {
        AlgebraKind::Gl { m, n }
    }

    pub fn osp(n: usize) -> Self {
        AlgebraKind::Osp { n }
    }

    pub fn pe(n: usize) -> Self {
        AlgebraKind::Pe { n }
    }

    pub fn even_part(&self) -> Self {
        match self {
            AlgebraKind::Even { .. } => self.clone(),
            k => AlgebraKind::Even { of: Box::new(k.clone()) },
        }
    }

    /// The superalgebra underneath (itself unless this is an even part).
    pub fn base(&self) -> &AlgebraKind {
        match self {
            AlgebraKind::Even { of } => of.base(),
            k => k,
        }
    }

    pub fn is_even_part(&self) -> bool {
        matches!(self, AlgebraKind::Even { .. })
    }

    pub fn rank(&self) -> usize {
        match self.base() {
            AlgebraKind::Gl { m, n } => m + n,
            AlgebraKind::Osp { n } => n + 1,
            AlgebraKind::Pe { n } => *n,
            AlgebraKind::Even { .. } => unreachable!(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            AlgebraKind::Gl { m, n } if *m >= 1 && *n >= 1 => Ok(()),
            AlgebraKind::Osp { n } | AlgebraKind::Pe { n } if *n >= 1 => Ok(()),
            AlgebraKind::Even { of } if !of.is_even_part() => of.validate(),
            k => Err(Error::InvalidAlgebra(k.to_string())),
        }
    }

    /// Parses the CLI form: `gl,1,2`, `osp,2`, `pe,2`, optionally prefixed
    /// by `even:`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("even:") {
            let k = Self::parse(rest)?.even_part();
            k.validate()?;
            return Ok(k);
        }
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::Parse(format!("bad algebra spec {s:?}")))
        };
        let k = match parts[0].to_ascii_lowercase().as_str() {
            "gl" if parts.len() == 3 => AlgebraKind::gl(num(1)?, num(2)?),
            "osp" if parts.len() == 2 => AlgebraKind::osp(num(1)?),
            "pe" | "p" if parts.len() == 2 => AlgebraKind::pe(num(1)?),
            _ => return Err(Error::Parse(format!("bad algebra spec {s:?}"))),
        };
        k.validate()?;
        Ok(k)
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraKind::Gl { m, n } => write!(f, "gl({m}|{n})"),
            AlgebraKind::Osp { n } => write!(f, "osp(2|{})", 2 * n),
            AlgebraKind::Pe { n } => write!(f, "pe({n})"),
            AlgebraKind::Even { of } => write!(f, "{of}_0"),
        }
    }
}

/// A weight in the ε-coordinates of its algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    pub coords: Vec<Q>,
}

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight { coords }
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Weight::new(xs.iter().map(|&x| q(x)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight::new(vec![Q::zero(); rank])
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.coords[i] = Q::one();
        w
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: &Q) -> Weight {
        Weight::new(self.coords.iter().map(|a| a * c).collect())
    }

    /// Euclidean dot product of coordinates.
    pub fn dot(&self, other: &Weight) -> Q {
        self.coords.iter().zip(&other.coords).map(|(a, b)| a * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('[').trim_end_matches(']');
        if s.trim().is_empty() {
            return Ok(Weight::new(vec![]));
        }
        s.split(',').map(|t| parse_q(t.trim().trim_matches('"'))).collect::<Result<Vec<_>>>().map(Weight::new)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coords.iter().map(fmt_q).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::from(self.to_strings())
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("weight must be a JSON array".into()))?;
        arr.iter()
            .map(|x| match x {
                serde_json::Value::String(s) => parse_q(s),
                serde_json::Value::Number(n) => parse_q(&n.to_string()),
                _ => Err(Error::Parse(format!("bad weight entry {x}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight::new)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(","))
    }
}

/// Euclidean coroot pairing `⟨x, α∨⟩ = 2(x, α)/(α, α)`.
pub fn coroot_pairing(x: &Weight, alpha: &Weight) -> Q {
    q(2) * x.dot(alpha) / alpha.dot(alpha)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    pub weight: Weight,
    pub parity: Parity,
}

impl Root {
    fn new(coords: Vec<i64>, parity: Parity) -> Self {
        Root { weight: Weight::from_ints(&coords), parity }
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub algebra: AlgebraKind,
    pub simple_roots_even: Vec<Root>,
    pub positive_even: Vec<Root>,
    pub positive_odd: Vec<Root>,
    /// Odd roots that are not positive. For `gl`/`osp` these are the negatives
    /// of `positive_odd`; for `pe(n)` they are the `−ε_i−ε_j`, `i < j`.
    pub negative_odd: Vec<Root>,
    pub rho: Weight,
    pub rho_even: Weight,
    pub form_signature: Vec<i8>,
}

fn root_diff(rank: usize, i: usize, j: usize, sign_j: i64, parity: Parity) -> Root {
    let mut c = vec![0i64; rank];
    c[i] += 1;
    c[j] += sign_j;
    Root::new(c, parity)
}

/// Builds the full root data of `kind`.
pub fn build_algebra(kind: &AlgebraKind) -> Result<RootSystem> {
    kind.validate()?;
    let rank = kind.rank();
    let mut simple = Vec::new();
    let mut pos_even = Vec::new();
    let mut pos_odd = Vec::new();
    let mut neg_odd = Vec::new();
    let signature: Vec<i8>;
    match kind.base() {
        AlgebraKind::Gl { m, n } => {
            let (m, n) = (*m, *n);
            for block in [0..m, m..m + n] {
                for i in block.clone() {
                    if i + 1 < block.end {
                        simple.push(root_diff(rank, i, i + 1, -1, Parity::Even));
                    }
                    for j in i + 1..block.end {
                        pos_even.push(root_diff(rank, i, j, -1, Parity::Even));
                    }
                }
            }
            for i in 0..m {
                for j in m..m + n {
                    pos_odd.push(root_diff(rank, i, j, -1, Parity::Odd));
                    neg_odd.push(root_diff(rank, j, i, -1, Parity::Odd));
                }
            }
            signature = (0..rank).map(|i| if i < m { 1 } else { -1 }).collect();
        }
        AlgebraKind::Osp { n } => {
            let n = *n;
            // coordinate 0 is ε, coordinates 1..=n are δ_1..δ_n
            for i in 1..=n {
                if i < n {
                    simple.push(root_diff(rank, i, i + 1, -1, Parity::Even));
                }
                for j in i + 1..=n {
                    pos_even.push(root_diff(rank, i, j, -1, Parity::Even));
                    pos_even.push(root_diff(rank, i, j, 1, Parity::Even));
                }
                let mut c = vec![0; rank];
                c[i] = 2;
                pos_even.push(Root::new(c, Parity::Even));
            }
            let mut c = vec![0; rank];
            c[n] = 2;
            simple.push(Root::new(c, Parity::Even));
            for k in 1..=n {
                for s in [-1, 1] {
                    pos_odd.push(root_diff(rank, 0, k, s, Parity::Odd));
                    let mut c = vec![0; rank];
                    c[0] = -1;
                    c[k] = -s;
                    neg_odd.push(Root::new(c, Parity::Odd));
                }
            }
            signature = (0..rank).map(|i| if i == 0 { 1 } else { -1 }).collect();
        }
        AlgebraKind::Pe { n } => {
            let n = *n;
            for i in 0..n {
                if i + 1 < n {
                    simple.push(root_diff(rank, i, i + 1, -1, Parity::Even));
                }
                for j in i + 1..n {
                    pos_even.push(root_diff(rank, i, j, -1, Parity::Even));
                }
                for j in i..n {
                    let mut c = vec![0; rank];
                    c[i] += 1;
                    c[j] += 1;
                    pos_odd.push(Root::new(c, Parity::Odd));
                    if j > i {
                        let mut c = vec![0; rank];
                        c[i] = -1;
                        c[j] = -1;
                        neg_odd.push(Root::new(c, Parity::Odd));
                    }
                }
            }
            signature = vec![1; rank];
        }
        AlgebraKind::Even { .. } => unreachable!(),
    }
    let sum = |roots: &[Root]| roots.iter().fold(Weight::zero(rank), |acc, r| acc.add(&r.weight));
    let rho_even = sum(&pos_even).scale(&half());
    let (rho, signature, pos_odd, neg_odd) = if kind.is_even_part() {
        (rho_even.clone(), vec![1; rank], vec![], vec![])
    } else {
        (rho_even.sub(&sum(&pos_odd).scale(&half())), signature, pos_odd, neg_odd)
    };
    Ok(RootSystem {
        algebra: kind.clone(),
        simple_roots_even: simple,
        positive_even: pos_even,
        positive_odd: pos_odd,
        negative_odd: neg_odd,
        rho,
        rho_even,
        form_signature: signature,
    })
}

impl RootSystem {
    pub fn rank(&self) -> usize {
        self.algebra.rank()
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), got: w.rank() });
        }
        Ok(())
    }

    pub fn all_roots(&self) -> Vec<Root> {
        let neg = |r: &Root| Root { weight: r.weight.scale(&q(-1)), parity: r.parity };
        let mut out: Vec<Root> = self.positive_even.clone();
        out.extend(self.positive_even.iter().map(neg));
        out.extend(self.positive_odd.iter().cloned());
        out.extend(self.negative_odd.iter().cloned());
        out
    }

    pub fn odd_roots(&self) -> Vec<Root> {
        self.positive_odd.iter().chain(&self.negative_odd).cloned().collect()
    }

    /// `Σ sign_i λ_i μ_i`: supersymmetric on `gl`/`osp`, Euclidean on even parts.
    pub fn bilinear_form(&self, lambda: &Weight, mu: &Weight) -> Result<Q> {
        self.check_weight(lambda)?;
        self.check_weight(mu)?;
        Ok(lambda
            .coords
            .iter()
            .zip(&mu.coords)
            .zip(&self.form_signature)
            .map(|((a, b), &s)| if s > 0 { a * b } else { -(a * b) })
            .sum())
    }

    /// Typicality: `(λ+ρ, α) ≠ 0` for all odd `α` on `gl`/`osp`; for `pe(n)`
    /// the product criterion `∏_{i≠j} (λ_i − λ_j + j − i − 1) ≠ 0`.
    pub fn is_typical(&self, lambda: &Weight) -> Result<bool> {
        self.check_weight(lambda)?;
        if self.algebra.is_even_part() {
            return Err(Error::EvenPartGiven(self.algebra.to_string()));
        }
        if let AlgebraKind::Pe { n } = self.algebra {
            let n = n as i64;
            return Ok((0..n).all(|i| {
                (0..n).filter(|&j| j != i).all(|j| {
                    let v = &lambda.coords[i as usize] - &lambda.coords[j as usize] + q(j - i - 1);
                    !v.is_zero()
                })
            }));
        }
        Ok(self.atypical_roots(lambda)?.is_empty())
    }

    /// Positive odd roots `α` with `(λ+ρ, α) = 0` (`gl`/`osp` only).
    pub fn atypical_roots(&self, lambda: &Weight) -> Result<Vec<Weight>> {
        if matches!(self.algebra, AlgebraKind::Pe { .. }) || self.algebra.is_even_part() {
            return Err(Error::Precondition(format!("no odd-root atypicality data for {}", self.algebra)));
        }
        let shifted = lambda.add(&self.rho);
        let mut out = Vec::new();
        for r in &self.positive_odd {
            if self.bilinear_form(&shifted, &r.weight)?.is_zero() {
                out.push(r.weight.clone());
            }
        }
        Ok(out)
    }

    /// Coefficients of `d` in the simple-root basis whose nonnegative integer
    /// span is the monoid generated by all positive roots (even and odd for a
    /// superalgebra, even only for an even part). `None` if `d` is not in the
    /// rational span.
    pub fn cone_coefficients(&self, d: &Weight) -> Option<Vec<Q>> {
        let c = &d.coords;
        let prefix = |range: std::ops::Range<usize>| -> Vec<Q> {
            let mut acc = Q::zero();
            range.map(|i| {
                acc += &c[i];
                acc.clone()
            })
            .collect()
        };
        let even = self.algebra.is_even_part();
        match self.algebra.base() {
            AlgebraKind::Gl { m, n } => {
                let (m, n) = (*m, *n);
                if even {
                    let mut a = prefix(0..m);
                    let b = prefix(m..m + n);
                    if !a[m - 1].is_zero() || !b[n - 1].is_zero() {
                        return None;
                    }
                    a.pop();
                    a.extend(b[..n - 1].iter().cloned());
                    Some(a)
                } else {
                    let mut a = prefix(0..m + n);
                    if !a.pop().unwrap().is_zero() {
                        return None;
                    }
                    Some(a)
                }
            }
            AlgebraKind::Pe { n } => {
                let n = *n;
                let mut a = prefix(0..n);
                let total = a.pop().unwrap();
                if even {
                    if !total.is_zero() {
                        return None;
                    }
                } else {
                    a.push(total * half());
                }
                Some(a)
            }
            AlgebraKind::Osp { n } => {
                let n = *n;
                let d0 = c[0].clone();
                if even && !d0.is_zero() {
                    return None;
                }
                let deltas = prefix(1..n + 1);
                let mut a = Vec::new();
                if !even {
                    a.push(d0.clone());
                }
                for k in 0..n - 1 {
                    a.push(&d0 + &deltas[k]);
                }
                a.push((&d0 + &deltas[n - 1]) * half());
                Some(a)
            }
            AlgebraKind::Even { .. } => unreachable!(),
        }
    }

    /// Positive even roots lying in the span of the even simple roots indexed
    /// by `subset` (the positive roots of the corresponding Levi).
    pub fn levi_positive_roots(&self, subset: &[usize]) -> Vec<Weight> {
        let gens: Vec<Weight> = subset.iter().map(|&i| self.simple_roots_even[i].weight.clone()).collect();
        self.positive_even.iter().map(|r| r.weight.clone()).filter(|r| in_span(&gens, r)).collect()
    }
}

/// Exact test of `v ∈ span(gens)` by Gaussian elimination.
pub fn in_span(gens: &[Weight], v: &Weight) -> bool {
    if gens.is_empty() {
        return v.is_zero();
    }
    let rank_of = |rows: &[Weight]| -> usize {
        let mut m: Vec<Vec<Q>> = rows.iter().map(|w| w.coords.clone()).collect();
        let cols = m.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..cols {
            let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
            m.swap(r, p);
            for i in 0..m.len() {
                if i != r && !m[i][c].is_zero() {
                    let f = &m[i][c] / &m[r][c];
                    for k in c..cols {
                        let t = &f * &m[r][k];
                        m[i][k] -= t;
                    }
                }
            }
            r += 1;
        }
        r
    };
    let mut all = gens.to_vec();
    let base = rank_of(&all);
    all.push(v.clone());
    rank_of(&all) == base
}

/// True when every coefficient is a nonnegative integer.
pub fn nonneg_integral(coeffs: &[Q]) -> bool {
    coeffs.iter().all(|c| c.is_integer() && !c.is_negative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    fn w(xs: &[i64]) -> Weight {
        Weight::from_ints(xs)
    }

    #[test]
    fn gl12_roots() {
        let rs = build_algebra(&AlgebraKind::gl(1, 2)).unwrap();
        let pe: Vec<_> = rs.positive_even.iter().map(|r| r.weight.clone()).collect();
        let po: Vec<_> = rs.positive_odd.iter().map(|r| r.weight.clone()).collect();
        assert_eq!(pe, vec![w(&[0, 1, -1])]);
        assert_eq!(po, vec![w(&[1, -1, 0]), w(&[1, 0, -1])]);
        assert_eq!(rs.rho, w(&[-1, 1, 0]));
        assert_eq!(rs.rho_even, Weight::new(vec![q(0), half(), -half()]));
    }

    #[test]
    fn pe2_roots() {
        let rs = build_algebra(&AlgebraKind::pe(2)).unwrap();
        assert_eq!(rs.simple_roots_even.len(), 1);
        assert_eq!(rs.simple_roots_even[0].weight, w(&[1, -1]));
        assert_eq!(rs.negative_odd.len(), 1);
        assert_eq!(rs.negative_odd[0].weight, w(&[-1, -1]));
        assert_eq!(rs.positive_odd.len(), 3);
    }

    #[test]
    fn osp_roots_counts() {
        let rs = build_algebra(&AlgebraKind::osp(2)).unwrap();
        // C_2: 4 positive roots, odd ±ε±δ_k: 4 positive
        assert_eq!(rs.positive_even.len(), 4);
        assert_eq!(rs.positive_odd.len(), 4);
        assert_eq!(rs.simple_roots_even.len(), 2);
        assert_eq!(rs.simple_roots_even[1].weight, w(&[0, 0, 2]));
        // ρ_0 = 2δ_1 + δ_2, ρ = ρ_0 − 2ε
        assert_eq!(rs.rho_even, w(&[0, 2, 1]));
        assert_eq!(rs.rho, w(&[-2, 2, 1]));
    }

    #[test]
    fn form_values() {
        let rs = build_algebra(&AlgebraKind::gl(1, 2)).unwrap();
        let e = |i| Weight::unit(3, i);
        assert_eq!(rs.bilinear_form(&e(0), &e(0)).unwrap(), q(1));
        assert_eq!(rs.bilinear_form(&e(1), &e(1)).unwrap(), q(-1));
        assert_eq!(rs.bilinear_form(&w(&[1, -1, 0]), &w(&[0, 1, -1])).unwrap(), q(1));
        assert!(rs.bilinear_form(&w(&[1, 0]), &e(0)).is_err());
    }

    #[test]
    fn typicality_examples() {
        let rs = build_algebra(&AlgebraKind::gl(1, 2)).unwrap();
        assert!(!rs.is_typical(&w(&[0, 0, 0])).unwrap());
        assert!(rs.is_typical(&w(&[1, 0, 1])).unwrap());
        let pe = build_algebra(&AlgebraKind::pe(2)).unwrap();
        assert!(pe.is_typical(&w(&[1, 0])).unwrap());
        // λ_1 − λ_2 + 2 − 1 − 1 = 0 at λ = (0, 0)
        assert!(!pe.is_typical(&w(&[0, 0])).unwrap());
        let ev = build_algebra(&AlgebraKind::gl(1, 2).even_part()).unwrap();
        assert!(matches!(ev.is_typical(&w(&[0, 0, 0])), Err(Error::EvenPartGiven(_))));
    }

    #[test]
    fn gl12_atypicality_grid() {
        let rs = build_algebra(&AlgebraKind::gl(1, 2)).unwrap();
        let vals: Vec<Q> = (-10..=10).map(|k| qf(k, 2)).collect();
        for a in &vals {
            for b in &vals {
                for c in &vals {
                    let lam = Weight::new(vec![a.clone(), b.clone(), c.clone()]);
                    let product = (a + b) * (a + c - q(1));
                    assert_eq!(rs.is_typical(&lam).unwrap(), !product.is_zero(), "{lam}");
                }
            }
        }
    }

    #[test]
    fn rho_recomputed_from_roots() {
        for kind in [AlgebraKind::gl(2, 3), AlgebraKind::osp(3), AlgebraKind::pe(3)] {
            let rs = build_algebra(&kind).unwrap();
            let r = rs.rank();
            let mut acc = Weight::zero(r);
            for a in &rs.positive_even {
                acc = acc.add(&a.weight.scale(&half()));
            }
            assert_eq!(acc, rs.rho_even);
            for b in &rs.positive_odd {
                acc = acc.sub(&b.weight.scale(&half()));
            }
            assert_eq!(acc, rs.rho);
        }
    }

    #[test]
    fn positive_roots_in_cone() {
        for kind in [AlgebraKind::gl(2, 2), AlgebraKind::osp(2), AlgebraKind::pe(3)] {
            for k in [kind.clone(), kind.even_part()] {
                let rs = build_algebra(&k).unwrap();
                for r in rs.positive_even.iter().chain(&rs.positive_odd) {
                    let c = rs.cone_coefficients(&r.weight).expect("in span");
                    assert!(nonneg_integral(&c), "{k}: {}", r.weight);
                    let neg = rs.cone_coefficients(&r.weight.scale(&q(-1))).unwrap();
                    assert!(!nonneg_integral(&neg));
                }
            }
        }
    }

    #[test]
    fn partition_and_parse() {
        let rs = build_algebra(&AlgebraKind::gl(2, 1)).unwrap();
        let all = rs.all_roots();
        assert_eq!(all.len(), 6);
        assert_eq!(all.iter().filter(|r| r.parity == Parity::Odd).count(), 4);
        assert_eq!(AlgebraKind::parse("gl,1,2").unwrap(), AlgebraKind::gl(1, 2));
        assert_eq!(AlgebraKind::parse("even:pe,2").unwrap(), AlgebraKind::pe(2).even_part());
        assert!(AlgebraKind::parse("gl,0,2").is_err());
        let j = serde_json::to_string(&AlgebraKind::gl(1, 2)).unwrap();
        assert_eq!(j, r#"{"kind":"gl","m":1,"n":2}"#);
        assert_eq!(Weight::parse("0, 1/2, -1").unwrap(), Weight::new(vec![q(0), half(), q(-1)]));
    }
}

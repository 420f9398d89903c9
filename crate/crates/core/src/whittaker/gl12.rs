//! Verma flags of the projective covers in the atypical integral blocks of
//! `gl(2|1)`, and their transport to `gl(1|2)`.
//!
//! Weights of `gl(2|1)` are written `ρ`-shifted as `(a,b|c)`. Each atypical
//! integral block is a translate, along the supertrace direction `(1,1|−1)`,
//! of the principal block, whose weights are
//!
//! ```text
//! A_k = (0,k|−k),  B_k = (k,0|−k),   k ∈ Z,  A_0 = B_0.
//! ```
//!
//! `gl(1|2) → gl(2|1)` is `X ↦ −X^{st}` followed by reversing the index order;
//! on `ρ`-shifted weights it sends `(x_1|x_2,x_3)` to `(−x_3,−x_2|−x_1)`.

use std::fmt;

use num_traits::Zero;

use crate::rational::{is_int, q, to_i64};
use crate::rootdata::Weight;
use crate::Q;

/// A weight of the principal block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    A(i64),
    B(i64),
}

impl Label {
    pub fn normalize(self) -> Label {
        match self {
            Label::B(0) => Label::A(0),
            l => l,
        }
    }

    /// `ρ`-shifted `gl(2|1)` coordinates `(a, b, c)`.
    pub fn coords(self) -> [i64; 3] {
        match self {
            Label::A(k) => [0, k, -k],
            Label::B(k) => [k, 0, -k],
        }
    }

    /// No positive integral pairing with the even coroot: `a − b ∉ Z_{>0}`.
    pub fn is_antidominant(self) -> bool {
        let [a, b, _] = self.coords();
        a - b <= 0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.coords();
        write!(f, "({a},{b}|{c})")
    }
}

/// The Verma modules in a flag of `P(p)`, each with multiplicity one.
pub fn flag(p: Label) -> Vec<Label> {
    use Label::{A, B};
    let v = match p.normalize() {
        A(0) => vec![A(0), A(1), B(1)],
        A(-1) => vec![A(-1), A(0), B(1)],
        B(-1) => vec![B(-1), A(-1), A(0)],
        A(k) if k < -1 => vec![A(k), A(k + 1)],
        B(k) if k < -1 => vec![B(k), A(k), B(k + 1), A(k + 1)],
        B(k) => vec![B(k), B(k + 1)],
        A(k) => vec![A(k), B(k), A(k + 1), B(k + 1)],
    };
    v.into_iter().map(Label::normalize).collect()
}

/// `(P(p) : M(m))`.
pub fn flag_multiplicity(p: Label, m: Label) -> u64 {
    flag(p).iter().filter(|&&x| x == m.normalize()).count() as u64
}

/// The flag table for `|k| ≤ kmax`, as `(P, [M, ...])` rows.
pub fn gl12_flag_table(kmax: i64) -> Vec<(Label, Vec<Label>)> {
    let mut out = vec![(Label::A(0), flag(Label::A(0)))];
    for k in 1..=kmax {
        for l in [Label::A(-k), Label::B(-k), Label::A(k), Label::B(k)] {
            out.push((l, flag(l)));
        }
    }
    out
}

/// `[M(m) : L(l)] = (P(l) : M(m))`, listed for all `l`.
pub fn verma_factors(m: Label) -> Vec<Label> {
    let k = match m.normalize() {
        Label::A(k) | Label::B(k) => k,
    };
    let mut out = Vec::new();
    for j in k - 2..=k + 2 {
        for l in [Label::A(j), Label::B(j)] {
            let l = l.normalize();
            if !out.contains(&l) && flag_multiplicity(l, m) > 0 {
                out.push(l);
            }
        }
    }
    out.sort();
    out
}

/// Position of a `ρ`-shifted `gl(2|1)` weight: the principal-block label and
/// the translation `t` along `(1,1|−1)`. `None` unless atypical and integral.
pub fn locate_gl21(x: &[Q; 3]) -> Option<(Label, Q)> {
    let [a, b, c] = x;
    if !is_int(&(a - b)) {
        return None;
    }
    if (b + c).is_zero() {
        Some((Label::A(to_i64(&(b - a))?).normalize(), a.clone()))
    } else if (a + c).is_zero() {
        Some((Label::B(to_i64(&(a - b))?).normalize(), b.clone()))
    } else {
        None
    }
}

pub fn place_gl21(l: Label, t: &Q) -> [Q; 3] {
    let [a, b, c] = l.coords();
    [q(a) + t, q(b) + t, q(c) - t]
}

/// `ρ`-shifted `gl(1|2)` coordinates to `ρ`-shifted `gl(2|1)` coordinates.
pub fn to_gl21(x: &[Q; 3]) -> [Q; 3] {
    [-x[2].clone(), -x[1].clone(), -x[0].clone()]
}

pub fn from_gl21(y: &[Q; 3]) -> [Q; 3] {
    [-y[2].clone(), -y[1].clone(), -y[0].clone()]
}

/// `ρ` of `gl(1|2)`.
pub fn rho_gl12() -> Weight {
    Weight::from_ints(&[-1, 1, 0])
}

/// Label and translation of a `gl(1|2)` weight (not `ρ`-shifted).
pub fn locate(lambda: &Weight) -> Option<(Label, Q)> {
    let s = lambda.add(&rho_gl12()).coords;
    locate_gl21(&to_gl21(&[s[0].clone(), s[1].clone(), s[2].clone()]))
}

/// Inverse of [`locate`].
pub fn place(l: Label, t: &Q) -> Weight {
    let x = from_gl21(&place_gl21(l, t));
    Weight::new(x.to_vec()).sub(&rho_gl12())
}

//! Coefficient rings for module computations: exact rationals, and Laurent
//! polynomials in the block parameters `(a, b, c, t)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{fmt_q, q};
use crate::Q;

pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_q(x: &Q) -> Self;

    /// Multiplicative inverse, when it exists in the ring.
    fn inverse(&self) -> Option<Self>;

    fn scale(&self, x: &Q) -> Self {
        self.clone() * Self::from_q(x)
    }
}

impl Coeff for Q {
    fn from_q(x: &Q) -> Self {
        x.clone()
    }

    fn inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

pub const VARS: [&str; 4] = ["a", "b", "c", "t"];

/// Laurent polynomial in `a, b, c, t` with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Laurent(BTreeMap<[i32; 4], Q>);

impl Laurent {
    pub fn var(i: usize) -> Self {
        let mut e = [0; 4];
        e[i] = 1;
        Laurent(BTreeMap::from([(e, q(1))]))
    }

    pub fn a() -> Self {
        Self::var(0)
    }

    pub fn b() -> Self {
        Self::var(1)
    }

    pub fn c() -> Self {
        Self::var(2)
    }

    pub fn t() -> Self {
        Self::var(3)
    }

    pub fn a_inv() -> Self {
        Laurent(BTreeMap::from([([-1, 0, 0, 0], q(1))]))
    }

    fn insert(&mut self, e: [i32; 4], c: Q) {
        let slot = self.0.entry(e).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32; 4], &Q)> {
        self.0.iter()
    }

    /// Value at a point with `a ≠ 0`.
    pub fn eval(&self, at: &[Q; 4]) -> Q {
        let mut s = Q::zero();
        for (e, c) in &self.0 {
            let mut m = c.clone();
            for (x, &k) in at.iter().zip(e) {
                let p = num_traits::pow(x.clone(), k.unsigned_abs() as usize);
                m = if k >= 0 { m * p } else { m / p };
            }
            s += m;
        }
        s
    }

    /// Substitutes a polynomial for variable `i`, which must occur with
    /// nonnegative exponents only.
    pub fn subst(&self, i: usize, value: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e, c) in &self.0 {
            assert!(e[i] >= 0, "negative power of {}", VARS[i]);
            let mut rest = *e;
            rest[i] = 0;
            let mut term = Laurent(BTreeMap::from([(rest, c.clone())]));
            for _ in 0..e[i] {
                term = term * value.clone();
            }
            out = out + term;
        }
        out
    }
}

impl Zero for Laurent {
    fn zero() -> Self {
        Laurent(BTreeMap::new())
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

impl One for Laurent {
    fn one() -> Self {
        Laurent(BTreeMap::from([([0; 4], q(1))]))
    }
}

impl Add for Laurent {
    type Output = Laurent;
    fn add(mut self, o: Laurent) -> Laurent {
        for (e, c) in o.0 {
            self.insert(e, c);
        }
        self
    }
}

impl Neg for Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent(self.0.into_iter().map(|(e, c)| (e, -c)).collect())
    }
}

impl Sub for Laurent {
    type Output = Laurent;
    fn sub(self, o: Laurent) -> Laurent {
        self + (-o)
    }
}

impl Mul for Laurent {
    type Output = Laurent;
    fn mul(self, o: Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &o.0 {
                let e = [e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]];
                out.insert(e, c1 * c2);
            }
        }
        out
    }
}

impl Coeff for Laurent {
    fn from_q(x: &Q) -> Self {
        let mut l = Laurent::zero();
        l.insert([0; 4], x.clone());
        l
    }

    /// Only monomials are units.
    fn inverse(&self) -> Option<Self> {
        let mut it = self.0.iter();
        let (e, c) = it.next()?;
        if it.next().is_some() {
            return None;
        }
        Some(Laurent(BTreeMap::from([(e.map(|k| -k), c.recip())])))
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.0.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .zip(VARS)
                .filter(|(k, _)| **k != 0)
                .map(|(&k, v)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
                .collect();
            let neg = c < &Q::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            let body = match (mono.is_empty(), a.is_one()) {
                (true, _) => fmt_q(&a),
                (false, true) => mono.join(""),
                (false, false) => format!("{}{}", fmt_q(&a), mono.join("")),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

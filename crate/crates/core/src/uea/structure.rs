//! Structure constants of `gl(1|2)` and `pe(2)` and PBW normal forms in `U(g)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::linalg::solve_in_span;
use crate::rational::{fmt_q, q, qf};
use crate::{Error, Result, Q};

/// Position of a generator in the PBW order, which is the order of this enum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum GenKind {
    LowerOdd,
    LowerEven,
    Cartan,
    RaiseEven,
    RaiseOdd,
}

impl GenKind {
    pub fn is_odd(self) -> bool {
        matches!(self, GenKind::LowerOdd | GenKind::RaiseOdd)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gen {
    pub name: String,
    pub kind: GenKind,
}

impl Gen {
    pub fn is_odd(&self) -> bool {
        self.kind.is_odd()
    }
}

/// A linear combination of generators.
pub type Comb = Vec<(usize, Q)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperStructure {
    pub name: String,
    gens: Vec<Gen>,
    table: Vec<Vec<Comb>>,
}

type Matrix = Vec<Vec<Q>>;

fn unit(n: usize, entries: &[(usize, usize, i64)]) -> Matrix {
    let mut m = vec![vec![Q::zero(); n]; n];
    for &(r, c, v) in entries {
        m[r - 1][c - 1] += q(v);
    }
    m
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| &a[i][k] * &b[k][j]).sum()).collect())
        .collect()
}

fn flatten(m: &Matrix) -> Vec<Q> {
    m.iter().flatten().cloned().collect()
}

impl SuperStructure {
    /// From a matrix realization: the table is read off from
    /// `XY − (−1)^{|x||y|} YX`.
    fn from_matrices(name: &str, spec: Vec<(&str, GenKind, Matrix)>) -> Result<Self> {
        let flat: Vec<Vec<Q>> = spec.iter().map(|(_, _, m)| flatten(m)).collect();
        let mut table = Vec::new();
        for (_, kx, x) in &spec {
            let mut row = Vec::new();
            for (_, ky, y) in &spec {
                let sign = if kx.is_odd() && ky.is_odd() { q(-1) } else { q(1) };
                let xy = matmul(x, y);
                let yx = matmul(y, x);
                let br: Vec<Q> = flatten(&xy).into_iter().zip(flatten(&yx)).map(|(p, r)| p - &sign * r).collect();
                let coeffs = solve_in_span(&flat, &br)
                    .ok_or_else(|| Error::Precondition(format!("{name}: generators do not close under the bracket")))?;
                row.push(coeffs.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect());
            }
            table.push(row);
        }
        let gens: Vec<Gen> = spec.iter().map(|(n, k, _)| Gen { name: n.to_string(), kind: *k }).collect();
        debug_assert!(gens.windows(2).all(|w| w[0].kind <= w[1].kind));
        let s = SuperStructure { name: name.into(), gens, table };
        s.check()?;
        Ok(s)
    }

    /// `gl(1|2)` with `F21, F31, f, E11, E22, E33, e, E12, E13`.
    pub fn gl12() -> Self {
        static S: OnceLock<SuperStructure> = OnceLock::new();
        S.get_or_init(Self::build_gl12).clone()
    }

    fn build_gl12() -> Self {
        use GenKind::*;
        let m = |e: &[(usize, usize, i64)]| unit(3, e);
        Self::from_matrices(
            "gl(1|2)",
            vec![
                ("F21", LowerOdd, m(&[(2, 1, 1)])),
                ("F31", LowerOdd, m(&[(3, 1, 1)])),
                ("f", LowerEven, m(&[(3, 2, 1)])),
                ("E11", Cartan, m(&[(1, 1, 1)])),
                ("E22", Cartan, m(&[(2, 2, 1)])),
                ("E33", Cartan, m(&[(3, 3, 1)])),
                ("e", RaiseEven, m(&[(2, 3, 1)])),
                ("E12", RaiseOdd, m(&[(1, 2, 1)])),
                ("E13", RaiseOdd, m(&[(1, 3, 1)])),
            ],
        )
        .expect("gl(1|2) closes")
    }

    /// `pe(2)` inside `gl(2|2)` with `Y12, f, H1, H2, e, X11, X12, X22`.
    pub fn pe2() -> Self {
        static S: OnceLock<SuperStructure> = OnceLock::new();
        S.get_or_init(Self::build_pe2).clone()
    }

    fn build_pe2() -> Self {
        use GenKind::*;
        let m = |e: &[(usize, usize, i64)]| unit(4, e);
        Self::from_matrices(
            "pe(2)",
            vec![
                ("Y12", LowerOdd, m(&[(3, 2, 1), (4, 1, -1)])),
                ("f", LowerEven, m(&[(2, 1, 1), (3, 4, -1)])),
                ("H1", Cartan, m(&[(1, 1, 1), (3, 3, -1)])),
                ("H2", Cartan, m(&[(2, 2, 1), (4, 4, -1)])),
                ("e", RaiseEven, m(&[(1, 2, 1), (4, 3, -1)])),
                ("X11", RaiseOdd, m(&[(1, 3, 1)])),
                ("X12", RaiseOdd, m(&[(1, 4, 1), (2, 3, 1)])),
                ("X22", RaiseOdd, m(&[(2, 4, 1)])),
            ],
        )
        .expect("pe(2) closes")
    }

    /// A copy with `[x,y]` (and the matching `[y,x]`) shifted by `delta·g`;
    /// the result is not checked.
    pub fn perturbed(&self, x: usize, y: usize, g: usize, delta: Q) -> Self {
        let mut s = self.clone();
        let sign = if s.gens[x].is_odd() && s.gens[y].is_odd() { q(1) } else { q(-1) };
        add_to(&mut s.table[x][y], g, delta.clone());
        if x != y {
            add_to(&mut s.table[y][x], g, sign * delta);
        }
        s
    }

    pub fn gens(&self) -> &[Gen] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn idx(&self, name: &str) -> usize {
        self.index(name).unwrap_or_else(|| panic!("{}: no generator {name}", self.name))
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.gens[i].is_odd()
    }

    pub fn of_kind(&self, kind: GenKind) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.gens[i].kind == kind).collect()
    }

    /// `(−1)^{|x||y|}`.
    pub fn swap_sign(&self, x: usize, y: usize) -> Q {
        if self.is_odd(x) && self.is_odd(y) {
            q(-1)
        } else {
            q(1)
        }
    }

    pub fn bracket(&self, x: usize, y: usize) -> &Comb {
        &self.table[x][y]
    }

    fn bracket_comb(&self, a: &Comb, b: &Comb) -> Comb {
        let mut out = Vec::new();
        for (i, ca) in a {
            for (j, cb) in b {
                for (k, ck) in &self.table[*i][*j] {
                    add_to(&mut out, *k, ca * cb * ck);
                }
            }
        }
        out
    }

    /// Super-antisymmetry and the super-Jacobi identity on all generators.
    pub fn check(&self) -> Result<()> {
        let n = self.len();
        for x in 0..n {
            for y in 0..n {
                let lhs = normalize(self.table[x][y].clone());
                let rhs = normalize(self.table[y][x].iter().map(|(k, c)| (*k, -(self.swap_sign(x, y) * c))).collect());
                if lhs != rhs {
                    return Err(Error::Precondition(format!(
                        "{}: [{},{}] is not super-antisymmetric",
                        self.name, self.gens[x].name, self.gens[y].name
                    )));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let gx = vec![(x, q(1))];
                    let gy = vec![(y, q(1))];
                    let gz = vec![(z, q(1))];
                    let l = self.bracket_comb(&gx, &self.bracket_comb(&gy, &gz));
                    let mut r = self.bracket_comb(&self.bracket_comb(&gx, &gy), &gz);
                    let s = self.swap_sign(x, y);
                    for (k, c) in self.bracket_comb(&gy, &self.bracket_comb(&gx, &gz)) {
                        add_to(&mut r, k, &s * c);
                    }
                    if normalize(l) != normalize(r) {
                        return Err(Error::Precondition(format!(
                            "{}: super-Jacobi fails on ({}, {}, {})",
                            self.name, self.gens[x].name, self.gens[y].name, self.gens[z].name
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Generator indices of a space-separated word such as `"E12 E13 F31 F21"`.
    pub fn parse_word(&self, s: &str) -> Result<Vec<usize>> {
        s.split_whitespace()
            .map(|t| self.index(t).ok_or_else(|| Error::Parse(format!("unknown generator {t:?} of {}", self.name))))
            .collect()
    }
}

fn add_to(comb: &mut Comb, k: usize, c: Q) {
    if let Some(slot) = comb.iter_mut().find(|(i, _)| *i == k) {
        slot.1 += c;
    } else {
        comb.push((k, c));
    }
    comb.retain(|(_, c)| !c.is_zero());
}

fn normalize(mut c: Comb) -> Comb {
    let mut out: Comb = Vec::new();
    c.sort_by_key(|x| x.0);
    for (k, v) in c {
        add_to(&mut out, k, v);
    }
    out
}

/// An element of `U(g)` in PBW normal form: nondecreasing words with no
/// repeated odd letter.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct UeaElement {
    pub terms: BTreeMap<Vec<usize>, Q>,
}

impl UeaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &UeaElement) -> UeaElement {
        let mut t = self.terms.clone();
        for (w, c) in &other.terms {
            let slot = t.entry(w.clone()).or_insert_with(Q::zero);
            *slot += c;
            if slot.is_zero() {
                t.remove(w);
            }
        }
        UeaElement { terms: t }
    }

    pub fn scale(&self, x: &Q) -> UeaElement {
        if x.is_zero() {
            return UeaElement::zero();
        }
        UeaElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), c * x)).collect() }
    }

    pub fn mul(&self, other: &UeaElement, s: &SuperStructure) -> UeaElement {
        let mut raw = Vec::new();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend(w2);
                raw.push((w, c1 * c2));
            }
        }
        pbw_reduce(s, &raw)
    }

    /// Every monomial has an even number of odd letters.
    pub fn is_even(&self, s: &SuperStructure) -> bool {
        self.terms.keys().all(|w| w.iter().filter(|&&i| s.is_odd(i)).count() % 2 == 0)
    }

    pub fn display(&self, s: &SuperStructure) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (w, c) in &self.terms {
            let mut names: Vec<String> = Vec::new();
            let mut i = 0;
            while i < w.len() {
                let j = (i..w.len()).take_while(|&j| w[j] == w[i]).count();
                let n = &s.gens()[w[i]].name;
                names.push(if j == 1 { n.clone() } else { format!("{n}^{j}") });
                i += j;
            }
            let mono = names.join(" ");
            let body = match (w.is_empty(), c.is_one(), (-c).is_one()) {
                (true, _, _) => fmt_q(c),
                (false, true, _) => mono,
                (false, _, true) => format!("-{mono}"),
                _ => format!("{} {mono}", fmt_q(c)),
            };
            parts.push(body);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

/// Normal form of `Σ c·word` using `xy = (−1)^{|x||y|} yx + [x,y]` and, for
/// odd `x`, `xx = ½[x,x]`.
pub fn pbw_reduce(s: &SuperStructure, expr: &[(Vec<usize>, Q)]) -> UeaElement {
    let mut out: BTreeMap<Vec<usize>, Q> = BTreeMap::new();
    let mut stack: Vec<(Vec<usize>, Q)> = expr.to_vec();
    while let Some((w, c)) = stack.pop() {
        if c.is_zero() {
            continue;
        }
        let bad = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1] || (w[i] == w[i + 1] && s.is_odd(w[i])));
        let Some(i) = bad else {
            let slot = out.entry(w).or_insert_with(Q::zero);
            *slot += c;
            continue;
        };
        let (x, y) = (w[i], w[i + 1]);
        let splice = |mid: &[usize]| {
            let mut v = w[..i].to_vec();
            v.extend_from_slice(mid);
            v.extend_from_slice(&w[i + 2..]);
            v
        };
        let factor = if x == y { qf(1, 2) } else { q(1) };
        if x != y {
            stack.push((splice(&[y, x]), &c * s.swap_sign(x, y)));
        }
        for (g, k) in s.bracket(x, y) {
            stack.push((splice(&[*g]), &c * k * &factor));
        }
    }
    out.retain(|_, c| !c.is_zero());
    UeaElement { terms: out }
}

/// Normal form of a linear combination of space-separated words.
pub fn reduce_words(s: &SuperStructure, expr: &[(Q, &str)]) -> Result<UeaElement> {
    let raw: Result<Vec<(Vec<usize>, Q)>> = expr.iter().map(|(c, w)| Ok((s.parse_word(w)?, c.clone()))).collect();
    Ok(pbw_reduce(s, &raw?))
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn structures_are_consistent() {
        let g = SuperStructure::gl12();
        assert_eq!(g.len(), 9);
        assert!(g.check().is_ok());
        let p = SuperStructure::pe2();
        assert_eq!(p.len(), 8);
        assert!(p.check().is_ok());
    }

    #[test]
    fn perturbation_breaks_jacobi() {
        let g = SuperStructure::gl12();
        let bad = g.perturbed(g.idx("E12"), g.idx("F21"), g.idx("E11"), q(1));
        assert!(bad.check().is_err());
    }

    #[test]
    fn reductions() {
        let g = SuperStructure::gl12();
        let ef = reduce_words(&g, &[(q(1), "e f")]).unwrap();
        assert_eq!(ef, reduce_words(&g, &[(q(1), "f e"), (q(1), "E22"), (q(-1), "E33")]).unwrap());
        assert_eq!(ef.display(&g), "f e + E22 - E33");
        assert!(reduce_words(&g, &[(q(1), "F21 F21")]).unwrap().is_zero());
        let omega = [
            (q(4), "f e"),
            (q(1), "E22 E22"),
            (q(-2), "E22 E33"),
            (q(1), "E33 E33"),
            (q(2), "E22"),
            (q(-2), "E33"),
        ];
        let o = reduce_words(&g, &omega).unwrap();
        assert_eq!(o.terms.len(), 6);
        let raw: Vec<(Vec<usize>, Q)> = o.terms.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        assert_eq!(pbw_reduce(&g, &raw), o);
    }

    #[test]
    fn pe2_brackets() {
        let p = SuperStructure::pe2();
        let b = p.bracket(p.idx("X12"), p.idx("Y12"));
        let mut b = b.clone();
        b.sort();
        assert_eq!(b, vec![(p.idx("H1"), q(-1)), (p.idx("H2"), q(1))]);
        assert!(p.bracket(p.idx("Y12"), p.idx("Y12")).is_empty());
    }
}

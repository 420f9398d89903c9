//! Kazhdan–Lusztig polynomials and Verma multiplicities for the even part.
//!
//! Tables are filled by the usual recursion on `ℓ(w)`: for a left descent `s`
//! of `w` and `v = sw`,
//!
//! ```text
//! P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} − Σ_{z<v, sz<z} μ(z,v) q^{(ℓ(w)−ℓ(z))/2} P_{x,z}
//! ```
//!
//! with `c = 1` if `sx < x` and `0` otherwise. All cells of a length stratum
//! depend only on shorter strata, so each stratum is filled in parallel.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::par::{self, Exec};
use crate::rootdata::{coroot_pairing, RootSystem, Weight};
use crate::weylgroup::{antidominant_representative, dot_action, integral_weyl_group, WeylElement, WeylSubgroup};
use crate::{Error, Result};

/// Polynomial in `q` with integer coefficients, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(pub Vec<BigInt>);

impl Poly {
    pub fn zero() -> Self {
        Poly(vec![])
    }

    pub fn one() -> Self {
        Poly(vec![BigInt::one()])
    }

    pub fn from_coeffs(c: &[i64]) -> Self {
        let mut p = Poly(c.iter().map(|&x| BigInt::from(x)).collect());
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.0.get(d).cloned().unwrap_or_default()
    }

    pub fn eval_one(&self) -> BigInt {
        self.0.iter().sum()
    }

    pub fn add_shifted(&mut self, other: &Poly, shift: usize, scale: &BigInt) {
        if other.0.len() + shift > self.0.len() {
            self.0.resize(other.0.len() + shift, BigInt::zero());
        }
        for (i, c) in other.0.iter().enumerate() {
            self.0[i + shift] += c * scale;
        }
        self.trim();
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        let mut p = Poly(out);
        p.trim();
        p
    }

    pub fn parse(s: &str) -> Result<Poly> {
        let bad = || Error::Parse(format!("bad polynomial {s:?}"));
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Poly::zero();
        let mut terms = Vec::new();
        let mut cur = String::new();
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        if !cur.is_empty() {
            terms.push(cur);
        }
        for t in terms {
            let (neg, body) = match t.strip_prefix('-') {
                Some(b) => (true, b),
                None => (false, t.trim_start_matches('+')),
            };
            let (coef, deg) = match body.split_once('q') {
                None => (body.parse::<BigInt>().map_err(|_| bad())?, 0usize),
                Some((c, d)) => {
                    let c = if c.is_empty() { BigInt::one() } else { c.trim_end_matches('*').parse().map_err(|_| bad())? };
                    let d = match d.strip_prefix('^') {
                        Some(e) => e.parse().map_err(|_| bad())?,
                        None if d.is_empty() => 1,
                        None => return Err(bad()),
                    };
                    (c, d)
                }
            };
            let coef = if neg { -coef } else { coef };
            p.add_shifted(&Poly(vec![coef]), deg, &BigInt::one());
        }
        Ok(p)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let body = match (d, a.is_one()) {
                (0, _) => a.to_string(),
                (1, true) => "q".into(),
                (1, false) => format!("{a}q"),
                (_, true) => format!("q^{d}"),
                (_, false) => format!("{a}q^{d}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// All KL polynomials of a finite reflection group.
#[derive(Debug)]
pub struct KlTable {
    group: WeylSubgroup,
    lengths: Vec<usize>,
    /// `left[i][x]` = index of `s_i x`.
    left: Vec<Vec<usize>>,
    /// `cells[w][x] = P_{x,w}`.
    cells: Vec<Vec<Poly>>,
}

impl KlTable {
    pub fn new(group: &WeylSubgroup) -> Self {
        Self::with_exec(group, Exec::default())
    }

    pub fn with_exec(group: &WeylSubgroup, exec: Exec) -> Self {
        let elems = group.elements();
        let n = elems.len();
        let lengths: Vec<usize> = elems.iter().map(|w| group.length(w)).collect();
        let left: Vec<Vec<usize>> = group
            .generators()
            .iter()
            .map(|s| elems.iter().map(|x| group.index_of(&s.compose(x)).expect("closed")).collect())
            .collect();
        let max_len = lengths.iter().copied().max().unwrap_or(0);
        let mut cells: Vec<Vec<Poly>> = vec![Vec::new(); n];
        let mut by_len: Vec<Vec<usize>> = vec![Vec::new(); max_len + 1];
        for (i, &l) in lengths.iter().enumerate() {
            by_len[l].push(i);
        }
        for stratum in &by_len {
            let rows = par::map(exec, stratum, |&w| row_for(group, &lengths, &left, &cells, w));
            for (&w, row) in stratum.iter().zip(rows) {
                cells[w] = row;
            }
        }
        KlTable { group: group.clone(), lengths, left, cells }
    }

    /// Shared table for `group`, computed once per distinct group.
    pub fn shared(group: &WeylSubgroup) -> Arc<KlTable> {
        static CACHE: OnceLock<Mutex<HashMap<String, Arc<KlTable>>>> = OnceLock::new();
        let key = format!("{}:{group}", group.rank());
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(&key) {
            return t.clone();
        }
        let t = Arc::new(KlTable::new(group));
        cache.lock().unwrap().entry(key).or_insert(t).clone()
    }

    pub fn group(&self) -> &WeylSubgroup {
        &self.group
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn length_of(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn left_mult(&self, gen: usize, x: usize) -> usize {
        self.left[gen][x]
    }

    pub fn by_index(&self, x: usize, w: usize) -> &Poly {
        &self.cells[w][x]
    }

    pub fn kl_polynomial(&self, x: &WeylElement, w: &WeylElement) -> Option<&Poly> {
        Some(self.by_index(self.group.index_of(x)?, self.group.index_of(w)?))
    }

    /// `(x-word, w-word, polynomial)` for every pair `x ≤ w`.
    pub fn rows(&self) -> Vec<(String, String, String)> {
        let elems = self.group.elements();
        let mut out = Vec::new();
        for (wi, w) in elems.iter().enumerate() {
            for (xi, x) in elems.iter().enumerate() {
                let p = &self.cells[wi][xi];
                if !p.is_zero() {
                    out.push((
                        WeylSubgroup::format_word(&self.group.reduced_word(x)),
                        WeylSubgroup::format_word(&self.group.reduced_word(w)),
                        p.to_string(),
                    ));
                }
            }
        }
        out
    }

    /// Writes the CSV dump with columns `x,w,P`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("x,w,P\n");
        for (x, w, p) in self.rows() {
            s.push_str(&format!("{x},{w},{p}\n"));
        }
        s
    }
}

fn mu_coeff(p: &Poly, lx: usize, lw: usize) -> BigInt {
    if lw <= lx || (lw - lx).is_multiple_of(2) {
        return BigInt::zero();
    }
    p.coeff((lw - lx - 1) / 2)
}

fn check_cell(p: &Poly, lx: usize, lw: usize, diagonal: bool) {
    if p.is_zero() {
        assert!(!diagonal, "P_(w,w) must be 1");
        return;
    }
    assert!(p.coeff(0).is_one(), "constant term of a nonzero KL polynomial is 1");
    assert!(p.0.iter().all(|c| !c.is_negative()), "negative KL coefficient");
    assert!(lx <= lw, "nonzero P_(x,w) with l(x) > l(w)");
    if !diagonal {
        assert!(2 * p.degree().unwrap() < lw - lx, "KL degree bound violated");
    }
}

fn row_for(
    group: &WeylSubgroup,
    lengths: &[usize],
    left: &[Vec<usize>],
    cells: &[Vec<Poly>],
    w: usize,
) -> Vec<Poly> {
    let n = lengths.len();
    if lengths[w] == 0 {
        let mut row = vec![Poly::zero(); n];
        row[w] = Poly::one();
        return row;
    }
    let we = &group.elements()[w];
    let s = (0..left.len()).find(|&i| group.is_left_descent(we, i)).expect("nontrivial element has a descent");
    let v = left[s][w];
    let lw = lengths[w];
    // z < v with sz < z and μ(z, v) ≠ 0
    let corrections: Vec<(usize, BigInt)> = (0..n)
        .filter(|&z| lengths[z] < lengths[v] && lengths[left[s][z]] < lengths[z])
        .filter_map(|z| {
            let m = mu_coeff(&cells[v][z], lengths[z], lengths[v]);
            (!m.is_zero()).then_some((z, m))
        })
        .collect();
    (0..n)
        .map(|x| {
            let sx = left[s][x];
            let c = usize::from(lengths[sx] < lengths[x]);
            let mut p = Poly::zero();
            p.add_shifted(&cells[v][sx], 1 - c, &BigInt::one());
            p.add_shifted(&cells[v][x], c, &BigInt::one());
            for (z, m) in &corrections {
                p.add_shifted(&cells[*z][x], (lw - lengths[*z]) / 2, &-m);
            }
            check_cell(&p, lengths[x], lw, x == w);
            p
        })
        .collect()
}

/// The data of an even-part block: the antidominant weight `λ̲`, the integral
/// Weyl group `W_[λ]`, and the stabilizer of `λ̲` in it (as generator indices
/// of `W_[λ]`).
#[derive(Debug, Clone)]
pub struct BlockParams {
    rs: RootSystem,
    pub base: Weight,
    pub integral_group: WeylSubgroup,
    pub stabilizer_gens: Vec<usize>,
}

impl BlockParams {
    /// The block of `λ` for the even part of `rs`.
    pub fn new(rs: &RootSystem, lambda: &Weight) -> Result<Self> {
        rs.check_weight(lambda)?;
        let all: Vec<usize> = (0..rs.simple_roots_even.len()).collect();
        let (base, _) = antidominant_representative(rs, lambda, &all);
        let integral_group = integral_weyl_group(rs, &base);
        let shifted = base.add(&rs.rho_even);
        let stabilizer_gens = integral_group
            .simple_roots()
            .iter()
            .enumerate()
            .filter(|(_, a)| coroot_pairing(&shifted, a).is_zero())
            .map(|(i, _)| i)
            .collect();
        Ok(BlockParams { rs: rs.clone(), base, integral_group, stabilizer_gens })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// `x ∈ W_[λ]` with `x·λ̲ = μ`, if any.
    pub fn locate(&self, mu: &Weight) -> Option<WeylElement> {
        self.integral_group
            .elements()
            .iter()
            .find(|x| dot_action(&self.rs, x, &self.base).ok().as_ref() == Some(mu))
            .cloned()
    }

    fn longest_in_coset(&self, x: &WeylElement) -> WeylElement {
        let g = &self.integral_group;
        let mut x = x.clone();
        'outer: loop {
            for &j in &self.stabilizer_gens {
                if !g.is_right_descent(&x, j) {
                    x = x.compose(&g.generators()[j]);
                    continue 'outer;
                }
            }
            return x;
        }
    }

    fn shortest_in_coset(&self, x: &WeylElement) -> WeylElement {
        let g = &self.integral_group;
        let mut x = x.clone();
        'outer: loop {
            for &j in &self.stabilizer_gens {
                if g.is_right_descent(&x, j) {
                    x = x.compose(&g.generators()[j]);
                    continue 'outer;
                }
            }
            return x;
        }
    }

    /// The weights of the block orbit `W_[λ]·λ̲`, ordered by the length of
    /// their shortest coset representative (antidominant first).
    pub fn weights(&self) -> Vec<Weight> {
        let g = &self.integral_group;
        let mut reps: Vec<(usize, Weight)> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for x in g.elements() {
            let m = self.shortest_in_coset(x);
            if seen.insert(m.clone()) {
                reps.push((g.length(&m), dot_action(&self.rs, &m, &self.base).expect("rank")));
            }
        }
        reps.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
        reps.into_iter().map(|(_, w)| w).collect()
    }
}

/// `[M(λ) : L(μ)]` for the even part, as `P_{ȳ,x̄}(1)` with `λ = x·λ̲`,
/// `μ = y·λ̲` and `x̄`, `ȳ` longest in their cosets modulo the stabilizer of
/// `λ̲`.
pub fn verma_multiplicity_even(block: &BlockParams, lambda: &Weight, mu: &Weight) -> Result<u64> {
    let x = block
        .locate(lambda)
        .ok_or_else(|| Error::Precondition(format!("{lambda} is not in the block of {}", block.base)))?;
    let Some(y) = block.locate(mu) else { return Ok(0) };
    let table = KlTable::shared(&block.integral_group);
    let xb = block.longest_in_coset(&x);
    let yb = block.longest_in_coset(&y);
    let p = table.kl_polynomial(&yb, &xb).expect("elements of the integral group");
    Ok(p.eval_one().to_u64().expect("small multiplicity"))
}

/// Even Verma multiplicity without a prebuilt block.
pub fn verma_multiplicity_in(rs: &RootSystem, lambda: &Weight, mu: &Weight) -> Result<u64> {
    verma_multiplicity_even(&BlockParams::new(rs, lambda)?, lambda, mu)
}

/// All composition factors `(μ, [M(λ):L(μ)])` of the even Verma module `M(λ)`.
pub fn verma_factors_even(rs: &RootSystem, lambda: &Weight) -> Result<Vec<(Weight, u64)>> {
    let block = BlockParams::new(rs, lambda)?;
    let mut out = Vec::new();
    for mu in block.weights() {
        let m = verma_multiplicity_even(&block, lambda, &mu)?;
        if m > 0 {
            out.push((mu, m));
        }
    }
    Ok(out)
}

/// `D[i][j] = [M(w_i) : L(w_j)]` over the weights of a block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub weights: Vec<Weight>,
    pub entries: Vec<Vec<u64>>,
}

pub fn decomposition_matrix(block: &BlockParams) -> Result<DecompositionMatrix> {
    decomposition_matrix_with(block, Exec::default())
}

pub fn decomposition_matrix_with(block: &BlockParams, exec: Exec) -> Result<DecompositionMatrix> {
    let weights = block.weights();
    let rows: Vec<Result<Vec<u64>>> = par::map(exec, &weights, |l| {
        weights.iter().map(|m| verma_multiplicity_even(block, l, m)).collect()
    });
    Ok(DecompositionMatrix { entries: rows.into_iter().collect::<Result<_>>()?, weights })
}

impl DecompositionMatrix {
    /// Integer inverse of the unitriangular matrix.
    pub fn inverse(&self) -> Vec<Vec<i64>> {
        let n = self.entries.len();
        let mut inv = vec![vec![0i64; n]; n];
        for i in 0..n {
            inv[i][i] = 1;
            for j in (0..i).rev() {
                let s: i64 = (j + 1..=i).map(|k| self.entries[k][j] as i64 * inv[i][k]).sum();
                inv[i][j] = -s;
            }
        }
        inv
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("lambda");
        for w in &self.weights {
            s.push_str(&format!(",\"{w}\""));
        }
        s.push('\n');
        for (w, row) in self.weights.iter().zip(&self.entries) {
            s.push_str(&format!("\"{w}\""));
            for v in row {
                s.push_str(&format!(",{v}"));
            }
            s.push('\n');
        }
        s
    }
}

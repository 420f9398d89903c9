//! Oracles independent of the library's engines.
#![allow(dead_code)]

use whittaker::klpoly::KlTable;
use whittaker::{WeylElement, WeylSubgroup};

/// Integer polynomial in `q`, lowest degree first.
pub type IPoly = Vec<i64>;

fn trim(mut p: IPoly) -> IPoly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn add(a: &IPoly, b: &IPoly) -> IPoly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(out)
}

fn mul(a: &IPoly, b: &IPoly) -> IPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Kazhdan–Lusztig polynomials from R-polynomials:
/// `R_{x,w} = R_{sx,sw}` if `sx < x`, else `(q−1)R_{x,sw} + qR_{sx,sw}`, and
/// `P_{x,w} = −trunc_{≤(ℓ(w)−ℓ(x)−1)/2} Σ_{x<y≤w} R_{x,y} P_{y,w}`.
pub struct ROracle {
    pub elements: Vec<WeylElement>,
    pub lengths: Vec<usize>,
    leq: Vec<Vec<bool>>,
    r: Vec<Vec<IPoly>>,
    pub p: Vec<Vec<IPoly>>,
}

impl ROracle {
    pub fn new(g: &WeylSubgroup) -> Self {
        let elements: Vec<WeylElement> = g.elements().to_vec();
        let n = elements.len();
        let idx = |w: &WeylElement| elements.iter().position(|e| e == w).expect("closed");
        let lengths: Vec<usize> = elements.iter().map(|w| g.length(w)).collect();
        let leq: Vec<Vec<bool>> =
            (0..n).map(|x| (0..n).map(|w| g.bruhat_leq(&elements[x], &elements[w])).collect()).collect();
        let left: Vec<Vec<usize>> =
            g.generators().iter().map(|s| elements.iter().map(|w| idx(&s.compose(w))).collect()).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| lengths[i]);
        let mut r = vec![vec![IPoly::new(); n]; n];
        for &w in &order {
            r[w][w] = vec![1];
            if lengths[w] == 0 {
                continue;
            }
            let s = (0..left.len()).find(|&s| lengths[left[s][w]] < lengths[w]).expect("descent");
            let sw = left[s][w];
            for x in 0..n {
                if x == w || !leq[x][w] {
                    continue;
                }
                let sx = left[s][x];
                r[x][w] = if lengths[sx] < lengths[x] {
                    r[sx][sw].clone()
                } else {
                    add(&mul(&vec![-1, 1], &r[x][sw]), &mul(&vec![0, 1], &r[sx][sw]))
                };
            }
        }
        let mut p = vec![vec![IPoly::new(); n]; n];
        for w in 0..n {
            let mut below: Vec<usize> = (0..n).filter(|&x| leq[x][w]).collect();
            below.sort_by_key(|&x| std::cmp::Reverse(lengths[x]));
            for x in below {
                if x == w {
                    p[x][w] = vec![1];
                    continue;
                }
                let mut s = IPoly::new();
                for y in 0..n {
                    if y != x && leq[x][y] && leq[y][w] {
                        s = add(&s, &mul(&r[x][y], &p[y][w]));
                    }
                }
                let d = lengths[w] - lengths[x];
                let keep = (d - 1) / 2;
                p[x][w] = trim(s.iter().take(keep + 1).map(|c| -c).collect());
            }
        }
        ROracle { elements, lengths, leq, r, p }
    }

    pub fn index(&self, w: &WeylElement) -> usize {
        self.elements.iter().position(|e| e == w).expect("element")
    }

    /// Whether every cell of `table` equals the oracle.
    pub fn agrees_with(&self, table: &KlTable) -> Result<(), String> {
        let g = table.group();
        for (x, ex) in self.elements.iter().enumerate() {
            for (w, ew) in self.elements.iter().enumerate() {
                let (i, j) = (g.index_of(ex).unwrap(), g.index_of(ew).unwrap());
                let got: IPoly = table.by_index(i, j).0.iter().map(|c| i64::try_from(c).unwrap()).collect();
                if trim(got.clone()) != self.p[x][w] {
                    return Err(format!("P_{{{x},{w}}}: engine {got:?}, oracle {:?}", self.p[x][w]));
                }
            }
        }
        Ok(())
    }
}

/// `(λ+ρ, α) ≠ 0` for both positive odd roots of `gl(1|2)`, written out:
/// with `ρ = (−1, 1, 0)` (up to a multiple of the supertrace) and the form
/// `diag(1, −1, −1)`, `α = ε₁−δ_j` pairs to `(λ₁+ρ₁) + (λ_{j+1}+ρ_{j+1})`.
pub fn gl12_typical(l: &[num_rational::BigRational; 3]) -> bool {
    use num_traits::Zero;
    let one = num_rational::BigRational::from_integer(1.into());
    let a = &l[0] - &one;
    let b = &l[1] + &one;
    let c = l[2].clone();
    !(&a + &b).is_zero() && !(&a + &c).is_zero()
}

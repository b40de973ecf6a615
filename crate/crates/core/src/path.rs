//! Piecewise-linear paths `(x_1, ..., x_s; a_0, ..., a_s)` and their root
//! operators, generic over the kind of direction.
//!
//! Semi-infinite LS paths use Peterson representatives as directions, quantum
//! LS paths use minimal coset representatives in `W^J`. Both only need the
//! slope `<alpha_j^vee, x lambda>` and the reflected direction.

use std::fmt::Debug;
use std::hash::Hash;

use num_rational::Ratio;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cartan::LevelZeroWeight;
use crate::peterson::Shape;
use crate::weyl::{AffineWeylElt, FiniteWeylElt};

pub type Rational = Ratio<i64>;

pub trait Direction: Clone + Debug + Eq + Hash + Ord {
    /// `<alpha_j^vee, x lambda>`, `j` in `0..=rank`.
    fn slope(&self, shape: &Shape, j: usize) -> i64;
    /// The direction of `r_j x` after projecting back to representatives.
    fn reflect(&self, shape: &Shape, j: usize) -> Self;
    /// `x lambda` as a level-zero weight.
    fn weight(&self, shape: &Shape) -> LevelZeroWeight;
}

impl Direction for AffineWeylElt {
    fn slope(&self, shape: &Shape, j: usize) -> i64 {
        shape.slope(self, j)
    }

    fn reflect(&self, shape: &Shape, j: usize) -> Self {
        let d = shape.datum();
        AffineWeylElt::simple(d, j).mul(d, self)
    }

    fn weight(&self, shape: &Shape) -> LevelZeroWeight {
        shape.image(self)
    }
}

impl Direction for FiniteWeylElt {
    fn slope(&self, shape: &Shape, j: usize) -> i64 {
        shape.datum().simple_pairing(j, &self.act_on_weight(shape.lambda()))
    }

    fn reflect(&self, shape: &Shape, j: usize) -> Self {
        let d = shape.datum();
        let s = if j == 0 {
            FiniteWeylElt::reflection(d, d.highest_root())
        } else {
            FiniteWeylElt::simple(d, j)
        };
        shape.parabolic().floor(&s.mul(d, self))
    }

    fn weight(&self, shape: &Shape) -> LevelZeroWeight {
        LevelZeroWeight::finite(self.act_on_weight(shape.lambda()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LsPath<D> {
    dirs: Vec<D>,
    cuts: Vec<Rational>,
}

impl<D: Direction> LsPath<D> {
    /// `(x; 0, 1)`.
    pub fn straight(x: D) -> Self {
        LsPath { dirs: vec![x], cuts: vec![Rational::zero(), Rational::one()] }
    }

    /// Builds a path without checking the chain condition.
    pub fn from_parts(dirs: Vec<D>, cuts: Vec<Rational>) -> Self {
        assert!(!dirs.is_empty(), "a path has at least one direction");
        assert_eq!(cuts.len(), dirs.len() + 1, "cuts must bracket every direction");
        LsPath { dirs, cuts }
    }

    pub fn directions(&self) -> &[D] {
        &self.dirs
    }

    pub fn cuts(&self) -> &[Rational] {
        &self.cuts
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    /// `iota`, the first direction.
    pub fn initial(&self) -> &D {
        &self.dirs[0]
    }

    /// `kappa`, the last direction.
    pub fn terminal(&self) -> &D {
        &self.dirs[self.dirs.len() - 1]
    }

    /// Applies `g` to every direction, keeping the cuts.
    pub fn map<E: Direction>(&self, g: impl FnMut(&D) -> E) -> LsPath<E> {
        LsPath { dirs: self.dirs.iter().map(g).collect(), cuts: self.cuts.clone() }
    }

    /// Merges equal neighbours.
    pub fn normalized(mut self) -> Self {
        let mut u = 1;
        while u < self.dirs.len() {
            if self.dirs[u] == self.dirs[u - 1] {
                self.dirs.remove(u);
                self.cuts.remove(u);
            } else {
                u += 1;
            }
        }
        self
    }

    pub fn has_repeats(&self) -> bool {
        self.dirs.windows(2).any(|w| w[0] == w[1])
    }

    pub fn cuts_increasing(&self) -> bool {
        self.cuts[0].is_zero() && self.cuts[self.cuts.len() - 1].is_one() && self.cuts.windows(2).all(|w| w[0] < w[1])
    }

    /// `wt = sum (a_u - a_{u-1}) x_u lambda`; panics if not integral.
    pub fn weight(&self, shape: &Shape) -> LevelZeroWeight {
        let n = shape.datum().rank();
        let mut fw = vec![Rational::zero(); n];
        let mut delta = Rational::zero();
        for (u, x) in self.dirs.iter().enumerate() {
            let len = self.cuts[u + 1] - self.cuts[u];
            let w = x.weight(shape);
            for (acc, c) in fw.iter_mut().zip(&w.fw) {
                *acc += len * c;
            }
            delta += len * w.delta;
        }
        let int = |r: Rational| -> i64 {
            assert!(r.is_integer(), "path weight is not integral");
            r.to_integer()
        };
        LevelZeroWeight { fw: fw.into_iter().map(int).collect(), delta: int(delta) }
    }

    /// `H_j` at each breakpoint `a_0, ..., a_s`.
    pub fn heights(&self, shape: &Shape, j: usize) -> Vec<Rational> {
        let mut h = Vec::with_capacity(self.cuts.len());
        let mut acc = Rational::zero();
        h.push(acc);
        for (u, x) in self.dirs.iter().enumerate() {
            acc += (self.cuts[u + 1] - self.cuts[u]) * x.slope(shape, j);
            h.push(acc);
        }
        h
    }

    /// `m_j`, the minimum of `H_j`; always an integer.
    pub fn min_height(&self, shape: &Shape, j: usize) -> i64 {
        let h = self.heights(shape, j);
        let m = h.iter().min().copied().unwrap_or_else(Rational::zero);
        debug_assert!(m.is_integer(), "local minimum {m} is not integral");
        m.floor().to_integer()
    }

    pub fn eps(&self, shape: &Shape, j: usize) -> i64 {
        -self.min_height(shape, j)
    }

    pub fn phi(&self, shape: &Shape, j: usize) -> i64 {
        let h = self.heights(shape, j);
        let m = h.iter().min().copied().unwrap_or_else(Rational::zero);
        (h[h.len() - 1] - m).to_integer()
    }

    pub fn e(&self, shape: &Shape, j: usize) -> Option<Self> {
        let h = self.heights(shape, j);
        let m = *h.iter().min()?;
        if m.is_zero() {
            return None;
        }
        let target = m + Rational::one();
        // t1 = a_q, the first breakpoint where the minimum is reached
        let q = h.iter().position(|&v| v == m)?;
        // t0: scan segments backwards for the last crossing of m + 1
        let mut u = q;
        while h[u - 1] < target {
            u -= 1;
        }
        let p = u;
        let slope = self.dirs[p - 1].slope(shape, j);
        debug_assert!(slope < 0);
        let t0 = self.cuts[p - 1] + (target - h[p - 1]) / slope;

        let mut dirs: Vec<D> = Vec::with_capacity(self.dirs.len() + 1);
        dirs.extend_from_slice(&self.dirs[..p]);
        dirs.extend(self.dirs[p - 1..q].iter().map(|x| x.reflect(shape, j)));
        dirs.extend_from_slice(&self.dirs[q..]);
        let mut cuts: Vec<Rational> = Vec::with_capacity(self.cuts.len() + 1);
        cuts.extend_from_slice(&self.cuts[..p]);
        cuts.push(t0);
        cuts.extend_from_slice(&self.cuts[p..]);

        if q < self.dirs.len() && dirs[q] == dirs[q + 1] {
            dirs.remove(q + 1);
            cuts.remove(q + 1);
        }
        if t0 == self.cuts[p - 1] {
            dirs.remove(p - 1);
            cuts.remove(p - 1);
        }
        Some(LsPath { dirs, cuts })
    }

    pub fn f(&self, shape: &Shape, j: usize) -> Option<Self> {
        let h = self.heights(shape, j);
        let m = *h.iter().min()?;
        let s = self.dirs.len();
        if h[s] == m {
            return None;
        }
        let target = m + Rational::one();
        // t0 = a_p, the last breakpoint at the minimum
        let p = h.iter().rposition(|&v| v == m)?;
        let mut u = p + 1;
        while h[u] < target {
            u += 1;
        }
        let q = u - 1;
        let slope = self.dirs[q].slope(shape, j);
        debug_assert!(slope > 0);
        let t1 = self.cuts[q] + (target - h[q]) / slope;

        let mut dirs: Vec<D> = Vec::with_capacity(s + 1);
        dirs.extend_from_slice(&self.dirs[..p]);
        dirs.extend(self.dirs[p..=q].iter().map(|x| x.reflect(shape, j)));
        dirs.extend_from_slice(&self.dirs[q..]);
        let mut cuts: Vec<Rational> = Vec::with_capacity(s + 2);
        cuts.extend_from_slice(&self.cuts[..=q]);
        cuts.push(t1);
        cuts.extend_from_slice(&self.cuts[q + 1..]);

        if t1 == self.cuts[q + 1] {
            dirs.remove(q + 1);
            cuts.remove(q + 2);
        }
        if p >= 1 && dirs[p - 1] == dirs[p] {
            dirs.remove(p - 1);
            cuts.remove(p);
        }
        Some(LsPath { dirs, cuts })
    }

    pub fn e_pow(&self, shape: &Shape, j: usize, k: usize) -> Option<Self> {
        let mut eta = self.clone();
        for _ in 0..k {
            eta = eta.e(shape, j)?;
        }
        Some(eta)
    }

    pub fn f_pow(&self, shape: &Shape, j: usize, k: usize) -> Option<Self> {
        let mut eta = self.clone();
        for _ in 0..k {
            eta = eta.f(shape, j)?;
        }
        Some(eta)
    }

    pub fn e_max(&self, shape: &Shape, j: usize) -> Self {
        let k = self.eps(shape, j) as usize;
        self.e_pow(shape, j, k).expect("eps counts nonzero e-steps")
    }

    pub fn f_max(&self, shape: &Shape, j: usize) -> Self {
        let k = self.phi(shape, j) as usize;
        self.f_pow(shape, j, k).expect("phi counts nonzero f-steps")
    }

    /// `S_{r_j}`: `f_j^n` if `n = <alpha_j^vee, wt> >= 0`, else `e_j^{-n}`.
    pub fn reflect_string(&self, shape: &Shape, j: usize) -> Self {
        let h = self.heights(shape, j);
        let n = h[h.len() - 1].to_integer();
        if n >= 0 {
            self.f_pow(shape, j, n as usize)
        } else {
            self.e_pow(shape, j, (-n) as usize)
        }
        .expect("Weyl group action stays inside the j-string")
    }

    /// The least common multiple of the cut denominators.
    pub fn denominator(&self) -> i64 {
        self.cuts.iter().fold(1i64, |acc, c| num_integer::lcm(acc, *c.denom()))
    }

    pub fn cut_strings(&self) -> Vec<String> {
        self.cuts.iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect()
    }
}

/// Parses `"p/q"` or an integer.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            (q != 0).then(|| Rational::new(p, q))
        }
        None => s.parse::<i64>().ok().map(Rational::from_integer),
    }
}

/// Rounds a nonnegative rational down to `usize`.
pub fn floor_usize(r: Rational) -> usize {
    debug_assert!(!r.is_negative());
    r.floor().to_integer().to_usize().unwrap_or(0)
}

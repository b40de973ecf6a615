//! Laurent polynomials in the weight variables `x^mu` and `q`, with an
//! explicit truncation window on the `q`-exponent.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::weyl::FiniteWeylElt;

/// Coefficient ring of a graded character.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self> + From<i64> {}

impl<T> Coefficient for T where T: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = T> + From<i64> {}

/// Range of `q`-exponents that are known exactly; `None` is unbounded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Window {
    pub q_min: Option<i64>,
    pub q_max: Option<i64>,
}

impl Window {
    pub fn contains(&self, q: i64) -> bool {
        self.q_min.is_none_or(|m| q >= m) && self.q_max.is_none_or(|m| q <= m)
    }

    pub fn meet(&self, other: &Window) -> Window {
        let pick = |a: Option<i64>, b: Option<i64>, f: fn(i64, i64) -> i64| match (a, b) {
            (Some(x), Some(y)) => Some(f(x, y)),
            (x, None) => x,
            (None, y) => y,
        };
        Window { q_min: pick(self.q_min, other.q_min, i64::max), q_max: pick(self.q_max, other.q_max, i64::min) }
    }

    fn inverted(&self) -> Window {
        Window { q_min: self.q_max.map(|m| -m), q_max: self.q_min.map(|m| -m) }
    }
}

/// `sum c_{mu,k} x^mu q^k`, weights in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedChar<C> {
    rank: usize,
    terms: BTreeMap<(Vec<i64>, i64), C>,
    window: Window,
}

impl<C: Coefficient> GradedChar<C> {
    pub fn zero(rank: usize) -> Self {
        GradedChar { rank, terms: BTreeMap::new(), window: Window::default() }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank], 0, C::one())
    }

    pub fn monomial(fw: Vec<i64>, q: i64, c: C) -> Self {
        let mut out = Self::zero(fw.len());
        out.add_term(fw, q, c);
        out
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn with_window(mut self, window: Window) -> Self {
        self.window = window;
        self.terms.retain(|(_, q), _| window.contains(*q));
        self
    }

    pub fn add_term(&mut self, fw: Vec<i64>, q: i64, c: C) {
        if !self.window.contains(q) || c.is_zero() {
            return;
        }
        let key = (fw, q);
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn coefficient(&self, fw: &[i64], q: i64) -> C {
        self.terms.get(&(fw.to_vec(), q)).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in `(weight, q)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&[i64], i64, &C)> {
        self.terms.iter().map(|((fw, q), c)| (fw.as_slice(), *q, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.window = self.window.meet(&other.window);
        out.terms.retain(|(_, q), _| out.window.contains(*q));
        for ((fw, q), c) in &other.terms {
            out.add_term(fw.clone(), *q, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Product, truncated to the common window.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        out.window = self.window.meet(&other.window);
        for ((fa, qa), ca) in &self.terms {
            for ((fb, qb), cb) in &other.terms {
                let fw = fa.iter().zip(fb).map(|(a, b)| a + b).collect();
                out.add_term(fw, qa + qb, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.rank);
        out.window = self.window;
        for ((fw, q), v) in &self.terms {
            out.add_term(fw.clone(), *q, v.clone() * c.clone());
        }
        out
    }

    /// `q -> q^{-1}`.
    pub fn invert_q(&self) -> Self {
        let mut out = Self::zero(self.rank);
        out.window = self.window.inverted();
        for ((fw, q), c) in &self.terms {
            out.add_term(fw.clone(), -q, c.clone());
        }
        out
    }

    /// `x -> x^{-1}`.
    pub fn invert_x(&self) -> Self {
        let mut out = Self::zero(self.rank);
        out.window = self.window;
        for ((fw, q), c) in &self.terms {
            out.add_term(fw.iter().map(|v| -v).collect(), *q, c.clone());
        }
        out
    }

    /// `x^mu -> x^{w mu}`.
    pub fn act(&self, w: &FiniteWeylElt) -> Self {
        let mut out = Self::zero(self.rank);
        out.window = self.window;
        for ((fw, q), c) in &self.terms {
            out.add_term(w.act_on_weight(fw), *q, c.clone());
        }
        out
    }

    /// Keeps `q`-exponents in `[q_min, q_max]`.
    pub fn truncate(&self, q_min: Option<i64>, q_max: Option<i64>) -> Self {
        self.clone().with_window(self.window.meet(&Window { q_min, q_max }))
    }

    /// The coefficient of `q^k`, a `q`-free character.
    pub fn q_slice(&self, k: i64) -> Self {
        let mut out = Self::zero(self.rank);
        for ((fw, q), c) in &self.terms {
            if *q == k {
                out.add_term(fw.clone(), 0, c.clone());
            }
        }
        out
    }

    /// Sorted distinct `q`-exponents.
    pub fn q_exponents(&self) -> Vec<i64> {
        let mut qs: Vec<i64> = self.terms.keys().map(|(_, q)| *q).collect();
        qs.sort_unstable();
        qs.dedup();
        qs
    }

    /// Sum of all coefficients (`x -> 1`, `q -> 1`).
    pub fn total(&self) -> C {
        self.terms.values().cloned().fold(C::zero(), |a, b| a + b)
    }

    /// Support as `(weight, q)` pairs.
    pub fn support(&self) -> Vec<(Vec<i64>, i64)> {
        self.terms.keys().cloned().collect()
    }

    /// Converts coefficients into another ring.
    pub fn map_coefficients<D: Coefficient>(&self, mut g: impl FnMut(&C) -> D) -> GradedChar<D> {
        let mut out = GradedChar::zero(self.rank);
        out.window = self.window;
        for ((fw, q), c) in &self.terms {
            out.add_term(fw.clone(), *q, g(c));
        }
        out
    }

    /// Terms that differ between `self` and `other`, as
    /// `(weight, q, left, right)`.
    pub fn diff(&self, other: &Self) -> Vec<(Vec<i64>, i64, C, C)> {
        let mut keys: Vec<&(Vec<i64>, i64)> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .filter_map(|(fw, q)| {
                let a = self.coefficient(fw, *q);
                let b = other.coefficient(fw, *q);
                (a != b).then(|| (fw.clone(), *q, a, b))
            })
            .collect()
    }
}

impl<C: Coefficient> fmt::Display for GradedChar<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((fw, q), c)| {
                let x = fw.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",");
                format!("{c}*x^({x})*q^{q}")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `prod_i prod_{r=1}^{m_i} 1/(1 - u^r)` up to `u^depth`: the number of
/// tuples of partitions with at most `m_i` parts, by total size.
pub fn partition_counts(lambda: &[i64], depth: usize) -> Vec<i64> {
    let mut series = vec![0i64; depth + 1];
    series[0] = 1;
    for &m in lambda {
        for r in 1..=m.max(0) as usize {
            for k in r..=depth {
                series[k] += series[k - r];
            }
        }
    }
    series
}

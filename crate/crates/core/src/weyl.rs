//! Finite and affine Weyl group arithmetic.
//!
//! A finite element is stored through its action on fundamental-weight
//! coordinates (`p`) and on simple-coroot coordinates (`c`); the two are
//! transposes of each other's inverses. An affine element `w t_xi` is the pair
//! `(w, xi)`.

use std::cmp::Ordering;
use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::cartan::{AffineRealRoot, CartanDatum, Coweight, LevelZeroWeight, Root};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct FiniteWeylElt {
    n: usize,
    /// action on weights, row-major
    p: Vec<i64>,
    /// action on coweights, row-major
    c: Vec<i64>,
    length: usize,
}

impl PartialEq for FiniteWeylElt {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
    }
}

impl Eq for FiniteWeylElt {}

impl Hash for FiniteWeylElt {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.p.hash(state);
    }
}

impl PartialOrd for FiniteWeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FiniteWeylElt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.length.cmp(&other.length).then_with(|| self.p.cmp(&other.p))
    }
}

fn matmul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn matvec(n: usize, a: &[i64], v: &[i64]) -> Vec<i64> {
    (0..n).map(|i| (0..n).map(|j| a[i * n + j] * v[j]).sum()).collect()
}

fn transpose(n: usize, a: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..n {
            out[j * n + i] = a[i * n + j];
        }
    }
    out
}

fn identity(n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for i in 0..n {
        out[i * n + i] = 1;
    }
    out
}

impl FiniteWeylElt {
    pub(crate) fn placeholder(n: usize) -> Self {
        FiniteWeylElt { n, p: identity(n), c: identity(n), length: 0 }
    }

    fn from_matrices(d: &CartanDatum, p: Vec<i64>, c: Vec<i64>) -> Self {
        let mut w = FiniteWeylElt { n: d.rank(), p, c, length: 0 };
        w.length = d
            .positive_roots()
            .iter()
            .filter(|r| !w.act_on_root(d, r).is_positive())
            .count();
        w
    }

    pub fn identity(d: &CartanDatum) -> Self {
        Self::placeholder(d.rank())
    }

    /// Simple reflection `s_i`, `i` in `1..=rank`.
    pub fn simple(d: &CartanDatum, i: usize) -> Self {
        let n = d.rank();
        let mut p = identity(n);
        let mut c = identity(n);
        for k in 1..=n {
            // (s_i mu)_k = mu_k - a_ki mu_i
            p[(k - 1) * n + (i - 1)] -= d.entry(k, i);
            // (s_i xi)_i = xi_i - sum_k a_ki xi_k
            c[(i - 1) * n + (k - 1)] -= d.entry(k, i);
        }
        FiniteWeylElt { n, p, c, length: 1 }
    }

    /// Reflection in a (positive or negative) finite root.
    pub fn reflection(d: &CartanDatum, alpha: &Root) -> Self {
        let n = d.rank();
        let coroot = d.coroot(alpha);
        let alpha_fw = d.root_to_weight(alpha);
        let mut p = identity(n);
        let mut c = identity(n);
        for k in 0..n {
            for i in 0..n {
                // s_alpha varpi_k = varpi_k - <alpha^vee, varpi_k> alpha
                p[i * n + k] -= coroot.0[k] * alpha_fw[i];
                // s_alpha alpha_k^vee = alpha_k^vee - <alpha_k^vee, alpha> alpha^vee
                c[i * n + k] -= alpha_fw[k] * coroot.0[i];
            }
        }
        Self::from_matrices(d, p, c)
    }

    pub fn from_word(d: &CartanDatum, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(d);
        for &i in word {
            if i == 0 || i > d.rank() {
                return Err(Error::Parse(format!("reflection index {i} outside 1..={}", d.rank())));
            }
            w = w.mul(d, &Self::simple(d, i));
        }
        Ok(w)
    }

    /// Longest element of the parabolic subgroup generated by `nodes`.
    pub fn longest_of(d: &CartanDatum, nodes: &[usize]) -> Self {
        let mut w = Self::identity(d);
        loop {
            let next = nodes.iter().find(|&&i| w.act_on_root(d, &d.simple_root(i)).is_positive());
            match next {
                Some(&i) => w = w.mul(d, &Self::simple(d, i)),
                None => return w,
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn is_identity(&self) -> bool {
        self.p == identity(self.n)
    }

    pub fn mul(&self, d: &CartanDatum, other: &FiniteWeylElt) -> FiniteWeylElt {
        let p = matmul(self.n, &self.p, &other.p);
        let c = matmul(self.n, &self.c, &other.c);
        Self::from_matrices(d, p, c)
    }

    pub fn inverse(&self) -> FiniteWeylElt {
        FiniteWeylElt {
            n: self.n,
            p: transpose(self.n, &self.c),
            c: transpose(self.n, &self.p),
            length: self.length,
        }
    }

    pub fn act_on_weight(&self, fw: &[i64]) -> Vec<i64> {
        matvec(self.n, &self.p, fw)
    }

    pub fn act_on_coweight(&self, xi: &Coweight) -> Coweight {
        Coweight(matvec(self.n, &self.c, &xi.0))
    }

    pub fn act_on_root(&self, d: &CartanDatum, beta: &Root) -> Root {
        let eps = d.symmetrizer();
        let n = self.n;
        let scaled: Vec<i64> = (0..n).map(|j| beta.0[j] * eps[j]).collect();
        let img = matvec(n, &self.c, &scaled);
        Root((0..n).map(|i| img[i] / eps[i]).collect())
    }

    /// `w alpha_i < 0`.
    pub fn has_right_descent(&self, d: &CartanDatum, i: usize) -> bool {
        !self.act_on_root(d, &d.simple_root(i)).is_positive()
    }

    /// Reduced word `i_1 ... i_k` with `w = s_{i_1} ... s_{i_k}`.
    pub fn reduced_word(&self, d: &CartanDatum) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length);
        let mut w = self.clone();
        while w.length > 0 {
            let i = (1..=self.n).find(|&i| w.has_right_descent(d, i)).expect("nonidentity element has a descent");
            word.push(i);
            w = w.mul(d, &Self::simple(d, i));
        }
        word.reverse();
        word
    }

    /// Bruhat order `self <= other`, by the lifting property along a left
    /// descent of `other`.
    pub fn bruhat_leq(&self, d: &CartanDatum, other: &FiniteWeylElt) -> bool {
        if self.length > other.length {
            return false;
        }
        if self.length == other.length {
            return self == other;
        }
        if self.length == 0 {
            return true;
        }
        let other_inv = other.inverse();
        let i = (1..=self.n).find(|&i| other_inv.has_right_descent(d, i)).expect("positive length");
        let s = Self::simple(d, i);
        let sw = s.mul(d, other);
        let su = s.mul(d, self);
        let lower = if su.length < self.length { su } else { self.clone() };
        lower.bruhat_leq(d, &sw)
    }

    /// All elements of the subgroup generated by `nodes`.
    pub fn subgroup_elements(d: &CartanDatum, nodes: &[usize]) -> Vec<FiniteWeylElt> {
        let id = Self::identity(d);
        let mut seen: HashSet<FiniteWeylElt> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            for &i in nodes {
                let v = w.mul(d, &Self::simple(d, i));
                if seen.insert(v.clone()) {
                    queue.push_back(v);
                }
            }
            out.push(w);
        }
        out.sort();
        out
    }

    pub fn word_label(&self, d: &CartanDatum) -> String {
        let word = self.reduced_word(d);
        if word.is_empty() {
            "e".to_string()
        } else {
            word.iter().map(|i| format!("s{i}")).collect()
        }
    }
}

/// `w t_xi`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AffineWeylElt {
    pub w: FiniteWeylElt,
    pub xi: Coweight,
}

impl PartialOrd for AffineWeylElt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AffineWeylElt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.si_length()
            .cmp(&other.si_length())
            .then_with(|| self.xi.cmp(&other.xi))
            .then_with(|| self.w.cmp(&other.w))
    }
}

impl AffineWeylElt {
    pub fn new(w: FiniteWeylElt, xi: Coweight) -> Self {
        AffineWeylElt { w, xi }
    }

    pub fn identity(d: &CartanDatum) -> Self {
        AffineWeylElt { w: FiniteWeylElt::identity(d), xi: Coweight::zero(d.rank()) }
    }

    pub fn finite(w: FiniteWeylElt) -> Self {
        let n = w.rank();
        AffineWeylElt { w, xi: Coweight::zero(n) }
    }

    pub fn translation(d: &CartanDatum, xi: Coweight) -> Self {
        AffineWeylElt { w: FiniteWeylElt::identity(d), xi }
    }

    /// `r_beta = r_alpha t_{n alpha^vee}` for `beta = alpha + n delta`.
    pub fn reflection(d: &CartanDatum, beta: &AffineRealRoot) -> Self {
        let w = FiniteWeylElt::reflection(d, &beta.finite);
        let xi = d.coroot(&beta.finite).scale(beta.delta);
        AffineWeylElt { w, xi }
    }

    pub(crate) fn simple_reflection_uncached(d: &CartanDatum, j: usize) -> Self {
        if j == 0 {
            Self::reflection(d, &d.affine_simple_root(0))
        } else {
            Self::finite(FiniteWeylElt::simple(d, j))
        }
    }

    /// `r_j` for `j` in `0..=rank`.
    pub fn simple(d: &CartanDatum, j: usize) -> Self {
        d.simple_affine[j].clone()
    }

    pub fn mul(&self, d: &CartanDatum, other: &AffineWeylElt) -> AffineWeylElt {
        let w = self.w.mul(d, &other.w);
        let xi = other.w.inverse().act_on_coweight(&self.xi).add(&other.xi);
        AffineWeylElt { w, xi }
    }

    pub fn inverse(&self) -> AffineWeylElt {
        let w = self.w.inverse();
        let xi = self.w.act_on_coweight(&self.xi).neg();
        AffineWeylElt { w, xi }
    }

    /// `w t_xi mu = w mu - <xi, mu> delta`.
    pub fn act_on_weight(&self, mu: &LevelZeroWeight) -> LevelZeroWeight {
        LevelZeroWeight { fw: self.w.act_on_weight(&mu.fw), delta: mu.delta - self.xi.pair_weight(&mu.fw) }
    }

    pub fn act_on_root(&self, d: &CartanDatum, beta: &AffineRealRoot) -> AffineRealRoot {
        let delta = beta.delta - d.pair_root(&self.xi, &beta.finite);
        AffineRealRoot { finite: self.w.act_on_root(d, &beta.finite), delta }
    }

    /// `l(w) + 2 <xi, rho>`.
    pub fn si_length(&self) -> i64 {
        self.w.length() as i64 + 2 * self.xi.0.iter().sum::<i64>()
    }

    pub fn is_identity(&self) -> bool {
        self.xi.is_zero() && self.w.is_identity()
    }

    pub fn is_translation(&self) -> bool {
        self.w.is_identity()
    }

    /// `x^{-1} alpha_j < 0`.
    pub fn has_left_descent(&self, d: &CartanDatum, j: usize) -> bool {
        !self.inverse().act_on_root(d, &d.affine_simple_root(j)).is_positive()
    }

    /// Reduced word `j_1 ... j_k` over `0..=rank` with `x = r_{j_1} ... r_{j_k}`.
    pub fn reduced_word(&self, d: &CartanDatum) -> Vec<usize> {
        let mut word = Vec::new();
        let mut x = self.clone();
        while !x.is_identity() {
            let j = (0..=d.rank()).find(|&j| x.has_left_descent(d, j)).expect("nonidentity element has a descent");
            word.push(j);
            x = Self::simple(d, j).mul(d, &x);
        }
        word
    }

    /// Ordinary affine length.
    pub fn length(&self, d: &CartanDatum) -> usize {
        self.reduced_word(d).len()
    }

    /// `"s1s2 | 0,1"`.
    pub fn label(&self, d: &CartanDatum) -> String {
        format!("{} | {}", self.w.word_label(d), join(&self.xi.0))
    }

    /// `"1,2|0,1"`, the CLI exchange form.
    pub fn to_spec(&self, d: &CartanDatum) -> String {
        format!("{}|{}", join(&self.w.reduced_word(d)), join(&self.xi.0))
    }

    /// Parses `"word|xi"`, e.g. `"1,2|0,1"`; either side may be empty.
    pub fn parse(d: &CartanDatum, s: &str) -> Result<Self> {
        let (word, xi) = s.split_once('|').unwrap_or((s, ""));
        let word: Vec<usize> = parse_list(word)?;
        let w = FiniteWeylElt::from_word(d, &word)?;
        let mut xi: Vec<i64> = parse_list(xi)?;
        if xi.is_empty() {
            xi = vec![0; d.rank()];
        }
        if xi.len() != d.rank() {
            return Err(Error::DimensionMismatch { expected: d.rank(), got: xi.len() });
        }
        Ok(AffineWeylElt { w, xi: Coweight(xi) })
    }
}

fn join<T: fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<T>().map_err(|_| Error::Parse(format!("bad integer `{t}`"))))
        .collect()
}

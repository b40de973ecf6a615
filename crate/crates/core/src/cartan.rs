//! Root-system tables for untwisted affine types.
//!
//! Everything is generated from the finite Cartan matrix by closing the
//! simple roots under simple reflections. Conventions:
//!
//! * `cartan[i][j] = <alpha_i^vee, alpha_j>`, Bourbaki node numbering;
//! * roots are integer vectors over the simple roots, coweights over the
//!   simple coroots, weights over the level-zero fundamental weights;
//! * the affine node is `0`, finite nodes are `1..=rank`. Vectors are indexed
//!   by `node - 1`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::{AffineWeylElt, FiniteWeylElt};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A => "A",
            CartanType::B => "B",
            CartanType::C => "C",
            CartanType::D => "D",
            CartanType::E => "E",
            CartanType::F => "F",
            CartanType::G => "G",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            "F" => Ok(CartanType::F),
            "G" => Ok(CartanType::G),
            other => Err(Error::UnknownType(other.to_string())),
        }
    }
}

/// Element of the finite root lattice `Q`, in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Element of the coroot lattice `Q^vee`, in simple-coroot coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Coweight(pub Vec<i64>);

impl Coweight {
    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    pub fn simple(rank: usize, node: usize) -> Self {
        let mut v = vec![0; rank];
        v[node - 1] = 1;
        Coweight(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Coweight {
        Coweight(self.0.iter().map(|c| -c).collect())
    }

    pub fn scale(&self, k: i64) -> Coweight {
        Coweight(self.0.iter().map(|c| k * c).collect())
    }

    /// `<xi, mu>` for a weight given in fundamental-weight coordinates.
    pub fn pair_weight(&self, fw: &[i64]) -> i64 {
        self.0.iter().zip(fw).map(|(a, b)| a * b).sum()
    }
}

/// Level-zero weight `sum fw_i varpi_i + delta * delta`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct LevelZeroWeight {
    pub fw: Vec<i64>,
    pub delta: i64,
}

impl LevelZeroWeight {
    pub fn finite(fw: Vec<i64>) -> Self {
        LevelZeroWeight { fw, delta: 0 }
    }

    pub fn zero(rank: usize) -> Self {
        LevelZeroWeight { fw: vec![0; rank], delta: 0 }
    }

    pub fn add(&self, other: &LevelZeroWeight) -> LevelZeroWeight {
        LevelZeroWeight {
            fw: self.fw.iter().zip(&other.fw).map(|(a, b)| a + b).collect(),
            delta: self.delta + other.delta,
        }
    }

    pub fn neg(&self) -> LevelZeroWeight {
        LevelZeroWeight {
            fw: self.fw.iter().map(|c| -c).collect(),
            delta: -self.delta,
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.fw.iter().all(|&c| c >= 0)
    }
}

/// Real affine root `alpha + n delta` with `alpha` a nonzero finite root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AffineRealRoot {
    pub finite: Root,
    pub delta: i64,
}

impl AffineRealRoot {
    pub fn new(finite: Root, delta: i64) -> Self {
        debug_assert!(!finite.is_zero(), "real roots have nonzero finite part");
        AffineRealRoot { finite, delta }
    }

    pub fn is_positive(&self) -> bool {
        self.delta > 0 || (self.delta == 0 && self.finite.is_positive())
    }

    pub fn neg(&self) -> AffineRealRoot {
        AffineRealRoot { finite: self.finite.neg(), delta: -self.delta }
    }
}

impl fmt::Display for AffineRealRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.finite.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        match self.delta {
            0 => Ok(()),
            1 => write!(f, "+d"),
            -1 => write!(f, "-d"),
            n if n > 0 => write!(f, "+{n}d"),
            n => write!(f, "{n}d"),
        }
    }
}

/// Immutable root datum of an untwisted affine type.
#[derive(Debug)]
pub struct CartanDatum {
    kind: CartanType,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i) / 2`, short roots normalised to 1.
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    positive_coroots: Vec<Coweight>,
    highest_root: Root,
    highest_coroot: Coweight,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    sigma: Vec<usize>,
    pub(crate) longest: FiniteWeylElt,
    pub(crate) simple_affine: Vec<AffineWeylElt>,
}

fn cartan_matrix(kind: CartanType, n: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::UnsupportedType { kind: kind.to_string(), rank: n };
    let ok = match kind {
        CartanType::A => n >= 1,
        CartanType::B | CartanType::C => n >= 2,
        CartanType::D => n >= 4,
        CartanType::E => (6..=8).contains(&n),
        CartanType::F => n == 4,
        CartanType::G => n == 2,
    };
    if !ok {
        return Err(bad());
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i - 1][j - 1] = aij;
        a[j - 1][i - 1] = aji;
    };
    match kind {
        CartanType::A => {
            for i in 1..n {
                link(i, i + 1, -1, -1);
            }
        }
        CartanType::B => {
            for i in 1..n - 1 {
                link(i, i + 1, -1, -1);
            }
            // alpha_n short
            link(n - 1, n, -1, -2);
        }
        CartanType::C => {
            for i in 1..n - 1 {
                link(i, i + 1, -1, -1);
            }
            // alpha_n long
            link(n - 1, n, -2, -1);
        }
        CartanType::D => {
            for i in 1..n - 1 {
                link(i, i + 1, -1, -1);
            }
            link(n - 2, n, -1, -1);
        }
        CartanType::E => {
            link(1, 3, -1, -1);
            link(2, 4, -1, -1);
            for i in 3..n {
                link(i, i + 1, -1, -1);
            }
        }
        CartanType::F => {
            link(1, 2, -1, -1);
            link(2, 3, -1, -2);
            link(3, 4, -1, -1);
        }
        CartanType::G => {
            // alpha_1 short
            link(1, 2, -3, -1);
        }
    }
    Ok(a)
}

fn symmetrizer(a: &[Vec<i64>]) -> Vec<i64> {
    // Solve eps_i a_ij = eps_j a_ji along the (connected) Dynkin diagram,
    // working with rationals num/den and clearing denominators at the end.
    let n = a.len();
    let mut num = vec![0i64; n];
    let mut den = vec![1i64; n];
    num[0] = 1;
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && !seen[j] {
                // eps_j = eps_i * a_ij / a_ji
                num[j] = num[i] * a[i][j];
                den[j] = den[i] * a[j][i];
                if den[j] < 0 {
                    num[j] = -num[j];
                    den[j] = -den[j];
                }
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    let lcm = den.iter().fold(1i64, |acc, &d| num_integer::lcm(acc, d));
    let mut eps: Vec<i64> = num.iter().zip(&den).map(|(p, q)| p * (lcm / q)).collect();
    let g = eps.iter().fold(0i64, |acc, &e| num_integer::gcd(acc, e));
    for e in eps.iter_mut() {
        *e /= g;
    }
    eps
}

impl CartanDatum {
    /// Builds the datum for `(kind, rank)`; all derived tables are computed
    /// eagerly.
    pub fn build(kind: CartanType, rank: usize) -> Result<Arc<CartanDatum>> {
        let cartan = cartan_matrix(kind, rank)?;
        let symmetrizer = symmetrizer(&cartan);
        let n = rank;

        // reflection closure
        let mut all: HashSet<Root> = HashSet::new();
        let mut queue = VecDeque::new();
        for i in 0..n {
            let mut v = vec![0; n];
            v[i] = 1;
            let r = Root(v);
            all.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let p: i64 = (0..n).map(|k| cartan[i][k] * beta.0[k]).sum();
                if p == 0 {
                    continue;
                }
                let mut v = beta.0.clone();
                v[i] -= p;
                let r = Root(v);
                if all.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut positive_roots: Vec<Root> = all.into_iter().filter(Root::is_positive).collect();
        positive_roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));

        let norm = |c: &Root| -> i64 {
            // (beta, beta)/2
            let mut s = 0;
            for i in 0..n {
                for j in 0..n {
                    s += c.0[i] * c.0[j] * symmetrizer[i] * cartan[i][j];
                }
            }
            s / 2
        };
        let positive_coroots: Vec<Coweight> = positive_roots
            .iter()
            .map(|r| {
                let e = norm(r);
                Coweight(
                    (0..n)
                        .map(|j| {
                            let v = r.0[j] * symmetrizer[j];
                            debug_assert_eq!(v % e, 0);
                            v / e
                        })
                        .collect(),
                )
            })
            .collect();
        let top = positive_roots.len() - 1;
        let highest_root = positive_roots[top].clone();
        let highest_coroot = positive_coroots[top].clone();
        let mut marks = vec![1];
        marks.extend(highest_root.0.iter().copied());
        let mut comarks = vec![1];
        comarks.extend(highest_coroot.0.iter().copied());

        let mut datum = CartanDatum {
            kind,
            rank,
            cartan,
            symmetrizer,
            positive_roots,
            positive_coroots,
            highest_root,
            highest_coroot,
            marks,
            comarks,
            sigma: (1..=n).collect(),
            longest: FiniteWeylElt::placeholder(n),
            simple_affine: Vec::new(),
        };
        let w0 = FiniteWeylElt::longest_of(&datum, &(1..=n).collect::<Vec<_>>());
        // w0 alpha_j = -alpha_{sigma(j)}
        let sigma = (1..=n)
            .map(|j| {
                let img = w0.act_on_root(&datum, &datum.simple_root(j)).neg();
                (1..=n)
                    .find(|&k| datum.simple_root(k) == img)
                    .expect("w0 maps simple roots to negative simple roots")
            })
            .collect();
        datum.sigma = sigma;
        datum.longest = w0;
        let simple_affine = (0..=n).map(|j| AffineWeylElt::simple_reflection_uncached(&datum, j)).collect();
        datum.simple_affine = simple_affine;
        Ok(Arc::new(datum))
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `a_ij = <alpha_i^vee, alpha_j>` for finite nodes `i, j` in `1..=rank`.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The affinized `(rank+1) x (rank+1)` Cartan matrix, node 0 first.
    pub fn affine_cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let theta = &self.highest_root;
        let theta_v = &self.highest_coroot;
        let mut m = vec![vec![0i64; n + 1]; n + 1];
        m[0][0] = 2;
        for j in 1..=n {
            // <alpha_0^vee, alpha_j> = -<theta^vee, alpha_j>
            m[0][j] = -(1..=n).map(|k| theta_v.0[k - 1] * self.entry(k, j)).sum::<i64>();
            // <alpha_j^vee, alpha_0> = -<alpha_j^vee, theta>
            m[j][0] = -(1..=n).map(|k| self.entry(j, k) * theta.0[k - 1]).sum::<i64>();
            for k in 1..=n {
                m[j][k] = self.entry(j, k);
            }
        }
        m
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn positive_coroots(&self) -> &[Coweight] {
        &self.positive_coroots
    }

    /// Coroot of an arbitrary (possibly negative) finite root.
    pub fn coroot(&self, alpha: &Root) -> Coweight {
        if let Some(k) = self.positive_roots.iter().position(|r| r == alpha) {
            return self.positive_coroots[k].clone();
        }
        let neg = alpha.neg();
        let k = self
            .positive_roots
            .iter()
            .position(|r| *r == neg)
            .unwrap_or_else(|| panic!("{alpha:?} is not a root"));
        self.positive_coroots[k].neg()
    }

    pub fn is_root(&self, alpha: &Root) -> bool {
        let neg = alpha.neg();
        self.positive_roots.iter().any(|r| r == alpha || *r == neg)
    }

    pub fn highest_root(&self) -> &Root {
        &self.highest_root
    }

    pub fn highest_coroot(&self) -> &Coweight {
        &self.highest_coroot
    }

    /// Marks `a_j`, node 0 first.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Comarks `a_j^vee`, node 0 first.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn simple_root(&self, node: usize) -> Root {
        let mut v = vec![0; self.rank];
        v[node - 1] = 1;
        Root(v)
    }

    /// Affine simple root `alpha_j`, with `alpha_0 = -theta + delta`.
    pub fn affine_simple_root(&self, node: usize) -> AffineRealRoot {
        if node == 0 {
            AffineRealRoot::new(self.highest_root.neg(), 1)
        } else {
            AffineRealRoot::new(self.simple_root(node), 0)
        }
    }

    /// Fundamental-weight coordinates of a root: `<alpha_i^vee, beta>`.
    pub fn root_to_weight(&self, beta: &Root) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|k| self.cartan[i][k] * beta.0[k]).sum())
            .collect()
    }

    /// `<xi, beta>` for a coweight and a root.
    pub fn pair_root(&self, xi: &Coweight, beta: &Root) -> i64 {
        xi.pair_weight(&self.root_to_weight(beta))
    }

    /// `<alpha_j^vee, mu>` for an affine node, `mu` level zero in
    /// fundamental-weight coordinates (`alpha_0^vee` acts as `-theta^vee`).
    pub fn simple_pairing(&self, node: usize, fw: &[i64]) -> i64 {
        if node == 0 {
            -self.highest_coroot.pair_weight(fw)
        } else {
            fw[node - 1]
        }
    }

    /// `rho` in fundamental-weight coordinates (all ones).
    pub fn rho(&self) -> Vec<i64> {
        vec![1; self.rank]
    }

    /// The diagram involution defined by `w0 alpha_j = -alpha_sigma(j)`.
    pub fn sigma(&self, node: usize) -> usize {
        self.sigma[node - 1]
    }

    pub fn sigma_map(&self) -> Vec<usize> {
        self.sigma.clone()
    }

    pub fn longest_element(&self) -> &FiniteWeylElt {
        &self.longest
    }

    /// `-w0 lambda` in fundamental-weight coordinates.
    pub fn dual_weight(&self, lambda: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.rank];
        for j in 1..=self.rank {
            out[self.sigma(j) - 1] = lambda[j - 1];
        }
        out
    }

    /// Finite nodes `i` with `<alpha_i^vee, lambda> = 0`.
    pub fn stabilizer_nodes(&self, lambda: &[i64]) -> BTreeSet<usize> {
        (1..=self.rank).filter(|&i| lambda[i - 1] == 0).collect()
    }

    pub fn check_dominant(&self, lambda: &[i64]) -> Result<()> {
        if lambda.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, got: lambda.len() });
        }
        if lambda.iter().any(|&m| m < 0) {
            return Err(Error::NotDominant(lambda.to_vec()));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(kind: CartanType, n: usize) -> usize {
        CartanDatum::build(kind, n).unwrap().positive_roots().len()
    }

    #[test]
    fn positive_root_counts() {
        assert_eq!(count(CartanType::A, 1), 1);
        assert_eq!(count(CartanType::A, 2), 3);
        assert_eq!(count(CartanType::A, 4), 10);
        assert_eq!(count(CartanType::B, 3), 9);
        assert_eq!(count(CartanType::C, 2), 4);
        assert_eq!(count(CartanType::C, 3), 9);
        assert_eq!(count(CartanType::D, 4), 12);
        assert_eq!(count(CartanType::D, 5), 20);
        assert_eq!(count(CartanType::E, 6), 36);
        assert_eq!(count(CartanType::E, 7), 63);
        assert_eq!(count(CartanType::E, 8), 120);
        assert_eq!(count(CartanType::F, 4), 24);
        assert_eq!(count(CartanType::G, 2), 6);
    }

    #[test]
    fn rank_one_and_two() {
        let a1 = CartanDatum::build(CartanType::A, 1).unwrap();
        assert_eq!(a1.positive_roots(), &[Root(vec![1])]);
        assert_eq!(a1.highest_root(), &Root(vec![1]));
        assert_eq!(a1.rho(), vec![1]);

        let a2 = CartanDatum::build(CartanType::A, 2).unwrap();
        assert_eq!(a2.highest_root(), &Root(vec![1, 1]));
        assert_eq!(Coweight::simple(2, 1).pair_weight(&[1, 0]), 1);
        assert_eq!(Coweight::simple(2, 1).pair_weight(&[0, 1]), 0);
        assert_eq!(Coweight(vec![1, 1]).pair_weight(&a2.rho()), 2);

        let c2 = CartanDatum::build(CartanType::C, 2).unwrap();
        assert_eq!(c2.highest_root(), &Root(vec![2, 1]));
        assert_eq!(c2.highest_coroot().pair_weight(&[1, 0]), 1);
    }

    #[test]
    fn known_highest_roots() {
        let f4 = CartanDatum::build(CartanType::F, 4).unwrap();
        assert_eq!(f4.highest_root(), &Root(vec![2, 3, 4, 2]));
        let g2 = CartanDatum::build(CartanType::G, 2).unwrap();
        assert_eq!(g2.highest_root(), &Root(vec![3, 2]));
        let e8 = CartanDatum::build(CartanType::E, 8).unwrap();
        assert_eq!(e8.highest_root(), &Root(vec![2, 3, 4, 6, 5, 4, 3, 2]));
    }

    #[test]
    fn affine_matrix_has_null_vector_of_marks() {
        for (k, n) in [
            (CartanType::A, 1),
            (CartanType::A, 3),
            (CartanType::B, 3),
            (CartanType::C, 3),
            (CartanType::D, 4),
            (CartanType::E, 6),
            (CartanType::F, 4),
            (CartanType::G, 2),
        ] {
            let d = CartanDatum::build(k, n).unwrap();
            let m = d.affine_cartan_matrix();
            assert_eq!(d.marks()[0], 1);
            assert_eq!(d.comarks()[0], 1);
            for row in &m {
                let s: i64 = row.iter().zip(d.marks()).map(|(a, b)| a * b).sum();
                assert_eq!(s, 0, "{k}{n}");
            }
            for (i, row) in m.iter().enumerate() {
                assert_eq!(row[i], 2);
                for (j, &v) in row.iter().enumerate() {
                    if i != j {
                        assert!(v <= 0);
                    }
                }
            }
        }
    }

    #[test]
    fn rho_pairs_to_one_with_simple_coroots() {
        let d = CartanDatum::build(CartanType::B, 3).unwrap();
        // rho = half the sum of positive roots
        let mut twice = vec![0i64; 3];
        for r in d.positive_roots() {
            for (t, c) in twice.iter_mut().zip(d.root_to_weight(r)) {
                *t += c;
            }
        }
        assert_eq!(twice, vec![2, 2, 2]);
    }

    #[test]
    fn sigma_involution() {
        let sig = |k, n| CartanDatum::build(k, n).unwrap().sigma_map();
        assert_eq!(sig(CartanType::A, 1), vec![1]);
        assert_eq!(sig(CartanType::A, 2), vec![2, 1]);
        assert_eq!(sig(CartanType::C, 2), vec![1, 2]);
        assert_eq!(sig(CartanType::A, 3), vec![3, 2, 1]);
        assert_eq!(sig(CartanType::D, 4), vec![1, 2, 3, 4]);
        assert_eq!(sig(CartanType::D, 5), vec![1, 2, 3, 5, 4]);
        assert_eq!(sig(CartanType::E, 6), vec![6, 2, 5, 4, 3, 1]);
    }

    #[test]
    fn unsupported_combinations() {
        assert!(CartanDatum::build(CartanType::E, 9).is_err());
        assert!(CartanDatum::build(CartanType::D, 3).is_err());
        assert!(CartanDatum::build(CartanType::G, 3).is_err());
        assert!("Q".parse::<CartanType>().is_err());
    }

    #[test]
    fn affine_root_positivity_matches_description() {
        let d = CartanDatum::build(CartanType::A, 2).unwrap();
        let mut all = d.positive_roots().to_vec();
        all.extend(d.positive_roots().iter().map(Root::neg));
        for alpha in &all {
            for n in -5..=5 {
                let beta = AffineRealRoot::new(alpha.clone(), n);
                let expected = n > 0 || (n == 0 && d.positive_roots().contains(alpha));
                assert_eq!(beta.is_positive(), expected);
            }
        }
    }
}

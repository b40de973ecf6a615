//! Peterson coset representatives and the semi-infinite Bruhat graph.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex};

use num_rational::Ratio;

use crate::cartan::{AffineRealRoot, CartanDatum, Coweight, LevelZeroWeight, Root};
use crate::error::{Error, Result};
use crate::weyl::{AffineWeylElt, FiniteWeylElt};

/// A subset `J` of the finite nodes with its derived root data.
#[derive(Clone, Debug)]
pub struct Parabolic {
    datum: Arc<CartanDatum>,
    nodes: Vec<usize>,
    member: Vec<bool>,
    roots: Vec<Root>,
    /// simple roots of `(Delta_J)_af`: `alpha_j` for `j` in `J`, then
    /// `-theta_K + delta` for each connected component `K`
    affine_simple: Vec<AffineRealRoot>,
    components: Vec<Vec<usize>>,
    longest: FiniteWeylElt,
}

impl Parabolic {
    pub fn new(datum: Arc<CartanDatum>, nodes: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = nodes.into_iter().collect();
        let n = datum.rank();
        let mut member = vec![false; n];
        for &j in &set {
            member[j - 1] = true;
        }
        let nodes: Vec<usize> = set.into_iter().collect();
        let roots: Vec<Root> = datum
            .positive_roots()
            .iter()
            .filter(|r| r.0.iter().enumerate().all(|(i, &c)| c == 0 || member[i]))
            .cloned()
            .collect();

        let mut components: Vec<Vec<usize>> = Vec::new();
        let mut seen = vec![false; n];
        for &j in &nodes {
            if seen[j - 1] {
                continue;
            }
            let mut comp = vec![j];
            seen[j - 1] = true;
            let mut k = 0;
            while k < comp.len() {
                let i = comp[k];
                for &m in &nodes {
                    if !seen[m - 1] && datum.entry(i, m) != 0 {
                        seen[m - 1] = true;
                        comp.push(m);
                    }
                }
                k += 1;
            }
            comp.sort_unstable();
            components.push(comp);
        }

        let mut affine_simple: Vec<AffineRealRoot> =
            nodes.iter().map(|&j| AffineRealRoot::new(datum.simple_root(j), 0)).collect();
        for comp in &components {
            // highest root of the component: the tallest root supported on it
            let theta = roots
                .iter()
                .filter(|r| r.0.iter().enumerate().all(|(i, &c)| c == 0 || comp.contains(&(i + 1))))
                .max_by_key(|r| r.height())
                .expect("component has a root");
            affine_simple.push(AffineRealRoot::new(theta.neg(), 1));
        }
        let longest = FiniteWeylElt::longest_of(&datum, &nodes);
        Parabolic { datum, nodes, member, roots, affine_simple, components, longest }
    }

    /// `J_lambda = { i : <alpha_i^vee, lambda> = 0 }`.
    pub fn of_weight(datum: Arc<CartanDatum>, lambda: &[i64]) -> Self {
        let nodes = datum.stabilizer_nodes(lambda);
        Self::new(datum, nodes)
    }

    pub fn datum(&self) -> &Arc<CartanDatum> {
        &self.datum
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn contains(&self, node: usize) -> bool {
        node >= 1 && self.member[node - 1]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// `w_{J,0}`.
    pub fn longest(&self) -> &FiniteWeylElt {
        &self.longest
    }

    /// Whether `w alpha > 0` for every `alpha` in `Delta_J^+`.
    pub fn is_minimal(&self, w: &FiniteWeylElt) -> bool {
        self.nodes.iter().all(|&j| !w.has_right_descent(&self.datum, j))
    }

    /// `floor(w)^J`, the minimal representative of `w W_J`.
    pub fn floor(&self, w: &FiniteWeylElt) -> FiniteWeylElt {
        let d = &self.datum;
        let mut w = w.clone();
        while let Some(&j) = self.nodes.iter().find(|&&j| w.has_right_descent(d, j)) {
            w = w.mul(d, &FiniteWeylElt::simple(d, j));
        }
        w
    }

    /// Membership in `W_J`: `w` fixes every `varpi_i`, `i` not in `J`.
    pub fn in_subgroup(&self, w: &FiniteWeylElt) -> bool {
        let n = self.datum.rank();
        (1..=n).filter(|&i| !self.contains(i)).all(|i| {
            let mut e = vec![0; n];
            e[i - 1] = 1;
            w.act_on_weight(&e) == e
        })
    }

    /// `[xi]_{I \ J}`: the coordinates on `J` set to zero.
    pub fn bracket(&self, xi: &Coweight) -> Coweight {
        Coweight(xi.0.iter().enumerate().map(|(i, &c)| if self.member[i] { 0 } else { c }).collect())
    }

    /// Whether `<xi, gamma>` lies in `{-1, 0}` for every `gamma` in `Delta_J^+`.
    pub fn is_adjusted(&self, xi: &Coweight) -> bool {
        self.roots.iter().all(|g| matches!(self.datum.pair_root(xi, g), -1 | 0))
    }

    pub fn is_peterson_rep(&self, x: &AffineWeylElt) -> bool {
        let d = &self.datum;
        self.roots.iter().all(|alpha| {
            x.act_on_root(d, &AffineRealRoot::new(alpha.clone(), 0)).is_positive()
                && x.act_on_root(d, &AffineRealRoot::new(alpha.neg(), 1)).is_positive()
        })
    }

    /// `Pi^J(x)`, by right multiplication with simple reflections of
    /// `(W_J)_af` until no simple root of `(Delta_J)_af` is sent negative.
    pub fn project(&self, x: &AffineWeylElt) -> AffineWeylElt {
        let d = &self.datum;
        let mut x = x.clone();
        loop {
            let bad = self.affine_simple.iter().find(|b| !x.act_on_root(d, b).is_positive());
            match bad {
                Some(beta) => x = x.mul(d, &AffineWeylElt::reflection(d, beta)),
                None => return x,
            }
        }
    }

    /// `(phi_J(xi), z_xi)` with `Pi^J(t_xi) = z_xi t_{xi + phi_J(xi)}`.
    pub fn j_adjust(&self, xi: &Coweight) -> (Coweight, FiniteWeylElt) {
        let p = self.project(&AffineWeylElt::translation(&self.datum, xi.clone()));
        (p.xi.sub(xi), p.w)
    }

    /// Splits a representative `x = w z_xi t_xi` into `(w, z_xi, xi)`.
    pub fn decompose(&self, x: &AffineWeylElt) -> (FiniteWeylElt, FiniteWeylElt, Coweight) {
        let d = &self.datum;
        let w = self.floor(&x.w);
        let z = w.inverse().mul(d, &x.w);
        (w, z, x.xi.clone())
    }

    /// `cl(x)`, the `W^J` part of a representative.
    pub fn cl(&self, x: &AffineWeylElt) -> FiniteWeylElt {
        self.floor(&x.w)
    }

    /// Representatives `Pi^J(r_{j_1} ... r_{j_k})` for all words of length at
    /// most `radius`, sorted.
    pub fn word_ball(&self, radius: usize) -> Vec<AffineWeylElt> {
        let d = &self.datum;
        let id = AffineWeylElt::identity(d);
        let mut words: HashSet<AffineWeylElt> = HashSet::from([id.clone()]);
        let mut frontier = vec![id];
        for _ in 0..radius {
            let mut next = Vec::new();
            for x in &frontier {
                for j in 0..=d.rank() {
                    let y = x.mul(d, &AffineWeylElt::simple(d, j));
                    if words.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        let reps: BTreeSet<AffineWeylElt> = words.iter().map(|x| self.project(x)).collect();
        reps.into_iter().collect()
    }
}

type MemoKey = (AffineWeylElt, AffineWeylElt, i64);

/// The semi-infinite Bruhat graph `SB(lambda)` on `(W^J)_af`, `J = J_lambda`.
#[derive(Debug)]
pub struct Shape {
    lambda: Vec<i64>,
    parabolic: Parabolic,
    memo: Mutex<HashMap<MemoKey, bool>>,
}

impl Shape {
    pub fn new(datum: Arc<CartanDatum>, lambda: &[i64]) -> Result<Arc<Shape>> {
        datum.check_dominant(lambda)?;
        let parabolic = Parabolic::of_weight(datum, lambda);
        Ok(Arc::new(Shape { lambda: lambda.to_vec(), parabolic, memo: Mutex::new(HashMap::new()) }))
    }

    pub fn datum(&self) -> &Arc<CartanDatum> {
        self.parabolic.datum()
    }

    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    /// The shape `-w0 lambda`.
    pub fn dual(&self) -> Arc<Shape> {
        Shape::new(self.datum().clone(), &self.datum().dual_weight(&self.lambda)).expect("dual of dominant is dominant")
    }

    /// `x lambda`.
    pub fn image(&self, x: &AffineWeylElt) -> LevelZeroWeight {
        x.act_on_weight(&LevelZeroWeight::finite(self.lambda.clone()))
    }

    /// `<alpha_j^vee, x lambda>` for `j` in `0..=rank`.
    pub fn slope(&self, x: &AffineWeylElt, j: usize) -> i64 {
        self.datum().simple_pairing(j, &x.w.act_on_weight(&self.lambda))
    }

    /// `<xi, lambda>` for the translation part of `x`.
    pub fn translation_degree(&self, x: &AffineWeylElt) -> i64 {
        x.xi.pair_weight(&self.lambda)
    }

    /// `<beta^vee, x lambda>`; only the finite part of `beta` matters.
    pub fn pairing(&self, beta: &AffineRealRoot, x: &AffineWeylElt) -> i64 {
        let d = self.datum();
        d.coroot(&beta.finite).pair_weight(&x.w.act_on_weight(&self.lambda))
    }

    pub fn require_rep(&self, x: &AffineWeylElt) -> Result<()> {
        if self.parabolic.is_peterson_rep(x) {
            Ok(())
        } else {
            Err(Error::NotPetersonRepresentative)
        }
    }

    /// `x^vee = x floor(w0)^{sigma(J)}`, a representative for `-w0 lambda`.
    pub fn dual_elt(&self, x: &AffineWeylElt) -> AffineWeylElt {
        let d = self.datum();
        let sigma_j: Vec<usize> = self.parabolic.nodes().iter().map(|&j| d.sigma(j)).collect();
        let w_sigma = FiniteWeylElt::longest_of(d, &sigma_j);
        let floor_w0 = d.longest_element().mul(d, &w_sigma);
        x.mul(d, &AffineWeylElt::finite(floor_w0))
    }

    /// Out-edges of `x` in `SB(lambda)`, restricted to `SB(a)` when `a` is
    /// given.
    pub fn covers(&self, x: &AffineWeylElt, a: Option<Ratio<i64>>) -> Vec<(AffineRealRoot, AffineWeylElt)> {
        self.covers_k(x, a.map_or(1, |a| *a.reduced().denom()))
    }

    /// Covers whose label pairs with `x lambda` to a multiple of `k`.
    pub fn covers_k(&self, x: &AffineWeylElt, k: i64) -> Vec<(AffineRealRoot, AffineWeylElt)> {
        let d = self.datum();
        let target = x.si_length() + 1;
        let mut out = Vec::new();
        let vlam = x.w.act_on_weight(&self.lambda);
        for (alpha, coroot) in d.positive_roots().iter().zip(d.positive_coroots()) {
            let p = coroot.pair_weight(&vlam);
            if p == 0 || p % k != 0 {
                continue;
            }
            for beta in [AffineRealRoot::new(alpha.clone(), 0), AffineRealRoot::new(alpha.neg(), 1)] {
                let y = AffineWeylElt::reflection(d, &beta).mul(d, x);
                if y.si_length() == target && self.parabolic.is_peterson_rep(&y) {
                    out.push((beta, y));
                }
            }
        }
        out.sort();
        out
    }

    /// `x <= y` in `SB(lambda)`, or in `SB(a)` when `a` is given.
    pub fn si_leq(&self, x: &AffineWeylElt, y: &AffineWeylElt, a: Option<Ratio<i64>>) -> bool {
        self.si_leq_k(x, y, a.map_or(1, |a| *a.reduced().denom()))
    }

    pub fn si_leq_k(&self, x: &AffineWeylElt, y: &AffineWeylElt, k: i64) -> bool {
        if x == y {
            return true;
        }
        let top = y.si_length();
        if x.si_length() >= top {
            return false;
        }
        let p = &self.parabolic;
        let cap = p.bracket(&y.xi);
        let below = |z: &AffineWeylElt| p.bracket(&z.xi).0.iter().zip(&cap.0).all(|(a, b)| a <= b);
        if !below(x) {
            return false;
        }
        let key = (x.clone(), y.clone(), k);
        if let Some(&v) = self.memo.lock().unwrap().get(&key) {
            return v;
        }
        let mut seen = HashSet::from([x.clone()]);
        let mut layer = vec![x.clone()];
        let mut found = false;
        'outer: while !layer.is_empty() {
            let mut next = Vec::new();
            for z in &layer {
                for (_, u) in self.covers_k(z, k) {
                    if u == *y {
                        found = true;
                        break 'outer;
                    }
                    if u.si_length() < top && below(&u) && seen.insert(u.clone()) {
                        next.push(u);
                    }
                }
            }
            layer = next;
        }
        self.memo.lock().unwrap().insert(key, found);
        found
    }

    /// Upward closure of `x` in `SB(lambda)` restricted by `keep`, in BFS
    /// order.
    pub fn upward_closure(&self, x: &AffineWeylElt, mut keep: impl FnMut(&AffineWeylElt) -> bool) -> Vec<AffineWeylElt> {
        let mut seen = HashSet::from([x.clone()]);
        let mut queue = VecDeque::from([x.clone()]);
        let mut out = Vec::new();
        while let Some(z) = queue.pop_front() {
            for (_, u) in self.covers_k(&z, 1) {
                if !seen.contains(&u) && keep(&u) {
                    seen.insert(u.clone());
                    queue.push_back(u);
                }
            }
            out.push(z);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::CartanType;

    fn datum(k: CartanType, n: usize) -> Arc<CartanDatum> {
        CartanDatum::build(k, n).unwrap()
    }

    fn elt(d: &CartanDatum, s: &str) -> AffineWeylElt {
        AffineWeylElt::parse(d, s).unwrap()
    }

    /// Positivity on `(Delta_J)_af^+` with `|n| <= 3`.
    fn brute_rep(p: &Parabolic, x: &AffineWeylElt) -> bool {
        let d = p.datum();
        p.positive_roots().iter().all(|alpha| {
            (0..=3).all(|n| x.act_on_root(d, &AffineRealRoot::new(alpha.clone(), n)).is_positive())
                && (1..=3).all(|n| x.act_on_root(d, &AffineRealRoot::new(alpha.neg(), n)).is_positive())
        })
    }

    /// Searches `x (W_J)_af` for representatives with `|zeta_j| <= 3`.
    fn brute_project(p: &Parabolic, x: &AffineWeylElt) -> Vec<AffineWeylElt> {
        let d = p.datum();
        let n = d.rank();
        let group = FiniteWeylElt::subgroup_elements(d, p.nodes());
        let mut zetas = vec![Coweight::zero(n)];
        for &j in p.nodes() {
            zetas = zetas
                .into_iter()
                .flat_map(|z| (-3..=3).map(move |c| z.add(&Coweight::simple(n, j).scale(c))))
                .collect();
        }
        let mut out = Vec::new();
        for u in &group {
            for z in &zetas {
                let y = x.mul(d, &AffineWeylElt::new(u.clone(), z.clone()));
                if brute_rep(p, &y) {
                    out.push(y);
                }
            }
        }
        out
    }

    #[test]
    fn representative_examples() {
        let d = datum(CartanType::A, 2);
        let p = Parabolic::new(d.clone(), [2]);
        assert!(p.is_peterson_rep(&AffineWeylElt::identity(&d)));
        assert!(p.is_peterson_rep(&elt(&d, "2|1,0")));
        assert!(!p.is_peterson_rep(&elt(&d, "|1,0")));
        let empty = Parabolic::new(d.clone(), []);
        assert!(empty.is_peterson_rep(&elt(&d, "|1,0")));
        assert!(empty.is_peterson_rep(&elt(&d, "1,2|-3,5")));
    }

    #[test]
    fn projection_examples() {
        let d = datum(CartanType::A, 2);
        let p = Parabolic::new(d.clone(), [2]);
        assert_eq!(p.project(&elt(&d, "|1,0")), elt(&d, "2|1,0"));
        assert!(p.project(&elt(&d, "|0,1")).is_identity());
        let x = elt(&d, "2|1,0");
        assert_eq!(p.project(&x), x);

        let (phi, z) = p.j_adjust(&Coweight(vec![0, 1]));
        assert_eq!(phi, Coweight(vec![0, -1]));
        assert!(z.is_identity());
        let (phi, z) = p.j_adjust(&Coweight(vec![1, 0]));
        assert_eq!(phi, Coweight(vec![0, 0]));
        assert_eq!(z, FiniteWeylElt::simple(&d, 2));

        let empty = Parabolic::new(d.clone(), []);
        let (phi, z) = empty.j_adjust(&Coweight(vec![3, -1]));
        assert!(phi.is_zero() && z.is_identity());
    }

    #[test]
    fn membership_matches_brute_force() {
        for (k, n) in [(CartanType::A, 2), (CartanType::C, 2), (CartanType::G, 2)] {
            let d = datum(k, n);
            let all = Parabolic::new(d.clone(), []).word_ball(4);
            for nodes in [vec![], vec![1], vec![2], vec![1, 2]] {
                let p = Parabolic::new(d.clone(), nodes);
                for x in &all {
                    assert_eq!(p.is_peterson_rep(x), brute_rep(&p, x));
                }
            }
        }
    }

    #[test]
    fn projection_matches_coset_search() {
        for (k, n) in [(CartanType::A, 2), (CartanType::C, 2), (CartanType::G, 2)] {
            let d = datum(k, n);
            let all = Parabolic::new(d.clone(), []).word_ball(3);
            for nodes in [vec![1], vec![2], vec![1, 2]] {
                let p = Parabolic::new(d.clone(), nodes);
                for x in &all {
                    let proj = p.project(x);
                    let found = brute_project(&p, x);
                    assert_eq!(found, vec![proj.clone()], "{k}{n} {:?}", p.nodes());
                    assert_eq!(p.project(&proj), proj);
                    // coset check: x^{-1} Pi(x) in (W_J)_af
                    let q = x.inverse().mul(&d, &proj);
                    assert!(p.in_subgroup(&q.w));
                    assert!(q.xi.0.iter().enumerate().all(|(i, &c)| c == 0 || p.contains(i + 1)));
                    // Pi(w t_xi) = floor(w) z_xi t_{xi + phi}
                    let (phi, z) = p.j_adjust(&x.xi);
                    let expect = AffineWeylElt::new(p.floor(&x.w).mul(&d, &z), x.xi.add(&phi));
                    assert_eq!(proj, expect);
                    assert!(p.is_adjusted(&proj.xi));
                    assert!(p.in_subgroup(&z));
                }
            }
        }
    }

    #[test]
    fn simple_reflection_membership() {
        for (k, n) in [(CartanType::A, 2), (CartanType::C, 2)] {
            let d = datum(k, n);
            for nodes in [vec![1], vec![2]] {
                let p = Parabolic::new(d.clone(), nodes);
                for x in p.word_ball(4) {
                    for j in 0..=n {
                        let y = AffineWeylElt::simple(&d, j).mul(&d, &x);
                        let pre = x.inverse().act_on_root(&d, &d.affine_simple_root(j));
                        let in_j = pre.finite.0.iter().enumerate().all(|(i, &c)| c == 0 || p.contains(i + 1));
                        assert_eq!(p.is_peterson_rep(&y), !in_j);
                    }
                }
            }
        }
    }

    #[test]
    fn cover_examples() {
        let d = datum(CartanType::A, 1);
        let sh = Shape::new(d.clone(), &[1]).unwrap();
        let e = AffineWeylElt::identity(&d);
        let s1 = elt(&d, "1|0");
        assert_eq!(sh.covers(&e, None), vec![(AffineRealRoot::new(Root(vec![1]), 0), s1.clone())]);
        assert_eq!(sh.covers(&s1, None), vec![(AffineRealRoot::new(Root(vec![-1]), 1), elt(&d, "|1"))]);

        let sh2 = Shape::new(d.clone(), &[2]).unwrap();
        assert_eq!(sh2.covers(&e, Some(Ratio::new(1, 2))), vec![(AffineRealRoot::new(Root(vec![1]), 0), s1.clone())]);
        assert!(sh.covers(&e, Some(Ratio::new(1, 2))).is_empty());

        assert!(sh.si_leq(&e, &e, None));
        assert!(sh.si_leq(&e, &elt(&d, "|1"), None));
        assert!(!sh.si_leq(&elt(&d, "|1"), &e, None));
    }

    #[test]
    fn covers_complete_against_wide_candidate_set() {
        for (k, n, lam) in [(CartanType::A, 2, vec![1, 0]), (CartanType::A, 2, vec![1, 1]), (CartanType::C, 2, vec![0, 1])] {
            let d = datum(k, n);
            let sh = Shape::new(d.clone(), &lam).unwrap();
            for x in sh.parabolic().word_ball(3) {
                let mut wide = Vec::new();
                for alpha in d.positive_roots() {
                    for m in -3..=3 {
                        for a in [alpha.clone(), alpha.neg()] {
                            let beta = AffineRealRoot::new(a, m);
                            if !beta.is_positive() {
                                continue;
                            }
                            let y = AffineWeylElt::reflection(&d, &beta).mul(&d, &x);
                            if y.si_length() == x.si_length() + 1 && sh.parabolic().is_peterson_rep(&y) {
                                wide.push((beta, y));
                            }
                        }
                    }
                }
                wide.sort();
                assert_eq!(sh.covers(&x, None), wide);
            }
        }
    }

    #[test]
    fn dual_examples() {
        let d = datum(CartanType::A, 1);
        let sh = Shape::new(d.clone(), &[1]).unwrap();
        assert_eq!(sh.dual_elt(&AffineWeylElt::identity(&d)), elt(&d, "1|0"));
        assert!(sh.dual_elt(&elt(&d, "1|0")).is_identity());
    }

    #[test]
    fn component_highest_roots() {
        let d = datum(CartanType::B, 3);
        let p = Parabolic::new(d.clone(), [2, 3]);
        assert_eq!(p.components(), &[vec![2, 3]]);
        assert_eq!(p.positive_roots().len(), 4);
        let d4 = datum(CartanType::A, 4);
        let p4 = Parabolic::new(d4, [1, 3, 4]);
        assert_eq!(p4.components(), &[vec![1], vec![3, 4]]);
    }
}

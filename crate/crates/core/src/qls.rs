//! Quantum LS paths as projections of semi-infinite LS paths, with the tail
//! degree and the two distinguished lifts.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use crate::cartan::LevelZeroWeight;
use crate::error::{Error, Result};
use crate::path::LsPath;
use crate::peterson::Shape;
use crate::sils::{self, SilsPath};
use crate::weyl::{AffineWeylElt, FiniteWeylElt};

pub type QlsPath = LsPath<FiniteWeylElt>;

pub fn identity_path(shape: &Shape) -> QlsPath {
    LsPath::straight(FiniteWeylElt::identity(shape.datum()))
}

/// `cl(eta)`: directions sent to their `W^J` parts, equal neighbours merged.
pub fn cl_project(shape: &Shape, eta: &SilsPath) -> QlsPath {
    eta.map(|x| shape.parabolic().cl(x)).normalized()
}

pub fn e(shape: &Shape, psi: &QlsPath, j: usize) -> Option<QlsPath> {
    psi.e(shape, j).map(LsPath::normalized)
}

pub fn f(shape: &Shape, psi: &QlsPath, j: usize) -> Option<QlsPath> {
    psi.f(shape, j).map(LsPath::normalized)
}

pub fn f_max(shape: &Shape, psi: &QlsPath, j: usize) -> QlsPath {
    let mut cur = psi.clone();
    while let Some(next) = f(shape, &cur, j) {
        cur = next;
    }
    cur
}

/// One root operator in a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Op {
    pub node: usize,
    pub raise: bool,
}

impl Op {
    pub fn apply<D: crate::path::Direction>(&self, shape: &Shape, eta: &LsPath<D>) -> Option<LsPath<D>> {
        if self.raise {
            eta.e(shape, self.node)
        } else {
            eta.f(shape, self.node)
        }
    }
}

/// Applies a monomial, first operator first.
pub fn apply_monomial(shape: &Shape, ops: &[Op], eta: &SilsPath) -> Option<SilsPath> {
    ops.iter().try_fold(eta.clone(), |acc, op| op.apply(shape, &acc))
}

#[derive(Clone, Debug)]
pub struct QlsEntry {
    pub path: QlsPath,
    /// a lift `X eta_e` in the component of `eta_e`
    pub lift: SilsPath,
    /// the operators `X`, in application order
    pub monomial: Vec<Op>,
    /// `eta_psi`: the lift with terminal direction in `W^J`
    pub eta_psi: SilsPath,
    /// `Deg~(psi)`, the delta coefficient of `wt(eta_psi)`
    pub deg_tail: i64,
}

impl QlsEntry {
    pub fn weight(&self, shape: &Shape) -> Vec<i64> {
        self.path.weight(shape).fw
    }

    /// `kappa(eta_psi)` as an element of `W^J`.
    pub fn kappa(&self) -> &FiniteWeylElt {
        &self.eta_psi.terminal().w
    }
}

/// `QLS(lambda)` with recorded lifts, sorted by path.
#[derive(Clone, Debug)]
pub struct QlsCrystal {
    shape: Arc<Shape>,
    entries: Vec<QlsEntry>,
    index: HashMap<QlsPath, usize>,
}

/// `eta_psi = X S_{t_{-xi}} eta_e` where `kappa(X eta_e)` has translation
/// part `xi`.
pub fn lift_kappa(shape: &Shape, lift: &SilsPath, monomial: &[Op]) -> Result<SilsPath> {
    let d = shape.datum();
    let xi = lift.terminal().xi.neg();
    let start = LsPath::straight(shape.parabolic().project(&AffineWeylElt::translation(d, xi)));
    let eta = apply_monomial(shape, monomial, &start)
        .ok_or_else(|| Error::InvalidPath("monomial vanishes on the translated path".into()))?;
    let k = eta.terminal();
    if !k.xi.is_zero() || !shape.parabolic().is_minimal(&k.w) {
        return Err(Error::NotMinimalRepresentative);
    }
    debug_assert_eq!(cl_project(shape, &eta), cl_project(shape, lift));
    Ok(eta)
}

impl QlsCrystal {
    /// Breadth-first closure of `cl(eta_e)` under all root operators, applied
    /// to recorded lifts.
    pub fn generate(shape: Arc<Shape>, budget: usize) -> Result<QlsCrystal> {
        let n = shape.datum().rank();
        let start = sils::identity_path(&shape);
        let mut found: Vec<(QlsPath, SilsPath, Vec<Op>)> = Vec::new();
        let mut index: HashMap<QlsPath, usize> = HashMap::new();
        let root = cl_project(&shape, &start);
        index.insert(root.clone(), 0);
        found.push((root, start, Vec::new()));
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for node in 0..=n {
                for raise in [true, false] {
                    let op = Op { node, raise };
                    let Some(next) = op.apply(&shape, &found[i].1) else { continue };
                    let psi = cl_project(&shape, &next);
                    if index.contains_key(&psi) {
                        continue;
                    }
                    if found.len() >= budget {
                        return Err(Error::BudgetExhausted(budget));
                    }
                    let mut mono = found[i].2.clone();
                    mono.push(op);
                    index.insert(psi.clone(), found.len());
                    queue.push_back(found.len());
                    found.push((psi, next, mono));
                }
            }
        }
        found.sort_by(|a, b| a.0.cmp(&b.0));
        let mut entries = Vec::with_capacity(found.len());
        for (path, lift, monomial) in found {
            let eta_psi = lift_kappa(&shape, &lift, &monomial)?;
            let deg_tail = eta_psi.weight(&shape).delta;
            entries.push(QlsEntry { path, lift, monomial, eta_psi, deg_tail });
        }
        let index = entries.iter().enumerate().map(|(i, e)| (e.path.clone(), i)).collect();
        Ok(QlsCrystal { shape, entries, index })
    }

    pub fn shape(&self) -> &Arc<Shape> {
        &self.shape
    }

    pub fn entries(&self) -> &[QlsEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn find(&self, psi: &QlsPath) -> Option<&QlsEntry> {
        self.index.get(psi).map(|&i| &self.entries[i])
    }

    pub fn position(&self, psi: &QlsPath) -> Option<usize> {
        self.index.get(psi).copied()
    }
}

/// `QLS(lambda)` together with `QLS(-w0 lambda)`, the `*` bijection and the
/// lifts `eta~_psi = (eta_{psi*})^vee`.
#[derive(Clone, Debug)]
pub struct QlsData {
    pub crystal: QlsCrystal,
    pub dual: QlsCrystal,
    /// `star[i]` indexes `psi_i^*` in `dual`
    pub star: Vec<usize>,
    /// `eta~_psi` for each entry of `crystal`
    pub tilde: Vec<SilsPath>,
}

impl QlsData {
    pub fn generate(shape: Arc<Shape>, budget: usize) -> Result<QlsData> {
        let crystal = QlsCrystal::generate(shape.clone(), budget)?;
        let dual_shape = shape.dual();
        let dual = QlsCrystal::generate(dual_shape.clone(), budget)?;
        let mut star = Vec::with_capacity(crystal.len());
        let mut tilde = Vec::with_capacity(crystal.len());
        for entry in crystal.entries() {
            let image = cl_project(&dual_shape, &sils::dual(&shape, &entry.lift));
            let k = dual.position(&image).ok_or_else(|| Error::InvalidPath("dual path missing from QLS(-w0 lambda)".into()))?;
            star.push(k);
            let lifted = sils::dual(&dual_shape, &dual.entries()[k].eta_psi);
            if cl_project(&shape, &lifted) != entry.path || !lifted.initial().xi.is_zero() {
                return Err(Error::NotMinimalRepresentative);
            }
            tilde.push(lifted);
        }
        Ok(QlsData { crystal, dual, star, tilde })
    }

    pub fn shape(&self) -> &Arc<Shape> {
        self.crystal.shape()
    }

    /// `psi^*` in `QLS(-w0 lambda)`.
    pub fn star_dual(&self, i: usize) -> &QlsEntry {
        &self.dual.entries()[self.star[i]]
    }

    /// `iota(eta~_psi)` as an element of `W^J`.
    pub fn iota_tilde(&self, i: usize) -> &FiniteWeylElt {
        &self.tilde[i].initial().w
    }

    /// Weight of `eta~_psi`.
    pub fn tilde_weight(&self, i: usize) -> LevelZeroWeight {
        self.tilde[i].weight(self.shape())
    }
}

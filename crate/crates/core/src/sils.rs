//! Semi-infinite LS paths: validity, duality, the Weyl group action,
//! Demazure subsets and canonicalization.

use std::collections::{HashMap, VecDeque};

use num_traits::One;

use crate::error::{Error, Result};
use crate::path::{LsPath, Rational};
use crate::peterson::Shape;
use crate::qls::{self, QlsPath};
use crate::weyl::AffineWeylElt;

pub type SilsPath = LsPath<AffineWeylElt>;

/// `eta_e = (e; 0, 1)`.
pub fn identity_path(shape: &Shape) -> SilsPath {
    LsPath::straight(AffineWeylElt::identity(shape.datum()))
}

/// Checks the chain condition; reports the first failing segment.
pub fn validate(shape: &Shape, eta: &SilsPath) -> Result<()> {
    if !eta.cuts_increasing() {
        return Err(Error::InvalidPath("cuts must increase strictly from 0 to 1".into()));
    }
    for (u, x) in eta.directions().iter().enumerate() {
        if !shape.parabolic().is_peterson_rep(x) {
            return Err(Error::InvalidPath(format!("direction {} is not a Peterson representative", u + 1)));
        }
    }
    let dirs = eta.directions();
    for u in 1..dirs.len() {
        let a = eta.cuts()[u];
        if dirs[u] == dirs[u - 1] {
            return Err(Error::InvalidPath(format!("directions {u} and {} coincide", u + 1)));
        }
        if !shape.si_leq(&dirs[u], &dirs[u - 1], Some(a)) {
            return Err(Error::InvalidPath(format!(
                "no path from direction {} to direction {u} in SB({a})",
                u + 1
            )));
        }
    }
    Ok(())
}

pub fn is_valid(shape: &Shape, eta: &SilsPath) -> bool {
    validate(shape, eta).is_ok()
}

/// `eta^vee = (x_s^vee, ..., x_1^vee; 0, 1 - a_{s-1}, ..., 1)`, a path for
/// `-w0 lambda`.
pub fn dual(shape: &Shape, eta: &SilsPath) -> SilsPath {
    let dirs: Vec<AffineWeylElt> = eta.directions().iter().rev().map(|x| shape.dual_elt(x)).collect();
    let cuts: Vec<Rational> = eta.cuts().iter().rev().map(|a| Rational::one() - a).collect();
    LsPath::from_parts(dirs, cuts)
}

/// Whether every direction lies in `W_J (W_J)_af`-translation form
/// `z_xi t_xi`, i.e. projects to `e`.
pub fn is_translation_type(shape: &Shape, eta: &SilsPath) -> bool {
    eta.directions().iter().all(|x| shape.parabolic().cl(x).is_identity())
}

/// `S_x eta`, factoring `x` into simple reflections.
pub fn weyl_action(shape: &Shape, x: &AffineWeylElt, eta: &SilsPath) -> SilsPath {
    let word = x.reduced_word(shape.datum());
    word.iter().rev().fold(eta.clone(), |acc, &j| acc.reflect_string(shape, j))
}

/// `S_x eta = (Pi^J(x x_1), ..., Pi^J(x x_s); a)` for translation-type
/// `eta`.
pub fn weyl_action_translation_type(shape: &Shape, x: &AffineWeylElt, eta: &SilsPath) -> SilsPath {
    let d = shape.datum();
    eta.map(|y| shape.parabolic().project(&x.mul(d, y)))
}

/// `eta` lies in `B_{>= x}`: `kappa(eta) >= x`.
pub fn in_demazure_kappa(shape: &Shape, eta: &SilsPath, x: &AffineWeylElt) -> bool {
    shape.si_leq(x, eta.terminal(), None)
}

/// `eta` lies in `B_{x >=}`: `x >= iota(eta)`.
pub fn in_demazure_iota(shape: &Shape, eta: &SilsPath, x: &AffineWeylElt) -> bool {
    shape.si_leq(eta.initial(), x, None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonical {
    /// nodes `j_1, j_2, ...`, applied as `f_{j_1}^max` first
    pub sequence: Vec<usize>,
    /// `f_{j_p}^max ... f_{j_1}^max eta`, of translation type
    pub terminal: SilsPath,
    /// the distinguished element `eta^C` of the component
    pub representative: SilsPath,
}

impl Canonical {
    /// Whether the component is the one containing `eta_e`.
    pub fn in_principal_component(&self) -> bool {
        self.representative.len() == 1
    }
}

/// Shortest sequence of `f_j^max` moves in the QLS crystal from `psi` to the
/// straight path `(e; 0, 1)`.
pub fn lowering_sequence(shape: &Shape, psi: &QlsPath) -> Vec<usize> {
    let target = qls::identity_path(shape);
    let mut prev: HashMap<QlsPath, (QlsPath, usize)> = HashMap::new();
    let mut queue = VecDeque::from([psi.clone()]);
    let mut seen = std::collections::HashSet::from([psi.clone()]);
    while let Some(cur) = queue.pop_front() {
        if cur == target {
            let mut seq = Vec::new();
            let mut node = cur;
            while let Some((p, j)) = prev.get(&node) {
                seq.push(*j);
                node = p.clone();
            }
            seq.reverse();
            return seq;
        }
        for j in 0..=shape.datum().rank() {
            let next = qls::f_max(shape, &cur, j);
            if seen.insert(next.clone()) {
                prev.insert(next.clone(), (cur.clone(), j));
                queue.push_back(next);
            }
        }
    }
    panic!("QLS crystal is connected through f-max moves")
}

/// Moves `eta` by `f_j^max` operators to a translation-type path and reads
/// off the distinguished element of its component.
pub fn canonicalize(shape: &Shape, eta: &SilsPath) -> Canonical {
    let seq = lowering_sequence(shape, &qls::cl_project(shape, eta));
    let terminal = seq.iter().fold(eta.clone(), |acc, &j| acc.f_max(shape, j));
    debug_assert!(is_translation_type(shape, &terminal));
    let back = terminal.terminal().inverse();
    let representative = weyl_action_translation_type(shape, &back, &terminal);
    Canonical { sequence: seq, terminal, representative }
}

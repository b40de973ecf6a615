//! Graded characters: QLS degree sums, Demazure characters as truncated
//! `q`-series, quotient characters, the enumeration oracle and the Weyl
//! character formula.

use std::collections::HashMap;

use crate::cartan::CartanDatum;
use crate::enumerate::{enumerate_demazure, EnumerationConfig};
use crate::error::{Error, Result};
use crate::peterson::Shape;
use crate::qls::{QlsCrystal, QlsData};
use crate::series::{partition_counts, Coefficient, GradedChar, Window};
use crate::weyl::{AffineWeylElt, FiniteWeylElt};

/// `sum_psi q^{Deg~(psi)} x^{wt(psi)}`, equal to `P_lambda(x; q^{-1}, 0)`.
pub fn qls_degree_sum<C: Coefficient>(crystal: &QlsCrystal) -> GradedChar<C> {
    let shape = crystal.shape();
    let mut out = GradedChar::zero(shape.datum().rank());
    for entry in crystal.entries() {
        out.add_term(entry.weight(shape), entry.deg_tail, C::one());
    }
    out
}

/// `P_lambda(x; q, 0)`.
pub fn macdonald_t0<C: Coefficient>(crystal: &QlsCrystal) -> GradedChar<C> {
    qls_degree_sum::<C>(crystal).invert_q()
}

fn partition_series<C: Coefficient>(lambda: &[i64], depth: i64, sign: i64) -> GradedChar<C> {
    let rank = lambda.len();
    let mut out = GradedChar::zero(rank);
    for (k, c) in partition_counts(lambda, depth.max(0) as usize).into_iter().enumerate() {
        out.add_term(vec![0; rank], sign * k as i64, C::from(c));
    }
    out
}

/// `gch V_e^-(lambda)`: the degree sum times `prod 1/(1 - q^{-r})`, kept for
/// `q`-exponents `>= -depth`.
pub fn gch_demazure_minus_e<C: Coefficient>(crystal: &QlsCrystal, depth: i64) -> GradedChar<C> {
    let lambda = crystal.shape().lambda();
    let window = Window { q_min: Some(-depth), q_max: None };
    qls_degree_sum::<C>(crystal).with_window(window).mul(&partition_series(lambda, depth, -1).with_window(window))
}

/// `gch V_{w0}^+(lambda)`: `P_lambda(x; q, 0)` times `prod 1/(1 - q^r)`,
/// kept for `q`-exponents `<= depth`.
pub fn gch_demazure_plus_w0<C: Coefficient>(crystal: &QlsCrystal, depth: i64) -> GradedChar<C> {
    let lambda = crystal.shape().lambda();
    let window = Window { q_min: None, q_max: Some(depth) };
    macdonald_t0::<C>(crystal).with_window(window).mul(&partition_series(lambda, depth, 1).with_window(window))
}

fn require_minimal(shape: &Shape, w: &FiniteWeylElt) -> Result<()> {
    if shape.parabolic().is_minimal(w) {
        Ok(())
    } else {
        Err(Error::NotMinimalRepresentative)
    }
}

/// Sum over `psi` with `kappa(eta_psi) >= w` of `q^{Deg~(psi)} x^{wt(psi)}`.
pub fn gch_quotient_minus<C: Coefficient>(crystal: &QlsCrystal, w: &FiniteWeylElt) -> Result<GradedChar<C>> {
    let shape = crystal.shape();
    require_minimal(shape, w)?;
    let d = shape.datum();
    let mut out = GradedChar::zero(d.rank());
    for entry in crystal.entries() {
        if w.bruhat_leq(d, entry.kappa()) {
            out.add_term(entry.weight(shape), entry.deg_tail, C::one());
        }
    }
    Ok(out)
}

/// Sum over `psi` with `w >= iota(eta~_psi)` of `q^k x^{wt(psi)}`, `k` the
/// delta coefficient of `wt(eta~_psi)`.
pub fn gch_quotient_plus<C: Coefficient>(data: &QlsData, w: &FiniteWeylElt) -> Result<GradedChar<C>> {
    let shape = data.shape();
    require_minimal(shape, w)?;
    let d = shape.datum();
    let mut out = GradedChar::zero(d.rank());
    for (i, entry) in data.crystal.entries().iter().enumerate() {
        if data.iota_tilde(i).bruhat_leq(d, w) {
            out.add_term(entry.weight(shape), data.tilde_weight(i).delta, C::one());
        }
    }
    Ok(out)
}

/// `sum x^{wt(eta)}` over `eta` in `B_{>= e}(lambda)` with delta coefficient
/// `>= -depth`, by enumeration.
pub fn brute_force_gch_minus_e<C: Coefficient>(shape: &Shape, depth: i64, cfg: EnumerationConfig) -> Result<GradedChar<C>> {
    let e = AffineWeylElt::identity(shape.datum());
    let paths = enumerate_demazure(shape, &e, depth, cfg)?;
    let mut out = GradedChar::zero(shape.datum().rank()).with_window(Window { q_min: Some(-depth), q_max: None });
    for eta in &paths {
        let wt = eta.weight(shape);
        out.add_term(wt.fw, wt.delta, C::one());
    }
    Ok(out)
}

/// `x -> x^{-1}`, `q -> q^{-1}`.
pub fn invert_xq<C: Coefficient>(ch: &GradedChar<C>) -> GradedChar<C> {
    ch.invert_x().invert_q()
}

/// Whether `ch` is fixed by every simple reflection acting on weights.
pub fn is_weyl_invariant<C: Coefficient>(datum: &CartanDatum, ch: &GradedChar<C>) -> bool {
    (1..=datum.rank()).all(|i| ch.act(&FiniteWeylElt::simple(datum, i)) == *ch)
}

/// `chi_lambda = sum_w (-1)^{l(w)} x^{w(lambda + rho) - rho} / prod_{a > 0}
/// (1 - x^{-a})`, with each factor divided out exactly.
pub fn weyl_character<C: Coefficient>(datum: &CartanDatum, lambda: &[i64]) -> Result<GradedChar<C>> {
    datum.check_dominant(lambda)?;
    let n = datum.rank();
    let rho = datum.rho();
    let shifted: Vec<i64> = lambda.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let all: Vec<usize> = (1..=n).collect();
    let mut num: HashMap<Vec<i64>, C> = HashMap::new();
    for w in FiniteWeylElt::subgroup_elements(datum, &all) {
        let mu: Vec<i64> = w.act_on_weight(&shifted).iter().zip(&rho).map(|(a, b)| a - b).collect();
        let sign = if w.length() % 2 == 0 { C::one() } else { -C::one() };
        let slot = num.entry(mu).or_insert_with(C::zero);
        *slot = slot.clone() + sign;
    }
    num.retain(|_, c| !c.is_zero());
    for alpha in datum.positive_roots() {
        num = divide_by_root(num, &datum.root_to_weight(alpha));
    }
    let mut out = GradedChar::zero(n);
    for (mu, c) in num {
        out.add_term(mu, 0, c);
    }
    Ok(out)
}

/// `P / (1 - x^{-a})`: along each `a`-string, `Q(mu) = P(mu) + Q(mu + a)`.
fn divide_by_root<C: Coefficient>(p: HashMap<Vec<i64>, C>, a: &[i64]) -> HashMap<Vec<i64>, C> {
    let c = a.iter().position(|&v| v != 0).expect("roots are nonzero");
    let step = a[c];
    // string key: the point of the string with coordinate c in [0, |step|)
    let mut strings: HashMap<Vec<i64>, Vec<(i64, C)>> = HashMap::new();
    for (mu, coeff) in p {
        let t = mu[c].div_euclid(step);
        let base: Vec<i64> = mu.iter().zip(a).map(|(m, v)| m - t * v).collect();
        strings.entry(base).or_default().push((t, coeff));
    }
    let mut out = HashMap::new();
    for (base, mut pts) in strings {
        pts.sort_by_key(|(t, _)| std::cmp::Reverse(*t));
        let hi = pts[0].0;
        let lo = pts[pts.len() - 1].0;
        let mut at: HashMap<i64, C> = pts.into_iter().collect();
        let mut acc = C::zero();
        for t in (lo..=hi).rev() {
            if let Some(v) = at.remove(&t) {
                acc = acc + v;
            }
            if t > lo && !acc.is_zero() {
                out.insert(base.iter().zip(a).map(|(b, v)| b + t * v).collect(), acc.clone());
            }
        }
        assert!(acc.is_zero(), "division by 1 - x^(-a) is not exact");
    }
    out
}

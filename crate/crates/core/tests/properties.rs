//! Property tests on paths reached from `eta_e` by random root-operator
//! walks.

use std::sync::Arc;

use proptest::prelude::*;
use semiinf::qls::{self, cl_project};
use semiinf::sils::{self, SilsPath};
use semiinf::{AffineWeylElt, CartanDatum, CartanType, FiniteWeylElt, LevelZeroWeight, LsPath, Shape};

fn shapes() -> Vec<Arc<Shape>> {
    let mk = |k, n, lam: &[i64]| Shape::new(CartanDatum::build(k, n).unwrap(), lam).unwrap();
    vec![
        mk(CartanType::A, 1, &[1]),
        mk(CartanType::A, 1, &[3]),
        mk(CartanType::A, 2, &[1, 0]),
        mk(CartanType::A, 2, &[1, 1]),
        mk(CartanType::A, 2, &[0, 2]),
        mk(CartanType::B, 2, &[0, 1]),
        mk(CartanType::C, 2, &[1, 1]),
        mk(CartanType::G, 2, &[1, 0]),
        mk(CartanType::A, 3, &[0, 1, 0]),
    ]
}

/// Applies the ops that do not vanish.
fn walk(shape: &Shape, ops: &[(usize, bool)]) -> SilsPath {
    let n = shape.datum().rank();
    let mut eta = sils::identity_path(shape);
    for &(j, raise) in ops {
        let j = j % (n + 1);
        let next = if raise { eta.e(shape, j) } else { eta.f(shape, j) };
        if let Some(p) = next {
            eta = p;
        }
    }
    eta
}

fn alpha(d: &CartanDatum, j: usize) -> LevelZeroWeight {
    let a = d.affine_simple_root(j);
    LevelZeroWeight { fw: d.root_to_weight(&a.finite), delta: a.delta }
}

fn walk_strategy() -> impl Strategy<Value = (usize, Vec<(usize, bool)>)> {
    (0..shapes().len(), prop::collection::vec((0usize..4, prop::bool::weighted(0.3)), 0..14))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, ..ProptestConfig::default() })]

    #[test]
    fn operators_are_partial_inverses_with_weight_and_string_shifts((s, ops) in walk_strategy()) {
        let shapes = shapes();
        let sh = &shapes[s];
        let d = sh.datum();
        let eta = walk(sh, &ops);
        prop_assert!(sils::is_valid(sh, &eta));
        let wt = eta.weight(sh);
        for j in 0..=d.rank() {
            let (eps, phi) = (eta.eps(sh, j), eta.phi(sh, j));
            prop_assert!(eps >= 0 && phi >= 0);
            prop_assert_eq!(phi - eps, d.simple_pairing(j, &wt.fw));
            if let Some(g) = eta.f(sh, j) {
                prop_assert!(sils::is_valid(sh, &g));
                prop_assert_eq!(g.e(sh, j), Some(eta.clone()));
                prop_assert_eq!(g.weight(sh), wt.add(&alpha(d, j).neg()));
                prop_assert_eq!((g.eps(sh, j), g.phi(sh, j)), (eps + 1, phi - 1));
            } else {
                prop_assert_eq!(phi, 0);
            }
            if let Some(g) = eta.e(sh, j) {
                prop_assert!(sils::is_valid(sh, &g));
                prop_assert_eq!(g.f(sh, j), Some(eta.clone()));
                prop_assert_eq!(g.weight(sh), wt.add(&alpha(d, j)));
            } else {
                prop_assert_eq!(eps, 0);
            }
        }
    }

    #[test]
    fn projection_commutes_with_operators((s, ops) in walk_strategy()) {
        let shapes = shapes();
        let sh = &shapes[s];
        let eta = walk(sh, &ops);
        let psi = cl_project(sh, &eta);
        prop_assert!(!psi.has_repeats());
        prop_assert_eq!(psi.weight(sh).fw, eta.weight(sh).fw);
        for j in 0..=sh.datum().rank() {
            prop_assert_eq!(qls::f(sh, &psi, j), eta.f(sh, j).map(|g| cl_project(sh, &g)));
            prop_assert_eq!(qls::e(sh, &psi, j), eta.e(sh, j).map(|g| cl_project(sh, &g)));
        }
    }

    #[test]
    fn lowering_to_the_end_reflects_kappa_exactly_when_the_slope_is_positive((s, ops) in walk_strategy()) {
        let shapes = shapes();
        let sh = &shapes[s];
        let d = sh.datum();
        let eta = walk(sh, &ops);
        let k = eta.terminal();
        for j in 0..=d.rank() {
            let slope = sh.slope(k, j);
            if slope > 0 {
                prop_assert!(eta.f(sh, j).is_some());
            }
            let reflected = AffineWeylElt::simple(d, j).mul(d, k);
            prop_assert_eq!(eta.f_max(sh, j).terminal() == &reflected, slope > 0);
        }
    }

    #[test]
    fn duality_reverses_paths_and_swaps_operators((s, ops) in walk_strategy()) {
        let shapes = shapes();
        let sh = &shapes[s];
        let dsh = sh.dual();
        let eta = walk(sh, &ops);
        let dv = sils::dual(sh, &eta);
        prop_assert!(sils::is_valid(&dsh, &dv));
        prop_assert_eq!(dv.weight(&dsh), eta.weight(sh).neg());
        prop_assert_eq!(sils::dual(&dsh, &dv), eta.clone());
        for j in 0..=sh.datum().rank() {
            prop_assert_eq!(eta.e(sh, j).map(|g| sils::dual(sh, &g)), dv.f(&dsh, j));
            prop_assert_eq!(eta.f(sh, j).map(|g| sils::dual(sh, &g)), dv.e(&dsh, j));
        }
    }

    #[test]
    fn weyl_group_acts_on_paths((s, ops) in walk_strategy(), w1 in prop::collection::vec(0usize..4, 0..4), w2 in prop::collection::vec(0usize..4, 0..4)) {
        let shapes = shapes();
        let sh = &shapes[s];
        let d = sh.datum();
        let n = d.rank();
        let eta = walk(sh, &ops);
        let word = |w: &[usize]| w.iter().fold(AffineWeylElt::identity(d), |acc, &j| acc.mul(d, &AffineWeylElt::simple(d, j % (n + 1))));
        let (x, y) = (word(&w1), word(&w2));
        let sy = sils::weyl_action(sh, &y, &eta);
        prop_assert_eq!(sils::weyl_action(sh, &x, &sy), sils::weyl_action(sh, &x.mul(d, &y), &eta));
        prop_assert_eq!(sy.weight(sh), y.act_on_weight(&eta.weight(sh)));
        for j in 0..=n {
            prop_assert_eq!(eta.reflect_string(sh, j).reflect_string(sh, j), eta.clone());
        }
    }

    #[test]
    fn canonicalization_lands_on_translations((s, ops) in walk_strategy()) {
        let shapes = shapes();
        let sh = &shapes[s];
        let eta = walk(sh, &ops);
        let c = sils::canonicalize(sh, &eta);
        prop_assert!(sils::is_translation_type(sh, &c.terminal));
        prop_assert_eq!(&c.terminal, &c.sequence.iter().fold(eta.clone(), |acc, &j| acc.f_max(sh, j)));
        // walks from eta_e never leave its component
        prop_assert!(c.in_principal_component());
        prop_assert_eq!(&c.representative, &sils::identity_path(sh));
        let back = c.terminal.terminal().clone();
        prop_assert_eq!(sils::weyl_action_translation_type(sh, &back, &c.representative), c.terminal.clone());
    }

    #[test]
    fn demazure_sets_are_stable_under_lowering((s, ops) in walk_strategy()) {
        let shapes = shapes();
        let sh = &shapes[s];
        let d = sh.datum();
        let eta = walk(sh, &ops);
        let x = eta.terminal().clone();
        for j in 0..=d.rank() {
            if let Some(g) = eta.f(sh, j) {
                prop_assert!(sils::in_demazure_kappa(sh, &g, &x));
            }
            if sh.slope(&x, j) >= 0 {
                if let Some(g) = eta.e(sh, j) {
                    prop_assert!(sils::in_demazure_kappa(sh, &g, &x));
                }
            }
        }
    }
}

#[test]
fn translated_extremal_paths_form_other_components() {
    // (t_xi, e; 0, 1/2, 1) for A1, 2 varpi1 lies outside the component of eta_e
    let sh = Shape::new(CartanDatum::build(CartanType::A, 1).unwrap(), &[2]).unwrap();
    let d = sh.datum();
    let eta = LsPath::from_parts(
        vec![AffineWeylElt::parse(d, "|1").unwrap(), AffineWeylElt::identity(d)],
        vec![0.into(), semiinf::Rational::new(1, 2), 1.into()],
    );
    assert!(sils::is_valid(&sh, &eta));
    let c = sils::canonicalize(&sh, &eta);
    assert!(!c.in_principal_component());
    assert_eq!(c.representative.weight(&sh).fw, vec![2]);
    assert_eq!(c.representative.weight(&sh).delta, -1);
    assert!(sils::is_translation_type(&sh, &c.representative));
}

#[test]
fn dual_weight_matches_longest_element() {
    for (k, n) in [(CartanType::A, 3), (CartanType::D, 5), (CartanType::E, 6), (CartanType::B, 3), (CartanType::G, 2)] {
        let d = CartanDatum::build(k, n).unwrap();
        let w0 = d.longest_element();
        for i in 1..=n {
            let mut e = vec![0; n];
            e[i - 1] = 1;
            let neg: Vec<i64> = w0.act_on_weight(&e).iter().map(|v| -v).collect();
            assert_eq!(neg, d.dual_weight(&e));
            assert_eq!(d.sigma(d.sigma(i)), i);
            for j in 1..=n {
                assert_eq!(d.entry(d.sigma(i), d.sigma(j)), d.entry(i, j));
            }
        }
        assert_eq!(w0.inverse(), *w0);
        let all: Vec<usize> = (1..=n).collect();
        assert_eq!(FiniteWeylElt::longest_of(&d, &all), *w0);
    }
}

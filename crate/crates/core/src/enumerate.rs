//! Truncated enumeration of the Demazure subset `B_{>= x}(lambda)`.
//!
//! Every direction of a path in `B_{>= x}` lies above `x`, and along covers
//! the translation part only grows in `Q^{vee+}_{I \ J}`. With
//! `L = <xi_x, lambda>` and excess `e(y) = <xi_y, lambda> - L >= 0`, a path
//! has delta coefficient `-(L + sum (a_u - a_{u-1}) e(x_u))`. Excesses
//! increase towards `x_1`, so `e(x_u) a_u <= D - L`; interior cuts have
//! denominator at most `N = max <alpha^vee, lambda>`, which bounds every
//! direction by `e <= (D - L) N`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::path::{LsPath, Rational};
use crate::peterson::Shape;
use crate::sils::SilsPath;
use crate::weyl::AffineWeylElt;

#[derive(Clone, Copy, Debug)]
pub struct EnumerationConfig {
    /// maximum number of search nodes
    pub budget: usize,
    /// worker threads
    pub jobs: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { budget: 50_000_000, jobs: 1 }
    }
}

struct Graph {
    nodes: Vec<AffineWeylElt>,
    excess: Vec<i64>,
    /// `reach[k][i][j]`: node `j` is reachable from node `i` in `SB(1/k)`
    reach: HashMap<i64, Vec<Vec<bool>>>,
}

fn build_graph(shape: &Shape, x: &AffineWeylElt, bound: i64, max_den: i64) -> Graph {
    let base = shape.translation_degree(x);
    let nodes = shape.upward_closure(x, |y| shape.translation_degree(y) - base <= bound);
    let excess: Vec<i64> = nodes.iter().map(|y| shape.translation_degree(y) - base).collect();
    let pos: HashMap<&AffineWeylElt, usize> = nodes.iter().enumerate().map(|(i, y)| (y, i)).collect();
    let m = nodes.len();
    let mut reach = HashMap::new();
    for k in 2..=max_den {
        let succ: Vec<Vec<usize>> = nodes
            .iter()
            .map(|y| shape.covers_k(y, k).into_iter().filter_map(|(_, z)| pos.get(&z).copied()).collect())
            .collect();
        let mut table = vec![vec![false; m]; m];
        for (i, row) in table.iter_mut().enumerate() {
            let mut stack = vec![i];
            row[i] = true;
            while let Some(v) = stack.pop() {
                for &w in &succ[v] {
                    if !row[w] {
                        row[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        reach.insert(k, table);
    }
    Graph { nodes, excess, reach }
}

/// Directions (as node indices) and cuts, both from `kappa` backwards.
type Partial = (Vec<usize>, Vec<Rational>);

struct Search<'a> {
    graph: &'a Graph,
    cuts: &'a [Rational],
    slack: Rational,
    counter: &'a AtomicUsize,
    budget: usize,
}

impl Search<'_> {
    /// Extends a path whose earliest chosen direction is `dirs.last()` on
    /// `[right, ...]`; `cost` covers the segments already fixed.
    fn extend(&self, dirs: &mut Vec<usize>, cuts: &mut Vec<Rational>, right: Rational, cost: Rational, out: &mut Vec<Partial>) -> Result<()> {
        if self.counter.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::BudgetExhausted(self.budget));
        }
        let y = *dirs.last().expect("nonempty");
        let ey = Rational::from_integer(self.graph.excess[y]);
        if cost + right * ey > self.slack {
            return Ok(());
        }
        // close the path at 0
        out.push((dirs.clone(), cuts.clone()));
        for &l in self.cuts.iter().filter(|&&l| l < right) {
            let seg = cost + (right - l) * ey;
            let table = &self.graph.reach[l.denom()];
            for (z, &reachable) in table[y].iter().enumerate() {
                if z == y || !reachable {
                    continue;
                }
                let ez = Rational::from_integer(self.graph.excess[z]);
                if seg + l * ez > self.slack {
                    continue;
                }
                dirs.push(z);
                cuts.push(l);
                self.extend(dirs, cuts, l, seg, out)?;
                dirs.pop();
                cuts.pop();
            }
        }
        Ok(())
    }
}

/// All `eta` in `B_{>= x}(lambda)` with `wt(eta)` of delta coefficient at
/// least `-depth`, sorted.
pub fn enumerate_demazure(shape: &Shape, x: &AffineWeylElt, depth: i64, cfg: EnumerationConfig) -> Result<Vec<SilsPath>> {
    shape.require_rep(x)?;
    let base = shape.translation_degree(x);
    if depth < base {
        return Ok(Vec::new());
    }
    let d = shape.datum();
    let max_den = d.positive_coroots().iter().map(|c| c.pair_weight(shape.lambda())).max().unwrap_or(0).max(1);
    let slack = depth - base;
    let graph = build_graph(shape, x, slack * max_den, max_den);

    let mut cut_values: Vec<Rational> = Vec::new();
    for k in 2..=max_den {
        for p in 1..k {
            let c = Rational::new(p, k);
            if *c.denom() == k {
                cut_values.push(c);
            }
        }
    }
    cut_values.sort();

    let counter = AtomicUsize::new(0);
    let search = Search {
        graph: &graph,
        cuts: &cut_values,
        slack: Rational::from_integer(slack),
        counter: &counter,
        budget: cfg.budget,
    };
    let m = graph.nodes.len();
    let jobs = cfg.jobs.max(1).min(m.max(1));
    let results: Vec<Result<Vec<Partial>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..jobs)
            .map(|t| {
                let search = &search;
                scope.spawn(move || {
                    let mut out = Vec::new();
                    for kappa in (t..m).step_by(jobs) {
                        let mut dirs = vec![kappa];
                        let mut cuts = vec![Rational::one()];
                        search.extend(&mut dirs, &mut cuts, Rational::one(), Rational::zero(), &mut out)?;
                    }
                    Ok(out)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).collect()
    });

    let mut paths = Vec::new();
    for chunk in results {
        for (dirs, cuts) in chunk? {
            let directions: Vec<AffineWeylElt> = dirs.iter().rev().map(|&i| graph.nodes[i].clone()).collect();
            let mut all_cuts = vec![Rational::zero()];
            all_cuts.extend(cuts.iter().rev().copied());
            paths.push(LsPath::from_parts(directions, all_cuts));
        }
    }
    paths.sort();
    Ok(paths)
}

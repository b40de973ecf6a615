//! JSON and DOT emitters. All output is deterministically ordered.

use serde::Serialize;

use crate::cartan::CartanDatum;
use crate::path::LsPath;
use crate::peterson::Shape;
use crate::qls::QlsData;
use crate::series::{Coefficient, GradedChar};
use crate::sils::SilsPath;
use crate::weyl::AffineWeylElt;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectionRecord {
    pub w: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub xi: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightRecord {
    pub fw: Vec<i64>,
    pub delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathRecord {
    pub directions: Vec<DirectionRecord>,
    pub cuts: Vec<String>,
    pub weight: WeightRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QlsRecord {
    pub directions: Vec<DirectionRecord>,
    pub cuts: Vec<String>,
    pub weight: WeightRecord,
    pub deg_tail: i64,
    pub kappa_of_lift: Vec<usize>,
    pub iota_of_tilde_lift: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterMeta {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub lambda: Vec<i64>,
    pub depth: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TermRecord<C> {
    pub fw: Vec<i64>,
    pub q: i64,
    pub coeff: C,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharacterRecord<C> {
    pub meta: CharacterMeta,
    pub terms: Vec<TermRecord<C>>,
}

pub fn path_record(shape: &Shape, eta: &SilsPath) -> PathRecord {
    let d = shape.datum();
    let wt = eta.weight(shape);
    PathRecord {
        directions: eta
            .directions()
            .iter()
            .map(|x| DirectionRecord { w: x.w.reduced_word(d), xi: Some(x.xi.0.clone()) })
            .collect(),
        cuts: eta.cut_strings(),
        weight: WeightRecord { fw: wt.fw, delta: wt.delta },
    }
}

/// One record per element of `QLS(lambda)`, in crystal order.
pub fn qls_records(data: &QlsData) -> Vec<QlsRecord> {
    let shape = data.shape();
    let d = shape.datum();
    data.crystal
        .entries()
        .iter()
        .enumerate()
        .map(|(i, entry)| {
            let path: &LsPath<_> = &entry.path;
            QlsRecord {
                directions: path.directions().iter().map(|w| DirectionRecord { w: w.reduced_word(d), xi: None }).collect(),
                cuts: path.cut_strings(),
                weight: WeightRecord { fw: entry.weight(shape), delta: 0 },
                deg_tail: entry.deg_tail,
                kappa_of_lift: entry.kappa().reduced_word(d),
                iota_of_tilde_lift: data.iota_tilde(i).reduced_word(d),
            }
        })
        .collect()
}

/// Terms ordered by `q`, then weight.
pub fn character_record<C: Coefficient + Serialize>(datum: &CartanDatum, lambda: &[i64], depth: Option<i64>, ch: &GradedChar<C>) -> CharacterRecord<C> {
    let mut terms: Vec<TermRecord<C>> = ch.iter().map(|(fw, q, c)| TermRecord { fw: fw.to_vec(), q, coeff: c.clone() }).collect();
    terms.sort_by(|a, b| (a.q, &a.fw).cmp(&(b.q, &b.fw)));
    CharacterRecord {
        meta: CharacterMeta { kind: datum.kind().to_string(), rank: datum.rank(), lambda: lambda.to_vec(), depth },
        terms,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RootSystemRecord {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub affine_cartan_matrix: Vec<Vec<i64>>,
    pub symmetrizer: Vec<i64>,
    pub positive_roots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    pub highest_coroot: Vec<i64>,
    pub marks: Vec<i64>,
    pub comarks: Vec<i64>,
    pub longest_element: Vec<usize>,
    pub sigma: Vec<usize>,
}

pub fn root_system_record(d: &CartanDatum) -> RootSystemRecord {
    RootSystemRecord {
        kind: d.kind().to_string(),
        rank: d.rank(),
        cartan_matrix: d.cartan_matrix().to_vec(),
        affine_cartan_matrix: d.affine_cartan_matrix(),
        symmetrizer: d.symmetrizer().to_vec(),
        positive_roots: d.positive_roots().iter().map(|r| r.0.clone()).collect(),
        highest_root: d.highest_root().0.clone(),
        highest_coroot: d.highest_coroot().0.clone(),
        marks: d.marks().to_vec(),
        comarks: d.comarks().to_vec(),
        longest_element: d.longest_element().reduced_word(d),
        sigma: d.sigma_map(),
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Cover graph of `SB(a)` (all covers when `a` is `None`) on `nodes`,
/// keeping edges with both ends in `nodes`.
pub fn si_graph_dot(shape: &Shape, nodes: &[AffineWeylElt], a: Option<crate::path::Rational>) -> String {
    let d = shape.datum();
    let mut sorted = nodes.to_vec();
    sorted.sort();
    sorted.dedup();
    let index: std::collections::HashMap<&AffineWeylElt, usize> = sorted.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let mut out = String::from("digraph si {\n");
    for (i, x) in sorted.iter().enumerate() {
        out.push_str(&format!("  n{i} [label=\"{}\"];\n", dot_escape(&x.label(d))));
    }
    for (i, x) in sorted.iter().enumerate() {
        for (beta, y) in shape.covers(x, a) {
            if let Some(j) = index.get(&y) {
                out.push_str(&format!("  n{i} -> n{j} [label=\"{}\"];\n", dot_escape(&beta.to_string())));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Paths as a DOT graph: one node per path, edges for `f_j` (`j` in the
/// label) between listed paths.
pub fn paths_dot(shape: &Shape, paths: &[SilsPath]) -> String {
    let d = shape.datum();
    let index: std::collections::HashMap<&SilsPath, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut out = String::from("digraph paths {\n");
    for (i, p) in paths.iter().enumerate() {
        let dirs: Vec<String> = p.directions().iter().map(|x| x.label(d)).collect();
        let label = format!("({}; {})", dirs.join(", "), p.cut_strings().join(", "));
        out.push_str(&format!("  p{i} [label=\"{}\"];\n", dot_escape(&label)));
    }
    for (i, p) in paths.iter().enumerate() {
        for j in 0..=d.rank() {
            if let Some(k) = p.f(shape, j).and_then(|q| index.get(&q).copied()) {
                out.push_str(&format!("  p{i} -> p{k} [label=\"{j}\"];\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

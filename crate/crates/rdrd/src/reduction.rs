//! Exact cover by 3-sets, and its translation into a chordal-graph
//! instance of the restrained labeling decision problem with threshold
//! `k = 8q + 3`.
//!
//! Vertex numbering of the reduction graph, for an instance with universe
//! size `3q` and `t` triples:
//! - element vertices `x_i = i` for `i < 3q`;
//! - pendant vertices `y_i = 3q + i`;
//! - triple vertices `c_j = 6q + j` and their twins `c'_j = 6q + t + j`;
//! - hub `z = 6q + 2t`, hub leaves `z_1..z_4 = 6q + 2t + 1 ..= 6q + 2t + 4`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chordal;
use crate::graph::{Graph, GraphError};
use crate::labeling::{validate, weight, Labeling, LabelingError, Variant};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("invalid instance: {0}")]
    BadInstance(String),
    #[error("cover is not exact: element {element} is covered {count} times")]
    NotExactCover { element: usize, count: usize },
    #[error("cover names triple {0}, but the instance has only {1} triples")]
    TripleOutOfRange(usize, usize),
    #[error("labeling is not a feasible restrained function: {0}")]
    InfeasibleLabeling(String),
    #[error("labeling weight {got} exceeds the threshold k = {k}")]
    OverThreshold { got: u32, k: u32 },
    #[error("instance has {t} triples, above the exact-cover search limit {limit}")]
    TooManyTriples { t: usize, limit: usize },
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("cannot parse instance: {0}")]
    Parse(String),
}

/// An exact-cover-by-3-sets instance: universe `0..3q` and a collection of
/// 3-element subsets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct X3cInstance {
    pub q: usize,
    pub triples: Vec<[usize; 3]>,
}

impl X3cInstance {
    pub fn new(q: usize, triples: Vec<[usize; 3]>) -> Result<Self, ReductionError> {
        if q == 0 {
            return Err(ReductionError::BadInstance("q must be positive".into()));
        }
        if triples.is_empty() {
            return Err(ReductionError::BadInstance("triple list is empty".into()));
        }
        for (j, t) in triples.iter().enumerate() {
            if t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
                return Err(ReductionError::BadInstance(format!(
                    "triple {j} has repeated elements: {t:?}"
                )));
            }
            if let Some(&e) = t.iter().find(|&&e| e >= 3 * q) {
                return Err(ReductionError::BadInstance(format!(
                    "triple {j} contains element {e} outside the universe 0..{}",
                    3 * q
                )));
            }
        }
        Ok(X3cInstance { q, triples })
    }

    pub fn universe_size(&self) -> usize {
        3 * self.q
    }

    pub fn parse_json(text: &str) -> Result<Self, ReductionError> {
        let raw: X3cInstance =
            serde_json::from_str(text).map_err(|e| ReductionError::Parse(e.to_string()))?;
        X3cInstance::new(raw.q, raw.triples)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "role", content = "index")]
pub enum VertexRole {
    /// Universe element vertex `x_i`.
    Element(usize),
    /// Pendant `y_i` attached to `x_i`.
    Pendant(usize),
    /// Triple vertex `c_j`.
    Triple(usize),
    /// Twin `c'_j` with the same element neighbors as `c_j`.
    TripleTwin(usize),
    /// Hub `z`.
    Hub,
    /// Hub leaves `z_1..z_4` (0-indexed).
    HubLeaf(usize),
}

/// The constructed chordal instance: graph, threshold and role map.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub graph: Graph,
    pub k: u32,
    pub roles: Vec<VertexRole>,
    q: usize,
    t: usize,
}

impl Reduction {
    pub fn q(&self) -> usize {
        self.q
    }
    pub fn triple_count(&self) -> usize {
        self.t
    }
    pub fn element_vertex(&self, i: usize) -> usize {
        i
    }
    pub fn pendant_vertex(&self, i: usize) -> usize {
        3 * self.q + i
    }
    pub fn triple_vertex(&self, j: usize) -> usize {
        6 * self.q + j
    }
    pub fn triple_twin_vertex(&self, j: usize) -> usize {
        6 * self.q + self.t + j
    }
    pub fn hub_vertex(&self) -> usize {
        6 * self.q + 2 * self.t
    }
    pub fn hub_leaf_vertex(&self, l: usize) -> usize {
        self.hub_vertex() + 1 + l
    }
}

/// Build the reduction graph: element-triple incidences doubled through the
/// twins, a pendant per element, the triple vertices and twins forming a
/// clique joined to the hub, and two hub triangles.
pub fn build_reduction(inst: &X3cInstance) -> Result<Reduction, ReductionError> {
    let q = inst.q;
    let t = inst.triples.len();
    let n = 6 * q + 2 * t + 5;
    let mut roles = Vec::with_capacity(n);
    for i in 0..3 * q {
        roles.push(VertexRole::Element(i));
    }
    for i in 0..3 * q {
        roles.push(VertexRole::Pendant(i));
    }
    for j in 0..t {
        roles.push(VertexRole::Triple(j));
    }
    for j in 0..t {
        roles.push(VertexRole::TripleTwin(j));
    }
    roles.push(VertexRole::Hub);
    for l in 0..4 {
        roles.push(VertexRole::HubLeaf(l));
    }

    let r = Reduction {
        graph: Graph::empty(0),
        k: 8 * q as u32 + 3,
        roles,
        q,
        t,
    };
    let mut edges = Vec::new();
    for (j, triple) in inst.triples.iter().enumerate() {
        for &e in triple {
            edges.push((r.element_vertex(e), r.triple_vertex(j)));
            edges.push((r.element_vertex(e), r.triple_twin_vertex(j)));
        }
    }
    for i in 0..3 * q {
        edges.push((r.element_vertex(i), r.pendant_vertex(i)));
    }
    let clique: Vec<usize> = (0..t)
        .map(|j| r.triple_vertex(j))
        .chain((0..t).map(|j| r.triple_twin_vertex(j)))
        .collect();
    for (a, &u) in clique.iter().enumerate() {
        for &v in &clique[a + 1..] {
            edges.push((u.min(v), u.max(v)));
        }
    }
    for &u in &clique {
        edges.push((u, r.hub_vertex()));
    }
    let z = r.hub_vertex();
    edges.push((z, r.hub_leaf_vertex(0)));
    edges.push((z, r.hub_leaf_vertex(1)));
    edges.push((r.hub_leaf_vertex(0), r.hub_leaf_vertex(1)));
    edges.push((z, r.hub_leaf_vertex(2)));
    edges.push((z, r.hub_leaf_vertex(3)));
    edges.push((r.hub_leaf_vertex(2), r.hub_leaf_vertex(3)));

    let graph = Graph::from_edges(n, &edges)?;
    debug_assert!(chordal::is_chordal(&graph).chordal);
    Ok(Reduction { graph, ..r })
}

fn check_exact_cover(inst: &X3cInstance, cover: &[usize]) -> Result<(), ReductionError> {
    let t = inst.triples.len();
    let mut counts = vec![0usize; inst.universe_size()];
    for &j in cover {
        if j >= t {
            return Err(ReductionError::TripleOutOfRange(j, t));
        }
        for &e in &inst.triples[j] {
            counts[e] += 1;
        }
    }
    for (element, &count) in counts.iter().enumerate() {
        if count != 1 {
            return Err(ReductionError::NotExactCover { element, count });
        }
    }
    Ok(())
}

/// Translate an exact cover into a restrained labeling of weight `8q + 3`:
/// 3 on the hub, 2 on every pendant and every chosen triple vertex, 0
/// elsewhere.
pub fn cover_to_labeling(
    r: &Reduction,
    inst: &X3cInstance,
    cover: &[usize],
) -> Result<Labeling, ReductionError> {
    check_exact_cover(inst, cover)?;
    let mut labels = vec![0u8; r.graph.order()];
    labels[r.hub_vertex()] = 3;
    for i in 0..inst.universe_size() {
        labels[r.pendant_vertex(i)] = 2;
    }
    for &j in cover {
        labels[r.triple_vertex(j)] = 2;
    }
    let f = Labeling::new(labels)?;
    debug_assert_eq!(weight(&f), r.k);
    Ok(f)
}

/// Result of projecting a labeling back onto the triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverExtraction {
    Cover(Vec<usize>),
    /// The projection {j : c_j or c'_j labeled >= 2} is not an exact cover.
    /// Feasible low-weight labelings are only guaranteed to project after
    /// the normalization steps, which rearrange labels without changing the
    /// weight; an optimum may present un-normalized.
    NotNormalized,
}

/// Project a feasible labeling of weight at most `k` onto the triples whose
/// vertex (or twin) carries a label of at least 2.
pub fn labeling_to_cover(
    r: &Reduction,
    inst: &X3cInstance,
    f: &Labeling,
) -> Result<CoverExtraction, ReductionError> {
    let report = validate(&r.graph, f, Variant::Rdrd)?;
    if !report.valid() {
        return Err(ReductionError::InfeasibleLabeling(
            report.violations[0].detail.clone(),
        ));
    }
    let w = weight(f);
    if w > r.k {
        return Err(ReductionError::OverThreshold { got: w, k: r.k });
    }
    let candidate: Vec<usize> = (0..r.triple_count())
        .filter(|&j| f.get(r.triple_vertex(j)) >= 2 || f.get(r.triple_twin_vertex(j)) >= 2)
        .collect();
    match check_exact_cover(inst, &candidate) {
        Ok(()) => Ok(CoverExtraction::Cover(candidate)),
        Err(_) => Ok(CoverExtraction::NotNormalized),
    }
}

const X3C_SEARCH_LIMIT: usize = 25;

/// Lexicographically first exact cover, or `None` when the instance is
/// unsolvable. Depth-first over triples in index order, so the first cover
/// found is lexicographically first among all exact covers.
pub fn x3c_brute(inst: &X3cInstance) -> Result<Option<Vec<usize>>, ReductionError> {
    let t = inst.triples.len();
    if t > X3C_SEARCH_LIMIT {
        return Err(ReductionError::TooManyTriples {
            t,
            limit: X3C_SEARCH_LIMIT,
        });
    }
    let universe = inst.universe_size();
    let full: u64 = (1u64 << universe) - 1;
    let masks: Vec<u64> = inst
        .triples
        .iter()
        .map(|t| t.iter().fold(0u64, |m, &e| m | (1u64 << e)))
        .collect();

    fn rec(
        j: usize,
        covered: u64,
        full: u64,
        masks: &[u64],
        chosen: &mut Vec<usize>,
    ) -> bool {
        if covered == full {
            return true;
        }
        if j == masks.len() {
            return false;
        }
        // include j first: subsets are visited in lexicographic order
        if covered & masks[j] == 0 {
            chosen.push(j);
            if rec(j + 1, covered | masks[j], full, masks, chosen) {
                return true;
            }
            chosen.pop();
        }
        rec(j + 1, covered, full, masks, chosen)
    }

    let mut chosen = Vec::new();
    if rec(0, 0, full, &masks, &mut chosen) {
        Ok(Some(chosen))
    } else {
        Ok(None)
    }
}

//! Simple undirected graphs with sorted adjacency lists, the standard
//! family constructors, structural statistics, and the edge-list text format.
//!
//! Vertices are `0..n-1` everywhere. Adjacency lists are kept sorted so that
//! iteration order, and therefore every certificate produced downstream, is
//! deterministic.

use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid family parameters: {0}")]
    BadFamily(String),
}

/// Simple undirected graph. No self-loops, no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Build from an edge list. Rejects out-of-range endpoints, self-loops
    /// and duplicate edges (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        for nbrs in &mut g.adj {
            nbrs.sort_unstable();
        }
        g.debug_check();
        Ok(g)
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { vertex: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.edge_count += 1;
        Ok(())
    }

    #[cfg(debug_assertions)]
    fn debug_check(&self) {
        let deg_sum: usize = self.adj.iter().map(Vec::len).sum();
        debug_assert_eq!(deg_sum, 2 * self.edge_count);
    }
    #[cfg(not(debug_assertions))]
    fn debug_check(&self) {}

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbors of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(u) = queue.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push(v);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Relabel vertices: vertex `v` of the new graph is `perm[v]` of this one.
    pub fn induced_relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut inv = vec![0usize; self.n];
        for (new, &old) in perm.iter().enumerate() {
            inv[old] = new;
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .iter()
            .map(|&(u, v)| (inv[u], inv[v]))
            .collect();
        Graph::from_edges(self.n, &edges).expect("relabeling preserves simplicity")
    }

    /// Subgraph induced by `vertices` (sorted, deduplicated by caller);
    /// vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                if w > v && pos[w] != usize::MAX {
                    edges.push((i, pos[w]));
                }
            }
        }
        Graph::from_edges(vertices.len(), &edges).expect("induced subgraph is simple")
    }
}

/// Named graph families with their integer parameters.
///
/// Canonical vertex numbering per family:
/// - `Path`/`Cycle`: vertices `0..n-1` in path/cycle order.
/// - `Complete`: any order (all pairs adjacent).
/// - `CompleteBipartite`: part A is `0..p-1`, part B is `p..p+q-1`.
/// - `Star`: center `0`, leaves `1..n`.
/// - `WoundedSpider`: center `0`, then the `n` legs `1..n` in input order;
///   the first `t` legs are subdivided, with subdivision vertex of leg `i`
///   at `n + i` (so the center-leg path is `0, n+i, i`).
/// - `Empty`: `n` isolated vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { p: usize, q: usize },
    Star { n: usize },
    WoundedSpider { n: usize, t: usize },
    Empty { n: usize },
}

/// Construct the canonical graph of a family.
pub fn build_family(spec: FamilySpec) -> Result<Graph, GraphError> {
    match spec {
        FamilySpec::Path { n } => {
            if n < 1 {
                return Err(GraphError::BadFamily("path requires n >= 1".into()));
            }
            let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Cycle { n } => {
            if n < 3 {
                return Err(GraphError::BadFamily("cycle requires n >= 3".into()));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges)
        }
        FamilySpec::Complete { n } => {
            if n < 1 {
                return Err(GraphError::BadFamily("complete requires n >= 1".into()));
            }
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::from_edges(n, &edges)
        }
        FamilySpec::CompleteBipartite { p, q } => {
            if p < 1 || q < 1 {
                return Err(GraphError::BadFamily(
                    "complete bipartite requires p, q >= 1".into(),
                ));
            }
            let mut edges = Vec::new();
            for u in 0..p {
                for v in 0..q {
                    edges.push((u, p + v));
                }
            }
            Graph::from_edges(p + q, &edges)
        }
        FamilySpec::Star { n } => {
            if n < 1 {
                return Err(GraphError::BadFamily("star requires n >= 1 leaves".into()));
            }
            let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
            Graph::from_edges(n + 1, &edges)
        }
        FamilySpec::WoundedSpider { n, t } => {
            if n < 1 {
                return Err(GraphError::BadFamily(
                    "wounded spider requires n >= 1 legs".into(),
                ));
            }
            if t + 1 > n {
                return Err(GraphError::BadFamily(format!(
                    "wounded spider requires 0 <= t <= n-1, got t={t}, n={n}"
                )));
            }
            let order = 1 + n + t;
            let mut edges = Vec::new();
            for leg in 1..=n {
                if leg <= t {
                    let sub = n + leg;
                    edges.push((0, sub));
                    edges.push((sub, leg));
                } else {
                    edges.push((0, leg));
                }
            }
            Graph::from_edges(order, &edges)
        }
        FamilySpec::Empty { n } => Ok(Graph::empty(n)),
    }
}

/// Structural summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub min_degree: usize,
    pub connected: bool,
    pub components: usize,
    /// `Some(coloring)` iff the graph is bipartite; `coloring[v]` is 0 or 1
    /// and properly 2-colors every edge.
    pub bipartition: Option<Vec<u8>>,
}

pub fn graph_stats(g: &Graph) -> GraphStats {
    let n = g.order();
    let comps = g.components();
    let mut coloring = vec![0u8; n];
    let mut bipartite = true;
    let mut seen = vec![false; n];
    'outer: for comp in &comps {
        let s = comp[0];
        seen[s] = true;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    coloring[v] = 1 - coloring[u];
                    queue.push_back(v);
                } else if coloring[v] == coloring[u] {
                    bipartite = false;
                    break 'outer;
                }
            }
        }
    }
    GraphStats {
        n,
        m: g.edge_count(),
        max_degree: (0..n).map(|v| g.degree(v)).max().unwrap_or(0),
        min_degree: (0..n).map(|v| g.degree(v)).min().unwrap_or(0),
        connected: comps.len() <= 1,
        components: comps.len(),
        bipartition: if bipartite { Some(coloring) } else { None },
    }
}

/// Parse the edge-list interchange format.
///
/// First non-comment line is `n m`, followed by `m` lines `u v` with
/// `0 <= u,v < n` and `u != v`. Anything from `#` to end of line is a
/// comment. Duplicate edges are rejected.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut edge_lines = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut tokens = line.split_whitespace();
        let Some(first) = tokens.next() else { continue };
        let second = tokens.next().ok_or_else(|| GraphError::Parse {
            line: line_no,
            msg: "expected two integers".into(),
        })?;
        if tokens.next().is_some() {
            return Err(GraphError::Parse {
                line: line_no,
                msg: "expected exactly two integers".into(),
            });
        }
        let a: usize = first.parse().map_err(|_| GraphError::Parse {
            line: line_no,
            msg: format!("invalid integer {first:?}"),
        })?;
        let b: usize = second.parse().map_err(|_| GraphError::Parse {
            line: line_no,
            msg: format!("invalid integer {second:?}"),
        })?;
        match header {
            None => header = Some((a, b)),
            Some((n, m)) => {
                if edge_lines >= m {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: format!("more than the declared {m} edges"),
                    });
                }
                if a >= n || b >= n {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: format!("vertex index out of range (n={n})"),
                    });
                }
                if a == b {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: format!("self-loop at vertex {a}"),
                    });
                }
                if edges.iter().any(|&(u, v)| (u, v) == (a.min(b), a.max(b))) {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: format!("duplicate edge ({}, {})", a.min(b), a.max(b)),
                    });
                }
                edges.push((a.min(b), a.max(b)));
                edge_lines += 1;
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(GraphError::Parse {
            line: 0,
            msg: "missing header line \"n m\"".into(),
        });
    };
    if edge_lines != m {
        return Err(GraphError::Parse {
            line: 0,
            msg: format!("declared {m} edges but found {edge_lines}"),
        });
    }
    Graph::from_edges(n, &edges)
}

/// Canonical edge-list text: header, then edges with `u < v` in
/// lexicographic order, one per line, each line newline-terminated.
pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Random connected graph on `n >= 1` vertices: a random attachment tree
/// plus each remaining pair independently with probability `extra_p`.
pub fn random_connected(n: usize, extra_p: f64, rng: &mut impl rand::Rng) -> Graph {
    let mut present = std::collections::HashSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        present.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if !present.contains(&(u, v)) && rng.gen_bool(extra_p) {
                present.insert((u, v));
            }
        }
    }
    let mut edges: Vec<(usize, usize)> = present.into_iter().collect();
    edges.sort_unstable();
    Graph::from_edges(n, &edges).expect("generated edges are simple")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_triangle() {
        let g = build_family(FamilySpec::Cycle { n: 3 }).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 3);
        assert!(g.has_edge(0, 2));
    }

    #[test]
    fn family_wounded_spider_small() {
        // K_{1,2} with one edge subdivided is P4: 0-3-1 and 0-2.
        let g = build_family(FamilySpec::WoundedSpider { n: 2, t: 1 }).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 3);
        let stats = graph_stats(&g);
        assert!(stats.connected);
        assert_eq!(stats.max_degree, 2);
        // Degree sequence of a path.
        let mut degs: Vec<_> = (0..4).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 2, 2]);
    }

    #[test]
    fn family_complete_bipartite() {
        let g = build_family(FamilySpec::CompleteBipartite { p: 2, q: 3 }).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(0, 2) && g.has_edge(1, 4));
        assert!(!g.has_edge(0, 1) && !g.has_edge(2, 3));
    }

    #[test]
    fn family_parameter_errors() {
        assert!(build_family(FamilySpec::Cycle { n: 2 }).is_err());
        assert!(build_family(FamilySpec::WoundedSpider { n: 3, t: 3 }).is_err());
        assert!(build_family(FamilySpec::CompleteBipartite { p: 0, q: 2 }).is_err());
    }

    #[test]
    fn stats_c5() {
        let g = build_family(FamilySpec::Cycle { n: 5 }).unwrap();
        let s = graph_stats(&g);
        assert_eq!((s.max_degree, s.min_degree), (2, 2));
        assert!(s.connected);
        assert!(s.bipartition.is_none());
    }

    #[test]
    fn stats_p4() {
        let g = build_family(FamilySpec::Path { n: 4 }).unwrap();
        let s = graph_stats(&g);
        assert_eq!((s.max_degree, s.min_degree), (2, 1));
        assert!(s.connected);
        let coloring = s.bipartition.expect("paths are bipartite");
        for (u, v) in g.edges() {
            assert_ne!(coloring[u], coloring[v]);
        }
    }

    #[test]
    fn stats_two_k2() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s = graph_stats(&g);
        assert_eq!(s.components, 2);
        assert!(!s.connected);
    }

    #[test]
    fn parse_p3() {
        let g = parse_graph("3 2\n0 1\n1 2").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_k1() {
        let g = parse_graph("1 0").unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn parse_self_loop_rejected() {
        let err = parse_graph("2 1\n0 0").unwrap_err();
        match err {
            GraphError::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("self-loop"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(
            parse_graph("2 1\n0 5"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1\n0 1"),
            Err(GraphError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("3 2\n0 1"),
            Err(GraphError::Parse { .. })
        ));
    }

    #[test]
    fn parse_comments_and_blanks() {
        let g = parse_graph("# a triangle\n3 3\n\n0 1 # first\n1 2\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn serialize_round_trip_canonical() {
        let text = "4 3\n0 1\n1 2\n2 3\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(serialize_graph(&g), text);
        let g2 = parse_graph(&serialize_graph(&g)).unwrap();
        assert_eq!(g, g2);
    }

    #[test]
    fn family_degree_sequences() {
        for n in 3..9 {
            let c = build_family(FamilySpec::Cycle { n }).unwrap();
            assert!((0..n).all(|v| c.degree(v) == 2));
            let k = build_family(FamilySpec::Complete { n }).unwrap();
            assert!((0..n).all(|v| k.degree(v) == n - 1));
            assert_eq!(k.edge_count(), n * (n - 1) / 2);
        }
        let s = build_family(FamilySpec::Star { n: 5 }).unwrap();
        assert_eq!(s.degree(0), 5);
        assert!((1..=5).all(|v| s.degree(v) == 1));
    }

    #[test]
    fn random_connected_is_connected() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let n = rand::Rng::gen_range(&mut rng, 1..10);
            let g = random_connected(n, 0.3, &mut rng);
            assert!(graph_stats(&g).connected, "n={n}");
        }
    }
}

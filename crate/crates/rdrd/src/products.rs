//! Strong, cardinal (direct) and corona products with a documented,
//! canonical vertex numbering.
//!
//! For strong and cardinal products the vertex `(u, v)` of `G * H` has index
//! `u * |V(H)| + v` (row-major in factor coordinates). For the corona
//! `G (.) H` the base vertices keep their ids `0..n-1` and the i-th copy of
//! `H` occupies `n + i*|V(H)| .. n + (i+1)*|V(H)| - 1`.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProductError {
    #[error("{0} factor must be nonempty")]
    EmptyFactor(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    Strong,
    Cardinal,
    Corona,
}

/// Coordinates of one product vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexCoord {
    /// `(u, v)` with `u` in the first factor, `v` in the second.
    Factor { u: usize, v: usize },
    /// Base vertex of a corona, keeping its id from `G`.
    CoronaBase { u: usize },
    /// Vertex `w` of the copy of `H` attached to base vertex `u`.
    CoronaCopy { u: usize, w: usize },
}

/// Bijection between product vertex ids and factor coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductVertexMap {
    pub kind: ProductKind,
    pub g_order: usize,
    pub h_order: usize,
    pub coords: Vec<VertexCoord>,
}

impl ProductVertexMap {
    pub fn coord(&self, index: usize) -> VertexCoord {
        self.coords[index]
    }

    /// Index of `(u, v)` in a strong/cardinal product.
    pub fn factor_index(&self, u: usize, v: usize) -> usize {
        debug_assert!(matches!(self.kind, ProductKind::Strong | ProductKind::Cardinal));
        u * self.h_order + v
    }

    /// Index of base vertex `u` in a corona.
    pub fn corona_base_index(&self, u: usize) -> usize {
        debug_assert_eq!(self.kind, ProductKind::Corona);
        u
    }

    /// Index of copy vertex `w` attached to base `u` in a corona.
    pub fn corona_copy_index(&self, u: usize, w: usize) -> usize {
        debug_assert_eq!(self.kind, ProductKind::Corona);
        self.g_order + u * self.h_order + w
    }
}

fn factor_map(kind: ProductKind, gn: usize, hn: usize) -> ProductVertexMap {
    let mut coords = Vec::with_capacity(gn * hn);
    for u in 0..gn {
        for v in 0..hn {
            coords.push(VertexCoord::Factor { u, v });
        }
    }
    ProductVertexMap {
        kind,
        g_order: gn,
        h_order: hn,
        coords,
    }
}

/// Strong product: `(u,v) ~ (u',v')` iff (`u=u'` and `v~v'`) or (`v=v'` and
/// `u~u'`) or (`u~u'` and `v~v'`).
pub fn strong_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap), ProductError> {
    if g.order() == 0 {
        return Err(ProductError::EmptyFactor("first"));
    }
    if h.order() == 0 {
        return Err(ProductError::EmptyFactor("second"));
    }
    let (gn, hn) = (g.order(), h.order());
    let map = factor_map(ProductKind::Strong, gn, hn);
    let mut edges = Vec::new();
    // u = u', v ~ v'
    for u in 0..gn {
        for (v, w) in h.edges() {
            edges.push((map.factor_index(u, v), map.factor_index(u, w)));
        }
    }
    // v = v', u ~ u'
    for v in 0..hn {
        for (u, t) in g.edges() {
            edges.push((map.factor_index(u, v), map.factor_index(t, v)));
        }
    }
    // u ~ u', v ~ v' (both diagonal orientations)
    for (u, t) in g.edges() {
        for (v, w) in h.edges() {
            edges.push((map.factor_index(u, v), map.factor_index(t, w)));
            edges.push((map.factor_index(u, w), map.factor_index(t, v)));
        }
    }
    let graph = Graph::from_edges(gn * hn, &edges).expect("strong product edges are simple");
    Ok((graph, map))
}

/// Cardinal (direct/tensor) product: `(u,v) ~ (u',v')` iff `u~u'` and `v~v'`.
pub fn cardinal_product(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap), ProductError> {
    if g.order() == 0 {
        return Err(ProductError::EmptyFactor("first"));
    }
    if h.order() == 0 {
        return Err(ProductError::EmptyFactor("second"));
    }
    let (gn, hn) = (g.order(), h.order());
    let map = factor_map(ProductKind::Cardinal, gn, hn);
    let mut edges = Vec::new();
    for (u, t) in g.edges() {
        for (v, w) in h.edges() {
            edges.push((map.factor_index(u, v), map.factor_index(t, w)));
            edges.push((map.factor_index(u, w), map.factor_index(t, v)));
        }
    }
    let graph = Graph::from_edges(gn * hn, &edges).expect("cardinal product edges are simple");
    Ok((graph, map))
}

/// Corona: one copy of `G`, `|V(G)|` copies of `H`, the i-th base vertex
/// joined to every vertex of the i-th copy. `H` may be edgeless or empty.
pub fn corona(g: &Graph, h: &Graph) -> Result<(Graph, ProductVertexMap), ProductError> {
    if g.order() == 0 {
        return Err(ProductError::EmptyFactor("first"));
    }
    let (gn, hn) = (g.order(), h.order());
    let mut coords = Vec::with_capacity(gn * (1 + hn));
    for u in 0..gn {
        coords.push(VertexCoord::CoronaBase { u });
    }
    for u in 0..gn {
        for w in 0..hn {
            coords.push(VertexCoord::CoronaCopy { u, w });
        }
    }
    let map = ProductVertexMap {
        kind: ProductKind::Corona,
        g_order: gn,
        h_order: hn,
        coords,
    };
    let mut edges = g.edges();
    for u in 0..gn {
        for w in 0..hn {
            edges.push((map.corona_base_index(u), map.corona_copy_index(u, w)));
        }
        for (w, x) in h.edges() {
            edges.push((map.corona_copy_index(u, w), map.corona_copy_index(u, x)));
        }
    }
    let graph = Graph::from_edges(gn * (1 + hn), &edges).expect("corona edges are simple");
    Ok((graph, map))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, graph_stats, FamilySpec};

    fn path(n: usize) -> Graph {
        build_family(FamilySpec::Path { n }).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        build_family(FamilySpec::Cycle { n }).unwrap()
    }
    fn complete(n: usize) -> Graph {
        build_family(FamilySpec::Complete { n }).unwrap()
    }

    #[test]
    fn strong_p2_p2_is_k4() {
        let (g, _) = strong_product(&path(2), &path(2)).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn strong_k3_k3_is_k9() {
        let (g, _) = strong_product(&complete(3), &complete(3)).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(g.edge_count(), 9 * 8 / 2);
    }

    #[test]
    fn strong_p2_p3_middle_column_degree() {
        let (g, map) = strong_product(&path(2), &path(3)).unwrap();
        assert_eq!(g.order(), 6);
        for u in 0..2 {
            assert_eq!(g.degree(map.factor_index(u, 1)), 5);
        }
        // Degree identity d(u,v) = d(u)d(h) + d(u) + d(v).
        let p2 = path(2);
        let p3 = path(3);
        for u in 0..2 {
            for v in 0..3 {
                let expect = p2.degree(u) * p3.degree(v) + p2.degree(u) + p3.degree(v);
                assert_eq!(g.degree(map.factor_index(u, v)), expect);
            }
        }
    }

    #[test]
    fn cardinal_p2_p2_two_disjoint_edges() {
        let (g, _) = cardinal_product(&path(2), &path(2)).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(graph_stats(&g).components, 2);
    }

    #[test]
    fn cardinal_p2_c5_is_c10() {
        let (g, _) = cardinal_product(&path(2), &cycle(5)).unwrap();
        let s = graph_stats(&g);
        assert_eq!(g.order(), 10);
        assert!(s.connected);
        assert_eq!((s.max_degree, s.min_degree), (2, 2));
    }

    #[test]
    fn cardinal_c3_c3_four_regular() {
        let (g, _) = cardinal_product(&cycle(3), &cycle(3)).unwrap();
        assert_eq!(g.order(), 9);
        assert!((0..9).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn cardinal_connectivity_split() {
        // bipartite x bipartite splits into exactly two components
        let (g, _) = cardinal_product(&path(3), &path(4)).unwrap();
        assert_eq!(graph_stats(&g).components, 2);
        // not both bipartite and both connected: connected
        let (g, _) = cardinal_product(&cycle(3), &path(4)).unwrap();
        assert!(graph_stats(&g).connected);
    }

    #[test]
    fn corona_small_cases() {
        let (k2, _) = corona(&complete(1), &complete(1)).unwrap();
        assert_eq!((k2.order(), k2.edge_count()), (2, 1));

        let (p4, _) = corona(&complete(2), &complete(1)).unwrap();
        assert_eq!((p4.order(), p4.edge_count()), (4, 3));
        let s = graph_stats(&p4);
        assert!(s.connected);
        assert_eq!((s.max_degree, s.min_degree), (2, 1));

        let (g, map) = corona(&cycle(3), &complete(1)).unwrap();
        assert_eq!((g.order(), g.edge_count()), (6, 6));
        for u in 0..3 {
            let pendant = map.corona_copy_index(u, 0);
            assert_eq!(g.degree(pendant), 1);
            assert!(g.has_edge(u, pendant));
        }
    }

    #[test]
    fn corona_with_edgeless_h() {
        let (g, _) = corona(&complete(2), &build_family(FamilySpec::Empty { n: 2 }).unwrap())
            .unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 1 + 2 * 2);
    }

    #[test]
    fn edge_count_identities_small_pool() {
        let pool: Vec<Graph> = vec![
            path(1),
            path(2),
            path(3),
            path(4),
            path(5),
            cycle(3),
            cycle(4),
            cycle(5),
            complete(4),
            build_family(FamilySpec::Star { n: 3 }).unwrap(),
            build_family(FamilySpec::Empty { n: 3 }).unwrap(),
        ];
        for g in &pool {
            for h in &pool {
                let (ng, mg) = (g.order(), g.edge_count());
                let (nh, mh) = (h.order(), h.edge_count());
                let (sp, _) = strong_product(g, h).unwrap();
                assert_eq!(sp.edge_count(), mg * nh + ng * mh + 2 * mg * mh);
                let (cp, _) = cardinal_product(g, h).unwrap();
                assert_eq!(cp.edge_count(), 2 * mg * mh);
                let (co, _) = corona(g, h).unwrap();
                assert_eq!(co.edge_count(), mg + ng * (nh + mh));
            }
        }
    }

    #[test]
    fn empty_factor_rejected() {
        let empty = Graph::empty(0);
        assert!(strong_product(&empty, &path(2)).is_err());
        assert!(cardinal_product(&path(2), &empty).is_err());
        assert!(corona(&empty, &path(2)).is_err());
        // corona tolerates an empty H (degenerates to G itself)
        let (g, _) = corona(&path(3), &empty).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn relabeling_preserves_product_shape() {
        let g = cycle(4);
        let perm = vec![2, 0, 3, 1];
        let g2 = g.induced_relabel(&perm);
        let h = path(3);
        let (a, _) = strong_product(&g, &h).unwrap();
        let (b, _) = strong_product(&g2, &h).unwrap();
        assert_eq!(a.edge_count(), b.edge_count());
        let mut da: Vec<usize> = (0..a.order()).map(|v| a.degree(v)).collect();
        let mut db: Vec<usize> = (0..b.order()).map(|v| b.degree(v)).collect();
        da.sort_unstable();
        db.sort_unstable();
        assert_eq!(da, db);
    }
}

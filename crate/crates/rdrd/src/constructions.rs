//! Explicit optimal labelings for the cataloged families, as
//! machine-checkable certificates, plus the weight-combining construction
//! for strong products.
//!
//! Each generator emits the graph together with a labeling whose validity
//! and weight are asserted against the catalog at construction time, so a
//! returned certificate is already checked.

use thiserror::Error;

use crate::catalog::{self, CatalogError, CatalogQuery};
use crate::graph::{build_family, graph_stats, FamilySpec, Graph, GraphError};
use crate::labeling::{validate, weight, Labeling, LabelingError, Variant};
use crate::products::{self, ProductError, ProductVertexMap};

#[derive(Debug, Error)]
pub enum ConstructionError {
    #[error("construction inapplicable for {family}: {condition}")]
    Inapplicable {
        family: &'static str,
        condition: String,
    },
    #[error("constructed labeling for {family} is infeasible: {detail}")]
    InvalidConstruction { family: &'static str, detail: String },
    #[error("constructed weight {got} differs from catalog value {expected} for {family}")]
    WrongWeight {
        family: &'static str,
        got: u32,
        expected: u32,
    },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Product(#[from] ProductError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

/// A graph, a feasible restrained labeling of it, and the weight it attains.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub graph: Graph,
    pub labeling: Labeling,
    pub claimed_weight: u32,
    pub citation: String,
}

fn seal(
    family: &'static str,
    graph: Graph,
    labels: Vec<u8>,
    expected: u32,
    citation: String,
) -> Result<Certificate, ConstructionError> {
    let labeling = Labeling::new(labels)?;
    let report = validate(&graph, &labeling, Variant::Rdrd)?;
    if !report.valid() {
        return Err(ConstructionError::InvalidConstruction {
            family,
            detail: report
                .violations
                .first()
                .map(|v| v.detail.clone())
                .unwrap_or_default(),
        });
    }
    let got = weight(&labeling);
    if got != expected {
        return Err(ConstructionError::WrongWeight {
            family,
            got,
            expected,
        });
    }
    Ok(Certificate {
        graph,
        labeling,
        claimed_weight: expected,
        citation,
    })
}

fn inapplicable(family: &'static str, condition: impl Into<String>) -> ConstructionError {
    ConstructionError::Inapplicable {
        family,
        condition: condition.into(),
    }
}

/// Optimal path labeling. Zeros occur only in runs of two flanked by 3s;
/// the residue decides how the ends are padded with 1s.
pub fn path_certificate(n: usize) -> Result<Certificate, ConstructionError> {
    let expected = catalog::catalog_value(CatalogQuery::Path { n })?;
    let graph = build_family(FamilySpec::Path { n })?;
    let mut labels = vec![0u8; n];
    match n {
        1 => labels[0] = 2,
        2 => {
            labels[0] = 2;
            labels[1] = 1;
        }
        3 => {
            labels[0] = 1;
            labels[1] = 2;
            labels[2] = 1;
        }
        _ => match n % 3 {
            0 => {
                // 1, 3, 0, 0, 3, ..., 3, 1
                labels[0] = 1;
                labels[n - 1] = 1;
                let mut j = 1;
                while j <= n - 2 {
                    labels[j] = 3;
                    j += 3;
                }
            }
            1 => {
                // 3, 0, 0, 3, ..., 0, 0, 3
                let mut j = 0;
                while j <= n - 1 {
                    labels[j] = 3;
                    j += 3;
                }
            }
            _ => {
                // 3, 0, 0, ..., 3, 1
                let mut j = 0;
                while j <= n - 2 {
                    labels[j] = 3;
                    j += 3;
                }
                labels[n - 1] = 1;
            }
        },
    }
    seal(
        "path",
        graph,
        labels,
        expected.value,
        "period-3 path pattern, ends padded by residue".to_string(),
    )
}

/// Optimal cycle labeling: blocks of (3, 0, 0), with a trailing 3 or (3, 1)
/// patch for the non-divisible residues.
pub fn cycle_certificate(n: usize) -> Result<Certificate, ConstructionError> {
    let expected = catalog::catalog_value(CatalogQuery::Cycle { n })?;
    let graph = build_family(FamilySpec::Cycle { n })?;
    let mut labels = vec![0u8; n];
    match n % 3 {
        0 => {
            let mut j = 0;
            while j < n {
                labels[j] = 3;
                j += 3;
            }
        }
        1 => {
            // 3s at 0, 3, ..., n-1: the last block has a single extra 3.
            let mut j = 0;
            while j <= n - 1 {
                labels[j] = 3;
                j += 3;
            }
        }
        _ => {
            let mut j = 0;
            while j <= n - 2 {
                labels[j] = 3;
                j += 3;
            }
            labels[n - 1] = 1;
        }
    }
    seal(
        "cycle",
        graph,
        labels,
        expected.value,
        "period-3 cycle pattern with residue patch".to_string(),
    )
}

/// Strip certificate for `P_rows (strong) P_m`, rows 2 or 3: 3s on the
/// second row at columns 1, 4, ..., plus a patch column near the right end
/// for the non-divisible residues.
pub fn strong_strip_certificate(rows: usize, m: usize) -> Result<Certificate, ConstructionError> {
    let expected = catalog::catalog_value(CatalogQuery::StrongStrip { rows, m })?;
    let rows_g = build_family(FamilySpec::Path { n: rows })?;
    let cols_g = build_family(FamilySpec::Path { n: m })?;
    let (graph, map) = products::strong_product(&rows_g, &cols_g)?;
    let mut labels = vec![0u8; graph.order()];
    let blocks = m / 3;
    match m % 3 {
        0 => {
            for k in 0..blocks {
                labels[map.factor_index(1, 3 * k + 1)] = 3;
            }
        }
        _ => {
            for k in 0..blocks {
                labels[map.factor_index(1, 3 * k + 1)] = 3;
            }
            labels[map.factor_index(1, m - 2)] = 3;
        }
    }
    seal(
        "strong_strip",
        graph,
        labels,
        expected.value,
        "second-row 3s every third column, patched at the right end".to_string(),
    )
}

/// Middle-row all-2 labeling of the cardinal product of `C_3` and `C_m`.
pub fn c3xcm_certificate(m: usize) -> Result<Certificate, ConstructionError> {
    let expected = catalog::catalog_value(CatalogQuery::C3xCm { m })?;
    let c3 = build_family(FamilySpec::Cycle { n: 3 })?;
    let cm = build_family(FamilySpec::Cycle { n: m })?;
    let (graph, map) = products::cardinal_product(&c3, &cm)?;
    let mut labels = vec![0u8; graph.order()];
    for j in 0..m {
        labels[map.factor_index(1, j)] = 2;
    }
    seal(
        "c3xcm",
        graph,
        labels,
        expected.value,
        "row of 2s across every column".to_string(),
    )
}

/// All base vertices labeled 3, copies 0. Requires connected `G` and an `H`
/// of order at least 2 with no isolated vertex.
pub fn corona_general_certificate(g: &Graph, h: &Graph) -> Result<Certificate, ConstructionError> {
    let sg = graph_stats(g);
    let sh = graph_stats(h);
    if !sg.connected || sg.n < 1 {
        return Err(inapplicable("corona_general", "requires connected G"));
    }
    if sh.n < 2 {
        return Err(inapplicable(
            "corona_general",
            "requires H with at least 2 vertices",
        ));
    }
    if sh.min_degree == 0 {
        return Err(inapplicable(
            "corona_general",
            "requires H without isolated vertices; a 0-labeled copy vertex with no copy \
             neighbor would be isolated among the 0-vertices",
        ));
    }
    let expected = catalog::catalog_value(CatalogQuery::CoronaGeneral { g_order: sg.n })?;
    let (graph, _) = products::corona(g, h)?;
    let mut labels = vec![0u8; graph.order()];
    for label in labels.iter_mut().take(sg.n) {
        *label = 3;
    }
    seal(
        "corona_general",
        graph,
        labels,
        expected.value,
        "3 on every base vertex, 0 elsewhere".to_string(),
    )
}

fn corona_with_k1(g: &Graph) -> Result<(Graph, ProductVertexMap), ConstructionError> {
    let k1 = build_family(FamilySpec::Complete { n: 1 })?;
    Ok(products::corona(g, &k1)?)
}

/// Pendant corona of a complete graph: one pendant gets 1, its base 2, the
/// other pendants 2; for n = 2 the graph is a path and the path pattern
/// applies.
pub fn corona_kn_certificate(n: usize) -> Result<Certificate, ConstructionError> {
    let expected = catalog::catalog_value(CatalogQuery::CoronaKn { n })?;
    let base = build_family(FamilySpec::Complete { n })?;
    let (graph, map) = corona_with_k1(&base)?;
    let mut labels = vec![0u8; graph.order()];
    if n == 2 {
        // K2 (.) K1 is the path pendant0 - base0 - base1 - pendant1.
        labels[map.corona_base_index(0)] = 2;
        labels[map.corona_base_index(1)] = 2;
        labels[map.corona_copy_index(0, 0)] = 1;
        labels[map.corona_copy_index(1, 0)] = 1;
    } else {
        labels[map.corona_copy_index(0, 0)] = 1;
        labels[map.corona_base_index(0)] = 2;
        for u in 1..n {
            labels[map.corona_copy_index(u, 0)] = 2;
        }
    }
    seal(
        "corona_kn",
        graph,
        labels,
        expected.value,
        "1 on one pendant, 2 on its base and the remaining pendants".to_string(),
    )
}

/// Pendant corona of a cycle, by residue. Base vertices are `u_0..u_{n-1}`
/// in cycle order, the pendant of `u_j` is `u'_j`; the repeating block puts
/// 2 on `u_{3k+2}`, `u'_{3k}`, `u'_{3k+1}` and 1 on `u'_{3k+2}`.
pub fn corona_cn_certificate(n: usize) -> Result<Certificate, ConstructionError> {
    let expected = catalog::catalog_value(CatalogQuery::CoronaCn { n })?;
    let base = build_family(FamilySpec::Cycle { n })?;
    let (graph, map) = corona_with_k1(&base)?;
    let mut labels = vec![0u8; graph.order()];
    let blocks = n / 3;
    for k in 0..blocks {
        labels[map.corona_base_index(3 * k + 2)] = 2;
        labels[map.corona_copy_index(3 * k, 0)] = 2;
        labels[map.corona_copy_index(3 * k + 1, 0)] = 2;
        labels[map.corona_copy_index(3 * k + 2, 0)] = 1;
    }
    match n % 3 {
        0 => {}
        1 => {
            labels[map.corona_base_index(n - 1)] = 2;
            labels[map.corona_copy_index(n - 1, 0)] = 1;
        }
        _ => {
            labels[map.corona_base_index(n - 1)] = 2;
            labels[map.corona_copy_index(n - 2, 0)] = 2;
            labels[map.corona_base_index(n - 2)] = 1;
            labels[map.corona_copy_index(n - 1, 0)] = 1;
        }
    }
    seal(
        "corona_cn",
        graph,
        labels,
        expected.value,
        "period-3 block on base/pendant pairs with a residue patch".to_string(),
    )
}

/// Pendant corona of a path, by residue. The repeating block puts 2 on
/// `u_{3k}` and `u'_{3k+1}` and 1 on `u'_{3k}`, with per-residue trimming.
pub fn corona_pn_certificate(n: usize) -> Result<Certificate, ConstructionError> {
    let expected = catalog::catalog_value(CatalogQuery::CoronaPn { n })?;
    let base = build_family(FamilySpec::Path { n })?;
    let (graph, map) = corona_with_k1(&base)?;
    let mut labels = vec![0u8; graph.order()];
    match n % 3 {
        0 => {
            let blocks = n / 3;
            for k in 0..blocks {
                labels[map.corona_base_index(3 * k)] = 2;
                labels[map.corona_copy_index(3 * k + 1, 0)] = 2;
                labels[map.corona_copy_index(3 * k, 0)] = 1;
            }
            for k in 0..blocks.saturating_sub(1) {
                labels[map.corona_copy_index(3 * k + 2, 0)] = 2;
            }
            labels[map.corona_copy_index(n - 1, 0)] = 3;
        }
        1 => {
            for k in 0..=(n - 1) / 3 {
                labels[map.corona_base_index(3 * k)] = 2;
                labels[map.corona_copy_index(3 * k, 0)] = 1;
            }
            for k in 0..(n - 1) / 3 {
                labels[map.corona_copy_index(3 * k + 1, 0)] = 2;
                labels[map.corona_copy_index(3 * k + 2, 0)] = 2;
            }
        }
        _ => {
            for k in 0..=(n - 2) / 3 {
                labels[map.corona_base_index(3 * k)] = 2;
                labels[map.corona_copy_index(3 * k + 1, 0)] = 2;
                labels[map.corona_copy_index(3 * k, 0)] = 1;
            }
            for k in 0..(n - 2) / 3 {
                labels[map.corona_copy_index(3 * k + 2, 0)] = 2;
            }
            labels[map.corona_base_index(n - 1)] = 1;
        }
    }
    seal(
        "corona_pn",
        graph,
        labels,
        expected.value,
        "period-3 block on base/pendant pairs, trimmed by residue".to_string(),
    )
}

/// Pendant corona of a complete bipartite graph. For parts of size at least
/// 2 each: 2 on one base vertex per part and on all pendants except theirs,
/// which get 1. With a singleton part the graph is a wounded spider and the
/// spider labeling applies.
pub fn corona_kpq_certificate(p: usize, q: usize) -> Result<Certificate, ConstructionError> {
    let expected = catalog::catalog_value(CatalogQuery::CoronaKpq { p, q })?;
    let base = build_family(FamilySpec::CompleteBipartite { p, q })?;
    let (graph, map) = corona_with_k1(&base)?;
    let mut labels = vec![0u8; graph.order()];
    if p.min(q) == 1 {
        // Center (the singleton part's vertex) gets 2 and its pendant 1;
        // every other base/pendant pair gets (2, 1) on (pendant, base)?
        // No: (base, pendant) = (2, 1) viewed from the leg structure:
        // each leg is center - base_v - pendant_v, so base_v = 2 supports
        // pendant_v = 1, and the center's own pendant leans on the center.
        let (center, others): (usize, Vec<usize>) = if p == 1 {
            (0, (p..p + q).collect())
        } else {
            (p, (0..p).collect())
        };
        labels[map.corona_base_index(center)] = 2;
        labels[map.corona_copy_index(center, 0)] = 1;
        for &v in &others {
            labels[map.corona_base_index(v)] = 2;
            labels[map.corona_copy_index(v, 0)] = 1;
        }
    } else {
        labels[map.corona_base_index(0)] = 2;
        labels[map.corona_base_index(p)] = 2;
        labels[map.corona_copy_index(0, 0)] = 1;
        labels[map.corona_copy_index(p, 0)] = 1;
        for u in 1..p {
            labels[map.corona_copy_index(u, 0)] = 2;
        }
        for v in p + 1..p + q {
            labels[map.corona_copy_index(v, 0)] = 2;
        }
    }
    seal(
        "corona_kpq",
        graph,
        labels,
        expected.value,
        "one supported pendant per part, 2s on the remaining pendants".to_string(),
    )
}

/// Double pendant corona `(G (.) K_1) (.) K_1` for connected `G` of order
/// at least 2: with `u` the original vertices, `v` their first-level
/// pendants, `u'`/`v'` the second-level pendants, assign 2 to `u'` and `v`,
/// 1 to `v'`, 0 to `u`.
pub fn corona_double_certificate(g: &Graph) -> Result<Certificate, ConstructionError> {
    let sg = graph_stats(g);
    if !sg.connected || sg.n < 2 {
        return Err(inapplicable(
            "corona_double",
            "requires connected G of order >= 2 (for a single vertex the double corona is a \
             path of order 4 with value 6, not 5)",
        ));
    }
    let n = sg.n;
    let expected = catalog::catalog_value(CatalogQuery::CoronaDouble { g_order: n })?;
    let (once, first_map) = corona_with_k1(g)?;
    let (graph, second_map) = corona_with_k1(&once)?;
    let mut labels = vec![0u8; graph.order()];
    for i in 0..n {
        let v_i = first_map.corona_copy_index(i, 0);
        labels[second_map.corona_base_index(v_i)] = 2;
        labels[second_map.corona_copy_index(i, 0)] = 2; // u'_i
        labels[second_map.corona_copy_index(v_i, 0)] = 1; // v'_i
    }
    seal(
        "corona_double",
        graph,
        labels,
        expected.value,
        "2 on first-level pendants and second-level pendants of original vertices, 1 on the rest"
            .to_string(),
    )
}

/// Wounded spider `ws(1, q, q-1)`: 2 on the center and on every subdivision
/// vertex, 1 on every leaf.
pub fn wounded_spider_certificate(q: usize) -> Result<Certificate, ConstructionError> {
    let expected = catalog::catalog_value(CatalogQuery::WoundedSpider { q })?;
    let graph = build_family(FamilySpec::WoundedSpider { n: q, t: q.saturating_sub(1) })?;
    let mut labels = vec![0u8; graph.order()];
    labels[0] = 2;
    for leg in 1..=q {
        if leg <= q - 1 {
            labels[q + leg] = 2; // subdivision vertex
            labels[leg] = 1; // leaf at the end of the subdivided leg
        } else {
            labels[leg] = 1; // undivided leaf leans on the center
        }
    }
    seal(
        "wounded_spider",
        graph,
        labels,
        expected.value,
        "2 on the center and subdivision vertices, 1 on the leaves".to_string(),
    )
}

/// Dispatch by catalog query where a canonical instance exists.
pub fn construct_certificate(query: CatalogQuery) -> Result<Certificate, ConstructionError> {
    match query {
        CatalogQuery::Path { n } => path_certificate(n),
        CatalogQuery::Cycle { n } => cycle_certificate(n),
        CatalogQuery::StrongStrip { rows, m } => strong_strip_certificate(rows, m),
        CatalogQuery::C3xCm { m } => c3xcm_certificate(m),
        CatalogQuery::CoronaKn { n } => corona_kn_certificate(n),
        CatalogQuery::CoronaCn { n } => corona_cn_certificate(n),
        CatalogQuery::CoronaPn { n } => corona_pn_certificate(n),
        CatalogQuery::CoronaKpq { p, q } => corona_kpq_certificate(p, q),
        CatalogQuery::CoronaGeneral { g_order } => {
            let g = build_family(FamilySpec::Path { n: g_order })?;
            let h = build_family(FamilySpec::Complete { n: 2 })?;
            corona_general_certificate(&g, &h)
        }
        CatalogQuery::CoronaDouble { g_order } => {
            let g = build_family(FamilySpec::Path { n: g_order })?;
            corona_double_certificate(&g)
        }
        CatalogQuery::WoundedSpider { q } => wounded_spider_certificate(q),
        CatalogQuery::P2xPn { .. } | CatalogQuery::P2xOddCycle { .. } => {
            Err(inapplicable(
                "p2x",
                "the product splits into cycle/path copies; construct those directly",
            ))
        }
        CatalogQuery::P2xBipartite { .. } => Err(inapplicable(
            "p2x_bipartite",
            "abstract entry with no canonical instance",
        )),
    }
}

/// Combine optimal labelings of two strong-product factors into a labeling
/// of the product. With `f1 = (A0,A1,A2,A3)` and `f2 = (B0,B1,B2,B3)` the
/// product vertex `(u,v)` gets 3 on `A3xB3 + A2xB3 + A3xB2`, 2 on `A2xB2`,
/// 1 on `A1x(B1+B2+B3) + (A2+A3)xB1`, 0 otherwise; the resulting weight is
/// `w(f1) w(f2)` minus the pairwise deduction term (see `combine_deduction`).
pub fn combine_strong(
    g: &Graph,
    h: &Graph,
    f1: &Labeling,
    f2: &Labeling,
) -> Result<(Graph, Labeling), ConstructionError> {
    for (graph, f, side) in [(g, f1, "first"), (h, f2, "second")] {
        let report = validate(graph, f, Variant::Rdrd)?;
        if !report.valid() {
            return Err(ConstructionError::InvalidConstruction {
                family: "combine_strong",
                detail: format!("{side} factor labeling is not feasible"),
            });
        }
    }
    let (product, map) = products::strong_product(g, h)?;
    let mut labels = vec![0u8; product.order()];
    for u in 0..g.order() {
        for v in 0..h.order() {
            let (a, b) = (f1.get(u), f2.get(v));
            labels[map.factor_index(u, v)] = match (a, b) {
                (3, 3) | (2, 3) | (3, 2) => 3,
                (2, 2) => 2,
                (1, 1) | (1, 2) | (1, 3) | (2, 1) | (3, 1) => 1,
                _ => 0,
            };
        }
    }
    let labeling = Labeling::new(labels)?;
    Ok((product, labeling))
}

/// The deduction term of the combining construction: the combined weight is
/// exactly `w(f1) * w(f2) - combine_deduction(f1, f2)`.
pub fn combine_deduction(f1: &Labeling, f2: &Labeling) -> u32 {
    let a: Vec<u32> = f1.partition().iter().map(|p| p.len() as u32).collect();
    let b: Vec<u32> = f2.partition().iter().map(|p| p.len() as u32).collect();
    6 * a[3] * b[3]
        + 3 * a[3] * b[2]
        + 2 * a[3] * b[1]
        + 3 * a[2] * b[3]
        + 2 * a[2] * b[2]
        + a[2] * b[1]
        + a[1] * b[2]
        + 2 * a[1] * b[3]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::is_valid;
    use crate::solver::{self, Problem};

    #[test]
    fn path_and_cycle_certificates_match_brute_force() {
        for n in 1..=12 {
            let cert = path_certificate(n).unwrap();
            if n <= 11 {
                let opt = solver::brute_force(&cert.graph, Problem::RdrdMin).unwrap().value;
                assert_eq!(cert.claimed_weight, opt, "P{n}");
            }
        }
        for n in 3..=12 {
            let cert = cycle_certificate(n).unwrap();
            if n <= 11 {
                let opt = solver::brute_force(&cert.graph, Problem::RdrdMin).unwrap().value;
                assert_eq!(cert.claimed_weight, opt, "C{n}");
            }
        }
    }

    #[test]
    fn strip_certificates_validate_far_out() {
        for rows in [2, 3] {
            for m in 2..=30 {
                let cert = strong_strip_certificate(rows, m).unwrap();
                assert!(is_valid(&cert.graph, &cert.labeling, Variant::Rdrd));
            }
        }
        for m in 3..=30 {
            let cert = c3xcm_certificate(m).unwrap();
            assert_eq!(cert.claimed_weight, 2 * m as u32);
        }
    }

    #[test]
    fn spec_construction_examples() {
        let cert = c3xcm_certificate(5).unwrap();
        assert_eq!(cert.claimed_weight, 10);
        // middle row all 2s
        assert_eq!(&cert.labeling.labels()[5..10], &[2, 2, 2, 2, 2]);

        let cert = corona_cn_certificate(3).unwrap();
        assert_eq!(cert.claimed_weight, 7);
        // base u2 = 2, pendants of u0 and u1 = 2, pendant of u2 = 1
        assert_eq!(cert.labeling.labels(), &[0, 0, 2, 2, 2, 1]);

        let cert = strong_strip_certificate(2, 2).unwrap();
        assert_eq!(cert.claimed_weight, 3);
        assert_eq!(cert.labeling.labels(), &[0, 0, 3, 0]);
    }

    #[test]
    fn corona_certificates_in_range() {
        for n in 1..=30 {
            corona_kn_certificate(n).unwrap();
            corona_pn_certificate(n).unwrap();
            if n >= 3 {
                corona_cn_certificate(n).unwrap();
            }
            if n >= 2 {
                construct_certificate(CatalogQuery::CoronaDouble { g_order: n }).unwrap();
            }
            construct_certificate(CatalogQuery::CoronaGeneral { g_order: n }).unwrap();
            wounded_spider_certificate(n).unwrap();
        }
        for p in 1..=6 {
            for q in 1..=6 {
                corona_kpq_certificate(p, q).unwrap();
            }
        }
    }

    #[test]
    fn corona_general_refuses_bad_h() {
        let g = build_family(FamilySpec::Complete { n: 2 }).unwrap();
        let h_isolated = build_family(FamilySpec::Empty { n: 2 }).unwrap();
        assert!(matches!(
            corona_general_certificate(&g, &h_isolated),
            Err(ConstructionError::Inapplicable { .. })
        ));
        let k1 = build_family(FamilySpec::Complete { n: 1 }).unwrap();
        assert!(corona_general_certificate(&g, &k1).is_err());
    }

    #[test]
    fn combine_strong_k3_k3() {
        let k3 = build_family(FamilySpec::Complete { n: 3 }).unwrap();
        let f = Labeling::new(vec![3, 0, 0]).unwrap();
        let (product, combined) = combine_strong(&k3, &k3, &f, &f).unwrap();
        assert_eq!(product.order(), 9);
        assert!(is_valid(&product, &combined, Variant::Rdrd));
        assert_eq!(weight(&combined), 3);
        assert_eq!(weight(&f) * weight(&f) - combine_deduction(&f, &f), 3);
    }

    #[test]
    fn combine_strong_c6_c6() {
        let c6 = build_family(FamilySpec::Cycle { n: 6 }).unwrap();
        let f = Labeling::new(vec![3, 0, 0, 3, 0, 0]).unwrap();
        let (product, combined) = combine_strong(&c6, &c6, &f, &f).unwrap();
        assert!(is_valid(&product, &combined, Variant::Rdrd));
        assert_eq!(weight(&combined), 12);
        assert_eq!(combine_deduction(&f, &f), 24);
        assert_eq!(weight(&f) * weight(&f), 36);
    }

    #[test]
    fn combine_strong_k3_c6() {
        let k3 = build_family(FamilySpec::Complete { n: 3 }).unwrap();
        let c6 = build_family(FamilySpec::Cycle { n: 6 }).unwrap();
        let f1 = Labeling::new(vec![3, 0, 0]).unwrap();
        let f2 = Labeling::new(vec![3, 0, 0, 3, 0, 0]).unwrap();
        let (product, combined) = combine_strong(&k3, &c6, &f1, &f2).unwrap();
        assert!(is_valid(&product, &combined, Variant::Rdrd));
        assert_eq!(weight(&combined), 6);
        assert_eq!(
            weight(&combined),
            weight(&f1) * weight(&f2) - combine_deduction(&f1, &f2)
        );
    }

    #[test]
    fn combine_strong_rejects_infeasible_inputs() {
        let k3 = build_family(FamilySpec::Complete { n: 3 }).unwrap();
        let bad = Labeling::new(vec![0, 0, 0]).unwrap();
        let good = Labeling::new(vec![3, 0, 0]).unwrap();
        assert!(combine_strong(&k3, &k3, &bad, &good).is_err());
    }
}

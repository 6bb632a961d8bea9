//! Exact optimization: an exhaustive-search oracle over labelings and
//! vertex sets, and a branch-and-bound solver for the restrained variant.
//!
//! The oracle enumerates assignments depth-first in vertex-index order,
//! pruning a prefix only when it is provably unextendable (a fully-assigned
//! closed neighborhood violates its rule, or the partial weight already
//! exceeds the bound), so it visits exactly the feasible completions and
//! reports the lexicographically first optimum.

mod bnb;
mod brute;

use std::time::Duration;

use thiserror::Error;

use crate::graph::Graph;
use crate::labeling::Labeling;

pub use bnb::{solve_rdrd_bnb, BnbOpts};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error("graph order {n} exceeds the {problem} exhaustive-search limit of {limit}; pass larger limits explicitly to override")]
    TooLarge {
        n: usize,
        limit: usize,
        problem: &'static str,
    },
    #[error("component of order {n} exceeds the branch-and-bound width limit of 64")]
    ComponentTooLarge { n: usize },
}

/// What to optimize.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Problem {
    /// Minimum-weight restrained double Roman dominating function.
    RdrdMin,
    /// Minimum-weight double Roman dominating function.
    DrdMin,
    /// Minimum dominating set.
    DomMin,
    /// Maximum 2-packing (vertices pairwise at distance more than 2).
    TwopackMax,
}

impl Problem {
    pub fn name(self) -> &'static str {
        match self {
            Problem::RdrdMin => "rdrd",
            Problem::DrdMin => "drd",
            Problem::DomMin => "dom",
            Problem::TwopackMax => "twopack",
        }
    }

    pub fn is_label_problem(self) -> bool {
        matches!(self, Problem::RdrdMin | Problem::DrdMin)
    }
}

/// Optimal witness: a labeling for the Roman variants, a vertex set for
/// domination and packing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionCertificate {
    Labeling(Labeling),
    VertexSet(Vec<usize>),
}

impl SolutionCertificate {
    pub fn as_labeling(&self) -> Option<&Labeling> {
        match self {
            SolutionCertificate::Labeling(f) => Some(f),
            SolutionCertificate::VertexSet(_) => None,
        }
    }

    pub fn as_vertex_set(&self) -> Option<&[usize]> {
        match self {
            SolutionCertificate::VertexSet(s) => Some(s),
            SolutionCertificate::Labeling(_) => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    /// Optimal value when a certificate is present; otherwise a proven
    /// lower bound (budget-limited branch-and-bound that exhausted the
    /// budget without finding a feasible labeling).
    pub value: u32,
    pub certificate: Option<SolutionCertificate>,
    /// True when the search ran to completion (no timeout). With a
    /// certificate this means `value` is optimal; without one it means the
    /// bound `value` is proven.
    pub proven_optimal: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    /// Number of distinct optima, filled by the enumerating entry points.
    pub optimum_count: Option<u64>,
}

/// Size ceilings for the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum order for the 4-ary labeling searches.
    pub label_max_n: usize,
    /// Maximum order for the set searches (domination, packing).
    pub set_max_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            label_max_n: 13,
            set_max_n: 22,
        }
    }
}

/// Exhaustive search with default limits.
pub fn brute_force(g: &Graph, problem: Problem) -> Result<SolveResult, SolverError> {
    brute_force_with(g, problem, Limits::default())
}

/// Exhaustive search with caller-chosen limits.
pub fn brute_force_with(
    g: &Graph,
    problem: Problem,
    limits: Limits,
) -> Result<SolveResult, SolverError> {
    brute::run(g, problem, limits, false).map(|(result, _)| result)
}

/// Exhaustive search that also returns every optimum, in lexicographic
/// order of the certificate.
pub fn brute_force_enumerate(
    g: &Graph,
    problem: Problem,
    limits: Limits,
) -> Result<(SolveResult, Vec<SolutionCertificate>), SolverError> {
    brute::run(g, problem, limits, true)
}

/// All optimal restrained labelings of `g`, with the optimal weight.
pub fn optimal_rdrd_labelings(
    g: &Graph,
    limits: Limits,
) -> Result<(u32, Vec<Labeling>), SolverError> {
    let (result, optima) = brute_force_enumerate(g, Problem::RdrdMin, limits)?;
    let labelings = optima
        .into_iter()
        .map(|c| match c {
            SolutionCertificate::Labeling(f) => f,
            SolutionCertificate::VertexSet(_) => unreachable!("rdrd optima are labelings"),
        })
        .collect();
    Ok((result.value, labelings))
}

/// Exact restrained value by whichever method fits: exhaustive search up to
/// the labeling limit, branch-and-bound beyond it.
pub fn exact_rdrd(g: &Graph) -> Result<SolveResult, SolverError> {
    if g.order() <= Limits::default().label_max_n {
        brute_force(g, Problem::RdrdMin)
    } else {
        solve_rdrd_bnb(g, &BnbOpts::default())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec, Graph};
    use crate::labeling::{is_valid, weight, Variant};
    use crate::products;

    fn path(n: usize) -> Graph {
        build_family(FamilySpec::Path { n }).unwrap()
    }
    fn cycle(n: usize) -> Graph {
        build_family(FamilySpec::Cycle { n }).unwrap()
    }
    fn complete(n: usize) -> Graph {
        build_family(FamilySpec::Complete { n }).unwrap()
    }

    fn rdrd_value(g: &Graph) -> u32 {
        brute_force(g, Problem::RdrdMin).unwrap().value
    }

    #[test]
    fn small_paths() {
        assert_eq!(rdrd_value(&path(1)), 2);
        assert_eq!(rdrd_value(&path(2)), 3);
        assert_eq!(rdrd_value(&path(3)), 4);
        assert_eq!(rdrd_value(&path(4)), 6);
    }

    #[test]
    fn path_formula_in_brute_range() {
        for n in 4..=9 {
            assert_eq!(rdrd_value(&path(n)), n as u32 + 2, "P{n}");
        }
    }

    #[test]
    fn cycle_formula_in_brute_range() {
        for n in 3..=9 {
            let expect = if n % 3 == 0 { n } else { n + 2 } as u32;
            assert_eq!(rdrd_value(&cycle(n)), expect, "C{n}");
        }
    }

    #[test]
    fn k4_value_three() {
        assert_eq!(rdrd_value(&complete(4)), 3);
    }

    #[test]
    fn c6_twopack_is_two() {
        let r = brute_force(&cycle(6), Problem::TwopackMax).unwrap();
        assert_eq!(r.value, 2);
        let set = r.certificate.unwrap();
        let set = set.as_vertex_set().unwrap();
        assert_eq!(set, &[0, 3]);
    }

    #[test]
    fn domination_small() {
        assert_eq!(brute_force(&cycle(6), Problem::DomMin).unwrap().value, 2);
        assert_eq!(brute_force(&path(4), Problem::DomMin).unwrap().value, 2);
        assert_eq!(brute_force(&complete(5), Problem::DomMin).unwrap().value, 1);
        let star = build_family(FamilySpec::Star { n: 4 }).unwrap();
        assert_eq!(brute_force(&star, Problem::DomMin).unwrap().value, 1);
    }

    #[test]
    fn drd_at_most_rdrd() {
        for g in [path(5), cycle(5), complete(4), build_family(FamilySpec::Star { n: 3 }).unwrap()]
        {
            let drd = brute_force(&g, Problem::DrdMin).unwrap().value;
            let rdrd = brute_force(&g, Problem::RdrdMin).unwrap().value;
            assert!(drd <= rdrd);
        }
    }

    #[test]
    fn certificates_validate() {
        for g in [path(6), cycle(7), complete(3)] {
            let r = brute_force(&g, Problem::RdrdMin).unwrap();
            let f = r.certificate.unwrap();
            let f = f.as_labeling().unwrap();
            assert!(is_valid(&g, f, Variant::Rdrd));
            assert_eq!(weight(f), r.value);
        }
    }

    #[test]
    fn size_limit_refusal() {
        let g = path(14);
        let err = brute_force(&g, Problem::RdrdMin).unwrap_err();
        assert_eq!(
            err,
            SolverError::TooLarge { n: 14, limit: 13, problem: "labeling" }
        );
    }

    #[test]
    fn enumerate_counts_all_optima() {
        // C3: optimum 3 via a single 3; the three rotations are the optima
        // of shape (3,0,0), and no other weight-3 labeling is feasible.
        let (r, optima) = brute_force_enumerate(&cycle(3), Problem::RdrdMin, Limits::default()).unwrap();
        assert_eq!(r.value, 3);
        assert_eq!(r.optimum_count, Some(3));
        for cert in &optima {
            let f = cert.as_labeling().unwrap();
            assert!(is_valid(&cycle(3), f, Variant::Rdrd));
            assert_eq!(weight(f), 3);
        }
    }

    #[test]
    fn lexicographic_first_certificate() {
        // All optima are enumerated in lexicographic order and the plain
        // solve returns the first of them.
        let (r, optima) = brute_force_enumerate(&path(4), Problem::RdrdMin, Limits::default()).unwrap();
        let single = brute_force(&path(4), Problem::RdrdMin).unwrap();
        assert_eq!(
            single.certificate.unwrap().as_labeling().unwrap(),
            optima[0].as_labeling().unwrap()
        );
        let mut sorted = optima
            .iter()
            .map(|c| c.as_labeling().unwrap().labels().to_vec())
            .collect::<Vec<_>>();
        let original = sorted.clone();
        sorted.sort();
        assert_eq!(sorted, original);
        assert_eq!(r.optimum_count, Some(original.len() as u64));
    }

    #[test]
    fn bnb_matches_brute_on_families() {
        let mut graphs = vec![
            path(1), path(2), path(5), path(8),
            cycle(3), cycle(5), cycle(9),
            complete(2), complete(6),
            build_family(FamilySpec::Star { n: 5 }).unwrap(),
            build_family(FamilySpec::CompleteBipartite { p: 2, q: 3 }).unwrap(),
            build_family(FamilySpec::WoundedSpider { n: 3, t: 2 }).unwrap(),
            build_family(FamilySpec::Empty { n: 3 }).unwrap(),
        ];
        let (c3xc3, _) = products::cardinal_product(&cycle(3), &cycle(3)).unwrap();
        graphs.push(c3xc3);
        for g in &graphs {
            let expect = brute_force(g, Problem::RdrdMin).unwrap().value;
            let got = solve_rdrd_bnb(g, &BnbOpts::default()).unwrap();
            assert_eq!(got.value, expect, "order {}", g.order());
            assert!(got.proven_optimal);
            let f = got.certificate.unwrap();
            let f = f.as_labeling().unwrap();
            assert!(is_valid(g, f, Variant::Rdrd));
            assert_eq!(weight(f), expect);
        }
    }

    #[test]
    fn bnb_matches_brute_on_random_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for trial in 0..40 {
            let n = rand::Rng::gen_range(&mut rng, 1..=9);
            let g = crate::graph::random_connected(n, 0.3, &mut rng);
            let expect = brute_force(&g, Problem::RdrdMin).unwrap().value;
            let got = solve_rdrd_bnb(&g, &BnbOpts::default()).unwrap().value;
            assert_eq!(got, expect, "trial {trial}, n {n}");
        }
    }

    #[test]
    fn bnb_nodes_reproducible_single_thread() {
        let g = cycle(8);
        let a = solve_rdrd_bnb(&g, &BnbOpts::default()).unwrap();
        let b = solve_rdrd_bnb(&g, &BnbOpts::default()).unwrap();
        assert_eq!(a.nodes_explored, b.nodes_explored);
        assert_eq!(a.value, b.value);
    }

    #[test]
    fn bnb_parallel_same_value() {
        let (g, _) = products::cardinal_product(&cycle(3), &cycle(4)).unwrap();
        let serial = solve_rdrd_bnb(&g, &BnbOpts::default()).unwrap();
        let parallel = solve_rdrd_bnb(&g, &BnbOpts { threads: 4, ..Default::default() }).unwrap();
        assert_eq!(serial.value, parallel.value);
        assert_eq!(serial.value, 8);
        assert!(parallel.proven_optimal);
        let f = parallel.certificate.unwrap();
        assert!(is_valid(&g, f.as_labeling().unwrap(), Variant::Rdrd));
    }

    #[test]
    fn bnb_disconnected_sums_components() {
        // Two isolated vertices plus a P4: 2 + 2 + 6.
        let g = Graph::from_edges(6, &[(2, 3), (3, 4), (4, 5)]).unwrap();
        let r = solve_rdrd_bnb(&g, &BnbOpts::default()).unwrap();
        assert_eq!(r.value, 10);
        let f = r.certificate.unwrap();
        let f = f.as_labeling().unwrap();
        assert!(is_valid(&g, f, Variant::Rdrd));
        assert_eq!(f.get(0), 2);
        assert_eq!(f.get(1), 2);
    }

    #[test]
    fn bnb_budget_proves_infeasibility() {
        // gamma_rdR(P4) = 6; budget 5 must prove there is nothing at or
        // below 5 and return the bound 6 without a certificate.
        let r = solve_rdrd_bnb(&path(4), &BnbOpts { budget: Some(5), ..Default::default() }).unwrap();
        assert!(r.proven_optimal);
        assert!(r.certificate.is_none());
        assert_eq!(r.value, 6);
        // A budget at the optimum finds the optimum.
        let r = solve_rdrd_bnb(&path(4), &BnbOpts { budget: Some(6), ..Default::default() }).unwrap();
        assert_eq!(r.value, 6);
        assert!(r.certificate.is_some());
    }

    #[test]
    fn relabeling_invariance() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..10 {
            let n = rand::Rng::gen_range(&mut rng, 2..=8);
            let g = crate::graph::random_connected(n, 0.4, &mut rng);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.induced_relabel(&perm);
            assert_eq!(
                brute_force(&g, Problem::RdrdMin).unwrap().value,
                brute_force(&h, Problem::RdrdMin).unwrap().value
            );
        }
    }

    #[test]
    fn empty_graph_is_trivial() {
        let g = Graph::empty(0);
        for p in [Problem::RdrdMin, Problem::DrdMin, Problem::DomMin, Problem::TwopackMax] {
            let r = brute_force(&g, p).unwrap();
            assert_eq!(r.value, 0);
        }
        assert_eq!(solve_rdrd_bnb(&g, &BnbOpts::default()).unwrap().value, 0);
    }

    #[test]
    fn isolated_vertices_cost_two_each() {
        let g = Graph::empty(3);
        assert_eq!(rdrd_value(&g), 6);
        assert_eq!(solve_rdrd_bnb(&g, &BnbOpts::default()).unwrap().value, 6);
    }
}

//! Exhaustive searches behind `brute_force`.
//!
//! Labeling problems walk the 4^n assignment tree in vertex-index order.
//! A vertex's rule is checked exactly once, at the moment the last label in
//! its closed neighborhood is placed; a prefix is abandoned only when such a
//! finalized vertex fails or the partial weight exceeds the bound, both of
//! which kill every completion, so the traversal is an exact enumeration.

use std::time::Instant;

use crate::graph::Graph;
use crate::labeling::Labeling;

use super::{Limits, Problem, SolutionCertificate, SolveResult, SolverError};

pub(super) fn run(
    g: &Graph,
    problem: Problem,
    limits: Limits,
    enumerate: bool,
) -> Result<(SolveResult, Vec<SolutionCertificate>), SolverError> {
    let n = g.order();
    let started = Instant::now();
    let (limit, kind) = if problem.is_label_problem() {
        (limits.label_max_n, "labeling")
    } else {
        (limits.set_max_n, "set")
    };
    if n > limit {
        return Err(SolverError::TooLarge {
            n,
            limit,
            problem: kind,
        });
    }
    let mut out = match problem {
        Problem::RdrdMin => label_search(g, true, enumerate),
        Problem::DrdMin => label_search(g, false, enumerate),
        Problem::DomMin => dom_search(g, enumerate),
        Problem::TwopackMax => twopack_search(g, enumerate),
    };
    out.0.elapsed = started.elapsed();
    Ok(out)
}

struct LabelDfs<'a> {
    g: &'a Graph,
    restrained: bool,
    /// finalize_at[i]: vertices whose closed neighborhood completes when
    /// vertex i receives its label.
    finalize_at: Vec<Vec<usize>>,
    labels: Vec<u8>,
    nodes: u64,
}

impl<'a> LabelDfs<'a> {
    fn new(g: &'a Graph, restrained: bool) -> Self {
        let n = g.order();
        let mut finalize_at = vec![Vec::new(); n];
        for u in 0..n {
            let last = g.neighbors(u).iter().copied().max().unwrap_or(0).max(u);
            finalize_at[last].push(u);
        }
        LabelDfs {
            g,
            restrained,
            finalize_at,
            labels: vec![0; n],
            nodes: 0,
        }
    }

    fn vertex_ok(&self, u: usize) -> bool {
        match self.labels[u] {
            0 => {
                let mut twos = 0;
                let mut has_three = false;
                let mut has_zero = false;
                for &w in self.g.neighbors(u) {
                    match self.labels[w] {
                        0 => has_zero = true,
                        2 => twos += 1,
                        3 => has_three = true,
                        _ => {}
                    }
                }
                (has_three || twos >= 2) && (!self.restrained || has_zero)
            }
            1 => self.g.neighbors(u).iter().any(|&w| self.labels[w] >= 2),
            _ => true,
        }
    }

    /// Minimize: leave `best` at the optimum. Prunes prefixes with weight
    /// already >= best, so the incumbent must start at a weight witnessed by
    /// a feasible labeling (all-2s) or one above a trivial upper bound.
    fn find_min(&mut self, depth: usize, weight: u32, best: &mut u32) {
        if weight >= *best {
            return;
        }
        if depth == self.labels.len() {
            *best = weight;
            return;
        }
        for label in 0..4u8 {
            self.nodes += 1;
            self.labels[depth] = label;
            if self.finalize_at[depth].iter().all(|&u| self.vertex_ok(u)) {
                self.find_min(depth + 1, weight + label as u32, best);
            }
        }
    }

    /// Visit every feasible labeling of weight exactly `target`, in
    /// lexicographic order.
    fn collect(&mut self, depth: usize, weight: u32, target: u32, sink: &mut dyn FnMut(&[u8]) -> bool) -> bool {
        if weight > target {
            return true;
        }
        if depth == self.labels.len() {
            if weight == target {
                return sink(&self.labels);
            }
            return true;
        }
        for label in 0..4u8 {
            self.nodes += 1;
            self.labels[depth] = label;
            if self.finalize_at[depth].iter().all(|&u| self.vertex_ok(u)) {
                if !self.collect(depth + 1, weight + label as u32, target, sink) {
                    return false;
                }
            }
        }
        true
    }
}

fn label_search(g: &Graph, restrained: bool, enumerate: bool) -> (SolveResult, Vec<SolutionCertificate>) {
    let n = g.order();
    if n == 0 {
        let result = SolveResult {
            value: 0,
            certificate: Some(SolutionCertificate::Labeling(Labeling::constant(0, 0))),
            proven_optimal: true,
            nodes_explored: 0,
            elapsed: Default::default(),
            optimum_count: if enumerate { Some(1) } else { None },
        };
        let optima = vec![SolutionCertificate::Labeling(Labeling::constant(0, 0))];
        return (result, optima);
    }
    let mut dfs = LabelDfs::new(g, restrained);
    // All-2s is feasible for both variants, so 2n is a witnessed incumbent.
    let mut best = 2 * n as u32;
    dfs.find_min(0, 0, &mut best);

    let mut optima: Vec<SolutionCertificate> = Vec::new();
    let mut count = 0u64;
    dfs.collect(0, 0, best, &mut |labels| {
        count += 1;
        if enumerate || count == 1 {
            optima.push(SolutionCertificate::Labeling(
                Labeling::new(labels.to_vec()).expect("search labels in range"),
            ));
        }
        // The sink's return decides whether to keep searching; without
        // enumeration the first (lexicographically smallest) optimum is enough.
        enumerate
    });
    let first = optima.first().cloned();
    let result = SolveResult {
        value: best,
        certificate: first,
        proven_optimal: true,
        nodes_explored: dfs.nodes,
        elapsed: Default::default(),
        optimum_count: if enumerate { Some(count) } else { None },
    };
    (result, optima)
}

fn neighborhood_masks(g: &Graph, closed: bool) -> Vec<u64> {
    let n = g.order();
    let mut masks = vec![0u64; n];
    for v in 0..n {
        let mut m = if closed { 1u64 << v } else { 0 };
        for &u in g.neighbors(v) {
            m |= 1u64 << u;
        }
        masks[v] = m;
    }
    masks
}

/// Minimum dominating set: staged search over sizes, combinations in
/// lexicographic order, so the first hit is the lexicographically first
/// minimum dominating set.
fn dom_search(g: &Graph, enumerate: bool) -> (SolveResult, Vec<SolutionCertificate>) {
    let n = g.order();
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let closed = neighborhood_masks(g, true);
    // suffix_cover[i] = union of closed neighborhoods of vertices i..n
    let mut suffix_cover = vec![0u64; n + 1];
    for i in (0..n).rev() {
        suffix_cover[i] = suffix_cover[i + 1] | closed[i];
    }
    let mut nodes = 0u64;

    fn rec(
        n: usize,
        k: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        covered: u64,
        full: u64,
        closed: &[u64],
        suffix: &[u64],
        nodes: &mut u64,
        sink: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == k {
            if covered == full {
                return sink(chosen);
            }
            return true;
        }
        let slots = k - chosen.len();
        for v in start..=(n - slots) {
            *nodes += 1;
            if covered | suffix[v] != full {
                // even taking everything from v on cannot cover
                break;
            }
            chosen.push(v);
            let go_on = rec(n, k, v + 1, chosen, covered | closed[v], full, closed, suffix, nodes, sink);
            chosen.pop();
            if !go_on {
                return false;
            }
        }
        true
    }

    for k in 0..=n {
        let mut optima = Vec::new();
        let mut count = 0u64;
        let mut chosen = Vec::new();
        rec(n, k, 0, &mut chosen, 0, full, &closed, &suffix_cover, &mut nodes, &mut |set| {
            count += 1;
            if enumerate || count == 1 {
                optima.push(SolutionCertificate::VertexSet(set.to_vec()));
            }
            enumerate
        });
        if count > 0 {
            let result = SolveResult {
                value: k as u32,
                certificate: optima.first().cloned(),
                proven_optimal: true,
                nodes_explored: nodes,
                elapsed: Default::default(),
                optimum_count: if enumerate { Some(count) } else { None },
            };
            return (result, optima);
        }
    }
    unreachable!("the full vertex set always dominates");
}

/// Maximum 2-packing: include-first subset search with conflict masks over
/// the distance-2 balls, so the first optimum is lexicographically first.
fn twopack_search(g: &Graph, enumerate: bool) -> (SolveResult, Vec<SolutionCertificate>) {
    let n = g.order();
    // ball2[v]: vertices at distance 1 or 2 from v
    let mut ball2 = vec![0u64; n];
    for v in 0..n {
        let mut m = 0u64;
        for &u in g.neighbors(v) {
            m |= 1u64 << u;
            for &w in g.neighbors(u) {
                if w != v {
                    m |= 1u64 << w;
                }
            }
        }
        ball2[v] = m;
    }
    let mut nodes = 0u64;
    let mut best: Option<usize> = None;
    let mut optima: Vec<SolutionCertificate> = Vec::new();
    let mut count = 0u64;

    // Two passes share this DFS: first find the maximum size, then collect.
    fn rec(
        v: usize,
        n: usize,
        chosen: &mut Vec<usize>,
        chosen_mask: u64,
        ball2: &[u64],
        nodes: &mut u64,
        target: Option<usize>,
        best: &mut Option<usize>,
        found: &mut dyn FnMut(&[usize]),
    ) {
        match target {
            // Searching for the maximum: prune when even taking all
            // remaining vertices cannot strictly improve.
            None => {
                if let Some(b) = *best {
                    if chosen.len() + (n - v) <= b {
                        return;
                    }
                }
            }
            Some(t) => {
                if chosen.len() + (n - v) < t {
                    return;
                }
            }
        }
        if v == n {
            match target {
                None => {
                    if best.map_or(true, |b| chosen.len() > b) {
                        *best = Some(chosen.len());
                    }
                }
                Some(t) => {
                    if chosen.len() == t {
                        found(chosen);
                    }
                }
            }
            return;
        }
        *nodes += 1;
        if ball2[v] & chosen_mask == 0 {
            chosen.push(v);
            rec(v + 1, n, chosen, chosen_mask | (1 << v), ball2, nodes, target, best, found);
            chosen.pop();
        }
        rec(v + 1, n, chosen, chosen_mask, ball2, nodes, target, best, found);
    }

    let mut chosen = Vec::new();
    rec(0, n, &mut chosen, 0, &ball2, &mut nodes, None, &mut best, &mut |_| {});
    let value = best.unwrap_or(0);
    let mut sink = |set: &[usize]| {
        count += 1;
        if enumerate || count == 1 {
            optima.push(SolutionCertificate::VertexSet(set.to_vec()));
        }
    };
    let mut chosen = Vec::new();
    let mut dummy = None;
    rec(0, n, &mut chosen, 0, &ball2, &mut nodes, Some(value), &mut dummy, &mut sink);

    let result = SolveResult {
        value: value as u32,
        certificate: optima.first().cloned(),
        proven_optimal: true,
        nodes_explored: nodes,
        elapsed: Default::default(),
        optimum_count: if enumerate { Some(count) } else { None },
    };
    (result, optima)
}

//! Branch and bound for the restrained double Roman domination number.
//!
//! Vertices are branched in descending-degree order (ties toward lower
//! index) with label choices tried as 3, 2, 0, 1; both orders are fixed so
//! single-threaded node counts are reproducible. A vertex's rule is checked
//! the moment its closed neighborhood is fully labeled, plus an early cutoff
//! when a 0-vertex can no longer reach a defender or a 0-neighbor. The
//! bounding function sums forced future weight over vertices with pairwise
//! disjoint witness sets, which never exceeds the true completion cost.
//!
//! Disconnected inputs are solved per component and summed. With `threads`
//! greater than one the tree is split at a shallow frontier and the
//! subtrees share an atomic incumbent; the returned value is identical to a
//! single-threaded run, the node count may differ.

use std::sync::atomic::{AtomicBool, AtomicU32, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use crate::graph::Graph;
use crate::labeling::Labeling;

use super::{SolutionCertificate, SolveResult, SolverError};

const UNASSIGNED: u8 = 4;
const LABEL_ORDER: [u8; 4] = [3, 2, 0, 1];

#[derive(Debug, Clone)]
pub struct BnbOpts {
    /// Wall-clock limit for the whole solve.
    pub timeout: Option<Duration>,
    /// Only look for labelings of weight at most this. When the completed
    /// search finds none, the result carries no certificate and its value
    /// `budget + 1` is a proven lower bound.
    pub budget: Option<u32>,
    /// Worker threads; 1 keeps the search fully deterministic.
    pub threads: usize,
}

impl Default for BnbOpts {
    fn default() -> Self {
        BnbOpts {
            timeout: None,
            budget: None,
            threads: 1,
        }
    }
}

pub fn solve_rdrd_bnb(g: &Graph, opts: &BnbOpts) -> Result<SolveResult, SolverError> {
    let started = Instant::now();
    let deadline = opts.timeout.map(|t| started + t);
    let n = g.order();
    if n == 0 {
        return Ok(SolveResult {
            value: 0,
            certificate: Some(SolutionCertificate::Labeling(Labeling::constant(0, 0))),
            proven_optimal: true,
            nodes_explored: 0,
            elapsed: started.elapsed(),
            optimum_count: None,
        });
    }
    let comps = g.components();
    let single = comps.len() == 1;
    let mut total = 0u32;
    let mut merged = vec![0u8; n];
    let mut have_cert = true;
    let mut proven = true;
    let mut nodes = 0u64;
    for comp in &comps {
        let sub = g.induced_subgraph(comp);
        if sub.order() > 64 {
            return Err(SolverError::ComponentTooLarge { n: sub.order() });
        }
        let budget = if single { opts.budget } else { None };
        let out = solve_component(&sub, budget, deadline, opts.threads.max(1));
        nodes += out.nodes;
        total = total.saturating_add(out.value);
        proven &= out.proven;
        match out.labels {
            Some(ls) => {
                for (i, &v) in comp.iter().enumerate() {
                    merged[v] = ls[i];
                }
            }
            None => have_cert = false,
        }
    }
    let certificate = if have_cert {
        Some(SolutionCertificate::Labeling(
            Labeling::new(merged).expect("search labels in range"),
        ))
    } else {
        None
    };
    Ok(SolveResult {
        value: total,
        certificate,
        proven_optimal: proven,
        nodes_explored: nodes,
        elapsed: started.elapsed(),
        optimum_count: None,
    })
}

struct CompOutcome {
    value: u32,
    proven: bool,
    labels: Option<Vec<u8>>,
    nodes: u64,
}

fn solve_component(
    sub: &Graph,
    budget: Option<u32>,
    deadline: Option<Instant>,
    threads: usize,
) -> CompOutcome {
    let n = sub.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(sub.degree(v)), v));
    let mut nb_mask = vec![0u64; n];
    for v in 0..n {
        for &u in sub.neighbors(v) {
            nb_mask[v] |= 1u64 << u;
        }
    }
    // All-2s is always feasible; it seeds the incumbent unless the budget
    // excludes it, in which case the search starts without one.
    let seed = 2 * n as u32;
    let seeded = budget.map_or(true, |b| seed <= b);
    let incumbent = AtomicU32::new(if seeded { seed } else { u32::MAX });
    let aborted = AtomicBool::new(false);

    let mut nodes = 0u64;
    let mut best: Option<(u32, Vec<u8>)> = None;

    if threads <= 1 || n < 6 {
        let mut search = CompSearch::new(sub, &order, &nb_mask, budget, deadline, &incumbent, &aborted);
        search.dfs(0);
        nodes += search.nodes;
        best = search.best;
    } else {
        let mut depth = 1usize;
        while depth < n.min(6) && 4usize.pow(depth as u32) < threads * 8 {
            depth += 1;
        }
        let mut expander =
            CompSearch::new(sub, &order, &nb_mask, budget, deadline, &incumbent, &aborted);
        let prefixes = expander.expand_frontier(depth);
        nodes += expander.nodes;
        let next = AtomicUsize::new(0);
        let results: Vec<(u64, Option<(u32, Vec<u8>)>)> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads.min(prefixes.len().max(1)))
                .map(|_| {
                    let prefixes = &prefixes;
                    let next = &next;
                    let order = &order;
                    let nb_mask = &nb_mask;
                    let incumbent = &incumbent;
                    let aborted = &aborted;
                    scope.spawn(move || {
                        let mut local_nodes = 0u64;
                        let mut local_best: Option<(u32, Vec<u8>)> = None;
                        loop {
                            let idx = next.fetch_add(1, Ordering::Relaxed);
                            if idx >= prefixes.len() || aborted.load(Ordering::Relaxed) {
                                break;
                            }
                            let mut search = CompSearch::new(
                                sub, order, nb_mask, budget, deadline, incumbent, aborted,
                            );
                            let mut alive = true;
                            for (pos, &label) in prefixes[idx].iter().enumerate() {
                                search.nodes += 1;
                                if !search.apply(order[pos], label) || search.bound_prune() {
                                    alive = false;
                                    break;
                                }
                            }
                            if alive {
                                search.dfs(prefixes[idx].len());
                            }
                            local_nodes += search.nodes;
                            if let Some((w, ls)) = search.best {
                                if local_best.as_ref().map_or(true, |(bw, _)| w < *bw) {
                                    local_best = Some((w, ls));
                                }
                            }
                        }
                        (local_nodes, local_best)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker")).collect()
        });
        for (worker_nodes, worker_best) in results {
            nodes += worker_nodes;
            if let Some((w, ls)) = worker_best {
                if best.as_ref().map_or(true, |(bw, _)| w < *bw) {
                    best = Some((w, ls));
                }
            }
        }
    }

    let proven = !aborted.load(Ordering::Relaxed);
    let final_value = incumbent.load(Ordering::Relaxed);
    if final_value == u32::MAX {
        // Budget mode and nothing within budget: the bound is proven only if
        // the search ran to completion.
        return CompOutcome {
            value: budget.expect("sentinel incumbent only in budget mode") + 1,
            proven,
            labels: None,
            nodes,
        };
    }
    let labels = match best {
        Some((w, ls)) if w == final_value => Some(ls),
        _ => Some(vec![2u8; n]),
    };
    CompOutcome {
        value: final_value,
        proven,
        labels,
        nodes,
    }
}

struct CompSearch<'a> {
    g: &'a Graph,
    n: usize,
    order: &'a [usize],
    nb_mask: &'a [u64],
    label: Vec<u8>,
    cnt0: Vec<u16>,
    cnt2: Vec<u16>,
    cnt3: Vec<u16>,
    un_nb: Vec<u16>,
    unassigned: u64,
    weight: u32,
    nodes: u64,
    budget: Option<u32>,
    deadline: Option<Instant>,
    incumbent: &'a AtomicU32,
    aborted: &'a AtomicBool,
    best: Option<(u32, Vec<u8>)>,
}

impl<'a> CompSearch<'a> {
    #[allow(clippy::too_many_arguments)]
    fn new(
        g: &'a Graph,
        order: &'a [usize],
        nb_mask: &'a [u64],
        budget: Option<u32>,
        deadline: Option<Instant>,
        incumbent: &'a AtomicU32,
        aborted: &'a AtomicBool,
    ) -> Self {
        let n = g.order();
        let un_nb: Vec<u16> = (0..n).map(|v| g.degree(v) as u16).collect();
        CompSearch {
            g,
            n,
            order,
            nb_mask,
            label: vec![UNASSIGNED; n],
            cnt0: vec![0; n],
            cnt2: vec![0; n],
            cnt3: vec![0; n],
            un_nb,
            unassigned: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
            weight: 0,
            nodes: 0,
            budget,
            deadline,
            incumbent,
            aborted,
            best: None,
        }
    }

    fn full_check(&self, u: usize) -> bool {
        match self.label[u] {
            0 => (self.cnt3[u] >= 1 || self.cnt2[u] >= 2) && self.cnt0[u] >= 1,
            1 => self.cnt2[u] + self.cnt3[u] >= 1,
            _ => true,
        }
    }

    /// Place label `l` on `v`, updating counts; returns false when some
    /// vertex provably cannot be satisfied anymore. The caller must call
    /// `revert` regardless of the outcome.
    fn apply(&mut self, v: usize, l: u8) -> bool {
        self.label[v] = l;
        self.unassigned &= !(1u64 << v);
        self.weight += l as u32;
        for &u in self.g.neighbors(v) {
            self.un_nb[u] -= 1;
            match l {
                0 => self.cnt0[u] += 1,
                2 => self.cnt2[u] += 1,
                3 => self.cnt3[u] += 1,
                _ => {}
            }
        }
        // A rule can be judged exactly once the closed neighborhood is fully
        // labeled; before that a single future neighbor might still defend
        // (label 3) or unblock the restraint (label 0), so no earlier cutoff
        // is sound. The bounding function prices those forced completions.
        if self.un_nb[v] == 0 && !self.full_check(v) {
            return false;
        }
        for &u in self.g.neighbors(v) {
            if self.label[u] != UNASSIGNED && self.un_nb[u] == 0 && !self.full_check(u) {
                return false;
            }
        }
        true
    }

    fn revert(&mut self, v: usize, l: u8) {
        for &u in self.g.neighbors(v) {
            self.un_nb[u] += 1;
            match l {
                0 => self.cnt0[u] -= 1,
                2 => self.cnt2[u] -= 1,
                3 => self.cnt3[u] -= 1,
                _ => {}
            }
        }
        self.weight -= l as u32;
        self.unassigned |= 1u64 << v;
        self.label[v] = UNASSIGNED;
    }

    /// Forced future weight, summed over vertices whose witness sets (the
    /// unassigned part of their neighborhoods, plus the vertex itself when
    /// unassigned) are pairwise disjoint. Every term is a valid lower bound
    /// on the weight that must land in its witness set, so the sum never
    /// exceeds the cost of any feasible completion.
    fn lower_bound(&self) -> u32 {
        let mut used = 0u64;
        let mut lb = 0u32;
        for v in 0..self.n {
            let open = self.nb_mask[v] & self.unassigned;
            let (cost, witness) = if self.label[v] == UNASSIGNED {
                if self.cnt3[v] >= 1 || self.cnt2[v] >= 2 {
                    continue;
                }
                let cost = if self.cnt2[v] == 1 { 1 } else { 2 };
                (cost, open | (1u64 << v))
            } else {
                match self.label[v] {
                    0 if self.cnt3[v] == 0 && self.cnt2[v] < 2 => {
                        (if self.cnt2[v] == 1 { 2 } else { 3 }, open)
                    }
                    1 if self.cnt2[v] == 0 && self.cnt3[v] == 0 => (2, open),
                    _ => continue,
                }
            };
            if witness != 0 && witness & used == 0 {
                used |= witness;
                lb += cost;
            }
        }
        lb
    }

    fn allowed(&self) -> u32 {
        let inc = self.incumbent.load(Ordering::Relaxed);
        let mut allowed = if inc == u32::MAX { u32::MAX } else { inc - 1 };
        if let Some(b) = self.budget {
            allowed = allowed.min(b);
        }
        allowed
    }

    fn bound_prune(&self) -> bool {
        let allowed = self.allowed();
        if allowed == u32::MAX {
            return false;
        }
        self.weight > allowed || self.weight + self.lower_bound() > allowed
    }

    fn tick(&mut self) {
        self.nodes += 1;
        if self.nodes & 0xFFF == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.aborted.store(true, Ordering::Relaxed);
                }
            }
        }
    }

    fn offer(&mut self) {
        let w = self.weight;
        let mut cur = self.incumbent.load(Ordering::Relaxed);
        while w < cur {
            match self
                .incumbent
                .compare_exchange(cur, w, Ordering::Relaxed, Ordering::Relaxed)
            {
                Ok(_) => {
                    self.best = Some((w, self.label.clone()));
                    return;
                }
                Err(actual) => cur = actual,
            }
        }
    }

    fn dfs(&mut self, depth: usize) {
        if self.aborted.load(Ordering::Relaxed) {
            return;
        }
        if depth == self.n {
            self.offer();
            return;
        }
        let v = self.order[depth];
        for &l in &LABEL_ORDER {
            self.tick();
            let feasible = self.apply(v, l);
            if feasible && !self.bound_prune() {
                self.dfs(depth + 1);
            }
            self.revert(v, l);
            if self.aborted.load(Ordering::Relaxed) {
                return;
            }
        }
    }

    /// Collect the feasible label prefixes at `depth` for parallel workers.
    fn expand_frontier(&mut self, depth: usize) -> Vec<Vec<u8>> {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(depth);
        self.expand_rec(0, depth, &mut prefix, &mut out);
        out
    }

    fn expand_rec(&mut self, pos: usize, depth: usize, prefix: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if pos == depth {
            out.push(prefix.clone());
            return;
        }
        let v = self.order[pos];
        for &l in &LABEL_ORDER {
            self.tick();
            let feasible = self.apply(v, l);
            if feasible && !self.bound_prune() {
                prefix.push(l);
                self.expand_rec(pos + 1, depth, prefix, out);
                prefix.pop();
            }
            self.revert(v, l);
        }
    }
}

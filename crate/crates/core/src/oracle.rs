//! Brute-force backtracking search for change-`h` Hamiltonian cycles at
//! small `k`. Shares nothing with the constructor beyond the vertex model,
//! so it serves as independent ground truth.
//!
//! The search is anchored at the origin and visits neighbors in a fixed
//! order (ascending numeric encoding by default). Three sound prunings are
//! applied at every node:
//!
//! * degree: an unvisited vertex needs two cycle neighbors, each of which is
//!   unvisited, the current head, or the anchor;
//! * forcing: an unvisited neighbor of the head with only two options left
//!   must be visited next, and at most one vertex may be left depending on
//!   the anchor;
//! * reachability: every unvisited vertex must be reachable from the head
//!   through unvisited vertices.
//!
//! The top-level branches (choice of second vertex) can run in parallel.
//! `exists`, `count`, the witness and `nodes_explored` are the same for any
//! thread count: the witness is the one found first in branch order and
//! `nodes_explored` only counts branches up to and including that one.

use std::collections::VecDeque;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hypercube::{hamming_bits, Dimension, StepClass};
use crate::path::VertexPath;

/// Largest dimension accepted by [`oracle_exists`].
pub const ORACLE_K_MAX: u32 = 12;
/// Largest dimension accepted by [`oracle_count`].
pub const COUNT_K_MAX: u32 = 5;

/// Reachability checks are skipped once `remaining * degree` exceeds this,
/// except at the root.
const REACH_BUDGET: u64 = 1 << 17;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NeighborOrder {
    #[default]
    Ascending,
    Descending,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Worker threads for the top-level branches; 1 runs inline.
    pub threads: usize,
    pub order: NeighborOrder,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            threads: 1,
            order: NeighborOrder::Ascending,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub exists: bool,
    /// Undirected cycles: start at the origin, second vertex smaller than
    /// the last one.
    pub count: Option<u64>,
    pub nodes_explored: u64,
    pub witness: Option<VertexPath>,
}

pub fn oracle_exists(k: Dimension, h: StepClass, want_witness: bool) -> Result<OracleResult> {
    oracle_exists_with(k, h, want_witness, &OracleConfig::default())
}

pub fn oracle_exists_with(
    k: Dimension,
    h: StepClass,
    want_witness: bool,
    config: &OracleConfig,
) -> Result<OracleResult> {
    if k.k() > ORACLE_K_MAX {
        return Err(Error::Capacity {
            k: k.k(),
            max: ORACLE_K_MAX,
            reason: "exhaustive existence search is limited to small cubes",
        });
    }
    let graph = StepGraph::new(k, h, config.order);
    let outcome = run(&graph, Mode::Exists, config)?;
    let exists = outcome.witness.is_some();
    let witness = match outcome.witness {
        Some(words) if want_witness => Some(VertexPath::new(k, words)?),
        _ => None,
    };
    Ok(OracleResult {
        exists,
        count: None,
        nodes_explored: outcome.nodes,
        witness,
    })
}

pub fn oracle_count(k: Dimension, h: StepClass) -> Result<OracleResult> {
    oracle_count_with(k, h, &OracleConfig::default())
}

pub fn oracle_count_with(
    k: Dimension,
    h: StepClass,
    config: &OracleConfig,
) -> Result<OracleResult> {
    if k.k() > COUNT_K_MAX {
        return Err(Error::Capacity {
            k: k.k(),
            max: COUNT_K_MAX,
            reason: "full cycle enumeration is limited to tiny cubes",
        });
    }
    let graph = StepGraph::new(k, h, config.order);
    let outcome = run(&graph, Mode::Count, config)?;
    Ok(OracleResult {
        exists: outcome.count > 0,
        count: Some(outcome.count),
        nodes_explored: outcome.nodes,
        witness: None,
    })
}

/// The change-`h` graph on `{0,1}^k` with a flat, fixed-degree adjacency.
struct StepGraph {
    n: usize,
    h: u64,
    degree: usize,
    adj: Vec<u32>,
}

impl StepGraph {
    fn new(k: Dimension, h: StepClass, order: NeighborOrder) -> Self {
        let n = k.vertex_count() as usize;
        let masks: Vec<u32> = (0..n as u32)
            .filter(|m| u64::from(m.count_ones()) == h.h())
            .collect();
        let degree = masks.len();
        let mut adj = Vec::with_capacity(n * degree);
        for v in 0..n as u32 {
            let start = adj.len();
            adj.extend(masks.iter().map(|m| v ^ m));
            let row = &mut adj[start..];
            row.sort_unstable();
            if order == NeighborOrder::Descending {
                row.reverse();
            }
        }
        StepGraph {
            n,
            h: h.h(),
            degree,
            adj,
        }
    }

    #[inline]
    fn neighbors(&self, v: u32) -> &[u32] {
        let s = v as usize * self.degree;
        &self.adj[s..s + self.degree]
    }

    #[inline]
    fn adjacent(&self, a: u32, b: u32) -> bool {
        u64::from(hamming_bits(u64::from(a), u64::from(b))) == self.h
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    Exists,
    Count,
}

struct Outcome {
    witness: Option<Vec<u64>>,
    count: u64,
    nodes: u64,
}

const ANCHOR: u32 = 0;

#[derive(Clone)]
struct Search<'g> {
    graph: &'g StepGraph,
    mode: Mode,
    visited: Vec<bool>,
    /// Unvisited neighbors of each vertex.
    free_degree: Vec<u32>,
    path: Vec<u32>,
    nodes: u64,
    count: u64,
    found: Option<Vec<u64>>,
    // scratch for reachability
    mark: Vec<u32>,
    epoch: u32,
    queue: VecDeque<u32>,
}

impl<'g> Search<'g> {
    fn new(graph: &'g StepGraph, mode: Mode) -> Self {
        Search {
            graph,
            mode,
            visited: vec![false; graph.n],
            free_degree: vec![graph.degree as u32; graph.n],
            path: Vec::with_capacity(graph.n),
            nodes: 0,
            count: 0,
            found: None,
            mark: vec![0; graph.n],
            epoch: 0,
            queue: VecDeque::new(),
        }
    }

    fn visit(&mut self, v: u32) {
        self.visited[v as usize] = true;
        for &w in self.graph.neighbors(v) {
            self.free_degree[w as usize] -= 1;
        }
        self.path.push(v);
        self.nodes += 1;
    }

    fn unvisit(&mut self, v: u32) {
        self.path.pop();
        for &w in self.graph.neighbors(v) {
            self.free_degree[w as usize] += 1;
        }
        self.visited[v as usize] = false;
    }

    fn remaining(&self) -> usize {
        self.graph.n - self.path.len()
    }

    /// Cycle neighbors still available to unvisited `w` given head `head`.
    fn available(&self, w: u32, head: u32) -> u32 {
        let g = self.graph;
        let mut a = self.free_degree[w as usize];
        if g.adjacent(w, head) {
            a += 1;
        }
        if head != ANCHOR && g.adjacent(w, ANCHOR) {
            a += 1;
        }
        a
    }

    fn root_is_dead(&mut self) -> bool {
        if self.graph.n < 3 {
            return true;
        }
        let dead = (0..self.graph.n as u32)
            .filter(|&w| !self.visited[w as usize])
            .any(|w| self.available(w, ANCHOR) < 2);
        dead || !self.all_reachable_from(ANCHOR)
    }

    /// Prune test after the head moved from `prev` to `head`.
    fn is_dead(&mut self, prev: u32, head: u32) -> bool {
        if self.remaining() == 0 {
            return false;
        }
        if self.free_degree[ANCHOR as usize] == 0 {
            return true;
        }
        let g = self.graph;
        for &src in &[head, prev] {
            for &w in g.neighbors(src) {
                if !self.visited[w as usize] && self.available(w, head) < 2 {
                    return true;
                }
            }
        }
        let work = self.remaining() as u64 * g.degree as u64;
        work <= REACH_BUDGET && !self.all_reachable_from(head)
    }

    fn all_reachable_from(&mut self, head: u32) -> bool {
        self.epoch += 1;
        let epoch = self.epoch;
        self.queue.clear();
        self.queue.push_back(head);
        self.mark[head as usize] = epoch;
        let mut reached = 0usize;
        while let Some(v) = self.queue.pop_front() {
            for &w in self.graph.neighbors(v) {
                let wi = w as usize;
                if !self.visited[wi] && self.mark[wi] != epoch {
                    self.mark[wi] = epoch;
                    reached += 1;
                    self.queue.push_back(w);
                }
            }
        }
        reached == self.remaining()
    }

    /// An unvisited neighbor of the head with exactly two options left must
    /// use the head, so it has to come next. Likewise at most one vertex
    /// can depend on the anchor, and only as the final vertex.
    fn forced_successor(&self, head: u32) -> Forced {
        let g = self.graph;
        let mut forced = None;
        for &w in g.neighbors(head) {
            if self.visited[w as usize] || self.available(w, head) != 2 {
                continue;
            }
            let needs_anchor = g.adjacent(w, ANCHOR) && self.free_degree[w as usize] == 0;
            if needs_anchor && self.remaining() != 1 {
                return Forced::Dead;
            }
            if forced.replace(w).is_some() {
                return Forced::Dead;
            }
        }
        let mut anchor_bound = 0;
        for &w in g.neighbors(ANCHOR) {
            if !self.visited[w as usize] && self.available(w, head) == 2 && !g.adjacent(w, head) {
                anchor_bound += 1;
                if anchor_bound > 1 {
                    return Forced::Dead;
                }
            }
        }
        match forced {
            Some(w) => Forced::Only(w),
            None => Forced::Free,
        }
    }

    /// Returns true when the search should stop.
    fn descend(&mut self, head: u32, cancel: &dyn Fn() -> bool) -> bool {
        if self.remaining() == 0 {
            if self.graph.adjacent(head, ANCHOR) {
                match self.mode {
                    Mode::Exists => {
                        self.found = Some(self.path.iter().map(|&v| u64::from(v)).collect());
                        return true;
                    }
                    Mode::Count => {
                        if self.path[1] < head {
                            self.count += 1;
                        }
                    }
                }
            }
            return false;
        }
        if cancel() {
            return true;
        }
        let graph = self.graph;
        let forced = match self.forced_successor(head) {
            Forced::Dead => return false,
            Forced::Only(u) => Some(u),
            Forced::Free => None,
        };
        for &u in graph.neighbors(head) {
            if self.visited[u as usize] || forced.is_some_and(|f| f != u) {
                continue;
            }
            self.visit(u);
            let stop = !self.is_dead(head, u) && self.descend(u, cancel);
            self.unvisit(u);
            if stop {
                return true;
            }
        }
        false
    }
}

enum Forced {
    Dead,
    Only(u32),
    Free,
}

struct BranchResult {
    found: Option<Vec<u64>>,
    count: u64,
    nodes: u64,
}

fn run_branch(root: &Search<'_>, second: u32, cancel: &dyn Fn() -> bool) -> BranchResult {
    let mut s = root.clone();
    s.nodes = 0;
    s.visit(second);
    if !s.is_dead(ANCHOR, second) {
        s.descend(second, cancel);
    }
    BranchResult {
        found: s.found,
        count: s.count,
        nodes: s.nodes,
    }
}

fn run(graph: &StepGraph, mode: Mode, config: &OracleConfig) -> Result<Outcome> {
    let mut root = Search::new(graph, mode);
    root.visit(ANCHOR);
    if root.root_is_dead() {
        return Ok(Outcome {
            witness: None,
            count: 0,
            nodes: root.nodes,
        });
    }
    let branches: Vec<u32> = graph.neighbors(ANCHOR).to_vec();

    let results: Vec<Option<BranchResult>> = if config.threads <= 1 {
        let mut out = Vec::with_capacity(branches.len());
        for &b in &branches {
            let r = run_branch(&root, b, &|| false);
            let done = mode == Mode::Exists && r.found.is_some();
            out.push(Some(r));
            if done {
                break;
            }
        }
        out
    } else {
        let winner = AtomicUsize::new(usize::MAX);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.threads)
            .stack_size(64 << 20)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
        pool.install(|| {
            branches
                .par_iter()
                .enumerate()
                .map(|(i, &b)| {
                    if mode == Mode::Exists && winner.load(Ordering::Relaxed) < i {
                        return None;
                    }
                    let cancel = || mode == Mode::Exists && winner.load(Ordering::Relaxed) < i;
                    let r = run_branch(&root, b, &cancel);
                    if r.found.is_some() {
                        winner.fetch_min(i, Ordering::Relaxed);
                    }
                    Some(r)
                })
                .collect()
        })
    };

    let mut outcome = Outcome {
        witness: None,
        count: 0,
        nodes: root.nodes,
    };
    for r in results {
        // Branches past the first success may have been cut short; they are
        // not part of the sequential search and are left out.
        let Some(r) = r else { break };
        outcome.nodes += r.nodes;
        outcome.count += r.count;
        if mode == Mode::Exists && r.found.is_some() {
            outcome.witness = r.found;
            break;
        }
    }
    Ok(outcome)
}

//! Maximal loop order of an MMP hypergraph.
//!
//! A loop of order m is a cyclic sequence of m >= 3 distinct edges where
//! consecutive edges share exactly one vertex (the junction), non-consecutive
//! edges share none, and the m junctions are pairwise distinct. The loop
//! order names follow polygon names: hexagon 6, octagon 8, nonagon 9,
//! decagon 10.
//!
//! The search is backtracking path extension over the edge-intersection
//! structure with the start fixed at the smallest edge index of the loop.
//! Once the tip edge meets the start edge the loop can only close there:
//! extending past it would leave an interior edge sharing a vertex with the
//! start, which the definition forbids.

use crate::mmp::{Hypergraph, VertexId};

/// A witness loop: the edge indices in cyclic order and the junction shared
/// by each consecutive pair (junction i joins edges i and i+1, wrapping).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    pub edges: Vec<usize>,
    pub junctions: Vec<VertexId>,
}

impl Loop {
    pub fn order(&self) -> usize {
        self.edges.len()
    }

    /// Recounts all loop invariants against the hypergraph.
    pub fn verify(&self, h: &Hypergraph) -> bool {
        let m = self.edges.len();
        if m < 3 || self.junctions.len() != m {
            return false;
        }
        let edges = h.edges();
        if self.edges.iter().any(|&e| e >= edges.len()) {
            return false;
        }
        let mut distinct = self.edges.clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != m {
            return false;
        }
        for i in 0..m {
            for j in i + 1..m {
                let shared = edges[self.edges[i]].shared_with(&edges[self.edges[j]]);
                let consecutive = j == i + 1 || (i == 0 && j == m - 1);
                if consecutive && shared != 1 {
                    return false;
                }
                if !consecutive && shared != 0 {
                    return false;
                }
            }
        }
        for i in 0..m {
            let a = edges[self.edges[i]];
            let b = edges[self.edges[(i + 1) % m]];
            let junction = self.junctions[i];
            if !a.contains(junction) || !b.contains(junction) {
                return false;
            }
        }
        let mut juncts = self.junctions.clone();
        juncts.sort_unstable();
        juncts.dedup();
        juncts.len() == m
    }
}

/// Search outcome with an explicit budget status: when the node budget runs
/// out the reported order is a lower bound, not the exact maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopSearch {
    pub order: usize,
    pub witness: Option<Loop>,
    pub complete: bool,
    pub nodes: u64,
}

/// Node budget that comfortably covers exact answers up to ~30 edges.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

struct LoopFinder<'a> {
    h: &'a Hypergraph,
    share: Vec<Vec<u8>>,
    best: Option<Loop>,
    nodes: u64,
    budget: u64,
}

impl<'a> LoopFinder<'a> {
    fn new(h: &'a Hypergraph, budget: u64) -> Self {
        let b = h.edge_count();
        let mut share = vec![vec![0u8; b]; b];
        for i in 0..b {
            for j in i + 1..b {
                let s = h.edges()[i].shared_with(&h.edges()[j]) as u8;
                share[i][j] = s;
                share[j][i] = s;
            }
        }
        LoopFinder {
            h,
            share,
            best: None,
            nodes: 0,
            budget,
        }
    }

    fn junction(&self, a: usize, b: usize) -> VertexId {
        let eb = &self.h.edges()[b];
        *self.h.edges()[a]
            .vertices()
            .iter()
            .find(|v| eb.contains(**v))
            .expect("edges share a vertex")
    }

    fn try_record(&mut self, path: &[usize]) {
        let m = path.len();
        if m < 3 {
            return;
        }
        if let Some(best) = &self.best {
            if m <= best.order() {
                return;
            }
        }
        let junctions: Vec<VertexId> = (0..m)
            .map(|i| self.junction(path[i], path[(i + 1) % m]))
            .collect();
        let candidate = Loop {
            edges: path.to_vec(),
            junctions,
        };
        if candidate.verify(self.h) {
            self.best = Some(candidate);
        }
    }

    fn extend(&mut self, path: &mut Vec<usize>, in_path: &mut Vec<bool>) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget {
            return false;
        }
        let last = *path.last().unwrap();
        let start = path[0];
        if path.len() >= 3 && self.share[last][start] == 1 {
            self.try_record(path);
            return true;
        }
        let b = self.h.edge_count();
        let m = path.len();
        let mut ok = true;
        for next in start + 1..b {
            if in_path[next] || self.share[last][next] != 1 {
                continue;
            }
            if self.share[next][start] > 1 {
                continue;
            }
            if m > 1 && path[1..m - 1].iter().any(|&p| self.share[p][next] != 0) {
                continue;
            }
            path.push(next);
            in_path[next] = true;
            ok &= self.extend(path, in_path);
            in_path[next] = false;
            path.pop();
            if !ok {
                return false;
            }
        }
        ok
    }

    fn run(mut self) -> LoopSearch {
        let b = self.h.edge_count();
        let mut complete = true;
        for start in 0..b {
            let mut path = vec![start];
            let mut in_path = vec![false; b];
            in_path[start] = true;
            complete &= self.extend(&mut path, &mut in_path);
            if !complete {
                break;
            }
        }
        LoopSearch {
            order: self.best.as_ref().map_or(0, |l| l.order()),
            witness: self.best,
            complete,
            nodes: self.nodes,
        }
    }
}

/// Exact search under an explicit node budget.
pub fn max_loop_with_budget(h: &Hypergraph, budget: u64) -> LoopSearch {
    LoopFinder::new(h, budget).run()
}

/// The largest loop order, or 0 when no loop exists. Exact for the block
/// counts this toolkit targets; see [`max_loop_with_budget`] for the bound.
pub fn max_loop_order(h: &Hypergraph) -> usize {
    max_loop_with_budget(h, DEFAULT_NODE_BUDGET).order
}

/// One maximal-order witness loop, verified before return.
pub fn find_max_loop(h: &Hypergraph) -> Option<Loop> {
    max_loop_with_budget(h, DEFAULT_NODE_BUDGET).witness
}

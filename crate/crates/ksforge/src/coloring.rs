//! 0/1 colorability — the defining test of a KS set.
//!
//! A total assignment is admissible when every edge has exactly one vertex
//! valued 1 and three valued 0. A hypergraph admitting no such assignment is
//! non-colorable, i.e. a KS set (given it is also vector-realizable).

use crate::mmp::Hypergraph;

/// A total 0/1 assignment, one value per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    values: Vec<bool>,
}

impl Coloring {
    pub fn values(&self) -> &[bool] {
        &self.values
    }

    /// Recounts the exactly-one-1 rule on every edge.
    pub fn is_admissible(&self, h: &Hypergraph) -> bool {
        if self.values.len() != h.vertex_count() {
            return false;
        }
        h.edges().iter().all(|e| {
            e.vertices()
                .iter()
                .filter(|v| self.values[v.index()])
                .count()
                == 1
        })
    }
}

const UNASSIGNED: i8 = -1;

struct Search<'a> {
    h: &'a Hypergraph,
    incident: Vec<Vec<usize>>,
    values: Vec<i8>,
}

impl<'a> Search<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        Search {
            h,
            incident: h.incidence(),
            values: vec![UNASSIGNED; h.vertex_count()],
        }
    }

    /// Sets `v` and propagates: an edge with a 1 zeroes its other vertices;
    /// an edge with three 0s forces the fourth to 1; four 0s or two 1s is a
    /// conflict. Returns false on conflict; assignments are logged to `trail`.
    fn assign(&mut self, v: usize, value: i8, trail: &mut Vec<usize>) -> bool {
        if self.values[v] != UNASSIGNED {
            return self.values[v] == value;
        }
        self.values[v] = value;
        trail.push(v);
        let mut queue = vec![v];
        while let Some(v) = queue.pop() {
            for &ei in &self.incident[v] {
                let edge = self.h.edges()[ei];
                let mut ones = 0;
                let mut zeros = 0;
                for u in edge.vertices() {
                    match self.values[u.index()] {
                        1 => ones += 1,
                        0 => zeros += 1,
                        _ => {}
                    }
                }
                if ones > 1 || zeros == 4 {
                    return false;
                }
                let force = if ones == 1 {
                    0
                } else if zeros == 3 {
                    1
                } else {
                    continue;
                };
                for u in edge.vertices() {
                    let ui = u.index();
                    if self.values[ui] == UNASSIGNED {
                        self.values[ui] = force;
                        trail.push(ui);
                        queue.push(ui);
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, trail: &[usize], from: usize) {
        for &v in &trail[from..] {
            self.values[v] = UNASSIGNED;
        }
    }

    /// Unassigned vertex occurring in the most edges that do not yet contain
    /// a 1. Ties break to the lowest index so witnesses are reproducible.
    fn branch_vertex(&self) -> Option<usize> {
        let mut best = None;
        let mut best_count = 0usize;
        for v in 0..self.values.len() {
            if self.values[v] != UNASSIGNED {
                continue;
            }
            let count = self.incident[v]
                .iter()
                .filter(|&&ei| {
                    !self.h.edges()[ei]
                        .vertices()
                        .iter()
                        .any(|u| self.values[u.index()] == 1)
                })
                .count();
            if best.is_none() || count > best_count {
                best = Some(v);
                best_count = count;
            }
        }
        best
    }

    fn solve(&mut self) -> bool {
        let v = match self.branch_vertex() {
            Some(v) => v,
            None => return true,
        };
        let mut trail = Vec::new();
        for value in [1, 0] {
            if self.assign(v, value, &mut trail) && self.solve() {
                return true;
            }
            self.undo(&trail, 0);
            trail.clear();
        }
        false
    }
}

/// Finds an admissible total coloring, or None when the hypergraph is
/// non-colorable. Deterministic: the same input always yields the same
/// witness.
pub fn find_coloring(h: &Hypergraph) -> Option<Coloring> {
    let mut search = Search::new(h);
    if !search.solve() {
        return None;
    }
    // vertices in no edge are unconstrained; give them 0
    let values = search.values.iter().map(|&v| v == 1).collect();
    let coloring = Coloring { values };
    debug_assert!(coloring.is_admissible(h));
    Some(coloring)
}

pub fn is_noncolorable(h: &Hypergraph) -> bool {
    find_coloring(h).is_none()
}

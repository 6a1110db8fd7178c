//! Parity proofs and the constructive search for N-T parity subsets.
//!
//! With an odd number of tetrads and every vertex of even degree, counting
//! the 1s of any admissible coloring gives an odd total edge-by-edge and an
//! even total vertex-by-vertex — so no coloring exists. The subset search
//! looks for T-edge subsets (T odd) in which every covered vertex has degree
//! exactly 2, the two-occurrence design whose covered-ray count satisfies
//! N = 2T.

use thiserror::Error;

use crate::mmp::{Hypergraph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParityError {
    #[error("T must be odd, got {0}")]
    EvenT(usize),
    #[error("T = {t} out of range for {b} edges")]
    TOutOfRange { t: usize, b: usize },
}

/// Outcome of the parity test. `holds` guarantees non-colorability.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityVerdict {
    pub holds: bool,
    pub edge_count_odd: bool,
    pub offending_vertices: Vec<VertexId>,
}

/// Checks the parity argument: edge count odd and no odd-degree vertex.
pub fn parity_proof(h: &Hypergraph) -> ParityVerdict {
    let edge_count_odd = h.edge_count() % 2 == 1;
    let offending_vertices: Vec<VertexId> = h
        .degrees()
        .iter()
        .enumerate()
        .filter(|(_, &d)| d % 2 == 1)
        .map(|(v, _)| VertexId::from(v))
        .collect();
    ParityVerdict {
        holds: edge_count_odd && offending_vertices.is_empty(),
        edge_count_odd,
        offending_vertices,
    }
}

/// All T-edge subsets of `h` in which every covered vertex has degree
/// exactly 2, as ascending edge-index lists in canonical lexicographic
/// order of discovery. Every solution covers exactly 2T vertices.
///
/// The search is saturation-driven: while some covered vertex has degree 1,
/// the next edge must pass through the first such vertex of the
/// lowest-indexed unsaturated edge, so branch over its partner edges; when
/// everything is saturated a fresh component starts, whose seed edge becomes
/// a floor below which no later edge may be chosen. Each qualifying subset
/// is generated exactly once.
pub fn parity_subset_search(h: &Hypergraph, t: usize) -> Result<Vec<Vec<usize>>, ParityError> {
    if t % 2 == 0 {
        return Err(ParityError::EvenT(t));
    }
    if t > h.edge_count() {
        return Err(ParityError::TOutOfRange {
            t,
            b: h.edge_count(),
        });
    }
    let mut search = SubsetSearch::new(h, t);
    search.start();
    Ok(search.results)
}

struct SubsetSearch<'a> {
    h: &'a Hypergraph,
    incident: Vec<Vec<usize>>,
    t: usize,
    degree: Vec<u8>,
    chosen: Vec<usize>,
    in_set: Vec<bool>,
    unsaturated: usize,
    results: Vec<Vec<usize>>,
}

impl<'a> SubsetSearch<'a> {
    fn new(h: &'a Hypergraph, t: usize) -> Self {
        SubsetSearch {
            h,
            incident: h.incidence(),
            t,
            degree: vec![0; h.vertex_count()],
            chosen: Vec::with_capacity(t),
            in_set: vec![false; h.edge_count()],
            unsaturated: 0,
            results: Vec::new(),
        }
    }

    fn add(&mut self, ei: usize) {
        self.in_set[ei] = true;
        self.chosen.push(ei);
        for v in self.h.edges()[ei].vertices() {
            let d = &mut self.degree[v.index()];
            *d += 1;
            match *d {
                1 => self.unsaturated += 1,
                2 => self.unsaturated -= 1,
                _ => unreachable!("compatibility check keeps degrees at 2"),
            }
        }
    }

    fn remove(&mut self, ei: usize) {
        self.in_set[ei] = false;
        self.chosen.pop();
        for v in self.h.edges()[ei].vertices() {
            let d = &mut self.degree[v.index()];
            match *d {
                1 => self.unsaturated -= 1,
                2 => self.unsaturated += 1,
                _ => {}
            }
            *d -= 1;
        }
    }

    fn compatible(&self, ei: usize) -> bool {
        self.h.edges()[ei]
            .vertices()
            .iter()
            .all(|v| self.degree[v.index()] <= 1)
    }

    /// First degree-1 vertex of the lowest-indexed chosen edge that has one.
    fn branch_vertex(&self) -> Option<usize> {
        for &ei in &self.chosen {
            for v in self.h.edges()[ei].vertices() {
                if self.degree[v.index()] == 1 {
                    return Some(v.index());
                }
            }
        }
        None
    }

    fn start(&mut self) {
        let b = self.h.edge_count();
        for seed in 0..b {
            self.add(seed);
            self.search(seed);
            self.remove(seed);
        }
    }

    fn search(&mut self, floor: usize) {
        let picked = self.chosen.len();
        // each future edge can saturate at most 4 vertices
        if self.unsaturated > 4 * (self.t - picked) {
            return;
        }
        if picked == self.t {
            if self.unsaturated == 0 {
                let mut solution = self.chosen.clone();
                solution.sort_unstable();
                self.results.push(solution);
            }
            return;
        }
        match self.branch_vertex() {
            Some(v) => {
                for idx in 0..self.incident[v].len() {
                    let ei = self.incident[v][idx];
                    if ei <= floor || self.in_set[ei] || !self.compatible(ei) {
                        continue;
                    }
                    self.add(ei);
                    self.search(floor);
                    self.remove(ei);
                }
            }
            None => {
                // all saturated: start a new component above the floor
                let b = self.h.edge_count();
                for seed in floor + 1..b {
                    if self.in_set[seed] || !self.compatible(seed) {
                        continue;
                    }
                    self.add(seed);
                    self.search(seed);
                    self.remove(seed);
                }
            }
        }
    }
}

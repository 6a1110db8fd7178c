//! Canonical labeling and isomorphism rejection.
//!
//! The canonical form is the lexicographically minimal serialization of the
//! hypergraph over all vertex labelings reachable through iterative partition
//! refinement with individualization. Refinement alone cannot split anything
//! on the near-regular hypergraphs this toolkit lives on (26-13 is 2-regular
//! with all edges alike), so the search individualizes one vertex of the
//! first smallest non-singleton cell, re-refines, and recurses; automorphisms
//! discovered between equal leaves prune sibling branches at the root.

use std::collections::HashSet;

use crate::mmp::{Edge, Hypergraph, VertexId};

/// Label-invariant fingerprint: equal forms iff isomorphic hypergraphs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }
}

/// A vertex bijection taking the edges of one hypergraph onto another's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoMapping {
    map: Vec<VertexId>,
}

impl IsoMapping {
    pub fn map(&self) -> &[VertexId] {
        &self.map
    }

    pub fn apply(&self, v: VertexId) -> VertexId {
        self.map[v.index()]
    }

    /// Checks that the mapping is a bijection sending every edge of `from`
    /// to an edge of `to`, exhausting them.
    pub fn verify(&self, from: &Hypergraph, to: &Hypergraph) -> bool {
        if self.map.len() != from.vertex_count()
            || from.vertex_count() != to.vertex_count()
            || from.edge_count() != to.edge_count()
        {
            return false;
        }
        let mut hit = vec![false; self.map.len()];
        for v in &self.map {
            if v.index() >= hit.len() || hit[v.index()] {
                return false;
            }
            hit[v.index()] = true;
        }
        let targets: HashSet<[VertexId; 4]> = to.edges().iter().map(|e| e.sorted()).collect();
        let mut seen: HashSet<[VertexId; 4]> = HashSet::with_capacity(from.edge_count());
        for e in from.edges() {
            let mut img = e.vertices().map(|v| self.apply(v));
            img.sort_unstable();
            if !targets.contains(&img) || !seen.insert(img) {
                return false;
            }
        }
        true
    }
}

/// Union-find over vertex orbits of the automorphisms discovered so far.
struct Orbits {
    parent: Vec<usize>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

struct Canonizer<'a> {
    h: &'a Hypergraph,
    incidence: Vec<Vec<usize>>,
    n: usize,
    b: usize,
    best: Option<(Vec<u32>, Vec<usize>)>, // (serialization, labeling old->new)
    orbits: Orbits,
}

/// Vertex and edge color classes; colors are ranks of canonically sorted
/// signatures, so they compare across isomorphic graphs.
#[derive(Clone)]
struct Partition {
    vcolors: Vec<u32>,
    ecolors: Vec<u32>,
    vclasses: usize,
}

impl<'a> Canonizer<'a> {
    fn new(h: &'a Hypergraph) -> Self {
        Canonizer {
            h,
            incidence: h.incidence(),
            n: h.vertex_count(),
            b: h.edge_count(),
            best: None,
            orbits: Orbits::new(h.vertex_count()),
        }
    }

    fn refine(&self, p: &mut Partition) {
        loop {
            // edge signatures from member vertex colors
            let mut esigs: Vec<([u32; 5], usize)> = (0..self.b)
                .map(|i| {
                    let e = &self.h.edges()[i];
                    let mut s = [0u32; 5];
                    s[0] = p.ecolors[i];
                    let mut members = e.vertices().map(|v| p.vcolors[v.index()]);
                    members.sort_unstable();
                    s[1..5].copy_from_slice(&members);
                    (s, i)
                })
                .collect();
            esigs.sort_unstable();
            let mut ecolors = vec![0u32; self.b];
            let mut eclasses = 0u32;
            for w in 0..esigs.len() {
                if w > 0 && esigs[w].0 != esigs[w - 1].0 {
                    eclasses += 1;
                }
                ecolors[esigs[w].1] = eclasses;
            }

            // vertex signatures from incident edge colors
            let mut vsigs: Vec<(Vec<u32>, usize)> = (0..self.n)
                .map(|v| {
                    let mut s: Vec<u32> = Vec::with_capacity(self.incidence[v].len() + 1);
                    s.push(p.vcolors[v]);
                    let mut inc: Vec<u32> =
                        self.incidence[v].iter().map(|&ei| ecolors[ei]).collect();
                    inc.sort_unstable();
                    s.extend(inc);
                    (s, v)
                })
                .collect();
            vsigs.sort_unstable();
            let mut vcolors = vec![0u32; self.n];
            let mut vclasses = 0u32;
            for w in 0..vsigs.len() {
                if w > 0 && vsigs[w].0 != vsigs[w - 1].0 {
                    vclasses += 1;
                }
                vcolors[vsigs[w].1] = vclasses;
            }

            let stable = vcolors == p.vcolors && ecolors == p.ecolors;
            p.vcolors = vcolors;
            p.ecolors = ecolors;
            p.vclasses = vclasses as usize + 1;
            if stable {
                return;
            }
        }
    }

    /// First smallest non-singleton cell, by color order; None when discrete.
    fn target_cell(&self, p: &Partition) -> Option<Vec<usize>> {
        if p.vclasses == self.n {
            return None;
        }
        let mut sizes = vec![0usize; p.vclasses];
        for &c in &p.vcolors {
            sizes[c as usize] += 1;
        }
        let mut best_color = usize::MAX;
        let mut best_size = usize::MAX;
        for (color, &size) in sizes.iter().enumerate() {
            if size > 1 && size < best_size {
                best_size = size;
                best_color = color;
            }
        }
        let members: Vec<usize> = (0..self.n)
            .filter(|&v| p.vcolors[v] as usize == best_color)
            .collect();
        Some(members)
    }

    fn individualize(&self, p: &Partition, v: usize) -> Partition {
        // v becomes the first singleton of its old cell
        let mut keys: Vec<((u32, u8), usize)> = (0..self.n)
            .map(|u| ((p.vcolors[u], u8::from(u != v)), u))
            .collect();
        keys.sort_unstable();
        let mut vcolors = vec![0u32; self.n];
        let mut classes = 0u32;
        for w in 0..keys.len() {
            if w > 0 && keys[w].0 != keys[w - 1].0 {
                classes += 1;
            }
            vcolors[keys[w].1] = classes;
        }
        Partition {
            vcolors,
            ecolors: p.ecolors.clone(),
            vclasses: classes as usize + 1,
        }
    }

    /// Flat serialization under the labeling implied by a discrete partition.
    fn serialize_leaf(&self, p: &Partition) -> (Vec<u32>, Vec<usize>) {
        let labeling: Vec<usize> = p.vcolors.iter().map(|&c| c as usize).collect();
        let mut edges: Vec<[u32; 4]> = self
            .h
            .edges()
            .iter()
            .map(|e| {
                let mut m = e.vertices().map(|v| labeling[v.index()] as u32);
                m.sort_unstable();
                m
            })
            .collect();
        edges.sort_unstable();
        let mut flat = Vec::with_capacity(2 + 4 * self.b);
        flat.push(self.n as u32);
        flat.push(self.b as u32);
        for e in edges {
            flat.extend_from_slice(&e);
        }
        (flat, labeling)
    }

    fn search(&mut self, p: Partition, depth: usize) {
        match self.target_cell(&p) {
            None => {
                let (flat, labeling) = self.serialize_leaf(&p);
                match &self.best {
                    Some((best_flat, best_labeling)) => {
                        if flat < *best_flat {
                            self.best = Some((flat, labeling));
                        } else if flat == *best_flat {
                            // equal leaves expose an automorphism:
                            // best_labeling^-1 . labeling
                            let mut inv_best = vec![0usize; self.n];
                            for (v, &l) in best_labeling.iter().enumerate() {
                                inv_best[l] = v;
                            }
                            for v in 0..self.n {
                                self.orbits.union(v, inv_best[labeling[v]]);
                            }
                        }
                    }
                    None => self.best = Some((flat, labeling)),
                }
            }
            Some(cell) => {
                let mut explored: Vec<usize> = Vec::new();
                for v in cell {
                    if depth == 0 {
                        let rv = self.orbits.find(v);
                        if explored.iter().any(|&u| self.orbits.find(u) == rv) {
                            continue;
                        }
                        explored.push(v);
                    }
                    let mut child = self.individualize(&p, v);
                    self.refine(&mut child);
                    self.search(child, depth + 1);
                }
            }
        }
    }

    fn run(mut self) -> (Vec<u32>, Vec<usize>) {
        let mut p = Partition {
            vcolors: vec![0; self.n],
            ecolors: vec![0; self.b],
            vclasses: 1.min(self.n),
        };
        self.refine(&mut p);
        self.search(p, 0);
        self.best.expect("search visits at least one leaf")
    }
}

fn flat_to_bytes(flat: &[u32]) -> Vec<u8> {
    let mut bytes = Vec::with_capacity(flat.len() * 4);
    for x in flat {
        bytes.extend_from_slice(&x.to_be_bytes());
    }
    bytes
}

/// Canonical form plus the labeling (old index -> canonical index) that
/// produces it.
pub fn canonical_labeling(h: &Hypergraph) -> (CanonicalForm, Vec<VertexId>) {
    if h.vertex_count() == 0 {
        return (
            CanonicalForm {
                bytes: flat_to_bytes(&[0, 0]),
            },
            Vec::new(),
        );
    }
    let (flat, labeling) = Canonizer::new(h).run();
    (
        CanonicalForm {
            bytes: flat_to_bytes(&flat),
        },
        labeling.into_iter().map(VertexId::from).collect(),
    )
}

/// Deterministic, invariant under any vertex relabeling and edge reordering.
pub fn canonical_form(h: &Hypergraph) -> CanonicalForm {
    canonical_labeling(h).0
}

/// The hypergraph relabeled canonically, vertices sorted within edges and
/// edges sorted — serializing it gives the canonical MMP line, which is its
/// own canonical-form fixpoint.
pub fn canonical_hypergraph(h: &Hypergraph) -> Hypergraph {
    let (_, labeling) = canonical_labeling(h);
    let mut edges: Vec<[VertexId; 4]> = h
        .edges()
        .iter()
        .map(|e| {
            let mut m = e.vertices().map(|v| labeling[v.index()]);
            m.sort_unstable();
            m
        })
        .collect();
    edges.sort_unstable();
    let edges = edges
        .into_iter()
        .map(|m| Edge::new(m).expect("relabeling keeps vertices distinct"))
        .collect();
    Hypergraph::with_overlap_check(h.vertex_count(), edges, false)
        .expect("relabeling preserves validity")
}

/// A verified isomorphism witness, or None.
pub fn are_isomorphic(h1: &Hypergraph, h2: &Hypergraph) -> Option<IsoMapping> {
    if h1.vertex_count() != h2.vertex_count() || h1.edge_count() != h2.edge_count() {
        return None;
    }
    let mut d1 = h1.degrees();
    let mut d2 = h2.degrees();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    let (f1, l1) = canonical_labeling(h1);
    let (f2, l2) = canonical_labeling(h2);
    if f1 != f2 {
        return None;
    }
    // map = l2^-1 . l1
    let mut inv2 = vec![VertexId(0); h2.vertex_count()];
    for (v, &c) in l2.iter().enumerate() {
        inv2[c.index()] = VertexId::from(v);
    }
    let map = l1.iter().map(|&c| inv2[c.index()]).collect();
    let mapping = IsoMapping { map };
    if mapping.verify(h1, h2) {
        Some(mapping)
    } else {
        None
    }
}

/// Removes isomorphic duplicates, keeping the first representative of each
/// canonical-form class in stream order.
pub fn dedupe_iso<I>(stream: I) -> impl Iterator<Item = Hypergraph>
where
    I: IntoIterator<Item = Hypergraph>,
{
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    stream
        .into_iter()
        .filter(move |h| seen.insert(canonical_form(h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::mmp::parse;
    use rand::prelude::*;

    fn h(text: &str) -> Hypergraph {
        parse(text).unwrap().hypergraph
    }

    fn permuted(g: &Hypergraph, rng: &mut StdRng) -> Hypergraph {
        let n = g.vertex_count();
        let mut perm: Vec<u32> = (0..n as u32).collect();
        perm.shuffle(rng);
        let mut edges: Vec<Edge> = g
            .edges()
            .iter()
            .map(|e| Edge::new(e.vertices().map(|v| VertexId(perm[v.index()]))).unwrap())
            .collect();
        edges.shuffle(rng);
        Hypergraph::with_overlap_check(n, edges, false).unwrap()
    }

    #[test]
    fn relabeling_preserves_canonical_form() {
        let mut rng = StdRng::seed_from_u64(11);
        for entry in corpus::ALL.iter().filter(|e| e.block_count <= 24) {
            let g = h(entry.mmp);
            let base = canonical_form(&g);
            for _ in 0..10 {
                let p = permuted(&g, &mut rng);
                assert_eq!(canonical_form(&p), base, "{}", entry.name);
            }
        }
    }

    #[test]
    fn the_three_30_15_sets_are_mutually_nonisomorphic() {
        let a = canonical_form(&h(corpus::SET_30_15A));
        let b = canonical_form(&h(corpus::SET_30_15B));
        let c = canonical_form(&h(corpus::SET_30_15C));
        assert_ne!(a, b);
        assert_ne!(a, c);
        assert_ne!(b, c);
    }

    #[test]
    fn the_two_33_17_sets_are_nonisomorphic() {
        assert!(are_isomorphic(&h(corpus::SET_33_17A), &h(corpus::SET_33_17B)).is_none());
    }

    #[test]
    fn identity_isomorphism() {
        let g = h(corpus::SET_26_13);
        let m = are_isomorphic(&g, &g).unwrap();
        assert!(m.verify(&g, &g));
    }

    #[test]
    fn permuted_isomorphism_yields_verified_witness() {
        let mut rng = StdRng::seed_from_u64(23);
        let g = h(corpus::SET_26_13);
        for _ in 0..10 {
            let p = permuted(&g, &mut rng);
            let m = are_isomorphic(&g, &p).expect("permuted copy is isomorphic");
            assert!(m.verify(&g, &p));
        }
    }

    #[test]
    fn nonisomorphic_same_degree_sequence_rejected() {
        // both have degree multiset {2 x4, 1 x8}: a 4-ring vs two 2-chains
        let ring = h("1234,4567,789A,ABC1.");
        let bonds = h("1234,3456,789A,9ABC.");
        assert_eq!(ring.degrees().iter().sum::<usize>(), 16);
        assert!(are_isomorphic(&ring, &bonds).is_none());
        assert_ne!(canonical_form(&ring), canonical_form(&bonds));
    }

    #[test]
    fn dedupe_iso_keeps_first_representative() {
        let mut rng = StdRng::seed_from_u64(5);
        let g = h(corpus::SET_26_13);
        let p = permuted(&g, &mut rng);
        let others = h(corpus::SET_30_15A);
        let out: Vec<_> = dedupe_iso(vec![g.clone(), p, others.clone()]).collect();
        assert_eq!(out.len(), 2);
        assert_eq!(out[0], g);
        assert_eq!(out[1], others);
    }

    #[test]
    fn thirty_fifteen_sets_survive_dedupe() {
        let out = dedupe_iso(vec![
            h(corpus::SET_30_15A),
            h(corpus::SET_30_15B),
            h(corpus::SET_30_15C),
        ])
        .count();
        assert_eq!(out, 3);
    }

    /// Iso classes among the thirteen 12-edge strips of 26-13, counted two
    /// ways: canonical dedupe vs the quadratic pairwise witness oracle.
    #[test]
    fn strips_of_26_13_class_count_matches_pairwise_oracle() {
        let g = h(corpus::SET_26_13);
        let strips: Vec<Hypergraph> = (0..13)
            .map(|i| g.remove_edges(&[i]).renormalize())
            .collect();

        let mut class_of = vec![usize::MAX; strips.len()];
        let mut classes = 0usize;
        for i in 0..strips.len() {
            if class_of[i] != usize::MAX {
                continue;
            }
            class_of[i] = classes;
            for j in i + 1..strips.len() {
                if class_of[j] == usize::MAX {
                    if let Some(m) = are_isomorphic(&strips[i], &strips[j]) {
                        assert!(m.verify(&strips[i], &strips[j]));
                        class_of[j] = classes;
                    }
                }
            }
            classes += 1;
        }

        let deduped = dedupe_iso(strips).count();
        assert_eq!(deduped, classes);
    }

    #[test]
    fn canonical_line_is_a_fixpoint() {
        for entry in corpus::ALL.iter().filter(|e| e.block_count <= 17) {
            let g = h(entry.mmp);
            let canon = canonical_hypergraph(&g);
            let line = crate::mmp::serialize(&canon).unwrap();
            let reparsed = parse(&line).unwrap().hypergraph;
            assert_eq!(canonical_form(&reparsed), canonical_form(&g), "{}", entry.name);
            assert_eq!(
                crate::mmp::serialize(&canonical_hypergraph(&reparsed)).unwrap(),
                line,
                "{}",
                entry.name
            );
        }
    }
}

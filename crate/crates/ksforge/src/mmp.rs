//! Hypergraph data model and the MMP textual notation.
//!
//! An MMP hypergraph is a set of vertices (rays) together with edges of
//! exactly four vertices each (orthogonal tetrads). The textual form writes
//! one character per vertex — `1`-`9` for the first nine, `A`-`Z` for the
//! 10th through 35th, `a`-`z` for the 36th through 61st — with edges
//! separated by commas and the line terminated by a period:
//!
//! ```text
//! 1234,4567,789A.
//! ```
//!
//! Within-edge order is preserved as written (the corpus strings round-trip
//! byte for byte) but edges compare as sets.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Largest vertex count expressible in the one-character-per-vertex notation.
pub const MAX_TEXT_VERTICES: usize = 61;

/// Index of a vertex within one hypergraph, contiguous from 0 after
/// renormalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for VertexId {
    fn from(i: usize) -> Self {
        VertexId(i as u32)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match label_of(self.index()) {
            Some(c) => write!(f, "{}", c),
            None => write!(f, "#{}", self.0),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MmpError {
    #[error("empty input")]
    Empty,
    #[error("character {0:?} is not an MMP vertex label")]
    BadLabel(char),
    #[error("edge {0} has {1} vertices, tetrads need exactly 4")]
    EdgeSize(usize, usize),
    #[error("edge {0} repeats a vertex")]
    RepeatedVertex(usize),
    #[error("edge {0} duplicates an earlier edge")]
    DuplicateEdge(usize),
    #[error("edges {0} and {1} share {2} vertices; tetrads sharing 3 rays coincide")]
    EdgeOverlap(usize, usize, usize),
    #[error("vertex {0} out of range for vertex count {1}")]
    VertexRange(u32, usize),
    #[error("{0} vertices exceed the {MAX_TEXT_VERTICES}-label alphabet")]
    AlphabetExhausted(usize),
}

/// Four distinct vertices; display order is kept, comparisons are as sets.
#[derive(Debug, Clone, Copy)]
pub struct Edge {
    verts: [VertexId; 4],
}

impl Edge {
    pub fn new(verts: [VertexId; 4]) -> Option<Edge> {
        let e = Edge { verts };
        let s = e.sorted();
        if s[0] == s[1] || s[1] == s[2] || s[2] == s[3] {
            return None;
        }
        Some(e)
    }

    pub fn vertices(&self) -> &[VertexId; 4] {
        &self.verts
    }

    /// The four vertices in ascending index order.
    pub fn sorted(&self) -> [VertexId; 4] {
        let mut s = self.verts;
        s.sort_unstable();
        s
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.verts.contains(&v)
    }

    pub fn shared_with(&self, other: &Edge) -> usize {
        self.verts.iter().filter(|v| other.contains(**v)).count()
    }
}

impl PartialEq for Edge {
    fn eq(&self, other: &Self) -> bool {
        self.sorted() == other.sorted()
    }
}

impl Eq for Edge {}

impl std::hash::Hash for Edge {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.sorted().hash(state);
    }
}

/// N vertices plus an ordered list of tetrad edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Builds a hypergraph with full validation, including the default check
    /// that two distinct edges share at most 2 vertices.
    pub fn new(vertex_count: usize, edges: Vec<Edge>) -> Result<Self, MmpError> {
        Self::with_overlap_check(vertex_count, edges, true)
    }

    /// Same as [`Hypergraph::new`] but lets callers admit edges sharing
    /// 3 vertices (useful for counterexample constructions in tests).
    pub fn with_overlap_check(
        vertex_count: usize,
        edges: Vec<Edge>,
        check_overlap: bool,
    ) -> Result<Self, MmpError> {
        let mut seen: HashSet<[VertexId; 4]> = HashSet::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            for v in e.vertices() {
                if v.index() >= vertex_count {
                    return Err(MmpError::VertexRange(v.0, vertex_count));
                }
            }
            if !seen.insert(e.sorted()) {
                return Err(MmpError::DuplicateEdge(i));
            }
        }
        if check_overlap {
            for i in 0..edges.len() {
                for j in i + 1..edges.len() {
                    let s = edges[i].shared_with(&edges[j]);
                    if s > 2 {
                        return Err(MmpError::EdgeOverlap(i, j, s));
                    }
                }
            }
        }
        Ok(Hypergraph {
            vertex_count,
            edges,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Per-vertex edge-membership counts.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.vertex_count];
        for e in &self.edges {
            for v in e.vertices() {
                d[v.index()] += 1;
            }
        }
        d
    }

    /// Edge indices incident to each vertex.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (i, e) in self.edges.iter().enumerate() {
            for v in e.vertices() {
                inc[v.index()].push(i);
            }
        }
        inc
    }

    /// True iff the bipartite incidence structure is one connected component
    /// and every vertex is referenced.
    pub fn is_connected(&self) -> bool {
        if self.edges.is_empty() {
            return self.vertex_count <= 1;
        }
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut referenced = vec![false; self.vertex_count];
        for e in &self.edges {
            let root = find(&mut parent, e.vertices()[0].index());
            for v in e.vertices() {
                referenced[v.index()] = true;
                let r = find(&mut parent, v.index());
                parent[r] = root;
            }
        }
        if referenced.iter().any(|r| !r) {
            return false;
        }
        let root0 = find(&mut parent, self.edges[0].vertices()[0].index());
        (0..self.vertex_count).all(|v| find(&mut parent, v) == root0)
    }

    /// Relabels vertices to 0..N'-1 in order of first appearance across edges
    /// (in edge order), dropping unreferenced vertices. Edge order and
    /// within-edge display order are preserved.
    pub fn renormalize(&self) -> Hypergraph {
        let mut map: Vec<Option<VertexId>> = vec![None; self.vertex_count];
        let mut next = 0u32;
        for e in &self.edges {
            for v in e.vertices() {
                if map[v.index()].is_none() {
                    map[v.index()] = Some(VertexId(next));
                    next += 1;
                }
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                verts: e.verts.map(|v| map[v.index()].unwrap()),
            })
            .collect();
        Hypergraph {
            vertex_count: next as usize,
            edges,
        }
    }

    /// The hypergraph with the edges at `removed` (ascending, deduped by the
    /// caller) deleted. Vertex count is kept; renormalize to drop orphans.
    pub fn remove_edges(&self, removed: &[usize]) -> Hypergraph {
        let mut keep = Vec::with_capacity(self.edges.len() - removed.len());
        let mut r = 0;
        for (i, e) in self.edges.iter().enumerate() {
            if r < removed.len() && removed[r] == i {
                r += 1;
            } else {
                keep.push(*e);
            }
        }
        Hypergraph {
            vertex_count: self.vertex_count,
            edges: keep,
        }
    }

    /// The sub-hypergraph on the given edge indices, original vertex ids kept.
    pub fn edge_subset(&self, indices: &[usize]) -> Hypergraph {
        Hypergraph {
            vertex_count: self.vertex_count,
            edges: indices.iter().map(|&i| self.edges[i]).collect(),
        }
    }
}

/// Maps an MMP label character to a vertex index: '1' is vertex 0,
/// 'A' vertex 9, 'a' vertex 35, 'z' vertex 60.
pub fn index_of_label(c: char) -> Option<usize> {
    match c {
        '1'..='9' => Some(c as usize - '1' as usize),
        'A'..='Z' => Some(c as usize - 'A' as usize + 9),
        'a'..='z' => Some(c as usize - 'a' as usize + 35),
        _ => None,
    }
}

pub fn label_of(index: usize) -> Option<char> {
    match index {
        0..=8 => Some((b'1' + index as u8) as char),
        9..=34 => Some((b'A' + (index - 9) as u8) as char),
        35..=60 => Some((b'a' + (index - 35) as u8) as char),
        _ => None,
    }
}

/// Result of parsing one MMP line. `terminated` is false when the terminal
/// period was missing; the line is still accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub hypergraph: Hypergraph,
    pub terminated: bool,
}

/// Parses one MMP line. Whitespace is ignored anywhere; a missing terminal
/// period is tolerated and reported via [`Parsed::terminated`].
pub fn parse(text: &str) -> Result<Parsed, MmpError> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(MmpError::Empty);
    }
    let (body, terminated) = match compact.strip_suffix('.') {
        Some(b) => (b, true),
        None => (compact.as_str(), false),
    };
    if body.is_empty() {
        return Err(MmpError::Empty);
    }
    let mut edges: Vec<Edge> = Vec::new();
    let mut max_index = 0usize;
    for (i, group) in body.split(',').enumerate() {
        let mut verts = [VertexId(0); 4];
        let mut len = 0usize;
        for c in group.chars() {
            let idx = index_of_label(c).ok_or(MmpError::BadLabel(c))?;
            max_index = max_index.max(idx);
            if len < 4 {
                verts[len] = VertexId::from(idx);
            }
            len += 1;
        }
        if len != 4 {
            return Err(MmpError::EdgeSize(i, len));
        }
        let edge = Edge::new(verts).ok_or(MmpError::RepeatedVertex(i))?;
        if edges.contains(&edge) {
            return Err(MmpError::DuplicateEdge(i));
        }
        edges.push(edge);
    }
    let hypergraph = Hypergraph::new(max_index + 1, edges)?;
    Ok(Parsed {
        hypergraph,
        terminated,
    })
}

/// Writes the hypergraph in MMP notation; fails when more than 61 vertices
/// would be needed. Within-edge order is emitted as stored, so a parsed line
/// serializes back byte for byte.
pub fn serialize(h: &Hypergraph) -> Result<String, MmpError> {
    if h.vertex_count() > MAX_TEXT_VERTICES {
        return Err(MmpError::AlphabetExhausted(h.vertex_count()));
    }
    let mut out = String::with_capacity(h.edge_count() * 5);
    for (i, e) in h.edges().iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        for v in e.vertices() {
            out.push(label_of(v.index()).ok_or(MmpError::AlphabetExhausted(h.vertex_count()))?);
        }
    }
    out.push('.');
    Ok(out)
}

/// Iterates the hypergraphs in an MMP file: one per line, `#` lines and blank
/// lines skipped. Yields `(line_number, parse result)` with 1-based numbers.
pub fn parse_lines(text: &str) -> impl Iterator<Item = (usize, Result<Parsed, MmpError>)> + '_ {
    text.lines()
        .enumerate()
        .filter(|(_, line)| {
            let t = line.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .map(|(i, line)| (i + 1, parse(line)))
}

//! Exact 600-cell geometry and candidate-pool vector assignment.
//!
//! Rays live in Q(phi)^4, the quadratic extension by the golden ratio
//! (phi^2 = phi + 1). Orthogonality is an exact equality predicate — inner
//! products are computed in the extension field and compared to zero, never
//! against an epsilon.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::mmp::Hypergraph;

type Rat = BigRational;

fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Element a + b*phi of the golden-ratio extension of the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QExt {
    a: Rat,
    b: Rat,
}

impl QExt {
    pub fn new(a: Rat, b: Rat) -> Self {
        QExt { a, b }
    }

    pub fn from_integers(a: i64, b: i64) -> Self {
        QExt::new(rat(a), rat(b))
    }

    pub fn zero() -> Self {
        QExt::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        QExt::new(Rat::one(), Rat::zero())
    }

    pub fn phi() -> Self {
        QExt::new(Rat::zero(), Rat::one())
    }

    /// phi^-1 = phi - 1.
    pub fn phi_inv() -> Self {
        QExt::new(-Rat::one(), Rat::one())
    }

    pub fn rational_part(&self) -> &Rat {
        &self.a
    }

    pub fn phi_part(&self) -> &Rat {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, rhs: &QExt) -> QExt {
        QExt::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }

    pub fn neg(&self) -> QExt {
        QExt::new(-self.a.clone(), -self.b.clone())
    }

    /// (a1 + b1 phi)(a2 + b2 phi) = (a1 a2 + b1 b2) + (a1 b2 + a2 b1 + b1 b2) phi.
    pub fn mul(&self, rhs: &QExt) -> QExt {
        let a = &self.a * &rhs.a + &self.b * &rhs.b;
        let b = &self.a * &rhs.b + &rhs.a * &self.b + &self.b * &rhs.b;
        QExt::new(a, b)
    }

    /// Field norm (a + b phi)(a + b - b phi) = a^2 + ab - b^2; zero only at 0.
    pub fn norm(&self) -> Rat {
        &self.a * &self.a + &self.a * &self.b - &self.b * &self.b
    }

    /// Multiplicative inverse via the Galois conjugate; None at zero.
    pub fn inverse(&self) -> Option<QExt> {
        if self.is_zero() {
            return None;
        }
        let norm = self.norm();
        let conj = QExt::new(&self.a + &self.b, -self.b.clone());
        Some(QExt::new(&conj.a / &norm, &conj.b / &norm))
    }

    /// Exact sign: writing 2(a + b phi) = (2a + b) + b sqrt5, compare the
    /// rational and surd parts without leaving the rationals.
    pub fn sign(&self) -> i32 {
        let u = &self.a + &self.a + &self.b; // 2a + b
        let v = &self.b;
        let (su, sv) = (rational_sign(&u), rational_sign(v));
        match (su, sv) {
            (0, 0) => 0,
            (s, 0) => s,
            (0, s) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            _ => {
                // opposite signs: |u| vs sqrt5 |v|
                let uu = &u * &u;
                let vv5 = v * v * rat(5);
                match uu.cmp(&vv5) {
                    std::cmp::Ordering::Greater => su,
                    std::cmp::Ordering::Less => sv,
                    std::cmp::Ordering::Equal => 0, // impossible: sqrt5 irrational
                }
            }
        }
    }
}

fn rational_sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl fmt::Display for QExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let phi_term = |f: &mut fmt::Formatter<'_>, b: &Rat| -> fmt::Result {
            if b == &Rat::one() {
                write!(f, "phi")
            } else if b == &-Rat::one() {
                write!(f, "-phi")
            } else {
                write!(f, "{}*phi", b)
            }
        };
        if self.a.is_zero() {
            return phi_term(f, &self.b);
        }
        write!(f, "{}", self.a)?;
        if self.b.is_positive() {
            write!(f, "+")?;
        }
        phi_term(f, &self.b)
    }
}

/// A 1-dim subspace of Q(phi)^4, stored as its canonical representative:
/// denominators cleared, integer content divided out, first nonzero
/// component positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ray {
    components: [QExt; 4],
}

impl Ray {
    /// Canonicalizes; None for the zero vector. Two inputs spanning the same
    /// subspace of Q(phi)^4 produce equal representatives: components are
    /// divided by the first nonzero one (killing any field-unit scale such
    /// as a stray power of phi), then denominators are cleared, integer
    /// content divided out, and the sign fixed positive.
    pub fn new(components: [QExt; 4]) -> Option<Ray> {
        let lead = components.iter().find(|c| !c.is_zero())?;
        let lead_inv = lead.inverse().expect("nonzero component inverts");
        let projective: Vec<QExt> = components.iter().map(|c| c.mul(&lead_inv)).collect();
        // clear denominators
        let mut lcm = BigInt::one();
        for c in &projective {
            lcm = num_integer::lcm(lcm.clone(), c.a.denom().clone());
            lcm = num_integer::lcm(lcm.clone(), c.b.denom().clone());
        }
        let scale = QExt::new(Rat::from_integer(lcm), Rat::zero());
        let mut ints: Vec<BigInt> = Vec::with_capacity(8);
        let scaled: Vec<QExt> = projective
            .iter()
            .map(|c| {
                let s = c.mul(&scale);
                debug_assert!(s.a.is_integer() && s.b.is_integer());
                ints.push(s.a.numer().clone());
                ints.push(s.b.numer().clone());
                s
            })
            .collect();
        // divide out integer content
        let mut content = BigInt::zero();
        for i in &ints {
            content = num_integer::gcd(content, i.clone());
        }
        let inv = QExt::new(Rat::new(BigInt::one(), content), Rat::zero());
        let mut reduced: Vec<QExt> = scaled.iter().map(|c| c.mul(&inv)).collect();
        // sign-normalize on the first nonzero component
        let flip = reduced
            .iter()
            .find(|c| !c.is_zero())
            .map(|c| c.sign() < 0)
            .unwrap_or(false);
        if flip {
            reduced = reduced.iter().map(QExt::neg).collect();
        }
        let components = [
            reduced[0].clone(),
            reduced[1].clone(),
            reduced[2].clone(),
            reduced[3].clone(),
        ];
        Some(Ray { components })
    }

    pub fn from_integer_pairs(pairs: [(i64, i64); 4]) -> Option<Ray> {
        Ray::new(pairs.map(|(a, b)| QExt::from_integers(a, b)))
    }

    pub fn components(&self) -> &[QExt; 4] {
        &self.components
    }

    pub fn inner(&self, other: &Ray) -> QExt {
        let mut acc = QExt::zero();
        for (x, y) in self.components.iter().zip(other.components.iter()) {
            acc = acc.add(&x.mul(y));
        }
        acc
    }

    pub fn is_orthogonal(&self, other: &Ray) -> bool {
        self.inner(other).is_zero()
    }
}

impl fmt::Display for Ray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.components[0], self.components[1], self.components[2], self.components[3]
        )
    }
}

/// A ray pool with its orthogonal tetrads. Pools are capped at 128 rays so
/// orthogonality rows fit machine words.
#[derive(Debug, Clone)]
pub struct RaySystem {
    rays: Vec<Ray>,
    tetrads: Vec<[usize; 4]>,
    orth: Vec<u128>,
}

impl RaySystem {
    pub fn new(rays: Vec<Ray>) -> RaySystem {
        assert!(rays.len() <= 128, "ray pools are capped at 128 rays");
        let n = rays.len();
        let mut orth = vec![0u128; n];
        for i in 0..n {
            for j in i + 1..n {
                if rays[i].is_orthogonal(&rays[j]) {
                    orth[i] |= 1 << j;
                    orth[j] |= 1 << i;
                }
            }
        }
        let mut tetrads = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if orth[i] >> j & 1 == 0 {
                    continue;
                }
                let ij = orth[i] & orth[j] & !((1 << (j + 1)) - 1);
                let mut k_bits = ij;
                while k_bits != 0 {
                    let k = k_bits.trailing_zeros() as usize;
                    k_bits &= k_bits - 1;
                    let mut l_bits = ij & orth[k] & !((1u128 << (k + 1)) - 1);
                    while l_bits != 0 {
                        let l = l_bits.trailing_zeros() as usize;
                        l_bits &= l_bits - 1;
                        tetrads.push([i, j, k, l]);
                    }
                }
            }
        }
        RaySystem { rays, tetrads, orth }
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn tetrads(&self) -> &[[usize; 4]] {
        &self.tetrads
    }

    pub fn are_orthogonal(&self, i: usize, j: usize) -> bool {
        self.orth[i] >> j & 1 == 1
    }

    /// How many pool rays each ray is orthogonal to.
    pub fn orthogonality_degrees(&self) -> Vec<usize> {
        self.orth.iter().map(|m| m.count_ones() as usize).collect()
    }

    /// How many tetrads each ray belongs to.
    pub fn tetrad_memberships(&self) -> Vec<usize> {
        let mut m = vec![0usize; self.rays.len()];
        for t in &self.tetrads {
            for &r in t {
                m[r] += 1;
            }
        }
        m
    }

    /// The tetrad structure as a hypergraph (ray i = vertex i).
    pub fn to_hypergraph(&self) -> Hypergraph {
        let edges = self
            .tetrads
            .iter()
            .map(|t| {
                crate::mmp::Edge::new(t.map(crate::mmp::VertexId::from))
                    .expect("tetrad rays are distinct")
            })
            .collect();
        Hypergraph::new(self.rays.len(), edges).expect("tetrads are valid edges")
    }
}

/// The 60 rays and 75 tetrads of the 600-cell: the classical 120 vertices
/// (8 permutations of (+-2,0,0,0), 16 sign choices of (+-1,+-1,+-1,+-1),
/// 96 even permutations of (+-phi, +-1, +-phi^-1, 0)) with antipodes
/// identified, tetrads found by clique search over the orthogonality graph.
pub fn generate_600cell() -> RaySystem {
    let mut rays: Vec<Ray> = Vec::with_capacity(60);
    let mut seen: HashSet<[QExt; 4]> = HashSet::with_capacity(60);
    let mut push = |ray: Ray| {
        if seen.insert(ray.components().clone()) {
            rays.push(ray);
        }
    };

    for i in 0..4 {
        for s in [2i64, -2] {
            let mut pairs = [(0i64, 0i64); 4];
            pairs[i] = (s, 0);
            push(Ray::from_integer_pairs(pairs).unwrap());
        }
    }
    for mask in 0u32..16 {
        let pairs = [0, 1, 2, 3].map(|i| if mask >> i & 1 == 1 { (1, 0) } else { (-1, 0) });
        push(Ray::from_integer_pairs(pairs).unwrap());
    }
    // phi = (0,1), 1 = (1,0), phi^-1 = (-1,1), 0 = (0,0)
    let base = [(0i64, 1i64), (1, 0), (-1, 1), (0, 0)];
    for perm in even_permutations() {
        for signs in 0u32..8 {
            let mut pairs = [(0i64, 0i64); 4];
            for (slot, &src) in perm.iter().enumerate() {
                let (a, b) = base[src];
                let flip = src < 3 && signs >> src & 1 == 1;
                pairs[slot] = if flip { (-a, -b) } else { (a, b) };
            }
            push(Ray::from_integer_pairs(pairs).unwrap());
        }
    }
    RaySystem::new(rays)
}

fn even_permutations() -> Vec<[usize; 4]> {
    let mut perms = Vec::with_capacity(12);
    let mut items = [0usize, 1, 2, 3];
    permute(&mut items, 0, &mut perms);
    perms.retain(|p| {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2 == 0
    });
    perms
}

fn permute(items: &mut [usize; 4], from: usize, out: &mut Vec<[usize; 4]>) {
    if from == 4 {
        out.push(*items);
        return;
    }
    for i in from..4 {
        items.swap(from, i);
        permute(items, from + 1, out);
        items.swap(from, i);
    }
}

/// True iff the mapping (vertex index -> pool ray index) is injective and
/// every edge lands on four mutually orthogonal rays, re-verified with exact
/// inner products.
pub fn verify_assignment(h: &Hypergraph, pool: &RaySystem, mapping: &[usize]) -> bool {
    if mapping.len() != h.vertex_count() {
        return false;
    }
    let mut used = vec![false; pool.rays().len()];
    for &r in mapping {
        if r >= pool.rays().len() || used[r] {
            return false;
        }
        used[r] = true;
    }
    h.edges().iter().all(|e| {
        let vs = e.vertices();
        (0..4).all(|i| {
            (i + 1..4).all(|j| {
                pool.rays()[mapping[vs[i].index()]]
                    .is_orthogonal(&pool.rays()[mapping[vs[j].index()]])
            })
        })
    })
}

/// Searches for an injective vertex-to-ray assignment realizing every edge as
/// an orthogonal tetrad. Backtracking with most-constrained-vertex ordering
/// and forward checking; the witness is re-verified exactly before return.
/// An empty result means no assignment exists within this pool — not that
/// the hypergraph is unrealizable in general.
pub fn find_assignment(h: &Hypergraph, pool: &RaySystem) -> Option<Vec<usize>> {
    let n = h.vertex_count();
    let r = pool.rays().len();
    assert!(n <= 128, "assignment search is capped at 128 vertices");
    if n > r {
        return None;
    }
    // vertex-vertex adjacency: sharing an edge demands orthogonal images
    let mut adj = vec![0u128; n];
    for e in h.edges() {
        for i in 0..4 {
            for j in 0..4 {
                if i != j {
                    adj[e.vertices()[i].index()] |= 1 << e.vertices()[j].index();
                }
            }
        }
    }
    let full: u128 = if r == 128 { !0 } else { (1 << r) - 1 };
    let mut candidates = vec![full; n];
    let mut assignment = vec![usize::MAX; n];
    if assign_next(h, pool, &adj, &mut candidates, &mut assignment) {
        debug_assert!(verify_assignment(h, pool, &assignment));
        if verify_assignment(h, pool, &assignment) {
            return Some(assignment);
        }
    }
    None
}

fn assign_next(
    h: &Hypergraph,
    pool: &RaySystem,
    adj: &[u128],
    candidates: &mut [u128],
    assignment: &mut [usize],
) -> bool {
    let n = assignment.len();
    // most-constrained unassigned vertex
    let mut pick = usize::MAX;
    let mut pick_count = u32::MAX;
    for v in 0..n {
        if assignment[v] != usize::MAX {
            continue;
        }
        let c = candidates[v].count_ones();
        if c < pick_count {
            pick = v;
            pick_count = c;
        }
    }
    if pick == usize::MAX {
        return true;
    }
    let mut options = candidates[pick];
    while options != 0 {
        let ray = options.trailing_zeros() as usize;
        options &= options - 1;
        assignment[pick] = ray;
        let saved: Vec<u128> = candidates.to_vec();
        let mut dead = false;
        let ray_bit = 1u128 << ray;
        for w in 0..n {
            if assignment[w] != usize::MAX {
                continue;
            }
            candidates[w] &= !ray_bit;
            if adj[pick] >> w & 1 == 1 {
                candidates[w] &= pool.orth[ray];
            }
            if candidates[w] == 0 {
                dead = true;
                break;
            }
        }
        if !dead && assign_next(h, pool, adj, candidates, assignment) {
            return true;
        }
        candidates.copy_from_slice(&saved);
        assignment[pick] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::mmp::{parse, Edge, VertexId};

    #[test]
    fn phi_squared_is_phi_plus_one() {
        let phi = QExt::phi();
        assert_eq!(phi.mul(&phi), phi.add(&QExt::one()));
        assert_eq!(phi.mul(&QExt::phi_inv()), QExt::one());
    }

    #[test]
    fn exact_signs() {
        assert_eq!(QExt::phi().sign(), 1);
        assert_eq!(QExt::phi_inv().sign(), 1); // 0.618...
        assert_eq!(QExt::from_integers(-2, 1).sign(), -1); // phi - 2 < 0
        assert_eq!(QExt::from_integers(2, -1).sign(), 1); // 2 - phi > 0
        assert_eq!(QExt::from_integers(-1, -1).sign(), -1);
        assert_eq!(QExt::zero().sign(), 0);
    }

    #[test]
    fn rendering_is_lowest_terms() {
        assert_eq!(QExt::from_integers(0, 0).to_string(), "0");
        assert_eq!(QExt::from_integers(3, 0).to_string(), "3");
        assert_eq!(QExt::from_integers(0, 1).to_string(), "phi");
        assert_eq!(QExt::from_integers(0, -1).to_string(), "-phi");
        assert_eq!(QExt::from_integers(1, 2).to_string(), "1+2*phi");
        assert_eq!(QExt::from_integers(1, -2).to_string(), "1-2*phi");
        let half = QExt::new(Rat::new(BigInt::from(1), BigInt::from(2)), Rat::zero());
        assert_eq!(half.to_string(), "1/2");
    }

    #[test]
    fn ray_canonicalization() {
        let a = Ray::from_integer_pairs([(2, 0), (0, 0), (0, 0), (0, 0)]).unwrap();
        let b = Ray::from_integer_pairs([(-4, 0), (0, 0), (0, 0), (0, 0)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.components()[0], QExt::one());
        assert!(Ray::from_integer_pairs([(0, 0); 4]).is_none());
        // scaling by the field unit phi spans the same ray:
        // (phi, phi^2, 0, 0) ~ (1, phi, 0, 0)
        let c = Ray::from_integer_pairs([(0, 1), (1, 1), (0, 0), (0, 0)]).unwrap();
        let d = Ray::from_integer_pairs([(1, 0), (0, 1), (0, 0), (0, 0)]).unwrap();
        assert_eq!(c, d);
    }

    #[test]
    fn inverse_round_trips() {
        for (a, b) in [(1i64, 0i64), (0, 1), (3, -2), (-5, 7), (2, 2)] {
            let x = QExt::from_integers(a, b);
            let inv = x.inverse().unwrap();
            assert_eq!(x.mul(&inv), QExt::one(), "({a}, {b})");
        }
        assert!(QExt::zero().inverse().is_none());
    }

    #[test]
    fn the_600cell_has_the_documented_structure() {
        let sys = generate_600cell();
        assert_eq!(sys.rays().len(), 60);
        assert_eq!(sys.tetrads().len(), 75);
        assert!(sys.orthogonality_degrees().iter().all(|&d| d == 15));
        assert!(sys.tetrad_memberships().iter().all(|&m| m == 5));
        let h = sys.to_hypergraph();
        assert!(h.is_connected());
        assert!(h.degrees().iter().all(|&d| d == 5));
    }

    #[test]
    fn forced_coincidence_has_no_assignment() {
        // two edges sharing 3 vertices force the fourth pair onto one ray
        let e1 = Edge::new([VertexId(0), VertexId(1), VertexId(2), VertexId(3)]).unwrap();
        let e2 = Edge::new([VertexId(0), VertexId(1), VertexId(2), VertexId(4)]).unwrap();
        let h = Hypergraph::with_overlap_check(5, vec![e1, e2], false).unwrap();
        let pool = generate_600cell();
        assert!(find_assignment(&h, &pool).is_none());
    }

    #[test]
    fn verify_rejects_duplicates_and_nonorthogonal() {
        let pool = generate_600cell();
        let h = parse("1234.").unwrap().hypergraph;
        let t = pool.tetrads()[0];
        assert!(verify_assignment(&h, &pool, &[t[0], t[1], t[2], t[3]]));
        assert!(!verify_assignment(&h, &pool, &[t[0], t[0], t[2], t[3]]));
        // swap in a non-orthogonal ray
        let bad = (0..60)
            .find(|&r| !t.contains(&r) && !pool.are_orthogonal(t[0], r))
            .unwrap();
        assert!(!verify_assignment(&h, &pool, &[t[0], t[1], t[2], bad]));
    }

    #[test]
    fn single_tetrad_is_realizable() {
        let pool = generate_600cell();
        let h = parse("1234.").unwrap().hypergraph;
        let m = find_assignment(&h, &pool).unwrap();
        assert!(verify_assignment(&h, &pool, &m));
    }

    #[test]
    fn corpus_26_13_is_realizable() {
        let pool = generate_600cell();
        let h = parse(corpus::SET_26_13).unwrap().hypergraph;
        let m = find_assignment(&h, &pool).unwrap();
        assert!(verify_assignment(&h, &pool, &m));
    }
}

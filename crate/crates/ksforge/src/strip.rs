//! Edge-removal enumeration with sampling controls.
//!
//! Subsets are ordered by the lexicographic rank of the removed-index
//! k-combination, and the enumeration is rank-addressable: any rank can be
//! unranked directly, so [start, end] ranges shard cleanly across workers and
//! an increment parameter samples every i-th subset without generating the
//! rest.

use std::collections::HashSet;

use thiserror::Error;

use crate::mmp::Hypergraph;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StripError {
    #[error("k = {k} out of range for {b} edges")]
    KOutOfRange { k: usize, b: usize },
    #[error("rank range {start}..={end} invalid for {total} subsets")]
    BadRange { start: u128, end: u128, total: u128 },
    #[error("increment must be at least 1")]
    ZeroIncrement,
}

/// Parameters of one enumeration run. Ranks are 1-based and inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StripPlan {
    pub k: usize,
    pub start: u128,
    pub end: u128,
    pub increment: u128,
    pub drop_disconnected: bool,
    pub renormalize_output: bool,
}

impl StripPlan {
    /// The full enumeration for removing k edges, no filtering.
    pub fn full(h: &Hypergraph, k: usize) -> Result<StripPlan, StripError> {
        let total = count_strips(h, k)?;
        Ok(StripPlan {
            k,
            start: 1,
            end: total,
            increment: 1,
            drop_disconnected: false,
            renormalize_output: true,
        })
    }

    pub fn validate(&self, h: &Hypergraph) -> Result<(), StripError> {
        let total = count_strips(h, self.k)?;
        if self.start < 1 || self.start > self.end || self.end > total {
            return Err(StripError::BadRange {
                start: self.start,
                end: self.end,
                total,
            });
        }
        if self.increment == 0 {
            return Err(StripError::ZeroIncrement);
        }
        Ok(())
    }
}

/// C(n, k) in u128; exact for every n that fits an MMP workload (n <= 75
/// peaks at C(75,37) ~ 1.0e21, well inside u128).
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 1..=k {
        result = result * (n - (k - i)) as u128 / i as u128;
    }
    result
}

/// How many hypergraphs enumerate_strips would produce before filtering.
pub fn count_strips(h: &Hypergraph, k: usize) -> Result<u128, StripError> {
    let b = h.edge_count();
    if k > b {
        return Err(StripError::KOutOfRange { k, b });
    }
    Ok(binomial(b, k))
}

/// The k-combination of {0..n-1} at 0-based lexicographic rank.
pub fn unrank_combination(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut combo = Vec::with_capacity(k);
    let mut next = 0usize;
    for i in 0..k {
        let mut c = next;
        loop {
            let count = binomial(n - c - 1, k - i - 1);
            if count <= rank {
                rank -= count;
                c += 1;
            } else {
                combo.push(c);
                next = c + 1;
                break;
            }
        }
    }
    combo
}

/// 0-based lexicographic rank of an ascending k-combination of {0..n-1}.
pub fn rank_combination(n: usize, combo: &[usize]) -> u128 {
    let k = combo.len();
    let mut rank: u128 = 0;
    let mut prev = 0usize;
    for (i, &c) in combo.iter().enumerate() {
        for j in prev..c {
            rank += binomial(n - j - 1, k - i - 1);
        }
        prev = c + 1;
    }
    rank
}

/// Emits the plan's subsets in rank order: ranks start, start+i, start+2i, ...
/// up to end. Each output has the unranked k edges removed.
pub fn enumerate_strips<'a>(
    h: &'a Hypergraph,
    plan: &StripPlan,
) -> Result<impl Iterator<Item = Hypergraph> + 'a, StripError> {
    plan.validate(h)?;
    let plan = plan.clone();
    let b = h.edge_count();
    let mut rank = plan.start;
    let iter = std::iter::from_fn(move || loop {
        if rank > plan.end {
            return None;
        }
        let removed = unrank_combination(b, plan.k, rank - 1);
        rank = rank.saturating_add(plan.increment);
        let mut sub = h.remove_edges(&removed);
        if plan.renormalize_output {
            sub = sub.renormalize();
        }
        if plan.drop_disconnected && !sub.is_connected() {
            continue;
        }
        return Some(sub);
    });
    Ok(iter)
}

/// Label-sensitive fingerprint: the renormalized edge list with sorted
/// vertices and sorted edges. Equal fingerprints mean equal hypergraphs up to
/// within-edge order and edge order after renormalization — not isomorphism.
pub fn exact_fingerprint(h: &Hypergraph) -> Vec<u16> {
    let r = h.renormalize();
    let mut edges: Vec<[u16; 4]> = r
        .edges()
        .iter()
        .map(|e| e.sorted().map(|v| v.0 as u16))
        .collect();
    edges.sort_unstable();
    let mut out = Vec::with_capacity(edges.len() * 4 + 1);
    out.push(r.vertex_count() as u16);
    for e in edges {
        out.extend_from_slice(&e);
    }
    out
}

/// Removes exact duplicates, keeping first occurrences in order.
pub fn dedupe_exact<I>(stream: I) -> impl Iterator<Item = Hypergraph>
where
    I: IntoIterator<Item = Hypergraph>,
{
    let mut seen: HashSet<Vec<u16>> = HashSet::new();
    stream
        .into_iter()
        .filter(move |h| seen.insert(exact_fingerprint(h)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::mmp::parse;

    fn h(text: &str) -> Hypergraph {
        parse(text).unwrap().hypergraph
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(75, 1), 75);
        assert_eq!(binomial(75, 2), 2775);
        assert_eq!(binomial(13, 13), 1);
        assert_eq!(binomial(5, 6), 0);
        // Pascal identity spot check at the sizes the pipeline uses
        for k in 1..75 {
            assert_eq!(binomial(75, k), binomial(74, k - 1) + binomial(74, k));
        }
    }

    #[test]
    fn count_matches_binomial() {
        let g = h(corpus::SET_60_75);
        assert_eq!(count_strips(&g, 1).unwrap(), 75);
        assert_eq!(count_strips(&g, 2).unwrap(), 2775);
        assert_eq!(count_strips(&g, 56).unwrap(), binomial(75, 56));
        assert!(count_strips(&g, 76).is_err());
    }

    #[test]
    fn unrank_rank_round_trip_exhaustive() {
        for n in 0..=10usize {
            for k in 0..=n {
                for rank in 0..binomial(n, k) {
                    let combo = unrank_combination(n, k, rank);
                    assert_eq!(combo.len(), k);
                    assert!(combo.windows(2).all(|w| w[0] < w[1]));
                    assert_eq!(rank_combination(n, &combo), rank);
                }
            }
        }
        // larger sizes, sampled ranks
        for n in [20usize, 40, 75] {
            for k in [2usize, 5, n / 2] {
                let total = binomial(n, k);
                for probe in 0..50u128 {
                    let rank = probe * (total / 50).max(1) % total;
                    let combo = unrank_combination(n, k, rank);
                    assert_eq!(rank_combination(n, &combo), rank);
                }
            }
        }
    }

    #[test]
    fn unranking_is_lexicographic() {
        let all: Vec<Vec<usize>> = (0..binomial(6, 3))
            .map(|r| unrank_combination(6, 3, r))
            .collect();
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn strip_one_from_26_13() {
        let g = h(corpus::SET_26_13);
        let plan = StripPlan::full(&g, 1).unwrap();
        let subs: Vec<_> = enumerate_strips(&g, &plan).unwrap().collect();
        assert_eq!(subs.len(), 13);
        assert!(subs.iter().all(|s| s.edge_count() == 12));
    }

    #[test]
    fn no_single_removal_disconnects_60_75() {
        let g = h(corpus::SET_60_75);
        let mut plan = StripPlan::full(&g, 1).unwrap();
        plan.drop_disconnected = true;
        let count = enumerate_strips(&g, &plan).unwrap().count();
        assert_eq!(count, 75);
    }

    #[test]
    fn range_partition_equals_full_enumeration() {
        let g = h(corpus::SET_26_13);
        let full = StripPlan::full(&g, 2).unwrap();
        let all: Vec<_> = enumerate_strips(&g, &full).unwrap().collect();
        assert_eq!(all.len(), binomial(13, 2) as usize);

        let mut merged = Vec::new();
        let total = binomial(13, 2);
        let cut = total / 3;
        for (start, end) in [(1, cut), (cut + 1, 2 * cut), (2 * cut + 1, total)] {
            let shard = StripPlan {
                start,
                end,
                ..full.clone()
            };
            merged.extend(enumerate_strips(&g, &shard).unwrap());
        }
        assert_eq!(all, merged);
    }

    #[test]
    fn increment_samples_congruent_ranks() {
        let g = h(corpus::SET_26_13);
        let plan = StripPlan {
            increment: 7,
            ..StripPlan::full(&g, 2).unwrap()
        };
        let sampled = enumerate_strips(&g, &plan).unwrap().count();
        let expected = (binomial(13, 2) + 6) / 7;
        assert_eq!(sampled as u128, expected);
    }

    #[test]
    fn invalid_plans_are_rejected() {
        let g = h(corpus::SET_26_13);
        let mut plan = StripPlan::full(&g, 1).unwrap();
        plan.end = 14;
        assert!(matches!(
            enumerate_strips(&g, &plan).err(),
            Some(StripError::BadRange { .. })
        ));
        let mut plan = StripPlan::full(&g, 1).unwrap();
        plan.increment = 0;
        assert_eq!(enumerate_strips(&g, &plan).err(), Some(StripError::ZeroIncrement));
    }

    #[test]
    fn dedupe_keeps_first_occurrences() {
        let a = h("1234,4567.");
        let b = h("1234,4567,789A.");
        let out: Vec<_> = dedupe_exact(vec![a.clone(), a.clone(), b.clone()]).collect();
        assert_eq!(out, vec![a, b]);
    }

    #[test]
    fn two_pass_single_strips_collapse_to_pairs() {
        // removing e_i then e_j equals removing e_j then e_i
        let g = h(corpus::SET_60_75);
        let mut two_pass = Vec::new();
        let outer = StripPlan {
            renormalize_output: false,
            ..StripPlan::full(&g, 1).unwrap()
        };
        for sub in enumerate_strips(&g, &outer).unwrap() {
            let inner = StripPlan {
                renormalize_output: false,
                ..StripPlan::full(&sub, 1).unwrap()
            };
            two_pass.extend(enumerate_strips(&sub, &inner).unwrap());
        }
        assert_eq!(two_pass.len(), 75 * 74);
        let distinct = dedupe_exact(two_pass).count();
        assert_eq!(distinct, 2775);
    }
}

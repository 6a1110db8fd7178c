//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! per checked property (visible with `cargo test -- --nocapture`, or on
//! failure).

use std::collections::HashSet;

use ksforge::coloring::{find_coloring, is_noncolorable};
use ksforge::corpus;
use ksforge::geometry::{find_assignment, generate_600cell, verify_assignment};
use ksforge::iso::{are_isomorphic, canonical_form};
use ksforge::loops::{max_loop_with_budget, DEFAULT_NODE_BUDGET};
use ksforge::mmp::{parse, Edge, Hypergraph, VertexId};
use ksforge::parity::{parity_proof, parity_subset_search};
use ksforge::pipeline::{descend, is_critical, DescentConfig};
use ksforge::strip::{binomial, rank_combination, unrank_combination};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

fn h(text: &str) -> Hypergraph {
    parse(text).unwrap().hypergraph
}

fn report(criterion: u32, pass: bool, what: &str) -> bool {
    println!(
        "criterion {criterion}: {} - {what}",
        if pass { "PASS" } else { "FAIL" }
    );
    pass
}

#[test]
fn criterion_01_corpus_regression() {
    let mut ok = true;
    for entry in corpus::ALL {
        let parsed = parse(entry.mmp);
        ok &= report(1, parsed.is_ok(), &format!("{} parses", entry.name));
        let g = parsed.unwrap().hypergraph;
        ok &= report(
            1,
            g.vertex_count() == entry.vertex_count && g.edge_count() == entry.block_count,
            &format!(
                "{} has {} vertices and {} blocks",
                entry.name, entry.vertex_count, entry.block_count
            ),
        );
    }
    let g = h(corpus::SET_26_13);
    ok &= report(1, g.degrees().iter().all(|&d| d == 2), "26-13 degrees all 2");
    let g = h(corpus::SET_60_75);
    ok &= report(1, g.degrees().iter().all(|&d| d == 5), "60-75 degrees all 5");
    assert!(ok, "criterion 1 failed");
}

#[test]
fn criterion_02_noncolorability() {
    let mut ok = true;
    for entry in corpus::ALL {
        ok &= report(
            2,
            is_noncolorable(&h(entry.mmp)),
            &format!("{} is non-colorable", entry.name),
        );
    }
    for entry in corpus::ALL.iter().filter(|e| e.critical) {
        let g = h(entry.mmp);
        let all_colorable = (0..g.edge_count()).all(|i| {
            let sub = g.remove_edges(&[i]);
            match find_coloring(&sub) {
                Some(c) => c.is_admissible(&sub),
                None => false,
            }
        });
        ok &= report(
            2,
            all_colorable,
            &format!("every single-block strip of {} is colorable", entry.name),
        );
    }
    assert!(ok, "criterion 2 failed");
}

#[test]
fn criterion_03_criticality() {
    let mut ok = true;
    for entry in corpus::ALL {
        ok &= report(
            3,
            is_critical(&h(entry.mmp)) == entry.critical,
            &format!("{} critical = {}", entry.name, entry.critical),
        );
    }
    assert!(ok, "criterion 3 failed");
}

#[test]
fn criterion_04_maximal_loop_orders() {
    let mut ok = true;
    for entry in corpus::ALL {
        let Some(want) = entry.max_loop_order else {
            continue;
        };
        let got = max_loop_with_budget(&h(entry.mmp), DEFAULT_NODE_BUDGET);
        ok &= report(
            4,
            got.complete && got.order == want,
            &format!("{} maximal loop order {} (found {})", entry.name, want, got.order),
        );
        if let Some(witness) = &got.witness {
            ok &= report(
                4,
                witness.verify(&h(entry.mmp)),
                &format!("{} witness verifies", entry.name),
            );
        }
    }
    assert!(
        ok,
        "criterion 4 failed: the 42-24 documented order 14 is not reproducible \
         under the loop definition validated by the twelve figure-backed values \
         (search and an independent chordless-cycle check both give 13)"
    );
}

#[test]
fn criterion_05_parity() {
    let mut ok = true;
    for entry in corpus::ALL {
        // the N = 2T two-occurrence sets
        if entry.vertex_count == 2 * entry.block_count && entry.critical {
            let v = parity_proof(&h(entry.mmp));
            ok &= report(5, v.holds, &format!("parity proof holds for {}", entry.name));
        }
    }
    let v = parity_proof(&h(corpus::SET_42_24));
    ok &= report(5, !v.holds, "parity proof fails for 42-24");
    ok &= report(
        5,
        v.offending_vertices.contains(&VertexId(1)),
        "42-24 offending vertices include '2'",
    );
    assert!(ok, "criterion 5 failed");
}

#[test]
fn criterion_06_600cell_construction() {
    let sys = generate_600cell();
    let mut ok = true;
    ok &= report(6, sys.rays().len() == 60, "60 rays");
    ok &= report(6, sys.tetrads().len() == 75, "75 tetrads");
    ok &= report(
        6,
        sys.orthogonality_degrees().iter().all(|&d| d == 15),
        "every ray orthogonal to exactly 15 others",
    );
    ok &= report(
        6,
        sys.tetrad_memberships().iter().all(|&m| m == 5),
        "every ray in exactly 5 tetrads",
    );
    assert!(ok, "criterion 6 failed");
}

#[test]
fn criterion_07_realizability() {
    let pool = generate_600cell();
    let mut ok = true;
    for name in ["60-75", "26-13", "30-15a"] {
        let entry = corpus::by_name(name).unwrap();
        let g = h(entry.mmp);
        let pass = match find_assignment(&g, &pool) {
            Some(m) => verify_assignment(&g, &pool, &m),
            None => false,
        };
        ok &= report(7, pass, &format!("{name} realizable in the 600-cell pool"));
    }
    assert!(ok, "criterion 7 failed");
}

#[test]
fn criterion_08_parity_search() {
    let g = h(corpus::SET_60_75);
    let mut ok = true;
    for t in [7usize, 9, 11] {
        let n = parity_subset_search(&g, t).unwrap().len();
        ok &= report(8, n == 0, &format!("T={t}: no two-occurrence subsets (found {n})"));
    }
    let solutions = parity_subset_search(&g, 13).unwrap();
    let ray_sets: HashSet<Vec<usize>> = solutions
        .iter()
        .map(|sol| {
            let mut covered: Vec<usize> = sol
                .iter()
                .flat_map(|&ei| g.edges()[ei].vertices().iter().map(|v| v.index()))
                .collect();
            covered.sort_unstable();
            covered.dedup();
            covered
        })
        .collect();
    ok &= report(
        8,
        ray_sets.len() == 1800,
        &format!("T=13: 1800 distinct covered-ray sets (found {})", ray_sets.len()),
    );
    let base = canonical_form(&h(corpus::SET_26_13));
    let all_are_26_13 = solutions.iter().all(|sol| {
        let sub = g.edge_subset(sol).renormalize();
        canonical_form(&sub) == base
    });
    ok &= report(
        8,
        all_are_26_13,
        "all T=13 solutions are mutually isomorphic and isomorphic to 26-13",
    );
    assert!(ok, "criterion 8 failed");
}

#[test]
fn criterion_09_sampled_census() {
    let mut ok = true;
    let g = h(corpus::SET_60_75);

    // seeded descent to 15 blocks recovers at least one of the 30-15 trio
    let cfg = DescentConfig {
        seed: 1,
        target_blocks: 15,
        level_cap: 800,
        children_per_parent: 3,
        full_enumeration_below: 24,
        jump_to: Some(55),
        jump_samples: 1500,
        iso_dedupe_max_blocks: 32,
        drop_disconnected: true,
        critical_max_blocks: 25,
        jobs: 4,
    };
    let records = descend(&g, &cfg, None).unwrap();
    let trio: Vec<_> = [corpus::SET_30_15A, corpus::SET_30_15B, corpus::SET_30_15C]
        .iter()
        .map(|s| canonical_form(&h(s)))
        .collect();
    let recovered = records
        .iter()
        .filter(|r| trio.contains(&canonical_form(&h(&r.canonical_mmp))))
        .count();
    ok &= report(
        9,
        recovered > 0,
        &format!(
            "seeded census to 15 blocks recovers a 30-15 ({} of {} records)",
            recovered,
            records.len()
        ),
    );

    // parity-search seeding recovers 26-13 at 13 blocks
    let sols = parity_subset_search(&g, 13).unwrap();
    let first = g.edge_subset(&sols[0]).renormalize();
    let found_26_13 = are_isomorphic(&first, &h(corpus::SET_26_13)).is_some();
    ok &= report(9, found_26_13, "parity-search seeding recovers 26-13");

    // no KS set with <= 12 blocks: the parity route is exhaustive and the
    // colorability check clears a seeded 12-block sample
    for t in [1usize, 3, 5, 7, 9, 11] {
        let n = parity_subset_search(&g, t).unwrap().len();
        ok &= report(9, n == 0, &format!("exhaustive parity search T={t} empty"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let total = binomial(75, 63);
    let mut noncolorable_found = 0usize;
    for _ in 0..20_000 {
        let rank = rng.gen::<u128>() % total;
        let removed = unrank_combination(75, 63, rank);
        let sub = g.remove_edges(&removed);
        if is_noncolorable(&sub) {
            noncolorable_found += 1;
        }
    }
    ok &= report(
        9,
        noncolorable_found == 0,
        &format!("20000 seeded 12-block samples all colorable ({noncolorable_found} were not)"),
    );
    assert!(ok, "criterion 9 failed");
}

#[test]
fn criterion_10_property_suites() {
    let mut ok = true;

    // coloring verdicts equal literal 2^N enumeration on a generated bank
    fn brute_force_colorable(g: &Hypergraph) -> bool {
        let n = g.vertex_count();
        'mask: for mask in 0u32..(1 << n) {
            for e in g.edges() {
                let ones = e
                    .vertices()
                    .iter()
                    .filter(|v| mask >> v.index() & 1 == 1)
                    .count();
                if ones != 1 {
                    continue 'mask;
                }
            }
            return true;
        }
        false
    }
    let mut rng = StdRng::seed_from_u64(1000);
    let mut bank: Vec<Hypergraph> = vec![h("1234,1256,3456.")];
    while bank.len() < 250 {
        let n = rng.gen_range(4..=12);
        let b = rng.gen_range(1..=6);
        let mut edges: Vec<Edge> = Vec::new();
        let mut tries = 0;
        while edges.len() < b && tries < 60 {
            tries += 1;
            let mut picks: Vec<u32> = (0..n as u32).collect();
            picks.shuffle(&mut rng);
            let e = Edge::new([
                VertexId(picks[0]),
                VertexId(picks[1]),
                VertexId(picks[2]),
                VertexId(picks[3]),
            ])
            .unwrap();
            if !edges.contains(&e) && edges.iter().all(|o| o.shared_with(&e) <= 2) {
                edges.push(e);
            }
        }
        bank.push(Hypergraph::new(n, edges).unwrap().renormalize());
    }
    let agree = bank
        .iter()
        .all(|g| find_coloring(g).is_some() == brute_force_colorable(g));
    ok &= report(
        10,
        agree,
        "coloring verdicts equal 2^N brute force on a 250-instance bank (B <= 6)",
    );

    // combination unranking round-trips exhaustively for n <= 20
    let mut round_trips = true;
    for n in 0..=20usize {
        for k in 0..=n {
            for rank in 0..binomial(n, k) {
                let combo = unrank_combination(n, k, rank);
                if rank_combination(n, &combo) != rank {
                    round_trips = false;
                }
            }
        }
    }
    ok &= report(10, round_trips, "unrank/rank round-trips exhaustively to n = 20");

    // canonical forms invariant under 100 random relabelings per corpus set
    let mut rng = StdRng::seed_from_u64(2000);
    let mut invariant = true;
    for entry in corpus::ALL {
        let g = h(entry.mmp);
        let base = canonical_form(&g);
        for _ in 0..100 {
            let n = g.vertex_count();
            let mut perm: Vec<u32> = (0..n as u32).collect();
            perm.shuffle(&mut rng);
            let mut edges: Vec<Edge> = g
                .edges()
                .iter()
                .map(|e| Edge::new(e.vertices().map(|v| VertexId(perm[v.index()]))).unwrap())
                .collect();
            edges.shuffle(&mut rng);
            let p = Hypergraph::new(n, edges).unwrap();
            if canonical_form(&p) != base {
                invariant = false;
            }
        }
    }
    ok &= report(
        10,
        invariant,
        "canonical forms invariant under 100 random relabelings per corpus set",
    );
    assert!(ok, "criterion 10 failed");
}

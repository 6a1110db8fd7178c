use ksforge::iso::canonical_form;
use ksforge::mmp::parse;
use ksforge::pipeline::{descend, DescentConfig};
use ksforge::{corpus, mmp};
use std::time::Instant;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let seed: u64 = args.get(1).map(|s| s.parse().unwrap()).unwrap_or(1);
    let jump: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(55);
    let cap: usize = args.get(3).map(|s| s.parse().unwrap()).unwrap_or(1000);
    let cpp: usize = args.get(4).map(|s| s.parse().unwrap()).unwrap_or(3);
    let samples: usize = args.get(5).map(|s| s.parse().unwrap()).unwrap_or(2000);

    let start = parse(corpus::SET_60_75).unwrap().hypergraph;
    let targets = [
        canonical_form(&parse(corpus::SET_30_15A).unwrap().hypergraph),
        canonical_form(&parse(corpus::SET_30_15B).unwrap().hypergraph),
        canonical_form(&parse(corpus::SET_30_15C).unwrap().hypergraph),
    ];
    let cfg = DescentConfig {
        seed,
        target_blocks: 15,
        level_cap: cap,
        children_per_parent: cpp,
        full_enumeration_below: 24,
        jump_to: Some(jump),
        jump_samples: samples,
        iso_dedupe_max_blocks: 32,
        drop_disconnected: true,
        critical_max_blocks: 25,
        jobs: 4,
    };
    let t0 = Instant::now();
    let records = descend(&start, &cfg, None).unwrap();
    let elapsed = t0.elapsed();
    let mut hits = vec![0usize; 3];
    for r in &records {
        let h = mmp::parse(&r.canonical_mmp).unwrap().hypergraph;
        let f = canonical_form(&h);
        for (i, t) in targets.iter().enumerate() {
            if f == *t {
                hits[i] += 1;
            }
        }
    }
    let critical = records.iter().filter(|r| r.critical == Some(true)).count();
    println!(
        "seed={seed} jump={jump} cap={cap} cpp={cpp} samples={samples}: {} records, {} critical, 30-15a/b/c hits {:?}, {:.1}s",
        records.len(),
        critical,
        hits,
        elapsed.as_secs_f64()
    );
}

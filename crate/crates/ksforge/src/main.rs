use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ksforge::coloring::find_coloring;
use ksforge::geometry::{find_assignment, generate_600cell, verify_assignment};
use ksforge::iso::{canonical_hypergraph, dedupe_iso};
use ksforge::loops::{max_loop_with_budget, DEFAULT_NODE_BUDGET};
use ksforge::mmp::{self, Hypergraph};
use ksforge::parity::{parity_proof, parity_subset_search};
use ksforge::pipeline::{descend, is_critical, verify_corpus, verify_corpus_file, DescentConfig};
use ksforge::strip::{count_strips, enumerate_strips, StripPlan};

/// MMP hypergraph toolkit for 4-dim Kochen-Specker sets.
#[derive(Parser)]
#[command(name = "ksforge", version, about)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args)]
struct InputArg {
    /// Input file of MMP lines; '-' reads standard input.
    #[arg(default_value = "-")]
    input: String,
}

#[derive(Subcommand)]
enum Verb {
    /// Validate MMP lines and echo them back serialized.
    Parse {
        #[command(flatten)]
        input: InputArg,
        /// Renormalize vertex labels before echoing.
        #[arg(long)]
        renormalize: bool,
        /// Print vertices, blocks, and the degree profile instead.
        #[arg(long)]
        stats: bool,
    },
    /// Enumerate k-edge-removed subsets of each input hypergraph.
    Strip {
        #[command(flatten)]
        input: InputArg,
        /// Number of edges to remove.
        #[arg(short, long)]
        k: usize,
        /// First 1-based rank to emit.
        #[arg(long)]
        start: Option<u128>,
        /// Last 1-based rank to emit.
        #[arg(long)]
        end: Option<u128>,
        /// Emit only every i-th subset.
        #[arg(short, long, default_value_t = 1)]
        increment: u128,
        /// Suppress subsets that are not connected.
        #[arg(long)]
        drop_disconnected: bool,
        /// Keep the parent's vertex labels instead of renormalizing.
        #[arg(long)]
        no_renormalize: bool,
        /// Print how many subsets the plan would emit, then exit.
        #[arg(long)]
        count: bool,
    },
    /// Decide 0/1 colorability: 'K' for non-colorable, else a witness.
    Color {
        #[command(flatten)]
        input: InputArg,
    },
    /// Emit the canonical MMP line of each input.
    Canon {
        #[command(flatten)]
        input: InputArg,
    },
    /// Drop inputs isomorphic to an earlier line.
    Isodedupe {
        #[command(flatten)]
        input: InputArg,
    },
    /// Report the maximal loop order of each input.
    Loops {
        #[command(flatten)]
        input: InputArg,
        /// Also print the witness loop's edge indices.
        #[arg(long)]
        witness: bool,
        /// Search node budget.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Report the parity-proof verdict of each input.
    Parity {
        #[command(flatten)]
        input: InputArg,
    },
    /// Emit the T-tetrad two-occurrence subsets of each input.
    Paritysearch {
        #[command(flatten)]
        input: InputArg,
        /// Number of tetrads (odd).
        #[arg(short, long)]
        tetrads: usize,
        /// Keep the parent's vertex labels instead of renormalizing.
        #[arg(long)]
        no_renormalize: bool,
    },
    /// Assign 600-cell rays to each input's vertices.
    Realize {
        #[command(flatten)]
        input: InputArg,
    },
    /// Report whether each input is a critical KS set.
    Critical {
        #[command(flatten)]
        input: InputArg,
    },
    /// Strip the first input down level by level, keeping non-colorable
    /// survivors, and print census records of the final level.
    Census {
        #[command(flatten)]
        input: InputArg,
        /// Block count to descend to.
        #[arg(long)]
        target_blocks: usize,
        /// Sampling seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Population cap per level.
        #[arg(long, default_value_t = 1200)]
        level_cap: usize,
        /// Sampled children per parent at high block counts.
        #[arg(long, default_value_t = 4)]
        children_per_parent: usize,
        /// At or below this block count all children are enumerated.
        #[arg(long, default_value_t = 24)]
        full_enum_below: usize,
        /// Start by sampling random subsets straight down to this block count.
        #[arg(long)]
        jump_to: Option<usize>,
        /// Raw subsets drawn by the jump.
        #[arg(long, default_value_t = 2000)]
        jump_samples: usize,
        /// Isomorphism dedupe only runs at or below this block count.
        #[arg(long, default_value_t = 32)]
        iso_dedupe_max_blocks: usize,
        /// Criticality checks are skipped above this block count.
        #[arg(long, default_value_t = 25)]
        critical_max_blocks: usize,
        /// Checkpoint directory; an interrupted run resumes from it.
        #[arg(long)]
        resume: Option<PathBuf>,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Run the golden-data regression over the bundled corpus.
    VerifyCorpus {
        /// Check an external corpus TSV instead of the bundled one.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

fn read_input(input: &str) -> io::Result<String> {
    if input == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        fs::read_to_string(input)
    }
}

/// Parses every MMP line of the input, reporting the line number on failure.
fn parse_all(input: &str) -> Result<Vec<Hypergraph>, String> {
    let text = read_input(input).map_err(|e| format!("{input}: {e}"))?;
    let mut out = Vec::new();
    for (lineno, parsed) in mmp::parse_lines(&text) {
        match parsed {
            Ok(p) => {
                if !p.terminated {
                    eprintln!("warning: line {lineno}: missing terminal period");
                }
                out.push(p.hypergraph);
            }
            Err(e) => return Err(format!("line {lineno}: {e}")),
        }
    }
    Ok(out)
}

fn serialize_or_die(h: &Hypergraph) -> String {
    mmp::serialize(h).expect("outputs stay within the 61-label alphabet")
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut all_pass = true;

    match cli.verb {
        Verb::Parse {
            input,
            renormalize,
            stats,
        } => {
            for h in parse_all(&input.input)? {
                let h = if renormalize { h.renormalize() } else { h };
                if stats {
                    let degs = h.degrees();
                    let dmin = degs.iter().min().copied().unwrap_or(0);
                    let dmax = degs.iter().max().copied().unwrap_or(0);
                    writeln!(
                        out,
                        "{}-{} degrees {}..{} {}",
                        h.vertex_count(),
                        h.edge_count(),
                        dmin,
                        dmax,
                        if h.is_connected() {
                            "connected"
                        } else {
                            "disconnected"
                        }
                    )
                    .map_err(|e| e.to_string())?;
                } else {
                    writeln!(out, "{}", serialize_or_die(&h)).map_err(|e| e.to_string())?;
                }
            }
        }
        Verb::Strip {
            input,
            k,
            start,
            end,
            increment,
            drop_disconnected,
            no_renormalize,
            count,
        } => {
            for h in parse_all(&input.input)? {
                if count {
                    let total = count_strips(&h, k).map_err(|e| e.to_string())?;
                    writeln!(out, "{total}").map_err(|e| e.to_string())?;
                    continue;
                }
                let total = count_strips(&h, k).map_err(|e| e.to_string())?;
                let plan = StripPlan {
                    k,
                    start: start.unwrap_or(1),
                    end: end.unwrap_or(total),
                    increment,
                    drop_disconnected,
                    renormalize_output: !no_renormalize,
                };
                for sub in enumerate_strips(&h, &plan).map_err(|e| e.to_string())? {
                    writeln!(out, "{}", serialize_or_die(&sub)).map_err(|e| e.to_string())?;
                }
            }
        }
        Verb::Color { input } => {
            for h in parse_all(&input.input)? {
                match find_coloring(&h) {
                    None => writeln!(out, "K").map_err(|e| e.to_string())?,
                    Some(c) => {
                        let line: String =
                            c.values().iter().map(|&b| if b { '1' } else { '0' }).collect();
                        writeln!(out, "{line}").map_err(|e| e.to_string())?;
                    }
                }
            }
        }
        Verb::Canon { input } => {
            for h in parse_all(&input.input)? {
                let canon = canonical_hypergraph(&h.renormalize());
                writeln!(out, "{}", serialize_or_die(&canon)).map_err(|e| e.to_string())?;
            }
        }
        Verb::Isodedupe { input } => {
            let graphs: Vec<Hypergraph> = parse_all(&input.input)?
                .into_iter()
                .map(|g| g.renormalize())
                .collect();
            for h in dedupe_iso(graphs) {
                writeln!(out, "{}", serialize_or_die(&h)).map_err(|e| e.to_string())?;
            }
        }
        Verb::Loops {
            input,
            witness,
            budget,
        } => {
            for h in parse_all(&input.input)? {
                let found = max_loop_with_budget(&h, budget);
                let qualifier = if found.complete { "" } else { " (budget exceeded)" };
                if witness {
                    match &found.witness {
                        Some(l) => {
                            let edges: Vec<String> =
                                l.edges.iter().map(|e| e.to_string()).collect();
                            writeln!(out, "order {}{} edges {}", found.order, qualifier,
                                edges.join(","))
                            .map_err(|e| e.to_string())?;
                        }
                        None => writeln!(out, "order 0{qualifier}").map_err(|e| e.to_string())?,
                    }
                } else {
                    writeln!(out, "order {}{}", found.order, qualifier)
                        .map_err(|e| e.to_string())?;
                }
            }
        }
        Verb::Parity { input } => {
            for h in parse_all(&input.input)? {
                let v = parity_proof(&h);
                if v.holds {
                    writeln!(out, "holds").map_err(|e| e.to_string())?;
                } else {
                    let mut reasons = Vec::new();
                    if !v.edge_count_odd {
                        reasons.push("even block count".to_string());
                    }
                    if !v.offending_vertices.is_empty() {
                        let verts: Vec<String> =
                            v.offending_vertices.iter().map(|v| v.to_string()).collect();
                        reasons.push(format!("odd-degree vertices {}", verts.join(",")));
                    }
                    writeln!(out, "fails: {}", reasons.join("; ")).map_err(|e| e.to_string())?;
                }
            }
        }
        Verb::Paritysearch {
            input,
            tetrads,
            no_renormalize,
        } => {
            for h in parse_all(&input.input)? {
                let solutions = parity_subset_search(&h, tetrads).map_err(|e| e.to_string())?;
                for indices in solutions {
                    let mut sub = h.edge_subset(&indices);
                    if !no_renormalize {
                        sub = sub.renormalize();
                    }
                    writeln!(out, "{}", serialize_or_die(&sub)).map_err(|e| e.to_string())?;
                }
            }
        }
        Verb::Realize { input } => {
            let pool = generate_600cell();
            for h in parse_all(&input.input)? {
                match find_assignment(&h, &pool) {
                    Some(mapping) => {
                        debug_assert!(verify_assignment(&h, &pool, &mapping));
                        for (v, &ray) in mapping.iter().enumerate() {
                            writeln!(
                                out,
                                "{} : {}",
                                mmp::VertexId::from(v),
                                pool.rays()[ray]
                            )
                            .map_err(|e| e.to_string())?;
                        }
                    }
                    None => {
                        writeln!(out, "no assignment").map_err(|e| e.to_string())?;
                        all_pass = false;
                    }
                }
            }
        }
        Verb::Critical { input } => {
            for h in parse_all(&input.input)? {
                let word = if is_critical(&h) { "critical" } else { "noncritical" };
                writeln!(out, "{word}").map_err(|e| e.to_string())?;
            }
        }
        Verb::Census {
            input,
            target_blocks,
            seed,
            level_cap,
            children_per_parent,
            full_enum_below,
            jump_to,
            jump_samples,
            iso_dedupe_max_blocks,
            critical_max_blocks,
            resume,
            jobs,
        } => {
            let graphs = parse_all(&input.input)?;
            let start = graphs.first().ok_or("census needs one input hypergraph")?;
            let cfg = DescentConfig {
                seed,
                target_blocks,
                level_cap,
                children_per_parent,
                full_enumeration_below: full_enum_below,
                jump_to,
                jump_samples,
                iso_dedupe_max_blocks,
                drop_disconnected: true,
                critical_max_blocks,
                jobs,
            };
            let records =
                descend(start, &cfg, resume.as_deref()).map_err(|e| e.to_string())?;
            for r in &records {
                writeln!(out, "{}", r.to_tsv()).map_err(|e| e.to_string())?;
            }
        }
        Verb::VerifyCorpus { corpus } => {
            let report = match corpus {
                Some(path) => verify_corpus_file(&path).map_err(|e| e.to_string())?,
                None => verify_corpus(),
            };
            for c in &report.checks {
                let status = if c.pass { "PASS" } else { "FAIL" };
                let detail = if c.detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({})", c.detail)
                };
                writeln!(out, "{status} {} {}{detail}", c.set, c.property)
                    .map_err(|e| e.to_string())?;
            }
            all_pass &= report.all_pass();
        }
    }
    out.flush().map_err(|e| e.to_string())?;
    Ok(all_pass)
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

//! Runs every suite item once (timed, cold table cache), then the whole
//! `suite all` again through the command line against the warm cache, and
//! prints one verdict line per criterion.

use std::time::{Duration, Instant};

use clap::Parser;
use macdaha_cli::args::Cli;
use macdaha_cli::config::RunConfig;
use macdaha_cli::report::Record;
use macdaha_cli::{cache, suite};

const ARGV: [&str; 5] = ["macdaha", "suite", "all", "--seed", "7"];

struct Criterion {
    name: &'static str,
    budget: Duration,
    records: Vec<Record>,
    elapsed: Duration,
}

fn criterion_of(family: &str, id: &str) -> usize {
    match (family, id) {
        ("relations", _) => 1,
        ("eigenvalue", "evaluation") => 4,
        ("eigenvalue", _) => 2,
        ("duality", _) => 3,
        ("evaluation", _) => 4,
        ("norms", _) => 5,
        ("pieri", _) => 6,
        ("shift", _) => 7,
        ("gaussian", _) => 8,
        ("modular", _) => 9,
        _ => panic!("unassigned family {family}"),
    }
}

#[test]
fn acceptance() {
    let dir = std::env::temp_dir().join(format!("macdaha-acceptance-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::env::set_var(cache::ENV, &dir);

    let mins = |m: u64| Duration::from_secs(60 * m);
    let mut crit: Vec<Criterion> = [
        ("DAHA relations", 2),
        ("Y-commutativity and eigenvalue law", 5),
        ("duality", 10),
        ("evaluation", 5),
        ("constant term and norms", 10),
        ("Pieri recurrence", 5),
        ("shift operators and key lemma", 5),
        ("Gaussian", 5),
        ("modular data", 10),
    ]
    .into_iter()
    .map(|(name, m)| Criterion { name, budget: mins(m), records: vec![], elapsed: Duration::ZERO })
    .collect();

    let cli = Cli::try_parse_from(ARGV).unwrap();
    let cfg = RunConfig::from_opts(&cli.opts).unwrap();
    let items = suite::items("all", &cfg).unwrap();
    let mut all = Vec::new();
    for it in &items {
        let t = Instant::now();
        let recs = suite::run_items(std::slice::from_ref(it), 1);
        let dt = t.elapsed();
        eprintln!("  {:<10} {:<4} {:<28} {:>7.1}s", it.family, it.system, it.label, dt.as_secs_f64());
        crit[criterion_of(it.family, "") - 1].elapsed += dt;
        for r in &recs {
            crit[criterion_of(it.family, &r.id) - 1].records.push(r.clone());
        }
        all.extend(recs);
    }
    let first = suite::suite_report("all", &cfg, all).render(cfg.format);

    let t = Instant::now();
    let (code, second) = macdaha_cli::run(ARGV);
    let rerun = t.elapsed();
    let _ = std::fs::remove_dir_all(&dir);

    let mut ok = true;
    for (i, c) in crit.iter().enumerate() {
        let gating: Vec<&Record> = c.records.iter().filter(|r| r.gating).collect();
        let failed: Vec<String> = gating.iter().filter(|r| !r.pass).map(|r| format!("{} {} {}", r.id, r.system, r.detail)).collect();
        let pass = !gating.is_empty() && failed.is_empty();
        ok &= pass;
        let mut extra = String::new();
        if i == 2 {
            let points = c.records.iter().filter(|r| r.detail.get("point").is_some()).count();
            extra = format!(", {points} checks at 3 random rational points");
        }
        let within = if c.elapsed <= c.budget { "within" } else { "OVER" };
        println!(
            "criterion {:>2} {:<36} {} ({} checks{extra}; {:.1}s, {within} {}s target)",
            i + 1,
            c.name,
            if pass { "PASS" } else { "FAIL" },
            gating.len(),
            c.elapsed.as_secs_f64(),
            c.budget.as_secs()
        );
        for f in failed.iter().take(5) {
            println!("    failed: {f}");
        }
    }
    let same = code == 0 && first == second;
    ok &= same;
    println!(
        "criterion 10 {:<36} {} (suite all twice with seed 7, cold then warm cache: {} bytes, exit {code}, rerun {:.1}s)",
        "determinism",
        if same { "PASS" } else { "FAIL" },
        first.len(),
        rerun.as_secs_f64()
    );
    assert!(ok, "acceptance criteria failed");
}

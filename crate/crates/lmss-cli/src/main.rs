//! Command-line front end: analyze graphs, decide the Ψ-greedoid question,
//! run verification campaigns, generate graphs and browse the catalog.
//!
//! Exit codes: 0 success / greedoid, 1 negative decision or suite failure,
//! 2 usage or precondition error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use lmss_core::catalog::{self, NamedGraph};
use lmss_core::graph::{cycle_graph, parse_edge_list, random_graph, Graph};
use lmss_core::greedoid::{self, DeciderError, GreedoidEvidence, GreedoidVerdict};
use lmss_core::matching::{self, Matching, MATCHING_ENUM_CAP};
use lmss_core::stable::{self, PSI_CAP};
use lmss_core::verify::{run_campaign, CampaignSummary, CorpusSpec, Suite};
use lmss_core::VertexSet;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "lmss", version, about = "Stable sets, matchings and local maximum stable set greedoids on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one graph.
    Analyze {
        /// Edge-list file ("n <count>" header, one "u v" pair per line).
        input: Option<PathBuf>,
        /// Use a named catalog graph instead of a file.
        #[arg(long)]
        catalog: Option<String>,
        /// Machine-readable output.
        #[arg(long)]
        json: bool,
    },
    /// Decide whether Ψ(G) is a greedoid.
    Decide {
        input: Option<PathBuf>,
        #[arg(long)]
        catalog: Option<String>,
        /// Decision method; auto tries theorem10, then theorem33, then the
        /// oracle, and reports which one applied.
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite over a graph corpus.
    Verify {
        /// theorem10|theorem33|theorem7|theorem5|theorem4|theorem1|lemma1|corollary1|matching|all
        #[arg(long)]
        suite: String,
        /// Exhaustive corpus over all labeled graphs with up to N vertices
        /// (default 7; 8 requires --slow).
        #[arg(long, value_name = "N")]
        exhaustive: Option<usize>,
        /// Random corpus: N P SEED COUNT (graph i uses seed SEED+i).
        #[arg(long, num_args = 4, value_names = ["N", "P", "SEED", "COUNT"])]
        random: Option<Vec<String>>,
        /// Corona bases corpus cap for corollary1 (same graphs as
        /// --exhaustive; the suite treats each graph as a corona base).
        #[arg(long, value_name = "N")]
        coronas_upto: Option<usize>,
        /// Allow the n=8 exhaustive corpus.
        #[arg(long)]
        slow: bool,
        #[arg(long)]
        json: bool,
    },
    /// Emit a graph in edge-list format.
    Generate {
        /// Cycle C_q.
        #[arg(long, value_name = "Q")]
        cycle: Option<usize>,
        /// Corona H∘K1 of the graph in the given edge-list file.
        #[arg(long, value_name = "FILE")]
        corona: Option<PathBuf>,
        /// Seeded G(n, p): N P SEED.
        #[arg(long, num_args = 3, value_names = ["N", "P", "SEED"])]
        random: Option<Vec<String>>,
    },
    /// List the named graphs and their claims.
    Catalog,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Theorem10,
    Theorem33,
    Oracle,
    Auto,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze { input, catalog, json } => cmd_analyze(input, catalog, json),
        Command::Decide {
            input,
            catalog,
            method,
            json,
        } => cmd_decide(input, catalog, method, json),
        Command::Verify {
            suite,
            exhaustive,
            random,
            coronas_upto,
            slow,
            json,
        } => cmd_verify(&suite, exhaustive, random, coronas_upto, slow, json),
        Command::Generate {
            cycle,
            corona,
            random,
        } => cmd_generate(cycle, corona, random),
        Command::Catalog => cmd_catalog(),
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

/// Resolves the graph argument: exactly one of a file path or a catalog name.
fn load_input(
    input: Option<PathBuf>,
    catalog_name: Option<String>,
) -> Result<(String, Graph, Option<NamedGraph>), String> {
    match (input, catalog_name) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            let g = parse_edge_list(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok((path.display().to_string(), g, None))
        }
        (None, Some(name)) => {
            let ng = catalog::find(&name).ok_or(format!("unknown catalog graph '{name}'"))?;
            Ok((name, ng.graph.clone(), Some(ng)))
        }
        (None, None) => Err("provide an edge-list file or --catalog <name>".into()),
        (Some(_), Some(_)) => Err("provide either a file or --catalog, not both".into()),
    }
}

fn render_set(s: VertexSet, named: Option<&NamedGraph>) -> String {
    match named {
        Some(ng) => format!("{{{}}}", ng.set_to_labels(s)),
        None => format!("{{{s}}}"),
    }
}

fn render_matching(m: &Matching, named: Option<&NamedGraph>) -> String {
    match named {
        Some(ng) => ng.matching_to_labels(m),
        None => m.to_string(),
    }
}

fn render_evidence(ev: &GreedoidEvidence, named: Option<&NamedGraph>) -> String {
    match ev {
        GreedoidEvidence::Axiom(greedoid::AxiomFailure::Accessibility { set }) => {
            format!("accessibility fails at {}", render_set(*set, named))
        }
        GreedoidEvidence::Axiom(greedoid::AxiomFailure::Exchange { larger, smaller }) => format!(
            "exchange fails between {} and {}",
            render_set(*larger, named),
            render_set(*smaller, named)
        ),
        GreedoidEvidence::NoPerfectMatching => "no perfect matching".into(),
        GreedoidEvidence::TwoPerfectMatchings(a, b) => format!(
            "two perfect matchings: {} and {}",
            render_matching(a, named),
            render_matching(b, named)
        ),
        GreedoidEvidence::NonUniquelyRestrictedMatching(m) => format!(
            "maximum matching {} is not uniquely restricted",
            render_matching(m, named)
        ),
        GreedoidEvidence::NonKeNeighborhood(bad) => format!(
            "closed neighborhood of {} is not K\u{f6}nig-Egerv\u{e1}ry (alpha={}, mu={}, n={})",
            render_set(bad.set, named),
            bad.numbers.alpha,
            bad.numbers.mu,
            bad.numbers.n
        ),
    }
}

#[derive(Serialize)]
struct GreedoidLine {
    path: String,
    is_greedoid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

impl GreedoidLine {
    fn from_verdict(v: &GreedoidVerdict, named: Option<&NamedGraph>) -> Self {
        GreedoidLine {
            path: v.path.to_string(),
            is_greedoid: v.is_greedoid,
            witness: v.evidence.as_ref().map(|e| render_evidence(e, named)),
        }
    }
}

#[derive(Serialize)]
struct AnalysisReport {
    graph: String,
    n: usize,
    edges: usize,
    girth: String,
    triangle_free: bool,
    alpha: usize,
    mu: usize,
    deficit: usize,
    well_covered: bool,
    very_well_covered: bool,
    konig_egervary: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    psi_size: Option<usize>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    psi: Vec<String>,
    greedoid: Vec<GreedoidLine>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    skipped: Vec<String>,
}

fn cmd_analyze(input: Option<PathBuf>, catalog_name: Option<String>, json: bool) -> ExitCode {
    let (id, g, named) = match load_input(input, catalog_name) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let named = named.as_ref();
    let n = g.vertex_count();
    let alpha = stable::alpha(&g);
    let mu = matching::mu(&g);
    let well_covered = stable::is_well_covered(&g).holds;
    let very_well_covered = stable::is_very_well_covered_definition(&g).holds;
    let ke = matching::is_konig_egervary(&g).holds;
    let mut skipped = Vec::new();

    let (psi_size, psi) = match stable::enumerate_psi(&g) {
        Ok(family) => {
            // Set-family serialization: one set per line, braces-free,
            // comma-separated labels.
            let members: Vec<String> = if family.len() <= 64 {
                family
                    .iter()
                    .map(|s| match named {
                        Some(ng) => ng.set_to_labels(s),
                        None => s.to_string(),
                    })
                    .collect()
            } else {
                Vec::new()
            };
            (Some(family.len()), members)
        }
        Err(_) => {
            skipped.push(format!("psi skipped: n exceeds cap {PSI_CAP}"));
            (None, Vec::new())
        }
    };

    let mut greedoid = Vec::new();
    match greedoid::psi_greedoid_oracle(&g) {
        Ok(v) => greedoid.push(GreedoidLine::from_verdict(&v, named)),
        Err(_) => skipped.push(format!("greedoid oracle skipped: n exceeds cap {PSI_CAP}")),
    }
    match greedoid::decide_theorem10(&g) {
        Ok(v) => greedoid.push(GreedoidLine::from_verdict(&v, named)),
        Err(e) => skipped.push(format!("theorem10 skipped: {e}")),
    }
    match greedoid::decide_theorem33(&g) {
        Ok(v) => greedoid.push(GreedoidLine::from_verdict(&v, named)),
        Err(e) => skipped.push(format!("theorem33 skipped: {e}")),
    }

    let report = AnalysisReport {
        graph: id,
        n,
        edges: g.edge_count(),
        girth: g.girth().to_string(),
        triangle_free: g.is_triangle_free(),
        alpha,
        mu,
        deficit: n - alpha - mu,
        well_covered,
        very_well_covered,
        konig_egervary: ke,
        psi_size,
        psi,
        greedoid,
        skipped,
    };

    // Internal consistency: these hold by theorem, so a violation is a bug.
    assert!(!report.very_well_covered || (report.well_covered && report.konig_egervary));
    assert_eq!(report.deficit == 0, report.konig_egervary);
    let paths: Vec<bool> = report.greedoid.iter().map(|l| l.is_greedoid).collect();
    assert!(paths.windows(2).all(|w| w[0] == w[1]), "decision paths disagree");

    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        print_analysis(&report);
    }
    ExitCode::SUCCESS
}

fn print_analysis(r: &AnalysisReport) {
    println!("graph: {}", r.graph);
    println!("n: {}  edges: {}  girth: {}", r.n, r.edges, r.girth);
    println!("triangle-free: {}", r.triangle_free);
    println!(
        "alpha: {}  mu: {}  deficit (n-alpha-mu): {}",
        r.alpha, r.mu, r.deficit
    );
    println!("well-covered: {}", r.well_covered);
    println!("very-well-covered: {}", r.very_well_covered);
    println!("konig-egervary: {}", r.konig_egervary);
    if let Some(size) = r.psi_size {
        if r.psi.is_empty() {
            println!("psi: {size} members");
        } else {
            println!("psi ({size} members, one set per line):");
            for s in &r.psi {
                println!("  {s}");
            }
        }
    }
    for line in &r.greedoid {
        match &line.witness {
            Some(w) => println!(
                "greedoid ({}): {} ({w})",
                line.path, line.is_greedoid
            ),
            None => println!("greedoid ({}): {}", line.path, line.is_greedoid),
        }
    }
    for s in &r.skipped {
        println!("{s}");
    }
}

#[derive(Serialize)]
struct DecisionReport {
    graph: String,
    is_greedoid: bool,
    path: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

fn cmd_decide(
    input: Option<PathBuf>,
    catalog_name: Option<String>,
    method: Method,
    json: bool,
) -> ExitCode {
    let (id, g, named) = match load_input(input, catalog_name) {
        Ok(v) => v,
        Err(e) => return usage_error(&e),
    };
    let named = named.as_ref();
    let oracle = |g: &Graph| greedoid::psi_greedoid_oracle(g).map_err(DeciderError::from);
    let verdict = match method {
        Method::Theorem10 => greedoid::decide_theorem10(&g),
        Method::Theorem33 => greedoid::decide_theorem33(&g),
        Method::Oracle => oracle(&g),
        Method::Auto => greedoid::decide_theorem10(&g)
            .or_else(|_| greedoid::decide_theorem33(&g))
            .or_else(|_| oracle(&g)),
    };
    let verdict = match verdict {
        Ok(v) => v,
        Err(e) => return usage_error(&e.to_string()),
    };
    let report = DecisionReport {
        graph: id,
        is_greedoid: verdict.is_greedoid,
        path: verdict.path.to_string(),
        witness: verdict.evidence.as_ref().map(|e| render_evidence(e, named)),
    };
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("graph: {}", report.graph);
        println!(
            "decision: {}",
            if report.is_greedoid {
                "greedoid"
            } else {
                "not a greedoid"
            }
        );
        println!("path: {}", report.path);
        if let Some(w) = &report.witness {
            println!("witness: {w}");
        }
    }
    if report.is_greedoid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NEGATIVE)
    }
}

fn parse_random_spec(vals: &[String], count: Option<()>) -> Result<(usize, f64, u64, u64), String> {
    let n: usize = vals[0].parse().map_err(|_| "invalid random N")?;
    let p: f64 = vals[1].parse().map_err(|_| "invalid random P")?;
    let seed: u64 = vals[2].parse().map_err(|_| "invalid random SEED")?;
    let cnt: u64 = match count {
        Some(()) => vals[3].parse().map_err(|_| "invalid random COUNT")?,
        None => 1,
    };
    if n > MATCHING_ENUM_CAP {
        return Err(format!("random corpus requires n <= {MATCHING_ENUM_CAP}"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err("random corpus requires p in [0, 1]".into());
    }
    Ok((n, p, seed, cnt))
}

fn cmd_verify(
    suite: &str,
    exhaustive: Option<usize>,
    random: Option<Vec<String>>,
    coronas_upto: Option<usize>,
    slow: bool,
    json: bool,
) -> ExitCode {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        match Suite::from_name(suite) {
            Some(s) => vec![s],
            None => return usage_error(&format!("unknown suite '{suite}'")),
        }
    };
    let mut corpora = Vec::new();
    for cap in [exhaustive, coronas_upto].into_iter().flatten() {
        let limit = if slow { 8 } else { 7 };
        if cap > limit {
            return usage_error(&format!(
                "exhaustive corpus capped at n={limit}{}",
                if slow { "" } else { " (use --slow for 8)" }
            ));
        }
        corpora.push(CorpusSpec::Exhaustive { max_n: cap });
    }
    if let Some(vals) = &random {
        match parse_random_spec(vals, Some(())) {
            Ok((n, p, seed, count)) => corpora.push(CorpusSpec::Random { n, p, seed, count }),
            Err(e) => return usage_error(&e),
        }
    }
    if corpora.is_empty() {
        corpora.push(CorpusSpec::Exhaustive { max_n: 7 });
    }

    let summaries: Vec<CampaignSummary> = suites
        .iter()
        .map(|&s| run_campaign(s, &corpora))
        .collect();
    let failed = summaries.iter().any(|s| !s.passed());
    if json {
        println!("{}", serde_json::to_string_pretty(&summaries).unwrap());
    } else {
        for s in &summaries {
            println!(
                "suite={} corpus=[{}] scanned={} in_scope={} agreements={} disagreements={} wall={:.2}s",
                s.suite,
                s.corpus,
                s.scanned,
                s.in_scope,
                s.agreements,
                s.disagreements.len(),
                s.wall.as_secs_f64()
            );
            for d in &s.disagreements {
                println!("  disagreement: {}", d.detail);
                for line in d.graph.lines() {
                    println!("    {line}");
                }
            }
        }
    }
    if failed {
        ExitCode::from(EXIT_NEGATIVE)
    } else {
        ExitCode::SUCCESS
    }
}

fn cmd_generate(
    cycle: Option<usize>,
    corona: Option<PathBuf>,
    random: Option<Vec<String>>,
) -> ExitCode {
    let given = cycle.is_some() as u8 + corona.is_some() as u8 + random.is_some() as u8;
    if given != 1 {
        return usage_error("provide exactly one of --cycle, --corona, --random");
    }
    let g = if let Some(q) = cycle {
        match cycle_graph(q) {
            Ok(g) => g,
            Err(e) => return usage_error(&e.to_string()),
        }
    } else if let Some(path) = corona {
        let text = match std::fs::read_to_string(&path) {
            Ok(t) => t,
            Err(e) => return usage_error(&format!("cannot read {}: {e}", path.display())),
        };
        let base = match parse_edge_list(&text) {
            Ok(g) => g,
            Err(e) => return usage_error(&format!("{}: {e}", path.display())),
        };
        match base.corona_k1() {
            Ok(g) => g,
            Err(e) => return usage_error(&e.to_string()),
        }
    } else {
        let vals = random.unwrap();
        let (n, p, seed, _) = match parse_random_spec(&vals, None) {
            Ok(v) => v,
            Err(e) => return usage_error(&e),
        };
        match random_graph(n, p, seed) {
            Ok(g) => g,
            Err(e) => return usage_error(&e.to_string()),
        }
    };
    print!("{}", g.to_edge_list());
    ExitCode::SUCCESS
}

fn cmd_catalog() -> ExitCode {
    for ng in catalog::catalog() {
        println!(
            "{} (n={}, edges={})",
            ng.name,
            ng.graph.vertex_count(),
            ng.graph.edge_count()
        );
        for claim in &ng.claims {
            println!("  claim {}", claim.text);
        }
    }
    ExitCode::SUCCESS
}

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::json;

use diagmin::algebra::{
    buchberger_with_stats, initial_ideal, radical_height, reduce_basis, CompletionStats,
    GeneratorSet, MonomialOrder,
};
use diagmin::graph::{family, parse_edge_list, Graph};
use diagmin::ideals::build_pg;
use diagmin::structure::{
    check_edge_primes, class_group_rank, classify_basis, find_graph_with_rank, survey, Template,
};
use diagmin::suites::{parse_suites, run_suite, SuiteOptions, SURVEY_EDGE_GUARD};

use crate::report::Outcome;
use crate::CliError;

/// Largest vertex degree for which `min-primes` expands every witness.
pub const MIN_PRIMES_DEGREE_GUARD: usize = 12;

/// A family spec, or a path to an edge-list file.
pub fn load_graph(source: &str) -> Result<Graph, CliError> {
    let path = Path::new(source);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{source}: {e}")))?;
        return parse_edge_list(&text).map_err(|e| CliError::Input(format!("{source}: {e}")));
    }
    if source.contains(':') {
        return family(source).map_err(CliError::from);
    }
    Err(CliError::Input(format!(
        "{source}: no such file, and not a family spec like path:4"
    )))
}

fn to_value<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("reports serialize")
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AnalyzeReport {
    order: MonomialOrder,
    generators: GeneratorSet,
    groebner_basis: GeneratorSet,
    completion: CompletionStats,
    initial_ideal: Vec<String>,
    height: usize,
    degree_histogram: BTreeMap<u32, usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    template_counts: Option<BTreeMap<Template, usize>>,
}

pub fn analyze(g: Graph, order: MonomialOrder) -> Result<Outcome, CliError> {
    let gens = build_pg(&g, order);
    let (gb, completion) = buchberger_with_stats(&gens);
    let gb = reduce_basis(&gb);
    let ini = initial_ideal(&gb);
    let height = radical_height(&ini)?;
    let mut degree_histogram = BTreeMap::new();
    for p in gb.iter() {
        *degree_histogram.entry(p.degree()).or_insert(0) += 1;
    }
    let template_counts =
        (order == MonomialOrder::Lex).then(|| classify_basis(&gb).template_counts);

    let mut text = String::new();
    writeln!(text, "graph {g}").unwrap();
    writeln!(text, "order {order}").unwrap();
    writeln!(text, "generators ({}):", gens.len()).unwrap();
    for p in gens.iter() {
        writeln!(text, "  {p}").unwrap();
    }
    writeln!(
        text,
        "reduced Groebner basis ({} elements, {} added):",
        gb.len(),
        completion.additions
    )
    .unwrap();
    for p in gb.iter() {
        writeln!(text, "  {p}").unwrap();
    }
    let rendered: Vec<String> = ini.iter().map(ToString::to_string).collect();
    writeln!(text, "initial ideal: ({})", rendered.join(", ")).unwrap();
    writeln!(text, "height: {height}").unwrap();
    let hist: Vec<String> = degree_histogram
        .iter()
        .map(|(d, c)| format!("{d}:{c}"))
        .collect();
    writeln!(text, "degrees: {}", hist.join(" ")).unwrap();
    if let Some(counts) = &template_counts {
        let parts: Vec<String> = counts
            .iter()
            .map(|(t, c)| format!("{}:{c}", to_value(t).as_str().unwrap_or_default()))
            .collect();
        writeln!(text, "templates: {}", parts.join(" ")).unwrap();
    }

    let report = AnalyzeReport {
        order,
        generators: gens,
        groebner_basis: gb,
        completion,
        initial_ideal: rendered,
        height,
        degree_histogram,
        template_counts,
    };
    Ok(Outcome {
        command: "analyze",
        passed: true,
        text,
        results: to_value(&report),
        graph: Some(g),
    })
}

pub fn rank(g: Graph) -> Result<Outcome, CliError> {
    let r = class_group_rank(&g)?;
    let mut text = format!("graph {g}\nrank {}\n", r.rank);
    writeln!(text, "|Min(y)| = {}, edges = {}", r.min_y_count, r.m).unwrap();
    if let (Some(lo), Some(hi), Some(status)) = (r.lower_bound, r.upper_bound, r.bound_status) {
        writeln!(
            text,
            "bounds [{lo}, {hi}]: {}",
            to_value(&status).as_str().unwrap_or_default()
        )
        .unwrap();
    }
    Ok(Outcome {
        command: "rank",
        passed: true,
        text,
        results: to_value(&r),
        graph: Some(g),
    })
}

pub fn min_primes(g: Graph, edge: (usize, usize)) -> Result<Outcome, CliError> {
    let worst = g.degree(edge.0).max(g.degree(edge.1));
    if worst > MIN_PRIMES_DEGREE_GUARD {
        return Err(CliError::Resource(format!(
            "endpoint degree {worst} exceeds {MIN_PRIMES_DEGREE_GUARD}; too many witnesses to expand"
        )));
    }
    let report = check_edge_primes(&g, edge)?;
    let [i, j] = report.edge;
    let mut text = format!(
        "graph {g}\nedge {i}-{j}: {} witnesses\n",
        report.witnesses.len()
    );
    for d in &report.witnesses {
        writeln!(text, "  {}  height {}", d.witness, d.height).unwrap();
        writeln!(text, "    {}", d.generators).unwrap();
    }
    writeln!(
        text,
        "count {} (expected {}), heights {} (target {}), containment {}, pairwise non-containment {}",
        report.witnesses.len(),
        report.expected_count,
        report.heights_ok,
        report.target_height,
        report.containment_ok,
        report.pairwise_non_containment
    )
    .unwrap();
    Ok(Outcome {
        command: "min-primes",
        passed: report.passed(),
        text,
        results: to_value(&report),
        graph: Some(g),
    })
}

pub fn survey_cmd(m: usize, force: bool) -> Result<Outcome, CliError> {
    if m > SURVEY_EDGE_GUARD && !force {
        return Err(CliError::Resource(format!(
            "survey of {m} edges exceeds the default limit {SURVEY_EDGE_GUARD} (use --force)"
        )));
    }
    let report = survey(m, force)?;
    let mut text = format!(
        "connected graphs with {m} edges: {} (bounds [{}, {}])\n",
        report.entries.len(),
        report.lower_bound,
        report.upper_bound
    );
    for e in &report.entries {
        let tag = match (e.is_path, e.is_star) {
            (true, true) => "  path, star",
            (true, false) => "  path",
            (false, true) => "  star",
            _ => "",
        };
        writeln!(text, "  {:<40} rank {}{tag}", e.graph.to_string(), e.rank).unwrap();
    }
    let ranks: Vec<String> = report.achievable_ranks.iter().map(u64::to_string).collect();
    writeln!(text, "achievable ranks: {{{}}}", ranks.join(", ")).unwrap();
    for v in &report.violations {
        writeln!(text, "VIOLATION {v}").unwrap();
    }
    Ok(Outcome {
        command: "survey",
        passed: report.passed(),
        text,
        results: to_value(&report),
        graph: None,
    })
}

pub fn verify(suite: &str, max_edges: Option<usize>, force: bool) -> Result<Outcome, CliError> {
    let suites = parse_suites(suite).map_err(|_| {
        CliError::Input(format!(
            "unknown suite '{suite}' (expected gb, minprimes, variety, bounds, oracle or all)"
        ))
    })?;
    let opts = SuiteOptions { max_edges, force };
    let mut reports = Vec::new();
    for s in suites {
        reports.push(run_suite(s, opts)?);
    }
    let mut text = String::new();
    for r in &reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        writeln!(text, "{status} {} ({} checked)", r.name, r.checked).unwrap();
        for f in &r.failures {
            writeln!(text, "  failure: {f}").unwrap();
        }
        for n in &r.notes {
            writeln!(text, "  note: {n}").unwrap();
        }
    }
    Ok(Outcome {
        command: "verify",
        passed: reports.iter().all(|r| r.passed),
        text,
        results: json!({ "suites": reports }),
        graph: None,
    })
}

pub fn find_rank(r: u64) -> Result<Outcome, CliError> {
    let found = find_graph_with_rank(r)?;
    let text = format!("rank {r}: {} {}\n", found.label, found.graph);
    Ok(Outcome {
        command: "find-rank",
        passed: found.rank == r,
        text,
        results: to_value(&found),
        graph: None,
    })
}

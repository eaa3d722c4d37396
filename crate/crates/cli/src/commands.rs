use std::fmt::Write as _;

use cutsetkit::connectivity::{
    check_lemma_local_conn, is_connected, is_locally_strongly_connected, LocalConnectivityReport,
};
use cutsetkit::cutsets::verify_level_set_theorem;
use cutsetkit::format::{instance_to_json, instance_to_text, parse_labeling_text, poset_to_text};
use cutsetkit::grading::GradingFailure;
use cutsetkit::hypergraph::{
    balanced_coloring, exact_transversals, exchange_component_count, is_strongly_connected_h,
};
use cutsetkit::labeling::{
    descent_walk, is_el_labeling, is_supersolvable_labeling, lexicographic_chain_order,
    stanley_labeling, EdgeLabeling, IntervalVerdict,
};
use cutsetkit::lattice::lattice_ops;
use cutsetkit::{Hypergraph, Instance, Poset};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::checks::{self, any_failure, Check};
use crate::{InputError, Outcome, EXIT_OK, EXIT_VIOLATION};

/// SHA-256 of the canonical text serialization.
pub fn poset_hash(p: &Poset) -> String {
    Sha256::digest(poset_to_text(p).as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

fn finish<T: Serialize>(report: &T, text: String, checks: &[Check], as_json: bool) -> Outcome {
    Outcome {
        stdout: if as_json { json(report) } else { text },
        code: if any_failure(checks) {
            EXIT_VIOLATION
        } else {
            EXIT_OK
        },
    }
}

fn set_text(p: &Poset, set: &[usize]) -> String {
    let names: Vec<String> = set.iter().map(|&x| p.name(x)).collect();
    format!("{{{}}}", names.join(", "))
}

fn chain_text(p: &Poset, chain: &[usize]) -> String {
    let names: Vec<String> = chain.iter().map(|&x| p.name(x)).collect();
    names.join(" < ")
}

fn plain_set(set: &[usize]) -> String {
    let items: Vec<String> = set.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn write_checks(out: &mut String, checks: &[Check]) {
    if checks.is_empty() {
        return;
    }
    out.push_str("checks:\n");
    for c in checks {
        let _ = writeln!(out, "  {}: {}", c.theorem.key(), c.verdict.as_str());
    }
}

fn grading_failure_text(p: &Poset, f: &GradingFailure) -> String {
    match f {
        GradingFailure::RankJump {
            lower,
            upper,
            lower_rank,
            upper_rank,
        } => format!(
            "cover {} < {} jumps from height {lower_rank} to {upper_rank}",
            p.name(*lower),
            p.name(*upper)
        ),
        GradingFailure::UnequalChains { first, second } => format!(
            "maximal chains {} and {} differ in length",
            chain_text(p, first.elements()),
            chain_text(p, second.elements())
        ),
    }
}

pub fn generate(inst: &Instance, as_json: bool) -> String {
    if as_json {
        let mut s = instance_to_json(inst);
        s.push('\n');
        s
    } else {
        instance_to_text(inst)
    }
}

#[derive(Serialize)]
struct AnalyzeReport {
    poset_hash: String,
    elements: usize,
    covers: usize,
    bounded: bool,
    maximal_chains: u128,
    connected: bool,
    strongly_connected: bool,
    locally_strongly_connected: bool,
    pairwise_locally_strongly_connected: bool,
    ranks: Option<Vec<usize>>,
    grading_failure: Option<GradingFailure>,
    level_sets: Option<Vec<Vec<usize>>>,
    local_connectivity: Option<LocalConnectivityReport>,
    checks: Vec<Check>,
}

pub fn analyze(p: &Poset, as_json: bool) -> Outcome {
    let level = verify_level_set_theorem(p);
    let mut checks = checks::level_set_checks(&level);
    checks.retain(|c| c.theorem == checks::Theorem::StrongConnectivityGrades);
    checks.push(checks::local_connectivity_check(p));
    let report = AnalyzeReport {
        poset_hash: poset_hash(p),
        elements: p.len(),
        covers: p.covers().len(),
        bounded: p.is_bounded(),
        maximal_chains: p.count_maximal_chains(),
        connected: is_connected(p),
        strongly_connected: level.strongly_connected,
        locally_strongly_connected: is_locally_strongly_connected(p),
        pairwise_locally_strongly_connected: level.pairwise_locally_strongly_connected,
        ranks: level.grading.clone().ok(),
        grading_failure: level.grading.clone().err(),
        level_sets: level.level_sets.clone(),
        local_connectivity: check_lemma_local_conn(p).ok(),
        checks,
    };

    let mut out = String::new();
    let _ = writeln!(out, "poset hash: {}", report.poset_hash);
    let _ = writeln!(out, "elements: {}", report.elements);
    let _ = writeln!(out, "covers: {}", report.covers);
    let _ = writeln!(out, "bounded: {}", report.bounded);
    let _ = writeln!(out, "maximal chains: {}", report.maximal_chains);
    let _ = writeln!(out, "connected: {}", report.connected);
    let _ = writeln!(out, "strongly connected: {}", report.strongly_connected);
    let _ = writeln!(
        out,
        "locally strongly connected: {}",
        report.locally_strongly_connected
    );
    let _ = writeln!(
        out,
        "pairwise locally strongly connected: {}",
        report.pairwise_locally_strongly_connected
    );
    match (&report.level_sets, &report.grading_failure) {
        (Some(levels), _) => {
            let _ = writeln!(out, "graded: true");
            let _ = writeln!(out, "level sets: {}", levels.len());
            for (r, level) in levels.iter().enumerate() {
                let _ = writeln!(out, "  rank {r}: {}", set_text(p, level));
            }
        }
        (None, Some(f)) => {
            let _ = writeln!(out, "graded: false ({})", grading_failure_text(p, f));
        }
        (None, None) => {}
    }
    if let Some(r) = &report.local_connectivity {
        let _ = writeln!(out, "open intervals connected: {}", r.hypothesis_holds);
        if let Some((x, y)) = r.disconnected_interval {
            let _ = writeln!(
                out,
                "  disconnected open interval: ({}, {})",
                p.name(x),
                p.name(y)
            );
        }
    }
    write_checks(&mut out, &report.checks);
    finish(&report, out, &report.checks, as_json)
}

#[derive(Serialize)]
struct Hypotheses {
    strongly_connected: bool,
    pairwise_locally_strongly_connected: bool,
    graded: bool,
}

#[derive(Serialize)]
struct CutsetReport {
    poset_hash: String,
    elements: usize,
    maximal_chains: u128,
    cutset_count: usize,
    cutsets: Vec<Vec<usize>>,
    truncated: bool,
    pairwise_disjoint: bool,
    is_level_sets: bool,
    hypotheses: Hypotheses,
    checks: Vec<Check>,
}

pub fn cutsets(p: &Poset, limit: Option<usize>, as_json: bool) -> Outcome {
    let level = verify_level_set_theorem(p);
    let checks = checks::level_set_checks(&level);
    let all: Vec<Vec<usize>> = level.cutsets.iter().map(|c| c.members.clone()).collect();
    let shown = limit.unwrap_or(all.len()).min(all.len());
    let report = CutsetReport {
        poset_hash: poset_hash(p),
        elements: p.len(),
        maximal_chains: p.count_maximal_chains(),
        cutset_count: all.len(),
        cutsets: all[..shown].to_vec(),
        truncated: shown < all.len(),
        pairwise_disjoint: level.pairwise_disjoint,
        is_level_sets: level.cutsets_equal_level_sets,
        hypotheses: Hypotheses {
            strongly_connected: level.strongly_connected,
            pairwise_locally_strongly_connected: level.pairwise_locally_strongly_connected,
            graded: level.grading.is_ok(),
        },
        checks,
    };

    let mut out = String::new();
    let _ = writeln!(out, "poset hash: {}", report.poset_hash);
    let _ = writeln!(out, "elements: {}", report.elements);
    let _ = writeln!(out, "maximal chains: {}", report.maximal_chains);
    let _ = writeln!(
        out,
        "strongly connected: {}",
        report.hypotheses.strongly_connected
    );
    let _ = writeln!(
        out,
        "pairwise locally strongly connected: {}",
        report.hypotheses.pairwise_locally_strongly_connected
    );
    let _ = writeln!(out, "graded: {}", report.hypotheses.graded);
    let _ = writeln!(out, "cutsets: {}", report.cutset_count);
    for c in &report.cutsets {
        let _ = writeln!(out, "  {}", set_text(p, c));
    }
    if report.truncated {
        let _ = writeln!(out, "  ... {} more", report.cutset_count - shown);
    }
    let _ = writeln!(out, "pairwise disjoint: {}", report.pairwise_disjoint);
    let _ = writeln!(out, "equals level sets: {}", report.is_level_sets);
    write_checks(&mut out, &report.checks);
    finish(&report, out, &report.checks, as_json)
}

#[derive(Serialize)]
struct WalkStep {
    chain: Vec<usize>,
    word: Vec<i64>,
}

#[derive(Serialize)]
struct ElReport {
    poset_hash: String,
    lattice: bool,
    lattice_failure: Option<String>,
    semimodular: Option<bool>,
    /// `join_irreducible`, `file`, or absent when no labeling applies.
    labeling_source: Option<&'static str>,
    labels: Vec<(usize, usize, i64)>,
    labels_truncated: bool,
    is_el: Option<bool>,
    first_violation: Option<IntervalVerdict>,
    supersolvable: Option<bool>,
    descent_walk: Option<Vec<WalkStep>>,
    lexicographic_shelling: Option<bool>,
    checks: Vec<Check>,
}

pub fn el_check(
    p: &Poset,
    labeling: Option<&str>,
    limit: Option<usize>,
    as_json: bool,
) -> Result<Outcome, InputError> {
    let mut report = ElReport {
        poset_hash: poset_hash(p),
        lattice: false,
        lattice_failure: None,
        semimodular: None,
        labeling_source: None,
        labels: Vec::new(),
        labels_truncated: false,
        is_el: None,
        first_violation: None,
        supersolvable: None,
        descent_walk: None,
        lexicographic_shelling: None,
        checks: Vec::new(),
    };
    let lattice = lattice_ops(p);
    let semimodular = lattice.as_ref().ok().map(|l| l.is_semimodular());
    report.lattice = lattice.is_ok();
    report.lattice_failure = lattice.as_ref().err().map(|f| f.to_string());
    report.semimodular = semimodular;

    let lam: Option<EdgeLabeling> = match (labeling, &lattice) {
        (Some(text), _) => {
            report.labeling_source = Some("file");
            Some(parse_labeling_text(p, text)?)
        }
        (None, Ok(l)) if semimodular == Some(true) => {
            report.labeling_source = Some("join_irreducible");
            Some(stanley_labeling(l, None)?)
        }
        _ => None,
    };

    if let Some(lam) = &lam {
        let el = is_el_labeling(p, lam);
        let labels: Vec<(usize, usize, i64)> = lam.iter().map(|((x, y), k)| (x, y, k)).collect();
        let shown = limit.unwrap_or(labels.len()).min(labels.len());
        report.labels_truncated = shown < labels.len();
        report.labels = labels[..shown].to_vec();
        report.is_el = Some(el.is_el);
        report.first_violation = el.first_violation().cloned();
        report.supersolvable = Some(is_supersolvable_labeling(p, lam));
        if report.labeling_source == Some("join_irreducible") {
            report.checks.push(checks::Check {
                theorem: checks::Theorem::SemimodularEl,
                verdict: if el.is_el {
                    checks::Verdict::Pass
                } else {
                    checks::Verdict::Fail
                },
            });
        }
        if el.is_el && p.is_bounded() {
            // walk down from the lexicographically last chain
            let order = lexicographic_chain_order(p, lam);
            if let Some(start) = order.last() {
                if let Ok(walk) = descent_walk(p, lam, start) {
                    report.descent_walk = Some(
                        walk.iter()
                            .map(|c| WalkStep {
                                chain: c.elements().to_vec(),
                                word: lam.word(c.elements()),
                            })
                            .collect(),
                    );
                }
            }
        }
        let (shelling, more) = checks::labeling_checks(p, lam, el.is_el);
        report.lexicographic_shelling = Some(shelling);
        report.checks.extend(more);
    }

    let mut out = String::new();
    let _ = writeln!(out, "poset hash: {}", report.poset_hash);
    match &report.lattice_failure {
        None => {
            let _ = writeln!(out, "lattice: true");
        }
        Some(why) => {
            let _ = writeln!(out, "lattice: false ({why})");
        }
    }
    if let Some(s) = report.semimodular {
        let _ = writeln!(out, "semimodular: {s}");
    }
    match report.labeling_source {
        None => {
            let _ = writeln!(
                out,
                "labeling: none (no labeling given and not a semimodular lattice)"
            );
        }
        Some(source) => {
            let _ = writeln!(out, "labeling: {}", source.replace('_', "-"));
            for (x, y, k) in &report.labels {
                let _ = writeln!(out, "  {} < {}: {k}", p.name(*x), p.name(*y));
            }
            if report.labels_truncated {
                let _ = writeln!(out, "  ...");
            }
        }
    }
    if let Some(is_el) = report.is_el {
        let _ = writeln!(out, "EL: {is_el}");
    }
    if let Some(v) = &report.first_violation {
        let _ = writeln!(
            out,
            "  first failing interval: [{}, {}]",
            p.name(v.bottom),
            p.name(v.top)
        );
    }
    if let Some(s) = report.supersolvable {
        let _ = writeln!(out, "supersolvable labeling: {s}");
    }
    if let Some(walk) = &report.descent_walk {
        let _ = writeln!(out, "descent walk: {} steps", walk.len() - 1);
        for step in walk {
            let word: Vec<String> = step.word.iter().map(i64::to_string).collect();
            let _ = writeln!(
                out,
                "  {}  [{}]",
                chain_text(p, &step.chain),
                word.join(" ")
            );
        }
    }
    if let Some(s) = report.lexicographic_shelling {
        let _ = writeln!(out, "lexicographic order is a shelling: {s}");
    }
    write_checks(&mut out, &report.checks);
    Ok(finish(&report, out, &report.checks, as_json))
}

#[derive(Serialize)]
struct HypergraphReport {
    d: usize,
    vertices: usize,
    edges: usize,
    isolated_vertices: Vec<usize>,
    strongly_connected: bool,
    exchange_components: usize,
    transversal_count: usize,
    transversals: Vec<Vec<usize>>,
    truncated: bool,
    pairwise_disjoint: bool,
    balanced: bool,
    coloring: Option<Vec<usize>>,
    color_classes: Option<Vec<Vec<usize>>>,
    checks: Vec<Check>,
}

pub fn hypergraph(h: &Hypergraph, limit: Option<usize>, as_json: bool) -> Outcome {
    let sc = is_strongly_connected_h(h);
    let all = exact_transversals(h);
    let coloring = balanced_coloring(h);
    let classes = coloring.as_ref().map(|c| c.classes());
    let checks = checks::hypergraph_checks_with(sc, &all, classes.as_deref());
    let shown = limit.unwrap_or(all.len()).min(all.len());
    let report = HypergraphReport {
        d: h.d(),
        vertices: h.vertex_count(),
        edges: h.edges().len(),
        isolated_vertices: h.isolated_vertices(),
        strongly_connected: sc,
        exchange_components: exchange_component_count(h),
        transversal_count: all.len(),
        transversals: all[..shown].to_vec(),
        truncated: shown < all.len(),
        pairwise_disjoint: checks::pairwise_disjoint(&all),
        balanced: coloring.is_some(),
        coloring: coloring.map(|c| c.color),
        color_classes: classes,
        checks,
    };

    let mut out = String::new();
    let _ = writeln!(out, "uniformity: {}", report.d);
    let _ = writeln!(out, "vertices: {}", report.vertices);
    let _ = writeln!(out, "edges: {}", report.edges);
    if !report.isolated_vertices.is_empty() {
        let _ = writeln!(
            out,
            "isolated vertices: {}",
            plain_set(&report.isolated_vertices)
        );
    }
    let _ = writeln!(out, "strongly connected: {}", report.strongly_connected);
    let _ = writeln!(out, "exchange components: {}", report.exchange_components);
    let _ = writeln!(out, "exact transversals: {}", report.transversal_count);
    for t in &report.transversals {
        let _ = writeln!(out, "  {}", plain_set(t));
    }
    if report.truncated {
        let _ = writeln!(out, "  ... {} more", report.transversal_count - shown);
    }
    let _ = writeln!(
        out,
        "transversals pairwise disjoint: {}",
        report.pairwise_disjoint
    );
    let _ = writeln!(out, "balanced: {}", report.balanced);
    if let Some(classes) = &report.color_classes {
        let _ = writeln!(out, "color classes:");
        for c in classes {
            let _ = writeln!(out, "  {}", plain_set(c));
        }
    }
    write_checks(&mut out, &report.checks);
    finish(&report, out, &report.checks, as_json)
}

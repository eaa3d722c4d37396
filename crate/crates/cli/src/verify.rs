//! The `verify` command: every implication check over a built-in corpus and
//! seeded random instances.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use cutsetkit::cutsets::verify_level_set_theorem;
use cutsetkit::families::{
    boolean, bruhat_sym, chessboard, divisor, example_e, grid, partition, subspace,
};
use cutsetkit::{Hypergraph, Poset};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::checks::{self, Check, Theorem, Verdict};
use crate::{Outcome, EXIT_OK, EXIT_VIOLATION};

pub fn corpus_posets() -> Vec<(String, Poset)> {
    let mut out: Vec<(String, Poset)> = Vec::new();
    for n in 0..=5 {
        out.push((format!("boolean({n})"), boolean(n)));
    }
    for (q, n) in [(2, 2), (2, 3), (3, 2)] {
        out.push((format!("subspace({q},{n})"), subspace(q, n)));
    }
    for n in 1..=4 {
        out.push((format!("partition({n})"), partition(n)));
    }
    for n in [12, 30, 36, 60] {
        out.push((format!("divisor({n})"), divisor(n)));
    }
    for n in 1..=4 {
        out.push((format!("bruhat_sym({n})"), bruhat_sym(n)));
    }
    for (m, n) in [(2, 3), (3, 3)] {
        out.push((format!("grid({m},{n})"), grid(m, n, false)));
        out.push((format!("grid({m},{n},1)"), grid(m, n, true)));
    }
    out.push(("example_E".into(), example_e()));
    let small = [
        ("chain(4)", Poset::chain(4)),
        ("antichain(3)", Poset::antichain(3)),
        (
            "uneven tree",
            Poset::build(4, &[(0, 1), (1, 3), (0, 2)]).unwrap(),
        ),
        ("fence", Poset::build(4, &[(0, 2), (1, 2), (1, 3)]).unwrap()),
        (
            "pentagon",
            Poset::build(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap(),
        ),
        (
            "bowtie",
            Poset::build(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap(),
        ),
        (
            "two chains with bounds",
            Poset::chain(2)
                .disjoint_union(&Poset::chain(2))
                .bound_augment(),
        ),
    ];
    out.extend(small.into_iter().map(|(n, p)| (n.to_string(), p)));
    out
}

pub fn corpus_hypergraphs() -> Vec<(String, Hypergraph)> {
    let mut out: Vec<(String, Hypergraph)> = [(1, 3), (2, 2), (2, 3), (3, 3), (3, 4)]
        .iter()
        .map(|&(a, b)| (format!("chessboard({a},{b})"), chessboard(a, b)))
        .collect();
    for (name, p) in corpus_posets() {
        if let Ok(h) = Hypergraph::from_poset(&p) {
            out.push((format!("chains of {name}"), h));
        }
    }
    out
}

fn random_poset(rng: &mut StdRng) -> Poset {
    let n = rng.gen_range(1..=8);
    let density: f64 = rng.gen_range(0.1..0.8);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((labels[i], labels[j]));
            }
        }
    }
    let p = Poset::build(n, &pairs).expect("pairs follow a linear order");
    if rng.gen_bool(0.5) {
        p.bound_augment()
    } else {
        p
    }
}

/// A random exchange walk; with `colored`, exchanges stay inside color classes.
fn random_hypergraph(rng: &mut StdRng) -> Hypergraph {
    let d = rng.gen_range(1..=4);
    let v = rng.gen_range(d..=12);
    let colored = rng.gen_bool(0.5);
    let color: Vec<usize> = (0..v).map(|x| x % d).collect();
    let mut edge: Vec<usize> = (0..d).collect();
    let mut edges = vec![edge.clone()];
    for _ in 0..rng.gen_range(0..12) {
        let k = rng.gen_range(0..d);
        let options: Vec<usize> = (0..v)
            .filter(|x| !edge.contains(x) && (!colored || color[*x] == color[edge[k]]))
            .collect();
        if let Some(&x) = options.choose(rng) {
            edge[k] = x;
            edges.push(edge.clone());
        }
        if rng.gen_bool(0.3) {
            edge = edges.choose(rng).expect("nonempty").clone();
        }
    }
    // drop unused vertices so none is isolated
    let mut used: Vec<usize> = edges.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    let mut edges: Vec<Vec<usize>> = edges
        .iter()
        .map(|e| {
            let mut e: Vec<usize> = e
                .iter()
                .map(|x| used.binary_search(x).expect("used"))
                .collect();
            e.sort_unstable();
            e
        })
        .collect();
    edges.sort();
    edges.dedup();
    Hypergraph::new(d, used.len(), edges).expect("walk edges are uniform")
}

pub fn poset_checks(p: &Poset) -> Vec<Check> {
    let mut out = checks::level_set_checks(&verify_level_set_theorem(p));
    out.push(checks::local_connectivity_check(p));
    out.extend(checks::lattice_checks(p));
    out
}

#[derive(Default, Serialize)]
struct Tally {
    pass: usize,
    fail: usize,
    not_applicable: usize,
    failures: Vec<String>,
}

#[derive(Serialize)]
struct VerifyReport {
    seed: u64,
    corpus_posets: usize,
    corpus_hypergraphs: usize,
    random_posets: usize,
    random_hypergraphs: usize,
    theorems: BTreeMap<&'static str, Tally>,
    all_pass: bool,
}

pub fn run(seed: u64, samples: usize, as_json: bool) -> Outcome {
    let mut tallies: BTreeMap<Theorem, Tally> = Theorem::ALL
        .iter()
        .map(|&t| (t, Tally::default()))
        .collect();
    let mut record = |name: &str, checks: Vec<Check>| {
        for c in checks {
            let t = tallies.get_mut(&c.theorem).expect("all theorems tallied");
            match c.verdict {
                Verdict::Pass => t.pass += 1,
                Verdict::NotApplicable => t.not_applicable += 1,
                Verdict::Fail => {
                    t.fail += 1;
                    t.failures.push(name.to_string());
                }
            }
        }
    };

    let posets = corpus_posets();
    let hypergraphs = corpus_hypergraphs();
    for (name, p) in &posets {
        record(name, poset_checks(p));
    }
    for (name, h) in &hypergraphs {
        record(name, checks::hypergraph_checks(h));
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for i in 0..samples {
        let p = random_poset(&mut rng);
        record(
            &format!("random poset #{i} covers {:?}", p.covers()),
            poset_checks(&p),
        );
    }
    for i in 0..samples {
        let h = random_hypergraph(&mut rng);
        record(
            &format!("random hypergraph #{i} edges {:?}", h.edges()),
            checks::hypergraph_checks(&h),
        );
    }

    let all_pass = tallies.values().all(|t| t.fail == 0);
    let report = VerifyReport {
        seed,
        corpus_posets: posets.len(),
        corpus_hypergraphs: hypergraphs.len(),
        random_posets: samples,
        random_hypergraphs: samples,
        theorems: tallies
            .into_iter()
            .map(|(t, tally)| (t.key(), tally))
            .collect(),
        all_pass,
    };

    let stdout = if as_json {
        let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "corpus: {} posets, {} hypergraphs; random: {samples} posets, {samples} hypergraphs (seed {seed})",
            report.corpus_posets, report.corpus_hypergraphs
        );
        for t in Theorem::ALL {
            let tally = &report.theorems[t.key()];
            let status = if tally.fail > 0 { "FAIL" } else { "ok" };
            let _ = writeln!(
                out,
                "{status:<4} {}: pass {}, fail {}, n/a {}",
                t.key(),
                tally.pass,
                tally.fail,
                tally.not_applicable
            );
            let _ = writeln!(out, "     {}", t.statement());
            for f in &tally.failures {
                let _ = writeln!(out, "     failed on {f}");
            }
        }
        let _ = writeln!(
            out,
            "result: {}",
            if all_pass {
                "all checks pass"
            } else {
                "violations found"
            }
        );
        out
    };
    Outcome {
        stdout,
        code: if all_pass { EXIT_OK } else { EXIT_VIOLATION },
    }
}

//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{
    brute_cutsets, brute_exact_hits, corpus, pairwise_disjoint, random_hypergraph,
    random_poset_mixed, sorted,
};
use cutsetkit::connectivity::{
    check_lemma_local_conn, exchange_adjacent, interval_strongly_connected,
    is_pairwise_locally_strongly_connected, is_strongly_connected,
};
use cutsetkit::cutsets::{enumerate_antichain_cutsets, verify_level_set_theorem};
use cutsetkit::families::{self, boolean, chessboard, example_e, inversions, partition, subspace};
use cutsetkit::grading::{compute_grading, level_sets};
use cutsetkit::hypergraph::{balanced_coloring, exact_transversals, is_strongly_connected_h};
use cutsetkit::labeling::{
    descent_walk, is_el_labeling, is_shelling, is_supersolvable_labeling,
    lexicographic_chain_order, modular_chain_labeling, stanley_labeling,
};
use cutsetkit::lattice::lattice_ops;
use cutsetkit::{Hypergraph, Poset};
use rand::rngs::StdRng;
use rand::SeedableRng;

const SEED: u64 = 0x5eed_c075;
const RANDOM_POSETS: usize = 600;
const RANDOM_HYPERGRAPHS: usize = 600;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cutset_sets(p: &Poset) -> Vec<Vec<usize>> {
    enumerate_antichain_cutsets(p)
        .into_iter()
        .map(|c| c.members)
        .collect()
}

fn sizes(sets: &[Vec<usize>]) -> Vec<usize> {
    sets.iter().map(Vec::len).collect()
}

/// Cutsets coincide with the level sets; returns level sizes by rank.
fn cutsets_are_level_sets(name: &str, p: &Poset) -> Result<Vec<usize>, String> {
    let g = compute_grading(p).map_err(|e| format!("{name}: not graded ({e:?})"))?;
    let levels = level_sets(p, &g);
    ensure(sorted(levels.clone()) == cutset_sets(p), || {
        format!("{name}: cutsets differ from level sets")
    })?;
    Ok(sizes(&levels))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn c1_boolean() -> Outcome {
    for n in 1..=5 {
        let p = boolean(n);
        let got = cutsets_are_level_sets(&format!("boolean({n})"), &p)?;
        let want: Vec<usize> = (0..=n).map(|k| binomial(n, k)).collect();
        ensure(got == want, || {
            format!("boolean({n}): level sizes {got:?}, want {want:?}")
        })?;
        ensure(cutset_sets(&p).len() == n + 1, || {
            format!("boolean({n}): wrong cutset count")
        })?;
    }
    Ok("boolean(1..5): cutsets are exactly the n+1 level sets".into())
}

fn c2_example_e() -> Outcome {
    let p = example_e();
    let idx = |s: &str| p.index_of(s).ok_or_else(|| format!("missing element {s}"));
    ensure(is_strongly_connected(&p), || {
        "E not strongly connected".into()
    })?;
    ensure(is_pairwise_locally_strongly_connected(&p), || {
        "E not pairwise-locally strongly connected".into()
    })?;
    ensure(
        !interval_strongly_connected(&p, idx("1")?, idx("200")?),
        || "[1,200] is strongly connected".into(),
    )?;
    let mut got: Vec<Vec<String>> = cutset_sets(&p)
        .iter()
        .map(|c| {
            let mut names: Vec<String> = c.iter().map(|&x| p.name(x)).collect();
            names.sort();
            names
        })
        .collect();
    got.sort();
    let mut want: Vec<Vec<String>> = [
        &["1"][..],
        &["2", "3", "5"],
        &["4", "25", "30"],
        &["200", "300"],
        &["600"],
    ]
    .iter()
    .map(|c| {
        let mut v: Vec<String> = c.iter().map(|s| s.to_string()).collect();
        v.sort();
        v
    })
    .collect();
    want.sort();
    ensure(got == want, || format!("cutsets {got:?}"))?;
    Ok("E: strongly connected, pairwise-locally SC, [1,200] not SC, 5 expected cutsets".into())
}

fn c3_subspace() -> Outcome {
    let got = cutsets_are_level_sets("subspace(2,3)", &subspace(2, 3))?;
    ensure(got == [1, 7, 7, 1], || format!("subspace(2,3): {got:?}"))?;
    let got = cutsets_are_level_sets("subspace(3,2)", &subspace(3, 2))?;
    ensure(got == [1, 4, 1], || format!("subspace(3,2): {got:?}"))?;
    Ok("subspace(2,3) sizes 1,7,7,1; subspace(3,2) sizes 1,4,1".into())
}

fn c4_partition() -> Outcome {
    let p = partition(4);
    let got = cutsets_are_level_sets("partition(4)", &p)?;
    ensure(got == [1, 6, 7, 1], || format!("partition(4): {got:?}"))?;
    let lattice = lattice_ops(&p).map_err(|e| e.to_string())?;
    let names = ["1|2|3|4", "12|3|4", "123|4", "1234"];
    let chain: Vec<usize> = names.iter().map(|s| p.index_of(s).unwrap()).collect();
    let chain = p.maximal_chain(chain).map_err(|e| e.to_string())?;
    let lam = modular_chain_labeling(&lattice, &chain).map_err(|e| e.to_string())?;
    ensure(is_supersolvable_labeling(&p, &lam), || {
        "labeling is not supersolvable".into()
    })?;
    Ok("partition(4): sizes 1,6,7,1; supersolvable labeling with permutation words".into())
}

fn c5_bruhat() -> Outcome {
    for n in [3, 4] {
        let p = families::bruhat_sym(n);
        let name = format!("bruhat_sym({n})");
        let g = compute_grading(&p).map_err(|e| format!("{name}: {e:?}"))?;
        for x in 0..p.len() {
            let word: Vec<usize> = p.name(x).bytes().map(|b| (b - b'0') as usize).collect();
            ensure(g.rank_of(x) == inversions(&word), || {
                format!("{name}: rank of {} wrong", p.name(x))
            })?;
        }
        ensure(is_strongly_connected(&p), || {
            format!("{name}: not strongly connected")
        })?;
        let hist = cutsets_are_level_sets(&name, &p)?;
        ensure(hist == g.histogram(), || {
            format!("{name}: histogram mismatch")
        })?;
        // direct count of permutations by inversions
        let mut oracle = vec![0usize; n * (n - 1) / 2 + 1];
        let mut perm: Vec<usize> = (1..=n).collect();
        permutations(&mut perm, 0, &mut |w| oracle[inversions(w)] += 1);
        ensure(hist == oracle, || {
            format!("{name}: {hist:?} vs oracle {oracle:?}")
        })?;
        if n == 4 {
            ensure(hist == [1, 3, 5, 6, 5, 3, 1], || {
                format!("S_4 sizes {hist:?}")
            })?;
        }
    }
    Ok(
        "bruhat_sym(3,4): graded by inversions, SC, cutsets = levels, S_4 sizes 1,3,5,6,5,3,1"
            .into(),
    )
}

fn permutations(w: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == w.len() {
        visit(w);
        return;
    }
    for i in k..w.len() {
        w.swap(k, i);
        permutations(w, k + 1, visit);
        w.swap(k, i);
    }
}

fn c6_chessboard() -> Outcome {
    for (a, b) in [(2, 3), (3, 4)] {
        let h = chessboard(a, b);
        ensure(is_strongly_connected_h(&h), || format!("C({a},{b}) not SC"))?;
        ensure(balanced_coloring(&h).is_some(), || {
            format!("C({a},{b}) not balanced")
        })?;
        let rows: Vec<Vec<usize>> = (0..a).map(|r| (r * b..(r + 1) * b).collect()).collect();
        let got = exact_transversals(&h);
        ensure(got == rows, || format!("C({a},{b}) transversals {got:?}"))?;
    }
    let got = exact_transversals(&chessboard(2, 2));
    ensure(
        got == [vec![0, 1], vec![0, 2], vec![1, 3], vec![2, 3]],
        || format!("C(2,2): {got:?}"),
    )?;
    ensure(!pairwise_disjoint(&got), || {
        "C(2,2) transversals are disjoint".into()
    })?;
    Ok("C(2,3), C(3,4): rows only; C(2,2): 4 overlapping transversals".into())
}

fn c7_poset_implication(posets: &[Poset]) -> Outcome {
    let mut applicable = 0;
    for (i, p) in posets.iter().enumerate() {
        let report = verify_level_set_theorem(p);
        if report.strongly_connected || report.pairwise_locally_strongly_connected {
            applicable += 1;
            let sets: Vec<Vec<usize>> = report.cutsets.iter().map(|c| c.members.clone()).collect();
            ensure(pairwise_disjoint(&sets), || {
                format!("random poset #{i}: overlapping cutsets {:?}", p.covers())
            })?;
            ensure(!report.is_violation(), || {
                format!("random poset #{i}: cutsets differ from levels")
            })?;
        }
    }
    Ok(format!(
        "{} random posets, {applicable} satisfy a hypothesis, 0 violations",
        posets.len()
    ))
}

fn c8_hypergraph_implication(hs: &[Hypergraph]) -> Outcome {
    let (mut sc, mut balanced) = (0, 0);
    for (i, h) in hs.iter().enumerate() {
        if !is_strongly_connected_h(h) {
            continue;
        }
        sc += 1;
        let ts = exact_transversals(h);
        ensure(pairwise_disjoint(&ts), || {
            format!("hypergraph #{i}: overlapping transversals {h:?}")
        })?;
        if let Some(coloring) = balanced_coloring(h) {
            balanced += 1;
            let classes = sorted(coloring.classes());
            ensure(ts == classes, || {
                format!("hypergraph #{i}: transversals {ts:?}, classes {classes:?}")
            })?;
        }
    }
    Ok(format!(
        "{} random hypergraphs, {sc} SC, {balanced} balanced+SC, 0 violations",
        hs.len()
    ))
}

fn c9_oracles(posets: &[Poset], hs: &[Hypergraph]) -> Outcome {
    let mut checked_p = 0;
    let corpus_posets = corpus().into_iter().map(|(_, p)| p);
    for p in corpus_posets
        .chain(posets.iter().cloned())
        .filter(|p| p.len() <= 12)
    {
        ensure(cutset_sets(&p) == brute_cutsets(&p), || {
            format!("cutsets differ on {:?}", p.covers())
        })?;
        checked_p += 1;
    }
    let mut boards = vec![
        chessboard(2, 2),
        chessboard(2, 3),
        chessboard(3, 4),
        chessboard(2, 5),
    ];
    boards.extend(
        corpus()
            .iter()
            .filter_map(|(_, p)| Hypergraph::from_poset(p).ok()),
    );
    let mut checked_h = 0;
    for h in boards.iter().chain(hs).filter(|h| h.vertex_count() <= 14) {
        let want = brute_exact_hits(h.vertex_count(), h.edges());
        ensure(exact_transversals(h) == want, || {
            format!("transversals differ on {h:?}")
        })?;
        checked_h += 1;
    }
    Ok(format!(
        "{checked_p} posets and {checked_h} hypergraphs match brute force"
    ))
}

fn c10_descent_walk() -> Outcome {
    let p = boolean(4);
    let lattice = lattice_ops(&p).map_err(|e| e.to_string())?;
    let lam = stanley_labeling(&lattice, None).map_err(|e| e.to_string())?;
    let report = is_el_labeling(&p, &lam);
    let target = report
        .ascending_chain(0, 15)
        .ok_or("no ascending chain on [0,15]")?
        .to_vec();
    let chains = p.maximal_chains();
    ensure(chains.len() == 24, || format!("{} chains", chains.len()))?;
    for c in &chains {
        let walk = descent_walk(&p, &lam, c).map_err(|e| e.to_string())?;
        ensure(walk.last().unwrap().elements() == target, || {
            format!("walk from {c:?} ends elsewhere")
        })?;
        for w in walk.windows(2) {
            ensure(exchange_adjacent(&w[0], &w[1]), || {
                format!("non-adjacent step from {c:?}")
            })?;
            ensure(
                lam.word(w[1].elements()) < lam.word(w[0].elements()),
                || format!("step from {c:?} does not decrease"),
            )?;
        }
        let word = lam.word(c.elements());
        let inv = (0..word.len())
            .flat_map(|i| (i + 1..word.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| word[i] > word[j])
            .count();
        ensure(walk.len() - 1 == inv, || {
            format!("{c:?}: {} steps, {inv} inversions", walk.len() - 1)
        })?;
    }
    Ok("boolean(4): 24 walks reach the ascending chain, steps = inversions".into())
}

fn c11_shelling() -> Outcome {
    let cases = [
        ("boolean(3)", boolean(3)),
        ("boolean(4)", boolean(4)),
        ("partition(3)", partition(3)),
        ("subspace(2,2)", subspace(2, 2)),
    ];
    for (name, p) in &cases {
        let lattice = lattice_ops(p).map_err(|e| format!("{name}: {e}"))?;
        let lam = stanley_labeling(&lattice, None).map_err(|e| format!("{name}: {e}"))?;
        let order = lexicographic_chain_order(p, &lam);
        ensure(is_shelling(p, &order).map_err(|e| e.to_string())?, || {
            format!("{name}: not a shelling")
        })?;
    }
    Ok(
        "lexicographic order is a shelling on boolean(3), boolean(4), partition(3), subspace(2,2)"
            .into(),
    )
}

fn c12_local_lemma(posets: &[Poset]) -> Outcome {
    let mut checked = 0;
    let named = corpus().into_iter().map(|(_, p)| p);
    let augmented = posets.iter().map(Poset::bound_augment);
    for p in named.chain(augmented).filter(Poset::is_bounded) {
        let r = check_lemma_local_conn(&p).map_err(|e| e.to_string())?;
        ensure(!r.is_violation(), || {
            format!("violation on {:?}", p.covers())
        })?;
        checked += 1;
    }
    let r = check_lemma_local_conn(&example_e()).map_err(|e| e.to_string())?;
    ensure(!r.hypothesis_holds && r.conclusion_holds, || {
        format!("E gives {r:?}")
    })?;
    Ok(format!(
        "{checked} bounded posets, 0 violations; E gives (false, true)"
    ))
}

fn main() -> ExitCode {
    let mut rng = StdRng::seed_from_u64(SEED);
    let posets: Vec<Poset> = (0..RANDOM_POSETS)
        .map(|_| random_poset_mixed(&mut rng, 10))
        .collect();
    let hypergraphs: Vec<Hypergraph> = (0..RANDOM_HYPERGRAPHS)
        .map(|_| random_hypergraph(&mut rng))
        .collect();

    let criteria: Vec<(&str, u64, Box<dyn Fn() -> Outcome>)> = vec![
        ("boolean cutsets are level sets", 5, Box::new(c1_boolean)),
        ("example E", 1, Box::new(c2_example_e)),
        ("subspace lattices", 10, Box::new(c3_subspace)),
        ("partition(4) supersolvable", 10, Box::new(c4_partition)),
        ("Bruhat orders", 30, Box::new(c5_bruhat)),
        ("chessboard hypergraphs", 5, Box::new(c6_chessboard)),
        (
            "random poset implication",
            60,
            Box::new(|| c7_poset_implication(&posets)),
        ),
        (
            "random hypergraph implication",
            60,
            Box::new(|| c8_hypergraph_implication(&hypergraphs)),
        ),
        (
            "brute-force oracle equivalence",
            120,
            Box::new(|| c9_oracles(&posets, &hypergraphs)),
        ),
        ("descent walk on boolean(4)", 5, Box::new(c10_descent_walk)),
        ("lexicographic shellings", 10, Box::new(c11_shelling)),
        (
            "local connectivity lemma",
            60,
            Box::new(|| c12_local_lemma(&posets)),
        ),
    ];

    let mut failures = 0;
    for (i, (title, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > Duration::from_secs(*limit) => {
                Err(format!("{detail}; took {elapsed:.2?}, limit {limit}s"))
            }
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS {:>2} {title}: {detail} ({elapsed:.2?})", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2} {title}: {why} ({elapsed:.2?})", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! Test corpus, random instance generators and brute-force oracles.
//!
//! The oracles work from the order relation alone (pairwise comparability),
//! never from covers, chain enumeration or the exact-hit search.
#![allow(dead_code)]

use cutsetkit::families::{self, boolean, divisor, example_e, grid, partition, subspace};
use cutsetkit::{Hypergraph, Poset};
use rand::seq::SliceRandom;
use rand::Rng;

/// Named posets used across the property and acceptance suites.
pub fn corpus() -> Vec<(String, Poset)> {
    let mut out: Vec<(String, Poset)> = Vec::new();
    for n in 0..=4 {
        out.push((format!("boolean({n})"), boolean(n)));
    }
    out.push(("subspace(2,2)".into(), subspace(2, 2)));
    out.push(("subspace(2,3)".into(), subspace(2, 3)));
    out.push(("subspace(3,2)".into(), subspace(3, 2)));
    for n in 1..=4 {
        out.push((format!("partition({n})"), partition(n)));
    }
    for n in [12, 30, 36, 60] {
        out.push((format!("divisor({n})"), divisor(n)));
    }
    out.push(("bruhat_sym(3)".into(), families::bruhat_sym(3)));
    out.push(("bruhat_sym(4)".into(), families::bruhat_sym(4)));
    out.push(("grid(2,3)".into(), grid(2, 3, false)));
    out.push(("grid(3,3)".into(), grid(3, 3, false)));
    out.push(("grid(2,2)+top".into(), grid(2, 2, true)));
    out.push(("example_E".into(), example_e()));
    out.push(("uneven_tree".into(), uneven_tree()));
    out.push(("zigzag_fence".into(), zigzag_fence()));
    out.push(("antichain(3)".into(), Poset::antichain(3)));
    out.push(("chain(4)".into(), Poset::chain(4)));
    out.push((
        "two_chains".into(),
        Poset::chain(2).disjoint_union(&Poset::chain(2)),
    ));
    out.push((
        "two_chains+bounds".into(),
        Poset::chain(2)
            .disjoint_union(&Poset::chain(2))
            .bound_augment(),
    ));
    out.push(("pentagon".into(), pentagon()));
    out.push(("bowtie".into(), bowtie()));
    out
}

/// 0 < 1 < 3 and 0 < 2: ungraded, not strongly connected, overlapping cutsets.
pub fn uneven_tree() -> Poset {
    Poset::build(4, &[(0, 1), (1, 3), (0, 2)]).unwrap()
}

/// a < c, b < c, b < d.
pub fn zigzag_fence() -> Poset {
    Poset::build(4, &[(0, 2), (1, 2), (1, 3)]).unwrap()
}

pub fn pentagon() -> Poset {
    Poset::build(5, &[(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)]).unwrap()
}

pub fn bowtie() -> Poset {
    Poset::build(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}

/// Random order on at most `max_n` elements: pairs `i < j` of a shuffled
/// labeling are related with a random density.
pub fn random_poset(rng: &mut impl Rng, max_n: usize) -> Poset {
    let n = rng.gen_range(1..=max_n);
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
    Poset::build(n, &pairs).unwrap()
}

/// Mix of raw random posets and bound-augmented ones, all within `max_n` elements.
pub fn random_poset_mixed(rng: &mut impl Rng, max_n: usize) -> Poset {
    if rng.gen_bool(0.5) {
        random_poset(rng, max_n)
    } else {
        random_poset(rng, max_n - 2).bound_augment()
    }
}

/// Random d-uniform hypergraph (d <= 4, at most 12 vertices, no isolated vertices).
///
/// Three generators: unconstrained edges, a random exchange walk (strongly
/// connected by construction) and a color-preserving exchange walk (balanced
/// and strongly connected by construction).
pub fn random_hypergraph(rng: &mut impl Rng) -> Hypergraph {
    let d = rng.gen_range(1..=4);
    let v = rng.gen_range(d..=12);
    let steps = rng.gen_range(0..=12);
    let edges: Vec<Vec<usize>> = match rng.gen_range(0..3) {
        0 => (0..=steps)
            .map(|_| {
                let mut all: Vec<usize> = (0..v).collect();
                all.shuffle(rng);
                all.truncate(d);
                all
            })
            .collect(),
        1 => {
            let mut all: Vec<usize> = (0..v).collect();
            all.shuffle(rng);
            let mut e: Vec<usize> = all[..d].to_vec();
            let mut out = vec![e.clone()];
            for _ in 0..steps {
                let outside: Vec<usize> = (0..v).filter(|x| !e.contains(x)).collect();
                if outside.is_empty() {
                    break;
                }
                let k = rng.gen_range(0..d);
                e[k] = *outside.choose(rng).unwrap();
                out.push(e.clone());
                // occasionally restart the walk from an earlier edge
                if rng.gen_bool(0.3) {
                    e = out.choose(rng).unwrap().clone();
                }
            }
            out
        }
        _ => {
            let mut color: Vec<usize> = (0..v)
                .map(|x| if x < d { x } else { rng.gen_range(0..d) })
                .collect();
            color.shuffle(rng);
            let class = |c: usize| -> Vec<usize> { (0..v).filter(|&x| color[x] == c).collect() };
            let mut e: Vec<usize> = (0..d).map(|c| *class(c).choose(rng).unwrap()).collect();
            let mut out = vec![e.clone()];
            for _ in 0..steps {
                let c = rng.gen_range(0..d);
                e[c] = *class(c).choose(rng).unwrap();
                out.push(e.clone());
                if rng.gen_bool(0.3) {
                    e = out.choose(rng).unwrap().clone();
                }
            }
            out
        }
    };
    compact(d, edges)
}

/// Drops unused vertices and duplicate edges.
fn compact(d: usize, edges: Vec<Vec<usize>>) -> Hypergraph {
    let mut used: Vec<usize> = edges.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    let mut edges: Vec<Vec<usize>> = edges
        .into_iter()
        .map(|e| {
            let mut e: Vec<usize> = e.iter().map(|x| used.binary_search(x).unwrap()).collect();
            e.sort_unstable();
            e
        })
        .collect();
    edges.sort();
    edges.dedup();
    Hypergraph::new(d, used.len(), edges).unwrap()
}

/// Maximal chains as sorted sets, from pairwise comparability alone.
pub fn brute_maximal_chains(p: &Poset) -> Vec<Vec<usize>> {
    let n = p.len();
    assert!(n <= 16, "brute force limited to 16 elements");
    let comparable = |x: usize, y: usize| p.leq(x, y) || p.leq(y, x);
    let is_chain = |mask: u32| {
        (0..n).all(|x| {
            mask >> x & 1 == 0 || (x + 1..n).all(|y| mask >> y & 1 == 0 || comparable(x, y))
        })
    };
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        if !is_chain(mask) {
            continue;
        }
        let extendable = (0..n).any(|z| mask >> z & 1 == 0 && is_chain(mask | 1 << z));
        if !extendable {
            out.push((0..n).filter(|&x| mask >> x & 1 == 1).collect());
        }
    }
    out
}

/// Subsets meeting every block exactly once, by filtering all 2^n subsets.
pub fn brute_exact_hits(n: usize, blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << n {
        if blocks
            .iter()
            .all(|b| b.iter().filter(|&&x| mask >> x & 1 == 1).count() == 1)
        {
            out.push((0..n).filter(|&x| mask >> x & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

pub fn brute_cutsets(p: &Poset) -> Vec<Vec<usize>> {
    brute_exact_hits(p.len(), &brute_maximal_chains(p))
}

pub fn pairwise_disjoint(sets: &[Vec<usize>]) -> bool {
    sets.iter().enumerate().all(|(i, a)| {
        sets[i + 1..]
            .iter()
            .all(|b| a.iter().all(|x| !b.contains(x)))
    })
}

pub fn sorted(mut v: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    v.sort();
    v
}

//! Chain-exchange graphs and the connectivity predicates built on them.
//!
//! Two maximal chains are exchange-adjacent when their symmetric difference has
//! exactly two elements. Such chains necessarily have the same cardinality and
//! share all but one element, so adjacency classes are found by bucketing each
//! chain under every one of its "punctured" copies.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::{MaximalChain, Poset};

/// The exchange graph on the maximal chains of a poset.
#[derive(Clone, Debug)]
pub struct ExchangeGraph {
    pub chains: Vec<MaximalChain>,
    /// Adjacent index pairs `(i, j)` with `i < j`, sorted.
    pub adjacency: Vec<(usize, usize)>,
}

impl ExchangeGraph {
    pub fn new(p: &Poset) -> Self {
        let chains = p.maximal_chains();
        let sets: Vec<Vec<usize>> = chains.iter().map(MaximalChain::to_set).collect();
        let mut adjacency = Vec::new();
        for bucket in punctured_buckets(&sets).values() {
            for (k, &i) in bucket.iter().enumerate() {
                for &j in &bucket[k + 1..] {
                    adjacency.push((i.min(j), i.max(j)));
                }
            }
        }
        adjacency.sort_unstable();
        adjacency.dedup();
        ExchangeGraph { chains, adjacency }
    }

    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency.iter().filter_map(move |&(a, b)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.chains.len());
        for &(a, b) in &self.adjacency {
            uf.union(a, b);
        }
        (1..self.chains.len()).all(|i| uf.equiv(0, i))
    }
}

/// Groups sorted sets by each of their one-element-deleted subsets.
fn punctured_buckets(sets: &[Vec<usize>]) -> HashMap<Vec<usize>, Vec<usize>> {
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for (i, s) in sets.iter().enumerate() {
        for k in 0..s.len() {
            let mut key = Vec::with_capacity(s.len());
            key.extend_from_slice(&s[..k]);
            key.extend_from_slice(&s[k + 1..]);
            buckets.entry(key).or_default().push(i);
        }
    }
    buckets
}

/// Component label for each set under exchange adjacency. Labels are the
/// smallest set index in each component.
pub(crate) fn exchange_components(sets: &[Vec<usize>]) -> Vec<usize> {
    let mut uf = UnionFind::new(sets.len());
    for bucket in punctured_buckets(sets).values() {
        for w in bucket.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut label = vec![usize::MAX; sets.len()];
    let mut root_label: HashMap<usize, usize> = HashMap::new();
    for (i, l) in label.iter_mut().enumerate() {
        *l = *root_label.entry(uf.find(i)).or_insert(i);
    }
    label
}

/// Whether a family of sorted sets is connected under exchange adjacency.
/// Vacuously true for at most one set.
pub fn sets_strongly_connected(sets: &[Vec<usize>]) -> bool {
    exchange_components(sets).iter().all(|&c| c == 0)
}

/// `|set(c) Δ set(d)| == 2`.
pub fn exchange_adjacent(c: &MaximalChain, d: &MaximalChain) -> bool {
    symmetric_difference_len(&c.to_set(), &d.to_set()) == 2
}

pub(crate) fn symmetric_difference_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    a.len() + b.len() - 2 * common
}

/// Any two maximal chains are joined by a sequence of single-element exchanges.
pub fn is_strongly_connected(p: &Poset) -> bool {
    let sets: Vec<Vec<usize>> = p
        .maximal_chains()
        .iter()
        .map(MaximalChain::to_set)
        .collect();
    sets_strongly_connected(&sets)
}

/// Strong connectivity of the closed interval `[x, y]`; `x <= y` is assumed.
pub fn interval_strongly_connected(p: &Poset, x: usize, y: usize) -> bool {
    let sets: Vec<Vec<usize>> = p
        .saturated_chains(x, y)
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect();
    sets_strongly_connected(&sets)
}

/// Memoized interval verdicts keyed by `(bottom, top)`.
#[derive(Default)]
pub struct IntervalCache {
    verdicts: HashMap<(usize, usize), bool>,
}

impl IntervalCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn strongly_connected(&mut self, p: &Poset, x: usize, y: usize) -> bool {
        *self
            .verdicts
            .entry((x, y))
            .or_insert_with(|| interval_strongly_connected(p, x, y))
    }
}

/// First interval `[x, y]` (in lexicographic order) that is not strongly connected.
pub fn locally_strongly_connected_witness(p: &Poset) -> Option<(usize, usize)> {
    p.relations()
        .into_iter()
        .find(|&(x, y)| !interval_strongly_connected(p, x, y))
}

pub fn is_locally_strongly_connected(p: &Poset) -> bool {
    locally_strongly_connected_witness(p).is_none()
}

/// First pair `(x, y)` with `x <= y` (indices) that lies in no strongly
/// connected interval.
pub fn pairwise_local_witness(p: &Poset) -> Option<(usize, usize)> {
    let mut cache = IntervalCache::new();
    for x in 0..p.len() {
        for y in x..p.len() {
            let lows = p.common_lower_bounds(x, y);
            let highs = p.common_upper_bounds(x, y);
            let found = lows
                .iter()
                .any(|&a| highs.iter().any(|&b| cache.strongly_connected(p, a, b)));
            if !found {
                return Some((x, y));
            }
        }
    }
    None
}

/// Every pair of elements lies in some strongly connected interval.
pub fn is_pairwise_locally_strongly_connected(p: &Poset) -> bool {
    pairwise_local_witness(p).is_none()
}

/// Zigzag connectivity, i.e. connectivity of the Hasse diagram. The empty
/// poset counts as connected.
pub fn is_connected(p: &Poset) -> bool {
    p.components().len() <= 1
}

/// Outcome of checking "every open interval of nonzero height is connected
/// implies strongly connected" on a bounded poset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalConnectivityReport {
    pub hypothesis_holds: bool,
    pub conclusion_holds: bool,
    /// A disconnected open interval of nonzero height, when the hypothesis fails.
    pub disconnected_interval: Option<(usize, usize)>,
}

impl LocalConnectivityReport {
    /// Hypothesis true with conclusion false would contradict the implication.
    pub fn is_violation(&self) -> bool {
        self.hypothesis_holds && !self.conclusion_holds
    }
}

pub fn check_lemma_local_conn(p: &Poset) -> Result<LocalConnectivityReport> {
    if !p.is_bounded() {
        return Err(Error::NotBounded);
    }
    let disconnected_interval = p
        .relations()
        .into_iter()
        .find(|&(x, y)| open_interval_has_height(p, x, y) && !open_interval_connected(p, x, y));
    Ok(LocalConnectivityReport {
        hypothesis_holds: disconnected_interval.is_none(),
        conclusion_holds: is_strongly_connected(p),
        disconnected_interval,
    })
}

fn open_members(p: &Poset, x: usize, y: usize) -> Vec<usize> {
    let mut s = p.up_set(x).clone();
    s.intersect_with(p.down_set(y));
    s.ones().filter(|&z| z != x && z != y).collect()
}

/// Whether `(x, y)` contains two comparable elements.
fn open_interval_has_height(p: &Poset, x: usize, y: usize) -> bool {
    let inner = open_members(p, x, y);
    inner.iter().any(|&u| {
        p.upper_covers(u)
            .iter()
            .any(|&v| v != y && inner.binary_search(&v).is_ok())
    })
}

fn open_interval_connected(p: &Poset, x: usize, y: usize) -> bool {
    let inner = open_members(p, x, y);
    if inner.is_empty() {
        return true;
    }
    let mut uf = UnionFind::new(inner.len());
    for (i, &u) in inner.iter().enumerate() {
        for &v in p.upper_covers(u) {
            if let Ok(j) = inner.binary_search(&v) {
                uf.union(i, j);
            }
        }
    }
    (1..inner.len()).all(|i| uf.equiv(0, i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn boolean(n: usize) -> Poset {
        let mut pairs = Vec::new();
        for s in 0..1usize << n {
            for b in 0..n {
                if s & (1 << b) == 0 {
                    pairs.push((s, s | 1 << b));
                }
            }
        }
        Poset::build(1 << n, &pairs).unwrap()
    }

    fn divisibility(values: &[u64]) -> Poset {
        let mut pairs = Vec::new();
        for (i, &a) in values.iter().enumerate() {
            for (j, &b) in values.iter().enumerate() {
                if i != j && b % a == 0 {
                    pairs.push((i, j));
                }
            }
        }
        Poset::build(values.len(), &pairs).unwrap()
    }

    const E: [u64; 10] = [1, 2, 3, 4, 5, 25, 30, 200, 300, 600];

    #[test]
    fn adjacency_on_small_cases() {
        let b2 = boolean(2);
        let chains = b2.maximal_chains();
        assert!(!exchange_adjacent(&chains[0], &chains[0]));
        assert!(exchange_adjacent(&chains[0], &chains[1]));

        let e = divisibility(&E);
        let c = e.maximal_chain(vec![0, 1, 3, 7, 9]).unwrap();
        let d = e.maximal_chain(vec![0, 4, 5, 7, 9]).unwrap();
        assert!(!exchange_adjacent(&c, &d));
    }

    #[test]
    fn exchange_graph_matches_pairwise_definition() {
        let e = divisibility(&E);
        let g = ExchangeGraph::new(&e);
        assert_eq!(g.chains.len(), 7);
        let mut brute = Vec::new();
        for i in 0..g.chains.len() {
            for j in i + 1..g.chains.len() {
                if exchange_adjacent(&g.chains[i], &g.chains[j]) {
                    brute.push((i, j));
                }
            }
        }
        assert_eq!(g.adjacency, brute);
        assert!(g.is_connected());
    }

    #[test]
    fn example_e_connectivity() {
        let e = divisibility(&E);
        assert!(is_strongly_connected(&e));
        assert!(!is_locally_strongly_connected(&e));
        assert_eq!(locally_strongly_connected_witness(&e), Some((0, 7)));
        assert!(is_pairwise_locally_strongly_connected(&e));
        assert!(!interval_strongly_connected(&e, 0, 7));
    }

    #[test]
    fn chains_and_boolean() {
        assert!(is_strongly_connected(&Poset::chain(5)));
        assert!(is_locally_strongly_connected(&Poset::chain(5)));
        assert!(is_locally_strongly_connected(&boolean(3)));
        assert!(is_strongly_connected(&Poset::antichain(0)));
    }

    #[test]
    fn antichain_is_not_pairwise_local() {
        let a = Poset::antichain(2);
        assert!(!is_pairwise_locally_strongly_connected(&a));
        assert_eq!(pairwise_local_witness(&a), Some((0, 1)));
    }

    #[test]
    fn grid_is_pairwise_local() {
        let mut pairs = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i + 1 < 3 {
                    pairs.push((3 * i + j, 3 * (i + 1) + j));
                }
                if j + 1 < 3 {
                    pairs.push((3 * i + j, 3 * i + j + 1));
                }
            }
        }
        let g = Poset::build(9, &pairs).unwrap();
        assert!(is_locally_strongly_connected(&g));
        assert!(is_pairwise_locally_strongly_connected(&g));
    }

    #[test]
    fn zigzag_connectivity() {
        let two = Poset::chain(2).disjoint_union(&Poset::chain(3));
        assert!(!is_connected(&two));
        assert!(is_connected(&boolean(3)));
        assert!(!is_connected(&Poset::antichain(3)));
    }

    #[test]
    fn local_connectivity_lemma() {
        let r = check_lemma_local_conn(&boolean(4)).unwrap();
        assert_eq!((r.hypothesis_holds, r.conclusion_holds), (true, true));

        let e = divisibility(&E);
        let r = check_lemma_local_conn(&e).unwrap();
        assert_eq!((r.hypothesis_holds, r.conclusion_holds), (false, true));
        assert_eq!(r.disconnected_interval, Some((0, 7)));

        let diamond = Poset::antichain(2).bound_augment();
        let r = check_lemma_local_conn(&diamond).unwrap();
        assert_eq!((r.hypothesis_holds, r.conclusion_holds), (true, true));

        assert_eq!(
            check_lemma_local_conn(&Poset::antichain(2)),
            Err(Error::NotBounded)
        );
    }

    #[test]
    fn symmetric_difference_counts() {
        assert_eq!(symmetric_difference_len(&[1, 2, 3], &[1, 2, 3]), 0);
        assert_eq!(symmetric_difference_len(&[1, 2, 3], &[1, 2, 4]), 2);
        assert_eq!(symmetric_difference_len(&[], &[5]), 1);
    }
}

//! Uniform hypergraphs: strong connectivity, exact transversals, and balanced
//! colorings.

use std::collections::{BTreeSet, HashMap, VecDeque};

use petgraph::unionfind::UnionFind;
use serde::Serialize;

use crate::connectivity::{exchange_components, sets_strongly_connected};
use crate::error::{Error, Result};
use crate::exact::ExactHitting;
use crate::poset::{MaximalChain, Poset};

/// A `d`-uniform hypergraph on the vertices `0..v`.
///
/// Edges are stored sorted, and the edge list itself is sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Hypergraph {
    d: usize,
    v: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(d: usize, v: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let mut sorted = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if e.len() != d {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} does not have {d} vertices"
                )));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidHypergraph(format!(
                    "edge {e:?} repeats a vertex"
                )));
            }
            if let Some(&x) = e.iter().find(|&&x| x >= v) {
                return Err(Error::InvalidHypergraph(format!(
                    "vertex {x} out of range 0..{v}"
                )));
            }
            sorted.push(e);
        }
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph(format!(
                "duplicate edge {:?}",
                w[0]
            )));
        }
        Ok(Hypergraph {
            d,
            v,
            edges: sorted,
        })
    }

    /// Vertices are the elements, edges the maximal chains as sets.
    pub fn from_poset(p: &Poset) -> Result<Self> {
        let chains = p.maximal_chains();
        let d = chains.first().map_or(0, MaximalChain::len);
        if let Some(c) = chains.iter().find(|c| c.len() != d) {
            return Err(Error::NotUniform(d, c.len()));
        }
        Self::new(
            d,
            p.len(),
            chains.iter().map(MaximalChain::to_set).collect(),
        )
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn vertex_count(&self) -> usize {
        self.v
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Vertices contained in no edge.
    pub fn isolated_vertices(&self) -> Vec<usize> {
        let mut seen = vec![false; self.v];
        self.edges.iter().flatten().for_each(|&x| seen[x] = true);
        (0..self.v).filter(|&x| !seen[x]).collect()
    }
}

/// Every two edges are joined by a sequence of edges with consecutive
/// symmetric differences of size two. Vacuous for at most one edge.
pub fn is_strongly_connected_h(h: &Hypergraph) -> bool {
    sets_strongly_connected(&h.edges)
}

/// Number of exchange components among the edges.
pub fn exchange_component_count(h: &Hypergraph) -> usize {
    exchange_components(&h.edges)
        .into_iter()
        .collect::<BTreeSet<_>>()
        .len()
}

/// All vertex sets meeting every edge in exactly one vertex, each sorted, in
/// lexicographic order. Isolated vertices may be included or left out freely.
pub fn exact_transversals(h: &Hypergraph) -> Vec<Vec<usize>> {
    ExactHitting::new(h.v, &h.edges).solve()
}

/// Visits exact transversals until `visit` returns `false`.
pub fn for_each_exact_transversal(h: &Hypergraph, visit: impl FnMut(&[usize]) -> bool) {
    ExactHitting::new(h.v, &h.edges).for_each(visit);
}

/// A coloring with `d` colors in which every edge sees each color exactly once.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BalancedColoring {
    pub color: Vec<usize>,
}

impl BalancedColoring {
    /// Non-empty color classes, ascending by color.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let k = self.color.iter().max().map_or(0, |&m| m + 1);
        let mut classes = vec![Vec::new(); k];
        for (x, &c) in self.color.iter().enumerate() {
            classes[c].push(x);
        }
        classes.retain(|c| !c.is_empty());
        classes
    }
}

pub fn is_balanced_coloring(h: &Hypergraph, coloring: &BalancedColoring) -> bool {
    coloring.color.len() == h.v
        && coloring.color.iter().all(|&c| c < h.d)
        && h.edges.iter().all(|e| {
            let mut seen: Vec<usize> = e.iter().map(|&x| coloring.color[x]).collect();
            seen.sort_unstable();
            seen.dedup();
            seen.len() == e.len()
        })
}

/// Finds a balanced coloring, or `None` when there is none.
///
/// Exchange-adjacent edges `S ∪ {x}` and `S ∪ {y}` force `x` and `y` to share
/// a color, so vertices are first merged into forced classes; within one
/// exchange component every class is then fixed by the seed edge. The classes
/// are colored by backtracking, seeding the lexicographically first edge with
/// colors `0..d` in vertex order. Isolated vertices get color 0.
pub fn balanced_coloring(h: &Hypergraph) -> Option<BalancedColoring> {
    if h.v > 0 && h.d == 0 {
        return None;
    }
    let mut uf = UnionFind::new(h.v);
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for e in &h.edges {
        for k in 0..e.len() {
            let mut key = e.clone();
            let extra = key.remove(k);
            buckets.entry(key).or_default().push(extra);
        }
    }
    for extras in buckets.values() {
        for w in extras.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    // classes indexed in order of their smallest vertex
    let mut class_of = vec![usize::MAX; h.v];
    let mut class_ids: HashMap<usize, usize> = HashMap::new();
    for x in 0..h.v {
        let next = class_ids.len();
        class_of[x] = *class_ids.entry(uf.find(x)).or_insert(next);
    }
    let k = class_ids.len();
    let mut conflicts: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); k];
    for e in &h.edges {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                let (ca, cb) = (class_of[a], class_of[b]);
                if ca == cb {
                    return None;
                }
                conflicts[ca].insert(cb);
                conflicts[cb].insert(ca);
            }
        }
    }

    let mut color = vec![usize::MAX; k];
    let mut order = Vec::with_capacity(k);
    if let Some(seed) = h.edges.first() {
        for (c, &x) in seed.iter().enumerate() {
            color[class_of[x]] = c;
        }
    }
    // breadth-first over the conflict graph from the seed classes, then the rest
    let mut queued = vec![false; k];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for start in (0..k).filter(|&c| color[c] != usize::MAX).chain(0..k) {
        if queued[start] {
            continue;
        }
        queued[start] = true;
        queue.push_back(start);
        while let Some(c) = queue.pop_front() {
            if color[c] == usize::MAX {
                order.push(c);
            }
            for &n in &conflicts[c] {
                if !queued[n] {
                    queued[n] = true;
                    queue.push_back(n);
                }
            }
        }
    }
    if !color_classes(&order, 0, &conflicts, &mut color, h.d.max(1)) {
        return None;
    }
    let coloring = BalancedColoring {
        color: (0..h.v)
            .map(|x| {
                if h.edges.is_empty() {
                    0
                } else {
                    color[class_of[x]]
                }
            })
            .collect(),
    };
    debug_assert!(is_balanced_coloring(h, &coloring));
    Some(coloring)
}

fn color_classes(
    order: &[usize],
    pos: usize,
    conflicts: &[BTreeSet<usize>],
    color: &mut [usize],
    d: usize,
) -> bool {
    let Some(&c) = order.get(pos) else {
        return true;
    };
    for col in 0..d {
        if conflicts[c].iter().all(|&n| color[n] != col) {
            color[c] = col;
            if color_classes(order, pos + 1, conflicts, color, d) {
                return true;
            }
        }
    }
    color[c] = usize::MAX;
    false
}

//! Gradings and level sets.
//!
//! A grading maps every element to a rank so that each maximal chain is sent
//! bijectively and monotonically onto one common label set. For finite posets
//! ranks are normalized so minimal elements sit at 0 and the label set is
//! `{0, ..., h}`.

use serde::Serialize;

use crate::poset::{MaximalChain, Poset};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Grading {
    pub rank: Vec<usize>,
    /// The common image of every maximal chain, ascending.
    pub labels: Vec<usize>,
}

/// Why a poset admits no grading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GradingFailure {
    /// A cover whose endpoints' longest-chain heights differ by more than one.
    RankJump {
        lower: usize,
        upper: usize,
        lower_rank: usize,
        upper_rank: usize,
    },
    /// Two maximal chains of different lengths.
    UnequalChains {
        first: MaximalChain,
        second: MaximalChain,
    },
}

impl Grading {
    pub fn rank_of(&self, x: usize) -> usize {
        self.rank[x]
    }

    /// Number of elements at each label, ascending by label.
    pub fn histogram(&self) -> Vec<usize> {
        let mut h = vec![0; self.labels.len()];
        for &r in &self.rank {
            h[r] += 1;
        }
        h
    }
}

/// Computes the normalized grading, or a witness that none exists.
///
/// Ranks are longest-chain heights from below. The poset is graded exactly when
/// every cover raises the height by one and all maximal elements share a height.
pub fn compute_grading(p: &Poset) -> Result<Grading, GradingFailure> {
    let rank = p.heights();
    for &(x, y) in p.covers() {
        if rank[y] != rank[x] + 1 {
            return Err(GradingFailure::RankJump {
                lower: x,
                upper: y,
                lower_rank: rank[x],
                upper_rank: rank[y],
            });
        }
    }
    let maxima = p.maximal_elements();
    if let Some(&first) = maxima.first() {
        if let Some(&other) = maxima.iter().find(|&&m| rank[m] != rank[first]) {
            return Err(GradingFailure::UnequalChains {
                first: chain_through_top(p, &rank, first),
                second: chain_through_top(p, &rank, other),
            });
        }
    }
    let top = maxima.first().map(|&m| rank[m]);
    let labels = match top {
        Some(h) => (0..=h).collect(),
        None => Vec::new(),
    };
    Ok(Grading { rank, labels })
}

// With unit rank jumps on every cover, descending through any lower cover from a
// maximal element reaches a minimal element after exactly rank[top] steps.
fn chain_through_top(p: &Poset, rank: &[usize], top: usize) -> MaximalChain {
    let mut seq = vec![top];
    let mut cur = top;
    while let Some(&below) = p
        .lower_covers(cur)
        .iter()
        .find(|&&b| rank[b] + 1 == rank[cur])
    {
        seq.push(below);
        cur = below;
    }
    seq.reverse();
    p.maximal_chain(seq)
        .expect("descending cover path from a maximal to a minimal element")
}

/// The level sets `{ x : rank(x) = r }` for each label `r`, ascending.
pub fn level_sets(p: &Poset, g: &Grading) -> Vec<Vec<usize>> {
    let mut sets = vec![Vec::new(); g.labels.len()];
    for x in 0..p.len() {
        sets[g.rank[x]].push(x);
    }
    sets
}

/// Convenience: level sets when a grading exists.
pub fn graded_level_sets(p: &Poset) -> Option<Vec<Vec<usize>>> {
    compute_grading(p).ok().map(|g| level_sets(p, &g))
}

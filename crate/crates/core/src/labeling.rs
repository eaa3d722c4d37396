//! Edge labelings of the Hasse diagram: construction (join-irreducible and
//! modular-chain labelings), EL verification, the descent-removal walk, and
//! shelling checks on chain orders.
//!
//! Labels are integers. A chain has an ascent at an interior element when the
//! label entering it is `<=` the label leaving it; anything else is a descent.

use std::collections::{BTreeMap, HashSet};

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::Lattice;
use crate::poset::{MaximalChain, Poset};

/// An integer label on every cover `x ⋖ y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeLabeling {
    labels: BTreeMap<(usize, usize), i64>,
}

impl EdgeLabeling {
    /// Checks that the domain of `labels` is exactly the cover relation of `p`.
    pub fn new(p: &Poset, labels: BTreeMap<(usize, usize), i64>) -> Result<Self> {
        if let Some(&(x, y)) = labels
            .keys()
            .find(|&&(x, y)| x >= p.len() || y >= p.len() || !p.is_cover(x, y))
        {
            return Err(Error::LabelDomain(format!("({x}, {y}) is not a cover")));
        }
        if let Some(&(x, y)) = p.covers().iter().find(|c| !labels.contains_key(c)) {
            return Err(Error::LabelDomain(format!("cover ({x}, {y}) has no label")));
        }
        Ok(EdgeLabeling { labels })
    }

    pub fn from_fn(p: &Poset, mut f: impl FnMut(usize, usize) -> i64) -> Self {
        let labels = p.covers().iter().map(|&(x, y)| ((x, y), f(x, y))).collect();
        EdgeLabeling { labels }
    }

    /// Label of the cover `x ⋖ y`.
    pub fn get(&self, x: usize, y: usize) -> Option<i64> {
        self.labels.get(&(x, y)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.labels.iter().map(|(&k, &v)| (k, v))
    }

    /// Label word of a saturated chain given as an element sequence.
    pub fn word(&self, chain: &[usize]) -> Vec<i64> {
        chain
            .windows(2)
            .map(|w| self.labels[&(w[0], w[1])])
            .collect()
    }
}

fn is_ascending(word: &[i64]) -> bool {
    word.windows(2).all(|w| w[0] <= w[1])
}

/// The labeling that sends `x ⋖ y` to the 1-based position, in `order`, of the
/// first join irreducible `z` with `x ∨ z = y`.
///
/// `order` defaults to join irreducibles sorted by height then index; a supplied
/// order must be a linear extension of the join irreducibles.
pub fn stanley_labeling(lattice: &Lattice, order: Option<&[usize]>) -> Result<EdgeLabeling> {
    lattice.check_semimodular()?;
    let p = lattice.poset();
    let default_order = lattice.join_irreducibles();
    let order = match order {
        None => default_order,
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            let mut expected = default_order.clone();
            expected.sort_unstable();
            if sorted != expected {
                return Err(Error::InvalidOrder(
                    "not a permutation of the join irreducibles".into(),
                ));
            }
            for (i, &a) in o.iter().enumerate() {
                if let Some(&b) = o[..i].iter().find(|&&b| p.lt(a, b)) {
                    return Err(Error::InvalidOrder(format!(
                        "{a} < {b} but {b} comes first"
                    )));
                }
            }
            o.to_vec()
        }
    };
    let mut labels = BTreeMap::new();
    for &(x, y) in p.covers() {
        let pos = order
            .iter()
            .position(|&z| lattice.join(x, z) == y)
            .ok_or(Error::NoJoinIrreducible { x, y })?;
        labels.insert((x, y), pos as i64 + 1);
    }
    Ok(EdgeLabeling { labels })
}

/// Labels `x ⋖ y` by the least `i >= 1` with `y <= x ∨ m_i`, where
/// `m_0 < m_1 < ... < m_n` is the supplied maximal chain.
///
/// When the chain is modular in a supersolvable lattice this is an EL-labeling
/// whose maximal-chain words are permutations of `1..=n`.
pub fn modular_chain_labeling(lattice: &Lattice, chain: &MaximalChain) -> Result<EdgeLabeling> {
    let p = lattice.poset();
    let m = p.maximal_chain(chain.elements().to_vec())?;
    let m = m.elements();
    let mut labels = BTreeMap::new();
    for &(x, y) in p.covers() {
        let i = (1..m.len())
            .find(|&i| p.leq(y, lattice.join(x, m[i])))
            .expect("the top of the chain is above every element");
        labels.insert((x, y), i as i64);
    }
    Ok(EdgeLabeling { labels })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum IntervalOutcome {
    /// The unique ascending chain, which is also lexicographically first.
    Ascending {
        chain: Vec<usize>,
    },
    NoAscending,
    MultipleAscending {
        chains: Vec<Vec<usize>>,
    },
    /// `preceding` has a word that is not strictly after the ascending word.
    NotLexFirst {
        ascending: Vec<usize>,
        preceding: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalVerdict {
    pub bottom: usize,
    pub top: usize,
    pub outcome: IntervalOutcome,
}

#[derive(Clone, Debug, Serialize)]
pub struct ElReport {
    pub is_el: bool,
    /// One verdict per interval `[x, y]` with `x < y`, in lexicographic order.
    pub intervals: Vec<IntervalVerdict>,
}

impl ElReport {
    pub fn first_violation(&self) -> Option<&IntervalVerdict> {
        self.intervals
            .iter()
            .find(|v| !matches!(v.outcome, IntervalOutcome::Ascending { .. }))
    }

    pub fn ascending_chain(&self, bottom: usize, top: usize) -> Option<&[usize]> {
        self.intervals.iter().find_map(|v| match &v.outcome {
            IntervalOutcome::Ascending { chain } if v.bottom == bottom && v.top == top => {
                Some(chain.as_slice())
            }
            _ => None,
        })
    }
}

fn interval_outcome(p: &Poset, lam: &EdgeLabeling, x: usize, y: usize) -> IntervalOutcome {
    let chains = p.saturated_chains(x, y);
    let words: Vec<Vec<i64>> = chains.iter().map(|c| lam.word(c)).collect();
    let ascending: Vec<usize> = (0..chains.len())
        .filter(|&i| is_ascending(&words[i]))
        .collect();
    match ascending[..] {
        [] => IntervalOutcome::NoAscending,
        [a] => match (0..chains.len()).find(|&i| i != a && words[i] <= words[a]) {
            Some(i) => IntervalOutcome::NotLexFirst {
                ascending: chains[a].clone(),
                preceding: chains[i].clone(),
            },
            None => IntervalOutcome::Ascending {
                chain: chains[a].clone(),
            },
        },
        _ => IntervalOutcome::MultipleAscending {
            chains: ascending.iter().map(|&i| chains[i].clone()).collect(),
        },
    }
}

/// Checks, on every interval, that there is a unique ascending maximal chain
/// and that its word strictly precedes every other chain's word.
pub fn is_el_labeling(p: &Poset, lam: &EdgeLabeling) -> ElReport {
    let intervals: Vec<IntervalVerdict> = p
        .relations()
        .into_iter()
        .map(|(x, y)| IntervalVerdict {
            bottom: x,
            top: y,
            outcome: interval_outcome(p, lam, x, y),
        })
        .collect();
    let is_el = intervals
        .iter()
        .all(|v| matches!(v.outcome, IntervalOutcome::Ascending { .. }));
    ElReport { is_el, intervals }
}

/// Repeatedly removes the first descent of `c` by swapping in the middle
/// element of the ascending chain on the rank-two interval around it.
///
/// Returns the whole sequence, starting at `c` and ending at the ascending
/// chain of the poset. Consecutive chains differ in one element and their
/// words strictly decrease lexicographically.
pub fn descent_walk(p: &Poset, lam: &EdgeLabeling, c: &MaximalChain) -> Result<Vec<MaximalChain>> {
    if !p.is_bounded() {
        return Err(Error::NotBounded);
    }
    let mut current = p.maximal_chain(c.elements().to_vec())?;
    let cap = p.count_maximal_chains();
    let mut walk = vec![current.clone()];
    loop {
        let seq = current.elements();
        let word = lam.word(seq);
        let Some(i) = (1..word.len()).find(|&i| word[i - 1] > word[i]) else {
            return Ok(walk);
        };
        // descent at seq[i]: labels of seq[i-1] ⋖ seq[i] and seq[i] ⋖ seq[i+1]
        let (lo, hi) = (seq[i - 1], seq[i + 1]);
        let ascending: Vec<Vec<usize>> = p
            .saturated_chains(lo, hi)
            .into_iter()
            .filter(|ch| is_ascending(&lam.word(ch)))
            .collect();
        let replacement = match ascending.as_slice() {
            [only] if only.len() == 3 => only[1],
            [] => return Err(Error::NotEl(format!("no ascending chain on [{lo}, {hi}]"))),
            [_] => return Err(Error::NotEl(format!("[{lo}, {hi}] is not of rank two"))),
            _ => {
                return Err(Error::NotEl(format!(
                    "several ascending chains on [{lo}, {hi}]"
                )))
            }
        };
        let mut next = seq.to_vec();
        next[i] = replacement;
        if lam.word(&next) >= word {
            return Err(Error::NotEl(format!(
                "ascending chain on [{lo}, {hi}] does not precede the descent"
            )));
        }
        current = p.maximal_chain(next)?;
        walk.push(current.clone());
        if walk.len() as u128 > cap {
            return Err(Error::NotEl("descent walk revisits a chain".into()));
        }
    }
}

/// An EL-labeling of a bounded poset of height `n` in which every maximal
/// chain reads a permutation of `1..=n`.
pub fn is_supersolvable_labeling(p: &Poset, lam: &EdgeLabeling) -> bool {
    if !p.is_bounded() {
        return false;
    }
    let chains = p.maximal_chains();
    let n = chains[0].length() as i64;
    let expected: Vec<i64> = (1..=n).collect();
    let words_ok = chains.iter().all(|c| {
        let mut w = lam.word(c.elements());
        w.sort_unstable();
        w == expected
    });
    words_ok && is_el_labeling(p, lam).is_el
}

/// Maximal chains sorted by label word, ties broken by element sequence.
pub fn lexicographic_chain_order(p: &Poset, lam: &EdgeLabeling) -> Vec<MaximalChain> {
    let mut keyed: Vec<(Vec<i64>, MaximalChain)> = p
        .maximal_chains()
        .into_iter()
        .map(|c| (lam.word(c.elements()), c))
        .collect();
    keyed.sort();
    keyed.into_iter().map(|(_, c)| c).collect()
}

/// Index (in `order`) of the first chain whose intersection with some earlier
/// chain is not contained in a codimension-one face shared with an earlier chain.
pub fn shelling_violation(p: &Poset, order: &[MaximalChain]) -> Result<Option<usize>> {
    let chains = p.maximal_chains();
    let given: HashSet<&MaximalChain> = order.iter().collect();
    if order.len() != chains.len()
        || given.len() != order.len()
        || !chains.iter().all(|c| given.contains(c))
    {
        return Err(Error::NotAPermutation);
    }
    let sets: Vec<FixedBitSet> = order
        .iter()
        .map(|c| {
            let mut s = FixedBitSet::with_capacity(p.len());
            c.elements().iter().for_each(|&x| s.insert(x));
            s
        })
        .collect();
    for (j, d) in sets.iter().enumerate().skip(1) {
        // elements x of d such that some earlier chain equals d except at x
        let mut faces = FixedBitSet::with_capacity(p.len());
        for earlier in &sets[..j] {
            let missing: Vec<usize> = d.difference(earlier).collect();
            if let [x] = missing[..] {
                faces.insert(x);
            }
        }
        // c ∩ d ⊆ d \ {x} holds iff x ∉ c
        let ok = sets[..j]
            .iter()
            .all(|c| faces.ones().any(|x| !c.contains(x)));
        if !ok {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

pub fn is_shelling(p: &Poset, order: &[MaximalChain]) -> Result<bool> {
    Ok(shelling_violation(p, order)?.is_none())
}

//! Antichain cutsets: recognition, enumeration, and the level-set comparison.

use serde::Serialize;

use crate::connectivity::{is_pairwise_locally_strongly_connected, is_strongly_connected};
use crate::exact::ExactHitting;
use crate::grading::{compute_grading, level_sets, GradingFailure};
use crate::poset::{MaximalChain, Poset};

/// A set meeting every maximal chain in exactly one element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Cutset {
    pub members: Vec<usize>,
}

/// `|s ∩ c| == 1` for every maximal chain `c`.
pub fn is_antichain_cutset(p: &Poset, s: &[usize]) -> bool {
    let chains = p.maximal_chains();
    meets_each_once(&chains, s)
}

fn meets_each_once(chains: &[MaximalChain], s: &[usize]) -> bool {
    chains
        .iter()
        .all(|c| c.elements().iter().filter(|x| s.contains(x)).count() == 1)
}

/// All antichain cutsets, sorted lexicographically by member list.
pub fn enumerate_antichain_cutsets(p: &Poset) -> Vec<Cutset> {
    let blocks: Vec<Vec<usize>> = p
        .maximal_chains()
        .into_iter()
        .map(MaximalChain::into_vec)
        .collect();
    ExactHitting::new(p.len(), &blocks)
        .solve()
        .into_iter()
        .map(|members| Cutset { members })
        .collect()
}

/// Distinct cutsets sharing an element, if any.
pub fn overlapping_pair(cutsets: &[Cutset]) -> Option<(usize, usize)> {
    for i in 0..cutsets.len() {
        for j in i + 1..cutsets.len() {
            let (a, b) = (&cutsets[i].members, &cutsets[j].members);
            if a.iter().any(|x| b.binary_search(x).is_ok()) {
                return Some((i, j));
            }
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelSetReport {
    pub strongly_connected: bool,
    pub pairwise_locally_strongly_connected: bool,
    pub grading: Result<Vec<usize>, GradingFailure>,
    pub cutsets: Vec<Cutset>,
    pub level_sets: Option<Vec<Vec<usize>>>,
    /// Enumerated cutsets coincide with the level sets (false when ungraded).
    pub cutsets_equal_level_sets: bool,
    pub pairwise_disjoint: bool,
}

impl LevelSetReport {
    /// A connectivity hypothesis holds together with a grading.
    pub fn applies(&self) -> bool {
        (self.strongly_connected || self.pairwise_locally_strongly_connected)
            && self.grading.is_ok()
    }

    /// The characterization was applicable but the cutsets disagree with the level sets.
    pub fn is_violation(&self) -> bool {
        self.applies() && !self.cutsets_equal_level_sets
    }
}

/// Enumerates cutsets and compares them with the level sets.
pub fn verify_level_set_theorem(p: &Poset) -> LevelSetReport {
    let strongly_connected = is_strongly_connected(p);
    let pairwise = is_pairwise_locally_strongly_connected(p);
    let grading = compute_grading(p);
    let cutsets = enumerate_antichain_cutsets(p);
    let levels = grading.as_ref().ok().map(|g| level_sets(p, g));
    let cutsets_equal_level_sets = match &levels {
        Some(levels) => {
            let mut sorted = levels.clone();
            sorted.sort();
            cutsets.iter().map(|c| &c.members).eq(sorted.iter())
        }
        None => false,
    };
    LevelSetReport {
        strongly_connected,
        pairwise_locally_strongly_connected: pairwise,
        grading: grading.map(|g| g.rank),
        pairwise_disjoint: overlapping_pair(&cutsets).is_none(),
        cutsets,
        level_sets: levels,
        cutsets_equal_level_sets,
    }
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

    fn uneven_tree() -> Poset {
        Poset::build(4, &[(0, 1), (1, 3), (0, 2)]).unwrap()
    }

    fn members(cs: &[Cutset]) -> Vec<Vec<usize>> {
        cs.iter().map(|c| c.members.clone()).collect()
    }

    #[test]
    fn recognition() {
        let b3 = boolean(3);
        assert!(is_antichain_cutset(&b3, &[1, 2, 4]));
        assert!(!is_antichain_cutset(&b3, &[0, 7]));
        assert!(!is_antichain_cutset(&b3, &[1, 2]));
    }

    #[test]
    fn boolean_four_has_only_level_sets() {
        let cs = enumerate_antichain_cutsets(&boolean(4));
        assert_eq!(
            members(&cs),
            vec![
                vec![0],
                vec![1, 2, 4, 8],
                vec![3, 5, 6, 9, 10, 12],
                vec![7, 11, 13, 14],
                vec![15]
            ]
        );
    }

    #[test]
    fn one_element_and_empty() {
        assert_eq!(
            members(&enumerate_antichain_cutsets(&Poset::chain(1))),
            vec![vec![0]]
        );
        assert_eq!(
            members(&enumerate_antichain_cutsets(&Poset::antichain(0))),
            vec![Vec::<usize>::new()]
        );
    }

    #[test]
    fn uneven_tree_has_overlapping_cutsets() {
        // brute force over the 16 subsets: {0}, {1,2}, {2,3}
        let cs = members(&enumerate_antichain_cutsets(&uneven_tree()));
        assert_eq!(cs, vec![vec![0], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn level_set_report() {
        let r = verify_level_set_theorem(&boolean(4));
        assert!(r.applies());
        assert!(r.cutsets_equal_level_sets);
        assert!(!r.is_violation());

        let r = verify_level_set_theorem(&uneven_tree());
        assert!(!r.applies());
        assert!(!r.cutsets_equal_level_sets);
        assert!(!r.pairwise_disjoint);
        assert!(!r.is_violation());
    }

    #[test]
    fn overlap_detection() {
        let a = Cutset {
            members: vec![1, 2],
        };
        let b = Cutset {
            members: vec![2, 3],
        };
        let c = Cutset { members: vec![4] };
        assert_eq!(overlapping_pair(&[a.clone(), c.clone()]), None);
        assert_eq!(overlapping_pair(&[a, c, b]), Some((0, 2)));
    }
}

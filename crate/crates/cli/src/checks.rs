//! Implication checks. Each one is an implication: an instance where the
//! hypothesis fails is not applicable, never a failure.

use cutsetkit::connectivity::{check_lemma_local_conn, is_strongly_connected};
use cutsetkit::cutsets::LevelSetReport;
use cutsetkit::hypergraph::{balanced_coloring, exact_transversals, is_strongly_connected_h};
use cutsetkit::labeling::{
    is_el_labeling, is_shelling, lexicographic_chain_order, stanley_labeling, EdgeLabeling,
};
use cutsetkit::lattice::lattice_ops;
use cutsetkit::{Hypergraph, Poset};
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    CutsetsAreLevelSets,
    StrongConnectivityGrades,
    LocalConnectivity,
    SemimodularEl,
    ElShelling,
    ShellingConnectivity,
    TransversalsDisjoint,
    BalancedTransversals,
}

impl Theorem {
    pub const ALL: [Theorem; 8] = [
        Theorem::CutsetsAreLevelSets,
        Theorem::StrongConnectivityGrades,
        Theorem::LocalConnectivity,
        Theorem::SemimodularEl,
        Theorem::ElShelling,
        Theorem::ShellingConnectivity,
        Theorem::TransversalsDisjoint,
        Theorem::BalancedTransversals,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Theorem::CutsetsAreLevelSets => "cutsets_are_level_sets",
            Theorem::StrongConnectivityGrades => "strong_connectivity_grades",
            Theorem::LocalConnectivity => "local_connectivity",
            Theorem::SemimodularEl => "semimodular_el",
            Theorem::ElShelling => "el_shelling",
            Theorem::ShellingConnectivity => "shelling_connectivity",
            Theorem::TransversalsDisjoint => "transversals_disjoint",
            Theorem::BalancedTransversals => "balanced_transversals",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Theorem::CutsetsAreLevelSets => {
                "strongly or pairwise-locally strongly connected => cutsets are the level sets"
            }
            Theorem::StrongConnectivityGrades => "strongly connected => graded",
            Theorem::LocalConnectivity => {
                "bounded with connected open intervals => strongly connected"
            }
            Theorem::SemimodularEl => "semimodular lattice => join-irreducible labeling is EL",
            Theorem::ElShelling => "EL-labeling => lexicographic order is a shelling",
            Theorem::ShellingConnectivity => "pure shellable order complex => strongly connected",
            Theorem::TransversalsDisjoint => {
                "strongly connected hypergraph => disjoint exact transversals"
            }
            Theorem::BalancedTransversals => {
                "balanced and strongly connected => exact transversals are the color classes"
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub theorem: Theorem,
    pub verdict: Verdict,
}

fn implication(theorem: Theorem, hypothesis: bool, conclusion: bool) -> Check {
    let verdict = match (hypothesis, conclusion) {
        (false, _) => Verdict::NotApplicable,
        (true, true) => Verdict::Pass,
        (true, false) => Verdict::Fail,
    };
    Check { theorem, verdict }
}

pub fn any_failure(checks: &[Check]) -> bool {
    checks.iter().any(|c| c.verdict == Verdict::Fail)
}

pub fn level_set_checks(report: &LevelSetReport) -> Vec<Check> {
    let hypothesis = report.strongly_connected || report.pairwise_locally_strongly_connected;
    vec![
        implication(
            Theorem::CutsetsAreLevelSets,
            hypothesis,
            report.cutsets_equal_level_sets && report.pairwise_disjoint,
        ),
        implication(
            Theorem::StrongConnectivityGrades,
            report.strongly_connected,
            report.grading.is_ok(),
        ),
    ]
}

pub fn local_connectivity_check(p: &Poset) -> Check {
    match check_lemma_local_conn(p) {
        Ok(r) => implication(
            Theorem::LocalConnectivity,
            r.hypothesis_holds,
            r.conclusion_holds,
        ),
        Err(_) => implication(Theorem::LocalConnectivity, false, true),
    }
}

/// Checks that follow from a labeling: EL gives a shelling, and a pure
/// shelling gives strong connectivity.
pub fn labeling_checks(p: &Poset, lam: &EdgeLabeling, is_el: bool) -> (bool, Vec<Check>) {
    let order = lexicographic_chain_order(p, lam);
    let shelling = is_shelling(p, &order).unwrap_or(false);
    let pure = order.windows(2).all(|w| w[0].len() == w[1].len());
    let checks = vec![
        implication(Theorem::ElShelling, is_el, shelling),
        implication(
            Theorem::ShellingConnectivity,
            shelling && pure,
            is_strongly_connected(p),
        ),
    ];
    (shelling, checks)
}

/// The labeling checks run with the join-irreducible labeling when `p` is a
/// semimodular lattice; all not applicable otherwise.
pub fn lattice_checks(p: &Poset) -> Vec<Check> {
    let na = |t| implication(t, false, true);
    let Ok(lattice) = lattice_ops(p) else {
        return vec![
            na(Theorem::SemimodularEl),
            na(Theorem::ElShelling),
            na(Theorem::ShellingConnectivity),
        ];
    };
    let Ok(lam) = stanley_labeling(&lattice, None) else {
        return vec![
            na(Theorem::SemimodularEl),
            na(Theorem::ElShelling),
            na(Theorem::ShellingConnectivity),
        ];
    };
    let is_el = is_el_labeling(p, &lam).is_el;
    let mut checks = vec![implication(Theorem::SemimodularEl, true, is_el)];
    checks.extend(labeling_checks(p, &lam, is_el).1);
    checks
}

pub fn hypergraph_checks(h: &Hypergraph) -> Vec<Check> {
    let sc = is_strongly_connected_h(h);
    let ts = exact_transversals(h);
    hypergraph_checks_with(
        sc,
        &ts,
        balanced_coloring(h).map(|c| c.classes()).as_deref(),
    )
}

pub fn hypergraph_checks_with(
    sc: bool,
    transversals: &[Vec<usize>],
    classes: Option<&[Vec<usize>]>,
) -> Vec<Check> {
    let disjoint = pairwise_disjoint(transversals);
    let same = classes.is_some_and(|classes| {
        let mut classes = classes.to_vec();
        classes.sort();
        classes == transversals
    });
    vec![
        implication(Theorem::TransversalsDisjoint, sc, disjoint),
        implication(Theorem::BalancedTransversals, sc && classes.is_some(), same),
    ]
}

pub fn pairwise_disjoint(sets: &[Vec<usize>]) -> bool {
    let mut seen: Vec<usize> = sets.iter().flatten().copied().collect();
    let total = seen.len();
    seen.sort_unstable();
    seen.dedup();
    seen.len() == total
}

use serde::Serialize;

use crate::error::{Error, Result};
use crate::poset::Poset;

/// A finite lattice with tabulated joins and meets.
#[derive(Clone, Debug)]
pub struct Lattice {
    poset: Poset,
    join: Vec<usize>,
    meet: Vec<usize>,
}

/// Why a poset is not a lattice.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LatticeFailure {
    Empty,
    /// `bounds` lists the minimal upper bounds of the pair; empty when there are none.
    NoJoin {
        x: usize,
        y: usize,
        bounds: Vec<usize>,
    },
    /// `bounds` lists the maximal lower bounds of the pair; empty when there are none.
    NoMeet {
        x: usize,
        y: usize,
        bounds: Vec<usize>,
    },
}

impl std::fmt::Display for LatticeFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LatticeFailure::Empty => write!(f, "empty poset"),
            LatticeFailure::NoJoin { x, y, bounds } => {
                write!(f, "{x} and {y} have minimal upper bounds {bounds:?}")
            }
            LatticeFailure::NoMeet { x, y, bounds } => {
                write!(f, "{x} and {y} have maximal lower bounds {bounds:?}")
            }
        }
    }
}

/// Checks the lattice property and tabulates join and meet.
pub fn lattice_ops(p: &Poset) -> std::result::Result<Lattice, LatticeFailure> {
    let n = p.len();
    if n == 0 {
        return Err(LatticeFailure::Empty);
    }
    let mut join = vec![0; n * n];
    let mut meet = vec![0; n * n];
    for x in 0..n {
        for y in x..n {
            let ub = p.common_upper_bounds(x, y);
            let minimal: Vec<usize> = ub
                .iter()
                .copied()
                .filter(|&u| ub.iter().all(|&v| v == u || !p.leq(v, u)))
                .collect();
            let [j] = minimal[..] else {
                return Err(LatticeFailure::NoJoin {
                    x,
                    y,
                    bounds: minimal,
                });
            };
            let lb = p.common_lower_bounds(x, y);
            let maximal: Vec<usize> = lb
                .iter()
                .copied()
                .filter(|&l| lb.iter().all(|&v| v == l || !p.leq(l, v)))
                .collect();
            let [m] = maximal[..] else {
                return Err(LatticeFailure::NoMeet {
                    x,
                    y,
                    bounds: maximal,
                });
            };
            join[x * n + y] = j;
            join[y * n + x] = j;
            meet[x * n + y] = m;
            meet[y * n + x] = m;
        }
    }
    Ok(Lattice {
        poset: p.clone(),
        join,
        meet,
    })
}

impl Lattice {
    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.poset.len() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.poset.len() + y]
    }

    pub fn bottom(&self) -> usize {
        self.poset.least().expect("finite lattices are bounded")
    }

    pub fn top(&self) -> usize {
        self.poset.greatest().expect("finite lattices are bounded")
    }

    /// Elements covering exactly one element, ordered by height then index
    /// (a linear extension of the order).
    pub fn join_irreducibles(&self) -> Vec<usize> {
        let h = self.poset.heights();
        let mut ji: Vec<usize> = (0..self.poset.len())
            .filter(|&x| self.poset.lower_covers(x).len() == 1)
            .collect();
        ji.sort_by_key(|&x| (h[x], x));
        ji
    }

    /// First pair `(x, y)` covering a common element whose join fails to cover both.
    pub fn semimodularity_witness(&self) -> Option<(usize, usize)> {
        let p = &self.poset;
        for m in 0..p.len() {
            let ups = p.upper_covers(m);
            for (i, &x) in ups.iter().enumerate() {
                for &y in &ups[i + 1..] {
                    let j = self.join(x, y);
                    if !(p.is_cover(x, j) && p.is_cover(y, j)) {
                        return Some((x, y));
                    }
                }
            }
        }
        None
    }

    pub fn is_semimodular(&self) -> bool {
        self.semimodularity_witness().is_none()
    }

    pub fn check_semimodular(&self) -> Result<()> {
        match self.semimodularity_witness() {
            Some((x, y)) => Err(Error::NotSemimodular { x, y }),
            None => Ok(()),
        }
    }
}

//! Exact-hitting-set search shared by antichain cutsets and exact transversals.
//!
//! Given a universe `0..n` and a family of blocks, find every subset of the
//! universe meeting each block in exactly one point. The search repeatedly
//! picks an unsatisfied block with the fewest remaining candidates, branches on
//! each candidate in ascending order, marks every block through the chosen
//! point satisfied and forbids all other points of those blocks. Points lying
//! in no block are unconstrained and are combined freely into each solution.

use fixedbitset::FixedBitSet;

pub struct ExactHitting<'a> {
    n: usize,
    blocks: &'a [Vec<usize>],
    /// blocks_through[v]: indices of blocks containing v
    blocks_through: Vec<Vec<usize>>,
}

struct State {
    satisfied: FixedBitSet,
    forbidden: FixedBitSet,
    chosen: Vec<usize>,
}

impl<'a> ExactHitting<'a> {
    /// `blocks` must contain only points below `n`.
    pub fn new(n: usize, blocks: &'a [Vec<usize>]) -> Self {
        let mut blocks_through = vec![Vec::new(); n];
        for (i, b) in blocks.iter().enumerate() {
            for &v in b {
                blocks_through[v].push(i);
            }
        }
        for l in &mut blocks_through {
            l.dedup();
        }
        ExactHitting {
            n,
            blocks,
            blocks_through,
        }
    }

    /// Every exact hitting set, each sorted, in lexicographic order.
    pub fn solve(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each(|s| {
            out.push(s.to_vec());
            true
        });
        out.sort();
        out
    }

    /// Visits solutions until `visit` returns `false`. Solutions are sorted but
    /// arrive in search order.
    pub fn for_each(&self, mut visit: impl FnMut(&[usize]) -> bool) {
        if self.blocks.iter().any(Vec::is_empty) {
            return;
        }
        let free: Vec<usize> = (0..self.n)
            .filter(|&v| self.blocks_through[v].is_empty())
            .collect();
        let mut state = State {
            satisfied: FixedBitSet::with_capacity(self.blocks.len()),
            forbidden: FixedBitSet::with_capacity(self.n),
            chosen: Vec::new(),
        };
        self.search(&mut state, &free, &mut visit);
    }

    fn search(
        &self,
        st: &mut State,
        free: &[usize],
        visit: &mut impl FnMut(&[usize]) -> bool,
    ) -> bool {
        let mut best: Option<(usize, usize)> = None;
        for (i, b) in self.blocks.iter().enumerate() {
            if st.satisfied.contains(i) {
                continue;
            }
            let live = b.iter().filter(|&&v| !st.forbidden.contains(v)).count();
            if live == 0 {
                return true;
            }
            if best.is_none_or(|(_, c)| live < c) {
                best = Some((i, live));
            }
        }
        let Some((block, _)) = best else {
            return emit_with_free(&st.chosen, free, visit);
        };
        let mut candidates: Vec<usize> = self.blocks[block]
            .iter()
            .copied()
            .filter(|&v| !st.forbidden.contains(v))
            .collect();
        candidates.sort_unstable();
        for v in candidates {
            let saved_sat = st.satisfied.clone();
            let saved_forb = st.forbidden.clone();
            st.chosen.push(v);
            for &bi in &self.blocks_through[v] {
                st.satisfied.insert(bi);
                for &w in &self.blocks[bi] {
                    st.forbidden.insert(w);
                }
            }
            let keep_going = self.search(st, free, visit);
            st.chosen.pop();
            st.satisfied = saved_sat;
            st.forbidden = saved_forb;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

fn emit_with_free(
    chosen: &[usize],
    free: &[usize],
    visit: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    let subsets = 1u64
        .checked_shl(free.len() as u32)
        .expect("too many unconstrained points");
    for mask in 0..subsets {
        let mut s: Vec<usize> = chosen.to_vec();
        s.extend(
            free.iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v),
        );
        s.sort_unstable();
        if !visit(&s) {
            return false;
        }
    }
    true
}

/// Brute-force reference: all subsets meeting each block exactly once.
#[cfg(test)]
pub(crate) fn brute_force(n: usize, blocks: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for mask in 0u64..1 << n {
        if blocks
            .iter()
            .all(|b| b.iter().filter(|&&v| mask >> v & 1 == 1).count() == 1)
        {
            out.push((0..n).filter(|&v| mask >> v & 1 == 1).collect());
        }
    }
    out
}

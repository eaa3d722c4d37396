//! Finite posets stored as a transitively reduced cover relation together with
//! bitset rows of the derived order.
//!
//! Elements are dense indices `0..n`. Every collection handed out by this module
//! is sorted ascending, and maximal chains come out in lexicographic order of
//! their element sequences, so downstream output is byte-stable.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};

/// A finite partially ordered set on the elements `0..n`.
#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    upper: Vec<Vec<usize>>,
    lower: Vec<Vec<usize>>,
    // up[x] = { y : x <= y }, down[y] = { x : x <= y }
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    names: Option<Vec<String>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.covers == other.covers && self.names == other.names
    }
}

impl Eq for Poset {}

/// A saturated chain running from a minimal to a maximal element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct MaximalChain(Vec<usize>);

impl MaximalChain {
    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    /// Number of elements in the chain.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Chain length in the order-theoretic sense: one less than the cardinality.
    pub fn length(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(&x)
    }

    /// The chain as a set, sorted by element index.
    pub fn to_set(&self) -> Vec<usize> {
        let mut s = self.0.clone();
        s.sort_unstable();
        s
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

/// A closed interval `[bottom, top]` together with its induced subposet.
#[derive(Clone, Debug)]
pub struct Interval {
    pub bottom: usize,
    pub top: usize,
    /// Induced subposet; element `i` of `sub` is `embedding[i]` in the parent.
    pub sub: Poset,
    pub embedding: Vec<usize>,
}

impl Interval {
    /// Maps an element of the subposet back to the parent.
    pub fn to_parent(&self, i: usize) -> usize {
        self.embedding[i]
    }

    /// Maps a parent element into the subposet, if it lies in the interval.
    pub fn from_parent(&self, x: usize) -> Option<usize> {
        self.embedding.binary_search(&x).ok()
    }
}

impl Poset {
    /// Builds a poset from arbitrary order pairs `(x, y)` meaning `x < y`.
    ///
    /// The pairs are closed transitively and then reduced, so a full relation
    /// such as divisibility may be passed directly.
    pub fn build(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut succ = vec![Vec::new(); n];
        for &(x, y) in pairs {
            for z in [x, y] {
                if z >= n {
                    return Err(Error::IndexOutOfRange { index: z, n });
                }
            }
            if x == y {
                return Err(Error::SelfLoop(x));
            }
            succ[x].push(y);
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }
        let order = topological_order(&succ).ok_or_else(|| Error::Cycle(find_cycle(&succ)))?;

        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &x in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(x);
            for &s in &succ[x] {
                row.union_with(&up[s]);
            }
            up[x] = row;
        }

        // A cover of x is necessarily one of its direct successors, and it is a
        // cover iff no other successor lies strictly below it.
        let mut covers = Vec::new();
        for x in 0..n {
            let mut above_succ = FixedBitSet::with_capacity(n);
            for &s in &succ[x] {
                let mut strict = up[s].clone();
                strict.set(s, false);
                above_succ.union_with(&strict);
            }
            for &s in &succ[x] {
                if !above_succ.contains(s) {
                    covers.push((x, s));
                }
            }
        }
        covers.sort_unstable();
        Ok(Self::assemble(n, covers, up, None))
    }

    fn assemble(
        n: usize,
        covers: Vec<(usize, usize)>,
        up: Vec<FixedBitSet>,
        names: Option<Vec<String>>,
    ) -> Self {
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(x, y) in &covers {
            upper[x].push(y);
            lower[y].push(x);
        }
        for l in &mut lower {
            l.sort_unstable();
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].insert(x);
            }
        }
        Poset {
            n,
            covers,
            upper,
            lower,
            up,
            down,
            names,
        }
    }

    /// Attaches display names, one per element.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.n {
            return Err(Error::InvalidParam(format!(
                "{} names supplied for {} elements",
                names.len(),
                self.n
            )));
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_names(mut self) -> Self {
        self.names = None;
        self
    }

    /// The chain `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::build(n, &pairs).expect("a chain is acyclic")
    }

    /// `n` pairwise incomparable elements.
    pub fn antichain(n: usize) -> Self {
        Self::build(n, &[]).expect("no relations")
    }

    /// Disjoint union; elements of `other` are shifted by `self.len()`.
    pub fn disjoint_union(&self, other: &Poset) -> Poset {
        let shift = self.n;
        let mut pairs = self.covers.clone();
        pairs.extend(other.covers.iter().map(|&(x, y)| (x + shift, y + shift)));
        let p = Self::build(self.n + other.n, &pairs).expect("union of acyclic relations");
        match (&self.names, &other.names) {
            (None, None) => p,
            _ => {
                let names = (0..self.n)
                    .map(|x| self.name(x))
                    .chain((0..other.n).map(|x| other.name(x)))
                    .collect();
                p.with_names(names).expect("name count matches")
            }
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// The cover relation, sorted lexicographically.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn is_cover(&self, x: usize, y: usize) -> bool {
        self.covers.binary_search(&(x, y)).is_ok()
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.lower[x]
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of `x`, falling back to its index.
    pub fn name(&self, x: usize) -> String {
        match &self.names {
            Some(names) => names[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|n| n == name)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// `{ y : x <= y }` as a bitset row.
    pub fn up_set(&self, x: usize) -> &FixedBitSet {
        &self.up[x]
    }

    /// `{ y : y <= x }` as a bitset row.
    pub fn down_set(&self, x: usize) -> &FixedBitSet {
        &self.down[x]
    }

    /// All strict order pairs `x < y`, sorted.
    pub fn relations(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|x| {
                self.up[x]
                    .ones()
                    .filter(move |&y| y != x)
                    .map(move |y| (x, y))
            })
            .collect()
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.lower[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.upper[x].is_empty()).collect()
    }

    pub fn least(&self) -> Option<usize> {
        match self.minimal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn greatest(&self) -> Option<usize> {
        match self.maximal_elements().as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.least().is_some() && self.greatest().is_some()
    }

    pub fn is_antichain(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &x)| set[i + 1..].iter().all(|&y| !self.comparable(x, y)))
    }

    /// Common lower bounds of `x` and `y`, ascending.
    pub fn common_lower_bounds(&self, x: usize, y: usize) -> Vec<usize> {
        let mut s = self.down[x].clone();
        s.intersect_with(&self.down[y]);
        s.ones().collect()
    }

    /// Common upper bounds of `x` and `y`, ascending.
    pub fn common_upper_bounds(&self, x: usize, y: usize) -> Vec<usize> {
        let mut s = self.up[x].clone();
        s.intersect_with(&self.up[y]);
        s.ones().collect()
    }

    /// Length of the longest chain ending at each element; minimal elements get 0.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = vec![0; self.n];
        for x in self.linear_extension() {
            for &y in &self.upper[x] {
                h[y] = h[y].max(h[x] + 1);
            }
        }
        h
    }

    /// A linear extension of the order (Kahn's algorithm, smallest index first).
    pub fn linear_extension(&self) -> Vec<usize> {
        let succ: Vec<Vec<usize>> = self.upper.clone();
        topological_order(&succ).expect("covers are acyclic")
    }

    /// Length of the longest chain in the poset, `None` for the empty poset.
    pub fn height(&self) -> Option<usize> {
        self.heights().into_iter().max()
    }

    /// Induced subposet on `{ z : x <= z <= y }`.
    pub fn interval(&self, x: usize, y: usize) -> Result<Interval> {
        self.check_index(x)?;
        self.check_index(y)?;
        if !self.leq(x, y) {
            return Err(Error::NotComparable(x, y));
        }
        let mut members = self.up[x].clone();
        members.intersect_with(&self.down[y]);
        let embedding: Vec<usize> = members.ones().collect();
        let sub = self.induced(&embedding);
        Ok(Interval {
            bottom: x,
            top: y,
            sub,
            embedding,
        })
    }

    /// Induced subposet on a sorted list of elements.
    pub fn induced(&self, elements: &[usize]) -> Poset {
        let index = |e: usize| elements.binary_search(&e).ok();
        let mut covers = Vec::new();
        for (i, &e) in elements.iter().enumerate() {
            for f in self.up[e].ones() {
                if f == e {
                    continue;
                }
                if let Some(j) = index(f) {
                    covers.push((i, j));
                }
            }
        }
        let p = Poset::build(elements.len(), &covers).expect("restriction of an order is acyclic");
        match &self.names {
            Some(names) => p
                .with_names(elements.iter().map(|&e| names[e].clone()).collect())
                .expect("name count matches"),
            None => p,
        }
    }

    fn check_index(&self, x: usize) -> Result<()> {
        if x < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: x,
                n: self.n,
            })
        }
    }

    /// All maximal chains, in lexicographic order of element sequences.
    pub fn maximal_chains(&self) -> Vec<MaximalChain> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for m in self.minimal_elements() {
            stack.push(m);
            self.extend_chains(&mut stack, None, &mut out);
            stack.pop();
        }
        out.into_iter().map(MaximalChain).collect()
    }

    /// Saturated chains from `x` to `y` (the maximal chains of `[x, y]`), as
    /// element sequences of the parent, in lexicographic order.
    pub fn saturated_chains(&self, x: usize, y: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if !self.leq(x, y) {
            return out;
        }
        let mut stack = vec![x];
        self.extend_chains(&mut stack, Some(y), &mut out);
        out
    }

    fn extend_chains(
        &self,
        stack: &mut Vec<usize>,
        target: Option<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *stack.last().expect("non-empty stack");
        if target == Some(last) || (target.is_none() && self.upper[last].is_empty()) {
            out.push(stack.clone());
            return;
        }
        for &z in &self.upper[last] {
            if let Some(t) = target {
                if !self.leq(z, t) {
                    continue;
                }
            }
            stack.push(z);
            self.extend_chains(stack, target, out);
            stack.pop();
        }
    }

    /// Number of maximal chains, saturating at `u128::MAX`.
    pub fn count_maximal_chains(&self) -> u128 {
        if self.n == 0 {
            return 0;
        }
        // chains[x] = number of saturated chains from x to some maximal element
        let mut chains = vec![0u128; self.n];
        for x in self.linear_extension().into_iter().rev() {
            chains[x] = if self.upper[x].is_empty() {
                1
            } else {
                self.upper[x]
                    .iter()
                    .fold(0u128, |acc, &y| acc.saturating_add(chains[y]))
            };
        }
        self.minimal_elements()
            .iter()
            .fold(0u128, |acc, &m| acc.saturating_add(chains[m]))
    }

    /// Validates that `elements` is a maximal chain of this poset.
    pub fn maximal_chain(&self, elements: Vec<usize>) -> Result<MaximalChain> {
        let ok = !elements.is_empty()
            && elements.iter().all(|&e| e < self.n)
            && self.lower[elements[0]].is_empty()
            && self.upper[*elements.last().unwrap()].is_empty()
            && elements.windows(2).all(|w| self.is_cover(w[0], w[1]));
        if ok {
            Ok(MaximalChain(elements))
        } else {
            Err(Error::NotAMaximalChain(elements))
        }
    }

    /// Adds a least element and/or a greatest element when missing.
    ///
    /// New elements are appended: the bottom (if added) gets index `n`, the top
    /// the next free index.
    pub fn bound_augment(&self) -> Poset {
        let mut n = self.n;
        let mut pairs = self.covers.clone();
        let mut names = self.names.clone();
        let mut bottom = None;
        if self.least().is_none() {
            bottom = Some(n);
            pairs.extend(self.minimal_elements().into_iter().map(|m| (n, m)));
            n += 1;
            if let Some(v) = names.as_mut() {
                v.push("bottom".to_string());
            }
        }
        if self.greatest().is_none() {
            pairs.extend(self.maximal_elements().into_iter().map(|m| (m, n)));
            if self.n == 0 {
                pairs.extend(bottom.map(|b| (b, n)));
            }
            n += 1;
            if let Some(v) = names.as_mut() {
                v.push("top".to_string());
            }
        }
        let p = Poset::build(n, &pairs).expect("augmenting by bounds keeps the relation acyclic");
        match names {
            Some(v) => p.with_names(v).expect("name count matches"),
            None => p,
        }
    }

    /// Connected components of the Hasse diagram, each sorted, ordered by smallest element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![s];
            comp[s] = id;
            let mut queue = VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in self.upper[x].iter().chain(&self.lower[x]) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }
}

fn topological_order(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for s in succ {
        for &y in s {
            indeg[y] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&x| indeg[x] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(x)) = ready.pop() {
        order.push(x);
        for &y in &succ[x] {
            indeg[y] -= 1;
            if indeg[y] == 0 {
                ready.push(Reverse(y));
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Returns a directed cycle `v0 -> v1 -> ... -> v0` (with `v0` repeated at the end).
fn find_cycle(succ: &[Vec<usize>]) -> Vec<usize> {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Active,
        Done,
    }
    let n = succ.len();
    let mut mark = vec![Mark::New; n];
    for root in 0..n {
        if mark[root] != Mark::New {
            continue;
        }
        // iterative DFS: (vertex, next successor position)
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Active;
        while let Some(&mut (v, ref mut pos)) = stack.last_mut() {
            if let Some(&w) = succ[v].get(*pos) {
                *pos += 1;
                match mark[w] {
                    Mark::New => {
                        mark[w] = Mark::Active;
                        stack.push((w, 0));
                    }
                    Mark::Active => {
                        let start = stack.iter().position(|&(u, _)| u == w).unwrap();
                        let mut cycle: Vec<usize> =
                            stack[start..].iter().map(|&(u, _)| u).collect();
                        cycle.push(w);
                        return cycle;
                    }
                    Mark::Done => {}
                }
            } else {
                mark[v] = Mark::Done;
                stack.pop();
            }
        }
    }
    Vec::new()
}

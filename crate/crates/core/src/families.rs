//! Deterministic generators for the standard posets and hypergraphs.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::poset::Poset;
use crate::Instance;

/// Default cap on generated instance size (elements or vertices).
pub const DEFAULT_MAX_ELEMENTS: usize = 4096;
/// Default cap on the number of hypergraph edges a generator may emit.
pub const DEFAULT_MAX_EDGES: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Boolean,
    Subspace,
    Partition,
    Divisor,
    DivisibilitySet,
    BruhatSym,
    Grid,
    ExampleE,
    Chessboard,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Boolean,
        Family::Subspace,
        Family::Partition,
        Family::Divisor,
        Family::DivisibilitySet,
        Family::BruhatSym,
        Family::Grid,
        Family::ExampleE,
        Family::Chessboard,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Boolean => "boolean",
            Family::Subspace => "subspace",
            Family::Partition => "partition",
            Family::Divisor => "divisor",
            Family::DivisibilitySet => "divisibility_set",
            Family::BruhatSym => "bruhat_sym",
            Family::Grid => "grid",
            Family::ExampleE => "example_E",
            Family::Chessboard => "chessboard",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.replace('-', "_").to_ascii_lowercase();
        Family::ALL
            .into_iter()
            .find(|f| f.name().to_ascii_lowercase() == norm)
            .ok_or_else(|| Error::InvalidParam(format!("unknown family `{s}`")))
    }
}

/// A family together with its integer parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<i64>,
}

impl FamilySpec {
    pub fn new(family: Family, params: &[i64]) -> Self {
        FamilySpec {
            family,
            params: params.to_vec(),
        }
    }

    /// Parses a comma- or whitespace-separated parameter list.
    pub fn parse(family: &str, params: &str) -> Result<Self> {
        let family = family.parse()?;
        let params = params
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::InvalidParam(format!("`{t}` is not an integer")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FamilySpec { family, params })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(i64::to_string).collect();
        write!(f, "{}({})", self.family, params.join(","))
    }
}

fn arity(spec: &FamilySpec, allowed: &[usize]) -> Result<()> {
    if allowed.contains(&spec.params.len()) {
        Ok(())
    } else {
        Err(Error::InvalidParam(format!(
            "{} takes {:?} parameters, got {}",
            spec.family,
            allowed,
            spec.params.len()
        )))
    }
}

fn non_negative(v: i64, what: &str) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::InvalidParam(format!("{what} must be >= 0, got {v}")))
}

fn check_size(count: u128, max: usize, what: &str) -> Result<()> {
    if count > max as u128 {
        Err(Error::TooLarge(format!(
            "{what} would have {count} elements (limit {max})"
        )))
    } else {
        Ok(())
    }
}

pub fn generate(spec: &FamilySpec) -> Result<Instance> {
    generate_with_limit(spec, DEFAULT_MAX_ELEMENTS)
}

/// Generates the instance, refusing anything with more than `max_elements`
/// elements (or vertices).
pub fn generate_with_limit(spec: &FamilySpec, max_elements: usize) -> Result<Instance> {
    let p = &spec.params;
    let poset = match spec.family {
        Family::Boolean => {
            arity(spec, &[1])?;
            let n = non_negative(p[0], "n")?;
            check_size(
                1u128.checked_shl(n as u32).unwrap_or(u128::MAX),
                max_elements,
                "boolean",
            )?;
            boolean(n)
        }
        Family::Subspace => {
            arity(spec, &[2])?;
            let q = non_negative(p[0], "q")?;
            let n = non_negative(p[1], "n")?;
            if !is_prime(q) {
                return Err(Error::InvalidParam(format!("q = {q} is not prime")));
            }
            if (q as u128)
                .checked_pow(n as u32)
                .is_none_or(|s| s > 1 << 10)
            {
                return Err(Error::InvalidParam(format!("q^n = {q}^{n} exceeds 2^10")));
            }
            check_size(subspace_count(q as u128, n), max_elements, "subspace")?;
            subspace(q, n)
        }
        Family::Partition => {
            arity(spec, &[1])?;
            let n = non_negative(p[0], "n")?;
            check_size(bell(n), max_elements, "partition")?;
            partition(n)
        }
        Family::Divisor => {
            arity(spec, &[1])?;
            if p[0] < 1 {
                return Err(Error::InvalidParam(format!("N must be >= 1, got {}", p[0])));
            }
            let n = p[0] as u64;
            let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            check_size(divisors.len() as u128, max_elements, "divisor")?;
            divisibility(&divisors)
        }
        Family::DivisibilitySet => {
            if p.iter().any(|&v| v < 1) {
                return Err(Error::InvalidParam(
                    "divisibility_set entries must be >= 1".into(),
                ));
            }
            let mut values: Vec<u64> = p.iter().map(|&v| v as u64).collect();
            values.sort_unstable();
            if values.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidParam(
                    "divisibility_set entries must be distinct".into(),
                ));
            }
            check_size(values.len() as u128, max_elements, "divisibility_set")?;
            divisibility(&values)
        }
        Family::BruhatSym => {
            arity(spec, &[1])?;
            let n = non_negative(p[0], "n")?;
            check_size((1..=n as u128).product(), max_elements, "bruhat_sym")?;
            bruhat_sym(n)
        }
        Family::Grid => {
            arity(spec, &[2, 3])?;
            let m = non_negative(p[0], "m")?;
            let n = non_negative(p[1], "n")?;
            let top = p.get(2).is_some_and(|&t| t != 0);
            check_size(
                (m as u128) * (n as u128) + top as u128,
                max_elements,
                "grid",
            )?;
            grid(m, n, top)
        }
        Family::ExampleE => {
            arity(spec, &[0])?;
            example_e()
        }
        Family::Chessboard => {
            arity(spec, &[2])?;
            let a = non_negative(p[0], "a")?;
            let b = non_negative(p[1], "b")?;
            if a == 0 || a > b {
                return Err(Error::InvalidParam(format!(
                    "chessboard needs 1 <= a <= b, got a={a}, b={b}"
                )));
            }
            check_size((a * b) as u128, max_elements, "chessboard")?;
            let edges: u128 = (b - a + 1..=b).map(|k| k as u128).product();
            if edges > DEFAULT_MAX_EDGES as u128 {
                return Err(Error::TooLarge(format!(
                    "chessboard({a},{b}) has {edges} edges"
                )));
            }
            return Ok(Instance::Hypergraph(chessboard(a, b)));
        }
    };
    Ok(Instance::Poset(poset))
}

/// Subsets of `{1..n}` by inclusion; element `s` is the subset with bitmask `s`.
pub fn boolean(n: usize) -> Poset {
    let size = 1usize << n;
    let mut pairs = Vec::new();
    for s in 0..size {
        for b in 0..n {
            if s & (1 << b) == 0 {
                pairs.push((s, s | 1 << b));
            }
        }
    }
    let names = (0..size)
        .map(|s| {
            let items: Vec<String> = (0..n)
                .filter(|b| s >> b & 1 == 1)
                .map(|b| (b + 1).to_string())
                .collect();
            format!("{{{}}}", items.join(","))
        })
        .collect();
    Poset::build(size, &pairs)
        .and_then(|p| p.with_names(names))
        .expect("boolean lattice")
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

fn subspace_count(q: u128, n: usize) -> u128 {
    // sum of Gaussian binomials [n choose k]_q
    let mut total = 0u128;
    for k in 0..=n {
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k {
            num = num.saturating_mul(q.saturating_pow((n - i) as u32).saturating_sub(1));
            den = den.saturating_mul(q.saturating_pow((i + 1) as u32).saturating_sub(1));
        }
        total = total.saturating_add(num / den.max(1));
    }
    total
}

/// Subspaces of the `n`-dimensional space over the field with `q` elements
/// (`q` prime), ordered by inclusion. Subspaces are listed by dimension, then by
/// reduced row echelon form; names list the basis rows.
pub fn subspace(q: usize, n: usize) -> Poset {
    let mut spaces: Vec<(Vec<Vec<usize>>, Vec<usize>)> = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            for basis in echelon_bases(q, n, &pivots) {
                let span = span(q, n, &basis);
                spaces.push((basis, span));
            }
        }
    }
    let encode = |v: &[usize]| v.iter().fold(0usize, |acc, &d| acc * q + d);
    let mut pairs = Vec::new();
    for (i, (bi, _)) in spaces.iter().enumerate() {
        for (j, (bj, sj)) in spaces.iter().enumerate() {
            if bj.len() == bi.len() + 1
                && bi.iter().all(|row| sj.binary_search(&encode(row)).is_ok())
            {
                pairs.push((i, j));
            }
        }
    }
    let names = spaces
        .iter()
        .map(|(basis, _)| {
            let rows: Vec<String> = basis
                .iter()
                .map(|r| r.iter().map(|d| d.to_string()).collect::<String>())
                .collect();
            format!("<{}>", rows.join(","))
        })
        .collect();
    Poset::build(spaces.len(), &pairs)
        .and_then(|p| p.with_names(names))
        .expect("subspace lattice")
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// All reduced row echelon `k x n` matrices over F_q with the given pivot columns.
fn echelon_bases(q: usize, n: usize, pivots: &[usize]) -> Vec<Vec<Vec<usize>>> {
    // free positions: (row, col) with col > pivot[row] and col not a pivot
    let free: Vec<(usize, usize)> = pivots
        .iter()
        .enumerate()
        .flat_map(|(r, &p)| {
            (p + 1..n)
                .filter(|c| !pivots.contains(c))
                .map(move |c| (r, c))
        })
        .collect();
    let total = q.pow(free.len() as u32);
    (0..total)
        .map(|mut code| {
            let mut rows = vec![vec![0; n]; pivots.len()];
            for (r, &p) in pivots.iter().enumerate() {
                rows[r][p] = 1;
            }
            // last free position varies fastest
            for &(r, c) in free.iter().rev() {
                rows[r][c] = code % q;
                code /= q;
            }
            rows
        })
        .collect()
}

/// Encoded vectors (base q, first coordinate most significant) of the span, sorted.
fn span(q: usize, n: usize, basis: &[Vec<usize>]) -> Vec<usize> {
    let k = basis.len();
    let mut out: Vec<usize> = (0..q.pow(k as u32))
        .map(|mut code| {
            let mut v = vec![0; n];
            for row in basis {
                let coef = code % q;
                code /= q;
                for (x, &b) in v.iter_mut().zip(row) {
                    *x = (*x + coef * b) % q;
                }
            }
            v.iter().fold(0usize, |acc, &d| acc * q + d)
        })
        .collect();
    out.sort_unstable();
    out
}

fn bell(n: usize) -> u128 {
    // Bell triangle
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let last = *next.last().unwrap();
            next.push(last.saturating_add(x));
        }
        row = next;
    }
    row[0]
}

/// Set partitions of `{1..n}` ordered by refinement, finest at the bottom.
/// Elements are sorted by number of blocks (descending), then by restricted
/// growth string.
pub fn partition(n: usize) -> Poset {
    let mut rgs: Vec<Vec<usize>> = Vec::new();
    fn rec(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..=max + 1 {
            cur.push(b);
            rec(n, cur, max.max(b), out);
            cur.pop();
        }
    }
    if n == 0 {
        rgs.push(Vec::new());
    } else {
        let mut cur = vec![0];
        rec(n, &mut cur, 0, &mut rgs);
    }
    let blocks = |s: &Vec<usize>| s.iter().max().map_or(0, |m| m + 1);
    rgs.sort_by(|a, b| blocks(b).cmp(&blocks(a)).then_with(|| a.cmp(b)));
    let index: HashMap<Vec<usize>, usize> = rgs
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, s)| (s, i))
        .collect();
    let mut pairs = Vec::new();
    for (i, s) in rgs.iter().enumerate() {
        let k = blocks(s);
        for a in 0..k {
            for b in a + 1..k {
                // merge block b into a, then renormalize to a restricted growth string
                let merged: Vec<usize> = s.iter().map(|&x| if x == b { a } else { x }).collect();
                pairs.push((i, index[&normalize_rgs(&merged)]));
            }
        }
    }
    let names = rgs
        .iter()
        .map(|s| {
            let k = blocks(s);
            let parts: Vec<String> = (0..k)
                .map(|blk| {
                    s.iter()
                        .enumerate()
                        .filter(|&(_, &x)| x == blk)
                        .map(|(i, _)| (i + 1).to_string())
                        .collect::<String>()
                })
                .collect();
            parts.join("|")
        })
        .collect();
    Poset::build(rgs.len(), &pairs)
        .and_then(|p| p.with_names(names))
        .expect("partition lattice")
}

fn normalize_rgs(s: &[usize]) -> Vec<usize> {
    let mut relabel: HashMap<usize, usize> = HashMap::new();
    s.iter()
        .map(|&x| {
            let next = relabel.len();
            *relabel.entry(x).or_insert(next)
        })
        .collect()
}

/// The given positive integers, sorted ascending, ordered by divisibility.
pub fn divisibility(values: &[u64]) -> Poset {
    let mut pairs = Vec::new();
    for (i, &a) in values.iter().enumerate() {
        for (j, &b) in values.iter().enumerate() {
            if i != j && b % a == 0 {
                pairs.push((i, j));
            }
        }
    }
    let names = values.iter().map(u64::to_string).collect();
    Poset::build(values.len(), &pairs)
        .and_then(|p| p.with_names(names))
        .expect("divisibility order")
}

pub fn divisor(n: u64) -> Poset {
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    divisibility(&divisors)
}

/// The divisibility poset on {1, 2, 3, 4, 5, 25, 30, 200, 300, 600}: strongly
/// connected, yet its interval [1, 200] is not.
pub fn example_e() -> Poset {
    divisibility(&[1, 2, 3, 4, 5, 25, 30, 200, 300, 600])
}

pub fn inversions(w: &[usize]) -> usize {
    (0..w.len())
        .map(|i| (i + 1..w.len()).filter(|&j| w[i] > w[j]).count())
        .sum()
}

/// Permutations of `{1..n}` in lexicographic order of one-line notation, under
/// the Bruhat order: `u ⋖ ut` when the transposition `t` (swapping two
/// positions) raises the inversion count by exactly one.
pub fn bruhat_sym(n: usize) -> Poset {
    let perms = permutations(n);
    let index: HashMap<&Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let inv: Vec<usize> = perms.iter().map(|p| inversions(p)).collect();
    let mut pairs = Vec::new();
    for (i, u) in perms.iter().enumerate() {
        for a in 0..n {
            for b in a + 1..n {
                let mut ut = u.clone();
                ut.swap(a, b);
                let j = index[&ut];
                if inv[j] == inv[i] + 1 {
                    pairs.push((i, j));
                }
            }
        }
    }
    let names = perms
        .iter()
        .map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(""))
        .collect();
    Poset::build(perms.len(), &pairs)
        .and_then(|p| p.with_names(names))
        .expect("Bruhat order")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for x in 0..n {
            if !used[x] {
                used[x] = true;
                cur.push(x + 1);
                rec(n, cur, used, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// The product of chains `[m] x [n]`; element `(i, j)` has index `i * n + j`.
/// With `top`, an extra greatest element is appended.
pub fn grid(m: usize, n: usize, top: bool) -> Poset {
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in 0..n {
            if i + 1 < m {
                pairs.push((i * n + j, (i + 1) * n + j));
            }
            if j + 1 < n {
                pairs.push((i * n + j, i * n + j + 1));
            }
        }
    }
    let mut size = m * n;
    let mut names: Vec<String> = (0..m * n)
        .map(|k| format!("({},{})", k / n, k % n))
        .collect();
    if top {
        pairs.extend((0..m * n).map(|k| (k, size)));
        size += 1;
        names.push("top".into());
    }
    Poset::build(size, &pairs)
        .and_then(|p| p.with_names(names))
        .expect("grid")
}

/// Non-attacking placements of `a` rooks on an `a x b` board; square
/// `(row, col)` is vertex `row * b + col`.
pub fn chessboard(a: usize, b: usize) -> Hypergraph {
    fn rec(a: usize, b: usize, used: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if used.len() == a {
            out.push(used.iter().enumerate().map(|(r, &c)| r * b + c).collect());
            return;
        }
        for c in 0..b {
            if !used.contains(&c) {
                used.push(c);
                rec(a, b, used, out);
                used.pop();
            }
        }
    }
    let mut edges = Vec::new();
    rec(a, b, &mut Vec::new(), &mut edges);
    Hypergraph::new(a, a * b, edges).expect("rook placements are distinct a-sets")
}

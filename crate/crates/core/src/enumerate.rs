//! Exhaustive search for twisted virtual biracks of a given order.
//!
//! Cells are assigned in the order `U` column by column, `L` column by column,
//! then `vU`, `vL` and finally the twist column. Every column of the four
//! square blocks must be a permutation (sideways invertibility), so candidate
//! values already used in the current column are skipped. After each
//! assignment the axioms relevant to the block being filled are evaluated on
//! the partial tables and the branch is abandoned on the first fully evaluated
//! counterexample.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::birack::{check_verdict, Check, Structure, Tables, TwistedVirtualBirack, Verdict};
use crate::error::{Error, Result};

const UNSET: u8 = u8::MAX;

/// Search counters. `prunes` is keyed by check name.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Stats {
    pub nodes: u64,
    pub prunes: BTreeMap<String, u64>,
}

impl Stats {
    fn prune(&mut self, check: Check) {
        *self.prunes.entry(check.name().to_string()).or_insert(0) += 1;
    }

    fn merge(mut self, other: Stats) -> Stats {
        self.nodes += other.nodes;
        for (k, v) in other.prunes {
            *self.prunes.entry(k).or_insert(0) += v;
        }
        self
    }
}

/// All structures of order `n`, sorted by flattened row-major matrix.
#[derive(Clone, Debug)]
pub struct EnumerationResult {
    pub n: usize,
    pub structures: Vec<TwistedVirtualBirack>,
    pub stats: Stats,
}

#[derive(Clone, Debug, Default)]
pub struct EnumerateOptions {
    /// Restrict the search to this twist column (0-based images).
    pub twist: Option<Vec<usize>>,
    /// Split the search over the first `U` column across threads.
    pub parallel: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Block {
    B1,
    B2,
    V1,
    V2,
    T,
}

#[derive(Clone, Copy, Debug)]
struct Cell {
    block: Block,
    x: usize,
    y: usize,
}

#[derive(Clone)]
struct Partial {
    n: usize,
    b1: Vec<u8>,
    b2: Vec<u8>,
    v1: Vec<u8>,
    v2: Vec<u8>,
    t: Vec<u8>,
}

fn known(v: u8) -> Option<usize> {
    (v != UNSET).then_some(v as usize)
}

impl Tables for Partial {
    fn order(&self) -> usize {
        self.n
    }
    fn bp(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        Some((self.b1(x, y)?, self.b2(x, y)?))
    }
    fn b1(&self, x: usize, y: usize) -> Option<usize> {
        known(self.b1[x * self.n + y])
    }
    fn b2(&self, x: usize, y: usize) -> Option<usize> {
        known(self.b2[x * self.n + y])
    }
    fn vp(&self, x: usize, y: usize) -> Option<(usize, usize)> {
        Some((self.v1(x, y)?, self.v2(x, y)?))
    }
    fn v1(&self, x: usize, y: usize) -> Option<usize> {
        known(self.v1[x * self.n + y])
    }
    fn v2(&self, x: usize, y: usize) -> Option<usize> {
        known(self.v2[x * self.n + y])
    }
    fn tw(&self, x: usize) -> Option<usize> {
        known(self.t[x])
    }
}

impl Partial {
    fn new(n: usize) -> Self {
        Partial {
            n,
            b1: vec![UNSET; n * n],
            b2: vec![UNSET; n * n],
            v1: vec![UNSET; n * n],
            v2: vec![UNSET; n * n],
            t: vec![UNSET; n],
        }
    }

    fn slot(&mut self, c: Cell) -> &mut u8 {
        let n = self.n;
        match c.block {
            Block::B1 => &mut self.b1[c.x * n + c.y],
            Block::B2 => &mut self.b2[c.x * n + c.y],
            Block::V1 => &mut self.v1[c.x * n + c.y],
            Block::V2 => &mut self.v2[c.x * n + c.y],
            Block::T => &mut self.t[c.x],
        }
    }

    /// Whether `value` already occurs in the permutation column of `c`.
    fn used_in_column(&self, c: Cell, value: u8) -> bool {
        let n = self.n;
        match c.block {
            // B_1(x, ·) and V_1(x, ·) are permutations
            Block::B1 => (0..n).any(|y| self.b1[c.x * n + y] == value),
            Block::V1 => (0..n).any(|y| self.v1[c.x * n + y] == value),
            // B_2(·, y) and V_2(·, y) are permutations
            Block::B2 => (0..n).any(|x| self.b2[x * n + c.y] == value),
            Block::V2 => (0..n).any(|x| self.v2[x * n + c.y] == value),
            Block::T => false,
        }
    }

    fn to_structure(&self) -> Structure {
        Structure::from_fns(
            self.n,
            |x, y| {
                (
                    self.b1[x * self.n + y] as usize,
                    self.b2[x * self.n + y] as usize,
                )
            },
            |x, y| {
                (
                    self.v1[x * self.n + y] as usize,
                    self.v2[x * self.n + y] as usize,
                )
            },
            |x| self.t[x] as usize,
        )
        .expect("complete assignment has in-range entries")
    }
}

fn checks_for(block: Block) -> &'static [Check] {
    match block {
        Block::B1 | Block::B2 => &[Check::BBijective, Check::YangBaxterB, Check::Diagonal],
        Block::V1 | Block::V2 => &[
            Check::VBijective,
            Check::VInvolution,
            Check::YangBaxterV,
            Check::YangBaxterMixed,
            Check::Diagonal,
            Check::VirtualKink,
        ],
        Block::T => &[Check::TInvolution, Check::BarSlide, Check::TwistCrossing],
    }
}

fn cell_order(n: usize, with_twist: bool) -> Vec<Cell> {
    let mut cells = Vec::new();
    for (first, second) in [(Block::B1, Block::B2), (Block::V1, Block::V2)] {
        // upper block column i holds B_1(x_i, ·)
        for x in 0..n {
            for y in 0..n {
                cells.push(Cell { block: first, x, y });
            }
        }
        // lower block column j holds B_2(·, x_j)
        for y in 0..n {
            for x in 0..n {
                cells.push(Cell {
                    block: second,
                    x,
                    y,
                });
            }
        }
    }
    if with_twist {
        cells.extend((0..n).map(|x| Cell {
            block: Block::T,
            x,
            y: 0,
        }));
    }
    cells
}

struct Search<'a> {
    cells: &'a [Cell],
    out: Vec<Structure>,
    stats: Stats,
}

impl Search<'_> {
    fn run(&mut self, p: &mut Partial, depth: usize) {
        let Some(&cell) = self.cells.get(depth) else {
            let s = p.to_structure();
            let report = s.validate();
            if report.is_valid() {
                self.out.push(s);
            } else {
                for c in report.failures() {
                    self.stats.prune(c);
                }
            }
            return;
        };
        for value in 0..p.n as u8 {
            if p.used_in_column(cell, value) {
                self.stats.prune(Check::Sideways);
                continue;
            }
            self.stats.nodes += 1;
            *p.slot(cell) = value;
            if let Some(&c) = checks_for(cell.block)
                .iter()
                .find(|&&c| check_verdict(c, p) == Verdict::Fails)
            {
                self.stats.prune(c);
            } else {
                self.run(p, depth + 1);
            }
            *p.slot(cell) = UNSET;
        }
    }
}

/// Every twisted virtual birack on `n` elements.
pub fn enumerate_tvb(n: usize) -> Result<EnumerationResult> {
    enumerate_with(
        n,
        &EnumerateOptions {
            twist: None,
            parallel: true,
        },
    )
}

pub fn enumerate_with(n: usize, opts: &EnumerateOptions) -> Result<EnumerationResult> {
    if n == 0 {
        return Err(Error::EmptyEnumeration);
    }
    if n >= UNSET as usize {
        return Err(Error::ElementOutOfRange(n));
    }
    let mut root = Partial::new(n);
    if let Some(t) = &opts.twist {
        if t.len() != n {
            return Err(Error::MalformedMatrix {
                row: t.len().min(n) + 1,
                col: 4 * n + 1,
                reason: format!("twist column has {} entries, expected {n}", t.len()),
            });
        }
        for (x, &tx) in t.iter().enumerate() {
            if tx >= n {
                return Err(Error::ElementOutOfRange(tx + 1));
            }
            root.t[x] = tx as u8;
        }
    }
    let cells = cell_order(n, opts.twist.is_none());

    // first U column: all permutations of B_1(x_1, ·)
    let first_columns = permutations(n);
    let explore = |column: &Vec<usize>| {
        let mut p = root.clone();
        let mut search = Search {
            cells: &cells,
            out: Vec::new(),
            stats: Stats::default(),
        };
        search.stats.nodes += n as u64;
        for (y, &value) in column.iter().enumerate() {
            p.b1[y] = value as u8;
        }
        if let Some(&c) = checks_for(Block::B1)
            .iter()
            .find(|&&c| check_verdict(c, &p) == Verdict::Fails)
        {
            search.stats.prune(c);
        } else {
            search.run(&mut p, n);
        }
        (search.out, search.stats)
    };
    let parts: Vec<(Vec<Structure>, Stats)> = if opts.parallel {
        first_columns.par_iter().map(explore).collect()
    } else {
        first_columns.iter().map(explore).collect()
    };

    let mut stats = Stats::default();
    let mut found = Vec::new();
    for (out, s) in parts {
        found.extend(out);
        stats = stats.merge(s);
    }
    found.sort_by_cached_key(Structure::flat_matrix);
    let structures = found
        .into_iter()
        .map(TwistedVirtualBirack::new)
        .collect::<Result<Vec<_>>>()?;
    Ok(EnumerationResult {
        n,
        structures,
        stats,
    })
}

/// Every involution column `T` (0-based) that completes the twist-free part of
/// `vb` to a twisted virtual birack; `vb`'s own twist column is ignored.
pub fn enumerate_twist_structures(vb: &Structure) -> Result<Vec<Vec<usize>>> {
    let failed: Vec<String> = Check::TWIST_FREE
        .iter()
        .filter(|&&c| check_verdict(c, vb) != Verdict::Holds)
        .map(|c| c.name().to_string())
        .collect();
    if !failed.is_empty() {
        return Err(Error::AxiomFailure { failed });
    }
    let mut out = Vec::new();
    for t in involutions(vb.order()) {
        if vb.with_twist(t.clone())?.validate().is_valid() {
            out.push(t);
        }
    }
    out.sort();
    Ok(out)
}

/// All involutions of `{0..n}` in lexicographic order.
pub fn involutions(n: usize) -> Vec<Vec<usize>> {
    fn go(p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some(i) = p.iter().position(|&x| x == usize::MAX) else {
            out.push(p.clone());
            return;
        };
        p[i] = i;
        go(p, out);
        for j in i + 1..p.len() {
            if p[j] == usize::MAX {
                p[i] = j;
                p[j] = i;
                go(p, out);
                p[j] = usize::MAX;
            }
        }
        p[i] = usize::MAX;
    }
    let mut out = Vec::new();
    go(&mut vec![usize::MAX; n], &mut out);
    out.sort();
    out
}

/// All permutations of `{0..n}` in lexicographic order.
pub(crate) fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton() {
        let r = enumerate_tvb(1).unwrap();
        assert_eq!(r.structures.len(), 1);
        assert_eq!(r.structures[0].to_matrix(), vec![vec![1; 5]]);
    }

    #[test]
    fn zero_is_an_error() {
        assert!(enumerate_tvb(0).is_err());
    }

    #[test]
    fn two_elements_gives_eight_sorted() {
        let r = enumerate_tvb(2).unwrap();
        assert_eq!(r.structures.len(), 8);
        let keys: Vec<_> = r.structures.iter().map(|s| s.flat_matrix()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(keys, sorted);
        assert!(r.stats.nodes > 0);
    }

    #[test]
    fn serial_and_parallel_agree() {
        let serial = enumerate_with(2, &EnumerateOptions::default()).unwrap();
        let parallel = enumerate_tvb(2).unwrap();
        assert_eq!(serial.structures, parallel.structures);
        assert_eq!(serial.stats, parallel.stats);
    }

    #[test]
    fn fixed_identity_twist() {
        let r = enumerate_with(
            2,
            &EnumerateOptions {
                twist: Some(vec![0, 1]),
                parallel: false,
            },
        )
        .unwrap();
        assert_eq!(r.structures.len(), 4);
        assert!(r.structures.iter().all(|s| s.twist() == [0, 1]));
    }

    #[test]
    fn involution_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| involutions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 10, 26]);
        assert_eq!(permutations(4).len(), 24);
    }

    #[test]
    fn twist_list_for_singleton() {
        let s = Structure::from_matrix(&[[1; 5]]).unwrap();
        assert_eq!(enumerate_twist_structures(&s).unwrap(), vec![vec![0]]);
    }

    #[test]
    fn twist_search_rejects_bad_blocks() {
        let s = Structure::from_fns(2, |_, _| (0, 0), |x, y| (y, x), |x| x).unwrap();
        match enumerate_twist_structures(&s) {
            Err(Error::AxiomFailure { failed }) => assert!(failed.contains(&"b-bijective".into())),
            other => panic!("unexpected {other:?}"),
        }
    }
}

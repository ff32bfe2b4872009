//! Todd–Coxeter coset enumeration.
//!
//! HLT strategy: cosets are scanned in creation order, every relator is
//! traced from the current coset with scan-and-fill, and the row is then
//! completed by new definitions. Coincidences are resolved immediately
//! through a union-find forwarding array, always merging into the smaller
//! coset id. The process is fully deterministic.
//!
//! A generator `x` with a relator `x²` (or `x⁻²`) shares one column for `x`
//! and `x⁻¹`. Every other generator gets two columns.
//!
//! [`EnumerationResult::Exceeded`] only reports that the live-coset budget
//! ran out. It says nothing about whether the index is infinite.

use std::collections::VecDeque;
use std::fmt::Write as _;

use thiserror::Error;

use crate::presentations::{free_reduce, Letter, Presentation, Word};

/// Live-coset budget used when the caller has no better idea.
pub const DEFAULT_BUDGET: usize = 1_000_000;

const UNDEF: u32 = u32::MAX;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TcError {
    #[error("coset budget must be at least 1")]
    ZeroBudget,
    #[error("subgroup word {word} uses generator {generator}, but the presentation has {count}")]
    InvalidSubgroupWord { word: usize, generator: usize, count: usize },
    #[error("budget {0} exceeds the 32-bit coset id range")]
    BudgetTooLarge(usize),
}

/// Counters from one enumeration run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerationStats {
    /// Largest number of simultaneously live cosets.
    pub peak_live: usize,
    /// Cosets defined over the whole run, dead ones included.
    pub defined: usize,
    /// Coincidences (merges) processed.
    pub coincidences: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerationResult {
    Completed { index: usize, table: CosetTable, stats: EnumerationStats },
    Exceeded { budget: usize, stats: EnumerationStats },
}

impl EnumerationResult {
    /// The index, if the enumeration completed.
    pub fn index(&self) -> Option<usize> {
        match self {
            EnumerationResult::Completed { index, .. } => Some(*index),
            EnumerationResult::Exceeded { .. } => None,
        }
    }

    pub fn table(&self) -> Option<&CosetTable> {
        match self {
            EnumerationResult::Completed { table, .. } => Some(table),
            EnumerationResult::Exceeded { .. } => None,
        }
    }

    pub fn stats(&self) -> EnumerationStats {
        match self {
            EnumerationResult::Completed { stats, .. } | EnumerationResult::Exceeded { stats, .. } => {
                *stats
            }
        }
    }

    pub fn is_exceeded(&self) -> bool {
        matches!(self, EnumerationResult::Exceeded { .. })
    }
}

/// Column layout shared by the working state and the finished table.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Columns {
    /// Per generator: column of `x` and column of `x⁻¹`.
    of_generator: Vec<[usize; 2]>,
    /// Column of the inverse letter.
    inverse: Vec<usize>,
}

impl Columns {
    fn new(p: &Presentation) -> Self {
        let involution: Vec<bool> = (0..p.generator_count())
            .map(|g| {
                p.relators().iter().any(|w| {
                    let w = free_reduce(w);
                    w.len() == 2 && w[0] == w[1] && w[0].generator == g
                })
            })
            .collect();
        let mut of_generator = Vec::with_capacity(involution.len());
        let mut inverse = vec![];
        for &inv in &involution {
            let c = inverse.len();
            if inv {
                of_generator.push([c, c]);
                inverse.push(c);
            } else {
                of_generator.push([c, c + 1]);
                inverse.push(c + 1);
                inverse.push(c);
            }
        }
        Self { of_generator, inverse }
    }

    fn count(&self) -> usize {
        self.inverse.len()
    }

    fn of(&self, l: Letter) -> usize {
        self.of_generator[l.generator][l.inverse as usize]
    }

    fn compile(&self, w: &[Letter]) -> Vec<usize> {
        w.iter().map(|&l| self.of(l)).collect()
    }
}

/// A completed coset table: rows are cosets `0..index`, coset 0 is the
/// subgroup itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    generators: Vec<String>,
    columns: Columns,
    rows: usize,
    data: Vec<u32>,
}

impl CosetTable {
    /// Number of cosets.
    pub fn len(&self) -> usize {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }

    /// `coset · letter`.
    pub fn act(&self, coset: usize, letter: Letter) -> usize {
        self.data[coset * self.columns.count() + self.columns.of(letter)] as usize
    }

    pub fn trace(&self, coset: usize, word: &[Letter]) -> usize {
        word.iter().fold(coset, |c, &l| self.act(c, l))
    }

    /// Every entry is defined and `c·x = d` implies `d·x⁻¹ = c`.
    pub fn is_consistent(&self) -> bool {
        let cols = self.columns.count();
        (0..self.rows).all(|c| {
            (0..cols).all(|x| {
                let d = self.data[c * cols + x];
                d != UNDEF
                    && (d as usize) < self.rows
                    && self.data[d as usize * cols + self.columns.inverse[x]] as usize == c
            })
        })
    }

    /// Full scan: each relator traced from each coset returns to it.
    pub fn satisfies_relators(&self, p: &Presentation) -> bool {
        (0..self.rows).all(|c| p.relators().iter().all(|w| self.trace(c, w) == c))
    }

    /// Each word traces coset 0 to itself.
    pub fn fixes_subgroup(&self, words: &[Word]) -> bool {
        words.iter().all(|w| self.trace(0, w) == 0)
    }

    /// Every coset is reachable from coset 0.
    pub fn is_transitive(&self) -> bool {
        let cols = self.columns.count();
        let mut seen = vec![false; self.rows];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(c) = stack.pop() {
            for x in 0..cols {
                let d = self.data[c * cols + x] as usize;
                if !seen[d] {
                    seen[d] = true;
                    count += 1;
                    stack.push(d);
                }
            }
        }
        count == self.rows
    }

    /// One line `coset gen -> coset` per entry, cosets ascending, generators
    /// in presentation order, each followed by its inverse when that has a
    /// column of its own.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for c in 0..self.rows {
            for (g, name) in self.generators.iter().enumerate() {
                let [fwd, back] = self.columns.of_generator[g];
                let cols = self.columns.count();
                writeln!(out, "{c} {name} -> {}", self.data[c * cols + fwd]).unwrap();
                if back != fwd {
                    writeln!(out, "{c} {name}^-1 -> {}", self.data[c * cols + back]).unwrap();
                }
            }
        }
        out
    }
}

struct Exceeded;

struct Enumerator {
    columns: Columns,
    cols: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    live: usize,
    budget: usize,
    queue: VecDeque<u32>,
    stats: EnumerationStats,
}

impl Enumerator {
    fn new(columns: Columns, budget: usize) -> Self {
        let cols = columns.count();
        Self {
            columns,
            cols,
            table: vec![UNDEF; cols],
            parent: vec![0],
            live: 1,
            budget,
            queue: VecDeque::new(),
            stats: EnumerationStats { peak_live: 1, defined: 1, coincidences: 0 },
        }
    }

    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.cols + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.cols + x] = d;
    }

    fn is_live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<(), Exceeded> {
        if self.live >= self.budget {
            return Err(Exceeded);
        }
        let d = self.parent.len() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(UNDEF, self.cols));
        self.set(c, x, d);
        self.set(d, self.columns.inverse[x], c);
        self.live += 1;
        self.stats.defined += 1;
        self.stats.peak_live = self.stats.peak_live.max(self.live);
        Ok(())
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut root = c;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != root {
            let next = self.parent[c as usize];
            self.parent[c as usize] = root;
            c = next;
        }
        root
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = (a.min(b), a.max(b));
        self.parent[kill as usize] = keep;
        self.queue.push_back(kill);
        self.live -= 1;
        self.stats.coincidences += 1;
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.merge(a, b);
        while let Some(dead) = self.queue.pop_front() {
            for x in 0..self.cols {
                let d = self.get(dead, x);
                if d == UNDEF {
                    continue;
                }
                let xi = self.columns.inverse[x];
                if self.get(d, xi) == dead {
                    self.set(d, xi, UNDEF);
                }
                let mu = self.rep(dead);
                let nu = self.rep(d);
                let mu_x = self.get(mu, x);
                if mu_x != UNDEF {
                    self.merge(nu, mu_x);
                    continue;
                }
                let nu_xi = self.get(nu, xi);
                if nu_xi != UNDEF {
                    self.merge(mu, nu_xi);
                } else {
                    self.set(mu, x, nu);
                    self.set(nu, xi, mu);
                }
            }
        }
    }

    /// Traces `word` from `start` in both directions, defining cosets until
    /// the trace closes, then records the deduction or coincidence.
    fn scan_and_fill(&mut self, start: u32, word: &[usize]) -> Result<(), Exceeded> {
        if word.is_empty() {
            return Ok(());
        }
        let mut f = start;
        let mut b = start;
        let mut i = 0;
        let mut j = word.len() - 1;
        loop {
            while i <= j && self.get(f, word[i]) != UNDEF {
                f = self.get(f, word[i]);
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.get(b, self.columns.inverse[word[j]]) != UNDEF {
                b = self.get(b, self.columns.inverse[word[j]]);
                if j == 0 {
                    // whole word traced backwards
                    self.coincidence(f, b);
                    return Ok(());
                }
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                let x = word[i];
                self.set(f, x, b);
                self.set(b, self.columns.inverse[x], f);
                return Ok(());
            }
            self.define(f, word[i])?;
        }
    }

    /// Drops dead rows, renumbering live cosets in increasing order.
    /// Returns the new id of every old id that was live.
    fn compact(&mut self) -> Vec<u32> {
        debug_assert!(self.queue.is_empty());
        let n = self.parent.len();
        let mut new_id = vec![UNDEF; n];
        let mut next = 0u32;
        for c in 0..n as u32 {
            if self.is_live(c) {
                new_id[c as usize] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.cols);
        for c in 0..n as u32 {
            if !self.is_live(c) {
                continue;
            }
            for x in 0..self.cols {
                let d = self.get(c, x);
                table.push(if d == UNDEF { UNDEF } else { new_id[self.rep(d) as usize] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        new_id
    }

    fn run(&mut self, relators: &[Vec<usize>], subgroup: &[Vec<usize>]) -> Result<(), Exceeded> {
        for w in subgroup {
            self.scan_and_fill(0, w)?;
        }
        let mut a = 0u32;
        while (a as usize) < self.parent.len() {
            if self.is_live(a) {
                for w in relators {
                    self.scan_and_fill(a, w)?;
                    if !self.is_live(a) {
                        break;
                    }
                }
            }
            if self.is_live(a) {
                for x in 0..self.cols {
                    if self.get(a, x) == UNDEF {
                        self.define(a, x)?;
                    }
                }
            }
            a += 1;
            let dead = self.parent.len() - self.live;
            if dead > self.live + 4096 {
                let new_id = self.compact();
                // first live coset at or after `a`
                a = new_id[a as usize..]
                    .iter()
                    .copied()
                    .find(|&c| c != UNDEF)
                    .unwrap_or(self.parent.len() as u32);
            }
        }
        Ok(())
    }
}

/// Enumerates the cosets of the subgroup generated by `subgroup` in the group
/// presented by `p`, keeping at most `budget` cosets alive at any time.
pub fn enumerate(
    p: &Presentation,
    subgroup: &[Word],
    budget: usize,
) -> Result<EnumerationResult, TcError> {
    if budget == 0 {
        return Err(TcError::ZeroBudget);
    }
    if budget >= UNDEF as usize {
        return Err(TcError::BudgetTooLarge(budget));
    }
    for (i, w) in subgroup.iter().enumerate() {
        if let Some(l) = w.iter().find(|l| l.generator >= p.generator_count()) {
            return Err(TcError::InvalidSubgroupWord {
                word: i,
                generator: l.generator,
                count: p.generator_count(),
            });
        }
    }
    let columns = Columns::new(p);
    let relators: Vec<Vec<usize>> = p
        .relators()
        .iter()
        .map(|w| columns.compile(w))
        // x x with a shared column holds automatically
        .filter(|w| !(w.len() == 2 && w[0] == w[1] && columns.inverse[w[0]] == w[0]))
        .collect();
    let subgroup_cols: Vec<Vec<usize>> = subgroup.iter().map(|w| columns.compile(w)).collect();

    let mut e = Enumerator::new(columns, budget);
    if e.run(&relators, &subgroup_cols).is_err() {
        return Ok(EnumerationResult::Exceeded { budget, stats: e.stats });
    }
    e.compact();
    let table = CosetTable {
        generators: p.generators().to_vec(),
        rows: e.parent.len(),
        data: e.table,
        columns: e.columns,
    };
    debug_assert!(table.is_consistent());
    Ok(EnumerationResult::Completed { index: table.rows, table, stats: e.stats })
}

/// Group order: cosets of the trivial subgroup.
pub fn order(p: &Presentation, budget: usize) -> Result<EnumerationResult, TcError> {
    enumerate(p, &[], budget)
}

/// Index of the subgroup generated by `subgroup`.
pub fn index(p: &Presentation, subgroup: &[Word], budget: usize) -> Result<EnumerationResult, TcError> {
    enumerate(p, subgroup, budget)
}

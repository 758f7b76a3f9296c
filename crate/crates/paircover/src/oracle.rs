//! Exhaustive tools: a shared pair-coverage counter and a branch-and-bound
//! search for minimum coverings on tiny instances.
//!
//! The search certifies optimality claims independently of the design-based
//! construction: it never builds a design, it enumerates. Branching is on
//! the lexicographically smallest uncovered pair, candidate blocks are tried
//! in lexicographic order, and points that occur in no chosen block are
//! interchangeable, so only the lexicographically least of them may enter a
//! candidate. A deterministic greedy covering seeds the incumbent.

use std::time::{Duration, Instant};

use crate::{Error, Result};

/// Largest instance the exact search accepts.
pub const MAX_EXACT_POINTS: usize = 10;

/// Co-occurrence counts for every unordered pair of 1..=n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairCounts {
    n: usize,
    counts: Vec<u32>,
}

impl PairCounts {
    pub fn n(&self) -> usize {
        self.n
    }

    fn index(&self, a: usize, b: usize) -> usize {
        debug_assert!(1 <= a && a < b && b <= self.n);
        (a - 1) * (2 * self.n - a) / 2 + (b - a - 1)
    }

    /// Count for an unordered pair; arguments in either order.
    pub fn get(&self, a: usize, b: usize) -> u32 {
        assert!(a != b, "pair requires two distinct points");
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        assert!(
            1 <= a && b <= self.n,
            "pair ({a},{b}) out of range for n={}",
            self.n
        );
        self.counts[self.index(a, b)]
    }

    /// All pairs with their counts, in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        (1..=self.n)
            .flat_map(move |a| (a + 1..=self.n).map(move |b| (a, b)))
            .map(move |(a, b)| ((a, b), self.counts[self.index(a, b)]))
    }

    pub fn min_count(&self) -> u32 {
        self.counts.iter().copied().min().unwrap_or(0)
    }

    pub fn max_count(&self) -> u32 {
        self.counts.iter().copied().max().unwrap_or(0)
    }

    /// First pair whose count differs from `want`, lexicographically.
    pub fn first_not_equal(&self, want: u32) -> Option<(usize, usize, u32)> {
        self.iter()
            .find(|&(_, c)| c != want)
            .map(|((a, b), c)| (a, b, c))
    }
}

/// Counts, for every unordered pair of 1..=n, how many of the given subsets
/// contain both members. Subsets must hold distinct points within 1..=n.
pub fn cover_count_exact<B: AsRef<[usize]>>(blocks: &[B], n: usize) -> PairCounts {
    let mut pc = PairCounts {
        n,
        counts: vec![0; n * n.saturating_sub(1) / 2],
    };
    for block in blocks {
        let points = block.as_ref();
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                let (a, b) = (points[i].min(points[j]), points[i].max(points[j]));
                assert!(a >= 1 && b <= n && a != b, "bad pair ({a},{b}) for n={n}");
                let idx = pc.index(a, b);
                pc.counts[idx] += 1;
            }
        }
    }
    pc
}

/// Resource caps for the exact search. The search reports which cap fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    /// Largest covering size considered.
    pub max_blocks: usize,
    /// Wall-clock cap.
    pub time_limit: Duration,
    /// Cap on explored search nodes.
    pub node_limit: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_blocks: 64,
            time_limit: Duration::from_secs(300),
            node_limit: u64::MAX,
        }
    }
}

/// Which budget cap ended the search early.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitKind {
    MaxBlocks,
    TimeLimit,
    NodeLimit,
}

impl std::fmt::Display for LimitKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LimitKind::MaxBlocks => write!(f, "max-blocks"),
            LimitKind::TimeLimit => write!(f, "time-limit"),
            LimitKind::NodeLimit => write!(f, "node-limit"),
        }
    }
}

/// Outcome of the exact search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchResult {
    /// Proven minimum with a witness covering.
    Exact {
        size: usize,
        blocks: Vec<Vec<usize>>,
    },
    /// A budget cap fired first; carries the best covering found, if any.
    /// Results under a pure node or block cap are deterministic; a
    /// wall-clock cap naturally is not.
    Exhausted {
        limit: LimitKind,
        best: Option<Vec<Vec<usize>>>,
    },
}

struct Search {
    n: usize,
    k: usize,
    pairs: Vec<(usize, usize)>,
    full: u64,
    per_block: u32,
    cap: usize,
    node_limit: u64,
    deadline: Option<Instant>,
    nodes: u64,
    fired: Option<LimitKind>,
    chosen: Vec<Vec<usize>>,
    used: Vec<u32>,
    best: Option<Vec<Vec<usize>>>,
}

impl Search {
    fn pair_bit(&self, a: usize, b: usize) -> u64 {
        let (a, b) = if a < b { (a, b) } else { (b, a) };
        1u64 << ((a - 1) * (2 * self.n - a) / 2 + (b - a - 1))
    }

    fn block_mask(&self, block: &[usize]) -> u64 {
        let mut mask = 0;
        for i in 0..block.len() {
            for j in i + 1..block.len() {
                mask |= self.pair_bit(block[i], block[j]);
            }
        }
        mask
    }

    fn dfs(&mut self, covered: u64) {
        if self.fired.is_some() {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.node_limit {
            self.fired = Some(LimitKind::NodeLimit);
            return;
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.fired = Some(LimitKind::TimeLimit);
                    return;
                }
            }
        }
        if covered == self.full {
            if self
                .best
                .as_ref()
                .is_none_or(|b| self.chosen.len() < b.len())
            {
                self.best = Some(self.chosen.clone());
            }
            return;
        }
        let uncovered = self.full & !covered;
        let needed = uncovered.count_ones().div_ceil(self.per_block) as usize;
        let bound = self.chosen.len() + needed;
        if bound > self.cap {
            return;
        }
        if let Some(best) = &self.best {
            if bound >= best.len() {
                return;
            }
        }

        let bit = uncovered.trailing_zeros() as usize;
        let (a, b) = self.pairs[bit];
        let rest: Vec<usize> = (1..=self.n).filter(|&x| x != a && x != b).collect();
        let isolated: Vec<usize> = rest
            .iter()
            .copied()
            .filter(|&x| self.used[x] == 0)
            .collect();

        let take = self.k - 2;
        let mut extra: Vec<usize> = (0..take).collect();
        loop {
            // Untouched points are interchangeable: the candidate's untouched
            // members must be the least untouched points, or an equivalent
            // branch already covers it.
            let mut iso_rank = 0;
            let mut representative = true;
            for &idx in &extra {
                let x = rest[idx];
                if self.used[x] == 0 {
                    if isolated[iso_rank] != x {
                        representative = false;
                        break;
                    }
                    iso_rank += 1;
                }
            }
            if representative {
                let mut block: Vec<usize> = Vec::with_capacity(self.k);
                block.push(a);
                block.push(b);
                block.extend(extra.iter().map(|&idx| rest[idx]));
                block.sort_unstable();
                let mask = self.block_mask(&block);
                for &x in &block {
                    self.used[x] += 1;
                }
                self.chosen.push(block);
                self.dfs(covered | mask);
                let block = self.chosen.pop().expect("pushed above");
                for &x in &block {
                    self.used[x] -= 1;
                }
                if self.fired.is_some() {
                    return;
                }
            }
            // Advance the combination odometer.
            if take == 0 {
                break;
            }
            let mut pos = take;
            loop {
                if pos == 0 {
                    return;
                }
                pos -= 1;
                if extra[pos] < rest.len() - (take - pos) {
                    extra[pos] += 1;
                    for p in pos + 1..take {
                        extra[p] = extra[p - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
}

/// Deterministic greedy covering: repeatedly take the lexicographically
/// first k-subset covering the most new pairs.
fn greedy_cover(search: &Search) -> Vec<Vec<usize>> {
    let (n, k) = (search.n, search.k);
    let mut all_blocks: Vec<(Vec<usize>, u64)> = Vec::new();
    let mut indices: Vec<usize> = (1..=k).collect();
    loop {
        all_blocks.push((indices.clone(), search.block_mask(&indices)));
        let mut pos = k;
        let advanced = loop {
            if pos == 0 {
                break false;
            }
            pos -= 1;
            if indices[pos] < n - (k - 1 - pos) {
                indices[pos] += 1;
                for p in pos + 1..k {
                    indices[p] = indices[p - 1] + 1;
                }
                break true;
            }
        };
        if !advanced {
            break;
        }
    }
    let mut covered = 0u64;
    let mut picked = Vec::new();
    while covered != search.full {
        let mut best: Option<(&(Vec<usize>, u64), u32)> = None;
        for cand in &all_blocks {
            let gain = (cand.1 & !covered).count_ones();
            if best.is_none_or(|(_, g)| gain > g) {
                best = Some((cand, gain));
            }
        }
        let (block, _) = best.expect("some block always gains");
        covered |= block.1;
        picked.push(block.0.clone());
    }
    picked
}

/// Minimum number of k-subsets of 1..=n whose internal pairs cover all
/// n(n−1)/2 pairs, by branch and bound, with a witness.
///
/// Instances above [`MAX_EXACT_POINTS`] are refused rather than run
/// unbounded.
pub fn min_cover_exact(n: usize, k: usize, budget: &SearchBudget) -> Result<SearchResult> {
    if n > MAX_EXACT_POINTS {
        return Err(Error::TooLarge {
            n,
            max: MAX_EXACT_POINTS,
        });
    }
    if k < 2 || k >= n {
        return Err(Error::InvalidRange { n, k });
    }
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .collect();
    // n <= 10 keeps the pair universe within one u64.
    let full = (1u64 << pairs.len()) - 1;
    let mut search = Search {
        n,
        k,
        full,
        per_block: (k * (k - 1) / 2) as u32,
        pairs,
        cap: budget.max_blocks,
        node_limit: budget.node_limit,
        deadline: Instant::now().checked_add(budget.time_limit),
        nodes: 0,
        fired: None,
        chosen: Vec::new(),
        used: vec![0; n + 1],
        best: None,
    };
    let seed = greedy_cover(&search);
    if seed.len() <= search.cap {
        search.best = Some(seed);
    }
    search.dfs(0);
    Ok(match search.fired {
        Some(limit) => SearchResult::Exhausted {
            limit,
            best: search.best,
        },
        None => match search.best {
            Some(blocks) => SearchResult::Exact {
                size: blocks.len(),
                blocks,
            },
            None => SearchResult::Exhausted {
                limit: LimitKind::MaxBlocks,
                best: None,
            },
        },
    })
}

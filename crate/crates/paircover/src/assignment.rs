//! Lifting a (q², q, 1) design to a referee assignment.
//!
//! The n proposals are split into q² consecutive groups of g = k²/n, the
//! groups are identified with the design's points, and referee j reads the
//! union of the groups in block j — exactly q·g = k proposals. Pairs inside
//! a group are covered by every block through that point; pairs across two
//! groups are covered by the one block containing both points. Hence all
//! n(n−1)/2 pairs are covered by q(q+1) referees.

use crate::design::construct_q2_bibd;
use crate::field::is_prime_power;
use crate::oracle::{cover_count_exact, PairCounts};
use crate::{Error, Result};

/// A validated (n, k) instance with its derived group structure:
/// q = n/k groups-per-block and g = k²/n proposals per group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProblemInstance {
    n: usize,
    k: usize,
    q: usize,
    g: usize,
}

impl ProblemInstance {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Group count per referee, n/k; also the design order.
    pub fn q(&self) -> usize {
        self.q
    }

    /// Group size, k²/n.
    pub fn g(&self) -> usize {
        self.g
    }
}

/// Validates an (n, k) pair.
///
/// The failures are distinct so callers can tell which constraint broke:
/// `NotDivisible` when k ∤ n or n ∤ k², `OutOfRegime` when k > n/2 (that
/// regime belongs to a different construction), and `NotPrimePower` when
/// q = n/k admits no finite field. k < √n cannot survive n | k², so the
/// regime check only ever fires on the high side.
pub fn make_instance(n: usize, k: usize) -> Result<ProblemInstance> {
    if n == 0 || k == 0 {
        return Err(Error::OutOfRegime { n, k });
    }
    if !n.is_multiple_of(k) {
        return Err(Error::NotDivisible {
            dividend: n,
            divisor: k,
            context: "capacity must divide the proposal count",
        });
    }
    if !(k * k).is_multiple_of(n) {
        return Err(Error::NotDivisible {
            dividend: k * k,
            divisor: n,
            context: "squared capacity must be divisible by the proposal count",
        });
    }
    if 2 * k > n {
        return Err(Error::OutOfRegime { n, k });
    }
    let q = n / k;
    if is_prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    Ok(ProblemInstance {
        n,
        k,
        q,
        g: (k * k) / n,
    })
}

/// Referee count of the construction: q(q+1) = n(n+k)/k².
pub fn referee_count(instance: &ProblemInstance) -> usize {
    instance.q * (instance.q + 1)
}

/// A complete assignment: the group partition and one proposal set per
/// referee, each of exactly k proposals, in block order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    pub instance: ProblemInstance,
    /// Partition of 1..=n into q² consecutive groups of g.
    pub groups: Vec<Vec<usize>>,
    /// One sorted proposal set per referee.
    pub referees: Vec<Vec<usize>>,
}

/// Builds the assignment for a validated instance.
pub fn assign(instance: &ProblemInstance) -> Assignment {
    let (q, g) = (instance.q, instance.g);
    let groups: Vec<Vec<usize>> = (0..q * q)
        .map(|i| (i * g + 1..=(i + 1) * g).collect())
        .collect();
    let design = construct_q2_bibd(q).expect("instance q is a prime power");
    let referees = design
        .blocks
        .iter()
        .map(|block| {
            let mut set = Vec::with_capacity(instance.k);
            for &point in &block.points {
                set.extend_from_slice(&groups[point - 1]);
            }
            set
        })
        .collect();
    Assignment {
        instance: *instance,
        groups,
        referees,
    }
}

/// Exhaustive coverage report for an assignment.
#[derive(Debug, Clone)]
pub struct CoverReport {
    pub n: usize,
    pub k: usize,
    pub referee_count: usize,
    /// Co-review count for every unordered pair of proposals.
    pub counts: PairCounts,
    /// Pairs no referee covers, in lexicographic order.
    pub uncovered: Vec<(usize, usize)>,
    pub min_load: usize,
    pub max_load: usize,
    /// True iff every pair is covered at least once.
    pub pass: bool,
}

/// Counts, for every unordered pair of proposals, how many referees review
/// both, and reports per-referee loads against the capacity.
pub fn verify_cover(assignment: &Assignment) -> CoverReport {
    let n = assignment.instance.n;
    let counts = cover_count_exact(&assignment.referees, n);
    let uncovered: Vec<(usize, usize)> = counts
        .iter()
        .filter(|&(_, c)| c == 0)
        .map(|(p, _)| p)
        .collect();
    let loads: Vec<usize> = assignment.referees.iter().map(Vec::len).collect();
    let pass = uncovered.is_empty();
    CoverReport {
        n,
        k: assignment.instance.k,
        referee_count: assignment.referees.len(),
        counts,
        uncovered,
        min_load: loads.iter().copied().min().unwrap_or(0),
        max_load: loads.iter().copied().max().unwrap_or(0),
        pass,
    }
}

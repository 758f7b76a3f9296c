//! Block designs: construction of the (q², q, 1) family and exhaustive
//! validation of arbitrary designs against the (v, b, r, t, λ) axioms.

use crate::latin::{juxtapose, mols_complete};
use crate::oracle::cover_count_exact;
use crate::{Error, Result};

/// A block: a set of distinct point labels, kept in construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub points: Vec<usize>,
}

impl AsRef<[usize]> for Block {
    fn as_ref(&self) -> &[usize] {
        &self.points
    }
}

/// A block design over points 1..=v. Block order is deterministic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Design {
    pub v: usize,
    pub blocks: Vec<Block>,
}

/// The five parameters of a balanced incomplete block design, tied together
/// by v·r = b·t and λ(v−1) = r(t−1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BibdParams {
    pub v: usize,
    pub b: usize,
    pub r: usize,
    pub t: usize,
    pub lambda: usize,
}

/// Derives b = v(v−1)λ / (t(t−1)) and r = (v−1)λ / (t−1) from (v, t, λ).
///
/// Fails with `NonIntegralParams` when the divisibility conditions do not
/// hold (no such design exists with integral replication) or when the range
/// 2 ≤ t < v is violated.
pub fn bibd_params(v: usize, t: usize, lambda: usize) -> Result<BibdParams> {
    let err = Error::NonIntegralParams { v, t, lambda };
    if t < 2 || t >= v || lambda == 0 {
        return Err(err);
    }
    let r_num = (v - 1) * lambda;
    if !r_num.is_multiple_of(t - 1) {
        return Err(err);
    }
    let b_num = v * (v - 1) * lambda;
    if !b_num.is_multiple_of(t * (t - 1)) {
        return Err(err);
    }
    Ok(BibdParams {
        v,
        b: b_num / (t * (t - 1)),
        r: r_num / (t - 1),
        t,
        lambda,
    })
}

/// Builds the (q², q, 1) design for a prime power q.
///
/// Points are 1..=q², grouped into bands U_i = {(i−1)q+1, …, iq}. The first
/// q blocks are the bands themselves; the remaining q² come from the
/// juxtaposed complete MOLS, row-major, each cell tuple extended with the
/// band-U_q point (q−1)q + r for its row r. Every point ends up in exactly
/// q+1 of the q²+q blocks and every pair in exactly one.
pub fn construct_q2_bibd(q: usize) -> Result<Design> {
    let squares = mols_complete(q)?;
    let jux = juxtapose(&squares)?;
    let mut blocks = Vec::with_capacity(q * q + q);
    for i in 1..=q {
        blocks.push(Block {
            points: ((i - 1) * q + 1..=i * q).collect(),
        });
    }
    for r in 1..=q {
        for c in 1..=q {
            let mut points = jux.cell(r - 1, c - 1).to_vec();
            points.push((q - 1) * q + r);
            blocks.push(Block { points });
        }
    }
    Ok(Design { v: q * q, blocks })
}

/// One way a design can fail the (v, t, λ) axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BibdViolation {
    PointRange { block: usize, point: usize },
    DuplicatePoint { block: usize, point: usize },
    BlockSize { block: usize, size: usize },
    Replication { point: usize, count: usize },
    PairCount { a: usize, b: usize, count: usize },
}

impl std::fmt::Display for BibdViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BibdViolation::PointRange { block, point } => {
                write!(f, "block {block} contains out-of-range point {point}")
            }
            BibdViolation::DuplicatePoint { block, point } => {
                write!(f, "block {block} repeats point {point}")
            }
            BibdViolation::BlockSize { block, size } => {
                write!(f, "block {block} has size {size}")
            }
            BibdViolation::Replication { point, count } => {
                write!(f, "point {point} appears in {count} blocks")
            }
            BibdViolation::PairCount { a, b, count } => {
                write!(f, "pair ({a},{b}) appears in {count} blocks")
            }
        }
    }
}

/// Validation outcome: expected parameters (when they exist), per-point
/// replication counts, and every violation found, in a fixed order —
/// structural problems first, then block sizes, replication by point, and
/// finally pair counts in lexicographic order.
#[derive(Debug, Clone)]
pub struct BibdReport {
    pub v: usize,
    pub t: usize,
    pub lambda: usize,
    pub block_count: usize,
    pub expected: Option<BibdParams>,
    pub replication: Vec<usize>,
    pub violations: Vec<BibdViolation>,
}

impl BibdReport {
    pub fn pass(&self) -> bool {
        self.expected.is_some() && self.violations.is_empty()
    }

    pub fn first_violation(&self) -> Option<&BibdViolation> {
        self.violations.first()
    }
}

/// Checks a design against block size t, uniform replication, and the
/// every-pair-exactly-λ condition, by full enumeration. Failures are report
/// content rather than errors, so the validator doubles as a diagnostic for
/// hand-entered designs.
pub fn validate_bibd(design: &Design, t: usize, lambda: usize) -> BibdReport {
    let v = design.v;
    let expected = bibd_params(v, t, lambda).ok();
    let mut violations = Vec::new();

    let mut structurally_sound = true;
    for (bi, block) in design.blocks.iter().enumerate() {
        let mut seen = vec![false; v + 1];
        for &p in &block.points {
            if p < 1 || p > v {
                violations.push(BibdViolation::PointRange {
                    block: bi + 1,
                    point: p,
                });
                structurally_sound = false;
            } else if seen[p] {
                violations.push(BibdViolation::DuplicatePoint {
                    block: bi + 1,
                    point: p,
                });
                structurally_sound = false;
            } else {
                seen[p] = true;
            }
        }
    }

    let mut replication = vec![0usize; v];
    if !structurally_sound {
        return BibdReport {
            v,
            t,
            lambda,
            block_count: design.blocks.len(),
            expected,
            replication,
            violations,
        };
    }

    for (bi, block) in design.blocks.iter().enumerate() {
        if block.points.len() != t {
            violations.push(BibdViolation::BlockSize {
                block: bi + 1,
                size: block.points.len(),
            });
        }
        for &p in &block.points {
            replication[p - 1] += 1;
        }
    }

    if let Some(params) = expected {
        for (i, &count) in replication.iter().enumerate() {
            if count != params.r {
                violations.push(BibdViolation::Replication {
                    point: i + 1,
                    count,
                });
            }
        }
    }

    let counts = cover_count_exact(&design.blocks, v);
    for ((a, b), count) in counts.iter() {
        if count as usize != lambda {
            violations.push(BibdViolation::PairCount {
                a,
                b,
                count: count as usize,
            });
        }
    }

    BibdReport {
        v,
        t,
        lambda,
        block_count: design.blocks.len(),
        expected,
        replication,
        violations,
    }
}

/// Evaluates q²·C(q,2) + q·C(q,2) against C(q²,2): the pairs inside the q²
/// augmented cells plus the pairs inside the q bands account for every pair
/// of the q² points exactly once.
pub fn remark2_identity(q: usize) -> (u64, u64, bool) {
    let q = q as u64;
    let choose2 = |n: u64| n * (n - 1) / 2;
    let lhs = q * q * choose2(q) + q * choose2(q);
    let rhs = choose2(q * q);
    (lhs, rhs, lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn design(v: usize, blocks: &[&[usize]]) -> Design {
        Design {
            v,
            blocks: blocks
                .iter()
                .map(|b| Block { points: b.to_vec() })
                .collect(),
        }
    }

    /// (9,3,1) design entered verbatim; every point in 4 of the 12 blocks.
    fn fixture_9_3() -> Design {
        design(
            9,
            &[
                &[1, 2, 3],
                &[4, 5, 6],
                &[7, 8, 9],
                &[1, 4, 7],
                &[1, 5, 8],
                &[1, 6, 9],
                &[2, 4, 9],
                &[2, 5, 7],
                &[2, 6, 8],
                &[3, 4, 8],
                &[3, 5, 9],
                &[3, 6, 7],
            ],
        )
    }

    /// 20-block list whose 15th block repeats point 1 where a (16,4,1)
    /// design needs point 3; kept verbatim as a validator fixture.
    fn fixture_16_4_flawed() -> Design {
        design(
            16,
            &[
                &[1, 2, 3, 4],
                &[5, 6, 7, 8],
                &[9, 10, 11, 12],
                &[13, 14, 15, 16],
                &[1, 5, 9, 13],
                &[1, 6, 11, 16],
                &[1, 7, 12, 14],
                &[1, 8, 10, 15],
                &[2, 6, 10, 14],
                &[2, 5, 12, 15],
                &[2, 8, 11, 13],
                &[2, 7, 9, 16],
                &[3, 7, 11, 15],
                &[3, 5, 10, 16],
                &[1, 6, 12, 13],
                &[3, 8, 9, 14],
                &[4, 8, 12, 16],
                &[4, 5, 11, 14],
                &[4, 7, 10, 13],
                &[4, 6, 9, 15],
            ],
        )
    }

    #[test]
    fn params_examples() {
        let p = bibd_params(9, 3, 1).unwrap();
        assert_eq!((p.b, p.r), (12, 4));
        let p = bibd_params(16, 4, 1).unwrap();
        assert_eq!((p.b, p.r), (20, 5));
        let p = bibd_params(25, 5, 1).unwrap();
        assert_eq!((p.b, p.r), (30, 6));
        assert_eq!(
            bibd_params(11, 3, 1).unwrap_err(),
            Error::NonIntegralParams {
                v: 11,
                t: 3,
                lambda: 1
            }
        );
        assert!(bibd_params(3, 3, 1).is_err());
    }

    #[test]
    fn params_identities() {
        for v in 3..40 {
            for t in 2..v {
                for lambda in 1..4 {
                    if let Ok(p) = bibd_params(v, t, lambda) {
                        assert_eq!(p.v * p.r, p.b * p.t);
                        assert_eq!(p.lambda * (p.v - 1), p.r * (p.t - 1));
                    }
                }
            }
        }
    }

    #[test]
    fn construct_order_3_frozen() {
        let d = construct_q2_bibd(3).unwrap();
        let got: Vec<&[usize]> = d.blocks.iter().map(|b| b.points.as_slice()).collect();
        let want: [&[usize]; 12] = [
            &[1, 2, 3],
            &[4, 5, 6],
            &[7, 8, 9],
            &[2, 6, 7],
            &[3, 4, 7],
            &[1, 5, 7],
            &[3, 5, 8],
            &[1, 6, 8],
            &[2, 4, 8],
            &[1, 4, 9],
            &[2, 5, 9],
            &[3, 6, 9],
        ];
        assert_eq!(got, want);
        assert!(validate_bibd(&d, 3, 1).pass());
    }

    #[test]
    fn construct_order_2_is_all_pairs() {
        let d = construct_q2_bibd(2).unwrap();
        let got: Vec<&[usize]> = d.blocks.iter().map(|b| b.points.as_slice()).collect();
        let want: [&[usize]; 6] = [&[1, 2], &[3, 4], &[2, 3], &[1, 3], &[1, 4], &[2, 4]];
        assert_eq!(got, want);
        assert!(validate_bibd(&d, 2, 1).pass());
    }

    #[test]
    fn construct_order_5_band_point_pattern() {
        let d = construct_q2_bibd(5).unwrap();
        assert_eq!(d.blocks.len(), 30);
        // Point 21 sits in band U_5 (block 5) and in the five augmented
        // blocks of the first matrix row (blocks 6..=10).
        let holders: Vec<usize> = d
            .blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.points.contains(&21))
            .map(|(i, _)| i + 1)
            .collect();
        assert_eq!(holders, [5, 6, 7, 8, 9, 10]);
        assert!(validate_bibd(&d, 5, 1).pass());
    }

    #[test]
    fn construct_is_deterministic() {
        assert_eq!(construct_q2_bibd(7).unwrap(), construct_q2_bibd(7).unwrap());
    }

    #[test]
    fn validate_fixture_9_3_passes() {
        let report = validate_bibd(&fixture_9_3(), 3, 1);
        assert!(report.pass());
        assert_eq!(report.expected.unwrap().r, 4);
        assert!(report.replication.iter().all(|&r| r == 4));
    }

    #[test]
    fn validate_flawed_16_4_reports_replication_first() {
        let report = validate_bibd(&fixture_16_4_flawed(), 4, 1);
        assert!(!report.pass());
        assert_eq!(
            report.first_violation(),
            Some(&BibdViolation::Replication { point: 1, count: 6 })
        );
        assert_eq!(report.replication[0], 6);
        // The repeated point also shows up as doubly covered pairs.
        assert!(report.violations.iter().any(|v| matches!(
            v,
            BibdViolation::PairCount {
                a: 1,
                b: 6,
                count: 2
            }
        )));
    }

    #[test]
    fn validate_reports_structural_problems() {
        let report = validate_bibd(&design(4, &[&[1, 2, 5]]), 3, 1);
        assert_eq!(
            report.first_violation(),
            Some(&BibdViolation::PointRange { block: 1, point: 5 })
        );
        let report = validate_bibd(&design(4, &[&[1, 2, 2]]), 3, 1);
        assert_eq!(
            report.first_violation(),
            Some(&BibdViolation::DuplicatePoint { block: 1, point: 2 })
        );
    }

    #[test]
    fn validate_reports_block_size() {
        let report = validate_bibd(&design(9, &[&[1, 2], &[3, 4, 5]]), 3, 1);
        assert_eq!(
            report.first_violation(),
            Some(&BibdViolation::BlockSize { block: 1, size: 2 })
        );
    }

    #[test]
    fn construction_validates_for_all_test_orders() {
        for q in [2usize, 3, 4, 5, 7, 8, 9, 11, 13] {
            let d = construct_q2_bibd(q).unwrap();
            assert_eq!(d.blocks.len(), q * q + q, "q={q}");
            let report = validate_bibd(&d, q, 1);
            assert!(report.pass(), "q={q}: {:?}", report.first_violation());
            assert!(report.replication.iter().all(|&r| r == q + 1), "q={q}");
        }
    }

    #[test]
    fn remark2_examples() {
        assert_eq!(remark2_identity(5), (300, 300, true));
        assert_eq!(remark2_identity(2), (6, 6, true));
        assert!(remark2_identity(13).2);
        for q in 2..=100 {
            assert!(remark2_identity(q).2, "q={q}");
        }
    }
}

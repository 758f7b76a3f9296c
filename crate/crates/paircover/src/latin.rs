//! Latin squares, orthogonality, and complete sets of MOLS.
//!
//! For a prime power q the map `f_a(x, y) = a·x + y` over GF(q), one square
//! per nonzero multiplier `a`, yields q−1 pairwise orthogonal Latin squares —
//! the maximum possible. Rows, columns and symbols are labelled 1..q: matrix
//! position r corresponds to the field element of index `r mod q` (so
//! position q carries the zero element), and the element of index j is
//! written as symbol j, with 0 written as q.

use crate::field::FieldSpec;
use crate::{Error, Result};

/// A q×q matrix over symbols 1..q in which every row and every column is a
/// permutation of the symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatinSquare {
    order: usize,
    rows: Vec<Vec<usize>>,
}

impl LatinSquare {
    /// Validates and wraps a candidate matrix.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<LatinSquare> {
        if !is_latin(&rows) {
            return Err(Error::NotLatin);
        }
        Ok(LatinSquare {
            order: rows.len(),
            rows,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Symbol at 0-based (row, col).
    pub fn symbol(&self, row: usize, col: usize) -> usize {
        self.rows[row][col]
    }
}

/// True iff the matrix is square and every row and column is a permutation
/// of 1..q.
pub fn is_latin(rows: &[Vec<usize>]) -> bool {
    let q = rows.len();
    if q == 0 || rows.iter().any(|r| r.len() != q) {
        return false;
    }
    let mut seen = vec![false; q];
    for row in rows {
        seen.fill(false);
        for &s in row {
            if s < 1 || s > q || seen[s - 1] {
                return false;
            }
            seen[s - 1] = true;
        }
    }
    for c in 0..q {
        seen.fill(false);
        for row in rows {
            let s = row[c];
            if seen[s - 1] {
                return false;
            }
            seen[s - 1] = true;
        }
    }
    true
}

/// The complete set of q−1 mutually orthogonal Latin squares of prime-power
/// order q. Square a (1-based) has cell (x, y) = a·x + y evaluated in GF(q).
/// Deterministic: the canonical field enumeration fixes every cell.
pub fn mols_complete(q: usize) -> Result<Vec<LatinSquare>> {
    let field = FieldSpec::new(q)?;
    let elems = field.elements();
    let mut squares = Vec::with_capacity(q - 1);
    for a in 1..q {
        let mult = &elems[a];
        let mut rows = Vec::with_capacity(q);
        for r in 1..=q {
            let x = &elems[r % q];
            let ax = field.mul(mult, x)?;
            let mut row = Vec::with_capacity(q);
            for c in 1..=q {
                let y = &elems[c % q];
                let idx = field.add(&ax, y)?.index();
                row.push(if idx == 0 { q } else { idx });
            }
            rows.push(row);
        }
        squares.push(LatinSquare { order: q, rows });
    }
    Ok(squares)
}

/// True iff juxtaposing the squares entry by entry yields all q² ordered
/// symbol pairs exactly once.
pub fn are_orthogonal(a: &LatinSquare, b: &LatinSquare) -> Result<bool> {
    if a.order != b.order {
        return Err(Error::OrderMismatch(a.order, b.order));
    }
    let q = a.order;
    let mut seen = vec![false; q * q];
    for r in 0..q {
        for c in 0..q {
            let key = (a.rows[r][c] - 1) * q + (b.rows[r][c] - 1);
            if seen[key] {
                return Ok(false);
            }
            seen[key] = true;
        }
    }
    Ok(true)
}

/// Entry-wise juxtaposition of same-order squares, with the i-th square's
/// symbols shifted into the band (i−1)·q + 1 ..= i·q so that the bands are
/// disjoint. Cell tuples are stored in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Juxtaposition {
    order: usize,
    width: usize,
    cells: Vec<Vec<Vec<usize>>>,
}

impl Juxtaposition {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of squares juxtaposed (tuple length in every cell).
    pub fn width(&self) -> usize {
        self.width
    }

    /// Tuple at 0-based (row, col).
    pub fn cell(&self, row: usize, col: usize) -> &[usize] {
        &self.cells[row][col]
    }

    pub fn cells(&self) -> &[Vec<Vec<usize>>] {
        &self.cells
    }
}

/// Juxtaposes one or more squares of equal order.
///
/// Panics if `squares` is empty.
pub fn juxtapose(squares: &[LatinSquare]) -> Result<Juxtaposition> {
    assert!(!squares.is_empty(), "juxtapose needs at least one square");
    let q = squares[0].order;
    for s in squares {
        if s.order != q {
            return Err(Error::OrderMismatch(q, s.order));
        }
    }
    let cells = (0..q)
        .map(|r| {
            (0..q)
                .map(|c| {
                    squares
                        .iter()
                        .enumerate()
                        .map(|(i, s)| i * q + s.rows[r][c])
                        .collect()
                })
                .collect()
        })
        .collect();
    Ok(Juxtaposition {
        order: q,
        width: squares.len(),
        cells,
    })
}

/// True iff within every row the cell tuples (as sets) at distinct columns
/// are pairwise disjoint, and likewise within every column.
pub fn check_disjoint_lines(j: &Juxtaposition) -> bool {
    let q = j.order;
    for r in 0..q {
        for c1 in 0..q {
            for c2 in c1 + 1..q {
                if shared_count(&j.cells[r][c1], &j.cells[r][c2]) > 0 {
                    return false;
                }
            }
        }
    }
    for c in 0..q {
        for r1 in 0..q {
            for r2 in r1 + 1..q {
                if shared_count(&j.cells[r1][c], &j.cells[r2][c]) > 0 {
                    return false;
                }
            }
        }
    }
    true
}

/// Largest number of symbols shared by any two distinct cells, over the
/// whole matrix. At most 1 exactly when the source squares are pairwise
/// orthogonal; a square juxtaposed with itself scores its full width.
pub fn max_cell_intersection(j: &Juxtaposition) -> usize {
    let q = j.order;
    let mut best = 0;
    for i in 0..q * q {
        for k in i + 1..q * q {
            let a = &j.cells[i / q][i % q];
            let b = &j.cells[k / q][k % q];
            best = best.max(shared_count(a, b));
        }
    }
    best
}

/// Intersection size of two ascending slices.
fn shared_count(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut k, mut n) = (0, 0, 0);
    while i < a.len() && k < b.len() {
        match a[i].cmp(&b[k]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => k += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                k += 1;
            }
        }
    }
    n
}

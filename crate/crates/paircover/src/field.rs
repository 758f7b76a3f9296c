//! Exact arithmetic in GF(q) for prime powers q = p^m.
//!
//! Elements are polynomials of degree below `m` over GF(p), stored as
//! coefficient vectors (least significant first) and reduced modulo a
//! canonical irreducible polynomial: the lexicographically smallest monic
//! irreducible of degree `m`, comparing coefficients from the constant term
//! up. Each element also carries its canonical index, the base-p evaluation
//! of its coefficients, so `elements()` enumerates the field as indices
//! `0..q` with 0 the additive and 1 the multiplicative identity.
//!
//! Everything here is a pure function over immutable values; fields and
//! elements can be shared freely across threads.

use crate::{Error, Result};

/// Factors `q` as `p^m` with `p` prime, if possible. `q < 2` yields `None`.
pub fn is_prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = q;
    let mut c = 2;
    while c * c <= q {
        if q.is_multiple_of(c) {
            p = c;
            break;
        }
        c += 1;
    }
    let mut m = 0u32;
    let mut t = q;
    while t.is_multiple_of(p) {
        t /= p;
        m += 1;
    }
    if t == 1 {
        Some((p, m))
    } else {
        None
    }
}

/// A finite field GF(q), q = p^m.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    q: usize,
    p: usize,
    m: u32,
    /// Monic irreducible of degree m over GF(p), ascending coefficients,
    /// present only for proper extensions (m > 1).
    modulus: Option<Vec<usize>>,
}

/// An element of GF(q): coefficients over GF(p) plus the canonical index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    order: usize,
    index: usize,
    coeffs: Vec<usize>,
}

impl FieldElement {
    /// Canonical integer encoding in `0..q`.
    pub fn index(&self) -> usize {
        self.index
    }

    /// Polynomial coefficients mod p, least significant first, length m.
    pub fn coeffs(&self) -> &[usize] {
        &self.coeffs
    }

    /// Order of the field this element belongs to.
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }
}

impl FieldSpec {
    /// Builds GF(q), locating the canonical modulus when m > 1.
    pub fn new(q: usize) -> Result<FieldSpec> {
        let (p, m) = is_prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let modulus = if m > 1 {
            Some(canonical_modulus(p, m))
        } else {
            None
        };
        Ok(FieldSpec { q, p, m, modulus })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Reduction polynomial, ascending coefficients; `None` for prime fields.
    pub fn modulus(&self) -> Option<&[usize]> {
        self.modulus.as_deref()
    }

    /// The element with the given canonical index.
    ///
    /// Panics if `index >= q`.
    pub fn element(&self, index: usize) -> FieldElement {
        assert!(
            index < self.q,
            "element index {index} out of range for GF({})",
            self.q
        );
        let mut coeffs = Vec::with_capacity(self.m as usize);
        let mut t = index;
        for _ in 0..self.m {
            coeffs.push(t % self.p);
            t /= self.p;
        }
        FieldElement {
            order: self.q,
            index,
            coeffs,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// All q elements in canonical index order. Stable across calls.
    pub fn elements(&self) -> Vec<FieldElement> {
        (0..self.q).map(|i| self.element(i)).collect()
    }

    fn index_of(&self, coeffs: &[usize]) -> usize {
        let mut idx = 0;
        for &c in coeffs.iter().rev() {
            idx = idx * self.p + c;
        }
        idx
    }

    fn check_member(&self, e: &FieldElement) -> Result<()> {
        if e.order != self.q {
            return Err(Error::MixedFields(self.q, e.order));
        }
        Ok(())
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        let coeffs: Vec<usize> = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        Ok(FieldElement {
            order: self.q,
            index: self.index_of(&coeffs),
            coeffs,
        })
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement> {
        self.check_member(a)?;
        self.check_member(b)?;
        let m = self.m as usize;
        if m == 1 {
            let v = mulmod(a.coeffs[0], b.coeffs[0], self.p);
            return Ok(self.element(v));
        }
        // Convolve, then reduce by the monic modulus.
        let mut buf = vec![0usize; 2 * m - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                buf[i + j] = (buf[i + j] + mulmod(x, y, self.p)) % self.p;
            }
        }
        let modulus = self
            .modulus
            .as_ref()
            .expect("extension field has a modulus");
        for d in (m..buf.len()).rev() {
            let c = buf[d];
            if c == 0 {
                continue;
            }
            buf[d] = 0;
            for j in 0..m {
                let sub = mulmod(c, modulus[j], self.p);
                buf[d - m + j] = (buf[d - m + j] + self.p - sub) % self.p;
            }
        }
        buf.truncate(m);
        Ok(FieldElement {
            order: self.q,
            index: self.index_of(&buf),
            coeffs: buf,
        })
    }

    /// a^e by square-and-multiply.
    pub fn pow(&self, a: &FieldElement, e: usize) -> Result<FieldElement> {
        self.check_member(a)?;
        let mut result = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &base)?;
            }
            base = self.mul(&base, &base)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// Multiplicative inverse, via a^(q-2).
    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement> {
        self.check_member(a)?;
        if a.is_zero() {
            return Err(Error::ZeroInverse);
        }
        self.pow(a, self.q - 2)
    }
}

fn mulmod(a: usize, b: usize, p: usize) -> usize {
    ((a as u128 * b as u128) % p as u128) as usize
}

/// Remainder of `a` divided by the monic polynomial `b`, both ascending.
fn poly_rem(a: &[usize], b: &[usize], p: usize) -> Vec<usize> {
    let mut a = a.to_vec();
    loop {
        while a.last() == Some(&0) {
            a.pop();
        }
        if a.len() < b.len() {
            return a;
        }
        let c = *a.last().expect("nonempty after length check");
        let shift = a.len() - b.len();
        for (i, &bc) in b.iter().enumerate() {
            let sub = mulmod(c, bc, p);
            a[shift + i] = (a[shift + i] + p - sub) % p;
        }
    }
}

/// Trial division by every monic polynomial of degree at most deg(poly)/2.
fn poly_is_irreducible(poly: &[usize], p: usize) -> bool {
    let m = poly.len() - 1;
    let mut divisor = Vec::new();
    for d in 1..=m / 2 {
        let count = p.pow(d as u32);
        for t in 0..count {
            divisor.clear();
            let mut t = t;
            for _ in 0..d {
                divisor.push(t % p);
                t /= p;
            }
            divisor.push(1);
            if poly_rem(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible of degree m over GF(p),
/// coefficients compared from the constant term up.
fn canonical_modulus(p: usize, m: u32) -> Vec<usize> {
    let m = m as usize;
    let count = p.pow(m as u32);
    let mut poly = vec![0usize; m + 1];
    poly[m] = 1;
    for t in 0..count {
        let mut rem = t;
        for i in (0..m).rev() {
            poly[i] = rem % p;
            rem /= p;
        }
        if poly_is_irreducible(&poly, p) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of degree {m} exists over GF({p})")
}

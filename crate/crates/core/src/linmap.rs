//! Dense exact matrices and the handful of operations every diagram in the
//! crate reduces to: composition, Kronecker tensor, idempotent splitting and
//! exhaustive enumeration over `Z_n`.
//!
//! Leg ordering is fixed once and for all: a composite functor word
//! `X1 ∘ X2 ∘ … ∘ Xk` has carrier `X1 ⊗ … ⊗ Xk` with the leftmost functor
//! letter as the leftmost (outermost, most significant) Kronecker leg.

use crate::error::{Error, Result};
use crate::ring::{ExactRing, Scalar};

/// A linear map between free modules, stored row-major.
/// Maps with zero rows or columns are legal (dimension-0 modules).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinMap {
    ring: ExactRing,
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl LinMap {
    pub fn new(ring: ExactRing, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimMismatch {
                expected: rows * cols,
                got: entries.len(),
                context: "entry vector length",
            });
        }
        Ok(LinMap {
            ring,
            rows,
            cols,
            entries,
        })
    }

    /// Build from row-major signed integers (reduced into the ring).
    pub fn from_rows(ring: ExactRing, rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            for &v in *row {
                entries.push(ring.from_i64(v));
            }
        }
        LinMap {
            ring,
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn zero(ring: ExactRing, rows: usize, cols: usize) -> Self {
        LinMap {
            ring,
            rows,
            cols,
            entries: vec![ring.zero(); rows * cols],
        }
    }

    pub fn identity(ring: ExactRing, n: usize) -> Self {
        let mut m = LinMap::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn ring(&self) -> ExactRing {
        self.ring
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Matrix product `g ∘ f` (apply `f` first).
    pub fn compose(g: &LinMap, f: &LinMap) -> Result<LinMap> {
        if g.ring != f.ring {
            return Err(Error::RingMismatch);
        }
        if g.cols != f.rows {
            return Err(Error::DimMismatch {
                expected: g.cols,
                got: f.rows,
                context: "compose: g.cols vs f.rows",
            });
        }
        let ring = g.ring;
        let mut out = LinMap::zero(ring, g.rows, f.cols);
        for i in 0..g.rows {
            for k in 0..g.cols {
                let gik = g.get(i, k);
                if ring.is_zero(gik) {
                    continue;
                }
                for j in 0..f.cols {
                    let prod = ring.mul(gik, f.get(k, j));
                    let cur = out.get(i, j);
                    let sum = ring.add(cur, &prod);
                    out.set(i, j, sum);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product with the leftmost factor as the outer (most
    /// significant) leg.
    pub fn tensor(f: &LinMap, g: &LinMap) -> Result<LinMap> {
        if f.ring != g.ring {
            return Err(Error::RingMismatch);
        }
        let ring = f.ring;
        let rows = f.rows * g.rows;
        let cols = f.cols * g.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for fi in 0..f.rows {
            for gi in 0..g.rows {
                for fj in 0..f.cols {
                    let fe = f.get(fi, fj);
                    for gj in 0..g.cols {
                        entries.push(ring.mul(fe, g.get(gi, gj)));
                    }
                }
            }
        }
        Ok(LinMap {
            ring,
            rows,
            cols,
            entries,
        })
    }

    /// `tensor` over a slice, left to right. Empty product is `identity(1)`.
    pub fn tensor_all(ring: ExactRing, factors: &[&LinMap]) -> Result<LinMap> {
        let mut acc = LinMap::identity(ring, 1);
        for f in factors {
            acc = LinMap::tensor(&acc, f)?;
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> LinMap {
        let mut out = LinMap::zero(self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn add(a: &LinMap, b: &LinMap) -> Result<LinMap> {
        if a.ring != b.ring {
            return Err(Error::RingMismatch);
        }
        if a.rows != b.rows || a.cols != b.cols {
            return Err(Error::DimMismatch {
                expected: a.rows * a.cols,
                got: b.rows * b.cols,
                context: "add: shapes differ",
            });
        }
        let entries = a
            .entries
            .iter()
            .zip(&b.entries)
            .map(|(x, y)| a.ring.add(x, y))
            .collect();
        Ok(LinMap {
            ring: a.ring,
            rows: a.rows,
            cols: a.cols,
            entries,
        })
    }

    /// First column index where `self` and `other` differ, i.e. a basis
    /// input on which the two maps disagree.
    pub fn first_differing_column(&self, other: &LinMap) -> Option<usize> {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        (0..self.cols).find(|&j| (0..self.rows).any(|i| self.get(i, j) != other.get(i, j)))
    }

    /// Reduced row echelon form together with the pivot column indices.
    /// Requires a field.
    pub fn rref(&self) -> Result<(LinMap, Vec<usize>)> {
        if !self.ring.is_field() {
            return Err(Error::SplitUnsupported);
        }
        let ring = self.ring;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(pivot_row) = (row..m.rows).find(|&r| !ring.is_zero(m.get(r, col))) else {
                continue;
            };
            // swap
            if pivot_row != row {
                for j in 0..m.cols {
                    let a = m.get(row, j).clone();
                    let b = m.get(pivot_row, j).clone();
                    m.set(row, j, b);
                    m.set(pivot_row, j, a);
                }
            }
            // normalize
            let inv = ring.inv(m.get(row, col))?;
            for j in 0..m.cols {
                let v = ring.mul(m.get(row, j), &inv);
                m.set(row, j, v);
            }
            // eliminate all other rows
            for r in 0..m.rows {
                if r == row || ring.is_zero(m.get(r, col)) {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..m.cols {
                    let v = ring.sub(m.get(r, j), &ring.mul(&factor, m.get(row, j)));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok((m, pivots))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Split an idempotent `e` into `(p, i)` with `i ∘ p = e` and
    /// `p ∘ i = identity(rank e)`, by rank factorization: `p` is the nonzero
    /// rows of the RREF of `e`, `i` the pivot columns of `e`.
    pub fn split_idempotent(e: &LinMap) -> Result<(LinMap, LinMap)> {
        if !e.is_square() {
            return Err(Error::DimMismatch {
                expected: e.rows,
                got: e.cols,
                context: "split_idempotent: square matrix required",
            });
        }
        if !e.ring.is_field() {
            return Err(Error::SplitUnsupported);
        }
        if LinMap::compose(e, e)? != *e {
            return Err(Error::NotIdempotent);
        }
        let (r, pivots) = e.rref()?;
        let rank = pivots.len();
        let mut p = LinMap::zero(e.ring, rank, e.cols);
        for i in 0..rank {
            for j in 0..e.cols {
                p.set(i, j, r.get(i, j).clone());
            }
        }
        let mut inj = LinMap::zero(e.ring, e.rows, rank);
        for (k, &col) in pivots.iter().enumerate() {
            for i in 0..e.rows {
                inj.set(i, k, e.get(i, col).clone());
            }
        }
        debug_assert_eq!(LinMap::compose(&inj, &p)?, *e);
        debug_assert_eq!(
            LinMap::compose(&p, &inj)?,
            LinMap::identity(e.ring, rank)
        );
        Ok((p, inj))
    }

    /// All maps `R^from -> R^to` over `Z_n`, exactly once each, in
    /// lexicographic order on the (row-major) entry vector. The first map
    /// yielded is the zero map.
    pub fn enumerate_maps(
        from_dim: usize,
        to_dim: usize,
        ring: ExactRing,
        cap: u128,
    ) -> Result<MapEnumerator> {
        let ExactRing::Zn(n) = ring else {
            return Err(Error::Invalid("enumeration requires a Z_n ring".into()));
        };
        let count = (n as u128)
            .checked_pow((from_dim * to_dim) as u32)
            .ok_or(Error::CapExceeded {
                required: u128::MAX,
                cap,
            })?;
        if count > cap {
            return Err(Error::CapExceeded {
                required: count,
                cap,
            });
        }
        Ok(MapEnumerator {
            ring,
            modulus: n,
            rows: to_dim,
            cols: from_dim,
            digits: vec![0; from_dim * to_dim],
            done: false,
        })
    }
}

/// Iterator over all matrices of a fixed shape over `Z_n`.
#[derive(Debug)]
pub struct MapEnumerator {
    ring: ExactRing,
    modulus: u64,
    rows: usize,
    cols: usize,
    digits: Vec<u64>,
    done: bool,
}

impl Iterator for MapEnumerator {
    type Item = LinMap;

    fn next(&mut self) -> Option<LinMap> {
        if self.done {
            return None;
        }
        let entries = self.digits.iter().map(|&d| Scalar::Int(d)).collect();
        let out = LinMap {
            ring: self.ring,
            rows: self.rows,
            cols: self.cols,
            entries,
        };
        // increment the last digit fastest: lexicographic ascending order
        let mut idx = self.digits.len();
        loop {
            if idx == 0 {
                self.done = true;
                break;
            }
            idx -= 1;
            self.digits[idx] += 1;
            if self.digits[idx] < self.modulus {
                break;
            }
            self.digits[idx] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2: ExactRing = ExactRing::Zn(2);
    const Z3: ExactRing = ExactRing::Zn(3);

    #[test]
    fn compose_identity() {
        let id2 = LinMap::identity(Z2, 2);
        assert_eq!(LinMap::compose(&id2, &id2).unwrap(), id2);
    }

    #[test]
    fn compose_mod2() {
        let m = LinMap::from_rows(Z2, &[&[1, 1], &[0, 0]]);
        assert_eq!(LinMap::compose(&m, &m).unwrap(), m);
    }

    #[test]
    fn compose_empty_dims() {
        let a = LinMap::zero(Z2, 0, 2);
        let b = LinMap::from_rows(Z2, &[&[1, 0, 1], &[0, 1, 1]]);
        let c = LinMap::compose(&a, &b).unwrap();
        assert_eq!((c.rows(), c.cols()), (0, 3));
    }

    #[test]
    fn compose_errors() {
        let a = LinMap::identity(Z2, 2);
        let b = LinMap::identity(Z2, 3);
        assert!(matches!(
            LinMap::compose(&a, &b),
            Err(Error::DimMismatch { .. })
        ));
        let c = LinMap::identity(Z3, 2);
        assert_eq!(LinMap::compose(&a, &c), Err(Error::RingMismatch));
    }

    #[test]
    fn tensor_identities() {
        let a = LinMap::identity(Z2, 2);
        let b = LinMap::identity(Z2, 3);
        assert_eq!(
            LinMap::tensor(&a, &b).unwrap(),
            LinMap::identity(Z2, 6)
        );
        // zero module absorbs
        let z = LinMap::identity(Z2, 0);
        let t = LinMap::tensor(&a, &z).unwrap();
        assert_eq!((t.rows(), t.cols()), (0, 0));
    }

    #[test]
    fn tensor_mod2_by_hand() {
        let f = LinMap::from_rows(Z2, &[&[1, 1]]);
        let g = LinMap::from_rows(Z2, &[&[1], &[1]]);
        let t = LinMap::tensor(&f, &g).unwrap();
        assert_eq!(t, LinMap::from_rows(Z2, &[&[1, 1], &[1, 1]]));
    }

    #[test]
    fn split_coordinate_projector() {
        let e = LinMap::from_rows(ExactRing::Rationals, &[&[1, 0], &[0, 0]]);
        let (p, i) = LinMap::split_idempotent(&e).unwrap();
        assert_eq!(p, LinMap::from_rows(ExactRing::Rationals, &[&[1, 0]]));
        assert_eq!(i, LinMap::from_rows(ExactRing::Rationals, &[&[1], &[0]]));
    }

    #[test]
    fn split_mod2() {
        let e = LinMap::from_rows(Z2, &[&[1, 1], &[0, 0]]);
        let (p, i) = LinMap::split_idempotent(&e).unwrap();
        assert_eq!(p, LinMap::from_rows(Z2, &[&[1, 1]]));
        assert_eq!(i, LinMap::from_rows(Z2, &[&[1], &[0]]));
        assert_eq!(LinMap::compose(&i, &p).unwrap(), e);
        assert_eq!(LinMap::compose(&p, &i).unwrap(), LinMap::identity(Z2, 1));
    }

    #[test]
    fn split_identity_is_trivial() {
        let e = LinMap::identity(Z3, 3);
        let (p, i) = LinMap::split_idempotent(&e).unwrap();
        assert_eq!(p, e);
        assert_eq!(i, e);
    }

    #[test]
    fn split_rejects_non_idempotent_and_composite_modulus() {
        let m = LinMap::from_rows(Z2, &[&[0, 1], &[0, 0]]);
        assert_eq!(LinMap::split_idempotent(&m), Err(Error::NotIdempotent));
        let e = LinMap::identity(ExactRing::Zn(6), 2);
        assert_eq!(LinMap::split_idempotent(&e), Err(Error::SplitUnsupported));
    }

    #[test]
    fn enumerate_small() {
        let maps: Vec<_> = LinMap::enumerate_maps(1, 1, Z2, 1 << 20)
            .unwrap()
            .collect();
        assert_eq!(maps.len(), 2);
        assert!(maps[0].is_zero());
        assert_eq!(maps[1], LinMap::identity(Z2, 1));

        assert_eq!(
            LinMap::enumerate_maps(2, 1, Z2, 1 << 20).unwrap().count(),
            4
        );
        let maps33: Vec<_> = LinMap::enumerate_maps(2, 2, Z3, 1 << 20)
            .unwrap()
            .collect();
        assert_eq!(maps33.len(), 81);
        assert!(maps33[0].is_zero());
    }

    #[test]
    fn enumerate_cap() {
        let err = LinMap::enumerate_maps(3, 3, Z2, 100).unwrap_err();
        assert_eq!(
            err,
            Error::CapExceeded {
                required: 512,
                cap: 100
            }
        );
    }
}

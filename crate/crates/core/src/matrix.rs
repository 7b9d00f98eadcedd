//! Dense integer vectors and matrices over `Z`.
//!
//! Everything here is tiny (a tame quiver on 20 vertices is already far
//! beyond what the Hasse construction can handle), so the matrices are plain
//! row-major `Vec<i64>` and inversion is done exactly by fraction-free
//! Gauss-Jordan elimination.

use std::fmt;
use std::ops::{Index, IndexMut, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimension vector of a module: entry `j` is `dim X e_j`.
///
/// Shifted projectives `P_i^-` are encoded with the negated dimension vector
/// of `P_i`, so entries may be negative. Ordering is lexicographic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DimVector(pub Vec<i64>);

impl DimVector {
    pub fn zeros(len: usize) -> Self {
        DimVector(vec![0; len])
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = 1;
        v
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(|&x| x < 0)
    }

    /// All entries non-negative and at least one positive.
    pub fn is_module(&self) -> bool {
        !self.has_negative() && self.0.iter().any(|&x| x > 0)
    }

    pub fn is_sincere(&self) -> bool {
        self.0.iter().all(|&x| x != 0)
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

impl Index<usize> for DimVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Neg for DimVector {
    type Output = DimVector;
    fn neg(self) -> DimVector {
        DimVector(self.0.into_iter().map(|x| -x).collect())
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    size: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(size: usize) -> Self {
        IntMatrix {
            size,
            data: vec![0; size * size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size);
        for i in 0..size {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from its rows. Panics if the rows are ragged or not square.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let size = rows.len();
        let mut data = Vec::with_capacity(size * size);
        for row in rows {
            assert_eq!(row.len(), size, "matrix must be square");
            data.extend_from_slice(row);
        }
        IntMatrix { size, data }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.size.max(1))
            .map(<[i64]>::to_vec)
            .collect()
    }

    pub fn row(&self, i: usize) -> DimVector {
        DimVector(self.data[i * self.size..(i + 1) * self.size].to_vec())
    }

    pub fn column(&self, k: usize) -> DimVector {
        DimVector((0..self.size).map(|j| self[(j, k)]).collect())
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.size);
        for i in 0..self.size {
            for j in 0..self.size {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.size, other.size);
        let n = self.size;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &DimVector) -> DimVector {
        assert_eq!(self.size, v.len());
        let n = self.size;
        DimVector(
            (0..n)
                .map(|i| {
                    self.data[i * n..(i + 1) * n]
                        .iter()
                        .zip(&v.0)
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        )
    }

    pub fn pow(&self, mut e: u32) -> IntMatrix {
        let mut base = self.clone();
        let mut acc = Self::identity(self.size);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn determinant(&self) -> i128 {
        self.eliminate().1
    }

    /// Exact inverse of a unimodular matrix.
    pub fn inverse(&self) -> Result<IntMatrix> {
        let (inv, det) = self.eliminate();
        if det != 1 && det != -1 {
            return Err(Error::NonUnimodular(det));
        }
        let inv = inv.ok_or_else(|| Error::invariant("adjugate missing for invertible matrix"))?;
        debug_assert_eq!(self.mul(&inv), Self::identity(self.size));
        Ok(inv)
    }

    /// Fraction-free Gauss-Jordan elimination on `[A | I]`.
    ///
    /// Returns the integer inverse when `det = ±1` along with the determinant.
    /// Every division performed is exact (Bareiss); a nonzero remainder would
    /// mean the arithmetic itself is broken, so it panics.
    fn eliminate(&self) -> (Option<IntMatrix>, i128) {
        let n = self.size;
        if n == 0 {
            return (Some(IntMatrix::zeros(0)), 1);
        }
        let w = 2 * n;
        let mut a = vec![0i128; n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = self[(i, j)] as i128;
            }
            a[i * w + n + i] = 1;
        }
        let mut prev: i128 = 1;
        let mut sign: i128 = 1;
        for k in 0..n {
            let Some(p) = (k..n).find(|&r| a[r * w + k] != 0) else {
                return (None, 0);
            };
            if p != k {
                for j in 0..w {
                    a.swap(p * w + j, k * w + j);
                }
                sign = -sign;
            }
            let pivot = a[k * w + k];
            for i in 0..n {
                if i == k {
                    continue;
                }
                let factor = a[i * w + k];
                for j in 0..w {
                    if j == k {
                        continue;
                    }
                    let num = pivot * a[i * w + j] - factor * a[k * w + j];
                    assert!(num % prev == 0, "inexact Bareiss division");
                    a[i * w + j] = num / prev;
                }
                a[i * w + k] = 0;
            }
            prev = pivot;
        }
        // Left block is now prev * I and the right block is prev * A^{-1}.
        let det = sign * prev;
        if prev != 1 && prev != -1 {
            return (None, det);
        }
        let mut inv = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = (a[i * w + n + j] / prev) as i64;
            }
        }
        (Some(inv), det)
    }
}

impl Neg for IntMatrix {
    type Output = IntMatrix;
    fn neg(mut self) -> IntMatrix {
        for x in &mut self.data {
            *x = -*x;
        }
        self
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.size + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.size + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

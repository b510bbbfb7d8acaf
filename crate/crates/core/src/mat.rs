//! Dense vectors and matrices over GF(2^m).
//!
//! A vector is a plain `Vec<FieldElement>`; `ExtMatrix` is row-major dense
//! storage. Shapes are checked, arithmetic is delegated to a
//! [`FieldContext`].

use crate::field::{FieldContext, FieldElement};

pub type ExtVector = Vec<FieldElement>;

#[derive(Clone, PartialEq, Eq)]
pub struct ExtMatrix {
    rows: usize,
    cols: usize,
    data: Vec<FieldElement>,
}

impl std::fmt::Debug for ExtMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ExtMatrix({}x{})", self.rows, self.cols)
    }
}

impl ExtMatrix {
    pub fn zero(rows: usize, cols: usize) -> ExtMatrix {
        ExtMatrix {
            rows,
            cols,
            data: vec![FieldElement::ZERO; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<ExtVector>) -> ExtMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged rows");
        ExtMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> FieldElement) -> ExtMatrix {
        let mut m = ExtMatrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m[(r, c)] = f(r, c);
            }
        }
        m
    }

    pub fn identity(n: usize) -> ExtMatrix {
        ExtMatrix::from_fn(n, n, |r, c| {
            if r == c {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            }
        })
    }

    #[inline(always)]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline(always)]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> ExtVector {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn set_col(&mut self, c: usize, v: &[FieldElement]) {
        assert_eq!(v.len(), self.rows);
        for r in 0..self.rows {
            self[(r, c)] = v[r];
        }
    }

    pub fn entries(&self) -> &[FieldElement] {
        &self.data
    }

    pub fn add(&self, other: &ExtMatrix) -> ExtMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExtMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| FieldElement(a.0 ^ b.0))
                .collect(),
        }
    }

    /// Matrix product over GF(2^m).
    pub fn mul(&self, ctx: &FieldContext, other: &ExtMatrix) -> ExtMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = ExtMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let p = ctx.mul(a, other[(k, c)]);
                    out[(r, c)] = ctx.add(out[(r, c)], p);
                }
            }
        }
        out
    }

    /// Row-vector times matrix.
    pub fn vec_mul(&self, ctx: &FieldContext, v: &[FieldElement]) -> ExtVector {
        assert_eq!(v.len(), self.rows, "shape mismatch");
        let mut out = vec![FieldElement::ZERO; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for c in 0..self.cols {
                out[c] = ctx.add(out[c], ctx.mul(a, self[(r, c)]));
            }
        }
        out
    }

    pub fn transpose(&self) -> ExtMatrix {
        ExtMatrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Rank over GF(2^m), by plain elimination.
    pub fn rank(&self, ctx: &FieldContext) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for col in 0..a.cols {
            let Some(p) = (rank..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            for j in 0..a.cols {
                let t = a[(rank, j)];
                a[(rank, j)] = a[(p, j)];
                a[(p, j)] = t;
            }
            let inv = ctx.inv(a[(rank, col)]).unwrap();
            for j in col..a.cols {
                a[(rank, j)] = ctx.mul(a[(rank, j)], inv);
            }
            for r in 0..a.rows {
                if r != rank && !a[(r, col)].is_zero() {
                    let f = a[(r, col)];
                    for j in col..a.cols {
                        let t = ctx.mul(f, a[(rank, j)]);
                        a[(r, j)] = ctx.add(a[(r, j)], t);
                    }
                }
            }
            rank += 1;
            if rank == a.rows {
                break;
            }
        }
        rank
    }
}

impl std::ops::Index<(usize, usize)> for ExtMatrix {
    type Output = FieldElement;
    #[inline(always)]
    fn index(&self, (r, c): (usize, usize)) -> &FieldElement {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for ExtMatrix {
    #[inline(always)]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut FieldElement {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// Coordinate-wise sum of two vectors.
pub fn vec_add(a: &[FieldElement], b: &[FieldElement]) -> ExtVector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| FieldElement(x.0 ^ y.0)).collect()
}

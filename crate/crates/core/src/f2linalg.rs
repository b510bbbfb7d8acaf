//! GF(2) linear algebra and the rank-metric primitives built on it.
//!
//! `BitMatrix` packs rows into 64-bit words; Gaussian elimination is a
//! sequence of word XORs. `Subspace` is a subspace of GF(2^m) kept in
//! reduced row echelon form so that equality is a plain comparison, plus
//! the samplers the schemes need: uniform subspaces, full-weight matrices
//! and the nested-support triples for non-homogeneous errors.

use crate::field::FieldElement;
use crate::mat::{ExtMatrix, ExtVector};
use rand::RngCore;

// ---------------------------------------------------------------------------
// BitMatrix

#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitMatrix({}x{})", self.rows, self.cols)
    }
}

/// Outcome of [`BitMatrix::solve`].
#[derive(Debug, Clone)]
pub enum SolveOutcome {
    /// One solution (free variables set to zero) plus the kernel dimension.
    Solution { x: Vec<bool>, kernel_dim: usize },
    Inconsistent,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> BitMatrix {
        let stride = cols.div_ceil(64).max(1);
        BitMatrix {
            rows,
            cols,
            stride,
            data: vec![0; rows * stride],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> BitMatrix {
        let mut m = BitMatrix::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn identity(n: usize) -> BitMatrix {
        BitMatrix::from_fn(n, n, |r, c| r == c)
    }

    pub fn random(rng: &mut impl RngCore, rows: usize, cols: usize) -> BitMatrix {
        let mut m = BitMatrix::zero(rows, cols);
        let tail_mask = if cols % 64 == 0 { !0u64 } else { (1u64 << (cols % 64)) - 1 };
        for r in 0..rows {
            for w in 0..m.stride {
                let mut v = rng.next_u64();
                if w == m.stride - 1 {
                    v &= tail_mask;
                }
                m.data[r * m.stride + w] = v;
            }
        }
        m
    }

    #[inline(always)]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline(always)]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline(always)]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.data[r * self.stride + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline(always)]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.stride + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    #[inline]
    fn xor_rows(&mut self, dst: usize, src: usize) {
        if dst == src {
            return;
        }
        let (d, s) = (dst * self.stride, src * self.stride);
        let (dst_sl, src_sl) = if d < s {
            let (a, b) = self.data.split_at_mut(s);
            (&mut a[d..d + self.stride], &b[..self.stride])
        } else {
            let (a, b) = self.data.split_at_mut(d);
            (&mut b[..self.stride], &a[s..s + self.stride])
        };
        for (dw, sw) in dst_sl.iter_mut().zip(src_sl) {
            *dw ^= sw;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for w in 0..self.stride {
            self.data.swap(a * self.stride + w, b * self.stride + w);
        }
    }

    /// In-place row echelon form; returns the pivot columns.
    pub fn echelonize(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| self.get(r, col)) else {
                continue;
            };
            self.swap_rows(row, p);
            for r in 0..self.rows {
                if r != row && self.get(r, col) {
                    self.xor_rows(r, row);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.echelonize().len()
    }

    /// Solves M x = rhs; returns one solution (free vars zero) and the
    /// kernel dimension, or Inconsistent.
    pub fn solve(&self, rhs: &[bool]) -> SolveOutcome {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = BitMatrix::zero(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for w in 0..self.stride {
                aug.data[r * aug.stride + w] = self.data[r * self.stride + w];
            }
            aug.set(r, self.cols, rhs[r]);
        }
        let pivots = aug.echelonize();
        if pivots.last() == Some(&self.cols) {
            return SolveOutcome::Inconsistent;
        }
        let mut x = vec![false; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = aug.get(row, self.cols);
        }
        SolveOutcome::Solution {
            x,
            kernel_dim: self.cols - pivots.len(),
        }
    }

    /// Basis of the right kernel {x : M x = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.echelonize();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![false; self.cols];
            v[free] = true;
            for (row, &col) in pivots.iter().enumerate() {
                if m.get(row, free) {
                    v[col] = true;
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = false;
                for (c, &b) in x.iter().enumerate() {
                    acc ^= b && self.get(r, c);
                }
                acc
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Rank weight and support

/// Expands a vector over GF(2^m) into the m x n matrix of its coordinates
/// in the polynomial basis: column j holds the bits of v_j.
pub fn expand(v: &[FieldElement], m: u32) -> BitMatrix {
    BitMatrix::from_fn(m as usize, v.len(), |r, c| (v[c].0 >> r) & 1 == 1)
}

/// Recomposes [`expand`]'s output back into field elements.
pub fn recompose(bm: &BitMatrix) -> ExtVector {
    (0..bm.cols())
        .map(|c| {
            let mut x = 0u128;
            for r in 0..bm.rows() {
                if bm.get(r, c) {
                    x |= 1 << r;
                }
            }
            FieldElement(x)
        })
        .collect()
}

/// A subspace of GF(2^m) over GF(2), basis kept in reduced row echelon form
/// with leading bits at the high end, so equal subspaces are bit-identical.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    m: u32,
    basis: Vec<u128>,
}

impl Subspace {
    pub fn zero(m: u32) -> Subspace {
        Subspace { m, basis: Vec::new() }
    }

    pub fn from_elements(m: u32, elems: impl IntoIterator<Item = FieldElement>) -> Subspace {
        let mut s = Subspace::zero(m);
        for e in elems {
            s.insert(e);
        }
        s
    }

    pub fn ambient(&self) -> u32 {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[u128] {
        &self.basis
    }

    /// Inserts an element, keeping the reduced echelon invariant. Returns
    /// true if the dimension grew.
    pub fn insert(&mut self, e: FieldElement) -> bool {
        let mut v = e.0;
        for &b in &self.basis {
            let lead = 127 - b.leading_zeros();
            if (v >> lead) & 1 == 1 {
                v ^= b;
            }
        }
        if v == 0 {
            return false;
        }
        // reduce existing rows by the new one, keep rows sorted by lead
        let lead = 127 - v.leading_zeros();
        for b in self.basis.iter_mut() {
            if (*b >> lead) & 1 == 1 {
                *b ^= v;
            }
        }
        let pos = self
            .basis
            .partition_point(|&b| (127 - b.leading_zeros()) > lead);
        self.basis.insert(pos, v);
        true
    }

    pub fn contains(&self, e: FieldElement) -> bool {
        let mut v = e.0;
        for &b in &self.basis {
            let lead = 127 - b.leading_zeros();
            if (v >> lead) & 1 == 1 {
                v ^= b;
            }
        }
        v == 0
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.basis.iter().all(|&b| other.contains(FieldElement(b)))
    }

    /// Sum (join) of two subspaces.
    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for &b in &other.basis {
            s.insert(FieldElement(b));
        }
        s
    }

    /// All 2^dim elements; only sensible for small dimensions.
    pub fn enumerate(&self) -> Vec<FieldElement> {
        assert!(self.dim() <= 20, "subspace too large to enumerate");
        let mut out = Vec::with_capacity(1 << self.dim());
        for mask in 0u32..(1 << self.dim()) {
            let mut v = 0u128;
            for (i, &b) in self.basis.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    v ^= b;
                }
            }
            out.push(FieldElement(v));
        }
        out
    }

    /// Uniformly random element of the subspace.
    pub fn sample(&self, rng: &mut impl RngCore) -> FieldElement {
        let mut v = 0u128;
        let mut bits = rng.next_u64();
        let mut avail = 64;
        for &b in &self.basis {
            if avail == 0 {
                bits = rng.next_u64();
                avail = 64;
            }
            if bits & 1 == 1 {
                v ^= b;
            }
            bits >>= 1;
            avail -= 1;
        }
        FieldElement(v)
    }
}

/// Rank weight of a vector (or of a matrix via its entries): the GF(2)
/// dimension of the span of the coordinates.
pub fn rank_weight(entries: &[FieldElement], m: u32) -> usize {
    support(entries, m).dim()
}

/// The support: GF(2)-span of the entries.
pub fn support(entries: &[FieldElement], m: u32) -> Subspace {
    Subspace::from_elements(m, entries.iter().copied())
}

// ---------------------------------------------------------------------------
// Samplers

/// Uniform element of GF(2^m) from an RNG stream (LSB-first bytes).
pub fn sample_element(rng: &mut impl RngCore, m: u32) -> FieldElement {
    let mut buf = [0u8; 16];
    let nbytes = (m as usize).div_ceil(8);
    rng.fill_bytes(&mut buf[..nbytes]);
    FieldElement(u128::from_le_bytes(buf) & ((1u128 << m) - 1))
}

/// Uniformly random w-dimensional subspace of GF(2^m); when
/// `must_contain_one` is set, conditions on 1 being a member.
pub fn sample_subspace(rng: &mut impl RngCore, m: u32, w: usize, must_contain_one: bool) -> Subspace {
    assert!(w as u32 <= m, "subspace dimension exceeds ambient");
    let mut s = Subspace::zero(m);
    if must_contain_one && w > 0 {
        s.insert(FieldElement::ONE);
    }
    // each accepted vector is uniform conditioned on being independent of
    // the span so far, which makes the resulting subspace uniform (over
    // those containing 1 when conditioned)
    while s.dim() < w {
        s.insert(sample_element(rng, m));
    }
    s
}

/// rows x cols matrix with entries in `sup`, resampled until the entries
/// span all of `sup` (exact rank weight). Errors if the shape cannot.
pub fn sample_full_weight(
    rng: &mut impl RngCore,
    sup: &Subspace,
    rows: usize,
    cols: usize,
) -> Result<ExtMatrix, ShapeTooSmall> {
    if rows * cols < sup.dim() {
        return Err(ShapeTooSmall);
    }
    loop {
        let m = ExtMatrix::from_fn(rows, cols, |_, _| sup.sample(rng));
        if support(m.entries(), sup.ambient()).dim() == sup.dim() {
            return Ok(m);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShapeTooSmall;

impl std::fmt::Display for ShapeTooSmall {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "matrix has fewer entries than the support dimension")
    }
}

impl std::error::Error for ShapeTooSmall {}

/// Shared-support triple (X1, X2, X3): (X1, X3) is full weight w1 in a
/// subspace V, X2 is full weight w1+w2 in a W containing V. With w2 = 0 the
/// supports coincide (homogeneous sampling).
#[allow(clippy::too_many_arguments)]
pub fn sample_nh_triple(
    rng: &mut impl RngCore,
    m: u32,
    w1: usize,
    w2: usize,
    shape1: (usize, usize),
    shape2: (usize, usize),
    shape3: (usize, usize),
) -> (ExtMatrix, ExtMatrix, ExtMatrix) {
    assert!((w1 + w2) as u32 <= m);
    let v = sample_subspace(rng, m, w1, false);
    let w = if w2 == 0 {
        v.clone()
    } else {
        loop {
            let mut cand = v.clone();
            while cand.dim() < w1 + w2 {
                cand.insert(sample_element(rng, m));
            }
            if cand.dim() == w1 + w2 {
                break cand;
            }
        }
    };
    // (X1, X3) must be jointly full weight in v
    let (x1, x3) = loop {
        let x1 = ExtMatrix::from_fn(shape1.0, shape1.1, |_, _| v.sample(rng));
        let x3 = ExtMatrix::from_fn(shape3.0, shape3.1, |_, _| v.sample(rng));
        let mut joint = Subspace::zero(m);
        for &e in x1.entries().iter().chain(x3.entries()) {
            joint.insert(e);
        }
        if joint.dim() == w1 {
            break (x1, x3);
        }
    };
    let x2 = sample_full_weight(rng, &w, shape2.0, shape2.1).expect("shape2 too small");
    (x1, x2, x3)
}

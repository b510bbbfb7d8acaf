//! Bit-exact serialization: a field element is m bits LSB-first, vectors
//! and matrices are concatenated into one bitstream (matrices
//! column-major), zero-padded to a byte boundary at the very end so the
//! byte counts equal the closed-form sizes.

use crate::field::FieldElement;
use crate::mat::{ExtMatrix, ExtVector};

pub struct BitWriter {
    buf: Vec<u8>,
    /// bits already used in the final partial byte
    used: u32,
}

impl BitWriter {
    pub fn new() -> BitWriter {
        BitWriter { buf: Vec::new(), used: 0 }
    }

    pub fn push(&mut self, value: u128, mut count: u32) {
        let mut v = value;
        while count > 0 {
            if self.used == 0 {
                self.buf.push(0);
            }
            let room = 8 - self.used;
            let take = room.min(count);
            let bits = (v & ((1u128 << take) - 1)) as u8;
            *self.buf.last_mut().unwrap() |= bits << self.used;
            self.used = (self.used + take) % 8;
            v >>= take;
            count -= take;
        }
    }

    pub fn finish(self) -> Vec<u8> {
        self.buf
    }
}

impl Default for BitWriter {
    fn default() -> Self {
        Self::new()
    }
}

pub struct BitReader<'a> {
    buf: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    pub fn new(buf: &'a [u8]) -> BitReader<'a> {
        BitReader { buf, pos: 0 }
    }

    pub fn read(&mut self, count: u32) -> Option<u128> {
        if self.pos + count as usize > self.buf.len() * 8 {
            return None;
        }
        let mut v = 0u128;
        for i in 0..count {
            let p = self.pos + i as usize;
            if (self.buf[p / 8] >> (p % 8)) & 1 == 1 {
                v |= 1 << i;
            }
        }
        self.pos += count as usize;
        Some(v)
    }
}

/// One vector as a padded bitstream.
pub fn pack_vector(v: &[FieldElement], m: u32) -> Vec<u8> {
    let mut w = BitWriter::new();
    for e in v {
        w.push(e.0, m);
    }
    w.finish()
}

pub fn unpack_vector(buf: &[u8], m: u32, len: usize) -> Option<ExtVector> {
    let mut r = BitReader::new(buf);
    let v: Option<ExtVector> = (0..len).map(|_| r.read(m).map(FieldElement)).collect();
    v
}

/// Several matrices into one bitstream, each column-major, padded once at
/// the end (so e.g. a ciphertext (U, V) costs ceil(total_bits / 8) bytes).
pub fn pack_matrices_col_major(mats: &[&ExtMatrix], m: u32) -> Vec<u8> {
    let mut w = BitWriter::new();
    for mat in mats {
        for c in 0..mat.cols() {
            for r in 0..mat.rows() {
                w.push(mat[(r, c)].0, m);
            }
        }
    }
    w.finish()
}

pub fn unpack_matrix_col_major(r: &mut BitReader<'_>, m: u32, rows: usize, cols: usize) -> Option<ExtMatrix> {
    let mut out = ExtMatrix::zero(rows, cols);
    for c in 0..cols {
        for row in 0..rows {
            out[(row, c)] = FieldElement(r.read(m)?);
        }
    }
    Some(out)
}

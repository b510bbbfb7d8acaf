//! Arithmetic in GF(2^m) for 2 <= m <= 127.
//!
//! Elements are polynomials over GF(2) modulo a fixed irreducible modulus,
//! stored LSB-first in a `u128` (bit i = coefficient of x^i). Products are
//! computed carry-lessly (pclmulqdq where the CPU has it, a 4-bit-window
//! comb otherwise) and reduced with per-context byte tables.
//!
//! Arithmetic is **not** constant time.

use std::fmt;

/// Low-order coefficients t such that x^m + t(x) is the lexicographically
/// smallest irreducible polynomial of degree m over GF(2). Generated once
/// with [`is_irreducible`] and frozen; every entry is re-verified by tests.
const MODULUS_LOW: [(u32, u128); 126] = [
    (2, 0x3), (3, 0x3), (4, 0x3), (5, 0x5), (6, 0x3), (7, 0x3), (8, 0x1b),
    (9, 0x3), (10, 0x9), (11, 0x5), (12, 0x9), (13, 0x1b), (14, 0x21), (15, 0x3),
    (16, 0x2b), (17, 0x9), (18, 0x9), (19, 0x27), (20, 0x9), (21, 0x5), (22, 0x3),
    (23, 0x21), (24, 0x1b), (25, 0x9), (26, 0x1b), (27, 0x27), (28, 0x3), (29, 0x5),
    (30, 0x3), (31, 0x9), (32, 0x8d), (33, 0x4b), (34, 0x1b), (35, 0x5), (36, 0x35),
    (37, 0x3f), (38, 0x63), (39, 0x11), (40, 0x39), (41, 0x9), (42, 0x27), (43, 0x59),
    (44, 0x21), (45, 0x1b), (46, 0x3), (47, 0x21), (48, 0x2d), (49, 0x71), (50, 0x1d),
    (51, 0x4b), (52, 0x9), (53, 0x47), (54, 0x7d), (55, 0x47), (56, 0x95), (57, 0x11),
    (58, 0x63), (59, 0x7b), (60, 0x3), (61, 0x27), (62, 0x69), (63, 0x3), (64, 0x1b),
    (65, 0x1b), (66, 0x9), (67, 0x27), (68, 0xa3), (69, 0x65), (70, 0x2b), (71, 0x2b),
    (72, 0x5f), (73, 0x1d), (74, 0x47), (75, 0x4b), (76, 0x35), (77, 0x65), (78, 0x5f),
    (79, 0x1d), (80, 0xaf), (81, 0x11), (82, 0xd7), (83, 0x95), (84, 0x21), (85, 0x107),
    (86, 0x65), (87, 0xa3), (88, 0x3f), (89, 0x69), (90, 0x2d), (91, 0xed), (92, 0x65),
    (93, 0x5), (94, 0x63), (95, 0x77), (96, 0x6f), (97, 0x41), (98, 0x99), (99, 0x4b),
    (100, 0x65), (101, 0xc3), (102, 0x69), (103, 0xbd), (104, 0x1b), (105, 0x11), (106, 0x63),
    (107, 0xaf), (108, 0x53), (109, 0x35), (110, 0x53), (111, 0x95), (112, 0x39), (113, 0x2d),
    (114, 0x2d), (115, 0xaf), (116, 0x17), (117, 0x27), (118, 0x65), (119, 0x101), (120, 0x1b),
    (121, 0x123), (122, 0x47), (123, 0x5), (124, 0x7d), (125, 0xaf), (126, 0x95), (127, 0x3),
];

/// Element of GF(2^m), valid only together with the [`FieldContext`] it was
/// produced by. Bit i is the coefficient of x^i in the polynomial basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u128);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline(always)]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({:#x})", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldError {
    /// No built-in modulus for this extension degree.
    UnsupportedDegree(u32),
    /// Supplied modulus is not irreducible or has the wrong degree.
    BadModulus,
    /// Inverse of zero requested.
    ZeroInverse,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::UnsupportedDegree(m) => write!(f, "no modulus for GF(2^{m})"),
            FieldError::BadModulus => write!(f, "modulus is not irreducible of the stated degree"),
            FieldError::ZeroInverse => write!(f, "zero has no inverse"),
        }
    }
}

impl std::error::Error for FieldError {}

/// One field GF(2^m): the extension degree, the modulus and the reduction
/// tables derived from it. Immutable after construction and freely shareable.
pub struct FieldContext {
    m: u32,
    /// Full modulus including the leading bit: x^m + low part.
    modulus: u128,
    mask: u128,
    /// red[c][b] = b(x) * x^(m + 8c) mod modulus, for folding product bits
    /// m..2m-2 back below degree m, one byte at a time.
    red: Vec<[u128; 256]>,
    use_clmul: bool,
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("m", &self.m)
            .field("modulus", &format_args!("{:#x}", self.modulus))
            .finish()
    }
}

impl FieldContext {
    /// Field with the built-in modulus for degree m.
    pub fn new(m: u32) -> Result<FieldContext, FieldError> {
        let low = MODULUS_LOW
            .iter()
            .find(|&&(d, _)| d == m)
            .map(|&(_, t)| t)
            .ok_or(FieldError::UnsupportedDegree(m))?;
        Ok(Self::from_parts(m, (1u128 << m) | low))
    }

    /// Field with a caller-supplied modulus (degree-m bit included).
    pub fn with_modulus(m: u32, modulus: u128) -> Result<FieldContext, FieldError> {
        if m < 2 || m > 127 || modulus >> m != 1 || !is_irreducible(modulus) {
            return Err(FieldError::BadModulus);
        }
        Ok(Self::from_parts(m, modulus))
    }

    fn from_parts(m: u32, modulus: u128) -> FieldContext {
        // bits[j] = x^(m+j) mod modulus
        let low = modulus ^ (1u128 << m);
        let mut bits = [0u128; 128];
        bits[0] = low;
        for j in 1..128 {
            let mut v = bits[j - 1] << 1;
            if (bits[j - 1] >> (m - 1)) & 1 == 1 {
                v ^= modulus;
            }
            bits[j] = v & ((1u128 << m) - 1);
        }
        let chunks = (m as usize).div_ceil(8);
        let mut red = vec![[0u128; 256]; chunks];
        for (c, table) in red.iter_mut().enumerate() {
            for b in 1usize..256 {
                let tz = b.trailing_zeros() as usize;
                table[b] = table[b & (b - 1)] ^ bits[8 * c + tz];
            }
        }
        FieldContext {
            m,
            modulus,
            mask: (1u128 << m) - 1,
            red,
            use_clmul: clmul_available(),
        }
    }

    #[inline(always)]
    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn modulus(&self) -> u128 {
        self.modulus
    }

    /// Number of elements as a log2, i.e. m.
    pub fn order_log2(&self) -> u32 {
        self.m
    }

    #[inline(always)]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (lo, hi) = if self.use_clmul {
            // Safety: use_clmul is only set when pclmulqdq+sse2 are present.
            unsafe { clmul_x86(a.0, b.0) }
        } else {
            clmul_generic(a.0, b.0)
        };
        FieldElement(self.reduce(lo, hi))
    }

    #[inline(always)]
    pub fn square(&self, a: FieldElement) -> FieldElement {
        self.mul(a, a)
    }

    /// Folds a 256-bit carry-less product (lo, hi) below degree m.
    #[inline]
    fn reduce(&self, lo: u128, hi: u128) -> u128 {
        let m = self.m;
        // bits m..255 of the product; the product has degree <= 2m-2 < 254,
        // so this value has at most m-1 < 128 significant bits.
        let mut high = (lo >> m) | (hi << (128 - m));
        let mut acc = lo & self.mask;
        let mut c = 0;
        while high != 0 {
            acc ^= self.red[c][(high & 0xff) as usize];
            high >>= 8;
            c += 1;
        }
        acc
    }

    /// a^(2^count), the count-fold Frobenius.
    pub fn frobenius(&self, a: FieldElement, count: u32) -> FieldElement {
        let mut x = a;
        for _ in 0..count % self.m {
            x = self.square(x);
        }
        x
    }

    pub fn pow(&self, a: FieldElement, mut e: u128) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while e != 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.square(base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat: a^(2^m - 2).
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        // 2^m - 2 = 0b111...10 with m-1 ones.
        let mut acc = a;
        let mut sq = a;
        for _ in 1..self.m - 1 {
            sq = self.square(sq);
            acc = self.mul(acc, sq);
        }
        Ok(self.square(acc))
    }

    /// The i-th polynomial-basis vector x^i.
    pub fn basis(&self, i: u32) -> FieldElement {
        debug_assert!(i < self.m);
        FieldElement(1u128 << i)
    }
}

#[inline]
fn clmul_available() -> bool {
    #[cfg(target_arch = "x86_64")]
    {
        std::arch::is_x86_feature_detected!("pclmulqdq") && std::arch::is_x86_feature_detected!("sse2")
    }
    #[cfg(not(target_arch = "x86_64"))]
    {
        false
    }
}

/// 128x128 -> 256 carry-less multiply, x86 path.
#[cfg(target_arch = "x86_64")]
#[target_feature(enable = "pclmulqdq", enable = "sse2")]
unsafe fn clmul_x86(a: u128, b: u128) -> (u128, u128) {
    use std::arch::x86_64::*;
    let va = _mm_set_epi64x((a >> 64) as i64, a as i64);
    let vb = _mm_set_epi64x((b >> 64) as i64, b as i64);
    let p00 = _mm_clmulepi64_si128::<0x00>(va, vb);
    let p11 = _mm_clmulepi64_si128::<0x11>(va, vb);
    let mid = _mm_xor_si128(
        _mm_clmulepi64_si128::<0x01>(va, vb),
        _mm_clmulepi64_si128::<0x10>(va, vb),
    );
    let p00: u128 = std::mem::transmute(p00);
    let p11: u128 = std::mem::transmute(p11);
    let mid: u128 = std::mem::transmute(mid);
    (p00 ^ (mid << 64), p11 ^ (mid >> 64))
}

#[cfg(not(target_arch = "x86_64"))]
unsafe fn clmul_x86(_a: u128, _b: u128) -> (u128, u128) {
    unreachable!("clmul path selected on a non-x86_64 target")
}

/// Portable 128x128 -> 256 carry-less multiply (4-bit window comb).
fn clmul_generic(a: u128, b: u128) -> (u128, u128) {
    // tbl[n] = n(x) * a(x) as a 129+2-bit value split into (lo, hi<=3 bits)
    let mut tbl = [(0u128, 0u128); 16];
    tbl[1] = (a, 0);
    for n in (2..16).step_by(2) {
        let (lo, hi) = tbl[n / 2];
        tbl[n] = (lo << 1, (hi << 1) | (lo >> 127));
        tbl[n + 1] = (tbl[n].0 ^ a, tbl[n].1);
    }
    let mut lo = 0u128;
    let mut hi = 0u128;
    let mut i = 128 - 4;
    loop {
        hi = (hi << 4) | (lo >> 124);
        lo <<= 4;
        let (tlo, thi) = tbl[((b >> i) & 0xf) as usize];
        lo ^= tlo;
        hi ^= thi;
        if i == 0 {
            break;
        }
        i -= 4;
    }
    (lo, hi)
}

// ---------------------------------------------------------------------------
// GF(2)[x] helpers on bit-packed polynomials; shared by the irreducibility
// oracle, the ideal ring and the tests.

/// Degree of a bit-packed polynomial; 0 polynomial reports None.
pub fn poly_degree(p: u128) -> Option<u32> {
    if p == 0 {
        None
    } else {
        Some(127 - p.leading_zeros())
    }
}

/// Remainder of a modulo f over GF(2), schoolbook.
pub fn poly_rem(mut a: u128, f: u128) -> u128 {
    let df = poly_degree(f).expect("division by zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < df {
            break;
        }
        a ^= f << (da - df);
    }
    a
}

pub fn poly_gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = poly_rem(a, b);
        a = b;
        b = r;
    }
    a
}

/// a*b mod f over GF(2), for the irreducibility oracle only (degree < 64
/// operands would not suffice: f may have degree up to 127, so the shifted
/// accumulator is reduced eagerly).
pub fn poly_mulmod(a: u128, b: u128, f: u128) -> u128 {
    let df = poly_degree(f).expect("zero modulus");
    let mut acc = 0u128;
    let mut shifted = poly_rem(a, f);
    for i in 0..128 {
        if (b >> i) & 1 == 1 {
            acc ^= shifted;
        }
        shifted <<= 1;
        if (shifted >> df) & 1 == 1 {
            shifted ^= f;
        }
        if b >> i == 0 {
            break;
        }
    }
    acc
}

/// Irreducibility over GF(2) by the gcd test: f of degree d is irreducible
/// iff x^(2^d) == x (mod f) and gcd(x^(2^(d/p)) - x, f) = 1 for every prime
/// p dividing d.
pub fn is_irreducible(f: u128) -> bool {
    let d = match poly_degree(f) {
        Some(d) if d >= 2 => d,
        _ => return false,
    };
    let frob = |steps: u32| -> u128 {
        let mut t = 2u128; // x
        for _ in 0..steps {
            t = poly_mulmod(t, t, f);
        }
        t
    };
    if frob(d) != 2 {
        return false;
    }
    let mut rem = d;
    let mut p = 2;
    while p * p <= rem {
        if rem % p == 0 {
            if poly_gcd(frob(d / p) ^ 2, f) != 1 {
                return false;
            }
            while rem % p == 0 {
                rem /= p;
            }
        }
        p += 1;
    }
    if rem > 1 && rem < d && poly_gcd(frob(d / rem) ^ 2, f) != 1 {
        return false;
    }
    if rem == d {
        // d prime: only the p = d divisor, d/p = 1
        if poly_gcd(frob(1) ^ 2, f) != 1 {
            return false;
        }
    }
    true
}

/// The built-in modulus for a degree, if shipped.
pub fn builtin_modulus(m: u32) -> Option<u128> {
    MODULUS_LOW
        .iter()
        .find(|&&(d, _)| d == m)
        .map(|&(_, t)| (1u128 << m) | t)
}

//! Augmented Gabidulin codes: evaluation codes of q-polynomials on
//! GF(2)-independent points, padded with zero coordinates.
//!
//! The padding leaks error-support elements to the decoder for free (the
//! tail of a noisy codeword is literally a slice of the error), which
//! raises the unique-decoding radius to floor((n'-k+eps)/2) at the price
//! of a decoding failure probability: the tail may span fewer than eps
//! dimensions. Classical Gabidulin codes are the degenerate n = n',
//! eps = 0 case.

use crate::f2linalg::{rank_weight, support, BitMatrix};
use crate::field::{FieldContext, FieldElement};
use crate::mat::ExtVector;
use crate::qpoly::QPoly;
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::RngCore;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeError {
    BadParameters(&'static str),
    EvaluationPointsNotIndependent,
}

impl std::fmt::Display for CodeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CodeError::BadParameters(s) => write!(f, "bad code parameters: {s}"),
            CodeError::EvaluationPointsNotIndependent => {
                write!(f, "evaluation points are not GF(2)-independent")
            }
        }
    }
}

impl std::error::Error for CodeError {}

/// Why a decode attempt failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecodeFailure {
    /// The zero-padded tail revealed fewer support dimensions than the
    /// designed erasure count and the linear system was underdetermined
    /// beyond repair.
    ErasureRankTooLow,
    /// The key linear system has no solution.
    SystemInconsistent,
    /// Division left a remainder, or the re-encoded word sits farther than
    /// the decoding radius from the input.
    ResidualWeightTooHigh,
}

impl std::fmt::Display for DecodeFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            DecodeFailure::ErasureRankTooLow => "erasure rank too low",
            DecodeFailure::SystemInconsistent => "linear system inconsistent",
            DecodeFailure::ResidualWeightTooHigh => "residual weight too high",
        };
        f.write_str(s)
    }
}

impl std::error::Error for DecodeFailure {}

/// An augmented Gabidulin code over the field of `ctx`.
pub struct AugGabCode<'a> {
    pub ctx: &'a FieldContext,
    n: usize,
    n_prime: usize,
    k: usize,
    epsilon: usize,
    g: ExtVector,
}

impl<'a> AugGabCode<'a> {
    /// Augmented code: k <= n' < m < n, evaluation points independent,
    /// 1 <= epsilon <= min(n - n', n' - k).
    pub fn new(
        ctx: &'a FieldContext,
        n: usize,
        n_prime: usize,
        k: usize,
        epsilon: usize,
        g: ExtVector,
    ) -> Result<AugGabCode<'a>, CodeError> {
        let m = ctx.degree() as usize;
        if n == n_prime && epsilon == 0 {
            // classical Gabidulin: k <= n <= m
            if !(k <= n && n <= m) {
                return Err(CodeError::BadParameters("need k <= n <= m"));
            }
        } else {
            if !(k <= n_prime && n_prime < m && m < n) {
                return Err(CodeError::BadParameters("need k <= n' < m < n"));
            }
            if epsilon < 1 || epsilon > (n - n_prime).min(n_prime - k) {
                return Err(CodeError::BadParameters(
                    "need 1 <= eps <= min(n - n', n' - k)",
                ));
            }
        }
        if g.len() != n_prime || rank_weight(&g, ctx.degree()) != n_prime {
            return Err(CodeError::EvaluationPointsNotIndependent);
        }
        Ok(AugGabCode {
            ctx,
            n,
            n_prime,
            k,
            epsilon,
            g,
        })
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn eval_count(&self) -> usize {
        self.n_prime
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn erasure_dim(&self) -> usize {
        self.epsilon
    }

    pub fn points(&self) -> &[FieldElement] {
        &self.g
    }

    /// Unique-decoding radius floor((n' - k + eps) / 2).
    pub fn capacity(&self) -> usize {
        (self.n_prime - self.k + self.epsilon) / 2
    }

    /// Interprets msg as the coefficients of a q-polynomial P with
    /// q-degree < k and returns (P(g_1), ..., P(g_n'), 0, ..., 0).
    pub fn encode(&self, msg: &[FieldElement]) -> ExtVector {
        assert_eq!(msg.len(), self.k, "message must have k coefficients");
        let p = QPoly::from_coeffs(msg.to_vec());
        let mut c = vec![FieldElement::ZERO; self.n];
        for (i, &gi) in self.g.iter().enumerate() {
            c[i] = p.eval(self.ctx, gi);
        }
        c
    }

    /// Support-erasure decoding, following the two-step recipe: read the
    /// error tail off the zero padding, annihilate it, and solve the
    /// resulting linear system over GF(2^m) for the remaining unknowns.
    ///
    /// The achieved erasure dimension d = dim(tail span) is used instead
    /// of the designed eps: larger d only shrinks the system, and for
    /// d < eps the solve is still attempted (a zero or low-weight error
    /// decodes fine); failures are then reported as ErasureRankTooLow.
    pub fn decode(&self, y: &[FieldElement]) -> Result<ExtVector, DecodeFailure> {
        assert_eq!(y.len(), self.n);
        let ctx = self.ctx;
        let delta = self.capacity();
        let tail = &y[self.n_prime..];
        let e2 = support(tail, ctx.degree());
        let d = e2.dim();
        if d > delta {
            return Err(DecodeFailure::ResidualWeightTooHigh);
        }
        let v2 = QPoly::annihilator(ctx, &e2);
        let z: ExtVector = y[..self.n_prime]
            .iter()
            .map(|&yi| v2.eval(ctx, yi))
            .collect();

        // unknowns: w_0..w_{delta-d-1} (monic W of q-degree delta-d) and
        // r_0..r_{k+delta-1}; equations W(z_i) = R(g_i) for each point
        let wu = delta - d;
        let ru = self.k + delta;
        let cols = wu + ru;
        let rows = self.n_prime;
        let mut a = vec![FieldElement::ZERO; rows * (cols + 1)];
        let stride = cols + 1;
        // W-part columns: z^(2^j); rhs gets the monic term z^(2^wu)
        let mut zp = z.clone();
        for j in 0..=wu {
            for i in 0..rows {
                if j < wu {
                    a[i * stride + j] = zp[i];
                } else {
                    a[i * stride + cols] = zp[i];
                }
            }
            for v in zp.iter_mut() {
                *v = ctx.square(*v);
            }
        }
        // R-part columns: g^(2^j), negated (char 2: same thing)
        let mut gp = self.g.clone();
        for j in 0..ru {
            for i in 0..rows {
                a[i * stride + wu + j] = gp[i];
            }
            for v in gp.iter_mut() {
                *v = ctx.square(*v);
            }
        }

        let sol = match solve_ext(ctx, &mut a, rows, cols) {
            Some(s) => s,
            None => {
                return Err(if d < self.epsilon {
                    DecodeFailure::ErasureRankTooLow
                } else {
                    DecodeFailure::SystemInconsistent
                });
            }
        };

        let mut w_coeffs = sol[..wu].to_vec();
        w_coeffs.push(FieldElement::ONE);
        let w = QPoly::from_coeffs(w_coeffs);
        let r = QPoly::from_coeffs(sol[wu..].to_vec());
        let v = w.compose(ctx, &v2);
        let fail = |d_low: bool| {
            if d_low {
                DecodeFailure::ErasureRankTooLow
            } else {
                DecodeFailure::ResidualWeightTooHigh
            }
        };
        let (p, rem) = r.left_divide(ctx, &v).expect("V is monic, nonzero");
        if !rem.is_zero() {
            return Err(fail(d < self.epsilon));
        }
        if p.q_degree().is_some_and(|dp| dp >= self.k) {
            return Err(fail(d < self.epsilon));
        }
        let mut msg = p.coeffs().to_vec();
        msg.resize(self.k, FieldElement::ZERO);
        // re-encode check: the claimed error must fit inside the radius
        let c = self.encode(&msg);
        let e: ExtVector = y.iter().zip(&c).map(|(&a, &b)| ctx.add(a, b)).collect();
        if rank_weight(&e, ctx.degree()) > delta {
            return Err(fail(d < self.epsilon));
        }
        Ok(msg)
    }
}

/// Gaussian elimination over GF(2^m) on a rows x (cols+1) augmented
/// row-major matrix. Returns one solution (free variables zero), or None
/// if inconsistent.
fn solve_ext(
    ctx: &FieldContext,
    a: &mut [FieldElement],
    rows: usize,
    cols: usize,
) -> Option<Vec<FieldElement>> {
    let stride = cols + 1;
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r * stride + col].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..stride {
                a.swap(rank * stride + j, p * stride + j);
            }
        }
        let inv = ctx.inv(a[rank * stride + col]).expect("pivot nonzero");
        for j in col..stride {
            a[rank * stride + j] = ctx.mul(a[rank * stride + j], inv);
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = a[r * stride + col];
            if f.is_zero() {
                continue;
            }
            for j in col..stride {
                let t = ctx.mul(f, a[rank * stride + j]);
                a[r * stride + j] = ctx.add(a[r * stride + j], t);
            }
        }
        pivots.push((rank, col));
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // inconsistent iff some zero row has nonzero rhs
    for r in rank..rows {
        if !a[r * stride + cols].is_zero() {
            return None;
        }
    }
    let mut x = vec![FieldElement::ZERO; cols];
    for &(r, c) in &pivots {
        x[c] = a[r * stride + cols];
    }
    Some(x)
}

// ---------------------------------------------------------------------------
// DFR model

/// Exact count of a x b matrices over GF(q) of rank exactly i:
/// prod_{j<i} (q^a - q^j)(q^b - q^j) / (q^i - q^j).
fn rank_count(q: u64, a: usize, b: usize, i: usize) -> BigUint {
    let qb = BigUint::from(q);
    let pow = |e: usize| qb.pow(e as u32);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 0..i {
        num *= pow(a) - pow(j);
        num *= pow(b) - pow(j);
        den *= pow(i) - pow(j);
    }
    num / den
}

/// log2 of the probability that a uniform delta x tail matrix over GF(q)
/// has rank < eps; None means the failure event is empty (probability 0).
///
/// This is the corrected form of the printed failure-rate display, whose
/// literal prefactor and product bounds do not type-check as a
/// probability; the proof's text ("the probability that a random
/// delta x (n-n') matrix has rank less than eps") is what is implemented,
/// in exact rational arithmetic.
pub fn dfr_bits(q: u64, delta: usize, tail: usize, eps: usize) -> Option<f64> {
    if eps == 0 {
        return None;
    }
    let total = BigUint::from(q).pow((delta * tail) as u32);
    let mut ok = BigUint::zero();
    for i in eps..=delta.min(tail) {
        ok += rank_count(q, delta, tail, i);
    }
    let fail = &total - &ok;
    if fail.is_zero() {
        return None;
    }
    Some(log2_big(&fail) - log2_big(&total))
}

/// log2 of a positive big integer, via the top 64 bits.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 53 {
        let v: u64 = x.try_into().ok().map(|v: u64| v).unwrap_or(0);
        return (v as f64).log2();
    }
    let shift = bits - 53;
    let top: BigUint = x >> shift;
    let top: u64 = (&top).try_into().expect("53 bits fit");
    (top as f64).log2() + shift as f64
}

/// Monte-Carlo estimate of the same event: fraction of uniform delta x tail
/// GF(2) matrices with rank below eps.
pub fn dfr_monte_carlo(
    rng: &mut impl RngCore,
    delta: usize,
    tail: usize,
    eps: usize,
    trials: u64,
) -> f64 {
    if eps == 0 {
        return 0.0;
    }
    let mut failures = 0u64;
    for _ in 0..trials {
        let m = BitMatrix::random(rng, delta, tail);
        if m.rank() < eps {
            failures += 1;
        }
    }
    failures as f64 / trials as f64
}

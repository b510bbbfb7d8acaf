//! Costs for plain rank syndrome decoding: the combinatorial bound and the
//! MaxMinors algebraic attack with column-guess hybridization.

use super::qbinom::{log2, Binomials};
use super::EstimateError;
use num_bigint::BigUint;

#[derive(Debug, Clone, Copy)]
pub struct RsdComb {
    pub bits: f64,
    /// Exponent of the support-guess branch, (w-1) floor((k+1)m / n).
    pub branch_support: i64,
    /// Exponent of the amplified branch, w ceil((k+1)m / n) - m.
    pub branch_amplified: i64,
    pub polynomial_regime: bool,
}

/// Best combinatorial attack on RSD(m, n, k, w) for q = 2:
/// min(2^((w-1) floor((k+1)m/n)), 2^(w ceil((k+1)m/n) - m)).
pub fn rsd_combinatorial_bits(m: usize, n: usize, k: usize, w: usize) -> RsdComb {
    let km = ((k + 1) * m) as i64;
    let nn = n as i64;
    let e1 = (w as i64 - 1) * (km / nn);
    let e2 = w as i64 * ((km + nn - 1) / nn) - m as i64;
    let best = e1.min(e2);
    RsdComb {
        bits: best.max(0) as f64,
        branch_support: e1,
        branch_amplified: e2,
        polynomial_regime: best < 0,
    }
}

#[derive(Debug, Clone, Copy)]
pub struct RsdMaxMinors {
    pub a: usize,
    pub bits: f64,
}

/// MaxMinors attack on RSD(m, n, k, w): cost
/// q^(aw) * m * C(n-k-1, w) * C(n-a, w)^(omega-1), with a >= 0 the
/// smallest integer making the linearized system solvable:
/// m C(n-k-1, w) >= C(n-a, w) - 1.
pub fn rsd_maxminors_bits(
    m: usize,
    n: usize,
    k: usize,
    w: usize,
    omega: f64,
) -> Result<RsdMaxMinors, EstimateError> {
    if w + k + 1 > n {
        return Err(EstimateError::OutOfRegime("need w <= n - k - 1"));
    }
    let mut bin = Binomials::new();
    let eqs = BigUint::from(m as u64) * bin.c(n - k - 1, w);
    let mut a = 0usize;
    loop {
        if a + w > n {
            return Err(EstimateError::Infeasible);
        }
        let vars = bin.c(n - a, w).clone();
        if &vars - 1u32 <= eqs {
            let bits = (a * w) as f64 + log2(&eqs) + (omega - 1.0) * log2(&vars);
            return Ok(RsdMaxMinors { a, bits });
        }
        a += 1;
    }
}

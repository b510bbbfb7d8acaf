//! Exact binomial and Gaussian (q-)binomial arithmetic.
//!
//! Every feasibility comparison in the estimators is done on big integers;
//! floating point only enters when a finished count is converted to bits.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Memoized Pascal triangle; rows are built on demand.
pub struct Binomials {
    rows: Vec<Vec<BigUint>>,
}

impl Binomials {
    pub fn new() -> Binomials {
        Binomials {
            rows: vec![vec![BigUint::one()]],
        }
    }

    /// C(n, k), exact; zero when k > n.
    pub fn c(&mut self, n: usize, k: usize) -> &BigUint {
        static ZERO: std::sync::OnceLock<BigUint> = std::sync::OnceLock::new();
        if k > n {
            return ZERO.get_or_init(BigUint::zero);
        }
        while self.rows.len() <= n {
            let prev = self.rows.last().unwrap();
            let len = prev.len();
            let mut row = Vec::with_capacity(len + 1);
            row.push(BigUint::one());
            for i in 1..len {
                row.push(&prev[i - 1] + &prev[i]);
            }
            row.push(BigUint::one());
            self.rows.push(row);
        }
        &self.rows[n][k]
    }

    /// C(n, k) where n may be negative or smaller than k (then zero).
    pub fn c_signed(&mut self, n: i64, k: i64) -> BigUint {
        if n < 0 || k < 0 || k > n {
            BigUint::zero()
        } else {
            self.c(n as usize, k as usize).clone()
        }
    }
}

impl Default for Binomials {
    fn default() -> Self {
        Self::new()
    }
}

/// Gaussian binomial [a choose b]_q, the number of b-dimensional subspaces
/// of an a-dimensional space over GF(q). Exact (the division is integral).
pub fn gaussian_binomial(q: u64, a: usize, b: usize) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..b {
        num *= q.pow((a - i) as u32) - BigUint::one();
        den *= q.pow((b - i) as u32) - BigUint::one();
    }
    num / den
}

/// log2 of a positive big integer with ~1e-15 relative accuracy.
pub fn log2(x: &BigUint) -> f64 {
    crate::gabidulin::log2_big(x)
}

//! Cost of the combinatorial attack on non-homogeneous rank support
//! learning: the syndrome budget N is split between zeroing coordinates of
//! the weight-w1 blocks and of the larger-weight block, then the
//! two-subspace guess runs on what remains.

use super::EstimateError;

#[derive(Debug, Clone, Copy)]
pub struct NhrslComb {
    pub n1_split: u64,
    pub n2_split: u64,
    pub r: usize,
    pub rho: usize,
    pub bits: f64,
    pub polynomial_regime: bool,
    /// Width of the linear system one guess solves.
    pub system_width: usize,
}

impl NhrslComb {
    /// Exponent plus a 3 log2(width) surcharge for the soft-O factor.
    pub fn pessimistic_bits(&self) -> f64 {
        self.bits + 3.0 * (self.system_width as f64).log2()
    }
}

/// Exhaustive search over the split N1 + N2 = N and the guess dimensions
/// (r, rho), maximizing (w1+w2) r + w2 rho subject to
///   a = floor(N1/w1) <= n1,   b = floor(N2/(w1+w2)) <= 2n,
///   w1 <= r, w2 <= rho, r + rho <= m - 1,
///   m (n + n1) >= (n1 - b)(r + rho) + (2n - a) r + N.
/// Cost exponent: (w1+w2)(m-r) - w2 rho.
///
/// The printed pairing of a with the n1 cap looks transposed against the
/// block weights; `swap_caps` switches to the other reading (a <= 2n,
/// b <= n1) for sensitivity analysis.
pub fn nhrsl_combinatorial_bits(
    m: usize,
    n: usize,
    n1: usize,
    w1: usize,
    w2: usize,
    n_syndromes: u64,
    swap_caps: bool,
) -> Result<NhrslComb, EstimateError> {
    let total = (m * (n + n1)) as i64;
    let mut best: Option<(i64, u64, usize, usize)> = None;
    for split in 0..=n_syndromes {
        let n2_split = n_syndromes - split;
        let a = (split / w1 as u64) as i64;
        let b = (n2_split / (w1 + w2) as u64) as i64;
        let (cap_a, cap_b) = if swap_caps {
            (2 * n, n1)
        } else {
            (n1, 2 * n)
        };
        if a > cap_a as i64 || b > cap_b as i64 {
            continue;
        }
        for r in w1..m {
            let rem = total - (2 * n as i64 - a) * r as i64 - n_syndromes as i64;
            if rem < 0 {
                break;
            }
            let slack = n1 as i64 - b;
            let rho_budget = if slack > 0 {
                rem / slack - r as i64
            } else {
                (m - 1) as i64
            };
            let rho = rho_budget.min((m - 1 - r) as i64);
            if rho < w2 as i64 {
                continue;
            }
            let rho = rho as usize;
            let obj = ((w1 + w2) * r + w2 * rho) as i64;
            if best.map_or(true, |(o, _, _, _)| obj > o) {
                best = Some((obj, split, r, rho));
            }
        }
    }
    let (obj, n1_split, r, rho) = best.ok_or(EstimateError::Infeasible)?;
    let exponent = ((w1 + w2) * m) as i64 - obj;
    let a = (n1_split / w1 as u64) as usize;
    let b = ((n_syndromes - n1_split) / (w1 + w2) as u64) as usize;
    Ok(NhrslComb {
        n1_split,
        n2_split: n_syndromes - n1_split,
        r,
        rho,
        bits: exponent.max(0) as f64,
        polynomial_regime: exponent < 0,
        system_width: n_syndromes as usize + (2 * n).saturating_sub(a) * r
            + n1.saturating_sub(b) * (r + rho),
    })
}

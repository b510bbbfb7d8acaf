//! Costs for rank support learning: the zero-prefix combinatorial attack,
//! the polynomial-regime threshold it implies, and the bilinear-system
//! algebraic attack in its two specializations (delta = 0 and delta > 0),
//! each with a dense (Strassen) and a sparse (Wiedemann) linear-algebra
//! branch and hybrid guessing of alpha_R support rows and alpha_lambda
//! combination coefficients.

use super::qbinom::{log2, Binomials};
use super::EstimateError;
use num_bigint::BigUint;
use num_traits::Zero;

#[derive(Debug, Clone, Copy)]
pub struct RslComb {
    pub a: usize,
    pub r1: usize,
    pub bits: f64,
    pub polynomial_regime: bool,
    /// Width of the linear system one guess solves, for the pessimism knob.
    pub system_width: usize,
}

impl RslComb {
    /// Exponent plus a 3 log2(width) surcharge standing in for the
    /// soft-O linear-algebra factor the bare figure omits.
    pub fn pessimistic_bits(&self) -> f64 {
        self.bits + 3.0 * (self.system_width as f64).log2()
    }
}

/// Combinatorial attack on RSL(m, n, k, r, N): a = floor(N/r) coordinates
/// are zeroed by a secret combination of the syndromes, and the support
/// guess dimension r1 = floor((m(n-k) - N)/(n-a)) makes the linear system
/// solvable; cost exponent r (m - r1).
pub fn rsl_combinatorial_bits(
    m: usize,
    n: usize,
    k: usize,
    r: usize,
    n_syndromes: u64,
) -> Result<RslComb, EstimateError> {
    if r == 0 || n_syndromes == 0 {
        return Err(EstimateError::Degenerate("need r >= 1 and N >= 1"));
    }
    let a = (n_syndromes / r as u64) as usize;
    if a >= n {
        return Err(EstimateError::Degenerate("floor(N/r) must stay below n"));
    }
    let num = (m * (n - k)) as i64 - n_syndromes as i64;
    let r1 = (num.div_euclid((n - a) as i64)).clamp(0, m as i64) as usize;
    let bits = (r * (m - r1)) as f64;
    Ok(RslComb {
        a,
        r1,
        bits,
        polynomial_regime: r1 == m,
        system_width: n_syndromes as usize + (n - a) * r1,
    })
}

/// Smallest N for which the combinatorial attack runs in polynomial time:
/// the least integer with N > k r m / (m - r), decided exactly.
pub fn rsl_polynomial_threshold(m: usize, n: usize, k: usize, r: usize) -> u64 {
    assert!(r < m, "need r < m");
    let _ = n;
    let num = (k * r * m) as u64;
    let den = (m - r) as u64;
    num / den + 1
}

/// One optimized point of the algebraic attack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RslAlgPoint {
    /// 0 for the plain specialization, > 0 for the rank-reduced one.
    pub delta: usize,
    /// Zero-prefix length implied by the syndromes actually used.
    pub a: usize,
    /// Number of combination coefficients kept, N'.
    pub n_used: u64,
    pub b: usize,
    pub alpha_r: usize,
    pub alpha_lambda: usize,
    pub bits: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RslAlgBranch {
    Strassen,
    Wiedemann,
}

/// Optimized costs of the algebraic attack, per specialization and branch,
/// already minimized over the number of syndromes actually used (an
/// attacker may always ignore syndromes, so each series is non-increasing
/// in N).
#[derive(Debug, Clone)]
pub struct RslAlgCost {
    pub dzero_strassen: Option<RslAlgPoint>,
    pub dzero_wiedemann: Option<RslAlgPoint>,
    pub dpos_strassen: Option<RslAlgPoint>,
    pub dpos_wiedemann: Option<RslAlgPoint>,
    /// Count of (config, b, alpha_lambda) combinations scanned.
    pub evaluated: u64,
}

impl RslAlgCost {
    pub fn best(&self) -> Option<(RslAlgPoint, RslAlgBranch)> {
        let mut out: Option<(RslAlgPoint, RslAlgBranch)> = None;
        for (p, br) in [
            (&self.dzero_strassen, RslAlgBranch::Strassen),
            (&self.dpos_strassen, RslAlgBranch::Strassen),
            (&self.dzero_wiedemann, RslAlgBranch::Wiedemann),
            (&self.dpos_wiedemann, RslAlgBranch::Wiedemann),
        ] {
            if let Some(p) = p {
                if out.is_none() || p.bits < out.unwrap().0.bits {
                    out = Some((*p, br));
                }
            }
        }
        out
    }
}

fn min_point(a: Option<RslAlgPoint>, b: Option<RslAlgPoint>) -> Option<RslAlgPoint> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if x.bits <= y.bits { x } else { y }),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Per-configuration cost table, reusable across many values of N (the
/// figure-series caller evaluates a whole N-grid against one table).
pub struct RslAlgTable {
    n: usize,
    k: usize,
    r: usize,
    max_syndromes: u64,
    /// (delta, a, N', strassen, wiedemann); reachability at a given N is
    /// decided from (delta, a, N') alone.
    configs: Vec<(usize, usize, u64, Option<RslAlgPoint>, Option<RslAlgPoint>)>,
    pub evaluated: u64,
}

/// Scans every (delta, a) configuration usable with at most `max_syndromes`
/// syndromes.
pub fn rsl_algebraic_table(
    m: usize,
    n: usize,
    k: usize,
    r: usize,
    max_syndromes: u64,
    omega: f64,
) -> RslAlgTable {
    let mut bin = Binomials::new();
    let mut table = RslAlgTable {
        n,
        k,
        r,
        max_syndromes,
        configs: Vec::new(),
        evaluated: 0,
    };
    let min_regime = (n as i64 - k as i64 - r as i64 + 1).max(1) as u64;
    if max_syndromes < min_regime {
        return table;
    }
    let a_max = ((max_syndromes - 1) / r as u64) as usize;
    for a in 0..=a_max {
        let lo = (a * r + 1) as u64;
        let hi = ((a + 1) * r) as u64;
        if lo.max(min_regime) > hi.min(max_syndromes) {
            continue;
        }
        let np = (a * r + 1) as u64;
        let (s, w) = scan_config(&mut bin, m, n, k, r, 0, a, np, omega, &mut table.evaluated);
        table.configs.push((0, a, np, s, w));
    }
    for delta in 1..r {
        let span = (delta * (n - r + delta)) as u64;
        if span >= max_syndromes {
            break;
        }
        let step = (r - delta) as u64;
        let mut a = 0usize;
        loop {
            let np = span + a as u64 * step;
            if np + 1 > max_syndromes {
                break;
            }
            if np + 1 >= min_regime {
                let (s, w) =
                    scan_config(&mut bin, m, n, k, r, delta, a, np, omega, &mut table.evaluated);
                table.configs.push((delta, a, np, s, w));
            }
            a += 1;
        }
    }
    table
}

impl RslAlgTable {
    /// Minima over every configuration reachable with n_syndromes <= N.
    pub fn at(&self, n_syndromes: u64) -> Result<RslAlgCost, EstimateError> {
        if n_syndromes as i64 <= (self.n as i64 - self.k as i64 - self.r as i64) {
            return Err(EstimateError::OutOfRegime("valid only when N > n - k - r"));
        }
        assert!(n_syndromes <= self.max_syndromes, "table built for fewer syndromes");
        let min_regime = (self.n as i64 - self.k as i64 - self.r as i64 + 1).max(1) as u64;
        let mut out = RslAlgCost {
            dzero_strassen: None,
            dzero_wiedemann: None,
            dpos_strassen: None,
            dpos_wiedemann: None,
            evaluated: self.evaluated,
        };
        for (delta, a, np, s, w) in &self.configs {
            let reachable = if *delta == 0 {
                let lo = (*a * self.r + 1) as u64;
                let hi = ((*a + 1) * self.r) as u64;
                lo.max(min_regime) <= hi.min(n_syndromes)
            } else {
                np + 1 <= n_syndromes && np + 1 >= min_regime
            };
            if !reachable {
                continue;
            }
            if *delta == 0 {
                out.dzero_strassen = min_point(out.dzero_strassen, *s);
                out.dzero_wiedemann = min_point(out.dzero_wiedemann, *w);
            } else {
                out.dpos_strassen = min_point(out.dpos_strassen, *s);
                out.dpos_wiedemann = min_point(out.dpos_wiedemann, *w);
            }
        }
        Ok(out)
    }
}

/// Algebraic attack on RSL(m, n, k, r, N), valid for N > n - k - r, q = 2.
/// See the module doc; the returned minima cover both specializations and
/// both linear-algebra branches, minimized over the syndromes actually
/// used.
pub fn rsl_algebraic_bits(
    m: usize,
    n: usize,
    k: usize,
    r: usize,
    n_syndromes: u64,
    omega: f64,
) -> Result<RslAlgCost, EstimateError> {
    if n_syndromes as i64 <= (n as i64 - k as i64 - r as i64) {
        return Err(EstimateError::OutOfRegime("valid only when N > n - k - r"));
    }
    rsl_algebraic_table(m, n, k, r, n_syndromes, omega).at(n_syndromes)
}

/// Exhaustive (b, alpha_lambda) scan for one (delta, a, N') configuration,
/// with the smallest feasible alpha_R found by binary search (guessing
/// more rows only ever raises the cost). Returns the per-branch minima.
#[allow(clippy::too_many_arguments)]
fn scan_config(
    bin: &mut Binomials,
    m: usize,
    n: usize,
    k: usize,
    r: usize,
    delta: usize,
    a: usize,
    np: u64,
    omega: f64,
    evaluated: &mut u64,
) -> (Option<RslAlgPoint>, Option<RslAlgPoint>) {
    let re = r - delta;
    if n < a + re || np == 0 {
        return (None, None);
    }
    let nk = n - k;
    let m_big = BigUint::from(m as u64);
    // row-guess column counts C(n - a - alpha_R, re), decreasing in alpha_R
    let cvec: Vec<BigUint> = (0..(n - a - re))
        .map(|ar| bin.c(n - a - ar, re).clone())
        .collect();
    if cvec.is_empty() {
        return (None, None);
    }
    // W(d, j) = C(j-1, d-1) C(n-k-j, re-d+1), independent of alpha_lambda
    let bmax = re + 1;
    let wdj: Vec<Vec<BigUint>> = (1..=bmax)
        .map(|d| {
            (1..=nk)
                .map(|j| bin.c_signed((j - 1) as i64, (d - 1) as i64) * bin.c_signed((nk - j) as i64, (re + 1 - d) as i64))
                .collect()
        })
        .collect();
    // Wiedemann row-weight factor C(k - a + 1 + r, r)
    let kw = if k + 1 + r >= a {
        bin.c(k + 1 + r - a, r).clone()
    } else {
        BigUint::zero()
    };
    let lk = if kw.is_zero() { 0.0 } else { log2(&kw) };

    let mut best_s: Option<RslAlgPoint> = None;
    let mut best_w: Option<RslAlgPoint> = None;
    for al in 0..np.saturating_sub(1) {
        let budget = (np - al) as usize;
        let mut nle = BigUint::zero();
        let mut tsum = BigUint::zero();
        for b in 1..=bmax.min(budget.saturating_sub(1)) {
            *evaluated += 1;
            // equation layer i = b: sum_{d<=b} sum_j W(d,j) C(N'-al-j, b-d)
            for d in 1..=b {
                for j in 1..=nk {
                    let e = budget as i64 - j as i64;
                    let c3 = bin.c_signed(e, (b - d) as i64);
                    if !c3.is_zero() && !wdj[d - 1][j - 1].is_zero() {
                        nle += &wdj[d - 1][j - 1] * c3;
                    }
                }
            }
            tsum += bin.c(budget, b);
            if nle.is_zero() {
                continue;
            }
            let eqs = &m_big * &nle;
            // smallest alpha_R with cvec[aR] * tsum <= eqs + 1
            let bound = &eqs + 1u32;
            if &cvec[cvec.len() - 1] * &tsum > bound {
                continue; // infeasible even at the largest guess
            }
            let (mut lo, mut hi) = (0usize, cvec.len() - 1);
            while lo < hi {
                let mid = (lo + hi) / 2;
                if &cvec[mid] * &tsum <= bound {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            let ar = lo;
            let mvar = &cvec[ar] * &tsum;
            let lmvar = log2(&mvar);
            let guess = (re * ar) as f64 + al as f64;
            let bits_s = guess + log2(&eqs) + (omega - 1.0) * lmvar;
            let bits_w = guess + ((np - al) as f64).log2() + lk + 2.0 * lmvar;
            let mk_point = |bits: f64| RslAlgPoint {
                delta,
                a,
                n_used: np,
                b,
                alpha_r: ar,
                alpha_lambda: al as usize,
                bits,
            };
            if best_s.is_none() || bits_s < best_s.unwrap().bits {
                best_s = Some(mk_point(bits_s));
            }
            if best_w.is_none() || bits_w < best_w.unwrap().bits {
                best_w = Some(mk_point(bits_w));
            }
        }
    }
    (best_s, best_w)
}

/// Re-checks that an optimized point satisfies every constraint it was
/// searched under; used by callers to validate optimizer output.
pub fn verify_alg_point(m: usize, n: usize, k: usize, r: usize, p: &RslAlgPoint) -> bool {
    let re = r - p.delta;
    let np = p.n_used;
    if p.b < 1 || p.b > re + 1 {
        return false;
    }
    if (p.alpha_lambda as u64) >= np.saturating_sub(p.b as u64) {
        return false;
    }
    if p.alpha_r >= n - p.a - re {
        return false;
    }
    let mut bin = Binomials::new();
    let budget = (np - p.alpha_lambda as u64) as usize;
    let mut nle = BigUint::zero();
    for i in 1..=p.b {
        for d in 1..=i {
            for j in 1..=(n - k) {
                nle += bin.c_signed((j - 1) as i64, (d - 1) as i64)
                    * bin.c_signed((n - k - j) as i64, (re + 1 - d) as i64)
                    * bin.c_signed(budget as i64 - j as i64, (i - d) as i64);
            }
        }
    }
    let tsum: BigUint = (1..=p.b).map(|i| bin.c(budget, i).clone()).sum();
    let mvar = bin.c(n - p.a - p.alpha_r, re) * tsum;
    BigUint::from(m as u64) * nle >= &mvar - 1u32
}

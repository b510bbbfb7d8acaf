//! Costs and success probabilities for non-homogeneous rank syndrome
//! decoding: the two-subspace-guess combinatorial attack, the adapted
//! MaxMinors attack, and the exact guess-success probability it rests on.

use super::qbinom::{gaussian_binomial, log2, Binomials};
use super::EstimateError;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Debug, Clone, Copy)]
pub struct NhrsdComb {
    pub r: usize,
    pub rho: usize,
    pub bits: f64,
    pub polynomial_regime: bool,
    /// Width of the linear system one guess solves.
    pub system_width: usize,
}

impl NhrsdComb {
    /// Exponent plus a 3 log2(width) surcharge for the soft-O factor.
    pub fn pessimistic_bits(&self) -> f64 {
        self.bits + 3.0 * (self.system_width as f64).log2()
    }
}

/// Combinatorial attack on NHRSD(m, n, n1, w1, w2): guess V of dimension r
/// containing the common support and Z of dimension rho lifting it to the
/// larger one; exponent (w1+w2)(m-r) - w2 rho - m, with (r, rho) chosen by
/// exhaustive scan to maximize (w1+w2) r + w2 rho subject to
/// (2n+n1) r + n1 rho <= m (n+n1-1), w1 <= r, w2 <= rho, r + rho <= m-1.
pub fn nhrsd_combinatorial_bits(
    m: usize,
    n: usize,
    n1: usize,
    w1: usize,
    w2: usize,
) -> Result<NhrsdComb, EstimateError> {
    let budget = (m * (n + n1 - 1)) as i64;
    let mut best: Option<(i64, usize, usize)> = None;
    for r in w1..m {
        if ((2 * n + n1) * r) as i64 > budget {
            break;
        }
        for rho in w2..m.saturating_sub(r) {
            if ((2 * n + n1) * r + n1 * rho) as i64 > budget {
                break;
            }
            let obj = ((w1 + w2) * r + w2 * rho) as i64;
            if best.map_or(true, |(b, _, _)| obj > b) {
                best = Some((obj, r, rho));
            }
        }
    }
    let (obj, r, rho) = best.ok_or(EstimateError::Infeasible)?;
    let exponent = ((w1 + w2) * m) as i64 - m as i64 - obj;
    Ok(NhrsdComb {
        r,
        rho,
        bits: exponent.max(0) as f64,
        polynomial_regime: exponent < 0,
        system_width: 2 * n * r + n1 * (r + rho),
    })
}

#[derive(Debug, Clone, Copy)]
pub struct NhrsdMaxMinors {
    pub a: usize,
    pub bits: f64,
}

/// MaxMinors adapted to NHRSD: with W = w1 + w2,
///   N_Fq  = m sum_{i=w2..W} C(n1-1, i) C(n, W-i), capped at
///           C(2n+n1, W) - M - 1,
///   nu_Fq = m C(n1-1, w2-1) C(n-1, w1), capped at C(n1-1, w2-1) C(2n, w1),
///   M_a   = sum_{i<w2} C(n1, i) C(2n-a, W-i),
/// find the smallest a >= 0 with N_Fq >= C(2n+n1-a, W) - M_a - nu_Fq - 1;
/// cost q^(a w1) N_Fq (C(2n+n1-a, W) - M_a - nu_Fq)^(omega-1).
pub fn nhrsd_maxminors_bits(
    m: usize,
    n: usize,
    n1: usize,
    w1: usize,
    w2: usize,
    omega: f64,
) -> Result<NhrsdMaxMinors, EstimateError> {
    let bw = w1 + w2;
    let mut bin = Binomials::new();
    let m_big = BigUint::from(m as u64);

    let mut nfq = BigUint::zero();
    for i in w2..=bw {
        nfq += bin.c_signed((n1 - 1) as i64, i as i64) * bin.c_signed(n as i64, (bw - i) as i64);
    }
    nfq *= &m_big;
    let m0: BigUint = (0..w2)
        .map(|i| bin.c(n1, i).clone() * bin.c(2 * n, bw - i))
        .sum();
    let nfq_cap = bin.c(2 * n + n1, bw) - &m0 - BigUint::one();
    if nfq > nfq_cap {
        nfq = nfq_cap;
    }

    let mut nu = if w2 >= 1 {
        &m_big * bin.c_signed((n1 - 1) as i64, (w2 - 1) as i64) * bin.c(n - 1, w1)
    } else {
        BigUint::zero()
    };
    if w2 >= 1 {
        let nu_cap = bin.c_signed((n1 - 1) as i64, (w2 - 1) as i64) * bin.c(2 * n, w1);
        if nu > nu_cap {
            nu = nu_cap;
        }
    }

    let mut a = 0usize;
    loop {
        if a > 2 * n + n1 - bw {
            return Err(EstimateError::Infeasible);
        }
        let ma: BigUint = (0..w2)
            .map(|i| bin.c(n1, i).clone() * bin.c_signed((2 * n - a) as i64, (bw - i) as i64))
            .sum();
        let total = bin.c(2 * n + n1 - a, bw).clone();
        let vars = &total - (&ma + &nu).min(total.clone());
        if vars.is_zero() {
            return Err(EstimateError::Degenerate("no variables left"));
        }
        if nfq >= &vars - BigUint::one() {
            let bits = (a * w1) as f64 + log2(&nfq) + (omega - 1.0) * log2(&vars);
            return Ok(NhrsdMaxMinors { a, bits });
        }
        a += 1;
    }
}

/// Exact success probability of the (V, Z) guess, Pi = P[S1 in V] * sum_l
/// s_l t_l, with the per-intersection-dimension table p_l = s_l t_l
/// returned alongside, and the q^m-amplified estimate (q^m-1)/(q-1) * Pi.
#[derive(Debug, Clone)]
pub struct NhrsdProbability {
    pub pi: BigRational,
    pub p_table: Vec<BigRational>,
    pub amplified: BigRational,
}

fn rat(n: BigUint, d: BigUint) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn nhrsd_success_probability(
    q: u64,
    m: usize,
    w1: usize,
    w2: usize,
    r: usize,
    rho: usize,
) -> NhrsdProbability {
    assert!(w1 <= r && w2 <= rho && r + rho <= m, "guess shape out of range");
    let qb = BigUint::from(q);
    let p_s1 = rat(
        gaussian_binomial(q, m - w1, r - w1),
        gaussian_binomial(q, m, r),
    );
    let mut p_table = Vec::with_capacity(w2 + 1);
    let mut cond = BigRational::zero();
    for l in 0..=w2 {
        if l > r - w1 {
            // the guessed V cannot intersect S2/S1 in more than r - w1 dims
            p_table.push(BigRational::zero());
            continue;
        }
        let s_num = qb.pow(((r - w1 - l) * (w2 - l)) as u32)
            * gaussian_binomial(q, m - w1 - w2, r - w1 - l)
            * gaussian_binomial(q, w2, l);
        let s_l = rat(s_num, gaussian_binomial(q, m - w1, r - w1));
        let t_l = rat(
            gaussian_binomial(q, rho, w2 - l),
            gaussian_binomial(q, m - r, w2 - l),
        );
        let p_l = s_l * t_l;
        cond += &p_l;
        p_table.push(p_l);
    }
    let pi = p_s1 * cond;
    let amp_num = BigInt::from(qb.pow(m as u32) - BigUint::one());
    let amp_den = BigInt::from(q - 1);
    let amplified = &pi * BigRational::new(amp_num, amp_den);
    NhrsdProbability { pi, p_table, amplified }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn comb_reference_instance_resists() {
        let r = nhrsd_combinatorial_bits(61, 50, 50, 7, 5).unwrap();
        assert!(r.bits >= 128.0, "got {}", r.bits);
        assert_eq!((r.r, r.rho), (30, 30));
        assert_eq!(r.bits, 161.0);
        // optimizer output re-verified against its constraint set
        assert!(r.r >= 7 && r.rho >= 5 && r.r + r.rho <= 60);
        assert!((2 * 50 + 50) * r.r + 50 * r.rho <= 61 * (50 + 50 - 1));
        assert_eq!(r.bits, (12 * (61 - r.r) - 5 * r.rho - 61) as f64);
    }

    #[test]
    fn comb_homogeneous_degeneration() {
        // w2 = 0: rho contributes nothing and the optimum takes the
        // largest r the budget allows, giving w1 (m - r) - m
        let r = nhrsd_combinatorial_bits(61, 50, 50, 7, 0).unwrap();
        let r_expect = (61 * (50 + 50 - 1)) / (2 * 50 + 50);
        assert_eq!(r.r, r_expect);
        assert_eq!(r.bits, (7 * (61 - r_expect) - 61) as f64);
    }

    #[test]
    fn comb_search_space_is_small() {
        // the grid is at most m^2 points; just exercise a large instance
        let t = std::time::Instant::now();
        nhrsd_combinatorial_bits(127, 96, 96, 12, 0).unwrap();
        assert!(t.elapsed().as_secs() < 1);
    }

    #[test]
    fn maxminors_reference_instance() {
        let r = nhrsd_maxminors_bits(61, 50, 50, 7, 5, 2.81).unwrap();
        assert!(r.bits >= 128.0, "got {}", r.bits);
        assert_eq!(r.a, 5);
        assert!((r.bits - 190.4).abs() < 0.5);
    }

    #[test]
    fn maxminors_w2_zero_matches_homogeneous_shape() {
        // with w2 = 0: M_a = 0, nu = 0, and the formula reduces to the
        // homogeneous MaxMinors count on length 2n + n1 with dimension n1-1
        // fewer rows; check the explicit degeneration
        let m = 61;
        let (n, n1, w1) = (50usize, 50usize, 7usize);
        let r = nhrsd_maxminors_bits(m, n, n1, w1, 0, 2.81).unwrap();
        let mut bin = Binomials::new();
        // N_Fq = m * C(n1-1, 0) * ... only i = 0 term? no: i runs w2..=w1,
        // so this is m * sum_i C(n1-1, i) C(n, w1-i); verify the a found
        // satisfies the solvability inequality and its predecessor fails
        let mut nfq = BigUint::zero();
        for i in 0..=w1 {
            nfq += bin.c(n1 - 1, i).clone() * bin.c(n, w1 - i);
        }
        nfq *= BigUint::from(m as u64);
        let cap = bin.c(2 * n + n1, w1) - BigUint::one();
        if nfq > cap {
            nfq = cap;
        }
        let vars_at = |a: usize, bin: &mut Binomials| bin.c(2 * n + n1 - a, w1).clone();
        assert!(nfq >= vars_at(r.a, &mut bin) - BigUint::one());
        if r.a > 0 {
            assert!(nfq < vars_at(r.a - 1, &mut bin) - BigUint::one());
        }
    }

    #[test]
    fn m0_equals_closed_form() {
        // M_0 is the count of always-zero minor variables
        let (n, n1, w1, w2) = (50usize, 50usize, 7usize, 5usize);
        let mut bin = Binomials::new();
        let a = 0usize;
        let m0: BigUint = (0..w2)
            .map(|i| bin.c(n1, i).clone() * bin.c(2 * n, w1 + w2 - i))
            .sum();
        let direct: BigUint = (0..w2)
            .map(|i| bin.c(n1, i).clone() * bin.c(2 * n - a, w1 + w2 - i))
            .sum();
        assert_eq!(m0, direct);
    }

    #[test]
    fn probability_exact_one_fifth() {
        // (q=2, m=4, w1=1, w2=0, r=2): P[S1 in V] = [3 1]/[4 2] = 7/35 = 1/5
        let p = nhrsd_success_probability(2, 4, 1, 0, 2, 0);
        assert_eq!(p.pi, BigRational::new(BigInt::from(1), BigInt::from(5)));
    }

    #[test]
    fn probability_exhaustive_enumeration_m4() {
        // enumerate all 2-dim subspaces of GF(2^4) and count those
        // containing a fixed line
        use crate::f2linalg::Subspace;
        use crate::field::FieldElement;
        let mut subspaces = std::collections::HashSet::new();
        for a in 1u128..16 {
            for b in 1u128..16 {
                let s = Subspace::from_elements(4, [FieldElement(a), FieldElement(b)]);
                if s.dim() == 2 {
                    subspaces.insert(s.basis().to_vec());
                }
            }
        }
        let total = subspaces.len();
        let containing = subspaces
            .iter()
            .filter(|basis| {
                let s = Subspace::from_elements(4, basis.iter().map(|&b| FieldElement(b)));
                s.contains(FieldElement(1))
            })
            .count();
        let p = nhrsd_success_probability(2, 4, 1, 0, 2, 0);
        assert_eq!(
            p.pi,
            BigRational::new(BigInt::from(containing), BigInt::from(total))
        );
    }

    #[test]
    fn probability_known_small_values() {
        let p = nhrsd_success_probability(2, 6, 1, 1, 2, 2);
        assert_eq!(p.pi, BigRational::new(BigInt::from(1), BigInt::from(93)));
        let p = nhrsd_success_probability(2, 9, 1, 1, 2, 2);
        assert_eq!(p.pi, BigRational::new(BigInt::from(1), BigInt::from(6205)));
        // amplified estimate is (q^m - 1)/(q - 1) times Pi
        let amp = &p.amplified / &p.pi;
        assert_eq!(amp, BigRational::from(BigInt::from(511)));
    }

    #[test]
    fn probability_table_sums_and_p0_dominates() {
        // sum p_l = Pi / P[S1 in V]; and log2(sum p_l) - log2(p_0) stays
        // within one bit across a small grid (p_0 carries the mass)
        for (m, w1, w2, r, rho) in [
            (8usize, 1usize, 1usize, 2usize, 2usize),
            (10, 2, 1, 3, 2),
            (11, 1, 2, 3, 3),
            (12, 2, 2, 4, 3),
        ] {
            let p = nhrsd_success_probability(2, m, w1, w2, r, rho);
            let cond: BigRational = p.p_table.iter().sum();
            let p0 = p.p_table[0].to_f64().unwrap();
            let c = cond.to_f64().unwrap();
            assert!(c >= p0);
            assert!(
                (c.log2() - p0.log2()).abs() <= 1.0,
                "m={m} w1={w1} w2={w2}: cond {c} vs p0 {p0}"
            );
        }
    }

    #[test]
    fn probability_monte_carlo_agreement() {
        use crate::f2linalg::sample_subspace;
        use rand::rngs::StdRng;
        use rand::SeedableRng;
        // draw random (V, Z, S1, S2) and compare the empirical event rate
        let (m, w1, w2, r, rho) = (6u32, 1usize, 1usize, 2usize, 2usize);
        let p = nhrsd_success_probability(2, m as usize, w1, w2, r, rho)
            .pi
            .to_f64()
            .unwrap();
        let mut rng = StdRng::seed_from_u64(90);
        let trials = 100_000u32;
        let mut hits = 0u32;
        for _ in 0..trials {
            // plant nested supports S1 in S2
            let s1 = sample_subspace(&mut rng, m, w1, false);
            let s2 = {
                let mut s = s1.clone();
                while s.dim() < w1 + w2 {
                    s.insert(crate::f2linalg::sample_element(&mut rng, m));
                }
                s
            };
            // guess V uniform r-dim, Z uniform rho-dim with V cap Z = 0
            let v = sample_subspace(&mut rng, m, r, false);
            let vz = loop {
                let z = sample_subspace(&mut rng, m, rho, false);
                let j = v.join(&z);
                if j.dim() == r + rho {
                    break j;
                }
            };
            if s1.is_subspace_of(&v) && s2.is_subspace_of(&vz) {
                hits += 1;
            }
        }
        let obs = hits as f64 / trials as f64;
        let sigma = (p * (1.0 - p) / trials as f64).sqrt();
        assert!((obs - p).abs() <= 3.0 * sigma, "obs {obs} vs {p}");
    }
}

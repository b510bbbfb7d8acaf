//! Desk-scale executable attacks on planted toy instances. These exist to
//! check, empirically, that the estimator's probability and threshold
//! claims describe reality: each attack validates candidate solutions
//! against the instance before reporting success, so measured success
//! rates are honest.

use crate::f2linalg::{
    rank_weight, sample_element, sample_full_weight, sample_subspace, support, BitMatrix, Subspace,
};
use crate::field::{FieldContext, FieldElement};
use crate::mat::{ExtMatrix, ExtVector};
use rand::RngCore;

/// Kernels larger than this are not enumerated; a try that produces one is
/// treated as unresolved unless the guess is the whole space.
const KERNEL_ENUM_CAP: usize = 16;

// ---------------------------------------------------------------------------
// Rank support learning

/// A planted RSL instance: parity-check matrix, N syndromes whose errors
/// share one support, and (for tests only) the planted data.
pub struct RslInstance {
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub h: ExtMatrix,
    pub syndromes: Vec<ExtVector>,
    /// Planted support; test-only knowledge.
    pub hidden_support: Subspace,
    /// Planted errors; test-only knowledge.
    pub hidden_errors: Vec<ExtVector>,
}

pub fn gen_rsl_instance(
    rng: &mut impl RngCore,
    ctx: &FieldContext,
    n: usize,
    k: usize,
    r: usize,
    n_syndromes: usize,
) -> RslInstance {
    let m = ctx.degree();
    assert!(r as u32 <= m && r <= n);
    let h = loop {
        let cand = ExtMatrix::from_fn(n - k, n, |_, _| sample_element(rng, m));
        if cand.rank(ctx) == n - k {
            break cand;
        }
    };
    let v = sample_subspace(rng, m, r, false);
    let mut errors = Vec::with_capacity(n_syndromes);
    let mut syndromes = Vec::with_capacity(n_syndromes);
    for _ in 0..n_syndromes {
        let e = sample_full_weight(rng, &v, 1, n).unwrap().entries().to_vec();
        let s = h.mul(ctx, &ExtMatrix::from_rows(vec![e.clone()]).transpose());
        syndromes.push(s.col(0));
        errors.push(e);
    }
    RslInstance {
        m,
        n,
        k,
        r,
        h,
        syndromes,
        hidden_support: v,
        hidden_errors: errors,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AttackOutcome {
    /// Recovered (part of) the secret support.
    Recovered(Subspace),
    Exhausted,
}

/// One guess of the combinatorial RSL attack per try: sample V of
/// dimension r1, zero the first a coordinates through a secret syndrome
/// combination, and solve the joint GF(2) system in the lambda and
/// coordinate variables. Solutions are rank-filtered and re-verified
/// against the syndromes; the supports of all verified solutions are
/// joined.
///
/// a is the largest integer with a r < N, so a nonzero combination always
/// exists (floor(N/r) loses that guarantee when r divides N).
pub fn rsl_combinatorial_attack(
    ctx: &FieldContext,
    inst: &RslInstance,
    r1: usize,
    max_tries: u32,
    rng: &mut impl RngCore,
) -> AttackOutcome {
    assert!(inst.r <= r1 && r1 as u32 <= inst.m);
    let n_syn = inst.syndromes.len();
    let a = (n_syn - 1) / inst.r;
    assert!(a < inst.n, "zero prefix must stay below the length");
    for _ in 0..max_tries {
        let guess = sample_subspace(rng, inst.m, r1, false);
        if let Some(sup) = rsl_try(ctx, inst, a, &guess) {
            return AttackOutcome::Recovered(sup);
        }
    }
    AttackOutcome::Exhausted
}

fn rsl_try(
    ctx: &FieldContext,
    inst: &RslInstance,
    a: usize,
    guess: &Subspace,
) -> Option<Subspace> {
    let m = inst.m as usize;
    let n_syn = inst.syndromes.len();
    let r1 = guess.dim();
    let coord_vars = (inst.n - a) * r1;
    let cols = n_syn + coord_vars;
    let rows = (inst.n - inst.k) * m;
    let mut sys = BitMatrix::zero(rows, cols);
    // lambda columns: bits of the syndromes
    for (i, s) in inst.syndromes.iter().enumerate() {
        for t in 0..(inst.n - inst.k) {
            for b in 0..m {
                if (s[t].0 >> b) & 1 == 1 {
                    sys.set(t * m + b, i, true);
                }
            }
        }
    }
    // coordinate columns: bits of H[t][a+j] * basis_b
    for j in 0..(inst.n - a) {
        for (b, &bas) in guess.basis().iter().enumerate() {
            let col = n_syn + j * r1 + b;
            for t in 0..(inst.n - inst.k) {
                let coeff = ctx.mul(inst.h[(t, a + j)], FieldElement(bas));
                for bit in 0..m {
                    if (coeff.0 >> bit) & 1 == 1 {
                        sys.set(t * m + bit, col, true);
                    }
                }
            }
        }
    }
    let kernel = sys.kernel_basis();
    if kernel.len() > KERNEL_ENUM_CAP {
        if r1 as u32 == inst.m {
            // the whole field trivially contains the support; the system
            // is hopelessly underdetermined and teaches nothing more
            return Some(guess.clone());
        }
        return None;
    }
    let mut joined: Option<Subspace> = None;
    for mask in 1u64..(1u64 << kernel.len()) {
        let mut vec = vec![false; cols];
        for (i, basis_vec) in kernel.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                for (x, &y) in vec.iter_mut().zip(basis_vec) {
                    *x ^= y;
                }
            }
        }
        let lambda = &vec[..n_syn];
        if lambda.iter().all(|&b| !b) {
            continue; // reject the all-zero combination
        }
        // reconstruct the error tail from the coordinate bits
        let mut e_tail = vec![FieldElement::ZERO; inst.n - a];
        for (j, e) in e_tail.iter_mut().enumerate() {
            for (b, &bas) in guess.basis().iter().enumerate() {
                if vec[n_syn + j * r1 + b] {
                    *e = ctx.add(*e, FieldElement(bas));
                }
            }
        }
        if e_tail.iter().all(|e| e.is_zero()) {
            continue;
        }
        if rank_weight(&e_tail, inst.m) > inst.r {
            continue;
        }
        // re-verify in field arithmetic: H (0 | e)^T = sum lambda_i s_i^T
        let mut full = vec![FieldElement::ZERO; inst.n];
        full[a..].copy_from_slice(&e_tail);
        let lhs = inst
            .h
            .mul(ctx, &ExtMatrix::from_rows(vec![full]).transpose());
        let mut rhs = vec![FieldElement::ZERO; inst.n - inst.k];
        for (i, &li) in lambda.iter().enumerate() {
            if li {
                for (t, x) in rhs.iter_mut().enumerate() {
                    *x = ctx.add(*x, inst.syndromes[i][t]);
                }
            }
        }
        if lhs.col(0) != rhs {
            continue;
        }
        let sup = support(&e_tail, inst.m);
        joined = Some(match joined {
            None => sup,
            Some(j) => j.join(&sup),
        });
    }
    joined
}

/// Transcript of the polynomial-regime demonstration.
#[derive(Debug, Clone)]
pub struct PolyDemoTranscript {
    pub threshold: u64,
    pub records: Vec<PolyDemoRecord>,
}

#[derive(Debug, Clone, Copy)]
pub struct PolyDemoRecord {
    pub n_syndromes: usize,
    pub tries_used: u32,
    pub success: bool,
}

impl PolyDemoTranscript {
    pub fn to_text(&self) -> String {
        let mut s = format!("threshold = {}\n", self.threshold);
        for r in &self.records {
            s.push_str(&format!(
                "N = {} tries = {} success = {}\n",
                r.n_syndromes, r.tries_used, r.success
            ));
        }
        s
    }
}

/// Runs the combinatorial attack just above and just below the polynomial
/// threshold. Above it the guess dimension saturates at m and recovery is
/// near deterministic; below it success needs luck at the predicted
/// exponential rate. Each trial gets a fresh instance.
pub fn rsl_polynomial_regime_demo(
    rng: &mut impl RngCore,
    ctx: &FieldContext,
    n: usize,
    k: usize,
    r: usize,
    trials_above: u32,
    trials_below: u32,
) -> PolyDemoTranscript {
    let m = ctx.degree() as usize;
    let threshold = crate::estimator::rsl_polynomial_threshold(m, n, k, r);
    let mut records = Vec::new();

    let n_above = (threshold + 1) as usize;
    for _ in 0..trials_above {
        let inst = gen_rsl_instance(rng, ctx, n, k, r, n_above);
        let comb = crate::estimator::rsl_combinatorial_bits(m, n, k, r, n_above as u64).unwrap();
        let r1 = comb.r1.min(m);
        let mut tries_used = 0;
        let mut success = false;
        for t in 1..=5u32 {
            tries_used = t;
            if let AttackOutcome::Recovered(sup) = rsl_combinatorial_attack(ctx, &inst, r1, 1, rng)
            {
                if sup.dim() > 0 && sup.is_subspace_of(&inst.hidden_support) {
                    success = true;
                    break;
                }
            }
        }
        records.push(PolyDemoRecord { n_syndromes: n_above, tries_used, success });
    }

    let n_below = (n - k - r + 2).max(threshold as usize / 2).min(threshold as usize - 5);
    for _ in 0..trials_below {
        let inst = gen_rsl_instance(rng, ctx, n, k, r, n_below);
        let comb = crate::estimator::rsl_combinatorial_bits(m, n, k, r, n_below as u64).unwrap();
        let r1 = comb.r1.min(m);
        let success = matches!(
            rsl_combinatorial_attack(ctx, &inst, r1, 1, rng),
            AttackOutcome::Recovered(_)
        );
        records.push(PolyDemoRecord { n_syndromes: n_below, tries_used: 1, success });
    }

    PolyDemoTranscript { threshold, records }
}

// ---------------------------------------------------------------------------
// Non-homogeneous rank syndrome decoding

/// A planted NHRSD instance: e = (e1, e2, e3) with weights (w1, w1+w2, w1)
/// on blocks of lengths (n, n1, n) and nested supports.
pub struct NhrsdInstance {
    pub m: u32,
    pub n: usize,
    pub n1: usize,
    pub w1: usize,
    pub w2: usize,
    pub h: ExtMatrix,
    pub syndrome: ExtVector,
    pub hidden_error: ExtVector,
}

pub fn gen_nhrsd_instance(
    rng: &mut impl RngCore,
    ctx: &FieldContext,
    n: usize,
    n1: usize,
    w1: usize,
    w2: usize,
) -> NhrsdInstance {
    let m = ctx.degree();
    let h = loop {
        let cand = ExtMatrix::from_fn(n + n1, 2 * n + n1, |_, _| sample_element(rng, m));
        if cand.rank(ctx) == n + n1 {
            break cand;
        }
    };
    let (e1, e2, e3) = crate::f2linalg::sample_nh_triple(rng, m, w1, w2, (1, n), (1, n1), (1, n));
    let mut e: ExtVector = e1.entries().to_vec();
    e.extend_from_slice(e2.entries());
    e.extend_from_slice(e3.entries());
    let s = h.mul(ctx, &ExtMatrix::from_rows(vec![e.clone()]).transpose());
    NhrsdInstance {
        m,
        n,
        n1,
        w1,
        w2,
        h,
        syndrome: s.col(0),
        hidden_error: e,
    }
}

/// One (V, Z) guess of the combinatorial NHRSD attack per try: write
/// (e1, e3) over a basis of V and e2 over one of V + Z, intersect with the
/// extended code's parity checks, and look for a kernel vector that
/// reproduces the syndrome exactly (no amplification) with the right
/// weights. Returns the recovered error on success.
pub fn nhrsd_guess_and_solve(
    ctx: &FieldContext,
    inst: &NhrsdInstance,
    r: usize,
    rho: usize,
    max_tries: u32,
    rng: &mut impl RngCore,
) -> Option<ExtVector> {
    let m = inst.m as usize;
    let (n, n1) = (inst.n, inst.n1);
    assert!(
        2 * n * r <= m * (n + n1 - 1) - n1 * (r + rho),
        "guess dimensions leave multiple solutions"
    );
    for _ in 0..max_tries {
        let v = sample_subspace(rng, inst.m, r, false);
        let vz = loop {
            let z = sample_subspace(rng, inst.m, rho, false);
            let j = v.join(&z);
            if j.dim() == r + rho {
                break j;
            }
        };
        if let Some(e) = nhrsd_try(ctx, inst, &v, &vz) {
            return Some(e);
        }
    }
    None
}

fn nhrsd_try(
    ctx: &FieldContext,
    inst: &NhrsdInstance,
    v: &Subspace,
    vz: &Subspace,
) -> Option<ExtVector> {
    let m = inst.m as usize;
    let (n, n1) = (inst.n, inst.n1);
    let len = 2 * n + n1;
    // parity matrix of the extended code C + <e>: combinations of H's
    // rows that kill the syndrome
    let s = &inst.syndrome;
    let pivot = s.iter().position(|x| !x.is_zero())?;
    let s_inv = ctx.inv(s[pivot]).unwrap();
    let mut he_rows = Vec::with_capacity(n + n1 - 1);
    for i in 0..(n + n1) {
        if i == pivot {
            continue;
        }
        let f = ctx.mul(s[i], s_inv);
        let row: ExtVector = (0..len)
            .map(|c| ctx.add(inst.h[(i, c)], ctx.mul(f, inst.h[(pivot, c)])))
            .collect();
        he_rows.push(row);
    }
    let he = ExtMatrix::from_rows(he_rows);

    let r = v.dim();
    let rp = vz.dim();
    let cols = 2 * n * r + n1 * rp;
    let rows = (n + n1 - 1) * m;
    let mut sys = BitMatrix::zero(rows, cols);
    let fill = |col: usize, pos: usize, bas: u128, sys: &mut BitMatrix| {
        for t in 0..(n + n1 - 1) {
            let coeff = ctx.mul(he[(t, pos)], FieldElement(bas));
            for bit in 0..m {
                if (coeff.0 >> bit) & 1 == 1 {
                    sys.set(t * m + bit, col, true);
                }
            }
        }
    };
    for j in 0..n {
        for (b, &bas) in v.basis().iter().enumerate() {
            fill(j * r + b, j, bas, &mut sys);
            fill((n + j) * r + b, n + n1 + j, bas, &mut sys);
        }
    }
    for j in 0..n1 {
        for (b, &bas) in vz.basis().iter().enumerate() {
            fill(2 * n * r + j * rp + b, n + j, bas, &mut sys);
        }
    }
    let kernel = sys.kernel_basis();
    if kernel.is_empty() || kernel.len() > KERNEL_ENUM_CAP {
        return None;
    }
    for mask in 1u64..(1u64 << kernel.len()) {
        let mut vec = vec![false; cols];
        for (i, basis_vec) in kernel.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                for (x, &y) in vec.iter_mut().zip(basis_vec) {
                    *x ^= y;
                }
            }
        }
        let mut e = vec![FieldElement::ZERO; len];
        for j in 0..n {
            for (b, &bas) in v.basis().iter().enumerate() {
                if vec[j * r + b] {
                    e[j] = ctx.add(e[j], FieldElement(bas));
                }
                if vec[(n + j) * r + b] {
                    e[n + n1 + j] = ctx.add(e[n + n1 + j], FieldElement(bas));
                }
            }
        }
        for j in 0..n1 {
            for (b, &bas) in vz.basis().iter().enumerate() {
                if vec[2 * n * r + j * rp + b] {
                    e[n + j] = ctx.add(e[n + j], FieldElement(bas));
                }
            }
        }
        // verify weights, nesting, and the exact (non-amplified) syndrome
        let e13: ExtVector = e[..n].iter().chain(&e[n + n1..]).copied().collect();
        if rank_weight(&e13, inst.m) != inst.w1 {
            continue;
        }
        let s2 = support(&e[n..n + n1], inst.m);
        if s2.dim() != inst.w1 + inst.w2 || !support(&e13, inst.m).is_subspace_of(&s2) {
            continue;
        }
        let got = inst
            .h
            .mul(ctx, &ExtMatrix::from_rows(vec![e.clone()]).transpose());
        if got.col(0) == inst.syndrome {
            return Some(e);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn rsl_instance_construction() {
        let ctx = FieldContext::new(8).unwrap();
        let mut rng = StdRng::seed_from_u64(100);
        let inst = gen_rsl_instance(&mut rng, &ctx, 12, 6, 2, 8);
        assert_eq!(inst.hidden_support.dim(), 2);
        for (e, s) in inst.hidden_errors.iter().zip(&inst.syndromes) {
            assert_eq!(rank_weight(e, 8), 2);
            let got = inst.h.mul(&ctx, &ExtMatrix::from_rows(vec![e.clone()]).transpose());
            assert_eq!(&got.col(0), s);
        }
        let mut rng2 = StdRng::seed_from_u64(101);
        let inst2 = gen_rsl_instance(&mut rng2, &ctx, 12, 6, 2, 8);
        assert_ne!(inst.syndromes[0], inst2.syndromes[0]);
    }

    #[test]
    fn rsl_attack_full_space_guess_always_succeeds() {
        let ctx = FieldContext::new(8).unwrap();
        let mut rng = StdRng::seed_from_u64(102);
        let inst = gen_rsl_instance(&mut rng, &ctx, 12, 6, 2, 8);
        match rsl_combinatorial_attack(&ctx, &inst, 8, 1, &mut rng) {
            AttackOutcome::Recovered(sup) => {
                assert!(inst.hidden_support.is_subspace_of(&sup));
            }
            AttackOutcome::Exhausted => panic!("r1 = m must succeed on the first try"),
        }
    }

    #[test]
    fn rsl_attack_success_rate_matches_exponent() {
        // toy (m=8, n=12, k=6, r=2, N=8), r1 = 6: per-try success close to
        // 2^(-r (m - r1)) = 1/16 over 200 independent runs
        let ctx = FieldContext::new(8).unwrap();
        let mut rng = StdRng::seed_from_u64(103);
        let runs = 200;
        let mut hits = 0u32;
        for _ in 0..runs {
            let inst = gen_rsl_instance(&mut rng, &ctx, 12, 6, 2, 8);
            if let AttackOutcome::Recovered(sup) =
                rsl_combinatorial_attack(&ctx, &inst, 6, 1, &mut rng)
            {
                assert!(sup.dim() > 0 && sup.is_subspace_of(&inst.hidden_support));
                hits += 1;
            }
        }
        let p = 2f64.powi(-4);
        let sigma = (runs as f64 * p * (1.0 - p)).sqrt();
        assert!(
            (hits as f64 - runs as f64 * p).abs() <= 3.0 * sigma,
            "hits {hits} vs expected {}",
            runs as f64 * p
        );
    }

    #[test]
    fn poly_demo_transcript() {
        let ctx = FieldContext::new(10).unwrap();
        let mut rng = StdRng::seed_from_u64(104);
        let t = rsl_polynomial_regime_demo(&mut rng, &ctx, 14, 4, 2, 20, 20);
        assert_eq!(t.threshold, 11);
        let above: Vec<_> = t.records.iter().filter(|r| r.n_syndromes == 12).collect();
        let ok = above.iter().filter(|r| r.success).count();
        assert!(ok * 100 >= above.len() * 95, "{}/{} above threshold", ok, above.len());
        let text = t.to_text();
        assert!(text.starts_with("threshold = 11"));
        assert!(text.contains("N = 12"));
    }

    #[test]
    fn nhrsd_instance_and_recovery() {
        let ctx = FieldContext::new(9).unwrap();
        let mut rng = StdRng::seed_from_u64(105);
        let inst = gen_nhrsd_instance(&mut rng, &ctx, 6, 4, 1, 1);
        let e13: ExtVector = inst.hidden_error[..6]
            .iter()
            .chain(&inst.hidden_error[10..])
            .copied()
            .collect();
        assert_eq!(rank_weight(&e13, 9), 1);
        assert_eq!(rank_weight(&inst.hidden_error[6..10], 9), 2);
        // with the planted supports as the guess, recovery is immediate
        let v = support(&e13, 9);
        let s2 = support(&inst.hidden_error[6..10], 9);
        let got = nhrsd_try(&ctx, &inst, &v, &s2).expect("planted guess must solve");
        assert_eq!(got, inst.hidden_error);
    }

    #[test]
    fn nhrsd_success_rate_matches_pi_m6() {
        // Pi(q=2, m=6, w1=1, w2=1, r=2, rho=2) = 1/93, measurable over 500
        // single-try runs
        let ctx = FieldContext::new(6).unwrap();
        let pi = crate::estimator::nhrsd_success_probability(2, 6, 1, 1, 2, 2)
            .pi
            .to_f64()
            .unwrap();
        let mut rng = StdRng::seed_from_u64(106);
        let runs = 500;
        let mut hits = 0u32;
        for _ in 0..runs {
            let inst = gen_nhrsd_instance(&mut rng, &ctx, 6, 4, 1, 1);
            if let Some(e) = nhrsd_guess_and_solve(&ctx, &inst, 2, 2, 1, &mut rng) {
                assert_eq!(e, inst.hidden_error, "planted error recovered exactly");
                hits += 1;
            }
        }
        let sigma = (runs as f64 * pi * (1.0 - pi)).sqrt();
        assert!(
            (hits as f64 - runs as f64 * pi).abs() <= 3.0 * sigma,
            "hits {hits} vs expected {:.2}",
            runs as f64 * pi
        );
    }
}

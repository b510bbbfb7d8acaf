//! Microbenchmarks for the hot kernels: field multiplication, the ring
//! product, a full decode, and one estimator point.

use criterion::{criterion_group, criterion_main, Criterion};
use rankpke_core::estimator;
use rankpke_core::f2linalg::{rank_weight, sample_element};
use rankpke_core::field::{FieldContext, FieldElement};
use rankpke_core::gabidulin::AugGabCode;
use rankpke_core::ideal::IdealRing;
use rankpke_core::scheme::{self, ParameterSet, Xof};
use std::hint::black_box;

fn field_mul(c: &mut Criterion) {
    let ctx = FieldContext::new(83).unwrap();
    let a = FieldElement(0x1234_5678_9abc_def0_u128);
    let b = FieldElement(0x0fed_cba9_8765_4321_u128);
    c.bench_function("gf2_83_mul", |bench| {
        bench.iter(|| ctx.mul(black_box(a), black_box(b)))
    });
    c.bench_function("gf2_83_inv", |bench| bench.iter(|| ctx.inv(black_box(a)).unwrap()));
}

fn ring_mul(c: &mut Criterion) {
    let ctx = FieldContext::new(61).unwrap();
    let ring = IdealRing::new(&ctx, 50).unwrap();
    let mut rng = Xof::new("bench", &[1u8; 40]);
    let u: Vec<FieldElement> = (0..50).map(|_| sample_element(&mut rng, 61)).collect();
    let v: Vec<FieldElement> = (0..50).map(|_| sample_element(&mut rng, 61)).collect();
    c.bench_function("ring_mul_50", |bench| {
        bench.iter(|| ring.ring_mul(black_box(&u), black_box(&v)))
    });
}

fn decode(c: &mut Criterion) {
    let p = ParameterSet::by_name("NH-Multi-RQC-AG-128").unwrap();
    let ctx = FieldContext::new(p.m).unwrap();
    let mut rng = Xof::new("bench-decode", &[2u8; 40]);
    let g: Vec<FieldElement> = loop {
        let cand: Vec<FieldElement> = (0..p.n_prime).map(|_| sample_element(&mut rng, p.m)).collect();
        if rank_weight(&cand, p.m) == p.n_prime {
            break cand;
        }
    };
    let code = AugGabCode::new(&ctx, p.gab_len(), p.n_prime, p.k, p.epsilon, g).unwrap();
    let msg: Vec<FieldElement> = (0..p.k).map(|_| sample_element(&mut rng, p.m)).collect();
    let cw = code.encode(&msg);
    c.bench_function("decode_nh_rqc_128_clean", |bench| {
        bench.iter(|| code.decode(black_box(&cw)).unwrap())
    });
}

fn scheme_cycle(c: &mut Criterion) {
    let p = ParameterSet::by_name("NH-Multi-RQC-AG-128").unwrap();
    let kp = scheme::RqcKeyPair::generate(p, &[3u8; 40]).unwrap();
    let mut mx = Xof::new("bench-msg", &[4u8; 40]);
    let msg: Vec<FieldElement> = (0..p.k).map(|_| sample_element(&mut mx, p.m)).collect();
    let ct = scheme::rqc_encrypt(p, &kp.pk, &msg, &[5u8; 40]).unwrap();
    c.bench_function("rqc_encrypt", |bench| {
        bench.iter(|| scheme::rqc_encrypt(p, black_box(&kp.pk), black_box(&msg), &[5u8; 40]).unwrap())
    });
    c.bench_function("rqc_decrypt", |bench| {
        bench.iter(|| scheme::rqc_decrypt(p, &kp.pk, &kp.sk, black_box(&ct)).unwrap())
    });
}

fn estimator_point(c: &mut Criterion) {
    c.bench_function("rsl_comb_estimate", |bench| {
        bench.iter(|| estimator::rsl_combinatorial_bits(61, 100, 50, 7, black_box(150)).unwrap())
    });
    c.bench_function("nhrsd_comb_grid", |bench| {
        bench.iter(|| estimator::nhrsd_combinatorial_bits(61, 50, 50, 7, 5).unwrap())
    });
}

criterion_group!(
    benches,
    field_mul,
    ring_mul,
    decode,
    scheme_cycle,
    estimator_point
);
criterion_main!(benches);

//! The unstructured scheme: matrix keys over a plain random code.
//!
//! Keys: pk = (g, H, S = X + H Y) with H a random n x n matrix and (X, Y)
//! a rank-weight-w pair of n x n1 blocks whose support contains 1.
//! Encryption draws (R1, E, R2) with R1, R2 of shape n2 x n and E of
//! shape n2 x n1, sets U = R1 + R2 H and V = fold(m G) + R2 S + E, and
//! decryption decodes unfold(V - U Y). The Gabidulin code keeps length
//! n1*n2; n is the independent random-code block length.

use super::params::{ParameterSet, Structure};
use super::wire::{
    pack_matrices_col_major, unpack_matrix_col_major, BitReader,
};
use super::xof::Xof;
use super::{SchemeError, SEED_BYTES};
use crate::f2linalg::{rank_weight, sample_element, sample_full_weight, sample_nh_triple, sample_subspace};
use crate::field::{FieldContext, FieldElement};
use crate::gabidulin::AugGabCode;
use crate::ideal::{fold, unfold};
use crate::mat::{ExtMatrix, ExtVector};

#[derive(Clone)]
pub struct UrPublicKey {
    pub seed_pk: [u8; SEED_BYTES],
    pub g: ExtVector,
    pub h: ExtMatrix,
    pub s: ExtMatrix,
}

#[derive(Clone)]
pub struct UrSecretKey {
    pub seed_sk: [u8; SEED_BYTES],
    pub x: ExtMatrix,
    pub y: ExtMatrix,
}

#[derive(Clone)]
pub struct UrKeyPair {
    pub pk: UrPublicKey,
    pub sk: UrSecretKey,
}

#[derive(Clone, PartialEq, Eq)]
pub struct UrCiphertext {
    pub u: ExtMatrix,
    pub v: ExtMatrix,
}

fn ctx_of(p: &ParameterSet) -> FieldContext {
    FieldContext::new(p.m).expect("catalogue degrees always have moduli")
}

fn expand_pk_randomness(p: &ParameterSet, seed_pk: &[u8; SEED_BYTES]) -> (ExtVector, ExtMatrix) {
    let mut gx = Xof::new("g", seed_pk);
    let g = loop {
        let cand: ExtVector = (0..p.n_prime).map(|_| sample_element(&mut gx, p.m)).collect();
        if rank_weight(&cand, p.m) == p.n_prime {
            break cand;
        }
    };
    let mut hx = Xof::new("h", seed_pk);
    let h = ExtMatrix::from_fn(p.n, p.n, |_, _| sample_element(&mut hx, p.m));
    (g, h)
}

fn expand_sk(p: &ParameterSet, seed_sk: &[u8; SEED_BYTES]) -> (ExtMatrix, ExtMatrix) {
    let mut sx = Xof::new("sk", seed_sk);
    let sup = sample_subspace(&mut sx, p.m, p.w, true);
    let xy = sample_full_weight(&mut sx, &sup, p.n, 2 * p.n1).expect("2 n n1 >= w");
    let x = ExtMatrix::from_fn(p.n, p.n1, |r, c| xy[(r, c)]);
    let y = ExtMatrix::from_fn(p.n, p.n1, |r, c| xy[(r, c + p.n1)]);
    (x, y)
}

impl UrKeyPair {
    pub fn generate(p: &ParameterSet, master: &[u8; SEED_BYTES]) -> Result<UrKeyPair, SchemeError> {
        if p.structure != Structure::Random {
            return Err(SchemeError::WrongStructure);
        }
        let seed_pk: [u8; SEED_BYTES] = Xof::new("seed-pk", master).squeeze();
        let seed_sk: [u8; SEED_BYTES] = Xof::new("seed-sk", master).squeeze();
        let ctx = ctx_of(p);
        let (g, h) = expand_pk_randomness(p, &seed_pk);
        let (x, y) = expand_sk(p, &seed_sk);
        let s = x.add(&h.mul(&ctx, &y));
        Ok(UrKeyPair {
            pk: UrPublicKey { seed_pk, g, h, s },
            sk: UrSecretKey { seed_sk, x, y },
        })
    }
}

impl UrPublicKey {
    pub fn to_bytes(&self, p: &ParameterSet) -> Vec<u8> {
        let mut out = self.seed_pk.to_vec();
        out.extend(pack_matrices_col_major(&[&self.s], p.m));
        debug_assert_eq!(out.len(), p.sizes().0);
        out
    }

    pub fn from_bytes(p: &ParameterSet, bytes: &[u8]) -> Result<UrPublicKey, SchemeError> {
        let expected = p.sizes().0;
        if bytes.len() != expected {
            return Err(SchemeError::BadLength { expected, got: bytes.len() });
        }
        let mut seed_pk = [0u8; SEED_BYTES];
        seed_pk.copy_from_slice(&bytes[..SEED_BYTES]);
        let mut r = BitReader::new(&bytes[SEED_BYTES..]);
        let s = unpack_matrix_col_major(&mut r, p.m, p.n, p.n1)
            .ok_or(SchemeError::BadLength { expected, got: bytes.len() })?;
        let (g, h) = expand_pk_randomness(p, &seed_pk);
        Ok(UrPublicKey { seed_pk, g, h, s })
    }
}

impl UrSecretKey {
    pub fn to_bytes(&self) -> Vec<u8> {
        self.seed_sk.to_vec()
    }

    pub fn from_bytes(p: &ParameterSet, bytes: &[u8]) -> Result<UrSecretKey, SchemeError> {
        if bytes.len() != SEED_BYTES {
            return Err(SchemeError::BadLength { expected: SEED_BYTES, got: bytes.len() });
        }
        let mut seed_sk = [0u8; SEED_BYTES];
        seed_sk.copy_from_slice(bytes);
        let (x, y) = expand_sk(p, &seed_sk);
        Ok(UrSecretKey { seed_sk, x, y })
    }
}

impl UrCiphertext {
    pub fn to_bytes(&self, p: &ParameterSet) -> Vec<u8> {
        let out = pack_matrices_col_major(&[&self.u, &self.v], p.m);
        debug_assert_eq!(out.len(), p.sizes().1);
        out
    }

    pub fn from_bytes(p: &ParameterSet, bytes: &[u8]) -> Result<UrCiphertext, SchemeError> {
        let expected = p.sizes().1;
        if bytes.len() != expected {
            return Err(SchemeError::BadLength { expected, got: bytes.len() });
        }
        let mut r = BitReader::new(bytes);
        let u = unpack_matrix_col_major(&mut r, p.m, p.n2, p.n);
        let v = unpack_matrix_col_major(&mut r, p.m, p.n2, p.n1);
        match (u, v) {
            (Some(u), Some(v)) => Ok(UrCiphertext { u, v }),
            _ => Err(SchemeError::BadLength { expected, got: bytes.len() }),
        }
    }
}

pub fn encrypt(
    p: &ParameterSet,
    pk: &UrPublicKey,
    msg: &[FieldElement],
    theta: &[u8; SEED_BYTES],
) -> Result<UrCiphertext, SchemeError> {
    if p.structure != Structure::Random {
        return Err(SchemeError::WrongStructure);
    }
    assert_eq!(msg.len(), p.k, "message must have k field elements");
    let ctx = ctx_of(p);
    let code = AugGabCode::new(&ctx, p.gab_len(), p.n_prime, p.k, p.epsilon, pk.g.clone())
        .expect("catalogue parameters are valid");
    let mut ex = Xof::new("enc", theta);
    let (r1, e, r2) = sample_nh_triple(
        &mut ex,
        p.m,
        p.w1,
        p.w2,
        (p.n2, p.n),
        (p.n2, p.n1),
        (p.n2, p.n),
    );
    let u = r1.add(&r2.mul(&ctx, &pk.h));
    let mg = fold(&code.encode(msg), p.n2).unwrap();
    let v = mg.add(&r2.mul(&ctx, &pk.s)).add(&e);
    Ok(UrCiphertext { u, v })
}

pub fn decrypt(
    p: &ParameterSet,
    pk: &UrPublicKey,
    sk: &UrSecretKey,
    ct: &UrCiphertext,
) -> Result<ExtVector, SchemeError> {
    if p.structure != Structure::Random {
        return Err(SchemeError::WrongStructure);
    }
    let ctx = ctx_of(p);
    let code = AugGabCode::new(&ctx, p.gab_len(), p.n_prime, p.k, p.epsilon, pk.g.clone())
        .expect("catalogue parameters are valid");
    let noisy = unfold(&ct.v.add(&ct.u.mul(&ctx, &sk.y)));
    code.decode(&noisy).map_err(SchemeError::DecryptFailure)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::f2linalg::support;

    fn params() -> &'static ParameterSet {
        ParameterSet::by_name("NH-Multi-UR-AG-128").unwrap()
    }

    fn sample_msg(p: &ParameterSet, seed: &[u8]) -> ExtVector {
        let mut mx = Xof::new("msg", seed);
        (0..p.k).map(|_| sample_element(&mut mx, p.m)).collect()
    }

    #[test]
    fn keygen_invariants() {
        let p = params();
        let kp = UrKeyPair::generate(p, &[30u8; 40]).unwrap();
        let ctx = ctx_of(p);
        assert_eq!(kp.pk.s, kp.sk.x.add(&kp.pk.h.mul(&ctx, &kp.sk.y)));
        let xy: ExtVector = kp
            .sk
            .x
            .entries()
            .iter()
            .chain(kp.sk.y.entries())
            .copied()
            .collect();
        assert_eq!(rank_weight(&xy, p.m), p.w);
        assert!(support(&xy, p.m).contains(FieldElement::ONE));
    }

    #[test]
    fn round_trip_all_ur_sets() {
        for p in super::super::params::catalog() {
            if p.structure != Structure::Random {
                continue;
            }
            let kp = UrKeyPair::generate(p, &[31u8; 40]).unwrap();
            for t in 0..3u8 {
                let msg = sample_msg(p, &[t; 40]);
                let ct = encrypt(p, &kp.pk, &msg, &[t ^ 0xaa; 40]).unwrap();
                assert_eq!(decrypt(p, &kp.pk, &kp.sk, &ct).unwrap(), msg, "{}", p.name);
            }
        }
    }

    #[test]
    fn serialized_sizes_exact() {
        for p in super::super::params::catalog() {
            if p.structure != Structure::Random {
                continue;
            }
            let kp = UrKeyPair::generate(p, &[32u8; 40]).unwrap();
            let msg = sample_msg(p, &[33u8; 40]);
            let ct = encrypt(p, &kp.pk, &msg, &[34u8; 40]).unwrap();
            let (pk_len, ct_len) = p.sizes();
            assert_eq!(kp.pk.to_bytes(p).len(), pk_len, "{}", p.name);
            assert_eq!(ct.to_bytes(p).len(), ct_len, "{}", p.name);
            let pk2 = UrPublicKey::from_bytes(p, &kp.pk.to_bytes(p)).unwrap();
            assert_eq!(pk2.s, kp.pk.s);
            let ct2 = UrCiphertext::from_bytes(p, &ct.to_bytes(p)).unwrap();
            assert!(ct2 == ct);
        }
    }

    #[test]
    fn correctness_identity() {
        // V - U Y = fold(m G) + R2 X - R1 Y + E
        let p = params();
        let ctx = ctx_of(p);
        let kp = UrKeyPair::generate(p, &[35u8; 40]).unwrap();
        let msg = sample_msg(p, &[36u8; 40]);
        let theta = [37u8; 40];
        let ct = encrypt(p, &kp.pk, &msg, &theta).unwrap();
        let mut ex = Xof::new("enc", &theta);
        let (r1, e, r2) = sample_nh_triple(
            &mut ex,
            p.m,
            p.w1,
            p.w2,
            (p.n2, p.n),
            (p.n2, p.n1),
            (p.n2, p.n),
        );
        let code = AugGabCode::new(&ctx, p.gab_len(), p.n_prime, p.k, p.epsilon, kp.pk.g.clone()).unwrap();
        let mg = fold(&code.encode(&msg), p.n2).unwrap();
        let lhs = ct.v.add(&ct.u.mul(&ctx, &kp.sk.y));
        let rhs = mg
            .add(&r2.mul(&ctx, &kp.sk.x))
            .add(&r1.mul(&ctx, &kp.sk.y))
            .add(&e);
        assert_eq!(lhs, rhs);
        let err = lhs.add(&mg);
        assert!(rank_weight(err.entries(), p.m) <= p.delta());
        // reduction shape: each row of (R1, E, R2) gives the syndromes
        // (U row, (V - fold(mG)) row) of the [2n + n1, n] code
        for r in 0..p.n2 {
            let u_row: ExtVector = (0..p.n).map(|c| ct.u[(r, c)]).collect();
            let want: ExtVector = {
                let hrow = r2
                    .row(r)
                    .to_vec();
                let hr = kp.pk.h.vec_mul(&ctx, &hrow);
                crate::mat::vec_add(r1.row(r), &hr)
            };
            assert_eq!(u_row, want);
        }
    }

    #[test]
    fn tampered_ciphertext_never_panics() {
        let p = params();
        let kp = UrKeyPair::generate(p, &[38u8; 40]).unwrap();
        let msg = sample_msg(p, &[39u8; 40]);
        let mut ct = encrypt(p, &kp.pk, &msg, &[40u8; 40]).unwrap();
        ct.v[(1, 1)] = FieldElement(ct.v[(1, 1)].0 ^ 0b1001);
        match decrypt(p, &kp.pk, &kp.sk, &ct) {
            Ok(got) => assert_ne!(got, msg),
            Err(SchemeError::DecryptFailure(_)) => {}
            Err(e) => panic!("unexpected error {e}"),
        }
    }
}

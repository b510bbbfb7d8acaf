//! The ideal-structured scheme: vector keys over GF(2^m)[X]/(P).
//!
//! Keys: pk = (g, h, s = x + h y), sk = (x, y) with (x, y) of rank weight
//! w and 1 in its support. A ciphertext encrypts k field elements as
//! U = R1 + h R2, V = fold(m G) + s R2 + E, with (R1, E, R2) drawn from
//! the shared-support set of weights (w1, w1 + w2). Decryption decodes
//! unfold(V - y U) with the augmented Gabidulin code on points g.

use super::params::{ParameterSet, Structure};
use super::wire::{
    pack_matrices_col_major, pack_vector, unpack_matrix_col_major, unpack_vector, BitReader,
};
use super::xof::Xof;
use super::{SchemeError, SEED_BYTES};
use crate::f2linalg::{rank_weight, sample_element, sample_full_weight, sample_nh_triple, sample_subspace};
use crate::field::{FieldContext, FieldElement};
use crate::gabidulin::AugGabCode;
use crate::ideal::{fold, unfold, IdealRing};
use crate::mat::{ExtMatrix, ExtVector};

#[derive(Clone)]
pub struct RqcPublicKey {
    pub seed_pk: [u8; SEED_BYTES],
    pub g: ExtVector,
    pub h: ExtVector,
    pub s: ExtVector,
}

#[derive(Clone)]
pub struct RqcSecretKey {
    pub seed_sk: [u8; SEED_BYTES],
    pub x: ExtVector,
    pub y: ExtVector,
}

#[derive(Clone)]
pub struct RqcKeyPair {
    pub pk: RqcPublicKey,
    pub sk: RqcSecretKey,
}

#[derive(Clone, PartialEq, Eq)]
pub struct RqcCiphertext {
    pub u: ExtMatrix,
    pub v: ExtMatrix,
}

fn ctx_of(p: &ParameterSet) -> FieldContext {
    FieldContext::new(p.m).expect("catalogue degrees always have moduli")
}

/// Full-weight vector of independent evaluation points, rejection sampled
/// from the stream.
fn expand_points(rng: &mut Xof, m: u32, n_prime: usize) -> ExtVector {
    loop {
        let g: ExtVector = (0..n_prime).map(|_| sample_element(rng, m)).collect();
        if rank_weight(&g, m) == n_prime {
            return g;
        }
    }
}

fn expand_pk_randomness(p: &ParameterSet, seed_pk: &[u8; SEED_BYTES]) -> (ExtVector, ExtVector) {
    let mut gx = Xof::new("g", seed_pk);
    let g = expand_points(&mut gx, p.m, p.n_prime);
    let mut hx = Xof::new("h", seed_pk);
    let h = (0..p.n2).map(|_| sample_element(&mut hx, p.m)).collect();
    (g, h)
}

fn expand_sk(p: &ParameterSet, seed_sk: &[u8; SEED_BYTES]) -> (ExtVector, ExtVector) {
    let mut sx = Xof::new("sk", seed_sk);
    let sup = sample_subspace(&mut sx, p.m, p.w, true);
    let xy = sample_full_weight(&mut sx, &sup, 1, 2 * p.n2).expect("2 n2 >= w");
    let xy = xy.entries();
    (xy[..p.n2].to_vec(), xy[p.n2..].to_vec())
}

impl RqcKeyPair {
    /// Deterministic key generation from a 40-byte master seed.
    pub fn generate(p: &ParameterSet, master: &[u8; SEED_BYTES]) -> Result<RqcKeyPair, SchemeError> {
        if p.structure != Structure::Ideal {
            return Err(SchemeError::WrongStructure);
        }
        let seed_pk: [u8; SEED_BYTES] = Xof::new("seed-pk", master).squeeze();
        let seed_sk: [u8; SEED_BYTES] = Xof::new("seed-sk", master).squeeze();
        let ctx = ctx_of(p);
        let ring = IdealRing::new(&ctx, p.n2).expect("catalogue ring degrees have moduli");
        let (g, h) = expand_pk_randomness(p, &seed_pk);
        let (x, y) = expand_sk(p, &seed_sk);
        let s = crate::mat::vec_add(&x, &ring.ring_mul(&h, &y));
        Ok(RqcKeyPair {
            pk: RqcPublicKey { seed_pk, g, h, s },
            sk: RqcSecretKey { seed_sk, x, y },
        })
    }
}

impl RqcPublicKey {
    pub fn to_bytes(&self, p: &ParameterSet) -> Vec<u8> {
        let mut out = self.seed_pk.to_vec();
        out.extend(pack_vector(&self.s, p.m));
        debug_assert_eq!(out.len(), p.sizes().0);
        out
    }

    pub fn from_bytes(p: &ParameterSet, bytes: &[u8]) -> Result<RqcPublicKey, SchemeError> {
        let expected = p.sizes().0;
        if bytes.len() != expected {
            return Err(SchemeError::BadLength { expected, got: bytes.len() });
        }
        let mut seed_pk = [0u8; SEED_BYTES];
        seed_pk.copy_from_slice(&bytes[..SEED_BYTES]);
        let s = unpack_vector(&bytes[SEED_BYTES..], p.m, p.n2)
            .ok_or(SchemeError::BadLength { expected, got: bytes.len() })?;
        let (g, h) = expand_pk_randomness(p, &seed_pk);
        Ok(RqcPublicKey { seed_pk, g, h, s })
    }
}

impl RqcSecretKey {
    pub fn to_bytes(&self) -> Vec<u8> {
        self.seed_sk.to_vec()
    }

    pub fn from_bytes(p: &ParameterSet, bytes: &[u8]) -> Result<RqcSecretKey, SchemeError> {
        if bytes.len() != SEED_BYTES {
            return Err(SchemeError::BadLength { expected: SEED_BYTES, got: bytes.len() });
        }
        let mut seed_sk = [0u8; SEED_BYTES];
        seed_sk.copy_from_slice(bytes);
        let (x, y) = expand_sk(p, &seed_sk);
        Ok(RqcSecretKey { seed_sk, x, y })
    }
}

impl RqcCiphertext {
    pub fn to_bytes(&self, p: &ParameterSet) -> Vec<u8> {
        let out = pack_matrices_col_major(&[&self.u, &self.v], p.m);
        debug_assert_eq!(out.len(), p.sizes().1);
        out
    }

    pub fn from_bytes(p: &ParameterSet, bytes: &[u8]) -> Result<RqcCiphertext, SchemeError> {
        let expected = p.sizes().1;
        if bytes.len() != expected {
            return Err(SchemeError::BadLength { expected, got: bytes.len() });
        }
        let mut r = BitReader::new(bytes);
        let u = unpack_matrix_col_major(&mut r, p.m, p.n2, p.n1);
        let v = unpack_matrix_col_major(&mut r, p.m, p.n2, p.n1);
        match (u, v) {
            (Some(u), Some(v)) => Ok(RqcCiphertext { u, v }),
            _ => Err(SchemeError::BadLength { expected, got: bytes.len() }),
        }
    }
}

/// Deterministic encryption of k field elements under randomness theta.
pub fn encrypt(
    p: &ParameterSet,
    pk: &RqcPublicKey,
    msg: &[FieldElement],
    theta: &[u8; SEED_BYTES],
) -> Result<RqcCiphertext, SchemeError> {
    if p.structure != Structure::Ideal {
        return Err(SchemeError::WrongStructure);
    }
    assert_eq!(msg.len(), p.k, "message must have k field elements");
    let ctx = ctx_of(p);
    let ring = IdealRing::new(&ctx, p.n2).unwrap();
    let code = AugGabCode::new(&ctx, p.gab_len(), p.n_prime, p.k, p.epsilon, pk.g.clone())
        .expect("catalogue parameters are valid");
    let mut ex = Xof::new("enc", theta);
    let sh = (p.n2, p.n1);
    let (r1, e, r2) = sample_nh_triple(&mut ex, p.m, p.w1, p.w2, sh, sh, sh);
    let u = r1.add(&ring.vec_dot_matrix(&pk.h, &r2).unwrap());
    let mg = fold(&code.encode(msg), p.n2).unwrap();
    let v = mg.add(&ring.vec_dot_matrix(&pk.s, &r2).unwrap()).add(&e);
    Ok(RqcCiphertext { u, v })
}

/// Decodes unfold(V - y U); failures surface as DecryptFailure.
pub fn decrypt(
    p: &ParameterSet,
    pk: &RqcPublicKey,
    sk: &RqcSecretKey,
    ct: &RqcCiphertext,
) -> Result<ExtVector, SchemeError> {
    if p.structure != Structure::Ideal {
        return Err(SchemeError::WrongStructure);
    }
    let ctx = ctx_of(p);
    let ring = IdealRing::new(&ctx, p.n2).unwrap();
    let code = AugGabCode::new(&ctx, p.gab_len(), p.n_prime, p.k, p.epsilon, pk.g.clone())
        .expect("catalogue parameters are valid");
    let yu = ring.vec_dot_matrix(&sk.y, &ct.u).unwrap();
    let noisy = unfold(&ct.v.add(&yu));
    code.decode(&noisy).map_err(SchemeError::DecryptFailure)
}

//! The two encryption schemes and everything around them: the parameter
//! catalogue, deterministic seed expansion, bit-exact wire formats and
//! known-answer tests.
//!
//! Both schemes encrypt a message of k field elements with an augmented
//! Gabidulin code of length n1*n2 and hide it behind a random code: an
//! ideal [2n2, n2] code for the structured variant, a plain random [2n, n]
//! code for the unstructured one. Non-homogeneous variants (w2 > 0) give
//! the middle error block a larger support containing the shared one.

mod kat;
mod params;
mod rqc;
mod ur;
mod wire;
mod xof;

pub use kat::{generate_kat, verify_kat, KatError};
pub use params::{catalog, ParameterSet, Structure};
pub use rqc::{
    decrypt as rqc_decrypt, encrypt as rqc_encrypt, RqcCiphertext, RqcKeyPair, RqcPublicKey,
    RqcSecretKey,
};
pub use ur::{
    decrypt as ur_decrypt, encrypt as ur_encrypt, UrCiphertext, UrKeyPair, UrPublicKey,
    UrSecretKey,
};
pub use wire::{pack_matrices_col_major, pack_vector, unpack_vector, BitReader, BitWriter};
pub use xof::Xof;

pub const SEED_BYTES: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SchemeError {
    WrongStructure,
    BadLength { expected: usize, got: usize },
    DecryptFailure(crate::gabidulin::DecodeFailure),
}

impl std::fmt::Display for SchemeError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SchemeError::WrongStructure => write!(f, "parameter set has the wrong structure"),
            SchemeError::BadLength { expected, got } => {
                write!(f, "bad serialized length: expected {expected}, got {got}")
            }
            SchemeError::DecryptFailure(d) => write!(f, "decryption failed: {d}"),
        }
    }
}

impl std::error::Error for SchemeError {}

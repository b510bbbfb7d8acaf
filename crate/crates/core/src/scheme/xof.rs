//! Deterministic expansion of seeds into sampling streams.
//!
//! Every random object in the schemes is derived from a 40-byte seed
//! through SHAKE-256 with a short domain-separation label; the label is
//! length-prefixed so distinct (label, seed) pairs never collide. The
//! known-answer tests pin this choice.

use rand::{CryptoRng, Error, RngCore};
use sha3::digest::{ExtendableOutput, Update, XofReader};
use sha3::Shake256;

pub struct Xof {
    reader: sha3::Shake256Reader,
}

impl Xof {
    pub fn new(label: &str, seed: &[u8]) -> Xof {
        debug_assert!(label.len() < 256);
        let mut h = Shake256::default();
        h.update(&[label.len() as u8]);
        h.update(label.as_bytes());
        h.update(seed);
        Xof {
            reader: h.finalize_xof(),
        }
    }

    pub fn squeeze<const N: usize>(&mut self) -> [u8; N] {
        let mut out = [0u8; N];
        self.reader.read(&mut out);
        out
    }
}

impl RngCore for Xof {
    fn next_u32(&mut self) -> u32 {
        let mut b = [0u8; 4];
        self.reader.read(&mut b);
        u32::from_le_bytes(b)
    }

    fn next_u64(&mut self) -> u64 {
        let mut b = [0u8; 8];
        self.reader.read(&mut b);
        u64::from_le_bytes(b)
    }

    fn fill_bytes(&mut self, dest: &mut [u8]) {
        self.reader.read(dest);
    }

    fn try_fill_bytes(&mut self, dest: &mut [u8]) -> Result<(), Error> {
        self.reader.read(dest);
        Ok(())
    }
}

impl CryptoRng for Xof {}

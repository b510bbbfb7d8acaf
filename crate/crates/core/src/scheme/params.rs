//! The shipped parameter catalogue and its derived quantities.

use crate::field::builtin_modulus;
use crate::gabidulin;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Structure {
    /// Ideal [2n2, n2] outer code, vector keys (Multi-RQC-AG family).
    Ideal,
    /// Unstructured random [2n, n] outer code, matrix keys (Multi-UR-AG).
    Random,
}

/// One named parameter set plus its derived quantities.
#[derive(Debug, Clone)]
pub struct ParameterSet {
    pub name: &'static str,
    pub structure: Structure,
    pub security_level: u32,
    pub m: u32,
    pub n_prime: usize,
    /// Random-code block length; unstructured sets only (0 for ideal).
    pub n: usize,
    pub n1: usize,
    pub n2: usize,
    pub k: usize,
    pub epsilon: usize,
    pub w: usize,
    pub w1: usize,
    pub w2: usize,
    /// Failure exponent reported for the set (log2 of the modeled DFR).
    pub dfr_claim: i32,
}

pub const CATALOG: [ParameterSet; 8] = [
    ParameterSet {
        name: "Multi-RQC-AG-128",
        structure: Structure::Ideal,
        security_level: 128,
        m: 83,
        n_prime: 82,
        n: 0,
        n1: 5,
        n2: 38,
        k: 2,
        epsilon: 74,
        w: 7,
        w1: 11,
        w2: 0,
        dfr_claim: -138,
    },
    ParameterSet {
        name: "NH-Multi-RQC-AG-128",
        structure: Structure::Ideal,
        security_level: 128,
        m: 61,
        n_prime: 60,
        n: 0,
        n1: 3,
        n2: 50,
        k: 3,
        epsilon: 51,
        w: 7,
        w1: 7,
        w2: 5,
        dfr_claim: -158,
    },
    ParameterSet {
        name: "Multi-RQC-AG-192",
        structure: Structure::Ideal,
        security_level: 192,
        m: 113,
        n_prime: 112,
        n: 0,
        n1: 4,
        n2: 60,
        k: 2,
        epsilon: 98,
        w: 8,
        w1: 13,
        w2: 0,
        dfr_claim: -215,
    },
    ParameterSet {
        name: "NH-Multi-RQC-AG-192",
        structure: Structure::Ideal,
        security_level: 192,
        m: 79,
        n_prime: 78,
        n: 0,
        n1: 2,
        n2: 95,
        k: 5,
        epsilon: 65,
        w: 8,
        w1: 8,
        w2: 5,
        dfr_claim: -238,
    },
    ParameterSet {
        name: "Multi-UR-AG-128",
        structure: Structure::Random,
        security_level: 128,
        m: 97,
        n_prime: 96,
        n: 24,
        n1: 14,
        n2: 15,
        k: 3,
        epsilon: 83,
        w: 8,
        w1: 11,
        w2: 0,
        dfr_claim: -190,
    },
    ParameterSet {
        name: "NH-Multi-UR-AG-128",
        structure: Structure::Random,
        security_level: 128,
        m: 73,
        n_prime: 72,
        n: 22,
        n1: 13,
        n2: 14,
        k: 2,
        epsilon: 66,
        w: 8,
        w1: 8,
        w2: 4,
        dfr_claim: -133,
    },
    ParameterSet {
        name: "Multi-UR-AG-192",
        structure: Structure::Random,
        security_level: 192,
        m: 127,
        n_prime: 126,
        n: 35,
        n1: 15,
        n2: 16,
        k: 3,
        epsilon: 93,
        w: 9,
        w1: 12,
        w2: 0,
        dfr_claim: -350,
    },
    ParameterSet {
        name: "NH-Multi-UR-AG-192",
        structure: Structure::Random,
        security_level: 192,
        m: 97,
        n_prime: 96,
        n: 30,
        n1: 14,
        n2: 14,
        k: 3,
        epsilon: 77,
        w: 9,
        w1: 9,
        w2: 4,
        dfr_claim: -214,
    },
];

/// All shipped parameter sets, validated.
pub fn catalog() -> &'static [ParameterSet] {
    for p in &CATALOG {
        p.validate();
    }
    &CATALOG
}

impl ParameterSet {
    pub fn by_name(name: &str) -> Option<&'static ParameterSet> {
        catalog().iter().find(|p| p.name.eq_ignore_ascii_case(name))
    }

    /// Decodable error weight: w*w1 + w2 (w2 = 0 in the homogeneous case).
    pub fn delta(&self) -> usize {
        self.w * self.w1 + self.w2
    }

    /// Length of the augmented Gabidulin code.
    pub fn gab_len(&self) -> usize {
        self.n1 * self.n2
    }

    /// Number of zero-padded coordinates.
    pub fn tail_len(&self) -> usize {
        self.gab_len() - self.n_prime
    }

    pub fn is_homogeneous(&self) -> bool {
        self.w2 == 0
    }

    /// (public key, ciphertext) sizes in bytes, exactly as serialized.
    pub fn sizes(&self) -> (usize, usize) {
        let m = self.m as usize;
        match self.structure {
            Structure::Ideal => (
                40 + (self.n2 * m).div_ceil(8),
                (2 * self.n1 * self.n2 * m).div_ceil(8),
            ),
            Structure::Random => (
                40 + (self.n * self.n1 * m).div_ceil(8),
                (m * (self.n * self.n2 + self.n1 * self.n2)).div_ceil(8),
            ),
        }
    }

    /// Message length in bytes (k field elements, bit packed).
    pub fn msg_bytes(&self) -> usize {
        (self.k * self.m as usize).div_ceil(8)
    }

    /// Modeled log2 decryption failure rate.
    pub fn dfr_bits(&self) -> Option<f64> {
        gabidulin::dfr_bits(2, self.delta(), self.tail_len(), self.epsilon)
    }

    /// Checks every structural invariant; panics with a description if one
    /// fails (the catalogue is static data, so this is a load-time check).
    pub fn validate(&self) {
        let cap = (self.n_prime - self.k + self.epsilon) / 2;
        assert_eq!(
            self.delta(),
            cap,
            "{}: delta = w*w1+w2 must equal floor((n'-k+eps)/2)",
            self.name
        );
        assert!(
            self.k <= self.n_prime
                && self.n_prime < self.m as usize
                && (self.m as usize) < self.gab_len(),
            "{}: need k <= n' < m < n1*n2",
            self.name
        );
        assert!(
            self.epsilon >= 1 && self.epsilon <= self.tail_len().min(self.n_prime - self.k),
            "{}: erasure dimension out of range",
            self.name
        );
        assert!(builtin_modulus(self.m).is_some(), "{}: no field modulus", self.name);
        match self.structure {
            Structure::Ideal => {
                assert!(
                    builtin_modulus(self.n2 as u32).is_some(),
                    "{}: no ring modulus",
                    self.name
                );
                assert_eq!(self.n, 0, "{}: ideal sets have no block length n", self.name);
            }
            Structure::Random => {
                assert!(self.n > 0, "{}: unstructured sets need n", self.name);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_validates_and_names_resolve() {
        assert_eq!(catalog().len(), 8);
        assert!(ParameterSet::by_name("multi-rqc-ag-128").is_some());
        assert!(ParameterSet::by_name("NH-Multi-UR-AG-192").is_some());
        assert!(ParameterSet::by_name("no-such-set").is_none());
    }

    #[test]
    fn capacity_identity_all_sets() {
        for p in catalog() {
            assert_eq!(p.delta(), (p.n_prime - p.k + p.epsilon) / 2, "{}", p.name);
        }
        // the values themselves
        let deltas: Vec<usize> = catalog().iter().map(|p| p.delta()).collect();
        assert_eq!(deltas, vec![77, 54, 104, 69, 88, 68, 108, 85]);
    }

    #[test]
    fn sizes_match_closed_forms() {
        let expect = [
            ("Multi-RQC-AG-128", 435, 3943),
            ("NH-Multi-RQC-AG-128", 422, 2288),
            ("Multi-RQC-AG-192", 888, 6780),
            ("NH-Multi-RQC-AG-192", 979, 3753),
            ("Multi-UR-AG-128", 4114, 6912),
            ("NH-Multi-UR-AG-128", 2650, 4472),
            ("Multi-UR-AG-192", 8375, 12700),
            ("NH-Multi-UR-AG-192", 5133, 7469),
        ];
        for (name, pk, ct) in expect {
            let p = ParameterSet::by_name(name).unwrap();
            assert_eq!(p.sizes(), (pk, ct), "{name}");
        }
    }

    #[test]
    fn dfr_claims_within_three_bits() {
        for p in catalog() {
            let got = p.dfr_bits().expect("eps >= 1 so the model is finite");
            assert!(
                (got - p.dfr_claim as f64).abs() <= 3.0,
                "{}: model {got:.1} vs claim {}",
                p.name,
                p.dfr_claim
            );
        }
    }
}

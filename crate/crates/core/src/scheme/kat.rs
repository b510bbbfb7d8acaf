//! Known-answer tests: deterministic generation and re-verification.
//!
//! A KAT file is line oriented: a `set = <name>` header, then one record
//! per index with hex fields seed, pk, sk, msg, theta, ct, decrypted. All
//! randomness for record i is derived from the set name and i, so two
//! builds of the library must produce byte-identical files.

use super::params::{ParameterSet, Structure};
use super::wire::{pack_vector, unpack_vector};
use super::xof::Xof;
use super::{rqc, ur, SchemeError, SEED_BYTES};
use crate::f2linalg::sample_element;
use crate::mat::ExtVector;
use std::fmt::Write as _;

#[derive(Debug)]
pub enum KatError {
    Parse(String),
    UnknownSet(String),
    Mismatch { count: usize, field: &'static str },
    Scheme(SchemeError),
}

impl std::fmt::Display for KatError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KatError::Parse(s) => write!(f, "malformed KAT file: {s}"),
            KatError::UnknownSet(s) => write!(f, "unknown parameter set {s}"),
            KatError::Mismatch { count, field } => {
                write!(f, "record {count}: field {field} does not match")
            }
            KatError::Scheme(e) => write!(f, "scheme error: {e}"),
        }
    }
}

impl std::error::Error for KatError {}

struct Record {
    seed: [u8; SEED_BYTES],
    msg: ExtVector,
    theta: [u8; SEED_BYTES],
}

fn record_inputs(p: &ParameterSet, i: u32) -> Record {
    let mut tag = p.name.as_bytes().to_vec();
    tag.extend_from_slice(&i.to_le_bytes());
    let seed: [u8; SEED_BYTES] = Xof::new("kat-seed", &tag).squeeze();
    let theta: [u8; SEED_BYTES] = Xof::new("kat-theta", &tag).squeeze();
    let mut mx = Xof::new("kat-msg", &tag);
    let msg = (0..p.k).map(|_| sample_element(&mut mx, p.m)).collect();
    Record { seed, msg, theta }
}

struct Computed {
    pk: Vec<u8>,
    sk: Vec<u8>,
    ct: Vec<u8>,
    decrypted: Vec<u8>,
}

fn compute(p: &ParameterSet, rec: &Record) -> Result<Computed, SchemeError> {
    match p.structure {
        Structure::Ideal => {
            let kp = rqc::RqcKeyPair::generate(p, &rec.seed)?;
            let ct = rqc::encrypt(p, &kp.pk, &rec.msg, &rec.theta)?;
            let dec = rqc::decrypt(p, &kp.pk, &kp.sk, &ct)?;
            Ok(Computed {
                pk: kp.pk.to_bytes(p),
                sk: kp.sk.to_bytes(),
                ct: ct.to_bytes(p),
                decrypted: pack_vector(&dec, p.m),
            })
        }
        Structure::Random => {
            let kp = ur::UrKeyPair::generate(p, &rec.seed)?;
            let ct = ur::encrypt(p, &kp.pk, &rec.msg, &rec.theta)?;
            let dec = ur::decrypt(p, &kp.pk, &kp.sk, &ct)?;
            Ok(Computed {
                pk: kp.pk.to_bytes(p),
                sk: kp.sk.to_bytes(),
                ct: ct.to_bytes(p),
                decrypted: pack_vector(&dec, p.m),
            })
        }
    }
}

/// Deterministic KAT text for one parameter set.
pub fn generate_kat(p: &ParameterSet, records: u32) -> Result<String, KatError> {
    let mut out = String::new();
    writeln!(out, "set = {}", p.name).unwrap();
    writeln!(out).unwrap();
    for i in 0..records {
        let rec = record_inputs(p, i);
        let comp = compute(p, &rec).map_err(KatError::Scheme)?;
        writeln!(out, "count = {i}").unwrap();
        writeln!(out, "seed = {}", hex::encode(rec.seed)).unwrap();
        writeln!(out, "pk = {}", hex::encode(&comp.pk)).unwrap();
        writeln!(out, "sk = {}", hex::encode(&comp.sk)).unwrap();
        writeln!(out, "msg = {}", hex::encode(pack_vector(&rec.msg, p.m))).unwrap();
        writeln!(out, "theta = {}", hex::encode(rec.theta)).unwrap();
        writeln!(out, "ct = {}", hex::encode(&comp.ct)).unwrap();
        writeln!(out, "decrypted = {}", hex::encode(&comp.decrypted)).unwrap();
        writeln!(out).unwrap();
    }
    Ok(out)
}

/// Recomputes every record of a KAT file and compares byte for byte.
/// Returns the number of verified records.
pub fn verify_kat(text: &str) -> Result<usize, KatError> {
    let mut params: Option<&ParameterSet> = None;
    let mut fields: std::collections::HashMap<String, String> = Default::default();
    let mut verified = 0usize;

    let check = |p: &ParameterSet,
                     fields: &std::collections::HashMap<String, String>|
     -> Result<(), KatError> {
        let count: usize = fields
            .get("count")
            .and_then(|c| c.parse().ok())
            .ok_or_else(|| KatError::Parse("missing count".into()))?;
        let get = |k: &str| -> Result<Vec<u8>, KatError> {
            let h = fields
                .get(k)
                .ok_or_else(|| KatError::Parse(format!("record {count}: missing {k}")))?;
            hex::decode(h).map_err(|_| KatError::Parse(format!("record {count}: bad hex in {k}")))
        };
        let seed_v = get("seed")?;
        let seed: [u8; SEED_BYTES] = seed_v
            .try_into()
            .map_err(|_| KatError::Parse(format!("record {count}: seed must be 40 bytes")))?;
        let theta: [u8; SEED_BYTES] = get("theta")?
            .try_into()
            .map_err(|_| KatError::Parse(format!("record {count}: theta must be 40 bytes")))?;
        let msg_bytes = get("msg")?;
        let msg = unpack_vector(&msg_bytes, p.m, p.k)
            .ok_or_else(|| KatError::Parse(format!("record {count}: msg too short")))?;
        let comp = compute(p, &Record { seed, msg, theta }).map_err(KatError::Scheme)?;
        for (field, got) in [
            ("pk", &comp.pk),
            ("sk", &comp.sk),
            ("ct", &comp.ct),
            ("decrypted", &comp.decrypted),
        ] {
            if get(field)? != *got {
                return Err(KatError::Mismatch { count, field });
            }
        }
        Ok(())
    };

    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            if !fields.is_empty() {
                let p = params.ok_or_else(|| KatError::Parse("record before set header".into()))?;
                check(p, &fields)?;
                verified += 1;
                fields.clear();
            }
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(KatError::Parse(format!("bad line: {line}")));
        };
        let (key, value) = (key.trim(), value.trim());
        if key == "set" {
            params = Some(
                ParameterSet::by_name(value).ok_or_else(|| KatError::UnknownSet(value.into()))?,
            );
        } else {
            fields.insert(key.to_string(), value.to_string());
        }
    }
    if !fields.is_empty() {
        let p = params.ok_or_else(|| KatError::Parse("record before set header".into()))?;
        check(p, &fields)?;
        verified += 1;
    }
    Ok(verified)
}

#[cfg(test)]
mod tests {
    use super::*;
    use super::super::params::catalog;

    #[test]
    fn generate_then_verify_round_trip() {
        // one light set per structure keeps this quick
        for name in ["NH-Multi-RQC-AG-128", "NH-Multi-UR-AG-128"] {
            let p = ParameterSet::by_name(name).unwrap();
            let text = generate_kat(p, 2).unwrap();
            assert_eq!(verify_kat(&text).unwrap(), 2, "{name}");
        }
    }

    #[test]
    fn generation_is_reproducible() {
        let p = ParameterSet::by_name("NH-Multi-RQC-AG-128").unwrap();
        assert_eq!(generate_kat(p, 1).unwrap(), generate_kat(p, 1).unwrap());
    }

    #[test]
    fn verify_detects_corruption() {
        let p = ParameterSet::by_name("NH-Multi-RQC-AG-128").unwrap();
        let text = generate_kat(p, 1).unwrap();
        // flip one hex digit of the ciphertext
        let idx = text.find("ct = ").unwrap() + 5;
        let mut bad = text.clone();
        let ch = bad.as_bytes()[idx];
        let repl = if ch == b'0' { '1' } else { '0' };
        bad.replace_range(idx..idx + 1, &repl.to_string());
        match verify_kat(&bad) {
            Err(KatError::Mismatch { field: "ct", .. }) => {}
            other => panic!("expected ct mismatch, got {other:?}"),
        }
    }

    #[test]
    fn decrypted_always_equals_msg_in_generated_kats() {
        for p in catalog() {
            if p.security_level != 128 {
                continue;
            }
            let text = generate_kat(p, 1).unwrap();
            let msg_line = text.lines().find(|l| l.starts_with("msg = ")).unwrap();
            let dec_line = text.lines().find(|l| l.starts_with("decrypted = ")).unwrap();
            assert_eq!(&msg_line[6..], &dec_line[12..], "{}", p.name);
        }
    }
}

//! Command-line front door: parameter inspection, key generation and
//! encryption, DFR evaluation, attack-cost estimation, figure data and
//! toy attack simulations.
//!
//! Exit codes: 0 success, 1 domain failure (e.g. decryption failure or an
//! exhausted attack), 2 usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use rankpke_core::estimator as est;
use rankpke_core::field::FieldContext;
use rankpke_core::gabidulin;
use rankpke_core::labattack;
use rankpke_core::scheme::{self, ParameterSet, Structure, Xof, SEED_BYTES};
use rand::RngCore;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "rankpke", version, about = "rank-metric encryption and cryptanalysis workbench")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect the parameter catalogue.
    Params {
        #[command(subcommand)]
        action: ParamsAction,
    },
    /// Generate a key pair.
    Keygen {
        #[arg(long)]
        params: String,
        /// Hex seed, at most 40 bytes, zero padded; fresh entropy if absent.
        #[arg(long)]
        seed: Option<String>,
        #[arg(long)]
        out_pk: PathBuf,
        #[arg(long)]
        out_sk: PathBuf,
    },
    /// Encrypt a message (given or derived from the seed).
    Encrypt {
        #[arg(long)]
        params: String,
        #[arg(long)]
        pk: PathBuf,
        /// Hex message of exactly msg-bytes length; derived from the seed
        /// when absent.
        #[arg(long)]
        msg: Option<String>,
        #[arg(long)]
        seed: Option<String>,
        #[arg(long)]
        out_ct: PathBuf,
        /// Where to store the (possibly derived) message.
        #[arg(long)]
        out_msg: Option<PathBuf>,
    },
    /// Decrypt a ciphertext; prints the message as hex.
    Decrypt {
        #[arg(long)]
        params: String,
        #[arg(long)]
        pk: PathBuf,
        #[arg(long)]
        sk: PathBuf,
        #[arg(long)]
        ct: PathBuf,
        #[arg(long)]
        out_msg: Option<PathBuf>,
    },
    /// Public-key and ciphertext sizes.
    Sizes {
        #[arg(long)]
        params: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Decoding-failure-rate model, optionally cross-checked empirically.
    Dfr {
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        delta: Option<usize>,
        #[arg(long)]
        tail: Option<usize>,
        #[arg(long)]
        epsilon: Option<usize>,
        /// Monte-Carlo trial count (omit for model only).
        #[arg(long)]
        monte_carlo: Option<u64>,
        #[arg(long)]
        seed: Option<String>,
        #[arg(long, default_value = "1")]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Attack-cost estimators.
    Estimate {
        /// Output form (usable after the attack subcommand too).
        #[arg(long, value_enum, default_value = "text", global = true)]
        format: Format,
        #[command(subcommand)]
        attack: EstimateCmd,
    },
    /// Attack-cost series over the syndrome count, as CSV.
    Figure3 {
        #[arg(long, default_value = "61")]
        m: usize,
        #[arg(long, default_value = "100")]
        n: usize,
        #[arg(long, default_value = "50")]
        k: usize,
        #[arg(long, default_value = "7")]
        r: usize,
        #[arg(long, default_value = "2.81")]
        omega: f64,
        #[arg(long, default_value = "44")]
        n_min: u64,
        #[arg(long, default_value = "300")]
        n_max: u64,
        #[arg(long, default_value = "6")]
        step: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Toy executable attacks on planted instances.
    AttackSim {
        #[command(subcommand)]
        sim: AttackSimCmd,
    },
    /// Known-answer tests.
    Kat {
        #[command(subcommand)]
        action: KatAction,
    },
}

#[derive(Subcommand)]
enum ParamsAction {
    /// All shipped sets with their sizes.
    List {
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Every column of one set.
    Show {
        #[arg(long)]
        params: String,
    },
}

#[derive(Args)]
struct RsdArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    w: usize,
}

#[derive(Args)]
struct NhArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    n1: usize,
    #[arg(long)]
    w1: usize,
    #[arg(long)]
    w2: usize,
}

#[derive(Subcommand)]
enum EstimateCmd {
    /// Combinatorial RSD bound.
    RsdComb(RsdArgs),
    /// MaxMinors RSD attack.
    RsdMm {
        #[command(flatten)]
        args: RsdArgs,
        #[arg(long, default_value = "2.81")]
        omega: f64,
    },
    /// Combinatorial NHRSD attack.
    NhrsdComb {
        #[command(flatten)]
        args: NhArgs,
        /// Add a 3 log2(system width) surcharge for the soft-O factor.
        #[arg(long)]
        pessimistic: bool,
    },
    /// MaxMinors adapted to NHRSD.
    NhrsdMm {
        #[command(flatten)]
        args: NhArgs,
        #[arg(long, default_value = "2.81")]
        omega: f64,
    },
    /// Combinatorial RSL attack.
    RslComb {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long = "N")]
        n_syndromes: u64,
        /// Add a 3 log2(system width) surcharge for the soft-O factor.
        #[arg(long)]
        pessimistic: bool,
    },
    /// Algebraic RSL attack, both specializations and branches.
    RslAlg {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long = "N")]
        n_syndromes: u64,
        #[arg(long, default_value = "2.81")]
        omega: f64,
    },
    /// Combinatorial NHRSL attack.
    NhrslComb {
        #[command(flatten)]
        args: NhArgs,
        #[arg(long = "N")]
        n_syndromes: u64,
        #[arg(long)]
        swap_caps: bool,
        /// Add a 3 log2(system width) surcharge for the soft-O factor.
        #[arg(long)]
        pessimistic: bool,
    },
    /// Rank-metric Gilbert-Varshamov radius.
    Rgv {
        #[arg(long, default_value = "2")]
        q: u64,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Syndrome count beyond which RSL turns polynomial.
    Threshold {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
    },
}

#[derive(Subcommand)]
enum AttackSimCmd {
    /// Combinatorial RSL attack on a planted instance.
    Rsl {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long = "N")]
        n_syndromes: usize,
        #[arg(long)]
        r1: usize,
        #[arg(long, default_value = "64")]
        tries: u32,
        #[arg(long)]
        seed: Option<String>,
    },
    /// Two-subspace guess on a planted NHRSD instance.
    Nhrsd {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        w1: usize,
        #[arg(long)]
        w2: usize,
        #[arg(long)]
        r: usize,
        #[arg(long)]
        rho: usize,
        #[arg(long, default_value = "1024")]
        tries: u32,
        #[arg(long)]
        seed: Option<String>,
    },
    /// Polynomial-regime demonstration around the RSL threshold.
    PolyDemo {
        #[arg(long, default_value = "10")]
        m: u32,
        #[arg(long, default_value = "14")]
        n: usize,
        #[arg(long, default_value = "4")]
        k: usize,
        #[arg(long, default_value = "2")]
        r: usize,
        #[arg(long, default_value = "50")]
        trials: u32,
        #[arg(long)]
        seed: Option<String>,
    },
}

#[derive(Subcommand)]
enum KatAction {
    Generate {
        /// Set name, or "all".
        #[arg(long, default_value = "all")]
        params: String,
        #[arg(long, default_value = "3")]
        records: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Verify {
        #[arg(long)]
        file: PathBuf,
    },
}

fn parse_seed(seed: &Option<String>) -> Result<[u8; SEED_BYTES], String> {
    match seed {
        Some(hexstr) => {
            let bytes = hex::decode(hexstr).map_err(|e| format!("bad --seed hex: {e}"))?;
            if bytes.len() > SEED_BYTES {
                return Err(format!("--seed longer than {SEED_BYTES} bytes"));
            }
            let mut out = [0u8; SEED_BYTES];
            out[..bytes.len()].copy_from_slice(&bytes);
            Ok(out)
        }
        None => {
            let mut out = [0u8; SEED_BYTES];
            rand::thread_rng().fill_bytes(&mut out);
            Ok(out)
        }
    }
}

fn lookup(params: &str) -> Result<&'static ParameterSet, String> {
    ParameterSet::by_name(params).ok_or_else(|| {
        format!(
            "unknown parameter set `{params}`; try one of: {}",
            scheme::catalog()
                .iter()
                .map(|p| p.name)
                .collect::<Vec<_>>()
                .join(", ")
        )
    })
}

fn read_file(path: &PathBuf) -> Result<Vec<u8>, String> {
    std::fs::read(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write_file(path: &PathBuf, data: &[u8]) -> Result<(), String> {
    std::fs::write(path, data).map_err(|e| format!("{}: {e}", path.display()))
}

/// Domain-level outcome: Ok(false) means "ran fine, answer is failure".
fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Params { action } => params_cmd(action),
        Command::Keygen { params, seed, out_pk, out_sk } => {
            let p = lookup(&params)?;
            let master = parse_seed(&seed)?;
            let (pk, sk) = match p.structure {
                Structure::Ideal => {
                    let kp = scheme::RqcKeyPair::generate(p, &master).map_err(|e| e.to_string())?;
                    (kp.pk.to_bytes(p), kp.sk.to_bytes())
                }
                Structure::Random => {
                    let kp = scheme::UrKeyPair::generate(p, &master).map_err(|e| e.to_string())?;
                    (kp.pk.to_bytes(p), kp.sk.to_bytes())
                }
            };
            write_file(&out_pk, &pk)?;
            write_file(&out_sk, &sk)?;
            println!(
                "wrote {} ({} B) and {} ({} B)",
                out_pk.display(),
                pk.len(),
                out_sk.display(),
                sk.len()
            );
            Ok(true)
        }
        Command::Encrypt { params, pk, msg, seed, out_ct, out_msg } => {
            let p = lookup(&params)?;
            let seed = parse_seed(&seed)?;
            let theta: [u8; SEED_BYTES] = Xof::new("theta", &seed).squeeze();
            let msg_bytes = match msg {
                Some(h) => hex::decode(&h).map_err(|e| format!("bad --msg hex: {e}"))?,
                None => {
                    let mut mx = Xof::new("cli-msg", &seed);
                    let elems: Vec<_> = (0..p.k)
                        .map(|_| rankpke_core::f2linalg::sample_element(&mut mx, p.m))
                        .collect();
                    scheme::pack_vector(&elems, p.m)
                }
            };
            if msg_bytes.len() != p.msg_bytes() {
                return Err(format!(
                    "message must be exactly {} bytes for {}",
                    p.msg_bytes(),
                    p.name
                ));
            }
            let elems = scheme::unpack_vector(&msg_bytes, p.m, p.k).ok_or("short message")?;
            let pk_bytes = read_file(&pk)?;
            let ct = match p.structure {
                Structure::Ideal => {
                    let pk = scheme::RqcPublicKey::from_bytes(p, &pk_bytes).map_err(|e| e.to_string())?;
                    scheme::rqc_encrypt(p, &pk, &elems, &theta)
                        .map_err(|e| e.to_string())?
                        .to_bytes(p)
                }
                Structure::Random => {
                    let pk = scheme::UrPublicKey::from_bytes(p, &pk_bytes).map_err(|e| e.to_string())?;
                    scheme::ur_encrypt(p, &pk, &elems, &theta)
                        .map_err(|e| e.to_string())?
                        .to_bytes(p)
                }
            };
            write_file(&out_ct, &ct)?;
            if let Some(path) = out_msg {
                write_file(&path, &msg_bytes)?;
            }
            println!("msg = {}", hex::encode(&msg_bytes));
            println!("wrote {} ({} B)", out_ct.display(), ct.len());
            Ok(true)
        }
        Command::Decrypt { params, pk, sk, ct, out_msg } => {
            let p = lookup(&params)?;
            let pk_bytes = read_file(&pk)?;
            let sk_bytes = read_file(&sk)?;
            let ct_bytes = read_file(&ct)?;
            let result = match p.structure {
                Structure::Ideal => {
                    let pk = scheme::RqcPublicKey::from_bytes(p, &pk_bytes).map_err(|e| e.to_string())?;
                    let sk = scheme::RqcSecretKey::from_bytes(p, &sk_bytes).map_err(|e| e.to_string())?;
                    let ct = scheme::RqcCiphertext::from_bytes(p, &ct_bytes).map_err(|e| e.to_string())?;
                    scheme::rqc_decrypt(p, &pk, &sk, &ct)
                }
                Structure::Random => {
                    let pk = scheme::UrPublicKey::from_bytes(p, &pk_bytes).map_err(|e| e.to_string())?;
                    let sk = scheme::UrSecretKey::from_bytes(p, &sk_bytes).map_err(|e| e.to_string())?;
                    let ct = scheme::UrCiphertext::from_bytes(p, &ct_bytes).map_err(|e| e.to_string())?;
                    scheme::ur_decrypt(p, &pk, &sk, &ct)
                }
            };
            match result {
                Ok(msg) => {
                    let bytes = scheme::pack_vector(&msg, p.m);
                    println!("msg = {}", hex::encode(&bytes));
                    if let Some(path) = out_msg {
                        write_file(&path, &bytes)?;
                    }
                    Ok(true)
                }
                Err(e) => {
                    eprintln!("decryption failed: {e}");
                    Ok(false)
                }
            }
        }
        Command::Sizes { params, format } => {
            let sets: Vec<&ParameterSet> = match params {
                Some(name) => vec![lookup(&name)?],
                None => scheme::catalog().iter().collect(),
            };
            if format == Format::Csv {
                println!("name,pk_bytes,ct_bytes,total_bytes");
            }
            for p in sets {
                let (pk, ct) = p.sizes();
                match format {
                    Format::Text => println!(
                        "{:22} pk {:5} B ({:.1} KB)  ct {:5} B ({:.1} KB)  total {:5} B",
                        p.name,
                        pk,
                        pk as f64 / 1000.0,
                        ct,
                        ct as f64 / 1000.0,
                        pk + ct
                    ),
                    Format::Csv => println!("{},{},{},{}", p.name, pk, ct, pk + ct),
                }
            }
            Ok(true)
        }
        Command::Dfr { params, delta, tail, epsilon, monte_carlo, seed, jobs, format } => {
            let (delta, tail, eps, label) = match (&params, delta, tail, epsilon) {
                (Some(name), _, _, _) => {
                    let p = lookup(name)?;
                    (p.delta(), p.tail_len(), p.epsilon, p.name.to_string())
                }
                (None, Some(d), Some(t), Some(e)) => (d, t, e, format!("delta={d} tail={t} eps={e}")),
                _ => return Err("pass --params or all of --delta --tail --epsilon".into()),
            };
            let model = gabidulin::dfr_bits(2, delta, tail, eps);
            let model_str = model.map_or("-inf".to_string(), |b| format!("{b:.2}"));
            let empirical = match monte_carlo {
                None => None,
                Some(trials) => {
                    let seed = parse_seed(&seed)?;
                    let jobs = jobs.max(1);
                    let mut handles = Vec::new();
                    for j in 0..jobs {
                        let per = trials / jobs as u64 + u64::from(j == 0) * (trials % jobs as u64);
                        let mut stream =
                            Xof::new("dfr-mc", &[&seed[..], &j.to_le_bytes()[..]].concat());
                        handles.push(std::thread::spawn(move || {
                            (gabidulin::dfr_monte_carlo(&mut stream, delta, tail, eps, per), per)
                        }));
                    }
                    let mut fails = 0.0;
                    for h in handles {
                        let (rate, per) = h.join().expect("worker");
                        fails += rate * per as f64;
                    }
                    Some(fails / trials as f64)
                }
            };
            match format {
                Format::Text => {
                    println!("{label}: model log2(DFR) = {model_str}");
                    if let Some(e) = empirical {
                        println!("{label}: empirical rate = {e:.3e} (log2 {:.2})", e.log2());
                    }
                }
                Format::Csv => {
                    println!("label,model_log2,empirical");
                    println!(
                        "{label},{model_str},{}",
                        empirical.map_or(String::new(), |e| format!("{e:.6e}"))
                    );
                }
            }
            Ok(true)
        }
        Command::Estimate { format, attack } => {
            let report = estimate_cmd(attack)?;
            match format {
                Format::Csv => {
                    println!("attack,bits,flags,instance,optimal");
                    println!("{}", report.to_csv());
                }
                Format::Text => println!("{report}"),
            }
            Ok(true)
        }
        Command::Figure3 { m, n, k, r, omega, n_min, n_max, step, out } => {
            let ns: Vec<u64> = (n_min..=n_max).step_by(step as usize).collect();
            let rows = est::figure3_series(m, n, k, r, omega, &ns);
            let csv = est::series_to_csv(&rows);
            match out {
                Some(path) => {
                    write_file(&path, csv.as_bytes())?;
                    println!("wrote {} ({} rows)", path.display(), rows.len());
                }
                None => print!("{csv}"),
            }
            Ok(true)
        }
        Command::AttackSim { sim } => attack_sim_cmd(sim),
        Command::Kat { action } => kat_cmd(action),
    }
}

fn params_cmd(action: ParamsAction) -> Result<bool, String> {
    match action {
        ParamsAction::List { format } => {
            if format == Format::Csv {
                println!("name,structure,level,m,n_prime,n,n1,n2,k,epsilon,w,w1,w2,delta,pk_bytes,ct_bytes");
            }
            for p in scheme::catalog() {
                let (pk, ct) = p.sizes();
                match format {
                    Format::Text => println!(
                        "{:22} {:6} L{} m={:3} n'={:3} n1={:2} n2={:2} k={} eps={:2} w={} w1={:2} w2={} delta={:3} pk={:.1}KB ct={:.1}KB",
                        p.name,
                        match p.structure { Structure::Ideal => "ideal", Structure::Random => "random" },
                        p.security_level,
                        p.m, p.n_prime, p.n1, p.n2, p.k, p.epsilon, p.w, p.w1, p.w2,
                        p.delta(),
                        pk as f64 / 1000.0,
                        ct as f64 / 1000.0,
                    ),
                    Format::Csv => println!(
                        "{},{:?},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
                        p.name, p.structure, p.security_level, p.m, p.n_prime, p.n, p.n1,
                        p.n2, p.k, p.epsilon, p.w, p.w1, p.w2, p.delta(), pk, ct
                    ),
                }
            }
            Ok(true)
        }
        ParamsAction::Show { params } => {
            let p = lookup(&params)?;
            let (pk, ct) = p.sizes();
            println!("name            = {}", p.name);
            println!("structure       = {:?}", p.structure);
            println!("security level  = {}", p.security_level);
            println!("m               = {}", p.m);
            println!("n'              = {}", p.n_prime);
            if p.structure == Structure::Random {
                println!("n               = {}", p.n);
            }
            println!("n1              = {}", p.n1);
            println!("n2              = {}", p.n2);
            println!("k               = {}", p.k);
            println!("epsilon         = {}", p.epsilon);
            println!("(w, w1, w2)     = ({}, {}, {})", p.w, p.w1, p.w2);
            println!("delta           = {}", p.delta());
            println!("gabidulin len   = {}", p.gab_len());
            println!("pk bytes        = {pk}");
            println!("ct bytes        = {ct}");
            println!("msg bytes       = {}", p.msg_bytes());
            let dfr = p.dfr_bits().map_or("-inf".into(), |b| format!("{b:.1}"));
            println!("log2 DFR        = {dfr}");
            Ok(true)
        }
    }
}

fn estimate_cmd(attack: EstimateCmd) -> Result<est::CostReport, String> {
    match attack {
        EstimateCmd::RsdComb(a) => {
            let c = est::rsd_combinatorial_bits(a.m, a.n, a.k, a.w);
            Ok(est::CostReport {
                attack: "rsd-comb",
                instance: vec![("m", a.m as i64), ("n", a.n as i64), ("k", a.k as i64), ("w", a.w as i64)],
                optimal: vec![
                    ("support_branch", c.branch_support),
                    ("amplified_branch", c.branch_amplified),
                ],
                bits: c.bits,
                polynomial_regime: c.polynomial_regime,
                wiedemann: false,
            })
        }
        EstimateCmd::RsdMm { args: a, omega } => {
            let c = est::rsd_maxminors_bits(a.m, a.n, a.k, a.w, omega).map_err(|e| e.to_string())?;
            Ok(est::CostReport {
                attack: "rsd-mm",
                instance: vec![("m", a.m as i64), ("n", a.n as i64), ("k", a.k as i64), ("w", a.w as i64)],
                optimal: vec![("a", c.a as i64)],
                bits: c.bits,
                polynomial_regime: false,
                wiedemann: false,
            })
        }
        EstimateCmd::NhrsdComb { args: a, pessimistic } => {
            let c = est::nhrsd_combinatorial_bits(a.m, a.n, a.n1, a.w1, a.w2).map_err(|e| e.to_string())?;
            Ok(est::CostReport {
                attack: "nhrsd-comb",
                instance: vec![("m", a.m as i64), ("n", a.n as i64), ("n1", a.n1 as i64), ("w1", a.w1 as i64), ("w2", a.w2 as i64)],
                optimal: vec![("r", c.r as i64), ("rho", c.rho as i64)],
                bits: if pessimistic { c.pessimistic_bits() } else { c.bits },
                polynomial_regime: c.polynomial_regime,
                wiedemann: false,
            })
        }
        EstimateCmd::NhrsdMm { args: a, omega } => {
            let c = est::nhrsd_maxminors_bits(a.m, a.n, a.n1, a.w1, a.w2, omega).map_err(|e| e.to_string())?;
            Ok(est::CostReport {
                attack: "nhrsd-mm",
                instance: vec![("m", a.m as i64), ("n", a.n as i64), ("n1", a.n1 as i64), ("w1", a.w1 as i64), ("w2", a.w2 as i64)],
                optimal: vec![("a", c.a as i64)],
                bits: c.bits,
                polynomial_regime: false,
                wiedemann: false,
            })
        }
        EstimateCmd::RslComb { m, n, k, r, n_syndromes, pessimistic } => {
            let c = est::rsl_combinatorial_bits(m, n, k, r, n_syndromes).map_err(|e| e.to_string())?;
            Ok(est::CostReport {
                attack: "rsl-comb",
                instance: vec![("m", m as i64), ("n", n as i64), ("k", k as i64), ("r", r as i64), ("N", n_syndromes as i64)],
                optimal: vec![("a", c.a as i64), ("r1", c.r1 as i64)],
                bits: if pessimistic { c.pessimistic_bits() } else { c.bits },
                polynomial_regime: c.polynomial_regime,
                wiedemann: false,
            })
        }
        EstimateCmd::RslAlg { m, n, k, r, n_syndromes, omega } => {
            let c = est::rsl_algebraic_bits(m, n, k, r, n_syndromes, omega).map_err(|e| e.to_string())?;
            let (p, branch) = c.best().ok_or("no feasible configuration")?;
            Ok(est::CostReport {
                attack: "rsl-alg",
                instance: vec![("m", m as i64), ("n", n as i64), ("k", k as i64), ("r", r as i64), ("N", n_syndromes as i64)],
                optimal: vec![
                    ("delta", p.delta as i64),
                    ("a", p.a as i64),
                    ("N_used", p.n_used as i64),
                    ("b", p.b as i64),
                    ("alpha_R", p.alpha_r as i64),
                    ("alpha_lambda", p.alpha_lambda as i64),
                ],
                bits: p.bits,
                polynomial_regime: false,
                wiedemann: branch == est::RslAlgBranch::Wiedemann,
            })
        }
        EstimateCmd::NhrslComb { args: a, n_syndromes, swap_caps, pessimistic } => {
            let c = est::nhrsl_combinatorial_bits(a.m, a.n, a.n1, a.w1, a.w2, n_syndromes, swap_caps)
                .map_err(|e| e.to_string())?;
            Ok(est::CostReport {
                attack: "nhrsl-comb",
                instance: vec![("m", a.m as i64), ("n", a.n as i64), ("n1", a.n1 as i64), ("w1", a.w1 as i64), ("w2", a.w2 as i64), ("N", n_syndromes as i64)],
                optimal: vec![
                    ("N1", c.n1_split as i64),
                    ("N2", c.n2_split as i64),
                    ("r", c.r as i64),
                    ("rho", c.rho as i64),
                ],
                bits: if pessimistic { c.pessimistic_bits() } else { c.bits },
                polynomial_regime: c.polynomial_regime,
                wiedemann: false,
            })
        }
        EstimateCmd::Rgv { q, m, n, k } => {
            let t = est::rgv(q, m, n, k);
            Ok(est::CostReport {
                attack: "rgv",
                instance: vec![("q", q as i64), ("m", m as i64), ("n", n as i64), ("k", k as i64)],
                optimal: vec![("t", t as i64)],
                bits: t as f64,
                polynomial_regime: false,
                wiedemann: false,
            })
        }
        EstimateCmd::Threshold { m, n, k, r } => {
            let t = est::rsl_polynomial_threshold(m, n, k, r);
            Ok(est::CostReport {
                attack: "rsl-threshold",
                instance: vec![("m", m as i64), ("n", n as i64), ("k", k as i64), ("r", r as i64)],
                optimal: vec![("N_star", t as i64)],
                bits: t as f64,
                polynomial_regime: false,
                wiedemann: false,
            })
        }
    }
}

fn attack_sim_cmd(sim: AttackSimCmd) -> Result<bool, String> {
    match sim {
        AttackSimCmd::Rsl { m, n, k, r, n_syndromes, r1, tries, seed } => {
            let ctx = FieldContext::new(m).map_err(|e| e.to_string())?;
            let seed = parse_seed(&seed)?;
            let mut rng = Xof::new("sim-rsl", &seed);
            let inst = labattack::gen_rsl_instance(&mut rng, &ctx, n, k, r, n_syndromes);
            match labattack::rsl_combinatorial_attack(&ctx, &inst, r1, tries, &mut rng) {
                labattack::AttackOutcome::Recovered(sup) => {
                    println!(
                        "recovered support of dimension {} (contains planted: {})",
                        sup.dim(),
                        inst.hidden_support.is_subspace_of(&sup)
                    );
                    Ok(true)
                }
                labattack::AttackOutcome::Exhausted => {
                    println!("exhausted after {tries} tries");
                    Ok(false)
                }
            }
        }
        AttackSimCmd::Nhrsd { m, n, n1, w1, w2, r, rho, tries, seed } => {
            let ctx = FieldContext::new(m).map_err(|e| e.to_string())?;
            let seed = parse_seed(&seed)?;
            let mut rng = Xof::new("sim-nhrsd", &seed);
            let inst = labattack::gen_nhrsd_instance(&mut rng, &ctx, n, n1, w1, w2);
            match labattack::nhrsd_guess_and_solve(&ctx, &inst, r, rho, tries, &mut rng) {
                Some(e) => {
                    println!("recovered error, matches planted: {}", e == inst.hidden_error);
                    Ok(true)
                }
                None => {
                    println!("exhausted after {tries} tries");
                    Ok(false)
                }
            }
        }
        AttackSimCmd::PolyDemo { m, n, k, r, trials, seed } => {
            let ctx = FieldContext::new(m).map_err(|e| e.to_string())?;
            let seed = parse_seed(&seed)?;
            let mut rng = Xof::new("sim-poly", &seed);
            let t = labattack::rsl_polynomial_regime_demo(&mut rng, &ctx, n, k, r, trials, trials);
            print!("{}", t.to_text());
            Ok(true)
        }
    }
}

fn kat_cmd(action: KatAction) -> Result<bool, String> {
    match action {
        KatAction::Generate { params, records, out } => {
            let mut text = String::new();
            if params == "all" {
                for p in scheme::catalog() {
                    text.push_str(&scheme::generate_kat(p, records).map_err(|e| e.to_string())?);
                }
            } else {
                let p = lookup(&params)?;
                text = scheme::generate_kat(p, records).map_err(|e| e.to_string())?;
            }
            match out {
                Some(path) => {
                    write_file(&path, text.as_bytes())?;
                    println!("wrote {}", path.display());
                }
                None => print!("{text}"),
            }
            Ok(true)
        }
        KatAction::Verify { file } => {
            let text =
                std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
            match scheme::verify_kat(&text) {
                Ok(n) => {
                    println!("verified {n} records");
                    Ok(true)
                }
                Err(e) => {
                    eprintln!("verification failed: {e}");
                    Ok(false)
                }
            }
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

//! The attack-cost-versus-syndrome-count picture for an RSL instance: the
//! combinatorial series, the four algebraic series (two specializations
//! times two linear-algebra branches) and the constant single-syndrome
//! MaxMinors reference, as rows ready for CSV emission.

use super::rsd::rsd_maxminors_bits;
use super::rsl::{rsl_algebraic_table, rsl_combinatorial_bits};

#[derive(Debug, Clone)]
pub struct Figure3Row {
    pub n_syndromes: u64,
    pub attack: &'static str,
    pub bits: f64,
}

/// Evaluates every series on the given syndrome counts. Rows are grouped
/// by N ascending, attacks in a fixed order.
pub fn figure3_series(
    m: usize,
    n: usize,
    k: usize,
    r: usize,
    omega: f64,
    n_values: &[u64],
) -> Vec<Figure3Row> {
    let mut rows = Vec::new();
    let max = n_values.iter().copied().max().unwrap_or(0);
    let table = rsl_algebraic_table(m, n, k, r, max, omega);
    let rsd_ref = rsd_maxminors_bits(m, n, k, r, omega).ok();
    for &nv in n_values {
        if let Ok(c) = rsl_combinatorial_bits(m, n, k, r, nv) {
            rows.push(Figure3Row {
                n_syndromes: nv,
                attack: "rsl-comb",
                bits: c.bits,
            });
        }
        if let Ok(alg) = table.at(nv) {
            for (attack, p) in [
                ("rsl-alg-d0", &alg.dzero_strassen),
                ("rsl-alg-d0-wiedemann", &alg.dzero_wiedemann),
                ("rsl-alg-dpos", &alg.dpos_strassen),
                ("rsl-alg-dpos-wiedemann", &alg.dpos_wiedemann),
            ] {
                if let Some(p) = p {
                    rows.push(Figure3Row {
                        n_syndromes: nv,
                        attack,
                        bits: p.bits,
                    });
                }
            }
        }
        if let Some(ref rr) = rsd_ref {
            rows.push(Figure3Row {
                n_syndromes: nv,
                attack: "rsd-mm-reference",
                bits: rr.bits,
            });
        }
    }
    rows
}

pub fn series_to_csv(rows: &[Figure3Row]) -> String {
    let mut out = String::from("N,attack,bits\n");
    for row in rows {
        out.push_str(&format!("{},{},{:.2}\n", row.n_syndromes, row.attack, row.bits));
    }
    out
}

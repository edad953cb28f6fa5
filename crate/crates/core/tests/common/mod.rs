//! Shared helpers for integration tests: the printed-matrix fixtures.

#![allow(dead_code)]

use serde_json::Value;
use spinor_kinematics::linalg::ExactMatrix;
use spinor_kinematics::GaussianRational as Q;

const FIXTURES: &str = include_str!("../fixtures/printed_matrices.json");

fn fixtures() -> Value {
    serde_json::from_str(FIXTURES).expect("fixture file is valid JSON")
}

/// Evaluates a printed entry such as `-p1+p2`, `p3-ip4`, `-i` or `0` at `p`.
pub fn eval_entry(entry: &str, p: &[Q]) -> Q {
    let mut acc = Q::zero();
    let mut rest = entry.trim();
    while !rest.is_empty() {
        let (neg, body) = match rest.as_bytes()[0] {
            b'-' => (true, &rest[1..]),
            b'+' => (false, &rest[1..]),
            _ => (false, rest),
        };
        let end = body.find(['+', '-']).unwrap_or(body.len());
        let term = &body[..end];
        rest = &body[end..];
        let (unit, var) = match term.strip_prefix('i') {
            Some(v) => (Q::i(), v),
            None => (Q::one(), term),
        };
        let value = match var {
            "" => unit,
            "0" => Q::zero(),
            "1" => unit,
            v => {
                let idx: usize = v.strip_prefix('p').and_then(|s| s.parse().ok()).unwrap_or_else(|| panic!("bad term {term:?}"));
                &unit * &p[idx - 1]
            }
        };
        acc = if neg { &acc - &value } else { &acc + &value };
    }
    acc
}

fn matrix_from(v: &Value, p: &[Q]) -> ExactMatrix {
    let rows: Vec<Vec<Q>> = v
        .as_array()
        .expect("rows")
        .iter()
        .map(|r| r.as_array().expect("row").iter().map(|e| eval_entry(e.as_str().expect("string entry"), p)).collect())
        .collect();
    ExactMatrix::from_rows(rows).expect("rectangular")
}

/// Dimensions for which a printed momentum matrix exists.
pub fn printed_dirac_dims() -> Vec<usize> {
    let f = fixtures();
    let mut ds: Vec<usize> = f["dirac_momentum"].as_object().unwrap().keys().map(|k| k.parse().unwrap()).collect();
    ds.sort_unstable();
    ds
}

/// The printed momentum matrix P^(d) evaluated at `p`.
pub fn printed_dirac(d: usize, p: &[Q]) -> ExactMatrix {
    matrix_from(&fixtures()["dirac_momentum"][d.to_string()], p)
}

/// Dimensions for which a printed conjugation matrix exists.
pub fn printed_conjugation_dims() -> Vec<usize> {
    let f = fixtures();
    let mut ds: Vec<usize> = f["conjugation"].as_object().unwrap().keys().map(|k| k.parse().unwrap()).collect();
    ds.sort_unstable();
    ds
}

pub fn printed_conjugation(d: usize) -> ExactMatrix {
    matrix_from(&fixtures()["conjugation"][d.to_string()], &[])
}

/// Unit vectors e_1, …, e_d followed by one vector with distinct entries.
/// Two linear forms in p agree iff they agree on all of these.
pub fn probe_momenta(d: usize) -> Vec<Vec<Q>> {
    let mut out: Vec<Vec<Q>> = (0..d).map(|m| (0..d).map(|j| Q::from_int((j == m) as i64)).collect()).collect();
    out.push((0..d).map(|j| Q::from_parts(2 * j as i64 + 3, 5, j as i64 - 1, 2)).collect());
    out
}

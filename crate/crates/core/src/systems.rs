//! Generated benchmark systems and the elimination orderings used with
//! implicitization inputs.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::CoefficientField;
use crate::groebner::Ideal;
use crate::monomial::Monomial;
use crate::ordering::{OrderingSpec, TermOrdering};
use crate::poly::{Polynomial, Ring};

/// The prime used for benchmarks over a finite field.
pub const BENCH_PRIME: u64 = 11863279;

/// Cyclic n-roots in variables `x0 … x{n-1}`.
pub fn gen_cyclic(n: usize, field: CoefficientField) -> Result<Ideal> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("cyclic needs n >= 2, got {}", n)));
    }
    let ring = Ring::new((0..n).map(|i| format!("x{}", i)), field);
    let one = field.one();
    let mut gens = Vec::with_capacity(n);
    for k in 1..n {
        let terms = (0..n).map(|i| {
            let mut e = vec![0u32; n];
            for j in i..i + k {
                e[j % n] += 1;
            }
            (Monomial::from_exponents(&e), one.clone())
        });
        gens.push(Polynomial::from_terms(&ring, terms));
    }
    let all = Polynomial::term(&ring, Monomial::from_exponents(&vec![1; n]), one.clone());
    gens.push(&all - &Polynomial::one(&ring));
    Ideal::new(gens)
}

/// Katsura-m in variables `u0 … um`.
pub fn gen_katsura(m: usize, field: CoefficientField) -> Result<Ideal> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("katsura needs m >= 1, got {}", m)));
    }
    let n = m + 1;
    let ring = Ring::new((0..n).map(|i| format!("u{}", i)), field);
    let u = |i: usize| Polynomial::var(&ring, i);
    let mut gens = Vec::with_capacity(n);
    for k in 0..m as i64 {
        let mut acc = Polynomial::zero(&ring);
        for i in -(m as i64)..=(m as i64) {
            let j = (k - i).unsigned_abs() as usize;
            if j > m {
                continue;
            }
            acc = &acc + &(&u(i.unsigned_abs() as usize) * &u(j));
        }
        gens.push(&acc - &u(k as usize));
    }
    let mut lin = u(0);
    let two = Polynomial::constant(&ring, field.from_i64(2));
    for i in 1..=m {
        lin = &lin + &(&two * &u(i));
    }
    gens.push(&lin - &Polynomial::one(&ring));
    Ideal::new(gens)
}

fn int_rows(rows: [[i64; 5]; 5]) -> Vec<Vec<BigInt>> {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

/// Start elimination ordering for 5-variable implicitization inputs.
pub fn elim_sigma() -> OrderingSpec {
    OrderingSpec::Matrix(int_rows([
        [1, 1, 1, 0, 0],
        [0, 0, 0, 1, 1],
        [0, 0, 0, 1, 0],
        [1, 1, 0, 0, 0],
        [1, 0, 0, 0, 0],
    ]))
}

/// Target elimination ordering for 5-variable implicitization inputs.
pub fn elim_tau() -> OrderingSpec {
    OrderingSpec::Matrix(int_rows([
        [0, 0, 0, 1, 1],
        [1, 1, 1, 0, 0],
        [1, 1, 0, 0, 0],
        [1, 0, 0, 0, 0],
        [0, 0, 0, 1, 0],
    ]))
}

/// Built-in ordering names: `lex`, `degrevlex`, `elim-sigma`, `elim-tau`.
pub fn named_ordering(name: &str) -> Option<OrderingSpec> {
    match name {
        "lex" => Some(OrderingSpec::Lex),
        "degrevlex" => Some(OrderingSpec::DegRevLex),
        "elim-sigma" => Some(elim_sigma()),
        "elim-tau" => Some(elim_tau()),
        _ => None,
    }
}

/// A named system: `cyclic<n>` or `katsura<m>`.
pub fn named_system(name: &str, field: CoefficientField) -> Result<Ideal> {
    if let Some(n) = name.strip_prefix("cyclic").and_then(|s| s.parse().ok()) {
        return gen_cyclic(n, field);
    }
    if let Some(m) = name.strip_prefix("katsura").and_then(|s| s.parse().ok()) {
        return gen_katsura(m, field);
    }
    Err(Error::UnknownSystem(name.to_string()))
}

/// Reference basis sizes `(|G|, |G_start|, |G_target|)` for known systems.
pub fn expected_sizes(name: &str) -> Option<(usize, usize, usize)> {
    Some(match name {
        "cyclic5" => (5, 20, 30),
        "cyclic6" => (6, 45, 70),
        "katsura6" => (7, 41, 64),
        "katsura7" => (8, 74, 128),
        "katsura8" => (9, 143, 256),
        "agk4" => (3, 3, 29),
        "newell" => (3, 12, 39),
        "tran3.3" => (2, 5, 10),
        _ => return None,
    })
}

/// Default start and target orderings for a named system.
pub fn default_orderings(name: &str, n: usize) -> Result<(TermOrdering, TermOrdering)> {
    if matches!(name, "agk4" | "newell") {
        Ok((TermOrdering::make(&elim_sigma(), n)?, TermOrdering::make(&elim_tau(), n)?))
    } else {
        Ok((TermOrdering::degrevlex(n), TermOrdering::lex(n)))
    }
}

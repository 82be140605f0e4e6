//! Exponent vectors with unbounded exponents.
//!
//! Exponents are stored as `u32` until one of them outgrows the word, at
//! which point the whole vector switches to `BigUint`. The representation is
//! canonical (a vector is `Big` iff some entry exceeds `u32::MAX`), so
//! equality and hashing can look at the representation directly.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};
use smallvec::SmallVec;

type SmallExps = SmallVec<[u32; 8]>;

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(SmallExps),
    Big(Vec<BigUint>),
}

/// An exponent vector `α ∈ ℕⁿ`, i.e. the monomial `x^α`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    repr: Repr,
}

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial { repr: Repr::Small(SmallVec::from_elem(0, n)) }
    }

    /// The monomial `x_i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = SmallVec::from_elem(0, n);
        e[i] = 1;
        Monomial { repr: Repr::Small(e) }
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial { repr: Repr::Small(SmallVec::from_slice(exps)) }
    }

    pub fn from_big(exps: Vec<BigUint>) -> Self {
        if exps.iter().all(|e| e.to_u32().is_some()) {
            Monomial { repr: Repr::Small(exps.iter().map(|e| e.to_u32().unwrap()).collect()) }
        } else {
            Monomial { repr: Repr::Big(exps) }
        }
    }

    fn from_u64s(exps: impl Iterator<Item = u64>) -> Self {
        let v: SmallVec<[u64; 8]> = exps.collect();
        if v.iter().all(|&e| e <= u32::MAX as u64) {
            Monomial { repr: Repr::Small(v.iter().map(|&e| e as u32).collect()) }
        } else {
            Monomial { repr: Repr::Big(v.iter().map(|&e| BigUint::from(e)).collect()) }
        }
    }

    pub fn nvars(&self) -> usize {
        match &self.repr {
            Repr::Small(e) => e.len(),
            Repr::Big(e) => e.len(),
        }
    }

    /// Word-sized exponents, when every exponent fits.
    pub fn small(&self) -> Option<&[u32]> {
        match &self.repr {
            Repr::Small(e) => Some(e),
            Repr::Big(_) => None,
        }
    }

    pub fn exponent(&self, i: usize) -> BigUint {
        match &self.repr {
            Repr::Small(e) => BigUint::from(e[i]),
            Repr::Big(e) => e[i].clone(),
        }
    }

    pub fn exponents(&self) -> Vec<BigUint> {
        (0..self.nvars()).map(|i| self.exponent(i)).collect()
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Small(e) => e.iter().all(|&x| x == 0),
            Repr::Big(e) => e.iter().all(|x| x.is_zero()),
        }
    }

    pub fn total_degree(&self) -> BigUint {
        match &self.repr {
            Repr::Small(e) => BigUint::from(e.iter().map(|&x| x as u64).sum::<u64>()),
            Repr::Big(e) => e.iter().sum(),
        }
    }

    /// Total degree when it fits in a `u64`.
    pub fn degree_u64(&self) -> Option<u64> {
        match &self.repr {
            Repr::Small(e) => Some(e.iter().map(|&x| x as u64).sum()),
            Repr::Big(_) => self.total_degree().to_u64(),
        }
    }

    /// Bit `i mod 64` is set when variable `i` occurs; a cheap divisibility filter.
    pub fn support_mask(&self) -> u64 {
        let mut m = 0u64;
        for i in 0..self.nvars() {
            let nz = match &self.repr {
                Repr::Small(e) => e[i] != 0,
                Repr::Big(e) => !e[i].is_zero(),
            };
            if nz {
                m |= 1 << (i % 64);
            }
        }
        m
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        match (&self.repr, &other.repr) {
            (Repr::Small(a), Repr::Small(b)) => {
                Monomial::from_u64s(a.iter().zip(b.iter()).map(|(&x, &y)| x as u64 + y as u64))
            }
            _ => Monomial::from_big(
                (0..self.nvars()).map(|i| self.exponent(i) + other.exponent(i)).collect(),
            ),
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        match (&self.repr, &other.repr) {
            (Repr::Small(a), Repr::Small(b)) => {
                let mut out = SmallExps::with_capacity(a.len());
                for (&x, &y) in a.iter().zip(b.iter()) {
                    out.push(x.checked_sub(y)?);
                }
                Some(Monomial { repr: Repr::Small(out) })
            }
            _ => {
                let mut out = Vec::with_capacity(self.nvars());
                for i in 0..self.nvars() {
                    let (x, y) = (self.exponent(i), other.exponent(i));
                    if x < y {
                        return None;
                    }
                    out.push(x - y);
                }
                Some(Monomial::from_big(out))
            }
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        match (&self.repr, &other.repr) {
            (Repr::Small(a), Repr::Small(b)) => a.iter().zip(b.iter()).all(|(x, y)| x <= y),
            _ => (0..self.nvars()).all(|i| self.exponent(i) <= other.exponent(i)),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        match (&self.repr, &other.repr) {
            (Repr::Small(a), Repr::Small(b)) => Monomial {
                repr: Repr::Small(a.iter().zip(b.iter()).map(|(&x, &y)| x.max(y)).collect()),
            },
            _ => Monomial::from_big(
                (0..self.nvars()).map(|i| self.exponent(i).max(other.exponent(i))).collect(),
            ),
        }
    }

    /// True when no variable occurs in both monomials.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.support_mask() & other.support_mask() == 0
            && (self.nvars() <= 64
                || (0..self.nvars())
                    .all(|i| self.exponent(i).is_zero() || other.exponent(i).is_zero()))
    }

    pub fn pow(&self, k: &BigUint) -> Monomial {
        Monomial::from_big(self.exponents().into_iter().map(|e| e * k).collect())
    }

    /// `⟨w, self⟩`.
    pub fn dot(&self, w: &[BigInt]) -> BigInt {
        debug_assert_eq!(w.len(), self.nvars());
        match &self.repr {
            Repr::Small(e) => {
                w.iter().zip(e.iter()).filter(|(_, &x)| x != 0).map(|(wi, &x)| wi * x).sum()
            }
            Repr::Big(e) => w.iter().zip(e.iter()).map(|(wi, x)| wi * BigInt::from(x.clone())).sum(),
        }
    }

    /// The integer vector `self − other`.
    pub fn diff(&self, other: &Monomial) -> Vec<BigInt> {
        match (&self.repr, &other.repr) {
            (Repr::Small(a), Repr::Small(b)) => a
                .iter()
                .zip(b.iter())
                .map(|(&x, &y)| BigInt::from(x as i64 - y as i64))
                .collect(),
            _ => (0..self.nvars())
                .map(|i| BigInt::from(self.exponent(i)) - BigInt::from(other.exponent(i)))
                .collect(),
        }
    }

    /// Lexicographic comparison of exponent vectors (`x_1 > x_2 > …`).
    pub fn lex_cmp(&self, other: &Monomial) -> Ordering {
        match (&self.repr, &other.repr) {
            (Repr::Small(a), Repr::Small(b)) => a.cmp(b),
            _ => {
                for i in 0..self.nvars() {
                    match self.exponent(i).cmp(&other.exponent(i)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
        }
    }

    /// Total degree first, then lexicographic.
    pub fn deglex_cmp(&self, other: &Monomial) -> Ordering {
        let d = match (self.degree_u64(), other.degree_u64()) {
            (Some(a), Some(b)) => a.cmp(&b),
            _ => self.total_degree().cmp(&other.total_degree()),
        };
        d.then_with(|| self.lex_cmp(other))
    }

    /// Render with the given variable names, e.g. `x^2*y`. The empty
    /// monomial renders as `1`.
    pub fn display_with(&self, vars: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, v) in vars.iter().enumerate() {
            let e = self.exponent(i);
            if e.is_zero() {
                continue;
            }
            if e == BigUint::from(1u32) {
                parts.push(v.clone());
            } else {
                parts.push(format!("{}^{}", v, e));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Storage order: lexicographic on exponents. Not a statement about any
/// term ordering in use.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.lex_cmp(other)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Small(e) => write!(f, "{:?}", e.as_slice()),
            Repr::Big(e) => write!(f, "{:?}", e),
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (0..self.nvars()).map(|i| self.exponent(i).to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

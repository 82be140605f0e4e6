//! Sparse multivariate polynomials in canonical form.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::{Coeff, CoefficientField};
use crate::monomial::Monomial;
use crate::ordering::TermOrdering;

/// A polynomial ring `K[x_1, …, x_n]`: variable names plus a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    pub vars: Vec<String>,
    pub field: CoefficientField,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: impl IntoIterator<Item = S>, field: CoefficientField) -> Arc<Ring> {
        Arc::new(Ring { vars: vars.into_iter().map(Into::into).collect(), field })
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A polynomial: a finite map from exponent vectors to nonzero coefficients.
///
/// Terms are kept sorted by the lexicographic storage order of [`Monomial`]
/// and never contain zeros, so structural equality is mathematical equality.
/// Leading terms depend on a [`TermOrdering`] and are computed on demand.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    ring: Arc<Ring>,
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, ring.field.one())
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn term(ring: &Arc<Ring>, m: Monomial, c: Coeff) -> Self {
        if ring.field.is_zero(&c) {
            Self::zero(ring)
        } else {
            Polynomial { ring: ring.clone(), terms: vec![(m, c)] }
        }
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Self {
        Self::term(ring, Monomial::var(ring.nvars(), i), ring.field.one())
    }

    /// Builds a canonical polynomial, summing duplicate exponents and
    /// dropping zero coefficients.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let field = ring.field;
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "exponent vector length");
            match acc.get_mut(&m) {
                Some(e) => *e = field.add(e, &c),
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Polynomial { ring: ring.clone(), terms }
    }

    /// Trusted constructor: `terms` must already be canonical.
    pub(crate) fn from_sorted_unchecked(ring: &Arc<Ring>, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn field(&self) -> CoefficientField {
        self.ring.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter().map(|(m, _)| m)
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&Coeff> {
        self.terms.binary_search_by(|(t, _)| t.cmp(m)).ok().map(|i| &self.terms[i].1)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => {
                    out.push(a.clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b.clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = field.add(&a.1, &b.1);
                    if !field.is_zero(&c) {
                        out.push((a.0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let field = self.ring.field;
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match acc.get_mut(&m) {
                    Some(e) => *e = field.add(e, &c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field;
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        let field = self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), field.mul(c, d))).collect(),
        }
    }

    /// `c · x^m · self`. Multiplying by a monomial preserves the storage
    /// order, so no re-sorting is needed.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        let field = self.ring.field;
        if field.is_zero(c) {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(t, d)| (t.mul(m), field.mul(c, d))).collect(),
        }
    }

    /// `self^k`. Exponents that do not fit a machine word are only accepted
    /// for single-term bases whose coefficient power is computable.
    pub fn pow(&self, k: &BigUint) -> Result<Polynomial> {
        if k.is_zero() {
            return Ok(Polynomial::one(&self.ring));
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            let c = coeff_pow(self.ring.field, c, k)?;
            return Ok(Polynomial::term(&self.ring, m.pow(k), c));
        }
        let mut e = k
            .to_u32()
            .ok_or_else(|| Error::InvalidArgument(format!("exponent {} too large", k)))?;
        let mut base = self.clone();
        let mut acc = Polynomial::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    /// Render with terms in strictly decreasing order under `ord`.
    pub fn format_with(&self, ord: &TermOrdering) -> String {
        let mut terms: Vec<&(Monomial, Coeff)> = self.terms.iter().collect();
        terms.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        format_terms(&self.ring, terms.into_iter())
    }
}

fn coeff_pow(field: CoefficientField, c: &Coeff, k: &BigUint) -> Result<Coeff> {
    match (field, c) {
        (CoefficientField::PrimeField(p), Coeff::Modular(v)) => {
            let e = if *v == 0 { k.clone() } else { k % BigUint::from(p - 1) };
            let r = BigUint::from(*v).modpow(&e, &BigUint::from(p));
            let r = if *v != 0 && e.is_zero() { BigUint::one() } else { r };
            Ok(Coeff::Modular(r.to_u64().unwrap()))
        }
        (_, Coeff::Rational(q)) => {
            if q.is_one() {
                return Ok(c.clone());
            }
            if *q == -num_rational::BigRational::one() {
                let odd = k.bit(0);
                return Ok(if odd { c.clone() } else { field.one() });
            }
            let e = k
                .to_u32()
                .ok_or_else(|| Error::InvalidArgument(format!("exponent {} too large", k)))?;
            Ok(Coeff::Rational(num_traits::pow::Pow::pow(q, e)))
        }
        _ => panic!("coefficient variant does not match field"),
    }
}

pub(crate) fn format_terms<'a>(
    ring: &Ring,
    terms: impl Iterator<Item = &'a (Monomial, Coeff)>,
) -> String {
    let mut out = String::new();
    for (i, (m, c)) in terms.enumerate() {
        let neg = c.is_negative();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let abs = c.abs();
        if m.is_one() {
            out.push_str(&abs.to_string());
        } else if ring.field.is_one(&abs) {
            out.push_str(&m.display_with(&ring.vars));
        } else {
            out.push_str(&format!("{}*{}", abs, m.display_with(&ring.vars)));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for Polynomial {
    /// Terms in decreasing lexicographic order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_terms(&self.ring, self.terms.iter().rev()))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("ring mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("ring mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("ring mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}

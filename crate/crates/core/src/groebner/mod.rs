//! Ideals, marked polynomials and marked Gröbner bases.

mod buchberger;
mod reduce;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ordering::TermOrdering;
use crate::poly::{same_ring, Polynomial, Ring};

pub use buchberger::{buchberger, interreduce, leading_ideal};
pub(crate) use buchberger::{groebner_basis, interreduce_ordered};
pub use reduce::{divide, marked_normal_form, normal_form, s_polynomial, Division};
pub(crate) use reduce::{marked_normal_forms, normal_forms_unchecked};

/// A polynomial ideal given by a nonempty list of nonzero generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Arc<Ring>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>) -> Result<Self> {
        let first = generators.first().ok_or(Error::EmptyIdeal)?;
        let ring = first.ring().clone();
        for g in &generators {
            if !same_ring(g.ring(), &ring) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                return Err(Error::ZeroPolynomial);
            }
        }
        Ok(Ideal { ring, generators })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// A polynomial with a distinguished ("marked") exponent whose coefficient is one.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MarkedPolynomial {
    poly: Polynomial,
    marked: Monomial,
}

impl MarkedPolynomial {
    /// Requires `marked` in the support with coefficient one.
    pub fn new(poly: Polynomial, marked: Monomial) -> Result<Self> {
        match poly.coeff(&marked) {
            Some(c) if poly.field().is_one(c) => Ok(MarkedPolynomial { poly, marked }),
            _ => Err(Error::BadMarking(marked.to_string())),
        }
    }

    /// Rescales so that the marked coefficient becomes one.
    pub fn monic(poly: Polynomial, marked: Monomial) -> Result<Self> {
        let c = poly.coeff(&marked).ok_or_else(|| Error::BadMarking(marked.to_string()))?;
        let field = poly.field();
        if field.is_one(c) {
            return Ok(MarkedPolynomial { poly, marked });
        }
        let inv = field.inv(c).expect("stored coefficients are nonzero");
        Ok(MarkedPolynomial { poly: poly.scale(&inv), marked })
    }

    /// Marks the leading term under `ord` and rescales.
    pub fn leading(poly: Polynomial, ord: &TermOrdering) -> Result<Self> {
        let lead = ord.leading_term(&poly)?.0.clone();
        Self::monic(poly, lead)
    }

    pub fn poly(&self) -> &Polynomial {
        &self.poly
    }

    pub fn marked(&self) -> &Monomial {
        &self.marked
    }

    pub fn into_poly(self) -> Polynomial {
        self.poly
    }

    /// The polynomial without its marked term.
    pub fn tail(&self) -> Polynomial {
        Polynomial::from_sorted_unchecked(
            self.poly.ring(),
            self.poly.terms().filter(|(m, _)| *m != &self.marked).map(|(m, c)| (m.clone(), c.clone())).collect(),
        )
    }
}

/// A reduced, monic, minimal Gröbner basis with explicit markings.
///
/// Elements are kept sorted by marking (descending storage order), so `==`
/// compares the bases as sets.
#[derive(Debug, Clone)]
pub struct MarkedGroebnerBasis {
    elements: Vec<MarkedPolynomial>,
    provenance: Option<String>,
}

impl PartialEq for MarkedGroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for MarkedGroebnerBasis {}

impl MarkedGroebnerBasis {
    /// Wraps elements without checking the basis invariants; see
    /// [`MarkedGroebnerBasis::check`].
    pub fn from_elements(mut elements: Vec<MarkedPolynomial>) -> Self {
        elements.sort_by(|a, b| b.marked.cmp(&a.marked));
        MarkedGroebnerBasis { elements, provenance: None }
    }

    pub fn with_provenance(mut self, tag: impl Into<String>) -> Self {
        self.provenance = Some(tag.into());
        self
    }

    pub fn provenance(&self) -> Option<&str> {
        self.provenance.as_deref()
    }

    pub fn elements(&self) -> &[MarkedPolynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn ring(&self) -> Option<&Arc<Ring>> {
        self.elements.first().map(|e| e.poly.ring())
    }

    pub fn markings(&self) -> Vec<Monomial> {
        self.elements.iter().map(|e| e.marked.clone()).collect()
    }

    pub fn polynomials(&self) -> Vec<Polynomial> {
        self.elements.iter().map(|e| e.poly.clone()).collect()
    }

    /// Minimal, monic and reduced; markings in the support.
    pub fn check(&self) -> Result<()> {
        for (i, a) in self.elements.iter().enumerate() {
            match a.poly.coeff(&a.marked) {
                Some(c) if a.poly.field().is_one(c) => {}
                _ => return Err(Error::BadMarking(a.marked.to_string())),
            }
            for (j, b) in self.elements.iter().enumerate() {
                if i == j {
                    continue;
                }
                if let Some(m) = a.poly.support().find(|m| b.marked.divides(m)) {
                    return Err(Error::InvalidArgument(format!(
                        "basis not reduced: term {} of element {} divisible by marking {}",
                        m, i, b.marked
                    )));
                }
            }
        }
        Ok(())
    }

    /// Whether every marking is the leading exponent under `ord`.
    pub fn markings_agree_with(&self, ord: &TermOrdering) -> bool {
        self.elements.iter().all(|e| ord.leading_term(&e.poly).map(|(m, _)| m == &e.marked).unwrap_or(false))
    }

    /// Listing in the style
    /// `  1: x + y^12 - y^8 + y^4`, elements sorted by marking under `ord`
    /// and each printed in decreasing order.
    pub fn format_with(&self, ord: &TermOrdering) -> String {
        let mut els: Vec<&MarkedPolynomial> = self.elements.iter().collect();
        els.sort_by(|a, b| ord.cmp(&b.marked, &a.marked));
        let mut out = String::new();
        for (i, e) in els.iter().enumerate() {
            out.push_str(&format!("  {}: {}\n", i + 1, e.poly.format_with(ord)));
        }
        out
    }
}

impl fmt::Display for MarkedGroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.elements.iter().enumerate() {
            writeln!(f, "  {}: {}  <{}>", i + 1, e.poly, e.marked)?;
        }
        Ok(())
    }
}

//! The generic walk: facets are chosen symbolically from the start and
//! target matrices, and reduction uses only the markings.

use std::cmp::Ordering;
use std::ops::Deref;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, interreduce, marked_normal_forms, Ideal, MarkedGroebnerBasis, MarkedPolynomial};
use crate::ordering::{int_vec_text, TermOrdering};
use crate::poly::Polynomial;

use super::cone::{cone_inequalities, dot, primitive};
use super::standard::{check_orderings, WalkRun};
use super::trace::{Algorithm, WalkTrace};

/// A nonzero primitive integer vector normal to a cone facet.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetVector(Vec<BigInt>);

impl FacetVector {
    pub fn new(v: Vec<BigInt>) -> Result<Self> {
        if v.iter().all(|x| x.is_zero()) {
            return Err(Error::InvalidArgument("facet vector must be nonzero".into()));
        }
        Ok(FacetVector(primitive(v)))
    }

    pub fn from_i64s(v: &[i64]) -> Result<Self> {
        Self::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }
}

impl Deref for FacetVector {
    type Target = [BigInt];
    fn deref(&self) -> &[BigInt] {
        &self.0
    }
}

impl std::fmt::Display for FacetVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&int_vec_text(&self.0))
    }
}

/// Start matrix `S` and target matrix `T`.
#[derive(Debug, Clone)]
pub struct OrderingMatrixPair {
    start: TermOrdering,
    target: TermOrdering,
}

impl OrderingMatrixPair {
    pub fn new(start: &TermOrdering, target: &TermOrdering) -> Result<Self> {
        if start.nvars() != target.nvars() {
            return Err(Error::DimensionMismatch { expected: start.nvars(), got: target.nvars() });
        }
        Ok(OrderingMatrixPair { start: start.clone(), target: target.clone() })
    }

    pub fn s(&self) -> &[Vec<BigInt>] {
        self.start.matrix()
    }

    pub fn t(&self) -> &[Vec<BigInt>] {
        self.target.matrix()
    }

    pub fn target(&self) -> &TermOrdering {
        &self.target
    }
}

fn mat_vec(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter().map(|r| dot(r, v)).collect()
}

/// Sign of the first nonzero entry.
fn lex_sign(v: &[BigInt]) -> Ordering {
    v.iter().find(|x| !x.is_zero()).map_or(Ordering::Equal, |x| if x.is_positive() { Ordering::Greater } else { Ordering::Less })
}

/// Inequalities of the cone of `g` that the target violates and the start
/// satisfies.
pub fn flippable_facets(g: &MarkedGroebnerBasis, p: &OrderingMatrixPair) -> Vec<FacetVector> {
    cone_inequalities(g)
        .vectors()
        .iter()
        .filter(|v| lex_sign(&mat_vec(p.t(), v)) == Ordering::Less && lex_sign(&mat_vec(p.s(), v)) == Ordering::Greater)
        .map(|v| FacetVector(v.clone()))
        .collect()
}

/// Whether the perturbed start-to-target path crosses `u` before `v`: the
/// first nonzero entry, row-major, of `(Tu)(Sv)ᵀ − (Tv)(Su)ᵀ` is negative.
pub fn facet_less(u: &FacetVector, v: &FacetVector, p: &OrderingMatrixPair) -> bool {
    let (tu, su) = (mat_vec(p.t(), u), mat_vec(p.s(), u));
    let (tv, sv) = (mat_vec(p.t(), v), mat_vec(p.s(), v));
    for i in 0..tu.len() {
        for j in 0..sv.len() {
            let d = &tu[i] * &sv[j] - &tv[i] * &su[j];
            if !d.is_zero() {
                return d.is_negative();
            }
        }
    }
    false
}

/// The least facet under [`facet_less`], ties broken by comparing the
/// vectors lexicographically.
pub fn min_facet(facets: &[FacetVector], p: &OrderingMatrixPair) -> Option<FacetVector> {
    let mut best: Option<&FacetVector> = None;
    for f in facets {
        best = match best {
            None => Some(f),
            Some(b) if facet_less(f, b, p) || (!facet_less(b, f, p) && f < b) => Some(f),
            keep => keep,
        };
    }
    best.cloned()
}

/// Marked term plus the terms `x^b` where `α − b` is a positive multiple of `w`.
pub fn facet_initial_form(g: &MarkedPolynomial, w: &FacetVector) -> Polynomial {
    let a = g.marked();
    let terms = g
        .poly()
        .terms()
        .filter(|(b, _)| *b == a || primitive(a.diff(b)) == w.0)
        .map(|(b, c)| (b.clone(), c.clone()));
    Polynomial::from_terms(g.poly().ring(), terms)
}

/// Crosses facet `w` of the cone of `g`.
pub fn generic_flip(g: &MarkedGroebnerBasis, w: &FacetVector, p: &OrderingMatrixPair) -> Result<MarkedGroebnerBasis> {
    if !flippable_facets(g, p).contains(w) {
        return Err(Error::NotFlippable(w.to_string()));
    }
    flip(g, w, p)
}

fn flip(g: &MarkedGroebnerBasis, w: &FacetVector, p: &OrderingMatrixPair) -> Result<MarkedGroebnerBasis> {
    let ring = g.ring().ok_or(Error::EmptyIdeal)?;
    let inw: Vec<Polynomial> = g.elements().iter().map(|e| facet_initial_form(e, w)).collect();
    let m = groebner_basis(ring, &inw, p.target());
    let polys = m.polynomials();
    let nfs = marked_normal_forms(&polys, g)?;
    let lifted = polys.iter().zip(nfs).zip(m.elements()).map(|((f, r), e)| (f - &r, e.marked().clone())).collect();
    interreduce(lifted)
}

/// Converts the `start` basis of `ideal` into the `target` basis by facet flips.
pub fn generic_walk(ideal: &Ideal, start: &TermOrdering, target: &TermOrdering) -> Result<(MarkedGroebnerBasis, WalkTrace)> {
    let run = walk(ideal, start, target, false)?;
    Ok((run.basis, run.trace))
}

/// [`generic_walk`], keeping every intermediate basis.
pub fn generic_walk_recorded(ideal: &Ideal, start: &TermOrdering, target: &TermOrdering) -> Result<WalkRun> {
    walk(ideal, start, target, true)
}

fn walk(ideal: &Ideal, start: &TermOrdering, target: &TermOrdering, keep: bool) -> Result<WalkRun> {
    check_orderings(ideal, start, target)?;
    let p = OrderingMatrixPair::new(start, target)?;
    let mut g = groebner_basis(ideal.ring(), ideal.generators(), start);
    let mut trace = WalkTrace::new(Algorithm::Generic, g.len());
    let mut bases = if keep { vec![g.clone()] } else { Vec::new() };
    while let Some(w) = min_facet(&flippable_facets(&g, &p), &p) {
        g = flip(&g, &w, &p)?;
        trace.crossed.push(w.into_entries());
        trace.basis_sizes.push(g.len());
        if keep {
            bases.push(g.clone());
        }
    }
    if !g.markings_agree_with(target) {
        return Err(Error::InvalidArgument("generic walk stopped outside the target cone".into()));
    }
    Ok(WalkRun { basis: g.with_provenance(target.name()), trace, bases })
}

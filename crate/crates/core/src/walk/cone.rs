//! Cone geometry of a marked Gröbner basis: facet inequalities, the last
//! point of a segment inside a cone, initial forms and lifting.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::groebner::{normal_forms_unchecked, MarkedGroebnerBasis, MarkedPolynomial};
use crate::ordering::{initial_form, TermOrdering, WeightVector};
use crate::poly::Polynomial;

/// Divides out the gcd; the zero vector stays zero.
pub fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        return v;
    }
    v.into_iter().map(|x| x / &g).collect()
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Primitive difference vectors `α − β` (marking minus other support
/// exponent). The closed cone of the basis is `{ω : ⟨ω, v⟩ ≥ 0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeInequalities {
    vectors: Vec<Vec<BigInt>>,
}

impl ConeInequalities {
    pub fn of(g: &MarkedGroebnerBasis) -> Self {
        let mut set = BTreeSet::new();
        for el in g.elements() {
            for b in el.poly().support() {
                if b != el.marked() {
                    set.insert(primitive(el.marked().diff(b)));
                }
            }
        }
        ConeInequalities { vectors: set.into_iter().collect() }
    }

    pub fn vectors(&self) -> &[Vec<BigInt>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// `⟨ω, v⟩ ≥ 0` for every inequality.
    pub fn contains(&self, w: &[BigInt]) -> bool {
        self.vectors.iter().all(|v| !dot(v, w).is_negative())
    }

    /// `⟨ω, v⟩ > 0` for every inequality.
    pub fn contains_in_interior(&self, w: &[BigInt]) -> bool {
        self.vectors.iter().all(|v| dot(v, w).is_positive())
    }
}

pub fn cone_inequalities(g: &MarkedGroebnerBasis) -> ConeInequalities {
    ConeInequalities::of(g)
}

/// Last point of the segment `[ω, τ]` in the cone, as a primitive integer
/// vector; `τ` when nothing cuts the segment.
pub fn next_weight(ineqs: &ConeInequalities, w: &WeightVector, tau: &WeightVector) -> Result<WeightVector> {
    if w.len() != tau.len() {
        return Err(Error::DimensionMismatch { expected: w.len(), got: tau.len() });
    }
    // t = a / (a − b) with a = ⟨v,ω⟩ ≥ 0 and b = ⟨v,τ⟩ < 0; keep (a, −b)
    let mut best: Option<(BigInt, BigInt)> = None;
    for v in ineqs.vectors() {
        let a = dot(v, w);
        if a.is_negative() {
            return Err(Error::OutsideCone);
        }
        let b = dot(v, tau);
        if !b.is_negative() {
            continue;
        }
        let nb = -b;
        let better = match &best {
            None => true,
            // a/(a+nb) < a'/(a'+nb')  ⟺  a·nb' < a'·nb
            Some((a0, nb0)) => &a * nb0 < a0 * &nb,
        };
        if better {
            best = Some((a, nb));
        }
    }
    match best {
        None => Ok(tau.clone()),
        Some((a, nb)) => {
            let p: Vec<BigInt> = w.iter().zip(tau.iter()).map(|(x, y)| &nb * x + &a * y).collect();
            WeightVector::new(p)
        }
    }
}

/// Initial forms of the elements at `ω`, keeping the markings.
pub fn initial_forms(g: &MarkedGroebnerBasis, w: &[BigInt]) -> Result<MarkedGroebnerBasis> {
    let mut out = Vec::with_capacity(g.len());
    for el in g.elements() {
        let f = initial_form(el.poly(), w)?;
        if f.coeff(el.marked()).is_none() {
            return Err(Error::OutsideCone);
        }
        out.push(MarkedPolynomial::new(f, el.marked().clone())?);
    }
    Ok(MarkedGroebnerBasis::from_elements(out))
}

/// `m − nf(m, H)` for each `m ∈ M` under `ord_h`, marked as in `M`. The
/// result generates the ideal of `H` but is not reduced.
pub fn lift(m: &MarkedGroebnerBasis, h: &MarkedGroebnerBasis, ord_h: &TermOrdering) -> Result<Vec<MarkedPolynomial>> {
    if !h.markings_agree_with(ord_h) {
        return Err(Error::MarkingInconsistent("basis does not match the given ordering".into()));
    }
    Ok(lift_unchecked(m, h, ord_h))
}

pub(crate) fn lift_unchecked(m: &MarkedGroebnerBasis, h: &MarkedGroebnerBasis, ord_h: &TermOrdering) -> Vec<MarkedPolynomial> {
    let polys = m.polynomials();
    let nfs = normal_forms_unchecked(&polys, h.elements(), ord_h);
    m.elements()
        .iter()
        .zip(polys.iter().zip(nfs))
        .map(|(el, (p, r))| {
            let lifted: Polynomial = p - &r;
            MarkedPolynomial::new(lifted, el.marked().clone()).expect("marking survives lifting")
        })
        .collect()
}

/// Position of `w` on the segment from `start` to `target`: the `t ∈ [0, 1]`
/// with `w ∥ (1 − t)·start + t·target`, or `None` if `w` is not a positive
/// combination of the two or the endpoints are parallel.
pub fn segment_parameter(w: &[BigInt], start: &[BigInt], target: &[BigInt]) -> Option<BigRational> {
    let n = w.len();
    let (mut i0, mut j0) = (None, None);
    'outer: for i in 0..n {
        for j in i + 1..n {
            if (&start[i] * &target[j] - &start[j] * &target[i]) != BigInt::zero() {
                i0 = Some(i);
                j0 = Some(j);
                break 'outer;
            }
        }
    }
    let (i, j) = (i0?, j0?);
    let det = &start[i] * &target[j] - &start[j] * &target[i];
    let a = BigRational::new(&w[i] * &target[j] - &w[j] * &target[i], det.clone());
    let b = BigRational::new(&start[i] * &w[j] - &start[j] * &w[i], det);
    let fits = (0..n).all(|k| {
        BigRational::from(start[k].clone()) * &a + BigRational::from(target[k].clone()) * &b
            == BigRational::from(w[k].clone())
    });
    if !fits || a.is_negative() || b.is_negative() || (a.is_zero() && b.is_zero()) {
        return None;
    }
    let s = &a + &b;
    Some(b / s)
}

/// Compares two points by their segment parameter; `None` if either is off
/// the segment.
pub fn segment_cmp(u: &[BigInt], v: &[BigInt], start: &[BigInt], target: &[BigInt]) -> Option<Ordering> {
    Some(segment_parameter(u, start, target)?.cmp(&segment_parameter(v, start, target)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::CoefficientField;
    use crate::monomial::Monomial;
    use crate::parse::parse_polynomial;
    use crate::poly::Ring;
    use std::sync::Arc;

    fn ring() -> Arc<Ring> {
        Ring::new(["x", "y"], CoefficientField::Rationals)
    }

    fn mp(t: &str, e: &[u32]) -> MarkedPolynomial {
        MarkedPolynomial::new(parse_polynomial(t, &ring()).unwrap(), Monomial::from_exponents(e)).unwrap()
    }

    fn iv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn wv(v: &[i64]) -> WeightVector {
        WeightVector::from_i64s(v).unwrap()
    }

    fn drl() -> MarkedGroebnerBasis {
        MarkedGroebnerBasis::from_elements(vec![mp("y^4 + x^3 - x^2 + x", &[0, 4]), mp("x^4", &[4, 0])])
    }

    fn lex_basis() -> MarkedGroebnerBasis {
        MarkedGroebnerBasis::from_elements(vec![mp("x + y^12 - y^8 + y^4", &[1, 0]), mp("y^16", &[0, 16])])
    }

    #[test]
    fn inequalities_of_running_bases() {
        let c = cone_inequalities(&drl());
        let mut got = c.vectors().to_vec();
        got.sort();
        let mut want = vec![iv(&[-3, 4]), iv(&[-1, 2]), iv(&[-1, 4])];
        want.sort();
        assert_eq!(got, want);
        let mut l = cone_inequalities(&lex_basis()).vectors().to_vec();
        l.sort();
        assert_eq!(l, vec![iv(&[1, -12]), iv(&[1, -8]), iv(&[1, -4])]);
        let mono = MarkedGroebnerBasis::from_elements(vec![mp("x^2", &[2, 0]), mp("y", &[0, 1])]);
        assert!(cone_inequalities(&mono).is_empty());
    }

    #[test]
    fn next_weight_examples() {
        let c = cone_inequalities(&drl());
        assert_eq!(next_weight(&c, &wv(&[1, 1]), &wv(&[1, 0])).unwrap(), wv(&[4, 3]));
        let single = ConeInequalities { vectors: vec![iv(&[-1, 2])] };
        assert_eq!(next_weight(&single, &wv(&[1, 1]), &wv(&[1, 0])).unwrap(), wv(&[2, 1]));
        let l = cone_inequalities(&lex_basis());
        assert_eq!(next_weight(&l, &wv(&[20, 1]), &wv(&[1, 0])).unwrap(), wv(&[1, 0]));
        assert!(matches!(next_weight(&l, &wv(&[1, 1]), &wv(&[1, 0])), Err(Error::OutsideCone)));
    }

    #[test]
    fn initial_forms_on_a_facet() {
        let got = initial_forms(&drl(), &iv(&[4, 3])).unwrap();
        let want = MarkedGroebnerBasis::from_elements(vec![mp("x^3 + y^4", &[0, 4]), mp("x^4", &[4, 0])]);
        assert_eq!(got, want);
        let interior = initial_forms(&drl(), &iv(&[1, 1])).unwrap();
        assert!(interior.elements().iter().all(|e| e.poly().len() == 1));
        assert!(matches!(initial_forms(&drl(), &iv(&[1, 0])), Err(Error::OutsideCone)));
    }

    #[test]
    fn lifting_examples() {
        let m = MarkedGroebnerBasis::from_elements(vec![mp("x^3 + y^4", &[3, 0]), mp("x*y^4", &[1, 4]), mp("x^4", &[4, 0])]);
        let lifted = lift(&m, &drl(), &TermOrdering::degrevlex(2)).unwrap();
        let got: Vec<Polynomial> = lifted.iter().map(|e| e.poly().clone()).collect();
        let p = |t: &str| parse_polynomial(t, &ring()).unwrap();
        assert!(got.contains(&p("x^3 - x^2 + x + y^4")));
        assert!(got.contains(&p("x*y^4 - x^3 + x^2")));
        assert!(got.contains(&p("x^4")));
        assert!(lift(&m, &drl(), &TermOrdering::lex(2)).is_err());
    }

    #[test]
    fn segment_parameters() {
        let (s, t) = (iv(&[1, 1]), iv(&[1, 0]));
        let r = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(segment_parameter(&iv(&[1, 1]), &s, &t), Some(r(0, 1)));
        assert_eq!(segment_parameter(&iv(&[4, 3]), &s, &t), Some(r(1, 4)));
        assert_eq!(segment_parameter(&iv(&[4, 1]), &s, &t), Some(r(3, 4)));
        assert_eq!(segment_parameter(&iv(&[12, 1]), &s, &t), Some(r(11, 12)));
        assert_eq!(segment_parameter(&iv(&[1, 0]), &s, &t), Some(r(1, 1)));
        assert_eq!(segment_parameter(&iv(&[1, 2]), &s, &t), None);
        assert_eq!(segment_parameter(&iv(&[1, 2, 3]), &iv(&[1, 1, 1]), &iv(&[2, 2, 2])), None);
    }
}

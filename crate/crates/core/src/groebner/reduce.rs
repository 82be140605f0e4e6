//! Multivariate division: ordered normal forms, marking-only reduction and
//! S-polynomials.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Coeff, CoefficientField};
use crate::monomial::Monomial;
use crate::ordering::TermOrdering;
use crate::poly::{Polynomial, Ring};

use super::{MarkedGroebnerBasis, MarkedPolynomial};

type Terms = Vec<(Monomial, Coeff)>;

struct Divisor {
    lead: Monomial,
    mask: u64,
    active: bool,
    /// Tail terms, ascending under the active ordering.
    tail: Terms,
}

/// Division by monic divisors whose leads are their leading terms under a
/// fixed ordering. Always reduces the greatest reducible term of the running
/// remainder; among several divisors the first one wins.
pub(crate) struct OrderedReducer<'a> {
    ord: &'a TermOrdering,
    field: CoefficientField,
    divisors: Vec<Divisor>,
}

impl<'a> OrderedReducer<'a> {
    pub(crate) fn new(ord: &'a TermOrdering, field: CoefficientField) -> Self {
        OrderedReducer { ord, field, divisors: Vec::new() }
    }

    /// Adds a monic divisor given as (lead, tail terms in any order).
    pub(crate) fn push(&mut self, lead: Monomial, mut tail: Terms) {
        tail.sort_by(|a, b| self.ord.cmp(&a.0, &b.0));
        let mask = lead.support_mask();
        self.divisors.push(Divisor { lead, mask, active: true, tail });
    }

    pub(crate) fn field(&self) -> CoefficientField {
        self.field
    }

    pub(crate) fn set_active(&mut self, i: usize, active: bool) {
        self.divisors[i].active = active;
    }

    pub(crate) fn tail(&self, i: usize) -> &[(Monomial, Coeff)] {
        &self.divisors[i].tail
    }

    pub(crate) fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        let mask = m.support_mask();
        self.divisors.iter().position(|d| d.active && d.mask & !mask == 0 && d.lead.divides(m))
    }

    pub(crate) fn sort_asc(&self, terms: &mut Terms) {
        terms.sort_by(|a, b| self.ord.cmp(&a.0, &b.0));
    }

    /// `p + c · x^q · tail`, all ascending.
    pub(crate) fn merge_scaled(&self, p: Terms, c: &Coeff, q: &Monomial, tail: &[(Monomial, Coeff)]) -> Terms {
        let field = self.field;
        let mut out = Vec::with_capacity(p.len() + tail.len());
        let mut pi = p.into_iter().peekable();
        let mut ti = tail.iter().map(|(m, d)| (m.mul(q), field.mul(c, d))).peekable();
        loop {
            match (pi.peek(), ti.peek()) {
                (Some(a), Some(b)) => match self.ord.cmp(&a.0, &b.0) {
                    std::cmp::Ordering::Less => out.push(pi.next().unwrap()),
                    std::cmp::Ordering::Greater => out.push(ti.next().unwrap()),
                    std::cmp::Ordering::Equal => {
                        let (m, x) = pi.next().unwrap();
                        let (_, y) = ti.next().unwrap();
                        let s = field.add(&x, &y);
                        if !field.is_zero(&s) {
                            out.push((m, s));
                        }
                    }
                },
                (Some(_), None) => out.push(pi.next().unwrap()),
                (None, Some(_)) => out.push(ti.next().unwrap()),
                (None, None) => break,
            }
        }
        out
    }

    /// Full reduction of `p` (ascending). Returns the remainder ascending.
    /// When `quotients` is given, quotient terms are appended per divisor.
    pub(crate) fn reduce(&self, p: Terms, mut quotients: Option<&mut Vec<Terms>>) -> Terms {
        let mut bucket = GeoBucket::default();
        bucket.add(self, p);
        let mut rem_desc: Terms = Vec::new();
        while let Some((lt, lc)) = bucket.pop_leading(self) {
            match self.find_divisor(&lt) {
                Some(i) => {
                    let d = &self.divisors[i];
                    let q = lt.checked_div(&d.lead).unwrap();
                    let neg = self.field.neg(&lc);
                    if !d.tail.is_empty() {
                        bucket.add(self, self.merge_scaled(Vec::new(), &neg, &q, &d.tail));
                    }
                    if let Some(qs) = quotients.as_deref_mut() {
                        qs[i].push((q, lc));
                    }
                }
                None => rem_desc.push((lt, lc)),
            }
        }
        rem_desc.reverse();
        rem_desc
    }
}

impl OrderedReducer<'_> {
    /// Full reduction that also tracks the sugar: each step raises `sugar`
    /// to the degree of the multiplier plus the sugar of the divisor used.
    pub(crate) fn reduce_with_sugar(&self, p: Terms, sugar: &mut u64, sugars: &[u64]) -> Terms {
        let mut bucket = GeoBucket::default();
        bucket.add(self, p);
        let mut rem_desc: Terms = Vec::new();
        while let Some((lt, lc)) = bucket.pop_leading(self) {
            match self.find_divisor(&lt) {
                Some(i) => {
                    let d = &self.divisors[i];
                    let q = lt.checked_div(&d.lead).unwrap();
                    let qd = q.degree_u64().unwrap_or(u64::MAX);
                    *sugar = (*sugar).max(qd.saturating_add(sugars[i]));
                    if !d.tail.is_empty() {
                        let neg = self.field.neg(&lc);
                        bucket.add(self, self.merge_scaled(Vec::new(), &neg, &q, &d.tail));
                    }
                }
                None => rem_desc.push((lt, lc)),
            }
        }
        rem_desc.reverse();
        rem_desc
    }
}

/// Geometric buckets of ascending term vectors; bucket `i` holds at most
/// `4^(i+1)` terms, so each term is merged O(log n) times.
#[derive(Default)]
struct GeoBucket {
    buckets: Vec<Terms>,
}

impl GeoBucket {
    fn cap(i: usize) -> usize {
        4usize.saturating_pow(i as u32 + 1)
    }

    fn add(&mut self, r: &OrderedReducer<'_>, p: Terms) {
        if p.is_empty() {
            return;
        }
        let mut i = 0;
        while Self::cap(i) < p.len() {
            i += 1;
        }
        let mut cur = p;
        loop {
            if self.buckets.len() <= i {
                self.buckets.resize_with(i + 1, Vec::new);
            }
            let old = std::mem::take(&mut self.buckets[i]);
            cur = if old.is_empty() { cur } else { r.merge(old, cur) };
            if cur.len() <= Self::cap(i) {
                self.buckets[i] = cur;
                return;
            }
            i += 1;
        }
    }

    fn pop_leading(&mut self, r: &OrderedReducer<'_>) -> Option<(Monomial, Coeff)> {
        loop {
            let mut best: Option<usize> = None;
            for (i, b) in self.buckets.iter().enumerate() {
                let Some(t) = b.last() else { continue };
                best = match best {
                    Some(j) if r.ord.cmp(&self.buckets[j].last().unwrap().0, &t.0).is_ge() => Some(j),
                    _ => Some(i),
                };
            }
            let j = best?;
            let (m, mut c) = self.buckets[j].pop().unwrap();
            for (i, b) in self.buckets.iter_mut().enumerate() {
                if i != j && b.last().is_some_and(|t| t.0 == m) {
                    let (_, d) = b.pop().unwrap();
                    c = r.field.add(&c, &d);
                }
            }
            if !r.field.is_zero(&c) {
                return Some((m, c));
            }
        }
    }
}

impl OrderedReducer<'_> {
    fn merge(&self, a: Terms, b: Terms) -> Terms {
        let field = self.field;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ai = a.into_iter().peekable();
        let mut bi = b.into_iter().peekable();
        loop {
            match (ai.peek(), bi.peek()) {
                (Some(x), Some(y)) => match self.ord.cmp(&x.0, &y.0) {
                    std::cmp::Ordering::Less => out.push(ai.next().unwrap()),
                    std::cmp::Ordering::Greater => out.push(bi.next().unwrap()),
                    std::cmp::Ordering::Equal => {
                        let (m, x) = ai.next().unwrap();
                        let (_, y) = bi.next().unwrap();
                        let s = field.add(&x, &y);
                        if !field.is_zero(&s) {
                            out.push((m, s));
                        }
                    }
                },
                (Some(_), None) => out.push(ai.next().unwrap()),
                (None, Some(_)) => out.push(bi.next().unwrap()),
                (None, None) => break,
            }
        }
        out
    }
}

pub(crate) fn to_polynomial(ring: &Arc<Ring>, mut terms: Terms) -> Polynomial {
    terms.sort_by(|a, b| a.0.cmp(&b.0));
    Polynomial::from_sorted_unchecked(ring, terms)
}

fn check_markings(g: &[MarkedPolynomial], ord: &TermOrdering) -> Result<()> {
    for el in g {
        let (lead, _) = ord.leading_term(el.poly())?;
        if lead != el.marked() {
            return Err(Error::MarkingInconsistent(el.marked().to_string()));
        }
    }
    Ok(())
}

fn reducer_for<'a>(g: &[MarkedPolynomial], ord: &'a TermOrdering, field: CoefficientField) -> OrderedReducer<'a> {
    let mut r = OrderedReducer::new(ord, field);
    for el in g {
        r.push(el.marked().clone(), el.tail().into_terms());
    }
    r
}

/// Remainder of `f` on division by `g` under `ord`; every marking must be
/// the leading exponent of its polynomial under `ord`.
pub fn normal_form(f: &Polynomial, g: &[MarkedPolynomial], ord: &TermOrdering) -> Result<Polynomial> {
    check_markings(g, ord)?;
    Ok(normal_forms_unchecked(std::slice::from_ref(f), g, ord).pop().unwrap())
}

/// Normal forms of several polynomials with one shared reducer; markings
/// are trusted to agree with `ord`.
pub(crate) fn normal_forms_unchecked(fs: &[Polynomial], g: &[MarkedPolynomial], ord: &TermOrdering) -> Vec<Polynomial> {
    let Some(first) = fs.first() else { return Vec::new() };
    let r = reducer_for(g, ord, first.field());
    fs.iter()
        .map(|f| {
            let mut p: Terms = f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
            r.sort_asc(&mut p);
            to_polynomial(f.ring(), r.reduce(p, None))
        })
        .collect()
}

/// Quotients and remainder with `f = Σ qᵢ·gᵢ + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Division {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

/// Division with cofactor bookkeeping.
pub fn divide(f: &Polynomial, g: &[MarkedPolynomial], ord: &TermOrdering) -> Result<Division> {
    check_markings(g, ord)?;
    let r = reducer_for(g, ord, f.field());
    let mut p: Terms = f.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    r.sort_asc(&mut p);
    let mut qs = vec![Vec::new(); g.len()];
    let rem = r.reduce(p, Some(&mut qs));
    Ok(Division {
        quotients: qs.into_iter().map(|q| Polynomial::from_terms(f.ring(), q)).collect(),
        remainder: to_polynomial(f.ring(), rem),
    })
}

/// `x^(γ−α)·f − x^(γ−β)·g` with `γ = lcm(α, β)` of the markings.
pub fn s_polynomial(f: &MarkedPolynomial, g: &MarkedPolynomial) -> Polynomial {
    let lcm = f.marked().lcm(g.marked());
    let one = f.poly().field().one();
    let a = f.poly().mul_term(&lcm.checked_div(f.marked()).unwrap(), &one);
    let b = g.poly().mul_term(&lcm.checked_div(g.marked()).unwrap(), &one);
    &a - &b
}

/// Selection key for marking-only reduction: total degree, then lex.
#[derive(Clone, PartialEq, Eq)]
struct DegLex(Monomial);

impl PartialOrd for DegLex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DegLex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.deglex_cmp(&other.0)
    }
}

/// Steps after which the reduction starts remembering states.
const CYCLE_GUARD_AFTER: usize = 1_000_000;

/// Reduction that only looks at markings, no term ordering. Terminates
/// whenever the markings are those of some term ordering.
pub(crate) struct MarkedReducer {
    field: CoefficientField,
    divisors: Vec<Divisor>,
}

impl MarkedReducer {
    pub(crate) fn new(field: CoefficientField, elements: &[MarkedPolynomial]) -> Self {
        let divisors = elements
            .iter()
            .map(|e| Divisor {
                lead: e.marked().clone(),
                mask: e.marked().support_mask(),
                active: true,
                tail: e.tail().into_terms(),
            })
            .collect();
        MarkedReducer { field, divisors }
    }

    fn find_divisor(&self, m: &Monomial, skip: Option<usize>) -> Option<usize> {
        let mask = m.support_mask();
        self.divisors
            .iter()
            .enumerate()
            .position(|(i, d)| Some(i) != skip && d.mask & !mask == 0 && d.lead.divides(m))
    }

    /// Reduces until no term is divisible by a marking (ignoring divisor
    /// `skip`). Returns the remainder in storage order.
    pub(crate) fn reduce(&self, f: impl IntoIterator<Item = (Monomial, Coeff)>, skip: Option<usize>) -> Result<Terms> {
        let field = self.field;
        let mut pending: BTreeMap<DegLex, Coeff> = BTreeMap::new();
        let mut done: HashMap<Monomial, Coeff> = HashMap::new();

        let insert = |pending: &mut BTreeMap<DegLex, Coeff>, done: &mut HashMap<Monomial, Coeff>, m: Monomial, c: Coeff| {
            if let Some(e) = done.get_mut(&m) {
                *e = field.add(e, &c);
                if field.is_zero(e) {
                    done.remove(&m);
                }
                return;
            }
            let key = DegLex(m);
            if let Some(e) = pending.get_mut(&key) {
                *e = field.add(e, &c);
                if field.is_zero(e) {
                    pending.remove(&key);
                }
                return;
            }
            if self.find_divisor(&key.0, skip).is_some() {
                pending.insert(key, c);
            } else {
                done.insert(key.0, c);
            }
        };

        for (m, c) in f {
            if !field.is_zero(&c) {
                insert(&mut pending, &mut done, m, c);
            }
        }

        let mut steps = 0usize;
        let mut seen: HashSet<u64> = HashSet::new();
        while let Some((DegLex(m), c)) = pending.pop_last() {
            steps += 1;
            if steps > CYCLE_GUARD_AFTER {
                let mut h = DefaultHasher::new();
                m.hash(&mut h);
                c.hash(&mut h);
                for (k, v) in &pending {
                    k.0.hash(&mut h);
                    v.hash(&mut h);
                }
                if !seen.insert(h.finish()) {
                    return Err(Error::ReductionCycle);
                }
            }
            let i = self.find_divisor(&m, skip).expect("pending terms are reducible");
            let d = &self.divisors[i];
            let q = m.checked_div(&d.lead).unwrap();
            let neg = field.neg(&c);
            for (t, e) in &d.tail {
                insert(&mut pending, &mut done, t.mul(&q), field.mul(&neg, e));
            }
        }
        let mut out: Terms = done.into_iter().collect();
        out.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(out)
    }
}

/// Remainder of `f` modulo `g` using only the markings of `g`: the
/// reducible term that is greatest by total degree then lex is reduced
/// first, by the divisor of smallest index.
pub fn marked_normal_form(f: &Polynomial, g: &MarkedGroebnerBasis) -> Result<Polynomial> {
    Ok(marked_normal_forms(std::slice::from_ref(f), g)?.pop().unwrap())
}

pub(crate) fn marked_normal_forms(fs: &[Polynomial], g: &MarkedGroebnerBasis) -> Result<Vec<Polynomial>> {
    let Some(first) = fs.first() else { return Ok(Vec::new()) };
    let r = MarkedReducer::new(first.field(), g.elements());
    fs.iter()
        .map(|f| {
            let terms = r.reduce(f.terms().map(|(m, c)| (m.clone(), c.clone())), None)?;
            Ok(Polynomial::from_sorted_unchecked(f.ring(), terms))
        })
        .collect()
}

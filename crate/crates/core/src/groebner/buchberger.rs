//! Buchberger's algorithm with the Gebauer–Möller pair update, and
//! interreduction of marked bases.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::monomial::Monomial;
use crate::ordering::TermOrdering;
use crate::poly::{Polynomial, Ring};

use super::reduce::{to_polynomial, MarkedReducer, OrderedReducer};
use super::{Ideal, MarkedGroebnerBasis, MarkedPolynomial};

type Terms = Vec<(Monomial, Coeff)>;

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u64,
}

struct State<'a> {
    ord: &'a TermOrdering,
    reducer: OrderedReducer<'a>,
    leads: Vec<Monomial>,
    sugar: Vec<u64>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    /// Select by sugar first; otherwise by the lcm under `ord`.
    by_sugar: bool,
}

impl<'a> State<'a> {
    /// Inserts a new monic element (lead, tail) and updates the pair set.
    fn add(&mut self, lead: Monomial, tail: Terms, sugar: u64) {
        let h = self.leads.len();
        self.reducer.push(lead.clone(), tail);
        self.leads.push(lead);
        self.sugar.push(sugar);
        self.active.push(true);
        let hl = self.leads[h].clone();

        let candidates: Vec<(usize, Monomial)> = (0..h)
            .filter(|&g| self.active[g])
            .map(|g| (g, hl.lcm(&self.leads[g])))
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (k, (g, l)) in candidates.iter().enumerate() {
            let coprime = hl.is_coprime(&self.leads[*g]);
            let dominated = candidates[k + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2, _)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone(), coprime));
            }
        }
        // chain criterion against old pairs
        let leads = &self.leads;
        self.pairs.retain(|p| {
            !(hl.divides(&p.lcm)
                && hl.lcm(&leads[p.i]) != p.lcm
                && hl.lcm(&leads[p.j]) != p.lcm)
        });
        // first criterion drops coprime pairs
        for (g, l, coprime) in kept {
            if !coprime {
                let sugar = self.pair_sugar(g, h, &l);
                self.pairs.push(Pair { i: g, j: h, lcm: l, sugar });
            }
        }
        for g in 0..h {
            if self.active[g] && hl.divides(&self.leads[g]) {
                self.active[g] = false;
                self.reducer.set_active(g, false);
            }
        }
    }

    /// Sugar of the S-polynomial of elements `i` and `j`.
    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u64 {
        let td = lcm.degree_u64().unwrap_or(u64::MAX);
        let si = self.sugar[i].saturating_add(td - self.leads[i].degree_u64().unwrap_or(0).min(td));
        let sj = self.sugar[j].saturating_add(td - self.leads[j].degree_u64().unwrap_or(0).min(td));
        si.max(sj)
    }

    /// Smallest sugar when `by_sugar`, then smallest lcm, then index.
    fn next_pair(&mut self) -> Option<Pair> {
        let ord = self.ord;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            let first = if self.by_sugar { p.sugar.cmp(&q.sugar) } else { std::cmp::Ordering::Equal };
            first
                .then_with(|| ord.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    fn s_poly(&self, p: &Pair) -> Terms {
        let field = self.reducer_field();
        let qi = p.lcm.checked_div(&self.leads[p.i]).unwrap();
        let qj = p.lcm.checked_div(&self.leads[p.j]).unwrap();
        let a: Terms = self.reducer.tail(p.i).iter().map(|(m, c)| (m.mul(&qi), c.clone())).collect();
        let minus_one = field.neg(&field.one());
        self.reducer.merge_scaled(a, &minus_one, &qj, self.reducer.tail(p.j))
    }

    fn reducer_field(&self) -> crate::field::CoefficientField {
        self.reducer.field()
    }

    /// Reduces `p` and, if nonzero, adds it as a new monic element.
    fn reduce_and_add(&mut self, p: Terms, mut sugar: u64) {
        let mut r = self.reducer.reduce_with_sugar(p, &mut sugar, &self.sugar);
        let Some((lead, lc)) = r.pop() else { return };
        let field = self.reducer_field();
        if !field.is_one(&lc) {
            let inv = field.inv(&lc).unwrap();
            for t in r.iter_mut() {
                t.1 = field.mul(&t.1, &inv);
            }
        }
        self.add(lead, r, sugar);
    }
}

/// Reduced marked Gröbner basis of the ideal generated by `gens` under `ord`.
///
/// Orderings that are not graded by a positive weight (lex, elimination
/// orderings) are handled through the homogenized ideal, which avoids the
/// degree blow-up of a direct computation.
pub(crate) fn groebner_basis(ring: &Arc<Ring>, gens: &[Polynomial], ord: &TermOrdering) -> MarkedGroebnerBasis {
    let graded = ord.first_row().iter().all(|x| x.is_positive());
    let homogeneous = gens.iter().all(is_homogeneous);
    let g = if graded || homogeneous {
        compute(ring, gens, ord, !graded)
    } else {
        via_homogenization(ring, gens, ord)
    };
    g.with_provenance(ord.name())
}

fn is_homogeneous(f: &Polynomial) -> bool {
    let mut degs = f.support().map(|m| m.total_degree());
    let Some(d) = degs.next() else { return true };
    degs.all(|e| e == d)
}

fn with_exponent(m: &Monomial, e: BigUint) -> Monomial {
    match m.small() {
        Some(s) if e.to_u32().is_some() => {
            let mut v = s.to_vec();
            v.push(e.to_u32().unwrap());
            Monomial::from_exponents(&v)
        }
        _ => {
            let mut v = m.exponents();
            v.push(e);
            Monomial::from_big(v)
        }
    }
}

fn without_last(m: &Monomial) -> Monomial {
    match m.small() {
        Some(s) => Monomial::from_exponents(&s[..s.len() - 1]),
        None => {
            let mut v = m.exponents();
            v.pop();
            Monomial::from_big(v)
        }
    }
}

/// Basis of the homogenized ideal under `ord` with the extra variable as
/// last tie-break; setting it to one gives a basis under `ord`.
fn via_homogenization(ring: &Arc<Ring>, gens: &[Polynomial], ord: &TermOrdering) -> MarkedGroebnerBasis {
    let n = ring.nvars();
    let mut vars = ring.vars.clone();
    vars.push(format!("{}_h", vars.join("")));
    let hring = Ring::new(vars, ring.field);
    let mut rows: Vec<Vec<BigInt>> = ord
        .matrix()
        .iter()
        .map(|r| r.iter().cloned().chain(std::iter::once(BigInt::zero())).collect())
        .collect();
    rows.push((0..=n).map(|j| BigInt::from((j == n) as u8)).collect());
    let hord = TermOrdering::from_matrix(rows).expect("extension of a valid ordering");
    let hgens: Vec<Polynomial> = gens
        .iter()
        .map(|g| {
            let d = g.support().map(|m| m.total_degree()).max().unwrap_or_default();
            Polynomial::from_terms(&hring, g.terms().map(|(m, c)| (with_exponent(m, &d - m.total_degree()), c.clone())))
        })
        .collect();
    let hg = compute(&hring, &hgens, &hord, true);
    let candidates = hg
        .elements()
        .iter()
        .map(|e| {
            let p = Polynomial::from_terms(ring, e.poly().terms().map(|(m, c)| (without_last(m), c.clone())));
            (p, without_last(e.marked()))
        })
        .collect();
    interreduce_ordered(candidates, ord).expect("markings stay leading after dehomogenization")
}

fn compute(ring: &Arc<Ring>, gens: &[Polynomial], ord: &TermOrdering, by_sugar: bool) -> MarkedGroebnerBasis {
    let mut st = State {
        ord,
        reducer: OrderedReducer::new(ord, ring.field),
        leads: Vec::new(),
        sugar: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        by_sugar,
    };
    for g in gens {
        let mut p: Terms = g.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        st.reducer.sort_asc(&mut p);
        let sugar = g.support().map(|m| m.degree_u64().unwrap_or(u64::MAX)).max().unwrap_or(0);
        st.reduce_and_add(p, sugar);
    }
    while let Some(pair) = st.next_pair() {
        let s = st.s_poly(&pair);
        st.reduce_and_add(s, pair.sugar);
    }

    let live: Vec<usize> = (0..st.leads.len()).filter(|&i| st.active[i]).collect();
    let mut elements = Vec::with_capacity(live.len());
    for &i in &live {
        st.reducer.set_active(i, false);
        let tail = st.reducer.reduce(st.reducer.tail(i).to_vec(), None);
        st.reducer.set_active(i, true);
        let mut terms = tail;
        terms.push((st.leads[i].clone(), ring.field.one()));
        let poly = to_polynomial(ring, terms);
        elements.push(MarkedPolynomial::new(poly, st.leads[i].clone()).expect("monic by construction"));
    }
    MarkedGroebnerBasis::from_elements(elements)
}

/// The reduced marked Gröbner basis of `ideal` with respect to `ord`.
pub fn buchberger(ideal: &Ideal, ord: &TermOrdering) -> Result<MarkedGroebnerBasis> {
    if ideal.ring().nvars() != ord.nvars() {
        return Err(Error::DimensionMismatch { expected: ideal.ring().nvars(), got: ord.nvars() });
    }
    Ok(groebner_basis(ideal.ring(), ideal.generators(), ord))
}

/// Turns marked candidates into a marked Gröbner basis: drops elements whose
/// marking is divisible by another marking, reduces every tail by the
/// remaining markings, and rescales to monic. The markings must be those of
/// a common term ordering.
pub fn interreduce(candidates: Vec<(Polynomial, Monomial)>) -> Result<MarkedGroebnerBasis> {
    let Some(first) = candidates.first() else {
        return Ok(MarkedGroebnerBasis::from_elements(Vec::new()));
    };
    let ring = first.0.ring().clone();
    let mut monic = Vec::with_capacity(candidates.len());
    for (p, m) in candidates {
        monic.push(MarkedPolynomial::monic(p, m)?);
    }
    let keep: Vec<MarkedPolynomial> = monic
        .iter()
        .enumerate()
        .filter(|(i, a)| {
            !monic.iter().enumerate().any(|(j, b)| {
                j != *i && b.marked().divides(a.marked()) && (b.marked() != a.marked() || j < *i)
            })
        })
        .map(|(_, a)| a.clone())
        .collect();
    let reducer = MarkedReducer::new(ring.field, &keep);
    let mut out = Vec::with_capacity(keep.len());
    for (k, el) in keep.iter().enumerate() {
        let mut terms = reducer.reduce(el.tail().into_terms(), Some(k))?;
        terms.push((el.marked().clone(), ring.field.one()));
        out.push(MarkedPolynomial::new(to_polynomial(&ring, terms), el.marked().clone())?);
    }
    Ok(MarkedGroebnerBasis::from_elements(out))
}

/// Interreduction when the markings are the leading exponents under `ord`;
/// same result as [`interreduce`] but divides in `ord`.
pub(crate) fn interreduce_ordered(candidates: Vec<(Polynomial, Monomial)>, ord: &TermOrdering) -> Result<MarkedGroebnerBasis> {
    let Some(first) = candidates.first() else {
        return Ok(MarkedGroebnerBasis::from_elements(Vec::new()));
    };
    let ring = first.0.ring().clone();
    let field = ring.field;
    let mut monic = Vec::with_capacity(candidates.len());
    for (p, m) in candidates {
        monic.push(MarkedPolynomial::monic(p, m)?);
    }
    let keep: Vec<&MarkedPolynomial> = monic
        .iter()
        .enumerate()
        .filter(|(i, a)| {
            !monic.iter().enumerate().any(|(j, b)| {
                j != *i && b.marked().divides(a.marked()) && (b.marked() != a.marked() || j < *i)
            })
        })
        .map(|(_, a)| a)
        .collect();
    let mut reducer = OrderedReducer::new(ord, field);
    for el in &keep {
        reducer.push(el.marked().clone(), el.tail().into_terms());
    }
    let mut out = Vec::with_capacity(keep.len());
    for (k, el) in keep.iter().enumerate() {
        reducer.set_active(k, false);
        let mut terms = reducer.reduce(reducer.tail(k).to_vec(), None);
        reducer.set_active(k, true);
        terms.push((el.marked().clone(), field.one()));
        out.push(MarkedPolynomial::new(to_polynomial(&ring, terms), el.marked().clone())?);
    }
    Ok(MarkedGroebnerBasis::from_elements(out))
}

/// Minimal monomial generators of the leading ideal, descending under `ord`.
pub fn leading_ideal(ideal: &Ideal, ord: &TermOrdering) -> Result<Vec<Monomial>> {
    let g = buchberger(ideal, ord)?;
    let mut m = g.markings();
    m.sort_by(|a, b| ord.cmp(b, a));
    Ok(m)
}

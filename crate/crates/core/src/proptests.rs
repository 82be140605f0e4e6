//! Randomised checks of the algebraic invariants.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::groebner::{buchberger, divide, interreduce, normal_form, s_polynomial};
use crate::io::IdealFile;
use crate::walk::{generic_walk, standard_walk};
use crate::{parse_polynomial, CoefficientField, Ideal, Monomial, OrderingSpec, Polynomial, Ring, TermOrdering};

fn ring(n: usize, field: CoefficientField) -> Arc<Ring> {
    Ring::new(["x", "y", "z", "w"].iter().take(n).copied(), field)
}

/// Exponent vector of total degree at most `max_deg`.
fn random_monomial(rng: &mut impl Rng, n: usize, max_deg: u32) -> Monomial {
    let d = rng.gen_range(0..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(&e)
}

/// Nonzero polynomial with up to `max_terms` terms and coefficients in [-5, 5].
fn random_poly(rng: &mut impl Rng, ring: &Arc<Ring>, max_terms: usize, max_deg: u32) -> Polynomial {
    loop {
        let k = rng.gen_range(1..=max_terms);
        let terms: Vec<_> = (0..k)
            .map(|_| {
                let c = loop {
                    let c = rng.gen_range(-5i64..=5);
                    if c != 0 {
                        break c;
                    }
                };
                (random_monomial(rng, ring.nvars(), max_deg), ring.field.from_i64(c))
            })
            .collect();
        let p = Polynomial::from_terms(ring, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// 2 or 3 variables, 1 to 3 generators of total degree at most 3.
fn random_ideal(rng: &mut impl Rng, field: CoefficientField) -> Ideal {
    let n = rng.gen_range(2..=3);
    let r = ring(n, field);
    let k = rng.gen_range(1..=3);
    Ideal::new((0..k).map(|_| random_poly(rng, &r, 4, 3)).collect()).unwrap()
}

fn field(prime: bool) -> CoefficientField {
    if prime {
        CoefficientField::prime(32003).unwrap()
    } else {
        CoefficientField::Rationals
    }
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0u32..8, 3).prop_map(|e| Monomial::from_exponents(&e))
}

fn ordering() -> impl Strategy<Value = TermOrdering> {
    prop_oneof![
        Just(TermOrdering::lex(3)),
        Just(TermOrdering::degrevlex(3)),
        (prop::collection::vec(0i64..20, 3), any::<bool>())
            .prop_filter("nonzero weight", |(w, _)| w.iter().any(|&x| x != 0))
            .prop_map(|(w, lex)| {
                let inner = if lex { OrderingSpec::Lex } else { OrderingSpec::DegRevLex };
                TermOrdering::make(&OrderingSpec::weight(w.into_iter().map(BigInt::from).collect(), inner), 3).unwrap()
            }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn ordering_is_a_monomial_order(ord in ordering(), a in monomial(), b in monomial(), c in monomial()) {
        let ab = ord.cmp(&a, &b);
        prop_assert_eq!(ord.cmp(&b, &a), ab.reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        prop_assert_eq!(ord.cmp(&a.mul(&c), &b.mul(&c)), ab);
        prop_assert_ne!(ord.cmp(&Monomial::one(3), &a), Ordering::Greater);
        if ab != Ordering::Greater && ord.cmp(&b, &c) != Ordering::Greater {
            prop_assert_ne!(ord.cmp(&a, &c), Ordering::Greater);
        }
    }

    #[test]
    fn buchberger_output_is_a_reduced_basis(seed in any::<u64>(), prime in any::<bool>(), lex in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ideal = random_ideal(&mut rng, field(prime));
        let n = ideal.ring().nvars();
        let ord = if lex { TermOrdering::lex(n) } else { TermOrdering::degrevlex(n) };
        let g = buchberger(&ideal, &ord).unwrap();
        g.check().unwrap();
        prop_assert!(g.markings_agree_with(&ord));
        for f in ideal.generators() {
            prop_assert!(normal_form(f, g.elements(), &ord).unwrap().is_zero());
        }
        let els = g.elements();
        for i in 0..els.len() {
            for j in i + 1..els.len() {
                prop_assert!(normal_form(&s_polynomial(&els[i], &els[j]), els, &ord).unwrap().is_zero());
            }
        }
        let again = interreduce(els.iter().map(|e| (e.poly().clone(), e.marked().clone())).collect()).unwrap();
        prop_assert_eq!(again, g);
    }

    #[test]
    fn division_cofactors(seed in any::<u64>(), prime in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ideal = random_ideal(&mut rng, field(prime));
        let ord = TermOrdering::degrevlex(ideal.ring().nvars());
        let g = buchberger(&ideal, &ord).unwrap();
        let f = random_poly(&mut rng, ideal.ring(), 6, 5);
        let d = divide(&f, g.elements(), &ord).unwrap();
        let mut sum = d.remainder.clone();
        for (q, e) in d.quotients.iter().zip(g.elements()) {
            sum = &sum + &(q * e.poly());
        }
        prop_assert_eq!(sum, f);
    }

    #[test]
    fn walks_reach_weighted_targets(seed in any::<u64>(), w in prop::collection::vec(1i64..6, 3)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ideal = random_ideal(&mut rng, field(true));
        let n = ideal.ring().nvars();
        let w: Vec<BigInt> = w[..n].iter().map(|&x| BigInt::from(x)).collect();
        let target = TermOrdering::make(&OrderingSpec::weight(w, OrderingSpec::Lex), n).unwrap();
        let start = TermOrdering::degrevlex(n);
        let direct = buchberger(&ideal, &target).unwrap();
        prop_assert_eq!(&standard_walk(&ideal, &start, &target).unwrap().0, &direct);
        prop_assert_eq!(&generic_walk(&ideal, &start, &target).unwrap().0, &direct);
        prop_assert_eq!(&standard_walk(&ideal, &TermOrdering::lex(n), &target).unwrap().0, &direct);
    }

    #[test]
    fn ideal_file_round_trip(seed in any::<u64>(), prime in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let ideal = random_ideal(&mut rng, field(prime));
        let file = IdealFile { ideal, orderings: [("s".to_string(), OrderingSpec::DegRevLex)].into_iter().collect() };
        let again = IdealFile::from_json_str(&file.to_json_string()).unwrap();
        prop_assert_eq!(&again, &file);
        for g in file.ideal.generators() {
            prop_assert_eq!(&parse_polynomial(&g.to_string(), g.ring()).unwrap(), g);
        }
    }
}

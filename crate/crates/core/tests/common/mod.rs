use std::sync::Arc;

use gwalk_core::{CoefficientField, Ideal, Monomial, Polynomial, Ring};
use rand::Rng;

pub fn ring(n: usize, field: CoefficientField) -> Arc<Ring> {
    Ring::new(["x", "y", "z", "w"].iter().take(n).copied(), field)
}

/// Exponent vector of total degree at most `max_deg`.
pub fn random_monomial(rng: &mut impl Rng, n: usize, max_deg: u32) -> Monomial {
    let d = rng.gen_range(0..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(&e)
}

/// Nonzero polynomial with up to `max_terms` terms and coefficients in [-5, 5].
pub fn random_poly(rng: &mut impl Rng, ring: &Arc<Ring>, max_terms: usize, max_deg: u32) -> Polynomial {
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
pub fn random_ideal(rng: &mut impl Rng, field: CoefficientField) -> Ideal {
    let n = rng.gen_range(2..=3);
    let r = ring(n, field);
    let k = rng.gen_range(1..=3);
    Ideal::new((0..k).map(|_| random_poly(rng, &r, 4, 3)).collect()).unwrap()
}

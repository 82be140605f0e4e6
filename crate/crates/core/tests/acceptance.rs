//! Acceptance checks. Each criterion prints one PASS/FAIL line; the binary
//! exits nonzero when any criterion fails.

mod common;

use std::cmp::Ordering;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use gwalk_core::bench::{format_report, run_bench, BenchAlgorithm, BenchOptions, Outcome};
use gwalk_core::groebner::{buchberger, divide, interreduce, leading_ideal, normal_form, s_polynomial};
use gwalk_core::systems::{gen_cyclic, gen_katsura, BENCH_PRIME};
use gwalk_core::walk::{
    generic_walk, generic_walk_recorded, initial_forms, segment_parameter, standard_walk, standard_walk_recorded, WalkTrace,
};
use gwalk_core::{
    parse_polynomial, CoefficientField, Ideal, MarkedGroebnerBasis, MarkedPolynomial, Monomial, OrderingSpec,
    Polynomial, Ring, TermOrdering,
};

type Check = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fp() -> CoefficientField {
    CoefficientField::prime(BENCH_PRIME).unwrap()
}

fn running() -> Ideal {
    let r = Ring::new(["x", "y"], CoefficientField::Rationals);
    Ideal::new(vec![parse_polynomial("y^4 + x^3 - x^2 + x", &r).unwrap(), parse_polynomial("x^4", &r).unwrap()]).unwrap()
}

fn marked(text: &str, ring: &std::sync::Arc<Ring>, e: &[u32]) -> MarkedPolynomial {
    MarkedPolynomial::new(parse_polynomial(text, ring).unwrap(), Monomial::from_exponents(e)).unwrap()
}

fn iv(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn secs(d: Duration) -> String {
    format!("{:.3} s", d.as_secs_f64())
}

fn criterion_1() -> Check {
    let i = running();
    let t = Instant::now();
    let (g, _) = standard_walk(&i, &TermOrdering::degrevlex(2), &TermOrdering::lex(2)).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let r = i.ring();
    let want = MarkedGroebnerBasis::from_elements(vec![
        marked("x + y^12 - y^8 + y^4", r, &[1, 0]),
        marked("y^16", r, &[0, 16]),
    ]);
    ensure(g == want, || format!("got {:?}", g.polynomials().iter().map(|p| p.to_string()).collect::<Vec<_>>()))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {}", secs(elapsed)))?;
    Ok(format!("basis {{x + y^12 - y^8 + y^4, y^16}} in {}", secs(elapsed)))
}

fn criterion_2() -> Check {
    let t = Instant::now();
    let (_, trace) =
        standard_walk(&running(), &TermOrdering::degrevlex(2), &TermOrdering::lex(2)).map_err(|e| e.to_string())?;
    let elapsed = t.elapsed();
    let want = vec![iv(&[1, 1]), iv(&[4, 3]), iv(&[4, 1]), iv(&[12, 1])];
    ensure(trace.crossed == want, || format!("crossed {:?}", trace.crossed))?;
    ensure(trace.cones_crossed() == 4, || format!("{} cones", trace.cones_crossed()))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {}", secs(elapsed)))?;
    Ok(format!("(1,1) (4,3) (4,1) (12,1), 4 cones in {}", secs(elapsed)))
}

fn criterion_3() -> Check {
    let i = running();
    let r = i.ring();
    let lead = leading_ideal(&i, &TermOrdering::lex(2)).map_err(|e| e.to_string())?;
    let want = vec![Monomial::from_exponents(&[1, 0]), Monomial::from_exponents(&[0, 16])];
    ensure(lead == want, || format!("leading ideal {:?}", lead))?;

    let drl = buchberger(&i, &TermOrdering::degrevlex(2)).map_err(|e| e.to_string())?;
    let forms = initial_forms(&drl, &iv(&[4, 3])).map_err(|e| e.to_string())?;
    let mut got: Vec<Polynomial> = forms.polynomials();
    let mut expected = vec![parse_polynomial("x^3 + y^4", r).unwrap(), parse_polynomial("x^4", r).unwrap()];
    got.sort_by_key(|p| p.to_string());
    expected.sort_by_key(|p| p.to_string());
    ensure(got == expected, || format!("initial forms at (4,3): {:?}", got.iter().map(|p| p.to_string()).collect::<Vec<_>>()))?;
    Ok("in_lex = <x, y^16>; in_(4,3) forms = {x^3 + y^4, x^4}".into())
}

/// Sizes at desk scale over the benchmark prime.
fn criterion_4() -> Check {
    let limit = Duration::from_secs(120);
    let mut notes = Vec::new();
    let mut failures = Vec::new();
    let cases: [(&str, Ideal, usize, usize); 2] = [
        ("cyclic5", gen_cyclic(5, fp()).unwrap(), 20, 30),
        ("katsura6", gen_katsura(6, fp()).unwrap(), 41, 64),
    ];
    for (name, ideal, want_start, want_target) in cases {
        let n = ideal.ring().nvars();
        let (drl, lex) = (TermOrdering::degrevlex(n), TermOrdering::lex(n));

        let t = Instant::now();
        let g = buchberger(&ideal, &drl).map_err(|e| e.to_string())?;
        let el = t.elapsed();
        notes.push(format!("{} degrevlex {} ({})", name, g.len(), secs(el)));
        if g.len() != want_start || el > limit {
            failures.push(format!("{} degrevlex size {} (want {}) in {}", name, g.len(), want_start, secs(el)));
        }

        let t = Instant::now();
        let (gs, _) = standard_walk(&ideal, &drl, &lex).map_err(|e| e.to_string())?;
        let el_s = t.elapsed();
        let t = Instant::now();
        let (gg, _) = generic_walk(&ideal, &drl, &lex).map_err(|e| e.to_string())?;
        let el_g = t.elapsed();
        notes.push(format!(
            "{} lex standard {} ({}) generic {} ({})",
            name,
            gs.len(),
            secs(el_s),
            gg.len(),
            secs(el_g)
        ));
        for (alg, size, el) in [("standard", gs.len(), el_s), ("generic", gg.len(), el_g)] {
            if size != want_target || el > limit {
                failures.push(format!("{} lex via {} walk size {} (want {}) in {}", name, alg, size, want_target, secs(el)));
            }
        }
        if gs != gg {
            failures.push(format!("{}: standard and generic lex bases differ", name));
        }
    }
    if failures.is_empty() {
        Ok(notes.join("; "))
    } else {
        Err(format!("{} [{}]", failures.join("; "), notes.join("; ")))
    }
}

struct Instance {
    ideal: Ideal,
    target_basis: MarkedGroebnerBasis,
    standard_trace: WalkTrace,
    generic_trace: WalkTrace,
}

const INSTANCES_PER_FIELD: usize = 200;

/// Random ideals converted from degrevlex to lex three ways.
fn criterion_5(instances: &mut Vec<Instance>) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let mut failures = Vec::new();
    for field in [CoefficientField::Rationals, fp()] {
        for k in 0..INSTANCES_PER_FIELD {
            let ideal = common::random_ideal(&mut rng, field);
            let n = ideal.ring().nvars();
            let (drl, lex) = (TermOrdering::degrevlex(n), TermOrdering::lex(n));
            let direct = buchberger(&ideal, &lex).map_err(|e| e.to_string())?;
            let s = standard_walk(&ideal, &drl, &lex);
            let g = generic_walk_recorded(&ideal, &drl, &lex);
            match (s, g) {
                (Ok((sb, st)), Ok(run)) => {
                    if sb != direct || run.basis != direct {
                        failures.push(format!("{} #{}: {:?}", field, k, ideal.generators().iter().map(|p| p.to_string()).collect::<Vec<_>>()));
                    }
                    instances.push(Instance { ideal, target_basis: direct, standard_trace: st, generic_trace: run.trace });
                }
                (s, g) => failures.push(format!(
                    "{} #{}: standard {:?} generic {:?}",
                    field,
                    k,
                    s.err(),
                    g.err()
                )),
            }
        }
    }
    ensure(failures.is_empty(), || format!("{} discrepancies, first: {}", failures.len(), failures[0]))?;
    Ok(format!("{} ideals over QQ and GF({}), 0 discrepancies", 2 * INSTANCES_PER_FIELD, BENCH_PRIME))
}

fn lex_cmp_vec(a: &[BigInt], b: &[BigInt]) -> Ordering {
    a.cmp(b)
}

/// `M·e` for an exponent vector.
fn weigh(m: &[Vec<BigInt>], e: &Monomial) -> Vec<BigInt> {
    let exps: Vec<BigInt> = e.exponents().into_iter().map(BigInt::from).collect();
    m.iter().map(|row| row.iter().zip(&exps).map(|(a, b)| a * b).sum()).collect()
}

fn ordering_pool(rng: &mut ChaCha8Rng, n: usize) -> Vec<TermOrdering> {
    let mut pool = vec![TermOrdering::lex(n), TermOrdering::degrevlex(n)];
    for _ in 0..6 {
        let w: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.gen_range(0..=9))).collect();
        if w.iter().all(|x| x.is_zero()) {
            continue;
        }
        let inner = if rng.gen_bool(0.5) { OrderingSpec::Lex } else { OrderingSpec::DegRevLex };
        pool.push(TermOrdering::make(&OrderingSpec::weight(w, inner), n).unwrap());
    }
    pool
}

fn check_ordering_axioms(rng: &mut ChaCha8Rng) -> std::result::Result<usize, String> {
    let n = 3;
    let pool = ordering_pool(rng, n);
    let one = Monomial::one(n);
    let mut count = 0;
    for _ in 0..1000 {
        let ord = &pool[rng.gen_range(0..pool.len())];
        let a = common::random_monomial(rng, n, 6);
        let b = common::random_monomial(rng, n, 6);
        let c = common::random_monomial(rng, n, 6);
        let ab = ord.cmp(&a, &b);
        // independent comparison of the weight vectors M·a and M·b
        let oracle = lex_cmp_vec(&weigh(ord.matrix(), &a), &weigh(ord.matrix(), &b));
        ensure(ab == oracle, || format!("{:?} vs oracle {:?} on {} {}", ab, oracle, a, b))?;
        ensure(ord.cmp(&b, &a) == ab.reverse(), || format!("antisymmetry on {} {}", a, b))?;
        ensure((ab == Ordering::Equal) == (a == b), || format!("totality on {} {}", a, b))?;
        ensure(ord.cmp(&a.mul(&c), &b.mul(&c)) == ab, || format!("multiplicativity on {} {} {}", a, b, c))?;
        let want_one = if a.is_one() { Ordering::Equal } else { Ordering::Less };
        ensure(ord.cmp(&one, &a) == want_one, || format!("1 is not minimal against {}", a))?;
        let bc = ord.cmp(&b, &c);
        if ab == Ordering::Less && bc == Ordering::Less {
            ensure(ord.cmp(&a, &c) == Ordering::Less, || format!("transitivity on {} {} {}", a, b, c))?;
        }
        count += 1;
    }
    Ok(count)
}

fn check_s_polynomials(instances: &[Instance]) -> std::result::Result<usize, String> {
    let mut pairs = 0;
    for inst in instances {
        let n = inst.ideal.ring().nvars();
        let lex = TermOrdering::lex(n);
        let drl = TermOrdering::degrevlex(n);
        let drl_basis = buchberger(&inst.ideal, &drl).map_err(|e| e.to_string())?;
        for (g, ord) in [(&inst.target_basis, &lex), (&drl_basis, &drl)] {
            let els = g.elements();
            for i in 0..els.len() {
                for j in i + 1..els.len() {
                    let s = s_polynomial(&els[i], &els[j]);
                    let r = normal_form(&s, els, ord).map_err(|e| e.to_string())?;
                    ensure(r.is_zero(), || format!("S({}, {}) reduces to {}", els[i].poly(), els[j].poly(), r))?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(pairs)
}

fn check_cofactors(rng: &mut ChaCha8Rng) -> std::result::Result<usize, String> {
    for case in 0..100 {
        let field = if case % 2 == 0 { CoefficientField::Rationals } else { fp() };
        let ideal = common::random_ideal(rng, field);
        let n = ideal.ring().nvars();
        let ord = if rng.gen_bool(0.5) { TermOrdering::lex(n) } else { TermOrdering::degrevlex(n) };
        let g = buchberger(&ideal, &ord).map_err(|e| e.to_string())?;
        let f = common::random_poly(rng, ideal.ring(), 6, 5);
        let d = divide(&f, g.elements(), &ord).map_err(|e| e.to_string())?;
        let mut rebuilt = d.remainder.clone();
        for (q, e) in d.quotients.iter().zip(g.elements()) {
            rebuilt = &rebuilt + &(q * e.poly());
        }
        ensure(rebuilt == f, || format!("case {}: f != sum q_i g_i + r for f = {}", case, f))?;
        let nf = normal_form(&f, g.elements(), &ord).map_err(|e| e.to_string())?;
        ensure(nf == d.remainder, || format!("case {}: normal form differs from division remainder", case))?;
        for m in d.remainder.support() {
            ensure(!g.markings().iter().any(|a| a.divides(m)), || format!("case {}: remainder term {} reducible", case, m))?;
        }
    }
    Ok(100)
}

fn check_interreduce(instances: &[Instance]) -> std::result::Result<usize, String> {
    for inst in instances {
        let g = &inst.target_basis;
        let again = interreduce(g.elements().iter().map(|e| (e.poly().clone(), e.marked().clone())).collect())
            .map_err(|e| e.to_string())?;
        ensure(&again == g, || format!("interreduce changed {:?}", g.polynomials()))?;
        g.check().map_err(|e| e.to_string())?;
    }
    Ok(instances.len())
}

fn criterion_6(instances: &[Instance]) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    let cmps = check_ordering_axioms(&mut rng)?;
    let pairs = check_s_polynomials(instances)?;
    let divisions = check_cofactors(&mut rng)?;
    let idem = check_interreduce(instances)?;
    Ok(format!(
        "{} ordering comparisons, {} S-pairs reduce to 0, {} cofactor identities, {} interreduce fixpoints",
        cmps, pairs, divisions, idem
    ))
}

/// `Σ εⁱ·Mᵢ` for a concrete tiny `ε`.
fn perturbed(m: &[Vec<BigInt>]) -> Vec<BigRational> {
    let eps = BigRational::new(BigInt::one(), BigInt::from(2u8).pow(64));
    let n = m[0].len();
    let mut out = vec![BigRational::zero(); n];
    let mut scale = BigRational::one();
    for row in m {
        for (o, x) in out.iter_mut().zip(row) {
            *o += &scale * BigRational::from(x.clone());
        }
        scale *= &eps;
    }
    out
}

fn rdot(v: &[BigInt], w: &[BigRational]) -> BigRational {
    v.iter().zip(w).map(|(a, b)| BigRational::from(a.clone()) * b).sum()
}

/// Crossing parameter of the hyperplane `⟨v, ·⟩ = 0` along `(1 − t)·s + t·τ`.
fn crossing(v: &[BigInt], s: &[BigRational], tau: &[BigRational]) -> Option<BigRational> {
    let (a, b) = (rdot(v, s), rdot(v, tau));
    (a != b).then(|| &a / (&a - &b))
}

/// Flipped facets must be met in strictly increasing order along the
/// perturbed start-to-target segment; the distinct unperturbed parameters
/// must be the standard walk's conversion points.
fn criterion_7(instances: &[Instance]) -> Check {
    let mut discrepancies = Vec::new();
    let mut flips = 0;
    for (k, inst) in instances.iter().enumerate() {
        let n = inst.ideal.ring().nvars();
        let (drl, lex) = (TermOrdering::degrevlex(n), TermOrdering::lex(n));
        let (s_eps, t_eps) = (perturbed(drl.matrix()), perturbed(lex.matrix()));
        let (s0, t0) = (perturbed(&drl.matrix()[..1]), perturbed(&lex.matrix()[..1]));
        let ts: Vec<BigRational> =
            inst.generic_trace.crossed.iter().map(|v| crossing(v, &s_eps, &t_eps).expect("flippable facet")).collect();
        flips += ts.len();
        if ts.windows(2).any(|p| p[0] >= p[1]) {
            discrepancies.push(format!("#{}: perturbed parameters not increasing: {:?}", k, ts));
            continue;
        }
        let mut generic_points: Vec<BigRational> =
            inst.generic_trace.crossed.iter().filter_map(|v| crossing(v, &s0, &t0)).collect();
        if generic_points.windows(2).any(|p| p[0] > p[1]) {
            discrepancies.push(format!("#{}: generic flips leave the segment order: {:?}", k, generic_points));
            continue;
        }
        generic_points.dedup();
        let standard_points: Vec<BigRational> = inst.standard_trace.crossed[1..]
            .iter()
            .map(|w| segment_parameter(w, drl.first_row(), lex.first_row()).expect("weight on the segment"))
            .collect();
        if standard_points.windows(2).any(|p| p[0] >= p[1]) {
            discrepancies.push(format!("#{}: standard parameters not increasing: {:?}", k, standard_points));
        } else if standard_points != generic_points {
            discrepancies.push(format!("#{}: standard {:?} vs generic {:?}", k, standard_points, generic_points));
        }
    }
    ensure(discrepancies.is_empty(), || format!("{} discrepancies, first: {}", discrepancies.len(), discrepancies[0]))?;
    Ok(format!("{} instances, {} flips, 0 discrepancies", instances.len(), flips))
}

fn criterion_8() -> Check {
    let systems: Vec<String> = ["cyclic4", "cyclic5", "katsura3", "katsura4"].iter().map(|s| s.to_string()).collect();
    let fields = [CoefficientField::Rationals, fp()];
    let reports = run_bench(&systems, &fields, &BenchAlgorithm::ALL, &BenchOptions::default()).map_err(|e| e.to_string())?;
    let table = format_report(&reports, true);
    println!("{}", table.trim_end().lines().map(|l| format!("    {}", l)).collect::<Vec<_>>().join("\n"));
    ensure(reports.len() == systems.len() * fields.len() * 3, || format!("{} reports", reports.len()))?;
    for r in &reports {
        ensure(matches!(r.outcome, Outcome::Done { .. }), || format!("{} {} {} did not finish", r.system, r.field, r.algorithm.name()))?;
    }
    let header: Vec<&str> = table.lines().take(2).collect();
    ensure(
        ["Standard walk", "Generic walk", "Buchberger", "QQ"].iter().all(|h| header.iter().any(|l| l.contains(h))),
        || format!("header {:?}", header),
    )?;
    for s in &systems {
        let row = table.lines().nth(2 + systems.iter().position(|x| x == s).unwrap()).unwrap_or("");
        ensure(row.starts_with(s.as_str()) && row.split_whitespace().count() >= 7, || format!("row {:?}", row))?;
    }
    ensure(!table.contains(" NO "), || "algorithms disagree".to_string())?;
    Ok(format!("{} systems x 2 fields x 3 algorithms", systems.len()))
}

/// `⟨x − y^N⟩` with `N = 2^32 + 1`: the walk to lex converts at `(N, 1)`.
fn criterion_9() -> Check {
    let big_n = BigUint::from(1u64 << 32) + 1u32;
    let mut out = Vec::new();
    for field in [CoefficientField::Rationals, fp()] {
        let r = Ring::new(["x", "y"], field);
        let f = parse_polynomial(&format!("x - y^{}", big_n), &r).map_err(|e| e.to_string())?;
        let ideal = Ideal::new(vec![f.clone()]).unwrap();
        let (drl, lex) = (TermOrdering::degrevlex(2), TermOrdering::lex(2));
        let run = standard_walk_recorded(&ideal, &drl, &lex).map_err(|e| e.to_string())?;
        let want = vec![iv(&[1, 1]), vec![BigInt::from(big_n.clone()), BigInt::one()]];
        ensure(run.trace.crossed == want, || format!("crossed {:?}", run.trace.crossed))?;
        let expected = MarkedGroebnerBasis::from_elements(vec![MarkedPolynomial::new(f, Monomial::var(2, 0)).unwrap()]);
        ensure(run.basis == expected, || format!("basis {:?}", run.basis.polynomials()))?;
        let (gb, gt) = generic_walk(&ideal, &drl, &lex).map_err(|e| e.to_string())?;
        ensure(gb == expected, || "generic walk basis differs".to_string())?;
        let max = run.trace.crossed.iter().chain(&gt.crossed).flatten().map(|x| x.magnitude().clone()).max().unwrap();
        ensure(max > BigUint::from(i32::MAX as u32), || format!("largest weight entry {}", max))?;
        out.push(max);
    }
    Ok(format!("largest weight entry {} > 2^31 - 1", out[0]))
}

fn run(n: usize, title: &str, f: impl FnOnce() -> Check) -> bool {
    let t = Instant::now();
    let res = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let el = secs(t.elapsed());
    match res {
        Ok(detail) => {
            println!("criterion {} [{}]: PASS ({}) {}", n, title, el, detail);
            true
        }
        Err(detail) => {
            println!("criterion {} [{}]: FAIL ({}) {}", n, title, el, detail);
            false
        }
    }
}

fn main() -> ExitCode {
    let mut instances = Vec::new();
    let results = [
        run(1, "running example basis", criterion_1),
        run(2, "running example trace", criterion_2),
        run(3, "leading ideal and initial forms", criterion_3),
        run(4, "benchmark basis sizes", criterion_4),
        run(5, "three-way equivalence", || criterion_5(&mut instances)),
        run(6, "property suites", || criterion_6(&instances)),
        run(7, "generic facet order", || criterion_7(&instances)),
        run(8, "benchmark report", criterion_8),
        run(9, "large weights", criterion_9),
    ];
    let passed = results.iter().filter(|&&r| r).count();
    println!("acceptance: {}/{} criteria passed", passed, results.len());
    if passed == results.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

//! SVG drawing of a two-variable standard walk through the Gröbner fan.
//!
//! Directions in the nonnegative quadrant are parametrised by
//! `r ∈ [0, 1] ↦ (1 − r, r)`; a cone `{ω : ⟨v, ω⟩ ≥ 0}` meets the quadrant in
//! an interval of `r`, drawn as a circular sector.

use std::fmt::Write;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::MarkedGroebnerBasis;
use crate::walk::{cone_inequalities, Algorithm, WalkTrace};

const SIZE: f64 = 512.0;
const MARGIN: f64 = 40.0;
const RADIUS: f64 = SIZE - 2.0 * MARGIN;
const FILLS: [&str; 6] = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#76b7b2", "#edc948"];

/// The interval of `r` whose direction lies in the closed cone, if any.
fn cone_interval(g: &MarkedGroebnerBasis) -> Option<(BigRational, BigRational)> {
    let (mut lo, mut hi) = (BigRational::zero(), BigRational::one());
    for v in cone_inequalities(g).vectors() {
        // v0 + r (v1 − v0) ≥ 0
        let a = BigRational::from(v[0].clone());
        let s = BigRational::from(&v[1] - &v[0]);
        if s.is_zero() {
            if a.is_negative() {
                return None;
            }
        } else {
            let root = -&a / &s;
            if s.is_positive() {
                lo = lo.max(root);
            } else {
                hi = hi.min(root);
            }
        }
    }
    (lo <= hi).then_some((lo, hi))
}

/// Unit direction for parameter `r`.
fn unit_of_r(r: &BigRational) -> (f64, f64) {
    let r = r.to_f64().unwrap_or(0.0);
    let (x, y) = (1.0 - r, r);
    let len = (x * x + y * y).sqrt();
    (x / len, y / len)
}

/// Unit direction of an integer vector, exact up to the final division.
fn unit_of(w: &[BigInt]) -> (f64, f64) {
    let m = w.iter().map(|x| x.abs()).max().unwrap_or_default();
    if m.is_zero() {
        return (0.0, 0.0);
    }
    let x = BigRational::new(w[0].clone(), m.clone()).to_f64().unwrap_or(0.0);
    let y = BigRational::new(w[1].clone(), m).to_f64().unwrap_or(0.0);
    let len = (x * x + y * y).sqrt();
    (x / len, y / len)
}

fn screen(u: (f64, f64), radius: f64) -> (f64, f64) {
    (MARGIN + u.0 * radius, SIZE - MARGIN - u.1 * radius)
}

/// Draws the trace of a standard walk on two variables; `bases[k]` is the
/// basis after `trace.crossed[k]`.
pub fn fan_svg(trace: &WalkTrace, bases: &[MarkedGroebnerBasis], vars: &[String]) -> Result<String> {
    if trace.algorithm != Algorithm::Standard {
        return Err(Error::InvalidArgument("fan drawing needs a standard walk trace".into()));
    }
    if trace.crossed.is_empty() {
        return Err(Error::InvalidArgument("empty walk trace".into()));
    }
    if vars.len() != 2 || trace.crossed.iter().any(|w| w.len() != 2) {
        return Err(Error::InvalidArgument("fan drawing needs exactly 2 variables".into()));
    }
    if bases.len() != trace.crossed.len() {
        return Err(Error::InvalidArgument(format!(
            "expected {} bases for the trace, got {}",
            trace.crossed.len(),
            bases.len()
        )));
    }

    let mut s = String::new();
    let o = screen((0.0, 0.0), 0.0);
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        SIZE
    )
    .unwrap();
    writeln!(s, r#"<rect width="{0}" height="{0}" fill="white"/>"#, SIZE).unwrap();

    writeln!(s, r#"<g id="cones" stroke="none" fill-opacity="0.35">"#).unwrap();
    for (k, g) in bases.iter().enumerate() {
        let Some((lo, hi)) = cone_interval(g) else { continue };
        let (a, b) = (screen(unit_of_r(&lo), RADIUS), screen(unit_of_r(&hi), RADIUS));
        writeln!(
            s,
            r#"<path d="M {:.3} {:.3} L {:.3} {:.3} A {R:.3} {R:.3} 0 0 0 {:.3} {:.3} Z" fill="{}"/>"#,
            o.0,
            o.1,
            a.0,
            a.1,
            b.0,
            b.1,
            FILLS[k % FILLS.len()],
            R = RADIUS
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();

    writeln!(s, r#"<g id="axes" stroke="black" stroke-width="1.5">"#).unwrap();
    writeln!(s, r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#, o.0, o.1, o.0 + RADIUS + 10.0, o.1).unwrap();
    writeln!(s, r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#, o.0, o.1, o.0, o.1 - RADIUS - 10.0).unwrap();
    writeln!(s, "</g>").unwrap();
    writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="14">{}</text>"#,
        o.0 + RADIUS + 14.0,
        o.1 + 5.0,
        escape(&vars[0])
    )
    .unwrap();
    writeln!(
        s,
        r#"<text x="{:.3}" y="{:.3}" font-family="sans-serif" font-size="14">{}</text>"#,
        o.0 - 5.0,
        o.1 - RADIUS - 16.0,
        escape(&vars[1])
    )
    .unwrap();

    writeln!(s, r#"<g id="rays" stroke="dimgray" stroke-width="1" stroke-dasharray="4 3">"#).unwrap();
    for w in &trace.crossed {
        let p = screen(unit_of(w), RADIUS);
        writeln!(s, r#"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}"/>"#, o.0, o.1, p.0, p.1).unwrap();
    }
    writeln!(s, "</g>").unwrap();

    writeln!(s, r#"<g id="weights" font-family="sans-serif" font-size="11">"#).unwrap();
    for w in &trace.crossed {
        let p = screen(unit_of(w), RADIUS);
        writeln!(s, r#"<circle cx="{:.3}" cy="{:.3}" r="4" fill="black"/>"#, p.0, p.1).unwrap();
        let label = format!("({}, {})", w[0], w[1]);
        writeln!(s, r#"<text x="{:.3}" y="{:.3}">{}</text>"#, p.0 + 6.0, p.1 - 6.0, escape(&label)).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, "</svg>").unwrap();
    Ok(s)
}

fn escape(t: &str) -> String {
    t.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

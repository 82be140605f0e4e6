//! Term orderings as integer matrices, weight vectors and initial forms.
//!
//! A term ordering is an `n×n` full-rank integer matrix `M`; `x^a ≻ x^b`
//! iff `M·a` is lexicographically greater than `M·b`. Entries and products
//! are exact integers, so weights of any magnitude are supported.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::Coeff;
use crate::groebner::MarkedGroebnerBasis;
use crate::monomial::Monomial;
use crate::poly::Polynomial;

/// How an ordering is described before it is turned into a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderingSpec {
    Lex,
    DegRevLex,
    Matrix(Vec<Vec<BigInt>>),
    /// Compare by the weight first, break ties with `then`.
    Weight { weight: Vec<BigInt>, then: Box<OrderingSpec> },
}

impl OrderingSpec {
    pub fn weight(weight: Vec<BigInt>, then: OrderingSpec) -> Self {
        OrderingSpec::Weight { weight, then: Box::new(then) }
    }

    /// Reads the JSON form: `"lex"`, `{"name": "degrevlex"}`,
    /// `{"matrix": [[…]]}` or `{"weight": […], "then": <spec>}`.
    /// Integers may be JSON numbers or decimal strings.
    pub fn from_json(v: &Value) -> Result<Self> {
        if v.is_string() {
            return Self::from_json(&json!({ "name": v }));
        }
        let obj = v.as_object().ok_or_else(|| Error::Schema("ordering must be an object or a name".into()))?;
        if let Some(name) = obj.get("name") {
            return match name.as_str() {
                Some("lex") => Ok(OrderingSpec::Lex),
                Some("degrevlex") => Ok(OrderingSpec::DegRevLex),
                Some(other) => Err(Error::UnknownOrdering(other.to_string())),
                None => Err(Error::Schema("ordering name must be a string".into())),
            };
        }
        if let Some(m) = obj.get("matrix") {
            let rows = m.as_array().ok_or_else(|| Error::Schema("matrix must be an array of rows".into()))?;
            let rows = rows.iter().map(json_int_row).collect::<Result<Vec<_>>>()?;
            return Ok(OrderingSpec::Matrix(rows));
        }
        if let (Some(w), Some(then)) = (obj.get("weight"), obj.get("then")) {
            return Ok(OrderingSpec::weight(json_int_row(w)?, OrderingSpec::from_json(then)?));
        }
        Err(Error::Schema(format!("unrecognised ordering spec {}", v)))
    }

    pub fn to_json(&self) -> Value {
        match self {
            OrderingSpec::Lex => json!({"name": "lex"}),
            OrderingSpec::DegRevLex => json!({"name": "degrevlex"}),
            OrderingSpec::Matrix(rows) => json!({"matrix": rows.iter().map(|r| int_row_json(r)).collect::<Vec<_>>()}),
            OrderingSpec::Weight { weight, then } => json!({"weight": int_row_json(weight), "then": then.to_json()}),
        }
    }

    /// Human-readable form in the style `lex([x, y])`.
    pub fn describe(&self, vars: &[String]) -> String {
        let vs = format!("[{}]", vars.join(", "));
        match self {
            OrderingSpec::Lex => format!("lex({})", vs),
            OrderingSpec::DegRevLex => format!("degrevlex({})", vs),
            OrderingSpec::Matrix(rows) => format!("matrix_ordering({}, {})", vs, matrix_text(rows)),
            OrderingSpec::Weight { weight, then } => {
                format!("matrix_ordering({}, {})*{}", vs, matrix_text(std::slice::from_ref(weight)), then.describe(vars))
            }
        }
    }
}

fn matrix_text(rows: &[Vec<BigInt>]) -> String {
    let rows: Vec<String> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    format!("[{}]", rows.join("; "))
}

fn json_int(v: &Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    if let Some(u) = v.as_u64() {
        return Ok(BigInt::from(u));
    }
    if let Some(s) = v.as_str() {
        return s.trim().parse().map_err(|_| Error::Schema(format!("not an integer: {:?}", s)));
    }
    Err(Error::Schema(format!("not an integer: {}", v)))
}

fn json_int_row(v: &Value) -> Result<Vec<BigInt>> {
    v.as_array()
        .ok_or_else(|| Error::Schema(format!("expected an integer array, got {}", v)))?
        .iter()
        .map(json_int)
        .collect()
}

fn int_row_json(r: &[BigInt]) -> Value {
    Value::Array(
        r.iter()
            .map(|x| match x.to_i64() {
                Some(i) => json!(i),
                None => json!(x.to_string()),
            })
            .collect(),
    )
}

#[derive(Debug, Clone)]
enum Fast {
    Lex,
    DegRevLex,
    /// Sparse word-sized rows; exact with `i128` accumulation.
    Small(Vec<Vec<(usize, i64)>>),
    Big,
}

/// A monomial ordering given by a full-rank integer matrix.
#[derive(Debug, Clone)]
pub struct TermOrdering {
    n: usize,
    matrix: Vec<Vec<BigInt>>,
    spec: OrderingSpec,
    fast: Fast,
}

impl PartialEq for TermOrdering {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for TermOrdering {}

impl TermOrdering {
    pub fn lex(n: usize) -> Self {
        Self::make(&OrderingSpec::Lex, n).expect("lex is valid")
    }

    pub fn degrevlex(n: usize) -> Self {
        Self::make(&OrderingSpec::DegRevLex, n).expect("degrevlex is valid")
    }

    pub fn from_matrix(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        Self::make(&OrderingSpec::Matrix(rows), n)
    }

    /// `ω` first, ties broken by `inner`.
    pub fn weight_refinement(weight: &[BigInt], inner: &TermOrdering) -> Result<Self> {
        let spec = OrderingSpec::weight(weight.to_vec(), inner.spec.clone());
        let matrix = refine_rows(weight, &inner.matrix)?;
        Ok(Self::from_parts(matrix, spec))
    }

    /// Builds the canonical matrix for `spec` over `n` variables.
    pub fn make(spec: &OrderingSpec, n: usize) -> Result<Self> {
        let matrix = canonical_matrix(spec, n)?;
        Ok(Self::from_parts(matrix, spec.clone()))
    }

    fn from_parts(matrix: Vec<Vec<BigInt>>, spec: OrderingSpec) -> Self {
        let n = matrix.len();
        let fast = if matrix == lex_matrix(n) {
            Fast::Lex
        } else if matrix == degrevlex_matrix(n) {
            Fast::DegRevLex
        } else if matrix.iter().flatten().all(|x| x.to_i64().is_some()) {
            Fast::Small(
                matrix
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(_, x)| !x.is_zero())
                            .map(|(j, x)| (j, x.to_i64().unwrap()))
                            .collect()
                    })
                    .collect(),
            )
        } else {
            Fast::Big
        };
        TermOrdering { n, matrix, spec, fast }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &[Vec<BigInt>] {
        &self.matrix
    }

    pub fn spec(&self) -> &OrderingSpec {
        &self.spec
    }

    /// Short tag: `lex`, `degrevlex`, `weight-refinement` or `matrix`.
    pub fn name(&self) -> &'static str {
        match self.spec {
            OrderingSpec::Lex => "lex",
            OrderingSpec::DegRevLex => "degrevlex",
            OrderingSpec::Weight { .. } => "weight-refinement",
            OrderingSpec::Matrix(_) => "matrix",
        }
    }

    pub fn describe(&self, vars: &[String]) -> String {
        self.spec.describe(vars)
    }

    pub fn first_row(&self) -> &[BigInt] {
        &self.matrix[0]
    }

    /// Compare two exponent vectors. Panics on a length mismatch; see
    /// [`TermOrdering::compare_monomials`] for the checked form.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), self.n);
        debug_assert_eq!(b.nvars(), self.n);
        match &self.fast {
            Fast::Lex => a.lex_cmp(b),
            Fast::DegRevLex => match (a.small(), b.small()) {
                (Some(x), Some(y)) => {
                    let dx: u64 = x.iter().map(|&e| e as u64).sum();
                    let dy: u64 = y.iter().map(|&e| e as u64).sum();
                    dx.cmp(&dy).then_with(|| {
                        for (ex, ey) in x.iter().zip(y.iter()).rev() {
                            if ex != ey {
                                return ey.cmp(ex);
                            }
                        }
                        Ordering::Equal
                    })
                }
                _ => self.cmp_by_matrix(a, b),
            },
            Fast::Small(rows) => match (a.small(), b.small()) {
                (Some(x), Some(y)) => {
                    for row in rows {
                        let s: i128 = row
                            .iter()
                            .map(|&(j, r)| r as i128 * (x[j] as i128 - y[j] as i128))
                            .sum();
                        if s != 0 {
                            return s.cmp(&0);
                        }
                    }
                    Ordering::Equal
                }
                _ => self.cmp_by_matrix(a, b),
            },
            Fast::Big => self.cmp_by_matrix(a, b),
        }
    }

    /// Reference comparison through exact matrix-vector products.
    pub fn cmp_by_matrix(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let d = a.diff(b);
        for row in &self.matrix {
            let s: BigInt = row.iter().zip(d.iter()).map(|(r, x)| r * x).sum();
            if !s.is_zero() {
                return if s.is_positive() { Ordering::Greater } else { Ordering::Less };
            }
        }
        Ordering::Equal
    }

    pub fn compare_monomials(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        for m in [a, b] {
            if m.nvars() != self.n {
                return Err(Error::DimensionMismatch { expected: self.n, got: m.nvars() });
            }
        }
        Ok(self.cmp(a, b))
    }

    /// The greatest term of a nonzero polynomial.
    pub fn leading_term<'a>(&self, f: &'a Polynomial) -> Result<(&'a Monomial, &'a Coeff)> {
        if f.ring().nvars() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: f.ring().nvars() });
        }
        f.terms().max_by(|a, b| self.cmp(a.0, b.0)).ok_or(Error::ZeroPolynomial)
    }

    /// Whether `x^m ≻ 1` for every variable.
    pub fn is_global(&self) -> bool {
        (0..self.n).all(|j| column_lex_positive(&self.matrix, j))
    }
}

fn lex_matrix(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i32)).collect()).collect()
}

fn degrevlex_matrix(n: usize) -> Vec<Vec<BigInt>> {
    let mut rows = vec![vec![BigInt::one(); n]];
    for k in (1..n).rev() {
        let mut r = vec![BigInt::zero(); n];
        r[k] = -BigInt::one();
        rows.push(r);
    }
    rows
}

fn canonical_matrix(spec: &OrderingSpec, n: usize) -> Result<Vec<Vec<BigInt>>> {
    match spec {
        OrderingSpec::Lex => Ok(lex_matrix(n)),
        OrderingSpec::DegRevLex => Ok(degrevlex_matrix(n)),
        OrderingSpec::Matrix(rows) => {
            if rows.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: rows.len() });
            }
            if let Some(r) = rows.iter().find(|r| r.len() != n) {
                return Err(Error::DimensionMismatch { expected: n, got: r.len() });
            }
            let rank = rank(rows);
            if rank < n {
                return Err(Error::RankDeficient { rank, n });
            }
            if let Some(j) = (0..n).find(|&j| !column_lex_positive(rows, j)) {
                return Err(Error::NotLexPositive(j));
            }
            Ok(rows.clone())
        }
        OrderingSpec::Weight { weight, then } => {
            if weight.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: weight.len() });
            }
            let inner = canonical_matrix(then, n)?;
            refine_rows(weight, &inner)
        }
    }
}

/// Stack `weight` on top of `inner` and keep the first `n` independent rows.
fn refine_rows(weight: &[BigInt], inner: &[Vec<BigInt>]) -> Result<Vec<Vec<BigInt>>> {
    let n = inner.len();
    if weight.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: weight.len() });
    }
    if weight.iter().any(|w| w.is_negative()) {
        return Err(Error::NegativeWeight);
    }
    let mut kept: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in std::iter::once(weight).chain(inner.iter().map(|r| r.as_slice())) {
        if kept.len() == n {
            break;
        }
        kept.push(row.to_vec());
        if rank(&kept) < kept.len() {
            kept.pop();
        }
    }
    debug_assert_eq!(kept.len(), n);
    Ok(kept)
}

fn column_lex_positive(rows: &[Vec<BigInt>], j: usize) -> bool {
    rows.iter().map(|r| &r[j]).find(|x| !x.is_zero()).is_some_and(|x| x.is_positive())
}

/// Rank over ℚ by fraction-free elimination.
pub(crate) fn rank(rows: &[Vec<BigInt>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c].is_zero() {
                continue;
            }
            let (a, b) = (m[r][c].clone(), m[i][c].clone());
            for k in c..ncols {
                let v = &m[i][k] * &a - &m[r][k] * &b;
                m[i][k] = v;
            }
            let g = m[i].iter().fold(BigInt::zero(), |g, x| g.gcd(x));
            if !g.is_zero() && !g.is_one() {
                for x in m[i].iter_mut() {
                    *x = &*x / &g;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// A nonnegative, nonzero integer weight vector in primitive form.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<BigInt>);

impl WeightVector {
    /// Validates and divides out the gcd of the entries.
    pub fn new(entries: Vec<BigInt>) -> Result<Self> {
        if entries.iter().any(|x| x.is_negative()) {
            return Err(Error::NegativeWeight);
        }
        let g = entries.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if g.is_zero() {
            return Err(Error::ZeroWeight);
        }
        Ok(WeightVector(entries.into_iter().map(|x| x / &g).collect()))
    }

    pub fn from_i64s(entries: &[i64]) -> Result<Self> {
        Self::new(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }
}

impl Deref for WeightVector {
    type Target = [BigInt];
    fn deref(&self) -> &[BigInt] {
        &self.0
    }
}

impl AsRef<[BigInt]> for WeightVector {
    fn as_ref(&self) -> &[BigInt] {
        &self.0
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", int_vec_text(&self.0))
    }
}

/// `[a, b, …]`.
pub fn int_vec_text(v: &[BigInt]) -> String {
    format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "))
}

/// Sum of the terms of `f` of maximal `w`-weight. The zero weight is
/// accepted and returns `f`.
pub fn initial_form(f: &Polynomial, w: &[BigInt]) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if w.len() != f.ring().nvars() {
        return Err(Error::DimensionMismatch { expected: f.ring().nvars(), got: w.len() });
    }
    let weighted: Vec<(BigInt, &Monomial, &Coeff)> = f.terms().map(|(m, c)| (m.dot(w), m, c)).collect();
    let top = weighted.iter().map(|t| &t.0).max().unwrap().clone();
    Ok(Polynomial::from_sorted_unchecked(
        f.ring(),
        weighted.into_iter().filter(|t| t.0 == top).map(|t| (t.1.clone(), t.2.clone())).collect(),
    ))
}

/// Whether `w` represents the ordering behind `g`: every initial form is
/// exactly the marked term.
pub fn represents(w: &[BigInt], g: &MarkedGroebnerBasis) -> Result<bool> {
    for el in g.elements() {
        let inf = initial_form(el.poly(), w)?;
        if inf.len() != 1 || inf.terms().next().unwrap().0 != el.marked() {
            return Ok(false);
        }
    }
    Ok(true)
}

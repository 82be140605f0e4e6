//! JSON ideal files.
//!
//! ```json
//! {"ring": {"vars": ["x", "y"], "field": "QQ"},
//!  "generators": ["y^4 + x^3 - x^2 + x", "x^4"],
//!  "orderings": {"start": "degrevlex", "w": {"weight": [2, 1], "then": {"name": "lex"}}}}
//! ```
//!
//! `field` is `"QQ"` or `{"Fp": p}`. Orderings are built-in names or the
//! object form read by [`OrderingSpec::from_json`].

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::field::CoefficientField;
use crate::groebner::Ideal;
use crate::ordering::{OrderingSpec, TermOrdering};
use crate::parse::parse_polynomial;
use crate::poly::Ring;
use crate::systems::named_ordering;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    vars: Vec<String>,
    field: Value,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFile {
    ring: RawRing,
    generators: Vec<String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    orderings: BTreeMap<String, Value>,
}

/// An ideal together with the named orderings stored next to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub ideal: Ideal,
    pub orderings: BTreeMap<String, OrderingSpec>,
}

fn field_from_json(v: &Value) -> Result<CoefficientField> {
    match v {
        Value::String(s) if s == "QQ" => Ok(CoefficientField::Rationals),
        Value::Object(o) if o.len() == 1 && o.contains_key("Fp") => {
            let p = &o["Fp"];
            let p = p
                .as_u64()
                .or_else(|| p.as_str().and_then(|s| s.trim().parse().ok()))
                .ok_or_else(|| Error::Schema(format!("Fp modulus must be a positive integer, got {}", p)))?;
            CoefficientField::prime(p)
        }
        _ => Err(Error::Schema(format!("field must be \"QQ\" or {{\"Fp\": p}}, got {}", v))),
    }
}

fn field_to_json(f: CoefficientField) -> Value {
    match f {
        CoefficientField::Rationals => json!("QQ"),
        CoefficientField::PrimeField(p) => json!({ "Fp": p }),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut cs = s.chars();
    cs.next().is_some_and(|c| c.is_alphabetic() || c == '_') && cs.all(|c| c.is_alphanumeric() || c == '_')
}

/// Reads an ordering given as a built-in name or a JSON spec.
pub fn ordering_spec_from_json(v: &Value) -> Result<OrderingSpec> {
    match v {
        Value::String(s) => named_ordering(s).ok_or_else(|| Error::UnknownOrdering(s.clone())),
        _ => OrderingSpec::from_json(v),
    }
}

impl IdealFile {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let raw: RawFile = serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))?;
        if raw.ring.vars.is_empty() {
            return Err(Error::Schema("ring needs at least one variable".into()));
        }
        for (i, v) in raw.ring.vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Schema(format!("invalid variable name {:?}", v)));
            }
            if raw.ring.vars[..i].contains(v) {
                return Err(Error::Schema(format!("duplicate variable {:?}", v)));
            }
        }
        let field = field_from_json(&raw.ring.field)?;
        let ring = Ring::new(raw.ring.vars, field);
        if raw.generators.is_empty() {
            return Err(Error::Schema("at least one generator is required".into()));
        }
        let gens = raw.generators.iter().map(|g| parse_polynomial(g, &ring)).collect::<Result<Vec<_>>>()?;
        let ideal = Ideal::new(gens)?;
        let mut orderings = BTreeMap::new();
        for (name, v) in &raw.orderings {
            let spec = ordering_spec_from_json(v)?;
            TermOrdering::make(&spec, ring.nvars())?;
            orderings.insert(name.clone(), spec);
        }
        Ok(IdealFile { ideal, orderings })
    }

    pub fn to_json_string(&self) -> String {
        let ring = self.ideal.ring();
        let lex = TermOrdering::lex(ring.nvars());
        let raw = RawFile {
            ring: RawRing { vars: ring.vars.clone(), field: field_to_json(ring.field) },
            generators: self.ideal.generators().iter().map(|g| g.format_with(&lex)).collect(),
            orderings: self.orderings.iter().map(|(k, v)| (k.clone(), v.to_json())).collect(),
        };
        serde_json::to_string_pretty(&raw).expect("plain JSON values") + "\n"
    }

    /// The same file read over another coefficient field.
    pub fn with_field(self, field: CoefficientField) -> Result<Self> {
        let ring = self.ideal.ring();
        if ring.field == field {
            return Ok(self);
        }
        let lex = TermOrdering::lex(ring.nvars());
        let new_ring = Ring::new(ring.vars.clone(), field);
        let gens = self
            .ideal
            .generators()
            .iter()
            .map(|g| parse_polynomial(&g.format_with(&lex), &new_ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(IdealFile { ideal: Ideal::new(gens)?, orderings: self.orderings })
    }

    /// Resolves an ordering argument: a name stored in the file, a built-in
    /// name (`lex`, `degrevlex`, `elim-sigma`, `elim-tau`) or inline JSON.
    pub fn resolve_ordering(&self, arg: &str) -> Result<TermOrdering> {
        let n = self.ideal.ring().nvars();
        let spec = if let Some(s) = self.orderings.get(arg) {
            s.clone()
        } else if let Some(s) = named_ordering(arg) {
            s
        } else if arg.trim_start().starts_with('{') || arg.trim_start().starts_with('"') {
            let v: Value = serde_json::from_str(arg).map_err(|e| Error::Schema(e.to_string()))?;
            ordering_spec_from_json(&v)?
        } else {
            return Err(Error::UnknownOrdering(arg.to_string()));
        };
        TermOrdering::make(&spec, n)
    }
}

pub fn load_ideal(path: impl AsRef<Path>) -> Result<IdealFile> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))?;
    IdealFile::from_json_str(&text)
}

pub fn save_ideal(file: &IdealFile, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    fs::write(path, file.to_json_string()).map_err(|e| Error::Io(format!("{}: {}", path.display(), e)))
}

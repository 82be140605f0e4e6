use std::fmt;

use num_bigint::BigInt;

use crate::ordering::int_vec_text;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Standard,
    Generic,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Standard => "standard",
            Algorithm::Generic => "generic",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "standard" => Some(Algorithm::Standard),
            "generic" => Some(Algorithm::Generic),
            _ => None,
        }
    }
}

/// Record of a walk. For the standard walk `crossed` holds the weights at
/// which conversions happened, starting with the start weight; for the
/// generic walk it holds the flipped facet normals (possibly none).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkTrace {
    pub algorithm: Algorithm,
    pub crossed: Vec<Vec<BigInt>>,
    /// Basis size after each recorded entry; `basis_sizes[0]` is the size of
    /// the start basis for both algorithms.
    pub basis_sizes: Vec<usize>,
}

impl WalkTrace {
    pub(crate) fn new(algorithm: Algorithm, start_size: usize) -> Self {
        WalkTrace { algorithm, crossed: Vec::new(), basis_sizes: vec![start_size] }
    }

    /// Conversions (standard) or flips (generic) performed.
    pub fn steps(&self) -> usize {
        match self.algorithm {
            Algorithm::Standard => self.crossed.len().saturating_sub(1),
            Algorithm::Generic => self.crossed.len(),
        }
    }

    /// The count printed after "Cones crossed:".
    pub fn cones_crossed(&self) -> usize {
        self.crossed.len()
    }

    pub fn final_size(&self) -> usize {
        *self.basis_sizes.last().unwrap()
    }
}

impl fmt::Display for WalkTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.algorithm {
            Algorithm::Standard => {
                writeln!(f, "Results for standard_walk")?;
                writeln!(f, "Crossed Cones in: ")?;
            }
            Algorithm::Generic => {
                writeln!(f, "Results for generic_walk")?;
                writeln!(f, "Flipped facets: ")?;
            }
        }
        for w in &self.crossed {
            writeln!(f, "{}", int_vec_text(w))?;
        }
        writeln!(f, "Cones crossed: {}", self.cones_crossed())
    }
}

//! The standard walk along the straight segment between the first rows of
//! the start and target matrices.

use crate::error::{Error, Result};
use crate::groebner::{groebner_basis, interreduce_ordered, Ideal, MarkedGroebnerBasis};
use crate::ordering::{TermOrdering, WeightVector};

use super::cone::{cone_inequalities, initial_forms, lift_unchecked, next_weight};
use super::trace::{Algorithm, WalkTrace};

/// A finished walk with every basis visited on the way.
#[derive(Debug, Clone)]
pub struct WalkRun {
    pub basis: MarkedGroebnerBasis,
    pub trace: WalkTrace,
    /// `bases[k]` is the basis after the `k`-th trace entry; `bases[0]` is
    /// the start basis.
    pub bases: Vec<MarkedGroebnerBasis>,
}

pub(crate) fn check_orderings(ideal: &Ideal, start: &TermOrdering, target: &TermOrdering) -> Result<()> {
    let n = ideal.ring().nvars();
    for o in [start, target] {
        if o.nvars() != n {
            return Err(Error::DimensionMismatch { expected: n, got: o.nvars() });
        }
    }
    Ok(())
}

fn first_row_weight(ord: &TermOrdering, which: &str) -> Result<WeightVector> {
    WeightVector::new(ord.first_row().to_vec()).map_err(|_| {
        Error::UnsupportedOrdering(format!("{} ordering needs a nonnegative, nonzero first row", which))
    })
}

/// Converts the `start` basis of `ideal` into the `target` basis.
pub fn standard_walk(ideal: &Ideal, start: &TermOrdering, target: &TermOrdering) -> Result<(MarkedGroebnerBasis, WalkTrace)> {
    let run = walk(ideal, start, target, false)?;
    Ok((run.basis, run.trace))
}

/// [`standard_walk`], keeping every intermediate basis.
pub fn standard_walk_recorded(ideal: &Ideal, start: &TermOrdering, target: &TermOrdering) -> Result<WalkRun> {
    walk(ideal, start, target, true)
}

fn walk(ideal: &Ideal, start: &TermOrdering, target: &TermOrdering, keep: bool) -> Result<WalkRun> {
    check_orderings(ideal, start, target)?;
    let mut w = first_row_weight(start, "start")?;
    let tau = first_row_weight(target, "target")?;
    let ring = ideal.ring();

    let mut g = groebner_basis(ring, ideal.generators(), start);
    let mut ord = start.clone();
    let mut trace = WalkTrace::new(Algorithm::Standard, g.len());
    trace.crossed.push(w.entries().to_vec());
    let mut bases = if keep { vec![g.clone()] } else { Vec::new() };
    let mut converted_at_target = false;

    while !g.markings_agree_with(target) {
        if converted_at_target {
            return Err(Error::InvalidArgument("walk failed to reach the target cone".into()));
        }
        w = next_weight(&cone_inequalities(&g), &w, &tau)?;
        converted_at_target = w == tau;
        let refined = TermOrdering::weight_refinement(&w, target)?;
        let inw = initial_forms(&g, &w)?;
        let m = groebner_basis(ring, &inw.polynomials(), &refined);
        let lifted = lift_unchecked(&m, &g, &ord);
        g = interreduce_ordered(lifted.into_iter().map(|e| (e.poly().clone(), e.marked().clone())).collect(), &refined)?;
        ord = refined;
        trace.crossed.push(w.entries().to_vec());
        trace.basis_sizes.push(g.len());
        if keep {
            bases.push(g.clone());
        }
    }
    Ok(WalkRun { basis: g.with_provenance(target.name()), trace, bases })
}

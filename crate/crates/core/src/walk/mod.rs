//! Gröbner walks: converting a basis for one term ordering into the basis
//! for another by crossing the cones of the Gröbner fan in between.

mod cone;
mod generic;
mod standard;
mod trace;

pub use crate::groebner::marked_normal_form;
pub use cone::{
    cone_inequalities, dot, initial_forms, lift, next_weight, primitive, segment_cmp, segment_parameter,
    ConeInequalities,
};
pub use generic::{
    facet_initial_form, facet_less, flippable_facets, generic_flip, generic_walk, generic_walk_recorded, min_facet,
    FacetVector, OrderingMatrixPair,
};
pub use standard::{standard_walk, standard_walk_recorded, WalkRun};
pub use trace::{Algorithm, WalkTrace};

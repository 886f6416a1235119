//! Shared fixtures for the benchmarks.

use std::sync::Arc;

use bicat_core::enumerate::{enumerate_lax_functors, LaxQuery};
use bicat_core::laxfun::LaxFunctor;
use bicat_core::{corpus, FiniteBicategory, Strict2Category};

/// Bicategories to validate, smallest first.
pub fn validation_inputs() -> Vec<Arc<FiniteBicategory>> {
    vec![
        corpus::walking_two_cell(),
        corpus::z2_cocycle(),
        corpus::z3_trivial_cocycle(),
        corpus::ordinal(3),
    ]
}

/// 2-categories whose lax cylinders are built.
pub fn cylinder_bases() -> Vec<Strict2Category> {
    [corpus::walking_arrow(), corpus::walking_two_cell(), corpus::thickened_arrow()]
        .into_iter()
        .map(|b| Strict2Category::new(b).expect("corpus 2-category"))
        .collect()
}

/// Every lax functor from the walking arrow to the thickened arrow.
pub fn arrow_functors() -> Vec<Arc<LaxFunctor>> {
    enumerate_lax_functors(&corpus::walking_arrow(), &corpus::thickened_arrow(), &LaxQuery::default())
        .into_iter()
        .map(Arc::new)
        .collect()
}

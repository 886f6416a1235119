//! Independent brute-force oracles used to cross-check the main
//! constructions. They favour transparency over speed.

mod cartesian;
mod classical;
mod equivalence;
mod free;

pub use cartesian::*;
pub use classical::*;
pub use equivalence::*;
pub use free::*;

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::bicat::Strict2Category;
    use crate::corpus;
    use crate::internal::{is_equivalence_in_bicat2, is_p_cartesian, CartesianQuery};
    use crate::laxfun::identity_lax;

    #[test]
    fn literal_cartesian_agrees_in_triangles() {
        for b in [corpus::collapsed_two_cell(), corpus::product_ambient(), corpus::unliftable(), corpus::walking_two_cell()] {
            let s = Strict2Category::new(b.clone()).unwrap();
            for p in b.all_one_cells() {
                for alpha in b.all_two_cells().into_iter().filter(|a| a.target == p.source) {
                    let q = CartesianQuery { ambient: s.clone(), p, alpha };
                    assert_eq!(is_p_cartesian(&q).unwrap(), literal_p_cartesian(&b, p, alpha), "{}", b.name());
                }
            }
        }
    }

    #[test]
    fn identity_has_a_quasi_inverse() {
        let f = Arc::new(identity_lax(corpus::walking_two_cell()));
        assert!(is_equivalence_in_bicat2(&f).verdict);
        assert!(search_quasi_inverse(&f).is_some());
        let lax = Arc::new(corpus::lax_trunc_to_max().unwrap());
        assert!(search_quasi_inverse(&lax).is_none());
    }
}

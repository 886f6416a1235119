use bicat_core::corpus;
use bicat_core::nerve::{check_simplicial_identities, two_nerve, MAX_LEVEL};

#[test]
fn simplicial_identities_through_level_four() {
    for b in [corpus::walking_two_cell(), corpus::sigma_of(&corpus::bool_max())] {
        let x = two_nerve(&b, MAX_LEVEL).unwrap();
        for level in &x.levels {
            assert!(level.category.num_objects() > 0);
        }
        let (checked, failures) = check_simplicial_identities(&x).unwrap();
        assert_eq!(checked, 69);
        assert!(failures.is_empty(), "{failures:?}");
    }
}

#[test]
fn cocycle_nerve_through_level_three() {
    let x = two_nerve(&corpus::z2_cocycle(), 3).unwrap();
    let counts: Vec<usize> = x.levels.iter().map(|l| l.simplices.len()).collect();
    // 2^n choices of edges times the 2-cocycles of the n-simplex with Z/2 values
    assert_eq!(counts, vec![1, 2, 8, 64]);
    assert!(check_simplicial_identities(&x).unwrap().1.is_empty());
}

#[test]
fn truncation_is_bounded() {
    assert!(two_nerve(&corpus::terminal(), MAX_LEVEL + 1).is_err());
}

use super::build::*;
use super::*;
use crate::cat::FiniteCategory;

fn magma_eab() -> PointedMagma {
    // a·a = b, a·b = a, b·a = e, b·b = e
    let els = ["e", "a", "b"].iter().map(|s| s.to_string()).collect();
    PointedMagma::new(els, vec![0, 1, 2, 1, 2, 1, 2, 0, 0], 0).unwrap()
}

fn cocycle() -> FiniteBicategory {
    let z2 = FiniteGroup::cyclic(2);
    cocycle_bicategory(&z2, &z2, &z2_nontrivial_cocycle()).unwrap()
}

#[test]
fn from_category_is_locally_discrete_and_valid() {
    let t = from_category(&FiniteCategory::terminal());
    assert_eq!(t.num_objects(), 1);
    assert!(validate_bicategory(&t).unwrap().is_ok());
    assert!(t.is_strict());

    let b = from_category(&FiniteCategory::ordinal(2));
    assert_eq!(b.num_objects(), 3);
    assert_eq!(b.all_one_cells().len(), 6);
    assert_eq!(b.all_two_cells().len(), 6);
    assert!(validate_bicategory(&b).unwrap().is_ok());
    assert!(b.is_strict());
}

#[test]
fn codiscrete_magma_is_coherent_but_not_associative() {
    let s = magma_eab();
    let (e, a) = (s.find("e").unwrap(), s.find("a").unwrap());
    assert_eq!(s.mul(s.mul(a, a), a), e);
    assert_eq!(s.mul(a, s.mul(a, a)), a);
    let b = codiscrete_bicategory(&s);
    assert!(validate_bicategory(&b).unwrap().is_ok());
    assert!(!b.is_strict());
    let x = b.find_one_cell_anywhere("a").unwrap();
    assert_ne!(b.compose1(b.compose1(x, x), x), b.compose1(x, b.compose1(x, x)));
}

#[test]
fn trivial_magma_gives_terminal_bicategory() {
    let s = PointedMagma::new(vec!["e".into()], vec![0], 0).unwrap();
    let b = codiscrete_bicategory(&s);
    assert_eq!(b.all_one_cells().len(), 1);
    assert_eq!(b.all_two_cells().len(), 1);
    assert!(b.is_strict());
}

#[test]
fn cocycle_bicategory_has_non_identity_associator() {
    let b = cocycle();
    assert!(validate_bicategory(&b).unwrap().is_ok());
    assert!(!b.is_strict());
    let one = b.find_one_cell_anywhere("1").unwrap();
    assert!(!b.is_id2(b.assoc(one, one, one)));

    let zero = ThreeCochain::zero(2);
    let z2 = FiniteGroup::cyclic(2);
    let strict = cocycle_bicategory(&z2, &z2, &zero).unwrap();
    assert!(strict.is_strict());
}

#[test]
fn cocycle_two_cells_add() {
    let b = cocycle();
    let star = ObjId(0);
    let x = b.find_two_cell(star, star, "1:1").unwrap();
    let id = b.find_two_cell(star, star, "1:0").unwrap();
    assert_eq!(b.vcomp(x, x).unwrap(), id);
    assert_eq!(b.vcomp(id, x).unwrap(), x);
    let y = b.find_two_cell(star, star, "0:1").unwrap();
    assert!(b.vcomp(y, x).is_err());
}

#[test]
fn corrupted_associator_fails_pentagon() {
    let mut b = cocycle();
    let one = b.find_one_cell_anywhere("1").unwrap();
    let zero = b.find_one_cell_anywhere("0").unwrap();
    let flip = b.find_two_cell(ObjId(0), ObjId(0), "0:1").unwrap();
    let _ = one;
    b.set_associator(zero, one, one, flip.id);
    let r = validate_bicategory(&b).unwrap();
    assert!(r.has(Law::Pentagon), "{r}");
}

#[test]
fn vcomp_chains_associate() {
    // three parallel 1-cells in a preorder hom
    let cells = vec![vec!["p".to_string(), "q".to_string(), "r".to_string()]];
    let b = build::locally_preordered("chain", vec!["*".into()], cells, vec![0], |_, _, _, g, f| g.max(f), |_, _, x, y| x <= y)
        .unwrap();
    assert!(validate_bicategory(&b).unwrap().is_ok());
    let star = ObjId(0);
    let pq = b.find_two_cell(star, star, "p=>q").unwrap();
    let qr = b.find_two_cell(star, star, "q=>r").unwrap();
    let rr = b.id2(b.tgt2(qr));
    let left = b.vc(rr, b.vc(qr, pq));
    let right = b.vc(b.vc(rr, qr), pq);
    assert_eq!(left, right);
    assert_eq!(b.two_cell_name(left), "p=>r");
}

#[test]
fn hcomp_agrees_with_whiskering_and_interchange() {
    for b in [cocycle(), codiscrete_bicategory(&magma_eab())] {
        let cells = b.all_two_cells();
        for &alpha in &cells {
            for &beta in &cells {
                if alpha.target != beta.source {
                    continue;
                }
                let (f, f2) = (b.src2(alpha), b.tgt2(alpha));
                let (g, g2) = (b.src2(beta), b.tgt2(beta));
                assert_eq!(b.hc(b.id2(g), b.id2(f)), b.id2(b.compose1(g, f)));
                let h = b.hc(beta, alpha);
                assert_eq!(h, b.vc(b.whisker_right(beta, f2), b.whisker_left(g, alpha)));
                assert_eq!(h, b.vc(b.whisker_left(g2, alpha), b.whisker_right(beta, f)));
            }
        }
    }
}

#[test]
fn strict_certificate() {
    let b = Arc::new(from_category(&FiniteCategory::ordinal(1)));
    assert!(Strict2Category::new(b).is_ok());
    assert!(Strict2Category::new(Arc::new(cocycle())).is_err());
}

#[test]
fn non_monotone_composition_is_rejected() {
    let cells = vec![vec!["p".to_string(), "q".to_string()]];
    // q∘q = p but q∘p = q breaks monotonicity for p <= q
    let r = build::locally_preordered(
        "bad",
        vec!["*".into()],
        cells,
        vec![0],
        |_, _, _, g, f| if g == 1 && f == 1 { 0 } else { g.max(f) },
        |_, _, x, y| x <= y,
    );
    assert!(r.is_err());
}

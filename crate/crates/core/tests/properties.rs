//! Randomized invariants over the corpus.

use std::sync::Arc;

use bicat_core::bicat::FiniteBicategory;
use bicat_core::cat::{product_category, validate_category, validate_functor, Functor};
use bicat_core::corpus;
use bicat_core::enumerate::{enumerate_icons, enumerate_lax_functors, LaxQuery};
use bicat_core::icon::{inverse_icon, is_invertible_icon, validate_icon, vcomp_icons, whisker_left_icon, Icon};
use bicat_core::internal::{is_p_cartesian, CartesianQuery};
use bicat_core::laxfun::LaxFunctor;
use bicat_core::nerve::{two_nerve, TruncatedSimplicialCategory};
use bicat_core::{validate_bicategory, FiniteCategory, Law, Strict2Category, TwoCell};
use proptest::prelude::*;
use proptest::sample::select;

fn small_categories() -> Vec<FiniteCategory> {
    vec![
        FiniteCategory::terminal(),
        FiniteCategory::ordinal(1),
        FiniteCategory::ordinal(2),
        FiniteCategory::codiscrete(&["x", "y"]),
        FiniteCategory::discrete(&["p", "q"]),
    ]
}

/// Every icon between lax functors `A → B`.
struct IconHom {
    icons: Vec<Icon>,
}

fn icon_hom(a: &Arc<FiniteBicategory>, b: &Arc<FiniteBicategory>) -> IconHom {
    let functors: Vec<Arc<LaxFunctor>> =
        enumerate_lax_functors(a, b, &LaxQuery::default()).into_iter().map(Arc::new).collect();
    let icons = functors
        .iter()
        .flat_map(|f| functors.iter().flat_map(move |g| enumerate_icons(f, g, None)))
        .collect();
    IconHom { icons }
}

fn same(a: &Icon, b: &Icon) -> bool {
    a.source.table_key() == b.source.table_key()
        && a.target.table_key() == b.target.table_key()
        && a.components == b.components
}

thread_local! {
    static HOM: IconHom = icon_hom(&corpus::walking_arrow(), &corpus::thickened_arrow());
    static NERVE: TruncatedSimplicialCategory = two_nerve(&corpus::walking_two_cell(), 3).unwrap();
}

/// Monotone maps `[m] → [n]`.
fn monotone(m: usize, n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..=n, m + 1).prop_map(|mut v| {
        v.sort_unstable();
        v
    })
}

/// `θ: [m] → [n]` and `φ: [k] → [m]` with `k, m, n ≤ 3`.
fn composable_monotone() -> impl Strategy<Value = (Vec<usize>, Vec<usize>, usize, usize)> {
    (0..=3usize, 0..=3usize, 0..=3usize)
        .prop_flat_map(|(k, m, n)| (monotone(m, n), monotone(k, m), Just(n), Just(m)))
}

fn same_functor(a: &Functor, b: &Functor) -> bool {
    a.obj_map == b.obj_map && a.mor_map == b.mor_map
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_are_categories(i in 0..5usize, j in 0..5usize) {
        let cats = small_categories();
        let (c, d) = (Arc::new(cats[i].clone()), Arc::new(cats[j].clone()));
        let p = Arc::new(product_category(&c, &d));
        prop_assert!(validate_category(&p).is_ok());
        prop_assert_eq!(p.num_objects(), c.num_objects() * d.num_objects());
        let (l, r) = Functor::projections(p.clone(), c, d);
        prop_assert!(validate_functor(&l).unwrap().is_ok());
        prop_assert!(validate_functor(&r).unwrap().is_ok());
    }

    #[test]
    fn remapped_composite_is_rejected(i in 0..5usize, pick in any::<prop::sample::Index>(), to in any::<prop::sample::Index>()) {
        let c = small_categories()[i].clone();
        let pairs = c.composable_pairs();
        let (g, f) = pairs[pick.index(pairs.len())];
        let h = c.comp(g, f);
        let others: Vec<_> = c.morphism_ids().filter(|&m| m != h).collect();
        prop_assume!(!others.is_empty());
        let bad = c.with_composite(g, f, others[to.index(others.len())]);
        prop_assert!(!validate_category(&bad).is_ok());
    }

    #[test]
    fn single_associator_change_breaks_the_pentagon(pick in any::<prop::sample::Index>(), alt in any::<prop::sample::Index>()) {
        let b = corpus::z3_trivial_cocycle();
        let triples = b.composable_triples();
        let (h, g, f) = triples[pick.index(triples.len())];
        let a = b.assoc(h, g, f);
        let others: Vec<TwoCell> = b.cells_between(b.src2(a), b.tgt2(a)).filter(|&c| c != a).collect();
        let mut bad = (*b).clone();
        bad.set_associator(h, g, f, others[alt.index(others.len())].id);
        prop_assert!(validate_bicategory(&bad).unwrap().has(Law::Pentagon));
    }

    #[test]
    fn icon_composition_is_associative(x in any::<prop::sample::Index>(), y in any::<prop::sample::Index>(), z in any::<prop::sample::Index>()) {
        HOM.with(|hom| {
            let n = hom.icons.len();
            let a = &hom.icons[x.index(n)];
            let from = |s: &Arc<LaxFunctor>, k: prop::sample::Index| {
                let next: Vec<&Icon> = hom.icons.iter().filter(|i| i.source.table_key() == s.table_key()).collect();
                next[k.index(next.len())].clone()
            };
            let b = from(&a.target, y);
            let c = from(&b.target, z);
            let l = vcomp_icons(&c, &vcomp_icons(&b, a).unwrap()).unwrap();
            let r = vcomp_icons(&vcomp_icons(&c, &b).unwrap(), a).unwrap();
            prop_assert!(same(&l, &r));
            prop_assert!(validate_icon(&l).unwrap().is_ok());
            Ok(())
        })?;
    }

    #[test]
    fn inverses_are_two_sided(x in any::<prop::sample::Index>()) {
        HOM.with(|hom| {
            let a = &hom.icons[x.index(hom.icons.len())];
            match inverse_icon(a) {
                Some(b) => {
                    prop_assert!(is_invertible_icon(a));
                    prop_assert_eq!(vcomp_icons(&b, a).unwrap().components, bicat_core::icon::identity_icon(a.source.clone()).components);
                    prop_assert_eq!(vcomp_icons(a, &b).unwrap().components, bicat_core::icon::identity_icon(a.target.clone()).components);
                }
                None => prop_assert!(!is_invertible_icon(a)),
            }
            Ok(())
        })?;
    }

    #[test]
    fn left_whiskering_preserves_icons(x in any::<prop::sample::Index>(), h in any::<prop::sample::Index>()) {
        HOM.with(|hom| {
            let a = &hom.icons[x.index(hom.icons.len())];
            let ends: Vec<_> = enumerate_lax_functors(&corpus::thickened_arrow(), &corpus::thickened_arrow(), &LaxQuery::default());
            let h = &ends[h.index(ends.len())];
            let w = whisker_left_icon(h, a).unwrap();
            prop_assert!(validate_icon(&w).unwrap().is_ok());
            Ok(())
        })?;
    }

    #[test]
    fn cartesian_cells_stay_cartesian_under_invertible_precomposition(
        amb in 0..3usize,
        p in any::<prop::sample::Index>(),
        alpha in any::<prop::sample::Index>(),
        theta in any::<prop::sample::Index>(),
    ) {
        let b = [corpus::walking_two_cell(), corpus::product_ambient(), corpus::thickened_arrow()][amb].clone();
        let s = Strict2Category::new(b.clone()).unwrap();
        let ones = b.all_one_cells();
        let p = ones[p.index(ones.len())];
        let cells: Vec<TwoCell> = b.all_two_cells().into_iter().filter(|a| a.target == p.source).collect();
        prop_assume!(!cells.is_empty());
        let alpha = cells[alpha.index(cells.len())];
        let q = CartesianQuery { ambient: s.clone(), p, alpha };
        prop_assume!(is_p_cartesian(&q).unwrap());
        let cells = b.all_two_cells();
        let into: Vec<TwoCell> = cells
            .iter()
            .copied()
            .filter(|&t| b.tgt2(t) == b.src2(alpha))
            .filter(|&t| {
                cells.iter().any(|&u| {
                    b.vcomp(t, u).ok() == Some(b.id2(b.src2(u))) && b.vcomp(u, t).ok() == Some(b.id2(b.src2(t)))
                })
            })
            .collect();
        let theta = into[theta.index(into.len())];
        let q = CartesianQuery { ambient: s, p, alpha: b.vcomp(alpha, theta).unwrap() };
        prop_assert!(is_p_cartesian(&q).unwrap());
    }

    #[test]
    fn nerve_maps_compose((theta, phi, n, m) in composable_monotone()) {
        let composite: Vec<usize> = phi.iter().map(|&i| theta[i]).collect();
        NERVE.with(|x| {
            let t = x.induced(&theta, n).unwrap();
            let f = x.induced(&phi, m).unwrap();
            let c = x.induced(&composite, n).unwrap();
            prop_assert!(same_functor(&f.after(&t).unwrap(), &c));
            Ok(())
        })?;
    }

    #[test]
    fn sampled_functor_is_valid(f in select(enumerate_lax_functors(&corpus::walking_two_cell(), &corpus::z2_cocycle(), &LaxQuery::default()))) {
        prop_assert!(bicat_core::laxfun::validate_lax_functor(&f).unwrap().is_ok());
    }
}

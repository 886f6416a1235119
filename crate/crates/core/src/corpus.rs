//! The bundled corpus of small bicategories, monoidal categories, and
//! functors that the acceptance suite and the command line run against.

use std::sync::Arc;

use crate::bicat::build::*;
use crate::bicat::{FiniteBicategory, OneCell};
use crate::cat::{FiniteCategory, ObjId};
use crate::error::Result;
use crate::laxfun::LaxFunctor;
use crate::monoidal::{enumerate_monoidal_functors, sigma, sigma_functor, MonoidalCategory, MonoidalFunctor};

fn names(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

pub fn terminal() -> Arc<FiniteBicategory> {
    Arc::new(from_category(&FiniteCategory::terminal()).with_name("terminal"))
}

/// The locally discrete bicategory on `0 < 1 < ... < n`.
pub fn ordinal(n: usize) -> Arc<FiniteBicategory> {
    Arc::new(from_category(&FiniteCategory::ordinal(n)).with_name(format!("[{n}]")))
}

pub fn walking_arrow() -> Arc<FiniteBicategory> {
    Arc::new(from_category(&FiniteCategory::ordinal(1)).with_name("walking arrow"))
}

/// Objects `X, Y`, parallel 1-cells `f, g: X → Y`, and one 2-cell `f ⇒ g`.
pub fn walking_two_cell() -> Arc<FiniteBicategory> {
    Arc::new(
        locally_preordered(
            "walking 2-cell",
            names(&["X", "Y"]),
            vec![names(&["1_X"]), names(&["f", "g"]), vec![], names(&["1_Y"])],
            vec![0, 0],
            |a, b, c, g, f| match (a == b, b == c) {
                (true, _) => g,
                _ => f,
            },
            |_, _, x, y| x <= y,
        )
        .expect("walking 2-cell"),
    )
}

/// The walking arrow with its one non-identity hom fattened to two
/// uniquely isomorphic 1-cells `g ≅ g'`.
pub fn thickened_arrow() -> Arc<FiniteBicategory> {
    Arc::new(
        locally_preordered(
            "thickened arrow",
            names(&["X", "Y"]),
            vec![names(&["1_X"]), names(&["g", "g'"]), vec![], names(&["1_Y"])],
            vec![0, 0],
            |a, b, c, g, f| match (a == b, b == c) {
                (true, _) => g,
                _ => f,
            },
            |_, _, _, _| true,
        )
        .expect("thickened arrow"),
    )
}

/// `{e, a, b}` with `a·a = b`, `a·b = a`, `b·a = e`, `b·b = e`.
pub fn magma_eab() -> PointedMagma {
    PointedMagma::new(names(&["e", "a", "b"]), vec![0, 1, 2, 1, 2, 1, 2, 0, 0], 0).expect("e is a unit")
}

pub fn codiscrete_magma() -> Arc<FiniteBicategory> {
    Arc::new(codiscrete_bicategory(&magma_eab()).with_name("codiscrete {e,a,b}"))
}

pub fn z2_cocycle() -> Arc<FiniteBicategory> {
    let z2 = FiniteGroup::cyclic(2);
    Arc::new(
        cocycle_bicategory(&z2, &z2, &z2_nontrivial_cocycle())
            .expect("nontrivial cocycle")
            .with_name("Z/2 cocycle"),
    )
}

/// The cocycle bicategory of `Z/3` with coefficients in `Z/3` and zero
/// cocycle: strict, with two non-identity 2-cells on every 1-cell, so every
/// associator has alternatives.
pub fn z3_trivial_cocycle() -> Arc<FiniteBicategory> {
    let z3 = FiniteGroup::cyclic(3);
    Arc::new(
        cocycle_bicategory(&z3, &z3, &ThreeCochain::zero(3))
            .expect("zero is a cocycle")
            .with_name("Z/3 trivial cocycle"),
    )
}

fn one_object(name: &str, elements: &[&str], compose: impl Fn(usize, usize) -> usize, le: impl Fn(usize, usize) -> bool) -> Arc<MonoidalCategory> {
    let b = locally_preordered(
        name,
        names(&["*"]),
        vec![names(elements)],
        vec![0],
        |_, _, _, g, f| compose(g, f),
        |_, _, x, y| le(x, y),
    )
    .expect("monoidal preorder");
    Arc::new(MonoidalCategory::from_one_object(&b).expect("one object"))
}

/// The discrete monoidal category on the group `Z/2`.
pub fn discrete_z2() -> Arc<MonoidalCategory> {
    one_object("discrete Z/2", &["0", "1"], |g, f| (g + f) % 2, |x, y| x == y)
}

/// `{0 ≤ 1}` under `max`.
pub fn bool_max() -> Arc<MonoidalCategory> {
    one_object("(Bool, max)", &["0", "1"], |g, f| g.max(f), |x, y| x <= y)
}

/// The discrete monoidal category on the monoid `{1, e}` with `e·e = e`.
pub fn idempotent() -> Arc<MonoidalCategory> {
    one_object("{1, e}", &["1", "e"], |g, f| g.max(f), |x, y| x == y)
}

/// `{0 ≤ 1 ≤ 2}` under `max`.
pub fn chain_max() -> Arc<MonoidalCategory> {
    one_object("chain max", &["0", "1", "2"], |g, f| g.max(f), |x, y| x <= y)
}

/// `{0 ≤ 1 ≤ 2}` under addition truncated at 2.
pub fn chain_trunc() -> Arc<MonoidalCategory> {
    one_object("chain trunc", &["0", "1", "2"], |g, f| (g + f).min(2), |x, y| x <= y)
}

pub fn sigma_of(v: &MonoidalCategory) -> Arc<FiniteBicategory> {
    let name = v.name.clone();
    Arc::new(sigma(v).expect("corpus monoidal categories are valid").with_name(format!("Σ({name})")))
}

/// Objects `X, A, B` with 1-cells `X → A`, a single `p: A → B`, and
/// `X → B`, where composites with `p` are given by `proj`. All homs are
/// preorders.
fn triangle(
    name: &str,
    xa: &[&str],
    xb: &[&str],
    proj: impl Fn(usize) -> usize,
    le_xa: impl Fn(usize, usize) -> bool,
    le_xb: impl Fn(usize, usize) -> bool,
) -> Arc<FiniteBicategory> {
    // objects X=0, A=1, B=2
    let mut cells = vec![Vec::new(); 9];
    cells[0] = names(&["1_X"]);
    cells[4] = names(&["1_A"]);
    cells[8] = names(&["1_B"]);
    cells[1] = names(xa);
    cells[5] = names(&["p"]);
    cells[2] = names(xb);
    Arc::new(
        locally_preordered(
            name,
            names(&["X", "A", "B"]),
            cells,
            vec![0, 0, 0],
            |a, b, c, g, f| match (a == b, b == c) {
                (true, _) => g,
                (_, true) => f,
                _ => proj(f),
            },
            |a, b, x, y| match (a, b) {
                (0, 1) => le_xa(x, y),
                (0, 2) => le_xb(x, y),
                _ => x == y,
            },
        )
        .expect("triangle ambient"),
    )
}

/// A walking 2-cell `α: a' ⇒ a` into `A`, and `p: A → B` sending both
/// 1-cells to the same 1-cell and `α` to an identity.
pub fn collapsed_two_cell() -> Arc<FiniteBicategory> {
    triangle("collapsed 2-cell", &["a'", "a"], &["pa"], |_| 0, |x, y| x <= y, |x, y| x == y)
}

/// `X → A` is the product poset `{0,1} × {0,1}` and `p` projects onto the
/// first factor `X → B = {0 ≤ 1}`.
pub fn product_ambient() -> Arc<FiniteBicategory> {
    triangle(
        "product",
        &["00", "01", "10", "11"],
        &["0", "1"],
        |f| f / 2,
        |x, y| x / 2 <= y / 2 && x % 2 <= y % 2,
        |x, y| x <= y,
    )
}

/// `X → A` has a single 1-cell `a` while `X → B` has `b ⇒ pa`: the cell
/// cannot be lifted.
pub fn unliftable() -> Arc<FiniteBicategory> {
    triangle("unliftable", &["a"], &["b", "pa"], |_| 1, |x, y| x == y, |x, y| x <= y)
}

/// Every bicategory in the corpus, small to large.
pub fn bicategories() -> Vec<Arc<FiniteBicategory>> {
    vec![
        terminal(),
        walking_arrow(),
        ordinal(2),
        walking_two_cell(),
        thickened_arrow(),
        codiscrete_magma(),
        z2_cocycle(),
        sigma_of(&discrete_z2()),
        sigma_of(&bool_max()),
        sigma_of(&idempotent()),
        sigma_of(&chain_max()),
        sigma_of(&chain_trunc()),
        collapsed_two_cell(),
        product_ambient(),
        unliftable(),
    ]
}

/// The strict members of the corpus.
pub fn strict_bicategories() -> Vec<Arc<FiniteBicategory>> {
    bicategories().into_iter().filter(|b| b.is_strict()).collect()
}

pub fn monoidal_categories() -> Vec<Arc<MonoidalCategory>> {
    vec![discrete_z2(), bool_max(), idempotent(), chain_max(), chain_trunc()]
}

/// The lax monoidal functor `chain trunc → chain max` that is the identity
/// on objects, with `μ_{1,1}: 1 → 2`.
pub fn trunc_to_max() -> Arc<MonoidalFunctor> {
    let (v, w) = (chain_trunc(), chain_max());
    let ids: Vec<ObjId> = v.base.objects().collect();
    Arc::new(
        enumerate_monoidal_functors(&v, &w)
            .into_iter()
            .find(|f| f.functor.obj_map == ids)
            .expect("identity on objects is lax monoidal"),
    )
}

/// `Σ` of [`trunc_to_max`]: bijective on objects, an isomorphism on the
/// hom, and lax but not a homomorphism.
pub fn lax_trunc_to_max() -> Result<LaxFunctor> {
    let f = trunc_to_max();
    sigma_functor(&f, sigma_of(&f.source), sigma_of(&f.target))
}

/// A strict functor into a bicategory whose non-identity 1-cells are
/// determined by their names, sending 2-cells to identities. Unlisted
/// 1-cells go to identities.
fn strict_by_names(
    source: Arc<FiniteBicategory>,
    target: Arc<FiniteBicategory>,
    objects: &[&str],
    cells: &[(&str, &str)],
) -> Result<LaxFunctor> {
    let obj_map: Vec<ObjId> = objects
        .iter()
        .map(|n| target.find_object(n).expect("object of the target"))
        .collect();
    let on_one = |f: OneCell| {
        let (a, b) = (obj_map[f.source.0], obj_map[f.target.0]);
        let name = source.one_cell_name(f);
        match cells.iter().find(|(from, _)| *from == name) {
            Some((_, to)) => target.find_one_cell(a, b, to).expect("1-cell of the target"),
            None => target.unit_cell(a),
        }
    };
    LaxFunctor::strict(source.clone(), target.clone(), obj_map.clone(), on_one, |c| target.id2(on_one(source.src2(c))))
}

/// The walking arrow included in the thickened arrow: an equivalence.
pub fn arrow_into_thickened() -> LaxFunctor {
    strict_by_names(walking_arrow(), thickened_arrow(), &["X", "Y"], &[("0<1", "g")]).expect("strict inclusion")
}

/// Not bijective on objects.
pub fn arrow_to_terminal() -> LaxFunctor {
    strict_by_names(walking_arrow(), terminal(), &["*", "*"], &[]).expect("constant functor")
}

/// Bijective on objects but misses `g` up to isomorphism.
pub fn arrow_into_two_cell() -> LaxFunctor {
    strict_by_names(walking_arrow(), walking_two_cell(), &["X", "Y"], &[("0<1", "f")]).expect("strict inclusion")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::validate_bicategory;

    #[test]
    fn corpus_is_valid() {
        for b in bicategories() {
            assert!(validate_bicategory(&b).unwrap().is_ok(), "{}", b.name());
        }
    }

    #[test]
    fn corpus_functors_are_valid() {
        use crate::laxfun::validate_lax_functor;
        for f in [arrow_into_thickened(), arrow_to_terminal(), arrow_into_two_cell(), lax_trunc_to_max().unwrap()] {
            assert!(validate_lax_functor(&f).unwrap().is_ok());
        }
        assert!(validate_bicategory(&z3_trivial_cocycle()).unwrap().is_ok());
    }

    #[test]
    fn strict_members() {
        let strict: Vec<String> = strict_bicategories().iter().map(|b| b.name().to_string()).collect();
        assert!(!strict.contains(&"Z/2 cocycle".to_string()));
        assert!(!strict.contains(&"codiscrete {e,a,b}".to_string()));
        assert!(strict.contains(&"walking 2-cell".to_string()));
    }
}

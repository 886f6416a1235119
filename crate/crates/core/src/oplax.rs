//! Oplax natural transformations.
//!
//! An oplax transformation `α: F ⇒ G` has component 1-cells `αA: FA → GA`
//! and constraint 2-cells `αf: αB∘Ff ⇒ Gf∘αA`. Validation works in any
//! bicategory; whiskering and interchange are only offered between strict
//! 2-categories and 2-functors, where they are well defined.

use std::fmt;
use std::sync::Arc;

use crate::bicat::build::from_category;
use crate::bicat::{FiniteBicategory, OneCell, TwoCell};
use crate::cat::{FiniteCategory, MorId, ObjId};
use crate::error::{Result, StructureError};
use crate::icon::Icon;
use crate::laxfun::{classify, compose_lax, same, LaxFunctor, LaxKind};
use crate::report::{Law, ValidationReport};

pub use crate::cylinder::{beta_battery, certify_costrict, is_costrict, Battery, BatteryBounds, Costrictness};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OplaxNat {
    pub source: Arc<LaxFunctor>,
    pub target: Arc<LaxFunctor>,
    /// `αA`, one per object of the common source bicategory.
    pub components: Vec<OneCell>,
    /// `constraints[A * n + B][f]` is `αf`.
    pub constraints: Vec<Vec<MorId>>,
}

impl OplaxNat {
    pub fn from_fn(
        source: Arc<LaxFunctor>,
        target: Arc<LaxFunctor>,
        components: Vec<OneCell>,
        constraint: impl Fn(OneCell) -> TwoCell,
    ) -> Self {
        let b = source.source.clone();
        let mut constraints = Vec::with_capacity(b.num_objects() * b.num_objects());
        for x in b.objects() {
            for y in b.objects() {
                constraints.push(b.one_cells(x, y).map(|f| constraint(f).id).collect());
            }
        }
        OplaxNat {
            source,
            target,
            components,
            constraints,
        }
    }

    /// The ambient bicategory where components and constraints live.
    pub fn ambient(&self) -> &Arc<FiniteBicategory> {
        &self.source.target
    }

    pub fn component(&self, a: ObjId) -> OneCell {
        self.components[a.0]
    }

    pub fn constraint(&self, f: OneCell) -> TwoCell {
        let n = self.source.source.num_objects();
        let c = self.constraints[f.source.0 * n + f.target.0][f.id.0];
        TwoCell::new(self.source.obj(f.source), self.target.obj(f.target), c)
    }

    pub fn set_constraint(&mut self, f: OneCell, cell: MorId) {
        let n = self.source.source.num_objects();
        self.constraints[f.source.0 * n + f.target.0][f.id.0] = cell;
    }
}

fn check_shape(u: &OplaxNat) -> Result<()> {
    let (f, g) = (&u.source, &u.target);
    if !f.is_parallel_to(g) {
        return Err(StructureError::Boundary("oplax transformation between non-parallel lax functors".into()));
    }
    let s = &f.source;
    let t = &f.target;
    let n = s.num_objects();
    if u.components.len() != n {
        return Err(StructureError::Missing(format!(
            "components: expected {}, found {}",
            n,
            u.components.len()
        )));
    }
    for a in s.objects() {
        let c = u.component(a);
        if c.source != f.obj(a) || c.target != g.obj(a) || c.id.0 >= t.hom(c.source, c.target).num_objects() {
            return Err(StructureError::Boundary(format!(
                "component at `{}` is not a 1-cell FA -> GA",
                s.object_name(a)
            )));
        }
    }
    if u.constraints.len() != n * n {
        return Err(StructureError::Missing(format!(
            "constraints: expected {} hom tables, found {}",
            n * n,
            u.constraints.len()
        )));
    }
    for x in s.objects() {
        for y in s.objects() {
            let row = &u.constraints[x.0 * n + y.0];
            if row.len() != s.hom(x, y).num_objects() {
                return Err(StructureError::Missing(format!(
                    "constraints at ({}, {}): expected {}, found {}",
                    s.object_name(x),
                    s.object_name(y),
                    s.hom(x, y).num_objects(),
                    row.len()
                )));
            }
            let bound = t.hom(f.obj(x), g.obj(y)).num_morphisms();
            if let Some(c) = row.iter().find(|c| c.0 >= bound) {
                return Err(StructureError::OutOfRange {
                    what: "constraint".into(),
                    id: c.0,
                    bound,
                });
            }
        }
    }
    Ok(())
}

/// Checks ON0 (naturality in 2-cells), ON1 (composition), and ON2 (units)
/// in full bicategorical form.
pub fn validate_oplax(u: &OplaxNat) -> Result<ValidationReport> {
    check_shape(u)?;
    let (f, g) = (&*u.source, &*u.target);
    let (s, t) = (&*f.source, &*f.target);
    let mut report = ValidationReport::new();
    for x in s.all_one_cells() {
        let c = u.constraint(x);
        let (ua, ub) = (u.component(x.source), u.component(x.target));
        if t.src2(c) != t.compose1(ub, f.map1(x)) || t.tgt2(c) != t.compose1(g.map1(x), ua) {
            report.push(Law::CellBoundary, [s.q1(x)]);
        }
    }
    if !report.is_ok() {
        return Ok(report);
    }

    let comp = |a: ObjId| u.component(a);
    let cons = |x: OneCell| u.constraint(x);
    for rho in s.all_two_cells() {
        if !laws::on0(s, t, f, g, &comp, &cons, rho) {
            report.push(Law::On0, [s.q2(rho)]);
        }
    }
    for (y, x) in s.composable_pairs() {
        if !laws::on1(s, t, f, g, &comp, &cons, y, x) {
            report.push(Law::On1, [s.q1(y), s.q1(x)]);
        }
    }
    for a in s.objects() {
        if !laws::on2(s, t, f, g, &comp, &cons, a) {
            report.push(Law::On2, [s.object_name(a).to_string()]);
        }
    }
    Ok(report)
}

/// Single instances of ON0-ON2, for components and constraints given by
/// closures.
pub mod laws {
    use crate::bicat::{FiniteBicategory, OneCell, TwoCell};
    use crate::cat::ObjId;
    use crate::laxfun::LaxData;

    pub type Components<'a> = &'a dyn Fn(ObjId) -> OneCell;
    pub type Constraints<'a> = &'a dyn Fn(OneCell) -> TwoCell;

    /// `(Gρ ⋆ αA) · αf = αg · (αB ⋆ Fρ)`.
    pub fn on0(
        s: &FiniteBicategory,
        t: &FiniteBicategory,
        f: &impl LaxData,
        g: &impl LaxData,
        comp: Components,
        cons: Constraints,
        rho: TwoCell,
    ) -> bool {
        let (x, y) = (s.src2(rho), s.tgt2(rho));
        let (ua, ub) = (comp(rho.source), comp(rho.target));
        let lhs = t.vc(t.whisker_right(g.map2(rho), ua), cons(x));
        let rhs = t.vc(cons(y), t.whisker_left(ub, f.map2(rho)));
        lhs == rhs
    }

    /// The two pastings `αC∘(Fg∘Ff) ⇒ G(g∘f)∘αA` agree.
    #[allow(clippy::too_many_arguments)]
    pub fn on1(
        s: &FiniteBicategory,
        t: &FiniteBicategory,
        f: &impl LaxData,
        g: &impl LaxData,
        comp: Components,
        cons: Constraints,
        y: OneCell,
        x: OneCell,
    ) -> bool {
        let (ua, ub, uc) = (comp(x.source), comp(x.target), comp(y.target));
        let (fx, fy, gx, gy) = (f.map1(x), f.map1(y), g.map1(x), g.map1(y));
        let lhs = t.vc_chain(&[
            t.assoc_inv(uc, fy, fx),
            t.whisker_right(cons(y), fx),
            t.assoc(gy, ub, fx),
            t.whisker_left(gy, cons(x)),
            t.assoc_inv(gy, gx, ua),
            t.whisker_right(g.phi(y, x), ua),
        ]);
        let rhs = t.vc(cons(s.compose1(y, x)), t.whisker_left(uc, f.phi(y, x)));
        lhs == rhs
    }

    /// `α(j_A) · (αA ⋆ φ⁰_A) = (ψ⁰_A ⋆ αA) · l⁻¹ · r`.
    pub fn on2(
        s: &FiniteBicategory,
        t: &FiniteBicategory,
        f: &impl LaxData,
        g: &impl LaxData,
        comp: Components,
        cons: Constraints,
        a: ObjId,
    ) -> bool {
        let ua = comp(a);
        let lhs = t.vc(cons(s.unit_cell(a)), t.whisker_left(ua, f.phi0(a)));
        let rhs = t.vc_chain(&[t.runitor(ua), t.lunitor_inv(ua), t.whisker_right(g.phi0(a), ua)]);
        lhs == rhs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OplaxClass {
    pub strict: bool,
    pub pseudonatural: bool,
    pub icon: bool,
}

impl fmt::Display for OplaxClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.strict {
            parts.push("strict");
        }
        if self.pseudonatural {
            parts.push("pseudonatural");
        }
        if self.icon {
            parts.push("icon");
        }
        if parts.is_empty() {
            parts.push("general");
        }
        f.write_str(&parts.join("+"))
    }
}

pub fn classify_oplax(u: &OplaxNat) -> OplaxClass {
    let s = &u.source.source;
    let t = u.ambient();
    let cells: Vec<TwoCell> = s.all_one_cells().into_iter().map(|x| u.constraint(x)).collect();
    OplaxClass {
        strict: cells.iter().all(|&c| t.is_id2(c)),
        pseudonatural: cells.iter().all(|&c| t.is_iso2(c)),
        icon: s.objects().all(|a| t.is_unit(u.component(a))),
    }
}

/// The 1-cells whose constraint is not an identity, in canonical order.
pub fn non_identity_constraints(u: &OplaxNat) -> Vec<OneCell> {
    let t = u.ambient();
    u.source
        .source
        .all_one_cells()
        .into_iter()
        .filter(|&x| !t.is_id2(u.constraint(x)))
        .collect()
}

/// `v·u`, with components `vA∘uA` and constraints pasted through the
/// associator of the ambient bicategory.
pub fn vcomp_oplax(v: &OplaxNat, u: &OplaxNat) -> Result<OplaxNat> {
    if u.target != v.source {
        return Err(StructureError::Boundary(
            "vertical composite of oplax transformations: target of the first is not the source of the second"
                .into(),
        ));
    }
    let (f, h) = (&u.source, &v.target);
    let g = &u.target;
    let t = f.target.clone();
    let s = &f.source;
    let components: Vec<OneCell> = s
        .objects()
        .map(|a| t.compose1(v.component(a), u.component(a)))
        .collect();
    Ok(OplaxNat::from_fn(f.clone(), h.clone(), components, |x| {
        let (ua, ub) = (u.component(x.source), u.component(x.target));
        let (va, vb) = (v.component(x.source), v.component(x.target));
        let (fx, gx, hx) = (f.map1(x), g.map1(x), h.map1(x));
        t.vc_chain(&[
            t.assoc(vb, ub, fx),
            t.whisker_left(vb, u.constraint(x)),
            t.assoc_inv(vb, gx, ua),
            t.whisker_right(v.constraint(x), ua),
            t.assoc(hx, va, ua),
        ])
    }))
}

/// The identity transformation, padded by unitors.
pub fn identity_oplax(f: Arc<LaxFunctor>) -> OplaxNat {
    icon_as_oplax(&crate::icon::identity_icon(f))
}

/// `u_f = r_{Gf}⁻¹ · α_f · l_{Ff}` with identity components.
pub fn icon_as_oplax(a: &Icon) -> OplaxNat {
    let (f, g) = (&a.source, &a.target);
    let t = f.target.clone();
    let components = f.source.objects().map(|x| t.unit_cell(f.obj(x))).collect();
    OplaxNat::from_fn(f.clone(), g.clone(), components, |x| {
        t.vc_chain(&[t.lunitor(f.map1(x)), a.component(x), t.runitor_inv(g.map1(x))])
    })
}

/// Strips the unitor padding from an oplax transformation whose components
/// are identity 1-cells; `None` if some component is not an identity.
pub fn oplax_as_icon(u: &OplaxNat) -> Option<Icon> {
    let t = u.ambient().clone();
    if !u.source.source.objects().all(|a| t.is_unit(u.component(a))) {
        return None;
    }
    let (f, g) = (&u.source, &u.target);
    Some(Icon::from_fn(f.clone(), g.clone(), |x| {
        t.vc_chain(&[t.lunitor_inv(f.map1(x)), u.constraint(x), t.runitor(g.map1(x))])
    }))
}

fn require_strict_bicat(b: &FiniteBicategory) -> Result<()> {
    if b.is_strict() {
        Ok(())
    } else {
        Err(StructureError::UnsupportedSetting(format!(
            "`{}` is not a strict 2-category",
            b.name()
        )))
    }
}

fn require_strict_functor(f: &LaxFunctor, role: &str) -> Result<()> {
    require_strict_bicat(&f.source)?;
    require_strict_bicat(&f.target)?;
    if classify(f).kind != LaxKind::Strict {
        return Err(StructureError::UnsupportedSetting(format!("{role} is not a 2-functor")));
    }
    Ok(())
}

fn require_strict_transformation(u: &OplaxNat, role: &str) -> Result<()> {
    require_strict_functor(&u.source, &format!("source of {role}"))?;
    require_strict_functor(&u.target, &format!("target of {role}"))
}

/// `Hu`: components `H(uA)`, constraints `H(uf)`.
pub fn whisker_oplax_left(h: &LaxFunctor, u: &OplaxNat) -> Result<OplaxNat> {
    require_strict_functor(h, "H")?;
    require_strict_transformation(u, "the transformation")?;
    if !same(&u.source.target, &h.source) {
        return Err(StructureError::Boundary("whiskering: H does not start where the transformation lives".into()));
    }
    let f = Arc::new(compose_lax(h, &u.source)?);
    let g = Arc::new(compose_lax(h, &u.target)?);
    let components = u.components.iter().map(|&c| h.map1(c)).collect();
    Ok(OplaxNat::from_fn(f, g, components, |x| h.map2(u.constraint(x))))
}

/// `uK`: components `u_{KA}`, constraints `u_{Kf}`.
pub fn whisker_oplax_right(u: &OplaxNat, k: &LaxFunctor) -> Result<OplaxNat> {
    require_strict_functor(k, "K")?;
    require_strict_transformation(u, "the transformation")?;
    if !same(&k.target, &u.source.source) {
        return Err(StructureError::Boundary("whiskering: K does not land in the transformation's source".into()));
    }
    let f = Arc::new(compose_lax(&u.source, k)?);
    let g = Arc::new(compose_lax(&u.target, k)?);
    let components = k.source.objects().map(|a| u.component(k.obj(a))).collect();
    Ok(OplaxNat::from_fn(f, g, components, |x| u.constraint(k.map1(x))))
}

/// Where the two sides of an interchange first disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InterchangeWitness {
    /// Components differ at this object of α's source.
    Component(ObjId),
    /// Constraints differ at this 1-cell of α's source.
    Constraint(OneCell),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Interchange {
    Holds,
    Fails(InterchangeWitness),
}

impl Interchange {
    pub fn holds(&self) -> bool {
        matches!(self, Interchange::Holds)
    }
}

/// Compares `βG · Hα` with `Kα · βF` for `α: F ⇒ G: A → B` and
/// `β: H ⇒ K: B → C`, components first, then constraints.
pub fn interchange_check(beta: &OplaxNat, alpha: &OplaxNat) -> Result<Interchange> {
    require_strict_transformation(alpha, "alpha")?;
    require_strict_transformation(beta, "beta")?;
    if !same(&alpha.source.target, &beta.source.source) {
        return Err(StructureError::Boundary("interchange: beta does not start where alpha lands".into()));
    }
    let (f, g) = (&alpha.source, &alpha.target);
    let (h, k) = (&beta.source, &beta.target);
    let lhs = vcomp_oplax(&whisker_oplax_right(beta, g)?, &whisker_oplax_left(h, alpha)?)?;
    let rhs = vcomp_oplax(&whisker_oplax_left(k, alpha)?, &whisker_oplax_right(beta, f)?)?;
    let a = &f.source;
    if let Some(x) = a.objects().find(|&x| lhs.component(x) != rhs.component(x)) {
        return Ok(Interchange::Fails(InterchangeWitness::Component(x)));
    }
    if let Some(x) = a
        .all_one_cells()
        .into_iter()
        .find(|&x| lhs.constraint(x) != rhs.constraint(x))
    {
        return Ok(Interchange::Fails(InterchangeWitness::Constraint(x)));
    }
    Ok(Interchange::Holds)
}

/// The walking-arrow witness for a 1-cell `f: X → Y` of `b`: functors
/// `F, G: 2 → b` picking `1_X` and `f`, and the strict transformation with
/// components `1_X` and `f`.
pub fn arrow_witness(b: &Arc<FiniteBicategory>, f: OneCell) -> Result<OplaxNat> {
    let arrow = Arc::new(from_category(&FiniteCategory::ordinal(1)));
    let (x, y) = (f.source, f.target);
    let jx = b.unit_cell(x);
    let is_arrow = |c: OneCell| c.source != c.target;
    let ff = LaxFunctor::strict(arrow.clone(), b.clone(), vec![x, x], |_| jx, |_| b.id2(jx))?;
    let on_one = |c: OneCell| {
        if is_arrow(c) {
            f
        } else if c.source.0 == 0 {
            jx
        } else {
            b.unit_cell(y)
        }
    };
    let gg = LaxFunctor::strict(arrow.clone(), b.clone(), vec![x, y], on_one, |c| b.id2(on_one(arrow.src2(c))))?;
    let components = vec![jx, f];
    let bb = b.clone();
    Ok(OplaxNat::from_fn(Arc::new(ff), Arc::new(gg), components, move |c| {
        // every constraint is an identity on the common boundary
        if c.target.0 == 0 {
            bb.id2(jx)
        } else {
            bb.id2(f)
        }
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictnessVerdict {
    pub strict: bool,
    pub witnesses: Vec<OneCell>,
}

/// Runs the interchange law against the walking-arrow witness of every
/// 1-cell of `β`'s source.
pub fn strictness_by_witness(beta: &OplaxNat) -> Result<StrictnessVerdict> {
    require_strict_transformation(beta, "beta")?;
    let b = beta.source.source.clone();
    let mut witnesses = Vec::new();
    for f in b.all_one_cells() {
        let alpha = arrow_witness(&b, f)?;
        if !interchange_check(beta, &alpha)?.holds() {
            witnesses.push(f);
        }
    }
    Ok(StrictnessVerdict {
        strict: witnesses.is_empty(),
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::build::*;
    use crate::icon::identity_icon;
    use crate::laxfun::identity_lax;

    fn magma_eab() -> PointedMagma {
        let els = ["e", "a", "b"].iter().map(|s| s.to_string()).collect();
        PointedMagma::new(els, vec![0, 1, 2, 1, 2, 1, 2, 0, 0], 0).unwrap()
    }

    /// X, Y with parallel f, g: X → Y and a single cell f ⇒ g.
    fn walking_two_cell() -> Arc<FiniteBicategory> {
        let objects = vec!["X".to_string(), "Y".to_string()];
        let cells = vec![vec!["1_X".into()], vec!["f".into(), "g".into()], vec![], vec!["1_Y".into()]];
        Arc::new(
            locally_preordered(
                "walking 2-cell",
                objects,
                cells,
                vec![0, 0],
                |a, b, c, g, f| match (a == b, b == c) {
                    (true, _) => g,
                    (_, true) => f,
                    _ => unreachable!(),
                },
                |_, _, x, y| x <= y,
            )
            .unwrap(),
        )
    }

    #[test]
    fn identity_transformation_is_strict_pseudo_icon() {
        let b = walking_two_cell();
        let u = identity_oplax(Arc::new(identity_lax(b)));
        assert!(validate_oplax(&u).unwrap().is_ok());
        let c = classify_oplax(&u);
        assert!(c.strict && c.pseudonatural && c.icon);
        assert_eq!(c.to_string(), "strict+pseudonatural+icon");
    }

    #[test]
    fn icon_round_trips_through_oplax() {
        let b = walking_two_cell();
        let f = Arc::new(identity_lax(b.clone()));
        let i = identity_icon(f);
        let u = icon_as_oplax(&i);
        assert_eq!(oplax_as_icon(&u).unwrap(), i);
    }

    #[test]
    fn corrupt_constraint_is_caught() {
        let b = walking_two_cell();
        let mut u = identity_oplax(Arc::new(identity_lax(b.clone())));
        let f = b.find_one_cell(ObjId(0), ObjId(1), "f").unwrap();
        let up = b.find_two_cell(ObjId(0), ObjId(1), "f=>g").unwrap();
        u.set_constraint(f, up.id);
        let r = validate_oplax(&u).unwrap();
        assert!(r.has(Law::CellBoundary));
    }

    #[test]
    fn first_problem_in_codiscrete_magma() {
        let s = magma_eab();
        let b = Arc::new(codiscrete_bicategory(&s));
        let one = Arc::new(from_category(&FiniteCategory::terminal()));
        let star = ObjId(0);
        let e = b.find_one_cell(star, star, "e").unwrap();
        let a = b.find_one_cell(star, star, "a").unwrap();
        let k = Arc::new(LaxFunctor::strict(one.clone(), b.clone(), vec![star], |_| e, |_| b.id2(e)).unwrap());
        let bb = b.clone();
        let t = OplaxNat::from_fn(k.clone(), k.clone(), vec![a], move |_| {
            // a∘e ⇒ e∘a; the codiscrete hom has exactly one such cell
            bb.cells_between(bb.compose1(a, e), bb.compose1(e, a)).next().unwrap()
        });
        assert!(validate_oplax(&t).unwrap().is_ok());
        let left = vcomp_oplax(&vcomp_oplax(&t, &t).unwrap(), &t).unwrap();
        let right = vcomp_oplax(&t, &vcomp_oplax(&t, &t).unwrap()).unwrap();
        assert!(validate_oplax(&left).unwrap().is_ok());
        assert_eq!(b.one_cell_name(left.component(star)), "e");
        assert_eq!(b.one_cell_name(right.component(star)), "a");
    }

    #[test]
    fn whiskering_refuses_non_strict_settings() {
        let s = magma_eab();
        let b = Arc::new(codiscrete_bicategory(&s));
        let id = identity_lax(b.clone());
        let u = identity_oplax(Arc::new(id.clone()));
        assert!(matches!(whisker_oplax_left(&id, &u), Err(StructureError::UnsupportedSetting(_))));
    }

    #[test]
    fn strictness_of_identity_transformation() {
        let b = walking_two_cell();
        let u = identity_oplax(Arc::new(identity_lax(b)));
        let v = strictness_by_witness(&u).unwrap();
        assert!(v.strict);
    }

    #[test]
    fn arrow_witness_is_valid() {
        let b = walking_two_cell();
        for f in b.all_one_cells() {
            let w = arrow_witness(&b, f).unwrap();
            assert!(validate_oplax(&w).unwrap().is_ok(), "{}", b.q1(f));
            assert!(classify_oplax(&w).strict);
        }
    }
}

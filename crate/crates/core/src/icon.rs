//! Icons: oplax transformations with identity components, stored as one
//! natural transformation per hom-category.

use std::sync::Arc;

use crate::bicat::{OneCell, TwoCell};
use crate::cat::{MorId, NatTrans};
use crate::error::{Result, StructureError};
use crate::laxfun::{compose_lax, same, LaxFunctor};
use crate::report::{Law, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Icon {
    pub source: Arc<LaxFunctor>,
    pub target: Arc<LaxFunctor>,
    /// `components[A * n + B][f]` is `α_f: Ff ⇒ Gf`.
    pub components: Vec<Vec<MorId>>,
}

impl Icon {
    pub fn component(&self, f: OneCell) -> TwoCell {
        let n = self.source.source.num_objects();
        let c = self.components[f.source.0 * n + f.target.0][f.id.0];
        TwoCell::new(self.source.obj(f.source), self.source.obj(f.target), c)
    }

    /// The natural transformation `F_{A,B} ⇒ G_{A,B}`.
    pub fn component_nat(&self, a: crate::cat::ObjId, b: crate::cat::ObjId) -> NatTrans {
        let n = self.source.source.num_objects();
        NatTrans {
            source: self.source.hom_map(a, b).clone(),
            target: self.target.hom_map(a, b).clone(),
            components: self.components[a.0 * n + b.0].clone(),
        }
    }

    /// Builds an icon from a closure giving each component.
    pub fn from_fn(
        source: Arc<LaxFunctor>,
        target: Arc<LaxFunctor>,
        component: impl Fn(OneCell) -> TwoCell,
    ) -> Self {
        let b = source.source.clone();
        let mut components = Vec::with_capacity(b.num_objects() * b.num_objects());
        for x in b.objects() {
            for y in b.objects() {
                components.push(b.one_cells(x, y).map(|f| component(f).id).collect());
            }
        }
        Icon {
            source,
            target,
            components,
        }
    }
}

pub fn identity_icon(f: Arc<LaxFunctor>) -> Icon {
    let t = f.target.clone();
    let g = f.clone();
    Icon::from_fn(f, g.clone(), move |x| t.id2(g.map1(x)))
}

/// Checks the structural preconditions shared by all icon operations.
fn check_shape(a: &Icon) -> Result<()> {
    let (f, g) = (&a.source, &a.target);
    if !f.is_parallel_to(g) {
        return Err(StructureError::Boundary("icon between non-parallel lax functors".into()));
    }
    let s = &f.source;
    if let Some(x) = s.objects().find(|&x| f.obj(x) != g.obj(x)) {
        return Err(StructureError::ObjectMapsDisagree(s.object_name(x).to_string()));
    }
    let n = s.num_objects();
    if a.components.len() != n * n {
        return Err(StructureError::Missing(format!(
            "icon components: expected {} hom tables, found {}",
            n * n,
            a.components.len()
        )));
    }
    for x in s.objects() {
        for y in s.objects() {
            let row = &a.components[x.0 * n + y.0];
            let want = s.hom(x, y).num_objects();
            if row.len() != want {
                return Err(StructureError::Missing(format!(
                    "icon components at ({}, {}): expected {}, found {}",
                    s.object_name(x),
                    s.object_name(y),
                    want,
                    row.len()
                )));
            }
            let bound = f.target.hom(f.obj(x), f.obj(y)).num_morphisms();
            if let Some(c) = row.iter().find(|c| c.0 >= bound) {
                return Err(StructureError::OutOfRange {
                    what: "icon component".into(),
                    id: c.0,
                    bound,
                });
            }
        }
    }
    Ok(())
}

pub fn validate_icon(a: &Icon) -> Result<ValidationReport> {
    check_shape(a)?;
    let (f, g) = (&*a.source, &*a.target);
    let (s, t) = (&*f.source, &*f.target);
    let mut report = ValidationReport::new();
    for x in s.all_one_cells() {
        let c = a.component(x);
        if t.src2(c) != f.map1(x) || t.tgt2(c) != g.map1(x) {
            report.push(Law::ComponentBoundary, [s.q1(x)]);
        }
    }
    if !report.is_ok() {
        return Ok(report);
    }
    let comp = |x: OneCell| a.component(x);
    for rho in s.all_two_cells() {
        if !laws::naturality(s, t, f, g, &comp, rho) {
            report.push(Law::Naturality, [s.q2(rho)]);
        }
    }
    for (y, x) in s.composable_pairs() {
        if !laws::icon1(s, t, f, g, &comp, y, x) {
            report.push(Law::Icon1, [s.q1(y), s.q1(x)]);
        }
    }
    for o in s.objects() {
        if !laws::icon2(s, t, f, g, &comp, o) {
            report.push(Law::Icon2, [s.object_name(o)]);
        }
    }
    Ok(report)
}

/// Single instances of the icon conditions, for components given by a
/// closure.
pub mod laws {
    use crate::bicat::{FiniteBicategory, OneCell, TwoCell};
    use crate::cat::ObjId;
    use crate::laxfun::LaxData;

    /// `α_{f'} · Fρ = Gρ · α_f` for `ρ: f ⇒ f'`.
    pub fn naturality(
        s: &FiniteBicategory,
        t: &FiniteBicategory,
        f: &impl LaxData,
        g: &impl LaxData,
        alpha: &dyn Fn(OneCell) -> TwoCell,
        rho: TwoCell,
    ) -> bool {
        let (x, y) = (s.src2(rho), s.tgt2(rho));
        t.vc(alpha(y), f.map2(rho)) == t.vc(g.map2(rho), alpha(x))
    }

    /// `ψ_{g,f} · (α_g ⋆ α_f) = α_{g∘f} · φ_{g,f}`.
    pub fn icon1(
        s: &FiniteBicategory,
        t: &FiniteBicategory,
        f: &impl LaxData,
        g: &impl LaxData,
        alpha: &dyn Fn(OneCell) -> TwoCell,
        y: OneCell,
        x: OneCell,
    ) -> bool {
        let lhs = t.vc(g.phi(y, x), t.hc(alpha(y), alpha(x)));
        let rhs = t.vc(alpha(s.compose1(y, x)), f.phi(y, x));
        lhs == rhs
    }

    /// `α_{j_A} · φ⁰_A = ψ⁰_A`.
    pub fn icon2(
        s: &FiniteBicategory,
        t: &FiniteBicategory,
        f: &impl LaxData,
        g: &impl LaxData,
        alpha: &dyn Fn(OneCell) -> TwoCell,
        a: ObjId,
    ) -> bool {
        t.vc(alpha(s.unit_cell(a)), f.phi0(a)) == g.phi0(a)
    }
}

/// `β·α`, componentwise.
pub fn vcomp_icons(beta: &Icon, alpha: &Icon) -> Result<Icon> {
    if alpha.target != beta.source {
        return Err(StructureError::Boundary(
            "vertical composite of icons: target of the first is not the source of the second".into(),
        ));
    }
    let t = alpha.source.target.clone();
    Ok(Icon::from_fn(alpha.source.clone(), beta.target.clone(), |x| {
        t.vc(beta.component(x), alpha.component(x))
    }))
}

/// `HαK`, with components `H(α_{Kd})`.
pub fn whisker_icons(h: &LaxFunctor, alpha: &Icon, k: &LaxFunctor) -> Result<Icon> {
    let components = whiskered_components(h, alpha, k)?;
    let src = compose_lax(h, &compose_lax(&alpha.source, k)?)?;
    let tgt = compose_lax(h, &compose_lax(&alpha.target, k)?)?;
    Ok(Icon {
        source: Arc::new(src),
        target: Arc::new(tgt),
        components,
    })
}

/// The components of `HαK` alone, without building its boundary functors.
pub fn whiskered_components(h: &LaxFunctor, alpha: &Icon, k: &LaxFunctor) -> Result<Vec<Vec<MorId>>> {
    if !same(&k.target, &alpha.source.source) {
        return Err(StructureError::Boundary("whiskering: K does not land in the icon's source".into()));
    }
    if !same(&alpha.source.target, &h.source) {
        return Err(StructureError::Boundary("whiskering: H does not start at the icon's target".into()));
    }
    let d = &k.source;
    Ok(d.objects()
        .flat_map(|x| d.objects().map(move |y| (x, y)))
        .map(|(x, y)| {
            d.one_cells(x, y)
                .map(|f| h.map2(alpha.component(k.map1(f))).id)
                .collect()
        })
        .collect())
}

/// `Hα`.
pub fn whisker_left_icon(h: &LaxFunctor, alpha: &Icon) -> Result<Icon> {
    let k = crate::laxfun::identity_lax(alpha.source.source.clone());
    whisker_icons(h, alpha, &k)
}

/// `αK`.
pub fn whisker_right_icon(alpha: &Icon, k: &LaxFunctor) -> Result<Icon> {
    let h = crate::laxfun::identity_lax(alpha.source.target.clone());
    whisker_icons(&h, alpha, k)
}

pub fn is_invertible_icon(a: &Icon) -> bool {
    let t = &a.source.target;
    a.source
        .source
        .all_one_cells()
        .into_iter()
        .all(|x| t.is_iso2(a.component(x)))
}

/// The two-sided inverse, when every component is invertible.
pub fn inverse_icon(a: &Icon) -> Option<Icon> {
    if !is_invertible_icon(a) {
        return None;
    }
    let t = a.source.target.clone();
    Some(Icon::from_fn(a.target.clone(), a.source.clone(), |x| {
        t.inverse2(a.component(x)).expect("component is invertible")
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::build::*;
    use crate::bicat::FiniteBicategory;
    use crate::cat::ObjId;
    use crate::laxfun::identity_lax;

    fn cocycle() -> Arc<FiniteBicategory> {
        let z2 = FiniteGroup::cyclic(2);
        Arc::new(cocycle_bicategory(&z2, &z2, &z2_nontrivial_cocycle()).unwrap())
    }

    fn nontrivial_icon(b: &Arc<FiniteBicategory>) -> Icon {
        // α_f is the cell labelled by f itself: additivity gives ICON1 and
        // α_0 = 0 gives ICON2
        let id = Arc::new(identity_lax(b.clone()));
        let bb = b.clone();
        Icon::from_fn(id.clone(), id, move |x| {
            let name = format!("{}:{}", bb.one_cell_name(x), bb.one_cell_name(x));
            bb.find_two_cell(ObjId(0), ObjId(0), &name).unwrap()
        })
    }

    #[test]
    fn identity_icon_is_valid() {
        let f = Arc::new(identity_lax(cocycle()));
        let i = identity_icon(f);
        assert!(validate_icon(&i).unwrap().is_ok());
        assert!(is_invertible_icon(&i));
        assert_eq!(vcomp_icons(&i, &i).unwrap(), i);
    }

    #[test]
    fn nontrivial_cocycle_icon() {
        let b = cocycle();
        let a = nontrivial_icon(&b);
        assert!(validate_icon(&a).unwrap().is_ok());
        let inv = inverse_icon(&a).unwrap();
        assert!(validate_icon(&inv).unwrap().is_ok());
        let id = identity_icon(a.source.clone());
        assert_eq!(vcomp_icons(&inv, &a).unwrap(), id);
    }

    #[test]
    fn perturbed_component_fails_icon1() {
        let b = cocycle();
        let mut a = identity_icon(Arc::new(identity_lax(b.clone())));
        let flip = b.find_two_cell(ObjId(0), ObjId(0), "0:1").unwrap();
        a.components[0][0] = flip.id;
        let r = validate_icon(&a).unwrap();
        assert_eq!(r.first(Law::Icon1).unwrap().witness, vec!["*->*:0", "*->*:0"]);
        assert!(r.has(Law::Icon2));
    }

    #[test]
    fn disagreeing_objects_cannot_carry_an_icon() {
        let b = Arc::new(from_category(&crate::cat::FiniteCategory::discrete(&["x", "y"])));
        let one = Arc::new(from_category(&crate::cat::FiniteCategory::terminal()));
        let to = |o: usize| {
            Arc::new(
                LaxFunctor::strict(one.clone(), b.clone(), vec![ObjId(o)], |_| b.unit_cell(ObjId(o)), |_| {
                    b.id2(b.unit_cell(ObjId(o)))
                })
                .unwrap(),
            )
        };
        let a = Icon {
            source: to(0),
            target: to(1),
            components: vec![vec![MorId(0)]],
        };
        assert!(matches!(validate_icon(&a), Err(StructureError::ObjectMapsDisagree(_))));
    }

    #[test]
    fn whiskering_by_identities_is_neutral() {
        let b = cocycle();
        let a = nontrivial_icon(&b);
        let id = identity_lax(b.clone());
        let w = whisker_icons(&id, &a, &id).unwrap();
        assert_eq!(w, a);
    }
}

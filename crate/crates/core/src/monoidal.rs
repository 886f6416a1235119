//! Monoidal categories, lax monoidal functors, and monoidal transformations,
//! with their laws checked in monoidal notation, and the passage to
//! one-object bicategories.

use std::sync::Arc;

use crate::bicat::{CompositionMap, FiniteBicategory, OneCell, TwoCell};
use crate::cat::{validate_functor, FiniteCategory, Functor, MorId, ObjId};
use crate::error::{Result, StructureError};
use crate::icon::Icon;
use crate::laxfun::LaxFunctor;
use crate::report::{Law, ValidationReport};
use crate::search::Search;

/// A monoidal category. `x ⊗ y` is entry `x * n + y` of `tensor.obj`; the
/// associator `(x⊗y)⊗z → x⊗(y⊗z)` is entry `(x * n + y) * n + z`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalCategory {
    pub name: String,
    pub base: Arc<FiniteCategory>,
    pub tensor: CompositionMap,
    pub unit: ObjId,
    pub associator: Vec<MorId>,
    pub left_unitor: Vec<MorId>,
    pub right_unitor: Vec<MorId>,
}

impl MonoidalCategory {
    /// Reads a one-object bicategory as a monoidal category, with
    /// `x ⊗ y = x∘y`.
    pub fn from_one_object(b: &FiniteBicategory) -> Result<Self> {
        if b.num_objects() != 1 {
            return Err(StructureError::NotOneObject(b.num_objects()));
        }
        let star = ObjId(0);
        let cell = |x: ObjId| OneCell::new(star, star, x);
        let base = b.hom(star, star).clone();
        let mut associator = Vec::new();
        for x in base.objects() {
            for y in base.objects() {
                for z in base.objects() {
                    associator.push(b.assoc(cell(x), cell(y), cell(z)).id);
                }
            }
        }
        Ok(MonoidalCategory {
            name: b.name().to_string(),
            tensor: b.composition_map(star, star, star).clone(),
            unit: b.unit_cell(star).id,
            left_unitor: base.objects().map(|x| b.lunitor(cell(x)).id).collect(),
            right_unitor: base.objects().map(|x| b.runitor(cell(x)).id).collect(),
            associator,
            base,
        })
    }

    pub fn tensor_obj(&self, x: ObjId, y: ObjId) -> ObjId {
        self.tensor.obj[x.0 * self.base.num_objects() + y.0]
    }

    pub fn tensor_mor(&self, u: MorId, v: MorId) -> MorId {
        self.tensor.mor[u.0 * self.base.num_morphisms() + v.0]
    }

    pub fn assoc(&self, x: ObjId, y: ObjId, z: ObjId) -> MorId {
        let n = self.base.num_objects();
        self.associator[(x.0 * n + y.0) * n + z.0]
    }

    pub fn lambda(&self, x: ObjId) -> MorId {
        self.left_unitor[x.0]
    }

    pub fn rho(&self, x: ObjId) -> MorId {
        self.right_unitor[x.0]
    }

    pub fn id(&self, x: ObjId) -> MorId {
        self.base.identity(x)
    }
}

/// The one-object bicategory `ΣV`.
pub fn sigma(v: &MonoidalCategory) -> Result<FiniteBicategory> {
    let n = v.base.num_objects();
    let shape = |what: &str, expected: usize, found: usize| StructureError::Shape {
        what: what.into(),
        expected,
        found,
    };
    if v.associator.len() != n * n * n {
        return Err(shape("associator", n * n * n, v.associator.len()));
    }
    if v.left_unitor.len() != n {
        return Err(shape("left unitor", n, v.left_unitor.len()));
    }
    if v.right_unitor.len() != n {
        return Err(shape("right unitor", n, v.right_unitor.len()));
    }
    let mut b = FiniteBicategory::new(
        v.name.clone(),
        vec!["*".into()],
        vec![v.base.clone()],
        vec![v.tensor.clone()],
        vec![v.unit],
    )?;
    let star = ObjId(0);
    let cell = |x: ObjId| OneCell::new(star, star, x);
    let m = v.base.num_morphisms();
    for x in v.base.objects() {
        for y in v.base.objects() {
            for z in v.base.objects() {
                let a = v.assoc(x, y, z);
                if a.0 >= m {
                    return Err(StructureError::OutOfRange {
                        what: "associator".into(),
                        id: a.0,
                        bound: m,
                    });
                }
                b.set_associator(cell(x), cell(y), cell(z), a);
            }
        }
        for c in [v.lambda(x), v.rho(x)] {
            if c.0 >= m {
                return Err(StructureError::OutOfRange {
                    what: "unitor".into(),
                    id: c.0,
                    bound: m,
                });
            }
        }
        b.set_left_unitor(cell(x), v.lambda(x));
        b.set_right_unitor(cell(x), v.rho(x));
    }
    Ok(b)
}

pub fn validate_monoidal(v: &MonoidalCategory) -> Result<ValidationReport> {
    crate::bicat::validate_bicategory(&sigma(v)?)
}

/// A lax monoidal functor with `μ_{x,y}: Fx ⊗ Fy → F(x ⊗ y)` at
/// `x * n + y` and `η: I → F I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalFunctor {
    pub source: Arc<MonoidalCategory>,
    pub target: Arc<MonoidalCategory>,
    pub functor: Functor,
    pub mu: Vec<MorId>,
    pub eta: MorId,
}

impl MonoidalFunctor {
    pub fn identity(v: Arc<MonoidalCategory>) -> Self {
        let functor = Functor::identity(v.base.clone());
        let n = v.base.num_objects();
        let mu = (0..n * n).map(|i| v.base.identity(v.tensor.obj[i])).collect();
        MonoidalFunctor {
            eta: v.base.identity(v.unit),
            source: v.clone(),
            target: v,
            functor,
            mu,
        }
    }

    pub fn mu(&self, x: ObjId, y: ObjId) -> MorId {
        self.mu[x.0 * self.source.base.num_objects() + y.0]
    }
}

pub fn validate_monoidal_functor(f: &MonoidalFunctor) -> Result<ValidationReport> {
    let (v, w) = (&*f.source, &*f.target);
    let d = &*w.base;
    if *f.functor.source != *v.base || *f.functor.target != *w.base {
        return Err(StructureError::Boundary("underlying functor has the wrong source or target".into()));
    }
    let n = v.base.num_objects();
    if f.mu.len() != n * n {
        return Err(StructureError::Missing(format!(
            "tensor constraints: expected {}, found {}",
            n * n,
            f.mu.len()
        )));
    }
    if let Some(c) = f.mu.iter().chain([&f.eta]).find(|c| c.0 >= d.num_morphisms()) {
        return Err(StructureError::OutOfRange {
            what: "monoidal constraint".into(),
            id: c.0,
            bound: d.num_morphisms(),
        });
    }
    let mut report = validate_functor(&f.functor)?;
    if !report.is_ok() {
        return Ok(report);
    }
    let fo = |x: ObjId| f.functor.obj(x);
    let fm = |u: MorId| f.functor.mor(u);
    let on = |g: MorId, h: MorId| d.comp(g, h);
    for x in v.base.objects() {
        for y in v.base.objects() {
            let m = f.mu(x, y);
            if d.source(m) != w.tensor_obj(fo(x), fo(y)) || d.target(m) != fo(v.tensor_obj(x, y)) {
                report.push(Law::CellBoundary, ["mu".to_string(), v.base.object_name(x).into(), v.base.object_name(y).into()]);
            }
        }
    }
    if d.source(f.eta) != w.unit || d.target(f.eta) != fo(v.unit) {
        report.push(Law::CellBoundary, ["eta"]);
    }
    if !report.is_ok() {
        return Ok(report);
    }
    for u in v.base.morphism_ids() {
        for t in v.base.morphism_ids() {
            let (x, x2, y, y2) = (v.base.source(u), v.base.target(u), v.base.source(t), v.base.target(t));
            let lhs = on(f.mu(x2, y2), w.tensor_mor(fm(u), fm(t)));
            let rhs = on(fm(v.tensor_mor(u, t)), f.mu(x, y));
            if lhs != rhs {
                report.push(Law::ConstraintNaturality, [v.base.name(u), v.base.name(t)]);
            }
        }
    }
    for x in v.base.objects() {
        for y in v.base.objects() {
            for z in v.base.objects() {
                let xy = v.tensor_obj(x, y);
                let yz = v.tensor_obj(y, z);
                let lhs = on(
                    fm(v.assoc(x, y, z)),
                    on(f.mu(xy, z), w.tensor_mor(f.mu(x, y), w.id(fo(z)))),
                );
                let rhs = on(
                    f.mu(x, yz),
                    on(w.tensor_mor(w.id(fo(x)), f.mu(y, z)), w.assoc(fo(x), fo(y), fo(z))),
                );
                if lhs != rhs {
                    report.push(
                        Law::LaxAssociativity,
                        [v.base.object_name(x), v.base.object_name(y), v.base.object_name(z)],
                    );
                }
            }
        }
        let left = on(fm(v.lambda(x)), on(f.mu(v.unit, x), w.tensor_mor(f.eta, w.id(fo(x)))));
        if left != w.lambda(fo(x)) {
            report.push(Law::LaxLeftUnit, [v.base.object_name(x)]);
        }
        let right = on(fm(v.rho(x)), on(f.mu(x, v.unit), w.tensor_mor(w.id(fo(x)), f.eta)));
        if right != w.rho(fo(x)) {
            report.push(Law::LaxRightUnit, [v.base.object_name(x)]);
        }
    }
    Ok(report)
}

/// A monoidal natural transformation between parallel monoidal functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonoidalTransformation {
    pub source: Arc<MonoidalFunctor>,
    pub target: Arc<MonoidalFunctor>,
    pub components: Vec<MorId>,
}

pub fn identity_monoidal(f: Arc<MonoidalFunctor>) -> MonoidalTransformation {
    let d = f.target.base.clone();
    MonoidalTransformation {
        components: f.functor.obj_map.iter().map(|&y| d.identity(y)).collect(),
        source: f.clone(),
        target: f,
    }
}

pub fn vcomp_monoidal(b: &MonoidalTransformation, a: &MonoidalTransformation) -> Result<MonoidalTransformation> {
    if a.target != b.source {
        return Err(StructureError::Boundary("vertical composite of monoidal transformations".into()));
    }
    let d = &a.source.target.base;
    Ok(MonoidalTransformation {
        source: a.source.clone(),
        target: b.target.clone(),
        components: a.components.iter().zip(&b.components).map(|(&x, &y)| d.comp(y, x)).collect(),
    })
}

pub fn validate_monoidal_transformation(t: &MonoidalTransformation) -> Result<ValidationReport> {
    let (f, g) = (&*t.source, &*t.target);
    if f.source != g.source || f.target != g.target {
        return Err(StructureError::Boundary("monoidal transformation between non-parallel functors".into()));
    }
    let (v, w) = (&*f.source, &*f.target);
    let d = &*w.base;
    if t.components.len() != v.base.num_objects() {
        return Err(StructureError::Missing(format!(
            "components: expected {}, found {}",
            v.base.num_objects(),
            t.components.len()
        )));
    }
    if let Some(c) = t.components.iter().find(|c| c.0 >= d.num_morphisms()) {
        return Err(StructureError::OutOfRange {
            what: "component".into(),
            id: c.0,
            bound: d.num_morphisms(),
        });
    }
    let mut report = ValidationReport::new();
    for x in v.base.objects() {
        let c = t.components[x.0];
        if d.source(c) != f.functor.obj(x) || d.target(c) != g.functor.obj(x) {
            report.push(Law::ComponentBoundary, [v.base.object_name(x)]);
        }
    }
    if !report.is_ok() {
        return Ok(report);
    }
    let th = |x: ObjId| t.components[x.0];
    for u in v.base.morphism_ids() {
        let (x, y) = (v.base.source(u), v.base.target(u));
        if d.comp(th(y), f.functor.mor(u)) != d.comp(g.functor.mor(u), th(x)) {
            report.push(Law::Naturality, [v.base.name(u)]);
        }
    }
    for x in v.base.objects() {
        for y in v.base.objects() {
            let lhs = d.comp(g.mu(x, y), w.tensor_mor(th(x), th(y)));
            let rhs = d.comp(th(v.tensor_obj(x, y)), f.mu(x, y));
            if lhs != rhs {
                report.push(Law::MonoidalTensor, [v.base.object_name(x), v.base.object_name(y)]);
            }
        }
    }
    if d.comp(th(v.unit), f.eta) != g.eta {
        report.push(Law::MonoidalUnit, [v.base.object_name(v.unit)]);
    }
    Ok(report)
}

/// Every monoidal transformation `F ⇒ G`, by exhaustive search over
/// component families.
pub fn enumerate_monoidal_transformations(
    f: &Arc<MonoidalFunctor>,
    g: &Arc<MonoidalFunctor>,
) -> Vec<MonoidalTransformation> {
    let v = &f.source;
    let d = f.target.base.clone();
    let mut s = Search::new();
    for x in v.base.objects() {
        let dd = d.clone();
        let (fx, gx) = (f.functor.obj(x), g.functor.obj(x));
        s.var(move |_| dd.hom(fx, gx).iter().map(|m| m.0).collect());
    }
    s.solve(None)
        .into_iter()
        .map(|c| MonoidalTransformation {
            source: f.clone(),
            target: g.clone(),
            components: c.into_iter().map(MorId).collect(),
        })
        .filter(|t| validate_monoidal_transformation(t).map(|r| r.is_ok()).unwrap_or(false))
        .collect()
}

/// Every lax monoidal functor `V → W`, by exhaustive search.
pub fn enumerate_monoidal_functors(v: &Arc<MonoidalCategory>, w: &Arc<MonoidalCategory>) -> Vec<MonoidalFunctor> {
    let (c, d) = (v.base.clone(), w.base.clone());
    let mut s = Search::new();
    let objs: Vec<usize> = c.objects().map(|_| s.range_var(d.num_objects())).collect();
    let mors: Vec<usize> = c
        .morphism_ids()
        .map(|u| {
            let (dd, cc, objs) = (d.clone(), c.clone(), objs.clone());
            s.var(move |cur| {
                let x = ObjId(cur[objs[cc.source(u).0]]);
                let y = ObjId(cur[objs[cc.target(u).0]]);
                dd.hom(x, y).iter().map(|m| m.0).collect()
            })
        })
        .collect();
    let n = c.num_objects();
    // identities and composition, checked as soon as their morphisms are set
    for x in c.objects() {
        let (dd, objs, mors) = (d.clone(), objs.clone(), mors.clone());
        let id = c.identity(x);
        s.check(&[mors[id.0], objs[x.0]], move |cur| {
            cur[mors[id.0]] == dd.identity(ObjId(cur[objs[x.0]])).0
        });
    }
    for (g, h) in c.composable_pairs() {
        let gh = c.comp(g, h);
        let (dd, mors) = (d.clone(), mors.clone());
        s.check(&[mors[g.0], mors[h.0], mors[gh.0]], move |cur| {
            dd.compose(MorId(cur[mors[g.0]]), MorId(cur[mors[h.0]])) == Some(MorId(cur[mors[gh.0]]))
        });
    }
    let mut mu_vars = Vec::with_capacity(n * n);
    for x in c.objects() {
        for y in c.objects() {
            let (vv, ww, dd, objs) = (v.clone(), w.clone(), d.clone(), objs.clone());
            mu_vars.push(s.var(move |cur| {
                let (fx, fy) = (ObjId(cur[objs[x.0]]), ObjId(cur[objs[y.0]]));
                let fxy = ObjId(cur[objs[vv.tensor_obj(x, y).0]]);
                dd.hom(ww.tensor_obj(fx, fy), fxy).iter().map(|m| m.0).collect()
            }));
        }
    }
    let (vv, ww, dd, objs2) = (v.clone(), w.clone(), d.clone(), objs.clone());
    s.var(move |cur| {
        let fi = ObjId(cur[objs2[vv.unit.0]]);
        dd.hom(ww.unit, fi).iter().map(|m| m.0).collect()
    });
    let build = |sol: &[usize]| MonoidalFunctor {
        source: v.clone(),
        target: w.clone(),
        functor: Functor {
            source: c.clone(),
            target: d.clone(),
            obj_map: objs.iter().map(|&i| ObjId(sol[i])).collect(),
            mor_map: mors.iter().map(|&i| MorId(sol[i])).collect(),
        },
        mu: mu_vars.iter().map(|&i| MorId(sol[i])).collect(),
        eta: MorId(sol[sol.len() - 1]),
    };
    s.solve(None)
        .into_iter()
        .map(|sol| build(&sol))
        .filter(|f| validate_monoidal_functor(f).map(|r| r.is_ok()).unwrap_or(false))
        .collect()
}

/// `ΣF: ΣV → ΣW`.
pub fn sigma_functor(
    f: &MonoidalFunctor,
    source: Arc<FiniteBicategory>,
    target: Arc<FiniteBicategory>,
) -> Result<LaxFunctor> {
    if source.num_objects() != 1 || target.num_objects() != 1 {
        return Err(StructureError::NotOneObject(source.num_objects().max(target.num_objects())));
    }
    if **source.hom(ObjId(0), ObjId(0)) != *f.source.base || **target.hom(ObjId(0), ObjId(0)) != *f.target.base {
        return Err(StructureError::Boundary("Σ of a monoidal functor: hom-categories do not match".into()));
    }
    let star = ObjId(0);
    let comp = source
        .composable_pairs()
        .into_iter()
        .map(|(g, h)| f.mu(g.id, h.id))
        .collect();
    LaxFunctor::new(source, target, vec![star], vec![f.functor.clone()], comp, vec![f.eta])
}

/// Reads a lax functor between one-object bicategories as a monoidal
/// functor.
pub fn monoidal_functor_from_lax(
    f: &LaxFunctor,
    source: Arc<MonoidalCategory>,
    target: Arc<MonoidalCategory>,
) -> Result<MonoidalFunctor> {
    if f.source.num_objects() != 1 {
        return Err(StructureError::NotOneObject(f.source.num_objects()));
    }
    if f.target.num_objects() != 1 {
        return Err(StructureError::NotOneObject(f.target.num_objects()));
    }
    let star = ObjId(0);
    let base = f.source.hom(star, star);
    let cell = |x: ObjId| OneCell::new(star, star, x);
    let mut mu = Vec::new();
    for x in base.objects() {
        for y in base.objects() {
            mu.push(f.phi(cell(x), cell(y)).id);
        }
    }
    Ok(MonoidalFunctor {
        source,
        target,
        functor: f.hom_map(star, star).clone(),
        mu,
        eta: f.phi0(star).id,
    })
}

/// The icon `ΣF ⇒ ΣG` with the same components as `θ`.
pub fn monoidal_to_icon(t: &MonoidalTransformation, sf: Arc<LaxFunctor>, sg: Arc<LaxFunctor>) -> Icon {
    Icon {
        source: sf,
        target: sg,
        components: vec![t.components.clone()],
    }
}

/// The monoidal transformation with the same components as an icon
/// between lax functors of one-object bicategories.
pub fn icon_to_monoidal(
    a: &Icon,
    f: Arc<MonoidalFunctor>,
    g: Arc<MonoidalFunctor>,
) -> Result<MonoidalTransformation> {
    let n = a.source.source.num_objects();
    if n != 1 {
        return Err(StructureError::NotOneObject(n));
    }
    if a.source.target.num_objects() != 1 {
        return Err(StructureError::NotOneObject(a.source.target.num_objects()));
    }
    let star = ObjId(0);
    let components = a
        .source
        .source
        .one_cells(star, star)
        .map(|x| a.component(x).id)
        .collect();
    Ok(MonoidalTransformation {
        source: f,
        target: g,
        components,
    })
}

/// The 2-cell of `ΣW` for a morphism of `W`.
pub fn as_two_cell(m: MorId) -> TwoCell {
    TwoCell::new(ObjId(0), ObjId(0), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::build::*;
    use crate::icon::validate_icon;

    fn chain(truncated: bool) -> Arc<MonoidalCategory> {
        let cells = vec![vec!["0".to_string(), "1".to_string(), "2".to_string()]];
        let b = locally_preordered(
            if truncated { "chain+" } else { "chain-max" },
            vec!["*".into()],
            cells,
            vec![0],
            move |_, _, _, g, f| if truncated { (g + f).min(2) } else { g.max(f) },
            |_, _, x, y| x <= y,
        )
        .unwrap();
        Arc::new(MonoidalCategory::from_one_object(&b).unwrap())
    }

    #[test]
    fn sigma_round_trips() {
        let z2 = FiniteGroup::cyclic(2);
        let b = cocycle_bicategory(&z2, &z2, &z2_nontrivial_cocycle()).unwrap();
        let v = MonoidalCategory::from_one_object(&b).unwrap();
        assert_eq!(sigma(&v).unwrap(), b);
        assert!(validate_monoidal(&v).unwrap().is_ok());
    }

    #[test]
    fn sigma_of_discrete_z2_is_strict_with_two_cells() {
        let z2 = FiniteGroup::cyclic(2);
        let m = PointedMagma::new(z2.elements.clone(), z2.table.clone(), 0).unwrap();
        let disc = locally_preordered(
            "Z/2",
            vec!["*".into()],
            vec![m.elements.clone()],
            vec![0],
            |_, _, _, g, f| m.mul(g, f),
            |_, _, x, y| x == y,
        )
        .unwrap();
        let v = MonoidalCategory::from_one_object(&disc).unwrap();
        let s = sigma(&v).unwrap();
        assert_eq!(s.all_one_cells().len(), 2);
        assert!(s.is_strict());
    }

    #[test]
    fn identity_monoidal_functor_is_valid() {
        let v = chain(false);
        let id = MonoidalFunctor::identity(v);
        assert!(validate_monoidal_functor(&id).unwrap().is_ok());
    }

    #[test]
    fn truncated_sum_to_max_is_lax() {
        // max(x, y) <= min(x + y, 2), so the identity on objects is lax
        // monoidal from truncated sum to max, with μ_{1,1}: 1 -> 2
        let (plus, max) = (chain(true), chain(false));
        let all = enumerate_monoidal_functors(&plus, &max);
        let id_on_objects: Vec<_> = all
            .iter()
            .filter(|f| f.functor.obj_map == plus.base.objects().collect::<Vec<_>>())
            .collect();
        assert_eq!(id_on_objects.len(), 1);
        let f = id_on_objects[0];
        let one = ObjId(1);
        assert_eq!(max.base.name(f.mu(one, one)), "1=>2");
    }

    #[test]
    fn monoidal_transformations_match_icons() {
        let v = chain(false);
        let fs: Vec<Arc<MonoidalFunctor>> = enumerate_monoidal_functors(&v, &v).into_iter().map(Arc::new).collect();
        let sv = Arc::new(sigma(&v).unwrap());
        for f in fs.iter().take(3) {
            for g in fs.iter().take(3) {
                let ts = enumerate_monoidal_transformations(f, g);
                let sf = Arc::new(sigma_functor(f, sv.clone(), sv.clone()).unwrap());
                let sg = Arc::new(sigma_functor(g, sv.clone(), sv.clone()).unwrap());
                for t in &ts {
                    let i = monoidal_to_icon(t, sf.clone(), sg.clone());
                    assert!(validate_icon(&i).unwrap().is_ok());
                    assert_eq!(&icon_to_monoidal(&i, f.clone(), g.clone()).unwrap(), t);
                }
            }
        }
    }
}

//! Lax functors between finite bicategories.
//!
//! A lax functor carries comparison cells `φ_{g,f}: Fg∘Ff ⇒ F(g∘f)`, stored
//! at the source's [`FiniteBicategory::pair_index`], and unit comparisons
//! `φ⁰_A: j_{FA} ⇒ F(j_A)`.

use std::fmt;
use std::sync::Arc;

use crate::bicat::{FiniteBicategory, OneCell, TwoCell};
use crate::cat::{validate_functor, Functor, MorId, ObjId};
use crate::error::{Result, StructureError};
use crate::report::{Law, ValidationReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxFunctor {
    pub source: Arc<FiniteBicategory>,
    pub target: Arc<FiniteBicategory>,
    pub obj_map: Vec<ObjId>,
    /// Indexed `A * |objects| + B`.
    pub hom_maps: Vec<Functor>,
    pub comp_constraint: Vec<MorId>,
    pub unit_constraint: Vec<MorId>,
}

/// Position in the strict ⇒ normal homomorphism ⇒ homomorphism ⇒ lax chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LaxKind {
    Strict,
    NormalHomomorphism,
    Homomorphism,
    Lax,
}

impl LaxKind {
    pub fn name(self) -> &'static str {
        match self {
            LaxKind::Strict => "strict",
            LaxKind::NormalHomomorphism => "normal-homomorphism",
            LaxKind::Homomorphism => "homomorphism",
            LaxKind::Lax => "lax",
        }
    }
}

impl fmt::Display for LaxKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LaxClass {
    pub kind: LaxKind,
    pub phi_invertible: bool,
    pub unit_invertible: bool,
    pub phi_identity: bool,
    pub unit_identity: bool,
}

impl LaxClass {
    /// At least as strict as `kind`.
    pub fn at_least(&self, kind: LaxKind) -> bool {
        self.kind <= kind
    }
}

impl fmt::Display for LaxClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (phi invertible: {}, unit invertible: {}, phi identity: {}, unit identity: {})",
            self.kind, self.phi_invertible, self.unit_invertible, self.phi_identity, self.unit_identity
        )
    }
}

impl LaxFunctor {
    /// Assembles a lax functor, checking only that every table has the
    /// right shape and every id resolves.
    pub fn new(
        source: Arc<FiniteBicategory>,
        target: Arc<FiniteBicategory>,
        obj_map: Vec<ObjId>,
        hom_maps: Vec<Functor>,
        comp_constraint: Vec<MorId>,
        unit_constraint: Vec<MorId>,
    ) -> Result<Self> {
        let n = source.num_objects();
        if obj_map.len() != n {
            return Err(StructureError::Shape {
                what: "object map".into(),
                expected: n,
                found: obj_map.len(),
            });
        }
        if let Some(x) = obj_map.iter().find(|x| x.0 >= target.num_objects()) {
            return Err(StructureError::OutOfRange {
                what: "object image".into(),
                id: x.0,
                bound: target.num_objects(),
            });
        }
        if hom_maps.len() != n * n {
            return Err(StructureError::Shape {
                what: "hom functors".into(),
                expected: n * n,
                found: hom_maps.len(),
            });
        }
        for a in source.objects() {
            for b in source.objects() {
                let fun = &hom_maps[a.0 * n + b.0];
                if *fun.source != **source.hom(a, b) || *fun.target != **target.hom(obj_map[a.0], obj_map[b.0]) {
                    return Err(StructureError::Boundary(format!(
                        "hom functor at ({}, {}) has the wrong source or target",
                        source.object_name(a),
                        source.object_name(b)
                    )));
                }
            }
        }
        if comp_constraint.len() != source.num_pairs() {
            return Err(StructureError::Missing(format!(
                "composition constraints: expected {}, found {}",
                source.num_pairs(),
                comp_constraint.len()
            )));
        }
        if unit_constraint.len() != n {
            return Err(StructureError::Missing(format!(
                "unit constraints: expected {}, found {}",
                n,
                unit_constraint.len()
            )));
        }
        let f = LaxFunctor {
            source,
            target,
            obj_map,
            hom_maps,
            comp_constraint,
            unit_constraint,
        };
        for (g, h) in f.source.composable_pairs() {
            let c = f.comp_constraint[f.source.pair_index(g, h)];
            let bound = f.target.hom(f.obj(h.source), f.obj(g.target)).num_morphisms();
            if c.0 >= bound {
                return Err(StructureError::OutOfRange {
                    what: "composition constraint".into(),
                    id: c.0,
                    bound,
                });
            }
        }
        for a in f.source.objects() {
            let c = f.unit_constraint[a.0];
            let bound = f.target.hom(f.obj(a), f.obj(a)).num_morphisms();
            if c.0 >= bound {
                return Err(StructureError::OutOfRange {
                    what: "unit constraint".into(),
                    id: c.0,
                    bound,
                });
            }
        }
        Ok(f)
    }

    /// A lax functor with identity constraints, from maps on cells. Fails
    /// unless the maps preserve composition and identity 1-cells on the nose.
    pub fn strict(
        source: Arc<FiniteBicategory>,
        target: Arc<FiniteBicategory>,
        obj_map: Vec<ObjId>,
        on_one: impl Fn(OneCell) -> OneCell,
        on_two: impl Fn(TwoCell) -> TwoCell,
    ) -> Result<Self> {
        let n = source.num_objects();
        let mut hom_maps = Vec::with_capacity(n * n);
        for a in source.objects() {
            for b in source.objects() {
                let (fa, fb) = (obj_map[a.0], obj_map[b.0]);
                hom_maps.push(Functor {
                    source: source.hom(a, b).clone(),
                    target: target.hom(fa, fb).clone(),
                    obj_map: source.one_cells(a, b).map(|f| on_one(f).id).collect(),
                    mor_map: source.two_cells(a, b).map(|c| on_two(c).id).collect(),
                });
            }
        }
        let mut comp = Vec::with_capacity(source.num_pairs());
        for (g, f) in source.composable_pairs() {
            let lhs = target.compose1(on_one(g), on_one(f));
            let rhs = on_one(source.compose1(g, f));
            if lhs != rhs {
                return Err(StructureError::Invalid(format!(
                    "images of `{}` and `{}` do not compose to the image of their composite",
                    source.q1(g),
                    source.q1(f)
                )));
            }
            comp.push(target.id2(lhs).id);
        }
        let mut unit = Vec::with_capacity(n);
        for a in source.objects() {
            let j = target.unit_cell(obj_map[a.0]);
            if on_one(source.unit_cell(a)) != j {
                return Err(StructureError::Invalid(format!(
                    "identity of `{}` is not sent to an identity",
                    source.object_name(a)
                )));
            }
            unit.push(target.id2(j).id);
        }
        LaxFunctor::new(source, target, obj_map, hom_maps, comp, unit)
    }

    /// Every table flattened; equal keys mean equal functors between the
    /// same bicategories.
    pub fn table_key(&self) -> Vec<usize> {
        let mut k: Vec<usize> = self.obj_map.iter().map(|x| x.0).collect();
        for h in &self.hom_maps {
            k.extend(h.obj_map.iter().map(|x| x.0));
            k.extend(h.mor_map.iter().map(|x| x.0));
        }
        k.extend(self.comp_constraint.iter().map(|x| x.0));
        k.extend(self.unit_constraint.iter().map(|x| x.0));
        k
    }

    pub fn obj(&self, a: ObjId) -> ObjId {
        self.obj_map[a.0]
    }

    pub fn hom_map(&self, a: ObjId, b: ObjId) -> &Functor {
        &self.hom_maps[a.0 * self.source.num_objects() + b.0]
    }

    pub fn map1(&self, f: OneCell) -> OneCell {
        OneCell::new(self.obj(f.source), self.obj(f.target), self.hom_map(f.source, f.target).obj(f.id))
    }

    pub fn map2(&self, c: TwoCell) -> TwoCell {
        TwoCell::new(self.obj(c.source), self.obj(c.target), self.hom_map(c.source, c.target).mor(c.id))
    }

    /// `φ_{g,f}: Fg∘Ff ⇒ F(g∘f)`.
    pub fn phi(&self, g: OneCell, f: OneCell) -> TwoCell {
        let c = self.comp_constraint[self.source.pair_index(g, f)];
        TwoCell::new(self.obj(f.source), self.obj(g.target), c)
    }

    /// `φ⁰_A: j_{FA} ⇒ F(j_A)`.
    pub fn phi0(&self, a: ObjId) -> TwoCell {
        TwoCell::new(self.obj(a), self.obj(a), self.unit_constraint[a.0])
    }

    pub fn set_phi(&mut self, g: OneCell, f: OneCell, cell: MorId) {
        let i = self.source.pair_index(g, f);
        self.comp_constraint[i] = cell;
    }

    pub fn set_phi0(&mut self, a: ObjId, cell: MorId) {
        self.unit_constraint[a.0] = cell;
    }

    /// Same source, target, and object map.
    pub fn is_parallel_to(&self, other: &LaxFunctor) -> bool {
        same(&self.source, &other.source) && same(&self.target, &other.target)
    }
}

pub(crate) fn same(a: &Arc<FiniteBicategory>, b: &Arc<FiniteBicategory>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

pub fn identity_lax(b: Arc<FiniteBicategory>) -> LaxFunctor {
    LaxFunctor::strict(b.clone(), b.clone(), b.objects().collect(), |f| f, |c| c)
        .expect("identity maps preserve everything")
}

/// `G∘F`, with `χ_{g,f} = G(φ_{g,f}) · ψ_{Fg,Ff}` and `χ⁰_A = G(φ⁰_A) · ψ⁰_{FA}`.
pub fn compose_lax(g: &LaxFunctor, f: &LaxFunctor) -> Result<LaxFunctor> {
    if !same(&f.target, &g.source) {
        return Err(StructureError::Boundary(format!(
            "cannot compose: first functor lands in `{}`, second starts at `{}`",
            f.target.name(),
            g.source.name()
        )));
    }
    let src = &f.source;
    let tgt = &g.target;
    let n = src.num_objects();
    let obj_map: Vec<ObjId> = f.obj_map.iter().map(|&x| g.obj(x)).collect();
    let mut hom_maps = Vec::with_capacity(n * n);
    for a in src.objects() {
        for b in src.objects() {
            hom_maps.push(g.hom_map(f.obj(a), f.obj(b)).after(f.hom_map(a, b))?);
        }
    }
    let comp = src
        .composable_pairs()
        .into_iter()
        .map(|(y, x)| {
            let psi = g.phi(f.map1(y), f.map1(x));
            tgt.vc(g.map2(f.phi(y, x)), psi).id
        })
        .collect();
    let unit = src
        .objects()
        .map(|a| tgt.vc(g.map2(f.phi0(a)), g.phi0(f.obj(a))).id)
        .collect();
    LaxFunctor::new(src.clone(), tgt.clone(), obj_map, hom_maps, comp, unit)
}

pub fn validate_lax_functor(fun: &LaxFunctor) -> Result<ValidationReport> {
    let (s, t) = (&*fun.source, &*fun.target);
    let mut report = ValidationReport::new();
    for a in s.objects() {
        for b in s.objects() {
            let r = validate_functor(fun.hom_map(a, b))?;
            if !r.is_ok() {
                for v in r.violations {
                    let mut w = vec![format!("{}->{}", s.object_name(a), s.object_name(b))];
                    w.push(v.law.name().to_string());
                    w.extend(v.witness);
                    report.push(Law::HomFunctor, w);
                }
            }
        }
    }
    if !report.is_ok() {
        return Ok(report);
    }

    let pairs = s.composable_pairs();
    for &(g, f) in &pairs {
        let phi = fun.phi(g, f);
        if t.src2(phi) != t.compose1(fun.map1(g), fun.map1(f)) || t.tgt2(phi) != fun.map1(s.compose1(g, f)) {
            report.push(Law::CellBoundary, ["phi".to_string(), s.q1(g), s.q1(f)]);
        }
    }
    for a in s.objects() {
        let p = fun.phi0(a);
        if t.src2(p) != t.unit_cell(fun.obj(a)) || t.tgt2(p) != fun.map1(s.unit_cell(a)) {
            report.push(Law::CellBoundary, ["phi0".to_string(), s.object_name(a).to_string()]);
        }
    }
    if !report.is_ok() {
        return Ok(report);
    }

    // naturality of φ, one variable at a time
    for &(g, f) in &pairs {
        for rho in s.two_cells(f.source, f.target).filter(|&r| s.src2(r) == f) {
            if !laws::phi_natural_right(s, t, fun, g, rho) {
                report.push(Law::ConstraintNaturality, [s.q1(g), s.q2(rho)]);
            }
        }
        for sigma in s.two_cells(g.source, g.target).filter(|&c| s.src2(c) == g) {
            if !laws::phi_natural_left(s, t, fun, sigma, f) {
                report.push(Law::ConstraintNaturality, [s.q2(sigma), s.q1(f)]);
            }
        }
    }
    for (h, g, f) in s.composable_triples() {
        if !laws::associativity(s, t, fun, h, g, f) {
            report.push(Law::LaxAssociativity, [s.q1(h), s.q1(g), s.q1(f)]);
        }
    }
    for f in s.all_one_cells() {
        if !laws::left_unit(s, t, fun, f) {
            report.push(Law::LaxLeftUnit, [s.q1(f)]);
        }
        if !laws::right_unit(s, t, fun, f) {
            report.push(Law::LaxRightUnit, [s.q1(f)]);
        }
    }
    Ok(report)
}

/// Read access to the data of a lax functor, so that the axioms can be
/// evaluated on partial assignments during enumeration.
pub trait LaxData {
    fn obj(&self, a: ObjId) -> ObjId;
    fn map1(&self, f: OneCell) -> OneCell;
    fn map2(&self, c: TwoCell) -> TwoCell;
    fn phi(&self, g: OneCell, f: OneCell) -> TwoCell;
    fn phi0(&self, a: ObjId) -> TwoCell;
}

impl LaxData for LaxFunctor {
    fn obj(&self, a: ObjId) -> ObjId {
        LaxFunctor::obj(self, a)
    }
    fn map1(&self, f: OneCell) -> OneCell {
        LaxFunctor::map1(self, f)
    }
    fn map2(&self, c: TwoCell) -> TwoCell {
        LaxFunctor::map2(self, c)
    }
    fn phi(&self, g: OneCell, f: OneCell) -> TwoCell {
        LaxFunctor::phi(self, g, f)
    }
    fn phi0(&self, a: ObjId) -> TwoCell {
        LaxFunctor::phi0(self, a)
    }
}

/// Single instances of the lax functor axioms.
pub mod laws {
    use super::LaxData;
    use crate::bicat::{FiniteBicategory, OneCell, TwoCell};

    /// `φ_{g,f'} · (Fg ⋆ Fρ) = F(g ⋆ ρ) · φ_{g,f}` for `ρ: f ⇒ f'`.
    pub fn phi_natural_right(s: &FiniteBicategory, t: &FiniteBicategory, fun: &impl LaxData, g: OneCell, rho: TwoCell) -> bool {
        let (f, f2) = (s.src2(rho), s.tgt2(rho));
        let lhs = t.vc(fun.phi(g, f2), t.whisker_left(fun.map1(g), fun.map2(rho)));
        let rhs = t.vc(fun.map2(s.whisker_left(g, rho)), fun.phi(g, f));
        lhs == rhs
    }

    /// `φ_{g',f} · (Fσ ⋆ Ff) = F(σ ⋆ f) · φ_{g,f}` for `σ: g ⇒ g'`.
    pub fn phi_natural_left(s: &FiniteBicategory, t: &FiniteBicategory, fun: &impl LaxData, sigma: TwoCell, f: OneCell) -> bool {
        let (g, g2) = (s.src2(sigma), s.tgt2(sigma));
        let lhs = t.vc(fun.phi(g2, f), t.whisker_right(fun.map2(sigma), fun.map1(f)));
        let rhs = t.vc(fun.map2(s.whisker_right(sigma, f)), fun.phi(g, f));
        lhs == rhs
    }

    /// `φ_{h,gf} · (Fh ⋆ φ_{g,f}) · a = F(a) · φ_{hg,f} · (φ_{h,g} ⋆ Ff)`.
    pub fn associativity(
        s: &FiniteBicategory,
        t: &FiniteBicategory,
        fun: &impl LaxData,
        h: OneCell,
        g: OneCell,
        f: OneCell,
    ) -> bool {
        let (fh, fg, ff) = (fun.map1(h), fun.map1(g), fun.map1(f));
        let lhs = t.vc_chain(&[
            t.assoc(fh, fg, ff),
            t.whisker_left(fh, fun.phi(g, f)),
            fun.phi(h, s.compose1(g, f)),
        ]);
        let rhs = t.vc_chain(&[
            t.whisker_right(fun.phi(h, g), ff),
            fun.phi(s.compose1(h, g), f),
            fun.map2(s.assoc(h, g, f)),
        ]);
        lhs == rhs
    }

    /// `l_{Ff} = F(l_f) · φ_{j,f} · (φ⁰ ⋆ Ff)`.
    pub fn left_unit(s: &FiniteBicategory, t: &FiniteBicategory, fun: &impl LaxData, f: OneCell) -> bool {
        let ff = fun.map1(f);
        let lhs = t.vc_chain(&[
            t.whisker_right(fun.phi0(f.target), ff),
            fun.phi(s.unit_cell(f.target), f),
            fun.map2(s.lunitor(f)),
        ]);
        lhs == t.lunitor(ff)
    }

    /// `r_{Ff} = F(r_f) · φ_{f,j} · (Ff ⋆ φ⁰)`.
    pub fn right_unit(s: &FiniteBicategory, t: &FiniteBicategory, fun: &impl LaxData, f: OneCell) -> bool {
        let ff = fun.map1(f);
        let lhs = t.vc_chain(&[
            t.whisker_left(ff, fun.phi0(f.source)),
            fun.phi(f, s.unit_cell(f.source)),
            fun.map2(s.runitor(f)),
        ]);
        lhs == t.runitor(ff)
    }
}

pub fn classify(fun: &LaxFunctor) -> LaxClass {
    let t = &fun.target;
    let pairs = fun.source.composable_pairs();
    let phis: Vec<TwoCell> = pairs.iter().map(|&(g, f)| fun.phi(g, f)).collect();
    let units: Vec<TwoCell> = fun.source.objects().map(|a| fun.phi0(a)).collect();
    let phi_identity = phis.iter().all(|&c| t.is_id2(c));
    let unit_identity = units.iter().all(|&c| t.is_id2(c));
    let phi_invertible = phi_identity || phis.iter().all(|&c| t.is_iso2(c));
    let unit_invertible = unit_identity || units.iter().all(|&c| t.is_iso2(c));
    let kind = if phi_identity && unit_identity {
        LaxKind::Strict
    } else if phi_invertible && unit_identity {
        LaxKind::NormalHomomorphism
    } else if phi_invertible && unit_invertible {
        LaxKind::Homomorphism
    } else {
        LaxKind::Lax
    };
    LaxClass {
        kind,
        phi_invertible,
        unit_invertible,
        phi_identity,
        unit_identity,
    }
}

/// For a homomorphism, the inverse constraint cells
/// `φ⁻¹_{g,f}: F(g∘f) ⇒ Fg∘Ff` and `(φ⁰_A)⁻¹`, in source enumeration order.
pub fn inverse_constraints(fun: &LaxFunctor) -> Option<(Vec<TwoCell>, Vec<TwoCell>)> {
    let t = &fun.target;
    let comp = fun
        .source
        .composable_pairs()
        .into_iter()
        .map(|(g, f)| t.inverse2(fun.phi(g, f)))
        .collect::<Option<Vec<_>>>()?;
    let unit = fun
        .source
        .objects()
        .map(|a| t.inverse2(fun.phi0(a)))
        .collect::<Option<Vec<_>>>()?;
    Some((comp, unit))
}

/// A lax functor out of the terminal bicategory: an object `x`, a 1-cell
/// `t: x → x`, a multiplication `μ: t∘t ⇒ t`, and a unit `η: j_x ⇒ t`.
pub fn from_terminal(
    target: Arc<FiniteBicategory>,
    t: OneCell,
    mu: TwoCell,
    eta: TwoCell,
) -> Result<LaxFunctor> {
    let terminal = Arc::new(crate::bicat::build::from_category(&crate::cat::FiniteCategory::terminal()));
    let star = ObjId(0);
    let hom = Functor {
        source: terminal.hom(star, star).clone(),
        target: target.hom(t.source, t.target).clone(),
        obj_map: vec![t.id],
        mor_map: vec![target.id2(t).id],
    };
    LaxFunctor::new(terminal, target, vec![t.source], vec![hom], vec![mu.id], vec![eta.id])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::build::*;
    use crate::cat::FiniteCategory;

    fn cocycle() -> Arc<FiniteBicategory> {
        let z2 = FiniteGroup::cyclic(2);
        Arc::new(cocycle_bicategory(&z2, &z2, &z2_nontrivial_cocycle()).unwrap())
    }

    /// {0 ≤ 1} under max, unit 0.
    fn bool_or() -> Arc<FiniteBicategory> {
        let cells = vec![vec!["0".to_string(), "1".to_string()]];
        Arc::new(locally_preordered("bool", vec!["*".into()], cells, vec![0], |_, _, _, g, f| g.max(f), |_, _, x, y| x <= y).unwrap())
    }

    #[test]
    fn identity_is_valid_and_strict() {
        for b in [cocycle(), bool_or(), Arc::new(from_category(&FiniteCategory::ordinal(2)))] {
            let id = identity_lax(b);
            assert!(validate_lax_functor(&id).unwrap().is_ok());
            assert_eq!(classify(&id).kind, LaxKind::Strict);
        }
    }

    #[test]
    fn composing_with_identity_is_neutral() {
        let b = cocycle();
        let id = identity_lax(b.clone());
        let f = compose_lax(&id, &id).unwrap();
        assert_eq!(f, id);
    }

    #[test]
    fn monad_in_bool_is_lax_only() {
        let b = bool_or();
        let star = ObjId(0);
        let t = b.find_one_cell(star, star, "1").unwrap();
        let mu = b.id2(t);
        let eta = b.find_two_cell(star, star, "0=>1").unwrap();
        let m = from_terminal(b, t, mu, eta).unwrap();
        assert!(validate_lax_functor(&m).unwrap().is_ok());
        let c = classify(&m);
        assert_eq!(c.kind, LaxKind::Lax);
        assert!(c.phi_identity && !c.unit_invertible);
    }

    #[test]
    fn corrupt_phi_breaks_associativity() {
        let b = cocycle();
        let mut f = identity_lax(b.clone());
        let one = b.find_one_cell_anywhere("1").unwrap();
        let zero = b.find_one_cell_anywhere("0").unwrap();
        // φ_{0,1}: 0∘1 = 1 ⇒ 1, replaced by the non-identity endo-cell
        let flip = b.find_two_cell(ObjId(0), ObjId(0), "1:1").unwrap();
        f.set_phi(zero, one, flip.id);
        let r = validate_lax_functor(&f).unwrap();
        let v = r.first(Law::LaxAssociativity).expect("associativity witness");
        assert_eq!(v.witness, vec!["*->*:0", "*->*:0", "*->*:1"]);
    }

    #[test]
    fn twisting_by_a_two_cocycle_stays_valid() {
        // φ = δ_{(1,1)} is a 2-cocycle on Z/2, so the twisted identity is a
        // homomorphism that is not strict
        let b = cocycle();
        let mut f = identity_lax(b.clone());
        let one = b.find_one_cell_anywhere("1").unwrap();
        let flip = b.find_two_cell(ObjId(0), ObjId(0), "0:1").unwrap();
        f.set_phi(one, one, flip.id);
        assert!(validate_lax_functor(&f).unwrap().is_ok());
        assert_eq!(classify(&f).kind, LaxKind::NormalHomomorphism);
    }

    #[test]
    fn wrong_boundary_phi_is_reported() {
        let b = bool_or();
        let mut f = identity_lax(b.clone());
        let star = ObjId(0);
        let zero = b.find_one_cell(star, star, "0").unwrap();
        let up = b.find_two_cell(star, star, "0=>1").unwrap();
        f.set_phi(zero, zero, up.id);
        assert!(validate_lax_functor(&f).unwrap().has(Law::CellBoundary));
    }

    #[test]
    fn composition_of_homomorphisms_is_homomorphism() {
        let b = cocycle();
        let id = identity_lax(b.clone());
        let c = compose_lax(&id, &id).unwrap();
        assert!(classify(&c).at_least(LaxKind::Homomorphism));
        assert!(inverse_constraints(&c).is_some());
    }

    #[test]
    fn mismatched_composition_is_structural() {
        let a = identity_lax(cocycle());
        let b = identity_lax(bool_or());
        assert!(matches!(compose_lax(&a, &b), Err(StructureError::Boundary(_))));
    }
}

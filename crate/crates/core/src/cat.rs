//! Finite categories, functors, and natural transformations.
//!
//! A [`FiniteCategory`] stores its composition table keyed in diagrammatic
//! order `(f, g)` for the composite "g after f", and exposes it as
//! [`FiniteCategory::compose`]`(g, f)`. Morphisms are identified by id only.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Result, StructureError};
use crate::report::{Law, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub source: ObjId,
    pub target: ObjId,
}

#[derive(Debug, Clone)]
pub struct FiniteCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<MorId>,
    composites: HashMap<(MorId, MorId), MorId>,
    hom_index: Vec<Vec<MorId>>,
}

impl PartialEq for FiniteCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identity == other.identity
            && self.composites == other.composites
    }
}

impl Eq for FiniteCategory {}

impl FiniteCategory {
    /// Assembles a category from raw tables. Only structural soundness is
    /// checked (every id resolves); the category laws are left to
    /// [`validate_category`].
    pub fn from_tables(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identity: Vec<MorId>,
        composites: HashMap<(MorId, MorId), MorId>,
    ) -> Result<Self> {
        let n = objects.len();
        let m = morphisms.len();
        for mor in &morphisms {
            for end in [mor.source, mor.target] {
                if end.0 >= n {
                    return Err(StructureError::OutOfRange {
                        what: format!("endpoint of morphism `{}`", mor.name),
                        id: end.0,
                        bound: n,
                    });
                }
            }
        }
        if identity.len() != n {
            return Err(StructureError::Shape {
                what: "identity table".into(),
                expected: n,
                found: identity.len(),
            });
        }
        for id in &identity {
            if id.0 >= m {
                return Err(StructureError::OutOfRange {
                    what: "identity morphism".into(),
                    id: id.0,
                    bound: m,
                });
            }
        }
        for (&(f, g), &h) in &composites {
            for x in [f, g, h] {
                if x.0 >= m {
                    return Err(StructureError::OutOfRange {
                        what: "composition table entry".into(),
                        id: x.0,
                        bound: m,
                    });
                }
            }
        }
        let mut hom_index = vec![Vec::new(); n * n];
        for (i, mor) in morphisms.iter().enumerate() {
            hom_index[mor.source.0 * n + mor.target.0].push(MorId(i));
        }
        Ok(FiniteCategory {
            objects,
            morphisms,
            identity,
            composites,
            hom_index,
        })
    }

    /// The category with one object and only its identity.
    pub fn terminal() -> Self {
        let mut b = CategoryBuilder::new();
        b.object("*");
        b.build().expect("terminal category")
    }

    /// The discrete category on the given object names.
    pub fn discrete<S: AsRef<str>>(names: &[S]) -> Self {
        let mut b = CategoryBuilder::new();
        for n in names {
            b.object(n.as_ref());
        }
        b.build().expect("discrete category")
    }

    /// The category with exactly one morphism between any two objects.
    pub fn codiscrete<S: AsRef<str>>(names: &[S]) -> Self {
        let mut b = CategoryBuilder::new();
        let objs: Vec<ObjId> = names.iter().map(|n| b.object(n.as_ref())).collect();
        let k = objs.len();
        let mut arrows = vec![MorId(0); k * k];
        for i in 0..k {
            for j in 0..k {
                arrows[i * k + j] = if i == j {
                    b.identity_of(objs[i])
                } else {
                    b.morphism(
                        &format!("{}>{}", names[i].as_ref(), names[j].as_ref()),
                        objs[i],
                        objs[j],
                    )
                };
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    b.compose(arrows[j * k + l], arrows[i * k + j], arrows[i * k + l]);
                }
            }
        }
        b.build().expect("codiscrete category")
    }

    /// The ordinal `[n] = {0 < 1 < ... < n}` as a poset category.
    pub fn ordinal(n: usize) -> Self {
        let mut b = CategoryBuilder::new();
        let objs: Vec<ObjId> = (0..=n).map(|i| b.object(&i.to_string())).collect();
        let mut arrow = HashMap::new();
        for i in 0..=n {
            arrow.insert((i, i), b.identity_of(objs[i]));
            for j in i + 1..=n {
                arrow.insert((i, j), b.morphism(&format!("{i}<{j}"), objs[i], objs[j]));
            }
        }
        for i in 0..=n {
            for j in i..=n {
                for k in j..=n {
                    b.compose(arrow[&(j, k)], arrow[&(i, j)], arrow[&(i, k)]);
                }
            }
        }
        b.build().expect("ordinal category")
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn num_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + '_ {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphism_ids(&self) -> impl Iterator<Item = MorId> + '_ {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn object_name(&self, x: ObjId) -> &str {
        &self.objects[x.0]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn morphism(&self, f: MorId) -> &Morphism {
        &self.morphisms[f.0]
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn name(&self, f: MorId) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn source(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].source
    }

    pub fn target(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].target
    }

    pub fn identity(&self, x: ObjId) -> MorId {
        self.identity[x.0]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identity[self.source(f).0] == f
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn find_morphism(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name).map(MorId)
    }

    /// Morphisms `x -> y`, in id order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> &[MorId] {
        &self.hom_index[x.0 * self.objects.len() + y.0]
    }

    /// `g` after `f`, if the table defines it.
    pub fn compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.composites.get(&(f, g)).copied()
    }

    /// `g` after `f`; panics when the table has no entry.
    pub fn comp(&self, g: MorId, f: MorId) -> MorId {
        match self.composites.get(&(f, g)) {
            Some(&h) => h,
            None => panic!(
                "no composite `{}` after `{}` in table",
                self.name(g),
                self.name(f)
            ),
        }
    }

    /// Raw table access, keyed `(f, g)` for "g after f".
    pub fn composites(&self) -> &HashMap<(MorId, MorId), MorId> {
        &self.composites
    }

    /// Pairs `(g, f)` with `target(f) = source(g)`, in canonical order.
    pub fn composable_pairs(&self) -> Vec<(MorId, MorId)> {
        let mut out = Vec::new();
        for f in self.morphism_ids() {
            let b = self.target(f);
            for g in self.morphism_ids() {
                if self.source(g) == b {
                    out.push((g, f));
                }
            }
        }
        out
    }

    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (a, b) = (self.source(f), self.target(f));
        self.hom(b, a).iter().copied().find(|&g| {
            self.compose(g, f) == Some(self.identity(a)) && self.compose(f, g) == Some(self.identity(b))
        })
    }

    pub fn is_iso(&self, f: MorId) -> bool {
        self.inverse(f).is_some()
    }

    pub fn are_isomorphic(&self, x: ObjId, y: ObjId) -> bool {
        self.hom(x, y).iter().any(|&f| self.is_iso(f))
    }

    /// Returns a copy whose table sends "g after f" to `h`. Intended for
    /// building deliberately corrupted instances.
    pub fn with_composite(&self, g: MorId, f: MorId, h: MorId) -> Self {
        let mut c = self.clone();
        c.composites.insert((f, g), h);
        c
    }
}

/// Incremental construction of a [`FiniteCategory`].
///
/// Each object gets an identity morphism named `1_<object>` unless a name is
/// supplied. Composites involving an identity are filled in by [`build`]
/// when not set explicitly.
///
/// [`build`]: CategoryBuilder::build
#[derive(Debug, Default, Clone)]
pub struct CategoryBuilder {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<MorId>,
    composites: HashMap<(MorId, MorId), MorId>,
}

impl CategoryBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn object(&mut self, name: &str) -> ObjId {
        self.object_with_identity(name, &format!("1_{name}"))
    }

    pub fn object_with_identity(&mut self, name: &str, identity: &str) -> ObjId {
        let x = ObjId(self.objects.len());
        self.objects.push(name.to_string());
        let id = MorId(self.morphisms.len());
        self.morphisms.push(Morphism {
            name: identity.to_string(),
            source: x,
            target: x,
        });
        self.identity.push(id);
        x
    }

    pub fn morphism(&mut self, name: &str, source: ObjId, target: ObjId) -> MorId {
        let f = MorId(self.morphisms.len());
        self.morphisms.push(Morphism {
            name: name.to_string(),
            source,
            target,
        });
        f
    }

    pub fn identity_of(&self, x: ObjId) -> MorId {
        self.identity[x.0]
    }

    /// Records "g after f = h".
    pub fn compose(&mut self, g: MorId, f: MorId, h: MorId) -> &mut Self {
        self.composites.insert((f, g), h);
        self
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn find_morphism(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|m| m.name == name).map(MorId)
    }

    pub fn source_of(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].source
    }

    pub fn target_of(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].target
    }

    pub fn build(mut self) -> Result<FiniteCategory> {
        for i in 0..self.morphisms.len() {
            let f = MorId(i);
            let (a, b) = (self.morphisms[i].source, self.morphisms[i].target);
            if a.0 >= self.objects.len() || b.0 >= self.objects.len() {
                return Err(StructureError::OutOfRange {
                    what: format!("endpoint of morphism `{}`", self.morphisms[i].name),
                    id: a.0.max(b.0),
                    bound: self.objects.len(),
                });
            }
            self.composites.entry((f, self.identity[b.0])).or_insert(f);
            self.composites.entry((self.identity[a.0], f)).or_insert(f);
        }
        FiniteCategory::from_tables(self.objects, self.morphisms, self.identity, self.composites)
    }
}

/// Checks the category laws exhaustively.
pub fn validate_category(c: &FiniteCategory) -> ValidationReport {
    let mut report = ValidationReport::new();
    let name = |f: MorId| c.name(f).to_string();

    for x in c.objects() {
        let id = c.identity(x);
        if c.source(id) != x || c.target(id) != x {
            report.push(Law::SourceTarget, [name(id), c.object_name(x).to_string()]);
        }
    }

    let mut entries: Vec<_> = c.composites.iter().map(|(&(f, g), &h)| (f, g, h)).collect();
    entries.sort();
    for (f, g, h) in entries {
        if c.target(f) != c.source(g) {
            report.push(Law::SpuriousComposite, [name(g), name(f)]);
        } else if c.source(h) != c.source(f) || c.target(h) != c.target(g) {
            report.push(Law::SourceTarget, [name(g), name(f), name(h)]);
        }
    }

    let pairs = c.composable_pairs();
    for &(g, f) in &pairs {
        if c.compose(g, f).is_none() {
            report.push(Law::MissingComposite, [name(g), name(f)]);
        }
    }

    for f in c.morphism_ids() {
        let (a, b) = (c.source(f), c.target(f));
        if c.compose(c.identity(b), f) != Some(f) {
            report.push(Law::LeftIdentity, [name(f)]);
        }
        if c.compose(f, c.identity(a)) != Some(f) {
            report.push(Law::RightIdentity, [name(f)]);
        }
    }

    for &(g, f) in &pairs {
        let Some(gf) = c.compose(g, f) else { continue };
        for &h in c.objects().flat_map(|y| c.hom(c.target(g), y).iter()) {
            let Some(hg) = c.compose(h, g) else { continue };
            let lhs = c.compose(h, gf);
            let rhs = c.compose(hg, f);
            if lhs.is_some() && rhs.is_some() && lhs != rhs {
                report.push(Law::Associativity, [name(h), name(g), name(f)]);
            }
        }
    }
    report
}

/// The product category. Object `(x, y)` has id `x * |D.objects| + y` and
/// morphism `(f, g)` has id `f * |D.morphisms| + g`.
pub fn product_category(c: &FiniteCategory, d: &FiniteCategory) -> FiniteCategory {
    let (dn, dm) = (d.num_objects(), d.num_morphisms());
    let mut objects = Vec::with_capacity(c.num_objects() * dn);
    for x in c.objects() {
        for y in d.objects() {
            objects.push(format!("({},{})", c.object_name(x), d.object_name(y)));
        }
    }
    let mut morphisms = Vec::with_capacity(c.num_morphisms() * dm);
    for f in c.morphism_ids() {
        for g in d.morphism_ids() {
            morphisms.push(Morphism {
                name: format!("({},{})", c.name(f), d.name(g)),
                source: ObjId(c.source(f).0 * dn + d.source(g).0),
                target: ObjId(c.target(f).0 * dn + d.target(g).0),
            });
        }
    }
    let identity = c
        .objects()
        .flat_map(|x| d.objects().map(move |y| (x, y)))
        .map(|(x, y)| MorId(c.identity(x).0 * dm + d.identity(y).0))
        .collect();
    let mut composites = HashMap::with_capacity(c.composites.len() * d.composites.len());
    for (&(f1, g1), &h1) in &c.composites {
        for (&(f2, g2), &h2) in &d.composites {
            composites.insert(
                (MorId(f1.0 * dm + f2.0), MorId(g1.0 * dm + g2.0)),
                MorId(h1.0 * dm + h2.0),
            );
        }
    }
    FiniteCategory::from_tables(objects, morphisms, identity, composites)
        .expect("product of well-formed tables is well-formed")
}

/// A functor between finite categories given by its object and morphism maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    pub source: Arc<FiniteCategory>,
    pub target: Arc<FiniteCategory>,
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
}

impl Functor {
    pub fn identity(c: Arc<FiniteCategory>) -> Self {
        Functor {
            obj_map: c.objects().collect(),
            mor_map: c.morphism_ids().collect(),
            source: c.clone(),
            target: c,
        }
    }

    pub fn constant(source: Arc<FiniteCategory>, target: Arc<FiniteCategory>, at: ObjId) -> Self {
        let id = target.identity(at);
        Functor {
            obj_map: vec![at; source.num_objects()],
            mor_map: vec![id; source.num_morphisms()],
            source,
            target,
        }
    }

    /// Projections out of `product_category(c, d)`.
    pub fn projections(
        product: Arc<FiniteCategory>,
        c: Arc<FiniteCategory>,
        d: Arc<FiniteCategory>,
    ) -> (Functor, Functor) {
        let (dn, dm) = (d.num_objects(), d.num_morphisms());
        let first = Functor {
            obj_map: product.objects().map(|p| ObjId(p.0 / dn)).collect(),
            mor_map: product.morphism_ids().map(|p| MorId(p.0 / dm)).collect(),
            source: product.clone(),
            target: c,
        };
        let second = Functor {
            obj_map: product.objects().map(|p| ObjId(p.0 % dn)).collect(),
            mor_map: product.morphism_ids().map(|p| MorId(p.0 % dm)).collect(),
            source: product,
            target: d,
        };
        (first, second)
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.obj_map[x.0]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.mor_map[f.0]
    }

    /// `self` after `first`.
    pub fn after(&self, first: &Functor) -> Result<Functor> {
        if first.target != self.source {
            return Err(StructureError::Boundary(
                "functor composite: target of the first is not the source of the second".into(),
            ));
        }
        Ok(Functor {
            source: first.source.clone(),
            target: self.target.clone(),
            obj_map: first.obj_map.iter().map(|&x| self.obj(x)).collect(),
            mor_map: first.mor_map.iter().map(|&f| self.mor(f)).collect(),
        })
    }
}

pub fn validate_functor(fun: &Functor) -> Result<ValidationReport> {
    let (c, d) = (&*fun.source, &*fun.target);
    if fun.obj_map.len() != c.num_objects() {
        return Err(StructureError::Shape {
            what: "functor object map".into(),
            expected: c.num_objects(),
            found: fun.obj_map.len(),
        });
    }
    if fun.mor_map.len() != c.num_morphisms() {
        return Err(StructureError::Shape {
            what: "functor morphism map".into(),
            expected: c.num_morphisms(),
            found: fun.mor_map.len(),
        });
    }
    if let Some(x) = fun.obj_map.iter().find(|x| x.0 >= d.num_objects()) {
        return Err(StructureError::OutOfRange {
            what: "functor object image".into(),
            id: x.0,
            bound: d.num_objects(),
        });
    }
    if let Some(f) = fun.mor_map.iter().find(|f| f.0 >= d.num_morphisms()) {
        return Err(StructureError::OutOfRange {
            what: "functor morphism image".into(),
            id: f.0,
            bound: d.num_morphisms(),
        });
    }

    let mut report = ValidationReport::new();
    for f in c.morphism_ids() {
        let ff = fun.mor(f);
        if d.source(ff) != fun.obj(c.source(f)) || d.target(ff) != fun.obj(c.target(f)) {
            report.push(Law::FunctorBoundary, [c.name(f)]);
        }
    }
    for x in c.objects() {
        if fun.mor(c.identity(x)) != d.identity(fun.obj(x)) {
            report.push(Law::PreservesIdentity, [c.object_name(x)]);
        }
    }
    if !report.is_ok() {
        return Ok(report);
    }
    for (g, f) in c.composable_pairs() {
        let Some(gf) = c.compose(g, f) else { continue };
        if d.compose(fun.mor(g), fun.mor(f)) != Some(fun.mor(gf)) {
            report.push(Law::PreservesComposition, [c.name(g), c.name(f)]);
        }
    }
    Ok(report)
}

/// Full, faithful, and essentially surjective.
pub fn is_equivalence_functor(fun: &Functor) -> bool {
    let (c, d) = (&*fun.source, &*fun.target);
    for x in c.objects() {
        for y in c.objects() {
            let src = c.hom(x, y);
            let tgt = d.hom(fun.obj(x), fun.obj(y));
            if src.len() != tgt.len() {
                return false;
            }
            let mut seen = vec![false; d.num_morphisms()];
            for &f in src {
                let ff = fun.mor(f);
                if seen[ff.0] {
                    return false;
                }
                seen[ff.0] = true;
            }
        }
    }
    d.objects()
        .all(|z| c.objects().any(|x| d.are_isomorphic(fun.obj(x), z)))
}

/// A natural transformation between parallel functors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTrans {
    pub source: Functor,
    pub target: Functor,
    pub components: Vec<MorId>,
}

impl NatTrans {
    pub fn identity(f: &Functor) -> Self {
        NatTrans {
            components: f.obj_map.iter().map(|&y| f.target.identity(y)).collect(),
            source: f.clone(),
            target: f.clone(),
        }
    }

    pub fn component(&self, x: ObjId) -> MorId {
        self.components[x.0]
    }

    /// `self` after `first`.
    pub fn vcomp(&self, first: &NatTrans) -> Result<NatTrans> {
        if first.target != self.source {
            return Err(StructureError::Boundary(
                "vertical composite of natural transformations".into(),
            ));
        }
        let d = &self.source.target;
        Ok(NatTrans {
            source: first.source.clone(),
            target: self.target.clone(),
            components: first
                .components
                .iter()
                .zip(&self.components)
                .map(|(&a, &b)| d.comp(b, a))
                .collect(),
        })
    }

    /// `h` applied to every component.
    pub fn whisker_left(h: &Functor, t: &NatTrans) -> Result<NatTrans> {
        Ok(NatTrans {
            source: h.after(&t.source)?,
            target: h.after(&t.target)?,
            components: t.components.iter().map(|&a| h.mor(a)).collect(),
        })
    }

    /// Components reindexed along `k`.
    pub fn whisker_right(t: &NatTrans, k: &Functor) -> Result<NatTrans> {
        Ok(NatTrans {
            source: t.source.after(k)?,
            target: t.target.after(k)?,
            components: k.obj_map.iter().map(|&x| t.component(x)).collect(),
        })
    }

    pub fn is_invertible(&self) -> bool {
        let d = &self.source.target;
        self.components.iter().all(|&a| d.is_iso(a))
    }
}

pub fn validate_nat(t: &NatTrans) -> Result<ValidationReport> {
    if t.source.source != t.target.source || t.source.target != t.target.target {
        return Err(StructureError::Boundary(
            "natural transformation between non-parallel functors".into(),
        ));
    }
    let (c, d) = (&*t.source.source, &*t.source.target);
    if t.components.len() != c.num_objects() {
        return Err(StructureError::Missing(format!(
            "component: expected {} components, found {}",
            c.num_objects(),
            t.components.len()
        )));
    }
    if let Some(a) = t.components.iter().find(|a| a.0 >= d.num_morphisms()) {
        return Err(StructureError::OutOfRange {
            what: "component".into(),
            id: a.0,
            bound: d.num_morphisms(),
        });
    }
    let mut report = ValidationReport::new();
    for x in c.objects() {
        let a = t.component(x);
        if d.source(a) != t.source.obj(x) || d.target(a) != t.target.obj(x) {
            report.push(Law::ComponentBoundary, [c.object_name(x)]);
        }
    }
    if !report.is_ok() {
        return Ok(report);
    }
    for f in c.morphism_ids() {
        let (x, y) = (c.source(f), c.target(f));
        let lhs = d.compose(t.target.mor(f), t.component(x));
        let rhs = d.compose(t.component(y), t.source.mor(f));
        if lhs != rhs {
            report.push(Law::Naturality, [c.name(f)]);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poset3() -> FiniteCategory {
        FiniteCategory::ordinal(2)
    }

    #[test]
    fn terminal_is_valid() {
        let t = FiniteCategory::terminal();
        assert_eq!(t.num_morphisms(), 1);
        assert!(validate_category(&t).is_ok());
    }

    #[test]
    fn poset_is_valid() {
        let c = poset3();
        assert_eq!(c.num_objects(), 3);
        assert_eq!(c.num_morphisms(), 6);
        assert!(validate_category(&c).is_ok());
    }

    #[test]
    fn corrupted_composite_reports_source_target() {
        let c = poset3();
        let f = c.find_morphism("0<1").unwrap();
        let g = c.find_morphism("1<2").unwrap();
        let id0 = c.identity(ObjId(0));
        let bad = c.with_composite(g, f, id0);
        let report = validate_category(&bad);
        let v = report.first(Law::SourceTarget).expect("source/target violation");
        assert_eq!(v.witness, vec!["1<2", "0<1", "1_0"]);
    }

    #[test]
    fn dangling_ids_are_structural() {
        let err = FiniteCategory::from_tables(
            vec!["x".into()],
            vec![Morphism {
                name: "f".into(),
                source: ObjId(0),
                target: ObjId(3),
            }],
            vec![MorId(0)],
            HashMap::new(),
        );
        assert!(matches!(err, Err(StructureError::OutOfRange { .. })));
    }

    #[test]
    fn missing_composite_is_reported() {
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let y = b.object("y");
        let z = b.object("z");
        b.morphism("f", x, y);
        b.morphism("g", y, z);
        let c = b.build().unwrap();
        let r = validate_category(&c);
        assert_eq!(r.first(Law::MissingComposite).unwrap().witness, vec!["g", "f"]);
    }

    #[test]
    fn terminal_times_c_is_c() {
        let c = Arc::new(poset3());
        let t = FiniteCategory::terminal();
        let p = product_category(&t, &c);
        assert_eq!(p.num_objects(), c.num_objects());
        assert_eq!(p.num_morphisms(), c.num_morphisms());
        assert!(validate_category(&p).is_ok());
        // the second projection is an isomorphism onto c
        let (_, snd) = Functor::projections(Arc::new(p), Arc::new(t), c.clone());
        assert!(validate_functor(&snd).unwrap().is_ok());
        assert!(is_equivalence_functor(&snd));
        assert_eq!(snd.mor_map, c.morphism_ids().collect::<Vec<_>>());
    }

    #[test]
    fn squaring_two_objects_three_morphisms() {
        let c = FiniteCategory::ordinal(1);
        assert_eq!((c.num_objects(), c.num_morphisms()), (2, 3));
        let p = product_category(&c, &c);
        assert_eq!((p.num_objects(), p.num_morphisms()), (4, 9));
        assert!(validate_category(&p).is_ok());
    }

    #[test]
    fn poset_square_is_commuting_square() {
        let c = FiniteCategory::ordinal(1);
        let p = product_category(&c, &c);
        // brute-force: in the square, every hom-set has at most one element,
        // and (0,0) -> (1,1) is reached by both paths.
        for x in p.objects() {
            for y in p.objects() {
                assert!(p.hom(x, y).len() <= 1);
            }
        }
        let bottom = p.find_object("(0,0)").unwrap();
        let top = p.find_object("(1,1)").unwrap();
        let diag = p.hom(bottom, top)[0];
        let mid1 = p.find_object("(0,1)").unwrap();
        let mid2 = p.find_object("(1,0)").unwrap();
        let via1 = p.comp(p.hom(mid1, top)[0], p.hom(bottom, mid1)[0]);
        let via2 = p.comp(p.hom(mid2, top)[0], p.hom(bottom, mid2)[0]);
        assert_eq!(via1, diag);
        assert_eq!(via2, diag);
    }

    #[test]
    fn identity_and_constant_functors_are_valid() {
        let c = Arc::new(poset3());
        let id = Functor::identity(c.clone());
        assert!(validate_functor(&id).unwrap().is_ok());
        assert!(is_equivalence_functor(&id));
        let k = Functor::constant(c.clone(), c.clone(), ObjId(1));
        assert!(validate_functor(&k).unwrap().is_ok());
    }

    #[test]
    fn wrong_composite_image_is_reported() {
        let c = Arc::new(poset3());
        let mut b = CategoryBuilder::new();
        let x = b.object("0");
        let y = b.object("1");
        let z = b.object("2");
        let a = b.morphism("a", x, y);
        let bb = b.morphism("b", y, z);
        let p = b.morphism("p", x, z);
        let q = b.morphism("q", x, z);
        b.compose(bb, a, p);
        let two = Arc::new(b.build().unwrap());
        assert!(validate_category(&two).is_ok());
        let bad = Functor {
            source: c.clone(),
            target: two.clone(),
            obj_map: vec![x, y, z],
            mor_map: c
                .morphism_ids()
                .map(|m| match c.name(m) {
                    "0<1" => a,
                    "1<2" => bb,
                    "0<2" => q,
                    _ => two.identity(c.source(m)),
                })
                .collect(),
        };
        let r = validate_functor(&bad).unwrap();
        assert_eq!(r.first(Law::PreservesComposition).unwrap().witness, vec!["1<2", "0<1"]);
    }

    #[test]
    fn functor_with_short_map_is_structural() {
        let c = Arc::new(poset3());
        let mut f = Functor::identity(c);
        f.mor_map.pop();
        assert!(validate_functor(&f).is_err());
    }

    #[test]
    fn naturality_on_arrow_category() {
        let two = Arc::new(FiniteCategory::ordinal(1));
        let id = Functor::identity(two.clone());
        assert!(validate_nat(&NatTrans::identity(&id)).unwrap().is_ok());
        // search all component choices id => const_1: only the natural one passes
        let k1 = Functor::constant(two.clone(), two.clone(), ObjId(1));
        let up = two.find_morphism("0<1").unwrap();
        let one = two.identity(ObjId(1));
        let good = NatTrans {
            source: id.clone(),
            target: k1.clone(),
            components: vec![up, one],
        };
        assert!(validate_nat(&good).unwrap().is_ok());
        // const_0 => id with components (1_0, 1_0) is not even well-typed at 1;
        // const_0 => id with (1_0, 0<1) is natural, (1_0, 1_1) is ill-typed.
        let k0 = Functor::constant(two.clone(), two.clone(), ObjId(0));
        let t = NatTrans {
            source: k0.clone(),
            target: id.clone(),
            components: vec![two.identity(ObjId(0)), up],
        };
        assert!(validate_nat(&t).unwrap().is_ok());
        // non-natural: id => id with components (0<1 ?) impossible; use a
        // category with a non-trivial endomorphism instead.
        let mut b = CategoryBuilder::new();
        let x = b.object("x");
        let y = b.object("y");
        let f = b.morphism("f", x, y);
        let e = b.morphism("e", y, y);
        let ef = b.morphism("ef", x, y);
        b.compose(e, f, ef).compose(e, ef, ef).compose(e, e, e);
        let c = Arc::new(b.build().unwrap());
        assert!(validate_category(&c).is_ok());
        let idc = Functor::identity(c.clone());
        let bad = NatTrans {
            source: idc.clone(),
            target: idc.clone(),
            components: vec![c.identity(x), e],
        };
        let r = validate_nat(&bad).unwrap();
        assert_eq!(r.first(Law::Naturality).unwrap().witness, vec!["f"]);
        // whiskering a valid transformation stays valid
        let whiskered = NatTrans::whisker_right(&good, &Functor::identity(two.clone())).unwrap();
        assert!(validate_nat(&whiskered).unwrap().is_ok());
        let h = Functor::constant(two.clone(), two.clone(), ObjId(0));
        let left = NatTrans::whisker_left(&h, &good).unwrap();
        assert!(validate_nat(&left).unwrap().is_ok());
    }

    #[test]
    fn missing_component_is_structural() {
        let two = Arc::new(FiniteCategory::ordinal(1));
        let id = Functor::identity(two);
        let mut t = NatTrans::identity(&id);
        t.components.pop();
        assert!(matches!(validate_nat(&t), Err(StructureError::Missing(_))));
    }

    #[test]
    fn equivalence_examples() {
        // inclusion of one object of the codiscrete 2-object category
        let big = Arc::new(FiniteCategory::codiscrete(&["a", "b"]));
        let one = Arc::new(FiniteCategory::terminal());
        let incl = Functor::constant(one.clone(), big.clone(), ObjId(0));
        assert!(validate_functor(&incl).unwrap().is_ok());
        assert!(is_equivalence_functor(&incl));
        // constant functor into a 2-object discrete category misses an object
        let disc = Arc::new(FiniteCategory::discrete(&["a", "b"]));
        let k = Functor::constant(one, disc, ObjId(0));
        assert!(!is_equivalence_functor(&k));
    }
}

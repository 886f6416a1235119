//! Finite bicategories with explicit coherence cells.
//!
//! Hom-categories are ordinary [`FiniteCategory`] values: their objects are
//! the 1-cells and their morphisms the 2-cells. Composition of 1-cells and
//! horizontal composition of 2-cells is a table per object triple, laid out
//! exactly like a functor out of `product_category(hom(B,C), hom(A,B))`.
//!
//! The associator is oriented `a_{h,g,f}: (h∘g)∘f → h∘(g∘f)`, the left
//! unitor is `l_f: j_B∘f → f` and the right unitor `r_f: f∘j_A → f`.

pub mod build;

use std::fmt;
use std::sync::Arc;

use crate::cat::{product_category, validate_category, validate_functor, FiniteCategory, Functor, MorId, ObjId};
use crate::error::{Result, StructureError};
use crate::report::{Law, ValidationReport};

/// A 1-cell: an object of the hom-category `hom(source, target)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneCell {
    pub source: ObjId,
    pub target: ObjId,
    pub id: ObjId,
}

/// A 2-cell: a morphism of the hom-category `hom(source, target)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoCell {
    pub source: ObjId,
    pub target: ObjId,
    pub id: MorId,
}

impl OneCell {
    pub fn new(source: ObjId, target: ObjId, id: ObjId) -> Self {
        OneCell { source, target, id }
    }
}

impl TwoCell {
    pub fn new(source: ObjId, target: ObjId, id: MorId) -> Self {
        TwoCell { source, target, id }
    }
}

/// Composition `hom(B,C) × hom(A,B) → hom(A,C)` as flat tables. The pair
/// `(g, f)` sits at `g * |hom(A,B) objects| + f`, and likewise for 2-cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionMap {
    pub obj: Vec<ObjId>,
    pub mor: Vec<MorId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteBicategory {
    name: String,
    objects: Vec<String>,
    homs: Vec<Arc<FiniteCategory>>,
    comp: Vec<CompositionMap>,
    unit: Vec<ObjId>,
    associator: Vec<Option<MorId>>,
    left_unitor: Vec<Vec<Option<MorId>>>,
    right_unitor: Vec<Vec<Option<MorId>>>,
    pair_offset: Vec<usize>,
    triple_offset: Vec<usize>,
}

impl FiniteBicategory {
    /// Assembles a bicategory from its hom-categories, composition tables
    /// (indexed `(a * n + b) * n + c`), and identity 1-cells. Coherence cells
    /// start as identities wherever source and target 1-cells coincide and
    /// are unset elsewhere; use the `set_*` methods to fill them in.
    pub fn new(
        name: impl Into<String>,
        objects: Vec<String>,
        homs: Vec<Arc<FiniteCategory>>,
        comp: Vec<CompositionMap>,
        unit: Vec<ObjId>,
    ) -> Result<Self> {
        let n = objects.len();
        if homs.len() != n * n {
            return Err(StructureError::Shape {
                what: "hom-category table".into(),
                expected: n * n,
                found: homs.len(),
            });
        }
        if comp.len() != n * n * n {
            return Err(StructureError::Shape {
                what: "composition table".into(),
                expected: n * n * n,
                found: comp.len(),
            });
        }
        if unit.len() != n {
            return Err(StructureError::Shape {
                what: "identity 1-cells".into(),
                expected: n,
                found: unit.len(),
            });
        }
        for a in 0..n {
            if unit[a].0 >= homs[a * n + a].num_objects() {
                return Err(StructureError::OutOfRange {
                    what: format!("identity 1-cell of `{}`", objects[a]),
                    id: unit[a].0,
                    bound: homs[a * n + a].num_objects(),
                });
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (bc, ab, ac) = (&homs[b * n + c], &homs[a * n + b], &homs[a * n + c]);
                    let map = &comp[(a * n + b) * n + c];
                    let what = || format!("composition {} {} {}", objects[a], objects[b], objects[c]);
                    if map.obj.len() != bc.num_objects() * ab.num_objects() {
                        return Err(StructureError::Shape {
                            what: what() + " (1-cells)",
                            expected: bc.num_objects() * ab.num_objects(),
                            found: map.obj.len(),
                        });
                    }
                    if map.mor.len() != bc.num_morphisms() * ab.num_morphisms() {
                        return Err(StructureError::Shape {
                            what: what() + " (2-cells)",
                            expected: bc.num_morphisms() * ab.num_morphisms(),
                            found: map.mor.len(),
                        });
                    }
                    if let Some(x) = map.obj.iter().find(|x| x.0 >= ac.num_objects()) {
                        return Err(StructureError::OutOfRange {
                            what: what() + " (1-cell image)",
                            id: x.0,
                            bound: ac.num_objects(),
                        });
                    }
                    if let Some(x) = map.mor.iter().find(|x| x.0 >= ac.num_morphisms()) {
                        return Err(StructureError::OutOfRange {
                            what: what() + " (2-cell image)",
                            id: x.0,
                            bound: ac.num_morphisms(),
                        });
                    }
                }
            }
        }

        let mut pair_offset = Vec::with_capacity(n * n * n + 1);
        let mut total = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    pair_offset.push(total);
                    total += homs[a * n + b].num_objects() * homs[b * n + c].num_objects();
                }
            }
        }
        pair_offset.push(total);
        let mut triple_offset = Vec::with_capacity(n * n * n * n + 1);
        let mut total3 = 0;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        triple_offset.push(total3);
                        total3 += homs[a * n + b].num_objects()
                            * homs[b * n + c].num_objects()
                            * homs[c * n + d].num_objects();
                    }
                }
            }
        }
        triple_offset.push(total3);

        let mut bicat = FiniteBicategory {
            name: name.into(),
            objects,
            left_unitor: homs.iter().map(|h| vec![None; h.num_objects()]).collect(),
            right_unitor: homs.iter().map(|h| vec![None; h.num_objects()]).collect(),
            homs,
            comp,
            unit,
            associator: vec![None; total3],
            pair_offset,
            triple_offset,
        };
        bicat.fill_identity_coherence();
        Ok(bicat)
    }

    fn fill_identity_coherence(&mut self) {
        for (h, g, f) in self.composable_triples() {
            let lhs = self.compose1(self.compose1(h, g), f);
            let rhs = self.compose1(h, self.compose1(g, f));
            if lhs == rhs {
                let i = self.triple_index(h, g, f);
                self.associator[i] = Some(self.id2(lhs).id);
            }
        }
        for f in self.all_one_cells() {
            let hom = self.hom_index(f.source, f.target);
            let jf = self.compose1(self.unit_cell(f.target), f);
            if jf == f {
                self.left_unitor[hom][f.id.0] = Some(self.id2(f).id);
            }
            let fj = self.compose1(f, self.unit_cell(f.source));
            if fj == f {
                self.right_unitor[hom][f.id.0] = Some(self.id2(f).id);
            }
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn num_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + Clone + '_ {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn object_name(&self, a: ObjId) -> &str {
        &self.objects[a.0]
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    fn hom_index(&self, a: ObjId, b: ObjId) -> usize {
        a.0 * self.objects.len() + b.0
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> &Arc<FiniteCategory> {
        &self.homs[self.hom_index(a, b)]
    }

    pub fn composition_map(&self, a: ObjId, b: ObjId, c: ObjId) -> &CompositionMap {
        let n = self.objects.len();
        &self.comp[(a.0 * n + b.0) * n + c.0]
    }

    pub fn one_cells(&self, a: ObjId, b: ObjId) -> impl Iterator<Item = OneCell> + '_ {
        self.hom(a, b).objects().map(move |x| OneCell::new(a, b, x))
    }

    pub fn two_cells(&self, a: ObjId, b: ObjId) -> impl Iterator<Item = TwoCell> + '_ {
        self.hom(a, b).morphism_ids().map(move |m| TwoCell::new(a, b, m))
    }

    pub fn all_one_cells(&self) -> Vec<OneCell> {
        let mut out = Vec::new();
        for a in self.objects() {
            for b in self.objects() {
                out.extend(self.one_cells(a, b));
            }
        }
        out
    }

    pub fn all_two_cells(&self) -> Vec<TwoCell> {
        let mut out = Vec::new();
        for a in self.objects() {
            for b in self.objects() {
                out.extend(self.two_cells(a, b));
            }
        }
        out
    }

    /// 2-cells `f ⇒ g` between parallel 1-cells.
    pub fn cells_between(&self, f: OneCell, g: OneCell) -> impl Iterator<Item = TwoCell> + '_ {
        debug_assert_eq!((f.source, f.target), (g.source, g.target));
        self.hom(f.source, f.target)
            .hom(f.id, g.id)
            .iter()
            .map(move |&m| TwoCell::new(f.source, f.target, m))
    }

    pub fn one_cell_name(&self, f: OneCell) -> &str {
        self.hom(f.source, f.target).object_name(f.id)
    }

    pub fn two_cell_name(&self, a: TwoCell) -> &str {
        self.hom(a.source, a.target).name(a.id)
    }

    /// Fully qualified 1-cell id, `A->B:f`.
    pub fn q1(&self, f: OneCell) -> String {
        format!(
            "{}->{}:{}",
            self.object_name(f.source),
            self.object_name(f.target),
            self.one_cell_name(f)
        )
    }

    /// Fully qualified 2-cell id, `A->B:α`.
    pub fn q2(&self, a: TwoCell) -> String {
        format!(
            "{}->{}:{}",
            self.object_name(a.source),
            self.object_name(a.target),
            self.two_cell_name(a)
        )
    }

    pub fn find_one_cell(&self, a: ObjId, b: ObjId, name: &str) -> Option<OneCell> {
        self.hom(a, b).find_object(name).map(|x| OneCell::new(a, b, x))
    }

    /// Looks a 1-cell up by name across all homs; the first match wins.
    pub fn find_one_cell_anywhere(&self, name: &str) -> Option<OneCell> {
        self.all_one_cells().into_iter().find(|&f| self.one_cell_name(f) == name)
    }

    pub fn find_two_cell(&self, a: ObjId, b: ObjId, name: &str) -> Option<TwoCell> {
        self.hom(a, b).find_morphism(name).map(|m| TwoCell::new(a, b, m))
    }

    pub fn unit_cell(&self, a: ObjId) -> OneCell {
        OneCell::new(a, a, self.unit[a.0])
    }

    pub fn is_unit(&self, f: OneCell) -> bool {
        f.source == f.target && self.unit[f.source.0] == f.id
    }

    pub fn src2(&self, a: TwoCell) -> OneCell {
        OneCell::new(a.source, a.target, self.hom(a.source, a.target).source(a.id))
    }

    pub fn tgt2(&self, a: TwoCell) -> OneCell {
        OneCell::new(a.source, a.target, self.hom(a.source, a.target).target(a.id))
    }

    pub fn id2(&self, f: OneCell) -> TwoCell {
        TwoCell::new(f.source, f.target, self.hom(f.source, f.target).identity(f.id))
    }

    pub fn is_id2(&self, a: TwoCell) -> bool {
        self.hom(a.source, a.target).is_identity(a.id)
    }

    /// `g∘f`; panics unless `target(f) = source(g)`.
    pub fn compose1(&self, g: OneCell, f: OneCell) -> OneCell {
        assert_eq!(f.target, g.source, "1-cells are not composable");
        let ab = self.hom(f.source, f.target);
        let map = self.composition_map(f.source, f.target, g.target);
        OneCell::new(f.source, g.target, map.obj[g.id.0 * ab.num_objects() + f.id.0])
    }

    /// Vertical composite `β·α` for `α: f ⇒ g`, `β: g ⇒ h`.
    pub fn vcomp(&self, beta: TwoCell, alpha: TwoCell) -> Result<TwoCell> {
        if (alpha.source, alpha.target) != (beta.source, beta.target) {
            return Err(StructureError::Boundary("vertical composite across different homs".into()));
        }
        if self.tgt2(alpha) != self.src2(beta) {
            return Err(StructureError::Boundary(format!(
                "vertical composite: `{}` ends at `{}` but `{}` starts at `{}`",
                self.q2(alpha),
                self.one_cell_name(self.tgt2(alpha)),
                self.q2(beta),
                self.one_cell_name(self.src2(beta)),
            )));
        }
        Ok(self.vc(beta, alpha))
    }

    /// Unchecked vertical composite; panics on a boundary mismatch.
    pub fn vc(&self, beta: TwoCell, alpha: TwoCell) -> TwoCell {
        let hom = self.hom(alpha.source, alpha.target);
        TwoCell::new(alpha.source, alpha.target, hom.comp(beta.id, alpha.id))
    }

    /// Vertical composite of a chain given in application order.
    pub fn vc_chain(&self, cells: &[TwoCell]) -> TwoCell {
        let mut acc = cells[0];
        for &c in &cells[1..] {
            acc = self.vc(c, acc);
        }
        acc
    }

    /// Horizontal composite `β ⋆ α` for `α` in `hom(A,B)`, `β` in `hom(B,C)`.
    pub fn hcomp(&self, beta: TwoCell, alpha: TwoCell) -> Result<TwoCell> {
        if alpha.target != beta.source {
            return Err(StructureError::Boundary(format!(
                "horizontal composite: `{}` and `{}` do not meet",
                self.q2(alpha),
                self.q2(beta)
            )));
        }
        Ok(self.hc(beta, alpha))
    }

    pub fn hc(&self, beta: TwoCell, alpha: TwoCell) -> TwoCell {
        assert_eq!(alpha.target, beta.source, "2-cells are not horizontally composable");
        let ab = self.hom(alpha.source, alpha.target);
        let map = self.composition_map(alpha.source, alpha.target, beta.target);
        TwoCell::new(
            alpha.source,
            beta.target,
            map.mor[beta.id.0 * ab.num_morphisms() + alpha.id.0],
        )
    }

    /// `g ⋆ α`.
    pub fn whisker_left(&self, g: OneCell, alpha: TwoCell) -> TwoCell {
        self.hc(self.id2(g), alpha)
    }

    /// `β ⋆ f`.
    pub fn whisker_right(&self, beta: TwoCell, f: OneCell) -> TwoCell {
        self.hc(beta, self.id2(f))
    }

    pub fn inverse2(&self, a: TwoCell) -> Option<TwoCell> {
        self.hom(a.source, a.target)
            .inverse(a.id)
            .map(|m| TwoCell::new(a.source, a.target, m))
    }

    pub fn is_iso2(&self, a: TwoCell) -> bool {
        self.hom(a.source, a.target).is_iso(a.id)
    }

    fn pair_slot(&self, a: ObjId, b: ObjId, c: ObjId) -> usize {
        let n = self.objects.len();
        (a.0 * n + b.0) * n + c.0
    }

    /// Dense index of a composable pair `(g, f)`.
    pub fn pair_index(&self, g: OneCell, f: OneCell) -> usize {
        debug_assert_eq!(f.target, g.source);
        let base = self.pair_offset[self.pair_slot(f.source, f.target, g.target)];
        base + g.id.0 * self.hom(f.source, f.target).num_objects() + f.id.0
    }

    pub fn num_pairs(&self) -> usize {
        *self.pair_offset.last().unwrap_or(&0)
    }

    /// Dense index of a composable triple `(h, g, f)`.
    pub fn triple_index(&self, h: OneCell, g: OneCell, f: OneCell) -> usize {
        let n = self.objects.len();
        let slot = ((f.source.0 * n + f.target.0) * n + g.target.0) * n + h.target.0;
        let nf = self.hom(f.source, f.target).num_objects();
        let ng = self.hom(g.source, g.target).num_objects();
        self.triple_offset[slot] + (h.id.0 * ng + g.id.0) * nf + f.id.0
    }

    pub fn num_triples(&self) -> usize {
        *self.triple_offset.last().unwrap_or(&0)
    }

    /// All composable `(g, f)` in canonical order: by objects `(A,B,C)`, then
    /// by `g`, then by `f`.
    pub fn composable_pairs(&self) -> Vec<(OneCell, OneCell)> {
        let mut out = Vec::with_capacity(self.num_pairs());
        for a in self.objects() {
            for b in self.objects() {
                for c in self.objects() {
                    for g in self.one_cells(b, c) {
                        for f in self.one_cells(a, b) {
                            out.push((g, f));
                        }
                    }
                }
            }
        }
        out
    }

    /// All composable `(h, g, f)` in canonical order.
    pub fn composable_triples(&self) -> Vec<(OneCell, OneCell, OneCell)> {
        let mut out = Vec::with_capacity(self.num_triples());
        for a in self.objects() {
            for b in self.objects() {
                for c in self.objects() {
                    for d in self.objects() {
                        for h in self.one_cells(c, d) {
                            for g in self.one_cells(b, c) {
                                for f in self.one_cells(a, b) {
                                    out.push((h, g, f));
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `a_{h,g,f}: (h∘g)∘f ⇒ h∘(g∘f)`.
    pub fn assoc(&self, h: OneCell, g: OneCell, f: OneCell) -> TwoCell {
        let id = self.associator[self.triple_index(h, g, f)].expect("associator component is set");
        TwoCell::new(f.source, h.target, id)
    }

    /// `l_f: j_B∘f ⇒ f`.
    pub fn lunitor(&self, f: OneCell) -> TwoCell {
        let id = self.left_unitor[self.hom_index(f.source, f.target)][f.id.0]
            .expect("left unitor component is set");
        TwoCell::new(f.source, f.target, id)
    }

    /// `r_f: f∘j_A ⇒ f`.
    pub fn runitor(&self, f: OneCell) -> TwoCell {
        let id = self.right_unitor[self.hom_index(f.source, f.target)][f.id.0]
            .expect("right unitor component is set");
        TwoCell::new(f.source, f.target, id)
    }

    /// The associator component, if set.
    pub fn assoc_entry(&self, h: OneCell, g: OneCell, f: OneCell) -> Option<TwoCell> {
        self.associator[self.triple_index(h, g, f)].map(|id| TwoCell::new(f.source, h.target, id))
    }

    pub fn lunitor_entry(&self, f: OneCell) -> Option<TwoCell> {
        self.left_unitor[self.hom_index(f.source, f.target)][f.id.0].map(|id| TwoCell::new(f.source, f.target, id))
    }

    pub fn runitor_entry(&self, f: OneCell) -> Option<TwoCell> {
        self.right_unitor[self.hom_index(f.source, f.target)][f.id.0].map(|id| TwoCell::new(f.source, f.target, id))
    }

    pub fn assoc_inv(&self, h: OneCell, g: OneCell, f: OneCell) -> TwoCell {
        self.inverse2(self.assoc(h, g, f)).expect("associator is invertible")
    }

    pub fn lunitor_inv(&self, f: OneCell) -> TwoCell {
        self.inverse2(self.lunitor(f)).expect("left unitor is invertible")
    }

    pub fn runitor_inv(&self, f: OneCell) -> TwoCell {
        self.inverse2(self.runitor(f)).expect("right unitor is invertible")
    }

    pub fn set_associator(&mut self, h: OneCell, g: OneCell, f: OneCell, cell: MorId) {
        let i = self.triple_index(h, g, f);
        self.associator[i] = Some(cell);
    }

    pub fn set_left_unitor(&mut self, f: OneCell, cell: MorId) {
        let i = self.hom_index(f.source, f.target);
        self.left_unitor[i][f.id.0] = Some(cell);
    }

    pub fn set_right_unitor(&mut self, f: OneCell, cell: MorId) {
        let i = self.hom_index(f.source, f.target);
        self.right_unitor[i][f.id.0] = Some(cell);
    }

    /// All coherence cells are identities.
    pub fn is_strict(&self) -> bool {
        self.coherence_complete()
            && self
                .composable_triples()
                .into_iter()
                .all(|(h, g, f)| self.is_id2(self.assoc(h, g, f)))
            && self
                .all_one_cells()
                .into_iter()
                .all(|f| self.is_id2(self.lunitor(f)) && self.is_id2(self.runitor(f)))
    }

    fn coherence_complete(&self) -> bool {
        self.associator.iter().all(Option::is_some)
            && self.left_unitor.iter().flatten().all(Option::is_some)
            && self.right_unitor.iter().flatten().all(Option::is_some)
    }

    /// Materializes the composition functor for `(A, B, C)`.
    pub fn composition_functor(&self, a: ObjId, b: ObjId, c: ObjId) -> Functor {
        let map = self.composition_map(a, b, c);
        Functor {
            source: Arc::new(product_category(self.hom(b, c), self.hom(a, b))),
            target: self.hom(a, c).clone(),
            obj_map: map.obj.clone(),
            mor_map: map.mor.clone(),
        }
    }
}

impl fmt::Display for FiniteBicategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ones: usize = self.homs.iter().map(|h| h.num_objects()).sum();
        let twos: usize = self.homs.iter().map(|h| h.num_morphisms()).sum();
        write!(
            f,
            "{} ({} objects, {} 1-cells, {} 2-cells)",
            self.name,
            self.objects.len(),
            ones,
            twos
        )
    }
}

/// A bicategory certified to have identity coherence cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strict2Category(Arc<FiniteBicategory>);

impl Strict2Category {
    pub fn new(b: Arc<FiniteBicategory>) -> Result<Self> {
        if !b.is_strict() {
            return Err(StructureError::UnsupportedSetting(format!(
                "`{}` is not a strict 2-category",
                b.name()
            )));
        }
        Ok(Strict2Category(b))
    }

    pub fn bicategory(&self) -> &Arc<FiniteBicategory> {
        &self.0
    }
}

impl std::ops::Deref for Strict2Category {
    type Target = FiniteBicategory;

    fn deref(&self) -> &FiniteBicategory {
        &self.0
    }
}

/// Checks every bicategory axiom: functoriality of composition, coherence
/// cell boundaries, invertibility, naturality, pentagon, and triangle.
pub fn validate_bicategory(b: &FiniteBicategory) -> Result<ValidationReport> {
    if !b.coherence_complete() {
        let missing = b
            .composable_triples()
            .into_iter()
            .find(|&(h, g, f)| b.associator[b.triple_index(h, g, f)].is_none())
            .map(|(h, g, f)| format!("associator at ({}, {}, {})", b.q1(h), b.q1(g), b.q1(f)))
            .or_else(|| {
                b.all_one_cells()
                    .into_iter()
                    .find(|&f| b.left_unitor[b.hom_index(f.source, f.target)][f.id.0].is_none())
                    .map(|f| format!("left unitor at {}", b.q1(f)))
            })
            .unwrap_or_else(|| "right unitor".to_string());
        return Err(StructureError::Missing(missing));
    }
    for (hh, g, f) in b.composable_triples() {
        let cell = b.associator[b.triple_index(hh, g, f)].unwrap();
        let bound = b.hom(f.source, hh.target).num_morphisms();
        if cell.0 >= bound {
            return Err(StructureError::OutOfRange {
                what: "associator component".into(),
                id: cell.0,
                bound,
            });
        }
    }
    for f in b.all_one_cells() {
        let bound = b.hom(f.source, f.target).num_morphisms();
        let i = b.hom_index(f.source, f.target);
        for cell in [b.left_unitor[i][f.id.0], b.right_unitor[i][f.id.0]] {
            if cell.unwrap().0 >= bound {
                return Err(StructureError::OutOfRange {
                    what: "unitor component".into(),
                    id: cell.unwrap().0,
                    bound,
                });
            }
        }
    }

    let mut report = ValidationReport::new();
    for x in b.objects() {
        for y in b.objects() {
            let r = validate_category(b.hom(x, y));
            if !r.is_ok() {
                report.absorb(&format!("hom({},{})", b.object_name(x), b.object_name(y)), r);
            }
        }
    }
    if !report.is_ok() {
        return Ok(report);
    }
    for (x, y, z) in object_triples(b) {
        let r = validate_functor(&b.composition_functor(x, y, z))?;
        if !r.is_ok() {
            report.absorb(
                &format!(
                    "composition({},{},{})",
                    b.object_name(x),
                    b.object_name(y),
                    b.object_name(z)
                ),
                r,
            );
        }
    }
    if !report.is_ok() {
        return Ok(report);
    }

    let triples = b.composable_triples();
    for &(h, g, f) in &triples {
        let a = b.assoc(h, g, f);
        if b.src2(a) != b.compose1(b.compose1(h, g), f) || b.tgt2(a) != b.compose1(h, b.compose1(g, f)) {
            report.push(Law::CellBoundary, ["associator".to_string(), b.q1(h), b.q1(g), b.q1(f)]);
        }
    }
    let ones = b.all_one_cells();
    for &f in &ones {
        let l = b.lunitor(f);
        if b.src2(l) != b.compose1(b.unit_cell(f.target), f) || b.tgt2(l) != f {
            report.push(Law::CellBoundary, ["left-unitor".to_string(), b.q1(f)]);
        }
        let r = b.runitor(f);
        if b.src2(r) != b.compose1(f, b.unit_cell(f.source)) || b.tgt2(r) != f {
            report.push(Law::CellBoundary, ["right-unitor".to_string(), b.q1(f)]);
        }
    }
    if !report.is_ok() {
        return Ok(report);
    }

    for &(h, g, f) in &triples {
        if !b.is_iso2(b.assoc(h, g, f)) {
            report.push(Law::Invertibility, ["associator".to_string(), b.q1(h), b.q1(g), b.q1(f)]);
        }
    }
    for &f in &ones {
        if !b.is_iso2(b.lunitor(f)) {
            report.push(Law::Invertibility, ["left-unitor".to_string(), b.q1(f)]);
        }
        if !b.is_iso2(b.runitor(f)) {
            report.push(Law::Invertibility, ["right-unitor".to_string(), b.q1(f)]);
        }
    }

    // naturality of the associator, one variable at a time
    for &(h, g, f) in &triples {
        let a = b.assoc(h, g, f);
        for rho in b.two_cells(f.source, f.target).filter(|&r| b.src2(r) == f) {
            let f2 = b.tgt2(rho);
            let lhs = b.vc(b.assoc(h, g, f2), b.hc(b.id2(b.compose1(h, g)), rho));
            let rhs = b.vc(b.hc(b.id2(h), b.hc(b.id2(g), rho)), a);
            if lhs != rhs {
                report.push(Law::AssociatorNaturality, [b.q1(h), b.q1(g), b.q2(rho)]);
            }
        }
        for sigma in b.two_cells(g.source, g.target).filter(|&s| b.src2(s) == g) {
            let g2 = b.tgt2(sigma);
            let lhs = b.vc(b.assoc(h, g2, f), b.hc(b.hc(b.id2(h), sigma), b.id2(f)));
            let rhs = b.vc(b.hc(b.id2(h), b.hc(sigma, b.id2(f))), a);
            if lhs != rhs {
                report.push(Law::AssociatorNaturality, [b.q1(h), b.q2(sigma), b.q1(f)]);
            }
        }
        for tau in b.two_cells(h.source, h.target).filter(|&t| b.src2(t) == h) {
            let h2 = b.tgt2(tau);
            let lhs = b.vc(b.assoc(h2, g, f), b.hc(b.hc(tau, b.id2(g)), b.id2(f)));
            let rhs = b.vc(b.hc(tau, b.id2(b.compose1(g, f))), a);
            if lhs != rhs {
                report.push(Law::AssociatorNaturality, [b.q2(tau), b.q1(g), b.q1(f)]);
            }
        }
    }
    for x in b.objects() {
        for y in b.objects() {
            let jy = b.id2(b.unit_cell(y));
            let jx = b.id2(b.unit_cell(x));
            for rho in b.two_cells(x, y) {
                let (f, f2) = (b.src2(rho), b.tgt2(rho));
                if b.vc(b.lunitor(f2), b.hc(jy, rho)) != b.vc(rho, b.lunitor(f)) {
                    report.push(Law::LeftUnitorNaturality, [b.q2(rho)]);
                }
                if b.vc(b.runitor(f2), b.hc(rho, jx)) != b.vc(rho, b.runitor(f)) {
                    report.push(Law::RightUnitorNaturality, [b.q2(rho)]);
                }
            }
        }
    }

    for (k, h, g, f) in composable_quadruples(b) {
        // a_{k,h,gf} · a_{kh,g,f}  =  (k ⋆ a_{h,g,f}) · a_{k,hg,f} · (a_{k,h,g} ⋆ f)
        let lhs = b.vc(b.assoc(k, h, b.compose1(g, f)), b.assoc(b.compose1(k, h), g, f));
        let rhs = b.vc_chain(&[
            b.whisker_right(b.assoc(k, h, g), f),
            b.assoc(k, b.compose1(h, g), f),
            b.whisker_left(k, b.assoc(h, g, f)),
        ]);
        if lhs != rhs {
            report.push(Law::Pentagon, [b.q1(k), b.q1(h), b.q1(g), b.q1(f)]);
        }
    }
    for (g, f) in b.composable_pairs() {
        // (g ⋆ l_f) · a_{g,j,f}  =  r_g ⋆ f
        let j = b.unit_cell(f.target);
        let lhs = b.vc(b.whisker_left(g, b.lunitor(f)), b.assoc(g, j, f));
        let rhs = b.whisker_right(b.runitor(g), f);
        if lhs != rhs {
            report.push(Law::Triangle, [b.q1(g), b.q1(f)]);
        }
    }
    Ok(report)
}

fn object_triples(b: &FiniteBicategory) -> Vec<(ObjId, ObjId, ObjId)> {
    let mut out = Vec::new();
    for x in b.objects() {
        for y in b.objects() {
            for z in b.objects() {
                out.push((x, y, z));
            }
        }
    }
    out
}

/// Composable `(k, h, g, f)` in canonical order.
pub fn composable_quadruples(b: &FiniteBicategory) -> Vec<(OneCell, OneCell, OneCell, OneCell)> {
    let mut out = Vec::new();
    for (h, g, f) in b.composable_triples() {
        for e in b.objects() {
            for k in b.one_cells(h.target, e) {
                out.push((k, h, g, f));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests;

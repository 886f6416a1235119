//! Constructors for finite bicategories.

use std::sync::Arc;

use crate::cat::{CategoryBuilder, FiniteCategory, MorId, ObjId};
use crate::error::{BuildError, Result, StructureError};

use super::{validate_bicategory, CompositionMap, FiniteBicategory, OneCell};

/// Fills composition tables from closures over `(A, B, C)`.
///
/// `on_cells(a, b, c, g, f)` gives `g∘f` and `on_two(a, b, c, β, α)` gives
/// `β ⋆ α`; either may fail to signal a composite that does not exist.
pub fn tabulate(
    n: usize,
    homs: &[Arc<FiniteCategory>],
    mut on_cells: impl FnMut(usize, usize, usize, ObjId, ObjId) -> Result<ObjId>,
    mut on_two: impl FnMut(usize, usize, usize, MorId, MorId) -> Result<MorId>,
) -> Result<Vec<CompositionMap>> {
    let mut out = Vec::with_capacity(n * n * n);
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (ab, bc) = (&homs[a * n + b], &homs[b * n + c]);
                let mut obj = Vec::with_capacity(ab.num_objects() * bc.num_objects());
                for g in bc.objects() {
                    for f in ab.objects() {
                        obj.push(on_cells(a, b, c, g, f)?);
                    }
                }
                let mut mor = Vec::with_capacity(ab.num_morphisms() * bc.num_morphisms());
                for beta in bc.morphism_ids() {
                    for alpha in ab.morphism_ids() {
                        mor.push(on_two(a, b, c, beta, alpha)?);
                    }
                }
                out.push(CompositionMap { obj, mor });
            }
        }
    }
    Ok(out)
}

/// The category on `names` with a morphism `x -> y` iff `le(x, y)`.
/// Non-identity cells are named `x=>y`.
pub fn preorder_category(names: &[String], le: impl Fn(usize, usize) -> bool) -> Result<FiniteCategory> {
    let k = names.len();
    let mut b = CategoryBuilder::new();
    let objs: Vec<ObjId> = names.iter().map(|s| b.object(&s.to_string())).collect();
    let mut cell = vec![None; k * k];
    for x in 0..k {
        cell[x * k + x] = Some(b.identity_of(objs[x]));
        for y in 0..k {
            if x != y && le(x, y) {
                cell[x * k + y] = Some(b.morphism(&format!("{}=>{}", names[x], names[y]), objs[x], objs[y]));
            }
        }
    }
    for x in 0..k {
        for y in 0..k {
            for z in 0..k {
                if let (Some(f), Some(g)) = (cell[x * k + y], cell[y * k + z]) {
                    let h = cell[x * k + z].ok_or_else(|| {
                        StructureError::Invalid(format!(
                            "order is not transitive at {} <= {} <= {}",
                            names[x], names[y], names[z]
                        ))
                    })?;
                    b.compose(g, f, h);
                }
            }
        }
    }
    b.build()
}

/// A bicategory whose hom-categories are preorders. 1-cells of `hom(A,B)`
/// are `cells[A * n + B]`; `compose(a, b, c, g, f)` is the index of `g∘f`
/// in `hom(a, c)`, and `le(a, b, x, y)` decides `x ⇒ y` in `hom(a, b)`.
/// Coherence cells are the unique cells of the preorder and must exist.
pub fn locally_preordered(
    name: &str,
    objects: Vec<String>,
    cells: Vec<Vec<String>>,
    unit: Vec<usize>,
    compose: impl Fn(usize, usize, usize, usize, usize) -> usize,
    le: impl Fn(usize, usize, usize, usize) -> bool,
) -> Result<FiniteBicategory> {
    let n = objects.len();
    if cells.len() != n * n {
        return Err(StructureError::Shape {
            what: "1-cell lists".into(),
            expected: n * n,
            found: cells.len(),
        });
    }
    let mut homs = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            homs.push(Arc::new(preorder_category(&cells[a * n + b], |x, y| le(a, b, x, y))?));
        }
    }
    let comp = tabulate(
        n,
        &homs,
        |a, b, c, g, f| Ok(ObjId(compose(a, b, c, g.0, f.0))),
        |a, b, c, beta, alpha| {
            let (ab, bc, ac) = (&homs[a * n + b], &homs[b * n + c], &homs[a * n + c]);
            let s = compose(a, b, c, bc.source(beta).0, ab.source(alpha).0);
            let t = compose(a, b, c, bc.target(beta).0, ab.target(alpha).0);
            ac.hom(ObjId(s), ObjId(t)).first().copied().ok_or_else(|| {
                StructureError::Invalid(format!(
                    "composition is not monotone: `{}` ⋆ `{}` has no cell {} => {}",
                    bc.name(beta),
                    ab.name(alpha),
                    cells[a * n + c][s],
                    cells[a * n + c][t]
                ))
            })
        },
    )?;
    let unit = unit.into_iter().map(ObjId).collect();
    let mut bicat = FiniteBicategory::new(name, objects, homs, comp, unit)?;
    fill_unique_coherence(&mut bicat)?;
    Ok(bicat)
}

/// Sets every coherence cell to the unique cell between its boundaries.
fn fill_unique_coherence(b: &mut FiniteBicategory) -> Result<()> {
    let unique = |b: &FiniteBicategory, s: OneCell, t: OneCell, what: &str| -> Result<MorId> {
        b.cells_between(s, t).next().map(|c| c.id).ok_or_else(|| {
            StructureError::Invalid(format!(
                "no {what} cell {} => {}",
                b.one_cell_name(s),
                b.one_cell_name(t)
            ))
        })
    };
    for (h, g, f) in b.composable_triples() {
        let s = b.compose1(b.compose1(h, g), f);
        let t = b.compose1(h, b.compose1(g, f));
        let cell = unique(b, s, t, "associator")?;
        b.set_associator(h, g, f, cell);
    }
    for f in b.all_one_cells() {
        let l = unique(b, b.compose1(b.unit_cell(f.target), f), f, "left unitor")?;
        b.set_left_unitor(f, l);
        let r = unique(b, b.compose1(f, b.unit_cell(f.source)), f, "right unitor")?;
        b.set_right_unitor(f, r);
    }
    Ok(())
}

/// The locally discrete bicategory on a category: 1-cells are morphisms
/// and the only 2-cells are identities.
pub fn from_category(c: &FiniteCategory) -> FiniteBicategory {
    let n = c.num_objects();
    let mut cells = Vec::with_capacity(n * n);
    for a in c.objects() {
        for b in c.objects() {
            cells.push(c.hom(a, b).iter().map(|&m| c.name(m).to_string()).collect());
        }
    }
    let pos = |a: usize, b: usize, m: MorId| {
        c.hom(ObjId(a), ObjId(b)).iter().position(|&x| x == m).expect("morphism in its hom")
    };
    let unit = c.objects().map(|a| pos(a.0, a.0, c.identity(a))).collect();
    locally_preordered(
        "from_category",
        c.object_names().to_vec(),
        cells,
        unit,
        |a, b, cc, g, f| {
            let gm = c.hom(ObjId(b), ObjId(cc))[g];
            let fm = c.hom(ObjId(a), ObjId(b))[f];
            pos(a, cc, c.comp(gm, fm))
        },
        |_, _, x, y| x == y,
    )
    .expect("a valid category gives a locally discrete bicategory")
}

/// A finite set with a binary operation and a two-sided unit. The product
/// `x·y` is `table[x * n + y]`. Associativity is not required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedMagma {
    pub elements: Vec<String>,
    pub table: Vec<usize>,
    pub unit: usize,
}

impl PointedMagma {
    pub fn new(elements: Vec<String>, table: Vec<usize>, unit: usize) -> Result<Self> {
        let n = elements.len();
        if table.len() != n * n {
            return Err(StructureError::Shape {
                what: "magma table".into(),
                expected: n * n,
                found: table.len(),
            });
        }
        if let Some(&x) = table.iter().find(|&&x| x >= n) {
            return Err(StructureError::OutOfRange {
                what: "magma product".into(),
                id: x,
                bound: n,
            });
        }
        if unit >= n {
            return Err(StructureError::OutOfRange {
                what: "magma unit".into(),
                id: unit,
                bound: n,
            });
        }
        let m = PointedMagma { elements, table, unit };
        if let Some(x) = (0..n).find(|&x| m.mul(unit, x) != x || m.mul(x, unit) != x) {
            return Err(StructureError::Invalid(format!(
                "`{}` is not a two-sided unit (fails at `{}`)",
                m.elements[unit], m.elements[x]
            )));
        }
        Ok(m)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.elements.len() + y]
    }

    pub fn is_associative(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| self.mul(self.mul(x, y), z) == self.mul(x, self.mul(y, z)))))
    }

    pub fn find(&self, name: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == name)
    }
}

/// One object, hom the codiscrete category on the magma, 1-cell
/// composition `g∘f = g·f`. Coherence cells are the unique cells.
pub fn codiscrete_bicategory(s: &PointedMagma) -> FiniteBicategory {
    locally_preordered(
        "codiscrete",
        vec!["*".into()],
        vec![s.elements.clone()],
        vec![s.unit],
        |_, _, _, g, f| s.mul(g, f),
        |_, _, _, _| true,
    )
    .expect("codiscrete homs always admit coherence cells")
}

/// A finite group given by its multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub elements: Vec<String>,
    pub table: Vec<usize>,
    pub unit: usize,
}

impl FiniteGroup {
    pub fn new(elements: Vec<String>, table: Vec<usize>, unit: usize) -> Result<Self> {
        let m = PointedMagma::new(elements, table, unit)?;
        if !m.is_associative() {
            return Err(StructureError::Invalid("group operation is not associative".into()));
        }
        let n = m.len();
        if let Some(x) = (0..n).find(|&x| !(0..n).any(|y| m.mul(x, y) == unit && m.mul(y, x) == unit)) {
            return Err(StructureError::Invalid(format!("`{}` has no inverse", m.elements[x])));
        }
        Ok(FiniteGroup {
            elements: m.elements,
            table: m.table,
            unit: m.unit,
        })
    }

    /// `Z/n` with elements named `0..n-1`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n > 0, "cyclic group of order 0");
        FiniteGroup {
            elements: (0..n).map(|i| i.to_string()).collect(),
            table: (0..n * n).map(|i| (i / n + i % n) % n).collect(),
            unit: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.elements.len() + y]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| self.mul(x, y) == self.mul(y, x)))
    }
}

/// A function `G³ → A`, `values[(h * n + g) * n + f]` for the triple
/// `(h, g, f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeCochain {
    pub values: Vec<usize>,
}

impl ThreeCochain {
    pub fn zero(order: usize) -> Self {
        ThreeCochain {
            values: vec![0; order * order * order],
        }
    }

    pub fn at(&self, order: usize, h: usize, g: usize, f: usize) -> usize {
        self.values[(h * order + g) * order + f]
    }

    pub fn set(&mut self, order: usize, h: usize, g: usize, f: usize, v: usize) {
        self.values[(h * order + g) * order + f] = v;
    }
}

/// Builds the one-object bicategory with 1-cells `G`, 2-cells `A` on each
/// 1-cell, and associator `ω` without checking coherence.
pub fn cocycle_bicategory_unchecked(g: &FiniteGroup, a: &FiniteGroup, omega: &ThreeCochain) -> Result<FiniteBicategory> {
    let (n, m) = (g.len(), a.len());
    if omega.values.len() != n * n * n {
        return Err(StructureError::Shape {
            what: "cochain".into(),
            expected: n * n * n,
            found: omega.values.len(),
        });
    }
    if let Some(&v) = omega.values.iter().find(|&&v| v >= m) {
        return Err(StructureError::OutOfRange {
            what: "cochain value".into(),
            id: v,
            bound: m,
        });
    }
    if !a.is_abelian() {
        return Err(StructureError::Invalid("coefficient group is not abelian".into()));
    }
    // 2-cell (x, v) on 1-cell x has id x * m + v
    let mut b = CategoryBuilder::new();
    for x in 0..n {
        let name = &g.elements[x];
        let o = b.object_with_identity(name, &format!("{name}:{}", a.elements[a.unit]));
        for v in (0..m).filter(|&v| v != a.unit) {
            b.morphism(&format!("{name}:{}", a.elements[v]), o, o);
        }
    }
    // builder ids: identity first, then the rest in order, skipping the unit
    let cell_id = |x: usize, v: usize| -> MorId {
        let rank = if v == a.unit {
            0
        } else if v < a.unit {
            v + 1
        } else {
            v
        };
        MorId(x * m + rank)
    };
    for x in 0..n {
        for u in 0..m {
            for v in 0..m {
                b.compose(cell_id(x, v), cell_id(x, u), cell_id(x, a.mul(u, v)));
            }
        }
    }
    let hom = Arc::new(b.build()?);
    let value_of = |c: MorId| -> usize {
        let rank = c.0 % m;
        if rank == 0 {
            a.unit
        } else if rank <= a.unit {
            rank - 1
        } else {
            rank
        }
    };
    let comp = tabulate(
        1,
        std::slice::from_ref(&hom),
        |_, _, _, y, x| Ok(ObjId(g.mul(y.0, x.0))),
        |_, _, _, beta, alpha| {
            let (y, x) = (beta.0 / m, alpha.0 / m);
            Ok(cell_id(g.mul(y, x), a.mul(value_of(beta), value_of(alpha))))
        },
    )?;
    let mut bicat = FiniteBicategory::new(
        "cocycle",
        vec!["*".into()],
        vec![hom],
        comp,
        vec![ObjId(g.unit)],
    )?;
    for (h, gg, f) in bicat.composable_triples() {
        let hgf = g.mul(g.mul(h.id.0, gg.id.0), f.id.0);
        let w = omega.at(n, h.id.0, gg.id.0, f.id.0);
        bicat.set_associator(h, gg, f, cell_id(hgf, w));
    }
    for f in bicat.all_one_cells() {
        let id = bicat.id2(f).id;
        bicat.set_left_unitor(f, id);
        bicat.set_right_unitor(f, id);
    }
    Ok(bicat)
}

/// As [`cocycle_bicategory_unchecked`], but returns the coherence failures
/// when `ω` is not a normalized 3-cocycle.
pub fn cocycle_bicategory(
    g: &FiniteGroup,
    a: &FiniteGroup,
    omega: &ThreeCochain,
) -> std::result::Result<FiniteBicategory, BuildError> {
    let b = cocycle_bicategory_unchecked(g, a, omega)?;
    let report = validate_bicategory(&b)?;
    if report.is_ok() {
        Ok(b)
    } else {
        Err(BuildError::Incoherent(report))
    }
}

/// The cochain on `Z/2` with value 1 exactly at `(1, 1, 1)`.
pub fn z2_nontrivial_cocycle() -> ThreeCochain {
    let mut w = ThreeCochain::zero(2);
    w.set(2, 1, 1, 1, 1);
    w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::validate_category;
    use crate::report::Law;

    #[test]
    fn preorder_rejects_intransitive_order() {
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let le = |x: usize, y: usize| x == y || (x, y) == (0, 1) || (x, y) == (1, 2);
        assert!(preorder_category(&names, le).is_err());
        let ok = preorder_category(&names, |x, y| x <= y).unwrap();
        assert!(validate_category(&ok).is_ok());
        assert_eq!(ok.num_morphisms(), 6);
    }

    #[test]
    fn magma_unit_is_checked() {
        let els = vec!["e".to_string(), "a".to_string()];
        assert!(PointedMagma::new(els.clone(), vec![0, 1, 1, 0], 0).is_ok());
        assert!(PointedMagma::new(els, vec![1, 1, 1, 0], 0).is_err());
    }

    #[test]
    fn group_axioms_are_checked() {
        assert!(FiniteGroup::new(vec!["e".into(), "x".into()], vec![0, 1, 1, 1], 0).is_err());
        let z3 = FiniteGroup::cyclic(3);
        assert!(FiniteGroup::new(z3.elements.clone(), z3.table.clone(), 0).is_ok());
    }

    #[test]
    fn flipped_cocycle_value_is_rejected() {
        let z2 = FiniteGroup::cyclic(2);
        let mut w = z2_nontrivial_cocycle();
        w.set(2, 0, 1, 1, 1);
        match cocycle_bicategory(&z2, &z2, &w) {
            Err(BuildError::Incoherent(r)) => assert!(r.has(Law::Pentagon)),
            other => panic!("expected coherence failure, got {other:?}"),
        }
    }
}

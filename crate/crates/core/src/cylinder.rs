//! The lax Gray cylinder `2⊗B` of a finite 2-category `B`.
//!
//! Objects are `(i, X)` for `i ∈ {0, 1}`. The homs within one level are
//! copies of `B`, nothing goes from level 1 down to level 0, and a 1-cell
//! `(0,X) → (1,Y)` is a normal form `(1,h)(!,W)(0,g)` with `g: X → W` and
//! `h: W → Y`. A 2-cell `(h,g) ⇒ (h',g')` is a class of triples
//! `(k, σ, τ)` with `k: W' → W`, `σ: g ⇒ k∘g'`, `τ: h∘k ⇒ h'`, where
//! `(k, σ, τ'·(h⋆κ)) ~ (k', (κ⋆g')·σ, τ')` for every `κ: k ⇒ k'`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use petgraph::unionfind::UnionFind;

use crate::bicat::build::tabulate;
use crate::bicat::{validate_bicategory, FiniteBicategory, OneCell, Strict2Category, TwoCell};
use crate::cat::{FiniteCategory, MorId, Morphism, ObjId};
use crate::error::{Result, StructureError};
use crate::laxfun::LaxFunctor;
use crate::oplax::{interchange_check, validate_oplax, Interchange, InterchangeWitness, OplaxNat};

/// A representative 2-cell `(k, σ, τ)` between two objects of a cross hom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triple {
    pub source: usize,
    pub target: usize,
    pub k: OneCell,
    pub sigma: TwoCell,
    pub tau: TwoCell,
}

/// The hom-category `(0,X) → (1,Y)` before it is packed into a
/// [`FiniteCategory`].
#[derive(Debug, Clone)]
pub struct CrossHom {
    /// Normal forms `(h, g)`; the middle object is `h.source`.
    pub objects: Vec<(OneCell, OneCell)>,
    pub triples: Vec<Triple>,
    /// Class of each triple; classes are numbered by first occurrence.
    pub class_of: Vec<usize>,
    /// First triple of each class.
    pub reps: Vec<usize>,
    object_index: HashMap<(OneCell, OneCell), usize>,
    triple_index: HashMap<Triple, usize>,
}

impl CrossHom {
    fn build(b: &FiniteBicategory, x: ObjId, y: ObjId) -> Self {
        let mut objects = Vec::new();
        for w in b.objects() {
            for h in b.one_cells(w, y) {
                for g in b.one_cells(x, w) {
                    objects.push((h, g));
                }
            }
        }
        let object_index = objects.iter().enumerate().map(|(i, &o)| (o, i)).collect();
        let mut triples = Vec::new();
        for (s, &(h, g)) in objects.iter().enumerate() {
            for (t, &(h2, g2)) in objects.iter().enumerate() {
                let (w, w2) = (h.source, h2.source);
                for k in b.one_cells(w2, w) {
                    for sigma in b.cells_between(g, b.compose1(k, g2)) {
                        for tau in b.cells_between(b.compose1(h, k), h2) {
                            triples.push(Triple {
                                source: s,
                                target: t,
                                k,
                                sigma,
                                tau,
                            });
                        }
                    }
                }
            }
        }
        let triple_index: HashMap<Triple, usize> = triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let mut uf = UnionFind::<usize>::new(triples.len());
        for (s, &(h, g)) in objects.iter().enumerate() {
            for (t, &(h2, g2)) in objects.iter().enumerate() {
                let (w, w2) = (h.source, h2.source);
                for k in b.one_cells(w2, w) {
                    for k2 in b.one_cells(w2, w) {
                        for kappa in b.cells_between(k, k2) {
                            for sigma in b.cells_between(g, b.compose1(k, g2)) {
                                for tau2 in b.cells_between(b.compose1(h, k2), h2) {
                                    let left = Triple {
                                        source: s,
                                        target: t,
                                        k,
                                        sigma,
                                        tau: b.vc(tau2, b.whisker_left(h, kappa)),
                                    };
                                    let right = Triple {
                                        source: s,
                                        target: t,
                                        k: k2,
                                        sigma: b.vc(b.whisker_right(kappa, g2), sigma),
                                        tau: tau2,
                                    };
                                    uf.union(triple_index[&left], triple_index[&right]);
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut class_of = vec![usize::MAX; triples.len()];
        let mut reps = Vec::new();
        let mut by_root = HashMap::new();
        for i in 0..triples.len() {
            let c = *by_root.entry(uf.find(i)).or_insert_with(|| {
                reps.push(i);
                reps.len() - 1
            });
            class_of[i] = c;
        }
        CrossHom {
            objects,
            triples,
            class_of,
            reps,
            object_index,
            triple_index,
        }
    }

    pub fn num_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn object(&self, h: OneCell, g: OneCell) -> Option<usize> {
        self.object_index.get(&(h, g)).copied()
    }

    pub fn class(&self, t: &Triple) -> Option<usize> {
        self.triple_index.get(t).map(|&i| self.class_of[i])
    }

    pub fn rep(&self, class: usize) -> Triple {
        self.triples[self.reps[class]]
    }

    /// `(1_W, id_g, id_h)`.
    pub fn identity_triple(&self, b: &FiniteBicategory, o: usize) -> Triple {
        let (h, g) = self.objects[o];
        Triple {
            source: o,
            target: o,
            k: b.unit_cell(h.source),
            sigma: b.id2(g),
            tau: b.id2(h),
        }
    }

    /// `t₂` after `t₁`: `(k₁∘k₂, (k₁⋆σ₂)·σ₁, τ₂·(τ₁⋆k₂))`.
    pub fn compose_triples(&self, b: &FiniteBicategory, t2: &Triple, t1: &Triple) -> Triple {
        debug_assert_eq!(t1.target, t2.source);
        Triple {
            source: t1.source,
            target: t2.target,
            k: b.compose1(t1.k, t2.k),
            sigma: b.vc(b.whisker_left(t1.k, t2.sigma), t1.sigma),
            tau: b.vc(t2.tau, b.whisker_right(t1.tau, t2.k)),
        }
    }

    /// The crossing cell `(!,k)` for `k: W' → W`, sitting between
    /// `(h, k∘g')` and `(h∘k, g')`.
    pub fn crossing_triple(&self, b: &FiniteBicategory, h: OneCell, k: OneCell, g2: OneCell) -> Option<Triple> {
        let g = b.compose1(k, g2);
        let hk = b.compose1(h, k);
        Some(Triple {
            source: self.object(h, g)?,
            target: self.object(hk, g2)?,
            k,
            sigma: b.id2(g),
            tau: b.id2(hk),
        })
    }

    pub fn object_name(&self, b: &FiniteBicategory, o: usize) -> String {
        let (h, g) = self.objects[o];
        format!(
            "(1,{})(!,{})(0,{})",
            b.one_cell_name(h),
            b.object_name(h.source),
            b.one_cell_name(g)
        )
    }

    fn triple_name(&self, b: &FiniteBicategory, t: &Triple) -> String {
        format!(
            "[{}|{}|{}]",
            b.one_cell_name(t.k),
            b.two_cell_name(t.sigma),
            b.two_cell_name(t.tau)
        )
    }
}

/// Result of checking that composition and whiskering are well defined on
/// triple classes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct QuotientAudit {
    pub triples: usize,
    pub classes: usize,
    pub instances_checked: usize,
    pub failures: Vec<String>,
}

impl QuotientAudit {
    pub fn is_congruence(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for QuotientAudit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} triples in {} classes, {} instances checked, {} failures",
            self.triples,
            self.classes,
            self.instances_checked,
            self.failures.len()
        )
    }
}

#[derive(Debug, Clone)]
pub struct Cylinder {
    pub base: Strict2Category,
    pub total: Arc<FiniteBicategory>,
    /// The inclusions at level 0 and level 1.
    pub legs: [Arc<LaxFunctor>; 2],
    /// The universal oplax transformation from level 0 to level 1.
    pub crossing: OplaxNat,
    pub audit: QuotientAudit,
    cross: Vec<CrossHom>,
}

impl Cylinder {
    /// The object `(i, X)` of the total 2-category.
    pub fn at(&self, level: usize, x: ObjId) -> ObjId {
        ObjId(level * self.base.num_objects() + x.0)
    }

    /// The hom `(0,X) → (1,Y)`.
    pub fn cross_hom(&self, x: ObjId, y: ObjId) -> &CrossHom {
        &self.cross[x.0 * self.base.num_objects() + y.0]
    }

    /// The 2-cell of the total 2-category represented by `t` in the hom
    /// `(0,X) → (1,Y)`.
    pub fn cell(&self, x: ObjId, y: ObjId, t: &Triple) -> Option<TwoCell> {
        let c = self.cross_hom(x, y).class(t)?;
        Some(TwoCell::new(self.at(0, x), self.at(1, y), MorId(c)))
    }

    /// The crossing constraint `(!,g)`.
    pub fn crossing_cell(&self, g: OneCell) -> TwoCell {
        self.crossing.constraint(g)
    }
}

fn level_of(n: usize, a: usize) -> (usize, ObjId) {
    (a / n, ObjId(a % n))
}

fn pack(b: &FiniteBicategory, hom: &CrossHom) -> Result<FiniteCategory> {
    let objects = (0..hom.objects.len()).map(|o| hom.object_name(b, o)).collect();
    let morphisms = hom
        .reps
        .iter()
        .map(|&i| {
            let t = &hom.triples[i];
            let name = if hom.class_of[i] == hom.class(&hom.identity_triple(b, t.source)).unwrap_or(usize::MAX) {
                format!("1_{}", hom.object_name(b, t.source))
            } else {
                hom.triple_name(b, t)
            };
            Morphism {
                name,
                source: ObjId(t.source),
                target: ObjId(t.target),
            }
        })
        .collect();
    let identity = (0..hom.objects.len())
        .map(|o| MorId(hom.class(&hom.identity_triple(b, o)).expect("identity triple is enumerated")))
        .collect();
    let mut composites = HashMap::new();
    for (c1, &i1) in hom.reps.iter().enumerate() {
        for (c2, &i2) in hom.reps.iter().enumerate() {
            let (t1, t2) = (&hom.triples[i1], &hom.triples[i2]);
            if t1.target != t2.source {
                continue;
            }
            let c = hom
                .class(&hom.compose_triples(b, t2, t1))
                .ok_or_else(|| StructureError::Invalid("composite triple is not enumerated".into()))?;
            composites.insert((MorId(c1), MorId(c2)), MorId(c));
        }
    }
    FiniteCategory::from_tables(objects, morphisms, identity, composites)
}

fn audit(b: &FiniteBicategory, cross: &[CrossHom]) -> QuotientAudit {
    let n = b.num_objects();
    let mut out = QuotientAudit::default();
    for x in b.objects() {
        for y in b.objects() {
            let hom = &cross[x.0 * n + y.0];
            out.triples += hom.triples.len();
            out.classes += hom.num_classes();
            let fail = |out: &mut QuotientAudit, what: String| out.failures.push(what);
            // vertical composition
            for t1 in &hom.triples {
                for t2 in hom.triples.iter().filter(|t| t.source == t1.target) {
                    out.instances_checked += 1;
                    let (r1, r2) = (hom.rep(hom.class(t1).unwrap()), hom.rep(hom.class(t2).unwrap()));
                    let a = hom.class(&hom.compose_triples(b, t2, t1));
                    let r = hom.class(&hom.compose_triples(b, &r2, &r1));
                    if a.is_none() || a != r {
                        fail(
                            &mut out,
                            format!(
                                "composite in ({},{}) depends on representatives: {} after {}",
                                b.object_name(x),
                                b.object_name(y),
                                hom.triple_name(b, t2),
                                hom.triple_name(b, t1)
                            ),
                        );
                    }
                }
            }
            // whiskering by level-0 cells ρ: f ⇒ f' with f: X0 → X
            for x0 in b.objects() {
                let target = &cross[x0.0 * n + y.0];
                for rho in b.two_cells(x0, x) {
                    for t in &hom.triples {
                        out.instances_checked += 1;
                        let w = |t: &Triple| {
                            let ((h, g), (h2, g2)) = (hom.objects[t.source], hom.objects[t.target]);
                            let (f, f2) = (b.src2(rho), b.tgt2(rho));
                            target.class(&Triple {
                                source: target.object(h, b.compose1(g, f))?,
                                target: target.object(h2, b.compose1(g2, f2))?,
                                k: t.k,
                                sigma: b.hc(t.sigma, rho),
                                tau: t.tau,
                            })
                        };
                        let r = hom.rep(hom.class(t).unwrap());
                        if w(t).is_none() || w(t) != w(&r) {
                            fail(&mut out, format!("level-0 whiskering by {} is not well defined", b.q2(rho)));
                        }
                    }
                }
            }
            // whiskering by level-1 cells ε: e ⇒ e' with e: Y → Y1
            for y1 in b.objects() {
                let target = &cross[x.0 * n + y1.0];
                for eps in b.two_cells(y, y1) {
                    for t in &hom.triples {
                        out.instances_checked += 1;
                        let w = |t: &Triple| {
                            let ((h, g), (h2, g2)) = (hom.objects[t.source], hom.objects[t.target]);
                            let (e, e2) = (b.src2(eps), b.tgt2(eps));
                            target.class(&Triple {
                                source: target.object(b.compose1(e, h), g)?,
                                target: target.object(b.compose1(e2, h2), g2)?,
                                k: t.k,
                                sigma: t.sigma,
                                tau: b.hc(eps, t.tau),
                            })
                        };
                        let r = hom.rep(hom.class(t).unwrap());
                        if w(t).is_none() || w(t) != w(&r) {
                            fail(&mut out, format!("level-1 whiskering by {} is not well defined", b.q2(eps)));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Builds `2⊗B`, its legs, and the crossing transformation, and checks the
/// quotient is a congruence and the result a 2-category.
pub fn lax_cylinder(base: &Strict2Category) -> Result<Cylinder> {
    let b: &FiniteBicategory = base;
    let n = b.num_objects();
    let cross: Vec<CrossHom> = b
        .objects()
        .flat_map(|x| b.objects().map(move |y| (x, y)))
        .map(|(x, y)| CrossHom::build(b, x, y))
        .collect();
    let audit = audit(b, &cross);
    if !audit.is_congruence() {
        return Err(StructureError::Invalid(format!(
            "cylinder quotient is not a congruence: {}",
            audit.failures[0]
        )));
    }

    let empty = Arc::new(FiniteCategory::from_tables(Vec::new(), Vec::new(), Vec::new(), HashMap::new())?);
    let total_n = 2 * n;
    let mut homs = Vec::with_capacity(total_n * total_n);
    for a in 0..total_n {
        for c in 0..total_n {
            let ((la, x), (lc, y)) = (level_of(n, a), level_of(n, c));
            homs.push(match (la, lc) {
                (i, j) if i == j => b.hom(x, y).clone(),
                (0, 1) => Arc::new(pack(b, &cross[x.0 * n + y.0])?),
                _ => empty.clone(),
            });
        }
    }
    let cross_ref = &cross;
    let comp = tabulate(
        total_n,
        &homs,
        |a, bb, c, g, f| {
            let ((la, xa), (lb, xb), (lc, xc)) = (level_of(n, a), level_of(n, bb), level_of(n, c));
            match (la, lb, lc) {
                (i, j, k) if i == j && j == k => {
                    Ok(b.compose1(OneCell::new(xb, xc, g), OneCell::new(xa, xb, f)).id)
                }
                (0, 0, 1) => {
                    let (h, g0) = cross_ref[xb.0 * n + xc.0].objects[g.0];
                    let f = OneCell::new(xa, xb, f);
                    let o = cross_ref[xa.0 * n + xc.0].object(h, b.compose1(g0, f));
                    o.map(ObjId).ok_or_else(|| StructureError::Invalid("missing normal form".into()))
                }
                (0, 1, 1) => {
                    let (h, g0) = cross_ref[xa.0 * n + xb.0].objects[f.0];
                    let e = OneCell::new(xb, xc, g);
                    let o = cross_ref[xa.0 * n + xc.0].object(b.compose1(e, h), g0);
                    o.map(ObjId).ok_or_else(|| StructureError::Invalid("missing normal form".into()))
                }
                _ => Err(StructureError::Invalid("composite through an empty hom".into())),
            }
        },
        |a, bb, c, beta, alpha| {
            let ((la, xa), (lb, xb), (lc, xc)) = (level_of(n, a), level_of(n, bb), level_of(n, c));
            match (la, lb, lc) {
                (i, j, k) if i == j && j == k => {
                    Ok(b.hc(TwoCell::new(xb, xc, beta), TwoCell::new(xa, xb, alpha)).id)
                }
                (0, 0, 1) => {
                    let (from, to) = (&cross_ref[xb.0 * n + xc.0], &cross_ref[xa.0 * n + xc.0]);
                    let t = from.rep(beta.0);
                    let rho = TwoCell::new(xa, xb, alpha);
                    let ((h, g), (h2, g2)) = (from.objects[t.source], from.objects[t.target]);
                    let (f, f2) = (b.src2(rho), b.tgt2(rho));
                    let w = (|| {
                        to.class(&Triple {
                            source: to.object(h, b.compose1(g, f))?,
                            target: to.object(h2, b.compose1(g2, f2))?,
                            k: t.k,
                            sigma: b.hc(t.sigma, rho),
                            tau: t.tau,
                        })
                    })();
                    w.map(MorId).ok_or_else(|| StructureError::Invalid("missing whiskered triple".into()))
                }
                (0, 1, 1) => {
                    let (from, to) = (&cross_ref[xa.0 * n + xb.0], &cross_ref[xa.0 * n + xc.0]);
                    let t = from.rep(alpha.0);
                    let eps = TwoCell::new(xb, xc, beta);
                    let ((h, g), (h2, g2)) = (from.objects[t.source], from.objects[t.target]);
                    let (e, e2) = (b.src2(eps), b.tgt2(eps));
                    let w = (|| {
                        to.class(&Triple {
                            source: to.object(b.compose1(e, h), g)?,
                            target: to.object(b.compose1(e2, h2), g2)?,
                            k: t.k,
                            sigma: t.sigma,
                            tau: b.hc(eps, t.tau),
                        })
                    })();
                    w.map(MorId).ok_or_else(|| StructureError::Invalid("missing whiskered triple".into()))
                }
                _ => Err(StructureError::Invalid("composite through an empty hom".into())),
            }
        },
    )?;
    let names = (0..total_n)
        .map(|a| {
            let (l, x) = level_of(n, a);
            format!("({},{})", l, b.object_name(x))
        })
        .collect();
    let units = (0..total_n).map(|a| b.unit_cell(level_of(n, a).1).id).collect();
    let total = FiniteBicategory::new(format!("2x{}", b.name()), names, homs, comp, units)?;
    let report = validate_bicategory(&total)?;
    if !report.is_ok() {
        return Err(StructureError::Invalid(format!("cylinder is not a 2-category: {report}")));
    }
    if !total.is_strict() {
        return Err(StructureError::Invalid("cylinder has non-identity coherence cells".into()));
    }
    let total = Arc::new(total);

    let src = base.bicategory().clone();
    let leg = |level: usize| -> Result<Arc<LaxFunctor>> {
        let lift = move |a: ObjId| ObjId(level * n + a.0);
        Ok(Arc::new(LaxFunctor::strict(
            src.clone(),
            total.clone(),
            src.objects().map(lift).collect(),
            |f| OneCell::new(lift(f.source), lift(f.target), f.id),
            |c| TwoCell::new(lift(c.source), lift(c.target), c.id),
        )?))
    };
    let legs = [leg(0)?, leg(1)?];
    let components: Vec<OneCell> = b
        .objects()
        .map(|x| {
            let j = b.unit_cell(x);
            let o = cross[x.0 * n + x.0].object(j, j).expect("(1,1)(!,X)(0,1) is a normal form");
            OneCell::new(ObjId(x.0), ObjId(n + x.0), ObjId(o))
        })
        .collect();
    let crossing = OplaxNat::from_fn(legs[0].clone(), legs[1].clone(), components, |g| {
        let hom = &cross[g.source.0 * n + g.target.0];
        let t = hom
            .crossing_triple(b, b.unit_cell(g.target), g, b.unit_cell(g.source))
            .expect("crossing boundaries are normal forms");
        TwoCell::new(ObjId(g.source.0), ObjId(n + g.target.0), MorId(hom.class(&t).expect("enumerated")))
    });
    let report = validate_oplax(&crossing)?;
    if !report.is_ok() {
        return Err(StructureError::Invalid(format!("crossing is not oplax natural: {report}")));
    }
    Ok(Cylinder {
        base: base.clone(),
        total,
        legs,
        crossing,
        audit,
        cross,
    })
}

/// A constructive certificate that `α` is not costrict: a 2-category `C`,
/// 2-functors `H, K` into it, and `β: H ⇒ K` against which interchange with
/// `α` fails.
#[derive(Debug, Clone)]
pub struct Refutation {
    pub cylinder: Arc<Cylinder>,
    pub beta: OplaxNat,
    /// The object of `α`'s source whose component is not an identity.
    pub object: ObjId,
    pub witness: InterchangeWitness,
}

impl Refutation {
    /// Runs the interchange check again from scratch.
    pub fn replay(&self, alpha: &OplaxNat) -> Result<bool> {
        Ok(!interchange_check(&self.beta, alpha)?.holds())
    }
}

/// `None` when every component of `α` is an identity; otherwise the
/// crossing of the cylinder on `α`'s target 2-category, with the failing
/// interchange.
pub fn costrict_refutation(alpha: &OplaxNat) -> Result<Option<Refutation>> {
    let b = alpha.ambient().clone();
    let Some(object) = alpha
        .source
        .source
        .objects()
        .find(|&a| !b.is_unit(alpha.component(a)))
    else {
        return Ok(None);
    };
    let cyl = Arc::new(lax_cylinder(&Strict2Category::new(b)?)?);
    refute_with(alpha, object, cyl).map(Some)
}

/// As [`costrict_refutation`], reusing an already built cylinder.
pub fn refute_with(alpha: &OplaxNat, object: ObjId, cylinder: Arc<Cylinder>) -> Result<Refutation> {
    let beta = cylinder.crossing.clone();
    match interchange_check(&beta, alpha)? {
        Interchange::Fails(witness) => Ok(Refutation {
            cylinder,
            beta,
            object,
            witness,
        }),
        Interchange::Holds => Err(StructureError::Invalid(format!(
            "interchange with the crossing holds although the component at `{}` is not an identity",
            alpha.source.source.object_name(object)
        ))),
    }
}

/// Size bounds for the generated `β` battery.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BatteryBounds {
    pub max_objects: usize,
    pub max_two_cells_per_hom: usize,
    /// Cap on 2-functors taken per target.
    pub functors_per_target: usize,
    /// Cap on transformations taken per pair of 2-functors.
    pub per_pair: usize,
}

impl Default for BatteryBounds {
    fn default() -> Self {
        BatteryBounds {
            max_objects: 3,
            max_two_cells_per_hom: 12,
            functors_per_target: 8,
            per_pair: 8,
        }
    }
}

fn within(t: &FiniteBicategory, bounds: &BatteryBounds) -> bool {
    t.is_strict()
        && t.num_objects() <= bounds.max_objects
        && t.objects()
            .all(|a| t.objects().all(|b| t.hom(a, b).num_morphisms() <= bounds.max_two_cells_per_hom))
}

/// The `β` battery for one 2-category `b`.
#[derive(Debug, Clone)]
pub struct Battery {
    /// Oplax transformations `β: H ⇒ K: b → C` between 2-functors into each
    /// admissible target `C`.
    pub transformations: Vec<OplaxNat>,
    /// The cylinder on `b`, whose crossing closes the battery.
    pub cylinder: Arc<Cylinder>,
}

impl Battery {
    pub fn len(&self) -> usize {
        self.transformations.len() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Every member, the crossing last.
    pub fn members(&self) -> impl Iterator<Item = &OplaxNat> {
        self.transformations.iter().chain(std::iter::once(&self.cylinder.crossing))
    }
}

pub fn beta_battery(b: &Arc<FiniteBicategory>, targets: &[Arc<FiniteBicategory>], bounds: &BatteryBounds) -> Result<Battery> {
    use crate::enumerate::{enumerate_2_functors, enumerate_oplax};
    use rayon::prelude::*;

    let cylinder = Arc::new(lax_cylinder(&Strict2Category::new(b.clone())?)?);
    let per_target: Vec<Vec<OplaxNat>> = targets
        .par_iter()
        .filter(|t| within(t, bounds))
        .map(|t| {
            let functors: Vec<Arc<LaxFunctor>> = enumerate_2_functors(b, t)
                .into_iter()
                .take(bounds.functors_per_target)
                .map(Arc::new)
                .collect();
            let mut out = Vec::new();
            for h in &functors {
                for k in &functors {
                    out.extend(enumerate_oplax(h, k, Some(bounds.per_pair)));
                }
            }
            out
        })
        .collect();
    Ok(Battery {
        transformations: per_target.into_iter().flatten().collect(),
        cylinder,
    })
}

/// Outcome of [`is_costrict`].
#[derive(Debug, Clone)]
pub enum Costrictness {
    /// Every component is an identity and interchange held against the
    /// whole battery.
    Costrict { battery_checked: usize },
    NotCostrict(Box<Refutation>),
    /// An icon failed interchange against this battery member. Never
    /// expected; reported rather than hidden.
    Contradiction { beta: Box<OplaxNat>, witness: InterchangeWitness },
}

impl Costrictness {
    pub fn is_costrict(&self) -> bool {
        matches!(self, Costrictness::Costrict { .. })
    }
}

/// Decides costrictness by the icon criterion and certifies the verdict:
/// a cylinder refutation when some component is not an identity, and a
/// full battery of passing interchanges otherwise.
pub fn is_costrict(alpha: &OplaxNat, targets: &[Arc<FiniteBicategory>], bounds: &BatteryBounds) -> Result<Costrictness> {
    certify_costrict(alpha, &beta_battery(alpha.ambient(), targets, bounds)?)
}

/// As [`is_costrict`] with a prebuilt battery on `α`'s target.
pub fn certify_costrict(alpha: &OplaxNat, battery: &Battery) -> Result<Costrictness> {
    let b = alpha.ambient();
    if !same_bicategory(b, &battery.cylinder.base) {
        return Err(StructureError::Boundary("the battery is built on another 2-category".into()));
    }
    if let Some(object) = alpha.source.source.objects().find(|&a| !b.is_unit(alpha.component(a))) {
        let r = refute_with(alpha, object, battery.cylinder.clone())?;
        return Ok(Costrictness::NotCostrict(Box::new(r)));
    }
    for beta in battery.members() {
        if let Interchange::Fails(witness) = interchange_check(beta, alpha)? {
            return Ok(Costrictness::Contradiction {
                beta: Box::new(beta.clone()),
                witness,
            });
        }
    }
    Ok(Costrictness::Costrict {
        battery_checked: battery.len(),
    })
}

fn same_bicategory(b: &Arc<FiniteBicategory>, base: &Strict2Category) -> bool {
    Arc::ptr_eq(b, base.bicategory()) || **b == **base.bicategory()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::build::*;
    use crate::cat::FiniteCategory;

    fn strict(b: FiniteBicategory) -> Strict2Category {
        Strict2Category::new(Arc::new(b)).unwrap()
    }

    fn walking_arrow() -> Strict2Category {
        strict(from_category(&FiniteCategory::ordinal(1)))
    }

    #[test]
    fn costrict_exactly_for_icons() {
        use crate::enumerate::{enumerate_2_functors, enumerate_oplax};
        use crate::oplax::classify_oplax;
        let b = crate::corpus::walking_two_cell();
        let targets = crate::corpus::strict_bicategories();
        let bounds = BatteryBounds::default();
        let functors: Vec<Arc<LaxFunctor>> = enumerate_2_functors(&crate::corpus::walking_arrow(), &b)
            .into_iter()
            .map(Arc::new)
            .collect();
        let (mut icons, mut others) = (0, 0);
        for f in &functors {
            for g in &functors {
                for alpha in enumerate_oplax(f, g, None) {
                    let verdict = is_costrict(&alpha, &targets, &bounds).unwrap();
                    assert_eq!(verdict.is_costrict(), classify_oplax(&alpha).icon);
                    match verdict {
                        Costrictness::Costrict { battery_checked } => {
                            assert!(battery_checked > 1);
                            icons += 1;
                        }
                        Costrictness::NotCostrict(r) => {
                            assert!(r.replay(&alpha).unwrap());
                            others += 1;
                        }
                        Costrictness::Contradiction { .. } => panic!("icon failed interchange"),
                    }
                }
            }
        }
        assert!(icons > 0 && others > 0);
    }

    #[test]
    fn terminal_cylinder_is_the_arrow() {
        let cyl = lax_cylinder(&strict(from_category(&FiniteCategory::terminal()))).unwrap();
        assert_eq!(cyl.total.num_objects(), 2);
        assert_eq!(cyl.total.all_one_cells().len(), 3);
        assert_eq!(cyl.total.all_two_cells().len(), 3);
        assert!(cyl.audit.is_congruence());
    }

    #[test]
    fn arrow_cross_hom_has_two_objects_and_the_crossing() {
        let cyl = lax_cylinder(&walking_arrow()).unwrap();
        let (x, y) = (ObjId(0), ObjId(1));
        let hom = cyl.cross_hom(x, y);
        assert_eq!(hom.objects.len(), 2);
        // two identities and the crossing
        assert_eq!(hom.num_classes(), 3);
        let g = cyl.base.find_one_cell(x, y, "0<1").unwrap();
        let cross = cyl.crossing_cell(g);
        let t = &cyl.total;
        assert!(!t.is_id2(cross));
        assert_ne!(t.src2(cross), t.tgt2(cross));
        assert_eq!(t.one_cell_name(t.src2(cross)), "(1,1_1)(!,1)(0,0<1)");
        assert_eq!(t.one_cell_name(t.tgt2(cross)), "(1,0<1)(!,0)(0,1_0)");
    }

    #[test]
    fn crossing_is_strict_exactly_at_identities() {
        let cyl = lax_cylinder(&strict(from_category(&FiniteCategory::ordinal(2)))).unwrap();
        for g in cyl.base.all_one_cells() {
            assert_eq!(cyl.total.is_id2(cyl.crossing_cell(g)), cyl.base.is_unit(g));
        }
    }

    #[test]
    fn normal_form_count_matches_factorizations() {
        let base = strict(from_category(&FiniteCategory::ordinal(2)));
        let cyl = lax_cylinder(&base).unwrap();
        for x in base.objects() {
            for y in base.objects() {
                let expected: usize = base
                    .objects()
                    .map(|w| base.one_cells(w, y).count() * base.one_cells(x, w).count())
                    .sum();
                assert_eq!(cyl.cross_hom(x, y).objects.len(), expected);
            }
        }
    }
}

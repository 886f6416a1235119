//! Exhaustive enumeration of lax functors, icons, and oplax
//! transformations between finite bicategories.
//!
//! Each enumerator is a constraint search whose checks are the single law
//! instances from [`crate::laxfun::laws`], [`crate::icon::laws`], and
//! [`crate::oplax::laws`], evaluated on partial assignments. Every result
//! is therefore valid by construction; the tests re-validate anyway.

use std::sync::Arc;

use crate::bicat::{FiniteBicategory, OneCell, TwoCell};
use crate::cat::{Functor, MorId, ObjId};
use crate::icon::{self, Icon};
use crate::laxfun::{self, LaxData, LaxFunctor, LaxKind};
use crate::oplax::{self, OplaxNat};
use crate::search::Search;

/// Where each piece of lax functor data sits in a search assignment.
struct LaxLayout {
    src: Arc<FiniteBicategory>,
    tgt: Arc<FiniteBicategory>,
    obj_var: Vec<usize>,
    /// `[A * n + B][f]`
    one_var: Vec<Vec<usize>>,
    two_var: Vec<Vec<usize>>,
    phi_var: Vec<usize>,
    phi0_var: Vec<usize>,
}

impl LaxLayout {
    fn new(src: Arc<FiniteBicategory>, tgt: Arc<FiniteBicategory>) -> Self {
        let n = src.num_objects();
        let mut next = 0;
        let mut take = || {
            next += 1;
            next - 1
        };
        let obj_var = (0..n).map(|_| take()).collect();
        let mut one_var = Vec::with_capacity(n * n);
        for a in src.objects() {
            for b in src.objects() {
                one_var.push(src.one_cells(a, b).map(|_| take()).collect());
            }
        }
        let mut two_var = Vec::with_capacity(n * n);
        for a in src.objects() {
            for b in src.objects() {
                two_var.push(src.two_cells(a, b).map(|_| take()).collect());
            }
        }
        let phi_var = (0..src.num_pairs()).map(|_| take()).collect();
        let phi0_var = (0..n).map(|_| take()).collect();
        LaxLayout {
            src,
            tgt,
            obj_var,
            one_var,
            two_var,
            phi_var,
            phi0_var,
        }
    }

    fn hom(&self, a: ObjId, b: ObjId) -> usize {
        a.0 * self.src.num_objects() + b.0
    }

    fn v1(&self, f: OneCell) -> usize {
        self.one_var[self.hom(f.source, f.target)][f.id.0]
    }

    fn v2(&self, c: TwoCell) -> usize {
        self.two_var[self.hom(c.source, c.target)][c.id.0]
    }

    fn vphi(&self, g: OneCell, f: OneCell) -> usize {
        self.phi_var[self.src.pair_index(g, f)]
    }

    fn view<'a>(&'a self, cur: &'a [usize]) -> LaxView<'a> {
        LaxView { layout: self, cur }
    }

    fn build(&self, cur: &[usize]) -> LaxFunctor {
        let (s, t) = (&self.src, &self.tgt);
        let v = self.view(cur);
        let obj_map: Vec<ObjId> = s.objects().map(|a| v.obj(a)).collect();
        let mut hom_maps = Vec::new();
        for a in s.objects() {
            for b in s.objects() {
                hom_maps.push(Functor {
                    source: s.hom(a, b).clone(),
                    target: t.hom(v.obj(a), v.obj(b)).clone(),
                    obj_map: s.one_cells(a, b).map(|f| v.map1(f).id).collect(),
                    mor_map: s.two_cells(a, b).map(|c| v.map2(c).id).collect(),
                });
            }
        }
        let comp = self.phi_var.iter().map(|&i| MorId(cur[i])).collect();
        let unit = self.phi0_var.iter().map(|&i| MorId(cur[i])).collect();
        LaxFunctor::new(s.clone(), t.clone(), obj_map, hom_maps, comp, unit)
            .expect("search assignments have the right shape")
    }
}

struct LaxView<'a> {
    layout: &'a LaxLayout,
    cur: &'a [usize],
}

impl LaxData for LaxView<'_> {
    fn obj(&self, a: ObjId) -> ObjId {
        ObjId(self.cur[self.layout.obj_var[a.0]])
    }
    fn map1(&self, f: OneCell) -> OneCell {
        OneCell::new(self.obj(f.source), self.obj(f.target), ObjId(self.cur[self.layout.v1(f)]))
    }
    fn map2(&self, c: TwoCell) -> TwoCell {
        TwoCell::new(self.obj(c.source), self.obj(c.target), MorId(self.cur[self.layout.v2(c)]))
    }
    fn phi(&self, g: OneCell, f: OneCell) -> TwoCell {
        TwoCell::new(self.obj(f.source), self.obj(g.target), MorId(self.cur[self.layout.vphi(g, f)]))
    }
    fn phi0(&self, a: ObjId) -> TwoCell {
        TwoCell::new(self.obj(a), self.obj(a), MorId(self.cur[self.layout.phi0_var[a.0]]))
    }
}

/// Options for [`enumerate_lax_functors`].
#[derive(Debug, Clone, Default)]
pub struct LaxQuery {
    /// Only functors at least this strict; `None` means all lax functors.
    pub bound: Option<LaxKind>,
    /// Fix the object map.
    pub obj_map: Option<Vec<ObjId>>,
    /// Stop after this many results.
    pub limit: Option<usize>,
}

impl LaxQuery {
    pub fn at_least(kind: LaxKind) -> Self {
        LaxQuery {
            bound: Some(kind),
            ..Default::default()
        }
    }
}

/// Which constraint cells a strictness bound admits.
fn admits(t: &FiniteBicategory, c: TwoCell, want_identity: bool, want_iso: bool) -> bool {
    if want_identity {
        t.is_id2(c)
    } else if want_iso {
        t.is_iso2(c)
    } else {
        true
    }
}

/// Every lax functor `s → t` within the query's bound, in canonical order
/// (lexicographic in objects, 1-cells, 2-cells, then constraints).
pub fn enumerate_lax_functors(s: &Arc<FiniteBicategory>, t: &Arc<FiniteBicategory>, q: &LaxQuery) -> Vec<LaxFunctor> {
    let lay = Arc::new(LaxLayout::new(s.clone(), t.clone()));
    let kind = q.bound.unwrap_or(LaxKind::Lax);
    let phi_id = kind <= LaxKind::Strict;
    let phi0_id = kind <= LaxKind::NormalHomomorphism;
    let phi_iso = kind <= LaxKind::Homomorphism;

    let mut search = Search::new();
    for a in s.objects() {
        match &q.obj_map {
            Some(m) => {
                let x = m[a.0].0;
                search.var(move |_| vec![x])
            }
            None => search.range_var(t.num_objects()),
        };
    }
    for a in s.objects() {
        for b in s.objects() {
            for _f in s.one_cells(a, b) {
                let l = lay.clone();
                search.var(move |cur| {
                    let v = l.view(cur);
                    l.tgt.one_cells(v.obj(a), v.obj(b)).map(|c| c.id.0).collect()
                });
            }
        }
    }
    for a in s.objects() {
        for b in s.objects() {
            for rho in s.two_cells(a, b) {
                let l = lay.clone();
                search.var(move |cur| {
                    let v = l.view(cur);
                    let (x, y) = (v.map1(l.src.src2(rho)), v.map1(l.src.tgt2(rho)));
                    if l.src.is_id2(rho) {
                        if x == y {
                            vec![l.tgt.id2(x).id.0]
                        } else {
                            Vec::new()
                        }
                    } else {
                        l.tgt.cells_between(x, y).map(|c| c.id.0).collect()
                    }
                });
            }
            // functoriality of F_{A,B}
            let hom = s.hom(a, b).clone();
            for (sig, rho) in hom.composable_pairs() {
                let tau = hom.comp(sig, rho);
                let cell = move |m: MorId| TwoCell::new(a, b, m);
                let deps = [lay.v2(cell(sig)), lay.v2(cell(rho)), lay.v2(cell(tau))];
                let l = lay.clone();
                search.check(&deps, move |cur| {
                    let v = l.view(cur);
                    l.tgt.vc(v.map2(cell(sig)), v.map2(cell(rho))) == v.map2(cell(tau))
                });
            }
        }
    }
    for (g, f) in s.composable_pairs() {
        let l = lay.clone();
        search.var(move |cur| {
            let v = l.view(cur);
            let from = l.tgt.compose1(v.map1(g), v.map1(f));
            let to = v.map1(l.src.compose1(g, f));
            l.tgt
                .cells_between(from, to)
                .filter(|&c| admits(&l.tgt, c, phi_id, phi_iso))
                .map(|c| c.id.0)
                .collect()
        });
    }
    for a in s.objects() {
        let l = lay.clone();
        search.var(move |cur| {
            let v = l.view(cur);
            let from = l.tgt.unit_cell(v.obj(a));
            let to = v.map1(l.src.unit_cell(a));
            l.tgt
                .cells_between(from, to)
                .filter(|&c| admits(&l.tgt, c, phi0_id, phi_iso))
                .map(|c| c.id.0)
                .collect()
        });
    }

    for (g, f) in s.composable_pairs() {
        for rho in s.two_cells(f.source, f.target).filter(|&r| s.src2(r) == f) {
            let deps = [lay.vphi(g, f), lay.vphi(g, s.tgt2(rho))];
            let l = lay.clone();
            search.check(&deps, move |cur| {
                laxfun::laws::phi_natural_right(&l.src, &l.tgt, &l.view(cur), g, rho)
            });
        }
        for sigma in s.two_cells(g.source, g.target).filter(|&c| s.src2(c) == g) {
            let deps = [lay.vphi(g, f), lay.vphi(s.tgt2(sigma), f)];
            let l = lay.clone();
            search.check(&deps, move |cur| {
                laxfun::laws::phi_natural_left(&l.src, &l.tgt, &l.view(cur), sigma, f)
            });
        }
    }
    for (h, g, f) in s.composable_triples() {
        let deps = [
            lay.vphi(g, f),
            lay.vphi(h, s.compose1(g, f)),
            lay.vphi(h, g),
            lay.vphi(s.compose1(h, g), f),
        ];
        let l = lay.clone();
        search.check(&deps, move |cur| {
            laxfun::laws::associativity(&l.src, &l.tgt, &l.view(cur), h, g, f)
        });
    }
    for f in s.all_one_cells() {
        let deps = [lay.phi0_var[f.target.0], lay.vphi(s.unit_cell(f.target), f)];
        let l = lay.clone();
        search.check(&deps, move |cur| laxfun::laws::left_unit(&l.src, &l.tgt, &l.view(cur), f));
        let deps = [lay.phi0_var[f.source.0], lay.vphi(f, s.unit_cell(f.source))];
        let l = lay.clone();
        search.check(&deps, move |cur| laxfun::laws::right_unit(&l.src, &l.tgt, &l.view(cur), f));
    }

    search.solve(q.limit).into_iter().map(|cur| lay.build(&cur)).collect()
}

/// Every 2-functor `s → t`.
pub fn enumerate_2_functors(s: &Arc<FiniteBicategory>, t: &Arc<FiniteBicategory>) -> Vec<LaxFunctor> {
    enumerate_lax_functors(s, t, &LaxQuery::at_least(LaxKind::Strict))
}

/// Position of each 1-cell of `s` in `s.all_one_cells()`.
fn one_cell_slots(s: &FiniteBicategory) -> Vec<Vec<usize>> {
    let n = s.num_objects();
    let mut slots = vec![Vec::new(); n * n];
    for (i, f) in s.all_one_cells().into_iter().enumerate() {
        let h = f.source.0 * n + f.target.0;
        if slots[h].len() <= f.id.0 {
            slots[h].resize(f.id.0 + 1, usize::MAX);
        }
        slots[h][f.id.0] = i;
    }
    slots
}

/// Every icon `f ⇒ g`, in lexicographic order of components. Empty when
/// the object maps differ.
pub fn enumerate_icons(f: &Arc<LaxFunctor>, g: &Arc<LaxFunctor>, limit: Option<usize>) -> Vec<Icon> {
    if !f.is_parallel_to(g) || f.obj_map != g.obj_map {
        return Vec::new();
    }
    let s = f.source.clone();
    let t = f.target.clone();
    let n = s.num_objects();
    let slots = Arc::new(one_cell_slots(&s));
    let slot = move |x: OneCell| slots[x.source.0 * n + x.target.0][x.id.0];
    let mut search = Search::new();
    for x in s.all_one_cells() {
        let cells: Vec<usize> = t.cells_between(f.map1(x), g.map1(x)).map(|c| c.id.0).collect();
        search.var(move |_| cells.clone());
    }
    let alpha_at = {
        let slot = slot.clone();
        move |cur: &[usize], x: OneCell, fa: ObjId, fb: ObjId| TwoCell::new(fa, fb, MorId(cur[slot(x)]))
    };
    for rho in s.all_two_cells() {
        let deps = [slot(s.src2(rho)), slot(s.tgt2(rho))];
        let (s2, t2, f2, g2) = (s.clone(), t.clone(), f.clone(), g.clone());
        let at = alpha_at.clone();
        search.check(&deps, move |cur| {
            let alpha = |x: OneCell| at(cur, x, f2.obj(x.source), f2.obj(x.target));
            icon::laws::naturality(&s2, &t2, &*f2, &*g2, &alpha, rho)
        });
    }
    for (y, x) in s.composable_pairs() {
        let deps = [slot(y), slot(x), slot(s.compose1(y, x))];
        let (s2, t2, f2, g2) = (s.clone(), t.clone(), f.clone(), g.clone());
        let at = alpha_at.clone();
        search.check(&deps, move |cur| {
            let alpha = |x: OneCell| at(cur, x, f2.obj(x.source), f2.obj(x.target));
            icon::laws::icon1(&s2, &t2, &*f2, &*g2, &alpha, y, x)
        });
    }
    for a in s.objects() {
        let deps = [slot(s.unit_cell(a))];
        let (s2, t2, f2, g2) = (s.clone(), t.clone(), f.clone(), g.clone());
        let at = alpha_at.clone();
        search.check(&deps, move |cur| {
            let alpha = |x: OneCell| at(cur, x, f2.obj(x.source), f2.obj(x.target));
            icon::laws::icon2(&s2, &t2, &*f2, &*g2, &alpha, a)
        });
    }
    let cells = s.all_one_cells();
    search
        .solve(limit)
        .into_iter()
        .map(|cur| {
            Icon::from_fn(f.clone(), g.clone(), |x| {
                let i = cells.iter().position(|&c| c == x).expect("1-cell of the source");
                TwoCell::new(f.obj(x.source), f.obj(x.target), MorId(cur[i]))
            })
        })
        .collect()
}

/// Every oplax transformation `f ⇒ g`: components first (one per object),
/// then constraints (one per 1-cell), lexicographically.
pub fn enumerate_oplax(f: &Arc<LaxFunctor>, g: &Arc<LaxFunctor>, limit: Option<usize>) -> Vec<OplaxNat> {
    if !f.is_parallel_to(g) {
        return Vec::new();
    }
    let s = f.source.clone();
    let t = f.target.clone();
    let n = s.num_objects();
    let slots = Arc::new(one_cell_slots(&s));
    let cons_var = move |x: OneCell| n + slots[x.source.0 * n + x.target.0][x.id.0];

    let mut search = Search::new();
    for a in s.objects() {
        let ids: Vec<usize> = t.one_cells(f.obj(a), g.obj(a)).map(|c| c.id.0).collect();
        search.var(move |_| ids.clone());
    }
    let comp_of = {
        let (f, g) = (f.clone(), g.clone());
        move |cur: &[usize], a: ObjId| OneCell::new(f.obj(a), g.obj(a), ObjId(cur[a.0]))
    };
    for x in s.all_one_cells() {
        let (t2, f2, g2) = (t.clone(), f.clone(), g.clone());
        let co = comp_of.clone();
        search.var(move |cur| {
            let (ua, ub) = (co(cur, x.source), co(cur, x.target));
            let from = t2.compose1(ub, f2.map1(x));
            let to = t2.compose1(g2.map1(x), ua);
            t2.cells_between(from, to).map(|c| c.id.0).collect()
        });
    }
    let constraint_of = {
        let (f, g) = (f.clone(), g.clone());
        let cv = cons_var.clone();
        move |cur: &[usize], x: OneCell| TwoCell::new(f.obj(x.source), g.obj(x.target), MorId(cur[cv(x)]))
    };
    macro_rules! law_check {
        ($deps:expr, |$s:ident, $t:ident, $f:ident, $g:ident, $comp:ident, $cons:ident| $body:expr) => {{
            let (s2, t2, f2, g2) = (s.clone(), t.clone(), f.clone(), g.clone());
            let (co, cn) = (comp_of.clone(), constraint_of.clone());
            search.check(&$deps, move |cur| {
                let $comp = |a: ObjId| co(cur, a);
                let $cons = |x: OneCell| cn(cur, x);
                let ($s, $t, $f, $g) = (&*s2, &*t2, &*f2, &*g2);
                $body
            });
        }};
    }
    for rho in s.all_two_cells() {
        let deps = [cons_var(s.src2(rho)), cons_var(s.tgt2(rho))];
        law_check!(deps, |s, t, f, g, comp, cons| oplax::laws::on0(s, t, f, g, &comp, &cons, rho));
    }
    for (y, x) in s.composable_pairs() {
        let deps = [cons_var(y), cons_var(x), cons_var(s.compose1(y, x))];
        law_check!(deps, |s, t, f, g, comp, cons| oplax::laws::on1(s, t, f, g, &comp, &cons, y, x));
    }
    for a in s.objects() {
        let deps = [cons_var(s.unit_cell(a))];
        law_check!(deps, |s, t, f, g, comp, cons| oplax::laws::on2(s, t, f, g, &comp, &cons, a));
    }
    search
        .solve(limit)
        .into_iter()
        .map(|cur| {
            let components = s.objects().map(|a| comp_of(&cur, a)).collect();
            OplaxNat::from_fn(f.clone(), g.clone(), components, |x| constraint_of(&cur, x))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::build::*;
    use crate::cat::FiniteCategory;
    use crate::icon::validate_icon;
    use crate::laxfun::{classify, identity_lax, validate_lax_functor};
    use crate::oplax::validate_oplax;

    fn arrow() -> Arc<FiniteBicategory> {
        Arc::new(from_category(&FiniteCategory::ordinal(1)))
    }

    fn cocycle() -> Arc<FiniteBicategory> {
        let z2 = FiniteGroup::cyclic(2);
        Arc::new(cocycle_bicategory(&z2, &z2, &z2_nontrivial_cocycle()).unwrap())
    }

    #[test]
    fn functors_between_locally_discrete_are_functors() {
        // functors [1] → [2] are monotone maps: 6 of them
        let two = Arc::new(from_category(&FiniteCategory::ordinal(2)));
        let all = enumerate_lax_functors(&arrow(), &two, &LaxQuery::default());
        assert_eq!(all.len(), 6);
        for f in &all {
            assert!(validate_lax_functor(f).unwrap().is_ok());
            assert_eq!(classify(f).kind, LaxKind::Strict);
        }
    }

    #[test]
    fn endofunctors_of_the_cocycle_bicategory() {
        let b = cocycle();
        let all = enumerate_lax_functors(&b, &b, &LaxQuery::default());
        assert!(all.contains(&identity_lax(b.clone())));
        for f in &all {
            assert!(validate_lax_functor(f).unwrap().is_ok(), "{:?}", f);
        }
        let strict = enumerate_2_functors(&b, &b);
        assert!(strict.iter().all(|f| classify(f).kind == LaxKind::Strict));
        assert!(strict.len() < all.len());
    }

    #[test]
    fn icons_and_oplax_validate() {
        let b = cocycle();
        let all: Vec<Arc<LaxFunctor>> = enumerate_lax_functors(&b, &b, &LaxQuery::default())
            .into_iter()
            .map(Arc::new)
            .collect();
        let mut icons = 0;
        for f in &all {
            for g in &all {
                for a in enumerate_icons(f, g, None) {
                    assert!(validate_icon(&a).unwrap().is_ok());
                    icons += 1;
                }
                for u in enumerate_oplax(f, g, Some(20)) {
                    assert!(validate_oplax(&u).unwrap().is_ok());
                }
            }
        }
        assert!(icons >= all.len());
    }

    #[test]
    fn search_agrees_with_filtering_every_candidate() {
        // brute force: every assignment of cells, kept when it validates
        let b = cocycle();
        let f = Arc::new(identity_lax(b.clone()));
        let found = enumerate_icons(&f, &f, None);
        let mut brute = 0;
        let cells = b.all_one_cells();
        let per: Vec<Vec<TwoCell>> = cells.iter().map(|&x| b.cells_between(x, x).collect()).collect();
        let total: usize = per.iter().map(|p| p.len()).product();
        for mut k in 0..total {
            let mut pick = Vec::new();
            for p in &per {
                pick.push(p[k % p.len()]);
                k /= p.len();
            }
            let a = Icon::from_fn(f.clone(), f.clone(), |x| pick[cells.iter().position(|&c| c == x).unwrap()]);
            if validate_icon(&a).unwrap().is_ok() {
                brute += 1;
            }
        }
        assert_eq!(found.len(), brute);
    }
}

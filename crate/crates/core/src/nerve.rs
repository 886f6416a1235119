//! The 2-nerve: normal homomorphisms `[n] → B` and icons between them,
//! arranged as a truncated simplicial object in categories.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::bicat::{FiniteBicategory, OneCell, TwoCell};
use crate::cat::{FiniteCategory, Functor, MorId, Morphism, ObjId};
use crate::corpus;
use crate::enumerate::{enumerate_icons, enumerate_lax_functors, LaxQuery};
use crate::error::{Result, StructureError};
use crate::icon::{identity_icon, vcomp_icons, whisker_right_icon, Icon};
use crate::laxfun::{compose_lax, LaxFunctor, LaxKind};

/// Largest supported truncation.
pub const MAX_LEVEL: usize = 4;

/// `[n]` as a locally discrete bicategory.
pub fn ordinal_as_bicategory(n: usize) -> Arc<FiniteBicategory> {
    corpus::ordinal(n)
}

/// An `n`-simplex: a normal homomorphism `[n] → B`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Simplex(pub Arc<LaxFunctor>);

impl Simplex {
    pub fn dim(&self) -> usize {
        self.0.source.num_objects() - 1
    }

    pub fn vertex(&self, i: usize) -> ObjId {
        self.0.obj(ObjId(i))
    }

    fn arrow(&self, i: usize, j: usize) -> OneCell {
        let s = &self.0.source;
        s.one_cells(ObjId(i), ObjId(j)).next().expect("i <= j in an ordinal")
    }

    /// `f_{ji}: B_i → B_j` for `i ≤ j`.
    pub fn edge(&self, i: usize, j: usize) -> OneCell {
        self.0.map1(self.arrow(i, j))
    }

    /// `φ_{kji}: f_{kj}∘f_{ji} ⇒ f_{ki}`.
    pub fn phi(&self, i: usize, j: usize, k: usize) -> TwoCell {
        self.0.phi(self.arrow(j, k), self.arrow(i, j))
    }

    /// Vertices and generating edges, e.g. `X -f-> Y -g-> Z`.
    pub fn describe(&self) -> String {
        let b = &self.0.target;
        let mut out = b.object_name(self.vertex(0)).to_string();
        for i in 1..=self.dim() {
            out.push_str(&format!(
                " -{}-> {}",
                b.one_cell_name(self.edge(i - 1, i)),
                b.object_name(self.vertex(i))
            ));
        }
        out
    }
}

/// The strict functor `J(θ): [m] → [n]` of a monotone map.
pub fn ordinal_map(theta: &[usize], n: usize) -> Result<LaxFunctor> {
    if theta.windows(2).any(|w| w[0] > w[1]) || theta.iter().any(|&x| x > n) || theta.is_empty() {
        return Err(StructureError::Invalid(format!("{theta:?} is not a monotone map into [{n}]")));
    }
    let (src, tgt) = (ordinal_as_bicategory(theta.len() - 1), ordinal_as_bicategory(n));
    let obj = |a: ObjId| ObjId(theta[a.0]);
    let t2 = tgt.clone();
    let on_one = move |f: OneCell| t2.one_cells(obj(f.source), obj(f.target)).next().expect("monotone");
    let on_one2 = on_one.clone();
    let t3 = tgt.clone();
    LaxFunctor::strict(
        src.clone(),
        tgt,
        src.objects().map(obj).collect(),
        on_one,
        move |c: TwoCell| t3.id2(on_one2(OneCell::new(c.source, c.target, ObjId(0)))),
    )
}

/// Coface `δ_i: [n-1] → [n]`, skipping `i`.
pub fn coface(n: usize, i: usize) -> Vec<usize> {
    (0..n).map(|x| if x < i { x } else { x + 1 }).collect()
}

/// Codegeneracy `σ_i: [n+1] → [n]`, repeating `i`.
pub fn codegeneracy(n: usize, i: usize) -> Vec<usize> {
    (0..=n + 1).map(|x| if x <= i { x } else { x - 1 }).collect()
}

/// Every `n`-simplex of `b`, in canonical order.
pub fn enumerate_simplices(n: usize, b: &Arc<FiniteBicategory>) -> Vec<Simplex> {
    enumerate_lax_functors(&ordinal_as_bicategory(n), b, &LaxQuery::at_least(LaxKind::NormalHomomorphism))
        .into_iter()
        .map(|f| Simplex(Arc::new(f)))
        .collect()
}

/// Every icon `s ⇒ t`.
pub fn enumerate_nerve_morphisms(s: &Simplex, t: &Simplex) -> Vec<Icon> {
    enumerate_icons(&s.0, &t.0, None)
}

/// One level of the nerve: simplices, icons, and the category they form.
#[derive(Debug, Clone)]
pub struct NerveLevel {
    pub n: usize,
    pub simplices: Vec<Simplex>,
    /// Icons with their source and target simplex indices.
    pub icons: Vec<(usize, usize, Icon)>,
    pub category: Arc<FiniteCategory>,
    simplex_index: HashMap<Vec<usize>, usize>,
    icon_index: HashMap<(usize, usize, Vec<usize>), usize>,
}

impl NerveLevel {
    fn build(n: usize, b: &Arc<FiniteBicategory>) -> Result<Self> {
        let simplices = enumerate_simplices(n, b);
        let simplex_index: HashMap<Vec<usize>, usize> = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| (s.0.table_key(), i))
            .collect();
        let mut icons = Vec::new();
        for (i, s) in simplices.iter().enumerate() {
            for (j, t) in simplices.iter().enumerate() {
                for a in enumerate_nerve_morphisms(s, t) {
                    icons.push((i, j, a));
                }
            }
        }
        let icon_key = |a: &Icon| a.components.iter().flatten().map(|m| m.0).collect::<Vec<_>>();
        let icon_index: HashMap<(usize, usize, Vec<usize>), usize> = icons
            .iter()
            .enumerate()
            .map(|(k, (i, j, a))| ((*i, *j, icon_key(a)), k))
            .collect();
        let objects = (0..simplices.len()).map(|i| format!("s{i}")).collect();
        let morphisms = icons
            .iter()
            .enumerate()
            .map(|(k, (i, j, _))| Morphism {
                name: format!("i{k}"),
                source: ObjId(*i),
                target: ObjId(*j),
            })
            .collect();
        let find = |i: usize, j: usize, a: &Icon| -> Result<MorId> {
            icon_index
                .get(&(i, j, icon_key(a)))
                .map(|&k| MorId(k))
                .ok_or_else(|| StructureError::Invalid(format!("icon between s{i} and s{j} is not enumerated")))
        };
        let identity = simplices
            .iter()
            .enumerate()
            .map(|(i, s)| find(i, i, &identity_icon(s.0.clone())))
            .collect::<Result<Vec<_>>>()?;
        let mut composites = HashMap::new();
        for (k1, (i, j, a)) in icons.iter().enumerate() {
            for (k2, (j2, l, c)) in icons.iter().enumerate() {
                if j == j2 {
                    composites.insert((MorId(k1), MorId(k2)), find(*i, *l, &vcomp_icons(c, a)?)?);
                }
            }
        }
        let category = Arc::new(FiniteCategory::from_tables(objects, morphisms, identity, composites)?);
        Ok(NerveLevel {
            n,
            simplices,
            icons,
            category,
            simplex_index,
            icon_index,
        })
    }

    pub fn find_simplex(&self, f: &LaxFunctor) -> Option<usize> {
        self.simplex_index.get(&f.table_key()).copied()
    }

    pub fn find_icon(&self, source: usize, target: usize, a: &Icon) -> Option<usize> {
        let key = a.components.iter().flatten().map(|m| m.0).collect::<Vec<_>>();
        self.icon_index.get(&(source, target, key)).copied()
    }
}

/// Levels `0..=t` of the 2-nerve with their face and degeneracy functors.
#[derive(Debug, Clone)]
pub struct TruncatedSimplicialCategory {
    pub base: Arc<FiniteBicategory>,
    pub levels: Vec<NerveLevel>,
    /// `faces[n][i]`: level `n` → level `n-1` (empty for `n = 0`).
    pub faces: Vec<Vec<Functor>>,
    /// `degeneracies[n][i]`: level `n` → level `n+1`, for `n < t`.
    pub degeneracies: Vec<Vec<Functor>>,
}

impl TruncatedSimplicialCategory {
    pub fn truncation(&self) -> usize {
        self.levels.len() - 1
    }

    /// The functor level `n` → level `m` induced by `θ: [m] → [n]`.
    pub fn induced(&self, theta: &[usize], n: usize) -> Result<Functor> {
        induced(&self.levels, theta, n)
    }
}

fn induced(levels: &[NerveLevel], theta: &[usize], n: usize) -> Result<Functor> {
    let m = theta.len() - 1;
    let j = ordinal_map(theta, n)?;
    let (from, to) = (&levels[n], &levels[m]);
    let obj_map = from
        .simplices
        .iter()
        .map(|s| {
            let f = compose_lax(&s.0, &j)?;
            to.find_simplex(&f)
                .map(ObjId)
                .ok_or_else(|| StructureError::Invalid(format!("precomposite of {} is not a simplex", s.describe())))
        })
        .collect::<Result<Vec<_>>>()?;
    let mor_map = from
        .icons
        .iter()
        .map(|(i, k, a)| {
            let w = whisker_right_icon(a, &j)?;
            to.find_icon(obj_map[*i].0, obj_map[*k].0, &w)
                .map(MorId)
                .ok_or_else(|| StructureError::Invalid("whiskered icon is not enumerated".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Functor {
        source: from.category.clone(),
        target: to.category.clone(),
        obj_map,
        mor_map,
    })
}

/// Computes levels `0..=t` and every face and degeneracy between them.
pub fn two_nerve(b: &Arc<FiniteBicategory>, t: usize) -> Result<TruncatedSimplicialCategory> {
    if t > MAX_LEVEL {
        return Err(StructureError::UnsupportedSetting(format!("truncation {t} exceeds {MAX_LEVEL}")));
    }
    let levels = (0..=t).into_par_iter().map(|n| NerveLevel::build(n, b)).collect::<Result<Vec<_>>>()?;
    let mut faces = vec![Vec::new()];
    for n in 1..=t {
        faces.push((0..=n).map(|i| induced(&levels, &coface(n, i), n)).collect::<Result<Vec<_>>>()?);
    }
    let mut degeneracies = Vec::new();
    for n in 0..t {
        degeneracies.push((0..=n).map(|i| induced(&levels, &codegeneracy(n, i), n)).collect::<Result<Vec<_>>>()?);
    }
    Ok(TruncatedSimplicialCategory {
        base: b.clone(),
        levels,
        faces,
        degeneracies,
    })
}

/// One failed simplicial identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityFailure {
    pub identity: String,
    pub level: usize,
}

fn same_functor(a: &Functor, b: &Functor) -> bool {
    a.obj_map == b.obj_map && a.mor_map == b.mor_map
}

/// Checks every simplicial identity available within the truncation and
/// returns the number checked and the failures.
pub fn check_simplicial_identities(x: &TruncatedSimplicialCategory) -> Result<(usize, Vec<IdentityFailure>)> {
    let t = x.truncation();
    let d = |n: usize, i: usize| &x.faces[n][i];
    let s = |n: usize, i: usize| &x.degeneracies[n][i];
    let mut checked = 0;
    let mut failures = Vec::new();
    let mut expect = |lhs: Functor, rhs: &Functor, name: String, level: usize| {
        checked += 1;
        if !same_functor(&lhs, rhs) {
            failures.push(IdentityFailure { identity: name, level });
        }
    };
    // d_i d_j = d_{j-1} d_i for i < j, from level n
    for n in 2..=t {
        for j in 0..=n {
            for i in 0..j {
                expect(d(n - 1, i).after(d(n, j))?, &d(n - 1, j - 1).after(d(n, i))?, format!("d{i} d{j} = d{} d{i}", j - 1), n);
            }
        }
    }
    // s_i s_j = s_{j+1} s_i for i <= j, from level n
    for n in 0..t.saturating_sub(1) {
        for j in 0..=n {
            for i in 0..=j {
                expect(s(n + 1, i).after(s(n, j))?, &s(n + 1, j + 1).after(s(n, i))?, format!("s{i} s{j} = s{} s{i}", j + 1), n);
            }
        }
    }
    // mixed identities, from level n through level n+1
    for n in 0..t {
        for j in 0..=n {
            for i in 0..=n + 1 {
                let lhs = d(n + 1, i).after(s(n, j))?;
                if i < j {
                    expect(lhs, &s(n - 1, j - 1).after(d(n, i))?, format!("d{i} s{j} = s{} d{i}", j - 1), n);
                } else if i == j || i == j + 1 {
                    let id = Functor::identity(x.levels[n].category.clone());
                    expect(lhs, &id, format!("d{i} s{j} = 1"), n);
                } else {
                    expect(lhs, &s(n - 1, j).after(d(n, i - 1))?, format!("d{i} s{j} = s{j} d{}", i - 1), n);
                }
            }
        }
    }
    Ok((checked, failures))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::icon::validate_icon;
    use crate::laxfun::{classify, validate_lax_functor};

    #[test]
    fn ordinals() {
        assert_eq!(ordinal_as_bicategory(0).num_objects(), 1);
        let two = ordinal_as_bicategory(2);
        assert_eq!(two.num_objects(), 3);
        assert_eq!(two.all_one_cells().len(), 6);
    }

    #[test]
    fn low_levels_count_objects_and_one_cells() {
        let b = corpus::walking_two_cell();
        assert_eq!(enumerate_simplices(0, &b).len(), b.num_objects());
        assert_eq!(enumerate_simplices(1, &b).len(), b.all_one_cells().len());
        for s in enumerate_simplices(2, &b) {
            assert!(validate_lax_functor(&s.0).unwrap().is_ok());
            assert!(classify(&s.0).at_least(LaxKind::NormalHomomorphism));
        }
    }

    #[test]
    fn one_simplex_icons_are_two_cells() {
        let b = corpus::walking_two_cell();
        let ones = enumerate_simplices(1, &b);
        for s in &ones {
            for t in &ones {
                let icons = enumerate_nerve_morphisms(s, t);
                let (f, g) = (s.edge(0, 1), t.edge(0, 1));
                let expected = if f.source == g.source && f.target == g.target {
                    b.cells_between(f, g).count()
                } else {
                    0
                };
                assert_eq!(icons.len(), expected);
                for a in icons {
                    assert!(validate_icon(&a).unwrap().is_ok());
                }
            }
        }
    }

    #[test]
    fn cocycle_two_simplices() {
        // |G|² · |A|
        assert_eq!(enumerate_simplices(2, &corpus::z2_cocycle()).len(), 8);
    }

    #[test]
    fn simplicial_identities_hold() {
        for b in [corpus::walking_two_cell(), corpus::z2_cocycle()] {
            let x = two_nerve(&b, 3).unwrap();
            let (checked, failures) = check_simplicial_identities(&x).unwrap();
            assert!(checked > 20);
            assert!(failures.is_empty(), "{failures:?}");
        }
    }

    #[test]
    fn matches_classical_nerve() {
        let c = crate::cat::FiniteCategory::ordinal(2);
        let b = Arc::new(crate::bicat::build::from_category(&c));
        let x = two_nerve(&b, 3).unwrap();
        let cmp = crate::oracle::compare_with_classical_nerve(&c, &x);
        assert_eq!(cmp.levels_compared, 4);
        assert!(cmp.agrees(), "{:?}", cmp.mismatches);
    }

    #[test]
    fn strict_two_simplices_match_direct_count() {
        for b in corpus::strict_bicategories() {
            assert_eq!(
                enumerate_simplices(2, &b).len(),
                crate::oracle::count_two_simplices_strict(&b),
                "{}",
                b.name()
            );
        }
    }

    #[test]
    fn level_one_is_the_disjoint_union_of_homs() {
        for b in corpus::strict_bicategories() {
            let x = two_nerve(&b, 1).unwrap();
            let one = &x.levels[1].category;
            assert_eq!(one.num_objects(), b.all_one_cells().len());
            assert_eq!(one.num_morphisms(), b.all_two_cells().len());
            let zero = &x.levels[0].category;
            assert_eq!((zero.num_objects(), zero.num_morphisms()), (b.num_objects(), b.num_objects()));
        }
    }

    #[test]
    fn terminal_levels_are_terminal() {
        let x = two_nerve(&corpus::terminal(), 4).unwrap();
        for level in &x.levels {
            assert_eq!((level.category.num_objects(), level.category.num_morphisms()), (1, 1));
        }
    }

    #[test]
    fn ordinal_inclusion_is_fully_faithful_at_small_sizes() {
        fn binomial(n: usize, k: usize) -> usize {
            (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
        }
        for m in 0..=2 {
            for n in 0..=2 {
                let (s, t) = (ordinal_as_bicategory(m), ordinal_as_bicategory(n));
                let homs: Vec<Arc<LaxFunctor>> = enumerate_lax_functors(&s, &t, &LaxQuery::at_least(LaxKind::NormalHomomorphism))
                    .into_iter()
                    .map(Arc::new)
                    .collect();
                // monotone maps [m] → [n]
                assert_eq!(homs.len(), binomial(n + m + 1, m + 1));
                for f in &homs {
                    for g in &homs {
                        let expected = usize::from(f == g);
                        assert_eq!(enumerate_icons(f, g, None).len(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn induced_maps_compose() {
        let x = two_nerve(&corpus::walking_two_cell(), 2).unwrap();
        // δ_1 ∘ δ_0: [0] → [1] → [2] picks out vertex 2
        let d1 = x.induced(&coface(2, 1), 2).unwrap();
        let d0 = x.induced(&coface(1, 0), 1).unwrap();
        let composite = x.induced(&[2], 2).unwrap();
        assert!(same_functor(&d0.after(&d1).unwrap(), &composite));
    }
}

//! The acceptance criteria as runnable checks. The acceptance test target
//! and `corpus run-all` both drive this module.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::bicat::{validate_bicategory, FiniteBicategory, Strict2Category};
use crate::cat::{FiniteCategory, MorId, ObjId};
use crate::corpus;
use crate::cylinder::{beta_battery, certify_costrict, lax_cylinder, Battery, BatteryBounds, Costrictness};
use crate::enumerate::{enumerate_2_functors, enumerate_icons, enumerate_lax_functors, enumerate_oplax, LaxQuery};
use crate::error::Result;
use crate::icon::{identity_icon, is_invertible_icon, validate_icon, vcomp_icons, whiskered_components, Icon};
use crate::internal::{is_equivalence_in_bicat2, is_fibration, is_p_cartesian, CartesianQuery, FibrationVerdict};
use crate::laxfun::{compose_lax, identity_lax, LaxFunctor};
use crate::monoidal::{
    enumerate_monoidal_functors, enumerate_monoidal_transformations, identity_monoidal, monoidal_to_icon,
    sigma_functor, vcomp_monoidal, MonoidalCategory,
};
use crate::nerve::{check_simplicial_identities, enumerate_simplices, two_nerve, MAX_LEVEL};
use crate::oplax::{
    classify_oplax, icon_as_oplax, strictness_by_witness, validate_oplax, vcomp_oplax, OplaxNat,
};
use crate::oracle;
use crate::report::Law;

/// Failures listed per criterion before truncation.
const MAX_LISTED: usize = 20;

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub number: usize,
    pub title: &'static str,
    pub passed: bool,
    pub summary: String,
    pub failures: Vec<String>,
    pub elapsed: Duration,
}

impl fmt::Display for CriterionOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] criterion {:>2} {}: {}", self.number, self.title, self.summary)?;
        for w in &self.failures {
            write!(f, "\n         - {w}")?;
        }
        Ok(())
    }
}

pub const TITLES: [&str; 10] = [
    "coherence suite",
    "icon laws",
    "first-problem witness",
    "monoidal embedding",
    "invertibility and equivalence",
    "strictness characterization",
    "costrict iff icon",
    "cylinder presentation",
    "2-nerve",
    "fibrations",
];

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.fail(what());
        }
    }

    fn fail(&mut self, what: String) {
        if self.failures.len() < MAX_LISTED {
            self.failures.push(what);
        } else if self.failures.len() == MAX_LISTED {
            self.failures.push("further failures omitted".into());
        }
    }

    fn result<T>(&mut self, r: Result<T>, context: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.fail(format!("{}: {e}", context()));
                None
            }
        }
    }
}

/// Runs criterion `n` (1 to 10).
pub fn run(n: usize) -> CriterionOutcome {
    let start = Instant::now();
    let (summary, tally) = match n {
        1 => coherence(),
        2 => icon_laws(),
        3 => first_problem(),
        4 => monoidal_embedding(),
        5 => invertibility_and_equivalence(),
        6 => strictness_characterization(),
        7 => costrict_iff_icon(),
        8 => cylinder_presentation(),
        9 => nerve(),
        10 => fibrations(),
        _ => panic!("there is no criterion {n}"),
    };
    CriterionOutcome {
        number: n,
        title: TITLES[n - 1],
        passed: tally.failures.is_empty(),
        summary,
        failures: tally.failures,
        elapsed: start.elapsed(),
    }
}

pub fn run_all() -> Vec<CriterionOutcome> {
    (1..=TITLES.len()).map(run).collect()
}

/// Single-associator corruptions of a bicategory: for each composable triple,
/// the associator replaced by one other parallel 2-cell.
pub fn associator_corruptions(b: &FiniteBicategory) -> Vec<(String, FiniteBicategory)> {
    let mut out = Vec::new();
    for (h, g, f) in b.composable_triples() {
        let a = b.assoc(h, g, f);
        if let Some(c) = b.cells_between(b.src2(a), b.tgt2(a)).find(|&c| c != a) {
            let mut bad = b.clone();
            bad.set_associator(h, g, f, c.id);
            let label = format!("{}: a({}, {}, {}) := {}", b.name(), b.q1(h), b.q1(g), b.q1(f), b.q2(c));
            out.push((label, bad));
        }
    }
    out
}

fn coherence() -> (String, Tally) {
    let mut t = Tally::default();
    let corpus = corpus::bicategories();
    for b in &corpus {
        if let Some(r) = t.result(validate_bicategory(b), || b.name().to_string()) {
            t.check(r.is_ok(), || format!("{}: {r}", b.name()));
        }
    }
    let corruptions: Vec<(String, FiniteBicategory)> =
        associator_corruptions(&corpus::z3_trivial_cocycle()).into_iter().take(10).collect();
    t.check(corruptions.len() == 10, || format!("only {} corruptions available", corruptions.len()));
    let mut caught = 0;
    for (label, bad) in &corruptions {
        if let Some(r) = t.result(validate_bicategory(bad), || label.clone()) {
            let ok = r.first(Law::Pentagon).is_some();
            caught += usize::from(ok);
            t.check(ok, || format!("{label}: no pentagon witness"));
        }
    }
    // The normalized Z/2 cocycle has a single non-identity triple, and
    // flipping it gives the zero cocycle, which is coherent.
    let z2 = corpus::z2_cocycle();
    let one = z2.find_one_cell_anywhere("1").expect("generator of Z/2");
    let mut zero_cocycle = (*z2).clone();
    let a = z2.assoc(one, one, one);
    let flipped = z2.cells_between(z2.src2(a), z2.tgt2(a)).find(|&c| c != a).expect("two cells");
    zero_cocycle.set_associator(one, one, one, flipped.id);
    if let Some(r) = t.result(validate_bicategory(&zero_cocycle), || "Z/2 flip".into()) {
        t.check(r.is_ok(), || format!("Z/2 with a(1, 1, 1) flipped is not coherent: {r}"));
    }
    let summary = format!(
        "{} corpus bicategories valid, {caught}/{} single-cell corruptions of Z/3 report a pentagon witness, Z/2 flipped at (1, 1, 1) is the coherent zero cocycle",
        corpus.len(),
        corruptions.len()
    );
    (summary, t)
}

/// Lax functors and icons between one ordered pair of bicategories, with
/// the vertical composition table.
pub struct IconHom {
    pub functors: Vec<Arc<LaxFunctor>>,
    functor_index: HashMap<Vec<usize>, usize>,
    /// `(source functor, target functor, icon)`.
    pub icons: Vec<(usize, usize, Icon)>,
    icon_index: HashMap<(usize, usize, Vec<Vec<MorId>>), usize>,
    identities: Vec<usize>,
    by_source: Vec<Vec<usize>>,
    /// `(first, second) ↦ second·first`.
    composite: HashMap<(usize, usize), usize>,
}

impl IconHom {
    fn build(s: &Arc<FiniteBicategory>, t: &Arc<FiniteBicategory>, tally: &mut Tally) -> Self {
        let functors: Vec<Arc<LaxFunctor>> = enumerate_lax_functors(s, t, &LaxQuery::default())
            .into_iter()
            .map(Arc::new)
            .collect();
        let functor_index = functors.iter().enumerate().map(|(i, f)| (f.table_key(), i)).collect();
        let mut icons = Vec::new();
        for (i, f) in functors.iter().enumerate() {
            for (j, g) in functors.iter().enumerate() {
                icons.extend(enumerate_icons(f, g, None).into_iter().map(|a| (i, j, a)));
            }
        }
        let icon_index: HashMap<_, _> = icons
            .iter()
            .enumerate()
            .map(|(k, (i, j, a))| ((*i, *j, a.components.clone()), k))
            .collect();
        let mut by_source = vec![Vec::new(); functors.len()];
        for (k, (i, _, _)) in icons.iter().enumerate() {
            by_source[*i].push(k);
        }
        let identities = functors
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let id = identity_icon(f.clone());
                icon_index.get(&(i, i, id.components)).copied().unwrap_or(usize::MAX)
            })
            .collect();
        let mut hom = IconHom {
            functors,
            functor_index,
            icons,
            icon_index,
            identities,
            by_source,
            composite: HashMap::new(),
        };
        for a in 0..hom.icons.len() {
            let (i, j, ref alpha) = hom.icons[a];
            for &b in &hom.by_source[j] {
                let (_, k, ref beta) = hom.icons[b];
                match vcomp_icons(beta, alpha) {
                    Ok(c) => match hom.icon_index.get(&(i, k, c.components)) {
                        Some(&c) => {
                            hom.composite.insert((a, b), c);
                        }
                        None => tally.fail(format!("{} → {}: composite icon not enumerated", s.name(), t.name())),
                    },
                    Err(e) => tally.fail(format!("{} → {}: {e}", s.name(), t.name())),
                }
            }
        }
        hom
    }

    fn comp(&self, first: usize, second: usize) -> usize {
        self.composite[&(first, second)]
    }

    fn find_functor(&self, f: &LaxFunctor) -> Option<usize> {
        self.functor_index.get(&f.table_key()).copied()
    }

    fn find_icon(&self, source: usize, target: usize, components: Vec<Vec<MorId>>) -> Option<usize> {
        self.icon_index.get(&(source, target, components)).copied()
    }

    fn composable_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.icons.len()).flat_map(move |a| self.by_source[self.icons[a].1].iter().map(move |&b| (a, b)))
    }
}

/// Every lax functor and icon between corpus bicategories with at most two
/// objects and six 1-cells per hom.
pub struct IconUniverse {
    pub bicategories: Vec<Arc<FiniteBicategory>>,
    /// `homs[i * n + j]` for bicategories `i → j`.
    pub homs: Vec<IconHom>,
}

impl IconUniverse {
    fn build(tally: &mut Tally) -> Self {
        let bicategories: Vec<Arc<FiniteBicategory>> = corpus::bicategories()
            .into_iter()
            .filter(|b| {
                b.num_objects() <= 2 && b.objects().all(|x| b.objects().all(|y| b.one_cells(x, y).count() <= 6))
            })
            .collect();
        let mut homs = Vec::new();
        for s in &bicategories {
            for t in &bicategories {
                homs.push(IconHom::build(s, t, tally));
            }
        }
        IconUniverse { bicategories, homs }
    }

    fn hom(&self, i: usize, j: usize) -> &IconHom {
        &self.homs[i * self.bicategories.len() + j]
    }

    pub fn num_functors(&self) -> usize {
        self.homs.iter().map(|h| h.functors.len()).sum()
    }

    pub fn num_icons(&self) -> usize {
        self.homs.iter().map(|h| h.icons.len()).sum()
    }

    pub fn icons(&self) -> impl Iterator<Item = &Icon> {
        self.homs.iter().flat_map(|h| h.icons.iter().map(|(_, _, a)| a))
    }
}

/// Above this many quadruples, middle-four is left to whisker interchange
/// plus whisker functoriality, which imply it.
const MIDDLE_FOUR_BUDGET: usize = 2_000_000;

#[derive(Default)]
struct LawCounts {
    associativity: usize,
    units: usize,
    whiskering: usize,
    interchange: usize,
    middle_four: usize,
    /// Hom blocks over budget, where middle-four follows from interchange.
    middle_four_implied: usize,
}

fn vertical_laws(u: &IconUniverse, c: &mut LawCounts, t: &mut Tally) {
    for hom in &u.homs {
        for (a, (i, j, _)) in hom.icons.iter().enumerate() {
            c.units += 2;
            if hom.composite.get(&(hom.identities[*i], a)) != Some(&a) || hom.composite.get(&(a, hom.identities[*j])) != Some(&a) {
                t.fail(format!("unit law fails at icon {a}"));
            }
        }
        for (a, b) in hom.composable_pairs() {
            let (Some(&ab), Some(bs)) = (hom.composite.get(&(a, b)), hom.by_source.get(hom.icons[b].1)) else {
                continue;
            };
            for &cc in bs {
                c.associativity += 1;
                let bc = hom.composite.get(&(b, cc));
                let lhs = hom.composite.get(&(ab, cc));
                let rhs = bc.and_then(|&bc| hom.composite.get(&(a, bc)));
                if lhs.is_none() || lhs != rhs {
                    t.fail(format!("associativity fails at icons ({a}, {b}, {cc})"));
                }
            }
        }
    }
}

/// Whisker tables for `A → B → C`: `left[h][α] = Hα`, `right[β][f] = βF`.
fn whisker_laws(u: &IconUniverse, ia: usize, ib: usize, ic: usize, c: &mut LawCounts, t: &mut Tally) {
    let (ab, bc, ac) = (u.hom(ia, ib), u.hom(ib, ic), u.hom(ia, ic));
    let names = || format!("{} → {} → {}", u.bicategories[ia].name(), u.bicategories[ib].name(), u.bicategories[ic].name());
    let mut composite = vec![vec![usize::MAX; ab.functors.len()]; bc.functors.len()];
    for (h, hf) in bc.functors.iter().enumerate() {
        for (f, ff) in ab.functors.iter().enumerate() {
            match compose_lax(hf, ff).ok().and_then(|x| ac.find_functor(&x)) {
                Some(k) => composite[h][f] = k,
                None => {
                    t.fail(format!("{}: composite functor not enumerated", names()));
                    return;
                }
            }
        }
    }
    let id_a = identity_lax(u.bicategories[ia].clone());
    let id_c = identity_lax(u.bicategories[ic].clone());
    let mut left = vec![vec![usize::MAX; ab.icons.len()]; bc.functors.len()];
    for (h, hf) in bc.functors.iter().enumerate() {
        for (a, (f, g, alpha)) in ab.icons.iter().enumerate() {
            let comps = whiskered_components(hf, alpha, &id_a).unwrap_or_default();
            match ac.find_icon(composite[h][*f], composite[h][*g], comps) {
                Some(k) => left[h][a] = k,
                None => {
                    t.fail(format!("{}: left whiskering leaves the icons", names()));
                    return;
                }
            }
        }
    }
    let mut right = vec![vec![usize::MAX; ab.functors.len()]; bc.icons.len()];
    for (b, (h, k, beta)) in bc.icons.iter().enumerate() {
        for (f, ff) in ab.functors.iter().enumerate() {
            let comps = whiskered_components(&id_c, beta, ff).unwrap_or_default();
            match ac.find_icon(composite[*h][f], composite[*k][f], comps) {
                Some(x) => right[b][f] = x,
                None => {
                    t.fail(format!("{}: right whiskering leaves the icons", names()));
                    return;
                }
            }
        }
    }
    // functoriality of whiskering
    for h in 0..bc.functors.len() {
        for (f, &id) in ab.identities.iter().enumerate() {
            c.whiskering += 1;
            if left[h][id] != ac.identities[composite[h][f]] {
                t.fail(format!("{}: H(1_F) is not an identity", names()));
            }
        }
        for (a, b) in ab.composable_pairs() {
            c.whiskering += 1;
            if left[h][ab.comp(a, b)] != ac.comp(left[h][a], left[h][b]) {
                t.fail(format!("{}: H(β·α) ≠ Hβ·Hα at ({a}, {b})", names()));
            }
        }
    }
    for f in 0..ab.functors.len() {
        for (h, &id) in bc.identities.iter().enumerate() {
            c.whiskering += 1;
            if right[id][f] != ac.identities[composite[h][f]] {
                t.fail(format!("{}: (1_H)F is not an identity", names()));
            }
        }
        for (a, b) in bc.composable_pairs() {
            c.whiskering += 1;
            if right[bc.comp(a, b)][f] != ac.comp(right[a][f], right[b][f]) {
                t.fail(format!("{}: (β·α)F ≠ βF·αF at ({a}, {b})", names()));
            }
        }
    }
    if ic == ib {
        if let Some(id) = bc.find_functor(&identity_lax(u.bicategories[ib].clone())) {
            for a in 0..ab.icons.len() {
                c.whiskering += 1;
                if left[id][a] != a {
                    t.fail(format!("{}: 1α ≠ α", names()));
                }
            }
        }
    }
    if ia == ib {
        if let Some(id) = ab.find_functor(&identity_lax(u.bicategories[ib].clone())) {
            for b in 0..bc.icons.len() {
                c.whiskering += 1;
                if right[b][id] != b {
                    t.fail(format!("{}: β1 ≠ β", names()));
                }
            }
        }
    }
    // βG·Hα = Kα·βF
    let horizontal = |a: usize, b: usize| {
        let (h, _, _) = bc.icons[b];
        let (_, g, _) = ab.icons[a];
        ac.comp(left[h][a], right[b][g])
    };
    for (a, (f, _, _)) in ab.icons.iter().enumerate() {
        for (b, (_, k, _)) in bc.icons.iter().enumerate() {
            c.interchange += 1;
            if horizontal(a, b) != ac.comp(right[b][*f], left[*k][a]) {
                t.fail(format!("{}: whisker interchange fails at ({a}, {b})", names()));
            }
        }
    }
    let (pa, pb) = (ab.composable_pairs().count(), bc.composable_pairs().count());
    if pa.saturating_mul(pb) <= MIDDLE_FOUR_BUDGET {
        for (a1, a2) in ab.composable_pairs() {
            for (b1, b2) in bc.composable_pairs() {
                c.middle_four += 1;
                let lhs = horizontal(ab.comp(a1, a2), bc.comp(b1, b2));
                let rhs = ac.comp(horizontal(a1, b1), horizontal(a2, b2));
                if lhs != rhs {
                    t.fail(format!("{}: middle-four fails at ({a1}, {a2}; {b1}, {b2})", names()));
                }
            }
        }
    } else {
        c.middle_four_implied += 1;
    }
}

fn icon_laws() -> (String, Tally) {
    let mut t = Tally::default();
    let u = IconUniverse::build(&mut t);
    let mut c = LawCounts::default();
    vertical_laws(&u, &mut c, &mut t);
    let n = u.bicategories.len();
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                whisker_laws(&u, a, b, cc, &mut c, &mut t);
            }
        }
    }
    t.checked = c.associativity + c.units + c.whiskering + c.interchange + c.middle_four;
    let summary = format!(
        "{} bicategories, {} lax functors, {} icons; associativity {}, units {}, whiskering {}, interchange {}, middle-four {} ({} oversized hom blocks by interchange)",
        n,
        u.num_functors(),
        u.num_icons(),
        c.associativity,
        c.units,
        c.whiskering,
        c.interchange,
        c.middle_four,
        c.middle_four_implied
    );
    (summary, t)
}

fn first_problem() -> (String, Tally) {
    let mut t = Tally::default();
    let b = corpus::codiscrete_magma();
    let one = corpus::terminal();
    let star = ObjId(0);
    let e = b.find_one_cell(star, star, "e").expect("unit of the magma");
    let a = b.find_one_cell(star, star, "a").expect("element a");
    let k = Arc::new(
        LaxFunctor::strict(one, b.clone(), vec![star], |_| e, |_| b.id2(e)).expect("constant at the unit"),
    );
    let u = OplaxNat::from_fn(k.clone(), k.clone(), vec![a], |_| {
        b.cells_between(b.compose1(a, e), b.compose1(e, a)).next().expect("codiscrete hom")
    });
    let mut summary = String::new();
    if let Some(r) = t.result(validate_oplax(&u), || "transformation".into()) {
        t.check(r.is_ok(), || format!("the transformation is not oplax: {r}"));
    }
    let triple = vcomp_oplax(&u, &u).and_then(|uu| Ok((vcomp_oplax(&uu, &u)?, vcomp_oplax(&u, &uu)?)));
    if let Some((left, right)) = t.result(triple, || "triple composite".into()) {
        let (l, r) = (b.one_cell_name(left.component(star)), b.one_cell_name(right.component(star)));
        t.check(l != r, || format!("components agree: {l} = {r}"));
        t.check((l, r) == ("e", "a"), || format!("expected components e and a, found {l} and {r}"));
        summary = format!("oplax (uu)u has component {l}, u(uu) has component {r}");
    }
    let icons: Vec<Icon> = enumerate_icons(&k, &k, None);
    t.check(!icons.is_empty(), || "no icons on the constant functor".into());
    let mut triples = 0;
    for x in &icons {
        t.check(classify_oplax(&icon_as_oplax(x)).icon, || "icon does not have identity components".into());
        for y in &icons {
            for z in &icons {
                triples += 1;
                let l = vcomp_icons(z, &vcomp_icons(y, x).expect("parallel")).expect("parallel");
                let r = vcomp_icons(&vcomp_icons(z, y).expect("parallel"), x).expect("parallel");
                t.check(l == r, || "icon composition is not associative".into());
            }
        }
    }
    summary.push_str(&format!("; {triples} icon triples compose associatively"));
    (summary, t)
}

fn moncat_pair(v: &Arc<MonoidalCategory>, w: &Arc<MonoidalCategory>, t: &mut Tally) -> (usize, usize) {
    let functors: Vec<_> = enumerate_monoidal_functors(v, w).into_iter().map(Arc::new).collect();
    let (sv, sw) = (corpus::sigma_of(v), corpus::sigma_of(w));
    let sigmas: Vec<Arc<LaxFunctor>> = functors
        .iter()
        .filter_map(|f| t.result(sigma_functor(f, sv.clone(), sw.clone()), || "Σ of a monoidal functor".into()))
        .map(Arc::new)
        .collect();
    if sigmas.len() != functors.len() {
        return (0, 0);
    }
    let mut pairs = 0;
    let mut total = 0;
    let n = functors.len();
    let mut transformations = vec![Vec::new(); n * n];
    for i in 0..n {
        for j in 0..n {
            let ts = enumerate_monoidal_transformations(&functors[i], &functors[j]);
            let icons = enumerate_icons(&sigmas[i], &sigmas[j], None);
            pairs += 1;
            total += ts.len();
            t.check(ts.len() == icons.len(), || {
                format!("{} → {}: {} transformations but {} icons", v.name, w.name, ts.len(), icons.len())
            });
            let images: Vec<Icon> = ts
                .iter()
                .map(|x| monoidal_to_icon(x, sigmas[i].clone(), sigmas[j].clone()))
                .collect();
            for x in &images {
                t.check(icons.contains(x), || "image of a transformation is not an icon".into());
                t.check(validate_icon(x).map(|r| r.is_ok()).unwrap_or(false), || "image fails icon laws".into());
            }
            let mut distinct = images.clone();
            distinct.dedup_by(|a, b| a.components == b.components);
            t.check(distinct.len() == images.len(), || "the correspondence is not injective".into());
            if i == j {
                let id = monoidal_to_icon(&identity_monoidal(functors[i].clone()), sigmas[i].clone(), sigmas[i].clone());
                t.check(id == identity_icon(sigmas[i].clone()), || "identities are not preserved".into());
            }
            transformations[i * n + j] = ts;
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for x in &transformations[i * n + j] {
                    for y in &transformations[j * n + k] {
                        let Some(yx) = t.result(vcomp_monoidal(y, x), || "monoidal composite".into()) else {
                            continue;
                        };
                        let lhs = monoidal_to_icon(&yx, sigmas[i].clone(), sigmas[k].clone());
                        let rhs = vcomp_icons(
                            &monoidal_to_icon(y, sigmas[j].clone(), sigmas[k].clone()),
                            &monoidal_to_icon(x, sigmas[i].clone(), sigmas[j].clone()),
                        );
                        t.check(rhs.as_ref() == Ok(&lhs), || "composition is not preserved".into());
                    }
                }
            }
        }
    }
    (pairs, total)
}

fn monoidal_embedding() -> (String, Tally) {
    let mut t = Tally::default();
    let pairs = [
        (corpus::chain_trunc(), corpus::chain_max()),
        (corpus::bool_max(), corpus::chain_max()),
    ];
    let mut parts = Vec::new();
    for (v, w) in &pairs {
        let (n, total) = moncat_pair(v, w, &mut t);
        parts.push(format!("{} → {}: {n} functor pairs, {total} transformations", v.name, w.name));
    }
    (parts.join("; "), t)
}

/// The three positive and three negative equivalence instances.
pub fn equivalence_instances() -> Vec<(&'static str, LaxFunctor)> {
    vec![
        ("identity on the Z/2 cocycle", identity_lax(corpus::z2_cocycle())),
        ("identity on the walking 2-cell", identity_lax(corpus::walking_two_cell())),
        ("walking arrow into thickened arrow", corpus::arrow_into_thickened()),
        ("walking arrow to terminal", corpus::arrow_to_terminal()),
        ("walking arrow onto f in the walking 2-cell", corpus::arrow_into_two_cell()),
        ("lax chain trunc → chain max", corpus::lax_trunc_to_max().expect("corpus functor")),
    ]
}

fn invertibility_and_equivalence() -> (String, Tally) {
    let mut t = Tally::default();
    let u = IconUniverse::build(&mut t);
    let mut invertible = 0;
    for a in u.icons() {
        let fast = is_invertible_icon(a);
        invertible += usize::from(fast);
        t.check(fast == oracle::search_inverse_icon(a).is_some(), || {
            format!("{} → {}: invertibility verdicts disagree", a.source.source.name(), a.source.target.name())
        });
    }
    let icons_checked = t.checked;
    let (mut pos, mut neg) = (0, 0);
    for (name, f) in equivalence_instances() {
        let verdict = is_equivalence_in_bicat2(&f);
        let f = Arc::new(f);
        let found = oracle::search_quasi_inverse(&f).is_some();
        if verdict.verdict {
            pos += 1;
        } else {
            neg += 1;
        }
        t.check(verdict.verdict == found, || {
            format!("{name}: criteria say {}, quasi-inverse search says {found}", verdict.verdict)
        });
    }
    t.check(pos == 3 && neg == 3, || format!("expected 3 positive and 3 negative instances, found {pos} and {neg}"));
    let summary = format!(
        "{icons_checked} icons ({invertible} invertible) agree with inverse search; equivalence agrees on {pos} positive and {neg} negative instances"
    );
    (summary, t)
}

/// The strict 2-categories battery sources, and their batteries.
pub fn corpus_batteries() -> Result<Vec<Battery>> {
    let targets = corpus::strict_bicategories();
    let bounds = BatteryBounds::default();
    [corpus::walking_arrow(), corpus::walking_two_cell(), corpus::ordinal(2), corpus::thickened_arrow()]
        .iter()
        .map(|b| beta_battery(b, &targets, &bounds))
        .collect()
}

fn strictness_characterization() -> (String, Tally) {
    let mut t = Tally::default();
    let Some(batteries) = t.result(corpus_batteries(), || "battery".into()) else {
        return ("battery could not be built".into(), t);
    };
    let (mut strict, mut total) = (0, 0);
    for battery in &batteries {
        for beta in battery.members() {
            total += 1;
            let expected = classify_oplax(beta).strict;
            strict += usize::from(expected);
            if let Some(v) = t.result(strictness_by_witness(beta), || "strictness".into()) {
                t.check(v.strict == expected, || {
                    format!("{}: witness verdict {} but constraints say {expected}", beta.ambient().name(), v.strict)
                });
            }
        }
    }
    (format!("{total} battery members ({strict} strict), zero disagreements required"), t)
}

/// Oplax transformations between 2-functors into each battery source.
fn costrict_candidates(battery: &Battery) -> Vec<OplaxNat> {
    let b = battery.cylinder.base.bicategory();
    let mut out = Vec::new();
    for a in [corpus::terminal(), corpus::walking_arrow()] {
        let functors: Vec<Arc<LaxFunctor>> = enumerate_2_functors(&a, b).into_iter().map(Arc::new).collect();
        for f in &functors {
            for g in &functors {
                out.extend(enumerate_oplax(f, g, None));
            }
        }
    }
    out
}

fn costrict_iff_icon() -> (String, Tally) {
    let mut t = Tally::default();
    let Some(batteries) = t.result(corpus_batteries(), || "battery".into()) else {
        return ("battery could not be built".into(), t);
    };
    let (mut icons, mut refuted, mut interchanges) = (0, 0, 0);
    for battery in &batteries {
        for alpha in costrict_candidates(battery) {
            let is_icon = classify_oplax(&alpha).icon;
            let Some(v) = t.result(certify_costrict(&alpha, battery), || "costrictness".into()) else {
                continue;
            };
            match v {
                Costrictness::Costrict { battery_checked } => {
                    icons += 1;
                    interchanges += battery_checked;
                    t.check(is_icon, || "a non-icon passed the battery".into());
                }
                Costrictness::NotCostrict(r) => {
                    refuted += 1;
                    t.check(!is_icon, || "an icon was refuted".into());
                    let replay = r.replay(&alpha).unwrap_or(false);
                    t.check(replay, || "refutation does not replay".into());
                }
                Costrictness::Contradiction { witness, .. } => {
                    t.fail(format!("icon fails interchange at {witness:?}"));
                }
            }
        }
    }
    let summary = format!(
        "{icons} icons passed {interchanges} interchanges, {refuted} non-icons refuted by replayable cylinder crossings"
    );
    (summary, t)
}

fn cylinder_presentation() -> (String, Tally) {
    let mut t = Tally::default();
    let mut parts = Vec::new();
    for b in [corpus::walking_arrow(), corpus::walking_two_cell()] {
        let Some(base) = t.result(Strict2Category::new(b.clone()), || b.name().to_string()) else {
            continue;
        };
        let Some(cyl) = t.result(lax_cylinder(&base), || b.name().to_string()) else {
            continue;
        };
        t.check(cyl.audit.is_congruence(), || format!("{}: quotient is not a congruence", b.name()));
        let (mut objects, mut classes) = (0, 0);
        for x in b.objects() {
            for y in b.objects() {
                let cmp = oracle::compare_cylinder_with_free(&cyl, x, y, 16);
                objects += cmp.objects;
                classes += cmp.closed_classes;
                t.check(cmp.agrees(), || format!("{} ({x:?}, {y:?}): {:?}", b.name(), cmp.failures));
            }
        }
        parts.push(format!("{}: {objects} cross objects, {classes} morphisms agree", b.name()));
    }
    (parts.join("; "), t)
}

fn nerve() -> (String, Tally) {
    let mut t = Tally::default();
    let c = FiniteCategory::ordinal(2);
    let b = Arc::new(crate::bicat::build::from_category(&c));
    let mut parts = Vec::new();
    if let Some(x) = t.result(two_nerve(&b, 3), || "nerve of [2]".into()) {
        let cmp = oracle::compare_with_classical_nerve(&c, &x);
        for m in &cmp.mismatches {
            t.fail(m.clone());
        }
        let counts: Vec<String> = x.levels.iter().map(|l| l.simplices.len().to_string()).collect();
        parts.push(format!("[2] matches its classical nerve at levels 0..3 ({})", counts.join(", ")));
    }
    for b in [corpus::walking_two_cell(), corpus::sigma_of(&corpus::bool_max())] {
        if let Some(x) = t.result(two_nerve(&b, MAX_LEVEL), || b.name().to_string()) {
            if let Some((checked, failures)) = t.result(check_simplicial_identities(&x), || b.name().to_string()) {
                for f in failures {
                    t.fail(format!("{}: {} at level {}", b.name(), f.identity, f.level));
                }
                parts.push(format!("{}: {checked} simplicial identities through level {MAX_LEVEL}", b.name()));
            }
        }
    }
    let (g, a) = (2, 2);
    let count = enumerate_simplices(2, &corpus::z2_cocycle()).len();
    t.check(count == g * g * a, || format!("cocycle level 2 has {count} simplices, expected {}", g * g * a));
    parts.push(format!("cocycle level 2 has {count} = |G|²·|A| simplices"));
    (parts.join("; "), t)
}

fn fibrations() -> (String, Tally) {
    let mut t = Tally::default();
    let mut identities = 0;
    for b in corpus::strict_bicategories() {
        let Some(s) = t.result(Strict2Category::new(b.clone()), || b.name().to_string()) else {
            continue;
        };
        for x in b.objects() {
            identities += 1;
            let v = is_fibration(&s, b.unit_cell(x));
            t.check(matches!(v, Ok(FibrationVerdict::Fibration)), || {
                format!("{}: identity on {} is not a fibration", b.name(), b.object_name(x))
            });
        }
    }
    let b = corpus::unliftable();
    let p = b.find_one_cell_anywhere("p").expect("p in the corpus");
    let mut negative = String::new();
    if let Some(v) = t.result(is_fibration(&Strict2Category::new(b.clone()).expect("strict"), p), || "unliftable".into()) {
        negative = v.describe(&b);
        t.check(
            matches!(v, FibrationVerdict::NoCartesianLift { beta } if b.q2(beta).contains('b')),
            || format!("negative example: {negative}"),
        );
    }
    let mut queries = 0;
    let two = corpus::walking_two_cell();
    let s = Strict2Category::new(two.clone()).expect("strict");
    for p in two.all_one_cells() {
        for alpha in two.all_two_cells().into_iter().filter(|a| a.target == p.source) {
            queries += 1;
            let q = CartesianQuery { ambient: s.clone(), p, alpha };
            let fast = is_p_cartesian(&q).unwrap_or(false);
            t.check(fast == oracle::literal_p_cartesian(&two, p, alpha), || {
                format!("walking 2-cell: verdicts disagree at p = {}, α = {}", two.q1(p), two.q2(alpha))
            });
        }
    }
    let summary =
        format!("{identities} identities are fibrations; unliftable: {negative}; {queries}/{queries} cartesian queries agree");
    (summary, t)
}

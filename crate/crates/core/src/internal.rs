//! Internal notions: equivalences in the 2-category of bicategories, lax
//! functors and icons; `p`-cartesian 2-cells and fibrations inside a finite
//! strict 2-category.
//!
//! The quantifier "for each `c: X → A`" ranges over the finite ambient
//! itself. Nothing is added freely, so cartesianness here is relative to
//! the 1-cells that actually exist.

use std::fmt;

use rayon::prelude::*;

use crate::bicat::{FiniteBicategory, OneCell, Strict2Category, TwoCell};
use crate::cat::{is_equivalence_functor, ObjId};
use crate::error::{Result, StructureError};
use crate::laxfun::{classify, LaxFunctor, LaxKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EquivalenceCriterion {
    BijectiveOnObjects,
    HomEquivalences,
    Homomorphism,
}

impl fmt::Display for EquivalenceCriterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquivalenceCriterion::BijectiveOnObjects => "(i) bijective on objects",
            EquivalenceCriterion::HomEquivalences => "(ii) equivalences on homs",
            EquivalenceCriterion::Homomorphism => "(iii) homomorphism",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub verdict: bool,
    /// Criteria certified, in order, before the first failure (all three
    /// when the verdict is true).
    pub certified: Vec<EquivalenceCriterion>,
    pub failure: Option<(EquivalenceCriterion, String)>,
}

impl fmt::Display for EquivalenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.certified {
            writeln!(f, "ok    {c}")?;
        }
        if let Some((c, w)) = &self.failure {
            writeln!(f, "FAIL  {c}: {w}")?;
        }
        Ok(())
    }
}

fn object_witness(fun: &LaxFunctor) -> Option<String> {
    let (s, t) = (&fun.source, &fun.target);
    let mut preimage: Vec<Option<ObjId>> = vec![None; t.num_objects()];
    for a in s.objects() {
        let fa = fun.obj(a);
        if let Some(prev) = preimage[fa.0] {
            return Some(format!(
                "`{}` and `{}` both go to `{}`",
                s.object_name(prev),
                s.object_name(a),
                t.object_name(fa)
            ));
        }
        preimage[fa.0] = Some(a);
    }
    t.objects()
        .find(|b| preimage[b.0].is_none())
        .map(|b| format!("`{}` is not hit", t.object_name(b)))
}

fn constraint_witness(fun: &LaxFunctor) -> Option<String> {
    let (s, t) = (&fun.source, &fun.target);
    for (g, f) in s.composable_pairs() {
        if !t.is_iso2(fun.phi(g, f)) {
            return Some(format!("phi at ({}, {}) is `{}`", s.q1(g), s.q1(f), t.q2(fun.phi(g, f))));
        }
    }
    s.objects()
        .find(|&a| !t.is_iso2(fun.phi0(a)))
        .map(|a| format!("unit constraint at `{}` is `{}`", s.object_name(a), t.q2(fun.phi0(a))))
}

/// Decides the three criteria in order, stopping at the first failure.
pub fn is_equivalence_in_bicat2(fun: &LaxFunctor) -> EquivalenceVerdict {
    let mut certified = Vec::new();
    let fail = |certified, c, w| EquivalenceVerdict {
        verdict: false,
        certified,
        failure: Some((c, w)),
    };
    if let Some(w) = object_witness(fun) {
        return fail(certified, EquivalenceCriterion::BijectiveOnObjects, w);
    }
    certified.push(EquivalenceCriterion::BijectiveOnObjects);
    let s = &fun.source;
    for a in s.objects() {
        for b in s.objects() {
            if !is_equivalence_functor(fun.hom_map(a, b)) {
                let w = format!("hom(`{}`, `{}`)", s.object_name(a), s.object_name(b));
                return fail(certified, EquivalenceCriterion::HomEquivalences, w);
            }
        }
    }
    certified.push(EquivalenceCriterion::HomEquivalences);
    if !classify(fun).at_least(LaxKind::Homomorphism) {
        let w = constraint_witness(fun).unwrap_or_default();
        return fail(certified, EquivalenceCriterion::Homomorphism, w);
    }
    certified.push(EquivalenceCriterion::Homomorphism);
    EquivalenceVerdict {
        verdict: true,
        certified,
        failure: None,
    }
}

/// Is `alpha: a' ⇒ a` cartesian for `p`?
#[derive(Debug, Clone)]
pub struct CartesianQuery {
    pub ambient: Strict2Category,
    pub p: OneCell,
    pub alpha: TwoCell,
}

impl CartesianQuery {
    fn check(&self) -> Result<()> {
        let b = self.ambient.bicategory();
        if self.alpha.target != self.p.source {
            return Err(StructureError::Boundary(format!(
                "`{}` does not land in the source of `{}`",
                b.q2(self.alpha),
                b.q1(self.p)
            )));
        }
        Ok(())
    }
}

/// Why a 2-cell is not cartesian: at `c` and the compatible pair
/// `(γ, δ)`, the number of factorizations found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartesianFailure {
    pub c: OneCell,
    pub gamma: TwoCell,
    pub delta: TwoCell,
    pub lifts: usize,
}

impl CartesianFailure {
    pub fn describe(&self, b: &FiniteBicategory) -> String {
        let what = if self.lifts == 0 { "no lift" } else { "several lifts" };
        format!("{what} for c = {}, γ = {}, δ = {}", b.q1(self.c), b.q2(self.gamma), b.q2(self.delta))
    }
}

/// `γ̄ ↦ (pγ̄, α·γ̄)` must be a bijection from cells `c ⇒ a'` onto the
/// compatible pairs `(γ: pc ⇒ pa', δ: c ⇒ a)` with `pα·γ = pδ`. Returns
/// the first pair (in canonical order) that is missed or hit twice.
pub fn cartesian_failure(q: &CartesianQuery) -> Result<Option<CartesianFailure>> {
    q.check()?;
    let b = q.ambient.bicategory();
    let (p, alpha) = (q.p, q.alpha);
    let (a2, a) = (b.src2(alpha), b.tgt2(alpha));
    let palpha = b.whisker_left(p, alpha);
    let cs: Vec<OneCell> = b.one_cells(a.source, a.target).collect();
    let found: Vec<Option<CartesianFailure>> = cs
        .par_iter()
        .map(|&c| {
            let mut hits = std::collections::HashMap::new();
            for lift in b.cells_between(c, a2) {
                *hits.entry((b.whisker_left(p, lift), b.vc(alpha, lift))).or_insert(0usize) += 1;
            }
            let pc = b.compose1(p, c);
            for gamma in b.cells_between(pc, b.compose1(p, a2)) {
                for delta in b.cells_between(c, a) {
                    if b.vc(palpha, gamma) == b.whisker_left(p, delta) {
                        let lifts = hits.get(&(gamma, delta)).copied().unwrap_or(0);
                        if lifts != 1 {
                            return Some(CartesianFailure { c, gamma, delta, lifts });
                        }
                    }
                }
            }
            None
        })
        .collect();
    Ok(found.into_iter().flatten().next())
}

pub fn is_p_cartesian(q: &CartesianQuery) -> Result<bool> {
    Ok(cartesian_failure(q)?.is_none())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FibrationVerdict {
    Fibration,
    /// Clause (i): `β: b ⇒ pa` has no cartesian lift.
    NoCartesianLift { beta: TwoCell },
    /// Clause (ii): `α` is cartesian but `α⋆x` is not.
    NotStable { alpha: TwoCell, x: OneCell },
}

impl FibrationVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, FibrationVerdict::Fibration)
    }

    pub fn describe(&self, b: &FiniteBicategory) -> String {
        match self {
            FibrationVerdict::Fibration => "fibration".into(),
            FibrationVerdict::NoCartesianLift { beta } => format!("clause (i) fails: {} has no cartesian lift", b.q2(*beta)),
            FibrationVerdict::NotStable { alpha, x } => format!(
                "clause (ii) fails: {} is cartesian but its whiskering by {} is not",
                b.q2(*alpha),
                b.q1(*x)
            ),
        }
    }
}

/// Decides both clauses exhaustively, clause (i) first.
pub fn is_fibration(ambient: &Strict2Category, p: OneCell) -> Result<FibrationVerdict> {
    let b = ambient.bicategory();
    let cartesian = |alpha: TwoCell| -> Result<bool> {
        is_p_cartesian(&CartesianQuery {
            ambient: ambient.clone(),
            p,
            alpha,
        })
    };
    let (a_obj, b_obj) = (p.source, p.target);
    for x in b.objects() {
        for a in b.one_cells(x, a_obj) {
            let pa = b.compose1(p, a);
            for bb in b.one_cells(x, b_obj) {
                for beta in b.cells_between(bb, pa) {
                    let mut lifted = false;
                    for a2 in b.one_cells(x, a_obj).filter(|&a2| b.compose1(p, a2) == bb) {
                        for alpha in b.cells_between(a2, a) {
                            if b.whisker_left(p, alpha) == beta && cartesian(alpha)? {
                                lifted = true;
                                break;
                            }
                        }
                        if lifted {
                            break;
                        }
                    }
                    if !lifted {
                        return Ok(FibrationVerdict::NoCartesianLift { beta });
                    }
                }
            }
        }
    }
    for x in b.objects() {
        for alpha in b.two_cells(x, a_obj) {
            if !cartesian(alpha)? {
                continue;
            }
            for y in b.objects() {
                for w in b.one_cells(y, x) {
                    if !cartesian(b.whisker_right(alpha, w))? {
                        return Ok(FibrationVerdict::NotStable { alpha, x: w });
                    }
                }
            }
        }
    }
    Ok(FibrationVerdict::Fibration)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use std::sync::Arc;

    fn strict(b: Arc<FiniteBicategory>) -> Strict2Category {
        Strict2Category::new(b).unwrap()
    }

    fn p_of(b: &FiniteBicategory) -> OneCell {
        b.find_one_cell_anywhere("p").unwrap()
    }

    #[test]
    fn identities_are_fibrations() {
        for b in corpus::strict_bicategories() {
            let s = strict(b.clone());
            for x in b.objects() {
                assert!(is_fibration(&s, b.unit_cell(x)).unwrap().holds(), "{}", b.name());
            }
        }
    }

    #[test]
    fn collapsed_two_cell_is_not_cartesian() {
        let b = corpus::collapsed_two_cell();
        let s = strict(b.clone());
        let (x, a) = (b.find_object("X").unwrap(), b.find_object("A").unwrap());
        let alpha = b.two_cells(x, a).find(|&c| !b.is_id2(c)).unwrap();
        let q = CartesianQuery { ambient: s, p: p_of(&b), alpha };
        let fail = cartesian_failure(&q).unwrap().unwrap();
        assert_eq!(fail.lifts, 0);
    }

    #[test]
    fn projection_is_a_fibration() {
        let b = corpus::product_ambient();
        assert!(is_fibration(&strict(b.clone()), p_of(&b)).unwrap().holds());
    }

    #[test]
    fn unliftable_fails_clause_one() {
        let b = corpus::unliftable();
        let v = is_fibration(&strict(b.clone()), p_of(&b)).unwrap();
        let FibrationVerdict::NoCartesianLift { beta } = v else {
            panic!("{v:?}")
        };
        assert_eq!(b.one_cell_name(b.src2(beta)), "b");
        assert_eq!(b.one_cell_name(b.tgt2(beta)), "pa");
    }

    #[test]
    fn equivalence_criteria() {
        let id = crate::laxfun::identity_lax(corpus::z2_cocycle());
        assert!(is_equivalence_in_bicat2(&id).verdict);
        let lax = corpus::lax_trunc_to_max().unwrap();
        let v = is_equivalence_in_bicat2(&lax);
        assert!(!v.verdict);
        assert_eq!(v.failure.unwrap().0, EquivalenceCriterion::Homomorphism);
        assert_eq!(v.certified.len(), 2);
    }
}

//! Cartesian 2-cells decided by the nested quantifiers of the definition,
//! over the full lists of 1-cells and 2-cells.

use crate::bicat::{FiniteBicategory, OneCell, TwoCell};

/// `α: a' ⇒ a` in `hom(X, A)` is `p`-cartesian when for each `c: X → A`
/// and each `γ: pc ⇒ pa'`, `δ: c ⇒ a` with `pα·γ = pδ`, exactly one
/// `γ̄: c ⇒ a'` has `pγ̄ = γ` and `α·γ̄ = δ`.
pub fn literal_p_cartesian(b: &FiniteBicategory, p: OneCell, alpha: TwoCell) -> bool {
    let (x, a_obj) = (alpha.source, alpha.target);
    let (a2, a) = (b.src2(alpha), b.tgt2(alpha));
    let cells_xa = b.all_two_cells().into_iter().filter(|t| (t.source, t.target) == (x, a_obj)).collect::<Vec<_>>();
    let cells_xb = b
        .all_two_cells()
        .into_iter()
        .filter(|t| (t.source, t.target) == (x, p.target))
        .collect::<Vec<_>>();
    let between = |cells: &[TwoCell], s: OneCell, t: OneCell| -> Vec<TwoCell> {
        cells.iter().copied().filter(|&c| b.src2(c) == s && b.tgt2(c) == t).collect()
    };
    for c in b.all_one_cells().into_iter().filter(|c| (c.source, c.target) == (x, a_obj)) {
        for gamma in between(&cells_xb, b.compose1(p, c), b.compose1(p, a2)) {
            for delta in between(&cells_xa, c, a) {
                let lhs = b.vcomp(b.whisker_left(p, alpha), gamma).expect("boundaries match");
                if lhs != b.whisker_left(p, delta) {
                    continue;
                }
                let lifts = between(&cells_xa, c, a2)
                    .into_iter()
                    .filter(|&g| b.whisker_left(p, g) == gamma && b.vcomp(alpha, g).ok() == Some(delta))
                    .count();
                if lifts != 1 {
                    return false;
                }
            }
        }
    }
    true
}

//! Equivalences in the 2-category of bicategories, lax functors and icons,
//! found by searching for quasi-inverses.

use std::sync::Arc;

use crate::cat::ObjId;
use crate::enumerate::{enumerate_icons, enumerate_lax_functors, LaxQuery};
use crate::icon::{identity_icon, vcomp_icons, Icon};
use crate::laxfun::{compose_lax, identity_lax, LaxFunctor, LaxKind};

/// A two-sided inverse of `a`, found among all icons in the opposite
/// direction.
pub fn search_inverse_icon(a: &Icon) -> Option<Icon> {
    let id_f = identity_icon(a.source.clone());
    let id_g = identity_icon(a.target.clone());
    enumerate_icons(&a.target, &a.source, None).into_iter().find(|b| {
        matches!(vcomp_icons(b, a), Ok(ba) if ba.components == id_f.components)
            && matches!(vcomp_icons(a, b), Ok(ab) if ab.components == id_g.components)
    })
}

fn has_invertible_icon(f: &Arc<LaxFunctor>, g: &Arc<LaxFunctor>) -> bool {
    enumerate_icons(f, g, None)
        .iter()
        .any(|a| search_inverse_icon(a).is_some())
}

/// A lax functor `G` with invertible icons `GF ≅ 1` and `FG ≅ 1`.
#[derive(Debug, Clone)]
pub struct QuasiInverse {
    pub inverse: Arc<LaxFunctor>,
}

/// Searches every lax functor `G` backwards whose object map inverts `F`'s
/// (icons force `GF` and `FG` to be identities on objects).
pub fn search_quasi_inverse(f: &Arc<LaxFunctor>) -> Option<QuasiInverse> {
    let (s, t) = (&f.source, &f.target);
    if s.num_objects() != t.num_objects() {
        return None;
    }
    let mut inv = vec![ObjId(usize::MAX); t.num_objects()];
    for a in s.objects() {
        let fa = f.obj(a);
        if inv[fa.0].0 != usize::MAX {
            return None;
        }
        inv[fa.0] = a;
    }
    let q = LaxQuery {
        obj_map: Some(inv),
        ..LaxQuery::at_least(LaxKind::Lax)
    };
    let (id_s, id_t) = (Arc::new(identity_lax(s.clone())), Arc::new(identity_lax(t.clone())));
    enumerate_lax_functors(t, s, &q).into_iter().find_map(|g| {
        let gf = Arc::new(compose_lax(&g, f).ok()?);
        let fg = Arc::new(compose_lax(f, &g).ok()?);
        (has_invertible_icon(&gf, &id_s) && has_invertible_icon(&fg, &id_t)).then(|| QuasiInverse { inverse: Arc::new(g) })
    })
}

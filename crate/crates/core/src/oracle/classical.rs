//! The classical nerve of a category and direct counts of low simplices.

use std::collections::HashMap;

use crate::bicat::FiniteBicategory;
use crate::cat::{FiniteCategory, MorId, ObjId};
use crate::nerve::{Simplex, TruncatedSimplicialCategory};

/// A `k`-chain `x_0 → x_1 → ... → x_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Chain {
    pub objects: Vec<ObjId>,
    pub arrows: Vec<MorId>,
}

/// Levels `0..=t` of the nerve of a category with face and degeneracy
/// maps as index tables.
#[derive(Debug, Clone)]
pub struct ClassicalNerve {
    pub chains: Vec<Vec<Chain>>,
    pub faces: Vec<Vec<Vec<usize>>>,
    pub degeneracies: Vec<Vec<Vec<usize>>>,
}

fn chains_of(c: &FiniteCategory, k: usize) -> Vec<Chain> {
    let mut out: Vec<Chain> = c
        .objects()
        .map(|x| Chain {
            objects: vec![x],
            arrows: vec![],
        })
        .collect();
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|ch| {
                let last = *ch.objects.last().expect("nonempty");
                c.objects()
                    .flat_map(|y| c.hom(last, y).iter().map(move |&m| (y, m)))
                    .map(|(y, m)| {
                        let mut next = ch.clone();
                        next.objects.push(y);
                        next.arrows.push(m);
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

fn face(c: &FiniteCategory, ch: &Chain, i: usize) -> Chain {
    let k = ch.arrows.len();
    let mut objects = ch.objects.clone();
    objects.remove(i);
    let arrows = if i == 0 {
        ch.arrows[1..].to_vec()
    } else if i == k {
        ch.arrows[..k - 1].to_vec()
    } else {
        let mut a = ch.arrows[..i - 1].to_vec();
        a.push(c.comp(ch.arrows[i], ch.arrows[i - 1]));
        a.extend_from_slice(&ch.arrows[i + 1..]);
        a
    };
    Chain { objects, arrows }
}

fn degeneracy(c: &FiniteCategory, ch: &Chain, i: usize) -> Chain {
    let mut ch = ch.clone();
    ch.objects.insert(i, ch.objects[i]);
    ch.arrows.insert(i, c.identity(ch.objects[i]));
    ch
}

pub fn classical_nerve(c: &FiniteCategory, t: usize) -> ClassicalNerve {
    let chains: Vec<Vec<Chain>> = (0..=t).map(|k| chains_of(c, k)).collect();
    let index: Vec<HashMap<&Chain, usize>> = chains
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, ch)| (ch, i)).collect())
        .collect();
    let mut faces = vec![Vec::new()];
    for n in 1..=t {
        faces.push(
            (0..=n)
                .map(|i| chains[n].iter().map(|ch| index[n - 1][&face(c, ch, i)]).collect())
                .collect(),
        );
    }
    let degeneracies = (0..t)
        .map(|n| {
            (0..=n)
                .map(|i| chains[n].iter().map(|ch| index[n + 1][&degeneracy(c, ch, i)]).collect())
                .collect()
        })
        .collect();
    ClassicalNerve {
        chains,
        faces,
        degeneracies,
    }
}

/// The chain of generating edges of a simplex of `from_category(c)`.
pub fn chain_of_simplex(c: &FiniteCategory, s: &Simplex) -> Chain {
    let objects: Vec<ObjId> = (0..=s.dim()).map(|i| s.vertex(i)).collect();
    let arrows = (1..=s.dim())
        .map(|i| {
            let e = s.edge(i - 1, i);
            c.hom(e.source, e.target)[e.id.0]
        })
        .collect();
    Chain { objects, arrows }
}

/// Outcome of comparing a 2-nerve of `from_category(c)` with the
/// classical nerve of `c`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NerveComparison {
    pub levels_compared: usize,
    pub mismatches: Vec<String>,
}

impl NerveComparison {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn compare_with_classical_nerve(c: &FiniteCategory, x: &TruncatedSimplicialCategory) -> NerveComparison {
    let t = x.truncation();
    let classical = classical_nerve(c, t);
    let mut out = NerveComparison::default();
    let mut to_classical = Vec::new();
    for n in 0..=t {
        out.levels_compared += 1;
        let level = &x.levels[n];
        let index: HashMap<&Chain, usize> = classical.chains[n].iter().enumerate().map(|(i, ch)| (ch, i)).collect();
        let map: Vec<Option<usize>> = level
            .simplices
            .iter()
            .map(|s| index.get(&chain_of_simplex(c, s)).copied())
            .collect();
        if level.simplices.len() != classical.chains[n].len() {
            out.mismatches.push(format!(
                "level {n}: {} simplices against {} chains",
                level.simplices.len(),
                classical.chains[n].len()
            ));
        }
        let mut seen: Vec<usize> = map.iter().flatten().copied().collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != map.len() || map.iter().any(Option::is_none) {
            out.mismatches.push(format!("level {n}: simplices do not correspond to distinct chains"));
        }
        if level.category.num_morphisms() != level.category.num_objects() {
            out.mismatches.push(format!("level {n}: has non-identity icons"));
        }
        to_classical.push(map);
    }
    let mut compare = |kind: &str, n: usize, i: usize, from: usize, to: usize, ours: &[ObjId], theirs: &[usize]| {
        for (s, image) in ours.iter().enumerate() {
            if to_classical[to][image.0] != to_classical[from][s].map(|ch| theirs[ch]) {
                out.mismatches.push(format!("{kind}{i} at level {n} differs on s{s}"));
            }
        }
    };
    for n in 1..=t {
        for i in 0..=n {
            compare("d", n, i, n, n - 1, &x.faces[n][i].obj_map, &classical.faces[n][i]);
        }
    }
    for n in 0..t {
        for i in 0..=n {
            compare("s", n, i, n, n + 1, &x.degeneracies[n][i].obj_map, &classical.degeneracies[n][i]);
        }
    }
    out
}

/// Direct count of 2-simplices of a strict `b`: composable `(f, g)`, a
/// parallel `h`, and an invertible 2-cell `g∘f ⇒ h`.
pub fn count_two_simplices_strict(b: &FiniteBicategory) -> usize {
    b.composable_pairs()
        .into_iter()
        .map(|(g, f)| {
            let gf = b.compose1(g, f);
            b.one_cells(gf.source, gf.target)
                .map(|h| b.cells_between(gf, h).filter(|&c| b.is_iso2(c)).count())
                .sum::<usize>()
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_nerve_of_ordinal() {
        let n = classical_nerve(&FiniteCategory::ordinal(2), 3);
        // monotone maps [k] → [2]
        let counts: Vec<usize> = n.chains.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![3, 6, 10, 15]);
    }
}

//! Free generation of cylinder cross homs, quotiented by union-find.

use std::collections::HashMap;

use petgraph::unionfind::UnionFind;

use crate::bicat::{FiniteBicategory, OneCell, TwoCell};
use crate::cat::ObjId;
use crate::cylinder::{Cylinder, Triple};

/// A whiskered generator of a cross hom `(0,X) → (1,Y)` of the cylinder,
/// acting on the normal form `(h, g)` it starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    /// `(1,h)(!,W)(0,γ)`
    Low(TwoCell),
    /// `(1,δ)(!,W)(0,g)`
    High(TwoCell),
    /// `(1,h)(!,k)(0,g')`, from `(h, k∘g')` to `(h∘k, g')`.
    Cross { k: OneCell, rest: OneCell },
}

type Node = (OneCell, OneCell);

fn apply(b: &FiniteBicategory, (h, g): Node, s: Step) -> Option<Node> {
    match s {
        Step::Low(c) if b.src2(c) == g => Some((h, b.tgt2(c))),
        Step::High(c) if b.src2(c) == h => Some((b.tgt2(c), g)),
        Step::Cross { k, rest } if k.target == h.source && b.compose1(k, rest) == g => {
            Some((b.compose1(h, k), rest))
        }
        _ => None,
    }
}

fn trivial(b: &FiniteBicategory, s: &Step) -> bool {
    match s {
        Step::Low(c) | Step::High(c) => b.is_id2(*c),
        Step::Cross { k, .. } => b.is_unit(*k),
    }
}

fn normalize(b: &FiniteBicategory, w: Vec<Step>) -> Vec<Step> {
    w.into_iter().filter(|s| !trivial(b, s)).collect()
}

/// The cross hom `(0,X) → (1,Y)` presented by generators and relations:
/// every reduced path of generators, and the classes of the congruence
/// generated by functoriality of the levels, interchange, naturality of
/// the crossing in 2-cells, and its compatibility with composition and
/// identities.
#[derive(Debug, Clone)]
pub struct FreeCrossHom {
    pub nodes: Vec<Node>,
    pub paths: Vec<(usize, Vec<Step>)>,
    pub class_of: Vec<usize>,
    pub num_classes: usize,
}

pub fn free_cross_hom(b: &FiniteBicategory, x: ObjId, y: ObjId, max_len: usize) -> Result<FreeCrossHom, String> {
    let mut nodes = Vec::new();
    for w in b.objects() {
        for h in b.one_cells(w, y) {
            for g in b.one_cells(x, w) {
                nodes.push((h, g));
            }
        }
    }
    let node_index: HashMap<Node, usize> = nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();

    // every non-trivial generator out of each node
    let steps_from = |(h, g): Node| -> Vec<Step> {
        let w = h.source;
        let mut out: Vec<Step> = Vec::new();
        out.extend(b.two_cells(x, w).filter(|&c| b.src2(c) == g).map(Step::Low));
        out.extend(b.two_cells(w, y).filter(|&c| b.src2(c) == h).map(Step::High));
        for w2 in b.objects() {
            for k in b.one_cells(w2, w) {
                for rest in b.one_cells(x, w2) {
                    if b.compose1(k, rest) == g {
                        out.push(Step::Cross { k, rest });
                    }
                }
            }
        }
        out.retain(|s| !trivial(b, s));
        out
    };

    let mut paths: Vec<(usize, Vec<Step>)> = Vec::new();
    for start in 0..nodes.len() {
        let mut stack = vec![(nodes[start], Vec::new())];
        while let Some((at, word)) = stack.pop() {
            let next = steps_from(at);
            if word.len() == max_len && !next.is_empty() {
                return Err(format!("paths longer than {max_len} generators exist"));
            }
            for s in next {
                let mut w = word.clone();
                w.push(s);
                stack.push((apply(b, at, s).expect("generator applies"), w));
            }
            paths.push((start, word));
        }
    }
    paths.sort_by_key(|(s, w)| (*s, w.len()));
    let path_index: HashMap<(usize, Vec<Step>), usize> =
        paths.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

    // relation instances (start node, one side, other side), normalized
    let mut rel: Vec<(usize, Vec<Step>, Vec<Step>)> = Vec::new();
    let mut add = |node: Node, l: Vec<Step>, r: Vec<Step>| {
        let (l, r) = (normalize(b, l), normalize(b, r));
        if l != r {
            if let Some(&i) = node_index.get(&node) {
                rel.push((i, l, r));
            }
        }
    };
    for &(h, g) in &nodes {
        let w = h.source;
        // functoriality of each level
        for c1 in b.two_cells(x, w).filter(|&c| b.src2(c) == g) {
            for c2 in b.two_cells(x, w).filter(|&c| b.src2(c) == b.tgt2(c1)) {
                add((h, g), vec![Step::Low(c1), Step::Low(c2)], vec![Step::Low(b.vc(c2, c1))]);
            }
        }
        for d1 in b.two_cells(w, y).filter(|&c| b.src2(c) == h) {
            for d2 in b.two_cells(w, y).filter(|&c| b.src2(c) == b.tgt2(d1)) {
                add((h, g), vec![Step::High(d1), Step::High(d2)], vec![Step::High(b.vc(d2, d1))]);
            }
        }
        // interchange of the two levels
        for c in b.two_cells(x, w).filter(|&c| b.src2(c) == g) {
            for d in b.two_cells(w, y).filter(|&c| b.src2(c) == h) {
                add((h, g), vec![Step::Low(c), Step::High(d)], vec![Step::High(d), Step::Low(c)]);
            }
        }
        for w2 in b.objects() {
            for k in b.one_cells(w2, w) {
                for rest in b.one_cells(x, w2).filter(|&r| b.compose1(k, r) == g) {
                    let cross = Step::Cross { k, rest };
                    // naturality in 2-cells κ: k ⇒ k'
                    for kappa in b.two_cells(w2, w).filter(|&c| b.src2(c) == k) {
                        let k2 = b.tgt2(kappa);
                        add(
                            (h, g),
                            vec![Step::Low(b.whisker_right(kappa, rest)), Step::Cross { k: k2, rest }],
                            vec![cross, Step::High(b.whisker_left(h, kappa))],
                        );
                    }
                    // interchange with cells on either side of the crossing
                    for c in b.two_cells(x, w2).filter(|&c| b.src2(c) == rest) {
                        add(
                            (h, g),
                            vec![cross, Step::Low(c)],
                            vec![Step::Low(b.whisker_left(k, c)), Step::Cross { k, rest: b.tgt2(c) }],
                        );
                    }
                    for d in b.two_cells(w, y).filter(|&c| b.src2(c) == h) {
                        add(
                            (h, g),
                            vec![Step::High(d), cross],
                            vec![cross, Step::High(b.whisker_right(d, k))],
                        );
                    }
                    // compatibility with composition: k = k1∘k2
                    for w3 in b.objects() {
                        for k1 in b.one_cells(w3, w) {
                            for k2 in b.one_cells(w2, w3).filter(|&k2| b.compose1(k1, k2) == k) {
                                add(
                                    (h, g),
                                    vec![cross],
                                    vec![
                                        Step::Cross {
                                            k: k1,
                                            rest: b.compose1(k2, rest),
                                        },
                                        Step::Cross { k: k2, rest },
                                    ],
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    let mut uf = UnionFind::<usize>::new(paths.len());
    for (pi, (start, word)) in paths.iter().enumerate() {
        let mut at = nodes[*start];
        for i in 0..=word.len() {
            let here = node_index[&at];
            for (n, l, r) in &rel {
                if *n != here {
                    continue;
                }
                for (from, to) in [(l, r), (r, l)] {
                    if word.len() >= i + from.len() && word[i..i + from.len()] == from[..] {
                        let mut w2 = word[..i].to_vec();
                        w2.extend_from_slice(to);
                        w2.extend_from_slice(&word[i + from.len()..]);
                        let key = (*start, w2);
                        let j = *path_index
                            .get(&key)
                            .ok_or_else(|| format!("rewritten path {:?} is not enumerated", key.1))?;
                        uf.union(pi, j);
                    }
                }
            }
            if i < word.len() {
                at = apply(b, at, word[i]).expect("path is valid");
            }
        }
    }
    let mut class_of = vec![0; paths.len()];
    let mut roots = HashMap::new();
    for (i, c) in class_of.iter_mut().enumerate() {
        let next = roots.len();
        *c = *roots.entry(uf.find(i)).or_insert(next);
    }
    Ok(FreeCrossHom {
        nodes,
        paths,
        class_of,
        num_classes: roots.len(),
    })
}

/// The outcome of comparing a closed-form cross hom with the presented
/// one.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CylinderComparison {
    pub objects: usize,
    pub paths: usize,
    pub free_classes: usize,
    pub closed_classes: usize,
    pub failures: Vec<String>,
}

impl CylinderComparison {
    pub fn agrees(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Interprets every generator path in the closed form and checks the
/// interpretation is a bijection between classes, hom-set by hom-set.
pub fn compare_cylinder_with_free(cyl: &Cylinder, x: ObjId, y: ObjId, max_len: usize) -> CylinderComparison {
    let b: &FiniteBicategory = &cyl.base;
    let hom = cyl.cross_hom(x, y);
    let mut out = CylinderComparison {
        closed_classes: hom.num_classes(),
        ..Default::default()
    };
    let free = match free_cross_hom(b, x, y, max_len) {
        Ok(f) => f,
        Err(e) => {
            out.failures.push(e);
            return out;
        }
    };
    out.objects = free.nodes.len();
    out.paths = free.paths.len();
    out.free_classes = free.num_classes;
    let closed_nodes: Vec<Node> = hom.objects.clone();
    if closed_nodes != free.nodes {
        out.failures.push("object sets differ".into());
        return out;
    }
    let interpret = |start: usize, word: &[Step]| -> Option<usize> {
        let mut at = free.nodes[start];
        let mut acc = hom.identity_triple(b, start);
        for &s in word {
            let (h, g) = at;
            let next = apply(b, at, s)?;
            let step = match s {
                Step::Low(c) => Triple {
                    source: hom.object(h, g)?,
                    target: hom.object(next.0, next.1)?,
                    k: b.unit_cell(h.source),
                    sigma: c,
                    tau: b.id2(h),
                },
                Step::High(d) => Triple {
                    source: hom.object(h, g)?,
                    target: hom.object(next.0, next.1)?,
                    k: b.unit_cell(h.source),
                    sigma: b.id2(g),
                    tau: d,
                },
                Step::Cross { k, rest } => hom.crossing_triple(b, h, k, rest)?,
            };
            acc = hom.compose_triples(b, &step, &acc);
            at = next;
        }
        hom.class(&acc)
    };
    let mut image: HashMap<usize, usize> = HashMap::new();
    let mut preimage: HashMap<usize, usize> = HashMap::new();
    for (i, (start, word)) in free.paths.iter().enumerate() {
        let Some(c) = interpret(*start, word) else {
            out.failures.push(format!("path {word:?} has no closed-form image"));
            continue;
        };
        let fc = free.class_of[i];
        if let Some(&prev) = image.get(&fc) {
            if prev != c {
                out.failures.push(format!("free class {fc} maps to two closed classes"));
            }
        } else {
            image.insert(fc, c);
        }
        if let Some(&prev) = preimage.get(&c) {
            if prev != fc {
                out.failures
                    .push(format!("closed class {c} is hit by two free classes {prev} and {fc}"));
            }
        } else {
            preimage.insert(c, fc);
        }
    }
    if preimage.len() != hom.num_classes() {
        out.failures.push(format!(
            "{} of {} closed classes are not hit by any path",
            hom.num_classes() - preimage.len(),
            hom.num_classes()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::Strict2Category;
    use crate::corpus;
    use crate::cylinder::lax_cylinder;
    use std::sync::Arc;

    fn agrees_everywhere(b: Arc<FiniteBicategory>) -> usize {
        let base = Strict2Category::new(b).unwrap();
        let cyl = lax_cylinder(&base).unwrap();
        let mut classes = 0;
        for x in base.objects() {
            for y in base.objects() {
                let cmp = compare_cylinder_with_free(&cyl, x, y, 16);
                assert!(cmp.agrees(), "{:?}", cmp.failures);
                classes += cmp.free_classes;
            }
        }
        classes
    }

    #[test]
    fn cylinders_match_their_presentations() {
        assert_eq!(agrees_everywhere(corpus::walking_arrow()), 1 + 3 + 1);
        assert!(agrees_everywhere(corpus::walking_two_cell()) > 5);
        agrees_everywhere(corpus::ordinal(2));
    }
}

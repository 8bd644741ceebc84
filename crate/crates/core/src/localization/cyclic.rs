//! `L_cyc: Ξ_pl → Λ`.
//!
//! Covariantly, the areas around a tree sit on a circle. Contravariantly the
//! leaves do; the leaf between areas `j` and `j + 1` gets the label `j`, so
//! that the two descriptions are exchanged by [`lambda_dual`](crate::targets::lambda_dual).

use itertools::Itertools;

use super::plane::area_images;
use crate::error::{Error, Result};
use crate::hom::{CycTreeMorphism};
use crate::trees::{arrow, ArrowStructure, CycTree, Dir};
use crate::targets::CycMap;

pub fn lcyc_obj(t: &CycTree) -> usize {
    t.arity()
}

/// `L_cyc(α)`, tracking areas: the representative of the source maps into the
/// predecessor tree of the image of its root arrow, whose areas are a run of
/// consecutive areas of the target.
pub fn lcyc_map(alpha: &CycTreeMorphism) -> Result<CycMap> {
    if !alpha.is_valid() {
        return Err(Error::InvalidMorphism(format!("{alpha:?}")));
    }
    let (s, t) = (alpha.source(), alpha.target());
    let beta = alpha.apply(arrow(0, Dir::Down));
    let p = t.arrows().predecessors(beta);
    let plane = (0..s.rep().num_edges())
        .map(|e| {
            p.edge_of_arrow(alpha.apply(arrow(e, Dir::Down)))
                .ok_or_else(|| Error::Inconsistent(format!("{alpha:?} leaves the predecessors of its root image")))
        })
        .collect::<Result<Vec<_>>>()?;
    let offset = t.arrows().area_offset(beta) as i64;
    let lift = area_images(s.rep(), &p.tree, &plane).into_iter().map(|v| v as i64 + offset).collect();
    CycMap::from_lift(s.arity(), t.arity(), lift)
}

/// Label of the leaf arrow at boundary position `pos`.
pub(crate) fn leaf_label(arity: usize, pos: usize) -> usize {
    (pos + arity) % (arity + 1)
}

pub(crate) fn leaf_at_label(s: &ArrowStructure, label: usize) -> usize {
    s.leaf_arrow_at((label + 1) % (s.arity() + 1))
}

/// For every leaf of the target, the leaf `b` of the source whose image has it
/// as a predecessor, and its position among the leaves of that predecessor tree.
pub(crate) fn leaf_preimages(s: &ArrowStructure, t: &ArrowStructure, map: &[usize]) -> Result<Vec<(usize, usize)>> {
    (0..=t.arity())
        .map(|j| {
            let a = leaf_at_label(t, j);
            let found: Vec<(usize, usize)> = (0..=s.arity())
                .filter_map(|i| {
                    let p = t.predecessors(map[leaf_at_label(s, i)]);
                    p.edge_of_arrow(a).map(|e| (i, p.tree.edge(e).leaf_index.unwrap_or(usize::MAX)))
                })
                .collect();
            match found[..] {
                [(i, rank)] if rank != usize::MAX => Ok((i, rank)),
                _ => Err(Error::Inconsistent(format!("leaf {j} has {} preimages", found.len()))),
            }
        })
        .collect()
}

/// `L_cyc(α)` on leaves, as a map `[n] → [m]` of Λ.
pub fn lcyc_map_contravariant(alpha: &CycTreeMorphism) -> Result<CycMap> {
    if !alpha.is_valid() {
        return Err(Error::InvalidMorphism(format!("{alpha:?}")));
    }
    let (s, t) = (alpha.source(), alpha.target());
    let (m, n) = (s.arity() as i64, t.arity() as i64);
    let pre = leaf_preimages(s.arrows(), t.arrows(), alpha.map())?;
    let g: Vec<i64> = pre.iter().map(|&(i, _)| i as i64).collect();
    let steps: Vec<i64> = (0..=n as usize).map(|j| (g[(j + 1) % g.len()] - g[j]).rem_euclid(m + 1)).collect();
    let mut lift = vec![g[0]];
    match steps.iter().sum::<i64>() {
        total if total == m + 1 => {
            for d in &steps[..n as usize] {
                lift.push(lift.last().unwrap() + d);
            }
        }
        0 => {
            // everything lands on one leaf; wrap around just before its first predecessor
            let first = pre.iter().position(|&(_, rank)| rank == 0).unwrap_or(0);
            lift.extend((1..=n as usize).map(|j| if first > 0 && j >= first { g[0] + m + 1 } else { g[0] }));
        }
        _ => return Err(Error::Inconsistent(format!("{alpha:?} winds more than once around the circle"))),
    }
    // within each fibre the lift must list the leaves in their planar order
    // shift each j by whole turns so that its lift is g(j) itself
    let key = |j: usize| (g[j], j as i64 - (lift[j] - g[j]) / (m + 1) * (n + 1));
    for (_, fibre) in &(0..=n as usize).sorted_by_key(|&j| key(j)).chunk_by(|&j| g[j]) {
        let ranks: Vec<usize> = fibre.map(|j| pre[j].1).collect();
        if ranks.iter().enumerate().any(|(k, &r)| k != r) {
            return Err(Error::Inconsistent(format!("{alpha:?}: fibre order {ranks:?}")));
        }
    }
    CycMap::from_lift(t.arity(), s.arity(), lift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::{hom, ForgetRoot};
    use crate::localization::plane::lpl_map;
    use crate::targets::{delta_to_lambda, lambda_dual};
    use crate::trees::{enumerate_cyc, enumerate_trees, Tree};

    #[test]
    fn eta_has_two_areas() {
        assert_eq!(lcyc_obj(&CycTree::from_tree(&Tree::eta())), 1);
        assert_eq!(lcyc_obj(&CycTree::from_tree(&Tree::corolla(0))), 0);
    }

    #[test]
    fn predecessor_areas_are_consecutive() {
        for t in enumerate_trees(3, 3) {
            let s = ArrowStructure::new(&t);
            let n = t.arity();
            for b in 0..s.num_arrows() {
                let p = s.predecessors(b);
                if p.tree.is_eta() {
                    continue;
                }
                for (k, &l) in p.tree.leaves().iter().enumerate() {
                    let pos = s.boundary_position(p.arrows[l]).unwrap();
                    assert_eq!(pos, (s.area_offset(b) + k + 1) % (n + 1), "{t} arrow {b}");
                }
            }
        }
    }

    #[test]
    fn covariant_and_contravariant_are_dual() {
        let trees = enumerate_cyc(&enumerate_trees(3, 3));
        for s in &trees {
            for t in &trees {
                for alpha in hom(s, t) {
                    let cov = lcyc_map(&alpha).unwrap();
                    assert_eq!(lambda_dual(&cov), lcyc_map_contravariant(&alpha).unwrap(), "{alpha:?}");
                }
            }
        }
    }

    #[test]
    fn plane_maps_land_in_delta_up_to_rotation() {
        let trees = enumerate_trees(3, 3);
        for s in &trees {
            for t in &trees {
                for alpha in hom(s, t) {
                    let image = lcyc_map(&ForgetRoot::apply(&alpha)).unwrap();
                    let (rs, rt) = (super::super::cyc_rotation(s), super::super::cyc_rotation(t));
                    let lhs = CycMap::compose(&image, &rs).unwrap();
                    let rhs = CycMap::compose(&rt, &delta_to_lambda(&lpl_map(&alpha).unwrap())).unwrap();
                    assert_eq!(lhs, rhs, "{alpha:?}");
                }
            }
        }
    }
}

//! Hom-sets of plane rootable and rootable trees, on arrows.

use crate::error::{Error, Result};
use crate::trees::{arrow, dual, ArrowId, ArrowStructure, CycTree, Dir, RootableTree, Tree};

use super::{edge_maps, parse_edge, TreeObject};

/// Duality compatible, and every vertex generator (for every choice of
/// output arrow) lands on an operation of the target.
fn arrow_map_is_valid(s: &ArrowStructure, t: &ArrowStructure, map: &[ArrowId], unordered: bool) -> bool {
    if map.len() != s.num_arrows() || map.iter().any(|&a| a >= t.num_arrows()) {
        return false;
    }
    if (0..map.len()).any(|a| map[dual(a)] != dual(map[a])) {
        return false;
    }
    (0..s.num_arrows()).filter(|&a| !s.is_leaf_arrow(a)).all(|a| {
        let p = s.predecessors(a);
        let children = p.tree.inputs(0);
        let q = t.predecessors(map[a]);
        let Some(inputs) = children
            .iter()
            .map(|&c| q.edge_of_arrow(map[p.arrows[c]]))
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        if unordered {
            q.tree.is_operation_unordered(0, &inputs)
        } else {
            q.tree.is_operation(0, &inputs)
        }
    })
}

/// Choose the image of the representative's root arrow, then map the
/// representative into that arrow's predecessor tree, root to root.
fn arrow_maps(s: &ArrowStructure, t: &ArrowStructure, unordered: bool) -> Vec<Vec<ArrowId>> {
    let mut out = Vec::new();
    for beta in 0..t.num_arrows() {
        let p = t.predecessors(beta);
        for edges in edge_maps(s.rep(), &p.tree, [0], unordered) {
            let mut map = vec![0; s.num_arrows()];
            for (e, &x) in edges.iter().enumerate() {
                map[arrow(e, Dir::Down)] = p.arrows[x];
                map[arrow(e, Dir::Up)] = dual(p.arrows[x]);
            }
            out.push(map);
        }
    }
    out
}

fn arrow_map_is_boundary_preserving(s: &ArrowStructure, t: &ArrowStructure, map: &[ArrowId]) -> bool {
    (0..s.num_arrows()).all(|a| !s.is_leaf_arrow(a) || t.is_leaf_arrow(map[a]))
}

pub(crate) fn arrow_name(rep: &Tree, a: ArrowId) -> String {
    let dir = match crate::trees::dir_of(a) {
        Dir::Down => "down",
        Dir::Up => "up",
    };
    format!("{}:{dir}", rep.path(a / 2).to_dotted())
}

pub(crate) fn parse_arrow(rep: &Tree, s: &str) -> Result<ArrowId> {
    let (path, dir) = s
        .rsplit_once(':')
        .ok_or_else(|| Error::Parse(format!("arrow {s:?} should look like \"<path>:down\" or \"<path>:up\"")))?;
    let dir = match dir {
        "down" => Dir::Down,
        "up" => Dir::Up,
        other => return Err(Error::Parse(format!("unknown orientation {other:?}"))),
    };
    Ok(arrow(parse_edge(rep, path)?, dir))
}

impl TreeObject for CycTree {
    const KIND: &'static str = "cyc";

    fn rep(&self) -> &Tree {
        CycTree::rep(self)
    }

    fn num_colors(&self) -> usize {
        self.num_arrows()
    }

    fn is_valid_map(&self, target: &Self, map: &[usize]) -> bool {
        arrow_map_is_valid(self.arrows(), target.arrows(), map, false)
    }

    fn hom_maps(&self, target: &Self) -> Vec<Vec<usize>> {
        arrow_maps(self.arrows(), target.arrows(), false)
    }

    fn is_boundary_preserving_map(&self, target: &Self, map: &[usize]) -> bool {
        arrow_map_is_boundary_preserving(self.arrows(), target.arrows(), map)
    }

    fn present(t: &Tree) -> (Self, Vec<usize>) {
        CycTree::forget_root(t)
    }

    fn color_name(&self, c: usize) -> String {
        arrow_name(self.rep(), c)
    }

    fn parse_color(&self, s: &str) -> Result<usize> {
        parse_arrow(self.rep(), s)
    }
}

impl TreeObject for RootableTree {
    const KIND: &'static str = "rootable";

    fn rep(&self) -> &Tree {
        RootableTree::rep(self)
    }

    fn num_colors(&self) -> usize {
        self.num_arrows()
    }

    fn is_valid_map(&self, target: &Self, map: &[usize]) -> bool {
        arrow_map_is_valid(self.arrows(), target.arrows(), map, true)
    }

    fn hom_maps(&self, target: &Self) -> Vec<Vec<usize>> {
        arrow_maps(self.arrows(), target.arrows(), true)
    }

    fn is_boundary_preserving_map(&self, target: &Self, map: &[usize]) -> bool {
        arrow_map_is_boundary_preserving(self.arrows(), target.arrows(), map)
    }

    fn present(t: &Tree) -> (Self, Vec<usize>) {
        RootableTree::from_tree_with_map(t)
    }

    fn color_name(&self, c: usize) -> String {
        arrow_name(self.rep(), c)
    }

    fn parse_color(&self, s: &str) -> Result<usize> {
        parse_arrow(self.rep(), s)
    }
}

#[cfg(test)]
mod tests {
    use itertools::Itertools;

    use super::*;
    use crate::hom::{hom, Morphism};
    use crate::trees::enumerate_trees;

    #[test]
    fn corolla_automorphisms_are_rotations() {
        for n in 0..5 {
            let c = CycTree::from_tree(&Tree::corolla(n));
            let bp = |ms: Vec<Morphism<_>>| ms.into_iter().filter(|m| m.is_boundary_preserving()).count();
            assert_eq!(bp(hom(&c, &c)), n + 1);
            let r = RootableTree::from_tree(&Tree::corolla(n));
            let bp_abs = hom(&r, &r).into_iter().filter(|m| m.is_boundary_preserving()).count();
            assert_eq!(bp_abs, (1..=n + 1).product::<usize>());
        }
    }

    #[test]
    fn eta_maps_to_every_arrow() {
        let eta = CycTree::from_tree(&Tree::eta());
        for t in enumerate_trees(3, 3) {
            let c = CycTree::from_tree(&t);
            assert_eq!(hom(&eta, &c).len(), c.num_arrows());
        }
    }

    #[test]
    fn cyclic_hom_agrees_with_brute_force() {
        let trees: Vec<CycTree> = crate::trees::enumerate_cyc(&enumerate_trees(2, 2))
            .into_iter()
            .filter(|t| t.num_arrows() <= 8)
            .collect();
        for s in &trees {
            for t in &trees {
                let mut brute: Vec<Vec<usize>> = (0..s.rep().num_edges())
                    .map(|_| 0..t.num_arrows())
                    .multi_cartesian_product()
                    .map(|down| {
                        let mut m = vec![0; s.num_arrows()];
                        for (e, &x) in down.iter().enumerate() {
                            m[arrow(e, Dir::Down)] = x;
                            m[arrow(e, Dir::Up)] = dual(x);
                        }
                        m
                    })
                    .filter(|m| s.is_valid_map(t, m))
                    .collect();
                let mut found = s.hom_maps(t);
                brute.sort();
                found.sort();
                assert_eq!(found, brute, "{s} → {t}");
            }
        }
    }

    #[test]
    fn arrow_names_round_trip() {
        let t = CycTree::from_tree(&Tree::parse("((ee)e)").unwrap());
        for a in 0..t.num_arrows() {
            assert_eq!(t.parse_color(&t.color_name(a)).unwrap(), a);
        }
        assert!(Morphism::new(t.clone(), t.clone(), vec![0; t.num_arrows()]).is_err());
    }
}

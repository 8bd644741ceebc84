//! `L_pl: Ω_pl → Δ`.

use crate::error::{Error, Result};
use crate::hom::TreeMorphism;
use crate::targets::{cut_dual_map, DeltaMap, LinOrdMap};
use crate::trees::{EdgeId, Tree};

/// The areas around `t`, numbered clockwise from the root: `[arity]`.
pub fn lpl_obj(t: &Tree) -> usize {
    t.arity()
}

/// Covariant description on a raw edge map: area `0` goes to the area left
/// of the image of the root, the area right of leaf `j` to the area right of
/// the image of that leaf.
pub(crate) fn area_images(s: &Tree, t: &Tree, map: &[EdgeId]) -> Vec<usize> {
    let mut values = vec![t.edge(map[0]).left];
    values.extend(s.leaves().iter().map(|&l| t.edge(map[l]).right));
    values
}

/// `L_pl(α)`, tracking areas.
pub fn lpl_map(alpha: &TreeMorphism) -> Result<DeltaMap> {
    if !alpha.is_valid() {
        return Err(Error::InvalidMorphism(format!("{alpha:?}")));
    }
    let (s, t) = (alpha.source(), alpha.target());
    DeltaMap::new(s.arity(), t.arity(), area_images(s, t, alpha.map()))
}

/// The leaves of the target split into those left of the image of the root,
/// those above it, and those right of it. A leaf above it lies over the image
/// of exactly one leaf of the source.
pub fn lpl_leaf_map(alpha: &TreeMorphism) -> Result<LinOrdMap> {
    if !alpha.is_valid() {
        return Err(Error::InvalidMorphism(format!("{alpha:?}")));
    }
    let (s, t) = (alpha.source(), alpha.target());
    let root = alpha.apply(0);
    let info = t.edge(root);
    let mut values = Vec::new();
    for &l in &t.leaves()[info.left..info.right] {
        let below: Vec<usize> =
            (0..s.arity()).filter(|&j| t.is_weakly_below(alpha.apply(s.leaves()[j]), l)).collect();
        match below[..] {
            [j] => values.push(j),
            _ => {
                return Err(Error::Inconsistent(format!(
                    "leaf {} of {t} lies over {} leaf images of {alpha:?}",
                    t.path(l),
                    below.len()
                )))
            }
        }
    }
    LinOrdMap::new(t.arity(), s.arity(), info.left, values)
}

/// `L_pl(α)` through the leaves and cut duality.
pub fn lpl_map_contravariant(alpha: &TreeMorphism) -> Result<DeltaMap> {
    Ok(cut_dual_map(&lpl_leaf_map(alpha)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::{hom, Morphism};
    use crate::trees::{enumerate_trees, EdgeRef};

    fn example() -> TreeMorphism {
        let s = Tree::parse("((eeee))").unwrap();
        let t = Tree::parse("((ee)(ee)())").unwrap();
        let pairs = [("", ""), ("0", ""), ("0.0", "0.0"), ("0.1", "0.1"), ("0.2", "1"), ("0.3", "2")];
        let mut map = vec![0; s.num_edges()];
        for (a, b) in pairs {
            let a = s.id_of(&EdgeRef::parse_dotted(a).unwrap()).unwrap();
            map[a] = t.id_of(&EdgeRef::parse_dotted(b).unwrap()).unwrap();
        }
        Morphism::new(s, t, map).unwrap()
    }

    #[test]
    fn objects() {
        assert_eq!(lpl_obj(&Tree::corolla(3)), 3);
        assert_eq!(lpl_obj(&Tree::eta()), 1);
        assert_eq!(lpl_obj(&Tree::corolla(0)), 0);
    }

    #[test]
    fn worked_example() {
        let alpha = example();
        assert_eq!(lpl_map(&alpha).unwrap().values, vec![0, 1, 2, 4, 4]);
        assert_eq!(lpl_map_contravariant(&alpha).unwrap().values, vec![0, 1, 2, 4, 4]);
    }

    #[test]
    fn linear_trees_go_to_the_identity_of_one() {
        for a in 1..4 {
            for b in 1..4 {
                for alpha in hom(&Tree::linear(a), &Tree::linear(b)) {
                    assert_eq!(lpl_map(&alpha).unwrap(), DeltaMap::identity(1));
                }
            }
        }
    }

    #[test]
    fn both_descriptions_agree() {
        let trees = enumerate_trees(3, 3);
        for s in &trees {
            for t in &trees {
                for alpha in hom(s, t) {
                    assert_eq!(lpl_map(&alpha).unwrap(), lpl_map_contravariant(&alpha).unwrap(), "{alpha:?}");
                }
            }
        }
    }
}

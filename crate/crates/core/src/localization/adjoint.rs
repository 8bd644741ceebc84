//! The left adjoint `(T, f) ↦ T_f` to the inclusion of boundary preserving
//! maps: corollas glued onto the leaves and below the root of `T`.

use super::plane::lpl_map;
use crate::error::{Error, Result};
use crate::hom::{Morphism, TreeMorphism, TreeObject};
use crate::targets::DeltaMap;
use crate::trees::{Shape, Tree};

fn corolla(n: usize) -> Shape {
    Shape::Vertex(vec![Shape::Eta; n])
}

fn glue_leaves(shape: &Shape, next: &mut usize, f: &DeltaMap) -> Shape {
    match shape {
        Shape::Eta => {
            *next += 1;
            corolla(f.apply(*next) - f.apply(*next - 1))
        }
        Shape::Vertex(children) => Shape::Vertex(children.iter().map(|c| glue_leaves(c, next, f)).collect()),
    }
}

/// `T_f` and the inclusion `f_T: T → T_f`.
pub fn build_tf(t: &Tree, f: &DeltaMap) -> Result<(Tree, TreeMorphism)> {
    if f.n_src != t.arity() {
        return Err(Error::ArityMismatch { expected: t.arity(), actual: f.n_src });
    }
    f.check()?;
    let (m, n) = (f.n_src, f.n_dst);
    let mut root = vec![Shape::Eta; f.apply(0)];
    root.push(glue_leaves(t.shape(), &mut 0, f));
    root.extend(vec![Shape::Eta; n - f.apply(m)]);
    let tf = Tree::from_shape(Shape::Vertex(root));
    // the copy of T keeps its paths, below the special leaf
    let map = (0..t.num_edges())
        .map(|e| {
            let mut path = vec![f.apply(0)];
            path.extend(&t.path(e).0);
            tf.id_of(&crate::trees::EdgeRef(path)).expect("T sits inside T_f")
        })
        .collect();
    let unit = Morphism::new(t.clone(), tf.clone(), map)?;
    Ok((tf, unit))
}

/// The boundary preserving `α^bp: T_f → S` with `α^bp ∘ f_T = α`, where
/// `f = L_pl(α)`.
pub fn factor_through_tf(alpha: &TreeMorphism, f: &DeltaMap) -> Result<TreeMorphism> {
    if lpl_map(alpha)? != *f {
        return Err(Error::Precondition(format!("L_pl of {alpha:?} is not {f:?}")));
    }
    let (t, s) = (alpha.source(), alpha.target());
    let (tf, unit) = build_tf(t, f)?;
    let mut map = vec![usize::MAX; tf.num_edges()];
    // the leaves of T_f and of S are in the same order
    for (k, &l) in tf.leaves().iter().enumerate() {
        map[l] = s.leaves()[k];
    }
    map[0] = 0;
    for e in 0..t.num_edges() {
        map[unit.apply(e)] = alpha.apply(e);
    }
    if map.contains(&usize::MAX) {
        return Err(Error::Inconsistent(format!("{tf} has an edge outside T and the boundary")));
    }
    let bp = Morphism::new(tf, s.clone(), map)
        .map_err(|e| Error::Inconsistent(format!("factorization of {alpha:?}: {e}")))?;
    if !bp.is_boundary_preserving() || Morphism::compose(&bp, &unit)? != *alpha {
        return Err(Error::Inconsistent(format!("factorization of {alpha:?} fails the triangle")));
    }
    Ok(bp)
}

/// Every boundary preserving `g: T_f → S` with `g ∘ f_T = α`, by search.
pub fn factorizations_by_search(alpha: &TreeMorphism, f: &DeltaMap) -> Result<Vec<TreeMorphism>> {
    let (tf, unit) = build_tf(alpha.source(), f)?;
    let target = alpha.target();
    Ok(crate::hom::edge_maps(&tf, target, [0], false)
        .into_iter()
        .filter(|map| tf.is_boundary_preserving_map(target, map))
        .filter(|map| (0..alpha.source().num_edges()).all(|e| map[unit.apply(e)] == alpha.apply(e)))
        .map(|map| Morphism::new_unchecked(tf.clone(), target.clone(), map))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::hom;

    #[test]
    fn identity_glues_unary_corollas() {
        let t = Tree::parse("((ee)e)").unwrap();
        let (tf, unit) = build_tf(&t, &DeltaMap::identity(3)).unwrap();
        assert_eq!(tf.code(), "((((e)(e))(e)))");
        assert!(lpl_map(&unit).unwrap().is_identity());
    }

    #[test]
    fn eta_over_an_interval() {
        let f = DeltaMap::new(1, 3, vec![0, 3]).unwrap();
        let (tf, unit) = build_tf(&Tree::eta(), &f).unwrap();
        assert_eq!(tf.code(), "((eee))");
        assert_eq!(unit.map(), &[1]);
        assert_eq!(tf.arity(), 3);
    }

    #[test]
    fn arity_is_the_target() {
        let t = Tree::parse("((e)e())").unwrap();
        for n in 0..5 {
            for f in DeltaMap::all(2, n) {
                let (tf, unit) = build_tf(&t, &f).unwrap();
                assert_eq!(tf.arity(), n);
                assert_eq!(lpl_map(&unit).unwrap(), f);
            }
        }
        assert!(build_tf(&t, &DeltaMap::identity(3)).is_err());
    }

    #[test]
    fn collapse_factors_through_itself() {
        let s = Tree::parse("((ee)(e))").unwrap();
        let c = Tree::corolla(3);
        let alpha = hom(&c, &s).into_iter().find(|a| a.is_boundary_preserving()).unwrap();
        let f = DeltaMap::identity(3);
        let bp = factor_through_tf(&alpha, &f).unwrap();
        let (_, unit) = build_tf(&c, &f).unwrap();
        assert_eq!(Morphism::compose(&bp, &unit).unwrap(), alpha);
        assert_eq!(factorizations_by_search(&alpha, &f).unwrap().len(), 1);
    }
}

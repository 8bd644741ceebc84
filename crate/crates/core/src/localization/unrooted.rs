//! `L_sym: Ω_sym → Fin_*^op` and `L_abs: Ξ → Fin_ne^op`.

use super::cyclic::leaf_preimages;
use crate::error::{Error, Result};
use crate::hom::{RootableTreeMorphism, SymTreeMorphism};
use crate::targets::{FinMap, PointedMap};
use crate::trees::{RootableTree, SymTree};

/// External edges pointed at the root: `{0 = root, 1..=arity}`.
pub fn lsym_obj(t: &SymTree) -> usize {
    t.arity()
}

/// Leaf `e` of the target goes to the leaf `d` of the source with `α(d)`
/// weakly below `e`, and to the basepoint if there is none.
pub fn lsym_map(alpha: &SymTreeMorphism) -> Result<PointedMap> {
    if !alpha.is_valid() {
        return Err(Error::InvalidMorphism(format!("{alpha:?}")));
    }
    let (s, t) = (alpha.source().rep(), alpha.target().rep());
    let values = t
        .leaves()
        .iter()
        .map(|&e| {
            let below: Vec<usize> = (0..s.arity()).filter(|&d| t.is_weakly_below(alpha.apply(s.leaves()[d]), e)).collect();
            match below[..] {
                [] => Ok(0),
                [d] => Ok(d + 1),
                _ => Err(Error::Inconsistent(format!("leaf {} of {t} lies over several leaf images", t.path(e)))),
            }
        })
        .collect::<Result<Vec<_>>>()?;
    PointedMap::new(t.arity(), s.arity(), values)
}

/// All external edges, which are leaves once the root is forgotten.
pub fn labs_obj(t: &RootableTree) -> usize {
    t.arity() + 1
}

/// Leaf `a` of the target goes to the unique leaf `b` of the source having
/// `a` among the predecessors of `α(b)`.
pub fn labs_map(alpha: &RootableTreeMorphism) -> Result<FinMap> {
    if !alpha.is_valid() {
        return Err(Error::InvalidMorphism(format!("{alpha:?}")));
    }
    let (s, t) = (alpha.source(), alpha.target());
    let pre = leaf_preimages(s.arrows(), t.arrows(), alpha.map())?;
    FinMap::new(t.arity() + 1, s.arity() + 1, pre.into_iter().map(|(b, _)| b).collect())
}

//! Symmetric, plane rootable and rootable trees, stored through canonical
//! plane rooted representatives.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Serialize, Serializer};

use super::arrows::{arrow, dual, ArrowId, ArrowStructure, Dir};
use super::plane::{EdgeId, Shape, Tree};
use crate::error::{Error, Result};

/// Reorder children at every vertex so that the encoding is minimal.
///
/// Returns the sorted tree and, for each of its edges (pre-order), the edge
/// of `t` it came from.
pub fn sort_children(t: &Tree) -> (Tree, Vec<EdgeId>) {
    fn go(t: &Tree, e: EdgeId) -> (String, Shape, Vec<EdgeId>) {
        match &t.edge(e).children {
            None => ("e".into(), Shape::Eta, vec![e]),
            Some(children) => {
                let mut parts: Vec<_> = children.iter().map(|&c| go(t, c)).collect();
                // codes are prefix-free, so plain lexicographic order minimises the concatenation
                parts.sort_by(|a, b| a.0.cmp(&b.0));
                let mut code = String::from("(");
                let mut shapes = Vec::with_capacity(parts.len());
                let mut order = vec![e];
                for (c, s, o) in parts {
                    code.push_str(&c);
                    shapes.push(s);
                    order.extend(o);
                }
                code.push(')');
                (code, Shape::Vertex(shapes), order)
            }
        }
    }
    let (_, shape, order) = go(t, 0);
    (Tree::from_shape(shape), order)
}

fn invert(order: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        inv[old] = new;
    }
    inv
}

/// The plane rooted tree obtained by re-rooting at boundary position `pos`
/// (0 is the current root end, `i` the `i`-th leaf), reading children
/// clockwise.
pub fn reroot(t: &Tree, pos: usize) -> Result<Tree> {
    if pos > t.arity() {
        return Err(Error::OutOfBounds(format!("boundary position {pos} of a tree of arity {}", t.arity())));
    }
    let s = ArrowStructure::new(t);
    Ok(s.predecessors(s.root_arrow_at(pos)).tree.clone())
}

/// A rooted tree without planar structure, stored via its sorted representative.
#[derive(Clone)]
pub struct SymTree {
    rep: Tree,
}

impl SymTree {
    /// Canonical symmetric tree together with the image of every edge of `t`.
    pub fn symmetrize(t: &Tree) -> (SymTree, Vec<EdgeId>) {
        let (rep, order) = sort_children(t);
        (SymTree { rep }, invert(&order))
    }

    pub fn from_tree(t: &Tree) -> SymTree {
        Self::symmetrize(t).0
    }

    pub fn rep(&self) -> &Tree {
        &self.rep
    }

    pub fn arity(&self) -> usize {
        self.rep.arity()
    }
}

/// Shared storage for the two unrooted flavours.
#[derive(Clone)]
struct Unrooted {
    rep: Tree,
    arrows: Arc<ArrowStructure>,
}

impl Unrooted {
    fn new(rep: Tree) -> Self {
        let arrows = Arc::new(ArrowStructure::new(&rep));
        Unrooted { rep, arrows }
    }

    /// Pick the minimal representative among all rootings (optionally sorted)
    /// and return the arrow map from `t` to it.
    fn canonicalize(t: &Tree, sorted: bool) -> (Unrooted, Vec<ArrowId>) {
        let s = ArrowStructure::new(t);
        let mut best: Option<(Tree, Vec<ArrowId>)> = None;
        for pos in 0..=t.arity() {
            let p = s.predecessors(s.root_arrow_at(pos));
            let (cand, carried) = if sorted {
                let (tree, order) = sort_children(&p.tree);
                let carried = order.iter().map(|&e| p.arrows[e]).collect();
                (tree, carried)
            } else {
                (p.tree.clone(), p.arrows.clone())
            };
            if best.as_ref().is_none_or(|(b, _)| cand.cmp(b) == Ordering::Less) {
                best = Some((cand, carried));
            }
        }
        let (rep, carried) = best.expect("every tree has a boundary position");
        // new edge e carries old arrow carried[e] as its Down arrow
        let mut map = vec![0; 2 * t.num_edges()];
        for (e, &old) in carried.iter().enumerate() {
            map[old] = arrow(e, Dir::Down);
            map[dual(old)] = arrow(e, Dir::Up);
        }
        (Unrooted::new(rep), map)
    }
}

/// A plane rootable tree: plane, with at least one external edge, and no
/// distinguished root. Stored via its rotation-minimal representative.
#[derive(Clone)]
pub struct CycTree(Unrooted);

impl CycTree {
    /// Forget the root of `t`; also returns where each arrow of `t` went.
    pub fn forget_root(t: &Tree) -> (CycTree, Vec<ArrowId>) {
        let (u, map) = Unrooted::canonicalize(t, false);
        (CycTree(u), map)
    }

    pub fn from_tree(t: &Tree) -> CycTree {
        Self::forget_root(t).0
    }

    pub fn rep(&self) -> &Tree {
        &self.0.rep
    }

    pub fn arrows(&self) -> &ArrowStructure {
        &self.0.arrows
    }

    pub fn num_arrows(&self) -> usize {
        2 * self.0.rep.num_edges()
    }

    /// Number of boundary positions minus one.
    pub fn arity(&self) -> usize {
        self.0.rep.arity()
    }
}

/// A rootable tree: neither plane nor rooted.
#[derive(Clone)]
pub struct RootableTree(Unrooted);

impl RootableTree {
    pub fn from_tree_with_map(t: &Tree) -> (RootableTree, Vec<ArrowId>) {
        let (u, map) = Unrooted::canonicalize(t, true);
        (RootableTree(u), map)
    }

    pub fn from_tree(t: &Tree) -> RootableTree {
        Self::from_tree_with_map(t).0
    }

    /// Forget the planar structure of a plane rootable tree.
    pub fn from_cyc(t: &CycTree) -> (RootableTree, Vec<ArrowId>) {
        Self::from_tree_with_map(t.rep())
    }

    pub fn rep(&self) -> &Tree {
        &self.0.rep
    }

    pub fn arrows(&self) -> &ArrowStructure {
        &self.0.arrows
    }

    pub fn num_arrows(&self) -> usize {
        2 * self.0.rep.num_edges()
    }

    pub fn arity(&self) -> usize {
        self.0.rep.arity()
    }
}

macro_rules! by_representative {
    ($ty:ty, $kind:literal) => {
        impl PartialEq for $ty {
            fn eq(&self, other: &Self) -> bool {
                self.rep() == other.rep()
            }
        }
        impl Eq for $ty {}
        impl Hash for $ty {
            fn hash<H: Hasher>(&self, state: &mut H) {
                self.rep().hash(state)
            }
        }
        impl Ord for $ty {
            fn cmp(&self, other: &Self) -> Ordering {
                self.rep().cmp(other.rep())
            }
        }
        impl PartialOrd for $ty {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }
        impl fmt::Debug for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", $kind, self.rep().code())
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}:{}", $kind, self.rep().code())
            }
        }
        impl Serialize for $ty {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                serde_json::json!({ "kind": $kind, "tree": self.rep().shape().to_json() })
                    .serialize(serializer)
            }
        }
    };
}

by_representative!(SymTree, "sym");
by_representative!(CycTree, "cyc");
by_representative!(RootableTree, "rootable");

/// Parse `{"kind": ..., "tree": ...}`, canonicalizing the given representative.
pub fn parse_tagged(value: &serde_json::Value) -> Result<(String, Tree)> {
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| Error::Parse("missing \"kind\" tag".into()))?;
    let tree = value.get("tree").ok_or_else(|| Error::Parse("missing \"tree\"".into()))?;
    Ok((kind.to_string(), Tree::from_shape(Shape::from_json(tree)?)))
}

pub fn enumerate_sym(plane: &[Tree]) -> Vec<SymTree> {
    dedup_sorted(plane.iter().map(SymTree::from_tree))
}

pub fn enumerate_cyc(plane: &[Tree]) -> Vec<CycTree> {
    dedup_sorted(plane.iter().map(CycTree::from_tree))
}

pub fn enumerate_rootable(plane: &[Tree]) -> Vec<RootableTree> {
    dedup_sorted(plane.iter().map(RootableTree::from_tree))
}

fn dedup_sorted<T: Ord>(items: impl Iterator<Item = T>) -> Vec<T> {
    let mut v: Vec<T> = items.collect();
    v.sort();
    v.dedup();
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::plane::enumerate_trees;

    #[test]
    fn mirror_trees_symmetrize_to_the_same_tree() {
        let a = Tree::parse("((ee)e)").unwrap();
        let b = Tree::parse("(e(ee))").unwrap();
        assert_ne!(a, b);
        assert_eq!(SymTree::from_tree(&a), SymTree::from_tree(&b));
        assert_eq!(SymTree::from_tree(&Tree::eta()).rep(), &Tree::eta());
    }

    #[test]
    fn symmetrize_is_idempotent() {
        for t in enumerate_trees(3, 3) {
            let s = SymTree::from_tree(&t);
            assert_eq!(SymTree::from_tree(s.rep()).rep(), s.rep());
        }
    }

    #[test]
    fn corollas_are_rotation_invariant() {
        for n in 0..5 {
            let c = Tree::corolla(n);
            let base = CycTree::from_tree(&c);
            for pos in 0..=n {
                assert_eq!(CycTree::from_tree(&reroot(&c, pos).unwrap()), base);
            }
        }
    }

    #[test]
    fn arrow_maps_are_bijections() {
        for t in enumerate_trees(3, 3) {
            let (_, map) = CycTree::forget_root(&t);
            let mut seen = map.clone();
            seen.sort_unstable();
            assert_eq!(seen, (0..map.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn plane_rootable_distinguishes_what_rootable_identifies() {
        // rotation cannot turn one into the other, reordering can
        let a = Tree::parse("((ee)(e)e)").unwrap();
        let b = Tree::parse("((e)(ee)e)").unwrap();
        assert_ne!(CycTree::from_tree(&a), CycTree::from_tree(&b));
        assert_eq!(RootableTree::from_tree(&a), RootableTree::from_tree(&b));
    }

    #[test]
    fn enumeration_counts_shrink_under_quotients() {
        let plane = enumerate_trees(3, 3);
        let sym = enumerate_sym(&plane);
        let cyc = enumerate_cyc(&plane);
        let abs = enumerate_rootable(&plane);
        assert!(sym.len() < plane.len());
        assert!(cyc.len() < plane.len());
        assert!(abs.len() <= sym.len().min(cyc.len()));
    }
}

//! Trees as free operads and the hom-sets between them.
//!
//! A morphism is stored as a map on colours: edges for rooted trees, arrows
//! for rootable ones. Operations of a free operad are determined by their
//! colours, so the colour map is the whole datum.

mod cyclic;
mod functors;
mod json;

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::marker::PhantomData;

use itertools::Itertools;

use crate::category::Category;
use crate::error::{Error, Result};
use crate::trees::{EdgeId, EdgeRef, SymTree, Tree};

pub use functors::{square_comparison, CycForgetPlanar, ForgetRoot, SymForgetRoot, Symmetrize};

/// One flavour of tree, seen as an object of its tree category.
pub trait TreeObject: Clone + Eq + Hash + Ord + Debug + Display + Send + Sync + 'static {
    const KIND: &'static str;

    /// The plane rooted tree used to store this object.
    fn rep(&self) -> &Tree;
    /// Edges or arrows.
    fn num_colors(&self) -> usize;
    fn is_valid_map(&self, target: &Self, map: &[usize]) -> bool;
    /// All valid colour maps, deterministic order.
    fn hom_maps(&self, target: &Self) -> Vec<Vec<usize>>;
    fn is_boundary_preserving_map(&self, target: &Self, map: &[usize]) -> bool;
    /// The object presented by a plane tree, and where its colours went.
    fn present(t: &Tree) -> (Self, Vec<usize>);
    fn color_name(&self, c: usize) -> String;
    fn parse_color(&self, s: &str) -> Result<usize>;
}

impl TreeObject for Tree {
    const KIND: &'static str = "plane";

    fn rep(&self) -> &Tree {
        self
    }

    fn num_colors(&self) -> usize {
        self.num_edges()
    }

    fn is_valid_map(&self, target: &Self, map: &[usize]) -> bool {
        edge_map_is_valid(self, target, map, false)
    }

    fn hom_maps(&self, target: &Self) -> Vec<Vec<usize>> {
        edge_maps(self, target, 0..target.num_edges(), false)
    }

    fn is_boundary_preserving_map(&self, target: &Self, map: &[usize]) -> bool {
        edge_map_is_boundary_preserving(self, target, map)
    }

    fn present(t: &Tree) -> (Self, Vec<usize>) {
        (t.clone(), (0..t.num_edges()).collect())
    }

    fn color_name(&self, c: usize) -> String {
        self.path(c).to_dotted()
    }

    fn parse_color(&self, s: &str) -> Result<usize> {
        parse_edge(self, s)
    }
}

impl TreeObject for SymTree {
    const KIND: &'static str = "sym";

    fn rep(&self) -> &Tree {
        SymTree::rep(self)
    }

    fn num_colors(&self) -> usize {
        self.rep().num_edges()
    }

    fn is_valid_map(&self, target: &Self, map: &[usize]) -> bool {
        edge_map_is_valid(self.rep(), target.rep(), map, true)
    }

    fn hom_maps(&self, target: &Self) -> Vec<Vec<usize>> {
        edge_maps(self.rep(), target.rep(), 0..target.rep().num_edges(), true)
    }

    fn is_boundary_preserving_map(&self, target: &Self, map: &[usize]) -> bool {
        edge_map_is_boundary_preserving(self.rep(), target.rep(), map)
    }

    fn present(t: &Tree) -> (Self, Vec<usize>) {
        SymTree::symmetrize(t)
    }

    fn color_name(&self, c: usize) -> String {
        self.rep().path(c).to_dotted()
    }

    fn parse_color(&self, s: &str) -> Result<usize> {
        parse_edge(self.rep(), s)
    }
}

fn parse_edge(t: &Tree, s: &str) -> Result<EdgeId> {
    let path = EdgeRef::parse_dotted(s)?;
    t.id_of(&path).ok_or_else(|| Error::InvalidEdge(format!("{s:?} is not an edge of {t}")))
}

/// Every vertex of `s` goes to an operation of `t`; with `unordered` the
/// inputs may arrive in any order.
pub(crate) fn edge_map_is_valid(s: &Tree, t: &Tree, map: &[usize], unordered: bool) -> bool {
    if map.len() != s.num_edges() || map.iter().any(|&e| e >= t.num_edges()) {
        return false;
    }
    s.vertices().iter().all(|&v| {
        let inputs: Vec<EdgeId> = s.inputs(v).iter().map(|&a| map[a]).collect();
        if unordered {
            t.is_operation_unordered(map[v], &inputs)
        } else {
            t.is_operation(map[v], &inputs)
        }
    })
}

pub(crate) fn edge_map_is_boundary_preserving(s: &Tree, t: &Tree, map: &[usize]) -> bool {
    map[0] == 0 && s.leaves().iter().all(|&l| t.is_leaf(map[l]))
}

/// All valid edge maps `s → t` whose root image is drawn from `root_images`.
pub(crate) fn edge_maps(
    s: &Tree,
    t: &Tree,
    root_images: impl IntoIterator<Item = EdgeId>,
    unordered: bool,
) -> Vec<Vec<EdgeId>> {
    fn extend(
        s: &Tree,
        t: &Tree,
        idx: usize,
        map: &mut Vec<EdgeId>,
        unordered: bool,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        let Some(&v) = s.vertices().get(idx) else {
            out.push(map.clone());
            return;
        };
        // pre-order: the output of v was assigned when its parent was visited
        let inputs = s.inputs(v);
        for cut in t.operations_with_arity(map[v], inputs.len()) {
            if unordered {
                for perm in cut.iter().permutations(cut.len()) {
                    for (&a, &x) in inputs.iter().zip(&perm) {
                        map[a] = *x;
                    }
                    extend(s, t, idx + 1, map, unordered, out);
                }
            } else {
                for (&a, &x) in inputs.iter().zip(cut) {
                    map[a] = x;
                }
                extend(s, t, idx + 1, map, unordered, out);
            }
        }
    }
    let mut out = Vec::new();
    let mut map = vec![0; s.num_edges()];
    for r in root_images {
        map[0] = r;
        extend(s, t, 0, &mut map, unordered, &mut out);
    }
    out
}

/// A morphism of trees, stored as its colour map.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Morphism<T> {
    source: T,
    target: T,
    map: Vec<usize>,
}

pub type TreeMorphism = Morphism<Tree>;
pub type SymTreeMorphism = Morphism<SymTree>;
pub type CycTreeMorphism = Morphism<crate::trees::CycTree>;
pub type RootableTreeMorphism = Morphism<crate::trees::RootableTree>;

impl<T: TreeObject> Morphism<T> {
    pub fn new(source: T, target: T, map: Vec<usize>) -> Result<Self> {
        if !source.is_valid_map(&target, &map) {
            return Err(Error::InvalidMorphism(format!("{map:?} is not a map {source} → {target}")));
        }
        Ok(Morphism { source, target, map })
    }

    /// Skips validation; use [`Morphism::is_valid`] to check later.
    pub fn new_unchecked(source: T, target: T, map: Vec<usize>) -> Self {
        Morphism { source, target, map }
    }

    pub fn identity(t: &T) -> Self {
        Morphism { source: t.clone(), target: t.clone(), map: (0..t.num_colors()).collect() }
    }

    /// `g ∘ f`.
    pub fn compose(g: &Self, f: &Self) -> Result<Self> {
        if f.target != g.source {
            return Err(Error::NotComposable(format!("{} ≠ {}", f.target, g.source)));
        }
        Ok(Morphism {
            source: f.source.clone(),
            target: g.target.clone(),
            map: f.map.iter().map(|&c| g.map[c]).collect(),
        })
    }

    pub fn source(&self) -> &T {
        &self.source
    }

    pub fn target(&self) -> &T {
        &self.target
    }

    /// Image of each source colour.
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, c: usize) -> usize {
        self.map[c]
    }

    pub fn is_valid(&self) -> bool {
        self.source.is_valid_map(&self.target, &self.map)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.map.iter().enumerate().all(|(i, &c)| i == c)
    }

    /// Root to root and leaves to leaves.
    pub fn is_boundary_preserving(&self) -> bool {
        self.source.is_boundary_preserving_map(&self.target, &self.map)
    }
}

impl<T: TreeObject> Debug for Morphism<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} → {} {:?}", self.source, self.target, self.map)
    }
}

impl<T: TreeObject> Display for Morphism<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs = self
            .map
            .iter()
            .enumerate()
            .map(|(c, &d)| format!("{}↦{}", self.source.color_name(c), self.target.color_name(d)))
            .join(", ");
        write!(f, "{} → {} {{{pairs}}}", self.source, self.target)
    }
}

/// All morphisms `s → t`.
pub fn hom<T: TreeObject>(s: &T, t: &T) -> Vec<Morphism<T>> {
    s.hom_maps(t)
        .into_iter()
        .map(|map| Morphism { source: s.clone(), target: t.clone(), map })
        .collect()
}

pub fn validate_morphism<T: TreeObject>(m: &Morphism<T>) -> bool {
    m.is_valid()
}

/// The category of trees of flavour `T`.
pub struct TreeCategory<T>(PhantomData<T>);

impl<T> TreeCategory<T> {
    pub const fn new() -> Self {
        TreeCategory(PhantomData)
    }
}

impl<T> Default for TreeCategory<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: TreeObject> Category for TreeCategory<T> {
    type Object = T;
    type Morphism = Morphism<T>;

    fn source(&self, f: &Morphism<T>) -> T {
        f.source.clone()
    }

    fn target(&self, f: &Morphism<T>) -> T {
        f.target.clone()
    }

    fn identity(&self, x: &T) -> Morphism<T> {
        Morphism::identity(x)
    }

    fn compose(&self, g: &Morphism<T>, f: &Morphism<T>) -> Result<Morphism<T>> {
        Morphism::compose(g, f)
    }

    fn hom(&self, x: &T, y: &T) -> Vec<Morphism<T>> {
        hom(x, y)
    }
}

/// An operation of the free operad on a tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TreeOperation {
    pub output: EdgeRef,
    /// Inputs in planar order.
    pub cut: Vec<EdgeRef>,
}

impl TreeOperation {
    pub fn is_identity(&self) -> bool {
        self.cut.len() == 1 && self.cut[0] == self.output
    }
}

impl Display for TreeOperation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) → {}", self.cut.iter().join(", "), self.output)
    }
}

/// Every operation of the free operad on `t`, identities included.
pub fn operations_of(t: &Tree) -> Vec<TreeOperation> {
    (0..t.num_edges())
        .flat_map(|b| {
            t.operations_at(b).iter().map(move |cut| TreeOperation {
                output: t.path(b).clone(),
                cut: cut.iter().map(|&e| t.path(e).clone()).collect(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::enumerate_trees;

    fn left() -> Tree {
        Tree::parse("((eeee))").unwrap()
    }

    fn right() -> Tree {
        Tree::parse("((ee)(ee)())").unwrap()
    }

    fn e(t: &Tree, dotted: &str) -> EdgeId {
        parse_edge(t, dotted).unwrap()
    }

    fn example_morphism() -> TreeMorphism {
        let (s, t) = (left(), right());
        // a, a' ↦ ā ; e, f ↦ ē, f̄ ; c, d ↦ c̄, d̄ (inner edges of the target)
        let pairs = [("", ""), ("0", ""), ("0.0", "0.0"), ("0.1", "0.1"), ("0.2", "1"), ("0.3", "2")];
        let mut map = vec![0; s.num_edges()];
        for (a, b) in pairs {
            map[e(&s, a)] = e(&t, b);
        }
        Morphism::new(s, t, map).unwrap()
    }

    fn non_identity_count(t: &Tree) -> usize {
        operations_of(t).iter().filter(|o| !o.is_identity()).count()
    }

    #[test]
    fn example_trees_have_three_and_eleven_operations() {
        assert_eq!(non_identity_count(&left()), 3);
        assert_eq!(non_identity_count(&right()), 11);
        assert_eq!(operations_of(&Tree::eta()).len(), 1);
    }

    #[test]
    fn operations_are_unique() {
        for t in enumerate_trees(3, 3) {
            let ops = operations_of(&t);
            let n = ops.len();
            assert_eq!(ops.into_iter().unique().count(), n);
        }
    }

    #[test]
    fn example_morphism_is_valid() {
        let m = example_morphism();
        assert!(m.is_valid());
        assert!(!m.is_boundary_preserving());
        assert_eq!(Morphism::compose(&Morphism::identity(m.target()), &m).unwrap(), m);
    }

    #[test]
    fn collapsing_leaves_is_invalid() {
        let c2 = Tree::corolla(2);
        assert!(!c2.is_valid_map(&c2, &[0, 1, 1]));
        assert!(Morphism::new(c2.clone(), c2, vec![0, 2, 2]).is_err());
    }

    #[test]
    fn small_hom_sets() {
        for t in enumerate_trees(3, 3) {
            assert_eq!(hom(&Tree::eta(), &t).len(), t.num_edges());
        }
        for n in [0, 2, 3, 4] {
            let c = Tree::corolla(n);
            assert_eq!(hom(&c, &c), vec![Morphism::identity(&c)]);
        }
        // a unary vertex may also go to either identity operation
        let c1 = Tree::corolla(1);
        let maps: Vec<Vec<usize>> = hom(&c1, &c1).iter().map(|m| m.map().to_vec()).collect();
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert!(hom(&Tree::corolla(2), &Tree::eta()).is_empty());
    }

    #[test]
    fn hom_agrees_with_brute_force() {
        let trees: Vec<Tree> = enumerate_trees(3, 2).into_iter().filter(|t| t.num_edges() <= 5).collect();
        for s in &trees {
            for t in &trees {
                let brute: Vec<Vec<usize>> = (0..s.num_edges())
                    .map(|_| 0..t.num_edges())
                    .multi_cartesian_product()
                    .filter(|m| s.is_valid_map(t, m))
                    .collect();
                let mut found = s.hom_maps(t);
                let mut sorted = brute.clone();
                found.sort();
                sorted.sort();
                assert_eq!(found, sorted, "{s} → {t}");
            }
        }
    }

    #[test]
    fn symmetric_hom_sees_permutations() {
        let c2 = SymTree::from_tree(&Tree::corolla(2));
        assert_eq!(hom(&c2, &c2).len(), 2);
        let c3 = SymTree::from_tree(&Tree::corolla(3));
        assert_eq!(hom(&c3, &c3).len(), 6);
    }
}

//! The boundary functors from trees to simplex-like categories, collapse maps,
//! the initiality of corollas and the left adjoint `T ↦ T_f`.

mod adjoint;
mod checks;
mod cyclic;
mod plane;
mod unrooted;

use crate::category::{Category, Functor, Variance};
use crate::error::{Error, Result};
use crate::hom::{hom, Morphism, TreeCategory, TreeMorphism, TreeObject};
use crate::targets::{CycMap, Delta, FinMap, FinNonempty, FinPointed, Lambda, PointedMap};
use crate::trees::{arrow, CycTree, Dir, RootableTree, SymTree, Tree};

pub use adjoint::{build_tf, factor_through_tf, factorizations_by_search};
pub use checks::{
    check_adjunction, check_bp_invertible, check_descriptions_agree, check_extension_cyc, check_extension_sym,
    check_initiality,
};
pub use cyclic::{lcyc_map, lcyc_map_contravariant, lcyc_obj};
pub use plane::{lpl_leaf_map, lpl_map, lpl_map_contravariant, lpl_obj};
pub use unrooted::{labs_map, labs_obj, lsym_map, lsym_obj};

type TargetMap<L> = <<L as Localizer>::Target as Category>::Morphism;

/// One of the four boundary functors.
pub trait Localizer: Default + Send + Sync + 'static {
    const NAME: &'static str;
    const VARIANCE: Variance;
    type Tree: TreeObject;
    type Target: Category<Object = usize> + Default + Send;

    fn obj(t: &Self::Tree) -> usize;
    fn map(alpha: &Morphism<Self::Tree>) -> Result<TargetMap<Self>>;
    fn is_iso(f: &TargetMap<Self>) -> bool;

    fn corolla(n: usize) -> Self::Tree {
        Self::Tree::present(&Tree::corolla(n)).0
    }

    /// Number of automorphisms of `obj`.
    fn aut_order(obj: usize) -> usize;

    /// Automorphisms of `obj`.
    fn isos(obj: usize) -> Vec<TargetMap<Self>> {
        Self::Target::default().hom(&obj, &obj).into_iter().filter(Self::is_iso).collect()
    }

    /// Whether `L(α)` followed by the identification `φ` is the identity,
    /// composing in the target category's own direction.
    fn compatible(image: &TargetMap<Self>, phi: &TargetMap<Self>) -> bool {
        let cat = Self::Target::default();
        let composite = match Self::VARIANCE {
            Variance::Covariant => cat.compose(phi, image),
            Variance::Contravariant => cat.compose(image, phi),
        };
        composite.map(|c| c == cat.identity(&cat.source(&c))).unwrap_or(false)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Lpl;
#[derive(Clone, Copy, Debug, Default)]
pub struct Lcyc;
#[derive(Clone, Copy, Debug, Default)]
pub struct Lsym;
#[derive(Clone, Copy, Debug, Default)]
pub struct Labs;

impl Localizer for Lpl {
    const NAME: &'static str = "pl";
    const VARIANCE: Variance = Variance::Covariant;
    type Tree = Tree;
    type Target = Delta;

    fn obj(t: &Tree) -> usize {
        lpl_obj(t)
    }

    fn map(alpha: &TreeMorphism) -> Result<crate::targets::DeltaMap> {
        lpl_map(alpha)
    }

    fn aut_order(_obj: usize) -> usize {
        1
    }

    fn is_iso(f: &crate::targets::DeltaMap) -> bool {
        f.is_iso()
    }
}

impl Localizer for Lcyc {
    const NAME: &'static str = "cyc";
    const VARIANCE: Variance = Variance::Covariant;
    type Tree = CycTree;
    type Target = Lambda;

    fn obj(t: &CycTree) -> usize {
        lcyc_obj(t)
    }

    fn map(alpha: &Morphism<CycTree>) -> Result<CycMap> {
        lcyc_map(alpha)
    }

    fn aut_order(obj: usize) -> usize {
        obj + 1
    }

    fn is_iso(f: &CycMap) -> bool {
        f.is_iso()
    }
}

impl Localizer for Lsym {
    const NAME: &'static str = "sym";
    const VARIANCE: Variance = Variance::Contravariant;
    type Tree = SymTree;
    type Target = FinPointed;

    fn obj(t: &SymTree) -> usize {
        lsym_obj(t)
    }

    fn map(alpha: &Morphism<SymTree>) -> Result<PointedMap> {
        lsym_map(alpha)
    }

    fn aut_order(obj: usize) -> usize {
        (1..=obj).product()
    }

    fn is_iso(f: &PointedMap) -> bool {
        f.is_iso()
    }
}

impl Localizer for Labs {
    const NAME: &'static str = "abs";
    const VARIANCE: Variance = Variance::Contravariant;
    type Tree = RootableTree;
    type Target = FinNonempty;

    fn obj(t: &RootableTree) -> usize {
        labs_obj(t)
    }

    fn map(alpha: &Morphism<RootableTree>) -> Result<FinMap> {
        labs_map(alpha)
    }

    fn aut_order(obj: usize) -> usize {
        (1..=obj).product()
    }

    fn is_iso(f: &FinMap) -> bool {
        f.is_iso()
    }
}

/// A localizer seen as a functor, for the generic law checks.
pub struct LFunctor<L: Localizer> {
    source: TreeCategory<L::Tree>,
    target: L::Target,
}

impl<L: Localizer> Default for LFunctor<L> {
    fn default() -> Self {
        LFunctor { source: TreeCategory::new(), target: L::Target::default() }
    }
}

impl<L: Localizer> Functor for LFunctor<L> {
    type Source = TreeCategory<L::Tree>;
    type Target = L::Target;
    const VARIANCE: Variance = L::VARIANCE;

    fn source_category(&self) -> &Self::Source {
        &self.source
    }

    fn target_category(&self) -> &L::Target {
        &self.target
    }

    fn map_object(&self, x: &L::Tree) -> usize {
        L::obj(x)
    }

    fn map_morphism(&self, f: &Morphism<L::Tree>) -> Result<TargetMap<L>> {
        L::map(f)
    }
}

/// A tree with a map `L(tree) → [n]` (or `[n] → L(tree)` for the
/// contravariant flavours, in the target category's own direction).
#[derive(Clone, Debug)]
pub struct OverObject<L: Localizer> {
    pub tree: L::Tree,
    pub structure_map: TargetMap<L>,
    pub n: usize,
}

impl<L: Localizer> OverObject<L> {
    pub fn new(tree: L::Tree, structure_map: TargetMap<L>, n: usize) -> Result<Self> {
        let cat = L::Target::default();
        let ends = (cat.source(&structure_map), cat.target(&structure_map));
        let expected = match L::VARIANCE {
            Variance::Covariant => (L::obj(&tree), n),
            Variance::Contravariant => (n, L::obj(&tree)),
        };
        if ends != expected {
            return Err(Error::Precondition(format!("{structure_map:?} does not start at L({tree})")));
        }
        Ok(OverObject { tree, structure_map, n })
    }
}

/// A tree with an identification of `L(tree)` with a standard object.
#[derive(Clone, Debug)]
pub struct WeakFiberObject<L: Localizer> {
    pub tree: L::Tree,
    pub identification: TargetMap<L>,
}

impl<L: Localizer> WeakFiberObject<L> {
    pub fn new(tree: L::Tree, identification: TargetMap<L>) -> Result<Self> {
        let cat = L::Target::default();
        if !L::is_iso(&identification) || cat.source(&identification) != L::obj(&tree) {
            return Err(Error::Precondition(format!("{identification:?} is not an identification of L({tree})")));
        }
        Ok(WeakFiberObject { tree, identification })
    }

    /// The boundary preserving maps from the corolla compatible with the identification.
    pub fn maps_from_corolla(&self) -> Result<Vec<Morphism<L::Tree>>> {
        let corolla = L::corolla(self.tree.rep().arity());
        let mut out = Vec::new();
        for alpha in hom(&corolla, &self.tree) {
            if alpha.is_boundary_preserving() && L::compatible(&L::map(&alpha)?, &self.identification) {
                out.push(alpha);
            }
        }
        Ok(out)
    }
}

pub fn is_boundary_preserving<T: TreeObject>(alpha: &Morphism<T>) -> bool {
    alpha.is_boundary_preserving()
}

/// Boundary preserving and out of a corolla.
pub fn is_collapse<T: TreeObject>(alpha: &Morphism<T>) -> bool {
    alpha.source().rep().num_vertices() == 1 && alpha.is_boundary_preserving()
}

/// `C_n → T` sending the vertex to the operation with the root as output
/// and all leaves as inputs, in order.
pub fn collapse_map(t: &Tree) -> TreeMorphism {
    let c = Tree::corolla(t.arity());
    let mut map = vec![0];
    map.extend_from_slice(t.leaves());
    Morphism::new(c, t.clone(), map).expect("the maximal operation exists")
}

/// Every collapse map into `t`; for the unrooted flavours this includes
/// each rooting of the corolla.
pub fn collapse_maps<T: TreeObject>(t: &T) -> Vec<Morphism<T>> {
    let c = T::present(&Tree::corolla(t.rep().arity())).0;
    hom(&c, t).into_iter().filter(|a| a.is_boundary_preserving()).collect()
}

/// `L_pl(t) = [n] ≅ L_cyc(t without root)`: the areas of `t` are those of
/// the stored representative, rotated.
pub fn cyc_rotation(t: &Tree) -> CycMap {
    let (cyc, arrows) = CycTree::forget_root(t);
    CycMap::rotation(t.arity(), cyc.arrows().area_offset(arrows[arrow(0, Dir::Down)]) as i64)
}

/// Leaves of `t` in planar order to the leaves of its symmetric representative.
pub fn sym_relabel(t: &Tree) -> PointedMap {
    let (sym, edges) = SymTree::symmetrize(t);
    let values = t.leaves().iter().map(|&l| sym.rep().edge(edges[l]).leaf_index.expect("leaves stay leaves") + 1).collect();
    PointedMap { src: t.arity(), dst: t.arity(), values }
}

/// Leaf labels of a plane rootable tree to those of its rootable representative.
pub fn abs_relabel(t: &CycTree) -> FinMap {
    let (r, arrows) = RootableTree::from_cyc(t);
    let n = t.arity();
    let values = (0..=n)
        .map(|j| {
            let a = arrows[cyclic::leaf_at_label(t.arrows(), j)];
            let pos = (0..=n).find(|&t| r.arrows().leaf_arrow_at(t) == a).expect("leaves stay leaves");
            cyclic::leaf_label(n, pos)
        })
        .collect();
    FinMap { src: n + 1, dst: n + 1, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::check_functor_laws;
    use crate::hom::{CycForgetPlanar, Symmetrize};
    use crate::targets::{linord_to_pointed, DeltaMap};
    use crate::trees::{enumerate_cyc, enumerate_rootable, enumerate_sym, enumerate_trees, EdgeRef};

    #[test]
    fn functor_laws() {
        let trees = enumerate_trees(2, 3);
        assert!(check_functor_laws(&LFunctor::<Lpl>::default(), &trees).ok());
        let r = check_functor_laws(&LFunctor::<Lcyc>::default(), &enumerate_cyc(&trees));
        assert!(r.ok(), "{:?}", r.violations);
        let r = check_functor_laws(&LFunctor::<Lsym>::default(), &enumerate_sym(&trees));
        assert!(r.ok(), "{:?}", r.violations);
        let r = check_functor_laws(&LFunctor::<Labs>::default(), &enumerate_rootable(&trees));
        assert!(r.ok(), "{:?}", r.violations);
    }

    #[test]
    fn collapse_maps_and_their_images() {
        for n in 0..4 {
            assert!(collapse_map(&Tree::corolla(n)).is_identity());
        }
        let t = Tree::parse("((ee)e(e))").unwrap();
        let c = collapse_map(&t);
        assert!(is_collapse(&c));
        assert!(lpl_map(&c).unwrap().is_identity());
        assert_eq!(collapse_maps(&t), vec![c]);
        assert_eq!(collapse_maps(&CycTree::from_tree(&t)).len(), 5);
        // η → C_1 at the leaf
        let c1 = Tree::corolla(1);
        let leaf = Morphism::new(Tree::eta(), c1.clone(), vec![c1.id_of(&EdgeRef(vec![0])).unwrap()]).unwrap();
        assert!(!is_boundary_preserving(&leaf));
    }

    #[test]
    fn collapse_of_the_example_source_is_the_composite() {
        // the vertex goes to the operation (e, f, c, d) → a
        let t = Tree::parse("((eeee))").unwrap();
        let c = collapse_map(&t);
        assert_eq!(c.map(), &[0, 2, 3, 4, 5]);
        assert!(t.is_operation(0, t.leaves()));
    }

    #[test]
    fn corolla_is_initial_in_each_weak_fiber() {
        let trees = enumerate_trees(3, 3);
        assert!(check_initiality::<Lpl>(&trees).ok());
        assert!(check_initiality::<Lcyc>(&enumerate_cyc(&trees)).ok());
        assert!(check_initiality::<Lsym>(&enumerate_sym(&trees)).ok());
        assert!(check_initiality::<Labs>(&enumerate_rootable(&trees)).ok());
    }

    #[test]
    fn weak_fiber_objects_reject_non_isos() {
        let t = CycTree::from_tree(&Tree::corolla(2));
        assert!(WeakFiberObject::<Lcyc>::new(t.clone(), CycMap::rotation(2, 1)).is_ok());
        assert!(WeakFiberObject::<Lcyc>::new(t, CycMap::new(2, 2, vec![0, 0, 1]).unwrap()).is_err());
        assert!(OverObject::<Lpl>::new(Tree::eta(), DeltaMap::new(1, 3, vec![0, 3]).unwrap(), 3).is_ok());
        assert!(OverObject::<Lpl>::new(Tree::eta(), DeltaMap::identity(2), 2).is_err());
    }

    #[test]
    fn squares_commute() {
        let trees = enumerate_trees(3, 3);
        let r = check_extension_cyc(&trees);
        assert!(r.ok(), "{:?}", r.violations);
        let r = check_extension_sym(&trees);
        assert!(r.ok(), "{:?}", r.violations);
    }

    #[test]
    fn unrooted_forgets_cyclic_order() {
        let trees = enumerate_cyc(&enumerate_trees(3, 3));
        for s in &trees {
            for t in &trees {
                for alpha in hom(s, t) {
                    let lhs = FinMap::compose(&labs_map(&CycForgetPlanar::apply(&alpha)).unwrap(), &abs_relabel(t)).unwrap();
                    let rhs = FinMap::compose(&abs_relabel(s), &lcyc_map_contravariant(&alpha).unwrap().points()).unwrap();
                    assert_eq!(lhs, rhs, "{alpha:?}");
                }
            }
        }
    }

    #[test]
    fn symmetric_image_of_a_plane_map() {
        let s = Tree::parse("((ee)e)").unwrap();
        let t = Tree::parse("((ee)(e))").unwrap();
        for alpha in hom(&s, &t) {
            let lhs = PointedMap::compose(&lsym_map(&Symmetrize::apply(&alpha)).unwrap(), &sym_relabel(&t)).unwrap();
            let rhs = PointedMap::compose(&sym_relabel(&s), &linord_to_pointed(&lpl_leaf_map(&alpha).unwrap())).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

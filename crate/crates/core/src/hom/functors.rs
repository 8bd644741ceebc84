//! The forgetful functors between the four tree categories.
//!
//! ```text
//!   Ω_pl ──Symmetrize──▶ Ω_sym
//!    │                     │
//! ForgetRoot          SymForgetRoot
//!    ▼                     ▼
//!   Ξ_pl ─CycForgetPlanar─▶ Ξ
//! ```

use crate::category::{Functor, Variance};
use crate::error::Result;
use crate::trees::{arrow, dir_of, edge_of, ArrowId, CycTree, RootableTree, SymTree, Tree};

use super::{Morphism, TreeCategory, TreeObject};

fn invert(map: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; map.len()];
    for (old, &new) in map.iter().enumerate() {
        inv[new] = old;
    }
    inv
}

/// Transport a colour map along presentations of source and target.
fn transport<A, B: TreeObject>(
    m: &Morphism<A>,
    present: impl Fn(&A) -> (B, Vec<usize>),
    lift: impl Fn(&[usize], usize) -> usize,
    colors: impl Fn(&A) -> usize,
) -> Morphism<B>
where
    A: TreeObject,
{
    transport_with(m, &present(m.source()), &present(m.target()), lift, colors(m.source()))
}

fn transport_with<A: TreeObject, B: TreeObject>(
    m: &Morphism<A>,
    (s, ms): &(B, Vec<usize>),
    (t, mt): &(B, Vec<usize>),
    lift: impl Fn(&[usize], usize) -> usize,
    colors: usize,
) -> Morphism<B> {
    let back = invert(ms);
    let map = (0..colors).map(|c| mt[lift(m.map(), back[c])]).collect();
    Morphism::new_unchecked(s.clone(), t.clone(), map)
}

/// An edge map seen on arrows.
fn lift_edges(map: &[usize], a: ArrowId) -> ArrowId {
    arrow(map[edge_of(a)], dir_of(a))
}

fn same(map: &[usize], c: usize) -> usize {
    map[c]
}

macro_rules! forgetful {
    ($name:ident, $from:ty, $to:ty, $doc:literal) => {
        #[doc = $doc]
        #[derive(Default)]
        pub struct $name {
            source: TreeCategory<$from>,
            target: TreeCategory<$to>,
        }

        impl $name {
            pub fn new() -> Self {
                Self::default()
            }
        }
    };
}

forgetful!(Symmetrize, Tree, SymTree, "Ω_pl → Ω_sym: forget the planar structure.");
forgetful!(ForgetRoot, Tree, CycTree, "Ω_pl → Ξ_pl: forget the root.");
forgetful!(CycForgetPlanar, CycTree, RootableTree, "Ξ_pl → Ξ: forget the planar structure.");
forgetful!(SymForgetRoot, SymTree, RootableTree, "Ω_sym → Ξ: forget the root.");

impl Symmetrize {
    pub fn apply(m: &Morphism<Tree>) -> Morphism<SymTree> {
        transport(m, SymTree::symmetrize, same, |t| t.num_edges())
    }

    /// [`Symmetrize::apply`] with presentations from [`SymTree::symmetrize`].
    pub fn apply_presented(m: &Morphism<Tree>, source: &(SymTree, Vec<usize>), target: &(SymTree, Vec<usize>)) -> Morphism<SymTree> {
        transport_with(m, source, target, same, m.source().num_edges())
    }
}

impl ForgetRoot {
    pub fn apply(m: &Morphism<Tree>) -> Morphism<CycTree> {
        transport(m, CycTree::forget_root, lift_edges, |t| 2 * t.num_edges())
    }

    /// [`ForgetRoot::apply`] with the presentations of source and target
    /// already computed by [`CycTree::forget_root`].
    pub fn apply_presented(
        m: &Morphism<Tree>,
        source: &(CycTree, Vec<ArrowId>),
        target: &(CycTree, Vec<ArrowId>),
    ) -> Morphism<CycTree> {
        transport_with(m, source, target, lift_edges, 2 * m.source().num_edges())
    }
}

impl CycForgetPlanar {
    pub fn apply(m: &Morphism<CycTree>) -> Morphism<RootableTree> {
        transport(m, RootableTree::from_cyc, same, |t| t.num_arrows())
    }
}

impl SymForgetRoot {
    pub fn apply(m: &Morphism<SymTree>) -> Morphism<RootableTree> {
        transport(m, |t| RootableTree::from_tree_with_map(t.rep()), lift_edges, |t| 2 * t.rep().num_edges())
    }
}

/// The two ways of turning a plane tree into a rootable tree agree up to
/// this isomorphism, from the symmetric route to the cyclic one.
pub fn square_comparison(t: &Tree) -> Morphism<RootableTree> {
    let (sym, edges) = SymTree::symmetrize(t);
    let (r1, via_sym) = RootableTree::from_tree_with_map(sym.rep());
    let (cyc, arrows) = CycTree::forget_root(t);
    let (r2, via_cyc) = RootableTree::from_cyc(&cyc);
    let mut map = vec![0; r1.num_arrows()];
    for a in 0..2 * t.num_edges() {
        map[via_sym[lift_edges(&edges, a)]] = via_cyc[arrows[a]];
    }
    Morphism::new_unchecked(r1, r2, map)
}

macro_rules! covariant {
    ($name:ident, $from:ty, $to:ty, $obj:expr) => {
        impl Functor for $name {
            type Source = TreeCategory<$from>;
            type Target = TreeCategory<$to>;
            const VARIANCE: Variance = Variance::Covariant;

            fn source_category(&self) -> &Self::Source {
                &self.source
            }

            fn target_category(&self) -> &Self::Target {
                &self.target
            }

            fn map_object(&self, x: &$from) -> $to {
                $obj(x)
            }

            fn map_morphism(&self, f: &Morphism<$from>) -> Result<Morphism<$to>> {
                Ok(Self::apply(f))
            }
        }
    };
}

covariant!(Symmetrize, Tree, SymTree, SymTree::from_tree);
covariant!(ForgetRoot, Tree, CycTree, CycTree::from_tree);
covariant!(CycForgetPlanar, CycTree, RootableTree, |c: &CycTree| RootableTree::from_cyc(c).0);
covariant!(SymForgetRoot, SymTree, RootableTree, |s: &SymTree| RootableTree::from_tree(s.rep()));

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::check_functor_laws;
    use crate::hom::hom;
    use crate::trees::enumerate_trees;

    #[test]
    fn images_are_valid_morphisms() {
        let trees = enumerate_trees(3, 2);
        for s in &trees {
            for t in &trees {
                for m in hom(s, t) {
                    let sym = Symmetrize::apply(&m);
                    let cyc = ForgetRoot::apply(&m);
                    assert!(sym.is_valid(), "{m:?} ↦ {sym:?}");
                    assert!(cyc.is_valid(), "{m:?} ↦ {cyc:?}");
                    assert!(CycForgetPlanar::apply(&cyc).is_valid());
                    let abs = SymForgetRoot::apply(&sym);
                    assert!(abs.is_valid());
                    let (theta_s, theta_t) = (square_comparison(s), square_comparison(t));
                    assert!(theta_s.is_valid() && theta_s.is_boundary_preserving());
                    let lhs = Morphism::compose(&theta_t, &abs).unwrap();
                    let rhs = Morphism::compose(&CycForgetPlanar::apply(&cyc), &theta_s).unwrap();
                    assert_eq!(lhs, rhs, "square commutes up to the comparison");
                }
            }
        }
    }

    #[test]
    fn functor_laws_on_small_trees() {
        let trees = enumerate_trees(2, 2);
        assert!(check_functor_laws(&Symmetrize::new(), &trees).ok());
        assert!(check_functor_laws(&ForgetRoot::new(), &trees).ok());
    }
}

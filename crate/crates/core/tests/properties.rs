use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use treeloc::fixtures::{random_invertible_operad, shuffle_operad};
use treeloc::hom::{hom, Morphism};
use treeloc::localization::lpl_map;
use treeloc::operads::{characterize_invertible, validate_operad};
use treeloc::targets::{cut_dual_inverse, cut_dual_map, lambda_dual, lambda_dual_inverse, CycMap, DeltaMap, LinOrdMap};
use treeloc::trees::{enumerate_trees, EdgeRef, Tree};

fn delta_map(m: usize, n: usize) -> impl Strategy<Value = DeltaMap> {
    proptest::collection::vec(0..=n, m + 1).prop_map(move |mut v| {
        v.sort_unstable();
        DeltaMap::new(m, n, v).unwrap()
    })
}

fn small_tree() -> impl Strategy<Value = Tree> {
    let trees = enumerate_trees(3, 3);
    (0..trees.len()).prop_map(move |i| trees[i].clone())
}

fn composable_pair() -> impl Strategy<Value = (Morphism<Tree>, Morphism<Tree>)> {
    let trees = enumerate_trees(2, 3);
    let mut pairs = Vec::new();
    for s in &trees {
        for t in &trees {
            for u in &trees {
                for f in hom(s, t) {
                    pairs.extend(hom(t, u).into_iter().map(|g| (f.clone(), g)));
                }
            }
        }
    }
    any::<prop::sample::Index>().prop_map(move |k| k.get(&pairs).clone())
}

proptest! {
    #[test]
    fn delta_composition_is_associative(
        (f, g, h) in (0usize..4, 0usize..4, 0usize..4, 0usize..4)
            .prop_flat_map(|(a, b, c, d)| (delta_map(a, b), delta_map(b, c), delta_map(c, d)))
    ) {
        let left = DeltaMap::compose(&h, &DeltaMap::compose(&g, &f).unwrap()).unwrap();
        let right = DeltaMap::compose(&DeltaMap::compose(&h, &g).unwrap(), &f).unwrap();
        prop_assert_eq!(&left, &right);
        prop_assert_eq!(DeltaMap::compose(&DeltaMap::identity(f.n_dst), &f).unwrap(), f);
    }

    #[test]
    fn cut_duality_round_trips(src in 0usize..4, dst in 0usize..4, k in any::<prop::sample::Index>()) {
        let maps = LinOrdMap::all(src, dst);
        let f = k.get(&maps);
        prop_assert_eq!(&cut_dual_inverse(&cut_dual_map(f)), f);
    }

    #[test]
    fn cyclic_duality_round_trips(m in 0usize..4, n in 0usize..4, k in any::<prop::sample::Index>()) {
        let maps = CycMap::all(m, n);
        let f = k.get(&maps);
        prop_assert_eq!(&lambda_dual_inverse(&lambda_dual(f)), f);
    }

    #[test]
    fn codes_round_trip(t in small_tree()) {
        prop_assert_eq!(Tree::parse(t.code()).unwrap(), t);
    }

    #[test]
    fn grafting_adds_vertices(base in small_tree(), top in small_tree(), k in any::<prop::sample::Index>()) {
        prop_assume!(base.arity() > 0);
        let leaf = base.leaves()[k.index(base.arity())];
        let g = base.graft(base.path(leaf), &top).unwrap();
        prop_assert_eq!(g.arity(), base.arity() + top.arity() - 1);
        prop_assert_eq!(g.num_vertices(), base.num_vertices() + top.num_vertices());
        prop_assert_eq!(Tree::eta().graft(&EdgeRef(vec![]), &g).unwrap(), g.clone());
    }

    #[test]
    fn lpl_preserves_composition((f, g) in composable_pair()) {
        let gf = Morphism::compose(&g, &f).unwrap();
        let expected = DeltaMap::compose(&lpl_map(&g).unwrap(), &lpl_map(&f).unwrap()).unwrap();
        prop_assert_eq!(lpl_map(&gf).unwrap(), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn relabelling_keeps_invertibility(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let o = random_invertible_operad(2, &mut rng);
        let shuffled = shuffle_operad(&o, &mut rng);
        prop_assert!(validate_operad(&shuffled).ok());
        let c = characterize_invertible(&shuffled, 2);
        prop_assert!(c.b1 && c.b2 && c.b3);
    }
}

//! Seeded fixtures: the worked example, small categories, simplicial sets
//! with and without the Segal conditions, and operads.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::equivalence::{operad_to_simplicial, simplicial_to_operad};
use crate::hom::{Morphism, TreeMorphism};
use crate::operads::{FiniteOperad, Operation};
use crate::presheaves::{nerve_of_category, SmallCategory, TruncatedSimplicialSet};
use crate::trees::{EdgeRef, Tree};

pub type Named<T> = (String, T);

/// The two trees of the worked example: a unary vertex below a 4-ary one,
/// and a ternary root carrying two binary vertices and a nullary one.
pub fn worked_trees() -> (Tree, Tree) {
    (Tree::parse("((eeee))").expect("valid"), Tree::parse("((ee)(ee)())").expect("valid"))
}

/// The worked example morphism: the four leaves go to `ē`, `f̄`, `c̄`, `d̄`
/// and both lower edges to the root.
pub fn worked_morphism() -> TreeMorphism {
    let (s, t) = worked_trees();
    let pairs = [("", ""), ("0", ""), ("0.0", "0.0"), ("0.1", "0.1"), ("0.2", "1"), ("0.3", "2")];
    let mut map = vec![0; s.num_edges()];
    for (a, b) in pairs {
        let a = s.id_of(&EdgeRef::parse_dotted(a).expect("path")).expect("edge");
        map[a] = t.id_of(&EdgeRef::parse_dotted(b).expect("path")).expect("edge");
    }
    Morphism::new(s, t, map).expect("the example is a morphism")
}

/// A random poset on `k` elements, as a category.
pub fn random_poset(k: usize, rng: &mut impl Rng) -> SmallCategory {
    let mut le = vec![vec![false; k]; k];
    for (a, row) in le.iter_mut().enumerate() {
        row[a] = true;
    }
    for a in 0..k {
        for b in a + 1..k {
            le[a][b] = rng.gen_bool(0.5);
        }
    }
    for m in 0..k {
        for a in 0..k {
            for b in 0..k {
                if le[a][m] && le[m][b] {
                    le[a][b] = true;
                }
            }
        }
    }
    let objects: Vec<String> = (0..k).map(|a| a.to_string()).collect();
    let morphisms: Vec<(String, usize, usize)> =
        (0..k).flat_map(|a| (0..k).map(move |b| (a, b))).filter(|&(a, b)| le[a][b]).map(|(a, b)| (format!("{a}{b}"), a, b)).collect();
    let find = |a: usize, b: usize| morphisms.iter().position(|m| m.1 == a && m.2 == b).expect("present");
    let identities = (0..k).map(|a| find(a, a)).collect();
    let mut compose = HashMap::new();
    for (f, &(_, a, b)) in morphisms.iter().enumerate() {
        for (g, &(_, b2, c)) in morphisms.iter().enumerate() {
            if b == b2 {
                compose.insert((g, f), find(a, c));
            }
        }
    }
    SmallCategory::new(objects, morphisms, identities, compose).expect("posets are categories")
}

pub fn small_categories(seed: u64) -> Vec<Named<SmallCategory>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![
        ("poset 0<1".to_string(), SmallCategory::linear_order(2)),
        ("poset 0<1<2".into(), SmallCategory::linear_order(3)),
        ("group Z/2".into(), SmallCategory::cyclic_group(2)),
        ("group Z/3".into(), SmallCategory::cyclic_group(3)),
        ("discrete 2".into(), SmallCategory::discrete(2)),
    ];
    out.push((format!("random poset (seed {seed})"), random_poset(3, &mut rng)));
    out
}

/// Simplicial sets expected to satisfy the 2-Segal condition.
pub fn two_segal_fixtures(trunc: usize, seed: u64) -> Vec<Named<TruncatedSimplicialSet>> {
    let mut out = vec![("point".to_string(), TruncatedSimplicialSet::point(trunc))];
    for (name, c) in small_categories(seed) {
        out.push((format!("nerve of {name}"), nerve_of_category(&c, trunc)));
    }
    if trunc >= 2 {
        let base = nerve_of_category(&SmallCategory::cyclic_group(2), trunc);
        let o = simplicial_to_operad(&base).expect("nerves are 2-Segal");
        out.push(("operad-derived from Z/2".into(), operad_to_simplicial(&o, trunc).expect("invertible")));
    }
    out
}

/// Simplicial sets failing the 2-Segal condition: extra simplices glued
/// into nerves, and a complex missing the 3-simplex over two triangles.
pub fn corrupted_fixtures(trunc: usize) -> Vec<Named<TruncatedSimplicialSet>> {
    let mut out = Vec::new();
    let doubled = |c: &SmallCategory, label: &str| {
        let x = nerve_of_category(c, trunc);
        let s = x.find(2, label).expect("listed simplex");
        x.with_doubled_simplex(2, s).expect("in range")
    };
    if trunc >= 3 {
        out.push(("poset 0<1<2<3 with 01,12 doubled".to_string(), doubled(&SmallCategory::linear_order(4), "01,12")));
        out.push(("poset 0<1<2 with 00,02 doubled".into(), doubled(&SmallCategory::linear_order(3), "00,02")));
        out.push(("Z/2 with g1,g1 doubled".into(), doubled(&SmallCategory::cyclic_group(2), "g1,g1")));
        out.push(("Z/3 with g1,g2 doubled".into(), doubled(&SmallCategory::cyclic_group(3), "g1,g2")));
        out.push(("poset 0<1 with 01,11 doubled".into(), doubled(&SmallCategory::linear_order(2), "01,11")));
        out.push((
            "triangles 012, 023 without 0123".into(),
            TruncatedSimplicialSet::from_complex(4, &[vec![0, 1, 2], vec![0, 2, 3]], trunc).expect("valid complex"),
        ));
    }
    out
}

/// A simplicial set whose face `d_1` on 2-simplices is the wrong one.
pub fn non_functorial(trunc: usize) -> TruncatedSimplicialSet {
    let x = nerve_of_category(&SmallCategory::linear_order(3), trunc);
    let table = x.face(2, 0).to_vec();
    x.with_face(2, 1, table).expect("sizes match")
}

/// Apply random bijections to the colours and operations.
pub fn shuffle_operad(o: &FiniteOperad, rng: &mut impl Rng) -> FiniteOperad {
    let mut pc: Vec<usize> = (0..o.colors().len()).collect();
    let mut po: Vec<usize> = (0..o.ops().len()).collect();
    pc.shuffle(rng);
    po.shuffle(rng);
    let mut colors = vec![String::new(); pc.len()];
    for (c, &d) in pc.iter().enumerate() {
        colors[d] = o.colors()[c].clone();
    }
    let mut ops = vec![Operation { id: String::new(), inputs: Vec::new(), output: 0 }; po.len()];
    for (i, &j) in po.iter().enumerate() {
        let op = o.op(i);
        ops[j] = Operation { id: op.id.clone(), inputs: op.inputs.iter().map(|&c| pc[c]).collect(), output: pc[op.output] };
    }
    let mut units = vec![0; pc.len()];
    for (c, &d) in pc.iter().enumerate() {
        units[d] = po[o.unit(c)];
    }
    let compose = o.compose_entries().map(|(outer, inners, r)| ((po[outer], inners.iter().map(|&i| po[i]).collect()), po[r])).collect();
    FiniteOperad::new(colors, o.arity_bound(), ops, units, compose).expect("relabelling keeps typing")
}

/// An invertible operad with at most three colours: the operad of the nerve
/// of a random category with at most three morphisms, randomly relabelled.
pub fn random_invertible_operad(arity_bound: usize, rng: &mut impl Rng) -> FiniteOperad {
    let categories = [
        SmallCategory::discrete(1),
        SmallCategory::discrete(2),
        SmallCategory::discrete(3),
        SmallCategory::linear_order(2),
        SmallCategory::cyclic_group(2),
        SmallCategory::cyclic_group(3),
    ];
    let c = categories.choose(rng).expect("nonempty");
    let o = simplicial_to_operad(&nerve_of_category(c, arity_bound.max(2))).expect("nerves are 2-Segal");
    shuffle_operad(&o, rng)
}

/// Operads with at most three colours: invertible ones first, then the
/// rest.
pub fn operad_fixtures(arity_bound: usize, seed: u64) -> Vec<Named<FiniteOperad>> {
    let a = arity_bound.max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let nerve_operad = |c: &SmallCategory| simplicial_to_operad(&nerve_of_category(c, a)).expect("nerves are 2-Segal");
    let mut out = vec![
        ("terminal".to_string(), FiniteOperad::terminal(a)),
        ("from the nerve of 0<1".into(), nerve_operad(&SmallCategory::linear_order(2))),
        ("from the nerve of Z/2".into(), nerve_operad(&SmallCategory::cyclic_group(2))),
        ("from the nerve of discrete 2".into(), nerve_operad(&SmallCategory::discrete(2))),
    ];
    for k in 0..2 {
        out.push((format!("random invertible #{k} (seed {seed})"), random_invertible_operad(a, &mut rng)));
    }
    out.extend([
        ("poset 0<1".to_string(), FiniteOperad::of_category(&SmallCategory::linear_order(2), a)),
        ("group Z/2 as unary operad".into(), FiniteOperad::of_category(&SmallCategory::cyclic_group(2), a)),
        ("discrete 2 as unary operad".into(), FiniteOperad::of_category(&SmallCategory::discrete(2), a)),
        ("sums in Z/2".into(), FiniteOperad::sum(2, a)),
        ("sums in Z/3".into(), FiniteOperad::sum(3, a.min(2))),
    ]);
    out
}

/// An operad with one composite redirected.
pub fn corrupted_operad(arity_bound: usize) -> FiniteOperad {
    let o = FiniteOperad::sum(2, arity_bound.max(2));
    let (mu2, mu1, mu1b) = (o.find_op("μ2.0").expect("op"), o.find_op("μ1.0").expect("op"), o.find_op("μ1.1").expect("op"));
    o.with_composite(mu2, vec![mu1b, mu1], mu2).expect("well typed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operads::validate_operad;
    use crate::presheaves::{check_2segal, validate_presheaf};

    #[test]
    fn fixture_classes() {
        for (name, x) in two_segal_fixtures(3, 7) {
            assert!(validate_presheaf(&x), "{name}");
            assert!(check_2segal(&x).ok(), "{name}");
        }
        for (name, x) in corrupted_fixtures(3) {
            assert!(validate_presheaf(&x), "{name}");
            assert!(!check_2segal(&x).ok(), "{name}");
        }
        assert!(!validate_presheaf(&non_functorial(3)));
    }

    #[test]
    fn operads_are_valid() {
        for (name, o) in operad_fixtures(3, 7) {
            assert!(o.colors().len() <= 3, "{name}");
            let report = validate_operad(&o);
            assert!(report.ok(), "{name}: {:?}", report.violations);
        }
        assert!(!validate_operad(&corrupted_operad(3)).ok());
    }
}

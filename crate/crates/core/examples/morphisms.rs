//! Morphisms of trees as maps of the free operads they generate.

use treeloc::fixtures::{worked_morphism, worked_trees};
use treeloc::hom::{hom, operations_of};
use treeloc::localization::{collapse_map, is_boundary_preserving};
use treeloc::trees::{CycTree, Tree};

fn main() -> treeloc::Result<()> {
    let (left, right) = worked_trees();
    for t in [&left, &right] {
        let ops: Vec<_> = operations_of(t).into_iter().filter(|op| !op.is_identity()).collect();
        println!("{t}: {} non-unit operations", ops.len());
        for op in ops {
            println!("  {op}");
        }
    }

    let alpha = worked_morphism();
    println!("\nthe worked example: {alpha}");
    println!("boundary preserving: {}", is_boundary_preserving(&alpha));
    println!("as JSON: {}", alpha.to_json());

    let maps = hom(&left, &right);
    println!("\n|hom({left}, {right})| = {}", maps.len());
    let bp = maps.iter().filter(|m| is_boundary_preserving(m)).count();
    println!("of which {bp} boundary preserving");

    let c = collapse_map(&Tree::parse("((ee)e(e))")?);
    println!("\ncollapse map {c}");

    let (s, t) = (CycTree::from_tree(&Tree::corolla(2)), CycTree::from_tree(&Tree::corolla(2)));
    println!("{} endomorphisms of the plane rootable 2-corolla", hom(&s, &t).len());
    Ok(())
}

//! Building, enumerating and canonicalizing trees.

use treeloc::trees::{enumerate_cyc, enumerate_rootable, enumerate_sym, enumerate_trees, CycTree, EdgeRef, RootableTree, SymTree, Tree};

fn main() -> treeloc::Result<()> {
    let t = Tree::corolla(1).graft(&EdgeRef(vec![0]), &Tree::corolla(4))?;
    println!("{t}: arity {}, {} vertices, {} edges", t.arity(), t.num_vertices(), t.num_edges());
    println!("{}", t.pretty());

    let s = Tree::parse("((ee)(ee)())")?;
    println!("{s} has leaves {:?}", s.leaves().iter().map(|&l| s.path(l).to_dotted()).collect::<Vec<_>>());
    println!("the same tree as JSON: {}", s.shape().to_json());

    // the four flavours of the same shape
    let u = Tree::parse("(e(ee))")?;
    println!("plane {u}, {}, {}, {}", SymTree::from_tree(&u), CycTree::from_tree(&u), RootableTree::from_tree(&u));

    for (v, a) in [(1, 2), (2, 2), (3, 3), (4, 3)] {
        let plane = enumerate_trees(v, a);
        println!(
            "≤{v} vertices of arity ≤{a}: {} plane, {} symmetric, {} plane rootable, {} rootable",
            plane.len(),
            enumerate_sym(&plane).len(),
            enumerate_cyc(&plane).len(),
            enumerate_rootable(&plane).len()
        );
    }
    Ok(())
}

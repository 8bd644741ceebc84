//! Finite operads, their dendroidal nerves, and the three descriptions of
//! invertibility.

use treeloc::fixtures::operad_fixtures;
use treeloc::operads::{characterize_invertible, dendroidal_nerve, tree_tk, validate_operad, FiniteOperad};
use treeloc::presheaves::SmallCategory;
use treeloc::trees::Tree;

fn main() -> treeloc::Result<()> {
    let o = FiniteOperad::sum(2, 2);
    println!("{} colours, {} operations, laws hold: {}", o.colors().len(), o.ops().len(), validate_operad(&o).ok());
    let t = tree_tk(&[2, 0]);
    println!("nerve at {t}: {:?}", dendroidal_nerve(&o, &t)?);

    let poset = FiniteOperad::of_category(&SmallCategory::linear_order(2), 2);
    println!("poset operad at {}: {:?}", Tree::linear(2), dendroidal_nerve(&poset, &Tree::linear(2))?);

    println!("\n{:<40} {:>6} {:>6} {:>6}", "operad", "bp", "coll", "γ");
    for (name, o) in operad_fixtures(2, 3) {
        let c = characterize_invertible(&o, 3);
        println!("{name:<40} {:>6} {:>6} {:>6}", c.b1, c.b2, c.b3);
    }
    Ok(())
}

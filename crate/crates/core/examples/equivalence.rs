//! Invertible operads and 2-Segal simplicial sets, there and back.

use treeloc::equivalence::{operad_to_simplicial, roundtrip_operad, roundtrip_simplicial, simplicial_to_operad};
use treeloc::operads::FiniteOperad;
use treeloc::presheaves::{nerve_of_category, SmallCategory};

fn main() -> treeloc::Result<()> {
    let x = nerve_of_category(&SmallCategory::cyclic_group(2), 3);
    let o = simplicial_to_operad(&x)?;
    println!("the nerve of Z/2 gives {} colours and {} operations", o.colors().len(), o.ops().len());
    let cert = roundtrip_simplicial(&x);
    println!("roundtrip verified: {}", cert.ok);
    for line in &cert.log {
        println!("  {line}");
    }

    let t = FiniteOperad::terminal(3);
    let y = operad_to_simplicial(&t, 3)?;
    println!("\nthe terminal operad gives levels {:?}", (0..=3).map(|n| y.size(n)).collect::<Vec<_>>());
    let cert = roundtrip_operad(&t);
    println!("roundtrip verified: {}", cert.ok);
    for (name, pairs) in &cert.bijections {
        println!("  {name}: {} pairs", pairs.len());
    }

    let poset = FiniteOperad::of_category(&SmallCategory::linear_order(2), 3);
    println!("\nnot invertible, so refused: {:?}", operad_to_simplicial(&poset, 3).err());
    Ok(())
}

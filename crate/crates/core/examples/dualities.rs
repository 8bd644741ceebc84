//! Cuts of linear orders, and the self-duality of the cyclic category.

use treeloc::targets::{binomial, check_dualities, cut_dual_inverse, cut_dual_map, lambda_dual, lambda_dual_inverse, CycMap, DeltaMap, LinOrdMap};

fn main() -> treeloc::Result<()> {
    // three elements to two: the first goes below, the others to 0 and 1
    let f = LinOrdMap::new(3, 2, 1, vec![0, 1])?;
    let phi = cut_dual_map(&f);
    println!("{f:?} has cut dual {phi:?}, which comes back as {:?}", cut_dual_inverse(&phi));

    let g = CycMap::new(2, 3, vec![0, 2, 3])?;
    let d = lambda_dual(&g);
    println!("{g} has dual {d}, inverted back to {}", lambda_dual_inverse(&d));

    for (m, n) in [(1, 2), (2, 3), (3, 3)] {
        println!("|Δ([{m}], [{n}])| = {} = C({}, {})", DeltaMap::all(m, n).len(), n + m + 1, m + 1);
        assert_eq!(DeltaMap::all(m, n).len() as u64, binomial((n + m + 1) as u64, (m + 1) as u64));
    }
    let r = check_dualities(3);
    println!("duality laws up to 3: {} ({} checks)", r.ok(), r.checks);
    Ok(())
}

//! `T_f`, the unique factorization through it, and initial corollas.

use treeloc::fixtures::worked_morphism;
use treeloc::localization::{
    build_tf, check_adjunction, check_initiality, factor_through_tf, factorizations_by_search, lpl_map, Labs, Lcyc, Lpl, Lsym,
};
use treeloc::targets::DeltaMap;
use treeloc::trees::{enumerate_cyc, enumerate_rootable, enumerate_sym, enumerate_trees, Tree};

fn main() -> treeloc::Result<()> {
    let f = DeltaMap::new(1, 3, vec![0, 3])?;
    let (tf, unit) = build_tf(&Tree::eta(), &f)?;
    println!("T_f for η and {f:?}: {tf}, unit {unit}");

    let alpha = worked_morphism();
    let f = lpl_map(&alpha)?;
    let bp = factor_through_tf(&alpha, &f)?;
    println!("\n{alpha}\nfactors as {bp}");
    println!("factorizations found by search: {}", factorizations_by_search(&alpha, &f)?.len());

    let trees = enumerate_trees(3, 3);
    let r = check_adjunction(&trees, 4);
    println!("\nunique factorization over {} maps: {}", r.checks, r.ok());
    for (name, r) in [
        ("pl", check_initiality::<Lpl>(&trees)),
        ("cyc", check_initiality::<Lcyc>(&enumerate_cyc(&trees))),
        ("sym", check_initiality::<Lsym>(&enumerate_sym(&trees))),
        ("abs", check_initiality::<Labs>(&enumerate_rootable(&trees))),
    ] {
        println!("corollas initial in the weak fibers of L_{name}: {} ({} identifications)", r.ok(), r.checks);
    }
    Ok(())
}

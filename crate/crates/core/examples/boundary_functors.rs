//! The four boundary functors on the worked example and on a few small maps.

use treeloc::fixtures::worked_morphism;
use treeloc::hom::{hom, CycForgetPlanar, ForgetRoot, Symmetrize};
use treeloc::localization::{labs_map, lcyc_map, lpl_map, lpl_map_contravariant, lpl_obj, lsym_map};
use treeloc::trees::Tree;

fn main() -> treeloc::Result<()> {
    let alpha = worked_morphism();
    println!("{alpha}");
    println!("L_pl, tracking areas:  {:?}", lpl_map(&alpha)?);
    println!("L_pl, through leaves:  {:?}", lpl_map_contravariant(&alpha)?);
    let cyc = ForgetRoot::apply(&alpha);
    println!("L_cyc: {:?}", lcyc_map(&cyc)?);
    println!("L_sym: {:?}", lsym_map(&Symmetrize::apply(&alpha))?);
    println!("L_abs: {:?}", labs_map(&CycForgetPlanar::apply(&cyc))?);

    // every map between linear trees goes to the identity of [1]
    let (s, t) = (Tree::linear(1), Tree::linear(3));
    for m in hom(&s, &t) {
        println!("{m} ↦ {:?}", lpl_map(&m)?);
    }
    for code in ["e", "()", "(ee)", "((ee)e)"] {
        let t = Tree::parse(code)?;
        println!("L_pl({t}) = [{}]", lpl_obj(&t));
    }
    Ok(())
}

//! Simplicial sets against the 2-Segal condition, before and after
//! restricting along `L_pl`.

use treeloc::fixtures::{corrupted_fixtures, two_segal_fixtures};
use treeloc::presheaves::{
    check_1segal, check_2segal, check_covariantly_fibrant, check_dendroidal_segal, check_reduced_segal, nerve_of_category,
    restrict_along_lpl, SmallCategory,
};

fn main() {
    let x = nerve_of_category(&SmallCategory::linear_order(3), 3);
    println!("nerve of 0<1<2: levels of size {:?}", (0..=3).map(|n| x.size(n)).collect::<Vec<_>>());
    println!("1-Segal {}, 2-Segal {}", check_1segal(&x).ok(), check_2segal(&x).ok());

    println!("\n{:<40} {:>8} {:>10} {:>8} {:>8}", "fixture", "2-Segal", "dendroidal", "reduced", "covfib");
    for (name, x) in two_segal_fixtures(3, 1).into_iter().chain(corrupted_fixtures(3)) {
        let d = restrict_along_lpl(&x, 3, 3);
        println!(
            "{name:<40} {:>8} {:>10} {:>8} {:>8}",
            check_2segal(&x).ok(),
            check_dendroidal_segal(&d).ok(),
            check_reduced_segal(&x).ok(),
            check_covariantly_fibrant(&d).ok()
        );
    }

    let bad = &corrupted_fixtures(3)[0].1;
    if let Some(v) = check_2segal(bad).violations.first() {
        println!("\nwhy the first corrupted fixture fails: {v}");
    }
}

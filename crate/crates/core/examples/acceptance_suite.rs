//! The acceptance checks at reduced bounds; `treeloc suite` runs them at the
//! defaults.

use treeloc::suite::{run_suite, SuiteConfig};

fn main() {
    let cfg = SuiteConfig { max_vertices: 3, trunc: 3, law_vertices: 2, functor_law_vertices: 2, law_samples: 200, ..SuiteConfig::default() };
    println!("seed {}", cfg.seed);
    for v in run_suite(&cfg) {
        println!("{}", v.line());
    }
}

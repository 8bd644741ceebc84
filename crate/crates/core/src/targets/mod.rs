//! The categories the tree functors land in: Δ, Λ, finite pointed sets and
//! finite nonempty sets, plus the linear-order model of Δ^op.

mod delta;
mod finsets;
mod lambda;
mod linord;

pub use delta::{Delta, DeltaMap};
pub use finsets::{linord_to_pointed, FinMap, FinNonempty, FinPointed, LinOrdToPointed, PointedMap};
pub use lambda::{delta_to_lambda, lambda_dual, lambda_dual_inverse, CycMap, DeltaToLambda, Lambda, LambdaDual};
pub use linord::{cut_dual_inverse, cut_dual_map, cut_dual_obj, CutDual, LinOrd, LinOrdCat, LinOrdMap, Part};

use crate::category::{check_functor_laws, LawReport};

/// `C(n, k)`.
pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Both dualities are contravariant functors and bijective on every hom-set
/// with indices at most `max`, and `|Δ([m], [n])| = C(m + n + 1, m + 1)`.
pub fn check_dualities(max: usize) -> LawReport {
    let objs: Vec<usize> = (0..=max).collect();
    let mut report = check_functor_laws(&CutDual::default(), &objs);
    report.merge(check_functor_laws(&LambdaDual::default(), &objs));
    for m in 0..=max {
        for n in 0..=max {
            report.checks += 1;
            let count = DeltaMap::all(m, n).len() as u64;
            if count != binomial((m + n + 1) as u64, (m + 1) as u64) {
                report.fail(format!("|Δ([{m}], [{n}])| = {count}"));
            }
            for f in LinOrdMap::all(m, n) {
                report.checks += 1;
                if cut_dual_inverse(&cut_dual_map(&f)) != f {
                    report.fail(format!("cut duality does not invert at {f:?}"));
                }
            }
            for phi in DeltaMap::all(n, m) {
                report.checks += 1;
                if cut_dual_map(&cut_dual_inverse(&phi)) != phi {
                    report.fail(format!("cut duality does not invert at {phi:?}"));
                }
            }
            for f in CycMap::all(m, n) {
                report.checks += 1;
                let conj = CycMap::compose(&CycMap::rotation(n, -1), &CycMap::compose(&f, &CycMap::rotation(m, 1)).expect("composable"))
                    .expect("composable");
                if lambda_dual(&lambda_dual(&f)) != conj
                    || lambda_dual_inverse(&lambda_dual(&f)) != f
                    || lambda_dual(&lambda_dual_inverse(&f)) != f
                {
                    report.fail(format!("Λ duality is not an involution up to rotation at {f:?}"));
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::{check_category_laws, check_functor_laws};

    #[test]
    fn hom_counts_match_binomials() {
        for m in 0..4u64 {
            for n in 0..4u64 {
                let delta = DeltaMap::all(m as usize, n as usize).len() as u64;
                assert_eq!(delta, binomial(m + n + 1, m + 1));
                let lambda = CycMap::all(m as usize, n as usize).len() as u64;
                assert_eq!(lambda, (m + 1) * binomial(m + n + 1, m + 1));
            }
        }
    }

    #[test]
    fn category_laws() {
        let objs: Vec<usize> = (0..4).collect();
        assert!(check_category_laws(&Delta, &objs, None).ok());
        assert!(check_category_laws(&Lambda, &objs, None).ok());
        assert!(check_category_laws(&LinOrdCat, &objs, None).ok());
        assert!(check_category_laws(&FinPointed, &objs, None).ok());
        assert!(check_category_laws(&FinNonempty, &[1, 2, 3], None).ok());
    }

    #[test]
    fn dualities_up_to_three() {
        let report = check_dualities(3);
        assert!(report.ok(), "{:?}", report.violations);
    }

    #[test]
    fn dualities_are_functors() {
        let objs: Vec<usize> = (0..4).collect();
        assert!(check_functor_laws(&CutDual::default(), &objs).ok());
        assert!(check_functor_laws(&LambdaDual::default(), &objs).ok());
        assert!(check_functor_laws(&DeltaToLambda::default(), &objs).ok());
        assert!(check_functor_laws(&LinOrdToPointed::default(), &objs).ok());
    }
}

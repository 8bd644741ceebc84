//! Segal, 2-Segal and reduced Segal conditions on truncated simplicial sets.

use super::{chain_limit_failure, product_failure, Leg, LimitFailure, Link, TruncatedSimplicialSet};
use crate::category::LawReport;
use crate::targets::DeltaMap;

fn describe(x: &TruncatedSimplicialSet, n: usize, failure: LimitFailure) -> String {
    match failure {
        LimitFailure::NotACone(a) => format!("{} does not commute", x.label(n, a)),
        LimitFailure::NotInjective(a, b) => format!("{} and {} have the same image", x.label(n, a), x.label(n, b)),
        LimitFailure::NotSurjective(have, want) => format!("{have} simplices against {want} in the limit"),
    }
}

/// The spine `X_n → X_1 ×_{X_0} ... ×_{X_0} X_1` is a bijection for
/// `2 ≤ n ≤ N`.
pub fn check_1segal(x: &TruncatedSimplicialSet) -> LawReport {
    let mut report = LawReport::default();
    if x.trunc() == 0 {
        return report;
    }
    let target = x.table(&DeltaMap::new(0, 1, vec![1]).unwrap()).unwrap();
    let source = x.table(&DeltaMap::new(0, 1, vec![0]).unwrap()).unwrap();
    for n in 2..=x.trunc() {
        report.checks += 1;
        let edges: Vec<&[usize]> = (1..=n).map(|k| x.table(&DeltaMap::interval(n, k - 1, k)).unwrap()).collect();
        let legs: Vec<Leg> = edges.iter().map(|map| Leg { map, size: x.size(1) }).collect();
        let links: Vec<Link> = (1..n).map(|_| Link { left: target, right: source }).collect();
        if let Some(f) = chain_limit_failure(x.size(n), &legs, &links) {
            report.fail(format!("spine of level {n}: {}", describe(x, n, f)));
        }
    }
    report
}

/// `X_m → X_{j-i} ×_{X_1} X_{m-j+i+1}` for `0 ≤ i ≤ j ≤ m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegalSquare {
    pub i: usize,
    pub j: usize,
    pub m: usize,
    /// `{i, ..., j} → [m]`.
    pub a: DeltaMap,
    /// `{0, ..., i, j, ..., m} → [m]`; a degeneracy when `i = j`.
    pub b: DeltaMap,
    /// `{i, j} → {i, ..., j}`.
    pub c: DeltaMap,
    /// `{i, j} → {0, ..., i, j, ..., m}`.
    pub d: DeltaMap,
}

impl SegalSquare {
    pub fn new(i: usize, j: usize, m: usize) -> Self {
        assert!(i <= j && j <= m, "need i ≤ j ≤ m");
        let k = m - j + i + 1;
        let a = DeltaMap::interval(m, i, j);
        let b = DeltaMap { n_src: k, n_dst: m, values: (0..=i).chain(j..=m).collect() };
        let c = DeltaMap { n_src: 1, n_dst: j - i, values: vec![0, j - i] };
        let d = DeltaMap { n_src: 1, n_dst: k, values: vec![i, i + 1] };
        SegalSquare { i, j, m, a, b, c, d }
    }
}

/// Every square with `m ≤ n`, including those reaching beyond level `n`.
pub fn segal_squares(n: usize) -> Vec<SegalSquare> {
    let mut out = Vec::new();
    for m in 0..=n {
        for i in 0..=m {
            for j in i..=m {
                out.push(SegalSquare::new(i, j, m));
            }
        }
    }
    out
}

/// Every 2-Segal square inside the truncation goes to a pullback. Squares
/// needing a level above `N` are skipped.
pub fn check_2segal(x: &TruncatedSimplicialSet) -> LawReport {
    let mut report = LawReport::default();
    for sq in segal_squares(x.trunc()) {
        if sq.b.n_src > x.trunc() {
            continue;
        }
        report.checks += 1;
        let (a, b, c, d) = (x.table(&sq.a).unwrap(), x.table(&sq.b).unwrap(), x.table(&sq.c).unwrap(), x.table(&sq.d).unwrap());
        let legs = [Leg { map: a, size: x.size(sq.a.n_src) }, Leg { map: b, size: x.size(sq.b.n_src) }];
        let links = [Link { left: c, right: d }];
        if let Some(f) = chain_limit_failure(x.size(sq.m), &legs, &links) {
            report.fail(format!("square (i, j, m) = ({}, {}, {}): {}", sq.i, sq.j, sq.m, describe(x, sq.m, f)));
        }
    }
    report
}

/// `X_0` is a point and `X_n → X_1^n` along the inert maps is a bijection.
pub fn check_reduced_segal(x: &TruncatedSimplicialSet) -> LawReport {
    let mut report = LawReport::default();
    report.checks += 1;
    if x.size(0) != 1 {
        report.fail(format!("{} vertices", x.size(0)));
    }
    for n in 2..=x.trunc() {
        report.checks += 1;
        let edges: Vec<&[usize]> = (1..=n).map(|k| x.table(&DeltaMap::interval(n, k - 1, k)).unwrap()).collect();
        let legs: Vec<Leg> = edges.iter().map(|map| Leg { map, size: x.size(1) }).collect();
        if let Some(f) = product_failure(x.size(n), &legs) {
            report.fail(format!("level {n}: {}", describe(x, n, f)));
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaves::{nerve_of_category, SmallCategory};

    #[test]
    fn squares_commute_in_delta() {
        for sq in segal_squares(4) {
            let ac = DeltaMap::compose(&sq.a, &sq.c).unwrap();
            let bd = DeltaMap::compose(&sq.b, &sq.d).unwrap();
            assert_eq!(ac, bd, "{sq:?}");
            assert_eq!(ac.values, vec![sq.i, sq.j]);
        }
        assert_eq!(SegalSquare::new(1, 1, 2).b, DeltaMap::degeneracy(2, 1));
    }

    #[test]
    fn nerves_are_segal() {
        for c in [SmallCategory::linear_order(3), SmallCategory::cyclic_group(2)] {
            let x = nerve_of_category(&c, 3);
            assert!(check_1segal(&x).ok());
            assert!(check_2segal(&x).ok());
        }
    }

    #[test]
    fn the_point_is_reduced() {
        let x = TruncatedSimplicialSet::point(4);
        assert!(check_reduced_segal(&x).ok());
        assert!(!check_reduced_segal(&nerve_of_category(&SmallCategory::linear_order(2), 3)).ok());
        assert!(check_reduced_segal(&nerve_of_category(&SmallCategory::cyclic_group(3), 3)).ok());
    }
}

//! Finite set-valued presheaves on Δ and on plane trees, and the Segal-type
//! conditions on them.

mod dendroidal;
mod segal;
mod simplicial;
mod smallcat;

use std::collections::HashMap;

pub use dendroidal::{
    check_covariantly_fibrant, check_dendroidal_functoriality, check_dendroidal_segal, check_grafting_correspondence,
    check_invertible, grafting_squares, restrict_along_lpl, DendroidalSet, GraftingSquare, Restricted,
};
pub use segal::{check_1segal, check_2segal, check_reduced_segal, segal_squares, SegalSquare};
pub use simplicial::TruncatedSimplicialSet;
pub use smallcat::{nerve_of_category, SmallCategory};

/// Functoriality on every composable pair within the truncation.
pub fn validate_presheaf(x: &TruncatedSimplicialSet) -> bool {
    x.check_functoriality().ok()
}

/// One leg `A → Y_k` of a cone over a chain `Y_0 → Z_0 ← Y_1 → Z_1 ← ...`.
pub(crate) struct Leg<'a> {
    pub map: &'a [usize],
    pub size: usize,
}

/// `Y_k → Z_k ← Y_{k+1}`.
pub(crate) struct Link<'a> {
    pub left: &'a [usize],
    pub right: &'a [usize],
}

#[derive(Debug)]
pub(crate) enum LimitFailure {
    NotACone(usize),
    /// Two elements with the same image.
    NotInjective(usize, usize),
    /// Size of the source against that of the limit.
    NotSurjective(usize, u128),
}

/// Whether `a ↦ (leg_k(a))_k` is a bijection from `0..size` onto the limit
/// of the chain, i.e. the tuples with `left_k(y_k) = right_k(y_{k+1})`.
pub(crate) fn chain_limit_failure(size: usize, legs: &[Leg], links: &[Link]) -> Option<LimitFailure> {
    debug_assert_eq!(links.len() + 1, legs.len().max(1));
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::with_capacity(size);
    for a in 0..size {
        let image: Vec<usize> = legs.iter().map(|l| l.map[a]).collect();
        if links.iter().enumerate().any(|(k, l)| l.left[image[k]] != l.right[image[k + 1]]) {
            return Some(LimitFailure::NotACone(a));
        }
        if let Some(&b) = seen.get(&image) {
            return Some(LimitFailure::NotInjective(b, a));
        }
        seen.insert(image, a);
    }
    // count the limit by summing over the chain
    let mut count: Vec<u128> = match legs.first() {
        Some(l) => vec![1; l.size],
        None => return (size != 1).then_some(LimitFailure::NotSurjective(size, 1)),
    };
    for (k, link) in links.iter().enumerate() {
        let mut over: HashMap<usize, u128> = HashMap::new();
        for (y, &c) in count.iter().enumerate() {
            *over.entry(link.left[y]).or_default() += c;
        }
        count = (0..legs[k + 1].size).map(|y| over.get(&link.right[y]).copied().unwrap_or(0)).collect();
    }
    let total: u128 = count.iter().sum();
    (total != size as u128).then_some(LimitFailure::NotSurjective(size, total))
}

/// `Y_0 × ... × Y_r` as a chain over the point.
pub(crate) fn product_failure(size: usize, legs: &[Leg]) -> Option<LimitFailure> {
    let zeros: Vec<Vec<usize>> = legs.iter().map(|l| vec![0; l.size]).collect();
    let links: Vec<Link> = (1..legs.len()).map(|k| Link { left: &zeros[k - 1], right: &zeros[k] }).collect();
    chain_limit_failure(size, legs, &links)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fibre_products_are_counted() {
        // A = {0, 1, 2} over B = C = {0, 1} over D = {0}
        let (p, q) = ([0, 0, 1], [0, 1, 1]);
        let z = [0, 0];
        let legs = [Leg { map: &p, size: 2 }, Leg { map: &q, size: 2 }];
        let links = [Link { left: &z, right: &z }];
        assert!(matches!(chain_limit_failure(3, &legs, &links), Some(LimitFailure::NotSurjective(3, 4))));
        let (p, q) = ([0, 0, 1, 1], [0, 1, 0, 1]);
        let legs = [Leg { map: &p, size: 2 }, Leg { map: &q, size: 2 }];
        assert!(chain_limit_failure(4, &legs, &links).is_none());
        assert!(product_failure(1, &[]).is_none());
        assert!(product_failure(2, &[]).is_some());
    }
}

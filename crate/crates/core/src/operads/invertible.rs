//! Invertible operads: the three equivalent descriptions.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use rayon::prelude::*;

use super::{FiniteOperad, OperadNerve};
use crate::category::LawReport;
use crate::hom::{Morphism, TreeMorphism, TreeObject};
use crate::presheaves::{check_invertible, DendroidalSet};
use crate::trees::{EdgeRef, Tree};

/// `T_k^{n_1, ..., n_k}`: a `k`-corolla with an `n_i`-corolla on leaf `i`.
pub fn tree_tk(arities: &[usize]) -> Tree {
    let mut t = Tree::corolla(arities.len());
    for (i, &n) in arities.iter().enumerate() {
        t = t.graft(&EdgeRef(vec![i]), &Tree::corolla(n)).expect("leaf of the corolla");
    }
    t
}

/// Every unit map and every in-bounds composition map is a bijection. The
/// domain of `γ` for arities `n_1, ..., n_k` is read off the nerve at
/// `T_k^{n_1, ..., n_k}`.
pub fn invertibility_report(o: &FiniteOperad) -> LawReport {
    let mut report = LawReport::default();
    for x in 0..o.colors().len() {
        report.checks += 1;
        if o.with_signature(&[x], x) != [o.unit(x)] {
            report.fail(format!("O({0}; {0}) is not just the unit", o.colors()[x]));
        }
    }
    let a = o.arity_bound();
    let nerve = OperadNerve::new(o, 0);
    for k in 1..=a {
        for arities in (0..k).map(|_| 0..=a).multi_cartesian_product().filter(|v| v.iter().sum::<usize>() <= a) {
            report.checks += 1;
            let t = tree_tk(&arities);
            let Ok(elements) = nerve.elements(&t) else {
                report.fail(format!("no nerve at {t}"));
                continue;
            };
            let n: usize = arities.iter().sum();
            let mut seen: HashMap<usize, usize> = HashMap::new();
            for (e, l) in elements.iter().enumerate() {
                let inners: Vec<usize> = t.inputs(0).iter().map(|&c| l[c]).collect();
                match o.compose(l[0], &inners) {
                    Some(r) => {
                        if let Some(other) = seen.insert(r, e) {
                            report.fail(format!(
                                "γ identifies {} and {} over {t}",
                                nerve.label(&t, other),
                                nerve.label(&t, e)
                            ));
                        }
                    }
                    None => report.fail(format!("γ undefined at {}", nerve.label(&t, e))),
                }
            }
            let targets = o.with_arity(n).len();
            if seen.len() != targets {
                report.fail(format!("composites over {t} reach {} of {targets} operations", seen.len()));
            }
        }
    }
    report
}

pub fn is_invertible_operad(o: &FiniteOperad) -> bool {
    invertibility_report(o).ok()
}

/// The three descriptions of invertibility, with their reports.
#[derive(Clone, Debug)]
pub struct Characterization {
    /// The nerve inverts boundary preserving maps.
    pub b1: bool,
    /// The nerve inverts collapse maps.
    pub b2: bool,
    /// Units and compositions are bijections.
    pub b3: bool,
    pub reports: [LawReport; 3],
}

impl Characterization {
    pub fn agree(&self) -> bool {
        self.b1 == self.b2 && self.b2 == self.b3
    }
}

type BpCache = Mutex<HashMap<(usize, usize), Arc<Vec<TreeMorphism>>>>;

/// The boundary preserving maps among the trees of the given bounds.
fn bp_maps(max_vertices: usize, max_arity: usize) -> Arc<Vec<TreeMorphism>> {
    static CACHE: OnceLock<BpCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(maps) = cache.lock().expect("not poisoned").get(&(max_vertices, max_arity)) {
        return maps.clone();
    }
    let trees = crate::trees::enumerate_trees(max_vertices, max_arity);
    let maps: Vec<TreeMorphism> = trees
        .par_iter()
        .flat_map_iter(|s| {
            trees.iter().filter(|t| t.arity() == s.arity()).flat_map(move |t| {
                crate::hom::edge_maps(s, t, [0], false)
                    .into_iter()
                    .filter(|m| s.is_boundary_preserving_map(t, m))
                    .map(|m| Morphism::new_unchecked(s.clone(), t.clone(), m))
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    let maps = Arc::new(maps);
    cache.lock().expect("not poisoned").insert((max_vertices, max_arity), maps.clone());
    maps
}

fn bp_report(nerve: &OperadNerve, maps: &[TreeMorphism]) -> LawReport {
    maps.par_iter()
        .map(|alpha| {
            let mut report = LawReport::default();
            report.checks += 1;
            let result = nerve.table(alpha).and_then(|t| Ok((t, nerve.size(alpha.source())?)));
            match result {
                Ok((table, n)) if table.len() == n && table.iter().unique().count() == n => {}
                Ok((table, n)) => report.fail(format!("{alpha:?}: {} elements to {n}, not a bijection", table.len())),
                Err(e) => report.fail(format!("{alpha:?}: {e}")),
            }
            report
        })
        .reduce(LawReport::default, |mut a, b| {
            a.merge(b);
            a
        })
}

/// Evaluate the three conditions over trees with at most `max_vertices`
/// vertices of arity at most the operad's bound.
pub fn characterize_invertible(o: &FiniteOperad, max_vertices: usize) -> Characterization {
    let nerve = OperadNerve::new(o, max_vertices);
    let r1 = bp_report(&nerve, &bp_maps(max_vertices, o.arity_bound()));
    let r2 = check_invertible(&nerve);
    let r3 = invertibility_report(o);
    Characterization { b1: r1.ok(), b2: r2.ok(), b3: r3.ok(), reports: [r1, r2, r3] }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaves::SmallCategory;

    #[test]
    fn tk_trees() {
        assert_eq!(tree_tk(&[2, 0, 1]).code(), "((ee)()(e))");
        assert_eq!(tree_tk(&[]).code(), "()");
    }

    #[test]
    fn terminal_and_poset() {
        let c = characterize_invertible(&FiniteOperad::terminal(2), 3);
        assert!(c.b1 && c.b2 && c.b3, "{:?}", c.reports);
        let c = characterize_invertible(&FiniteOperad::of_category(&SmallCategory::linear_order(2), 2), 3);
        assert!(!c.b1 && !c.b2 && !c.b3);
        let c = characterize_invertible(&FiniteOperad::sum(2, 2), 3);
        assert!(c.agree() && !c.b3);
    }
}

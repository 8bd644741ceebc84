//! Finite dendroidal sets over a bounded enumeration of plane trees.

use rayon::prelude::*;

use super::{chain_limit_failure, product_failure, Leg, LimitFailure, Link, SegalSquare, TruncatedSimplicialSet};
use crate::category::LawReport;
use crate::error::{Error, Result};
use crate::hom::{hom, Morphism, TreeMorphism};
use crate::localization::{collapse_map, lpl_map};
use crate::trees::{EdgeId, EdgeRef, Tree};

/// A contravariant functor from plane trees to finite sets, known on the
/// trees it admits.
pub trait DendroidalSet: Sync {
    /// The trees the checks run over.
    fn trees(&self) -> &[Tree];
    fn admits(&self, t: &Tree) -> bool;
    fn size(&self, t: &Tree) -> Result<usize>;
    /// `D(α): D(target) → D(source)` at one element.
    fn act(&self, alpha: &TreeMorphism, x: usize) -> Result<usize>;
    fn label(&self, t: &Tree, x: usize) -> String;

    fn table(&self, alpha: &TreeMorphism) -> Result<Vec<usize>> {
        (0..self.size(alpha.target())?).map(|x| self.act(alpha, x)).collect()
    }
}

/// `X ∘ L_pl`.
pub struct Restricted {
    x: TruncatedSimplicialSet,
    trees: Vec<Tree>,
}

/// The dendroidal set `T ↦ X_{|T|}`, on the trees of the given bounds whose
/// arity is within the truncation.
pub fn restrict_along_lpl(x: &TruncatedSimplicialSet, max_vertices: usize, max_arity: usize) -> Restricted {
    let trees = crate::trees::enumerate_trees(max_vertices, max_arity)
        .into_iter()
        .filter(|t| t.arity() <= x.trunc())
        .collect();
    Restricted { x: x.clone(), trees }
}

impl Restricted {
    pub fn simplicial(&self) -> &TruncatedSimplicialSet {
        &self.x
    }
}

impl DendroidalSet for Restricted {
    fn trees(&self) -> &[Tree] {
        &self.trees
    }

    fn admits(&self, t: &Tree) -> bool {
        t.arity() <= self.x.trunc()
    }

    fn size(&self, t: &Tree) -> Result<usize> {
        if !self.admits(t) {
            return Err(Error::OutOfBounds(format!("{t} has arity above {}", self.x.trunc())));
        }
        Ok(self.x.size(t.arity()))
    }

    fn act(&self, alpha: &TreeMorphism, x: usize) -> Result<usize> {
        self.x.act(&lpl_map(alpha)?, x)
    }

    fn label(&self, t: &Tree, x: usize) -> String {
        self.x.label(t.arity(), x).to_string()
    }

    fn table(&self, alpha: &TreeMorphism) -> Result<Vec<usize>> {
        Ok(self.x.table(&lpl_map(alpha)?)?.to_vec())
    }
}

/// `T = T_1 ∪_e T_2`: `T_1` is `T` cut at `e`, `T_2` what sits above `e`.
#[derive(Clone, Debug)]
pub struct GraftingSquare {
    pub tree: Tree,
    pub edge: EdgeId,
    pub lower: TreeMorphism,
    pub upper: TreeMorphism,
    /// `η → T_1` at the cut edge.
    pub eta_lower: TreeMorphism,
    /// `η → T_2` at the root.
    pub eta_upper: TreeMorphism,
}

/// One square per inner edge of `t`.
pub fn grafting_squares(t: &Tree) -> Vec<GraftingSquare> {
    let inner = (1..t.num_edges()).filter(|&e| !t.is_leaf(e));
    inner
        .map(|e| {
            let (t1, t2) = (t.prune(e), t.subtree(e));
            let prefix = &t.path(e).0;
            let lower_map = (0..t1.num_edges()).map(|d| t.id_of(t1.path(d)).expect("T_1 sits in T")).collect();
            let upper_map = (0..t2.num_edges())
                .map(|d| {
                    let path = prefix.iter().chain(&t2.path(d).0).copied().collect();
                    t.id_of(&EdgeRef(path)).expect("T_2 sits in T")
                })
                .collect();
            let cut = t1.id_of(t.path(e)).expect("e is a leaf of T_1");
            GraftingSquare {
                lower: Morphism::new(t1.clone(), t.clone(), lower_map).expect("inclusion"),
                upper: Morphism::new(t2.clone(), t.clone(), upper_map).expect("inclusion"),
                eta_lower: Morphism::new(Tree::eta(), t1, vec![cut]).expect("edge"),
                eta_upper: Morphism::new(Tree::eta(), t2, vec![0]).expect("edge"),
                tree: t.clone(),
                edge: e,
            }
        })
        .collect()
}

fn describe<D: DendroidalSet + ?Sized>(d: &D, t: &Tree, failure: LimitFailure) -> String {
    match failure {
        LimitFailure::NotACone(a) => format!("{} does not commute", d.label(t, a)),
        LimitFailure::NotInjective(a, b) => format!("{} and {} have the same image", d.label(t, a), d.label(t, b)),
        LimitFailure::NotSurjective(have, want) => format!("{have} elements against {want} in the limit"),
    }
}

fn par_trees<D: DendroidalSet + ?Sized>(d: &D, check: impl Fn(&Tree, &mut LawReport) + Sync) -> LawReport {
    d.trees()
        .par_iter()
        .map(|t| {
            let mut report = LawReport::default();
            check(t, &mut report);
            report
        })
        .reduce(LawReport::default, |mut a, b| {
            a.merge(b);
            a
        })
}

fn record<T>(report: &mut LawReport, result: Result<T>) -> Option<T> {
    result.map_err(|e| report.fail(e.to_string())).ok()
}

/// Every grafting square whose pieces are admitted goes to a pullback.
pub fn check_dendroidal_segal<D: DendroidalSet + ?Sized>(d: &D) -> LawReport {
    par_trees(d, |t, report| {
        for sq in grafting_squares(t) {
            if !d.admits(sq.lower.source()) || !d.admits(sq.upper.source()) {
                continue;
            }
            report.checks += 1;
            let tables = (|| {
                Ok::<_, Error>((
                    d.table(&sq.lower)?,
                    d.table(&sq.upper)?,
                    d.table(&sq.eta_lower)?,
                    d.table(&sq.eta_upper)?,
                    d.size(t)?,
                    d.size(sq.lower.source())?,
                    d.size(sq.upper.source())?,
                ))
            })();
            let Some((p, q, u, v, n, n1, n2)) = record(report, tables) else { continue };
            let legs = [Leg { map: &p, size: n1 }, Leg { map: &q, size: n2 }];
            let links = [Link { left: &u, right: &v }];
            if let Some(f) = chain_limit_failure(n, &legs, &links) {
                report.fail(format!("grafting {t} at {}: {}", t.path(sq.edge), describe(d, t, f)));
            }
        }
    })
}

/// Each grafting square maps under `L_pl` to the 2-Segal square with
/// `i = f(0)`, `j = f(1)`, where `f` is the image of the inclusion of `e`.
pub fn check_grafting_correspondence(trees: &[Tree]) -> LawReport {
    let mut report = LawReport::default();
    for t in trees {
        for sq in grafting_squares(t) {
            report.checks += 1;
            let edge = Morphism::new(Tree::eta(), t.clone(), vec![sq.edge]).expect("edge");
            let images = (|| {
                Ok::<_, Error>((lpl_map(&edge)?, lpl_map(&sq.upper)?, lpl_map(&sq.lower)?, lpl_map(&sq.eta_upper)?, lpl_map(&sq.eta_lower)?))
            })();
            let Some((f, a, b, c, dd)) = record(&mut report, images) else { continue };
            let expected = SegalSquare::new(f.apply(0), f.apply(1), t.arity());
            if (a, b, c, dd) != (expected.a.clone(), expected.b.clone(), expected.c.clone(), expected.d.clone()) {
                report.fail(format!("grafting {t} at {} is not the square {expected:?}", t.path(sq.edge)));
            }
        }
    }
    report
}

/// Every collapse map with an admitted corolla acts bijectively.
pub fn check_invertible<D: DendroidalSet + ?Sized>(d: &D) -> LawReport {
    par_trees(d, |t, report| {
        let alpha = collapse_map(t);
        if !d.admits(alpha.source()) {
            return;
        }
        report.checks += 1;
        let Some((table, n)) = record(report, d.table(&alpha).and_then(|tb| Ok((tb, d.size(alpha.source())?)))) else {
            return;
        };
        let mut hit = vec![false; n];
        for &y in &table {
            hit[y] = true;
        }
        if table.len() != n || hit.contains(&false) {
            report.fail(format!("collapse onto {t}: {} elements to {n}, not a bijection", table.len()));
        }
    })
}

/// `D(T) → Π_leaves D(η)` is a bijection.
pub fn check_covariantly_fibrant<D: DendroidalSet + ?Sized>(d: &D) -> LawReport {
    par_trees(d, |t, report| {
        report.checks += 1;
        let eta = Tree::eta();
        let tables = (|| {
            let n_eta = d.size(&eta)?;
            let legs = t
                .leaves()
                .iter()
                .map(|&l| d.table(&Morphism::new(eta.clone(), t.clone(), vec![l])?))
                .collect::<Result<Vec<_>>>()?;
            Ok::<_, Error>((legs, n_eta, d.size(t)?))
        })();
        let Some((tables, n_eta, n)) = record(report, tables) else { return };
        let legs: Vec<Leg> = tables.iter().map(|map| Leg { map, size: n_eta }).collect();
        if let Some(f) = product_failure(n, &legs) {
            report.fail(format!("leaves of {t}: {}", describe(d, t, f)));
        }
    })
}

/// `D(β ∘ α) = D(α) ∘ D(β)` and `D(id) = id` for all maps among `trees`.
pub fn check_dendroidal_functoriality<D: DendroidalSet + ?Sized>(d: &D, trees: &[Tree]) -> LawReport {
    let homs: Vec<Vec<TreeMorphism>> = trees.iter().map(|s| trees.iter().flat_map(|t| hom(s, t)).collect()).collect();
    let position = |t: &Tree| trees.iter().position(|u| u == t).expect("listed");
    (0..trees.len())
        .into_par_iter()
        .map(|i| {
            let mut report = LawReport::default();
            report.checks += 1;
            match d.table(&Morphism::identity(&trees[i])) {
                Ok(id) if id.iter().enumerate().all(|(k, &v)| k == v) => {}
                other => report.fail(format!("identity of {}: {other:?}", trees[i])),
            }
            for alpha in &homs[i] {
                let Some(ta) = record(&mut report, d.table(alpha)) else { continue };
                for beta in &homs[position(alpha.target())] {
                    report.checks += 1;
                    let composite = Morphism::compose(beta, alpha).expect("composable");
                    let tables = d.table(beta).and_then(|tb| Ok((tb, d.table(&composite)?)));
                    let Some((tb, tba)) = record(&mut report, tables) else { continue };
                    if let Some(x) = (0..tb.len()).find(|&x| tba[x] != ta[tb[x]]) {
                        report.fail(format!(
                            "D({beta:?} ∘ {alpha:?}) ≠ D(α) D(β) at {}",
                            d.label(beta.target(), x)
                        ));
                    }
                }
            }
            report
        })
        .reduce(LawReport::default, |mut a, b| {
            a.merge(b);
            a
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaves::{nerve_of_category, SmallCategory};
    use crate::trees::enumerate_trees;

    #[test]
    fn restriction_values() {
        let x = nerve_of_category(&SmallCategory::linear_order(3), 3);
        let d = restrict_along_lpl(&x, 3, 3);
        assert_eq!(d.size(&Tree::corolla(2)).unwrap(), x.size(2));
        assert_eq!(d.size(&Tree::linear(3)).unwrap(), x.size(1));
        let t = Tree::parse("((ee)e)").unwrap();
        let id: Vec<usize> = (0..x.size(3)).collect();
        assert_eq!(d.table(&collapse_map(&t)).unwrap(), id);
        assert!(d.size(&Tree::corolla(4)).is_err());
    }

    #[test]
    fn grafting_pieces() {
        let t = Tree::parse("((ee)e)").unwrap();
        let squares = grafting_squares(&t);
        assert_eq!(squares.len(), 1);
        assert_eq!(squares[0].lower.source().code(), "(ee)");
        assert_eq!(squares[0].upper.source().code(), "(ee)");
        assert!(check_grafting_correspondence(&enumerate_trees(3, 3)).ok());
    }

    #[test]
    fn nerve_restrictions_are_segal_and_invertible() {
        let x = nerve_of_category(&SmallCategory::linear_order(2), 3);
        let d = restrict_along_lpl(&x, 3, 2);
        assert!(check_dendroidal_segal(&d).ok());
        assert!(check_invertible(&d).ok());
        assert!(!check_covariantly_fibrant(&d).ok());
        assert!(check_dendroidal_functoriality(&d, &enumerate_trees(2, 2)).ok());
    }
}

//! Exhaustive checks of the localization statements over a tree enumeration.

use rayon::prelude::*;

use super::*;
use crate::category::LawReport;
use crate::hom::{ForgetRoot, Symmetrize};
use crate::targets::{delta_to_lambda, lambda_dual, linord_to_pointed};
use crate::trees::{enumerate_cyc, enumerate_rootable, enumerate_sym};

/// Run `check` on every morphism between the given trees.
fn over_homs<T: TreeObject>(trees: &[T], check: impl Fn(&Morphism<T>, &mut LawReport) + Sync) -> LawReport {
    trees
        .par_iter()
        .map(|s| {
            let mut report = LawReport::default();
            for t in trees {
                for alpha in hom(s, t) {
                    report.checks += 1;
                    check(&alpha, &mut report);
                }
            }
            report
        })
        .reduce(LawReport::default, |mut a, b| {
            a.merge(b);
            a
        })
}

/// For every tree and every identification of its image, exactly one
/// compatible boundary preserving map out of the corolla. Compatibility with
/// `φ` means `L(α) = φ⁻¹`, so this holds exactly when `L` is a bijection from
/// the boundary preserving maps out of the corolla onto the automorphisms;
/// that is what is checked, by exhaustive search of the hom-set.
pub fn check_initiality<L: Localizer>(trees: &[L::Tree]) -> LawReport
where
    TargetMap<L>: std::hash::Hash,
{
    trees
        .par_iter()
        .map(|t| {
            let mut report = LawReport::default();
            let n = L::obj(t);
            let corolla = L::corolla(t.rep().arity());
            let mut images = std::collections::HashSet::new();
            let mut count = 0;
            for alpha in hom(&corolla, t).into_iter().filter(|a| a.is_boundary_preserving()) {
                match L::map(&alpha) {
                    Ok(f) if L::is_iso(&f) => {
                        count += 1;
                        images.insert(f);
                    }
                    other => report.fail(format!("L_{} of collapse {alpha:?}: {other:?}", L::NAME)),
                }
            }
            report.checks += L::aut_order(n);
            if images.len() != count || count != L::aut_order(n) {
                report.fail(format!(
                    "L_{}: {count} collapse maps into {t} hit {} of {} identifications",
                    L::NAME,
                    images.len(),
                    L::aut_order(n)
                ));
            }
            report
        })
        .reduce(LawReport::default, |mut a, b| {
            a.merge(b);
            a
        })
}

/// The area and leaf descriptions of `L_pl` and `L_cyc` agree.
pub fn check_descriptions_agree(trees: &[Tree]) -> LawReport {
    let mut report = over_homs(trees, |alpha, r| match (lpl_map(alpha), lpl_map_contravariant(alpha)) {
        (Ok(a), Ok(b)) if a == b => {}
        other => r.fail(format!("L_pl of {alpha:?}: {other:?}")),
    });
    report.merge(over_homs(&enumerate_cyc(trees), |alpha, r| {
        match (lcyc_map(alpha).map(|f| lambda_dual(&f)), lcyc_map_contravariant(alpha)) {
            (Ok(a), Ok(b)) if a == b => {}
            other => r.fail(format!("L_cyc of {alpha:?}: {other:?}")),
        }
    }));
    report
}

fn bp_invertible<L: Localizer>(trees: &[L::Tree]) -> LawReport {
    over_homs(trees, |alpha, r| {
        if alpha.is_boundary_preserving() {
            match L::map(alpha) {
                Ok(f) if L::is_iso(&f) => {}
                other => r.fail(format!("L_{} of boundary preserving {alpha:?}: {other:?}", L::NAME)),
            }
        }
    })
}

/// Boundary preserving maps go to isomorphisms, for all four flavours.
pub fn check_bp_invertible(trees: &[Tree]) -> LawReport {
    let mut report = bp_invertible::<Lpl>(trees);
    report.merge(bp_invertible::<Lcyc>(&enumerate_cyc(trees)));
    report.merge(bp_invertible::<Lsym>(&enumerate_sym(trees)));
    report.merge(bp_invertible::<Labs>(&enumerate_rootable(trees)));
    report
}

/// Run `check` on every morphism between plane trees, with per-tree data
/// computed once.
fn over_plane_homs<D: Send + Sync>(
    trees: &[Tree],
    data: impl Fn(&Tree) -> D + Send + Sync,
    check: impl Fn(&TreeMorphism, &D, &D, &mut LawReport) + Sync,
) -> LawReport {
    let data: Vec<D> = trees.par_iter().map(data).collect();
    (0..trees.len())
        .into_par_iter()
        .map(|i| {
            let mut report = LawReport::default();
            for (j, t) in trees.iter().enumerate() {
                for alpha in hom(&trees[i], t) {
                    report.checks += 1;
                    check(&alpha, &data[i], &data[j], &mut report);
                }
            }
            report
        })
        .reduce(LawReport::default, |mut a, b| {
            a.merge(b);
            a
        })
}

/// `L_cyc` of a forgotten root is `L_pl` seen in Λ, up to the rotations
/// identifying the areas of a tree with those of its stored representative.
pub fn check_extension_cyc(trees: &[Tree]) -> LawReport {
    over_plane_homs(
        trees,
        |t| (CycTree::forget_root(t), cyc_rotation(t)),
        |alpha, (ps, rs), (pt, rt), r| {
            let lhs = lcyc_map(&ForgetRoot::apply_presented(alpha, ps, pt)).and_then(|g| CycMap::compose(&g, rs));
            let rhs = lpl_map(alpha).and_then(|f| CycMap::compose(rt, &delta_to_lambda(&f)));
            match (lhs, rhs) {
                (Ok(a), Ok(b)) if a == b => {}
                other => r.fail(format!("L_cyc does not extend L_pl at {alpha:?}: {other:?}")),
            }
        },
    )
}

/// `L_sym` of a symmetrized map is the leaf map of `L_pl` with the basepoint
/// added, up to relabelling leaves along the symmetrization.
pub fn check_extension_sym(trees: &[Tree]) -> LawReport {
    over_plane_homs(
        trees,
        |t| (SymTree::symmetrize(t), sym_relabel(t)),
        |alpha, (ps, rs), (pt, rt), r| {
            let lhs = lsym_map(&Symmetrize::apply_presented(alpha, ps, pt)).and_then(|g| PointedMap::compose(&g, rt));
            let rhs = lpl_leaf_map(alpha).and_then(|f| PointedMap::compose(rs, &linord_to_pointed(&f)));
            match (lhs, rhs) {
                (Ok(a), Ok(b)) if a == b => {}
                other => r.fail(format!("square fails at {alpha:?}: {other:?}")),
            }
        },
    )
}

/// Every `α: T → S` with `S` of arity at most `max_n` factors uniquely
/// through `T_f`, `f = L_pl(α)`, and the construction finds that factorization.
pub fn check_adjunction(trees: &[Tree], max_n: usize) -> LawReport {
    let targets: Vec<Tree> = trees.iter().filter(|s| s.arity() <= max_n).cloned().collect();
    trees
        .par_iter()
        .map(|t| {
            let mut report = LawReport::default();
            for s in &targets {
                for alpha in hom(t, s) {
                    report.checks += 1;
                    let result = lpl_map(&alpha).and_then(|f| {
                        let bp = factor_through_tf(&alpha, &f)?;
                        let all = factorizations_by_search(&alpha, &f)?;
                        Ok((bp, all))
                    });
                    match result {
                        Ok((bp, all)) if all == [bp.clone()] => {}
                        Ok((_, all)) => report.fail(format!("{alpha:?}: {} factorizations", all.len())),
                        Err(e) => report.fail(format!("{alpha:?}: {e}")),
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
    use crate::trees::enumerate_trees;

    #[test]
    fn small_enumeration() {
        let trees = enumerate_trees(2, 3);
        for report in [check_descriptions_agree(&trees), check_bp_invertible(&trees), check_adjunction(&trees, 3)] {
            assert!(report.ok(), "{:?}", report.violations);
            assert!(report.checks > 0);
        }
    }
}

//! 2-Segal simplicial sets and invertible operads, in both directions.

use std::collections::HashMap;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::localization::{build_tf, collapse_map};
use crate::operads::{is_invertible_operad, validate_operad, FiniteOperad, Operation, OperadMorphism, OperadNerve};
use crate::presheaves::{check_2segal, validate_presheaf, DendroidalSet, TruncatedSimplicialSet};
use crate::targets::DeltaMap;
use crate::trees::Tree;

/// The name of the operation given by the `n`-simplex labelled `label`.
pub fn simplex_op_id(n: usize, label: &str) -> String {
    format!("{label}@{n}")
}

fn spine_and_long_edge(x: &TruncatedSimplicialSet, n: usize) -> Result<(Vec<Vec<usize>>, Vec<usize>)> {
    let edges = (1..=n).map(|i| Ok(x.table(&DeltaMap::interval(n, i - 1, i))?.to_vec())).collect::<Result<Vec<_>>>()?;
    let long = x.table(&DeltaMap { n_src: 1, n_dst: n, values: vec![0, n] })?.to_vec();
    Ok((edges, long))
}

/// Colours `X_1`; operations `X_n` typed by their spine and long edge;
/// composition is the unique filler of `T_k^{n_1, ..., n_k}`.
pub fn simplicial_to_operad(x: &TruncatedSimplicialSet) -> Result<FiniteOperad> {
    let big_n = x.trunc();
    if big_n < 2 {
        return Err(Error::Precondition(format!("truncation {big_n} is below 2")));
    }
    let segal = check_2segal(x);
    if !segal.ok() {
        return Err(Error::Precondition(format!("not 2-Segal: {}", segal.violations[0])));
    }
    let mut ops = Vec::new();
    let mut offset = Vec::new();
    for n in 0..=big_n {
        offset.push(ops.len());
        let (edges, long) = spine_and_long_edge(x, n)?;
        for s in 0..x.size(n) {
            ops.push(Operation {
                id: simplex_op_id(n, x.label(n, s)),
                inputs: edges.iter().map(|e| e[s]).collect(),
                output: long[s],
            });
        }
    }
    let units = (0..x.size(1)).map(|c| offset[1] + c).collect();
    let mut compose = HashMap::new();
    for k in 1..=big_n {
        for arities in (0..k).map(|_| 0..=big_n).multi_cartesian_product() {
            let n: usize = arities.iter().sum();
            if n > big_n {
                continue;
            }
            let starts: Vec<usize> = std::iter::once(0).chain(arities.iter().scan(0, |s, &a| {
                *s += a;
                Some(*s)
            })).collect();
            let g0 = x.table(&DeltaMap { n_src: k, n_dst: n, values: starts.clone() })?;
            let gs = (0..k)
                .map(|i| x.table(&DeltaMap::interval(n, starts[i], starts[i + 1])))
                .collect::<Result<Vec<_>>>()?;
            // every filler, keyed by its restrictions
            let mut fillers: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
            for rho in 0..x.size(n) {
                let key = (g0[rho], gs.iter().map(|g| g[rho]).collect::<Vec<_>>());
                if let Some(other) = fillers.insert(key, rho) {
                    return Err(Error::Inconsistent(format!(
                        "{} and {} fill the same composite",
                        x.label(n, other),
                        x.label(n, rho)
                    )));
                }
            }
            for theta in 0..x.size(k) {
                let (ops, offset) = (&ops, &offset);
                let outer = &ops[offset[k] + theta];
                let choices = arities.iter().zip(&outer.inputs).map(|(&a, &y)| {
                    (0..x.size(a)).filter(move |&s| ops[offset[a] + s].output == y).collect::<Vec<_>>()
                });
                for sigma in choices.multi_cartesian_product() {
                    let rho = fillers.get(&(theta, sigma.clone())).ok_or_else(|| {
                        Error::Inconsistent(format!("no filler for {} over {sigma:?}", x.label(k, theta)))
                    })?;
                    let inners = sigma.iter().zip(&arities).map(|(&s, &a)| offset[a] + s).collect();
                    compose.insert((offset[k] + theta, inners), offset[n] + rho);
                }
            }
        }
    }
    let colors = x.labels(1).to_vec();
    FiniteOperad::new(colors, big_n, ops, units, compose)
}

/// `X(f) = N(unit) ∘ N(collapse)^{-1}` through `T_f`.
pub fn transport_table(nerve: &OperadNerve, f: &DeltaMap) -> Result<Vec<usize>> {
    let (tf, unit) = build_tf(&Tree::corolla(f.n_src), f)?;
    let collapse = collapse_map(&tf);
    let down = nerve.table(&collapse)?;
    let n = nerve.size(collapse.source())?;
    let mut inverse = vec![usize::MAX; n];
    for (e, &y) in down.iter().enumerate() {
        if inverse[y] != usize::MAX {
            return Err(Error::Precondition(format!("collapse onto {tf} is not injective")));
        }
        inverse[y] = e;
    }
    if inverse.contains(&usize::MAX) {
        return Err(Error::Precondition(format!("collapse onto {tf} is not surjective")));
    }
    let up = nerve.table(&unit)?;
    Ok(inverse.into_iter().map(|e| up[e]).collect())
}

/// `X_n` is the nerve at the corolla `C_n`; faces and degeneracies act
/// through `T_f`.
pub fn operad_to_simplicial(o: &FiniteOperad, trunc: usize) -> Result<TruncatedSimplicialSet> {
    if trunc > o.arity_bound() {
        return Err(Error::Precondition(format!("truncation {trunc} above the arity bound {}", o.arity_bound())));
    }
    if !is_invertible_operad(o) {
        return Err(Error::Precondition("the operad is not invertible".into()));
    }
    let nerve = OperadNerve::new(o, 0);
    let labels = (0..=trunc)
        .map(|n| {
            let c = Tree::corolla(n);
            Ok((0..nerve.size(&c)?).map(|x| nerve.label(&c, x)).collect())
        })
        .collect::<Result<Vec<Vec<String>>>>()?;
    let faces = (0..=trunc)
        .map(|n| if n == 0 { Ok(Vec::new()) } else { (0..=n).map(|i| transport_table(&nerve, &DeltaMap::face(n, i))).collect() })
        .collect::<Result<Vec<_>>>()?;
    let degeneracies = (0..=trunc)
        .map(|n| {
            if n == trunc {
                Ok(Vec::new())
            } else {
                (0..=n).map(|i| transport_table(&nerve, &DeltaMap::degeneracy(n, i))).collect()
            }
        })
        .collect::<Result<Vec<_>>>()?;
    TruncatedSimplicialSet::from_generators(labels, faces, degeneracies)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Direction {
    /// Operad, then simplicial set, then operad.
    Operad,
    /// Simplicial set, then operad, then simplicial set.
    Simplicial,
}

/// The outcome of a roundtrip, with the bijections that witness it.
#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceCertificate {
    pub direction: Direction,
    pub ok: bool,
    /// The value constructed on the way, as JSON.
    pub intermediate: Option<serde_json::Value>,
    /// Named bijections as pairs of labels.
    pub bijections: Vec<(String, Vec<(String, String)>)>,
    /// What was checked, in order.
    pub log: Vec<String>,
    pub counterexample: Option<String>,
}

impl EquivalenceCertificate {
    fn new(direction: Direction) -> Self {
        EquivalenceCertificate { direction, ok: false, intermediate: None, bijections: Vec::new(), log: Vec::new(), counterexample: None }
    }

    fn fail(mut self, msg: impl Into<String>) -> Self {
        self.ok = false;
        self.counterexample = Some(msg.into());
        self
    }
}

/// Every map `[m] → [n]` whose `T_f` lies in the operad's bounds acts as
/// the generators say.
fn check_transport(nerve: &OperadNerve, x: &TruncatedSimplicialSet) -> Result<usize> {
    let mut count = 0;
    for m in 0..=x.trunc() {
        for n in 0..=x.trunc() {
            for f in DeltaMap::all(m, n) {
                let (tf, _) = build_tf(&Tree::corolla(m), &f)?;
                if !nerve.admits(&tf) {
                    continue;
                }
                count += 1;
                if transport_table(nerve, &f)? != x.table(&f)? {
                    return Err(Error::Inconsistent(format!("{f:?} through T_f disagrees with the generators")));
                }
            }
        }
    }
    Ok(count)
}

/// `O → X(O) → O(X(O))`, with the colour and operation bijections.
pub fn roundtrip_operad(o: &FiniteOperad) -> EquivalenceCertificate {
    let mut cert = EquivalenceCertificate::new(Direction::Operad);
    let a = o.arity_bound();
    let x = match operad_to_simplicial(o, a) {
        Ok(x) => x,
        Err(e) => return cert.fail(format!("operad_to_simplicial: {e}")),
    };
    cert.intermediate = Some(x.to_json());
    let nerve = OperadNerve::new(o, 0);
    match check_transport(&nerve, &x) {
        Ok(count) => cert.log.push(format!("{count} maps act through T_f as the generators say")),
        Err(e) => return cert.fail(e.to_string()),
    }
    if !validate_presheaf(&x) {
        return cert.fail("the simplicial set is not functorial");
    }
    cert.log.push("simplicial identities hold".into());
    let segal = check_2segal(&x);
    if !segal.ok() {
        return cert.fail(format!("not 2-Segal: {}", segal.violations[0]));
    }
    cert.log.push(format!("2-Segal on {} squares", segal.checks));
    let p = match simplicial_to_operad(&x) {
        Ok(p) => p,
        Err(e) => return cert.fail(format!("simplicial_to_operad: {e}")),
    };
    let valid = validate_operad(&p);
    if !valid.ok() {
        return cert.fail(format!("rebuilt operad: {}", valid.violations[0]));
    }
    cert.log.push(format!("rebuilt operad passes {} law checks", valid.checks));
    let lookup = |t: &Tree, labelling: Vec<usize>, n: usize| -> Result<usize> {
        let s = nerve.find(t, &labelling)?;
        p.find_op(&simplex_op_id(n, x.label(n, s))).ok_or_else(|| Error::Inconsistent(format!("no operation for {labelling:?}")))
    };
    let colors = (0..o.colors().len())
        .map(|c| nerve.find(&Tree::corolla(1), &[o.unit(c), c]))
        .collect::<Result<Vec<_>>>();
    let ops = o
        .ops()
        .iter()
        .enumerate()
        .map(|(i, op)| {
            let mut labelling = vec![i];
            labelling.extend(&op.inputs);
            lookup(&Tree::corolla(op.arity()), labelling, op.arity())
        })
        .collect::<Result<Vec<_>>>();
    let (colors, ops) = match (colors, ops) {
        (Ok(c), Ok(o)) => (c, o),
        (Err(e), _) | (_, Err(e)) => return cert.fail(e.to_string()),
    };
    cert.bijections.push(("colours".into(), colors.iter().enumerate().map(|(c, &d)| (o.colors()[c].clone(), p.colors()[d].clone())).collect()));
    cert.bijections.push(("operations".into(), ops.iter().enumerate().map(|(i, &j)| (o.op(i).id.clone(), p.op(j).id.clone())).collect()));
    let phi = OperadMorphism { colors, ops };
    let report = phi.check(o, &p);
    if !phi.is_isomorphism(o, &p) {
        return cert.fail(format!("not an isomorphism: {:?}", report.violations.first()));
    }
    cert.log.push(format!("isomorphism verified on {} checks", report.checks));
    cert.ok = true;
    cert
}

/// `X → O(X) → X(O(X))`, levelwise, compatibly with faces and degeneracies.
pub fn roundtrip_simplicial(x: &TruncatedSimplicialSet) -> EquivalenceCertificate {
    let mut cert = EquivalenceCertificate::new(Direction::Simplicial);
    let o = match simplicial_to_operad(x) {
        Ok(o) => o,
        Err(e) => return cert.fail(format!("simplicial_to_operad: {e}")),
    };
    cert.intermediate = Some(o.to_json());
    let valid = validate_operad(&o);
    if !valid.ok() {
        return cert.fail(format!("operad laws: {}", valid.violations[0]));
    }
    cert.log.push(format!("operad passes {} law checks", valid.checks));
    if !is_invertible_operad(&o) {
        return cert.fail("the operad is not invertible");
    }
    cert.log.push("the operad is invertible".into());
    let y = match operad_to_simplicial(&o, x.trunc()) {
        Ok(y) => y,
        Err(e) => return cert.fail(format!("operad_to_simplicial: {e}")),
    };
    let nerve = OperadNerve::new(&o, 0);
    let mut phi: Vec<Vec<usize>> = Vec::new();
    for n in 0..=x.trunc() {
        let c = Tree::corolla(n);
        let level = (0..x.size(n))
            .map(|s| {
                let op = o.find_op(&simplex_op_id(n, x.label(n, s))).expect("one operation per simplex");
                let mut labelling = vec![op];
                labelling.extend(&o.op(op).inputs);
                nerve.find(&c, &labelling)
            })
            .collect::<Result<Vec<_>>>();
        let level = match level {
            Ok(l) => l,
            Err(e) => return cert.fail(e.to_string()),
        };
        if level.len() != y.size(n) || level.iter().unique().count() != level.len() {
            return cert.fail(format!("level {n}: {} simplices against {}", x.size(n), y.size(n)));
        }
        cert.bijections.push((
            format!("level {n}"),
            level.iter().enumerate().map(|(s, &t)| (x.label(n, s).to_string(), y.label(n, t).to_string())).collect(),
        ));
        phi.push(level);
    }
    let mut checks = 0;
    for n in 1..=x.trunc() {
        for i in 0..=n {
            for s in 0..x.size(n) {
                checks += 1;
                if phi[n - 1][x.face(n, i)[s]] != y.face(n, i)[phi[n][s]] {
                    return cert.fail(format!("d_{i} of {} is not preserved", x.label(n, s)));
                }
            }
        }
    }
    for n in 0..x.trunc() {
        for i in 0..=n {
            for s in 0..x.size(n) {
                checks += 1;
                if phi[n + 1][x.degeneracy(n, i)[s]] != y.degeneracy(n, i)[phi[n][s]] {
                    return cert.fail(format!("s_{i} of {} is not preserved", x.label(n, s)));
                }
            }
        }
    }
    cert.log.push(format!("levelwise bijection commutes with generators ({checks} checks)"));
    cert.ok = true;
    cert
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presheaves::{nerve_of_category, SmallCategory};

    #[test]
    fn the_point_and_the_terminal_operad() {
        let o = simplicial_to_operad(&TruncatedSimplicialSet::point(3)).unwrap();
        assert_eq!(o.colors().len(), 1);
        assert_eq!((0..=3).map(|n| o.with_arity(n).len()).collect::<Vec<_>>(), vec![1, 1, 1, 1]);
        let x = operad_to_simplicial(&FiniteOperad::terminal(3), 3).unwrap();
        assert_eq!((0..=3).map(|n| x.size(n)).collect::<Vec<_>>(), vec![1, 1, 1, 1]);
        assert!(roundtrip_operad(&FiniteOperad::terminal(3)).ok);
        assert!(roundtrip_simplicial(&TruncatedSimplicialSet::point(3)).ok);
    }

    #[test]
    fn nerve_of_a_poset() {
        let x = nerve_of_category(&SmallCategory::linear_order(2), 3);
        let o = simplicial_to_operad(&x).unwrap();
        assert!(validate_operad(&o).ok());
        assert!(is_invertible_operad(&o));
        let cert = roundtrip_simplicial(&x);
        assert!(cert.ok, "{cert:?}");
        let cert = roundtrip_operad(&o);
        assert!(cert.ok, "{cert:?}");
    }

    #[test]
    fn non_invertible_operads_are_refused() {
        let o = FiniteOperad::of_category(&SmallCategory::linear_order(2), 2);
        assert!(matches!(operad_to_simplicial(&o, 2), Err(Error::Precondition(_))));
        assert!(!roundtrip_operad(&o).ok);
    }
}

//! Finite coloured non-symmetric operads given by tables.
//!
//! Operations have arity at most the bound `A`; composition is a partial
//! table, defined exactly when the composite has arity at most `A`.

mod invertible;
mod nerve;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::category::LawReport;
use crate::error::{Error, Result};
use crate::presheaves::SmallCategory;

pub use invertible::{characterize_invertible, invertibility_report, is_invertible_operad, tree_tk, Characterization};
pub use nerve::{dendroidal_nerve, OperadNerve};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Operation {
    pub id: String,
    pub inputs: Vec<usize>,
    pub output: usize,
}

impl Operation {
    pub fn arity(&self) -> usize {
        self.inputs.len()
    }
}

#[derive(Clone)]
pub struct FiniteOperad {
    colors: Vec<String>,
    arity_bound: usize,
    ops: Vec<Operation>,
    units: Vec<usize>,
    compose: HashMap<(usize, Vec<usize>), usize>,
    by_output_arity: HashMap<(usize, usize), Vec<usize>>,
    by_signature: HashMap<(Vec<usize>, usize), Vec<usize>>,
    op_index: HashMap<String, usize>,
}

impl FiniteOperad {
    /// Checks that everything is well typed; the laws are left to
    /// [`validate_operad`].
    pub fn new(
        colors: Vec<String>,
        arity_bound: usize,
        ops: Vec<Operation>,
        units: Vec<usize>,
        compose: HashMap<(usize, Vec<usize>), usize>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidOperad(msg));
        if colors.iter().unique().count() != colors.len() {
            return bad("repeated colour".into());
        }
        let op_index: HashMap<String, usize> = ops.iter().enumerate().map(|(i, o)| (o.id.clone(), i)).collect();
        if op_index.len() != ops.len() {
            return bad("repeated operation id".into());
        }
        for o in &ops {
            if o.arity() > arity_bound || o.output >= colors.len() || o.inputs.iter().any(|&c| c >= colors.len()) {
                return bad(format!("operation {} is out of range", o.id));
            }
        }
        if units.len() != colors.len() {
            return bad(format!("{} units for {} colours", units.len(), colors.len()));
        }
        for (x, &u) in units.iter().enumerate() {
            if ops.get(u).map(|o| (o.inputs.as_slice(), o.output)) != Some((&[x][..], x)) {
                return bad(format!("unit of {} is not an operation ({0}; {0})", colors[x]));
            }
        }
        for ((outer, inners), &result) in &compose {
            let (Some(o), Some(r)) = (ops.get(*outer), ops.get(result)) else {
                return bad(format!("composition entry {outer} {inners:?} ↦ {result}: unknown operation"));
            };
            let Some(inner_ops) = inners.iter().map(|&i| ops.get(i)).collect::<Option<Vec<_>>>() else {
                return bad(format!("composition entry {} {inners:?}: unknown operation", o.id));
            };
            let matching = inner_ops.len() == o.arity() && inner_ops.iter().zip(&o.inputs).all(|(i, &c)| i.output == c);
            let inputs: Vec<usize> = inner_ops.iter().flat_map(|i| i.inputs.iter().copied()).collect();
            if !matching || r.inputs != inputs || r.output != o.output {
                return bad(format!("composition of {} with {:?} is ill typed", o.id, inner_ops.iter().map(|i| &i.id).collect_vec()));
            }
        }
        let mut by_output_arity: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut by_signature: HashMap<(Vec<usize>, usize), Vec<usize>> = HashMap::new();
        for (i, o) in ops.iter().enumerate() {
            by_output_arity.entry((o.output, o.arity())).or_default().push(i);
            by_signature.entry((o.inputs.clone(), o.output)).or_default().push(i);
        }
        Ok(FiniteOperad { colors, arity_bound, ops, units, compose, by_output_arity, by_signature, op_index })
    }

    /// One colour and one operation `μ_n` of each arity `n ≤ A`.
    pub fn terminal(arity_bound: usize) -> Self {
        Self::sum(1, arity_bound)
    }

    /// One colour, operations of each arity labelled by `Z/k`, composing by
    /// addition. Invertible only for `k = 1`.
    pub fn sum(k: usize, arity_bound: usize) -> Self {
        let name = |n: usize, g: usize| if k == 1 { format!("μ{n}") } else { format!("μ{n}.{g}") };
        let ops: Vec<Operation> = (0..=arity_bound)
            .flat_map(|n| (0..k).map(move |g| Operation { id: name(n, g), inputs: vec![0; n], output: 0 }))
            .collect();
        let id = |n: usize, g: usize| n * k + g;
        let mut compose = HashMap::new();
        for n in 1..=arity_bound {
            for arities in (0..n).map(|_| 0..=arity_bound).multi_cartesian_product() {
                let total: usize = arities.iter().sum();
                if total > arity_bound {
                    continue;
                }
                for labels in (0..=n).map(|_| 0..k).multi_cartesian_product() {
                    let inners = arities.iter().zip(&labels[1..]).map(|(&a, &g)| id(a, g)).collect();
                    compose.insert((id(n, labels[0]), inners), id(total, labels.iter().sum::<usize>() % k));
                }
            }
        }
        Self::new(vec!["*".into()], arity_bound, ops, vec![id(1, 0)], compose).expect("well typed")
    }

    /// A category as an operad with only unary operations.
    pub fn of_category(c: &SmallCategory, arity_bound: usize) -> Self {
        let ops = c.morphisms.iter().map(|(name, s, t)| Operation { id: name.clone(), inputs: vec![*s], output: *t }).collect();
        let compose = c.compose.iter().map(|(&(g, f), &h)| ((g, vec![f]), h)).collect();
        Self::new(c.objects.clone(), arity_bound.max(1), ops, c.identities.clone(), compose).expect("categories are well typed")
    }

    pub fn colors(&self) -> &[String] {
        &self.colors
    }

    pub fn arity_bound(&self) -> usize {
        self.arity_bound
    }

    pub fn ops(&self) -> &[Operation] {
        &self.ops
    }

    pub fn op(&self, i: usize) -> &Operation {
        &self.ops[i]
    }

    pub fn find_op(&self, id: &str) -> Option<usize> {
        self.op_index.get(id).copied()
    }

    pub fn unit(&self, x: usize) -> usize {
        self.units[x]
    }

    pub fn units(&self) -> &[usize] {
        &self.units
    }

    pub fn with_output_arity(&self, output: usize, arity: usize) -> &[usize] {
        self.by_output_arity.get(&(output, arity)).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `O(inputs; output)`.
    pub fn with_signature(&self, inputs: &[usize], output: usize) -> &[usize] {
        self.by_signature.get(&(inputs.to_vec(), output)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn with_arity(&self, arity: usize) -> Vec<usize> {
        (0..self.ops.len()).filter(|&i| self.ops[i].arity() == arity).collect()
    }

    /// `γ(outer; inners)`; composing with nothing is the identity.
    pub fn compose(&self, outer: usize, inners: &[usize]) -> Option<usize> {
        if inners.is_empty() && self.ops[outer].arity() == 0 {
            return Some(outer);
        }
        self.compose.get(&(outer, inners.to_vec())).copied()
    }

    pub fn compose_entries(&self) -> impl Iterator<Item = (usize, &[usize], usize)> + '_ {
        self.compose.iter().map(|((o, i), &r)| (*o, i.as_slice(), r))
    }

    /// A copy with one composite changed.
    pub fn with_composite(&self, outer: usize, inners: Vec<usize>, result: usize) -> Result<Self> {
        let mut compose = self.compose.clone();
        compose.insert((outer, inners), result);
        Self::new(self.colors.clone(), self.arity_bound, self.ops.clone(), self.units.clone(), compose)
    }

    /// Tuples of operations with the given outputs and total arity at most `budget`.
    pub fn inner_tuples(&self, outputs: &[usize], budget: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.extend_tuples(outputs, budget, &mut Vec::new(), &mut out);
        out
    }

    fn extend_tuples(&self, outputs: &[usize], budget: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let Some((&y, rest)) = outputs.split_first() else {
            out.push(prefix.clone());
            return;
        };
        for a in 0..=budget {
            for &op in self.with_output_arity(y, a) {
                prefix.push(op);
                self.extend_tuples(rest, budget - a, prefix, out);
                prefix.pop();
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let ops: Vec<OpJson> = self
            .ops
            .iter()
            .map(|o| OpJson {
                id: o.id.clone(),
                inputs: o.inputs.iter().map(|&c| self.colors[c].clone()).collect(),
                output: self.colors[o.output].clone(),
            })
            .collect();
        let units = self.units.iter().enumerate().map(|(x, &u)| (self.colors[x].clone(), self.ops[u].id.clone())).collect();
        let compose = self
            .compose
            .iter()
            .map(|((o, i), &r)| ComposeJson {
                outer: self.ops[*o].id.clone(),
                inners: i.iter().map(|&k| self.ops[k].id.clone()).collect(),
                result: self.ops[r].id.clone(),
            })
            .sorted_by(|a, b| (&a.outer, &a.inners).cmp(&(&b.outer, &b.inners)))
            .collect();
        serde_json::to_value(OperadJson { colors: self.colors.clone(), arity_bound: self.arity_bound, ops, units, compose })
            .expect("plain data")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let raw: OperadJson = serde_json::from_value(value.clone()).map_err(|e| Error::Parse(format!("operad: {e}")))?;
        let color = |c: &str| raw.colors.iter().position(|x| x == c).ok_or_else(|| Error::Parse(format!("unknown colour {c:?}")));
        let op = |id: &str| raw.ops.iter().position(|o| o.id == id).ok_or_else(|| Error::Parse(format!("unknown operation {id:?}")));
        let ops = raw
            .ops
            .iter()
            .map(|o| {
                Ok(Operation {
                    id: o.id.clone(),
                    inputs: o.inputs.iter().map(|c| color(c)).collect::<Result<_>>()?,
                    output: color(&o.output)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let mut units = vec![usize::MAX; raw.colors.len()];
        for (c, id) in &raw.units {
            units[color(c)?] = op(id)?;
        }
        if units.contains(&usize::MAX) {
            return Err(Error::InvalidOperad("a colour has no unit".into()));
        }
        let mut compose = HashMap::new();
        for entry in &raw.compose {
            let inners = entry.inners.iter().map(|i| op(i)).collect::<Result<Vec<_>>>()?;
            if compose.insert((op(&entry.outer)?, inners), op(&entry.result)?).is_some() {
                return Err(Error::InvalidOperad(format!("two composites of {} with {:?}", entry.outer, entry.inners)));
            }
        }
        Self::new(raw.colors, raw.arity_bound, ops, units, compose)
    }
}

impl fmt::Debug for FiniteOperad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let counts = (0..=self.arity_bound).map(|n| self.ops.iter().filter(|o| o.arity() == n).count()).collect_vec();
        write!(f, "FiniteOperad({} colours, operations by arity {counts:?})", self.colors.len())
    }
}

#[derive(Serialize, Deserialize)]
struct OpJson {
    id: String,
    inputs: Vec<String>,
    output: String,
}

#[derive(Serialize, Deserialize)]
struct ComposeJson {
    outer: String,
    inners: Vec<String>,
    result: String,
}

#[derive(Serialize, Deserialize)]
struct OperadJson {
    colors: Vec<String>,
    arity_bound: usize,
    ops: Vec<OpJson>,
    units: BTreeMap<String, String>,
    compose: Vec<ComposeJson>,
}

/// Totality of the composition table within the bound, unitality and
/// associativity, all exhaustively.
pub fn validate_operad(o: &FiniteOperad) -> LawReport {
    let mut report = LawReport::default();
    let a = o.arity_bound;
    let name = |i: usize| &o.ops[i].id;
    for (outer, op) in o.ops.iter().enumerate() {
        if op.arity() == 0 {
            continue;
        }
        for inners in o.inner_tuples(&op.inputs, a) {
            report.checks += 1;
            if o.compose(outer, &inners).is_none() {
                report.fail(format!("γ({}; {}) is missing", name(outer), inners.iter().map(|&i| name(i)).join(", ")));
            }
        }
        report.checks += 1;
        let units: Vec<usize> = op.inputs.iter().map(|&c| o.unit(c)).collect();
        if o.compose(outer, &units) != Some(outer) {
            report.fail(format!("right unit law fails at {}", name(outer)));
        }
        report.checks += 1;
        if o.compose(o.unit(op.output), &[outer]) != Some(outer) {
            report.fail(format!("left unit law fails at {}", name(outer)));
        }
    }
    for (outer, inners, result) in o.compose_entries() {
        let r = &o.ops[result];
        for taus in o.inner_tuples(&r.inputs, a) {
            report.checks += 1;
            let lhs = o.compose(result, &taus);
            let mut blocks = Vec::with_capacity(inners.len());
            let mut start = 0;
            for &s in inners {
                let k = o.ops[s].arity();
                blocks.push(o.compose(s, &taus[start..start + k]));
                start += k;
            }
            let rhs = blocks.into_iter().collect::<Option<Vec<_>>>().and_then(|b| o.compose(outer, &b));
            if lhs.is_none() || lhs != rhs {
                report.fail(format!(
                    "associativity fails at {}; {}; {}",
                    name(outer),
                    inners.iter().map(|&i| name(i)).join(", "),
                    taus.iter().map(|&i| name(i)).join(", ")
                ));
            }
        }
    }
    report
}

/// A map of operads: colours and operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperadMorphism {
    pub colors: Vec<usize>,
    pub ops: Vec<usize>,
}

impl OperadMorphism {
    /// Signatures, units and every in-bounds composite are preserved.
    pub fn check(&self, source: &FiniteOperad, target: &FiniteOperad) -> LawReport {
        let mut report = LawReport::default();
        report.checks += 1;
        if self.colors.len() != source.colors.len()
            || self.ops.len() != source.ops.len()
            || self.colors.iter().any(|&c| c >= target.colors.len())
            || self.ops.iter().any(|&o| o >= target.ops.len())
        {
            report.fail("maps have the wrong size".into());
            return report;
        }
        for (i, op) in source.ops.iter().enumerate() {
            report.checks += 1;
            let image = &target.ops[self.ops[i]];
            let inputs: Vec<usize> = op.inputs.iter().map(|&c| self.colors[c]).collect();
            if image.inputs != inputs || image.output != self.colors[op.output] {
                report.fail(format!("{} goes to {} of another signature", op.id, image.id));
            }
        }
        for (x, &u) in source.units.iter().enumerate() {
            report.checks += 1;
            if self.ops[u] != target.unit(self.colors[x]) {
                report.fail(format!("unit of {} is not preserved", source.colors[x]));
            }
        }
        for (outer, inners, result) in source.compose_entries() {
            report.checks += 1;
            let inner_images: Vec<usize> = inners.iter().map(|&i| self.ops[i]).collect();
            if target.compose(self.ops[outer], &inner_images) != Some(self.ops[result]) {
                report.fail(format!("γ({}; ...) is not preserved", source.ops[outer].id));
            }
        }
        report
    }

    /// A morphism bijective on colours and operations.
    pub fn is_isomorphism(&self, source: &FiniteOperad, target: &FiniteOperad) -> bool {
        let bijective = |m: &[usize], n: usize| m.len() == n && m.iter().unique().count() == n;
        bijective(&self.colors, target.colors.len()) && bijective(&self.ops, target.ops.len()) && self.check(source, target).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_operads() {
        for o in [
            FiniteOperad::terminal(3),
            FiniteOperad::sum(2, 3),
            FiniteOperad::of_category(&SmallCategory::linear_order(2), 3),
            FiniteOperad::of_category(&SmallCategory::cyclic_group(3), 2),
        ] {
            let report = validate_operad(&o);
            assert!(report.ok(), "{o:?}: {:?}", report.violations);
        }
    }

    #[test]
    fn broken_composite_is_caught() {
        let o = FiniteOperad::sum(2, 2);
        let (mu2, mu1, mu1b) = (o.find_op("μ2.0").unwrap(), o.find_op("μ1.0").unwrap(), o.find_op("μ1.1").unwrap());
        let other = o.find_op("μ2.0").unwrap();
        let broken = o.with_composite(mu2, vec![mu1b, mu1], other).unwrap();
        assert!(!validate_operad(&broken).ok());
    }

    #[test]
    fn json_round_trip() {
        let o = FiniteOperad::of_category(&SmallCategory::linear_order(2), 2);
        let p = FiniteOperad::from_json(&o.to_json()).unwrap();
        assert_eq!(o.to_json(), p.to_json());
        let id = OperadMorphism { colors: vec![0, 1], ops: (0..3).collect() };
        assert!(id.is_isomorphism(&o, &p));
    }

    #[test]
    fn ill_typed_composites_are_rejected() {
        let o = FiniteOperad::of_category(&SmallCategory::linear_order(2), 1);
        let f = o.find_op("01").unwrap();
        assert!(o.with_composite(f, vec![f], f).is_err());
    }
}

//! Finite linear orders with tri-partition maps, and their cut duality with Δ.
//!
//! A map `f: N → M` splits `N` into a left part, a middle part and a right
//! part, monotonely, and sends the middle part weakly monotonely to `M`.

use std::fmt;

use itertools::Itertools;
use serde_json::{json, Value};

use super::delta::DeltaMap;
use crate::category::{Category, Functor, Variance};
use crate::error::{Error, Result};

/// A finite linear order of opaque labels, smallest first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinOrd {
    pub labels: Vec<String>,
}

impl LinOrd {
    pub fn new(labels: Vec<String>) -> Result<Self> {
        if labels.iter().duplicates().next().is_some() {
            return Err(Error::Precondition("repeated label in a linear order".into()));
        }
        Ok(LinOrd { labels })
    }

    /// `{0 < 1 < ... < n-1}`.
    pub fn standard(n: usize) -> Self {
        LinOrd { labels: (0..n).map(|i| i.to_string()).collect() }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    fn position(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Parse(format!("unknown label {label:?}")))
    }
}

/// A morphism `N → M`, on positions. `N` is `0..src`; positions below
/// `minus` form `N_-`, those from `minus` to `minus + values.len()` form the
/// middle, the rest `N_+`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinOrdMap {
    pub src: usize,
    pub dst: usize,
    pub minus: usize,
    pub values: Vec<usize>,
}

/// Where an element of the source goes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Part {
    Minus,
    Middle(usize),
    Plus,
}

impl LinOrdMap {
    pub fn new(src: usize, dst: usize, minus: usize, values: Vec<usize>) -> Result<Self> {
        let f = LinOrdMap { src, dst, minus, values };
        if f.minus + f.values.len() > f.src
            || f.values.iter().any(|&v| v >= f.dst)
            || f.values.windows(2).any(|w| w[0] > w[1])
        {
            return Err(Error::InvalidTargetMap(format!("{f:?}")));
        }
        Ok(f)
    }

    pub fn identity(n: usize) -> Self {
        LinOrdMap { src: n, dst: n, minus: 0, values: (0..n).collect() }
    }

    pub fn part(&self, i: usize) -> Part {
        if i < self.minus {
            Part::Minus
        } else if i < self.minus + self.values.len() {
            Part::Middle(self.values[i - self.minus])
        } else {
            Part::Plus
        }
    }

    /// `g ∘ f`.
    pub fn compose(g: &LinOrdMap, f: &LinOrdMap) -> Result<LinOrdMap> {
        if f.dst != g.src {
            return Err(Error::NotComposable(format!("{} vs {}", f.dst, g.src)));
        }
        let parts: Vec<Part> = (0..f.src)
            .map(|i| match f.part(i) {
                Part::Middle(j) => g.part(j),
                other => other,
            })
            .collect();
        let minus = parts.iter().take_while(|p| **p == Part::Minus).count();
        let values = parts
            .iter()
            .filter_map(|p| match p {
                Part::Middle(k) => Some(*k),
                _ => None,
            })
            .collect();
        LinOrdMap::new(f.src, g.dst, minus, values)
    }

    pub fn all(src: usize, dst: usize) -> Vec<LinOrdMap> {
        let mut out = Vec::new();
        for minus in 0..=src {
            for mid in 0..=src - minus {
                if dst == 0 && mid > 0 {
                    continue;
                }
                for values in (0..dst).combinations_with_replacement(mid) {
                    out.push(LinOrdMap { src, dst, minus, values });
                }
            }
        }
        out
    }

    /// Labelled form with the three parts listed explicitly.
    pub fn to_json(&self, n: &LinOrd, m: &LinOrd) -> Value {
        let mut minus = Vec::new();
        let mut middle = Vec::new();
        let mut plus = Vec::new();
        let mut map = serde_json::Map::new();
        for (i, label) in n.labels.iter().enumerate() {
            match self.part(i) {
                Part::Minus => minus.push(label.clone()),
                Part::Plus => plus.push(label.clone()),
                Part::Middle(j) => {
                    middle.push(label.clone());
                    map.insert(label.clone(), json!(m.labels[j]));
                }
            }
        }
        json!({
            "source": n.labels, "target": m.labels,
            "minus": minus, "middle": middle, "plus": plus, "values": map,
        })
    }

    pub fn from_json(value: &Value) -> Result<(LinOrdMap, LinOrd, LinOrd)> {
        let labels = |key: &str| -> Result<Vec<String>> {
            serde_json::from_value(value.get(key).cloned().unwrap_or(Value::Null))
                .map_err(|e| Error::Parse(format!("{key}: {e}")))
        };
        let n = LinOrd::new(labels("source")?)?;
        let m = LinOrd::new(labels("target")?)?;
        let (minus, middle, plus) = (labels("minus")?, labels("middle")?, labels("plus")?);
        let listed: Vec<&String> = minus.iter().chain(&middle).chain(&plus).collect();
        if listed.len() != n.len() || listed.iter().zip(&n.labels).any(|(a, b)| *a != b) {
            return Err(Error::InvalidTargetMap("the three parts must list the source in order".into()));
        }
        let table = value.get("values").and_then(Value::as_object).ok_or_else(|| Error::Parse("missing values".into()))?;
        let values = middle
            .iter()
            .map(|l| {
                let target = table.get(l).and_then(Value::as_str).ok_or_else(|| Error::Parse(format!("no value for {l:?}")))?;
                m.position(target)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((LinOrdMap::new(n.len(), m.len(), minus.len(), values)?, n, m))
    }
}

impl fmt::Debug for LinOrdMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}→{} -{}|{:?}|+{}", self.src, self.dst, self.minus, self.values, self.src - self.minus - self.values.len())
    }
}

/// A linear order of size `m` has the `m + 1` cuts `[m]`.
pub fn cut_dual_obj(m: &LinOrd) -> usize {
    m.len()
}

/// `f: N → M` gives `[|M|] → [|N|]`: the cut after the first `j` elements of
/// `M` pulls back to the cut after `N_-` and the middle elements below it.
pub fn cut_dual_map(f: &LinOrdMap) -> DeltaMap {
    let values = (0..=f.dst).map(|j| f.minus + f.values.iter().filter(|&&v| v < j).count()).collect();
    DeltaMap { n_src: f.dst, n_dst: f.src, values }
}

/// Inverse of [`cut_dual_map`]: `φ: [m] → [k]` gives a map from the
/// `k`-element order to the `m`-element order.
pub fn cut_dual_inverse(phi: &DeltaMap) -> LinOrdMap {
    let (m, k) = (phi.n_src, phi.n_dst);
    // element x (0-based) sits between cuts x and x+1 of [k]
    let minus = phi.values[0];
    let upper = phi.values[m];
    let values = (minus..upper).map(|x| (1..=m).find(|&j| phi.values[j - 1] <= x && x < phi.values[j]).unwrap() - 1).collect();
    LinOrdMap { src: k, dst: m, minus, values }
}

/// Linear orders; objects are sizes.
#[derive(Clone, Copy, Debug, Default)]
pub struct LinOrdCat;

impl Category for LinOrdCat {
    type Object = usize;
    type Morphism = LinOrdMap;

    fn source(&self, f: &LinOrdMap) -> usize {
        f.src
    }

    fn target(&self, f: &LinOrdMap) -> usize {
        f.dst
    }

    fn identity(&self, x: &usize) -> LinOrdMap {
        LinOrdMap::identity(*x)
    }

    fn compose(&self, g: &LinOrdMap, f: &LinOrdMap) -> Result<LinOrdMap> {
        LinOrdMap::compose(g, f)
    }

    fn hom(&self, x: &usize, y: &usize) -> Vec<LinOrdMap> {
        LinOrdMap::all(*x, *y)
    }
}

/// The contravariant equivalence to Δ.
#[derive(Clone, Copy, Debug, Default)]
pub struct CutDual {
    source: LinOrdCat,
    target: super::delta::Delta,
}

impl Functor for CutDual {
    type Source = LinOrdCat;
    type Target = super::delta::Delta;
    const VARIANCE: Variance = Variance::Contravariant;

    fn source_category(&self) -> &LinOrdCat {
        &self.source
    }

    fn target_category(&self) -> &super::delta::Delta {
        &self.target
    }

    fn map_object(&self, x: &usize) -> usize {
        *x
    }

    fn map_morphism(&self, f: &LinOrdMap) -> Result<DeltaMap> {
        Ok(cut_dual_map(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cut_dual_round_trips() {
        for a in 0..4 {
            for b in 0..4 {
                for f in LinOrdMap::all(a, b) {
                    let phi = cut_dual_map(&f);
                    phi.check().unwrap();
                    assert_eq!(cut_dual_inverse(&phi), f);
                }
                for phi in DeltaMap::all(a, b) {
                    assert_eq!(cut_dual_map(&cut_dual_inverse(&phi)), phi);
                }
            }
        }
    }

    #[test]
    fn small_examples() {
        assert_eq!(cut_dual_obj(&LinOrd::standard(0)), 0);
        assert_eq!(cut_dual_obj(&LinOrd::standard(2)), 2);
        assert!(cut_dual_map(&LinOrdMap::identity(3)).is_identity());
    }

    #[test]
    fn json_round_trip() {
        let n = LinOrd::new(vec!["a".into(), "b".into(), "c".into()]).unwrap();
        let m = LinOrd::new(vec!["x".into(), "y".into()]).unwrap();
        for f in LinOrdMap::all(3, 2) {
            let (g, _, _) = LinOrdMap::from_json(&f.to_json(&n, &m)).unwrap();
            assert_eq!(f, g);
        }
    }
}

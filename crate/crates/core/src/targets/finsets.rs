//! Finite pointed sets and finite nonempty sets.
//!
//! The pointed set with `k` non-base elements is `{0, 1, ..., k}` with
//! basepoint `0`. Maps are stored in their own direction; the tree functors
//! into these categories are contravariant.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::linord::{LinOrdMap, Part};
use crate::category::{Category, Functor, Variance};
use crate::error::{Error, Result};

/// A basepoint preserving map `{0..=src} → {0..=dst}`, given on `1..=src`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointedMap {
    pub src: usize,
    pub dst: usize,
    pub values: Vec<usize>,
}

impl PointedMap {
    pub fn new(src: usize, dst: usize, values: Vec<usize>) -> Result<Self> {
        if values.len() != src || values.iter().any(|&v| v > dst) {
            return Err(Error::InvalidTargetMap(format!("pointed map {src} → {dst}: {values:?}")));
        }
        Ok(PointedMap { src, dst, values })
    }

    pub fn apply(&self, x: usize) -> usize {
        if x == 0 {
            0
        } else {
            self.values[x - 1]
        }
    }

    pub fn identity(n: usize) -> Self {
        PointedMap { src: n, dst: n, values: (1..=n).collect() }
    }

    pub fn compose(g: &PointedMap, f: &PointedMap) -> Result<PointedMap> {
        if f.dst != g.src {
            return Err(Error::NotComposable(format!("{} vs {}", f.dst, g.src)));
        }
        Ok(PointedMap { src: f.src, dst: g.dst, values: f.values.iter().map(|&v| g.apply(v)).collect() })
    }

    pub fn is_iso(&self) -> bool {
        self.src == self.dst && self.values.iter().all(|&v| v != 0) && self.values.iter().all_unique()
    }

    pub fn all(src: usize, dst: usize) -> Vec<PointedMap> {
        (0..src)
            .map(|_| 0..=dst)
            .multi_cartesian_product()
            .map(|values| PointedMap { src, dst, values })
            .collect()
    }
}

impl fmt::Debug for PointedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fin*({}→{}) {:?}", self.src, self.dst, self.values)
    }
}

/// A map `{0..src} → {0..dst}` of nonempty finite sets.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FinMap {
    pub src: usize,
    pub dst: usize,
    pub values: Vec<usize>,
}

impl FinMap {
    pub fn new(src: usize, dst: usize, values: Vec<usize>) -> Result<Self> {
        if src == 0 || dst == 0 || values.len() != src || values.iter().any(|&v| v >= dst) {
            return Err(Error::InvalidTargetMap(format!("map {src} → {dst}: {values:?}")));
        }
        Ok(FinMap { src, dst, values })
    }

    pub fn identity(n: usize) -> Self {
        FinMap { src: n, dst: n, values: (0..n).collect() }
    }

    pub fn compose(g: &FinMap, f: &FinMap) -> Result<FinMap> {
        if f.dst != g.src {
            return Err(Error::NotComposable(format!("{} vs {}", f.dst, g.src)));
        }
        Ok(FinMap { src: f.src, dst: g.dst, values: f.values.iter().map(|&v| g.values[v]).collect() })
    }

    pub fn is_iso(&self) -> bool {
        self.src == self.dst && self.values.iter().all_unique()
    }

    pub fn all(src: usize, dst: usize) -> Vec<FinMap> {
        if src == 0 || dst == 0 {
            return Vec::new();
        }
        (0..src).map(|_| 0..dst).multi_cartesian_product().map(|values| FinMap { src, dst, values }).collect()
    }
}

impl fmt::Debug for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fin({}→{}) {:?}", self.src, self.dst, self.values)
    }
}

/// Forget the order and add a basepoint: the outer parts go to the basepoint.
pub fn linord_to_pointed(f: &LinOrdMap) -> PointedMap {
    let values = (0..f.src)
        .map(|i| match f.part(i) {
            Part::Middle(j) => j + 1,
            _ => 0,
        })
        .collect();
    PointedMap { src: f.src, dst: f.dst, values }
}

macro_rules! finite_category {
    ($cat:ident, $map:ty) => {
        #[derive(Clone, Copy, Debug, Default)]
        pub struct $cat;

        impl Category for $cat {
            type Object = usize;
            type Morphism = $map;

            fn source(&self, f: &$map) -> usize {
                f.src
            }

            fn target(&self, f: &$map) -> usize {
                f.dst
            }

            fn identity(&self, x: &usize) -> $map {
                <$map>::identity(*x)
            }

            fn compose(&self, g: &$map, f: &$map) -> Result<$map> {
                <$map>::compose(g, f)
            }

            fn hom(&self, x: &usize, y: &usize) -> Vec<$map> {
                <$map>::all(*x, *y)
            }
        }
    };
}

finite_category!(FinPointed, PointedMap);
finite_category!(FinNonempty, FinMap);

/// `ℒ → Fin_*`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LinOrdToPointed {
    source: super::linord::LinOrdCat,
    target: FinPointed,
}

impl Functor for LinOrdToPointed {
    type Source = super::linord::LinOrdCat;
    type Target = FinPointed;
    const VARIANCE: Variance = Variance::Covariant;

    fn source_category(&self) -> &Self::Source {
        &self.source
    }

    fn target_category(&self) -> &FinPointed {
        &self.target
    }

    fn map_object(&self, x: &usize) -> usize {
        *x
    }

    fn map_morphism(&self, f: &LinOrdMap) -> Result<PointedMap> {
        Ok(linord_to_pointed(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_map_absorbs() {
        let zero = PointedMap::new(2, 3, vec![0, 0]).unwrap();
        for f in PointedMap::all(1, 2) {
            assert_eq!(PointedMap::compose(&zero, &f).unwrap().values, vec![0]);
        }
    }

    #[test]
    fn hom_sizes() {
        assert_eq!(PointedMap::all(2, 1).len(), 4);
        assert_eq!(PointedMap::all(0, 3).len(), 1);
        assert_eq!(FinMap::all(2, 3).len(), 9);
        assert!(FinMap::all(0, 3).is_empty());
    }
}

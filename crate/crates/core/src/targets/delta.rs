use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::category::Category;
use crate::error::{Error, Result};

/// A weakly monotone map `[n_src] → [n_dst]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeltaMap {
    pub n_src: usize,
    pub n_dst: usize,
    pub values: Vec<usize>,
}

impl DeltaMap {
    pub fn new(n_src: usize, n_dst: usize, values: Vec<usize>) -> Result<Self> {
        let m = DeltaMap { n_src, n_dst, values };
        m.check()?;
        Ok(m)
    }

    pub fn check(&self) -> Result<()> {
        if self.values.len() != self.n_src + 1 {
            return Err(Error::InvalidTargetMap(format!("{self:?}: need {} values", self.n_src + 1)));
        }
        if self.values.iter().any(|&v| v > self.n_dst) {
            return Err(Error::InvalidTargetMap(format!("{self:?}: value out of range")));
        }
        if self.values.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidTargetMap(format!("{self:?}: not monotone")));
        }
        Ok(())
    }

    pub fn identity(n: usize) -> Self {
        DeltaMap { n_src: n, n_dst: n, values: (0..=n).collect() }
    }

    /// `g ∘ f`.
    pub fn compose(g: &DeltaMap, f: &DeltaMap) -> Result<DeltaMap> {
        if f.n_dst != g.n_src {
            return Err(Error::NotComposable(format!("[{}] vs [{}]", f.n_dst, g.n_src)));
        }
        Ok(DeltaMap { n_src: f.n_src, n_dst: g.n_dst, values: f.values.iter().map(|&i| g.values[i]).collect() })
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    pub fn is_identity(&self) -> bool {
        self.n_src == self.n_dst && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Isomorphisms of Δ are identities.
    pub fn is_iso(&self) -> bool {
        self.is_identity()
    }

    pub fn is_injective(&self) -> bool {
        self.values.windows(2).all(|w| w[0] < w[1])
    }

    pub fn is_surjective(&self) -> bool {
        self.values.first() == Some(&0)
            && self.values.last() == Some(&self.n_dst)
            && self.values.windows(2).all(|w| w[1] - w[0] <= 1)
    }

    /// `d_i: [n-1] → [n]`, skipping `i`.
    pub fn face(n: usize, i: usize) -> Self {
        let values = (0..n).map(|j| if j < i { j } else { j + 1 }).collect();
        DeltaMap { n_src: n - 1, n_dst: n, values }
    }

    /// `s_i: [n+1] → [n]`, hitting `i` twice.
    pub fn degeneracy(n: usize, i: usize) -> Self {
        let values = (0..=n + 1).map(|j| if j <= i { j } else { j - 1 }).collect();
        DeltaMap { n_src: n + 1, n_dst: n, values }
    }

    /// The inclusion of the subinterval `{lo, ..., hi}`.
    pub fn interval(n: usize, lo: usize, hi: usize) -> Self {
        DeltaMap { n_src: hi - lo, n_dst: n, values: (lo..=hi).collect() }
    }

    /// Every map `[m] → [n]` in lexicographic order.
    pub fn all(m: usize, n: usize) -> Vec<DeltaMap> {
        (0..=n)
            .combinations_with_replacement(m + 1)
            .map(|values| DeltaMap { n_src: m, n_dst: n, values })
            .collect()
    }

    /// Epi–mono factorisation: degeneracies, then faces, each list in the
    /// order of application.
    pub fn epi_mono(&self) -> (Vec<DeltaMap>, Vec<DeltaMap>) {
        let image: Vec<usize> = self.values.iter().copied().dedup().collect();
        let k = image.len() - 1;
        // surjection [n_src] → [k]: collapse the leftmost repeated pair until none is left
        let mut degeneracies = Vec::new();
        let mut vals = self.values.clone();
        while let Some(j) = (0..vals.len() - 1).find(|&j| vals[j] == vals[j + 1]) {
            degeneracies.push(DeltaMap::degeneracy(vals.len() - 2, j));
            vals.remove(j + 1);
        }
        // injection [k] → [n_dst]: one face per missed value, smallest first
        let mut faces = Vec::new();
        let missing: Vec<usize> = (0..=self.n_dst).filter(|v| !image.contains(v)).collect();
        let mut size = k;
        for &v in &missing {
            size += 1;
            faces.push(DeltaMap::face(size, v));
        }
        (degeneracies, faces)
    }
}

impl fmt::Debug for DeltaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]→[{}] {:?}", self.n_src, self.n_dst, self.values)
    }
}

impl fmt::Display for DeltaMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.values.iter().join(","))
    }
}

/// The simplex category; objects are the `n` of `[n]`.
#[derive(Clone, Copy, Debug, Default)]
pub struct Delta;

impl Category for Delta {
    type Object = usize;
    type Morphism = DeltaMap;

    fn source(&self, f: &DeltaMap) -> usize {
        f.n_src
    }

    fn target(&self, f: &DeltaMap) -> usize {
        f.n_dst
    }

    fn identity(&self, x: &usize) -> DeltaMap {
        DeltaMap::identity(*x)
    }

    fn compose(&self, g: &DeltaMap, f: &DeltaMap) -> Result<DeltaMap> {
        DeltaMap::compose(g, f)
    }

    fn hom(&self, x: &usize, y: &usize) -> Vec<DeltaMap> {
        DeltaMap::all(*x, *y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn faces_and_degeneracies() {
        assert_eq!(DeltaMap::face(2, 1).values, vec![0, 2]);
        assert_eq!(DeltaMap::degeneracy(1, 0).values, vec![0, 0, 1]);
        assert!(DeltaMap::face(3, 0).check().is_ok());
        assert!(DeltaMap::new(1, 1, vec![1, 0]).is_err());
    }

    #[test]
    fn epi_mono_recomposes() {
        for m in 0..4 {
            for n in 0..4 {
                for f in DeltaMap::all(m, n) {
                    let (eps, mons) = f.epi_mono();
                    let mut acc = DeltaMap::identity(m);
                    for g in eps.iter().chain(&mons) {
                        acc = DeltaMap::compose(g, &acc).unwrap();
                    }
                    assert_eq!(acc, f);
                }
            }
        }
    }
}

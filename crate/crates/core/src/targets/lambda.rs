//! Connes' cyclic category Λ.
//!
//! A map `[m] → [n]` is a weakly monotone `φ: ℤ → ℤ` with
//! `φ(i + m + 1) = φ(i) + n + 1`, modulo shifting by multiples of `n + 1`.
//! It is stored by its values on `0..=m`, normalised so that `φ(0) ∈ 0..=n`.

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::delta::DeltaMap;
use super::finsets::FinMap;
use crate::category::{Category, Functor, Variance};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycMap {
    pub m: usize,
    pub n: usize,
    #[serde(rename = "phi0_to_phim")]
    pub phi: Vec<i64>,
}

impl CycMap {
    pub fn new(m: usize, n: usize, phi: Vec<i64>) -> Result<Self> {
        let f = CycMap { m, n, phi };
        f.check()?;
        Ok(f)
    }

    pub fn check(&self) -> Result<()> {
        let period = self.n as i64 + 1;
        let ok = self.phi.len() == self.m + 1
            && (0..period).contains(&self.phi[0])
            && self.phi.windows(2).all(|w| w[0] <= w[1])
            && self.phi[self.m] <= self.phi[0] + period;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidTargetMap(format!("{self:?} is not a normalised cyclic map")))
        }
    }

    /// Normalise any lift given on `0..=m`.
    pub fn from_lift(m: usize, n: usize, lift: Vec<i64>) -> Result<Self> {
        let shift = lift[0].div_euclid(n as i64 + 1) * (n as i64 + 1);
        CycMap::new(m, n, lift.into_iter().map(|v| v - shift).collect())
    }

    /// The lift evaluated anywhere on ℤ.
    pub fn eval(&self, i: i64) -> i64 {
        let p = self.m as i64 + 1;
        let q = i.div_euclid(p);
        self.phi[i.rem_euclid(p) as usize] + q * (self.n as i64 + 1)
    }

    pub fn identity(n: usize) -> Self {
        CycMap { m: n, n, phi: (0..=n as i64).collect() }
    }

    /// `i ↦ i + k` on `[n]`.
    pub fn rotation(n: usize, k: i64) -> Self {
        CycMap::from_lift(n, n, (0..=n as i64).map(|i| i + k).collect()).expect("rotations are cyclic maps")
    }

    /// `g ∘ f`.
    pub fn compose(g: &CycMap, f: &CycMap) -> Result<CycMap> {
        if f.n != g.m {
            return Err(Error::NotComposable(format!("[{}] vs [{}]", f.n, g.m)));
        }
        CycMap::from_lift(f.m, g.n, f.phi.iter().map(|&v| g.eval(v)).collect())
    }

    pub fn is_identity(&self) -> bool {
        *self == CycMap::identity(self.n) && self.m == self.n
    }

    /// Isomorphisms of Λ are the rotations.
    pub fn is_iso(&self) -> bool {
        self.m == self.n && self.phi.windows(2).all(|w| w[1] == w[0] + 1)
    }

    /// Every map `[m] → [n]`.
    pub fn all(m: usize, n: usize) -> Vec<CycMap> {
        let period = n as i64 + 1;
        let mut out = Vec::new();
        for start in 0..period {
            for rest in (start..=start + period).combinations_with_replacement(m) {
                let mut phi = vec![start];
                phi.extend(rest);
                out.push(CycMap { m, n, phi });
            }
        }
        out
    }

    /// The underlying map of marked points.
    pub fn points(&self) -> FinMap {
        let period = self.n as i64 + 1;
        FinMap { src: self.m + 1, dst: self.n + 1, values: self.phi.iter().map(|v| v.rem_euclid(period) as usize).collect() }
    }
}

impl fmt::Debug for CycMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Λ[{}]→[{}] {:?}", self.m, self.n, self.phi)
    }
}

impl fmt::Display for CycMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.phi.iter().join(","))
    }
}

/// The self-duality, exchanging marked points and intervals: interval `j`
/// of the target (the arc from `j` to `j + 1`) goes to the interval of the
/// source containing its preimage, `max {i : φ(i) ≤ j}`.
///
/// Applying it twice gives `φ` conjugated by the rotation `i ↦ i + 1`, see
/// [`lambda_dual_inverse`] for the strict inverse.
pub fn lambda_dual(f: &CycMap) -> CycMap {
    let lift = (0..=f.n as i64).map(|j| max_below(f, j)).collect();
    CycMap::from_lift(f.n, f.m, lift).expect("the dual of a cyclic map is cyclic")
}

/// `j ↦ min {i : φ(i) ≥ j}`; satisfies `lambda_dual_inverse(lambda_dual(f)) = f`.
pub fn lambda_dual_inverse(f: &CycMap) -> CycMap {
    let lift = (0..=f.n as i64).map(|j| max_below(f, j - 1) + 1).collect();
    CycMap::from_lift(f.n, f.m, lift).expect("the dual of a cyclic map is cyclic")
}

fn max_below(f: &CycMap, j: i64) -> i64 {
    // φ(i) ≤ j holds for all small enough i and fails for large ones
    let p = f.m as i64 + 1;
    let mut i = (j.div_euclid(f.n as i64 + 1) - 1) * p;
    while f.eval(i) > j {
        i -= p;
    }
    while f.eval(i + 1) <= j {
        i += 1;
    }
    i
}

/// `Δ → Λ`: the elements of `[n]` become the marked points of the circle.
pub fn delta_to_lambda(f: &DeltaMap) -> CycMap {
    CycMap { m: f.n_src, n: f.n_dst, phi: f.values.iter().map(|&v| v as i64).collect() }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Lambda;

impl Category for Lambda {
    type Object = usize;
    type Morphism = CycMap;

    fn source(&self, f: &CycMap) -> usize {
        f.m
    }

    fn target(&self, f: &CycMap) -> usize {
        f.n
    }

    fn identity(&self, x: &usize) -> CycMap {
        CycMap::identity(*x)
    }

    fn compose(&self, g: &CycMap, f: &CycMap) -> Result<CycMap> {
        CycMap::compose(g, f)
    }

    fn hom(&self, x: &usize, y: &usize) -> Vec<CycMap> {
        CycMap::all(*x, *y)
    }
}

/// `Λ → Λ^op`.
#[derive(Clone, Copy, Debug, Default)]
pub struct LambdaDual {
    cat: Lambda,
}

impl Functor for LambdaDual {
    type Source = Lambda;
    type Target = Lambda;
    const VARIANCE: Variance = Variance::Contravariant;

    fn source_category(&self) -> &Lambda {
        &self.cat
    }

    fn target_category(&self) -> &Lambda {
        &self.cat
    }

    fn map_object(&self, x: &usize) -> usize {
        *x
    }

    fn map_morphism(&self, f: &CycMap) -> Result<CycMap> {
        Ok(lambda_dual(f))
    }
}

/// `Δ → Λ`.
#[derive(Clone, Copy, Debug, Default)]
pub struct DeltaToLambda {
    source: super::delta::Delta,
    target: Lambda,
}

impl Functor for DeltaToLambda {
    type Source = super::delta::Delta;
    type Target = Lambda;
    const VARIANCE: Variance = Variance::Covariant;

    fn source_category(&self) -> &super::delta::Delta {
        &self.source
    }

    fn target_category(&self) -> &Lambda {
        &self.target
    }

    fn map_object(&self, x: &usize) -> usize {
        *x
    }

    fn map_morphism(&self, f: &DeltaMap) -> Result<CycMap> {
        Ok(delta_to_lambda(f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotations_of_one_and_two() {
        let r = CycMap::rotation(1, 1);
        assert!(!r.is_identity());
        assert!(CycMap::compose(&r, &r).unwrap().is_identity());
        let (r1, r2) = (CycMap::rotation(2, 1), CycMap::rotation(2, 2));
        assert!(CycMap::compose(&r1, &r2).unwrap().is_identity());
        assert_eq!(lambda_dual(&r1), CycMap::rotation(2, -1));
    }

    #[test]
    fn double_dual_is_rotation_conjugate() {
        for m in 0..4 {
            for n in 0..4 {
                for f in CycMap::all(m, n) {
                    f.check().unwrap();
                    let dd = lambda_dual(&lambda_dual(&f));
                    let conj = CycMap::compose(&CycMap::rotation(n, -1), &CycMap::compose(&f, &CycMap::rotation(m, 1)).unwrap()).unwrap();
                    assert_eq!(dd, conj);
                    assert_eq!(lambda_dual_inverse(&lambda_dual(&f)), f);
                    assert_eq!(lambda_dual(&lambda_dual_inverse(&f)), f);
                }
            }
        }
    }

    #[test]
    fn face_map_lands_in_lambda() {
        let d0 = DeltaMap::face(1, 0);
        assert_eq!(delta_to_lambda(&d0).phi, vec![1]);
        assert!(delta_to_lambda(&DeltaMap::identity(3)).is_identity());
    }
}

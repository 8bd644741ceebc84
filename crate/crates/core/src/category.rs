//! Minimal finite-category interface and exhaustive law checks.

use std::fmt::Debug;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;

pub trait Category: Sync {
    type Object: Clone + Eq + Debug + Send + Sync;
    type Morphism: Clone + Eq + Debug + Send + Sync;

    fn source(&self, f: &Self::Morphism) -> Self::Object;
    fn target(&self, f: &Self::Morphism) -> Self::Object;
    fn identity(&self, x: &Self::Object) -> Self::Morphism;
    /// `g ∘ f`.
    fn compose(&self, g: &Self::Morphism, f: &Self::Morphism) -> Result<Self::Morphism>;
    /// All morphisms `x → y`, in a deterministic order.
    fn hom(&self, x: &Self::Object, y: &Self::Object) -> Vec<Self::Morphism>;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

pub trait Functor: Sync {
    type Source: Category;
    type Target: Category;
    const VARIANCE: Variance;

    fn source_category(&self) -> &Self::Source;
    fn target_category(&self) -> &Self::Target;
    fn map_object(&self, x: &<Self::Source as Category>::Object) -> <Self::Target as Category>::Object;
    fn map_morphism(
        &self,
        f: &<Self::Source as Category>::Morphism,
    ) -> Result<<Self::Target as Category>::Morphism>;
}

/// Outcome of an exhaustive law check.
#[derive(Clone, Debug, Default)]
pub struct LawReport {
    pub checks: usize,
    pub violations: Vec<String>,
}

impl LawReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: LawReport) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
    }

    pub fn fail(&mut self, msg: String) {
        // keep the report readable when a law fails everywhere
        if self.violations.len() < 20 {
            self.violations.push(msg);
        }
    }
}

/// All morphisms between the given objects, grouped by source index.
pub fn morphisms_by_source<C: Category>(cat: &C, objects: &[C::Object]) -> Vec<Vec<(usize, C::Morphism)>> {
    objects
        .par_iter()
        .map(|x| {
            objects
                .iter()
                .enumerate()
                .flat_map(|(j, y)| cat.hom(x, y).into_iter().map(move |f| (j, f)))
                .collect()
        })
        .collect()
}

/// Unit laws on every morphism and associativity on every composable triple
/// among `objects`. With `max_triples_per_morphism`, associativity is checked
/// only on the first that many `(g, h)` continuations of each `f`.
pub fn check_category_laws<C: Category>(
    cat: &C,
    objects: &[C::Object],
    max_triples_per_morphism: Option<usize>,
) -> LawReport {
    let by_source = morphisms_by_source(cat, objects);
    let reports: Vec<LawReport> = (0..objects.len())
        .into_par_iter()
        .map(|i| {
            let mut report = LawReport::default();
            let id_source = cat.identity(&objects[i]);
            if cat.source(&id_source) != objects[i] || cat.target(&id_source) != objects[i] {
                report.fail(format!("identity of {:?} has wrong endpoints", objects[i]));
            }
            for (j, f) in &by_source[i] {
                let id_target = cat.identity(&objects[*j]);
                report.checks += 2;
                match cat.compose(&id_target, f) {
                    Ok(h) if &h == f => {}
                    other => report.fail(format!("id ∘ f != f for {f:?}: {other:?}")),
                }
                match cat.compose(f, &id_source) {
                    Ok(h) if &h == f => {}
                    other => report.fail(format!("f ∘ id != f for {f:?}: {other:?}")),
                }
                let mut budget = max_triples_per_morphism.unwrap_or(usize::MAX);
                'outer: for (k, g) in &by_source[*j] {
                    let gf = match cat.compose(g, f) {
                        Ok(gf) => gf,
                        Err(e) => {
                            report.fail(format!("cannot compose {g:?} ∘ {f:?}: {e}"));
                            continue;
                        }
                    };
                    for (_, h) in &by_source[*k] {
                        if budget == 0 {
                            break 'outer;
                        }
                        budget -= 1;
                        report.checks += 1;
                        let left = cat.compose(h, &gf);
                        let right = cat.compose(g, f).and_then(|_| cat.compose(h, g)).and_then(|hg| cat.compose(&hg, f));
                        match (left, right) {
                            (Ok(l), Ok(r)) if l == r => {}
                            (l, r) => report.fail(format!("associativity fails for {h:?}, {g:?}, {f:?}: {l:?} vs {r:?}")),
                        }
                    }
                }
            }
            report
        })
        .collect();
    let mut total = LawReport::default();
    for r in reports {
        total.merge(r);
    }
    total
}

/// A composable chain `x_0 → x_1 → ... → x_len` drawn at random: objects
/// uniformly, then a morphism uniformly from each hom-set. Empty hom-sets
/// make the draw fail.
fn random_chain<C: Category>(cat: &C, objects: &[C::Object], len: usize, rng: &mut ChaCha8Rng) -> Option<Vec<C::Morphism>> {
    let xs: Vec<&C::Object> = (0..=len).map(|_| objects.choose(rng).expect("objects")).collect();
    xs.windows(2).map(|w| cat.hom(w[0], w[1]).choose(rng).cloned()).collect()
}

/// Unit laws and associativity on `samples` random composable triples,
/// reproducible from `seed`.
pub fn sample_category_laws<C: Category>(cat: &C, objects: &[C::Object], samples: usize, seed: u64) -> LawReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::default();
    let mut attempts = 0;
    while report.checks < 3 * samples && attempts < 50 * samples.max(1) {
        attempts += 1;
        let Some(chain) = random_chain(cat, objects, 3, &mut rng) else { continue };
        let (f, g, h) = (&chain[0], &chain[1], &chain[2]);
        report.checks += 3;
        let (x, y) = (cat.source(f), cat.target(f));
        if cat.compose(&cat.identity(&y), f).ok().as_ref() != Some(f) || cat.compose(f, &cat.identity(&x)).ok().as_ref() != Some(f) {
            report.fail(format!("unit laws fail at {f:?}"));
        }
        let left = cat.compose(g, f).and_then(|gf| cat.compose(h, &gf));
        let right = cat.compose(h, g).and_then(|hg| cat.compose(&hg, f));
        match (left, right) {
            (Ok(l), Ok(r)) if l == r => {}
            (l, r) => report.fail(format!("associativity fails for {h:?}, {g:?}, {f:?}: {l:?} vs {r:?}")),
        }
    }
    report
}

/// Functoriality on `samples` random composable pairs, reproducible from `seed`.
pub fn sample_functor_laws<F: Functor>(functor: &F, objects: &[<F::Source as Category>::Object], samples: usize, seed: u64) -> LawReport {
    let (src, tgt) = (functor.source_category(), functor.target_category());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = LawReport::default();
    let mut attempts = 0;
    while report.checks < samples && attempts < 50 * samples.max(1) {
        attempts += 1;
        let Some(chain) = random_chain(src, objects, 2, &mut rng) else { continue };
        let (f, g) = (&chain[0], &chain[1]);
        report.checks += 1;
        let outcome = src.compose(g, f).and_then(|gf| {
            let (lhs, ff, fg) = (functor.map_morphism(&gf)?, functor.map_morphism(f)?, functor.map_morphism(g)?);
            let rhs = match F::VARIANCE {
                Variance::Covariant => tgt.compose(&fg, &ff)?,
                Variance::Contravariant => tgt.compose(&ff, &fg)?,
            };
            Ok((lhs, rhs))
        });
        match outcome {
            Ok((l, r)) if l == r => {}
            other => report.fail(format!("F not functorial on {g:?} ∘ {f:?}: {other:?}")),
        }
    }
    report
}

/// `F(id) = id` on every object and `F(g ∘ f) = F(g) ∘ F(f)` (reversed for
/// contravariant functors) on every composable pair among `objects`.
pub fn check_functor_laws<F: Functor>(functor: &F, objects: &[<F::Source as Category>::Object]) -> LawReport {
    let src = functor.source_category();
    let tgt = functor.target_category();
    let by_source = morphisms_by_source(src, objects);
    let reports: Vec<LawReport> = (0..objects.len())
        .into_par_iter()
        .map(|i| {
            let mut report = LawReport::default();
            let x = &objects[i];
            report.checks += 1;
            match functor.map_morphism(&src.identity(x)) {
                Ok(m) if m == tgt.identity(&functor.map_object(x)) => {}
                other => report.fail(format!("F(id_{x:?}) is not an identity: {other:?}")),
            }
            for (j, f) in &by_source[i] {
                let ff = match functor.map_morphism(f) {
                    Ok(m) => m,
                    Err(e) => {
                        report.fail(format!("F undefined on {f:?}: {e}"));
                        continue;
                    }
                };
                let (fx, fy) = (functor.map_object(x), functor.map_object(&objects[*j]));
                let (s, t) = match F::VARIANCE {
                    Variance::Covariant => (fx, fy),
                    Variance::Contravariant => (fy, fx),
                };
                report.checks += 1;
                if tgt.source(&ff) != s || tgt.target(&ff) != t {
                    report.fail(format!("F({f:?}) = {ff:?} has wrong endpoints"));
                }
                for (_, g) in &by_source[*j] {
                    report.checks += 1;
                    let outcome = src.compose(g, f).and_then(|gf| {
                        let lhs = functor.map_morphism(&gf)?;
                        let fg = functor.map_morphism(g)?;
                        let rhs = match F::VARIANCE {
                            Variance::Covariant => tgt.compose(&fg, &ff)?,
                            Variance::Contravariant => tgt.compose(&ff, &fg)?,
                        };
                        Ok((lhs, rhs))
                    });
                    match outcome {
                        Ok((l, r)) if l == r => {}
                        other => report.fail(format!("F not functorial on {g:?} ∘ {f:?}: {other:?}")),
                    }
                }
            }
            report
        })
        .collect();
    let mut total = LawReport::default();
    for r in reports {
        total.merge(r);
    }
    total
}

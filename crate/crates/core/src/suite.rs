//! The acceptance properties, each run to a [`Verdict`].

use std::time::{Duration, Instant};

use serde_json::json;

use crate::category::{check_category_laws, check_functor_laws, sample_category_laws, sample_functor_laws, LawReport};
use crate::equivalence::{operad_to_simplicial, roundtrip_operad, roundtrip_simplicial, simplicial_to_operad};
use crate::fixtures::{corrupted_fixtures, operad_fixtures, worked_morphism, worked_trees, two_segal_fixtures};
use crate::hom::{hom, operations_of, TreeCategory};
use crate::localization::{
    check_adjunction, check_bp_invertible, check_descriptions_agree, check_initiality, lpl_map, lpl_map_contravariant, LFunctor,
    Labs, Lcyc, Lpl, Lsym,
};
use crate::operads::{characterize_invertible, is_invertible_operad, validate_operad, OperadNerve};
use crate::presheaves::{
    check_2segal, check_covariantly_fibrant, check_dendroidal_segal, check_grafting_correspondence, check_invertible,
    check_reduced_segal, restrict_along_lpl, validate_presheaf,
};
use crate::targets::{check_dualities, DeltaMap};
use crate::trees::{enumerate_cyc, enumerate_rootable, enumerate_sym, enumerate_trees, CycTree, RootableTree, SymTree, Tree};

/// Bounds and seed for a suite run.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_vertices: usize,
    pub max_arity: usize,
    pub trunc: usize,
    pub operad_arity: usize,
    pub seed: u64,
    /// Category laws are exhaustive up to this many vertices and sampled
    /// above it.
    pub law_vertices: usize,
    /// Likewise for functor laws.
    pub functor_law_vertices: usize,
    pub law_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_vertices: 4, max_arity: 3, trunc: 4, operad_arity: 3, seed: 20_161_016, law_vertices: 2, functor_law_vertices: 3, law_samples: 2000 }
    }
}

impl SuiteConfig {
    fn trees(&self) -> Vec<Tree> {
        enumerate_trees(self.max_vertices, self.max_arity)
    }

    fn bounds(&self) -> String {
        format!("trees ≤{} vertices, arity ≤{}", self.max_vertices, self.max_arity)
    }
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub name: String,
    pub scope: String,
    pub ok: bool,
    /// Present exactly when `ok` is false.
    pub counterexample: Option<String>,
    pub wall_time: Duration,
}

impl Verdict {
    fn new(name: &str, scope: String, failure: Option<String>, start: Instant) -> Self {
        Verdict { name: name.into(), scope, ok: failure.is_none(), counterexample: failure, wall_time: start.elapsed() }
    }

    /// A report with no checks at all is a failure too.
    fn from_report(name: &str, scope: String, report: &LawReport, start: Instant) -> Self {
        let failure = match (report.checks, report.violations.first()) {
            (_, Some(v)) => Some(format!("{} violations, first: {v}", report.violations.len())),
            (0, None) => Some("nothing was checked".into()),
            _ => None,
        };
        Verdict::new(name, format!("{scope}; {} checks", report.checks), failure, start)
    }

    pub fn line(&self) -> String {
        let status = if self.ok { "PASS" } else { "FAIL" };
        let mut s = format!("{status} {} [{}] ({:.1}s)", self.name, self.scope, self.wall_time.as_secs_f64());
        if let Some(c) = &self.counterexample {
            s.push_str(&format!("\n     counterexample: {c}"));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "name": self.name,
            "scope": self.scope,
            "ok": self.ok,
            "counterexample": self.counterexample,
            "wall_time_secs": self.wall_time.as_secs_f64(),
        })
    }
}

pub type Check = fn(&SuiteConfig) -> Verdict;

pub fn category_laws(cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    let small = enumerate_trees(cfg.law_vertices, cfg.max_arity);
    let mid = enumerate_trees(cfg.functor_law_vertices, cfg.max_arity);
    let big = cfg.trees();
    let (n, seed) = (cfg.law_samples, cfg.seed);
    let mut r = LawReport::default();
    let (sym_s, cyc_s, abs_s) = (enumerate_sym(&small), enumerate_cyc(&small), enumerate_rootable(&small));
    let (sym_m, cyc_m, abs_m) = (enumerate_sym(&mid), enumerate_cyc(&mid), enumerate_rootable(&mid));
    let (sym_b, cyc_b, abs_b) = (enumerate_sym(&big), enumerate_cyc(&big), enumerate_rootable(&big));
    r.merge(check_category_laws(&TreeCategory::<Tree>::new(), &small, None));
    r.merge(check_category_laws(&TreeCategory::<SymTree>::new(), &sym_s, None));
    r.merge(check_category_laws(&TreeCategory::<CycTree>::new(), &cyc_s, None));
    r.merge(check_category_laws(&TreeCategory::<RootableTree>::new(), &abs_s, None));
    r.merge(check_functor_laws(&LFunctor::<Lpl>::default(), &mid));
    r.merge(check_functor_laws(&LFunctor::<Lsym>::default(), &sym_m));
    r.merge(check_functor_laws(&LFunctor::<Lcyc>::default(), &cyc_m));
    r.merge(check_functor_laws(&LFunctor::<Labs>::default(), &abs_m));
    r.merge(sample_category_laws(&TreeCategory::<Tree>::new(), &big, n, seed));
    r.merge(sample_category_laws(&TreeCategory::<SymTree>::new(), &sym_b, n, seed));
    r.merge(sample_category_laws(&TreeCategory::<CycTree>::new(), &cyc_b, n, seed));
    r.merge(sample_category_laws(&TreeCategory::<RootableTree>::new(), &abs_b, n, seed));
    r.merge(sample_functor_laws(&LFunctor::<Lpl>::default(), &big, n, seed));
    r.merge(sample_functor_laws(&LFunctor::<Lsym>::default(), &sym_b, n, seed));
    r.merge(sample_functor_laws(&LFunctor::<Lcyc>::default(), &cyc_b, n, seed));
    r.merge(sample_functor_laws(&LFunctor::<Labs>::default(), &abs_b, n, seed));
    let scope = format!(
        "category laws exhaustive on trees ≤{} vertices, functor laws on trees ≤{} vertices, {n} sampled chains per law on {}, seed {seed}",
        cfg.law_vertices,
        cfg.functor_law_vertices,
        cfg.bounds()
    );
    Verdict::from_report("01 category and functor laws", scope, &r, start)
}

pub fn bp_invertible(cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    Verdict::from_report("02 boundary preserving maps become isomorphisms", cfg.bounds(), &check_bp_invertible(&cfg.trees()), start)
}

pub fn linear_constancy(cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    let linear: Vec<Tree> = (0..=cfg.max_vertices).map(Tree::linear).collect();
    let mut r = LawReport::default();
    for s in &linear {
        for t in &linear {
            for alpha in hom(s, t) {
                r.checks += 1;
                match lpl_map(&alpha) {
                    Ok(f) if f == DeltaMap::identity(1) => {}
                    other => r.fail(format!("L_pl({alpha:?}) = {other:?}")),
                }
            }
        }
    }
    Verdict::from_report("03 linear trees go to id_[1]", format!("linear trees ≤{} vertices", cfg.max_vertices), &r, start)
}

pub fn descriptions_agree(cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    Verdict::from_report("04 covariant and contravariant descriptions agree", cfg.bounds(), &check_descriptions_agree(&cfg.trees()), start)
}

pub fn worked_example(_cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    let alpha = worked_morphism();
    let expected = DeltaMap::new(4, 4, vec![0, 1, 2, 4, 4]).expect("monotone");
    let mut r = LawReport::default();
    for (how, image) in [("areas", lpl_map(&alpha)), ("leaves", lpl_map_contravariant(&alpha))] {
        r.checks += 1;
        match image {
            Ok(f) if f == expected => {}
            other => r.fail(format!("{how}: {other:?}, expected {expected:?}")),
        }
    }
    Verdict::from_report("05 the worked example", format!("{alpha:?}"), &r, start)
}

pub fn initiality(cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    let trees = cfg.trees();
    let mut r = check_initiality::<Lpl>(&trees);
    r.merge(check_initiality::<Lcyc>(&enumerate_cyc(&trees)));
    r.merge(check_initiality::<Lsym>(&enumerate_sym(&trees)));
    r.merge(check_initiality::<Labs>(&enumerate_rootable(&trees)));
    Verdict::from_report("06 the corolla is initial in each weak fiber", format!("{}, all four flavours", cfg.bounds()), &r, start)
}

pub fn adjunction(cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    let r = check_adjunction(&cfg.trees(), cfg.trunc);
    Verdict::from_report("07 unique factorization through T_f", format!("{}, targets of arity ≤{}", cfg.bounds(), cfg.trunc), &r, start)
}

pub fn dualities(_cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    Verdict::from_report("08 dualities and hom counts", "indices ≤3".into(), &check_dualities(3), start)
}

pub fn segal_comparison(cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    let mut r = check_grafting_correspondence(&cfg.trees());
    let (mut yes, mut no) = (0, 0);
    for (name, x) in two_segal_fixtures(cfg.trunc, cfg.seed).into_iter().chain(corrupted_fixtures(cfg.trunc)) {
        r.checks += 1;
        let simplicial = check_2segal(&x).ok();
        let dendroidal = check_dendroidal_segal(&restrict_along_lpl(&x, cfg.max_vertices, cfg.max_arity)).ok();
        if simplicial != dendroidal {
            r.fail(format!("{name}: 2-Segal {simplicial}, dendroidal Segal {dendroidal}"));
        }
        if simplicial {
            yes += 1;
        } else {
            no += 1;
        }
    }
    if yes < 5 || no < 5 {
        r.fail(format!("{yes} positive and {no} negative fixtures, need 5 of each"));
    }
    let scope = format!("{yes} 2-Segal and {no} other fixtures at N = {}, {}, seed {}", cfg.trunc, cfg.bounds(), cfg.seed);
    Verdict::from_report("09 2-Segal = dendroidal Segal after restriction", scope, &r, start)
}

pub fn invertibility(cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    let mut r = LawReport::default();
    let fixtures = operad_fixtures(cfg.operad_arity, cfg.seed);
    for (name, o) in &fixtures {
        r.checks += 1;
        let c = characterize_invertible(o, cfg.max_vertices);
        if !c.agree() {
            r.fail(format!("{name}: b1 = {}, b2 = {}, b3 = {}", c.b1, c.b2, c.b3));
        }
        let expected = match name.as_str() {
            "terminal" => Some(true),
            "poset 0<1" => Some(false),
            _ => None,
        };
        if expected.is_some_and(|e| (c.b1, c.b2, c.b3) != (e, e, e)) {
            r.fail(format!("{name}: b1 = {}, b2 = {}, b3 = {}", c.b1, c.b2, c.b3));
        }
    }
    if fixtures.len() < 10 {
        r.fail(format!("only {} operads", fixtures.len()));
    }
    let scope = format!("{} operads, arity ≤{}, trees ≤{} vertices, seed {}", fixtures.len(), cfg.operad_arity, cfg.max_vertices, cfg.seed);
    Verdict::from_report("10 three descriptions of invertibility agree", scope, &r, start)
}

pub fn roundtrips(cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    let mut r = LawReport::default();
    let (mut operads, mut simplicial) = (0, 0);
    for (name, o) in operad_fixtures(cfg.operad_arity, cfg.seed) {
        if !is_invertible_operad(&o) {
            continue;
        }
        operads += 1;
        r.checks += 1;
        let cert = roundtrip_operad(&o);
        if !cert.ok {
            r.fail(format!("{name}: {}", cert.counterexample.unwrap_or_default()));
        }
        match operad_to_simplicial(&o, o.arity_bound()) {
            Ok(x) if validate_presheaf(&x) && check_2segal(&x).ok() => {}
            Ok(_) => r.fail(format!("{name}: the simplicial set is not a 2-Segal presheaf")),
            Err(e) => r.fail(format!("{name}: {e}")),
        }
    }
    for (name, x) in two_segal_fixtures(cfg.trunc, cfg.seed).into_iter().chain(corrupted_fixtures(cfg.trunc)) {
        if !check_2segal(&x).ok() {
            continue;
        }
        simplicial += 1;
        r.checks += 1;
        let cert = roundtrip_simplicial(&x);
        if !cert.ok {
            r.fail(format!("{name}: {}", cert.counterexample.unwrap_or_default()));
        }
        match simplicial_to_operad(&x) {
            Ok(o) if validate_operad(&o).ok() => {}
            Ok(_) => r.fail(format!("{name}: the operad fails its laws")),
            Err(e) => r.fail(format!("{name}: {e}")),
        }
    }
    let scope = format!("{operads} invertible operads, {simplicial} 2-Segal sets at N = {}, seed {}", cfg.trunc, cfg.seed);
    Verdict::from_report("11 equivalence roundtrips", scope, &r, start)
}

pub fn reduced_covariant(cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    let mut r = LawReport::default();
    let mut fibrant = 0;
    for (name, x) in two_segal_fixtures(cfg.trunc, cfg.seed).into_iter().chain(corrupted_fixtures(cfg.trunc)) {
        r.checks += 1;
        let d = restrict_along_lpl(&x, cfg.max_vertices, cfg.max_arity);
        let (reduced, covariant) = (check_reduced_segal(&x).ok(), check_covariantly_fibrant(&d).ok());
        if reduced != covariant {
            r.fail(format!("{name}: reduced Segal {reduced}, covariantly fibrant {covariant}"));
        }
        if covariant {
            fibrant += 1;
            if !check_invertible(&d).ok() {
                r.fail(format!("{name}: covariantly fibrant but not invertible"));
            }
        }
    }
    for (name, o) in operad_fixtures(cfg.operad_arity, cfg.seed) {
        let nerve = OperadNerve::new(&o, cfg.max_vertices);
        if check_covariantly_fibrant(&nerve).ok() {
            fibrant += 1;
            r.checks += 1;
            if !is_invertible_operad(&o) {
                r.fail(format!("nerve of {name}: covariantly fibrant but not invertible"));
            }
        }
    }
    if fibrant == 0 {
        r.fail("no covariantly fibrant fixture".into());
    }
    let scope = format!("simplicial fixtures at N = {} and operad nerves, {fibrant} covariantly fibrant, seed {}", cfg.trunc, cfg.seed);
    Verdict::from_report("12 reduced Segal = covariantly fibrant", scope, &r, start)
}

pub fn operation_counts(_cfg: &SuiteConfig) -> Verdict {
    let start = Instant::now();
    let (left, right) = worked_trees();
    let mut r = LawReport::default();
    for (t, expected) in [(&left, 3), (&right, 11)] {
        r.checks += 1;
        let n = operations_of(t).iter().filter(|op| !op.is_identity()).count();
        if n != expected {
            r.fail(format!("{t}: {n} non-identity operations, expected {expected}"));
        }
    }
    Verdict::from_report("13 operation counts of the example trees", format!("{left} and {right}"), &r, start)
}

pub fn checks() -> Vec<Check> {
    vec![
        category_laws,
        bp_invertible,
        linear_constancy,
        descriptions_agree,
        worked_example,
        initiality,
        adjunction,
        dualities,
        segal_comparison,
        invertibility,
        roundtrips,
        reduced_covariant,
        operation_counts,
    ]
}

/// Every check, in order of name.
pub fn run_suite(cfg: &SuiteConfig) -> Vec<Verdict> {
    let mut verdicts: Vec<Verdict> = checks().into_iter().map(|check| check(cfg)).collect();
    verdicts.sort_by(|a, b| a.name.cmp(&b.name));
    verdicts
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_checks_pass() {
        let cfg = SuiteConfig { max_vertices: 2, trunc: 3, law_vertices: 1, functor_law_vertices: 1, law_samples: 50, ..SuiteConfig::default() };
        for check in [worked_example, linear_constancy, operation_counts, dualities, descriptions_agree] {
            let v = check(&cfg);
            assert!(v.ok, "{}", v.line());
            assert_eq!(v.ok, v.counterexample.is_none());
        }
    }
}

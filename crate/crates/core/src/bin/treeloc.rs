use std::io::{ErrorKind, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use treeloc::category::LawReport;
use treeloc::equivalence::{operad_to_simplicial, roundtrip_operad, roundtrip_simplicial, simplicial_to_operad, EquivalenceCertificate};
use treeloc::hom::{hom, CycForgetPlanar, ForgetRoot, Morphism, Symmetrize, TreeObject};
use treeloc::localization::{build_tf, factor_through_tf, labs_map, lcyc_map, lpl_map, lsym_map};
use treeloc::operads::{characterize_invertible, dendroidal_nerve, FiniteOperad, OperadNerve};
use treeloc::presheaves::{
    check_1segal, check_2segal, check_covariantly_fibrant, check_dendroidal_segal, check_invertible, check_reduced_segal,
    restrict_along_lpl, TruncatedSimplicialSet,
};
use treeloc::suite::{run_suite, SuiteConfig};
use treeloc::trees::{enumerate_trees, CycTree, EdgeRef, RootableTree, Shape, SymTree, Tree};
use treeloc::{Error, Result};

/// Plane trees, their boundary functors, and finite Segal checks.
#[derive(Parser)]
#[command(name = "treeloc", version)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Opts {
    #[arg(long, global = true, default_value_t = 4)]
    max_vertices: usize,
    #[arg(long, global = true, default_value_t = 3)]
    max_arity: usize,
    /// Simplicial truncation level.
    #[arg(long, global = true)]
    trunc: Option<usize>,
    #[arg(long, global = true, default_value_t = SuiteConfig::default().seed)]
    seed: u64,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate, canonicalize or graft trees.
    #[command(subcommand)]
    Tree(TreeCommand),
    /// All morphisms between two trees.
    Hom {
        source: String,
        target: String,
        #[arg(long, value_enum, default_value_t = Kind::Plane)]
        kind: Kind,
    },
    /// Apply a boundary functor to a morphism file.
    Localize { flavour: Flavour, morphism: PathBuf },
    /// Build `T_f` for `f = L_pl(α)` and factor `α` through it.
    Adjoint { morphism: PathBuf },
    /// Check a property of a simplicial set or operad file.
    Check { property: Property, input: PathBuf },
    /// The dendroidal nerve of an operad at a tree.
    Nerve { operad: PathBuf, tree: String },
    /// The invertible operad of a 2-Segal simplicial set.
    ToOperad { input: PathBuf },
    /// The 2-Segal simplicial set of an invertible operad.
    ToSimplicial { input: PathBuf },
    /// Go there and back, and verify the comparison isomorphism.
    Roundtrip { input: PathBuf },
    /// Run every acceptance check.
    Suite,
}

#[derive(Subcommand)]
enum TreeCommand {
    Enum,
    Canon {
        tree: String,
        #[arg(long, value_enum, default_value_t = Kind::Plane)]
        kind: Kind,
    },
    Graft { base: String, leaf: String, top: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Plane,
    Sym,
    Cyc,
    Rootable,
}

#[derive(Clone, Copy, ValueEnum)]
enum Flavour {
    Pl,
    Cyc,
    Sym,
    Abs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    #[value(name = "1segal")]
    OneSegal,
    #[value(name = "2segal")]
    TwoSegal,
    Dsegal,
    Invertible,
    Reduced,
    Covfib,
}

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// A tree given as a code like `((ee)e)`, a JSON literal, or a JSON file.
fn parse_tree(arg: &str) -> Result<Tree> {
    if Path::new(arg).is_file() {
        return Ok(Tree::from_shape(Shape::from_json(&read_json(Path::new(arg))?)?));
    }
    match serde_json::from_str::<Value>(arg) {
        Ok(v) => Ok(Tree::from_shape(Shape::from_json(&v)?)),
        Err(_) => Tree::parse(arg),
    }
}

/// A morphism of the given flavour; plane morphism files are pushed forward.
fn parse_morphism<T: TreeObject>(value: &Value, push: impl Fn(&Morphism<Tree>) -> Morphism<T>) -> Result<Morphism<T>> {
    if value.get("kind").is_none() && value.get("edges").is_some() && T::KIND != "plane" {
        return Ok(push(&Morphism::<Tree>::from_json(value)?));
    }
    Morphism::<T>::from_json(value)
}

enum Input {
    Simplicial(TruncatedSimplicialSet),
    Operad(FiniteOperad),
}

fn read_input(path: &Path) -> Result<Input> {
    let value = read_json(path)?;
    if value.get("colors").is_some() {
        Ok(Input::Operad(FiniteOperad::from_json(&value)?))
    } else {
        Ok(Input::Simplicial(TruncatedSimplicialSet::from_json(&value)?))
    }
}

fn out_dir() -> PathBuf {
    std::env::var_os("TREELOC_OUT_DIR").map(PathBuf::from).unwrap_or_else(|| PathBuf::from("treeloc-out"))
}

fn print(s: &str) {
    let mut out = std::io::stdout().lock();
    if let Err(e) = writeln!(out, "{s}") {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        panic!("writing to stdout: {e}");
    }
}

fn emit(opts: &Opts, value: &Value, text: impl FnOnce() -> String) {
    if opts.json {
        print(&serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        print(&text());
    }
}

fn report(opts: &Opts, what: &str, r: &LawReport) -> bool {
    emit(opts, &json!({"check": what, "ok": r.ok(), "checks": r.checks, "violations": r.violations}), || {
        let mut s = format!("{what}: {} ({} checks)", if r.ok() { "holds" } else { "fails" }, r.checks);
        for v in &r.violations {
            s.push_str(&format!("\n  {v}"));
        }
        s
    });
    r.ok()
}

fn certificate(opts: &Opts, cert: &EquivalenceCertificate) -> bool {
    emit(opts, &serde_json::to_value(cert).expect("serializable"), || {
        let mut s = format!("{:?} roundtrip: {}", cert.direction, if cert.ok { "verified" } else { "failed" });
        for line in &cert.log {
            s.push_str(&format!("\n  {line}"));
        }
        if let Some(c) = &cert.counterexample {
            s.push_str(&format!("\n  counterexample: {c}"));
        }
        s
    });
    cert.ok
}

fn run(cli: Cli) -> Result<bool> {
    let opts = &cli.opts;
    match cli.command {
        Command::Tree(TreeCommand::Enum) => {
            let trees = enumerate_trees(opts.max_vertices, opts.max_arity);
            let shapes: Vec<Value> = trees.iter().map(|t| t.shape().to_json()).collect();
            emit(opts, &json!(shapes), || {
                let mut s = format!("{} trees", trees.len());
                for t in &trees {
                    s.push_str(&format!("\n{t}"));
                }
                s
            });
        }
        Command::Tree(TreeCommand::Canon { tree, kind }) => {
            let t = parse_tree(&tree)?;
            let (rep, tag) = match kind {
                Kind::Plane => (t, "plane"),
                Kind::Sym => (SymTree::from_tree(&t).rep().clone(), "sym"),
                Kind::Cyc => (CycTree::from_tree(&t).rep().clone(), "cyc"),
                Kind::Rootable => (RootableTree::from_tree(&t).rep().clone(), "rootable"),
            };
            emit(opts, &json!({"kind": tag, "tree": rep.shape().to_json()}), || rep.code().to_string());
        }
        Command::Tree(TreeCommand::Graft { base, leaf, top }) => {
            let t = parse_tree(&base)?.graft(&EdgeRef::parse_dotted(&leaf)?, &parse_tree(&top)?)?;
            emit(opts, &t.shape().to_json(), || t.code().to_string());
        }
        Command::Hom { source, target, kind } => {
            let (s, t) = (parse_tree(&source)?, parse_tree(&target)?);
            fn list<T: TreeObject>(opts: &Opts, s: &T, t: &T) {
                let maps = hom(s, t);
                let values: Vec<Value> = maps.iter().map(|m| m.to_json()).collect();
                emit(opts, &json!(values), || {
                    let mut out = format!("{} morphisms", maps.len());
                    for m in &maps {
                        out.push_str(&format!("\n{m}"));
                    }
                    out
                });
            }
            match kind {
                Kind::Plane => list(opts, &s, &t),
                Kind::Sym => list(opts, &SymTree::from_tree(&s), &SymTree::from_tree(&t)),
                Kind::Cyc => list(opts, &CycTree::from_tree(&s), &CycTree::from_tree(&t)),
                Kind::Rootable => list(opts, &RootableTree::from_tree(&s), &RootableTree::from_tree(&t)),
            }
        }
        Command::Localize { flavour, morphism } => {
            let value = read_json(&morphism)?;
            let image = match flavour {
                Flavour::Pl => serde_json::to_value(lpl_map(&Morphism::<Tree>::from_json(&value)?)?),
                Flavour::Cyc => serde_json::to_value(lcyc_map(&parse_morphism(&value, ForgetRoot::apply)?)?),
                Flavour::Sym => serde_json::to_value(lsym_map(&parse_morphism(&value, Symmetrize::apply)?)?),
                Flavour::Abs => serde_json::to_value(labs_map(&parse_morphism(&value, |m| CycForgetPlanar::apply(&ForgetRoot::apply(m)))?)?),
            }
            .expect("serializable");
            emit(opts, &image, || image.to_string());
        }
        Command::Adjoint { morphism } => {
            let alpha = Morphism::<Tree>::from_json(&read_json(&morphism)?)?;
            let f = lpl_map(&alpha)?;
            let (tf, unit) = build_tf(alpha.source(), &f)?;
            let bp = factor_through_tf(&alpha, &f)?;
            let value = json!({"f": f, "tf": tf.shape().to_json(), "unit": unit.to_json(), "factor": bp.to_json()});
            emit(opts, &value, || format!("f = {f:?}\nT_f = {tf}\nunit: {unit}\nfactor: {bp}"));
        }
        Command::Check { property, input } => {
            let (mv, ma) = (opts.max_vertices, opts.max_arity);
            let ok = match read_input(&input)? {
                Input::Simplicial(x) => match property {
                    Property::OneSegal => report(opts, "1-Segal", &check_1segal(&x)),
                    Property::TwoSegal => report(opts, "2-Segal", &check_2segal(&x)),
                    Property::Reduced => report(opts, "reduced Segal", &check_reduced_segal(&x)),
                    Property::Dsegal => report(opts, "dendroidal Segal", &check_dendroidal_segal(&restrict_along_lpl(&x, mv, ma))),
                    Property::Invertible => report(opts, "invertible", &check_invertible(&restrict_along_lpl(&x, mv, ma))),
                    Property::Covfib => report(opts, "covariantly fibrant", &check_covariantly_fibrant(&restrict_along_lpl(&x, mv, ma))),
                },
                Input::Operad(o) => match property {
                    Property::Dsegal => report(opts, "dendroidal Segal", &check_dendroidal_segal(&OperadNerve::new(&o, mv))),
                    Property::Covfib => report(opts, "covariantly fibrant", &check_covariantly_fibrant(&OperadNerve::new(&o, mv))),
                    Property::Invertible => {
                        let c = characterize_invertible(&o, mv);
                        let mut r = LawReport::default();
                        for (name, sub) in ["boundary preserving maps", "collapse maps", "composition and units"].iter().zip(&c.reports) {
                            r.checks += sub.checks;
                            for v in &sub.violations {
                                r.fail(format!("{name}: {v}"));
                            }
                        }
                        if !c.agree() {
                            r.fail(format!("descriptions disagree: {} {} {}", c.b1, c.b2, c.b3));
                        }
                        report(opts, "invertible", &r)
                    }
                    simplicial => {
                        let x = operad_to_simplicial(&o, opts.trunc.unwrap_or(o.arity_bound()))?;
                        match simplicial {
                            Property::OneSegal => report(opts, "1-Segal", &check_1segal(&x)),
                            Property::TwoSegal => report(opts, "2-Segal", &check_2segal(&x)),
                            _ => report(opts, "reduced Segal", &check_reduced_segal(&x)),
                        }
                    }
                },
            };
            return Ok(ok);
        }
        Command::Nerve { operad, tree } => {
            let o = FiniteOperad::from_json(&read_json(&operad)?)?;
            let elements = dendroidal_nerve(&o, &parse_tree(&tree)?)?;
            emit(opts, &json!(elements), || format!("{} elements\n{}", elements.len(), elements.join("\n")));
        }
        Command::ToOperad { input } => {
            let Input::Simplicial(x) = read_input(&input)? else {
                return Err(Error::Precondition("expected a simplicial set".into()));
            };
            let o = simplicial_to_operad(&x)?;
            print(&serde_json::to_string_pretty(&o.to_json()).expect("serializable"));
        }
        Command::ToSimplicial { input } => {
            let Input::Operad(o) = read_input(&input)? else {
                return Err(Error::Precondition("expected an operad".into()));
            };
            let x = operad_to_simplicial(&o, opts.trunc.unwrap_or(o.arity_bound()))?;
            print(&serde_json::to_string_pretty(&x.to_json()).expect("serializable"));
        }
        Command::Roundtrip { input } => {
            let cert = match read_input(&input)? {
                Input::Operad(o) => roundtrip_operad(&o),
                Input::Simplicial(x) => roundtrip_simplicial(&x),
            };
            return Ok(certificate(opts, &cert));
        }
        Command::Suite => {
            let defaults = SuiteConfig::default();
            let cfg = SuiteConfig {
                max_vertices: opts.max_vertices,
                max_arity: opts.max_arity,
                trunc: opts.trunc.unwrap_or(defaults.trunc),
                seed: opts.seed,
                ..defaults
            };
            eprintln!("seed: {}", cfg.seed);
            let verdicts = run_suite(&cfg);
            let all = verdicts.iter().all(|v| v.ok);
            let value = json!({"seed": cfg.seed, "ok": all, "verdicts": verdicts.iter().map(|v| v.to_json()).collect::<Vec<_>>()});
            let dir = out_dir();
            let written = std::fs::create_dir_all(&dir).and_then(|_| std::fs::write(dir.join("suite.json"), serde_json::to_string_pretty(&value).expect("serializable")));
            if let Err(e) = written {
                eprintln!("could not write {}: {e}", dir.join("suite.json").display());
            }
            emit(opts, &value, || verdicts.iter().map(|v| v.line()).collect::<Vec<_>>().join("\n"));
            return Ok(all);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

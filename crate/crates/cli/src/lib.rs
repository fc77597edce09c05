//! Command-line front end for `wsckit-core`.
//!
//! Every command reads one object (a file path, or stdin when the path is
//! omitted or `-`), writes its JSON result to stdout and a human-readable
//! summary to stderr. Only the JSON is meant to be machine-read.

pub mod io;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wsckit_core::checkers::verify_shelling_order;
use wsckit_core::decomposition::is_bipartite;
use wsckit_core::verify::verify_suite;
use wsckit_core::weighted::complex_from_squarefree;
use wsckit_core::{
    associated_primes, hilbert_series, minimal_and_embedded, mixed_wreath, multigraded_betti,
    normally_torsion_free_upto, polarize, primary_decomposition, reduced_homology_dims, sr_ideal,
    sr_ideal_weighted, verify, CheckerBounds, Error, FieldSpec, MonomialIdeal, PrimeIdeal, Result,
    SimplicialComplex, Verdict, VerifyConfig, WeightFunction, WeightedComplex,
};

use crate::io::{complex_json, copy_names, face_names, ideal_json, ideal_to_text, map_json, parse_input, Input};

/// Exit status for a run whose theorem battery recorded failures.
pub const EXIT_FAILURES: i32 = 1;
/// Exit status for parse and domain errors.
pub const EXIT_ERROR: i32 = 2;
/// Exit status when a search budget ran out before a verdict.
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "wsckit", version, about = "Weighted simplicial complexes and monomial ideals")]
pub struct Cli {
    /// Field characteristic for homology and Betti numbers (0 = rationals).
    #[arg(long = "char", global = true, env = "WSCKIT_CHAR", default_value_t = 0)]
    pub characteristic: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Summary statistics of any input object.
    Info { input: Option<PathBuf> },
    /// Mixed wreath product with the given copy dimensions.
    Wreath {
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<usize>,
    },
    /// Polarization of a weighted complex.
    Polarize {
        input: Option<PathBuf>,
        /// Weights for an unweighted complex; overrides any in the input.
        #[arg(long, value_delimiter = ',')]
        weights: Option<Vec<u32>>,
    },
    /// Stanley–Reisner ideal (weighted when the input carries weights).
    SrIdeal { input: Option<PathBuf> },
    /// Apply a weight function to an ideal, graph or complex.
    Weight {
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<u32>,
    },
    /// Polarize a monomial ideal.
    PolarizeIdeal { input: Option<PathBuf> },
    /// Multigraded Betti numbers.
    Betti { input: Option<PathBuf> },
    /// Hilbert series numerator.
    Hilbert { input: Option<PathBuf> },
    /// Irredundant primary decomposition.
    Decompose { input: Option<PathBuf> },
    /// Associated primes, split into minimal and embedded.
    Ass { input: Option<PathBuf> },
    /// Compare ordinary and symbolic powers up to a bound.
    Ntf {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        max_power: usize,
    },
    /// Decide a combinatorial property of a complex.
    Check {
        property: Property,
        input: Option<PathBuf>,
        /// Facet bound for `shell`/`constructible`, state budget for `vd`.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Replay the theorem battery on seeded random instances.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        /// Run a single suite instead of all of them.
        #[arg(long)]
        suite: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Property {
    Vd,
    Shell,
    Constructible,
    Cm,
}

impl Property {
    fn name(self) -> &'static str {
        match self {
            Property::Vd => "vertex_decomposable",
            Property::Shell => "shellable",
            Property::Constructible => "constructible",
            Property::Cm => "cohen_macaulay",
        }
    }
}

/// Result of one command.
#[derive(Debug, Clone)]
pub struct Output {
    pub json: Value,
    pub human: String,
    pub exit: i32,
}

impl Output {
    fn ok(json: Value, human: String) -> Self {
        Output { json, human, exit: 0 }
    }
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        _ => EXIT_ERROR,
    }
}

impl Command {
    /// The input path, for commands that read one.
    pub fn input(&self) -> Option<Option<&PathBuf>> {
        match self {
            Command::Info { input }
            | Command::Wreath { input, .. }
            | Command::Polarize { input, .. }
            | Command::SrIdeal { input }
            | Command::Weight { input, .. }
            | Command::PolarizeIdeal { input }
            | Command::Betti { input }
            | Command::Hilbert { input }
            | Command::Decompose { input }
            | Command::Ass { input }
            | Command::Ntf { input, .. }
            | Command::Check { input, .. } => Some(input.as_ref()),
            Command::Verify { .. } => None,
        }
    }
}

/// Runs a command on already-read input text.
pub fn run(cli: &Cli, text: &str) -> Result<Output> {
    let k = FieldSpec::from_characteristic(cli.characteristic)?;
    if let Command::Verify { seed, trials, suite } = &cli.command {
        return run_verify(k, *seed, *trials, suite.as_deref());
    }
    let input = parse_input(text)?;
    match &cli.command {
        Command::Info { .. } => info(&input, k),
        Command::Wreath { weights, .. } => wreath(&input, weights),
        Command::Polarize { weights, .. } => polarize_cmd(&input, weights.as_deref()),
        Command::SrIdeal { .. } => {
            let ideal = as_ideal(&input)?;
            Ok(Output::ok(ideal_json(&ideal), format!("{}\n", ideal_to_text(&ideal))))
        }
        Command::Weight { weights, .. } => weight(&input, weights),
        Command::PolarizeIdeal { .. } => {
            let (p, map) = as_ideal(&input)?.polarize()?;
            let human = format!("{}\n", ideal_to_text(&p));
            Ok(Output::ok(json!({ "ideal": ideal_json(&p), "map": map_json(&map) }), human))
        }
        Command::Betti { .. } => betti(&as_ideal(&input)?, k),
        Command::Hilbert { .. } => hilbert(&as_ideal(&input)?),
        Command::Decompose { .. } => decompose(&as_ideal(&input)?),
        Command::Ass { .. } => ass(&as_ideal(&input)?),
        Command::Ntf { max_power, .. } => ntf(&input, *max_power),
        Command::Check { property, bound, .. } => check(&input, *property, *bound, k),
        Command::Verify { .. } => unreachable!("handled above"),
    }
}

fn wrong_input(cmd: &str, expected: &str, input: &Input) -> Error {
    Error::Parse(format!("`{cmd}` expects {expected}, got a {}", input.kind()))
}

/// The ideal an input stands for: itself, its (weighted) Stanley–Reisner
/// ideal, or its edge ideal.
fn as_ideal(input: &Input) -> Result<MonomialIdeal> {
    match input {
        Input::Ideal(i) => Ok(i.clone()),
        Input::Complex { complex, .. } => sr_ideal(complex),
        Input::Weighted { complex, .. } => sr_ideal_weighted(complex),
        Input::Graph(g) => g.edge_ideal(None),
    }
}

fn faces_line(c: &SimplicialComplex, names: Option<&[String]>) -> String {
    if c.is_void() {
        return "void".into();
    }
    c.facets().iter().map(|&f| face_names(f, names)).collect::<Vec<_>>().join(" ")
}

fn complex_summary(c: &SimplicialComplex, k: FieldSpec) -> Result<Value> {
    let f = c.f_vector()?;
    let nonfaces: Vec<Vec<usize>> = c.minimal_nonfaces()?.iter().map(|f| f.to_vec()).collect();
    let homology = if c.is_void() { Vec::new() } else { reduced_homology_dims(c, k)? };
    Ok(json!({
        "n": c.n(),
        "dim": c.dim(),
        "pure": c.is_pure(),
        "facets": c.facets().len(),
        "f_vector": f.counts(),
        "minimal_nonfaces": nonfaces,
        "reduced_homology": homology,
    }))
}

fn info(input: &Input, k: FieldSpec) -> Result<Output> {
    let mut human = String::new();
    let json = match input {
        Input::Complex { complex, names } => {
            let mut v = complex_summary(complex, k)?;
            v["kind"] = json!("complex");
            let _ = writeln!(human, "complex on {} vertices, dim {}", complex.n(), complex.dim());
            let _ = writeln!(human, "facets: {}", faces_line(complex, names.as_deref()));
            let _ = writeln!(human, "f-vector: {:?}", v["f_vector"]);
            v
        }
        Input::Weighted { complex, names } => {
            let mut v = complex_summary(complex.complex(), k)?;
            let w = complex.weights();
            v["kind"] = json!("weighted_complex");
            v["weights"] = json!(w.values());
            v["excess"] = json!(w.excess());
            v["polarized_vertices"] = json!(w.values().iter().map(|&x| x as u64).sum::<u64>());
            let _ = writeln!(human, "weighted complex on {} vertices, weights {:?}", complex.complex().n(), w.values());
            let _ = writeln!(human, "facets: {}", faces_line(complex.complex(), names.as_deref()));
            v
        }
        Input::Ideal(i) => {
            let height = if i.is_proper_nonzero() { Some(wsckit_core::height(i)?) } else { None };
            let _ = writeln!(human, "ideal in {} variables: {}", i.arity(), ideal_to_text(i));
            json!({
                "kind": "ideal",
                "n": i.arity(),
                "generators": i.gens().len(),
                "squarefree": i.is_squarefree(),
                "support": i.support(),
                "height": height,
                "dim": height.map(|h| i.arity() - h),
            })
        }
        Input::Graph(g) => {
            let _ = writeln!(human, "graph on {} vertices with {} edges", g.n(), g.edges().len());
            json!({ "kind": "graph", "n": g.n(), "edges": g.edges().len(), "bipartite": is_bipartite(g) })
        }
    };
    Ok(Output::ok(json, human))
}

fn wreath(input: &Input, dims: &[usize]) -> Result<Output> {
    let Input::Complex { complex, names } = input else {
        return Err(wrong_input("wreath", "an unweighted complex", input));
    };
    let (w, map) = mixed_wreath(complex, dims)?;
    let names = names.as_ref().map(|n| copy_names(n, &map));
    let human = format!(
        "{} vertices, {} facets, dim {}\n{}\n",
        w.n(),
        w.facets().len(),
        w.dim(),
        faces_line(&w, names.as_deref())
    );
    Ok(Output::ok(json!({ "complex": complex_json(&w, names.as_deref()), "map": map_json(&map) }), human))
}

fn polarize_cmd(input: &Input, weights: Option<&[u32]>) -> Result<Output> {
    let (wc, names) = match (input, weights) {
        (Input::Complex { complex, names }, Some(w)) => {
            (WeightedComplex::new(complex.clone(), WeightFunction::new(w.to_vec())?)?, names)
        }
        (Input::Weighted { complex, names }, Some(w)) => {
            (WeightedComplex::new(complex.complex().clone(), WeightFunction::new(w.to_vec())?)?, names)
        }
        (Input::Weighted { complex, names }, None) => (complex.clone(), names),
        _ => return Err(wrong_input("polarize", "a weighted complex (or a complex with --weights)", input)),
    };
    let (p, map) = polarize(&wc)?;
    let names = names.as_ref().map(|n| copy_names(n, &map));
    let human = format!(
        "{} vertices, {} facets, dim {}\n{}\n",
        p.n(),
        p.facets().len(),
        p.dim(),
        faces_line(&p, names.as_deref())
    );
    Ok(Output::ok(json!({ "complex": complex_json(&p, names.as_deref()), "map": map_json(&map) }), human))
}

fn weight(input: &Input, weights: &[u32]) -> Result<Output> {
    let w = WeightFunction::new(weights.to_vec())?;
    let ideal = match input {
        Input::Ideal(i) => i.weight(&w)?,
        Input::Graph(g) => g.edge_ideal(Some(&w))?,
        Input::Complex { complex, .. } => sr_ideal_weighted(&WeightedComplex::new(complex.clone(), w)?)?,
        Input::Weighted { complex, .. } => sr_ideal_weighted(&WeightedComplex::new(complex.complex().clone(), w)?)?,
    };
    Ok(Output::ok(ideal_json(&ideal), format!("{}\n", ideal_to_text(&ideal))))
}

fn betti(ideal: &MonomialIdeal, k: FieldSpec) -> Result<Output> {
    let table = multigraded_betti(ideal, k)?;
    let entries: Vec<Value> = table
        .entries()
        .map(|(i, b, v)| json!({ "i": i, "degree": b, "value": v }))
        .collect();
    let json = json!({
        "n": ideal.arity(),
        "char": k.characteristic(),
        "entries": entries,
        "totals": table.totals(),
        "pd": table.pd(),
        "reg": table.reg(),
    });
    Ok(Output::ok(json, table.render()))
}

fn hilbert(ideal: &MonomialIdeal) -> Result<Output> {
    let h = hilbert_series(ideal)?;
    let terms: Vec<String> = h
        .numerator
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| {
            let coeff = match c {
                1 if d > 0 => String::new(),
                -1 if d > 0 => "-".into(),
                c if d > 0 => format!("{c}*"),
                c => c.to_string(),
            };
            match d {
                0 => coeff,
                1 => format!("{coeff}t"),
                _ => format!("{coeff}t^{d}"),
            }
        })
        .collect();
    let num = if terms.is_empty() { "0".to_string() } else { terms.join(" + ").replace("+ -", "- ") };
    let human = format!("({num}) / (1 - t)^{}\n", h.n);
    Ok(Output::ok(json!({ "n": h.n, "numerator": h.numerator, "denominator_exponent": h.n }), human))
}

fn prime_json(p: &PrimeIdeal) -> Value {
    json!(p.vars())
}

fn decompose(ideal: &MonomialIdeal) -> Result<Output> {
    let d = primary_decomposition(ideal)?;
    let mut human = String::new();
    let components: Vec<Value> = d
        .components
        .iter()
        .map(|c| {
            let _ = writeln!(human, "{}  radical {:?}", c.ideal, c.radical);
            json!({ "radical": prime_json(&c.radical), "gens": c.ideal.exponent_lists() })
        })
        .collect();
    let irreducible: Vec<Value> = d.irreducible.iter().map(|q| json!(q.exponent_lists())).collect();
    Ok(Output::ok(json!({ "n": d.n, "components": components, "irreducible": irreducible }), human))
}

fn ass(ideal: &MonomialIdeal) -> Result<Output> {
    let all = associated_primes(ideal)?;
    let (minimal, embedded) = minimal_and_embedded(ideal)?;
    let list = |s: &std::collections::BTreeSet<PrimeIdeal>| s.iter().map(prime_json).collect::<Vec<_>>();
    let mut human = String::new();
    for p in &all {
        let tag = if minimal.contains(p) { "minimal" } else { "embedded" };
        let _ = writeln!(human, "{p:?}  {tag}");
    }
    let json = json!({ "associated_primes": list(&all), "minimal": list(&minimal), "embedded": list(&embedded) });
    Ok(Output::ok(json, human))
}

fn ntf(input: &Input, max_power: usize) -> Result<Output> {
    let ideal = as_ideal(input)?;
    let report = normally_torsion_free_upto(&ideal, max_power)?;
    let mut json = serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?;
    let mut human = String::new();
    for step in &report.steps {
        let _ = writeln!(human, "s = {}: I^s = I^(s) {}", step.power, if step.holds { "yes" } else { "no" });
    }
    let _ = writeln!(human, "equal up to {}: {}", report.max_power, report.holds_up_to_max);
    if let Input::Graph(g) = input {
        json["bipartite"] = json!(is_bipartite(g));
    }
    Ok(Output::ok(json, human))
}

/// One checker run as JSON, with `Unknown` when a budget ran out.
fn decide(c: &SimplicialComplex, property: Property, bounds: &CheckerBounds, k: FieldSpec) -> Result<(Verdict, Value)> {
    let limited = |e: Error| match e {
        Error::ResourceLimit(msg) => Ok((Verdict::Unknown, json!({ "verdict": Verdict::Unknown, "reason": msg }))),
        e => Err(e),
    };
    match property {
        Property::Vd => match wsckit_core::is_vertex_decomposable(c, bounds) {
            Ok(r) => {
                let v = Verdict::from_bool(r.decomposable);
                Ok((v, json!({ "verdict": v, "shedding_order": r.shedding })))
            }
            Err(e) => limited(e),
        },
        Property::Shell => match wsckit_core::is_shellable(c, bounds) {
            Ok(r) => {
                debug_assert!(r.order.as_ref().is_none_or(|o| verify_shelling_order(c, o)));
                let v = Verdict::from_bool(r.shellable);
                Ok((v, json!({ "verdict": v, "shelling_order": r.order })))
            }
            Err(e) => limited(e),
        },
        Property::Constructible => match wsckit_core::is_constructible_bounded(c, bounds) {
            Ok(v) => Ok((v, json!({ "verdict": v }))),
            Err(e) => limited(e),
        },
        Property::Cm => match wsckit_core::is_cohen_macaulay_reisner(c, k) {
            Ok(b) => {
                let v = Verdict::from_bool(b);
                Ok((v, json!({ "verdict": v, "char": k.characteristic() })))
            }
            Err(e) => limited(e),
        },
    }
}

fn check(input: &Input, property: Property, bound: Option<usize>, k: FieldSpec) -> Result<Output> {
    let mut bounds = CheckerBounds::default();
    if let Some(b) = bound {
        match property {
            Property::Vd => bounds.vd_states = b,
            Property::Shell => bounds.shell_facets = b,
            Property::Constructible => bounds.constructible_facets = b,
            Property::Cm => {}
        }
    }
    let mut sides: Vec<(&str, SimplicialComplex)> = Vec::new();
    match input {
        Input::Complex { complex, .. } => sides.push(("complex", complex.clone())),
        Input::Weighted { complex, .. } => {
            sides.push(("complex", complex.complex().clone()));
            sides.push(("polarization", polarize(complex)?.0));
        }
        Input::Ideal(i) if i.is_squarefree() => sides.push(("complex", complex_from_squarefree(i)?)),
        _ => return Err(wrong_input("check", "a complex, weighted complex or squarefree ideal", input)),
    }
    let mut json = json!({ "property": property.name() });
    let mut human = String::new();
    let mut undecided = false;
    for (label, c) in &sides {
        let (v, detail) = decide(c, property, &bounds, k)?;
        undecided |= v == Verdict::Unknown;
        let _ = writeln!(human, "{label}: {} = {v}", property.name());
        json[*label] = detail;
    }
    Ok(Output { json, human, exit: if undecided { EXIT_RESOURCE } else { 0 } })
}

fn run_verify(k: FieldSpec, seed: u64, trials: usize, suite: Option<&str>) -> Result<Output> {
    let mut config = VerifyConfig::with_seed_and_trials(seed, trials);
    config.field = k;
    let (json, failures, human) = match suite {
        Some(name) => {
            let report = verify_suite(&config, name)
                .ok_or_else(|| Error::Parse(format!("unknown suite `{name}`")))?;
            let human = suite_line(&report);
            let failures = report.failures.len();
            (json!({ "config": config, "suites": [report], "total_failures": failures }), failures, human)
        }
        None => {
            let report = verify(&config);
            let human: String = report.suites.iter().map(suite_line).collect();
            let failures = report.total_failures;
            (serde_json::to_value(&report).map_err(|e| Error::Internal(e.to_string()))?, failures, human)
        }
    };
    let human = format!("{human}total failures: {failures}\n");
    Ok(Output { json, human, exit: if failures == 0 { 0 } else { EXIT_FAILURES } })
}

fn suite_line(s: &wsckit_core::verify::SuiteReport) -> String {
    format!(
        "{:<28} {:>4} trials {:>4} passed {:>3} vacuous {:>3} skipped {:>3} partial {:>3} failed\n",
        s.name,
        s.trials,
        s.passed,
        s.vacuous,
        s.skipped,
        s.partial,
        s.failures.len()
    )
}

//! Seeded property battery over random small instances.
//!
//! Every suite draws its own stream of trial seeds from the master seed, so a
//! report is reproducible from `(seed, trials, bounds)` alone and each
//! failure carries the seed of the instance that produced it.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::betti::{hilbert_series, invariants_from_table, multigraded_betti, upper_koszul, HilbertSeries};
use crate::checkers::{implication_violations, property_transport_report, property_verdicts, CheckerBounds};
use crate::complex::{Face, SimplicialComplex};
use crate::decomposition::{
    associated_primes, associated_primes_by_witness, is_bipartite, normally_torsion_free_upto, symbolic_power,
    weighted_decomposition_check,
};
use crate::error::{Error, Result};
use crate::homology::FieldSpec;
use crate::monomial::{Graph, Monomial, MonomialIdeal};
use crate::weighted::{polarize, sr_ideal, sr_ideal_weighted, WeightFunction, WeightedComplex};
use crate::wreath::{mixed_wreath, one_point_suspension};

/// Instance sizes and trial counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_vertices: usize,
    pub max_exponent: u32,
    pub max_weight: u32,
    pub max_generators: usize,
    pub max_facets: usize,
    pub transport_pairs: usize,
    pub max_wreath_dim: usize,
    pub ntf_max_power: usize,
    pub field: FieldSpec,
    pub bounds: CheckerBounds,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: 42,
            trials: 50,
            max_vertices: 5,
            max_exponent: 3,
            max_weight: 3,
            max_generators: 4,
            max_facets: 4,
            transport_pairs: 25,
            max_wreath_dim: 2,
            ntf_max_power: 2,
            field: FieldSpec::Rational,
            bounds: CheckerBounds { shell_facets: 24, shell_states: 1 << 16, constructible_facets: 8, vd_states: 1 << 14 },
        }
    }
}

impl VerifyConfig {
    pub fn with_seed_and_trials(seed: u64, trials: usize) -> Self {
        VerifyConfig { seed, trials, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub seed: u64,
    pub instance: String,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub description: String,
    pub trials: usize,
    pub passed: usize,
    /// Passed because the statement is empty on the drawn instance.
    pub vacuous: usize,
    /// Instances whose computation hit a resource bound.
    pub skipped: usize,
    /// Passed with at least one quantity left undecided.
    pub partial: usize,
    pub failures: Vec<TrialFailure>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub config: VerifyConfig,
    pub suites: Vec<SuiteReport>,
    pub total_failures: usize,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.total_failures == 0
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.name == name)
    }
}

enum Outcome {
    Pass,
    Partial,
    Vacuous,
    Fail(String),
}

type Trial = fn(&mut ChaCha8Rng, &VerifyConfig) -> (String, Result<Outcome>);

struct Suite {
    name: &'static str,
    description: &'static str,
    trial: Trial,
    transport: bool,
}

const SUITES: &[Suite] = &[
    Suite {
        name: "betti_weighting",
        description: "β_{i,b}(I) = β_{i,w(b)}((I,w)) for every entry",
        trial: betti_weighting,
        transport: false,
    },
    Suite {
        name: "upper_koszul_weighting",
        description: "K^b(I) = K^{w(b)}((I,w)) as face sets",
        trial: upper_koszul_weighting,
        transport: false,
    },
    Suite {
        name: "associated_primes_weighting",
        description: "Ass(R/(I,w)) = Ass(R/I), both matching a colon-ideal witness search",
        trial: associated_primes_weighting,
        transport: false,
    },
    Suite {
        name: "weighted_decomposition",
        description: "the primary components of (I,w) are the weighted components of I",
        trial: weighted_decomposition,
        transport: false,
    },
    Suite {
        name: "polarization_ideal",
        description: "SR ideal of the polarized complex = polarization of the weighted SR ideal",
        trial: polarization_ideal,
        transport: false,
    },
    Suite {
        name: "polarization_invariants",
        description: "graded Betti table, height, pd, reg and Cohen-Macaulayness agree under polarization",
        trial: polarization_invariants,
        transport: false,
    },
    Suite {
        name: "polarization_hilbert",
        description: "Hilb(R/I_(Δ,w)) = (1-t)^ρ Hilb(S/I_pol) by exact polynomial arithmetic",
        trial: polarization_hilbert,
        transport: false,
    },
    Suite {
        name: "suspension_commutativity",
        description: "(Δ(u))(v) = (Δ(v))(u) = mixed wreath product in the canonical layout",
        trial: suspension_commutativity,
        transport: false,
    },
    Suite {
        name: "ntf_weighting",
        description: "bounded normal torsion freeness of edge ideals agrees with weighting; bipartite graphs pass",
        trial: ntf_weighting,
        transport: false,
    },
    Suite {
        name: "implication_chain",
        description: "VD => shellable, and on pure complexes shellable => constructible => CM",
        trial: implication_chain,
        transport: false,
    },
    Suite {
        name: "property_transport",
        description: "VD, shellability, constructibility and CM agree on Δ and its mixed wreath products",
        trial: property_transport,
        transport: true,
    },
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.name).collect()
}

/// Runs every suite; failures are reported, not returned as errors.
pub fn verify(config: &VerifyConfig) -> VerifyReport {
    let suites: Vec<SuiteReport> = SUITES.iter().enumerate().map(|(i, s)| run_suite(config, i, s)).collect();
    let total_failures = suites.iter().map(|s| s.failures.len()).sum();
    VerifyReport { config: *config, suites, total_failures }
}

/// Runs a single suite by name.
pub fn verify_suite(config: &VerifyConfig, name: &str) -> Option<SuiteReport> {
    SUITES.iter().enumerate().find(|(_, s)| s.name == name).map(|(i, s)| run_suite(config, i, s))
}

fn trial_seeds(config: &VerifyConfig, suite_index: usize, count: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(suite_index as u64);
    (0..count).map(|_| rng.gen()).collect()
}

fn run_suite(config: &VerifyConfig, index: usize, suite: &Suite) -> SuiteReport {
    let trials = if suite.transport { config.transport_pairs } else { config.trials };
    let seeds = trial_seeds(config, index, trials);
    let outcomes: Vec<(String, Result<Outcome>)> = seeds
        .par_iter()
        .map(|&s| {
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            (suite.trial)(&mut rng, config)
        })
        .collect();
    let mut report = SuiteReport {
        name: suite.name.into(),
        description: suite.description.into(),
        trials,
        passed: 0,
        vacuous: 0,
        skipped: 0,
        partial: 0,
        failures: Vec::new(),
    };
    for (trial, ((instance, outcome), seed)) in outcomes.into_iter().zip(seeds).enumerate() {
        let fail = |detail: String| TrialFailure { trial, seed, instance: instance.clone(), detail };
        match outcome {
            Ok(Outcome::Pass) => report.passed += 1,
            Ok(Outcome::Partial) => {
                report.passed += 1;
                report.partial += 1;
            }
            Ok(Outcome::Vacuous) => {
                report.passed += 1;
                report.vacuous += 1;
            }
            Err(Error::ResourceLimit(_)) => report.skipped += 1,
            Ok(Outcome::Fail(d)) => report.failures.push(fail(d)),
            Err(e) => report.failures.push(fail(format!("error: {e}"))),
        }
    }
    report
}

// ---------------------------------------------------------------------------
// instance generators

pub fn random_ideal(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> MonomialIdeal {
    let n = rng.gen_range(1..=config.max_vertices);
    let k = rng.gen_range(1..=config.max_generators);
    let mut gens = Vec::with_capacity(k);
    while gens.len() < k {
        let e: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=config.max_exponent)).collect();
        if e.iter().any(|&x| x > 0) {
            gens.push(Monomial::new(e));
        }
    }
    MonomialIdeal::minimalize(n, gens).expect("generators have matching arity")
}

pub fn random_weights(rng: &mut ChaCha8Rng, n: usize, max: u32) -> WeightFunction {
    WeightFunction::new((0..n).map(|_| rng.gen_range(1..=max)).collect()).expect("weights are positive")
}

/// A complex on `n` vertices, every vertex used. Half of the draws are pure
/// of a random dimension, the rest have random facets of any size.
pub fn random_complex(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> SimplicialComplex {
    let n = rng.gen_range(1..=config.max_vertices);
    if rng.gen_bool(0.5) {
        let size = rng.gen_range(1..=n);
        let k = rng.gen_range(1..=config.max_facets + 2);
        let mut verts: Vec<usize> = (0..n).collect();
        let faces: Vec<Face> = (0..k)
            .map(|_| {
                verts.shuffle(rng);
                Face::from_vertices(verts[..size].iter().copied())
            })
            .collect();
        return SimplicialComplex::from_faces(n, faces).expect("faces lie in range").compress();
    }
    let k = rng.gen_range(1..=config.max_facets);
    let mut faces: Vec<Face> = (0..k).map(|_| Face::from_mask(rng.gen_range(1..(1u64 << n)))).collect();
    let used = faces.iter().fold(Face::EMPTY, |a, f| a.union(*f));
    faces.extend((0..n).filter(|&v| !used.contains(v)).map(Face::singleton));
    SimplicialComplex::from_faces(n, faces).expect("faces lie in range")
}

fn random_graph(rng: &mut ChaCha8Rng, config: &VerifyConfig) -> Graph {
    let n = rng.gen_range(2..=config.max_vertices.max(2));
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    let k = rng.gen_range(1..=pairs.len());
    Graph::new(n, &pairs[..k]).expect("pairs are proper edges")
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Outcome::Pass
    } else {
        Outcome::Fail(msg())
    }
}

// ---------------------------------------------------------------------------
// suites

fn ideal_and_weights(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (MonomialIdeal, WeightFunction, String) {
    let i = random_ideal(rng, c);
    let w = random_weights(rng, i.arity(), c.max_weight);
    let s = format!("I = {i}, w = {:?}", w.values());
    (i, w, s)
}

fn betti_weighting(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (String, Result<Outcome>) {
    let (i, w, s) = ideal_and_weights(rng, c);
    let run = || -> Result<Outcome> {
        let t = multigraded_betti(&i, c.field)?;
        let tw = multigraded_betti(&i.weight(&w)?, c.field)?;
        let expected = t.reweighted(&w)?;
        Ok(check(expected == tw, || format!("weighted table {tw:?} differs from reweighted {expected:?}")))
    };
    (s, run())
}

fn upper_koszul_weighting(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (String, Result<Outcome>) {
    let (i, w, s) = ideal_and_weights(rng, c);
    let run = || -> Result<Outcome> {
        let iw = i.weight(&w)?;
        // every degree in the box one past the generator lcm, lattice points included
        let top = i.lcm_of_gens();
        let n = i.arity();
        let mut b = vec![0u32; n];
        loop {
            let m = Monomial::new(b.clone());
            let k = upper_koszul(&i, &m)?;
            let kw = upper_koszul(&iw, &w.apply(&m)?)?;
            if k != kw {
                return Ok(Outcome::Fail(format!("b = {:?}: {k:?} vs {kw:?}", m.exps())));
            }
            let mut pos = 0;
            loop {
                if pos == n {
                    return Ok(Outcome::Pass);
                }
                if b[pos] <= top.exps()[pos] {
                    b[pos] += 1;
                    break;
                }
                b[pos] = 0;
                pos += 1;
            }
        }
    };
    (s, run())
}

fn associated_primes_weighting(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (String, Result<Outcome>) {
    let (i, w, s) = ideal_and_weights(rng, c);
    let run = || -> Result<Outcome> {
        let iw = i.weight(&w)?;
        let a = associated_primes(&i)?;
        let aw = associated_primes(&iw)?;
        if a != aw {
            return Ok(Outcome::Fail(format!("Ass(I) = {a:?}, Ass((I,w)) = {aw:?}")));
        }
        let witness = associated_primes_by_witness(&iw, 1 << 16)?;
        Ok(check(witness == aw, || format!("witness search gives {witness:?}, decomposition gives {aw:?}")))
    };
    (s, run())
}

fn weighted_decomposition(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (String, Result<Outcome>) {
    let (i, w, s) = ideal_and_weights(rng, c);
    let run = || -> Result<Outcome> {
        let r = weighted_decomposition_check(&i, &w)?;
        Ok(check(r.holds, || r.mismatches.join("; ")))
    };
    (s, run())
}

/// Simplices are redrawn a few times since their ideals are zero.
fn weighted_complex(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (WeightedComplex, String) {
    let mut cx = random_complex(rng, c);
    for _ in 0..16 {
        if !cx.is_simplex() {
            break;
        }
        cx = random_complex(rng, c);
    }
    let w = random_weights(rng, cx.n(), c.max_weight);
    let s = format!("Δ = {:?}, w = {:?}", cx.facet_lists(), w.values());
    (WeightedComplex::new(cx, w).expect("weights match"), s)
}

fn polarization_ideal(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (String, Result<Outcome>) {
    let (wc, s) = weighted_complex(rng, c);
    let run = || -> Result<Outcome> {
        let (p, map) = polarize(&wc)?;
        let (ip, imap) = sr_ideal_weighted(&wc)?.polarize()?;
        let lhs = sr_ideal(&p)?;
        let rhs = ip.relayout(&imap, &map)?;
        Ok(check(lhs == rhs, || format!("I_pol = {lhs}, pol(I) = {rhs}")))
    };
    (s, run())
}

fn polarization_invariants(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (String, Result<Outcome>) {
    let (wc, s) = weighted_complex(rng, c);
    let run = || -> Result<Outcome> {
        let i = sr_ideal_weighted(&wc)?;
        if i.is_zero() {
            return Ok(Outcome::Vacuous);
        }
        let (p, _) = polarize(&wc)?;
        let j = sr_ideal(&p)?;
        let ti = multigraded_betti(&i, c.field)?;
        let tj = multigraded_betti(&j, c.field)?;
        if ti.graded() != tj.graded() {
            return Ok(Outcome::Fail(format!("graded tables differ: {:?} vs {:?}", ti.graded(), tj.graded())));
        }
        let a = invariants_from_table(&i, &ti)?;
        let b = invariants_from_table(&j, &tj)?;
        if (a.height, a.pd_ideal, a.reg_ideal, a.cohen_macaulay) != (b.height, b.pd_ideal, b.reg_ideal, b.cohen_macaulay) {
            return Ok(Outcome::Fail(format!("invariants differ: {a:?} vs {b:?}")));
        }
        // unweighted SR ideal has the same Cohen-Macaulayness
        let plain = sr_ideal(wc.complex())?;
        let cm_plain = invariants_from_table(&plain, &multigraded_betti(&plain, c.field)?)?.cohen_macaulay;
        Ok(check(cm_plain == a.cohen_macaulay, || format!("R/I_Δ CM = {cm_plain}, R/I_(Δ,w) CM = {}", a.cohen_macaulay)))
    };
    (s, run())
}

fn polarization_hilbert(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (String, Result<Outcome>) {
    let (wc, s) = weighted_complex(rng, c);
    let run = || -> Result<Outcome> {
        let i = sr_ideal_weighted(&wc)?;
        let (p, _) = polarize(&wc)?;
        let j = sr_ideal(&p)?;
        let hi = hilbert_series(&i)?;
        let hj = hilbert_series(&j)?;
        if hi != HilbertSeries::by_inclusion_exclusion(&i)? {
            return Ok(Outcome::Fail("Betti and inclusion-exclusion numerators differ".into()));
        }
        let n = i.arity() as u64;
        let rho = wc.weights().excess();
        // N_I / (1-t)^n = (1-t)^ρ N_J / (1-t)^{n+ρ}, cross-multiplied
        let lhs = hi.numerator_times_one_minus_t(n + rho);
        let rhs = HilbertSeries { n: j.arity(), numerator: hj.numerator_times_one_minus_t(rho) }
            .numerator_times_one_minus_t(n);
        Ok(check(lhs == rhs, || format!("N_I = {:?}, N_pol = {:?}, ρ = {rho}", hi.numerator, hj.numerator)))
    };
    (s, run())
}

fn suspension_commutativity(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (String, Result<Outcome>) {
    let cx = loop {
        let x = random_complex(rng, c);
        if x.n() >= 2 {
            break x;
        }
    };
    let u = rng.gen_range(0..cx.n());
    let v = (u + rng.gen_range(1..cx.n())) % cx.n();
    let s = format!("Δ = {:?}, u = {u}, v = {v}", cx.facet_lists());
    let run = || -> Result<Outcome> {
        let both = |a: usize, b: usize| -> Result<(SimplicialComplex, Vec<usize>)> {
            let (x, m1) = one_point_suspension(&cx, a)?;
            let (y, m2) = one_point_suspension(&x, m1.copy(b, 0))?;
            Ok((y, m1.then(&m2)?.counts().to_vec()))
        };
        let (uv, muv) = both(u, v)?;
        let (vu, mvu) = both(v, u)?;
        let mut dims = vec![0; cx.n()];
        dims[u] = 1;
        dims[v] = 1;
        let (w, mw) = mixed_wreath(&cx, &dims)?;
        Ok(check(uv == vu && vu == w && muv == mvu && mvu == mw.counts(), || {
            format!("{:?} / {:?} / {:?}", uv.facet_lists(), vu.facet_lists(), w.facet_lists())
        }))
    };
    (s, run())
}

fn ntf_weighting(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (String, Result<Outcome>) {
    let g = random_graph(rng, c);
    let w = random_weights(rng, g.n(), c.max_weight);
    let s = format!("G = {:?} on {} vertices, w = {:?}", g.edges(), g.n(), w.values());
    let run = || -> Result<Outcome> {
        let i = g.edge_ideal(None)?;
        let iw = g.edge_ideal(Some(&w))?;
        let r = normally_torsion_free_upto(&i, c.ntf_max_power)?;
        let rw = normally_torsion_free_upto(&iw, c.ntf_max_power)?;
        if r.first_failure != rw.first_failure {
            return Ok(Outcome::Fail(format!(
                "first failure {:?} unweighted vs {:?} weighted",
                r.first_failure, rw.first_failure
            )));
        }
        if is_bipartite(&g) {
            if !r.holds_up_to_max {
                return Ok(Outcome::Fail("bipartite graph fails the probe".into()));
            }
            let sym = symbolic_power(&i, 2)?;
            let pow = i.power(2)?;
            return Ok(check(sym == pow, || format!("I^(2) = {sym} but I^2 = {pow}")));
        }
        Ok(Outcome::Pass)
    };
    (s, run())
}

fn implication_chain(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (String, Result<Outcome>) {
    let cx = random_complex(rng, c);
    let s = format!("Δ = {:?}", cx.facet_lists());
    let run = || -> Result<Outcome> {
        let v = property_verdicts(&cx, &c.bounds, FieldSpec::Rational)?;
        let bad = implication_violations(&v);
        if !bad.is_empty() {
            return Ok(Outcome::Fail(format!("{bad:?} with verdicts {v:?}")));
        }
        // Reisner against the ring-theoretic route through Auslander-Buchsbaum
        let i = sr_ideal(&cx)?;
        let ring_cm = if i.is_zero() {
            true
        } else {
            invariants_from_table(&i, &multigraded_betti(&i, FieldSpec::Rational)?)?.cohen_macaulay
        };
        Ok(check(v.cohen_macaulay.as_bool() == Some(ring_cm), || {
            format!("Reisner gives {}, Auslander-Buchsbaum gives {ring_cm}", v.cohen_macaulay)
        }))
    };
    (s, run())
}

fn property_transport(rng: &mut ChaCha8Rng, c: &VerifyConfig) -> (String, Result<Outcome>) {
    let cx = random_complex(rng, c);
    let dims: Vec<usize> = (0..cx.n()).map(|_| rng.gen_range(0..=c.max_wreath_dim)).collect();
    let s = format!("Δ = {:?}, d = {dims:?}", cx.facet_lists());
    let run = || -> Result<Outcome> {
        let r = property_transport_report(&cx, &dims, &c.bounds, FieldSpec::Rational)?;
        if r.violations > 0 {
            return Ok(Outcome::Fail(format!("{r:?}")));
        }
        if r.comparisons.iter().any(|x| x.agree.is_none()) {
            return Ok(Outcome::Partial);
        }
        Ok(Outcome::Pass)
    };
    (s, run())
}

//! Primary decomposition of monomial ideals and everything read off it:
//! associated, minimal and embedded primes, height, symbolic powers and a
//! bounded normal-torsion-freeness probe.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{Graph, Monomial, MonomialIdeal};
use crate::weighted::WeightFunction;

/// Maximum number of intermediate ideals visited by the splitting recursion.
pub const SPLIT_CAP: usize = 1 << 20;

/// A prime generated by a subset of the variables.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimeIdeal {
    vars: Vec<usize>,
}

impl PrimeIdeal {
    pub fn new(vars: impl IntoIterator<Item = usize>) -> Self {
        let set: BTreeSet<usize> = vars.into_iter().collect();
        PrimeIdeal { vars: set.into_iter().collect() }
    }

    pub fn vars(&self) -> &[usize] {
        &self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn is_subset(&self, other: &PrimeIdeal) -> bool {
        self.vars.iter().all(|v| other.vars.binary_search(v).is_ok())
    }

    pub fn to_ideal(&self, n: usize) -> MonomialIdeal {
        MonomialIdeal::prime(n, self.vars.iter().copied())
    }
}

impl fmt::Debug for PrimeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.vars.iter().map(|v| format!("x{}", v + 1)).collect();
        write!(f, "({})", names.join(","))
    }
}

/// A primary component together with its radical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    pub radical: PrimeIdeal,
    pub ideal: MonomialIdeal,
}

/// Irredundant decomposition of a monomial ideal.
///
/// `irreducible` is the unique irredundant intersection of ideals generated
/// by pure powers; `components` groups those by radical, giving one primary
/// component per associated prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub n: usize,
    pub irreducible: Vec<MonomialIdeal>,
    pub components: Vec<PrimaryComponent>,
}

impl Decomposition {
    pub fn associated_primes(&self) -> BTreeSet<PrimeIdeal> {
        self.components.iter().map(|c| c.radical.clone()).collect()
    }

    /// Intersection of all components.
    pub fn intersection(&self) -> Result<MonomialIdeal> {
        intersect_all(self.n, self.components.iter().map(|c| &c.ideal))
    }
}

fn intersect_all<'a>(n: usize, ideals: impl Iterator<Item = &'a MonomialIdeal>) -> Result<MonomialIdeal> {
    let mut acc = MonomialIdeal::unit(n);
    for q in ideals {
        acc = acc.intersect(q)?;
    }
    Ok(acc)
}

fn radical_of_pure_powers(q: &MonomialIdeal) -> PrimeIdeal {
    PrimeIdeal::new(q.gens().iter().filter_map(|g| g.as_pure_power().map(|(i, _)| i)))
}

/// Irredundant primary decomposition by splitting generators.
///
/// A generator `m` that is not a pure power is written `m = u v` with `u` the
/// full power of its lowest-index variable, and `I = (I \ m, u) ∩ (I \ m, v)`.
/// Leaves are generated by pure powers; redundant leaves are dropped and the
/// rest are grouped by radical.
pub fn primary_decomposition(ideal: &MonomialIdeal) -> Result<Decomposition> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::DegenerateIdeal);
    }
    let n = ideal.arity();
    let mut leaves: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    let mut seen: HashSet<MonomialIdeal> = HashSet::new();
    let mut queue: VecDeque<MonomialIdeal> = VecDeque::from([ideal.clone()]);
    while let Some(cur) = queue.pop_front() {
        if !seen.insert(cur.clone()) {
            continue;
        }
        if seen.len() > SPLIT_CAP {
            return Err(Error::ResourceLimit(format!("primary decomposition visited more than {SPLIT_CAP} ideals")));
        }
        let Some(m) = cur.gens().iter().find(|g| g.as_pure_power().is_none()) else {
            leaves.insert(cur.exponent_lists());
            continue;
        };
        let i = m.support()[0];
        let u = Monomial::pure_power(n, i, m.exps()[i]);
        let v = m.colon(&u);
        let rest: Vec<Monomial> = cur.gens().iter().filter(|g| *g != m).cloned().collect();
        for piece in [u, v] {
            let mut gens = rest.clone();
            gens.push(piece);
            queue.push_back(MonomialIdeal::minimalize(n, gens)?);
        }
    }

    let leaves: Vec<MonomialIdeal> =
        leaves.into_iter().map(|g| MonomialIdeal::from_exponents(n, &g)).collect::<Result<_>>()?;
    // An irreducible ideal contains an intersection only if it contains one of
    // the terms, so redundancy reduces to pairwise containment.
    let mut irreducible: Vec<MonomialIdeal> = Vec::new();
    for (a, q) in leaves.iter().enumerate() {
        let redundant = leaves.iter().enumerate().any(|(b, other)| {
            a != b && other.is_subideal(q) && (!q.is_subideal(other) || b < a)
        });
        if !redundant {
            irreducible.push(q.clone());
        }
    }

    let mut by_radical: BTreeMap<PrimeIdeal, MonomialIdeal> = BTreeMap::new();
    for q in &irreducible {
        let p = radical_of_pure_powers(q);
        let merged = match by_radical.remove(&p) {
            Some(prev) => prev.intersect(q)?,
            None => q.clone(),
        };
        by_radical.insert(p, merged);
    }
    let mut components: Vec<PrimaryComponent> =
        by_radical.into_iter().map(|(radical, ideal)| PrimaryComponent { radical, ideal }).collect();

    // Prune anything still redundant.
    let mut idx = 0;
    while idx < components.len() && components.len() > 1 {
        let others = intersect_all(n, components.iter().enumerate().filter(|(j, _)| *j != idx).map(|(_, c)| &c.ideal))?;
        if others.is_subideal(&components[idx].ideal) {
            components.remove(idx);
        } else {
            idx += 1;
        }
    }
    components.sort_by(|a, b| a.radical.height().cmp(&b.radical.height()).then(a.radical.cmp(&b.radical)));

    let dec = Decomposition { n, irreducible, components };
    if dec.intersection()? != *ideal {
        return Err(Error::Internal(format!("decomposition of {ideal} does not intersect back to it")));
    }
    Ok(dec)
}

pub fn associated_primes(ideal: &MonomialIdeal) -> Result<BTreeSet<PrimeIdeal>> {
    Ok(primary_decomposition(ideal)?.associated_primes())
}

/// Associated primes found directly as colon ideals `I : m` over monomials
/// `m` in the box below the generator lcm.
pub fn associated_primes_by_witness(ideal: &MonomialIdeal, cap: usize) -> Result<BTreeSet<PrimeIdeal>> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::DegenerateIdeal);
    }
    let bound = ideal.lcm_of_gens();
    let size = bound.exps().iter().try_fold(1usize, |acc, &e| acc.checked_mul(e as usize + 1));
    match size {
        Some(s) if s <= cap => {}
        _ => return Err(Error::ResourceLimit(format!("witness box exceeds {cap} monomials"))),
    }
    let n = ideal.arity();
    let mut found = BTreeSet::new();
    let mut exps = vec![0u32; n];
    loop {
        let m = Monomial::new(exps.clone());
        if !ideal.contains(&m) {
            let q = ideal.colon(&m)?;
            if q.gens().iter().all(|g| g.degree() == 1) {
                found.insert(PrimeIdeal::new(q.gens().iter().map(|g| g.support()[0])));
            }
        }
        // odometer over the box
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(found);
            }
            if exps[pos] < bound.exps()[pos] {
                exps[pos] += 1;
                break;
            }
            exps[pos] = 0;
            pos += 1;
        }
    }
}

/// Minimal primes and embedded primes of `R/I`.
pub fn minimal_and_embedded(ideal: &MonomialIdeal) -> Result<(BTreeSet<PrimeIdeal>, BTreeSet<PrimeIdeal>)> {
    let ass = associated_primes(ideal)?;
    Ok(split_minimal(&ass))
}

fn split_minimal(ass: &BTreeSet<PrimeIdeal>) -> (BTreeSet<PrimeIdeal>, BTreeSet<PrimeIdeal>) {
    let (min, emb): (Vec<_>, Vec<_>) = ass
        .iter()
        .cloned()
        .partition(|p| !ass.iter().any(|q| q != p && q.is_subset(p)));
    (min.into_iter().collect(), emb.into_iter().collect())
}

/// Smallest size of a minimal prime; `0` for the zero ideal.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    if ideal.is_zero() {
        return Ok(0);
    }
    let (min, _) = minimal_and_embedded(ideal)?;
    Ok(min.iter().map(|p| p.height()).min().unwrap_or(0))
}

/// Result of comparing the decomposition of `(I, w)` with the weighted
/// components of `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightedDecompositionCheck {
    pub holds: bool,
    pub mismatches: Vec<String>,
}

pub fn weighted_decomposition_check(ideal: &MonomialIdeal, w: &WeightFunction) -> Result<WeightedDecompositionCheck> {
    let base = primary_decomposition(ideal)?;
    let weighted = primary_decomposition(&ideal.weight(w)?)?;
    let mut mismatches = Vec::new();

    let expected: BTreeMap<PrimeIdeal, MonomialIdeal> = base
        .components
        .iter()
        .map(|c| Ok((c.radical.clone(), c.ideal.weight(w)?)))
        .collect::<Result<_>>()?;
    let actual: BTreeMap<PrimeIdeal, MonomialIdeal> =
        weighted.components.iter().map(|c| (c.radical.clone(), c.ideal.clone())).collect();
    for (p, q) in &expected {
        match actual.get(p) {
            None => mismatches.push(format!("component with radical {p:?} missing from the weighted ideal")),
            Some(a) if a != q => mismatches.push(format!("radical {p:?}: expected {q}, found {a}")),
            _ => {}
        }
    }
    for p in actual.keys().filter(|p| !expected.contains_key(*p)) {
        mismatches.push(format!("unexpected component with radical {p:?}"));
    }

    let mut expected_irr: Vec<Vec<Vec<u32>>> =
        base.irreducible.iter().map(|q| q.weight(w).map(|x| x.exponent_lists())).collect::<Result<_>>()?;
    let mut actual_irr: Vec<Vec<Vec<u32>>> = weighted.irreducible.iter().map(|q| q.exponent_lists()).collect();
    expected_irr.sort();
    actual_irr.sort();
    if expected_irr != actual_irr {
        mismatches.push("irreducible components differ".into());
    }
    Ok(WeightedDecompositionCheck { holds: mismatches.is_empty(), mismatches })
}

/// `I^(s)`: intersection over minimal primes `P` of `I^s : (∏_{x_i ∉ P} x_i)^∞`.
pub fn symbolic_power(ideal: &MonomialIdeal, s: i64) -> Result<MonomialIdeal> {
    if s < 1 {
        return Err(Error::InvalidExponent(s));
    }
    let n = ideal.arity();
    let (min, _) = minimal_and_embedded(ideal)?;
    let power = ideal.power(s)?;
    let mut acc = MonomialIdeal::unit(n);
    for p in &min {
        let outside = Monomial::squarefree(n, (0..n).filter(|i| p.vars().binary_search(i).is_err()));
        acc = acc.intersect(&power.saturate(&outside)?)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NtfStep {
    pub power: usize,
    pub holds: bool,
    /// Associated primes of `R/I^k` that are not associated to `R/I`.
    pub extra_primes: Vec<PrimeIdeal>,
}

/// Bounded normal-torsion-freeness verdict, valid only up to `max_power`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NtfReport {
    pub max_power: usize,
    pub holds_up_to_max: bool,
    pub first_failure: Option<usize>,
    pub steps: Vec<NtfStep>,
}

/// Checks `Ass(R/I^k) ⊆ Ass(R/I)` for `k = 1..=max_power`.
pub fn normally_torsion_free_upto(ideal: &MonomialIdeal, max_power: usize) -> Result<NtfReport> {
    if max_power < 1 {
        return Err(Error::InvalidExponent(max_power as i64));
    }
    let base = associated_primes(ideal)?;
    let mut steps = Vec::with_capacity(max_power);
    let mut power = ideal.clone();
    for k in 1..=max_power {
        if k > 1 {
            power = power.product(ideal)?;
        }
        let ass = associated_primes(&power)?;
        let extra: Vec<PrimeIdeal> = ass.difference(&base).cloned().collect();
        steps.push(NtfStep { power: k, holds: extra.is_empty(), extra_primes: extra });
    }
    let first_failure = steps.iter().find(|s| !s.holds).map(|s| s.power);
    Ok(NtfReport { max_power, holds_up_to_max: first_failure.is_none(), first_failure, steps })
}

/// Two-colouring by breadth-first search, one component at a time.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut adj = vec![Vec::new(); g.n()];
    for &(a, b) in g.edges() {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut colour: Vec<Option<bool>> = vec![None; g.n()];
    for start in 0..g.n() {
        if colour[start].is_some() {
            continue;
        }
        colour[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].expect("queued vertices are coloured");
            for &v in &adj[u] {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    fn primes(ps: &[&[usize]]) -> BTreeSet<PrimeIdeal> {
        ps.iter().map(|p| PrimeIdeal::new(p.iter().copied())).collect()
    }

    fn components(d: &Decomposition) -> BTreeSet<Vec<Vec<u32>>> {
        d.components.iter().map(|c| c.ideal.exponent_lists()).collect()
    }

    #[test]
    fn worked_example() {
        let i = ideal(3, &[&[2, 3, 0], &[0, 3, 4], &[2, 0, 4]]);
        let d = primary_decomposition(&i).unwrap();
        let expected: BTreeSet<Vec<Vec<u32>>> = [
            ideal(3, &[&[2, 0, 0], &[0, 3, 0]]),
            ideal(3, &[&[2, 0, 0], &[0, 0, 4]]),
            ideal(3, &[&[0, 3, 0], &[0, 0, 4]]),
        ]
        .iter()
        .map(|q| q.exponent_lists())
        .collect();
        assert_eq!(components(&d), expected);
        assert_eq!(d.associated_primes(), primes(&[&[0, 1], &[0, 2], &[1, 2]]));

        let j = primary_decomposition(&triangle()).unwrap();
        let expected: BTreeSet<_> = [
            MonomialIdeal::prime(3, [0, 1]),
            MonomialIdeal::prime(3, [0, 2]),
            MonomialIdeal::prime(3, [1, 2]),
        ]
        .iter()
        .map(|q| q.exponent_lists())
        .collect();
        assert_eq!(components(&j), expected);
    }

    #[test]
    fn pure_power_ideal_is_its_own_decomposition() {
        let q = ideal(3, &[&[2, 0, 0], &[0, 0, 5]]);
        let d = primary_decomposition(&q).unwrap();
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].ideal, q);
        assert_eq!(d.components[0].radical, PrimeIdeal::new([0, 2]));
    }

    #[test]
    fn embedded_component() {
        // (x^2, xy) = (x) ∩ (x^2, y)
        let i = ideal(2, &[&[2, 0], &[1, 1]]);
        let d = primary_decomposition(&i).unwrap();
        assert_eq!(d.components.len(), 2);
        let (min, emb) = minimal_and_embedded(&i).unwrap();
        assert_eq!(min, primes(&[&[0]]));
        assert_eq!(emb, primes(&[&[0, 1]]));
    }

    #[test]
    fn same_radical_components_merge() {
        // (x^2, xy, y^2) is (x,y)-primary but not irreducible
        let i = ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]);
        let d = primary_decomposition(&i).unwrap();
        assert_eq!(d.irreducible.len(), 2);
        assert_eq!(d.components.len(), 1);
        assert_eq!(d.components[0].ideal, i);
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(primary_decomposition(&MonomialIdeal::zero(2)), Err(Error::DegenerateIdeal));
        assert_eq!(primary_decomposition(&MonomialIdeal::unit(2)), Err(Error::DegenerateIdeal));
    }

    #[test]
    fn associated_prime_examples() {
        assert_eq!(associated_primes(&triangle()).unwrap(), primes(&[&[0, 1], &[0, 2], &[1, 2]]));
        for e in 1..5 {
            assert_eq!(associated_primes(&ideal(1, &[&[e]])).unwrap(), primes(&[&[0]]));
        }
        let sq = triangle().power(2).unwrap();
        assert!(associated_primes(&sq).unwrap().contains(&PrimeIdeal::new([0, 1, 2])));
    }

    #[test]
    fn witness_search_agrees() {
        let cases = [
            triangle(),
            triangle().power(2).unwrap(),
            ideal(2, &[&[2, 0], &[1, 1]]),
            ideal(3, &[&[2, 3, 0], &[0, 3, 4], &[2, 0, 4]]),
        ];
        for i in &cases {
            assert_eq!(associated_primes_by_witness(i, 1 << 16).unwrap(), associated_primes(i).unwrap(), "{i}");
        }
    }

    #[test]
    fn heights() {
        assert_eq!(height(&triangle()).unwrap(), 2);
        let (min, emb) = minimal_and_embedded(&triangle()).unwrap();
        assert_eq!(min.len(), 3);
        assert!(emb.is_empty());
        assert_eq!(height(&MonomialIdeal::zero(3)).unwrap(), 0);
    }

    #[test]
    fn weighted_check_examples() {
        let w = WeightFunction::new(vec![2, 3, 4]).unwrap();
        let r = weighted_decomposition_check(&triangle(), &w).unwrap();
        assert!(r.holds, "{:?}", r.mismatches);
        let r = weighted_decomposition_check(&triangle(), &WeightFunction::ones(3)).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn symbolic_powers() {
        let c3 = triangle();
        assert_eq!(symbolic_power(&c3, 1).unwrap(), c3);
        let c4 = Graph::cycle(4).unwrap().edge_ideal(None).unwrap();
        assert_eq!(symbolic_power(&c4, 2).unwrap(), c4.power(2).unwrap());
        let s2 = symbolic_power(&c3, 2).unwrap();
        let xyz = Monomial::new(vec![1, 1, 1]);
        assert!(s2.contains(&xyz));
        assert!(!c3.power(2).unwrap().contains(&xyz));
    }

    #[test]
    fn ntf_probe() {
        let c4 = Graph::cycle(4).unwrap().edge_ideal(None).unwrap();
        let r = normally_torsion_free_upto(&c4, 3).unwrap();
        assert!(r.holds_up_to_max);
        let r = normally_torsion_free_upto(&triangle(), 2).unwrap();
        assert_eq!(r.first_failure, Some(2));
        assert_eq!(r.steps[1].extra_primes, vec![PrimeIdeal::new([0, 1, 2])]);
    }

    #[test]
    fn bipartite() {
        assert!(is_bipartite(&Graph::cycle(4).unwrap()));
        assert!(!is_bipartite(&Graph::cycle(3).unwrap()));
        assert!(is_bipartite(&Graph::new(2, &[(0, 1)]).unwrap()));
    }
}

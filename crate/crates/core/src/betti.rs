//! Multigraded Betti numbers of monomial ideals through upper-Koszul
//! complexes, and the invariants read off a Betti table.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology_small_model, FieldSpec};
use crate::monomial::{Monomial, MonomialIdeal};

/// Upper bound on the number of lcm-lattice degrees examined per ideal.
pub const LATTICE_CAP: usize = 1 << 20;

/// `K^b(I)`: the sets `W` of variables with `x^{b - τ(W)} ∈ I`.
///
/// Void when `x^b ∉ I`.
pub fn upper_koszul(ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
    let n = ideal.arity();
    if b.arity() != n {
        return Err(Error::ArityMismatch { expected: n, found: b.arity() });
    }
    // W is a face iff W ⊆ {i : b_i > g_i} for some generator g dividing x^b.
    let faces = ideal
        .gens()
        .iter()
        .filter(|g| g.divides(b))
        .map(|g| Face::from_vertices((0..n).filter(|&i| b.exps()[i] > g.exps()[i])))
        .collect();
    SimplicialComplex::from_faces(n, faces)
}

/// lcms of all nonempty subsets of the generators, deduplicated.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut points: Vec<Monomial> = Vec::new();
    for g in ideal.gens() {
        let mut fresh = vec![g.clone()];
        fresh.extend(points.iter().map(|p| p.lcm(g)));
        for m in fresh {
            if seen.insert(m.exps().to_vec()) {
                points.push(m);
                if points.len() > LATTICE_CAP {
                    return Err(Error::ResourceLimit(format!(
                        "lcm lattice has more than {LATTICE_CAP} points"
                    )));
                }
            }
        }
    }
    points.sort_by(|a, b| a.graded_cmp(b));
    Ok(points)
}

/// Nonzero multigraded Betti numbers `β_{i,b}(I)` of an ideal.
#[derive(Clone, PartialEq, Eq)]
pub struct BettiTable {
    n: usize,
    entries: BTreeMap<(usize, Vec<u32>), u64>,
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.entries.iter()).finish()
    }
}

impl BettiTable {
    pub fn from_entries(n: usize, entries: impl IntoIterator<Item = (usize, Vec<u32>, u64)>) -> Self {
        let entries = entries.into_iter().filter(|e| e.2 > 0).map(|(i, b, v)| ((i, b), v)).collect();
        BettiTable { n, entries }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    /// `(i, b, β_{i,b})`, ordered by `i` then degree.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &[u32], u64)> + '_ {
        self.entries.iter().map(|((i, b), v)| (*i, b.as_slice(), *v))
    }

    pub fn get(&self, i: usize, b: &[u32]) -> u64 {
        self.entries.get(&(i, b.to_vec())).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `β_{i,j} = Σ_{|b| = j} β_{i,b}`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), u64> {
        let mut out = BTreeMap::new();
        for ((i, b), v) in &self.entries {
            let j = b.iter().map(|&e| e as u64).sum();
            *out.entry((*i, j)).or_insert(0) += v;
        }
        out
    }

    /// Total Betti numbers `β_i`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for ((i, _), v) in &self.entries {
            if out.len() <= *i {
                out.resize(i + 1, 0);
            }
            out[*i] += v;
        }
        out
    }

    /// Projective dimension of the ideal.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// Castelnuovo–Mumford regularity of the ideal, `max (j - i)`.
    pub fn reg(&self) -> Option<i64> {
        self.graded().keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// Rescales every degree by the weights: the table of `(I, w)` predicted
    /// from that of `I`.
    pub fn reweighted(&self, w: &crate::weighted::WeightFunction) -> Result<BettiTable> {
        let mut entries = BTreeMap::new();
        for ((i, b), v) in &self.entries {
            let wb = w.apply(&Monomial::new(b.clone()))?;
            entries.insert((*i, wb.exps().to_vec()), *v);
        }
        Ok(BettiTable { n: self.n, entries })
    }

    /// Macaulay-style graded table: row `j - i`, column `i`, for `R/I`.
    pub fn render(&self) -> String {
        let graded = self.graded();
        let pd = self.pd().unwrap_or(0) + 1;
        let rows: BTreeSet<i64> = graded.keys().map(|&(i, j)| j as i64 - i as i64 - 1).collect();
        let mut out = String::new();
        let header: Vec<String> = (0..=pd).map(|i| format!("{i:>6}")).collect();
        let totals = self.totals();
        let total_row: Vec<String> = std::iter::once("1".to_string())
            .chain(totals.iter().map(|t| t.to_string()))
            .map(|s| format!("{s:>6}"))
            .collect();
        out.push_str(&format!("{:>6}:{}\n", "", header.join("")));
        out.push_str(&format!("{:>6}:{}\n", "total", total_row.join("")));
        let mut all_rows: BTreeSet<i64> = rows;
        all_rows.insert(0);
        for r in all_rows {
            let mut line = format!("{r:>6}:");
            for i in 0..=pd {
                let v = if i == 0 {
                    if r == 0 {
                        1
                    } else {
                        0
                    }
                } else {
                    let j = r + i as i64;
                    if j < 0 {
                        0
                    } else {
                        graded.get(&(i - 1, j as u64)).copied().unwrap_or(0)
                    }
                };
                line.push_str(&if v == 0 { format!("{:>6}", "-") } else { format!("{v:>6}") });
            }
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

/// `β_{i,b}(I) = dim H̃_{i-1}(K^b(I); k)` over the lcm lattice of the
/// generators. Degrees outside the lattice carry no Betti numbers.
pub fn multigraded_betti(ideal: &MonomialIdeal, k: FieldSpec) -> Result<BettiTable> {
    if !ideal.is_proper_nonzero() {
        return Err(Error::DegenerateIdeal);
    }
    let lattice = lcm_lattice(ideal)?;
    let per_degree: Vec<Result<Vec<(usize, Vec<u32>, u64)>>> = lattice
        .par_iter()
        .map(|b| {
            let kb = upper_koszul(ideal, b)?;
            if kb.is_void() {
                return Ok(Vec::new());
            }
            let dims = reduced_homology_small_model(&kb, k)?;
            Ok(dims
                .into_iter()
                .enumerate()
                .filter(|(_, d)| *d > 0)
                .map(|(i, d)| (i, b.exps().to_vec(), d))
                .collect())
        })
        .collect();
    let mut entries = Vec::new();
    for r in per_degree {
        entries.extend(r?);
    }
    Ok(BettiTable::from_entries(ideal.arity(), entries))
}

/// Homological invariants of `R/I` derived from the Betti table of `I` and
/// the minimal primes of `I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingInvariants {
    /// `pd(I)`; `pd(R/I) = pd(I) + 1`.
    pub pd_ideal: usize,
    pub reg_ideal: i64,
    /// `depth(R/I) = n - pd(R/I)` by Auslander–Buchsbaum.
    pub depth: usize,
    pub height: usize,
    /// Krull dimension `n - height`.
    pub dim: usize,
    pub cohen_macaulay: bool,
}

pub fn ring_invariants(ideal: &MonomialIdeal, k: FieldSpec) -> Result<RingInvariants> {
    let table = multigraded_betti(ideal, k)?;
    invariants_from_table(ideal, &table)
}

pub fn invariants_from_table(ideal: &MonomialIdeal, table: &BettiTable) -> Result<RingInvariants> {
    let n = ideal.arity();
    let pd_ideal = table.pd().ok_or(Error::DegenerateIdeal)?;
    let reg_ideal = table.reg().ok_or(Error::DegenerateIdeal)?;
    let depth = n - (pd_ideal + 1);
    let height = crate::decomposition::height(ideal)?;
    let dim = n - height;
    Ok(RingInvariants { pd_ideal, reg_ideal, depth, height, dim, cohen_macaulay: depth == dim })
}

pub fn pd(ideal: &MonomialIdeal, k: FieldSpec) -> Result<usize> {
    multigraded_betti(ideal, k)?.pd().ok_or(Error::DegenerateIdeal)
}

pub fn reg(ideal: &MonomialIdeal, k: FieldSpec) -> Result<i64> {
    multigraded_betti(ideal, k)?.reg().ok_or(Error::DegenerateIdeal)
}

pub fn depth(ideal: &MonomialIdeal, k: FieldSpec) -> Result<usize> {
    Ok(ideal.arity() - (pd(ideal, k)? + 1))
}

pub fn is_cm_ring(ideal: &MonomialIdeal, k: FieldSpec) -> Result<bool> {
    Ok(ring_invariants(ideal, k)?.cohen_macaulay)
}

/// `Hilb(R/I, t) = numerator(t) / (1 - t)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    pub n: usize,
    /// Coefficient of `t^d` at index `d`, trailing zeros trimmed.
    pub numerator: Vec<i64>,
}

impl HilbertSeries {
    fn new(n: usize, mut numerator: Vec<i64>) -> Self {
        while numerator.last() == Some(&0) {
            numerator.pop();
        }
        HilbertSeries { n, numerator }
    }

    /// Numerator from an independent route: inclusion–exclusion over all
    /// generator subsets, `Σ_S (-1)^{|S|} t^{deg lcm(S)}`.
    pub fn by_inclusion_exclusion(ideal: &MonomialIdeal) -> Result<Self> {
        let gens = ideal.gens();
        if gens.len() > 20 {
            return Err(Error::ResourceLimit("inclusion-exclusion over more than 20 generators".into()));
        }
        let mut num: BTreeMap<u64, i64> = BTreeMap::new();
        for mask in 0u32..(1 << gens.len()) {
            let l = (0..gens.len())
                .filter(|i| mask & (1 << i) != 0)
                .fold(Monomial::one(ideal.arity()), |acc, i| acc.lcm(&gens[i]));
            let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
            *num.entry(l.degree()).or_insert(0) += sign;
        }
        Ok(Self::from_map(ideal.arity(), &num))
    }

    fn from_map(n: usize, terms: &BTreeMap<u64, i64>) -> Self {
        let top = terms.keys().max().copied().unwrap_or(0) as usize;
        let mut v = vec![0; top + 1];
        for (&d, &c) in terms {
            v[d as usize] += c;
        }
        Self::new(n, v)
    }

    /// Numerator multiplied by `(1 - t)^e`.
    pub fn numerator_times_one_minus_t(&self, e: u64) -> Vec<i64> {
        let mut p = self.numerator.clone();
        for _ in 0..e {
            let mut q = vec![0; p.len() + 1];
            for (i, &c) in p.iter().enumerate() {
                q[i] += c;
                q[i + 1] -= c;
            }
            p = q;
        }
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }
}

/// Hilbert series of `R/I` from the Betti table:
/// `1 + Σ_i (-1)^{i+1} Σ_b β_{i,b}(I) t^{|b|}`.
pub fn hilbert_series(ideal: &MonomialIdeal) -> Result<HilbertSeries> {
    let n = ideal.arity();
    if ideal.is_zero() {
        return Ok(HilbertSeries::new(n, vec![1]));
    }
    if ideal.is_unit() {
        return Ok(HilbertSeries::new(n, vec![]));
    }
    let table = multigraded_betti(ideal, FieldSpec::Rational)?;
    let mut terms = BTreeMap::new();
    terms.insert(0u64, 1i64);
    for ((i, j), v) in table.graded() {
        let sign = if i % 2 == 0 { -1 } else { 1 };
        *terms.entry(j).or_insert(0) += sign * v as i64;
    }
    Ok(HilbertSeries::from_map(n, &terms))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(n, &gens.iter().map(|g| g.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn triangle() -> MonomialIdeal {
        ideal(3, &[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    #[test]
    fn upper_koszul_examples() {
        let k = upper_koszul(&ideal(1, &[&[1]]), &m(&[1])).unwrap();
        assert!(k.is_irrelevant());
        let k = upper_koszul(&ideal(2, &[&[1, 1]]), &m(&[1, 1])).unwrap();
        assert!(k.is_irrelevant());
        let k = upper_koszul(&ideal(3, &[&[1, 1, 0], &[0, 1, 1]]), &m(&[1, 1, 1])).unwrap();
        assert_eq!(k.facet_lists(), vec![vec![0], vec![2]]);
        assert!(upper_koszul(&ideal(2, &[&[1, 1]]), &m(&[1, 0])).unwrap().is_void());
    }

    #[test]
    fn principal_ideal() {
        let t = multigraded_betti(&ideal(3, &[&[1, 1, 1]]), FieldSpec::Rational).unwrap();
        assert_eq!(t.entries().collect::<Vec<_>>(), vec![(0, &[1u32, 1, 1][..], 1)]);
        assert_eq!(t.pd(), Some(0));
        assert_eq!(t.reg(), Some(3));
    }

    #[test]
    fn triangle_edge_ideal() {
        let t = multigraded_betti(&triangle(), FieldSpec::Rational).unwrap();
        assert_eq!(t.totals(), vec![3, 2]);
        assert_eq!(t.get(1, &[1, 1, 1]), 2);
        let inv = invariants_from_table(&triangle(), &t).unwrap();
        assert_eq!(inv.pd_ideal + 1, 2);
        assert_eq!(inv.depth, 1);
        assert_eq!(inv.dim, 1);
        assert!(inv.cohen_macaulay);
    }

    #[test]
    fn weighted_triangle_rescales_degrees() {
        let w = crate::weighted::WeightFunction::new(vec![2, 3, 4]).unwrap();
        let t = multigraded_betti(&triangle(), FieldSpec::Rational).unwrap();
        let tw = multigraded_betti(&triangle().weight(&w).unwrap(), FieldSpec::Rational).unwrap();
        assert_eq!(tw, t.reweighted(&w).unwrap());
        assert_eq!(tw.get(1, &[2, 3, 4]), 2);
    }

    #[test]
    fn degenerate_ideals_rejected() {
        assert_eq!(multigraded_betti(&MonomialIdeal::zero(2), FieldSpec::Rational), Err(Error::DegenerateIdeal));
        assert_eq!(multigraded_betti(&MonomialIdeal::unit(2), FieldSpec::Rational), Err(Error::DegenerateIdeal));
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_series(&MonomialIdeal::zero(3)).unwrap().numerator, vec![1]);
        assert_eq!(hilbert_series(&ideal(1, &[&[1]])).unwrap().numerator, vec![1, -1]);
        let h = hilbert_series(&triangle()).unwrap();
        assert_eq!(h.numerator, vec![1, 0, -3, 2]);
        assert_eq!(h, HilbertSeries::by_inclusion_exclusion(&triangle()).unwrap());
    }

    #[test]
    fn multiplying_by_one_minus_t() {
        let h = HilbertSeries::new(1, vec![1]);
        assert_eq!(h.numerator_times_one_minus_t(2), vec![1, -2, 1]);
    }

    #[test]
    fn render_has_total_row() {
        let t = multigraded_betti(&triangle(), FieldSpec::Rational).unwrap();
        let s = t.render();
        assert!(s.contains("total"));
        assert!(s.lines().count() >= 3);
    }
}

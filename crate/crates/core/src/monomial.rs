//! Monomials and monomial ideals in `k[x_1, ..., x_n]`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::weighted::WeightFunction;
use crate::wreath::WreathVertexMap;

/// An exponent vector `b`, standing for `x^b`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        Self::pure_power(n, i, 1)
    }

    pub fn pure_power(n: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = e;
        Monomial(v)
    }

    /// Squarefree monomial over the variables in `vars`.
    pub fn squarefree(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut v = vec![0; n];
        for i in vars {
            v[i] = 1;
        }
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// `x^max(b - c, 0)`, the generator of `(x^b) : x^c`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a.saturating_sub(*b)).collect())
    }

    /// Indices with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    /// `Some((i, e))` when this is `x_i^e` with `e > 0`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Graded order: total degree, then lexicographic with `x_1` largest.
    pub fn graded_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| other.0.cmp(&self.0))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Monomial {
    /// Text form `x1^2*x3`, with `1` for the unit monomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            match e {
                1 => write!(f, "x{}", i + 1)?,
                _ => write!(f, "x{}^{}", i + 1, e)?,
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A monomial ideal held by its minimal generators, sorted in graded order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn minimal_antichain(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.graded_cmp(b));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    // A divisor has degree at most that of its multiple, so earlier entries
    // are the only candidates.
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept
}

impl MonomialIdeal {
    /// Reduces `gens` to the minimal generating set of the ideal they span.
    pub fn minimalize(n: usize, gens: Vec<Monomial>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.arity() != n) {
            return Err(Error::ArityMismatch { expected: n, found: g.arity() });
        }
        Ok(MonomialIdeal { n, gens: minimal_antichain(gens) })
    }

    pub fn from_exponents(n: usize, gens: &[Vec<u32>]) -> Result<Self> {
        Self::minimalize(n, gens.iter().cloned().map(Monomial).collect())
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal { n, gens: vec![Monomial::one(n)] }
    }

    /// `(x_i : i ∈ vars)`.
    pub fn prime(n: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let gens = vars.into_iter().map(|i| Monomial::var(n, i)).collect();
        MonomialIdeal { n, gens: minimal_antichain(gens) }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_one())
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.is_squarefree())
    }

    /// True when every generator is a pure power.
    pub fn is_pure_power_ideal(&self) -> bool {
        self.gens.iter().all(|g| g.as_pure_power().is_some())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subideal(&self, other: &MonomialIdeal) -> bool {
        self.gens.iter().all(|g| other.contains(g))
    }

    /// lcm of all generators; `1` for the zero ideal.
    pub fn lcm_of_gens(&self) -> Monomial {
        self.gens.iter().fold(Monomial::one(self.n), |acc, g| acc.lcm(g))
    }

    /// Variables dividing some generator.
    pub fn support(&self) -> Vec<usize> {
        self.lcm_of_gens().support()
    }

    fn check_arity(&self, other: usize) -> Result<()> {
        if self.n != other {
            Err(Error::ArityMismatch { expected: self.n, found: other })
        } else {
            Ok(())
        }
    }

    /// `(I, w)`: every generator `x^b` becomes `x^{w(b)}`.
    ///
    /// `b | b'` iff `w(b) | w(b')`, so the image is already minimal.
    pub fn weight(&self, w: &WeightFunction) -> Result<Self> {
        self.check_arity(w.len())?;
        let gens = self
            .gens
            .iter()
            .map(|g| {
                g.0.iter()
                    .zip(w.values())
                    .map(|(&e, &wi)| e.checked_mul(wi).ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()
                    .map(Monomial)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonomialIdeal { n: self.n, gens: minimal_antichain(gens) })
    }

    /// Polarization into `k[x_{i,j} : j ≤ p_i]`, `p_i` the largest power of
    /// `x_i` among the generators. Copy `j` of `x_i` stands for the `j`-th
    /// factor of `x_i^{a_i}`.
    pub fn polarize(&self) -> Result<(Self, WreathVertexMap)> {
        let maxes = self.lcm_of_gens();
        let map = WreathVertexMap::new(maxes.exps().iter().map(|&e| e as usize).collect());
        let n = map.total();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                Monomial::squarefree(
                    n,
                    g.0.iter().enumerate().flat_map(|(i, &e)| (0..e as usize).map(move |j| (i, j))).map(|(i, j)| map.copy(i, j)),
                )
            })
            .collect();
        Ok((MonomialIdeal { n, gens: minimal_antichain(gens) }, map))
    }

    /// Moves a squarefree ideal written in the copy layout `from` into the
    /// larger layout `to`, keeping copy indices.
    pub fn relayout(&self, from: &WreathVertexMap, to: &WreathVertexMap) -> Result<Self> {
        self.check_arity(from.total())?;
        if from.original_n() != to.original_n() {
            return Err(Error::ArityMismatch { expected: to.original_n(), found: from.original_n() });
        }
        let owners = from.owners();
        let mut target = vec![0; from.total()];
        for (id, &i) in owners.iter().enumerate() {
            let j = id - from.offset(i);
            if j >= to.counts()[i] {
                return Err(Error::ArityMismatch { expected: to.counts()[i], found: j + 1 });
            }
            target[id] = to.copy(i, j);
        }
        let n = to.total();
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut e = vec![0; n];
                for (id, &x) in g.0.iter().enumerate() {
                    e[target[id]] = x;
                }
                Monomial(e)
            })
            .collect();
        Ok(MonomialIdeal { n, gens: minimal_antichain(gens) })
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_arity(other.n)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal { n: self.n, gens: minimal_antichain(gens) })
    }

    /// `I ∩ J` via pairwise lcms of generators.
    pub fn intersect(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_arity(other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.lcm(h));
            }
        }
        Ok(MonomialIdeal { n: self.n, gens: minimal_antichain(gens) })
    }

    /// `I : m`.
    pub fn colon(&self, m: &Monomial) -> Result<Self> {
        self.check_arity(m.arity())?;
        let gens = self.gens.iter().map(|g| g.colon(m)).collect();
        Ok(MonomialIdeal { n: self.n, gens: minimal_antichain(gens) })
    }

    /// `I : m^∞`.
    pub fn saturate(&self, m: &Monomial) -> Result<Self> {
        let mut cur = self.colon(m)?;
        loop {
            let next = cur.colon(m)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `I^s`.
    pub fn power(&self, s: i64) -> Result<Self> {
        if s < 1 {
            return Err(Error::InvalidExponent(s));
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<Self> {
        self.check_arity(other.n)?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for g in &self.gens {
            for h in &other.gens {
                gens.push(g.mul(h)?);
            }
        }
        Ok(MonomialIdeal { n: self.n, gens: minimal_antichain(gens) })
    }

    /// Generators as exponent vectors.
    pub fn exponent_lists(&self) -> Vec<Vec<u32>> {
        self.gens.iter().map(|g| g.0.clone()).collect()
    }
}

/// A simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Parse(format!("loop at vertex {a}")));
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        out.dedup();
        Ok(Graph { n, edges: out })
    }

    /// The cycle `C_n`.
    pub fn cycle(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `I(G)`, or `I(G, w) = (x_i^{w_i} x_j^{w_j})` when weights are given.
    pub fn edge_ideal(&self, w: Option<&WeightFunction>) -> Result<MonomialIdeal> {
        if let Some(w) = w {
            if w.len() != self.n {
                return Err(Error::ArityMismatch { expected: self.n, found: w.len() });
            }
        }
        let weight = |i: usize| w.map_or(1, |w| w.values()[i]);
        let gens = self
            .edges
            .iter()
            .map(|&(a, b)| {
                let mut e = vec![0; self.n];
                e[a] = weight(a);
                e[b] = weight(b);
                Monomial(e)
            })
            .collect();
        MonomialIdeal::minimalize(self.n, gens)
    }
}

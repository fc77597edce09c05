//! Weighted simplicial complexes and their Stanley–Reisner ideals.

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal};
use crate::wreath::{mixed_wreath, WreathVertexMap};

/// Positive integer weight per vertex (or variable).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightFunction(Vec<u32>);

impl WeightFunction {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        if let Some((index, &w)) = values.iter().enumerate().find(|(_, &w)| w == 0) {
            return Err(Error::InvalidWeight { index, weight: w as u64 });
        }
        Ok(WeightFunction(values))
    }

    pub fn ones(n: usize) -> Self {
        WeightFunction(vec![1; n])
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `w(b) = (w_1 b_1, ..., w_n b_n)`.
    pub fn apply(&self, b: &Monomial) -> Result<Monomial> {
        if b.arity() != self.len() {
            return Err(Error::ArityMismatch { expected: self.len(), found: b.arity() });
        }
        b.exps()
            .iter()
            .zip(&self.0)
            .map(|(&e, &w)| e.checked_mul(w).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial::new)
    }

    /// `Σ w_i - n`.
    pub fn excess(&self) -> u64 {
        self.0.iter().map(|&w| w as u64 - 1).sum()
    }

    /// Wreath dimensions `w_i - 1`.
    pub fn wreath_dims(&self) -> Vec<usize> {
        self.0.iter().map(|&w| w as usize - 1).collect()
    }
}

/// A complex together with a weight on each ambient vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedComplex {
    complex: SimplicialComplex,
    weights: WeightFunction,
}

impl WeightedComplex {
    pub fn new(complex: SimplicialComplex, weights: WeightFunction) -> Result<Self> {
        if weights.len() != complex.n() {
            return Err(Error::ArityMismatch { expected: complex.n(), found: weights.len() });
        }
        Ok(WeightedComplex { complex, weights })
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn weights(&self) -> &WeightFunction {
        &self.weights
    }
}

fn face_monomial(n: usize, f: Face, weights: Option<&WeightFunction>) -> Monomial {
    let mut e = vec![0; n];
    for i in f.iter() {
        e[i] = weights.map_or(1, |w| w.values()[i]);
    }
    Monomial::new(e)
}

/// Squarefree ideal generated by the minimal non-faces.
pub fn sr_ideal(c: &SimplicialComplex) -> Result<MonomialIdeal> {
    let gens = c.minimal_nonfaces()?.into_iter().map(|f| face_monomial(c.n(), f, None)).collect();
    MonomialIdeal::minimalize(c.n(), gens)
}

/// Inverse of [`sr_ideal`] on proper squarefree ideals.
pub fn complex_from_squarefree(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    if !ideal.is_squarefree() {
        return Err(Error::NotSquarefree);
    }
    if ideal.is_unit() {
        return Err(Error::DegenerateIdeal);
    }
    let nonfaces: Vec<Face> = ideal.gens().iter().map(|g| Face::from_vertices(g.support())).collect();
    SimplicialComplex::from_minimal_nonfaces(ideal.arity(), &nonfaces)
}

/// `I_(Δ,w)`, generated by `∏_{i∈F} x_i^{w_i}` over minimal non-faces `F`.
pub fn sr_ideal_weighted(wc: &WeightedComplex) -> Result<MonomialIdeal> {
    let c = wc.complex();
    let gens = c
        .minimal_nonfaces()?
        .into_iter()
        .map(|f| face_monomial(c.n(), f, Some(wc.weights())))
        .collect();
    MonomialIdeal::minimalize(c.n(), gens)
}

/// Polarization of a weighted complex: the mixed wreath product with
/// `d_i = w_i - 1`. Copy `j` of vertex `i` plays the variable `x_{i,j+1}`.
pub fn polarize(wc: &WeightedComplex) -> Result<(SimplicialComplex, WreathVertexMap)> {
    mixed_wreath(wc.complex(), &wc.weights().wreath_dims())
}

/// The minimal non-faces of the polarization predicted from those of `Δ`:
/// every vertex of a non-face is blown up into all of its copies.
pub fn blown_up_nonfaces(wc: &WeightedComplex) -> Result<Vec<Face>> {
    let map = WreathVertexMap::new(wc.weights().values().iter().map(|&w| w as usize).collect());
    let mut out: Vec<Face> = wc
        .complex()
        .minimal_nonfaces()?
        .into_iter()
        .map(|f| f.iter().fold(Face::EMPTY, |acc, i| acc.union(Face::from_vertices(map.copies(i)))))
        .collect();
    out.sort();
    Ok(out)
}

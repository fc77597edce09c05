//! Reduced simplicial homology over `Q` or `F_p`.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::{maximal_faces, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::linalg::{self, SparseColumn};

/// Coefficient field: the rationals or a prime field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[derive(Default)]
pub enum FieldSpec {
    #[default]
    Rational,
    Prime(u64),
}

impl FieldSpec {
    /// `0` selects the rationals.
    pub fn from_characteristic(p: u64) -> Result<Self> {
        match p {
            0 => Ok(FieldSpec::Rational),
            p if (2..(1 << 31)).contains(&p) && is_prime(p) => Ok(FieldSpec::Prime(p)),
            p => Err(Error::NotPrime(p)),
        }
    }

    pub fn characteristic(self) -> u64 {
        match self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}


impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => write!(f, "QQ"),
            FieldSpec::Prime(p) => write!(f, "ZZ/{p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `dim H̃_i(c; k)` for `i = -1, 0, ..., dim c`; entry `0` is `H̃_{-1}`.
///
/// Ranks come from the boundary matrices of the augmented chain complex,
/// reduced from the top dimension down so that columns already known to be
/// pivots of the next boundary map are skipped. The result is checked
/// against the reduced Euler characteristic of the f-vector.
pub fn reduced_homology_dims(c: &SimplicialComplex, k: FieldSpec) -> Result<Vec<u64>> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let levels = c.faces_by_size();
    let top = levels.len() - 1;
    let index: Vec<HashMap<Face, usize>> =
        levels.iter().map(|l| l.iter().enumerate().map(|(i, f)| (*f, i)).collect()).collect();

    // rank[s] = rank of the boundary map from size-s faces to size-(s-1) faces
    let mut rank = vec![0usize; top + 2];
    let mut cleared: Vec<bool> = Vec::new();
    for s in (1..=top).rev() {
        let skip = std::mem::take(&mut cleared);
        let columns: Vec<SparseColumn> = levels[s]
            .iter()
            .enumerate()
            .filter(|(j, _)| skip.get(*j).is_none_or(|&x| !x))
            .map(|(_, f)| boundary_column(*f, &index[s - 1]))
            .collect();
        let red = linalg::reduce(&columns, k);
        rank[s] = red.rank;
        cleared = vec![false; levels[s - 1].len()];
        for r in red.pivot_rows {
            cleared[r] = true;
        }
    }
    let dims: Vec<u64> =
        (0..=top).map(|s| (levels[s].len() - rank[s] - rank[s + 1]) as u64).collect();

    let euler_from_homology: i64 =
        dims.iter().enumerate().map(|(s, &d)| if s % 2 == 1 { d as i64 } else { -(d as i64) }).sum();
    let euler_from_faces: i64 = levels
        .iter()
        .enumerate()
        .map(|(s, l)| if s % 2 == 1 { l.len() as i64 } else { -(l.len() as i64) })
        .sum();
    if euler_from_homology != euler_from_faces {
        return Err(Error::Internal(format!(
            "Euler-Poincare mismatch: homology gives {euler_from_homology}, faces give {euler_from_faces}"
        )));
    }
    Ok(dims)
}

fn boundary_column(f: Face, lower: &HashMap<Face, usize>) -> SparseColumn {
    let mut col: SparseColumn = f
        .iter()
        .enumerate()
        .map(|(pos, v)| (lower[&f.without(v)], if pos % 2 == 0 { 1 } else { -1 }))
        .collect();
    col.sort_unstable_by_key(|e| e.0);
    col
}

/// Nerve of the facet cover: one vertex per facet, and a set of facets is a
/// face when the facets share a vertex. Homotopy equivalent to `c` when `c`
/// has no empty facet.
pub fn facet_nerve(c: &SimplicialComplex) -> Result<SimplicialComplex> {
    let facets = c.facets();
    let mut faces = Vec::new();
    for v in c.vertex_set().iter() {
        faces.push(Face::from_vertices(facets.iter().enumerate().filter(|(_, f)| f.contains(v)).map(|(i, _)| i)));
    }
    SimplicialComplex::from_faces(facets.len(), maximal_faces(faces))
}

/// Same result as [`reduced_homology_dims`], computed on a smaller homotopy
/// equivalent model when one is available (cones and simplices are acyclic;
/// otherwise the facet nerve is used while it has fewer vertices).
pub fn reduced_homology_small_model(c: &SimplicialComplex, k: FieldSpec) -> Result<Vec<u64>> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let len = (c.dim() + 2) as usize;
    if c.is_irrelevant() {
        return Ok(vec![1]);
    }
    let mut model = c.compress();
    loop {
        if is_cone(&model) {
            return Ok(vec![0; len]);
        }
        if model.facets().len() > crate::complex::MAX_VERTICES {
            break;
        }
        let nerve = facet_nerve(&model)?;
        if nerve.n() < model.n() {
            model = nerve.compress();
        } else {
            break;
        }
    }
    let dims = reduced_homology_dims(&model, k)?;
    let mut out = vec![0; len];
    for (i, d) in dims.into_iter().enumerate() {
        if d == 0 {
            continue;
        }
        if i >= len {
            return Err(Error::Internal("homology above the dimension of the complex".into()));
        }
        out[i] = d;
    }
    Ok(out)
}

/// Some vertex lies in every facet (simplices included).
fn is_cone(c: &SimplicialComplex) -> bool {
    let common = c.facets().iter().fold(Face::from_mask(u64::MAX), |acc, f| acc.intersection(*f));
    !common.is_empty()
}

//! One-point suspensions, reduced joins and mixed wreath products.
//!
//! Every construction returns a [`WreathVertexMap`] describing where the copies
//! of each original vertex landed. Copies of vertex `i` occupy the contiguous
//! ids `offset(i) .. offset(i) + count(i)`, in copy order `(i,0), (i,1), ...`.

use serde::{Deserialize, Serialize};

use crate::complex::{Face, SimplicialComplex, MAX_VERTICES};
use crate::error::{Error, Result};

/// Copy counts per original vertex, laid out contiguously.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WreathVertexMap {
    counts: Vec<usize>,
}

impl WreathVertexMap {
    pub fn new(counts: Vec<usize>) -> Self {
        WreathVertexMap { counts }
    }

    /// One copy of each of `n` vertices.
    pub fn identity(n: usize) -> Self {
        WreathVertexMap { counts: vec![1; n] }
    }

    /// Layout with `d_i + 1` copies of vertex `i`.
    pub fn from_dims(dims: &[usize]) -> Self {
        WreathVertexMap { counts: dims.iter().map(|d| d + 1).collect() }
    }

    pub fn original_n(&self) -> usize {
        self.counts.len()
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn offset(&self, i: usize) -> usize {
        self.counts[..i].iter().sum()
    }

    /// Flattened id of copy `j` of vertex `i`.
    pub fn copy(&self, i: usize, j: usize) -> usize {
        debug_assert!(j < self.counts[i]);
        self.offset(i) + j
    }

    pub fn copies(&self, i: usize) -> std::ops::Range<usize> {
        let o = self.offset(i);
        o..o + self.counts[i]
    }

    /// Original vertex owning each flattened id.
    pub fn owners(&self) -> Vec<usize> {
        self.counts.iter().enumerate().flat_map(|(i, &c)| std::iter::repeat_n(i, c)).collect()
    }

    /// Map of a construction applied after this one: `next` is indexed by the
    /// ids this map produces.
    pub fn then(&self, next: &WreathVertexMap) -> Result<WreathVertexMap> {
        if next.original_n() != self.total() {
            return Err(Error::ArityMismatch { expected: self.total(), found: next.original_n() });
        }
        let counts = (0..self.original_n())
            .map(|i| self.copies(i).map(|id| next.counts[id]).sum())
            .collect();
        Ok(WreathVertexMap { counts })
    }
}

/// The one-point suspension `Δ(v)`: `v` is replaced by two copies.
pub fn one_point_suspension(
    c: &SimplicialComplex,
    v: usize,
) -> Result<(SimplicialComplex, WreathVertexMap)> {
    if !c.is_vertex(v) {
        return Err(Error::NotAVertex(v));
    }
    let mut counts = vec![1; c.n()];
    counts[v] = 2;
    let map = WreathVertexMap::new(counts);
    let n = map.total();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let relabel = shifted_ids(&map);
    let (v1, v2) = (map.copy(v, 0), map.copy(v, 1));
    let mut faces = Vec::new();
    for f in c.facets() {
        let base = Face::from_vertices(f.iter().filter(|&u| u != v).map(|u| relabel[u]));
        if f.contains(v) {
            faces.push(base.with(v1).with(v2));
        } else {
            faces.push(base.with(v1));
            faces.push(base.with(v2));
        }
    }
    Ok((SimplicialComplex::from_faces(n, faces)?, map))
}

/// `∂Δ_d *_v Δ`: vertex `v` is replaced by a full `d`-simplex whose boundary
/// is joined to the rest.
pub fn reduced_join(
    c: &SimplicialComplex,
    v: usize,
    d: i64,
) -> Result<(SimplicialComplex, WreathVertexMap)> {
    if d < 1 {
        return Err(Error::InvalidDimension(d));
    }
    if !c.is_vertex(v) {
        return Err(Error::NotAVertex(v));
    }
    let mut dims = vec![0; c.n()];
    dims[v] = d as usize;
    mixed_wreath(c, &dims)
}

/// The mixed wreath product `∂Δ_(d_1,...,d_n) ≀ Δ`.
///
/// Each facet `F` contributes, for every choice of one omitted copy per
/// vertex outside `F`, the facet holding all copies of the vertices in `F`
/// and the remaining copies of the vertices outside it.
pub fn mixed_wreath(
    c: &SimplicialComplex,
    dims: &[usize],
) -> Result<(SimplicialComplex, WreathVertexMap)> {
    if dims.len() != c.n() {
        return Err(Error::ArityMismatch { expected: c.n(), found: dims.len() });
    }
    let map = WreathVertexMap::from_dims(dims);
    let n = map.total();
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }
    let blocks: Vec<Face> = (0..c.n()).map(|i| Face::from_vertices(map.copies(i))).collect();
    let mut faces = Vec::new();
    for f in c.facets() {
        let mut partial = vec![f.iter().fold(Face::EMPTY, |acc, i| acc.union(blocks[i]))];
        for j in (0..c.n()).filter(|&j| !f.contains(j)) {
            partial = partial
                .into_iter()
                .flat_map(|p| {
                    let block = blocks[j];
                    map.copies(j).map(move |omit| p.union(block.without(omit)))
                })
                .collect();
        }
        faces.extend(partial);
    }
    Ok((SimplicialComplex::from_faces(n, faces)?, map))
}

/// `(f_0, f_top)` of the mixed wreath product from counts on `c` alone.
///
/// `f_top` sums, over the top-dimensional facets of `c`, the product of
/// `d_j + 1` over the vertices `j` outside the facet.
pub fn wreath_f_formula(c: &SimplicialComplex, dims: &[usize]) -> Result<(u64, u64)> {
    if dims.len() != c.n() {
        return Err(Error::ArityMismatch { expected: c.n(), found: dims.len() });
    }
    let fv = c.f_vector()?;
    let f0 = dims.iter().map(|&d| d as u64).sum::<u64>() + fv.counts().first().copied().unwrap_or(0);
    let top = c.dim();
    let f_top = c
        .facets()
        .iter()
        .filter(|f| f.dim() == top)
        .map(|f| {
            (0..c.n())
                .filter(|&j| !f.contains(j))
                .map(|j| dims[j] as u64 + 1)
                .product::<u64>()
        })
        .sum();
    Ok((f0, f_top))
}

/// `relabel[u]` is the id of copy 0 of `u`.
fn shifted_ids(map: &WreathVertexMap) -> Vec<usize> {
    (0..map.original_n()).map(|u| map.offset(u)).collect()
}

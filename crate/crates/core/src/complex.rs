//! Finite abstract simplicial complexes stored by their facets.
//!
//! Vertices are dense ids in `0..n` and a face is a bitmask over them, so the
//! ambient vertex count is capped at [`MAX_VERTICES`]. A complex keeps its
//! facets as a lexicographically sorted antichain; the void complex (no faces
//! at all) and the irrelevant complex `{∅}` are distinct values.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ambient vertex count.
pub const MAX_VERTICES: usize = 63;

/// A set of vertices, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub const fn from_mask(mask: u64) -> Self {
        Face(mask)
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    /// Builds a face from vertex ids, ignoring duplicates.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        Face(vertices.into_iter().fold(0, |m, v| m | (1u64 << v)))
    }

    pub fn singleton(v: usize) -> Self {
        Face(1 << v)
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|F| - 1`; the empty face has dimension -1.
    pub const fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1 << v) != 0
    }

    pub const fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub const fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub const fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub const fn with(self, v: usize) -> Face {
        Face(self.0 | (1 << v))
    }

    pub const fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << v))
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> FaceIter {
        FaceIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Every subset of this face, the empty set included.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut sub = full;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = sub;
            if sub == 0 {
                done = true;
            } else {
                sub = (sub - 1) & full;
            }
            Some(Face(out))
        })
    }
}

pub struct FaceIter(u64);

impl Iterator for FaceIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl Ord for Face {
    /// Lexicographic comparison of the sorted vertex lists.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        loop {
            match (a == 0, b == 0) {
                (true, true) => return Ordering::Equal,
                (true, false) => return Ordering::Less,
                (false, true) => return Ordering::Greater,
                _ => {}
            }
            let (va, vb) = (a.trailing_zeros(), b.trailing_zeros());
            if va != vb {
                return va.cmp(&vb);
            }
            a &= a - 1;
            b &= b - 1;
        }
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Face counts by dimension, `(f_0, f_1, ..., f_d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    /// Reduced Euler characteristic `-1 + f_0 - f_1 + ...`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .fold(-1i64, |acc, (i, &f)| if i % 2 == 0 { acc + f as i64 } else { acc - f as i64 })
    }
}

/// Reduces a list of faces to its inclusion-maximal members, sorted.
pub(crate) fn maximal_faces(mut faces: Vec<Face>) -> Vec<Face> {
    // Larger faces first so each candidate only needs checking against kept ones.
    faces.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort_unstable();
    kept
}

/// A finite abstract simplicial complex on the ambient vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, ", self.n)?;
        f.debug_list().entries(self.facets.iter()).finish()?;
        write!(f, ")")
    }
}

fn check_n(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::TooManyVertices(n))
    } else {
        Ok(())
    }
}

impl SimplicialComplex {
    /// Builds the complex generated by `raw_faces`; input lists may repeat
    /// vertices or contain non-maximal faces.
    pub fn from_facets<F: AsRef<[usize]>>(n: usize, raw_faces: &[F]) -> Result<Self> {
        check_n(n)?;
        let mut faces = Vec::with_capacity(raw_faces.len());
        for raw in raw_faces {
            for &v in raw.as_ref() {
                if v >= n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            faces.push(Face::from_vertices(raw.as_ref().iter().copied()));
        }
        Ok(Self::from_faces_unchecked(n, faces))
    }

    /// Canonicalizes masks that are already known to lie inside `0..n`.
    pub(crate) fn from_faces_unchecked(n: usize, faces: Vec<Face>) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        debug_assert!(faces.iter().all(|f| f.mask() >> n == 0));
        SimplicialComplex { n, facets: maximal_faces(faces) }
    }

    pub fn from_faces(n: usize, faces: Vec<Face>) -> Result<Self> {
        check_n(n)?;
        if let Some(bad) = faces.iter().find(|f| f.mask() >> n != 0) {
            let vertex = bad.iter().find(|&v| v >= n).unwrap_or(n);
            return Err(Error::InvalidVertex { vertex, n });
        }
        Ok(Self::from_faces_unchecked(n, faces))
    }

    /// The complex with no faces at all.
    pub fn void(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SimplicialComplex { n, facets: Vec::new() })
    }

    /// The complex whose only face is the empty set.
    pub fn irrelevant(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(SimplicialComplex { n, facets: vec![Face::EMPTY] })
    }

    /// The full simplex on `d + 1` vertices.
    pub fn full_simplex(d: i64) -> Result<Self> {
        if d < 0 {
            return Err(Error::InvalidDimension(d));
        }
        let n = d as usize + 1;
        check_n(n)?;
        Ok(SimplicialComplex { n, facets: vec![Face::from_vertices(0..n)] })
    }

    /// All proper subsets of a `d`-simplex; `boundary_simplex(0)` is `{∅}`.
    pub fn boundary_simplex(d: i64) -> Result<Self> {
        if d < 0 {
            return Err(Error::InvalidDimension(d));
        }
        let n = d as usize + 1;
        check_n(n)?;
        let all = Face::from_vertices(0..n);
        let faces = (0..n).map(|v| all.without(v)).collect();
        Ok(Self::from_faces_unchecked(n, faces))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets == [Face::EMPTY]
    }

    /// Largest facet dimension; `-1` for `{∅}` and, by convention, for the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.dim()).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    /// True when this complex is a single simplex (including `{∅}`).
    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    /// Union of all facets.
    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn is_vertex(&self, v: usize) -> bool {
        v < self.n && self.vertex_set().contains(v)
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Every face, the empty face included, in no particular order.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            if seen.contains(f) {
                continue;
            }
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        seen.into_iter().collect()
    }

    /// Faces grouped by size: entry `k` holds the sorted faces with `k` vertices.
    pub fn faces_by_size(&self) -> Vec<Vec<Face>> {
        let top = self.facets.iter().map(|f| f.len()).max();
        let Some(top) = top else { return Vec::new() };
        let mut out = vec![Vec::new(); top + 1];
        for f in self.faces() {
            out[f.len()].push(f);
        }
        for level in &mut out {
            level.sort_unstable();
        }
        out
    }

    pub fn f_vector(&self) -> Result<FVector> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let by_size = self.faces_by_size();
        Ok(FVector(by_size.iter().skip(1).map(|l| l.len() as u64).collect()))
    }

    /// Inclusion-minimal subsets of `0..n` that are not faces.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Face>> {
        if self.is_void() {
            return Err(Error::VoidComplex);
        }
        let mut found = BTreeSet::new();
        for g in self.faces() {
            for v in 0..self.n {
                if g.contains(v) {
                    continue;
                }
                let m = g.with(v);
                if !self.contains(m) && m.iter().all(|i| self.contains(m.without(i))) {
                    found.insert(m);
                }
            }
        }
        Ok(found.into_iter().collect())
    }

    /// The complex of all subsets of `0..n` containing no member of `nonfaces`.
    pub fn from_minimal_nonfaces(n: usize, nonfaces: &[Face]) -> Result<Self> {
        check_n(n)?;
        if nonfaces.iter().any(|m| m.is_empty()) {
            return Self::void(n);
        }
        // Grow facets greedily from the full vertex set by removing one vertex
        // of each violated non-face.
        let mut frontier = vec![Face::from_vertices(0..n)];
        let mut done = Vec::new();
        let mut seen = HashSet::new();
        while let Some(f) = frontier.pop() {
            if !seen.insert(f) {
                continue;
            }
            match nonfaces.iter().find(|m| m.is_subset(f)) {
                None => done.push(f),
                Some(m) => {
                    for v in m.iter() {
                        frontier.push(f.without(v));
                    }
                }
            }
        }
        Ok(Self::from_faces_unchecked(n, done))
    }

    /// `{ G ∈ Δ : G ∩ F = ∅, G ∪ F ∈ Δ }`.
    pub fn link_of_face(&self, face: Face) -> Self {
        let faces = self
            .facets
            .iter()
            .filter(|h| face.is_subset(**h))
            .map(|h| h.difference(face))
            .collect();
        Self::from_faces_unchecked(self.n, faces)
    }

    pub fn link(&self, v: usize) -> Result<Self> {
        if !self.is_vertex(v) {
            return Err(Error::NotAVertex(v));
        }
        Ok(self.link_of_face(Face::singleton(v)))
    }

    /// `{ G ∈ Δ : G ∪ {v} ∈ Δ }`, i.e. `{v} * lk(v)`.
    pub fn star(&self, v: usize) -> Result<Self> {
        if !self.is_vertex(v) {
            return Err(Error::NotAVertex(v));
        }
        let faces = self.facets.iter().copied().filter(|h| h.contains(v)).collect();
        Ok(Self::from_faces_unchecked(self.n, faces))
    }

    /// All faces that do not contain `face`. Deleting a non-face is the identity.
    pub fn deletion(&self, face: Face) -> Self {
        let mut faces = Vec::with_capacity(self.facets.len());
        for &h in &self.facets {
            if face.is_subset(h) {
                faces.extend(face.iter().map(|v| h.without(v)));
            } else {
                faces.push(h);
            }
        }
        Self::from_faces_unchecked(self.n, faces)
    }

    pub fn delete_vertex(&self, v: usize) -> Self {
        self.deletion(Face::singleton(v))
    }

    /// Join with `other`, whose vertex ids are shifted up by `self.n()`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        let n = self.n + other.n;
        check_n(n)?;
        let mut faces = Vec::with_capacity(self.facets.len() * other.facets.len());
        for a in &self.facets {
            for b in &other.facets {
                faces.push(Face::from_mask(a.mask() | (b.mask() << self.n)));
            }
        }
        Ok(Self::from_faces_unchecked(n, faces))
    }

    /// Cone with apex `n`, on `n + 1` vertices.
    pub fn cone(&self) -> Result<Self> {
        let point = SimplicialComplex::full_simplex(0)?;
        self.join(&point)
    }

    /// Relabels the vertices in use to `0..k`, keeping their order.
    pub fn compress(&self) -> Self {
        let used: Vec<usize> = self.vertex_set().to_vec();
        let mut index = [usize::MAX; 64];
        for (new, &old) in used.iter().enumerate() {
            index[old] = new;
        }
        let faces = self
            .facets
            .iter()
            .map(|f| Face::from_vertices(f.iter().map(|v| index[v])))
            .collect();
        Self::from_faces_unchecked(used.len(), faces)
    }

    /// Same faces on a larger ambient vertex set.
    pub fn with_ambient(&self, n: usize) -> Result<Self> {
        check_n(n)?;
        if let Some(v) = self.vertex_set().iter().find(|&v| v >= n) {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
        Ok(SimplicialComplex { n, facets: self.facets.clone() })
    }

    /// Applies an injective vertex relabeling `map[old] = new` into `0..n`.
    pub fn relabel(&self, n: usize, map: &[usize]) -> Result<Self> {
        check_n(n)?;
        let mut faces = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            let mut g = Face::EMPTY;
            for v in f.iter() {
                let w = *map.get(v).ok_or(Error::InvalidVertex { vertex: v, n: map.len() })?;
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
                g = g.with(w);
            }
            faces.push(g);
        }
        Ok(Self::from_faces_unchecked(n, faces))
    }

    /// Facets as sorted vertex lists.
    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    fn c(n: usize, faces: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(n, faces).unwrap()
    }

    pub(crate) fn octahedron() -> SimplicialComplex {
        // antipodal pairs {0,3}, {1,4}, {2,5}
        let mut faces = Vec::new();
        for a in [0, 3] {
            for b in [1, 4] {
                for d in [2, 5] {
                    faces.push(vec![a, b, d]);
                }
            }
        }
        SimplicialComplex::from_facets(6, &faces).unwrap()
    }

    /// Brute-force closure: every subset of `0..n` that lies in some facet.
    fn brute_faces(cx: &SimplicialComplex) -> Vec<Face> {
        (0u64..1 << cx.n())
            .map(Face::from_mask)
            .filter(|f| cx.facets().iter().any(|h| f.is_subset(*h)))
            .collect()
    }

    #[test]
    fn from_facets_absorbs_and_sorts() {
        let x = c(3, &[&[0, 1], &[1], &[1, 2]]);
        assert_eq!(x.facet_lists(), vec![vec![0, 1], vec![1, 2]]);
        let two = c(2, &[&[0], &[1]]);
        assert_eq!(two.facet_lists(), vec![vec![0], vec![1]]);
        assert_eq!(c(3, &[&[2, 1, 0]]).facet_lists(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn from_facets_rejects_bad_ids() {
        assert_eq!(
            SimplicialComplex::from_facets(2, &[vec![0, 2]]),
            Err(Error::InvalidVertex { vertex: 2, n: 2 })
        );
        assert!(matches!(
            SimplicialComplex::from_facets(0, &[vec![0]]),
            Err(Error::InvalidVertex { .. })
        ));
        assert_eq!(SimplicialComplex::from_facets::<Vec<usize>>(64, &[]), Err(Error::TooManyVertices(64)));
    }

    #[test]
    fn void_and_irrelevant_differ() {
        let v = SimplicialComplex::void(3).unwrap();
        let i = SimplicialComplex::irrelevant(3).unwrap();
        assert_ne!(v, i);
        assert!(v.is_void() && !i.is_void());
        assert_eq!(v.f_vector(), Err(Error::VoidComplex));
        assert_eq!(i.f_vector().unwrap(), FVector(vec![]));
    }

    #[test]
    fn face_ordering_is_lexicographic() {
        let mut faces = [Face::from_vertices([1, 2]),
            Face::from_vertices([0, 2]),
            Face::from_vertices([0]),
            Face::from_vertices([0, 1, 5]),
            Face::EMPTY];
        faces.sort();
        let lists: Vec<_> = faces.iter().map(|f| f.to_vec()).collect();
        assert_eq!(lists, vec![vec![], vec![0], vec![0, 1, 5], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn f_vectors() {
        assert_eq!(SimplicialComplex::full_simplex(2).unwrap().f_vector().unwrap().0, vec![3, 3, 1]);
        assert_eq!(octahedron().f_vector().unwrap().0, vec![6, 12, 8]);
        assert_eq!(c(2, &[&[0], &[1]]).f_vector().unwrap().0, vec![2]);
    }

    #[test]
    fn octahedron_f_vector_matches_closure() {
        let o = octahedron();
        let faces = brute_faces(&o);
        let mut counts = vec![0u64; 3];
        for f in faces.iter().filter(|f| !f.is_empty()) {
            counts[f.len() - 1] += 1;
        }
        assert_eq!(o.f_vector().unwrap().0, counts);
    }

    #[test]
    fn minimal_nonfaces_examples() {
        let two = c(2, &[&[0], &[1]]);
        assert_eq!(two.minimal_nonfaces().unwrap(), vec![Face::from_vertices([0, 1])]);

        // a=0, b=1, c=2, d=3
        let x = c(4, &[&[0, 1], &[0, 2], &[1, 2], &[3]]);
        let expected: Vec<Face> = vec![
            Face::from_vertices([0, 1, 2]),
            Face::from_vertices([0, 3]),
            Face::from_vertices([1, 3]),
            Face::from_vertices([2, 3]),
        ];
        assert_eq!(x.minimal_nonfaces().unwrap(), expected);

        // brute force over all subsets of 4 vertices
        let brute: Vec<Face> = (0u64..16)
            .map(Face::from_mask)
            .filter(|m| !x.contains(*m) && m.iter().all(|i| x.contains(m.without(i))))
            .collect();
        let mut brute = brute;
        brute.sort();
        assert_eq!(brute, expected);

        assert!(SimplicialComplex::full_simplex(3).unwrap().minimal_nonfaces().unwrap().is_empty());
    }

    #[test]
    fn isolated_ambient_vertex_is_a_nonface() {
        let x = c(3, &[&[0, 1]]);
        assert_eq!(x.minimal_nonfaces().unwrap(), vec![Face::singleton(2)]);
    }

    #[test]
    fn links() {
        let two = c(2, &[&[0], &[1]]);
        assert!(two.link(0).unwrap().is_irrelevant());

        let base = c(3, &[&[0, 1], &[1, 2]]);
        let cone = base.cone().unwrap();
        assert_eq!(cone.link(3).unwrap(), base.with_ambient(4).unwrap());

        let o = octahedron();
        for v in 0..6 {
            let l = o.link(v).unwrap();
            assert_eq!(l.facets().len(), 4);
            assert_eq!(l.f_vector().unwrap().0, vec![4, 4]);
            assert!(l.facets().iter().all(|f| f.len() == 2));
            // every vertex of the link has degree two: a 4-cycle
            for u in l.vertex_set().iter() {
                assert_eq!(l.facets().iter().filter(|f| f.contains(u)).count(), 2);
            }
        }
        assert_eq!(two.link(5), Err(Error::NotAVertex(5)));
        let x = c(3, &[&[0, 1]]);
        assert_eq!(x.link(2), Err(Error::NotAVertex(2)));
    }

    #[test]
    fn stars() {
        let s = SimplicialComplex::full_simplex(3).unwrap();
        assert_eq!(s.star(2).unwrap(), s);
        let two = c(2, &[&[0], &[1]]);
        assert_eq!(two.star(0).unwrap().facet_lists(), vec![vec![0]]);
        let tri = SimplicialComplex::boundary_simplex(2).unwrap();
        assert_eq!(tri.star(0).unwrap().facet_lists(), vec![vec![0, 1], vec![0, 2]]);
    }

    #[test]
    fn deletions() {
        let s = SimplicialComplex::full_simplex(2).unwrap();
        assert_eq!(s.delete_vertex(0).facet_lists(), vec![vec![1, 2]]);
        let x = c(3, &[&[0, 1], &[1, 2]]);
        assert_eq!(x.deletion(Face::from_vertices([0, 2])), x);
        assert_eq!(x.deletion(Face::from_vertices([0, 1])).facet_lists(), vec![vec![0], vec![1, 2]]);
    }

    #[test]
    fn joins() {
        let x = c(3, &[&[0, 1], &[1, 2]]);
        let irr = SimplicialComplex::irrelevant(0).unwrap();
        assert_eq!(x.join(&irr).unwrap(), x);
        let pt = SimplicialComplex::full_simplex(0).unwrap();
        let cone = pt.join(&x).unwrap();
        assert_eq!(cone.dim(), x.dim() + 1);
        let b1 = SimplicialComplex::boundary_simplex(1).unwrap();
        let sq = b1.join(&b1).unwrap();
        assert_eq!(sq.facet_lists(), vec![vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn simplices() {
        assert_eq!(SimplicialComplex::boundary_simplex(1).unwrap().facet_lists(), vec![vec![0], vec![1]]);
        let tri = SimplicialComplex::boundary_simplex(2).unwrap();
        assert_eq!(tri.facet_lists(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert!(SimplicialComplex::boundary_simplex(0).unwrap().is_irrelevant());
        let p = SimplicialComplex::full_simplex(4).unwrap();
        assert_eq!(p.facets().len(), 1);
        assert_eq!(p.dim(), 4);
        assert_eq!(SimplicialComplex::full_simplex(-1), Err(Error::InvalidDimension(-1)));
        assert_eq!(SimplicialComplex::boundary_simplex(-2), Err(Error::InvalidDimension(-2)));
    }

    #[test]
    fn compress_keeps_order() {
        let x = c(6, &[&[1, 4], &[4, 5]]);
        assert_eq!(x.compress().facet_lists(), vec![vec![0, 1], vec![1, 2]]);
    }
}

//! Decision procedures for vertex decomposability, shellability,
//! constructibility and Cohen–Macaulayness, plus a report comparing them on a
//! complex and its mixed wreath products.
//!
//! All searches are exponential; [`CheckerBounds`] caps their size.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::complex::{maximal_faces, Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::homology::{reduced_homology_small_model, FieldSpec};
use crate::wreath::mixed_wreath;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CheckerBounds {
    /// Largest facet count accepted by [`is_shellable`].
    pub shell_facets: usize,
    /// Largest number of placed-facet sets the shelling search may visit.
    pub shell_states: usize,
    /// Largest facet count [`is_constructible_bounded`] will split.
    pub constructible_facets: usize,
    /// Largest number of distinct complexes the vertex-decomposition search may visit.
    pub vd_states: usize,
}

impl Default for CheckerBounds {
    fn default() -> Self {
        CheckerBounds { shell_facets: 12, shell_states: 1 << 20, constructible_facets: 8, vd_states: 1 << 18 }
    }
}

/// Three-valued verdict for searches that may give up.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    True,
    False,
    Unknown,
}

impl Verdict {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }

    pub fn as_bool(self) -> Option<bool> {
        match self {
            Verdict::True => Some(true),
            Verdict::False => Some(false),
            Verdict::Unknown => None,
        }
    }

    fn and(self, other: Verdict) -> Verdict {
        match (self, other) {
            (Verdict::False, _) | (_, Verdict::False) => Verdict::False,
            (Verdict::True, Verdict::True) => Verdict::True,
            _ => Verdict::Unknown,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Unknown => "unknown",
        })
    }
}

fn key(c: &SimplicialComplex) -> Vec<u64> {
    c.compress().facets().iter().map(|f| f.mask()).collect()
}

// ---------------------------------------------------------------------------
// vertex decomposability

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VdResult {
    pub decomposable: bool,
    /// Shedding vertices in the order they are deleted, ending at a simplex.
    pub shedding: Option<Vec<usize>>,
}

/// No facet of `Δ∖v` is a face of `lk(v)`, i.e. no facet `G` of `Δ∖v` has
/// `G ∪ {v} ∈ Δ`.
pub fn is_shedding_vertex(c: &SimplicialComplex, v: usize) -> bool {
    c.is_vertex(v) && !c.delete_vertex(v).facets().iter().any(|g| !g.contains(v) && c.contains(g.with(v)))
}

struct VdSearch {
    memo: HashMap<Vec<u64>, bool>,
    budget: usize,
}

impl VdSearch {
    fn decide(&mut self, c: &SimplicialComplex) -> Result<bool> {
        Ok(self.shed(c)?.is_some())
    }

    /// A shedding vertex `v` of `c` with both `Δ∖v` and `lk(v)` decomposable.
    /// `Some(None)` marks a simplex.
    fn shed(&mut self, c: &SimplicialComplex) -> Result<Option<Option<usize>>> {
        if c.is_simplex() {
            return Ok(Some(None));
        }
        let k = key(c);
        if self.memo.get(&k) == Some(&false) {
            return Ok(None);
        }
        if !self.memo.contains_key(&k)
            && self.memo.len() >= self.budget {
                return Err(Error::ResourceLimit(format!(
                    "vertex decomposition search exceeded {} complexes",
                    self.budget
                )));
            }
        for v in c.vertex_set().iter() {
            if !is_shedding_vertex(c, v) {
                continue;
            }
            if self.decide(&c.link(v)?)? && self.decide(&c.delete_vertex(v))? {
                self.memo.insert(k, true);
                return Ok(Some(Some(v)));
            }
        }
        self.memo.insert(k, false);
        Ok(None)
    }
}

/// Björner–Wachs vertex decomposability (non-pure complexes allowed).
pub fn is_vertex_decomposable(c: &SimplicialComplex, bounds: &CheckerBounds) -> Result<VdResult> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut search = VdSearch { memo: HashMap::new(), budget: bounds.vd_states };
    let mut cur = c.clone();
    let mut order = Vec::new();
    loop {
        match search.shed(&cur)? {
            None => return Ok(VdResult { decomposable: false, shedding: None }),
            Some(None) => return Ok(VdResult { decomposable: true, shedding: Some(order) }),
            Some(Some(v)) => {
                order.push(v);
                cur = cur.delete_vertex(v);
            }
        }
    }
}

/// Replays a shedding sequence: every step must delete a shedding vertex
/// whose link is decomposable, and the sequence must end at a simplex.
pub fn verify_shedding_order(c: &SimplicialComplex, order: &[usize], bounds: &CheckerBounds) -> Result<bool> {
    let mut cur = c.clone();
    for &v in order {
        if !is_shedding_vertex(&cur, v) || !is_vertex_decomposable(&cur.link(v)?, bounds)?.decomposable {
            return Ok(false);
        }
        cur = cur.delete_vertex(v);
    }
    Ok(cur.is_simplex())
}

// ---------------------------------------------------------------------------
// shellability

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShellResult {
    pub shellable: bool,
    /// Facets in shelling order.
    pub order: Option<Vec<Vec<usize>>>,
}

/// Can `facets[next]` follow the facets in `placed`? For every placed `F_i`
/// some `v ∈ F_j ∖ F_i` must satisfy `F_j ∖ F_l = {v}` for a placed `F_l`.
fn extends(facets: &[Face], placed: u64, next: usize) -> bool {
    let fj = facets[next];
    let mut single = Face::EMPTY;
    for l in 0..facets.len() {
        if placed >> l & 1 == 1 {
            let d = fj.difference(facets[l]);
            if d.len() == 1 {
                single = single.union(d);
            }
        }
    }
    (0..facets.len())
        .filter(|&i| placed >> i & 1 == 1)
        .all(|i| !fj.difference(facets[i]).intersection(single).is_empty())
}

/// Direct check of the shelling condition for a given facet order.
pub fn verify_shelling_order(c: &SimplicialComplex, order: &[Vec<usize>]) -> bool {
    let faces: Vec<Face> = order.iter().map(|f| Face::from_vertices(f.iter().copied())).collect();
    let mut sorted = faces.clone();
    sorted.sort();
    if sorted != c.facets() {
        return false;
    }
    for j in 0..faces.len() {
        for i in 0..j {
            let ok = faces[j].difference(faces[i]).iter().any(|v| {
                (0..j).any(|l| faces[j].difference(faces[l]) == Face::singleton(v))
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Depth-first search over sets of already placed facets. The condition for
/// appending a facet depends only on the set placed so far, so failed sets
/// are remembered. Facets are placed in order of non-increasing size, which
/// loses no shellings (Björner–Wachs rearrangement).
pub fn is_shellable(c: &SimplicialComplex, bounds: &CheckerBounds) -> Result<ShellResult> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut facets: Vec<Face> = c.facets().to_vec();
    let t = facets.len();
    if t > bounds.shell_facets || t > 64 {
        return Err(Error::ResourceLimit(format!(
            "{t} facets exceed the shellability bound of {}",
            bounds.shell_facets
        )));
    }
    facets.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let full = if t == 64 { u64::MAX } else { (1u64 << t) - 1 };
    let mut failed: HashSet<u64> = HashSet::new();
    let mut path: Vec<usize> = Vec::with_capacity(t);

    fn dfs(
        facets: &[Face],
        full: u64,
        placed: u64,
        path: &mut Vec<usize>,
        failed: &mut HashSet<u64>,
        budget: usize,
    ) -> Result<bool> {
        if placed == full {
            return Ok(true);
        }
        if failed.contains(&placed) {
            return Ok(false);
        }
        if failed.len() >= budget {
            return Err(Error::ResourceLimit(format!("shellability search exceeded {budget} states")));
        }
        let largest = (0..facets.len()).filter(|&i| placed >> i & 1 == 0).map(|i| facets[i].len()).max();
        for next in 0..facets.len() {
            if placed >> next & 1 == 1 || Some(facets[next].len()) != largest {
                continue;
            }
            if extends(facets, placed, next) {
                path.push(next);
                if dfs(facets, full, placed | 1 << next, path, failed, budget)? {
                    return Ok(true);
                }
                path.pop();
            }
        }
        failed.insert(placed);
        Ok(false)
    }

    if dfs(&facets, full, 0, &mut path, &mut failed, bounds.shell_states)? {
        let order = path.iter().map(|&i| facets[i].to_vec()).collect();
        Ok(ShellResult { shellable: true, order: Some(order) })
    } else {
        Ok(ShellResult { shellable: false, order: None })
    }
}

// ---------------------------------------------------------------------------
// constructibility

struct ConstructibleSearch {
    memo: HashMap<Vec<u64>, Verdict>,
    bound: usize,
}

impl ConstructibleSearch {
    fn decide(&mut self, c: &SimplicialComplex) -> Verdict {
        if c.is_simplex() {
            return Verdict::True;
        }
        if !c.is_pure() {
            return Verdict::False;
        }
        // a union of points glued along {∅}
        if c.dim() == 0 {
            return Verdict::True;
        }
        let compact = c.compress();
        let k: Vec<u64> = compact.facets().iter().map(|f| f.mask()).collect();
        if let Some(&v) = self.memo.get(&k) {
            return v;
        }
        let facets = compact.facets();
        let t = facets.len();
        let verdict = if t > self.bound {
            Verdict::Unknown
        } else {
            let d = facets[0].len();
            let mut best = Verdict::False;
            // facet 0 always lies in the first part
            for mask in 0..(1u64 << (t - 1)) {
                let in_first = |i: usize| i == 0 || (mask >> (i - 1)) & 1 == 0;
                if (1..t).all(in_first) {
                    continue;
                }
                let a: Vec<Face> = (0..t).filter(|&i| in_first(i)).map(|i| facets[i]).collect();
                let b: Vec<Face> = (0..t).filter(|&i| !in_first(i)).map(|i| facets[i]).collect();
                let mut meet = Vec::with_capacity(a.len() * b.len());
                for x in &a {
                    for y in &b {
                        meet.push(x.intersection(*y));
                    }
                }
                let meet = maximal_faces(meet);
                if meet.iter().any(|f| f.len() + 1 != d) {
                    continue;
                }
                let n = compact.n();
                let v = self
                    .decide(&SimplicialComplex::from_faces_unchecked(n, meet))
                    .and(self.decide(&SimplicialComplex::from_faces_unchecked(n, a)))
                    .and(self.decide(&SimplicialComplex::from_faces_unchecked(n, b)));
                match v {
                    Verdict::True => {
                        best = Verdict::True;
                        break;
                    }
                    Verdict::Unknown => best = Verdict::Unknown,
                    Verdict::False => {}
                }
            }
            best
        };
        self.memo.insert(k, verdict);
        verdict
    }
}

/// Constructibility: a simplex, or the union of two constructible
/// `d`-dimensional subcomplexes meeting in a constructible
/// `(d-1)`-dimensional complex. The two parts split the facets, since a
/// shared facet would make the intersection `d`-dimensional. Non-pure
/// complexes are not constructible. `Unknown` when some complex met during
/// the search has more facets than the bound.
pub fn is_constructible_bounded(c: &SimplicialComplex, bounds: &CheckerBounds) -> Result<Verdict> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    let mut search = ConstructibleSearch { memo: HashMap::new(), bound: bounds.constructible_facets };
    Ok(search.decide(c))
}

// ---------------------------------------------------------------------------
// Cohen–Macaulay

struct CmSearch {
    field: FieldSpec,
    memo: HashMap<Vec<u64>, bool>,
}

impl CmSearch {
    /// `H̃_i(Δ) = 0` for `i < dim Δ` and every vertex link is CM; links of
    /// faces of a link are links of faces of `Δ`.
    fn decide(&mut self, c: &SimplicialComplex) -> Result<bool> {
        if c.dim() <= 0 || c.is_simplex() {
            return Ok(true);
        }
        let compact = c.compress();
        let k: Vec<u64> = compact.facets().iter().map(|f| f.mask()).collect();
        if let Some(&v) = self.memo.get(&k) {
            return Ok(v);
        }
        let h = reduced_homology_small_model(&compact, self.field)?;
        let top = compact.dim() as usize + 1;
        let mut ok = h[..top].iter().all(|&x| x == 0);
        if ok {
            for v in compact.vertex_set().iter() {
                if !self.decide(&compact.link(v)?)? {
                    ok = false;
                    break;
                }
            }
        }
        self.memo.insert(k, ok);
        Ok(ok)
    }
}

/// Reisner's criterion: `H̃_i(lk F; k) = 0` for every face `F` and every
/// `i < dim lk F`.
pub fn is_cohen_macaulay_reisner(c: &SimplicialComplex, k: FieldSpec) -> Result<bool> {
    if c.is_void() {
        return Err(Error::VoidComplex);
    }
    CmSearch { field: k, memo: HashMap::new() }.decide(c)
}

// ---------------------------------------------------------------------------
// reports

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyVerdicts {
    pub pure: bool,
    pub vertex_decomposable: Verdict,
    pub shellable: Verdict,
    pub constructible: Verdict,
    pub cohen_macaulay: Verdict,
}

fn limit_to_unknown(r: Result<bool>) -> Result<Verdict> {
    match r {
        Ok(b) => Ok(Verdict::from_bool(b)),
        Err(Error::ResourceLimit(_)) => Ok(Verdict::Unknown),
        Err(e) => Err(e),
    }
}

/// Every property, with searches that hit a bound reported as `Unknown`.
pub fn property_verdicts(c: &SimplicialComplex, bounds: &CheckerBounds, k: FieldSpec) -> Result<PropertyVerdicts> {
    Ok(PropertyVerdicts {
        pure: c.is_pure(),
        vertex_decomposable: limit_to_unknown(is_vertex_decomposable(c, bounds).map(|r| r.decomposable))?,
        shellable: limit_to_unknown(is_shellable(c, bounds).map(|r| r.shellable))?,
        constructible: is_constructible_bounded(c, bounds)?,
        cohen_macaulay: limit_to_unknown(is_cohen_macaulay_reisner(c, k))?,
    })
}

/// Violations of `VD ⟹ shellable`, and on pure complexes of
/// `shellable ⟹ constructible ⟹ CM`, skipping undecided links.
pub fn implication_violations(v: &PropertyVerdicts) -> Vec<String> {
    let mut out = Vec::new();
    let mut check = |name: &str, strong: Verdict, weak: Verdict| {
        if strong == Verdict::True && weak == Verdict::False {
            out.push(name.to_string());
        }
    };
    check("vertex_decomposable => shellable", v.vertex_decomposable, v.shellable);
    if v.pure {
        check("shellable => constructible", v.shellable, v.constructible);
        check("constructible => cohen_macaulay", v.constructible, v.cohen_macaulay);
        check("shellable => cohen_macaulay", v.shellable, v.cohen_macaulay);
        check("vertex_decomposable => cohen_macaulay", v.vertex_decomposable, v.cohen_macaulay);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyComparison {
    pub property: String,
    pub base: Verdict,
    pub wreath: Verdict,
    /// `None` unless both sides are decided.
    pub agree: Option<bool>,
    /// Disagreement on a decided, transported property.
    pub violation: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransportReport {
    pub dims: Vec<usize>,
    pub base_facets: usize,
    pub wreath_vertices: usize,
    pub wreath_facets: usize,
    pub comparisons: Vec<PropertyComparison>,
    pub implication_violations: Vec<String>,
    pub violations: usize,
}

/// Decides each property on `c` and on `mixed_wreath(c, dims)` and compares.
pub fn property_transport_report(
    c: &SimplicialComplex,
    dims: &[usize],
    bounds: &CheckerBounds,
    k: FieldSpec,
) -> Result<TransportReport> {
    let (w, _) = mixed_wreath(c, dims)?;
    let base = property_verdicts(c, bounds, k)?;
    let wreath = property_verdicts(&w, bounds, k)?;
    let pairs = [
        ("pure", Verdict::from_bool(base.pure), Verdict::from_bool(wreath.pure)),
        ("vertex_decomposable", base.vertex_decomposable, wreath.vertex_decomposable),
        ("shellable", base.shellable, wreath.shellable),
        ("constructible", base.constructible, wreath.constructible),
        ("cohen_macaulay", base.cohen_macaulay, wreath.cohen_macaulay),
    ];
    let comparisons: Vec<PropertyComparison> = pairs
        .iter()
        .map(|&(name, b, w)| {
            let agree = match (b.as_bool(), w.as_bool()) {
                (Some(x), Some(y)) => Some(x == y),
                _ => None,
            };
            PropertyComparison { property: name.into(), base: b, wreath: w, agree, violation: agree == Some(false) }
        })
        .collect();
    let mut implication = implication_violations(&base);
    implication.extend(implication_violations(&wreath).into_iter().map(|s| format!("wreath: {s}")));
    let violations = comparisons.iter().filter(|c| c.violation).count() + implication.len();
    Ok(TransportReport {
        dims: dims.to_vec(),
        base_facets: c.facets().len(),
        wreath_vertices: w.n(),
        wreath_facets: w.facets().len(),
        comparisons,
        implication_violations: implication,
        violations,
    })
}

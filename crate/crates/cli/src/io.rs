//! Input detection, JSON schemas and the text monomial grammar.
//!
//! JSON objects are recognised by their keys: `facets` (with optional
//! `weights` and `names`) is a complex, `gens` an ideal and `edges` a graph.
//! Anything that does not start with `{` is read as text:
//!
//! ```text
//! [n=<arity>;] [(] monomial {, monomial} [)]
//! monomial := 1 | factor {* factor}
//! factor   := x<index>[^<exponent>]      (indices start at 1)
//! ```

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use wsckit_core::{
    Error, Face, Graph, Monomial, MonomialIdeal, SimplicialComplex, WeightFunction, WeightedComplex,
    WreathVertexMap,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Complex { complex: SimplicialComplex, names: Option<Vec<String>> },
    Weighted { complex: WeightedComplex, names: Option<Vec<String>> },
    Ideal(MonomialIdeal),
    Graph(Graph),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Complex { .. } => "complex",
            Input::Weighted { .. } => "weighted complex",
            Input::Ideal(_) => "ideal",
            Input::Graph(_) => "graph",
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexJson {
    n: usize,
    facets: Vec<Vec<usize>>,
    #[serde(default)]
    weights: Option<Vec<u32>>,
    #[serde(default)]
    names: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealJson {
    n: usize,
    gens: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn parse_error(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn from_value<T: for<'de> Deserialize<'de>>(v: Value, what: &str) -> Result<T, Error> {
    serde_json::from_value(v).map_err(|e| parse_error(format!("{what}: {e}")))
}

pub fn parse_input(text: &str) -> Result<Input, Error> {
    let trimmed = text.trim();
    if trimmed.starts_with('{') {
        parse_json(trimmed)
    } else {
        parse_ideal_text(trimmed).map(Input::Ideal)
    }
}

fn parse_json(text: &str) -> Result<Input, Error> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| parse_error(format!("line {}, column {}: {e}", e.line(), e.column())))?;
    let obj = value.as_object().ok_or_else(|| parse_error("expected a JSON object"))?;
    if obj.contains_key("facets") {
        let c: ComplexJson = from_value(value, "complex")?;
        let complex = SimplicialComplex::from_facets(c.n, &c.facets)?;
        if let Some(names) = &c.names {
            if names.len() != c.n {
                return Err(parse_error(format!("field `names`: expected {} entries, found {}", c.n, names.len())));
            }
        }
        match c.weights {
            None => Ok(Input::Complex { complex, names: c.names }),
            Some(w) => {
                if w.len() != c.n {
                    return Err(parse_error(format!("field `weights`: expected {} entries, found {}", c.n, w.len())));
                }
                let wc = WeightedComplex::new(complex, WeightFunction::new(w)?)?;
                Ok(Input::Weighted { complex: wc, names: c.names })
            }
        }
    } else if obj.contains_key("gens") {
        let i: IdealJson = from_value(value, "ideal")?;
        Ok(Input::Ideal(MonomialIdeal::from_exponents(i.n, &i.gens)?))
    } else if obj.contains_key("edges") {
        let g: GraphJson = from_value(value, "graph")?;
        Ok(Input::Graph(Graph::new(g.n, &g.edges)?))
    } else {
        Err(parse_error("object has none of the keys `facets`, `gens`, `edges`"))
    }
}

fn parse_number<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, Error> {
    s.trim().parse().map_err(|_| parse_error(format!("invalid {what} `{}`", s.trim())))
}

/// Parses the text grammar; the arity is the largest index unless given.
pub fn parse_ideal_text(text: &str) -> Result<MonomialIdeal, Error> {
    let mut body = text.trim();
    let mut arity: Option<usize> = None;
    if let Some(rest) = body.strip_prefix("n=") {
        let (n, tail) = rest.split_once(';').ok_or_else(|| parse_error("expected `;` after `n=<arity>`"))?;
        arity = Some(parse_number(n, "arity")?);
        body = tail.trim();
    }
    if let Some(inner) = body.strip_prefix('(') {
        body = inner.strip_suffix(')').ok_or_else(|| parse_error("unbalanced parenthesis"))?.trim();
    }
    let mut exps: Vec<Vec<(usize, u32)>> = Vec::new();
    if !body.is_empty() {
        for (t, term) in body.split(',').enumerate() {
            let term = term.trim();
            if term.is_empty() {
                return Err(parse_error(format!("generator {} is empty", t + 1)));
            }
            if term == "1" {
                exps.push(Vec::new());
                continue;
            }
            let mut factors = Vec::new();
            for factor in term.split('*') {
                let factor = factor.trim();
                let rest = factor
                    .strip_prefix('x')
                    .ok_or_else(|| parse_error(format!("generator {}: expected `x<index>`, found `{factor}`", t + 1)))?;
                let (idx, e) = match rest.split_once('^') {
                    Some((i, e)) => (i, parse_number::<u32>(e, "exponent")?),
                    None => (rest, 1),
                };
                let idx: usize = parse_number(idx, "variable index")?;
                if idx == 0 {
                    return Err(parse_error("variable indices start at 1"));
                }
                factors.push((idx - 1, e));
            }
            exps.push(factors);
        }
    }
    let used = exps.iter().flatten().map(|&(i, _)| i + 1).max().unwrap_or(0);
    let n = arity.unwrap_or(used);
    if used > n {
        return Err(Error::InvalidVertex { vertex: used - 1, n });
    }
    let gens = exps
        .into_iter()
        .map(|factors| {
            let mut e = vec![0u32; n];
            for (i, x) in factors {
                e[i] = e[i].checked_add(x).ok_or(Error::Overflow)?;
            }
            Ok(Monomial::new(e))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    MonomialIdeal::minimalize(n, gens)
}

/// Text form that [`parse_ideal_text`] reads back exactly.
pub fn ideal_to_text(ideal: &MonomialIdeal) -> String {
    let used = ideal.support().last().map_or(0, |&i| i + 1);
    let body = ideal.to_string();
    if used == ideal.arity() && !ideal.is_zero() {
        body
    } else {
        format!("n={}; {body}", ideal.arity())
    }
}

pub fn complex_json(c: &SimplicialComplex, names: Option<&[String]>) -> Value {
    let mut v = json!({ "n": c.n(), "facets": c.facet_lists() });
    if let Some(names) = names {
        v["names"] = json!(names);
    }
    v
}

pub fn weighted_json(wc: &WeightedComplex, names: Option<&[String]>) -> Value {
    let mut v = complex_json(wc.complex(), names);
    v["weights"] = json!(wc.weights().values());
    v
}

pub fn ideal_json(i: &MonomialIdeal) -> Value {
    json!({ "n": i.arity(), "gens": i.exponent_lists() })
}

pub fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges() })
}

pub fn input_json(input: &Input) -> Value {
    match input {
        Input::Complex { complex, names } => complex_json(complex, names.as_deref()),
        Input::Weighted { complex, names } => weighted_json(complex, names.as_deref()),
        Input::Ideal(i) => ideal_json(i),
        Input::Graph(g) => graph_json(g),
    }
}

/// Names for the copies of each vertex: `a` becomes `a1, a2, ...` when it
/// has more than one copy.
pub fn copy_names(names: &[String], map: &WreathVertexMap) -> Vec<String> {
    let mut out = Vec::with_capacity(map.total());
    for (i, name) in names.iter().enumerate() {
        let count = map.counts()[i];
        if count == 1 {
            out.push(name.clone());
        } else {
            out.extend((1..=count).map(|j| format!("{name}{j}")));
        }
    }
    out
}

#[derive(Serialize)]
pub struct MapJson<'a> {
    pub counts: &'a [usize],
    /// `copies[i]` lists the ids standing for vertex `i`.
    pub copies: Vec<Vec<usize>>,
}

pub fn map_json(map: &WreathVertexMap) -> Value {
    let copies = (0..map.original_n()).map(|i| map.copies(i).collect()).collect();
    serde_json::to_value(MapJson { counts: map.counts(), copies }).expect("map serializes")
}

pub fn face_names(f: Face, names: Option<&[String]>) -> String {
    let parts: Vec<String> = f
        .iter()
        .map(|v| names.and_then(|n| n.get(v).cloned()).unwrap_or_else(|| v.to_string()))
        .collect();
    format!("{{{}}}", parts.join(" "))
}

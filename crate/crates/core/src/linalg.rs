//! Exact rank of sparse integer matrices over `Q` or `F_p`.
//!
//! Matrices are given column by column as sorted `(row, value)` lists and are
//! reduced left to right by eliminating each column's lowest nonzero row
//! against earlier pivots. Over `Q` the reduction is fraction free: a column
//! is replaced by `a*col - b*pivot` and divided by the gcd of its entries.
//! Machine integers are tried first; on overflow the matrix is redone with
//! big integers.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::homology::FieldSpec;

pub type SparseColumn = Vec<(usize, i64)>;

/// Outcome of reducing one matrix: its rank and the pivot row of every
/// surviving column.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub rank: usize,
    pub pivot_rows: Vec<usize>,
}

pub fn reduce(columns: &[SparseColumn], field: FieldSpec) -> Reduction {
    match field {
        FieldSpec::Prime(p) => reduce_mod_p(columns, p),
        FieldSpec::Rational => match reduce_integer::<i64>(columns) {
            Some(r) => r,
            None => reduce_integer::<BigInt>(columns).expect("big integer reduction cannot overflow"),
        },
    }
}

pub fn rank(columns: &[SparseColumn], field: FieldSpec) -> usize {
    reduce(columns, field).rank
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % p as u128) as u64;
        }
        base = (base as u128 * base as u128 % p as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn reduce_mod_p(columns: &[SparseColumn], p: u64) -> Reduction {
    let to_field = |v: i64| v.rem_euclid(p as i64) as u64;
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    let mut pivot_rows = Vec::new();
    for col in columns {
        let mut cur: Vec<(usize, u64)> =
            col.iter().map(|&(r, v)| (r, to_field(v))).filter(|&(_, v)| v != 0).collect();
        while let Some(&(low, coeff)) = cur.last() {
            let Some(piv) = pivots.get(&low) else { break };
            // pivot columns are normalized to a leading 1
            let factor = p - coeff;
            cur = axpy_mod(&cur, piv, factor, p);
        }
        if let Some(&(low, coeff)) = cur.last() {
            let inv = mod_pow(coeff, p - 2, p);
            for e in cur.iter_mut() {
                e.1 = (e.1 as u128 * inv as u128 % p as u128) as u64;
            }
            pivots.insert(low, cur);
            pivot_rows.push(low);
        }
    }
    Reduction { rank: pivot_rows.len(), pivot_rows }
}

/// `x + factor * y` over `F_p`.
fn axpy_mod(x: &[(usize, u64)], y: &[(usize, u64)], factor: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            out.push((y[j].0, (y[j].1 as u128 * factor as u128 % p as u128) as u64));
            j += 1;
        } else {
            let v = (x[i].1 as u128 + y[j].1 as u128 * factor as u128) % p as u128;
            if v != 0 {
                out.push((x[i].0, v as u64));
            }
            i += 1;
            j += 1;
        }
    }
    out.retain(|e| e.1 != 0);
    out
}

trait ExactInt: Clone + PartialEq + Sized {
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    /// `a*x - b*y`, or `None` on overflow.
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn div_exact(&self, d: &Self) -> Self;
    fn negative(&self) -> bool;
    fn neg(&self) -> Self;
}

impl ExactInt for i64 {
    fn from_i64(v: i64) -> Self {
        v
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        self.abs() == 1
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn negative(&self) -> bool {
        *self < 0
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl ExactInt for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn lin(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
    fn negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self.clone()
    }
}

fn reduce_integer<T: ExactInt>(columns: &[SparseColumn]) -> Option<Reduction> {
    let zero = T::from_i64(0);
    let mut pivots: HashMap<usize, Vec<(usize, T)>> = HashMap::new();
    let mut pivot_rows = Vec::new();
    for col in columns {
        let mut cur: Vec<(usize, T)> =
            col.iter().filter(|e| e.1 != 0).map(|&(r, v)| (r, T::from_i64(v))).collect();
        while let Some((low, b)) = cur.last().cloned() {
            let Some(piv) = pivots.get(&low) else { break };
            let a = piv.last().expect("pivot columns are nonzero").1.clone();
            cur = combine(&a, &cur, &b, piv, &zero)?;
        }
        if let Some((low, _)) = cur.last() {
            let low = *low;
            normalize(&mut cur);
            pivots.insert(low, cur);
            pivot_rows.push(low);
        }
    }
    Some(Reduction { rank: pivot_rows.len(), pivot_rows })
}

/// `a*x - b*y` for sparse columns, entries that cancel dropped.
fn combine<T: ExactInt>(a: &T, x: &[(usize, T)], b: &T, y: &[(usize, T)], zero: &T) -> Option<Vec<(usize, T)>> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (row, v) = if take_x {
            i += 1;
            (x[i - 1].0, T::lin(a, &x[i - 1].1, b, zero)?)
        } else if take_y {
            j += 1;
            (y[j - 1].0, T::lin(a, zero, b, &y[j - 1].1)?)
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, T::lin(a, &x[i - 1].1, b, &y[j - 1].1)?)
        };
        if !v.is_zero() {
            out.push((row, v));
        }
    }
    normalize(&mut out);
    Some(out)
}

/// Divides by the content and makes the lowest entry positive.
fn normalize<T: ExactInt>(col: &mut [(usize, T)]) {
    let Some(first) = col.first() else { return };
    let mut g = first.1.clone();
    for e in col.iter().skip(1) {
        if g.is_unit() {
            break;
        }
        g = g.gcd(&e.1);
    }
    if g.negative() {
        g = g.neg();
    }
    if !g.is_unit() {
        for e in col.iter_mut() {
            e.1 = e.1.div_exact(&g);
        }
    }
    if col.last().is_some_and(|e| e.1.negative()) {
        for e in col.iter_mut() {
            e.1 = e.1.neg();
        }
    }
}

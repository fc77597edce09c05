//! Independent oracles for the exact algebra: the Taylor complex for Betti
//! numbers, monomial counting for Hilbert functions, dense rational
//! elimination for ranks and homology, and membership for decompositions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use wsckit_core::decomposition::minimal_and_embedded;
use wsckit_core::homology::reduced_homology_small_model;
use wsckit_core::linalg::{self, SparseColumn};
use wsckit_core::{
    hilbert_series, multigraded_betti, primary_decomposition, reduced_homology_dims, symbolic_power, Face, FieldSpec,
    Monomial, MonomialIdeal, SimplicialComplex,
};

fn dense_rank_q(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone() / pivot.clone();
                for c in col..ncols {
                    let v = m[rank][c].clone() * f.clone();
                    m[r][c] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn dense_rank_mod(rows: &[Vec<i64>], p: i64) -> usize {
    let mut m: Vec<Vec<i64>> = rows.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let ncols = m.first().map_or(0, |r| r.len());
    let inv = |a: i64| (1..p).find(|b| a * b % p == 1).unwrap();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(rank, piv);
        let s = inv(m[rank][col]);
        for c in 0..ncols {
            m[rank][c] = m[rank][c] * s % p;
        }
        for r in 0..m.len() {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in 0..ncols {
                    m[r][c] = (m[r][c] - f * m[rank][c]).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn dense_rank(rows: &[Vec<i64>], k: FieldSpec) -> usize {
    match k {
        FieldSpec::Rational => dense_rank_q(rows),
        FieldSpec::Prime(p) => dense_rank_mod(rows, p as i64),
    }
}

fn to_columns(rows: &[Vec<i64>]) -> Vec<SparseColumn> {
    let ncols = rows.first().map_or(0, |r| r.len());
    (0..ncols)
        .map(|c| rows.iter().enumerate().filter(|(_, r)| r[c] != 0).map(|(i, r)| (i, r[c])).collect())
        .collect()
}

/// `β_{i,b}` from the Taylor complex tensored with the residue field: in
/// degree `b` the basis is the generator subsets with lcm exactly `b`, and a
/// face map survives only when dropping the generator keeps the lcm.
fn taylor_betti(ideal: &MonomialIdeal, k: FieldSpec) -> BTreeMap<(usize, Vec<u32>), u64> {
    let gens = ideal.gens();
    let r = gens.len();
    let mut by_lcm: BTreeMap<Vec<u32>, Vec<u32>> = BTreeMap::new();
    for mask in 1u32..(1 << r) {
        let l = (0..r).filter(|i| mask >> i & 1 == 1).fold(Monomial::one(ideal.arity()), |a, i| a.lcm(&gens[i]));
        by_lcm.entry(l.exps().to_vec()).or_default().push(mask);
    }
    let mut out = BTreeMap::new();
    for (b, masks) in by_lcm {
        let mut levels: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
        for m in masks {
            levels[m.count_ones() as usize - 1].push(m);
        }
        // rank of d: C_i -> C_{i-1}
        let rank_at = |i: usize| -> usize {
            if i == 0 || levels[i].is_empty() || levels[i - 1].is_empty() {
                return 0;
            }
            let rows: Vec<Vec<i64>> = levels[i - 1]
                .iter()
                .map(|&lower| {
                    levels[i]
                        .iter()
                        .map(|&upper| {
                            if upper & lower != lower {
                                return 0;
                            }
                            let dropped = (upper ^ lower).trailing_zeros();
                            let pos = (upper & ((1 << dropped) - 1)).count_ones();
                            if pos % 2 == 0 { 1 } else { -1 }
                        })
                        .collect()
                })
                .collect();
            dense_rank(&rows, k)
        };
        for i in 0..r {
            let h = levels[i].len() - rank_at(i) - rank_at(i + 1);
            if h > 0 {
                out.insert((i, b.clone()), h as u64);
            }
        }
    }
    out
}

fn brute_faces(c: &SimplicialComplex) -> Vec<Vec<Face>> {
    let top = c.dim() + 1;
    let mut levels = vec![Vec::new(); (top + 1) as usize];
    for mask in 0u64..(1 << c.n()) {
        let f = Face::from_mask(mask);
        if c.contains(f) {
            levels[f.len()].push(f);
        }
    }
    levels
}

/// Reduced homology from dense boundary matrices of the augmented complex.
fn dense_homology(c: &SimplicialComplex, k: FieldSpec) -> Vec<u64> {
    let levels = brute_faces(c);
    let rank_at = |s: usize| -> usize {
        if s == 0 || s >= levels.len() {
            return 0;
        }
        let rows: Vec<Vec<i64>> = levels[s - 1]
            .iter()
            .map(|&lo| {
                levels[s]
                    .iter()
                    .map(|&hi| {
                        if !lo.is_subset(hi) {
                            return 0;
                        }
                        let v = hi.difference(lo).iter().next().unwrap();
                        let pos = hi.iter().take_while(|&u| u < v).count();
                        if pos % 2 == 0 { 1 } else { -1 }
                    })
                    .collect()
            })
            .collect();
        dense_rank(&rows, k)
    };
    (0..levels.len()).map(|s| (levels[s].len() - rank_at(s) - rank_at(s + 1)) as u64).collect()
}

fn arb_ideal(max_n: usize, max_gens: usize, max_exp: u32) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(prop::collection::vec(0..=max_exp, n), 1..=max_gens).prop_filter_map(
            "needs a non-unit generator",
            move |gens| {
                let gens: Vec<Vec<u32>> = gens.into_iter().filter(|g| g.iter().any(|&e| e > 0)).collect();
                if gens.is_empty() {
                    None
                } else {
                    MonomialIdeal::from_exponents(n, &gens).ok()
                }
            },
        )
    })
}

fn arb_complex(max_n: usize, max_facets: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(1u64..(1 << n), 1..=max_facets).prop_map(move |masks| {
            SimplicialComplex::from_faces(n, masks.into_iter().map(Face::from_mask).collect()).unwrap()
        })
    })
}

fn arb_field() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![Just(FieldSpec::Rational), Just(FieldSpec::Prime(2)), Just(FieldSpec::Prime(3))]
}

/// Monomials in the box `0..=bound` in every coordinate.
fn box_monomials(n: usize, bound: u32) -> Vec<Monomial> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|v: Vec<u32>| {
                (0..=bound).map(move |e| {
                    let mut w = v.clone();
                    w.push(e);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn betti_numbers_match_the_taylor_complex(i in arb_ideal(4, 6, 3), k in arb_field()) {
        let table = multigraded_betti(&i, k).unwrap();
        let ours: BTreeMap<(usize, Vec<u32>), u64> =
            table.entries().map(|(h, b, v)| ((h, b.to_vec()), v)).collect();
        prop_assert_eq!(ours, taylor_betti(&i, k));
    }

    #[test]
    fn hilbert_function_matches_monomial_count(i in arb_ideal(3, 4, 3)) {
        let h = hilbert_series(&i).unwrap();
        let n = i.arity();
        let top = i.lcm_of_gens().degree() as usize + 2;
        let binom = |a: i64, b: i64| -> i64 {
            if a < b || b < 0 { return 0; }
            (0..b).fold(1i64, |acc, j| acc * (a - j) / (j + 1))
        };
        for d in 0..=top {
            let count = box_monomials(n, d as u32)
                .iter()
                .filter(|m| m.degree() as usize == d && !i.contains(m))
                .count() as i64;
            let series: i64 = h.numerator.iter().enumerate()
                .filter(|(k, _)| *k <= d)
                .map(|(k, &c)| c * binom((d - k + n - 1) as i64, n as i64 - 1))
                .sum();
            prop_assert_eq!(count, series, "degree {}", d);
        }
    }

    #[test]
    fn sparse_rank_matches_dense_elimination(
        rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 1..7),
        k in arb_field(),
    ) {
        prop_assert_eq!(linalg::rank(&to_columns(&rows), k), dense_rank(&rows, k));
    }

    #[test]
    fn homology_matches_dense_boundary_ranks(c in arb_complex(6, 6), k in arb_field()) {
        let ours = reduced_homology_dims(&c, k).unwrap();
        prop_assert_eq!(&ours, &dense_homology(&c, k));
        prop_assert_eq!(reduced_homology_small_model(&c, k).unwrap(), ours.clone());
        let euler: i64 = ours.iter().enumerate().map(|(s, &d)| if s % 2 == 1 { d as i64 } else { -(d as i64) }).sum();
        let f = c.f_vector().unwrap();
        prop_assert_eq!(euler, f.reduced_euler_characteristic());
    }

    #[test]
    fn decomposition_membership(i in arb_ideal(4, 5, 3)) {
        let d = primary_decomposition(&i).unwrap();
        let bound = i.gens().iter().flat_map(|g| g.exps().iter().copied()).max().unwrap_or(0) + 1;
        for m in box_monomials(i.arity(), bound) {
            let inside = i.contains(&m);
            prop_assert_eq!(inside, d.components.iter().all(|c| c.ideal.contains(&m)));
            prop_assert_eq!(inside, d.irreducible.iter().all(|q| q.contains(&m)));
        }
        for q in &d.irreducible {
            prop_assert!(q.gens().iter().all(|g| g.as_pure_power().is_some()));
        }
        for c in &d.components {
            // P-primary: the support is P and a pure power of every variable of P lies in it
            prop_assert_eq!(c.ideal.support(), c.radical.vars().to_vec());
            for &v in c.radical.vars() {
                prop_assert!(c.ideal.gens().iter().any(|g| g.as_pure_power().map(|p| p.0) == Some(v)));
            }
        }
        for skip in 0..d.components.len() {
            if d.components.len() == 1 { break; }
            let mut rest = MonomialIdeal::unit(i.arity());
            for (j, c) in d.components.iter().enumerate() {
                if j != skip { rest = rest.intersect(&c.ideal).unwrap(); }
            }
            prop_assert_ne!(rest, i.clone(), "component {} is redundant", skip);
        }
    }

    #[test]
    fn symbolic_square_by_membership(i in arb_ideal(3, 3, 2)) {
        let s2 = symbolic_power(&i, 2).unwrap();
        let sq = i.power(2).unwrap();
        let (min, _) = minimal_and_embedded(&i).unwrap();
        let big = sq.lcm_of_gens().exps().iter().copied().max().unwrap_or(0);
        for m in box_monomials(i.arity(), big) {
            // m ∈ I^(2) iff for each minimal P, inflating the variables outside P lands in I^2
            let expected = min.iter().all(|p| {
                let e: Vec<u32> = m.exps().iter().enumerate()
                    .map(|(v, &x)| if p.vars().contains(&v) { x } else { big })
                    .collect();
                sq.contains(&Monomial::new(e))
            });
            prop_assert_eq!(s2.contains(&m), expected, "{}", m);
        }
    }
}

#[test]
fn taylor_oracle_sanity() {
    // (xy, yz, xz): β_0 = 3 in degrees of the generators, β_1 = 2 at xyz
    let i = MonomialIdeal::from_exponents(3, &[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]).unwrap();
    let t = taylor_betti(&i, FieldSpec::Rational);
    assert_eq!(t.get(&(1, vec![1, 1, 1])), Some(&2));
    assert_eq!(t.values().sum::<u64>(), 5);
}

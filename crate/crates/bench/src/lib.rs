//! Fixed inputs shared by the benchmarks.

use wsckit_core::{MonomialIdeal, SimplicialComplex};

/// The octahedral 2-sphere; antipodal pairs are `{i, i + 3}`.
pub fn octahedron() -> SimplicialComplex {
    let mut facets = Vec::new();
    for a in [0, 3] {
        for b in [1, 4] {
            for c in [2, 5] {
                facets.push(vec![a, b, c]);
            }
        }
    }
    SimplicialComplex::from_facets(6, &facets).expect("valid facets")
}

/// Weighted edge ideal of the `n`-cycle, edge `{i, i+1}` raised to `(i % 3) + 1`.
pub fn weighted_cycle_ideal(n: usize) -> MonomialIdeal {
    let gens: Vec<Vec<u32>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = (i % 3) as u32 + 1;
            e[(i + 1) % n] = ((i + 1) % 3) as u32 + 1;
            e
        })
        .collect();
    MonomialIdeal::from_exponents(n, &gens).expect("valid exponents")
}

/// `x1^2 x2^3, x2^3 x3^4, x3^4 x1^2`.
pub fn triangle_ideal() -> MonomialIdeal {
    MonomialIdeal::from_exponents(3, &[vec![2, 3, 0], vec![0, 3, 4], vec![2, 0, 4]]).expect("valid exponents")
}

#![allow(dead_code)]

use foliage::foliation::CurveRecord;
use foliage::lattice::{make_surface, DivClass, SurfaceLattice, SurfaceSpec};
use foliage::numeric::linalg::is_negative_definite;
use foliage::numeric::{int, solve_linear_system, Rational, Solution};
use num_traits::{Signed, Zero};
use rand::Rng;

/// A random candidate configuration: `D = X` on the lattice `[X, C1..Cn]`
/// with `X·Ci = d_dot[i]`.
pub struct RandomConfig {
    pub lattice: SurfaceLattice,
    pub d: DivClass,
    pub candidates: Vec<CurveRecord>,
    pub gram: Vec<Vec<i64>>,
    pub d_dot: Vec<i64>,
}

/// Draws configurations until one has a negative definite Gram matrix.
pub fn random_negative_definite(rng: &mut impl Rng, max_curves: usize) -> RandomConfig {
    loop {
        let n = rng.gen_range(1..=max_curves);
        let mut gram = vec![vec![0i64; n]; n];
        for i in 0..n {
            gram[i][i] = rng.gen_range(-5..=-1);
            for j in 0..i {
                let v = if rng.gen_bool(0.35) { 1 } else { 0 };
                gram[i][j] = v;
                gram[j][i] = v;
            }
        }
        let q: Vec<Vec<Rational>> = gram.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect();
        if !is_negative_definite(&q) {
            continue;
        }
        let d_dot: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        return build_config(gram, d_dot);
    }
}

pub fn build_config(gram: Vec<Vec<i64>>, d_dot: Vec<i64>) -> RandomConfig {
    let n = gram.len();
    let mut full = vec![vec![Rational::zero(); n + 1]; n + 1];
    full[0][0] = int(10);
    for i in 0..n {
        full[0][i + 1] = int(d_dot[i]);
        full[i + 1][0] = int(d_dot[i]);
        for j in 0..n {
            full[i + 1][j + 1] = int(gram[i][j]);
        }
    }
    let mut basis = vec!["X".to_string()];
    basis.extend((1..=n).map(|i| format!("C{i}")));
    let lattice = make_surface(SurfaceSpec::Abstract {
        basis,
        gram: full,
        canonical: vec![Rational::zero(); n + 1],
        chi: int(1),
    })
    .expect("valid abstract lattice");
    let d = lattice.generator("X").unwrap();
    let candidates = (1..=n)
        .map(|i| CurveRecord::single(&format!("C{i}"), lattice.generator(&format!("C{i}")).unwrap()))
        .collect();
    RandomConfig { lattice, d, candidates, gram, d_dot }
}

/// Every subset `S` with `G_SS·y = b_S`, `y > 0` and `b_j − Σ_S G_ji·y_i ≥ 0`
/// off `S`, with the coefficient vector over all curves.
pub fn enumerate_decompositions(gram: &[Vec<i64>], d_dot: &[i64]) -> Vec<Vec<Rational>> {
    let n = gram.len();
    let mut found = Vec::new();
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let mut y = vec![Rational::zero(); n];
        if !s.is_empty() {
            let m: Vec<Vec<Rational>> = s.iter().map(|&i| s.iter().map(|&j| int(gram[i][j])).collect()).collect();
            let rhs: Vec<Rational> = s.iter().map(|&i| int(d_dot[i])).collect();
            let Ok(Solution::Unique(sol)) = solve_linear_system(&m, &rhs) else {
                continue;
            };
            if sol.iter().any(|v| !v.is_positive()) {
                continue;
            }
            for (k, &i) in s.iter().enumerate() {
                y[i] = sol[k].clone();
            }
        }
        let nef_off = (0..n).filter(|j| !s.contains(j)).all(|j| {
            let p_dot: Rational = int(d_dot[j]) - (0..n).map(|i| int(gram[j][i]) * &y[i]).sum::<Rational>();
            !p_dot.is_negative()
        });
        if nef_off {
            found.push(y);
        }
    }
    found
}

pub fn seeded(seed: u64) -> rand_chacha::ChaCha8Rng {
    use rand::SeedableRng;
    rand_chacha::ChaCha8Rng::seed_from_u64(seed)
}

#![allow(dead_code)]

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use sasakian_core::lefschetz::hard_lefschetz;
use sasakian_core::linalg::Matrix;
use sasakian_core::scalar::{frac, int};
use sasakian_core::synthetic::CubicFormAlgebra;
use sasakian_core::{CohomologyClass, GradedAlgebra, Scalar};

pub fn small(rng: &mut ChaCha8Rng, range: i64) -> Scalar {
    int(rng.gen_range(-range..=range))
}

pub fn small_nonzero(rng: &mut ChaCha8Rng, range: i64) -> Scalar {
    loop {
        let x = rng.gen_range(-range..=range);
        if x != 0 {
            let d = rng.gen_range(1..=3);
            return frac(x, d);
        }
    }
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = small(rng, 2);
            }
        }
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

/// Random PD algebra of top degree 6 with `b2 = d2`, `b3 = d3` (even), a random
/// cubic form, pairing and volume, and no distinguished class.
pub fn random_spec(rng: &mut ChaCha8Rng, d2: usize, d3: usize) -> CubicFormAlgebra {
    let labels: Vec<String> = (0..d2).map(|i| format!("x{}", i + 1)).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    let mut entries = Vec::new();
    for i in 0..d2 {
        for j in i..d2 {
            for k in j..d2 {
                if rng.gen_bool(0.7) {
                    entries.push((i, j, k, small(rng, 3)));
                }
            }
        }
    }
    let mut spec = CubicFormAlgebra::new(&refs, &entries).with_symplectic_h3(d3 / 2);
    if d3 > 0 {
        // a random symplectic form: P^T J P
        let p = random_invertible(rng, d3);
        spec.h3_form = p.transpose().mul(&spec.h3_form).mul(&p);
    }
    spec.pairing = Some(random_invertible(rng, d2));
    spec.volume = small_nonzero(rng, 4);
    spec
}

fn omega_cubed(spec: &CubicFormAlgebra, w: &[Scalar]) -> Scalar {
    let n = w.len();
    let mut s = Scalar::zero();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                s += &spec.cubic[(i * n + j) * n + k] * &w[i] * &w[j] * &w[k];
            }
        }
    }
    s
}

/// Random valid algebra with random `ω`, `ω³ ≠ 0`; `d2 ∈ 1..=4`, `d3 ∈ {0, 2, 4}`.
pub fn random_algebra(rng: &mut ChaCha8Rng) -> (GradedAlgebra, CohomologyClass) {
    loop {
        let d2 = rng.gen_range(1..=4);
        let d3 = 2 * rng.gen_range(0..=2);
        let spec = random_spec(rng, d2, d3);
        let w: Vec<Scalar> = (0..d2).map(|_| small(rng, 2)).collect();
        if omega_cubed(&spec, &w).is_zero() {
            continue;
        }
        let a = spec.with_omega(w).build().expect("cubic-form algebras are valid");
        let omega = a.omega().unwrap();
        return (a, omega);
    }
}

/// As `random_algebra`, but hard Lefschetz holds.
pub fn random_hl_algebra(rng: &mut ChaCha8Rng) -> (GradedAlgebra, CohomologyClass) {
    loop {
        let (a, w) = random_algebra(rng);
        if hard_lefschetz(&a, &w).unwrap().holds {
            return (a, w);
        }
    }
}

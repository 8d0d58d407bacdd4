//! Hand-built Poincaré duality algebras of top degree 6.
//!
//! A simply connected PD algebra with `N = 6` is determined by:
//! - a symmetric cubic form `λ` on `H^2`, where `λ_{ijk} = ∫ x_i x_j x_k`;
//! - an invertible pairing `B_{ik} = ∫ x_i f_k` between `H^2` and a chosen basis `f` of `H^4`;
//! - a nondegenerate antisymmetric form `Ω_{ab} = ∫ u_a u_b` on `H^3`;
//! - the value `s = ∫ vol` of the integration on the top class.
//!
//! The products are then `x_i x_j = Σ_k c_{ijk} f_k` with `B c_{ij} = λ_{ij·}`,
//! `x_i f_k = (B_{ik}/s) vol` and `u_a u_b = (Ω_{ab}/s) vol`. Associativity
//! reduces to the symmetry of `λ`, so every such choice is a valid algebra.

use num_traits::Zero;

use crate::algebra::{AlgebraBuilder, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::{int, Scalar};

#[derive(Clone, Debug)]
pub struct CubicFormAlgebra {
    pub h2_labels: Vec<String>,
    pub h3_labels: Vec<String>,
    pub h4_labels: Vec<String>,
    /// Dense `n x n x n` symmetric array, index `(i * n + j) * n + k`.
    pub cubic: Vec<Scalar>,
    /// `n x n`, invertible. `None` means the identity.
    pub pairing: Option<Matrix>,
    /// `b3 x b3`, antisymmetric and invertible.
    pub h3_form: Matrix,
    pub volume: Scalar,
    pub omega: Option<Vec<Scalar>>,
}

impl CubicFormAlgebra {
    /// Cubic form given by its nonzero entries `(i, j, k, value)` with `i <= j <= k`;
    /// the remaining permutations are filled in.
    pub fn new(h2_labels: &[&str], entries: &[(usize, usize, usize, Scalar)]) -> Self {
        let n = h2_labels.len();
        let mut cubic = vec![Scalar::zero(); n * n * n];
        for (i, j, k, v) in entries {
            for (a, b, c) in permutations(*i, *j, *k) {
                cubic[(a * n + b) * n + c] = v.clone();
            }
        }
        CubicFormAlgebra {
            h2_labels: h2_labels.iter().map(|s| s.to_string()).collect(),
            h3_labels: Vec::new(),
            h4_labels: h2_labels.iter().map(|s| format!("{s}*")).collect(),
            cubic,
            pairing: None,
            h3_form: Matrix::zeros(0, 0),
            volume: int(1),
            omega: None,
        }
    }

    /// Adds a symplectic `H^3` spanned by pairs `(u_i, v_i)` with `∫ u_i v_i = 1`.
    pub fn with_symplectic_h3(mut self, pairs: usize) -> Self {
        let b3 = 2 * pairs;
        let mut form = Matrix::zeros(b3, b3);
        self.h3_labels.clear();
        for i in 0..pairs {
            form[(2 * i, 2 * i + 1)] = int(1);
            form[(2 * i + 1, 2 * i)] = int(-1);
        }
        for i in 0..pairs {
            self.h3_labels.push(format!("u{}", i + 1));
            self.h3_labels.push(format!("v{}", i + 1));
        }
        self.h3_form = form;
        self
    }

    pub fn with_omega(mut self, omega: Vec<Scalar>) -> Self {
        self.omega = Some(omega);
        self
    }

    pub fn build(&self) -> Result<GradedAlgebra> {
        let n = self.h2_labels.len();
        let b3 = self.h3_labels.len();
        if self.cubic.len() != n * n * n || self.h4_labels.len() != n {
            return Err(Error::InvalidArgument("cubic form shape does not match H^2".into()));
        }
        if self.h3_form.rows() != b3 || self.h3_form.cols() != b3 {
            return Err(Error::InvalidArgument("H^3 form shape does not match H^3".into()));
        }
        if self.volume.is_zero() {
            return Err(Error::InvalidArgument("volume must be nonzero".into()));
        }
        let pairing = self.pairing.clone().unwrap_or_else(|| Matrix::identity(n));
        let pairing_inv = pairing
            .inverse()
            .ok_or_else(|| Error::InvalidArgument("H^2 x H^4 pairing is singular".into()))?;

        let labels = vec![
            vec!["1".to_string()],
            Vec::new(),
            self.h2_labels.clone(),
            self.h3_labels.clone(),
            self.h4_labels.clone(),
            Vec::new(),
            vec!["vol".to_string()],
        ];
        let mut b = AlgebraBuilder::new(6, labels)?;
        let lam = |i: usize, j: usize, k: usize| &self.cubic[(i * n + j) * n + k];
        for i in 0..n {
            for j in 0..n {
                let rhs: Vec<Scalar> = (0..n).map(|k| lam(i, j, k).clone()).collect();
                b.set_product((2, i), (2, j), pairing_inv.mul_vec(&rhs))?;
            }
            for k in 0..n {
                b.set_product((2, i), (4, k), vec![&pairing[(i, k)] / &self.volume])?;
            }
        }
        for a in 0..b3 {
            for c in 0..b3 {
                b.set_product((3, a), (3, c), vec![&self.h3_form[(a, c)] / &self.volume])?;
            }
        }
        b.set_integration(vec![self.volume.clone()])?;
        if let Some(w) = &self.omega {
            b.set_omega(w.clone())?;
        }
        b.build()
    }
}

fn permutations(i: usize, j: usize, k: usize) -> [(usize, usize, usize); 6] {
    [(i, j, k), (i, k, j), (j, i, k), (j, k, i), (k, i, j), (k, j, i)]
}

/// Base with `b_3 = 2` and a one-dimensional kernel of `ω: H^2 → H^4`:
/// cubic form `a³` on `H^2 = ⟨a, b⟩`, `ω = a`.
pub fn odd_kernel() -> GradedAlgebra {
    CubicFormAlgebra::new(&["a", "b"], &[(0, 0, 0, int(1))])
        .with_symplectic_h3(1)
        .with_omega(vec![int(1), int(0)])
        .build()
        .expect("static algebra")
}

/// Base where `Q^2 x Q^2 → Q^4` is nonzero: cubic form `a³ + 3bc²` on `⟨a, b, c⟩`,
/// `ω = a`. Here `b c` is not a multiple of `ω`-products.
pub fn cup_square() -> GradedAlgebra {
    CubicFormAlgebra::new(&["a", "b", "c"], &[(0, 0, 0, int(1)), (1, 2, 2, int(1))])
        .with_omega(vec![int(1), int(0), int(0)])
        .build()
        .expect("static algebra")
}

/// `(CP¹)³` intersection ring with an added symplectic `H^3 = ⟨u1, v1⟩`; hard
/// Lefschetz holds for `ω = a + b + c`.
pub fn product_with_h3() -> GradedAlgebra {
    let mut spec = CubicFormAlgebra::new(&["a", "b", "c"], &[(0, 1, 2, int(1))])
        .with_symplectic_h3(1)
        .with_omega(vec![int(1), int(1), int(1)]);
    spec.h4_labels = vec!["bc".into(), "ac".into(), "ab".into()];
    spec.build().expect("static algebra")
}

/// Hard Lefschetz base on which `(α, β) ↦ ∫ α β ω` is indefinite on `P`:
/// cubic form `x³ + 3x y² - 3x z²`, `ω = x`.
pub fn indefinite() -> GradedAlgebra {
    CubicFormAlgebra::new(
        &["x", "y", "z"],
        &[(0, 0, 0, int(1)), (0, 1, 1, int(1)), (0, 2, 2, int(-1))],
    )
    .with_omega(vec![int(1), int(0), int(0)])
    .build()
    .expect("static algebra")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lefschetz::{hard_lefschetz, kernel_basis};

    #[test]
    fn shipped_algebras_validate() {
        for (name, a) in [
            ("odd_kernel", odd_kernel()),
            ("cup_square", cup_square()),
            ("product_with_h3", product_with_h3()),
            ("indefinite", indefinite()),
        ] {
            assert!(a.validate().is_valid(), "{name}: {:?}", a.validate());
        }
    }

    #[test]
    fn odd_kernel_shape() {
        let a = odd_kernel();
        let w = a.omega().unwrap();
        assert_eq!(a.dim(3), 2);
        assert_eq!(kernel_basis(&a, &w, 2).unwrap().len(), 1);
        assert!(!hard_lefschetz(&a, &w).unwrap().holds);
    }

    #[test]
    fn product_with_h3_is_hard_lefschetz() {
        let a = product_with_h3();
        assert!(hard_lefschetz(&a, &a.omega().unwrap()).unwrap().holds);
    }

    #[test]
    fn singular_pairing_rejected() {
        let mut spec = CubicFormAlgebra::new(&["a"], &[(0, 0, 0, int(1))]);
        spec.pairing = Some(Matrix::zeros(1, 1));
        assert!(spec.build().is_err());
    }
}

//! Lefschetz maps of a degree-2 class, hard Lefschetz, primitive classes and the
//! cubic intersection form.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{CohomologyClass, GradedAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

pub(crate) fn check_omega(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<()> {
    if omega.degree() != 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            found: omega.degree(),
        });
    }
    if omega.coords().len() != a.dim(2) {
        return Err(Error::Dimension {
            location: "omega".into(),
            expected: a.dim(2),
            found: omega.coords().len(),
        });
    }
    Ok(())
}

pub(crate) fn require_dimension_six(a: &GradedAlgebra, what: &str) -> Result<()> {
    if a.top_degree() != 6 {
        return Err(Error::Inapplicable(format!(
            "{what} needs a base of top degree 6, got {}",
            a.top_degree()
        )));
    }
    Ok(())
}

/// Matrix of `β ↦ β ω` from `H^p` to `H^{p+2}`.
pub fn lefschetz_step(a: &GradedAlgebra, omega: &CohomologyClass, p: usize) -> Result<Matrix> {
    check_omega(a, omega)?;
    a.right_mul_matrix(omega, p)
}

/// Matrix of `β ↦ β ω^k` from `H^p` to `H^{p+2k}`.
pub fn omega_power_matrix(
    a: &GradedAlgebra,
    omega: &CohomologyClass,
    k: usize,
    p: usize,
) -> Result<Matrix> {
    check_omega(a, omega)?;
    let wk = a.power(omega, k)?;
    a.right_mul_matrix(&wk, p)
}

/// Canonical basis of `K^p = ker(ω: H^p → H^{p+2})`. Above degree `N - 2` the
/// target vanishes and `K^p = H^p`.
pub fn kernel_basis(a: &GradedAlgebra, omega: &CohomologyClass, p: usize) -> Result<Vec<CohomologyClass>> {
    check_omega(a, omega)?;
    if p > a.top_degree() {
        return Ok(Vec::new());
    }
    if p + 2 > a.top_degree() {
        return Ok((0..a.dim(p)).map(|i| a.basis_class(p, i)).collect());
    }
    Ok(lefschetz_step(a, omega, p)?
        .kernel_basis()
        .into_iter()
        .map(|v| CohomologyClass::raw(p, v))
        .collect())
}

/// Representatives of `Q^p = H^p / ω H^{p-2}`: the standard basis vectors at the
/// non-pivot coordinates of the image's echelon form.
pub fn cokernel_basis(a: &GradedAlgebra, omega: &CohomologyClass, p: usize) -> Result<Vec<CohomologyClass>> {
    check_omega(a, omega)?;
    if p > a.top_degree() {
        return Ok(Vec::new());
    }
    let indices = if p < 2 {
        (0..a.dim(p)).collect()
    } else {
        lefschetz_step(a, omega, p - 2)?.cokernel_indices()
    };
    Ok(indices.into_iter().map(|i| a.basis_class(p, i)).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HardLefschetz {
    pub holds: bool,
    /// Smallest `k` for which `ω^k: H^{n-k} → H^{n+k}` is not bijective.
    pub first_failure: Option<usize>,
    /// Every failing `k`, ascending.
    pub failing: Vec<usize>,
}

/// Tests `ω^k: H^{n-k} → H^{n+k}` for `0 <= k <= n`, `N = 2n`.
pub fn hard_lefschetz(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<HardLefschetz> {
    check_omega(a, omega)?;
    a.ensure_valid()?;
    let top = a.top_degree();
    if top % 2 == 1 {
        return Err(Error::Inapplicable(format!(
            "hard Lefschetz needs an even top degree, got {top}"
        )));
    }
    let n = top / 2;
    let mut failing = Vec::new();
    for k in 0..=n {
        let m = omega_power_matrix(a, omega, k, n - k)?;
        let bijective = m.rows() == m.cols() && m.rank() == m.cols();
        if !bijective {
            failing.push(k);
        }
    }
    Ok(HardLefschetz {
        holds: failing.is_empty(),
        first_failure: failing.first().copied(),
        failing,
    })
}

/// Per-degree summary of the Lefschetz step maps.
#[derive(Clone, Debug)]
pub struct LefschetzAnalysis {
    pub omega: CohomologyClass,
    /// `steps[p]` is the matrix of `ω: H^p → H^{p+2}` for `p + 2 <= N`.
    pub steps: Vec<Matrix>,
    pub kernels: Vec<Vec<CohomologyClass>>,
    pub cokernels: Vec<Vec<CohomologyClass>>,
    pub hard_lefschetz: HardLefschetz,
}

impl LefschetzAnalysis {
    pub fn new(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<Self> {
        let hard_lefschetz = hard_lefschetz(a, omega)?;
        let top = a.top_degree();
        let steps = (0..=top.saturating_sub(2))
            .filter(|p| p + 2 <= top)
            .map(|p| lefschetz_step(a, omega, p))
            .collect::<Result<_>>()?;
        let kernels = (0..=top).map(|p| kernel_basis(a, omega, p)).collect::<Result<_>>()?;
        let cokernels = (0..=top).map(|p| cokernel_basis(a, omega, p)).collect::<Result<_>>()?;
        Ok(LefschetzAnalysis {
            omega: omega.clone(),
            steps,
            kernels,
            cokernels,
            hard_lefschetz,
        })
    }

    pub fn kernel_dims(&self) -> Vec<usize> {
        self.kernels.iter().map(Vec::len).collect()
    }

    pub fn cokernel_dims(&self) -> Vec<usize> {
        self.cokernels.iter().map(Vec::len).collect()
    }

    pub fn step_ranks(&self) -> Vec<usize> {
        self.steps.iter().map(Matrix::rank).collect()
    }
}

/// Fully symmetric 3-tensor `λ_{ijk} = ∫ e_i e_j e_k` over a basis of `H^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicForm {
    n: usize,
    values: Vec<Scalar>,
}

impl CubicForm {
    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.values[(i * self.n + j) * self.n + k]
    }
}

/// `λ_{ijk} = ∫ e_i e_j e_k` in a caller-supplied basis of `H^2`.
pub fn lambda_tensor(a: &GradedAlgebra, basis: &[CohomologyClass]) -> Result<CubicForm> {
    if a.top_degree() != 6 {
        return Err(Error::Inapplicable("the cubic form needs top degree 6".into()));
    }
    if basis.iter().any(|e| e.degree() != 2 || e.coords().len() != a.dim(2)) {
        return Err(Error::InvalidArgument("basis vectors must be degree-2 classes".into()));
    }
    let rows: Vec<Vec<Scalar>> = basis.iter().map(|e| e.coords().to_vec()).collect();
    if basis.len() != a.dim(2) || (a.dim(2) > 0 && Matrix::from_rows(a.dim(2), &rows).rank() != a.dim(2)) {
        return Err(Error::InvalidArgument(format!(
            "{} vectors do not form a basis of H^2 (dimension {})",
            basis.len(),
            a.dim(2)
        )));
    }
    let n = basis.len();
    let mut values = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            let eij = a.mul(&basis[i], &basis[j])?;
            for k in 0..n {
                values.push(a.integrate(&a.mul(&eij, &basis[k])?)?);
            }
        }
    }
    Ok(CubicForm { n, values })
}

/// Basis of the primitive classes `P = {α ∈ H^2 : ω² α = 0}` and the cubic form in
/// the adapted basis `(ω, p_1, ..., p_m)` of `H^2`.
#[derive(Clone, Debug)]
pub struct PrimitiveData {
    pub omega: CohomologyClass,
    pub basis: Vec<CohomologyClass>,
    pub lambda: CubicForm,
}

impl PrimitiveData {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Primitive subspace of `H^2`. Refuses when hard Lefschetz fails.
pub fn primitive_subspace(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<PrimitiveData> {
    check_omega(a, omega)?;
    require_dimension_six(a, "the primitive subspace")?;
    let hl = hard_lefschetz(a, omega)?;
    if !hl.holds {
        return Err(Error::Inapplicable(format!(
            "hard Lefschetz fails at k = {}",
            hl.first_failure.expect("failure recorded")
        )));
    }
    let basis = primitive_basis_unchecked(a, omega)?;
    let mut adapted = vec![omega.clone()];
    adapted.extend(basis.iter().cloned());
    let lambda = lambda_tensor(a, &adapted)?;
    Ok(PrimitiveData {
        omega: omega.clone(),
        basis,
        lambda,
    })
}

pub(crate) fn primitive_basis_unchecked(
    a: &GradedAlgebra,
    omega: &CohomologyClass,
) -> Result<Vec<CohomologyClass>> {
    let phi = omega_power_matrix(a, omega, 2, 2)?;
    let basis = if phi.rows() == 1 {
        functional_kernel(phi.row(0))
    } else {
        phi.kernel_basis()
    };
    Ok(basis.into_iter().map(|v| CohomologyClass::raw(2, v)).collect())
}

/// Kernel of a single functional `φ`: `e_j` for `φ_j = 0`, and
/// `e_i - (φ_i/φ_{i'}) e_{i'}` for consecutive indices `i < i'` with nonzero `φ`,
/// sorted by leading index.
fn functional_kernel(phi: &[Scalar]) -> Vec<Vec<Scalar>> {
    let n = phi.len();
    let support: Vec<usize> = (0..n).filter(|&i| !phi[i].is_zero()).collect();
    let mut out: Vec<(usize, Vec<Scalar>)> = (0..n)
        .filter(|&j| phi[j].is_zero())
        .map(|j| {
            let mut v = vec![Scalar::zero(); n];
            v[j] = Scalar::one();
            (j, v)
        })
        .collect();
    for w in support.windows(2) {
        let (i, k) = (w[0], w[1]);
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        v[k] = -(&phi[i] / &phi[k]);
        out.push((i, v));
    }
    out.sort_by_key(|(lead, _)| *lead);
    out.into_iter().map(|(_, v)| v).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{projective_space, projective_space_named, tensor_product};
    use crate::scalar::int;

    fn cp1_cubed() -> GradedAlgebra {
        let f = |g| projective_space_named(1, g).unwrap();
        tensor_product(&tensor_product(&f("a"), &f("b")).unwrap(), &f("c")).unwrap()
    }

    fn class(a: &GradedAlgebra, v: &[i64]) -> CohomologyClass {
        a.class(2, v.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn step_map_determinant() {
        let x = cp1_cubed();
        let m = lefschetz_step(&x, &class(&x, &[1, 1, 1]), 2).unwrap();
        assert_eq!(m.determinant(), int(-2));
        assert!(lefschetz_step(&x, &class(&x, &[0, 0, 0]), 2).unwrap().is_zero());
        let cp3 = projective_space(3).unwrap();
        assert_eq!(lefschetz_step(&cp3, &class(&cp3, &[1]), 2).unwrap(), Matrix::identity(1));
    }

    #[test]
    fn omega_must_be_degree_two() {
        let cp3 = projective_space(3).unwrap();
        let h2 = cp3.basis_class(4, 0);
        assert!(matches!(
            lefschetz_step(&cp3, &h2, 0),
            Err(Error::WrongDegree { expected: 2, found: 4 })
        ));
    }

    #[test]
    fn kernels_and_cokernels() {
        let x = cp1_cubed();
        let w = class(&x, &[1, 1, 1]);
        assert!(kernel_basis(&x, &w, 2).unwrap().is_empty());
        assert_eq!(cokernel_basis(&x, &w, 2).unwrap().len(), 2);
        assert_eq!(kernel_basis(&x, &w, 4).unwrap().len(), 2);
        let cp3 = projective_space(3).unwrap();
        assert!(cokernel_basis(&cp3, &class(&cp3, &[1]), 2).unwrap().is_empty());
    }

    #[test]
    fn hard_lefschetz_examples() {
        let cp3 = projective_space(3).unwrap();
        assert!(hard_lefschetz(&cp3, &class(&cp3, &[1])).unwrap().holds);
        let x = cp1_cubed();
        assert!(hard_lefschetz(&x, &class(&x, &[1, 1, 1])).unwrap().holds);
        let degenerate = hard_lefschetz(&x, &class(&x, &[1, 1, 0])).unwrap();
        assert!(!degenerate.holds);
        assert!(degenerate.failing.contains(&3));
        // H^2 -> H^4 has rank 2
        assert_eq!(degenerate.first_failure, Some(1));
        assert_eq!(degenerate.failing, vec![1, 3]);
    }

    #[test]
    fn primitive_classes() {
        let cp3 = projective_space(3).unwrap();
        assert_eq!(primitive_subspace(&cp3, &class(&cp3, &[1])).unwrap().dim(), 0);
        let x = cp1_cubed();
        let p = primitive_subspace(&x, &class(&x, &[1, 1, 1])).unwrap();
        assert_eq!(p.basis, vec![class(&x, &[1, -1, 0]), class(&x, &[0, 1, -1])]);
        let y = tensor_product(&projective_space_named(1, "a").unwrap(), &projective_space(2).unwrap()).unwrap();
        assert_eq!(primitive_subspace(&y, &class(&y, &[1, 1])).unwrap().dim(), 1);
        assert!(primitive_subspace(&x, &class(&x, &[1, 1, 0])).unwrap_err().is_inapplicable());
    }

    #[test]
    fn cubic_form_values() {
        let x = cp1_cubed();
        let basis: Vec<_> = (0..3).map(|i| x.basis_class(2, i)).collect();
        let l = lambda_tensor(&x, &basis).unwrap();
        assert_eq!(*l.get(0, 1, 2), int(1));
        assert_eq!(*l.get(0, 0, 1), int(0));
        let cp3 = projective_space(3).unwrap();
        assert_eq!(*lambda_tensor(&cp3, &[cp3.basis_class(2, 0)]).unwrap().get(0, 0, 0), int(1));
        assert!(lambda_tensor(&x, &basis[..2]).is_err());
    }
}

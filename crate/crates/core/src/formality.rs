//! The quartic formality obstruction.
//!
//! For a hard Lefschetz base with primitive classes `P ⊂ H^2`, set
//! `F(α, β, γ, δ) = ∫ L⁻¹(αβ) γ δ`, where `L⁻¹: H^4 → H^2` inverts multiplication by
//! `ω`. `F` factors through `Sym²(Sym²P)`; its restriction to the kernel `K_M` of the
//! symmetrization map `Sym²(Sym²P) → Sym⁴P` vanishes exactly when the circle bundle is
//! formal. On the elements `a_{ijkl} = (e_i e_j)(e_k e_l) - (e_k e_j)(e_i e_l)`, which span
//! `K_M`, the value of `F` is the triple Massey product `⟨e_i, e_j, e_k⟩ ∪ e_l`.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{CohomologyClass, GradedAlgebra};
use crate::error::{Error, Result};
use crate::lefschetz::{lefschetz_step, primitive_subspace};
use crate::linalg::{self, Matrix};
use crate::scalar::{self, Scalar};
use crate::sym::{symmetrization_matrix, SymIndex};

/// Text recorded with every verdict: the algebraic criterion only decides formality
/// under this geometric assumption, which the engine cannot check.
pub const HYPOTHESIS: &str = "verdict assumes the input is the cohomology ring of the quasi-regular \
quotient of a simply connected compact Sasakian 7-manifold, with omega its Kaehler class";

#[derive(Clone, Debug)]
pub struct ObstructionKernel {
    pub index: SymIndex,
    /// Reduced row echelon basis of `K_M` in `Sym²(Sym²P)` coordinates.
    pub basis: Vec<Vec<Scalar>>,
}

impl ObstructionKernel {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// `K_M = ker(Sym²(Sym²P) → Sym⁴P)` for `dim P = m`.
pub fn obstruction_kernel(m: usize) -> ObstructionKernel {
    let index = SymIndex::new(m);
    let basis = if index.pair_pairs.is_empty() {
        Vec::new()
    } else {
        symmetrization_matrix(&index).kernel_basis()
    };
    ObstructionKernel { index, basis }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Formal,
    NonFormal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MasseyEntry {
    /// 1-based indices `(i, j, k, l)` into the primitive basis.
    pub indices: [usize; 4],
    pub value: Scalar,
}

#[derive(Clone, Debug)]
pub struct FormalityReport {
    pub m: usize,
    pub kernel: ObstructionKernel,
    /// `F` on each kernel basis vector, in order.
    pub values: Vec<Scalar>,
    pub verdict: Verdict,
    /// Index of the first kernel basis vector with a nonzero value.
    pub witness: Option<usize>,
    pub massey_table: Vec<MasseyEntry>,
}

/// `F` together with everything needed to evaluate it: `L⁻¹` and a basis of `P`.
#[derive(Clone, Debug)]
pub struct Obstruction<'a> {
    algebra: &'a GradedAlgebra,
    omega: CohomologyClass,
    lefschetz_inverse: Matrix,
    primitive: Vec<CohomologyClass>,
    index: SymIndex,
    /// `gram[a][b] = F(s_a, s_b)` over the `Sym²P` basis.
    gram: Vec<Vec<Scalar>>,
}

impl<'a> Obstruction<'a> {
    /// Uses the canonical basis of `P`. Refuses unless hard Lefschetz holds.
    pub fn new(a: &'a GradedAlgebra, omega: &CohomologyClass) -> Result<Self> {
        let prim = primitive_subspace(a, omega)?;
        Self::build(a, omega, prim.basis)
    }

    /// Uses a caller-chosen basis of `P`.
    pub fn with_primitive_basis(
        a: &'a GradedAlgebra,
        omega: &CohomologyClass,
        basis: Vec<CohomologyClass>,
    ) -> Result<Self> {
        let prim = primitive_subspace(a, omega)?;
        let dim2 = a.dim(2);
        if basis.len() != prim.dim() {
            return Err(Error::InvalidArgument(format!(
                "{} vectors given for a primitive space of dimension {}",
                basis.len(),
                prim.dim()
            )));
        }
        let canonical: Vec<Vec<Scalar>> = prim.basis.iter().map(|c| c.coords().to_vec()).collect();
        for (k, b) in basis.iter().enumerate() {
            if b.degree() != 2 || !linalg::in_span(dim2, &canonical, b.coords()) {
                return Err(Error::InvalidArgument(format!("basis vector {k} is not primitive")));
            }
        }
        let rows: Vec<Vec<Scalar>> = basis.iter().map(|c| c.coords().to_vec()).collect();
        if !rows.is_empty() && Matrix::from_rows(dim2, &rows).rank() != rows.len() {
            return Err(Error::InvalidArgument("primitive basis is linearly dependent".into()));
        }
        Self::build(a, omega, basis)
    }

    fn build(a: &'a GradedAlgebra, omega: &CohomologyClass, primitive: Vec<CohomologyClass>) -> Result<Self> {
        let lefschetz_inverse = lefschetz_step(a, omega, 2)?
            .inverse()
            .ok_or_else(|| Error::Inapplicable("omega: H^2 -> H^4 is not invertible".into()))?;
        let index = SymIndex::new(primitive.len());
        let mut ob = Obstruction {
            algebra: a,
            omega: omega.clone(),
            lefschetz_inverse,
            primitive,
            index,
            gram: Vec::new(),
        };
        let products: Vec<CohomologyClass> = ob
            .index
            .pairs
            .iter()
            .map(|&(i, j)| a.mul(&ob.primitive[i], &ob.primitive[j]))
            .collect::<Result<_>>()?;
        let inverses: Vec<CohomologyClass> = products.iter().map(|u| ob.lefschetz_inverse_of(u)).collect();
        ob.gram = inverses
            .iter()
            .map(|li| {
                products
                    .iter()
                    .map(|v| a.integrate(&a.mul(li, v)?))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<_>>()?;
        Ok(ob)
    }

    pub fn algebra(&self) -> &GradedAlgebra {
        self.algebra
    }

    pub fn omega(&self) -> &CohomologyClass {
        &self.omega
    }

    pub fn primitive_basis(&self) -> &[CohomologyClass] {
        &self.primitive
    }

    pub fn sym_index(&self) -> &SymIndex {
        &self.index
    }

    /// `L⁻¹(u)` for `u ∈ H^4`.
    pub fn lefschetz_inverse_of(&self, u: &CohomologyClass) -> CohomologyClass {
        assert_eq!(u.degree(), 4, "L^-1 is defined on H^4");
        CohomologyClass::raw(2, self.lefschetz_inverse.mul_vec(u.coords()))
    }

    fn check_primitive(&self, x: &CohomologyClass, name: &str) -> Result<()> {
        let a = self.algebra;
        if x.degree() != 2 {
            return Err(Error::WrongDegree {
                expected: 2,
                found: x.degree(),
            });
        }
        let w2 = a.mul(&self.omega, &self.omega)?;
        if !a.mul(&w2, x)?.is_zero() {
            return Err(Error::InvalidArgument(format!("{name} is not primitive")));
        }
        Ok(())
    }

    /// `F(α, β, γ, δ) = ∫ L⁻¹(αβ) γ δ` for primitive arguments.
    pub fn f(
        &self,
        alpha: &CohomologyClass,
        beta: &CohomologyClass,
        gamma: &CohomologyClass,
        delta: &CohomologyClass,
    ) -> Result<Scalar> {
        for (x, name) in [(alpha, "alpha"), (beta, "beta"), (gamma, "gamma"), (delta, "delta")] {
            self.check_primitive(x, name)?;
        }
        let a = self.algebra;
        let li = self.lefschetz_inverse_of(&a.mul(alpha, beta)?);
        a.integrate(&a.mul(&a.mul(&li, gamma)?, delta)?)
    }

    /// `F(s_a, s_b)` on the `Sym²P` basis.
    pub fn f_pairs(&self, a: usize, b: usize) -> &Scalar {
        &self.gram[a][b]
    }

    /// `F` extended linearly to `Sym²(Sym²P)`.
    pub fn evaluate(&self, v: &[Scalar]) -> Scalar {
        assert_eq!(v.len(), self.index.pair_pairs.len());
        v.iter()
            .zip(&self.index.pair_pairs)
            .filter(|(c, _)| !c.is_zero())
            .fold(Scalar::zero(), |acc, (c, &(x, y))| acc + c * &self.gram[x][y])
    }

    /// Coordinates of `a_{ijkl}` in `Sym²(Sym²P)`, 1-based indices.
    pub fn a_element(&self, idx: [usize; 4]) -> Result<Vec<Scalar>> {
        let m = self.primitive.len();
        if idx.iter().any(|&x| x == 0 || x > m) {
            return Err(Error::InvalidArgument(format!(
                "Massey indices {idx:?} outside 1..={m}"
            )));
        }
        let [i, j, k, l] = idx.map(|x| x - 1);
        let first = self.index.element(i, j, k, l);
        let second = self.index.element(k, j, i, l);
        Ok(first.iter().zip(&second).map(|(x, y)| x - y).collect())
    }

    /// `⟨e_i, e_j, e_k⟩ ∪ e_l = F(a_{ijkl})`, 1-based indices.
    pub fn massey(&self, idx: [usize; 4]) -> Result<Scalar> {
        let [i, j, k, l] = idx;
        let m = self.primitive.len();
        if idx.iter().any(|&x| x == 0 || x > m) {
            return Err(Error::InvalidArgument(format!(
                "Massey indices {idx:?} outside 1..={m}"
            )));
        }
        let e = |t: usize| &self.primitive[t - 1];
        Ok(self.f(e(i), e(j), e(k), e(l))? - self.f(e(k), e(j), e(i), e(l))?)
    }

    /// All quadruples in lexicographic order.
    pub fn massey_table(&self) -> Result<Vec<MasseyEntry>> {
        let m = self.primitive.len();
        let mut out = Vec::with_capacity(m.pow(4));
        for i in 1..=m {
            for j in 1..=m {
                for k in 1..=m {
                    for l in 1..=m {
                        let indices = [i, j, k, l];
                        out.push(MasseyEntry {
                            indices,
                            value: self.massey(indices)?,
                        });
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn report(&self) -> FormalityReport {
        let kernel = obstruction_kernel(self.primitive.len());
        let values: Vec<Scalar> = kernel.basis.iter().map(|v| self.evaluate(v)).collect();
        let witness = values.iter().position(|x| !x.is_zero());
        FormalityReport {
            m: self.primitive.len(),
            verdict: if witness.is_some() { Verdict::NonFormal } else { Verdict::Formal },
            witness,
            values,
            kernel,
            massey_table: Vec::new(),
        }
    }
}

/// `F(α, β, γ, δ)` for primitive classes.
pub fn f_eval(
    a: &GradedAlgebra,
    omega: &CohomologyClass,
    alpha: &CohomologyClass,
    beta: &CohomologyClass,
    gamma: &CohomologyClass,
    delta: &CohomologyClass,
) -> Result<Scalar> {
    Obstruction::new(a, omega)?.f(alpha, beta, gamma, delta)
}

/// Values of `F_M` on the kernel basis and the formality verdict.
pub fn evaluate_f_m(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<FormalityReport> {
    Ok(Obstruction::new(a, omega)?.report())
}

/// `⟨e_i, e_j, e_k⟩ ∪ e_l` over the canonical primitive basis, 1-based indices.
pub fn massey_triple(a: &GradedAlgebra, omega: &CohomologyClass, idx: [usize; 4]) -> Result<Scalar> {
    Obstruction::new(a, omega)?.massey(idx)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LambdaCrosscheck {
    pub applicable: bool,
    /// Sign of the form `(α, β) ↦ ∫ αβω` on `P` when it is definite.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub form_sign: Option<i32>,
    /// Largest `|F_exact - F_orthonormal|` over the kernel basis.
    pub max_abs_discrepancy: f64,
    /// Same comparison for `2 λ_{ij0} λ_{kl0} + Σ_t λ_{ijt} λ_{klt}`, i.e. without the
    /// normalization of the `ω` term and the sign of the form.
    pub uncorrected_discrepancy: f64,
}

/// Floating-point orthonormal frame `e_0 = ω/|ω|, e_1..e_m` of `H^2` and the cubic
/// form `λ` in that frame.
#[derive(Clone, Debug)]
pub struct OrthonormalFrame {
    pub form_sign: i32,
    pub volume_sign: i32,
    /// `frame[t]` in the stored `H^2` coordinates.
    pub frame: Vec<Vec<f64>>,
    /// Primitive basis coordinates in the frame: `p_r = Σ_t coords[r][t] e_t`, `t >= 1`.
    pub coords: Vec<Vec<f64>>,
    lambda: Vec<f64>,
    size: usize,
}

impl OrthonormalFrame {
    pub fn lambda(&self, i: usize, j: usize, k: usize) -> f64 {
        self.lambda[(i * self.size + j) * self.size + k]
    }

    /// `sign(∫ω³)·½ λ_{ij0} λ_{kl0} + ε Σ_{t>0} λ_{ijt} λ_{klt}`, indices into the frame.
    pub fn f(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.f_with(i, j, k, l, 0.5 * self.volume_sign as f64, self.form_sign as f64)
    }

    pub fn f_with(&self, i: usize, j: usize, k: usize, l: usize, c0: f64, c1: f64) -> f64 {
        let rest: f64 = (1..self.size).map(|t| self.lambda(i, j, t) * self.lambda(k, l, t)).sum();
        c0 * self.lambda(i, j, 0) * self.lambda(k, l, 0) + c1 * rest
    }

    /// `F(p_a, p_b, p_c, p_d)` on the primitive basis, through the frame formula.
    pub fn f_primitive(&self, idx: [usize; 4], c0: f64, c1: f64) -> f64 {
        let m = self.coords.len();
        let mut total = 0.0;
        for s in 1..=m {
            for t in 1..=m {
                for u in 1..=m {
                    for v in 1..=m {
                        let w = self.coords[idx[0]][s - 1]
                            * self.coords[idx[1]][t - 1]
                            * self.coords[idx[2]][u - 1]
                            * self.coords[idx[3]][v - 1];
                        if w != 0.0 {
                            total += w * self.f_with(s, t, u, v, c0, c1);
                        }
                    }
                }
            }
        }
        total
    }
}

/// Exact sign of a symmetric matrix if it is definite: `Some(1)`, `Some(-1)`, or `None`.
/// The empty matrix counts as definite.
pub fn definite_sign(gram: &Matrix) -> Option<i32> {
    let n = gram.rows();
    if n == 0 {
        return Some(1);
    }
    let minors: Vec<i32> = (1..=n).map(|k| scalar::sign(&gram.leading(k).determinant())).collect();
    if minors.iter().all(|&s| s > 0) {
        Some(1)
    } else if minors.iter().enumerate().all(|(k, &s)| s == if k % 2 == 0 { -1 } else { 1 }) {
        Some(-1)
    } else {
        None
    }
}

impl Obstruction<'_> {
    /// Gram matrix of `(α, β) ↦ ∫ αβω` on the primitive basis.
    pub fn primitive_form(&self) -> Result<Matrix> {
        let a = self.algebra;
        let m = self.primitive.len();
        let mut g = Matrix::zeros(m, m);
        for r in 0..m {
            let rw = a.mul(&self.primitive[r], &self.omega)?;
            for s in 0..m {
                g[(r, s)] = a.integrate(&a.mul(&rw, &self.primitive[s])?)?;
            }
        }
        Ok(g)
    }

    /// Orthonormal frame, or `None` when the form on `P` is indefinite.
    pub fn orthonormal_frame(&self) -> Result<Option<OrthonormalFrame>> {
        let a = self.algebra;
        let g = self.primitive_form()?;
        let Some(eps) = definite_sign(&g) else {
            return Ok(None);
        };
        let w3 = a.integrate(&a.power(&self.omega, 3)?)?;
        let volume_sign = scalar::sign(&w3);
        let m = self.primitive.len();
        let dim2 = a.dim(2);
        let gf: Vec<Vec<f64>> = (0..m)
            .map(|r| (0..m).map(|s| eps as f64 * scalar::to_f64(&g[(r, s)])).collect())
            .collect();

        // Gram-Schmidt on the primitive basis for the positive form eps * G;
        // r_mat[t] holds the coefficients of e_{t+1} in the primitive basis.
        let mut r_mat: Vec<Vec<f64>> = Vec::with_capacity(m);
        let inner = |x: &[f64], y: &[f64]| -> f64 {
            let mut s = 0.0;
            for r in 0..m {
                for q in 0..m {
                    s += x[r] * gf[r][q] * y[q];
                }
            }
            s
        };
        for r in 0..m {
            let mut v = vec![0.0; m];
            v[r] = 1.0;
            for prev in &r_mat {
                let c = inner(&v, prev);
                for q in 0..m {
                    v[q] -= c * prev[q];
                }
            }
            let norm = inner(&v, &v).sqrt();
            for x in &mut v {
                *x /= norm;
            }
            r_mat.push(v);
        }
        // coords[r][t] = <p_r, e_{t+1}> for the positive form
        let coords: Vec<Vec<f64>> = (0..m)
            .map(|r| {
                let mut unit = vec![0.0; m];
                unit[r] = 1.0;
                r_mat.iter().map(|e| inner(&unit, e)).collect()
            })
            .collect();

        let scale = (scalar::to_f64(&w3).abs() / 2.0).sqrt();
        let mut frame = vec![self.omega.coords().iter().map(|x| scalar::to_f64(x) / scale).collect::<Vec<f64>>()];
        for e in &r_mat {
            let mut v = vec![0.0; dim2];
            for (r, c) in e.iter().enumerate() {
                for (k, x) in self.primitive[r].coords().iter().enumerate() {
                    v[k] += c * scalar::to_f64(x);
                }
            }
            frame.push(v);
        }

        let basis: Vec<CohomologyClass> = (0..dim2).map(|k| a.basis_class(2, k)).collect();
        let cubic = crate::lefschetz::lambda_tensor(a, &basis)?;
        let size = m + 1;
        let mut lambda = vec![0.0; size * size * size];
        for i in 0..size {
            for j in 0..size {
                for k in 0..size {
                    let mut s = 0.0;
                    for x in 0..dim2 {
                        for y in 0..dim2 {
                            for z in 0..dim2 {
                                let c = cubic.get(x, y, z);
                                if !c.is_zero() {
                                    s += scalar::to_f64(c) * frame[i][x] * frame[j][y] * frame[k][z];
                                }
                            }
                        }
                    }
                    lambda[(i * size + j) * size + k] = s;
                }
            }
        }
        Ok(Some(OrthonormalFrame {
            form_sign: eps,
            volume_sign,
            frame,
            coords,
            lambda,
            size,
        }))
    }

    /// Compares exact `F_M` with the orthonormal-frame formula on the kernel basis.
    pub fn lambda_crosscheck(&self) -> Result<LambdaCrosscheck> {
        let Some(frame) = self.orthonormal_frame()? else {
            return Ok(LambdaCrosscheck {
                applicable: false,
                form_sign: None,
                max_abs_discrepancy: 0.0,
                uncorrected_discrepancy: 0.0,
            });
        };
        let report = self.report();
        let via_frame = |c0: f64, c1: f64, v: &[Scalar]| -> f64 {
            v.iter()
                .zip(&self.index.pair_pairs)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, &(x, y))| {
                    let (i, j) = self.index.pairs[x];
                    let (k, l) = self.index.pairs[y];
                    scalar::to_f64(c) * frame.f_primitive([i, j, k, l], c0, c1)
                })
                .sum()
        };
        let mut worst = 0.0f64;
        let mut worst_uncorrected = 0.0f64;
        for (v, exact) in report.kernel.basis.iter().zip(&report.values) {
            let exact = scalar::to_f64(exact);
            let derived = via_frame(0.5 * frame.volume_sign as f64, frame.form_sign as f64, v);
            let uncorrected = via_frame(2.0, 1.0, v);
            worst = worst.max((derived - exact).abs());
            worst_uncorrected = worst_uncorrected.max((uncorrected - exact).abs());
        }
        Ok(LambdaCrosscheck {
            applicable: true,
            form_sign: Some(frame.form_sign),
            max_abs_discrepancy: worst,
            uncorrected_discrepancy: worst_uncorrected,
        })
    }
}

/// Floating-point cross-check of `F_M` through the cubic form in an orthonormal frame.
pub fn lambda_crosscheck(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<LambdaCrosscheck> {
    Obstruction::new(a, omega)?.lambda_crosscheck()
}

impl FormalityReport {
    pub fn is_formal(&self) -> bool {
        self.verdict == Verdict::Formal
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::scalar::{frac, int};

    fn setup(name: &str) -> (GradedAlgebra, CohomologyClass) {
        let a = builtin(name).unwrap();
        let w = a.omega().unwrap();
        (a, w)
    }

    fn c2(a: &GradedAlgebra, v: &[i64]) -> CohomologyClass {
        a.class(2, v.iter().map(|&x| int(x)).collect()).unwrap()
    }

    #[test]
    fn kernel_dimensions() {
        assert_eq!(obstruction_kernel(0).dim(), 0);
        assert_eq!(obstruction_kernel(1).dim(), 0);
        assert_eq!(obstruction_kernel(2).dim(), 1);
        assert_eq!(obstruction_kernel(3).dim(), 6);
        let k = obstruction_kernel(2);
        let idx = &k.index;
        let mut expected = vec![int(0); 6];
        expected[idx.pair_pair(idx.pair(0, 0), idx.pair(1, 1))] = int(1);
        expected[idx.pair_pair(idx.pair(0, 1), idx.pair(0, 1))] = int(-1);
        assert_eq!(k.basis, vec![expected]);
    }

    #[test]
    fn f_values_on_cp1_cubed() {
        let (a, w) = setup("cp1xcp1xcp1");
        let p1 = c2(&a, &[1, -1, 0]);
        let p2 = c2(&a, &[0, 1, -1]);
        assert_eq!(f_eval(&a, &w, &p1, &p1, &p2, &p2).unwrap(), int(2));
        assert_eq!(f_eval(&a, &w, &p1, &p2, &p1, &p2).unwrap(), frac(-5, 2));
        assert_eq!(
            f_eval(&a, &w, &p2, &p1, &p1, &p2).unwrap(),
            f_eval(&a, &w, &p1, &p2, &p1, &p2).unwrap()
        );
        let ob = Obstruction::new(&a, &w).unwrap();
        // L^-1(-2ab) = -a - b + c
        let ab = a.basis_class(4, 0).scale(&int(-2));
        assert_eq!(ob.lefschetz_inverse_of(&ab), c2(&a, &[-1, -1, 1]));
        assert!(f_eval(&a, &w, &a.basis_class(2, 0), &p1, &p1, &p1).is_err());
    }

    #[test]
    fn verdicts() {
        let (a, w) = setup("cp3");
        let r = evaluate_f_m(&a, &w).unwrap();
        assert!(r.is_formal());
        assert_eq!(r.m, 0);
        let (a, w) = setup("cp1xcp1xcp1");
        let r = evaluate_f_m(&a, &w).unwrap();
        assert_eq!(r.verdict, Verdict::NonFormal);
        assert_eq!(r.values, vec![frac(9, 2)]);
        assert_eq!(r.witness, Some(0));
        let (a, w) = setup("cp1xcp2");
        let r = evaluate_f_m(&a, &w).unwrap();
        assert!(r.is_formal());
        assert_eq!((r.m, r.kernel.dim()), (1, 0));
        let (a, w) = setup("synthetic-oddker");
        assert!(evaluate_f_m(&a, &w).unwrap_err().is_inapplicable());
    }

    #[test]
    fn massey_values() {
        let (a, w) = setup("cp1xcp1xcp1");
        assert_eq!(massey_triple(&a, &w, [2, 1, 1, 2]).unwrap(), frac(-9, 2));
        assert_eq!(massey_triple(&a, &w, [1, 2, 2, 1]).unwrap(), frac(-9, 2));
        assert_eq!(massey_triple(&a, &w, [1, 2, 1, 2]).unwrap(), int(0));
        assert_eq!(massey_triple(&a, &w, [1, 1, 1, 1]).unwrap(), int(0));
        assert!(massey_triple(&a, &w, [0, 1, 1, 1]).is_err());
        assert!(massey_triple(&a, &w, [3, 1, 1, 1]).is_err());
        let (a, w) = setup("cp3");
        assert!(Obstruction::new(&a, &w).unwrap().massey_table().unwrap().is_empty());
    }

    #[test]
    fn a_elements_lie_in_the_kernel() {
        let (a, w) = setup("synthetic-indefinite");
        let ob = Obstruction::new(&a, &w).unwrap();
        let sym = symmetrization_matrix(ob.sym_index());
        for e in ob.massey_table().unwrap() {
            let v = ob.a_element(e.indices).unwrap();
            assert!(linalg::is_zero_vec(&sym.mul_vec(&v)));
            assert_eq!(ob.evaluate(&v), e.value);
        }
    }

    #[test]
    fn definiteness() {
        let mut g = Matrix::identity(2);
        assert_eq!(definite_sign(&g), Some(1));
        assert_eq!(definite_sign(&g.scale(&int(-1))), Some(-1));
        g[(1, 1)] = int(-1);
        assert_eq!(definite_sign(&g), None);
        assert_eq!(definite_sign(&Matrix::zeros(0, 0)), Some(1));
    }

    #[test]
    fn crosscheck() {
        let (a, w) = setup("cp1xcp1xcp1");
        let c = lambda_crosscheck(&a, &w).unwrap();
        assert!(c.applicable);
        assert_eq!(c.form_sign, Some(-1));
        assert!(c.max_abs_discrepancy < 1e-9, "{c:?}");
        assert!(c.uncorrected_discrepancy > 1e-3);
        let (a, w) = setup("cp3");
        let c = lambda_crosscheck(&a, &w).unwrap();
        assert!(c.applicable);
        assert_eq!(c.max_abs_discrepancy, 0.0);
        let (a, w) = setup("synthetic-indefinite");
        assert!(!lambda_crosscheck(&a, &w).unwrap().applicable);
        assert!(evaluate_f_m(&a, &w).is_ok());
    }

    #[test]
    fn frame_normalization() {
        let (a, w) = setup("cp1xcp1xcp1");
        let frame = Obstruction::new(&a, &w).unwrap().orthonormal_frame().unwrap().unwrap();
        // ∫ω³ = 6, so e_0 = ω/√3 and λ_000 = 2/√3
        assert!((frame.lambda(0, 0, 0) - 2.0 / 3f64.sqrt()).abs() < 1e-12);
        assert!((frame.lambda(1, 1, 0) + 1.0 / 3f64.sqrt()).abs() < 1e-12);
    }
}

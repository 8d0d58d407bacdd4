//! The model `(H ⊗ Λx, dx = ω)` of the circle bundle and the partial minimal model
//! through degree 3.
//!
//! Elements of the model in degree `k` are pairs `h + h'x` with `h ∈ H^k` and
//! `h' ∈ H^{k-1}`, stored as the concatenated coordinate vector `[h, h']`.
//! The differential is `d(h) = 0`, `d(h x) = (-1)^{|h|} h ω`.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::algebra::{CohomologyClass, GradedAlgebra};
use crate::error::{Error, Result};
use crate::formality::{obstruction_kernel, Obstruction, Verdict};
use crate::lefschetz::{check_omega, require_dimension_six};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// Top degree of the model: the bundle has dimension 7.
pub const MODEL_TOP: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelElement {
    pub degree: usize,
    /// Coordinates in `H^degree` (empty above the top degree of `H`).
    pub h: Vec<Scalar>,
    /// Coordinates of the `x` coefficient in `H^{degree-1}` (empty in degree 0).
    pub hx: Vec<Scalar>,
}

impl ModelElement {
    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.h) && linalg::is_zero_vec(&self.hx)
    }

    pub fn coords(&self) -> Vec<Scalar> {
        let mut v = self.h.clone();
        v.extend(self.hx.iter().cloned());
        v
    }
}

/// `(degree, index)` of a model basis element.
pub type BasisIndex = (usize, usize);

#[derive(Clone, Debug)]
pub struct SullivanModel {
    algebra: GradedAlgebra,
    omega: CohomologyClass,
}

fn h_dim(a: &GradedAlgebra, k: usize) -> usize {
    if k <= a.top_degree() {
        a.dim(k)
    } else {
        0
    }
}

impl SullivanModel {
    pub fn algebra(&self) -> &GradedAlgebra {
        &self.algebra
    }

    pub fn omega(&self) -> &CohomologyClass {
        &self.omega
    }

    /// `dim H^k + dim H^{k-1}`.
    pub fn dim(&self, k: usize) -> usize {
        let below = if k == 0 { 0 } else { h_dim(&self.algebra, k - 1) };
        h_dim(&self.algebra, k) + below
    }

    pub fn zero(&self, k: usize) -> ModelElement {
        ModelElement {
            degree: k,
            h: vec![Scalar::zero(); h_dim(&self.algebra, k)],
            hx: vec![Scalar::zero(); if k == 0 { 0 } else { h_dim(&self.algebra, k - 1) }],
        }
    }

    /// `h` viewed in the model.
    pub fn base(&self, h: &CohomologyClass) -> ModelElement {
        let mut e = self.zero(h.degree());
        e.h = h.coords().to_vec();
        e
    }

    /// `h·x`.
    pub fn times_x(&self, h: &CohomologyClass) -> ModelElement {
        let mut e = self.zero(h.degree() + 1);
        e.hx = h.coords().to_vec();
        e
    }

    pub fn from_coords(&self, k: usize, v: &[Scalar]) -> ModelElement {
        let n = h_dim(&self.algebra, k);
        assert_eq!(v.len(), self.dim(k), "coordinate length");
        ModelElement {
            degree: k,
            h: v[..n].to_vec(),
            hx: v[n..].to_vec(),
        }
    }

    fn h_class(&self, k: usize, v: &[Scalar]) -> CohomologyClass {
        CohomologyClass::raw(k, v.to_vec())
    }

    pub fn d(&self, u: &ModelElement) -> Result<ModelElement> {
        let k = u.degree;
        let mut out = self.zero(k + 1);
        if k == 0 || k > MODEL_TOP {
            return Ok(out);
        }
        let hx = self.h_class(k - 1, &u.hx);
        if k < self.algebra.top_degree() {
            let mut prod = self.algebra.mul(&hx, &self.omega)?;
            if (k - 1) % 2 == 1 {
                prod = prod.scale(&-Scalar::one());
            }
            out.h = prod.into_coords();
        }
        Ok(out)
    }

    fn mul_h(&self, u: &CohomologyClass, v: &CohomologyClass) -> Result<Option<CohomologyClass>> {
        if u.degree() + v.degree() > self.algebra.top_degree() {
            return Ok(None);
        }
        self.algebra.mul(u, v).map(Some)
    }

    /// `(h1 + g1 x)(h2 + g2 x) = h1 h2 + (h1 g2 + (-1)^{|h2|} g1 h2) x`.
    pub fn mul(&self, u: &ModelElement, v: &ModelElement) -> Result<ModelElement> {
        let k = u.degree + v.degree;
        let mut out = self.zero(k);
        if k > MODEL_TOP {
            return Ok(out);
        }
        let n = self.algebra.top_degree();
        let h1 = (u.degree <= n).then(|| self.h_class(u.degree, &u.h));
        let h2 = (v.degree <= n).then(|| self.h_class(v.degree, &v.h));
        let g1 = (u.degree >= 1).then(|| self.h_class(u.degree - 1, &u.hx));
        let g2 = (v.degree >= 1).then(|| self.h_class(v.degree - 1, &v.hx));
        if let (Some(a), Some(b)) = (&h1, &h2) {
            if let Some(p) = self.mul_h(a, b)? {
                out.h = p.into_coords();
            }
        }
        if let (Some(a), Some(b)) = (&h1, &g2) {
            if let Some(p) = self.mul_h(a, b)? {
                linalg::axpy(&mut out.hx, &Scalar::one(), p.coords());
            }
        }
        if let (Some(a), Some(b)) = (&g1, &h2) {
            if let Some(p) = self.mul_h(a, b)? {
                let s = if v.degree % 2 == 1 { -Scalar::one() } else { Scalar::one() };
                linalg::axpy(&mut out.hx, &s, p.coords());
            }
        }
        Ok(out)
    }

    pub fn basis_element(&self, k: usize, i: usize) -> ModelElement {
        let mut v = vec![Scalar::zero(); self.dim(k)];
        v[i] = Scalar::one();
        self.from_coords(k, &v)
    }

    /// Matrix of `d: M^k → M^{k+1}`.
    pub fn differential_matrix(&self, k: usize) -> Result<Matrix> {
        let cols: Vec<Vec<Scalar>> = (0..self.dim(k))
            .map(|i| self.d(&self.basis_element(k, i)).map(|e| e.coords()))
            .collect::<Result<_>>()?;
        if cols.is_empty() {
            return Ok(Matrix::zeros(self.dim(k + 1), 0));
        }
        Ok(Matrix::from_columns(self.dim(k + 1), &cols))
    }

    /// Degree pairs or basis elements where `d² ≠ 0`.
    pub fn d_squared_failures(&self) -> Result<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for k in 0..=MODEL_TOP {
            for i in 0..self.dim(k) {
                if !self.d(&self.d(&self.basis_element(k, i))?)?.is_zero() {
                    out.push((k, i));
                }
            }
        }
        Ok(out)
    }

    /// Basis pairs where `d(uv) ≠ (du)v + (-1)^{|u|} u(dv)`.
    pub fn derivation_failures(&self) -> Result<Vec<(BasisIndex, BasisIndex)>> {
        let mut out = Vec::new();
        for k in 0..=MODEL_TOP {
            for l in 0..=MODEL_TOP - k {
                for i in 0..self.dim(k) {
                    let u = self.basis_element(k, i);
                    let du = self.d(&u)?;
                    for j in 0..self.dim(l) {
                        let v = self.basis_element(l, j);
                        let lhs = self.d(&self.mul(&u, &v)?)?;
                        let a = self.mul(&du, &v)?;
                        let b = self.mul(&u, &self.d(&v)?)?;
                        let sign = if k % 2 == 1 { -Scalar::one() } else { Scalar::one() };
                        let mut rhs = a.coords();
                        linalg::axpy(&mut rhs, &sign, &b.coords());
                        if lhs.coords() != rhs {
                            out.push(((k, i), (l, j)));
                        }
                    }
                }
            }
        }
        Ok(out)
    }
}

/// The model `(H ⊗ Λx, dx = ω)`; checks `d² = 0` before returning.
pub fn build_sullivan_model(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<SullivanModel> {
    a.ensure_valid()?;
    check_omega(a, omega)?;
    require_dimension_six(a, "the circle bundle model")?;
    let s = SullivanModel {
        algebra: a.clone(),
        omega: omega.clone(),
    };
    let bad = s.d_squared_failures()?;
    if let Some((k, i)) = bad.first() {
        return Err(Error::InvalidAlgebra(format!("d^2 != 0 on basis element {i} of degree {k}")));
    }
    Ok(s)
}

/// Cohomology of a single degree of a cochain complex, with a normal form for classes.
#[derive(Clone, Debug)]
pub struct DegreeCohomology {
    pub space_dim: usize,
    /// Cocycles whose classes form a basis.
    pub representatives: Vec<Vec<Scalar>>,
    /// Basis of the coboundaries.
    pub boundaries: Vec<Vec<Scalar>>,
}

impl DegreeCohomology {
    /// `d_in: C^{k-1} → C^k`, `d_out: C^k → C^{k+1}`.
    pub fn new(space_dim: usize, d_in: &Matrix, d_out: &Matrix) -> Self {
        let cocycles = if d_out.rows() == 0 {
            Matrix::identity(space_dim).row_vecs()
        } else {
            d_out.kernel_basis()
        };
        let boundaries = if d_in.cols() == 0 {
            Vec::new()
        } else {
            d_in.image_basis()
        };
        let mut span = boundaries.clone();
        let mut representatives = Vec::new();
        for z in cocycles {
            if !linalg::in_span(space_dim, &span, &z) {
                span.push(z.clone());
                representatives.push(z);
            }
        }
        DegreeCohomology {
            space_dim,
            representatives,
            boundaries,
        }
    }

    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    /// Coordinates of the class of a cocycle in the representative basis, or `None`
    /// when `v` is not a cocycle modulo boundaries in the span.
    pub fn class_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let mut cols = self.representatives.clone();
        cols.extend(self.boundaries.iter().cloned());
        if cols.is_empty() {
            return linalg::is_zero_vec(v).then(Vec::new);
        }
        let m = Matrix::from_columns(self.space_dim, &cols);
        let sol = m.solve(v)?;
        Some(sol[..self.representatives.len()].to_vec())
    }
}

#[derive(Clone, Debug)]
pub struct ModelCohomology {
    pub dims: Vec<usize>,
    pub degrees: Vec<DegreeCohomology>,
}

/// Dimensions and representatives of `H^k` of the model, `k = 0..=7`, by direct
/// kernel and image computation.
pub fn model_cohomology(s: &SullivanModel) -> Result<ModelCohomology> {
    let mut degrees = Vec::with_capacity(MODEL_TOP + 1);
    for k in 0..=MODEL_TOP {
        let d_in = if k == 0 {
            Matrix::zeros(s.dim(0), 0)
        } else {
            s.differential_matrix(k - 1)?
        };
        let d_out = s.differential_matrix(k)?;
        degrees.push(DegreeCohomology::new(s.dim(k), &d_in, &d_out));
    }
    Ok(ModelCohomology {
        dims: degrees.iter().map(|d| d.dim()).collect(),
        degrees,
    })
}

impl SullivanModel {
    /// Representatives of `H^k` as model elements.
    pub fn representatives(&self, c: &ModelCohomology, k: usize) -> Vec<ModelElement> {
        c.degrees[k].representatives.iter().map(|v| self.from_coords(k, v)).collect()
    }
}

/// Generators `V² = P`, `V³ = C³ ⊕ N³` with `C³ = H³`, `N³ = Sym²P`, and the map `ρ`
/// into the circle bundle model.
///
/// The free algebra `ΛV` is kept through degree 4, where it is `Λ²V² = Sym²P`.
/// Degree-3 coordinates are `[c_1..c_{b3}, n_1..n_s]`.
#[derive(Clone, Debug)]
pub struct PartialMinimalModel {
    pub model: SullivanModel,
    pub primitive: Vec<CohomologyClass>,
    /// `n_a ↦ p_i p_j` for `pairs[a] = (i, j)`.
    pub pairs: Vec<(usize, usize)>,
    pub b3: usize,
    /// `d: ΛV^3 → ΛV^4`.
    pub d3: Matrix,
    /// `ρ` in degrees 2, 3, 4, as matrices into the model.
    pub rho2: Matrix,
    pub rho3: Matrix,
    pub rho4: Matrix,
    /// Columns `ρ(d g) - d(ρ g)` for each generator of degree 2 then 3.
    pub chain_residuals: Vec<Vec<Scalar>>,
}

impl PartialMinimalModel {
    pub fn m(&self) -> usize {
        self.primitive.len()
    }

    pub fn s(&self) -> usize {
        self.pairs.len()
    }

    pub fn generator_dims(&self) -> GeneratorDims {
        GeneratorDims {
            v2: self.m(),
            c3: self.b3,
            n3: self.s(),
        }
    }

    pub fn is_chain_map(&self) -> bool {
        self.chain_residuals.iter().all(|r| linalg::is_zero_vec(r))
    }

    /// Rank of `d` restricted to `N³`.
    pub fn d_rank_on_n3(&self) -> usize {
        let cols: Vec<Vec<Scalar>> = (self.b3..self.b3 + self.s()).map(|c| self.d3.column(c)).collect();
        if cols.is_empty() {
            0
        } else {
            Matrix::from_columns(self.s(), &cols).rank()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GeneratorDims {
    pub v2: usize,
    pub c3: usize,
    pub n3: usize,
}

fn rho_n(ob: &Obstruction<'_>, i: usize, j: usize) -> Result<CohomologyClass> {
    let a = ob.algebra();
    let p = ob.primitive_basis();
    Ok(ob.lefschetz_inverse_of(&a.mul(&p[i], &p[j])?))
}

/// The partial minimal model; requires hard Lefschetz. Checks at build time that
/// `ρ` is a chain map, `d² = 0` and `d` is injective on `N³`.
pub fn build_partial_minimal_model(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<PartialMinimalModel> {
    let model = build_sullivan_model(a, omega)?;
    let ob = Obstruction::new(a, omega)?;
    let primitive = ob.primitive_basis().to_vec();
    let pairs = ob.sym_index().pairs.clone();
    let (m, s, b3) = (primitive.len(), pairs.len(), a.dim(3));

    let mut d3 = Matrix::zeros(s, b3 + s);
    for k in 0..s {
        d3[(k, b3 + k)] = Scalar::one();
    }

    let col = |e: ModelElement| e.coords();
    let rho2_cols: Vec<Vec<Scalar>> = primitive.iter().map(|p| col(model.base(p))).collect();
    let mut rho3_cols: Vec<Vec<Scalar>> = (0..b3).map(|c| col(model.base(&a.basis_class(3, c)))).collect();
    for &(i, j) in &pairs {
        rho3_cols.push(col(model.times_x(&rho_n(&ob, i, j)?)));
    }
    let rho4_cols: Vec<Vec<Scalar>> = pairs
        .iter()
        .map(|&(i, j)| a.mul(&primitive[i], &primitive[j]).map(|u| col(model.base(&u))))
        .collect::<Result<_>>()?;
    let mk = |rows: usize, cols: &[Vec<Scalar>]| {
        if cols.is_empty() {
            Matrix::zeros(rows, 0)
        } else {
            Matrix::from_columns(rows, cols)
        }
    };
    let rho2 = mk(model.dim(2), &rho2_cols);
    let rho3 = mk(model.dim(3), &rho3_cols);
    let rho4 = mk(model.dim(4), &rho4_cols);

    // d vanishes on V², so ρ(d p) = 0; compare with d(ρ p).
    let mut chain_residuals = Vec::with_capacity(m + b3 + s);
    for c in &rho2_cols {
        let d = model.d(&model.from_coords(2, c))?.coords();
        chain_residuals.push(d.iter().map(|x| -x).collect());
    }
    for (g, c) in rho3_cols.iter().enumerate() {
        let rho_dg = rho4.mul_vec(&d3.column(g));
        let d_rho = model.d(&model.from_coords(3, c))?.coords();
        chain_residuals.push(rho_dg.iter().zip(&d_rho).map(|(x, y)| x - y).collect());
    }

    let pm = PartialMinimalModel {
        model,
        primitive,
        pairs,
        b3,
        d3,
        rho2,
        rho3,
        rho4,
        chain_residuals,
    };
    if !pm.is_chain_map() {
        return Err(Error::InvalidAlgebra("rho is not a chain map".into()));
    }
    if pm.d_rank_on_n3() != s {
        return Err(Error::InvalidAlgebra("d is not injective on N^3".into()));
    }
    Ok(pm)
}

#[derive(Clone, Debug, Serialize)]
pub struct InducedMap {
    pub degree: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    /// `target_dim x source_dim`, exact entries.
    #[serde(skip)]
    pub matrix: Matrix,
}

impl InducedMap {
    pub fn is_iso(&self) -> bool {
        self.source_dim == self.target_dim && self.rank == self.source_dim
    }

    pub fn is_injective(&self) -> bool {
        self.rank == self.source_dim
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct EquivalenceReport {
    pub generators: GeneratorDims,
    pub chain_map: bool,
    pub d_injective_on_n3: bool,
    pub maps: Vec<InducedMap>,
    pub holds: bool,
}

/// Computes `ρ*: H^k(ΛV) → H^k(model)` for `k = 2, 3, 4` and checks it is an
/// isomorphism for `k ≤ 3` and injective for `k = 4`.
pub fn verify_three_equivalence(pm: &PartialMinimalModel) -> Result<EquivalenceReport> {
    let (m, s, b3) = (pm.m(), pm.s(), pm.b3);
    let model = &pm.model;
    // ΛV: degree 2 = V², degree 3 = V³, degree 4 = Λ²V²; d = 0 except on N³, and d
    // vanishes on Λ²V² because it vanishes on V².
    let source = [
        DegreeCohomology::new(m, &Matrix::zeros(m, 0), &Matrix::zeros(b3 + s, m)),
        DegreeCohomology::new(b3 + s, &Matrix::zeros(b3 + s, m), &pm.d3),
        DegreeCohomology::new(s, &pm.d3, &Matrix::zeros(0, s)),
    ];
    let rhos = [&pm.rho2, &pm.rho3, &pm.rho4];
    let mut maps = Vec::with_capacity(3);
    for (t, k) in [2usize, 3, 4].into_iter().enumerate() {
        let target = DegreeCohomology::new(
            model.dim(k),
            &model.differential_matrix(k - 1)?,
            &model.differential_matrix(k)?,
        );
        let cols: Vec<Vec<Scalar>> = source[t]
            .representatives
            .iter()
            .map(|z| {
                target
                    .class_of(&rhos[t].mul_vec(z))
                    .ok_or_else(|| Error::InvalidAlgebra(format!("rho of a degree-{k} cocycle is not closed")))
            })
            .collect::<Result<_>>()?;
        let matrix = if cols.is_empty() {
            Matrix::zeros(target.dim(), 0)
        } else {
            Matrix::from_columns(target.dim(), &cols)
        };
        maps.push(InducedMap {
            degree: k,
            source_dim: source[t].dim(),
            target_dim: target.dim(),
            rank: matrix.rank(),
            matrix,
        });
    }
    let holds = pm.is_chain_map()
        && pm.d_rank_on_n3() == s
        && maps[0].is_iso()
        && maps[1].is_iso()
        && maps[2].is_injective();
    Ok(EquivalenceReport {
        generators: pm.generator_dims(),
        chain_map: pm.is_chain_map(),
        d_injective_on_n3: pm.d_rank_on_n3() == s,
        maps,
        holds,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSevenValues {
    pub values: Vec<Scalar>,
    pub verdict: Verdict,
}

/// Values on the kernel basis of `Sym²(Sym²P) → Sym⁴P`, computed in degree 7 of the
/// model: `s_a s_b` is lifted to `½(n_a s_b + n_b s_a)` in `ΛV` and sent through `ρ`.
/// `splitting` (`b3 x s`) replaces `n_a` by `n_a + S(n_a)`, with `S(n_a) ∈ C³`.
pub fn degree_seven_values(pm: &PartialMinimalModel, splitting: &Matrix) -> Result<DegreeSevenValues> {
    let (s, b3) = (pm.s(), pm.b3);
    if splitting.rows() != b3 || splitting.cols() != s {
        return Err(Error::InvalidArgument(format!(
            "splitting must be a {b3} x {s} matrix, got {} x {}",
            splitting.rows(),
            splitting.cols()
        )));
    }
    let model = &pm.model;
    let a = model.algebra();
    // ρ'(n'_a) = ρ(n_a) + S(n_a)
    let rho_n: Vec<ModelElement> = (0..s)
        .map(|k| {
            let mut v = pm.rho3.column(b3 + k);
            let shift = pm.rho3.mul_vec(
                &splitting
                    .column(k)
                    .into_iter()
                    .chain(std::iter::repeat_n(Scalar::zero(), s))
                    .collect::<Vec<_>>(),
            );
            linalg::axpy(&mut v, &Scalar::one(), &shift);
            model.from_coords(3, &v)
        })
        .collect();
    // the perturbed generators still satisfy ρ' d = d ρ'
    for (k, e) in rho_n.iter().enumerate() {
        let d = model.d(e)?.coords();
        if d != pm.rho4.column(k) {
            return Err(Error::InvalidArgument("perturbed splitting breaks the chain map".into()));
        }
    }
    let rho_s: Vec<ModelElement> = (0..s).map(|k| model.from_coords(4, &pm.rho4.column(k))).collect();
    let top = a.top_degree();
    let eval = |x: usize, y: usize| -> Result<Scalar> {
        let e = model.mul(&rho_n[x], &rho_s[y])?;
        let cls = CohomologyClass::raw(top, e.hx);
        a.integrate(&cls)
    };
    let kernel = obstruction_kernel(pm.m());
    let half = Scalar::new(1.into(), 2.into());
    let mut values = Vec::with_capacity(kernel.dim());
    for v in &kernel.basis {
        let mut total = Scalar::zero();
        for (c, &(x, y)) in v.iter().zip(&kernel.index.pair_pairs) {
            if c.is_zero() {
                continue;
            }
            let lifted = if x == y {
                eval(x, x)?
            } else {
                &half * (eval(x, y)? + eval(y, x)?)
            };
            total += c * lifted;
        }
        values.push(total);
    }
    let verdict = if values.iter().all(|x| x.is_zero()) {
        Verdict::Formal
    } else {
        Verdict::NonFormal
    };
    Ok(DegreeSevenValues { values, verdict })
}

/// Whether the degree-7 values and verdict agree for the standard splitting and the
/// graph of `splitting: N³ → C³`.
pub fn splitting_invariance_check(a: &GradedAlgebra, omega: &CohomologyClass, splitting: &Matrix) -> Result<bool> {
    let pm = build_partial_minimal_model(a, omega)?;
    let base = degree_seven_values(&pm, &Matrix::zeros(pm.b3, pm.s()))?;
    let moved = degree_seven_values(&pm, splitting)?;
    Ok(base == moved)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::formality::evaluate_f_m;
    use crate::gysin::total_space_cohomology;
    use crate::scalar::{frac, int};

    fn setup(name: &str) -> (GradedAlgebra, CohomologyClass) {
        let a = builtin(name).unwrap();
        let w = a.omega().unwrap();
        (a, w)
    }

    #[test]
    fn differential_examples() {
        let (a, w) = setup("cp3");
        let s = build_sullivan_model(&a, &w).unwrap();
        assert_eq!(s.d(&s.times_x(&a.unit())).unwrap(), s.base(&w));
        let w2 = a.mul(&w, &w).unwrap();
        assert_eq!(s.d(&s.times_x(&w)).unwrap(), s.base(&w2));

        let (a, w) = setup("synthetic-h3");
        let s = build_sullivan_model(&a, &w).unwrap();
        let u = a.basis_class(3, 0);
        let uw = a.mul(&u, &w).unwrap().scale(&int(-1));
        assert_eq!(s.d(&s.times_x(&u)).unwrap(), s.base(&uw));
    }

    #[test]
    fn model_axioms() {
        for name in ["cp3", "cp1xcp1xcp1", "synthetic-h3", "synthetic-oddker"] {
            let (a, w) = setup(name);
            let s = build_sullivan_model(&a, &w).unwrap();
            assert!(s.d_squared_failures().unwrap().is_empty(), "{name}");
            assert!(s.derivation_failures().unwrap().is_empty(), "{name}");
        }
    }

    #[test]
    fn cohomology_matches_gysin() {
        let (a, w) = setup("cp3");
        let c = model_cohomology(&build_sullivan_model(&a, &w).unwrap()).unwrap();
        assert_eq!(c.dims, vec![1, 0, 0, 0, 0, 0, 0, 1]);
        for name in ["cp1xcp1xcp1", "cp1xcp2", "synthetic-oddker", "synthetic-cupsq", "synthetic-h3"] {
            let (a, w) = setup(name);
            let c = model_cohomology(&build_sullivan_model(&a, &w).unwrap()).unwrap();
            assert_eq!(c.dims, total_space_cohomology(&a, &w).unwrap().betti, "{name}");
        }
    }

    #[test]
    fn top_class_is_omega_cubed_x() {
        let (a, w) = setup("cp1xcp1xcp1");
        let s = build_sullivan_model(&a, &w).unwrap();
        let c = model_cohomology(&s).unwrap();
        assert_eq!(c.dims[7], 1);
        let w3x = s.times_x(&a.power(&w, 3).unwrap());
        let cls = c.degrees[7].class_of(&w3x.coords()).unwrap();
        assert!(!cls[0].is_zero());
        assert_eq!(s.representatives(&c, 7).len(), 1);
    }

    #[test]
    fn partial_model_shapes() {
        let (a, w) = setup("cp3");
        let pm = build_partial_minimal_model(&a, &w).unwrap();
        assert_eq!(pm.generator_dims(), GeneratorDims { v2: 0, c3: 0, n3: 0 });
        assert!(verify_three_equivalence(&pm).unwrap().holds);

        let (a, w) = setup("cp1xcp1xcp1");
        let pm = build_partial_minimal_model(&a, &w).unwrap();
        assert_eq!(pm.generator_dims(), GeneratorDims { v2: 2, c3: 0, n3: 3 });
        let r = verify_three_equivalence(&pm).unwrap();
        assert!(r.holds);
        assert_eq!((r.maps[0].source_dim, r.maps[0].target_dim), (2, 2));
        assert_eq!((r.maps[1].source_dim, r.maps[1].target_dim), (0, 0));
        assert_eq!(r.maps[2].source_dim, 0);

        let (a, w) = setup("synthetic-oddker");
        assert!(build_partial_minimal_model(&a, &w).unwrap_err().is_inapplicable());
    }

    #[test]
    fn chain_map_on_p1_p2() {
        let (a, w) = setup("cp1xcp1xcp1");
        let pm = build_partial_minimal_model(&a, &w).unwrap();
        let s = &pm.model;
        let k = pm.pairs.iter().position(|&p| p == (0, 1)).unwrap();
        let rho = s.from_coords(3, &pm.rho3.column(k));
        let lhs = s.d(&rho).unwrap();
        let p1p2 = a.mul(&pm.primitive[0], &pm.primitive[1]).unwrap();
        assert_eq!(lhs, s.base(&p1p2));
    }

    #[test]
    fn degree_seven_matches_formality() {
        for name in ["cp1xcp1xcp1", "synthetic-h3", "synthetic-indefinite", "cp1xcp2"] {
            let (a, w) = setup(name);
            let pm = build_partial_minimal_model(&a, &w).unwrap();
            let vals = degree_seven_values(&pm, &Matrix::zeros(pm.b3, pm.s())).unwrap();
            let report = evaluate_f_m(&a, &w).unwrap();
            assert_eq!(vals.values, report.values, "{name}");
            assert_eq!(vals.verdict, report.verdict, "{name}");
        }
        let (a, w) = setup("cp1xcp1xcp1");
        let pm = build_partial_minimal_model(&a, &w).unwrap();
        let vals = degree_seven_values(&pm, &Matrix::zeros(0, 3)).unwrap();
        assert_eq!(vals.values, vec![frac(9, 2)]);
    }

    #[test]
    fn splitting() {
        let (a, w) = setup("synthetic-h3");
        let mut t = Matrix::zeros(2, 3);
        t[(0, 0)] = int(3);
        t[(1, 2)] = frac(-7, 5);
        assert!(splitting_invariance_check(&a, &w, &t).unwrap());
        assert!(splitting_invariance_check(&a, &w, &Matrix::zeros(2, 3)).unwrap());
        assert!(splitting_invariance_check(&a, &w, &Matrix::zeros(3, 3)).is_err());
    }
}

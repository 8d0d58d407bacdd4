//! Finite-dimensional graded-commutative algebras over the rationals with an
//! integration functional on the top degree.
//!
//! The multiplication is stored for degree pairs `p <= q` only. Products with
//! `p > q` are recovered from the graded sign `u v = (-1)^{pq} v u`, so graded
//! commutativity across distinct degrees holds by construction; within a single
//! degree both orders are stored and the validator checks them against each other.

use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;

/// `(-1)^{pq}` as a flag: true when the sign is negative.
pub(crate) fn koszul_odd(p: usize, q: usize) -> bool {
    p % 2 == 1 && q % 2 == 1
}

/// Product table for one degree pair `(p, q)`, `p <= q`: entry `(i, j)` is the
/// coordinate vector of `e_i^{(p)} e_j^{(q)}` in degree `p + q`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct ProductTable {
    cols: usize,
    entries: Vec<Vec<Scalar>>,
}

impl ProductTable {
    fn zero(rows: usize, cols: usize, out: usize) -> Self {
        ProductTable {
            cols,
            entries: vec![vec![Scalar::zero(); out]; rows * cols],
        }
    }

    fn get(&self, i: usize, j: usize) -> &[Scalar] {
        &self.entries[i * self.cols + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut Vec<Scalar> {
        &mut self.entries[i * self.cols + j]
    }
}

/// Graded-commutative algebra `A^0 ⊕ ... ⊕ A^N` with integration on `A^N`.
#[derive(Clone)]
pub struct GradedAlgebra {
    top_degree: usize,
    labels: Vec<Vec<String>>,
    // tables[p][q - p] for p <= q, p + q <= N
    tables: Vec<Vec<ProductTable>>,
    integration: Vec<Scalar>,
    omega: Option<Vec<Scalar>>,
    validation: OnceLock<ValidationReport>,
}

impl PartialEq for GradedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.top_degree == other.top_degree
            && self.labels == other.labels
            && self.tables == other.tables
            && self.integration == other.integration
            && self.omega == other.omega
    }
}

impl Eq for GradedAlgebra {}

impl fmt::Debug for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedAlgebra")
            .field("top_degree", &self.top_degree)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

/// Homogeneous element, given by coordinates in the stored basis of one degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    degree: usize,
    coords: Vec<Scalar>,
}

impl CohomologyClass {
    pub fn new(algebra: &GradedAlgebra, degree: usize, coords: Vec<Scalar>) -> Result<Self> {
        let expected = algebra.dim(degree);
        if degree > algebra.top_degree() || coords.len() != expected {
            return Err(Error::Dimension {
                location: format!("class of degree {degree}"),
                expected,
                found: coords.len(),
            });
        }
        Ok(CohomologyClass { degree, coords })
    }

    pub fn zero(algebra: &GradedAlgebra, degree: usize) -> Self {
        CohomologyClass {
            degree,
            coords: vec![Scalar::zero(); algebra.dim(degree)],
        }
    }

    pub fn basis(algebra: &GradedAlgebra, degree: usize, index: usize) -> Self {
        let mut c = Self::zero(algebra, degree);
        c.coords[index] = Scalar::one();
        c
    }

    /// Unchecked constructor for internal use where the length is known.
    pub(crate) fn raw(degree: usize, coords: Vec<Scalar>) -> Self {
        CohomologyClass { degree, coords }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        linalg::is_zero_vec(&self.coords)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        CohomologyClass {
            degree: self.degree,
            coords: self.coords.iter().map(|x| x * c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "adding classes of different degrees");
        CohomologyClass {
            degree: self.degree,
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }
}

/// Result of one invariant check in [`GradedAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub checks: Vec<CheckResult>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Incremental constructor for [`GradedAlgebra`]. Products with the unit are
/// preset to the identity.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    top_degree: usize,
    labels: Vec<Vec<String>>,
    tables: Vec<Vec<ProductTable>>,
    integration: Option<Vec<Scalar>>,
    omega: Option<Vec<Scalar>>,
}

impl AlgebraBuilder {
    /// `labels[p]` names the basis of degree `p`; the length must be `top_degree + 1`.
    pub fn new(top_degree: usize, labels: Vec<Vec<String>>) -> Result<Self> {
        if labels.len() != top_degree + 1 {
            return Err(Error::Dimension {
                location: "basis".into(),
                expected: top_degree + 1,
                found: labels.len(),
            });
        }
        let dims: Vec<usize> = labels.iter().map(Vec::len).collect();
        let mut tables = Vec::with_capacity(top_degree + 1);
        for p in 0..=top_degree {
            let row: Vec<ProductTable> = (p..=top_degree - p)
                .map(|q| ProductTable::zero(dims[p], dims[q], dims[p + q]))
                .collect();
            tables.push(row);
        }
        if dims[0] == 1 {
            for q in 0..=top_degree {
                for j in 0..dims[q] {
                    tables[0][q].get_mut(0, j)[j] = Scalar::one();
                }
            }
        }
        Ok(AlgebraBuilder {
            top_degree,
            labels,
            tables,
            integration: None,
            omega: None,
        })
    }

    pub fn dim(&self, degree: usize) -> usize {
        self.labels.get(degree).map_or(0, Vec::len)
    }

    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    pub fn labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    /// Sets `e_i^{(p)} e_j^{(q)}` for `p <= q`.
    pub fn set_product(
        &mut self,
        (p, i): (usize, usize),
        (q, j): (usize, usize),
        value: Vec<Scalar>,
    ) -> Result<&mut Self> {
        let loc = format!("product [{p},{i}]*[{q},{j}]");
        if p > q {
            return Err(Error::format(loc, "left degree exceeds right degree"));
        }
        if p + q > self.top_degree {
            return Err(Error::DegreeOverflow {
                left: p,
                right: q,
                top: self.top_degree,
            });
        }
        if i >= self.dim(p) || j >= self.dim(q) {
            return Err(Error::format(loc, "basis index out of range"));
        }
        let out = self.dim(p + q);
        if value.len() != out {
            return Err(Error::Dimension {
                location: loc,
                expected: out,
                found: value.len(),
            });
        }
        *self.tables[p][q - p].get_mut(i, j) = value;
        Ok(self)
    }

    /// Sets a product and, within a single degree, its graded-commuted partner.
    pub fn set_product_sym(
        &mut self,
        (p, i): (usize, usize),
        (q, j): (usize, usize),
        value: Vec<Scalar>,
    ) -> Result<&mut Self> {
        let (a, b) = if p <= q { ((p, i), (q, j)) } else { ((q, j), (p, i)) };
        let value = if p > q && koszul_odd(p, q) {
            value.into_iter().map(|x| -x).collect()
        } else {
            value
        };
        if a.0 == b.0 && a.1 != b.1 {
            let partner = if koszul_odd(a.0, a.0) {
                value.iter().map(|x| -x.clone()).collect()
            } else {
                value.clone()
            };
            self.set_product(b, a, partner)?;
        }
        self.set_product(a, b, value)
    }

    pub fn set_integration(&mut self, values: Vec<Scalar>) -> Result<&mut Self> {
        let expected = self.dim(self.top_degree);
        if values.len() != expected {
            return Err(Error::Dimension {
                location: "integration".into(),
                expected,
                found: values.len(),
            });
        }
        self.integration = Some(values);
        Ok(self)
    }

    pub fn set_omega(&mut self, values: Vec<Scalar>) -> Result<&mut Self> {
        let expected = self.dim(2);
        if values.len() != expected || self.top_degree < 2 {
            return Err(Error::Dimension {
                location: "omega".into(),
                expected,
                found: values.len(),
            });
        }
        self.omega = Some(values);
        Ok(self)
    }

    pub fn build(self) -> Result<GradedAlgebra> {
        let integration = self
            .integration
            .ok_or_else(|| Error::format("integration", "missing integration functional"))?;
        Ok(GradedAlgebra {
            top_degree: self.top_degree,
            labels: self.labels,
            tables: self.tables,
            integration,
            omega: self.omega,
            validation: OnceLock::new(),
        })
    }
}

impl GradedAlgebra {
    pub fn top_degree(&self) -> usize {
        self.top_degree
    }

    /// Dimension of degree `p`; zero outside `0..=N`.
    pub fn dim(&self, p: usize) -> usize {
        self.labels.get(p).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn labels(&self, p: usize) -> &[String] {
        self.labels.get(p).map_or(&[], Vec::as_slice)
    }

    pub fn all_labels(&self) -> &[Vec<String>] {
        &self.labels
    }

    pub fn integration(&self) -> &[Scalar] {
        &self.integration
    }

    /// The distinguished degree-2 class carried by the input, if any.
    pub fn omega(&self) -> Option<CohomologyClass> {
        self.omega
            .as_ref()
            .map(|w| CohomologyClass::raw(2, w.clone()))
    }

    pub fn find_label(&self, label: &str) -> Option<(usize, usize)> {
        self.labels.iter().enumerate().find_map(|(p, ls)| {
            ls.iter().position(|l| l == label).map(|i| (p, i))
        })
    }

    /// Class from a coefficient list on the degree-`p` basis.
    pub fn class(&self, degree: usize, coords: Vec<Scalar>) -> Result<CohomologyClass> {
        CohomologyClass::new(self, degree, coords)
    }

    pub fn basis_class(&self, degree: usize, index: usize) -> CohomologyClass {
        CohomologyClass::basis(self, degree, index)
    }

    /// `c` as a linear combination of basis labels, e.g. `a - 1/2*b`.
    pub fn describe(&self, c: &CohomologyClass) -> String {
        let mut out = String::new();
        for (x, l) in c.coords().iter().zip(self.labels(c.degree())) {
            if x.is_zero() {
                continue;
            }
            let neg = x.is_negative();
            let mag = x.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                out.push_str(&format!("{mag}*"));
            }
            out.push_str(l);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn unit(&self) -> CohomologyClass {
        CohomologyClass::basis(self, 0, 0)
    }

    /// Stored table entry for `p <= q`.
    pub(crate) fn stored_product(&self, p: usize, i: usize, q: usize, j: usize) -> &[Scalar] {
        self.tables[p][q - p].get(i, j)
    }

    /// Coordinates of `e_i^{(p)} e_j^{(q)}`, or `None` when `p + q > N`.
    pub fn basis_product(&self, p: usize, i: usize, q: usize, j: usize) -> Option<Vec<Scalar>> {
        if p + q > self.top_degree {
            return None;
        }
        if p <= q {
            Some(self.stored_product(p, i, q, j).to_vec())
        } else {
            let v = self.stored_product(q, j, p, i);
            if koszul_odd(p, q) {
                Some(v.iter().map(|x| -x.clone()).collect())
            } else {
                Some(v.to_vec())
            }
        }
    }

    pub fn mul(&self, u: &CohomologyClass, v: &CohomologyClass) -> Result<CohomologyClass> {
        let (p, q) = (u.degree, v.degree);
        if p + q > self.top_degree {
            return Err(Error::DegreeOverflow {
                left: p,
                right: q,
                top: self.top_degree,
            });
        }
        let mut out = vec![Scalar::zero(); self.dim(p + q)];
        for (i, a) in u.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = self.basis_product(p, i, q, j).expect("degree checked");
                linalg::axpy(&mut out, &(a * b), &prod);
            }
        }
        Ok(CohomologyClass::raw(p + q, out))
    }

    /// `u^k`, with `u^0 = 1`.
    pub fn power(&self, u: &CohomologyClass, k: usize) -> Result<CohomologyClass> {
        let mut acc = self.unit();
        for _ in 0..k {
            acc = self.mul(&acc, u)?;
        }
        Ok(acc)
    }

    pub fn integrate(&self, u: &CohomologyClass) -> Result<Scalar> {
        if u.degree != self.top_degree {
            return Err(Error::WrongDegree {
                expected: self.top_degree,
                found: u.degree,
            });
        }
        Ok(linalg::dot(&self.integration, &u.coords))
    }

    /// Matrix of `β ↦ β u` from degree `p` to degree `p + deg u`, columns indexed
    /// by the degree-`p` basis.
    pub fn right_mul_matrix(&self, u: &CohomologyClass, p: usize) -> Result<Matrix> {
        let target = p + u.degree;
        if target > self.top_degree {
            return Err(Error::DegreeOverflow {
                left: p,
                right: u.degree,
                top: self.top_degree,
            });
        }
        let cols: Vec<Vec<Scalar>> = (0..self.dim(p))
            .map(|i| self.mul(&self.basis_class(p, i), u).map(CohomologyClass::into_coords))
            .collect::<Result<_>>()?;
        Ok(Matrix::from_columns(self.dim(target), &cols))
    }

    /// `M[i][j] = ∫ e_i^{(p)} e_j^{(N-p)}`.
    pub fn pairing_matrix(&self, p: usize) -> Result<Matrix> {
        if p > self.top_degree {
            return Err(Error::InvalidArgument(format!(
                "degree {p} exceeds top degree {}",
                self.top_degree
            )));
        }
        let q = self.top_degree - p;
        let mut m = Matrix::zeros(self.dim(p), self.dim(q));
        for i in 0..self.dim(p) {
            for j in 0..self.dim(q) {
                let prod = self.basis_product(p, i, q, j).expect("complementary degrees");
                m[(i, j)] = linalg::dot(&self.integration, &prod);
            }
        }
        Ok(m)
    }

    /// Checks every structural invariant. The result is computed once and cached.
    pub fn validate(&self) -> &ValidationReport {
        self.validation.get_or_init(|| run_validation(self))
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            let msg: Vec<String> = report
                .failures()
                .map(|c| match &c.witness {
                    Some(w) => format!("{} ({w})", c.name),
                    None => c.name.to_string(),
                })
                .collect();
            Err(Error::InvalidAlgebra(msg.join("; ")))
        }
    }

    /// Same algebra with a different distinguished class.
    pub fn with_omega(&self, omega: Option<Vec<Scalar>>) -> Result<GradedAlgebra> {
        if let Some(w) = &omega {
            if w.len() != self.dim(2) {
                return Err(Error::Dimension {
                    location: "omega".into(),
                    expected: self.dim(2),
                    found: w.len(),
                });
            }
        }
        let mut out = self.clone();
        out.omega = omega;
        Ok(out)
    }

    /// Same algebra with the integration functional multiplied by `c`.
    pub fn with_scaled_integration(&self, c: &Scalar) -> GradedAlgebra {
        let mut out = self.clone();
        out.integration = out.integration.iter().map(|x| x * c).collect();
        out.validation = OnceLock::new();
        out
    }

    /// Rebuilds the stored tables into a builder, e.g. to perturb a coefficient.
    pub fn to_builder(&self) -> AlgebraBuilder {
        AlgebraBuilder {
            top_degree: self.top_degree,
            labels: self.labels.clone(),
            tables: self.tables.clone(),
            integration: Some(self.integration.clone()),
            omega: self.omega.clone(),
        }
    }

    /// Stored products `(p, i, q, j, value)` with `p <= q`, in lexicographic order.
    pub fn stored_products(&self) -> impl Iterator<Item = (usize, usize, usize, usize, &[Scalar])> {
        (0..=self.top_degree).flat_map(move |p| {
            (p..=self.top_degree.saturating_sub(p))
                .filter(move |&q| p + q <= self.top_degree)
                .flat_map(move |q| {
                    (0..self.dim(p)).flat_map(move |i| {
                        (0..self.dim(q)).map(move |j| (p, i, q, j, self.stored_product(p, i, q, j)))
                    })
                })
        })
    }
}

fn pass(name: &'static str) -> CheckResult {
    CheckResult {
        name,
        passed: true,
        witness: None,
    }
}

fn fail(name: &'static str, witness: String) -> CheckResult {
    CheckResult {
        name,
        passed: false,
        witness: Some(witness),
    }
}

fn run_validation(a: &GradedAlgebra) -> ValidationReport {
    let n = a.top_degree;
    let mut checks = Vec::new();

    // unique labels across the whole algebra
    let mut seen = std::collections::BTreeMap::new();
    let mut dup = None;
    'outer: for (p, ls) in a.labels.iter().enumerate() {
        for (i, l) in ls.iter().enumerate() {
            if let Some((p0, i0)) = seen.insert(l.clone(), (p, i)) {
                dup = Some(format!("label {l:?} at [{p0},{i0}] and [{p},{i}]"));
                break 'outer;
            }
        }
    }
    checks.push(match dup {
        None => pass("unique-labels"),
        Some(w) => fail("unique-labels", w),
    });

    // connectedness: one-dimensional degree 0 acting as the unit
    let connected = if a.dim(0) != 1 {
        Some(format!("dim A^0 = {}", a.dim(0)))
    } else {
        let mut witness = None;
        'unit: for q in 0..=n {
            for j in 0..a.dim(q) {
                let prod = a.stored_product(0, 0, q, j);
                let ok = prod
                    .iter()
                    .enumerate()
                    .all(|(k, x)| if k == j { x.is_one() } else { x.is_zero() });
                if !ok {
                    witness = Some(format!("1 * [{q},{j}]"));
                    break 'unit;
                }
            }
        }
        witness
    };
    checks.push(match connected {
        None => pass("connected"),
        Some(w) => fail("connected", w),
    });

    checks.push(if a.dim(1) == 0 {
        pass("simply-connected")
    } else {
        fail("simply-connected", format!("dim A^1 = {}", a.dim(1)))
    });

    let mut comm = None;
    'comm: for p in 0..=n / 2 {
        for i in 0..a.dim(p) {
            for j in i..a.dim(p) {
                let uv = a.stored_product(p, i, p, j);
                let vu = a.stored_product(p, j, p, i);
                let ok = if koszul_odd(p, p) {
                    uv.iter().zip(vu).all(|(x, y)| *x == -y.clone())
                } else {
                    uv == vu
                };
                if !ok {
                    comm = Some(format!("[{p},{i}] * [{p},{j}]"));
                    break 'comm;
                }
            }
        }
    }
    checks.push(match comm {
        None => pass("graded-commutative"),
        Some(w) => fail("graded-commutative", w),
    });

    checks.push(match associativity_witness(a) {
        None => pass("associative"),
        Some(w) => fail("associative", w),
    });

    checks.push(if a.dim(n) == 1 {
        pass("top-degree-one-dimensional")
    } else {
        fail("top-degree-one-dimensional", format!("dim A^{n} = {}", a.dim(n)))
    });

    let mut bad = Vec::new();
    for p in 0..=n {
        let m = a.pairing_matrix(p).expect("degree in range");
        if a.dim(p) != a.dim(n - p) || m.rank() != a.dim(p) {
            bad.push(p);
        }
    }
    checks.push(if bad.is_empty() {
        pass("poincare-duality")
    } else {
        let list: Vec<String> = bad.iter().map(ToString::to_string).collect();
        fail("poincare-duality", format!("degenerate at p = {}", list.join(", ")))
    });

    ValidationReport { checks }
}

/// First basis triple `(u, v, w)` with `(uv)w != u(vw)`.
pub(crate) fn associativity_witness(a: &GradedAlgebra) -> Option<String> {
    let n = a.top_degree;
    for p in 0..=n {
        for q in 0..=n - p {
            for r in 0..=n - p - q {
                for i in 0..a.dim(p) {
                    for j in 0..a.dim(q) {
                        let uv = CohomologyClass::raw(p + q, a.basis_product(p, i, q, j)?);
                        for k in 0..a.dim(r) {
                            let w = a.basis_class(r, k);
                            let left = a.mul(&uv, &w).ok()?;
                            let vw = CohomologyClass::raw(q + r, a.basis_product(q, j, r, k)?);
                            let right = a.mul(&a.basis_class(p, i), &vw).ok()?;
                            if left != right {
                                return Some(format!("([{p},{i}], [{q},{j}], [{r},{k}])"));
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Builders

fn power_label(gen: &str, k: usize) -> String {
    match k {
        0 => "1".to_string(),
        1 => gen.to_string(),
        _ => format!("{gen}^{k}"),
    }
}

/// The algebra of a point: `Q` in degree 0.
pub fn point() -> GradedAlgebra {
    let mut b = AlgebraBuilder::new(0, vec![vec!["1".into()]]).expect("static shape");
    b.set_integration(vec![Scalar::one()]).expect("static shape");
    b.build().expect("static shape")
}

/// `Q[h]/(h^{n+1})`, `|h| = 2`, with `∫ h^n = 1` and distinguished class `h`.
pub fn projective_space(n: usize) -> Result<GradedAlgebra> {
    projective_space_named(n, "h")
}

/// [`projective_space`] with a chosen name for the generator.
pub fn projective_space_named(n: usize, gen: &str) -> Result<GradedAlgebra> {
    if n == 0 {
        return Err(Error::InvalidArgument(
            "projective space dimension must be at least 1".into(),
        ));
    }
    let top = 2 * n;
    let labels: Vec<Vec<String>> = (0..=top)
        .map(|p| if p % 2 == 0 { vec![power_label(gen, p / 2)] } else { vec![] })
        .collect();
    let mut b = AlgebraBuilder::new(top, labels)?;
    for a in 1..=n {
        for c in a..=n - a {
            b.set_product((2 * a, 0), (2 * c, 0), vec![Scalar::one()])?;
        }
    }
    b.set_integration(vec![Scalar::one()])?;
    b.set_omega(vec![Scalar::one()])?;
    b.build()
}

/// Künneth product `A ⊗ B` with the Koszul sign `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} aa' ⊗ bb'`.
///
/// Within each degree the basis is ordered by left-factor degree descending, then
/// left index, then right index. Labels are concatenated (`a`, `b` give `ab`), or
/// written `l⊗r` if concatenation would create duplicates. The distinguished class
/// is `ω_A ⊗ 1 + 1 ⊗ ω_B`, treating a missing class as zero.
pub fn tensor_product(a: &GradedAlgebra, b: &GradedAlgebra) -> Result<GradedAlgebra> {
    let top = a.top_degree + b.top_degree;
    // basis[d] = list of (p, i, q, j) with p + q = d
    let mut basis: Vec<Vec<(usize, usize, usize, usize)>> = vec![Vec::new(); top + 1];
    for (d, slot) in basis.iter_mut().enumerate() {
        for p in (0..=a.top_degree.min(d)).rev() {
            let q = d - p;
            if q > b.top_degree {
                continue;
            }
            for i in 0..a.dim(p) {
                for j in 0..b.dim(q) {
                    slot.push((p, i, q, j));
                }
            }
        }
    }
    let concat = |&(p, i, q, j): &(usize, usize, usize, usize)| -> String {
        let l = &a.labels[p][i];
        let r = &b.labels[q][j];
        match (p == 0, q == 0) {
            (true, true) => "1".to_string(),
            (true, false) => r.clone(),
            (false, true) => l.clone(),
            (false, false) => format!("{l}{r}"),
        }
    };
    let mut labels: Vec<Vec<String>> = basis
        .iter()
        .map(|ls| ls.iter().map(concat).collect())
        .collect();
    let mut all: Vec<&String> = labels.iter().flatten().collect();
    all.sort();
    all.dedup();
    if all.len() != labels.iter().map(Vec::len).sum::<usize>() {
        labels = basis
            .iter()
            .map(|ls| {
                ls.iter()
                    .map(|&(p, i, q, j)| format!("{}⊗{}", a.labels[p][i], b.labels[q][j]))
                    .collect()
            })
            .collect();
    }

    let index_of = |d: usize, key: (usize, usize, usize, usize)| -> usize {
        basis[d].iter().position(|&k| k == key).expect("basis element present")
    };

    let mut builder = AlgebraBuilder::new(top, labels)?;
    for d1 in 0..=top {
        for d2 in d1..=top.saturating_sub(d1) {
            if d1 + d2 > top {
                continue;
            }
            for (x, &(p, i, q, j)) in basis[d1].iter().enumerate() {
                for (y, &(p2, i2, q2, j2)) in basis[d2].iter().enumerate() {
                    let mut out = vec![Scalar::zero(); basis[d1 + d2].len()];
                    if let (Some(left), Some(right)) = (
                        a.basis_product(p, i, p2, i2),
                        b.basis_product(q, j, q2, j2),
                    ) {
                        let sign = if koszul_odd(q, p2) { -Scalar::one() } else { Scalar::one() };
                        for (s, ls) in left.iter().enumerate() {
                            if ls.is_zero() {
                                continue;
                            }
                            for (t, rs) in right.iter().enumerate() {
                                if rs.is_zero() {
                                    continue;
                                }
                                let k = index_of(d1 + d2, (p + p2, s, q + q2, t));
                                out[k] += &sign * ls * rs;
                            }
                        }
                    }
                    builder.set_product((d1, x), (d2, y), out)?;
                }
            }
        }
    }
    let mut integ = vec![Scalar::zero(); basis[top].len()];
    for (k, &(p, i, q, j)) in basis[top].iter().enumerate() {
        if p == a.top_degree && q == b.top_degree {
            integ[k] = &a.integration[i] * &b.integration[j];
        }
    }
    builder.set_integration(integ)?;

    if a.omega.is_some() || b.omega.is_some() {
        let mut w = vec![Scalar::zero(); basis.get(2).map_or(0, Vec::len)];
        if let Some(wa) = &a.omega {
            for (i, c) in wa.iter().enumerate() {
                w[index_of(2, (2, i, 0, 0))] += c;
            }
        }
        if let Some(wb) = &b.omega {
            for (j, c) in wb.iter().enumerate() {
                w[index_of(2, (0, 0, 2, j))] += c;
            }
        }
        builder.set_omega(w)?;
    }
    builder.build()
}

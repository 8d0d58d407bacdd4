//! Cohomology of the circle bundle `E → B` with Euler class `ω`, read off from the
//! Gysin sequence as `H^i(E) ≅ Q^i ⊕ K^{i-1}·x`, and the Betti-number and cup-square
//! obstructions to a Sasakian structure on `E`.

use serde::Serialize;

use crate::algebra::{CohomologyClass, GradedAlgebra};
use crate::error::{Error, Result};
use crate::lefschetz::{check_omega, cokernel_basis, kernel_basis, lefschetz_step, require_dimension_six};
use crate::linalg;

/// Total-space dimension for a base of top degree 6.
pub const TOTAL_DIMENSION: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalSpaceDegree {
    pub degree: usize,
    /// Representatives of `Q^i`, classes pulled back from the base.
    pub base_part: Vec<CohomologyClass>,
    /// Elements of `K^{i-1}`; each contributes the class `κ·x`.
    pub fiber_part: Vec<CohomologyClass>,
}

impl TotalSpaceDegree {
    pub fn dim(&self) -> usize {
        self.base_part.len() + self.fiber_part.len()
    }
}

#[derive(Clone, Debug)]
pub struct CircleBundleCohomology {
    pub omega: CohomologyClass,
    pub degrees: Vec<TotalSpaceDegree>,
    pub betti: Vec<usize>,
}

fn omega_cubed_nonzero(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<bool> {
    Ok(!a.power(omega, 3)?.is_zero())
}

fn require_total_space(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<()> {
    check_omega(a, omega)?;
    require_dimension_six(a, "the circle-bundle computation")?;
    a.ensure_valid()?;
    if !omega_cubed_nonzero(a, omega)? {
        return Err(Error::Inapplicable(
            "omega^3 = 0, so omega is not the class of a symplectic base".into(),
        ));
    }
    Ok(())
}

/// `H^*(E)` for `E` the circle bundle with Euler class `ω`. Requires `ω³ ≠ 0`.
pub fn total_space_cohomology(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<CircleBundleCohomology> {
    require_total_space(a, omega)?;
    let degrees: Vec<TotalSpaceDegree> = (0..=TOTAL_DIMENSION)
        .map(|i| {
            let base_part = if i <= a.top_degree() {
                cokernel_basis(a, omega, i)?
            } else {
                Vec::new()
            };
            let fiber_part = if i >= 1 { kernel_basis(a, omega, i - 1)? } else { Vec::new() };
            Ok(TotalSpaceDegree {
                degree: i,
                base_part,
                fiber_part,
            })
        })
        .collect::<Result<_>>()?;
    let betti = degrees.iter().map(TotalSpaceDegree::dim).collect();
    Ok(CircleBundleCohomology {
        omega: omega.clone(),
        degrees,
        betti,
    })
}

/// `b_3(E) = b_3(B) + dim ker(ω: H^2 → H^4)`.
pub fn b3_of_total_space(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<usize> {
    require_total_space(a, omega)?;
    Ok(a.dim(3) + kernel_basis(a, omega, 2)?.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityVerdict {
    /// Odd degrees `p` with `1 <= p <= n` for a manifold of dimension `2n + 1`.
    pub applicable_degrees: Vec<usize>,
    /// Degrees among those where the Betti number is odd.
    pub violations: Vec<usize>,
}

impl ParityVerdict {
    pub fn fired(&self) -> bool {
        !self.violations.is_empty()
    }
}

/// Odd Betti numbers below the middle dimension of a compact Sasakian manifold are even.
pub fn sasaki_betti_parity(betti: &[usize], dim: usize) -> Result<ParityVerdict> {
    if dim % 2 == 0 {
        return Err(Error::InvalidArgument(format!("dimension {dim} is not odd")));
    }
    if betti.len() != dim + 1 {
        return Err(Error::Dimension {
            location: "betti vector".into(),
            expected: dim + 1,
            found: betti.len(),
        });
    }
    let n = (dim - 1) / 2;
    let applicable_degrees: Vec<usize> = (1..=n).filter(|p| p % 2 == 1).collect();
    let violations = applicable_degrees
        .iter()
        .copied()
        .filter(|&p| betti[p] % 2 == 1)
        .collect();
    Ok(ParityVerdict {
        applicable_degrees,
        violations,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupSquare {
    pub fired: bool,
    /// Representatives `(u, v)` of `Q^2` with `uv ∉ ω·H^2`.
    pub witness: Option<(CohomologyClass, CohomologyClass)>,
    pub q2_dim: usize,
    pub q4_dim: usize,
}

/// Whether the cup product `Q^2 × Q^2 → Q^4` is nonzero.
pub fn cup_square_obstruction(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<CupSquare> {
    check_omega(a, omega)?;
    require_dimension_six(a, "the cup-square obstruction")?;
    a.ensure_valid()?;
    let q2 = cokernel_basis(a, omega, 2)?;
    let q4_dim = cokernel_basis(a, omega, 4)?.len();
    let image = lefschetz_step(a, omega, 2)?.image_basis();
    let mut witness = None;
    'search: for (i, u) in q2.iter().enumerate() {
        for v in &q2[i..] {
            let uv = a.mul(u, v)?;
            if !linalg::in_span(a.dim(4), &image, uv.coords()) {
                witness = Some((u.clone(), v.clone()));
                break 'search;
            }
        }
    }
    Ok(CupSquare {
        fired: witness.is_some(),
        witness,
        q2_dim: q2.len(),
        q4_dim,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionCheck {
    pub name: &'static str,
    pub applicable: bool,
    pub fired: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Overall {
    #[serde(rename = "no obstruction found")]
    NoObstructionFound,
    #[serde(rename = "Sasakian structure excluded")]
    SasakianExcluded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionVerdict {
    pub checks: Vec<ObstructionCheck>,
    pub overall: Overall,
}

/// Betti parity of `E` and the cup-square test. Formality is listed for
/// completeness but never fires: in dimension 7 both formal and non-formal
/// Sasakian manifolds exist.
pub fn obstruction_verdict(a: &GradedAlgebra, omega: &CohomologyClass) -> Result<ObstructionVerdict> {
    check_omega(a, omega)?;
    require_dimension_six(a, "the obstruction summary")?;
    a.ensure_valid()?;
    let mut checks = Vec::new();
    match total_space_cohomology(a, omega) {
        Ok(e) => {
            let parity = sasaki_betti_parity(&e.betti, TOTAL_DIMENSION)?;
            checks.push(ObstructionCheck {
                name: "betti-parity",
                applicable: true,
                fired: parity.fired(),
                witness: parity
                    .violations
                    .first()
                    .map(|&p| format!("b{p}(E) = {} is odd", e.betti[p])),
            });
        }
        Err(Error::Inapplicable(msg)) => checks.push(ObstructionCheck {
            name: "betti-parity",
            applicable: false,
            fired: false,
            witness: Some(msg),
        }),
        Err(e) => return Err(e),
    }
    let cup = cup_square_obstruction(a, omega)?;
    checks.push(ObstructionCheck {
        name: "cup-square",
        applicable: true,
        fired: cup.fired,
        witness: cup
            .witness
            .as_ref()
            .map(|(u, v)| format!("({}) * ({}) is nonzero in Q^4", a.describe(u), a.describe(v))),
    });
    checks.push(ObstructionCheck {
        name: "formality",
        applicable: false,
        fired: false,
        witness: Some("not an obstruction in dimension 7: formal and non-formal Sasakian 7-manifolds both exist".into()),
    });
    let overall = if checks.iter().any(|c| c.applicable && c.fired) {
        Overall::SasakianExcluded
    } else {
        Overall::NoObstructionFound
    };
    Ok(ObstructionVerdict { checks, overall })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtins::builtin;
    use crate::synthetic;

    fn with_default(name: &str) -> (GradedAlgebra, CohomologyClass) {
        let a = builtin(name).unwrap();
        let w = a.omega().unwrap();
        (a, w)
    }

    #[test]
    fn sphere_pattern_for_cp3() {
        let (a, w) = with_default("cp3");
        let e = total_space_cohomology(&a, &w).unwrap();
        assert_eq!(e.betti, vec![1, 0, 0, 0, 0, 0, 0, 1]);
        assert_eq!(b3_of_total_space(&a, &w).unwrap(), 0);
    }

    #[test]
    fn cp1_cubed_total_space() {
        let (a, w) = with_default("cp1xcp1xcp1");
        let e = total_space_cohomology(&a, &w).unwrap();
        assert_eq!(e.betti, vec![1, 0, 2, 0, 0, 2, 0, 1]);
        assert_eq!(e.degrees[7].fiber_part.len(), 1);
        assert_eq!(b3_of_total_space(&a, &w).unwrap(), 0);
    }

    #[test]
    fn odd_kernel_gives_odd_b3() {
        let a = synthetic::odd_kernel();
        let w = a.omega().unwrap();
        assert_eq!(b3_of_total_space(&a, &w).unwrap(), 3);
        let e = total_space_cohomology(&a, &w).unwrap();
        assert_eq!(e.betti, vec![1, 0, 1, 3, 3, 1, 0, 1]);
        let v = obstruction_verdict(&a, &w).unwrap();
        assert_eq!(v.overall, Overall::SasakianExcluded);
        assert!(v.checks[0].fired);
    }

    #[test]
    fn parity_rule() {
        let ok = sasaki_betti_parity(&[1, 0, 2, 0, 0, 2, 0, 1], 7).unwrap();
        assert_eq!(ok.applicable_degrees, vec![1, 3]);
        assert!(ok.violations.is_empty());
        let bad = sasaki_betti_parity(&[1, 0, 3, 3, 3, 3, 0, 1], 7).unwrap();
        assert_eq!(bad.violations, vec![3]);
        assert_eq!(sasaki_betti_parity(&[1, 1, 1, 1], 3).unwrap().violations, vec![1]);
        assert!(sasaki_betti_parity(&[1, 0, 1], 7).is_err());
        assert!(sasaki_betti_parity(&[1, 0, 1], 2).is_err());
    }

    #[test]
    fn cup_square_examples() {
        let (a, w) = with_default("cp3");
        assert!(!cup_square_obstruction(&a, &w).unwrap().fired);
        let (a, w) = with_default("cp1xcp1xcp1");
        let c = cup_square_obstruction(&a, &w).unwrap();
        assert!(!c.fired);
        assert_eq!(c.q4_dim, 0);
        let a = synthetic::cup_square();
        let w = a.omega().unwrap();
        let c = cup_square_obstruction(&a, &w).unwrap();
        assert!(c.fired);
        let (u, v) = c.witness.unwrap();
        assert_eq!((u, v), (a.basis_class(2, 1), a.basis_class(2, 2)));
    }

    #[test]
    fn degenerate_omega_refused() {
        let a = builtin("cp1xcp1xcp1").unwrap();
        let w = a.class(2, vec![crate::scalar::int(1), crate::scalar::int(1), crate::scalar::int(0)]).unwrap();
        assert!(total_space_cohomology(&a, &w).unwrap_err().is_inapplicable());
    }
}

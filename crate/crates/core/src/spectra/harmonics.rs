//! Hodge summands of differential forms on the round sphere S^n.
//!
//! Levels are labelled so that the summand at level `j` carries the
//! half-integer `J = j + (n-1)/2`, and Hodge eigenvalues are quadratic in J.

use serde::Serialize;

use crate::arithmetic::{half, int, Rational};

/// Which Hodge summand of m-forms: images of d or images of δ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum HodgeType {
    Exact,
    Coexact,
}

/// J = j + (n-1)/2.
pub fn level_parameter(n: i64, j: i64) -> Rational {
    int(j) + int(n - 1) * half()
}

/// Nonempty summand test.
///
/// Coexact m-forms exist for 0 ≤ m ≤ n-1 at levels j ≥ 1, plus the constant
/// functions (m = 0, j = 0). Exact m-forms exist for 1 ≤ m ≤ n at levels
/// j ≥ 1, plus the volume form (m = n, j = 0), which is the image of the
/// constants under the Hodge star.
pub fn form_exists(n: i64, m: i64, ty: HodgeType, j: i64) -> bool {
    if n < 1 || j < 0 {
        return false;
    }
    match ty {
        HodgeType::Coexact => (0..n).contains(&m) && (j >= 1 || m == 0),
        HodgeType::Exact => (1..=n).contains(&m) && (j >= 1 || m == n),
    }
}

/// Eigenvalue of the Hodge Laplacian dδ + δd on the summand.
///
/// Coexact: J² - ((n-1)/2 - m)². Exact: J² - ((n-1)/2 - (m-1))².
pub fn hodge_eigenvalue(n: i64, m: i64, ty: HodgeType, j: i64) -> Rational {
    let big_j = level_parameter(n, j);
    let shift = match ty {
        HodgeType::Coexact => int(n - 1) * half() - int(m),
        HodgeType::Exact => int(n - 1) * half() - int(m - 1),
    };
    &big_j * &big_j - &shift * &shift
}

/// Eigenvalue of the Bochner Laplacian ∇*∇ on the summand (Weitzenböck
/// shift m(n-m) on the unit sphere).
pub fn bochner_eigenvalue(n: i64, m: i64, ty: HodgeType, j: i64) -> Rational {
    hodge_eigenvalue(n, m, ty, j) - int(m * (n - m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn functions_on_s2() {
        // j(j+1)
        for j in 0..6 {
            assert_eq!(hodge_eigenvalue(2, 0, HodgeType::Coexact, j), int(j * (j + 1)));
        }
    }

    #[test]
    fn exterior_derivative_preserves_eigenvalue() {
        // d maps coexact (m-1)-forms at level j onto exact m-forms at level j
        for n in 2..7 {
            for m in 1..=n {
                for j in 1..5 {
                    assert_eq!(
                        hodge_eigenvalue(n, m - 1, HodgeType::Coexact, j),
                        hodge_eigenvalue(n, m, HodgeType::Exact, j)
                    );
                }
            }
        }
    }

    #[test]
    fn harmonic_endpoints_vanish() {
        assert_eq!(hodge_eigenvalue(3, 0, HodgeType::Coexact, 0), int(0));
        assert_eq!(hodge_eigenvalue(3, 3, HodgeType::Exact, 0), int(0));
        assert!(form_exists(3, 3, HodgeType::Exact, 0));
        assert!(!form_exists(3, 2, HodgeType::Exact, 0));
        assert!(!form_exists(1, 1, HodgeType::Coexact, 2));
    }

    #[test]
    fn bochner_on_one_forms_of_s2() {
        // ∇*∇ = Δ - Ric on 1-forms, Ric = 1
        assert_eq!(
            bochner_eigenvalue(2, 1, HodgeType::Exact, 2),
            hodge_eigenvalue(2, 1, HodgeType::Exact, 2) - int(1)
        );
    }
}

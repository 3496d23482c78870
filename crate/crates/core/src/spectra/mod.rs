//! Eigenvalue engines and reports: floating-point spectra, exact inertia,
//! characteristic polynomials, median-eigenvalue reports, interlacing checks
//! and rational eigenvector certificates.

pub mod exact;
pub mod jacobi;
pub mod poly;

pub use exact::{
    count_in_interval, eigenvalue_multiplicity, inertia, inertia_sturm, lambda_k_at_most,
    rational_inertia, InertiaCount,
};
pub use poly::{char_poly, det_int, IntPoly, CHAR_POLY_BOUND};

use crate::graph::{Graph, VertexSet};
use crate::{Error, Int, Rat, Real, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Full real spectrum, sorted descending, with the solver's residual bound.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Spectrum {
    pub values: Vec<Real>,
    pub residual_bound: Real,
}

/// Floating-point spectrum of the adjacency matrix.
pub fn eigenvalues(g: &Graph) -> Spectrum {
    let n = g.n();
    let mut m = vec![vec![0.0; n]; n];
    for (u, v) in g.edges() {
        m[u][v] = 1.0;
        m[v][u] = 1.0;
    }
    let (values, residual_bound) = jacobi::symmetric_eigenvalues(&m);
    Spectrum {
        values,
        residual_bound,
    }
}

/// Median eigenvalues and the certified `R <= 1` verdict.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MedianReport {
    pub n: usize,
    pub h: usize,
    pub ell: usize,
    pub lambda_h: Real,
    pub lambda_ell: Real,
    pub hl_index: Real,
    pub exact_at_most_one: bool,
}

/// h = floor((n+1)/2), ell = ceil((n+1)/2); the HL index is
/// `max(|lambda_h|, |lambda_ell|)`. `exact_at_most_one` certifies `R <= 1`
/// by exact inertia at +1 and -1, with no floating-point involvement.
pub fn median_report(g: &Graph) -> Result<MedianReport> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let h = (n + 1) / 2;
    let ell = (n + 2) / 2;
    let spec = eigenvalues(g);
    let lambda_h = spec.values[h - 1];
    let lambda_ell = spec.values[ell - 1];
    let one = Rat::from_integer(Int::from(1));
    let above = inertia(g, &one).greater;
    let below = inertia(g, &(-one)).less;
    Ok(MedianReport {
        n,
        h,
        ell,
        lambda_h,
        lambda_ell,
        hl_index: lambda_h.abs().max(lambda_ell.abs()),
        exact_at_most_one: above <= h - 1 && below <= n - ell,
    })
}

/// Certified `R(G) <= 1` test using only exact arithmetic.
pub fn hl_at_most_one_exact(g: &Graph) -> Result<bool> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let h = (n + 1) / 2;
    let ell = (n + 2) / 2;
    let one = Rat::from_integer(Int::from(1));
    let above = inertia(g, &one).greater;
    let below = inertia(g, &(-one)).less;
    Ok(above <= h - 1 && below <= n - ell)
}

#[derive(Clone, Debug, Serialize)]
pub struct InterlacingViolation {
    pub index: usize,
    /// "upper": lambda_i(G) >= lambda_i(K); "lower": lambda_i(K) >= lambda_{i+k}(G)
    pub side: &'static str,
    pub margin: Real,
}

#[derive(Clone, Debug, Serialize)]
pub struct InterlacingReport {
    pub n: usize,
    pub removed: usize,
    pub pairs_checked: usize,
    pub violations: Vec<InterlacingViolation>,
}

impl InterlacingReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check both interlacing chains for K = G - A within tolerance 1e-9:
/// `lambda_i(G) >= lambda_i(K) >= lambda_{i+|A|}(G)` for i = 1..=n-|A|.
pub fn verify_interlacing(g: &Graph, removed: &VertexSet) -> Result<InterlacingReport> {
    let k = removed.len();
    let n = g.n();
    if k >= n {
        return Err(Error::EmptyRemainder);
    }
    let sub = g.delete_vertices(removed);
    let full = eigenvalues(g).values;
    let part = eigenvalues(&sub.induced_graph).values;
    let tol = 1e-9;
    let mut violations = Vec::new();
    for i in 0..n - k {
        if full[i] < part[i] - tol {
            violations.push(InterlacingViolation {
                index: i + 1,
                side: "upper",
                margin: part[i] - full[i],
            });
        }
        if part[i] < full[i + k] - tol {
            violations.push(InterlacingViolation {
                index: i + 1,
                side: "lower",
                margin: full[i + k] - part[i],
            });
        }
    }
    Ok(InterlacingReport {
        n,
        removed: k,
        pairs_checked: n - k,
        violations,
    })
}

/// Exact test `A x = lambda x` over the rationals.
pub fn check_eigenvector(g: &Graph, x: &[Rat], lambda: &Rat) -> Result<bool> {
    if x.len() != g.n() {
        return Err(Error::VectorLength {
            got: x.len(),
            want: g.n(),
        });
    }
    if x.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    for v in 0..g.n() {
        let mut acc = Rat::zero();
        for &w in g.neighbors(v) {
            acc += x[w].clone();
        }
        if acc != lambda * &x[v] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64, q: i64) -> Rat {
        Rat::new(Int::from(p), Int::from(q))
    }

    #[test]
    fn k2_spectrum() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let s = eigenvalues(&k2);
        assert!((s.values[0] - 1.0).abs() < 1e-12);
        assert!((s.values[1] + 1.0).abs() < 1e-12);
    }

    #[test]
    fn c6_spectrum_closed_form() {
        let s = eigenvalues(&Graph::cycle(6));
        let expect = [2.0, 1.0, 1.0, -1.0, -1.0, -2.0];
        for (a, b) in s.values.iter().zip(expect) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
        assert!(s.residual_bound <= 1e-9 * 6.0);
    }

    #[test]
    fn heawood_median_values() {
        let h = crate::catalog::heawood();
        let s = eigenvalues(&h);
        let r2 = 2.0f64.sqrt();
        assert!((s.values[6] - r2).abs() < 1e-9);
        assert!((s.values[7] + r2).abs() < 1e-9);
        let rep = median_report(&h).unwrap();
        assert_eq!((rep.h, rep.ell), (7, 8));
        assert!((rep.hl_index - r2).abs() < 1e-9);
        assert!(!rep.exact_at_most_one);
    }

    #[test]
    fn k2_and_k33_reports() {
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let rep = median_report(&k2).unwrap();
        assert_eq!((rep.h, rep.ell), (1, 2));
        assert!((rep.hl_index - 1.0).abs() < 1e-12);
        assert!(rep.exact_at_most_one);

        let k33 = Graph::complete_bipartite(3, 3);
        let rep = median_report(&k33).unwrap();
        assert_eq!((rep.h, rep.ell), (3, 4));
        assert!(rep.hl_index.abs() < 1e-9);
        assert!(rep.exact_at_most_one);

        assert!(median_report(&Graph::empty(0)).is_err());
    }

    #[test]
    fn interlacing_on_c6() {
        let c6 = Graph::cycle(6);
        let rep = verify_interlacing(&c6, &VertexSet::new(vec![0], 6).unwrap()).unwrap();
        assert_eq!(rep.pairs_checked, 5);
        assert!(rep.holds());
        assert!(verify_interlacing(&c6, &VertexSet::full(6)).is_err());
    }

    #[test]
    fn eigenvector_certificates() {
        // star with center 0: eigenvector for lambda = 0 exists only on leaves;
        // use K2 instead for the simple case
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        let one = rat(1, 1);
        assert!(check_eigenvector(&k2, &[one.clone(), one.clone()], &one).unwrap());
        assert!(!check_eigenvector(&k2, &[one.clone(), rat(2, 1)], &one).unwrap());
        assert!(check_eigenvector(&k2, &[Rat::zero(), Rat::zero()], &one).is_err());
        assert!(check_eigenvector(&k2, &[one.clone()], &one).is_err());
    }

    #[test]
    fn median_report_json_field_names() {
        let rep = median_report(&Graph::cycle(6)).unwrap();
        let json = serde_json::to_value(&rep).unwrap();
        for key in ["n", "h", "ell", "lambda_h", "lambda_ell", "hl_index", "exact_at_most_one"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        let i = inertia(&Graph::cycle(6), &rat(1, 1));
        let json = serde_json::to_value(&i).unwrap();
        for key in ["threshold", "greater", "equal", "less"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
    }
}

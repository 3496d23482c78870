//! Spectral toolkit for median eigenvalues of bipartite subcubic graphs.
//!
//! Two eigenvalue engines back everything: a dense floating-point solver for
//! numeric reports and an exact rational inertia engine (eigenvalue counting
//! relative to a rational threshold) for certifying claims like
//! `lambda_k(G) <= 1` without rounding doubt. On top of those sit the
//! partition-imbalance calculus, a bounded search for imbalance-increasing
//! vertex sets, a catalog of small certified graphs, and generators for
//! bipartite subcubic test corpora.

pub mod catalog;
pub mod error;
pub mod graph;
pub mod imbalance;
pub mod spectra;

pub use error::{Error, Result};

/// Scalar used by the floating-point eigenvalue engine.
pub type Real = f64;
/// Exact integer scalar (characteristic polynomial coefficients, determinants).
pub type Int = num_bigint::BigInt;
/// Exact rational scalar (thresholds, eigenvector certificates, elimination).
pub type Rat = num_rational::BigRational;

/// Parse a rational written as `p`, `-p/q`, or a plain integer string.
pub fn parse_rational(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: Int = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    let d: Int = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational {s:?}")))?;
    if d == Int::from(0) {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rat::new(n, d))
}

/// Format a rational as `p` or `p/q` (lowest terms).
pub fn format_rational(r: &Rat) -> String {
    if r.denom() == &Int::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        for s in ["1", "-3", "91/100", "-7/2"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}

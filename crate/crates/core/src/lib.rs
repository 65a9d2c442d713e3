//! Exact tools for locally bipartite graphs.
//!
//! The crate covers the named graphs and families (`families`), neighbourhood
//! structure and odd wheels (`local`), homomorphism and subgraph search (`hom`,
//! `canon`), exact colouring (`colouring`), optimal blow-up weightings by exact
//! rational linear programming (`lp`, `weighting`), exhaustive enumeration of
//! extremal examples (`search`), the constructive homomorphism decompositions
//! (`decompose`) and the claim runner behind `localchrom verify-paper`
//! (`verify`).
//!
//! All arithmetic is exact. Rationals are [`Rational`] (arbitrary precision).

pub mod canon;
pub mod colouring;
pub mod decompose;
pub mod error;
pub mod families;
pub mod graph;
pub mod hom;
pub mod io;
pub mod local;
pub mod lp;
pub mod random;
pub mod search;
pub mod verify;
pub mod vertex_set;
pub mod weighting;

pub use error::{Error, Result};
pub use graph::{Graph, WeightedGraph};
pub use vertex_set::VertexSet;

/// Arbitrary-precision exact rational.
pub type Rational = num_rational::BigRational;

/// Builds the rational `p/q`. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// Formats a rational as `p/q`, or `p` when the denominator is one.
pub fn fmt_rat(r: &Rational) -> String {
    if r.denom() == &num_bigint::BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p/q` or `p` into a rational.
pub fn parse_rat(s: &str) -> Result<Rational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((p, q)) => {
            let p: num_bigint::BigInt = p.trim().parse().map_err(|_| Error::BadRational(s.into()))?;
            let q: num_bigint::BigInt = q.trim().parse().map_err(|_| Error::BadRational(s.into()))?;
            if q == num_bigint::BigInt::from(0) {
                return Err(Error::BadRational(s.into()));
            }
            Rational::new(p, q)
        }
        None => Rational::from_integer(s.parse().map_err(|_| Error::BadRational(s.into()))?),
    };
    Ok(parsed)
}

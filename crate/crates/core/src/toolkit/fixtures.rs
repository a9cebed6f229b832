//! Named ordered complexes used as inputs and in tests.

use std::fmt;
use std::str::FromStr;

use crate::complex::{Complex, VertexId};
use crate::error::{Error, Result};
use crate::ordering::{OrderRelation, OrderedComplex};

/// Token of the `i`-th generated vertex: `a`..`z`, then `v26`, `v27`, ...
pub fn vertex_name(i: usize) -> VertexId {
    let token = if i < 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("v{i}")
    };
    VertexId::new(token).expect("generated names are atomic")
}

/// The path `a ≤ b ≤ ...` on `k` vertices.
pub fn path(k: usize) -> OrderedComplex {
    let vertices: Vec<VertexId> = (0..k).map(vertex_name).collect();
    let edges: Vec<(VertexId, VertexId)> = vertices
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    let rel: OrderRelation = edges.iter().cloned().collect();
    let c = Complex::flag(vertices, edges).expect("names are distinct");
    OrderedComplex::new(c, &rel).expect("a path ordered along itself is valid")
}

/// One vertex: a link with a unique taut Seifert surface.
pub fn point() -> OrderedComplex {
    path(1)
}

/// Two vertices `a ≤ b` joined by an edge: a link with exactly two taut
/// Seifert surfaces, such as the knot 7_4.
pub fn edge() -> OrderedComplex {
    path(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    Point,
    Edge,
    Path(usize),
}

impl Fixture {
    pub fn build(self) -> OrderedComplex {
        match self {
            Fixture::Point => point(),
            Fixture::Edge => edge(),
            Fixture::Path(k) => path(k),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fixture::Point => f.write_str("POINT"),
            Fixture::Edge => f.write_str("EDGE"),
            Fixture::Path(k) => write!(f, "PATH:{k}"),
        }
    }
}

impl FromStr for Fixture {
    type Err = Error;

    /// `POINT`, `EDGE` or `PATH:k` with `k ≥ 1`.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "POINT" => Ok(Fixture::Point),
            "EDGE" => Ok(Fixture::Edge),
            _ => s
                .strip_prefix("PATH:")
                .and_then(|k| k.parse().ok())
                .filter(|&k: &usize| k >= 1)
                .map(Fixture::Path)
                .ok_or_else(|| Error::Syntax(format!("unknown fixture {s:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_valid_and_flag() {
        for f in [Fixture::Point, Fixture::Edge, Fixture::Path(1), Fixture::Path(5)] {
            let oc = f.build();
            assert!(oc.complex().is_flag());
            assert_eq!(f.to_string().parse::<Fixture>().unwrap(), f);
        }
        let e = edge();
        assert_eq!(e.complex().vertex_count(), 2);
        assert_eq!(e.complex().edge_count(), 1);
        assert_eq!(e.pair_count(), 1);
        assert!(e.leq(&vertex_name(0), &vertex_name(1)).unwrap());
        assert!("PATH:0".parse::<Fixture>().is_err());
        assert!("LINE".parse::<Fixture>().is_err());
    }

    #[test]
    fn names() {
        assert_eq!(vertex_name(0).as_str(), "a");
        assert_eq!(vertex_name(25).as_str(), "z");
        assert_eq!(vertex_name(26).as_str(), "v26");
    }
}

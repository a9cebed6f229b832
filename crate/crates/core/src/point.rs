//! Points of a geometric realisation in exact barycentric coordinates.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::complex::{Simplex, VertexId};
use crate::error::{Error, Result};

/// Exact rational `num / den`.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// A convex combination of distinct vertices with positive exact weights
/// summing to one. Entries are kept sorted by vertex token.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedPoint {
    entries: Vec<(VertexId, BigRational)>,
}

impl WeightedPoint {
    pub fn new(entries: impl IntoIterator<Item = (VertexId, BigRational)>) -> Result<Self> {
        let mut entries: Vec<(VertexId, BigRational)> = entries.into_iter().collect();
        if entries.is_empty() {
            return Err(Error::InvalidWeights("no vertices".into()));
        }
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = entries.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicateVertex(w[0].0.to_string()));
        }
        for (v, w) in &entries {
            if !w.is_positive() || *w > BigRational::one() {
                return Err(Error::InvalidWeights(format!("weight {w} of {v} is outside (0, 1]")));
            }
        }
        let total: BigRational = entries.iter().map(|(_, w)| w).sum();
        if !total.is_one() {
            return Err(Error::InvalidWeights(format!("weights sum to {total}")));
        }
        Ok(Self { entries })
    }

    /// The vertex itself, with weight one.
    pub fn vertex(v: VertexId) -> Self {
        Self {
            entries: vec![(v, BigRational::one())],
        }
    }

    pub fn entries(&self) -> &[(VertexId, BigRational)] {
        &self.entries
    }

    pub fn weight(&self, v: &VertexId) -> Option<&BigRational> {
        self.entries
            .binary_search_by(|(u, _)| u.cmp(v))
            .ok()
            .map(|k| &self.entries[k].1)
    }

    pub fn support(&self) -> Simplex {
        Simplex::new(self.entries.iter().map(|(v, _)| v.clone()))
            .expect("entries are nonempty and distinct")
    }

    /// Image under a vertex map, summing the weights of vertices with a common
    /// image.
    pub fn push_forward(&self, f: impl Fn(&VertexId) -> Result<VertexId>) -> Result<Self> {
        let mut sums: BTreeMap<VertexId, BigRational> = BTreeMap::new();
        for (v, w) in &self.entries {
            *sums.entry(f(v)?).or_insert_with(BigRational::zero) += w;
        }
        Self::new(sums)
    }

    /// Parses `tok:num/den,tok:num/den,...`; a bare integer weight is allowed.
    pub fn parse(spec: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (token, weight) = item
                .rsplit_once(':')
                .ok_or_else(|| Error::Syntax(format!("expected token:weight, got {item:?}")))?;
            entries.push((VertexId::parse_composite(token.trim())?, parse_rational(weight)?));
        }
        Self::new(entries)
    }

    /// `(token, numerator, denominator)` for each entry.
    pub fn to_triples(&self) -> Result<Vec<(String, i64, i64)>> {
        self.entries
            .iter()
            .map(|(v, w)| {
                let num = w.numer().to_i64();
                let den = w.denom().to_i64();
                match (num, den) {
                    (Some(n), Some(d)) => Ok((v.to_string(), n, d)),
                    _ => Err(Error::InvalidWeights(format!("weight {w} does not fit in 64 bits"))),
                }
            })
            .collect()
    }

    pub fn from_triples(triples: &[(String, i64, i64)]) -> Result<Self> {
        let entries = triples
            .iter()
            .map(|(t, n, d)| {
                if *d == 0 {
                    return Err(Error::InvalidWeights(format!("zero denominator for {t}")));
                }
                Ok((VertexId::parse_composite(t.as_str())?, ratio(*n, *d)))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}

impl fmt::Display for WeightedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (v, w)) in self.entries.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}:{w}")?;
        }
        Ok(())
    }
}

/// Parses `n`, `-n`, `n/d` or `-n/d` exactly.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    let bad = || Error::Syntax(format!("not a rational number: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

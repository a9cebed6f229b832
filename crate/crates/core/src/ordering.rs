//! Vertex order relations and the ordered-complex axioms.
//!
//! An [`OrderRelation`] is a set of directed pairs `(u, v)` read as `u ≤ v`;
//! reflexive pairs are implicit and never stored. A complex together with a
//! relation is an [`OrderedComplex`] when
//!
//! - **P1** no two distinct vertices are related both ways,
//! - **P2** distinct vertices are comparable exactly when they are adjacent,
//! - **P3** on every 2-simplex, `u ≤ v` and `v ≤ w` imply `u ≤ w`.
//!
//! Validation is strict (full P2) and exhaustive: every violation is reported
//! with a witness. Use [`restrict_to_adjacent`] first to drop pairs between
//! non-adjacent vertices when only the weaker "adjacent implies comparable"
//! condition is known to hold.

use std::collections::BTreeSet;
use std::fmt;

use crate::complex::{Complex, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OrderRelation {
    pairs: BTreeSet<(VertexId, VertexId)>,
}

impl OrderRelation {
    pub fn new() -> Self {
        Self::default()
    }

    /// Records `u ≤ v`. Reflexive pairs are ignored.
    pub fn insert(&mut self, u: VertexId, v: VertexId) -> bool {
        u != v && self.pairs.insert((u, v))
    }

    pub fn remove(&mut self, u: &VertexId, v: &VertexId) -> bool {
        self.pairs.remove(&(u.clone(), v.clone()))
    }

    pub fn contains(&self, u: &VertexId, v: &VertexId) -> bool {
        self.pairs.contains(&(u.clone(), v.clone()))
    }

    pub fn pairs(&self) -> impl Iterator<Item = &(VertexId, VertexId)> {
        self.pairs.iter()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

impl FromIterator<(VertexId, VertexId)> for OrderRelation {
    fn from_iter<I: IntoIterator<Item = (VertexId, VertexId)>>(iter: I) -> Self {
        let mut rel = Self::new();
        for (u, v) in iter {
            rel.insert(u, v);
        }
        rel
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    /// Antisymmetry.
    P1,
    /// Comparability iff adjacency.
    P2,
    /// Transitivity on 2-simplices.
    P3,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Axiom::P1 => "P1",
            Axiom::P2 => "P2",
            Axiom::P3 => "P3",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Witness {
    Pair(VertexId, VertexId),
    Triple(VertexId, VertexId, VertexId),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Pair(u, v) => write!(f, "({u}, {v})"),
            Witness::Triple(u, v, w) => write!(f, "({u}, {v}, {w})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Witness,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match (self.axiom, &self.witness) {
            (Axiom::P1, _) => "related in both directions",
            (Axiom::P2, Witness::Pair(..)) => "comparability differs from adjacency",
            _ => "transitivity fails on a 2-simplex",
        };
        write!(f, "{} {}: {what}", self.axiom, self.witness)
    }
}

/// Every axiom violation found, sorted by axiom then witness.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ViolationReport {
    violations: Vec<Violation>,
}

impl ViolationReport {
    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn len(&self) -> usize {
        self.violations.len()
    }

    pub fn contains(&self, axiom: Axiom, witness: &Witness) -> bool {
        self.violations
            .iter()
            .any(|v| v.axiom == axiom && &v.witness == witness)
    }
}

impl fmt::Display for ViolationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, v) in self.violations.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A complex with a relation satisfying P1, P2 and P3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedComplex {
    complex: Complex,
    /// `up[i]` holds every `j != i` with `i ≤ j`, sorted.
    up: Vec<Vec<usize>>,
}

fn index_pairs(c: &Complex, rel: &OrderRelation) -> Result<Vec<(usize, usize)>> {
    rel.pairs()
        .map(|(u, v)| Ok((c.index(u)?, c.index(v)?)))
        .collect()
}

fn up_sets(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Vec<Vec<usize>> {
    let mut up = vec![Vec::new(); n];
    for (i, j) in pairs {
        if i != j {
            up[i].push(j);
        }
    }
    for list in &mut up {
        list.sort_unstable();
        list.dedup();
    }
    up
}

fn check_axioms(c: &Complex, up: &[Vec<usize>]) -> ViolationReport {
    let leq = |i: usize, j: usize| i == j || up[i].binary_search(&j).is_ok();
    let name = |i: usize| c.vertex(i).clone();
    let mut violations = Vec::new();

    for (i, succ) in up.iter().enumerate() {
        for &j in succ {
            if i < j && leq(j, i) {
                violations.push(Violation {
                    axiom: Axiom::P1,
                    witness: Witness::Pair(name(i), name(j)),
                });
            }
            if !c.adjacent_idx(i, j) {
                violations.push(Violation {
                    axiom: Axiom::P2,
                    witness: Witness::Pair(name(i), name(j)),
                });
            }
        }
    }
    for (i, j) in c.edges_idx() {
        if !leq(i, j) && !leq(j, i) {
            violations.push(Violation {
                axiom: Axiom::P2,
                witness: Witness::Pair(name(i), name(j)),
            });
        }
    }
    c.for_each_simplex_idx(3, |s| {
        if let &[a, b, d] = s {
            let orders = [[a, b, d], [a, d, b], [b, a, d], [b, d, a], [d, a, b], [d, b, a]];
            if let Some(&[x, y, z]) = orders
                .iter()
                .find(|&&[x, y, z]| leq(x, y) && leq(y, z) && !leq(x, z))
            {
                violations.push(Violation {
                    axiom: Axiom::P3,
                    witness: Witness::Triple(name(x), name(y), name(z)),
                });
            }
        }
    });
    violations.sort();
    ViolationReport { violations }
}

/// Checks all three axioms, returning every violation (possibly none).
pub fn violations(c: &Complex, rel: &OrderRelation) -> Result<ViolationReport> {
    let pairs = index_pairs(c, rel)?;
    Ok(check_axioms(c, &up_sets(c.vertex_count(), pairs)))
}

/// Validates `rel` on `c`. Axiom failures surface as
/// [`Error::ValidationFailed`] carrying the full report.
pub fn validate_ordering(c: Complex, rel: &OrderRelation) -> Result<OrderedComplex> {
    let pairs = index_pairs(&c, rel)?;
    OrderedComplex::from_index_pairs(c, pairs)
}

/// Drops every pair whose endpoints are not adjacent in `c`.
pub fn restrict_to_adjacent(c: &Complex, rel: &OrderRelation) -> Result<OrderRelation> {
    let mut out = OrderRelation::new();
    for (u, v) in rel.pairs() {
        if c.are_adjacent(u, v)? {
            out.insert(u.clone(), v.clone());
        }
    }
    Ok(out)
}

impl OrderedComplex {
    pub fn new(c: Complex, rel: &OrderRelation) -> Result<Self> {
        validate_ordering(c, rel)
    }

    pub(crate) fn from_index_pairs(
        complex: Complex,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let up = up_sets(complex.vertex_count(), pairs);
        let report = check_axioms(&complex, &up);
        if report.is_empty() {
            Ok(Self { complex, up })
        } else {
            Err(Error::ValidationFailed(report))
        }
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    pub fn into_complex(self) -> Complex {
        self.complex
    }

    pub(crate) fn leq_idx(&self, i: usize, j: usize) -> bool {
        i == j || self.up[i].binary_search(&j).is_ok()
    }

    pub(crate) fn comparable_idx(&self, i: usize, j: usize) -> bool {
        self.leq_idx(i, j) || self.leq_idx(j, i)
    }

    /// `u ≤ v`, reflexive.
    pub fn leq(&self, u: &VertexId, v: &VertexId) -> Result<bool> {
        Ok(self.leq_idx(self.complex.index(u)?, self.complex.index(v)?))
    }

    /// Stored pairs `(i, j)` meaning `i ≤ j`, lexicographic.
    pub(crate) fn pairs_idx(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(i, js)| js.iter().map(move |&j| (i, j)))
    }

    pub fn relation(&self) -> OrderRelation {
        self.pairs_idx()
            .map(|(i, j)| (self.complex.vertex(i).clone(), self.complex.vertex(j).clone()))
            .collect()
    }

    pub fn pair_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// Sorts a chain ascending; `None` unless the vertices are pairwise
    /// comparable and the relation orders them linearly.
    pub(crate) fn sort_chain(&self, members: &[usize]) -> Option<Vec<usize>> {
        let k = members.len();
        let mut slots = vec![None; k];
        for &m in members {
            let mut below = 0;
            for &o in members {
                if o != m {
                    if !self.comparable_idx(m, o) {
                        return None;
                    }
                    if self.leq_idx(o, m) {
                        below += 1;
                    }
                }
            }
            match slots.get_mut(below) {
                Some(slot @ None) => *slot = Some(m),
                _ => return None,
            }
        }
        slots.into_iter().collect()
    }

    /// Relabels vertices and carries the order along.
    pub fn relabel(&self, f: impl Fn(&VertexId) -> Result<VertexId>) -> Result<Self> {
        let names = self
            .complex
            .vertices()
            .iter()
            .map(&f)
            .collect::<Result<Vec<_>>>()?;
        let complex = self.complex.relabel(|v| f(v))?;
        let pairs = self
            .pairs_idx()
            .map(|(i, j)| Ok((complex.index(&names[i])?, complex.index(&names[j])?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_index_pairs(complex, pairs)
    }

    /// The full ordered subcomplex on `keep`.
    pub fn induced(&self, keep: &[VertexId]) -> Result<Self> {
        let complex = self.complex.induced(keep)?;
        let mut rel = OrderRelation::new();
        for (i, j) in self.pairs_idx() {
            let (u, v) = (self.complex.vertex(i), self.complex.vertex(j));
            if complex.contains_vertex(u) && complex.contains_vertex(v) {
                rel.insert(u.clone(), v.clone());
            }
        }
        validate_ordering(complex, &rel)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(t: &str) -> VertexId {
        VertexId::new(t).unwrap()
    }

    fn flag(vertices: &[&str], edges: &[(&str, &str)]) -> Complex {
        Complex::flag(
            vertices.iter().map(|t| v(t)),
            edges.iter().map(|(a, b)| (v(a), v(b))),
        )
        .unwrap()
    }

    fn rel(pairs: &[(&str, &str)]) -> OrderRelation {
        pairs.iter().map(|(a, b)| (v(a), v(b))).collect()
    }

    fn pair(a: &str, b: &str) -> Witness {
        Witness::Pair(v(a), v(b))
    }

    fn report_of(err: Error) -> ViolationReport {
        match err {
            Error::ValidationFailed(r) => r,
            other => panic!("expected a validation failure, got {other:?}"),
        }
    }

    #[test]
    fn both_directions_is_p1() {
        let c = flag(&["a", "b"], &[("a", "b")]);
        let r = report_of(validate_ordering(c, &rel(&[("a", "b"), ("b", "a")])).unwrap_err());
        assert_eq!(r.violations().len(), 1);
        assert!(r.contains(Axiom::P1, &pair("a", "b")));
    }

    #[test]
    fn unordered_edge_is_p2() {
        let c = flag(&["a", "b"], &[("a", "b")]);
        let r = report_of(validate_ordering(c, &OrderRelation::new()).unwrap_err());
        assert_eq!(r.violations(), &[Violation { axiom: Axiom::P2, witness: pair("a", "b") }]);
    }

    #[test]
    fn non_adjacent_comparable_is_p2() {
        let c = flag(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let r = report_of(
            validate_ordering(c, &rel(&[("a", "b"), ("b", "c"), ("a", "c")])).unwrap_err(),
        );
        assert_eq!(r.violations(), &[Violation { axiom: Axiom::P2, witness: pair("a", "c") }]);
    }

    #[test]
    fn cyclic_triangle_is_p3() {
        let c = flag(&["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]);
        let r = report_of(
            validate_ordering(c, &rel(&[("a", "b"), ("b", "c"), ("c", "a")])).unwrap_err(),
        );
        assert_eq!(
            r.violations(),
            &[Violation {
                axiom: Axiom::P3,
                witness: Witness::Triple(v("a"), v("b"), v("c"))
            }]
        );
    }

    #[test]
    fn cyclic_order_on_hollow_triangle_is_fine() {
        // P3 only constrains 2-simplices
        let c = Complex::explicit(
            ["a", "b", "c"].map(v),
            [vec![v("a"), v("b")], vec![v("b"), v("c")], vec![v("a"), v("c")]],
        )
        .unwrap();
        assert!(validate_ordering(c, &rel(&[("a", "b"), ("b", "c"), ("c", "a")])).is_ok());
    }

    #[test]
    fn report_is_exhaustive() {
        let c = flag(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]);
        let r = report_of(
            validate_ordering(c, &rel(&[("a", "b"), ("b", "a"), ("a", "d")])).unwrap_err(),
        );
        assert_eq!(r.len(), 3);
        assert!(r.contains(Axiom::P1, &pair("a", "b")));
        assert!(r.contains(Axiom::P2, &pair("a", "d")));
        assert!(r.contains(Axiom::P2, &pair("c", "d")));
    }

    #[test]
    fn unknown_vertex_in_relation() {
        let c = flag(&["a"], &[]);
        assert_eq!(
            validate_ordering(c, &rel(&[("a", "q")])),
            Err(Error::UnknownVertex("q".into()))
        );
    }

    #[test]
    fn restrict_removes_non_adjacent_pairs() {
        let c = flag(&["a", "b", "c"], &[("a", "b"), ("b", "c")]);
        let full = rel(&[("a", "b"), ("b", "c"), ("a", "c")]);
        let r = restrict_to_adjacent(&c, &full).unwrap();
        assert_eq!(r, rel(&[("a", "b"), ("b", "c")]));
        assert_eq!(restrict_to_adjacent(&c, &r).unwrap(), r);
        assert!(validate_ordering(c, &r).is_ok());
    }

    #[test]
    fn leq_queries() {
        let c = flag(&["a", "b", "c"], &[("a", "b")]);
        let oc = validate_ordering(c, &rel(&[("a", "b")])).unwrap();
        assert!(oc.leq(&v("a"), &v("a")).unwrap());
        assert!(oc.leq(&v("a"), &v("b")).unwrap());
        assert!(!oc.leq(&v("b"), &v("a")).unwrap());
        assert!(!oc.leq(&v("a"), &v("c")).unwrap());
        assert!(!oc.leq(&v("c"), &v("a")).unwrap());
        assert!(oc.leq(&v("a"), &v("z")).is_err());
    }

    #[test]
    fn reflexive_pairs_are_never_stored() {
        let r = rel(&[("a", "a"), ("a", "b")]);
        assert_eq!(r.len(), 1);
    }

    #[test]
    fn triangles_are_linearly_ordered() {
        let c = flag(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("a", "c"), ("c", "d"), ("b", "d")],
        );
        let oc = validate_ordering(
            c,
            &rel(&[("a", "b"), ("b", "c"), ("a", "c"), ("d", "c"), ("b", "d")]),
        )
        .unwrap();
        for s in oc.complex().simplices(Some(2)) {
            if s.len() == 3 {
                let idx: Vec<usize> = s
                    .vertices()
                    .iter()
                    .map(|x| oc.complex().index(x).unwrap())
                    .collect();
                assert!(oc.sort_chain(&idx).is_some(), "{s}");
            }
        }
    }
}

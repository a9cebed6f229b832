//! Ordered products of ordered complexes.
//!
//! The vertices of `X1 × X2` are pairs `(u, v)`. A set of pairs spans a
//! simplex when both projections are simplices of the factors and the
//! componentwise relation `(u, v) ≤ (u', v') ⇔ u ≤ u' ∧ v ≤ v'` orders it
//! linearly. Product simplices are enumerated directly from that rule and
//! stored explicitly; flagness of the result is checked, never assumed.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use crate::complex::{sort_tokens, Complex, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::ordering::{OrderRelation, OrderedComplex};
use crate::point::WeightedPoint;

/// Closed integer interval `[lo, hi]`, a finite piece of the integer line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    lo: i64,
    hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidWindow { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn contains(&self, n: i64) -> bool {
        self.lo <= n && n <= self.hi
    }

    pub fn levels(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    /// Number of levels.
    pub fn len(&self) -> usize {
        (self.hi - self.lo) as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn shifted(&self, k: i64) -> Self {
        Self {
            lo: self.lo + k,
            hi: self.hi + k,
        }
    }

    pub fn is_subwindow_of(&self, other: &Window) -> bool {
        other.lo <= self.lo && self.hi <= other.hi
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.lo, self.hi)
    }
}

impl FromStr for Window {
    type Err = Error;

    /// `LO:HI`
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Syntax(format!("expected LO:HI, got {s:?}"));
        let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        Window::new(lo, hi)
    }
}

pub fn level_token(n: i64) -> VertexId {
    VertexId::new(n.to_string()).expect("integers contain no separator")
}

/// The integer path on `lo..=hi`, ordered by the usual order on adjacent
/// levels.
pub fn z_window(w: Window) -> OrderedComplex {
    let vertices: Vec<VertexId> = w.levels().map(level_token).collect();
    let edges: Vec<(VertexId, VertexId)> = (w.lo + 1..=w.hi)
        .map(|n| (level_token(n - 1), level_token(n)))
        .collect();
    let rel: OrderRelation = edges.iter().cloned().collect();
    let c = Complex::flag(vertices, edges).expect("levels are distinct");
    OrderedComplex::new(c, &rel).expect("a path ordered along itself satisfies the axioms")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// An ordered product together with its factors and the vertex projections.
#[derive(Clone, Debug)]
pub struct ProductComplex {
    ordered: OrderedComplex,
    left: OrderedComplex,
    right: OrderedComplex,
    /// Factor indices of each product vertex.
    parts: Vec<(usize, usize)>,
    /// Product vertex of factor pair `(i, j)` at `i * right_len + j`.
    by_parts: Vec<usize>,
}

/// Builds `x1 × x2` with the componentwise order restricted to adjacent
/// vertices.
pub fn ordered_product(x1: &OrderedComplex, x2: &OrderedComplex) -> Result<ProductComplex> {
    let (c1, c2) = (x1.complex(), x2.complex());
    let (n1, n2) = (c1.vertex_count(), c2.vertex_count());

    let raw: Vec<VertexId> = (0..n1)
        .flat_map(|i| (0..n2).map(move |j| VertexId::pair(c1.vertex(i), c2.vertex(j))))
        .collect();
    let (tokens, remap) = sort_tokens(raw)?;
    let mut parts = vec![(0, 0); n1 * n2];
    for i in 0..n1 {
        for j in 0..n2 {
            parts[remap[i * n2 + j]] = (i, j);
        }
    }

    let below = |p: usize, q: usize| {
        let ((i, j), (k, l)) = (parts[p], parts[q]);
        x1.leq_idx(i, k) && x2.leq_idx(j, l)
    };

    // 1-simplices: projections equal or adjacent, componentwise comparable
    let mut adjacency = vec![Vec::new(); n1 * n2];
    for (p, &(i, j)) in parts.iter().enumerate() {
        let lefts = std::iter::once(i).chain(c1.neighbors_idx(i).iter().copied());
        for k in lefts {
            let rights = std::iter::once(j).chain(c2.neighbors_idx(j).iter().copied());
            for l in rights {
                let q = remap[k * n2 + l];
                if q != p && (below(p, q) || below(q, p)) {
                    adjacency[p].push(q);
                }
            }
        }
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }

    let spans = |set: &[usize]| -> bool {
        let mut left: Vec<usize> = set.iter().map(|&p| parts[p].0).collect();
        let mut right: Vec<usize> = set.iter().map(|&p| parts[p].1).collect();
        left.sort_unstable();
        left.dedup();
        right.sort_unstable();
        right.dedup();
        c1.contains_idx(&left) && c2.contains_idx(&right) && is_linear(set, &below)
    };

    let mut leaves = Vec::new();
    let mut current = Vec::new();
    for p in 0..n1 * n2 {
        let candidates: Vec<usize> = adjacency[p].iter().copied().filter(|&q| q > p).collect();
        current.push(p);
        collect_chains(&mut current, &candidates, &adjacency, &spans, &mut leaves);
        current.pop();
    }

    let complex = Complex::from_sorted_facets(tokens, leaves);
    let pairs: Vec<(usize, usize)> = complex
        .edges_idx()
        .map(|(p, q)| if below(p, q) { (p, q) } else { (q, p) })
        .collect();
    let ordered = OrderedComplex::from_index_pairs(complex, pairs)?;
    Ok(ProductComplex {
        ordered,
        left: x1.clone(),
        right: x2.clone(),
        parts,
        by_parts: remap,
    })
}

/// Whether `below` is a linear order on `set`: antisymmetric, total, and
/// transitive (equivalently, the "number of elements below" is a bijection
/// onto `0..len`).
fn is_linear(set: &[usize], below: &impl Fn(usize, usize) -> bool) -> bool {
    let mut seen = vec![false; set.len()];
    for &p in set {
        let mut rank = 0;
        for &q in set {
            if q == p {
                continue;
            }
            match (below(q, p), below(p, q)) {
                (true, false) => rank += 1,
                (false, true) => {}
                _ => return false,
            }
        }
        if std::mem::replace(&mut seen[rank], true) {
            return false;
        }
    }
    true
}

/// Depth-first enumeration of product simplices; pushes every set that no
/// later candidate extends. All maximal simplices are among them.
fn collect_chains(
    current: &mut Vec<usize>,
    candidates: &[usize],
    adjacency: &[Vec<usize>],
    spans: &impl Fn(&[usize]) -> bool,
    leaves: &mut Vec<Vec<usize>>,
) {
    let mut extended = false;
    for (k, &c) in candidates.iter().enumerate() {
        current.push(c);
        if spans(current) {
            extended = true;
            let next: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|x| adjacency[c].binary_search(x).is_ok())
                .collect();
            collect_chains(current, &next, adjacency, spans, leaves);
        }
        current.pop();
    }
    if !extended {
        leaves.push(current.clone());
    }
}

impl ProductComplex {
    pub fn ordered(&self) -> &OrderedComplex {
        &self.ordered
    }

    pub fn complex(&self) -> &Complex {
        self.ordered.complex()
    }

    pub fn into_ordered(self) -> OrderedComplex {
        self.ordered
    }

    pub fn factor(&self, side: Side) -> &OrderedComplex {
        match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        }
    }

    pub(crate) fn parts_idx(&self, p: usize) -> (usize, usize) {
        self.parts[p]
    }

    pub(crate) fn vertex_of_parts(&self, i: usize, j: usize) -> usize {
        self.by_parts[i * self.right.complex().vertex_count() + j]
    }

    /// The factor vertices of a product vertex.
    pub fn components(&self, v: &VertexId) -> Result<(VertexId, VertexId)> {
        let (i, j) = self.parts[self.complex().index(v)?];
        Ok((
            self.left.complex().vertex(i).clone(),
            self.right.complex().vertex(j).clone(),
        ))
    }

    /// Image of a product simplex under the projection to one factor.
    pub fn project(&self, side: Side, s: &Simplex) -> Result<Simplex> {
        let idx = self.complex().indices_of(s)?;
        if !self.complex().contains_idx(&idx) {
            return Err(Error::NotASimplex(s.to_string()));
        }
        let (factor, pick): (&OrderedComplex, fn((usize, usize)) -> usize) = match side {
            Side::Left => (&self.left, |p| p.0),
            Side::Right => (&self.right, |p| p.1),
        };
        Simplex::new(
            idx.iter()
                .map(|&p| factor.complex().vertex(pick(self.parts[p])).clone())
                .collect::<std::collections::BTreeSet<_>>(),
        )
    }

    /// Same complex, new order: `leq(p, q)` decides `p ≤ q` for adjacent
    /// product vertices. The result is revalidated.
    pub(crate) fn reordered(&self, leq: impl Fn(usize, usize) -> bool) -> Result<ProductComplex> {
        let complex = self.complex().clone();
        let pairs: Vec<(usize, usize)> = complex
            .edges_idx()
            .flat_map(|(p, q)| {
                let forward = leq(p, q).then_some((p, q));
                let backward = leq(q, p).then_some((q, p));
                forward.into_iter().chain(backward)
            })
            .collect();
        Ok(ProductComplex {
            ordered: OrderedComplex::from_index_pairs(complex, pairs)?,
            left: self.left.clone(),
            right: self.right.clone(),
            parts: self.parts.clone(),
            by_parts: self.by_parts.clone(),
        })
    }
}

/// Support of a point as factor indices sorted ascending, with weights.
fn ascending_support(
    factor: &OrderedComplex,
    point: &WeightedPoint,
) -> Result<Vec<(usize, BigRational)>> {
    let c = factor.complex();
    let mut idx = Vec::with_capacity(point.entries().len());
    for (v, _) in point.entries() {
        idx.push(c.index(v)?);
    }
    let chain = factor.sort_chain(&idx).ok_or(Error::SupportNotAChain)?;
    idx.sort_unstable();
    if !c.contains_idx(&idx) {
        return Err(Error::NotASimplex(point.support().to_string()));
    }
    Ok(chain
        .into_iter()
        .map(|i| {
            let w = point
                .weight(c.vertex(i))
                .expect("chain members come from the support")
                .clone();
            (i, w)
        })
        .collect())
}

/// The point of `|X1 × X2|` projecting to `p1` and `p2`.
///
/// Each support is laid out along `[0, 1]` in ascending order, one interval
/// per vertex of length equal to its weight. Merging the two breakpoint sets
/// cuts `[0, 1]` into cells; the cell `[t_k, t_{k+1})` lying over `A_i` and
/// `B_j` contributes `(A_i, B_j)` with weight `t_{k+1} - t_k`.
pub fn realize_in_product(
    product: &ProductComplex,
    p1: &WeightedPoint,
    p2: &WeightedPoint,
) -> Result<WeightedPoint> {
    let a = ascending_support(&product.left, p1)?;
    let b = ascending_support(&product.right, p2)?;

    let mut cells = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let (mut end_a, mut end_b) = (a[0].1.clone(), b[0].1.clone());
    let mut t = BigRational::zero();
    loop {
        let next = if end_a < end_b { end_a.clone() } else { end_b.clone() };
        let width = &next - &t;
        if !width.is_zero() {
            cells.push((product.vertex_of_parts(a[i].0, b[j].0), width));
        }
        t = next;
        let (done_a, done_b) = (end_a == t, end_b == t);
        if done_a {
            i += 1;
        }
        if done_b {
            j += 1;
        }
        match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => {
                if done_a {
                    end_a = &end_a + &x.1;
                }
                if done_b {
                    end_b = &end_b + &y.1;
                }
            }
            // both supports end at 1
            _ => break,
        }
    }

    let mut support: Vec<usize> = cells.iter().map(|(p, _)| *p).collect();
    support.sort_unstable();
    if !product.complex().contains_idx(&support) {
        let s = product.complex().simplex_of(&support);
        return Err(Error::NotASimplex(s.to_string()));
    }
    WeightedPoint::new(
        cells
            .into_iter()
            .map(|(p, w)| (product.complex().vertex(p).clone(), w)),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::ratio;

    fn v(t: &str) -> VertexId {
        VertexId::new(t).unwrap()
    }

    fn chain(tokens: &[&str]) -> OrderedComplex {
        let vs: Vec<VertexId> = tokens.iter().map(|t| v(t)).collect();
        let edges: Vec<(VertexId, VertexId)> =
            vs.windows(2).map(|w| (w[0].clone(), w[1].clone())).collect();
        let rel: OrderRelation = edges.iter().cloned().collect();
        OrderedComplex::new(Complex::flag(vs, edges).unwrap(), &rel).unwrap()
    }

    fn pv(a: &str, b: &str) -> VertexId {
        VertexId::pair(&v(a), &v(b))
    }

    #[test]
    fn window_parsing() {
        assert_eq!("-10:10".parse::<Window>().unwrap(), Window::new(-10, 10).unwrap());
        assert_eq!(Window::new(3, 2), Err(Error::InvalidWindow { lo: 3, hi: 2 }));
        assert!("1".parse::<Window>().is_err());
        assert_eq!(Window::new(-3, 3).unwrap().len(), 7);
    }

    #[test]
    fn z_window_shapes() {
        let z = z_window(Window::new(0, 0).unwrap());
        assert_eq!(z.complex().vertex_count(), 1);
        assert_eq!(z.complex().edge_count(), 0);
        let z = z_window(Window::new(0, 2).unwrap());
        assert_eq!(z.complex().vertex_count(), 3);
        assert_eq!(z.complex().edge_count(), 2);
        assert!(z.leq(&v("0"), &v("1")).unwrap());
        assert!(z.leq(&v("1"), &v("2")).unwrap());
        assert!(!z.leq(&v("0"), &v("2")).unwrap());
        assert_eq!(z.pair_count(), 2);
    }

    #[test]
    fn point_times_point() {
        let p = chain(&["a"]);
        let prod = ordered_product(&p, &chain(&["x"])).unwrap();
        assert_eq!(prod.complex().vertices(), &[pv("a", "x")]);
    }

    #[test]
    fn edge_times_edge() {
        let prod = ordered_product(&chain(&["a", "b"]), &chain(&["x", "y"])).unwrap();
        let facets = prod.complex().maximal_simplices().unwrap();
        let expected = vec![
            Simplex::new([pv("a", "x"), pv("a", "y"), pv("b", "y")]).unwrap(),
            Simplex::new([pv("a", "x"), pv("b", "x"), pv("b", "y")]).unwrap(),
        ];
        let mut facets_sorted = facets.clone();
        facets_sorted.sort();
        let mut expected_sorted = expected.clone();
        expected_sorted.sort();
        assert_eq!(facets_sorted, expected_sorted);
        assert_eq!(prod.complex().euler_characteristic(), 1);

        let s = &expected[0];
        assert_eq!(
            prod.project(Side::Left, s).unwrap(),
            Simplex::from_tokens(&["a", "b"]).unwrap()
        );
        assert_eq!(
            prod.project(Side::Right, s).unwrap(),
            Simplex::from_tokens(&["x", "y"]).unwrap()
        );
        let bad = Simplex::new([pv("a", "y"), pv("b", "x")]).unwrap();
        assert!(matches!(prod.project(Side::Left, &bad), Err(Error::NotASimplex(_))));
    }

    #[test]
    fn realization_examples() {
        let prod = ordered_product(&chain(&["A0", "A1"]), &chain(&["B0", "B1"])).unwrap();
        let one = realize_in_product(
            &prod,
            &WeightedPoint::vertex(v("A1")),
            &WeightedPoint::vertex(v("B0")),
        )
        .unwrap();
        assert_eq!(one, WeightedPoint::vertex(pv("A1", "B0")));

        let half = WeightedPoint::parse("A0:1/2,A1:1/2").unwrap();
        let aligned = realize_in_product(&prod, &half, &WeightedPoint::vertex(v("B0"))).unwrap();
        assert_eq!(
            aligned,
            WeightedPoint::new([(pv("A0", "B0"), ratio(1, 2)), (pv("A1", "B0"), ratio(1, 2))])
                .unwrap()
        );

        let q = WeightedPoint::parse("B0:1/4,B1:3/4").unwrap();
        let merged = realize_in_product(&prod, &half, &q).unwrap();
        assert_eq!(
            merged,
            WeightedPoint::new([
                (pv("A0", "B0"), ratio(1, 4)),
                (pv("A0", "B1"), ratio(1, 4)),
                (pv("A1", "B1"), ratio(1, 2)),
            ])
            .unwrap()
        );
    }

    #[test]
    fn realization_rejects_non_chains() {
        // a and c are both above b but not comparable to each other
        let c = Complex::flag(
            [v("a"), v("b"), v("c")],
            [(v("b"), v("a")), (v("b"), v("c"))],
        )
        .unwrap();
        let rel: OrderRelation = [(v("b"), v("a")), (v("b"), v("c"))].into_iter().collect();
        let x = OrderedComplex::new(c, &rel).unwrap();
        let prod = ordered_product(&x, &chain(&["p"])).unwrap();
        let bad = WeightedPoint::parse("a:1/2,c:1/2").unwrap();
        assert!(matches!(
            realize_in_product(&prod, &bad, &WeightedPoint::vertex(v("p"))),
            Err(Error::SupportNotAChain)
        ));
    }
}

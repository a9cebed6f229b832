//! Windowed connected-sum complexes on triples `(v1, v2, n)`.
//!
//! Given ordered flag complexes `K1`, `K2` and a window of integer levels,
//! the complex is built in two independent ways:
//!
//! - **product pipeline**: `K1 × Z` is formed as an ordered product, its order
//!   is replaced by the sheared order (see [`sheared_leq`]), the result is
//!   multiplied by `K2`, and the flag closure of that 1-skeleton is taken;
//! - **direct rule**: the flag complex on all triples whose edges are given by
//!   [`triples_adjacent`].
//!
//! Both label vertices `v1|v2|n`. Comparing them is the central consistency
//! check of the crate.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::complex::{sort_tokens, Complex, Distance, Simplex, VertexId};
use crate::error::{Error, Result};
use crate::ordering::OrderedComplex;
use crate::point::WeightedPoint;
use crate::product::{level_token, ordered_product, realize_in_product, z_window, ProductComplex, Window};

/// A vertex of the connected-sum complex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripleVertex {
    pub v1: VertexId,
    pub v2: VertexId,
    pub n: i64,
}

impl TripleVertex {
    pub fn new(v1: VertexId, v2: VertexId, n: i64) -> Self {
        Self { v1, v2, n }
    }

    pub fn label(&self) -> Result<VertexId> {
        label_triple(&self.v1, &self.v2, self.n)
    }

    pub fn shifted(&self, k: i64) -> Self {
        Self {
            v1: self.v1.clone(),
            v2: self.v2.clone(),
            n: self.n + k,
        }
    }
}

impl fmt::Display for TripleVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.v1, self.v2, self.n)
    }
}

/// The flat token `v1|v2|n`. Components must be atomic.
pub fn label_triple(v1: &VertexId, v2: &VertexId, n: i64) -> Result<VertexId> {
    VertexId::from_components(&[v1.as_str(), v2.as_str(), &n.to_string()])
}

/// Inverse of [`label_triple`].
pub fn unlabel_triple(t: &VertexId) -> Result<TripleVertex> {
    let malformed = || Error::MalformedToken(t.to_string());
    let parts: Vec<&str> = t.components().collect();
    let &[v1, v2, n] = parts.as_slice() else {
        return Err(malformed());
    };
    let n: i64 = n.parse().map_err(|_| malformed())?;
    if n.to_string() != parts[2] {
        // only the canonical integer spelling round-trips
        return Err(malformed());
    }
    Ok(TripleVertex {
        v1: VertexId::new(v1).map_err(|_| malformed())?,
        v2: VertexId::new(v2).map_err(|_| malformed())?,
        n,
    })
}

/// The sheared order on `V(K1) × Z`: `(r_b, n_b) ≤ (r_a, n_a)` iff
/// `r_b ≤ r_a` on a common level, or `r_a ≤ r_b` with `n_b` one level above
/// `n_a`. Within a level it follows `K1`; between neighbouring levels the upper
/// copy sits below.
pub fn sheared_leq(k1: &OrderedComplex, p: (&VertexId, i64), q: (&VertexId, i64)) -> Result<bool> {
    let c = k1.complex();
    Ok(sheared_idx(k1, (c.index(p.0)?, p.1), (c.index(q.0)?, q.1)))
}

fn sheared_idx(k1: &OrderedComplex, (rb, nb): (usize, i64), (ra, na): (usize, i64)) -> bool {
    (k1.leq_idx(rb, ra) && nb == na) || (k1.leq_idx(ra, rb) && na == nb - 1)
}

/// `K1 × Z` over the window, reordered by [`sheared_leq`] and revalidated.
pub fn reorder_sheared(k1: &OrderedComplex, w: Window) -> Result<ProductComplex> {
    let z = z_window(w);
    let levels = levels_of(&z);
    let product = ordered_product(k1, &z)?;
    let at = |p: usize| {
        let (i, a) = product.parts_idx(p);
        (i, levels[a])
    };
    product.reordered(|p, q| sheared_idx(k1, at(p), at(q)))
}

fn levels_of(z: &OrderedComplex) -> Vec<i64> {
    z.complex()
        .vertices()
        .iter()
        .map(|v| v.as_str().parse().expect("window vertices are integers"))
        .collect()
}

/// The adjacency rule on triples: with the roles `a`, `b` assigned in either
/// order, `v2(b) ≤ v2(a)` and either `v1(b) ≤ v1(a)` on a common level or
/// `v1(a) ≤ v1(b)` with `b` one level above `a`.
fn adjacent_in_roles(
    first_leq: impl Fn(usize, usize) -> bool,
    second_leq: impl Fn(usize, usize) -> bool,
    a: (usize, usize, i64),
    b: (usize, usize, i64),
) -> bool {
    second_leq(b.1, a.1) && ((first_leq(b.0, a.0) && a.2 == b.2) || (first_leq(a.0, b.0) && a.2 == b.2 - 1))
}

/// Whether two triples span an edge of the connected-sum complex.
pub fn triples_adjacent(
    k1: &OrderedComplex,
    k2: &OrderedComplex,
    t: &TripleVertex,
    u: &TripleVertex,
) -> Result<bool> {
    let (c1, c2) = (k1.complex(), k2.complex());
    let ti = (c1.index(&t.v1)?, c2.index(&t.v2)?, t.n);
    let ui = (c1.index(&u.v1)?, c2.index(&u.v2)?, u.n);
    if ti == ui {
        return Ok(false);
    }
    let first_leq = |i, j| k1.leq_idx(i, j);
    let second_leq = |i, j| k2.leq_idx(i, j);
    Ok(adjacent_in_roles(first_leq, second_leq, ti, ui) || adjacent_in_roles(first_leq, second_leq, ui, ti))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    ProductPipeline,
    DirectRule,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    ProductPipeline,
    DirectRule,
}

/// Distance in a windowed complex. `truncated` is set when a path leaving
/// the window could be shorter, so the value may change for a larger window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct WindowDistance {
    pub distance: Distance,
    pub truncated: bool,
}

#[derive(Clone, Debug)]
pub struct SumWindowComplex {
    ordered: OrderedComplex,
    window: Window,
    provenance: Provenance,
    /// Simplices of the iterated ordered product before flag closure.
    product_simplices: Option<Complex>,
}

impl SumWindowComplex {
    pub fn ordered(&self) -> &OrderedComplex {
        &self.ordered
    }

    pub fn complex(&self) -> &Complex {
        self.ordered.complex()
    }

    pub fn into_ordered(self) -> OrderedComplex {
        self.ordered
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Product-pipeline only: the complex whose simplices are exactly the
    /// ordered-product simplices, before flag closure.
    pub fn product_simplices(&self) -> Option<&Complex> {
        self.product_simplices.as_ref()
    }

    /// Product-pipeline only: whether the product simplices already equal
    /// the flag closure.
    pub fn product_is_flag(&self) -> Option<bool> {
        self.product_simplices.as_ref().map(Complex::is_flag)
    }

    /// Levels `lo` and `hi` miss their neighbours outside the window.
    pub fn is_truncated_level(&self, n: i64) -> bool {
        n == self.window.lo() || n == self.window.hi()
    }

    pub fn triple(&self, v: &VertexId) -> Result<TripleVertex> {
        self.complex().index(v)?;
        unlabel_triple(v)
    }

    pub fn vertex(&self, v1: &VertexId, v2: &VertexId, n: i64) -> Result<VertexId> {
        let label = label_triple(v1, v2, n)?;
        self.complex().index(&label)?;
        Ok(label)
    }

    pub fn distance(&self, u: &VertexId, v: &VertexId) -> Result<WindowDistance> {
        let distance = self.complex().skeleton_distance(u, v)?;
        let (nu, nv) = (unlabel_triple(u)?.n, unlabel_triple(v)?.n);
        // every edge moves at most one level
        let (lo, hi) = (self.window.lo(), self.window.hi());
        let escape = (nu + nv - 2 * lo + 2).min(2 * hi + 2 - nu - nv) as usize;
        let truncated = match distance {
            Distance::Steps(d) => d > escape,
            Distance::Unreachable => true,
        };
        Ok(WindowDistance { distance, truncated })
    }
}

/// Outcome of comparing the two constructions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityReport {
    pub vertices_equal: bool,
    pub edges_equal: bool,
    /// Flag closure of the pipeline against the direct complex.
    pub simplices_equal: bool,
    /// Ordered-product simplices (before closure) against the direct complex.
    pub product_simplices_equal: bool,
    pub order_equal: bool,
    pub edges_only_in_pipeline: Vec<(VertexId, VertexId)>,
    pub edges_only_in_direct: Vec<(VertexId, VertexId)>,
}

impl EqualityReport {
    pub fn compare(pipeline: &SumWindowComplex, direct: &SumWindowComplex) -> Self {
        let (p, d) = (pipeline.complex(), direct.complex());
        let pe: BTreeSet<_> = p.edges().into_iter().collect();
        let de: BTreeSet<_> = d.edges().into_iter().collect();
        let direct_simplices = d.simplex_set();
        let product_simplices_equal = match pipeline.product_simplices() {
            Some(raw) => raw.simplex_set() == direct_simplices,
            None => false,
        };
        Self {
            vertices_equal: p.vertices() == d.vertices(),
            edges_equal: pe == de,
            simplices_equal: p.simplex_set() == direct_simplices,
            product_simplices_equal,
            order_equal: pipeline.ordered().relation() == direct.ordered().relation(),
            edges_only_in_pipeline: pe.difference(&de).cloned().collect(),
            edges_only_in_direct: de.difference(&pe).cloned().collect(),
        }
    }

    pub fn is_equal(&self) -> bool {
        self.vertices_equal
            && self.edges_equal
            && self.simplices_equal
            && self.product_simplices_equal
            && self.order_equal
    }
}

impl fmt::Display for EqualityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |b: bool| if b { "equal" } else { "DIFFERENT" };
        writeln!(f, "vertices: {}", word(self.vertices_equal))?;
        writeln!(f, "edges: {}", word(self.edges_equal))?;
        writeln!(f, "simplices: {}", word(self.simplices_equal))?;
        writeln!(f, "product simplices: {}", word(self.product_simplices_equal))?;
        writeln!(f, "order: {}", word(self.order_equal))?;
        for (u, v) in &self.edges_only_in_pipeline {
            writeln!(f, "  only in pipeline: {u} -- {v}")?;
        }
        for (u, v) in &self.edges_only_in_direct {
            writeln!(f, "  only in direct rule: {u} -- {v}")?;
        }
        write!(f, "result: {}", if self.is_equal() { "EQUAL" } else { "DIFFERENT" })
    }
}

#[derive(Clone, Debug)]
pub enum ConnectedSum {
    Single(SumWindowComplex),
    Both {
        pipeline: SumWindowComplex,
        direct: SumWindowComplex,
        report: EqualityReport,
    },
}

impl ConnectedSum {
    /// The pipeline complex when both were built, otherwise the only one.
    pub fn primary(&self) -> &SumWindowComplex {
        match self {
            ConnectedSum::Single(c) => c,
            ConnectedSum::Both { pipeline, .. } => pipeline,
        }
    }

    pub fn report(&self) -> Option<&EqualityReport> {
        match self {
            ConnectedSum::Single(_) => None,
            ConnectedSum::Both { report, .. } => Some(report),
        }
    }
}

fn check_inputs(k1: &OrderedComplex, k2: &OrderedComplex) -> Result<()> {
    for k in [k1, k2] {
        if !k.complex().is_flag() {
            return Err(Error::NotFlag);
        }
        for v in k.complex().vertices() {
            if v.is_composite() {
                return Err(Error::ReservedCharacter(v.to_string()));
            }
        }
    }
    Ok(())
}

pub fn connected_sum_window(
    k1: &OrderedComplex,
    k2: &OrderedComplex,
    w: Window,
    method: Method,
) -> Result<ConnectedSum> {
    check_inputs(k1, k2)?;
    match method {
        Method::ProductPipeline => Ok(ConnectedSum::Single(SumPipeline::build(k1, k2, w)?.sum)),
        Method::DirectRule => Ok(ConnectedSum::Single(direct_rule(k1, k2, w)?)),
        Method::Both => {
            let (pipeline, direct) = std::thread::scope(|s| {
                let handle = s.spawn(|| SumPipeline::build(k1, k2, w).map(|p| p.sum));
                let direct = direct_rule(k1, k2, w);
                (handle.join().expect("pipeline thread panicked"), direct)
            });
            let (pipeline, direct) = (pipeline?, direct?);
            let report = EqualityReport::compare(&pipeline, &direct);
            Ok(ConnectedSum::Both {
                pipeline,
                direct,
                report,
            })
        }
    }
}

fn direct_rule(k1: &OrderedComplex, k2: &OrderedComplex, w: Window) -> Result<SumWindowComplex> {
    let (c1, c2) = (k1.complex(), k2.complex());
    let (n1, n2, len) = (c1.vertex_count(), c2.vertex_count(), w.len());
    let raw_index = |i: usize, j: usize, n: i64| (i * n2 + j) * len + (n - w.lo()) as usize;

    let mut tokens = Vec::with_capacity(n1 * n2 * len);
    for i in 0..n1 {
        for j in 0..n2 {
            for n in w.levels() {
                tokens.push(label_triple(c1.vertex(i), c2.vertex(j), n)?);
            }
        }
    }
    let (tokens, remap) = sort_tokens(tokens)?;

    let first_leq = |i, j| k1.leq_idx(i, j);
    let second_leq = |i, j| k2.leq_idx(i, j);
    let mut edges = Vec::new();
    let mut pairs = Vec::new();
    for i in 0..n1 {
        for j in 0..n2 {
            for n in w.levels() {
                let t = (i, j, n);
                // comparable factor vertices are equal or adjacent
                let lefts = std::iter::once(i).chain(c1.neighbors_idx(i).iter().copied());
                for k in lefts {
                    let rights = std::iter::once(j).chain(c2.neighbors_idx(j).iter().copied());
                    for l in rights {
                        for m in (n - 1..=n + 1).filter(|&m| w.contains(m)) {
                            let u = (k, l, m);
                            if u == t {
                                continue;
                            }
                            // u below t
                            if adjacent_in_roles(first_leq, second_leq, t, u) {
                                let (a, b) = (remap[raw_index(i, j, n)], remap[raw_index(k, l, m)]);
                                pairs.push((b, a));
                                if a < b {
                                    edges.push((a, b));
                                } else {
                                    edges.push((b, a));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let complex = Complex::from_sorted_edges(tokens, edges);
    Ok(SumWindowComplex {
        ordered: OrderedComplex::from_index_pairs(complex, pairs)?,
        window: w,
        provenance: Provenance::DirectRule,
        product_simplices: None,
    })
}

/// The product pipeline with its intermediate products kept, so points can
/// be realised repeatedly without rebuilding.
#[derive(Clone, Debug)]
pub struct SumPipeline {
    /// `K1 × Z` with the componentwise order.
    k1_line: ProductComplex,
    /// `(K1 × Z, sheared) × K2`.
    full: ProductComplex,
    /// Product-vertex index of `full` to triple label.
    labels: Vec<VertexId>,
    sum: SumWindowComplex,
}

impl SumPipeline {
    pub fn new(k1: &OrderedComplex, k2: &OrderedComplex, w: Window) -> Result<Self> {
        check_inputs(k1, k2)?;
        Self::build(k1, k2, w)
    }

    fn build(k1: &OrderedComplex, k2: &OrderedComplex, w: Window) -> Result<Self> {
        let z = z_window(w);
        let levels = levels_of(&z);
        let k1_line = ordered_product(k1, &z)?;
        let at = |p: usize| {
            let (i, a) = k1_line.parts_idx(p);
            (i, levels[a])
        };
        let sheared = k1_line.reordered(|p, q| sheared_idx(k1, at(p), at(q)))?;
        let full = ordered_product(sheared.ordered(), k2)?;

        let labels = (0..full.complex().vertex_count())
            .map(|p| {
                let (q, j) = full.parts_idx(p);
                let (i, n) = at(q);
                label_triple(k1.complex().vertex(i), k2.complex().vertex(j), n)
            })
            .collect::<Result<Vec<_>>>()?;
        let relabel = |v: &VertexId| Ok(labels[full.complex().index(v)?].clone());
        let raw = full.ordered().relabel(relabel)?;
        let closure = raw.complex().flag_closure();
        let ordered = OrderedComplex::new(closure, &raw.relation())?;
        let sum = SumWindowComplex {
            ordered,
            window: w,
            provenance: Provenance::ProductPipeline,
            product_simplices: Some(raw.into_complex()),
        };
        Ok(Self {
            k1_line,
            full,
            labels,
            sum,
        })
    }

    pub fn complex(&self) -> &SumWindowComplex {
        &self.sum
    }

    pub fn into_complex(self) -> SumWindowComplex {
        self.sum
    }

    /// The point over `(p1, p2, r)`: `r = n + t` with `t ∈ [0, 1)` becomes the
    /// line point `(1 - t)·n + t·(n + 1)`, which is combined with `p1` in
    /// `K1 × Z`, and the result with `p2` under the sheared order.
    pub fn realize(&self, p1: &WeightedPoint, p2: &WeightedPoint, r: &BigRational) -> Result<WeightedPoint> {
        let w = self.sum.window;
        let floor = r.floor();
        let t = r - &floor;
        let n = floor
            .to_integer()
            .to_i64()
            .ok_or(Error::WindowTooSmall { lo: w.lo(), hi: w.hi(), level: i64::MAX })?;
        let needed = if t.is_zero() { vec![n] } else { vec![n, n + 1] };
        if let Some(&level) = needed.iter().find(|&&m| !w.contains(m)) {
            return Err(Error::WindowTooSmall { lo: w.lo(), hi: w.hi(), level });
        }
        let line_point = if t.is_zero() {
            WeightedPoint::vertex(level_token(n))
        } else {
            WeightedPoint::new([
                (level_token(n), BigRational::one() - &t),
                (level_token(n + 1), t.clone()),
            ])?
        };
        debug_assert!(!t.is_negative());

        let first = realize_in_product(&self.k1_line, p1, &line_point)?;
        let second = realize_in_product(&self.full, &first, p2)?;
        let point = second.push_forward(|v| Ok(self.labels[self.full.complex().index(v)?].clone()))?;
        if !self.sum.complex().is_simplex(&point.support())? {
            return Err(Error::NotASimplex(point.support().to_string()));
        }
        Ok(point)
    }
}

/// One-shot form of [`SumPipeline::realize`].
pub fn realize_triple(
    k1: &OrderedComplex,
    k2: &OrderedComplex,
    p1: &WeightedPoint,
    p2: &WeightedPoint,
    r: &BigRational,
    w: Window,
) -> Result<WeightedPoint> {
    SumPipeline::new(k1, k2, w)?.realize(p1, p2, r)
}

/// Expected level `Σ weight · n` of a point on triple labels.
pub fn expected_level(point: &WeightedPoint) -> Result<BigRational> {
    let mut total = BigRational::zero();
    for (v, w) in point.entries() {
        total += w * BigRational::from_integer(unlabel_triple(v)?.n.into());
    }
    Ok(total)
}

/// The simplex spanned by the labels of `triples`.
pub fn triple_simplex(triples: &[TripleVertex]) -> Result<Simplex> {
    Simplex::new(triples.iter().map(TripleVertex::label).collect::<Result<Vec<_>>>()?)
}

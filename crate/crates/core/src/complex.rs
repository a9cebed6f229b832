//! Finite abstract simplicial complexes.
//!
//! A [`Complex`] owns a sorted vertex list; every internal structure refers to
//! vertices by their position in that list, so index order and token order
//! agree and sorted index lists are canonical simplices.
//!
//! Two representations are supported. A flag complex stores only its edges and
//! a vertex set is a simplex iff it is a clique. An explicit complex stores its
//! maximal simplices and a vertex set is a simplex iff it is contained in one of
//! them. Clique lists are never materialised except on demand.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Separator used to build composite tokens such as `a|x|3`.
pub const SEPARATOR: char = '|';

/// Opaque vertex label.
///
/// Atomic tokens never contain [`SEPARATOR`]. Composite tokens are produced by
/// joining atomic components and are only created by this crate (products,
/// triple labels) or by parsing documents that declare composite tokens.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    /// An atomic token: nonempty and free of the separator.
    pub fn new(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() {
            return Err(Error::EmptyToken);
        }
        if token.contains(SEPARATOR) {
            return Err(Error::ReservedCharacter(token));
        }
        Ok(Self(token))
    }

    /// A composite token whose components are each nonempty.
    pub fn parse_composite(token: impl Into<String>) -> Result<Self> {
        let token = token.into();
        if token.is_empty() {
            return Err(Error::EmptyToken);
        }
        if token.split(SEPARATOR).any(str::is_empty) {
            return Err(Error::MalformedToken(token));
        }
        Ok(Self(token))
    }

    /// Builds a token from atomic components.
    pub fn from_components(parts: &[&str]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyToken);
        }
        for part in parts {
            Self::new(*part)?;
        }
        Ok(Self(parts.join("|")))
    }

    /// The flat token `left|right`.
    pub fn pair(left: &VertexId, right: &VertexId) -> Self {
        Self(format!("{}{SEPARATOR}{}", left.0, right.0))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn components(&self) -> impl Iterator<Item = &str> {
        self.0.split(SEPARATOR)
    }

    pub fn is_composite(&self) -> bool {
        self.0.contains(SEPARATOR)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A nonempty vertex set, kept sorted by token.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    pub fn new(vertices: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let mut vertices: Vec<VertexId> = vertices.into_iter().collect();
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].0.clone()));
        }
        Ok(Self(vertices))
    }

    /// Convenience constructor from atomic tokens.
    pub fn from_tokens(tokens: &[&str]) -> Result<Self> {
        Self::new(
            tokens
                .iter()
                .map(|t| VertexId::new(*t))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn vertex(v: VertexId) -> Self {
        Self(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.0.binary_search(v).is_ok())
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(&v.0)?;
        }
        f.write_str("}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Flag,
    Explicit,
}

/// Input for [`Complex::build`].
#[derive(Clone, Debug)]
pub enum ComplexData {
    Edges(Vec<(VertexId, VertexId)>),
    Maximal(Vec<Vec<VertexId>>),
}

/// Result of a 1-skeleton distance query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Distance {
    Steps(usize),
    Unreachable,
}

impl Distance {
    pub fn steps(self) -> Option<usize> {
        match self {
            Distance::Steps(d) => Some(d),
            Distance::Unreachable => None,
        }
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Steps(d) => write!(f, "{d}"),
            Distance::Unreachable => f.write_str("unreachable"),
        }
    }
}

#[derive(Clone, Debug)]
enum Repr {
    Flag,
    Explicit {
        /// Maximal simplices, each sorted, the list sorted.
        facets: Vec<Vec<usize>>,
        /// For each vertex, the facets containing it.
        containing: Vec<Vec<usize>>,
    },
}

#[derive(Clone, Debug)]
pub struct Complex {
    vertices: Vec<VertexId>,
    index: HashMap<VertexId, usize>,
    adjacency: Vec<Vec<usize>>,
    repr: Repr,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.adjacency == other.adjacency
            && self.facets_idx() == other.facets_idx()
    }
}

impl Eq for Complex {}

/// Sorts tokens and returns them with `remap[old] = new`.
pub(crate) fn sort_tokens(tokens: Vec<VertexId>) -> Result<(Vec<VertexId>, Vec<usize>)> {
    let mut order: Vec<usize> = (0..tokens.len()).collect();
    order.sort_by(|&a, &b| tokens[a].cmp(&tokens[b]));
    let mut remap = vec![0; tokens.len()];
    for (new, &old) in order.iter().enumerate() {
        remap[old] = new;
    }
    let mut slots: Vec<Option<VertexId>> = tokens.into_iter().map(Some).collect();
    let sorted: Vec<VertexId> = order
        .iter()
        .map(|&old| slots[old].take().expect("each slot taken once"))
        .collect();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateVertex(w[0].0.clone()));
    }
    Ok((sorted, remap))
}

fn is_sorted_subset(small: &[usize], large: &[usize]) -> bool {
    let mut it = large.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

impl Complex {
    pub fn build(vertices: impl IntoIterator<Item = VertexId>, data: ComplexData) -> Result<Self> {
        let (vertices, _) = sort_tokens(vertices.into_iter().collect())?;
        let index: HashMap<VertexId, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let lookup = |v: &VertexId| {
            index
                .get(v)
                .copied()
                .ok_or_else(|| Error::UnknownVertex(v.0.clone()))
        };
        match data {
            ComplexData::Edges(edges) => {
                let mut indexed = Vec::with_capacity(edges.len());
                for (u, v) in &edges {
                    let (iu, iv) = (lookup(u)?, lookup(v)?);
                    if iu == iv {
                        return Err(Error::DuplicateVertex(u.0.clone()));
                    }
                    indexed.push((iu, iv));
                }
                Ok(Self::from_sorted_edges(vertices, indexed))
            }
            ComplexData::Maximal(simplices) => {
                let mut facets = Vec::with_capacity(simplices.len());
                for s in &simplices {
                    if s.is_empty() {
                        return Err(Error::EmptySimplex);
                    }
                    let mut idx = s.iter().map(lookup).collect::<Result<Vec<_>>>()?;
                    idx.sort_unstable();
                    if let Some(w) = idx.windows(2).find(|w| w[0] == w[1]) {
                        return Err(Error::DuplicateVertex(vertices[w[0]].0.clone()));
                    }
                    facets.push(idx);
                }
                Ok(Self::from_sorted_facets(vertices, facets))
            }
        }
    }

    pub fn flag(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        Self::build(vertices, ComplexData::Edges(edges.into_iter().collect()))
    }

    pub fn explicit(
        vertices: impl IntoIterator<Item = VertexId>,
        maximal: impl IntoIterator<Item = Vec<VertexId>>,
    ) -> Result<Self> {
        Self::build(vertices, ComplexData::Maximal(maximal.into_iter().collect()))
    }

    /// `vertices` must be sorted and unique; edges are index pairs into it.
    pub(crate) fn from_sorted_edges(
        vertices: Vec<VertexId>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut adjacency = vec![Vec::new(); vertices.len()];
        for (u, v) in edges {
            debug_assert_ne!(u, v);
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Self {
            index: Self::index_of(&vertices),
            vertices,
            adjacency,
            repr: Repr::Flag,
        }
    }

    /// `vertices` must be sorted and unique; each facet a sorted index list.
    /// Non-maximal and repeated entries are dropped; uncovered vertices become
    /// singleton facets.
    pub(crate) fn from_sorted_facets(vertices: Vec<VertexId>, mut facets: Vec<Vec<usize>>) -> Self {
        let n = vertices.len();
        facets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        facets.dedup();
        let mut kept: Vec<Vec<usize>> = Vec::new();
        let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
        for facet in facets {
            let covered = containing[facet[0]]
                .iter()
                .any(|&k| is_sorted_subset(&facet, &kept[k]));
            if covered {
                continue;
            }
            for &v in &facet {
                containing[v].push(kept.len());
            }
            kept.push(facet);
        }
        for v in 0..n {
            if containing[v].is_empty() {
                containing[v].push(kept.len());
                kept.push(vec![v]);
            }
        }
        // canonical facet order, then rebuild the incidence lists against it
        kept.sort();
        let mut containing = vec![Vec::new(); n];
        let mut adjacency = vec![Vec::new(); n];
        for (k, facet) in kept.iter().enumerate() {
            for (a, &u) in facet.iter().enumerate() {
                containing[u].push(k);
                for &v in &facet[a + 1..] {
                    adjacency[u].push(v);
                    adjacency[v].push(u);
                }
            }
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Self {
            index: Self::index_of(&vertices),
            vertices,
            adjacency,
            repr: Repr::Explicit {
                facets: kept,
                containing,
            },
        }
    }

    fn index_of(vertices: &[VertexId]) -> HashMap<VertexId, usize> {
        vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect()
    }

    pub fn mode(&self) -> Mode {
        match self.repr {
            Repr::Flag => Mode::Flag,
            Repr::Explicit { .. } => Mode::Explicit,
        }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, i: usize) -> &VertexId {
        &self.vertices[i]
    }

    pub fn index(&self, v: &VertexId) -> Result<usize> {
        self.index
            .get(v)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(v.0.clone()))
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.index.contains_key(v)
    }

    pub(crate) fn neighbors_idx(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub(crate) fn adjacent_idx(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn are_adjacent(&self, u: &VertexId, v: &VertexId) -> Result<bool> {
        Ok(self.adjacent_idx(self.index(u)?, self.index(v)?))
    }

    /// Edges as index pairs `(i, j)` with `i < j`, in lexicographic order.
    pub(crate) fn edges_idx(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, ns)| ns.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.edges_idx()
            .map(|(i, j)| (self.vertices[i].clone(), self.vertices[j].clone()))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub(crate) fn facets_idx(&self) -> Option<&[Vec<usize>]> {
        match &self.repr {
            Repr::Flag => None,
            Repr::Explicit { facets, .. } => Some(facets),
        }
    }

    /// Maximal simplices of an explicit complex; `None` for flag complexes.
    pub fn maximal_simplices(&self) -> Option<Vec<Simplex>> {
        self.facets_idx()
            .map(|facets| facets.iter().map(|f| self.simplex_of(f)).collect())
    }

    pub(crate) fn simplex_of(&self, idx: &[usize]) -> Simplex {
        Simplex(idx.iter().map(|&i| self.vertices[i].clone()).collect())
    }

    pub(crate) fn indices_of(&self, s: &Simplex) -> Result<Vec<usize>> {
        // token order is index order, so the result is already sorted
        s.0.iter().map(|v| self.index(v)).collect()
    }

    /// Membership test on a sorted, duplicate-free index list.
    pub(crate) fn contains_idx(&self, s: &[usize]) -> bool {
        match s.len() {
            0 => false,
            1 => true,
            _ => match &self.repr {
                Repr::Flag => s
                    .iter()
                    .enumerate()
                    .all(|(a, &u)| s[a + 1..].iter().all(|&v| self.adjacent_idx(u, v))),
                Repr::Explicit { facets, containing } => containing[s[0]]
                    .iter()
                    .any(|&k| is_sorted_subset(s, &facets[k])),
            },
        }
    }

    pub fn is_simplex(&self, s: &Simplex) -> Result<bool> {
        Ok(self.contains_idx(&self.indices_of(s)?))
    }

    /// Visits every simplex (as a sorted index list) with at most `max_len`
    /// vertices.
    pub(crate) fn for_each_simplex_idx(&self, max_len: usize, mut f: impl FnMut(&[usize])) {
        let mut current = Vec::new();
        for v in 0..self.vertices.len() {
            let candidates: Vec<usize> =
                self.adjacency[v].iter().copied().filter(|&u| u > v).collect();
            current.push(v);
            self.extend_simplex(&mut current, &candidates, max_len, &mut f);
            current.pop();
        }
    }

    fn extend_simplex(
        &self,
        current: &mut Vec<usize>,
        candidates: &[usize],
        max_len: usize,
        f: &mut impl FnMut(&[usize]),
    ) {
        f(current);
        if current.len() >= max_len {
            return;
        }
        let check = matches!(self.repr, Repr::Explicit { .. });
        for (k, &c) in candidates.iter().enumerate() {
            current.push(c);
            if !check || self.contains_idx(current) {
                let next: Vec<usize> = candidates[k + 1..]
                    .iter()
                    .copied()
                    .filter(|&x| self.adjacent_idx(c, x))
                    .collect();
                self.extend_simplex(current, &next, max_len, f);
            }
            current.pop();
        }
    }

    /// All simplices of dimension at most `max_dim` (all when `None`), sorted.
    pub fn simplices(&self, max_dim: Option<usize>) -> Vec<Simplex> {
        let max_len = max_dim.map_or(usize::MAX, |d| d + 1);
        let mut out = Vec::new();
        self.for_each_simplex_idx(max_len, |s| out.push(self.simplex_of(s)));
        out.sort();
        out
    }

    pub fn simplex_set(&self) -> BTreeSet<Simplex> {
        self.simplices(None).into_iter().collect()
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = Vec::new();
        self.for_each_simplex_idx(usize::MAX, |s| {
            if counts.len() < s.len() {
                counts.resize(s.len(), 0);
            }
            counts[s.len() - 1] += 1;
        });
        counts
    }

    pub fn simplex_count(&self) -> usize {
        self.f_vector().iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// True iff every clique of the 1-skeleton is a simplex.
    pub fn is_flag(&self) -> bool {
        match &self.repr {
            Repr::Flag => true,
            Repr::Explicit { .. } => {
                let mut current = Vec::new();
                (0..self.vertices.len()).all(|v| {
                    let candidates: Vec<usize> =
                        self.adjacency[v].iter().copied().filter(|&u| u > v).collect();
                    current.push(v);
                    let ok = self.cliques_are_simplices(&mut current, &candidates);
                    current.pop();
                    ok
                })
            }
        }
    }

    fn cliques_are_simplices(&self, current: &mut Vec<usize>, candidates: &[usize]) -> bool {
        if !self.contains_idx(current) {
            return false;
        }
        for (k, &c) in candidates.iter().enumerate() {
            let next: Vec<usize> = candidates[k + 1..]
                .iter()
                .copied()
                .filter(|&x| self.adjacent_idx(c, x))
                .collect();
            current.push(c);
            let ok = self.cliques_are_simplices(current, &next);
            current.pop();
            if !ok {
                return false;
            }
        }
        true
    }

    /// The flag complex on the same 1-skeleton.
    pub fn flag_closure(&self) -> Complex {
        Complex {
            vertices: self.vertices.clone(),
            index: self.index.clone(),
            adjacency: self.adjacency.clone(),
            repr: Repr::Flag,
        }
    }

    /// Breadth-first distances from `source`; `None` marks other components.
    pub(crate) fn distances_from_idx(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].expect("queued vertices have a distance");
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn skeleton_distance(&self, u: &VertexId, v: &VertexId) -> Result<Distance> {
        let (iu, iv) = (self.index(u)?, self.index(v)?);
        Ok(match self.distances_from_idx(iu)[iv] {
            Some(d) => Distance::Steps(d),
            None => Distance::Unreachable,
        })
    }

    /// The full subcomplex on `keep`: every simplex of `self` whose vertices
    /// all lie in `keep`.
    pub fn induced(&self, keep: &[VertexId]) -> Result<Complex> {
        let mut marked = vec![false; self.vertices.len()];
        for v in keep {
            marked[self.index(v)?] = true;
        }
        let mut remap = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if marked[i] {
                remap[i] = vertices.len();
                vertices.push(v.clone());
            }
        }
        Ok(match &self.repr {
            Repr::Flag => Self::from_sorted_edges(
                vertices,
                self.edges_idx()
                    .filter(|&(i, j)| marked[i] && marked[j])
                    .map(|(i, j)| (remap[i], remap[j])),
            ),
            Repr::Explicit { facets, .. } => Self::from_sorted_facets(
                vertices,
                facets
                    .iter()
                    .map(|f| {
                        f.iter()
                            .filter(|&&i| marked[i])
                            .map(|&i| remap[i])
                            .collect::<Vec<_>>()
                    })
                    .filter(|f| !f.is_empty())
                    .collect(),
            ),
        })
    }

    /// Relabels vertices; the map must be injective.
    pub fn relabel(&self, f: impl Fn(&VertexId) -> Result<VertexId>) -> Result<Complex> {
        let tokens = self.vertices.iter().map(f).collect::<Result<Vec<_>>>()?;
        let (vertices, remap) = sort_tokens(tokens)?;
        Ok(match &self.repr {
            Repr::Flag => Self::from_sorted_edges(
                vertices,
                self.edges_idx().map(|(i, j)| (remap[i], remap[j])),
            ),
            Repr::Explicit { facets, .. } => Self::from_sorted_facets(
                vertices,
                facets
                    .iter()
                    .map(|f| {
                        let mut g: Vec<usize> = f.iter().map(|&i| remap[i]).collect();
                        g.sort_unstable();
                        g
                    })
                    .collect(),
            ),
        })
    }
}

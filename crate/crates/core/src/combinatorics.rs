//! Subsets and matchings of complete graphs, with deterministic ordering.
//!
//! Vertex sets are finite subsets of the integers, always stored in strictly
//! increasing order. Edges are 2-element subsets in canonical `(lo, hi)` form,
//! and a matching is a set of pairwise vertex-disjoint edges kept sorted
//! lexicographically. Every enumeration in this module is total and
//! deterministic so that matrix rows and columns indexed by subsets or
//! matchings are reproducible across runs.

use std::fmt;

use num::bigint::BigUint;
use num::integer::binomial;
use num::traits::One;

use crate::{Error, Result};

/// A vertex of the complete graph; any integer is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub i64);

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite set of vertices, sorted strictly increasing and duplicate-free.
///
/// The empty set is allowed: complements and recursive constructions shrink
/// down to it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet {
    verts: Vec<Vertex>,
}

impl VertexSet {
    /// Builds a set from arbitrary integers, sorting and removing duplicates.
    pub fn from_ints<I: IntoIterator<Item = i64>>(ids: I) -> Self {
        let mut verts: Vec<Vertex> = ids.into_iter().map(Vertex).collect();
        verts.sort_unstable();
        verts.dedup();
        VertexSet { verts }
    }

    /// The set `{1, 2, ..., n}`.
    pub fn first_n(n: usize) -> Self {
        VertexSet::from_ints(1..=n as i64)
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.verts.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.verts.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.verts.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.verts
    }

    /// Set difference `self \ other`.
    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            verts: self
                .verts
                .iter()
                .copied()
                .filter(|v| !other.contains(*v))
                .collect(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        VertexSet::from_ints(self.iter().chain(other.iter()).map(|v| v.0))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.verts.iter().all(|v| !other.contains(*v))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.verts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// An edge of a complete graph: a 2-element vertex subset in `(lo, hi)` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Canonicalizes the endpoint order. Panics on a loop (`a == b`): a loop
    /// is not a 2-element subset, so no valid caller can produce one.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert!(a != b, "an edge needs two distinct vertices, got {a} twice");
        if a < b {
            Edge { lo: a, hi: b }
        } else {
            Edge { lo: b, hi: a }
        }
    }

    pub fn between(a: i64, b: i64) -> Self {
        Edge::new(Vertex(a), Vertex(b))
    }

    pub fn lo(&self) -> Vertex {
        self.lo
    }

    pub fn hi(&self) -> Vertex {
        self.hi
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.lo == other.lo || self.lo == other.hi || self.hi == other.lo || self.hi == other.hi
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::from_ints([self.lo.0, self.hi.0])
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// A set of pairwise vertex-disjoint edges, sorted lexicographically by
/// `(lo, hi)`. The empty matching is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Matching {
    edges: Vec<Edge>,
}

impl Matching {
    /// Sorts the edges and checks pairwise disjointness.
    pub fn new(mut edges: Vec<Edge>) -> Result<Self> {
        edges.sort_unstable();
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                if edges[i].shares_vertex(&edges[j]) {
                    return Err(Error::ParameterViolation(
                        "matching edges must be pairwise vertex-disjoint",
                    ));
                }
            }
        }
        Ok(Matching { edges })
    }

    pub fn empty() -> Self {
        Matching::default()
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// The vertices covered by the matching.
    pub fn vertices(&self) -> VertexSet {
        VertexSet::from_ints(self.edges.iter().flat_map(|e| [e.lo.0, e.hi.0]))
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// All k-element subsets of `u` in lexicographic order of their sorted
/// tuples. Empty when `k > |u|`; the single empty set when `k = 0`.
pub fn k_subsets(u: &VertexSet, k: usize) -> Vec<VertexSet> {
    let verts = u.as_slice();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    subsets_rec(verts, k, 0, &mut current, &mut out);
    out
}

fn subsets_rec(
    verts: &[Vertex],
    k: usize,
    start: usize,
    current: &mut Vec<Vertex>,
    out: &mut Vec<VertexSet>,
) {
    if current.len() == k {
        out.push(VertexSet {
            verts: current.clone(),
        });
        return;
    }
    let remaining = k - current.len();
    for i in start..verts.len() {
        if verts.len() - i < remaining {
            break;
        }
        current.push(verts[i]);
        subsets_rec(verts, k, i + 1, current, out);
        current.pop();
    }
}

/// All k-element subsets of the edge set of the complete graph on `u`,
/// in lexicographic order.
pub fn edge_subsets(u: &VertexSet, k: usize) -> Vec<Vec<Edge>> {
    let edges = edge_set(u);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    edge_subsets_rec(&edges, k, 0, &mut current, &mut out);
    out
}

fn edge_subsets_rec(
    edges: &[Edge],
    k: usize,
    start: usize,
    current: &mut Vec<Edge>,
    out: &mut Vec<Vec<Edge>>,
) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    let remaining = k - current.len();
    for i in start..edges.len() {
        if edges.len() - i < remaining {
            break;
        }
        current.push(edges[i]);
        edge_subsets_rec(edges, k, i + 1, current, out);
        current.pop();
    }
}

/// The edge set of the complete graph on `u`, sorted by `(lo, hi)`.
pub fn edge_set(u: &VertexSet) -> Vec<Edge> {
    let verts = u.as_slice();
    let mut edges = Vec::with_capacity(verts.len() * verts.len().saturating_sub(1) / 2);
    for i in 0..verts.len() {
        for j in i + 1..verts.len() {
            edges.push(Edge {
                lo: verts[i],
                hi: verts[j],
            });
        }
    }
    edges
}

/// True iff all distinct edges are pairwise vertex-disjoint.
pub fn is_matching(edges: &[Edge]) -> bool {
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if edges[i] != edges[j] && edges[i].shares_vertex(&edges[j]) {
                return false;
            }
        }
    }
    true
}

/// All k-edge matchings of the complete graph on `u`, sorted
/// lexicographically by edge list.
pub fn matchings(u: &VertexSet, k: usize) -> Vec<Matching> {
    let edges = edge_set(u);
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    matchings_rec(&edges, k, 0, &mut current, &mut out);
    out
}

fn matchings_rec(
    edges: &[Edge],
    k: usize,
    start: usize,
    current: &mut Vec<Edge>,
    out: &mut Vec<Matching>,
) {
    if current.len() == k {
        out.push(Matching {
            edges: current.clone(),
        });
        return;
    }
    for i in start..edges.len() {
        let e = edges[i];
        if current.iter().any(|f| f.shares_vertex(&e)) {
            continue;
        }
        current.push(e);
        matchings_rec(edges, k, i + 1, current, out);
        current.pop();
    }
}

/// `C(u, 2k) * (2k-1)!!`, the number of k-edge matchings of the complete
/// graph on `u` vertices.
pub fn matching_count(u: usize, k: usize) -> BigUint {
    if 2 * k > u {
        return BigUint::ZERO;
    }
    let choose = binomial(BigUint::from(u), BigUint::from(2 * k));
    let df = double_factorial(2 * k as i64 - 1).expect("2k-1 >= -1");
    choose * df
}

/// The double factorial with the empty-product convention
/// `(-1)!! = 0!! = 1`. Arguments below -1 are rejected.
pub fn double_factorial(n: i64) -> Result<BigUint> {
    if n < -1 {
        return Err(Error::DoubleFactorialDomain(n));
    }
    let mut acc = BigUint::one();
    let mut m = n;
    while m > 1 {
        acc *= BigUint::from(m as u64);
        m -= 2;
    }
    Ok(acc)
}

/// The matching pairing consecutive elements of the sorted vertex set:
/// for `V = {v1 < ... < v_2d}` the edges `{v1,v2}, {v3,v4}, ...`.
pub fn canonical_matching(v: &VertexSet) -> Result<Matching> {
    if !v.len().is_multiple_of(2) {
        return Err(Error::OddVertexSet(v.len()));
    }
    let edges = v
        .as_slice()
        .chunks_exact(2)
        .map(|pair| Edge {
            lo: pair[0],
            hi: pair[1],
        })
        .collect();
    Ok(Matching { edges })
}

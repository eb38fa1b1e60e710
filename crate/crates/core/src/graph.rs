//! Edge-signed directed graphs and their structural classification.
//!
//! Edges are stored aggregated: for every ordered pair of vertices we keep
//! the number of edges with sign `+1` and the number with sign `−1`. An edge
//! "from `v` to `u`" has source `v` and range `u`. Either count may be
//! infinite.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result, Violation};

/// An extended natural number, `ℕ ∪ {∞}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(u64),
    Infinite,
}

impl Count {
    pub const ZERO: Count = Count::Finite(0);

    pub fn is_infinite(self) -> bool {
        matches!(self, Count::Infinite)
    }

    pub fn is_zero(self) -> bool {
        self == Count::ZERO
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Count::Finite(n) => Some(n),
            Count::Infinite => None,
        }
    }

    /// `None` when a finite sum overflows `u64`.
    pub fn checked_add(self, other: Count) -> Option<Count> {
        match (self, other) {
            (Count::Finite(a), Count::Finite(b)) => a.checked_add(b).map(Count::Finite),
            _ => Some(Count::Infinite),
        }
    }
}

impl Add for Count {
    type Output = Count;

    fn add(self, other: Count) -> Count {
        self.checked_add(other).expect("edge count overflow")
    }
}

impl PartialOrd for Count {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Count {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Count::Finite(a), Count::Finite(b)) => a.cmp(b),
            (Count::Finite(_), Count::Infinite) => Ordering::Less,
            (Count::Infinite, Count::Finite(_)) => Ordering::Greater,
            (Count::Infinite, Count::Infinite) => Ordering::Equal,
        }
    }
}

impl From<u64> for Count {
    fn from(n: u64) -> Self {
        Count::Finite(n)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "{n}"),
            Count::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Count {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(Count::Infinite);
        }
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("expected a natural number or `inf`, found `{s}`"));
        }
        s.parse::<u64>()
            .map(Count::Finite)
            .map_err(|_| format!("count `{s}` is too large"))
    }
}

impl Serialize for Count {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Count::Finite(n) => serializer.serialize_u64(*n),
            Count::Infinite => serializer.serialize_str("inf"),
        }
    }
}

/// Number of positively and negatively signed edges between an ordered
/// pair of vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SignedMultiplicity {
    pub pos: Count,
    pub neg: Count,
}

impl Default for SignedMultiplicity {
    fn default() -> Self {
        SignedMultiplicity::ZERO
    }
}

impl SignedMultiplicity {
    pub const ZERO: SignedMultiplicity = SignedMultiplicity { pos: Count::ZERO, neg: Count::ZERO };

    pub fn new(pos: impl Into<Count>, neg: impl Into<Count>) -> Self {
        SignedMultiplicity { pos: pos.into(), neg: neg.into() }
    }

    /// Panics if the finite sum overflows; graphs never hold such a pair.
    pub fn total(self) -> Count {
        self.pos + self.neg
    }

    pub fn is_zero(self) -> bool {
        self.pos.is_zero() && self.neg.is_zero()
    }

    pub fn is_infinite(self) -> bool {
        self.pos.is_infinite() || self.neg.is_infinite()
    }

    /// `pos − neg`, defined only when both counts are finite.
    pub fn signed_sum(self) -> Option<i128> {
        Some(i128::from(self.pos.finite()?) - i128::from(self.neg.finite()?))
    }

    /// `pos + neg` as an integer, defined only when both counts are finite.
    pub fn unsigned_sum(self) -> Option<i128> {
        Some(i128::from(self.pos.finite()?) + i128::from(self.neg.finite()?))
    }

    pub fn checked_add(self, other: SignedMultiplicity) -> Option<SignedMultiplicity> {
        Some(SignedMultiplicity {
            pos: self.pos.checked_add(other.pos)?,
            neg: self.neg.checked_add(other.neg)?,
        })
    }
}

/// A vertex name: a nonempty token of ASCII letters, digits and `_`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_vertex_token(&name) {
            Ok(VertexId(name))
        } else {
            Err(Error::InvalidVertexName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_vertex_token(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VertexId::new(s)
    }
}

impl AsRef<str> for VertexId {
    fn as_ref(&self) -> &str {
        &self.0
    }
}

/// A directed graph with Z₂-signed edges, stored as signed multiplicities
/// per ordered vertex pair.
///
/// Graphs built through [`SignedGraph::new`] or [`GraphBuilder`] are always
/// valid. [`SignedGraph::from_parts_unchecked`] exists so that
/// [`validate`] has something to report on.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SignedGraph {
    vertices: Vec<VertexId>,
    edges: BTreeMap<(VertexId, VertexId), SignedMultiplicity>,
}

impl SignedGraph {
    /// Builds a graph, accumulating repeated pairs and dropping zero
    /// multiplicities. Fails on any [`Violation`].
    pub fn new<I>(vertices: Vec<VertexId>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((VertexId, VertexId), SignedMultiplicity)>,
    {
        let graph = Self::from_parts_unchecked(vertices, edges)?;
        validate(&graph).map_err(Error::InvalidGraph)?;
        Ok(graph)
    }

    /// Like [`SignedGraph::new`] but skips validation. Only multiplicity
    /// overflow is reported.
    pub fn from_parts_unchecked<I>(vertices: Vec<VertexId>, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((VertexId, VertexId), SignedMultiplicity)>,
    {
        let mut map: BTreeMap<(VertexId, VertexId), SignedMultiplicity> = BTreeMap::new();
        for (key, mult) in edges {
            if mult.is_zero() {
                continue;
            }
            let entry = map.entry(key.clone()).or_default();
            *entry = entry
                .checked_add(mult)
                .filter(|m| m.pos.checked_add(m.neg).is_some())
                .ok_or_else(|| Error::Input(format!("edge count overflow on ({} -> {})", key.0, key.1)))?;
        }
        Ok(SignedGraph { vertices, edges: map })
    }

    pub fn builder() -> GraphBuilder {
        GraphBuilder::default()
    }

    /// Vertices in declaration order.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn contains(&self, v: &str) -> bool {
        self.vertices.iter().any(|x| x.as_str() == v)
    }

    /// Multiplicity of edges with source `src` and range `dst`.
    pub fn multiplicity(&self, src: &str, dst: &str) -> SignedMultiplicity {
        self.edges
            .iter()
            .find(|((s, d), _)| s.as_str() == src && d.as_str() == dst)
            .map(|(_, m)| *m)
            .unwrap_or_default()
    }

    /// All nonzero pairs, ordered by vertex name.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId, SignedMultiplicity)> {
        self.edges.iter().map(|((s, d), m)| (s, d, *m))
    }

    /// Nonzero pairs ordered by declaration position of source, then range.
    pub fn edges_in_declaration_order(&self) -> Vec<(&VertexId, &VertexId, SignedMultiplicity)> {
        let pos = self.positions();
        let mut out: Vec<_> = self.edges().collect();
        out.sort_by_key(|(s, d, _)| {
            (pos.get(s.as_str()).copied().unwrap_or(usize::MAX), pos.get(d.as_str()).copied().unwrap_or(usize::MAX))
        });
        out
    }

    /// Same graph with the vertices declared in a different order.
    pub fn with_vertex_order(&self, order: Vec<VertexId>) -> Result<Self> {
        let mut a: Vec<_> = order.iter().collect();
        let mut b: Vec<_> = self.vertices.iter().collect();
        a.sort();
        b.sort();
        if a != b {
            return Err(Error::Input("vertex order must be a permutation of the declared vertices".into()));
        }
        Ok(SignedGraph { vertices: order, edges: self.edges.clone() })
    }

    pub(crate) fn positions(&self) -> HashMap<&str, usize> {
        let mut map = HashMap::with_capacity(self.vertices.len());
        for (i, v) in self.vertices.iter().enumerate() {
            map.entry(v.as_str()).or_insert(i);
        }
        map
    }

    /// Out-going multiplicities of every vertex, keyed by source.
    fn emitted(&self) -> HashMap<&str, Count> {
        let mut out: HashMap<&str, Count> = HashMap::new();
        for ((s, _), m) in &self.edges {
            let e = out.entry(s.as_str()).or_insert(Count::ZERO);
            // finite out-degrees beyond u64 are still finite; clamp rather than misreport ∞
            *e = e.checked_add(m.total()).unwrap_or(Count::Finite(u64::MAX));
        }
        out
    }
}

/// Incremental construction of a [`SignedGraph`].
#[derive(Debug, Clone, Default)]
pub struct GraphBuilder {
    vertices: Vec<VertexId>,
    edges: Vec<((VertexId, VertexId), SignedMultiplicity)>,
    error: Option<Error>,
}

impl GraphBuilder {
    pub fn vertex(mut self, name: &str) -> Self {
        match VertexId::new(name) {
            Ok(v) => self.vertices.push(v),
            Err(e) => {
                self.error.get_or_insert(e);
            }
        }
        self
    }

    pub fn vertices<'a>(self, names: impl IntoIterator<Item = &'a str>) -> Self {
        names.into_iter().fold(self, |b, n| b.vertex(n))
    }

    /// Adds `pos` positive and `neg` negative edges from `src` to `dst`.
    pub fn edges(mut self, src: &str, dst: &str, pos: impl Into<Count>, neg: impl Into<Count>) -> Self {
        match (VertexId::new(src), VertexId::new(dst)) {
            (Ok(s), Ok(d)) => self.edges.push(((s, d), SignedMultiplicity::new(pos, neg))),
            (Err(e), _) | (_, Err(e)) => {
                self.error.get_or_insert(e);
            }
        }
        self
    }

    pub fn build(self) -> Result<SignedGraph> {
        if let Some(e) = self.error {
            return Err(e);
        }
        SignedGraph::new(self.vertices, self.edges)
    }
}

/// Reports duplicate vertex declarations and pairs naming undeclared
/// vertices.
pub fn validate(g: &SignedGraph) -> std::result::Result<(), Vec<Violation>> {
    let mut violations = Vec::new();
    let mut seen = HashSet::new();
    for v in &g.vertices {
        if !seen.insert(v.as_str()) {
            violations.push(Violation::DuplicateVertex(v.to_string()));
        }
    }
    for (s, d) in g.edges.keys() {
        for end in [s, d] {
            if !seen.contains(end.as_str()) {
                violations.push(Violation::UndeclaredVertex {
                    src: s.to_string(),
                    dst: d.to_string(),
                    missing: end.to_string(),
                });
                break;
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(violations)
    }
}

/// `|s⁻¹(v)|`: the total number of edges with source `v`.
pub fn out_degree(g: &SignedGraph, v: &str) -> Result<Count> {
    if !g.contains(v) {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    Ok(g.emitted().get(v).copied().unwrap_or(Count::ZERO))
}

/// Properties of the graph correspondence `X(E)` over `C₀(E⁰)` that are
/// determined by the shape of the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CorrespondenceProperties {
    /// Left action by compact operators; equivalent to row-finiteness.
    pub left_action_compact: bool,
    /// Injective left action; equivalent to having no sinks.
    pub left_action_injective: bool,
    /// Full module; equivalent to having no sources.
    pub module_full: bool,
    pub left_action_nondegenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphProperties {
    pub sinks: Vec<VertexId>,
    pub sources: Vec<VertexId>,
    pub infinite_emitters: Vec<VertexId>,
    /// The set `F` of vertices emitting finitely many edges.
    pub finite_emitters: Vec<VertexId>,
    /// The set `G` of vertices emitting at least one edge.
    pub non_sinks: Vec<VertexId>,
    pub row_finite: bool,
    pub correspondence: CorrespondenceProperties,
}

impl GraphProperties {
    /// `F ∩ G`, the regular vertices, in declaration order.
    pub fn regular(&self) -> Vec<VertexId> {
        self.finite_emitters
            .iter()
            .filter(|v| self.non_sinks.contains(v))
            .cloned()
            .collect()
    }
}

pub fn classify(g: &SignedGraph) -> GraphProperties {
    let emitted = g.emitted();
    let mut received: HashSet<&str> = HashSet::new();
    for (_, d) in g.edges.keys() {
        received.insert(d.as_str());
    }

    let mut props = GraphProperties {
        sinks: Vec::new(),
        sources: Vec::new(),
        infinite_emitters: Vec::new(),
        finite_emitters: Vec::new(),
        non_sinks: Vec::new(),
        row_finite: true,
        correspondence: CorrespondenceProperties {
            left_action_compact: true,
            left_action_injective: true,
            module_full: true,
            left_action_nondegenerate: true,
        },
    };
    for v in &g.vertices {
        let out = emitted.get(v.as_str()).copied().unwrap_or(Count::ZERO);
        if out.is_zero() {
            props.sinks.push(v.clone());
        } else {
            props.non_sinks.push(v.clone());
        }
        if out.is_infinite() {
            props.infinite_emitters.push(v.clone());
        } else {
            props.finite_emitters.push(v.clone());
        }
        if !received.contains(v.as_str()) {
            props.sources.push(v.clone());
        }
    }
    props.row_finite = props.infinite_emitters.is_empty();
    props.correspondence.left_action_compact = props.row_finite;
    props.correspondence.left_action_injective = props.sinks.is_empty();
    props.correspondence.module_full = props.sources.is_empty();
    props
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(vs: &[VertexId]) -> Vec<&str> {
        vs.iter().map(|v| v.as_str()).collect()
    }

    fn b_infinity() -> SignedGraph {
        SignedGraph::builder().vertex("v").edges("v", "v", Count::Infinite, 0).build().unwrap()
    }

    fn example_two_vertex(r: u64, s: u64, p: u64, q: u64) -> SignedGraph {
        SignedGraph::builder()
            .vertices(["v", "w"])
            .edges("v", "w", Count::Infinite, 0)
            .edges("w", "v", q, p)
            .edges("w", "w", r, s)
            .build()
            .unwrap()
    }

    #[test]
    fn out_degree_examples() {
        let isolated = SignedGraph::builder().vertex("v").build().unwrap();
        assert_eq!(out_degree(&isolated, "v").unwrap(), Count::ZERO);
        assert_eq!(out_degree(&b_infinity(), "v").unwrap(), Count::Infinite);
        let g = example_two_vertex(1, 2, 3, 4);
        assert_eq!(out_degree(&g, "w").unwrap(), Count::Finite(10));
        assert_eq!(out_degree(&g, "v").unwrap(), Count::Infinite);
        assert_eq!(out_degree(&g, "x"), Err(Error::UnknownVertex("x".into())));
    }

    #[test]
    fn classify_b_infinity() {
        let p = classify(&b_infinity());
        assert!(p.sinks.is_empty());
        assert!(p.sources.is_empty());
        assert_eq!(names(&p.infinite_emitters), ["v"]);
        assert!(p.finite_emitters.is_empty());
        assert!(!p.row_finite);
        assert!(!p.correspondence.left_action_compact);
        assert!(p.correspondence.left_action_injective);
    }

    #[test]
    fn classify_isolated_vertex() {
        let p = classify(&SignedGraph::builder().vertex("v").build().unwrap());
        assert_eq!(names(&p.sinks), ["v"]);
        assert_eq!(names(&p.sources), ["v"]);
        assert_eq!(names(&p.finite_emitters), ["v"]);
        assert!(p.non_sinks.is_empty());
        assert!(p.row_finite);
        assert!(!p.correspondence.left_action_injective);
        assert!(!p.correspondence.module_full);
    }

    #[test]
    fn classify_two_vertex_example() {
        let p = classify(&example_two_vertex(1, 0, 0, 0));
        assert_eq!(names(&p.infinite_emitters), ["v"]);
        assert_eq!(names(&p.finite_emitters), ["w"]);
        assert!(p.sinks.is_empty());
        assert_eq!(names(&p.regular()), ["w"]);
    }

    #[test]
    fn empty_graph_classifies_trivially() {
        let g = SignedGraph::builder().build().unwrap();
        let p = classify(&g);
        assert!(p.sinks.is_empty() && p.finite_emitters.is_empty());
        assert!(p.row_finite);
    }

    #[test]
    fn validate_reports_defects() {
        let v = |s: &str| VertexId::new(s).unwrap();
        let ok = SignedGraph::from_parts_unchecked(
            vec![v("a"), v("b")],
            [((v("a"), v("b")), SignedMultiplicity::new(1, 0))],
        )
        .unwrap();
        assert_eq!(validate(&ok), Ok(()));

        let undeclared = SignedGraph::from_parts_unchecked(
            vec![v("a")],
            [((v("a"), v("z")), SignedMultiplicity::new(1, 0))],
        )
        .unwrap();
        assert_eq!(
            validate(&undeclared),
            Err(vec![Violation::UndeclaredVertex { src: "a".into(), dst: "z".into(), missing: "z".into() }])
        );

        let dup = SignedGraph::from_parts_unchecked(vec![v("a"), v("a")], []).unwrap();
        assert_eq!(validate(&dup), Err(vec![Violation::DuplicateVertex("a".into())]));
        assert!(matches!(SignedGraph::new(vec![v("a"), v("a")], []), Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn repeated_pairs_accumulate_and_zero_pairs_vanish() {
        let g = SignedGraph::builder()
            .vertices(["a", "b"])
            .edges("a", "b", 1, 0)
            .edges("a", "b", 2, 5)
            .edges("b", "a", 0, 0)
            .build()
            .unwrap();
        assert_eq!(g.multiplicity("a", "b"), SignedMultiplicity::new(3, 5));
        assert_eq!(g.edges().count(), 1);
        assert_eq!(names(&classify(&g).sources), ["a"]);
    }

    #[test]
    fn infinite_in_either_sign_makes_infinite_emitter() {
        let g = SignedGraph::builder()
            .vertices(["a", "b"])
            .edges("a", "b", 0, Count::Infinite)
            .edges("b", "a", 1, 0)
            .build()
            .unwrap();
        let p = classify(&g);
        assert_eq!(names(&p.infinite_emitters), ["a"]);
        assert!(!p.row_finite);
    }

    #[test]
    fn bad_vertex_names_rejected() {
        assert!(VertexId::new("").is_err());
        assert!(VertexId::new("a-b").is_err());
        assert!(VertexId::new("v_1").is_ok());
    }

    #[test]
    fn count_parsing() {
        assert_eq!("inf".parse::<Count>(), Ok(Count::Infinite));
        assert_eq!("12".parse::<Count>(), Ok(Count::Finite(12)));
        assert!("-1".parse::<Count>().is_err());
        assert!("99999999999999999999999".parse::<Count>().is_err());
        assert!(Count::Finite(u64::MAX).checked_add(Count::Finite(1)).is_none());
    }
}

//! K-groups of graph algebras as cokernel and kernel of `ι − Aᵀ`.
//!
//! For the graded theory `A` is the graded adjacency matrix with rows
//! indexed by the finite emitters `F`; entry `(v, u)` is the number of
//! positively signed edges from `v` to `u` minus the number of negatively
//! signed ones. For the ungraded theory signs are ignored and rows are
//! restricted to the regular vertices `F ∩ G`. In both cases `ι` is the
//! inclusion of the row index set into `ℤ^{E⁰}`, so the matrix
//! `M = ι − Aᵀ` has shape `|E⁰| × |R|`:
//!
//! ```text
//! 0 → K₁ → ℤ^R --M--> ℤ^{E⁰} → K₀ → 0
//! ```

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::graph::{classify, SignedGraph, SignedMultiplicity, VertexId};
use crate::linalg::{cokernel, kernel_basis, AbelianGroup, IntMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Graded,
    Ungraded,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Graded => "graded",
            Mode::Ungraded => "ungraded",
        }
    }
}

/// The pair `(K₀, K₁)`, with the matrix it was computed from when it came
/// out of the graph pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KGroups {
    pub k0: AbelianGroup,
    pub k1: AbelianGroup,
    pub graded: bool,
    /// Set when the graded formula was applied outside its proven range
    /// (graphs with sinks).
    pub experimental: bool,
    pub matrix: Option<IntMatrix>,
    /// Vertices indexing the columns of `matrix`.
    pub row_set: Vec<VertexId>,
}

impl KGroups {
    pub fn new(k0: AbelianGroup, k1: AbelianGroup, graded: bool) -> Self {
        KGroups { k0, k1, graded, experimental: false, matrix: None, row_set: Vec::new() }
    }

    /// True when the groups (not the provenance) agree.
    pub fn same_groups(&self, other: &KGroups) -> bool {
        self.k0 == other.k0 && self.k1 == other.k1
    }
}

impl fmt::Display for KGroups {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.k0, self.k1)
    }
}

/// Adjacency-type matrix with rows `rows` and columns all vertices, entry
/// given by `entry` applied to the multiplicity of each pair.
fn adjacency_on(
    g: &SignedGraph,
    rows: &[VertexId],
    entry: impl Fn(SignedMultiplicity) -> Option<i128>,
) -> IntMatrix {
    let cols = g.vertices();
    let mut a = IntMatrix::zeros(rows.len(), cols.len());
    for (i, v) in rows.iter().enumerate() {
        for (j, u) in cols.iter().enumerate() {
            let m = g.multiplicity(v.as_str(), u.as_str());
            let x = entry(m).expect("rows are restricted to finite emitters");
            a[(i, j)] = BigInt::from(x);
        }
    }
    a
}

/// The graded adjacency matrix `A^δ_{F,E⁰}`: rows are the finite emitters
/// and columns all vertices, both in declaration order.
pub fn graded_adjacency(g: &SignedGraph) -> IntMatrix {
    let props = classify(g);
    adjacency_on(g, &props.finite_emitters, SignedMultiplicity::signed_sum)
}

/// The ordinary adjacency matrix `A_{F∩G,E⁰}`, counting edges of both signs.
pub fn ungraded_adjacency(g: &SignedGraph) -> IntMatrix {
    let props = classify(g);
    adjacency_on(g, &props.regular(), SignedMultiplicity::unsigned_sum)
}

/// `M = ι − Aᵀ` of shape `|E⁰| × |R|`, `M[u][v] = [u = v] − A[v][u]`.
fn iota_minus_transpose(g: &SignedGraph, rows: &[VertexId], a: &IntMatrix) -> IntMatrix {
    let verts = g.vertices();
    let mut m = IntMatrix::zeros(verts.len(), rows.len());
    for (c, v) in rows.iter().enumerate() {
        for (u_idx, u) in verts.iter().enumerate() {
            let mut x = -a[(c, u_idx)].clone();
            if u == v {
                x += 1;
            }
            m[(u_idx, c)] = x;
        }
    }
    m
}

fn row_set(g: &SignedGraph, mode: Mode, allow_sinks: bool) -> Result<Vec<VertexId>> {
    let props = classify(g);
    match mode {
        Mode::Graded if !props.sinks.is_empty() && !allow_sinks => {
            Err(Error::HasSinks(props.sinks.iter().map(ToString::to_string).collect()))
        }
        Mode::Graded if !props.sinks.is_empty() => Ok(props.regular()),
        Mode::Graded => Ok(props.finite_emitters),
        Mode::Ungraded => Ok(props.regular()),
    }
}

fn matrix_for(g: &SignedGraph, mode: Mode, allow_sinks: bool) -> Result<(Vec<VertexId>, IntMatrix)> {
    let rows = row_set(g, mode, allow_sinks)?;
    let a = match mode {
        Mode::Graded => adjacency_on(g, &rows, SignedMultiplicity::signed_sum),
        Mode::Ungraded => adjacency_on(g, &rows, SignedMultiplicity::unsigned_sum),
    };
    let m = iota_minus_transpose(g, &rows, &a);
    Ok((rows, m))
}

/// The matrix whose cokernel and kernel are `K₀` and `K₁`.
///
/// Graded mode requires a graph without sinks and fails with
/// [`Error::HasSinks`] otherwise.
pub fn k_matrix(g: &SignedGraph, mode: Mode) -> Result<IntMatrix> {
    matrix_for(g, mode, false).map(|(_, m)| m)
}

fn groups_from(rows: Vec<VertexId>, m: IntMatrix, graded: bool) -> KGroups {
    let k0 = cokernel(&m);
    let k1 = AbelianGroup::free(kernel_basis(&m).len());
    KGroups { k0, k1, graded, experimental: false, matrix: Some(m), row_set: rows }
}

/// Graded K-theory of a sink-free graph.
pub fn graded_k_groups(g: &SignedGraph) -> Result<KGroups> {
    let (rows, m) = matrix_for(g, Mode::Graded, false)?;
    Ok(groups_from(rows, m, true))
}

/// The graded formula with rows `F ∩ G`, applied to any graph. For graphs
/// with sinks this is unproven and the result is flagged `experimental`;
/// for sink-free graphs it coincides with [`graded_k_groups`].
pub fn experimental_graded_k_groups(g: &SignedGraph) -> KGroups {
    let (rows, m) = matrix_for(g, Mode::Graded, true).expect("sinks allowed");
    let mut out = groups_from(rows, m, true);
    out.experimental = !classify(g).sinks.is_empty();
    out
}

/// Ordinary K-theory of any graph; edge signs are ignored.
pub fn ungraded_k_groups(g: &SignedGraph) -> KGroups {
    let (rows, m) = matrix_for(g, Mode::Ungraded, false).expect("ungraded mode has no precondition");
    groups_from(rows, m, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Count;

    fn two_vertex(r: u64, s: u64, p: u64, q: u64) -> SignedGraph {
        SignedGraph::builder()
            .vertices(["v", "w"])
            .edges("v", "w", Count::Infinite, 0)
            .edges("w", "v", q, p)
            .edges("w", "w", r, s)
            .build()
            .unwrap()
    }

    #[test]
    fn graded_adjacency_two_vertex() {
        let a = graded_adjacency(&two_vertex(1, 0, 0, 2));
        // columns in declaration order (v, w): (q − p, r − s)
        assert_eq!(a, IntMatrix::from_rows(&[vec![2, 1]]));
    }

    #[test]
    fn graded_adjacency_b_infinity_is_empty() {
        let g = SignedGraph::builder().vertex("v").edges("v", "v", Count::Infinite, 0).build().unwrap();
        assert_eq!(graded_adjacency(&g).shape(), (0, 1));
    }

    #[test]
    fn balanced_loop_cancels() {
        let g = SignedGraph::builder().vertex("v").edges("v", "v", 3, 3).build().unwrap();
        assert_eq!(graded_adjacency(&g), IntMatrix::zeros(1, 1));
        assert_eq!(ungraded_adjacency(&g), IntMatrix::from_rows(&[vec![6]]));
    }

    #[test]
    fn k_matrix_examples() {
        // (r, s, p, q) = (1, 0, 0, 0): rows ordered (v, w), single column w
        let m = k_matrix(&two_vertex(1, 0, 0, 0), Mode::Graded).unwrap();
        assert_eq!(m, IntMatrix::column(&[0, 0]));

        let on = |n: u64| SignedGraph::builder().vertex("v").edges("v", "v", n, 0).build().unwrap();
        for n in 0..5u64 {
            let m = k_matrix(&on(n), Mode::Ungraded).unwrap();
            let expected = if n == 0 { IntMatrix::zeros(1, 0) } else { IntMatrix::from_rows(&[vec![1 - n as i64]]) };
            assert_eq!(m, expected, "n = {n}");
        }

        let sink = SignedGraph::builder().vertex("v").build().unwrap();
        assert_eq!(k_matrix(&sink, Mode::Ungraded).unwrap().shape(), (1, 0));
        assert_eq!(k_matrix(&sink, Mode::Graded), Err(Error::HasSinks(vec!["v".into()])));
    }

    #[test]
    fn graded_groups_two_vertex_cases() {
        let g = |r, s, p, q| {
            let k = graded_k_groups(&two_vertex(r, s, p, q)).unwrap();
            (k.k0.to_string(), k.k1.to_string())
        };
        assert_eq!(g(1, 0, 0, 0), ("Z^2".into(), "Z".into()));
        assert_eq!(g(0, 0, 1, 1), ("Z".into(), "0".into()));
        assert_eq!(g(1, 0, 2, 0), ("Z (+) Z_2".into(), "0".into()));
        assert_eq!(g(3, 0, 2, 0), ("Z (+) Z_2".into(), "0".into()));
        assert_eq!(g(0, 2, 0, 0), ("Z (+) Z_3".into(), "0".into()));
    }

    #[test]
    fn ungraded_examples() {
        let o2 = SignedGraph::builder().vertex("v").edges("v", "v", 2, 0).build().unwrap();
        assert_eq!(ungraded_k_groups(&o2).to_string(), "(0, 0)");

        let cycle = SignedGraph::builder()
            .vertices(["v", "w"])
            .edges("v", "w", 1, 0)
            .edges("w", "v", 1, 0)
            .build()
            .unwrap();
        assert_eq!(ungraded_k_groups(&cycle).to_string(), "(Z, Z)");

        let sink = SignedGraph::builder().vertex("v").build().unwrap();
        assert_eq!(ungraded_k_groups(&sink).to_string(), "(Z, 0)");
    }

    #[test]
    fn signs_ignored_when_ungraded() {
        let a = SignedGraph::builder().vertex("v").edges("v", "v", 1, 2).build().unwrap();
        let b = SignedGraph::builder().vertex("v").edges("v", "v", 3, 0).build().unwrap();
        assert!(ungraded_k_groups(&a).same_groups(&ungraded_k_groups(&b)));
        // graded: 1 − (1 − 2) = 2 vs 1 − 3 = −2, both Z_2
        assert_eq!(graded_k_groups(&a).unwrap().to_string(), "(Z_2, 0)");
    }

    #[test]
    fn experimental_mode_flags_sinks_only() {
        let g = SignedGraph::builder().vertices(["a", "b"]).edges("a", "b", 0, 1).build().unwrap();
        let k = experimental_graded_k_groups(&g);
        assert!(k.experimental);
        assert_eq!(k.row_set, vec![VertexId::new("a").unwrap()]);

        let o2 = SignedGraph::builder().vertex("v").edges("v", "v", 2, 0).build().unwrap();
        let k = experimental_graded_k_groups(&o2);
        assert!(!k.experimental);
        assert!(k.same_groups(&graded_k_groups(&o2).unwrap()));
    }
}

//! Structured results for the command line and the C interface.
//!
//! Every document serializes deterministically: struct fields in
//! declaration order, vertex lists in declaration order, integers as exact
//! JSON numbers.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{classify, GraphProperties, SignedGraph, VertexId};
use crate::ktheory::{experimental_graded_k_groups, graded_k_groups, ungraded_k_groups, KGroups, Mode};
use crate::linalg::{smith_normal_form, AbelianGroup, IntMatrix};

pub const EXPERIMENTAL_WARNING: &str = "experimental: graded formula applied to a graph with sinks \
(rows restricted to regular vertices); the result is not backed by a proof";

fn number(x: &BigInt) -> serde_json::Number {
    serde_json::Number::from_str(&x.to_string()).expect("integers are valid JSON numbers")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupReport {
    pub canonical: String,
    pub free_rank: usize,
    pub torsion: Vec<serde_json::Number>,
}

impl From<&AbelianGroup> for GroupReport {
    fn from(g: &AbelianGroup) -> Self {
        GroupReport {
            canonical: g.to_string(),
            free_rank: g.free_rank(),
            torsion: g.torsion().iter().map(number).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatrixReport {
    pub rows: usize,
    pub cols: usize,
    /// Vertex labelling each row (all vertices).
    pub row_labels: Vec<VertexId>,
    /// Vertex labelling each column (the row index set of the adjacency).
    pub col_labels: Vec<VertexId>,
    pub entries: Vec<Vec<serde_json::Number>>,
}

fn matrix_entries(m: &IntMatrix) -> Vec<Vec<serde_json::Number>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(number).collect()).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultDocument {
    pub input: String,
    pub properties: GraphProperties,
    pub mode: Option<String>,
    pub matrix: Option<MatrixReport>,
    pub k0: Option<GroupReport>,
    pub k1: Option<GroupReport>,
    pub warnings: Vec<String>,
}

/// Properties-only document.
pub fn analyze_document(input: &str, g: &SignedGraph) -> ResultDocument {
    ResultDocument {
        input: input.to_string(),
        properties: classify(g),
        mode: None,
        matrix: None,
        k0: None,
        k1: None,
        warnings: Vec::new(),
    }
}

/// Runs the K-theory pipeline. In graded mode a graph with sinks is an
/// error unless `allow_sinks` is set, in which case the result carries a
/// warning.
pub fn kgroups_document(input: &str, g: &SignedGraph, mode: Mode, allow_sinks: bool) -> Result<ResultDocument> {
    let k = match mode {
        Mode::Graded if allow_sinks => experimental_graded_k_groups(g),
        Mode::Graded => graded_k_groups(g)?,
        Mode::Ungraded => ungraded_k_groups(g),
    };
    Ok(document_from(input, g, mode, &k))
}

fn document_from(input: &str, g: &SignedGraph, mode: Mode, k: &KGroups) -> ResultDocument {
    let mut doc = analyze_document(input, g);
    doc.mode = Some(if k.experimental { "graded-experimental".into() } else { mode.as_str().into() });
    if let Some(m) = &k.matrix {
        doc.matrix = Some(MatrixReport {
            rows: m.rows(),
            cols: m.cols(),
            row_labels: g.vertices().to_vec(),
            col_labels: k.row_set.clone(),
            entries: matrix_entries(m),
        });
    }
    doc.k0 = Some(GroupReport::from(&k.k0));
    doc.k1 = Some(GroupReport::from(&k.k1));
    if k.experimental {
        doc.warnings.push(EXPERIMENTAL_WARNING.to_string());
    }
    doc
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types always serialize");
    s.push('\n');
    s
}

fn names(vs: &[VertexId]) -> String {
    if vs.is_empty() {
        "{}".to_string()
    } else {
        format!("{{{}}}", vs.iter().map(VertexId::as_str).collect::<Vec<_>>().join(", "))
    }
}

/// Human-readable rendering of a [`ResultDocument`].
pub fn document_text(doc: &ResultDocument) -> String {
    let p = &doc.properties;
    let mut out = String::new();
    let _ = writeln!(out, "input: {}", doc.input);
    let _ = writeln!(out, "sinks: {}", names(&p.sinks));
    let _ = writeln!(out, "sources: {}", names(&p.sources));
    let _ = writeln!(out, "infinite emitters: {}", names(&p.infinite_emitters));
    let _ = writeln!(out, "finite emitters (F): {}", names(&p.finite_emitters));
    let _ = writeln!(out, "non-sinks (G): {}", names(&p.non_sinks));
    let _ = writeln!(out, "row-finite: {}", p.row_finite);
    let c = &p.correspondence;
    let _ = writeln!(out, "left action compact: {}", c.left_action_compact);
    let _ = writeln!(out, "left action injective: {}", c.left_action_injective);
    let _ = writeln!(out, "module full: {}", c.module_full);
    let _ = writeln!(out, "left action nondegenerate: {}", c.left_action_nondegenerate);
    if let Some(mode) = &doc.mode {
        let _ = writeln!(out, "mode: {mode}");
    }
    if let Some(m) = &doc.matrix {
        let _ = writeln!(
            out,
            "matrix (iota - A^T), {}x{}, rows {} / columns {}:",
            m.rows,
            m.cols,
            names(&m.row_labels),
            names(&m.col_labels)
        );
        if m.rows == 0 || m.cols == 0 {
            let _ = writeln!(out, "  [empty]");
        }
        for row in &m.entries {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            let _ = writeln!(out, "  [{}]", cells.join(" "));
        }
    }
    if let (Some(k0), Some(k1)) = (&doc.k0, &doc.k1) {
        let _ = writeln!(out, "K0 = {}", k0.canonical);
        let _ = writeln!(out, "K1 = {}", k1.canonical);
    }
    for w in &doc.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SnfReport {
    pub rows: usize,
    pub cols: usize,
    pub u: Vec<Vec<serde_json::Number>>,
    pub d: Vec<Vec<serde_json::Number>>,
    pub v: Vec<Vec<serde_json::Number>>,
    pub rank: usize,
    pub invariant_factors: Vec<serde_json::Number>,
    pub cokernel: GroupReport,
    pub kernel_rank: usize,
}

/// Smith normal form of `m`, self-checked before it is returned.
pub fn snf_report(m: &IntMatrix) -> std::result::Result<(SnfReport, String), String> {
    let snf = smith_normal_form(m);
    snf.verify(m).map_err(|e| format!("internal error: Smith normal form failed verification: {e}"))?;
    let factors = snf.invariant_factors();
    let coker = AbelianGroup::from_cyclic(
        factors.iter().cloned().chain(std::iter::repeat_n(BigInt::from(0), m.rows() - snf.rank)),
    );
    let report = SnfReport {
        rows: m.rows(),
        cols: m.cols(),
        u: matrix_entries(&snf.u),
        d: matrix_entries(&snf.d),
        v: matrix_entries(&snf.v),
        rank: snf.rank,
        invariant_factors: factors.iter().map(number).collect(),
        cokernel: GroupReport::from(&coker),
        kernel_rank: m.cols() - snf.rank,
    };
    let mut text = String::new();
    let _ = writeln!(text, "U =\n{}", snf.u);
    let _ = writeln!(text, "D =\n{}", snf.d);
    let _ = writeln!(text, "V =\n{}", snf.v);
    let _ = writeln!(text, "rank = {}", snf.rank);
    let fs: Vec<String> = factors.iter().map(ToString::to_string).collect();
    let _ = writeln!(text, "invariant factors = ({})", fs.join(", "));
    let _ = writeln!(text, "cokernel = {}", report.cokernel.canonical);
    let _ = writeln!(text, "kernel rank = {}", report.kernel_rank);
    let _ = writeln!(text, "check: U*M*V = D ok");
    Ok((report, text))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse_graph;

    #[test]
    fn experimental_documents_carry_a_warning() {
        let g = parse_graph("vertices: a b\nedges: a -> b +1").unwrap();
        assert!(kgroups_document("x", &g, Mode::Graded, false).is_err());
        let doc = kgroups_document("x", &g, Mode::Graded, true).unwrap();
        assert_eq!(doc.mode.as_deref(), Some("graded-experimental"));
        assert_eq!(doc.warnings, [EXPERIMENTAL_WARNING]);
        assert!(document_text(&doc).contains("warning: experimental"));
    }

    #[test]
    fn json_is_stable() {
        let g = parse_graph("vertices: v w\nedges: v -> w +inf\nedges: w -> w +1").unwrap();
        let a = to_json(&kgroups_document("g.txt", &g, Mode::Graded, false).unwrap());
        let b = to_json(&kgroups_document("g.txt", &g, Mode::Graded, false).unwrap());
        assert_eq!(a, b);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        assert_eq!(v["k0"]["canonical"], "Z^2");
        assert_eq!(v["k1"]["free_rank"], 1);
        assert_eq!(v["matrix"]["entries"], serde_json::json!([[0], [0]]));
        assert_eq!(v["properties"]["finite_emitters"], serde_json::json!(["w"]));
    }

    #[test]
    fn snf_text_and_json() {
        let m = IntMatrix::from_rows(&[vec![2, 4], vec![4, 8]]);
        let (r, text) = snf_report(&m).unwrap();
        assert_eq!(r.rank, 1);
        assert_eq!(r.cokernel.canonical, "Z (+) Z_2");
        assert!(text.contains("invariant factors = (2)"));
    }

    #[test]
    fn huge_entries_are_exact_in_json() {
        let big = BigInt::from(10).pow(30);
        let g = AbelianGroup::new(0, vec![big.clone()]).unwrap();
        let json = to_json(&GroupReport::from(&g));
        assert!(json.contains(&big.to_string()));
    }
}

//! Brute-force ground truth: rerun Dijkstra with one path element masked out.
//! `O(l (m + n log n))`, meant for verification only.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::{EdgeId, Graph, VertexId, WeightedAdjacency};
use crate::pipeline::{Mode, ReplacementPaths, SolveError};
use crate::report::{FailedElement, SwapRoute};
use crate::spt::{dijkstra, extract_path, ShortestPath};

struct Masked<'a> {
    graph: &'a Graph,
    edge: Option<EdgeId>,
    vertex: Option<VertexId>,
}

impl WeightedAdjacency for Masked<'_> {
    fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    fn for_each_arc<F: FnMut(VertexId, EdgeId, f64)>(&self, v: VertexId, mut f: F) {
        if self.vertex == Some(v) {
            return;
        }
        for &(w, id) in self.graph.neighbors(v) {
            if Some(id) != self.edge && Some(w) != self.vertex {
                f(w, id, self.graph.edge(id).weight);
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub element: FailedElement,
    pub distance: Option<f64>,
    pub path: Option<Vec<VertexId>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    TargetUnreachable,
    /// The masked element is not on the shortest `s`-`t` path (or is an endpoint).
    NotOnPath,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::TargetUnreachable => f.write_str("target is not reachable from source"),
            OracleError::NotOnPath => f.write_str("element is not on the shortest s-t path"),
        }
    }
}

impl core::error::Error for OracleError {}

fn reference_path(g: &Graph) -> Result<ShortestPath, OracleError> {
    extract_path(&dijkstra(g, g.source()), g.target()).ok_or(OracleError::TargetUnreachable)
}

fn masked_run(g: &Graph, element: FailedElement) -> OracleReport {
    let (edge, vertex) = match element {
        FailedElement::Edge { edge, .. } => (Some(edge), None),
        FailedElement::Vertex { vertex, .. } => (None, Some(vertex)),
    };
    let tree = dijkstra(
        &Masked {
            graph: g,
            edge,
            vertex,
        },
        g.source(),
    );
    let t = g.target();
    OracleReport {
        element,
        distance: tree.is_reachable(t).then(|| tree.dist(t)),
        path: tree.path_to(t),
    }
}

/// Shortest `s`-`t` distance with path edge `edge` removed.
pub fn oracle_edge(g: &Graph, edge: EdgeId) -> Result<OracleReport, OracleError> {
    let path = reference_path(g)?;
    let pos = path
        .edges
        .iter()
        .position(|&e| e == edge)
        .ok_or(OracleError::NotOnPath)?;
    Ok(masked_run(
        g,
        FailedElement::Edge {
            index: pos + 1,
            edge,
        },
    ))
}

/// Shortest `s`-`t` distance with internal path vertex `vertex` removed.
pub fn oracle_node(g: &Graph, vertex: VertexId) -> Result<OracleReport, OracleError> {
    let path = reference_path(g)?;
    let l = path.len();
    let pos = path
        .vertices
        .iter()
        .position(|&v| v == vertex)
        .filter(|&i| i >= 1 && i < l)
        .ok_or(OracleError::NotOnPath)?;
    Ok(masked_run(g, FailedElement::Vertex { index: pos, vertex }))
}

/// Oracle reports for every path edge and then every internal path vertex,
/// sharing one reference path.
pub fn brute_force(g: &Graph) -> Result<Vec<OracleReport>, OracleError> {
    let path = reference_path(g)?;
    let l = path.len();
    let edges = path
        .edges
        .iter()
        .enumerate()
        .map(|(k, &edge)| FailedElement::Edge { index: k + 1, edge });
    let vertices = (1..l).map(|index| FailedElement::Vertex {
        index,
        vertex: path.vertices[index],
    });
    Ok(edges.chain(vertices).map(|e| masked_run(g, e)).collect())
}

#[derive(Clone, Debug, PartialEq)]
pub enum PathDefect {
    Missing,
    UnexpectedPath,
    WrongEndpoints,
    RepeatedVertex(VertexId),
    /// No usable edge joins consecutive vertices.
    Disconnected(VertexId, VertexId),
    UsesFailedVertex,
    WeightMismatch {
        path: f64,
        reported: f64,
    },
}

/// Checks that `path` is a simple `s`-`t` path in the graph minus `element`
/// whose weight equals `distance`. Between consecutive vertices the lightest
/// surviving parallel edge is used.
pub fn validate_path(
    g: &Graph,
    element: FailedElement,
    distance: Option<f64>,
    path: Option<&[VertexId]>,
) -> Result<(), PathDefect> {
    let (distance, path) = match (distance, path) {
        (None, None) => return Ok(()),
        (None, Some(_)) => return Err(PathDefect::UnexpectedPath),
        (Some(_), None) => return Err(PathDefect::Missing),
        (Some(d), Some(p)) => (d, p),
    };
    if path.first() != Some(&g.source()) || path.last() != Some(&g.target()) {
        return Err(PathDefect::WrongEndpoints);
    }
    let mut seen = vec![false; g.vertex_count()];
    for &v in path {
        if seen[v] {
            return Err(PathDefect::RepeatedVertex(v));
        }
        seen[v] = true;
        if matches!(element, FailedElement::Vertex { vertex, .. } if vertex == v) {
            return Err(PathDefect::UsesFailedVertex);
        }
    }
    let mut total = 0.0;
    for w in path.windows(2) {
        let (a, b) = (w[0], w[1]);
        let lightest = g
            .neighbors(a)
            .iter()
            .filter(|&&(x, id)| {
                x == b && !matches!(element, FailedElement::Edge { edge, .. } if edge == id)
            })
            .map(|&(_, id)| g.edge(id).weight)
            .min_by(f64::total_cmp)
            .ok_or(PathDefect::Disconnected(a, b))?;
        total += lightest;
    }
    if total != distance {
        return Err(PathDefect::WeightMismatch {
            path: total,
            reported: distance,
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq)]
pub struct Mismatch {
    pub element: FailedElement,
    pub fast: Option<f64>,
    pub oracle: Option<f64>,
    pub defect: Option<PathDefect>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Comparison {
    pub edge_checks: usize,
    pub node_checks: usize,
    /// Vertex reports whose winning swap leaves from a forest vertex.
    pub forest_wins: usize,
    pub mismatches: Vec<Mismatch>,
}

impl Comparison {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Runs the fast algorithm and the oracle for every path edge and internal path
/// vertex. Distances must agree exactly; each fast path is validated on its
/// own since ties may legitimately produce different paths.
pub fn compare_all(g: &Graph) -> Result<Comparison, SolveError> {
    let rp = ReplacementPaths::compute(g, Mode::All)?;
    let mut cmp = Comparison::default();
    for report in rp.reports() {
        let expected = masked_run(g, report.element);
        match report.element {
            FailedElement::Edge { .. } => cmp.edge_checks += 1,
            FailedElement::Vertex { .. } => {
                cmp.node_checks += 1;
                if report.swap.is_some_and(|s| s.route == SwapRoute::Forest) {
                    cmp.forest_wins += 1;
                }
            }
        }
        let fast = report.distance();
        let path = rp.path(report);
        let defect = validate_path(g, report.element, fast, path.as_deref()).err();
        if fast != expected.distance || defect.is_some() {
            cmp.mismatches.push(Mismatch {
                element: report.element,
                fast,
                oracle: expected.distance,
                defect,
            });
        }
    }
    Ok(cmp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::from_edges(3, 0, 2, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 10.0)]).unwrap()
    }

    #[test]
    fn triangle_edge_and_node() {
        let g = triangle();
        let r = oracle_edge(&g, 0).unwrap();
        assert_eq!(r.distance, Some(10.0));
        assert_eq!(r.path, Some(vec![0, 2]));
        assert_eq!(r.element.index(), 1);
        assert_eq!(oracle_node(&g, 1).unwrap().distance, Some(10.0));
    }

    #[test]
    fn bridge_and_cut_vertex() {
        let g = Graph::from_edges(3, 0, 2, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let r = oracle_edge(&g, 1).unwrap();
        assert_eq!(r.distance, None);
        assert_eq!(r.path, None);

        let g = Graph::from_edges(
            4,
            0,
            2,
            [(0, 1, 1.0), (1, 2, 1.0), (0, 3, 1.0), (3, 1, 1.0)],
        )
        .unwrap();
        assert_eq!(oracle_node(&g, 1).unwrap().distance, None);
    }

    #[test]
    fn precondition_violations() {
        let g = triangle();
        assert_eq!(oracle_edge(&g, 2), Err(OracleError::NotOnPath));
        assert_eq!(oracle_node(&g, 0), Err(OracleError::NotOnPath));
        assert_eq!(oracle_node(&g, 2), Err(OracleError::NotOnPath));
        let g = Graph::from_edges(3, 0, 2, [(0, 1, 1.0)]).unwrap();
        assert_eq!(oracle_edge(&g, 0), Err(OracleError::TargetUnreachable));
    }

    #[test]
    fn brute_force_covers_every_element() {
        let reports = brute_force(&triangle()).unwrap();
        let elements: Vec<_> = reports.iter().map(|r| r.element).collect();
        assert_eq!(
            elements,
            vec![
                FailedElement::Edge { index: 1, edge: 0 },
                FailedElement::Edge { index: 2, edge: 1 },
                FailedElement::Vertex {
                    index: 1,
                    vertex: 1
                },
            ]
        );
        assert!(reports.iter().all(|r| r.distance == Some(10.0)));
    }

    #[test]
    fn triangle_comparison() {
        let cmp = compare_all(&triangle()).unwrap();
        assert_eq!(cmp.edge_checks, 2);
        assert_eq!(cmp.node_checks, 1);
        assert!(cmp.is_clean());
    }

    #[test]
    fn unreachable_replacements_agree() {
        let g = Graph::from_edges(3, 0, 2, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap();
        let cmp = compare_all(&g).unwrap();
        assert_eq!(cmp.edge_checks + cmp.node_checks, 3);
        assert!(cmp.is_clean());
    }

    #[test]
    fn path_validation_catches_defects() {
        let g = triangle();
        let e1 = FailedElement::Edge { index: 1, edge: 0 };
        assert_eq!(validate_path(&g, e1, Some(10.0), Some(&[0, 2])), Ok(()));
        assert_eq!(
            validate_path(&g, e1, Some(2.0), Some(&[0, 1, 2])),
            Err(PathDefect::Disconnected(0, 1))
        );
        assert_eq!(
            validate_path(&g, e1, Some(9.0), Some(&[0, 2])),
            Err(PathDefect::WeightMismatch {
                path: 10.0,
                reported: 9.0
            })
        );
        let v1 = FailedElement::Vertex {
            index: 1,
            vertex: 1,
        };
        assert_eq!(
            validate_path(&g, v1, Some(2.0), Some(&[0, 1, 2])),
            Err(PathDefect::UsesFailedVertex)
        );
        assert_eq!(
            validate_path(&g, v1, Some(2.0), Some(&[0, 2, 0, 2])),
            Err(PathDefect::RepeatedVertex(0))
        );
    }
}

//! Node replacement paths.
//!
//! Removing `v_i` splits `T_s` into `T_1(v_i)` (labels `< i`), `T_2(v_i)` (the
//! subtree of `v_{i+1}`, labels `> i`) and the forest `F(v_i)` of the other
//! subtrees below `v_i` (label `i`, excluding `v_i`). Replacement paths either
//! jump straight from `T_1` to `T_2`, which the swept RSP-DAG answers at node
//! `(i - 1, i + 1)`, or leave from a forest vertex. Distances to forest vertices
//! that avoid both `v_i` and `T_2(v_i)` come from one Dijkstra run on a graph
//! where each `T_1(v_i)` is contracted into `s`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::dag::{CandidateEdge, Sweep};
use crate::graph::{EdgeId, Graph, VertexId, WeightedAdjacency};
use crate::report::{FailedElement, ReplacementReport, SwapEdge, SwapRoute};
use crate::spt::{PathLabeling, ShortestPathTree};

/// Forest index per vertex: `Some(i)` iff the vertex lies in `F(v_i)`,
/// `1 <= i <= l - 1`.
pub fn classify_forest(labeling: &PathLabeling) -> Vec<Option<usize>> {
    let l = labeling.l();
    labeling
        .labels()
        .iter()
        .enumerate()
        .map(|(v, lab)| match *lab {
            Some(i) if i >= 1 && i < l && labeling.path_index(v).is_none() => Some(i),
            _ => None,
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ContractedEdgeKind {
    /// Original edge inside one forest.
    Forest,
    /// `(s, v)` standing for the best edge `(via, v)` with `via` in `T_1`.
    Contracted { via: VertexId },
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ContractedEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: f64,
    /// Edge of the input graph this one stands for.
    pub original: EdgeId,
    pub kind: ContractedEdgeKind,
}

/// Union over all internal `v_i` of the graphs whose vertices are `s` and
/// `F(v_i)`. Vertex ids are those of the input graph; vertices outside every
/// forest (other than `s`) are isolated.
#[derive(Clone, Debug)]
pub struct ContractedGraph {
    source: VertexId,
    forest: Vec<Option<usize>>,
    edges: Vec<ContractedEdge>,
    adjacency: Vec<Vec<(VertexId, usize)>>,
    scanned: usize,
}

impl ContractedGraph {
    /// One pass over the input edges.
    ///
    /// An edge `(u, v)` with `v` in forest `i` and `label(u) < i` is a candidate
    /// for the contracted edge `(s, v)` of weight `d(s, u) + w(u, v)`; an edge
    /// with both endpoints in the same forest is copied. Everything else
    /// (edges at `v_i`, edges into `T_2(v_i)`) is left out.
    pub fn build(graph: &Graph, source_tree: &ShortestPathTree, labeling: &PathLabeling) -> Self {
        let n = graph.vertex_count();
        let source = graph.source();
        let forest = classify_forest(labeling);
        let mut edges = Vec::new();
        // Best (weight, original edge, via) per forest vertex.
        let mut entry: Vec<Option<(f64, EdgeId, VertexId)>> = vec![None; n];

        for (id, e) in graph.edges().iter().enumerate() {
            match (forest[e.u], forest[e.v]) {
                (Some(a), Some(b)) if a == b => {
                    edges.push(ContractedEdge {
                        u: e.u,
                        v: e.v,
                        weight: e.weight,
                        original: id,
                        kind: ContractedEdgeKind::Forest,
                    });
                    continue;
                }
                _ => {}
            }
            for (u, v) in [(e.u, e.v), (e.v, e.u)] {
                let (Some(i), Some(lu)) = (forest[v], labeling.label(u)) else {
                    continue;
                };
                if lu >= i {
                    continue;
                }
                let w = source_tree.dist(u) + e.weight;
                let better = match entry[v] {
                    None => true,
                    Some((bw, bid, _)) => w.total_cmp(&bw).then(id.cmp(&bid)) == Ordering::Less,
                };
                if better {
                    entry[v] = Some((w, id, u));
                }
            }
        }

        for (v, best) in entry.iter().enumerate() {
            if let Some((weight, original, via)) = *best {
                edges.push(ContractedEdge {
                    u: source,
                    v,
                    weight,
                    original,
                    kind: ContractedEdgeKind::Contracted { via },
                });
            }
        }

        let mut adjacency = vec![Vec::new(); n];
        for (k, e) in edges.iter().enumerate() {
            adjacency[e.u].push((e.v, k));
            adjacency[e.v].push((e.u, k));
        }

        ContractedGraph {
            source,
            forest,
            edges,
            adjacency,
            scanned: graph.edge_count(),
        }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    #[inline]
    pub fn forest(&self, v: VertexId) -> Option<usize> {
        self.forest[v]
    }

    pub fn forests(&self) -> &[Option<usize>] {
        &self.forest
    }

    pub fn edges(&self) -> &[ContractedEdge] {
        &self.edges
    }

    pub fn edge(&self, k: usize) -> &ContractedEdge {
        &self.edges[k]
    }

    /// Contracted `(s, v)` edge for forest vertex `v`, if any.
    pub fn contracted_edge(&self, v: VertexId) -> Option<&ContractedEdge> {
        self.adjacency[v]
            .iter()
            .map(|&(_, k)| &self.edges[k])
            .find(|e| matches!(e.kind, ContractedEdgeKind::Contracted { .. }))
    }

    /// Vertices of the graph: `s` plus every forest vertex.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        let s = self.source;
        (0..self.forest.len()).filter(move |&v| v == s || self.forest[v].is_some())
    }

    /// Input edges examined by [`ContractedGraph::build`].
    pub fn scanned(&self) -> usize {
        self.scanned
    }
}

impl WeightedAdjacency for ContractedGraph {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    fn for_each_arc<F: FnMut(VertexId, EdgeId, f64)>(&self, v: VertexId, mut f: F) {
        for &(w, k) in &self.adjacency[v] {
            f(w, k, self.edges[k].weight);
        }
    }
}

/// Shortest path tree of the contracted graph rooted at `s`. For a vertex `x`
/// in `F(v_i)` its distance is `d(s, x)` in `G - v_i - T_2(v_i)`.
pub fn partial_distances(contracted: &ContractedGraph) -> ShortestPathTree {
    crate::spt::dijkstra(contracted, contracted.source)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct NodeScanStats {
    /// Input edges examined.
    pub scanned: u64,
    /// Edges that belonged to some forest-crossing set.
    pub crossings: u64,
}

fn better(a: &CandidateEdge, b: &Option<CandidateEdge>) -> bool {
    b.as_ref().is_none_or(|b| a.rank(b) == Ordering::Less)
}

/// Answers every internal path vertex `v_1..v_{l-1}`.
///
/// The direct term is read from the swept DAG at `(i - 1, i + 1)`. The forest
/// term scans each edge once: an edge `(x, y)` with `x` in `F(v_i)` and
/// `label(y) > i` belongs to exactly one such set.
pub fn node_replacements(
    graph: &Graph,
    target_tree: &ShortestPathTree,
    labeling: &PathLabeling,
    sweep: &Sweep,
    contracted: &ContractedGraph,
    partial: &ShortestPathTree,
) -> (Vec<ReplacementReport>, NodeScanStats) {
    let l = labeling.l();
    let internal = l.saturating_sub(1);
    let mut stats = NodeScanStats::default();
    let mut forest_best: Vec<Option<CandidateEdge>> = vec![None; internal];

    for (id, e) in graph.edges().iter().enumerate() {
        stats.scanned += 1;
        for (x, y) in [(e.u, e.v), (e.v, e.u)] {
            let (Some(i), Some(ly)) = (contracted.forest(x), labeling.label(y)) else {
                continue;
            };
            if ly <= i {
                continue;
            }
            stats.crossings += 1;
            let prefix = partial.dist(x);
            let tail = target_tree.dist(y);
            if !(prefix.is_finite() && tail.is_finite()) {
                continue;
            }
            let cand = CandidateEdge {
                edge: id,
                x,
                y,
                lo: i,
                hi: ly,
                weight: e.weight,
                tail,
                cost: prefix + e.weight + tail,
            };
            if better(&cand, &forest_best[i - 1]) {
                forest_best[i - 1] = Some(cand);
            }
        }
    }

    let reports = (1..l)
        .map(|i| {
            let direct = sweep.vertex_swap(i).copied();
            let via_forest = forest_best[i - 1];
            let swap = match (direct, via_forest) {
                (Some(d), Some(f)) if f.rank(&d) == Ordering::Less => Some(forest_swap(&f)),
                (Some(d), _) => Some(d.to_swap()),
                (None, Some(f)) => Some(forest_swap(&f)),
                (None, None) => None,
            };
            ReplacementReport {
                element: FailedElement::Vertex {
                    index: i,
                    vertex: labeling.path_vertex(i),
                },
                swap,
            }
        })
        .collect();
    (reports, stats)
}

fn forest_swap(c: &CandidateEdge) -> SwapEdge {
    SwapEdge {
        route: SwapRoute::Forest,
        ..c.to_swap()
    }
}

/// Vertex sequence of a node replacement path.
///
/// For a forest swap the contracted-graph path to `x` is expanded: its first
/// edge `(s, v)` becomes the `T_s` path to the contracted endpoint followed by
/// `v`.
pub fn reconstruct_node_path(
    swap: &SwapEdge,
    source_tree: &ShortestPathTree,
    target_tree: &ShortestPathTree,
    contracted: &ContractedGraph,
    partial: &ShortestPathTree,
) -> Vec<VertexId> {
    let mut path = match swap.route {
        SwapRoute::Tree => source_tree
            .path_to(swap.x)
            .expect("swap endpoint x is reachable from s"),
        SwapRoute::Forest => {
            let inner = partial
                .path_to(swap.x)
                .expect("forest swap endpoint is reachable in the contracted graph");
            let first = partial
                .parent_edge(inner[1])
                .expect("forest vertex has a parent edge");
            let ContractedEdgeKind::Contracted { via } = contracted.edge(first).kind else {
                unreachable!("only contracted edges touch s");
            };
            let mut path = source_tree
                .path_to(via)
                .expect("contracted endpoint is reachable");
            path.extend_from_slice(&inner[1..]);
            path
        }
    };
    path.extend(target_tree.walk_to_root(swap.y));
    path
}

//! Undirected weighted multigraph with a designated source and target.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub weight: f64,
}

impl Edge {
    /// The endpoint opposite to `x`.
    #[inline]
    pub fn other(&self, x: VertexId) -> VertexId {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum GraphError {
    NonPositiveWeight {
        u: VertexId,
        v: VertexId,
        weight: f64,
    },
    VertexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },
    SourceEqualsTarget(VertexId),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::NonPositiveWeight { u, v, weight } => {
                write!(
                    f,
                    "edge ({u}, {v}) has weight {weight}, expected a finite value > 0"
                )
            }
            GraphError::VertexOutOfRange {
                vertex,
                vertex_count,
            } => write!(f, "vertex {vertex} out of range (n = {vertex_count})"),
            GraphError::SourceEqualsTarget(v) => write!(f, "source and target are both {v}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// Anything Dijkstra can run over: a vertex count and, per vertex, its
/// incident arcs as `(neighbor, edge id, weight)`.
pub trait WeightedAdjacency {
    fn vertex_count(&self) -> usize;

    fn for_each_arc<F: FnMut(VertexId, EdgeId, f64)>(&self, v: VertexId, f: F);
}

/// Accumulates edges before the graph is frozen.
///
/// Self-loops are dropped and counted; parallel edges are kept.
#[derive(Clone, Debug, Default)]
pub struct GraphBuilder {
    vertex_count: usize,
    edges: Vec<Edge>,
    dropped_self_loops: usize,
}

impl GraphBuilder {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::new(),
            dropped_self_loops: 0,
        }
    }

    pub fn with_capacity(vertex_count: usize, edges: usize) -> Self {
        Self {
            vertex_count,
            edges: Vec::with_capacity(edges),
            dropped_self_loops: 0,
        }
    }

    /// Adds an undirected edge. Returns `Ok(None)` when the edge is a self-loop
    /// and was discarded.
    pub fn add_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        weight: f64,
    ) -> Result<Option<EdgeId>, GraphError> {
        for vertex in [u, v] {
            if vertex >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex,
                    vertex_count: self.vertex_count,
                });
            }
        }
        if !(weight.is_finite() && weight > 0.0) {
            return Err(GraphError::NonPositiveWeight { u, v, weight });
        }
        if u == v {
            self.dropped_self_loops += 1;
            return Ok(None);
        }
        self.edges.push(Edge { u, v, weight });
        Ok(Some(self.edges.len() - 1))
    }

    pub fn dropped_self_loops(&self) -> usize {
        self.dropped_self_loops
    }

    pub fn build(self, source: VertexId, target: VertexId) -> Result<Graph, GraphError> {
        for vertex in [source, target] {
            if vertex >= self.vertex_count {
                return Err(GraphError::VertexOutOfRange {
                    vertex,
                    vertex_count: self.vertex_count,
                });
            }
        }
        if source == target {
            return Err(GraphError::SourceEqualsTarget(source));
        }
        let mut adjacency = vec![Vec::new(); self.vertex_count];
        for (id, e) in self.edges.iter().enumerate() {
            adjacency[e.u].push((e.v, id));
            adjacency[e.v].push((e.u, id));
        }
        Ok(Graph {
            edges: self.edges,
            adjacency,
            source,
            target,
        })
    }
}

/// Immutable undirected graph. Edge ids index [`Graph::edges`]; each edge also
/// appears once in the adjacency list of both endpoints.
#[derive(Clone, Debug)]
pub struct Graph {
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(VertexId, EdgeId)>>,
    source: VertexId,
    target: VertexId,
}

impl Graph {
    /// Convenience constructor from `(u, v, weight)` triples.
    pub fn from_edges<I>(
        vertex_count: usize,
        source: VertexId,
        target: VertexId,
        edges: I,
    ) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId, f64)>,
    {
        let mut builder = GraphBuilder::new(vertex_count);
        for (u, v, w) in edges {
            builder.add_edge(u, v, w)?;
        }
        builder.build(source, target)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn source(&self) -> VertexId {
        self.source
    }

    #[inline]
    pub fn target(&self) -> VertexId {
        self.target
    }

    #[inline]
    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `(neighbor, edge id)` pairs in edge-id order.
    #[inline]
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adjacency[v]
    }

    /// Same graph with a different source/target pair.
    pub fn with_terminals(&self, source: VertexId, target: VertexId) -> Result<Graph, GraphError> {
        for vertex in [source, target] {
            if vertex >= self.vertex_count() {
                return Err(GraphError::VertexOutOfRange {
                    vertex,
                    vertex_count: self.vertex_count(),
                });
            }
        }
        if source == target {
            return Err(GraphError::SourceEqualsTarget(source));
        }
        Ok(Graph {
            source,
            target,
            ..self.clone()
        })
    }

    /// Whether `t` can be reached from `s` (unweighted search).
    pub fn is_target_reachable(&self) -> bool {
        let mut seen = vec![false; self.vertex_count()];
        let mut stack = vec![self.source];
        seen[self.source] = true;
        while let Some(v) = stack.pop() {
            if v == self.target {
                return true;
            }
            for &(w, _) in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        false
    }
}

impl WeightedAdjacency for Graph {
    fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    fn for_each_arc<F: FnMut(VertexId, EdgeId, f64)>(&self, v: VertexId, mut f: F) {
        for &(w, id) in &self.adjacency[v] {
            f(w, id, self.edges[id].weight);
        }
    }
}

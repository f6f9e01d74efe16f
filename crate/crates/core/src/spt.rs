//! Shortest path trees, the `s`-`t` path they induce, and path labels.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::{EdgeId, VertexId, WeightedAdjacency};

/// Single-source shortest path tree. Unreachable vertices have distance
/// `f64::INFINITY` and no parent.
#[derive(Clone, Debug)]
pub struct ShortestPathTree {
    root: VertexId,
    dist: Vec<f64>,
    parent: Vec<Option<VertexId>>,
    parent_edge: Vec<Option<EdgeId>>,
    children: Vec<Vec<VertexId>>,
}

#[derive(Copy, Clone, PartialEq)]
struct HeapEntry {
    dist: f64,
    vertex: VertexId,
}

impl Eq for HeapEntry {}

impl Ord for HeapEntry {
    // Reversed: BinaryHeap is a max-heap and we want (dist, vertex) ascending.
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .dist
            .total_cmp(&self.dist)
            .then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for HeapEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Dijkstra from `root` over any [`WeightedAdjacency`].
///
/// Among equal tentative distances the smaller vertex id settles first; among
/// relaxations that tie on distance the smaller edge id becomes the parent
/// edge. The resulting tree is therefore a function of the input alone.
pub fn dijkstra<G: WeightedAdjacency + ?Sized>(graph: &G, root: VertexId) -> ShortestPathTree {
    let n = graph.vertex_count();
    let mut dist = vec![f64::INFINITY; n];
    let mut parent = vec![None; n];
    let mut parent_edge: Vec<Option<EdgeId>> = vec![None; n];
    let mut settled = vec![false; n];
    let mut heap = BinaryHeap::new();

    dist[root] = 0.0;
    heap.push(HeapEntry {
        dist: 0.0,
        vertex: root,
    });

    while let Some(HeapEntry { dist: d, vertex: v }) = heap.pop() {
        if settled[v] || d > dist[v] {
            continue;
        }
        settled[v] = true;
        graph.for_each_arc(v, |next, edge, weight| {
            if settled[next] {
                return;
            }
            let candidate = d + weight;
            if candidate < dist[next] {
                dist[next] = candidate;
                parent[next] = Some(v);
                parent_edge[next] = Some(edge);
                heap.push(HeapEntry {
                    dist: candidate,
                    vertex: next,
                });
            } else if candidate == dist[next] && parent_edge[next].is_some_and(|e| edge < e) {
                parent[next] = Some(v);
                parent_edge[next] = Some(edge);
            }
        });
    }

    let mut children = vec![Vec::new(); n];
    for (v, p) in parent.iter().enumerate() {
        if let Some(p) = *p {
            children[p].push(v);
        }
    }

    ShortestPathTree {
        root,
        dist,
        parent,
        parent_edge,
        children,
    }
}

impl ShortestPathTree {
    #[inline]
    pub fn root(&self) -> VertexId {
        self.root
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.dist.len()
    }

    #[inline]
    pub fn dist(&self, v: VertexId) -> f64 {
        self.dist[v]
    }

    pub fn distances(&self) -> &[f64] {
        &self.dist
    }

    #[inline]
    pub fn is_reachable(&self, v: VertexId) -> bool {
        self.dist[v].is_finite()
    }

    #[inline]
    pub fn parent(&self, v: VertexId) -> Option<VertexId> {
        self.parent[v]
    }

    #[inline]
    pub fn parent_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.parent_edge[v]
    }

    /// Children in ascending vertex id.
    #[inline]
    pub fn children(&self, v: VertexId) -> &[VertexId] {
        &self.children[v]
    }

    /// Whether `edge` is the parent edge of either endpoint.
    #[inline]
    pub fn is_tree_edge(&self, edge: EdgeId, u: VertexId, v: VertexId) -> bool {
        self.parent_edge[u] == Some(edge) || self.parent_edge[v] == Some(edge)
    }

    /// Vertices from `v` up to the root, `v` first.
    pub fn walk_to_root(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        let start = self.is_reachable(v).then_some(v);
        core::iter::successors(start, move |&u| self.parent[u])
    }

    /// Root-to-`v` vertex sequence, or `None` when `v` is unreachable.
    pub fn path_to(&self, v: VertexId) -> Option<Vec<VertexId>> {
        if !self.is_reachable(v) {
            return None;
        }
        let mut path: Vec<VertexId> = self.walk_to_root(v).collect();
        path.reverse();
        Some(path)
    }
}

/// The tree path `v_0 = s, ..., v_l = t` together with its edge ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortestPath {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl ShortestPath {
    /// Number of edges `l`.
    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Follows parent pointers from `target` to the root. `None` if unreachable.
pub fn extract_path(tree: &ShortestPathTree, target: VertexId) -> Option<ShortestPath> {
    let vertices = tree.path_to(target)?;
    let edges = vertices[1..]
        .iter()
        .map(|&v| {
            tree.parent_edge(v)
                .expect("non-root tree vertex has a parent edge")
        })
        .collect();
    Some(ShortestPath { vertices, edges })
}

/// Per-vertex labels relative to the `s`-`t` path in `T_s`.
///
/// Every vertex in the subtree of `v_i` but not in the subtree of `v_{i+1}`
/// gets label `i`; the subtree of `v_l = t` gets `l`. Vertices unreachable from
/// `s` carry no label.
#[derive(Clone, Debug)]
pub struct PathLabeling {
    path: ShortestPath,
    label: Vec<Option<usize>>,
    on_path: Vec<Option<usize>>,
    visited: usize,
}

impl PathLabeling {
    #[inline]
    pub fn path(&self) -> &ShortestPath {
        &self.path
    }

    /// Number of path edges `l`.
    #[inline]
    pub fn l(&self) -> usize {
        self.path.len()
    }

    #[inline]
    pub fn label(&self, v: VertexId) -> Option<usize> {
        self.label[v]
    }

    pub fn labels(&self) -> &[Option<usize>] {
        &self.label
    }

    /// `Some(i)` when `v` is the path vertex `v_i`.
    #[inline]
    pub fn path_index(&self, v: VertexId) -> Option<usize> {
        self.on_path[v]
    }

    /// Path vertex `v_i`.
    #[inline]
    pub fn path_vertex(&self, i: usize) -> VertexId {
        self.path.vertices[i]
    }

    /// Path edge `e_i` for `i` in `1..=l`.
    #[inline]
    pub fn path_edge(&self, i: usize) -> EdgeId {
        self.path.edges[i - 1]
    }

    /// Number of vertices visited by the pre-order traversal.
    pub fn visited(&self) -> usize {
        self.visited
    }
}

/// Labels every vertex of `tree` by a pre-order traversal from the root.
///
/// At path vertex `v_i` the off-path children are visited first with label `i`
/// (ascending vertex id) and the path child `v_{i+1}` last with label `i + 1`.
/// The traversal uses an explicit stack, so path-like trees of any depth are fine.
pub fn compute_labels(tree: &ShortestPathTree, path: ShortestPath) -> PathLabeling {
    let n = tree.vertex_count();
    let mut label = vec![None; n];
    let mut on_path = vec![None; n];
    for (i, &v) in path.vertices.iter().enumerate() {
        on_path[v] = Some(i);
    }

    let mut visited = 0;
    let mut stack = vec![(tree.root(), 0usize)];
    while let Some((v, lab)) = stack.pop() {
        label[v] = Some(lab);
        visited += 1;
        let next_on_path = on_path[v].and_then(|i| path.vertices.get(i + 1).copied());
        // Pushed first so it pops last.
        if let Some(p) = next_on_path {
            stack.push((p, lab + 1));
        }
        for &c in tree.children(v).iter().rev() {
            if Some(c) != next_on_path {
                stack.push((c, lab));
            }
        }
    }

    PathLabeling {
        path,
        label,
        on_path,
        visited,
    }
}

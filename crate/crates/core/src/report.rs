use crate::graph::{EdgeId, VertexId};

/// The path element whose failure is being answered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum FailedElement {
    /// Path edge `e_index = (v_{index-1}, v_index)`, `index` in `1..=l`.
    Edge { index: usize, edge: EdgeId },
    /// Internal path vertex `v_index`, `index` in `1..l`.
    Vertex { index: usize, vertex: VertexId },
}

impl FailedElement {
    pub fn index(&self) -> usize {
        match *self {
            FailedElement::Edge { index, .. } | FailedElement::Vertex { index, .. } => index,
        }
    }
}

/// How the `s -> x` prefix of a replacement path is routed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SwapRoute {
    /// `x` keeps its original distance; the prefix is the `T_s` path.
    Tree,
    /// `x` hangs off the removed vertex; the prefix comes from the
    /// contracted forest graph.
    Forest,
}

/// The single crossing edge `(x, y)` a replacement path switches over on.
///
/// `cost` is the full replacement distance `prefix(x) + weight + d(y, t)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SwapEdge {
    pub edge: EdgeId,
    pub x: VertexId,
    pub y: VertexId,
    pub weight: f64,
    pub cost: f64,
    pub route: SwapRoute,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReplacementReport {
    pub element: FailedElement,
    /// `None` when the failure disconnects `s` from `t`.
    pub swap: Option<SwapEdge>,
}

impl ReplacementReport {
    pub fn distance(&self) -> Option<f64> {
        self.swap.map(|s| s.cost)
    }
}

//! End-to-end computation: two trees, one labeling, one DAG sweep and (for
//! vertex failures) one contracted-graph tree answer both problems together.

use alloc::vec::Vec;
use core::fmt;

use crate::counters::WorkCounters;
use crate::dag::{self, RspDag, Sweep};
use crate::graph::{Graph, VertexId};
use crate::node::{self, ContractedGraph};
use crate::report::{FailedElement, ReplacementReport};
use crate::spt::{self, PathLabeling, ShortestPathTree};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Edges,
    Nodes,
    All,
}

impl Mode {
    fn edges(self) -> bool {
        matches!(self, Mode::Edges | Mode::All)
    }

    fn nodes(self) -> bool {
        matches!(self, Mode::Nodes | Mode::All)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    TargetUnreachable { source: VertexId, target: VertexId },
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::TargetUnreachable { source, target } => {
                write!(f, "target {target} is not reachable from source {source}")
            }
        }
    }
}

impl core::error::Error for SolveError {}

#[derive(Clone, Debug)]
pub struct ReplacementPaths<'g> {
    graph: &'g Graph,
    source_tree: ShortestPathTree,
    target_tree: ShortestPathTree,
    labeling: PathLabeling,
    dag: RspDag,
    sweep: Sweep,
    forest: Option<(ContractedGraph, ShortestPathTree)>,
    edge_reports: Vec<ReplacementReport>,
    node_reports: Vec<ReplacementReport>,
    counters: WorkCounters,
}

impl<'g> ReplacementPaths<'g> {
    pub fn compute(graph: &'g Graph, mode: Mode) -> Result<Self, SolveError> {
        let mut counters = WorkCounters::default();

        let source_tree = spt::dijkstra(graph, graph.source());
        counters.source_trees += 1;
        let path = spt::extract_path(&source_tree, graph.target()).ok_or(
            SolveError::TargetUnreachable {
                source: graph.source(),
                target: graph.target(),
            },
        )?;
        let target_tree = spt::dijkstra(graph, graph.target());
        counters.target_trees += 1;

        let labeling = spt::compute_labels(&source_tree, path);
        counters.labelings += 1;
        counters.label_visits += labeling.visited() as u64;

        let dag = RspDag::partition(graph, &source_tree, &target_tree, &labeling);
        counters.partition_scans += dag.scanned() as u64;
        counters.candidates += dag.candidates().len() as u64;

        let sweep = dag.sweep();
        counters.sweeps += 1;
        counters.dag_nodes += sweep.stats.nodes;
        counters.dag_examined += sweep.stats.examined;
        counters.dag_pushes += sweep.stats.pushes;

        let edge_reports = if mode.edges() {
            dag::edge_replacements(&sweep, &labeling)
        } else {
            Vec::new()
        };

        let mut node_reports = Vec::new();
        let mut forest = None;
        if mode.nodes() {
            let contracted = ContractedGraph::build(graph, &source_tree, &labeling);
            counters.contraction_scans += contracted.scanned() as u64;
            let partial = node::partial_distances(&contracted);
            counters.contracted_trees += 1;
            let (reports, stats) = node::node_replacements(
                graph,
                &target_tree,
                &labeling,
                &sweep,
                &contracted,
                &partial,
            );
            counters.forest_scans += stats.scanned;
            counters.forest_crossings += stats.crossings;
            node_reports = reports;
            forest = Some((contracted, partial));
        }
        counters.reports += (edge_reports.len() + node_reports.len()) as u64;

        Ok(ReplacementPaths {
            graph,
            source_tree,
            target_tree,
            labeling,
            dag,
            sweep,
            forest,
            edge_reports,
            node_reports,
            counters,
        })
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn source_tree(&self) -> &ShortestPathTree {
        &self.source_tree
    }

    pub fn target_tree(&self) -> &ShortestPathTree {
        &self.target_tree
    }

    pub fn labeling(&self) -> &PathLabeling {
        &self.labeling
    }

    pub fn dag(&self) -> &RspDag {
        &self.dag
    }

    pub fn sweep(&self) -> &Sweep {
        &self.sweep
    }

    /// Contracted graph and its tree, present unless the mode was `Edges`.
    pub fn contracted(&self) -> Option<(&ContractedGraph, &ShortestPathTree)> {
        self.forest.as_ref().map(|(c, t)| (c, t))
    }

    /// Number of path edges `l`.
    pub fn l(&self) -> usize {
        self.labeling.l()
    }

    pub fn edge_reports(&self) -> &[ReplacementReport] {
        &self.edge_reports
    }

    pub fn node_reports(&self) -> &[ReplacementReport] {
        &self.node_reports
    }

    /// Edge reports followed by node reports, each in path order.
    pub fn reports(&self) -> impl Iterator<Item = &ReplacementReport> {
        self.edge_reports.iter().chain(&self.node_reports)
    }

    pub fn counters(&self) -> &WorkCounters {
        &self.counters
    }

    /// Vertex sequence of the replacement path, or `None` when unreachable.
    pub fn path(&self, report: &ReplacementReport) -> Option<Vec<VertexId>> {
        let swap = report.swap.as_ref()?;
        Some(match report.element {
            FailedElement::Edge { .. } => {
                dag::reconstruct_edge_path(swap, &self.source_tree, &self.target_tree)
            }
            FailedElement::Vertex { .. } => {
                let (contracted, partial) = self
                    .forest
                    .as_ref()
                    .expect("vertex reports imply the contracted graph was built");
                node::reconstruct_node_path(
                    swap,
                    &self.source_tree,
                    &self.target_tree,
                    contracted,
                    partial,
                )
            }
        })
    }
}

//! Operation counts for the post-SPT phase.
//!
//! These make the `O(m + l^2)` bound checkable without wall-clock noise.

use core::ops::AddAssign;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct WorkCounters {
    /// Stage invocations.
    pub source_trees: u64,
    pub target_trees: u64,
    pub labelings: u64,
    pub sweeps: u64,
    pub contracted_trees: u64,

    /// Vertices visited while labeling.
    pub label_visits: u64,
    /// Edges examined while partitioning candidates.
    pub partition_scans: u64,
    /// Candidates placed in the initial DAG sets.
    pub candidates: u64,
    /// DAG nodes processed by the sweep.
    pub dag_nodes: u64,
    /// Set entries examined by the sweep (initial members plus pushed copies).
    pub dag_examined: u64,
    /// Minima copied from a DAG node into one of its children.
    pub dag_pushes: u64,
    /// Edges examined while building the contracted graph.
    pub contraction_scans: u64,
    /// Edges examined by the forest-crossing scan.
    pub forest_scans: u64,
    /// Edges that belonged to some forest-crossing set.
    pub forest_crossings: u64,
    /// Reports emitted.
    pub reports: u64,
}

impl WorkCounters {
    /// Total post-SPT operations.
    pub fn phase_two_ops(&self) -> u64 {
        self.label_visits
            + self.partition_scans
            + self.candidates
            + self.dag_nodes
            + self.dag_examined
            + self.dag_pushes
            + self.contraction_scans
            + self.forest_scans
            + self.forest_crossings
            + self.reports
    }
}

impl AddAssign for WorkCounters {
    fn add_assign(&mut self, o: Self) {
        self.source_trees += o.source_trees;
        self.target_trees += o.target_trees;
        self.labelings += o.labelings;
        self.sweeps += o.sweeps;
        self.contracted_trees += o.contracted_trees;
        self.label_visits += o.label_visits;
        self.partition_scans += o.partition_scans;
        self.candidates += o.candidates;
        self.dag_nodes += o.dag_nodes;
        self.dag_examined += o.dag_examined;
        self.dag_pushes += o.dag_pushes;
        self.contraction_scans += o.contraction_scans;
        self.forest_scans += o.forest_scans;
        self.forest_crossings += o.forest_crossings;
        self.reports += o.reports;
    }
}

//! Edge replacement paths through the RSP-DAG.
//!
//! A non-tree edge `(x, y)` with `label(x) = i < j = label(y)` crosses the cut of
//! every path edge `e_k` with `i < k <= j`. The DAG has one node per pair
//! `(i, j)`, `0 <= i < j <= l`, holding the candidates with exactly those labels,
//! and arcs `(i, j) -> (i, j - 1)` and `(i, j) -> (i + 1, j)` whenever
//! `j - i > 1`. Sweeping from `(0, l)` and pushing each node's minimum to its two
//! children leaves, at sink `(i - 1, i)`, the best crossing edge of `e_i`.
//!
//! The DAG is implicit: nodes are addressed by `(i, j)` and processed one
//! diagonal `j - i` at a time, so only two diagonals of minima are live at once.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::graph::{EdgeId, Graph, VertexId};
use crate::report::{FailedElement, ReplacementReport, SwapEdge, SwapRoute};
use crate::spt::{PathLabeling, ShortestPathTree};

/// A non-tree edge oriented so that `label(x) < label(y)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CandidateEdge {
    pub edge: EdgeId,
    pub x: VertexId,
    pub y: VertexId,
    /// `label(x)`.
    pub lo: usize,
    /// `label(y)`.
    pub hi: usize,
    pub weight: f64,
    /// `d(y, t)`.
    pub tail: f64,
    /// `d(s, x) + w(x, y) + d(y, t)`.
    pub cost: f64,
}

impl CandidateEdge {
    /// Total order used for every minimum: cost, then `d(y, t)`, then edge id.
    ///
    /// Preferring the smaller `d(y, t)` among equal costs guarantees that the
    /// `T_t` path from `y` never re-crosses the cut.
    #[inline]
    pub fn rank(&self, other: &Self) -> Ordering {
        self.cost
            .total_cmp(&other.cost)
            .then_with(|| self.tail.total_cmp(&other.tail))
            .then_with(|| self.edge.cmp(&other.edge))
    }

    pub fn to_swap(&self) -> SwapEdge {
        SwapEdge {
            edge: self.edge,
            x: self.x,
            y: self.y,
            weight: self.weight,
            cost: self.cost,
            route: SwapRoute::Tree,
        }
    }
}

#[inline]
fn keep_min(slot: &mut Option<u32>, cand: u32, all: &[CandidateEdge]) {
    match *slot {
        Some(cur) if all[cur as usize].rank(&all[cand as usize]) != Ordering::Greater => {}
        _ => *slot = Some(cand),
    }
}

/// Candidate edges partitioned into the sets `E_(i,j)`.
#[derive(Clone, Debug)]
pub struct RspDag {
    l: usize,
    candidates: Vec<CandidateEdge>,
    /// Candidate indices grouped by span `j - i`; span `d` occupies
    /// `by_span[span_start[d]..span_start[d + 1]]`.
    by_span: Vec<u32>,
    span_start: Vec<usize>,
    scanned: usize,
}

impl RspDag {
    /// Scans every edge once and keeps the non-tree edges whose endpoint labels
    /// differ, costed with the distances from `T_s` and `T_t`.
    pub fn partition(
        graph: &Graph,
        source_tree: &ShortestPathTree,
        target_tree: &ShortestPathTree,
        labeling: &PathLabeling,
    ) -> RspDag {
        let l = labeling.l();
        let mut candidates = Vec::new();
        for (id, e) in graph.edges().iter().enumerate() {
            let (Some(lu), Some(lv)) = (labeling.label(e.u), labeling.label(e.v)) else {
                continue;
            };
            if lu == lv || source_tree.is_tree_edge(id, e.u, e.v) {
                continue;
            }
            let (x, y, lo, hi) = if lu < lv {
                (e.u, e.v, lu, lv)
            } else {
                (e.v, e.u, lv, lu)
            };
            let tail = target_tree.dist(y);
            if !tail.is_finite() {
                continue;
            }
            candidates.push(CandidateEdge {
                edge: id,
                x,
                y,
                lo,
                hi,
                weight: e.weight,
                tail,
                cost: source_tree.dist(x) + e.weight + tail,
            });
        }

        // Counting sort by span.
        let mut span_start = vec![0usize; l + 2];
        for c in &candidates {
            span_start[c.hi - c.lo + 1] += 1;
        }
        for d in 1..span_start.len() {
            span_start[d] += span_start[d - 1];
        }
        let mut fill = span_start.clone();
        let mut by_span = vec![0u32; candidates.len()];
        for (k, c) in candidates.iter().enumerate() {
            let d = c.hi - c.lo;
            by_span[fill[d]] = k as u32;
            fill[d] += 1;
        }

        RspDag {
            l,
            candidates,
            by_span,
            span_start,
            scanned: graph.edge_count(),
        }
    }

    #[inline]
    pub fn l(&self) -> usize {
        self.l
    }

    /// `l (l + 1) / 2`.
    pub fn node_count(&self) -> usize {
        self.l * (self.l + 1) / 2
    }

    /// Arcs of the DAG: two per node with `j - i > 1`.
    pub fn arc_count(&self) -> usize {
        2 * (self.node_count() - self.l)
    }

    pub fn candidates(&self) -> &[CandidateEdge] {
        &self.candidates
    }

    /// Edges examined by [`RspDag::partition`].
    pub fn scanned(&self) -> usize {
        self.scanned
    }

    fn span(&self, d: usize) -> &[u32] {
        &self.by_span[self.span_start[d]..self.span_start[d + 1]]
    }

    /// The initial set `E_(i,j)`.
    pub fn set(&self, i: usize, j: usize) -> impl Iterator<Item = &CandidateEdge> + '_ {
        assert!(i < j && j <= self.l, "({i}, {j}) is not a DAG node");
        self.span(j - i)
            .iter()
            .map(|&k| &self.candidates[k as usize])
            .filter(move |c| c.lo == i)
    }

    /// Sweeps the DAG keeping only what replacement queries need.
    pub fn sweep(&self) -> Sweep {
        self.run_sweep(false)
    }

    /// Sweeps the DAG and keeps every node's minimum, for inspection.
    pub fn sweep_with_table(&self) -> Sweep {
        self.run_sweep(true)
    }

    fn run_sweep(&self, keep_table: bool) -> Sweep {
        let l = self.l;
        let mut stats = SweepStats::default();
        let mut table = keep_table.then(|| vec![Vec::new(); l + 1]);
        let mut sinks = Vec::new();
        let mut skips = Vec::new();

        // Minima of the diagonal above (span d + 1) and of the current one.
        let mut above: Vec<Option<u32>> = Vec::with_capacity(l);
        let mut current: Vec<Option<u32>> = Vec::with_capacity(l);

        for d in (1..=l).rev() {
            let width = l - d + 1;
            current.clear();
            // Node (i, i + d) receives from parents (i, i + d + 1) and (i - 1, i + d).
            for i in 0..width {
                let mut best = None;
                if let Some(&Some(k)) = above.get(i) {
                    keep_min(&mut best, k, &self.candidates);
                    stats.examined += 1;
                }
                if i > 0 {
                    if let Some(&Some(k)) = above.get(i - 1) {
                        keep_min(&mut best, k, &self.candidates);
                        stats.examined += 1;
                    }
                }
                current.push(best);
            }
            for &k in self.span(d) {
                let lo = self.candidates[k as usize].lo;
                keep_min(&mut current[lo], k, &self.candidates);
                stats.examined += 1;
            }
            stats.nodes += width as u64;
            if d > 1 {
                stats.pushes += 2 * current.iter().filter(|m| m.is_some()).count() as u64;
            }

            if let Some(t) = table.as_mut() {
                t[d] = current.clone();
            }
            match d {
                1 => sinks = current.clone(),
                2 => skips = current.clone(),
                _ => {}
            }
            core::mem::swap(&mut above, &mut current);
        }

        let pick = |v: Vec<Option<u32>>| -> Vec<Option<CandidateEdge>> {
            v.into_iter()
                .map(|m| m.map(|k| self.candidates[k as usize]))
                .collect()
        };
        Sweep {
            l,
            sinks: pick(sinks),
            skips: pick(skips),
            table: table.map(|t| t.into_iter().map(pick).collect()),
            stats,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepStats {
    pub nodes: u64,
    /// Set entries examined: initial members plus pushed copies.
    pub examined: u64,
    /// Minima inserted into a child's set.
    pub pushes: u64,
}

/// Result of sweeping the DAG.
#[derive(Clone, Debug)]
pub struct Sweep {
    l: usize,
    /// Minimum at sink `(i - 1, i)`, stored at `i - 1`.
    sinks: Vec<Option<CandidateEdge>>,
    /// Minimum at `(i - 1, i + 1)`, stored at `i - 1`.
    skips: Vec<Option<CandidateEdge>>,
    /// Per span `d`, minimum at `(i, i + d)` stored at `i`.
    table: Option<Vec<Vec<Option<CandidateEdge>>>>,
    pub stats: SweepStats,
}

impl Sweep {
    /// Best crossing edge of path edge `e_i`, read at sink `(i - 1, i)`.
    pub fn edge_swap(&self, i: usize) -> Option<&CandidateEdge> {
        assert!((1..=self.l).contains(&i));
        self.sinks[i - 1].as_ref()
    }

    /// Best edge jumping over path vertex `v_i`, read at `(i - 1, i + 1)`.
    pub fn vertex_swap(&self, i: usize) -> Option<&CandidateEdge> {
        assert!(i >= 1 && i < self.l);
        self.skips[i - 1].as_ref()
    }

    /// Minimum over `E_(i',j')` for all `i' <= i`, `j' >= j`. Requires
    /// [`RspDag::sweep_with_table`].
    pub fn node_min(&self, i: usize, j: usize) -> Option<&CandidateEdge> {
        assert!(i < j && j <= self.l, "({i}, {j}) is not a DAG node");
        let table = self.table.as_ref().expect("sweep was run without a table");
        table[j - i][i].as_ref()
    }
}

/// One report per path edge `e_1..e_l`.
pub fn edge_replacements(sweep: &Sweep, labeling: &PathLabeling) -> Vec<ReplacementReport> {
    (1..=labeling.l())
        .map(|i| ReplacementReport {
            element: FailedElement::Edge {
                index: i,
                edge: labeling.path_edge(i),
            },
            swap: sweep.edge_swap(i).map(CandidateEdge::to_swap),
        })
        .collect()
}

/// `s ~> x` in `T_s`, then `(x, y)`, then `y ~> t` in `T_t`.
pub fn reconstruct_edge_path(
    swap: &SwapEdge,
    source_tree: &ShortestPathTree,
    target_tree: &ShortestPathTree,
) -> Vec<VertexId> {
    let mut path = source_tree
        .path_to(swap.x)
        .expect("swap endpoint x is reachable from s");
    path.extend(target_tree.walk_to_root(swap.y));
    path
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spt::{compute_labels, dijkstra, extract_path};

    struct Setup {
        g: Graph,
        ts: ShortestPathTree,
        tt: ShortestPathTree,
        lab: PathLabeling,
    }

    fn setup(g: Graph) -> Setup {
        let ts = dijkstra(&g, g.source());
        let tt = dijkstra(&g, g.target());
        let lab = compute_labels(&ts, extract_path(&ts, g.target()).unwrap());
        Setup { g, ts, tt, lab }
    }

    fn triangle() -> Setup {
        setup(Graph::from_edges(3, 0, 2, [(0, 1, 1.0), (1, 2, 1.0), (0, 2, 10.0)]).unwrap())
    }

    /// Path 0-1-2-3 of unit edges plus the given chords.
    fn path4(chords: &[(usize, usize, f64)]) -> Setup {
        let mut edges = vec![(0, 1, 1.0), (1, 2, 1.0), (2, 3, 1.0)];
        edges.extend_from_slice(chords);
        setup(Graph::from_edges(4, 0, 3, edges).unwrap())
    }

    #[test]
    fn triangle_partition() {
        let s = triangle();
        let dag = RspDag::partition(&s.g, &s.ts, &s.tt, &s.lab);
        assert_eq!(dag.candidates().len(), 1);
        let c = dag.set(0, 2).next().unwrap();
        assert_eq!((c.edge, c.x, c.y), (2, 0, 2));
        assert_eq!(c.cost, 10.0);
        assert_eq!(dag.set(0, 1).count(), 0);
    }

    #[test]
    fn equal_labels_are_excluded() {
        // 4 and 5 both hang off v1 = 1, so both carry label 1.
        let s = setup(
            Graph::from_edges(
                6,
                0,
                3,
                [
                    (0, 1, 1.0),
                    (1, 2, 1.0),
                    (2, 3, 1.0),
                    (1, 4, 1.0),
                    (1, 5, 1.0),
                    (4, 5, 1.0),
                    (0, 4, 9.0),
                ],
            )
            .unwrap(),
        );
        let dag = RspDag::partition(&s.g, &s.ts, &s.tt, &s.lab);
        assert_eq!(s.lab.label(4), Some(1));
        assert_eq!(s.lab.label(5), Some(1));
        assert!(dag.candidates().iter().all(|c| c.edge != 5));
        // (0, 4) has labels 0 and 1.
        assert_eq!(dag.set(0, 1).map(|c| c.edge).collect::<Vec<_>>(), vec![6]);
    }

    #[test]
    fn chord_lands_in_its_label_pair() {
        let s = path4(&[(0, 2, 5.0)]);
        let dag = RspDag::partition(&s.g, &s.ts, &s.tt, &s.lab);
        assert_eq!(dag.set(0, 2).map(|c| c.edge).collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn dag_shape_for_l3() {
        let s = path4(&[]);
        let dag = RspDag::partition(&s.g, &s.ts, &s.tt, &s.lab);
        assert_eq!(dag.l(), 3);
        assert_eq!(dag.node_count(), 6);
        assert_eq!(dag.arc_count(), 6);
        let sweep = dag.sweep_with_table();
        assert_eq!(sweep.stats.nodes, 6);
        for (i, j) in [(0, 3), (0, 2), (1, 3), (0, 1), (1, 2), (2, 3)] {
            assert!(sweep.node_min(i, j).is_none());
        }
        assert_eq!(sweep.stats.pushes, 0);
    }

    #[test]
    fn top_candidates_reach_every_node() {
        // Two chords spanning the whole path; the lighter one must win everywhere.
        let s = path4(&[(0, 3, 9.0), (0, 3, 7.0)]);
        let dag = RspDag::partition(&s.g, &s.ts, &s.tt, &s.lab);
        let sweep = dag.sweep_with_table();
        for (i, j) in [(0, 3), (0, 2), (1, 3), (0, 1), (1, 2), (2, 3)] {
            assert_eq!(sweep.node_min(i, j).unwrap().edge, 4);
        }
        // Every non-sink node pushes to both children.
        assert_eq!(sweep.stats.pushes, 2 * (6 - 3));
    }

    #[test]
    fn triangle_edge_reports() {
        let s = triangle();
        let dag = RspDag::partition(&s.g, &s.ts, &s.tt, &s.lab);
        let sweep = dag.sweep();
        let reports = edge_replacements(&sweep, &s.lab);
        assert_eq!(reports.len(), 2);
        for (k, r) in reports.iter().enumerate() {
            assert_eq!(r.element.index(), k + 1);
            assert_eq!(r.distance(), Some(10.0));
            let swap = r.swap.unwrap();
            assert_eq!((swap.x, swap.y, swap.edge), (0, 2, 2));
            assert_eq!(reconstruct_edge_path(&swap, &s.ts, &s.tt), vec![0, 2]);
        }
    }

    #[test]
    fn bridges_have_no_replacement() {
        let s = setup(Graph::from_edges(3, 0, 2, [(0, 1, 1.0), (1, 2, 1.0)]).unwrap());
        let dag = RspDag::partition(&s.g, &s.ts, &s.tt, &s.lab);
        let reports = edge_replacements(&dag.sweep(), &s.lab);
        assert!(reports.iter().all(|r| r.swap.is_none()));
    }

    #[test]
    fn heavier_parallel_edge_swaps_in_place() {
        // The chord (1, 2, 4) parallels e_2 = (1, 2).
        let s = path4(&[(1, 2, 4.0)]);
        let dag = RspDag::partition(&s.g, &s.ts, &s.tt, &s.lab);
        let sweep = dag.sweep();
        let swap = sweep.edge_swap(2).unwrap().to_swap();
        assert_eq!((swap.x, swap.y, swap.edge), (1, 2, 3));
        assert_eq!(swap.cost, 6.0);
        assert_eq!(reconstruct_edge_path(&swap, &s.ts, &s.tt), vec![0, 1, 2, 3]);
        assert!(sweep.edge_swap(1).is_none());
        assert!(sweep.edge_swap(3).is_none());
    }

    #[test]
    fn tie_prefers_smaller_tail_distance() {
        // Edges (0, 2, 3) and (0, 3, 4) both cost 4 for e_1 and e_2; the one
        // landing on t has d(y, t) = 0.
        let s = path4(&[(0, 2, 3.0), (0, 3, 4.0)]);
        let dag = RspDag::partition(&s.g, &s.ts, &s.tt, &s.lab);
        let sweep = dag.sweep();
        assert_eq!(sweep.edge_swap(1).unwrap().edge, 4);
        assert_eq!(sweep.edge_swap(2).unwrap().edge, 4);
    }
}

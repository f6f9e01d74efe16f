//! Timing and work-counter measurements for the fast algorithm against the
//! brute-force oracle.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rsp_core::spt::dijkstra;
use rsp_core::{brute_force, Graph, Mode, ReplacementPaths, SolveError, WorkCounters};

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub l: usize,
    /// Everything after the two shortest path trees.
    pub fast: Duration,
    pub brute: Option<Duration>,
    pub counters: WorkCounters,
}

impl BenchRow {
    /// `phase_two_ops / (m + l^2)`.
    pub fn ratio(&self) -> f64 {
        self.counters.phase_two_ops() as f64 / (self.m + self.l * self.l) as f64
    }
}

/// Measures one graph. The brute-force run is skipped when `brute` is false.
pub fn measure(g: &Graph, brute: bool) -> Result<BenchRow, SolveError> {
    let start = Instant::now();
    let solution = ReplacementPaths::compute(g, Mode::All)?;
    let total = start.elapsed();

    let start = Instant::now();
    std::hint::black_box(dijkstra(g, g.source()));
    std::hint::black_box(dijkstra(g, g.target()));
    let trees = start.elapsed();

    let brute = brute.then(|| {
        let start = Instant::now();
        std::hint::black_box(brute_force(g).expect("target reachable"));
        start.elapsed()
    });

    Ok(BenchRow {
        n: g.vertex_count(),
        m: g.edge_count(),
        l: solution.l(),
        fast: total.saturating_sub(trees),
        brute,
        counters: *solution.counters(),
    })
}

fn millis(d: Duration) -> String {
    format!("{:.3}", d.as_secs_f64() * 1e3)
}

pub fn render(rows: &[BenchRow]) -> String {
    let mut out = String::from(
        "n\tm\tl\tfast_ms\tbrute_ms\tphase2_ops\tops_ratio\tcandidates\tdag_pushes\tforest_crossings\n",
    );
    for r in rows {
        let c = &r.counters;
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{:.3}\t{}\t{}\t{}",
            r.n,
            r.m,
            r.l,
            millis(r.fast),
            r.brute.map_or_else(|| "-".to_string(), millis),
            c.phase_two_ops(),
            r.ratio(),
            c.candidates,
            c.dag_pushes,
            c.forest_crossings,
        )
        .unwrap();
    }
    out
}

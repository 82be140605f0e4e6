//! Benchmark harness: runs basis conversions on generated or file-based
//! systems and prints a runtime table with one row per system.
//!
//! Timings are informational only. The harness checks the computed basis
//! sizes against [`expected_sizes`] and checks that every algorithm returns
//! the same basis.

use std::fmt::Write;
use std::path::Path;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::field::CoefficientField;
use crate::groebner::{buchberger, Ideal, MarkedGroebnerBasis};
use crate::io::load_ideal;
use crate::ordering::TermOrdering;
use crate::systems::{default_orderings, expected_sizes, named_system};
use crate::walk::{generic_walk, standard_walk, Algorithm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BenchAlgorithm {
    Standard,
    Generic,
    /// Direct computation in the target ordering.
    Buchberger,
}

impl BenchAlgorithm {
    pub const ALL: [BenchAlgorithm; 3] = [BenchAlgorithm::Standard, BenchAlgorithm::Generic, BenchAlgorithm::Buchberger];

    pub fn name(self) -> &'static str {
        match self {
            BenchAlgorithm::Standard => "standard",
            BenchAlgorithm::Generic => "generic",
            BenchAlgorithm::Buchberger => "buchberger",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "standard" => Some(BenchAlgorithm::Standard),
            "generic" => Some(BenchAlgorithm::Generic),
            "buchberger" | "gb" => Some(BenchAlgorithm::Buchberger),
            _ => None,
        }
    }

    fn title(self) -> &'static str {
        match self {
            BenchAlgorithm::Standard => "Standard walk",
            BenchAlgorithm::Generic => "Generic walk",
            BenchAlgorithm::Buchberger => "Buchberger",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Done {
        /// Size of the start basis; `None` for direct Buchberger runs.
        start_size: Option<usize>,
        basis: MarkedGroebnerBasis,
        /// Cones crossed (standard) or facets flipped (generic).
        cones: Option<usize>,
    },
    Failed(String),
    TimedOut,
}

/// One system × field × algorithm run.
#[derive(Debug, Clone)]
pub struct BenchReport {
    pub system: String,
    pub field: CoefficientField,
    pub algorithm: BenchAlgorithm,
    pub generators: usize,
    pub outcome: Outcome,
    pub wall: Duration,
    /// Reference `(|G|, |G_start|, |G_target|)` when the system is known.
    pub expected: Option<(usize, usize, usize)>,
}

impl BenchReport {
    pub fn basis_size(&self) -> Option<usize> {
        match &self.outcome {
            Outcome::Done { basis, .. } => Some(basis.len()),
            _ => None,
        }
    }

    pub fn start_size(&self) -> Option<usize> {
        match &self.outcome {
            Outcome::Done { start_size, .. } => *start_size,
            _ => None,
        }
    }

    pub fn cones(&self) -> Option<usize> {
        match &self.outcome {
            Outcome::Done { cones, .. } => *cones,
            _ => None,
        }
    }

    /// Whether the computed sizes match the reference; `None` when there is
    /// no reference or the run did not finish.
    pub fn sizes_match(&self) -> Option<bool> {
        let (_, start, target) = self.expected?;
        let size = self.basis_size()?;
        Some(size == target && self.start_size().is_none_or(|s| s == start))
    }
}

#[derive(Debug, Clone, Default)]
pub struct BenchOptions {
    /// Give up on a job after this long. The job's thread is left running
    /// in the background.
    pub timeout: Option<Duration>,
    /// Run all jobs at once instead of one after another.
    pub parallel: bool,
}

/// A loaded benchmark input.
#[derive(Debug, Clone)]
pub struct BenchSystem {
    pub name: String,
    pub ideal: Ideal,
    pub start: TermOrdering,
    pub target: TermOrdering,
}

/// Loads `spec`, either a generated system name (`cyclic5`, `katsura6`) or
/// the path of an ideal file. Files are re-read over `field`; their `start`
/// and `target` orderings are used when present.
pub fn load_system(spec: &str, field: CoefficientField) -> Result<BenchSystem> {
    let path = Path::new(spec);
    if spec.ends_with(".json") || path.exists() {
        let file = load_ideal(path)?.with_field(field)?;
        let name = path.file_stem().map_or(spec.to_string(), |s| s.to_string_lossy().into_owned());
        let n = file.ideal.ring().nvars();
        let (mut start, mut target) = default_orderings(&name, n)?;
        if file.orderings.contains_key("start") {
            start = file.resolve_ordering("start")?;
        }
        if file.orderings.contains_key("target") {
            target = file.resolve_ordering("target")?;
        }
        return Ok(BenchSystem { name, ideal: file.ideal, start, target });
    }
    let ideal = named_system(spec, field)?;
    let (start, target) = default_orderings(spec, ideal.ring().nvars())?;
    Ok(BenchSystem { name: spec.to_string(), ideal, start, target })
}

fn run_job(sys: &BenchSystem, alg: BenchAlgorithm) -> Outcome {
    let walk = |a| {
        let (basis, trace) = match a {
            Algorithm::Standard => standard_walk(&sys.ideal, &sys.start, &sys.target)?,
            Algorithm::Generic => generic_walk(&sys.ideal, &sys.start, &sys.target)?,
        };
        Ok::<_, Error>(Outcome::Done {
            start_size: Some(trace.basis_sizes[0]),
            basis,
            cones: Some(trace.cones_crossed()),
        })
    };
    let res = match alg {
        BenchAlgorithm::Standard => walk(Algorithm::Standard),
        BenchAlgorithm::Generic => walk(Algorithm::Generic),
        BenchAlgorithm::Buchberger => {
            buchberger(&sys.ideal, &sys.target).map(|basis| Outcome::Done { start_size: None, basis, cones: None })
        }
    };
    res.unwrap_or_else(|e| Outcome::Failed(e.to_string()))
}

type Pending = (mpsc::Receiver<(Outcome, Duration)>, Instant);

fn spawn_job(sys: BenchSystem, alg: BenchAlgorithm) -> Pending {
    let (tx, rx) = mpsc::channel();
    let started = Instant::now();
    thread::spawn(move || {
        let t = Instant::now();
        let out = run_job(&sys, alg);
        let _ = tx.send((out, t.elapsed()));
    });
    (rx, started)
}

fn collect_job((rx, started): Pending, timeout: Option<Duration>) -> (Outcome, Duration) {
    let got = match timeout {
        Some(limit) => rx.recv_timeout(limit.saturating_sub(started.elapsed())).ok(),
        None => rx.recv().ok(),
    };
    got.unwrap_or_else(|| (Outcome::TimedOut, started.elapsed()))
}

/// Runs every system × field × algorithm combination. Unknown systems and
/// unreadable files are errors; failures inside a computation are reported
/// as [`Outcome::Failed`].
pub fn run_bench(
    systems: &[String],
    fields: &[CoefficientField],
    algorithms: &[BenchAlgorithm],
    opts: &BenchOptions,
) -> Result<Vec<BenchReport>> {
    let mut jobs = Vec::new();
    for spec in systems {
        for &field in fields {
            let sys = load_system(spec, field)?;
            for &alg in algorithms {
                jobs.push((sys.clone(), alg));
            }
        }
    }

    let describe = |sys: &BenchSystem, field, alg, (outcome, wall)| BenchReport {
        system: sys.name.clone(),
        field,
        algorithm: alg,
        generators: sys.ideal.generators().len(),
        outcome,
        wall,
        expected: expected_sizes(&sys.name),
    };
    let mut reports = Vec::with_capacity(jobs.len());
    if opts.parallel {
        let pending: Vec<_> = jobs.iter().map(|(sys, alg)| spawn_job(sys.clone(), *alg)).collect();
        for ((sys, alg), p) in jobs.iter().zip(pending) {
            reports.push(describe(sys, sys.ideal.ring().field, *alg, collect_job(p, opts.timeout)));
        }
    } else {
        for (sys, alg) in &jobs {
            let res = collect_job(spawn_job(sys.clone(), *alg), opts.timeout);
            reports.push(describe(sys, sys.ideal.ring().field, *alg, res));
        }
    }
    Ok(reports)
}

fn format_duration(d: Duration) -> String {
    let s = d.as_secs_f64();
    if s < 1.0 {
        format!("{:.1} ms", s * 1e3)
    } else {
        format!("{:.2} s", s)
    }
}

fn cell(r: Option<&BenchReport>, with_time: bool) -> String {
    match r.map(|r| (&r.outcome, r.wall)) {
        None => "-".into(),
        Some((Outcome::Done { .. }, wall)) if with_time => format_duration(wall),
        Some((Outcome::Done { .. }, _)) => "done".into(),
        Some((Outcome::Failed(_), _)) => "failed".into(),
        Some((Outcome::TimedOut, _)) => "timeout".into(),
    }
}

fn distinct(values: impl Iterator<Item = usize>) -> String {
    let mut v: Vec<usize> = values.collect();
    v.sort_unstable();
    v.dedup();
    if v.is_empty() {
        "-".into()
    } else {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("/")
    }
}

/// Renders the runtime table followed by the basis-size check. With
/// `with_time` false the runtime cells only say whether the run finished,
/// so the output is reproducible.
pub fn format_report(reports: &[BenchReport], with_time: bool) -> String {
    let mut systems: Vec<&str> = Vec::new();
    let mut fields: Vec<CoefficientField> = Vec::new();
    let mut algs: Vec<BenchAlgorithm> = Vec::new();
    for r in reports {
        if !systems.contains(&r.system.as_str()) {
            systems.push(&r.system);
        }
        if !fields.contains(&r.field) {
            fields.push(r.field);
        }
        if !algs.contains(&r.algorithm) {
            algs.push(r.algorithm);
        }
    }
    algs.sort();

    const W: usize = 15;
    let sys_w = systems.iter().map(|s| s.len()).max().unwrap_or(0).max(6) + 2;
    let group_w = W * fields.len();
    let mut out = String::new();

    write!(out, "{:sys_w$}", "").unwrap();
    for a in &algs {
        write!(out, "{:>group_w$}", a.title()).unwrap();
    }
    writeln!(out).unwrap();
    write!(out, "{:sys_w$}", "system").unwrap();
    for _ in &algs {
        for f in &fields {
            write!(out, "{:>W$}", f.to_string()).unwrap();
        }
    }
    writeln!(out).unwrap();
    for s in &systems {
        write!(out, "{:sys_w$}", s).unwrap();
        for a in &algs {
            for f in &fields {
                let r = reports.iter().find(|r| r.system == *s && r.field == *f && r.algorithm == *a);
                write!(out, "{:>W$}", cell(r, with_time)).unwrap();
            }
        }
        writeln!(out).unwrap();
    }

    writeln!(out).unwrap();
    writeln!(
        out,
        "{:sys_w$}{:>5}{:>10}{:>11}{:>16}{:>8}{:>8}{:>11}",
        "system", "|G|", "|G_start|", "|G_target|", "reference", "cones", "agree", "sizes"
    )
    .unwrap();
    for s in &systems {
        let rs: Vec<&BenchReport> = reports.iter().filter(|r| r.system == *s).collect();
        let reference = rs[0].expected.map_or("-".into(), |(g, a, b)| format!("{}/{}/{}", g, a, b));
        let cones = distinct(rs.iter().filter(|r| r.algorithm == BenchAlgorithm::Standard).filter_map(|r| r.cones()));
        let agree = fields.iter().all(|f| {
            let mut bases = rs.iter().filter(|r| r.field == *f).filter_map(|r| match &r.outcome {
                Outcome::Done { basis, .. } => Some(basis),
                _ => None,
            });
            bases.next().is_none_or(|b0| bases.all(|b| b == b0))
        });
        let checks: Vec<bool> = rs.iter().filter_map(|r| r.sizes_match()).collect();
        let sizes = if checks.is_empty() {
            "n/a"
        } else if checks.iter().all(|&c| c) {
            "ok"
        } else {
            "MISMATCH"
        };
        writeln!(
            out,
            "{:sys_w$}{:>5}{:>10}{:>11}{:>16}{:>8}{:>8}{:>11}",
            s,
            rs[0].generators,
            distinct(rs.iter().filter_map(|r| r.start_size())),
            distinct(rs.iter().filter_map(|r| r.basis_size())),
            reference,
            cones,
            if agree { "yes" } else { "NO" },
            sizes
        )
        .unwrap();
    }
    for r in reports {
        if let Outcome::Failed(msg) = &r.outcome {
            writeln!(out, "{} {} {}: {}", r.system, r.field, r.algorithm.name(), msg).unwrap();
        }
    }
    out
}

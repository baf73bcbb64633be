use std::fmt;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use crate::asm::{visit_chained_asm, Limits};
use crate::board::{BoardSpec, Shape};
use crate::counting::{classical_asm_count, count_max_circular, count_max_linear, qtasm_count, BigCount};
use crate::error::Result;
use crate::placements::count_placements_brute;

/// Known chained-ASM counts as `(shape, n, k, count)`.
pub const TABLE1: &[(Shape, usize, usize, u64)] = &[
    (Shape::Linear, 1, 1, 1),
    (Shape::Linear, 2, 1, 2),
    (Shape::Linear, 3, 1, 7),
    (Shape::Linear, 4, 1, 42),
    (Shape::Linear, 5, 1, 429),
    (Shape::Linear, 6, 1, 7436),
    (Shape::Linear, 1, 2, 2),
    (Shape::Linear, 2, 2, 17),
    (Shape::Linear, 3, 2, 504),
    (Shape::Linear, 4, 2, 53932),
    (Shape::Linear, 1, 3, 1),
    (Shape::Linear, 2, 3, 4),
    (Shape::Linear, 3, 3, 49),
    (Shape::Linear, 1, 4, 3),
    (Shape::Linear, 2, 4, 159),
    (Shape::Linear, 3, 4, 98028),
    (Shape::Linear, 1, 5, 1),
    (Shape::Linear, 2, 5, 8),
    (Shape::Linear, 1, 6, 4),
    (Shape::Linear, 2, 6, 1129),
    (Shape::Linear, 1, 7, 1),
    (Shape::Linear, 2, 7, 16),
    (Shape::Linear, 1, 8, 5),
    (Shape::Linear, 2, 8, 7151),
    (Shape::Circular, 1, 1, 1),
    (Shape::Circular, 2, 1, 2),
    (Shape::Circular, 3, 1, 20),
    (Shape::Circular, 4, 1, 40),
    (Shape::Circular, 5, 1, 3430),
    (Shape::Circular, 6, 1, 6860),
    (Shape::Circular, 1, 2, 2),
    (Shape::Circular, 2, 2, 10),
    (Shape::Circular, 3, 2, 140),
    (Shape::Circular, 4, 2, 5544),
    (Shape::Circular, 1, 3, 3),
    (Shape::Circular, 2, 3, 14),
    (Shape::Circular, 3, 3, 3861),
    (Shape::Circular, 1, 4, 2),
    (Shape::Circular, 2, 4, 42),
    (Shape::Circular, 3, 4, 7436),
    (Shape::Circular, 1, 5, 5),
    (Shape::Circular, 2, 5, 82),
    (Shape::Circular, 1, 6, 2),
    (Shape::Circular, 2, 6, 214),
    (Shape::Circular, 1, 7, 7),
    (Shape::Circular, 2, 7, 478),
    (Shape::Circular, 1, 8, 2),
    (Shape::Circular, 2, 8, 1186),
    (Shape::Circular, 1, 9, 9),
    (Shape::Circular, 2, 9, 2786),
];

/// Where an expected value comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Table,
    ClosedForm,
    BruteForce,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Table => "paper-table",
            Source::ClosedForm => "closed-form",
            Source::BruteForce => "brute-force",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub family: &'static str,
    pub board: BoardSpec,
    pub m: usize,
    pub expected: BigCount,
    pub source: Source,
    /// `None` when skipped.
    pub actual: Option<BigCount>,
    pub status: Status,
    pub seconds: f64,
}

impl Record {
    fn new(
        family: &'static str,
        board: BoardSpec,
        expected: BigCount,
        source: Source,
        actual: Option<BigCount>,
        seconds: f64,
    ) -> Self {
        let status = match &actual {
            None => Status::Skipped,
            Some(a) if *a == expected => Status::Pass,
            Some(_) => Status::Fail,
        };
        Self {
            family,
            board,
            m: board.max_rooks(),
            expected,
            source,
            actual,
            status,
            seconds,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerificationReport {
    pub records: Vec<Record>,
}

impl VerificationReport {
    pub const COLUMNS: [&'static str; 10] =
        ["family", "shape", "n", "k", "m", "expected", "actual", "source", "status", "seconds"];

    /// No record failed. Skipped records do not count against this.
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    /// Header line plus one tab-separated line per record; skipped records
    /// show `-` as the actual value.
    pub fn to_tsv(&self) -> String {
        let mut out = Self::COLUMNS.join("\t");
        out.push('\n');
        for r in &self.records {
            let actual = r.actual.as_ref().map_or("-".to_string(), |a| a.to_string());
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{:.3}\n",
                r.family,
                r.board.shape(),
                r.board.n(),
                r.board.k(),
                r.m,
                r.expected,
                actual,
                r.source,
                r.status,
                r.seconds
            ));
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyOptions {
    pub max_n: usize,
    pub max_k: usize,
    /// Per-entry limit. Entries whose estimated cost is larger are skipped
    /// without running, and a run that reaches the limit is abandoned and
    /// reported as skipped.
    pub budget_seconds: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max_n: 6,
            max_k: 9,
            budget_seconds: 60.0,
        }
    }
}

/// Product formulas that apply to some cells of the table.
fn closed_form(board: &BoardSpec) -> Option<BigCount> {
    let (n, k) = (board.n(), board.k());
    match (board.shape(), k) {
        (Shape::Linear, k) if k % 2 == 1 => Some(classical_asm_count(n).pow(k.div_ceil(2) as u32)),
        (Shape::Circular, 4) => Some(classical_asm_count(2 * n)),
        (Shape::Circular, 1) if n % 2 == 0 => qtasm_count(n / 2).ok(),
        _ => None,
    }
}

/// Seconds per enumerated object on a small cell, used to guess the cost
/// of larger ones from their known counts.
fn calibrate() -> Result<f64> {
    let board = BoardSpec::linear(3, 2)?;
    let start = Instant::now();
    let out = visit_chained_asm(&board, Limits::default(), |_| ControlFlow::Continue(()))?;
    Ok(start.elapsed().as_secs_f64() / out.found.max(1) as f64)
}

fn count_within(board: &BoardSpec, budget: f64) -> Result<(Option<BigCount>, f64)> {
    let start = Instant::now();
    let limits = Limits {
        deadline: Some(start + Duration::from_secs_f64(budget)),
        max_nodes: None,
    };
    let out = visit_chained_asm(board, limits, |_| ControlFlow::Continue(()))?;
    let secs = start.elapsed().as_secs_f64();
    Ok((out.complete.then(|| BigCount::from(out.found)), secs))
}

/// Enumerates every table cell within the size limits and compares with
/// the table and, where one exists, the product formula. Maximum rook
/// placements for `n <= 3, k <= 4` are also counted by brute force and
/// compared with their closed forms.
pub fn verify_tables(opts: &VerifyOptions) -> Result<VerificationReport> {
    let rate = calibrate()?;
    let mut report = VerificationReport::default();
    for &(shape, n, k, count) in TABLE1 {
        if n > opts.max_n || k > opts.max_k {
            continue;
        }
        let board = BoardSpec::new(shape, n, k)?;
        let expected = BigCount::from(count);
        let (actual, secs) = if count as f64 * rate > opts.budget_seconds {
            (None, 0.0)
        } else {
            count_within(&board, opts.budget_seconds)?
        };
        if let Some(f) = closed_form(&board) {
            report
                .records
                .push(Record::new("chained-asm", board, f, Source::ClosedForm, actual.clone(), secs));
        }
        report
            .records
            .push(Record::new("chained-asm", board, expected, Source::Table, actual, secs));
    }
    for shape in [Shape::Linear, Shape::Circular] {
        for n in 1..=opts.max_n.min(3) {
            for k in 1..=opts.max_k.min(4) {
                let board = BoardSpec::new(shape, n, k)?;
                let expected = match shape {
                    Shape::Linear => count_max_linear(n, k)?,
                    Shape::Circular => count_max_circular(n, k)?,
                };
                let start = Instant::now();
                let actual = count_placements_brute(&board, board.max_rooks())?;
                let secs = start.elapsed().as_secs_f64();
                report
                    .records
                    .push(Record::new("placement", board, expected, Source::ClosedForm, Some(actual), secs));
            }
        }
    }
    Ok(report)
}

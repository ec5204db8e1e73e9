//! Brute-force ground truth.
//!
//! Everything here is computed straight from the definitions, without going
//! through the pigeonhole or descent machinery, so it can check them.

use std::fmt;
use std::io::Write;

use rayon::prelude::*;

use crate::descent::DescentOutcome;
use crate::descent::{extracted_run, guessed_bound, guessed_iterations, iterate_trace};
use crate::error::{Error, Result};
use crate::measures::{big_i, phi, three_fn_measures};
use crate::pigeonhole::{Key3Outcome, KeyOutcome, PigeonholeOutcome};
use crate::seq::Seq;

/// `i < j` with both sequences weakly increasing from `i` to `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DicksonWitness {
    i: u64,
    j: u64,
}

impl DicksonWitness {
    pub fn new(i: u64, j: u64) -> Result<Self> {
        if i < j {
            Ok(DicksonWitness { i, j })
        } else {
            Err(Error::Contract(format!(
                "witness needs i < j, got ({i},{j})"
            )))
        }
    }

    pub fn i(&self) -> u64 {
        self.i
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn certifies(&self, seqs: &[&Seq]) -> bool {
        seqs.iter().all(|s| s.eval(self.i) <= s.eval(self.j))
    }
}

impl fmt::Display for DicksonWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// Least `(j, i)` with `i < j ≤ n` on which every sequence weakly increases.
///
/// Such a pair always exists by `j = joint_significant_len`, so the scan
/// never needs to look further than that.
fn least_witness(seqs: &[&Seq], n: u64) -> Option<DicksonWitness> {
    let limit = n.min(Seq::joint_significant_len(seqs));
    (1..=limit).find_map(|j| {
        (0..j)
            .map(|i| DicksonWitness { i, j })
            .find(|w| w.certifies(seqs))
    })
}

pub fn holds_d(f: &Seq, g: &Seq, n: u64) -> Option<DicksonWitness> {
    least_witness(&[f, g], n)
}

pub fn holds_d3(f: &Seq, g: &Seq, h: &Seq, n: u64) -> Option<DicksonWitness> {
    least_witness(&[f, g, h], n)
}

/// Least `n` with a witness below it. The scan is capped at the guessed
/// bound; running past it would refute that bound.
pub fn oracle_min_bound(f: &Seq, g: &Seq) -> Result<u64> {
    let cap = guessed_bound(f, g)?;
    holds_d(f, g, cap).map(|w| w.j).ok_or_else(|| {
        Error::Invariant(format!("no Dickson witness up to the guessed bound {cap}"))
    })
}

// Postcondition checkers.

pub fn pigeonhole_claim_holds(m: u64, f: &Seq, outcome: &PigeonholeOutcome) -> bool {
    match *outcome {
        PigeonholeOutcome::EqualPair { i, j } => i < j && j <= m && f.eval(i) == f.eval(j),
        PigeonholeOutcome::Large { j } => j <= m && m <= f.eval(j),
    }
}

/// Checks a two-sequence outcome whose indices must lie in `lo..=hi`.
pub fn key_claim_holds(f: &Seq, g: &Seq, lo: u64, hi: u64, k: u64, outcome: &KeyOutcome) -> bool {
    let inside = |t: u64| lo <= t && t <= hi;
    match *outcome {
        KeyOutcome::EqualPair { i, j } => {
            inside(i) && inside(j) && i < j && f.eval(i) == f.eval(j) && g.eval(i) == g.eval(j)
        }
        KeyOutcome::LargeF { j } => inside(j) && k <= f.eval(j),
        KeyOutcome::LargeG { j } => inside(j) && k <= g.eval(j),
    }
}

pub fn key3_claim_holds(seqs: [&Seq; 3], lo: u64, hi: u64, k: u64, outcome: &Key3Outcome) -> bool {
    let inside = |t: u64| lo <= t && t <= hi;
    let [f, g, h] = seqs;
    match *outcome {
        Key3Outcome::EqualTriple { i, j } => {
            inside(i) && inside(j) && i < j && seqs.iter().all(|s| s.eval(i) == s.eval(j))
        }
        Key3Outcome::LargeF { j } => inside(j) && k <= f.eval(j),
        Key3Outcome::LargeG { j } => inside(j) && k <= g.eval(j),
        Key3Outcome::LargeH { j } => inside(j) && k <= h.eval(j),
    }
}

pub fn descent_claim_holds(f: &Seq, g: &Seq, n: u64, outcome: DescentOutcome) -> Result<bool> {
    let next = big_i(f, g, n)?;
    Ok(match outcome {
        DescentOutcome::BoundReached => holds_d(f, g, next).is_some(),
        DescentOutcome::MeasureDecreased => phi(f, g, next)? < phi(f, g, n)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundMethod {
    Guessed,
    Extracted,
    OracleMin,
}

impl BoundMethod {
    pub fn name(self) -> &'static str {
        match self {
            BoundMethod::Guessed => "guessed",
            BoundMethod::Extracted => "extracted",
            BoundMethod::OracleMin => "oracle_min",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub method: BoundMethod,
    pub bound: u64,
    /// Least witness at or below `bound`, if the search found one.
    pub witness: Option<DicksonWitness>,
    /// Values of `I` visited on the way; empty for the oracle.
    pub trace: Vec<u64>,
}

impl BoundReport {
    fn attach(method: BoundMethod, f: &Seq, g: &Seq, bound: u64, trace: Vec<u64>) -> Self {
        BoundReport {
            method,
            bound,
            witness: holds_d(f, g, bound),
            trace,
        }
    }

    pub fn guessed(f: &Seq, g: &Seq) -> Result<Self> {
        let trace = iterate_trace(f, g, 0, guessed_iterations(f, g)?)?;
        let bound = *trace.last().expect("at least one iteration");
        Ok(Self::attach(BoundMethod::Guessed, f, g, bound, trace))
    }

    pub fn extracted(f: &Seq, g: &Seq, n: u64) -> Result<Self> {
        let run = extracted_run(f, g, n)?;
        Ok(Self::attach(
            BoundMethod::Extracted,
            f,
            g,
            run.bound,
            run.trace,
        ))
    }

    pub fn oracle_min(f: &Seq, g: &Seq) -> Result<Self> {
        let bound = oracle_min_bound(f, g)?;
        Ok(Self::attach(
            BoundMethod::OracleMin,
            f,
            g,
            bound,
            Vec::new(),
        ))
    }

    /// The witness, or an invariant failure if the bound is not certified.
    pub fn verified_witness(&self) -> Result<DicksonWitness> {
        self.witness.ok_or_else(|| {
            Error::Invariant(format!(
                "{} bound {} has no Dickson witness",
                self.method.name(),
                self.bound
            ))
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepRow {
    pub f_literal: String,
    pub g_literal: String,
    pub oracle_min: u64,
    pub extracted: u64,
    pub guessed: u64,
}

pub const SWEEP_MAX_PREFIX: usize = 5;
pub const SWEEP_MAX_VALUE: u64 = 4;

/// All sequences with prefix length `1..=max_prefix`, values `0..=max_value`
/// and tail `0`, ordered lexicographically by prefix (a proper prefix comes
/// first).
pub fn family(max_prefix: usize, max_value: u64) -> Vec<Seq> {
    let mut prefixes: Vec<Vec<u64>> = Vec::new();
    let mut layer: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..max_prefix {
        layer = layer
            .iter()
            .flat_map(|p| {
                (0..=max_value).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
        prefixes.extend(layer.iter().cloned());
    }
    prefixes.sort();
    prefixes.into_iter().map(Seq::finite).collect()
}

/// One row per ordered pair from [`family`], `f` major.
pub fn sweep(max_prefix: usize, max_value: u64) -> Result<Vec<SweepRow>> {
    if max_prefix > SWEEP_MAX_PREFIX || max_value > SWEEP_MAX_VALUE {
        return Err(Error::GuardRail(format!(
            "sweep needs max_prefix ≤ {SWEEP_MAX_PREFIX} and max_value ≤ {SWEEP_MAX_VALUE}, \
             got {max_prefix} and {max_value}"
        )));
    }
    let seqs = family(max_prefix, max_value);
    let pairs: Vec<(&Seq, &Seq)> = seqs
        .iter()
        .flat_map(|f| seqs.iter().map(move |g| (f, g)))
        .collect();
    pairs
        .into_par_iter()
        .map(|(f, g)| {
            Ok(SweepRow {
                f_literal: f.render(),
                g_literal: g.render(),
                oracle_min: oracle_min_bound(f, g)?,
                extracted: extracted_run(f, g, 0)?.bound,
                guessed: guessed_bound(f, g)?,
            })
        })
        .collect()
}

/// Cells use `.` in place of the literal grammar's `,`.
pub fn csv_cell(literal: &str) -> String {
    literal.replace(',', ".")
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], out: W) -> std::io::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(["f", "g", "oracle_min", "extracted", "guessed"])?;
    for row in rows {
        writer.write_record([
            csv_cell(&row.f_literal),
            csv_cell(&row.g_literal),
            row.oracle_min.to_string(),
            row.extracted.to_string(),
            row.guessed.to_string(),
        ])?;
    }
    writer.flush()
}

/// The three sequences for which the three-function descent step fails at
/// `n = 2`. Tails are zero.
pub fn paper_counterexample() -> (Seq, Seq, Seq) {
    (
        Seq::finite([0, 1, 1, 1, 0]),
        Seq::finite([1, 0, 1, 0, 1]),
        Seq::finite([1, 1, 0, 0, 0]),
    )
}

pub const COUNTEREXAMPLE_N: u64 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Clause {
    pub name: &'static str,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample3Report {
    pub clauses: Vec<Clause>,
}

impl Counterexample3Report {
    pub fn all_passed(&self) -> bool {
        self.clauses.iter().all(|c| c.passed)
    }

    /// Fails on the first clause that did not hold.
    pub fn check(&self) -> Result<()> {
        match self.clauses.iter().find(|c| !c.passed) {
            None => Ok(()),
            Some(c) => Err(Error::ClauseFailed {
                clause: c.name.to_string(),
                detail: format!("expected {}, got {}", c.expected, c.actual),
            }),
        }
    }
}

impl fmt::Display for Counterexample3Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.clauses {
            let verdict = if c.passed { "pass" } else { "FAIL" };
            writeln!(
                f,
                "{}: expected {}, got {}: {verdict}",
                c.name, c.expected, c.actual
            )?;
        }
        Ok(())
    }
}

pub fn verify_counterexample3() -> Result<Counterexample3Report> {
    let (f, g, h) = paper_counterexample();
    verify_counterexample3_with(&f, &g, &h, COUNTEREXAMPLE_N)
}

/// Checks the five facts that make the three-function descent step fail:
/// `Φ₃(n) = 0`, `Ψ₃(n) = 1`, `I₃(n) = 4`, no triple witness up to `I₃(n)`, and
/// `Φ₃` not dropping from `n` to `I₃(n)`.
pub fn verify_counterexample3_with(
    f: &Seq,
    g: &Seq,
    h: &Seq,
    n: u64,
) -> Result<Counterexample3Report> {
    let at_n = three_fn_measures(f, g, h, n)?;
    let at_next = three_fn_measures(f, g, h, at_n.i3)?;
    let witness = holds_d3(f, g, h, at_n.i3);
    let eq = |name, expected: u64, actual: u64| Clause {
        name,
        expected: expected.to_string(),
        actual: actual.to_string(),
        passed: expected == actual,
    };
    let clauses = vec![
        eq("phi3(n)", 0, at_n.phi3),
        eq("psi3(n)", 1, at_n.psi3),
        eq("i3(n)", 4, at_n.i3),
        Clause {
            name: "no D3 witness up to i3(n)",
            expected: "none".into(),
            actual: witness.map_or("none".into(), |w| w.to_string()),
            passed: witness.is_none(),
        },
        Clause {
            name: "no phi3 decrease at i3(n)",
            expected: format!(">= {}", at_n.phi3),
            actual: at_next.phi3.to_string(),
            passed: at_next.phi3 >= at_n.phi3,
        },
    ];
    Ok(Counterexample3Report { clauses })
}

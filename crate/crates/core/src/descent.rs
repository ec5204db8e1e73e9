//! The descent step and the two bounds built on it.
//!
//! [`descent`] decides, at `n`, whether `I(n)` is already a Dickson bound or
//! `Φ` strictly drops from `n` to `I(n)`. Iterating `I` a fixed
//! `f_0 + g_0 + 1` times gives [`guessed_bound`]; iterating only until
//! [`descent`] reports a bound gives [`extracted_bound`].

use crate::error::{Error, Result};
use crate::measures::{big_i, mini, phi, psi};
use crate::pigeonhole::{key, KeyOutcome};
use crate::seq::Seq;

/// Boolean content of the descent step. Carries no witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DescentOutcome {
    /// Some `i < j ≤ I(n)` has `f_i ≤ f_j` and `g_i ≤ g_j`.
    BoundReached,
    /// `Φ(I(n)) < Φ(n)`.
    MeasureDecreased,
}

pub fn descent(f: &Seq, g: &Seq, n: u64) -> Result<DescentOutcome> {
    let k = psi(f, g, n);
    let reached = match key(f, g, n, k)? {
        KeyOutcome::EqualPair { .. } => true,
        // f_j ≥ Ψ(n) ≥ f_i at i = Mini(g,n), so only g can fail to increase.
        KeyOutcome::LargeF { j } => g.eval(mini(g, n)) <= g.eval(j),
        KeyOutcome::LargeG { j } => f.eval(mini(f, n)) <= f.eval(j),
    };
    Ok(if reached {
        DescentOutcome::BoundReached
    } else {
        DescentOutcome::MeasureDecreased
    })
}

/// `I^m(n)`.
pub fn iterate_i(f: &Seq, g: &Seq, n: u64, m: u64) -> Result<u64> {
    (0..m).try_fold(n, |x, _| big_i(f, g, x))
}

/// `[I^1(n), …, I^m(n)]`.
pub fn iterate_trace(f: &Seq, g: &Seq, n: u64, m: u64) -> Result<Vec<u64>> {
    let mut trace = Vec::new();
    let mut x = n;
    for _ in 0..m {
        x = big_i(f, g, x)?;
        trace.push(x);
    }
    Ok(trace)
}

/// Number of `I`-iterations used by [`guessed_bound`]: `f_0 + g_0 + 1`.
pub fn guessed_iterations(f: &Seq, g: &Seq) -> Result<u64> {
    f.eval(0)
        .checked_add(g.eval(0))
        .and_then(|s| s.checked_add(1))
        .ok_or(Error::overflow("f_0 + g_0 + 1", 0))
}

/// `I^{f_0 + g_0 + 1}(0)`.
pub fn guessed_bound(f: &Seq, g: &Seq) -> Result<u64> {
    iterate_i(f, g, 0, guessed_iterations(f, g)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtractedRun {
    pub bound: u64,
    /// `I(n), I²(n), …` up to and including `bound`.
    pub trace: Vec<u64>,
    /// Number of step invocations, at most `Φ(n) + 1`.
    pub depth: u64,
}

/// `B(n) = I(n)` if the descent step reports a bound at `n`, else `B(I(n))`.
pub fn extracted_bound(f: &Seq, g: &Seq, n: u64) -> Result<u64> {
    extracted_run(f, g, n).map(|run| run.bound)
}

/// [`extracted_bound`] with its trace.
///
/// General recursion on `n` with measure `Φ`: a recursive call is allowed only
/// at a point of strictly smaller measure. The recursion is a tail call, so it
/// runs as a loop with fuel `Φ(n) + 1`.
pub fn extracted_run(f: &Seq, g: &Seq, n: u64) -> Result<ExtractedRun> {
    let mut measure = phi(f, g, n)?;
    let mut fuel = measure.saturating_add(1);
    let mut x = n;
    let mut trace = Vec::new();
    loop {
        if fuel == 0 {
            return Err(Error::Invariant(format!(
                "extracted bound from n={n} exhausted its fuel"
            )));
        }
        fuel -= 1;
        let next = big_i(f, g, x)?;
        trace.push(next);
        match descent(f, g, x)? {
            DescentOutcome::BoundReached => {
                return Ok(ExtractedRun {
                    bound: next,
                    depth: trace.len() as u64,
                    trace,
                })
            }
            DescentOutcome::MeasureDecreased => {
                let next_measure = phi(f, g, next)?;
                if next_measure >= measure {
                    return Err(Error::Invariant(format!(
                        "descent at {x} claimed a decrease but phi went {measure} -> {next_measure}"
                    )));
                }
                measure = next_measure;
                x = next;
            }
        }
    }
}

//! Witness-producing pigeonhole principles and the key lemma.
//!
//! [`fph_disj`] is the base principle: among `f_0..=f_m` either two values
//! coincide or some value reaches `m`. The other operations reduce to it:
//! [`fph_disj2`] runs it on pair codes, [`key`] on a shifted window, and
//! [`key3`] runs [`key`] on a coded pair of sequences against a third.

use crate::error::{Error, Result};
use crate::pairing::{code_sq_fill, pair_code, Side};
use crate::seq::Seq;

/// Largest number of values a pigeonhole window may materialize.
pub const MAX_WINDOW: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PigeonholeOutcome {
    /// `i < j ≤ m` and `f_i = f_j`.
    EqualPair { i: u64, j: u64 },
    /// `j ≤ m` and `m ≤ f_j`.
    Large { j: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KeyOutcome {
    /// Both sequences agree at `i < j`.
    EqualPair { i: u64, j: u64 },
    /// `k ≤ f_j`.
    LargeF { j: u64 },
    /// `k ≤ g_j`.
    LargeG { j: u64 },
}

impl KeyOutcome {
    fn offset(self, by: u64) -> Option<Self> {
        Some(match self {
            KeyOutcome::EqualPair { i, j } => KeyOutcome::EqualPair {
                i: i.checked_add(by)?,
                j: j.checked_add(by)?,
            },
            KeyOutcome::LargeF { j } => KeyOutcome::LargeF {
                j: j.checked_add(by)?,
            },
            KeyOutcome::LargeG { j } => KeyOutcome::LargeG {
                j: j.checked_add(by)?,
            },
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Key3Outcome {
    EqualTriple { i: u64, j: u64 },
    LargeF { j: u64 },
    LargeG { j: u64 },
    LargeH { j: u64 },
}

fn window_len(m: u64) -> Result<usize> {
    match m.checked_add(1) {
        Some(len) if len <= MAX_WINDOW => Ok(len as usize),
        _ => Err(Error::Capacity(m.saturating_add(1))),
    }
}

/// Pigeonhole on `f_0..=f_m`.
pub fn fph_disj(m: u64, f: &Seq) -> Result<PigeonholeOutcome> {
    let len = window_len(m)?;
    let values: Vec<u64> = (0..len as u64).map(|i| f.eval(i)).collect();
    pigeonhole(&values)
}

/// Pigeonhole on an explicit list `values[0..=m]`, `m = values.len() - 1`.
///
/// This is the induction on `m` run bottom-up. Step `m` removes the first
/// maximal element `j` of the current list; if `m ≤ f_j` that is the answer,
/// otherwise the rest is handled one level down. Removal preserves order, so
/// the elements are removed in order of decreasing value, ties by increasing
/// index, and tracking original indices replaces the reindexing of the
/// shortened list.
///
/// Unwinding: a `Large(k)` coming back from level `m - 1` satisfies
/// `f_j ≤ m - 1 ≤ f_k` while `f_j` is maximal, so `f_j = f_k`.
pub fn pigeonhole(values: &[u64]) -> Result<PigeonholeOutcome> {
    if values.is_empty() {
        return Err(Error::Contract(
            "pigeonhole needs at least one value".into(),
        ));
    }
    let top = (values.len() - 1) as u64;
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].cmp(&values[a]).then(a.cmp(&b)));

    // Level `level` sees the list without order[..(top - level)].
    let mut removed: Option<usize> = None;
    for (step, &j) in order.iter().enumerate() {
        let level = top - step as u64;
        if level <= values[j] {
            return match removed {
                None => Ok(PigeonholeOutcome::Large { j: j as u64 }),
                Some(r) if values[r] == values[j] => Ok(PigeonholeOutcome::EqualPair {
                    i: r.min(j) as u64,
                    j: r.max(j) as u64,
                }),
                Some(r) => Err(Error::Invariant(format!(
                    "pigeonhole: removed maximum f_{r} = {} below f_{j} = {}",
                    values[r], values[j]
                ))),
            };
        }
        removed = Some(j);
    }
    unreachable!("level 0 always terminates the loop")
}

/// Two-sequence pigeonhole over `0..=k²` via pair codes.
pub fn fph_disj2(f: &Seq, g: &Seq, k: u64) -> Result<KeyOutcome> {
    let m = k.checked_mul(k).ok_or(Error::overflow("k²", k))?;
    let len = window_len(m)?;
    let codes = (0..len as u64)
        .map(|i| pair_code(f.eval(i), g.eval(i)))
        .collect::<Result<Vec<_>>>()?;
    Ok(match pigeonhole(&codes)? {
        PigeonholeOutcome::EqualPair { i, j } => KeyOutcome::EqualPair { i, j },
        PigeonholeOutcome::Large { j } => match code_sq_fill(f.eval(j), g.eval(j), k)? {
            Side::F => KeyOutcome::LargeF { j },
            Side::G => KeyOutcome::LargeG { j },
        },
    })
}

/// [`fph_disj2`] on the window `n+1..=n+k²+1`; indices are absolute.
pub fn key(f: &Seq, g: &Seq, n: u64, k: u64) -> Result<KeyOutcome> {
    let local = fph_disj2(&f.shift(n), &g.shift(n), k)?;
    n.checked_add(1)
        .and_then(|base| local.offset(base))
        .ok_or(Error::overflow("key window", n))
}

/// Three-sequence key lemma on the window `n+1..=n+k⁴+1`: the key lemma at
/// strength `k²` applied to the coded sequence `i ↦ ⟨f_i, g_i⟩` and `h`.
pub fn key3(f: &Seq, g: &Seq, h: &Seq, n: u64, k: u64) -> Result<Key3Outcome> {
    let coded = f.try_zip_with(g, pair_code)?;
    let k2 = k.checked_mul(k).ok_or(Error::overflow("k²", k))?;
    Ok(match key(&coded, h, n, k2)? {
        KeyOutcome::EqualPair { i, j } => Key3Outcome::EqualTriple { i, j },
        KeyOutcome::LargeF { j } => match code_sq_fill(f.eval(j), g.eval(j), k)? {
            Side::F => Key3Outcome::LargeF { j },
            Side::G => Key3Outcome::LargeG { j },
        },
        KeyOutcome::LargeG { j } => Key3Outcome::LargeH { j },
    })
}

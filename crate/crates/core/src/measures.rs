//! Minima, the cross measure `Ψ`, the descent measure `Φ` and the window
//! advance `I(n) = n + Ψ(n)² + 1`.

use crate::error::{Error, Result};
use crate::seq::Seq;

/// Least index of the minimum of `f` on `0..=n`.
///
/// Runs the defining recursion (`Mini(f, t+1)` moves to `t+1` only on a
/// strict improvement). Past [`Seq::significant_len`] no strict improvement
/// is possible, so the scan stops there.
pub fn mini(f: &Seq, n: u64) -> u64 {
    let limit = n.min(f.significant_len());
    (1..=limit).fold(0, |r, t| if f.eval(r) <= f.eval(t) { r } else { t })
}

/// Least index of the maximum of `f` on `0..=n`.
pub fn maxi(f: &Seq, n: u64) -> u64 {
    let limit = n.min(f.significant_len());
    (1..=limit).fold(0, |r, t| if f.eval(t) <= f.eval(r) { r } else { t })
}

/// `max { f(Mini(g,n)), g(Mini(f,n)) }`
pub fn psi(f: &Seq, g: &Seq, n: u64) -> u64 {
    f.eval(mini(g, n)).max(g.eval(mini(f, n)))
}

/// `f(Mini(f,n)) + g(Mini(g,n))`, i.e. the sum of the running minima.
pub fn phi(f: &Seq, g: &Seq, n: u64) -> Result<u64> {
    f.eval(mini(f, n))
        .checked_add(g.eval(mini(g, n)))
        .ok_or(Error::overflow("phi", n))
}

pub fn big_i(f: &Seq, g: &Seq, n: u64) -> Result<u64> {
    let p = psi(f, g, n);
    p.checked_mul(p)
        .and_then(|sq| sq.checked_add(n))
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::overflow("I = n + psi² + 1", n))
}

/// The three-function analogues of `Φ`, `Ψ` and `I` at `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ThreeFnMeasures {
    pub n: u64,
    pub phi3: u64,
    pub psi3: u64,
    /// `n + psi3⁴ + 1`
    pub i3: u64,
}

pub fn three_fn_measures(f: &Seq, g: &Seq, h: &Seq, n: u64) -> Result<ThreeFnMeasures> {
    let (mf, mg, mh) = (mini(f, n), mini(g, n), mini(h, n));
    let phi3 = f
        .eval(mf)
        .checked_add(g.eval(mg))
        .and_then(|v| v.checked_add(h.eval(mh)))
        .ok_or(Error::overflow("phi3", n))?;
    let psi3 = [
        f.eval(mg),
        f.eval(mh),
        g.eval(mf),
        g.eval(mh),
        h.eval(mf),
        h.eval(mg),
    ]
    .into_iter()
    .max()
    .unwrap_or_default();
    let i3 = psi3
        .checked_pow(4)
        .and_then(|p| p.checked_add(n))
        .and_then(|v| v.checked_add(1))
        .ok_or(Error::overflow("I3 = n + psi3⁴ + 1", n))?;
    Ok(ThreeFnMeasures { n, phi3, psi3, i3 })
}

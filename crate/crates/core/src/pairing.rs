//! The square-filling pairing code.
//!
//! The code walks the plane shell by shell: shell `s` holds the pairs whose
//! larger coordinate is `s`, and its entries are exactly `s²..(s+1)²`.
//!
//! ```text
//!  12  13  14  15
//!   6   7   8  11
//!   2   3   5  10
//!   0   1   4   9
//! ```
//!
//! (`n` runs left to right, `m` bottom to top.) Consequently any code `≥ k²`
//! lives on a shell `≥ k`, which is what lets a large code be decoded into a
//! large coordinate.

use crate::error::{Error, Result};

/// Which coordinate of a pair is known to be large.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    F,
    G,
}

/// `n² + m` when `m < n`, otherwise `m² + m + n`.
pub fn pair_code(n: u64, m: u64) -> Result<u64> {
    let code = if m < n {
        n.checked_mul(n).and_then(|sq| sq.checked_add(m))
    } else {
        m.checked_mul(m)
            .and_then(|sq| sq.checked_add(m))
            .and_then(|v| v.checked_add(n))
    };
    code.ok_or(Error::overflow("pair_code", n))
}

/// Inverse of [`pair_code`].
pub fn unpair(code: u64) -> (u64, u64) {
    let shell = code.isqrt();
    let offset = code - shell * shell;
    if offset < shell {
        (shell, offset)
    } else {
        (offset - shell, shell)
    }
}

/// Given `k² ≤ ⟨n, m⟩`, names a coordinate that is at least `k`.
/// Prefers [`Side::F`] when both are.
pub fn code_sq_fill(n: u64, m: u64, k: u64) -> Result<Side> {
    let code = pair_code(n, m)?;
    let applicable = k.checked_mul(k).is_some_and(|sq| sq <= code);
    if !applicable {
        return Err(Error::Contract(format!(
            "code_sq_fill requires k² ≤ ⟨{n},{m}⟩ = {code}, got k = {k}"
        )));
    }
    if k <= n {
        Ok(Side::F)
    } else if k <= m {
        Ok(Side::G)
    } else {
        Err(Error::Invariant(format!(
            "⟨{n},{m}⟩ = {code} ≥ {k}² but neither coordinate reaches {k}"
        )))
    }
}

//! Certified bounds for the two-function case of Dickson's lemma.
//!
//! For sequences `f, g : ℕ → ℕ` a *bound* is an `n` such that some
//! `i < j ≤ n` has `f_i ≤ f_j` and `g_i ≤ g_j`. This crate computes two such
//! bounds from a pigeonhole/descent argument ([`guessed_bound`] and
//! [`extracted_bound`]), and checks them against brute force
//! ([`oracle`]).
//!
//! ```
//! use dickson_core::{extracted_bound, guessed_bound, oracle, parse_seq};
//!
//! let f = parse_seq("1,0").unwrap();
//! let g = parse_seq(";0").unwrap();
//! assert_eq!(guessed_bound(&f, &g).unwrap(), 4);
//! assert_eq!(extracted_bound(&f, &g, 0).unwrap(), 2);
//! assert_eq!(oracle::oracle_min_bound(&f, &g).unwrap(), 2);
//! ```

pub mod cli;
pub mod descent;
pub mod error;
pub mod measures;
pub mod oracle;
pub mod pairing;
pub mod pigeonhole;
pub mod seq;

pub use descent::{
    descent, extracted_bound, extracted_run, guessed_bound, iterate_i, DescentOutcome, ExtractedRun,
};
pub use error::{Error, Result};
pub use measures::{big_i, maxi, mini, phi, psi, three_fn_measures, ThreeFnMeasures};
pub use oracle::{holds_d, holds_d3, oracle_min_bound, BoundReport, DicksonWitness};
pub use pairing::{code_sq_fill, pair_code, Side};
pub use pigeonhole::{fph_disj, fph_disj2, key, key3, Key3Outcome, KeyOutcome, PigeonholeOutcome};
pub use seq::{parse_seq, Seq, Tail};

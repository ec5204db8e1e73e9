//! Invariants checked exhaustively on small universes or by proptest.

use dickson_core::oracle::{
    descent_claim_holds, family, holds_d, key3_claim_holds, key_claim_holds, pigeonhole_claim_holds,
};
use dickson_core::{
    big_i, code_sq_fill, descent, extracted_bound, extracted_run, fph_disj, fph_disj2,
    guessed_bound, key, maxi, mini, pair_code, parse_seq, phi, psi, DescentOutcome, Seq, Side,
    Tail,
};
use proptest::prelude::*;

fn arb_seq() -> impl Strategy<Value = Seq> {
    let tail = prop_oneof![
        (0u64..6).prop_map(Tail::Constant),
        prop::collection::vec(0u64..6, 1..4).prop_map(Tail::Periodic),
    ];
    (prop::collection::vec(0u64..6, 0..6), tail).prop_map(|(p, t)| Seq::new(p, t).unwrap())
}

fn all_prefixes(len: usize, max: u64) -> Vec<Vec<u64>> {
    (0..len).fold(vec![vec![]], |acc, _| {
        acc.into_iter()
            .flat_map(|v| {
                (0..=max).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect()
    })
}

/// Least-index argmin/argmax straight from the definition.
fn argbest(values: &[u64], better: impl Fn(u64, u64) -> bool) -> u64 {
    let mut r = 0;
    for (t, &v) in values.iter().enumerate() {
        if better(v, values[r]) {
            r = t;
        }
    }
    r as u64
}

proptest! {
    #[test]
    fn shift_reindexes(s in arb_seq(), k in 0u64..=50) {
        let shifted = s.shift(k);
        for n in 0..=50 {
            prop_assert_eq!(shifted.eval(n), s.eval(k + 1 + n));
        }
    }

    #[test]
    fn render_parse_round_trip(s in arb_seq()) {
        let back = parse_seq(&s.render()).unwrap();
        prop_assert_eq!(&back, &s);
        prop_assert_eq!(back.render(), s.render());
    }

    #[test]
    fn parse_render_denotes_same(prefix in prop::collection::vec(0u64..1000, 1..5)) {
        let text = prefix.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        let s = parse_seq(&text).unwrap();
        let again = parse_seq(&s.render()).unwrap();
        for n in 0..=100 {
            prop_assert_eq!(s.eval(n), again.eval(n));
        }
    }

    #[test]
    fn phi_is_non_increasing(f in arb_seq(), g in arb_seq()) {
        for n in 0..30 {
            prop_assert!(phi(&f, &g, n + 1).unwrap() <= phi(&f, &g, n).unwrap());
        }
    }

    #[test]
    fn big_i_increases(f in arb_seq(), g in arb_seq(), n in 0u64..1_000_000) {
        prop_assert!(n < big_i(&f, &g, n).unwrap());
    }

    #[test]
    fn descent_sound_on_periodic(f in arb_seq(), g in arb_seq(), n in 0u64..8) {
        let outcome = descent(&f, &g, n).unwrap();
        prop_assert!(descent_claim_holds(&f, &g, n, outcome).unwrap());
    }

    #[test]
    fn extracted_bound_general_n(f in arb_seq(), g in arb_seq(), n in 0u64..8) {
        let run = extracted_run(&f, &g, n).unwrap();
        prop_assert!(big_i(&f, &g, n).unwrap() <= run.bound);
        prop_assert!(holds_d(&f, &g, run.bound).is_some());
        prop_assert!(run.depth <= phi(&f, &g, n).unwrap() + 1);
        prop_assert!(run.trace.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn bounds_valid_on_periodic(f in arb_seq(), g in arb_seq()) {
        prop_assert!(holds_d(&f, &g, guessed_bound(&f, &g).unwrap()).is_some());
        prop_assert!(holds_d(&f, &g, extracted_bound(&f, &g, 0).unwrap()).is_some());
    }

    #[test]
    fn holds_d_monotone(f in arb_seq(), g in arb_seq(), n in 0u64..20, extra in 0u64..20) {
        if holds_d(&f, &g, n).is_some() {
            prop_assert!(holds_d(&f, &g, n + extra).is_some());
        }
    }
}

#[test]
fn pair_code_injective() {
    let mut seen = std::collections::HashMap::new();
    for n in 0..=40 {
        for m in 0..=40 {
            if let Some(prev) = seen.insert(pair_code(n, m).unwrap(), (n, m)) {
                panic!("collision between {prev:?} and {:?}", (n, m));
            }
        }
    }
}

#[test]
fn pair_code_fills_initial_segment() {
    for size in 1..=30u64 {
        let codes: std::collections::HashSet<u64> = (0..=size)
            .flat_map(|n| (0..=size).map(move |m| pair_code(n, m).unwrap()))
            .collect();
        assert!((0..size * size).all(|c| codes.contains(&c)), "N = {size}");
    }
}

#[test]
fn square_filling_sides_are_true() {
    for n in 0..=30 {
        for m in 0..=30 {
            for k in 0..=30u64 {
                if k * k <= pair_code(n, m).unwrap() {
                    match code_sq_fill(n, m, k).unwrap() {
                        Side::F => assert!(k <= n),
                        Side::G => assert!(k <= m),
                    }
                }
            }
        }
    }
}

#[test]
fn mini_maxi_least_index() {
    for len in 1..=6 {
        for values in all_prefixes(len, 3) {
            let f = Seq::finite(values.clone());
            for n in 0..len as u64 {
                let window = &values[..=n as usize];
                assert_eq!(mini(&f, n), argbest(window, |a, b| a < b), "{values:?} {n}");
                assert_eq!(maxi(&f, n), argbest(window, |a, b| a > b), "{values:?} {n}");
            }
        }
    }
}

#[test]
fn fph_disj_exhaustive() {
    for m in 0..=4u64 {
        for values in all_prefixes(m as usize + 1, m + 1) {
            let f = Seq::finite(values);
            let outcome = fph_disj(m, &f).unwrap();
            assert!(pigeonhole_claim_holds(m, &f, &outcome), "{f} {outcome:?}");
        }
    }
}

#[test]
fn fph_disj2_and_key_exhaustive() {
    for k in 0..=2u64 {
        let len = (k * k + 2) as usize;
        let universe = all_prefixes(len, k + 1);
        for fv in &universe {
            let f = Seq::finite(fv.clone());
            for gv in &universe {
                let g = Seq::finite(gv.clone());
                let outcome = fph_disj2(&f, &g, k).unwrap();
                assert!(key_claim_holds(&f, &g, 0, k * k, k, &outcome));
                for n in 0..2 {
                    let outcome = key(&f, &g, n, k).unwrap();
                    assert!(key_claim_holds(&f, &g, n + 1, n + k * k + 1, k, &outcome));
                }
            }
        }
    }
}

#[test]
fn key3_small_periodic() {
    let seqs = [
        Seq::periodic([1], [0, 2]).unwrap(),
        Seq::periodic([], [2, 1, 0]).unwrap(),
        Seq::finite([3, 0, 2]),
        Seq::constant(1),
    ];
    for f in &seqs {
        for g in &seqs {
            for h in &seqs {
                for n in 0..4 {
                    for k in 0..=2u64 {
                        let outcome = dickson_core::key3(f, g, h, n, k).unwrap();
                        assert!(key3_claim_holds(
                            [f, g, h],
                            n + 1,
                            n + k.pow(4) + 1,
                            k,
                            &outcome
                        ));
                    }
                }
            }
        }
    }
}

/// Reading of the recursion guard that compares `Φ(I(n))` against `I(n)`
/// instead of `Φ(n)`. `None` is the null term returned when the guard fails.
fn extracted_with_index_guard(f: &Seq, g: &Seq, n: u64) -> Option<u64> {
    let mut x = n;
    loop {
        let next = big_i(f, g, x).unwrap();
        match descent(f, g, x).unwrap() {
            DescentOutcome::BoundReached => return Some(next),
            DescentOutcome::MeasureDecreased if phi(f, g, next).unwrap() < next => x = next,
            DescentOutcome::MeasureDecreased => return None,
        }
    }
}

/// Both guard readings give the same bound on the prefix ≤ 4, values ≤ 3 family.
#[test]
fn recursion_guard_readings_agree_on_family() {
    let seqs = family(4, 3);
    let mut recursive_steps = 0;
    for f in &seqs {
        for g in &seqs {
            let run = extracted_run(f, g, 0).unwrap();
            recursive_steps += run.depth - 1;
            assert_eq!(
                extracted_with_index_guard(f, g, 0),
                Some(run.bound),
                "{f} {g}"
            );
        }
    }
    assert!(recursive_steps > 0);
}

proptest! {
    /// `Φ(n) ≤ 2Ψ(n) ≤ Ψ(n)² + 1 ≤ I(n)`, so a drop below `Φ(n)` is also a
    /// drop below `I(n)` and the two guard readings never disagree.
    #[test]
    fn phi_bounded_by_big_i(
        f in prop::collection::vec(0u64..1_000_000, 1..8),
        g in prop::collection::vec(0u64..1_000_000, 1..8),
        n in 0u64..10,
    ) {
        let (f, g) = (Seq::finite(f), Seq::finite(g));
        prop_assert!(phi(&f, &g, n).unwrap() <= 2 * psi(&f, &g, n));
        prop_assert!(phi(&f, &g, n).unwrap() <= big_i(&f, &g, n).unwrap());
    }
}

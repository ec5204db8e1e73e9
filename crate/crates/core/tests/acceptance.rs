//! Exit criteria. Runs every criterion in sequence, prints one PASS/FAIL line
//! each, and fails if any criterion failed.
//!
//! Run with `cargo test -p dickson-core --test acceptance -- --nocapture`.

use std::process::Command;
use std::time::{Duration, Instant};

use dickson_core::oracle::{
    descent_claim_holds, family, holds_d, key3_claim_holds, oracle_min_bound,
    pigeonhole_claim_holds, verify_counterexample3,
};
use dickson_core::{
    big_i, code_sq_fill, descent, extracted_run, fph_disj, guessed_bound, key3, pair_code, phi,
    PigeonholeOutcome, Seq, Side,
};

type Outcome = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ms(x: u64) -> Duration {
    Duration::from_millis(x)
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

fn pairing_grid() -> Outcome {
    // Rows bottom to top (m = 0..3), columns n = 0..3.
    let grid = [[0, 1, 4, 9], [2, 3, 5, 10], [6, 7, 8, 11], [12, 13, 14, 15]];
    for (m, row) in grid.iter().enumerate() {
        for (n, &want) in row.iter().enumerate() {
            let got = pair_code(n as u64, m as u64).map_err(|e| e.to_string())?;
            ensure(got == want, || format!("⟨{n},{m}⟩ = {got}, want {want}"))?;
        }
    }
    Ok(())
}

fn square_filling() -> Outcome {
    let mut applicable = 0;
    for n in 0..=30u64 {
        for m in 0..=30u64 {
            let code = pair_code(n, m).unwrap();
            for k in 0..=30u64 {
                if k * k > code {
                    continue;
                }
                applicable += 1;
                let ok = match code_sq_fill(n, m, k).map_err(|e| e.to_string())? {
                    Side::F => k <= n,
                    Side::G => k <= m,
                };
                ensure(ok, || {
                    format!("code_sq_fill({n},{m},{k}) picked a false side")
                })?;
            }
        }
    }
    ensure(applicable > 0, || "no applicable calls".into())
}

fn pigeonhole_exhaustive() -> Outcome {
    let (mut equal, mut large) = (0, 0);
    for m in 0..=4u64 {
        for values in all_prefixes(m as usize + 1, m + 1) {
            let f = Seq::finite(values);
            let outcome = fph_disj(m, &f).map_err(|e| e.to_string())?;
            ensure(pigeonhole_claim_holds(m, &f, &outcome), || {
                format!("m={m} f={f}: {outcome:?}")
            })?;
            match outcome {
                PigeonholeOutcome::EqualPair { .. } => equal += 1,
                PigeonholeOutcome::Large { .. } => large += 1,
            }
        }
    }
    ensure(equal > 0 && large > 0, || {
        format!("disjunct coverage: {equal} equal, {large} large")
    })
}

fn worked_example() -> Outcome {
    let f = Seq::finite([1]);
    let g = Seq::constant(0);
    let i0 = big_i(&f, &g, 0).unwrap();
    let min = oracle_min_bound(&f, &g).unwrap();
    let guessed = guessed_bound(&f, &g).unwrap();
    let extracted = extracted_run(&f, &g, 0).unwrap().bound;
    ensure(i0 == 2, || format!("I(0) = {i0}"))?;
    ensure(min == 2, || format!("oracle_min_bound = {min}"))?;
    ensure(guessed == 4 && guessed > i0, || {
        format!("guessed_bound = {guessed}")
    })?;
    ensure(extracted == 2, || format!("extracted_bound = {extracted}"))
}

fn descent_soundness(seqs: &[Seq]) -> Outcome {
    for f in seqs {
        for g in seqs {
            for n in 0..=6 {
                let outcome = descent(f, g, n).map_err(|e| e.to_string())?;
                let ok = descent_claim_holds(f, g, n, outcome).map_err(|e| e.to_string())?;
                ensure(ok, || {
                    format!("f={f} g={g} n={n}: {outcome:?} not verified")
                })?;
            }
        }
    }
    Ok(())
}

fn bound_validity(seqs: &[Seq]) -> Outcome {
    for f in seqs {
        for g in seqs {
            let guessed = guessed_bound(f, g).map_err(|e| e.to_string())?;
            let extracted = extracted_run(f, g, 0).map_err(|e| e.to_string())?.bound;
            let min = oracle_min_bound(f, g).map_err(|e| e.to_string())?;
            ensure(holds_d(f, g, guessed).is_some(), || {
                format!("f={f} g={g}: D({guessed}) fails")
            })?;
            ensure(holds_d(f, g, extracted).is_some(), || {
                format!("f={f} g={g}: D({extracted}) fails")
            })?;
            ensure(min <= guessed && min <= extracted, || {
                format!("f={f} g={g}: min {min}, guessed {guessed}, extracted {extracted}")
            })?;
        }
    }
    Ok(())
}

fn recursion_depth(seqs: &[Seq]) -> Outcome {
    for f in seqs {
        for g in seqs {
            for n in 0..=6 {
                let run = extracted_run(f, g, n).map_err(|e| e.to_string())?;
                let measure = phi(f, g, n).unwrap();
                ensure(run.depth <= measure + 1, || {
                    format!(
                        "f={f} g={g} n={n}: depth {} > phi + 1 = {}",
                        run.depth,
                        measure + 1
                    )
                })?;
            }
        }
    }
    Ok(())
}

fn counterexample() -> Outcome {
    let report = verify_counterexample3().map_err(|e| e.to_string())?;
    ensure(report.clauses.len() == 5, || "expected five clauses".into())?;
    report.check().map_err(|e| e.to_string())
}

fn key3_exhaustive() -> Outcome {
    let seqs = family(3, 2);
    for f in &seqs {
        for g in &seqs {
            for h in &seqs {
                for k in 0..=1u64 {
                    for n in 0..=3u64 {
                        let outcome = key3(f, g, h, n, k).map_err(|e| e.to_string())?;
                        let hi = n + k.pow(4) + 1;
                        ensure(key3_claim_holds([f, g, h], n + 1, hi, k, &outcome), || {
                            format!("f={f} g={g} h={h} n={n} k={k}: {outcome:?}")
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn cli_golden() -> Outcome {
    let cases: [(&[&str], &str); 3] = [
        (
            &[
                "bound", "--f", "1,0;0", "--g", ";0", "--method", "both", "--json",
            ],
            "{\"command\":\"bound\",\"extracted\":2,\"extracted_trace\":[2],\
             \"extracted_witness\":[1,2],\"f\":\"1,0;0\",\"g\":\";0\",\"guessed\":4,\
             \"guessed_trace\":[2,4],\"guessed_witness\":[1,2]}\n",
        ),
        (
            &["oracle", "--f", "1,0;0", "--g", ";0", "--json"],
            "{\"command\":\"oracle\",\"f\":\"1,0;0\",\"g\":\";0\",\"oracle_min\":2,\
             \"witness\":[1,2]}\n",
        ),
        (
            &["witness", "--f", ";0", "--g", ";0", "--n", "1", "--json"],
            "{\"command\":\"witness\",\"f\":\";0\",\"g\":\";0\",\"n\":1,\"witness\":[0,1]}\n",
        ),
    ];
    for (args, want) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_dickson"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        let got = String::from_utf8_lossy(&out.stdout);
        ensure(out.status.code() == Some(0), || {
            format!("{args:?} exited {:?}", out.status)
        })?;
        ensure(got == want, || {
            format!("{args:?}\n  got  {got:?}\n  want {want:?}")
        })?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let seqs = family(4, 3);
    type Check<'a> = (
        u32,
        &'a str,
        Option<Duration>,
        Box<dyn Fn() -> Outcome + 'a>,
    );
    let criteria: Vec<Check> = vec![
        (1, "pairing grid", Some(ms(1)), Box::new(pairing_grid)),
        (
            2,
            "square-filling",
            Some(ms(1_000)),
            Box::new(square_filling),
        ),
        (
            3,
            "pigeonhole postcondition",
            Some(ms(10_000)),
            Box::new(pigeonhole_exhaustive),
        ),
        (4, "worked example", Some(ms(1)), Box::new(worked_example)),
        (
            5,
            "descent soundness",
            Some(ms(120_000)),
            Box::new(|| descent_soundness(&seqs)),
        ),
        (
            6,
            "bound validity",
            Some(ms(120_000)),
            Box::new(|| bound_validity(&seqs)),
        ),
        (
            7,
            "recursion depth",
            None,
            Box::new(|| recursion_depth(&seqs)),
        ),
        (
            8,
            "three-function counterexample",
            Some(ms(1)),
            Box::new(counterexample),
        ),
        (
            9,
            "key3 postcondition",
            Some(ms(30_000)),
            Box::new(key3_exhaustive),
        ),
        (10, "CLI golden run", None, Box::new(cli_golden)),
    ];

    let mut failed = Vec::new();
    for (id, name, budget, check) in &criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = result.and_then(|()| match budget {
            Some(limit) if elapsed >= *limit => Err(format!("took {elapsed:?}, budget {limit:?}")),
            _ => Ok(()),
        });
        match &result {
            Ok(()) => println!("[PASS] criterion {id:>2}: {name} ({elapsed:.2?})"),
            Err(why) => {
                println!("[FAIL] criterion {id:>2}: {name} ({elapsed:.2?}): {why}");
                failed.push(*id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

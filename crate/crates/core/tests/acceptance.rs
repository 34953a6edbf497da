//! Acceptance criteria, each run at its stated size and tolerance.
//!
//! Prints one PASS/FAIL line per criterion and exits non-zero if any fail.
//! Set `PATHDOM_ACCEPT_N11=1` to include the n = 11 worst-case count.

#![allow(
    clippy::needless_range_loop,
    clippy::neg_cmp_op_on_partial_ord,
    clippy::type_complexity
)]

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use pathdom_core::domination::path_run_mask;
use pathdom_core::enumerate::fold_permutations;
use pathdom_core::expectation::*;
use pathdom_core::extremal::*;
use pathdom_core::montecarlo::{sample_gamma, SampleConfig};
use pathdom_core::oracle::brute_force_expectation;
use pathdom_core::series::{convolution_holds, f_from_egf, D_from_egf};
use pathdom_core::{BruteForceOptions, GraphSpec, Permutation};

const WORST: [u64; 10] = [1, 2, 4, 24, 56, 640, 1632, 30464, 81664, 2251008];
const BEST: [u64; 10] = [1, 2, 2, 24, 64, 80, 3408, 9856, 13440, 1377792];

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn opts() -> BruteForceOptions {
    BruteForceOptions::with_cap(11)
}

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn ac1_worst_case_table() -> Outcome {
    let rec = FTable::build(11);
    let egf = f_from_egf(11).map_err(|e| e.to_string())?;
    for n in 1..=10 {
        let bf = count_extremal_bruteforce(n, BoundKind::Worst, &opts())
            .map_err(|e| e.to_string())?
            .count;
        let table = big(WORST[n - 1]);
        ensure!(bf == table, "n={n}: brute force {bf} != {table}");
        ensure!(rec.get(n) == &table, "n={n}: recurrence {} != {table}", rec.get(n));
        ensure!(egf[n] == table, "n={n}: egf {} != {table}", egf[n]);
    }
    let mut detail = "n=1..10 brute force = recurrence = EGF = table".to_string();
    ensure!(rec.get(11) == &big(6241280), "n=11 recurrence {}", rec.get(11));
    ensure!(egf[11] == big(6241280), "n=11 egf {}", egf[11]);
    if std::env::var_os("PATHDOM_ACCEPT_N11").is_some() {
        let bf = count_extremal_bruteforce(11, BoundKind::Worst, &opts())
            .map_err(|e| e.to_string())?
            .count;
        ensure!(bf == big(6241280), "n=11 brute force {bf}");
        detail.push_str("; n=11 brute force = 6241280");
    } else {
        detail.push_str("; n=11 recurrence/EGF only");
    }
    Ok(detail)
}

fn ac2_best_case_table() -> Outcome {
    for n in 1..=10 {
        let bf = count_extremal_bruteforce(n, BoundKind::Best, &opts())
            .map_err(|e| e.to_string())?
            .count;
        ensure!(bf == big(BEST[n - 1]), "n={n}: brute force {bf} != {}", BEST[n - 1]);
    }
    let applicable: Vec<usize> = (1..=10).filter(|&n| b_formula_applicable(n)).collect();
    ensure!(applicable == [3, 5, 6, 8, 9, 10], "formula range {applicable:?}");
    for &n in &applicable {
        let f = b_formula(n).map_err(|e| e.to_string())?;
        ensure!(f == big(BEST[n - 1]), "n={n}: formula {f} != {}", BEST[n - 1]);
    }
    Ok("n=1..10 brute force = table; formula matches on {3,5,6,8,9,10}".into())
}

fn ac3_expectation_oracle() -> Outcome {
    let table = ExpectationTable::build(200);
    for n in 1..=9 {
        let bf = brute_force_expectation(&GraphSpec::path(n).unwrap(), &opts()).map_err(|e| e.to_string())?;
        ensure!(
            table.value(n) == bf,
            "n={n}: recurrence {} != brute force {bf}",
            table.value(n)
        );
        ensure!(gamma_o_path_recurrence(n) == bf, "n={n}: streaming recurrence differs");
    }
    for n in 1..=200 {
        let cf = gamma_o_path_closed_form(n).map_err(|e| e.to_string())?;
        ensure!(
            table.value(n) == cf,
            "n={n}: recurrence {} != closed form {cf}",
            table.value(n)
        );
    }
    Ok("exact equality: brute force n<=9, closed form n<=200".into())
}

fn ac4_asymptotic_constant() -> Outcome {
    let c = gamma_o_asymptotic_constant();
    let e2 = std::f64::consts::E * std::f64::consts::E;
    ensure!((c - (e2 - 1.0) / (2.0 * e2)).abs() < 1e-15, "constant {c}");
    ensure!(
        format!("{c:.4}") == "0.4323",
        "constant {c:.6} does not round to 0.4323"
    );
    let n = 10_000;
    let ratio = rational_to_f64(&gamma_o_path_recurrence(n)) / n as f64;
    let gap = (ratio - c).abs();
    ensure!(gap < 1e-3, "|E/n - c| = {gap}");
    Ok(format!(
        "E(P_10000)/10000 = {ratio:.6}, c = {c:.6}, gap {gap:.2e} < 1e-3"
    ))
}

fn multisets(total: usize) -> Vec<Vec<usize>> {
    fn go(left: usize, largest: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for p in (1..=largest.min(left)).rev() {
            cur.push(p);
            go(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), &mut out);
    out
}

fn ac5_family_formulas() -> Outcome {
    let bf = |g: GraphSpec| brute_force_expectation(&g, &opts()).map_err(|e| e.to_string());
    for n in 3..=9 {
        let b = bf(GraphSpec::cycle(n).unwrap())?;
        ensure!(gamma_o_cycle(n).unwrap() == b, "cycle {n}: formula != {b}");
    }
    for l in 1..=7 {
        let b = bf(GraphSpec::star(l).unwrap())?;
        ensure!(gamma_o_star(l).unwrap() == b, "star {l}: formula != {b}");
    }
    let parts_list = multisets(8);
    for parts in &parts_list {
        let b = bf(GraphSpec::complete_multipartite(parts).unwrap())?;
        ensure!(
            gamma_o_complete_multipartite(parts).unwrap() == b,
            "multipartite {parts:?}: formula != {b}"
        );
    }
    let mut divergent = Vec::new();
    for s in 3..=6 {
        let b = bf(GraphSpec::wheel(s).unwrap())?;
        ensure!(gamma_o_wheel(s).unwrap() == b, "wheel {s}: corrected formula != {b}");
        let printed = gamma_o_wheel_as_printed(s).unwrap();
        ensure!(printed != b, "wheel {s}: printed form unexpectedly matches");
        divergent.push(format!("H_{s}: {printed} vs {b}"));
    }
    Ok(format!(
        "cycle n<=9, star <=7 leaves, {} multipartite shapes <=8 vertices exact; wheel corrected exact, printed diverges ({})",
        parts_list.len(),
        divergent.join(", ")
    ))
}

fn ac6_structural() -> Outcome {
    for n in 1..=14 {
        let expected = if n % 2 == 0 { n / 2 + 1 } else { 1 };
        let searched = exhaustive_maximum_independent_dominating_sets(n).map_err(|e| e.to_string())?;
        let mut listed: Vec<u64> = enumerate_maximal_independent_dominating_sets(n)
            .iter()
            .map(|s| mask_of(s))
            .collect();
        listed.sort_unstable();
        ensure!(
            searched.len() == expected,
            "n={n}: subset search found {}",
            searched.len()
        );
        ensure!(listed == searched, "n={n}: listed family differs from subset search");
    }
    let f3 = count_extremal_bruteforce(3, BoundKind::Worst, &opts()).map_err(|e| e.to_string())?;
    let got: BTreeSet<String> = f3.witnesses.unwrap().iter().map(Permutation::to_string).collect();
    let want: BTreeSet<String> = ["123", "132", "312", "321"].map(String::from).into();
    ensure!(got == want, "F_3 = {got:?}");
    ensure!(
        got.iter().all(|p| !p.starts_with('2')),
        "F_3 contains an order starting with 2"
    );
    Ok("n/2+1 (even) / 1 (odd) sets for n<=14 by subset search; F_3 = {123,132,312,321}".into())
}

fn perm_set<P: Fn(&[u32]) -> Option<Vec<u32>> + Sync>(n: usize, f: P) -> BTreeSet<Vec<u32>> {
    fold_permutations(
        n,
        &opts(),
        BTreeSet::new,
        |s, p| {
            if let Some(v) = f(p) {
                s.insert(v);
            }
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    )
    .unwrap()
}

fn ac7_bijection() -> Outcome {
    let mut sizes = Vec::new();
    for n in [1usize, 3, 5, 7, 9] {
        let top = max_dominating_size(n) as u32;
        let inv_f = perm_set(n, |p| {
            (path_run_mask(p).count_ones() == top).then(|| Permutation::new(p.to_vec()).unwrap().inverse().into())
        });
        let w = perm_set(n, |p| {
            is_weakly_alternating(&Permutation::new(p.to_vec()).unwrap()).then(|| p.to_vec())
        });
        ensure!(
            inv_f == w,
            "n={n}: inverse image of F_n ({}) != W_n ({})",
            inv_f.len(),
            w.len()
        );
        let no_max = count_no_even_local_maxima(n, &opts()).map_err(|e| e.to_string())?;
        let comp: BTreeSet<Vec<u32>> = w
            .iter()
            .map(|p| Permutation::new(p.clone()).unwrap().complement().into())
            .collect();
        ensure!(
            comp.iter()
                .all(|p| has_no_even_local_maxima(&Permutation::new(p.clone()).unwrap())),
            "n={n}: complement of W_n has an even local maximum"
        );
        ensure!(
            w.len() as u64 == no_max,
            "n={n}: |W_n| = {} but {no_max} have no even local maxima",
            w.len()
        );
        sizes.push(w.len());
    }
    Ok(format!("odd n<=9: inverse(F_n) = W_n, sizes {sizes:?}"))
}

#[allow(non_snake_case)]
fn ac8_convolution() -> Outcome {
    let D = D_from_egf(64).map_err(|e| e.to_string())?;
    let f = f_from_egf(64).map_err(|e| e.to_string())?;
    for n in (2..=60).step_by(2) {
        ensure!(convolution_holds(n, &D, &f), "n={n}: f(n) != Σ C(n,2i) D(2i) D(n-2i)");
    }
    let rec = FTable::build(60);
    for n in 0..=60 {
        ensure!(rec.get(n) == &f[n], "n={n}: recurrence {} != egf {}", rec.get(n), f[n]);
    }
    for n in 1..=10 {
        let bf = count_D_bruteforce(n, &opts()).map_err(|e| e.to_string())?;
        ensure!(D[n] == big(bf), "n={n}: D egf {} != brute force {bf}", D[n]);
    }
    Ok("convolution for even n<=60; D(n) = brute force for n<=10".into())
}

fn ac9_monte_carlo() -> Outcome {
    let started = Instant::now();
    let config = SampleConfig::new(2000, 40000, 20_140_601);
    let one = sample_gamma(&config.clone().with_workers(1)).map_err(|e| e.to_string())?;
    let four = sample_gamma(&config.with_workers(4)).map_err(|e| e.to_string())?;
    ensure!(one == four, "histograms differ between 1 and 4 workers");
    ensure!(
        one.min() >= 667 && one.max() <= 1000,
        "support [{}, {}]",
        one.min(),
        one.max()
    );
    let exact = rational_to_f64(&gamma_o_path_recurrence(2000));
    let tol = 5.0 * one.std_dev() / 200.0;
    let gap = (one.mean - exact).abs();
    ensure!(gap <= tol, "|mean - exact| = {gap} > {tol}");
    let secs = started.elapsed().as_secs_f64();
    ensure!(secs < 60.0, "took {secs:.1}s");
    Ok(format!(
        "support [{}, {}], mean {:.3} vs exact {exact:.3} (gap {gap:.3} <= {tol:.3}), {secs:.1}s",
        one.min(),
        one.max(),
        one.mean
    ))
}

fn ac10_caro_wei() -> Outcome {
    let one = BigRational::from_integer(1.into());
    ensure!(
        caro_wei_bound(&GraphSpec::path(1).unwrap()) == one,
        "path(1) bound != 1"
    );
    let table = ExpectationTable::build(200);
    for n in 1..=200 {
        let third = BigRational::new((n + 1).into(), 3.into());
        if n >= 2 {
            let cw = caro_wei_bound(&GraphSpec::path(n).unwrap());
            ensure!(cw == third, "n={n}: Caro–Wei {cw} != (n+1)/3");
        }
        ensure!(table.value(n) >= third, "n={n}: expectation below (n+1)/3");
    }
    Ok("Σ1/(1+deg) = (n+1)/3 for 2<=n<=200 (path(1): 1); E(P_n) >= (n+1)/3 for n<=200".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("AC1 worst-case table", ac1_worst_case_table),
        ("AC2 best-case table", ac2_best_case_table),
        ("AC3 expectation oracle", ac3_expectation_oracle),
        ("AC4 asymptotic constant", ac4_asymptotic_constant),
        ("AC5 family formulas", ac5_family_formulas),
        ("AC6 structural propositions", ac6_structural),
        ("AC7 inverse bijection", ac7_bijection),
        ("AC8 convolution identity", ac8_convolution),
        ("AC9 monte carlo", ac9_monte_carlo),
        ("AC10 caro-wei", ac10_caro_wei),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let started = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {name} [{secs:.2}s]: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {name} [{secs:.2}s]: {why}");
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

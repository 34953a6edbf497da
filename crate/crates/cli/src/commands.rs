use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use num_rational::BigRational;
use pathdom_core::enumerate::BruteForceOptions;
use pathdom_core::expectation::{self, rational_to_f64};
use pathdom_core::extremal::{count_extremal, BoundKind, ExtremalReport, Method};
use pathdom_core::montecarlo::{normalize, sample_gamma, Normalization, SampleConfig};
use pathdom_core::serde_util::rational_string;
use pathdom_core::series::{f_from_egf, D_from_egf};
use pathdom_core::verify::{self, Depth};
use pathdom_core::{run_online_domination, Error, GraphSpec, Permutation};
use serde::{Deserialize, Serialize};

use crate::args::*;
use crate::CliError;

type CmdResult = Result<(), CliError>;

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let started = Instant::now();
    let result = match &cli.command {
        Command::Simulate(a) => simulate(cli, a, out),
        Command::Expect(a) => expect(cli, a, out),
        Command::Extremal(a) => extremal(cli, a, out, err),
        Command::Series(a) => series(cli, a, out),
        Command::Sample(a) => sample(cli, a, out, err),
        Command::Verify(a) => verify_cmd(cli, a, out),
    };
    if cli.verbose > 0 {
        writeln!(err, "elapsed: {:.3}s", started.elapsed().as_secs_f64())?;
    }
    result
}

fn csv_writer(out: &mut dyn Write) -> csv::Writer<&mut dyn Write> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

fn build_graph(g: &GraphArgs) -> Result<GraphSpec, CliError> {
    let need_n = || {
        g.n.ok_or_else(|| CliError::Invalid("--n is required for this family".into()))
    };
    Ok(match g.family {
        FamilyArg::Path => GraphSpec::path(need_n()?)?,
        FamilyArg::Cycle => GraphSpec::cycle(need_n()?)?,
        FamilyArg::Star => GraphSpec::star(need_n()?)?,
        FamilyArg::Wheel => GraphSpec::wheel(need_n()?)?,
        FamilyArg::Multipartite => GraphSpec::complete_multipartite(&g.parts)?,
    })
}

fn family_name(f: FamilyArg) -> &'static str {
    match f {
        FamilyArg::Path => "path",
        FamilyArg::Cycle => "cycle",
        FamilyArg::Star => "star",
        FamilyArg::Wheel => "wheel",
        FamilyArg::Multipartite => "multipartite",
    }
}

fn parameter(g: &GraphArgs) -> String {
    match g.family {
        FamilyArg::Multipartite => g.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","),
        _ => g.n.map(|n| n.to_string()).unwrap_or_default(),
    }
}

#[derive(Debug, Serialize)]
struct SimulateReport<'a> {
    family: &'static str,
    parameter: String,
    order: &'a Permutation,
    gamma: usize,
    chosen: Vec<u32>,
    chosen_mask: Vec<bool>,
}

fn simulate(cli: &Cli, a: &SimulateArgs, out: &mut dyn Write) -> CmdResult {
    let graph = build_graph(&a.graph)?;
    let perm: Permutation = a.order.parse()?;
    let outcome = run_online_domination(&graph, &perm)?;
    let members = outcome.sorted_members();
    let join = |v: &[u32], sep: &str| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep);
    match cli.format {
        Format::Text => {
            writeln!(out, "gamma: {}", outcome.size)?;
            writeln!(out, "set: {{{}}}", join(&members, ", "))?;
            writeln!(out, "added in order: {}", join(&outcome.chosen, ", "))?;
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["order", "gamma", "set"])?;
            w.write_record([perm.to_string(), outcome.size.to_string(), join(&members, " ")])?;
            w.flush()?;
        }
        Format::Json => {
            let report = SimulateReport {
                family: family_name(a.graph.family),
                parameter: parameter(&a.graph),
                order: &perm,
                gamma: outcome.size,
                chosen: outcome.chosen.clone(),
                chosen_mask: outcome.chosen_mask.clone(),
            };
            serde_json::to_writer(&mut *out, &report)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// JSON form of `expect`; rationals are `"p/q"` strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpectReport {
    pub family: String,
    pub parameter: String,
    pub method: String,
    #[serde(with = "pathdom_core::serde_util::rational")]
    pub value: BigRational,
    pub approx: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub as_printed: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caro_wei: Option<String>,
}

fn expect(cli: &Cli, a: &ExpectArgs, out: &mut dyn Write) -> CmdResult {
    let graph = build_graph(&a.graph)?;
    let n = a.graph.n.unwrap_or(0);
    let (value, method) = match a.graph.family {
        FamilyArg::Path => match a.method {
            ExpectMethod::Recurrence => (expectation::gamma_o_path_recurrence(n), "recurrence"),
            ExpectMethod::ClosedForm => (expectation::gamma_o_path_closed_form(n)?, "closed_form"),
        },
        FamilyArg::Cycle => (expectation::gamma_o_cycle(n)?, "formula"),
        FamilyArg::Star => (expectation::gamma_o_star(n)?, "formula"),
        FamilyArg::Wheel => (expectation::gamma_o_wheel(n)?, "formula"),
        FamilyArg::Multipartite => (expectation::gamma_o_complete_multipartite(&a.graph.parts)?, "formula"),
    };
    let as_printed = if a.as_printed {
        Some(match a.graph.family {
            FamilyArg::Path => expectation::gamma_o_path_closed_form_as_printed(n)?,
            FamilyArg::Wheel => expectation::gamma_o_wheel_as_printed(n)?,
            f => {
                return Err(CliError::Invalid(format!(
                    "--as-printed is only defined for path and wheel, not {}",
                    family_name(f)
                )))
            }
        })
    } else {
        None
    };
    let caro_wei = a.caro_wei.then(|| expectation::caro_wei_bound(&graph));

    let show = |r: &BigRational| if a.rational { rational_string(r) } else { r.to_string() };
    match cli.format {
        Format::Text => {
            writeln!(out, "{}", show(&value))?;
            if let Some(p) = &as_printed {
                let verdict = if *p == value { "agrees" } else { "differs" };
                writeln!(out, "as printed: {} ({verdict})", show(p))?;
            }
            if let Some(c) = &caro_wei {
                writeln!(out, "caro-wei bound: {}", show(c))?;
            }
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record([
                "family",
                "parameter",
                "method",
                "value",
                "approx",
                "as_printed",
                "caro_wei",
            ])?;
            w.write_record([
                family_name(a.graph.family).to_string(),
                parameter(&a.graph),
                method.to_string(),
                rational_string(&value),
                rational_to_f64(&value).to_string(),
                as_printed.as_ref().map(rational_string).unwrap_or_default(),
                caro_wei.as_ref().map(rational_string).unwrap_or_default(),
            ])?;
            w.flush()?;
        }
        Format::Json => {
            let report = ExpectReport {
                family: family_name(a.graph.family).into(),
                parameter: parameter(&a.graph),
                method: method.into(),
                approx: rational_to_f64(&value),
                value,
                as_printed: as_printed.as_ref().map(rational_string),
                caro_wei: caro_wei.as_ref().map(rational_string),
            };
            serde_json::to_writer(&mut *out, &report)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn brute_options(b: &BruteForceArgs, witness_cap: usize) -> BruteForceOptions {
    BruteForceOptions {
        cap: b.cap,
        allow_large: b.allow_large,
        workers: b.workers,
        witness_cap,
    }
}

fn extremal(cli: &Cli, a: &ExtremalArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let kind = match a.bound {
        BoundArg::Worst => BoundKind::Worst,
        BoundArg::Best => BoundKind::Best,
    };
    let methods: Vec<Method> = match a.method {
        MethodArg::All => Method::applicable(kind).to_vec(),
        MethodArg::BruteForce => vec![Method::BruteForce],
        MethodArg::Recurrence => vec![Method::Recurrence],
        MethodArg::Egf => vec![Method::Egf],
        MethodArg::Formula => vec![Method::Formula],
    };
    let opts = brute_options(&a.brute, a.witnesses.unwrap_or(100));
    let mut reports: Vec<ExtremalReport> = Vec::new();
    for method in methods {
        match count_extremal(a.n, kind, method, &opts) {
            Ok(r) => reports.push(r),
            Err(Error::NotApplicable { .. }) if a.method == MethodArg::All => {
                writeln!(err, "note: {method} does not apply at n = {}; skipped", a.n)?;
            }
            Err(e) => return Err(e.into()),
        }
    }

    match cli.format {
        Format::Text => {
            writeln!(
                out,
                "n={} bound={} extremal_size={}",
                a.n,
                kind,
                kind.extremal_size(a.n)
            )?;
            for r in &reports {
                writeln!(out, "{}: {}", r.method, r.count)?;
                if let (Some(_), Some(w)) = (a.witnesses, &r.witnesses) {
                    for p in w {
                        writeln!(out, "  {p}")?;
                    }
                }
            }
        }
        Format::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["n", "bound_kind", "extremal_size", "count", "method"])?;
            for r in &reports {
                w.write_record([
                    r.n.to_string(),
                    r.bound_kind.to_string(),
                    r.extremal_size.to_string(),
                    r.count.to_string(),
                    r.method.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            if a.method == MethodArg::All {
                serde_json::to_writer(&mut *out, &reports)?;
            } else {
                serde_json::to_writer(&mut *out, &reports[0])?;
            }
            writeln!(out)?;
        }
    }

    if let Some(first) = reports.first() {
        if let Some(bad) = reports.iter().find(|r| r.count != first.count) {
            return Err(CliError::Verification(format!(
                "n = {}: {} = {} but {} = {}",
                a.n, first.method, first.count, bad.method, bad.count
            )));
        }
    }
    Ok(())
}

#[derive(Debug, Serialize)]
#[allow(non_snake_case)]
struct SeriesRow {
    n: usize,
    D: String,
    f: String,
}

#[allow(non_snake_case)]
fn series(cli: &Cli, a: &SeriesArgs, out: &mut dyn Write) -> CmdResult {
    let D = D_from_egf(a.order)?;
    let f = f_from_egf(a.order)?;
    let rows: Vec<SeriesRow> = (0..=a.order)
        .map(|n| SeriesRow {
            n,
            D: D[n].to_string(),
            f: f[n].to_string(),
        })
        .collect();
    if cli.format == Format::Json {
        serde_json::to_writer(&mut *out, &rows)?;
        writeln!(out)?;
        return Ok(());
    }
    let mut w = csv_writer(out);
    for row in &rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Serialize)]
struct SampleJson {
    #[serde(flatten)]
    summary: pathdom_core::montecarlo::HistogramSummary,
    bins: Vec<(usize, u64)>,
}

fn sample(cli: &Cli, a: &SampleArgs, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    let normalization = match a.normalization {
        NormalizationArg::None => Normalization::None,
        NormalizationArg::PerVertex => Normalization::PerVertex,
        NormalizationArg::Centered => Normalization::Centered,
    };
    let config = SampleConfig {
        n: a.n,
        samples: a.samples,
        seed: a.seed,
        workers: a.workers.unwrap_or_else(rayon_default_workers),
        normalization,
        work_budget: a.work_budget,
    };
    let hist = sample_gamma(&config)?;
    let summary = hist.summary();

    if cli.format == Format::Json {
        let body = SampleJson {
            summary: summary.clone(),
            bins: hist.bins.iter().map(|(&g, &c)| (g, c)).collect(),
        };
        serde_json::to_writer(&mut *out, &body)?;
        writeln!(out)?;
    } else {
        let mut w = csv_writer(out);
        w.write_record(["gamma", "count"])?;
        for (g, c) in &hist.bins {
            w.write_record([g.to_string(), c.to_string()])?;
        }
        w.flush()?;
    }

    let sidecar: Option<PathBuf> = a.sidecar.clone().or_else(|| {
        cli.output
            .as_ref()
            .filter(|_| cli.format != Format::Json)
            .map(|p| p.with_extension("json"))
    });
    if let Some(path) = sidecar {
        fs::write(&path, serde_json::to_string_pretty(&summary)? + "\n")?;
    }
    if let Some(path) = &a.plot_data {
        let mut text = format!(
            "# n={} samples={} seed={} normalization={:?}\n",
            a.n, a.samples, a.seed, normalization
        );
        for (x, w) in normalize(&hist, normalization) {
            text.push_str(&format!("{x} {w}\n"));
        }
        fs::write(path, text)?;
    }
    if cli.verbose > 0 {
        writeln!(
            err,
            "mean {:.4} (exact {:.4}), variance {:.4}, support [{}, {}]",
            hist.mean,
            pathdom_core::montecarlo::exact_mean(a.n),
            hist.variance,
            hist.min(),
            hist.max()
        )?;
    }
    Ok(())
}

fn rayon_default_workers() -> usize {
    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
}

fn verify_cmd(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let depth = if a.full { Depth::Full } else { Depth::Quick };
    let cap = a.cap.unwrap_or(depth.brute_force_cap());
    let opts = BruteForceOptions {
        cap,
        allow_large: a.cap.is_some(),
        workers: a.workers,
        ..Default::default()
    };
    let report = verify::run_with(depth, opts, a.order.unwrap_or(depth.series_order()));
    match cli.format {
        Format::Json => {
            serde_json::to_writer(&mut *out, &report)?;
            writeln!(out)?;
        }
        Format::Text | Format::Csv => {
            for c in &report.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "{status} {:>2} {}: {}", c.id, c.name, c.compared)?;
                if let Some(d) = &c.divergence {
                    writeln!(out, "        {d}")?;
                }
                if let Some(e) = &c.error {
                    writeln!(out, "        error: {e}")?;
                }
            }
            let passed = report.checks.iter().filter(|c| c.passed).count();
            writeln!(out, "{passed}/{} checks passed", report.checks.len())?;
        }
    }
    match report.first_failure() {
        None => Ok(()),
        Some(c) => Err(CliError::Verification(match (&c.divergence, &c.error) {
            (Some(d), _) => format!("check {} ({}): {d}", c.id, c.name),
            (_, Some(e)) => format!("check {} ({}): {e}", c.id, c.name),
            _ => format!("check {} ({})", c.id, c.name),
        })),
    }
}

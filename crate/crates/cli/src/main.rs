mod args;
mod record;
mod run;

use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::json;
use superfit::fitting::{GenericSetup, Report, SetupSpec};
use superfit::superpoly::SuperPoly;

use args::{parse_values, Bounds, Claim, Cli, Command, Grid, Instance};
use record::{default_log_path, recorded_keys, ExperimentRecord, RecordLog};
use run::{run_claim, verify_argv};

const EXIT_FAIL: u8 = 1;
const EXIT_ERROR: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Ann { instance, json } => cmd_ann(&instance, json),
        Command::Verify { claim, instance, characteristic, bounds, json } => cmd_verify(claim, &instance, characteristic, &bounds, json),
        Command::Sweep { claim, grid, bounds, out } => cmd_sweep(claim, &grid, &bounds, out),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn spec_of(instance: &Instance) -> SetupSpec {
    SetupSpec { d: instance.d, e: instance.e, m: instance.m, n: instance.n, characteristic: instance.characteristic }
}

fn degree_summary(gens: &[SuperPoly]) -> Vec<(u32, usize)> {
    let mut counts = std::collections::BTreeMap::new();
    for g in gens {
        *counts.entry(g.degree().unwrap_or(0)).or_insert(0usize) += 1;
    }
    counts.into_iter().collect()
}

fn cmd_ann(instance: &Instance, as_json: bool) -> Result<u8, String> {
    let spec = spec_of(instance);
    let setup = GenericSetup::from_spec(spec).map_err(|e| e.to_string())?;
    let ann = setup.phi.annihilator().map_err(|e| e.to_string())?;
    let mut gens = ann.minimal_generators().map_err(|e| e.to_string())?;
    gens.sort_by_key(|g| (g.degree(), g.to_string()));
    let degrees = degree_summary(&gens);
    if as_json {
        let out = json!({
            "instance": spec,
            "count": gens.len(),
            "degrees": degrees,
            "generators": gens.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&out).expect("json values serialize"));
    } else {
        println!("Ann(coker Φ) for {spec}");
        let shown: Vec<String> = degrees.iter().map(|(d, c)| format!("{c} in degree {d}")).collect();
        println!("{} minimal generators: {}", gens.len(), if shown.is_empty() { "none".to_string() } else { shown.join(", ") });
        for g in &gens {
            println!("  {g}");
        }
    }
    Ok(0)
}

fn print_report(report: &Report, as_json: bool) {
    if as_json {
        println!("{}", serde_json::to_string_pretty(report).expect("reports serialize"));
        return;
    }
    println!("{} {}: {}", report.claim, report.instance, if report.status.passed() { "pass" } else { "FAIL" });
    if let Some(text) = report.witnesses.get("betti_text").and_then(|v| v.as_str()) {
        println!("{text}");
    }
    if let Some(obj) = report.witnesses.as_object() {
        for (k, v) in obj {
            if k == "betti_text" || k == "betti" || k == "complex_checks" {
                continue;
            }
            println!("  {k}: {v}");
        }
    }
}

fn cmd_verify(claim: Claim, dims: &[usize], characteristic: u64, bounds: &Bounds, as_json: bool) -> Result<u8, String> {
    let spec = if claim == Claim::Cauchy {
        let b = &bounds.dims;
        SetupSpec { d: b[0], e: b[1], m: b[2], n: b[3], characteristic: 0 }
    } else {
        let [d, e, m, n] = dims else { return Err(format!("`verify {}` needs the dimensions d e m n", claim.name())) };
        SetupSpec { d: *d, e: *e, m: *m, n: *n, characteristic }
    };
    let report = run_claim(claim, spec, bounds).map_err(|e| e.to_string())?;
    print_report(&report, as_json);
    Ok(if report.status.passed() || claim.is_conjecture() { 0 } else { EXIT_FAIL })
}

fn grid_instances(grid: &Grid) -> Result<Vec<SetupSpec>, String> {
    let ds = parse_values(&grid.d)?;
    let es = parse_values(&grid.e)?;
    let ms = parse_values(&grid.m)?;
    let ns = parse_values(&grid.n)?;
    let ps = parse_values(&grid.characteristic)?;
    let mut out = Vec::new();
    for &d in &ds {
        for &e in &es {
            for &m in &ms {
                for &n in &ns {
                    for &p in &ps {
                        out.push(SetupSpec { d: d as usize, e: e as usize, m: m as usize, n: n as usize, characteristic: p });
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn cmd_sweep(claim: Claim, grid: &Grid, bounds: &Bounds, out: Option<std::path::PathBuf>) -> Result<u8, String> {
    let path = out.unwrap_or_else(|| default_log_path(claim));
    let instances = if claim == Claim::Cauchy {
        grid_instances(grid)?.into_iter().map(|s| SetupSpec { characteristic: 0, ..s }).collect::<std::collections::BTreeSet<_>>().into_iter().collect()
    } else {
        grid_instances(grid)?
    };
    let done = recorded_keys(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let mut log = RecordLog::open(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (mut passed, mut failed, mut skipped) = (0usize, 0usize, 0usize);
    for spec in instances {
        let argv = verify_argv(claim, spec, bounds);
        if done.contains(&argv.join(" ")) {
            skipped += 1;
            continue;
        }
        let start = Instant::now();
        let report = run_claim(claim, spec, bounds).map_err(|e| format!("{spec}: {e}"))?;
        let ok = report.status.passed();
        println!("{} {}: {}", claim.name(), spec, if ok { "pass" } else { "FAIL" });
        let record = ExperimentRecord::new(argv, claim, report, start.elapsed().as_millis());
        log.append(&record).map_err(|e| format!("{}: {e}", path.display()))?;
        if ok {
            passed += 1;
        } else {
            failed += 1;
        }
    }
    println!("{passed} passed, {failed} failed, {skipped} already recorded -> {}", path.display());
    Ok(if failed == 0 || claim.is_conjecture() { 0 } else { EXIT_FAIL })
}

//! `g2st`: command-line frontend for the genus-2 Sato-Tate toolkit.
//!
//! Exit codes: 0 success, 2 parse/usage errors, 3 numerical contract
//! breaches (Weil-bound violations, failed verification, no matching
//! group).

use clap::{Args, Parser, Subcommand, ValueEnum};
use genus2st::catalog::{self, Coeff, GroupId};
use genus2st::counting::{parse_curve, poly_to_string};
use genus2st::jacobian::{trace_datum, Backend, JacConfig};
use genus2st::sampler;
use genus2st::stats::{self, NumberFieldSpec};
use genus2st::survey::{self, IdentifyOptions, IdentifyVerdict, SearchConfig};
use std::fs::File;
use std::io::{BufWriter, Write};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "g2st", version, about = "Sato-Tate groups of genus-2 curves: catalog, sampling, counting, identification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffArg {
    A1,
    A2,
}

impl From<CoeffArg> for Coeff {
    fn from(c: CoeffArg) -> Coeff {
        match c {
            CoeffArg::A1 => Coeff::A1,
            CoeffArg::A2 => Coeff::A2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Naive,
    Jac,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Naive => Backend::Naive,
            BackendArg::Jac => Backend::Jacobian,
        }
    }
}

#[derive(Args)]
struct ThreadsArg {
    /// worker threads (default: available parallelism)
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Print all 55 catalog records
    Catalog {
        #[arg(long)]
        json: bool,
        /// moments per record in JSON output
        #[arg(long, default_value_t = 8)]
        nmax: u32,
    },
    /// Integer moment list E[a_i^n] for n = 1..max
    Moments {
        group: String,
        #[arg(long, value_enum)]
        coeff: CoeffArg,
        #[arg(long, short)]
        n: u32,
    },
    /// Sampled density (CSV) plus the atom list
    Density {
        group: String,
        #[arg(long, value_enum)]
        coeff: CoeffArg,
        #[arg(long, default_value_t = 400)]
        grid: usize,
        #[arg(long)]
        out: String,
    },
    /// Raw Haar-random (a1, a2) draws (CSV)
    Sample {
        group: String,
        #[arg(long)]
        count: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: String,
    },
    /// Exact and normalized L-polynomial coefficients at one prime
    Lpoly {
        curve: String,
        #[arg(long, short)]
        prime: u64,
        #[arg(long, value_enum, default_value = "naive")]
        backend: BackendArg,
    },
    /// Moment statistics over degree-1 primes up to a bound
    Stats {
        curve: String,
        #[arg(long, default_value = "x")]
        field: String,
        #[arg(long)]
        bound: u64,
        #[arg(long, default_value_t = 8)]
        nmax: u32,
        #[arg(long, value_enum, default_value = "jac")]
        backend: BackendArg,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        threads: ThreadsArg,
    },
    /// Histogram of a1 or a2 values (CSV)
    Hist {
        curve: String,
        #[arg(long, default_value = "x")]
        field: String,
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum)]
        coeff: CoeffArg,
        #[arg(long, default_value_t = 100)]
        bins: usize,
        #[arg(long)]
        out: String,
        #[arg(long, value_enum, default_value = "jac")]
        backend: BackendArg,
        #[command(flatten)]
        threads: ThreadsArg,
    },
    /// Identify the Sato-Tate group by stabilized signatures
    Identify {
        curve: String,
        #[arg(long, default_value = "x")]
        field: String,
        #[arg(long, default_value_t = 2741)]
        b3: u64,
        #[arg(long, default_value_t = 65536)]
        max_b: u64,
        #[command(flatten)]
        threads: ThreadsArg,
    },
    /// Three-stage zero-trace search over small-coefficient curves
    Search {
        #[arg(long, default_value_t = 4)]
        range: i64,
        #[arg(long, default_value_t = 83)]
        b1: u64,
        #[arg(long, default_value_t = 1229)]
        b2: u64,
        #[arg(long, default_value_t = 2741)]
        b3: u64,
        /// survivors as JSON lines
        #[arg(long)]
        out: String,
        #[command(flatten)]
        threads: ThreadsArg,
    },
    /// Monte-Carlo verification of the catalog (moments and atoms)
    VerifyCatalog {
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        threads: ThreadsArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                genus2st::Error::Parse(_) | genus2st::Error::UnknownGroup(_) => ExitCode::from(2),
                _ => ExitCode::from(3),
            }
        }
    }
}

fn group_arg(s: &str) -> genus2st::Result<GroupId> {
    s.parse()
}

fn writer(path: &str) -> genus2st::Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| genus2st::Error::Parse(format!("cannot create {path}: {e}")))
}

fn run(cli: Cli) -> genus2st::Result<ExitCode> {
    match cli.command {
        Command::Catalog { json, nmax } => {
            if json {
                let records: Vec<_> = GroupId::all()
                    .into_iter()
                    .map(|g| catalog::group_json(g, nmax, nmax.min(10)))
                    .collect();
                println!("{}", serde_json::to_string_pretty(&records).unwrap());
            } else {
                println!(
                    "{:<12} {:>2} {:>2}  {:<9} {:<8} {:>2}  {:<12} {}",
                    "group", "d", "c", "G/G0", "End(A)_R", "z1", "z2", "flags"
                );
                for g in GroupId::all() {
                    let r = g.record();
                    let z2 = catalog::z2(g);
                    let flags = format!(
                        "{}{}{}",
                        if r.realizable { "R" } else { "-" },
                        if r.realizable_real_place { "r" } else { "-" },
                        if r.realizable_over_q { "Q" } else { "-" }
                    );
                    println!(
                        "{:<12} {:>2} {:>2}  {:<9} {:<8} {:>2}  {:<12} {}",
                        g.label(),
                        r.d,
                        r.c,
                        r.component_group,
                        r.end_r.unwrap_or("*"),
                        catalog::z1(g),
                        format!("{:?}", z2),
                        flags
                    );
                }
            }
        }
        Command::Moments { group, coeff, n } => {
            let g = group_arg(&group)?;
            let vals: Vec<String> = (1..=n)
                .map(|k| match coeff {
                    CoeffArg::A1 => catalog::moment_a1(g, k).to_string(),
                    CoeffArg::A2 => catalog::moment_a2(g, k).to_string(),
                })
                .collect();
            println!("{}", vals.join(" "));
        }
        Command::Density { group, coeff, grid, out } => {
            let g = group_arg(&group)?;
            let coeff: Coeff = coeff.into();
            let (lo, hi) = catalog::support(coeff);
            let mut w = writer(&out)?;
            writeln!(w, "t,density").unwrap();
            let mut atoms = Vec::new();
            for i in 0..grid {
                let t = lo + (hi - lo) * (i as f64 + 0.5) / grid as f64;
                let (d, a) = catalog::density(g, coeff, t);
                atoms = a;
                writeln!(w, "{t},{d}").unwrap();
            }
            for (loc, mass) in atoms {
                println!("atom at {loc}: mass {mass}");
            }
        }
        Command::Sample { group, count, seed, out } => {
            let g = group_arg(&group)?;
            let mut rng = sampler::rng_for(seed, 0);
            let mut w = writer(&out)?;
            writeln!(w, "a1,a2").unwrap();
            for _ in 0..count {
                let (a1, a2) = sampler::sample_group(g, &mut rng);
                writeln!(w, "{a1},{a2}").unwrap();
            }
        }
        Command::Lpoly { curve, prime, backend } => {
            let c = parse_curve(&curve)?;
            let td = trace_datum(&c, prime, backend.into(), &JacConfig::default())?;
            println!("{} {} {:.6} {:.6}", td.c1, td.c2, td.a1(), td.a2());
        }
        Command::Stats { curve, field, bound, nmax, backend, json, threads } => {
            let c = parse_curve(&curve)?;
            let k = NumberFieldSpec::parse(&field)?;
            let s = genus2st::parallel::with_threads(threads.threads, || {
                stats::accumulate(&c, &k, bound, nmax, backend.into(), &JacConfig::default())
            })?;
            if json {
                println!("{}", serde_json::to_string_pretty(&stats::stats_json(&s)).unwrap());
            } else {
                println!("curve y^2 = {} over Q[x]/({})", poly_to_string(&c.coeffs()[..=c.degree()]), s.field_poly);
                println!("primes <= {}: total weight {}", s.bound, s.total_weight());
                let m1: Vec<String> = (1..=nmax).map(|n| format!("{:.4}", s.moment_a1(n))).collect();
                let m2: Vec<String> =
                    (1..=nmax.min(10)).map(|n| format!("{:.4}", s.moment_a2(n))).collect();
                println!("a1 moments: {}", m1.join(" "));
                println!("a2 moments: {}", m2.join(" "));
                println!("atoms: Pr[a1=0] = {:.4}, Pr[a2=j] = {:?}", s.atom_a1_zero(),
                    s.atom_a2().map(|v| (v * 1e4).round() / 1e4));
                println!(
                    "skipped: {} ramified, {} bad reduction, {} weight-zero",
                    s.skipped.ramified.len(),
                    s.skipped.bad_reduction.len(),
                    s.skipped.weight_zero
                );
            }
        }
        Command::Hist { curve, field, bound, coeff, bins, out, backend, threads } => {
            let c = parse_curve(&curve)?;
            let k = NumberFieldSpec::parse(&field)?;
            let s = genus2st::parallel::with_threads(threads.threads, || {
                stats::accumulate(&c, &k, bound, 2, backend.into(), &JacConfig::default())
            })?;
            let h = s.histogram(coeff.into(), bins);
            let mut w = writer(&out)?;
            writeln!(w, "bin_center,frequency").unwrap();
            for (center, freq) in h {
                writeln!(w, "{center},{freq}").unwrap();
            }
            let atoms = match coeff {
                CoeffArg::A1 => vec![(0.0, s.atom_a1_zero())],
                CoeffArg::A2 => (-2..=2)
                    .map(|j| (j as f64, s.atom_a2()[(j + 2) as usize]))
                    .collect(),
            };
            for (loc, mass) in atoms {
                if mass > 0.0 {
                    println!("atom at {loc}: mass {mass:.5}");
                }
            }
        }
        Command::Identify { curve, field, b3, max_b, threads } => {
            let c = parse_curve(&curve)?;
            let k = NumberFieldSpec::parse(&field)?;
            let opts = IdentifyOptions { b3, max_b, ..Default::default() };
            let outcome = genus2st::parallel::with_threads(threads.threads, || {
                survey::identify(&c, &k, &opts)
            })?;
            for (b, sig) in &outcome.trace {
                println!("B = {b}: sigma = {sig}");
            }
            match outcome.verdict {
                IdentifyVerdict::Identified { group, stable_b, distance } => {
                    if distance == 0 {
                        println!("identified: {group} (stable at B = {stable_b}, exact signature)");
                    } else {
                        println!(
                            "identified: {group} (stable at B = {stable_b}, signature distance {distance})"
                        );
                    }
                }
                IdentifyVerdict::NoMatch { signature, nearest } => {
                    println!("no matching group for stable signature {signature}");
                    println!("nearest: {} (L-inf {}), then {} (L-inf {})",
                        nearest[0].0, nearest[0].1, nearest[1].0, nearest[1].1);
                    return Ok(ExitCode::from(3));
                }
                IdentifyVerdict::Unstable { last, nearest } => {
                    println!("unstable after reaching the bound budget; last signature {last}");
                    println!("nearest: {} (L-inf {}), then {} (L-inf {})",
                        nearest[0].0, nearest[0].1, nearest[1].0, nearest[1].1);
                    return Ok(ExitCode::from(3));
                }
            }
        }
        Command::Search { range, b1, b2, b3, out, threads } => {
            let cfg = SearchConfig { range, b1, b2, b3, ..Default::default() };
            let report = genus2st::parallel::with_threads(threads.threads, || survey::search(&cfg));
            eprintln!(
                "scanned {} curves ({} nonsingular); step 1 kept {}, step 2 kept {}",
                report.curves_scanned, report.nonsingular, report.pass_step1, report.pass_step2
            );
            let mut w = writer(&out)?;
            for hit in &report.hits {
                writeln!(w, "{}", serde_json::to_string(hit).unwrap()).unwrap();
            }
        }
        Command::VerifyCatalog { samples, seed, threads } => {
            let failures = genus2st::parallel::with_threads(threads.threads, || {
                verify_catalog(samples, seed)
            });
            if failures > 0 {
                eprintln!("{failures} group(s) breached the 5-sigma band");
                return Ok(ExitCode::from(3));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Per-group sampler-vs-formula report; returns the number of failures.
fn verify_catalog(samples: u64, seed: u64) -> u32 {
    let results = genus2st::parallel::par_map(GroupId::all().to_vec(), move |g| {
        let mut rng = sampler::rng_for(seed, 1 + g.index() as u64);
        let report = check_group(g, samples, &mut rng);
        (g, report)
    });
    let mut failures = 0;
    for (g, worst) in results {
        let ok = worst <= 5.0;
        println!(
            "{:<12} worst deviation {:>6.2} sigma  {}",
            g.label(),
            worst,
            if ok { "ok" } else { "FAIL" }
        );
        if !ok {
            failures += 1;
        }
    }
    failures
}

/// Worst standardized deviation over the checked moments and atoms.
fn check_group(g: GroupId, n: u64, rng: &mut sampler::SampleRng) -> f64 {
    let mut a1_pows = [0.0f64; 4]; // a1^2, a1^4, a1^6, a1^8
    let mut a2_pows = [0.0f64; 5];
    let mut z1_hits = 0u64;
    let mut z2_hits = [0u64; 5];
    for _ in 0..n {
        let (a1, a2) = sampler::sample_group(g, rng);
        if a1 == 0.0 {
            z1_hits += 1;
        }
        if a2.fract() == 0.0 && (-2.0..=2.0).contains(&a2) {
            z2_hits[(a2 as i64 + 2) as usize] += 1;
        }
        let s = a1 * a1;
        let mut p = 1.0;
        for v in a1_pows.iter_mut() {
            p *= s;
            *v += p;
        }
        let mut q = 1.0;
        for v in a2_pows.iter_mut() {
            q *= a2;
            *v += q;
        }
    }
    let nf = n as f64;
    let mut worst: f64 = 0.0;
    for (i, &sum) in a1_pows.iter().enumerate() {
        let k = 2 * (i as u32 + 1);
        let mean = sum / nf;
        let exact = catalog::moment_a1(g, k) as f64;
        let var = (catalog::moment_a1(g, 2 * k) as f64 - exact * exact).max(1e-12);
        worst = worst.max((mean - exact).abs() / (var / nf).sqrt());
    }
    for (i, &sum) in a2_pows.iter().enumerate() {
        let k = i as u32 + 1;
        let mean = sum / nf;
        let exact = catalog::moment_a2(g, k) as f64;
        let var = (catalog::moment_a2(g, 2 * k) as f64 - exact * exact).max(1e-12);
        worst = worst.max((mean - exact).abs() / (var / nf).sqrt());
    }
    let rec = g.record();
    let checks: Vec<(u64, f64)> = std::iter::once((z1_hits, catalog::z1(g) as f64 / rec.c as f64))
        .chain(
            z2_hits
                .iter()
                .zip(catalog::z2(g).iter())
                .map(|(&h, &z)| (h, z as f64 / rec.c as f64)),
        )
        .collect();
    for (hits, p) in checks {
        if p == 0.0 {
            // impossible events must not occur
            if hits > 0 {
                worst = worst.max(1e9);
            }
            continue;
        }
        let se = (p * (1.0 - p) / nf).sqrt().max(1e-12);
        worst = worst.max((hits as f64 / nf - p).abs() / se);
    }
    worst
}

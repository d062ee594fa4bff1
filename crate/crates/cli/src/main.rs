//! Command-line front door: grading classification, mutation, frieze
//! reports and homogenisation, with machine-readable output and a result
//! cache for the heavy enumerations.
//!
//! Exit codes: 0 success (closed-form mismatches are reported, not fatal),
//! 2 input error, 3 resource limit exceeded, 4 internal invariant violation.

mod result_json;
mod seed_json;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clustergrade::cluster::{mutate_seed, DegVec, ExchangePattern, GradedSeed, GradingMatrix};
use clustergrade::error::Error;
use clustergrade::explore::{enumerate, EnumerationResult, Limits};
use clustergrade::frieze::{
    check_descent, check_sigma_sign_flip, fan_slice, knit_strip, label_diagonals, render_strip,
    render_strip_svg, DescentVerdict, ModelPoint, StripVertex,
};
use clustergrade::homog::{
    fixtures, homogenise, principal_homogenise, quotient_recovers, HomogenisationMethod,
    HomogenisedSeed,
};
use clustergrade::report::{classify_report, render_text};
use clustergrade::roots::{bipartite_pattern, bipartite_seed, DynkinType, Family};
use clustergrade::zlinalg::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser)]
#[command(
    name = "clustergrade",
    version,
    about = "Multi-graded cluster algebra workbench"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Exploration limits, e.g. `seeds=1000000,vars=10000`.
    #[arg(long, global = true)]
    limits: Option<String>,

    /// Worker threads for enumeration (default: one per CPU).
    #[arg(long, global = true)]
    workers: Option<usize>,

    /// Directory for cached enumeration results.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Seed for randomized fixture generation.
    #[arg(long, global = true)]
    rng_seed: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the gradings of a seed: kernel dimension, standard grading,
    /// and (with --enumerate) the degree distribution checked against the
    /// closed forms.
    Classify {
        /// Dynkin type such as A5, B3, D4, E7.
        type_name: Option<String>,
        /// Read the seed from a JSON file instead.
        #[arg(long, conflicts_with = "type_name")]
        seed_file: Option<PathBuf>,
        /// Enumerate the exchange graph.
        #[arg(long)]
        enumerate: bool,
        /// Grading source for a type: `standard`, `zero`, or a JSON file of
        /// G rows.
        #[arg(long, default_value = "standard")]
        grading: String,
    },
    /// Apply a mutation sequence and emit the resulting seed as JSON.
    Mutate {
        /// Dynkin type for the bipartite initial seed.
        type_name: Option<String>,
        #[arg(long, conflicts_with = "type_name")]
        seed_file: Option<PathBuf>,
        /// Comma-separated 1-based mutable indices, e.g. `1,2,1`.
        #[arg(long)]
        sequence: String,
    },
    /// Frieze report for type A: labelled strip, sign-flip check, descent
    /// verdict.
    Frieze {
        /// Type A rank, e.g. A5.
        type_name: String,
        /// Knit from this slice (comma-separated integers) instead of the
        /// standard grading.
        #[arg(long)]
        slice: Option<String>,
        /// Also write an SVG rendering here.
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Homogenise: extend a seed by frozen coefficients so the given degree
    /// matrix becomes a grading; emits the new seed as JSON.
    Homogenise {
        /// Dynkin type for the bipartite pattern.
        type_name: Option<String>,
        #[arg(long, conflicts_with = "type_name")]
        seed_file: Option<PathBuf>,
        /// JSON file with the degree rows (an array of integer arrays).
        #[arg(long)]
        grading_file: Option<PathBuf>,
        /// Construction: `lemma` (one coefficient per degree coordinate) or
        /// `principal` (one per mutable variable).
        #[arg(long, default_value = "lemma")]
        method: String,
        /// Sign of the principal identity block: `+` or `-`.
        #[arg(long, default_value = "+")]
        sign: String,
        /// Check that specializing the new coefficients to 1 recovers the
        /// original algebra.
        #[arg(long)]
        verify: bool,
        /// Generate a random fixture `r,d` (with --rng-seed) instead of
        /// reading inputs.
        #[arg(long, conflicts_with_all = ["type_name", "seed_file", "grading_file"])]
        random: Option<String>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::LimitExceeded { .. } => 3,
        Error::Internal(_)
        | Error::InexactDivision
        | Error::Inhomogeneous { .. }
        | Error::ZeroPolynomial => 4,
        _ => 2,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(&e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(workers) = cli.workers {
        if workers == 0 {
            return fail(Error::Parse("--workers must be positive".into()));
        }
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global();
    }
    let limits = match parse_limits(cli.limits.as_deref()) {
        Ok(l) => l,
        Err(e) => return fail(e),
    };
    let result = match &cli.command {
        Command::Classify {
            type_name,
            seed_file,
            enumerate,
            grading,
        } => cmd_classify(
            &cli,
            type_name.as_deref(),
            seed_file.as_deref(),
            *enumerate,
            grading,
            &limits,
        ),
        Command::Mutate {
            type_name,
            seed_file,
            sequence,
        } => cmd_mutate(type_name.as_deref(), seed_file.as_deref(), sequence),
        Command::Frieze {
            type_name,
            slice,
            svg,
        } => cmd_frieze(&cli, type_name, slice.as_deref(), svg.as_deref()),
        Command::Homogenise {
            type_name,
            seed_file,
            grading_file,
            method,
            sign,
            verify,
            random,
        } => cmd_homogenise(
            &cli,
            type_name.as_deref(),
            seed_file.as_deref(),
            grading_file.as_deref(),
            method,
            sign,
            *verify,
            random.as_deref(),
            &limits,
        ),
    };
    match result {
        Ok(code) => code,
        Err(e) => fail(e),
    }
}

fn parse_limits(spec: Option<&str>) -> Result<Limits, Error> {
    let mut limits = Limits::default();
    let Some(spec) = spec else {
        return Ok(limits);
    };
    for part in spec.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("limit {part:?} is not key=value")))?;
        let value: usize = value
            .parse()
            .map_err(|_| Error::Parse(format!("bad limit value {value:?}")))?;
        if value == 0 {
            return Err(Error::Parse("limits must be positive".into()));
        }
        match key {
            "seeds" => limits.max_seeds = value,
            "vars" | "variables" => limits.max_variables = value,
            _ => return Err(Error::Parse(format!("unknown limit {key:?}"))),
        }
    }
    Ok(limits)
}

fn parse_type(name: &str) -> Result<DynkinType, Error> {
    name.parse()
}

fn read_seed_file(path: &Path) -> Result<(GradedSeed, Vec<String>), Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let file = seed_json::from_str(&text)?;
    let seed = seed_json::parse(&file)?;
    Ok((seed, file.variables))
}

fn read_degree_rows(path: &Path) -> Result<IntMatrix, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let rows: Vec<Vec<i64>> = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("degree matrix JSON: {e}")))?;
    if rows.is_empty() {
        return Err(Error::Parse("degree matrix has no rows".into()));
    }
    Ok(IntMatrix::from_rows(&rows))
}

fn cached_enumerate(
    seed: &GradedSeed,
    limits: &Limits,
    cache: Option<&Path>,
) -> Result<EnumerationResult, Error> {
    let Some(dir) = cache else {
        return enumerate(seed, limits);
    };
    let key = result_json::cache_key(seed, limits);
    if let Some(hit) = result_json::load(dir, &key) {
        return Ok(hit);
    }
    let result = enumerate(seed, limits)?;
    result_json::store(dir, &key, &result)?;
    Ok(result)
}

fn print(s: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(s.as_bytes());
}

fn cmd_classify(
    cli: &Cli,
    type_name: Option<&str>,
    seed_file: Option<&Path>,
    run_enumeration: bool,
    grading: &str,
    limits: &Limits,
) -> Result<ExitCode, Error> {
    let (seed, type_for_claims, label) = match (type_name, seed_file) {
        (Some(name), None) => {
            let t = parse_type(name)?;
            match grading {
                "standard" => (bipartite_seed(t), Some(t), t.to_string()),
                "zero" => {
                    let pattern = bipartite_pattern(t);
                    let n = pattern.num_vars();
                    let seed = GradedSeed::initial(pattern, GradingMatrix::zero(n))?;
                    (seed, None, format!("{t} (zero grading)"))
                }
                path => {
                    let pattern = bipartite_pattern(t);
                    let g = read_degree_rows(Path::new(path))?;
                    let grading = GradingMatrix::new(&pattern, g)?;
                    let seed = GradedSeed::initial(pattern, grading)?;
                    (seed, Some(t), format!("{t} (grading from {path})"))
                }
            }
        }
        (None, Some(path)) => {
            if grading != "standard" {
                return Err(Error::Parse(
                    "--grading applies to type-based runs; seed files carry their grading".into(),
                ));
            }
            let (seed, _) = read_seed_file(path)?;
            (seed, None, path.display().to_string())
        }
        _ => {
            return Err(Error::Parse(
                "exactly one seed source: a type name or --seed-file".into(),
            ))
        }
    };

    let result = if run_enumeration {
        Some(cached_enumerate(&seed, limits, cli.cache.as_deref())?)
    } else {
        None
    };
    let compare = type_for_claims.is_some() && grading == "standard";
    let report = classify_report(
        Some(label),
        &seed,
        type_for_claims,
        compare,
        result.as_ref(),
    )?;

    match cli.format {
        Format::Text => print(&render_text(&report)),
        Format::Json => print(&format!(
            "{}\n",
            serde_json::to_string_pretty(&report).expect("reports serialize")
        )),
        Format::Csv => {
            let Some(e) = &report.enumeration else {
                return Err(Error::Parse("csv output needs --enumerate".into()));
            };
            let mut csv = String::from("degree,count\n");
            for (d, c) in &e.distribution {
                csv.push_str(&format!("\"{d}\",{c}\n"));
            }
            print(&csv);
        }
    }
    if report.is_consistent() {
        Ok(ExitCode::SUCCESS)
    } else {
        Ok(ExitCode::from(4))
    }
}

fn cmd_mutate(
    type_name: Option<&str>,
    seed_file: Option<&Path>,
    sequence: &str,
) -> Result<ExitCode, Error> {
    let (mut seed, names) = match (type_name, seed_file) {
        (Some(name), None) => {
            let seed = bipartite_seed(parse_type(name)?);
            let names = seed_json::default_names(seed.num_vars());
            (seed, names)
        }
        (None, Some(path)) => read_seed_file(path)?,
        _ => {
            return Err(Error::Parse(
                "exactly one seed source: a type name or --seed-file".into(),
            ))
        }
    };
    for part in sequence.split(',') {
        let k: usize = part
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad mutation index {part:?}")))?;
        if k == 0 || k > seed.num_vars() {
            return Err(Error::NotMutable(k));
        }
        seed = mutate_seed(&seed, k - 1)?;
    }
    let file = seed_json::emit(&seed, &names)?;
    print(&seed_json::to_string_pretty(&file));
    Ok(ExitCode::SUCCESS)
}

fn parse_slice(spec: &str) -> Result<Vec<DegVec>, Error> {
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map(|v| vec![v.into()])
                .map_err(|_| Error::Parse(format!("bad slice value {s:?}")))
        })
        .collect()
}

fn deg_display(d: &DegVec) -> String {
    let inner: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("[{}]", inner.join(","))
}

fn cmd_frieze(
    cli: &Cli,
    type_name: &str,
    slice: Option<&str>,
    svg: Option<&Path>,
) -> Result<ExitCode, Error> {
    let t = parse_type(type_name)?;
    if t.family != Family::A {
        return Err(Error::UnsupportedType(format!(
            "{t}: frieze reports cover type A"
        )));
    }
    let n = t.rank;
    let n_gon = n + 3;
    let window = 0..(6 * n_gon as i64);
    let display_window = 0..(2 * n_gon as i64);

    let mut lines = Vec::new();
    lines.push(format!("type: {t}"));

    let (slice_values, polygon_report) = match slice {
        Some(spec) => {
            let values = parse_slice(spec)?;
            if values.len() != n {
                return Err(Error::Parse(format!(
                    "slice has {} values, type {t} needs {n}",
                    values.len()
                )));
            }
            (values, None)
        }
        None => {
            let seed = bipartite_seed(t);
            let labels = label_diagonals(t, &seed)?;
            let report = check_sigma_sign_flip(&labels, n_gon);
            (fan_slice(t, &labels)?, Some(report))
        }
    };
    lines.push(format!(
        "slice: {}",
        slice_values
            .iter()
            .map(|d| deg_display(d))
            .collect::<Vec<_>>()
            .join(" ")
    ));

    let strip = knit_strip(t, &slice_values, window.clone())?;

    // Sign flip on the strip: suspension translates carry negated values.
    let mut strip_sign = clustergrade::explore::CheckReport::default();
    for (point, v) in strip.iter() {
        let ModelPoint::Strip(sv) = point else {
            continue;
        };
        let sigma = StripVertex {
            p: sv.p + sv.q as i64,
            q: n + 1 - sv.q,
        };
        if let Some(other) = strip.strip(sigma.p, sigma.q) {
            strip_sign.checked += 1;
            let neg: DegVec = v.iter().map(|x| -x).collect();
            if other != &neg {
                strip_sign.failures.push(format!(
                    "value at ({}, {}) is not the negative of ({}, {})",
                    sigma.p, sigma.q, sv.p, sv.q
                ));
            }
        }
    }

    let descent = check_descent(t, &strip)?;

    let rendering = render_strip(t, &strip, display_window.clone());
    match cli.format {
        Format::Text => {
            lines.push(String::new());
            lines.push(rendering.trim_end().to_string());
            lines.push(String::new());
            if let Some(report) = &polygon_report {
                lines.push(format!(
                    "sign-flip (polygon): {} ({} diagonals)",
                    if report.is_ok() { "PASS" } else { "FAIL" },
                    report.checked
                ));
                for f in &report.failures {
                    lines.push(format!("  {f}"));
                }
            }
            lines.push(format!(
                "sign-flip (strip): {} ({} pairs)",
                if strip_sign.is_ok() { "PASS" } else { "FAIL" },
                strip_sign.checked
            ));
            for f in &strip_sign.failures {
                lines.push(format!("  {f}"));
            }
            match descent.verdict {
                DescentVerdict::Consistent => lines.push(format!(
                    "descent: CONSISTENT ({} identified pairs)",
                    descent.pairs_checked
                )),
                DescentVerdict::Inconsistent => {
                    let (a, b, va, vb) = descent.witness.clone().expect("witness");
                    lines.push(format!(
                        "descent: INCONSISTENT — identified vertices ({},{}) and ({},{}) carry {} and {}",
                        a.p, a.q, b.p, b.q,
                        deg_display(&va),
                        deg_display(&vb)
                    ));
                }
            }
            print(&(lines.join("\n") + "\n"));
        }
        Format::Json => {
            let strip_json: Vec<serde_json::Value> = strip
                .iter()
                .filter_map(|(point, v)| {
                    let ModelPoint::Strip(sv) = point else {
                        return None;
                    };
                    if sv.p < display_window.start || sv.p >= display_window.end {
                        return None;
                    }
                    Some(serde_json::json!({
                        "p": sv.p,
                        "q": sv.q,
                        "degree": v.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
                    }))
                })
                .collect();
            let doc = serde_json::json!({
                "type": t.to_string(),
                "slice": slice_values.iter().map(|d| deg_display(d)).collect::<Vec<_>>(),
                "sign_flip_polygon": polygon_report.as_ref().map(|r| r.is_ok()),
                "sign_flip_strip": strip_sign.is_ok(),
                "descent": match descent.verdict {
                    DescentVerdict::Consistent => "CONSISTENT",
                    DescentVerdict::Inconsistent => "INCONSISTENT",
                },
                "strip": strip_json,
            });
            print(&format!(
                "{}\n",
                serde_json::to_string_pretty(&doc).expect("frieze reports serialize")
            ));
        }
        Format::Csv => {
            return Err(Error::Parse("frieze has no csv form".into()));
        }
    }
    if let Some(path) = svg {
        std::fs::write(path, render_strip_svg(t, &strip, display_window))
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display())))?;
    }
    let internal_ok = polygon_report.as_ref().map_or(true, |r| r.is_ok()) && strip_sign.is_ok();
    Ok(if internal_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(4)
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_homogenise(
    cli: &Cli,
    type_name: Option<&str>,
    seed_file: Option<&Path>,
    grading_file: Option<&Path>,
    method: &str,
    sign: &str,
    verify: bool,
    random: Option<&str>,
    limits: &Limits,
) -> Result<ExitCode, Error> {
    let method = match method {
        "lemma" => HomogenisationMethod::Lemma,
        "principal" => HomogenisationMethod::Principal,
        other => return Err(Error::Parse(format!("unknown method {other:?}"))),
    };
    let sign: i8 = match sign {
        "+" | "+1" => 1,
        "-" | "-1" => -1,
        other => return Err(Error::Parse(format!("sign must be + or -, got {other:?}"))),
    };

    let (pattern, g, base_names): (ExchangePattern, IntMatrix, Vec<String>) = match random {
        Some(spec) => {
            let (r, d) = spec
                .split_once(',')
                .ok_or_else(|| Error::Parse("--random wants r,d".into()))?;
            let r: usize = r
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad rank {r:?}")))?;
            let d: usize = d
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad dimension {d:?}")))?;
            if r == 0 || r > 8 {
                return Err(Error::Parse("random rank must be in 1..=8".into()));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(cli.rng_seed.unwrap_or(0));
            let pattern = fixtures::random_pattern(&mut rng, r);
            let g = fixtures::random_degree_matrix(&mut rng, r, d);
            (pattern, g, seed_json::default_names(r))
        }
        None => {
            let (pattern, names) = match (type_name, seed_file) {
                (Some(name), None) => {
                    let p = bipartite_pattern(parse_type(name)?);
                    let names = seed_json::default_names(p.num_vars());
                    (p, names)
                }
                (None, Some(path)) => {
                    let (seed, names) = read_seed_file(path)?;
                    (seed.pattern().clone(), names)
                }
                _ => {
                    return Err(Error::Parse(
                        "exactly one seed source: a type name, --seed-file, or --random".into(),
                    ))
                }
            };
            let g = match grading_file {
                Some(path) => read_degree_rows(path)?,
                None => {
                    return Err(Error::Parse(
                        "--grading-file is required (rows of the degree matrix)".into(),
                    ))
                }
            };
            (pattern, g, names)
        }
    };

    let hom: HomogenisedSeed = match method {
        HomogenisationMethod::Lemma => homogenise(&pattern, &g)?,
        HomogenisationMethod::Principal => principal_homogenise(&pattern, &g, sign)?,
    };

    let mut names = base_names;
    let prefix = match method {
        HomogenisationMethod::Lemma => "h",
        HomogenisationMethod::Principal => "p",
    };
    for (i, _) in hom.added_indices.iter().enumerate() {
        names.push(format!("{prefix}{}", i + 1));
    }
    let file = seed_json::emit(&hom.seed, &names)?;
    print(&seed_json::to_string_pretty(&file));

    if verify {
        let original = GradedSeed::initial_standard(pattern);
        let report = quotient_recovers(&original, &hom, limits)?;
        if report.is_ok() {
            eprintln!(
                "quotient check: PASS ({} variables)",
                report.original_variables
            );
        } else {
            eprintln!("quotient check: FAIL");
            for m in &report.mismatches {
                eprintln!("  {m}");
            }
            return Ok(ExitCode::from(4));
        }
    }
    Ok(ExitCode::SUCCESS)
}

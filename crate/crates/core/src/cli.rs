//! The `foldecode` command line.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::carlitz::{self, CarlitzError};
use crate::chebotarev::{self, ChebotarevError};
use crate::codec::{corrupt_with, random_positions, FoldedCode};
use crate::config::{self, CodeParams, ConfigError, DecodeConfig, ListOutput};
use crate::decoder::{radius, DecodeError, Decoder, DecoderParams};
use crate::gf::Gf;
use crate::poly::Poly;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Precondition(String),
    #[error("internal tripwire: {0}")]
    Tripwire(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Tripwire(_) => 3,
            _ => 2,
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<DecodeError> for CliError {
    fn from(e: DecodeError) -> Self {
        if e.is_tripwire() {
            CliError::Tripwire(e.to_string())
        } else {
            CliError::Precondition(e.to_string())
        }
    }
}

impl From<CarlitzError> for CliError {
    fn from(e: CarlitzError) -> Self {
        if e.is_tripwire() {
            CliError::Tripwire(e.to_string())
        } else {
            CliError::Precondition(e.to_string())
        }
    }
}

impl From<ChebotarevError> for CliError {
    fn from(e: ChebotarevError) -> Self {
        match e {
            ChebotarevError::NonIntegerGenus => CliError::Tripwire(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

fn pre(e: impl std::fmt::Display) -> CliError {
    CliError::Precondition(e.to_string())
}

#[derive(Parser, Debug)]
#[command(
    name = "foldecode",
    version,
    about = "Folded AG codes, list decoding and Carlitz-module experiments"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct Output {
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Encode a message (hex symbols) into a folded codeword.
    Encode {
        #[arg(long)]
        params: PathBuf,
        /// Message file; a random message from --seed when omitted.
        #[arg(long)]
        message: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Add random nonzero offsets to randomly chosen columns.
    Corrupt {
        #[arg(long)]
        params: PathBuf,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        errors: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// List decode a received word.
    Decode {
        #[arg(long)]
        params: PathBuf,
        /// Inline JSON or a path to a JSON file, e.g. '{"s":2}'.
        #[arg(long)]
        dparams: String,
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Monte Carlo sweep over (m, s) grid points, written as CSV.
    Bench {
        #[arg(long)]
        params: PathBuf,
        /// Comma separated m:s pairs; defaults to the params m with s = min(2, m).
        #[arg(long)]
        grid: Option<String>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        /// Column errors per trial; defaults to the error budget of each point.
        #[arg(long)]
        errors: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write NA for decode times so runs are byte-identical.
        #[arg(long)]
        no_timing: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Carlitz torsion and class-field calculators.
    Classfield {
        #[command(subcommand)]
        command: ClassfieldCommand,
    },
    /// Frobenius class histograms against the Chebotarev bound.
    Chebotarev {
        #[arg(long)]
        q: u64,
        #[arg(long = "Q")]
        modulus: String,
        /// A degree or an inclusive range such as 4..8.
        #[arg(long, default_value = "4..8")]
        h: String,
        /// Order of the quotient of (A/Q)*; the full group when omitted.
        #[arg(long)]
        e: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[command(flatten)]
        output: Output,
    },
    /// Field axioms, a decode round trip and torsion facts at tiny scale.
    Selftest,
}

#[derive(Subcommand, Debug)]
pub enum ClassfieldCommand {
    /// Torsion report for φ_Q over GF(q)[T].
    Torsion {
        #[arg(long)]
        q: u64,
        #[arg(long = "Q")]
        modulus: String,
        #[command(flatten)]
        output: Output,
    },
    /// e, r, place and genus bounds for the cyclic extension of degree e.
    Params {
        #[arg(long)]
        ell: u64,
        #[arg(long)]
        n: u64,
        #[arg(long = "gE")]
        g_e: u64,
        /// Explicit odd r instead of the default choice.
        #[arg(long)]
        r: Option<u64>,
        #[arg(long, default_value_t = 1)]
        s: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Genus of the narrow ray class field for a place of degree d.
    Genus {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u32,
        #[arg(long = "gF", default_value_t = 0)]
        g_f: u64,
        #[arg(long = "hF", default_value_t = 1)]
        h_f: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Narrow ray class group orders, checked by enumeration.
    Narrow {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        d: u32,
        #[command(flatten)]
        output: Output,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn emit(output: &Output, text: &str) -> Result<(), CliError> {
    match &output.out {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn load_params(path: &Path) -> Result<CodeParams, CliError> {
    Ok(CodeParams::from_json(&read(path)?)?)
}

fn load_dparams(arg: &str) -> Result<DecodeConfig, CliError> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        read(Path::new(arg))?
    };
    Ok(DecodeConfig::from_json(&text)?)
}

fn field_of_order(q: u64) -> Result<Gf, CliError> {
    Gf::with_order(q).map_err(pre)
}

/// "4" or "4..8" (inclusive).
pub fn parse_range(s: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Precondition(format!("bad range {s:?}"));
    match s.split_once("..") {
        None => Ok(vec![s.trim().parse().map_err(|_| bad())?]),
        Some((a, b)) => {
            let a: usize = a.trim().parse().map_err(|_| bad())?;
            let b: usize = b
                .trim()
                .trim_start_matches('=')
                .parse()
                .map_err(|_| bad())?;
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
    }
}

/// "4:2,4:3".
pub fn parse_grid(s: &str) -> Result<Vec<(usize, usize)>, CliError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (m, s2) = p
                .split_once(':')
                .ok_or_else(|| pre(format!("bad grid point {p:?}")))?;
            let m = m
                .trim()
                .parse()
                .map_err(|_| pre(format!("bad grid point {p:?}")))?;
            let s2 = s2
                .trim()
                .parse()
                .map_err(|_| pre(format!("bad grid point {p:?}")))?;
            Ok((m, s2))
        })
        .collect()
}

pub const BENCH_HEADER: &str =
    "m,s,R_exact,radius_exact,radius_asymptotic,success_rate,mean_list_size,mean_decode_ms,status\n";

struct Trial {
    success: bool,
    list_size: usize,
    millis: f64,
    error: Option<String>,
}

fn run_trial(decoder: &Decoder, errors: usize, seed: u64) -> Trial {
    let code = decoder.code();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let msg = code.random_message(&mut rng);
    let cw = code.encode(&msg).expect("message has the code dimension");
    let pos = random_positions(code.n(), errors, &mut rng);
    let rw = corrupt_with(code.field(), &cw, &pos, &mut rng).expect("positions are in range");
    let start = Instant::now();
    let res = decoder.decode(&rw);
    let millis = start.elapsed().as_secs_f64() * 1e3;
    match res {
        Ok(r) => Trial {
            success: r.candidates.contains(&msg),
            list_size: r.candidates.len(),
            millis,
            error: None,
        },
        Err(e) => Trial {
            success: false,
            list_size: 0,
            millis,
            error: Some(e.to_string()),
        },
    }
}

fn bench_point(
    base: &CodeParams,
    m: usize,
    s: usize,
    trials: usize,
    errors: Option<usize>,
    seed: u64,
    timing: bool,
) -> String {
    let point = || -> Result<String, String> {
        let params = CodeParams { m, ..base.clone() };
        let code: FoldedCode = params.build().map_err(|e| e.to_string())?;
        let decoder = Decoder::new(code, s).map_err(|e| e.to_string())?;
        let code = decoder.code();
        let rad = radius(code, decoder.params());
        let errors = errors.unwrap_or(rad.budget);
        let results: Vec<Trial> = (0..trials as u64)
            .into_par_iter()
            .map(|i| run_trial(&decoder, errors, seed.wrapping_add(i)))
            .collect();
        let n = results.len().max(1) as f64;
        let success = results.iter().filter(|t| t.success).count() as f64 / n;
        let list = results.iter().map(|t| t.list_size).sum::<usize>() as f64 / n;
        let time = if timing {
            format!("{:.3}", results.iter().map(|t| t.millis).sum::<f64>() / n)
        } else {
            "NA".into()
        };
        let failures: Vec<&String> = results.iter().filter_map(|t| t.error.as_ref()).collect();
        let status = match failures.first() {
            None => "ok".to_string(),
            Some(e) => format!("{} decode errors ({})", failures.len(), e).replace(',', ";"),
        };
        Ok(format!(
            "{m},{s},{},{},{},{success:.4},{list:.4},{time},{status}\n",
            ratio(code.rate()),
            ratio(rad.tau),
            ratio(rad.tau_approx)
        ))
    };
    match point() {
        Ok(row) => row,
        Err(e) => format!("{m},{s},NA,NA,NA,NA,NA,NA,error: {}\n", e.replace(',', ";")),
    }
}

fn ratio(r: Ratio<i64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// The bench CSV. Rows appear in grid order; an empty body when trials = 0.
pub fn bench_csv(
    params: &CodeParams,
    grid: &[(usize, usize)],
    trials: usize,
    errors: Option<usize>,
    seed: u64,
    timing: bool,
) -> String {
    let mut out = String::from(BENCH_HEADER);
    if trials == 0 {
        return out;
    }
    for &(m, s) in grid {
        out.push_str(&bench_point(params, m, s, trials, errors, seed, timing));
    }
    out
}

#[derive(Serialize)]
struct ParamsReport {
    #[serde(flatten)]
    parameters: carlitz::CyclicExtensionParameters,
    genus_bound_value: String,
    s: u64,
    list_size_exponent: u64,
}

#[derive(Serialize)]
struct GenusReport {
    q: u64,
    d: u32,
    g_f: u64,
    h_f: u64,
    degree: u64,
    genus: i128,
}

#[derive(Serialize)]
struct ChebotarevJson {
    /// With L = GF(q)(T) only ramification in F/L matters.
    note: &'static str,
    histograms: Vec<chebotarev::FrobeniusHistogram>,
    sum_rule_holds: bool,
    all_within_bound: bool,
}

/// One line per check; true when all pass.
pub fn selftest(log: &mut dyn FnMut(&str)) -> bool {
    let mut ok = true;
    let mut check = |name: &str, pass: bool| {
        log(&format!("{} {name}", if pass { "PASS" } else { "FAIL" }));
        ok &= pass;
    };
    for q in [2u64, 3, 4, 8, 9] {
        let f = Gf::with_order(q).expect("prime power");
        let els: Vec<_> = f.elements().collect();
        let mut pass = true;
        for &a in &els {
            pass &= f.add(a, f.neg(a)).is_zero();
            if !a.is_zero() {
                pass &= f.mul(a, f.inv(a).unwrap()) == f.one();
            }
            for &b in &els {
                pass &= f.mul(a, b) == f.mul_reference(a, b) && f.add(a, b) == f.add(b, a);
                for &c in &els {
                    pass &= f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
            }
        }
        check(&format!("field axioms GF({q})"), pass);
    }
    let roundtrip = || -> Result<bool, String> {
        let params =
            CodeParams::from_json(r#"{"backend":{"kind":"rational","q":16},"m":4,"N":3,"l":2}"#)
                .map_err(|e| e.to_string())?;
        let decoder = Decoder::new(params.build().map_err(|e| e.to_string())?, 2)
            .map_err(|e| e.to_string())?;
        Ok((0..20).all(|i| run_trial(&decoder, 1, i).success))
    };
    check(
        "decode round trip q=16 m=4 s=2 N=3 l=2",
        roundtrip().unwrap_or(false),
    );
    let torsion = |q: u64, dmax: usize| {
        let f = Gf::with_order(q).expect("prime power");
        (1..=dmax).all(|d| {
            carlitz::torsion::monic_of_degree(&f, d).iter().all(|qp| {
                carlitz::torsion_report(&f, qp)
                    .map(|r| r.all_ok())
                    .unwrap_or(false)
            })
        })
    };
    check("torsion facts GF(2), deg Q <= 2", torsion(2, 2));
    check("torsion facts GF(3), deg Q <= 1", torsion(3, 1));
    ok
}

fn run_classfield(cmd: ClassfieldCommand) -> Result<(), CliError> {
    match cmd {
        ClassfieldCommand::Torsion { q, modulus, output } => {
            let f = field_of_order(q)?;
            let qp = Poly::parse(&f, &modulus).map_err(pre)?;
            let report = carlitz::torsion_report(&f, &qp)?;
            emit(&output, &to_json(&report))
        }
        ClassfieldCommand::Params {
            ell,
            n,
            g_e,
            r,
            s,
            output,
        } => {
            let parameters = match r {
                Some(r) => carlitz::cyclic_extension_parameters_with_r(ell, r, n, g_e)?,
                None => carlitz::cyclic_extension_parameters(ell, n, g_e)?,
            };
            let report = ParamsReport {
                genus_bound_value: parameters.genus_bound_ratio().to_string(),
                list_size_exponent: parameters.list_size_exponent(s),
                s,
                parameters,
            };
            emit(&output, &to_json(&report))
        }
        ClassfieldCommand::Genus {
            q,
            d,
            g_f,
            h_f,
            output,
        } => {
            let genus = carlitz::class_field_genus(q, d, g_f, h_f)?;
            let degree = (q.pow(d) - 1) * h_f;
            emit(
                &output,
                &to_json(&GenusReport {
                    q,
                    d,
                    g_f,
                    h_f,
                    degree,
                    genus,
                }),
            )
        }
        ClassfieldCommand::Narrow { q, d, output } => {
            let f = field_of_order(q)?;
            let report = carlitz::narrow_ray_check(&f, d)?;
            if !report.consistent() {
                return Err(CliError::Tripwire(
                    "narrow ray class counts disagree".into(),
                ));
            }
            emit(&output, &to_json(&report))
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Encode {
            params,
            message,
            seed,
            output,
        } => {
            let code = load_params(&params)?.build()?;
            let msg = match message {
                Some(p) => config::parse_message(code.field(), &read(&p)?)?,
                None => code.random_message(&mut ChaCha8Rng::seed_from_u64(seed)),
            };
            let cw = code.encode(&msg).map_err(pre)?;
            emit(&output, &(config::word_to_json(&cw) + "\n"))
        }
        Command::Corrupt {
            params,
            input,
            errors,
            seed,
            output,
        } => {
            let code = load_params(&params)?.build()?;
            let word = config::word_from_json(code.field(), &read(&input)?)?;
            if word.n() != code.n() || word.m() != code.m() {
                return Err(pre("word shape does not match the code"));
            }
            if errors > code.n() {
                return Err(pre(format!(
                    "cannot corrupt {errors} of {} columns",
                    code.n()
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let pos = random_positions(code.n(), errors, &mut rng);
            let rw = corrupt_with(code.field(), &word, &pos, &mut rng).map_err(pre)?;
            emit(&output, &(config::word_to_json(&rw) + "\n"))
        }
        Command::Decode {
            params,
            dparams,
            input,
            output,
        } => {
            let code = load_params(&params)?.build()?;
            let dp = load_dparams(&dparams)?;
            let word = config::word_from_json(code.field(), &read(&input)?)?;
            let dparams = DecoderParams::new(&code, dp.s)?.with_cap(dp.cap());
            let field = code.field().clone();
            let decoder = Decoder::with_params(code, dparams)?;
            let result = decoder.decode(&word)?;
            emit(
                &output,
                &to_json(&ListOutput::new(&field, decoder.params(), &result)),
            )
        }
        Command::Bench {
            params,
            grid,
            trials,
            errors,
            seed,
            no_timing,
            output,
        } => {
            let params = load_params(&params)?;
            let grid = match grid {
                Some(g) => parse_grid(&g)?,
                None => vec![(params.m, params.m.min(2))],
            };
            emit(
                &output,
                &bench_csv(&params, &grid, trials, errors, seed, !no_timing),
            )
        }
        Command::Classfield { command } => run_classfield(command),
        Command::Chebotarev {
            q,
            modulus,
            h,
            e,
            format,
            output,
        } => {
            let f = field_of_order(q)?;
            let qp = Poly::parse(&f, &modulus).map_err(pre)?;
            let hists = parse_range(&h)?
                .into_iter()
                .map(|h| chebotarev::chebotarev_check(&f, &qp, h, e))
                .collect::<Result<Vec<_>, _>>()?;
            let text = match format {
                Format::Csv => chebotarev::histograms_to_csv(&hists),
                Format::Json => to_json(&ChebotarevJson {
                    note:
                        "L is the rational function field, so only ramification in F/L is excluded",
                    sum_rule_holds: hists.iter().all(|h| h.sum_rule_holds()),
                    all_within_bound: hists.iter().all(|h| h.all_within_bound()),
                    histograms: hists,
                }),
            };
            emit(&output, &text)
        }
        Command::Selftest => {
            let start = Instant::now();
            let ok = selftest(&mut |line| println!("{line}"));
            println!(
                "selftest finished in {:.2} s",
                start.elapsed().as_secs_f64()
            );
            if ok {
                Ok(())
            } else {
                Err(CliError::Tripwire("selftest failed".into()))
            }
        }
    }
}

/// Caps the rayon pool from FOLDECODE_THREADS.
pub fn init_threads() {
    if let Some(n) = std::env::var("FOLDECODE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
    {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build_global();
    }
}

pub fn main_entry() -> ExitCode {
    init_threads();
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_grids() {
        assert_eq!(parse_range("4..8").unwrap(), vec![4, 5, 6, 7, 8]);
        assert_eq!(parse_range("4..=5").unwrap(), vec![4, 5]);
        assert_eq!(parse_range("3").unwrap(), vec![3]);
        assert!(parse_range("8..4").is_err());
        assert_eq!(parse_grid("4:2, 4:1").unwrap(), vec![(4, 2), (4, 1)]);
        assert!(parse_grid("4-2").is_err());
    }

    #[test]
    fn empty_bench() {
        let p =
            CodeParams::from_json(r#"{"backend":{"kind":"rational","q":16},"m":4,"N":3,"l":2}"#)
                .unwrap();
        assert_eq!(bench_csv(&p, &[(4, 2)], 0, None, 0, false), BENCH_HEADER);
    }

    #[test]
    fn bench_is_deterministic_and_complete() {
        let p =
            CodeParams::from_json(r#"{"backend":{"kind":"rational","q":16},"m":4,"N":3,"l":2}"#)
                .unwrap();
        let a = bench_csv(&p, &[(4, 2), (4, 5)], 10, None, 3, false);
        assert_eq!(a, bench_csv(&p, &[(4, 2), (4, 5)], 10, None, 3, false));
        let rows: Vec<&str> = a.lines().collect();
        assert_eq!(rows[1], "4,2,1/4,1/3,4/9,1.0000,1.0000,NA,ok");
        assert!(rows[2].starts_with("4,5,NA"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::from(DecodeError::NoSolution).exit_code(), 3);
        assert_eq!(
            CliError::from(DecodeError::InvalidS { s: 0, m: 1 }).exit_code(),
            2
        );
        assert_eq!(
            CliError::from(CarlitzError::NonIntegerGenus {
                twice_g_minus_two: 1
            })
            .exit_code(),
            3
        );
    }
}

use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use poscert::certificate::{
    decide_positive_root, decide_real_root, sign_change_witness, DecisionConfig, Verdict,
};
use poscert::cofactor::{build_cofactor, scan_ratios, DEFAULT_RATIOS};
use poscert::oracle;
use poscert::rational::{format_rat, parse_rat};
use poscert::report::{
    mpoly_to_terms, rats_to_strings, verdict_str, RunReport, UnsatCertificateReport,
};
use poscert::sat::{
    brute_force_sat, encode, find_unsat_certificate, hypercube_zero, parse_dimacs,
    CertificateSearch, SatResult,
};
use poscert::{Rat, UniPoly};

#[derive(Parser)]
#[command(name = "poscert", version, about = "Positivity-certificate root decisions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DecisionArgs {
    /// Polynomial, inline ("x^2 - 2x + 1" or "[1, -2, 1]") or a file path
    poly: String,
    /// Multiplier degree cap for the deepening search
    #[arg(long, env = "POSCERT_DEGREE_CAP", default_value_t = 64)]
    max_degree: usize,
    /// Skip the Sturm cross-check (bounded-search verdicts stay unconfirmed)
    #[arg(long)]
    no_oracle: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether P has a root in ]0, inf[
    Check(DecisionArgs),
    /// Decide whether P has any real root
    Realroot(DecisionArgs),
    /// First-negative-index scan over ratios h
    Table1 {
        /// Comma-separated ratios (default: the tabulated set)
        #[arg(long)]
        ratios: Option<String>,
        #[arg(long, value_enum, default_value = "table")]
        format: TableFormat,
    },
    /// Positive-coefficient cofactor for (X-p)^2 + q^2
    Cofactor {
        #[arg(long)]
        p: String,
        #[arg(long)]
        q: String,
        #[arg(long)]
        json: bool,
    },
    /// Sign-change witness W = B * prod(X - a_i) * U
    Witness {
        #[arg(long)]
        base: String,
        /// Comma-separated positive rational roots
        #[arg(long)]
        roots: String,
        #[arg(long)]
        json: bool,
    },
    /// 3-SAT pipeline
    Sat {
        #[command(subcommand)]
        command: SatCommand,
    },
    /// Random decision benchmark, CSV on stdout
    Bench {
        /// Degree range lo..hi (inclusive)
        #[arg(long)]
        degrees: String,
        /// Polynomials per degree
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Coefficients drawn uniformly from [-range, range]
        #[arg(long, default_value_t = 10)]
        coeff_range: i64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, env = "POSCERT_DEGREE_CAP", default_value_t = 64)]
        max_degree: usize,
    },
}

#[derive(Subcommand)]
enum SatCommand {
    /// Clause-polynomial encoding Q of a width-3 CNF
    Encode {
        file: String,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive satisfiability scan
    Brute { file: String },
    /// Search for the unsatisfiability certificate QK + sum(P_i K_i)
    Cert {
        file: String,
        #[arg(long, default_value_t = 6)]
        max_d: usize,
        #[arg(long)]
        json: bool,
    },
}

fn read_poly_arg(arg: &str) -> Result<(UniPoly, String), poscert::Error> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| poscert::Error::Parse(format!("{arg}: {e}")))?
    } else {
        arg.to_string()
    };
    let text = text.trim().to_string();
    Ok((UniPoly::parse(&text)?, text))
}

fn decision_config(args: &DecisionArgs) -> DecisionConfig {
    DecisionConfig {
        beta_override: None,
        degree_cap: args.max_degree,
        use_oracle_crosscheck: !args.no_oracle,
    }
}

fn run_check(args: &DecisionArgs) -> Result<u8, poscert::Error> {
    let (poly, input) = read_poly_arg(&args.poly)?;
    let start = Instant::now();
    let decision = decide_positive_root(&poly, &decision_config(args))?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    if args.json {
        let mut report = RunReport::from_decision("check", &input, &decision);
        report.timings_ms.insert("decision".into(), elapsed);
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("verdict: {}", verdict_str(decision.verdict));
        if let Some(cert) = &decision.certificate {
            println!("multiplier degree: {}", cert.d);
            println!("T = {}", cert.t);
            println!("V = {}", cert.v);
        }
        if decision.bounded_search {
            println!("note: search stopped below the completeness bound");
        }
        if let Some(has) = decision.oracle_has_positive_root {
            println!("oracle: {}", if has { "positive_root_exists" } else { "no_positive_root" });
        }
    }
    Ok(match decision.verdict {
        Verdict::NoPositiveRoot => 0,
        Verdict::PositiveRootExists => 1,
    })
}

fn run_realroot(args: &DecisionArgs) -> Result<u8, poscert::Error> {
    let (poly, input) = read_poly_arg(&args.poly)?;
    let r = decide_real_root(&poly, &decision_config(args))?;
    if args.json {
        let payload = serde_json::json!({
            "command": "realroot",
            "input": input,
            "has_real_root": r.has_real_root,
            "root_at_zero": r.root_at_zero,
            "positive": RunReport::from_decision("realroot", &input, &r.positive),
            "negative": RunReport::from_decision("realroot", &input, &r.negative),
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("has_real_root: {}", r.has_real_root);
        println!("positive side: {}", verdict_str(r.positive.verdict));
        println!("negative side: {}", verdict_str(r.negative.verdict));
        println!("root at zero: {}", r.root_at_zero);
    }
    Ok(if r.has_real_root { 1 } else { 0 })
}

fn run_table1(ratios: &Option<String>, format: TableFormat) -> Result<u8, poscert::Error> {
    let hs: Vec<f64> = match ratios {
        None => DEFAULT_RATIOS.to_vec(),
        Some(csv) => csv
            .split(',')
            .map(|s| {
                s.trim()
                    .parse::<f64>()
                    .map_err(|_| poscert::Error::Parse(format!("bad ratio: {s}")))
            })
            .collect::<Result<_, _>>()?,
    };
    let rows = scan_ratios(&hs)?;
    match format {
        TableFormat::Table => {
            println!("{:>12} {:>12} {:>12}", "h", "index", "index/h");
            for r in &rows {
                println!("{:>12} {:>12} {:>12.6}", r.h, r.negative_index, r.pi_estimate);
            }
        }
        TableFormat::Csv => {
            println!("h,index,pi_estimate");
            for r in &rows {
                println!("{},{},{}", r.h, r.negative_index, r.pi_estimate);
            }
        }
        TableFormat::Json => {
            let payload: Vec<_> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({"h": r.h, "index": r.negative_index, "pi_estimate": r.pi_estimate})
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&payload).unwrap());
        }
    }
    Ok(0)
}

fn run_cofactor(p: &str, q: &str, json: bool) -> Result<u8, poscert::Error> {
    let p = parse_rat(p)?;
    let q = parse_rat(q)?;
    let w = build_cofactor(&p, &q)?;
    if json {
        let payload = serde_json::json!({
            "p": format_rat(&p),
            "q": format_rat(&q),
            "degree": w.degree,
            "quadratic": rats_to_strings(w.quadratic.coeffs()),
            "r": rats_to_strings(w.r.coeffs()),
            "product": rats_to_strings(w.product.coeffs()),
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("quadratic: {}", w.quadratic);
        println!("cofactor degree: {}", w.degree);
        println!("R = {}", w.r);
        println!("product = {}", w.product);
    }
    Ok(0)
}

fn run_witness(base: &str, roots: &str, json: bool) -> Result<u8, poscert::Error> {
    let (b, _) = read_poly_arg(base)?;
    let roots: Vec<Rat> = roots
        .split(',')
        .map(|s| parse_rat(s.trim()))
        .collect::<Result<_, _>>()?;
    let (u, w) = sign_change_witness(&b, &roots)?;
    let changes = w.sign_changes()?;
    if json {
        let payload = serde_json::json!({
            "u": rats_to_strings(u.coeffs()),
            "w": rats_to_strings(w.coeffs()),
            "sign_changes": changes,
        });
        println!("{}", serde_json::to_string_pretty(&payload).unwrap());
    } else {
        println!("U = {u}");
        println!("W = {w}");
        println!("sign changes: {changes}");
    }
    Ok(0)
}

fn run_sat(cmd: &SatCommand) -> Result<u8, poscert::Error> {
    match cmd {
        SatCommand::Encode { file, json } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| poscert::Error::Parse(format!("{file}: {e}")))?;
            let f = parse_dimacs(&text)?;
            let q = encode(&f)?;
            if *json {
                let payload = serde_json::json!({
                    "num_vars": f.u,
                    "terms": mpoly_to_terms(&q),
                });
                println!("{}", serde_json::to_string_pretty(&payload).unwrap());
            } else {
                println!("Q = {q}");
            }
            Ok(0)
        }
        SatCommand::Brute { file } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| poscert::Error::Parse(format!("{file}: {e}")))?;
            let f = parse_dimacs(&text)?;
            match brute_force_sat(&f)? {
                SatResult::Sat(bits) => {
                    let assignment: Vec<String> = bits
                        .iter()
                        .enumerate()
                        .map(|(i, &b)| format!("x{}={}", i + 1, if b { "T" } else { "F" }))
                        .collect();
                    println!("sat {}", assignment.join(" "));
                    let q = encode(&f)?;
                    if let Some(point) = hypercube_zero(&q, f.u)? {
                        let coords: Vec<String> = point.iter().map(format_rat).collect();
                        println!("grid zero at ({})", coords.join(", "));
                    }
                    Ok(1)
                }
                SatResult::Unsat => {
                    println!("unsat");
                    Ok(0)
                }
            }
        }
        SatCommand::Cert { file, max_d, json } => {
            let text = std::fs::read_to_string(file)
                .map_err(|e| poscert::Error::Parse(format!("{file}: {e}")))?;
            let f = parse_dimacs(&text)?;
            for d in 0..=*max_d {
                if let CertificateSearch::Feasible(cert) = find_unsat_certificate(&f, d)? {
                    if *json {
                        let report = UnsatCertificateReport::from_certificate(&cert, f.u);
                        println!("{}", serde_json::to_string_pretty(&report).unwrap());
                    } else {
                        println!("certificate at d = {d}");
                        println!("K = {}", cert.k);
                        for (i, ki) in cert.k_i.iter().enumerate() {
                            println!("K{} = {}", i + 1, ki);
                        }
                        println!("P = {}", cert.p);
                    }
                    return Ok(0);
                }
            }
            println!("no certificate up to d = {max_d}");
            Ok(1)
        }
    }
}

fn run_bench(
    degrees: &str,
    count: usize,
    coeff_range: i64,
    seed: u64,
    max_degree: usize,
) -> Result<u8, poscert::Error> {
    let (lo, hi) = degrees
        .split_once("..")
        .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)))
        .filter(|(lo, hi)| *lo >= 1 && lo <= hi)
        .ok_or_else(|| poscert::Error::Parse(format!("bad degree range: {degrees}")))?;
    if coeff_range < 1 {
        return Err(poscert::Error::Parse("coefficient range must be >= 1".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut inputs = Vec::new();
    for degree in lo..=hi {
        for _ in 0..count {
            let mut coeffs: Vec<i64> = (0..=degree)
                .map(|_| rng.gen_range(-coeff_range..=coeff_range))
                .collect();
            while coeffs[degree] == 0 {
                coeffs[degree] = rng.gen_range(-coeff_range..=coeff_range);
            }
            inputs.push((degree, coeffs));
        }
    }

    let cfg = DecisionConfig {
        beta_override: None,
        degree_cap: max_degree,
        use_oracle_crosscheck: false,
    };
    let rows: Vec<String> = inputs
        .par_iter()
        .map(|(degree, coeffs)| {
            let poly = UniPoly::from_ints(coeffs);
            let t0 = Instant::now();
            let decision = decide_positive_root(&poly, &cfg);
            let decision_ms = t0.elapsed().as_secs_f64() * 1e3;
            let t1 = Instant::now();
            let oracle_verdict = oracle::has_positive_real_root(&poly);
            let oracle_ms = t1.elapsed().as_secs_f64() * 1e3;
            let mut row = String::new();
            match (decision, oracle_verdict) {
                (Ok(d), Ok(o)) => {
                    let _ = write!(
                        row,
                        "{degree},{coeff_range},{decision_ms:.3},{},{},{},{oracle_ms:.3},{}",
                        d.attempted_degrees.last().copied().unwrap_or(0),
                        verdict_str(d.verdict),
                        d.bounded_search,
                        if o { "positive_root_exists" } else { "no_positive_root" },
                    );
                }
                (Err(e), _) | (_, Err(e)) => {
                    let _ = write!(row, "{degree},{coeff_range},error: {e},,,,,");
                }
            }
            row
        })
        .collect();

    println!("degree,coeff_range,decision_ms,d_used,verdict,bounded_search,oracle_ms,oracle_verdict");
    for row in rows {
        println!("{row}");
    }
    Ok(0)
}

fn dispatch(cli: &Cli) -> Result<u8, poscert::Error> {
    match &cli.command {
        Command::Check(args) => run_check(args),
        Command::Realroot(args) => run_realroot(args),
        Command::Table1 { ratios, format } => run_table1(ratios, *format),
        Command::Cofactor { p, q, json } => run_cofactor(p, q, *json),
        Command::Witness { base, roots, json } => run_witness(base, roots, *json),
        Command::Sat { command } => run_sat(command),
        Command::Bench { degrees, count, coeff_range, seed, max_degree } => {
            run_bench(degrees, *count, *coeff_range, *seed, *max_degree)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

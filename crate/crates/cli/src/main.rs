//! `cyclo-darboux`: command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
//! 3 some searched degree is undecided.

use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};

use darboux_core::certfile;
use darboux_core::certify::{build_structure, orbit_product, theorem_pipeline, Verdict};
use darboux_core::darboux::{search_up_to, verify_darboux};
use darboux_core::deriv::{analyze_partitions, detect_cyclotomic_partition, gen_generalized_cyclotomic, gen_jouanolou, partition_for_k};
use darboux_core::dsl::{parse_spec, parse_tables, print_spec};
use darboux_core::poly::parse_polynomial;
use darboux_core::{DarbouxPair, Error, MonomialDerivation, SearchOptions, VariableContext};

#[derive(Parser)]
#[command(name = "cyclo-darboux", version, about = "Exact workbench for monomial derivations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exponent matrix, w_d and generalized cyclotomic partitions.
    Analyze(SpecArg),
    /// Search for Darboux polynomials up to a degree bound.
    Darboux {
        #[command(flatten)]
        spec: SpecArg,
        #[arg(long)]
        max_degree: u32,
        /// Only search cofactors of the form c*monomial (fast, incomplete).
        #[arg(long)]
        monomial_cofactors_only: bool,
        /// Branch limit per pivot of the polynomial-system solver.
        #[arg(long, default_value_t = SearchOptions::default().branch_cap)]
        branch_cap: usize,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Build and check the full cyclotomic certificate.
    Certify {
        #[command(flatten)]
        spec: SpecArg,
        /// Certify this number of blocks instead of the largest feasible one.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, default_value_t = SearchOptions::default().branch_cap)]
        branch_cap: usize,
        /// Write the certificate JSON here (default: standard output).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-verify a certificate file without searching.
    Recheck {
        /// Certificate JSON ("-" or absent for standard input).
        file: Option<PathBuf>,
    },
    /// Verify a Darboux pair and print its orbit product.
    Orbit {
        #[command(flatten)]
        spec: SpecArg,
        /// Darboux polynomial f.
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        /// Its cofactor.
        #[arg(long = "lambda", allow_hyphen_values = true)]
        cofactor: String,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Emit a derivation spec.
    #[command(subcommand)]
    Gen(Gen),
    /// Direct sum of two derivations on disjoint variables.
    Tensor {
        a: PathBuf,
        b: PathBuf,
    },
}

#[derive(Subcommand)]
enum Gen {
    /// d(x_i) = x_{i+1}^s cyclically.
    Jouanolou {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        s: u32,
    },
    /// Generalized cyclotomic derivation from block sizes and exponent tables.
    Cyclotomic {
        /// Block sizes t1,..,tk.
        #[arg(long, value_delimiter = ',', required = true)]
        sizes: Vec<usize>,
        /// Tables file: one group of rows per block, separated by blank lines.
        #[arg(long)]
        tables: PathBuf,
        /// Optional variable names (comma separated).
        #[arg(long, value_delimiter = ',')]
        names: Option<Vec<String>>,
    },
}

#[derive(Args)]
struct SpecArg {
    /// Derivation spec file ("-" or absent for standard input).
    spec: Option<PathBuf>,
}

/// Error carrying its exit code.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        let code = match error.downcast_ref::<Error>() {
            Some(Error::Verification(_)) => 1,
            _ => 2,
        };
        Failure { code, error }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::from(e).into()
    }
}

fn verification(msg: String) -> Failure {
    Failure {
        code: 1,
        error: anyhow!(msg),
    }
}

fn read_input(path: Option<&Path>) -> anyhow::Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn load_spec(arg: &SpecArg) -> Result<MonomialDerivation, Failure> {
    let text = read_input(arg.spec.as_deref())?;
    Ok(parse_spec(&text)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Analyze(spec) => analyze(&load_spec(&spec)?),
        Command::Darboux {
            spec,
            max_degree,
            monomial_cofactors_only,
            branch_cap,
            json,
        } => {
            let d = load_spec(&spec)?;
            let options = SearchOptions {
                branch_cap,
                monomial_cofactors_only,
            };
            let report = search_up_to(&d, max_degree, &options)?;
            if json {
                println!("{}", certfile::search_json(&report));
            } else {
                for r in &report.degrees {
                    println!("degree {}: {} (branches {})", r.degree, r.status.as_str(), r.branches);
                    for sol in &r.solutions {
                        for f in &sol.basis {
                            println!("  f = {f}    cofactor = {}", sol.cofactor);
                        }
                    }
                    for u in &r.undecided {
                        println!("  undecided: {u}");
                    }
                }
            }
            Ok(if report.any_undecided() { 3 } else { 0 })
        }
        Command::Certify {
            spec,
            k,
            max_degree,
            branch_cap,
            out,
        } => {
            let d = load_spec(&spec)?;
            let options = SearchOptions {
                branch_cap,
                ..SearchOptions::default()
            };
            let cert = theorem_pipeline(&d, max_degree, k, &options)?;
            let json = certfile::to_json(&cert);
            let st = &cert.structure;
            let summary = [
                format!("partition: {}", st.partition().render(&d)),
                format!(
                    "k = {}, s = {}, N = {}, q = ({})",
                    st.k(),
                    st.s(),
                    st.order(),
                    st.q().iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
                ),
                format!("conjugation: {}", cert.conjugation.holds),
                format!(
                    "lambda vanishing: {} ({} monomials, all sums zero: {})",
                    cert.lambda.holds,
                    cert.lambda.rows.len(),
                    cert.lambda.rows.iter().all(|r| r.geometric_sum_zero && r.direct_sum_zero)
                ),
                format!(
                    "search: {}",
                    cert.search
                        .degrees
                        .iter()
                        .map(|r| format!("m={} {}", r.degree, r.status.as_str()))
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
                match &cert.witness {
                    Some(w) => format!(
                        "witness: f = {}, F = {}",
                        w.f,
                        w.rational.as_ref().map_or_else(|| w.product.to_string(), |r| r.to_string())
                    ),
                    None => "witness: none".into(),
                },
                format!("verdict: {}", cert.summary()),
            ];
            match out {
                Some(path) => {
                    fs::write(&path, json + "\n").with_context(|| format!("writing {}", path.display()))?;
                    for line in &summary {
                        println!("{line}");
                    }
                }
                None => {
                    println!("{json}");
                    for line in &summary {
                        eprintln!("{line}");
                    }
                }
            }
            Ok(match cert.verdict() {
                Verdict::StructureFailed => 1,
                Verdict::Undecided(_) => 3,
                _ => 0,
            })
        }
        Command::Recheck { file } => {
            let text = read_input(file.as_deref())?;
            let report = certfile::recheck_json(&text)?;
            println!("{} checks passed", report.passed.len());
            for f in &report.failed {
                println!("FAILED: {f}");
            }
            Ok(if report.ok() { 0 } else { 1 })
        }
        Command::Orbit { spec, f, cofactor, k } => {
            let d = load_spec(&spec)?;
            let ctx = d.context();
            let f = parse_polynomial(ctx, &f)?;
            let cofactor = parse_polynomial(ctx, &cofactor)?;
            if f.is_constant() {
                return Err(verification("f must be non-constant".into()));
            }
            if !verify_darboux(&d, &f, &cofactor)? {
                return Err(verification(format!("d(f) != lambda*f for f = {f}, lambda = {cofactor}")));
            }
            let partition = match k {
                Some(k) => partition_for_k(&d, k),
                None => detect_cyclotomic_partition(&d),
            }
            .ok_or_else(|| anyhow!("no generalized cyclotomic partition"))?;
            let st = build_structure(&d, &partition)?;
            let op = orbit_product(&d, &st, &DarbouxPair { f, cofactor })?;
            println!("N = {}", st.order());
            match &op.rational {
                Some(r) => println!("F = {r}"),
                None => println!("F = {}", op.product),
            }
            println!("d(F) = 0");
            Ok(0)
        }
        Command::Gen(Gen::Jouanolou { n, s }) => {
            print!("{}", print_spec(&gen_jouanolou(n, s)?));
            Ok(0)
        }
        Command::Gen(Gen::Cyclotomic { sizes, tables, names }) => {
            let text = read_input(Some(&tables))?;
            let tables = parse_tables(&text)?;
            print!("{}", print_spec(&gen_generalized_cyclotomic(&sizes, &tables, names)?));
            Ok(0)
        }
        Command::Tensor { a, b } => {
            let a = parse_spec(&read_input(Some(&a))?)?;
            let b = parse_spec(&read_input(Some(&b))?)?;
            let b = disjoint_names(&a, &b)?;
            print!("{}", print_spec(&a.direct_sum(&b)?));
            Ok(0)
        }
    }
}

/// Renames colliding variables of `b` by appending `_2` (repeatedly).
fn disjoint_names(a: &MonomialDerivation, b: &MonomialDerivation) -> Result<MonomialDerivation, Failure> {
    let taken = a.context().names();
    if b.context().names().iter().all(|n| !taken.contains(n)) {
        return Ok(b.clone());
    }
    let mut names: Vec<String> = Vec::new();
    for n in b.context().names() {
        let mut candidate = n.clone();
        while taken.contains(&candidate) || names.contains(&candidate) || (candidate != *n && b.context().names().contains(&candidate)) {
            candidate.push_str("_2");
        }
        names.push(candidate);
    }
    eprintln!("note: renamed variables of the second derivation to {}", names.join(", "));
    let ctx = VariableContext::new(names)?;
    Ok(MonomialDerivation::new(&ctx, b.images().to_vec())?)
}

fn analyze(d: &MonomialDerivation) -> Result<u8, Failure> {
    let ctx = d.context();
    println!("variables: {}", ctx.names().join(", "));
    match d.image_degree() {
        Some(s) => println!("image degree s = {s}; homogeneous of degree {}", s as i64 - 1),
        None => println!("images have different total degrees; not homogeneous"),
    }
    let em = d.exponent_matrix_and_wd();
    println!("A = [alpha_ij] - I:");
    for line in em.matrix.to_string().lines() {
        println!("  {line}");
    }
    println!("w_d = {}", em.w_d);
    if !em.unit_coefficients {
        println!("note: some image coefficients differ from 1");
    }
    let pa = analyze_partitions(d);
    println!("discrepancy gcd = {}", pa.discrepancy_gcd);
    let feasible = pa.feasible_k();
    if feasible.is_empty() {
        println!("feasible k: none");
    } else {
        println!(
            "feasible k: {}",
            feasible.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
        );
        for p in &pa.partitions {
            println!("  k = {}: {}", p.k(), p.render(d));
        }
    }
    Ok(0)
}

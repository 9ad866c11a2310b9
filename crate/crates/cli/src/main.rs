//! `facpoly`: print number tables and polynomials, and run the identity checker.
//!
//! Exit status: 0 on success, 1 on a usage or input error, 2 when a checked
//! identity fails (its report is still printed).

use std::fmt::Write as _;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use facpoly_core::bell::{a_table, BellTable};
use facpoly_core::facpoly::FactorialPolynomials;
use facpoly_core::grid::{NumberGrid, TableFamily};
use facpoly_core::numfam::{lower_assoc, upper_assoc};
use facpoly_core::verify::{self, IdentityId, IdentityReport, Limits};
use facpoly_core::{Error, Poly};

const DEFAULT_MAX_N: usize = 30;

#[derive(Parser, Debug)]
#[command(name = "facpoly", version, about = "Factorial polynomials, Bell polynomials and their number families")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a grid of an integer family.
    Table {
        /// stirling1, stirling2, cycle, lah, lah-unsigned, upper-assoc or lower-assoc
        #[arg(long)]
        family: String,
        #[arg(long)]
        nmax: usize,
        /// Defaults to nmax.
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print one polynomial.
    Poly {
        #[arg(long, value_enum)]
        family: PolyFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print associated factorial numbers, one value or a grid.
    Assoc {
        #[arg(long, value_enum)]
        family: AssocFamily,
        #[arg(long, requires = "k")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        k: Option<usize>,
        #[arg(long, conflicts_with = "n")]
        nmax: Option<usize>,
        #[arg(long, conflicts_with = "k")]
        kmax: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check identities exhaustively over an index range.
    Verify {
        /// An identity name, or `all` for the default suite.
        #[arg(long, default_value = "all")]
        identity: String,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        kmax: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PolyFamily {
    Bell,
    Abell,
    Potential,
    Facl,
    Facu,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum AssocFamily {
    Upper,
    Lower,
}

/// Failure modes mapped onto exit codes.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Verification) => ExitCode::from(2),
    }
}

fn max_n() -> Result<usize, Failure> {
    match std::env::var("FACPOLY_MAX_N") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("FACPOLY_MAX_N must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn check_cap(what: &str, value: usize, cap: usize) -> Result<(), Failure> {
    if value > cap {
        return Err(Failure::Usage(format!("{what} = {value} exceeds the limit {cap} (set FACPOLY_MAX_N to raise it)")));
    }
    Ok(())
}

fn run(command: Command) -> Result<String, Failure> {
    let cap = max_n()?;
    match command {
        Command::Table {
            family,
            nmax,
            kmax,
            format,
        } => {
            let family: TableFamily = family.parse().map_err(|_| {
                Failure::Usage(format!(
                    "unknown family {family:?}; expected one of {}",
                    TableFamily::names().join(", ")
                ))
            })?;
            let kmax = kmax.unwrap_or(nmax);
            check_cap("nmax", nmax, cap)?;
            check_cap("kmax", kmax, cap)?;
            Ok(render_grid(&NumberGrid::build(family, nmax, kmax)?, format))
        }
        Command::Poly { family, n, k, format } => {
            check_cap("n", n, cap)?;
            check_cap("|k|", k.unsigned_abs() as usize, cap)?;
            let p = build_poly(family, n, k)?;
            Ok(render_poly(&p, format))
        }
        Command::Assoc {
            family,
            n,
            k,
            nmax,
            kmax,
            format,
        } => {
            let grid_family = match family {
                AssocFamily::Upper => TableFamily::UpperAssoc,
                AssocFamily::Lower => TableFamily::LowerAssoc,
            };
            if let (Some(n), Some(k)) = (n, k) {
                check_cap("n", n, cap)?;
                check_cap("k", k, cap)?;
                let v = match family {
                    AssocFamily::Upper => upper_assoc(n, k)?,
                    AssocFamily::Lower => lower_assoc(n, k)?,
                };
                return Ok(match format {
                    Format::Json => format!("\"{v}\"\n"),
                    Format::Text | Format::Csv => format!("{v}\n"),
                });
            }
            let nmax = nmax.ok_or_else(|| Failure::Usage("assoc needs either --n and --k, or --nmax".into()))?;
            let kmax = kmax.unwrap_or(nmax);
            check_cap("nmax", nmax, cap)?;
            check_cap("kmax", kmax, cap)?;
            Ok(render_grid(&NumberGrid::build(grid_family, nmax, kmax)?, format))
        }
        Command::Verify {
            identity,
            nmax,
            kmax,
            seed,
            format,
        } => run_verify(&identity, nmax, kmax, seed, format, &Limits::capped(cap)),
    }
}

fn build_poly(family: PolyFamily, n: usize, k: i64) -> Result<Poly, Failure> {
    let nonneg = |k: i64| -> Result<usize, Failure> {
        usize::try_from(k).map_err(|_| Failure::Usage(format!("k must be non-negative for this family, got {k}")))
    };
    let in_triangle = |k: usize| -> Result<(), Failure> {
        if k > n {
            return Err(Failure::Usage(format!("need k <= n, got n={n} k={k}")));
        }
        Ok(())
    };
    Ok(match family {
        PolyFamily::Bell => {
            let k = nonneg(k)?;
            in_triangle(k)?;
            BellTable::new(n).at(n, k).clone()
        }
        PolyFamily::Abell => {
            let k = nonneg(k)?;
            in_triangle(k)?;
            a_table(n)?.at(n, k).clone()
        }
        PolyFamily::Potential => FactorialPolynomials::new(n).potential(n, k)?,
        PolyFamily::Facl => FactorialPolynomials::new(n).lower_factorial_direct(n, nonneg(k)?)?,
        PolyFamily::Facu => FactorialPolynomials::new(n).upper_factorial_direct(n, nonneg(k)?)?,
    })
}

fn render_grid(grid: &NumberGrid, format: Format) -> String {
    match format {
        Format::Text => grid.to_text(),
        Format::Csv => grid.to_csv(),
        Format::Json => grid.to_json() + "\n",
    }
}

fn render_poly(p: &Poly, format: Format) -> String {
    match format {
        Format::Text => p.to_canonical_string() + "\n",
        Format::Json => p.to_json() + "\n",
        Format::Csv => {
            // One row per term: coefficient, then the exponent of X0..Xm.
            let width = p.max_var().map_or(0, |m| m + 1);
            let mut out = String::from("coeff");
            for v in 0..width {
                let _ = write!(out, ",X{v}");
            }
            out.push('\n');
            for (m, c) in p.terms() {
                let _ = write!(out, "{c}");
                for v in 0..width {
                    let _ = write!(out, ",{}", m.exponent(v));
                }
                out.push('\n');
            }
            out
        }
    }
}

fn run_verify(
    identity: &str,
    nmax: Option<usize>,
    kmax: Option<usize>,
    seed: u64,
    format: Format,
    limits: &Limits,
) -> Result<String, Failure> {
    let ids: Vec<IdentityId> = if identity == "all" {
        IdentityId::DEFAULT.to_vec()
    } else {
        vec![identity.parse()?]
    };
    let started = Instant::now();
    let reports: Vec<IdentityReport> = if nmax.is_none() && kmax.is_none() {
        verify::run_suite(&ids, seed, limits)?
    } else {
        ids.iter()
            .map(|&id| {
                let (dn, dk) = id.default_range();
                verify::run_identity_with_limits(id, nmax.unwrap_or(dn), kmax.unwrap_or(dk), seed, limits)
            })
            .collect::<Result<_, _>>()?
    };
    for r in &reports {
        eprintln!("{:<22} {:>9.3} ms", r.identity.name(), r.elapsed.as_secs_f64() * 1e3);
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    eprintln!(
        "{passed}/{} identities passed in {:.3} s",
        reports.len(),
        started.elapsed().as_secs_f64()
    );
    let out = match format {
        Format::Text => reports.iter().map(|r| r.to_line() + "\n").collect(),
        Format::Json => verify::reports_to_json(&reports) + "\n",
        Format::Csv => reports_to_csv(&reports),
    };
    if passed == reports.len() {
        Ok(out)
    } else {
        print!("{out}");
        Err(Failure::Verification)
    }
}

fn reports_to_csv(reports: &[IdentityReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["identity", "nmax", "kmax", "passed", "checked", "n", "k", "context", "lhs", "rhs"])
        .expect("in-memory csv");
    for r in reports {
        let c = r.counterexample.as_ref();
        w.write_record([
            r.identity.name().to_string(),
            r.nmax.to_string(),
            r.kmax.to_string(),
            r.passed.to_string(),
            r.checked.to_string(),
            c.map(|c| c.n.to_string()).unwrap_or_default(),
            c.and_then(|c| c.k).map(|k| k.to_string()).unwrap_or_default(),
            c.map(|c| c.context.clone()).unwrap_or_default(),
            c.map(|c| c.lhs.clone()).unwrap_or_default(),
            c.map(|c| c.rhs.clone()).unwrap_or_default(),
        ])
        .expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("csv is utf-8")
}

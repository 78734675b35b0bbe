//! Command-line front end for the `constacyclic` library.
//!
//! Exit codes: 0 success (a claim that fails its check is a finding, not an
//! error), 1 usage error, 2 mathematical precondition violation, 3 cap
//! exceeded, 4 I/O error.

mod parse;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use constacyclic::{
    gray_image, run_claims, Caps, ClaimId, CodeFile, Error, Fp, Grid, GrayLayout, PolyFp, RingCtx,
    ShiftKind, SigmaTriple, UnitKind, ALL_CLAIMS,
};

use parse::{parse_list, parse_poly};

/// Tools for (1 - 2u^k)-constacyclic codes over F_p[u]/(u^{k+1} - u).
#[derive(Parser)]
#[command(name = "constacyclic", version, disable_help_subcommand = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Factor a polynomial over F_p into monic irreducibles
    Factor {
        /// Prime modulus (2 is allowed here, unlike the ring subcommands)
        #[arg(long)]
        p: u32,
        /// Polynomial in the variable a, e.g. "a^7-1"
        #[arg(long)]
        poly: String,
    },
    /// Print lambda, the sigma elements, and the idempotent identity report
    RingInfo {
        /// Odd prime modulus
        #[arg(long)]
        p: u32,
        /// Nilpotency parameter of the coefficient ring (k >= 2)
        #[arg(long)]
        k: u32,
    },
    /// Build, transform, and inspect code files
    #[command(subcommand)]
    Code(CodeCmd),
    /// Check the library's theorem catalogue over a parameter grid
    #[command(subcommand)]
    Theorems(TheoremsCmd),
}

#[derive(Subcommand)]
enum CodeCmd {
    /// Build the code generated by sigma_1 h1(a), sigma_2 h2(a), sigma_3 h3(a)
    Build {
        /// Odd prime modulus
        #[arg(long)]
        p: u32,
        /// Nilpotency parameter (the construction requires k = 2)
        #[arg(long)]
        k: u32,
        /// Code length
        #[arg(long)]
        m: u32,
        /// Divisor of a^m - 1 over F_p
        #[arg(long)]
        h1: String,
        /// Divisor of a^m + 1 over F_p
        #[arg(long)]
        h2: String,
        /// Divisor of a^m + 1 over F_p
        #[arg(long)]
        h3: String,
        /// Write the code as a JSON file here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the dual of a stored code
    Dual {
        /// Input code file (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Write the dual here; without this the JSON goes to stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Gray image of a stored code as a generator matrix
    Gray {
        /// Input code file (JSON)
        #[arg(long)]
        input: PathBuf,
    },
    /// Compute the minimum Hamming distance by bounded enumeration
    Distance {
        /// Input code file (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Largest codeword count the enumeration may visit
        #[arg(long, default_value_t = 1_000_000)]
        cap: u64,
    },
    /// Report which coordinate shifts leave a stored code invariant
    Check {
        /// Input code file (JSON)
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Subcommand)]
enum TheoremsCmd {
    /// Run every claim (or one claim) over the grid and print the report
    Run {
        /// Comma-separated odd primes
        #[arg(long, default_value = "3,5")]
        p: String,
        /// Comma-separated k values
        #[arg(long, default_value = "2")]
        k: String,
        /// Comma-separated lengths
        #[arg(long, default_value = "1,2,3")]
        m: String,
        /// Seed for sampled strategies
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Restrict the run to a single claim id, e.g. T2.6
        #[arg(long)]
        id: Option<String>,
        /// Largest domain enumerated exhaustively
        #[arg(long, default_value_t = 100_000)]
        enum_cap: u64,
        /// Number of seeded draws when a domain exceeds the enumeration cap
        #[arg(long, default_value_t = 1_000)]
        sample_size: u64,
        /// Cap for minimum-distance enumerations inside checks
        #[arg(long, default_value_t = 1_000_000)]
        distance_cap: u64,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// An error that terminates the process with a specific exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: 1, message: message.into() }
    }

    fn math(message: impl Into<String>) -> Failure {
        Failure { code: 2, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Failure {
        Failure { code: 4, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::CapExceeded { .. } => 3,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Restore the default SIGPIPE disposition so that truncated output (e.g.
/// piping a long report into `head`) ends the process quietly instead of
/// panicking on a closed stdout.
fn reset_sigpipe() {
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests print to stdout and succeed; real
            // parse errors print to stderr and exit 1 (clap's own default
            // would be 2, which this tool reserves for math preconditions).
            let code = u8::from(e.use_stderr());
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Factor { p, poly } => cmd_factor(p, &poly),
        Command::RingInfo { p, k } => cmd_ring_info(p, k),
        Command::Code(cmd) => match cmd {
            CodeCmd::Build { p, k, m, h1, h2, h3, out } => {
                cmd_build(p, k, m, &h1, &h2, &h3, out.as_deref())
            }
            CodeCmd::Dual { input, out } => cmd_dual(&input, out.as_deref()),
            CodeCmd::Gray { input } => cmd_gray(&input),
            CodeCmd::Distance { input, cap } => cmd_distance(&input, cap),
            CodeCmd::Check { input } => cmd_check(&input),
        },
        Command::Theorems(TheoremsCmd::Run {
            p,
            k,
            m,
            seed,
            format,
            id,
            enum_cap,
            sample_size,
            distance_cap,
            out,
        }) => cmd_theorems(
            &p,
            &k,
            &m,
            seed,
            format,
            id.as_deref(),
            Caps { enum_cap, sample_size, distance_cap },
            out.as_deref(),
        ),
    }
}

fn cmd_factor(p: u32, poly: &str) -> Result<(), Failure> {
    let fp = Fp::new(p)?;
    let f = parse_poly(fp, poly).map_err(Failure::usage)?;
    let factorization = f.factor(0)?;
    println!("{f} = {factorization}");
    Ok(())
}

fn cmd_ring_info(p: u32, k: u32) -> Result<(), Failure> {
    if k < 2 {
        return Err(Failure::math(format!(
            "ring-info needs k >= 2 (got {k}): sigma_2 and sigma_3 are undefined at k = 1"
        )));
    }
    let ctx = RingCtx::new(p, k as usize)?;
    println!("lambda  = {}", ctx.lambda());
    for i in 1..=3u8 {
        println!("sigma_{} = {}", i, ctx.sigma(i)?);
    }
    print!("{}", ctx.idempotent_report()?);
    Ok(())
}

fn cmd_build(
    p: u32,
    k: u32,
    m: u32,
    h1: &str,
    h2: &str,
    h3: &str,
    out: Option<&Path>,
) -> Result<(), Failure> {
    constacyclic::validate_params(u64::from(p), u64::from(k), u64::from(m))?;
    let fp = Fp::new_odd(p)?;
    let ctx = RingCtx::new(p, k as usize)?;
    let length = m as usize;
    let polys = [
        parse_poly(fp, h1).map_err(Failure::usage)?,
        parse_poly(fp, h2).map_err(Failure::usage)?,
        parse_poly(fp, h3).map_err(Failure::usage)?,
    ];
    let cyclic_mod = PolyFp::binomial(fp, length, 1);
    let nega_mod = PolyFp::binomial(fp, length, -1);
    let moduli = [(&cyclic_mod, "-"), (&nega_mod, "+"), (&nega_mod, "+")];
    for (i, (h, (modulus, sign))) in polys.iter().zip(moduli).enumerate() {
        if !h.divides(modulus) {
            return Err(Failure::math(format!(
                "h{} = {} does not divide a^{} {} 1 over F_{}",
                i + 1,
                h,
                m,
                sign,
                p
            )));
        }
    }
    let triple = SigmaTriple::from_divisors(fp, length, [&polys[0], &polys[1], &polys[2]]);
    let code = triple.build(ctx)?;
    match code.size() {
        Some(n) => println!("|L| = {} = {}^{}", n, p, code.fp_dim()),
        None => println!("|L| = {}^{}", p, code.fp_dim()),
    }
    println!("h(a) = {}", triple.single_generator(ctx)?);
    if let Some(path) = out {
        let file = CodeFile::for_r_code(&code, UnitKind::Lambda);
        write_text(path, &file.to_json())?;
        println!("wrote {}", path.display());
    }
    Ok(())
}

fn cmd_dual(input: &Path, out: Option<&Path>) -> Result<(), Failure> {
    let file = load_code_file(input)?;
    let dual_file = if file.is_fp_layout() {
        let dual = file.as_fp_code()?.dual();
        CodeFile::for_fp_code(&dual, file.unit)
    } else {
        let dual = file.as_r_code()?.dual_r();
        CodeFile::for_r_code(&dual, file.unit)
    };
    let json = dual_file.to_json();
    match out {
        Some(path) => {
            write_text(path, &json)?;
            println!("wrote {}", path.display());
        }
        None => println!("{json}"),
    }
    Ok(())
}

fn cmd_gray(input: &Path) -> Result<(), Failure> {
    let file = load_code_file(input)?;
    if file.is_fp_layout() {
        return Err(Failure::math(
            "the Gray map applies to codes over R, but this file stores a plain F_p code"
                .to_string(),
        ));
    }
    let code = file.as_r_code()?;
    let layout = GrayLayout::new(code.ctx());
    let image = gray_image(&layout, &code);
    match image.size() {
        Some(n) => println!(
            "Gray image over F_{}: length {}, dim {}, |image| = {}",
            file.p,
            image.length(),
            image.dim(),
            n
        ),
        None => println!(
            "Gray image over F_{}: length {}, dim {}",
            file.p,
            image.length(),
            image.dim()
        ),
    }
    if image.dim() == 0 {
        println!("(zero code)");
    } else {
        println!("generator matrix:");
        for row in image.generator_rows() {
            let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            println!("  {}", cells.join(" "));
        }
    }
    Ok(())
}

fn cmd_distance(input: &Path, cap: u64) -> Result<(), Failure> {
    let file = load_code_file(input)?;
    let d = if file.is_fp_layout() {
        file.as_fp_code()?.min_distance(cap)?
    } else {
        file.as_r_code()?.min_distance(cap)?
    };
    println!("minimum Hamming distance = {d}");
    Ok(())
}

fn cmd_check(input: &Path) -> Result<(), Failure> {
    let file = load_code_file(input)?;
    if file.is_fp_layout() {
        let code = file.as_fp_code()?;
        println!("alpha-invariant: {}", code.is_invariant(ShiftKind::Alpha));
        println!("beta-invariant: {}", code.is_invariant(ShiftKind::Beta));
    } else {
        let code = file.as_r_code()?;
        println!("gamma-invariant: {}", code.is_invariant(ShiftKind::Gamma));
        println!("alpha-invariant: {}", code.is_invariant(ShiftKind::Alpha));
        println!("beta-invariant: {}", code.is_invariant(ShiftKind::Beta));
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_theorems(
    p: &str,
    k: &str,
    m: &str,
    seed: u64,
    format: Format,
    id: Option<&str>,
    caps: Caps,
    out: Option<&Path>,
) -> Result<(), Failure> {
    let ps = parse_list(p).map_err(Failure::usage)?;
    let ks = parse_list(k).map_err(Failure::usage)?;
    let ms = parse_list(m).map_err(Failure::usage)?;
    for &pv in &ps {
        Fp::new_odd(pv)?;
    }
    for &kv in &ks {
        if kv == 0 {
            return Err(Error::InvalidK(0).into());
        }
    }
    for &mv in &ms {
        if mv == 0 {
            return Err(Error::InvalidLength(0).into());
        }
    }
    let claims: Vec<ClaimId> = match id {
        Some(text) => {
            let claim = ClaimId::parse(text).map_err(|_| {
                let known: Vec<String> = ALL_CLAIMS.iter().map(|c| c.to_string()).collect();
                Failure::usage(format!(
                    "unknown claim id {:?}; known ids: {}",
                    text,
                    known.join(", ")
                ))
            })?;
            vec![claim]
        }
        None => ALL_CLAIMS.to_vec(),
    };
    let grid = Grid { ps, ks, ms };
    let report = run_claims(&claims, &grid, seed, &caps)?;
    let rendered = match format {
        Format::Text => report.to_table(),
        Format::Json => report.to_json(),
    };
    match out {
        Some(path) => {
            write_text(path, &rendered)?;
            println!("wrote {}", path.display());
        }
        None => print!("{rendered}"),
    }
    Ok(())
}

fn load_code_file(path: &Path) -> Result<CodeFile, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::io(format!("cannot read {}: {}", path.display(), e)))?;
    CodeFile::from_json(&text).map_err(|e| match e {
        // A file that does not deserialize or carries out-of-range entries is
        // a broken artifact (I/O class); a well-formed file with impossible
        // parameters (composite p, m = 0) is a math precondition failure.
        Error::BadPayload(msg) => Failure::io(format!("{}: {}", path.display(), msg)),
        other => Failure { code: 2, message: format!("{}: {}", path.display(), other) },
    })
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text)
        .map_err(|e| Failure::io(format!("cannot write {}: {}", path.display(), e)))
}

//! Command-line front end for the `mdscode` library: build generator
//! matrices, certify the MDS property, encode/decode words, run the
//! dimension-3 maximum-length search, and regenerate the sample codes.
//!
//! Exit codes: 0 for success (certify: verdict true), 1 for a false
//! verdict or a decoding failure, 2 for usage, parse, and budget errors.
//! Row and column indices are 1-based on this surface; the library
//! underneath is 0-based.

use std::fmt::Write as _;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use mdscode::matfile::{read_matrix, write_matrix};
use mdscode::{
    CertifyMode, Error, FieldContext, FieldElement, FieldMatrix, LinearCode, MdsCertificate,
    Provenance, RowSelection, Word, certify_matrix, code_from_rows, encode, erasure_decode,
    error_decode, extend_identity_columns_dim3_with, extend_two_columns, factor_prime_power,
    field_build, max_length_dim3,
};

#[derive(Parser)]
#[command(
    name = "mdscode",
    version,
    about = "MDS codes from Fourier matrices over small finite fields"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Construct a generator matrix and write it as a matrix file
    Build(BuildArgs),
    /// Check the MDS property of a generator matrix file
    Certify(CertifyArgs),
    /// Encode a message with the code in a matrix file
    Encode(CodecArgs),
    /// Decode a received word ('?' marks an erased symbol)
    Decode(CodecArgs),
    /// Find the maximum length of an [n, 3] MDS code over GF(q)
    Search(SearchArgs),
    /// Regenerate and certify the built-in sample codes
    Demo(DemoArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// Rows of the Fourier matrix of the multiplicative group
    Fourier,
    /// Fourier rows plus the two standard-basis front columns ([q+1, r])
    Extended,
    /// Identity block plus three Fourier rows ([q+2, 3], even q only)
    Even3,
}

impl Kind {
    fn name(self) -> &'static str {
        match self {
            Kind::Fourier => "fourier",
            Kind::Extended => "extended",
            Kind::Even3 => "even3",
        }
    }
}

#[derive(Args)]
struct BuildArgs {
    /// Field characteristic (a prime)
    #[arg(short)]
    p: u64,
    /// Extension degree, giving order q = p^m
    #[arg(short, default_value_t = 1)]
    m: u32,
    #[arg(long, value_enum)]
    kind: Kind,
    /// First selected Fourier row (1-based)
    #[arg(long, default_value_t = 1)]
    start: usize,
    /// Number of selected rows (the code dimension r); even3 fixes 3
    #[arg(long)]
    count: Option<usize>,
    /// Arithmetic step between selected rows, coprime to q - 1
    #[arg(long, default_value_t = 1)]
    step: usize,
    /// Output file (stdout when omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct CertifyArgs {
    /// Generator matrix file
    file: PathBuf,
    /// full | sampled:<count>:<seed>
    #[arg(long, default_value = "full")]
    mode: String,
    /// Override the exhaustive-enumeration budget (number of minors)
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Args)]
struct CodecArgs {
    /// Generator matrix file
    file: PathBuf,
    /// Symbols (integers below q; decode also accepts '?'); read from
    /// stdin when omitted
    symbols: Vec<String>,
}

#[derive(Args)]
struct SearchArgs {
    /// Field order q = p^m (prime power, at most 9)
    q: u64,
    /// Write the maximum-length witness generator to this file
    #[arg(long)]
    witness_out: Option<PathBuf>,
}

#[derive(Args)]
struct DemoArgs {
    /// Also write the sample matrices into this directory
    #[arg(long)]
    out_dir: Option<PathBuf>,
}

/// Library errors keep their own exit-code mapping; usage problems the
/// library never sees (bad mode strings, missing counts) carry text.
enum CliError {
    Lib(Error),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            // Data-dependent failures: the input was well-formed but not
            // decodable / recoverable.
            CliError::Lib(Error::DecodingFailure)
            | CliError::Lib(Error::TooManyErasures { .. })
            | CliError::Lib(Error::Singular) => 1,
            _ => 2,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Lib(e) => e.to_string(),
            CliError::Usage(m) => m.clone(),
        }
    }
}

fn main() {
    // Die quietly when a downstream pipe closes (e.g. `mdscode demo | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Build(args) => cmd_build(args),
        Cmd::Certify(args) => cmd_certify(args),
        Cmd::Encode(args) => cmd_encode(args),
        Cmd::Decode(args) => cmd_decode(args),
        Cmd::Search(args) => cmd_search(args),
        Cmd::Demo(args) => cmd_demo(args),
    };
    match result {
        Ok(code) => process::exit(code),
        Err(e) => {
            eprintln!("error: {}", e.message());
            process::exit(e.exit_code());
        }
    }
}

fn cmd_build(args: BuildArgs) -> Result<i32, CliError> {
    let (code, provenance) = build_code(&args)?;
    let text = write_matrix(code.generator(), Some(&provenance));
    match &args.output {
        Some(path) => {
            std::fs::write(path, &text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
        }
        None => print!("{text}"),
    }
    Ok(0)
}

fn build_code(args: &BuildArgs) -> Result<(LinearCode, String), CliError> {
    if args.start == 0 {
        return Err(usage("--start is 1-based; the first row is 1"));
    }
    let ctx = field_build(args.p, args.m)?;
    let count = match (args.kind, args.count) {
        (Kind::Even3, None) => 3,
        (Kind::Even3, Some(c)) if c != 3 => {
            return Err(usage("--kind even3 always selects exactly 3 rows"));
        }
        (Kind::Even3, Some(c)) => c,
        (_, Some(c)) => c,
        (_, None) => return Err(usage("--count is required for this kind")),
    };
    let sel = RowSelection::new(args.start - 1, count, args.step);
    let code = match args.kind {
        Kind::Fourier => code_from_rows(&ctx, sel)?,
        Kind::Extended => extend_two_columns(&code_from_rows(&ctx, sel)?)?,
        Kind::Even3 => extend_identity_columns_dim3_with(&ctx, sel)?,
    };
    let provenance = format!(
        "build p={} m={} kind={} start={} count={} step={}",
        args.p,
        args.m,
        args.kind.name(),
        args.start,
        count,
        args.step
    );
    Ok((code, provenance))
}

fn parse_mode(s: &str) -> Result<CertifyMode, CliError> {
    if s == "full" {
        return Ok(CertifyMode::Full);
    }
    if let Some(rest) = s.strip_prefix("sampled:") {
        let parts: Vec<&str> = rest.split(':').collect();
        if parts.len() == 2 {
            let count = parts[0].parse().map_err(|_| usage("bad sample count"))?;
            let seed = parts[1].parse().map_err(|_| usage("bad sample seed"))?;
            return Ok(CertifyMode::Sampled { count, seed });
        }
    }
    Err(usage(format!("unknown mode '{s}'; use full or sampled:<count>:<seed>")))
}

fn read_matrix_file(path: &Path) -> Result<(FieldMatrix, Option<String>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(read_matrix(&text)?)
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|&i| i + 1).collect()
}

fn print_certificate(cert: &MdsCertificate) {
    println!("mode: {}", cert.mode);
    println!("minors checked: {}", cert.minors_checked);
    println!("verdict: {}", if cert.verdict { "MDS" } else { "NOT MDS" });
    if let Some((rows, cols)) = &cert.counterexample {
        println!(
            "zero minor at rows {:?}, columns {:?} (1-based)",
            one_based(rows),
            one_based(cols)
        );
    }
}

fn cmd_certify(args: CertifyArgs) -> Result<i32, CliError> {
    let mode = parse_mode(&args.mode)?;
    let (matrix, _) = read_matrix_file(&args.file)?;
    let ctx = matrix.context();
    let budget = args.budget.or(Some(mdscode::DEFAULT_MINOR_BUDGET));
    let cert = certify_matrix(&matrix, mode, budget)?;
    println!("file: {}", args.file.display());
    println!("field: {} (omega = {})", ctx, ctx.omega());
    println!("code: [{}, {}]", matrix.cols(), matrix.rows());
    print_certificate(&cert);
    Ok(if cert.verdict { 0 } else { 1 })
}

fn gather_symbols(args: &CodecArgs) -> Result<Vec<String>, CliError> {
    if !args.symbols.is_empty() {
        return Ok(args.symbols.clone());
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| usage(format!("cannot read stdin: {e}")))?;
    Ok(buf.split_whitespace().map(str::to_string).collect())
}

fn parse_elements(ctx: &Arc<FieldContext>, toks: &[String]) -> Result<Vec<FieldElement>, CliError> {
    toks.iter()
        .map(|t| {
            let v = t.parse::<u64>().map_err(|_| usage(format!("bad symbol '{t}'")))?;
            Ok(ctx.element(v)?)
        })
        .collect()
}

fn join_symbols(symbols: &[FieldElement]) -> String {
    let mut out = String::new();
    for (i, s) in symbols.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{s}").unwrap();
    }
    out
}

fn cmd_encode(args: CodecArgs) -> Result<i32, CliError> {
    let (matrix, _) = read_matrix_file(&args.file)?;
    let code = LinearCode::from_generator(matrix, Provenance::External)?;
    let toks = gather_symbols(&args)?;
    let message = parse_elements(code.field(), &toks)?;
    let word = encode(&code, &message)?;
    println!("{word}");
    Ok(0)
}

fn cmd_decode(args: CodecArgs) -> Result<i32, CliError> {
    let (matrix, _) = read_matrix_file(&args.file)?;
    let code = LinearCode::from_generator(matrix, Provenance::External)?;
    let toks = gather_symbols(&args)?;
    let ctx = code.field().clone();
    let mut symbols = Vec::with_capacity(toks.len());
    let mut mask = Vec::with_capacity(toks.len());
    for t in &toks {
        if t == "?" {
            symbols.push(FieldElement::ZERO);
            mask.push(true);
        } else {
            let v = t.parse::<u64>().map_err(|_| usage(format!("bad symbol '{t}'")))?;
            symbols.push(ctx.element(v)?);
            mask.push(false);
        }
    }
    let erased = mask.iter().any(|&e| e);
    let result = if erased {
        let word = Word::with_erasures(symbols, mask)?;
        erasure_decode(&code, &word)?
    } else {
        error_decode(&code, &Word::new(symbols))?
    };
    eprintln!("corrections: {}", result.corrections);
    println!("{}", join_symbols(&result.message));
    Ok(0)
}

fn cmd_search(args: SearchArgs) -> Result<i32, CliError> {
    if args.q > 9 {
        return Err(usage("full searches are capped at q <= 9"));
    }
    let (p, m) = factor_prime_power(args.q)
        .ok_or_else(|| usage(format!("{} is not a prime power", args.q)))?;
    let ctx = field_build(p, m)?;
    let report = max_length_dim3(&ctx)?;
    println!("q = {}", report.q);
    println!("max_n = {}", report.max_n);
    println!("candidates examined: {}", report.candidates_examined);
    println!("normalization: {}", report.normalization);
    let witness = report.witness.expect("max-length report carries a witness");
    let provenance = format!("search witness q={} n={}", report.q, report.max_n);
    let text = write_matrix(witness.generator(), Some(&provenance));
    match &args.witness_out {
        Some(path) => {
            std::fs::write(path, &text)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            println!("witness: {}", path.display());
        }
        None => {
            println!("witness:");
            print!("{text}");
        }
    }
    Ok(0)
}

struct DemoSample {
    label: &'static str,
    file_stem: &'static str,
    code: LinearCode,
    provenance: String,
    mode: CertifyMode,
}

fn demo_samples() -> Result<Vec<DemoSample>, CliError> {
    let build = |p: u64, m: u32, kind: Kind, count: usize| BuildArgs {
        p,
        m,
        kind,
        start: 1,
        count: Some(count),
        step: 1,
        output: None,
    };
    let samples = [
        ("GF(9) [10,4] extended", "gf9_10_4", build(3, 2, Kind::Extended, 4), CertifyMode::Full),
        ("GF(8) [10,3] even3", "gf8_10_3", build(2, 3, Kind::Even3, 3), CertifyMode::Full),
        ("GF(27) [28,4] extended", "gf27_28_4", build(3, 3, Kind::Extended, 4), CertifyMode::Full),
        // C(258, 4) is around 1.8e8 minors, past the exhaustive budget,
        // so the largest sample is certified by seeded sampling.
        (
            "GF(257) [258,4] extended",
            "gf257_258_4",
            build(257, 1, Kind::Extended, 4),
            CertifyMode::Sampled { count: 100_000, seed: 42 },
        ),
    ];
    let mut out = Vec::new();
    for (label, file_stem, args, mode) in samples {
        let (code, provenance) = build_code(&args)?;
        out.push(DemoSample { label, file_stem, code, provenance, mode });
    }
    Ok(out)
}

fn cmd_demo(args: DemoArgs) -> Result<i32, CliError> {
    let samples = demo_samples()?;
    let mut all_mds = true;
    println!(
        "{:<28} {:<26} {:>6} {:<32} {:>8} {}",
        "sample", "field", "omega", "mode", "minors", "verdict"
    );
    let mut files = Vec::new();
    for sample in &samples {
        let ctx = sample.code.field().clone();
        let cert = certify_matrix(sample.code.generator(), sample.mode, None)?;
        all_mds &= cert.verdict;
        println!(
            "{:<28} {:<26} {:>6} {:<32} {:>8} {}",
            sample.label,
            ctx.spec().to_string(),
            ctx.omega().to_string(),
            sample.mode.to_string(),
            cert.minors_checked,
            if cert.verdict { "MDS" } else { "NOT MDS" }
        );
        files.push((sample.file_stem, write_matrix(sample.code.generator(), Some(&sample.provenance))));
    }
    if let Some(dir) = &args.out_dir {
        std::fs::create_dir_all(dir)
            .map_err(|e| usage(format!("cannot create {}: {e}", dir.display())))?;
        for (stem, text) in &files {
            let path = dir.join(format!("{stem}.mat"));
            std::fs::write(&path, text)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            println!("wrote {}", path.display());
        }
    }
    Ok(if all_mds { 0 } else { 1 })
}

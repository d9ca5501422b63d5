use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use phi_irred::certifier::{certify, verify_certificate_report, Certificate, ProblemInstance, Verdict};
use phi_irred::hermite::{
    certify_composed, certify_hermite, classical_hermite, generalized_hermite, HermiteCertificate,
    HermiteError, HermiteSpec,
};
use phi_irred::input::{parse_instance_file, InstanceFile};
use phi_irred::oracle::{
    cross_check, degree_sieve, integer_root_search, known_form_factor, prime_budget_from_env,
    CrossCheck,
};
use phi_irred::polygon::build_polygon;
use phi_irred::primes::is_prime;
use phi_irred::schur::{find_prime_in_odd_window, find_schur_prime};
use phi_irred::suite::{render_table, run_paper_examples};
use phi_irred::zpoly::phi_expand;
use phi_irred::IntPoly;

/// Newton-polygon irreducibility certificates for generalized Schur and
/// phi-Hermite polynomials.
#[derive(Parser)]
#[command(name = "phi-irred", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify an instance file (phi-irred/1 or phi-hermite/1).
    Certify(CertifyArgs),
    /// Print the phi-Newton polygon of a polynomial.
    Polygon(PolygonArgs),
    /// Print the phi-expansion of a polynomial.
    Expand {
        /// Polynomial, inline or a file holding one.
        f: String,
        #[arg(long)]
        phi: String,
    },
    /// Print or certify Hermite polynomials.
    Hermite(HermiteArgs),
    /// Search a run of consecutive odd numbers for a prime factor above 2k+1.
    Schur {
        #[arg(long)]
        k: u64,
        /// Window 2n+1, ..., 2n+2k-1.
        #[arg(long, conflicts_with = "start", required_unless_present = "start")]
        n: Option<u64>,
        /// Odd first member of the window.
        #[arg(long)]
        start: Option<u64>,
    },
    /// Integer roots, degree sieve and known factorization patterns.
    Oracle {
        f: String,
        #[arg(long)]
        phi: Option<String>,
        /// Good primes for the degree sieve (default from PHI_IRRED_PRIME_BUDGET, else 25).
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run the built-in examples and print a pass/fail table.
    PaperExamples,
}

#[derive(Args)]
struct CertifyArgs {
    path: PathBuf,
    /// Also write the certificate as JSON.
    #[arg(long)]
    json_out: Option<PathBuf>,
    /// Replay the certificate independently.
    #[arg(long)]
    verify: bool,
    /// Compare the verdict with the oracle.
    #[arg(long)]
    cross_check: bool,
}

#[derive(Args)]
struct PolygonArgs {
    /// Polynomial, inline or a file holding one.
    f: String,
    #[arg(long)]
    phi: String,
    #[arg(long)]
    p: u64,
    /// Tab-separated points for plotting.
    #[arg(long)]
    tsv: bool,
}

#[derive(Args)]
struct HermiteArgs {
    #[arg(long)]
    m: u64,
    #[arg(long)]
    phi: Option<String>,
    /// H_m, or H_m(phi(x)) with --phi (the default).
    #[arg(long, group = "mode")]
    classical: bool,
    /// A phi-hermite/1 file.
    #[arg(long, group = "mode")]
    spec: Option<PathBuf>,
    /// H_m(phi(x)) with hypothesis primes below m.
    #[arg(long, group = "mode")]
    corollary: bool,
    #[arg(long)]
    certify: bool,
}

/// Exit with a diagnostic and code 1.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CmdResult = Result<ExitCode, Failure>;

fn read_poly(arg: &str) -> Result<IntPoly, Failure> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        fs::read_to_string(path)?
    } else {
        arg.to_string()
    };
    let text = text.trim();
    if text.starts_with('[') {
        let lits: Vec<String> = serde_json::from_str(text)?;
        return Ok(IntPoly::from_literal(&lits)?);
    }
    text.parse::<IntPoly>().map_err(|e| Failure(format!("{arg:?}: {e}")))
}

fn verdict_code(v: Verdict) -> ExitCode {
    match v {
        Verdict::Irreducible => ExitCode::SUCCESS,
        Verdict::HypothesisFailed => ExitCode::from(2),
        Verdict::Inconclusive => ExitCode::from(3),
    }
}

fn print_cross_check(cc: &CrossCheck) {
    println!("oracle    integer roots: {:?}{}", cc.roots.roots.iter().map(ToString::to_string).collect::<Vec<_>>(),
        if cc.roots.exhaustive { "" } else { " (divisor search truncated)" });
    if let Some(k) = &cc.known_form {
        println!("oracle    known form: {}", k.render());
    }
    println!("oracle    sieve: {}", cc.sieve.label());
    println!(
        "oracle    {}",
        if cc.contradiction { "CONTRADICTION with the certificate" } else { "consistent with the certificate" }
    );
}

fn finish_certificate(
    inst: &ProblemInstance,
    cert: &Certificate,
    odd_factor: Option<&IntPoly>,
    args: &CertifyArgs,
) -> CmdResult {
    println!("{cert}");
    if let Some(f) = odd_factor {
        println!("odd factor {f}");
    }
    if let Some(path) = &args.json_out {
        fs::write(path, cert.to_json() + "\n")?;
    }
    if args.verify {
        let report = verify_certificate_report(inst, cert);
        if report.ok() {
            println!("replay    ok");
        } else {
            for m in &report.mismatches {
                eprintln!("replay mismatch: {m}");
            }
            return Err(Failure("certificate does not replay".into()));
        }
    }
    if args.cross_check {
        let cc = cross_check(inst, cert);
        print_cross_check(&cc);
        if cc.contradiction {
            return Err(Failure("oracle contradicts the certificate".into()));
        }
    }
    Ok(verdict_code(cert.verdict))
}

fn cmd_certify(args: CertifyArgs) -> CmdResult {
    let text = fs::read_to_string(&args.path).map_err(|e| Failure(format!("{}: {e}", args.path.display())))?;
    match parse_instance_file(&text)? {
        InstanceFile::Problem(inst) => {
            let cert = certify(&inst);
            finish_certificate(&inst, &cert, None, &args)
        }
        InstanceFile::Hermite(spec) => match phi_irred::hermite::hermite_to_instance(&spec) {
            Ok(r) => {
                let cert = certify(&r.instance);
                finish_certificate(&r.instance, &cert, r.odd_factor.as_ref(), &args)
            }
            Err(e @ HermiteError::ThreePower { .. }) => {
                eprintln!("{e}");
                Ok(ExitCode::from(2))
            }
            Err(e) => Err(e.into()),
        },
    }
}

fn cmd_polygon(args: PolygonArgs) -> CmdResult {
    let f = read_poly(&args.f)?;
    let phi = read_poly(&args.phi)?;
    if !is_prime(args.p) {
        return Err(Failure(format!("{} is not prime", args.p)));
    }
    let np = build_polygon(&f, &phi, args.p)?;
    if args.tsv {
        println!("i\tv\tvertex");
        for &(i, v) in np.points() {
            println!("{i}\t{v}\t{}", u8::from(np.vertices().contains(&i)));
        }
        return Ok(ExitCode::SUCCESS);
    }
    let pts: Vec<String> = np.points().iter().map(|(i, v)| format!("({i}, {v})")).collect();
    println!("points    {}", pts.join(" "));
    println!("vertices  {:?}", np.vertices());
    let slopes: Vec<String> = np.slopes().iter().map(ToString::to_string).collect();
    println!("slopes    {}", slopes.join(" "));
    Ok(ExitCode::SUCCESS)
}

fn cmd_expand(f: &str, phi: &str) -> CmdResult {
    let f = read_poly(f)?;
    let phi = read_poly(phi)?;
    let e = phi_expand(&f, &phi)?;
    for (i, b) in e.terms().iter().enumerate() {
        if !b.is_zero() {
            println!("b_{i} = {b}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn report_hermite(hc: &HermiteCertificate) -> ExitCode {
    println!("{}", hc.certificate);
    if let Some(f) = &hc.odd_factor {
        println!("odd factor {f}");
    }
    verdict_code(hc.certificate.verdict)
}

fn cmd_hermite(args: HermiteArgs) -> CmdResult {
    let phi = args.phi.as_deref().map(read_poly).transpose()?;
    let spec = match &args.spec {
        Some(path) => match parse_instance_file(&fs::read_to_string(path)?)? {
            InstanceFile::Hermite(spec) => Some(spec),
            InstanceFile::Problem(_) => return Err(Failure("--spec expects a phi-hermite/1 file".into())),
        },
        None => None,
    };
    let m = spec.as_ref().map_or(args.m, HermiteSpec::m);
    let poly = match (&spec, &phi) {
        (Some(s), _) => generalized_hermite(s),
        (None, Some(phi)) => classical_hermite(m).compose(phi),
        (None, None) => classical_hermite(m),
    };
    println!("{poly}");
    if !args.certify {
        return Ok(ExitCode::SUCCESS);
    }
    let outcome = match spec {
        Some(s) => certify_hermite(&s),
        None if args.corollary => certify_composed(m, phi.unwrap_or_else(IntPoly::x)),
        None => HermiteSpec::classical_signs(m, phi.unwrap_or_else(IntPoly::x)).and_then(|s| certify_hermite(&s)),
    };
    match outcome {
        Ok(hc) => Ok(report_hermite(&hc)),
        Err(e @ HermiteError::ThreePower { .. }) => {
            eprintln!("{e}");
            Ok(ExitCode::from(2))
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_schur(k: u64, n: Option<u64>, start: Option<u64>) -> CmdResult {
    let (w, first) = match (n, start) {
        (Some(n), _) => (find_schur_prime(n, k)?, 2 * n + 1),
        (None, Some(s)) => (find_prime_in_odd_window(s, k)?, s),
        (None, None) => unreachable!("clap requires one of --n, --start"),
    };
    let last = first + 2 * (k - 1);
    match w {
        Some(w) => println!("{} divides {} in [{first}, {last}], {} > {}", w.p, w.divides, w.p, 2 * k + 1),
        None => println!("no prime > {} divides any odd number in [{first}, {last}]", 2 * k + 1),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_oracle(f: &str, phi: Option<&str>, budget: Option<usize>) -> CmdResult {
    let f = read_poly(f)?;
    if f.degree().unwrap_or(0) == 0 {
        return Err(Failure("oracle needs a polynomial of degree >= 1".into()));
    }
    let budget = budget.unwrap_or_else(prime_budget_from_env);
    let roots = integer_root_search(&f);
    let shown: Vec<String> = roots.roots.iter().map(ToString::to_string).collect();
    println!("roots     {shown:?}{}", if roots.exhaustive { "" } else { " (truncated)" });
    if let Some(phi) = phi {
        let phi = read_poly(phi)?;
        match known_form_factor(&f, &phi) {
            Some(k) => println!("form      {}", k.render()),
            None => println!("form      none"),
        }
    }
    let sieve = degree_sieve(&f, budget);
    println!("sieve     {}", sieve.label());
    println!("{}", serde_json::to_string(&sieve)?);
    Ok(ExitCode::SUCCESS)
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Certify(args) => cmd_certify(args),
        Command::Polygon(args) => cmd_polygon(args),
        Command::Expand { f, phi } => cmd_expand(&f, &phi),
        Command::Hermite(args) => cmd_hermite(args),
        Command::Schur { k, n, start } => cmd_schur(k, n, start),
        Command::Oracle { f, phi, budget } => cmd_oracle(&f, phi.as_deref(), budget),
        Command::PaperExamples => {
            let rows = run_paper_examples(prime_budget_from_env());
            print!("{}", render_table(&rows));
            Ok(if rows.iter().all(|r| r.pass) { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(cli) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("phi-irred: {msg}");
            ExitCode::FAILURE
        }
    };
    let _ = std::io::stdout().flush();
    code
}

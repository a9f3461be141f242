use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use peakqsym::format::{
    cd_polynomial_to_json, coefficient_map, parse_family, polynomial_to_json,
    rational_matrix_to_json, rationals_to_json, subset_key, PosetFile, QSymFile,
};
use peakqsym::peak::{c2d_index, cd_index, eulerian_projection, peak_membership, theta_expansion};
use peakqsym::selftest::{self, Depth};
use peakqsym::stembridge::{
    eta_closedform, gorenstein_cone, omega_theta, peak_distribution_enumerate, spectrum,
    walk_matrix, MAX_ENUMERATION_SIZE,
};
use peakqsym::toricg::{fg_poly_poset, g_on_qsym, toric_h};
use peakqsym::{Basis, CdWord, Error, ErrorKind, GradedPoset, QSym, Subset};

const EXIT_VALIDATION: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "peakqsym",
    version,
    about = "Flag enumeration and the peak algebra, exactly"
)]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Reports on a graded poset.
    Poset(PosetArgs),
    /// Operations on quasisymmetric functions stored as JSON files.
    Qsym {
        #[command(subcommand)]
        action: QsymAction,
    },
    /// Matrices and distributions attached to a fixed degree.
    Theta(ThetaArgs),
    /// Run the built-in acceptance checks.
    Selftest {
        #[arg(long, value_enum, default_value_t = DepthArg::Quick)]
        depth: DepthArg,
    },
}

#[derive(Args)]
struct PosetArgs {
    /// A built-in family such as `boolean:4`, `polygon:5`, `cube:3`.
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    family: Option<String>,
    /// A poset file with `elements` and `covers`.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    flag_vector: bool,
    #[arg(long)]
    h_vector: bool,
    #[arg(long)]
    k_vector: bool,
    #[arg(long)]
    eulerian: bool,
    #[arg(long)]
    cd_index: bool,
    #[arg(long)]
    c2d_index: bool,
    #[arg(long)]
    theta_expansion: bool,
    #[arg(long)]
    g: bool,
    #[arg(long)]
    toric_h: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    M,
    F,
    K,
}

impl From<BasisArg> for Basis {
    fn from(b: BasisArg) -> Self {
        match b {
            BasisArg::M => Basis::M,
            BasisArg::F => Basis::F,
            BasisArg::K => Basis::K,
        }
    }
}

#[derive(Subcommand)]
enum QsymAction {
    /// Rewrite an element in another basis.
    Convert {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        to: BasisArg,
    },
    /// Quasi-shuffle product of two elements.
    Multiply {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        to: BasisArg,
    },
    /// Deconcatenation coproduct, in the monomial basis.
    Coproduct {
        file: PathBuf,
    },
    Antipode {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        to: BasisArg,
    },
    /// Check the Dehn–Sommerville relations.
    Membership {
        file: PathBuf,
    },
    /// The element of the peak algebra sharing the right-sparse coefficients.
    Projection {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = BasisArg::M)]
        to: BasisArg,
    },
    /// Coordinates in the Θ basis.
    ThetaExpansion {
        file: PathBuf,
    },
    CdIndex {
        file: PathBuf,
    },
    /// The toric g-polynomial extended linearly.
    G {
        file: PathBuf,
    },
}

#[derive(Args)]
struct ThetaArgs {
    /// Degree n of the cd-words.
    #[arg(long, conflicts_with = "size", required_unless_present = "size")]
    degree: Option<u32>,
    /// Permutation size n+1, as an alternative to `--degree`.
    #[arg(long)]
    size: Option<u32>,
    #[arg(long)]
    eta: bool,
    #[arg(long)]
    spectrum: bool,
    #[arg(long)]
    omega: bool,
    #[arg(long)]
    walk: bool,
    #[arg(long)]
    peaks: bool,
    #[arg(long)]
    cone: bool,
    /// Largest degree accepted for matrix reports.
    #[arg(long, default_value_t = 12)]
    max_degree: u32,
    /// Largest permutation size accepted for `--peaks`.
    #[arg(long, default_value_t = 8)]
    max_size: u32,
}

#[derive(Clone, Copy, ValueEnum)]
enum DepthArg {
    Quick,
    Full,
}

/// A failed command: message for stderr, exit code, and an optional partial
/// report still worth printing.
struct Failure {
    code: u8,
    message: String,
    report: Option<Vec<(String, Value)>>,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Validation => EXIT_VALIDATION,
            ErrorKind::Precondition => EXIT_PRECONDITION,
            ErrorKind::Internal => EXIT_INTERNAL,
        };
        Failure {
            code,
            message: e.to_string(),
            report: None,
        }
    }
}

fn validation(message: String) -> Failure {
    Failure {
        code: EXIT_VALIDATION,
        message,
        report: None,
    }
}

type Reports = Vec<(String, Value)>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Poset(args) => cmd_poset(&args),
        Command::Qsym { action } => cmd_qsym(action),
        Command::Theta(args) => cmd_theta(&args),
        Command::Selftest { depth } => cmd_selftest(depth),
    };
    match result {
        Ok(reports) => {
            emit(&reports, cli.format);
            ExitCode::SUCCESS
        }
        Err(f) => {
            if let Some(reports) = &f.report {
                emit(reports, cli.format);
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(reports: &Reports, format: OutputFormat) {
    match format {
        OutputFormat::Json => {
            let value = if reports.len() == 1 {
                reports[0].1.clone()
            } else {
                Value::Object(reports.iter().cloned().collect::<Map<_, _>>())
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("JSON values serialize")
            );
        }
        OutputFormat::Text => {
            for (name, value) in reports {
                println!("{name}: {}", text(value));
            }
        }
    }
}

fn text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(text).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(map) => {
            let parts: Vec<String> = map
                .iter()
                .map(|(k, v)| {
                    let key = if k.is_empty() { "∅" } else { k.as_str() };
                    format!("{key} = {}", text(v))
                })
                .collect();
            format!("{{{}}}", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| validation(format!("{}: {e}", path.display())))
}

fn load_poset(args: &PosetArgs) -> Result<GradedPoset, Failure> {
    match (&args.family, &args.file) {
        (Some(name), _) => Ok(parse_family(name)?.build()?),
        (None, Some(path)) => Ok(PosetFile::parse(&read(path)?)?.to_poset()?),
        (None, None) => Err(validation("pass --family or --file".into())),
    }
}

fn keyed(values: &[peakqsym::Rational], n: u32) -> Value {
    let mut m = Map::new();
    for (bits, c) in values.iter().enumerate() {
        let s = Subset::from_bits(n, bits as u64).expect("index fits the ambient");
        m.insert(subset_key(&s), Value::String(c.to_string()));
    }
    Value::Object(m)
}

fn cmd_poset(args: &PosetArgs) -> Result<Reports, Failure> {
    let p = load_poset(args)?;
    let mut out = Reports::new();
    let any = args.flag_vector
        || args.h_vector
        || args.k_vector
        || args.eulerian
        || args.cd_index
        || args.c2d_index
        || args.theta_expansion
        || args.g
        || args.toric_h;
    let f = p.qsym();
    let needs_flags = args.flag_vector || args.h_vector || args.k_vector || !any;
    if needs_flags && p.rank() == 0 {
        return Err(validation("a rank-0 poset has no flag vector".into()));
    }
    if needs_flags {
        let n = p.rank() - 1;
        let fv = p.flag_vector()?;
        if args.flag_vector || !any {
            out.push(("flag_vector".into(), keyed(fv.values(), n)));
        }
        if args.h_vector {
            out.push(("h_vector".into(), keyed(fv.f_to_h().values(), n)));
        }
        if args.k_vector {
            out.push(("k_vector".into(), keyed(fv.f_to_h().h_to_k().values(), n)));
        }
    }
    if args.g {
        out.push(("g".into(), polynomial_to_json(&fg_poly_poset(&p).g)));
    }
    if args.toric_h {
        out.push(("toric_h".into(), rationals_to_json(&toric_h(&p))));
    }
    if args.eulerian {
        if let Err(e) = p.check_eulerian() {
            out.push(("eulerian".into(), Value::Bool(false)));
            return Err(Failure {
                report: Some(out),
                ..Failure::from(e)
            });
        }
        out.push(("eulerian".into(), Value::Bool(true)));
    }
    if args.cd_index || args.c2d_index || args.theta_expansion {
        if let Err(e) = peak_membership(&f) {
            return Err(Failure {
                report: Some(out),
                ..Failure::from(e)
            });
        }
    }
    if args.cd_index {
        out.push(("cd_index".into(), cd_polynomial_to_json(&cd_index(&f)?)));
    }
    if args.c2d_index {
        out.push(("c2d_index".into(), cd_polynomial_to_json(&c2d_index(&f)?)));
    }
    if args.theta_expansion {
        out.push((
            "theta_expansion".into(),
            cd_polynomial_to_json(&theta_expansion(&f)?),
        ));
    }
    Ok(out)
}

fn load_qsym(path: &Path) -> Result<QSym, Failure> {
    Ok(QSymFile::parse(&read(path)?)?.to_qsym()?)
}

fn coefficients(f: &QSym, basis: Basis) -> Result<Value, Failure> {
    if !f.is_homogeneous() {
        return Err(Error::NotHomogeneous.into());
    }
    let degree = f.degrees().first().copied().unwrap_or(0);
    let map = coefficient_map(f, degree, basis);
    Ok(Value::Object(
        map.into_iter()
            .map(|(k, v)| (k, Value::String(v)))
            .collect(),
    ))
}

fn cmd_qsym(action: QsymAction) -> Result<Reports, Failure> {
    let report = match action {
        QsymAction::Convert { file, to } => {
            ("convert", coefficients(&load_qsym(&file)?, to.into())?)
        }
        QsymAction::Multiply { left, right, to } => {
            let product = load_qsym(&left)?.multiply(&load_qsym(&right)?);
            ("multiply", coefficients(&product, to.into())?)
        }
        QsymAction::Coproduct { file } => {
            let terms = load_qsym(&file)?
                .coproduct()
                .terms()
                .map(|((a, b), c)| {
                    json!({
                        "left": a.composition().parts(),
                        "right": b.composition().parts(),
                        "coeff": c.to_string(),
                    })
                })
                .collect();
            ("coproduct", Value::Array(terms))
        }
        QsymAction::Antipode { file, to } => (
            "antipode",
            coefficients(&load_qsym(&file)?.antipode(), to.into())?,
        ),
        QsymAction::Membership { file } => {
            let f = load_qsym(&file)?;
            if let Err(e) = peak_membership(&f) {
                let report = vec![("membership".to_string(), Value::Bool(false))];
                return Err(Failure {
                    report: Some(report),
                    ..Failure::from(e)
                });
            }
            ("membership", Value::Bool(true))
        }
        QsymAction::Projection { file, to } => {
            let p = eulerian_projection(&load_qsym(&file)?)?;
            ("projection", coefficients(&p, to.into())?)
        }
        QsymAction::ThetaExpansion { file } => (
            "theta_expansion",
            cd_polynomial_to_json(&theta_expansion(&load_qsym(&file)?)?),
        ),
        QsymAction::CdIndex { file } => {
            let f = load_qsym(&file)?;
            peak_membership(&f)?;
            ("cd_index", cd_polynomial_to_json(&cd_index(&f)?))
        }
        QsymAction::G { file } => ("g", polynomial_to_json(&g_on_qsym(&load_qsym(&file)?))),
    };
    Ok(vec![(report.0.to_string(), report.1)])
}

fn words_json(words: &[CdWord]) -> Value {
    Value::Array(words.iter().map(|w| Value::String(w.to_key())).collect())
}

fn cmd_theta(args: &ThetaArgs) -> Result<Reports, Failure> {
    let n = match (args.degree, args.size) {
        (Some(n), _) => n,
        (None, Some(0)) => return Err(validation("--size must be positive".into())),
        (None, Some(s)) => s - 1,
        (None, None) => return Err(validation("pass --degree or --size".into())),
    };
    let any = args.eta || args.spectrum || args.omega || args.walk || args.peaks || args.cone;
    let matrices = args.eta || args.spectrum || args.omega || args.walk || args.cone || !any;
    if matrices && n > args.max_degree {
        return Err(validation(format!(
            "degree {n} exceeds --max-degree {}",
            args.max_degree
        )));
    }
    let max_size = args.max_size.min(MAX_ENUMERATION_SIZE);
    if args.peaks && n + 1 > max_size {
        return Err(validation(format!(
            "permutation size {} exceeds {max_size}",
            n + 1
        )));
    }
    let mut out = Reports::new();
    if args.eta || !any {
        let eta = eta_closedform(n);
        let rows = eta
            .entries()
            .iter()
            .map(|row| Value::Array(row.iter().map(|e| Value::String(e.to_string())).collect()))
            .collect();
        out.push(("eta".into(), Value::Array(rows)));
    }
    if args.spectrum {
        let pairs = spectrum(n);
        let eigenvalues = pairs
            .iter()
            .map(|e| Value::String(e.eigenvalue.to_string()))
            .collect();
        let vectors = pairs
            .iter()
            .map(|e| (e.word.to_key(), cd_polynomial_to_json(&e.vector)))
            .collect::<Map<_, _>>();
        out.push((
            "spectrum".into(),
            json!({ "eigenvalues": Value::Array(eigenvalues), "eigenvectors": vectors }),
        ));
    }
    if args.omega {
        let basis = peakqsym::combinat::cd_words(n)
            .into_iter()
            .map(|w| (w.to_key(), cd_polynomial_to_json(&omega_theta(&w))))
            .collect::<Map<_, _>>();
        out.push(("omega".into(), Value::Object(basis)));
    }
    if args.walk {
        let words = peakqsym::combinat::cd_words(n);
        out.push((
            "walk".into(),
            json!({ "words": words_json(&words), "matrix": rational_matrix_to_json(&walk_matrix(n)) }),
        ));
    }
    if args.peaks {
        let dist = peak_distribution_enumerate(n + 1)?;
        let counts = dist
            .counts()
            .iter()
            .map(|(s, c)| (subset_key(s), Value::String(c.to_string())))
            .collect::<Map<_, _>>();
        out.push(("peaks".into(), Value::Object(counts)));
    }
    if args.cone {
        let cone = gorenstein_cone(n);
        let eta_rows = cone
            .eta_rows
            .iter()
            .map(|(u, f)| (u.to_key(), cd_polynomial_to_json(f)))
            .collect::<Map<_, _>>();
        let h_rows = cone
            .h_rows
            .iter()
            .map(|(t, f)| (subset_key(t), cd_polynomial_to_json(f)))
            .collect::<Map<_, _>>();
        out.push((
            "cone".into(),
            json!({ "eta_rows": eta_rows, "h_rows": h_rows }),
        ));
    }
    Ok(out)
}

fn cmd_selftest(depth: DepthArg) -> Result<Reports, Failure> {
    let depth = match depth {
        DepthArg::Quick => Depth::Quick,
        DepthArg::Full => Depth::Full,
    };
    let mut rows = Vec::new();
    let mut first_failure = None;
    for c in selftest::criteria() {
        let o = c.run(depth);
        if !o.passed() && first_failure.is_none() {
            let why = o
                .failure
                .clone()
                .unwrap_or_else(|| "time limit exceeded".into());
            first_failure = Some(format!("criterion {} ({}): {why}", o.id, o.name));
        }
        rows.push(json!({
            "id": o.id,
            "name": o.name,
            "passed": o.passed(),
            "seconds": format!("{:.3}", o.elapsed.as_secs_f64()),
            "counterexample": o.failure,
        }));
    }
    let report = vec![("selftest".to_string(), Value::Array(rows))];
    match first_failure {
        None => Ok(report),
        Some(message) => Err(Failure {
            code: EXIT_INTERNAL,
            message,
            report: Some(report),
        }),
    }
}

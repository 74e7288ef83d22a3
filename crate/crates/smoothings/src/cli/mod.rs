//! Command-line front end. [`run`] does the work so that the binary stays
//! a thin wrapper and the commands can be driven from tests.
//!
//! Exit codes: 0 ok, 2 parse or invalid input, 3 hypothesis not met,
//! 4 answer needs an assertion, 5 internal inconsistency or failed rows.

mod ops;
mod verify;
mod zoo;

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::classifier::{classify, ClassificationResult, ClassifyError};
use crate::cohomops::OpsError;
use crate::complex_core::{boundary_of_simplex, product_complex, read_facet_file};
use crate::profile::{
    extract_profile, nine_case, profile_connected_sum, profile_lens9, profile_rp, profile_sphere, ten_case,
    Assertions, CohomProfile, OpValue, ProfileError,
};

pub use zoo::{zoo_rows, ZooRow, ZooTable};

#[derive(Debug, Parser)]
#[command(name = "smoothings", version, about = "Smoothings of closed manifolds of dimension 7 to 10")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build or extract a cohomology profile.
    Profile {
        #[command(flatten)]
        input: ProfileInput,
        /// Write the profile/1 file here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify smoothings from a profile.
    Classify {
        #[command(flatten)]
        input: ProfileInput,
        /// Read a profile/1 file instead of building one.
        #[arg(long, conflicts_with_all = ["complex", "builder"])]
        profile: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Regression tables with expected values.
    Zoo {
        #[arg(long, value_enum)]
        table: ZooTable,
    },
    /// Apply one cohomology operation to a basis class.
    Ops {
        /// Facet file, or `moore:M:K` for the Moore chain complex.
        #[arg(long)]
        complex: String,
        /// sq1, sq2, sq3, d2, sq2d2, beta:R or cup.
        #[arg(long)]
        op: String,
        /// Basis class `DEGREE:INDEX:MODULUS`.
        #[arg(long)]
        class: String,
        /// Second factor for `cup`.
        #[arg(long)]
        class2: Option<String>,
    },
    /// Cross-check the engine against the brute-force oracles.
    Verify,
}

#[derive(Debug, clap::Args)]
pub struct ProfileInput {
    /// Facet file of a closed triangulated manifold.
    #[arg(long, conflicts_with = "builder")]
    pub complex: Option<PathBuf>,
    /// sphere:N, rp:N, lens9:M, product:I,J or sum:FILE,FILE.
    #[arg(long)]
    pub builder: Option<String>,
    /// phi=zero|nonzero, psi=zero|nonzero, pi1=trivial.
    #[arg(long = "assert", value_name = "K=V")]
    pub assertions: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Machine,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
    #[error(transparent)]
    Ops(#[from] OpsError),
    #[error("{0} row(s) failed")]
    RowsFailed(usize),
}

fn profile_code(e: &ProfileError) -> u8 {
    match e {
        ProfileError::Hypothesis(_)
        | ProfileError::UnclassifiedNineManifold(_)
        | ProfileError::DimensionOutOfRange(_)
        | ProfileError::TooLarge(_) => 3,
        ProfileError::NeedsSecondaryOpAssertion(_) => 4,
        ProfileError::Ops(e) => ops_code(e),
        _ => 2,
    }
}

fn ops_code(e: &OpsError) -> u8 {
    match e {
        OpsError::SingularPairing(_) => 3,
        OpsError::Algebra(_) => 5,
        _ => 2,
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Profile(e) => profile_code(e),
            CliError::Classify(e) => match e {
                ClassifyError::DimensionOutOfRange(_) | ClassifyError::Hypothesis(_) => 3,
                ClassifyError::Alternatives(_) => 4,
                ClassifyError::Internal(_) => 5,
                ClassifyError::Profile(p) => profile_code(p),
            },
            CliError::Ops(e) => ops_code(e),
            CliError::RowsFailed(_) => 5,
        }
    }
}

fn io_err(path: &Path, e: impl ToString) -> CliError {
    CliError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    }
}

pub fn parse_assertions(items: &[String]) -> Result<Assertions, CliError> {
    let mut a = Assertions::default();
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("assertion {item:?} is not K=V")))?;
        let value = |v: &str| match v {
            "zero" | "0" => Ok(OpValue::Zero),
            "nonzero" | "1" => Ok(OpValue::Nonzero),
            _ => Err(CliError::Usage(format!("{k} must be zero or nonzero, got {v:?}"))),
        };
        match k {
            "phi" => a.phi = Some(value(v)?),
            "psi" => a.psi = Some(value(v)?),
            "pi1" if v == "trivial" => a.simply_connected = Some(true),
            _ => return Err(CliError::Usage(format!("unknown assertion {item:?}"))),
        }
    }
    Ok(a)
}

fn parse_num<T: std::str::FromStr>(s: &str, what: &str) -> Result<T, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{what}: {s:?} is not a number")))
}

pub fn read_profile(path: &Path) -> Result<CohomProfile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| io_err(path, e))?;
    Ok(CohomProfile::from_json(&text)?)
}

/// Profile from a builder spec, with assertions recorded.
pub fn build_profile(spec: &str, assertions: Assertions) -> Result<CohomProfile, CliError> {
    let (kind, arg) = spec
        .split_once(':')
        .ok_or_else(|| CliError::Usage(format!("builder {spec:?} is not NAME:ARGS")))?;
    let mut p = match kind {
        "sphere" => profile_sphere(parse_num(arg, "sphere dimension")?)?,
        "rp" => profile_rp(parse_num(arg, "projective dimension")?)?,
        "lens9" => profile_lens9(parse_num(arg, "lens parameter")?)?,
        "product" => {
            let (i, j) = arg
                .split_once(',')
                .ok_or_else(|| CliError::Usage("product needs I,J".into()))?;
            let (i, j): (usize, usize) = (parse_num(i, "product factor")?, parse_num(j, "product factor")?);
            if i == 0 || j == 0 {
                return Err(CliError::Usage("product factors must be positive spheres".into()));
            }
            let k = product_complex(&boundary_of_simplex(i + 1), &boundary_of_simplex(j + 1));
            let mut a = assertions;
            // a product of simply connected spheres is simply connected
            if i >= 2 && j >= 2 && a.simply_connected.is_none() {
                a.simply_connected = Some(true);
            }
            return Ok(extract_profile(k, &format!("S^{i} x S^{j}"), a)?);
        }
        "sum" => {
            let (a, b) = arg
                .split_once(',')
                .ok_or_else(|| CliError::Usage("sum needs FILE,FILE".into()))?;
            profile_connected_sum(&read_profile(Path::new(a))?, &read_profile(Path::new(b))?)?
        }
        _ => return Err(CliError::Usage(format!("unknown builder {kind:?}"))),
    };
    assertions.apply(&mut p)?;
    Ok(p)
}

fn load(input: &ProfileInput, profile: Option<&Path>) -> Result<CohomProfile, CliError> {
    let assertions = parse_assertions(&input.assertions)?;
    match (profile, &input.complex, &input.builder) {
        (Some(path), _, _) => {
            let mut p = read_profile(path)?;
            assertions.apply(&mut p)?;
            Ok(p)
        }
        (None, Some(path), _) => {
            let k = read_facet_file(path).map_err(ProfileError::from)?;
            let name = path.file_stem().map_or("complex".into(), |s| s.to_string_lossy().into_owned());
            Ok(extract_profile(k, &name, assertions)?)
        }
        (None, None, Some(spec)) => build_profile(spec, assertions),
        (None, None, None) => Err(CliError::Usage("give --complex, --builder or --profile".into())),
    }
}

/// Summary table of a profile and the case it falls into.
pub fn profile_summary(p: &CohomProfile) -> (String, Option<ProfileError>) {
    let mut s = String::new();
    let f = p.flags;
    let _ = writeln!(s, "{} (n = {})", p.name, p.n);
    let _ = writeln!(
        s,
        "  orientable {}  spin {}  H_1 = 0 {}  pi1 trivial (asserted) {}",
        f.orientable, f.spin, f.h1_zero, f.simply_connected_asserted
    );
    for g in &p.groups {
        let slot = crate::profile::Slot::new(g.degree, g.coefficients);
        let _ = writeln!(s, "  {:<12} {}", slot.to_string(), g.group);
    }
    let nonzero: Vec<String> = p
        .operations
        .iter()
        .filter(|o| !o.is_zero())
        .map(|o| format!("{} on {}", o.name, o.source))
        .collect();
    let _ = writeln!(s, "  nonzero ops  {}", if nonzero.is_empty() { "none".into() } else { nonzero.join(", ") });
    let _ = writeln!(s, "  r_max {}  phi {}  psi {}", p.r_max, p.phi.value, p.psi.value);
    let mut pending = None;
    let case = match p.n {
        9 if f.orientable => nine_case(p).map(|c| c.0.to_string()),
        10 => ten_case(p).map(|c| c.0.to_string()),
        _ => Err(ProfileError::Hypothesis("no case split".into())),
    };
    match case {
        Ok(c) => {
            let _ = writeln!(s, "  case         {c}");
        }
        Err(e @ ProfileError::NeedsSecondaryOpAssertion(_)) => {
            let _ = writeln!(s, "  case         {e}");
            pending = Some(e);
        }
        Err(ProfileError::Hypothesis(_)) => {}
        Err(e) => {
            let _ = writeln!(s, "  case         {e}");
        }
    }
    for n in &p.notes {
        let _ = writeln!(s, "  note: {n}");
    }
    (s, pending)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| io_err(Path::new("<stdout>"), e))
}

fn render_result(r: &ClassificationResult, format: Format) -> String {
    match format {
        Format::Table => r.render_table(),
        Format::Machine => r.to_json(),
    }
}

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Profile { input, out: path } => {
            let p = load(&input, None)?;
            if let Some(path) = &path {
                std::fs::write(path, p.to_json()).map_err(|e| io_err(path, e))?;
            }
            let (summary, pending) = profile_summary(&p);
            emit(out, &summary)?;
            match pending {
                Some(e) => Err(e.into()),
                None => Ok(()),
            }
        }
        Command::Classify { input, profile, format } => {
            let p = load(&input, profile.as_deref())?;
            match classify(&p) {
                Ok(r) => emit(out, &render_result(&r, format)),
                Err(ClassifyError::Alternatives(alts)) => {
                    let text = match format {
                        Format::Table => alts
                            .iter()
                            .map(|(label, r)| format!("assuming {label}:\n{}", r.render_table()))
                            .collect::<Vec<_>>()
                            .join("\n"),
                        Format::Machine => {
                            let v: Vec<serde_json::Value> = alts
                                .iter()
                                .map(|(label, r)| serde_json::json!({ "assumption": label, "result": r }))
                                .collect();
                            let mut s = serde_json::to_string_pretty(&v).expect("alternatives serialize");
                            s.push('\n');
                            s
                        }
                    };
                    emit(out, &text)?;
                    Err(ClassifyError::Alternatives(alts).into())
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Zoo { table } => {
            let rows = zoo_rows(table)?;
            emit(out, &zoo::render(&rows))?;
            match rows.iter().filter(|r| !r.pass).count() {
                0 => Ok(()),
                n => Err(CliError::RowsFailed(n)),
            }
        }
        Command::Ops {
            complex,
            op,
            class,
            class2,
        } => {
            let text = ops::run_op(&complex, &op, &class, class2.as_deref())?;
            emit(out, &text)
        }
        Command::Verify => {
            let checks = verify::run_checks();
            let mut text = String::new();
            for c in &checks {
                let _ = writeln!(text, "{:<4} {:<40} {}", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            emit(out, &text)?;
            match checks.iter().filter(|c| !c.pass).count() {
                0 => Ok(()),
                n => Err(CliError::RowsFailed(n)),
            }
        }
    }
}

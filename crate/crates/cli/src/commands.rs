use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use psdsplit::linalg::{hermitian_eig, simultaneous_diag, HermitianMatrix, MatrixC, Signature};
use psdsplit::psd::{is_psd, nearest_psd, split_pos_neg};
use psdsplit::random;
use psdsplit::spectra::{
    horn_check, horn_sets, practical_bounds, practical_check, sum_spectrum_oracle, weyl_check,
    InequalityForm, InequalityReport, SpectrumTriple,
};
use psdsplit::tensor::{
    commuting_family_approx, make_density, nearest_psd_tensor, operator_schmidt, partial_transpose,
    ppt_check, tensor_split, tensor_sum_bound_report, BipartiteDims, Subsystem,
};
use serde_json::{json, Value};

use crate::error::CliError;
use crate::matrix_file::{read_matrix_file, MatrixFile};

#[derive(Debug, Parser)]
#[command(
    name = "psdsplit",
    version,
    about = "Nearest PSD approximations, tensor splits, Horn/Weyl bounds and PPT checks"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Pretty,
}

#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Relative tolerance for Hermiticity, zero classification and PSD tests.
    #[arg(long, global = true, default_value_t = psdsplit::DEFAULT_TOL)]
    pub tol: f64,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Replace inputs by (A + A†)/2 instead of rejecting non-Hermitian ones.
    #[arg(long, global = true)]
    pub symmetrize: bool,
}

#[derive(Debug, Args)]
pub struct MatrixIn {
    /// Matrix file, or `-` for stdin.
    #[arg(long = "in", value_name = "PATH")]
    pub input: PathBuf,
}

#[derive(Debug, Args)]
pub struct PairIn {
    #[arg(long = "in", value_name = "PATH")]
    pub input: PathBuf,
    #[arg(long = "in2", value_name = "PATH")]
    pub input2: PathBuf,
}

#[derive(Debug, Args)]
pub struct BipartiteIn {
    #[arg(long = "in", value_name = "PATH")]
    pub input: PathBuf,
    /// Local dimensions; falls back to the file's `dims` annotation.
    #[arg(long, num_args = 2, value_names = ["M", "N"])]
    pub dims: Option<Vec<usize>>,
}

#[derive(Debug, Args)]
pub struct PptArgs {
    #[command(flatten)]
    pub bipartite: BipartiteIn,
    /// Divide by the trace before validating.
    #[arg(long)]
    pub normalize: bool,
}

#[derive(Debug, Args)]
pub struct PartialTransposeArgs {
    #[command(flatten)]
    pub bipartite: BipartiteIn,
    #[arg(long, default_value = "second")]
    pub subsystem: String,
}

#[derive(Debug, Args)]
pub struct FamiliesIn {
    /// Left factors A_i (repeat the flag).
    #[arg(long = "in", value_name = "PATH", required = true)]
    pub left: Vec<PathBuf>,
    /// Right factors B_i (repeat the flag).
    #[arg(long = "in2", value_name = "PATH", required = true)]
    pub right: Vec<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FamilyIn {
    #[arg(long = "in", value_name = "PATH", required = true)]
    pub members: Vec<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: String,
}

#[derive(Debug, Args)]
pub struct PracticalArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
    /// Optional spectrum to test against the intervals.
    #[arg(long, allow_hyphen_values = true)]
    pub gamma: Option<String>,
}

#[derive(Debug, Args)]
pub struct PairSpectra {
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: String,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: String,
}

#[derive(Debug, Args)]
pub struct HornSetsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RandomKind {
    Hermitian,
    Psd,
    Density,
    Unitary,
}

#[derive(Debug, Args)]
pub struct RandomArgs {
    #[arg(long, value_enum, default_value_t = RandomKind::Hermitian)]
    pub kind: RandomKind,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Positive and negative parts A₊, A₋.
    Split(MatrixIn),
    /// Nearest PSD matrix and its distance.
    NearestPsd(MatrixIn),
    IsPsd(MatrixIn),
    /// Parts of B ⊗ C from the parts of B and C.
    TensorSplit(PairIn),
    TensorNearest(PairIn),
    /// Operator-Schmidt decomposition.
    Schmidt(BipartiteIn),
    /// Positive-partial-transpose test of a density matrix.
    Ppt(PptArgs),
    PartialTranspose(PartialTransposeArgs),
    /// Termwise approximation of Σ A_i ⊗ B_i for commuting families.
    CommuteApprox(FamiliesIn),
    /// Compare ‖A − A₊‖ with the Schmidt-term bound.
    BoundReport(BipartiteIn),
    Weyl(TripleArgs),
    Horn(TripleArgs),
    HornSets(HornSetsArgs),
    PracticalBounds(PracticalArgs),
    /// Spectrum of a random sum with prescribed summand spectra.
    OracleSum(PairSpectra),
    /// Common eigenbasis of a commuting family.
    Simdiag(FamilyIn),
    /// Seeded random matrix in the matrix-file format.
    Random(RandomArgs),
}

/// Result of a successful run: the report, and whether the computation
/// found a violation (exit code 1).
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub violation: bool,
}

impl Outcome {
    fn ok(report: Value) -> Self {
        Self {
            report,
            violation: false,
        }
    }
}

pub fn matrix_json(m: &MatrixC) -> Value {
    serde_json::to_value(MatrixFile::from_matrix(m)).expect("matrix serializes")
}

fn matrix_json_dims(m: &MatrixC, dims: BipartiteDims) -> Value {
    serde_json::to_value(MatrixFile::from_matrix(m).with_dims(Some(dims)))
        .expect("matrix serializes")
}

fn signature_json(s: Signature) -> Value {
    json!({"positive": s.positive, "negative": s.negative, "zero": s.zero})
}

/// Parses a comma-separated list and sorts it descending.
pub fn parse_list(text: &str, name: &str) -> Result<Vec<f64>, CliError> {
    let mut v = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .ok()
                .filter(|x| x.is_finite())
                .ok_or_else(|| CliError::input(format!("--{name}: {s:?} is not a finite number")))
        })
        .collect::<Result<Vec<f64>, _>>()?;
    if v.is_empty() {
        return Err(CliError::input(format!("--{name} is empty")));
    }
    v.sort_by(|a, b| b.total_cmp(a));
    Ok(v)
}

struct Ctx<'a> {
    cfg: &'a RunConfig,
}

impl Ctx<'_> {
    fn hermitian(&self, path: &Path) -> Result<(HermitianMatrix, MatrixFile), CliError> {
        let file = read_matrix_file(path)?;
        let m = file.to_matrix()?;
        let h = if self.cfg.symmetrize {
            HermitianMatrix::symmetrize(m)
        } else {
            HermitianMatrix::new(m, self.cfg.tol)
        }
        .map_err(|e| CliError::from(e).context(&path.display().to_string()))?;
        Ok((h, file))
    }

    fn bipartite(&self, args: &BipartiteIn) -> Result<(HermitianMatrix, BipartiteDims), CliError> {
        let (h, file) = self.hermitian(&args.input)?;
        let dims = match &args.dims {
            Some(d) => BipartiteDims::new(d[0], d[1])?,
            None => file.dims().ok_or_else(|| {
                CliError::input(
                    "bipartite dimensions missing: pass --dims M N or add \"dims\" to the file",
                )
            })?,
        };
        Ok((h, dims))
    }
}

fn inequality_json(r: &InequalityReport) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            let form = match v.form {
                InequalityForm::Upper => "upper",
                InequalityForm::Complement => "complement",
                InequalityForm::PracticalLower => "practical_lower",
                InequalityForm::PracticalUpper => "practical_upper",
            };
            json!({
                "form": form,
                "r": v.r,
                "I": v.triple.i,
                "J": v.triple.j,
                "K": v.triple.k,
                "lhs": v.lhs,
                "rhs": v.rhs,
                "slack": v.slack,
            })
        })
        .collect();
    json!({
        "checked": r.checked,
        "violations": violations,
        "trace_residual": r.trace_residual,
        "trace_ok": r.trace_ok,
        "passed": r.passed(),
    })
}

fn triple(args: &TripleArgs) -> Result<SpectrumTriple, CliError> {
    Ok(SpectrumTriple::new(
        parse_list(&args.alpha, "alpha")?,
        parse_list(&args.beta, "beta")?,
        parse_list(&args.gamma, "gamma")?,
    )?)
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    let cfg = &cli.config;
    if !(cfg.tol > 0.0 && cfg.tol.is_finite()) {
        return Err(CliError::input(format!(
            "--tol must be positive, got {}",
            cfg.tol
        )));
    }
    let tol = cfg.tol;
    let ctx = Ctx { cfg };
    match &cli.command {
        Command::Split(a) => {
            let (h, _) = ctx.hermitian(&a.input)?;
            let spectrum = hermitian_eig(&h, tol)?;
            let parts = split_pos_neg(&h, tol)?;
            Ok(Outcome::ok(json!({
                "a_plus": matrix_json(&parts.plus),
                "a_minus": matrix_json(&parts.minus),
                "eigenvalues": spectrum.eigenvalues(),
                "signature": signature_json(parts.signature),
            })))
        }
        Command::NearestPsd(a) => {
            let (h, _) = ctx.hermitian(&a.input)?;
            let r = nearest_psd(&h, tol)?;
            Ok(Outcome::ok(
                json!({"approximant": matrix_json(&r.approximant), "distance": r.distance}),
            ))
        }
        Command::IsPsd(a) => {
            let (h, _) = ctx.hermitian(&a.input)?;
            let r = is_psd(&h, tol)?;
            Ok(Outcome {
                report: json!({"is_psd": r.is_psd, "min_eigenvalue": r.min_eigenvalue}),
                violation: !r.is_psd,
            })
        }
        Command::TensorSplit(p) => {
            let (b, _) = ctx.hermitian(&p.input)?;
            let (c, _) = ctx.hermitian(&p.input2)?;
            let parts = tensor_split(&b, &c, tol)?;
            Ok(Outcome::ok(json!({
                "plus": matrix_json(&parts.plus),
                "minus": matrix_json(&parts.minus),
                "signature": signature_json(parts.signature),
            })))
        }
        Command::TensorNearest(p) => {
            let (b, _) = ctx.hermitian(&p.input)?;
            let (c, _) = ctx.hermitian(&p.input2)?;
            let r = nearest_psd_tensor(&b, &c, tol)?;
            Ok(Outcome::ok(
                json!({"approximant": matrix_json(&r.approximant), "distance": r.distance}),
            ))
        }
        Command::Schmidt(args) => {
            let (h, dims) = ctx.bipartite(args)?;
            let d = operator_schmidt(&h, dims, tol)?;
            let terms: Vec<Value> = d
                .terms
                .iter()
                .map(
                    |t| json!({"weight": t.weight, "b": matrix_json(&t.b), "c": matrix_json(&t.c)}),
                )
                .collect();
            Ok(Outcome::ok(json!({
                "dims": [dims.dim_a, dims.dim_b],
                "weights": d.weights(),
                "terms": terms,
                "dropped": d.dropped,
                "reconstruction_error": d.reconstruct()?.distance(&h)?,
                "orthonormality_residual": d.orthonormality_residual(),
            })))
        }
        Command::Ppt(args) => {
            let (h, dims) = ctx.bipartite(&args.bipartite)?;
            let rho = make_density(h.into_matrix(), dims, tol, args.normalize)?;
            let r = ppt_check(&rho, tol)?;
            Ok(Outcome {
                report: json!({"is_ppt": r.is_ppt, "min_eig": r.min_eig}),
                violation: !r.is_ppt,
            })
        }
        Command::PartialTranspose(args) => {
            let file = read_matrix_file(&args.bipartite.input)?;
            let m = file.to_matrix()?;
            let dims = match &args.bipartite.dims {
                Some(d) => BipartiteDims::new(d[0], d[1])?,
                None => file.dims().ok_or_else(|| {
                    CliError::input("bipartite dimensions missing: pass --dims M N")
                })?,
            };
            let subsystem: Subsystem = args.subsystem.parse()?;
            let t = partial_transpose(&m, dims, subsystem)?;
            Ok(Outcome::ok(
                json!({"subsystem": subsystem.to_string(), "matrix": matrix_json_dims(&t, dims)}),
            ))
        }
        Command::CommuteApprox(f) => {
            let left = f
                .left
                .iter()
                .map(|p| ctx.hermitian(p).map(|x| x.0))
                .collect::<Result<Vec<_>, _>>()?;
            let right = f
                .right
                .iter()
                .map(|p| ctx.hermitian(p).map(|x| x.0))
                .collect::<Result<Vec<_>, _>>()?;
            let r = commuting_family_approx(&left, &right, tol, cfg.seed)?;
            let exact = r.direct_gap <= tol * r.approximant.scale();
            Ok(Outcome {
                report: json!({
                    "approximant": matrix_json(&r.approximant),
                    "distance": r.distance,
                    "direct_gap": r.direct_gap,
                    "sign_conflicts": r.sign_conflicts,
                    "matches_direct_split": exact,
                    "all_psd": r.all_psd,
                }),
                violation: !exact,
            })
        }
        Command::BoundReport(args) => {
            let (h, dims) = ctx.bipartite(args)?;
            let d = operator_schmidt(&h, dims, tol)?;
            let r = tensor_sum_bound_report(&d, tol)?;
            Ok(Outcome {
                report: json!({
                    "lhs": r.lhs,
                    "rhs": r.rhs,
                    "satisfied": r.satisfied,
                    "hypothesis_held": r.hypothesis_held,
                    "weights": d.weights(),
                }),
                violation: !r.satisfied,
            })
        }
        Command::Weyl(args) => {
            let r = weyl_check(&triple(args)?, tol)?;
            Ok(Outcome {
                violation: !r.violations.is_empty(),
                report: inequality_json(&r),
            })
        }
        Command::Horn(args) => {
            let r = horn_check(&triple(args)?, tol)?;
            Ok(Outcome {
                violation: !r.passed(),
                report: inequality_json(&r),
            })
        }
        Command::HornSets(args) => {
            let s = horn_sets(args.n, args.r)?;
            let triples: Vec<Value> = s.triples.iter().map(|t| json!([t.i, t.j, t.k])).collect();
            Ok(Outcome::ok(
                json!({"n": s.n, "r": s.r, "count": s.len(), "triples": triples}),
            ))
        }
        Command::PracticalBounds(args) => {
            let alpha = parse_list(&args.alpha, "alpha")?;
            let beta = parse_list(&args.beta, "beta")?;
            let bounds = practical_bounds(&alpha, &beta)?;
            let intervals: Vec<Value> = bounds.iter().map(|iv| json!([iv.lo, iv.hi])).collect();
            let mut report = json!({"intervals": intervals});
            let mut violation = false;
            if let Some(g) = &args.gamma {
                let t = SpectrumTriple::new(alpha, beta, parse_list(g, "gamma")?)?;
                let check = practical_check(&t, tol)?;
                violation = !check.violations.is_empty();
                report["check"] = inequality_json(&check);
            }
            Ok(Outcome { report, violation })
        }
        Command::OracleSum(args) => {
            let alpha = parse_list(&args.alpha, "alpha")?;
            let beta = parse_list(&args.beta, "beta")?;
            let t = sum_spectrum_oracle(&alpha, &beta, cfg.seed, tol)?;
            Ok(Outcome::ok(
                json!({"alpha": t.alpha(), "beta": t.beta(), "gamma": t.gamma(), "seed": cfg.seed}),
            ))
        }
        Command::Simdiag(f) => {
            let family = f
                .members
                .iter()
                .map(|p| ctx.hermitian(p).map(|x| x.0))
                .collect::<Result<Vec<_>, _>>()?;
            let sd = simultaneous_diag(&family, tol, cfg.seed)?;
            Ok(Outcome::ok(json!({
                "q": matrix_json(&sd.q),
                "diagonals": sd.diagonals,
                "residual": sd.residual,
                "attempts": sd.attempts,
            })))
        }
        Command::Random(args) => {
            if args.n == 0 {
                return Err(CliError::input("--n must be positive"));
            }
            let mut rng = random::rng(cfg.seed);
            let m = match args.kind {
                RandomKind::Hermitian => random::random_hermitian(&mut rng, args.n).into_matrix(),
                RandomKind::Psd => random::random_psd(&mut rng, args.n, args.n).into_matrix(),
                RandomKind::Density => random::random_density(&mut rng, args.n).into_matrix(),
                RandomKind::Unitary => random::random_unitary(&mut rng, args.n),
            };
            Ok(Outcome::ok(matrix_json(&m)))
        }
    }
}

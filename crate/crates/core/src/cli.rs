//! Command-line front end.
//!
//! Every subcommand writes CSV: to stdout by default, or to named files in
//! the `--out` directory. Flags override values from `--config`.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use crate::angle::Angle;
use crate::config::{parse_config, parse_preset, parse_real, ExponentSelector, Problem, RunConfig};
use crate::cutoff::{laplace_rhs, stokes_rhs, CutoffProfile, Smoothness};
use crate::error::{Error, Result};
use crate::exponents::{find_stokes_exponents, laplace_exponent, BcKind, SearchRegion};
use crate::fem::{convergence_study, limit_case_study, TriMesh};
use crate::laplace::LaplaceField;
use crate::pairing::{arc_limit_defect, area_pairing, dyadic_radii, QuadSpec, TestFunctionV};
use crate::stokes::{dirichlet_coefficients_for, StokesField};
use crate::table::{emit_table, read_points, Cell, Table};

#[derive(Debug, Parser)]
#[command(name = "cornerkit", version, about = "Corner singularities of the Laplace and Stokes problems")]
pub struct Cli {
    /// Run configuration (`key = value` lines).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Directory for output tables; stdout when absent.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Tolerance for adaptive quadrature.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Singular exponents of a corner.
    Exponents(ExponentsArgs),
    /// Evaluate a Laplace corner solution at points.
    EvalLaplace(EvalLaplaceArgs),
    /// Evaluate a Stokes corner solution at points.
    EvalStokes(EvalStokesArgs),
    /// Right-hand side of a cut-off corner solution at points.
    Rhs(RhsArgs),
    /// Green-formula defect of a Laplace corner solution.
    Pairing(PairingArgs),
    /// Finite-element studies on the L-shape.
    Fem(FemArgs),
}

fn lambda_arg(s: &str) -> Result<f64> {
    parse_real("lambda", s)
}

fn preset_arg(s: &str) -> Result<(BcKind, u32)> {
    parse_preset(s)
}

#[derive(Debug, Args)]
pub struct ExponentsArgs {
    #[arg(long)]
    pub omega: Option<Angle>,
    #[arg(long, value_enum)]
    pub problem: Option<Problem>,
    /// Boundary conditions (Laplace only).
    #[arg(long, default_value = "dd")]
    pub bc: BcKind,
    /// Number of Laplace exponents to list.
    #[arg(long, default_value_t = 5)]
    pub count: u32,
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    pub re_min: f64,
    #[arg(long, default_value_t = 4.05, allow_negative_numbers = true)]
    pub re_max: f64,
    #[arg(long, default_value_t = -2.05, allow_negative_numbers = true)]
    pub im_min: f64,
    #[arg(long, default_value_t = 2.05, allow_negative_numbers = true)]
    pub im_max: f64,
}

/// Selects a Laplace field: a preset or an explicit exponent.
#[derive(Debug, Args)]
pub struct LaplaceSelect {
    #[arg(long)]
    pub omega: Option<Angle>,
    #[arg(long)]
    pub bc: Option<BcKind>,
    #[arg(long)]
    pub k: Option<u32>,
    /// Explicit exponent, overriding any preset; fractions like -2/3 allowed.
    #[arg(long, value_parser = lambda_arg, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c2: Option<f64>,
}

#[derive(Debug, Args)]
pub struct EvalLaplaceArgs {
    #[command(flatten)]
    pub field: LaplaceSelect,
    /// CSV file with `x,y` columns.
    #[arg(long)]
    pub points: PathBuf,
}

#[derive(Debug, Args)]
pub struct StokesSelect {
    #[arg(long)]
    pub omega: Option<Angle>,
    #[arg(long, value_parser = lambda_arg, allow_hyphen_values = true)]
    pub lambda: Option<f64>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub lambda_im: f64,
    /// Use the Dirichlet coefficients for a determinant root.
    #[arg(long)]
    pub dirichlet: bool,
    /// Basis coefficients `c1,c2,c3,c4` when not `--dirichlet`.
    #[arg(long, value_delimiter = ',', num_args = 4, allow_negative_numbers = true)]
    pub coeffs: Option<Vec<f64>>,
}

#[derive(Debug, Args)]
pub struct EvalStokesArgs {
    #[command(flatten)]
    pub field: StokesSelect,
    #[arg(long)]
    pub points: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Quintic,
    Exp,
}

#[derive(Debug, Args)]
pub struct RhsArgs {
    #[arg(long, value_enum)]
    pub problem: Option<Problem>,
    #[arg(long)]
    pub r0: Option<f64>,
    #[arg(long)]
    pub r1: Option<f64>,
    #[arg(long, value_enum)]
    pub profile: Option<ProfileArg>,
    /// Laplace preset `bc:k`.
    #[arg(long, value_parser = preset_arg)]
    pub preset: Option<(BcKind, u32)>,
    #[command(flatten)]
    pub stokes: StokesSelect,
    #[arg(long, allow_negative_numbers = true)]
    pub c1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c2: Option<f64>,
    #[arg(long)]
    pub points: PathBuf,
}

#[derive(Debug, Args)]
pub struct PairingArgs {
    #[arg(long)]
    pub omega: Option<Angle>,
    #[arg(long, value_parser = lambda_arg, allow_hyphen_values = true)]
    pub lambda: f64,
    /// Test-function exponent; defaults to π/ω.
    #[arg(long, value_parser = lambda_arg)]
    pub xi: Option<f64>,
    /// Coefficients of u; by default Φ = sin(|λ|θ).
    #[arg(long, allow_negative_numbers = true)]
    pub c1: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub c2: Option<f64>,
    #[arg(long)]
    pub r0: Option<f64>,
    #[arg(long)]
    pub r1: Option<f64>,
    /// Number of dyadic arc radii below r0/2.
    #[arg(long, default_value_t = 8)]
    pub arcs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FemCase {
    Limit,
    Convergence,
}

#[derive(Debug, Args)]
pub struct FemArgs {
    #[arg(long, value_enum)]
    pub case: FemCase,
    #[arg(long)]
    pub omega: Option<Angle>,
    #[arg(long, default_value_t = 4)]
    pub levels: u32,
    /// Cells per unit length on the coarsest level.
    #[arg(long, default_value_t = 8)]
    pub base_n: usize,
    /// Dirichlet preset index for the convergence case.
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Ball radius of the corner indicator.
    #[arg(long, default_value_t = 0.1)]
    pub radius: f64,
}

/// Maps an error to the process exit status.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_numerical() {
        3
    } else {
        2
    }
}

struct Sink<'a> {
    dir: Option<PathBuf>,
    stdout: &'a mut dyn Write,
    first: bool,
}

impl Sink<'_> {
    fn emit(&mut self, name: &str, table: &Table) -> Result<()> {
        match &self.dir {
            Some(dir) => emit_table(table, &dir.join(name)),
            None => {
                let label = Path::new("<stdout>");
                if !self.first {
                    writeln!(self.stdout).map_err(|source| Error::Io {
                        path: label.into(),
                        source,
                    })?;
                }
                self.first = false;
                table.write_to(&mut *self.stdout, label)
            }
        }
    }
}

/// Runs a parsed command line, writing tables to `stdout` unless `--out`.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<()> {
    let (cfg, from_file) = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            (parse_config(&text)?, true)
        }
        None => (RunConfig::default(), false),
    };
    let tol = cli.tol.unwrap_or(cfg.tol);
    if !(tol > 0.0) {
        return Err(Error::validation("tol", format!("must be positive, got {tol}")));
    }
    let dir = cli.out.clone().or_else(|| from_file.then(|| cfg.out.clone()));
    let mut sink = Sink {
        dir,
        stdout,
        first: true,
    };
    match cli.command {
        Command::Exponents(a) => exponents(&a, &cfg, &mut sink),
        Command::EvalLaplace(a) => eval_laplace(&a, &cfg, &mut sink),
        Command::EvalStokes(a) => eval_stokes(&a, &cfg, &mut sink),
        Command::Rhs(a) => rhs(&a, &cfg, &mut sink),
        Command::Pairing(a) => pairing(&a, &cfg, tol, &mut sink),
        Command::Fem(a) => fem(&a, &cfg, &mut sink),
    }
}

/// Parses `args`, runs, reports errors on stderr and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    match run(cli, &mut lock) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exponents(a: &ExponentsArgs, cfg: &RunConfig, sink: &mut Sink) -> Result<()> {
    let omega = a.omega.unwrap_or(cfg.omega);
    let mut t = Table::new(&["re(lambda)", "im(lambda)", "branch", "residual"]);
    match a.problem.unwrap_or(cfg.problem) {
        Problem::Laplace => {
            let first = u32::from(a.bc != BcKind::NeumannNeumann);
            let w = omega.radians();
            for k in first..first + a.count {
                let l = laplace_exponent(omega, a.bc, k)?.value();
                let residual = match a.bc {
                    BcKind::DirichletNeumann => (l * w).cos().abs(),
                    _ => (l * w).sin().abs(),
                };
                t.push(vec![l.into(), 0.0.into(), a.bc.short_name().into(), residual.into()])?;
            }
        }
        Problem::Stokes => {
            let region = SearchRegion::new(a.re_min, a.re_max, a.im_min, a.im_max)?;
            for r in find_stokes_exponents(omega.radians(), &region)? {
                let branch = r.branch.to_string();
                t.push(vec![r.lambda.re.into(), r.lambda.im.into(), branch.as_str().into(), r.residual.into()])?;
            }
        }
    }
    sink.emit("exponents.csv", &t)
}

fn laplace_field(s: &LaplaceSelect, cfg: &RunConfig) -> Result<LaplaceField> {
    let omega = s.omega.unwrap_or(cfg.omega);
    let selector = match (s.lambda, s.bc, s.k) {
        (Some(l), _, _) => ExponentSelector::Lambda(l),
        (None, None, None) => cfg.exponent,
        (None, bc, k) => {
            let (cbc, ck) = match cfg.exponent {
                ExponentSelector::Preset { bc, k } => (bc, k),
                ExponentSelector::Lambda(_) => (BcKind::DirichletDirichlet, 1),
            };
            ExponentSelector::Preset {
                bc: bc.unwrap_or(cbc),
                k: k.unwrap_or(ck),
            }
        }
    };
    Ok(match selector {
        ExponentSelector::Lambda(l) => LaplaceField::new(l, s.c1.unwrap_or(cfg.c1), s.c2.unwrap_or(cfg.c2)),
        ExponentSelector::Preset { bc, k } => {
            let amp = s.c1.or(s.c2).unwrap_or(1.0);
            LaplaceField::preset(omega, bc, k, amp)?
        }
    })
}

fn eval_laplace(a: &EvalLaplaceArgs, cfg: &RunConfig, sink: &mut Sink) -> Result<()> {
    let u = laplace_field(&a.field, cfg)?;
    let mut t = Table::new(&["x", "y", "u", "ux", "uy"]);
    for p in read_points(&a.points)? {
        let g = u.gradient(p)?.cartesian;
        t.push(vec![p[0].into(), p[1].into(), u.eval(p)?.into(), g[0].into(), g[1].into()])?;
    }
    sink.emit("eval_laplace.csv", &t)
}

fn stokes_field(s: &StokesSelect, cfg: &RunConfig) -> Result<StokesField> {
    let omega = s.omega.unwrap_or(cfg.omega).radians();
    let re = match (s.lambda, cfg.exponent) {
        (Some(l), _) => l,
        (None, ExponentSelector::Lambda(l)) => l,
        (None, ExponentSelector::Preset { .. }) => {
            return Err(Error::validation("lambda", "a Stokes field needs an explicit exponent"))
        }
    };
    let lambda = Complex64::new(re, s.lambda_im);
    if s.dirichlet {
        return Ok(dirichlet_coefficients_for(omega, lambda)?.field(Default::default()));
    }
    let c = s.coeffs.clone().unwrap_or_else(|| vec![1.0, 0.0, 0.0, 0.0]);
    let coeffs = [0, 1, 2, 3].map(|i| Complex64::new(c[i], 0.0));
    Ok(StokesField::new_complex(lambda, coeffs))
}

fn eval_stokes(a: &EvalStokesArgs, cfg: &RunConfig, sink: &mut Sink) -> Result<()> {
    let f = stokes_field(&a.field, cfg)?;
    let mut t = Table::new(&["x", "y", "u1", "u2", "p"]);
    for p in read_points(&a.points)? {
        let u = f.velocity_cartesian(p)?;
        t.push(vec![p[0].into(), p[1].into(), u[0].into(), u[1].into(), f.pressure(p)?.into()])?;
    }
    sink.emit("eval_stokes.csv", &t)
}

fn rhs(a: &RhsArgs, cfg: &RunConfig, sink: &mut Sink) -> Result<()> {
    let smooth = match a.profile {
        Some(ProfileArg::Quintic) => Smoothness::C2Quintic,
        Some(ProfileArg::Exp) => Smoothness::CInfExp,
        None => cfg.profile,
    };
    let profile = CutoffProfile::new(a.r0.unwrap_or(cfg.r0), a.r1.unwrap_or(cfg.r1), smooth)?;
    let points = read_points(&a.points)?;
    match a.problem.unwrap_or(cfg.problem) {
        Problem::Laplace => {
            let select = LaplaceSelect {
                omega: a.stokes.omega,
                bc: a.preset.map(|p| p.0),
                k: a.preset.map(|p| p.1),
                lambda: a.stokes.lambda,
                c1: a.c1,
                c2: a.c2,
            };
            let u = laplace_field(&select, cfg)?;
            let mut t = Table::new(&["x", "y", "f"]);
            for p in points {
                t.push(vec![p[0].into(), p[1].into(), laplace_rhs(&u, &profile, p)?.into()])?;
            }
            sink.emit("rhs.csv", &t)
        }
        Problem::Stokes => {
            let f = stokes_field(&a.stokes, cfg)?;
            let mut t = Table::new(&["x", "y", "f1", "f2", "g"]);
            for p in points {
                let s = stokes_rhs(&f, &profile, p)?;
                t.push(vec![p[0].into(), p[1].into(), s.f[0].into(), s.f[1].into(), s.g.into()])?;
            }
            sink.emit("rhs.csv", &t)
        }
    }
}

fn pairing(a: &PairingArgs, cfg: &RunConfig, tol: f64, sink: &mut Sink) -> Result<()> {
    let omega = a.omega.unwrap_or(cfg.omega);
    let xi = a.xi.unwrap_or_else(|| omega.xi());
    let sign = if a.lambda < 0.0 { -1.0 } else { 1.0 };
    let u = LaplaceField::new(a.lambda, a.c1.unwrap_or(0.0), a.c2.unwrap_or(sign));
    let profile = CutoffProfile::new(a.r0.unwrap_or(cfg.r0), a.r1.unwrap_or(cfg.r1), cfg.profile)?;
    let v = TestFunctionV::new(xi, profile)?;
    let eps = dyadic_radii(0.5 * profile.r0(), a.arcs);
    let arc = arc_limit_defect(&u, &v, omega.radians(), &eps)?;
    let quad = QuadSpec {
        tol,
        ..QuadSpec::default()
    };
    let area = area_pairing(&u, &v, omega.radians(), &quad)?;
    let mut summary = Table::new(&["lambda", "xi", "arc_limit", "area_pairing"]);
    summary.push(vec![a.lambda.into(), xi.into(), arc.limit.into(), area.into()])?;
    sink.emit("pairing.csv", &summary)?;
    let mut t = Table::new(&["eps", "arc_integral"]);
    for s in &arc.samples {
        t.push(vec![s.eps.into(), s.value.into()])?;
    }
    sink.emit("pairing_arcs.csv", &t)
}

fn nodal_table(mesh: &TriMesh, values: &[f64]) -> Result<Table> {
    let mut t = Table::new(&["x", "y", "uh"]);
    for (p, v) in mesh.nodes.iter().zip(values) {
        t.push(vec![p[0].into(), p[1].into(), (*v).into()])?;
    }
    Ok(t)
}

fn fem(a: &FemArgs, cfg: &RunConfig, sink: &mut Sink) -> Result<()> {
    let omega = a.omega.unwrap_or(cfg.omega);
    if omega.pi_ratio() != Some((3, 2)) {
        return Err(Error::validation("omega", format!("the finite-element mesh is the L-shape (3pi/2), got {omega}")));
    }
    match a.case {
        FemCase::Convergence => {
            let u = LaplaceField::preset(omega, BcKind::DirichletDirichlet, a.k, 1.0)?;
            let study = convergence_study(&u, a.base_n, a.levels)?;
            let mut t = Table::new(&["level", "h", "l2", "h1", "rate_l2", "rate_h1"]);
            for r in &study.rows {
                t.push(vec![
                    Cell::Int(r.level.into()),
                    r.h.into(),
                    r.l2.into(),
                    r.h1.into(),
                    r.rate_l2.into(),
                    r.rate_h1.into(),
                ])?;
            }
            sink.emit("fem_levels.csv", &t)?;
            sink.emit("fem_solution.csv", &nodal_table(&study.mesh, &study.values)?)
        }
        FemCase::Limit => {
            let u = crate::laplace::limit_case_field(omega);
            let study = limit_case_study(&u, a.base_n, a.levels, a.radius)?;
            let mut t = Table::new(&["level", "corner_max"]);
            for r in &study.rows {
                t.push(vec![Cell::Int(r.level.into()), r.corner_max.into()])?;
            }
            sink.emit("fem_levels.csv", &t)?;
            sink.emit("fem_solution.csv", &nodal_table(&study.mesh, &study.values)?)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<String> {
        let cli = Cli::try_parse_from(args).expect("arguments parse");
        let mut buf = Vec::new();
        run(cli, &mut buf)?;
        Ok(String::from_utf8(buf).unwrap())
    }

    #[test]
    fn laplace_exponents_table() {
        let s = run_args(&["cornerkit", "exponents", "--omega", "3pi/2", "--count", "2"]).unwrap();
        let lines: Vec<&str> = s.lines().collect();
        assert_eq!(lines[0], "re(lambda),im(lambda),branch,residual");
        assert!(lines[1].starts_with("6.6666666666666663e-1,"));
        assert_eq!(lines.len(), 3);
    }

    #[test]
    fn stokes_exponents_include_lcorner_root() {
        let s = run_args(&[
            "cornerkit", "exponents", "--omega", "3pi/2", "--problem", "stokes", "--re-max", "0.9",
        ])
        .unwrap();
        assert!(s.lines().nth(1).unwrap().starts_with("5.44483736782"), "{s}");
    }

    #[test]
    fn error_codes() {
        let e = run_args(&["cornerkit", "fem", "--case", "limit", "--omega", "pi"]).unwrap_err();
        assert_eq!(exit_code(&e), 2);
        let e = run_args(&["cornerkit", "eval-stokes", "--omega", "3pi/2", "--lambda", "0.3", "--dirichlet", "--points", "x.csv"]).unwrap_err();
        assert_eq!(exit_code(&e), 2);
        assert_eq!(exit_code(&Error::SolverStall { iterations: 1, residual: 1.0 }), 3);
    }
}

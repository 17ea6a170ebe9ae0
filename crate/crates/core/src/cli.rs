//! Command-line front end.
//!
//! Exit codes: 0 success, 1 validation error, 2 internal invariant breach.
//! Angles are given in degrees and converted to radians once, here.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::audits::{self, AuditKind, AuditReport, Witness};
use crate::classical::{correlations_from_strategy, simulate_lhv, simulate_lhv_with_threads, LhvStrategy};
use crate::error::{Error, Result};
use crate::format::{Cell, Delimiter, Sheet};
use crate::pauli::{Axis, SpinSign, IDENTITY_TOL};
use crate::quantum::{
    bell_inequality_check, chsh_closed_form, chsh_dot_form, chsh_master_form, coplanar_axes, delta, pair_prob,
    table2, AxisQuadruple, SignQuadruple, Symmetry,
};

#[derive(Debug, Parser)]
#[command(name = "signed-bell", version, about = "Signed master distributions and CHSH/Bell inequality checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sixteen four-probabilities on one axis quadruple, plus Δ and their sum.
    Table(TableArgs),
    /// Four-probabilities, Δ and three CHSH evaluations over a θ grid.
    Sweep(SweepArgs),
    /// CHSH value by closed form, dot products and master tables.
    Chsh(ChshArgs),
    /// Monte-Carlo run of a local hidden-variable strategy.
    Lhv(LhvArgs),
    /// Positivity audit of a published inequality proof.
    Audit(AuditArgs),
    /// Three-axis Bell inequality with singlet pair probabilities.
    Bell(BellArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// csv or tsv.
    #[arg(long, default_value = "csv")]
    pub format: Delimiter,
}

#[derive(Debug, Clone, Args)]
pub struct AxesArgs {
    /// Coplanar configuration at this angle (degrees).
    #[arg(long, allow_hyphen_values = true, conflicts_with = "axes")]
    pub coplanar_theta: Option<f64>,
    /// Four unit axes a1 a2 b1 b2, each as x,y,z.
    #[arg(long, num_args = 4, allow_hyphen_values = true, value_name = "X,Y,Z")]
    pub axes: Option<Vec<String>>,
    /// Treat angles as polarizer angles and double them.
    #[arg(long, conflicts_with = "axes")]
    pub photon: bool,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub axes: AxesArgs,
    #[arg(long, default_value = "symmetric")]
    pub symmetry: Symmetry,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub theta_min: f64,
    #[arg(long, default_value_t = 180.0, allow_hyphen_values = true)]
    pub theta_max: f64,
    #[arg(long, default_value_t = 181)]
    pub steps: usize,
    #[arg(long, default_value = "symmetric")]
    pub symmetry: Symmetry,
    #[arg(long)]
    pub photon: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ChshArgs {
    #[command(flatten)]
    pub axes: AxesArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct LhvArgs {
    /// `uniform`, `point:<4 signs>`, `weights:<16 numbers>` or a file of 16 weights.
    #[arg(long, default_value = "uniform")]
    pub strategy: String,
    #[arg(long, default_value_t = 1_000_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Worker threads; the report does not depend on this.
    #[arg(long)]
    pub threads: Option<usize>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct AuditArgs {
    /// bell64, stapp71, stapp85, bell71 or chsh-signed.
    pub name: AuditKind,
    /// Random nonnegative instances to check in addition to the defaults.
    #[arg(long, default_value_t = 1000)]
    pub random: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BellArgs {
    /// Coplanar angles of a, b, c (degrees).
    #[arg(long, num_args = 3, allow_hyphen_values = true, conflicts_with = "axes")]
    pub angles: Option<Vec<f64>>,
    /// Three unit axes a b c, each as x,y,z.
    #[arg(long, num_args = 3, allow_hyphen_values = true, value_name = "X,Y,Z")]
    pub axes: Option<Vec<String>>,
    #[arg(long, conflicts_with = "axes")]
    pub photon: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Rendered output plus an invariant breach, if one was detected.
#[derive(Debug, Clone, PartialEq)]
pub struct Rendered {
    pub text: String,
    pub breach: Option<String>,
}

pub fn parse_axis(s: &str) -> Result<Axis> {
    let parts = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| Error::Invalid(format!("bad axis component {t:?}: {e}"))))
        .collect::<Result<Vec<_>>>()?;
    match parts.as_slice() {
        [x, y, z] => Axis::new(*x, *y, *z),
        _ => Err(Error::Invalid(format!("axis needs three components, got {s:?}"))),
    }
}

fn spin_angle(deg: f64, photon: bool) -> Result<f64> {
    if !deg.is_finite() {
        return Err(Error::NonFinite("angle"));
    }
    let rad = deg.to_radians();
    Ok(if photon { 2.0 * rad } else { rad })
}

/// Resolved axes, and the spin angle when they came from the coplanar family.
fn resolve_axes(a: &AxesArgs) -> Result<(AxisQuadruple, Option<f64>)> {
    match (&a.axes, a.coplanar_theta) {
        (Some(list), _) => {
            let axes = list.iter().map(|s| parse_axis(s)).collect::<Result<Vec<_>>>()?;
            Ok((AxisQuadruple::new(axes[0], axes[1], axes[2], axes[3]), None))
        }
        (None, Some(deg)) => {
            let theta = spin_angle(deg, a.photon)?;
            Ok((coplanar_axes(theta), Some(theta)))
        }
        (None, None) => Err(Error::Invalid("give --coplanar-theta or --axes".into())),
    }
}

pub fn cmd_table(args: &TableArgs) -> Result<Rendered> {
    let (q, _) = resolve_axes(&args.axes)?;
    let t = table2(&q, args.symmetry);
    let mut sheet = Sheet::new(["quadruple", "probability"]);
    for (s, p) in t.iter() {
        sheet.push(vec![s.to_string().into(), p.into()]);
    }
    sheet.push(vec!["delta".into(), delta(&q).into()]);
    sheet.push(vec!["sum".into(), t.sum().into()]);
    let breach = ((t.sum() - 1.0).abs() > IDENTITY_TOL).then(|| format!("table sums to {}", t.sum()));
    Ok(Rendered { text: sheet.render(args.output.format), breach })
}

pub fn sweep_columns() -> Vec<String> {
    let mut cols = vec!["theta_deg".to_string()];
    cols.extend(SignQuadruple::all().map(|s| format!("P({s})")));
    cols.extend(["delta", "chsh_closed", "chsh_dot", "chsh_master"].map(String::from));
    cols
}

pub fn cmd_sweep(args: &SweepArgs) -> Result<Rendered> {
    let (lo, hi, n) = (args.theta_min, args.theta_max, args.steps);
    if n < 2 || !lo.is_finite() || !hi.is_finite() || hi <= lo {
        return Err(Error::Invalid(format!("degenerate sweep range [{lo}, {hi}] with {n} steps")));
    }
    let mut sheet = Sheet::new(sweep_columns());
    let mut breach = None;
    for i in 0..n {
        let deg = lo + (hi - lo) * i as f64 / (n - 1) as f64;
        let theta = spin_angle(deg, args.photon)?;
        let q = coplanar_axes(theta);
        let t = table2(&q, args.symmetry);
        let closed = chsh_closed_form(theta);
        let dot = chsh_dot_form(&q);
        let master = chsh_master_form(&table2(&q, Symmetry::Symmetric), &table2(&q, Symmetry::Antisymmetric))?;
        let spread = (closed - dot).abs().max((closed - master).abs()).max((dot - master).abs());
        if breach.is_none() && spread > IDENTITY_TOL {
            breach = Some(format!("CHSH forms disagree by {spread} at theta = {deg}"));
        }
        if breach.is_none() && (t.sum() - 1.0).abs() > IDENTITY_TOL {
            breach = Some(format!("table sums to {} at theta = {deg}", t.sum()));
        }
        let mut row: Vec<Cell> = vec![deg.into()];
        row.extend(t.entries().iter().map(|&p| Cell::from(p)));
        row.extend([delta(&q), closed, dot, master].map(Cell::from));
        sheet.push(row);
    }
    Ok(Rendered { text: sheet.render(args.output.format), breach })
}

pub fn cmd_chsh(args: &ChshArgs) -> Result<Rendered> {
    let (q, theta) = resolve_axes(&args.axes)?;
    let dot = chsh_dot_form(&q);
    let master = chsh_master_form(&table2(&q, Symmetry::Symmetric), &table2(&q, Symmetry::Antisymmetric))?;
    let mut sheet = Sheet::new(["quantity", "value"]);
    let mut breach = None;
    if let Some(theta) = theta {
        let closed = chsh_closed_form(theta);
        sheet.push(vec!["closed_form".into(), closed.into()]);
        if (closed - dot).abs() > IDENTITY_TOL {
            breach = Some(format!("closed form {closed} vs dot form {dot}"));
        }
    }
    sheet.push(vec!["dot_form".into(), dot.into()]);
    sheet.push(vec!["master_form".into(), master.into()]);
    sheet.push(vec!["classical_bound".into(), 2.0.into()]);
    sheet.push(vec!["violates".into(), (dot.abs() > 2.0 + IDENTITY_TOL).into()]);
    if breach.is_none() && (dot - master).abs() > IDENTITY_TOL {
        breach = Some(format!("dot form {dot} vs master form {master}"));
    }
    Ok(Rendered { text: sheet.render(args.output.format), breach })
}

fn load_strategy(arg: &str) -> Result<LhvStrategy> {
    let looks_inline = arg == "uniform" || arg.starts_with("point:") || arg.starts_with("weights:");
    if !looks_inline {
        if let Ok(contents) = fs::read_to_string(arg) {
            return contents.parse();
        }
    }
    arg.parse()
}

pub fn cmd_lhv(args: &LhvArgs) -> Result<Rendered> {
    let strategy = load_strategy(&args.strategy)?;
    let est = match args.threads {
        Some(0) => return Err(Error::Invalid("--threads must be at least 1".into())),
        Some(n) => simulate_lhv_with_threads(&strategy, args.trials, args.seed, n)?,
        None => simulate_lhv(&strategy, args.trials, args.seed)?,
    };
    let exact = correlations_from_strategy(&strategy);
    let mut sheet = Sheet::new(["quantity", "estimate", "std_error", "exact"]);
    sheet.push(vec!["trials".into(), (args.trials as f64).into(), Cell::Empty, Cell::Empty]);
    sheet.push(vec!["seed".into(), args.seed.to_string().into(), Cell::Empty, Cell::Empty]);
    let names = [["C11", "C12"], ["C21", "C22"]];
    let (m, e, x) = (est.estimates.as_matrix(), est.std_errors.as_matrix(), exact.as_matrix());
    for i in 0..2 {
        for j in 0..2 {
            sheet.push(vec![names[i][j].into(), m[i][j].into(), e[i][j].into(), x[i][j].into()]);
        }
    }
    let sigma = est.chsh_std_error();
    sheet.push(vec!["CHSH".into(), est.chsh().into(), sigma.into(), exact.chsh().into()]);
    sheet.push(vec!["bound_2_plus_5sigma".into(), (2.0 + 5.0 * sigma).into(), Cell::Empty, Cell::Empty]);
    let verdict = if est.within_bound(5.0) { "PASS" } else { "FAIL" };
    sheet.push(vec!["result".into(), verdict.into(), Cell::Empty, Cell::Empty]);
    Ok(Rendered { text: sheet.render(args.output.format), breach: None })
}

fn describe_witness(w: &Witness) -> String {
    let join = |v: &mut dyn Iterator<Item = String>| v.collect::<Vec<_>>().join(";");
    match w {
        Witness::Density(d) => {
            let weights = join(&mut d.weights().iter().map(|w| crate::format::format_number(*w)));
            let rows = join(
                &mut d
                    .outcomes()
                    .iter()
                    .map(|o| o.iter().map(|s| s.as_char()).collect::<String>()),
            );
            format!("weights={weights} outcomes={rows}")
        }
        Witness::Frequencies(f) => format!("frequencies={}", join(&mut f.iter().map(|v| crate::format::format_number(*v)))),
        Witness::Mixture(m) => join(&mut m.iter().map(|(w, x)| {
            format!(
                "{}@{}",
                crate::format::format_number(*w),
                x.iter().map(|v| crate::format::format_number(*v)).collect::<Vec<_>>().join(" ")
            )
        })),
    }
}

fn push_report(sheet: &mut Sheet, label: &str, r: &AuditReport) {
    let row = |k: &str, v: Cell| vec![label.into(), k.into(), v];
    sheet.push(row("bound", r.bound.describe().into()));
    sheet.push(row("lhs", r.lhs.into()));
    sheet.push(row("rhs", r.rhs.into()));
    for (k, v) in &r.details {
        sheet.push(row(k, (*v).into()));
    }
    let status = if r.bound_respected { "PASS" } else { "VIOLATED" };
    sheet.push(row("status", status.into()));
    if let Some(w) = &r.witness {
        sheet.push(row("witness", describe_witness(w).into()));
    }
}

pub fn cmd_audit(args: &AuditArgs) -> Result<Rendered> {
    let kind = args.name;
    let (pass, signed) = audits::default_instances(kind)?;
    let mut sheet = Sheet::new(["instance", "quantity", "value"]);
    if kind == AuditKind::Stapp85 {
        let values: Vec<String> = audits::stapp85_summand_values()
            .iter()
            .map(|(v, _)| crate::format::format_number(*v))
            .collect();
        sheet.push(vec!["enumeration".into(), "value_set".into(), values.join(" ").into()]);
    }
    push_report(&mut sheet, "nonnegative", &pass);
    push_report(&mut sheet, "signed", &signed);
    let mut breach = None;
    if !pass.bound_respected {
        breach = Some(format!("{kind}: nonnegative instance broke the bound"));
    }
    if signed.bound_respected {
        breach = Some(format!("{kind}: signed instance did not break the bound"));
    }
    if args.random > 0 {
        let failures = audits::randomized_nonnegative(kind, args.random, args.seed)?;
        sheet.push(vec!["randomized".into(), "instances".into(), (args.random as f64).into()]);
        sheet.push(vec!["randomized".into(), "violations".into(), (failures as f64).into()]);
        if failures > 0 {
            breach = Some(format!("{kind}: {failures} random nonnegative instances broke the bound"));
        }
    }
    Ok(Rendered { text: sheet.render(args.output.format), breach })
}

pub fn cmd_bell(args: &BellArgs) -> Result<Rendered> {
    let [a, b, c] = match (&args.axes, &args.angles) {
        (Some(list), _) => {
            let v = list.iter().map(|s| parse_axis(s)).collect::<Result<Vec<_>>>()?;
            [v[0], v[1], v[2]]
        }
        (None, Some(deg)) => {
            let mut out = [Axis::Z; 3];
            for (slot, d) in out.iter_mut().zip(deg) {
                *slot = Axis::in_xz_plane(spin_angle(*d, args.photon)?);
            }
            out
        }
        (None, None) => {
            let mut out = [Axis::Z; 3];
            for (slot, d) in out.iter_mut().zip([0.0, 120.0, 60.0]) {
                *slot = Axis::in_xz_plane(spin_angle(d, args.photon)?);
            }
            out
        }
    };
    let check = bell_inequality_check(&a, &b, &c);
    let p = |x: &Axis, y: &Axis| pair_prob(x, SpinSign::Plus, y, SpinSign::Plus, Symmetry::Antisymmetric);
    let mut sheet = Sheet::new(["quantity", "value"]);
    sheet.push(vec!["P(a+,b+)".into(), p(&a, &b).into()]);
    sheet.push(vec!["P(a+,c+)".into(), p(&a, &c).into()]);
    sheet.push(vec!["P(c+,b+)".into(), p(&c, &b).into()]);
    sheet.push(vec!["lhs".into(), check.lhs.into()]);
    sheet.push(vec!["rhs".into(), check.rhs.into()]);
    sheet.push(vec!["violated".into(), check.violated.into()]);
    Ok(Rendered { text: sheet.render(args.output.format), breach: None })
}

fn output_target(cmd: &Command) -> &OutputArgs {
    match cmd {
        Command::Table(a) => &a.output,
        Command::Sweep(a) => &a.output,
        Command::Chsh(a) => &a.output,
        Command::Lhv(a) => &a.output,
        Command::Audit(a) => &a.output,
        Command::Bell(a) => &a.output,
    }
}

pub fn execute(cmd: &Command) -> Result<Rendered> {
    match cmd {
        Command::Table(a) => cmd_table(a),
        Command::Sweep(a) => cmd_sweep(a),
        Command::Chsh(a) => cmd_chsh(a),
        Command::Lhv(a) => cmd_lhv(a),
        Command::Audit(a) => cmd_audit(a),
        Command::Bell(a) => cmd_bell(a),
    }
}

/// Parses arguments, runs the command, writes output, and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let rendered = match execute(&cli.command) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return if matches!(e, Error::Invariant(_)) { 2 } else { 1 };
        }
    };
    match &output_target(&cli.command).out {
        Some(path) => {
            if let Err(e) = fs::write(path, &rendered.text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => print!("{}", rendered.text),
    }
    match rendered.breach {
        Some(msg) => {
            eprintln!("invariant breach: {msg}");
            2
        }
        None => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Command {
        let mut full = vec!["signed-bell"];
        full.extend_from_slice(args);
        Cli::try_parse_from(full).unwrap().command
    }

    #[test]
    fn negative_axis_components_parse() {
        match parse(&["table", "--axes", "-1,0,0", "0,0,1", "0,-1,0", "1,0,0"]) {
            Command::Table(t) => {
                let (q, theta) = resolve_axes(&t.axes).unwrap();
                assert_eq!(q.a1, -Axis::X);
                assert!(theta.is_none());
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn photon_doubles_angles() {
        let a = AxesArgs { coplanar_theta: Some(22.5), axes: None, photon: true };
        let (_, theta) = resolve_axes(&a).unwrap();
        assert!((theta.unwrap() - std::f64::consts::FRAC_PI_4).abs() <= 1e-15);
    }

    #[test]
    fn bad_axis_literal() {
        assert!(parse_axis("1,1,1").is_err());
        assert!(parse_axis("1,0").is_err());
        assert!(parse_axis("a,b,c").is_err());
    }

    #[test]
    fn photon_conflicts_with_axes() {
        let r = Cli::try_parse_from(["signed-bell", "chsh", "--photon", "--axes", "0,0,1", "0,0,1", "0,0,1", "0,0,1"]);
        assert!(r.is_err());
    }
}

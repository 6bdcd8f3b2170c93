//! Command-line front end: argument parsing, configuration files and report
//! output.
//!
//! Exit codes: 0 when the condition is verified, 1 when it is not
//! established, 2 for invalid input, 3 when a resource cap is exceeded.

use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::config::{custom, fermat, grid_example, three_points, two_pencils, Configuration, WitnessPair};
use crate::error::{Error, Result};
use crate::field::{CyclotomicField, Field, FieldSpec, PrimeField, RationalField};
use crate::parse::{parse_polynomial, parse_scalar};
use crate::points::{PointSet, ProjectivePoint};
use crate::poly::{MonomialOrder, Ring};
use crate::verifier::{summarize, verify, ConfigSummary, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "symrees", version, about = "Verify Huneke's condition for point sets in the projective plane")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fermat configuration: coordinate points plus the n x n root-of-unity grid.
    VerifyFermat {
        #[arg(long)]
        n: u64,
        /// Scalar used in the second witness.
        #[arg(long, default_value = "2")]
        alpha: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Grid of the two pencils y^m - z^m and z^n - x^n plus their base points.
    VerifyGrid {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        n: u64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Three non-collinear points with the triangle witnesses.
    VerifyThreePoints {
        /// Points as "a,b,c;d,e,f;g,h,i".
        #[arg(long, conflicts_with = "input")]
        points: Option<String>,
        /// Configuration file of kind "three-points".
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Any configuration file.
    VerifyCustom {
        /// Configuration file (JSON).
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Reduced Gröbner basis of the symbolic power I_H^(r).
    SymbolicPower {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long)]
        r: u32,
        /// Bound on the number of critical pairs per Gröbner basis.
        #[arg(long)]
        budget: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print a configuration: points, witnesses and provenance.
    ShowConfig {
        #[command(flatten)]
        source: SourceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

/// Where a configuration comes from when not fixed by the subcommand.
#[derive(Debug, Args)]
pub struct SourceArgs {
    /// Configuration file; otherwise `--m` and `--n` select a grid and `--n`
    /// alone a Fermat configuration.
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long)]
    n: Option<u64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long, default_value = "2")]
    alpha: String,
    /// 0 for exact arithmetic, or a prime p for a check over F_p.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
}

#[derive(Debug, Args)]
pub struct RunArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Truncation order at which the local length computation gives up.
    #[arg(long)]
    cap: Option<u32>,
    /// 0 for exact arithmetic, or a prime p for a check over F_p.
    #[arg(long = "char", default_value_t = 0)]
    characteristic: u64,
    /// Leave wall-clock timings out of the report.
    #[arg(long)]
    no_timings: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Emit JSON: to `--out` if given (text still goes to stdout), else to stdout.
    #[arg(long)]
    json: bool,
    /// File for the JSON report.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A scalar in a configuration file: an integer or a string in the
/// polynomial syntax.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Int(i64),
    Text(String),
}

impl Scalar {
    fn to_elem<F: Field>(&self, field: &F) -> Result<F::Elem> {
        match self {
            Scalar::Int(v) => Ok(field.from_i64(*v)),
            Scalar::Text(s) => parse_scalar(field, s),
        }
    }
}

/// Configuration file contents.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ConfigSpec {
    Fermat {
        n: u64,
        #[serde(default)]
        alpha: Option<String>,
        #[serde(default)]
        field: Option<FieldSpec>,
    },
    Grid {
        m: u64,
        n: u64,
        #[serde(default)]
        field: Option<FieldSpec>,
    },
    ThreePoints {
        points: Vec<[Scalar; 3]>,
        #[serde(default)]
        field: Option<FieldSpec>,
    },
    TwoPencils {
        #[serde(rename = "A")]
        a: [Scalar; 3],
        #[serde(rename = "B")]
        b: [Scalar; 3],
        f_factors: Vec<String>,
        g_factors: Vec<String>,
        #[serde(default)]
        field: Option<FieldSpec>,
    },
    Custom {
        points: Vec<[Scalar; 3]>,
        xi1: String,
        r1: u32,
        xi2: String,
        r2: u32,
        #[serde(default)]
        label: Option<String>,
        #[serde(default)]
        field: Option<FieldSpec>,
    },
}

impl ConfigSpec {
    pub fn from_file(path: &PathBuf) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        Ok(serde_json::from_str(&text)?)
    }

    fn explicit_field(&self) -> Option<FieldSpec> {
        match self {
            ConfigSpec::Fermat { field, .. }
            | ConfigSpec::Grid { field, .. }
            | ConfigSpec::ThreePoints { field, .. }
            | ConfigSpec::TwoPencils { field, .. }
            | ConfigSpec::Custom { field, .. } => *field,
        }
    }

    /// Order of the root of unity the construction needs, if any.
    fn root_order(&self) -> Option<u64> {
        match self {
            ConfigSpec::Fermat { n, .. } => Some(*n),
            ConfigSpec::Grid { m, n, .. } => Some(m.lcm(n)).filter(|&l| l > 2),
            _ => None,
        }
    }

    /// The coefficient field: explicit in the file, else the smallest field
    /// the construction needs; `characteristic > 0` switches to `F_p` with
    /// the same root of unity embedded.
    pub fn field_choice(&self, characteristic: u64) -> Result<FieldChoice> {
        let spec = match self.explicit_field() {
            Some(spec) => spec,
            None => match self.root_order() {
                Some(n) if n > 1 => FieldSpec::Cyclotomic { n },
                _ => FieldSpec::Rational,
            },
        };
        let root = match spec {
            FieldSpec::Cyclotomic { n } => Some(n),
            _ => self.root_order(),
        };
        if characteristic != 0 {
            return Ok(FieldChoice::Prime { p: characteristic, root });
        }
        match spec {
            FieldSpec::Rational => Ok(FieldChoice::Rational),
            FieldSpec::Cyclotomic { n } => Ok(FieldChoice::Cyclotomic(n)),
            FieldSpec::Prime { p } => Ok(FieldChoice::Prime { p, root }),
            FieldSpec::PrimePower { .. } => Err(Error::InvalidField(format!("{spec} is not accepted as input"))),
        }
    }

    /// Build the configuration over `ring`.
    pub fn build<F: Field>(&self, ring: &Arc<Ring<F>>) -> Result<Configuration<F>> {
        let field = ring.field();
        let point = |s: &[Scalar; 3]| -> Result<ProjectivePoint<F>> {
            let c = [s[0].to_elem(field)?, s[1].to_elem(field)?, s[2].to_elem(field)?];
            ProjectivePoint::new(field, c)
        };
        let polys = |v: &[String]| v.iter().map(|s| parse_polynomial(ring, s)).collect::<Result<Vec<_>>>();
        match self {
            ConfigSpec::Fermat { n, alpha, .. } => {
                let alpha = parse_scalar(field, alpha.as_deref().unwrap_or("2"))?;
                fermat(ring, *n, &alpha)
            }
            ConfigSpec::Grid { m, n, .. } => grid_example(ring, *m, *n),
            ConfigSpec::ThreePoints { points, .. } => {
                let pts: Vec<_> = points.iter().map(point).collect::<Result<_>>()?;
                let pts: [ProjectivePoint<F>; 3] = pts
                    .try_into()
                    .map_err(|_| Error::Input("three-points needs exactly three points".into()))?;
                three_points(ring, pts)
            }
            ConfigSpec::TwoPencils {
                a,
                b,
                f_factors,
                g_factors,
                ..
            } => two_pencils(ring, &polys(f_factors)?, &polys(g_factors)?, &point(a)?, &point(b)?),
            ConfigSpec::Custom {
                points,
                xi1,
                r1,
                xi2,
                r2,
                label,
                ..
            } => {
                let pts = points.iter().map(point).collect::<Result<Vec<_>>>()?;
                let set = PointSet::new(pts, label.clone().unwrap_or_else(|| format!("{} points", points.len())))?;
                let w = WitnessPair::new(parse_polynomial(ring, xi1)?, *r1, parse_polynomial(ring, xi2)?, *r2)?;
                Ok(custom(ring, set, w))
            }
        }
    }
}

/// A field chosen at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    Rational,
    Cyclotomic(u64),
    /// `F_p`, with `w` the smallest residue of order `root` when given.
    Prime { p: u64, root: Option<u64> },
}

/// Work that is generic over the coefficient field.
pub trait FieldJob {
    type Output;
    fn run<F: Field>(self, field: F) -> Result<Self::Output>;
}

/// Instantiate the field and run `job` over it.
pub fn dispatch<J: FieldJob>(choice: FieldChoice, job: J) -> Result<J::Output> {
    match choice {
        FieldChoice::Rational => job.run(RationalField),
        FieldChoice::Cyclotomic(n) => job.run(CyclotomicField::new(n)?),
        FieldChoice::Prime { p, root: Some(n) } => job.run(PrimeField::with_root_of_order(p, n)?),
        FieldChoice::Prime { p, root: None } => job.run(PrimeField::new(p)?),
    }
}

struct VerifyJob<'a> {
    spec: &'a ConfigSpec,
    opts: VerifyOptions,
}

impl FieldJob for VerifyJob<'_> {
    type Output = crate::verifier::VerificationReport;

    fn run<F: Field>(self, field: F) -> Result<Self::Output> {
        let ring = Ring::xyz(field);
        verify(&self.spec.build(&ring)?, &self.opts)
    }
}

/// Output of the `symbolic-power` subcommand.
#[derive(Debug, Serialize)]
pub struct SymbolicPowerReport {
    pub config: ConfigSummary,
    pub field: FieldSpec,
    pub r: u32,
    /// Reduced Gröbner basis in grevlex order, largest lead term first.
    pub generators: Vec<String>,
}

struct SymbolicPowerJob<'a> {
    spec: &'a ConfigSpec,
    r: u32,
    budget: Option<usize>,
}

impl FieldJob for SymbolicPowerJob<'_> {
    type Output = SymbolicPowerReport;

    fn run<F: Field>(self, field: F) -> Result<Self::Output> {
        let ring = Ring::xyz(field);
        let config = self.spec.build(&ring)?;
        let ideal = config.points.symbolic_power_ideal(&ring, self.r, self.budget)?;
        let gb = ideal.groebner_in(MonomialOrder::Grevlex, self.budget)?;
        Ok(SymbolicPowerReport {
            config: summarize(&config),
            field: ring.field().spec(),
            r: self.r,
            generators: gb.elements().iter().map(|g| g.to_string()).collect(),
        })
    }
}

struct ShowJob<'a> {
    spec: &'a ConfigSpec,
}

impl FieldJob for ShowJob<'_> {
    type Output = (FieldSpec, ConfigSummary);

    fn run<F: Field>(self, field: F) -> Result<Self::Output> {
        let ring = Ring::xyz(field);
        Ok((ring.field().spec(), summarize(&self.spec.build(&ring)?)))
    }
}

impl SourceArgs {
    fn spec(&self) -> Result<ConfigSpec> {
        match (&self.input, self.m, self.n) {
            (Some(path), _, _) => ConfigSpec::from_file(path),
            (None, Some(m), Some(n)) => Ok(ConfigSpec::Grid { m, n, field: None }),
            (None, None, Some(n)) => Ok(ConfigSpec::Fermat {
                n,
                alpha: Some(self.alpha.clone()),
                field: None,
            }),
            _ => Err(Error::Input("give --input, --n, or --m and --n".into())),
        }
    }
}

fn parse_points(text: &str) -> Result<Vec<[Scalar; 3]>> {
    text.split(';')
        .map(|p| {
            let c: Vec<Scalar> = p.split(',').map(|s| Scalar::Text(s.trim().to_string())).collect();
            c.try_into()
                .map_err(|_| Error::Input(format!("point '{p}' needs three coordinates")))
        })
        .collect()
}

/// Write the text and JSON forms according to `--json` and `--out`.
fn emit(output: &OutputArgs, text: &str, json: &str) -> Result<()> {
    match (output.json, &output.out) {
        (true, Some(path)) => {
            print!("{text}");
            std::fs::write(path, format!("{json}\n")).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        (true, None) => {
            println!("{json}");
            Ok(())
        }
        (false, _) => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_verify(spec: ConfigSpec, run: &RunArgs) -> Result<i32> {
    let choice = spec.field_choice(run.characteristic)?;
    let opts = VerifyOptions {
        seed: run.seed,
        cap: run.cap,
        timings: !run.no_timings,
    };
    let report = dispatch(choice, VerifyJob { spec: &spec, opts })?;
    emit(&run.output, &report.render_text(), &report.to_json())?;
    Ok(report.exit_code())
}

/// Execute a parsed command and return the process exit code.
pub fn execute(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::VerifyFermat { n, alpha, run } => run_verify(
            ConfigSpec::Fermat {
                n,
                alpha: Some(alpha),
                field: None,
            },
            &run,
        ),
        Command::VerifyGrid { m, n, run } => run_verify(ConfigSpec::Grid { m, n, field: None }, &run),
        Command::VerifyThreePoints { points, input, run } => {
            let spec = match (points, input) {
                (Some(text), _) => ConfigSpec::ThreePoints {
                    points: parse_points(&text)?,
                    field: None,
                },
                (None, Some(path)) => match ConfigSpec::from_file(&path)? {
                    spec @ ConfigSpec::ThreePoints { .. } => spec,
                    _ => return Err(Error::Input("expected a configuration of kind three-points".into())),
                },
                (None, None) => return Err(Error::Input("give --points or --input".into())),
            };
            run_verify(spec, &run)
        }
        Command::VerifyCustom { input, run } => run_verify(ConfigSpec::from_file(&input)?, &run),
        Command::SymbolicPower {
            source,
            r,
            budget,
            output,
        } => {
            let spec = source.spec()?;
            let choice = spec.field_choice(source.characteristic)?;
            let report = dispatch(choice, SymbolicPowerJob { spec: &spec, r, budget })?;
            let mut text = format!(
                "{}: I_H^({}) over {} has {} generators\n",
                report.config.id,
                r,
                report.field,
                report.generators.len()
            );
            for g in &report.generators {
                text.push_str(&format!("  {g}\n"));
            }
            let json = serde_json::to_string_pretty(&report).expect("report serializes");
            emit(&output, &text, &json)?;
            Ok(0)
        }
        Command::ShowConfig { source, output } => {
            let spec = source.spec()?;
            let choice = spec.field_choice(source.characteristic)?;
            let (field, summary) = dispatch(choice, ShowJob { spec: &spec })?;
            let json = serde_json::to_string_pretty(&serde_json::json!({
                "field": field,
                "config": summary,
            }))
            .expect("summary serializes");
            let mut text = format!("{} over {field}\n", summary.id);
            for (i, p) in summary.points.iter().enumerate() {
                text.push_str(&format!("  P{}: ({})\n", i + 1, p.join(" : ")));
            }
            text.push_str(&format!("  xi1 (r = {}): {}\n", summary.r1, summary.xi1));
            text.push_str(&format!("  xi2 (r = {}): {}\n", summary.r2, summary.xi2));
            emit(&output, &text, &json)?;
            Ok(0)
        }
    }
}

/// [`execute`], reporting errors on stderr and mapping them to exit codes.
pub fn run(cli: Cli) -> i32 {
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

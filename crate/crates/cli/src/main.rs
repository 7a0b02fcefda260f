//! Command-line front end: expression parsing, subcommand dispatch, and
//! bit-exact output in plain, JSON, or LaTeX form.
//!
//! Exit codes: 0 success; 2 incompatible data (residual printed);
//! 3 parse/usage error; 4 internal invariant violation.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use neumann_core::quadrature::{surface_integral, volume_integral, ScaledIntegral};
use neumann_core::rational::{format_rational, parse_rational, to_f64};
use neumann_core::{
    anti_laplacian, boundary_data, divergence, electric_field, generalized_compatible,
    neumann_compatible, parse_polynomial, solve_generalized, solve_neumann, verify_solution,
    Ellipsoid, Error, PolyVectorField, Polynomial, SolutionDocument,
};
use num::Zero;

const EXIT_INCOMPATIBLE: u8 = 2;
const EXIT_USAGE: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "neumann",
    version,
    about = "Exact solver for the Neumann problem on ellipsoids with polynomial data"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Latex,
}

#[derive(Args)]
struct Common {
    /// Ellipsoid coefficients as comma-separated positive rationals, e.g. 3,1,2
    #[arg(long, value_name = "LIST")]
    beta: String,
    /// Ambient dimension; inferred from --beta when omitted
    #[arg(long, value_name = "N")]
    dim: Option<usize>,
    /// Output format
    #[arg(long, value_enum, default_value = "plain")]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the Neumann problem: harmonic h with normal data f/|grad q|
    Solve {
        #[command(flatten)]
        common: Common,
        /// Subtract the compatibility residual from f before solving
        #[arg(long)]
        adjust_constant: bool,
        /// Boundary polynomial f
        #[arg(allow_hyphen_values = true)]
        f: String,
    },
    /// Solve the generalized problem: Laplacian g prescribed instead of 0
    SolveGeneral {
        #[command(flatten)]
        common: Common,
        /// Boundary polynomial f
        #[arg(allow_hyphen_values = true)]
        f: String,
        /// Prescribed Laplacian g
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Compute a polynomial u with Laplacian u = g
    Antilaplacian {
        /// Ambient dimension
        #[arg(long, value_name = "N")]
        dim: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
        #[arg(long, value_name = "PATH")]
        output: Option<PathBuf>,
        /// Input polynomial g
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Integrate a polynomial over the boundary surface or the solid volume
    Integrate {
        #[command(flatten)]
        common: Common,
        /// Also print a floating-point approximation
        #[arg(long)]
        approx: bool,
        /// Domain of integration
        #[arg(value_parser = ["surface", "volume"])]
        domain: String,
        /// Integrand (surface integrals carry the 1/|grad q| weight)
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Report the compatibility residual for f (and optionally g)
    Check {
        #[command(flatten)]
        common: Common,
        /// Boundary polynomial f
        #[arg(allow_hyphen_values = true)]
        f: String,
        /// Prescribed Laplacian g for the generalized condition
        #[arg(allow_hyphen_values = true)]
        g: Option<String>,
    },
    /// Re-verify a previously emitted JSON solution document
    Verify {
        /// Path to the solution document
        file: PathBuf,
    },
    /// Induced electric field E = -grad V - dA/dt inside the ellipsoid
    MriEfield {
        #[command(flatten)]
        common: Common,
        /// Emit a CSV of field samples on a K-per-axis lattice inside E
        #[arg(long, value_name = "K")]
        sample: Option<usize>,
        /// Components of -dA/dt, one expression per axis; put them after `--`
        /// if the first one starts with a minus sign
        #[arg(required = true)]
        components: Vec<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            if let Error::Incompatible {
                adjusted: Some(f), ..
            } = &err
            {
                eprintln!("adjusted f = {}", f.to_plain_string());
            }
            ExitCode::from(exit_code_for(&err))
        }
    }
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::Incompatible { .. } | Error::GaugeViolation { .. } => EXIT_INCOMPATIBLE,
        Error::Parse(_) | Error::InvalidEllipsoid(_) | Error::DimensionMismatch(..) => EXIT_USAGE,
        _ => EXIT_INTERNAL,
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidEllipsoid(msg.into())
}

fn parse_beta(spec: &str) -> Result<Ellipsoid, Error> {
    let beta = spec
        .split(',')
        .map(|part| {
            parse_rational(part).ok_or_else(|| usage(format!("bad --beta entry '{part}'")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ellipsoid::new(beta)
}

impl Common {
    fn ellipsoid(&self) -> Result<Ellipsoid, Error> {
        let e = parse_beta(&self.beta)?;
        if let Some(dim) = self.dim {
            if dim != e.dim() {
                return Err(usage(format!(
                    "--dim {dim} does not match the {} entries of --beta",
                    e.dim()
                )));
            }
        }
        Ok(e)
    }
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match output {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InternalInvariant(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn format_poly(p: &Polynomial, format: Format) -> String {
    match format {
        Format::Latex => p.to_latex_string(),
        _ => p.to_plain_string(),
    }
}

fn solution_text(
    doc: &SolutionDocument,
    sol: &neumann_core::NeumannSolution,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc).expect("document serializes");
            s.push('\n');
            s
        }
        Format::Plain => format!(
            "h = {}\ncertificate g = {}\n",
            sol.h.to_plain_string(),
            sol.g.to_plain_string()
        ),
        Format::Latex => format!(
            "h = {}\ncertificate g = {}\n",
            sol.h.to_latex_string(),
            sol.g.to_latex_string()
        ),
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Solve {
            common,
            adjust_constant,
            f,
        } => {
            let e = common.ellipsoid()?;
            let mut f = parse_polynomial(&f, e.dim())?;
            if adjust_constant {
                let residual = neumann_compatible(&e, &f)?;
                if !residual.is_zero() {
                    eprintln!(
                        "note: subtracted compatibility residual {}",
                        format_rational(&residual)
                    );
                    f = &f - &Polynomial::constant(e.dim(), residual);
                }
            }
            let sol = solve_neumann(&e, &f)?;
            let report = verify_solution(&e, &sol.h, &f, None)?;
            if !report.ok {
                return Err(Error::InternalInvariant(
                    "solution failed independent verification".into(),
                ));
            }
            let doc = SolutionDocument::from_solution(&sol, &f, None, &report);
            emit(&common.output, &solution_text(&doc, &sol, common.format))
        }
        Command::SolveGeneral { common, f, g } => {
            let e = common.ellipsoid()?;
            let f = parse_polynomial(&f, e.dim())?;
            let g = parse_polynomial(&g, e.dim())?;
            let sol = solve_generalized(&e, &f, &g)?;
            let report = verify_solution(&e, &sol.h, &f, Some(&g))?;
            if !report.ok {
                return Err(Error::InternalInvariant(
                    "solution failed independent verification".into(),
                ));
            }
            let doc = SolutionDocument::from_solution(&sol, &f, Some(&g), &report);
            emit(&common.output, &solution_text(&doc, &sol, common.format))
        }
        Command::Antilaplacian {
            dim,
            format,
            output,
            g,
        } => {
            if dim < 2 {
                return Err(usage("--dim must be at least 2"));
            }
            let g = parse_polynomial(&g, dim)?;
            let u = anti_laplacian(&g);
            let text = match format {
                Format::Json => {
                    let doc = serde_json::json!({
                        "schema": 1,
                        "dimension": dim,
                        "input_g": g.to_plain_string(),
                        "antilaplacian": u.to_plain_string(),
                    });
                    let mut s = serde_json::to_string_pretty(&doc).expect("serializes");
                    s.push('\n');
                    s
                }
                _ => format!("{}\n", format_poly(&u, format)),
            };
            emit(&output, &text)
        }
        Command::Integrate {
            common,
            approx,
            domain,
            p,
        } => {
            let e = common.ellipsoid()?;
            let p = parse_polynomial(&p, e.dim())?;
            let integral = if domain == "surface" {
                surface_integral(&e, &p)?
            } else {
                volume_integral(&e, &p)?
            };
            emit(&common.output, &integral_text(&integral, common.format, approx))
        }
        Command::Check { common, f, g } => {
            let e = common.ellipsoid()?;
            let f = parse_polynomial(&f, e.dim())?;
            let residual = match &g {
                Some(g) => {
                    let g = parse_polynomial(g, e.dim())?;
                    generalized_compatible(&e, &f, &g)?
                }
                None => neumann_compatible(&e, &f)?,
            };
            println!("residual = {}", format_rational(&residual));
            if residual.is_zero() {
                Ok(())
            } else {
                let adjusted = (g.is_none())
                    .then(|| &f - &Polynomial::constant(e.dim(), residual.clone()));
                Err(Error::Incompatible { residual, adjusted })
            }
        }
        Command::Verify { file } => {
            let text = fs::read_to_string(&file).map_err(|e| {
                usage(format!("cannot read {}: {e}", file.display()))
            })?;
            let doc: SolutionDocument = serde_json::from_str(&text)
                .map_err(|e| usage(format!("malformed solution document: {e}")))?;
            let report = doc.reverify()?;
            println!(
                "laplacian_ok = {}\nboundary_ok = {}\norigin_ok = {}",
                report.laplacian_residual.is_zero(),
                report.boundary_remainder.is_zero(),
                report.origin_value.is_zero()
            );
            if report.ok {
                println!("verified");
                Ok(())
            } else {
                eprintln!("error: document does not verify");
                std::process::exit(EXIT_INCOMPATIBLE as i32);
            }
        }
        Command::MriEfield {
            common,
            sample,
            components,
        } => {
            let e = common.ellipsoid()?;
            if components.len() != e.dim() {
                return Err(usage(format!(
                    "expected {} field components, got {}",
                    e.dim(),
                    components.len()
                )));
            }
            // the command takes -dA/dt; the library works with dA/dt
            let comps = components
                .iter()
                .map(|src| parse_polynomial(src, e.dim()).map(|p| p.neg()).map_err(Error::from))
                .collect::<Result<Vec<_>, _>>()?;
            let da_dt = PolyVectorField::new(comps)?;
            let f = boundary_data(&e, &da_dt)?;
            let (v, field) = electric_field(&e, &da_dt)?;
            debug_assert!(divergence(&field).is_zero());
            let mut text = mri_text(&e, &f, &v, &field, common.format);
            if let Some(k) = sample {
                text.push('\n');
                text.push_str(&sample_csv(&e, &field, k)?);
            }
            emit(&common.output, &text)
        }
    }
}

fn integral_text(integral: &ScaledIntegral, format: Format, approx: bool) -> String {
    let coeff = format_rational(integral.coefficient());
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "coefficient": coeff,
                "unit": integral.unit_description(),
                "approx": approx.then(|| integral.approx()),
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializes");
            s.push('\n');
            s
        }
        _ => {
            let mut s = format!(
                "({coeff})*kappa, kappa = {}\n",
                integral.unit_description()
            );
            if approx {
                s.push_str(&format!("approx = {:.12e}\n", integral.approx()));
            }
            s
        }
    }
}

fn mri_text(
    e: &Ellipsoid,
    f: &Polynomial,
    v: &Polynomial,
    field: &PolyVectorField,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let doc = serde_json::json!({
                "schema": 1,
                "dimension": e.dim(),
                "beta": e.beta().iter().map(format_rational).collect::<Vec<_>>(),
                "boundary_f": f.to_plain_string(),
                "V": v.to_plain_string(),
                "E": field
                    .components()
                    .iter()
                    .map(Polynomial::to_plain_string)
                    .collect::<Vec<_>>(),
            });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializes");
            s.push('\n');
            s
        }
        _ => {
            let mut s = format!("V = {}\n", format_poly(v, format));
            for (j, comp) in field.components().iter().enumerate() {
                s.push_str(&format!("E{} = {}\n", j + 1, format_poly(comp, format)));
            }
            s
        }
    }
}

/// CSV samples of E on a k-per-axis lattice over the bounding box of E,
/// keeping only points strictly inside the ellipsoid.
fn sample_csv(e: &Ellipsoid, field: &PolyVectorField, k: usize) -> Result<String, Error> {
    if k < 2 {
        return Err(usage("--sample needs at least 2 points per axis"));
    }
    let n = e.dim();
    let semi_axes: Vec<f64> = e.beta().iter().map(|b| 1.0 / to_f64(b).sqrt()).collect();
    let mut header: Vec<String> = (1..=n).map(|j| format!("x{j}")).collect();
    header.extend((1..=n).map(|j| format!("E{j}")));
    header.push("abs_E".into());
    let mut out = header.join(",");
    out.push('\n');

    let q = e.q();
    let mut index = vec![0usize; n];
    loop {
        let point: Vec<f64> = index
            .iter()
            .zip(&semi_axes)
            .map(|(&i, &a)| a * (2.0 * i as f64 / (k - 1) as f64 - 1.0))
            .collect();
        if q.evaluate_f64(&point) <= 1.0 {
            let mut row: Vec<String> = point.iter().map(|x| format!("{x:.9}")).collect();
            let values: Vec<f64> = field
                .components()
                .iter()
                .map(|c| c.evaluate_f64(&point))
                .collect();
            let norm = values.iter().map(|v| v * v).sum::<f64>().sqrt();
            row.extend(values.iter().map(|v| format!("{v:.9}")));
            row.push(format!("{norm:.9}"));
            out.push_str(&row.join(","));
            out.push('\n');
        }
        // advance the mixed-radix counter
        let mut axis = 0;
        loop {
            if axis == n {
                return Ok(out);
            }
            index[axis] += 1;
            if index[axis] < k {
                break;
            }
            index[axis] = 0;
            axis += 1;
        }
    }
}

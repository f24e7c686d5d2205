//! csint: evaluate the special-function kernel and run identity
//! verification suites from the command line.
//!
//! Exit codes: 0 success / all instances passed (skipped methods allowed),
//! 1 numeric or I/O failure (or failing instances), 2 usage errors.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use csint::coherent::{CoherentStateFamily, CsKind, CsLabel};
use csint::engine::{
    builtin_suite, parse_instances, verify, IdentityInstance, VerificationReport, VerifyOptions,
};
use csint::hypergeom::ParameterSet;
use csint::special::{bessel, classical_poly, BesselKind, PolyFamily};
use csint::value::EvalOptions;
use csint::weight::{classify_weight, weight_eval};

#[derive(Parser)]
#[command(name = "csint", version, about = "coherent-state integral identities: evaluation and verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function of the kernel
    Eval {
        #[command(subcommand)]
        target: EvalTarget,
    },
    /// Verify instances from an instance file (one JSON record per line)
    Verify {
        /// Path to the instance file
        #[arg(long)]
        instances: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Run a built-in verification suite
    Suite {
        /// Suite name (see `csint list suites`)
        #[arg(long)]
        name: String,
        #[command(flatten)]
        run: RunArgs,
    },
    /// List suites, presets or dictionary cases
    List {
        /// What to list: suites, presets or cases
        #[arg(default_value = "suites")]
        what: String,
    },
}

#[derive(Args)]
struct SeriesArgs {
    /// Comma-separated upper parameters {a_i}; omit for an empty list
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    a: Vec<f64>,
    /// Comma-separated lower parameters {b_j}; omit for an empty list
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    b: Vec<f64>,
    /// Optional redundant p; validated against the list length
    #[arg(long)]
    p: Option<usize>,
    /// Optional redundant q; validated against the list length
    #[arg(long)]
    q: Option<usize>,
}

impl SeriesArgs {
    fn params(&self) -> Result<ParameterSet, String> {
        if let Some(p) = self.p {
            if p != self.a.len() {
                return Err(format!("--p {} does not match {} upper parameters", p, self.a.len()));
            }
        }
        if let Some(q) = self.q {
            if q != self.b.len() {
                return Err(format!("--q {} does not match {} lower parameters", q, self.b.len()));
            }
        }
        Ok(ParameterSet::new(self.a.clone(), self.b.clone()))
    }
}

#[derive(Subcommand)]
enum EvalTarget {
    /// Generalized hypergeometric series pFq({a}; {b}; z)
    Pfq {
        #[command(flatten)]
        series: SeriesArgs,
        /// Real part of the argument
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
        /// Imaginary part of the argument
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        z_im: f64,
        #[arg(long, default_value_t = 1e-12)]
        tol: f64,
        #[arg(long)]
        max_terms: Option<usize>,
    },
    /// Meijer-G weight W(x) of a parameter set
    Weight {
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long)]
        x: f64,
    },
    /// Classical orthogonal polynomial
    Poly {
        /// legendre | hermite | laguerre | chebyshev-t | chebyshev-u
        #[arg(long)]
        family: String,
        /// Laguerre order parameter
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        lambda: f64,
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: f64,
    },
    /// Bessel function J, I or K
    Bessel {
        /// j | i | k
        #[arg(long)]
        kind: String,
        #[arg(long)]
        order: f64,
        #[arg(long)]
        x: f64,
    },
    /// Coherent-state overlap kernel
    Overlap {
        /// bg | kp (GK labels are not complex numbers)
        #[arg(long, default_value = "bg")]
        family: String,
        #[command(flatten)]
        series: SeriesArgs,
        #[arg(long, allow_hyphen_values = true)]
        z: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        z_im: f64,
        #[arg(long, allow_hyphen_values = true)]
        zp: f64,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        zp_im: f64,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Tolerance override (default: per-family defaults)
    #[arg(long)]
    tol: Option<f64>,
    /// Series term budget (default 10000; env CSINT_MAX_TERMS overrides)
    #[arg(long)]
    max_terms: Option<usize>,
    /// human | json-lines | csv
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Write the report here instead of stdout
    #[arg(long)]
    output: Option<String>,
    /// Worker threads (default: number of processors)
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Human,
    JsonLines,
    Csv,
}

fn max_terms_default() -> usize {
    std::env::var("CSINT_MAX_TERMS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(10_000)
}

fn fail(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(1)
}

fn run_eval(target: EvalTarget) -> ExitCode {
    match target {
        EvalTarget::Pfq {
            series,
            z,
            z_im,
            tol,
            max_terms,
        } => {
            let params = match series.params() {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            let opts = EvalOptions {
                tol,
                max_terms: max_terms.unwrap_or_else(max_terms_default),
            };
            match csint::hypergeom::pfq(&params, Complex64::new(z, z_im), opts) {
                Ok(v) => {
                    if v.value.im == 0.0 {
                        println!("value = {:.10}", v.value.re);
                    } else {
                        println!("value = {:.10} + {:.10}i", v.value.re, v.value.im);
                    }
                    println!(
                        "abs_error_estimate = {:e}\nterms_used = {}\nconverged = {}\nterminated = {}",
                        v.abs_error_estimate, v.terms_used, v.converged, v.terminated
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        EvalTarget::Weight { series, x } => {
            let params = match series.params() {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            match classify_weight(&params).and_then(|form| {
                let v = weight_eval(&form, x)?;
                Ok((form, v))
            }) {
                Ok((form, v)) => {
                    println!("class = {:?}", form.tag);
                    println!("support_upper = {}", form.support_upper);
                    println!("value = {:.10}", v.value.re);
                    println!("abs_error_estimate = {:e}", v.abs_error_estimate);
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        EvalTarget::Poly {
            family,
            lambda,
            n,
            x,
        } => {
            let fam = match family.parse::<PolyFamily>() {
                Ok(PolyFamily::Laguerre { .. }) => PolyFamily::Laguerre { lambda },
                Ok(f) => f,
                Err(e) => return fail(e),
            };
            println!("value = {:.10}", classical_poly(fam, n, x));
            ExitCode::SUCCESS
        }
        EvalTarget::Bessel { kind, order, x } => {
            let kind = match kind.parse::<BesselKind>() {
                Ok(k) => k,
                Err(e) => return fail(e),
            };
            match bessel(kind, order, x) {
                Ok(v) => {
                    println!("value = {:.10e}", v.value.re);
                    println!("abs_error_estimate = {:e}", v.abs_error_estimate);
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        EvalTarget::Overlap {
            family,
            series,
            z,
            z_im,
            zp,
            zp_im,
        } => {
            let params = match series.params() {
                Ok(p) => p,
                Err(e) => return fail(e),
            };
            let kind = match family.as_str() {
                "bg" => CsKind::Bg,
                "kp" => CsKind::Kp,
                other => return fail(format!("unknown family `{other}` (bg or kp)")),
            };
            match CoherentStateFamily::new(kind, params)
                .and_then(|fam| fam.overlap(&CsLabel::z(z, z_im), &CsLabel::z(zp, zp_im)))
            {
                Ok(v) => {
                    println!("value = {:.12} + {:.12}i", v.re, v.im);
                    println!("modulus = {:.12}", v.norm());
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn format_reports(reports: &[VerificationReport], format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Human => {
            for r in reports {
                let status = if r.pass { "PASS" } else { "FAIL" };
                out.push_str(&format!(
                    "{status} {:<40} tol={:.1e} rhs={:.10e}",
                    r.instance.label, r.tolerance, r.rhs_closed_form
                ));
                if let Some(m) = r.lhs_moment {
                    out.push_str(&format!(
                        " moment={:.10e} (d={:.2e})",
                        m,
                        r.rel_diff.get("moment").copied().unwrap_or(f64::NAN)
                    ));
                }
                if let Some(q) = r.lhs_quadrature {
                    out.push_str(&format!(
                        " quad={:.10e} (d={:.2e})",
                        q,
                        r.rel_diff.get("quadrature").copied().unwrap_or(f64::NAN)
                    ));
                }
                if let Some(m) = &r.matched_form {
                    out.push_str(&format!(" matched={m}"));
                }
                out.push('\n');
                for d in &r.diagnostics {
                    out.push_str(&format!("     note: {d}\n"));
                }
            }
        }
        Format::JsonLines => {
            for r in reports {
                out.push_str(&serde_json::to_string(r).expect("report serializes"));
                out.push('\n');
            }
        }
        Format::Csv => {
            out.push_str(
                "label,family,pass,tolerance,lhs_moment,lhs_quadrature,rhs_closed_form,\
                 diff_moment,diff_quadrature,diff_moment_vs_quadrature,matched_form,methods,diagnostics\n",
            );
            let opt = |v: Option<f64>| v.map(|x| x.to_string()).unwrap_or_default();
            for r in reports {
                let row = [
                    csv_escape(&r.instance.label),
                    r.instance.family.as_str().to_string(),
                    r.pass.to_string(),
                    r.tolerance.to_string(),
                    opt(r.lhs_moment),
                    opt(r.lhs_quadrature),
                    r.rhs_closed_form.to_string(),
                    opt(r.rel_diff.get("moment").copied()),
                    opt(r.rel_diff.get("quadrature").copied()),
                    opt(r.rel_diff.get("moment_vs_quadrature").copied()),
                    r.matched_form.clone().unwrap_or_default(),
                    r.methods_run.join(";"),
                    csv_escape(&r.diagnostics.join(";")),
                ];
                out.push_str(&row.join(","));
                out.push('\n');
            }
        }
    }
    out
}

fn run_reports(instances: Vec<IdentityInstance>, run: RunArgs) -> ExitCode {
    let opts = VerifyOptions {
        tol: run.tol,
        max_terms: run.max_terms.unwrap_or_else(max_terms_default),
        ..Default::default()
    };

    let reports: Vec<VerificationReport> = if run.jobs == Some(1) {
        instances.iter().map(|i| verify(i, &opts)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(run.jobs.unwrap_or(0))
            .build();
        match pool {
            Ok(pool) => pool.install(|| {
                use rayon::prelude::*;
                // fan out, then restore instance order for deterministic output
                let mut indexed: Vec<(usize, VerificationReport)> = instances
                    .par_iter()
                    .enumerate()
                    .map(|(i, inst)| (i, verify(inst, &opts)))
                    .collect();
                indexed.sort_by_key(|(i, _)| *i);
                indexed.into_iter().map(|(_, r)| r).collect()
            }),
            Err(e) => return fail(e),
        }
    };

    let passed = reports.iter().filter(|r| r.pass).count();
    let failed = reports.iter().filter(|r| !r.pass && !r.methods_run.is_empty()).count();
    let skipped = reports.iter().filter(|r| r.methods_run.is_empty()).count();

    let mut body = format_reports(&reports, run.format);
    if matches!(run.format, Format::Human) {
        body.push_str(&format!("summary: {passed} passed / {failed} failed / {skipped} skipped\n"));
    }

    if let Some(path) = &run.output {
        if let Err(e) = std::fs::write(path, &body) {
            return fail(e);
        }
        println!("summary: {passed} passed / {failed} failed / {skipped} skipped");
    } else {
        let mut stdout = std::io::stdout().lock();
        if stdout.write_all(body.as_bytes()).is_err() {
            return ExitCode::from(1);
        }
        if !matches!(run.format, Format::Human) {
            eprintln!("summary: {passed} passed / {failed} failed / {skipped} skipped");
        }
    }

    if failed == 0 && skipped == 0 {
        ExitCode::SUCCESS
    } else if failed == 0 {
        // skips are allowed but still reported through the summary
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Eval { target } => run_eval(target),
        Command::Verify { instances, run } => {
            let text = match std::fs::read_to_string(&instances) {
                Ok(t) => t,
                Err(e) => return fail(format!("{instances}: {e}")),
            };
            match parse_instances(&text) {
                Ok(list) => run_reports(list, run),
                Err(e) => fail(e),
            }
        }
        Command::Suite { name, run } => match builtin_suite(&name) {
            Ok(list) => run_reports(list, run),
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
        Command::List { what } => {
            match what.as_str() {
                "suites" => {
                    for s in csint::engine::SUITE_NAMES {
                        println!("{s}");
                    }
                }
                "presets" => {
                    for p in CoherentStateFamily::PRESET_NAMES {
                        println!("{p}");
                    }
                }
                "cases" => {
                    for c in csint::hypergeom::CASE_IDS {
                        println!("{c}");
                    }
                }
                other => {
                    eprintln!("error: unknown list target `{other}` (suites, presets, cases)");
                    return ExitCode::from(2);
                }
            }
            ExitCode::SUCCESS
        }
    }
}
